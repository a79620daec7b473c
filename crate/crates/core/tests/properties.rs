use burniat::cohomology::h_all;
use burniat::effectivity::is_effective;
use burniat::{canonical_class, generator, parse, CurveLabel, DivisorClass, GenCombo, Symmetry, Torsion};
use proptest::prelude::*;

fn class(coeffs: &[i64], tau: u8) -> DivisorClass {
    let combo = GenCombo::from_terms(CurveLabel::ALL.iter().copied().zip(coeffs.iter().copied()));
    combo.to_class().unwrap().twist(Torsion::from_index(tau))
}

fn divisor(r: i64) -> impl Strategy<Value = DivisorClass> {
    (prop::collection::vec(-r..=r, 12), 0u8..64).prop_map(|(c, t)| class(&c, t))
}

fn triple(d: &DivisorClass) -> [u64; 3] {
    let h = h_all(d).unwrap();
    [h.h0, h.h1, h.h2]
}

/// `h^0(Z, L)` for `deg L = n` on a curve of genus 1 or 2.
fn curve_bound(n: i64, genus: i64) -> u64 {
    match (n, genus) {
        (n, _) if n < 0 => 0,
        (0, _) => 1,
        (n, 1) => n as u64,
        (n, _) => (n + 1) as u64,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_law(x in divisor(6), y in divisor(6), z in divisor(6)) {
        prop_assert_eq!(x + y, y + x);
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!(x.checked_add(&y).unwrap().checked_sub(&y).unwrap(), x);
        prop_assert_eq!(x.times(2), x + x);
        prop_assert_eq!((x + y).intersect(&z), x.intersect(&z) + y.intersect(&z));
    }

    #[test]
    fn parse_round_trip(x in divisor(8)) {
        prop_assert_eq!(parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn serre_duality(x in divisor(4)) {
        let [a, b, c] = triple(&x);
        prop_assert_eq!(triple(&canonical_class().checked_sub(&x).unwrap()), [c, b, a]);
    }

    #[test]
    fn symmetry_invariance(x in divisor(4), g in 0usize..6) {
        let g = Symmetry::ALL[g];
        let y = g.apply(&x);
        prop_assert_eq!(y.chi(), x.chi());
        prop_assert_eq!(triple(&y), triple(&x));
    }

    #[test]
    fn euler_characteristic_and_replay(x in divisor(5)) {
        let h = h_all(&x).unwrap();
        prop_assert_eq!(h.chi(), x.chi());
        prop_assert_eq!(h.replay(), Some((h.h0 as i64, h.h2 as i64)));
        prop_assert!(h.h0 == 0 || h.h2 == 0);
    }

    #[test]
    fn monotone_and_restriction_bound(x in divisor(4), l in 0usize..12) {
        let label = CurveLabel::ALL[l];
        let z = generator(label);
        let (h, h_plus) = (triple(&x)[0], triple(&(x + z))[0]);
        prop_assert!(h_plus >= h);
        let genus = if label.is_elliptic() { 1 } else { 2 };
        let n = (x + z).intersect(&z);
        prop_assert!(h_plus - h <= curve_bound(n, genus), "{} + {}: {} -> {}", x, label, h, h_plus);
    }

    #[test]
    fn effectiveness_matches_h0(x in divisor(4)) {
        let w = is_effective(&x).unwrap();
        prop_assert_eq!(w.is_some(), triple(&x)[0] >= 1);
        if let Some(w) = w {
            prop_assert!(w.combo().is_nonnegative());
            prop_assert_eq!(w.combo().to_class().unwrap(), x);
        }
    }
}
