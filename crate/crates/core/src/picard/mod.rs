//! Pic X in symmetric coordinates.

mod bits;
mod class;
mod combo;
mod label;
mod parse;
mod symmetry;

pub use bits::{Bit2, Torsion};
pub use class::{DivisorClass, NumClass, Slot};
pub use combo::GenCombo;
pub use label::{CurveLabel, Letter};
pub use parse::{parse, parse_torsion};
pub use symmetry::{orbit, Symmetry};

use crate::error::Result;

const fn s(deg: i64, bits: u8) -> Slot {
    Slot::new(deg, Bit2::from_u8(bits))
}

const fn row(d: i64, slots: [Slot; 6]) -> DivisorClass {
    DivisorClass::from_raw(d, slots)
}

/// Generator rows in [`CurveLabel::ALL`] order, slots `A0 B0 C0 | A3 B3 C3`.
const GENERATORS: [DivisorClass; 12] = [
    // A0..A3
    row(1, [s(-1, 0b00), s(0, 0b00), s(0, 0b00), s(0, 0b00), s(1, 0b10), s(1, 0b00)]),
    row(2, [s(0, 0b00), s(1, 0b01), s(0, 0b00), s(0, 0b00), s(1, 0b11), s(0, 0b00)]),
    row(2, [s(0, 0b00), s(1, 0b11), s(0, 0b00), s(0, 0b00), s(1, 0b01), s(0, 0b00)]),
    row(1, [s(0, 0b00), s(1, 0b10), s(1, 0b00), s(-1, 0b00), s(0, 0b00), s(0, 0b00)]),
    // B0..B3
    row(1, [s(0, 0b00), s(-1, 0b00), s(0, 0b00), s(1, 0b00), s(0, 0b00), s(1, 0b10)]),
    row(2, [s(0, 0b00), s(0, 0b00), s(1, 0b01), s(0, 0b00), s(0, 0b00), s(1, 0b11)]),
    row(2, [s(0, 0b00), s(0, 0b00), s(1, 0b11), s(0, 0b00), s(0, 0b00), s(1, 0b01)]),
    row(1, [s(1, 0b00), s(0, 0b00), s(1, 0b10), s(0, 0b00), s(-1, 0b00), s(0, 0b00)]),
    // C0..C3
    row(1, [s(0, 0b00), s(0, 0b00), s(-1, 0b00), s(1, 0b10), s(1, 0b00), s(0, 0b00)]),
    row(2, [s(1, 0b01), s(0, 0b00), s(0, 0b00), s(1, 0b11), s(0, 0b00), s(0, 0b00)]),
    row(2, [s(1, 0b11), s(0, 0b00), s(0, 0b00), s(1, 0b01), s(0, 0b00), s(0, 0b00)]),
    row(1, [s(1, 0b10), s(1, 0b00), s(0, 0b00), s(0, 0b00), s(0, 0b00), s(-1, 0b00)]),
];

const CANONICAL: DivisorClass = row(6, [s(1, 0); 6]);

/// The class of the generator curve `label`.
pub fn generator(label: CurveLabel) -> DivisorClass {
    GENERATORS[label.ordinal()]
}

/// `K_X`.
pub fn canonical_class() -> DivisorClass {
    CANONICAL
}

/// `sum z_i Z_i`.
pub fn from_generators(combo: &GenCombo) -> Result<DivisorClass> {
    combo.to_class()
}

pub fn enumerate_torsions() -> Vec<Torsion> {
    Torsion::all().collect()
}

/// `E - D` when it is numerically trivial.
pub fn torsion_between(d: &DivisorClass, e: &DivisorClass) -> Option<Torsion> {
    e.checked_sub(d).ok()?.as_torsion()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_satisfy_the_starred_rule() {
        for l in CurveLabel::ALL {
            let g = generator(l);
            assert_eq!(DivisorClass::from_full(g.d(), *g.slots()).unwrap(), g, "{l}");
        }
        let k = canonical_class();
        assert_eq!(DivisorClass::from_full(6, *k.slots()).unwrap(), k);
    }

    #[test]
    fn symmetry_permutes_rows() {
        for g in Symmetry::ALL {
            for l in CurveLabel::ALL {
                assert_eq!(g.apply(&generator(l)), generator(g.apply_label(l)), "{g} {l}");
            }
            assert_eq!(g.apply(&canonical_class()), canonical_class());
        }
    }

    #[test]
    fn linear_equivalences() {
        use CurveLabel as L;
        let g = generator;
        assert_eq!(g(L::A1).times(2), (g(L::C0) + g(L::A3)).times(2));
        assert_eq!(g(L::A1).times(2), g(L::A2).times(2));
        assert_eq!(g(L::A1).times(2), (g(L::C3) + g(L::A0)).times(2));
        assert_eq!(g(L::A0) + g(L::B3) + g(L::A1) + g(L::B2), g(L::B0) + g(L::A3) + g(L::A2) + g(L::B1));
        assert_eq!(g(L::B1).times(2), (g(L::A0) + g(L::B3)).times(2));
        assert_eq!(g(L::B1).times(2), (g(L::B0) + g(L::A3)).times(2));
        assert_eq!(g(L::C1).times(2), (g(L::B0) + g(L::C3)).times(2));
        let hexagon: DivisorClass = CurveLabel::ELLIPTIC.iter().map(|&l| g(l)).sum();
        assert_eq!(torsion_between(&canonical_class(), &hexagon), Some(Torsion::from_bits(0b10, 0b10, 0b10)));
    }

    #[test]
    fn torsion_between_pencil_members() {
        use CurveLabel as L;
        let g = generator;
        let t = torsion_between(&(g(L::A1) + g(L::A2)), &g(L::A1).times(2)).unwrap();
        assert!(!t.is_zero());
        assert_eq!(torsion_between(&g(L::A1).times(2), &(g(L::C0) + g(L::A3)).times(2)), Some(Torsion::ZERO));
        assert_eq!(torsion_between(&g(L::A0), &g(L::A3)), None);
        assert_eq!(enumerate_torsions().len(), 64);
    }
}
