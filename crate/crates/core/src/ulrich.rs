//! Cohomologically trivial line bundles and Ulrich data for a polarization.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{h_all, FamilyKind};
use crate::effectivity::e_positive;
use crate::error::{Error, Result};
use crate::picard::{canonical_class, orbit, DivisorClass, NumClass, Torsion};

/// `h^0 = h^1 = h^2 = 0`.
pub fn is_coh_trivial(d: &DivisorClass) -> Result<bool> {
    if d.chi() != 0 {
        return Ok(false);
    }
    Ok(h_all(d)?.is_trivial())
}

/// All `[d;a,b,c]` with `chi = 0`, in lexicographic order.
///
/// `chi = 0` is `(2l-3)^2 + 2 = (2a-1)^2 + (2b-1)^2 + (2c-1)^2`. Cauchy-Schwarz on
/// `(2a-1)+(2b-1)+(2c-1) = 6l-2d-3` bounds `l`, and each `|2x-1|` is at most
/// `|2l-3|+1`.
pub fn chi_zero_classes(d: i64) -> Vec<NumClass> {
    let d128 = d as i128;
    // (6l-2d-3)^2 <= 3((2l-3)^2 + 2), i.e. 24l^2 - 24dl + (2d+3)^2 - 33 <= 0.
    let admissible = |l: i128| 24 * l * l - 24 * d128 * l + (2 * d128 + 3).pow(2) - 33 <= 0;
    // The roots are d/2 +- sqrt(((d-3)^2+3)/12), inside d/2 +- (|d-3|+2)/3.
    let spread = ((d - 3).abs() + 2) / 3 + 1;
    let mut out = Vec::new();
    for l in d.div_euclid(2) - spread..=d.div_euclid(2) + spread + 1 {
        if !admissible(l as i128) {
            continue;
        }
        let r = (2 * l - 3).abs() + 1;
        let target = (2 * l - 3).pow(2) + 2;
        // |2x-1| <= r  <=>  (1-r)/2 <= x <= (1+r)/2
        let (lo, hi) = ((1 - r).div_euclid(2), (1 + r).div_euclid(2));
        for a in lo..=hi {
            for b in lo..=hi {
                let c = 3 * l - d - a - b;
                let sq = |x: i64| (2 * x - 1).pow(2);
                if sq(a) + sq(b) + sq(c) == target {
                    out.push(NumClass::new(d, a, b, c));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Default degree window `[-ceil(h/3), h+6]`, `h = H.K`.
pub fn default_window(h: &DivisorClass) -> (i64, i64) {
    let hk = h.d();
    (-(hk + 2).div_euclid(3), hk + 6)
}

fn ser_duration<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

fn ser_classes<S: serde::Serializer>(v: &[DivisorClass], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|d| d.to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    #[serde(serialize_with = "crate::cohomology::ser_display")]
    pub polarization: DivisorClass,
    pub d_lo: i64,
    pub d_hi: i64,
    /// Numerical classes with `chi = 0` inside the window.
    pub classes_scanned: usize,
    pub divisors_scanned: usize,
    /// `D` with both `D` and `D - H` cohomologically trivial, sorted.
    #[serde(serialize_with = "ser_classes")]
    pub hits: Vec<DivisorClass>,
    #[serde(serialize_with = "ser_duration")]
    pub elapsed: Duration,
    /// What completeness of the window relies on.
    pub window_basis: &'static str,
}

const WINDOW_BASIS: &str = "an ample base point free H has H.K >= 12 and a(H), b(H), c(H) >= 2; \
                            a pair (D, D-H) then has d(D) >= 7 or d(D-H) <= -1 and Serre duality reduces to d >= 7";

/// Every `D` with `d_lo <= D.K <= d_hi` such that `D` and `D - H` are both trivial.
pub fn ulrich_line_search(h: &DivisorClass, d_lo: i64, d_hi: i64) -> Result<SearchReport> {
    if d_lo > d_hi {
        return Err(Error::Precondition(format!("empty window [{d_lo}, {d_hi}]")));
    }
    let start = Instant::now();
    let cells: Vec<NumClass> = (d_lo..=d_hi).flat_map(chi_zero_classes).collect();
    let per_cell: Vec<Vec<DivisorClass>> = cells
        .par_iter()
        .map(|nc| {
            let base = nc.untwisted()?;
            let mut hits = Vec::new();
            for t in Torsion::all() {
                let d = base.twist(t);
                if is_coh_trivial(&d)? && is_coh_trivial(&d.checked_sub(h)?)? {
                    hits.push(d);
                }
            }
            Ok(hits)
        })
        .collect::<Result<_>>()?;
    let mut hits: Vec<DivisorClass> = per_cell.into_iter().flatten().collect();
    hits.sort();
    Ok(SearchReport {
        polarization: *h,
        d_lo,
        d_hi,
        classes_scanned: cells.len(),
        divisors_scanned: cells.len() * 64,
        hits,
        elapsed: start.elapsed(),
        window_basis: WINDOW_BASIS,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Rank2Check {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Rank2Report {
    #[serde(serialize_with = "crate::cohomology::ser_display")]
    pub d1: DivisorClass,
    #[serde(serialize_with = "crate::cohomology::ser_display")]
    pub d2: DivisorClass,
    pub checks: Vec<Rank2Check>,
}

impl Rank2Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// The line bundle `D1` of the rank-2 Ulrich bundle on `(X, 3K)`.
pub fn rank2_d1() -> DivisorClass {
    crate::picard::parse("[10; 0:01, 1:11, 4:01; 0:01, 1:11, 4:11]").expect("valid literal")
}

/// Checks the cohomological inputs of the Serre construction with `D2 = 4K - D1`.
/// The six points `Z` are not modeled.
pub fn verify_rank2(d1: &DivisorClass) -> Result<Rank2Report> {
    let k = canonical_class();
    let d2 = k.checked_mul(4)?.checked_sub(d1)?;
    let h = |d: &DivisorClass| -> Result<[u64; 3]> {
        let r = h_all(d)?;
        Ok([r.h0, r.h1, r.h2])
    };
    let check =
        |name, expected: String, actual: String| Rank2Check { name, pass: expected == actual, expected, actual };
    let h1 = h(d1)?;
    let h2 = h(&d2)?;
    let cb = h(&k.checked_add(&d2)?.checked_sub(d1)?)?[0];
    let e1 = h(&d1.checked_sub(&k)?)?[0];
    let e2 = h(&d2.checked_sub(&k)?)?[0];
    let checks = vec![
        check("h(D1)", format!("{:?}", [0, 0, 0]), format!("{h1:?}")),
        check("h(D2)", format!("{:?}", [6, 0, 0]), format!("{h2:?}")),
        check("h0(K+D2-D1)", "1".into(), cb.to_string()),
        check("h0(D1-K), h0(D2-K)", "(0, 0)".into(), format!("({e1}, {e2})")),
        check("chi(D2)", "6".into(), d2.chi().to_string()),
    ];
    Ok(Rank2Report { d1: *d1, d2, checks })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Section5Report {
    pub d_max: i64,
    pub chi_zero_classes: usize,
    pub trivial_divisors: usize,
    /// Cohomologically trivial divisors with `6 <= d <= d_max`.
    #[serde(serialize_with = "ser_classes")]
    pub trivial: Vec<DivisorClass>,
    pub violations: Vec<String>,
}

const TRIVIAL_FAMILIES: [FamilyKind; 3] = [FamilyKind::L00Lm1, FamilyKind::L01Lm1, FamilyKind::L0Lm1_1];

fn in_trivial_families(nc: &NumClass) -> bool {
    orbit(nc).iter().any(|n| TRIVIAL_FAMILIES.iter().any(|k| k.match_num(n).is_some()))
}

/// Sweeps `1 <= d <= d_max` checking:
/// `chi = 0` implies 1-effective; trivial with `d >= 6` implies nef;
/// trivial with `d >= 7` lies in `[2l+1;0,0,l-1]`, `[2l;0,1,l-1]` or `[2l;0,l-1,1]` up to symmetry.
pub fn verify_section5_properties(d_max: i64) -> Result<Section5Report> {
    if d_max < 7 {
        return Err(Error::Precondition(format!("d_max = {d_max} < 7")));
    }
    let mut rep = Section5Report { d_max, ..Default::default() };
    for d in 1..=d_max {
        let classes = chi_zero_classes(d);
        rep.chi_zero_classes += classes.len();
        for nc in &classes {
            if !e_positive(nc)?.holds {
                rep.violations.push(format!("{nc}: chi = 0 but e = 0"));
            }
        }
        if d < 6 {
            continue;
        }
        let found: Vec<Vec<DivisorClass>> = classes
            .par_iter()
            .map(|nc| {
                let base = nc.untwisted()?;
                Torsion::all()
                    .map(|t| base.twist(t))
                    .filter_map(|x| is_coh_trivial(&x).map(|t| t.then_some(x)).transpose())
                    .collect()
            })
            .collect::<Result<_>>()?;
        for x in found.into_iter().flatten() {
            if !x.is_nef() {
                rep.violations.push(format!("{x}: trivial, d >= 6, not nef"));
            }
            if d >= 7 && !in_trivial_families(&x.num_class()) {
                rep.violations.push(format!("{x}: trivial, d >= 7, outside the three families"));
            }
            rep.trivial.push(x);
        }
    }
    rep.trivial.sort();
    rep.trivial_divisors = rep.trivial.len();
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::parse;

    fn brute_chi_zero(d: i64) -> Vec<NumClass> {
        let mut v = Vec::new();
        for a in -60..=60 {
            for b in -60..=60 {
                for c in -60..=60 {
                    let n = NumClass::new(d, a, b, c);
                    if n.chi() == Some(0) {
                        v.push(n);
                    }
                }
            }
        }
        v
    }

    #[test]
    fn chi_zero_matches_brute_force() {
        for d in [-6, -1, 0, 1, 2, 7, 10, 15] {
            assert_eq!(chi_zero_classes(d), brute_chi_zero(d), "d={d}");
        }
        assert!(chi_zero_classes(1).contains(&NumClass::new(1, -1, 0, 0)));
        assert!(chi_zero_classes(10).contains(&NumClass::new(10, 0, 1, 4)));
    }

    #[test]
    fn triviality() {
        assert!(is_coh_trivial(&rank2_d1()).unwrap());
        assert!(!is_coh_trivial(&canonical_class()).unwrap());
        assert!(!is_coh_trivial(&parse("A0").unwrap()).unwrap());
    }

    #[test]
    fn rank2_data() {
        let r = verify_rank2(&rank2_d1()).unwrap();
        assert!(r.pass(), "{r:?}");
        assert_eq!(r.d1.num_class(), NumClass::new(10, 0, 1, 4));
        assert!(!verify_rank2(&canonical_class()).unwrap().checks[0].pass);
        let swapped = verify_rank2(&r.d2).unwrap();
        assert!(!swapped.checks[0].pass);
    }

    #[test]
    fn windows() {
        assert_eq!(default_window(&canonical_class().times(3)), (-6, 24));
        assert!(matches!(verify_section5_properties(6), Err(Error::Precondition(_))));
    }
}
