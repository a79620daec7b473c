//! Effectiveness test, e-numbers and trimming to reduced forms.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::picard::{generator, Bit2, CurveLabel, DivisorClass, GenCombo, Letter, NumClass, Torsion};

/// Coefficients `(a0, b0, c0, a3, b3, c3)` of a torsion-free effective class.
pub type Step1Solution = [i64; 6];

fn floor_even(x: i64) -> i64 {
    x - x.rem_euclid(2)
}

fn ceil_even(x: i64) -> i64 {
    x + x.rem_euclid(2)
}

/// Solves `d = a0+b0+c0+a3+b3+c3`, `a = b3+c3-a0`, `b = c3+a3-b0`, `c = a3+b3-c0`
/// over nonnegative integers with `a3, b3, c3` even.
///
/// Returns the solution with lexicographically smallest `(b3, c3)`.
pub fn step1_solve(nc: &NumClass) -> Result<Option<Step1Solution>> {
    let ell = nc.ell_or_err()?;
    let NumClass { a, b, c, .. } = *nc;
    // a3 = ell - b3 - c3 with b3, c3 and a3 all even forces ell even.
    if ell.rem_euclid(2) != 0 {
        return Ok(None);
    }
    let (Some(lb), Some(lc)) = (ell.checked_sub(b), ell.checked_sub(c)) else {
        return Ok(None);
    };
    if lb < 0 || lc < 0 {
        return Ok(None);
    }
    let (bmax, cmax) = (floor_even(lb), floor_even(lc));
    // s = b3 + c3 must be even, at least max(a, 0), at most ell and bmax + cmax.
    let s = ceil_even(a.max(0));
    if s > ell || s > bmax.saturating_add(cmax) {
        return Ok(None);
    }
    let b3 = (s - cmax).max(0);
    let c3 = s - b3;
    Ok(Some([b3 + c3 - a, ell - b3 - b, ell - c3 - c, ell - b3 - c3, b3, c3]))
}

fn step1_combo(sol: &Step1Solution) -> GenCombo {
    GenCombo::from_terms(CurveLabel::ELLIPTIC.iter().copied().zip(sol.iter().copied()))
}

/// The eight subtraction candidates that clear the torsion part `tau`.
///
/// The `A0[2]` bits decide the C-curves, `B0[2]` the A-curves and `C0[2]` the
/// B-curves. C varies slowest, B fastest, short option first.
pub fn torsion_candidates(tau: Torsion) -> [GenCombo; 8] {
    // (slot of the torsion, letter whose curves clear it)
    let options = |bits: Bit2, letter: Letter| -> [GenCombo; 2] {
        let z = |i: u8| CurveLabel::new(letter, i);
        let combo = |ix: &[u8]| GenCombo::from_terms(ix.iter().map(|&i| (z(i), 1)));
        match bits.bits() {
            0b00 => [combo(&[]), combo(&[1, 2, 3])],
            0b01 => [combo(&[1]), combo(&[2, 3])],
            0b11 => [combo(&[2]), combo(&[1, 3])],
            _ => [combo(&[3]), combo(&[1, 2])],
        }
    };
    let [alpha, beta, gamma] = tau.0;
    let cs = options(alpha, Letter::C);
    let as_ = options(beta, Letter::A);
    let bs = options(gamma, Letter::B);
    let mut out = [GenCombo::default(); 8];
    let mut k = 0;
    for c in &cs {
        for a in &as_ {
            for b in &bs {
                out[k] = *c + *a + *b;
                k += 1;
            }
        }
    }
    out
}

/// A nonnegative combination of generators equal to the tested class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EffWitness {
    /// Torsion-free part found by the Step-1 solve.
    pub step1: GenCombo,
    /// Torsion-clearing candidate.
    pub candidate: GenCombo,
}

impl EffWitness {
    pub fn combo(&self) -> GenCombo {
        self.step1 + self.candidate
    }
}

const CANDIDATE_ORDER: [CurveLabel; 12] = [
    CurveLabel::C1,
    CurveLabel::C2,
    CurveLabel::C3,
    CurveLabel::A1,
    CurveLabel::A2,
    CurveLabel::A3,
    CurveLabel::B1,
    CurveLabel::B2,
    CurveLabel::B3,
    CurveLabel::A0,
    CurveLabel::B0,
    CurveLabel::C0,
];

/// Step-1 part in slot order, then the candidate; e.g. `A0+C3+A1+B1+B3`.
impl fmt::Display for EffWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.step1.is_empty(), self.candidate.is_empty()) {
            (true, true) => f.write_str("0"),
            (false, true) => self.step1.fmt_in_order(&CurveLabel::ELLIPTIC, f),
            (true, false) => self.candidate.fmt_in_order(&CANDIDATE_ORDER, f),
            (false, false) => {
                self.step1.fmt_in_order(&CurveLabel::ELLIPTIC, f)?;
                f.write_str("+")?;
                self.candidate.fmt_in_order(&CANDIDATE_ORDER, f)
            }
        }
    }
}

impl Serialize for EffWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("combo", &self.to_string())?;
        let coeffs: Vec<(String, i64)> = self.combo().terms().map(|(l, k)| (l.to_string(), k)).collect();
        m.serialize_entry("coefficients", &coeffs)?;
        m.end()
    }
}

/// Effectiveness test. `Ok(None)` means `D` is not effective.
pub fn is_effective(d: &DivisorClass) -> Result<Option<EffWitness>> {
    if d.is_zero() {
        return Ok(Some(EffWitness { step1: GenCombo::default(), candidate: GenCombo::default() }));
    }
    // Every generator has positive degree against K.
    if d.d() <= 0 {
        return Ok(None);
    }
    for cand in torsion_candidates(d.torsion_bits()) {
        let rest = d.checked_sub(&cand.to_class()?)?;
        debug_assert!(rest.torsion_bits().is_zero());
        if let Some(sol) = step1_solve(&rest.num_class())? {
            return Ok(Some(EffWitness { step1: step1_combo(&sol), candidate: cand }));
        }
    }
    Ok(None)
}

/// Number of effective classes among the 64 torsion twists of `nc`, by brute force.
pub fn e_number(nc: &NumClass) -> Result<u32> {
    let base = nc.untwisted()?;
    let mut n = 0;
    for t in Torsion::all() {
        if is_effective(&base.twist(t))?.is_some() {
            n += 1;
        }
    }
    Ok(n)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    /// Outside the hypothesis `d > 0` of the closed form; answered by [`e_number`].
    BruteForce,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Criterion {
    pub holds: bool,
    pub method: Method,
}

fn m_ell(nc: &NumClass) -> Option<(i64, i64)> {
    Some((nc.max_abc().max(0), nc.ell()?))
}

/// `e([D]) >= 1`, via `M <= l <= d` when `d > 0`.
pub fn e_positive(nc: &NumClass) -> Result<Criterion> {
    let Some((m, ell)) = m_ell(nc) else {
        return Ok(Criterion { holds: false, method: Method::ClosedForm });
    };
    if nc.d > 0 {
        return Ok(Criterion { holds: m <= ell && ell <= nc.d, method: Method::ClosedForm });
    }
    Ok(Criterion { holds: e_number(nc)? >= 1, method: Method::BruteForce })
}

/// `e([D]) = 64`, via `d >= 7` and `max(3, M+2) <= l <= d-3` when `d > 0`.
pub fn e_full(nc: &NumClass) -> Result<Criterion> {
    let Some((m, ell)) = m_ell(nc) else {
        return Ok(Criterion { holds: false, method: Method::ClosedForm });
    };
    if nc.d > 0 {
        let holds = nc.d >= 7 && (m + 2).max(3) <= ell && ell <= nc.d - 3;
        return Ok(Criterion { holds, method: Method::ClosedForm });
    }
    Ok(Criterion { holds: e_number(nc)? == 64, method: Method::BruteForce })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrimReason {
    NegativeDegree,
    ZeroDegreeNonzeroTorsion,
}

/// One subtraction `D -> D - Z` that leaves `h^0` unchanged.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct TrimStep {
    #[serde(serialize_with = "ser_label")]
    pub label: CurveLabel,
    pub reason: TrimReason,
}

pub(crate) fn ser_label<S: serde::Serializer>(l: &CurveLabel, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(l)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Reduction {
    /// A reduced form (or the zero class). It need not be effective.
    Reduced { form: DivisorClass, steps: Vec<TrimStep> },
    /// Trimming drove `d` to zero or below on a nonzero class.
    NotEffective { last: DivisorClass, steps: Vec<TrimStep> },
}

impl Reduction {
    pub fn steps(&self) -> &[TrimStep] {
        match self {
            Reduction::Reduced { steps, .. } | Reduction::NotEffective { steps, .. } => steps,
        }
    }
}

/// The first trimmable elliptic slot, if any.
pub fn trim_target(d: &DivisorClass) -> Option<TrimStep> {
    d.slots().iter().enumerate().find_map(|(i, s)| {
        let reason = if s.deg < 0 {
            TrimReason::NegativeDegree
        } else if s.deg == 0 && !s.tor.is_zero() {
            TrimReason::ZeroDegreeNonzeroTorsion
        } else {
            return None;
        };
        Some(TrimStep { label: CurveLabel::from_slot(i), reason })
    })
}

/// Trims `d` until it is of reduced form.
pub fn reduce(d: &DivisorClass) -> Result<Reduction> {
    let mut cur = *d;
    let mut steps = Vec::new();
    loop {
        if cur.is_zero() {
            return Ok(Reduction::Reduced { form: cur, steps });
        }
        if cur.d() <= 0 {
            return Ok(Reduction::NotEffective { last: cur, steps });
        }
        match trim_target(&cur) {
            Some(step) => {
                cur = cur.checked_sub(&generator(step.label))?;
                steps.push(step);
            }
            None => return Ok(Reduction::Reduced { form: cur, steps }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::{canonical_class, parse};

    fn brute_step1(nc: &NumClass) -> Option<Step1Solution> {
        let ell = nc.ell()?;
        let NumClass { a, b, c, .. } = *nc;
        let mut b3 = 0;
        while b3 <= ell - b {
            let mut c3 = 0;
            while c3 <= ell - c {
                let sol = [b3 + c3 - a, ell - b3 - b, ell - c3 - c, ell - b3 - c3, b3, c3];
                if sol.iter().all(|&z| z >= 0) && sol[3] % 2 == 0 {
                    return Some(sol);
                }
                c3 += 2;
            }
            b3 += 2;
        }
        None
    }

    #[test]
    fn step1_closed_form_matches_search() {
        for d in -3..=24 {
            for a in -6..=8 {
                for b in -6..=8 {
                    for c in -6..=8 {
                        let nc = NumClass::new(d, a, b, c);
                        if nc.ell().is_none() {
                            continue;
                        }
                        assert_eq!(step1_solve(&nc).unwrap(), brute_step1(&nc), "{nc}");
                    }
                }
            }
        }
    }

    #[test]
    fn step1_examples() {
        assert_eq!(step1_solve(&NumClass::new(2, 0, 0, 1)).unwrap(), None);
        assert_eq!(step1_solve(&NumClass::new(1, -1, 0, 0)).unwrap(), Some([1, 0, 0, 0, 0, 0]));
        assert_eq!(step1_solve(&NumClass::new(6, 1, 1, 1)).unwrap(), None);
        assert_eq!(step1_solve(&NumClass::new(3, 0, 0, 0)).unwrap(), None);
        assert!(step1_solve(&NumClass::new(1, 0, 0, 0)).is_err());
    }

    #[test]
    fn candidates_clear_torsion() {
        for t in Torsion::all() {
            let cands = torsion_candidates(t);
            for c in cands {
                assert_eq!(c.to_class().unwrap().torsion_bits(), t);
            }
        }
        assert!(torsion_candidates(Torsion::ZERO)[0].is_empty());
        let ex = torsion_candidates(Torsion::from_bits(0b10, 0b01, 0b11));
        let c3a1b2 = GenCombo::from_terms([(CurveLabel::C3, 1), (CurveLabel::A1, 1), (CurveLabel::B2, 1)]);
        assert_eq!(ex[0], c3a1b2);
        assert_eq!(ex[1], c3a1b2.with(CurveLabel::B2, -1).with(CurveLabel::B1, 1).with(CurveLabel::B3, 1));
    }

    #[test]
    fn worked_example() {
        let d = parse("[7; 1:10, 2:01, 2:11]").unwrap();
        let w = is_effective(&d).unwrap().unwrap();
        assert_eq!(w.to_string(), "A0+C3+A1+B1+B3");
        assert_eq!(w.combo().to_class().unwrap(), d);
        assert!(is_effective(&canonical_class()).unwrap().is_none());
        assert_eq!(is_effective(&DivisorClass::ZERO).unwrap().unwrap().to_string(), "0");
    }

    #[test]
    fn e_numbers() {
        assert_eq!(e_number(&NumClass::new(6, 1, 1, 1)).unwrap(), 63);
        assert_eq!(e_number(&NumClass::new(1, -1, 0, 0)).unwrap(), 1);
        assert_eq!(e_number(&NumClass::new(7, 0, 1, 1)).unwrap(), 64);
        assert!(e_full(&NumClass::new(7, 0, 1, 1)).unwrap().holds);
        let k = NumClass::new(6, 1, 1, 1);
        assert!(e_positive(&k).unwrap().holds);
        assert!(!e_full(&k).unwrap().holds);
        assert!(e_positive(&NumClass::new(3, 0, 0, 0)).unwrap().holds);
        let neg = e_positive(&NumClass::new(-3, 0, 0, 0)).unwrap();
        assert_eq!((neg.holds, neg.method), (false, Method::BruteForce));
    }

    #[test]
    fn reduce_examples() {
        let r = reduce(&parse("A0 + 2B3 + C0").unwrap()).unwrap();
        assert!(matches!(r, Reduction::Reduced { form, .. } if form.is_zero()));
        let r = reduce(&parse("A0 + 2A3 + B0 + B3 + C0").unwrap()).unwrap();
        assert!(matches!(r, Reduction::Reduced { form, .. } if form.is_zero()));
        let six = parse("2(A0 + C3 + B0)").unwrap();
        assert_eq!(reduce(&six).unwrap(), Reduction::Reduced { form: six, steps: vec![] });
        let r = reduce(&parse("-A0").unwrap()).unwrap();
        assert!(matches!(r, Reduction::NotEffective { .. }));
    }
}
