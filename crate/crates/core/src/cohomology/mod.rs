//! `h^0, h^1, h^2` of line bundles.
//!
//! `h^0` is computed by trimming to a reduced form and then either applying
//! Kawamata-Viehweg vanishing, peeling off an `A0` from a nef class with a
//! zero slot, or reading off a closed formula for one of the base families.
//! `h^2` is `h^0(K - D)` and `h^1` follows from Riemann-Roch.

mod family;

use std::fmt;

use serde::Serialize;

pub use family::{
    classify_reduced, classify_with, h0_base_case, h0_k_twist, is_flexible, tau_matches, Family, FamilyKind,
};

use crate::effectivity::{e_full, is_effective, reduce, Reduction, TrimReason, TrimStep};
use crate::error::{Error, Result};
use crate::picard::{canonical_class, generator, CurveLabel, DivisorClass, Symmetry};

pub(crate) fn ser_display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// One step of the `h^0` computation.
///
/// A trace holds the chain for `D`, a [`BranchStep::DualitySwap`], then the
/// chain for `K - D`. Each chain ends in a terminal step.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum BranchStep {
    /// Switch to `K - D` for `h^2`.
    DualitySwap {
        #[serde(serialize_with = "ser_display")]
        dual: DivisorClass,
    },
    /// Terminal: contributes 0.
    NotEffective {
        #[serde(serialize_with = "ser_display")]
        class: DivisorClass,
    },
    Trim {
        #[serde(serialize_with = "crate::effectivity::ser_label")]
        label: CurveLabel,
        reason: TrimReason,
    },
    /// Terminal: ample with `(D-K)^2 > 0`, so `h^0 = chi`.
    KvVanishing {
        #[serde(serialize_with = "ser_display")]
        form: DivisorClass,
        chi: i64,
    },
    /// Ample with `(D-K)^2 = 0`; a base case follows.
    AmpleBoundary {
        #[serde(serialize_with = "ser_display")]
        form: DivisorClass,
    },
    /// Nef, not ample, 64-effective, `d >= 9`: `h^0(D) = h^0(g.D - A0) + 1`,
    /// where `g` moves the first zero slot onto `A0`.
    NefReduce {
        #[serde(serialize_with = "ser_display")]
        form: DivisorClass,
        #[serde(serialize_with = "ser_display")]
        symmetry: Symmetry,
        #[serde(serialize_with = "crate::effectivity::ser_label")]
        zero_slot: CurveLabel,
    },
    /// Terminal: closed formula for a family.
    BaseCase {
        kind: FamilyKind,
        ell: i64,
        #[serde(serialize_with = "ser_display")]
        tau: crate::picard::Torsion,
        #[serde(serialize_with = "ser_display")]
        symmetry: Symmetry,
        h0: i64,
    },
}

impl BranchStep {
    fn base(f: &Family, h0: i64) -> Self {
        BranchStep::BaseCase { kind: f.kind, ell: f.ell, tau: f.tau, symmetry: f.symmetry, h0 }
    }
}

impl From<TrimStep> for BranchStep {
    fn from(t: TrimStep) -> Self {
        BranchStep::Trim { label: t.label, reason: t.reason }
    }
}

impl fmt::Display for BranchStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchStep::DualitySwap { dual } => write!(f, "dual K-D = {dual}"),
            BranchStep::NotEffective { class } => write!(f, "not effective: {class}"),
            BranchStep::Trim { label, reason } => {
                let why = match reason {
                    TrimReason::NegativeDegree => "negative degree",
                    TrimReason::ZeroDegreeNonzeroTorsion => "degree 0, nonzero torsion",
                };
                write!(f, "trim {label} ({why})")
            }
            BranchStep::KvVanishing { form, chi } => write!(f, "vanishing on {form}: h0 = chi = {chi}"),
            BranchStep::AmpleBoundary { form } => write!(f, "ample with (D-K)^2 = 0: {form}"),
            BranchStep::NefReduce { form, symmetry, zero_slot } => {
                write!(f, "nef, zero on {zero_slot}: {form}, apply {symmetry}, subtract A0, +1")
            }
            BranchStep::BaseCase { kind, ell, tau, symmetry, h0 } => {
                write!(f, "family {kind} l={ell} tau={tau} via {symmetry}: h0 = {h0}")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CohResult {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
    pub trace: Vec<BranchStep>,
}

impl CohResult {
    pub fn chi(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64
    }

    pub fn is_trivial(&self) -> bool {
        self.h0 == 0 && self.h1 == 0 && self.h2 == 0
    }

    /// Recomputes `(h^0, h^2)` from the trace alone.
    pub fn replay(&self) -> Option<(i64, i64)> {
        let split = self.trace.iter().position(|s| matches!(s, BranchStep::DualitySwap { .. }))?;
        Some((replay_chain(&self.trace[..split])?, replay_chain(&self.trace[split + 1..])?))
    }
}

fn replay_chain(steps: &[BranchStep]) -> Option<i64> {
    let increments = steps.iter().filter(|s| matches!(s, BranchStep::NefReduce { .. })).count() as i64;
    let terminal = match steps.last()? {
        BranchStep::NotEffective { .. } => 0,
        BranchStep::KvVanishing { chi, .. } => *chi,
        BranchStep::BaseCase { h0, .. } => *h0,
        _ => return None,
    };
    Some(increments + terminal)
}

impl BranchStep {
    /// Trims, peels and boundary normalizations; the rest are markers and terminals.
    pub fn is_work(&self) -> bool {
        matches!(self, BranchStep::Trim { .. } | BranchStep::NefReduce { .. } | BranchStep::AmpleBoundary { .. })
    }
}

struct Tracer {
    steps: Vec<BranchStep>,
    work: usize,
    budget: usize,
}

impl Tracer {
    fn new(budget: usize) -> Self {
        Tracer { steps: Vec::new(), work: 0, budget }
    }

    fn push(&mut self, s: BranchStep) -> Result<()> {
        if s.is_work() {
            if self.work >= self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            self.work += 1;
        }
        self.steps.push(s);
        Ok(())
    }
}

/// `h^0(D)` by the trim / vanish / peel / base-case loop.
fn h0_chain(d: &DivisorClass, t: &mut Tracer) -> Result<i64> {
    let mut acc: i64 = 0;
    let mut cur = *d;
    loop {
        let form = match reduce(&cur)? {
            Reduction::Reduced { form, steps } => {
                for s in steps {
                    t.push(s.into())?;
                }
                form
            }
            Reduction::NotEffective { last, steps } => {
                for s in steps {
                    t.push(s.into())?;
                }
                t.push(BranchStep::NotEffective { class: last })?;
                return Ok(acc);
            }
        };
        if form.is_zero() {
            let f = Family {
                kind: FamilyKind::ZeroClass,
                ell: 0,
                tau: crate::picard::Torsion::ZERO,
                symmetry: Symmetry::IDENTITY,
            };
            t.push(BranchStep::base(&f, 1))?;
            return Ok(acc + 1);
        }
        if is_effective(&form)?.is_none() {
            t.push(BranchStep::NotEffective { class: form })?;
            return Ok(acc);
        }
        let kinds: &[FamilyKind] = if e_full(&form.num_class())?.holds {
            if form.is_ample() {
                let dk =
                    form.checked_sub(&canonical_class())?.checked_intersect(&form.checked_sub(&canonical_class())?)?;
                if dk > 0 {
                    let chi = form.chi();
                    t.push(BranchStep::KvVanishing { form, chi })?;
                    return Ok(acc + chi);
                }
                if dk < 0 {
                    return Err(Error::InternalInconsistency(format!("ample 64-effective {form} with (D-K)^2 < 0")));
                }
                t.push(BranchStep::AmpleBoundary { form })?;
                &FamilyKind::AMPLE_BOUNDARY
            } else if form.d() >= 9 {
                let slot = form
                    .first_zero_slot()
                    .ok_or_else(|| Error::InternalInconsistency(format!("nef non-ample {form} has no zero slot")))?;
                let g = Symmetry::ALL.into_iter().find(|g| g.source_slot(0) == slot).expect("group acts transitively");
                t.push(BranchStep::NefReduce { form, symmetry: g, zero_slot: CurveLabel::from_slot(slot) })?;
                cur = g.apply(&form).checked_sub(&generator(CurveLabel::A0))?;
                acc += 1;
                continue;
            } else {
                &FamilyKind::SMALL_D
            }
        } else {
            &FamilyKind::SMALL_E
        };
        let fam = classify_with(&form, kinds)?;
        let h = h0_base_case(&fam)?;
        if h < 1 {
            return Err(Error::InternalInconsistency(format!("effective {form} classified as {fam:?} with h0 = {h}")));
        }
        t.push(BranchStep::base(&fam, h))?;
        return Ok(acc + h);
    }
}

fn finish(d: &DivisorClass, h0: i64, h2: i64, trace: Vec<BranchStep>) -> Result<CohResult> {
    let h1 = h0 + h2 - d.chi();
    if h0 < 0 || h2 < 0 || h1 < 0 || (h0 > 0 && h2 > 0) {
        return Err(Error::InternalInconsistency(format!("{d}: h = ({h0}, {h1}, {h2})")));
    }
    Ok(CohResult { h0: h0 as u64, h1: h1 as u64, h2: h2 as u64, trace })
}

/// `(h^0, h^1, h^2)` of `O_X(D)` with a trace of the branches taken.
pub fn h_all(d: &DivisorClass) -> Result<CohResult> {
    h_all_with_budget(d, usize::MAX)
}

/// As [`h_all`], failing with [`Error::BudgetExceeded`] once more than
/// `max_steps` work steps (see [`BranchStep::is_work`]) are needed.
pub fn h_all_with_budget(d: &DivisorClass, max_steps: usize) -> Result<CohResult> {
    let dual = canonical_class().checked_sub(d)?;
    let mut t = Tracer::new(max_steps);
    if let Some(tau) = d.as_torsion().filter(|t| !t.is_zero()) {
        let f = Family { kind: FamilyKind::TorsionOnly, ell: 0, tau, symmetry: Symmetry::IDENTITY };
        t.push(BranchStep::base(&f, 0))?;
        t.push(BranchStep::DualitySwap { dual })?;
        let h2 = h0_k_twist(tau);
        let k = Family { kind: FamilyKind::KTwist, ell: 3, tau, symmetry: Symmetry::IDENTITY };
        t.push(BranchStep::base(&k, h2))?;
        return finish(d, 0, h2, t.steps);
    }
    let h0 = h0_chain(d, &mut t)?;
    t.push(BranchStep::DualitySwap { dual })?;
    let h2 = h0_chain(&dual, &mut t)?;
    finish(d, h0, h2, t.steps)
}

/// `h^0(D)` alone.
pub fn h0(d: &DivisorClass) -> Result<u64> {
    let mut t = Tracer::new(usize::MAX);
    Ok(h0_chain(d, &mut t)? as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::{parse, Torsion};

    fn h(s: &str) -> (u64, u64, u64) {
        let r = h_all(&parse(s).unwrap()).unwrap();
        (r.h0, r.h1, r.h2)
    }

    #[test]
    fn small_classes() {
        assert_eq!(h("0"), (1, 0, 0));
        assert_eq!(h("K"), (0, 0, 1));
        assert_eq!(h("(10 00 00)"), (0, 1, 2));
        assert_eq!(h("(10 10 10)"), (0, 0, 1));
        assert_eq!(h("A0"), (1, 1, 0));
        assert_eq!(h("2K"), (7, 0, 0));
        assert_eq!(h("-A0").0, 0);
    }

    #[test]
    fn census_of_k_twists() {
        let k = crate::picard::canonical_class();
        let total: u64 = Torsion::all().map(|t| h_all(&k.twist(t)).unwrap().h0).sum();
        assert_eq!(total, 66);
    }

    #[test]
    fn base_locus_class_keeps_h0_after_removing_a0() {
        let d = parse("A0 + B0 + K + B2 - B1").unwrap();
        assert_eq!(d.table_row(), "(8 | 0 00, 0 00, 1 10 | 2 00, 2 10, 3 00)");
        assert_eq!(h0(&d).unwrap(), 3);
        assert_eq!(h0(&(d - generator(CurveLabel::A0))).unwrap(), 3);
    }

    #[test]
    fn traces_replay() {
        for s in ["0", "K", "A0", "3A0+2B1", "5(A0+B3)-2B0+2C0", "[12;0:00,0:00,0:00]", "4K-A1"] {
            let r = h_all(&parse(s).unwrap()).unwrap();
            assert_eq!(r.replay(), Some((r.h0 as i64, r.h2 as i64)), "{s}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let d = parse("[300;0:00,0:00,0:00]").unwrap();
        assert!(matches!(h_all_with_budget(&d, 2), Err(Error::BudgetExceeded { budget: 2 })));
        assert!(h_all_with_budget(&d, 3).is_ok());
        assert_eq!(h_all_with_budget(&DivisorClass::ZERO, 1).unwrap().h0, 1);
        assert_eq!(h_all_with_budget(&canonical_class(), 10).unwrap().h2, 1);
    }
}
