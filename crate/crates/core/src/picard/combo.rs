use std::fmt;
use std::ops::{Add, Index, IndexMut};

use super::class::DivisorClass;
use super::generator;
use super::label::CurveLabel;
use crate::error::Result;

/// Integer combination of the twelve generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GenCombo(pub [i64; 12]);

impl GenCombo {
    pub fn new() -> Self {
        GenCombo::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (CurveLabel, i64)>>(terms: I) -> Self {
        let mut c = GenCombo::default();
        for (l, k) in terms {
            c[l] += k;
        }
        c
    }

    pub fn single(label: CurveLabel) -> Self {
        Self::from_terms([(label, 1)])
    }

    pub fn with(mut self, label: CurveLabel, k: i64) -> Self {
        self[label] += k;
        self
    }

    /// Nonnegative combinations are manifestly effective.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&z| z >= 0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&z| z == 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (CurveLabel, i64)> + '_ {
        CurveLabel::ALL.iter().map(|&l| (l, self[l])).filter(|&(_, k)| k != 0)
    }

    /// `sum z_i Z_i` as a class.
    pub fn to_class(&self) -> Result<DivisorClass> {
        CurveLabel::ALL
            .iter()
            .try_fold(DivisorClass::ZERO, |acc, &l| acc.checked_add(&generator(l).checked_mul(self[l])?))
    }

    pub(crate) fn fmt_in_order(&self, order: &[CurveLabel], f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for &l in order {
            let k = self[l];
            if k == 0 {
                continue;
            }
            if k < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if k.abs() != 1 {
                write!(f, "{}*", k.abs())?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Index<CurveLabel> for GenCombo {
    type Output = i64;
    fn index(&self, l: CurveLabel) -> &i64 {
        &self.0[l.ordinal()]
    }
}

impl IndexMut<CurveLabel> for GenCombo {
    fn index_mut(&mut self, l: CurveLabel) -> &mut i64 {
        &mut self.0[l.ordinal()]
    }
}

impl Add for GenCombo {
    type Output = GenCombo;
    fn add(mut self, rhs: GenCombo) -> GenCombo {
        for i in 0..12 {
            self.0[i] = self.0[i].checked_add(rhs.0[i]).expect("combo overflow");
        }
        self
    }
}

/// Letter-major order, e.g. `A0+2*B3-C1`.
impl fmt::Display for GenCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in_order(&CurveLabel::ALL, f)
    }
}

impl fmt::Debug for GenCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
