//! Reference tables, regenerated and diffed against transcribed values.

use serde::Serialize;

use crate::cohomology::{h0, is_flexible};
use crate::delpezzo;
use crate::effectivity::is_effective;
use crate::error::{Error, Result};
use crate::picard::{
    canonical_class, generator, parse, parse_torsion, CurveLabel, DivisorClass, Slot, Symmetry, Torsion,
};

pub const TABLE_NAMES: [&str; 3] = ["generators", "flexible-torsions", "reduced-621"];

/// Symmetric coordinates of the generators and `K`, one row per curve.
pub const GENERATOR_ROWS: [&str; 13] = [
    "A0  1 | -1 00   0 00   0 00 |  0 00   1 10   1 00",
    "A1  2 |  0 00   1 01   0 00 |  0 00   1 11   0 00",
    "A2  2 |  0 00   1 11   0 00 |  0 00   1 01   0 00",
    "A3  1 |  0 00   1 10   1 00 | -1 00   0 00   0 00",
    "B0  1 |  0 00  -1 00   0 00 |  1 00   0 00   1 10",
    "B1  2 |  0 00   0 00   1 01 |  0 00   0 00   1 11",
    "B2  2 |  0 00   0 00   1 11 |  0 00   0 00   1 01",
    "B3  1 |  1 00   0 00   1 10 |  0 00  -1 00   0 00",
    "C0  1 |  0 00   0 00  -1 00 |  1 10   1 00   0 00",
    "C1  2 |  1 01   0 00   0 00 |  1 11   0 00   0 00",
    "C2  2 |  1 11   0 00   0 00 |  1 01   0 00   0 00",
    "C3  1 |  1 10   1 00   0 00 |  0 00   0 00  -1 00",
    "K   6 |  1 00   1 00   1 00 |  1 00   1 00   1 00",
];

pub const FLEXIBLE: [&str; 3] = ["(10 00 00)", "(00 10 00)", "(00 00 10)"];

/// `K + tau` written as curves.
pub const K_TWIST_DECOMPOSITIONS: [(&str, &str); 4] = [
    ("K + (10 00 00)", "2(A0+B3) + C0 + C3"),
    ("K + (00 00 10)", "2(A0+C3) + B0 + B3"),
    ("K + (00 10 10)", "A1 + A2 + B0 + B3"),
    ("K + (10 10 10)", "A0 + C3 + B0 + A3 + C0 + B3"),
];

/// A table of explicit members `base + tau = member`.
pub struct MemberTable {
    pub name: &'static str,
    pub base: &'static str,
    pub rows: [(&'static str, &'static str); 8],
}

/// Reduced forms in `[6;0,2,1]`.
pub const REDUCED_621: MemberTable = MemberTable {
    name: "reduced-621",
    base: "2(C0+A3) + (A0+B3)",
    rows: [
        ("(00 00 00)", "(A0+B3) + 2A1"),
        ("(00 00 01)", "B2 + 2A1"),
        ("(00 00 11)", "B1 + 2A1"),
        ("(00 00 10)", "A1 + A2 + (A3+B0)"),
        ("(00 10 00)", "(A0+B3) + A1 + A2"),
        ("(00 10 01)", "B2 + A1 + A2"),
        ("(00 10 11)", "B1 + A1 + A2"),
        ("(00 10 10)", "2A1 + (A3+B0)"),
    ],
};

/// Members of `|4(A0+B3) - 2B0 + 2C0 + tau|` avoiding `A0`.
pub const EXCEPTIONAL_822: MemberTable = MemberTable {
    name: "[8;0,2,2]",
    base: "4(A0+B3) - 2B0 + 2C0",
    rows: [
        ("(00 00 00)", "2A2 + 2B1"),
        ("(00 00 01)", "A1 + A2 + A3 + B0 + B1"),
        ("(00 00 11)", "A1 + A2 + A3 + B0 + B2"),
        ("(00 00 10)", "B1 + B2 + 2A2"),
        ("(00 10 00)", "A1 + A2 + 2B1"),
        ("(00 10 01)", "2A2 + A3 + B0 + B1"),
        ("(00 10 11)", "2A2 + A3 + B0 + B2"),
        ("(00 10 10)", "A1 + A2 + B1 + B2"),
    ],
};

/// Members of `|5(A0+B3) - 2B0 + 2C0 + tau|` avoiding `A0`.
pub const EXCEPTIONAL_1023: MemberTable = MemberTable {
    name: "[10;0,2,3]",
    base: "5(A0+B3) - 2B0 + 2C0",
    rows: [
        ("(00 00 00)", "A1 + A2 + A3 + B0 + B1 + B2"),
        ("(00 00 01)", "3B2 + 2A2"),
        ("(00 00 11)", "B1 + 2B2 + 2A2"),
        ("(00 00 10)", "A1 + A2 + A3 + B0 + 2B1"),
        ("(00 10 00)", "2A2 + A3 + B0 + B1 + B2"),
        ("(00 10 01)", "A1 + A2 + 3B2"),
        ("(00 10 11)", "A1 + A2 + B1 + 2B2"),
        ("(00 10 10)", "2A2 + A3 + B0 + 2B1"),
    ],
};

/// Members of `|5(A0+C3) - 2C3 + 2B3 + tau|` avoiding `A0`, class `[10;0,3,2]`.
pub const EXCEPTIONAL_1032: MemberTable = MemberTable {
    name: "[10;0,3,2]",
    base: "5(A0+C3) - 2C3 + 2B3",
    rows: [
        ("(10 01 00)", "A1 + 2A2 + 2B1"),
        ("(10 01 01)", "3A2 + A3 + B0 + B1"),
        ("(10 01 11)", "3A2 + A3 + B0 + B2"),
        ("(10 01 10)", "A1 + 2A2 + B1 + B2"),
        ("(10 11 00)", "3A2 + 2B1"),
        ("(10 11 01)", "A1 + 2A2 + A3 + B0 + B1"),
        ("(10 11 11)", "A1 + 2A2 + A3 + B0 + B2"),
        ("(10 11 10)", "3A2 + B1 + B2"),
    ],
};

pub const MEMBER_TABLES: [&MemberTable; 4] = [&REDUCED_621, &EXCEPTIONAL_822, &EXCEPTIONAL_1023, &EXCEPTIONAL_1032];

/// `h^0` in `[6;0,2,1]` for odd `l = 3`: 2 on these torsions, 1 on the rest.
const REDUCED_621_H0_TWO: [&str; 4] = ["(00 00 00)", "(00 00 01)", "(00 00 11)", "(00 10 10)"];

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub name: &'static str,
    pub rows: Vec<String>,
    pub diffs: Vec<String>,
}

impl TableReport {
    pub fn ok(&self) -> bool {
        self.diffs.is_empty()
    }
}

pub fn table(name: &str) -> Result<TableReport> {
    match name {
        "generators" => generators(),
        "flexible-torsions" => flexible_torsions(),
        "reduced-621" => reduced_621(),
        _ => Err(Error::Precondition(format!("unknown table {name:?}; known: {}", TABLE_NAMES.join(", ")))),
    }
}

pub fn format_row(name: &str, d: &DivisorClass) -> String {
    let s = |x: &Slot| format!("{:>2} {}", x.deg, x.tor);
    let sl = d.slots();
    format!(
        "{name:<3}{:>2} | {}  {}  {} | {}  {}  {}",
        d.d(),
        s(&sl[0]),
        s(&sl[1]),
        s(&sl[2]),
        s(&sl[3]),
        s(&sl[4]),
        s(&sl[5])
    )
}

/// Degrees from the del Pezzo model, torsion parts from the `A0` and `A1`
/// rows carried around by the symmetry group.
fn regenerate_row(label: CurveLabel) -> Result<DivisorClass> {
    let v = delpezzo::vector(label);
    let d = delpezzo::pairing(&v, &delpezzo::canonical());
    let seed = if label.is_elliptic() { CurveLabel::A0 } else { CurveLabel::A1 };
    let g = Symmetry::ALL
        .into_iter()
        .find(|g| g.apply_label(seed) == label)
        .ok_or_else(|| Error::InternalInconsistency(format!("{label} is not in the orbit of {seed}")))?;
    let seed_bits = g.apply(&generator(seed));
    let mut slots = [Slot::default(); 6];
    for (i, s) in slots.iter_mut().enumerate() {
        let e = delpezzo::vector(CurveLabel::from_slot(i));
        *s = Slot::new(delpezzo::pairing(&v, &e), seed_bits.slot(i).tor);
    }
    DivisorClass::from_full(d, slots)
}

fn generators() -> Result<TableReport> {
    let mut rows = Vec::new();
    let mut diffs = Vec::new();
    for (i, l) in CurveLabel::ALL.iter().enumerate() {
        let row = regenerate_row(*l)?;
        if row != generator(*l) {
            diffs.push(format!("{l}: regenerated {row:?} but library holds {:?}", generator(*l)));
        }
        rows.push(format_row(&l.to_string(), &row));
        if rows[i] != GENERATOR_ROWS[i] {
            diffs.push(format!("{l}: got {:?}, expected {:?}", rows[i], GENERATOR_ROWS[i]));
        }
    }
    let k = canonical_class();
    let kd = delpezzo::pairing(&delpezzo::canonical(), &delpezzo::canonical());
    if k.d() != kd {
        diffs.push(format!("K^2 = {kd} in the model, {} in coordinates", k.d()));
    }
    rows.push(format_row("K", &k));
    if rows[12] != GENERATOR_ROWS[12] {
        diffs.push(format!("K: got {:?}, expected {:?}", rows[12], GENERATOR_ROWS[12]));
    }
    Ok(TableReport { name: "generators", rows, diffs })
}

fn flexible_torsions() -> Result<TableReport> {
    let flexible: Vec<Torsion> = FLEXIBLE.iter().map(|t| parse_torsion(t)).collect::<Result<_>>()?;
    let k = canonical_class();
    let mut rows = Vec::new();
    let mut diffs = Vec::new();
    let mut count = 0;
    for t in Torsion::all() {
        let h = h0(&k.twist(t))?;
        let expected = if t.is_zero() {
            0
        } else if flexible.contains(&t) {
            2
        } else {
            1
        };
        if h == 2 {
            count += 1;
        }
        if h != expected || is_flexible(t) != (h == 2) {
            diffs.push(format!("h0(K + {t}) = {h}, expected {expected}"));
        }
        rows.push(format!("{t}  h0(K+tau) = {h}{}", if h == 2 { "  flexible" } else { "" }));
    }
    if count != 3 {
        diffs.push(format!("{count} flexible torsions, expected 3"));
    }
    for (lhs, rhs) in K_TWIST_DECOMPOSITIONS {
        let ok = parse(lhs)? == parse(rhs)?;
        if !ok {
            diffs.push(format!("{lhs} != {rhs}"));
        }
        rows.push(format!("{lhs} = {rhs}{}", if ok { "" } else { "  MISMATCH" }));
    }
    Ok(TableReport { name: "flexible-torsions", rows, diffs })
}

fn reduced_621() -> Result<TableReport> {
    let base = parse(REDUCED_621.base)?;
    let mut rows = Vec::new();
    let mut diffs = Vec::new();
    for (tau, member) in REDUCED_621.rows {
        let d = base.twist(parse_torsion(tau)?);
        let m = parse(member)?;
        let h = h0(&d)?;
        let expected = if REDUCED_621_H0_TWO.contains(&tau) { 2 } else { 1 };
        if d != m {
            diffs.push(format!("{tau}: base + tau = {d}, listed member {member} = {m}"));
        }
        if !d.is_reduced_form() {
            diffs.push(format!("{tau}: {d} is not of reduced form"));
        }
        if h != expected {
            diffs.push(format!("{tau}: h0 = {h}, expected {expected}"));
        }
        let w = is_effective(&d)?.map_or("-".to_string(), |w| w.to_string());
        rows.push(format!("{tau} | {member:<18} | h0 = {h} | witness {w}"));
    }
    Ok(TableReport { name: "reduced-621", rows, diffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_tables_match() {
        for name in TABLE_NAMES {
            let t = table(name).unwrap();
            assert!(t.ok(), "{name}: {:?}", t.diffs);
        }
        assert_eq!(table("generators").unwrap().rows.len(), 13);
        assert!(table("nope").is_err());
    }

    #[test]
    fn member_tables_are_identities() {
        for t in MEMBER_TABLES {
            let base = parse(t.base).unwrap();
            for (tau, member) in t.rows {
                assert_eq!(base.twist(parse_torsion(tau).unwrap()), parse(member).unwrap(), "{} {tau}", t.name);
            }
        }
    }
}
