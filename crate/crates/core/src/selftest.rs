//! The acceptance suite, shared by `burniat selftest` and the test target.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{h0, h_all, h_all_with_budget, BranchStep, CohResult, FamilyKind};
use crate::delpezzo;
use crate::effectivity::{e_full, e_number, e_positive, is_effective};
use crate::error::Result;
use crate::picard::{
    canonical_class, generator, parse, parse_torsion, CurveLabel, DivisorClass, NumClass, Symmetry, Torsion,
};
use crate::tables::{self, MemberTable, EXCEPTIONAL_1023, EXCEPTIONAL_1032, EXCEPTIONAL_822, REDUCED_621};
use crate::ulrich::{rank2_d1, ulrich_line_search, verify_rank2, verify_section5_properties};

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({:.2}s): {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

type Check = fn() -> Result<(bool, String)>;

pub const CRITERIA: [(u8, &str, Check); 12] = [
    (1, "generator table integrity", c1_generators),
    (2, "intersection oracle", c2_gram),
    (3, "flexible-torsion census", c3_census),
    (4, "effectiveness vs h0 sweep", c4_effectiveness),
    (5, "e-number criteria", c5_enumbers),
    (6, "Serre duality sweep", c6_duality),
    (7, "base-case regression", c7_base_cases),
    (8, "base locus subtlety at d = 8", c8_base_locus),
    (9, "chi = 0 and triviality properties", c9_section5),
    (10, "no Ulrich line bundles for 3K", c10_ulrich),
    (11, "rank-2 Ulrich data", c11_rank2),
    (12, "linear step count", c12_complexity),
];

pub fn run(id: u8) -> Outcome {
    let (_, title, check) = CRITERIA[(id - 1) as usize];
    let start = Instant::now();
    let (pass, detail) = match check() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    Outcome { id, title, pass, detail, elapsed: start.elapsed() }
}

pub fn run_all() -> Vec<Outcome> {
    CRITERIA.iter().map(|(id, _, _)| run(*id)).collect()
}

fn verdict(failures: Vec<String>, ok: String) -> (bool, String) {
    match failures.first() {
        None => (true, ok),
        Some(first) => (false, format!("{} failure(s), first: {first}", failures.len())),
    }
}

fn within(elapsed: Duration, limit: Duration, failures: &mut Vec<String>) {
    if elapsed > limit {
        failures.push(format!("took {:.1}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs()));
    }
}

fn c1_generators() -> Result<(bool, String)> {
    let start = Instant::now();
    let mut fails = tables::table("generators")?.diffs;
    for g in Symmetry::ALL {
        for l in CurveLabel::ALL {
            if g.apply(&generator(l)) != generator(g.apply_label(l)) {
                fails.push(format!("{g} does not send row {l} to row {}", g.apply_label(l)));
            }
        }
        if g.apply(&canonical_class()) != canonical_class() {
            fails.push(format!("{g} moves K"));
        }
    }
    let identities = [
        ("2(C0+A3)", "2A1"),
        ("2A1", "2A2"),
        ("2A2", "2(C3+A0)"),
        ("(A0+B3) + A1 + B2", "(B0+A3) + A2 + B1"),
        ("(A0+B3) + A1 + B1", "(B0+A3) + A2 + B2"),
    ];
    for (l, r) in identities {
        if parse(l)? != parse(r)? {
            fails.push(format!("{l} != {r}"));
        }
    }
    within(start.elapsed(), Duration::from_secs(1), &mut fails);
    Ok(verdict(fails, "13 rows, 6 symmetries, 5 identities".into()))
}

fn hexagon_neighbours(a: CurveLabel, b: CurveLabel) -> bool {
    const HEX: [CurveLabel; 6] =
        [CurveLabel::A0, CurveLabel::C3, CurveLabel::B0, CurveLabel::A3, CurveLabel::C0, CurveLabel::B3];
    let pos = |x| HEX.iter().position(|&h| h == x).unwrap();
    let (i, j) = (pos(a), pos(b));
    (i + 1) % 6 == j || (j + 1) % 6 == i
}

fn c2_gram() -> Result<(bool, String)> {
    let gram = delpezzo::gram_matrix();
    let kv = delpezzo::canonical();
    let mut fails = Vec::new();
    for (i, a) in CurveLabel::ALL.iter().enumerate() {
        let (za, zk) = (generator(*a), canonical_class());
        for (j, b) in CurveLabel::ALL.iter().enumerate() {
            let x = za.checked_intersect(&generator(*b))?;
            if x != gram[i][j] {
                fails.push(format!("{a}.{b} = {x}, model {}", gram[i][j]));
            }
        }
        let self_expected = if a.is_elliptic() { -1 } else { 0 };
        if gram[i][i] != self_expected {
            fails.push(format!("{a}^2 = {}", gram[i][i]));
        }
        let kd = za.checked_intersect(&zk)?;
        if kd != za.d() || kd != delpezzo::pairing(&delpezzo::vector(*a), &kv) {
            fails.push(format!("{a}.K = {kd}, row degree {}", za.d()));
        }
    }
    for a in CurveLabel::ELLIPTIC {
        for b in CurveLabel::ELLIPTIC {
            if a != b {
                let expected = hexagon_neighbours(a, b) as i64;
                if generator(a).intersect(&generator(b)) != expected {
                    fails.push(format!("{a}.{b} should be {expected}"));
                }
            }
        }
    }
    Ok(verdict(fails, "144 pairings agree with the del Pezzo model".into()))
}

fn c3_census() -> Result<(bool, String)> {
    let report = tables::table("flexible-torsions")?;
    let k = canonical_class();
    let mut counts = [0usize; 3];
    let mut fails = report.diffs;
    for t in Torsion::all() {
        let h = h0(&k.twist(t))? as usize;
        if h > 2 {
            fails.push(format!("h0(K + {t}) = {h}"));
        } else {
            counts[h] += 1;
        }
    }
    if counts != [1, 60, 3] {
        fails.push(format!("h0 = 0, 1, 2 occur {counts:?} times"));
    }
    Ok(verdict(fails, format!("h0(K+tau) = 0, 1, 2 occur {counts:?} times; decompositions hold")))
}

fn numclasses(d_range: std::ops::RangeInclusive<i64>, r: impl Fn(i64) -> i64) -> Vec<NumClass> {
    let mut v = Vec::new();
    for d in d_range {
        let r = r(d);
        for a in -r..=r {
            for b in -r..=r {
                for c in -r..=r {
                    let n = NumClass::new(d, a, b, c);
                    if n.ell().is_some() {
                        v.push(n);
                    }
                }
            }
        }
    }
    v
}

fn c4_effectiveness() -> Result<(bool, String)> {
    let start = Instant::now();
    let cells = numclasses(-12..=12, |_| 6);
    let fails: Vec<String> = cells
        .par_iter()
        .map(|nc| -> Result<Vec<String>> {
            let base = nc.untwisted()?;
            let mut out = Vec::new();
            for t in Torsion::all() {
                let d = base.twist(t);
                let w = is_effective(&d)?;
                let h = h_all(&d)?;
                if w.is_some() != (h.h0 >= 1) {
                    out.push(format!("{d}: witness {:?}, h0 = {}", w.map(|w| w.to_string()), h.h0));
                }
                if let Some(w) = w {
                    if !w.combo().is_nonnegative() || w.combo().to_class()? != d {
                        out.push(format!("{d}: witness {w} does not round-trip"));
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut fails = fails;
    within(start.elapsed(), Duration::from_secs(300), &mut fails);
    Ok(verdict(fails, format!("{} divisors, zero disagreements", cells.len() * 64)))
}

fn c5_enumbers() -> Result<(bool, String)> {
    let cells = numclasses(1..=20, |d| d + 2);
    let k = canonical_class().num_class();
    let fails: Vec<String> = cells
        .par_iter()
        .map(|nc| -> Result<Option<String>> {
            let e = e_number(nc)?;
            let pos = e_positive(nc)?.holds;
            let full = e_full(nc)?.holds;
            let shifted = nc.add(&k);
            let shifted_full = e_full(&shifted)?.holds;
            let shifted_brute = e_number(&shifted)? == 64;
            Ok(if (e >= 1) != pos || (e == 64) != full {
                Some(format!("{nc}: e = {e}, criteria ({pos}, {full})"))
            } else if pos != shifted_full || shifted_full != shifted_brute {
                Some(format!("{nc}: e >= 1 is {pos} but e([D+K]) = 64 is {shifted_full}/{shifted_brute}"))
            } else {
                None
            })
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(verdict(fails, format!("{} numerical classes agree with brute force", cells.len())))
}

fn reversed(r: &CohResult) -> [u64; 3] {
    [r.h2, r.h1, r.h0]
}

fn c6_duality() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e77e);
    let k = canonical_class();
    let mut fails = Vec::new();
    let mut n = 0;
    while n < 10_000 {
        let (a, b, c) = (rng.gen_range(-10..=10), rng.gen_range(-10..=10), rng.gen_range(-10..=10));
        let d: i64 = rng.gen_range(-20..=20);
        let Ok(base) = NumClass::new(d, a, b, c).untwisted() else { continue };
        let x = base.twist(Torsion::from_index(rng.gen_range(0..64)));
        n += 1;
        let (h, hd) = (h_all(&x)?, h_all(&k.checked_sub(&x)?)?);
        if [h.h0, h.h1, h.h2] != reversed(&hd) {
            fails.push(format!("{x}: {:?} vs dual {:?}", [h.h0, h.h1, h.h2], [hd.h0, hd.h1, hd.h2]));
        }
    }
    Ok(verdict(fails, "10000 random divisors".into()))
}

fn tau_is(tau: Torsion, patterns: &[&str]) -> bool {
    let s: Vec<char> = tau.to_string().chars().filter(|c| c.is_ascii_digit()).collect();
    patterns.iter().any(|p| {
        let p: Vec<char> = p.chars().filter(|c| !c.is_whitespace() && *c != '(' && *c != ')').collect();
        p.iter().zip(&s).all(|(p, c)| *p == '*' || p == c)
    })
}

/// The stated values, family by family; `None` outside the stated torsion constraint.
fn stated_h0(kind: FamilyKind, l: u64, tau: Torsion) -> Option<u64> {
    let is = |p: &[&str]| tau_is(tau, p);
    let zero = tau.is_zero();
    let even = l.is_multiple_of(2);
    match kind {
        FamilyKind::Six000 => zero.then_some(3),
        FamilyKind::Seven011 => is(&["00 ** **"]).then(|| {
            if is(&["00 10 00"]) {
                3
            } else if zero {
                1
            } else {
                2
            }
        }),
        FamilyKind::Eight001 => is(&["00 00 **"]).then_some(if zero { 2 } else { 3 }),
        FamilyKind::Eight022 => is(&["00 *0 **"]).then(|| {
            if is(&["00 10 00"]) {
                4
            } else if zero {
                2
            } else {
                3
            }
        }),
        FamilyKind::L00L if even => {
            if zero {
                Some(l / 2 + 1)
            } else {
                is(&["00 00 10"]).then_some(l / 2)
            }
        }
        FamilyKind::L00L => is(&["00 00 01", "00 00 11"]).then_some(l.div_ceil(2)),
        FamilyKind::L00Lm1 if l == 1 => is(&["00 00 10"]).then_some(0),
        FamilyKind::L00Lm1 => {
            if zero {
                Some(l / 2 + 1)
            } else if is(&["00 00 01", "00 00 11"]) {
                Some((l - 1) / 2 + 1)
            } else {
                is(&["00 00 10"]).then_some(l / 2)
            }
        }
        FamilyKind::L01Lm1 if l == 1 => is(&["00 01 00", "00 11 00"]).then_some(1),
        FamilyKind::L01Lm1 => is(&["00 01 **", "00 11 **"]).then_some(l - 1),
        FamilyKind::L0Lm1_1 if even => is(&["00 01 **", "00 11 **"]).then_some(l / 2),
        FamilyKind::L0Lm1_1 => {
            if is(&["00 00 00", "00 00 01", "00 00 11", "00 10 10"]) {
                Some(l.div_ceil(2))
            } else {
                is(&["00 10 00", "00 10 01", "00 10 11", "00 00 10"]).then_some((l - 1) / 2)
            }
        }
        FamilyKind::L00LPlusK => Some(if is(&["00 10 00"]) {
            (3 * l + 4) / 2
        } else if is(&["00 10 01", "00 10 11", "00 00 10"]) {
            (3 * l + 3) / 2
        } else if is(&["00 00 01", "00 00 11", "00 10 10"]) {
            (3 * l + 2) / 2
        } else if zero {
            (3 * l).div_ceil(2)
        } else {
            l + 1
        }),
        _ => None,
    }
}

fn check_member_table(t: &MemberTable, fails: &mut Vec<String>) -> Result<()> {
    let base = parse(t.base)?;
    let a0 = generator(CurveLabel::A0);
    let ca = parse("C0 + A3")?.times(2);
    for (tau, member) in t.rows {
        let d = base.twist(parse_torsion(tau)?);
        if d != parse(member)? {
            fails.push(format!("{}: {tau}: {member} is not base + tau", t.name));
        }
        let (h, h_minus) = (h0(&d)?, h0(&d.checked_sub(&a0)?)?);
        if h < 1 {
            fails.push(format!("{}: {tau}: h0 = 0 for a listed member", t.name));
        }
        if t.name == REDUCED_621.name {
            let stated = stated_h0(FamilyKind::L0Lm1_1, 3, parse_torsion(tau)?);
            let h_ca = h0(&d.checked_sub(&ca)?)?;
            if Some(h) != stated || h != h_ca + 1 {
                fails.push(format!("{}: {tau}: h0 = {h}, stated {stated:?}, h0(D - 2(C0+A3)) = {h_ca}", t.name));
            }
        } else if h != h_minus + 1 {
            fails.push(format!("{}: {tau}: h0(D) = {h} but h0(D - A0) = {h_minus}", t.name));
        }
    }
    Ok(())
}

fn c7_base_cases() -> Result<(bool, String)> {
    use FamilyKind::*;
    let ranges: [(FamilyKind, std::ops::RangeInclusive<i64>); 9] = [
        (Six000, 2..=2),
        (Seven011, 3..=3),
        (Eight001, 3..=3),
        (Eight022, 4..=4),
        (L00L, 1..=10),
        (L00Lm1, 1..=10),
        (L01Lm1, 1..=10),
        (L0Lm1_1, 3..=11),
        (L00LPlusK, 1..=10),
    ];
    let mut fails = Vec::new();
    let mut checked = 0;
    for (kind, ls) in ranges {
        for l in ls {
            let base = kind.base(l)?;
            for t in Torsion::all() {
                let d = base.twist(t);
                let stated = stated_h0(kind, l as u64, t);
                match (d.is_reduced_form(), stated) {
                    (false, None) => continue,
                    (false, Some(_)) => fails.push(format!("{kind} l={l} {t}: stated but not of reduced form")),
                    (true, None) => fails.push(format!("{kind} l={l} {t}: reduced form outside the stated torsions")),
                    (true, Some(v)) => {
                        checked += 1;
                        let h = h_all(&d)?.h0;
                        if h != v {
                            fails.push(format!("{kind} l={l} {t}: h0 = {h}, stated {v}"));
                        }
                    }
                }
            }
        }
    }
    for t in [&REDUCED_621, &EXCEPTIONAL_822, &EXCEPTIONAL_1023, &EXCEPTIONAL_1032] {
        check_member_table(t, &mut fails)?;
    }
    Ok(verdict(fails, format!("{checked} family values and 32 table rows")))
}

fn c8_base_locus() -> Result<(bool, String)> {
    let d = parse("A0 + B0 + K + B2 - B1")?;
    let mut fails = Vec::new();
    if d.table_row() != "(8 | 0 00, 0 00, 1 10 | 2 00, 2 10, 3 00)" {
        fails.push(format!("coordinates {}", d.table_row()));
    }
    let (h, hm) = (h0(&d)?, h0(&d.checked_sub(&generator(CurveLabel::A0))?)?);
    if (h, hm) != (3, 3) {
        fails.push(format!("h0(D) = {h}, h0(D - A0) = {hm}"));
    }
    Ok(verdict(fails, "h0(D) = h0(D - A0) = 3".into()))
}

fn c9_section5() -> Result<(bool, String)> {
    let start = Instant::now();
    let rep = verify_section5_properties(20)?;
    let mut fails = rep.violations.clone();
    if !rep.trivial.contains(&rank2_d1()) {
        fails.push("D1 missing from the trivial divisors at d = 10".into());
    }
    within(start.elapsed(), Duration::from_secs(300), &mut fails);
    Ok(verdict(
        fails,
        format!("{} chi = 0 classes, {} trivial divisors, no violations", rep.chi_zero_classes, rep.trivial_divisors),
    ))
}

fn c10_ulrich() -> Result<(bool, String)> {
    let rep = ulrich_line_search(&canonical_class().times(3), -6, 24)?;
    let mut fails: Vec<String> = rep.hits.iter().map(|h| format!("hit {h}")).collect();
    within(rep.elapsed, Duration::from_secs(600), &mut fails);
    Ok(verdict(fails, format!("{} divisors in [-6, 24], no hits", rep.divisors_scanned)))
}

fn c11_rank2() -> Result<(bool, String)> {
    let rep = verify_rank2(&rank2_d1())?;
    let fails =
        rep.checks.iter().filter(|c| !c.pass).map(|c| format!("{}: {} != {}", c.name, c.actual, c.expected)).collect();
    Ok(verdict(fails, "five checks pass".into()))
}

/// `[4n; -n, 0, 0]`: `n` trims of `A0`, then peeling in the nef 64-effective branch.
pub fn complexity_divisor(d: i64) -> Result<DivisorClass> {
    NumClass::new(d, -d / 4, 0, 0).untwisted()
}

fn c12_complexity() -> Result<(bool, String)> {
    let mut fails = Vec::new();
    let mut ratios = Vec::new();
    let mut wall = Duration::ZERO;
    for d in [1_000, 10_000, 100_000] {
        let x = complexity_divisor(d)?;
        let start = Instant::now();
        let r = h_all_with_budget(&x, 2 * d as usize)?;
        wall = start.elapsed();
        let steps = r.trace.iter().filter(|s| s.is_work()).count();
        if !r.trace.iter().any(|s| matches!(s, BranchStep::NefReduce { .. })) {
            fails.push(format!("d = {d}: no peel step"));
        }
        ratios.push(steps as f64 / d as f64);
    }
    let (lo, hi) = ratios.iter().fold((f64::MAX, 0f64), |(lo, hi), &r| (lo.min(r), hi.max(r)));
    if hi > 2.0 * lo {
        fails.push(format!("steps/d ranges over {ratios:?}"));
    }
    Ok(verdict(fails, format!("steps/d = {ratios:.4?}; d = 1e5 in {:.1} ms", wall.as_secs_f64() * 1e3)))
}
