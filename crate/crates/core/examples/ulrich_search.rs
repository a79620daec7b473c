//! Exhaustive search for Ulrich line bundles, by default for H = 3K.
use burniat::parse;
use burniat::ulrich::{default_window, ulrich_line_search, verify_section5_properties};

fn main() -> burniat::Result<()> {
    let h = parse(&std::env::args().nth(1).unwrap_or_else(|| "3K".into()))?;
    let (lo, hi) = default_window(&h);
    let rep = ulrich_line_search(&h, lo, hi)?;
    println!(
        "H = {}: {} divisors with D.K in [{lo}, {hi}], {} hits",
        rep.polarization,
        rep.divisors_scanned,
        rep.hits.len()
    );
    for d in rep.hits.iter().take(10) {
        println!("  {d}");
    }

    let s5 = verify_section5_properties(12)?;
    println!("{} trivial divisors with 6 <= d <= 12, {} violations", s5.trivial_divisors, s5.violations.len());
    Ok(())
}
