//! Work steps of the cohomology computation grow linearly in D.K.
use std::time::Instant;

use burniat::cohomology::h_all_with_budget;
use burniat::selftest::complexity_divisor;

fn main() -> burniat::Result<()> {
    for d in [100, 1_000, 10_000, 100_000] {
        let x = complexity_divisor(d)?;
        let start = Instant::now();
        let r = h_all_with_budget(&x, 2 * d as usize)?;
        let steps = r.trace.iter().filter(|s| s.is_work()).count();
        println!("d = {d:>6}: steps = {steps:>6}, steps/d = {:.4}, {:?}", steps as f64 / d as f64, start.elapsed());
    }
    Ok(())
}
