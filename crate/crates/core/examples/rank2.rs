//! The line bundles behind the rank-2 Ulrich bundle for 3K.
use burniat::ulrich::{rank2_d1, verify_rank2};

fn main() -> burniat::Result<()> {
    let rep = verify_rank2(&rank2_d1())?;
    println!("D1 = {}\nD2 = {}", rep.d1, rep.d2);
    for c in &rep.checks {
        println!("  {:<22} {:<12} {}", c.name, c.actual, if c.pass { "ok" } else { "FAIL" });
    }
    Ok(())
}
