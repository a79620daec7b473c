//! h^0, h^1, h^2 with the branch trace, and Serre duality.
use burniat::cohomology::h_all;
use burniat::{canonical_class, parse};

fn main() -> burniat::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "5(A0+B3) - 2B0 + 2C0".into());
    let d = parse(&text)?;
    let r = h_all(&d)?;
    println!("D = {d}");
    println!("h = ({}, {}, {}), chi = {}", r.h0, r.h1, r.h2, d.chi());
    for step in &r.trace {
        println!("  {step}");
    }
    assert_eq!(r.replay(), Some((r.h0 as i64, r.h2 as i64)));

    let dual = h_all(&canonical_class().checked_sub(&d)?)?;
    println!("h(K-D) = ({}, {}, {})", dual.h0, dual.h1, dual.h2);
    Ok(())
}
