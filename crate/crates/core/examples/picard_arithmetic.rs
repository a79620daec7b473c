//! Parsing, the group law, intersections and Riemann-Roch.
use burniat::{canonical_class, generator, parse, CurveLabel};

fn main() -> burniat::Result<()> {
    let k = canonical_class();
    println!("K          = {k}");
    println!("K^2        = {}", k.self_intersection());

    // Literal coordinates and generator expressions parse to the same type.
    let d = parse("[7; 1:10, 2:01, 2:11]")?;
    let e = parse("A0 + C3 + A1 + B1 + B3")?;
    println!("D          = {d}");
    println!("D == E     : {}", d == e);
    println!("row        = {}", d.table_row());
    println!("[D]        = {}", d.num_class());
    println!("D^2 = {}, D.K = {}, chi = {}", d.self_intersection(), d.d(), d.chi());

    // 2(C0+A3) = 2A1, a torsion-sensitive identity.
    let lhs = parse("2(C0+A3)")?;
    println!("2(C0+A3) - 2A1 = {}", lhs.checked_sub(&generator(CurveLabel::A1).times(2))?);
    // A1 - A2 is numerically trivial but not zero.
    let t = parse("A1 - A2")?;
    println!("A1 - A2 = {t}, torsion {:?}", t.as_torsion().map(|t| t.to_string()));

    for l in CurveLabel::ELLIPTIC {
        println!("A0.{l} = {}", generator(CurveLabel::A0).intersect(&generator(l)));
    }
    Ok(())
}
