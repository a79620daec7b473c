//! The order-6 symmetry group acting on labels and classes.
use burniat::{canonical_class, parse, CurveLabel, Symmetry};

fn main() -> burniat::Result<()> {
    let d = parse("A0 + 2B1 - C3")?;
    for g in Symmetry::ALL {
        let image = g.apply(&d);
        assert_eq!(image.chi(), d.chi());
        assert_eq!(g.apply(&canonical_class()), canonical_class());
        println!("{g:<10} A0 -> {:<3} D -> {}", g.apply_label(CurveLabel::A0).to_string(), image.table_row());
    }
    Ok(())
}
