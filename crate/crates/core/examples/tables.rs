//! Regenerates the generator table, the flexible torsions and the [6;0,2,1] table.
use burniat::tables::{table, TABLE_NAMES};

fn main() -> burniat::Result<()> {
    for name in TABLE_NAMES {
        let rep = table(name)?;
        println!("== {name}");
        for row in &rep.rows {
            println!("{row}");
        }
        println!("differences: {}\n", rep.diffs.len());
    }
    Ok(())
}
