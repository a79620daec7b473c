//! Effectiveness with witnesses, e-numbers and reduced forms.
use burniat::effectivity::{e_full, e_number, e_positive, is_effective, reduce, Reduction};
use burniat::{parse, NumClass};

fn main() -> burniat::Result<()> {
    for text in ["[7; 1:10, 2:01, 2:11]", "K", "2K", "A0 - B0", "K + (00 00 10)"] {
        let d = parse(text)?;
        match is_effective(&d)? {
            Some(w) => println!("{text:<24} effective, {w}"),
            None => println!("{text:<24} not effective"),
        }
    }

    for (d, a, b, c) in [(7, 0, 1, 1), (6, 0, 0, 0), (6, 1, 1, 1), (3, 0, 0, 0), (1, -1, 0, 0)] {
        let nc = NumClass::new(d, a, b, c);
        println!(
            "e({nc}) = {:>2}   e >= 1: {}   e = 64: {}",
            e_number(&nc)?,
            e_positive(&nc)?.holds,
            e_full(&nc)?.holds
        );
    }

    let d = parse("2K - 3A0 + B2 - B1")?;
    match reduce(&d)? {
        Reduction::Reduced { form, steps } => println!("{} trims -> reduced form {}", steps.len(), form.table_row()),
        Reduction::NotEffective { last, .. } => println!("not effective, stopped at {last}"),
    }
    Ok(())
}
