//! The twelve acceptance criteria, one line each. Runs without the libtest harness
//! so the lines are printed even when output capture is on.

fn main() {
    let outcomes = burniat::selftest::run_all();
    for o in &outcomes {
        println!("{o}");
    }
    let failed: Vec<u8> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    println!("{} of {} criteria pass", outcomes.len() - failed.len(), outcomes.len());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
