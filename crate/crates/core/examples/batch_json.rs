//! Drives the command-line front end in-process, as a batch job with JSON output.
use std::io::Write;

fn main() {
    let path = std::env::temp_dir().join("burniat-batch-example.txt");
    let mut f = std::fs::File::create(&path).expect("temp file");
    writeln!(f, "K\n2K\nA0 + B0 + C0 + K\n[7; 1:10, 2:01, 2:11]").expect("write");

    let mut out = Vec::new();
    let code = burniat::cli::run(["burniat", "--batch", path.to_str().unwrap(), "h"], &mut out, &mut std::io::stderr());
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}");
}
