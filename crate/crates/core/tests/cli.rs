use std::process::{Command, Output};

fn burniat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burniat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn h_of_canonical_class() {
    let o = burniat(&["h", "K"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "h0 = 0, h1 = 0, h2 = 1\n");
}

#[test]
fn effective_with_witness() {
    let o = burniat(&["--json", "effective", "[7; 1:10, 2:01, 2:11]"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["effective"], true);
    assert_eq!(v["witness"]["combo"], "A0+C3+A1+B1+B3");
}

#[test]
fn json_key_order_is_fixed() {
    let o = burniat(&["--json", "--trace", "show", "K"]);
    let s = stdout(&o);
    let keys =
        ["\"input\"", "\"coords\"", "\"num_class\"", "\"chi\"", "\"h\"", "\"effective\"", "\"witness\"", "\"trace\""];
    let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{s}");
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["h"], serde_json::json!([0, 0, 1]));
    assert_eq!(v["coords"]["slots"][0], serde_json::json!([1, "00"]));
    assert_eq!(v["trace"][1]["step"], "duality-swap");
}

#[test]
fn enumber_listing() {
    let o = burniat(&["enumber", "7", "0", "1", "1"]);
    assert!(stdout(&o).contains("brute=64 criterion=64"));
    let o = burniat(&["enumber", "6", "0", "0", "0"]);
    assert!(stdout(&o).contains("brute=37 criterion=1-63"));
    let o = burniat(&["enumber", "4", "-2", "0", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn tables_regenerate_without_differences() {
    for (name, rows) in [("generators", 13), ("flexible-torsions", 64), ("reduced-621", 8)] {
        let o = burniat(&["--json", "table", name]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert!(v["rows"].as_array().unwrap().len() >= rows);
        assert_eq!(v["diffs"], serde_json::json!([]));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(burniat(&["h", "[1; 0:00, 0:00, 0:00]"]).status.code(), Some(1));
    assert_eq!(burniat(&["h", "A0 +"]).status.code(), Some(1));
    assert_eq!(burniat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(burniat(&["h"]).status.code(), Some(2));
    assert_eq!(burniat(&["table", "nope"]).status.code(), Some(2));
    assert_eq!(burniat(&["--help"]).status.code(), Some(0));
}

#[test]
fn batch_preserves_order() {
    let dir = std::env::temp_dir().join(format!("burniat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("in.txt");
    let inputs: Vec<String> = (0..40).map(|k| format!("{k}A0 + K")).chain(["oops".into()]).collect();
    std::fs::write(&path, inputs.join("\n")).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_burniat"))
        .env("BURNIAT_THREADS", "3")
        .args(["--batch", path.to_str().unwrap(), "h"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), inputs.len());
    for (v, input) in lines.iter().zip(&inputs) {
        assert_eq!(v["input"], input.as_str());
    }
    assert!(lines.last().unwrap()["error"].is_string());
}

#[test]
fn ulrich_and_rank2() {
    let o = burniat(&["--json", "ulrich-search"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["hits"], serde_json::json!([]));
    assert_eq!((v["d_lo"].as_i64(), v["d_hi"].as_i64()), (Some(-6), Some(24)));
    assert_eq!(burniat(&["verify-rank2"]).status.code(), Some(0));
    assert_eq!(burniat(&["verify-rank2", "--d1", "K"]).status.code(), Some(1));
}

#[test]
fn selftest_subset() {
    let o = burniat(&["selftest", "--only", "1,2,3,8,11"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("[PASS]")).count(), 5);
}
