use std::process::{Command, Output};

fn bei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bei"))
        .args(args)
        .env_remove("BEI_CHAR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn reg_of_a_path() {
    let o = bei(&["reg", "4; 1 2; 2 3; 3 4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).starts_with("reg J_G = 4, reg S/J_G = 3, pd S/J_G = 3"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn graph6_and_edge_lists_agree() {
    let a = bei(&["betti", "Cl"]);
    let b = bei(&["betti", "4; 1 2; 2 3; 3 4; 1 4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn other_characteristic() {
    let o = bei(&["--char", "101", "ideal", "3; 1 2; 2 3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("x2*y1 - x1*y2"), "{}", stdout(&o));
    assert_eq!(bei(&["--char", "100", "reg", "Cl"]).status.code(), Some(2));
}

#[test]
fn colon_and_primes() {
    let o = bei(&["colon", "Cl", "--edge", "1,2"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("holds"));
    let o = bei(&["primes", "3; 1 2; 2 3"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(bei(&["reg", "\u{1}"]).status.code(), Some(2));
    assert_eq!(bei(&["census", "/nonexistent.g6"]).status.code(), Some(2));
    assert_eq!(
        bei(&["colon", "Cl", "--edge", "1,3"]).status.code(),
        Some(1)
    );
}

#[test]
fn verify_writes_reports() {
    let dir = std::env::temp_dir().join(format!("bei-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("r.json");
    let o = bei(&[
        "verify",
        "--n-max",
        "4",
        "--format",
        "json",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["summary"]["graphs"], 18);
    assert_eq!(v["summary"]["fail"], 0);

    let file = dir.join("g.g6");
    std::fs::write(&file, ">>graph6<<Cl\nD@s\n\n").unwrap();
    let o = bei(&[
        "census",
        file.to_str().unwrap(),
        "--suite",
        "conjB",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("id,graph6,n,reg_ideal,check,status,detail"));
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.starts_with("0,Cl,") || l.starts_with("1,D@s,")));

    let empty = dir.join("empty.g6");
    std::fs::write(&empty, "").unwrap();
    let o = bei(&["census", empty.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["graphs"], 0);
    std::fs::remove_dir_all(&dir).unwrap();
}
