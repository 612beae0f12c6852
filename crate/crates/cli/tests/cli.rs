use std::io::Write;
use std::process::{Command, Output, Stdio};

fn levi(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_levi"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    // the binary may exit before reading stdin, so a broken pipe is fine
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let o = levi(&[&["gen"], args].concat(), "");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn quasi_pencil_diagram_totals() {
    let a = gen(&["quasi-pencil", "--k", "4"]);
    let o = levi(&["betti", "--char", "2"], &a);
    assert!(o.status.success());
    let out = stdout(&o);
    let totals = out.lines().find(|l| l.starts_with("total:")).unwrap();
    let nums: Vec<&str> = totals.split_whitespace().skip(1).collect();
    assert_eq!(nums, ["1", "9", "21", "27", "20", "7", "1"]);
    assert!(out.contains("pd(S/I) = 6\n"));
    assert!(out.contains("Cohen-Macaulay: no\n"));
}

#[test]
fn pencil_is_shellable() {
    let a = gen(&["pencil", "--k", "5"]);
    let o = levi(&["classify"], &a);
    assert!(o.status.success());
    assert!(stdout(&o).contains("sequentially Cohen-Macaulay: YES (shelling certificate"));
}

#[test]
fn empty_graph_is_zero_ideal() {
    let o = levi(&["betti"], r#"{"s":2,"k":3,"edges":[]}"#);
    assert_eq!(o.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&o.stderr).contains("zero ideal"));
}

#[test]
fn exit_codes() {
    assert_eq!(levi(&["betti"], "not json").status.code(), Some(2));
    assert_eq!(levi(&["betti"], r#"{"foo":1}"#).status.code(), Some(2));
    assert_eq!(levi(&["gen", "hexagon"], "").status.code(), Some(6));
    assert_eq!(levi(&["gen", "pencil"], "").status.code(), Some(2));
    assert_eq!(
        levi(&["betti", "--char", "4"], &gen(&["pencil", "--k", "3"]))
            .status
            .code(),
        Some(2)
    );

    let pg3 = gen(&["projective-plane", "--q", "3"]);
    let o = levi(&["betti"], &pg3);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("bounds only"));
    let small_cap = levi(
        &["betti", "--cap-vertices", "6"],
        &gen(&["quasi-pencil", "--k", "4"]),
    );
    assert_eq!(small_cap.status.code(), Some(3));
}

#[test]
fn graph_input_accepted_everywhere() {
    // path x1 - y1 - x2 - y2
    let g = r#"{"s":2,"k":2,"edges":[[0,0],[1,0],[1,1]]}"#;
    for cmd in ["betti", "classify", "bounds"] {
        let o = levi(&[cmd], g);
        assert!(
            o.status.success(),
            "{cmd}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
    let o = levi(&["power", "--q", "2"], g);
    assert!(o.status.success());
    assert!(stdout(&o).contains("holds"));
    assert!(stdout(&levi(&["classify"], g)).starts_with("Cohen-Macaulay: YES"));
}

#[test]
fn output_is_deterministic_across_threads() {
    let a = gen(&["generic-lines", "--k", "4"]);
    let one = stdout(&levi(&["betti", "--threads", "1", "--format", "json"], &a));
    let many = stdout(&levi(&["betti", "--threads", "8", "--format", "json"], &a));
    assert_eq!(one, many);
    let v: serde_json::Value = serde_json::from_str(&one).unwrap();
    assert_eq!(v["summary"]["pd"], 7);
}

#[test]
fn fields_agree_on_conic() {
    let a = gen(&["conic-6-5"]);
    let tables: Vec<String> = ["2", "3", "32003"]
        .iter()
        .map(|p| stdout(&levi(&["betti", "--char", p], &a)))
        .collect();
    assert!(tables.windows(2).all(|w| w[0] == w[1]));
    assert!(
        tables[0]
            .contains("total:     1    30   135   330   580   782   765   500   204    48     5\n"),
        "{}",
        tables[0]
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("levi-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a.json");
    let o = levi(
        &[
            "gen",
            "marked-triple-point",
            "--out",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert!(o.status.success() && o.stdout.is_empty());
    let o = levi(
        &["classify", path.to_str().unwrap(), "--format", "json"],
        "",
    );
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cohen_macaulay"]["is_cm"], true);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn bounds_report_checks() {
    let o = levi(&["bounds"], &gen(&["generic-lines", "--k", "5"]));
    let out = stdout(&o);
    assert!(out.contains("pd upper bound: 105/8\n"));
    assert!(out.contains("PASS pd lower: pd = 11 >= 8\n"));
    assert!(!out.contains("FAIL"));
}
