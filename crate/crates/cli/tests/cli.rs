use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn graph(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "graphs", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclesplit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cyclesplit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn cycles_listing() {
    let o = run(&["cycles", &graph("example2.txt")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(u1,u2,u3,u4)\n");

    let o = run_stdin(&["cycles", "-"], "# nothing here\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "");

    let o = run(&[
        "cycles",
        &graph("spoke_deleted_wheel_k3.txt"),
        "--format",
        "json",
    ]);
    let v = json(&o);
    let cycles = v.as_array().unwrap();
    assert_eq!(cycles.len(), 4);
    assert_eq!(
        cycles[3],
        serde_json::json!(["u1", "u2", "u3", "u4", "u5", "u6"])
    );
}

#[test]
fn input_errors_exit_with_two() {
    let o = run_stdin(&["cycles", "-"], "a b c\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));

    let o = run(&["cycles", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(2));

    // several cycles and none chosen
    let o = run(&["split", &graph("spoke_deleted_wheel_k3.txt")]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["split", &graph("example2.txt"), "--cycle", "u1,u3,u2,u4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn split_verdicts() {
    let o = run(&[
        "split",
        &graph("example2.txt"),
        "--cycle",
        "u1,u2,u3,u4",
        "--search",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["verdict"], "no-splitting-function");
    assert_eq!(v["witness"]["lcm_psi"], "u1*u2*u3*u4*w1*w2");

    let o = run(&["split", &graph("example1.txt"), "--search"]);
    assert!(stdout(&o).contains("verdict: hypothesis-fails-but-splitting-found"));

    let o = run(&["split", &graph("c4_pendant.txt")]);
    assert!(stdout(&o).contains("verdict: certified-splitting"));

    let o = run(&["split", &graph("example1.txt")]);
    assert!(stdout(&o).contains("verdict: not-checked"));
}

#[test]
fn split_cap_refusal_exits_with_three() {
    let o = run(&[
        "split",
        &graph("example2.txt"),
        "--search",
        "--max-subsets",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn betti_tables() {
    let o = run(&["betti", &graph("example1.txt")]);
    assert!(stdout(&o).ends_with("total | 6 8 3\n"));

    let o = run(&["betti", "--ideal", "u1*u2*w1, u2*u3*w1, u1*u4*w1"]);
    assert!(stdout(&o).ends_with("total | 3 2\n"));

    let o = run(&["betti", &graph("c4.txt"), "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["totals"], serde_json::json!([4, 4, 1]));
    assert_eq!(
        v["entries"][2],
        serde_json::json!({"i": 2, "j": 4, "beta": 1})
    );

    let o = run(&["betti", &graph("wheel_k3.txt"), "--cap", "5"]);
    assert_eq!(o.status.code(), Some(3));

    let o = run(&["betti"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_ek_marks_columns() {
    let o = run(&["check-ek", &graph("example2.txt")]);
    let out = stdout(&o);
    let marks: Vec<&str> = out
        .lines()
        .filter(|l| l.ends_with('✓') || l.ends_with('✗'))
        .map(|l| &l[l.len() - 3..])
        .collect();
    assert_eq!(marks, ["✓", "✗", "✗", "✓"]);

    for name in ["example1.txt", "c4_pendant.txt"] {
        let o = run(&["check-ek", &graph(name), "--format", "json"]);
        assert_eq!(json(&o)["overall"], true, "{name}");
    }
}

#[test]
fn wheel_formula() {
    for k in ["2", "3"] {
        let o = run(&["wheel", "--k", k, "--verify"]);
        assert!(o.status.success());
        assert!(stdout(&o).ends_with("match\n"));
    }
    let o = run(&["wheel", "--k", "1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["wheel", "--k", "2", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["formula"]["totals"], serde_json::json!([8, 14, 9, 2]));
    assert!(v["match"].is_null());
}

#[test]
fn analyze_reports_every_cycle() {
    let o = run(&[
        "analyze",
        &graph("spoke_deleted_wheel_k3.txt"),
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    let cycles = v["cycles"].as_array().unwrap();
    assert_eq!(cycles.len(), 4);
    assert!(v["tool_version"].is_string());

    let o = run(&["analyze", &graph("example2.txt")]);
    let out = stdout(&o);
    assert!(out.contains("J∩K = <u1*u2*w1, u1*u4*w1, u1*u4*w2, u2*u3*w1, u2*u3*w2, u3*u4*w2>"));
    assert!(out.contains("verdict: no-splitting-function"));
}

#[test]
fn json_outputs_round_trip() {
    let o = run(&["betti", &graph("example2.txt"), "--format", "json"]);
    let text = stdout(&o);
    let t: cyclesplit::betti::BettiTable = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&t).unwrap() + "\n", text);
    assert!(!text.contains('|'));
}
