use std::path::PathBuf;
use std::process::{Command, Output};

fn sr_depth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sr-depth"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sr-depth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn example_c6_with_powers() {
    let o = sr_depth(&["example", "--name", "c6", "--powers"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("depth S/I(G^c) = 2"));
    assert!(text.contains("depth S/I(G^c)^(2) = 1"));
    assert!(text.contains("depth S/I(G^c)^2 = 0"));
}

#[test]
fn betti_csv_for_c4() {
    let path = scratch("c4.edges", "4\n1 2\n2 3\n3 4\n4 1\n");
    let o = sr_depth(&["betti", "--input", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "i,j,beta\n0,0,1\n1,2,2\n2,4,1\n");
}

#[test]
fn graph6_input_by_extension() {
    // C4 and K4.
    let path = scratch("two.g6", "Cr\nC~\n");
    let o = sr_depth(&["kappa", "--input", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[2].ends_with(",4,3,\"\""));
}

#[test]
fn ideal_depth_from_file() {
    let path = scratch("ideal.txt", "# C5 edges\nx1*x2\nx2*x3\nx3*x4\nx4*x5\nx5*x1\n");
    let o = sr_depth(&["ideal-depth", "--ideal", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("depth S/I = 2"));
}

#[test]
fn fuzz_passes_and_search_reports() {
    let o = sr_depth(&["fuzz", "--n", "6", "--count", "30", "--seed", "42", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 31);
    let o = sr_depth(&["search-depth2", "--n", "4", "--budget", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cap 2 attained"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(sr_depth(&["depth"]).status.code(), Some(2));
    assert_eq!(sr_depth(&["depth", "--name", "c6", "--bogus"]).status.code(), Some(2));
    let o = sr_depth(&["depth", "--name", "c6", "--field", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--field"));
    let o = sr_depth(&["depth", "--name", "c6", "--max-vars", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-vars"));
    let o = sr_depth(&["depth", "--input", "/nonexistent/graph.edges"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--input"));
    let bad = scratch("bad.edges", "3\n1 4\n");
    let o = sr_depth(&["depth", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn json_echoes_guards_and_field() {
    let o = sr_depth(&[
        "depth",
        "--name",
        "fig1",
        "--format",
        "json",
        "--max-vars",
        "10",
        "--field",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["guards"]["max_vars"], 10);
    assert_eq!(v["field"], 0);
    assert_eq!(v["results"][0]["result"]["depth"], 4);
}
