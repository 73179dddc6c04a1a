use std::fs;
use std::process::{Command, Output};

fn bscurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bscurve")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn tree_at_infinity_json() {
    let o = bscurve(&["tree", "--flavor", "infinity", "-f", "(y-x^2)*x", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["flavor"], "infinity");
    let dirs = v["root"]["children"].as_array().unwrap();
    assert_eq!(dirs.len(), 1);
    let w: Vec<i64> = dirs[0]["children"].as_array().unwrap().iter().map(|l| l["edge_weight"].as_i64().unwrap()).collect();
    assert_eq!(w, vec![1, 2]);
}

#[test]
fn global_tree_dot_of_cusp() {
    let o = bscurve(&["tree", "--flavor", "global", "-f", "y^2-x^3", "--format", "dot"]);
    assert_eq!(code(&o), 0);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    for w in ["1", "2", "3"] {
        assert!(dot.contains(&format!("[label=\"{w}\"];")), "{dot}");
    }
}

#[test]
fn constant_input_is_rejected() {
    assert_eq!(code(&bscurve(&["tree", "--flavor", "infinity", "-f", "5"])), 2);
    assert_eq!(code(&bscurve(&["degree", "-f", "x +* y"])), 2);
}

#[test]
fn equivalence_decisions() {
    let o = bscurve(&["equiv", "--scope", "infinity", "x*y", "x^2+y^2-1"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "equivalent");
    assert_eq!(lines[1], lines[2]);

    let o = bscurve(&["equiv", "--scope", "global", "(y-x^4)*(y-x^2-x^4)", "(y-x^4)*(y-x^3-x^4)"]);
    assert_eq!(code(&o), 0);

    let o = bscurve(&["equiv", "--scope", "infinity", "y", "x^2+y^2-1"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("not-equivalent\n"));
}

#[test]
fn invariants_reports() {
    let o = bscurve(&["invariants", "-f", "y^2-x^3", "--at", "0,0"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["k_vector"], serde_json::json!([2]));
    assert_eq!(v["delta"], 1);
    assert_eq!(v["milnor"], 2);
    assert_eq!(v["lne"], false);

    let o = bscurve(&["invariants", "-f", "x^2+y^2-1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["degree"], 2);
    assert_eq!(v["lne"], true);
    assert_eq!(v["components"][0]["euler_characteristic"], 0);

    let o = bscurve(&["invariants", "-f", "x*y", "--at", "infinity"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let lines = v["lines"].as_array().unwrap();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l["weights"] == serde_json::json!([1])));

    assert_eq!(code(&bscurve(&["invariants", "-f", "y-x^2", "--at", "1,2"])), 2);
}

#[test]
fn normal_forms() {
    let o = bscurve(&["normal-form", "extract", "-f", "(y-x^2)*x"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("[[1,2]]"));
    let o = bscurve(&["normal-form", "realize", "--data", "[[1]]"]);
    assert_eq!(stdout(&o), "1 - y - x\n");
    assert_eq!(code(&bscurve(&["normal-form", "realize", "--data", "[[2,1]]"])), 5);
    assert_eq!(code(&bscurve(&["normal-form", "realize", "--data", "[[1,2],[1]]"])), 5);
}

#[test]
fn non_squarefree_input_proceeds_with_a_warning() {
    let o = bscurve(&["degree", "-f", "x^2*y"]);
    assert_eq!(code(&o), 3);
    assert_eq!(stdout(&o), "2\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("squarefree"));
}

#[test]
fn unsupported_inputs() {
    assert_eq!(code(&bscurve(&["lne", "-f", "x*(x-1)"])), 4);
    assert_eq!(code(&bscurve(&["tree", "--flavor", "global", "-f", "x^2+y^2"])), 4);
    let o = bscurve(&["--timeout-ms", "1", "tree", "--flavor", "global", "-f", "(y^3-x^7)*(y^2-x^5)*(x^4+y^4-1)*(y-x^9-3)"]);
    assert_eq!(code(&o), 4);
}

#[test]
fn lne_and_degree() {
    assert_eq!(stdout(&bscurve(&["lne", "-f", "x*y"])), "true\n");
    assert_eq!(stdout(&bscurve(&["lne", "-f", "y^2-x^3"])), "false\n");
    assert_eq!(stdout(&bscurve(&["degree", "-f", "y^2-x^3"])), "3\n");
    assert_eq!(stdout(&bscurve(&["--vars", "u,v", "degree", "-f", "u*v^2 - 1"])), "3\n");
}

#[test]
fn branch_list_input() {
    let dir = std::env::temp_dir().join(format!("bscurve-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("twisted.json");
    // a space curve with one end of relative multiplicity 3
    fs::write(&path, r#"{"degree": 3, "ends": [{"direction": [0,0,0,0,1,0], "k": 3}], "euler_characteristic": 1}"#).unwrap();
    let p = path.to_str().unwrap();
    let o = bscurve(&["tree", "--flavor", "infinity", "--branches", p]);
    assert_eq!(code(&o), 0);
    let o = bscurve(&["equiv", "--scope", "infinity", &format!("@{p}"), "y - x^3"]);
    assert_eq!(stdout(&o).lines().next(), Some("equivalent"));
    let o = bscurve(&["equiv", "--scope", "global", &format!("@{p}"), "y - x^3"]);
    assert_eq!(code(&o), 0);
    fs::write(&path, r#"{"degree": 2, "ends": [{"direction": [1,0], "k": 3}]}"#).unwrap();
    assert_eq!(code(&bscurve(&["tree", "--branches", p])), 2);
}

#[test]
fn batch_is_ordered_and_deterministic() {
    let dir = std::env::temp_dir().join(format!("bscurve-batch-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("curves.txt");
    fs::write(&path, "x*y\n# comment\ny^2-x^3\nx^2+y^2-1\n(y-x^2)*x\ny\n").unwrap();
    let p = path.to_str().unwrap();
    let a = bscurve(&["batch", "--jobs", "4", p]);
    let b = bscurve(&["batch", "--jobs", "1", p]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<serde_json::Value> = stdout(&a).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[1]["input"], "y^2-x^3");
    assert_eq!(lines[0]["infinity_code"], lines[2]["infinity_code"]);
}
