use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kn-plactic"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn p_symbol_contracts_to_one_box() {
    let o = run(&["p-symbol", "--type", "B", "--rank", "2", "1 2 -2"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn p_symbol_json_has_reading() {
    let o = run(&["p-symbol", "--type", "D", "--rank", "3", "--json", "3 -3 1 2"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reading"], "3 -3 1 2");
    assert_eq!(v["tableau"]["type"], "D");
    assert_eq!(v["tableau"]["columns"][0], serde_json::json!(["1", "2"]));
}

#[test]
fn explore_dot_has_ten_nodes() {
    let o = run(&["explore", "--type", "B", "--rank", "2", "--hw", "1 2", "--dot"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let nodes = out.lines().filter(|l| l.contains("[label") && !l.contains("->")).count();
    let edges = out.lines().filter(|l| l.contains("->")).count();
    assert_eq!((nodes, edges), (10, 10));
    let again = run(&["dot", "--type", "B", "--rank", "2", "--hw", "1 2"], None);
    assert_eq!(stdout(&again), out);
}

#[test]
fn spin_vertices_explore() {
    let o = run(&["explore", "--type", "D", "--rank", "4", "--hw", "[1 2 3 -4]", "--json"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 8);
}

#[test]
fn schensted_round_trip_through_stdin() {
    let o = run(&["schensted", "--type", "B", "--rank", "3", "--json", "2 0 -1 3 -3 1"], None);
    assert_eq!(o.status.code(), Some(0));
    let back = run(&["schensted", "--invert"], Some(&stdout(&o)));
    assert_eq!(stdout(&back), "2 0 -1 3 -3 1\n");
}

#[test]
fn congruence_and_split() {
    let o = run(&["congruent", "--type", "B", "--rank", "2", "1 2 -2", "1"], None);
    assert_eq!(stdout(&o), "true\n");
    let o = run(&["split", "--type", "D", "--rank", "8", "5 6 -8 8 -8 -6 -5 -2"], None);
    assert_eq!(stdout(&o), "lC: 1 3 4 7 -8 -6 -5 -2\nrC: 5 6 -8 -7 -4 -3 -2 -1\n");
    let o = run(&["split", "--type", "D", "--rank", "7", "--spin", "6 7 -7 7 -6"], None);
    assert_eq!(stdout(&o), "lC: [2 3 4 5 7 -6 -1]\nrC: [1 6 7 -5 -4 -3 -2]\n");
}

#[test]
fn jdt_trace_prints_nine_grids() {
    let input = r#"{"type":"B","rank":3,"columns":[["1","3"],["1","0","-3"],["2","-3","-2"]],"inner":[1,0,0]}"#;
    let o = run(&["jdt", "rectify", "--trace"], Some(input));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let blocks: Vec<&str> = out.split("\n\n").collect();
    assert_eq!(blocks.len(), 10);
    assert_eq!(blocks[0].split_whitespace().collect::<Vec<_>>().join(" "), "* * 1 1 1 2 1 1 2 -3 -3 -3 3 3 -3 -2 -2 -1");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["p-symbol", "--type", "B", "--rank", "2", "1 9"], None).status.code(), Some(1));
    assert_eq!(run(&["p-symbol", "--type", "D", "--rank", "2", "0"], None).status.code(), Some(1));
    assert_eq!(run(&["p-symbol", "--type", "B", "--rank", "33", "1"], None).status.code(), Some(2));
    assert_eq!(run(&["p-symbol", "--rank", "3", "1"], None).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(run(&["check", "eleven"], None).status.code(), Some(2));
    assert_eq!(run(&["split", "--type", "B", "--rank", "2", "1 -1"], None).status.code(), Some(1));
}

#[test]
fn check_accepts_names_and_numbers() {
    let by_name = run(&["check", "insertion-examples"], None);
    let by_number = run(&["check", "8"], None);
    assert_eq!(by_name.status.code(), Some(0));
    assert_eq!(stdout(&by_name), stdout(&by_number));
    assert!(stdout(&by_name).starts_with("[PASS] 8 insertion-examples"));
}

#[test]
fn output_is_deterministic() {
    let args = ["explore", "--type", "B", "--rank", "3", "--hw", "1 2 1", "--json"];
    assert_eq!(stdout(&run(&args, None)), stdout(&run(&args, None)));
    let seq = ["explore", "--type", "B", "--rank", "3", "--hw", "1 2 1", "--json", "--sequential"];
    assert_eq!(stdout(&run(&args, None)), stdout(&run(&seq, None)));
}
