use std::process::{Command, Output};

fn kcore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kcore"))
        .args(args)
        .env_remove("KCORE_MAX_ENUM")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn partition_to_core() {
    let o = kcore(&["partition-to-core", "-k", "4", "4,2,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "6,2,1,1\n");
}

#[test]
fn core_to_partition_inverts() {
    let o = kcore(&["core-to-partition", "-k", "4", "9,5,3,2,1,1"]);
    assert_eq!(stdout(&o), "4,3,2,2,1,1\n");
    let o = kcore(&["core-to-partition", "-k", "2", "2,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
}

#[test]
fn covers_up_and_down() {
    let o = kcore(&["covers", "-k", "4", "4,2,1,1", "--direction", "up"]);
    assert_eq!(stdout(&o), "4,2,2,1\n4,2,1,1,1\n");
    assert_eq!(stderr(&o), "2 covers\n");
    let o = kcore(&["covers", "-k", "4", "4,2,1,1", "--direction", "down"]);
    assert_eq!(stdout(&o), "4,1,1,1\n4,2,1\n");
}

#[test]
fn phi_word() {
    let o = kcore(&["phi", "-k", "3", "3,2,2,1", "--format", "text"]);
    assert_eq!(stdout(&o), "1 3 2 0 3 2 1 0\n");
    let o = kcore(&["phi", "-k", "3", "-", "--format", "text"]);
    assert_eq!(stdout(&o), "\n");
}

#[test]
fn kconjugate_and_kskew() {
    let o = kcore(&["kconjugate", "-k", "4", "4,3,2,2,1,1"]);
    assert_eq!(stdout(&o), "3,2,2,1,1,1,1,1,1\n");
    let o = kcore(&["kskew", "-k", "4", "4,3,2,2,1,1", "--format", "json"]);
    assert_eq!(stdout(&o), "{\"k\":4,\"outer\":[9,5,3,2,1,1],\"inner\":[5,2,1]}\n");
}

#[test]
fn leq_non_example() {
    let o = kcore(&["leq", "-k", "3", "2,2", "3,2,1,1,1,1"]);
    assert_eq!(stdout(&o), "false\n");
    let o = kcore(&["leq", "-k", "3", "2,1", "3,2,1,1", "--format", "json"]);
    assert_eq!(stdout(&o), "true\n");
}

#[test]
fn standard_tableaux_and_words() {
    let o = kcore(&["tableaux", "-k", "3", "3,2,1,1", "--standard", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(stderr(&o), "4 tableaux\n");
    let o = kcore(&["word", "-k", "3", "1,2,3,4,5,7/4,5,7/6/7"]);
    assert_eq!(stdout(&o), "1 2 0 3 2 1 0\n");
    let o = kcore(&["tableau", "-k", "3", "1", "2", "0", "3", "2", "1", "0"]);
    assert_eq!(stdout(&o), "7\n6\n4 5 7\n1 2 3 4 5 7\n");
}

#[test]
fn semistandard_and_standardize() {
    let o = kcore(&["tableaux", "-k", "3", "3,3,2,1", "--evaluation", "1,3,1,2,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stderr(&o), "3 tableaux\n");
    let o = kcore(&["standardize", "-k", "3", "1,2,2,2,3,4,4,6/2,3,4,4,6/4,6/5"]);
    assert_eq!(stdout(&o), "8\n7 9\n4 5 6 7 9\n1 2 3 4 5 6 7 9\n");
    let o = kcore(&["tableaux", "-k", "3", "3,3,2,1", "--evaluation", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_output_round_trips_as_input() {
    let core = stdout(&kcore(&["partition-to-core", "-k", "4", "4,2,1,1", "--format", "json"]));
    assert_eq!(core, "{\"k\":4,\"shape\":[6,2,1,1]}\n");
    let back = kcore(&["core-to-partition", "-k", "4", core.trim(), "--format", "json"]);
    assert_eq!(stdout(&back), "[4,2,1,1]\n");
    let again = kcore(&["partition-to-core", "-k", "4", stdout(&back).trim(), "--format", "json"]);
    assert_eq!(stdout(&again), core);

    let ts = stdout(&kcore(&["tableaux", "-k", "3", "3,3,2,1", "--evaluation", "1,3,1,2,1,1", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&ts).unwrap();
    let first = serde_json::to_string(&v[0]).unwrap();
    let st = kcore(&["standardize", &first, "--format", "json"]);
    assert_eq!(st.status.code(), Some(0));
    let w = kcore(&["word", stdout(&st).trim(), "--format", "json"]);
    let t = kcore(&["tableau", "-k", "3", stdout(&w).trim(), "--format", "json"]);
    assert_eq!(stdout(&t), stdout(&st));
}

#[test]
fn chains_and_limits() {
    let o = kcore(&["chains", "-k", "3", "3,2,1,1"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    assert!(stdout(&o).starts_with("- 1 "));
    let o = Command::new(env!("CARGO_BIN_EXE_kcore"))
        .args(["chains", "-k", "3", "3,2,1,1"])
        .env("KCORE_MAX_ENUM", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn matrices() {
    let o = kcore(&["kostka", "-k", "2", "--n", "3", "--format", "json"]);
    assert_eq!(stdout(&o), "{\"n\":3,\"k\":2,\"index\":[[2,1],[1,1,1]],\"entries\":[[1,1],[0,1]]}\n");
    let o = kcore(&["kschur-h", "-k", "3", "--n", "3", "--format", "csv"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next().unwrap(), "\"\",\"3\",\"2,1\",\"1,1,1\"");
    assert_eq!(text.lines().nth(1).unwrap(), "\"3\",1,-1,1");
}

#[test]
fn hasse_dot() {
    let o = kcore(&["hasse", "-k", "2", "--n", "2", "--format", "dot"]);
    let text = stdout(&o);
    assert!(text.starts_with("digraph"));
    assert!(text.contains("rankdir=BT"));
    assert!(text.contains("p [label=\"∅\"]"));
    assert!(text.contains("p1 -> p1_1;"));
    let o = kcore(&["covers", "-k", "2", "1", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(kcore(&["no-such-command"]).status.code(), Some(64));
    assert_eq!(kcore(&["partition-to-core", "-k", "3", "1,,2"]).status.code(), Some(2));
    assert_eq!(kcore(&["partition-to-core", "-k", "3", "1,2"]).status.code(), Some(2));
    assert_eq!(kcore(&["partition-to-core", "-k", "3", "4,1"]).status.code(), Some(2));
    assert_eq!(kcore(&["partition-to-core", "-k", "0", "1"]).status.code(), Some(2));
    assert_eq!(kcore(&["partition-to-core", "1"]).status.code(), Some(2));
    let o = kcore(&["partition-to-core", "-k", "3", "4,1"]);
    assert_eq!(stderr(&o).lines().count(), 1);
}

#[test]
fn deterministic_output() {
    let a = kcore(&["tableaux", "-k", "3", "3,2,2,1", "--format", "json"]);
    let b = kcore(&["tableaux", "-k", "3", "3,2,2,1", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn check_suite() {
    let o = kcore(&["check", "--n", "8", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("15/15 suites passed"), "{last}");
}
