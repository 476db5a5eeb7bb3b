use std::path::PathBuf;
use std::process::{Command, Output};

fn coxcfc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxcfc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with("  ")).map(str::trim))
        .unwrap_or_else(|| panic!("no `{key}` in\n{text}"))
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("coxcfc-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn check_affine_e6_word() {
    let o = coxcfc(&["check", "--system", "affE6", "--word", "1 3 2 4 3 5 4 6 0 3 2 6"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "reduced"), "yes");
    assert_eq!(field(&out, "FC"), "yes");
    assert_eq!(field(&out, "CFC"), "yes");
    assert_eq!(field(&out, "bands"), "none");
    assert!(field(&out, "logarithmic").starts_with("yes"));
}

#[test]
fn power_table_flags_the_drop() {
    let o = coxcfc(&["power", "--system", "affC2", "--word", "0 1 0 1 2", "--k", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("non-logarithmic: length drops at k=2"));
    let csv = stdout(&coxcfc(&["power", "--system", "affC2", "--word", "0 1 0 1 2", "--k", "2", "--format", "csv"]));
    assert_eq!(csv, "k,length,k_times_length\n1,5,5\n2,8,10\n");
}

#[test]
fn table_csv_rows() {
    let o = coxcfc(&["table", "--families", "A,B,D,E,F,H", "--max-rank", "7", "--format", "csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "family,rank,kind,count");
    for expect in ["A,3,FC,14", "B,3,FC,24", "D,4,FC,48", "H,3,FC,44", "F,4,FC,106", "E,6,FC,662", "E,7,CFC,634", "H,7,CFC,1008"] {
        assert!(rows.contains(&expect), "{expect}");
    }
    assert!(!rows.iter().any(|r| r.starts_with("A,8")));
    // Without --long the FC rows stop at rank 7.
    let out = stdout(&coxcfc(&["table", "--families", "H", "--max-rank", "9", "--format", "csv"]));
    assert!(out.contains("H,9,CFC,6909") && !out.contains("H,8,FC"));
    let out = stdout(&coxcfc(&["table", "--families", "H", "--max-rank", "9", "--long", "--format", "csv"]));
    assert!(out.contains("H,9,FC,182720"));
}

#[test]
fn graph_and_word_files() {
    let graph = temp_file("c2.txt", "# affine C2\nrank 3\nbond 0 1 4\nbond 1 2 4\n");
    let word = temp_file("w.txt", "# the counterexample\n0 1 0\n1 2\n");
    let o = coxcfc(&["power", "--graph-file", graph.to_str().unwrap(), "--word-file", word.to_str().unwrap(), "--k", "2", "--format", "csv"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).ends_with("2,8,10\n"));
    let o = coxcfc(&["reduce", "--system", "A 2", "--word", "1 2 1 2"]);
    assert_eq!(stdout(&o), "2 1\n");
}

#[test]
fn orientation_commands() {
    let out = stdout(&coxcfc(&["tutte", "--system", "affA 3"]));
    assert_eq!(field(&out, "T(2,0) acyclic orientations"), "14");
    assert_eq!(field(&out, "T(1,0) kappa classes"), "3");
    let out = stdout(&coxcfc(&["kappa", "--system", "affA 3"]));
    assert!(out.ends_with("3 kappa classes\n"));
    let out = stdout(&coxcfc(&["orientations", "--system", "D 4"]));
    assert!(out.ends_with("8 acyclic orientations\n"));
    let out = stdout(&coxcfc(&["conjugacy", "--system", "B 3"]));
    assert!(out.ends_with("1 conjugacy classes\n"));
}

#[test]
fn enumerate_modes() {
    let out = stdout(&coxcfc(&["enumerate", "--system", "H 4"]));
    assert_eq!(field(&out, "count"), "56");
    assert_eq!(field(&out, "exhaustive"), "yes");
    let out = stdout(&coxcfc(&["enumerate", "--system", "affA 2", "--max-length", "3", "--list"]));
    assert_eq!(field(&out, "count"), "16");
    assert_eq!(field(&out, "exhaustive"), "no");
    let out = stdout(&coxcfc(&["enumerate", "--system", "A 3", "--kind", "fc", "--list"]));
    assert_eq!(field(&out, "count"), "14");
    assert_eq!(out.lines().count(), 4 + 14);
}

#[test]
fn exit_codes() {
    let bad_graph = temp_file("bad.txt", "rank 2\nbond 0 1 one\n");
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["check", "--system", "Q 3", "--word", "1"], 2),
        (vec!["check", "--system", "A 3", "--word", "7"], 2),
        (vec!["check", "--graph-file", bad_graph.to_str().unwrap(), "--word", "0"], 2),
        (vec!["check", "--graph-file", "/nonexistent/graph", "--word", "0"], 2),
        (vec!["check", "--system", "A 3"], 2),
        (vec!["check", "--system", "A 3", "--graph-file", "x", "--word", "1"], 2),
        (vec!["enumerate", "--system", "affA 2"], 2),
        (vec!["table", "--families", "Z"], 2),
        (vec!["conjugacy", "--system", "affA 2"], 2),
        (vec!["conjugacy", "--system", "H 3", "--cap-group", "10"], 3),
        (vec!["check", "--system", "A 4", "--word", "1 2 1 3 2 1", "--cap-class", "2"], 3),
        (vec!["check", "--system", "A 3", "--word", "1 2"], 0),
    ];
    for (args, code) in cases {
        let o = coxcfc(&args);
        assert_eq!(o.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["table", "--max-rank", "5"],
        vec!["kappa", "--system", "affE 6"],
        vec!["enumerate", "--system", "affC 3", "--max-length", "5", "--list"],
        vec!["check", "--system", "H 3", "--word", "1 2 1 3 2", "--format", "csv"],
    ] {
        assert_eq!(coxcfc(&args).stdout, coxcfc(&args).stdout, "{args:?}");
    }
}
