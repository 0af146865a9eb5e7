use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use dimatch::generators::petersen;
use dimatch::io::{
    parse_certificate, parse_graph, parse_labels, parse_list_assignment, parse_partition, Format,
};

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Scratch {
        let dir = std::env::temp_dir().join(format!("dimatch-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn dimatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dimatch"))
        .args(args)
        .output()
        .unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generated_petersen_matches_library() {
    let o = dimatch(&["gen", "petersen"]);
    assert_eq!(o.status.code(), Some(0));
    let g = parse_graph(&stdout(&o), Format::EdgeList).unwrap();
    assert_eq!(g, petersen());
}

#[test]
fn dimacs_output_and_input() {
    let tmp = Scratch::new("dimacs");
    let f = tmp.path("c6.col");
    let o = dimatch(&["gen", "cycle", "--n", "6", "--format", "dimacs", "-o", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&f).unwrap();
    assert!(text.starts_with("p edge 6 6\ne 1 2\n"));
    let o = dimatch(&["dim", "size", "--format", "dimacs", s(&f)]);
    assert_eq!(stdout(&o), "2\n");
    // reading dimacs as an edge list is an input error
    assert_eq!(dimatch(&["dim", "size", s(&f)]).status.code(), Some(2));
}

#[test]
fn c4_has_no_dim() {
    let tmp = Scratch::new("c4");
    let f = tmp.path("c4.g");
    dimatch(&["gen", "cycle", "--n", "4", "-o", s(&f)]);
    let o = dimatch(&["dim", "find", s(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "no DIM\n");
    assert_eq!(dimatch(&["dim", "size", s(&f)]).status.code(), Some(1));
    assert_eq!(dimatch(&["partition", "find", s(&f)]).status.code(), Some(1));
    let o = dimatch(&["verify", "all", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exists = false"));
}

#[test]
fn enumeration_lists_every_dim() {
    let tmp = Scratch::new("enum");
    let f = tmp.path("c6.g");
    dimatch(&["gen", "cycle", "--n", "6", "-o", s(&f)]);
    let o = dimatch(&["dim", "enum", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "count 3\n\n0-1\n3-4\n\n0-5\n2-3\n\n1-2\n4-5\n"
    );
}

#[test]
fn budget_exhaustion_exits_three() {
    let tmp = Scratch::new("budget");
    let f = tmp.path("c30.g");
    dimatch(&["gen", "cycle", "--n", "30", "-o", s(&f)]);
    let o = dimatch(&["dim", "enum", s(&f), "--budget", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dimatch(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(dimatch(&["gen", "cycle", "--n", "2"]).status.code(), Some(2));
    assert_eq!(dimatch(&["dim", "size", "/nonexistent/graph"]).status.code(), Some(2));
    assert_eq!(dimatch(&["sweep", "--max-n", "9"]).status.code(), Some(2));
    assert_eq!(dimatch(&["sweep"]).status.code(), Some(2));
}

#[test]
fn emitted_files_read_back() {
    let tmp = Scratch::new("roundtrip");
    let (g, p, l) = (tmp.path("g"), tmp.path("p"), tmp.path("l"));
    let o = dimatch(&[
        "gen", "kneser-family", "--r", "3", "--with-partition", "-o", s(&g),
        "--partition-out", s(&p), "--labels-out", s(&l),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let graph = parse_graph(&std::fs::read_to_string(&g).unwrap(), Format::EdgeList).unwrap();
    let part = parse_partition(&graph, &std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(part.num_classes(), 5);
    assert_eq!(parse_labels(&std::fs::read_to_string(&l).unwrap()).unwrap().len(), 10);

    let o = dimatch(&["partition", "verify", "--partition", s(&p), s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "valid = true\nclass_count_ok = true\nregularity = regular\n"
    );

    let lists = tmp.path("lists");
    let o = dimatch(&["partition", "find", s(&g), "--lists-out", s(&lists)]);
    assert_eq!(o.status.code(), Some(0));
    let found = parse_partition(&graph, &stdout(&o)).unwrap();
    assert_eq!(found.num_classes(), 5);
    let la = parse_list_assignment(&std::fs::read_to_string(&lists).unwrap(), 5).unwrap();
    assert!(la.lists().iter().all(|x| x.len() == 2));

    let cert = tmp.path("cert");
    let o = dimatch(&["dim", "find", s(&g), "--certificate", s(&cert)]);
    assert_eq!(o.status.code(), Some(0));
    let m = parse_certificate(&graph, &std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(m.len(), 3);
    let o = dimatch(&["dim", "check", s(&g), "--certificate", s(&cert)]);
    assert_eq!(stdout(&o), "valid-dim\n");
}

#[test]
fn bad_partition_is_reported() {
    let tmp = Scratch::new("badpart");
    let (g, p) = (tmp.path("g"), tmp.path("p"));
    dimatch(&["gen", "cycle", "--n", "6", "-o", s(&g)]);
    std::fs::write(&p, "classes 2\n0 1 1\n0 5 2\n1 2 2\n2 3 1\n3 4 2\n4 5 1\n").unwrap();
    let o = dimatch(&["partition", "verify", "--partition", s(&p), s(&g)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("valid = false\n"));
}

#[test]
fn json_report_mirrors_text_report() {
    let tmp = Scratch::new("json");
    let f = tmp.path("p.g");
    dimatch(&["gen", "petersen", "-o", s(&f)]);
    let text = stdout(&dimatch(&["verify", "all", s(&f)]));
    let json = stdout(&dimatch(&["verify", "report", s(&f)]));
    assert!(text.contains("size = 3\n"));
    assert!(json.contains("\"dim_size\": 3"));
    assert_eq!(text.matches("[check.").count(), json.matches("\"name\":").count());
}

#[test]
fn small_sweep_is_clean() {
    let tmp = Scratch::new("sweep");
    let o = dimatch(&["sweep", "--max-n", "4", "--dump-dir", s(&tmp.path("dump"))]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("graphs = 44\n"));
    assert!(out.contains("counterexamples = 0\n"));
    let c4 = out
        .lines()
        .find_map(|l| l.strip_prefix("without_dim_with_c4 = "))
        .unwrap();
    assert!(c4.parse::<usize>().unwrap() > 0);
    assert!(!tmp.path("dump").exists());
}

#[test]
fn stdin_input() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_dimatch"))
        .args(["dim", "size", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"2 1\n0 1\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "1\n");
}
