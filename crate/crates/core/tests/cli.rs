use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn hyp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyp")).args(args).output().expect("spawn hyp")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

fn cycle(n: u32) -> String {
    (0..n).map(|i| format!("{} {}\n", i, (i + 1) % n)).collect()
}

#[test]
fn compute_on_a_twelve_cycle() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "c12.txt", &cycle(12));
    let o = hyp(&["compute", "--input", &f, "--max-dom-dist", "2", "--ratio", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("hyperbolicity: 3.0"), "{s}");
    assert!(s.contains("witness: "));
}

#[test]
fn ratio_of_one_is_rejected() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "c12.txt", &cycle(12));
    let o = hyp(&["compute", "--input", &f, "--ratio", "1.0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ratio must exceed 1"));
}

#[test]
fn approx_prints_a_certified_interval() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("grid.txt");
    let o = hyp(&["gen", "grid-perturbed", "--side", "12", "--seed", "5", "--output", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = hyp(&["compute", "--input", g.to_str().unwrap(), "--mode", "approx-pass1", "--max-dom-dist", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let lower: f64 = s.lines().find_map(|l| l.strip_prefix("hyperbolicity lower bound: ")).unwrap().parse().unwrap();
    let interval = s.lines().find_map(|l| l.strip_prefix("certified interval: ")).unwrap();
    assert_eq!(interval, format!("[{:.1}, {:.1}]", lower, lower + 8.0));
}

#[test]
fn oracle_on_a_small_grid() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.txt");
    assert_eq!(hyp(&["gen", "grid", "--rows", "3", "--cols", "3", "-o", g.to_str().unwrap()]).status.code(), Some(0));
    let o = hyp(&["oracle", "--input", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("hyperbolicity: 2.0"), "{}", stdout(&o));
    let o = hyp(&["compute", "--input", g.to_str().unwrap(), "--mode", "oracle"]);
    assert!(stdout(&o).contains("hyperbolicity: 2.0"));
}

#[test]
fn stats_of_an_eight_cycle() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "c8.txt", &cycle(8));
    let o = hyp(&["stats", "--input", &f]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("nodes: 8"));
    assert!(s.contains("edges: 8"));
    assert!(s.contains("eccentricity: radius 4 mean 4.00 diameter 4"), "{s}");
    assert!(s.contains("degree: min 2 mean 2.00 max 2"), "{s}");
}

#[test]
fn bcc_of_a_bowtie_keeps_one_triangle() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "bowtie.txt", "10 11\n11 12\n12 10\n12 13\n13 14\n14 12\n");
    let o = hyp(&["bcc", "--input", &f]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let mut labels: Vec<u64> = s
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .flat_map(|l| l.split_whitespace().map(|t| t.parse::<u64>().unwrap()).collect::<Vec<_>>())
        .collect();
    labels.sort_unstable();
    labels.dedup();
    assert_eq!(labels.len(), 3, "{s}");
    assert!(labels.contains(&12));
}

#[test]
fn witness_uses_input_labels() {
    let dir = TempDir::new().unwrap();
    let body: String = (0..6).map(|i| format!("{} {}\n", 100 + i, 100 + (i + 1) % 6)).collect();
    let f = write(dir.path(), "c6.txt", &body);
    let o = hyp(&["compute", "--input", &f]);
    let s = stdout(&o);
    let w = s.lines().find_map(|l| l.strip_prefix("witness: ")).unwrap();
    for t in w.split_whitespace() {
        let v: u64 = t.parse().unwrap();
        assert!((100..106).contains(&v), "{s}");
    }
}

#[test]
fn malformed_input_exits_with_parse_code() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "bad.txt", "0 1\n1 banana\n");
    assert_eq!(hyp(&["compute", "--input", &f]).status.code(), Some(2));
}

#[test]
fn missing_file_exits_with_io_code() {
    assert_eq!(hyp(&["compute", "--input", "/definitely/not/here.txt"]).status.code(), Some(1));
}

#[test]
fn disconnected_input_needs_bcc() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "two.txt", "0 1\n1 2\n2 0\n5 6\n6 7\n7 5\n");
    let o = hyp(&["compute", "--input", &f]);
    assert_eq!(o.status.code(), Some(2));
    let o = hyp(&["compute", "--input", &f, "--bcc"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("hyperbolicity: 0.0"));
}

#[test]
fn memory_budget_exit_code() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "c40.txt", &cycle(40));
    let o = hyp(&["compute", "--input", &f, "--max-dom-dist", "0", "--memory-budget", "10"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn stats_json_is_deterministic_apart_from_timings() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.txt");
    hyp(&["gen", "grid-perturbed", "--side", "10", "--seed", "3", "-o", g.to_str().unwrap()]);
    let mut docs = Vec::new();
    for i in 0..2 {
        let j = dir.path().join(format!("s{i}.json"));
        let o = hyp(&["compute", "--input", g.to_str().unwrap(), "--stats-json", j.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&j).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("timings").expect("timings present");
        v["config"].as_object_mut().unwrap().remove("stats_json");
        docs.push(v);
    }
    assert_eq!(docs[0], docs[1]);
    let v = &docs[0];
    assert_eq!(v["schema"], 1);
    assert!(v["delta"].as_str().unwrap().ends_with(".0") || v["delta"].as_str().unwrap().ends_with(".5"));
    assert!(v["levels"].as_array().unwrap().len() >= 2);
    assert_eq!(v["passes"].as_array().unwrap().len(), 2);
    assert!(v["cache"]["label_queries"].as_u64().unwrap() > 0);
    assert!(v["rng"].as_str().is_some());
}

#[test]
fn gen_is_reproducible() {
    let a = hyp(&["gen", "random", "-n", "30", "-p", "0.1", "--seed", "9"]);
    let b = hyp(&["gen", "random", "-n", "30", "-p", "0.1", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
