use std::path::Path;
use std::process::{Command, Output};

use lattice_loom::generators::corpus::{digraph_corpus, two_level_corpus, DEFAULT_SEED};
use lattice_loom::generators::{crown, dl_construction};
use lattice_loom_cli::dot::{export_dot, DotOptions};
use lattice_loom_cli::io::{load, save, Structure};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lattice-loom")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    cli(args).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(cli(args).stdout).unwrap()
}

const BOWTIE: &str = r#"{"kind":"poset","n":6,"edges":[[0,3],[0,4],[1,3],[1,4],[1,5],[2,4],[2,5]],"labels":["x","y","z","u","v","w"]}"#;

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn corpus_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    for e in two_level_corpus(DEFAULT_SEED) {
        let s = Structure::Poset(e.item);
        save(&s, &path).unwrap();
        assert_eq!(load(&path).unwrap(), s, "{}", e.name);
    }
    for e in digraph_corpus() {
        let s = Structure::Digraph(e.item);
        save(&s, &path).unwrap();
        assert_eq!(load(&path).unwrap(), s, "{}", e.name);
    }
}

#[test]
fn generated_files_load_back() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    let out = out.to_str().unwrap();
    for args in [&["crown", "3"][..], &["fano-complement"], &["directed-tree", "2", "2", "2"], &["generic", "2"]] {
        let mut full = vec!["gen"];
        full.extend(args);
        full.extend(["-o", out]);
        assert_eq!(code(&full), 0, "{args:?}");
        load(Path::new(out)).unwrap();
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bowtie = write(dir.path(), "bowtie.json", BOWTIE);
    assert_eq!(code(&["check", &bowtie, "--property", "connected"]), 0);
    assert_eq!(code(&["check", &bowtie, "--property", "cycle-free"]), 1);
    assert_eq!(code(&["check", &bowtie, "--property", "no-such-property"]), 2);
    assert_eq!(code(&["complete", "/nonexistent/file.json"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["gen", "no-such-family"]), 2);
    let cyclic = write(dir.path(), "cyclic.json", r#"{"kind":"poset","n":2,"edges":[[0,1],[1,0]]}"#);
    let out = cli(&["ram", &cyclic]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("asymmetry"));
    assert_eq!(code(&["claims", "--filter", "nonexistent"]), 0);
    assert_eq!(code(&["claims", "--filter", "bowtie-*"]), 0);
}

#[test]
fn completion_and_intervals_of_the_bowtie() {
    let dir = tempfile::tempdir().unwrap();
    let bowtie = write(dir.path(), "bowtie.json", BOWTIE);
    let text = stdout(&["complete", &bowtie]);
    assert!(text.starts_with("elements 8 (original 6, added 2)"), "{text}");
    let text = stdout(&["interval", &bowtie, "y", "v"]);
    assert!(text.starts_with("elements 4"), "{text}");
    let text = stdout(&["ram", &bowtie]);
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn completed_bowtie_dot_has_two_open_nodes() {
    let dir = tempfile::tempdir().unwrap();
    let bowtie = write(dir.path(), "bowtie.json", BOWTIE);
    let dot = stdout(&["export-dot", &bowtie, "--completion"]);
    let nodes: Vec<&str> = dot.lines().filter(|l| l.trim_start().starts_with('n') && l.contains("[label")).collect();
    assert_eq!(nodes.len(), 8);
    assert_eq!(nodes.iter().filter(|l| l.contains("style=solid")).count(), 2);
    assert_eq!(dot, stdout(&["export-dot", &bowtie, "--completion"]));
}

#[test]
fn dl_window_dot_ranks_by_level() {
    let d = dl_construction(&crown(3).unwrap(), 2).unwrap();
    let levels: std::collections::BTreeSet<i64> = d.levels().unwrap().iter().copied().collect();
    let dot = export_dot(&Structure::Digraph(d), &DotOptions::default());
    assert_eq!(dot.matches("rank=same").count(), levels.len());
    assert!(dot.contains("style=dashed"));
}

#[test]
fn dl_and_reach_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let delta = dir.path().join("c6.json");
    let window = dir.path().join("dl.json");
    let (delta, window) = (delta.to_str().unwrap(), window.to_str().unwrap());
    assert_eq!(code(&["gen", "crown", "3", "-o", delta]), 0);
    assert_eq!(code(&["dl", delta, "--radius", "3", "-o", window]), 0);
    let text = stdout(&["reach", window]);
    assert!(text.contains("complete classes isomorphic true"), "{text}");
    assert_eq!(code(&["check", window, "--property", "p-properties", "--delta", delta]), 0);
    assert_eq!(code(&["check", window, "--property", "p-properties"]), 2);
    assert_eq!(code(&["dl", delta, "--radius", "2", "--shuffle", "7", "-o", window]), 0);
    assert_eq!(code(&["check", window, "--property", "intersection"]), 0);
}
