use std::path::PathBuf;
use std::process::{Command, Output};

use treerecon::cli::{dispatch, EXIT_OK, EXIT_USAGE};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treerecon")).args(args).env_remove("TREERECON_JOBS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_count_only() {
    let o = run(&["enumerate", "--n", "4", "--count-only"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn enumerate_blocks() {
    let o = run(&["enumerate", "--n", "4"]);
    assert_eq!(stdout(&o), "4\n0 1\n0 2\n0 3\n\n4\n0 1\n0 2\n2 3\n");
    let trees = treerecon::tree::parse_tree_blocks(&stdout(&o)).unwrap();
    assert_eq!(trees.len(), 2);
}

#[test]
fn enumerate_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trees.txt");
    let o = run(&["enumerate", "--n", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert_eq!(treerecon::tree::parse_tree_blocks(&text).unwrap().len(), 6);
}

#[test]
fn deck_golden() {
    let o = run(&["deck", "--tree", &fixture("broom.tree")]);
    assert_eq!(stdout(&o), "2× (()(()))\n1× (()()())\n1× ();(()())\n1× ();();(())\n");
}

#[test]
fn brushes_golden() {
    let o = run(&["brushes", "--tree", &fixture("broom.tree")]);
    assert_eq!(stdout(&o), "root=2 k=2 leaves=0,1\nroot=3 k=1 leaves=4\n");
}

#[test]
fn reconstruct_p4() {
    let o = run(&["reconstruct", "--card-u", &fixture("p3.tree"), "--card-v", &fixture("k1p2.forest"), "--checked"]);
    assert_eq!(o.status.code(), Some(0));
    let t = treerecon::Tree::parse(&stdout(&o)).unwrap();
    assert!(treerecon::isomorphic(&t, &treerecon::Tree::path(4).unwrap()));
}

#[test]
fn reconstruct_no_candidate_exits_two() {
    let o = run(&["reconstruct", "--card-u", &fixture("k13.tree"), "--card-v", &fixture("k1x4.forest")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no attachment"));
}

#[test]
fn crn_lines() {
    let o = run(&["crn", "--tree", &fixture("p6.tree")]);
    assert_eq!(stdout(&o), "tree=((())((()))) crn=2 witness=(());(()()),(());(()())\n");
    let o = run(&["crn", "--n", "5"]);
    assert_eq!(
        stdout(&o),
        "tree=((())(())) crn=1 witness=(());(())\n\
         tree=(()(()())) crn=1 witness=();();(())\n\
         tree=(()()()()) crn=1 witness=();();();()\n"
    );
    assert_eq!(run(&["crn", "--n", "5", "--tree", &fixture("p6.tree")]).status.code(), Some(2));
    assert_eq!(run(&["crn"]).status.code(), Some(2));
}

#[test]
fn verify_hp0_clean() {
    let o = run(&["verify", "hp0", "--n", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "suite=hp0-leaf n=10 trees=106 vertices=556 violations=0\n\
         suite=hp0-near-leaf n=10 trees=106 vertices=249 violations=0\n"
    );
}

#[test]
fn verify_conjecture_reports_histogram() {
    let o = run(&["verify", "conjecture", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "suite=conjecture n=8 trees=23 violations=0\nhistogram n=8 1:4 2:19 max=2\n");
}

#[test]
fn verify_thm1_range() {
    let o = run(&["verify", "thm1", "--from", "4", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
    assert_eq!(run(&["verify", "thm1", "--from", "7", "--n", "6"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "thm1", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn search_smallest() {
    let o = run(&["search", "nonrecognizable", "--n", "8", "--smallest"]);
    let text = stdout(&o);
    assert!(text.starts_with("search=nonrecognizable n=5 witnesses=4\n"), "{text}");
    assert!(text.lines().skip(1).all(|l| l.ends_with("verified=true")));
    let o = run(&["search", "ambiguous", "--n", "8", "--smallest"]);
    assert!(stdout(&o).starts_with("search=ambiguous n=4 families=1\n"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--n", "21"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--n", "21", "--cap", "21", "--count-only"]).status.code(), Some(0));
    assert_eq!(run(&["deck", "--tree", &fixture("bad.tree")]).status.code(), Some(2));
    assert_eq!(run(&["deck", "--tree", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense", "--n", "5"]).status.code(), Some(2));
    assert_eq!(run(&["--jobs", "0", "enumerate", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn every_subcommand_has_help() {
    for sub in ["enumerate", "deck", "brushes", "reconstruct", "crn", "verify", "search"] {
        let o = run(&[sub, "--help"]);
        assert_eq!(o.status.code(), Some(0), "{sub}");
        assert!(stdout(&o).contains("Usage"), "{sub}");
    }
}

#[test]
fn jobs_env_sets_the_default() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_treerecon"))
        .args(["verify", "thm1", "--n", "9"])
        .env("TREERECON_JOBS", "3")
        .output()
        .unwrap();
    let with_flag = run(&["verify", "thm1", "--n", "9", "--jobs", "2"]);
    assert_eq!(with_env.stdout, with_flag.stdout);
    let bad_env = Command::new(env!("CARGO_BIN_EXE_treerecon"))
        .args(["verify", "thm1", "--n", "9", "--jobs", "1"])
        .env("TREERECON_JOBS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
}

#[test]
fn in_process_dispatch() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    assert_eq!(dispatch(["treerecon", "enumerate", "--n", "7", "--count-only"], &mut out, &mut err), EXIT_OK);
    assert_eq!(out, b"11\n");
    let mut out = Vec::new();
    assert_eq!(dispatch(["treerecon", "bogus"], &mut out, &mut err), EXIT_USAGE);
    assert!(out.is_empty());
}
