use std::io::Cursor;

use xnim::cli::{run, EXIT_INSUFFICIENT_BOUND, EXIT_OK, EXIT_OUT_OF_BOUND, EXIT_USAGE};

fn xnim(args: &[&str], input: &str) -> (i32, String, String) {
    let mut inp = Cursor::new(input.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("xnim").chain(args.iter().copied()), &mut inp, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).filter(|r| r.starts_with(' ')))
        .map(str::trim)
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

#[test]
fn query_reports() {
    let (code, out, _) = xnim(&["query", "10,19,24,26,26"], "");
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "class"), "PN");

    let (code, out, err) = xnim(&["query", "7,3,3,0,3"], "");
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("sorted to 0,3,3,3,7"));
    assert_eq!(field(&out, "outcome"), "P");

    let (_, out, _) = xnim(&["query", "0,0,0,1,1"], "");
    assert_eq!(field(&out, "outcome"), "N");
    assert_eq!(field(&out, "remoteness"), "1");
    assert_eq!(field(&out, "best_move"), "0,0,0,0,0");

    let (_, out, _) = xnim(&["query", "0,0,0,1,1", "--json"], "");
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["best_move"], serde_json::json!([0, 0, 0, 0, 0]));
}

#[test]
fn query_outside_bound() {
    let (code, _, err) = xnim(&["query", "1,2,3,4,50", "--bound", "20"], "");
    assert_eq!(code, EXIT_OUT_OF_BOUND);
    assert!(err.contains("--bound 50"));
    assert_eq!(xnim(&["query", "1,2,x,4,5"], "").0, EXIT_USAGE);
}

#[test]
fn solve_writes_tables() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e.xnim");
    let p = path.to_str().unwrap();
    let (code, out, _) = xnim(&["solve", "--game", "exact", "--n", "5", "--k", "2", "--bound", "12", "--out", p], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("6188 positions"), "{out}");
    assert!(xnim::persist::read_table(&path).unwrap().has_remoteness());

    let (code, out, _) = xnim(&["solve", "--game", "moore", "--n", "4", "--k", "2", "--bound", "0"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1 positions, 1 P-positions"));

    assert_eq!(xnim(&["solve", "--game", "exact", "--n", "5", "--k", "7", "--bound", "3"], "").0, EXIT_USAGE);
    assert_eq!(xnim(&["solve"], "").0, EXIT_USAGE);
}

#[test]
fn cache_and_no_solve() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let (code, _, err) = xnim(&["--no-solve", "--cache", cache, "query", "0,1,1,1,1"], "");
    assert_eq!(code, EXIT_USAGE, "{err}");
    assert_eq!(xnim(&["--cache", cache, "query", "0,1,1,1,1"], "").0, EXIT_OK);
    let (code, out, _) = xnim(&["--no-solve", "--cache", cache, "query", "0,1,1,1,1"], "");
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "class"), "PP");
    assert!(std::fs::read_dir(dir.path()).unwrap().count() >= 2);
}

#[test]
fn verify_commands() {
    let (code, out, err) = xnim(&["verify", "all", "--bound", "30"], "");
    assert_eq!(code, EXIT_OK, "{out}{err}");
    assert!(err.contains("props skipped"));
    assert!(!out.contains("[FAIL]"));

    let (code, out, _) = xnim(&["verify", "thm10", "--bound", "25", "--json"], "");
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    for key in ["check", "bound", "passed", "counterexamples", "stats"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["passed"], true);
    assert_eq!(v["bound"], 25);

    let (code, _, err) = xnim(&["verify", "props", "--bound", "30"], "");
    assert_eq!(code, EXIT_INSUFFICIENT_BOUND);
    assert!(err.contains("prop8") && err.contains("prop9"));

    let (code, _, _) = xnim(&["--threads", "2", "verify", "lemma11", "--bound", "20"], "");
    assert_eq!(code, EXIT_OK);
}

#[test]
fn verify_output_independent_of_threads() {
    let a = xnim(&["--threads", "1", "verify", "obs67", "--bound", "24", "--json"], "").1;
    let b = xnim(&["--threads", "3", "verify", "obs67", "--bound", "24", "--json"], "").1;
    assert_eq!(a, b);
}

#[test]
fn analyze_exports() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("f.csv");
    let (code, out, _) = xnim(&["analyze", "obs1", "--bound", "20", "--csv", csv.to_str().unwrap()], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("pn_share_of_p"));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().nth(1), Some("0,1,0,0,0,inf,0"));
    assert_eq!(text.lines().count(), 1 + 101);

    let dot = dir.path().join("g.dot");
    let jl = dir.path().join("g.jsonl");
    let (code, _, _) = xnim(
        &[
            "analyze",
            "exceptional",
            "--bound",
            "24",
            "--dot",
            dot.to_str().unwrap(),
            "--jsonl",
            jl.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code, EXIT_OK);
    assert!(std::fs::read_to_string(&dot).unwrap().contains("digraph exceptional"));
    assert!(std::fs::read_to_string(&jl).unwrap().lines().count() > 0);

    let (code, out, _) = xnim(&["analyze", "obs3", "--bound", "30", "--x1", "2"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("x1=2"));

    let (code, out, _) = xnim(&["analyze", "remoteness", "--bound", "12", "--json"], "");
    assert!(code == EXIT_OK || code == 1);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert!(v["histogram"]["overall"]["0"].as_u64().unwrap() > 0);
}

#[test]
fn play_sessions() {
    let (code, out, _) = xnim(&["play", "0,0,0,1,1", "--engine-first"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("engine plays 0,0,0,0,0"));
    assert!(out.contains("engine wins"));

    // a single-pile move is refused, then the human wins
    let (code, out, _) = xnim(&["play", "0,0,0,1,1"], "5 1\n4 5 1 1\n");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("rejected: a move reduces exactly 2 piles"));
    assert!(out.contains("you win"));

    // end of input stops cleanly
    let (code, out, _) = xnim(&["play", "2,3,4,5,6"], "garbage\n");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("rejected"));
    assert!(out.trim_end().ends_with("bye"));

    // from a P-position the engine plays a longest-delay reply
    let (_, out, _) = xnim(&["play", "0,1,2,3,4", "--engine-first"], "");
    assert!(out.contains("engine plays 0,1,1,1,4"), "{out}");
}
