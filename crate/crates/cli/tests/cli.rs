//! End-to-end behavior of the binary: exit codes, output formats,
//! determinism of exports, and flag plumbing.

use std::process::{Command, Output};

fn comotion(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comotion"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = comotion(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_lists_and_counts() {
    let text = stdout_of(&["enumerate", "--space", "q:2,2"]);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().next().unwrap().starts_with('['));
    let count = stdout_of(&["enumerate", "--space", "q:3,3", "--count"]);
    assert_eq!(count.trim(), "20");
    let seqs = stdout_of(&["enumerate", "--space", "lbseq:2,4:1,3"]);
    assert_eq!(seqs.lines().count(), 5);
}

#[test]
fn orbits_text_matches_the_worked_partition() {
    let text = stdout_of(&[
        "orbits", "--space", "q:2,2", "--action", "comotion", "--nu", "1,2",
    ]);
    assert!(text.contains("orbit sizes: [4, 2]"));
    assert!(text.contains("orbit 1 (size 4): [0,0] [1,1] [2,2] [2,0]"));
    assert!(text.contains("orbit 2 (size 2): [1,0] [2,1]"));
}

#[test]
fn orbits_json_reparses_and_matches_the_library() {
    let json = stdout_of(&[
        "orbits", "--space", "q:2,2", "--action", "comotion", "--nu", "1,2", "--format", "json",
    ]);
    let doc = comotion_core::ReportDoc::from_json(&json).unwrap();
    assert_eq!(doc.space, "q:2,2");
    assert_eq!(doc.action, "comotion");
    assert_eq!(doc.nu, vec![1, 2]);
    assert_eq!(doc.orbit_sizes, vec![4, 2]);
    let space: comotion_core::StateSpace = "q:2,2".parse().unwrap();
    let report = comotion_core::orbit_partition(
        &space,
        &comotion_core::Action::Comotion(comotion_core::Perm::identity(2)),
    )
    .unwrap();
    assert_eq!(doc.orbit_sizes, report.orbit_sizes());
    assert!(doc.stamp.is_none());
}

#[test]
fn exports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.json");
    let p2 = dir.path().join("b.json");
    for (path, _) in [(&p1, 0), (&p2, 1)] {
        let out = comotion(&[
            "homomesy",
            "--space",
            "q:2,2",
            "--action",
            "comotion",
            "--nu",
            "1,2",
            "--stat",
            "size",
            "--stat",
            "s:2",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    let a = std::fs::read(&p1).unwrap();
    let b = std::fs::read(&p2).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn homomesy_exit_codes_and_csv() {
    // homomesic: exit 0, constant 1/2
    let text = stdout_of(&[
        "homomesy", "--space", "seq:2,4", "--action", "winch", "--nu", "1,2", "--stat", "f:1",
    ]);
    assert!(text.contains("stat f:1: homomesic, constant 1/2"));

    // counterexample: exit 1 with a witness pair
    let out = comotion(&[
        "homomesy", "--space", "q:2,2", "--action", "comotion", "--nu", "1,2", "--stat", "g:1,1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("NOT homomesic"));

    // csv: one row per (statistic, orbit) pair
    let csv = stdout_of(&[
        "homomesy", "--space", "q:2,2", "--action", "comotion", "--nu", "1,2", "--stat", "size",
        "--format", "csv",
    ]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "statistic,orbit,orbit_size,average,homomesic,constant");
    assert_eq!(lines.len(), 3);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["enumerate", "--space", "q:0,2"],
        vec!["enumerate", "--space", "what:3"],
        vec!["orbits", "--space", "q:2,2", "--action", "comotion", "--nu", "1,3"],
        vec!["orbits", "--space", "seq:2,4", "--action", "comotion", "--nu", "1,2"],
        vec![
            "homomesy", "--space", "q:2,2", "--action", "comotion", "--nu", "1,2", "--stat",
            "bogus",
        ],
        vec![
            "homomesy", "--space", "q:2,2", "--action", "comotion", "--nu", "1,2", "--stat",
            "f:1",
        ],
        vec![
            "orbits", "--space", "q:2,2", "--action", "rowmotion", "--nu", "1,2",
        ],
        vec!["board", "--space", "q:2,2", "--seed", "[0,0]"],
        vec!["orbits", "--space", "q:2,2"],
    ] {
        let out = comotion(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn rowmotion_and_promotion_actions_work() {
    let row = stdout_of(&["orbits", "--space", "q:3,2", "--action", "rowmotion"]);
    let pro = stdout_of(&["orbits", "--space", "q:3,2", "--action", "promotion"]);
    let com = stdout_of(&[
        "orbits", "--space", "q:3,2", "--action", "comotion", "--nu", "3,2,1",
    ]);
    let sizes = |s: &str| {
        s.lines()
            .find(|l| l.starts_with("orbit sizes"))
            .unwrap()
            .to_string()
    };
    assert_eq!(sizes(&row), sizes(&pro));
    assert_eq!(sizes(&row), sizes(&com));
}

#[test]
fn all_nu_sweeps() {
    let text = stdout_of(&[
        "orbits", "--space", "q:2,2", "--action", "comotion", "--all-nu",
    ]);
    assert!(text.contains("identical across 2 orderings"));
    let text = stdout_of(&[
        "homomesy", "--space", "q:2,2", "--action", "comotion", "--all-nu", "--stat", "size",
    ]);
    assert!(text.contains("homomesic under all 2 orderings, constant 2"));
    // wrong format for the sweep is a usage error
    let out = comotion(&[
        "orbits", "--space", "q:2,2", "--action", "comotion", "--all-nu", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nu_order_example_reproduces_the_worked_pass() {
    // under the example reading, one pass ordered by (2,3,1,4) sends
    // (2,3,5,7) to (1,4,6,7); under the definitional reading to (3,4,6,7)
    let board = stdout_of(&[
        "board", "--space", "seq:4,7", "--seed", "2,3,5,7", "--nu", "2,3,1,4", "--nu-order",
        "example", "--no-snakes",
    ]);
    let rows: Vec<&str> = board.lines().collect();
    assert_eq!(rows[0].split_whitespace().collect::<Vec<_>>(), ["2", "3", "5", "7"]);
    assert_eq!(rows[1].split_whitespace().collect::<Vec<_>>(), ["1", "4", "6", "7"]);
    let board = stdout_of(&[
        "board", "--space", "seq:4,7", "--seed", "2,3,5,7", "--nu", "2,3,1,4", "--no-snakes",
    ]);
    let rows: Vec<&str> = board.lines().collect();
    assert_eq!(rows[1].split_whitespace().collect::<Vec<_>>(), ["3", "4", "6", "7"]);
}

#[test]
fn board_formats() {
    // ascii with snakes: 4 rows, letters A/B
    let ascii = stdout_of(&["board", "--space", "seq:2,4", "--seed", "1,2"]);
    assert_eq!(ascii.lines().count(), 4);
    assert!(ascii.contains('A') && ascii.contains('B'));

    // zero-winching board renders zeros as dots, 6 rows for the worked seed
    let wz = stdout_of(&["board", "--space", "zseq:3", "--seed", "0,0,1"]);
    assert_eq!(wz.lines().count(), 6);
    assert!(wz.contains('.'));

    // plain overlay-free grid has no letters
    let plain = stdout_of(&[
        "board", "--space", "seq:2,4", "--seed", "1,2", "--no-snakes",
    ]);
    assert!(!plain.contains('A'));

    let svg = stdout_of(&[
        "board", "--space", "seq:2,4", "--seed", "1,2", "--format", "svg",
    ]);
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("</svg>"));
    assert!(svg.contains("rect"));

    let json = stdout_of(&[
        "board", "--space", "seq:2,4", "--seed", "1,2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["period"], 4);
    assert_eq!(v["snakes"].as_array().unwrap().len(), 2);
    assert_eq!(v["rows"][0], serde_json::json!([1, 2]));

    // lower-bound boards work end to end
    let lb = stdout_of(&[
        "board", "--space", "lbseq:2,4:1,3", "--seed", "1,3", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&lb).unwrap();
    assert_eq!(v["action"], "winch_lb");
}

#[test]
fn stamp_changes_the_json_but_only_when_asked() {
    let a = stdout_of(&[
        "orbits", "--space", "q:2,2", "--action", "rowmotion", "--format", "json",
    ]);
    assert!(!a.contains("stamp"));
    let b = stdout_of(&[
        "orbits", "--space", "q:2,2", "--action", "rowmotion", "--format", "json", "--stamp",
    ]);
    assert!(b.contains("stamp"));
}

#[test]
fn verify_respects_caps_and_jobs() {
    let out = comotion(&[
        "verify", "--max-a", "2", "--max-b", "2", "--max-m", "4", "--max-n", "3", "--jobs", "2",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.contains("21 checks, 21 passed"));
    // degree does not change the bytes
    let out1 = comotion(&[
        "verify", "--max-a", "2", "--max-b", "2", "--max-m", "4", "--max-n", "3", "--jobs", "1",
    ]);
    assert_eq!(out.stdout, out1.stdout);
}
