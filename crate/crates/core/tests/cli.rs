//! End-to-end checks of the command-line interface: report determinism,
//! round-trips through the facet format, pipe composition, and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn rookery(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rookery"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn rookery_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rookery"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn build_emits_the_board_facets_deterministically() {
    let a = rookery(&["build", "--grid", "4", "3"]);
    let b = rookery(&["build", "--grid", "4", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "byte-identical reruns");
    let text = stdout(&a);
    assert!(text.starts_with("m 12\n"));
    // 24 facets: the two-dimensional top cells of the 4x3 board.
    assert_eq!(text.lines().count(), 25);
}

#[test]
fn build_pipes_into_homology() {
    let board = stdout(&rookery(&["build", "--grid", "4", "3"]));
    let out = rookery_with_stdin(&["homology", "--complex", "-"], &board);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("betti = (1,2,1)"), "got:\n{text}");
    assert!(text.contains("torsion_free = true"));
    assert!(text.contains("euler = 0"));
}

#[test]
fn homology_reports_are_byte_identical() {
    let board = stdout(&rookery(&["build", "--grid", "3", "2"]));
    let a = rookery_with_stdin(&["homology", "--complex", "-"], &board);
    let b = rookery_with_stdin(&["homology", "--complex", "-"], &board);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("betti = (1,1)"));
}

#[test]
fn dual_round_trips_through_the_format() {
    let dir = std::env::temp_dir().join("rookery-cli-dual");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k.facets");
    std::fs::write(&path, "m 3\n1\n2\n3\n").unwrap();
    let p = path.to_str().unwrap();

    // Three points on [3] are self-dual.
    let once = rookery(&["dual", "--input", p]);
    assert!(once.status.success());
    assert_eq!(stdout(&once), "m 3\n1\n2\n3\n");

    let twice = rookery_with_stdin(&["dual", "--input", "-"], &stdout(&once));
    assert_eq!(stdout(&twice), "m 3\n1\n2\n3\n");
}

#[test]
fn bier_report_lists_triples_and_raw_mode_pipes() {
    let out = rookery_with_stdin(&["bier", "--input", "-"], "m 3\n1\n2\n3\n");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("sphere_dimension = 1"));
    assert!(text.contains("[facet triples (A1,A2;B)]"));
    assert!(text.contains("({2},{1};{3})"));

    let raw = rookery_with_stdin(&["bier", "--input", "-", "--raw"], "m 3\n1\n2\n3\n");
    let homology = rookery_with_stdin(&["homology", "--complex", "-"], &stdout(&raw));
    assert!(stdout(&homology).contains("betti = (1,1)"), "hexagon homology");
}

#[test]
fn morse_reports_critical_cells_and_matching() {
    let out = rookery(&[
        "morse",
        "--dmf",
        "multichess",
        "--grid",
        "3",
        "1",
        "--row-caps",
        "2",
        "--col-caps",
        "1,1,1",
        "--emit-matching",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("critical_cells = 2"));
    assert!(text.contains("acyclic = true"));
    assert!(text.contains("valid = true"));
    assert!(text.contains("connectivity_certificate = 0"));
    assert!(text.contains("[matching]"));

    let bier = rookery_with_stdin(&["morse", "--dmf", "bier", "--complex", "-"], "m 3\n1\n2\n3\n");
    let text = stdout(&bier);
    assert!(text.contains("critical_cells = 2"));
    assert!(text.contains("dim 1 "));
}

#[test]
fn bottleneck_matches_the_worked_example() {
    let out = rookery(&[
        "bottleneck",
        "--ground",
        "3",
        "--clutter",
        "1 2;1 3",
        "--weights",
        "1,2,3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("minmax_a = 2"));
    assert!(text.contains("maxmin_b = 2"));
    assert!(text.contains("morse_value = 2"));
    assert!(text.contains("critical_cell = ({1},{3};{2})"));
    assert!(text.contains("agreement = true"));

    let oracle_only = rookery(&[
        "bottleneck",
        "--ground",
        "3",
        "--clutter",
        "1 2;1 3",
        "--weights",
        "3.5,1,2",
        "--oracle-only",
    ]);
    let text = stdout(&oracle_only);
    assert!(text.contains("minmax_a = 7/2"));
    assert!(!text.contains("morse_value"));
}

#[test]
fn input_errors_exit_with_code_two() {
    let bad_facets = rookery_with_stdin(&["homology", "--complex", "-"], "m 2\n1 5\n");
    assert_eq!(bad_facets.status.code(), Some(2));
    let err = String::from_utf8_lossy(&bad_facets.stderr).into_owned();
    assert!(err.contains("out of range"), "diagnostic names the problem: {err}");

    let bad_token = rookery_with_stdin(&["homology", "--complex", "-"], "m 2\n1 x\n");
    assert_eq!(bad_token.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_token.stderr).contains("`x`"));

    let missing = rookery(&["build"]);
    assert_eq!(missing.status.code(), Some(2));

    let star = rookery(&[
        "morse",
        "--dmf",
        "multichess",
        "--grid",
        "4",
        "3",
        "--row-caps",
        "1,1,1",
        "--col-caps",
        "1,1,1,1",
    ]);
    assert_eq!(star.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&star.stderr).contains("sum(l)"));
}

#[test]
fn unknown_flags_are_rejected_by_the_parser() {
    let out = rookery(&["homology", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_paper_suite_passes_and_prints_per_criterion_lines() {
    let out = rookery(&["verify", "--suite", "paper"]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    for i in 1..=8 {
        assert!(
            text.contains(&format!("criterion {i} [pass]")),
            "missing criterion {i} in:\n{text}"
        );
    }
    assert!(text.contains("all 8 criteria passed"));

    let unknown = rookery(&["verify", "--suite", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn cap_override_is_enforced() {
    let out = rookery(&["build", "--grid", "3", "2", "--cap", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}
