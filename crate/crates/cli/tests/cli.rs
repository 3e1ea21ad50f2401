//! End-to-end tests driving the binary over the text formats: exit codes
//! (0 success, 2 input error, 3 infeasible), round trips, and determinism.

use std::path::Path;
use std::process::{Command, Output};

fn simwidth(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simwidth"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn gen_writes_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let out = simwidth(dir.path(), &["gen", "ktst", "3"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.starts_with("6 6\n"), "{text}");

    let out = simwidth(dir.path(), &["gen", "hsu", "4", "4"]);
    assert!(stdout_of(&out).starts_with("16 "));

    let out = simwidth(dir.path(), &["gen", "nonsense", "1"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn gen_round_trips_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let families: &[&[&str]] = &[
        &["gen", "ktst", "3"],
        &["gen", "ktkt", "2"],
        &["gen", "ccgrid", "3", "4"],
        &["gen", "hsu", "4", "4"],
        &["gen", "split", "3"],
        &["gen", "subdivgrid", "3"],
        &["gen", "circle", "3"],
        &["gen", "random-chordal", "10", "0.3", "--seed", "7"],
        &["gen", "random-interval", "10", "--seed", "7"],
        &["gen", "random-permutation", "10", "--seed", "7"],
    ];
    for args in families {
        let a = stdout_of(&simwidth(dir.path(), args));
        let b = stdout_of(&simwidth(dir.path(), args));
        assert_eq!(a, b, "{args:?} not deterministic");
        let g = simwidth::io::parse_edge_list(&a).unwrap();
        assert_eq!(simwidth::io::write_edge_list(&g), a, "{args:?} round trip");
    }
}

#[test]
fn gen_side_car_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = simwidth(dir.path(), &["gen", "circle", "4", "--out", "gc"]);
    assert_eq!(code_of(&out), 0);
    let el = std::fs::read_to_string(dir.path().join("gc.el")).unwrap();
    let g = simwidth::io::parse_edge_list(&el).unwrap();
    assert_eq!(g.vertex_count(), 40);
    let chords = std::fs::read_to_string(dir.path().join("gc.chords")).unwrap();
    let model = simwidth::io::parse_chord_model(&chords).unwrap();
    assert_eq!(model.circle_points, 96);
    assert_eq!(model.chords.len(), 40);

    let out = simwidth(dir.path(), &["gen", "ccgrid", "4", "3", "--out", "grid"]);
    assert_eq!(code_of(&out), 0);
    let ord = std::fs::read_to_string(dir.path().join("grid.ord")).unwrap();
    assert_eq!(simwidth::io::parse_ordering(&ord).unwrap().len(), 12);
}

#[test]
fn decompose_rejects_non_chordal_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("c4.el"), "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let out = simwidth(dir.path(), &["decompose", "c4.el", "--method", "chordal"]);
    assert_eq!(code_of(&out), 2);
    assert!(stdout_of(&out).contains("not chordal: induced cycle"));
}

#[test]
fn decompose_width_pipeline_on_hsu_grid() {
    let dir = tempfile::tempdir().unwrap();
    simwidth(dir.path(), &["gen", "hsu", "4", "4", "--out", "h"]);
    let out = simwidth(
        dir.path(),
        &["decompose", "h.el", "--method", "chordal", "--out", "h.bd"],
    );
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("sim-width=1"));
    let out = simwidth(dir.path(), &["width", "h.el", "h.bd", "--f", "sim"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    let max_line = text.lines().last().unwrap();
    assert!(
        max_line.starts_with("max 1 ") || max_line.starts_with("max 0"),
        "{max_line}"
    );
}

#[test]
fn decompose_cocomp_uses_ordering_file() {
    let dir = tempfile::tempdir().unwrap();
    simwidth(dir.path(), &["gen", "ccgrid", "4", "3", "--out", "g"]);
    let out = simwidth(
        dir.path(),
        &[
            "decompose",
            "g.el",
            "--method",
            "cocomp",
            "--ordering",
            "g.ord",
            "--out",
            "g.bd",
        ],
    );
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("linear=true"));
    // a bad ordering is rejected with the violating triple
    simwidth(dir.path(), &["gen", "ktst", "3", "--out", "kt"]);
    std::fs::write(dir.path().join("kt.ord"), "0 1 2 3 4 5\n").unwrap();
    let out = simwidth(
        dir.path(),
        &[
            "decompose",
            "kt.el",
            "--method",
            "cocomp",
            "--ordering",
            "kt.ord",
        ],
    );
    assert_eq!(code_of(&out), 2);
    assert!(stdout_of(&out).contains("violating triple"));
}

#[test]
fn solve_dominating_set_and_infeasible_coloring() {
    let dir = tempfile::tempdir().unwrap();
    simwidth(dir.path(), &["gen", "ktst", "3", "--out", "kt"]);
    simwidth(
        dir.path(),
        &[
            "decompose",
            "kt.el",
            "--method",
            "chordal",
            "--out",
            "kt.bd",
        ],
    );
    let out = simwidth(dir.path(), &["solve", "kt.el", "kt.bd", "dominating-set"]);
    assert_eq!(code_of(&out), 0);
    assert!(
        stdout_of(&out).contains("objective 3"),
        "{}",
        stdout_of(&out)
    );

    // raw sigma/rho form: maximum independent set
    let out = simwidth(
        dir.path(),
        &[
            "solve",
            "kt.el",
            "kt.bd",
            "sigma=finite:0;rho=cofinite:",
            "--objective",
            "max",
        ],
    );
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("objective 3"));

    std::fs::write(dir.path().join("k3.el"), "3 3\n0 1\n1 2\n0 2\n").unwrap();
    simwidth(
        dir.path(),
        &[
            "decompose",
            "k3.el",
            "--method",
            "chordal",
            "--out",
            "k3.bd",
        ],
    );
    let out = simwidth(dir.path(), &["solve", "k3.el", "k3.bd", "coloring:2"]);
    assert_eq!(code_of(&out), 3);
    assert!(stdout_of(&out).contains("infeasible"));
    let out = simwidth(dir.path(), &["solve", "k3.el", "k3.bd", "coloring:3"]);
    assert_eq!(code_of(&out), 0);
}

#[test]
fn solve_respects_weights() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("p3.el"), "3 2\n0 1\n1 2\n").unwrap();
    std::fs::write(dir.path().join("p3.ord"), "0 1 2\n").unwrap();
    simwidth(
        dir.path(),
        &[
            "decompose",
            "p3.el",
            "--method",
            "caterpillar",
            "--ordering",
            "p3.ord",
            "--out",
            "p3.bd",
        ],
    );
    // the middle vertex alone dominates, but weights drive the optimum to
    // the two endpoints
    std::fs::write(dir.path().join("w"), "1 9\n").unwrap();
    let out = simwidth(
        dir.path(),
        &[
            "solve",
            "p3.el",
            "p3.bd",
            "dominating-set",
            "--weights",
            "w",
        ],
    );
    assert!(
        stdout_of(&out).contains("objective 2"),
        "{}",
        stdout_of(&out)
    );
    assert!(stdout_of(&out).contains("selected 0 2"));
}

#[test]
fn detect_and_oracle() {
    let dir = tempfile::tempdir().unwrap();
    simwidth(dir.path(), &["gen", "ktst", "3", "--out", "kt"]);
    let out = simwidth(dir.path(), &["detect", "kt.el", "ktst", "3"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("witness clique 0 1 2 partners 3 4 5"));

    simwidth(dir.path(), &["gen", "hsu", "4", "4", "--out", "h"]);
    let out = simwidth(dir.path(), &["detect", "h.el", "ktst", "3"]);
    assert!(stdout_of(&out).contains("none"));

    std::fs::write(dir.path().join("c4.el"), "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let out = simwidth(dir.path(), &["oracle", "c4.el", "--f", "mim"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("exact 1"));
    let out = simwidth(dir.path(), &["oracle", "c4.el", "--f", "sim", "--linear"]);
    assert!(stdout_of(&out).contains("exact 1"));
    assert!(stdout_of(&out).contains("ordering "));

    // size refusal is an input error
    simwidth(dir.path(), &["gen", "ccgrid", "4", "4", "--out", "big"]);
    let out = simwidth(dir.path(), &["oracle", "big.el", "--f", "sim"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.el"), "2 1\n0 0\n").unwrap();
    let out = simwidth(dir.path(), &["decompose", "bad.el", "--method", "chordal"]);
    assert_eq!(code_of(&out), 2);
    let out = simwidth(dir.path(), &["width", "missing.el", "missing.bd"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn width_rejects_mismatched_decomposition() {
    let dir = tempfile::tempdir().unwrap();
    simwidth(dir.path(), &["gen", "ktst", "3", "--out", "kt"]);
    simwidth(dir.path(), &["gen", "ktst", "2", "--out", "small"]);
    simwidth(
        dir.path(),
        &["decompose", "small.el", "--method", "chordal", "--out", "small.bd"],
    );
    let out = simwidth(dir.path(), &["width", "kt.el", "small.bd", "--f", "sim"]);
    assert_eq!(code_of(&out), 2);
}
