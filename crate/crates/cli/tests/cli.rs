//! End-to-end tests of the command-line interface: exit codes, pipeline
//! composition, and deterministic output.

use splitalg::fdalg::fixtures::*;
use splitalg::fdalg::{derived_dendriform, write_algebra, write_operator};
use splitalg::q;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_splitalg")
}

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(bin())
        .args(args)
        .current_dir(dir)
        .output()
        .expect("spawn splitalg")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write_cube(dir: &Path) -> PathBuf {
    let cube = splitalg::fdalg::triassociative_tensor_cube(&dual_numbers()).unwrap();
    let path = dir.join("cube8.json");
    write_algebra(&path, &cube, None).unwrap();
    path
}

#[test]
fn identities_tri_associative_to_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["identities", "--variety", "associative", "--mode", "tri"], dir.path());
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("# nops: 1"));
    assert!(text.contains("# context: omega3"));
    assert!(text.contains("# source: f=assoc H={1,3}"));
    assert!(text.contains("(x1 .1 (x2 >1 x3)) - ((x1 <1 x2) .1 x3)"));
    // 4 zero + 7 dotted identity lines.
    let identity_lines = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty())
        .count();
    assert_eq!(identity_lines, 11);

    // Byte-identical on a second run.
    let again = run(&["identities", "--variety", "associative", "--mode", "tri"], dir.path());
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn identities_file_feeds_verify() {
    let dir = tempfile::tempdir().unwrap();
    let ids = dir.path().join("tri.txt");
    let out = run(
        &[
            "identities",
            "--variety",
            "associative",
            "--mode",
            "tri",
            "--out",
            ids.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));

    let cube = write_cube(dir.path());
    let out = run(
        &[
            "verify",
            "--algebra",
            cube.to_str().unwrap(),
            "--identities",
            ids.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cube = write_cube(dir.path());

    let out = run(
        &[
            "verify",
            "--algebra",
            cube.to_str().unwrap(),
            "--variety",
            "associative",
            "--mode",
            "tri",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));

    // Corrupt one structure constant: verification failure, exit 1, with a
    // counterexample on stderr.
    let mut cube_alg = splitalg::fdalg::triassociative_tensor_cube(&dual_numbers()).unwrap();
    cube_alg.set(splitalg::terms::OpSymbol::middle(1), 1, 1, 2, q(1));
    let bad = dir.path().join("bad.json");
    write_algebra(&bad, &cube_alg, None).unwrap();
    let out = run(
        &[
            "verify",
            "--algebra",
            bad.to_str().unwrap(),
            "--variety",
            "associative",
            "--mode",
            "tri",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("fails at"), "{}", stderr(&out));

    // Malformed JSON: input error, exit 2.
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{not json").unwrap();
    let out = run(
        &[
            "verify",
            "--algebra",
            broken.to_str().unwrap(),
            "--variety",
            "associative",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 2);

    // Unknown variety: exit 2.
    let out = run(
        &[
            "verify",
            "--algebra",
            cube.to_str().unwrap(),
            "--variety",
            "boolean",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn rb_check_oracles() {
    let dir = tempfile::tempdir().unwrap();
    let alg = dir.path().join("qx5.json");
    write_algebra(&alg, &truncated_polynomial(5), None).unwrap();
    let op = dir.path().join("integration.json");
    write_operator(&op, &integration_operator(5), None).unwrap();

    let out = run(
        &[
            "rb-check",
            "--algebra",
            alg.to_str().unwrap(),
            "--operator",
            op.to_str().unwrap(),
            "--weight",
            "0",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));

    let q2 = dir.path().join("q2.json");
    write_algebra(&q2, &componentwise(2), None).unwrap();
    let proj = dir.path().join("proj.json");
    write_operator(&proj, &projection(2, &[1]), None).unwrap();

    let ok = run(
        &[
            "rb-check",
            "--algebra",
            q2.to_str().unwrap(),
            "--operator",
            proj.to_str().unwrap(),
            "--weight",
            "-1",
        ],
        dir.path(),
    );
    assert_eq!(code(&ok), 0, "{}", stderr(&ok));

    let fail = run(
        &[
            "rb-check",
            "--algebra",
            q2.to_str().unwrap(),
            "--operator",
            proj.to_str().unwrap(),
            "--weight",
            "0",
        ],
        dir.path(),
    );
    assert_eq!(code(&fail), 1);
    assert!(stderr(&fail).contains("fails at"));
}

#[test]
fn split_then_double_pipeline_composes() {
    let dir = tempfile::tempdir().unwrap();
    let q2 = dir.path().join("q2.json");
    write_algebra(&q2, &componentwise(2), None).unwrap();
    let proj = dir.path().join("proj.json");
    write_operator(&proj, &projection(2, &[1]), None).unwrap();

    // Derive the split operations of the projection operator.
    let split_path = dir.path().join("q2.split.json");
    let out = run(
        &[
            "split",
            "--algebra",
            q2.to_str().unwrap(),
            "--operator",
            proj.to_str().unwrap(),
            "--weight",
            "-1",
            "--scaled",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(split_path.exists());

    // The derived algebra satisfies the dendriform system.
    let out = run(
        &[
            "verify",
            "--algebra",
            split_path.to_str().unwrap(),
            "--variety",
            "associative",
            "--mode",
            "tri",
            "--dendriform",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));

    // Double it back into an unsplit algebra plus operator.
    let out = run(
        &[
            "double",
            "--algebra",
            split_path.to_str().unwrap(),
            "--mode",
            "tri",
            "--weight",
            "-1",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let doubled = dir.path().join("q2.split.double.json");
    let rb = dir.path().join("q2.split.rb.json");
    assert!(doubled.exists() && rb.exists());

    // The emitted files are accepted unmodified by verify and rb-check.
    let out = run(
        &[
            "verify",
            "--algebra",
            doubled.to_str().unwrap(),
            "--variety",
            "associative",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let out = run(
        &[
            "rb-check",
            "--algebra",
            doubled.to_str().unwrap(),
            "--operator",
            rb.to_str().unwrap(),
            "--weight",
            "-1",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
}

#[test]
fn split_rejects_scaled_weight_zero() {
    let dir = tempfile::tempdir().unwrap();
    let alg = dir.path().join("qx3.json");
    write_algebra(&alg, &truncated_polynomial(3), None).unwrap();
    let op = dir.path().join("int.json");
    write_operator(&op, &integration_operator(3), None).unwrap();
    let out = run(
        &[
            "split",
            "--algebra",
            alg.to_str().unwrap(),
            "--operator",
            op.to_str().unwrap(),
            "--weight",
            "0",
            "--scaled",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("nonzero weight"));
}

#[test]
fn double_weight_zero_di_from_integration() {
    let dir = tempfile::tempdir().unwrap();
    let derived = derived_dendriform(
        &truncated_polynomial(5),
        &integration_operator(5),
        &q(0),
        false,
    )
    .unwrap();
    let path = dir.path().join("dend.json");
    write_algebra(&path, &derived, None).unwrap();
    let out = run(
        &[
            "double",
            "--algebra",
            path.to_str().unwrap(),
            "--mode",
            "di",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let doubled = dir.path().join("dend.double.json");
    let out = run(
        &[
            "verify",
            "--algebra",
            doubled.to_str().unwrap(),
            "--variety",
            "associative",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
}

#[test]
fn koszul_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["koszul", "--variety", "associative"], dir.path());
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("66"));
    assert!(text.contains("42"));
    assert!(text.contains("108"));
    assert!(!text.contains("NO"));
}

#[test]
fn variety_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let vpath = dir.path().join("leibniz.txt");
    std::fs::write(
        &vpath,
        "# nops: 1\n(x1 *1 (x2 *1 x3)) = ((x1 *1 x2) *1 x3) + (x2 *1 (x1 *1 x3))\n",
    )
    .unwrap();
    let out = run(
        &[
            "identities",
            "--variety",
            vpath.to_str().unwrap(),
            "--mode",
            "di",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("# source: f=1 H={1}"));
    assert!(text.contains("sha256="));
}
