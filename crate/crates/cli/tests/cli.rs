use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::tempdir;

fn sts() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sts"))
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str]) -> Output {
    sts().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn construct_pg_matches_golden() {
    let dir = tempdir().unwrap();
    let out_path = dir.path().join("fano.sts");
    let out = run(&["construct", "pg", "--k", "2", "-o", p(&out_path)]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("pg"));
    let text = fs::read_to_string(&out_path).unwrap();
    assert_eq!(text, fs::read_to_string(golden("fano.sts")).unwrap());
    // order line plus 7 blocks, each newline-terminated
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 8);
    assert!(text.ends_with("2 4 5\n"));
}

#[test]
fn construct_ag_matches_golden() {
    let out = run(&["construct", "ag", "--m", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), fs::read_to_string(golden("sts9.sts")).unwrap());
}

#[test]
fn construct_netto_auto_c() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("s13.sts");
    let out = run(&["construct", "netto", "--q", "13", "--auto-c", "-o", p(&path)]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("C = {1, 2}"), "{}", stderr(&out));
    let text = fs::read_to_string(&path).unwrap();
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body[0], "13");
    assert_eq!(body.len(), 27);
    assert!(text.contains("# C: {1, 2}"));
}

#[test]
fn construct_netto_errors() {
    let out = run(&["construct", "netto", "--q", "11"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("BadOrderModSix"));
    let out = run(&["construct", "netto", "--q", "13", "--c", "1,4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("CosetCollision"));
    let out = run(&["construct", "netto", "--q", "7", "--auto-c"]);
    assert!(stderr(&out).contains("SDivisibleByT"));
}

#[test]
fn invariants_json_matches_golden() {
    for name in ["fano", "sts9"] {
        let out = run(&["invariants", p(&golden(&format!("{name}.sts")))]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), fs::read_to_string(golden(&format!("{name}.json"))).unwrap());
    }
}

#[test]
fn invariants_json_is_stable_across_threads() {
    let input = golden("sts9.sts");
    let outputs: Vec<String> = ["1", "3", "0"]
        .iter()
        .map(|t| stdout(&run(&["--threads", t, "invariants", p(&input)])))
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn invariants_table_and_oracle() {
    let out = run(&["invariants", "--table", "--oracle", p(&golden("fano.sts"))]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("pasch_count") && l.ends_with(" 7")));
    assert!(text.contains("PASS a-set-oracle"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn truncated_file_is_rejected() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("short.sts");
    let full = fs::read_to_string(golden("fano.sts")).unwrap();
    let truncated: String = full.lines().take(6).map(|l| format!("{l}\n")).collect();
    fs::write(&path, truncated).unwrap();
    let out = run(&["invariants", p(&path)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("WrongBlockCount"), "{}", stderr(&out));
    assert!(stderr(&out).contains("line 6"));
}

#[test]
fn product_files() {
    let dir = tempdir().unwrap();
    let s3 = dir.path().join("s3.sts");
    fs::write(&s3, "3\n0 1 2\n").unwrap();
    let s21 = dir.path().join("s21.sts");
    let out = run(&["product", p(&s3), p(&golden("fano.sts")), "-o", p(&s21)]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = fs::read_to_string(&s21).unwrap();
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!((body[0], body.len()), ("21", 71));

    // 3 x 3 is AG(2, 3) block for block
    let s9 = dir.path().join("s9.sts");
    assert!(run(&["product", p(&s3), p(&s3), "-o", p(&s9)]).status.success());
    let strip = |t: String| t.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>().join("\n");
    assert_eq!(
        strip(fs::read_to_string(&s9).unwrap()),
        strip(fs::read_to_string(golden("sts9.sts")).unwrap())
    );

    let out = run(&["product", p(&s3), p(&dir.path().join("missing.sts"))]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_product_matches() {
    let out = run(&["verify-product", p(&golden("fano.sts")), p(&golden("fano.sts"))]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("alpha          3920         3920"), "{text}");
    assert!(text.contains("match"));
    let out = run(&["verify-product", "--max-order", "40", p(&golden("fano.sts")), p(&golden("fano.sts"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("budget"));
}

#[test]
fn pasch_listing() {
    let out = run(&["pasch", "--list", "--oracle", p(&golden("fano.sts"))]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("pasch_count: 7\n"));
    assert_eq!(text.lines().filter(|l| l.split(' ').count() == 6).count(), 7);
    assert!(text.contains("PASS pasch-count-oracle"));
}

#[test]
fn spectrum_directory() {
    let dir = tempdir().unwrap();
    let out = run(&["spectrum", p(dir.path())]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("files: 0"));

    fs::copy(golden("fano.sts"), dir.path().join("fano.sts")).unwrap();
    fs::copy(golden("sts9.sts"), dir.path().join("sts9.sts")).unwrap();
    let out = run(&["spectrum", p(dir.path())]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.ends_with(".sts") || l.contains(".sts ")).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("fano.sts") && rows[1].starts_with("sts9.sts"));
    assert!(text.contains("violations: 0"));

    fs::write(dir.path().join("bad.sts"), "7\n0 1 2\n").unwrap();
    let out = run(&["spectrum", p(dir.path())]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("bad.sts"));
}

#[test]
fn gen_all_writes_classes() {
    let dir = tempdir().unwrap();
    let out = run(&["gen-all", "--n", "9", "-o", p(dir.path())]);
    assert!(out.status.success());
    let census = fs::read_to_string(dir.path().join("census.txt")).unwrap();
    assert!(census.contains("classes: 1"));
    let rep = dir.path().join("sts9_class1.sts");
    assert!(run(&["invariants", p(&rep)]).status.success());

    let out = run(&["gen-all", "--n", "7", "--no-normalize", "-o", p(dir.path())]);
    assert!(stdout(&out).contains("labelled_count: 30"));

    let out = run(&["gen-all", "--n", "15", "-o", p(dir.path())]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("UnsupportedOrder"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "pg"]).status.code(), Some(2));
}
