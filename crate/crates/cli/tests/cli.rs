use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delta-slide"))
        .args(args)
        .env("DELTA_SLIDE_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn validate_reports_non_binary_delta_matroid() {
    let o = run(&["validate", "--set-system", &fixture("ex3.ss")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("delta-matroid: yes\n"));
    assert!(out.contains("binary: no\n"));
}

#[test]
fn slide_prints_the_slid_family() {
    let o = run(&["slide", "--set-system", &fixture("ex3.ss"), "--over", "1", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "ground: 1 2 3\nfeasible: -\nfeasible: 1 2\nfeasible: 2 3\nfeasible: 1 2 3\n"
    );
}

#[test]
fn slide_over_unknown_element_is_a_domain_error() {
    let o = run(&["slide", "--set-system", &fixture("ex3.ss"), "--over", "1", "9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn matrix_slide_matches_set_system_slide() {
    let m = run(&["slide", "--matrix", &fixture("k3.mat"), "--over", "3", "2"]);
    assert_eq!(m.status.code(), Some(0));
    let dir = std::env::temp_dir().join(format!("delta-slide-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let slid = dir.join("slid.mat");
    std::fs::write(&slid, stdout(&m)).unwrap();
    let via_matrix = run(&["dmatroid", "--matrix", slid.to_str().unwrap()]);
    let d = run(&["dmatroid", "--matrix", &fixture("k3.mat")]);
    let d_path = dir.join("d.ss");
    std::fs::write(&d_path, stdout(&d)).unwrap();
    let via_sets = run(&["slide", "--set-system", d_path.to_str().unwrap(), "--over", "3", "2"]);
    assert_eq!(stdout(&via_matrix), stdout(&via_sets));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn twist_by_a_set() {
    let o = run(&["twist", "--set-system", &fixture("ex3.ss"), "--by", "1"]);
    assert_eq!(
        stdout(&o),
        "ground: 1 2 3\nfeasible: 1\nfeasible: 2\nfeasible: 3\nfeasible: 2 3\nfeasible: 1 2 3\n"
    );
}

#[test]
fn sum_of_disjoint_systems() {
    let o = run(&["sum", "--set-system", &fixture("ex3.ss"), &fixture("single.ss")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("ground: 1 2 3 x\n"));
    assert_eq!(out.lines().filter(|l| l.starts_with("feasible:")).count(), 10);
    let clash = run(&["sum", "--set-system", &fixture("ex3.ss"), &fixture("ex3.ss")]);
    assert_eq!(clash.status.code(), Some(1));
}

#[test]
fn normalize_prints_certificate() {
    let o = run(&["normalize", "--matrix", &fixture("k3.mat")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "canonical: i=1 j=1 k=0 l=0\nslide: 3 2\nslide: 3 1\nrelabel: 1->3\nrelabel: 2->1\nrelabel: 3->2\n"
    );
}

#[test]
fn normalize_rejects_non_binary() {
    let o = run(&["normalize", "--set-system", &fixture("ex3.ss")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bouquet_verbs() {
    let b = fixture("abc.bq");
    assert_eq!(stdout(&run(&["classify-bouquet", "--bouquet", &b])), "canonical: i=0 j=0 k=3 l=0\n");
    assert_eq!(
        stdout(&run(&["dmatroid", "--bouquet", &b])),
        "ground: a b c\nfeasible: -\nfeasible: c\nfeasible: a b\nfeasible: a b c\n"
    );
    assert_eq!(
        stdout(&run(&["interlace", "--bouquet", &b])),
        "labels: a b c\nrow: 0 1 0\nrow: 1 0 0\nrow: 0 0 1\n"
    );
    let s = run(&["slide", "--bouquet", &b, "--end", "0", "--over", "b"]);
    assert_eq!(stdout(&s), "edges: a b c\ntwisted: c\nrotation: a b a c c b\n");
    let far = run(&["slide", "--bouquet", &b, "--end", "2", "--over", "c"]);
    assert_eq!(far.status.code(), Some(1));
}

#[test]
fn represent_binary_and_non_binary() {
    let o = run(&["represent", "--set-system", &fixture("twisted.ss")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "# twisted by: e\nlabels: e f\nrow: 0 1\nrow: 1 0\n");
    let u = run(&["represent", "--set-system", &fixture("u24.ss")]);
    assert_eq!(u.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&u.stderr).contains("not a binary"));
}

#[test]
fn parse_errors_exit_with_two() {
    let o = run(&["validate", "--set-system", &fixture("bad.ss")]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(err.contains("line 2, column 13"), "{err}");
    let missing = run(&["validate", "--set-system", &fixture("missing.ss")]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--theorem", "nope"]).status.code(), Some(2));
    let one = run(&["slide", "--set-system", &fixture("ex3.ss"), "--over", "1"]);
    assert_eq!(one.status.code(), Some(2));
}

#[test]
fn verify_prints_instance_counts() {
    let o = run(&["verify", "--theorem", "con2", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "checked 1024 matrices × 12 pairs: OK\n");
    for t in ["det", "ths", "thm1", "closure", "triangle"] {
        let o = run(&["verify", "--theorem", t, "--max-n", "3"]);
        assert_eq!(o.status.code(), Some(0), "{t}");
        assert!(stdout(&o).ends_with(": OK\n"), "{t}");
    }
    let u = run(&["verify", "--theorem", "u24"]);
    assert_eq!(stdout(&u), "checked 28 orbit members of U_{2,4}: OK\n");
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "--theorem", "ths", "--max-n", "3"]);
    let b = Command::new(env!("CARGO_BIN_EXE_delta-slide"))
        .args(["verify", "--theorem", "ths", "--max-n", "3"])
        .env("DELTA_SLIDE_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_thread_count_is_rejected() {
    let o = Command::new(env!("CARGO_BIN_EXE_delta-slide"))
        .args(["verify", "--theorem", "u24"])
        .env("DELTA_SLIDE_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn conjecture_reports_attained_forms() {
    let o = run(&["conjecture", "--set-system", &fixture("twisted.ss")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("found: yes\n"), "{out}");
    assert!(out.contains("bookkeeping: ok\n"), "{out}");
}
