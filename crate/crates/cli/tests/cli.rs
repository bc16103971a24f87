use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TABLE1: &str = "\
# five elements, derived subalgebra {0,1,2}
5
0 0 0 0 0
1 0 1 0 1
2 2 0 0 0
3 3 3 0 3
4 4 2 2 0
";

const TABLE3: &str = "\
8
0 0 0 0 0 0 0 0
1 0 0 0 1 0 0 0
2 1 0 0 2 1 0 0
3 1 1 0 3 1 1 0
4 4 4 4 0 0 0 0
5 4 4 4 1 0 0 0
6 5 4 4 2 1 0 0
7 5 5 4 3 1 1 0
";

struct Env {
    dir: TempDir,
}

impl Env {
    fn new() -> Self {
        Env {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn bck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bck"))
        .args(args)
        .output()
        .unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn validate_exit_codes() {
    let env = Env::new();
    let good = env.file("t1.bck", TABLE1);
    let o = bck(&["validate", p(&good)]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "PASS\n"));

    let bad = env.file("bad.bck", "2\n0 1\n1 0\n");
    let o = bck(&["validate", p(&bad)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("BCK4 violated at x=1"));

    let truncated = env.file("short.bck", "3\n0 0 0\n1 0\n");
    let o = bck(&["validate", p(&truncated)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let o = bck(&["validate", p(&env.path("missing.bck"))]);
    assert_eq!(code(&o), 2);
}

#[test]
fn info_reports() {
    let env = Env::new();
    let out = stdout(&bck(&["info", p(&env.file("t1.bck", TABLE1))]));
    assert!(out.contains("A' = {0,1,2}\n"));
    assert!(out.contains("DI = {0,1,2,4}\n"));

    let out = stdout(&bck(&["info", p(&env.file("t3.bck", TABLE3))]));
    assert!(out.contains("Z1 = {0,1,2,4,5,6}\n"));
    assert!(out.contains("class = 2\n"));

    let out = stdout(&bck(&["info", p(&env.file("one.bck", "1\n0\n"))]));
    assert!(out.contains("class = 0\n"));
}

#[test]
fn info_names_symbolic_labels() {
    let env = Env::new();
    let f = env.file("letters.bck", "2\nz a\nz z\n");
    let out = stdout(&bck(&["info", p(&f)]));
    assert!(out.contains("labels = 0=z 1=a\n"), "{out}");
}

#[test]
fn quotients() {
    let env = Env::new();
    let t1 = env.file("t1.bck", TABLE1);

    let o = bck(&["quotient", p(&t1), "derived"]);
    assert_eq!(code(&o), 0);
    let body: Vec<String> = stdout(&o)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(str::to_owned)
        .collect();
    assert_eq!(body, ["2", "0 0", "1 0"]);
    assert!(stdout(&o).contains("# class 1: rep 3, members {3}\n"));

    // the zero ideal gives the algebra back
    let o = bck(&["quotient", p(&t1), "0"]);
    let table = env.file("q0.bck", &stdout(&o));
    let back = bck(&["quotient", p(&table), "0"]);
    assert_eq!(stdout(&o), stdout(&back));
    let body: String = stdout(&o)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(body, TABLE1.lines().skip(1).map(|l| format!("{l}\n")).collect::<String>());

    // {0,1} is an ideal of this algebra, {0,2} is not
    let o = bck(&["quotient", p(&t1), "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("# quotient by {0,1}\n"));
    let o = bck(&["quotient", p(&t1), "2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("--close"));
    let o = bck(&["quotient", p(&t1), "2", "--close"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("# quotient by {0,2,4}\n"));

    let o = bck(&["quotient", p(&t1), "7"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn chain_product_and_iso() {
    let env = Env::new();
    let o = bck(&["chain", "3"]);
    assert_eq!(stdout(&o), "4\n0 0 0 0\n1 0 0 0\n2 2 0 0\n3 3 3 0\n");
    let m3 = env.file("m3.bck", &stdout(&o));
    // the same chain with 1 and 3 swapped
    let swapped = env.file("m3s.bck", "4\n0 0 0 0\n1 0 1 1\n2 0 0 2\n3 0 0 0\n");
    let o = bck(&["iso", p(&m3), p(&swapped)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "ISOMORPHIC\n0->0 1->3 2->2 3->1\n");

    let t1 = env.file("t1.bck", TABLE1);
    let o = bck(&["iso", p(&m3), p(&t1)]);
    assert_eq!((code(&o), stdout(&o).as_str()), (1, "NOT ISOMORPHIC\n"));

    let m1 = env.file("m1.bck", "2\n0 0\n1 0\n");
    let o = bck(&["product", p(&m1), p(&m1)]);
    assert_eq!(code(&o), 0);
    let square = env.file("sq.bck", &stdout(&o));
    let info = stdout(&bck(&["info", p(&square)]));
    assert!(info.contains("order = 4\n") && info.contains("commutative = yes\n"));
}

#[test]
fn wronski_commutators() {
    let o = bck(&["wronski-comm", "a", "2", "b", "5"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "2\n"));
    assert_eq!(stdout(&bck(&["wronski-comm", "a3", "b3"])), "1\n");
    assert_eq!(stdout(&bck(&["wronski-comm", "b_5", "a_2"])), "0\n");
    assert_eq!(code(&bck(&["wronski-comm", "a", "65", "b", "1"])), 3);
    assert_eq!(code(&bck(&["wronski-comm", "c1", "a1"])), 2);
}

#[test]
fn enumerate_and_catalog() {
    let env = Env::new();
    let cat = env.path("cat.tsv");
    let o = bck(&["enumerate", "4", "--jobs", "2", "--catalog", p(&cat)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "order 1: 1\norder 2: 1\norder 3: 3\norder 4: 14\n");
    let text = std::fs::read_to_string(&cat).unwrap();
    assert_eq!(text.lines().count(), 19);
    assert!(text.lines().all(|l| l.split('\t').count() == 5));
    assert!(text.starts_with("1\t0\t0\t0\t1\n2\t0010\t1\t1\t1\n"));

    // same output regardless of thread count
    let single = stdout(&bck(&["enumerate", "4", "--jobs", "1"]));
    assert_eq!(single, text);

    assert_eq!(code(&bck(&["enumerate", "7"])), 3);
    assert_eq!(code(&bck(&["enumerate", "7", "--max-order", "9"])), 3);
    assert_eq!(code(&bck(&["enumerate", "3", "--jobs", "0"])), 2);
}
