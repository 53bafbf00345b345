use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn rank1(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rank1"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn index_lines(text: &str) -> usize {
    text.lines()
        .filter(|l| !l.starts_with('d') && !l.trim().is_empty())
        .count()
}

const S11: &str = "d 2\n0 0\n1 0\n0 1\n";
const UNIT_1D: &str = "d 1\n0\n1\n";

#[test]
fn gen_set_families() {
    let o = rank1(&["gen-set", "simplex-card", "--w", "0.9,0.8,0.7", "--n", "40"]);
    assert_eq!(code(&o), 0);
    assert_eq!(index_lines(&stdout(&o)), 40);
    assert!(stdout(&o).starts_with("d 3\n"));
    assert_eq!(
        index_lines(&stdout(&rank1(&["gen-set", "block", "--k", "1,1"]))),
        4
    );
    assert_eq!(
        index_lines(&stdout(&rank1(&[
            "gen-set",
            "hyperbolic",
            "--d",
            "2",
            "--n",
            "3"
        ]))),
        5
    );
    assert_eq!(
        index_lines(&stdout(&rank1(&[
            "gen-set", "simplex", "--d", "3", "--k", "2"
        ]))),
        10
    );
    let weighted = rank1(&["gen-set", "simplex", "--w", "1,0.5", "--u", "1"]);
    assert_eq!(stdout(&weighted), "d 2\n0 0\n0 1\n0 2\n1 0\n");
}

#[test]
fn gen_set_usage_errors() {
    assert_eq!(code(&rank1(&["gen-set", "pyramid", "--k", "1"])), 2);
    assert_eq!(code(&rank1(&["gen-set", "block"])), 2);
    assert_eq!(
        code(&rank1(&[
            "gen-set",
            "simplex-card",
            "--w",
            "0.9,-1",
            "--n",
            "4"
        ])),
        2
    );
    assert_eq!(code(&rank1(&["gen-set"])), 2);
}

#[test]
fn gen_set_to_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("b.txt");
    assert_eq!(
        code(&rank1(&["gen-set", "block", "--k", "1,2", "-o", s(&out)])),
        0
    );
    assert_eq!(index_lines(&std::fs::read_to_string(out).unwrap()), 6);
}

#[test]
fn search_examples() {
    let dir = TempDir::new().unwrap();
    let set = file(&dir, "s11.txt", S11);
    let o = rank1(&["search", s(&set), "--plan", "A", "--algo", "exhaustive"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap().split(' ').next(), Some("5"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&row[..7], &["s11", "2", "3", "5", "A", "exhaustive", "5"]);

    let block = file(
        &dir,
        "b11.txt",
        &stdout(&rank1(&["gen-set", "block", "--k", "1,1"])),
    );
    let o = rank1(&["search", s(&block), "--plan", "A", "--algo", "two-step"]);
    assert_eq!(stdout(&o).lines().next(), Some("9 1 3"));
}

#[test]
fn table_set_two_step_band() {
    let dir = TempDir::new().unwrap();
    let set = file(
        &dir,
        "n40.txt",
        &stdout(&rank1(&[
            "gen-set",
            "simplex-card",
            "--w",
            "0.9,0.8,0.7",
            "--n",
            "40",
        ])),
    );
    let o = rank1(&["search", s(&set), "--plan", "C", "--algo", "two-step"]);
    let n: u64 = stdout(&o)
        .split_whitespace()
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!((151..=211).contains(&n), "n = {n}");
}

#[test]
fn search_round_trips_through_verify() {
    let dir = TempDir::new().unwrap();
    let set = file(
        &dir,
        "h.txt",
        &stdout(&rank1(&["gen-set", "hyperbolic", "--d", "3", "--n", "6"])),
    );
    for plan in ["0", "A", "B", "C"] {
        for algo in ["exhaustive", "cbc", "two-step"] {
            let lat = dir.path().join(format!("{plan}-{algo}.lat"));
            let o = rank1(&[
                "search",
                s(&set),
                "--plan",
                plan,
                "--algo",
                algo,
                "-o",
                s(&lat),
            ]);
            assert_eq!(code(&o), 0, "{plan} {algo}");
            assert_eq!(
                code(&rank1(&["verify", s(&set), s(&lat), "--plan", plan])),
                0,
                "{plan} {algo}"
            );
        }
    }
}

#[test]
fn search_errors() {
    let dir = TempDir::new().unwrap();
    let scattered = file(&dir, "x.txt", "d 2\n0 0\n2 0\n");
    let o = rank1(&["search", s(&scattered), "--algo", "cbc"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("set is not lower"));
    let o = rank1(&["search", s(&scattered), "--algo", "exhaustive"]);
    assert_eq!(code(&o), 0);
    let set = file(&dir, "s11.txt", S11);
    assert_eq!(
        code(&rank1(&[
            "search",
            s(&set),
            "--algo",
            "exhaustive",
            "--n-max",
            "4"
        ])),
        1
    );
    assert_eq!(
        code(&rank1(&[
            "search",
            s(&set),
            "--algo",
            "two-step",
            "--n-max",
            "4"
        ])),
        1
    );
    assert_eq!(code(&rank1(&["search", s(&set), "--plan", "Q"])), 2);
    let bad = file(&dir, "bad.txt", "d 2\n0 0\n1\n");
    assert_eq!(code(&rank1(&["search", s(&bad)])), 2);
    let odd = rank1(&[
        "search",
        s(&set),
        "--plan",
        "C",
        "--algo",
        "two-step",
        "--odd-only",
    ]);
    let n: u64 = stdout(&odd)
        .split_whitespace()
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(n % 2, 1);
}

#[test]
fn verify_examples() {
    let dir = TempDir::new().unwrap();
    let set = file(&dir, "s11.txt", S11);
    let good = file(&dir, "good.lat", "5 1 3\n");
    let small = file(&dir, "small.lat", "4 1 3\n");
    assert_eq!(
        code(&rank1(&["verify", s(&set), s(&good), "--plan", "A"])),
        0
    );
    let o = rank1(&["verify", s(&set), s(&small), "--plan", "A", "--verbose"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("first collision"));
    let unit = file(&dir, "unit.txt", UNIT_1D);
    let two = file(&dir, "two.lat", "2 1\n");
    assert_eq!(
        code(&rank1(&["verify", s(&unit), s(&two), "--plan", "B"])),
        1
    );
    assert_eq!(
        code(&rank1(&["verify", s(&unit), s(&two), "--plan", "C"])),
        0
    );
    assert_eq!(code(&rank1(&["verify", s(&set), s(&two)])), 2);
}

#[test]
fn bounds_output() {
    let dir = TempDir::new().unwrap();
    let set = file(
        &dir,
        "s22.txt",
        &stdout(&rank1(&["gen-set", "simplex", "--d", "2", "--k", "2"])),
    );
    let o = rank1(&["bounds", s(&set), "--plan", "A", "--oracle"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("l* = 13\n"), "{text}");
    assert!(text.contains("n* = 13\n"), "{text}");
    let p: u64 = text
        .lines()
        .nth(1)
        .unwrap()
        .trim_start_matches("p* = ")
        .parse()
        .unwrap();
    assert!(p >= 13);
    assert!(!stdout(&rank1(&["bounds", s(&set)])).contains("n*"));
}

#[test]
fn reconstruct_demo_examples() {
    let dir = TempDir::new().unwrap();
    let set = file(&dir, "s11.txt", S11);
    let lat = file(&dir, "l.lat", "5 1 3\n");
    let o = rank1(&[
        "reconstruct-demo",
        s(&set),
        s(&lat),
        "--mode",
        "a",
        "--seed",
        "3",
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let unit = file(&dir, "unit.txt", UNIT_1D);
    let two = file(&dir, "two.lat", "2 1\n");
    assert_eq!(
        code(&rank1(&[
            "reconstruct-demo",
            s(&unit),
            s(&two),
            "--mode",
            "c"
        ])),
        0
    );
    let refused = rank1(&["reconstruct-demo", s(&unit), s(&two), "--mode", "b"]);
    assert_eq!(code(&refused), 1);
    assert!(String::from_utf8_lossy(&refused.stderr).contains("plan B"));
}

#[test]
fn bench_table_rows() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("t.csv");
    let args = [
        "bench",
        "--family",
        "simplex-card",
        "--w",
        "0.9,0.8,0.7",
        "--sizes",
        "40,50",
        "--plans",
        "A,B,C",
        "--algos",
        "exhaustive,two-step",
        "-o",
        s(&out),
    ];
    assert_eq!(code(&rank1(&args)), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let rows: Vec<&str> = text
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .collect();
    assert_eq!(rows.len(), 12);
    assert!(text.lines().last().unwrap().starts_with("# mape_percent="));

    // Identical apart from the timing column.
    assert_eq!(code(&rank1(&args)), 0);
    let again = std::fs::read_to_string(&out).unwrap();
    let strip = |t: &str| -> Vec<String> {
        t.lines()
            .map(|l| {
                l.split(',')
                    .enumerate()
                    .filter(|(i, _)| *i != 7)
                    .map(|(_, f)| f)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect()
    };
    assert_eq!(strip(&text), strip(&again));
}

#[test]
fn bench_config_file_and_empty_sizes() {
    let dir = TempDir::new().unwrap();
    let cfg = file(
        &dir,
        "b.toml",
        "family = \"hyperbolic\"\nd = 2\nsizes = []\n",
    );
    let o = rank1(&["bench", "--config", s(&cfg)]);
    assert_eq!(
        stdout(&o),
        "set_id,d,card_lambda,card_mirror,plan,algo,n,elapsed_ms,error\n"
    );
    let o = rank1(&[
        "bench",
        "--config",
        s(&cfg),
        "--sizes",
        "4",
        "--algos",
        "cbc",
    ]);
    assert_eq!(stdout(&o).lines().count(), 4);
    let broken = file(&dir, "x.toml", "sizes = \"many\"\n");
    assert_eq!(code(&rank1(&["bench", "--config", s(&broken)])), 2);
}
