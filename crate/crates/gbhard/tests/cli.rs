use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gbhard(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gbhard"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

#[test]
fn contradiction_is_no() {
    let o = gbhard(
        &["oracle", "--problem", "sat", "-i", "-"],
        "p cnf 1 2\n1 0\n-1 0\n",
    );
    assert_eq!((stdout(&o), o.status.code()), ("NO\n", Some(1)));
}

#[test]
fn reduce_then_solve_matches_oracle() {
    let cases = [
        ("knapsack", "knapsack", "10 10 2\n6 8\n5 5\n"),
        ("knapsack", "knapsack", "10 11 2\n6 8\n5 5\n"),
        ("3cnf", "sat", "p cnf 3 1\n1 2 3 0\n"),
        ("3cnf", "sat", "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n"),
        ("hamcycle", "hamcycle", "2 3\n0 1\n0 1\n1 0\n"),
        ("push1", "push1", "RBW\n"),
        ("push1", "push1", "RBW\n...\n"),
    ];
    for (from, problem, text) in cases {
        let oracle = gbhard(&["oracle", "--problem", problem, "-i", "-"], text);
        let level = gbhard(&["reduce", "--from", from, "-i", "-"], text);
        assert_eq!(level.status.code(), Some(0));
        let solved = gbhard(&["solve", "-i", "-", "--witness"], stdout(&level));
        assert_eq!(oracle.status.code(), solved.status.code(), "{from}: {text}");
        let yes = oracle.status.code() == Some(0);
        assert_eq!(stdout(&solved).starts_with("SOLVABLE\nwitness: "), yes);
        assert_eq!(stdout(&solved) == "UNSOLVABLE\n", !yes);
    }
}

#[test]
fn reduce_is_byte_identical_and_writes_files() {
    let dir = std::env::temp_dir().join(format!("gbhard-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("level.json");
    let text = "p cnf 2 2\n1 -2 2 0\n-1 -1 2 0\n";
    let a = gbhard(
        &[
            "reduce",
            "--from",
            "3cnf",
            "-i",
            "-",
            "-o",
            out.to_str().unwrap(),
            "--stats",
        ],
        text,
    );
    assert_eq!(a.status.code(), Some(0));
    let stats = std::str::from_utf8(&a.stderr).unwrap();
    assert!(
        stats.starts_with("{\"source_size\":8,\"output_size\":"),
        "{stats}"
    );
    let b = gbhard(&["reduce", "--from", "3cnf", "-i", "-"], text);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), stdout(&b));
    let render = gbhard(&["render", "-i", out.to_str().unwrap()], "");
    assert!(stdout(&render).contains("board 5:"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_push1_seed_7() {
    let o = gbhard(
        &[
            "verify",
            "--pair",
            "push1-mole",
            "--count",
            "200",
            "--seed",
            "7",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("agreements            200\n"),
        "{}",
        stdout(&o)
    );
    let j1 = gbhard(
        &[
            "verify",
            "--pair",
            "ham-wario",
            "--count",
            "20",
            "--seed",
            "3",
            "--json",
        ],
        "",
    );
    let j2 = gbhard(
        &[
            "verify",
            "--pair",
            "ham-wario",
            "--count",
            "20",
            "--seed",
            "3",
            "--json",
        ],
        "",
    );
    assert_eq!(j1.stdout, j2.stdout);
    let v: serde_json::Value = serde_json::from_slice(&j1.stdout).unwrap();
    assert_eq!(v["agreements"], 20);
}

#[test]
fn errors_exit_2_with_context() {
    let o = gbhard(
        &["oracle", "--problem", "hamcycle", "-i", "-"],
        "2 1\n0 5\n",
    );
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(
        std::str::from_utf8(&o.stderr).unwrap(),
        "gbhard: <stdin>:2: vertex 5 out of range for 2 vertices\n"
    );

    let o = gbhard(
        &["solve", "-i", "-"],
        "{\"format\":\"gbhard-level/1\",\"game\":\"donkey_kong\",\"level\":{}}",
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(std::str::from_utf8(&o.stderr)
        .unwrap()
        .contains("<stdin>: level"));

    // Usage errors.
    assert_eq!(
        gbhard(&["reduce", "--from", "2cnf", "-i", "-"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gbhard(
            &["verify", "--pair", "sat-dk", "--count", "1", "--seed", "0"],
            ""
        )
        .status
        .code(),
        Some(2)
    );
    assert_eq!(gbhard(&[], "").status.code(), Some(2));
    // Refused bounds.
    assert_eq!(
        gbhard(
            &[
                "verify",
                "--pair",
                "cnf-dk",
                "--count",
                "1",
                "--seed",
                "0",
                "--max-vars",
                "25"
            ],
            ""
        )
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn invalid_level_is_refused_by_solve() {
    // Win floats over empty space.
    let level = r#"{"format":"gbhard-level/1","game":"donkey_kong","level":{"width":2,"height":2,
        "tiles":["..","=."],"switches":[],"boards":[],"start":[0,0],"win":[1,0]}}"#;
    let o = gbhard(&["solve", "-i", "-"], level);
    assert_eq!(o.status.code(), Some(2));
    assert!(std::str::from_utf8(&o.stderr)
        .unwrap()
        .contains("invalid level"));
}
