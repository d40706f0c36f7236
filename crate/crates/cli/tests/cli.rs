use std::process::{Command, Output};

use realbetti_cli::ComputeOutput;

fn realbetti(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_realbetti"))
        .args(args)
        .env_remove("REALBETTI_CACHE_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_text() {
    let o = realbetti(&[
        "compute",
        "--rank",
        "2",
        "--degree",
        "1",
        "--genus",
        "2",
        "--circles",
        "2",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(
        text.contains("P(t) = 1 + 4t + 7t^2 + 7t^3 + 4t^4 + t^5"),
        "{text}"
    );
    assert!(text.contains("wall time:"));
}

#[test]
fn json_is_byte_stable() {
    let o = realbetti(&[
        "compute",
        "--rank",
        "3",
        "--degree",
        "1",
        "--genus",
        "2",
        "--circles",
        "3",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let parsed: ComputeOutput = serde_json::from_str(text.trim_end()).unwrap();
    assert_eq!(format!("{}\n", parsed.to_json()), text);
    assert_eq!(parsed.degree, 10);
}

#[test]
fn negative_degree_is_accepted() {
    let a = realbetti(&[
        "compute",
        "--rank",
        "2",
        "--degree",
        "-1",
        "--genus",
        "3",
        "--circles",
        "1",
        "--format",
        "csv",
    ]);
    let b = realbetti(&[
        "compute",
        "--rank",
        "2",
        "--degree",
        "1",
        "--genus",
        "3",
        "--circles",
        "1",
        "--format",
        "csv",
    ]);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn validation_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &[
            "compute",
            "--rank",
            "2",
            "--degree",
            "2",
            "--genus",
            "2",
            "--circles",
            "1",
        ],
        &[
            "compute",
            "--rank",
            "2",
            "--degree",
            "1",
            "--genus",
            "2",
            "--circles",
            "4",
        ],
        &[
            "compute",
            "--rank",
            "2",
            "--degree",
            "1",
            "--genus",
            "1",
            "--circles",
            "1",
        ],
        &[
            "compute",
            "--rank",
            "3",
            "--degree",
            "2",
            "--genus",
            "2",
            "--circles",
            "0",
        ],
        &[
            "compute",
            "--rank",
            "2",
            "--degree",
            "1",
            "--genus",
            "2",
            "--circles",
            "1",
            "--order",
            "3",
        ],
        &[
            "compute",
            "--rank",
            "2",
            "--degree",
            "1",
            "--genus",
            "2",
            "--circles",
            "1",
            "--w",
            "0",
        ],
        &[
            "strata",
            "list",
            "--rank",
            "2",
            "--degree",
            "1",
            "--genus",
            "0",
            "--max-codim",
            "3",
        ],
        &["formula", "dump", "--formula", "no-such-formula"],
    ];
    for args in cases {
        let o = realbetti(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        let err = stderr(&o);
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.starts_with("error: "));
    }
    let o = realbetti(&[
        "compute",
        "--rank",
        "2",
        "--degree",
        "2",
        "--genus",
        "2",
        "--circles",
        "1",
    ]);
    assert_eq!(stderr(&o), "error: NotCoprime rank=2 degree=2\n");
}

#[test]
fn tables_recompute() {
    for section in ["rank2-g2", "rank2-g3", "rank3-g2"] {
        let o = realbetti(&["table", section]);
        assert!(o.status.success(), "{section}: {}", stdout(&o));
        assert!(stdout(&o).contains(" 0 mismatches"));
    }
    let o = realbetti(&["table", "rank2-g3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn verify_passes_and_perturbation_fails() {
    let o = realbetti(&["verify", "--order", "40"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));

    let o = realbetti(&["verify", "--order", "40", "--perturb"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with("FAIL identity"))
            .count(),
        4
    );
}

#[test]
fn formula_dump_gauge() {
    let o = realbetti(&[
        "formula",
        "dump",
        "--formula",
        "gauge-real",
        "--genus",
        "1",
        "--circles",
        "1",
        "--rank",
        "1",
        "--order",
        "4",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["series"]["order"], 4);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = [
        "--cache-dir",
        d,
        "compute",
        "--rank",
        "3",
        "--degree",
        "2",
        "--genus",
        "2",
        "--circles",
        "1",
        "--format",
        "json",
    ];
    let cold = realbetti(&args);
    let warm = realbetti(&args);
    assert!(cold.status.success());
    assert_eq!(cold.stdout, warm.stdout);
    let stats = stdout(&realbetti(&["--cache-dir", d, "cache", "stats"]));
    assert!(!stats.contains("entries: 0"), "{stats}");
    assert!(realbetti(&["--cache-dir", d, "cache", "clear"])
        .status
        .success());
    assert!(stdout(&realbetti(&["--cache-dir", d, "cache", "stats"])).contains("entries: 0"));
}
