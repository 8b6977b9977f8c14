use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walkcount"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn single_counts() {
    for (args, expected) in [
        (
            &["whom-path", "--m", "4", "--n", "5", "--j", "0"][..],
            "13\n",
        ),
        (
            &[
                "whom-grid",
                "--m",
                "4",
                "--n",
                "4",
                "--k",
                "5",
                "--i",
                "0",
                "--j",
                "0",
            ],
            "43\n",
        ),
        (
            &["lattice", "--i", "2", "--j", "1", "--k", "0", "--r", "0"],
            "2\n",
        ),
        (&["lattice", "--i", "1", "--j", "1", "--k", "1"], "6\n"),
        (&["hom-path", "--m", "8", "--n", "8", "--j", "3"], "103\n"),
        (&["whom-path", "--m", "4", "--n", "5"], "95\n"),
        (
            &["whom-grid", "--m", "8", "--n", "8", "--k", "8"],
            "2951832\n",
        ),
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&out), expected, "{args:?}");
    }
}

#[test]
fn json_count_round_trips_as_string() {
    let out = run(&[
        "whom-grid",
        "--m",
        "30",
        "--n",
        "9",
        "--k",
        "11",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["query"]["kind"], "whom-grid");
    assert_eq!(v["query"]["k"], 11);
    let count = v["count"].as_str().expect("count is a string");
    let text = run(&["whom-grid", "--m", "30", "--n", "9", "--k", "11"]);
    assert_eq!(format!("{count}\n"), stdout(&text));
    assert!(
        count.len() > 20,
        "large enough to lose precision as a float"
    );
}

#[test]
fn usage_errors_exit_2_with_one_line() {
    for args in [
        &["whom-path", "--m", "4"][..],
        &["whom-path", "--m", "4", "--n", "5", "--j", "5"],
        &["whom-path", "--m", "0", "--n", "5", "--j", "0"],
        &["whom-grid", "--m", "4", "--n", "4", "--k", "5", "--i", "0"],
        &["table", "--which", "nope"],
        &["table", "--which", "whom-grid", "--n-max", "0"],
        &["verify", "--max-m", "0", "--max-n", "3", "--max-k", "3"],
        &[
            "verify",
            "--max-m",
            "7",
            "--max-n",
            "3",
            "--max-k",
            "3",
            "--mode",
            "brute-force",
        ],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn help_on_every_subcommand() {
    for sub in [
        "hom-path",
        "whom-path",
        "whom-grid",
        "lattice",
        "table",
        "verify",
    ] {
        let out = run(&[sub, "--help"]);
        assert_eq!(out.status.code(), Some(0), "{sub}");
        assert!(stdout(&out).contains("Usage"), "{sub}");
    }
}

#[test]
fn table_rows_from_each_reference_table() {
    let grid = stdout(&run(&["table", "--which", "whom-grid", "--format", "csv"]));
    assert!(grid.lines().any(|l| l == "8,8,8,2951832"));
    let hom = stdout(&run(&["table", "--which", "hom-path", "--format", "csv"]));
    assert!(hom.lines().any(|l| l == "5,2,7,14"));
    let whom = stdout(&run(&["table", "--which", "whom-path", "--format", "csv"]));
    assert!(whom.lines().any(|l| l == "2,0,2,2"));
}

#[test]
fn all_anchors_mirrors_default_rows() {
    let out = stdout(&run(&[
        "table",
        "--which",
        "whom-path",
        "--all-anchors",
        "--m-max",
        "5",
        "--n-max",
        "6",
    ]));
    let rows: Vec<Vec<u64>> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect();
    for r in &rows {
        let (m, j, n, c) = (r[0], r[1], r[2], r[3]);
        let mirror = rows
            .iter()
            .find(|s| s[0] == m && s[1] == n - 1 - j && s[2] == n)
            .unwrap();
        assert_eq!(mirror[3], c);
    }
}

#[test]
fn verify_brute_force_passes() {
    let out = run(&[
        "verify",
        "--max-m",
        "5",
        "--max-n",
        "4",
        "--max-k",
        "4",
        "--mode",
        "brute-force",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report = &v["report"];
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(
        report["summary"]["total"].as_u64().unwrap() as usize,
        checks.len()
    );
    assert_eq!(report["summary"]["fail"], 0);
    assert!(checks
        .iter()
        .all(|c| c["oracle_kind"] == "brute-force" && c["agrees"] == true));
    assert_eq!(v["query"]["mode"], "brute-force");
}

#[test]
fn verify_both_reports_each_oracle() {
    let out = run(&[
        "verify", "--max-m", "3", "--max-n", "3", "--max-k", "2", "--mode", "both",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = v["report"]["checks"].as_array().unwrap();
    let dp = checks.iter().filter(|c| c["oracle_kind"] == "dp").count();
    let bf = checks
        .iter()
        .filter(|c| c["oracle_kind"] == "brute-force")
        .count();
    assert_eq!(dp, bf);
    assert!(checks.iter().all(|c| c["formula_value"].is_string()));
}
