use std::path::PathBuf;
use std::process::{Command, Output};

use gjcluster_cli::render::{parse, Format};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gjcluster"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bin(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8")
}

fn sample(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("samples")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn ascent_table_last_row() {
    let out = stdout(&["tables", "--name", "asc", "--n", "9"]);
    assert!(
        out.lines()
            .any(|l| l == " 9 | 1 + 133*t + 451*t^2 + 235*t^3 + 15*t^4"),
        "{out}"
    );
}

#[test]
fn parity_tables() {
    let out = stdout(&[
        "tables",
        "--name",
        "asc-parity",
        "--n",
        "10",
        "--format",
        "json",
    ]);
    let rows = parse(Format::Json, &out).unwrap();
    let last: Vec<String> = rows
        .iter()
        .filter(|r| r.n == 10)
        .map(|r| r.terms[0].1.clone())
        .collect();
    assert_eq!(last, ["309", "754"]);
    let out = stdout(&["tables", "--name", "pv-parity", "--n", "8"]);
    assert_eq!(out.matches("## ").count(), 4);
    for v in ["136", "208", "137", "131"] {
        assert!(out.contains(&format!(" 8 | {v}\n")), "{out}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["tables", "--name", "pv", "--n", "8", "--format", "json"][..],
        &["network", "--file", &sample("two_vertex.json"), "--n", "6"],
        &["cluster", "--avoid", "aba", "--avoid", "abab", "--n", "7"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn renderings_carry_the_same_coefficients() {
    for name in ["asc", "peak", "pv", "pv-parity"] {
        let rows: Vec<_> = [Format::Plain, Format::Csv, Format::Json]
            .into_iter()
            .map(|f| {
                let flag = format!("{f:?}").to_lowercase();
                parse(
                    f,
                    &stdout(&["tables", "--name", name, "--n", "8", "--format", &flag]),
                )
                .unwrap()
            })
            .collect();
        assert!(!rows[0].is_empty());
        assert_eq!(rows[0], rows[1], "{name}: plain vs csv");
        assert_eq!(rows[0], rows[2], "{name}: plain vs json");
    }
}

#[test]
fn typo_cells_are_annotated() {
    let out = stdout(&["tables", "--name", "peak", "--n", "5"]);
    assert!(
        out.lines()
            .any(|l| l.starts_with(" 4 | 4 + 4*t + t^2 | note:")),
        "{out}"
    );
    let out = stdout(&["tables", "--name", "pv", "--n", "5", "--format", "csv"]);
    assert!(
        out.lines()
            .any(|l| l.starts_with("pv,5,") && l.contains("2*t1^2*t2")),
        "{out}"
    );
}

#[test]
fn worked_example_entry() {
    let file = sample("two_vertex.json");
    let at_zero = stdout(&[
        "network", "--file", &file, "--entry", "1,2", "--t", "0", "--n", "6",
    ]);
    // (2x - x^2 + x^4)/(1 - x - 3x^2 + 2x^3 - x^5)
    let values: Vec<&str> = at_zero
        .lines()
        .filter_map(|l| l.split(" | ").nth(1))
        .collect();
    assert_eq!(values, ["0", "2", "1", "7", "7", "26", "35"]);
    let at_one = stdout(&[
        "network",
        "--file",
        &file,
        "--entry",
        "1,2",
        "--t",
        "t1=1,t2=1",
        "--n",
        "5",
    ]);
    let values: Vec<&str> = at_one
        .lines()
        .filter_map(|l| l.split(" | ").nth(1))
        .collect();
    assert_eq!(values, ["0", "2", "2", "10", "18", "58"]);
    let all = stdout(&["network", "--file", &file, "--n", "3"]);
    assert_eq!(all.matches("## F[").count(), 4);
}

#[test]
fn coin_flip_probability() {
    let out = stdout(&[
        "network",
        "--file",
        &sample("coin_flip.json"),
        "--avoid",
        "ab",
        "--prob",
        "--n",
        "2",
    ]);
    assert!(out.ends_with(" 2 | 3/4\n"), "{out}");
}

#[test]
fn series_routes_agree() {
    let base = [
        "series", "--name", "pv", "--bound", "3", "--n", "9", "--format", "json",
    ];
    let rows = |route: &str| {
        let mut args = base.to_vec();
        args.extend(["--route", route]);
        parse(Format::Json, &stdout(&args)).unwrap()
    };
    let net = rows("network");
    for route in ["cf", "ratio", "oracle"] {
        assert_eq!(rows(route), net, "{route}");
    }
    let out = stdout(&[
        "series",
        "--name",
        "asc-ends",
        "--heights",
        "O",
        "--route",
        "closed",
        "--n",
        "10",
    ]);
    assert!(out.ends_with("10 | 754\n"), "{out}");
}

#[test]
fn verify_reports_each_suite() {
    let out = stdout(&["verify", "--suite", "corollaries,stabilization", "--n", "8"]);
    assert!(out.starts_with("corollaries   PASS"), "{out}");
    assert!(out.contains("stabilization PASS"));
    assert!(out.contains("note: one peak, n=4: binomial sum 1 vs coefficient 4"));
}

#[test]
fn bad_input_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let ambiguous = dir.path().join("ambiguous.json");
    std::fs::write(
        &ambiguous,
        r#"{"vertices": 3, "arcs": [
            {"from": 1, "to": 2, "letters": ["a"]},
            {"from": 1, "to": 3, "letters": ["a"]},
            {"from": 2, "to": 1, "letters": ["b"]},
            {"from": 3, "to": 1, "letters": ["b"]}]}"#,
    )
    .unwrap();
    let out = bin(&["network", "--file", ambiguous.to_str().unwrap(), "--n", "4"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("1 -a-> 2 -b-> 1") && err.contains("1 -a-> 3 -b-> 1"),
        "{err}"
    );

    let broken = dir.path().join("broken.json");
    std::fs::write(
        &broken,
        "{\n  \"vertices\": 1,\n  \"arcs\": [{\"from\": 1}]\n}",
    )
    .unwrap();
    let out = bin(&["network", "--file", broken.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let out = bin(&["tables", "--name", "nope"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown table"));
}
