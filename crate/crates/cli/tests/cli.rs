use std::fs;
use std::process::{Command, Output};

fn meshstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_meshstar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn bound_prints_combined_value() {
    let out = meshstar(&["bound", "--m", "5", "--n", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("rn(P(5,5)□K1,5) >= 549\n"), "{}", stdout(&out));

    let out = meshstar(&["bound", "--m", "4", "--n", "5", "--format", "csv"]);
    assert!(
        stdout(&out).lines().any(|l| l.contains("Thm6") && l.contains(",264,")),
        "{}",
        stdout(&out)
    );
}

#[test]
fn exact_radio_numbers() {
    let out = meshstar(&["rn-exact", "--family", "star", "--n", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("rn = 4 (Exact"), "{}", stdout(&out));

    let out = meshstar(&["rn-exact", "--family", "path", "--m", "3", "--oracle"]);
    assert!(stdout(&out).starts_with("rn = 3 "), "{}", stdout(&out));

    let out = meshstar(&["rn-exact", "--m", "2", "--n", "2", "--format", "csv"]);
    assert!(
        stdout(&out).lines().nth(1).unwrap().starts_with("12,22,Exact,"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn generated_graph_sizes() {
    let out = meshstar(&["gen", "--m", "4", "--n", "5"]);
    assert!(stdout(&out).lines().any(|l| l == "vertices 96"));

    let text = stdout(&meshstar(&["gen", "--m", "2", "--n", "1"]));
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body[0], "vertices 8");
    assert_eq!(body.len() - 1, 12);

    let out = meshstar(&["diam", "--m", "3", "--n", "1"]);
    assert_eq!(stdout(&out), "diameter 5\n");
}

#[test]
fn label_then_validate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let good = dir.path().join("good.txt");
    let bad = dir.path().join("bad.txt");

    let gen = meshstar(&["gen", "--m", "3", "--n", "2", "--out", graph.to_str().unwrap()]);
    assert!(gen.status.success(), "{}", stderr(&gen));
    let label = meshstar(&["label", "--m", "3", "--n", "2", "--out", good.to_str().unwrap()]);
    assert!(label.status.success(), "{}", stderr(&label));
    assert!(fs::read_to_string(&good).unwrap().starts_with("# P(3,3)□K1,2"));

    let ok = meshstar(&[
        "validate",
        "--graph",
        graph.to_str().unwrap(),
        "--labeling",
        good.to_str().unwrap(),
    ]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).starts_with("valid, span "));

    let zeros: String = (0..27).map(|v| format!("{v} 0\n")).collect();
    fs::write(&bad, zeros).unwrap();
    let no = meshstar(&["validate", "--m", "3", "--n", "2", "--labeling", bad.to_str().unwrap()]);
    assert_eq!(no.status.code(), Some(1));
    assert!(
        stdout(&no).starts_with("invalid: 351 violating pairs"),
        "{}",
        stdout(&no)
    );
}

#[test]
fn usage_and_io_errors_exit_two() {
    assert_eq!(meshstar(&["bound", "--m", "1"]).status.code(), Some(2));
    assert_eq!(meshstar(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(meshstar(&["verify", "--m", "2"]).status.code(), Some(2));
    assert_eq!(meshstar(&["bound", "--indexing", "diagonal"]).status.code(), Some(2));
    assert_eq!(
        meshstar(&["compare", "--m-min", "5", "--m-max", "3"]).status.code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.txt");
    let out = meshstar(&["validate", "--m", "2", "--labeling", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("missing.txt"), "{}", stderr(&out));
}

#[test]
fn verify_single_point_csv() {
    let out = meshstar(&["verify", "--m", "2", "--n", "1", "--indexing", "row-major"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("claim_id,m,n,indexing,expected_num,expected_den,observed,verdict\n"));
    assert!(text.contains("\nThm6.Value,2,1,-,16,1,10,Mismatch\n"), "{text}");
    assert!(text.contains("\nCor3.Diameter,2,1,-,4,1,3,Mismatch\n"), "{text}");
    assert!(text.contains("\nEx3.1.Value,4,5,-,304,1,264,Mismatch\n"), "{text}");
}

#[test]
fn compare_ratio_is_m() {
    let out = meshstar(&["compare", "--m-min", "2", "--m-max", "7", "--n", "5"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,n,product_count,star_path_count,ratio"));
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f[0], f[4], "{line}");
    }
    assert!(text.contains("\n4,5,96,24,4\n"));
    assert!(text.contains("\n5,5,150,30,5\n"));
}
