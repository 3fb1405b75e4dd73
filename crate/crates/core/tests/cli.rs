use std::process::Command;

use zetacoeffs::ExactRational;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_zetacoeffs"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8"))
}

#[test]
fn table_matches_golden_files() {
    let (code, plain) = run(&["table", "--kmax", "6", "--jmax", "8"]);
    assert_eq!(code, 0);
    assert_eq!(plain, include_str!("golden/table_6_8.txt"));
    let (_, scaled) = run(&["table", "--kmax", "6", "--jmax", "8", "--scaled"]);
    assert_eq!(scaled, include_str!("golden/table_6_8_scaled.txt"));
}

#[test]
fn table_corner_csv() {
    assert_eq!(run(&["table", "--kmax", "0", "--jmax", "0", "--format", "csv"]), (0, "1\n".into()));
}

#[test]
fn single_values() {
    assert_eq!(run(&["coeff", "--k", "4", "--j", "3"]), (0, "85/216\n".into()));
    assert_eq!(run(&["coeff", "--k", "4", "--j", "3", "--method", "ogf"]).1, "85/216\n");
    let (code, out) = run(&["zetastar", "--s", "1", "--terms", "80", "--format", "decimal"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("0.693147"), "{out}");
    assert_eq!(run(&["msum", "--k", "3", "--d", "1", "--n", "1", "--residual"]).1, "-191/32\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["polylog", "--s", "2", "--z", "1"]).0, 1);
    assert_eq!(run(&["verify", "--suite", "nosuch"]).0, 2);
    let (code, json) = run(&["verify", "--suite", "msums", "--param", "n=0..2", "--param", "k=4"]);
    assert_eq!(code, 0);
    assert!(json.contains("\"status\": \"fail\""));
    assert_eq!(run(&["verify", "--suite", "fourier"]).0, 0);
}

#[test]
fn fractions_round_trip() {
    for (k, j) in [(4, 3), (6, 8), (5, 7), (2, 1), (3, 0)] {
        let (_, out) = run(&["coeff", "--k", &k.to_string(), "--j", &j.to_string()]);
        let parsed: ExactRational = out.trim().parse().expect("fraction");
        assert_eq!(parsed, zetacoeffs::coeffs::s2star_rec(k, j));
        assert_eq!(parsed.to_string(), out.trim());
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("zetacoeffs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.md");
    let (code, out) = run(&["table", "--kmax", "2", "--jmax", "2", "--format", "markdown", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("| 2 | 0 | 1 | -1/2 |"));
    std::fs::remove_dir_all(&dir).unwrap();
}
