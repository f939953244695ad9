use std::process::{Command, Output};

fn kjac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kjac"))
        .args(args)
        .output()
        .expect("kjac runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = kjac(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code_of(args: &[&str]) -> i32 {
    kjac(args).status.code().expect("exit code")
}

#[test]
fn term_goldens() {
    assert_eq!(
        stdout_of(&["term", "--family", "J", "--k", "2", "--n", "6"]),
        "18\n"
    );
    assert_eq!(
        stdout_of(&["term", "--family", "J", "--k", "sym", "--n", "3"]),
        "k^2 - k\n"
    );
    assert_eq!(
        stdout_of(&["term", "--family", "J", "--k", "2", "--n", "-2"]),
        "1/2\n"
    );
}

#[test]
fn term_formats() {
    assert_eq!(
        stdout_of(&["term", "--family", "j", "--k", "sym", "--n", "-2", "--format", "json"]),
        "{\"family\":\"j\",\"k\":\"sym\",\"n\":-2,\"value\":\"-1 - k^-1 + 2k^-2\"}\n"
    );
    assert_eq!(
        stdout_of(&["term", "--family", "Kc", "--n", "4", "--format", "csv"]),
        "n,value\n4,15\n"
    );
    assert_eq!(stdout_of(&["term", "--family", "Z", "--n", "-1"]), "1\n");
}

#[test]
fn matrix_goldens() {
    assert_eq!(
        stdout_of(&["matrix", "--family", "Jn", "--k", "sym", "--n", "-1", "--format", "json"]),
        "[[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"],[\"k^-1\",\"-1 + k^-1\",\"-1 + k^-1\"]]\n"
    );
    assert_eq!(
        stdout_of(&["matrix", "--family", "M", "--k", "sym", "--n", "0"]),
        "[ 1  0  0 ]\n[ 0  1  0 ]\n[ 0  0  1 ]\n"
    );
    assert_eq!(
        stdout_of(&["matrix", "--family", "N", "--k", "2", "--n", "0", "--format", "csv"]),
        "1,4,4\n2,-1,2\n1,1,-2\n"
    );
}

#[test]
fn table_goldens() {
    assert_eq!(
        stdout_of(&["table", "--family", "Jc", "--from", "0", "--to", "7", "--format", "csv"]),
        "n,value\n0,0\n1,1\n2,1\n3,2\n4,5\n5,9\n6,18\n7,37\n"
    );
    assert_eq!(
        stdout_of(&["table", "--family", "Y", "--from", "0", "--to", "5", "--format", "csv"]),
        "n,value\n0,2\n1,-1\n2,-1\n3,2\n4,-1\n5,-1\n"
    );
    assert_eq!(
        stdout_of(&[
            "table", "--family", "j", "--k", "sym", "--from", "0", "--to", "2", "--format", "json"
        ]),
        "[[0,\"2\"],[1,\"k - 1\"],[2,\"k^2 + 1\"]]\n"
    );
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        code_of(&[
            "verify",
            "--identity",
            "all",
            "--k",
            "2,3,sym",
            "--n",
            "1..10",
            "--m",
            "1..10"
        ]),
        0
    );
    assert_eq!(
        code_of(&[
            "verify",
            "--identity",
            "det_J_formula",
            "--k",
            "sym",
            "--n",
            "1..12"
        ]),
        0
    );
    assert_eq!(code_of(&["verify", "--identity", "nonsense"]), 2);
}

#[test]
fn verify_reports() {
    let csv = stdout_of(&[
        "verify",
        "--identity",
        "square_a1",
        "--k",
        "2,sym",
        "--n",
        "1..8",
        "--format",
        "csv",
    ]);
    assert_eq!(csv, "identity,status,checks\nsquare_a1,pass,16\n");
    let json = stdout_of(&[
        "verify",
        "--identity",
        "det_J_formula",
        "--k",
        "sym",
        "--n",
        "-3..3",
        "--format",
        "json",
    ]);
    assert_eq!(
        json,
        "[{\"identity\":\"det_J_formula\",\"status\":\"pass\",\"checks\":7}]\n"
    );
}

#[test]
fn usage_and_domain_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["term", "--family", "J", "--k", "-2", "--n", "1"],
        &["term", "--family", "J", "--k", "0", "--n", "1"],
        &["term", "--family", "J", "--k", "1/x", "--n", "1"],
        &["term", "--family", "J", "--n", "1"],
        &["term", "--family", "Q", "--k", "2", "--n", "1"],
        &["term", "--family", "Jc", "--n", "-1"],
        &["matrix", "--family", "M", "--k", "2", "--n", "-1"],
        &["matrix", "--family", "N", "--k", "sym", "--n", "-3"],
        &[
            "table", "--family", "J", "--k", "2", "--from", "3", "--to", "1",
        ],
        &["verify", "--identity", "square_a1", "--n", "0..3"],
        &["verify", "--identity", "square_a1", "--n", "5..2"],
        &["verify", "--identity", "square_a1", "--k", ""],
        &["frobnicate"],
    ];
    for args in cases {
        let out = kjac(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?} wrote to stdout");
        assert!(!out.stderr.is_empty(), "{args:?} gave no diagnostic");
    }
}

#[test]
fn out_flag_writes_payload_verbatim() {
    let dir = std::env::temp_dir().join(format!("kjac-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("n0.csv");
    let out = kjac(&[
        "matrix",
        "--family",
        "N",
        "--k",
        "2",
        "--n",
        "0",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "1,4,4\n2,-1,2\n1,1,-2\n"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = [
        "table", "--family", "t", "--k", "7/3", "--from", "-6", "--to", "6", "--format", "json",
    ];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}
