use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn minkring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minkring"))
        .args(args)
        .output()
        .expect("spawn minkring")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).expect("golden file")
}

#[test]
fn worked_examples_match_golden_files() {
    let cases: [(&str, &[&str]); 3] = [
        (
            "member_g1.txt",
            &[
                "member",
                "--ring",
                "coxeter",
                "(y1-1)*(y1-x1)",
                "--format",
                "structured",
            ],
        ),
        (
            "member_x1.txt",
            &[
                "member",
                "--ring",
                "coxeter",
                "x1",
                "--format",
                "structured",
            ],
        ),
        (
            "identity_triangle.txt",
            &[
                "identity",
                "--polytope",
                "triangle",
                "--cover",
                "edge:OA,vertex:B",
                "--format",
                "structured",
            ],
        ),
    ];
    for (file, args) in cases {
        let out = minkring(args);
        assert!(out.status.success(), "{file}");
        assert_eq!(
            String::from_utf8(out.stdout).unwrap(),
            golden(file),
            "{file}"
        );
    }
}

#[test]
fn exit_status_tracks_success_not_the_answer() {
    assert!(minkring(&["member", "x1"]).status.success());
    let bad = minkring(&["member", "--ring", "coxeter", "y1^^2"]);
    assert!(!bad.status.success());
    assert!(String::from_utf8(bad.stderr)
        .unwrap()
        .contains("parse error at byte"));
    assert!(!minkring(&["member", "--ring", "box:1", "x^-1"])
        .status
        .success());
    assert!(!minkring(&["identity", "--polytope", "triangle"])
        .status
        .success());
    assert!(!minkring(&["member", "--ring", "disk", "x"])
        .status
        .success());
}

#[test]
fn negative_leading_terms_are_payloads() {
    let out = minkring(&[
        "member",
        "--ring",
        "box:1:signed",
        "-x + x",
        "--format",
        "structured",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("result: true"));
}

#[test]
fn reads_polynomials_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_minkring"))
        .args(["member", "--format", "structured"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"(y1-1)*(y1-x1)\n\nx1\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        format!("{}\n{}", golden("member_g1.txt"), golden("member_x1.txt"))
    );
}

#[test]
fn writes_report_files() {
    let dir = std::env::temp_dir().join(format!("minkring-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let out = minkring(&[
        "member",
        "x1",
        "--format",
        "structured",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        golden("member_x1.txt")
    );
    std::fs::remove_dir_all(dir).ok();
}
