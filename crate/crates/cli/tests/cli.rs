use std::io::Write;
use std::process::{Command, Output, Stdio};

fn mck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn render(json: &str, format: &str) -> String {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mck"))
        .args(["render", "-", "--format", format])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(json.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    // A re-rendered report keeps the exit code of its verdicts.
    assert!(matches!(out.status.code(), Some(0 | 1)));
    stdout(&out)
}

#[test]
fn schubert_degrees() {
    for (mono, deg) in [("g^8", "14"), ("g^6c", "5"), ("g^4c^2", "2")] {
        let o = mck(&["schubert", "--m", "6", "--monomial", mono]);
        assert!(o.status.success());
        assert!(
            stdout(&o).contains(&format!("degree    : {deg}\n")),
            "{mono}"
        );
    }
    let o = mck(&["schubert", "--m", "6", "--monomial", "g^2"]);
    assert!(stdout(&o).contains("σ_{2,0} + σ_{1,1}"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(
        mck(&["schubert", "--m", "6", "--monomial", "g^x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        mck(&["schubert", "--m", "2", "--monomial", "g"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(mck(&["hodge", "quartic"]).status.code(), Some(2));
    assert_eq!(
        mck(&["mck", "--n", "4", "--triple", "1,2"]).status.code(),
        Some(2)
    );
}

#[test]
fn fano_subchecks() {
    let o = mck(&["fano", "--n", "4", "hilbert"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("computed : (1,1,2,1,1)"));

    let o = mck(&["fano", "--n", "4", "socle"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("fano.socle       skipped"));
    assert!(text.contains("reason: n = 4 is below the supported range"));

    let o = mck(&["fano", "--n", "7", "socle"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("P                : g^6 - "));

    let o = mck(&["fano", "--n", "4", "dims"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("k=4 : hdg 12, bound 12"));
}

#[test]
fn failing_check_forces_nonzero_exit() {
    let o = mck(&["fano", "--n", "5", "recurrence"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("fano.recurrence              pass"));
    assert!(text.contains("fano.recurrence.closed-form  fail"));
}

#[test]
fn mck_sweep_and_triples() {
    let o = mck(&["mck", "--n", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o)
        .lines()
        .any(|l| l.trim_start().starts_with("failures ") && l.ends_with(": 0")));

    let o = mck(&["mck", "--n", "4", "--triple", "2,2,0"]);
    assert!(stdout(&o).contains("status          : vanishes"));
    let o = mck(&["mck", "--n", "4", "--triple", "2,2,4"]);
    assert!(stdout(&o).contains("sum-degree identity verified"));
}

#[test]
fn hodge_tables() {
    let o = mck(&["hodge", "cubic", "--n", "4"]);
    assert!(stdout(&o).contains("H^4    : 0 1 21 1 0"));
    let o = mck(&["hodge", "kuechle-c7"]);
    let text = stdout(&o);
    assert!(text.contains("h^{1,1} : 2") && text.contains("h^{2,2} : 22"));
    let o = mck(&["hodge", "fano-of-lines", "--n", "4"]);
    let text = stdout(&o);
    assert!(text.contains("(1,0,23,0,276,0,23,0,1)"));
    assert!(text.contains("χ              : 324"));
}

#[test]
fn json_round_trip_is_byte_identical() {
    let o = mck(&["fano", "--n", "5", "recurrence", "--format", "json"]);
    let json = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["checks"][1]["verdict"]["status"], "fail");
    assert!(v["checks"][0]["millis"].is_u64());
    assert_eq!(render(&json, "json"), json);
    let table = render(&json, "table");
    assert!(table.starts_with("mck 0.1.0 :: fano --n 5 recurrence --format json\n"));
    assert_eq!(render(&json, "table"), table);
}

#[test]
fn csv_output() {
    let o = mck(&["hodge", "fano-of-lines", "--n", "4", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("name,inputs,verdict,reason,millis,witness")
    );
    assert!(lines
        .next()
        .unwrap()
        .starts_with("hodge.fano-of-lines,n=4,pass,,"));
}

#[test]
fn verify_all_order_is_independent_of_workers() {
    let names = |jobs: &str| -> Vec<String> {
        let o = mck(&[
            "verify-all",
            "--n-max",
            "5",
            "--jobs",
            jobs,
            "--format",
            "json",
        ]);
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| format!("{} {} {}", c["name"], c["inputs"], c["verdict"]))
            .collect()
    };
    let one = names("1");
    assert_eq!(one, names("4"));
    assert!(one.iter().any(|n| n.contains("c10.mck.gamma3")));
}
