use std::io::Write;
use std::process::{Command, Stdio};

use unrep_cli::{ErrorDoc, Report};

const LZ4: &str = r#"{"degree":4,"generators":[[0,0,2,2],[1,1,2,2],[0,0,3,3],[1,1,3,3]]}"#;
const CYC4: &str = r#"{"degree":4,"generators":[[1,2,3,0]]}"#;
const CLIFF4: &str = r#"{"degree":4,"generators":[[1,0,3,2],[2,3,2,3]]}"#;

struct Run {
    code: i32,
    stdout: String,
}

fn unrep(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_unrep"))
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
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
    }
}

fn report(args: &[&str], stdin: &str) -> Report {
    let r = unrep(args, stdin);
    assert_eq!(r.code, 0, "{}", r.stdout);
    serde_json::from_str(&r.stdout).unwrap()
}

fn error(args: &[&str], stdin: &str, code: i32) -> ErrorDoc {
    let r = unrep(args, stdin);
    assert_eq!(r.code, code, "{}", r.stdout);
    serde_json::from_str(&r.stdout).unwrap()
}

#[test]
fn lz4_has_no_unreps() {
    let r = report(&["unreps"], LZ4);
    let u = r.unreps.unwrap();
    assert_eq!(u.count, 0);
    assert!(u.precheck);
}

#[test]
fn cyc4_has_four_unreps() {
    let u = report(&["unreps"], CYC4).unreps.unwrap();
    assert_eq!(u.count, 4);
    assert_eq!(
        u.maps,
        vec![
            vec![0, 1, 2, 3],
            vec![1, 2, 3, 0],
            vec![2, 3, 0, 1],
            vec![3, 0, 1, 2]
        ]
    );
    // x·y = (x + y) mod 4 under the first map
    assert_eq!(u.induced[0][1], vec![1, 2, 3, 0]);
}

#[test]
fn oracle_and_parallel_routes_agree() {
    let base = report(&["unreps"], CLIFF4).unreps.unwrap();
    for flags in [&["unreps", "--oracle"][..], &["unreps", "--jobs", "3"][..]] {
        let other = report(flags, CLIFF4).unreps.unwrap();
        assert_eq!(other.maps, base.maps);
        assert_eq!(other.induced, base.induced);
    }
}

#[test]
fn check_all_on_cliff4() {
    let r = report(&["check-all"], CLIFF4);
    assert!(r.verdicts.len() >= 10);
    assert!(r.verdicts.iter().all(|v| v.holds), "{:?}", r.verdicts);
    for name in [
        "theorem_c",
        "clifford_existence",
        "centralizer_theorem",
        "heap_axioms",
    ] {
        assert!(r.verdicts.iter().any(|v| v.name == name), "missing {name}");
    }
}

#[test]
fn check_all_on_labeled_table() {
    let r = report(
        &["check-all"],
        r#"{"table":[[0,1,2],[1,2,0],[2,0,1]],"labels":["e","a","b"]}"#,
    );
    assert!(r
        .verdicts
        .iter()
        .any(|v| v.name == "table_recovered" && v.holds));
    assert!(r.all_verdicts_hold());
}

#[test]
fn every_command_runs() {
    for cmd in [
        "analyze",
        "unreps",
        "heap",
        "centralizer",
        "pseudounits",
        "clifford",
        "check-all",
    ] {
        let r = report(&[cmd], CLIFF4);
        assert_eq!(r.command, cmd);
        assert!(r.timing_ms.is_none());
    }
}

#[test]
fn heap_identity_flag() {
    let h = report(&["heap", "--identity", "2"], CYC4).heap.unwrap();
    assert_eq!(h.identity, 2);
    assert!(h.axioms && h.cyclic);
    assert_eq!(h.group_table[2], vec![0, 1, 2, 3]);
    let e = error(&["heap", "--identity", "4"], CYC4, 1);
    assert_eq!(e.error.code, "input");
}

#[test]
fn clifford_report() {
    let c = report(&["clifford"], CLIFF4).clifford.unwrap();
    assert_eq!(c.idempotents, vec![0, 2]);
    let t = c.theorem_c.unwrap();
    assert!(t.exhaustive);
    assert_eq!(t.bijections_checked, 24);
    assert_eq!(t.action_homs, 2);
    assert!(t.disagreements.is_empty());
    assert_eq!(c.existence.unwrap().evaluation_count, 2);
    assert_eq!(error(&["clifford"], LZ4, 1).error.code, "input");
}

#[test]
fn pseudounits_of_s3() {
    // S3 as permutations of three points; its table has six pseudounits
    let p = report(
        &["pseudounits"],
        r#"{"degree":3,"generators":[[1,0,2],[1,2,0]]}"#,
    )
    .pseudounits
    .unwrap();
    assert_eq!(p.count, 6);
    assert_eq!(p.unit_count, Some(6));
}

#[test]
fn parse_errors() {
    for (text, needle) in [
        (r#"{"degree":4,"generators":[[1,2,3]]}"#, "length 3"),
        (
            r#"{"degree":4,"generators":[[1,2,3,0]],"table":[[0]]}"#,
            "not both",
        ),
        (r#"{"degree":2,"generators":[[0,"x"]]}"#, "malformed"),
        ("not json", "malformed"),
        (r#"{"table":[[0,1],[0,0]]}"#, "(1,0,1)"),
    ] {
        let e = error(&["analyze"], text, 1);
        assert_eq!(e.error.code, "input");
        assert!(
            e.error.message.contains(needle),
            "{text}: {}",
            e.error.message
        );
    }
}

#[test]
fn precondition_and_capacity_exit_codes() {
    assert_eq!(error(&["heap"], LZ4, 1).error.code, "precondition");
    let e = error(&["analyze", "--cap", "3"], CLIFF4, 2);
    assert_eq!(e.error.code, "capacity");
    let e = error(
        &["unreps", "--oracle"],
        r#"{"degree":9,"generators":[[1,2,3,4,5,6,7,8,0]]}"#,
        2,
    );
    assert_eq!(e.error.code, "capacity");
}

#[test]
fn output_is_byte_identical() {
    for cmd in ["check-all", "clifford", "centralizer"] {
        let a = unrep(&[cmd, "--seed", "7"], CLIFF4);
        let b = unrep(&[cmd, "--seed", "7"], CLIFF4);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn reports_round_trip() {
    for cmd in [
        "check-all",
        "clifford",
        "centralizer",
        "pseudounits",
        "heap",
    ] {
        let text = unrep(&[cmd], CLIFF4).stdout;
        let parsed: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(unrep_cli::to_json(&parsed), text);
    }
}

#[test]
fn reads_input_file() {
    let dir = std::env::temp_dir().join(format!("unrep-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cyc4.json");
    std::fs::write(&path, CYC4).unwrap();
    let r = unrep(&["unreps", path.to_str().unwrap()], "");
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("\"count\":4"));
    let missing = unrep(&["unreps", dir.join("nope.json").to_str().unwrap()], "");
    assert_eq!(missing.code, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn pretty_mode_has_tables_and_timing() {
    let r = unrep(&["check-all", "--pretty"], CLIFF4);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("unrepresentations: 2"));
    assert!(r.stdout.contains("verdicts"));
    assert!(r.stdout.trim_end().ends_with("ms"));
}
