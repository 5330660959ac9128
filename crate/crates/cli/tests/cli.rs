//! End-to-end runs of the installed binary.

use std::process::{Command, Output};

fn viennot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_viennot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn rs_json_reproduces_worked_example() {
    let out = viennot(&[
        "rs",
        "2,9,1,15,4,7,13,18,11,19,5,14,3,10,6,17,8,16,12",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["format_version"], 1);
    assert_eq!(
        doc["p"],
        serde_json::json!([
            [1, 3, 5, 6, 8, 12],
            [2, 4, 10, 14, 16],
            [7, 11, 17, 19],
            [9, 13, 18],
            [15]
        ])
    );
    assert_eq!(
        doc["q"],
        serde_json::json!([
            [1, 2, 4, 7, 8, 10],
            [3, 5, 6, 12, 16],
            [9, 14, 17, 18],
            [11, 15, 19],
            [13]
        ])
    );
    assert_eq!(doc["shape"], serde_json::json!([6, 5, 4, 3, 1]));
}

#[test]
fn rs_text_small() {
    let out = viennot(&["rs", "2,4,3,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "P:\n1 3\n2\n4\nQ:\n1 2\n3\n4\nshape: (2,1,1)\n");
}

#[test]
fn viennot_ascii_snapshot_and_determinism() {
    let expected = "\
# viennot-ascii/1
   1   1   2   3
 4 +   •-1-+-2-+-3-
   1       1   2
 3 +   .   •-1-+-1-
   1           2
 2 •-1-+-1-+-1-+-2-
               1
 1 .   .   .   •-1-
   1   2   3   4
";
    let first = viennot(&["viennot", "2,4,3,1"]);
    assert!(first.status.success());
    assert_eq!(stdout(&first), expected);
    let second = viennot(&["viennot", " 2 , 4 , 3 , 1 "]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn updown_ascii_snapshot() {
    let out = viennot(&["updown", "1,-1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "# updown-ascii/1\n   1\n 1 •-1-x\n   1   2\n");
}

#[test]
fn updown_accepts_pair_syntax() {
    let by_word = viennot(&["updown", "4,2,3,-4,-3,1,-2,-1", "--format", "json"]);
    let by_pairs = viennot(&["updown", "2-7,1-4,3-5,6-8", "--format", "json"]);
    assert!(by_word.status.success());
    assert_eq!(by_word.stdout, by_pairs.stdout);
}

#[test]
fn svg_render_to_file() {
    let dir = std::env::temp_dir().join(format!("viennot-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("big.svg");
    let out = viennot(&[
        "updown",
        "7,8,6,5,-8,3,-7,4,1,-6,2,-5,-4,-3,-2,-1",
        "--format",
        "svg",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg "));
    assert!(svg.contains("data-format-version=\"1\""));
    assert!(svg.contains("stroke=\"blue\""));
    assert!(!svg.contains("stroke=\"black\" stroke-width=\"3\" points"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn pattern_reports_the_bold_witness() {
    let out = viennot(&["pattern", "7,8,6,5,-8,3,-7,4,1,-6,2,-5,-4,-3,-2,-1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "length: 4\nstrands: 7,6,5,3\ntimes: 1,3,4,6\n");

    let tiny = viennot(&["pattern", "1,-1"]);
    assert!(tiny.status.success());
    assert_eq!(stdout(&tiny), "length: 1\nstrands: 1\ntimes: 1\n");
}

#[test]
fn count_census_lines() {
    let out = viennot(&["count", "--points", "6", "--avoid", "1"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "k,n,count_avoiding,count_ud_bounded,agree\n3,1,5,5,agree\n"
    );

    let out = viennot(&["count", "--points", "2", "--avoid", "1"]);
    assert_eq!(
        stdout(&out),
        "k,n,count_avoiding,count_ud_bounded,agree\n1,1,1,1,agree\n"
    );

    // 1, 3, 14, 84 for n = 2 is the Catalan determinant C_k C_{k+2} − C_{k+1}².
    let jobs = viennot(&["count", "--points", "8", "--avoid", "2", "--jobs", "4"]);
    assert_eq!(
        stdout(&jobs),
        "k,n,count_avoiding,count_ud_bounded,agree\n4,2,84,84,agree\n"
    );
}

#[test]
fn exit_codes() {
    let parse = viennot(&["rs", "2,banana,1"]);
    assert_eq!(parse.status.code(), Some(2));

    let invalid_word = viennot(&["pattern", "1,2,-1,-2"]);
    assert_eq!(invalid_word.status.code(), Some(2));

    let limit = viennot(&["count", "--points", "20", "--avoid", "2"]);
    assert_eq!(limit.status.code(), Some(3));

    let odd = viennot(&["count", "--points", "5", "--avoid", "1"]);
    assert_eq!(odd.status.code(), Some(2));
}

#[test]
fn verify_small_run_passes() {
    let out = viennot(&["verify", "--max-k", "3", "--jobs", "2", "--seed", "9"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("schensted-theorem: pass"));
    assert!(text.contains("all 21 checks passed"));
}
