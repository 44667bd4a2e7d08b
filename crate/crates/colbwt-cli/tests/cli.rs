//! End-to-end tests against the built binary: golden outputs, the
//! transform/invert pipe law, report formats, and the exit-code contract.

use std::io::Write;
use std::process::{Command, Stdio};

const TOY: &str = "CTGA\nTG\nGTCC\nTCA\nCGACC\nCGA\n";

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_colbwt"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn colbwt");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn transform_golden_variants() {
    let cases = [
        ("ebwt", "GGGCTACTCACACCTCTAGCG"),
        ("dolEBWT", "ACACAGGGCGCCTAT$$$TCTC$$G$C"),
        ("mdolEBWT", "AGCACAGCGGCCTTA$$$TTCC$$G$C"),
        ("mdolBWT", "AGCACAGCGGCCTTA$$$TTCC$$G$C"),
        ("concatBWT", "$ACAGCAGCGGCCTAT$$#TCTC$$G$C"),
        ("adaptedConcatBWT", "ACAGCAGCGGCCTAT$$$TCTC$$G$C"),
    ];
    for (variant, expect) in cases {
        let (code, stdout, stderr) = run(&["transform", "--variant", variant], TOY);
        assert_eq!(code, 0, "{variant}: {stderr}");
        assert_eq!(stdout.trim_end(), expect, "{variant}");
    }
}

#[test]
fn transform_golden_orders() {
    let cases = [
        ("input", "AGCACAGCGGCCTTA$$$TTCC$$G$C"),
        ("colex", "AAACCGCGGGCCTAT$$$TCTC$$G$C"),
        ("plus", "AAACCGGGCGCCTTA$$$TTCC$$G$C"),
        ("opt", "AAAGCCCGGGCCTTA$$$TTCC$$G$C"),
    ];
    for (order, expect) in cases {
        let (code, stdout, _) = run(
            &["transform", "--variant", "mdolEBWT", "--order", order],
            TOY,
        );
        assert_eq!(code, 0);
        assert_eq!(stdout.trim_end(), expect, "order {order}");
    }
}

#[test]
fn transform_orders_apply_to_both_multidollar_variants() {
    // same text as the colex-ordered multidollar extended transform
    let (code, stdout, _) = run(
        &["transform", "--variant", "mdolBWT", "--order", "colex"],
        TOY,
    );
    assert_eq!(code, 0);
    assert_eq!(stdout.trim_end(), "AAACCGCGGGCCTAT$$$TCTC$$G$C");
}

#[test]
fn ebwt_sidecar_and_pipe_law() {
    let dir = tempfile::tempdir().unwrap();
    let meta = dir.path().join("ebwt.meta");
    let (code, stdout, _) = run(
        &["transform", "--variant", "ebwt", "--meta", meta.to_str().unwrap()],
        TOY,
    );
    assert_eq!(code, 0);
    assert_eq!(
        std::fs::read_to_string(&meta).unwrap(),
        "I: 9 10 12 16 18 21\n"
    );
    let (code, recovered, _) = run(
        &["invert", "--variant", "ebwt", "--meta", meta.to_str().unwrap()],
        &stdout,
    );
    assert_eq!(code, 0);
    // omega order of the toy strings
    assert_eq!(recovered, "CGACC\nCGA\nCTGA\nGTCC\nTCA\nTG\n");
}

#[test]
fn multidollar_pipe_law_preserves_input_order() {
    let dir = tempfile::tempdir().unwrap();
    for variant in ["mdolEBWT", "mdolBWT"] {
        let meta = dir.path().join(format!("{variant}.meta"));
        let (code, stdout, _) = run(
            &["transform", "--variant", variant, "--meta", meta.to_str().unwrap()],
            TOY,
        );
        assert_eq!(code, 0);
        let (code, recovered, stderr) = run(
            &["invert", "--variant", variant, "--meta", meta.to_str().unwrap()],
            &stdout,
        );
        assert_eq!(code, 0, "{stderr}");
        assert_eq!(recovered, TOY, "{variant}");
    }
}

#[test]
fn sentinel_only_pipe_laws() {
    // dolEBWT recovers in lexicographic order
    let (_, bwt, _) = run(&["transform", "--variant", "dolEBWT"], TOY);
    let (code, recovered, _) = run(&["invert", "--variant", "dolEBWT"], &bwt);
    assert_eq!(code, 0);
    assert_eq!(recovered, "CGA\nCGACC\nCTGA\nGTCC\nTCA\nTG\n");

    // concatBWT recovers the input order with no metadata
    let (_, bwt, _) = run(&["transform", "--variant", "concatBWT"], TOY);
    let (code, recovered, _) = run(&["invert", "--variant", "concatBWT"], &bwt);
    assert_eq!(code, 0);
    assert_eq!(recovered, TOY);

    // the adapted form recovers the multiset
    let (_, bwt, _) = run(&["transform", "--variant", "adaptedConcatBWT"], TOY);
    let (code, recovered, _) = run(&["invert", "--variant", "adaptedConcatBWT"], &bwt);
    assert_eq!(code, 0);
    let mut lines: Vec<&str> = recovered.lines().collect();
    lines.sort_unstable();
    assert_eq!(lines, vec!["CGA", "CGACC", "CTGA", "GTCC", "TCA", "TG"]);
}

#[test]
fn stats_table_and_ropt() {
    let (code, stdout, _) = run(&["stats", "--ropt"], TOY);
    assert_eq!(code, 0);
    assert!(stdout.contains("input\t27\t19\t1.42"), "{stdout}");
    assert!(stdout.contains("colex\t27\t18\t1.50"), "{stdout}");
    assert!(stdout.contains("plus\t27\t15\t1.80"), "{stdout}");
    assert!(stdout.contains("opt\t27\t14\t1.93"), "{stdout}");
    assert!(stdout.lines().any(|l| l.starts_with("ropt\t-\t14")), "{stdout}");
}

#[test]
fn stats_with_distinct_dollars() {
    // ranked dollars split the two multi-dollar runs of the input transform
    let (code, stdout, _) = run(&["stats", "--dollars-equal", "false"], TOY);
    assert_eq!(code, 0);
    assert!(stdout.contains("input\t27\t22\t"), "{stdout}");
}

#[test]
fn stats_ropt_small_example() {
    let (code, stdout, _) = run(&["stats", "--ropt"], "ACA\nTGA\nGAA\n");
    assert_eq!(code, 0);
    assert!(stdout.lines().any(|l| l.starts_with("ropt\t-\t7")), "{stdout}");
}

#[test]
fn intervals_report() {
    let (code, stdout, _) = run(&["intervals"], TOY);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(
        lines,
        vec![
            "# begin end suffix chars kind",
            "1 6 - AGCACA interesting",
            "7 9 A GCG interesting",
            "11 12 C CC sap",
            "14 15 CC TA interesting",
            "20 21 GA TC interesting",
        ]
    );

    let (code, stdout, _) = run(&["intervals"], "ACGT\n");
    assert_eq!(code, 0);
    assert!(stdout.contains("m < 2"));
}

#[test]
fn compare_localizes_differences() {
    let (code, stdout, _) = run(&["compare", "dolEBWT", "mdolEBWT"], TOY);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("0 outside interesting intervals"), "{stdout}");

    let (code, stdout, _) = run(&["compare", "mdolEBWT", "mdolEBWT"], TOY);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("0 differing positions"), "{stdout}");

    let (code, _, _) = run(&["compare", "ebwt", "dolEBWT"], TOY);
    assert_eq!(code, 3);
}

#[test]
fn fasta_input() {
    let fasta = ">a\nCT\nGA\n>b\nTG\n>c\nGTCC\n>d\nTCA\n>e\nCGACC\n>f\nCGA\n";
    let (code, stdout, _) = run(
        &["transform", "--variant", "mdolEBWT", "--format", "fasta"],
        fasta,
    );
    assert_eq!(code, 0);
    assert_eq!(stdout.trim_end(), "AGCACAGCGGCCTTA$$$TTCC$$G$C");
}

#[test]
fn exit_code_contract() {
    let (code, _, _) = run(&["transform"], "");
    assert_eq!(code, 2, "empty input");

    let (code, _, _) = run(&["transform", "--variant", "dolEBWT", "--order", "colex"], TOY);
    assert_eq!(code, 3, "order with a non-multidollar variant");

    // a truncated transform: dropping the final symbol breaks the cycle walk
    let (_, bwt, _) = run(&["transform", "--variant", "concatBWT"], TOY);
    let truncated = &bwt.trim_end()[..bwt.trim_end().len() - 1];
    let (code, _, _) = run(&["invert", "--variant", "concatBWT"], truncated);
    assert_eq!(code, 4, "truncated transform");

    let (code, _, _) = run(&["invert", "--variant", "mdolEBWT"], "A$\n");
    assert_eq!(code, 4, "missing metadata");

    let (code, _, _) = run(&["stats", "--ropt"], "A\nC\nG\nT\nAA\nCC\nGG\nTT\n");
    assert_eq!(code, 5, "guard exceeded");
}

#[test]
fn identical_invocations_are_byte_identical() {
    let (_, first, _) = run(&["transform", "--variant", "mdolEBWT", "--order", "opt"], TOY);
    let (_, second, _) = run(&["transform", "--variant", "mdolEBWT", "--order", "opt"], TOY);
    assert_eq!(first, second);
    let (_, s1, _) = run(&["stats", "--ropt"], TOY);
    let (_, s2, _) = run(&["stats", "--ropt"], TOY);
    assert_eq!(s1, s2);
}

#[test]
fn invert_rejects_out_of_image_text() {
    // "A$#" is not a concatenated transform: the cycle closes early
    let (code, _, _) = run(&["invert", "--variant", "concatBWT"], "A$#\n");
    assert_eq!(code, 4);
}
