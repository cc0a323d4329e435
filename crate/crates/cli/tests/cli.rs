//! End-to-end checks of the command-line interface: flags, exit codes,
//! output formats, and reproducibility.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn vcrit() -> Command {
    Command::new(env!("CARGO_BIN_EXE_vcrit"))
}

fn run(args: &[&str]) -> Output {
    vcrit().args(args).output().expect("spawn vcrit")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("vcrit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn bad_flags_exit_64() {
    assert_eq!(code(&run(&["enumerate", "--k", "5"])), 64, "missing flags");
    assert_eq!(code(&run(&["frobnicate"])), 64, "unknown subcommand");
    assert_eq!(
        code(&run(&[
            "enumerate",
            "--k",
            "5",
            "--family",
            "P5,nonsense",
            "--n-max",
            "6"
        ])),
        64,
        "unknown family name fails before any search"
    );
    assert_eq!(
        code(&run(&[
            "check-claims",
            "--variant",
            "square",
            "--tables-only"
        ])),
        64
    );
    assert_eq!(
        code(&run(&["check-claims", "--variant", "chair"])),
        64,
        "needs --k/--input without --tables-only"
    );
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn unreadable_input_exits_66() {
    let out = run(&[
        "verify",
        "--k",
        "5",
        "--family",
        "P5",
        "--input",
        "/no/such/file.g6",
    ]);
    assert_eq!(code(&out), 66);
    let out = run(&["analyze", "--input", "/no/such/file.g6"]);
    assert_eq!(code(&out), 66);
}

#[test]
fn enumerate_k2_is_exactly_the_edge() {
    // The frontier dies out, so this is a complete characterization: exit 0.
    let out = run(&[
        "enumerate",
        "--k",
        "2",
        "--family",
        "P5",
        "--n-max",
        "3",
        "--quiet",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "A_");
}

#[test]
fn enumerate_writes_counts_csv_and_truncates() {
    let counts = tmp("chair7.csv");
    let out = run(&[
        "enumerate",
        "--k",
        "5",
        "--family",
        "P5,chair",
        "--n-max",
        "7",
        "--counts",
        counts.to_str().unwrap(),
        "--out",
        tmp("chair7.g6").to_str().unwrap(),
    ]);
    // Frontier alive at n=7: truncated.
    assert_eq!(code(&out), 2);
    assert_eq!(
        std::fs::read_to_string(&counts).unwrap(),
        "n,count\n5,1\n6,0\n7,1\n"
    );
    assert!(stdout(&out).contains("truncated"));
}

#[test]
fn enumerate_cricket_k5_low_orders() {
    let counts = tmp("cricket7.csv");
    let out = run(&[
        "enumerate",
        "--k",
        "5",
        "--family",
        "P5,cricket",
        "--n-max",
        "7",
        "--counts",
        counts.to_str().unwrap(),
        "--out",
        tmp("cricket7.g6").to_str().unwrap(),
        "--quiet",
    ]);
    assert_eq!(code(&out), 2);
    assert_eq!(
        std::fs::read_to_string(&counts).unwrap(),
        "n,count\n5,1\n6,0\n7,1\n"
    );
}

#[test]
fn verify_flags_failures() {
    // P5 itself has chromatic number 2 and is a family member.
    let input = tmp("bad.g6");
    std::fs::write(&input, "DhC\n").unwrap();
    let out = run(&[
        "verify",
        "--k",
        "5",
        "--family",
        "P5,chair",
        "--input",
        input.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("FAIL"), "{text}");
    assert!(text.contains("induced P5"), "{text}");

    // A duplicated graph is flagged even though both copies verify.
    let input = tmp("dup.g6");
    std::fs::write(&input, "D~{\nD~{\n").unwrap();
    let out = run(&[
        "verify",
        "--k",
        "5",
        "--family",
        "P5,chair",
        "--input",
        input.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("duplicate of line 1"));
}

#[test]
fn verify_against_expected_counts() {
    let input = tmp("k5.g6");
    std::fs::write(&input, "D~{\n").unwrap();
    let expect_good = tmp("expect_good.csv");
    std::fs::write(&expect_good, "n,count\n5,1\n").unwrap();
    let out = run(&[
        "verify",
        "--k",
        "5",
        "--family",
        "P5,chair",
        "--input",
        input.to_str().unwrap(),
        "--expect",
        expect_good.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);

    let expect_bad = tmp("expect_bad.csv");
    std::fs::write(&expect_bad, "n,count\n5,2\n").unwrap();
    let out = run(&[
        "verify",
        "--k",
        "5",
        "--family",
        "P5,chair",
        "--input",
        input.to_str().unwrap(),
        "--expect",
        expect_bad.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("count mismatch at n=5"));
}

#[test]
fn check_claims_tables_only() {
    let out = run(&["check-claims", "--variant", "chair", "--tables-only"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(
        text.contains("13 forced patterns confirmed, 2 allowed"),
        "{text}"
    );

    let out = run(&[
        "check-claims",
        "--variant",
        "cricket",
        "--tables-only",
        "--format",
        "kv",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(
        text.contains("10 forced patterns confirmed, 5 allowed"),
        "{text}"
    );
    assert!(text.contains("claim=cricket.case.abd holds=true"), "{text}");
}

#[test]
fn check_claims_on_generated_corpus() {
    let corpus = tmp("claims_corpus.g6");
    let out = run(&[
        "enumerate",
        "--k",
        "5",
        "--family",
        "P5,cricket",
        "--n-max",
        "8",
        "--out",
        corpus.to_str().unwrap(),
        "--quiet",
    ]);
    assert_eq!(code(&out), 2);
    let out = run(&[
        "check-claims",
        "--variant",
        "cricket",
        "--k",
        "5",
        "--input",
        corpus.to_str().unwrap(),
        "--lemmas",
        "--quiet",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(
        text.contains("0 failures, 0 precondition failures"),
        "{text}"
    );
}

#[test]
fn unconnected_prefix_mode_matches_default_outputs() {
    let run_mode = |extra: &[&str], tag: &str| {
        let g6 = tmp(&format!("prefix_{tag}.g6"));
        let mut args = vec![
            "enumerate",
            "--k",
            "5",
            "--family",
            "P5,cricket",
            "--n-max",
            "7",
            "--out",
            g6.to_str().unwrap(),
            "--quiet",
        ];
        args.extend_from_slice(extra);
        let out = run(&args);
        assert_eq!(code(&out), 2);
        std::fs::read(&g6).unwrap()
    };
    // Extending with every mask (including the empty one) visits a larger
    // frontier but emits the same critical graphs.
    let with = run_mode(&[], "on");
    let without = run_mode(&["--no-connected-prefix"], "off");
    assert_eq!(with, without);
}

#[test]
fn analyze_reports_invariants() {
    let input = tmp("analyze.g6");
    std::fs::write(&input, "D~{\nDhC\n").unwrap();
    let out = run(&["analyze", "--input", input.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(
        text.contains("n=5 m=10 chi=5 omega=5 alpha=1 5-critical=true"),
        "{text}"
    );
    assert!(
        text.contains("n=5 m=4 chi=2 omega=2 alpha=3 2-critical=false"),
        "{text}"
    );
}

#[test]
fn jobs_do_not_change_output_bytes() {
    let run_with = |jobs: &str, tag: &str| {
        let g6 = tmp(&format!("det_{tag}.g6"));
        let csv = tmp(&format!("det_{tag}.csv"));
        let out = run(&[
            "enumerate",
            "--k",
            "5",
            "--family",
            "P5,chair",
            "--n-max",
            "8",
            "--jobs",
            jobs,
            "--out",
            g6.to_str().unwrap(),
            "--counts",
            csv.to_str().unwrap(),
            "--quiet",
        ]);
        assert_eq!(code(&out), 2);
        (std::fs::read(&g6).unwrap(), std::fs::read(&csv).unwrap())
    };
    let (g1, c1) = run_with("1", "j1");
    let (g2, c2) = run_with("4", "j4");
    assert_eq!(g1, g2);
    assert_eq!(c1, c2);
}

#[test]
fn manifest_reproduces_counts() {
    let manifest_path = tmp("run.manifest");
    let csv1 = tmp("m1.csv");
    let out = run(&[
        "enumerate",
        "--k",
        "5",
        "--family",
        "P5,cricket",
        "--n-max",
        "8",
        "--counts",
        csv1.to_str().unwrap(),
        "--out",
        tmp("m1.g6").to_str().unwrap(),
        "--manifest",
        manifest_path.to_str().unwrap(),
        "--quiet",
    ]);
    assert_eq!(code(&out), 2);

    // Re-run with the configuration echoed in the manifest.
    let text = std::fs::read_to_string(&manifest_path).unwrap();
    let get = |key: &str| -> String {
        text.lines()
            .find_map(|l| l.strip_prefix(&format!("{key} = ")))
            .unwrap_or_else(|| panic!("{key} missing from manifest:\n{text}"))
            .to_string()
    };
    assert_eq!(get("command"), "enumerate");
    assert!(get("tool").starts_with("vcrit "));
    assert_eq!(get("complete"), "false");
    let csv2 = tmp("m2.csv");
    let out = run(&[
        "enumerate",
        "--k",
        &get("k"),
        "--family",
        &get("family"),
        "--n-max",
        &get("n_max"),
        "--counts",
        csv2.to_str().unwrap(),
        "--out",
        tmp("m2.g6").to_str().unwrap(),
        "--quiet",
    ]);
    assert_eq!(code(&out), 2);
    assert_eq!(
        std::fs::read(&csv1).unwrap(),
        std::fs::read(&csv2).unwrap(),
        "manifest round-trip must reproduce identical counts"
    );
    // Manifest carries the per-order counts it reported.
    assert_eq!(get("count.8"), "7");
    assert_eq!(get("total"), "9");
}

#[test]
fn verify_manifest_digests_input() {
    let input = tmp("digest.g6");
    std::fs::write(&input, "D~{\n").unwrap();
    let manifest_path = tmp("digest.manifest");
    let out = run(&[
        "verify",
        "--k",
        "5",
        "--family",
        "P5,chair",
        "--input",
        input.to_str().unwrap(),
        "--manifest",
        manifest_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&manifest_path).unwrap();
    assert!(text.contains("input_sha256 = "), "{text}");
    assert!(Path::new(&input).exists());
}
