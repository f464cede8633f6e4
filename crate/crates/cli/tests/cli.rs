use bn_cli::{run, verify, Check, Report, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use brandt::Mode;

struct Outcome {
    code: u8,
    stdout: String,
    stderr: String,
}

fn bn(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("bn").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let o = bn(args);
    assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.stderr);
    assert!(o.stderr.is_empty());
    o.stdout
}

fn usage_error(args: &[&str]) {
    let o = bn(args);
    assert_eq!(o.code, EXIT_USAGE, "{args:?}");
    assert!(
        o.stdout.is_empty(),
        "{args:?} wrote to stdout: {}",
        o.stdout
    );
    assert_eq!(o.stderr.lines().count(), 1, "{args:?}: {}", o.stderr);
}

#[test]
fn mul() {
    assert_eq!(ok(&["--n", "3", "mul", "(1,2)", "(2,3)"]), "(1,3)\n");
    assert_eq!(ok(&["--n", "3", "mul", "(1,2)", "(3,1)"]), "0\n");
    assert_eq!(ok(&["mul", "--n", "2", " ( 1 , 1 ) ", "0"]), "0\n");
}

#[test]
fn normalize() {
    assert_eq!(ok(&["--n", "3", "normalize", "(1,2)(2,3)x"]), "(1,3)x\n");
    assert_eq!(ok(&["--n", "2", "normalize", "x (1,2) x"]), "(2,2)x(1,1)\n");
    assert_eq!(ok(&["--n", "2", "normalize", "x*x*x"]), "x^2\n");
    assert_eq!(ok(&["--n", "2", "normalize", "x 0 x"]), "0\n");
}

#[test]
fn solve() {
    assert_eq!(
        ok(&["--n", "2", "solve", "x = x^2"]),
        "0\n(1,1)\n(2,2)\ncount: 3\n"
    );
    assert_eq!(
        ok(&["--n", "2", "solve", "(1,2)x = x(2,1)"]),
        "0\n(1,1)\ncount: 2\n"
    );
    assert_eq!(ok(&["--n", "2", "solve", "(1,1) = (2,2)"]), "count: 0\n");
}

#[test]
fn census_csv_sums_to_total() {
    let csv = ok(&["--n", "2", "census", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("solutions,equations"));
    let sum: u64 = lines
        .map(|l| l.split(',').nth(1).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(sum, 961);
}

#[test]
fn census_golden_files() {
    assert_eq!(
        ok(&["--n", "2", "census", "--format", "csv"]),
        include_str!("golden/census_n2.csv")
    );
    assert_eq!(
        ok(&["--n", "2", "census", "--format", "csv", "--mode", "brute"]),
        include_str!("golden/census_n2.csv")
    );
    assert_eq!(
        ok(&["--n", "2", "census", "--format", "json"]),
        include_str!("golden/census_n2_symbolic.json")
    );
    assert_eq!(
        ok(&["--n", "2", "census"]),
        include_str!("golden/census_n2.txt")
    );
}

#[test]
fn census_json_brute_differs_only_in_mode() {
    let brute = ok(&["--n", "2", "census", "--format", "json", "--mode", "brute"]);
    let symbolic = include_str!("golden/census_n2_symbolic.json");
    assert_eq!(brute.replace("\"brute\"", "\"symbolic\""), symbolic);
}

#[test]
fn census_is_identical_across_thread_counts() {
    for mode in ["brute", "symbolic"] {
        for format in ["csv", "json", "text"] {
            let one = ok(&[
                "--n",
                "3",
                "--threads",
                "1",
                "census",
                "--mode",
                mode,
                "--format",
                format,
            ]);
            let many = ok(&[
                "--n",
                "3",
                "--threads",
                "4",
                "census",
                "--mode",
                mode,
                "--format",
                format,
            ]);
            let auto = ok(&["--n", "3", "census", "--mode", mode, "--format", format]);
            assert_eq!(one, many);
            assert_eq!(one, auto);
        }
    }
}

#[test]
fn verify_brute_range() {
    let out = ok(&["verify", "--range", "1..3", "--mode", "brute"]);
    assert_eq!(out.lines().count(), 9);
    assert!(out
        .lines()
        .all(|l| l.starts_with("PASS ") && l.contains("(brute)")));
}

#[test]
fn verify_symbolic_range() {
    let out = ok(&["verify", "--range", "1..8"]);
    assert_eq!(out.lines().count(), 24);
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn verify_falls_back_to_symbolic_above_the_cap() {
    let out = ok(&[
        "--brute-cap",
        "2",
        "verify",
        "--range",
        "2..3",
        "--mode",
        "brute",
    ]);
    let modes: Vec<bool> = out.lines().map(|l| l.contains("(brute)")).collect();
    assert_eq!(modes, [true, true, true, false, false, false]);
}

#[test]
fn verify_report_flags_failures() {
    let mut report = verify(2..=2, Mode::Symbolic, 4).unwrap();
    assert!(report.passed());
    report.checks.push(Check {
        n: 2,
        name: "average",
        mode: Mode::Symbolic,
        passed: false,
        detail: "1 != 2".into(),
    });
    assert!(!report.passed());
    assert!(report
        .to_string()
        .ends_with("FAIL n=2 average (symbolic): 1 != 2\n"));
    assert_eq!(EXIT_MISMATCH, 2);
    assert!(Report::default().passed());
}

#[test]
fn usage_errors() {
    usage_error(&["verify", "--range", "0..1"]);
    usage_error(&["verify", "--range", "3..1"]);
    usage_error(&["verify", "--range", "1-3"]);
    usage_error(&["verify"]);
    usage_error(&["mul", "(1,2)", "(2,3)"]);
    usage_error(&["--n", "0", "mul", "0", "0"]);
    usage_error(&["--n", "2", "frobnicate"]);
    usage_error(&["--n", "2", "mul", "(3,1)", "0"]);
    usage_error(&["--n", "2", "normalize", ""]);
    usage_error(&["--n", "2", "normalize", "x y"]);
    usage_error(&["--n", "2", "solve", "x ="]);
    usage_error(&["--n", "5", "census", "--mode", "brute"]);
    usage_error(&["--n", "2", "census", "--format", "xml"]);
    usage_error(&["--n", "2", "--threads", "0", "census"]);
}

#[test]
fn brute_cap_override() {
    let out = ok(&[
        "--n",
        "5",
        "--brute-cap",
        "5",
        "census",
        "--mode",
        "brute",
        "--format",
        "csv",
    ]);
    assert_eq!(out, ok(&["--n", "5", "census", "--format", "csv"]));
}

#[test]
fn help_goes_to_stdout() {
    let o = bn(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("census"));
}

#[test]
fn binary_exit_codes() {
    use std::process::Command;
    let exe = env!("CARGO_BIN_EXE_bn");
    let out = Command::new(exe)
        .args(["--n", "3", "mul", "(1,2)", "(2,3)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "(1,3)\n");
    let out = Command::new(exe)
        .args(["verify", "--range", "0..1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}
