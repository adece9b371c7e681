//! The command-line contract: report shape, exit codes, stdin and --out.

use isospec::cli::{run_command, Outcome};
use serde_json::Value;

const Z2: &str = "field: 7^1; num=[0,0,1]; den=[1]";

fn run(args: &[&str]) -> (Outcome, Value) {
    run_stdin(args, "")
}

fn run_stdin(args: &[&str], input: &str) -> (Outcome, Value) {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let out = run_command(&args, &mut input.as_bytes());
    let v = serde_json::from_str(&out.json).expect("valid json");
    (out, v)
}

#[test]
fn report_shape() {
    let (out, v) = run(&["spectrum", "--map", Z2, "--n", "1"]);
    assert_eq!(out.code, 0);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys, ["command", "diagnostics", "input", "result"]);
    assert_eq!(v["command"], "spectrum");
    assert_eq!(v["result"]["lambda"], serde_json::json!(["2", "0", "0"]));
    assert_eq!(v["input"]["map"], Z2);
    assert!(v["diagnostics"]["version"].is_string());
    assert!(v["diagnostics"].get("timing_ms").is_none());
}

#[test]
fn spectrum_over_q_prints_signed_coefficients() {
    let (_, v) = run(&["spectrum", "--map", "field: Q; num=[0,0,1]; den=[1]", "--n", "1"]);
    assert_eq!(v["result"]["M1"], "T^3 - 2*T^2");
}

#[test]
fn tame_reports_wild_witness() {
    let (out, v) = run(&["tame", "--map", "field: Q; num=[0,0,0,1]; den=[1]", "--place", "prime:3"]);
    assert_eq!(out.code, 0);
    assert_eq!(v["result"]["verdict"], "Wild");
    assert_eq!(v["result"]["witness"]["e"], 3);
}

#[test]
fn exit_codes() {
    let (out, v) = run(&["spectrum", "--map", "field: 7^1; num=[0,1]; den=[1]"]);
    assert_eq!(out.code, 1);
    assert_eq!(v["diagnostics"]["error"]["kind"], "DegreeTooLow");
    assert!(v["result"].is_null());
    let (out, _) = run(&["spectrum", "--map", "field: 7^1; num=[1,0,1]; den=[1,0,1]"]);
    assert_eq!(out.code, 1);
    let (out, v) = run(&["spectrum", "--map", "field: 7^1; num=[0,0,x]"]);
    assert_eq!(out.code, 2);
    assert_eq!(v["diagnostics"]["error"]["kind"], "ParseError");
    let (out, _) = run(&["frobnicate"]);
    assert_eq!(out.code, 2);
    let (out, _) = run(&["spectrum"]);
    assert_eq!(out.code, 2);
    let (out, v) = run(&["rootfind", "obstruct", "--r", "2", "--p", "4", "--d", "2"]);
    assert_eq!(out.code, 1);
    assert_eq!(v["diagnostics"]["error"]["kind"], "NotPrime");
    let (out, v) = run(&["lattes", "--spec", "lattes A=t B=1 m=3 over 7^1(t)"]);
    assert_eq!(out.code, 1);
    assert_eq!(v["diagnostics"]["error"]["kind"], "UnsupportedM");
    let (out, v) = run(&["experiment", "milnor", "--q", "7", "--budget", "1000"]);
    assert_eq!(out.code, 1);
    assert_eq!(v["diagnostics"]["error"]["kind"], "BudgetExceeded");
}

#[test]
fn map_from_stdin() {
    let (out, v) = run_stdin(&["spectrum", "--map", "-", "--n", "1"], "field: 7^1; num=[0,0,1]; den=[1]\n");
    assert_eq!(out.code, 0);
    assert_eq!(v["input"]["map"], Z2);
}

#[test]
fn out_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("isospec-report-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (out, _) = run(&["rootfind", "obstruct", "--r", "4", "--p", "3", "--d", "5", "--out", p]);
    assert_eq!(out.code, 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), out.json);
    std::fs::remove_file(path).ok();
}

#[test]
fn rootfind_verbs() {
    let (_, v) = run(&["rootfind", "newton", "--f", "[\u{2212}1,0,1]", "--field", "q:0"]);
    assert_eq!(v["result"]["degree"], 2);
    assert_eq!(v["result"]["map"], "field: Q; num=[1,0,1]; den=[0,2]");
    let (_, v) = run(&["rootfind", "probe", "--map", "field: Q; num=[0,0,1]; den=[1]", "--place", "prime:3", "--seeds", "0,1,\u{2212}1", "--iters", "20"]);
    let t = v["result"]["trajectories"].as_array().unwrap();
    assert_eq!(t[0]["verdict"], "NoConvergenceToSinks");
    assert_eq!(t[1]["verdict"], "ConvergesToZero");
    assert_eq!(t[2]["verdict"], "ConvergesToInfinity");
    let (_, v) = run(&["rootfind", "sum", "--map", Z2]);
    assert_eq!(v["result"]["verdict"], "HoldsExactly");
}

#[test]
fn family_verbs() {
    let (_, v) = run(&["family-iso", "--map", "field: 5^1(t); num=[t,0,1]; den=[1]", "--N", "2"]);
    assert_eq!(v["result"]["verdict"], "Witness");
    let (_, v) = run(&["lattes", "--spec", "lattes A=t B=1 m=2 over 7^1(t)"]);
    assert_eq!(v["result"]["isospectrality"]["verdict"], "Isospectral");
    assert_eq!(v["result"]["j_constant"], false);
    let (_, v) = run(&["polygon", "--poly", "[-3,0,1]", "--field", "Q", "--place", "prime:3"]);
    assert_eq!(v["result"]["root_valuations"][0]["valuation"], "1/2");
    assert_eq!(v["result"]["root_valuations"][0]["multiplicity"], 2);
}

#[test]
fn timing_is_opt_in() {
    let (_, v) = run(&["--timing", "rootfind", "obstruct", "--r", "2", "--p", "3", "--d", "2"]);
    assert!(v["diagnostics"]["timing_ms"].is_u64());
}
