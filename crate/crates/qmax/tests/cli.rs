use clap::Parser;
use proptest::prelude::*;
use qmax::cli::{echo, prop_ids, Cli, Command, Global};
use serde_json::Value;
use std::process::{Command as Process, Output};

fn qmax(args: &[&str]) -> Output {
    Process::new(env!("CARGO_BIN_EXE_qmax")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = qmax(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

fn reparse(line: &str) -> Cli {
    Cli::try_parse_from(shlex::split(line).unwrap()).unwrap()
}

#[test]
fn classify_reports() {
    let (code, v) = json(&["classify", "Z/8", "--ideal", "4"]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["classification"]["type"], "ramified");
    assert_eq!(r["absorbing"]["two_absorbing"], true);
    assert_eq!(r["absorbing"]["primal"], true);
    assert_eq!(v["schema"], 1);
    assert!(v.get("wall_time_ms").is_none());

    let (code, v) = json(&["classify", "Z/30", "--ideal", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["classification"]["type"], "none");
    assert_eq!(v["results"]["absorbing"]["violating_triple"], serde_json::json!([2, 3, 5]));
}

#[test]
fn construct_reports() {
    let (code, v) = json(&["construct", "poly(Z/2, x^3)", "--ideal", "x^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["built"], true);
    assert_eq!(v["results"]["subring"], serde_json::json!([0, 1, 4, 5]));
    let (code, v) = json(&["construct", "Z/8", "--ideal", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["failure"], "characteristic-mismatch");
}

#[test]
fn z_ideal_and_lattice() {
    let (code, v) = json(&["z-ideal", "49"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["tag"], "ramified");
    let (code, _) = json(&["Z-ideal", "30"]);
    assert_eq!(code, 0);
    assert_eq!(qmax(&["z-ideal", "0"]).status.code(), Some(2));
    let (code, v) = json(&["lattice", "Z/12"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["ideals"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_runs_a_suite() {
    let (code, v) = json(&["verify", "qmax-equivalence", "--max-size", "32"]);
    assert_eq!(code, 0);
    let s = &v["results"]["suites"][0];
    assert_eq!(s["failed"], 0);
    assert!(s["checked"].as_u64().unwrap() > 0);
    assert_eq!(v["results"]["passed"], true);
}

#[test]
fn hypothesis_not_met_is_not_failure() {
    let (code, v) = json(&["verify", "transfer", "--props", "covering-transfer", "--max-size", "16"]);
    assert_eq!(code, 0);
    assert!(v["results"]["suites"][0]["hypothesis_not_met"].as_u64().unwrap() > 0);
}

#[test]
fn exit_codes() {
    assert_eq!(qmax(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(qmax(&["verify", "transfer", "--props", "nope"]).status.code(), Some(2));
    assert_eq!(qmax(&["classify", "Z/8", "--ideal", "1"]).status.code(), Some(2));
    assert_eq!(qmax(&["analyze", "poly(Z/2, x^2"]).status.code(), Some(2));
    assert_eq!(qmax(&["analyze", "Z/5000", "--max-size", "100"]).status.code(), Some(3));
    assert_eq!(qmax(&["verify", "all", "--timeout-ms", "10"]).status.code(), Some(3));
    assert_eq!(qmax(&["bogus"]).status.code(), Some(2));
}

#[test]
fn timing_is_opt_in() {
    let (_, v) = json(&["--timing", "analyze", "GF(4)"]);
    assert!(v["wall_time_ms"].is_u64());
}

#[test]
fn text_output_starts_with_the_command() {
    let out = qmax(&["classify", "Z/8", "--ideal", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let first = text.lines().next().unwrap();
    assert_eq!(first, "qmax classify Z/8 --ideal 4");
    assert!(matches!(reparse(first).command, Command::Classify { .. }));
}

fn text() -> impl Strategy<Value = String> {
    "[A-Za-z0-9(][A-Za-z0-9 /^*+(),\\[\\]'\"-]{0,20}"
}

fn command() -> impl Strategy<Value = Command> {
    let ids = prop_ids();
    prop_oneof![
        text().prop_map(|spec| Command::Analyze { spec }),
        (text(), text()).prop_map(|(spec, ideal)| Command::Classify { spec, ideal }),
        (text(), text()).prop_map(|(spec, ideal)| Command::Construct { spec, ideal }),
        text().prop_map(|spec| Command::Lattice { spec }),
        any::<u64>().prop_map(|n| Command::ZIdeal { n }),
        ("[a-z][a-z0-9-]{0,12}", prop::option::of(prop::collection::vec(prop::sample::select(ids), 1..4)), any::<bool>())
            .prop_map(|(suite, props, records)| Command::Verify {
                suite,
                props: props.map(|p| p.into_iter().map(str::to_string).collect()),
                records,
            }),
    ]
}

fn global() -> impl Strategy<Value = Global> {
    (
        any::<bool>(),
        any::<u64>(),
        prop::option::of(1usize..100_000),
        prop::option::of(1usize..100_000),
        prop::option::of(any::<u64>()),
        any::<bool>(),
    )
        .prop_map(|(json, seed, max_size, max_ideals, timeout_ms, timing)| Global {
            json,
            seed,
            max_size,
            max_ideals,
            timeout_ms,
            timing,
        })
}

proptest! {
    #[test]
    fn echo_parses_back(global in global(), command in command()) {
        let cli = Cli { global, command };
        let line = echo(&cli);
        prop_assert_eq!(reparse(&line), cli);
    }
}
