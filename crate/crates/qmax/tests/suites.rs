use qmax::corpus::{ring_specs, CorpusConfig};
use qmax::suites::{run_suite, suite_names, SuiteOptions};

fn small(seed: u64) -> SuiteOptions {
    SuiteOptions { corpus: CorpusConfig { max_size: 32, seed, ..CorpusConfig::default() }, ..SuiteOptions::default() }
}

#[test]
fn structure_suites_pass() {
    for name in ["qmax-structure", "extension-structure"] {
        let rep = run_suite(name, &SuiteOptions::default()).unwrap().remove(0);
        assert!(rep.passed(), "{name}: {:?}", rep.failures);
        assert!(rep.checked > 0, "{name}");
    }
}

#[test]
fn all_runs_every_suite_deterministically() {
    let a = run_suite("all", &small(7)).unwrap();
    let names: Vec<&str> = a.iter().map(|r| r.suite.as_str()).collect();
    assert_eq!(names, suite_names());
    assert!(a.iter().all(|r| r.passed()));
    assert_eq!(a, run_suite("all", &small(7)).unwrap());
}

#[test]
fn seed_drives_the_random_quotients() {
    let base = CorpusConfig { max_size: 64, ..CorpusConfig::default() };
    let specs = |seed| ring_specs(&CorpusConfig { seed, ..base });
    assert_eq!(specs(1), specs(1));
    assert_ne!(specs(1), specs(2));
}

#[test]
fn records_are_kept_on_request() {
    let mut opts = small(0);
    opts.props = Some(vec!["covering-transfer".into()]);
    let plain = run_suite("transfer", &opts).unwrap().remove(0);
    assert!(plain.records.is_empty());
    opts.records = true;
    let rep = run_suite("transfer", &opts).unwrap().remove(0);
    assert!(!rep.records.is_empty());
    assert!(rep.records.iter().all(|r| r.prop == "covering-transfer"));
    assert_eq!(rep.checked, plain.checked);
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(run_suite("nope", &small(0)).is_err());
}
