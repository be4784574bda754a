//! Runs every acceptance criterion on one shared corpus and prints one line
//! per criterion. Exits non-zero if any criterion fails or overruns.

use qmax::extension::transfer::proposition_ids;
use qmax::extension::{Extension, MinimalTag};
use qmax::qmax::classify_qmax;
use qmax::ring::ExtSpec;
use qmax::suites::{run_suite_on, Corpus, SuiteOptions, SuiteReport};
use std::time::{Duration, Instant};

struct Ctx {
    corpus: Corpus,
    opts: SuiteOptions,
}

impl Ctx {
    fn suite(&self, name: &str) -> Result<SuiteReport, String> {
        let rep = run_suite_on(&self.corpus, name, &self.opts).map_err(|e| format!("{name}: {e}"))?.remove(0);
        if rep.passed() {
            Ok(rep)
        } else {
            Err(format!("{name}: {} failures, first {:?}", rep.failed, rep.failures.first()))
        }
    }
}

fn need(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn qmax_equivalence(c: &Ctx) -> Result<String, String> {
    let r = c.suite("qmax-equivalence")?;
    let (rings, ideals) = (r.count("rings"), r.count("ideals"));
    need(rings >= 300 && ideals >= 5000, || format!("corpus too small: {rings} rings, {ideals} ideals"))?;
    Ok(format!("{rings} rings, {ideals} proper ideals"))
}

fn submaximal(c: &Ctx) -> Result<String, String> {
    let r = c.suite("submaximal")?;
    Ok(format!("{} checks", r.checked))
}

fn ramified_spir(c: &Ctx) -> Result<String, String> {
    let r = c.suite("ramified-spir")?;
    need(r.count("ramified") > 0, || "no ramified ideals".into())?;
    Ok(format!("{} ideals, {} ramified", r.checked, r.count("ramified")))
}

fn named_minimal_extensions() -> Result<(), String> {
    let cases = [
        ("ext([], GF(4))", MinimalTag::Inert),
        ("ext([], Z/2 x Z/2)", MinimalTag::Decomposed),
        ("ext([], poly(Z/2, x^2))", MinimalTag::Ramified),
    ];
    for (spec, want) in cases {
        let e: Extension = ExtSpec::parse(spec).and_then(|s| s.build()).map_err(|e| e.to_string())?;
        let got = e.classify_minimal().map_err(|e| e.to_string())?.tag();
        let c = classify_qmax(e.ambient(), e.conductor()).map_err(|e| e.to_string())?.tag();
        need(got == want && format!("{c:?}") == format!("{want:?}"), || format!("{spec}: {got:?}, conductor {c:?}"))?;
    }
    Ok(())
}

fn conductor_type(c: &Ctx) -> Result<String, String> {
    let r = c.suite("conductor-type")?;
    named_minimal_extensions()?;
    let n = r.count("minimal");
    need(n >= 100, || format!("only {n} minimal extensions"))?;
    for key in ["inert", "decomposed", "ramified", "idealization"] {
        need(r.count(key) > 0, || format!("no {key} extensions"))?;
    }
    Ok(format!(
        "{n} minimal extensions ({} inert, {} decomposed, {} ramified, {} idealizations)",
        r.count("inert"),
        r.count("decomposed"),
        r.count("ramified"),
        r.count("idealization")
    ))
}

fn construction(c: &Ctx) -> Result<String, String> {
    let r = c.suite("construction")?;
    need(r.count("built") > 0, || "nothing built".into())?;
    Ok(format!(
        "{} built, {} characteristic mismatch, {} residue-field mismatch, {} no maximal subfield",
        r.count("built"),
        r.count("characteristic mismatch"),
        r.count("residue-field mismatch"),
        r.count("no maximal subfield")
    ))
}

fn absorbing(c: &Ctx) -> Result<String, String> {
    let a = c.suite("absorbing")?;
    let z = c.suite("z-ideal")?;
    need(a.count("squares") > 0, || "no maximal ideals with M^2 != M".into())?;
    need(z.count("integers") == 499, || format!("{} integers checked", z.count("integers")))?;
    Ok(format!("{} ideals, {} squares of maximals, n = 2..500 over Z", a.count("ideals"), a.count("squares")))
}

fn lambda(c: &Ctx) -> Result<String, String> {
    let r = c.suite("lambda")?;
    let (s, i) = (r.count("surjections"), r.count("inclusions"));
    need(s >= 50 && i >= 50, || format!("{s} surjections, {i} inclusions"))?;
    Ok(format!("{} ideals, {s} surjections, {i} inclusions", r.count("ideals")))
}

fn example_ring(c: &Ctx) -> Result<String, String> {
    let r = c.suite("example-ring")?;
    need(r.checked >= 16, || format!("{} checks", r.checked))?;
    Ok(format!("{} checks over GF(2) and GF(3)", r.checked))
}

fn transfer(c: &Ctx) -> Result<String, String> {
    let r = c.suite("transfer")?;
    for id in proposition_ids() {
        let pass = r.count(&format!("{id}:pass"));
        need(pass > 0, || format!("{id} never checked"))?;
    }
    let not_met = r.count("covering-transfer:not-met");
    need(not_met > 0, || "covering transfer never missed its support hypothesis".into())?;
    for id in ["retract-transfer", "monic-quotient-transfer"] {
        need(r.count(&format!("{id}:checked")) > 0, || format!("{id} never checked"))?;
    }
    Ok(format!("{} instances, {} hypothesis not met ({not_met} covering-transfer)", r.checked, r.hypothesis_not_met))
}

fn lift_dichotomy(c: &Ctx) -> Result<String, String> {
    let r = c.suite("lift-dichotomy")?;
    need(r.checked >= 10, || format!("only {} instances", r.checked))?;
    Ok(format!("{} instances over {} extensions", r.checked, r.count("extensions")))
}

fn lattice_oracle(c: &Ctx) -> Result<String, String> {
    let r = c.suite("lattice-oracle")?;
    need(r.count("largest") == 64, || format!("largest ring {}", r.count("largest")))?;
    Ok(format!("{} rings of size <= 64", r.count("rings")))
}

type Criterion = fn(&Ctx) -> Result<String, String>;

fn main() {
    let criteria: [(&str, u64, Criterion); 11] = [
        ("qmax equivalence", 60, qmax_equivalence),
        ("submaximal characterization", 30, submaximal),
        ("ramified iff SPIR of index two", 30, ramified_spir),
        ("conductor of a minimal extension", 60, conductor_type),
        ("construction round-trip", 120, construction),
        ("2-absorbing package", 120, absorbing),
        ("lambda package", 60, lambda),
        ("example ring end-to-end", 5, example_ring),
        ("transfer suite", 300, transfer),
        ("ramified lift dichotomy", 60, lift_dichotomy),
        ("ideal enumeration oracle", 120, lattice_oracle),
    ];
    let opts = SuiteOptions::default();
    let ctx = Ctx { corpus: Corpus::new(opts.corpus), opts };
    let t = Instant::now();
    let warm = ctx.corpus.rings().and_then(|_| ctx.corpus.exts());
    if let Err(e) = warm {
        eprintln!("corpus: {e}");
        std::process::exit(1);
    }
    println!("corpus built in {:.2?}", t.elapsed());
    let mut failed = 0;
    for (n, (name, budget, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let got = f(&ctx);
        let took = t.elapsed();
        let over = took > Duration::from_secs(*budget);
        let (verdict, detail) = match (&got, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {budget} s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("criterion {} {name}: {verdict} ({detail}; {took:.2?})", n + 1);
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
