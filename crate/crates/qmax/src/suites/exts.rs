use super::{over, Corpus, SuiteOptions, SuiteReport};
use crate::error::Result;
use crate::extension::transfer::{transfer_suite, Status};
use crate::extension::{
    build_minimal_from_qmax, conductor_type_check, infra_integral_qmax_conductor_check, length_formula_check,
    maximal_conductor_check, monic_quotient_transfer_check, retract_transfer_check, BuildFailure, BuildOutcome,
    Extension, MinimalTag, TransferTally,
};
use crate::ideal::Ideal;
use crate::qmax::{classify_qmax, QMaxClass, QMaxTag};
use crate::ring::{quotient_ring, RingSpec};

fn minimal_tag(ext: &Extension) -> Result<MinimalTag> {
    if !ext.is_proper() {
        return Ok(MinimalTag::NotMinimal);
    }
    Ok(ext.classify_minimal()?.tag())
}

fn tag_name(t: MinimalTag) -> &'static str {
    match t {
        MinimalTag::Inert => "inert",
        MinimalTag::Decomposed => "decomposed",
        MinimalTag::Ramified => "ramified",
        MinimalTag::NotMinimal => "not-minimal",
    }
}

/// The conductor of every minimal extension is quasi-maximal in S with the
/// extension's type.
pub fn conductor_type(corpus: &Corpus, _: &SuiteOptions) -> Result<SuiteReport> {
    over("conductor-type", corpus.exts()?, |c, rep| {
        let Some(ok) = conductor_type_check(&c.ext)? else {
            rep.not_met();
            return Ok(());
        };
        let t = minimal_tag(&c.ext)?;
        rep.bump(tag_name(t), 1);
        rep.bump("minimal", 1);
        if c.label.contains("(+)") {
            rep.bump("idealization", 1);
        }
        rep.check(ok, || format!("{}: conductor type differs from {}", c.label, tag_name(t)));
        Ok(())
    })
}

/// Conductor criteria that do not assume minimality: infra-integral with a
/// quasi-maximal conductor, maximal conductors and t-closedness, and the
/// decomposed/ramified conductor criteria with the length identity.
pub fn extension_structure(corpus: &Corpus, _: &SuiteOptions) -> Result<SuiteReport> {
    over("extension-structure", corpus.exts()?, |c, rep| {
        let ext = &c.ext;
        if !ext.is_proper() {
            return Ok(());
        }
        rep.bump("extensions", 1);
        rep.bump("intermediate-rings", ext.intermediate_rings()?.len());
        match infra_integral_qmax_conductor_check(ext)? {
            Some(ok) => rep.check(ok, || format!("{}: infra-integral with quasi-maximal conductor", c.label)),
            None => rep.not_met(),
        }
        match maximal_conductor_check(ext)? {
            Some(ok) => rep.check(ok, || format!("{}: conductor maximal in S against t-closedness", c.label)),
            None => rep.not_met(),
        }
        let lf = length_formula_check(ext)?;
        if lf.length_identity.is_some() {
            rep.bump("length-identity", 1);
        }
        rep.check(lf.agree(), || format!("{}: conductor criteria {lf:?}", c.label));
        let (sn, tc) = (ext.seminormalization()?.ambient().size(), ext.t_closure()?.ambient().size());
        rep.check(tc % sn == 0, || format!("{}: seminormalization is not inside the t-closure", c.label));
        Ok(())
    })
}

/// Independent re-derivation of the named failure conditions.
fn failure_holds(s: &crate::ring::Ring, i: &Ideal, class: &QMaxClass, f: BuildFailure) -> Result<bool> {
    Ok(match (f, class) {
        (BuildFailure::NoMaximalSubfield, QMaxClass::Inert) => {
            let (q, _) = quotient_ring(s, i)?;
            q.size() == q.characteristic()
        }
        (BuildFailure::ResidueFieldMismatch, QMaxClass::Decomposed { m1, m2 }) => m1.len() != m2.len(),
        (BuildFailure::CharacteristicMismatch, QMaxClass::Ramified { m }) => {
            quotient_ring(s, m)?.0.characteristic() != quotient_ring(s, i)?.0.characteristic()
        }
        _ => false,
    })
}

/// For every quasi-maximal I of every corpus ring of size ≤ 64, a subring
/// with conductor I of the same minimal type is built or the obstruction
/// is named and re-checked.
pub fn construction(corpus: &Corpus, _: &SuiteOptions) -> Result<SuiteReport> {
    let rings = corpus.rings_up_to(64)?;
    over("construction", &rings, |c, rep| {
        let s = &c.ring;
        let l = s.lattice()?;
        for k in l.proper() {
            let i = l.get(k);
            let class = classify_qmax(s, i)?;
            if !class.tag().is_qmax() {
                continue;
            }
            match build_minimal_from_qmax(s, i)? {
                BuildOutcome::Built { ext, tag } => {
                    rep.bump("built", 1);
                    let ok = ext.conductor() == i
                        && ext.classify_minimal()?.tag() == tag
                        && classify_qmax(s, ext.conductor())?.tag() == class.tag();
                    rep.check(ok, || format!("{}: round trip for {:?}", c.spec, i.to_vec()));
                }
                BuildOutcome::Failed(f) => {
                    rep.bump(&f.to_string(), 1);
                    rep.check(failure_holds(s, i, &class, f)?, || format!("{}: {:?} reported {f} wrongly", c.spec, i.to_vec()));
                }
            }
        }
        Ok(())
    })
}

fn build(spec: &str) -> Result<crate::ring::Ring> {
    RingSpec::parse(spec)?.build()
}

/// T = k[X,Y]/(X², XY, Y²) with R = k[x], S = k[y]: the four inclusions
/// k ⊂ R, k ⊂ S, R ⊂ T, S ⊂ T are minimal ramified with conductors 0, 0,
/// kx, ky; 0 is ramified in R and S; 0 is not quasi-maximal in T.
pub fn example_ring(_: &Corpus, _: &SuiteOptions) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("example-ring");
    for field in ["GF(2)", "GF(3)"] {
        let t = build(&format!("mvq({field}, x^2, x*y, y^2)"))?;
        let x = t.element_by_name("x").expect("x is named");
        let y = t.element_by_name("y").expect("y is named");
        let tl = t.lattice()?;
        let p = t.ideal_generated(&[x, y]);
        rep.check(tl.maximal_ideals().len() == 1 && tl.get(tl.maximal_ideals()[0]) == &p, || format!("{field}: kx + ky is not the unique maximal ideal"));
        for (name, g) in [("x", x), ("y", y)] {
            let top = Extension::subring_generated(&t, &[g])?;
            let sub = top.sub().clone();
            let bottom = Extension::subring_generated(&sub, &[])?;
            let zero = Ideal::zero(&sub);
            rep.check(bottom.classify_minimal()?.tag() == MinimalTag::Ramified && bottom.conductor() == &zero, || {
                format!("{field}: k ⊂ k[{name}] is not minimal ramified with conductor 0")
            });
            let expected = t.ideal_generated(&[g]);
            rep.check(top.classify_minimal()?.tag() == MinimalTag::Ramified && top.conductor() == &expected, || {
                format!("{field}: k[{name}] ⊂ T is not minimal ramified with conductor k{name}")
            });
            rep.check(classify_qmax(&sub, &zero)?.tag() == QMaxTag::Ramified, || format!("{field}: 0 is not ramified in k[{name}]"));
        }
        let zero = Ideal::zero(&t);
        rep.check(!classify_qmax(&t, &zero)?.tag().is_qmax(), || format!("{field}: 0 is quasi-maximal in T"));
    }
    Ok(rep)
}

fn tally_into(rep: &mut SuiteReport, key: &str, t: TransferTally) {
    rep.checked += t.checked;
    rep.hypothesis_not_met += t.not_met;
    rep.bump(&format!("{key}:checked"), t.checked);
    rep.bump(&format!("{key}:not-met"), t.not_met);
    for f in t.failures {
        rep.fail(format!("{key}: {f}"));
    }
}

fn wants(opts: &SuiteOptions, id: &str) -> bool {
    opts.props.as_ref().is_none_or(|p| p.iter().any(|x| x == id))
}

/// Ideal-transfer statements on every corpus extension, idealization
/// retracts, and monic quotients of local corpus rings.
pub fn transfer(corpus: &Corpus, opts: &SuiteOptions) -> Result<SuiteReport> {
    let props = opts.props.as_deref();
    let mut rep = over("transfer", corpus.exts()?, |c, rep| {
        for r in transfer_suite(&c.ext, props)? {
            let key = match r.status {
                Status::Pass => {
                    rep.checked += 1;
                    if r.prop == "max-upper" && r.witness.is_some() {
                        rep.bump("max-upper:extension-differs", 1);
                    }
                    "pass"
                }
                Status::Fail => {
                    rep.checked += 1;
                    rep.fail(format!("{}: {} ({})", r.prop, r.instance, r.witness.clone().unwrap_or_default()));
                    "fail"
                }
                Status::HypothesisNotMet => {
                    rep.not_met();
                    "not-met"
                }
            };
            rep.bump(&format!("{}:{key}", r.prop), 1);
            if opts.records {
                rep.records.push(r);
            }
        }
        Ok(())
    })?;
    if wants(opts, "retract-transfer") {
        let small = corpus.rings_up_to(32)?;
        let part = over("transfer", &small, |c, rep| {
            let l = c.ring.lattice()?;
            for k in 0..l.len() {
                if c.ring.size() * l.get(k).len() <= corpus.config().max_size {
                    tally_into(rep, "retract-transfer", retract_transfer_check(&c.ring, l.get(k))?);
                }
            }
            Ok(())
        })?;
        rep.merge(part);
    }
    if wants(opts, "monic-quotient-transfer") {
        let local: Vec<_> = corpus
            .rings_up_to(9)?
            .into_iter()
            .filter(|c| c.ring.lattice().map(|l| l.maximal_ideals().len() == 1).unwrap_or(false))
            .collect();
        let part = over("transfer", &local, |c, rep| {
            let r = &c.ring;
            let n = r.size();
            for deg in 1..=2usize {
                if n.pow(deg as u32 + 1) > corpus.config().max_size {
                    continue;
                }
                for code in 0..n.pow(deg as u32) {
                    let mut f: Vec<usize> = (0..deg).map(|k| code / n.pow(k as u32) % n).collect();
                    f.push(r.one());
                    tally_into(rep, "monic-quotient-transfer", monic_quotient_transfer_check(r, &f)?);
                }
            }
            Ok(())
        })?;
        rep.merge(part);
    }
    Ok(rep)
}

/// Ramified minimal extensions: whether a quasi-maximal ideal of S lies
/// over a ramified I = IS matches the shape of S/I.
pub fn lift_dichotomy(corpus: &Corpus, opts: &SuiteOptions) -> Result<SuiteReport> {
    let only = vec!["ramified-lift-dichotomy".to_string()];
    over("lift-dichotomy", corpus.exts()?, |c, rep| {
        let mut seen = false;
        for r in transfer_suite(&c.ext, Some(&only))? {
            match r.status {
                Status::Pass => {
                    rep.checked += 1;
                    seen = true;
                }
                Status::Fail => {
                    rep.checked += 1;
                    seen = true;
                    rep.fail(format!("{} ({})", r.instance, r.witness.clone().unwrap_or_default()));
                }
                Status::HypothesisNotMet => rep.not_met(),
            }
            if opts.records {
                rep.records.push(r);
            }
        }
        if seen {
            rep.bump("extensions", 1);
        }
        Ok(())
    })
}
