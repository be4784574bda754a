use super::{over, Corpus, SuiteOptions, SuiteReport};
use crate::absorbing::{
    absorbing_characterization, badawi_structure, colon_behavior_check, is_primal, is_semi_primal, is_two_absorbing,
    lambda_morphism_check, lambda_set, local_factor_absorbing_check, square_of_maximal_check,
};
use crate::error::Result;
use crate::ideal::Ideal;
use crate::qmax::{classify_qmax, is_submaximal, QMaxClass};
use crate::ring::{quotient_ring, Ring, RingMap};
use crate::zdedekind::{classify_z_ideal, prime_square_witness, z_crosscheck};

/// Largest n for the Z comparison.
const Z_BOUND: u64 = 500;

/// 2-absorbing consequences and characterization on every corpus ideal.
pub fn absorbing(corpus: &Corpus, _: &SuiteOptions) -> Result<SuiteReport> {
    over("absorbing", corpus.rings()?, |c, rep| {
        let r = &c.ring;
        let l = r.lattice()?;
        for k in l.proper() {
            let i = l.get(k);
            rep.bump("ideals", 1);
            let class = classify_qmax(r, i)?;
            let abs = is_two_absorbing(r, i)?;
            if class.tag().is_qmax() {
                rep.check(abs.two_absorbing, || format!("{}: quasi-maximal {:?} has violating triple {:?}", c.spec, i.to_vec(), abs.violating_triple));
                if &r.radical(i) != i {
                    rep.check(is_primal(r, i)?, || format!("{}: non-radical quasi-maximal {:?} is not primal", c.spec, i.to_vec()));
                }
            }
            let ch = absorbing_characterization(r, i)?;
            rep.check(ch.agree(), || format!("{}: {:?} characterization {ch:?}", c.spec, i.to_vec()));
            if abs.two_absorbing {
                rep.bump("two-absorbing", 1);
                // An unmatched structure case surfaces as an error.
                let s = badawi_structure(r, i)?;
                rep.bump(&format!("structure-{}", s.case()), 1);
                rep.checked += 1;
            }
            match local_factor_absorbing_check(r, i)? {
                Some(ok) => rep.check(ok, || format!("{}: {:?} disagrees with its local factor", c.spec, i.to_vec())),
                None => rep.not_met(),
            }
        }
        for &m in l.maximal_ideals() {
            let mm = l.get(m);
            if &r.ideal_product(mm, mm) == mm {
                continue;
            }
            let sq = square_of_maximal_check(r, mm)?;
            rep.bump("squares", 1);
            rep.check(sq.agree(), || format!("{}: square of {:?}: {sq:?}", c.spec, mm.to_vec()));
        }
        Ok(())
    })
}

fn lambda_closed_form(r: &Ring, class: &QMaxClass, i: &Ideal) -> Result<bool> {
    let lam = lambda_set(r, i)?;
    let outside = |x: usize| match class {
        QMaxClass::Decomposed { m1, m2 } => !m1.contains(x) && !m2.contains(x),
        _ => !r.radical(i).contains(x),
    };
    Ok(lam.invariants_hold(r, i) && (0..r.size()).all(|x| lam.contains(x) == outside(x)))
}

fn morphism_checks(rep: &mut SuiteReport, key: &str, f: &RingMap, what: &str) -> Result<()> {
    let s = f.target();
    let sl = s.lattice()?;
    let mut any = false;
    for k in sl.proper() {
        let j = sl.get(k);
        if !classify_qmax(s, j)?.tag().is_qmax() {
            continue;
        }
        any = true;
        let m = lambda_morphism_check(f, j)?;
        rep.check(m.agree(), || format!("{what}: Λ under the map for {:?}: {m:?}", j.to_vec()));
    }
    if any {
        rep.bump(key, 1);
    }
    Ok(())
}

/// Λ of quasi-maximal ideals: closed forms, primal and semi-primal, colon
/// ideals, and behavior under quotient maps and subring inclusions.
pub fn lambda(corpus: &Corpus, _: &SuiteOptions) -> Result<SuiteReport> {
    let mut rep = over("lambda", corpus.rings()?, |c, rep| {
        let r = &c.ring;
        let l = r.lattice()?;
        for k in l.proper() {
            let i = l.get(k);
            let class = classify_qmax(r, i)?;
            if !class.tag().is_qmax() {
                continue;
            }
            rep.bump("ideals", 1);
            rep.check(lambda_closed_form(r, &class, i)?, || format!("{}: Λ({:?}) closed form", c.spec, i.to_vec()));
            let primal = is_primal(r, i)?;
            let want_primal = !matches!(class, QMaxClass::Decomposed { .. });
            rep.check(primal == want_primal && is_semi_primal(r, i)?, || {
                format!("{}: {:?} primal {primal}, expected {want_primal}", c.spec, i.to_vec())
            });
            if !l.is_maximal(k) && is_submaximal(r, i)? {
                rep.bump("colon", 1);
                rep.check(colon_behavior_check(r, i)?, || format!("{}: colon ideals of {:?}", c.spec, i.to_vec()));
            }
        }
        if r.size() <= 64 {
            for k in l.proper().filter(|&k| k != l.zero()) {
                let (_, pi) = quotient_ring(r, l.get(k))?;
                morphism_checks(rep, "surjections", &pi, &format!("{} / {:?}", c.spec, l.get(k).to_vec()))?;
            }
        }
        Ok(())
    })?;
    let part = over("lambda", corpus.exts()?, |c, rep| morphism_checks(rep, "inclusions", c.ext.inclusion(), &c.label))?;
    rep.merge(part);
    Ok(rep)
}

/// (n) ⊂ Z against (0) in Z/n for n ≤ 500, and (p²) ramified for p ≤ 50.
pub fn z_ideal(_: &Corpus, _: &SuiteOptions) -> Result<SuiteReport> {
    let ns: Vec<u64> = (2..=Z_BOUND).collect();
    let mut rep = over("z-ideal", &ns, |&n, rep| {
        rep.bump("integers", 1);
        rep.check(z_crosscheck(n)?, || format!("({n}) disagrees with (0) in Z/{n}"));
        let z = classify_z_ideal(n)?;
        rep.check(z.two_absorbing == z.tag.is_qmax(), || format!("({n}): 2-absorbing {} for {}", z.two_absorbing, z.tag.name()));
        if z.tag.is_qmax() {
            rep.bump(z.tag.name(), 1);
        }
        Ok(())
    })?;
    let ps = prime_square_witness(50)?;
    rep.bump("prime-squares", ps.primes.len());
    for p in &ps.primes {
        rep.check(!ps.failures.contains(p), || format!("({}) is not ramified", p * p));
    }
    Ok(rep)
}
