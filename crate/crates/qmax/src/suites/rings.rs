use super::{over, Corpus, SuiteOptions, SuiteReport};
use crate::error::Result;
use crate::ideal::{brute_force_ideals, Ideal};
use crate::qmax::{
    classify_qmax, find_qmax_below, find_ramified_below, is_kasch, is_qmax_definition, is_submaximal,
    k_intersection_and_sandwich, only_maximal_above, product_qmax_check, qmax_equivalence_report,
    ramified_vs_spir_index_two, QMaxTag,
};
use crate::ring::{make_product, quotient_ring, RingMap, Shape};

/// Sum-closure enumeration against brute force on rings of size ≤ 64, plus
/// lattice facts: no prime covers a smaller prime, equal chain lengths,
/// local-factor reassembly, radical identities.
pub fn lattice_oracle(corpus: &Corpus, _: &SuiteOptions) -> Result<SuiteReport> {
    let rings = corpus.rings_up_to(64)?;
    let mut rep = over("lattice-oracle", &rings, |c, rep| {
        let r = &c.ring;
        let l = r.lattice()?;
        rep.bump("rings", 1);
        rep.bump("ideals", l.len());
        let brute = brute_force_ideals(r);
        rep.check(brute == l.ideals(), || format!("{}: {} ideals by closure, {} by brute force", c.spec, l.len(), brute.len()));

        let primes = l.prime_ideals();
        for &p in primes {
            for &q in primes {
                if l.get(p).is_proper_subset(l.get(q)) {
                    rep.check(!l.covers(p, q), || format!("{}: prime {:?} covered by prime {:?}", c.spec, l.get(p), l.get(q)));
                }
            }
        }

        let heights = (0..l.len()).map(|k| l.chain_length(k, l.unit())).collect::<Result<Vec<_>>>()?;
        for (lo, hi) in l.cover_pairs() {
            rep.check(heights[lo] == heights[hi] + 1, || format!("{}: chain lengths differ through {:?}", c.spec, l.get(lo)));
        }

        let lf = r.local_factors();
        let factors: Vec<_> = lf.factors.iter().map(|(f, _)| f.clone()).collect();
        rep.check(factors.iter().all(|f| f.lattice().map(|fl| fl.maximal_ideals().len() == 1).unwrap_or(false)), || {
            format!("{}: a local factor is not local", c.spec)
        });
        let (prod, _) = make_product(&factors)?;
        let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
        let image: Vec<usize> = (0..r.size())
            .map(|x| lf.factors.iter().zip(&sizes).fold(0, |acc, ((_, p), &s)| acc * s + p.apply(x)))
            .collect();
        let reassembled = RingMap::new(r.clone(), prod, image).map(|m| m.is_injective() && m.is_surjective()).unwrap_or(false);
        rep.check(reassembled, || format!("{}: product of local factors is not R", c.spec));
        for i in l.ideals() {
            let parts: Vec<Ideal> = (0..lf.len()).map(|k| lf.project(k, i)).collect();
            let glued = (0..r.size()).all(|x| i.contains(x) == lf.factors.iter().zip(&parts).all(|((_, p), pi)| pi.contains(p.apply(x))));
            rep.check(glued, || format!("{}: {i:?} is not the product of its local parts", c.spec));
        }

        for i in l.ideals() {
            let by_primes = l
                .primes_over(l.position(i)?)
                .iter()
                .fold(Ideal::unit(r), |acc, &p| acc.intersection(l.get(p)));
            rep.check(r.radical(i) == by_primes, || format!("{}: radical of {i:?} differs from the prime intersection", c.spec));
        }
        if l.len() <= 40 {
            for i in l.ideals() {
                for j in l.ideals() {
                    let ok = r.radical(&r.ideal_product(i, j)) == r.radical(&i.intersection(j));
                    rep.check(ok, || format!("{}: rad(IJ) differs from rad(I ∩ J) for {i:?}, {j:?}", c.spec));
                }
            }
        }
        Ok(())
    })?;
    rep.bump("largest", rings.iter().map(|c| c.ring.size()).max().unwrap_or(0));
    Ok(rep)
}

fn tag_key(t: QMaxTag) -> &'static str {
    t.name()
}

/// The seven characterizations agree on every proper ideal, and the
/// witnesses of each classification re-verify.
pub fn qmax_equivalence(corpus: &Corpus, _: &SuiteOptions) -> Result<SuiteReport> {
    over("qmax-equivalence", corpus.rings()?, |c, rep| {
        let r = &c.ring;
        let l = r.lattice()?;
        rep.bump("rings", 1);
        for k in l.proper() {
            let i = l.get(k);
            rep.bump("ideals", 1);
            let eq = qmax_equivalence_report(r, i)?;
            rep.check(eq.agree(), || format!("{}: {:?} conditions {:?}", c.spec, i.to_vec(), eq.conditions));
            let class = classify_qmax(r, i)?;
            rep.bump(tag_key(class.tag()), 1);
            rep.check(class.verify(r, i)?, || format!("{}: witness for {:?} does not re-verify", c.spec, i.to_vec()));
        }
        Ok(())
    })
}

/// Quasi-maximal ⇔ maximal or submaximal ⇔ only maximal ideals strictly
/// above; submaximal ideals are covered by every maximal ideal above them.
pub fn submaximal(corpus: &Corpus, _: &SuiteOptions) -> Result<SuiteReport> {
    over("submaximal", corpus.rings()?, |c, rep| {
        let r = &c.ring;
        let l = r.lattice()?;
        for k in l.proper() {
            let i = l.get(k);
            let maximal = l.is_maximal(k);
            let q = is_qmax_definition(r, i)?;
            let sub = is_submaximal(r, i)?;
            let above = only_maximal_above(r, i)?;
            rep.check(q == (maximal || sub) && q == above, || {
                format!("{}: {:?} qmax {q}, submaximal {sub}, only maximal above {above}", c.spec, i.to_vec())
            });
            if sub {
                let covered = l.maximal_over(k).iter().all(|&m| l.covers(k, m));
                rep.check(covered, || format!("{}: a maximal ideal above {:?} does not cover it", c.spec, i.to_vec()));
            }
            if !maximal {
                rep.bump("non-maximal", 1);
            }
        }
        Ok(())
    })
}

pub fn ramified_spir(corpus: &Corpus, _: &SuiteOptions) -> Result<SuiteReport> {
    over("ramified-spir", corpus.rings()?, |c, rep| {
        let r = &c.ring;
        let l = r.lattice()?;
        for k in l.proper() {
            let (ramified, spir) = ramified_vs_spir_index_two(r, l.get(k))?;
            if ramified {
                rep.bump("ramified", 1);
            }
            rep.check(ramified == spir, || format!("{}: {:?} ramified {ramified}, SPIR of index 2 {spir}", c.spec, l.get(k).to_vec()));
        }
        Ok(())
    })
}

/// Consequences of quasi-maximality: radicals, Kasch quotients, the
/// K-sandwich, existence below maximal ideals, products.
pub fn qmax_structure(corpus: &Corpus, _: &SuiteOptions) -> Result<SuiteReport> {
    over("qmax-structure", corpus.rings()?, |c, rep| {
        let r = &c.ring;
        let l = r.lattice()?;
        for k in l.proper() {
            let i = l.get(k);
            if !classify_qmax(r, i)?.tag().is_qmax() {
                continue;
            }
            let rad = r.radical(i);
            let ok = r.ideal_product(&rad, &rad).is_subset(i) && classify_qmax(r, &rad)?.tag().is_qmax();
            rep.check(ok, || format!("{}: radical of {:?} fails the square or type condition", c.spec, i.to_vec()));
            let (q, _) = quotient_ring(r, i)?;
            let regular_units = (0..q.size()).all(|x| q.is_zero_divisor(x) || q.is_unit(x));
            rep.check(is_kasch(&q)? && regular_units, || format!("{}: R/{:?} is not Kasch", c.spec, i.to_vec()));
        }
        let (kk, sandwich) = k_intersection_and_sandwich(r)?;
        rep.check(sandwich, || format!("{}: K sandwich fails", c.spec));
        let nil = l.nilradical();
        if !kk.is_subset(nil) && !nil.is_subset(&kk) {
            rep.bump("k-nil-incomparable", 1);
        }
        let zero = Ideal::zero(r);
        for &m in l.maximal_ideals() {
            let mm = l.get(m);
            let below = find_qmax_below(r, mm)?;
            rep.check(below.is_none() == (mm == &zero), || format!("{}: quasi-maximal search below {:?}", c.spec, mm.to_vec()));
            let idempotent = &r.ideal_product(mm, mm) == mm;
            let ram = find_ramified_below(r, mm)?;
            rep.check(ram.is_none() == idempotent, || format!("{}: ramified search below {:?}", c.spec, mm.to_vec()));
            // M-primary J ≠ M has a ramified ideal between it and M.
            for j in l.ideals().iter().filter(|j| j.is_proper_subset(mm) && &r.radical(j) == mm) {
                let found = l
                    .ideals()
                    .iter()
                    .any(|x| j.is_subset(x) && x.is_proper_subset(mm) && classify_qmax(r, x).map(|t| t.tag() == QMaxTag::Ramified).unwrap_or(false));
                rep.check(found, || format!("{}: no ramified ideal over {:?} inside {:?}", c.spec, j.to_vec(), mm.to_vec()));
            }
        }
        if let Shape::Product(factors) = r.shape() {
            rep.bump("products", 1);
            rep.check(product_qmax_check(factors)?, || format!("{}: quasi-maximal ideals of the product", c.spec));
        }
        Ok(())
    })
}
