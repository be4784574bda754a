//! The test corpus: rings and extensions enumerated in a fixed order from
//! ring specs, plus seeded random quotients.

use crate::error::{Error, Result};
use crate::extension::{idealization_minimal, Extension};
use crate::limits;
use crate::ring::{Ring, RingSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorpusConfig {
    pub max_size: usize,
    pub seed: u64,
    /// Number of seeded quotients of polynomial rings to add.
    pub random_quotients: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig { max_size: 256, seed: 0, random_quotients: 16 }
    }
}

#[derive(Clone)]
pub struct CorpusRing {
    pub spec: String,
    pub ring: Ring,
}

pub struct CorpusExt {
    pub label: String,
    pub ext: Extension,
}

const PRIMES: [u64; 3] = [2, 3, 5];

/// Small local rings used as product factors.
const FACTORS: [&str; 13] = [
    "Z/2",
    "Z/3",
    "Z/4",
    "Z/5",
    "Z/7",
    "Z/8",
    "Z/9",
    "GF(2^2)",
    "GF(2^3)",
    "GF(3^2)",
    "poly(Z/2, x^2)",
    "poly(Z/3, x^2)",
    "mvq(GF(2), x^2, x*y, y^2)",
];

/// x^d + c_{d-1}x^{d-1} + ... + c_0 in surface syntax.
pub fn poly_text(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        terms.push(match (c, k) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn monic(p: u64, d: u32, code: u64) -> String {
    let mut coeffs: Vec<u64> = (0..d).map(|k| code / p.pow(k) % p).collect();
    coeffs.push(1);
    poly_text(&coeffs)
}

fn spec_size(spec: &str) -> Option<usize> {
    RingSpec::parse(spec).ok().and_then(|s| s.build().ok()).map(|r| r.size())
}

/// Ring specs in corpus order, before the size cap is applied to the
/// constructed rings.
pub fn ring_specs(cfg: &CorpusConfig) -> Vec<String> {
    let cap = cfg.max_size;
    let mut out: Vec<String> = Vec::new();
    for n in 2..=cap.min(200) {
        out.push(format!("Z/{n}"));
    }
    for p in [2u64, 3, 5, 7] {
        for k in 2..=6 {
            if (p.pow(k) as usize) <= cap.min(64) {
                out.push(format!("GF({p}^{k})"));
            }
        }
    }
    for p in PRIMES {
        for d in 2..=3u32 {
            if (p.pow(d) as usize) > cap {
                continue;
            }
            for code in 0..p.pow(d) {
                out.push(format!("poly(Z/{p}, {})", monic(p, d, code)));
            }
        }
    }
    for field in ["GF(2)", "GF(3)"] {
        out.push(format!("mvq({field}, x^2, x*y, y^2)"));
    }
    for n in 2..=16usize {
        for d in (1..n).filter(|d| n % d == 0) {
            if n * (n / d) <= cap {
                out.push(format!("idealize(Z/{n}, {d})"));
            }
        }
    }
    for s in ["idealize(GF(2^2), 1)", "idealize(poly(Z/2, x^2), x)", "idealize(poly(Z/2, x^2), 1)", "idealize(poly(Z/3, x^2), x)"] {
        out.push(s.to_string());
    }
    let sizes: Vec<usize> = FACTORS.iter().map(|f| spec_size(f).unwrap_or(usize::MAX)).collect();
    for a in 0..FACTORS.len() {
        for b in a..FACTORS.len() {
            if sizes[a].saturating_mul(sizes[b]) <= cap {
                out.push(format!("{} x {}", FACTORS[a], FACTORS[b]));
            }
            for c in b..FACTORS.len() {
                if sizes[a].saturating_mul(sizes[b]).saturating_mul(sizes[c]) <= cap {
                    out.push(format!("{} x {} x {}", FACTORS[a], FACTORS[b], FACTORS[c]));
                }
            }
        }
    }
    out.extend(random_quotient_specs(cfg));
    let mut seen = HashSet::new();
    out.retain(|s| seen.insert(s.clone()));
    out
}

/// quot(poly(Z/p, f), g) for random monic f and random g, drawn from the seed.
fn random_quotient_specs(cfg: &CorpusConfig) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < cfg.random_quotients && attempts < 20 * cfg.random_quotients.max(1) {
        attempts += 1;
        let p = PRIMES[rng.gen_range(0..PRIMES.len())];
        let d = rng.gen_range(2..=3u32);
        let f = monic(p, d, rng.gen_range(0..p.pow(d)));
        let g: Vec<u64> = (0..d).map(|_| rng.gen_range(0..p)).collect();
        if (p.pow(d) as usize) > cfg.max_size || g.iter().all(|&c| c == 0) {
            continue;
        }
        let spec = format!("quot(poly(Z/{p}, {f}), {})", poly_text(&g));
        // Unit generators give the zero ring, which is rejected.
        if RingSpec::parse(&spec).and_then(|s| s.build()).is_ok() {
            out.push(spec);
        }
    }
    out
}

fn skippable(e: &Error) -> bool {
    matches!(e, Error::ResourceLimit(_))
}

/// The corpus rings within the size cap, in spec order.
pub fn ring_corpus(cfg: &CorpusConfig) -> Result<Vec<CorpusRing>> {
    let specs = ring_specs(cfg);
    let built: Vec<Option<CorpusRing>> = specs
        .par_iter()
        .map(|spec| {
            let ring = match RingSpec::parse(spec)?.build() {
                Ok(r) => r,
                Err(e) if skippable(&e) => return Ok(None),
                Err(e) => return Err(e),
            };
            if ring.size() > cfg.max_size {
                return Ok(None);
            }
            match ring.lattice() {
                Ok(_) => Ok(Some(CorpusRing { spec: spec.clone(), ring })),
                Err(e) if skippable(&e) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;
    Ok(built.into_iter().flatten().collect())
}

/// Every proper subring R ⊂ S for corpus rings S small enough for
/// intermediate-ring enumeration, then R(+)I ⊂ R(+)J for covering pairs
/// I ≺ J of small R. Labels are free text.
pub fn extension_corpus(cfg: &CorpusConfig) -> Result<Vec<CorpusExt>> {
    let cap = cfg.max_size.min(limits::max_intermediate());
    let rings = ring_corpus(cfg)?;
    let parts: Vec<Vec<CorpusExt>> = rings
        .par_iter()
        .filter(|c| c.ring.size() <= cap)
        .map(|c| {
            let s = &c.ring;
            let base = Extension::subring_generated(s, &[])?;
            let inter = base.intermediate_rings()?;
            let mut out = Vec::new();
            for t in &inter.rings[..inter.len() - 1] {
                let members: Vec<usize> = t.ones().collect();
                let label = format!("{members:?} ⊂ {}", c.spec);
                out.push(CorpusExt { ext: Extension::from_subset(s, t, label.clone())?, label });
            }
            let l = s.lattice()?;
            for (lo, hi) in l.cover_pairs() {
                if s.size() * l.get(hi).len() > cap {
                    continue;
                }
                let ext = idealization_minimal(s, l.get(lo), l.get(hi))?;
                let label = format!("{}(+){:?} ⊂ {}(+){:?}", c.spec, l.get(lo).to_vec(), c.spec, l.get(hi).to_vec());
                out.push(CorpusExt { ext, label });
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}
