use super::Extension;
use crate::error::{inconsistent, invalid, Result};
use crate::ideal::Ideal;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MinimalTag {
    Inert,
    Decomposed,
    Ramified,
    #[serde(rename = "not-minimal")]
    NotMinimal,
}

/// Type of a minimal extension with its witnesses. `m` is the conductor
/// (R:S) as an ideal of S; `q` satisfies S = R[q].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalType {
    NotMinimal,
    Inert { m: Ideal, degree: u32 },
    Decomposed { m: Ideal, m1: Ideal, m2: Ideal, q: usize },
    Ramified { m: Ideal, m_prime: Ideal, q: usize },
}

impl MinimalType {
    pub fn tag(&self) -> MinimalTag {
        match self {
            MinimalType::NotMinimal => MinimalTag::NotMinimal,
            MinimalType::Inert { .. } => MinimalTag::Inert,
            MinimalType::Decomposed { .. } => MinimalTag::Decomposed,
            MinimalType::Ramified { .. } => MinimalTag::Ramified,
        }
    }
}

fn log_exact(base: usize, n: usize) -> Option<u32> {
    if base < 2 {
        return None;
    }
    let (mut k, mut v) = (0, 1usize);
    while v < n {
        v *= base;
        k += 1;
    }
    (v == n).then_some(k)
}

fn is_prime(k: u32) -> bool {
    k >= 2 && (2..k).take_while(|d| d * d <= k).all(|d| !k.is_multiple_of(d))
}

impl Extension {
    /// Minimality by adjunction of single elements, then typing by how the
    /// conductor sits in S. The generator characterizations and residue
    /// degrees are cross-checked; a mismatch is reported as an error.
    pub fn classify_minimal(&self) -> Result<MinimalType> {
        if !self.is_proper() {
            return invalid("R = S has no minimal type");
        }
        if !self.is_minimal() {
            return Ok(MinimalType::NotMinimal);
        }
        let (r, s) = (self.sub(), self.ambient());
        let m = self.conductor().clone();
        let rl = r.lattice()?;
        let sl = s.lattice()?;
        let mr = self.contract(&m);
        if !rl.is_maximal(rl.position(&mr)?) {
            return inconsistent(format!("conductor of minimal {self:?} is not maximal in R"));
        }
        let res_r = r.size() / m.len();
        let res_s = s.size() / m.len();
        let mk = sl.position(&m)?;
        let outside: Vec<usize> = (0..s.size()).filter(|&x| !self.image().contains(x)).collect();

        if sl.is_maximal(mk) {
            return match log_exact(res_r, res_s) {
                Some(d) if is_prime(d) => Ok(MinimalType::Inert { m, degree: d }),
                _ => inconsistent(format!("inert {self:?}: residue extension of sizes {res_r} ⊂ {res_s} is not minimal")),
            };
        }
        let over = sl.maximal_over(mk);
        for (a, &n1) in over.iter().enumerate() {
            for &n2 in &over[a + 1..] {
                if sl.get(n1).intersection(sl.get(n2)) != m {
                    continue;
                }
                let (m1, m2) = (sl.get(n1).clone(), sl.get(n2).clone());
                if s.size() / m1.len() != res_r || s.size() / m2.len() != res_r {
                    return inconsistent(format!("decomposed {self:?}: residue maps are not isomorphisms"));
                }
                let q = outside.iter().copied().find(|&q| m.contains(s.sub(s.mul(q, q), q)));
                return match q {
                    Some(q) => Ok(MinimalType::Decomposed { m, m1, m2, q }),
                    None => inconsistent(format!("decomposed {self:?}: no idempotent-type generator")),
                };
            }
        }
        for &n in &over {
            let np = sl.get(n);
            if !s.ideal_product(np, np).is_subset(&m) {
                continue;
            }
            if res_s != res_r * res_r || s.size() / np.len() != res_r {
                return inconsistent(format!("ramified {self:?}: residue degrees do not match"));
            }
            let (qs, _) = crate::ring::quotient_ring(s, &m)?;
            let (qn, _) = crate::ring::quotient_ring(s, np)?;
            if qs.characteristic() != qn.characteristic() {
                return inconsistent(format!("ramified {self:?}: characteristics of S/M and S/M' differ"));
            }
            let q = outside.iter().copied().find(|&q| m.contains(s.mul(q, q)));
            return match q {
                Some(q) => Ok(MinimalType::Ramified { m, m_prime: np.clone(), q }),
                None => inconsistent(format!("ramified {self:?}: no nilpotent-type generator")),
            };
        }
        inconsistent(format!("minimal {self:?} fits none of the three types"))
    }
}
