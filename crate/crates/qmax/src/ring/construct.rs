use super::{Ring, RingMap, Shape, TableRing};
use crate::error::{invalid, Error, Result};
use crate::ideal::Ideal;
use crate::limits;
use fixedbitset::FixedBitSet;

fn check_cap(size: u128, what: &str) -> Result<usize> {
    if size > limits::max_size() as u128 {
        return Err(Error::ResourceLimit(format!("{what} would have {size} elements, cap is {}", limits::max_size())));
    }
    Ok(size as usize)
}

pub fn make_zmod(n: usize) -> Result<Ring> {
    if n < 2 {
        return invalid(format!("Z/{n} needs n >= 2"));
    }
    check_cap(n as u128, &format!("Z/{n}"))?;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(((a + b) % n) as u32);
            mul.push(((a * b) % n) as u32);
        }
    }
    TableRing::build(n, add, mul, 0, 1, format!("Z/{n}"), Vec::new(), Shape::Plain)
}

fn digits(mut x: usize, base: usize, d: usize) -> Vec<usize> {
    let mut v = Vec::with_capacity(d);
    for _ in 0..d {
        v.push(x % base);
        x /= base;
    }
    v
}

fn undigits(v: &[usize], base: usize) -> usize {
    v.iter().rev().fold(0, |acc, &c| acc * base + c)
}

/// base[x]/(f) with f given low-to-high by element indices of `base`.
pub fn make_poly_quotient(base: &Ring, modulus: &[usize]) -> Result<(Ring, RingMap)> {
    make_poly_quotient_named(base, modulus, "x", None)
}

pub fn make_poly_quotient_named(
    base: &Ring,
    modulus: &[usize],
    var: &str,
    label: Option<String>,
) -> Result<(Ring, RingMap)> {
    if modulus.len() < 2 {
        return invalid("modulus must have degree at least 1");
    }
    if modulus.iter().any(|&c| c >= base.size()) {
        return invalid("modulus coefficient out of range");
    }
    if *modulus.last().unwrap() != base.one() {
        return invalid("modulus is not monic");
    }
    let d = modulus.len() - 1;
    let b = base.size();
    let label = label.unwrap_or_else(|| {
        let coeffs: Vec<String> = modulus.iter().map(|c| c.to_string()).collect();
        format!("poly({}, [{}])", base.label(), coeffs.join(","))
    });
    let n = check_cap((b as u128).pow(d as u32), &label)?;
    let elems: Vec<Vec<usize>> = (0..n).map(|x| digits(x, b, d)).collect();
    let zero = base.zero();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    let mut conv = vec![zero; 2 * d];
    for x in &elems {
        for y in &elems {
            let s: Vec<usize> = x.iter().zip(y).map(|(&p, &q)| base.add(p, q)).collect();
            add.push(undigits(&s, b) as u32);
            conv.iter_mut().for_each(|c| *c = zero);
            for (i, &p) in x.iter().enumerate() {
                if p == zero {
                    continue;
                }
                for (j, &q) in y.iter().enumerate() {
                    conv[i + j] = base.add(conv[i + j], base.mul(p, q));
                }
            }
            for k in (d..2 * d - 1).rev() {
                let c = conv[k];
                if c == zero {
                    continue;
                }
                conv[k] = zero;
                for (i, &f) in modulus[..d].iter().enumerate() {
                    conv[k - d + i] = base.sub(conv[k - d + i], base.mul(c, f));
                }
            }
            mul.push(undigits(&conv[..d], b) as u32);
        }
    }
    let embed = |c: usize| {
        let mut v = vec![zero; d];
        v[0] = c;
        undigits(&v, b)
    };
    let mut names: Vec<(String, usize)> = base.names().iter().map(|(s, i)| (s.clone(), embed(*i))).collect();
    let x_index = if d == 1 {
        embed(base.neg(modulus[0]))
    } else {
        let mut v = vec![zero; d];
        v[1] = base.one();
        undigits(&v, b)
    };
    names.retain(|(s, _)| s != var);
    names.push((var.to_string(), x_index));
    let ring = TableRing::build(n, add, mul, embed(zero), embed(base.one()), label, names, Shape::Plain)?;
    let incl = RingMap::new(base.clone(), ring.clone(), (0..b).map(embed).collect())?;
    Ok((ring, incl))
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Remainder of a by monic b over F_p, coefficients low-to-high.
fn poly_rem(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * bi % p) % p;
        }
        r.pop();
    }
    while r.len() > 1 && *r.last().unwrap() == 0 {
        r.pop();
    }
    r
}

fn irreducible(f: &[usize], p: usize) -> bool {
    let k = f.len() - 1;
    for deg in 1..=k / 2 {
        for t in 0..p.pow(deg as u32) {
            let mut g = digits(t, p, deg);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// GF(p^k) as F_p[x]/(f) for the first irreducible monic f, ordering
/// candidates by their low-to-high coefficient digits.
pub fn make_gf(p: usize, k: u32) -> Result<Ring> {
    if !is_prime(p) {
        return invalid(format!("GF({p}^{k}) needs a prime characteristic"));
    }
    if k == 0 {
        return invalid("GF(p^0) is not a field");
    }
    let label = if k == 1 { format!("GF({p})") } else { format!("GF({p}^{k})") };
    check_cap((p as u128).pow(k), &label)?;
    let fp = make_zmod(p)?;
    if k == 1 {
        return fp.with_label(label, Vec::new(), Shape::Plain);
    }
    let k = k as usize;
    let f = (0..p.pow(k as u32))
        .map(|t| {
            let mut f = digits(t, p, k);
            f.push(1);
            f
        })
        .find(|f| irreducible(f, p))
        .expect("irreducible polynomials exist in every degree");
    Ok(make_poly_quotient_named(&fp, &f, "x", Some(label))?.0)
}

/// Mixed-radix product, first factor most significant.
pub fn make_product(factors: &[Ring]) -> Result<(Ring, Vec<RingMap>)> {
    if factors.is_empty() {
        return invalid("product of no factors");
    }
    let label = factors.iter().map(|f| wrap_label(f.label())).collect::<Vec<_>>().join(" x ");
    let n = check_cap(factors.iter().map(|f| f.size() as u128).product(), &label)?;
    let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
    let decode = |mut x: usize| {
        let mut v = vec![0; sizes.len()];
        for k in (0..sizes.len()).rev() {
            v[k] = x % sizes[k];
            x /= sizes[k];
        }
        v
    };
    let encode = |v: &[usize]| v.iter().zip(&sizes).fold(0, |acc, (&c, &s)| acc * s + c);
    let elems: Vec<Vec<usize>> = (0..n).map(decode).collect();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    let mut buf = vec![0; sizes.len()];
    for x in &elems {
        for y in &elems {
            for k in 0..sizes.len() {
                buf[k] = factors[k].add(x[k], y[k]);
            }
            add.push(encode(&buf) as u32);
            for k in 0..sizes.len() {
                buf[k] = factors[k].mul(x[k], y[k]);
            }
            mul.push(encode(&buf) as u32);
        }
    }
    let zero = encode(&factors.iter().map(|f| f.zero()).collect::<Vec<_>>());
    let one = encode(&factors.iter().map(|f| f.one()).collect::<Vec<_>>());
    let ring = TableRing::build(n, add, mul, zero, one, label, Vec::new(), Shape::Product(factors.to_vec()))?;
    let projections = (0..factors.len())
        .map(|k| RingMap::new(ring.clone(), factors[k].clone(), elems.iter().map(|v| v[k]).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok((ring, projections))
}

fn wrap_label(l: &str) -> String {
    if l.contains(" x ") {
        format!("({l})")
    } else {
        l.to_string()
    }
}

/// R(+)E for an ideal E of R.
pub fn make_idealization(r: &Ring, e: &Ideal) -> Result<(Ring, RingMap, RingMap)> {
    make_idealization_quotient(r, e, &Ideal::zero(r), None)
}

/// R(+)(J/I) for ideals I ⊆ J. The module element for a coset is its least
/// member.
pub fn make_idealization_quotient(
    r: &Ring,
    j: &Ideal,
    i: &Ideal,
    label: Option<String>,
) -> Result<(Ring, RingMap, RingMap)> {
    if !i.is_subset(j) {
        return invalid("idealization module J/I needs I ⊆ J");
    }
    let mut module_pos: Vec<Option<usize>> = vec![None; r.size()];
    let mut module = Vec::new();
    for x in j.iter() {
        if module_pos[x].is_some() {
            continue;
        }
        let k = module.len();
        module.push(x);
        for y in i.iter() {
            module_pos[r.add(x, y)] = Some(k);
        }
    }
    let label = label.unwrap_or_else(|| format!("{}(+){:?}/{:?}", r.label(), j.to_vec(), i.to_vec()));
    let m = module.len();
    let n = check_cap(r.size() as u128 * m as u128, &label)?;
    let pos = |x: usize| module_pos[x].expect("module element lies in J");
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a, e) = (x / m, module[x % m]);
        for y in 0..n {
            let (b, f) = (y / m, module[y % m]);
            add.push((r.add(a, b) * m + pos(r.add(e, f))) as u32);
            let prod = r.add(r.mul(a, f), r.mul(b, e));
            mul.push((r.mul(a, b) * m + pos(prod)) as u32);
        }
    }
    let z = pos(r.zero());
    let names = r.names().iter().map(|(s, x)| (s.clone(), x * m + z)).collect();
    let shape = Shape::Idealization { base: r.clone(), module: module.clone(), module_pos: module_pos.clone() };
    let ring = TableRing::build(n, add, mul, r.zero() * m + z, r.one() * m + z, label, names, shape)?;
    let incl = RingMap::new(r.clone(), ring.clone(), (0..r.size()).map(|a| a * m + z).collect())?;
    let retr = RingMap::new(ring.clone(), r.clone(), (0..n).map(|x| x / m).collect())?;
    Ok((ring, incl, retr))
}

/// Smallest subset containing 0, 1 and the seeds that is closed under the
/// ring operations.
pub fn subring_closure(s: &TableRing, seeds: &[usize]) -> FixedBitSet {
    let mut set = s.additive_span(std::iter::once(s.one()).chain(seeds.iter().copied()));
    loop {
        let members: Vec<usize> = set.ones().collect();
        let mut fresh = Vec::new();
        for (k, &a) in members.iter().enumerate() {
            for &b in &members[k..] {
                let p = s.mul(a, b);
                if !set.contains(p) {
                    fresh.push(p);
                }
            }
        }
        if fresh.is_empty() {
            return set;
        }
        set = s.additive_span(members.into_iter().chain(fresh));
    }
}

/// Restricts the tables to a closed subset whose multiplicative identity is
/// `one`. Returns the ring and its elements in ascending ambient order.
pub fn materialize_subset(s: &TableRing, set: &FixedBitSet, one: usize, label: String) -> Result<(Ring, Vec<usize>)> {
    let elems: Vec<usize> = set.ones().collect();
    let mut pos = vec![u32::MAX; s.size()];
    for (k, &x) in elems.iter().enumerate() {
        pos[x] = k as u32;
    }
    let n = elems.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &a in &elems {
        for &b in &elems {
            let (sa, ma) = (pos[s.add(a, b)], pos[s.mul(a, b)]);
            if sa == u32::MAX || ma == u32::MAX {
                return invalid("subset is not closed under the ring operations");
            }
            add.push(sa);
            mul.push(ma);
        }
    }
    let names = s
        .names()
        .iter()
        .filter(|(_, x)| set.contains(*x))
        .map(|(name, x)| (name.clone(), pos[*x] as usize))
        .collect();
    let ring = TableRing::build(n, add, mul, pos[s.zero()] as usize, pos[one] as usize, label, names, Shape::Plain)?;
    Ok((ring, elems))
}

/// R/I with cosets ordered by least member, plus the canonical surjection.
pub fn quotient_ring(r: &Ring, i: &Ideal) -> Result<(Ring, RingMap)> {
    quotient_ring_labeled(r, i, None)
}

pub(crate) fn quotient_ring_labeled(r: &Ring, i: &Ideal, label: Option<String>) -> Result<(Ring, RingMap)> {
    if i.ring() != r.id() {
        return invalid("ideal belongs to another ring");
    }
    if i.is_unit() {
        return invalid("quotient by the unit ideal");
    }
    let members: Vec<usize> = i.iter().collect();
    let mut class = vec![usize::MAX; r.size()];
    let mut reps = Vec::new();
    for x in 0..r.size() {
        if class[x] != usize::MAX {
            continue;
        }
        for &y in &members {
            class[r.add(x, y)] = reps.len();
        }
        reps.push(x);
    }
    let n = reps.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &a in &reps {
        for &b in &reps {
            add.push(class[r.add(a, b)] as u32);
            mul.push(class[r.mul(a, b)] as u32);
        }
    }
    let label = label.unwrap_or_else(|| format!("{}/{:?}", r.label(), i.to_vec()));
    let names = r.names().iter().map(|(s, x)| (s.clone(), class[*x])).collect();
    let q = TableRing::build(n, add, mul, class[r.zero()], class[r.one()], label, names, Shape::Plain)?;
    let map = RingMap::new(r.clone(), q.clone(), class)?;
    Ok((q, map))
}

/// Builds k[vars]/(relations) from relation strings such as `x^2` or
/// `x*y = 0`. Every variable needs a relation in that variable alone with a
/// unit leading coefficient, otherwise the quotient is not finite.
pub fn make_multivariate_quotient(base: &Ring, relations: &[&str]) -> Result<Ring> {
    super::expr::multivariate_quotient(base, relations, None)
}
