//! Backtracking search for injective homomorphisms, driven by images of a
//! small generating set.

use super::{subring_closure, Ring, RingMap, TableRing};

const NONE: u32 = u32::MAX;

/// Per-element invariants preserved by injective homomorphisms; the extra
/// annihilator and principal-ideal sizes are only preserved by isomorphisms.
fn signature(r: &TableRing, x: usize, bijective: bool) -> (usize, usize, bool, usize, usize, usize) {
    let order = r.additive_order(x);
    let mut nil = 0;
    let mut p = x;
    for k in 1..=r.size() {
        if p == r.zero() {
            nil = k;
            break;
        }
        p = r.mul(p, x);
    }
    let idem = r.mul(x, x) == x;
    let mut unit_order = 0;
    if r.is_unit(x) {
        let mut p = x;
        unit_order = 1;
        while p != r.one() {
            p = r.mul(p, x);
            unit_order += 1;
        }
    }
    let (ann, principal) = if bijective {
        let ann = (0..r.size()).filter(|&y| r.mul(x, y) == r.zero()).count();
        (ann, r.principal_ideal(x).len())
    } else {
        (0, 0)
    };
    (order, nil, idem, unit_order, ann, principal)
}

struct Search<'a> {
    a: &'a TableRing,
    b: &'a TableRing,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

#[derive(Clone)]
struct State {
    fwd: Vec<u32>,
    used: Vec<bool>,
    dom: Vec<usize>,
}

impl Search<'_> {
    /// Maps x ↦ y and closes under + and ·; fails on any conflict.
    fn assign(&self, st: &mut State, x: usize, y: usize) -> bool {
        if st.fwd[x] != NONE {
            return st.fwd[x] as usize == y;
        }
        if st.used[y] {
            return false;
        }
        st.fwd[x] = y as u32;
        st.used[y] = true;
        let mut queue = vec![x];
        while let Some(u) = queue.pop() {
            st.dom.push(u);
            let fu = st.fwd[u] as usize;
            let mut k = 0;
            while k < st.dom.len() {
                let v = st.dom[k];
                let fv = st.fwd[v] as usize;
                for (s, fs) in [(self.a.add(u, v), self.b.add(fu, fv)), (self.a.mul(u, v), self.b.mul(fu, fv))] {
                    if st.fwd[s] == NONE {
                        if st.used[fs] {
                            return false;
                        }
                        st.fwd[s] = fs as u32;
                        st.used[fs] = true;
                        queue.push(s);
                    } else if st.fwd[s] as usize != fs {
                        return false;
                    }
                }
                k += 1;
            }
        }
        true
    }

    fn dfs(&self, st: State, level: usize) -> Option<State> {
        if level == self.gens.len() {
            return Some(st);
        }
        let g = self.gens[level];
        if st.fwd[g] != NONE {
            return self.dfs(st, level + 1);
        }
        for &h in &self.candidates[level] {
            let mut next = st.clone();
            if self.assign(&mut next, g, h) {
                if let Some(done) = self.dfs(next, level + 1) {
                    return Some(done);
                }
            }
        }
        None
    }
}

fn search(a: &Ring, b: &Ring, fixed: &[(usize, usize)], bijective: bool) -> Option<RingMap> {
    if bijective && a.size() != b.size() || a.size() > b.size() {
        return None;
    }
    if a.characteristic() != b.characteristic() {
        return None;
    }
    let mut gens = Vec::new();
    let seeds: Vec<usize> = fixed.iter().map(|&(x, _)| x).collect();
    let mut closed = subring_closure(a, &seeds);
    while closed.count_ones(..) < a.size() {
        let g = (0..a.size()).find(|&x| !closed.contains(x)).unwrap();
        gens.push(g);
        let all: Vec<usize> = seeds.iter().chain(gens.iter()).copied().collect();
        closed = subring_closure(a, &all);
    }
    let b_sigs: Vec<_> = (0..b.size()).map(|y| signature(b, y, bijective)).collect();
    let candidates = gens
        .iter()
        .map(|&g| {
            let sg = signature(a, g, bijective);
            (0..b.size()).filter(|&y| b_sigs[y] == sg).collect()
        })
        .collect();
    let s = Search { a, b, gens, candidates };
    let mut st = State { fwd: vec![NONE; a.size()], used: vec![false; b.size()], dom: Vec::new() };
    if !s.assign(&mut st, a.zero(), b.zero()) || !s.assign(&mut st, a.one(), b.one()) {
        return None;
    }
    for &(x, y) in fixed {
        if !s.assign(&mut st, x, y) {
            return None;
        }
    }
    let done = s.dfs(st, 0)?;
    let image = done.fwd.iter().map(|&y| y as usize).collect();
    RingMap::new(a.clone(), b.clone(), image).ok()
}

pub fn find_isomorphism(a: &Ring, b: &Ring) -> Option<RingMap> {
    search(a, b, &[], true)
}

/// Isomorphism search constrained to extend the given element pairs.
pub fn find_isomorphism_fixing(a: &Ring, b: &Ring, fixed: &[(usize, usize)]) -> Option<RingMap> {
    search(a, b, fixed, true)
}

pub fn find_embedding(a: &Ring, b: &Ring) -> Option<RingMap> {
    search(a, b, &[], false)
}

pub fn is_isomorphic(a: &Ring, b: &Ring) -> bool {
    find_isomorphism(a, b).is_some()
}
