use proptest::prelude::*;
use qmax::ideal::{brute_force_ideals, Ideal};
use qmax::ring::{parse_ideal, Ring, RingSpec};

fn ring(spec: &str) -> Ring {
    RingSpec::parse(spec).unwrap().build().unwrap()
}

fn ideal(r: &Ring, gens: &str) -> Ideal {
    parse_ideal(r, gens).unwrap()
}

fn idx(r: &Ring, gens: &str) -> usize {
    r.lattice().unwrap().position(&ideal(r, gens)).unwrap()
}

/// Every subset that is an ideal, by direct test of all 2^n subsets.
fn subset_oracle(r: &Ring) -> Vec<Vec<usize>> {
    let n = r.size();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let has = |x: usize| mask >> x & 1 == 1;
        if !has(r.zero()) {
            continue;
        }
        let ok = (0..n).filter(|&a| has(a)).all(|a| (0..n).all(|b| (!has(b) || has(r.add(a, b))) && has(r.mul(a, b))));
        if ok {
            out.push((0..n).filter(|&x| has(x)).collect());
        }
    }
    out.sort();
    out
}

#[test]
fn principal_ideals() {
    let z12 = ring("Z/12");
    assert_eq!(z12.principal_ideal(4).to_vec(), vec![0, 4, 8]);
    assert_eq!(z12.principal_ideal(0).to_vec(), vec![0]);
    let d = ring("poly(Z/2, x^2)");
    let x = d.element_by_name("x").unwrap();
    assert_eq!(d.principal_ideal(x).to_vec(), vec![0, x]);
}

#[test]
fn lattice_of_z12_is_the_divisor_lattice() {
    let z12 = ring("Z/12");
    let l = z12.lattice().unwrap();
    let got: Vec<Vec<usize>> = l.ideals().iter().map(Ideal::to_vec).collect();
    let want: Vec<Vec<usize>> = [12, 6, 4, 3, 2, 1].iter().map(|&d| (0..12).step_by(d).collect()).collect();
    assert_eq!(got.len(), 6);
    for w in &want {
        assert!(got.contains(w), "missing {w:?}");
    }
}

#[test]
fn field_has_two_ideals() {
    assert_eq!(ring("GF(4)").lattice().unwrap().len(), 2);
}

#[test]
fn example_ring_lattice() {
    let t = ring("mvq(GF(2), x^2, x*y, y^2)");
    let l = t.lattice().unwrap();
    for gens in ["0", "x", "y", "x + y", "x, y", "1"] {
        assert!(l.index_of(&ideal(&t, gens)).is_some(), "{gens}");
    }
    assert_eq!(l.maximal_ideals(), &[idx(&t, "x, y")]);
}

#[test]
fn ideal_arithmetic() {
    let z12 = ring("Z/12");
    let (i, j) = (ideal(&z12, "4"), ideal(&z12, "6"));
    assert_eq!(z12.ideal_sum(&i, &j), ideal(&z12, "2"));
    assert_eq!(z12.ideal_product(&i, &j), Ideal::zero(&z12));
    assert_eq!(i.intersection(&j), Ideal::zero(&z12));
    assert_eq!(z12.ideal_intersection(&ideal(&z12, "2"), &ideal(&z12, "3")), j);
}

#[test]
fn colons() {
    let z8 = ring("Z/8");
    assert_eq!(z8.colon_by_element(&ideal(&z8, "4"), 2), ideal(&z8, "2"));
    let z4 = ring("Z/4");
    assert_eq!(z4.colon(&Ideal::zero(&z4), &ideal(&z4, "2")), ideal(&z4, "2"));
}

#[test]
fn radicals() {
    let z8 = ring("Z/8");
    assert_eq!(z8.radical(&ideal(&z8, "4")), ideal(&z8, "2"));
    let z12 = ring("Z/12");
    assert_eq!(z12.radical(&ideal(&z12, "4")), ideal(&z12, "2"));
}

#[test]
fn prime_maximal_primary() {
    let z12 = ring("Z/12");
    let two = ideal(&z12, "2");
    assert!(z12.is_prime(&two).unwrap());
    assert!(z12.lattice().unwrap().is_maximal(idx(&z12, "2")));
    let z8 = ring("Z/8");
    let four = ideal(&z8, "4");
    assert!(z8.is_primary(&four).unwrap());
    assert!(!z8.is_prime(&four).unwrap());
    assert!(!z12.is_primary(&ideal(&z12, "6")).unwrap());
}

#[test]
fn covering() {
    let z8 = ring("Z/8");
    let l = z8.lattice().unwrap();
    assert!(l.covers(idx(&z8, "4"), idx(&z8, "2")));
    assert!(!l.covers(idx(&z8, "0"), idx(&z8, "2")));
    assert!(!l.covers(idx(&z8, "2"), idx(&z8, "2")));
}

#[test]
fn lengths() {
    let z8 = ring("Z/8");
    assert_eq!(z8.lattice().unwrap().length_of_quotient(idx(&z8, "4")).unwrap(), 2);
    let f = ring("GF(3)");
    assert_eq!(f.lattice().unwrap().length_of_quotient(idx(&f, "0")).unwrap(), 1);
    let z12 = ring("Z/12");
    assert_eq!(z12.lattice().unwrap().length_of_quotient(idx(&z12, "6")).unwrap(), 2);
}

#[test]
fn counting_ideals_above() {
    let z8 = ring("Z/8");
    assert_eq!(z8.lattice().unwrap().count_o(idx(&z8, "4")).unwrap(), 2);
    let z12 = ring("Z/12");
    let l = z12.lattice().unwrap();
    assert_eq!(l.count_o(idx(&z12, "6")).unwrap(), 3);
    assert_eq!(l.count_o(idx(&z12, "3")).unwrap(), 1);
    assert!(l.count_o(l.unit()).is_err());
}

#[test]
fn local_factors() {
    let z12 = ring("Z/12");
    let lf = z12.local_factors();
    let mut sizes: Vec<usize> = lf.factors.iter().map(|(f, _)| f.size()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![3, 4]);
    let mut idem = lf.idempotents.clone();
    idem.sort();
    assert_eq!(idem, vec![4, 9]);

    let local = ring("Z/9");
    let lf = local.local_factors();
    assert_eq!(lf.len(), 1);
    assert!(lf.factors[0].1.is_injective());

    let cube = ring("Z/2 x Z/2 x Z/2");
    let lf = cube.local_factors();
    assert_eq!(lf.len(), 3);
    assert!(lf.factors.iter().all(|(f, _)| f.size() == 2));
}

#[test]
fn chains_have_equal_length() {
    let r = ring("Z/4 x poly(Z/2, x^2)");
    let l = r.lattice().unwrap();
    // chain_length walks the first and last cover and errors if they differ.
    for k in l.proper() {
        assert!(l.length_of_quotient(k).unwrap() >= 1);
    }
    assert_eq!(l.length_of_quotient(l.zero()).unwrap(), 4);
}

fn small_spec() -> impl Strategy<Value = String> {
    prop_oneof![
        (2u64..17).prop_map(|n| format!("Z/{n}")),
        (2u64..5, 2u64..5).prop_map(|(a, b)| format!("Z/{a} x Z/{b}")),
        prop::sample::select(vec![
            "poly(Z/2, x^2)",
            "poly(Z/2, x^3)",
            "poly(Z/2, x^3 + 1)",
            "poly(Z/3, x^2)",
            "poly(Z/2, x^2 + x + 1)",
            "mvq(GF(2), x^2, x*y, y^2)",
            "idealize(Z/4, 2)",
            "idealize(Z/2, 1)",
            "idealize(Z/3, 1)",
            "Z/2 x Z/2 x Z/2",
            "quot(poly(Z/2, x^3), x^2 + x)",
        ])
        .prop_map(str::to_string),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_matches_subset_enumeration(spec in small_spec()) {
        let r = ring(&spec);
        let l = r.lattice().unwrap();
        let mut got: Vec<Vec<usize>> = l.ideals().iter().map(Ideal::to_vec).collect();
        got.sort();
        prop_assert_eq!(&got, &subset_oracle(&r));
        prop_assert_eq!(brute_force_ideals(&r), l.ideals().to_vec());
    }

    #[test]
    fn covers_have_nothing_between(spec in small_spec()) {
        let r = ring(&spec);
        let l = r.lattice().unwrap();
        for a in 0..l.len() {
            for b in 0..l.len() {
                let strict = l.get(a).is_proper_subset(l.get(b));
                let between = l.ideals().iter().any(|c| l.get(a).is_proper_subset(c) && c.is_proper_subset(l.get(b)));
                prop_assert_eq!(l.covers(a, b), strict && !between);
            }
        }
    }

    #[test]
    fn radical_is_intersection_of_primes_over(spec in small_spec()) {
        let r = ring(&spec);
        let l = r.lattice().unwrap();
        for k in l.proper() {
            let by_primes = l.primes_over(k).iter().fold(Ideal::unit(&r), |acc, &p| acc.intersection(l.get(p)));
            prop_assert_eq!(r.radical(l.get(k)), by_primes);
        }
    }

    #[test]
    fn jacobson_and_nilradical(spec in small_spec()) {
        let r = ring(&spec);
        let l = r.lattice().unwrap();
        let nil: Vec<usize> = r.nilpotents();
        prop_assert_eq!(l.nilradical().to_vec(), nil);
        let jac = l.maximal_ideals().iter().fold(Ideal::unit(&r), |acc, &m| acc.intersection(l.get(m)));
        prop_assert_eq!(l.jacobson(), &jac);
        // Finite rings are Artinian: every prime is maximal.
        prop_assert_eq!(l.prime_ideals(), l.maximal_ideals());
    }

    #[test]
    fn local_factors_are_local_and_cover_the_ring(spec in small_spec()) {
        let r = ring(&spec);
        let lf = r.local_factors();
        prop_assert_eq!(lf.factors.iter().map(|(f, _)| f.size()).product::<usize>(), r.size());
        for (f, p) in &lf.factors {
            prop_assert_eq!(f.lattice().unwrap().maximal_ideals().len(), 1);
            prop_assert!(p.is_surjective());
        }
        let sum = lf.idempotents.iter().fold(r.zero(), |acc, &e| r.add(acc, e));
        prop_assert_eq!(sum, r.one());
    }
}
