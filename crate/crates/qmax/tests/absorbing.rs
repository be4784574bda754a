use proptest::prelude::*;
use qmax::absorbing::{
    absorbing_characterization, badawi_structure, colon_behavior_check, is_primal, is_semi_primal, is_two_absorbing,
    lambda_morphism_check, lambda_set, square_of_maximal_check, AbsorbStructure,
};
use qmax::extension::Extension;
use qmax::ideal::Ideal;
use qmax::qmax::{classify_qmax, QMaxClass};
use qmax::ring::{parse_ideal, quotient_ring, Ring, RingMap, RingSpec};
use qmax::Error;

fn ring(spec: &str) -> Ring {
    RingSpec::parse(spec).unwrap().build().unwrap()
}

fn ideal(r: &Ring, gens: &str) -> Ideal {
    parse_ideal(r, gens).unwrap()
}

/// abc ∈ I forces ab, ac or bc into I, over all triples.
fn triple_oracle(r: &Ring, i: &Ideal) -> bool {
    let n = r.size();
    (0..n).all(|a| {
        (0..n).all(|b| {
            let ab = r.mul(a, b);
            (0..n).all(|c| !i.contains(r.mul(ab, c)) || i.contains(ab) || i.contains(r.mul(a, c)) || i.contains(r.mul(b, c)))
        })
    })
}

#[test]
fn two_absorbing_examples() {
    let z30 = ring("Z/30");
    let t = is_two_absorbing(&z30, &Ideal::zero(&z30)).unwrap();
    assert!(!t.two_absorbing);
    assert_eq!(t.violating_triple, Some([2, 3, 5]));
    let z8 = ring("Z/8");
    assert!(is_two_absorbing(&z8, &ideal(&z8, "4")).unwrap().two_absorbing);
    let z12 = ring("Z/12");
    assert!(is_two_absorbing(&z12, &ideal(&z12, "6")).unwrap().two_absorbing);
}

#[test]
fn structure_examples() {
    let z8 = ring("Z/8");
    assert_eq!(badawi_structure(&z8, &ideal(&z8, "4")).unwrap(), AbsorbStructure::A { p: ideal(&z8, "2") });
    let z12 = ring("Z/12");
    assert_eq!(badawi_structure(&z12, &ideal(&z12, "6")).unwrap(), AbsorbStructure::B { p1: ideal(&z12, "3"), p2: ideal(&z12, "2") });
    assert_eq!(badawi_structure(&z12, &ideal(&z12, "2")).unwrap(), AbsorbStructure::A { p: ideal(&z12, "2") });
    let z30 = ring("Z/30");
    assert!(matches!(badawi_structure(&z30, &Ideal::zero(&z30)), Err(Error::PreconditionViolation(_))));
}

#[test]
fn characterization_examples() {
    let cube = ring("poly(Z/2, x^3)");
    let c = absorbing_characterization(&cube, &Ideal::zero(&cube)).unwrap();
    assert!(!c.qmax && !c.two_absorbing && !c.rhs() && c.agree());
    let z8 = ring("Z/8");
    let c = absorbing_characterization(&z8, &ideal(&z8, "4")).unwrap();
    assert!(c.qmax && c.principal_over && c.agree());
    let z30 = ring("Z/30");
    let c = absorbing_characterization(&z30, &ideal(&z30, "6")).unwrap();
    assert!(c.qmax && c.rhs());
}

#[test]
fn square_of_maximal_examples() {
    let z8 = ring("Z/8");
    let s = square_of_maximal_check(&z8, &ideal(&z8, "2")).unwrap();
    assert!(s.square_qmax && s.principal && s.length_one);
    let t = ring("mvq(GF(2), x^2, x*y, y^2)");
    let s = square_of_maximal_check(&t, &ideal(&t, "x, y")).unwrap();
    assert!(!s.square_qmax && !s.principal && !s.length_one);
    let f = ring("GF(4)");
    assert!(matches!(square_of_maximal_check(&f, &Ideal::zero(&f)), Err(Error::PreconditionViolation(_))));
}

#[test]
fn lambda_examples() {
    let z30 = ring("Z/30");
    let lam = lambda_set(&z30, &ideal(&z30, "6")).unwrap();
    let want: Vec<usize> = (0..30).filter(|x| x % 2 != 0 && x % 3 != 0).collect();
    assert_eq!(lam.to_vec(), want);
    let z8 = ring("Z/8");
    assert_eq!(lambda_set(&z8, &ideal(&z8, "4")).unwrap().to_vec(), vec![1, 3, 5, 7]);
    let z9 = ring("Z/9");
    assert_eq!(lambda_set(&z9, &ideal(&z9, "3")).unwrap().to_vec(), vec![1, 2, 4, 5, 7, 8]);
    assert!(lambda_set(&z9, &Ideal::unit(&z9)).is_err());
}

#[test]
fn primal_examples() {
    let z8 = ring("Z/8");
    assert!(is_primal(&z8, &ideal(&z8, "4")).unwrap());
    let z30 = ring("Z/30");
    let six = ideal(&z30, "6");
    assert!(!is_primal(&z30, &six).unwrap());
    assert!(is_semi_primal(&z30, &six).unwrap());
    let cube = ring("poly(Z/2, x^3)");
    assert!(is_primal(&cube, &Ideal::zero(&cube)).unwrap());
}

#[test]
fn colon_examples() {
    let z8 = ring("Z/8");
    let four = ideal(&z8, "4");
    assert_eq!(z8.colon_by_element(&four, 2), ideal(&z8, "2"));
    assert!(colon_behavior_check(&z8, &four).unwrap());
    let z30 = ring("Z/30");
    let six = ideal(&z30, "6");
    assert_eq!(z30.colon_by_element(&six, 3), ideal(&z30, "2"));
    assert_eq!(z30.colon_by_element(&six, 7), six);
    assert!(colon_behavior_check(&z30, &six).unwrap());
    assert!(colon_behavior_check(&z8, &ideal(&z8, "2")).is_err());
}

#[test]
fn lambda_under_maps() {
    let z12 = ring("Z/12");
    let (z6, pi) = quotient_ring(&z12, &ideal(&z12, "6")).unwrap();
    let m = lambda_morphism_check(&pi, &ideal(&z6, "2")).unwrap();
    assert_eq!(m.equality, Some(true));
    assert!(m.agree());

    let f2 = ring("Z/2");
    let f4 = ring("GF(4)");
    let incl = Extension::subring_generated(&f4, &[]).unwrap().inclusion().clone();
    assert_eq!(incl.source().size(), f2.size());
    let m = lambda_morphism_check(&incl, &Ideal::zero(&f4)).unwrap();
    assert!(m.containment && m.equality.is_none());

}

fn maps_of(r: &Ring) -> Vec<RingMap> {
    let l = r.lattice().unwrap();
    l.proper().map(|k| quotient_ring(r, l.get(k)).unwrap().1).collect()
}

fn small_spec() -> impl Strategy<Value = String> {
    prop_oneof![
        (2u64..40).prop_map(|n| format!("Z/{n}")),
        (2u64..6, 2u64..6).prop_map(|(a, b)| format!("Z/{a} x Z/{b}")),
        prop::sample::select(vec![
            "poly(Z/2, x^3)",
            "poly(Z/3, x^2)",
            "poly(Z/4, x^2)",
            "poly(Z/2, x^4)",
            "mvq(GF(2), x^2, x*y, y^2)",
            "idealize(Z/8, 2)",
            "idealize(GF(4), 1)",
            "Z/2 x Z/2 x Z/2",
        ])
        .prop_map(str::to_string),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn two_absorbing_matches_all_triples(spec in small_spec()) {
        let r = ring(&spec);
        let l = r.lattice().unwrap();
        for k in l.proper() {
            let i = l.get(k);
            let t = is_two_absorbing(&r, i).unwrap();
            prop_assert_eq!(t.two_absorbing, triple_oracle(&r, i));
            if let Some([a, b, c]) = t.violating_triple {
                let ab = r.mul(a, b);
                prop_assert!(i.contains(r.mul(ab, c)));
                prop_assert!(!i.contains(ab) && !i.contains(r.mul(a, c)) && !i.contains(r.mul(b, c)));
            }
        }
    }

    #[test]
    fn qmax_ideals_are_two_absorbing_and_characterized(spec in small_spec()) {
        let r = ring(&spec);
        let l = r.lattice().unwrap();
        for k in l.proper() {
            let c = absorbing_characterization(&r, l.get(k)).unwrap();
            prop_assert!(c.agree());
            prop_assert!(!c.qmax || c.two_absorbing);
        }
    }

    #[test]
    fn lambda_closed_forms(spec in small_spec()) {
        let r = ring(&spec);
        let l = r.lattice().unwrap();
        for k in l.proper() {
            let i = l.get(k);
            let class = classify_qmax(&r, i).unwrap();
            let lam = lambda_set(&r, i).unwrap();
            prop_assert!(lam.invariants_hold(&r, i));
            let outside: Vec<usize> = match &class {
                QMaxClass::Decomposed { m1, m2 } => (0..r.size()).filter(|&x| !m1.contains(x) && !m2.contains(x)).collect(),
                QMaxClass::NotQuasiMaximal { .. } => continue,
                _ => {
                    let m = r.radical(i);
                    (0..r.size()).filter(|&x| !m.contains(x)).collect()
                }
            };
            prop_assert_eq!(lam.to_vec(), outside);
            prop_assert!(is_semi_primal(&r, i).unwrap());
            prop_assert_eq!(is_primal(&r, i).unwrap(), !matches!(class, QMaxClass::Decomposed { .. }));
        }
    }

    #[test]
    fn lambda_pulls_back_along_quotients(spec in small_spec()) {
        let r = ring(&spec);
        for pi in maps_of(&r) {
            let q = pi.target();
            let ql = q.lattice().unwrap();
            for k in ql.proper() {
                let m = lambda_morphism_check(&pi, ql.get(k)).unwrap();
                prop_assert!(m.containment && m.colon_preimage && m.equality == Some(true));
            }
        }
    }
}
