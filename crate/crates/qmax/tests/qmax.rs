use proptest::prelude::*;
use qmax::ideal::Ideal;
use qmax::qmax::{
    classify_qmax, find_qmax_below, find_ramified_below, is_kasch, is_qmax_definition, is_spir, is_submaximal,
    k_intersection_and_sandwich, product_qmax_check, qmax_all, qmax_equivalence_report, ramified_vs_spir_index_two,
    QMaxClass, QMaxTag,
};
use qmax::ring::{parse_ideal, Ring, RingSpec};

fn ring(spec: &str) -> Ring {
    RingSpec::parse(spec).unwrap().build().unwrap()
}

fn ideal(r: &Ring, gens: &str) -> Ideal {
    parse_ideal(r, gens).unwrap()
}

fn tag(spec: &str, gens: &str) -> QMaxTag {
    let r = ring(spec);
    classify_qmax(&r, &ideal(&r, gens)).unwrap().tag()
}

/// I + Ra is R or maximal for every a ∉ I, straight from the tables.
fn definition_oracle(r: &Ring, i: &Ideal) -> bool {
    let l = r.lattice().unwrap();
    (0..r.size()).filter(|&a| !i.contains(a)).all(|a| {
        let j = r.ideal_sum(i, &r.principal_ideal(a));
        j.is_unit() || l.is_maximal(l.position(&j).unwrap())
    })
}

#[test]
fn definition_examples() {
    let z8 = ring("Z/8");
    assert!(is_qmax_definition(&z8, &ideal(&z8, "4")).unwrap());
    let z30 = ring("Z/30");
    assert!(!is_qmax_definition(&z30, &Ideal::zero(&z30)).unwrap());
    assert!(is_qmax_definition(&z8, &ideal(&z8, "2")).unwrap());
}

#[test]
fn classification_examples() {
    let z12 = ring("Z/12");
    match classify_qmax(&z12, &ideal(&z12, "6")).unwrap() {
        QMaxClass::Decomposed { m1, m2 } => {
            let mut ms = [m1, m2];
            ms.sort();
            assert_eq!(ms, [ideal(&z12, "3"), ideal(&z12, "2")]);
        }
        other => panic!("{other:?}"),
    }
    let z8 = ring("Z/8");
    assert_eq!(classify_qmax(&z8, &ideal(&z8, "4")).unwrap(), QMaxClass::Ramified { m: ideal(&z8, "2") });
    assert_eq!(tag("mvq(GF(2), x^2, x*y, y^2)", "0"), QMaxTag::NotQuasiMaximal);
    assert_eq!(tag("GF(4)", "0"), QMaxTag::Inert);
    assert_eq!(tag("Z/30", "0"), QMaxTag::NotQuasiMaximal);
}

#[test]
fn unit_ideal_is_rejected() {
    let z8 = ring("Z/8");
    assert!(classify_qmax(&z8, &Ideal::unit(&z8)).is_err());
}

#[test]
fn submaximal_examples() {
    let z8 = ring("Z/8");
    assert!(is_submaximal(&z8, &ideal(&z8, "4")).unwrap());
    assert!(!is_submaximal(&z8, &ideal(&z8, "2")).unwrap());
    assert!(!is_submaximal(&z8, &ideal(&z8, "0")).unwrap());
}

#[test]
fn equivalence_report_examples() {
    let z12 = ring("Z/12");
    let rep = qmax_equivalence_report(&z12, &ideal(&z12, "6")).unwrap();
    assert_eq!(rep.conditions, [true; 7]);
    assert_eq!((rep.o, rep.maximal_over), (3, 2));
    let z8 = ring("Z/8");
    let rep = qmax_equivalence_report(&z8, &Ideal::zero(&z8)).unwrap();
    assert_eq!(rep.conditions, [false; 7]);
    assert_eq!((rep.o, rep.maximal_over), (3, 1));
    let f = ring("GF(5)");
    let rep = qmax_equivalence_report(&f, &Ideal::zero(&f)).unwrap();
    assert_eq!(rep.conditions, [true; 7]);
    assert_eq!(rep.quotient_ideal_count, 2);
}

#[test]
fn spir_examples() {
    assert_eq!(is_spir(&ring("Z/8")).unwrap(), Some((2, 3)));
    let d = ring("poly(Z/2, x^2)");
    assert_eq!(is_spir(&d).unwrap(), Some((d.element_by_name("x").unwrap(), 2)));
    assert_eq!(is_spir(&ring("Z/12")).unwrap(), None);
    assert_eq!(is_spir(&ring("GF(4)")).unwrap(), None);
}

#[test]
fn ramified_against_spir_examples() {
    let z8 = ring("Z/8");
    assert_eq!(ramified_vs_spir_index_two(&z8, &ideal(&z8, "4")).unwrap(), (true, true));
    let z12 = ring("Z/12");
    assert_eq!(ramified_vs_spir_index_two(&z12, &ideal(&z12, "6")).unwrap(), (false, false));
    let z16 = ring("Z/16");
    assert_eq!(ramified_vs_spir_index_two(&z16, &ideal(&z16, "4")).unwrap(), (true, true));
    assert_eq!(ramified_vs_spir_index_two(&z16, &ideal(&z16, "8")).unwrap(), (false, false));
}

#[test]
fn kasch_examples() {
    assert!(is_kasch(&ring("Z/6")).unwrap());
    let cube = ring("poly(Z/2, x^3)");
    assert!(is_kasch(&cube).unwrap());
    assert!(!classify_qmax(&cube, &Ideal::zero(&cube)).unwrap().tag().is_qmax());
}

#[test]
fn qmax_sets() {
    let names = |spec: &str| -> Vec<Vec<usize>> {
        let r = ring(spec);
        qmax_all(&r).unwrap().into_iter().filter(|(_, c)| c.tag().is_qmax()).map(|(i, _)| i.to_vec()).collect()
    };
    let multiples = |n: usize, ds: &[usize]| -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = ds.iter().map(|&d| (0..n).step_by(d).collect()).collect();
        v.sort_by_key(|x| (x.len(), x.clone()));
        v
    };
    assert_eq!(names("Z/12"), multiples(12, &[2, 3, 4, 6]));
    assert_eq!(names("GF(7)"), vec![vec![0]]);
    assert_eq!(names("Z/30"), multiples(30, &[2, 3, 5, 6, 10, 15]));
}

#[test]
fn k_sandwich_examples() {
    let z12 = ring("Z/12");
    let (k, ok) = k_intersection_and_sandwich(&z12).unwrap();
    assert_eq!(k, Ideal::zero(&z12));
    assert!(ok);
    let f = ring("GF(8)");
    let (k, ok) = k_intersection_and_sandwich(&f).unwrap();
    assert_eq!(k, Ideal::zero(&f));
    assert!(ok);
}

#[test]
fn searches_below_maximal_ideals() {
    let z8 = ring("Z/8");
    assert_eq!(find_qmax_below(&z8, &ideal(&z8, "2")).unwrap(), Some(ideal(&z8, "4")));
    let p = ring("Z/2 x Z/2");
    let m = ideal(&p, "(0, 1)");
    assert_eq!(find_qmax_below(&p, &m).unwrap(), Some(Ideal::zero(&p)));
    assert_eq!(find_ramified_below(&p, &m).unwrap(), None);
    let f = ring("GF(4)");
    assert_eq!(find_qmax_below(&f, &Ideal::zero(&f)).unwrap(), None);
    assert!(find_qmax_below(&z8, &ideal(&z8, "4")).is_err());
}

#[test]
fn product_examples() {
    assert!(product_qmax_check(&[ring("Z/2"), ring("Z/2")]).unwrap());
    assert!(product_qmax_check(&[ring("Z/4"), ring("Z/3")]).unwrap());
    let p = ring("Z/4 x Z/3");
    for gens in ["(2, 1)", "(0, 1)", "(1, 0)", "(2, 0)"] {
        assert!(classify_qmax(&p, &ideal(&p, gens)).unwrap().tag().is_qmax(), "{gens}");
    }
    assert!(product_qmax_check(&[ring("Z/4")]).is_err());
}

fn small_spec() -> impl Strategy<Value = String> {
    prop_oneof![
        (2u64..64).prop_map(|n| format!("Z/{n}")),
        (2u64..8, 2u64..8).prop_map(|(a, b)| format!("Z/{a} x Z/{b}")),
        prop::sample::select(vec![
            "poly(Z/2, x^3)",
            "poly(Z/3, x^2)",
            "poly(Z/2, x^3 + x + 1)",
            "poly(Z/4, x^2)",
            "mvq(GF(2), x^2, x*y, y^2)",
            "mvq(GF(3), x^2, x*y, y^2)",
            "idealize(Z/8, 2)",
            "idealize(GF(4), 1)",
            "GF(4) x Z/4",
            "Z/2 x Z/2 x Z/3",
        ])
        .prop_map(str::to_string),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn classification_matches_definition(spec in small_spec()) {
        let r = ring(&spec);
        let l = r.lattice().unwrap();
        for k in l.proper() {
            let i = l.get(k);
            let class = classify_qmax(&r, i).unwrap();
            prop_assert_eq!(class.tag().is_qmax(), definition_oracle(&r, i));
            prop_assert!(class.verify(&r, i).unwrap());
        }
    }

    #[test]
    fn seven_conditions_agree(spec in small_spec()) {
        let r = ring(&spec);
        let l = r.lattice().unwrap();
        for k in l.proper() {
            let rep = qmax_equivalence_report(&r, l.get(k)).unwrap();
            prop_assert!(rep.agree(), "{:?}", rep);
        }
    }

    #[test]
    fn types_are_determined_by_the_maximal_ideals_above(spec in small_spec()) {
        let r = ring(&spec);
        let l = r.lattice().unwrap();
        for k in l.proper() {
            let above = l.maximal_over(k).len();
            let expected = match classify_qmax(&r, l.get(k)).unwrap().tag() {
                QMaxTag::Inert => l.is_maximal(k),
                QMaxTag::Decomposed => above == 2,
                QMaxTag::Ramified => above == 1 && !l.is_maximal(k),
                QMaxTag::NotQuasiMaximal => true,
            };
            prop_assert!(expected);
        }
    }

    #[test]
    fn ramified_iff_spir_of_index_two(spec in small_spec()) {
        let r = ring(&spec);
        let l = r.lattice().unwrap();
        for k in l.proper() {
            let (a, b) = ramified_vs_spir_index_two(&r, l.get(k)).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn k_sandwich_holds(spec in small_spec()) {
        prop_assert!(k_intersection_and_sandwich(&ring(&spec)).unwrap().1);
    }
}
