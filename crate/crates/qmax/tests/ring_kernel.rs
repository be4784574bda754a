use proptest::prelude::*;
use qmax::ideal::Ideal;
use qmax::ring::{
    is_isomorphic, make_gf, make_idealization, make_multivariate_quotient, make_poly_quotient, make_product, make_zmod,
    parse_ideal, quotient_ring, ExtSpec, Ring, RingSpec,
};
use qmax::Error;

fn ring(spec: &str) -> Ring {
    RingSpec::parse(spec).unwrap().build().unwrap()
}

#[test]
fn zmod_arithmetic() {
    let z6 = make_zmod(6).unwrap();
    assert_eq!(z6.size(), 6);
    assert_eq!(z6.mul(2, 3), 0);
    let z2 = make_zmod(2).unwrap();
    assert_eq!(z2.units(), vec![1]);
    let z30 = make_zmod(30).unwrap();
    let l = z30.lattice().unwrap();
    let zero = l.index_of(&Ideal::zero(&z30)).unwrap();
    assert_eq!(l.maximal_over(zero).len(), 3);
}

#[test]
fn zmod_rejects_trivial_moduli() {
    assert!(matches!(make_zmod(1), Err(Error::InvalidParameter(_))));
    assert!(matches!(make_zmod(0), Err(Error::InvalidParameter(_))));
}

#[test]
fn poly_quotients() {
    let f2 = make_zmod(2).unwrap();
    let (gf4, incl) = make_poly_quotient(&f2, &[1, 1, 1]).unwrap();
    assert!(gf4.is_field());
    assert_eq!(gf4.size(), 4);
    assert!(incl.is_injective());

    let (dual, _) = make_poly_quotient(&f2, &[0, 0, 1]).unwrap();
    let x = dual.element_by_name("x").unwrap();
    assert_eq!(dual.mul(x, x), dual.zero());
    assert_ne!(x, dual.zero());

    let z4 = make_zmod(4).unwrap();
    let (s, incl) = make_poly_quotient(&z4, &[0, 0, 1]).unwrap();
    assert_eq!(s.size(), 16);
    incl.certify().unwrap();
}

#[test]
fn poly_quotient_needs_monic_modulus() {
    let z4 = make_zmod(4).unwrap();
    assert!(make_poly_quotient(&z4, &[0, 2]).is_err());
    assert!(make_poly_quotient(&z4, &[1]).is_err());
}

#[test]
fn multivariate_quotients() {
    let f2 = make_zmod(2).unwrap();
    let t = make_multivariate_quotient(&f2, &["x^2", "x*y", "y^2"]).unwrap();
    assert_eq!(t.size(), 8);
    let l = t.lattice().unwrap();
    assert_eq!(l.maximal_ideals().len(), 1);
    let p = parse_ideal(&t, "x, y").unwrap();
    assert_eq!(l.get(l.maximal_ideals()[0]), &p);

    let one_var = make_multivariate_quotient(&f2, &["x^2"]).unwrap();
    assert!(is_isomorphic(&one_var, &make_poly_quotient(&f2, &[0, 0, 1]).unwrap().0));

    let f3 = make_zmod(3).unwrap();
    let t3 = make_multivariate_quotient(&f3, &["x^2", "x*y", "y^2"]).unwrap();
    assert_eq!(t3.size(), 27);
    let l3 = t3.lattice().unwrap();
    assert_eq!(l3.get(l3.maximal_ideals()[0]).len(), 9);
}

#[test]
fn multivariate_quotient_must_be_finite() {
    let f2 = make_zmod(2).unwrap();
    assert!(make_multivariate_quotient(&f2, &["x*y"]).is_err());
}

#[test]
fn products() {
    let f2 = make_zmod(2).unwrap();
    let (p, proj) = make_product(&[f2.clone(), f2.clone()]).unwrap();
    assert_eq!(p.size(), 4);
    assert_eq!(proj.len(), 2);
    let l = p.lattice().unwrap();
    let ms: Vec<&Ideal> = l.maximal_ideals().iter().map(|&k| l.get(k)).collect();
    assert_eq!(ms.len(), 2);
    assert_eq!(ms[0].intersection(ms[1]), Ideal::zero(&p));

    let (z36ish, _) = make_product(&[make_zmod(4).unwrap(), make_zmod(9).unwrap()]).unwrap();
    assert!(is_isomorphic(&z36ish, &make_zmod(36).unwrap()));

    let z5 = make_zmod(5).unwrap();
    let (single, proj) = make_product(std::slice::from_ref(&z5)).unwrap();
    assert!(is_isomorphic(&single, &z5));
    assert!(proj[0].is_injective() && proj[0].is_surjective());
}

#[test]
fn idealizations() {
    let f2 = make_zmod(2).unwrap();
    let (d, _, _) = make_idealization(&f2, &Ideal::unit(&f2)).unwrap();
    assert!(is_isomorphic(&d, &ring("poly(Z/2, x^2)")));

    let z4 = make_zmod(4).unwrap();
    let two = parse_ideal(&z4, "2").unwrap();
    let (s, incl, retr) = make_idealization(&z4, &two).unwrap();
    assert_eq!(s.size(), 8);
    assert!(incl.is_injective() && retr.is_surjective());
    // (0, 2) is the nonzero element killed by the retraction.
    let e = (0..s.size()).find(|&x| x != s.zero() && retr.apply(x) == z4.zero()).unwrap();
    assert_eq!(s.mul(e, e), s.zero());
}

#[test]
fn quotients() {
    let z12 = make_zmod(12).unwrap();
    let (q, pi) = quotient_ring(&z12, &parse_ideal(&z12, "6").unwrap()).unwrap();
    assert!(is_isomorphic(&q, &make_zmod(6).unwrap()));
    assert!(pi.is_surjective());
    let (same, _) = quotient_ring(&z12, &Ideal::zero(&z12)).unwrap();
    assert!(is_isomorphic(&same, &z12));
    let z8 = make_zmod(8).unwrap();
    let (q8, _) = quotient_ring(&z8, &parse_ideal(&z8, "4").unwrap()).unwrap();
    assert_eq!(q8.size(), 4);
    assert_eq!(qmax::qmax::is_spir(&q8).unwrap().map(|(_, k)| k), Some(2));
}

#[test]
fn quotient_by_unit_ideal_is_rejected() {
    let z6 = make_zmod(6).unwrap();
    assert!(quotient_ring(&z6, &Ideal::unit(&z6)).is_err());
}

#[test]
fn characteristics() {
    assert_eq!(make_zmod(8).unwrap().characteristic(), 8);
    assert_eq!(make_gf(2, 2).unwrap().characteristic(), 2);
    let z8 = make_zmod(8).unwrap();
    let (q, _) = quotient_ring(&z8, &parse_ideal(&z8, "4").unwrap()).unwrap();
    assert_eq!(q.characteristic(), 4);
}

#[test]
fn subrings_from_specs() {
    let prime = ExtSpec::parse("ext([], GF(4))").unwrap().build().unwrap();
    assert_eq!(prime.sub().size(), 2);
    let diag = ExtSpec::parse("ext([], Z/2 x Z/2)").unwrap().build().unwrap();
    assert_eq!(diag.image().ones().collect::<Vec<_>>(), vec![0, 3]);
    let s = ring("poly(Z/2, x^3)");
    let x = s.element_by_name("x").unwrap();
    let ext = qmax::extension::Extension::subring_generated(&s, &[s.mul(x, x)]).unwrap();
    assert_eq!(ext.sub().size(), 4);
}

#[test]
fn spec_grammar_examples() {
    for (spec, size) in [
        ("Z/12", 12),
        ("GF(2^3)", 8),
        ("GF(9)", 9),
        ("Z/2 x Z/3 x Z/2", 12),
        ("poly(Z/3, [1, 0, 1])", 9),
        ("poly(Z/2, x^2 + x + 1)", 4),
        ("mvq(GF(2), x^2, x*y, y^2)", 8),
        ("idealize(Z/4, 2)", 8),
        ("sub(Z/2 x Z/2, (1, 1))", 2),
        ("quot(Z/12, 4)", 4),
        ("quot(poly(Z/2, x^3), x^2)", 4),
    ] {
        assert_eq!(ring(spec).size(), size, "{spec}");
    }
}

#[test]
fn spec_errors_carry_positions() {
    match RingSpec::parse("poly(Z/2, x^2") {
        Err(Error::Parse { .. }) => {}
        other => panic!("expected a parse error, got {other:?}"),
    }
    assert!(RingSpec::parse("Z/1").unwrap().build().is_err());
    assert!(RingSpec::parse("quot(Z/6, 1)").unwrap().build().is_err());
}

#[test]
fn size_cap_is_a_resource_error() {
    assert!(matches!(make_zmod(1 << 20), Err(Error::ResourceLimit(_))));
}

fn small_spec() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (2u64..13).prop_map(|n| format!("Z/{n}")),
        prop::sample::select(vec!["GF(4)", "GF(2^3)", "GF(3)", "poly(Z/2, x^2)", "poly(Z/3, x^2 + 1)", "idealize(Z/4, 2)"])
            .prop_map(str::to_string),
    ];
    prop::collection::vec(leaf, 1..=2).prop_map(|v| v.join(" x "))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructed_rings_satisfy_axioms(spec in small_spec()) {
        let r = ring(&spec);
        r.check_axioms().unwrap();
        prop_assert!(r.size() >= 2);
    }

    #[test]
    fn spec_display_round_trips(spec in small_spec()) {
        let parsed = RingSpec::parse(&spec).unwrap();
        let again = RingSpec::parse(&parsed.to_string()).unwrap();
        prop_assert_eq!(&parsed, &again);
        prop_assert_eq!(parsed.build().unwrap().size(), again.build().unwrap().size());
    }

    #[test]
    fn product_sizes_multiply(a in 2usize..10, b in 2usize..10) {
        let (p, proj) = make_product(&[make_zmod(a).unwrap(), make_zmod(b).unwrap()]).unwrap();
        prop_assert_eq!(p.size(), a * b);
        for f in &proj {
            prop_assert!(f.is_surjective());
        }
    }

    #[test]
    fn crt_products_match_zmod(a in 2usize..12, b in 2usize..12) {
        let coprime = (2..=a.min(b)).all(|d| a % d != 0 || b % d != 0);
        let (p, _) = make_product(&[make_zmod(a).unwrap(), make_zmod(b).unwrap()]).unwrap();
        prop_assert_eq!(is_isomorphic(&p, &make_zmod(a * b).unwrap()), coprime);
    }
}
