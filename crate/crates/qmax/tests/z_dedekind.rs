use proptest::prelude::*;
use qmax::absorbing::is_two_absorbing;
use qmax::ideal::Ideal;
use qmax::qmax::{classify_qmax, QMaxTag};
use qmax::ring::make_zmod;
use qmax::zdedekind::{classify_z_ideal, factorize, prime_square_witness, z_crosscheck, z_violating_triple};

#[test]
fn classification_examples() {
    assert_eq!(classify_z_ideal(7).unwrap().tag, QMaxTag::Inert);
    assert_eq!(classify_z_ideal(49).unwrap().tag, QMaxTag::Ramified);
    assert_eq!(classify_z_ideal(21).unwrap().tag, QMaxTag::Decomposed);
    let z30 = classify_z_ideal(30).unwrap();
    assert_eq!(z30.tag, QMaxTag::NotQuasiMaximal);
    assert!(!z30.two_absorbing);
    assert_eq!(z30.violating_triple, Some([2, 3, 5]));
    assert_eq!(z30.factorization, vec![(2, 1), (3, 1), (5, 1)]);
}

#[test]
fn degenerate_generators_are_rejected() {
    assert!(classify_z_ideal(0).is_err());
    assert!(classify_z_ideal(1).is_err());
}

#[test]
fn crosscheck_examples() {
    for (n, t) in [(9, QMaxTag::Ramified), (6, QMaxTag::Decomposed), (12, QMaxTag::NotQuasiMaximal)] {
        assert_eq!(classify_z_ideal(n).unwrap().tag, t);
        assert!(z_crosscheck(n).unwrap(), "{n}");
    }
}

#[test]
fn prime_squares_are_ramified() {
    let rep = prime_square_witness(50).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.primes.len(), 15);
    assert_eq!(classify_z_ideal(4).unwrap().tag, QMaxTag::Ramified);
    assert!(z_crosscheck(4).unwrap());
    assert!(prime_square_witness(1).is_err());
}

#[test]
fn agreement_up_to_five_hundred() {
    for n in 2..=500 {
        let z = classify_z_ideal(n).unwrap();
        assert!(z_crosscheck(n).unwrap(), "{n}");
        assert_eq!(z.two_absorbing, z.tag.is_qmax(), "{n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn factorization_multiplies_back(n in 2u64..1_000_000) {
        let f = factorize(n);
        prop_assert_eq!(f.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
        prop_assert!(f.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn divisor_triple_search_matches_full_search(n in 2u64..60) {
        let r = make_zmod(n as usize).unwrap();
        let table = is_two_absorbing(&r, &Ideal::zero(&r)).unwrap();
        let triple = z_violating_triple(n);
        prop_assert_eq!(triple.is_none(), table.two_absorbing);
        if let Some([a, b, c]) = triple {
            prop_assert!(a * b * c % n == 0 && a * b % n != 0 && a * c % n != 0 && b * c % n != 0);
        }
        prop_assert_eq!(classify_z_ideal(n).unwrap().tag, classify_qmax(&r, &Ideal::zero(&r)).unwrap().tag());
    }
}
