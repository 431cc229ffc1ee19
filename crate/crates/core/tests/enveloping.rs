use contact_verma::enveloping::*;
use contact_verma::Gq;
use num_traits::One;
use proptest::prelude::*;

fn basis_up_to(d: u32) -> Vec<PbwMonomial> {
    (0..=d).flat_map(PbwMonomial::of_degree).collect()
}

#[test]
fn listed_products() {
    assert!(UEnv::word(&[W::W11, W::W11]).is_zero());
    let want = UEnv::word(&[W::W11, W::W22]).scale(&-Gq::one()).add(&UEnv::theta().scale(&Gq::from_int(4)));
    assert_eq!(UEnv::w(W::W22).mul(&UEnv::w(W::W11)), want);
    assert_eq!(UEnv::w(W::W21).mul(&UEnv::w(W::W11)), UEnv::word(&[W::W11, W::W21]).scale(&-Gq::one()));
}

#[test]
fn graded_dimensions() {
    // independent count: pairs (k, j) with 2k + j = d, j ≤ 4, weighted by C(4, j)
    let binom = [1, 4, 6, 4, 1];
    for d in 0..=8u32 {
        let want: usize = (0..=4u32).filter(|j| *j <= d && (d - j) % 2 == 0).map(|j| binom[j as usize]).sum();
        assert_eq!(pbw_count(d), want, "degree {d}");
    }
    let dims: Vec<usize> = (0..=8).map(pbw_count).collect();
    assert_eq!(dims, vec![1, 4, 7, 8, 8, 8, 8, 8, 8]);
}

#[test]
fn associative_on_basis_triples() {
    let basis = basis_up_to(4);
    for gr in [false, true] {
        for a in &basis {
            for b in &basis {
                let ab = UEnv::mono(*a).mul_with(&UEnv::mono(*b), gr);
                for c in &basis {
                    let left = ab.mul_with(&UEnv::mono(*c), gr);
                    let right = UEnv::mono(*a).mul_with(&UEnv::mono(*b).mul_with(&UEnv::mono(*c), gr), gr);
                    assert_eq!(left, right, "({a})({b})({c}) gr={gr}");
                }
            }
        }
    }
}

#[test]
fn eta_conversion_examples() {
    let half = Gq::ratio(1, 2);
    let e2 = Basis::Eta(EtaElement::eta(2));
    assert_eq!(eta_conversion(&e2, Direction::ToW), Basis::W(UEnv::w(W::W11).add(&UEnv::w(W::W22)).scale(&half)));
    let w11 = Basis::W(UEnv::w(W::W11));
    assert_eq!(eta_conversion(&w11, Direction::ToEta), Basis::Eta(EtaElement::eta(2).add(&EtaElement::eta(1).scale(&Gq::i()))));
    assert_eq!(EtaElement::eta(1).mul(&EtaElement::eta(1)), EtaElement::mono(1, 0));
    for m in basis_up_to(6) {
        let x = Basis::W(UEnv::mono(m));
        assert_eq!(eta_conversion(&eta_conversion(&x, Direction::ToEta), Direction::ToW), x);
    }
}

#[test]
fn graded_product_is_supercommutative() {
    for a in basis_up_to(4) {
        for b in basis_up_to(4) {
            let s = if a.parity().is_odd() && b.parity().is_odd() { -Gq::one() } else { Gq::one() };
            assert_eq!(UEnv::mono(a).mul_gr(&UEnv::mono(b)), UEnv::mono(b).mul_gr(&UEnv::mono(a)).scale(&s));
        }
    }
}

fn element() -> impl Strategy<Value = UEnv> {
    let basis = basis_up_to(5);
    prop::collection::vec((0..basis.len(), -4i64..5, -4i64..5), 0..5)
        .prop_map(move |ts| ts.iter().fold(UEnv::zero(), |acc, (k, re, im)| acc.add(&UEnv::term(Gq::int_pair(*re, *im), basis[*k]))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn associative(a in element(), b in element(), c in element()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn distributive(a in element(), b in element(), c in element()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    // the η basis multiplies by Clifford rules, a separate code path
    #[test]
    fn eta_map_is_multiplicative(a in element(), b in element()) {
        prop_assert_eq!(w_to_eta(&a.mul(&b)), w_to_eta(&a).mul(&w_to_eta(&b)));
    }

    #[test]
    fn text_round_trip(k in 0usize..40) {
        let basis = basis_up_to(6);
        let m = basis[k % basis.len()];
        prop_assert_eq!(m.to_string().parse::<PbwMonomial>().unwrap(), m);
    }
}
