use contact_verma::conformal::*;
use contact_verma::contact::{bracket_basis, koszul, ContactMonomial, Parity};
use contact_verma::verify::{all_pass, conformal_axioms};
use contact_verma::Gq;
use num_traits::One;
use proptest::prelude::*;

fn xi(mask: u8) -> ConformalElement {
    ConformalElement::mono(0, mask)
}

fn parity(mask: u8) -> Parity {
    Parity::of(mask.count_ones())
}

fn falling(n: u32, p: u32) -> i64 {
    (0..p).map(|r| n as i64 - r as i64).product()
}

#[test]
fn listed_brackets() {
    let b = lambda_bracket(&xi(0b0001), &xi(0b0001));
    assert_eq!(b.degree(), Some(0));
    assert_eq!(b.coeff(0), xi(0).scale(&Gq::from_int(-1)));
    let b = lambda_bracket(&xi(0), &xi(0));
    assert_eq!(b.coeff(0), xi(0).d(1).scale(&Gq::from_int(-2)));
    assert_eq!(b.coeff(1), xi(0).scale(&Gq::from_int(-4)));
    assert_eq!(lambda_bracket(&xi(0b0001), &xi(0b0010)).coeff(1), xi(0b0011).scale(&Gq::from_int(-2)));
}

#[test]
fn listed_annihilation_brackets() {
    assert_eq!(annihilation_bracket(&xi(1), 0, &xi(1), 0).coeff(0, 0), Gq::from_int(-1));
    assert_eq!(annihilation_bracket(&xi(0), 1, &xi(1), 0).coeff(1, 0), Gq::from_int(-1));
    assert_eq!(annihilation_bracket(&xi(0), 0, &xi(1), 1).coeff(1, 0), Gq::from_int(2));
}

#[test]
fn exhaustive_axioms_on_generators() {
    let checks = conformal_axioms();
    assert!(all_pass(&checks), "{checks:?}");
}

#[test]
fn brackets_are_polynomial_of_bounded_degree() {
    for a in 0..16u8 {
        for b in 0..16u8 {
            assert!(lambda_bracket(&xi(a), &xi(b)).degree().unwrap_or(0) <= 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    // (∂ᵖa)₍ₙ₎b = (−1)ᵖ n(n−1)⋯(n−p+1) a₍ₙ₋ₚ₎b
    #[test]
    fn derivative_in_first_slot(a in 0u8..16, b in 0u8..16, p in 0u32..4, n in 0u32..5) {
        let lhs = n_product(&ConformalElement::mono(p, a), &xi(b), n);
        let rhs = if p > n {
            ConformalElement::zero()
        } else {
            n_product(&xi(a), &xi(b), n - p).scale(&Gq::from_int(falling(n, p) * if p % 2 == 0 { 1 } else { -1 }))
        };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn skew_symmetry_on_derivatives(a in 0u8..16, b in 0u8..16, p in 0u32..3, q in 0u32..3) {
        let (x, y) = (ConformalElement::mono(p, a), ConformalElement::mono(q, b));
        let s = Gq::from_int(-koszul(parity(a), parity(b)));
        prop_assert_eq!(lambda_bracket(&y, &x), lambda_bracket(&x, &y).substitute_minus_lambda_minus_d().scale(&s));
    }

    #[test]
    fn jacobi_on_derivatives(a in 0u8..16, b in 0u8..16, c in 0u8..16, p in 0u32..2, q in 0u32..2, m in 0u32..4, n in 0u32..4) {
        let (x, y, z) = (ConformalElement::mono(p, a), ConformalElement::mono(q, b), xi(c));
        let s = Gq::from_int(koszul(parity(a), parity(b)));
        let lhs = n_product(&x, &n_product(&y, &z, n), m).add(&n_product(&y, &n_product(&x, &z, m), n).scale(&-s));
        let mut rhs = ConformalElement::zero();
        let mut binom = 1i64;
        for j in 0..=m {
            rhs = rhs.add(&n_product(&n_product(&x, &y, j), &z, m + n - j).scale(&Gq::from_int(binom)));
            binom = binom * (m - j) as i64 / (j + 1) as i64;
        }
        prop_assert_eq!(lhs, rhs);
    }

    // ξ_I yᵐ ↦ tᵐ ξ_I carries the annihilation bracket to the contact bracket
    #[test]
    fn annihilation_matches_contact(a in 0u8..16, b in 0u8..16, m in 0u32..5, k in 0u32..5, re in -3i64..4, im in -3i64..4) {
        let c = Gq::int_pair(re, im);
        let lhs = annihilation_bracket(&xi(a).scale(&c), m, &xi(b), k).to_contact();
        let rhs = bracket_basis(&ContactMonomial::new(m, a), &ContactMonomial::new(k, b)).non_central();
        prop_assert_eq!(lhs, rhs.scale(&c));
    }

    #[test]
    fn lambda_bracket_is_bilinear(a in 0u8..16, b in 0u8..16, c in 0u8..16, re in -3i64..4) {
        let k = Gq::int_pair(re, 1);
        let left = lambda_bracket(&xi(a).scale(&k).add(&xi(c)), &xi(b));
        prop_assert_eq!(left, lambda_bracket(&xi(a), &xi(b)).scale(&k).add(&lambda_bracket(&xi(c), &xi(b))));
        prop_assert_eq!(lambda_bracket(&xi(a), &xi(b).scale(&Gq::one())), lambda_bracket(&xi(a), &xi(b)));
    }
}
