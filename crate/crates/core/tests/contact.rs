use std::collections::BTreeMap;

use contact_verma::contact::*;
use contact_verma::enveloping::{from_negative, UEnv, W};
use contact_verma::verma::w_weight;
use contact_verma::Gq;
use num_traits::{One, Zero};
use proptest::prelude::*;

// Reference bracket on Λ(1,4), written from scratch over index lists:
// [f,g] = (2−E)f·∂_t g − ∂_t f·(2−E)g + (−1)^{p(f)} Σᵢ ∂ᵢf·∂ᵢg
type Poly = BTreeMap<(u32, Vec<usize>), i64>;

/// Sorts an index word, returning the sign, or `None` on a repeated index.
fn normalize(mut w: Vec<usize>) -> Option<(i64, Vec<usize>)> {
    let mut sign = 1;
    for i in 0..w.len() {
        for j in 0..w.len() - 1 - i {
            if w[j] == w[j + 1] {
                return None;
            }
            if w[j] > w[j + 1] {
                w.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    Some((sign, w))
}

fn ref_bracket(a: &(u32, Vec<usize>), b: &(u32, Vec<usize>)) -> Poly {
    let mut out = Poly::new();
    let mut add = |t: u32, w: Vec<usize>, c: i64| {
        if c == 0 {
            return;
        }
        if let Some((s, w)) = normalize(w) {
            *out.entry((t, w)).or_insert(0) += s * c;
        }
    };
    let (ta, ia) = a;
    let (tb, ib) = b;
    let joined: Vec<usize> = ia.iter().chain(ib).copied().collect();
    if *tb > 0 {
        add(ta + tb - 1, joined.clone(), (2 - ia.len() as i64) * *tb as i64);
    }
    if *ta > 0 {
        add(ta + tb - 1, joined, -(*ta as i64) * (2 - ib.len() as i64));
    }
    let pf = if ia.len() % 2 == 0 { 1 } else { -1 };
    for i in 1..=4 {
        let (Some(pa), Some(pb)) = (ia.iter().position(|&x| x == i), ib.iter().position(|&x| x == i)) else { continue };
        let mut ra = ia.clone();
        ra.remove(pa);
        let mut rb = ib.clone();
        rb.remove(pb);
        let sa = if pa % 2 == 0 { 1 } else { -1 };
        let sb = if pb % 2 == 0 { 1 } else { -1 };
        add(ta + tb, ra.into_iter().chain(rb).collect(), pf * sa * sb);
    }
    out.retain(|_, c| *c != 0);
    out
}

fn to_element(p: &Poly) -> SuperElement {
    let mut e = SuperElement::zero();
    for ((t, w), c) in p {
        e = e.add(&SuperElement::xi(Gq::from_int(*c), *t, w));
    }
    e
}

fn indices(m: &ContactMonomial) -> Vec<usize> {
    (1..=4).filter(|i| m.xi & (1 << (i - 1)) != 0).collect()
}

#[test]
fn bracket_matches_reference_formula() {
    let basis: Vec<ContactMonomial> = basis_in_degrees(-2, 5).into_iter().filter(|m| !m.central).collect();
    for a in &basis {
        for b in &basis {
            let want = to_element(&ref_bracket(&(a.tpow, indices(a)), &(b.tpow, indices(b))));
            let got = contact_bracket(&SuperElement::mono(*a), &SuperElement::mono(*b)).non_central();
            assert_eq!(got, want, "[{a}, {b}]");
        }
    }
}

#[test]
fn central_term_values() {
    let one = ContactMonomial::new(0, 0);
    let top = ContactMonomial::new(0, 0b1111);
    assert_eq!(cocycle(&one, &top), Gq::from_int(-2));
    assert_eq!(cocycle(&top, &one), Gq::from_int(2));
    // ψ(ξᵢ, ∂ᵢξ₁₂₃₄) = −1 for every i
    for (i, rest) in [(1usize, vec![2, 3, 4]), (2, vec![1, 3, 4]), (3, vec![1, 2, 4]), (4, vec![1, 2, 3])] {
        let s = if i % 2 == 1 { 1 } else { -1 };
        let x = SuperElement::xi(Gq::one(), 0, &[i]);
        let y = SuperElement::xi(Gq::from_int(s), 0, &rest);
        let br = contact_bracket(&x, &y);
        assert_eq!(br.coeff(&ContactMonomial::central()), Gq::from_int(-1), "i = {i}");
    }
    assert!(cocycle(&ContactMonomial::new(1, 0), &ContactMonomial::new(0, 0b0011)).is_zero());
}

#[test]
fn sl2_weights_of_negative_part() {
    let hx = named(Named::Hx);
    let hy = named(Named::Hy);
    for w in W::ALL {
        let (a, b) = w_weight(w);
        let e = w.as_element();
        assert_eq!(contact_bracket(&hx, &e), e.scale(&Gq::from_int(a)), "{}", w.name());
        assert_eq!(contact_bracket(&hy, &e), e.scale(&Gq::from_int(b)), "{}", w.name());
    }
    // Θ spans 𝔤₋₂ and is killed by 𝔤₀ except for t
    let theta = named(Named::Theta);
    for n in [Named::Hx, Named::Hy, Named::Ex, Named::Fx, Named::Ey, Named::Fy, Named::C] {
        assert!(contact_bracket(&named(n), &theta).is_zero(), "{}", n.name());
    }
    assert_eq!(contact_bracket(&named(Named::T), &theta), theta.scale(&Gq::from_int(-2)));
}

#[test]
fn negative_part_brackets_become_anticommutators() {
    for a in W::ALL {
        for b in W::ALL {
            let br = contact_bracket(&a.as_element(), &b.as_element());
            assert_eq!(from_negative(&br).unwrap(), UEnv::w(a).supercommutator(&UEnv::w(b)));
        }
    }
}

#[test]
fn gradings_of_named_elements() {
    for n in Named::ALL {
        let (d, p) = named(n).grading().unwrap();
        let want = match n {
            Named::Theta => (-2, Parity::Even),
            Named::G1LowestEven | Named::G1LowestOdd => (1, Parity::Odd),
            _ => (0, Parity::Even),
        };
        assert_eq!((d, p), want, "{}", n.name());
    }
}

fn homogeneous(parity: u32) -> impl Strategy<Value = SuperElement> {
    let monos: Vec<ContactMonomial> = basis_in_degrees(-2, 3).into_iter().filter(|m| !m.central && m.parity() == Parity::of(parity)).collect();
    prop::collection::vec((0..monos.len(), -3i64..=3, -2i64..=2), 1..4).prop_map(move |ts| {
        ts.iter().fold(SuperElement::zero(), |acc, (k, re, im)| acc.add(&SuperElement::mono(monos[*k]).scale(&Gq::int_pair(*re, *im))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jacobi_on_combinations(((x, y, z), (pa, pb)) in (0u32..2, 0u32..2, 0u32..2).prop_flat_map(|(a, b, c)| ((homogeneous(a), homogeneous(b), homogeneous(c)), Just((a, b))))) {
        let s = Gq::from_int(koszul(Parity::of(pa), Parity::of(pb)));
        let lhs = contact_bracket(&x, &contact_bracket(&y, &z));
        let rhs = contact_bracket(&contact_bracket(&x, &y), &z).add(&contact_bracket(&y, &contact_bracket(&x, &z)).scale(&s));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn skew_symmetry_on_combinations(x in homogeneous(0), y in homogeneous(1), z in homogeneous(1)) {
        prop_assert_eq!(contact_bracket(&y, &x), contact_bracket(&x, &y).scale(&-Gq::one()));
        prop_assert_eq!(contact_bracket(&z, &y), contact_bracket(&y, &z));
    }

    #[test]
    fn text_round_trip(x in homogeneous(0)) {
        prop_assert_eq!(x.to_string().parse::<SuperElement>().unwrap(), x);
    }
}
