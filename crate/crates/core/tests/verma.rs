use contact_verma::contact::{basis_in_degrees, contact_bracket, koszul, named, Named, SuperElement};
use contact_verma::enveloping::PbwMonomial;
use contact_verma::homology::window_nodes;
use contact_verma::morphisms::{Morphism, MorphismKind};
use contact_verma::verma::*;
use contact_verma::Gq;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn at(q: Quadrant, m: i32, n: i32) -> ModuleCoords {
    ModuleCoords::new(q, m, n).unwrap()
}

fn highest(module: ModuleCoords) -> VermaVector {
    VermaVector::term(module, Gq::one(), PbwMonomial::ONE, module.highest_monomial())
}

#[test]
fn weight_module_dimensions_and_highest_weights() {
    for module in window_nodes(3) {
        let (a, b) = module.abs();
        assert_eq!(module.dim_v(), ((a + 1) * (b + 1)) as usize);
        assert_eq!(module.v_basis().len(), module.dim_v());
        let v = highest(module);
        assert_eq!(act(&named(Named::Hx), &v), v.scale(&Gq::from_int(a as i64)), "{module}");
        assert_eq!(act(&named(Named::Hy), &v), v.scale(&Gq::from_int(b as i64)), "{module}");
        assert_eq!(act(&named(Named::T), &v), v.scale(&module.mu_t()), "{module}");
        assert_eq!(act(&named(Named::C), &v), v.scale(&module.mu_c()), "{module}");
        assert!(act(&named(Named::Ex), &v).is_zero() && act(&named(Named::Ey), &v).is_zero(), "{module}");
    }
}

#[test]
fn highest_weights_follow_the_quadrant_shifts() {
    let half = |k: i64| Gq::ratio(k, 2);
    for m in 0..=3i64 {
        for n in 0..=3i64 {
            let (mi, ni) = (m as i32, n as i32);
            let cases = [
                (at(Quadrant::A, mi, ni), -half(m + n), half(m - n)),
                (at(Quadrant::B, -mi, ni), half(m - n) + Gq::one(), -half(m + n) - Gq::one()),
                (at(Quadrant::C, -mi, -ni), half(m + n) + Gq::from_int(2), half(n - m)),
                (at(Quadrant::D, mi, -ni), half(n - m) + Gq::one(), half(m + n) + Gq::one()),
            ];
            for (module, t, c) in cases {
                assert_eq!(module.highest_weight(), (m as u32, n as u32, t.clone(), c.clone()), "{module}");
                assert_eq!(ModuleCoords::from_weight(m as u32, n as u32, &t, &c), Some(module));
            }
        }
    }
}

#[test]
fn t_lowers_by_degree() {
    let t = named(Named::T);
    for module in [at(Quadrant::A, 1, 2), at(Quadrant::B, -2, 1), at(Quadrant::C, -1, -1), at(Quadrant::D, 2, -1)] {
        for d in 0..=4 {
            let mu = module.mu_t() - Gq::from_int(d as i64);
            for v in graded_basis(module, d) {
                assert_eq!(act(&t, &v), v.scale(&mu), "{module} degree {d}");
            }
        }
    }
}

#[test]
fn morphisms_commute_with_the_action() {
    use MorphismKind::*;
    let sources = [
        (Nabla, at(Quadrant::A, 1, 1)),
        (Nabla, at(Quadrant::B, -1, 1)),
        (Nabla, at(Quadrant::C, -1, 0)),
        (Nabla, at(Quadrant::D, 1, -1)),
        (Nabla2, at(Quadrant::A, 2, 0)),
        (Nabla2, at(Quadrant::B, -1, 0)),
        (Nabla2Tilde, at(Quadrant::A, 0, 2)),
        (Nabla2Tilde, at(Quadrant::D, 0, -1)),
        (Nabla3, at(Quadrant::A, 0, 1)),
        (Nabla3Tilde, at(Quadrant::A, 1, 0)),
    ];
    let gens: Vec<SuperElement> = basis_in_degrees(-1, 1).into_iter().map(SuperElement::mono).collect();
    for (kind, source) in sources {
        let map = Morphism::new(kind, source).unwrap();
        for d in 0..=3 {
            let basis = graded_basis(source, d);
            let moved = act_many(&gens, &basis);
            for (v, gv) in basis.iter().zip(&moved) {
                let tv = map.apply(v).unwrap();
                for (g, gv) in gens.iter().zip(gv) {
                    assert_eq!(act(g, &tv), map.apply(gv).unwrap(), "{kind} on {source}, g = {g}, v = {v}");
                }
            }
        }
    }
}

#[test]
fn morphism_domains() {
    assert!(Morphism::new(MorphismKind::Nabla3, at(Quadrant::A, 1, 0)).is_err());
    assert!(Morphism::new(MorphismKind::Nabla2, at(Quadrant::A, 1, 0)).is_err());
    assert!(Morphism::new(MorphismKind::Nabla2Tilde, at(Quadrant::B, 0, 2)).is_err());
    let m = Morphism::new(MorphismKind::Nabla2, at(Quadrant::A, 3, 0)).unwrap();
    assert_eq!(m.target(), at(Quadrant::D, 1, 0));
    let m = Morphism::new(MorphismKind::Nabla, at(Quadrant::C, 0, 0)).unwrap();
    assert_eq!(m.target(), at(Quadrant::C, -1, -1));
}

#[test]
fn singular_search_normalization() {
    let module = at(Quadrant::A, 1, 1);
    let found = singular_space(module, 1, SingularMode::HighestWeight);
    assert!(!found.is_empty());
    let keys = graded_keys(module, 1);
    for v in &found {
        let (u, f) = keys.iter().find(|(u, f)| !v.coeff(u, f).is_zero()).unwrap();
        assert_eq!(v.coeff(u, f), Gq::one());
        assert!(is_singular(v, SingularMode::HighestWeight));
    }
    assert!(singular_space(at(Quadrant::A, 0, 0), 4, SingularMode::HighestWeight).is_empty());
    assert!(singular_space(at(Quadrant::C, 0, 0), 2, SingularMode::Full).is_empty());
}

fn lie_triple() -> impl Strategy<Value = (ContactPair, VermaVector)> {
    let gens = basis_in_degrees(-2, 2);
    let nodes = window_nodes(2);
    (0..gens.len(), 0..gens.len(), 0..nodes.len(), 0u32..=3, any::<prop::sample::Index>()).prop_map(move |(a, b, k, d, idx)| {
        let module = nodes[k];
        let keys = graded_keys(module, d);
        let (u, f) = keys[idx.index(keys.len())];
        ((gens[a], gens[b]), VermaVector::term(module, Gq::one(), u, f))
    })
}

type ContactPair = (contact_verma::contact::ContactMonomial, contact_verma::contact::ContactMonomial);

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn action_is_a_lie_action(((a, b), v) in lie_triple()) {
        let (x, y) = (SuperElement::mono(a), SuperElement::mono(b));
        let lhs = act(&contact_bracket(&x, &y), &v);
        let s = Gq::from_int(koszul(a.parity(), b.parity()));
        let rhs = act(&x, &act(&y, &v)).sub(&act(&y, &act(&x, &v)).scale(&s));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_round_trip(((_, _), v) in lie_triple(), re in -5i64..6, im in -5i64..6) {
        let w = v.scale(&Gq::int_pair(re, im));
        prop_assert_eq!(parse_verma(w.module, &w.to_string()).unwrap(), w);
    }
}
