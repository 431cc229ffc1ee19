//! Named verification sweeps shared by the command line driver, the FFI
//! layer and the acceptance test. Each sweep returns a list of [`Check`]s;
//! none of them panics on a mathematical failure.

use std::fmt;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::characters::{self, character_series, integral_size, irreducible_node, size_formula, size_from_series, CharacterTarget};
use crate::conformal::{annihilation_bracket, lambda_bracket, n_product, ConformalElement};
use crate::contact::{self, basis_in_degrees, bracket_basis, cocycle, contact_bracket, koszul, ContactMonomial, Named, SuperElement};
use crate::enveloping::{PbwMonomial, UEnv, W};
use crate::homology::{self, expected, gr_homology, homology_classes, homology_sweep, ladder_homology, ComplexNode, GrFamily, Ladder};
use crate::linalg;
use crate::morphisms::{apply_nabla, classified_vectors, vector_k, vector_s, vector_z};
use crate::scalar::Gq;
use crate::verma::{act, graded_basis, graded_keys, in_span, is_singular, singular_space, ModuleCoords, Quadrant, SingularMode, VermaVector};

/// Outcome of one named property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }

    /// A check that passes when `failures` is empty; the first few failures
    /// become the detail.
    fn from_failures(name: &str, total: usize, failures: &[String]) -> Self {
        if failures.is_empty() {
            Check::new(name, true, format!("{total} cases"))
        } else {
            let head: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
            Check::new(name, false, format!("{} of {total} failed; first: {}", failures.len(), head.join("; ")))
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", if self.pass { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

fn sign(p: i64) -> Gq {
    Gq::from_int(p)
}

// ---------------------------------------------------------------------------
// Algebra axioms

/// Super skew-symmetry, super Jacobi, the grading element, condition L3 and
/// the cocycle identity for `ψ`.
pub fn contact_axioms() -> Vec<Check> {
    let mut out = Vec::new();

    let low = basis_in_degrees(-2, 4);
    let mut fails = Vec::new();
    let mut total = 0;
    for a in &low {
        for b in &low {
            total += 1;
            let s = sign(-koszul(a.parity(), b.parity()));
            if bracket_basis(b, a) != bracket_basis(a, b).scale(&s) {
                fails.push(format!("[{a},{b}]"));
            }
        }
    }
    out.push(Check::from_failures("contact skew-symmetry, degrees -2..4", total, &fails));

    let basis = basis_in_degrees(-2, 3);
    let fails: Vec<String> = basis
        .par_iter()
        .flat_map_iter(|a| {
            let basis = &basis;
            basis.iter().flat_map(move |b| {
                basis.iter().filter_map(move |c| {
                    let (x, y, z) = (SuperElement::mono(*a), SuperElement::mono(*b), SuperElement::mono(*c));
                    let lhs = contact_bracket(&x, &contact_bracket(&y, &z));
                    let r1 = contact_bracket(&contact_bracket(&x, &y), &z);
                    let r2 = contact_bracket(&y, &contact_bracket(&x, &z)).scale(&sign(koszul(a.parity(), b.parity())));
                    (lhs != r1.add(&r2)).then(|| format!("({a},{b},{c})"))
                })
            })
        })
        .collect();
    out.push(Check::from_failures("contact super Jacobi, degrees -2..3", basis.len().pow(3), &fails));

    let t = contact::named(Named::T);
    let fails: Vec<String> = basis
        .iter()
        .filter(|m| {
            let x = SuperElement::mono(**m);
            let expect = if m.central { SuperElement::zero() } else { x.scale(&Gq::from_int(m.degree() as i64)) };
            contact_bracket(&t, &x) != expect
        })
        .map(|m| m.to_string())
        .collect();
    out.push(Check::from_failures("[t,b] = deg(b) b", basis.len(), &fails));

    let theta = contact::named(Named::Theta);
    let mut fails = Vec::new();
    for i in -1..=1 {
        let imgs: Vec<SuperElement> = basis_in_degrees(i + 2, i + 2).into_iter().map(|m| contact_bracket(&theta, &SuperElement::mono(m))).collect();
        let target = basis_in_degrees(i, i).len();
        let r = element_rank(&imgs);
        if r != target {
            fails.push(format!("degree {i}: rank {r}, dim {target}"));
        }
    }
    out.push(Check::from_failures("[theta, g_(i+2)] spans g_i, i = -1,0,1", 3, &fails));

    // ψ([a,b],c) summed cyclically with Koszul signs, over triples of total degree 0
    let small = basis_in_degrees(-2, 4);
    let mut fails = Vec::new();
    let mut total = 0;
    for a in &small {
        for b in &small {
            for c in &small {
                if a.central || b.central || c.central || a.degree() + b.degree() + c.degree() != 0 {
                    continue;
                }
                total += 1;
                let (pa, pb, pc) = (a.parity(), b.parity(), c.parity());
                let term = |x: &ContactMonomial, y: &ContactMonomial, z: &ContactMonomial| psi(&bracket_basis(x, y).non_central(), z);
                let sum = term(a, b, c).scale_int(koszul(pa, pc)) + term(b, c, a).scale_int(koszul(pb, pa)) + term(c, a, b).scale_int(koszul(pc, pb));
                if !sum.is_zero() {
                    fails.push(format!("({a},{b},{c})"));
                }
            }
        }
    }
    out.push(Check::from_failures("psi is a 2-cocycle", total, &fails));
    out
}

fn psi(x: &SuperElement, z: &ContactMonomial) -> Gq {
    x.terms().fold(Gq::zero(), |acc, (m, c)| acc + c * &cocycle(m, z))
}

fn element_rank(xs: &[SuperElement]) -> usize {
    let mut index = std::collections::HashMap::new();
    let rows: Vec<linalg::SparseVec> = xs
        .iter()
        .map(|x| {
            linalg::sparse_from(x.terms().map(|(m, c)| {
                let n = index.len();
                (*index.entry(*m).or_insert(n), c.clone())
            }))
        })
        .collect();
    linalg::rank(&rows)
}

fn generators() -> Vec<ConformalElement> {
    (0..16u8).map(|x| ConformalElement::mono(0, x)).collect()
}

fn conformal_parity(a: &ConformalElement) -> contact::Parity {
    a.parity().expect("generators are homogeneous")
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64)
}

/// Sesquilinearity, skew-symmetry and Jacobi on the sixteen generators, and
/// the comparison of the annihilation algebra with the contact bracket.
pub fn conformal_axioms() -> Vec<Check> {
    let gens = generators();
    let mut out = Vec::new();

    let mut fails = Vec::new();
    let mut total = 0;
    for a in &gens {
        for b in &gens {
            total += 1;
            let da = a.d(1);
            let mut ok = n_product(&da, b, 0).is_zero();
            for n in 0..=3 {
                ok &= n_product(&da, b, n + 1) == n_product(a, b, n).scale(&Gq::from_int(-(n as i64 + 1)));
                // a₍ₙ₎∂b = ∂(a₍ₙ₎b) + n·a₍ₙ₋₁₎b
                let mut rhs = n_product(a, b, n).d(1);
                if n > 0 {
                    rhs = rhs.add(&n_product(a, b, n - 1).scale(&Gq::from_int(n as i64)));
                }
                ok &= n_product(a, &b.d(1), n) == rhs;
            }
            if !ok {
                fails.push(format!("{a} | {b}"));
            }
        }
    }
    out.push(Check::from_failures("conformal sesquilinearity", total, &fails));

    let mut fails = Vec::new();
    for a in &gens {
        for b in &gens {
            let s = sign(-koszul(conformal_parity(a), conformal_parity(b)));
            if lambda_bracket(b, a) != lambda_bracket(a, b).substitute_minus_lambda_minus_d().scale(&s) {
                fails.push(format!("{a} | {b}"));
            }
        }
    }
    out.push(Check::from_failures("conformal skew-symmetry", 256, &fails));

    // a₍ₘ₎(b₍ₙ₎c) − p(a,b) b₍ₙ₎(a₍ₘ₎c) = Σⱼ C(m,j) (a₍ⱼ₎b)₍ₘ₊ₙ₋ⱼ₎c
    let fails: Vec<String> = gens
        .par_iter()
        .flat_map_iter(|a| {
            let gens = &gens;
            gens.iter().flat_map(move |b| {
                gens.iter().filter_map(move |c| {
                    let s = sign(koszul(conformal_parity(a), conformal_parity(b)));
                    for m in 0..=2 {
                        for n in 0..=2 {
                            let lhs = n_product(a, &n_product(b, c, n), m).add(&n_product(b, &n_product(a, c, m), n).scale(&-s.clone()));
                            let mut rhs = ConformalElement::zero();
                            for j in 0..=m {
                                rhs = rhs.add(&n_product(&n_product(a, b, j), c, m + n - j).scale(&Gq::from_int(binomial(m, j))));
                            }
                            if lhs != rhs {
                                return Some(format!("({a},{b},{c}) m={m} n={n}"));
                            }
                        }
                    }
                    None
                })
            })
        })
        .collect();
    out.push(Check::from_failures("conformal Jacobi", 4096, &fails));

    let mut fails = Vec::new();
    let mut total = 0;
    for a in 0..16u8 {
        for b in 0..16u8 {
            for m in 0..=2 {
                for k in 0..=2 {
                    total += 1;
                    let lhs = annihilation_bracket(&ConformalElement::mono(0, a), m, &ConformalElement::mono(0, b), k).to_contact();
                    let rhs = bracket_basis(&ContactMonomial::new(m, a), &ContactMonomial::new(k, b)).non_central();
                    if lhs != rhs {
                        fails.push(format!("{} y^{m}, {} y^{k}", ContactMonomial::new(0, a), ContactMonomial::new(0, b)));
                    }
                }
            }
        }
    }
    out.push(Check::from_failures("annihilation bracket agrees with contact bracket", total, &fails));
    out
}

/// The listed brackets and anticommutators.
pub fn structure_constants() -> Vec<Check> {
    let mut out = Vec::new();
    let mut ok = true;
    for i in 1..=4 {
        let x = SuperElement::xi(Gq::one(), 0, &[i]);
        ok &= contact_bracket(&x, &x) == SuperElement::xi(Gq::from_int(-1), 0, &[]);
    }
    out.push(Check::new("[xi_i, xi_i] = -1", ok, "i = 1..4"));
    let b = contact_bracket(&SuperElement::xi(Gq::one(), 0, &[]), &SuperElement::xi(Gq::one(), 0, &[1, 2, 3, 4]));
    out.push(Check::new("[1, xi_1234] = -2C", b == SuperElement::central().scale(&Gq::from_int(-2)), b.to_string()));
    let ac = |a: W, b: W| UEnv::w(a).supercommutator(&UEnv::w(b));
    let th = |c: i64| UEnv::theta().scale(&Gq::from_int(c));
    out.push(Check::new("{w11, w22} = 4 theta", ac(W::W11, W::W22) == th(4), ac(W::W11, W::W22).to_string()));
    out.push(Check::new("{w12, w21} = -4 theta", ac(W::W12, W::W21) == th(-4), ac(W::W12, W::W21).to_string()));
    let sq = W::ALL.iter().all(|w| UEnv::word(&[*w, *w]).is_zero());
    out.push(Check::new("w^2 = 0", sq, "all four letters"));
    // the same relations read off the 𝔤 bracket through the embedding of 𝔤₋
    let mut ok = true;
    for a in W::ALL {
        for b in W::ALL {
            let br = contact_bracket(&a.as_element(), &b.as_element());
            ok &= crate::enveloping::from_negative(&br).ok() == Some(ac(a, b));
        }
    }
    out.push(Check::new("supercommutators match the bracket of g", ok, "16 pairs"));
    out
}

// ---------------------------------------------------------------------------
// Singular vectors

/// Classified vectors with `m, n ≤ max` are highest-weight singular, and the
/// search at their degree finds exactly them; the degree-4 search over the
/// nodes with `|m|, |n| ≤ empty_range` is empty; `M(0,0,2,0)` has no singular
/// vectors in degrees 1 to 3.
pub fn singular_vectors(max: u32, empty_range: i32) -> Vec<Check> {
    let classified = classified_vectors(max);
    let mut out = Vec::new();

    let fails: Vec<String> = classified
        .par_iter()
        .filter(|c| !is_singular(&c.vector, SingularMode::HighestWeight))
        .map(|c| format!("{} m={} n={}", c.label, c.m, c.n))
        .collect();
    out.push(Check::from_failures("classified vectors are highest-weight singular", classified.len(), &fails));

    // group classified vectors by (module, degree) and search every such piece
    let mut pieces: std::collections::BTreeMap<(ModuleCoords, u32), Vec<&VermaVector>> = Default::default();
    for c in &classified {
        pieces.entry((c.vector.module, c.degree)).or_default().push(&c.vector);
    }
    let pieces: Vec<_> = pieces.into_iter().collect();
    let fails: Vec<String> = pieces
        .par_iter()
        .filter_map(|((module, d), vs)| {
            let found = singular_space(*module, *d, SingularMode::HighestWeight);
            let covered = vs.iter().all(|v| in_span(v, &found));
            (!covered || found.len() != vs.len()).then(|| format!("{module} degree {d}: found {}, listed {}", found.len(), vs.len()))
        })
        .collect();
    out.push(Check::from_failures("search recovers the classification", pieces.len(), &fails));

    let nodes = homology::window_nodes(empty_range);
    let fails: Vec<String> = nodes
        .par_iter()
        .filter(|m| !singular_space(**m, 4, SingularMode::HighestWeight).is_empty())
        .map(|m| m.to_string())
        .collect();
    out.push(Check::from_failures("no highest-weight singular vectors in degree 4", nodes.len(), &fails));

    let c00 = ModuleCoords::new(Quadrant::C, 0, 0).expect("valid");
    let fails: Vec<String> = (1..=3u32)
        .into_par_iter()
        .filter(|d| !singular_space(c00, *d, SingularMode::Full).is_empty())
        .map(|d| format!("degree {d}"))
        .collect();
    out.push(Check::from_failures("M(0,0,2,0) has no singular vectors in degrees 1-3", 3, &fails));
    out
}

// ---------------------------------------------------------------------------
// Complexes

/// Each pair of consecutive maps composes to zero on full graded bases.
pub fn complex_identities(range: i32, max_deg: u32) -> Vec<Check> {
    let nodes = homology::window_nodes(range);
    let results: Vec<(String, usize, Vec<String>)> = nodes
        .par_iter()
        .filter_map(|m| {
            let node = ComplexNode::new(*m).ok()?;
            let first = node.outgoing?;
            let second = ComplexNode::new(first.target()).ok()?.outgoing?;
            let name = format!("{} then {}", first.kind.name(), second.kind.name());
            let mut total = 0;
            let mut fails = Vec::new();
            for d in 0..=max_deg {
                for v in graded_basis(*m, d) {
                    total += 1;
                    let img = first.apply(&v).and_then(|w| second.apply(&w));
                    if !img.map(|w| w.is_zero()).unwrap_or(false) {
                        fails.push(format!("{m} degree {d}"));
                    }
                }
            }
            Some((name, total, fails))
        })
        .collect();
    let mut by_kind: std::collections::BTreeMap<String, (usize, Vec<String>)> = Default::default();
    for (name, total, fails) in results {
        let e = by_kind.entry(name).or_default();
        e.0 += total;
        e.1.extend(fails);
    }
    by_kind.into_iter().map(|(name, (total, fails))| Check::from_failures(&format!("{name} = 0"), total, &fails)).collect()
}

/// The homology sweep against the expected pattern, and the two exceptional
/// classes as trivial representations.
pub fn homology_window(range: i32, window: u32) -> Vec<Check> {
    let mut out = Vec::new();
    match homology_sweep(range, window) {
        Ok(rows) => {
            let fails: Vec<String> = rows
                .iter()
                .filter(|r| {
                    let expect = match (r.module.quadrant, r.module.m, r.module.n, r.degree) {
                        (Quadrant::A, 0, 0, 0) | (Quadrant::C, -1, -1, 3) => 1,
                        _ => 0,
                    };
                    r.dim != expect
                })
                .map(|r| format!("{} degree {}: {}", r.module, r.degree, r.dim))
                .collect();
            out.push(Check::from_failures(&format!("homology in |m|,|n| <= {range}, degrees <= {window}"), rows.len(), &fails));
        }
        Err(e) => out.push(Check::new("homology sweep", false, e.to_string())),
    }
    let t = contact::named(Named::T);
    for (module, d) in [("A:0,0", 0u32), ("C:-1,-1", 3)] {
        let name = format!("homology class at {module} is trivial");
        let node = module.parse().and_then(ComplexNode::new);
        let reps = node.and_then(|n| homology_classes(&n, d));
        let check = match reps {
            Ok(reps) if reps.len() == 1 => {
                let v = &reps[0];
                let weights: std::collections::BTreeSet<_> = v.terms().map(|((u, f), _)| crate::verma::key_weight(&v.module, u, f)).collect();
                let trivial = weights.len() == 1 && weights.contains(&(0, 0)) && act(&t, v).is_zero();
                Check::new(name, trivial, format!("degree {d}, weights {weights:?}"))
            }
            Ok(reps) => Check::new(name, false, format!("{} classes", reps.len())),
            Err(e) => Check::new(name, false, e.to_string()),
        };
        out.push(check);
    }
    out
}

/// `∇z = 0`, `z ∉ Im ∇`, `∇k = Θz`, `∇s = 8Θ⊗1`.
pub fn distinguished_vectors() -> Vec<Check> {
    let mut out = Vec::new();
    let z = vector_z();
    let nz = apply_nabla(&z);
    out.push(Check::new("nabla z = 0", nz.as_ref().is_ok_and(|v| v.is_zero()), "z in C:-1,-1, degree 3"));
    let c00 = ModuleCoords::new(Quadrant::C, 0, 0).expect("valid");
    let imgs: Result<Vec<VermaVector>, _> = graded_basis(c00, 2).iter().map(apply_nabla).collect();
    out.push(Check::new("z is not in the image of nabla", imgs.is_ok_and(|im| !in_span(&z, &im)), "image of C:0,0 degree 2"));
    let nk = apply_nabla(&vector_k());
    out.push(Check::new("nabla k = theta z", nk.is_ok_and(|v| v == z.left_mul(&UEnv::theta())), "k in C:0,0, degree 4"));
    let ns = apply_nabla(&vector_s());
    let a00 = ModuleCoords::new(Quadrant::A, 0, 0).expect("valid");
    let expect = VermaVector::term(a00, Gq::from_int(8), PbwMonomial::new(1, 0), [0, 0, 0, 0]);
    out.push(Check::new("nabla s = 8 theta", ns.is_ok_and(|v| v == expect), "s in A:1,1, degree 1"));
    out
}

/// Expected graded homology tables for `G_X`, `G_X°` and the two ladders.
pub fn gr_tables() -> Vec<Check> {
    let mut out = Vec::new();
    for q in [Quadrant::A, Quadrant::C, Quadrant::D] {
        let cases: Vec<(i32, i32, i32, i32)> = grid4(-1..=4, -1..=4, -4..=4, -4..=4);
        let fails: Vec<String> = cases
            .par_iter()
            .filter_map(|&(a, b, m, n)| {
                let got = gr_homology(GrFamily::GCirc, q, Some((a, b)), m, n);
                if Some(got) != expected::g_circ(q, a, b, m, n) {
                    return Some(format!("G°({a},{b}) at {m},{n}: {got}"));
                }
                let e = expected::g_plain(q, a, b, m, n)?;
                let got = gr_homology(GrFamily::G, q, Some((a, b)), m, n);
                (got != e).then(|| format!("G({a},{b}) at {m},{n}: {got}, want {e}"))
            })
            .collect();
        out.push(Check::from_failures(&format!("graded tables, quadrant {}", q.letter()), cases.len(), &fails));
    }
    let mut fails = Vec::new();
    for q in [Quadrant::A, Quadrant::C, Quadrant::D] {
        for m in -2..=2 {
            for n in -4..=4 {
                let got = gr_homology(GrFamily::GCirc, q, None, m, n);
                if Some(got) != expected::g_circ_total(q, m, n) {
                    fails.push(format!("{} {m},{n}: {got}", q.letter()));
                }
            }
        }
    }
    out.push(Check::from_failures("graded totals match g0-module dimensions", 135, &fails));
    let mut fails = Vec::new();
    for b in 0..=2 {
        for k in 0..=4 {
            let h: usize = ladder_homology(Ladder::S, b, k, 6).values().sum();
            if h != expected::s_ladder(b, k) {
                fails.push(format!("S b={b} k={k}: {h}"));
            }
        }
    }
    for b in 0..=1 {
        for k in -1..=2 {
            let h: usize = ladder_homology(Ladder::T, b, k, 6).values().sum();
            if h != expected::t_ladder(b, k) {
                fails.push(format!("T b={b} k={k}: {h}"));
            }
        }
    }
    out.push(Check::from_failures("S and T ladders", 23, &fails));
    out
}

fn grid4(
    a: std::ops::RangeInclusive<i32>,
    b: std::ops::RangeInclusive<i32>,
    c: std::ops::RangeInclusive<i32>,
    d: std::ops::RangeInclusive<i32>,
) -> Vec<(i32, i32, i32, i32)> {
    let mut out = Vec::new();
    for x in a {
        for y in b.clone() {
            for z in c.clone() {
                for w in d.clone() {
                    out.push((x, y, z, w));
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Characters

/// Verma character, size oracle against the closed formulas, and the type-A
/// closed-form character.
pub fn characters_and_sizes(window: u32) -> Vec<Check> {
    let mut out = Vec::new();
    let a00 = ModuleCoords::new(Quadrant::A, 0, 0).expect("valid");
    let ch = character_series(CharacterTarget::Verma(a00), 5).map(|c| c.coeffs);
    out.push(Check::new("ch M(0,0,0,0) = 1,4,7,8,8,8", ch.as_deref() == Ok(&[1, 4, 7, 8, 8, 8][..]), format!("{ch:?}")));

    let cases: Vec<(Quadrant, u32, u32)> = [Quadrant::A, Quadrant::D].into_iter().flat_map(|q| (0..=2).flat_map(move |m| (0..=2).map(move |n| (q, m, n)))).collect();
    let fails: Vec<String> = cases
        .par_iter()
        .filter_map(|&(q, m, n)| {
            let got = size_oracle(q, m, n, window);
            (got != Some(size_formula(q, m, n))).then(|| format!("{}({m},{n}): oracle {got:?}, formula {}", q.letter(), size_formula(q, m, n)))
        })
        .collect();
    out.push(Check::from_failures("size oracle = closed formula, quadrants A and D", cases.len(), &fails));

    let s = size_oracle(Quadrant::A, 0, 0, window);
    out.push(Check::new("size(I(0,0,0,0)) = 0", s == Some(0), format!("{s:?}")));
    let c00 = ModuleCoords::new(Quadrant::C, 0, 0).expect("valid");
    let s = character_series(CharacterTarget::Verma(c00), window).ok().map(|c| size_from_series(&c)).and_then(|r| integral_size(&r));
    out.push(Check::new("size(M(0,0,2,0)) = 4", s == Some(4), format!("{s:?}")));

    let pairs: Vec<(u32, u32)> = (0..=2).flat_map(|m| (0..=2).map(move |n| (m, n))).collect();
    let fails: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(m, n)| {
            let node = irreducible_node(Quadrant::A, m, n).ok()?;
            let got = character_series(CharacterTarget::Irreducible(node), 8).ok();
            let want = characters::type_a_closed_form(m, n, 8);
            (got.as_ref() != Some(&want)).then(|| format!("({m},{n})"))
        })
        .collect();
    out.push(Check::from_failures("type-A closed-form character, degrees <= 8", pairs.len(), &fails));
    out
}

/// Size of the irreducible module of type `q` read off its character.
pub fn size_oracle(q: Quadrant, m: u32, n: u32, window: u32) -> Option<i64> {
    let node = irreducible_node(q, m, n).ok()?;
    let ch = character_series(CharacterTarget::Irreducible(node), window).ok()?;
    integral_size(&size_from_series(&ch))
}

// ---------------------------------------------------------------------------
// Randomized checks

/// `[a,b]·v = a·(b·v) − (−1)^{p(a)p(b)} b·(a·v)` on `count` seeded random
/// triples, `a, b` of degree at most 2 and `v` a basis vector of degree at
/// most 3 in a node with `|m|, |n| ≤ 2`.
pub fn lie_action(seed: u64, count: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = basis_in_degrees(-2, 2);
    let nodes = homology::window_nodes(2);
    let mut fails = Vec::new();
    for _ in 0..count {
        let a = *gens.choose(&mut rng).expect("nonempty");
        let b = *gens.choose(&mut rng).expect("nonempty");
        let module = *nodes.choose(&mut rng).expect("nonempty");
        let d = rng.gen_range(0..=3);
        let keys = graded_keys(module, d);
        let (u, f) = *keys.choose(&mut rng).expect("nonempty");
        let v = VermaVector::term(module, Gq::one(), u, f);
        let (x, y) = (SuperElement::mono(a), SuperElement::mono(b));
        let lhs = act(&contact_bracket(&x, &y), &v);
        let rhs = act(&x, &act(&y, &v)).sub(&act(&y, &act(&x, &v)).scale(&sign(koszul(a.parity(), b.parity()))));
        if lhs != rhs {
            fails.push(format!("a={a} b={b} v={v}"));
        }
    }
    vec![Check::from_failures(&format!("Lie action on random triples (seed {seed})"), count, &fails)]
}
