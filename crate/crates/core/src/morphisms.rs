//! Morphisms between Verma modules and the classified singular vectors.
//!
//! A map is a sum of terms `u ⊗ φ` acting by `(u ⊗ φ)(u′ ⊗ v) = u′u ⊗ φ(v)`.
//! Each `φ` is a sequence of steps on `V_X`: a slot operator `∂x_j` / `∂y_j`
//! (a derivation on `x`/`y` generators, multiplication on `∂x`/`∂y`
//! generators), or a retag moving the monomial into another quadrant.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::enveloping::{PbwMonomial, UEnv, W};
use crate::error::{Error, Result};
use crate::scalar::Gq;
use crate::verma::{ModuleCoords, Quadrant, Terms, VMono, VermaVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X1,
    X2,
    Y1,
    Y2,
}

impl Var {
    fn index(self) -> usize {
        self as usize
    }

    fn is_x(self) -> bool {
        matches!(self, Var::X1 | Var::X2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Slot(Var),
    Retag(Quadrant),
}

/// Applies one slot operator in quadrant `q`.
fn slot(q: Quadrant, v: Var, f: &VMono) -> Option<(i64, VMono)> {
    let k = v.index();
    let dual = if v.is_x() { q.x_dual() } else { q.y_dual() };
    let mut g = *f;
    if dual {
        g[k] += 1;
        Some((1, g))
    } else if f[k] == 0 {
        None
    } else {
        g[k] -= 1;
        Some((f[k] as i64, g))
    }
}

/// Runs a step sequence from quadrant `q`; returns `(coefficient, monomial)`.
fn run_steps(mut q: Quadrant, steps: &[Step], f: &VMono) -> Option<(i64, VMono)> {
    let mut c = 1;
    let mut g = *f;
    for s in steps {
        match s {
            Step::Slot(v) => {
                let (k, h) = slot(q, *v, &g)?;
                c *= k;
                g = h;
            }
            Step::Retag(r) => q = *r,
        }
    }
    Some((c, g))
}

/// A linear map `M_X → M_Y` given by terms `u ⊗ φ`.
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub source: ModuleCoords,
    pub target: ModuleCoords,
    pub terms: Vec<(UEnv, Vec<Step>)>,
}

impl LinearMap {
    /// Builds the map and computes its target from the steps.
    pub fn new(source: ModuleCoords, terms: Vec<(UEnv, Vec<Step>)>) -> Result<Self> {
        let steps = &terms.first().ok_or_else(|| Error::InvalidMorphism("empty map".into()))?.1;
        let (mut q, mut m, mut n) = (source.quadrant, source.m, source.n);
        for s in steps {
            match s {
                Step::Slot(v) if v.is_x() => m -= 1,
                Step::Slot(_) => n -= 1,
                Step::Retag(r) => q = *r,
            }
        }
        let target = ModuleCoords::new(q, m, n).map_err(|_| Error::InvalidMorphism(format!("no target for {source}")))?;
        Ok(LinearMap { source, target, terms })
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &[(UEnv, Vec<Step>)]) -> Result<Self> {
        let mut terms = Vec::new();
        for (u1, s1) in &self.terms {
            for (u2, s2) in next {
                let mut s = s1.clone();
                s.extend(s2.iter().copied());
                terms.push((u1.mul(u2), s));
            }
        }
        LinearMap::new(self.source, terms)
    }

    /// Image of a single basis key, using the graded product when `gr` is set.
    pub fn apply_key(&self, u: &PbwMonomial, f: &VMono, gr: bool, out: &mut Terms, scale: &Gq) {
        let left = UEnv::mono(*u);
        for (r, steps) in &self.terms {
            let Some((c, g)) = run_steps(self.source.quadrant, steps, f) else { continue };
            let prod = left.mul_with(r, gr);
            let k = scale.scale_int(c);
            for (m, x) in prod.terms() {
                crate::verma::terms_add(out, (*m, g), &(&k * x));
            }
        }
    }

    pub fn apply_with(&self, v: &VermaVector, gr: bool) -> Result<VermaVector> {
        if v.module != self.source {
            return Err(Error::InvalidMorphism(format!("vector in {} but map starts at {}", v.module, self.source)));
        }
        let mut out = Terms::new();
        for ((u, f), c) in v.terms() {
            self.apply_key(u, f, gr, &mut out, c);
        }
        Ok(VermaVector::from_terms(self.target, out))
    }

    pub fn apply(&self, v: &VermaVector) -> Result<VermaVector> {
        self.apply_with(v, false)
    }
}

fn w(x: W) -> UEnv {
    UEnv::w(x)
}

fn sl(v: Var) -> Vec<Step> {
    vec![Step::Slot(v)]
}

/// `Δ⁺ = w₁₁⊗∂x₁ + w₂₁⊗∂x₂`.
pub fn delta_plus() -> Vec<(UEnv, Vec<Step>)> {
    vec![(w(W::W11), sl(Var::X1)), (w(W::W21), sl(Var::X2))]
}

/// `Δ⁻ = w₁₂⊗∂x₁ + w₂₂⊗∂x₂`.
pub fn delta_minus() -> Vec<(UEnv, Vec<Step>)> {
    vec![(w(W::W12), sl(Var::X1)), (w(W::W22), sl(Var::X2))]
}

/// `Δ̃⁺ = w₁₁⊗∂y₁ + w₁₂⊗∂y₂`.
pub fn delta_tilde_plus() -> Vec<(UEnv, Vec<Step>)> {
    vec![(w(W::W11), sl(Var::Y1)), (w(W::W12), sl(Var::Y2))]
}

/// `Δ̃⁻ = w₂₁⊗∂y₁ + w₂₂⊗∂y₂`.
pub fn delta_tilde_minus() -> Vec<(UEnv, Vec<Step>)> {
    vec![(w(W::W21), sl(Var::Y1)), (w(W::W22), sl(Var::Y2))]
}

/// Terms of a single step sequence with coefficient 1.
fn identity_with(steps: Vec<Step>) -> Vec<(UEnv, Vec<Step>)> {
    vec![(UEnv::one(), steps)]
}

/// `d′ = Δ⁺∂y₁` and `d″ = Δ⁻∂y₂`, the two halves of `∇`.
pub fn d_prime(source: ModuleCoords) -> Result<LinearMap> {
    LinearMap::new(source, identity_with(sl(Var::Y1)))?.then(&delta_plus())
}

pub fn d_double_prime(source: ModuleCoords) -> Result<LinearMap> {
    LinearMap::new(source, identity_with(sl(Var::Y2)))?.then(&delta_minus())
}

/// The five morphism families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MorphismKind {
    Nabla,
    Nabla2,
    Nabla2Tilde,
    Nabla3,
    Nabla3Tilde,
}

impl MorphismKind {
    pub const ALL: [MorphismKind; 5] = [MorphismKind::Nabla, MorphismKind::Nabla2, MorphismKind::Nabla2Tilde, MorphismKind::Nabla3, MorphismKind::Nabla3Tilde];

    /// Increase of the `U(𝔤₋)` degree.
    pub fn degree_shift(self) -> u32 {
        match self {
            MorphismKind::Nabla => 1,
            MorphismKind::Nabla2 | MorphismKind::Nabla2Tilde => 2,
            MorphismKind::Nabla3 | MorphismKind::Nabla3Tilde => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MorphismKind::Nabla => "nabla",
            MorphismKind::Nabla2 => "nabla2",
            MorphismKind::Nabla2Tilde => "nabla2_tilde",
            MorphismKind::Nabla3 => "nabla3",
            MorphismKind::Nabla3Tilde => "nabla3_tilde",
        }
    }
}

impl fmt::Display for MorphismKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MorphismKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MorphismKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| Error::Parse(format!("unknown morphism `{s}`")))
    }
}

/// A morphism from one of the five families, with its source and target.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub kind: MorphismKind,
    pub map: LinearMap,
}

impl Morphism {
    /// The member of `kind` starting at `source`; errors outside the family's domain.
    pub fn new(kind: MorphismKind, source: ModuleCoords) -> Result<Self> {
        use Quadrant::*;
        let q = source.quadrant;
        let bad = || Error::InvalidMorphism(format!("{kind} is not defined on {source}"));
        let map = match kind {
            MorphismKind::Nabla => LinearMap::new(source, identity_with(sl(Var::Y1)))?
                .then(&delta_plus())
                .and_then(|a| {
                    let b = LinearMap::new(source, identity_with(sl(Var::Y2)))?.then(&delta_minus())?;
                    let mut terms = a.terms;
                    terms.extend(b.terms);
                    LinearMap::new(source, terms)
                })
                .map_err(|_| bad())?,
            MorphismKind::Nabla2 => {
                let target = match q {
                    A if source.n == 0 && source.m >= 2 => D,
                    B if source.n == 0 => C,
                    _ => return Err(bad()),
                };
                LinearMap::new(source, identity_with(vec![Step::Retag(target)]))?.then(&delta_plus())?.then(&delta_minus())?
            }
            MorphismKind::Nabla2Tilde => {
                let target = match q {
                    A if source.m == 0 && source.n >= 2 => B,
                    D if source.m == 0 => C,
                    _ => return Err(bad()),
                };
                LinearMap::new(source, identity_with(vec![Step::Retag(target)]))?.then(&delta_tilde_plus())?.then(&delta_tilde_minus())?
            }
            MorphismKind::Nabla3 => {
                if (q, source.m, source.n) != (A, 0, 1) {
                    return Err(bad());
                }
                let first = vec![
                    (UEnv::word(&[W::W11, W::W21]), vec![Step::Slot(Var::Y1), Step::Retag(C)]),
                    (UEnv::word(&[W::W12, W::W21]).add(&UEnv::word(&[W::W11, W::W22])), vec![Step::Slot(Var::Y2), Step::Retag(C)]),
                ];
                LinearMap::new(source, first)?.then(&delta_minus())?
            }
            MorphismKind::Nabla3Tilde => {
                if (q, source.m, source.n) != (A, 1, 0) {
                    return Err(bad());
                }
                let first = vec![
                    (UEnv::word(&[W::W11, W::W12]), vec![Step::Slot(Var::X1), Step::Retag(C)]),
                    (UEnv::word(&[W::W21, W::W12]).add(&UEnv::word(&[W::W11, W::W22])), vec![Step::Slot(Var::X2), Step::Retag(C)]),
                ];
                LinearMap::new(source, first)?.then(&delta_tilde_minus())?
            }
        };
        Ok(Morphism { kind, map })
    }

    pub fn source(&self) -> ModuleCoords {
        self.map.source
    }

    pub fn target(&self) -> ModuleCoords {
        self.map.target
    }

    pub fn apply(&self, v: &VermaVector) -> Result<VermaVector> {
        self.map.apply(v)
    }
}

/// `∇` applied to `v`.
pub fn apply_nabla(v: &VermaVector) -> Result<VermaVector> {
    Morphism::new(MorphismKind::Nabla, v.module)?.apply(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Plain,
    Tilde,
}

pub fn apply_nabla2(v: &VermaVector, variant: Variant) -> Result<VermaVector> {
    let k = if variant == Variant::Plain { MorphismKind::Nabla2 } else { MorphismKind::Nabla2Tilde };
    Morphism::new(k, v.module)?.apply(v)
}

pub fn apply_nabla3(v: &VermaVector, variant: Variant) -> Result<VermaVector> {
    let k = if variant == Variant::Plain { MorphismKind::Nabla3 } else { MorphismKind::Nabla3Tilde };
    Morphism::new(k, v.module)?.apply(v)
}

/// One entry of the classification of highest-weight singular vectors.
#[derive(Clone, Debug)]
pub struct ClassifiedVector {
    pub label: &'static str,
    pub m: u32,
    pub n: u32,
    pub degree: u32,
    pub vector: VermaVector,
}

fn mono(module: ModuleCoords, terms: &[(UEnv, VMono)]) -> VermaVector {
    let mut v = VermaVector::zero(module);
    for (u, f) in terms {
        v = v.add(&VermaVector::tensor(module, u, *f));
    }
    v
}

fn coords(q: Quadrant, m: i32, n: i32) -> ModuleCoords {
    ModuleCoords::new(q, m, n).expect("valid coordinates")
}

/// Every classified highest-weight singular vector with `m, n ≤ max`.
pub fn classified_vectors(max: u32) -> Vec<ClassifiedVector> {
    use Quadrant::*;
    let wd = |ws: &[W]| UEnv::word(ws);
    let mut out = Vec::new();
    let mut push = |label, m, n, degree, vector| out.push(ClassifiedVector { label, m, n, degree, vector });
    for m in 0..=max {
        for n in 0..=max {
            let (mi, ni) = (m as i32, n as i32);
            push("m1a", m, n, 1, mono(coords(A, mi, ni), &[(wd(&[W::W11]), [m, 0, n, 0])]));
            if m > 0 {
                push("m1b", m, n, 1, mono(coords(B, -mi, ni), &[(wd(&[W::W21]), [0, m, n, 0]), (wd(&[W::W11]), [1, m - 1, n, 0])]));
            }
            if m > 0 && n > 0 {
                push(
                    "m1c",
                    m,
                    n,
                    1,
                    mono(
                        coords(C, -mi, -ni),
                        &[
                            (wd(&[W::W22]), [0, m, 0, n]),
                            (wd(&[W::W12]), [1, m - 1, 0, n]),
                            (wd(&[W::W21]), [0, m, 1, n - 1]),
                            (wd(&[W::W11]), [1, m - 1, 1, n - 1]),
                        ],
                    ),
                );
            }
            if n > 0 {
                push("m1d", m, n, 1, mono(coords(D, mi, -ni), &[(wd(&[W::W12]), [m, 0, 0, n]), (wd(&[W::W11]), [m, 0, 1, n - 1])]));
            }
        }
    }
    for n in 0..=max {
        let ni = n as i32;
        push("m2a", 0, n, 2, mono(coords(B, 0, ni), &[(wd(&[W::W11, W::W21]), [0, 0, n, 0])]));
        if n > 1 {
            push(
                "m2d",
                0,
                n,
                2,
                mono(
                    coords(C, 0, -ni),
                    &[
                        (wd(&[W::W12, W::W22]), [0, 0, 0, n]),
                        (wd(&[W::W11, W::W22]).add(&wd(&[W::W12, W::W21])), [0, 0, 1, n - 1]),
                        (wd(&[W::W11, W::W21]), [0, 0, 2, n - 2]),
                    ],
                ),
            );
        }
    }
    for m in 0..=max {
        let mi = m as i32;
        push("m2b", m, 0, 2, mono(coords(D, mi, 0), &[(wd(&[W::W11, W::W12]), [m, 0, 0, 0])]));
        if m > 1 {
            push(
                "m2c",
                m,
                0,
                2,
                mono(
                    coords(C, -mi, 0),
                    &[
                        (wd(&[W::W21, W::W22]), [0, m, 0, 0]),
                        (wd(&[W::W11, W::W22]).add(&wd(&[W::W21, W::W12])), [1, m - 1, 0, 0]),
                        (wd(&[W::W11, W::W12]), [2, m - 2, 0, 0]),
                    ],
                ),
            );
        }
    }
    if max >= 1 {
        push(
            "m3a",
            1,
            0,
            3,
            mono(coords(C, -1, 0), &[(wd(&[W::W11, W::W22, W::W21]), [0, 1, 0, 0]), (wd(&[W::W21, W::W12, W::W11]).scale(&-Gq::one()), [1, 0, 0, 0])]),
        );
        push(
            "m3b",
            0,
            1,
            3,
            mono(coords(C, 0, -1), &[(wd(&[W::W11, W::W22, W::W12]), [0, 0, 0, 1]), (wd(&[W::W12, W::W21, W::W11]).scale(&-Gq::one()), [0, 0, 1, 0])]),
        );
    }
    out
}

/// The degree-3 vector `z ∈ M_C^{−1,−1}`.
pub fn vector_z() -> VermaVector {
    let m = coords(Quadrant::C, -1, -1);
    let wd = |ws: &[W]| UEnv::word(ws);
    let mixed = wd(&[W::W12, W::W21]).add(&wd(&[W::W11, W::W22]));
    let v = mono(
        m,
        &[
            (wd(&[W::W11, W::W21]).mul(&UEnv::w(W::W12)), [1, 0, 1, 0]),
            (wd(&[W::W11, W::W21]).mul(&UEnv::w(W::W22)), [0, 1, 1, 0]),
            (mixed.mul(&UEnv::w(W::W12)), [1, 0, 0, 1]),
            (mixed.mul(&UEnv::w(W::W22)), [0, 1, 0, 1]),
        ],
    );
    v.scale(&Gq::i())
}

/// The degree-4 vector `k ∈ M_C^{0,0}`.
pub fn vector_k() -> VermaVector {
    let m = coords(Quadrant::C, 0, 0);
    let wd = |ws: &[W]| UEnv::word(ws);
    let th = UEnv::theta();
    let u = wd(&[W::W11, W::W21, W::W12, W::W22])
        .scale(&Gq::ratio(1, 2))
        .add(&th.mul(&wd(&[W::W12, W::W21])))
        .add(&th.mul(&wd(&[W::W11, W::W22])));
    VermaVector::tensor(m, &u.scale(&Gq::i()), [0, 0, 0, 0])
}

/// The degree-1 vector `s ∈ M_A^{1,1}`.
pub fn vector_s() -> VermaVector {
    let m = coords(Quadrant::A, 1, 1);
    let one = Gq::one();
    let mut v = VermaVector::zero(m);
    v.add_term(PbwMonomial::w(W::W11), [0, 1, 0, 1], &one);
    v.add_term(PbwMonomial::w(W::W21), [1, 0, 0, 1], &-one.clone());
    v.add_term(PbwMonomial::w(W::W12), [0, 1, 1, 0], &-one.clone());
    v.add_term(PbwMonomial::w(W::W22), [1, 0, 1, 0], &one);
    v
}

/// Is `v` zero? Convenience for reports.
pub fn is_zero(v: &VermaVector) -> bool {
    v.is_zero() || v.terms().all(|(_, c)| c.is_zero())
}
