//! The conformal superalgebra `K₄ = ℂ[∂] ⊗ Λ(4)`.
//!
//! On generators the λ-bracket is
//!
//! ```text
//! [ξ_I λ ξ_J] = (|I|−2) ∂(ξ_I ξ_J) + (−1)^{|I|} Σᵢ ∂ᵢξ_I ∂ᵢξ_J + λ(|I|+|J|−4) ξ_I ξ_J
//! ```
//!
//! and it is extended to `∂`-monomials by sesquilinearity:
//! `[∂a λ b] = −λ[a λ b]`, `[a λ ∂b] = (∂+λ)[a λ b]`.
//!
//! The annihilation algebra is spanned by `a·yᵐ`, with
//! `[a yᵐ, b yᵏ] = Σⱼ C(m,j) (a₍ⱼ₎b) y^{m+k−j}` modulo `∂a·yᵖ ≡ −p·a·y^{p−1}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::contact::{ContactMonomial, Parity, SuperElement};
use crate::grassmann::{self, Mask};
use crate::scalar::Gq;

/// A combination of monomials `∂^d ξ_I`, keyed by `(d, I)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ConformalElement {
    terms: BTreeMap<(u32, Mask), Gq>,
}

impl ConformalElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn mono(dpow: u32, xi: Mask) -> Self {
        let mut e = Self::zero();
        e.add_term(dpow, xi, &Gq::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, Mask), &Gq)> {
        self.terms.iter()
    }

    pub fn coeff(&self, dpow: u32, xi: Mask) -> Gq {
        self.terms.get(&(dpow, xi)).cloned().unwrap_or_else(Gq::zero)
    }

    pub fn add_term(&mut self, dpow: u32, xi: Mask, c: &Gq) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((dpow, xi)).or_insert_with(Gq::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(dpow, xi));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((d, x), c) in &other.terms {
            out.add_term(*d, *x, c);
        }
        out
    }

    pub fn scale(&self, c: &Gq) -> Self {
        let mut out = Self::zero();
        for ((d, x), v) in &self.terms {
            out.add_term(*d, *x, &(v * c));
        }
        out
    }

    /// Applies `∂^k`.
    pub fn d(&self, k: u32) -> Self {
        Self { terms: self.terms.iter().map(|((d, x), c)| ((d + k, *x), c.clone())).collect() }
    }

    /// Parity of a homogeneous element; `None` when mixed.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|(_, x)| Parity::of(grassmann::len(*x)));
        let p = it.next().unwrap_or(Parity::Even);
        it.all(|q| q == p).then_some(p)
    }
}

impl fmt::Display for ConformalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((d, x), c)| {
                let dd = match d {
                    0 => String::new(),
                    1 => "d ".to_string(),
                    k => format!("d^{k} "),
                };
                format!("({c})*{dd}xi{{{}}}", grassmann::fmt_indices(*x))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for ConformalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial in `λ` with [`ConformalElement`] coefficients.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct LambdaPolynomial {
    coeffs: BTreeMap<u32, ConformalElement>,
}

impl LambdaPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `λⁿ`.
    pub fn coeff(&self, n: u32) -> ConformalElement {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    fn add_at(&mut self, n: u32, e: &ConformalElement) {
        let slot = self.coeffs.entry(n).or_default();
        *slot = slot.add(e);
        if slot.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, e) in &other.coeffs {
            out.add_at(*n, e);
        }
        out
    }

    pub fn scale(&self, c: &Gq) -> Self {
        let mut out = Self::zero();
        for (n, e) in &self.coeffs {
            out.add_at(*n, &e.scale(c));
        }
        out
    }

    /// Multiplies by `−λ`.
    fn times_minus_lambda(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(n, e)| (n + 1, e.scale(&-Gq::one()))).collect() }
    }

    /// Multiplies by `∂ + λ`.
    fn times_d_plus_lambda(&self) -> Self {
        let mut out = Self::zero();
        for (n, e) in &self.coeffs {
            out.add_at(*n, &e.d(1));
            out.add_at(n + 1, e);
        }
        out
    }

    /// Substitutes `λ ↦ −λ−∂`, with `∂` acting on the coefficients.
    pub fn substitute_minus_lambda_minus_d(&self) -> Self {
        let mut out = Self::zero();
        for (k, e) in &self.coeffs {
            // (−λ−∂)^k e = (−1)^k Σ_r C(k,r) λ^r ∂^{k−r} e
            for r in 0..=*k {
                let c = binomial(*k, r).scale_int(if k % 2 == 0 { 1 } else { -1 });
                out.add_at(r, &e.d(k - r).scale(&c));
            }
        }
        out
    }
}

fn binomial(n: u32, k: u32) -> Gq {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= n - j;
        den *= j + 1;
    }
    Gq::from(num_rational::BigRational::from_integer(num / den))
}

fn factorial(n: u32) -> Gq {
    (1..=n).fold(Gq::one(), |acc, j| acc.scale_int(j as i64))
}

/// `[ξ_I λ ξ_J]` on generators.
fn lambda_bracket_generators(i: Mask, j: Mask) -> LambdaPolynomial {
    let mut out = LambdaPolynomial::zero();
    let (li, lj) = (grassmann::len(i) as i64, grassmann::len(j) as i64);
    let mut c0 = ConformalElement::zero();
    let mut c1 = ConformalElement::zero();
    if let Some((s, m)) = grassmann::mul(i, j) {
        c0.add_term(1, m, &Gq::from_int((li - 2) * s));
        c1.add_term(0, m, &Gq::from_int((li + lj - 4) * s));
    }
    let sign_i = if li % 2 == 0 { 1 } else { -1 };
    for k in 1..=4 {
        let (Some((s1, m1)), Some((s2, m2))) = (grassmann::deriv(k, i), grassmann::deriv(k, j)) else {
            continue;
        };
        if let Some((s3, m)) = grassmann::mul(m1, m2) {
            c0.add_term(0, m, &Gq::from_int(sign_i * s1 * s2 * s3));
        }
    }
    out.add_at(0, &c0);
    out.add_at(1, &c1);
    out
}

/// The λ-bracket `[a λ b]`.
pub fn lambda_bracket(a: &ConformalElement, b: &ConformalElement) -> LambdaPolynomial {
    let mut out = LambdaPolynomial::zero();
    for ((p, i), ca) in a.terms() {
        for ((q, j), cb) in b.terms() {
            let mut poly = lambda_bracket_generators(*i, *j);
            for _ in 0..*p {
                poly = poly.times_minus_lambda();
            }
            for _ in 0..*q {
                poly = poly.times_d_plus_lambda();
            }
            out = out.add(&poly.scale(&(ca * cb)));
        }
    }
    out
}

/// `a₍ₙ₎b = n! · [λⁿ][a λ b]`.
pub fn n_product(a: &ConformalElement, b: &ConformalElement, n: u32) -> ConformalElement {
    lambda_bracket(a, b).coeff(n).scale(&factorial(n))
}

/// An element of the annihilation algebra in normal form: `ξ_I yᵖ` keyed by `(I, p)`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct AnnihilationElement {
    terms: BTreeMap<(Mask, u32), Gq>,
}

impl AnnihilationElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Mask, u32), &Gq)> {
        self.terms.iter()
    }

    pub fn coeff(&self, xi: Mask, ypow: u32) -> Gq {
        self.terms.get(&(xi, ypow)).cloned().unwrap_or_else(Gq::zero)
    }

    fn add_term(&mut self, xi: Mask, ypow: u32, c: &Gq) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((xi, ypow)).or_insert_with(Gq::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(xi, ypow));
        }
    }

    /// Adds `e·yᵖ`, eliminating `∂` through `∂^d a·yᵖ ≡ (−1)^d p(p−1)⋯(p−d+1)·a·y^{p−d}`.
    pub fn add_reduced(&mut self, e: &ConformalElement, p: u32) {
        for ((d, x), c) in e.terms() {
            if *d > p {
                continue;
            }
            let mut f = c.clone();
            for r in 0..*d {
                f = f.scale_int(-((p - r) as i64));
            }
            self.add_term(*x, p - d, &f);
        }
    }

    /// Image under `ξ_I yᵐ ↦ tᵐ ξ_I`.
    pub fn to_contact(&self) -> SuperElement {
        let mut out = SuperElement::zero();
        for ((x, p), c) in &self.terms {
            out.add_term(ContactMonomial::new(*p, *x), c);
        }
        out
    }
}

/// `[a yᵐ, b yᵏ]` in the annihilation algebra, with every `∂` eliminated.
pub fn annihilation_bracket(a: &ConformalElement, m: u32, b: &ConformalElement, k: u32) -> AnnihilationElement {
    let poly = lambda_bracket(a, b);
    let mut out = AnnihilationElement::zero();
    let top = poly.degree().map_or(0, |d| d.min(m));
    for j in 0..=top {
        let prod = poly.coeff(j).scale(&factorial(j)).scale(&binomial(m, j));
        out.add_reduced(&prod, m + k - j);
    }
    out
}
