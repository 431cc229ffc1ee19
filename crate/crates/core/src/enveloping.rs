//! `U(𝔤₋)` in PBW normal form.
//!
//! Basis: `Θᵏ w₁₁^ε₁ w₂₁^ε₂ w₁₂^ε₃ w₂₂^ε₄`, letters always in that order.
//! Relations: `Θ` central, every `w² = 0`, `{w₁₁,w₂₂} = 4Θ`, `{w₁₂,w₂₁} = −4Θ`,
//! all other pairs anticommute. With `gr` set the `Θ` corrections are dropped,
//! which gives the associated graded algebra `S(𝔤₋₂) ⊗ Λ(𝔤₋₁)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::contact::{Parity, SuperElement};
use crate::error::{Error, Result};
use crate::grassmann;
use crate::scalar::Gq;

/// Index of a `w` letter in the fixed order `w₁₁ < w₂₁ < w₁₂ < w₂₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum W {
    W11 = 0,
    W21 = 1,
    W12 = 2,
    W22 = 3,
}

impl W {
    pub const ALL: [W; 4] = [W::W11, W::W21, W::W12, W::W22];

    pub fn bit(self) -> u8 {
        1 << (self as u8)
    }

    pub fn name(self) -> &'static str {
        match self {
            W::W11 => "w11",
            W::W21 => "w21",
            W::W12 => "w12",
            W::W22 => "w22",
        }
    }

    fn from_index(k: u32) -> W {
        W::ALL[k as usize]
    }

    /// The generator as an element of `𝔤₋₁`.
    pub fn as_element(self) -> SuperElement {
        let x = |c: Gq, i: usize| SuperElement::xi(c, 0, &[i]);
        let (one, i) = (Gq::one(), Gq::i());
        match self {
            W::W11 => x(one, 2).add(&x(i, 1)),
            W::W22 => x(one, 2).add(&x(-i, 1)),
            W::W12 => x(-one, 4).add(&x(i, 3)),
            W::W21 => x(one, 4).add(&x(i, 3)),
        }
    }

    /// `{self, other}` as a multiple of `Θ`.
    fn anticommutator(self, other: W) -> i64 {
        match (self, other) {
            (W::W11, W::W22) | (W::W22, W::W11) => 4,
            (W::W12, W::W21) | (W::W21, W::W12) => -4,
            _ => 0,
        }
    }
}

/// `Θᵏ · w_S`, `S` a bitmask over [`W`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PbwMonomial {
    pub theta: u32,
    pub flags: u8,
}

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial { theta: 0, flags: 0 };

    pub fn new(theta: u32, flags: u8) -> Self {
        PbwMonomial { theta, flags }
    }

    pub fn w(w: W) -> Self {
        PbwMonomial { theta: 0, flags: w.bit() }
    }

    pub fn letters(&self) -> impl Iterator<Item = W> + '_ {
        W::ALL.into_iter().filter(move |w| self.flags & w.bit() != 0)
    }

    pub fn odd_count(&self) -> u32 {
        self.flags.count_ones()
    }

    pub fn degree(&self) -> u32 {
        2 * self.theta + self.odd_count()
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.odd_count())
    }

    /// All monomials of degree `d`, in increasing order.
    pub fn of_degree(d: u32) -> Vec<PbwMonomial> {
        let mut out: Vec<PbwMonomial> = (0..16u8)
            .filter(|f| f.count_ones() <= d && (d - f.count_ones()) % 2 == 0)
            .map(|f| PbwMonomial::new((d - f.count_ones()) / 2, f))
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.theta > 0 {
            parts.push(format!("Th^{}", self.theta));
        }
        parts.extend(self.letters().map(|w| w.name().to_string()));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl FromStr for PbwMonomial {
    type Err = Error;

    /// Accepts `1`, or `Th^k` followed by letters in canonical order.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad PBW monomial `{s}`"));
        let s = s.trim();
        if s == "1" {
            return Ok(PbwMonomial::ONE);
        }
        let mut out = PbwMonomial::ONE;
        let mut last: Option<W> = None;
        for tok in s.split_whitespace() {
            if let Some(k) = tok.strip_prefix("Th") {
                if out.theta > 0 || last.is_some() {
                    return Err(bad());
                }
                out.theta = if k.is_empty() { 1 } else { k.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())? };
                continue;
            }
            let w = W::ALL.into_iter().find(|w| w.name() == tok).ok_or_else(bad)?;
            if last.is_some_and(|l| l >= w) {
                return Err(bad());
            }
            last = Some(w);
            out.flags |= w.bit();
        }
        Ok(out)
    }
}

/// A finitely supported combination of PBW monomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UEnv {
    terms: BTreeMap<PbwMonomial, Gq>,
}

/// Right-multiplies the sorted word `flags` by the letter `b`; result terms are
/// `(extra Θ power, flags, sign·multiplier)`.
fn word_times_letter(flags: u8, b: W, gr: bool, out: &mut Vec<(u32, u8, i64)>, scale: i64, theta: u32) {
    // last letter of the word
    if flags == 0 {
        out.push((theta, b.bit(), scale));
        return;
    }
    let x = W::from_index(7 - flags.leading_zeros());
    if x < b {
        out.push((theta, flags | b.bit(), scale));
        return;
    }
    if x == b {
        return;
    }
    // P x b = −(P b) x + {x,b} Θ P
    let p = flags & !x.bit();
    let c = x.anticommutator(b);
    if c != 0 && !gr {
        out.push((theta + 1, p, scale * c));
    }
    let mut inner = Vec::new();
    word_times_letter(p, b, gr, &mut inner, -scale, theta);
    for (th, f, s) in inner {
        // x is larger than every letter of P b, so appending keeps order
        out.push((th, f | x.bit(), s));
    }
}

/// Product of two normal-form monomials.
pub fn mul_monomials(a: PbwMonomial, b: PbwMonomial, gr: bool) -> Vec<(PbwMonomial, i64)> {
    let mut cur: Vec<(u32, u8, i64)> = vec![(a.theta + b.theta, a.flags, 1)];
    for w in b.letters() {
        let mut next = Vec::new();
        for (th, f, s) in cur {
            word_times_letter(f, w, gr, &mut next, s, th);
        }
        cur = next;
    }
    let mut acc: BTreeMap<PbwMonomial, i64> = BTreeMap::new();
    for (th, f, s) in cur {
        *acc.entry(PbwMonomial::new(th, f)).or_insert(0) += s;
    }
    acc.into_iter().filter(|(_, s)| *s != 0).collect()
}

impl UEnv {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::mono(PbwMonomial::ONE)
    }

    pub fn mono(m: PbwMonomial) -> Self {
        Self::term(Gq::one(), m)
    }

    pub fn term(c: Gq, m: PbwMonomial) -> Self {
        let mut u = Self::zero();
        u.add_term(m, &c);
        u
    }

    pub fn theta() -> Self {
        Self::mono(PbwMonomial::new(1, 0))
    }

    pub fn w(w: W) -> Self {
        Self::mono(PbwMonomial::w(w))
    }

    /// Product of letters in the given order, e.g. `word(&[W22, W11])`.
    pub fn word(ws: &[W]) -> Self {
        ws.iter().fold(Self::one(), |acc, w| acc.mul(&Self::w(*w)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Gq)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Gq {
        self.terms.get(m).cloned().unwrap_or_else(Gq::zero)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: &Gq) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Gq::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Gq::one()))
    }

    pub fn scale(&self, c: &Gq) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_with(&self, other: &Self, gr: bool) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for (m, s) in mul_monomials(*a, *b, gr) {
                    out.add_term(m, &c.scale_int(s));
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_with(other, false)
    }

    /// Product in the associated graded algebra.
    pub fn mul_gr(&self, other: &Self) -> Self {
        self.mul_with(other, true)
    }

    /// Supercommutator `uv − (−1)^{p(u)p(v)} vu` of parity-homogeneous elements.
    pub fn supercommutator(&self, other: &Self) -> Self {
        let odd = |u: &Self| u.terms.keys().next().is_some_and(|m| m.parity().is_odd());
        let sign = if odd(self) && odd(other) { Gq::one() } else { -Gq::one() };
        self.mul(other).add(&other.mul(self).scale(&sign))
    }
}

/// `pbw_multiply`.
pub fn pbw_multiply(u: &UEnv, v: &UEnv) -> UEnv {
    u.mul(v)
}

impl fmt::Display for UEnv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})*{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for UEnv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Image in `U(𝔤₋)` of an element of `𝔤₋ = 𝔤₋₂ ⊕ 𝔤₋₁`.
pub fn from_negative(g: &SuperElement) -> Result<UEnv> {
    let mut out = UEnv::zero();
    for (m, c) in g.terms() {
        if m.central || m.tpow != 0 || grassmann::len(m.xi) > 1 {
            return Err(Error::InvalidArgument(format!("{m} is not in the negative part")));
        }
        if m.xi == 0 {
            // 1 = −2Θ
            out = out.add(&UEnv::theta().scale(&c.scale_int(-2)));
        } else {
            let i = m.xi.trailing_zeros() as usize + 1;
            out = out.add(&eta_in_w(i).scale(c));
        }
    }
    Ok(out)
}

/// `ηᵢ` written in the `w` basis.
pub fn eta_in_w(i: usize) -> UEnv {
    let half = Gq::ratio(1, 2);
    let half_over_i = Gq::new(Default::default(), num_rational::BigRational::new((-1).into(), 2.into()));
    match i {
        1 => UEnv::w(W::W11).sub(&UEnv::w(W::W22)).scale(&half_over_i),
        2 => UEnv::w(W::W11).add(&UEnv::w(W::W22)).scale(&half),
        3 => UEnv::w(W::W12).add(&UEnv::w(W::W21)).scale(&half_over_i),
        4 => UEnv::w(W::W21).sub(&UEnv::w(W::W12)).scale(&half),
        _ => panic!("eta index out of range"),
    }
}

/// An element written in the Clifford basis `Θᵏ η_I` (`ηᵢ² = Θ`, distinct `η`s anticommute).
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct EtaElement {
    terms: BTreeMap<(u32, u8), Gq>,
}

impl EtaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn mono(theta: u32, mask: u8) -> Self {
        let mut e = Self::zero();
        e.add_term(theta, mask, &Gq::one());
        e
    }

    pub fn eta(i: usize) -> Self {
        Self::mono(0, grassmann::bit(i))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u8), &Gq)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, theta: u32, mask: u8, c: &Gq) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((theta, mask)).or_insert_with(Gq::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(theta, mask));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((t, m), c) in &other.terms {
            out.add_term(*t, *m, c);
        }
        out
    }

    pub fn scale(&self, c: &Gq) -> Self {
        let mut out = Self::zero();
        for ((t, m), x) in &self.terms {
            out.add_term(*t, *m, &(x * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((ta, ma), ca) in &self.terms {
            for ((tb, mb), cb) in &other.terms {
                let (s, th, m) = clifford_mul(*ma, *mb);
                out.add_term(ta + tb + th, m, &(ca * cb).scale_int(s));
            }
        }
        out
    }
}

/// `η_I · η_J = sign · Θ^{|I∩J|} η_{I△J}`.
fn clifford_mul(a: u8, b: u8) -> (i64, u32, u8) {
    let mut sign = 1;
    let mut th = 0;
    let mut cur = a;
    for j in grassmann::indices(b) {
        // η_j moves left past the letters of cur with a larger index
        if (cur >> j).count_ones() % 2 == 1 {
            sign = -sign;
        }
        if cur & grassmann::bit(j) != 0 {
            cur &= !grassmann::bit(j);
            th += 1;
        } else {
            cur |= grassmann::bit(j);
        }
    }
    (sign, th, cur)
}

/// Either side of [`eta_conversion`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Basis {
    Eta(EtaElement),
    W(UEnv),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    ToW,
    ToEta,
}

/// The linear change of generators `w ↔ η`, extended multiplicatively.
pub fn eta_conversion(x: &Basis, dir: Direction) -> Basis {
    match (x, dir) {
        (Basis::Eta(e), Direction::ToW) => Basis::W(eta_to_w(e)),
        (Basis::W(u), Direction::ToEta) => Basis::Eta(w_to_eta(u)),
        _ => x.clone(),
    }
}

pub fn eta_to_w(e: &EtaElement) -> UEnv {
    let mut out = UEnv::zero();
    for ((th, mask), c) in e.terms() {
        let mut u = UEnv::mono(PbwMonomial::new(*th, 0));
        for i in grassmann::indices(*mask) {
            u = u.mul(&eta_in_w(i));
        }
        out = out.add(&u.scale(c));
    }
    out
}

/// `w` generators in the `η` basis.
pub fn w_in_eta(w: W) -> EtaElement {
    let e = |i: usize, c: Gq| EtaElement::eta(i).scale(&c);
    let (one, i) = (Gq::one(), Gq::i());
    match w {
        W::W11 => e(2, one).add(&e(1, i)),
        W::W22 => e(2, one).add(&e(1, -i)),
        W::W12 => e(4, -one).add(&e(3, i)),
        W::W21 => e(4, one).add(&e(3, i)),
    }
}

pub fn w_to_eta(u: &UEnv) -> EtaElement {
    let mut out = EtaElement::zero();
    for (m, c) in u.terms() {
        let mut e = EtaElement::mono(m.theta, 0);
        for w in m.letters() {
            e = e.mul(&w_in_eta(w));
        }
        out = out.add(&e.scale(c));
    }
    out
}

/// Number of PBW monomials of degree `d`: `1, 4, 7, 8, 8, …`.
pub fn pbw_count(d: u32) -> usize {
    PbwMonomial::of_degree(d).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(UEnv::word(&[W::W11, W::W11]).is_zero());
        let expect = UEnv::word(&[W::W11, W::W22]).scale(&-Gq::one()).add(&UEnv::theta().scale(&Gq::from_int(4)));
        assert_eq!(UEnv::word(&[W::W22, W::W11]), expect);
        assert_eq!(UEnv::word(&[W::W21, W::W11]), UEnv::word(&[W::W11, W::W21]).scale(&-Gq::one()));
        assert_eq!(UEnv::word(&[W::W22, W::W11]).mul_gr(&UEnv::one()), expect);
        assert_eq!(UEnv::w(W::W22).mul_gr(&UEnv::w(W::W11)), UEnv::word(&[W::W11, W::W22]).scale(&-Gq::one()));
    }

    #[test]
    fn anticommutators() {
        let ac = |a: W, b: W| UEnv::w(a).supercommutator(&UEnv::w(b));
        assert_eq!(ac(W::W11, W::W22), UEnv::theta().scale(&Gq::from_int(4)));
        assert_eq!(ac(W::W12, W::W21), UEnv::theta().scale(&Gq::from_int(-4)));
        assert!(ac(W::W11, W::W21).is_zero());
        assert!(ac(W::W11, W::W11).is_zero());
    }

    #[test]
    fn eta_round_trip() {
        assert_eq!(eta_to_w(&EtaElement::eta(2)), UEnv::w(W::W11).add(&UEnv::w(W::W22)).scale(&Gq::ratio(1, 2)));
        assert_eq!(w_to_eta(&UEnv::w(W::W11)), EtaElement::eta(2).add(&EtaElement::eta(1).scale(&Gq::i())));
        assert_eq!(EtaElement::eta(1).mul(&EtaElement::eta(1)), EtaElement::mono(1, 0));
        for d in 0..=4 {
            for m in PbwMonomial::of_degree(d) {
                let u = UEnv::mono(m);
                assert_eq!(eta_to_w(&w_to_eta(&u)), u);
            }
        }
    }

    #[test]
    fn graded_dims() {
        let dims: Vec<usize> = (0..=8).map(pbw_count).collect();
        assert_eq!(dims, vec![1, 4, 7, 8, 8, 8, 8, 8, 8]);
    }

    #[test]
    fn text_round_trip() {
        let m: PbwMonomial = "Th^2 w11 w12".parse().unwrap();
        assert_eq!(m, PbwMonomial::new(2, W::W11.bit() | W::W12.bit()));
        assert_eq!(m.to_string().parse::<PbwMonomial>().unwrap(), m);
        assert!("w12 w11".parse::<PbwMonomial>().is_err());
    }
}
