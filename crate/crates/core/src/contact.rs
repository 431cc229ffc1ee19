//! The Lie superalgebra 𝔤 = K(1,4)₊ ⊕ ℂC on monomials `tᵐ ξ_I` and `C`.
//!
//! The bracket of `f, g ∈ ℂ[t] ⊗ Λ(4)` is
//!
//! ```text
//! [f,g] = (2f − Σ ξᵢ∂ᵢf) ∂ₜg − ∂ₜf (2g − Σ ξᵢ∂ᵢg) + (−1)^{p(f)} Σ ∂ᵢf ∂ᵢg
//! ```
//!
//! plus the central term `ψ(f,g)·C`, where `ψ(1, ξ₁₂₃₄) = −2`,
//! `ψ(ξᵢ, ∂ᵢξ₁₂₃₄) = −1`, extended by super skew-symmetry and zero elsewhere.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grassmann::{self, Mask};
use crate::linalg;
use crate::scalar::Gq;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u32) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn sum(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// `(−1)^{p(a)p(b)}`.
pub fn koszul(a: Parity, b: Parity) -> i64 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}

/// A basis monomial `tᵐ ξ_I`, or the central element `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContactMonomial {
    pub central: bool,
    pub tpow: u32,
    pub xi: Mask,
}

impl ContactMonomial {
    pub fn new(tpow: u32, xi: Mask) -> Self {
        ContactMonomial { central: false, tpow, xi }
    }

    pub fn central() -> Self {
        ContactMonomial { central: true, tpow: 0, xi: 0 }
    }

    /// `ξ_I` from a list of distinct indices in any order; the sign of the reordering is returned.
    pub fn xi_list(idx: &[usize]) -> (i64, Self) {
        let mut sign = 1;
        let mut mask = 0;
        for &i in idx {
            let (s, m) = grassmann::mul(mask, grassmann::bit(i)).expect("repeated index");
            sign *= s;
            mask = m;
        }
        (sign, ContactMonomial::new(0, mask))
    }

    /// `2·tpow + |I| − 2`; `C` has degree 0.
    pub fn degree(&self) -> i32 {
        if self.central {
            0
        } else {
            2 * self.tpow as i32 + grassmann::len(self.xi) as i32 - 2
        }
    }

    pub fn parity(&self) -> Parity {
        if self.central {
            Parity::Even
        } else {
            Parity::of(grassmann::len(self.xi))
        }
    }
}

impl fmt::Display for ContactMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.central {
            return write!(f, "C");
        }
        let t = match self.tpow {
            0 => String::new(),
            1 => "t".to_string(),
            m => format!("t^{m}"),
        };
        let x = if self.xi == 0 { String::new() } else { format!("xi{{{}}}", grassmann::fmt_indices(self.xi)) };
        match (t.is_empty(), x.is_empty()) {
            (true, true) => write!(f, "1"),
            (false, false) => write!(f, "{t} {x}"),
            _ => write!(f, "{t}{x}"),
        }
    }
}

impl FromStr for ContactMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad monomial `{s}`"));
        if s == "C" {
            return Ok(ContactMonomial::central());
        }
        if s == "1" {
            return Ok(ContactMonomial::new(0, 0));
        }
        let mut tpow = 0;
        let mut sign = 1;
        let mut xi = 0;
        for part in s.split_whitespace() {
            if let Some(rest) = part.strip_prefix('t') {
                tpow = if rest.is_empty() { 1 } else { rest.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())? };
            } else if let Some(rest) = part.strip_prefix("xi{").and_then(|r| r.strip_suffix('}')) {
                let idx: Vec<usize> = rest.split(',').map(|x| x.trim().parse::<usize>()).collect::<std::result::Result<_, _>>().map_err(|_| bad())?;
                if idx.iter().any(|&i| !(1..=4).contains(&i)) {
                    return Err(bad());
                }
                let mut mask = 0;
                for &i in &idx {
                    let (sg, m) = grassmann::mul(mask, grassmann::bit(i)).ok_or_else(bad)?;
                    sign *= sg;
                    mask = m;
                }
                xi = mask;
            } else {
                return Err(bad());
            }
        }
        if sign != 1 {
            // only canonical (increasing) index order is accepted in monomial text
            return Err(bad());
        }
        Ok(ContactMonomial::new(tpow, xi))
    }
}

/// A finitely supported combination of contact monomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SuperElement {
    terms: BTreeMap<ContactMonomial, Gq>,
}

impl SuperElement {
    pub fn zero() -> Self {
        SuperElement::default()
    }

    pub fn mono(m: ContactMonomial) -> Self {
        SuperElement::term(Gq::one(), m)
    }

    pub fn term(c: Gq, m: ContactMonomial) -> Self {
        let mut e = SuperElement::zero();
        e.add_term(m, &c);
        e
    }

    /// `c · tᵐ ξ_{idx}` with indices in any order.
    pub fn xi(c: Gq, tpow: u32, idx: &[usize]) -> Self {
        let (s, m) = ContactMonomial::xi_list(idx);
        SuperElement::term(c.scale_int(s), ContactMonomial { tpow, ..m })
    }

    pub fn central() -> Self {
        SuperElement::mono(ContactMonomial::central())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ContactMonomial, &Gq)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &ContactMonomial) -> Gq {
        self.terms.get(m).cloned().unwrap_or_else(Gq::zero)
    }

    pub fn add_term(&mut self, m: ContactMonomial, c: &Gq) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Gq::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &SuperElement) -> SuperElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &SuperElement) -> SuperElement {
        self.add(&other.scale(&-Gq::one()))
    }

    pub fn scale(&self, c: &Gq) -> SuperElement {
        if c.is_zero() {
            return SuperElement::zero();
        }
        SuperElement { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// `(degree, parity)`, or an error if the element is zero-free but mixed.
    pub fn grading(&self) -> Result<(i32, Parity)> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or_else(|| Error::Inhomogeneous("zero element".into()))?;
        let (d, p) = (first.degree(), first.parity());
        if it.any(|m| m.degree() != d || m.parity() != p) {
            return Err(Error::Inhomogeneous(self.to_string()));
        }
        Ok((d, p))
    }

    pub fn parity(&self) -> Result<Parity> {
        let mut it = self.terms.keys().map(|m| m.parity());
        let p = it.next().unwrap_or(Parity::Even);
        if it.any(|q| q != p) {
            return Err(Error::Inhomogeneous(self.to_string()));
        }
        Ok(p)
    }

    /// Splits into homogeneous components keyed by `(degree, parity)`.
    pub fn components(&self) -> BTreeMap<(i32, Parity), SuperElement> {
        let mut out: BTreeMap<(i32, Parity), SuperElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry((m.degree(), m.parity())).or_default().add_term(*m, c);
        }
        out
    }

    /// The part without the central element.
    pub fn non_central(&self) -> SuperElement {
        SuperElement { terms: self.terms.iter().filter(|(m, _)| !m.central).map(|(m, c)| (*m, c.clone())).collect() }
    }
}

impl fmt::Display for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})*{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SuperElement {
    type Err = Error;

    /// Parses sums like `(1/2)*xi{1,3} + (-1*i)*t xi{2} + C`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(SuperElement::zero());
        }
        let mut out = SuperElement::zero();
        for term in split_top_level(s) {
            let term = term.trim();
            let (c, m) = if let Some(rest) = term.strip_prefix('(') {
                let close = rest.find(')').ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?;
                let coeff: Gq = rest[..close].parse()?;
                let mono = rest[close + 1..].trim().strip_prefix('*').ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?;
                (coeff, mono.parse::<ContactMonomial>()?)
            } else if let Some((c, m)) = term.split_once('*') {
                (c.parse::<Gq>()?, m.parse::<ContactMonomial>()?)
            } else {
                (Gq::one(), term.parse::<ContactMonomial>()?)
            };
            out.add_term(m, &c);
        }
        Ok(out)
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    for (k, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' if depth == 0 && k > 0 && bytes[k - 1] == b' ' => {
                out.push(&s[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Contact part of the bracket of two non-central monomials.
fn bracket_monomials(f: &ContactMonomial, g: &ContactMonomial) -> SuperElement {
    let mut out = SuperElement::zero();
    if f.central || g.central {
        return out;
    }
    let (a, b) = (f.tpow as i64, g.tpow as i64);
    let (li, lj) = (grassmann::len(f.xi) as i64, grassmann::len(g.xi) as i64);
    // (2 − |I|)·b − a·(2 − |J|) times t^{a+b−1} ξ_I ξ_J
    let c1 = (2 - li) * b - a * (2 - lj);
    if c1 != 0 {
        if let Some((s, m)) = grassmann::mul(f.xi, g.xi) {
            out.add_term(ContactMonomial::new((a + b - 1) as u32, m), &Gq::from_int(c1 * s));
        }
    }
    let sign_f = if li % 2 == 0 { 1 } else { -1 };
    for i in 1..=4 {
        let (Some((s1, m1)), Some((s2, m2))) = (grassmann::deriv(i, f.xi), grassmann::deriv(i, g.xi)) else {
            continue;
        };
        if let Some((s3, m)) = grassmann::mul(m1, m2) {
            out.add_term(ContactMonomial::new((a + b) as u32, m), &Gq::from_int(sign_f * s1 * s2 * s3));
        }
    }
    out
}

/// The cocycle `ψ` on two basis monomials.
pub fn cocycle(f: &ContactMonomial, g: &ContactMonomial) -> Gq {
    if f.central || g.central || f.tpow != 0 || g.tpow != 0 {
        return Gq::zero();
    }
    let full = grassmann::FULL;
    if f.xi == 0 && g.xi == full {
        return Gq::from_int(-2);
    }
    if f.xi == full && g.xi == 0 {
        return Gq::from_int(2);
    }
    if grassmann::len(f.xi) == 1 && grassmann::len(g.xi) == 3 {
        let i = f.xi.trailing_zeros() as usize + 1;
        if let Some((s, m)) = grassmann::deriv(i, full) {
            if m == g.xi {
                return Gq::from_int(-s);
            }
        }
    }
    if grassmann::len(f.xi) == 3 && grassmann::len(g.xi) == 1 {
        // ψ(b,a) = −(−1)^{p(a)p(b)} ψ(a,b) = ψ(a,b) for odd a, b
        return cocycle(g, f);
    }
    Gq::zero()
}

/// Bracket of two basis monomials, including the central term.
pub fn bracket_basis(f: &ContactMonomial, g: &ContactMonomial) -> SuperElement {
    let mut out = bracket_monomials(f, g);
    let psi = cocycle(f, g);
    if !psi.is_zero() {
        out.add_term(ContactMonomial::central(), &psi);
    }
    out
}

/// The bracket of 𝔤, extended bilinearly.
pub fn contact_bracket(f: &SuperElement, g: &SuperElement) -> SuperElement {
    let mut out = SuperElement::zero();
    for (mf, cf) in f.terms() {
        for (mg, cg) in g.terms() {
            let b = bracket_basis(mf, mg);
            if b.is_zero() {
                continue;
            }
            let c = cf * cg;
            for (m, x) in b.terms() {
                out.add_term(*m, &(&c * x));
            }
        }
    }
    out
}

/// Named elements of 𝔤.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Named {
    Theta,
    Hx,
    Hy,
    Ex,
    Fx,
    Ey,
    Fy,
    E1,
    E2,
    T,
    C,
    G1LowestEven,
    G1LowestOdd,
}

impl Named {
    pub const ALL: [Named; 13] = [
        Named::Theta,
        Named::Hx,
        Named::Hy,
        Named::Ex,
        Named::Fx,
        Named::Ey,
        Named::Fy,
        Named::E1,
        Named::E2,
        Named::T,
        Named::C,
        Named::G1LowestEven,
        Named::G1LowestOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Named::Theta => "theta",
            Named::Hx => "hx",
            Named::Hy => "hy",
            Named::Ex => "ex",
            Named::Fx => "fx",
            Named::Ey => "ey",
            Named::Fy => "fy",
            Named::E1 => "e1",
            Named::E2 => "e2",
            Named::T => "t",
            Named::C => "C",
            Named::G1LowestEven => "g1_lowest_even",
            Named::G1LowestOdd => "g1_lowest_odd",
        }
    }
}

impl FromStr for Named {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Named::ALL.iter().copied().find(|n| n.name() == s).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

fn q(n: i64) -> Gq {
    Gq::from_int(n)
}

fn qi(n: i64) -> Gq {
    Gq::int_pair(0, n)
}

/// Exact expression of a named element.
pub fn named(n: Named) -> SuperElement {
    let half = Gq::ratio(1, 2);
    let xi2 = |c: Gq, i: usize, j: usize| SuperElement::xi(c, 0, &[i, j]);
    let sum = |parts: Vec<SuperElement>| parts.iter().fold(SuperElement::zero(), |a, b| a.add(b));
    match n {
        Named::Theta => SuperElement::xi(Gq::ratio(-1, 2), 0, &[]),
        Named::Hx => sum(vec![xi2(qi(-1), 1, 2), xi2(qi(1), 3, 4)]),
        Named::Hy => sum(vec![xi2(qi(-1), 1, 2), xi2(qi(-1), 3, 4)]),
        Named::Ex => sum(vec![xi2(q(-1), 1, 3), xi2(q(-1), 2, 4), xi2(qi(-1), 1, 4), xi2(qi(1), 2, 3)]).scale(&half),
        Named::Ey => sum(vec![xi2(q(-1), 1, 3), xi2(q(1), 2, 4), xi2(qi(1), 1, 4), xi2(qi(1), 2, 3)]).scale(&half),
        Named::Fx => sum(vec![xi2(q(1), 1, 3), xi2(q(1), 2, 4), xi2(qi(-1), 1, 4), xi2(qi(1), 2, 3)]).scale(&half),
        Named::Fy => sum(vec![xi2(q(1), 1, 3), xi2(q(-1), 2, 4), xi2(qi(1), 1, 4), xi2(qi(1), 2, 3)]).scale(&half),
        Named::E1 => named(Named::Ex).add(&named(Named::Ey)),
        Named::E2 => named(Named::Ex).sub(&named(Named::Ey)),
        Named::T => SuperElement::xi(q(1), 1, &[]),
        Named::C => SuperElement::central(),
        Named::G1LowestEven => sum(vec![SuperElement::xi(q(1), 1, &[1]), SuperElement::xi(qi(1), 1, &[2])]),
        Named::G1LowestOdd => sum(vec![SuperElement::xi(q(1), 0, &[1, 3, 4]), SuperElement::xi(qi(1), 0, &[2, 3, 4])]),
    }
}

pub fn named_element(name: &str) -> Result<SuperElement> {
    Ok(named(name.parse()?))
}

pub fn grading_and_parity(x: &SuperElement) -> Result<(i32, Parity)> {
    x.grading()
}

/// All basis monomials of 𝔤 with degree in `[lo, hi]`, `C` included when `0 ∈ [lo, hi]`.
pub fn basis_in_degrees(lo: i32, hi: i32) -> Vec<ContactMonomial> {
    let mut out = Vec::new();
    for tpow in 0..=((hi + 2).max(0) / 2) as u32 {
        for xi in 0..16u8 {
            let m = ContactMonomial::new(tpow, xi);
            if (lo..=hi).contains(&m.degree()) {
                out.push(m);
            }
        }
    }
    if (lo..=hi).contains(&0) {
        out.push(ContactMonomial::central());
    }
    out.sort_by_key(|m| (m.degree(), *m));
    out
}

/// The six basis elements `ξ_ij`, `i < j`, in lexicographic order.
pub fn xi_pairs() -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 1..=4 {
        for j in (i + 1)..=4 {
            v.push((i, j));
        }
    }
    v
}

/// The sl₂ ⊕ sl₂ generators in the order `ex, fx, hx, ey, fy, hy`.
pub const SL2_ORDER: [Named; 6] = [Named::Ex, Named::Fx, Named::Hx, Named::Ey, Named::Fy, Named::Hy];

/// Row `k` gives `ξ_{pair k}` as a combination of [`SL2_ORDER`], computed once
/// by inverting the definitions of `e, f, h` over ℚ(i).
pub fn xi_pair_to_sl2() -> &'static Vec<Vec<Gq>> {
    static CELL: OnceLock<Vec<Vec<Gq>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let pairs = xi_pairs();
        // m[r][k] = coefficient of ξ_{pair k} in SL2_ORDER[r]
        let m: Vec<Vec<Gq>> = SL2_ORDER
            .iter()
            .map(|&n| {
                let e = named(n);
                pairs.iter().map(|&(i, j)| e.coeff(&ContactMonomial::xi_list(&[i, j]).1)).collect()
            })
            .collect();
        // ξ = M⁻ᵀ·(e,f,h)
        let inv = linalg::invert(&m).expect("sl2 basis is a basis of the xi_ij span");
        (0..6).map(|k| (0..6).map(|r| inv[k][r].clone()).collect()).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xi(idx: &[usize]) -> SuperElement {
        SuperElement::xi(Gq::one(), 0, idx)
    }

    #[test]
    fn examples() {
        assert_eq!(contact_bracket(&xi(&[1]), &xi(&[1])), SuperElement::xi(q(-1), 0, &[]));
        assert!(contact_bracket(&named(Named::Theta), &xi(&[1])).is_zero());
        assert_eq!(contact_bracket(&xi(&[]), &xi(&[1, 2, 3, 4])), SuperElement::central().scale(&q(-2)));
        assert_eq!(named_element("theta").unwrap(), SuperElement::xi(Gq::ratio(-1, 2), 0, &[]));
        assert_eq!(named(Named::E1), xi(&[1, 3]).scale(&q(-1)).add(&xi(&[2, 3]).scale(&qi(1))));
        assert_eq!(named(Named::E2), xi(&[2, 4]).scale(&q(-1)).add(&xi(&[1, 4]).scale(&qi(-1))));
        assert!(named_element("nope").is_err());
    }

    #[test]
    fn gradings() {
        assert_eq!(xi(&[1]).grading().unwrap(), (-1, Parity::Odd));
        assert_eq!(named(Named::T).grading().unwrap(), (0, Parity::Even));
        assert_eq!(xi(&[1, 2, 3, 4]).grading().unwrap(), (2, Parity::Even));
        assert!(xi(&[1]).add(&xi(&[1, 2])).grading().is_err());
    }

    #[test]
    fn sl2_change_of_basis_inverts() {
        let table = xi_pair_to_sl2();
        for (k, &(i, j)) in xi_pairs().iter().enumerate() {
            let mut e = SuperElement::zero();
            for (r, &n) in SL2_ORDER.iter().enumerate() {
                e = e.add(&named(n).scale(&table[k][r]));
            }
            assert_eq!(e, xi(&[i, j]));
        }
    }

    #[test]
    fn text_round_trip() {
        let e = named(Named::Ex).add(&SuperElement::central()).add(&named(Named::G1LowestEven));
        assert_eq!(e.to_string().parse::<SuperElement>().unwrap(), e);
        assert_eq!("t^2 xi{1,3}".parse::<ContactMonomial>().unwrap(), ContactMonomial::new(2, 0b0101));
    }

    #[test]
    fn sl2_relations() {
        let b = |x: Named, y: Named| contact_bracket(&named(x), &named(y));
        for (e, f, h) in [(Named::Ex, Named::Fx, Named::Hx), (Named::Ey, Named::Fy, Named::Hy)] {
            assert_eq!(b(h, e), named(e).scale(&q(2)));
            assert_eq!(b(h, f), named(f).scale(&q(-2)));
            assert_eq!(b(e, f), named(h));
        }
        for x in [Named::Ex, Named::Fx, Named::Hx] {
            for y in [Named::Ey, Named::Fy, Named::Hy] {
                assert!(b(x, y).is_zero());
            }
        }
        for g in [Named::G1LowestEven, Named::G1LowestOdd] {
            // lowest weight vectors of the two irreducible pieces of 𝔤₁
            assert!(b(Named::Fx, g).is_zero());
            assert!(b(Named::Fy, g).is_zero());
        }
    }

    #[test]
    fn t_is_a_grading_element() {
        let t = named(Named::T);
        for m in basis_in_degrees(-2, 3) {
            let x = SuperElement::mono(m);
            let expect = if m.central { SuperElement::zero() } else { x.scale(&q(m.degree() as i64)) };
            assert_eq!(contact_bracket(&t, &x), expect, "{m}");
        }
    }

    #[test]
    fn super_jacobi_on_low_degrees() {
        let basis = basis_in_degrees(-2, 1);
        for a in &basis {
            for b in &basis {
                let sab = if a.parity().is_odd() && b.parity().is_odd() { q(1) } else { q(-1) };
                let (x, y) = (SuperElement::mono(*a), SuperElement::mono(*b));
                assert_eq!(contact_bracket(&y, &x), contact_bracket(&x, &y).scale(&sab));
                for c in &basis {
                    let z = SuperElement::mono(*c);
                    let lhs = contact_bracket(&x, &contact_bracket(&y, &z));
                    let r1 = contact_bracket(&contact_bracket(&x, &y), &z);
                    let r2 = contact_bracket(&y, &contact_bracket(&x, &z)).scale(&q(koszul(a.parity(), b.parity())));
                    assert_eq!(lhs, r1.add(&r2), "{a} {b} {c}");
                }
            }
        }
    }
}
