//! Weight modules `V_X^{m,n}` and Verma modules `M_X^{m,n} = U(𝔤₋) ⊗ V_X^{m,n}`.
//!
//! `V_X` is a polynomial ring in four generators; quadrant `A` uses `x, y`,
//! `B` uses `∂x, y`, `C` uses `∂x, ∂y`, `D` uses `x, ∂y`. Exponents are stored
//! as `[a₁, a₂, b₁, b₂]` and the bidegree is `(±(a₁+a₂), ±(b₁+b₂))`, with a
//! minus sign on derivative-type generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::contact::{self, contact_bracket, koszul, ContactMonomial, Named, SuperElement};
use crate::enveloping::{self, PbwMonomial, UEnv, W};
use crate::error::{Error, Result};
use crate::grassmann;
use crate::linalg;
use crate::scalar::Gq;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quadrant {
    A,
    B,
    C,
    D,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::A, Quadrant::B, Quadrant::C, Quadrant::D];

    /// True when the x-generators are `∂x₁, ∂x₂`.
    pub fn x_dual(self) -> bool {
        matches!(self, Quadrant::B | Quadrant::C)
    }

    /// True when the y-generators are `∂y₁, ∂y₂`.
    pub fn y_dual(self) -> bool {
        matches!(self, Quadrant::C | Quadrant::D)
    }

    /// The `[i, j]` shifts of the `t` and `C` actions.
    pub fn shift(self) -> (i64, i64) {
        match self {
            Quadrant::A => (0, 0),
            Quadrant::B => (1, -1),
            Quadrant::C => (2, 0),
            Quadrant::D => (1, 1),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Quadrant::A => 'A',
            Quadrant::B => 'B',
            Quadrant::C => 'C',
            Quadrant::D => 'D',
        }
    }
}

impl FromStr for Quadrant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Quadrant::A),
            "B" | "b" => Ok(Quadrant::B),
            "C" | "c" => Ok(Quadrant::C),
            "D" | "d" => Ok(Quadrant::D),
            _ => Err(Error::Parse(format!("unknown quadrant `{s}`"))),
        }
    }
}

/// Exponents `[a₁, a₂, b₁, b₂]` of a weight monomial.
pub type VMono = [u32; 4];

/// A polynomial in `V_X`.
pub type VPoly = BTreeMap<VMono, Gq>;

fn vpoly_add(p: &mut VPoly, m: VMono, c: &Gq) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(m).or_insert_with(Gq::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&m);
    }
}

/// The module `M_X^{m,n}` in signed coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleCoords {
    pub quadrant: Quadrant,
    pub m: i32,
    pub n: i32,
}

impl ModuleCoords {
    /// Checks the sign conventions of the quadrant.
    pub fn new(quadrant: Quadrant, m: i32, n: i32) -> Result<Self> {
        let ok = match quadrant {
            Quadrant::A => m >= 0 && n >= 0,
            Quadrant::B => m <= 0 && n >= 0,
            Quadrant::C => m <= 0 && n <= 0,
            Quadrant::D => m >= 0 && n <= 0,
        };
        if !ok {
            return Err(Error::InvalidModule(format!("{}:{m},{n}", quadrant.letter())));
        }
        Ok(ModuleCoords { quadrant, m, n })
    }

    /// `|m|` and `|n|`: the `sl₂ ⊕ sl₂` highest weight.
    pub fn abs(&self) -> (u32, u32) {
        (self.m.unsigned_abs(), self.n.unsigned_abs())
    }

    pub fn dim_v(&self) -> usize {
        let (a, b) = self.abs();
        ((a + 1) * (b + 1)) as usize
    }

    /// Monomial basis of `V_X^{m,n}`, highest `h`-weight first.
    pub fn v_basis(&self) -> Vec<VMono> {
        let (a, b) = self.abs();
        let mut out = Vec::new();
        for i in 0..=a {
            for j in 0..=b {
                let (a1, a2) = if self.quadrant.x_dual() { (i, a - i) } else { (a - i, i) };
                let (b1, b2) = if self.quadrant.y_dual() { (j, b - j) } else { (b - j, j) };
                out.push([a1, a2, b1, b2]);
            }
        }
        out
    }

    pub fn highest_monomial(&self) -> VMono {
        self.v_basis()[0]
    }

    /// Eigenvalue of `t` on `V_X^{m,n}`.
    pub fn mu_t(&self) -> Gq {
        Gq::ratio(-(self.m + self.n) as i64, 2) + Gq::from_int(self.quadrant.shift().0)
    }

    /// Eigenvalue of `C` on `V_X^{m,n}`.
    pub fn mu_c(&self) -> Gq {
        Gq::ratio((self.m - self.n) as i64, 2) + Gq::from_int(self.quadrant.shift().1)
    }

    /// The highest weight `(m, n, μ_t, μ_C)` of `V_X^{m,n}` as a `𝔤₀`-module.
    pub fn highest_weight(&self) -> (u32, u32, Gq, Gq) {
        let (a, b) = self.abs();
        (a, b, self.mu_t(), self.mu_c())
    }

    pub fn contains(&self, f: &VMono) -> bool {
        let (a, b) = self.abs();
        f[0] + f[1] == a && f[2] + f[3] == b
    }

    /// `(h_x, h_y)` weight of a monomial.
    pub fn v_weight(&self, f: &VMono) -> (i64, i64) {
        let hx = f[0] as i64 - f[1] as i64;
        let hy = f[2] as i64 - f[3] as i64;
        (if self.quadrant.x_dual() { -hx } else { hx }, if self.quadrant.y_dual() { -hy } else { hy })
    }

    /// Shifts by `(dm, dn)` inside the same quadrant.
    pub fn shifted(&self, dm: i32, dn: i32) -> Result<Self> {
        ModuleCoords::new(self.quadrant, self.m + dm, self.n + dn)
    }

    /// Formats a monomial with this quadrant's generator names.
    pub fn fmt_mono(&self, f: &VMono) -> String {
        fmt_vmono(self.quadrant, f)
    }

    /// Finds the module with `V_X ≅ F(m, n, μ_t, μ_C)`, if any.
    pub fn from_weight(m: u32, n: u32, mu_t: &Gq, mu_c: &Gq) -> Option<Self> {
        let (mi, ni) = (m as i32, n as i32);
        [
            ModuleCoords::new(Quadrant::A, mi, ni),
            ModuleCoords::new(Quadrant::B, -mi, ni),
            ModuleCoords::new(Quadrant::C, -mi, -ni),
            ModuleCoords::new(Quadrant::D, mi, -ni),
        ]
        .into_iter()
        .flatten()
        .find(|c| &c.mu_t() == mu_t && &c.mu_c() == mu_c)
    }
}

impl fmt::Display for ModuleCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{},{}", self.quadrant.letter(), self.m, self.n)
    }
}

impl FromStr for ModuleCoords {
    type Err = Error;

    /// `A:1,2`, `C:-1,-1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad module `{s}`, expected X:m,n"));
        let (q, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let (m, n) = rest.split_once(',').ok_or_else(bad)?;
        let m: i32 = m.trim().parse().map_err(|_| bad())?;
        let n: i32 = n.trim().parse().map_err(|_| bad())?;
        ModuleCoords::new(q.parse()?, m, n)
    }
}

fn var_names(q: Quadrant) -> [&'static str; 4] {
    match (q.x_dual(), q.y_dual()) {
        (false, false) => ["x1", "x2", "y1", "y2"],
        (true, false) => ["dx1", "dx2", "y1", "y2"],
        (true, true) => ["dx1", "dx2", "dy1", "dy2"],
        (false, true) => ["x1", "x2", "dy1", "dy2"],
    }
}

pub fn fmt_vmono(q: Quadrant, f: &VMono) -> String {
    let names = var_names(q);
    let parts: Vec<String> = (0..4)
        .filter(|&k| f[k] > 0)
        .map(|k| if f[k] == 1 { names[k].to_string() } else { format!("{}^{}", names[k], f[k]) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

pub fn parse_vmono(q: Quadrant, s: &str) -> Result<VMono> {
    let names = var_names(q);
    let mut out = [0u32; 4];
    let s = s.trim();
    if s == "1" {
        return Ok(out);
    }
    for tok in s.split_whitespace() {
        let (name, exp) = match tok.split_once('^') {
            Some((a, e)) => (a, e.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?),
            None => (tok, 1),
        };
        let k = names.iter().position(|n| *n == name).ok_or_else(|| Error::Parse(format!("unknown generator `{name}` for quadrant {}", q.letter())))?;
        out[k] += exp;
    }
    Ok(out)
}

/// One generator `x_i ∂x_j` (or its `y` analogue) applied to a monomial.
fn apply_xdx(dual: bool, offset: usize, i: usize, j: usize, f: &VMono) -> Option<(i64, VMono)> {
    let (i, j) = (offset + i, offset + j);
    let mut g = *f;
    if !dual {
        // derivation: x_i ∂x_j x_k = δ_jk x_i
        let c = f[j] as i64;
        if c == 0 {
            return None;
        }
        g[j] -= 1;
        g[i] += 1;
        Some((c, g))
    } else {
        // x_i ∂x_j . ∂x_k = −δ_ik ∂x_j
        let c = -(f[i] as i64);
        if c == 0 {
            return None;
        }
        g[i] -= 1;
        g[j] += 1;
        Some((c, g))
    }
}

/// The six `sl₂ ⊕ sl₂` generators as operators `Σ c·x_i∂x_j` on `V_X`.
fn sl2_operator(n: Named) -> (bool, Vec<(i64, usize, usize)>) {
    // (acts on y, terms (coefficient, i, j) meaning x_i ∂x_j with 0-based i, j)
    match n {
        Named::Ex => (false, vec![(1, 0, 1)]),
        Named::Fx => (false, vec![(1, 1, 0)]),
        Named::Hx => (false, vec![(1, 0, 0), (-1, 1, 1)]),
        Named::Ey => (true, vec![(1, 0, 1)]),
        Named::Fy => (true, vec![(1, 1, 0)]),
        Named::Hy => (true, vec![(1, 0, 0), (-1, 1, 1)]),
        _ => unreachable!("not an sl2 generator"),
    }
}

fn apply_sl2(n: Named, q: Quadrant, f: &VMono) -> Vec<(i64, VMono)> {
    let (on_y, terms) = sl2_operator(n);
    let (dual, offset) = if on_y { (q.y_dual(), 2) } else { (q.x_dual(), 0) };
    terms.into_iter().filter_map(|(c, i, j)| apply_xdx(dual, offset, i, j, f).map(|(s, g)| (c * s, g))).collect()
}

/// Eigenvalues of `t` and `C` on a monomial of `V_X`.
fn t_c_eigen(q: Quadrant, f: &VMono) -> (Gq, Gq) {
    let ex = (f[0] + f[1]) as i64 * if q.x_dual() { -1 } else { 1 };
    let ey = (f[2] + f[3]) as i64 * if q.y_dual() { -1 } else { 1 };
    let (i, j) = q.shift();
    (Gq::ratio(-(ex + ey), 2) + Gq::from_int(i), Gq::ratio(ex - ey, 2) + Gq::from_int(j))
}

/// Action of a `𝔤₀` element on a polynomial of `V_X`.
pub fn g0_action(g: &SuperElement, q: Quadrant, f: &VPoly) -> Result<VPoly> {
    let mut out = VPoly::new();
    let table = contact::xi_pair_to_sl2();
    let pairs = contact::xi_pairs();
    for (m, c) in g.terms() {
        if m.degree() != 0 {
            return Err(Error::NotInG0);
        }
        for (mono, fc) in f {
            let cf = c * fc;
            if m.central || m.tpow == 1 {
                let (t, cc) = t_c_eigen(q, mono);
                vpoly_add(&mut out, *mono, &(&cf * if m.central { &cc } else { &t }));
                continue;
            }
            let k = pairs.iter().position(|&(i, j)| grassmann::bit(i) | grassmann::bit(j) == m.xi).expect("degree-0 pair");
            for (r, n) in contact::SL2_ORDER.iter().enumerate() {
                let coef = &table[k][r];
                if coef.is_zero() {
                    continue;
                }
                for (s, g2) in apply_sl2(*n, q, mono) {
                    vpoly_add(&mut out, g2, &(&cf * coef).scale_int(s));
                }
            }
        }
    }
    Ok(out)
}

/// An element of `M_X^{m,n}`: terms `u ⊗ f`.
#[derive(Clone, PartialEq, Eq)]
pub struct VermaVector {
    pub module: ModuleCoords,
    terms: BTreeMap<(PbwMonomial, VMono), Gq>,
}

/// Raw term map used while computing.
pub type Terms = BTreeMap<(PbwMonomial, VMono), Gq>;

pub(crate) fn terms_add(t: &mut Terms, k: (PbwMonomial, VMono), c: &Gq) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(k).or_insert_with(Gq::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&k);
    }
}

impl VermaVector {
    pub fn zero(module: ModuleCoords) -> Self {
        VermaVector { module, terms: BTreeMap::new() }
    }

    /// `c · u ⊗ f`; panics if `f` does not lie in the module.
    pub fn term(module: ModuleCoords, c: Gq, u: PbwMonomial, f: VMono) -> Self {
        assert!(module.contains(&f), "monomial {f:?} not in {module}");
        let mut v = Self::zero(module);
        terms_add(&mut v.terms, (u, f), &c);
        v
    }

    /// `u ⊗ f` for an arbitrary `u ∈ U(𝔤₋)`.
    pub fn tensor(module: ModuleCoords, u: &UEnv, f: VMono) -> Self {
        let mut v = Self::zero(module);
        for (m, c) in u.terms() {
            v.add_term(*m, f, c);
        }
        v
    }

    pub fn from_terms(module: ModuleCoords, terms: Terms) -> Self {
        VermaVector { module, terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PbwMonomial, VMono), &Gq)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> Terms {
        self.terms
    }

    pub fn coeff(&self, u: &PbwMonomial, f: &VMono) -> Gq {
        self.terms.get(&(*u, *f)).cloned().unwrap_or_else(Gq::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, u: PbwMonomial, f: VMono, c: &Gq) {
        terms_add(&mut self.terms, (u, f), c);
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((u, f), c) in &other.terms {
            out.add_term(*u, *f, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Gq::one()))
    }

    pub fn scale(&self, c: &Gq) -> Self {
        let mut out = Self::zero(self.module);
        for ((u, f), x) in &self.terms {
            out.add_term(*u, *f, &(x * c));
        }
        out
    }

    /// Left multiplication of the `U(𝔤₋)` factor.
    pub fn left_mul(&self, u: &UEnv) -> Self {
        let mut out = Self::zero(self.module);
        for ((p, f), c) in &self.terms {
            for (m, x) in u.mul(&UEnv::mono(*p)).terms() {
                out.add_term(*m, *f, &(c * x));
            }
        }
        out
    }

    /// The common degree of all terms; zero vectors and mixed degrees are errors.
    pub fn degree(&self) -> Result<u32> {
        let mut it = self.terms.keys().map(|(u, _)| u.degree());
        let d = it.next().ok_or_else(|| Error::Inhomogeneous("zero vector".into()))?;
        if it.any(|e| e != d) {
            return Err(Error::Inhomogeneous(self.to_string()));
        }
        Ok(d)
    }

    /// Is `self` a scalar multiple of `other` (both nonzero)?
    pub fn is_multiple_of(&self, other: &Self) -> bool {
        let Some(((k, f), c)) = other.terms.iter().next() else { return self.is_zero() };
        let ratio = self.coeff(k, f).checked_div(c).unwrap_or_else(|_| Gq::zero());
        !ratio.is_zero() && *self == other.scale(&ratio)
    }
}

impl fmt::Display for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((u, m), c)| format!("({c})*{u} (x) {}", self.module.fmt_mono(m))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.module, self)
    }
}

/// Parses `(c)*Th^1 w11 (x) x1^2 y1 + …` in the given module.
pub fn parse_verma(module: ModuleCoords, s: &str) -> Result<VermaVector> {
    let mut v = VermaVector::zero(module);
    if s.trim() == "0" {
        return Ok(v);
    }
    for term in s.split(" + ") {
        let term = term.trim();
        let (c, rest) = match term.strip_prefix('(') {
            Some(r) => {
                let close = r.find(")*").ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?;
                (r[..close].parse::<Gq>()?, &r[close + 2..])
            }
            None => (Gq::one(), term),
        };
        let (u, f) = rest.split_once("(x)").ok_or_else(|| Error::Parse(format!("missing (x) in `{term}`")))?;
        let u: PbwMonomial = u.parse()?;
        let f = parse_vmono(module.quadrant, f)?;
        if !module.contains(&f) {
            return Err(Error::InvalidModule(format!("{} not in {module}", fmt_vmono(module.quadrant, &f))));
        }
        v.add_term(u, f, &c);
    }
    Ok(v)
}

/// Computes `a · (u ⊗ f)` for basis monomials, memoizing on `(a, u, f)`.
struct Actor {
    module: ModuleCoords,
    cache: HashMap<(ContactMonomial, PbwMonomial, VMono), Terms>,
}

impl Actor {
    fn new(module: ModuleCoords) -> Self {
        Actor { module, cache: HashMap::new() }
    }

    fn act_element(&mut self, a: &SuperElement, u: PbwMonomial, f: VMono, out: &mut Terms, scale: &Gq) {
        for (m, c) in a.terms() {
            let r = self.act_mono(*m, u, f);
            let k = scale * c;
            for (key, x) in &r {
                terms_add(out, *key, &(&k * x));
            }
        }
    }

    fn act_mono(&mut self, a: ContactMonomial, u: PbwMonomial, f: VMono) -> Terms {
        if let Some(r) = self.cache.get(&(a, u, f)) {
            return r.clone();
        }
        let mut out = Terms::new();
        if u == PbwMonomial::ONE {
            let deg = a.degree();
            if deg < 0 {
                let img = enveloping::from_negative(&SuperElement::mono(a)).expect("negative element");
                for (p, c) in img.terms() {
                    terms_add(&mut out, (*p, f), c);
                }
            } else if deg == 0 {
                let mut p = VPoly::new();
                p.insert(f, Gq::one());
                let r = g0_action(&SuperElement::mono(a), self.module.quadrant, &p).expect("degree zero");
                for (g, c) in r {
                    terms_add(&mut out, (PbwMonomial::ONE, g), &c);
                }
            }
        } else {
            // u = η · rest with η the leftmost PBW factor
            let (eta_elem, eta_u, rest) = if u.theta > 0 {
                (contact::named(Named::Theta), UEnv::theta(), PbwMonomial::new(u.theta - 1, u.flags))
            } else {
                let w = u.letters().next().expect("nonempty word");
                (w.as_element(), UEnv::w(w), PbwMonomial::new(0, u.flags & !w.bit()))
            };
            let br = contact_bracket(&SuperElement::mono(a), &eta_elem);
            self.act_element(&br, rest, f, &mut out, &Gq::one());
            let inner = self.act_mono(a, rest, f);
            let eta_parity = if u.theta > 0 { contact::Parity::Even } else { contact::Parity::Odd };
            let sign = Gq::from_int(koszul(a.parity(), eta_parity));
            for ((p, g), c) in &inner {
                for (m, x) in eta_u.mul(&UEnv::mono(*p)).terms() {
                    terms_add(&mut out, (*m, *g), &(&(c * x) * &sign));
                }
            }
        }
        self.cache.insert((a, u, f), out.clone());
        out
    }
}

/// The `𝔤`-action on `M_X^{m,n}`.
pub fn act(g: &SuperElement, v: &VermaVector) -> VermaVector {
    let mut actor = Actor::new(v.module);
    let mut out = Terms::new();
    for ((u, f), c) in v.terms() {
        actor.act_element(g, *u, *f, &mut out, c);
    }
    VermaVector::from_terms(v.module, out)
}

/// Acts with each of `gens` on each of `vs`, sharing one memo table.
pub fn act_many(gens: &[SuperElement], vs: &[VermaVector]) -> Vec<Vec<VermaVector>> {
    let Some(first) = vs.first() else { return Vec::new() };
    let mut actor = Actor::new(first.module);
    vs.iter()
        .map(|v| {
            gens.iter()
                .map(|g| {
                    let mut out = Terms::new();
                    for ((u, f), c) in v.terms() {
                        actor.act_element(g, *u, *f, &mut out, c);
                    }
                    VermaVector::from_terms(v.module, out)
                })
                .collect()
        })
        .collect()
}

/// Basis keys `(u, f)` of the degree-`d` piece, ordered by `u` then `f`.
pub fn graded_keys(module: ModuleCoords, d: u32) -> Vec<(PbwMonomial, VMono)> {
    let vb = module.v_basis();
    let mut out = Vec::new();
    for u in PbwMonomial::of_degree(d) {
        for f in &vb {
            out.push((u, *f));
        }
    }
    out
}

pub fn graded_basis(module: ModuleCoords, d: u32) -> Vec<VermaVector> {
    graded_keys(module, d).into_iter().map(|(u, f)| VermaVector::term(module, Gq::one(), u, f)).collect()
}

/// Dimension of the span of `vs`.
pub fn span_rank(vs: &[VermaVector]) -> usize {
    let mut index = HashMap::new();
    let rows: Vec<linalg::SparseVec> = vs
        .iter()
        .map(|v| {
            linalg::sparse_from(v.terms().map(|(k, c)| {
                let n = index.len();
                (*index.entry(*k).or_insert(n), c.clone())
            }))
        })
        .collect();
    linalg::rank(&rows)
}

/// Whether `v` lies in the span of `vs`.
pub fn in_span(v: &VermaVector, vs: &[VermaVector]) -> bool {
    let mut all = vs.to_vec();
    let r = span_rank(&all);
    all.push(v.clone());
    span_rank(&all) == r
}

/// `(h_x, h_y)` weight of `w` letters.
pub fn w_weight(w: W) -> (i64, i64) {
    match w {
        W::W11 => (1, 1),
        W::W22 => (-1, -1),
        W::W12 => (1, -1),
        W::W21 => (-1, 1),
    }
}

/// `(h_x, h_y)` weight of a basis key.
pub fn key_weight(module: &ModuleCoords, u: &PbwMonomial, f: &VMono) -> (i64, i64) {
    let (mut a, mut b) = module.v_weight(f);
    for w in u.letters() {
        let (x, y) = w_weight(w);
        a += x;
        b += y;
    }
    (a, b)
}

/// Which generators of `𝔤>0` a singularity test uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularMode {
    /// `e₁, e₂` and the two lowest vectors of `𝔤₁`.
    HighestWeight,
    /// All eight basis elements of `𝔤₁`.
    Full,
}

pub fn singular_generators(mode: SingularMode) -> Vec<SuperElement> {
    match mode {
        SingularMode::HighestWeight => [Named::E1, Named::E2, Named::G1LowestEven, Named::G1LowestOdd].into_iter().map(contact::named).collect(),
        SingularMode::Full => contact::basis_in_degrees(1, 1).into_iter().map(SuperElement::mono).collect(),
    }
}

pub fn is_singular(v: &VermaVector, mode: SingularMode) -> bool {
    singular_generators(mode).iter().all(|g| act(g, v).is_zero())
}

/// Basis of the singular vectors of degree `d`, each normalized so that its
/// first nonzero coordinate in [`graded_keys`] order is 1.
///
/// Highest-weight mode solves weight space by weight space; full mode solves
/// on the whole graded piece.
pub fn singular_space(module: ModuleCoords, d: u32, mode: SingularMode) -> Vec<VermaVector> {
    let keys = graded_keys(module, d);
    let gens = singular_generators(mode);
    let groups: Vec<Vec<usize>> = match mode {
        SingularMode::Full => vec![(0..keys.len()).collect()],
        SingularMode::HighestWeight => {
            let mut by_w: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
            for (k, (u, f)) in keys.iter().enumerate() {
                by_w.entry(key_weight(&module, u, f)).or_default().push(k);
            }
            by_w.into_values().collect()
        }
    };
    let mut actor = Actor::new(module);
    let mut out = Vec::new();
    for group in groups {
        let mut index: HashMap<(usize, PbwMonomial, VMono), usize> = HashMap::new();
        let images: Vec<linalg::SparseVec> = group
            .iter()
            .map(|&k| {
                let (u, f) = keys[k];
                let mut entries = Vec::new();
                for (gi, g) in gens.iter().enumerate() {
                    let mut t = Terms::new();
                    actor.act_element(g, u, f, &mut t, &Gq::one());
                    for ((p, h), c) in t {
                        let n = index.len();
                        let idx = *index.entry((gi, p, h)).or_insert(n);
                        entries.push((idx, c));
                    }
                }
                linalg::sparse_from(entries)
            })
            .collect();
        for rel in linalg::kernel(&images) {
            let mut v = VermaVector::zero(module);
            for (j, c) in rel {
                let (u, f) = keys[group[j]];
                v.add_term(u, f, &c);
            }
            out.push(v);
        }
    }
    // normalize in global key order
    let pos: HashMap<(PbwMonomial, VMono), usize> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let rows: Vec<linalg::SparseVec> = out.iter().map(|v| linalg::sparse_from(v.terms().map(|(k, c)| (pos[k], c.clone())))).collect();
    linalg::rref(&rows)
        .into_iter()
        .map(|r| {
            let mut v = VermaVector::zero(module);
            for (j, c) in r {
                let (u, f) = keys[j];
                v.add_term(u, f, &c);
            }
            v
        })
        .collect()
}
