//! Characters `ch V = tr_V s^{−t}` of Verma modules and their irreducible
//! quotients, and the size read off from them.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homology::ComplexNode;
use crate::verma::{graded_basis, span_rank, ModuleCoords, Quadrant};

/// `Σ_d coeffs[d] · s^{leading_exponent + d}`, truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSeries {
    pub leading_exponent: BigRational,
    pub coeffs: Vec<i64>,
}

impl fmt::Display for CharacterSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in self.coeffs.iter().enumerate() {
            let e = &self.leading_exponent + BigRational::from_integer(BigInt::from(d));
            writeln!(f, "{e}: {c}")?;
        }
        Ok(())
    }
}

/// Which module a character describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharacterTarget {
    Verma(ModuleCoords),
    /// The irreducible quotient of the Verma module at this node.
    Irreducible(ModuleCoords),
}

/// The node carrying the irreducible module of type `q` with `F(m, n, ·, ·)`.
pub fn irreducible_node(q: Quadrant, m: u32, n: u32) -> Result<ModuleCoords> {
    let (m, n) = (m as i32, n as i32);
    match q {
        Quadrant::A => ModuleCoords::new(q, m, n),
        Quadrant::B => ModuleCoords::new(q, -m, n),
        Quadrant::C => ModuleCoords::new(q, -m, -n),
        Quadrant::D => ModuleCoords::new(q, m, -n),
    }
}

fn leading(module: ModuleCoords) -> BigRational {
    -module.mu_t().re().clone()
}

/// Graded dimensions up to `max_deg`.
///
/// The irreducible quotient is `M / Im(incoming)` in quadrants A and D and
/// `Im(outgoing)` in quadrants B and C.
pub fn character_series(target: CharacterTarget, max_deg: u32) -> Result<CharacterSeries> {
    let module = match target {
        CharacterTarget::Verma(m) | CharacterTarget::Irreducible(m) => m,
    };
    let node = match target {
        CharacterTarget::Verma(_) => None,
        CharacterTarget::Irreducible(m) => Some(ComplexNode::new(m)?),
    };
    let coeffs: Vec<Result<i64>> = (0..=max_deg)
        .into_par_iter()
        .map(|d| {
            let basis = graded_basis(module, d);
            let dim = basis.len() as i64;
            let Some(node) = &node else { return Ok(dim) };
            let c = match module.quadrant {
                Quadrant::A | Quadrant::D => {
                    let imgs = match &node.incoming {
                        Some(inc) if d >= inc.kind.degree_shift() => {
                            graded_basis(inc.source(), d - inc.kind.degree_shift()).iter().map(|v| inc.apply(v)).collect::<Result<Vec<_>>>()?
                        }
                        _ => Vec::new(),
                    };
                    dim - span_rank(&imgs) as i64
                }
                Quadrant::B | Quadrant::C => {
                    let out = node.outgoing.as_ref().ok_or_else(|| Error::InvalidMorphism(format!("no map leaves {module}")))?;
                    let imgs = basis.iter().map(|v| out.apply(v)).collect::<Result<Vec<_>>>()?;
                    span_rank(&imgs) as i64
                }
            };
            Ok(c)
        })
        .collect();
    Ok(CharacterSeries { leading_exponent: leading(module), coeffs: coeffs.into_iter().collect::<Result<_>>()? })
}

/// Closed-form size of the irreducible module of type `q`.
pub fn size_formula(q: Quadrant, m: u32, n: u32) -> i64 {
    let (m, n) = (m as i64, n as i64);
    match q {
        Quadrant::A => 2 * m * n + m + n,
        Quadrant::B => 2 * m * n + m + 3 * n + 2,
        Quadrant::C => 2 * m * n + 3 * m + 3 * n + 4,
        Quadrant::D => 2 * m * n + n + 3 * m + 2,
    }
}

/// Result of reading the size off a truncated character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SizeReport {
    /// Both parity classes were constant from the given degrees on.
    Stabilized { size: BigRational, even_from: usize, odd_from: usize },
    NotStabilized,
}

impl fmt::Display for SizeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SizeReport::Stabilized { size, even_from, odd_from } => write!(f, "{size} (stable from degrees {even_from}/{odd_from})"),
            SizeReport::NotStabilized => write!(f, "not stabilized"),
        }
    }
}

/// Number of consecutive agreements a parity class needs at its tail.
pub const AGREEMENTS: usize = 3;

/// Degree from which the coefficients of one parity stay constant, if the
/// tail shows at least [`AGREEMENTS`] agreements.
fn stable_from(coeffs: &[i64], parity: usize) -> Option<(usize, i64)> {
    let idx: Vec<usize> = (parity..coeffs.len()).step_by(2).collect();
    let last = *coeffs.get(*idx.last()?)?;
    let mut start = idx.len() - 1;
    while start > 0 && coeffs[idx[start - 1]] == last {
        start -= 1;
    }
    (idx.len() - 1 - start >= AGREEMENTS).then_some((idx[start], last))
}

/// `size = ¼ lim (1 − s²) ch`, from the stabilized coefficients.
pub fn size_from_series(ch: &CharacterSeries) -> SizeReport {
    match (stable_from(&ch.coeffs, 0), stable_from(&ch.coeffs, 1)) {
        (Some((e, ce)), Some((o, co))) => SizeReport::Stabilized { size: BigRational::new(BigInt::from(ce + co), BigInt::from(4)), even_from: e, odd_from: o },
        _ => SizeReport::NotStabilized,
    }
}

/// Truncated power series arithmetic on integer coefficients.
mod series {
    pub fn mul(a: &[i64], b: &[i64], len: usize) -> Vec<i64> {
        let mut out = vec![0; len];
        for (i, x) in a.iter().enumerate().take(len) {
            for (j, y) in b.iter().enumerate().take(len - i) {
                out[i + j] += x * y;
            }
        }
        out
    }

    pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
        (0..a.len().max(b.len())).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect()
    }

    pub fn scale(a: &[i64], c: i64) -> Vec<i64> {
        a.iter().map(|x| x * c).collect()
    }

    pub fn shift(a: &[i64], k: usize, len: usize) -> Vec<i64> {
        let mut out = vec![0; len];
        for (i, x) in a.iter().enumerate() {
            if i + k < len {
                out[i + k] = *x;
            }
        }
        out
    }

    /// `(1 + s)^k` for any integer `k`.
    pub fn one_plus_s_pow(k: i64, len: usize) -> Vec<i64> {
        // generalized binomial coefficients C(k, j)
        let mut out = vec![0; len];
        let mut c: i128 = 1;
        for (j, slot) in out.iter_mut().enumerate() {
            *slot = c as i64;
            c = c * (k as i128 - j as i128) / (j as i128 + 1);
        }
        out
    }

    /// `1 / (1 − s²)`.
    pub fn geometric_even(len: usize) -> Vec<i64> {
        (0..len).map(|i| if i % 2 == 0 { 1 } else { 0 }).collect()
    }

    /// `(1+s)⁴/(1−s²) · Σ c_k (1+s)^{−k}`.
    pub fn verma_times(terms: &[(i64, i64)], len: usize) -> Vec<i64> {
        let base = mul(&one_plus_s_pow(4, len), &geometric_even(len), len);
        let mut inner = vec![0; len];
        for (c, k) in terms {
            inner = add(&inner, &scale(&one_plus_s_pow(-k, len), *c));
        }
        mul(&base, &inner, len)
    }
}

/// `ch M` from its product form: `dim F · (1+s)⁴/(1−s²)`.
pub fn verma_closed_form(module: ModuleCoords, max_deg: u32) -> CharacterSeries {
    let len = max_deg as usize + 1;
    let coeffs = series::verma_times(&[(module.dim_v() as i64, 0)], len);
    CharacterSeries { leading_exponent: leading(module), coeffs }
}

/// Closed-form character of the irreducible module of type A.
pub fn type_a_closed_form(m: u32, n: u32, max_deg: u32) -> CharacterSeries {
    let len = max_deg as usize + 1;
    let (mi, ni) = (m as i64, n as i64);
    let coeffs = series::verma_times(&[(2, 3), (mi + ni - 1, 2), (mi * ni, 1)], len);
    let leading_exponent = BigRational::new(BigInt::from(mi + ni), BigInt::from(2));
    CharacterSeries { leading_exponent, coeffs }
}

/// Closed-form character of the irreducible module of type D.
pub fn type_d_closed_form(m: u32, n: u32, max_deg: u32) -> CharacterSeries {
    let len = max_deg as usize + 1;
    let (mi, ni) = (m as i64, n as i64);
    let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
    let first = series::verma_times(&[(-2, 3), (3 + ni - mi, 2), (mi * ni + 2 * mi, 1)], len);
    let tail = series::verma_times(&[(-2, 3), (-mi - ni + 1, 2), (mi + ni + 1, 1)], len);
    let tail = series::scale(&series::shift(&tail, n as usize + 1, len), -sign);
    let second = series::verma_times(&[(2, 3), (mi + ni + 1, 2)], len);
    let second = series::scale(&series::shift(&second, n as usize + 2, len), sign);
    let coeffs = series::add(&series::add(&first, &tail), &second);
    let leading_exponent = BigRational::new(BigInt::from(-2 - ni + mi), BigInt::from(2));
    CharacterSeries { leading_exponent, coeffs }
}

/// Whether every coefficient is a nonnegative integer.
pub fn is_nonnegative(ch: &CharacterSeries) -> bool {
    ch.coeffs.iter().all(|c| !c.is_negative())
}

/// Size as an integer, when it is one.
pub fn integral_size(r: &SizeReport) -> Option<i64> {
    match r {
        SizeReport::Stabilized { size, .. } if size.is_integer() => size.to_integer().try_into().ok(),
        _ => None,
    }
}

impl CharacterSeries {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}
