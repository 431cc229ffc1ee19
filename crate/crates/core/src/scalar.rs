//! Gaussian rationals: the field ℚ(i) with arbitrary-precision parts.
//!
//! Both components are kept as reduced [`BigRational`]s, so equality is
//! structural. Text form is `a/b+c/d*i`; either part may be omitted.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gq {
    re: BigRational,
    im: BigRational,
}

/// The four field operations exposed through [`field_arithmetic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to `a` and `b`. Division by zero is reported, not panicked.
pub fn field_arithmetic(a: &Gq, b: &Gq, op: FieldOp) -> Result<Gq> {
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a.checked_div(b)?,
    })
}

impl Gq {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gq { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Gq { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Gq {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// `re + im·i` from machine integers.
    pub fn int_pair(re: i64, im: i64) -> Self {
        Gq {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    pub fn i() -> Self {
        Gq::int_pair(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        Gq { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Returns the value as an `i64` when it is a real integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.im.is_zero() || !self.re.is_integer() {
            return None;
        }
        i64::try_from(self.re.to_integer()).ok()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Gq { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn checked_div(&self, rhs: &Gq) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Multiplies by `n`, avoiding a full complex product.
    pub fn scale_int(&self, n: i64) -> Self {
        let k = BigRational::from_integer(BigInt::from(n));
        Gq { re: &self.re * &k, im: &self.im * &k }
    }

    /// Multiplies by `i`.
    pub fn times_i(&self) -> Self {
        Gq { re: -self.im.clone(), im: self.re.clone() }
    }
}

impl Zero for Gq {
    fn zero() -> Self {
        Gq { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gq {
    fn one() -> Self {
        Gq { re: BigRational::one(), im: BigRational::zero() }
    }
}

impl From<i64> for Gq {
    fn from(n: i64) -> Self {
        Gq::from_int(n)
    }
}

impl From<BigRational> for Gq {
    fn from(r: BigRational) -> Self {
        Gq { re: r, im: BigRational::zero() }
    }
}

impl<'a> Add<&'a Gq> for &'a Gq {
    type Output = Gq;
    fn add(self, rhs: &Gq) -> Gq {
        Gq { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Gq> for &'a Gq {
    type Output = Gq;
    fn sub(self, rhs: &Gq) -> Gq {
        Gq { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Gq> for &'a Gq {
    type Output = Gq;
    fn mul(self, rhs: &Gq) -> Gq {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Gq { re: &self.re * &rhs.re, im: BigRational::zero() };
        }
        Gq {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Gq> for Gq {
            type Output = Gq;
            fn $f(self, rhs: Gq) -> Gq {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Gq> for Gq {
            type Output = Gq;
            fn $f(self, rhs: &Gq) -> Gq {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<Gq> for &'a Gq {
            type Output = Gq;
            fn $f(self, rhs: Gq) -> Gq {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Gq {
    type Output = Gq;
    fn neg(self) -> Gq {
        Gq { re: -self.re, im: -self.im }
    }
}

impl<'a> Neg for &'a Gq {
    type Output = Gq;
    fn neg(self) -> Gq {
        Gq { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl AddAssign<&Gq> for Gq {
    fn add_assign(&mut self, rhs: &Gq) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Gq> for Gq {
    fn sub_assign(&mut self, rhs: &Gq) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Gq> for Gq {
    fn mul_assign(&mut self, rhs: &Gq) {
        *self = &*self * rhs;
    }
}

fn fmt_ratio(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Gq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_ratio(&self.re)),
            (true, false) => write!(f, "{}*i", fmt_ratio(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}*i", fmt_ratio(&self.re), sign, fmt_ratio(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for Gq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn parse_ratio(s: &str, whole: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad scalar `{whole}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

fn parse_imag(s: &str, whole: &str) -> Result<BigRational> {
    let body = s.strip_suffix('i').ok_or_else(|| Error::Parse(format!("bad scalar `{whole}`")))?;
    let body = body.strip_suffix('*').unwrap_or(body);
    match body {
        "" | "+" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        _ => parse_ratio(body, whole),
    }
}

impl FromStr for Gq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        if !t.ends_with('i') {
            return Ok(Gq::from(parse_ratio(&t, s)?));
        }
        // split at the last sign that is not the leading one
        let split = t.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(k, _)| k).last();
        match split {
            Some(k) => Ok(Gq { re: parse_ratio(&t[..k], s)?, im: parse_imag(&t[k..], s)? }),
            None => Ok(Gq { re: BigRational::zero(), im: parse_imag(&t, s)? }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Gq {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(q("1+1*i") * q("1-1*i"), Gq::from_int(2));
        assert_eq!(Gq::one().checked_div(&Gq::int_pair(0, 2)).unwrap(), q("-1/2*i"));
        assert_eq!(q("1/2+1/3*i") + q("1/2-1/3*i"), Gq::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(Gq::one().checked_div(&Gq::zero()), Err(Error::DivisionByZero)));
        assert!(field_arithmetic(&Gq::one(), &Gq::zero(), FieldOp::Div).is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "3", "-7/4", "1/2*i", "-1*i", "2/3-5/7*i", "-1/2+1*i"] {
            assert_eq!(q(s).to_string(), s);
        }
        assert_eq!(q("i"), Gq::i());
        assert_eq!(q("2/4"), Gq::ratio(1, 2));
        assert!("1/0".parse::<Gq>().is_err());
        assert!("abc".parse::<Gq>().is_err());
    }
}
