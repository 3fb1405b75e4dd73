//! Exact rationals, double-precision complex numbers and the small
//! combinatorial kernels shared by the rest of the crate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always held in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    /// `num/den`, reduced. Fails when `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(BigRational::new(num.into(), den)))
    }

    /// Small-integer convenience constructor; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("zero denominator")
    }

    /// Exact value of a finite double (every finite double is a dyadic rational).
    pub fn from_f64(x: f64) -> Result<Self> {
        BigRational::from_float(x)
            .map(Self)
            .ok_or_else(|| Error::NonFinite(x.to_string()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    /// Integer power; negative exponents fail on zero.
    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(num_traits::Pow::pow(&self.0, e)))
    }

    /// `(-1)^e` as a rational.
    pub fn sign_power(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    /// Nearest double. Handles numerators and denominators far outside the
    /// double range as long as the quotient itself is representable.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            if self.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        format_significant(self.to_f64(), digits)
    }
}

/// `x` with `digits` significant digits, trailing zeros dropped; scientific
/// notation outside `1e-5 <= |x| < 1e15`.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if (-5..15).contains(&mag) {
        let decimals = (digits as i32 - 1 - mag).max(0) as usize;
        let s = format!("{:.*}", decimals, x);
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{:.*e}", digits.saturating_sub(1), x)
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for ExactRational {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for ExactRational {
    fn from(q: BigRational) -> Self {
        Self(q)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Serialized as its display string (`"n"` or `"n/d"`) so no precision is lost.
impl serde::Serialize for ExactRational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `n`, `n/d`, and finite decimals such as `-0.125` or `2.5e-3`.
/// Both ASCII `-` and the Unicode minus sign are accepted.
impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let err = || Error::Parse {
            input: input.to_string(),
            what: "rational",
        };
        let s = input.trim().replace('\u{2212}', "-");
        if s.is_empty() {
            return Err(err());
        }
        if let Some((n, d)) = s.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            return Self::new(n, d);
        }
        if let Ok(n) = BigInt::from_str(&s) {
            return Ok(Self::from_integer(n));
        }
        parse_decimal(&s).ok_or_else(err)
    }
}

fn parse_decimal(s: &str) -> Option<ExactRational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(BigInt::from_str(&digits).ok()?);
    let scale = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    value *= num_traits::Pow::pow(&ten, scale);
    if neg {
        value = -value;
    }
    Some(ExactRational(value))
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational(self.0 $op &rhs.0)
            }
        }
        impl<'a> $tr<ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(&self.0 $op rhs.0)
            }
        }
        impl<'a, 'b> $tr<&'b ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'b ExactRational) -> ExactRational {
                ExactRational(&self.0 $op &rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);
// Panics on a zero divisor, like integer division; use `checked_div` where
// the divisor is data-dependent.
forward_binop!(Div, div, /);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for ExactRational {
    fn add_assign(&mut self, rhs: ExactRational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&ExactRational> for ExactRational {
    fn sub_assign(&mut self, rhs: &ExactRational) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign for ExactRational {
    fn sub_assign(&mut self, rhs: ExactRational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&ExactRational> for ExactRational {
    fn mul_assign(&mut self, rhs: &ExactRational) {
        self.0 *= &rhs.0;
    }
}

impl std::iter::Sum for ExactRational {
    fn sum<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a ExactRational> for ExactRational {
    fn sum<I: Iterator<Item = &'a ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for ExactRational {
    fn product<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::one(), |acc, x| acc * x)
    }
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Falling factorial `n (n-1) ... (n-j+1)`; zero when `j > n`.
pub fn falling_factorial(n: u64, j: u64) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    ((n - j + 1)..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial_q(n: u64, k: u64) -> ExactRational {
    ExactRational::from_integer(binomial(n, k))
}

pub fn factorial_q(n: u64) -> ExactRational {
    ExactRational::from_integer(factorial(n))
}

/// Double-precision complex number.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct ComplexF {
    pub re: f64,
    pub im: f64,
}

impl ComplexF {
    pub const ZERO: ComplexF = ComplexF { re: 0.0, im: 0.0 };
    pub const ONE: ComplexF = ComplexF { re: 1.0, im: 0.0 };
    pub const I: ComplexF = ComplexF { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub const fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    pub fn from_polar(r: f64, theta: f64) -> Self {
        Self::new(r * theta.cos(), r * theta.sin())
    }

    /// `exp(i theta)`.
    pub fn cis(theta: f64) -> Self {
        Self::from_polar(1.0, theta)
    }

    fn c64(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    fn of(c: Complex64) -> Self {
        Self::new(c.re, c.im)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Returns `self` unchanged, or an error if either component is NaN or infinite.
    pub fn finite(self) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(Error::NonFinite(format!("{self:?}")))
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.re * s, self.im * s)
    }

    pub fn exp(&self) -> Self {
        Self::of(self.c64().exp())
    }

    /// Principal logarithm; fails at zero.
    pub fn ln(&self) -> Result<Self> {
        if self.re == 0.0 && self.im == 0.0 {
            return Err(Error::Domain("logarithm of zero".into()));
        }
        Ok(Self::of(self.c64().ln()))
    }

    pub fn powi(&self, n: i32) -> Self {
        Self::of(self.c64().powi(n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.re == 0.0 && rhs.im == 0.0 {
            return Err(Error::DivisionByZero);
        }
        (*self / *rhs).finite()
    }
}

impl From<f64> for ComplexF {
    fn from(re: f64) -> Self {
        Self::real(re)
    }
}

impl serde::Serialize for ComplexF {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.re, self.im].serialize(serializer)
    }
}

impl fmt::Debug for ComplexF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:e}, {:e})", self.re, self.im)
    }
}

impl fmt::Display for ComplexF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0.0 {
            write!(f, "{}", self.re)
        } else if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for ComplexF {
    type Output = ComplexF;
    fn add(self, rhs: ComplexF) -> ComplexF {
        ComplexF::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ComplexF {
    type Output = ComplexF;
    fn sub(self, rhs: ComplexF) -> ComplexF {
        ComplexF::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ComplexF {
    type Output = ComplexF;
    fn mul(self, rhs: ComplexF) -> ComplexF {
        ComplexF::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Mul<f64> for ComplexF {
    type Output = ComplexF;
    fn mul(self, rhs: f64) -> ComplexF {
        self.scale(rhs)
    }
}

impl Div for ComplexF {
    type Output = ComplexF;
    fn div(self, rhs: ComplexF) -> ComplexF {
        ComplexF::of(self.c64() / rhs.c64())
    }
}

impl Neg for ComplexF {
    type Output = ComplexF;
    fn neg(self) -> ComplexF {
        ComplexF::new(-self.re, -self.im)
    }
}

impl AddAssign for ComplexF {
    fn add_assign(&mut self, rhs: ComplexF) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl std::iter::Sum for ComplexF {
    fn sum<I: Iterator<Item = ComplexF>>(iter: I) -> Self {
        iter.fold(ComplexF::ZERO, |acc, x| acc + x)
    }
}

/// `exp(2 pi i m / a)`. Exact for the quarter-turn multiples so that
/// `(4, 1)` is exactly `i`.
pub fn root_of_unity(a: u32, m: i64) -> Result<ComplexF> {
    if a == 0 {
        return Err(Error::Domain("root of unity order must be >= 1".into()));
    }
    let r = m.rem_euclid(a as i64) as u64;
    let a = a as u64;
    if (4 * r) % a == 0 {
        return Ok(match 4 * r / a {
            0 => ComplexF::ONE,
            1 => ComplexF::I,
            2 => ComplexF::real(-1.0),
            _ => ComplexF::new(0.0, -1.0),
        });
    }
    let theta = std::f64::consts::TAU * r as f64 / a as f64;
    Ok(ComplexF::cis(theta))
}

/// Field operations needed by the truncated series engine.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Result<Self>;
    fn from_int(n: i64) -> Self;
    fn from_rational(q: &ExactRational) -> Self;
}

impl Scalar for ExactRational {
    fn zero() -> Self {
        ExactRational::zero()
    }
    fn one() -> Self {
        ExactRational::one()
    }
    fn is_zero(&self) -> bool {
        ExactRational::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Result<Self> {
        self.recip()
    }
    fn from_int(n: i64) -> Self {
        ExactRational::from(n)
    }
    fn from_rational(q: &ExactRational) -> Self {
        q.clone()
    }
}

impl Scalar for ComplexF {
    fn zero() -> Self {
        ComplexF::ZERO
    }
    fn one() -> Self {
        ComplexF::ONE
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, rhs: &Self) -> Self {
        *self + *rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        *self - *rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        *self * *rhs
    }
    fn negated(&self) -> Self {
        -*self
    }
    fn inverse(&self) -> Result<Self> {
        ComplexF::ONE.checked_div(self)
    }
    fn from_int(n: i64) -> Self {
        ComplexF::real(n as f64)
    }
    fn from_rational(q: &ExactRational) -> Self {
        ComplexF::real(q.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: usize) -> Vec<Vec<u64>> {
        let mut rows = vec![vec![1u64]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u64; i + 1];
            for k in 1..i {
                row[k] = prev[k - 1] + prev[k];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(9, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        let p = pascal(7);
        assert_eq!(binomial(7, 3), BigInt::from(p[7][3]));
        assert_eq!(p[7][3], 35);
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=40u64 {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        let oracle: u64 = (1..=10).product();
        assert_eq!(factorial(10), BigInt::from(oracle));
        assert_eq!(oracle, 3_628_800);
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(2, 3), BigInt::from(0));
    }

    #[test]
    fn roots_of_unity() {
        let i = root_of_unity(4, 1).unwrap();
        assert!((i.re).abs() < 1e-15 && (i.im - 1.0).abs() < 1e-15);
        assert_eq!(root_of_unity(7, 0).unwrap(), ComplexF::ONE);
        let w = root_of_unity(3, 1).unwrap();
        assert!((w.re + 0.5).abs() < 1e-15);
        assert!((w.im - 3f64.sqrt() / 2.0).abs() < 1e-15);
        for a in 1..=64 {
            for m in -70..70 {
                let n = root_of_unity(a, m).unwrap().norm_sqr();
                assert!((n - 1.0).abs() <= 1e-12);
            }
        }
        assert!(root_of_unity(0, 1).is_err());
    }

    #[test]
    fn canonical_form_and_parse() {
        let q = ExactRational::new(6, -8).unwrap();
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(4));
        assert_eq!(q.to_string(), "-3/4");
        assert_eq!("\u{2212}3/4".parse::<ExactRational>().unwrap(), q);
        assert_eq!("-0.75".parse::<ExactRational>().unwrap(), q);
        assert_eq!("2.5e-1".parse::<ExactRational>().unwrap(), ExactRational::frac(1, 4));
        assert_eq!("7".parse::<ExactRational>().unwrap(), ExactRational::from(7));
        assert!("1/0".parse::<ExactRational>().is_err());
        assert!("abc".parse::<ExactRational>().is_err());
        assert!(ExactRational::new(1, 0).is_err());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let one = ExactRational::one();
        assert_eq!(one.checked_div(&ExactRational::zero()), Err(Error::DivisionByZero));
        assert!(ExactRational::zero().recip().is_err());
        assert!(ExactRational::zero().pow(-1).is_err());
        assert!(ComplexF::ONE.checked_div(&ComplexF::ZERO).is_err());
        assert!(ComplexF::new(f64::NAN, 0.0).finite().is_err());
    }

    #[test]
    fn huge_ratio_to_f64() {
        let big = ExactRational::from_integer(factorial(400));
        let q = (&big + ExactRational::one()) / &big;
        assert!((q.to_f64() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(ExactRational::frac(1, 4).to_decimal_string(15), "0.25");
        assert_eq!(ExactRational::frac(-1, 3).to_decimal_string(15), "-0.333333333333333");
    }
}
