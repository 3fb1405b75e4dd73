use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{ComplexF, ExactRational, Scalar};

/// Dense power series known exactly through `z^order`.
///
/// Binary operations truncate to the smaller of the two orders.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
}

pub type RatSeries = TruncSeries<ExactRational>;
pub type ComplexSeries = TruncSeries<ComplexF>;

impl<C: Scalar> TruncSeries<C> {
    /// Builds a series from its coefficients `c_0 .. c_order`. An empty
    /// vector is read as the zero series of order 0.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(C::zero());
        }
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![C::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(C::one(), 0, order)
    }

    /// `c z^n`, truncated at `order`.
    pub fn monomial(c: C, n: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Self::new((0..=order).map(f).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`; zero above the order.
    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_fn(order, |n| self.coeff(n))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_fn(order, |n| self.coeffs[n].plus(&rhs.coeffs[n]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_fn(order, |n| self.coeffs[n].minus(&rhs.coeffs[n]))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.negated()).collect())
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.times(s)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplication by `z^j`; the result is exact through `order + j`.
    pub fn shift(&self, j: usize) -> Self {
        Self::from_fn(self.order() + j, |n| {
            if n < j {
                C::zero()
            } else {
                self.coeffs[n - j].clone()
            }
        })
    }

    /// `G'(z)`, exact through `order - 1`.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::Series("order >= 1 to differentiate"));
        }
        Ok(Self::from_fn(self.order() - 1, |n| {
            self.coeffs[n + 1].times(&C::from_int(n as i64 + 1))
        }))
    }

    /// `j`-th derivative of a polynomial (coefficients above the order are
    /// taken as zero). Returns the zero polynomial when `j` exceeds the degree.
    pub fn nth_derivative(&self, j: usize) -> Self {
        if j > self.order() {
            return Self::zero(0);
        }
        Self::from_fn(self.order() - j, |n| {
            let mut c = self.coeffs[n + j].clone();
            for i in (n + 1)..=(n + j) {
                c = c.times(&C::from_int(i as i64));
            }
            c
        })
    }

    /// `z^j G^(j)(z)`: coefficient `n` becomes `n (n-1) ... (n-j+1) g_n`.
    /// Exact through the original order.
    pub fn theta_falling(&self, j: usize) -> Self {
        Self::from_fn(self.order(), |n| {
            if n < j {
                return C::zero();
            }
            let mut c = self.coeffs[n].clone();
            for i in (n - j + 1)..=n {
                c = c.times(&C::from_int(i as i64));
            }
            c
        })
    }

    /// Antiderivative with zero constant term; exact through `order + 1`.
    pub fn antiderivative(&self) -> Result<Self> {
        let mut out = vec![C::zero(); self.order() + 2];
        for (n, c) in self.coeffs.iter().enumerate() {
            out[n + 1] = c.times(&C::from_int(n as i64 + 1).inverse()?);
        }
        Ok(Self::new(out))
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Series("a nonzero constant term to invert"));
        }
        let inv0 = c0.inverse()?;
        let order = self.order();
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                acc = acc.plus(&self.coeffs[k].times(&out[n - k]));
            }
            out.push(acc.negated().times(&inv0));
        }
        Ok(Self::new(out))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inverse()?))
    }

    /// `exp(G)` for `G(0) = 0`, via `E' = G' E`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("zero constant term for exp"));
        }
        let order = self.order();
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        out.push(C::one());
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                let term = self.coeffs[k].times(&C::from_int(k as i64)).times(&out[n - k]);
                acc = acc.plus(&term);
            }
            out.push(acc.times(&C::from_int(n as i64).inverse()?));
        }
        Ok(Self::new(out))
    }

    /// `log(G)` for `G(0) = 1`, via `(log G)' = G'/G`.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::Series("constant term 1 for log"));
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        let q = self.derivative()?.div(&self.truncate(self.order() - 1))?;
        q.antiderivative()
    }

    /// `self(inner(z))` for `inner(0) = 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Series("inner series with zero constant term"));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs.iter().take(order + 1).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].plus(c);
        }
        Ok(acc)
    }

    /// Horner evaluation of the stored coefficients.
    pub fn evaluate(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.times(x).plus(c))
    }

    /// Substitutes `z -> c z`.
    pub fn dilate(&self, c: &C) -> Self {
        let mut power = C::one();
        Self::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let v = a.times(&power);
                    power = power.times(c);
                    v
                })
                .collect(),
        )
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        TruncSeries::new(self.coeffs.iter().map(f).collect())
    }
}

impl RatSeries {
    pub fn to_complex(&self) -> ComplexSeries {
        self.map(ComplexF::from_rational)
    }

    /// Coefficients as `"num/den"` strings.
    pub fn to_fraction_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl<C: fmt::Debug> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries{:?} + O(z^{})", self.coeffs, self.coeffs.len())
    }
}

/// `sum_{n<=order} t^n z^n`.
pub fn geometric(t: &ExactRational, order: usize) -> RatSeries {
    let mut p = ExactRational::one();
    TruncSeries::from_fn(order, |_| {
        let c = p.clone();
        p = &p * t;
        c
    })
}

/// `exp(z)` truncated.
pub fn exp_series(order: usize) -> RatSeries {
    let mut f = ExactRational::one();
    TruncSeries::from_fn(order, |n| {
        if n > 0 {
            f = &f / ExactRational::from(n as i64);
        }
        f.clone()
    })
}

/// `Li_s(z) = sum_{n>=1} z^n / n^s` truncated, any integer `s`.
pub fn polylog_series(s: i32, order: usize) -> RatSeries {
    TruncSeries::from_fn(order, |n| {
        if n == 0 {
            ExactRational::zero()
        } else {
            ExactRational::from(n as i64).pow(-s).expect("n >= 1")
        }
    })
}

/// `log(1 - z)` truncated.
pub fn log_one_minus(order: usize) -> RatSeries {
    polylog_series(1, order).neg()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::frac(n, d)
    }

    fn s(v: &[(i64, i64)]) -> RatSeries {
        TruncSeries::new(v.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn mul_and_inverse() {
        let one_minus = s(&[(1, 1), (-1, 1), (0, 1), (0, 1)]);
        assert_eq!(one_minus.inverse().unwrap(), geometric(&q(1, 1), 3));
        let g = geometric(&q(1, 1), 3);
        assert_eq!(g.mul(&g), s(&[(1, 1), (2, 1), (3, 1), (4, 1)]));
        assert!(s(&[(0, 1), (1, 1)]).inverse().is_err());
    }

    #[test]
    fn truncation_to_min_order() {
        let a = geometric(&q(1, 1), 5);
        let b = geometric(&q(1, 1), 2);
        assert_eq!(a.add(&b).order(), 2);
        assert_eq!(a.mul(&b).order(), 2);
    }

    #[test]
    fn exp_log_compose() {
        let e = exp_series(6);
        let z = TruncSeries::monomial(q(1, 1), 1, 6);
        assert_eq!(z.exp().unwrap(), e);
        assert_eq!(e.log().unwrap(), z);
        // exp(log(1/(1-z))) = 1/(1-z)
        let g = geometric(&q(1, 1), 6);
        assert_eq!(g.log().unwrap().exp().unwrap(), g);
        assert_eq!(g.log().unwrap(), log_one_minus(6).neg());
        // (1/(1-z)) o (2z) = 1/(1-2z)
        assert_eq!(g.compose(&z.scale(&q(2, 1))).unwrap(), geometric(&q(2, 1), 6));
        assert!(g.compose(&g).is_err());
        assert!(g.exp().is_err());
        assert!(e.scale(&q(2, 1)).log().is_err());
    }

    #[test]
    fn calculus() {
        let g = geometric(&q(1, 1), 4);
        assert_eq!(g.derivative().unwrap(), s(&[(1, 1), (2, 1), (3, 1), (4, 1)]));
        assert_eq!(g.antiderivative().unwrap().coeff(3), q(1, 3));
        assert!(TruncSeries::<ExactRational>::one(0).derivative().is_err());
        let th = g.theta_falling(2);
        assert_eq!(th.coeffs(), &[q(0, 1), q(0, 1), q(2, 1), q(6, 1), q(12, 1)]);
        assert_eq!(g.nth_derivative(2).coeffs(), &[q(2, 1), q(6, 1), q(12, 1)]);
        assert_eq!(g.shift(2).coeff(2), q(1, 1));
        assert_eq!(g.shift(2).order(), 6);
    }

    #[test]
    fn evaluate_and_dilate() {
        let p = s(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(p.evaluate(&q(1, 2)), q(11, 4));
        assert_eq!(p.dilate(&q(2, 1)), s(&[(1, 1), (4, 1), (12, 1)]));
        let c = p.to_complex();
        assert_eq!(c.evaluate(&ComplexF::real(0.5)), ComplexF::real(2.75));
    }
}
