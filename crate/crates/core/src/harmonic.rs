//! Harmonic numbers of integer, real and `t`-weighted orders, together with the
//! finite-sum identities linking them to the coefficients `{{k, j}}*`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use crate::coeffs::s2star_rec;
use crate::error::{domain, Result};
use crate::exactnum::{binomial_q, factorial_q, ExactRational};
use crate::series::{exp_series, RatSeries, TruncSeries};
use crate::stirling::{stirling1_unsigned, stirling2};

/// A harmonic-number evaluation: exact for integer orders, double otherwise.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum HarmonicValue {
    Exact(ExactRational),
    Numeric(f64),
}

impl HarmonicValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            HarmonicValue::Exact(q) => q.to_f64(),
            HarmonicValue::Numeric(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&ExactRational> {
        match self {
            HarmonicValue::Exact(q) => Some(q),
            HarmonicValue::Numeric(_) => None,
        }
    }
}

/// `H_n^(r)(t) = sum_{m=1}^n t^m / m^r`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicT {
    pub n: u64,
    pub r: i64,
    pub t: ExactRational,
    pub value: ExactRational,
}

impl HarmonicT {
    pub fn new(n: u64, r: i64, t: ExactRational) -> Self {
        let mut power = ExactRational::one();
        let mut value = ExactRational::zero();
        for m in 1..=n {
            power *= &t;
            value += &power * inverse_power(m, r);
        }
        Self { n, r, t, value }
    }
}

/// `m^(-r)` for any integer `r`.
fn inverse_power(m: u64, r: i64) -> ExactRational {
    ExactRational::from(m as i64)
        .pow(-(r as i32))
        .expect("m >= 1")
}

fn prefix_cache() -> &'static RwLock<HashMap<i64, Vec<ExactRational>>> {
    static CACHE: OnceLock<RwLock<HashMap<i64, Vec<ExactRational>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `H_n^(r) = sum_{m=1}^n m^(-r)`; orders `r <= 0` give plain power sums.
pub fn harmonic(n: u64, r: i64) -> ExactRational {
    let n = n as usize;
    if let Some(v) = prefix_cache()
        .read()
        .expect("harmonic cache poisoned")
        .get(&r)
        .and_then(|row| row.get(n))
    {
        return v.clone();
    }
    let mut cache = prefix_cache().write().expect("harmonic cache poisoned");
    let row = cache.entry(r).or_insert_with(|| vec![ExactRational::zero()]);
    while row.len() <= n {
        let m = row.len() as u64;
        let next = &row[row.len() - 1] + inverse_power(m, r);
        row.push(next);
    }
    row[n].clone()
}

/// `sum_{m=1}^n m^(-rho)` in double precision.
pub fn harmonic_real(n: u64, rho: f64) -> f64 {
    (1..=n).map(|m| (m as f64).powf(-rho)).sum()
}

fn falling_q(n: u64, j: u64) -> ExactRational {
    ExactRational::from_integer(crate::exactnum::falling_factorial(n, j))
}

/// `sum_{j=1}^n {{k+2, j}}* n!/(n-j)!`, which equals `1/n^k`.
pub fn npow_inverse(n: u64, k: usize) -> ExactRational {
    (1..=n)
        .map(|j| s2star_rec(k + 2, j as usize) * falling_q(n, j))
        .sum()
}

/// `sum_j S(k, j) n!/(n-j)!`, which equals `n^k`.
pub fn npow_forward(n: u64, k: usize) -> ExactRational {
    (0..=k)
        .map(|j| ExactRational::from_integer(stirling2(k, j)) * falling_q(n, j as u64))
        .sum()
}

/// `H_n^(k)` built up one step at a time from [`npow_inverse`].
pub fn harmonic_via_rec(n: u64, k: usize) -> ExactRational {
    (1..=n).map(|m| npow_inverse(m, k)).sum()
}

/// Integer-order sums for `{{k+2, j}}*`; `variant` selects which of the two
/// displayed forms is evaluated.
pub fn s2star_from_hnum_int(k: usize, j: usize, variant: u8) -> Result<ExactRational> {
    let k = k as i64;
    let mut total = ExactRational::zero();
    for i in 0..j {
        let sign = ExactRational::sign_power((j - 1 - i) as i64);
        let left = factorial_q((j - 1 - i) as u64);
        let term = match variant {
            1 => harmonic(i as u64 + 1, k) / factorial_q(i as u64 + 2),
            2 => {
                let f = factorial_q(i as u64 + 2);
                harmonic(i as u64 + 2, k) / &f - inverse_power(i as u64 + 2, k) / f
            }
            _ => return Err(domain(format!("variant must be 1 or 2, got {variant}"))),
        };
        total += sign * term / left;
    }
    Ok(total * ExactRational::from(j as i64 + 1))
}

fn factorial_f(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// Real-order sums for `{{k+2, j}}*` with `0 <= r < k`.
pub fn s2star_from_hnum_real(k: usize, j: usize, r: f64, variant: u8) -> Result<f64> {
    if !(r >= 0.0 && r < k as f64) {
        return Err(domain(format!("real order needs 0 <= r < k, got r = {r}, k = {k}")));
    }
    if variant != 1 && variant != 2 {
        return Err(domain(format!("variant must be 1 or 2, got {variant}")));
    }
    let mut total = 0.0;
    for i in 0..j {
        let (a, b) = ((i + 1) as f64, (i + 2) as f64);
        let weight = match variant {
            1 => a.powf(-r) + (j - 1 - i) as f64 * b.powf(-r - 1.0),
            _ => a.powf(-r) - b.powf(-r) + (j + 1) as f64 * b.powf(-r - 1.0),
        };
        let sign = if (j - 1 - i) % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * harmonic_real(i as u64 + 1, k as f64 - r) * weight
            / (factorial_f(j - 1 - i) * factorial_f(i + 1));
    }
    Ok(total)
}

/// `sum_{m=0}^j H_m^(k+1)/m! * (-1)^(j-m)/(j-m)!`, equal to `{{k+2,j}}*/j`.
pub fn exp_harmonic_conv(k: usize, j: usize) -> ExactRational {
    (0..=j)
        .map(|m| {
            harmonic(m as u64, k as i64 + 1) / factorial_q(m as u64)
                * ExactRational::sign_power((j - m) as i64)
                / factorial_q((j - m) as u64)
        })
        .sum()
}

/// `sum_{i=1}^j {{k+2,i}}* / (i (j-i)!)`, equal to `H_j^(k+1)/j!`.
pub fn exp_harmonic_inv(k: usize, j: usize) -> ExactRational {
    (1..=j)
        .map(|i| {
            s2star_rec(k + 2, i) / (ExactRational::from(i as i64) * factorial_q((j - i) as u64))
        })
        .sum()
}

/// Right-hand side of one of the three recurrences for `H_n^(k)` built from
/// `H_{n-1}^(k)`. The third takes a real parameter `0 <= r < k` and is exact
/// only when `r = 0`.
pub fn harmonic_rec_corollary(n: u64, k: usize, which: u8, r: f64) -> Result<HarmonicValue> {
    if n == 0 {
        return Err(domain("recurrences start at n = 1"));
    }
    let prev = harmonic(n - 1, k as i64);
    let n_us = n as usize;
    match which {
        1 => {
            let mut inc = ExactRational::zero();
            for j in 1..=n_us {
                for i in 1..=j {
                    inc += binomial_q(n, j as u64)
                        * s2star_rec(k + 1, i)
                        * ExactRational::sign_power((j - i) as i64)
                        * factorial_q(i as u64 - 1);
                }
            }
            Ok(HarmonicValue::Exact(prev + inc))
        }
        2 => {
            let mut inc = ExactRational::zero();
            for j in 1..=n_us {
                for i in 1..=j {
                    for m in 1..=i {
                        inc += binomial_q(n, j as u64)
                            * binomial_q(i as u64, m as u64)
                            * ExactRational::sign_power((j + m) as i64)
                            * harmonic(m as u64, k as i64);
                    }
                }
            }
            Ok(HarmonicValue::Exact(prev + inc))
        }
        3 => {
            if !(r >= 0.0 && r < k as f64) {
                return Err(domain(format!("third recurrence needs 0 <= r < k, got r = {r}")));
            }
            if r == 0.0 {
                let mut inc = ExactRational::zero();
                for j in 1..=n_us {
                    for i in 0..j {
                        // at r = 0 the bracket collapses to (j+1)/(i+2)
                        let weight = ExactRational::frac(j as i64 + 1, i as i64 + 2);
                        inc +=binomial_q(n, j as u64)
                            * binomial_q(j as u64, i as u64 + 1)
                            * ExactRational::sign_power((j - 1 - i) as i64)
                            * harmonic(i as u64 + 1, k as i64)
                            * weight;
                    }
                }
                return Ok(HarmonicValue::Exact(prev + inc));
            }
            let mut inc = 0.0;
            for j in 1..=n_us {
                for i in 0..j {
                    let (a, b) = ((i + 1) as f64, (i + 2) as f64);
                    let weight = a.powf(-r) - b.powf(-r) + (j + 1) as f64 * b.powf(-r - 1.0);
                    let sign = if (j - 1 - i) % 2 == 0 { 1.0 } else { -1.0 };
                    inc += binomial_q(n, j as u64).to_f64()
                        * binomial_q(j as u64, i as u64 + 1).to_f64()
                        * sign
                        * harmonic_real(i as u64 + 1, k as f64 - r)
                        * weight;
                }
            }
            Ok(HarmonicValue::Numeric(prev.to_f64() + inc))
        }
        _ => Err(domain(format!("recurrence selector must be 1, 2 or 3, got {which}"))),
    }
}

/// `H_n^(k) = sum_{j<=n} C(n+1, j+1) {{k+2, j}}* j!`.
pub fn harmonic_binomial_form(n: u64, k: usize) -> ExactRational {
    (0..=n)
        .map(|j| binomial_q(n + 1, j + 1) * s2star_rec(k + 2, j as usize) * factorial_q(j))
        .sum()
}

/// `H_n^(k)` as a polynomial in `n + 1` through unsigned Stirling numbers of
/// the first kind.
pub fn harmonic_powers_of_n(n: u64, k: usize) -> ExactRational {
    let base = ExactRational::from(n as i64 + 1);
    let mut total = ExactRational::zero();
    for j in 0..=n as usize {
        let coeff = s2star_rec(k + 2, j);
        if coeff.is_zero() {
            continue;
        }
        let inner: ExactRational = (0..=j + 1)
            .map(|m| {
                ExactRational::from_integer(stirling1_unsigned(j + 1, m))
                    * ExactRational::sign_power((j + 1 - m) as i64)
                    * base.pow(m as i32).expect("nonnegative power")
            })
            .sum();
        total += coeff * inner / ExactRational::from(j as i64 + 1);
    }
    total
}

/// `C(n+1, j+1) = sum_m c(j+1, m) (-1)^(j+1-m) (n+1)^m / (j+1)!`, the binomial
/// expansion behind [`harmonic_powers_of_n`].
pub fn binomial_via_stirling1(n: u64, j: usize) -> ExactRational {
    let base = ExactRational::from(n as i64 + 1);
    let total: ExactRational = (0..=j + 1)
        .map(|m| {
            ExactRational::from_integer(stirling1_unsigned(j + 1, m))
                * ExactRational::sign_power((j + 1 - m) as i64)
                * base.pow(m as i32).expect("nonnegative power")
        })
        .sum();
    total / factorial_q(j as u64 + 1)
}

/// Both sides of `H_1^(z) e^(-z) = -sum_{k>=1} (-z)^k/(k! k)` as truncated
/// series, where `H_1^(z)` is the exponential generating function of `H_n`.
pub fn first_order_egf_check(order: usize) -> Result<(RatSeries, RatSeries)> {
    let egf = TruncSeries::from_fn(order, |n| harmonic(n as u64, 1) / factorial_q(n as u64));
    let neg_exp = exp_series(order).dilate(&-ExactRational::one());
    let lhs = egf.mul(&neg_exp);
    let rhs = TruncSeries::from_fn(order, |k| {
        if k == 0 {
            ExactRational::zero()
        } else {
            -ExactRational::sign_power(k as i64) / (factorial_q(k as u64) * ExactRational::from(k as i64))
        }
    });
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::frac(n, d)
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(2, 1), q(3, 2));
        assert_eq!(harmonic(2, 2), q(5, 4));
        assert_eq!(harmonic(3, 0), q(3, 1));
        assert_eq!(harmonic(4, -1), q(10, 1));
        assert_eq!(harmonic(0, 5), q(0, 1));
        assert_eq!(harmonic(3, 3), q(251, 216));
    }

    #[test]
    fn harmonic_t_matches_definition() {
        let h = HarmonicT::new(3, 2, q(1, 2));
        assert_eq!(h.value, q(1, 2) + q(1, 16) + q(1, 72));
        assert_eq!(HarmonicT::new(5, 1, q(1, 1)).value, harmonic(5, 1));
    }

    #[test]
    fn harmonic_real_examples() {
        assert!((harmonic_real(2, 0.5) - (1.0 + 0.5f64.sqrt())).abs() < 1e-15);
        assert_eq!(harmonic_real(0, 0.3), 0.0);
        assert!((harmonic_real(2, 1.0) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn power_examples() {
        assert_eq!(npow_inverse(2, 1), q(1, 2));
        assert_eq!(npow_inverse(1, 5), q(1, 1));
        assert_eq!(npow_inverse(3, 2), q(1, 9));
        assert_eq!(npow_forward(3, 2), q(9, 1));
        assert_eq!(npow_forward(7, 0), q(1, 1));
        assert_eq!(npow_forward(4, 3), q(64, 1));
    }

    #[test]
    fn recursive_harmonic_examples() {
        assert_eq!(harmonic_via_rec(2, 1), q(3, 2));
        assert_eq!(harmonic_via_rec(0, 3), q(0, 1));
        assert_eq!(harmonic_via_rec(3, 3), q(251, 216));
    }

    #[test]
    fn integer_order_examples() {
        assert_eq!(s2star_from_hnum_int(1, 2, 1).unwrap(), q(-3, 4));
        assert_eq!(s2star_from_hnum_int(1, 1, 1).unwrap(), q(1, 1));
        assert_eq!(s2star_from_hnum_int(2, 2, 2).unwrap(), q(-7, 8));
        assert!(s2star_from_hnum_int(2, 2, 3).is_err());
    }

    #[test]
    fn real_order_examples() {
        assert!((s2star_from_hnum_real(1, 2, 0.0, 1).unwrap() + 0.75).abs() < 1e-12);
        let a = s2star_from_hnum_real(2, 3, 0.5, 1).unwrap();
        let b = s2star_from_hnum_real(2, 3, 0.5, 2).unwrap();
        assert!((a - b).abs() < 1e-12);
        assert!((a - s2star_rec(4, 3).to_f64()).abs() < 1e-12);
        assert!((s2star_from_hnum_real(3, 1, 1.0, 1).unwrap() - 1.0).abs() < 1e-15);
        assert!(s2star_from_hnum_real(2, 2, 2.0, 1).is_err());
        assert!(s2star_from_hnum_real(2, 2, -0.1, 1).is_err());
    }

    #[test]
    fn exponential_harmonic_examples() {
        assert_eq!(exp_harmonic_conv(0, 2), q(-1, 4));
        assert_eq!(exp_harmonic_conv(0, 1), q(1, 1));
        assert_eq!(exp_harmonic_conv(1, 2), q(-3, 8));
        assert_eq!(exp_harmonic_inv(0, 2), q(3, 4));
        assert_eq!(exp_harmonic_inv(4, 1), q(1, 1));
        assert_eq!(exp_harmonic_inv(1, 3), q(49, 216));
    }

    #[test]
    fn corollary_examples() {
        let exact = |n, k, w| harmonic_rec_corollary(n, k, w, 0.0).unwrap();
        assert_eq!(exact(2, 1, 1), HarmonicValue::Exact(q(3, 2)));
        assert_eq!(exact(1, 4, 2), HarmonicValue::Exact(q(1, 1)));
        assert_eq!(exact(2, 1, 2), HarmonicValue::Exact(q(3, 2)));
        assert_eq!(exact(4, 2, 3), HarmonicValue::Exact(harmonic(4, 2)));
        let v = harmonic_rec_corollary(5, 3, 3, 0.25).unwrap();
        assert!((v.to_f64() - harmonic(5, 3).to_f64()).abs() < 1e-10);
        assert!(harmonic_rec_corollary(3, 2, 3, 2.0).is_err());
        assert!(harmonic_rec_corollary(3, 2, 4, 0.0).is_err());
    }

    #[test]
    fn powers_of_n_examples() {
        assert_eq!(harmonic_powers_of_n(2, 1), q(3, 2));
        assert_eq!(harmonic_powers_of_n(0, 3), q(0, 1));
        assert_eq!(harmonic_powers_of_n(3, 2), q(49, 36));
        assert_eq!(harmonic_binomial_form(3, 2), q(49, 36));
        assert_eq!(binomial_via_stirling1(5, 2), q(20, 1));
    }

    #[test]
    fn first_order_egf_series() {
        let (lhs, rhs) = first_order_egf_check(12).unwrap();
        assert_eq!(lhs, rhs);
    }
}
