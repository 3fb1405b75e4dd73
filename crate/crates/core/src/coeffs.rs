//! The generalized transformation coefficients `{{k, j}}*`.
//!
//! These are the rationals for which
//! `sum_{n>=1} g_n z^n / n^k = sum_{j>=1} {{k+2, j}}* z^j G^(j)(z)`
//! holds for every sequence OGF `G`. Indices follow the same convention: the
//! weight `1/n^k` pairs with the row `k + 2`.
//!
//! Six independent evaluation routes are provided, and every one of them is
//! checked against the others by the audit suites:
//!
//! * [`s2star_rec`]: the two-index recurrence
//!   `{{k,j}}* = -{{k,j-1}}*/j + {{k-1,j}}*/j + [k = j = 1]`,
//! * [`s2star_sum`]: the alternating binomial sum,
//! * [`s2star_harmonic`]: harmonic-number closed forms for `2 <= k <= 6`,
//! * [`s2star_heuristic`]: the harmonic-number recurrence in `k`,
//! * [`s2star_ogf_coeff`]: coefficient extraction from the rational OGF in `k`,
//! * [`s2star_reverse_binomial`]: coefficients of `Li_{k+1}(-z/(1-z))`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::exactnum::{binomial_q, factorial_q, ExactRational};
use crate::harmonic::harmonic;
use crate::series::{polylog_series, RatSeries, TruncSeries};
use crate::stirling::stirling1_unsigned;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Recurrence,
    ClosedSum,
    HarmonicForm,
    OgfExtraction,
}

/// Memoized coefficient store for one evaluation method.
///
/// Lookups take a read lock; misses are computed and inserted under a write
/// lock, so concurrent readers never observe a partially built entry.
#[derive(Debug)]
pub struct CoeffTable {
    method: Method,
    rows: RwLock<Vec<Vec<ExactRational>>>,
    memo: RwLock<HashMap<(usize, usize), ExactRational>>,
}

impl CoeffTable {
    pub fn new(method: Method) -> Self {
        Self {
            method,
            rows: RwLock::new(Vec::new()),
            memo: RwLock::new(HashMap::new()),
        }
    }

    /// Shared recurrence-backed table.
    pub fn shared() -> &'static CoeffTable {
        static TABLE: OnceLock<CoeffTable> = OnceLock::new();
        TABLE.get_or_init(|| CoeffTable::new(Method::Recurrence))
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// `{{k, j}}*` by this table's method. The closed sum and harmonic forms
    /// answer their base cases (`k < 2` or `j = 0`) from the recurrence table.
    pub fn get(&self, k: usize, j: usize) -> Result<ExactRational> {
        match self.method {
            Method::Recurrence => Ok(self.recurrence(k, j)),
            Method::ClosedSum | Method::HarmonicForm if k < 2 || j == 0 => {
                Ok(base_case(k, j))
            }
            _ => {
                if let Some(v) = self.memo.read().expect("coeff memo poisoned").get(&(k, j)) {
                    return Ok(v.clone());
                }
                let v = match self.method {
                    Method::ClosedSum => s2star_sum(k, j)?,
                    Method::HarmonicForm => s2star_harmonic(k, j)?,
                    Method::OgfExtraction => {
                        if j == 0 {
                            base_case(k, 0)
                        } else {
                            s2star_ogf_coeff(k, j)?
                        }
                    }
                    Method::Recurrence => unreachable!(),
                };
                self.memo
                    .write()
                    .expect("coeff memo poisoned")
                    .insert((k, j), v.clone());
                Ok(v)
            }
        }
    }

    fn recurrence(&self, k: usize, j: usize) -> ExactRational {
        {
            let rows = self.rows.read().expect("coeff rows poisoned");
            if let Some(v) = rows.get(k).and_then(|row| row.get(j)) {
                return v.clone();
            }
        }
        let mut rows = self.rows.write().expect("coeff rows poisoned");
        for r in 0..=k {
            if rows.len() <= r {
                rows.push(Vec::new());
            }
            while rows[r].len() <= j {
                let c = rows[r].len();
                let v = if r < 2 || c == 0 {
                    base_case(r, c)
                } else {
                    let jq = ExactRational::from(c as i64);
                    (&rows[r - 1][c] - &rows[r][c - 1]) / jq
                };
                rows[r].push(v);
            }
        }
        rows[k][j].clone()
    }
}

/// Rows 0 and 1 and column 0: `{{0,j}}* = [j=0]`, `{{1,j}}* = [j=1]`,
/// `{{k,0}}* = [k=0]`.
fn base_case(k: usize, j: usize) -> ExactRational {
    let one = match k {
        0 => j == 0,
        1 => j == 1,
        _ => false,
    };
    if one {
        ExactRational::one()
    } else {
        ExactRational::zero()
    }
}

fn signed_inv_factorial(j: usize) -> ExactRational {
    ExactRational::sign_power(j as i64 - 1) / factorial_q(j as u64)
}

/// `{{k, j}}*` from the recurrence, memoized in the shared table.
pub fn s2star_rec(k: usize, j: usize) -> ExactRational {
    CoeffTable::shared().recurrence(k, j)
}

/// `{{k, j}}* = sum_{m=1}^j C(j,m) (-1)^(j-m) / (j! m^(k-2))`, valid for `k >= 2`.
pub fn s2star_sum(k: usize, j: usize) -> Result<ExactRational> {
    if k < 2 {
        return Err(domain(format!("closed sum needs k >= 2, got {k}")));
    }
    if j == 0 {
        return Err(domain("closed sum needs j >= 1"));
    }
    let total: ExactRational = (1..=j)
        .map(|m| {
            let base = ExactRational::from(m as i64).pow(-((k - 2) as i32)).expect("m >= 1");
            binomial_q(j as u64, m as u64) * ExactRational::sign_power((j - m) as i64) * base
        })
        .sum();
    Ok(total / factorial_q(j as u64))
}

/// Harmonic-number closed forms for `2 <= k <= 6`.
pub fn s2star_harmonic(k: usize, j: usize) -> Result<ExactRational> {
    if !(2..=6).contains(&k) {
        return Err(domain(format!("harmonic forms cover 2 <= k <= 6, got {k}")));
    }
    if j == 0 {
        return Err(domain("harmonic forms need j >= 1"));
    }
    let h = |r: i64| harmonic(j as u64, r);
    let q = |n: i64| ExactRational::from(n);
    let (h1, h2, h3, h4) = (h(1), h(2), h(3), h(4));
    let poly = match k {
        2 => q(1),
        3 => h1.clone(),
        4 => (&h1 * &h1 + &h2) / q(2),
        5 => (&h1 * &h1 * &h1 + q(3) * &h1 * &h2 + q(2) * &h3) / q(6),
        _ => {
            (h1.pow(4)? + q(6) * &h1 * &h1 * &h2 + q(3) * &h2 * &h2 + q(8) * &h1 * &h3 + q(6) * &h4)
                / q(24)
        }
    };
    Ok(signed_inv_factorial(j) * poly)
}

/// Returns `{{k+2, j}}*` from
/// `{{k+2,j}}* = sum_{0<=m<k} H_j^(m+1)/k * {{k+1-m,j}}* + [k=0] (-1)^(j-1)/j!`,
/// recursing on itself rather than on any other route.
pub fn s2star_heuristic(k: usize, j: usize) -> Result<ExactRational> {
    if j == 0 {
        return Err(domain("heuristic recurrence needs j >= 1"));
    }
    let powers: Vec<ExactRational> = (1..=k as i64).map(|r| harmonic(j as u64, r)).collect();
    // shifted[i] = {{i+2, j}}*
    let mut shifted: Vec<ExactRational> = vec![signed_inv_factorial(j)];
    for kk in 1..=k {
        let kq = ExactRational::from(kk as i64);
        let v: ExactRational = (0..kk)
            .map(|m| &powers[m] * &shifted[kk - 1 - m])
            .sum::<ExactRational>()
            / kq;
        shifted.push(v);
    }
    Ok(shifted.pop().expect("nonempty"))
}

/// `[z^k]` of `(-1)^(j+1) z^2 / ((1-z)(2-z)...(j-z))` for `j >= 2`, or of
/// `z/(1-z)` for `j = 1`, by truncated series division.
pub fn s2star_ogf_coeff(k: usize, j: usize) -> Result<ExactRational> {
    if j == 0 {
        return Err(domain("OGF extraction needs j >= 1"));
    }
    let order = k.max(2);
    let one = ExactRational::one();
    if j == 1 {
        let num = TruncSeries::monomial(one.clone(), 1, order);
        let den = TruncSeries::new(vec![one.clone(), -one]).truncate(order);
        return Ok(num.div(&den)?.coeff(k));
    }
    let mut den = TruncSeries::one(order);
    for i in 1..=j {
        let factor = TruncSeries::new(vec![ExactRational::from(i as i64), -one.clone()]);
        den = den.mul(&factor.truncate(order));
    }
    let num = TruncSeries::monomial(ExactRational::sign_power(j as i64 + 1), 2, order);
    Ok(num.div(&den)?.coeff(k))
}

/// Table-2 scaling `{{k, j}}* (-1)^(j-1) j!`. Column 0 is left unscaled so that
/// the corner cell stays 1.
pub fn s2star_scaled(k: usize, j: usize) -> ExactRational {
    if j == 0 {
        return s2star_rec(k, 0);
    }
    s2star_rec(k, j) * ExactRational::sign_power(j as i64 - 1) * factorial_q(j as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Remainder {
    T0,
    T1,
}

/// `t0^(k)(j) = scaled(k, j) - c(j+1, k-1)/j!` and
/// `t1^(k)(j) = scaled(k, j) + c(j+1, k-1)/j!` with the unsigned first kind.
pub fn remainder_t(variant: Remainder, k: usize, j: usize) -> Result<ExactRational> {
    if k < 2 {
        return Err(domain(format!("remainder terms need k >= 2, got {k}")));
    }
    let stirling = ExactRational::from_integer(stirling1_unsigned(j + 1, k - 1)) / factorial_q(j as u64);
    let scaled = s2star_scaled(k, j);
    Ok(match variant {
        Remainder::T0 => scaled - stirling,
        Remainder::T1 => scaled + stirling,
    })
}

/// The tabulated harmonic-number expressions for `t0`, `t1`, `2 <= k <= 7`.
pub fn remainder_table_expression(variant: Remainder, k: usize, j: usize) -> Result<ExactRational> {
    let h = |r: i64| harmonic(j as u64, r);
    let q = |n: i64| ExactRational::from(n);
    let (h1, h2, h3, h4, h5) = (h(1), h(2), h(3), h(4), h(5));
    Ok(match (variant, k) {
        (Remainder::T0, 2) | (Remainder::T0, 3) => q(0),
        (Remainder::T1, 2) => q(2),
        (Remainder::T1, 3) => q(2) * h1,
        (Remainder::T0, 4) => h2,
        (Remainder::T1, 4) => &h1 * &h1,
        (Remainder::T0, 5) => h1 * h2,
        (Remainder::T1, 5) => (h1.pow(3)? + q(2) * h3) / q(3),
        (Remainder::T0, 6) => (&h1 * &h1 * h2 + h4) / q(2),
        (Remainder::T1, 6) => (h1.pow(4)? + q(3) * &h2 * &h2 + q(8) * h1 * h3) / q(12),
        (Remainder::T0, 7) => (h1.pow(3)? * &h2 + q(2) * &h2 * &h3 + q(3) * h1 * h4) / q(6),
        (Remainder::T1, 7) => {
            (h1.pow(5)? + q(15) * &h1 * &h2 * &h2 + q(20) * &h1 * &h1 * h3 + q(24) * h5) / q(60)
        }
        _ => return Err(domain(format!("remainder table covers 2 <= k <= 7, got {k}"))),
    })
}

/// Coefficients for the weight `1/f(n)^(k-2)` with `f(n) = alpha n + beta`:
/// `(1/j!) sum_{m=1}^j C(j,m) (-1)^(j-m) / (alpha m + beta)^(k-2)`.
pub fn s2star_general_f(
    k: usize,
    j: usize,
    alpha: &ExactRational,
    beta: &ExactRational,
) -> Result<ExactRational> {
    if k < 2 {
        return Err(domain(format!("generalized coefficients need k >= 2, got {k}")));
    }
    let mut total = ExactRational::zero();
    for m in 1..=j {
        let f = alpha * ExactRational::from(m as i64) + beta;
        if f.is_zero() {
            return Err(domain(format!("f(m) = 0 at m = {m}")));
        }
        let term = f.pow(-((k - 2) as i32))?;
        total += binomial_q(j as u64, m as u64) * ExactRational::sign_power((j - m) as i64) * term;
    }
    Ok(total / factorial_q(j as u64))
}

/// `{{k+2, j}}* = (-1)^j/(j-1)! [z^j] Li_{k+1}(-z/(1-z))`, composing exact
/// truncated series.
pub fn s2star_reverse_binomial(k: usize, j: usize) -> Result<ExactRational> {
    if j == 0 {
        return Err(domain("reverse binomial form needs j >= 1"));
    }
    let inner: RatSeries = TruncSeries::from_fn(j, |n| {
        if n == 0 {
            ExactRational::zero()
        } else {
            -ExactRational::one()
        }
    });
    let composed = polylog_series(k as i32 + 1, j).compose(&inner)?;
    Ok(composed.coeff(j) * ExactRational::sign_power(j as i64) / factorial_q(j as u64 - 1))
}

/// Rows `0..=kmax`, columns `0..=jmax`, optionally scaled.
pub fn coefficient_table(kmax: usize, jmax: usize, scaled: bool) -> Vec<Vec<ExactRational>> {
    (0..=kmax)
        .map(|k| {
            (0..=jmax)
                .map(|j| if scaled { s2star_scaled(k, j) } else { s2star_rec(k, j) })
                .collect()
        })
        .collect()
}
