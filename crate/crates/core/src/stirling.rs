//! Stirling numbers of both kinds, Bernoulli numbers and polynomials, and
//! the classical power-sum formulas built from them.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::exactnum::{binomial_q, ExactRational};
use crate::series::TruncSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StirlingKind {
    Second,
    FirstUnsigned,
    FirstSigned,
}

/// Memoized triangle of Stirling numbers. Rows are grown under a write lock
/// and never mutated afterwards, so concurrent readers only ever see complete rows.
#[derive(Debug)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: RwLock<Vec<Vec<BigInt>>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind) -> Self {
        Self {
            kind,
            rows: RwLock::new(vec![vec![BigInt::one()]]),
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    /// Process-wide tables used by the free functions below.
    pub fn shared(kind: StirlingKind) -> &'static StirlingTable {
        static SECOND: OnceLock<StirlingTable> = OnceLock::new();
        static FIRST: OnceLock<StirlingTable> = OnceLock::new();
        static FIRST_SIGNED: OnceLock<StirlingTable> = OnceLock::new();
        let cell = match kind {
            StirlingKind::Second => &SECOND,
            StirlingKind::FirstUnsigned => &FIRST,
            StirlingKind::FirstSigned => &FIRST_SIGNED,
        };
        cell.get_or_init(|| StirlingTable::new(kind))
    }

    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        let unsigned = self.unsigned_entry(n, k);
        match self.kind {
            StirlingKind::FirstSigned if (n - k) % 2 == 1 => -unsigned,
            _ => unsigned,
        }
    }

    fn unsigned_entry(&self, n: usize, k: usize) -> BigInt {
        {
            let rows = self.rows.read().expect("stirling table poisoned");
            if let Some(row) = rows.get(n) {
                return row[k].clone();
            }
        }
        let mut rows = self.rows.write().expect("stirling table poisoned");
        while rows.len() <= n {
            let m = rows.len();
            let prev = &rows[m - 1];
            let mut row = vec![BigInt::zero(); m + 1];
            for (j, slot) in row.iter_mut().enumerate().skip(1) {
                let stay = if j < m { prev[j].clone() } else { BigInt::zero() };
                let weight = match self.kind {
                    StirlingKind::Second => j,
                    _ => m - 1,
                };
                *slot = stay * weight + &prev[j - 1];
            }
            rows.push(row);
        }
        rows[n][k].clone()
    }
}

/// Stirling numbers of the second kind from the triangular recurrence with
/// base case `[n = k = 0]`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    StirlingTable::shared(StirlingKind::Second).get(n, k)
}

/// Unsigned Stirling numbers of the first kind (permutations of `n` with `k` cycles).
pub fn stirling1_unsigned(n: usize, k: usize) -> BigInt {
    StirlingTable::shared(StirlingKind::FirstUnsigned).get(n, k)
}

pub fn stirling1_signed(n: usize, k: usize) -> BigInt {
    StirlingTable::shared(StirlingKind::FirstSigned).get(n, k)
}

/// Bernoulli numbers with `B_1 = -1/2`.
#[derive(Debug, Default)]
pub struct BernoulliTable {
    memo: RwLock<Vec<ExactRational>>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn shared() -> &'static BernoulliTable {
        static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
        TABLE.get_or_init(BernoulliTable::new)
    }

    pub fn get(&self, n: usize) -> ExactRational {
        {
            let memo = self.memo.read().expect("bernoulli table poisoned");
            if let Some(b) = memo.get(n) {
                return b.clone();
            }
        }
        let mut memo = self.memo.write().expect("bernoulli table poisoned");
        while memo.len() <= n {
            let m = memo.len();
            // sum_{j<=m} C(m+1, j) B_j = [m = 0]
            let b = if m == 0 {
                ExactRational::one()
            } else if m >= 3 && m % 2 == 1 {
                ExactRational::zero()
            } else {
                let partial: ExactRational = (0..m)
                    .map(|j| binomial_q(m as u64 + 1, j as u64) * &memo[j])
                    .sum();
                -partial / ExactRational::from(m as i64 + 1)
            };
            memo.push(b);
        }
        memo[n].clone()
    }
}

pub fn bernoulli_number(n: usize) -> ExactRational {
    BernoulliTable::shared().get(n)
}

/// `B_n(x) = sum_k C(n, k) B_k x^(n-k)`.
pub fn bernoulli_poly(n: usize, x: &ExactRational) -> ExactRational {
    let mut power = ExactRational::one();
    let mut acc = ExactRational::zero();
    // power = x^(n-k)
    for k in (0..=n).rev() {
        acc += binomial_q(n as u64, k as u64) * bernoulli_number(k) * &power;
        power = &power * x;
    }
    acc
}

/// `S_k(n) = sum_{j=0}^{n-1} j^k` through the Bernoulli closed form.
pub fn faulhaber_sum(k: usize, n: u64) -> ExactRational {
    let nq = ExactRational::from(n as i64);
    let total: ExactRational = (0..=k)
        .map(|m| {
            binomial_q(k as u64 + 1, m as u64)
                * bernoulli_number(m)
                * nq.pow((k + 1 - m) as i32).expect("nonnegative exponent")
        })
        .sum();
    total / ExactRational::from(k as i64 + 1)
}

/// `sum_j S2(k, j) x^j D^j [sum_{i<=n} x^i]`, differentiating the expanded
/// polynomial exactly. Equals `sum_{j=0}^n j^k x^j`.
pub fn stirling2_power_sum(k: usize, n: usize, x: &ExactRational) -> Result<ExactRational> {
    if x.is_zero() || *x == ExactRational::one() {
        return Err(domain("stirling2_power_sum requires x not in {0, 1}"));
    }
    let geometric = TruncSeries::new(vec![ExactRational::one(); n + 1]);
    let mut total = ExactRational::zero();
    let mut xj = ExactRational::one();
    for j in 0..=k {
        let s = stirling2(k, j);
        if !s.is_zero() {
            let derived = geometric.nth_derivative(j);
            total += ExactRational::from_integer(s) * &xj * derived.evaluate(x);
        }
        xj = &xj * x;
    }
    Ok(total)
}

/// Row sums of the unsigned first kind, `sum_k c(n, k) = n!`, exposed for table checks.
pub fn stirling1_row_sum(n: usize) -> BigInt {
    (0..=n).map(|k| stirling1_unsigned(n, k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::factorial;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::frac(n, d)
    }

    /// Counts set partitions of `{0..n}` into exactly `k` blocks by
    /// enumerating restricted growth strings.
    fn brute_partitions(n: usize, k: usize) -> u64 {
        fn go(i: usize, n: usize, k: usize, max: usize, count: &mut u64) {
            if i == n {
                if max == k {
                    *count += 1;
                }
                return;
            }
            for b in 0..=max.min(k) {
                let next = if b == max { max + 1 } else { max };
                if next <= k {
                    go(i + 1, n, k, next, count);
                }
            }
        }
        if n == 0 {
            return (k == 0) as u64;
        }
        let mut count = 0;
        go(0, n, k, 0, &mut count);
        count
    }

    /// Counts permutations of `n` elements with exactly `k` cycles.
    fn brute_cycles(n: usize, k: usize) -> u64 {
        fn perms(v: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
            if i == v.len() {
                out.push(v.clone());
                return;
            }
            for j in i..v.len() {
                v.swap(i, j);
                perms(v, i + 1, out);
                v.swap(i, j);
            }
        }
        let mut all = Vec::new();
        perms(&mut (0..n).collect(), 0, &mut all);
        all.iter()
            .filter(|p| {
                let mut seen = vec![false; n];
                let mut cycles = 0;
                for s in 0..n {
                    if !seen[s] {
                        cycles += 1;
                        let mut c = s;
                        while !seen[c] {
                            seen[c] = true;
                            c = p[c];
                        }
                    }
                }
                cycles == k
            })
            .count() as u64
    }

    #[test]
    fn stirling2_examples() {
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(brute_partitions(4, 2), 7);
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        for n in 0..=20 {
            assert_eq!(stirling2(n, n), BigInt::one());
        }
        for n in 0..=7 {
            for k in 0..=n {
                assert_eq!(stirling2(n, k), BigInt::from(brute_partitions(n, k)), "({n},{k})");
            }
        }
        assert_eq!(stirling2(3, 5), BigInt::zero());
    }

    #[test]
    fn stirling1_examples() {
        assert_eq!(brute_cycles(3, 2), 3);
        assert_eq!(stirling1_unsigned(3, 2), BigInt::from(3));
        assert_eq!(brute_cycles(3, 1), 2);
        assert_eq!(stirling1_unsigned(3, 1), BigInt::from(2));
        for n in 0..=6 {
            assert_eq!(stirling1_unsigned(n, n), BigInt::one());
            for k in 0..=n {
                assert_eq!(stirling1_unsigned(n, k), BigInt::from(brute_cycles(n, k)));
                let sign = if (n - k) % 2 == 1 { -1 } else { 1 };
                assert_eq!(stirling1_signed(n, k), stirling1_unsigned(n, k) * sign);
            }
        }
        for n in 0..=15 {
            assert_eq!(stirling1_row_sum(n), factorial(n as u64));
        }
        let signed = StirlingTable::new(StirlingKind::FirstSigned);
        assert_eq!(signed.get(3, 2), BigInt::from(-3));
        assert_eq!(signed.kind(), StirlingKind::FirstSigned);
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli_number(0), q(1, 1));
        assert_eq!(bernoulli_number(1), q(-1, 2));
        // convolution oracle: 1 + 3 B_1 + 3 B_2 = 0
        let b2 = (q(-1, 1) - q(3, 1) * q(-1, 2)) / q(3, 1);
        assert_eq!(bernoulli_number(2), b2);
        assert_eq!(b2, q(1, 6));
        assert_eq!(bernoulli_number(3), q(0, 1));
        assert_eq!(bernoulli_number(12), q(-691, 2730));
        for n in (3..40).step_by(2) {
            assert!(bernoulli_number(n).is_zero());
        }
    }

    #[test]
    fn bernoulli_poly_examples() {
        let x = q(1, 4);
        assert_eq!(bernoulli_poly(1, &x), &x - q(1, 2));
        assert_eq!(bernoulli_poly(1, &x), q(-1, 4));
        assert_eq!(bernoulli_poly(0, &q(7, 3)), q(1, 1));
        assert_eq!(bernoulli_poly(2, &x), &x * &x - &x + q(1, 6));
        assert_eq!(bernoulli_poly(2, &x), q(-1, 48));
    }

    #[test]
    fn faulhaber_examples_and_grid() {
        assert_eq!(faulhaber_sum(1, 5), q(10, 1));
        assert_eq!(faulhaber_sum(3, 0), q(0, 1));
        assert_eq!(faulhaber_sum(2, 4), q(14, 1));
        for k in 0..=10u32 {
            for n in 0..=50u64 {
                let direct: BigInt = (0..n).map(|j| BigInt::from(j).pow(k)).sum();
                assert_eq!(faulhaber_sum(k as usize, n), ExactRational::from_integer(direct));
            }
        }
    }

    #[test]
    fn stirling2_power_sum_examples() {
        assert_eq!(stirling2_power_sum(1, 2, &q(1, 2)).unwrap(), q(1, 1));
        assert_eq!(stirling2_power_sum(2, 3, &q(2, 1)).unwrap(), q(90, 1));
        let x = q(3, 7);
        let geo: ExactRational = (0..=5).map(|i| x.pow(i).unwrap()).sum();
        assert_eq!(stirling2_power_sum(0, 5, &x).unwrap(), geo);
        assert!(stirling2_power_sum(1, 2, &q(1, 1)).is_err());
        assert!(stirling2_power_sum(1, 2, &q(0, 1)).is_err());
    }

    #[test]
    fn stirling2_power_sum_grid() {
        for x in [q(-1, 1), q(1, 2), q(2, 1), q(3, 7)] {
            for k in 0..=6u32 {
                for n in 0..=20usize {
                    let direct: ExactRational = (0..=n)
                        .map(|j| ExactRational::from((j as i64).pow(k)) * x.pow(j as i32).unwrap())
                        .sum();
                    assert_eq!(stirling2_power_sum(k as usize, n, &x).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn concurrent_lookups_agree() {
        let table = StirlingTable::new(StirlingKind::Second);
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..8)
                .map(|t| {
                    let table = &table;
                    s.spawn(move || (0..30).map(|n| table.get(n + t, 3)).collect::<Vec<_>>())
                })
                .collect();
            for (t, h) in handles.into_iter().enumerate() {
                let got = h.join().unwrap();
                for (n, v) in got.into_iter().enumerate() {
                    assert_eq!(v, stirling2(n + t, 3));
                }
            }
        });
    }
}
