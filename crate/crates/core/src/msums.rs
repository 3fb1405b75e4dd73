//! The remainder sums `M_{k+1}^(d)(n)` and the recurrences stated for them.
//!
//! Nothing here asserts that the stated relations hold. Each function returns
//! exact values or exact residuals; the audit suite records them.

use serde::Serialize;

use crate::coeffs::s2star_rec;
use crate::error::{domain, Error, Result};
use crate::exactnum::{binomial_q, factorial_q, ExactRational};
use crate::harmonic::harmonic;
use crate::special::zeta;
use crate::stirling::{stirling1_signed, stirling1_unsigned};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StirlingReading {
    Unsigned,
    Signed,
}

/// Which formula supplies the `M` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MSource {
    DefUnsigned,
    DefSigned,
    Alt,
}

impl MSource {
    pub const ALL: [MSource; 3] = [MSource::DefUnsigned, MSource::DefSigned, MSource::Alt];
}

/// Parameters of one `M_{k+1}^(d)(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MSumSpec {
    pub k: usize,
    pub d: usize,
    pub n: u64,
    pub reading: StirlingReading,
}

fn check_d(d: usize) -> Result<()> {
    if d == 0 {
        return Err(domain("M sums need d >= 1"));
    }
    Ok(())
}

/// `sum_{m=1}^d s1(d, m) H_n^(k+1-m)`.
pub fn m_def(spec: MSumSpec) -> Result<ExactRational> {
    check_d(spec.d)?;
    Ok((1..=spec.d)
        .map(|m| {
            let s1 = match spec.reading {
                StirlingReading::Unsigned => stirling1_unsigned(spec.d, m),
                StirlingReading::Signed => stirling1_signed(spec.d, m),
            };
            ExactRational::from_integer(s1) * harmonic(spec.n, spec.k as i64 + 1 - m as i64)
        })
        .sum())
}

/// `sum_{j=1}^n C(n,j) {{k+2,j}}* (-1)^j/(j+d) * (n+d)!/n!`.
pub fn m_alt(k: usize, d: usize, n: u64) -> Result<ExactRational> {
    check_d(d)?;
    let sum: ExactRational = (1..=n)
        .map(|j| {
            binomial_q(n, j)
                * s2star_rec(k + 2, j as usize)
                * ExactRational::sign_power(j as i64)
                / ExactRational::from((j as usize + d) as i64)
        })
        .sum();
    Ok(sum * factorial_q(n + d as u64) / factorial_q(n))
}

/// `M_{k+1}^(d)(n)` from the chosen formula.
pub fn m_value(k: usize, d: usize, n: u64, source: MSource) -> Result<ExactRational> {
    match source {
        MSource::DefUnsigned => m_def(MSumSpec { k, d, n, reading: StirlingReading::Unsigned }),
        MSource::DefSigned => m_def(MSumSpec { k, d, n, reading: StirlingReading::Signed }),
        MSource::Alt => m_alt(k, d, n),
    }
}

/// `M_{k+1}(n) - M_{k+1}(n+1) + (n+2) M_{k+2}(n+1) - (n+2) M_{k+2}(n)`.
pub fn m_recurrence_residual(k: usize, d: usize, n: u64, source: MSource) -> Result<ExactRational> {
    let m = |kk, nn| m_value(kk, d, nn, source);
    let w = ExactRational::from(n as i64 + 2);
    Ok(m(k, n)? - m(k, n + 1)? + &w * m(k + 1, n + 1)? - &w * m(k + 1, n)?)
}

/// Both sides of a relation and their difference `lhs - rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Residual {
    pub lhs: ExactRational,
    pub rhs: ExactRational,
    pub residual: ExactRational,
}

impl Residual {
    fn new(lhs: ExactRational, rhs: ExactRational) -> Self {
        let residual = &lhs - &rhs;
        Self { lhs, rhs, residual }
    }

    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

struct Terms {
    h: [ExactRational; 5],
    m: [ExactRational; 6],
}

impl Terms {
    /// `h[i] = H_n^(k-i)` and `m[d] = M_{k+1}^(d)(n)` for `d = 2..5`.
    fn new(k: usize, n: u64, source: MSource) -> Result<Self> {
        let h = std::array::from_fn(|i| harmonic(n, k as i64 - i as i64));
        let mut m: [ExactRational; 6] = std::array::from_fn(|_| ExactRational::zero());
        for (d, slot) in m.iter_mut().enumerate().skip(2) {
            *slot = m_value(k, d, n, source)?;
        }
        Ok(Self { h, m })
    }
}

fn q(n: i64) -> ExactRational {
    ExactRational::from(n)
}

/// One of the six almost-linear relations; `m` is the free parameter of the
/// sixth. The undefined order `p` is read as `k`.
pub fn almost_linear_check(
    which: u8,
    k: usize,
    n: u64,
    m: &ExactRational,
    source: MSource,
) -> Result<Residual> {
    let t = Terms::new(k, n, source)?;
    let (h, mm) = (&t.h, &t.m);
    let (lhs, rhs) = match which {
        1 => (h[0].clone(), &h[2] - q(3) * &mm[2] + &mm[3]),
        2 => (q(2) * &h[0], -(q(3) * &h[1]) - &h[2] - &mm[3]),
        3 => (
            q(7) * &h[0],
            -(q(12) * &h[1]) + q(6) * &h[2] - &h[3] - &mm[2] + &mm[4],
        ),
        4 => (
            q(5) * &h[0],
            -(q(9) * &h[1]) - q(5) * &h[2] - &h[3] - &mm[2] + &mm[3] - &mm[4],
        ),
        5 => (h[0].clone(), q(2) * &h[2] - &h[3] + &mm[2] - q(4) * &mm[3] + &mm[4]),
        6 => (
            h[0].clone(),
            (q(1) - m) * &h[2] + m * &h[4] - (q(12) * m + q(3)) * &mm[2]
                + (q(24) * m + q(1)) * &mm[3]
                - q(10) * m * &mm[4]
                + m * &mm[5],
        ),
        _ => return Err(domain(format!("relations are numbered 1..6, got {which}"))),
    };
    Ok(Residual::new(lhs, rhs))
}

/// The parameterized families behind the almost-linear relations, with free
/// constants `a1`, `(b1, b2)` or `(c1, c2, c3)` and a nonzero `d`.
pub fn general_relations_check(
    family: u8,
    coeffs: &[ExactRational],
    d: &ExactRational,
    k: usize,
    n: u64,
    source: MSource,
) -> Result<Residual> {
    if d.is_zero() {
        return Err(domain("the scale d must be nonzero"));
    }
    let expected = match family {
        1..=3 => family as usize,
        _ => return Err(domain(format!("families are numbered 1..3, got {family}"))),
    };
    if coeffs.len() != expected {
        return Err(Error::Dimension { expected, got: coeffs.len() });
    }
    let t = Terms::new(k, n, source)?;
    let (h, mm) = (&t.h, &t.m);
    let lhs = d * &h[0];
    let rhs = match family {
        1 => {
            let a1 = &coeffs[0];
            a1 * &h[1]
                + (a1 + d) * &h[2]
                + (q(2) * a1 + q(3) * d) * &mm[2]
                + (a1 + d) * &mm[3]
        }
        2 => {
            let (b1, b2) = (&coeffs[0], &coeffs[1]);
            let tail = b1 - b2 + d;
            b1 * &h[1] + b2 * &h[2] - &tail * &h[3]
                - (q(6) * b1 - q(4) * b2 + q(7) * d) * &mm[2]
                + (q(6) * b1 - q(5) * b2 + q(6) * d) * &mm[3]
                - &tail * &mm[4]
        }
        _ => {
            let (c1, c2, c3) = (&coeffs[0], &coeffs[1], &coeffs[2]);
            let tail = c1 - c2 + c3 + d;
            c1 * &h[1] + c2 * &h[2] + c3 * &h[3] + &tail * &h[4]
                - (q(14) * c1 - q(12) * c2 + q(8) * c3 + q(15) * d) * &mm[2]
                + (q(25) * c1 - q(24) * c2 + q(19) * c3 + q(25) * d) * &mm[3]
                - (q(10) * c1 - q(10) * c2 + q(9) * c3 + q(10) * d) * &mm[4]
                + &tail * &mm[5]
        }
    };
    Ok(Residual::new(lhs, rhs))
}

/// One row of the `zeta(5)` diagnostic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Zeta5Row {
    pub n: u64,
    /// `3 M_6^(2)(n) - M_6^(3)(n)`
    pub combination: f64,
    /// `zeta(3) - combination`, to be compared with `zeta(5)`
    pub estimate: f64,
}

/// Partial values of `3 M_6^(2)(n) - M_6^(3)(n)` for the listed `n`. No
/// convergence claim is made.
pub fn zeta5_diagnostic(ns: &[u64], source: MSource) -> Result<Vec<Zeta5Row>> {
    let zeta3 = zeta(3)?;
    ns.iter()
        .map(|&n| {
            let c = (q(3) * m_value(5, 2, n, source)? - m_value(5, 3, n, source)?).to_f64();
            Ok(Zeta5Row { n, combination: c, estimate: zeta3 - c })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(n: i64, d: i64) -> ExactRational {
        ExactRational::frac(n, d)
    }

    fn spec(k: usize, d: usize, n: u64) -> MSumSpec {
        MSumSpec { k, d, n, reading: StirlingReading::Unsigned }
    }

    #[test]
    fn definition_examples() {
        assert_eq!(m_def(spec(3, 1, 1)).unwrap(), fr(1, 1));
        assert_eq!(m_def(spec(3, 2, 1)).unwrap(), fr(2, 1));
        for d in 1..=4 {
            assert_eq!(m_def(spec(5, d, 0)).unwrap(), fr(0, 1));
        }
        assert!(m_def(spec(3, 0, 1)).is_err());
    }

    #[test]
    fn alternate_examples() {
        assert_eq!(m_alt(3, 1, 1).unwrap(), fr(-1, 1));
        assert_eq!(m_alt(4, 2, 0).unwrap(), fr(0, 1));
        assert_eq!(m_alt(3, 1, 2).unwrap(), fr(-63, 16));
    }

    #[test]
    fn documented_discrepancy() {
        assert_eq!(m_alt(3, 1, 1).unwrap(), fr(-1, 1));
        assert_eq!(m_def(spec(3, 1, 1)).unwrap(), fr(1, 1));
    }

    #[test]
    fn recurrence_residuals() {
        assert_eq!(m_recurrence_residual(3, 1, 1, MSource::Alt).unwrap(), fr(-191, 32));
        assert_eq!(m_recurrence_residual(3, 1, 0, MSource::DefUnsigned).unwrap(), fr(1, 1));
        assert_eq!(m_recurrence_residual(3, 1, 0, MSource::Alt).unwrap(), fr(-1, 1));
        assert_eq!(m_recurrence_residual(4, 2, 3, MSource::DefUnsigned).unwrap(), fr(5, 1024));
    }

    #[test]
    fn relations_vanish_at_zero() {
        for which in 1..=6 {
            for source in MSource::ALL {
                let r = almost_linear_check(which, 6, 0, &fr(1, 1), source).unwrap();
                assert!(r.holds(), "{which} {source:?}");
            }
        }
        assert!(almost_linear_check(7, 6, 0, &fr(1, 1), MSource::Alt).is_err());
    }

    #[test]
    fn family_residuals() {
        let unsigned: Vec<_> = (0..4)
            .map(|n| general_relations_check(1, &[fr(0, 1)], &fr(1, 1), 5, n, MSource::DefUnsigned).unwrap().residual)
            .collect();
        assert_eq!(unsigned, vec![fr(0, 1), fr(-12, 1), fr(-51, 4), fr(-12553, 972)]);
        let signed: Vec<_> = (0..4)
            .map(|n| general_relations_check(1, &[fr(0, 1)], &fr(1, 1), 5, n, MSource::DefSigned).unwrap().residual)
            .collect();
        assert_eq!(signed, vec![fr(0, 1), fr(0, 1), fr(-3, 16), fr(-985, 3888)]);
    }

    #[test]
    fn family_arguments() {
        let one = fr(1, 1);
        assert!(matches!(
            general_relations_check(2, &[one.clone()], &one, 5, 2, MSource::Alt),
            Err(Error::Dimension { expected: 2, got: 1 })
        ));
        assert!(general_relations_check(1, &[one.clone()], &fr(0, 1), 5, 2, MSource::Alt).is_err());
        assert!(general_relations_check(4, &[], &one, 5, 2, MSource::Alt).is_err());
        let c = [fr(1, 1), fr(-1, 1), fr(0, 1)];
        assert!(general_relations_check(3, &c, &fr(2, 1), 6, 3, MSource::Alt).is_ok());
    }

    #[test]
    fn zeta5_rows() {
        let rows = zeta5_diagnostic(&[1, 2, 4], MSource::Alt).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.estimate.is_finite()));
    }
}
