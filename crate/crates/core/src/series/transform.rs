use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coeffs::{s2star_general_f, s2star_rec};
use crate::error::{domain, Error, Result};
use crate::exactnum::{binomial_q, factorial_q, root_of_unity, ExactRational};
use crate::stirling::{stirling1_unsigned, stirling2};

use super::{
    exp_series, geometric, log_one_minus, polylog_series, BivarTruncSeries, ComplexSeries,
    RatSeries, TruncSeries,
};

/// `d^j/dz^j [1/(1 - t z)] = t^j j! / (1 - t z)^(j+1)`, truncated.
pub fn geom_derivative(t: &ExactRational, j: usize, order: usize) -> RatSeries {
    let tj = t.pow(j as i32).unwrap_or_else(|_| ExactRational::zero());
    let mut power = tj;
    TruncSeries::from_fn(order, |n| {
        // (n+j)!/n! = j! C(n+j, j)
        let c = &power * binomial_q((n + j) as u64, j as u64) * factorial_q(j as u64);
        power = &power * t;
        c
    })
}

/// `sum_{j=0}^m S(m, j) z^j G^(j)(z)`; coefficient `n` becomes `n^m g_n`.
pub fn transform_forward(g: &RatSeries, m: usize) -> RatSeries {
    (0..=m).fold(TruncSeries::zero(g.order()), |acc, j| {
        let c = ExactRational::from_integer(stirling2(m, j));
        acc.add(&g.theta_falling(j).scale(&c))
    })
}

/// `sum_{j>=1} {{k+2, j}}* z^j G^(j)(z)`; coefficient `n` becomes `g_n / n^k`.
pub fn transform_zeta(g: &RatSeries, k: usize) -> RatSeries {
    (1..=g.order()).fold(TruncSeries::zero(g.order()), |acc, j| {
        acc.add(&g.theta_falling(j).scale(&s2star_rec(k + 2, j)))
    })
}

/// The same transform with weights `1/(alpha n + beta)^k`.
pub fn transform_general_f(
    g: &RatSeries,
    k: usize,
    alpha: &ExactRational,
    beta: &ExactRational,
) -> Result<RatSeries> {
    let mut acc = TruncSeries::zero(g.order());
    for j in 1..=g.order() {
        let c = s2star_general_f(k + 2, j, alpha, beta)?;
        acc = acc.add(&g.theta_falling(j).scale(&c));
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IntroExample {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl IntroExample {
    pub const ALL: [IntroExample; 7] = [
        IntroExample::A,
        IntroExample::B,
        IntroExample::C,
        IntroExample::D,
        IntroExample::E,
        IntroExample::F,
        IntroExample::G,
    ];
}

impl fmt::Display for IntroExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            IntroExample::A => 'a',
            IntroExample::B => 'b',
            IntroExample::C => 'c',
            IntroExample::D => 'd',
            IntroExample::E => 'e',
            IntroExample::F => 'f',
            IntroExample::G => 'g',
        };
        write!(f, "{c}")
    }
}

impl FromStr for IntroExample {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IntroExample::ALL
            .into_iter()
            .find(|e| e.to_string() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| domain(format!("unknown example id {s:?}; expected a..g")))
    }
}

/// Scalars used by some of the examples: `t` in (d), `r` in (e), and the
/// progression `a n + b` in (g).
#[derive(Debug, Clone, PartialEq)]
pub struct IntroParams {
    pub t: ExactRational,
    pub r: ExactRational,
    pub a: u32,
    pub b: u32,
}

impl Default for IntroParams {
    fn default() -> Self {
        Self {
            t: ExactRational::one(),
            r: ExactRational::one(),
            a: 2,
            b: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum IntroOutput {
    Exact(RatSeries),
    Complex(ComplexSeries),
}

impl IntroOutput {
    pub fn as_exact(&self) -> Option<&RatSeries> {
        match self {
            IntroOutput::Exact(s) => Some(s),
            IntroOutput::Complex(_) => None,
        }
    }

    pub fn to_complex(&self) -> ComplexSeries {
        match self {
            IntroOutput::Exact(s) => s.to_complex(),
            IntroOutput::Complex(s) => s.clone(),
        }
    }
}

/// `sum_{j=1}^u {{k+2, j}}* term(j)`, each term a series in `y = w z`.
fn coefficient_block(k: usize, u: usize, term: impl Fn(usize) -> RatSeries) -> RatSeries {
    (1..=u).fold(TruncSeries::zero(u), |acc, j| {
        acc.add(&term(j).truncate(u).scale(&s2star_rec(k + 2, j)))
    })
}

/// `y^j j! / (1-y)^(j+1+extra)`.
fn derivative_term(j: usize, extra: usize, u: usize) -> RatSeries {
    let one = ExactRational::one();
    let mut s = geom_derivative(&one, j, u).shift(j).truncate(u);
    for _ in 0..extra {
        s = s.mul(&geometric(&one, u));
    }
    s
}

/// `y^j e^y`.
fn exp_term(j: usize, u: usize) -> RatSeries {
    exp_series(u).shift(j).truncate(u)
}

/// Builds the bracketed expression of one of the truncated generating
/// functions (a)..(g) and extracts `[w^u]` (or `[t^(au+b)]` for (g)).
///
/// The left-hand sides are
/// (a) `sum z^n/n^k`, (b) `sum z^n/(n^k n!)`, (c) `sum H_n^(k) z^n`,
/// (d) `sum H_n^(k)(t) z^n`, (e) `sum (sum_{m<=n} r^m/(m^k m!)) z^n`,
/// (f) `sum H_n^(k)/n! z^n`, each over `1 <= n <= u`, and
/// (g) `[b>0]/b^s + sum_{n<=u} z^n/(a n + b)^s`.
pub fn intro_example(
    id: IntroExample,
    k: usize,
    u: usize,
    params: &IntroParams,
) -> Result<IntroOutput> {
    if u == 0 {
        return Err(domain("truncation order u must be at least 1"));
    }
    let one = ExactRational::one();
    let outer = BivarTruncSeries::outer(&geometric(&one, u), u);
    let diag = |f: &RatSeries, c: &ExactRational| BivarTruncSeries::diagonal(f, c, u, u);
    let inner_geometric = diag(&geometric(&one, u), &one);
    let bivar = match id {
        IntroExample::A => diag(&coefficient_block(k, u, |j| derivative_term(j, 0, u)), &one),
        IntroExample::B => diag(&coefficient_block(k, u, |j| exp_term(j, u)), &one),
        IntroExample::C => diag(&coefficient_block(k, u, |j| derivative_term(j, 1, u)), &one),
        IntroExample::D => {
            let block = coefficient_block(k, u, |j| derivative_term(j, 0, u));
            diag(&block, &params.t).mul(&inner_geometric)
        }
        IntroExample::E => {
            let block = coefficient_block(k, u, |j| exp_term(j, u));
            diag(&block, &params.r).mul(&inner_geometric)
        }
        IntroExample::F => {
            let block = coefficient_block(k, u, |j| {
                let jq = ExactRational::from(j as i64 + 1);
                let factor = TruncSeries::new(vec![jq.clone(), one.clone()]).scale(&jq.recip().expect("j+1 > 0"));
                exp_term(j, u).mul(&factor.truncate(u))
            });
            diag(&block, &one)
        }
        IntroExample::G => return progression_example(k, u, params.a, params.b).map(IntroOutput::Complex),
    };
    Ok(IntroOutput::Exact(bivar.mul(&outer).coeff_w(u)))
}

/// Example (g) with the substitution `y = z^(1/a)`.
///
/// As printed the bracket carries `z^(b/a)` and `(t z^(1/a))^j`; with those
/// the extraction does not isolate the progression. The evaluated form uses
/// `(omega^m t y)^j` in the numerator and a prefactor `y^(-b)`, which turns
/// `[t^(au+b)]` into `sum_{N <= au+b, N = b mod a} y^(N-b)/N^s`, i.e. the left
/// side with `z^n = y^(an)`.
fn progression_example(s: usize, u: usize, a: u32, b: u32) -> Result<ComplexSeries> {
    if a < 2 || b >= a {
        return Err(domain(format!("progression needs a >= 2 and 0 <= b < a, got a = {a}, b = {b}")));
    }
    let top = a as usize * u + b as usize;
    let block = coefficient_block(s, top, |j| derivative_term(j, 0, top)).to_complex();
    let geometric_t =
        BivarTruncSeries::outer(&geometric(&ExactRational::one(), top).to_complex(), top);
    let mut in_y = TruncSeries::zero(top);
    for m in 0..a as i64 {
        let w = root_of_unity(a, m)?;
        let weight = root_of_unity(a, -m * b as i64)?.scale(1.0 / a as f64);
        let extracted = BivarTruncSeries::diagonal(&block, &w, top, top)
            .mul(&geometric_t)
            .coeff_w(top);
        in_y = in_y.add(&extracted.scale(&weight));
    }
    Ok(TruncSeries::from_fn(u, |n| in_y.coeff(a as usize * n + b as usize)))
}

/// `sum_{m<a} omega_a^(-m b)/a * F(omega_a^m z)`, keeping the coefficients
/// with `n = b (mod a)`.
pub fn multisection(f: &RatSeries, a: u32, b: u32) -> Result<ComplexSeries> {
    if a < 2 || b >= a {
        return Err(domain(format!("multisection needs a >= 2 and 0 <= b < a, got a = {a}, b = {b}")));
    }
    let fc = f.to_complex();
    let mut out = TruncSeries::zero(f.order());
    for m in 0..a as i64 {
        let w = root_of_unity(a, m)?;
        let weight = root_of_unity(a, -m * b as i64)?.scale(1.0 / a as f64);
        out = out.add(&fc.dilate(&w).scale(&weight));
    }
    Ok(out)
}

/// Both sides of the exponential generating function for unsigned Stirling
/// numbers of the first kind:
/// `sum_j c(j+1, k+1) z^j/j!` and `log(1/(1-z))^k / (k! (1-z))`.
pub fn stirling1_egf_check(k: usize, order: usize) -> (RatSeries, RatSeries) {
    let lhs = TruncSeries::from_fn(order, |j| {
        ExactRational::from_integer(stirling1_unsigned(j + 1, k + 1)) / factorial_q(j as u64)
    });
    let log_inv = log_one_minus(order).neg();
    let rhs = log_inv
        .pow(k as u32)
        .mul(&geometric(&ExactRational::one(), order))
        .scale(&factorial_q(k as u64).recip().expect("k! > 0"));
    (lhs, rhs)
}

/// `sum_{j=1}^order {{k+2, j}}* z^j e^z (j+1+z)/(j+1)`, the exponential
/// generating function of `H_n^(k)/n!`.
pub fn exp_harmonic_series(k: usize, order: usize) -> RatSeries {
    let one = ExactRational::one();
    coefficient_block(k, order, |j| {
        let jq = ExactRational::from(j as i64 + 1);
        let factor = TruncSeries::new(vec![jq.clone(), one.clone()]).scale(&jq.recip().expect("j+1 > 0"));
        exp_term(j, order).mul(&factor.truncate(order))
    })
}

/// Outcome of a coefficientwise series comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCheck {
    pub order: usize,
    pub pass: bool,
    /// `(n, lhs_n, rhs_n)` at the first differing coefficient.
    pub first_mismatch: Option<(usize, ExactRational, ExactRational)>,
}

impl SeriesCheck {
    pub fn compare(lhs: &RatSeries, rhs: &RatSeries) -> Self {
        let order = lhs.order().min(rhs.order());
        let first_mismatch = (0..=order)
            .find(|&n| lhs.coeff(n) != rhs.coeff(n))
            .map(|n| (n, lhs.coeff(n), rhs.coeff(n)));
        Self {
            order,
            pass: first_mismatch.is_none(),
            first_mismatch,
        }
    }
}

/// `Li_2(z) = -log(1-z)^2/2 - Li_2(-z/(1-z))` as exact truncated series.
pub fn dilog_functional_eq_check(order: usize) -> Result<SeriesCheck> {
    let lhs = polylog_series(2, order);
    let inner = TruncSeries::from_fn(order, |n| {
        if n == 0 {
            ExactRational::zero()
        } else {
            -ExactRational::one()
        }
    });
    let half = ExactRational::frac(1, 2);
    let rhs = log_one_minus(order)
        .pow(2)
        .scale(&-half)
        .sub(&polylog_series(2, order).compose(&inner)?);
    Ok(SeriesCheck::compare(&lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ComplexF;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::frac(n, d)
    }

    fn s(v: &[(i64, i64)]) -> RatSeries {
        TruncSeries::new(v.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn geometric_derivatives() {
        assert_eq!(geom_derivative(&q(1, 1), 0, 3), s(&[(1, 1); 4]));
        assert_eq!(geom_derivative(&q(1, 1), 1, 3), s(&[(1, 1), (2, 1), (3, 1), (4, 1)]));
        assert_eq!(geom_derivative(&q(2, 1), 1, 2), s(&[(2, 1), (8, 1), (24, 1)]));
    }

    #[test]
    fn forward_transform_examples() {
        let g = geometric(&q(1, 1), 6);
        let t1 = transform_forward(&g, 1);
        for n in 0..=6 {
            assert_eq!(t1.coeff(n), q(n as i64, 1));
        }
        assert_eq!(transform_forward(&g, 0), g);
        assert_eq!(transform_forward(&g, 2).coeff(3), q(9, 1));
    }

    #[test]
    fn zeta_transform_examples() {
        let g = geometric(&q(1, 1), 8);
        let h = transform_zeta(&g, 1);
        assert_eq!(h, polylog_series(1, 8));
        let g2 = g.mul(&g);
        assert_eq!(transform_zeta(&g2, 1).coeff(2), q(3, 2));
        // g_n = n^k round-trips to the geometric series without its constant
        let powers = TruncSeries::from_fn(8, |n| q((n as i64).pow(3), 1));
        let back = transform_zeta(&powers, 3);
        assert_eq!(back.coeff(0), q(0, 1));
        for n in 1..=8 {
            assert_eq!(back.coeff(n), q(1, 1));
        }
    }

    #[test]
    fn general_f_transform_reduces_to_standard() {
        let g = exp_series(7);
        assert_eq!(
            transform_general_f(&g, 2, &q(1, 1), &q(0, 1)).unwrap(),
            transform_zeta(&g, 2)
        );
        let odd = transform_general_f(&geometric(&q(1, 1), 6), 1, &q(2, 1), &q(-1, 1)).unwrap();
        for n in 1..=6 {
            assert_eq!(odd.coeff(n), q(1, 2 * n as i64 - 1));
        }
    }

    #[test]
    fn intro_examples_small_cases() {
        let p = IntroParams::default();
        let a = intro_example(IntroExample::A, 1, 3, &p).unwrap();
        assert_eq!(a.as_exact().unwrap(), &s(&[(0, 1), (1, 1), (1, 2), (1, 3)]));
        let c = intro_example(IntroExample::C, 2, 2, &p).unwrap();
        assert_eq!(c.as_exact().unwrap(), &s(&[(0, 1), (1, 1), (5, 4)]));
        let f = intro_example(IntroExample::F, 1, 2, &p).unwrap();
        assert_eq!(f.as_exact().unwrap(), &s(&[(0, 1), (1, 1), (3, 4)]));
        assert!(intro_example(IntroExample::A, 1, 0, &p).is_err());
        assert!("h".parse::<IntroExample>().is_err());
        assert_eq!("G".parse::<IntroExample>().unwrap(), IntroExample::G);
    }

    #[test]
    fn progression_example_small_case() {
        let p = IntroParams { a: 3, b: 1, ..IntroParams::default() };
        let g = intro_example(IntroExample::G, 2, 3, &p).unwrap().to_complex();
        let expected = [1.0, 1.0 / 16.0, 1.0 / 49.0, 1.0 / 100.0];
        for (n, e) in expected.iter().enumerate() {
            assert!((g.coeff(n) - ComplexF::real(*e)).abs() < 1e-12, "{n}");
        }
    }

    #[test]
    fn multisection_examples() {
        let even = multisection(&geometric(&q(1, 1), 6), 2, 0).unwrap();
        for n in 0..=6 {
            let want = if n % 2 == 0 { 1.0 } else { 0.0 };
            assert!((even.coeff(n) - ComplexF::real(want)).abs() < 1e-12);
        }
        let z = multisection(&s(&[(0, 1), (1, 1)]), 2, 1).unwrap();
        assert!((z.coeff(1) - ComplexF::ONE).abs() < 1e-12);
        let lin = multisection(&TruncSeries::from_fn(7, |n| q(n as i64, 1)), 3, 1).unwrap();
        assert!((lin.coeff(4) - ComplexF::real(4.0)).abs() < 1e-12);
        assert!(lin.coeff(5).abs() < 1e-12);
        assert!(multisection(&geometric(&q(1, 1), 3), 1, 0).is_err());
    }

    #[test]
    fn stirling_egf_examples() {
        let (l0, r0) = stirling1_egf_check(0, 5);
        assert_eq!(l0, geometric(&q(1, 1), 5));
        assert_eq!(l0, r0);
        let (l1, r1) = stirling1_egf_check(1, 5);
        assert_eq!(l1.coeff(1), q(1, 1));
        assert_eq!(l1.coeff(2), q(3, 2));
        assert_eq!(l1, r1);
    }

    #[test]
    fn exp_harmonic_examples() {
        let h1 = exp_harmonic_series(1, 6);
        assert_eq!(h1.coeff(1), q(1, 1));
        assert_eq!(h1.coeff(2), q(3, 4));
        assert_eq!(exp_harmonic_series(2, 6).coeff(3), q(49, 216));
    }

    #[test]
    fn dilog_identity() {
        for order in [1, 2, 10, 40] {
            let check = dilog_functional_eq_check(order).unwrap();
            assert!(check.pass, "{check:?}");
        }
    }
}
