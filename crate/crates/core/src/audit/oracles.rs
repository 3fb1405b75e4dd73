//! Straight-line reference evaluations. These avoid the shared caches and the
//! transform machinery so that a registered identity compares two genuinely
//! different computations.

use num_bigint::BigInt;

use crate::exactnum::{binomial_q, factorial_q, ExactRational};
use crate::series::{exp_series, geometric, polylog_series, RatSeries, TruncSeries};

pub const TABLE1: [[&str; 9]; 7] = [
    ["1", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "1", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "1", "-1/2", "1/6", "-1/24", "1/120", "-1/720", "1/5040", "-1/40320"],
    ["0", "1", "-3/4", "11/36", "-25/288", "137/7200", "-49/14400", "121/235200", "-761/11289600"],
    [
        "0", "1", "-7/8", "85/216", "-415/3456", "12019/432000", "-13489/2592000",
        "726301/889056000", "-3144919/28449792000",
    ],
    [
        "0", "1", "-15/16", "575/1296", "-5845/41472", "874853/25920000", "-336581/51840000",
        "129973303/124467840000", "-1149858589/7965941760000",
    ],
    [
        "0", "1", "-31/32", "3661/7776", "-76111/497664", "58067611/1555200000",
        "-68165041/9331200000", "187059457981/156829478400000",
        "-3355156783231/20074173235200000",
    ],
];

pub const TABLE2: [[&str; 9]; 7] = [
    ["1", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "1", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "1", "1", "1", "1", "1", "1", "1", "1"],
    ["0", "1", "3/2", "11/6", "25/12", "137/60", "49/20", "363/140", "761/280"],
    [
        "0", "1", "7/4", "85/36", "415/144", "12019/3600", "13489/3600", "726301/176400",
        "3144919/705600",
    ],
    [
        "0", "1", "15/8", "575/216", "5845/1728", "874853/216000", "336581/72000",
        "129973303/24696000", "1149858589/197568000",
    ],
    [
        "0", "1", "31/16", "3661/1296", "76111/20736", "58067611/12960000", "68165041/12960000",
        "187059457981/31116960000", "3355156783231/497871360000",
    ],
];

/// The Euler-sum decimals quoted for `zeta*(3)`, `zeta*(4)`, `zeta*(5)`.
pub const EULER_DECIMALS: [(usize, f64); 3] = [(3, 0.901543), (4, 0.947033), (5, 0.972120)];

pub fn q(n: i64) -> ExactRational {
    ExactRational::from(n)
}

/// `m^(-r)` for any integer `r`.
pub fn inverse_power(m: u64, r: i64) -> ExactRational {
    q(m as i64).pow(-(r as i32)).expect("m >= 1")
}

/// `sum_{m=1}^n m^(-r)` term by term.
pub fn harmonic_direct(n: u64, r: i64) -> ExactRational {
    (1..=n).map(|m| inverse_power(m, r)).sum()
}

/// Unsigned first-kind numbers from their own triangle.
pub fn stirling1_direct(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::from(1)];
    for i in 0..n {
        let mut next = vec![BigInt::from(0); row.len() + 1];
        for (j, c) in row.iter().enumerate() {
            next[j] += c * BigInt::from(i);
            next[j + 1] += c;
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

/// Test functions `G` for the transform checks.
pub const TRANSFORM_INPUTS: [&str; 4] = ["geometric", "geometric_sq", "exp", "li2_geometric"];

pub fn transform_input(name: &str, order: usize) -> RatSeries {
    let one = ExactRational::one();
    match name {
        "geometric" => geometric(&one, order),
        "geometric_sq" => geometric(&one, order).mul(&geometric(&one, order)),
        "exp" => exp_series(order),
        _ => polylog_series(2, order).mul(&geometric(&one, order)),
    }
}

/// `g_n` for the same inputs, written out directly.
pub fn transform_input_coeff(name: &str, n: u64) -> ExactRational {
    match name {
        "geometric" => q(1),
        "geometric_sq" => q(n as i64 + 1),
        "exp" => factorial_q(n).recip().expect("n! > 0"),
        _ => harmonic_direct(n, 2),
    }
}

/// Left-hand coefficients `[z^n]` for the introductory examples (a)..(f),
/// `0 <= n <= u`.
pub fn intro_lhs(id: &str, k: usize, u: usize, t: &ExactRational, r: &ExactRational) -> RatSeries {
    let k = k as i64;
    TruncSeries::from_fn(u, |n| {
        let n64 = n as u64;
        if n == 0 {
            return ExactRational::zero();
        }
        match id {
            "a" => inverse_power(n64, k),
            "b" => inverse_power(n64, k) / factorial_q(n64),
            "c" => harmonic_direct(n64, k),
            "d" => (1..=n64)
                .map(|m| t.pow(m as i32).expect("integer power") * inverse_power(m, k))
                .sum(),
            "e" => (1..=n64)
                .map(|m| r.pow(m as i32).expect("integer power") * inverse_power(m, k) / factorial_q(m))
                .sum(),
            _ => harmonic_direct(n64, k) / factorial_q(n64),
        }
    })
}

/// `1/(a n + b)^s`, with the `n = 0, b = 0` term dropped.
pub fn progression_lhs(s: usize, n: usize, a: u32, b: u32) -> f64 {
    let m = a as usize * n + b as usize;
    if m == 0 {
        0.0
    } else {
        (m as f64).powi(-(s as i32))
    }
}

/// A fixed family of rational series standing in for random input.
pub fn seeded_series(seed: i64, order: usize) -> RatSeries {
    TruncSeries::from_fn(order, |n| {
        let n = n as i64;
        ExactRational::frac((seed * 7 + n * 13) % 11 - 5, (seed + 2 * n) % 9 + 1)
    })
}

/// `sum_{m=1}^d c(d,m) H_n^(k+1-m)`, with `c(d,m)` carrying `(-1)^(d-m)` in
/// the signed reading.
pub fn m_def_direct(k: usize, d: usize, n: u64, signed: bool) -> ExactRational {
    (1..=d)
        .map(|m| {
            let mut c = ExactRational::from_integer(stirling1_direct(d, m));
            if signed && (d - m) % 2 == 1 {
                c = -c;
            }
            c * harmonic_direct(n, k as i64 + 1 - m as i64)
        })
        .sum()
}

/// The alternate sum evaluated with closed-sum coefficients.
pub fn m_alt_direct(k: usize, d: usize, n: u64) -> ExactRational {
    let total: ExactRational = (1..=n)
        .map(|j| {
            let c = crate::coeffs::s2star_sum(k + 2, j as usize).expect("k + 2 >= 2, j >= 1");
            let sign = if j % 2 == 0 { q(1) } else { q(-1) };
            binomial_q(n, j) * c * sign / q((j as usize + d) as i64)
        })
        .sum();
    let mut rise = q(1);
    for i in 1..=d as u64 {
        rise = rise * q((n + i) as i64);
    }
    total * rise
}
