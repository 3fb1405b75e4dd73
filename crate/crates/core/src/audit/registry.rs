use std::ops::RangeInclusive;

use super::oracles::{self, q};
use super::{Grid, IdentitySpec, Mode, Outcome, Overrides, Params};
use crate::coeffs::{
    remainder_t, remainder_table_expression, s2star_harmonic, s2star_heuristic, s2star_ogf_coeff,
    s2star_rec, s2star_reverse_binomial, s2star_scaled, s2star_sum, Remainder,
};
use crate::error::{domain, Result};
use crate::exactnum::{binomial, factorial, factorial_q, root_of_unity, ExactRational};
use crate::harmonic::{
    binomial_via_stirling1, exp_harmonic_conv, exp_harmonic_inv, first_order_egf_check, harmonic,
    harmonic_binomial_form, harmonic_powers_of_n, harmonic_rec_corollary, harmonic_via_rec,
    npow_forward, npow_inverse, s2star_from_hnum_int, s2star_from_hnum_real,
};
use crate::msums::{
    almost_linear_check, general_relations_check, m_alt, m_def, m_recurrence_residual, MSource,
    MSumSpec, StirlingReading,
};
use crate::series::{
    dilog_functional_eq_check, exp_harmonic_series, intro_example, multisection,
    stirling1_egf_check, transform_forward, transform_general_f, transform_zeta, IntroExample,
    IntroParams, RatSeries, TruncSeries,
};
use crate::special::{
    bernoulli_closed_logforms, bernoulli_fourier, fourier_worked_example, li_classic_series,
    li_direct, li_new_series, periodic_bernoulli_exact, trilog_functional_eq_check, zeta_star,
    zeta_star_euler_form, zeta_star_harmonic_form, Reading, ZetaStarMethod,
};
use crate::stirling::{faulhaber_sum, stirling1_unsigned, stirling2_power_sum};

/// Every registered identity id, grouped by the invariant it covers.
pub const MANIFEST: &[(&str, &str)] = &[
    ("exactnum.binomial_pascal", "Pascal rule for n <= 40"),
    ("exactnum.root_of_unity_modulus", "unit modulus of roots of unity, a <= 64"),
    ("stirling.faulhaber", "Faulhaber sums against direct power sums"),
    ("stirling.power_sum", "Stirling-2 power sums against direct sums"),
    ("stirling.row_sum", "unsigned first-kind row sums are n!"),
    ("coeffs.rec_vs_sum", "method agreement: recurrence and closed sum"),
    ("coeffs.rec_vs_harmonic", "method agreement: harmonic forms"),
    ("coeffs.rec_vs_ogf", "method agreement: OGF extraction"),
    ("coeffs.rec_vs_heuristic", "method agreement: heuristic recurrence"),
    ("coeffs.rec_vs_reverse_binomial", "method agreement: reverse binomial form"),
    ("coeffs.table1", "coefficient table, rows 0..6, columns 0..8"),
    ("coeffs.table2", "scaled coefficient table"),
    ("coeffs.table3", "remainder terms against their harmonic expressions"),
    ("coeffs.sign_pattern", "sign of {{k,j}}* is (-1)^(j-1)"),
    ("harmonic.npow_inverse", "sum of coefficients times falling factorials is 1/n^k"),
    ("harmonic.npow_forward", "Stirling-2 dual gives n^k"),
    ("harmonic.via_rec", "harmonic numbers from the power identity"),
    ("harmonic.exp_conv", "exponential harmonic convolution"),
    ("harmonic.exp_inv", "inverse exponential harmonic convolution"),
    ("harmonic.corollary_1", "first harmonic recurrence"),
    ("harmonic.corollary_2", "second harmonic recurrence"),
    ("harmonic.corollary_3", "third harmonic recurrence with real parameter"),
    ("harmonic.powers_of_n", "harmonic numbers as polynomials in n+1"),
    ("harmonic.binomial_form", "harmonic numbers from binomial sums"),
    ("harmonic.binomial_via_stirling1", "binomial coefficients through first-kind numbers"),
    ("harmonic.hnum_int", "integer-order harmonic sums for the coefficients"),
    ("harmonic.hnum_real", "real-order harmonic sums for the coefficients"),
    ("harmonic.first_order_egf", "exponential generating function of H_n"),
    ("series.transform_zeta", "transform divides coefficients by n^k"),
    ("series.round_trip", "forward transform undoes the zeta transform"),
    ("series.general_f", "transform with weights 1/(alpha n + beta)^k"),
    ("series.intro", "introductory examples (a)..(f)"),
    ("series.intro_g", "introductory example (g), progressions"),
    ("series.multisection", "multisection against masked coefficients"),
    ("series.exp_log", "exp(log(1 + z S)) = 1 + z S"),
    ("series.dilog_functional_eq", "dilogarithm functional equation as series"),
    ("series.exp_harmonic_series", "series for H_n^(k)/n!"),
    ("series.stirling1_egf", "first-kind exponential generating function"),
    ("series.stirling1_egf.printed", "first-kind EGF with the printed (-1)^k"),
    ("special.li_new_vs_direct", "new polylogarithm series against direct sums"),
    ("special.li_classic_vs_direct", "classic polylogarithm series against direct sums"),
    ("special.li_imaginary", "polylogarithm series stay real on the real line"),
    ("special.zeta_star_series", "alternating zeta series against the closed form"),
    ("special.zeta_star_harmonic_form", "harmonic polynomial series for zeta*(1..4)"),
    ("special.zeta_star_euler_form", "Euler-sum forms against quoted decimals"),
    ("special.zeta_star_euler_form.printed", "Euler-sum form for zeta*(4) as printed"),
    ("special.trilog_functional_eq", "trilogarithm functional equation"),
    ("special.trilog_functional_eq.printed", "trilogarithm equation with -zeta(3)"),
    ("special.fourier_convergence", "Fourier deviation shrinks as J doubles"),
    ("fourier.worked_example", "worked harmonic series for B_1 and B_2"),
    ("fourier.worked_example.printed", "worked harmonic series for B_3"),
    ("fourier.series_vs_polynomial", "Fourier series against the Bernoulli polynomial"),
    ("fourier.series_imaginary", "imaginary part of the Fourier series"),
    ("fourier.closed_logforms", "log/dilog closed forms for B_1 and B_2"),
    ("fourier.closed_logforms_imaginary", "imaginary part of the closed forms"),
    ("fourier.closed_logforms.printed", "B_2 closed form with the printed factor"),
    ("msums.recompute_def", "definition against a term-by-term re-evaluation"),
    ("msums.recompute_alt", "alternate sum against a term-by-term re-evaluation"),
    ("msums.discrepancy", "definition against the alternate sum"),
    ("msums.recurrence", "homogeneous recurrence residuals"),
    ("msums.almost_linear", "six almost-linear harmonic relations"),
    ("msums.family_1", "one-parameter family"),
    ("msums.family_2", "two-parameter family"),
    ("msums.family_3", "three-parameter family"),
    ("msums.family_2_degeneration", "two-parameter family at b = 0"),
];

fn r(lo: i64, hi: i64) -> RangeInclusive<i64> {
    lo..=hi
}

fn ex(lhs: ExactRational, rhs: ExactRational) -> Result<Outcome> {
    Ok(Outcome::Exact(lhs, rhs))
}

fn num(lhs: f64, rhs: f64) -> Result<Outcome> {
    Ok(Outcome::Numeric(lhs, rhs))
}

/// First differing coefficient pair, or the top pair when all agree.
fn series_outcome(lhs: &RatSeries, rhs: &RatSeries) -> Result<Outcome> {
    let top = lhs.order().max(rhs.order());
    let n = (0..=top).find(|&n| lhs.coeff(n) != rhs.coeff(n)).unwrap_or(top);
    ex(lhs.coeff(n), rhs.coeff(n))
}

fn rational(p: &Params, name: &str) -> Result<ExactRational> {
    match p.get(name) {
        Some(super::Param::Int(v)) => Ok(q(*v)),
        Some(super::Param::Real(v)) => ExactRational::from_f64(*v),
        _ => p.text(name)?.parse(),
    }
}

fn source(p: &Params) -> Result<MSource> {
    Ok(match p.text("source")? {
        "def_unsigned" => MSource::DefUnsigned,
        "def_signed" => MSource::DefSigned,
        "alt" => MSource::Alt,
        other => return Err(domain(format!("unknown M source {other}"))),
    })
}

const SOURCES: [&str; 3] = ["def_unsigned", "def_signed", "alt"];

fn coeff_list(p: &Params) -> Result<Vec<ExactRational>> {
    p.text("coeffs")?.split(':').map(str::parse).collect()
}

fn reading(p: &Params) -> Result<Reading> {
    Ok(if p.text("reading")? == "printed" { Reading::AsPrinted } else { Reading::Corrected })
}

const LI_POINTS: [f64; 5] = [-0.8, -0.5, -0.1, 0.2, 0.4];
const FOURIER_XS: [f64; 3] = [0.2, 1.25, 2.75];

fn spec(
    id: &'static str,
    suite: &'static str,
    mode: Mode,
    grid: fn(&Overrides) -> Vec<Params>,
    eval: super::Evaluator,
) -> IdentitySpec {
    IdentitySpec { id, suite, mode, audit_only: false, grid, eval }
}

fn printed(
    id: &'static str,
    suite: &'static str,
    mode: Mode,
    grid: fn(&Overrides) -> Vec<Params>,
    eval: super::Evaluator,
) -> IdentitySpec {
    IdentitySpec { id, suite, mode, audit_only: true, grid, eval }
}

fn core() -> Vec<IdentitySpec> {
    use Mode::*;
    vec![
        spec(
            "exactnum.binomial_pascal",
            "core",
            Exact,
            |o| Grid::new(o).axis("n", r(1, 40)).axis("k", r(1, 40)).filter(|p| p.int("k").unwrap_or(0) <= p.int("n").unwrap_or(0)).build(),
            |p| {
                let (n, k) = (p.int("n")? as u64, p.int("k")? as u64);
                ex(
                    ExactRational::from_integer(binomial(n, k)),
                    ExactRational::from_integer(binomial(n - 1, k - 1) + binomial(n - 1, k)),
                )
            },
        ),
        spec(
            "exactnum.root_of_unity_modulus",
            "core",
            Numeric(1e-12),
            |o| Grid::new(o).axis("a", r(1, 64)).axis("m", r(0, 63)).filter(|p| p.int("m").unwrap_or(0) < p.int("a").unwrap_or(0)).build(),
            |p| num(root_of_unity(p.int("a")? as u32, p.int("m")?)?.norm_sqr(), 1.0),
        ),
        spec(
            "stirling.faulhaber",
            "core",
            Exact,
            |o| Grid::new(o).axis("k", r(0, 10)).axis("n", r(0, 50)).build(),
            |p| {
                let (k, n) = (p.uint("k")?, p.int("n")? as u64);
                let direct: ExactRational = (0..n).map(|j| q(j as i64).pow(k as i32).expect("j^k")).sum();
                ex(faulhaber_sum(k, n), direct)
            },
        ),
        spec(
            "stirling.power_sum",
            "core",
            Exact,
            |o| Grid::new(o).axis("k", r(0, 6)).axis("n", r(0, 20)).axis("x", ["-1", "1/2", "2", "3/7"]).build(),
            |p| {
                let (k, n, x) = (p.uint("k")?, p.uint("n")?, rational(p, "x")?);
                let direct: ExactRational = (0..=n)
                    .map(|j| q(j as i64).pow(k as i32).expect("j^k") * x.pow(j as i32).expect("x^j"))
                    .sum();
                ex(stirling2_power_sum(k, n, &x)?, direct)
            },
        ),
        spec(
            "stirling.row_sum",
            "core",
            Exact,
            |o| Grid::new(o).axis("n", r(0, 15)).build(),
            |p| {
                let n = p.uint("n")?;
                let sum: num_bigint::BigInt = (0..=n).map(|k| stirling1_unsigned(n, k)).sum();
                ex(ExactRational::from_integer(sum), ExactRational::from_integer(factorial(n as u64)))
            },
        ),
        spec(
            "coeffs.rec_vs_sum",
            "core",
            Exact,
            |o| Grid::new(o).axis("k", r(2, 10)).axis("j", r(1, 25)).build(),
            |p| {
                let (k, j) = (p.uint("k")?, p.uint("j")?);
                ex(s2star_rec(k, j), s2star_sum(k, j)?)
            },
        ),
        spec(
            "coeffs.rec_vs_harmonic",
            "core",
            Exact,
            |o| Grid::new(o).axis("k", r(2, 6)).axis("j", r(1, 25)).build(),
            |p| {
                let (k, j) = (p.uint("k")?, p.uint("j")?);
                ex(s2star_rec(k, j), s2star_harmonic(k, j)?)
            },
        ),
        spec(
            "coeffs.rec_vs_ogf",
            "core",
            Exact,
            |o| Grid::new(o).axis("k", r(0, 8)).axis("j", r(1, 8)).build(),
            |p| {
                let (k, j) = (p.uint("k")?, p.uint("j")?);
                ex(s2star_rec(k, j), s2star_ogf_coeff(k, j)?)
            },
        ),
        spec(
            "coeffs.rec_vs_heuristic",
            "core",
            Exact,
            |o| Grid::new(o).axis("k", r(2, 10)).axis("j", r(1, 25)).build(),
            |p| {
                let (k, j) = (p.uint("k")?, p.uint("j")?);
                let shifted = k.checked_sub(2).ok_or_else(|| domain("k >= 2"))?;
                ex(s2star_rec(k, j), s2star_heuristic(shifted, j)?)
            },
        ),
        spec(
            "coeffs.rec_vs_reverse_binomial",
            "core",
            Exact,
            |o| Grid::new(o).axis("k", r(2, 8)).axis("j", r(1, 12)).build(),
            |p| {
                let (k, j) = (p.uint("k")?, p.uint("j")?);
                let shifted = k.checked_sub(2).ok_or_else(|| domain("k >= 2"))?;
                ex(s2star_rec(k, j), s2star_reverse_binomial(shifted, j)?)
            },
        ),
        spec(
            "coeffs.table1",
            "core",
            Exact,
            |o| Grid::new(o).axis("k", r(0, 6)).axis("j", r(0, 8)).build(),
            |p| {
                let (k, j) = (p.uint("k")?, p.uint("j")?);
                let cell = oracles::TABLE1.get(k).and_then(|row| row.get(j)).ok_or_else(|| domain("outside the table"))?;
                ex(s2star_rec(k, j), cell.parse()?)
            },
        ),
        spec(
            "coeffs.table2",
            "core",
            Exact,
            |o| Grid::new(o).axis("k", r(0, 6)).axis("j", r(0, 8)).build(),
            |p| {
                let (k, j) = (p.uint("k")?, p.uint("j")?);
                let cell = oracles::TABLE2.get(k).and_then(|row| row.get(j)).ok_or_else(|| domain("outside the table"))?;
                ex(s2star_scaled(k, j), cell.parse()?)
            },
        ),
        spec(
            "coeffs.table3",
            "core",
            Exact,
            |o| Grid::new(o).axis("variant", ["t0", "t1"]).axis("k", r(2, 7)).axis("j", r(1, 20)).build(),
            |p| {
                let variant = if p.text("variant")? == "t0" { Remainder::T0 } else { Remainder::T1 };
                let (k, j) = (p.uint("k")?, p.uint("j")?);
                ex(remainder_t(variant, k, j)?, remainder_table_expression(variant, k, j)?)
            },
        ),
        spec(
            "coeffs.sign_pattern",
            "core",
            Exact,
            |o| Grid::new(o).axis("k", r(2, 8)).axis("j", r(1, 25)).build(),
            |p| {
                let (k, j) = (p.uint("k")?, p.uint("j")?);
                ex(q(s2star_rec(k, j).signum() as i64), ExactRational::sign_power(j as i64 - 1))
            },
        ),
    ]
}

fn harmonic_suite() -> Vec<IdentitySpec> {
    use Mode::*;
    vec![
        spec(
            "harmonic.npow_inverse",
            "harmonic",
            Exact,
            |o| Grid::new(o).axis("n", r(1, 50)).axis("k", r(1, 8)).build(),
            |p| {
                let (n, k) = (p.int("n")? as u64, p.uint("k")?);
                ex(npow_inverse(n, k), oracles::inverse_power(n, k as i64))
            },
        ),
        spec(
            "harmonic.npow_forward",
            "harmonic",
            Exact,
            |o| Grid::new(o).axis("n", r(0, 20)).axis("k", r(0, 8)).build(),
            |p| {
                let (n, k) = (p.int("n")?, p.uint("k")?);
                ex(npow_forward(n as u64, k), q(n).pow(k as i32)?)
            },
        ),
        spec(
            "harmonic.via_rec",
            "harmonic",
            Exact,
            |o| Grid::new(o).axis("n", r(0, 15)).axis("k", r(0, 5)).build(),
            |p| {
                let (n, k) = (p.int("n")? as u64, p.uint("k")?);
                ex(harmonic_via_rec(n, k), oracles::harmonic_direct(n, k as i64))
            },
        ),
        spec(
            "harmonic.exp_conv",
            "harmonic",
            Exact,
            |o| Grid::new(o).axis("k", r(0, 5)).axis("j", r(1, 20)).build(),
            |p| {
                let (k, j) = (p.uint("k")?, p.uint("j")?);
                ex(exp_harmonic_conv(k, j) * q(j as i64), s2star_sum(k + 2, j)?)
            },
        ),
        spec(
            "harmonic.exp_inv",
            "harmonic",
            Exact,
            |o| Grid::new(o).axis("k", r(0, 5)).axis("j", r(0, 20)).build(),
            |p| {
                let (k, j) = (p.uint("k")?, p.int("j")? as u64);
                ex(exp_harmonic_inv(k, j as usize), oracles::harmonic_direct(j, k as i64 + 1) / factorial_q(j))
            },
        ),
        spec(
            "harmonic.corollary_1",
            "harmonic",
            Exact,
            |o| Grid::new(o).axis("n", r(1, 15)).axis("k", r(0, 5)).build(),
            |p| corollary(p, 1),
        ),
        spec(
            "harmonic.corollary_2",
            "harmonic",
            Exact,
            |o| Grid::new(o).axis("n", r(1, 15)).axis("k", r(0, 5)).build(),
            |p| corollary(p, 2),
        ),
        spec(
            "harmonic.corollary_3",
            "harmonic",
            Numeric(1e-9),
            |o| Grid::new(o).axis("n", r(1, 12)).axis("k", r(2, 3)).axis("r", [0.0, 0.25, 0.5]).build(),
            |p| corollary(p, 3),
        ),
        spec(
            "harmonic.powers_of_n",
            "harmonic",
            Exact,
            |o| Grid::new(o).axis("n", r(0, 20)).axis("k", r(0, 5)).build(),
            |p| {
                let (n, k) = (p.int("n")? as u64, p.uint("k")?);
                ex(harmonic_powers_of_n(n, k), oracles::harmonic_direct(n, k as i64))
            },
        ),
        spec(
            "harmonic.binomial_form",
            "harmonic",
            Exact,
            |o| Grid::new(o).axis("n", r(0, 15)).axis("k", r(0, 5)).build(),
            |p| {
                let (n, k) = (p.int("n")? as u64, p.uint("k")?);
                ex(harmonic_binomial_form(n, k), oracles::harmonic_direct(n, k as i64))
            },
        ),
        spec(
            "harmonic.binomial_via_stirling1",
            "harmonic",
            Exact,
            |o| Grid::new(o).axis("n", r(0, 12)).axis("j", r(0, 12)).build(),
            |p| {
                let (n, j) = (p.int("n")? as u64, p.uint("j")?);
                ex(binomial_via_stirling1(n, j), ExactRational::from_integer(binomial(n + 1, j as u64 + 1)))
            },
        ),
        spec(
            "harmonic.hnum_int",
            "harmonic",
            Exact,
            |o| Grid::new(o).axis("variant", r(1, 2)).axis("k", r(0, 6)).axis("j", r(1, 20)).build(),
            |p| {
                let (v, k, j) = (p.int("variant")? as u8, p.uint("k")?, p.uint("j")?);
                ex(s2star_from_hnum_int(k, j, v)?, s2star_rec(k + 2, j))
            },
        ),
        spec(
            "harmonic.hnum_real",
            "harmonic",
            Numeric(1e-9),
            |o| {
                Grid::new(o)
                    .axis("variant", r(1, 2))
                    .axis("k", r(1, 6))
                    .axis("j", r(1, 20))
                    .axis("r", [0.0, 0.25, 0.5])
                    .build()
            },
            |p| {
                let (v, k, j, rr) = (p.int("variant")? as u8, p.uint("k")?, p.uint("j")?, p.real("r")?);
                num(s2star_from_hnum_real(k, j, rr, v)?, s2star_rec(k + 2, j).to_f64())
            },
        ),
        spec(
            "harmonic.first_order_egf",
            "harmonic",
            Exact,
            |o| Grid::new(o).axis("order", [5i64, 10, 20]).build(),
            |p| {
                let (lhs, rhs) = first_order_egf_check(p.uint("order")?)?;
                series_outcome(&lhs, &rhs)
            },
        ),
    ]
}

fn corollary(p: &Params, which: u8) -> Result<Outcome> {
    let (n, k) = (p.int("n")? as u64, p.uint("k")?);
    let rr = if which == 3 { p.real("r")? } else { 0.0 };
    let exact = oracles::harmonic_direct(n, k as i64);
    match harmonic_rec_corollary(n, k, which, rr)? {
        crate::harmonic::HarmonicValue::Exact(v) if which != 3 => ex(v, exact),
        v => num(v.to_f64(), exact.to_f64()),
    }
}

fn series_suite() -> Vec<IdentitySpec> {
    use Mode::*;
    vec![
        spec(
            "series.transform_zeta",
            "series",
            Exact,
            |o| Grid::new(o).axis("g", oracles::TRANSFORM_INPUTS).axis("k", r(0, 4)).axis("order", [30i64]).build(),
            |p| {
                let (g, k, order) = (p.text("g")?, p.uint("k")?, p.uint("order")?);
                let lhs = transform_zeta(&oracles::transform_input(g, order), k);
                let rhs = TruncSeries::from_fn(order, |n| {
                    if n == 0 {
                        ExactRational::zero()
                    } else {
                        oracles::transform_input_coeff(g, n as u64) * oracles::inverse_power(n as u64, k as i64)
                    }
                });
                series_outcome(&lhs, &rhs)
            },
        ),
        spec(
            "series.round_trip",
            "series",
            Exact,
            |o| Grid::new(o).axis("g", oracles::TRANSFORM_INPUTS).axis("k", r(0, 4)).axis("order", [20i64]).build(),
            |p| {
                let (g, k, order) = (p.text("g")?, p.uint("k")?, p.uint("order")?);
                let input = oracles::transform_input(g, order);
                let back = transform_forward(&transform_zeta(&input, k), k);
                let mut without_constant = input.coeffs().to_vec();
                without_constant[0] = ExactRational::zero();
                series_outcome(&back, &TruncSeries::new(without_constant))
            },
        ),
        spec(
            "series.general_f",
            "series",
            Exact,
            |o| {
                Grid::new(o)
                    .axis("k", r(1, 3))
                    .axis("alpha", ["2", "1", "3/2"])
                    .axis("beta", ["-1", "1", "1/2"])
                    .filter(|p| !(p.text("alpha").ok() == Some("1") && p.text("beta").ok() == Some("-1")))
                    .axis("order", [15i64])
                    .build()
            },
            |p| {
                let (k, order) = (p.uint("k")?, p.uint("order")?);
                let (alpha, beta) = (rational(p, "alpha")?, rational(p, "beta")?);
                let g = oracles::transform_input("geometric_sq", order);
                let lhs = transform_general_f(&g, k, &alpha, &beta)?;
                let mut rhs = Vec::with_capacity(order + 1);
                rhs.push(ExactRational::zero());
                for n in 1..=order {
                    let f = &alpha * q(n as i64) + &beta;
                    rhs.push(g.coeff(n) * f.pow(-(k as i32))?);
                }
                series_outcome(&lhs, &TruncSeries::new(rhs))
            },
        ),
        spec(
            "series.intro",
            "series",
            Exact,
            |o| {
                Grid::new(o)
                    .axis("id", ["a", "b", "c", "d", "e", "f"])
                    .axis("k", r(1, 3))
                    .axis("u", r(1, 20))
                    .axis("t", ["1/2"])
                    .axis("r", ["2/3"])
                    .build()
            },
            |p| {
                let (id, k, u) = (p.text("id")?, p.uint("k")?, p.uint("u")?);
                let params = IntroParams { t: rational(p, "t")?, r: rational(p, "r")?, ..IntroParams::default() };
                let example: IntroExample = id.parse()?;
                let out = intro_example(example, k, u, &params)?;
                let got = out.as_exact().ok_or_else(|| domain("expected an exact series"))?;
                series_outcome(got, &oracles::intro_lhs(id, k, u, &params.t, &params.r))
            },
        ),
        spec(
            "series.intro_g",
            "series",
            Numeric(1e-10),
            |o| {
                Grid::new(o)
                    .axis("s", r(1, 3))
                    .axis("a", r(2, 4))
                    .axis("b", r(0, 3))
                    .axis("u", r(1, 12))
                    .filter(|p| p.int("b").unwrap_or(0) < p.int("a").unwrap_or(0))
                    .build()
            },
            |p| {
                let (s, u) = (p.uint("s")?, p.uint("u")?);
                let (a, b) = (p.int("a")? as u32, p.int("b")? as u32);
                let params = IntroParams { a, b, ..IntroParams::default() };
                let got = intro_example(IntroExample::G, s, u, &params)?.to_complex();
                let dev = (0..=u)
                    .map(|n| (got.coeff(n) - oracles::progression_lhs(s, n, a, b).into()).abs())
                    .fold(0.0, f64::max);
                num(dev, 0.0)
            },
        ),
        spec(
            "series.multisection",
            "series",
            Numeric(1e-10),
            |o| {
                Grid::new(o)
                    .axis("f", oracles::TRANSFORM_INPUTS)
                    .axis("a", r(2, 8))
                    .axis("b", r(0, 7))
                    .axis("order", [64i64])
                    .filter(|p| p.int("b").unwrap_or(0) < p.int("a").unwrap_or(0))
                    .build()
            },
            |p| {
                let (f, order) = (p.text("f")?, p.uint("order")?);
                let (a, b) = (p.int("a")? as u32, p.int("b")? as u32);
                let input = oracles::transform_input(f, order);
                let got = multisection(&input, a, b)?;
                let dev = (0..=order)
                    .map(|n| {
                        let want = if n % a as usize == b as usize { input.coeff(n).to_f64() } else { 0.0 };
                        (got.coeff(n) - want.into()).abs()
                    })
                    .fold(0.0, f64::max);
                num(dev, 0.0)
            },
        ),
        spec(
            "series.exp_log",
            "series",
            Exact,
            |o| Grid::new(o).axis("seed", r(0, 9)).axis("order", [15i64]).build(),
            |p| {
                let (seed, order) = (p.int("seed")?, p.uint("order")?);
                let one_plus = TruncSeries::one(order).add(&oracles::seeded_series(seed, order).shift(1).truncate(order));
                series_outcome(&one_plus.log()?.exp()?, &one_plus)
            },
        ),
        spec(
            "series.dilog_functional_eq",
            "series",
            Exact,
            |o| Grid::new(o).axis("order", [10i64, 20, 40]).build(),
            |p| {
                let check = dilog_functional_eq_check(p.uint("order")?)?;
                match check.first_mismatch {
                    Some((_, l, r)) => ex(l, r),
                    None => ex(q(0), q(0)),
                }
            },
        ),
        spec(
            "series.exp_harmonic_series",
            "series",
            Exact,
            |o| Grid::new(o).axis("k", r(0, 4)).axis("order", [20i64]).build(),
            |p| {
                let (k, order) = (p.uint("k")?, p.uint("order")?);
                let want = TruncSeries::from_fn(order, |n| {
                    oracles::harmonic_direct(n as u64, k as i64) / factorial_q(n as u64)
                });
                series_outcome(&exp_harmonic_series(k, order), &want)
            },
        ),
        spec(
            "series.stirling1_egf",
            "series",
            Exact,
            |o| Grid::new(o).axis("k", r(0, 5)).axis("order", [20i64]).build(),
            |p| {
                let (lhs, rhs) = stirling1_egf_check(p.uint("k")?, p.uint("order")?);
                series_outcome(&lhs, &rhs)
            },
        ),
        printed(
            "series.stirling1_egf.printed",
            "series",
            Exact,
            |o| Grid::new(o).axis("k", r(0, 5)).axis("order", [20i64]).build(),
            |p| {
                let k = p.uint("k")?;
                let (lhs, rhs) = stirling1_egf_check(k, p.uint("order")?);
                series_outcome(&lhs, &rhs.scale(&ExactRational::sign_power(k as i64)))
            },
        ),
    ]
}

fn special_suite() -> Vec<IdentitySpec> {
    use Mode::*;
    vec![
        spec(
            "special.li_new_vs_direct",
            "special",
            Numeric(1e-10),
            |o| Grid::new(o).axis("s", r(1, 5)).axis("z", LI_POINTS).axis("terms", [400i64]).build(),
            |p| {
                let (s, z, n) = (p.uint("s")?, p.real("z")?, p.uint("terms")?);
                num(li_new_series(s, z, n)?.value.re, li_direct(s, z, n).value.re)
            },
        ),
        spec(
            "special.li_classic_vs_direct",
            "special",
            Numeric(1e-10),
            |o| Grid::new(o).axis("s", r(1, 5)).axis("z", LI_POINTS).axis("terms", [400i64]).build(),
            |p| {
                let (s, z, n) = (p.uint("s")?, p.real("z")?, p.uint("terms")?);
                num(li_classic_series(s, z, n)?.value.re, li_direct(s, z, n).value.re)
            },
        ),
        spec(
            "special.li_imaginary",
            "special",
            Numeric(1e-9),
            |o| Grid::new(o).axis("s", r(1, 5)).axis("z", LI_POINTS).axis("terms", [400i64]).build(),
            |p| {
                let (s, z, n) = (p.uint("s")?, p.real("z")?, p.uint("terms")?);
                num(li_new_series(s, z, n)?.value.im.abs(), 0.0)
            },
        ),
        spec(
            "special.zeta_star_series",
            "special",
            Numeric(1e-8),
            |o| Grid::new(o).axis("s", r(1, 6)).axis("terms", [120i64]).build(),
            |p| {
                let (s, n) = (p.uint("s")?, p.uint("terms")?);
                num(zeta_star(s, n, ZetaStarMethod::Series)?, zeta_star(s, n, ZetaStarMethod::Closed)?)
            },
        ),
        spec(
            "special.zeta_star_harmonic_form",
            "special",
            Numeric(1e-8),
            |o| Grid::new(o).axis("s", r(1, 4)).axis("terms", [120i64]).build(),
            |p| {
                let (s, n) = (p.uint("s")?, p.uint("terms")?);
                num(zeta_star_harmonic_form(s, n)?, zeta_star(s, n, ZetaStarMethod::Closed)?)
            },
        ),
        spec(
            "special.zeta_star_euler_form",
            "special",
            Numeric(5e-6),
            |o| Grid::new(o).axis("s", r(3, 5)).axis("terms", [200i64]).axis("reading", ["corrected"]).build(),
            euler_form,
        ),
        printed(
            "special.zeta_star_euler_form.printed",
            "special",
            Numeric(5e-6),
            |o| Grid::new(o).axis("s", [4i64]).axis("terms", [200i64]).axis("reading", ["printed"]).build(),
            euler_form,
        ),
        spec(
            "special.trilog_functional_eq",
            "special",
            Numeric(1e-7),
            |o| Grid::new(o).axis("z", [-0.5, -0.1]).axis("terms", [400i64]).axis("reading", ["corrected"]).build(),
            trilog,
        ),
        printed(
            "special.trilog_functional_eq.printed",
            "special",
            Numeric(1e-7),
            |o| Grid::new(o).axis("z", [-0.5, -0.1]).axis("terms", [400i64]).axis("reading", ["printed"]).build(),
            trilog,
        ),
        spec(
            "special.fourier_convergence",
            "special",
            Numeric(0.0),
            |o| Grid::new(o).axis("order", r(1, 3)).axis("x", FOURIER_XS).build(),
            |p| {
                let (order, x) = (p.uint("order")?, p.real("x")?);
                let exact = periodic_bernoulli_exact(order, x)?;
                let dev = |j: usize| -> Result<f64> {
                    Ok((bernoulli_fourier(order, x, j)?.value.re - exact).abs())
                };
                let (d20, d40, d80) = (dev(20)?, dev(40)?, dev(80)?);
                // growth beyond 10% jitter on either doubling
                let excess = (d40 - 1.1 * d20).max(d80 - 1.1 * d40).max(0.0);
                num(excess, 0.0)
            },
        ),
    ]
}

fn euler_form(p: &Params) -> Result<Outcome> {
    let (s, n) = (p.uint("s")?, p.uint("terms")?);
    let quoted = oracles::EULER_DECIMALS
        .iter()
        .find(|(t, _)| *t == s)
        .map(|(_, v)| *v)
        .ok_or_else(|| domain("no quoted value"))?;
    num(zeta_star_euler_form(s, n, reading(p)?)?, quoted)
}

fn trilog(p: &Params) -> Result<Outcome> {
    let check = trilog_functional_eq_check(p.real("z")?, p.uint("terms")?, reading(p)?)?;
    num(check.lhs, check.rhs)
}

fn fourier_suite() -> Vec<IdentitySpec> {
    use Mode::*;
    vec![
        spec(
            "fourier.worked_example",
            "fourier",
            Numeric(1e-6),
            |o| Grid::new(o).axis("which", r(1, 2)).axis("terms", [60i64]).build(),
            worked,
        ),
        printed(
            "fourier.worked_example.printed",
            "fourier",
            Numeric(1e-6),
            |o| Grid::new(o).axis("which", [3i64]).axis("terms", [60i64]).build(),
            worked,
        ),
        spec(
            "fourier.series_vs_polynomial",
            "fourier",
            Numeric(1e-5),
            |o| Grid::new(o).axis("order", r(1, 3)).axis("x", FOURIER_XS).axis("terms", [200i64]).build(),
            |p| {
                let (order, x, n) = (p.uint("order")?, p.real("x")?, p.uint("terms")?);
                num(bernoulli_fourier(order, x, n)?.value.re, periodic_bernoulli_exact(order, x)?)
            },
        ),
        spec(
            "fourier.series_imaginary",
            "fourier",
            Numeric(1e-9),
            |o| Grid::new(o).axis("order", r(1, 3)).axis("x", FOURIER_XS).axis("terms", [200i64]).build(),
            |p| {
                let (order, x, n) = (p.uint("order")?, p.real("x")?, p.uint("terms")?);
                num(bernoulli_fourier(order, x, n)?.value.im.abs(), 0.0)
            },
        ),
        spec(
            "fourier.closed_logforms",
            "fourier",
            Numeric(1e-8),
            |o| Grid::new(o).axis("order", r(1, 2)).axis("x", [0.2, 0.3, 1.25, 2.75]).axis("reading", ["corrected"]).build(),
            |p| {
                let (order, x) = (p.uint("order")?, p.real("x")?);
                num(bernoulli_closed_logforms(order, x, reading(p)?)?.re, periodic_bernoulli_exact(order, x)?)
            },
        ),
        spec(
            "fourier.closed_logforms_imaginary",
            "fourier",
            Numeric(1e-9),
            |o| Grid::new(o).axis("order", r(1, 2)).axis("x", [0.2, 0.3, 1.25, 2.75]).axis("reading", ["corrected"]).build(),
            |p| {
                let (order, x) = (p.uint("order")?, p.real("x")?);
                num(bernoulli_closed_logforms(order, x, reading(p)?)?.im.abs(), 0.0)
            },
        ),
        printed(
            "fourier.closed_logforms.printed",
            "fourier",
            Numeric(1e-8),
            |o| Grid::new(o).axis("order", [2i64]).axis("x", [0.2, 0.3, 1.25, 2.75]).axis("reading", ["printed"]).build(),
            |p| {
                let (order, x) = (p.uint("order")?, p.real("x")?);
                num(bernoulli_closed_logforms(order, x, reading(p)?)?.re, periodic_bernoulli_exact(order, x)?)
            },
        ),
    ]
}

fn worked(p: &Params) -> Result<Outcome> {
    let (value, exact) = fourier_worked_example(p.int("which")? as u8, p.uint("terms")?)?;
    num(value.re, exact)
}

fn relation_grid(o: &Overrides) -> Grid<'_> {
    Grid::new(o).axis("source", SOURCES).axis("k", r(4, 8)).axis("n", r(0, 12))
}

fn msums_suite() -> Vec<IdentitySpec> {
    use Mode::*;
    vec![
        spec(
            "msums.recompute_def",
            "msums",
            Exact,
            |o| {
                Grid::new(o)
                    .axis("reading", ["unsigned", "signed"])
                    .axis("k", r(3, 8))
                    .axis("d", r(1, 5))
                    .axis("n", r(0, 30))
                    .build()
            },
            |p| {
                let signed = p.text("reading")? == "signed";
                let (k, d, n) = (p.uint("k")?, p.uint("d")?, p.int("n")? as u64);
                let reading = if signed { StirlingReading::Signed } else { StirlingReading::Unsigned };
                ex(m_def(MSumSpec { k, d, n, reading })?, oracles::m_def_direct(k, d, n, signed))
            },
        ),
        spec(
            "msums.recompute_alt",
            "msums",
            Exact,
            |o| Grid::new(o).axis("k", r(3, 8)).axis("d", r(1, 5)).axis("n", r(0, 30)).build(),
            |p| {
                let (k, d, n) = (p.uint("k")?, p.uint("d")?, p.int("n")? as u64);
                ex(m_alt(k, d, n)?, oracles::m_alt_direct(k, d, n))
            },
        ),
        spec(
            "msums.discrepancy",
            "msums",
            Exact,
            |o| Grid::new(o).axis("k", r(3, 8)).axis("d", r(1, 4)).axis("n", r(0, 12)).build(),
            |p| {
                let (k, d, n) = (p.uint("k")?, p.uint("d")?, p.int("n")? as u64);
                let def = m_def(MSumSpec { k, d, n, reading: StirlingReading::Unsigned })?;
                ex(m_alt(k, d, n)?, def)
            },
        ),
        spec(
            "msums.recurrence",
            "msums",
            Exact,
            |o| relation_grid(o).axis("d", r(1, 4)).build(),
            |p| {
                let (k, d, n) = (p.uint("k")?, p.uint("d")?, p.int("n")? as u64);
                ex(m_recurrence_residual(k, d, n, source(p)?)?, q(0))
            },
        ),
        spec(
            "msums.almost_linear",
            "msums",
            Exact,
            |o| relation_grid(o).axis("which", r(1, 6)).axis("m", ["1"]).build(),
            |p| {
                let (k, n) = (p.uint("k")?, p.int("n")? as u64);
                let res = almost_linear_check(p.int("which")? as u8, k, n, &rational(p, "m")?, source(p)?)?;
                ex(res.lhs, res.rhs)
            },
        ),
        spec(
            "msums.family_1",
            "msums",
            Exact,
            |o| relation_grid(o).axis("coeffs", ["0", "1"]).axis("d", ["1"]).build(),
            |p| family(p, 1),
        ),
        spec(
            "msums.family_2",
            "msums",
            Exact,
            |o| relation_grid(o).axis("coeffs", ["0:0", "1:2"]).axis("d", ["1"]).build(),
            |p| family(p, 2),
        ),
        spec(
            "msums.family_3",
            "msums",
            Exact,
            |o| relation_grid(o).axis("coeffs", ["1:-1:0"]).axis("d", ["2"]).build(),
            |p| family(p, 3),
        ),
        spec(
            "msums.family_2_degeneration",
            "msums",
            Exact,
            |o| relation_grid(o).build(),
            |p| {
                // b1 = b2 = 0, d = 1 leaves H^(k) = -H^(k-3) - 7 M2 + 6 M3 - M4
                let (k, n, src) = (p.uint("k")?, p.int("n")? as u64, source(p)?);
                let zero = [q(0), q(0)];
                let family = general_relations_check(2, &zero, &q(1), k, n, src)?;
                let m = |d| crate::msums::m_value(k, d, n, src);
                let explicit = -harmonic(n, k as i64 - 3) - q(7) * m(2)? + q(6) * m(3)? - m(4)?;
                ex(family.rhs, explicit)
            },
        ),
    ]
}

fn family(p: &Params, which: u8) -> Result<Outcome> {
    let (k, n) = (p.uint("k")?, p.int("n")? as u64);
    let res = general_relations_check(which, &coeff_list(p)?, &rational(p, "d")?, k, n, source(p)?)?;
    ex(res.lhs, res.rhs)
}

/// All registered identities.
pub fn registry() -> Vec<IdentitySpec> {
    let mut all = core();
    all.extend(harmonic_suite());
    all.extend(series_suite());
    all.extend(special_suite());
    all.extend(fourier_suite());
    all.extend(msums_suite());
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn registry_matches_manifest() {
        let registered: BTreeSet<&str> = registry().iter().map(|s| s.id).collect();
        let manifest: BTreeSet<&str> = MANIFEST.iter().map(|(id, _)| *id).collect();
        assert_eq!(registered, manifest);
        assert_eq!(registry().len(), MANIFEST.len());
    }

    #[test]
    fn printed_entries_are_audit_only() {
        for s in registry() {
            assert_eq!(s.audit_only, s.id.ends_with(".printed"), "{}", s.id);
            assert!(super::super::SUITES.contains(&s.suite));
        }
    }
}
