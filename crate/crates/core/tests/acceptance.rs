//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::time::{Duration, Instant};

use zetacoeffs::audit::{
    emit_report, run_identities, run_suite, run_suite_with_threads, IdentityReport, Overrides,
    ReportFormat, Status, SUITES,
};
use zetacoeffs::cli;
use zetacoeffs::msums::{m_alt, m_def, m_recurrence_residual, MSource, MSumSpec, StirlingReading};
use zetacoeffs::ExactRational;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn reports(ids: &[&str]) -> Vec<IdentityReport> {
    run_identities(ids, &Overrides::new()).expect("registered ids")
}

fn fails(rs: &[IdentityReport]) -> Vec<&IdentityReport> {
    rs.iter().filter(|r| r.status == Status::Fail).collect()
}

fn first_fail(rs: &[IdentityReport]) -> String {
    fails(rs)
        .first()
        .map(|r| format!("; first failure {} [{}] residual {}", r.id, r.params, r.residual))
        .unwrap_or_default()
}

fn cli_output(args: &[&str]) -> String {
    let cli = <cli::Cli as clap::Parser>::try_parse_from(args).expect("valid arguments");
    match cli::execute(&cli).expect("command succeeds") {
        cli::Output::Document(d) => d,
        cli::Output::Report { document, .. } => document,
    }
}

fn all_pass(rs: &[IdentityReport], expected: usize, what: &str) -> Verdict {
    let bad = fails(rs).len();
    verdict(
        bad == 0 && rs.len() == expected,
        format!("{what}: {} checks, {bad} failing (expected {expected}){}", rs.len(), first_fail(rs)),
    )
}

fn timed(limit: Duration, body: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let mut v = body();
    let elapsed = start.elapsed();
    v.detail = format!("{}; {:.2?} (limit {:?})", v.detail, elapsed, limit);
    v.pass &= elapsed < limit;
    v
}

fn c1() -> Verdict {
    timed(Duration::from_secs(1), || {
        let plain = cli_output(&["zetacoeffs", "table", "--kmax", "6", "--jmax", "8"]);
        let scaled = cli_output(&["zetacoeffs", "table", "--kmax", "6", "--jmax", "8", "--scaled"]);
        let cells = |s: &str| s.split_whitespace().count();
        let rs = reports(&["coeffs.table1", "coeffs.table2"]);
        let corner = plain.contains("-3355156783231/20074173235200000")
            && scaled.contains("3355156783231/497871360000");
        let mut v = all_pass(&rs, 126, "table cells against the printed tables");
        v.pass &= corner && cells(&plain) == 63 && cells(&scaled) == 63;
        v
    })
}

fn c2() -> Verdict {
    timed(Duration::from_secs(10), || {
        let rs = reports(&[
            "coeffs.rec_vs_sum",
            "coeffs.rec_vs_harmonic",
            "coeffs.rec_vs_ogf",
            "coeffs.rec_vs_heuristic",
            "coeffs.rec_vs_reverse_binomial",
        ]);
        all_pass(&rs, 225 + 125 + 72 + 225 + 84, "six coefficient routes")
    })
}

fn c3() -> Verdict {
    let rs = reports(&["coeffs.table3"]);
    all_pass(&rs, 12 * 20, "twelve remainder expressions for j = 1..20")
}

fn c4() -> Verdict {
    let inverse = reports(&["harmonic.npow_inverse"]);
    let forward = reports(&["harmonic.npow_forward"]);
    let mut v = all_pass(&inverse, 400, "1/n^k identity");
    let w = all_pass(&forward, 21 * 9, "n^k dual");
    v.pass &= w.pass;
    v.detail = format!("{}; {}", v.detail, w.detail);
    v
}

fn c5() -> Verdict {
    let zeta = reports(&["series.transform_zeta"]);
    let intro = reports(&["series.intro"]);
    let prog = reports(&["series.intro_g"]);
    let distinct_g = zeta.iter().filter_map(|r| r.params.get("g").map(|g| g.to_string())).collect::<std::collections::BTreeSet<_>>();
    let pass = fails(&zeta).is_empty()
        && distinct_g.len() == 4
        && fails(&intro).is_empty()
        && intro.len() == 6 * 3 * 20
        && fails(&prog).is_empty()
        && prog.len() == 3 * (2 + 3 + 4) * 12;
    verdict(
        pass,
        format!(
            "transform {} checks over {} inputs, examples a..f {} checks, example g {} checks, failing {}{}",
            zeta.len(),
            distinct_g.len(),
            intro.len(),
            prog.len(),
            fails(&zeta).len() + fails(&intro).len() + fails(&prog).len(),
            first_fail(&[zeta.clone(), intro.clone(), prog.clone()].concat()),
        ),
    )
}

fn c6() -> Verdict {
    let asserted = reports(&[
        "harmonic.hnum_int",
        "harmonic.hnum_real",
        "harmonic.exp_conv",
        "harmonic.exp_inv",
        "harmonic.corollary_1",
        "harmonic.corollary_2",
        "harmonic.corollary_3",
    ]);
    let audited: Vec<_> = reports(&["msums.almost_linear"])
        .into_iter()
        .filter(|r| matches!(r.params.get("which").map(|w| w.to_string()).as_deref(), Some("3" | "4" | "5" | "6")))
        .collect();
    let recorded = audited.iter().filter(|r| !r.gating()).count();
    let zero = audited.iter().filter(|r| r.status != Status::Fail).count();
    verdict(
        fails(&asserted).is_empty() && !audited.is_empty() && recorded == audited.len(),
        format!(
            "{} asserted checks, {} failing{}; relations 3..6 recorded {} reports ({} with zero residual), none gating",
            asserted.len(),
            fails(&asserted).len(),
            first_fail(&asserted),
            audited.len(),
            zero
        ),
    )
}

fn c7() -> Verdict {
    timed(Duration::from_secs(30), || {
        let rs = reports(&[
            "special.li_new_vs_direct",
            "special.li_classic_vs_direct",
            "special.zeta_star_series",
            "special.zeta_star_euler_form",
        ]);
        all_pass(&rs, 25 + 25 + 6 + 3, "polylog agreement, zeta* series, Euler-sum decimals")
    })
}

fn c8() -> Verdict {
    let rs = reports(&["series.dilog_functional_eq", "special.trilog_functional_eq"]);
    let order40 = rs.iter().any(|r| r.id == "series.dilog_functional_eq" && r.params.to_string() == "order=40");
    let mut v = all_pass(&rs, 3 + 2, "dilog series to order 40, trilog at -0.5 and -0.1");
    v.pass &= order40;
    v
}

fn c9() -> Verdict {
    let rs = reports(&[
        "fourier.worked_example",
        "fourier.series_vs_polynomial",
        "fourier.closed_logforms",
        "fourier.closed_logforms_imaginary",
    ]);
    all_pass(&rs, 2 + 9 + 8 + 8, "worked examples, Fourier series, closed forms")
}

fn c10() -> Verdict {
    timed(Duration::from_secs(60), || {
        let first = run_suite("msums", &Overrides::new()).expect("msums suite");
        let second = run_suite("msums", &Overrides::new()).expect("msums suite");
        let json = emit_report(&first, ReportFormat::Json);
        let deterministic = json == emit_report(&second, ReportFormat::Json);
        let exact = first.iter().all(|r| matches!(r.residual, zetacoeffs::audit::ResidualValue::Exact(_)));
        let alt = m_alt(3, 1, 1).expect("m_alt");
        let def = m_def(MSumSpec { k: 3, d: 1, n: 1, reading: StirlingReading::Unsigned }).expect("m_def");
        let residual = m_recurrence_residual(3, 1, 1, MSource::Alt).expect("residual");
        let discrepancy = alt == ExactRational::from(-1) && def == ExactRational::from(1);
        let documented = residual == ExactRational::frac(-191, 32);
        let failing = fails(&first).len();
        verdict(
            deterministic && exact && discrepancy && documented && !first.is_empty(),
            format!(
                "{} reports ({} nonzero residuals, exact throughout: {exact}), m_alt(3,1,1) = {alt}, m_def(3,1,1) = {def}, residual(3,1,1,alt) = {residual}, json stable: {deterministic}",
                first.len(),
                failing
            ),
        )
    })
}

fn c11() -> Verdict {
    let mut bad = Vec::new();
    for suite in SUITES {
        let ov = Overrides::new();
        let a = emit_report(&run_suite(suite, &ov).expect("suite"), ReportFormat::Json);
        let b = emit_report(&run_suite(suite, &ov).expect("suite"), ReportFormat::Json);
        let t1 = emit_report(&run_suite_with_threads(suite, &ov, 1).expect("suite"), ReportFormat::Json);
        let t8 = emit_report(&run_suite_with_threads(suite, &ov, 8).expect("suite"), ReportFormat::Json);
        if a != b || a != t1 || a != t8 {
            bad.push(suite);
        }
    }
    verdict(bad.is_empty(), format!("{} suites compared over two runs and 1 vs 8 threads; differing: {bad:?}", SUITES.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 11] = [
        ("table reproduction", c1),
        ("coefficient method agreement", c2),
        ("remainder expressions", c3),
        ("power identity and dual", c4),
        ("transform and introductory examples", c5),
        ("harmonic-number propositions", c6),
        ("polylogarithm and alternating zeta", c7),
        ("dilog and trilog functional equations", c8),
        ("Fourier-Bernoulli series", c9),
        ("M-sum audit", c10),
        ("determinism", c11),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        if !v.pass {
            failed += 1;
        }
        println!("criterion {:>2} {} {name}: {}", i + 1, if v.pass { "PASS" } else { "FAIL" }, v.detail);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
