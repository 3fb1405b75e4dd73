//! Command-line front end. `main.rs` only forwards to [`run`].

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::audit::{self, Overrides, ReportFormat};
use crate::coeffs::{
    coefficient_table, s2star_harmonic, s2star_heuristic, s2star_ogf_coeff, s2star_rec,
    s2star_reverse_binomial, s2star_scaled, s2star_sum,
};
use crate::error::{domain, Error, Result};
use crate::exactnum::{format_significant, ComplexF, ExactRational};
use crate::harmonic::{harmonic, harmonic_real, HarmonicT};
use crate::msums::{m_recurrence_residual, m_value, zeta5_diagnostic, MSource};
use crate::series::{intro_example, IntroExample, IntroParams};
use crate::special::{
    bernoulli_closed_logforms, bernoulli_fourier, li_classic_series, li_direct, li_new_series,
    periodic_bernoulli_exact, zeta_star, zeta_star_euler_form, zeta_star_harmonic_form, EvalResult,
    Reading, ZetaStarMethod,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Frac,
    Decimal,
    Csv,
    Json,
    Markdown,
}

#[derive(Debug, Parser)]
#[command(name = "zetacoeffs", version, about = "Generalized zeta-series coefficients and the identities built on them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "frac")]
    pub format: Format,
    /// Write the document here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoeffMethod {
    Rec,
    Sum,
    Harmonic,
    Ogf,
    Heuristic,
    ReverseBinomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolylogMethod {
    New,
    Classic,
    Direct,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZetaStarForm {
    Series,
    Closed,
    Harmonic,
    Euler,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReadingArg {
    Corrected,
    Printed,
}

impl From<ReadingArg> for Reading {
    fn from(r: ReadingArg) -> Self {
        match r {
            ReadingArg::Corrected => Reading::Corrected,
            ReadingArg::Printed => Reading::AsPrinted,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    DefUnsigned,
    DefSigned,
    Alt,
}

impl From<SourceArg> for MSource {
    fn from(s: SourceArg) -> Self {
        match s {
            SourceArg::DefUnsigned => MSource::DefUnsigned,
            SourceArg::DefSigned => MSource::DefSigned,
            SourceArg::Alt => MSource::Alt,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient table, rows 0..=kmax and columns 0..=jmax.
    Table {
        #[arg(long, default_value_t = 6)]
        kmax: usize,
        #[arg(long, default_value_t = 8)]
        jmax: usize,
        /// Multiply column j by (-1)^(j-1) j!.
        #[arg(long)]
        scaled: bool,
    },
    /// A single coefficient {{k, j}}*.
    Coeff {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, value_enum, default_value = "rec")]
        method: CoeffMethod,
        #[arg(long)]
        scaled: bool,
    },
    /// H_n^(r), or H_n^(r)(t) with --t; a non-integer r is evaluated in floating point.
    Harmonic {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "1")]
        r: String,
        #[arg(long)]
        t: Option<String>,
    },
    /// Coefficients of one of the introductory generating functions a..g.
    Series {
        #[arg(long)]
        example: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        u: usize,
        #[arg(long, default_value = "1")]
        t: String,
        #[arg(long, default_value = "1")]
        r: String,
        #[arg(long, default_value_t = 2)]
        a: u32,
        #[arg(long, default_value_t = 0)]
        b: u32,
    },
    /// Li_s(z) for real z.
    Polylog {
        #[arg(long)]
        s: usize,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, default_value_t = 200)]
        terms: usize,
        #[arg(long, value_enum, default_value = "new")]
        method: PolylogMethod,
    },
    /// The alternating zeta function zeta*(s).
    Zetastar {
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 120)]
        terms: usize,
        #[arg(long, value_enum, default_value = "series")]
        method: ZetaStarForm,
        #[arg(long, value_enum, default_value = "corrected")]
        reading: ReadingArg,
    },
    /// B_n({x})/n! from the Fourier series, or from the closed log forms with --closed.
    Fourier {
        #[arg(long)]
        order: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 200)]
        terms: usize,
        #[arg(long)]
        closed: bool,
        #[arg(long, value_enum, default_value = "corrected")]
        reading: ReadingArg,
    },
    /// M_{k+1}^(d)(n), its recurrence residual, or the zeta(5) diagnostic.
    Msum {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "alt")]
        source: SourceArg,
        #[arg(long)]
        residual: bool,
        /// Print 3 M_6^(2)(m) - M_6^(3)(m) for m = 1..=n.
        #[arg(long)]
        zeta5: bool,
    },
    /// Run an identity suite and emit its report.
    Verify {
        #[arg(long)]
        suite: String,
        /// Grid override such as n=0..5 or x=0.25,0.5; repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

/// One printed value.
#[derive(Debug, Clone)]
enum Field {
    Exact(ExactRational),
    Real(f64),
    Complex(ComplexF),
    Int(i64),
    Text(String),
    Bool(bool),
}

impl Field {
    fn render(&self, decimal: bool) -> String {
        match self {
            Field::Exact(q) if decimal => q.to_decimal_string(15),
            Field::Exact(q) => q.to_string(),
            Field::Real(x) if decimal => format_significant(*x, 15),
            Field::Real(x) => format!("{x}"),
            Field::Complex(z) => {
                let f = |x: f64| if decimal { format_significant(x, 15) } else { format!("{x}") };
                if z.im == 0.0 {
                    f(z.re)
                } else if z.im < 0.0 {
                    format!("{}-{}i", f(z.re), f(-z.im))
                } else {
                    format!("{}+{}i", f(z.re), f(z.im))
                }
            }
            Field::Int(v) => v.to_string(),
            Field::Text(s) => s.clone(),
            Field::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Exact(q) => Value::String(q.to_string()),
            Field::Real(x) => json!(x),
            Field::Complex(z) => json!([z.re, z.im]),
            Field::Int(v) => json!(v),
            Field::Text(s) => Value::String(s.clone()),
            Field::Bool(b) => json!(b),
        }
    }
}

type Record = Vec<(String, Field)>;

fn render_record(rec: &Record, format: Format) -> String {
    match format {
        Format::Frac | Format::Decimal => {
            let decimal = format == Format::Decimal;
            if rec.len() == 1 {
                format!("{}\n", rec[0].1.render(decimal))
            } else {
                rec.iter().map(|(k, v)| format!("{k} = {}\n", v.render(decimal))).collect()
            }
        }
        Format::Json => {
            let obj: Map<String, Value> = rec.iter().map(|(k, v)| (k.clone(), v.json())).collect();
            format!("{}\n", serde_json::to_string_pretty(&Value::Object(obj)).expect("json"))
        }
        Format::Csv => {
            let names: Vec<&str> = rec.iter().map(|(k, _)| k.as_str()).collect();
            let values: Vec<String> = rec.iter().map(|(_, v)| v.render(false)).collect();
            format!("{}\n{}\n", names.join(","), values.join(","))
        }
        Format::Markdown => {
            let mut out = String::from("| name | value |\n|---|---|\n");
            for (k, v) in rec {
                out.push_str(&format!("| {k} | {} |\n", v.render(false)));
            }
            out
        }
    }
}

fn render_table(table: &[Vec<ExactRational>], format: Format) -> String {
    let cell = |q: &ExactRational| match format {
        Format::Decimal => q.to_decimal_string(15),
        _ => q.to_string(),
    };
    match format {
        Format::Json => {
            let rows: Vec<Vec<String>> = table.iter().map(|r| r.iter().map(|q| q.to_string()).collect()).collect();
            format!("{}\n", serde_json::to_string(&rows).expect("json"))
        }
        Format::Csv => table
            .iter()
            .map(|r| r.iter().map(cell).collect::<Vec<_>>().join(",") + "\n")
            .collect(),
        Format::Markdown => {
            let cols = table.first().map_or(0, Vec::len);
            let mut out = String::from("| k \\ j |");
            for j in 0..cols {
                out.push_str(&format!(" {j} |"));
            }
            out.push_str("\n|---|");
            out.push_str(&"---|".repeat(cols));
            out.push('\n');
            for (k, row) in table.iter().enumerate() {
                out.push_str(&format!("| {k} |"));
                for q in row {
                    out.push_str(&format!(" {} |", cell(q)));
                }
                out.push('\n');
            }
            out
        }
        Format::Frac | Format::Decimal => table
            .iter()
            .map(|r| r.iter().map(cell).collect::<Vec<_>>().join(" ") + "\n")
            .collect(),
    }
}

fn parse_rational(s: &str) -> Result<ExactRational> {
    s.parse()
}

fn parse_real(s: &str) -> Result<f64> {
    Ok(parse_rational(s)?.to_f64())
}

fn eval_fields(r: &EvalResult) -> Record {
    vec![
        ("value".into(), Field::Complex(r.value)),
        ("terms_used".into(), Field::Int(r.terms_used as i64)),
        ("last_term_magnitude".into(), Field::Real(r.last_term_magnitude)),
        ("method".into(), Field::Text(serde_json::to_value(r.method).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default())),
        ("outside_domain".into(), Field::Bool(r.outside_domain)),
    ]
}

fn one(name: &str, f: Field) -> Record {
    vec![(name.to_string(), f)]
}

/// The document a command produces.
pub enum Output {
    Document(String),
    /// A verification report and whether it should fail the run.
    Report { document: String, failed: bool },
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let fmt = cli.format;
    let doc = |rec: Record| Ok(Output::Document(render_record(&rec, fmt)));
    match &cli.command {
        Command::Table { kmax, jmax, scaled } => {
            Ok(Output::Document(render_table(&coefficient_table(*kmax, *jmax, *scaled), fmt)))
        }
        Command::Coeff { k, j, method, scaled } => {
            let (k, j) = (*k, *j);
            let v = match method {
                CoeffMethod::Rec => s2star_rec(k, j),
                CoeffMethod::Sum => s2star_sum(k, j)?,
                CoeffMethod::Harmonic => s2star_harmonic(k, j)?,
                CoeffMethod::Ogf => s2star_ogf_coeff(k, j)?,
                CoeffMethod::Heuristic => {
                    s2star_heuristic(k.checked_sub(2).ok_or_else(|| domain("heuristic route needs k >= 2"))?, j)?
                }
                CoeffMethod::ReverseBinomial => s2star_reverse_binomial(
                    k.checked_sub(2).ok_or_else(|| domain("reverse binomial route needs k >= 2"))?,
                    j,
                )?,
            };
            let v = if *scaled {
                if *method != CoeffMethod::Rec {
                    return Err(domain("--scaled is only available with the recurrence"));
                }
                s2star_scaled(k, j)
            } else {
                v
            };
            doc(one("coeff", Field::Exact(v)))
        }
        Command::Harmonic { n, r, t } => {
            if let Some(t) = t {
                let order: i64 = r.parse().map_err(|_| Error::Parse { input: r.clone(), what: "integer order" })?;
                return doc(one("harmonic", Field::Exact(HarmonicT::new(*n, order, parse_rational(t)?).value)));
            }
            match r.parse::<i64>() {
                Ok(order) => doc(one("harmonic", Field::Exact(harmonic(*n, order)))),
                Err(_) => doc(one("harmonic", Field::Real(harmonic_real(*n, parse_real(r)?)))),
            }
        }
        Command::Series { example, k, u, t, r, a, b } => {
            let id: IntroExample = example.parse()?;
            let params = IntroParams { t: parse_rational(t)?, r: parse_rational(r)?, a: *a, b: *b };
            let out = intro_example(id, *k, *u, &params)?;
            let rec: Record = match out.as_exact() {
                Some(s) => s.coeffs().iter().enumerate().map(|(n, c)| (format!("z^{n}"), Field::Exact(c.clone()))).collect(),
                None => out.to_complex().coeffs().iter().enumerate().map(|(n, c)| (format!("z^{n}"), Field::Complex(*c))).collect(),
            };
            doc(rec)
        }
        Command::Polylog { s, z, terms, method } => {
            let z = parse_real(z)?;
            match method {
                PolylogMethod::New => doc(eval_fields(&li_new_series(*s, z, *terms)?)),
                PolylogMethod::Classic => doc(eval_fields(&li_classic_series(*s, z, *terms)?)),
                PolylogMethod::Direct => {
                    if z == 1.0 && *s <= 1 {
                        return Err(domain("Li_1 has a pole at z = 1"));
                    }
                    doc(eval_fields(&li_direct(*s, z, *terms)))
                }
                PolylogMethod::All => doc(vec![
                    ("new".into(), Field::Complex(li_new_series(*s, z, *terms)?.value)),
                    ("classic".into(), Field::Complex(li_classic_series(*s, z, *terms)?.value)),
                    ("direct".into(), Field::Complex(li_direct(*s, z, *terms).value)),
                ]),
            }
        }
        Command::Zetastar { s, terms, method, reading } => {
            let v = match method {
                ZetaStarForm::Series => zeta_star(*s, *terms, ZetaStarMethod::Series)?,
                ZetaStarForm::Closed => zeta_star(*s, *terms, ZetaStarMethod::Closed)?,
                ZetaStarForm::Harmonic => zeta_star_harmonic_form(*s, *terms)?,
                ZetaStarForm::Euler => zeta_star_euler_form(*s, *terms, (*reading).into())?,
            };
            doc(one("zetastar", Field::Real(v)))
        }
        Command::Fourier { order, x, terms, closed, reading } => {
            let x = parse_real(x)?;
            let exact = periodic_bernoulli_exact(*order, x)?;
            let mut rec = if *closed {
                vec![("value".to_string(), Field::Complex(bernoulli_closed_logforms(*order, x, (*reading).into())?))]
            } else {
                eval_fields(&bernoulli_fourier(*order, x, *terms)?)
            };
            rec.push(("polynomial".into(), Field::Real(exact)));
            doc(rec)
        }
        Command::Msum { k, d, n, source, residual, zeta5 } => {
            let src: MSource = (*source).into();
            if *zeta5 {
                let ns: Vec<u64> = (1..=*n).collect();
                let rows = zeta5_diagnostic(&ns, src)?;
                let mut rec = Record::new();
                for row in rows {
                    rec.push((format!("combination[{}]", row.n), Field::Real(row.combination)));
                    rec.push((format!("estimate[{}]", row.n), Field::Real(row.estimate)));
                }
                return doc(rec);
            }
            let v = if *residual { m_recurrence_residual(*k, *d, *n, src)? } else { m_value(*k, *d, *n, src)? };
            doc(one("msum", Field::Exact(v)))
        }
        Command::Verify { suite, params, threads } => {
            let mut overrides = Overrides::new();
            for p in params {
                overrides.parse_assignment(p)?;
            }
            let reports = match threads {
                Some(t) => audit::run_suite_with_threads(suite, &overrides, *t)?,
                None => audit::run_suite(suite, &overrides)?,
            };
            let format = match fmt {
                Format::Csv => ReportFormat::Csv,
                Format::Markdown => ReportFormat::Markdown,
                _ => ReportFormat::Json,
            };
            let mut document = audit::emit_report(&reports, format);
            if !document.ends_with('\n') {
                document.push('\n');
            }
            Ok(Output::Report { document, failed: audit::failures(&reports) > 0 })
        }
    }
}

fn write(cli: &Cli, document: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, document),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(document.as_bytes())
        }
    }
}

/// Parses arguments, runs the command and returns the process exit code:
/// 0 on success, 1 on domain errors or gating failures, 2 for an unknown suite.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let (document, code) = match execute(&cli) {
        Ok(Output::Document(d)) => (d, 0),
        Ok(Output::Report { document, failed }) => (document, i32::from(failed)),
        Err(e @ Error::UnknownSuite(_)) => {
            eprintln!("error: {e}; expected one of {}", audit::SUITES.join(", "));
            return 2;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    if let Err(e) = write(&cli, &document) {
        eprintln!("error: {e}");
        return 1;
    }
    code
}
