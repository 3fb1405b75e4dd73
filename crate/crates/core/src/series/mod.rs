//! Truncated power series and the generating-function transforms built on them.

mod bivar;
mod transform;
mod trunc;

pub use bivar::BivarTruncSeries;
pub use transform::{
    dilog_functional_eq_check, exp_harmonic_series, geom_derivative, intro_example,
    multisection, stirling1_egf_check, transform_forward, transform_general_f, transform_zeta,
    IntroExample, IntroOutput, IntroParams, SeriesCheck,
};
pub use trunc::{
    exp_series, geometric, log_one_minus, polylog_series, ComplexSeries, RatSeries, TruncSeries,
};
