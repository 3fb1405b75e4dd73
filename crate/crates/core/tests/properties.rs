use proptest::prelude::*;

use zetacoeffs::coeffs::{
    s2star_harmonic, s2star_heuristic, s2star_ogf_coeff, s2star_rec, s2star_reverse_binomial,
    s2star_sum,
};
use zetacoeffs::exactnum::{binomial, root_of_unity};
use zetacoeffs::harmonic::{harmonic, npow_inverse};
use zetacoeffs::msums::{m_alt, m_def, MSumSpec, StirlingReading};
use zetacoeffs::series::{RatSeries, TruncSeries};
use zetacoeffs::audit::oracles;
use zetacoeffs::ExactRational;

fn rational() -> impl Strategy<Value = ExactRational> {
    (-200i64..200, 1i64..60).prop_map(|(n, d)| ExactRational::frac(n, d))
}

fn series_without_constant(order: usize) -> impl Strategy<Value = RatSeries> {
    prop::collection::vec(rational(), order).prop_map(move |cs| {
        TruncSeries::from_fn(order, |n| if n == 0 { ExactRational::zero() } else { cs[n - 1].clone() })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.checked_div(&b).unwrap() * b.clone(), a);
        }
    }

    #[test]
    fn display_parses_back(a in rational()) {
        let parsed: ExactRational = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn pascal_rule(n in 1u64..80, k in 1u64..80) {
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    #[test]
    fn roots_of_unity_lie_on_the_circle(a in 1u32..64, m in -500i64..500) {
        let w = root_of_unity(a, m).unwrap();
        prop_assert!((w.abs() - 1.0).abs() < 1e-14);
        prop_assert!((w.powi(a as i32).re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exp_of_log_is_identity(s in series_without_constant(8)) {
        let one_plus = TruncSeries::one(8).add(&s);
        prop_assert_eq!(one_plus.log().unwrap().exp().unwrap(), one_plus);
    }

    #[test]
    fn coefficient_routes_agree(k in 2usize..9, j in 1usize..10) {
        let rec = s2star_rec(k, j);
        prop_assert_eq!(&s2star_sum(k, j).unwrap(), &rec);
        prop_assert_eq!(&s2star_ogf_coeff(k, j).unwrap(), &rec);
        // these two are indexed from k - 2
        prop_assert_eq!(&s2star_heuristic(k - 2, j).unwrap(), &rec);
        prop_assert_eq!(&s2star_reverse_binomial(k - 2, j).unwrap(), &rec);
        if k <= 6 {
            prop_assert_eq!(&s2star_harmonic(k, j).unwrap(), &rec);
        }
    }

    #[test]
    fn inverse_power_expansion(n in 1u64..25, k in 0usize..8) {
        let direct = ExactRational::from(n as i64).pow(-(k as i32)).unwrap();
        prop_assert_eq!(npow_inverse(n, k), direct);
    }

    #[test]
    fn harmonic_step(n in 1u64..40, r in -4i64..6) {
        let step = harmonic(n, r) - harmonic(n - 1, r);
        prop_assert_eq!(step, ExactRational::from(n as i64).pow(-(r as i32)).unwrap());
    }

    #[test]
    fn m_sums_recompute_with_signs(k in 1usize..5, d in 1usize..4, n in 0u64..6) {
        let unsigned = m_def(MSumSpec { k, d, n, reading: StirlingReading::Unsigned }).unwrap();
        let signed = m_def(MSumSpec { k, d, n, reading: StirlingReading::Signed }).unwrap();
        prop_assert_eq!(&unsigned, &oracles::m_def_direct(k, d, n, false));
        prop_assert_eq!(&signed, &oracles::m_def_direct(k, d, n, true));
        prop_assert_eq!(m_alt(k, d, n).unwrap(), oracles::m_alt_direct(k, d, n));
    }
}
