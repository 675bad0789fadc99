use proptest::prelude::*;

use baskakov::coeffs::{check_invariants, direct, inverse_identity_failure, recurrence, Family};
use baskakov::evaluator::{
    basis_row, qi_eval_closed, truncation_for_tail, QiConfig, QuasiInterpolant, SampleSet,
};
use baskakov::lebesgue::{lebesgue_function, lebesgue_truncation};

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::Theta), Just(Family::Eta)]
}

fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, a| acc * t + a)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn recurrence_matches_direct(fam in family(), n in 1u32..40, r_max in 0usize..8) {
        let a = recurrence(fam, n, r_max).unwrap();
        let b = direct(fam, n, r_max).unwrap();
        prop_assert_eq!(a.polys, b.polys);
    }

    #[test]
    fn tables_satisfy_invariants(fam in family(), n in 1u32..40) {
        let t = recurrence(fam, n, 9).unwrap();
        prop_assert!(check_invariants(&t).is_ok());
    }

    #[test]
    fn families_are_mutually_inverse(n in 1u32..30) {
        prop_assert_eq!(inverse_identity_failure(n, 8).unwrap(), None);
    }

    #[test]
    fn polynomials_up_to_order_reproduced(
        n in 6u32..24,
        r in 0usize..7,
        coeffs in prop::collection::vec(-2.0f64..2.0, 7),
        x in 0.0f64..1.5,
    ) {
        let deg = r.max(1);
        let c = &coeffs[..=deg];
        let big_n = truncation_for_tail(n + r as u32, x, 1e-16, 10 * n as usize).unwrap();
        let s = SampleSet::from_fn(n, big_n, |t| horner(c, t)).unwrap();
        let qi = QuasiInterpolant::new(&s, QiConfig::new(n, r, big_n).unwrap()).unwrap();
        let v = qi.eval(x).unwrap();
        let scale = 1.0 + c.iter().map(|a| a.abs()).sum::<f64>() * (1.0 + x).powi(deg as i32);
        prop_assert!((v - horner(c, x)).abs() < 1e-9 * scale, "{} vs {}", v, horner(c, x));
    }

    #[test]
    fn closed_and_generic_paths_agree(
        n in 4u32..20,
        r in 2usize..=4,
        a in 0.1f64..3.0,
        x in 0.0f64..2.0,
    ) {
        let big_n = 12 * n as usize;
        let s = SampleSet::from_fn(n, big_n, |t| 1.0 / (1.0 + a * t * t)).unwrap();
        let cfg = QiConfig::new(n, r, big_n).unwrap();
        let generic = QuasiInterpolant::new(&s, cfg).unwrap().eval(x).unwrap();
        let closed = qi_eval_closed(&s, &cfg, x).unwrap();
        prop_assert!((generic - closed).abs() < 1e-11, "{} {}", generic, closed);
    }

    #[test]
    fn basis_is_partition_of_unity(n in 1u32..60, x in 0.0f64..4.0) {
        let big_n = truncation_for_tail(n, x, 1e-15, 10).unwrap();
        let row = basis_row(n, x, big_n).unwrap();
        let sum: f64 = row.values.iter().sum();
        prop_assert!((sum - 1.0).abs() < 1e-12, "{}", sum);
        prop_assert!(row.values.iter().all(|v| *v >= 0.0));
    }

    #[test]
    fn lebesgue_function_at_least_one(n in 4u32..40, r in 0usize..7, x in 0.0f64..6.0) {
        let l = lebesgue_function(n, r, x, lebesgue_truncation(n, r, x).unwrap()).unwrap();
        prop_assert!(l >= 1.0 - 1e-10, "{}", l);
    }

    #[test]
    fn sample_csv_round_trip(n in 1u32..50, values in prop::collection::vec(-1e6f64..1e6, 1..40)) {
        let s = SampleSet::new(n, values).unwrap();
        let back = SampleSet::from_csv(n, s.to_csv().as_bytes()).unwrap();
        prop_assert_eq!(back, s);
    }
}
