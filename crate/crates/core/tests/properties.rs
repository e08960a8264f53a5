use apring_core::apmin::{radii_formulas, scan_extrema, step_limit};
use apring_core::curves::sample_curve;
use apring_core::partition::{
    exact_bruteforce, exact_meet_in_middle, karmarkar_karp, signed_sum, solve, MethodChoice,
    WeightSet,
};
use apring_core::poly::{Frequency, Term, TrigPolynomial};
use proptest::prelude::*;

fn oracle_min(w: &[f64]) -> f64 {
    (0u64..1 << w.len())
        .map(|mask| {
            w.iter()
                .enumerate()
                .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                .sum::<f64>()
                .abs()
        })
        .fold(f64::INFINITY, f64::min)
}

fn polynomial() -> impl Strategy<Value = TrigPolynomial> {
    prop::collection::vec((0.0..3.0f64, -3.2..3.2f64, -6.0..6.0f64), 1..=5).prop_map(|terms| {
        TrigPolynomial::new(
            terms
                .into_iter()
                .map(|(m, p, l)| Term::new(m, p, Frequency::real(l).unwrap()).unwrap())
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn exact_solvers_agree_with_enumeration(w in prop::collection::vec(0.0..50.0f64, 1..12)) {
        let set = WeightSet::new(w.clone()).unwrap();
        let want = oracle_min(&w);
        let tol = 1e-12 * w.iter().sum::<f64>().max(1.0);
        for result in [
            exact_bruteforce(&set).unwrap(),
            exact_meet_in_middle(&set).unwrap(),
            solve(&set, MethodChoice::Auto).unwrap(),
        ] {
            prop_assert!((result.m - want).abs() <= tol);
            prop_assert_eq!(result.signs[0], 1);
            prop_assert_eq!(signed_sum(&w, &result.signs).abs(), result.m);
        }
        let kk = karmarkar_karp(&set);
        prop_assert!(kk.m >= want - tol);
        prop_assert_eq!(signed_sum(&w, &kk.signs).abs(), kk.m);
    }

    #[test]
    fn integer_dp_matches_enumeration(w in prop::collection::vec(0u32..500, 1..14)) {
        let w: Vec<f64> = w.into_iter().map(f64::from).collect();
        let set = WeightSet::new(w.clone()).unwrap();
        let dp = solve(&set, MethodChoice::IntegerDp { scale: 1 }).unwrap();
        prop_assert_eq!(dp.m, oracle_min(&w));
    }

    #[test]
    fn scans_stay_inside_formula_annulus(f in polynomial(), t in 1.0..30.0f64) {
        let r = radii_formulas(&f).unwrap();
        let h = step_limit(&f).min(0.25);
        let scan = scan_extrema(&f, 0.0, t, h, true).unwrap();
        prop_assert!(scan.max_val <= r.big_m + 1e-9);
        prop_assert!(scan.min_val >= 0.0);
        prop_assert!(scan.min_val <= scan.max_val);
        prop_assert!((f.evaluate_abs(scan.argmin) - scan.min_val).abs() <= 1e-12 * r.big_m.max(1.0));
        let grid = scan_extrema(&f, 0.0, t, h, false).unwrap();
        prop_assert!(scan.min_val <= grid.min_val && scan.max_val >= grid.max_val);
    }

    #[test]
    fn curve_samples_obey_triangle_inequality(f in polynomial(), t in 0.5..20.0f64) {
        let h = step_limit(&f).min(0.05);
        let c = sample_curve(&f, t, h).unwrap();
        let r = f.modulus_sum();
        prop_assert!(c.rows.iter().all(|row| row.x * row.x + row.y * row.y <= r * r + 1e-9));
        prop_assert!(c.rows.windows(2).all(|w| w[0].t < w[1].t));
        prop_assert!(c.rows.last().unwrap().t <= t);
    }
}
