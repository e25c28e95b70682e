//! Cross-module property tests over randomized schedules and parameters.

mod common;

use proptest::prelude::*;
use qwalk::{
    evolve, fit_alpha, gram_matrix, msd, probability_distribution, CoinAmplitudes, CoinSchedule,
    EnsembleConfig, RecorderSpec, WalkFamily, WalkerState,
};
use std::f64::consts::FRAC_PI_4;

fn arbitrary_schedule() -> impl Strategy<Value = CoinSchedule> {
    let horizon = 48usize;
    prop_oneof![
        (0.0..std::f64::consts::PI).prop_map(move |theta| CoinSchedule::homogeneous(theta, horizon)),
        (0.0..1.5f64, 0.0..0.3f64)
            .prop_map(move |(theta0, rate)| CoinSchedule::accelerated(theta0, rate, horizon).unwrap()),
        any::<u64>().prop_map(move |seed| CoinSchedule::temporal_disorder(seed, horizon)),
        any::<u64>().prop_map(move |seed| CoinSchedule::spatial_disorder(seed, horizon)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_schedule_preserves_norm_support_parity_and_bounds(
        schedule in arbitrary_schedule(),
        steps in 1usize..=48,
    ) {
        let state = WalkerState::new_localized(CoinAmplitudes::balanced(), 48).unwrap();
        let traj = evolve(state, &schedule, steps, &RecorderSpec::full()).unwrap();
        let s = &traj.final_state;
        prop_assert!((s.norm_squared() - 1.0).abs() < 1e-10);

        let t = steps as i64;
        for x in -48i64..=48 {
            let mass = s.up_at(x).norm_sqr() + s.down_at(x).norm_sqr();
            if x.abs() > t || (x + t).rem_euclid(2) == 1 {
                prop_assert!(mass == 0.0, "mass {mass} at {x} after {steps}");
            }
        }

        // light cone: msd can never exceed t²
        let msd_series = traj.msd.as_ref().unwrap();
        for (t, &m) in msd_series.iter().enumerate() {
            prop_assert!(m >= 0.0);
            prop_assert!(m <= (t * t) as f64 + 1e-9, "msd {m} beyond t² at {t}");
        }

        let l1 = traj.c_l1.as_ref().unwrap();
        let re = traj.c_re.as_ref().unwrap();
        for t in 0..=steps {
            prop_assert!((0.0..=1.0 + 1e-12).contains(&l1[t]));
            let cap = ((2 * t + 1) as f64).ln();
            prop_assert!(re[t] >= 0.0 && re[t] <= cap + 1e-12);
        }

        prop_assert!((gram_matrix(s).trace() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn balanced_homogeneous_walks_stay_symmetric(
        theta in 0.05f64..1.5,
        steps in 1usize..=40,
    ) {
        let schedule = CoinSchedule::homogeneous(theta, 40);
        let state = WalkerState::new_localized(CoinAmplitudes::balanced(), 40).unwrap();
        let traj = evolve(state, &schedule, steps, &RecorderSpec::none()).unwrap();
        let dist = probability_distribution(&traj.final_state);
        for x in 0..=steps as i64 {
            prop_assert!((dist.prob_at(x) - dist.prob_at(-x)).abs() < 1e-12);
        }
    }

    #[test]
    fn ensembles_rerun_identically(seed in any::<u64>(), trials in 1usize..=8) {
        let config = EnsembleConfig::new(WalkFamily::SpatialDisorder, 24, trials, seed)
            .with_recorder(RecorderSpec::full());
        let a = qwalk::run_ensemble(&config).unwrap();
        let b = qwalk::run_ensemble(&config).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn accelerated_spread_dominates_homogeneous() {
    let horizon = 100;
    let hom = CoinSchedule::homogeneous(FRAC_PI_4, horizon);
    let acc = CoinSchedule::accelerated(FRAC_PI_4, 0.02, horizon).unwrap();
    let run = |schedule: &CoinSchedule| {
        let state = WalkerState::new_localized(CoinAmplitudes::balanced(), horizon).unwrap();
        evolve(state, schedule, horizon, &RecorderSpec::msd_only())
            .unwrap()
            .msd
            .unwrap()
    };
    let msd_hom = run(&hom);
    let msd_acc = run(&acc);
    for t in 5..=horizon {
        assert!(
            msd_acc[t] >= msd_hom[t],
            "accelerated spread fell below homogeneous at t = {t}"
        );
    }
}

#[test]
fn unitarity_drift_stays_tiny_over_500_steps() {
    for (name, schedule) in common::all_families(500, 41) {
        let state = WalkerState::new_localized(CoinAmplitudes::balanced(), 500).unwrap();
        let traj = evolve(state, &schedule, 500, &RecorderSpec::none()).unwrap();
        let drift = (traj.final_state.norm_squared() - 1.0).abs();
        assert!(drift < 1e-10, "{name}: drift {drift}");
    }
}

#[test]
fn exponent_ordering_at_reference_parameters() {
    let steps = 100;
    let fit = |family: WalkFamily, trials: usize| {
        let config = EnsembleConfig::new(family, steps, trials, 0);
        let averaged = qwalk::run_ensemble(&config).unwrap();
        let series = qwalk::MsdSeries::new(averaged.steps.clone(), averaged.msd.unwrap().mean).unwrap();
        fit_alpha(&series, (1, steps)).unwrap().alpha
    };
    let alpha_acc = fit(WalkFamily::Accelerated { theta0: FRAC_PI_4, rate: 0.02 }, 1);
    let alpha_hom = fit(WalkFamily::Homogeneous { theta: FRAC_PI_4 }, 1);
    let alpha_tmp = fit(WalkFamily::TemporalDisorder, 100);
    let alpha_spt = fit(WalkFamily::SpatialDisorder, 100);
    assert!(alpha_acc > alpha_hom, "{alpha_acc} vs {alpha_hom}");
    assert!(alpha_hom > 1.0, "{alpha_hom}");
    assert!(1.0 > alpha_spt, "{alpha_spt}");
    assert!((alpha_tmp - 1.0).abs() < 0.15, "{alpha_tmp}");
}

#[test]
fn msd_of_point_and_spread_states() {
    // a localized state has zero msd at step 0 regardless of coin
    let coin = CoinAmplitudes::new(
        num_complex::Complex64::new(0.6, 0.0),
        num_complex::Complex64::new(0.0, 0.8),
    )
    .unwrap();
    let state = WalkerState::new_localized(coin, 10).unwrap();
    assert_eq!(msd(&probability_distribution(&state)), 0.0);
}
