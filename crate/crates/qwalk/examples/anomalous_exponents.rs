//! Anomalous diffusion exponents of the five walks over 100 steps, read two
//! ways from the trial-averaged msd series: the anchored pointwise-mean
//! exponent (how a log-log plot through the msd(1) = 1 origin is read) and
//! the unweighted log-log OLS slope. α > 1 marks superdiffusion, α < 1
//! subdiffusion.
//!
//!     cargo run --release -p qwalk --example anomalous_exponents

use std::error::Error;
use std::f64::consts::FRAC_PI_4;

use qwalk::{anchored_alpha, fit_alpha, run_ensemble, EnsembleConfig, MsdSeries, WalkFamily};

fn main() -> Result<(), Box<dyn Error>> {
    let steps = 100;
    let window = (1, steps);

    let series_of = |family, trials| -> Result<MsdSeries, Box<dyn Error>> {
        let averaged = run_ensemble(&EnsembleConfig::new(family, steps, trials, 0))?;
        Ok(MsdSeries::new(averaged.steps, averaged.msd.unwrap().mean)?)
    };

    let walks = [
        ("accelerated", series_of(WalkFamily::Accelerated { theta0: FRAC_PI_4, rate: 0.02 }, 1)?),
        ("homogeneous", series_of(WalkFamily::Homogeneous { theta: FRAC_PI_4 }, 1)?),
        ("temporal", series_of(WalkFamily::TemporalDisorder, 100)?),
        ("spatial", series_of(WalkFamily::SpatialDisorder, 100)?),
        ("classical", MsdSeries::from_step_zero((0..=steps).map(|t| t as f64).collect())),
    ];

    println!("{:<12} {:>10} {:>10} {:>12}", "walk", "anchored", "ols", "regime");
    for (name, series) in &walks {
        let anchored = anchored_alpha(series, window)?;
        let ols = fit_alpha(series, window)?;
        let regime = if anchored > 1.05 {
            "superdiffusive"
        } else if anchored < 0.95 {
            "subdiffusive"
        } else {
            "diffusive"
        };
        println!("{name:<12} {anchored:>10.3} {:>10.3} {regime:>12}", ols.alpha);
    }
    Ok(())
}
