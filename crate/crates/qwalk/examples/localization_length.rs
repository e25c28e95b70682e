//! Localization length ξ(θ) = −1/ln(cos θ) across coin angles, next to the
//! saturated spread of an actual spatial-disorder ensemble: Anderson
//! localization pins the walker within a few sites of the origin while the
//! clean walk covers the whole light cone.
//!
//!     cargo run --release -p qwalk --example localization_length [out_dir]

use std::env;
use std::error::Error;
use std::fs::{self, File};
use std::io::Write;
use std::f64::consts::{FRAC_PI_4, PI};

use qwalk::{localization_length, run_ensemble, EnsembleConfig, WalkFamily};

fn main() -> Result<(), Box<dyn Error>> {
    let out_dir = env::args().nth(1).unwrap_or_else(|| "data".into());
    fs::create_dir_all(&out_dir)?;

    let path = format!("{out_dir}/localization_length.csv");
    let mut f = File::create(&path)?;
    writeln!(f, "theta,xi")?;
    println!("{:>10} {:>10}", "theta/pi", "xi");
    for k in 1..=11 {
        let theta = k as f64 * PI / 24.0;
        let xi = localization_length(theta)?;
        writeln!(f, "{theta:.12e},{xi:.12e}")?;
        println!("{:>10.4} {xi:>10.3}", theta / PI);
    }
    println!("wrote {path}");

    let steps = 100;
    let spatial = run_ensemble(&EnsembleConfig::new(WalkFamily::SpatialDisorder, steps, 100, 0))?;
    let clean = run_ensemble(&EnsembleConfig::new(
        WalkFamily::Homogeneous { theta: FRAC_PI_4 },
        steps,
        1,
        0,
    ))?;
    let spread = |avg: &qwalk::AveragedSeries| avg.msd.as_ref().unwrap().mean[steps].sqrt();
    println!(
        "\nafter {steps} steps: spatial-disorder spread σ = {:.2} sites, clean walk σ = {:.2}",
        spread(&spatial),
        spread(&clean)
    );
    Ok(())
}
