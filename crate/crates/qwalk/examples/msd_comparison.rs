//! Mean squared displacement against step count for all five walks over 100
//! steps: superdiffusion for homogeneous/accelerated, normal diffusion for
//! temporal disorder and the classical baseline, subdiffusion for spatial
//! disorder. Emits one wide CSV for plotting.
//!
//!     cargo run --release -p qwalk --example msd_comparison [out_dir]

use std::env;
use std::error::Error;
use std::fs::{self, File};
use std::io::Write;
use std::f64::consts::FRAC_PI_4;

use qwalk::{run_ensemble, EnsembleConfig, WalkFamily};

fn main() -> Result<(), Box<dyn Error>> {
    let out_dir = env::args().nth(1).unwrap_or_else(|| "data".into());
    fs::create_dir_all(&out_dir)?;
    let steps = 100;

    let mean_msd = |family, trials| -> Result<Vec<f64>, Box<dyn Error>> {
        let averaged = run_ensemble(&EnsembleConfig::new(family, steps, trials, 0))?;
        Ok(averaged.msd.unwrap().mean)
    };
    let homogeneous = mean_msd(WalkFamily::Homogeneous { theta: FRAC_PI_4 }, 1)?;
    let accelerated = mean_msd(WalkFamily::Accelerated { theta0: FRAC_PI_4, rate: 0.02 }, 1)?;
    let temporal = mean_msd(WalkFamily::TemporalDisorder, 100)?;
    let spatial = mean_msd(WalkFamily::SpatialDisorder, 100)?;

    let path = format!("{out_dir}/msd_comparison.csv");
    let mut f = File::create(&path)?;
    writeln!(f, "step,accelerated,homogeneous,temporal,spatial,classical")?;
    for t in 0..=steps {
        writeln!(
            f,
            "{t},{:.12e},{:.12e},{:.12e},{:.12e},{}",
            accelerated[t], homogeneous[t], temporal[t], spatial[t], t
        )?;
    }

    println!("MSD at t = {steps}:");
    println!("  accelerated  {:>10.1}", accelerated[steps]);
    println!("  homogeneous  {:>10.1}", homogeneous[steps]);
    println!("  classical    {:>10.1}", steps as f64);
    println!("  temporal     {:>10.1}", temporal[steps]);
    println!("  spatial      {:>10.1}", spatial[steps]);
    println!("\nwrote {path}");
    Ok(())
}
