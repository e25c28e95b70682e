//! Spread of the accelerated walk over 500 steps for increasing decay rates,
//! against the homogeneous walk (a = 0). Larger a pushes the walk toward the
//! ballistic limit msd = t².
//!
//!     cargo run --release -p qwalk --example accelerated_msd [out_dir]

use std::env;
use std::error::Error;
use std::fs::{self, File};
use std::io::Write;
use std::f64::consts::FRAC_PI_4;

use qwalk::{evolve, CoinAmplitudes, CoinSchedule, RecorderSpec, WalkerState};

const RATES: [f64; 3] = [0.005, 0.05, 0.5];

fn main() -> Result<(), Box<dyn Error>> {
    let out_dir = env::args().nth(1).unwrap_or_else(|| "data".into());
    fs::create_dir_all(&out_dir)?;
    let steps = 500;

    let msd_of = |schedule: &CoinSchedule| -> Result<Vec<f64>, Box<dyn Error>> {
        let state = WalkerState::new_localized(CoinAmplitudes::balanced(), steps)?;
        Ok(evolve(state, schedule, steps, &RecorderSpec::msd_only())?.msd.unwrap())
    };

    let homogeneous = msd_of(&CoinSchedule::homogeneous(FRAC_PI_4, steps))?;
    let mut accelerated = Vec::new();
    for rate in RATES {
        accelerated.push(msd_of(&CoinSchedule::accelerated(FRAC_PI_4, rate, steps)?)?);
    }

    let path = format!("{out_dir}/accelerated_msd.csv");
    let mut f = File::create(&path)?;
    writeln!(f, "step,a0,a0.005,a0.05,a0.5")?;
    for t in 0..=steps {
        write!(f, "{t},{:.12e}", homogeneous[t])?;
        for series in &accelerated {
            write!(f, ",{:.12e}", series[t])?;
        }
        writeln!(f)?;
    }

    let ballistic = (steps * steps) as f64;
    println!("MSD at t = {steps} (ballistic limit {ballistic:.0}):");
    println!("  a = 0      {:>12.0}", homogeneous[steps]);
    for (rate, series) in RATES.iter().zip(&accelerated) {
        println!("  a = {rate:<6} {:>12.0}", series[steps]);
    }
    println!("\nwrote {path}");
    Ok(())
}
