//! The classical baseline: measuring the coin after every step collapses the
//! quantum walk to a symmetric binomial random walk whose variance is exactly
//! the step count — no interference, no coherence.
//!
//!     cargo run -p qwalk --example measured_walk [out_dir]

use std::env;
use std::error::Error;
use std::fs::{self, File};
use std::io::Write;

use qwalk::{measured_walk_distribution, moment, msd};

fn main() -> Result<(), Box<dyn Error>> {
    let out_dir = env::args().nth(1).unwrap_or_else(|| "data".into());
    fs::create_dir_all(&out_dir)?;

    println!("{:>6} {:>12} {:>12}", "steps", "variance", "mean");
    for t in [1usize, 2, 10, 100] {
        let dist = measured_walk_distribution(t);
        println!(
            "{t:>6} {:>12.6} {:>12.2e}",
            msd(&dist),
            moment(&dist, 1)?
        );
    }

    let steps = 100;
    let dist = measured_walk_distribution(steps);
    let path = format!("{out_dir}/measured_walk_{steps}.csv");
    let mut f = File::create(&path)?;
    writeln!(f, "position,probability")?;
    for (x, p) in dist.iter().filter(|&(_, p)| p >= 1e-15) {
        writeln!(f, "{x},{p:.12e}")?;
    }
    println!("\nwrote {path}");
    Ok(())
}
