//! Coherence of accelerated walks over 500 steps. The faster the coin angle
//! decays, the sooner the l1 coherence collapses toward zero as the walk
//! turns into directed transport, while the homogeneous walk keeps gaining
//! entropy-based coherence.
//!
//!     cargo run --release -p qwalk --example accelerated_coherence [out_dir]

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
    let recorder = RecorderSpec { msd: false, l1: true, re: true, ..RecorderSpec::none() };

    let run = |schedule: &CoinSchedule| -> Result<(Vec<f64>, Vec<f64>), Box<dyn Error>> {
        let state = WalkerState::new_localized(CoinAmplitudes::balanced(), steps)?;
        let traj = evolve(state, schedule, steps, &recorder)?;
        Ok((traj.c_l1.unwrap(), traj.c_re.unwrap()))
    };

    let (hom_l1, hom_re) = run(&CoinSchedule::homogeneous(FRAC_PI_4, steps))?;
    let mut acc = Vec::new();
    for rate in RATES {
        acc.push(run(&CoinSchedule::accelerated(FRAC_PI_4, rate, steps)?)?);
    }

    for (file, pick) in [
        ("accelerated_coherence_l1.csv", 0usize),
        ("accelerated_coherence_re.csv", 1usize),
    ] {
        let path = format!("{out_dir}/{file}");
        let mut f = File::create(&path)?;
        writeln!(f, "step,a0,a0.005,a0.05,a0.5")?;
        for t in 0..=steps {
            let hom = if pick == 0 { hom_l1[t] } else { hom_re[t] };
            write!(f, "{t},{hom:.12e}")?;
            for (l1, re) in &acc {
                write!(f, ",{:.12e}", if pick == 0 { l1[t] } else { re[t] })?;
            }
            writeln!(f)?;
        }
        println!("wrote {path}");
    }

    println!("\nfinal values at t = {steps} (l1 | relative entropy):");
    println!("  a = 0      {:.4} | {:.4}", hom_l1[steps], hom_re[steps]);
    for (rate, (l1, re)) in RATES.iter().zip(&acc) {
        println!("  a = {rate:<6} {:.4} | {:.4}", l1[steps], re[steps]);
    }
    Ok(())
}
