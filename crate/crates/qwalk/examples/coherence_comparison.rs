//! Both coherence measures of the position state over 100 steps for every
//! walk family. The superdiffusive walks hold visibly more coherence than
//! the disorder-averaged ones at every step past the opening transient.
//!
//!     cargo run --release -p qwalk --example coherence_comparison [out_dir]

use std::env;
use std::error::Error;
use std::fs::{self, File};
use std::io::Write;
use std::f64::consts::FRAC_PI_4;

use qwalk::{run_ensemble, EnsembleConfig, RecorderSpec, WalkFamily};

fn main() -> Result<(), Box<dyn Error>> {
    let out_dir = env::args().nth(1).unwrap_or_else(|| "data".into());
    fs::create_dir_all(&out_dir)?;
    let steps = 100;
    let recorder = RecorderSpec { msd: false, l1: true, re: true, ..RecorderSpec::none() };

    let coherence = |family, trials| -> Result<(Vec<f64>, Vec<f64>), Box<dyn Error>> {
        let config = EnsembleConfig::new(family, steps, trials, 0).with_recorder(recorder);
        let averaged = run_ensemble(&config)?;
        Ok((averaged.c_l1.unwrap().mean, averaged.c_re.unwrap().mean))
    };

    let (hom_l1, hom_re) = coherence(WalkFamily::Homogeneous { theta: FRAC_PI_4 }, 1)?;
    let (acc_l1, acc_re) = coherence(WalkFamily::Accelerated { theta0: FRAC_PI_4, rate: 0.02 }, 1)?;
    let (tmp_l1, tmp_re) = coherence(WalkFamily::TemporalDisorder, 100)?;
    let (spt_l1, spt_re) = coherence(WalkFamily::SpatialDisorder, 100)?;

    for (file, columns) in [
        ("coherence_l1.csv", [&hom_l1, &acc_l1, &tmp_l1, &spt_l1]),
        ("coherence_re.csv", [&hom_re, &acc_re, &tmp_re, &spt_re]),
    ] {
        let path = format!("{out_dir}/{file}");
        let mut f = File::create(&path)?;
        writeln!(f, "step,homogeneous,accelerated,temporal,spatial")?;
        let [hom, acc, tmp, spt] = columns;
        for t in 0..=steps {
            writeln!(
                f,
                "{t},{:.12e},{:.12e},{:.12e},{:.12e}",
                hom[t], acc[t], tmp[t], spt[t]
            )?;
        }
        println!("wrote {path}");
    }

    println!("\ncoherence at t = {steps} (l1 | relative entropy):");
    println!("  homogeneous  {:.4} | {:.4}", hom_l1[steps], hom_re[steps]);
    println!("  accelerated  {:.4} | {:.4}", acc_l1[steps], acc_re[steps]);
    println!("  temporal     {:.4} | {:.4}", tmp_l1[steps], tmp_re[steps]);
    println!("  spatial      {:.4} | {:.4}", spt_l1[steps], spt_re[steps]);
    Ok(())
}
