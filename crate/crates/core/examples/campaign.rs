//! A seeded property campaign over an honest realization, run serially and
//! in parallel to show the reports agree byte for byte.
//!
//! `cargo run --release --example campaign -- configs/affine_hashed.json`

use ofip::verifier::{run_campaign, CampaignConfig, Execution};

const DEFAULT: &str = r#"{
    "seed": 2024, "trials": 2000, "dims": [1, 2, 4], "field": "both",
    "alpha_grid": [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0],
    "profile": {"kind": "affine", "lower": [0.5, 0.5], "upper": [1.0, 1.0]},
    "mixing": {"kind": "hashed", "seed": 11},
    "phase": {"kind": "hashed", "seed": 12}
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let config = CampaignConfig::from_json(&text)?.with_env_seed()?;
    let report = run_campaign(&config, Execution::Parallel)?;
    println!("seed {}, {} trials, all passed: {}", report.seed, report.trials, report.all_passed);
    for c in &report.checks {
        println!(
            "{:<32} {:>6}/{:<6} worst relative slack {:+.2e}",
            c.check_id.name(),
            c.passes,
            c.trials,
            c.worst_relative_slack.unwrap_or(f64::NAN)
        );
    }
    let serial = run_campaign(&config, Execution::Serial)?;
    println!("serial and parallel reports identical: {}", serial.to_json() == report.to_json());
    Ok(())
}
