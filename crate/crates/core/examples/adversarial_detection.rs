//! A deliberately broken triple whose magnitude leaves the admissible band
//! while claiming full membership. The campaign flags it and shrinks each
//! failure to a small counterexample.

use ofip::verifier::{run_campaign, CampaignConfig, Execution};

const CONFIG: &str = r#"{
    "seed": 7, "trials": 100, "dims": [2, 3, 4], "field": "both",
    "alpha_grid": [0.25, 0.5, 0.75, 1.0],
    "profile": {"kind": "constant", "lower": 1.0, "upper": 2.0},
    "mixing": {"kind": "hashed", "seed": 5},
    "realization": {"kind": "out_of_band", "factor": 2.0}
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = run_campaign(&CampaignConfig::from_json(CONFIG)?, Execution::Parallel)?;
    println!("all passed: {}", report.all_passed);
    for c in report.failed_checks() {
        println!("FAIL {} ({}/{} passed)", c.check_id, c.passes, c.trials);
        if let Some(cx) = &c.counterexample {
            let i = &cx.shrunk.inputs;
            println!(
                "  trial {} shrunk in {} steps to alpha={} x={}{}  (lhs {:.4}, rhs {:.4})",
                cx.trial_index,
                cx.shrink_steps,
                i.alpha,
                i.x,
                i.y.as_ref().map(|y| format!(" y={y}")).unwrap_or_default(),
                cx.shrunk.lhs,
                cx.shrunk.rhs
            );
        }
    }
    Ok(())
}
