//! The two-base fuzzy norm on ℝ² built from ‖·‖₂ and ‖·‖₃: corrected and
//! verbatim values, the magnitude identity and band containment.
//!
//! `cargo run --example example_norm -- 0.5 3 4`

use ofip::classical::Vector;
use ofip::structures::{example_band, example_magnitude_target, paper_example_norm, ExampleVariant};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (alpha, x) = match args.as_slice() {
        [a, x1, x2] => (*a, Vector::real(&[*x1, *x2])?),
        _ => (0.5, Vector::real(&[3.0, 4.0])?),
    };
    let band = example_band(&x)?;
    let target = example_magnitude_target(alpha, &x)?;
    println!("α = {alpha}, x = {x}, band {band}");
    for variant in [ExampleVariant::Corrected, ExampleVariant::Verbatim] {
        let v = paper_example_norm(alpha, &x, variant)?;
        println!(
            "{variant:?}: value {v:.6}, magnitude {:.12}, target {target:.12}, in band {}",
            v.norm(),
            band.contains(v.norm())
        );
    }
    Ok(())
}
