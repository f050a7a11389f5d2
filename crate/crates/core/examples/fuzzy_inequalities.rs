//! Individual checks on a simplified fuzzy inner product: the band, the
//! Cauchy-Schwarz, parallelogram and Bessel bounds, one quasi-linearity
//! item and the derived-norm properties.

use num_complex::Complex64;
use ofip::classical::{InnerProduct, OrthonormalSystem, Vector};
use ofip::structures::{AlphaGrid, AlphaProfile, FuzzyInnerProduct, MixingFunction, ProfileShape};
use ofip::verifier::{CheckRecord, Checker};

fn show(r: &CheckRecord) {
    let lower = r.lower.map(|l| format!("{l:.6} <= ")).unwrap_or_default();
    println!(
        "{:<22} {lower}{:.6} <= {:.6}  slack {:+.3e}  {}",
        r.check_id.name(),
        r.lhs,
        r.rhs,
        r.slack,
        if r.pass { "pass" } else { "FAIL" }
    );
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid = AlphaGrid::uniform(10)?;
    let profile = AlphaProfile::simplified(
        ProfileShape::Affine {
            lower: [0.5, 0.5],
            upper: [1.0, 1.0],
        },
        grid,
    )?;
    let fip = FuzzyInnerProduct::scaled(InnerProduct::Standard, profile, MixingFunction::hashed(3))?;
    let ch = Checker::default();
    let alpha = 0.3;
    let x = Vector::real(&[1.0, -2.0, 0.5])?;
    let y = Vector::new(vec![Complex64::new(0.0, 1.0), Complex64::new(2.0, 0.0), Complex64::new(-1.0, 1.0)])?;
    let k = Complex64::new(-1.5, 0.5);

    println!("⟨x,y⟩_α = {:.6}, band {}", fip.value(alpha, &x, &y)?, fip.band(alpha, &x, &y)?);
    show(&ch.check_band_containment(&fip, alpha, &x, &y)?);
    show(&ch.check_norm_bounds(&fip, alpha, &x)?);
    show(&ch.check_fuzzy_cauchy_schwarz(&fip, alpha, &x, &y)?);
    show(&ch.check_fuzzy_parallelogram(&fip, alpha, &x, &y)?);
    show(&ch.check_fuzzy_bessel(&fip, &OrthonormalSystem::canonical(3)?, &x, alpha, 2)?);
    show(&ch.check_quasi_linearity(&fip, 5, alpha, k, &x, &y, None)?);
    for r in ch.check_fuzzy_norm_properties(&fip.derive_norm(), alpha, k, &x, &y)? {
        show(&r);
    }
    Ok(())
}
