//! The closed-form fuzzy norm on ℝ²:
//!
//! ```text
//! ‖x‖_α = √(9α⁴u² + 5α²(1-α²)uv) + i·√(4(1-α²)²v² + 7α²(1-α²)uv),
//! u = ‖x‖₂, v = ‖x‖₃
//! ```
//!
//! whose magnitude is `3α²u + 2(1-α²)v`, a convex combination of the labels of
//! `[3‖x‖₂, 2‖x‖₃]_o`. The [`ExampleVariant::Verbatim`] form writes the last
//! radicand with `(1-α²)` instead of `(1-α²)²`; its magnitude then differs
//! from `3α²u + 2(1-α²)v` for every `α ∈ (0,1)` and `x ≠ 0`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{
    AlphaGrid, AlphaProfile, FuzzyNorm, Membership, NormSource, ProfileShape, StructureError,
};
use crate::classical::{ClassicalNorm, PNorm, Vector};
use crate::fuzzy_number::validate_level;
use crate::interval::OrderedInterval;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExampleVariant {
    /// Imaginary radicand `4(1-α²)²v² + 7α²(1-α²)uv`.
    #[default]
    Corrected,
    /// Imaginary radicand `4(1-α²)v² + 7α²(1-α²)uv`.
    Verbatim,
}

fn example_domain(x: &Vector) -> Result<(f64, f64), StructureError> {
    if x.dim() != 2 || !x.is_real() {
        return Err(StructureError::ExampleDomain {
            dim: x.dim(),
            field: x.field(),
        });
    }
    Ok((PNorm::Two.eval(x), PNorm::Three.eval(x)))
}

pub fn paper_example_norm(
    alpha: f64,
    x: &Vector,
    variant: ExampleVariant,
) -> Result<Complex64, StructureError> {
    validate_level(alpha)?;
    let (u, v) = example_domain(x)?;
    let a2 = alpha * alpha;
    let rest = 1.0 - a2;
    let re = (9.0 * a2 * a2 * u * u + 5.0 * a2 * rest * u * v).sqrt();
    let last = match variant {
        ExampleVariant::Corrected => 4.0 * rest * rest * v * v,
        ExampleVariant::Verbatim => 4.0 * rest * v * v,
    };
    let im = (last + 7.0 * a2 * rest * u * v).sqrt();
    Ok(Complex64::new(re, im))
}

/// `3α²‖x‖₂ + 2(1-α²)‖x‖₃`
pub fn example_magnitude_target(alpha: f64, x: &Vector) -> Result<f64, StructureError> {
    validate_level(alpha)?;
    let (u, v) = example_domain(x)?;
    let a2 = alpha * alpha;
    Ok(3.0 * a2 * u + 2.0 * (1.0 - a2) * v)
}

/// `[3‖x‖₂, 2‖x‖₃]_o`
pub fn example_band(x: &Vector) -> Result<OrderedInterval, StructureError> {
    let (u, v) = example_domain(x)?;
    Ok(OrderedInterval::new(3.0 * u, 2.0 * v)?)
}

/// Single-base constants for the example relative to `‖·‖₂`.
///
/// On ℝ², `2^{-1/6}‖x‖₂ <= ‖x‖₃ <= ‖x‖₂`, so the magnitude lies between
/// `C_α‖x‖₂` and `D_α‖x‖₂` with `C_α = 3α² + 2^{5/6}(1-α²)` and
/// `D_α = 3α² + 2(1-α²)`.
pub fn example_simplified_profile(grid: AlphaGrid) -> Result<AlphaProfile, StructureError> {
    let c0 = 2f64.powf(5.0 / 6.0);
    AlphaProfile::simplified(
        ProfileShape::AffineSquared {
            lower: [c0, 3.0 - c0],
            upper: [2.0, 1.0],
        },
        grid,
    )
}

impl FuzzyNorm {
    /// The example as a two-base triple: `C ≡ 3`, `D ≡ 2`,
    /// `‖·‖' = ‖·‖₂`, `‖·‖'' = ‖·‖₃`, with the indicator on
    /// `[3‖x‖₂, 2‖x‖₃]_o` as membership.
    pub fn worked_example(grid: AlphaGrid, variant: ExampleVariant) -> Result<Self, StructureError> {
        let profile = AlphaProfile::general(ProfileShape::Constant { lower: 3.0, upper: 2.0 }, grid)?;
        Ok(FuzzyNorm::from_parts(
            NormSource::Example { variant },
            ClassicalNorm::p(PNorm::Two),
            ClassicalNorm::p(PNorm::Three),
            profile,
            Membership::BandIndicator,
        ))
    }

    /// The (corrected) example in single-base form over `‖·‖₂`, see
    /// [`example_simplified_profile`].
    pub fn worked_example_simplified(grid: AlphaGrid) -> Result<Self, StructureError> {
        Ok(FuzzyNorm::from_parts(
            NormSource::Example {
                variant: ExampleVariant::Corrected,
            },
            ClassicalNorm::p(PNorm::Two),
            ClassicalNorm::p(PNorm::Two),
            example_simplified_profile(grid)?,
            Membership::BandIndicator,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::Field;

    fn rv(e: &[f64]) -> Vector {
        Vector::real(e).unwrap()
    }

    /// Independent route: |re + i·im| from the radicands by sqrt(re² + im²).
    fn magnitude_from_radicands(alpha: f64, u: f64, v: f64, verbatim: bool) -> f64 {
        let a2 = alpha * alpha;
        let r1 = 9.0 * a2 * a2 * u * u + 5.0 * a2 * (1.0 - a2) * u * v;
        let w = if verbatim { 1.0 - a2 } else { (1.0 - a2) * (1.0 - a2) };
        let r2 = 4.0 * w * v * v + 7.0 * a2 * (1.0 - a2) * u * v;
        (r1 + r2).sqrt()
    }

    #[test]
    fn examples_at_alpha_one() {
        let q = paper_example_norm(1.0, &rv(&[1.0, 0.0]), ExampleVariant::Corrected).unwrap();
        assert_eq!(q.norm(), 3.0);
        let q = paper_example_norm(1.0, &rv(&[3.0, 4.0]), ExampleVariant::Corrected).unwrap();
        assert_eq!(q.norm(), 15.0);
        assert_eq!(example_band(&rv(&[1.0, 0.0])).unwrap().labels(), (3.0, 2.0));
    }

    #[test]
    fn corrected_identity_and_verbatim_residual() {
        let x = rv(&[1.5, -2.0]);
        let u = PNorm::Two.eval(&x);
        let v = PNorm::Three.eval(&x);
        for alpha in [0.1, 0.35, 0.5, 0.9, 1.0] {
            let target = example_magnitude_target(alpha, &x).unwrap();
            let q = paper_example_norm(alpha, &x, ExampleVariant::Corrected).unwrap();
            assert!((q.norm() - target).abs() <= 1e-12 * (1.0 + u));
            assert!((magnitude_from_radicands(alpha, u, v, false) - target).abs() <= 1e-12 * (1.0 + u));
            assert!(example_band(&x).unwrap().contains(target));

            let verbatim = paper_example_norm(alpha, &x, ExampleVariant::Verbatim).unwrap().norm();
            assert!((verbatim - magnitude_from_radicands(alpha, u, v, true)).abs() < 1e-12 * (1.0 + u));
            if alpha < 1.0 {
                assert!((verbatim - target).abs() > 1e-6);
            }
        }
    }

    #[test]
    fn simplified_profile_brackets_magnitude() {
        let grid = AlphaGrid::uniform(10).unwrap();
        let n = FuzzyNorm::worked_example_simplified(grid.clone()).unwrap();
        assert!(n.is_simplified());
        for x in [rv(&[1.0, 1.0]), rv(&[1.0, 0.0]), rv(&[-3.0, 0.2]), rv(&[2.0, -2.0])] {
            for &alpha in grid.points() {
                let m = n.value(alpha, &x).unwrap().norm();
                let (c, d) = n.profile().bounds(alpha);
                let u = PNorm::Two.eval(&x);
                assert!(c * u <= m * (1.0 + 1e-14) && m <= d * u * (1.0 + 1e-14));
            }
        }
        assert_eq!(n.profile().bounds(1.0), (3.0, 3.0));
    }

    #[test]
    fn general_example_triple() {
        let grid = AlphaGrid::uniform(10).unwrap();
        let n = FuzzyNorm::worked_example(grid, ExampleVariant::Corrected).unwrap();
        assert!(!n.is_simplified());
        let out = n.defining_predicate(0.5, &rv(&[2.0, 1.0])).unwrap();
        assert!(out.in_band && out.holds);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            paper_example_norm(0.5, &rv(&[1.0, 2.0, 3.0]), ExampleVariant::Corrected),
            Err(StructureError::ExampleDomain { dim: 3, .. })
        ));
        let z = Vector::new(vec![Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0)]).unwrap();
        assert!(matches!(
            paper_example_norm(0.5, &z, ExampleVariant::Corrected),
            Err(StructureError::ExampleDomain { field: Field::Complex, .. })
        ));
        assert!(paper_example_norm(0.0, &rv(&[1.0, 2.0]), ExampleVariant::Corrected).is_err());
    }
}
