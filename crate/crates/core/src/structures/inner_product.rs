use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{
    AlphaProfile, FuzzyNorm, Membership, MixingFunction, NormSource, PredicateOutcome, StructureError,
};
use crate::classical::{ClassicalNorm, InnerProduct, Vector};
use crate::fuzzy_number::validate_level;
use crate::interval::OrderedInterval;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Realization {
    /// `[A_α + t(B_α - A_α)] · e^{iφ} · ⟨x,y⟩'`
    Scaled,
    /// Magnitude `(1-t)·A_α|⟨x,y⟩'| + t·B_α|⟨x,y⟩''|`, a convex combination of
    /// the two endpoint labels.
    General,
    /// `factor · B_α · e^{iφ} · ⟨x,y⟩'`: deliberately outside the band for
    /// `factor > 1`. Used to measure the detection power of the checks.
    OutOfBand { factor: f64 },
}

/// A fuzzy inner-product triple `(⟨·,·⟩_α, ⟨·,·⟩', ⟨·,·⟩'')`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzyInnerProduct {
    base1: InnerProduct,
    base2: InnerProduct,
    profile: AlphaProfile,
    mixing: MixingFunction,
    realization: Realization,
    membership: Membership,
}

impl FuzzyInnerProduct {
    /// The single-base realization with ordered constants `0 < A_α <= B_α`.
    pub fn scaled(
        base: InnerProduct,
        profile: AlphaProfile,
        mixing: MixingFunction,
    ) -> Result<Self, StructureError> {
        if !profile.is_ordered() {
            return Err(StructureError::NotSimplified);
        }
        mixing.validate()?;
        Ok(FuzzyInnerProduct {
            base1: base.clone(),
            base2: base,
            profile,
            mixing,
            realization: Realization::Scaled,
            membership: Membership::BandIndicator,
        })
    }

    /// The two-base realization with possibly unordered endpoint labels.
    pub fn general(
        base1: InnerProduct,
        base2: InnerProduct,
        profile: AlphaProfile,
        mixing: MixingFunction,
    ) -> Result<Self, StructureError> {
        if let (Some(d1), Some(d2)) = (base1.dim(), base2.dim()) {
            if d1 != d2 {
                return Err(StructureError::BaseDimensionMismatch(d1, d2));
            }
        }
        mixing.validate()?;
        Ok(FuzzyInnerProduct {
            base1,
            base2,
            profile,
            mixing,
            realization: Realization::General,
            membership: Membership::BandIndicator,
        })
    }

    /// A triple whose magnitude is `factor·B_α|⟨x,y⟩'|` while asserting full
    /// membership at every level. For `factor > 1` it violates the defining
    /// condition at every non-orthogonal pair.
    pub fn out_of_band(
        base: InnerProduct,
        profile: AlphaProfile,
        mixing: MixingFunction,
        factor: f64,
    ) -> Result<Self, StructureError> {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(StructureError::InvalidFactor(factor));
        }
        let mut fip = Self::scaled(base, profile, mixing)?;
        fip.realization = Realization::OutOfBand { factor };
        fip.membership = Membership::full();
        Ok(fip)
    }

    pub fn with_mixing(&self, mixing: MixingFunction) -> Self {
        FuzzyInnerProduct {
            mixing,
            ..self.clone()
        }
    }

    pub fn with_membership(&self, membership: Membership) -> Self {
        FuzzyInnerProduct {
            membership,
            ..self.clone()
        }
    }

    pub fn base1(&self) -> &InnerProduct {
        &self.base1
    }

    pub fn base2(&self) -> &InnerProduct {
        &self.base2
    }

    pub fn profile(&self) -> &AlphaProfile {
        &self.profile
    }

    pub fn mixing(&self) -> &MixingFunction {
        &self.mixing
    }

    pub fn realization(&self) -> Realization {
        self.realization
    }

    pub fn membership(&self) -> &Membership {
        &self.membership
    }

    /// One base inner product and `A_α <= B_α` on the grid.
    pub fn is_simplified(&self) -> bool {
        self.base1 == self.base2 && self.profile.is_ordered()
    }

    pub fn value(&self, alpha: f64, x: &Vector, y: &Vector) -> Result<Complex64, StructureError> {
        validate_level(alpha)?;
        let (a, b) = self.profile.bounds(alpha);
        let t = self.mixing.t_at(alpha, x, y);
        let rotation = Complex64::from_polar(1.0, self.mixing.phase_at(alpha, x, y));
        let ip1 = self.base1.inner(x, y)?;
        Ok(match self.realization {
            Realization::Scaled => rotation * ip1 * (a + t * (b - a)),
            Realization::OutOfBand { factor } => rotation * ip1 * (factor * b),
            Realization::General => {
                let ip2 = self.base2.inner(x, y)?;
                let modulus = (1.0 - t) * a * ip1.norm() + t * b * ip2.norm();
                let direction = [ip1, ip2]
                    .into_iter()
                    .find(|z| z.norm() > 0.0)
                    .map(|z| z / z.norm())
                    .unwrap_or(Complex64::new(1.0, 0.0));
                rotation * direction * modulus
            }
        })
    }

    /// `√⟨x,x⟩_α` on the principal branch; agrees with [`derive_norm`](Self::derive_norm).
    pub fn norm_value(&self, alpha: f64, x: &Vector) -> Result<Complex64, StructureError> {
        Ok(self.value(alpha, x, x)?.sqrt())
    }

    /// The defining ordered interval `[A_α|⟨x,y⟩'|, B_α|⟨x,y⟩''|]_o`.
    pub fn band(&self, alpha: f64, x: &Vector, y: &Vector) -> Result<OrderedInterval, StructureError> {
        validate_level(alpha)?;
        let (a, b) = self.profile.bounds(alpha);
        let lo = a * self.base1.inner(x, y)?.norm();
        let hi = b * self.base2.inner(x, y)?.norm();
        Ok(OrderedInterval::new(lo, hi)?)
    }

    pub fn defining_predicate(
        &self,
        alpha: f64,
        x: &Vector,
        y: &Vector,
    ) -> Result<PredicateOutcome, StructureError> {
        let magnitude = self.value(alpha, x, y)?.norm();
        let band = self.band(alpha, x, y)?;
        PredicateOutcome::evaluate(alpha, magnitude, band, &self.membership)
    }

    /// `‖x‖_α = √⟨x,x⟩_α` with base norms induced by the base inner products
    /// and constants `(√A_α, √B_α)`.
    pub fn derive_norm(&self) -> FuzzyNorm {
        FuzzyNorm::from_parts(
            NormSource::Derived(Box::new(self.clone())),
            ClassicalNorm::induced(self.base1.clone()),
            ClassicalNorm::induced(self.base2.clone()),
            self.profile.sqrt(),
            self.membership.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{AlphaGrid, Mixing, Phase, ProfileShape};

    fn rv(e: &[f64]) -> Vector {
        Vector::real(e).unwrap()
    }

    fn grid() -> AlphaGrid {
        AlphaGrid::uniform(10).unwrap()
    }

    fn fip(lower: f64, upper: f64, t: f64) -> FuzzyInnerProduct {
        FuzzyInnerProduct::scaled(
            InnerProduct::Standard,
            AlphaProfile::constant(lower, upper, grid()).unwrap(),
            MixingFunction::constant(t).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn scaled_examples() {
        let (x, y) = (rv(&[1.0, 2.0]), rv(&[3.0, 4.0]));
        assert_eq!(fip(1.0, 2.0, 0.0).value(0.5, &x, &y).unwrap(), Complex64::new(11.0, 0.0));
        assert_eq!(fip(1.0, 2.0, 1.0).value(0.5, &x, &y).unwrap(), Complex64::new(22.0, 0.0));
        let crisp = fip(1.0, 1.0, 0.7).with_mixing(MixingFunction::hashed(4));
        assert!((crisp.value(0.3, &x, &y).unwrap().norm() - 11.0).abs() < 1e-13);
    }

    #[test]
    fn scaled_rejects_disordered_profile() {
        let general =
            AlphaProfile::general(ProfileShape::Constant { lower: 3.0, upper: 1.0 }, grid()).unwrap();
        let err = FuzzyInnerProduct::scaled(
            InnerProduct::Standard,
            general,
            MixingFunction::constant(0.0).unwrap(),
        )
        .unwrap_err();
        assert_eq!(err, StructureError::NotSimplified);
    }

    #[test]
    fn general_form_endpoints() {
        let base2 = InnerProduct::weighted(vec![4.0, 4.0]).unwrap();
        let profile =
            AlphaProfile::general(ProfileShape::Constant { lower: 3.0, upper: 1.0 }, grid()).unwrap();
        let x = rv(&[1.0, 0.0]);
        for t in [0.0, 0.25, 0.5, 1.0] {
            let g = FuzzyInnerProduct::general(
                InnerProduct::Standard,
                base2.clone(),
                profile.clone(),
                MixingFunction::constant(t).unwrap(),
            )
            .unwrap();
            let v = g.value(0.5, &x, &x).unwrap().norm();
            assert!((3.0..=4.0).contains(&v));
            let band = g.band(0.5, &x, &x).unwrap();
            assert_eq!(band.labels(), (3.0, 4.0));
            assert!(g.defining_predicate(0.5, &x, &x).unwrap().holds);
            if t == 0.0 {
                assert_eq!(v, 3.0);
            }
            if t == 1.0 {
                assert_eq!(v, 4.0);
            }
        }
        // unordered labels: weights 2 give endpoints 3 and 2
        let g = FuzzyInnerProduct::general(
            InnerProduct::Standard,
            InnerProduct::weighted(vec![2.0, 2.0]).unwrap(),
            profile.clone(),
            MixingFunction::constant(0.5).unwrap(),
        )
        .unwrap();
        let out = g.defining_predicate(1.0, &x, &x).unwrap();
        assert_eq!(out.band.labels(), (3.0, 2.0));
        assert!(out.in_band && out.holds);
        assert_eq!(out.magnitude, 2.5);
    }

    #[test]
    fn general_rejects_dimension_mismatch() {
        let err = FuzzyInnerProduct::general(
            InnerProduct::weighted(vec![1.0, 2.0]).unwrap(),
            InnerProduct::weighted(vec![1.0, 2.0, 3.0]).unwrap(),
            AlphaProfile::constant(1.0, 2.0, grid()).unwrap(),
            MixingFunction::constant(0.0).unwrap(),
        )
        .unwrap_err();
        assert_eq!(err, StructureError::BaseDimensionMismatch(2, 3));
    }

    #[test]
    fn predicate_on_scaled_realizations() {
        let f = fip(1.0, 2.0, 1.0).with_mixing(MixingFunction::hashed(11));
        let x = rv(&[1.0, -2.0, 0.5]);
        let y = rv(&[0.3, 4.0, 1.0]);
        assert!(f.defining_predicate(0.4, &x, &y).unwrap().holds);
        let zero = rv(&[0.0, 0.0, 0.0]);
        let out = f.defining_predicate(0.4, &zero, &y).unwrap();
        assert_eq!(out.magnitude, 0.0);
        assert_eq!(out.band, OrderedInterval::ZERO);
        assert!(out.holds);
    }

    #[test]
    fn predicate_detects_out_of_band_triple() {
        let bad = FuzzyInnerProduct::out_of_band(
            InnerProduct::Standard,
            AlphaProfile::constant(1.0, 2.0, grid()).unwrap(),
            MixingFunction::constant(0.0).unwrap(),
            2.0,
        )
        .unwrap();
        let (x, y) = (rv(&[1.0, 2.0]), rv(&[3.0, 4.0]));
        assert_eq!(bad.value(0.5, &x, &y).unwrap().norm(), 44.0);
        let out = bad.defining_predicate(0.5, &x, &y).unwrap();
        assert!(!out.in_band);
        assert_eq!(out.grade, 1.0);
        assert!(!out.holds);
        // orthogonal pairs are indistinguishable from an honest triple
        assert!(bad.defining_predicate(0.5, &rv(&[1.0, 0.0]), &rv(&[0.0, 1.0])).unwrap().holds);
        assert!(FuzzyInnerProduct::out_of_band(
            InnerProduct::Standard,
            AlphaProfile::constant(1.0, 2.0, grid()).unwrap(),
            MixingFunction::constant(0.0).unwrap(),
            f64::NAN,
        )
        .is_err());
    }

    #[test]
    fn orthogonality_and_zero() {
        let f = fip(0.5, 3.0, 0.3).with_mixing(MixingFunction {
            t: Mixing::Hashed { seed: 2 },
            phase: Phase::Hashed { seed: 9 },
        });
        let x = rv(&[1.0, 1.0]);
        let y = rv(&[1.0, -1.0]);
        assert_eq!(f.value(0.7, &x, &y).unwrap(), Complex64::new(0.0, 0.0));
        assert_ne!(f.value(0.7, &x, &x).unwrap(), Complex64::new(0.0, 0.0));
        let zero = rv(&[0.0, 0.0]);
        assert_eq!(f.value(0.7, &zero, &zero).unwrap().norm(), 0.0);
        assert_eq!(f.value(0.7, &zero, &y).unwrap().norm(), 0.0);
    }

    #[test]
    fn constant_mixing_is_homogeneous() {
        let f = fip(1.0, 2.0, 0.5);
        let (x, y) = (rv(&[1.0, 2.0]), rv(&[3.0, -4.0]));
        let k = Complex64::new(0.0, -1.0);
        let lhs = f.value(0.3, &x.scaled(k), &y).unwrap().norm();
        assert_eq!(lhs, f.value(0.3, &x, &y).unwrap().norm());
        let lhs = f.value(0.3, &x.scaled_real(1048576.0), &y).unwrap().norm();
        assert_eq!(lhs, 1048576.0 * f.value(0.3, &x, &y).unwrap().norm());
    }

    #[test]
    fn derived_norm_examples() {
        let crisp = fip(1.0, 1.0, 0.0).derive_norm();
        assert_eq!(crisp.value(0.5, &rv(&[3.0, 4.0])).unwrap().norm(), 5.0);
        let n = fip(1.0, 4.0, 1.0).derive_norm();
        assert_eq!(n.value(0.5, &rv(&[1.0, 0.0])).unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(n.value(0.5, &rv(&[0.0, 0.0])).unwrap().norm(), 0.0);
        assert_eq!(n.profile().bounds(0.5), (1.0, 2.0));
    }

    #[test]
    fn invalid_level() {
        let f = fip(1.0, 2.0, 0.0);
        let x = rv(&[1.0]);
        assert!(matches!(f.value(0.0, &x, &x), Err(StructureError::Level(_))));
        assert!(f.value(1.01, &x, &x).is_err());
    }
}
