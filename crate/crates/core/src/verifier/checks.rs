use num_complex::Complex64;

use super::record::{CheckId, CheckInputs, CheckRecord};
use super::VerifyError;
use crate::classical::{OrthonormalSystem, Vector};
use crate::structures::{example_band, FuzzyInnerProduct, FuzzyNorm};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Largest accepted tolerance; boolean records must still fail above it.
pub const MAX_TOLERANCE: f64 = 0.1;

/// Evaluates statements on concrete instances and packages the outcome as
/// [`CheckRecord`]s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Checker {
    tolerance: f64,
}

impl Default for Checker {
    fn default() -> Self {
        Checker {
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

fn simplified(fip: &FuzzyInnerProduct) -> Result<(), VerifyError> {
    if fip.is_simplified() {
        Ok(())
    } else {
        Err(VerifyError::NotSimplified)
    }
}

fn simplified_norm(n: &FuzzyNorm) -> Result<(), VerifyError> {
    if n.is_simplified() {
        Ok(())
    } else {
        Err(VerifyError::NotSimplified)
    }
}

/// `|⟨u,v⟩_α|`
fn mag(fip: &FuzzyInnerProduct, alpha: f64, u: &Vector, v: &Vector) -> Result<f64, VerifyError> {
    Ok(fip.value(alpha, u, v)?.norm())
}

/// `|‖u‖_α²| = |⟨u,u⟩_α|` for the derived norm.
fn norm_sq(fip: &FuzzyInnerProduct, alpha: f64, u: &Vector) -> Result<f64, VerifyError> {
    mag(fip, alpha, u, u)
}

fn nmag(n: &FuzzyNorm, alpha: f64, u: &Vector) -> Result<f64, VerifyError> {
    Ok(n.value(alpha, u)?.norm())
}

impl Checker {
    pub fn new(tolerance: f64) -> Result<Self, VerifyError> {
        if !(0.0..=MAX_TOLERANCE).contains(&tolerance) {
            return Err(VerifyError::InvalidTolerance(tolerance));
        }
        Ok(Checker { tolerance })
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    fn one(&self, id: CheckId, inputs: CheckInputs, lhs: f64, rhs: f64) -> CheckRecord {
        CheckRecord::one_sided(id, inputs, lhs, rhs, self.tolerance)
    }

    fn two(&self, id: CheckId, inputs: CheckInputs, lower: f64, middle: f64, upper: f64) -> CheckRecord {
        CheckRecord::two_sided(id, inputs, lower, middle, upper, self.tolerance)
    }

    fn boolean(&self, id: CheckId, inputs: CheckInputs, holds: bool) -> CheckRecord {
        CheckRecord::boolean(id, inputs, holds, self.tolerance)
    }

    fn inputs(fip: &FuzzyInnerProduct, alpha: f64, x: &Vector) -> CheckInputs {
        CheckInputs::new(alpha, x, fip.profile().bounds(alpha)).mixing(fip.mixing())
    }

    /// `min(labels) <= |⟨x,y⟩_α| <= max(labels)` for the defining interval.
    pub fn check_band_containment(
        &self,
        fip: &FuzzyInnerProduct,
        alpha: f64,
        x: &Vector,
        y: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        let band = fip.band(alpha, x, y)?;
        let m = mag(fip, alpha, x, y)?;
        Ok(self.two(CheckId::BandContainment, Self::inputs(fip, alpha, x).y(y), band.min(), m, band.max()))
    }

    /// Agreement of the membership condition with interval containment.
    pub fn check_defining_predicate(
        &self,
        fip: &FuzzyInnerProduct,
        alpha: f64,
        x: &Vector,
        y: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        let outcome = fip.defining_predicate(alpha, x, y)?;
        Ok(self.boolean(CheckId::DefiningPredicate, Self::inputs(fip, alpha, x).y(y), outcome.holds))
    }

    /// `⟨x,y⟩_α = 0 ⇔ ⟨x,y⟩' = 0`, both sides compared exactly.
    pub fn check_orthogonality(
        &self,
        fip: &FuzzyInnerProduct,
        alpha: f64,
        x: &Vector,
        y: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        simplified(fip)?;
        let fuzzy_zero = fip.value(alpha, x, y)? == Complex64::new(0.0, 0.0);
        let base_zero = fip.base1().inner(x, y)? == Complex64::new(0.0, 0.0);
        Ok(self.boolean(CheckId::Orthogonality, Self::inputs(fip, alpha, x).y(y), fuzzy_zero == base_zero))
    }

    /// `|‖x‖_α²|/B_α <= ‖x‖'² <= |‖x‖_α²|/A_α`
    pub fn check_norm_bounds(
        &self,
        fip: &FuzzyInnerProduct,
        alpha: f64,
        x: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        simplified(fip)?;
        let (a, b) = fip.profile().bounds(alpha);
        let n2 = norm_sq(fip, alpha, x)?;
        let base = fip.base1().norm_sqr(x)?;
        Ok(self.two(CheckId::NormBounds, Self::inputs(fip, alpha, x), n2 / b, base, n2 / a))
    }

    /// `|⟨x,y⟩_α| <= (B_α/A_α)·|‖x‖_α‖y‖_α|`
    pub fn check_fuzzy_cauchy_schwarz(
        &self,
        fip: &FuzzyInnerProduct,
        alpha: f64,
        x: &Vector,
        y: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        simplified(fip)?;
        let r = fip.profile().ratio(alpha);
        let lhs = mag(fip, alpha, x, y)?;
        let rhs = r * (norm_sq(fip, alpha, x)? * norm_sq(fip, alpha, y)?).sqrt();
        Ok(self.one(CheckId::CauchySchwarz, Self::inputs(fip, alpha, x).y(y), lhs, rhs))
    }

    /// `(2A/B)(|‖x‖²|+|‖y‖²|) <= |‖x+y‖²| + |‖x-y‖²| <= (2B/A)(|‖x‖²|+|‖y‖²|)`
    pub fn check_fuzzy_parallelogram(
        &self,
        fip: &FuzzyInnerProduct,
        alpha: f64,
        x: &Vector,
        y: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        simplified(fip)?;
        let r = fip.profile().ratio(alpha);
        let sum = norm_sq(fip, alpha, x)? + norm_sq(fip, alpha, y)?;
        let middle = norm_sq(fip, alpha, &x.checked_add(y)?)? + norm_sq(fip, alpha, &x.checked_sub(y)?)?;
        Ok(self.two(
            CheckId::Parallelogram,
            Self::inputs(fip, alpha, x).y(y),
            2.0 / r * sum,
            middle,
            2.0 * r * sum,
        ))
    }

    /// `|‖x+y‖²| <= (B/A)(4|⟨x,y⟩_α| + |‖x-y‖²|)` on real vectors.
    pub fn check_fuzzy_polarization(
        &self,
        fip: &FuzzyInnerProduct,
        alpha: f64,
        x: &Vector,
        y: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        simplified(fip)?;
        if !(x.is_real() && y.is_real()) {
            return Err(VerifyError::ComplexField);
        }
        let r = fip.profile().ratio(alpha);
        let lhs = norm_sq(fip, alpha, &x.checked_add(y)?)?;
        let rhs = r * (4.0 * mag(fip, alpha, x, y)? + norm_sq(fip, alpha, &x.checked_sub(y)?)?);
        Ok(self.one(CheckId::Polarization, Self::inputs(fip, alpha, x).y(y), lhs, rhs))
    }

    /// `‖x+y‖'² <= 4|⟨x,y⟩'| + ‖x-y‖'²` on the base inner product.
    pub fn check_polarization_step(
        &self,
        fip: &FuzzyInnerProduct,
        alpha: f64,
        x: &Vector,
        y: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        let ip = fip.base1();
        let lhs = ip.norm_sqr(&x.checked_add(y)?)?;
        let rhs = 4.0 * ip.inner(x, y)?.norm() + ip.norm_sqr(&x.checked_sub(y)?)?;
        Ok(self.one(CheckId::PolarizationStep, Self::inputs(fip, alpha, x).y(y), lhs, rhs))
    }

    /// `Σ_{i<=N} |⟨x,e_i⟩_α|² <= (B²/A)|‖x‖_α²|`. The `(B/A)²|‖x‖_α|²`
    /// bound is attached as `variant_rhs`.
    pub fn check_fuzzy_bessel(
        &self,
        fip: &FuzzyInnerProduct,
        system: &OrthonormalSystem,
        x: &Vector,
        alpha: f64,
        n: usize,
    ) -> Result<CheckRecord, VerifyError> {
        simplified(fip)?;
        if system.base() != fip.base1() {
            return Err(VerifyError::SystemBaseMismatch);
        }
        if n > system.len() {
            return Err(VerifyError::Space(crate::classical::SpaceError::TruncationTooLong {
                requested: n,
                available: system.len(),
            }));
        }
        let (a, b) = fip.profile().bounds(alpha);
        let mut lhs = 0.0;
        for e in &system.vectors()[..n] {
            lhs += mag(fip, alpha, x, e)?.powi(2);
        }
        let n2 = norm_sq(fip, alpha, x)?;
        let variant = (b / a).powi(2) * n2;
        Ok(self
            .one(CheckId::Bessel, Self::inputs(fip, alpha, x).n(n), lhs, b * b / a * n2)
            .with_variant_rhs(variant))
    }

    /// Items `1..=12` of the zero-product and quasi-linearity statement.
    /// `z` is only read by items 11 and 12.
    #[allow(clippy::too_many_arguments)]
    pub fn check_quasi_linearity(
        &self,
        fip: &FuzzyInnerProduct,
        item: u8,
        alpha: f64,
        k: Complex64,
        x: &Vector,
        y: &Vector,
        z: Option<&Vector>,
    ) -> Result<CheckRecord, VerifyError> {
        if !(1..=12).contains(&item) {
            return Err(VerifyError::UnknownItem(item));
        }
        let inputs = Self::inputs(fip, alpha, x).y(y);
        match item {
            1 => {
                let zero = fip.value(alpha, x, x)? == Complex64::new(0.0, 0.0);
                Ok(self.boolean(CheckId::Quasi(1), inputs, zero == x.is_zero()))
            }
            2 => {
                let origin = Vector::zeros(x.dim())?;
                let zero = fip.value(alpha, &origin, y)? == Complex64::new(0.0, 0.0);
                Ok(self.boolean(CheckId::Quasi(2), inputs, zero))
            }
            _ => {
                simplified(fip)?;
                let r = fip.profile().ratio(alpha);
                self.quasi_item(fip, CheckId::Quasi(item), item, alpha, k, x, y, z, r, 1.0 / r, inputs)
            }
        }
    }

    /// Items `3..=12` with the per-level ratio replaced by the uniform `m`.
    #[allow(clippy::too_many_arguments)]
    pub fn check_global_bound_corollary(
        &self,
        fip: &FuzzyInnerProduct,
        m: f64,
        item: u8,
        alpha: f64,
        k: Complex64,
        x: &Vector,
        y: &Vector,
        z: Option<&Vector>,
    ) -> Result<CheckRecord, VerifyError> {
        if !(3..=12).contains(&item) {
            return Err(VerifyError::UnknownItem(item));
        }
        simplified(fip)?;
        let inputs = Self::inputs(fip, alpha, x).y(y).bound(m);
        self.quasi_item(fip, CheckId::GlobalQuasi(item), item, alpha, k, x, y, z, m, 1.0 / m, inputs)
    }

    /// Every corollary item `3..=12` for one instance.
    #[allow(clippy::too_many_arguments)]
    pub fn check_global_bound_corollaries(
        &self,
        fip: &FuzzyInnerProduct,
        m: f64,
        alpha: f64,
        k: Complex64,
        x: &Vector,
        y: &Vector,
        z: &Vector,
    ) -> Result<Vec<CheckRecord>, VerifyError> {
        (3..=12)
            .map(|item| self.check_global_bound_corollary(fip, m, item, alpha, k, x, y, Some(z)))
            .collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn quasi_item(
        &self,
        fip: &FuzzyInnerProduct,
        id: CheckId,
        item: u8,
        alpha: f64,
        k: Complex64,
        x: &Vector,
        y: &Vector,
        z: Option<&Vector>,
        r: f64,
        rho: f64,
        inputs: CheckInputs,
    ) -> Result<CheckRecord, VerifyError> {
        let f = |u: &Vector, v: &Vector| mag(fip, alpha, u, v);
        let kk = k.norm();
        let kx = x.scaled(k);
        let ky = y.scaled(k);
        let inputs = inputs.k(k);
        let two = |lo: f64, mid: f64, hi: f64| Ok(self.two(id, inputs.clone(), lo, mid, hi));
        match item {
            3 => {
                let base = f(x, y)?;
                two(kk * rho * base, f(&kx, y)?, kk * r * base)
            }
            4 => {
                let base = f(x, y)?;
                two(kk * rho * base, f(x, &ky)?, kk * r * base)
            }
            5 => {
                let base = f(y, x)?;
                two(kk * rho * base, f(&kx, y)?, kk * r * base)
            }
            6 => {
                let base = f(y, x)?;
                two(kk * rho * base, f(x, &y.scaled_real(kk))?, kk * r * base)
            }
            7 => {
                let base = f(x, &ky)?;
                two(rho * base, f(&kx, y)?, r * base)
            }
            8 => {
                let base = f(&kx, y)?;
                two(rho * base, f(x, &ky)?, r * base)
            }
            9 => {
                let base = f(&ky, x)?;
                two(rho * base, f(&kx, y)?, r * base)
            }
            10 => {
                let base = f(&ky, x)?;
                two(rho * base, f(x, &ky)?, r * base)
            }
            11 | 12 => {
                let z = z.ok_or(VerifyError::MissingInput("z"))?;
                let inputs = inputs.clone().z(z);
                let (lhs, rhs) = if item == 11 {
                    (f(&x.axpy(k, z)?, y)?, r * (kk * f(x, y)? + f(z, y)?))
                } else {
                    (f(x, &y.axpy(k, z)?)?, r * (kk * f(x, y)? + f(x, z)?))
                };
                Ok(self.one(id, inputs, lhs, rhs))
            }
            other => Err(VerifyError::UnknownItem(other)),
        }
    }

    fn norm_inputs(n: &FuzzyNorm, alpha: f64, x: &Vector) -> CheckInputs {
        let inputs = CheckInputs::new(alpha, x, n.profile().bounds(alpha));
        match n.source() {
            crate::structures::NormSource::Derived(fip) => inputs.mixing(fip.mixing()),
            crate::structures::NormSource::Example { .. } => inputs,
        }
    }

    /// Definiteness, quasi-triangle and two-sided quasi-homogeneity, in that
    /// order.
    pub fn check_fuzzy_norm_properties(
        &self,
        n: &FuzzyNorm,
        alpha: f64,
        k: Complex64,
        x: &Vector,
        y: &Vector,
    ) -> Result<[CheckRecord; 3], VerifyError> {
        simplified_norm(n)?;
        let r = n.profile().ratio(alpha);
        self.norm_family(n, alpha, k, x, y, r, 1.0 / r, None)
    }

    /// Quasi-triangle and quasi-homogeneity with the uniform constant `l`.
    pub fn check_global_norm_corollaries(
        &self,
        n: &FuzzyNorm,
        l: f64,
        alpha: f64,
        k: Complex64,
        x: &Vector,
        y: &Vector,
    ) -> Result<[CheckRecord; 2], VerifyError> {
        simplified_norm(n)?;
        let [_, tri, hom] = self.norm_family(n, alpha, k, x, y, l, 1.0 / l, Some(l))?;
        Ok([tri.relabel(CheckId::GlobalNormTriangle), hom.relabel(CheckId::GlobalNormHomogeneity)])
    }

    #[allow(clippy::too_many_arguments)]
    fn norm_family(
        &self,
        n: &FuzzyNorm,
        alpha: f64,
        k: Complex64,
        x: &Vector,
        y: &Vector,
        r: f64,
        rho: f64,
        bound: Option<f64>,
    ) -> Result<[CheckRecord; 3], VerifyError> {
        let mut inputs = Self::norm_inputs(n, alpha, x).y(y).k(k);
        if let Some(l) = bound {
            inputs = inputs.bound(l);
        }
        let kk = k.norm();
        let nx = nmag(n, alpha, x)?;
        let definite = self.boolean(CheckId::NormDefiniteness, inputs.clone(), (nx == 0.0) == x.is_zero());
        let triangle = self.one(
            CheckId::NormTriangle,
            inputs.clone(),
            nmag(n, alpha, &x.axpy(k, y)?)?,
            r * (kk * nx + nmag(n, alpha, y)?),
        );
        let homogeneity = self.two(
            CheckId::NormHomogeneity,
            inputs,
            kk * rho * nx,
            nmag(n, alpha, &x.scaled(k))?,
            kk * r * nx,
        );
        Ok([definite, triangle, homogeneity])
    }

    /// `(A_{α1}/B_{α2})|⟨x,y⟩_{α2}| <= |⟨x,y⟩_{α1}| <= (B_{α1}/A_{α2})|⟨x,y⟩_{α2}|`
    pub fn check_cross_alpha(
        &self,
        fip: &FuzzyInnerProduct,
        alpha1: f64,
        alpha2: f64,
        x: &Vector,
        y: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        simplified(fip)?;
        let (a1, b1) = fip.profile().bounds(alpha1);
        let (a2, b2) = fip.profile().bounds(alpha2);
        let at2 = mag(fip, alpha2, x, y)?;
        let inputs = Self::inputs(fip, alpha1, x).y(y).alpha2(alpha2, (a2, b2));
        Ok(self.two(CheckId::CrossAlpha, inputs, a1 / b2 * at2, mag(fip, alpha1, x, y)?, b1 / a2 * at2))
    }

    /// `(A_{α1}/N_{α2})|⟨x,y⟩'_{α2}| <= |⟨x,y⟩_{α1}| <= (B_{α1}/M_{α2})|⟨x,y⟩'_{α2}|`
    /// where `companion` has constants `(M, N)` over the same base.
    pub fn check_cross_alpha_pair(
        &self,
        fip: &FuzzyInnerProduct,
        companion: &FuzzyInnerProduct,
        alpha1: f64,
        alpha2: f64,
        x: &Vector,
        y: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        simplified(fip)?;
        simplified(companion)?;
        if fip.base1() != companion.base1() {
            return Err(VerifyError::MismatchedBases);
        }
        let (a1, b1) = fip.profile().bounds(alpha1);
        let (m2, n2) = companion.profile().bounds(alpha2);
        let at2 = mag(companion, alpha2, x, y)?;
        let inputs = Self::inputs(fip, alpha1, x).y(y).alpha2(alpha2, (m2, n2));
        Ok(self.two(CheckId::CrossAlphaPair, inputs, a1 / n2 * at2, mag(fip, alpha1, x, y)?, b1 / m2 * at2))
    }

    /// `(C_{α1}/D_{α2})|‖x‖_{α2}| <= |‖x‖_{α1}| <= (D_{α1}/C_{α2})|‖x‖_{α2}|`
    pub fn check_cross_alpha_norm(
        &self,
        n: &FuzzyNorm,
        alpha1: f64,
        alpha2: f64,
        x: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        simplified_norm(n)?;
        let (c1, d1) = n.profile().bounds(alpha1);
        let (c2, d2) = n.profile().bounds(alpha2);
        let at2 = nmag(n, alpha2, x)?;
        let inputs = Self::norm_inputs(n, alpha1, x).alpha2(alpha2, (c2, d2));
        Ok(self.two(CheckId::CrossAlphaNorm, inputs, c1 / d2 * at2, nmag(n, alpha1, x)?, d1 / c2 * at2))
    }

    /// `(C_{α1}/N_{α2})|‖x‖'_{α2}| <= |‖x‖_{α1}| <= (D_{α1}/M_{α2})|‖x‖'_{α2}|`
    pub fn check_cross_alpha_norm_pair(
        &self,
        n: &FuzzyNorm,
        companion: &FuzzyNorm,
        alpha1: f64,
        alpha2: f64,
        x: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        simplified_norm(n)?;
        simplified_norm(companion)?;
        if n.base1() != companion.base1() {
            return Err(VerifyError::MismatchedBases);
        }
        let (c1, d1) = n.profile().bounds(alpha1);
        let (m2, n2) = companion.profile().bounds(alpha2);
        let at2 = nmag(companion, alpha2, x)?;
        let inputs = Self::norm_inputs(n, alpha1, x).alpha2(alpha2, (m2, n2));
        Ok(self.two(
            CheckId::CrossAlphaNormPair,
            inputs,
            c1 / n2 * at2,
            nmag(n, alpha1, x)?,
            d1 / m2 * at2,
        ))
    }

    /// `min(3‖x‖₂, 2‖x‖₃) <= |‖x‖_α| <= max(3‖x‖₂, 2‖x‖₃)` for the closed-form
    /// ℝ² norm, with a general-form triple `n`.
    pub fn check_example_containment(
        &self,
        n: &FuzzyNorm,
        alpha: f64,
        x: &Vector,
    ) -> Result<CheckRecord, VerifyError> {
        let band = example_band(x)?;
        let m = nmag(n, alpha, x)?;
        Ok(self.two(
            CheckId::ExampleContainment,
            Self::norm_inputs(n, alpha, x),
            band.min(),
            m,
            band.max(),
        ))
    }
}
