//! Finite-dimensional inner-product spaces over ℝ or ℂ.
//!
//! Inner products are conjugate-linear in the second argument,
//! `⟨x,y⟩ = Σ w_k x_k conj(y_k)`, so `⟨rx,y⟩ = r⟨x,y⟩`.
//!
//! The classical results used as oracles by the verifier (Cauchy–Schwarz,
//! parallelogram rule, real polarization identity, Bessel's inequality) are
//! evaluated by [`classical_oracles`].

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Orthonormality tolerance for [`OrthonormalSystem`].
pub const ORTHONORMAL_TOL: f64 = 1e-10;
/// Residual threshold below which Gram–Schmidt reports a dependent input.
pub const DEPENDENCE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpaceError {
    #[error("vectors must have at least one entry")]
    EmptyVector,
    #[error("vector entries must be finite")]
    NonFinite,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("inner-product weights must be finite and strictly positive")]
    InvalidWeights,
    #[error("unsupported p-norm exponent {0}; expected 1, 2, 3 or infinity")]
    UnsupportedNorm(f64),
    #[error("vector at position {position} is linearly dependent on its predecessors")]
    DependentInput { position: usize },
    #[error("system is not orthonormal at pair ({i},{j}): ⟨e_i,e_j⟩ = {value}")]
    NotOrthonormal { i: usize, j: usize, value: Complex64 },
    #[error("requested {requested} terms from a system of {available} vectors")]
    TruncationTooLong { requested: usize, available: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    BasisIndex { index: usize, dim: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    Real,
    Complex,
}

/// A dense vector with finite complex entries.
///
/// Serialized as a list of `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector(Vec<Complex64>);

impl Vector {
    pub fn new(entries: Vec<Complex64>) -> Result<Self, SpaceError> {
        if entries.is_empty() {
            return Err(SpaceError::EmptyVector);
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(SpaceError::NonFinite);
        }
        Ok(Vector(entries))
    }

    pub fn real(entries: &[f64]) -> Result<Self, SpaceError> {
        Self::new(entries.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    pub fn zeros(dim: usize) -> Result<Self, SpaceError> {
        Self::new(vec![Complex64::new(0.0, 0.0); dim])
    }

    /// The canonical basis vector `e_index` (0-based) of `dim` entries.
    pub fn basis(dim: usize, index: usize) -> Result<Self, SpaceError> {
        if index >= dim {
            return Err(SpaceError::BasisIndex { index, dim });
        }
        let mut v = Self::zeros(dim)?;
        v.0[index] = Complex64::new(1.0, 0.0);
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.0
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(|z| z.im == 0.0)
    }

    pub fn field(&self) -> Field {
        if self.is_real() {
            Field::Real
        } else {
            Field::Complex
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scaled(&self, k: Complex64) -> Vector {
        Vector(self.0.iter().map(|z| k * z).collect())
    }

    pub fn scaled_real(&self, k: f64) -> Vector {
        Vector(self.0.iter().map(|z| z * k).collect())
    }

    pub fn checked_add(&self, other: &Vector) -> Result<Vector, SpaceError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Vector) -> Result<Vector, SpaceError> {
        self.zip_with(other, |a, b| a - b)
    }

    /// `k·self + other`
    pub fn axpy(&self, k: Complex64, other: &Vector) -> Result<Vector, SpaceError> {
        self.zip_with(other, |a, b| k * a + b)
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Vector {
        Vector(self.0.iter().map(|&z| f(z)).collect())
    }

    pub fn with_entry(&self, index: usize, value: Complex64) -> Vector {
        let mut v = self.clone();
        v.0[index] = value;
        v
    }

    fn zip_with(
        &self,
        other: &Vector,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<Vector, SpaceError> {
        ensure_same_dim(self.dim(), other.dim())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(&a, &b)| f(a, b)).collect()))
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, z) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if z.im == 0.0 {
                write!(f, "{}", z.re)?;
            } else {
                write!(f, "{}", z)?;
            }
        }
        f.write_str(")")
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.0.iter().map(|z| [z.re, z.im]).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs = Vec::<[f64; 2]>::deserialize(d)?;
        Vector::new(pairs.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
            .map_err(serde::de::Error::custom)
    }
}

fn ensure_same_dim(left: usize, right: usize) -> Result<(), SpaceError> {
    if left == right {
        Ok(())
    } else {
        Err(SpaceError::DimensionMismatch { left, right })
    }
}

/// A classical inner product on `ℂⁿ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InnerProduct {
    /// `Σ x_k conj(y_k)` in any dimension.
    Standard,
    /// `Σ w_k x_k conj(y_k)` with strictly positive weights; fixes the dimension.
    Weighted { weights: Vec<f64> },
}

impl InnerProduct {
    pub fn weighted(weights: Vec<f64>) -> Result<Self, SpaceError> {
        if weights.is_empty() || weights.iter().any(|w| !w.is_finite() || *w <= 0.0) {
            return Err(SpaceError::InvalidWeights);
        }
        Ok(InnerProduct::Weighted { weights })
    }

    /// The dimension this inner product is pinned to, if any.
    pub fn dim(&self) -> Option<usize> {
        match self {
            InnerProduct::Standard => None,
            InnerProduct::Weighted { weights } => Some(weights.len()),
        }
    }

    pub fn inner(&self, x: &Vector, y: &Vector) -> Result<Complex64, SpaceError> {
        ensure_same_dim(x.dim(), y.dim())?;
        let pairs = x.entries().iter().zip(y.entries());
        match self {
            InnerProduct::Standard => Ok(pairs.map(|(a, b)| a * b.conj()).sum()),
            InnerProduct::Weighted { weights } => {
                ensure_same_dim(weights.len(), x.dim())?;
                Ok(pairs.zip(weights).map(|((a, b), w)| a * b.conj() * w).sum())
            }
        }
    }

    /// `⟨x,x⟩`, real and non-negative.
    pub fn norm_sqr(&self, x: &Vector) -> Result<f64, SpaceError> {
        match self {
            InnerProduct::Standard => Ok(x.entries().iter().map(|z| z.norm_sqr()).sum()),
            InnerProduct::Weighted { weights } => {
                ensure_same_dim(weights.len(), x.dim())?;
                Ok(x.entries().iter().zip(weights).map(|(z, w)| w * z.norm_sqr()).sum())
            }
        }
    }

    /// The induced norm `√⟨x,x⟩`.
    pub fn norm(&self, x: &Vector) -> Result<f64, SpaceError> {
        self.norm_sqr(x).map(f64::sqrt)
    }

    /// `Σ w_k |x_k||y_k|`, the magnitude scale of the terms summed by [`inner`](Self::inner).
    pub fn term_scale(&self, x: &Vector, y: &Vector) -> Result<f64, SpaceError> {
        ensure_same_dim(x.dim(), y.dim())?;
        let pairs = x.entries().iter().zip(y.entries());
        Ok(match self {
            InnerProduct::Standard => pairs.map(|(a, b)| a.norm() * b.norm()).sum(),
            InnerProduct::Weighted { weights } => {
                pairs.zip(weights).map(|((a, b), w)| w * a.norm() * b.norm()).sum()
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PNorm {
    One,
    Two,
    Three,
    Infinity,
}

impl PNorm {
    pub fn from_exponent(p: f64) -> Result<Self, SpaceError> {
        match p {
            1.0 => Ok(PNorm::One),
            2.0 => Ok(PNorm::Two),
            3.0 => Ok(PNorm::Three),
            f64::INFINITY => Ok(PNorm::Infinity),
            p => Err(SpaceError::UnsupportedNorm(p)),
        }
    }

    pub fn eval(self, x: &Vector) -> f64 {
        let abs = x.entries().iter().map(|z| z.norm());
        match self {
            PNorm::One => abs.sum(),
            PNorm::Two => abs.map(|a| a * a).sum::<f64>().sqrt(),
            PNorm::Three => abs.map(|a| a * a * a).sum::<f64>().cbrt(),
            PNorm::Infinity => abs.fold(0.0, f64::max),
        }
    }
}

/// `‖x‖_p` for `p ∈ {1, 2, 3, ∞}`.
pub fn p_norm(x: &Vector, p: f64) -> Result<f64, SpaceError> {
    Ok(PNorm::from_exponent(p)?.eval(x))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassicalNorm {
    Induced { inner: InnerProduct },
    P { p: PNorm },
}

impl ClassicalNorm {
    pub fn induced(inner: InnerProduct) -> Self {
        ClassicalNorm::Induced { inner }
    }

    pub fn p(p: PNorm) -> Self {
        ClassicalNorm::P { p }
    }

    pub fn eval(&self, x: &Vector) -> Result<f64, SpaceError> {
        match self {
            ClassicalNorm::Induced { inner } => inner.norm(x),
            ClassicalNorm::P { p } => Ok(p.eval(x)),
        }
    }
}

/// A finite orthonormal sequence `e_1..e_N` with respect to `base`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthonormalSystem {
    vectors: Vec<Vector>,
    base: InnerProduct,
}

impl OrthonormalSystem {
    /// Validates `|⟨e_i,e_j⟩ - δ_ij| <= 1e-10` for every pair.
    pub fn new(vectors: Vec<Vector>, base: InnerProduct) -> Result<Self, SpaceError> {
        for (i, ei) in vectors.iter().enumerate() {
            for (j, ej) in vectors.iter().enumerate().skip(i) {
                let value = base.inner(ei, ej)?;
                let target = if i == j { 1.0 } else { 0.0 };
                if (value - target).norm() > ORTHONORMAL_TOL {
                    return Err(SpaceError::NotOrthonormal { i, j, value });
                }
            }
        }
        Ok(OrthonormalSystem { vectors, base })
    }

    /// The canonical basis of ℂⁿ, orthonormal under [`InnerProduct::Standard`].
    pub fn canonical(dim: usize) -> Result<Self, SpaceError> {
        let vectors = (0..dim).map(|i| Vector::basis(dim, i)).collect::<Result<_, _>>()?;
        Self::new(vectors, InnerProduct::Standard)
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn base(&self) -> &InnerProduct {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Orthonormalizes `vs` under `ip` (modified Gram–Schmidt with one
/// re-orthogonalization pass). Fails with the 1-based position of the first
/// vector whose residual falls below `1e-12·(1 + ‖v‖)`.
pub fn gram_schmidt(vs: &[Vector], ip: &InnerProduct) -> Result<OrthonormalSystem, SpaceError> {
    let mut out: Vec<Vector> = Vec::with_capacity(vs.len());
    for (idx, v) in vs.iter().enumerate() {
        if let Some(first) = out.first() {
            ensure_same_dim(first.dim(), v.dim())?;
        }
        let original = ip.norm(v)?;
        let mut w = v.clone();
        for _ in 0..2 {
            for e in &out {
                let c = ip.inner(&w, e)?;
                w = e.axpy(-c, &w)?;
            }
        }
        let norm = ip.norm(&w)?;
        if norm < DEPENDENCE_TOL * (1.0 + original) {
            return Err(SpaceError::DependentInput { position: idx + 1 });
        }
        out.push(w.scaled_real(1.0 / norm));
    }
    OrthonormalSystem::new(out, ip.clone())
}

/// Residuals and slacks of the classical results for one `(x, y)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassicalOracles {
    /// `‖x‖‖y‖ - |⟨x,y⟩|`
    pub cs_slack: f64,
    /// `‖x+y‖² + ‖x-y‖² - 2‖x‖² - 2‖y‖²`
    pub parallelogram_residual: f64,
    /// `¼(‖x+y‖² - ‖x-y‖²) - ⟨x,y⟩`, real field only.
    pub polarization_residual: Option<f64>,
    /// `4|⟨x,y⟩| + ‖x-y‖² - ‖x+y‖²`, the bound the fuzzy polarization
    /// inequality is routed through.
    pub polarization_step_slack: f64,
    /// `Σ_{i<=N} |⟨x,e_i⟩|²`
    pub bessel_partial_sum: f64,
    /// `‖x‖²`
    pub norm_sqr_x: f64,
    /// Largest intermediate magnitude, for scale-relative comparisons.
    pub scale: f64,
}

pub fn classical_oracles(
    ip: &InnerProduct,
    x: &Vector,
    y: &Vector,
    system: &OrthonormalSystem,
    n: usize,
) -> Result<ClassicalOracles, SpaceError> {
    if n > system.len() {
        return Err(SpaceError::TruncationTooLong {
            requested: n,
            available: system.len(),
        });
    }
    let xy = ip.inner(x, y)?;
    let nx2 = ip.norm_sqr(x)?;
    let ny2 = ip.norm_sqr(y)?;
    let plus2 = ip.norm_sqr(&x.checked_add(y)?)?;
    let minus2 = ip.norm_sqr(&x.checked_sub(y)?)?;

    let polarization_residual = if x.is_real() && y.is_real() {
        Some(0.25 * (plus2 - minus2) - xy.re)
    } else {
        None
    };

    let mut bessel = 0.0;
    for e in &system.vectors()[..n] {
        bessel += ip.inner(x, e)?.norm_sqr();
    }

    let scale = [nx2, ny2, plus2, minus2, bessel].into_iter().fold(0.0, f64::max);
    Ok(ClassicalOracles {
        cs_slack: nx2.sqrt() * ny2.sqrt() - xy.norm(),
        parallelogram_residual: plus2 + minus2 - 2.0 * nx2 - 2.0 * ny2,
        polarization_residual,
        polarization_step_slack: 4.0 * xy.norm() + minus2 - plus2,
        bessel_partial_sum: bessel,
        norm_sqr_x: nx2,
        scale,
    })
}
