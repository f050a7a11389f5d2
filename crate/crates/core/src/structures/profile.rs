use serde::{Deserialize, Deserializer, Serialize};

use super::StructureError;

/// A finite, strictly increasing sample of α levels in `(0,1]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct AlphaGrid(Vec<f64>);

impl AlphaGrid {
    pub fn new(points: Vec<f64>) -> Result<Self, StructureError> {
        if points.is_empty() {
            return Err(StructureError::EmptyGrid);
        }
        if let Some(&a) = points.iter().find(|a| !(**a > 0.0 && **a <= 1.0)) {
            return Err(StructureError::GridOutOfRange(a));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(StructureError::GridNotSorted);
        }
        Ok(AlphaGrid(points))
    }

    /// `n` evenly spaced levels from `lo` to `hi` inclusive.
    pub fn linspace(lo: f64, hi: f64, n: usize) -> Result<Self, StructureError> {
        let points = match n {
            0 => vec![],
            1 => vec![hi],
            _ => (0..n)
                .map(|i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
                .collect(),
        };
        Self::new(points)
    }

    /// `{1/n, 2/n, …, 1}`
    pub fn uniform(n: usize) -> Result<Self, StructureError> {
        Self::new((1..=n).map(|i| i as f64 / n as f64).collect())
    }

    pub fn points(&self) -> &[f64] {
        &self.0
    }

    pub fn first(&self) -> f64 {
        self.0[0]
    }

    pub fn last(&self) -> f64 {
        self.0[self.0.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, alpha: f64) -> bool {
        self.0.contains(&alpha)
    }
}

impl<'de> Deserialize<'de> for AlphaGrid {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        AlphaGrid::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// How the lower and upper constants vary with α.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProfileShape {
    Constant { lower: f64, upper: f64 },
    /// `[intercept, slope]` pairs: `c(α) = intercept + slope·α`.
    Affine { lower: [f64; 2], upper: [f64; 2] },
    /// `c(α) = intercept + slope·α²`.
    AffineSquared { lower: [f64; 2], upper: [f64; 2] },
    /// Rows `[α, lower, upper]` sorted by α; linear interpolation between
    /// rows and constant extension past the first and last row.
    Table { rows: Vec<[f64; 3]> },
    SquareRoot { of: Box<ProfileShape> },
}

impl ProfileShape {
    pub fn eval(&self, alpha: f64) -> (f64, f64) {
        match self {
            ProfileShape::Constant { lower, upper } => (*lower, *upper),
            ProfileShape::Affine { lower, upper } => {
                (lower[0] + lower[1] * alpha, upper[0] + upper[1] * alpha)
            }
            ProfileShape::AffineSquared { lower, upper } => {
                let a2 = alpha * alpha;
                (lower[0] + lower[1] * a2, upper[0] + upper[1] * a2)
            }
            ProfileShape::Table { rows } => table_lookup(rows, alpha),
            ProfileShape::SquareRoot { of } => {
                let (l, u) = of.eval(alpha);
                (l.sqrt(), u.sqrt())
            }
        }
    }
}

fn table_lookup(rows: &[[f64; 3]], alpha: f64) -> (f64, f64) {
    let first = rows[0];
    let last = rows[rows.len() - 1];
    if alpha <= first[0] {
        return (first[1], first[2]);
    }
    if alpha >= last[0] {
        return (last[1], last[2]);
    }
    for w in rows.windows(2) {
        let (r0, r1) = (w[0], w[1]);
        if alpha == r1[0] {
            return (r1[1], r1[2]);
        }
        if alpha < r1[0] {
            let s = (alpha - r0[0]) / (r1[0] - r0[0]);
            return (r0[1] + s * (r1[1] - r0[1]), r0[2] + s * (r1[2] - r0[2]));
        }
    }
    (last[1], last[2])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileForm {
    /// `0 < lower(α) <= upper(α) < ∞` on the grid.
    Simplified,
    /// `0 < min <= max < ∞` on the grid; the two constants may be unordered.
    General,
}

/// The α-indexed constant pair `(A_α, B_α)` (or `(C_α, D_α)`, `(M_α, N_α)`)
/// together with the grid on which it is sampled.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaProfile {
    shape: ProfileShape,
    grid: AlphaGrid,
    form: ProfileForm,
}

impl AlphaProfile {
    pub fn simplified(shape: ProfileShape, grid: AlphaGrid) -> Result<Self, StructureError> {
        Self::with_form(shape, grid, ProfileForm::Simplified)
    }

    pub fn general(shape: ProfileShape, grid: AlphaGrid) -> Result<Self, StructureError> {
        Self::with_form(shape, grid, ProfileForm::General)
    }

    pub fn constant(lower: f64, upper: f64, grid: AlphaGrid) -> Result<Self, StructureError> {
        Self::simplified(ProfileShape::Constant { lower, upper }, grid)
    }

    pub fn with_form(
        shape: ProfileShape,
        grid: AlphaGrid,
        form: ProfileForm,
    ) -> Result<Self, StructureError> {
        if let ProfileShape::Table { rows } = &shape {
            validate_table(rows)?;
        }
        for &alpha in grid.points() {
            let (lower, upper) = shape.eval(alpha);
            let positive = lower.is_finite() && upper.is_finite() && lower > 0.0 && upper > 0.0;
            if !positive {
                return Err(StructureError::InvalidProfile {
                    alpha,
                    lower,
                    upper,
                    reason: "constants must be finite and strictly positive",
                });
            }
            if form == ProfileForm::Simplified && lower > upper {
                return Err(StructureError::InvalidProfile {
                    alpha,
                    lower,
                    upper,
                    reason: "simplified form requires lower <= upper",
                });
            }
        }
        Ok(AlphaProfile { shape, grid, form })
    }

    pub fn shape(&self) -> &ProfileShape {
        &self.shape
    }

    pub fn grid(&self) -> &AlphaGrid {
        &self.grid
    }

    pub fn form(&self) -> ProfileForm {
        self.form
    }

    /// Whether `lower <= upper` at every grid level.
    pub fn is_ordered(&self) -> bool {
        self.grid.points().iter().all(|&a| {
            let (l, u) = self.bounds(a);
            l <= u
        })
    }

    pub fn bounds(&self, alpha: f64) -> (f64, f64) {
        self.shape.eval(alpha)
    }

    pub fn lower(&self, alpha: f64) -> f64 {
        self.bounds(alpha).0
    }

    pub fn upper(&self, alpha: f64) -> f64 {
        self.bounds(alpha).1
    }

    /// The per-level constant of the quasi-linearity bounds, `B_α / A_α`.
    pub fn ratio(&self, alpha: f64) -> f64 {
        let (l, u) = self.bounds(alpha);
        u / l
    }

    /// The uniform constant `M = sup_α B_α/A_α` over the grid (equivalently
    /// `L = 1 / inf_α C_α/D_α` for a norm profile). At least 1.
    pub fn global_bound(&self) -> f64 {
        self.grid
            .points()
            .iter()
            .map(|&a| {
                let (l, u) = self.bounds(a);
                l.max(u) / l.min(u)
            })
            .fold(1.0, f64::max)
    }

    /// `(√lower, √upper)` on the same grid.
    pub fn sqrt(&self) -> AlphaProfile {
        AlphaProfile {
            shape: ProfileShape::SquareRoot {
                of: Box::new(self.shape.clone()),
            },
            grid: self.grid.clone(),
            form: self.form,
        }
    }

    pub fn with_grid(&self, grid: AlphaGrid) -> Result<Self, StructureError> {
        Self::with_form(self.shape.clone(), grid, self.form)
    }
}

fn validate_table(rows: &[[f64; 3]]) -> Result<(), StructureError> {
    if rows.is_empty() {
        return Err(StructureError::InvalidTable("table needs at least one row"));
    }
    if rows.iter().flatten().any(|v| !v.is_finite()) {
        return Err(StructureError::InvalidTable("table entries must be finite"));
    }
    if rows.windows(2).any(|w| w[0][0] >= w[1][0]) {
        return Err(StructureError::InvalidTable("table levels must be strictly increasing"));
    }
    Ok(())
}
