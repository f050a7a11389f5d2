use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::StructureError;
use crate::classical::Vector;

/// Where in the admissible band `[A_α, B_α]` a realization's magnitude sits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mixing {
    /// `t ≡ t`, with `t ∈ [0,1]`.
    Constant { t: f64 },
    /// `t(α) = clamp(intercept + slope·α, 0, 1)`.
    Affine { intercept: f64, slope: f64 },
    /// A deterministic pseudo-random `t ∈ [0,1)` derived from `(seed, α, x, y)`.
    Hashed { seed: u64 },
}

/// Phase `φ ∈ [0, 2π)` applied as `e^{iφ}`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Phase {
    #[default]
    Zero,
    Constant { radians: f64 },
    Hashed { seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixingFunction {
    pub t: Mixing,
    #[serde(default)]
    pub phase: Phase,
}

impl MixingFunction {
    pub fn new(t: Mixing, phase: Phase) -> Result<Self, StructureError> {
        let m = MixingFunction { t, phase };
        m.validate()?;
        Ok(m)
    }

    /// Constant `t` with zero phase.
    pub fn constant(t: f64) -> Result<Self, StructureError> {
        Self::new(Mixing::Constant { t }, Phase::Zero)
    }

    pub fn hashed(seed: u64) -> Self {
        MixingFunction {
            t: Mixing::Hashed { seed },
            phase: Phase::Hashed {
                seed: seed.wrapping_add(0x9e37_79b9_7f4a_7c15),
            },
        }
    }

    pub fn validate(&self) -> Result<(), StructureError> {
        match self.t {
            Mixing::Constant { t } if !(0.0..=1.0).contains(&t) => {
                return Err(StructureError::InvalidMixing(format!("t = {t} is outside [0,1]")));
            }
            Mixing::Affine { intercept, slope } if !intercept.is_finite() || !slope.is_finite() => {
                return Err(StructureError::InvalidMixing("affine coefficients must be finite".into()));
            }
            _ => {}
        }
        if let Phase::Constant { radians } = self.phase {
            if !(0.0..TAU).contains(&radians) {
                return Err(StructureError::InvalidMixing(format!(
                    "phase {radians} is outside [0, 2π)"
                )));
            }
        }
        Ok(())
    }

    pub fn with_t(self, t: Mixing) -> Self {
        MixingFunction { t, ..self }
    }

    /// Whether `t` is a fixed constant (so scaling an argument scales the
    /// magnitude exactly).
    pub fn is_constant_t(&self) -> bool {
        matches!(self.t, Mixing::Constant { .. })
    }

    pub fn t_at(&self, alpha: f64, x: &Vector, y: &Vector) -> f64 {
        match self.t {
            Mixing::Constant { t } => t,
            Mixing::Affine { intercept, slope } => (intercept + slope * alpha).clamp(0.0, 1.0),
            Mixing::Hashed { seed } => hash_unit(seed, alpha, x, y),
        }
    }

    pub fn phase_at(&self, alpha: f64, x: &Vector, y: &Vector) -> f64 {
        match self.phase {
            Phase::Zero => 0.0,
            Phase::Constant { radians } => radians,
            Phase::Hashed { seed } => {
                let p = TAU * hash_unit(seed, alpha, x, y);
                if p >= TAU {
                    0.0
                } else {
                    p
                }
            }
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn absorb(h: u64, word: u64) -> u64 {
    splitmix64(h ^ word)
}

/// Uniform value in `[0,1)` from the bit patterns of `(seed, α, x, y)`.
fn hash_unit(seed: u64, alpha: f64, x: &Vector, y: &Vector) -> f64 {
    let mut h = splitmix64(seed);
    h = absorb(h, alpha.to_bits());
    for v in [x, y] {
        h = absorb(h, v.dim() as u64);
        for z in v.entries() {
            h = absorb(h, z.re.to_bits());
            h = absorb(h, z.im.to_bits());
        }
    }
    (h >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(e: &[f64]) -> Vector {
        Vector::real(e).unwrap()
    }

    #[test]
    fn constant_and_affine() {
        let m = MixingFunction::constant(0.25).unwrap();
        assert_eq!(m.t_at(0.7, &rv(&[1.0]), &rv(&[2.0])), 0.25);
        assert_eq!(m.phase_at(0.7, &rv(&[1.0]), &rv(&[2.0])), 0.0);
        let a = MixingFunction::new(Mixing::Affine { intercept: -1.0, slope: 2.0 }, Phase::Zero).unwrap();
        let x = rv(&[1.0]);
        assert_eq!(a.t_at(1.0, &x, &x), 1.0);
        assert_eq!(a.t_at(0.5, &x, &x), 0.0);
        assert_eq!(a.t_at(0.25, &x, &x), 0.0);
        assert_eq!(a.t_at(0.75, &x, &x), 0.5);
    }

    #[test]
    fn validation() {
        assert!(MixingFunction::constant(1.5).is_err());
        assert!(MixingFunction::new(Mixing::Constant { t: 0.5 }, Phase::Constant { radians: TAU }).is_err());
        assert!(MixingFunction::new(
            Mixing::Affine {
                intercept: f64::NAN,
                slope: 0.0
            },
            Phase::Zero
        )
        .is_err());
    }

    #[test]
    fn hashed_is_deterministic_and_in_range() {
        let m = MixingFunction::hashed(7);
        let x = rv(&[1.0, -2.0]);
        let y = rv(&[0.5, 3.0]);
        let t = m.t_at(0.3, &x, &y);
        assert_eq!(t, m.t_at(0.3, &x, &y));
        assert_ne!(t, m.t_at(0.3, &y, &x));
        assert_ne!(t, MixingFunction::hashed(8).t_at(0.3, &x, &y));
        for i in 0..1000 {
            let v = rv(&[i as f64, 1.0]);
            let t = m.t_at(0.5, &v, &y);
            let p = m.phase_at(0.5, &v, &y);
            assert!((0.0..1.0).contains(&t));
            assert!((0.0..TAU).contains(&p));
        }
    }

    #[test]
    fn serde_shape() {
        let m = MixingFunction::hashed(3);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<MixingFunction>(&json).unwrap(), m);
        let parsed: MixingFunction = serde_json::from_str(r#"{"t":{"kind":"constant","t":0.5}}"#).unwrap();
        assert_eq!(parsed.phase, Phase::Zero);
    }
}
