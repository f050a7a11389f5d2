//! Structural shrinking of failing trials.
//!
//! Each accepted candidate strictly lowers a well-founded measure: interior
//! levels only move to grid endpoints, `t` only moves to a constant `0` or
//! `1`, `k` only moves down the ranking `0 < 1 < -1 < other`, entries only
//! move to `0`, to a real unit, or are halved while larger than one.

use num_complex::Complex64;

use super::campaign::{Context, Trial};
use super::record::{CheckId, CheckRecord};
use super::VerifyError;
use crate::classical::Vector;
use crate::structures::{Mixing, MixingFunction, Phase};

pub(crate) struct Shrunk {
    pub original: CheckRecord,
    pub shrunk: CheckRecord,
    pub steps: u32,
    pub evaluations: u32,
}

fn k_rank(k: Complex64) -> u8 {
    if k == Complex64::new(0.0, 0.0) {
        0
    } else if k == Complex64::new(1.0, 0.0) {
        1
    } else if k == Complex64::new(-1.0, 0.0) {
        2
    } else {
        3
    }
}

fn is_unit(e: Complex64) -> bool {
    e.im == 0.0 && (e.re == 1.0 || e.re == -1.0)
}

fn real_sign(e: Complex64) -> Complex64 {
    let s = if e.re != 0.0 { e.re.signum() } else { e.im.signum() };
    Complex64::new(s, 0.0)
}

fn vector_candidates(v: &Vector) -> Vec<Vector> {
    let mut out = Vec::new();
    if !v.is_zero() {
        out.push(Vector::zeros(v.dim()).expect("dim >= 1"));
    }
    for (i, &e) in v.entries().iter().enumerate() {
        if e != Complex64::new(0.0, 0.0) {
            out.push(v.with_entry(i, Complex64::new(0.0, 0.0)));
            if !is_unit(e) {
                out.push(v.with_entry(i, real_sign(e)));
            }
        }
    }
    if v.max_abs() > 1.0 {
        out.push(v.map(|e| if e.norm() > 1.0 { e * 0.5 } else { e }));
    }
    for (i, &e) in v.entries().iter().enumerate() {
        if e.norm() > 1.0 {
            out.push(v.with_entry(i, e * 0.5));
        }
    }
    out
}

fn candidates(ctx: &Context, t: &Trial) -> Vec<Trial> {
    let mut out = Vec::new();
    let (first, last) = (ctx.grid.first(), ctx.grid.last());
    for level in [first, last] {
        if t.alpha != first && t.alpha != last {
            out.push(Trial { alpha: level, ..t.clone() });
        }
        if t.alpha2 != first && t.alpha2 != last {
            out.push(Trial { alpha2: level, ..t.clone() });
        }
    }

    let current = t.mixing.unwrap_or_else(|| ctx.mixing());
    let is_boundary = matches!(current.t, Mixing::Constant { t } if t == 0.0 || t == 1.0)
        && current.phase == Phase::Zero;
    if !is_boundary {
        for value in [0.0, 1.0] {
            let m = MixingFunction::constant(value).expect("0 and 1 are valid");
            out.push(Trial {
                mixing: Some(m),
                ..t.clone()
            });
        }
    }

    for (rank, k) in [(0, 0.0), (1, 1.0), (2, -1.0)] {
        if rank < k_rank(t.k) {
            out.push(Trial {
                k: Complex64::new(k, 0.0),
                ..t.clone()
            });
        }
    }

    if t.n > 1 {
        out.push(Trial { n: 1, ..t.clone() });
    }

    for v in vector_candidates(&t.x) {
        out.push(Trial { x: v, ..t.clone() });
    }
    for v in vector_candidates(&t.y) {
        out.push(Trial { y: v, ..t.clone() });
    }
    for v in vector_candidates(&t.z) {
        out.push(Trial { z: v, ..t.clone() });
    }
    out
}

fn failing(ctx: &Context, t: &Trial, id: CheckId) -> Result<Option<CheckRecord>, VerifyError> {
    Ok(ctx.evaluate(t, &[id])?.pop().filter(|r| !r.pass))
}

/// Greedy first-improvement descent over [`candidates`], bounded by
/// `budget` evaluations. `None` when `trial` does not fail `id`.
pub(crate) fn shrink(ctx: &Context, trial: Trial, id: CheckId, budget: u32) -> Result<Option<Shrunk>, VerifyError> {
    let Some(original) = failing(ctx, &trial, id)? else {
        return Ok(None);
    };
    let mut current = trial;
    let mut record = original.clone();
    let mut steps = 0;
    let mut evaluations = 0;
    'descent: while evaluations < budget {
        for candidate in candidates(ctx, &current) {
            if evaluations >= budget {
                break 'descent;
            }
            evaluations += 1;
            if let Some(r) = failing(ctx, &candidate, id)? {
                current = candidate;
                record = r;
                steps += 1;
                continue 'descent;
            }
        }
        break;
    }
    Ok(Some(Shrunk {
        original,
        shrunk: record,
        steps,
        evaluations,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_candidates_terminate() {
        let mut v = Vector::new(vec![Complex64::new(7.5, -3.0), Complex64::new(0.25, 0.0)]).unwrap();
        // Always taking the last candidate is the slowest descent.
        for _ in 0..200 {
            match vector_candidates(&v).pop() {
                Some(next) => v = next,
                None => break,
            }
        }
        assert!(vector_candidates(&v).is_empty() || v.is_zero());
    }

    #[test]
    fn ranks() {
        assert!(k_rank(Complex64::new(0.0, 0.0)) < k_rank(Complex64::new(1.0, 0.0)));
        assert_eq!(k_rank(Complex64::new(0.0, 1.0)), 3);
        assert_eq!(real_sign(Complex64::new(0.0, -2.0)), Complex64::new(-1.0, 0.0));
    }
}
