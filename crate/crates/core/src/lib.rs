//! Ordered-interval arithmetic, fuzzy numbers, fuzzy inner-product and
//! fuzzy-norm triples over finite-dimensional spaces, and a seeded verifier
//! that checks their inequalities on random and corner-case instances.
//!
//! The crate is organized bottom-up:
//!
//! - [`interval`]: label-wise arithmetic on `[a,b]_o`.
//! - [`fuzzy_number`]: membership functions and their α-cuts.
//! - [`classical`]: vectors over ℝ or ℂ, inner products, p-norms,
//!   Gram–Schmidt, and the classical inequalities as oracles.
//! - [`structures`]: α-profiles, fuzzy inner products, fuzzy norms and the
//!   closed-form ℝ² example.
//! - [`verifier`]: per-instance checks and randomized campaigns.
//! - [`calc`] and [`cli`]: the interval calculator and the `ofip` commands.

pub mod calc;
pub mod classical;
pub mod cli;
pub mod fuzzy_number;
pub mod interval;
pub mod structures;
pub mod verifier;
