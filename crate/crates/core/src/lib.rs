//! Exact finite-N averages of symmetric functions over the unitary Jacobi
//! ensemble, their representation as rational functions of the dimension
//! `N`, and closed-form `N → ∞` limits of `I_k / N = ⟨p_k⟩ / (N ⟨1⟩)` under
//! linear scalings `a = a1 N + a0`, `b = b1 N + b0`.
//!
//! All arithmetic is exact except in [`oracle::mc`], the Monte Carlo check.

pub mod asymptotics;
pub mod combinat;
pub mod error;
pub mod mn;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod schur_moments;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
pub use poly::{PolySequence, UniPoly};
pub use ratfunc::RationalFunction;
pub use rational::Rational;
pub use schur_moments::ScalingParams;
