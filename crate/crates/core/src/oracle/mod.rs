//! Independent checks on the closed forms: brute-force integration of small
//! symmetric polynomials, the nested-sum formula for the one-point density,
//! and a Metropolis sampler of the joint eigenvalue density.

mod brute;
mod density;
mod mc;
mod monomial;

pub use brute::{brute_average, selberg_brute, BRUTE_MAX_VARIABLES};
pub use density::{density_ik, SpectralParams};
pub use mc::{mc_sample_pk, ChainConfig, McEstimate};
pub use monomial::MonomialPoly;
