//! Gelfand–Kirillov dimensions of simple highest weight modules of sl(n)
//! and of highest weight Harish-Chandra modules of su(p,q).
//!
//! All weights are given in λ+ρ coordinates and computed with exact
//! rationals. The main entry points are [`gkdim::gk_dimension`] for
//! arbitrary weights and [`hermitian::gk_pq`] for (p,q)-dominant weights.
//! [`hecke`] holds an independent small-rank check of the a-function
//! through the Kazhdan–Lusztig basis of the Hecke algebra.

pub mod cli;
pub mod error;
pub mod gkdim;
pub mod hecke;
pub mod hermitian;
pub mod perm;
pub mod rational;
pub mod tableau;
pub mod weight;

pub use error::{Error, Result};
pub use gkdim::{gk_dimension, GkReport};
pub use hermitian::{gk_pq, HermitianReport};
pub use rational::Rational;
pub use weight::{PqContext, Weight};
