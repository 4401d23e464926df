//! Exact computations for primitive multiple schemes.
//!
//! The crate models functions, sections, forms and vector fields on the
//! standard cover of P^m by homogeneous Laurent polynomials over Q, and builds
//! on that: truncated power series rings R_n = A[t]/(t^n), the automorphism
//! groups G_n and H_n, Cech cochains and class tests, obstruction classes
//! for extending schemes and line bundles, and the Riemann-Roch dimension
//! formulas for multiple structures on ruled surfaces.

pub mod autgroup;
pub mod cech;
pub mod cli;
mod error;
pub mod exactalg;
pub mod pms;
pub mod projbundle;
pub mod sample;
pub mod truncated;

pub use error::{Error, Result};
