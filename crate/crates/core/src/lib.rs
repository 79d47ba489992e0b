//! Exact factorization of motion polynomials over the dual quaternions, and
//! synthesis of overconstrained single-loop linkages whose coupler has a
//! straight-line trajectory.
//!
//! All arithmetic is exact over the rationals unless a float mode is
//! requested explicitly.

pub mod dispatch;
pub mod dualquat;
pub mod error;
pub mod exactalg;
pub mod factorization;
pub mod linkage;
pub mod motionpoly;
pub mod synthesis;
pub mod wire;

pub use error::{Error, Result};
