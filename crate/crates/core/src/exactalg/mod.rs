//! Exact scalars, real polynomials and the supporting numeric machinery.

pub mod decompose;
pub mod linalg;
pub mod poly;
pub mod rat;

pub use decompose::{
    quadratic_factor_decomposition, quadratic_roots, rpoly_divides, Mode, QuadraticRoots,
};
pub use linalg::{AffineSolution, Matrix};
pub use poly::{Coeff, Degree, Poly, RPoly};
pub use rat::{fmt_decimal, fmt_rat, int, parse_rat, rat, Rat};
