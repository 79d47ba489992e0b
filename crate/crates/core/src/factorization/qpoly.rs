use super::{factor_with_order, Factorization};
use crate::error::{Error, Result};
use crate::exactalg::{quadratic_factor_decomposition, Mode};
use crate::motionpoly::{qpoly_norm, MotionPoly, QPoly};

/// The two factorizations `P = (t - h1)(t - h2) = (t - h1')(t - h2')` of a
/// monic quadratic quaternion polynomial. The first consumes the first norm
/// factor on the right, the second the other one. Equal norm factors give the
/// same factorization twice.
pub fn qpoly_two_factorizations(p: &QPoly) -> Result<(Factorization, Factorization)> {
    if p.deg() != 2 || !p.is_monic() {
        return Err(Error::Precondition(
            "expected a monic quadratic quaternion polynomial".into(),
        ));
    }
    if p.coeffs().iter().all(|q| q.is_real()) {
        return Err(Error::Precondition("polynomial is real".into()));
    }
    let norm = quadratic_factor_decomposition(&qpoly_norm(p), Mode::Exact)?;
    let c = MotionPoly::from_qpoly(p)?;
    let first = factor_with_order(&c, &[norm[0].clone(), norm[1].clone()])?;
    if norm[0] == norm[1] {
        return Ok((first.clone(), first));
    }
    let second = factor_with_order(&c, &[norm[1].clone(), norm[0].clone()])?;
    Ok((first, second))
}
