//! The generic factorization algorithm.
//!
//! For a monic motion polynomial `C` with norm `M_1 ... M_n`, pick a
//! quadratic factor `M`, right-divide `C` by `M`, take the unique zero `h` of
//! the linear remainder, split off `t - h` on the right and repeat.

use itertools::Itertools;
use num_traits::Zero;

use super::{Factorization, LinearFactor};
use crate::dualquat::DualQuaternion;
use crate::error::{Error, Result};
use crate::exactalg::rat::to_f64;
use crate::exactalg::{quadratic_factor_decomposition, Mode, Poly, RPoly};
use crate::motionpoly::{quo_right_linear, right_divide_by_real, DqPoly, MotionPoly};

/// The unique zero `-r1^{-1} r0` of `R = r1 t + r0`.
pub fn zero_of_linear_remainder(r: &DqPoly) -> Result<DualQuaternion> {
    if r.deg() != 1 || r.is_zero() {
        return Err(Error::Precondition("remainder must have degree one".into()));
    }
    let inv = r
        .coeff(1)
        .inverse()
        .ok_or(Error::NonInvertibleLeadingCoefficient)?;
    let h = -(&inv * &r.coeff(0));
    debug_assert!(r.eval_right(&h).is_zero());
    Ok(h)
}

/// Runs the algorithm consuming the norm factors in `order`; the first entry
/// yields the rightmost linear factor.
pub fn factor_with_order(c: &MotionPoly, order: &[RPoly]) -> Result<Factorization> {
    if !c.is_monic() {
        return Err(Error::Precondition(
            "motion polynomial must be monic".into(),
        ));
    }
    let prod = order.iter().fold(RPoly::one(), |acc, m| &acc * m);
    if prod != c.norm_poly() || order.len() != c.degree() {
        return Err(Error::Precondition(
            "order is not a decomposition of the norm polynomial".into(),
        ));
    }
    let mut rest = c.poly().clone();
    let mut reversed = Vec::with_capacity(order.len());
    for m in order {
        let (_, r) = right_divide_by_real(&rest, m)?;
        if r.deg() != 1 || r.is_zero() {
            return Err(Error::NonGeneric(format!(
                "remainder modulo {m} has no unique zero"
            )));
        }
        let h = zero_of_linear_remainder(&r).map_err(|_| {
            Error::NonGeneric(format!(
                "leading coefficient of the remainder modulo {m} is not invertible"
            ))
        })?;
        let factor = LinearFactor::new(h).map_err(|_| {
            Error::NonGeneric(format!("zero of the remainder modulo {m} is not a joint"))
        })?;
        rest = quo_right_linear(&rest, factor.h()).map_err(|_| {
            Error::NonGeneric(format!(
                "zero of the remainder modulo {m} is not a right zero"
            ))
        })?;
        reversed.push(factor);
    }
    reversed.reverse();
    Factorization::verified(reversed, RPoly::one(), c.poly())
}

/// Factors computed from approximate norm factors; `residual` is the largest
/// coefficient of `prod(t - h_i) - C` in absolute value.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxFactorization {
    pub factors: Vec<DualQuaternion>,
    pub residual: f64,
}

/// The generic algorithm without exactness checks, for float mode. Fails
/// with `Numerical` if the product misses `C` by more than `eps`.
pub fn approximate_factorization(
    c: &MotionPoly,
    order: &[RPoly],
    eps: f64,
) -> Result<ApproxFactorization> {
    let mut rest = c.poly().clone();
    let mut reversed = Vec::with_capacity(order.len());
    for m in order {
        let (_, r) = right_divide_by_real(&rest, m)?;
        if r.deg() != 1 {
            return Err(Error::NonGeneric(format!(
                "remainder modulo {m} has no unique zero"
            )));
        }
        let h = zero_of_linear_remainder(&r)?;
        rest = quo_right_linear_approx(&rest, &h);
        reversed.push(h);
    }
    reversed.reverse();
    let prod = reversed
        .iter()
        .fold(DqPoly::one(), |acc, h| &acc * &Poly::linear(h.clone()));
    let diff = &prod - c.poly();
    let residual = diff
        .coeffs()
        .iter()
        .flat_map(|h| h.components())
        .map(|v| to_f64(&v).abs())
        .fold(0.0, f64::max);
    if residual > eps {
        return Err(Error::Numerical(format!(
            "factor product misses the input by {residual:e}"
        )));
    }
    Ok(ApproxFactorization {
        factors: reversed,
        residual,
    })
}

/// Quotient of the synthetic division by `t - h`, dropping the remainder.
fn quo_right_linear_approx(c: &DqPoly, h: &DualQuaternion) -> DqPoly {
    let cs = c.coeffs();
    let n = cs.len() - 1;
    let mut q = vec![DualQuaternion::zero(); n];
    q[n - 1] = cs[n].clone();
    for i in (1..n).rev() {
        q[i - 1] = cs[i].clone() + &q[i] * h;
    }
    Poly::new(q)
}

/// Outcome of running every ordering of the norm factors.
#[derive(Clone, Debug)]
pub struct AllFactorizations {
    pub norm_factors: Vec<RPoly>,
    pub factorizations: Vec<Factorization>,
    /// Orders for which the generic algorithm failed, with the reason.
    pub failures: Vec<(Vec<RPoly>, Error)>,
}

pub fn all_factorizations(c: &MotionPoly) -> Result<AllFactorizations> {
    let norm_factors = quadratic_factor_decomposition(&c.norm_poly(), Mode::Exact)?;
    let n = norm_factors.len();
    let orders: Vec<Vec<RPoly>> = (0..n)
        .permutations(n)
        .map(|perm| {
            perm.into_iter()
                .map(|i| norm_factors[i].clone())
                .collect::<Vec<_>>()
        })
        .unique()
        .collect();
    let mut factorizations: Vec<Factorization> = Vec::new();
    let mut failures = Vec::new();
    for order in orders {
        match factor_with_order(c, &order) {
            Ok(f) => {
                if !factorizations.contains(&f) {
                    factorizations.push(f);
                }
            }
            Err(e) => failures.push((order, e)),
        }
    }
    Ok(AllFactorizations {
        norm_factors,
        factorizations,
        failures,
    })
}
