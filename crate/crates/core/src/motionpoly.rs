//! Polynomials with dual quaternion coefficients.
//!
//! [`DqPoly`] is an arbitrary coefficient polynomial; [`MotionPoly`] carries
//! the certificate that `C * conj(C)` is a real polynomial.

use std::ops::Mul;

use num_traits::{One, Zero};

use crate::dualquat::{DualQuaternion, Quaternion};
use crate::error::{Error, Result};
use crate::exactalg::{Poly, RPoly, Rat};

/// Unchecked polynomial over the dual quaternions.
pub type DqPoly = Poly<DualQuaternion>;
/// Polynomial over the quaternions.
pub type QPoly = Poly<Quaternion>;

pub fn embed_real(p: &RPoly) -> DqPoly {
    p.map(|c| DualQuaternion::real(c.clone()))
}

pub fn embed_quaternion(p: &QPoly) -> DqPoly {
    p.map(|c| DualQuaternion::from_primal(c.clone()))
}

pub fn real_as_qpoly(p: &RPoly) -> QPoly {
    p.map(|c| Quaternion::real(c.clone()))
}

/// Coefficient-wise conjugate.
pub fn conj_poly(c: &DqPoly) -> DqPoly {
    c.map(DualQuaternion::conj)
}

pub fn conj_qpoly(c: &QPoly) -> QPoly {
    c.map(Quaternion::conj)
}

pub fn primal_part(c: &DqPoly) -> QPoly {
    c.map(|h| h.primal.clone())
}

pub fn dual_part(c: &DqPoly) -> QPoly {
    c.map(|h| h.dual.clone())
}

/// `primal + ε dual` from two quaternion polynomials.
pub fn from_parts(primal: &QPoly, dual: &QPoly) -> DqPoly {
    let n = primal.coeffs().len().max(dual.coeffs().len());
    Poly::new(
        (0..n)
            .map(|i| DualQuaternion::new(primal.coeff(i), dual.coeff(i)))
            .collect(),
    )
}

/// `C * conj(C)` as a real polynomial, if it is one.
pub fn real_norm(c: &DqPoly) -> Option<RPoly> {
    let n = c * &conj_poly(c);
    n.coeffs()
        .iter()
        .map(DualQuaternion::as_real)
        .collect::<Option<Vec<Rat>>>()
        .map(RPoly::new)
}

/// `P * conj(P)` for a quaternion polynomial (always real).
pub fn qpoly_norm(p: &QPoly) -> RPoly {
    let n = p * &conj_qpoly(p);
    RPoly::new(n.coeffs().iter().map(|q| q.w.clone()).collect())
}

/// Motion polynomial: `C * conj(C)` is real.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MotionPoly(DqPoly);

impl MotionPoly {
    pub fn new(c: DqPoly) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::NotMotionPolynomial);
        }
        real_norm(&c).ok_or(Error::NotMotionPolynomial)?;
        Ok(MotionPoly(c))
    }

    pub fn from_qpoly(p: &QPoly) -> Result<Self> {
        MotionPoly::new(embed_quaternion(p))
    }

    /// `t - h`, which is a motion polynomial iff `h` is a rotation or
    /// translation quaternion.
    pub fn linear(h: &DualQuaternion) -> Result<Self> {
        MotionPoly::new(Poly::linear(h.clone()))
    }

    pub fn one() -> Self {
        MotionPoly(Poly::one())
    }

    pub fn poly(&self) -> &DqPoly {
        &self.0
    }

    pub fn into_poly(self) -> DqPoly {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.deg()
    }

    pub fn is_monic(&self) -> bool {
        self.0.is_monic()
    }

    pub fn conj(&self) -> MotionPoly {
        MotionPoly(conj_poly(&self.0))
    }

    pub fn norm_poly(&self) -> RPoly {
        real_norm(&self.0).expect("certified motion polynomial")
    }

    pub fn eval_right(&self, h: &DualQuaternion) -> DualQuaternion {
        self.0.eval_right(h)
    }

    pub fn mul_real(&self, m: &RPoly) -> Result<MotionPoly> {
        MotionPoly::new(self.0.mul_real(m))
    }

    pub fn primal(&self) -> QPoly {
        primal_part(&self.0)
    }

    pub fn dual(&self) -> QPoly {
        dual_part(&self.0)
    }
}

impl Mul for &MotionPoly {
    type Output = MotionPoly;
    fn mul(self, rhs: &MotionPoly) -> MotionPoly {
        MotionPoly(&self.0 * &rhs.0)
    }
}

pub fn norm_poly(c: &DqPoly) -> Result<RPoly> {
    real_norm(c).ok_or(Error::NotMotionPolynomial)
}

pub fn eval_right(c: &DqPoly, h: &DualQuaternion) -> DualQuaternion {
    c.eval_right(h)
}

/// `C = Q * M + R` with `deg R < deg M` for monic real `M`.
pub fn right_divide_by_real(c: &DqPoly, m: &RPoly) -> Result<(DqPoly, DqPoly)> {
    if !m.is_monic() || m.deg() == 0 {
        return Err(Error::Precondition(
            "divisor must be monic of degree at least one".into(),
        ));
    }
    c.divrem_real(m)
}

/// `Q` with `C = Q (t - h)`.
pub fn quo_right_linear(c: &DqPoly, h: &DualQuaternion) -> Result<DqPoly> {
    let cs = c.coeffs();
    if cs.len() < 2 {
        return Err(Error::NotAFactor);
    }
    let n = cs.len() - 1;
    let mut q = vec![DualQuaternion::zero(); n];
    q[n - 1] = cs[n].clone();
    for i in (1..n).rev() {
        q[i - 1] = cs[i].clone() + &q[i] * h;
    }
    let remainder = cs[0].clone() + &q[0] * h;
    if !remainder.is_zero() {
        return Err(Error::NotAFactor);
    }
    let q = Poly::new(q);
    debug_assert_eq!(&q * &Poly::linear(h.clone()), *c);
    Ok(q)
}

/// `Q` with `C = (t - h) Q`.
pub fn quo_left_linear(c: &DqPoly, h: &DualQuaternion) -> Result<DqPoly> {
    let cs = c.coeffs();
    if cs.len() < 2 {
        return Err(Error::NotAFactor);
    }
    let n = cs.len() - 1;
    let mut q = vec![DualQuaternion::zero(); n];
    q[n - 1] = cs[n].clone();
    for i in (1..n).rev() {
        q[i - 1] = cs[i].clone() + h * &q[i];
    }
    let remainder = cs[0].clone() + h * &q[0];
    if !remainder.is_zero() {
        return Err(Error::NotAFactor);
    }
    let q = Poly::new(q);
    debug_assert_eq!(&Poly::linear(h.clone()) * &q, *c);
    Ok(q)
}

/// The real polynomial of `t` in component `k` (0..8) of the coefficients.
fn component(c: &DqPoly, k: usize) -> RPoly {
    RPoly::new(
        c.coeffs()
            .iter()
            .map(|h| h.components()[k].clone())
            .collect(),
    )
}

/// Splits off the maximal real polynomial factor: `C = g * C'` with `g`
/// monic real.
pub fn real_content(c: &DqPoly) -> (RPoly, DqPoly) {
    if c.is_zero() {
        return (RPoly::zero(), c.clone());
    }
    let g = (0..8).fold(RPoly::zero(), |g, k| RPoly::gcd(&g, &component(c, k)));
    let mut out = vec![DualQuaternion::zero(); c.deg() + 1 - g.deg()];
    for k in 0..8 {
        let (q, r) = component(c, k).divrem(&g).expect("nonzero gcd");
        debug_assert!(r.is_zero());
        for (i, v) in q.coeffs().iter().enumerate() {
            let mut comps = out[i].components();
            comps[k] = v.clone();
            out[i] = DualQuaternion::from_components(comps);
        }
    }
    (g, Poly::new(out))
}

/// `rho A = sigma B` for some nonzero real polynomials.
pub fn projective_equal(a: &DqPoly, b: &DqPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    let (_, pa) = real_content(a);
    let (_, pb) = real_content(b);
    if pa.deg() != pb.deg() {
        return false;
    }
    // Primitive parts agree up to a real constant.
    let la = pa.leading().expect("nonzero").components();
    let lb = pb.leading().expect("nonzero").components();
    let Some(k) = (0..8).find(|&k| !la[k].is_zero()) else {
        return false;
    };
    if lb[k].is_zero() {
        return false;
    }
    let ratio = &la[k] / &lb[k];
    pb.scale(&ratio) == pa
}

pub fn is_one(c: &DqPoly) -> bool {
    c.deg() == 0 && c.coeff(0).is_one()
}
