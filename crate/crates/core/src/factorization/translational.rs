//! Quadratic translational motions `C = ξ + ε D` with real monic `ξ` of
//! degree two and pure `D = d1 t + d0`.
//!
//! All formulas here come from matching coefficients of
//! `(t - h0 - ε h2)(t - k0 - ε k2)` against `C`, whose dual part is
//! `-(h2 + k2) t + (h0 k2 + k0 h2)`.

use num_traits::{Signed, Zero};

use super::{AffineFactor, FactorFamily, Factorization, LinearFactor};
use crate::dualquat::{cross, DualQuaternion, Quaternion};
use crate::error::{Error, Result};
use crate::exactalg::{quadratic_roots, Coeff, Mode, Poly, QuadraticRoots, RPoly, Rat};
use crate::motionpoly::{embed_real, from_parts, qpoly_norm, real_as_qpoly, DqPoly, QPoly};

/// Parsed form of a monic quadratic translational motion polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticTranslation {
    pub xi: RPoly,
    pub d1: Quaternion,
    pub d0: Quaternion,
}

impl QuadraticTranslation {
    pub fn new(xi: RPoly, d1: Quaternion, d0: Quaternion) -> Result<Self> {
        let malformed = |m: &str| Err(Error::MalformedTranslational(m.into()));
        if xi.deg() != 2 || !xi.is_monic() {
            return malformed("primal part must be a monic real quadratic");
        }
        if !d1.is_pure() || !d0.is_pure() {
            return malformed("dual part must be pure");
        }
        if d1.is_zero() && d0.is_zero() {
            return malformed("dual part vanishes, the motion is the identity");
        }
        Ok(QuadraticTranslation { xi, d1, d0 })
    }

    pub fn from_motion(c: &DqPoly) -> Result<Self> {
        if c.deg() != 2 || !c.is_monic() {
            return Err(Error::MalformedTranslational(
                "expected a monic quadratic".into(),
            ));
        }
        if c.coeffs().iter().any(|h| !h.primal.is_real()) {
            return Err(Error::MalformedTranslational(
                "primal part is not real".into(),
            ));
        }
        if !c.coeff(2).dual.is_zero() {
            return Err(Error::MalformedTranslational(
                "dual part has degree two".into(),
            ));
        }
        let xi = RPoly::new(c.coeffs().iter().map(|h| h.primal.w.clone()).collect());
        QuadraticTranslation::new(xi, c.coeff(1).dual, c.coeff(0).dual)
    }

    pub fn dual_poly(&self) -> QPoly {
        Poly::new(vec![self.d0.clone(), self.d1.clone()])
    }

    pub fn motion(&self) -> DqPoly {
        from_parts(&real_as_qpoly(&self.xi), &self.dual_poly())
    }

    /// `D * conj(D)`.
    pub fn dual_norm(&self) -> RPoly {
        qpoly_norm(&self.dual_poly())
    }

    pub fn xi_irreducible(&self) -> bool {
        let (c, b) = (self.xi.coeff(0), self.xi.coeff(1));
        (&b * &b - Rat::from_integer(4.into()) * c).is_negative()
    }
}

/// For irreducible `ξ`: true iff `ξ` divides `D conj(D)` (circular translation).
pub fn circular_translation_criterion(c1: &DqPoly) -> Result<bool> {
    let t = QuadraticTranslation::from_motion(c1)?;
    if !t.xi_irreducible() {
        return Err(Error::MalformedTranslational(
            "primal part is reducible".into(),
        ));
    }
    RPoly::divides(&t.xi, &t.dual_norm())
}

/// All factorizations `C = (t - h)(t - k)` of a circular translation.
///
/// With `q = -d1` the primal parts are `p` and `conj p` where
/// `conj p = q^{-1} d0`; the dual parts are `h2 = q - k2` and
/// `k2 = a (q × v) + b q`, `v` the vector part of `p`.
pub fn circular_translation_family(c1: &DqPoly) -> Result<FactorFamily> {
    if !circular_translation_criterion(c1)? {
        return Err(Error::NotCircular);
    }
    let t = QuadraticTranslation::from_motion(c1)?;
    let q = -t.d1.clone();
    let q_inv = q.inverse().ok_or(Error::NotCircular)?;
    let p = (&q_inv * &t.d0).conj();
    debug_assert!(real_as_qpoly(&t.xi).eval_right(&p).is_zero());
    let v = p.vector();
    let e_a = Quaternion::from_vector(cross(&q.vector(), &v));
    let e_b = q.clone();
    let h = AffineFactor {
        constant: DualQuaternion::new(p.clone(), q.clone()),
        directions: vec![
            DualQuaternion::from_dual(-e_a.clone()),
            DualQuaternion::from_dual(-e_b.clone()),
        ],
    };
    let k = AffineFactor {
        constant: DualQuaternion::from_primal(p.conj()),
        directions: vec![
            DualQuaternion::from_dual(e_a),
            DualQuaternion::from_dual(e_b),
        ],
    };
    FactorFamily::new(
        vec!["a".into(), "b".into()],
        vec![Rat::zero(), Rat::zero()],
        vec![h, k],
        RPoly::one(),
        c1.clone(),
    )
}

/// Factorizations of a quadratic translation with reducible primal part.
#[derive(Clone, Debug)]
pub enum ReducibleOutcome {
    /// Distinct roots: the unique commuting pair in both orders.
    TwoOrderings(Factorization, Factorization),
    /// Double root and `D = (t - λ) d1`: split `-d1 = h2 + k2` freely.
    ConstantDirectionFamily(FactorFamily),
    NoFactorization,
}

pub fn reducible_translation_factorizations(c1: &DqPoly) -> Result<ReducibleOutcome> {
    let t = QuadraticTranslation::from_motion(c1)?;
    let (d1, d0) = (&t.d1, &t.d0);
    let translation = |r: &Rat, d: Quaternion| {
        LinearFactor::new(DualQuaternion::new(Quaternion::real(r.clone()), d))
    };
    match quadratic_roots(&t.xi, Mode::Exact)? {
        QuadraticRoots::Distinct(h0, k0) => {
            // h2 + k2 = -d1,  k0 h2 + h0 k2 = d0
            let ordered = |h0: &Rat, k0: &Rat| -> Result<Factorization> {
                let h2 = (d0.clone() + d1.scale(h0)).scale(&(k0 - h0).recip());
                let k2 = -d1.clone() - h2.clone();
                Factorization::verified(
                    vec![translation(h0, h2)?, translation(k0, k2)?],
                    RPoly::one(),
                    c1,
                )
            };
            Ok(ReducibleOutcome::TwoOrderings(
                ordered(&h0, &k0)?,
                ordered(&k0, &h0)?,
            ))
        }
        QuadraticRoots::Double(lambda) => {
            if d1.is_zero() || *d0 != -d1.scale(&lambda) {
                return Ok(ReducibleOutcome::NoFactorization);
            }
            let basis =
                [Quaternion::i(), Quaternion::j(), Quaternion::k()].map(DualQuaternion::from_dual);
            let primal = Quaternion::real(lambda.clone());
            let h = AffineFactor {
                constant: DualQuaternion::new(primal.clone(), -d1.clone()),
                directions: basis.to_vec(),
            };
            let k = AffineFactor {
                constant: DualQuaternion::from_primal(primal),
                directions: basis.iter().map(|b| -b.clone()).collect(),
            };
            let family = FactorFamily::new(
                vec!["a".into(), "b".into(), "c".into()],
                vec![Rat::zero(), Rat::zero(), Rat::zero()],
                vec![h, k],
                RPoly::one(),
                c1.clone(),
            )?;
            Ok(ReducibleOutcome::ConstantDirectionFamily(family))
        }
        QuadraticRoots::ComplexPair => {
            Err(Error::Precondition("primal part is irreducible".into()))
        }
        QuadraticRoots::Float(..) => unreachable!("exact mode"),
    }
}

/// `ξ + ε D` from its parts; convenience for tests and callers.
pub fn translation_motion(xi: &RPoly, d: &QPoly) -> DqPoly {
    &embed_real(xi) + &from_parts(&QPoly::zero(), d)
}
