//! Synthesis of linkages whose coupler point at the origin moves on the
//! first coordinate axis.
//!
//! Every such rational motion of low degree is `C = ξ P - ε η i P` with
//! monic real `ξ`, monic quaternion polynomial `P` and real `η ≠ 0`; the
//! origin then travels along `2η/ξ · i`.

mod darboux;
mod degp1;
mod degp2;

use num_traits::Zero;

use crate::dualquat::{act_on_point, vec3, zero3, DualQuaternion, Quaternion, Vec3};
use crate::error::{Error, Result};
use crate::exactalg::{int, quadratic_roots, Coeff, Mode, QuadraticRoots, RPoly, Rat};
use crate::factorization::LinearFactor;
use crate::motionpoly::{
    dual_part, embed_quaternion, from_parts, primal_part, qpoly_norm, real_as_qpoly, real_content,
    DqPoly, MotionPoly, QPoly,
};

pub use darboux::{
    darboux_7r, darboux_closed_form_ab, darboux_delta, darboux_family, darboux_right_factor,
    Darboux7R, DarbouxRightFactor,
};
pub use degp1::{degp1_linear, degp1_reducible, DegP1Linear, DegP1Reducible};
pub use degp2::{admissible_pairings, degp2_sixpack, pair, Pairing, SixPack};

/// The data `(P, ξ, η)` of a straight-line constraint motion.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintInput {
    p: QPoly,
    xi: RPoly,
    eta: RPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseKind {
    DegP2,
    DegP1XiLinear,
    DegP1XiReducible,
    Darboux,
    VerticalDarboux,
    NonFactorableCubic,
}

impl CaseKind {
    pub fn name(self) -> &'static str {
        match self {
            CaseKind::DegP2 => "DegP2",
            CaseKind::DegP1XiLinear => "DegP1XiLinear",
            CaseKind::DegP1XiReducible => "DegP1XiReducible",
            CaseKind::Darboux => "Darboux",
            CaseKind::VerticalDarboux => "VerticalDarboux",
            CaseKind::NonFactorableCubic => "NonFactorableCubic",
        }
    }
}

impl ConstraintInput {
    pub fn new(p: QPoly, xi: RPoly, eta: RPoly) -> Result<Self> {
        let violation = |m: &str| Err(Error::ConstraintViolation(m.into()));
        if eta.is_zero() {
            return violation("eta must not be zero");
        }
        if xi.is_zero() || !xi.is_monic() {
            return violation("xi must be monic");
        }
        if p.is_zero() || !p.is_monic() {
            return violation("P must be monic");
        }
        if eta.deg() >= xi.deg() {
            return violation("deg eta < deg xi");
        }
        if p.deg() < 1 {
            return violation("deg P >= 1");
        }
        if p.deg() + xi.deg() > 3 {
            return violation("deg P + deg xi <= 3");
        }
        if p.coeffs().iter().all(Quaternion::is_real) {
            return violation("P must not be a real polynomial");
        }
        Ok(ConstraintInput { p, xi, eta })
    }

    pub fn p(&self) -> &QPoly {
        &self.p
    }

    pub fn xi(&self) -> &RPoly {
        &self.xi
    }

    pub fn eta(&self) -> &RPoly {
        &self.eta
    }

    /// `ξ - ε η i`, the translational left factor of `C`.
    pub fn translation_part(&self) -> DqPoly {
        let eta_i = self.eta.map(|c| Quaternion::i().scale(&-c.clone()));
        from_parts(&real_as_qpoly(&self.xi), &eta_i)
    }

    /// `P = t - h` for linear `P`.
    pub fn root(&self) -> Option<Quaternion> {
        (self.p.deg() == 1).then(|| -self.p.coeff(0))
    }
}

/// `C = ξ P - ε η i P`.
pub fn build_constraint_motion(input: &ConstraintInput) -> Result<MotionPoly> {
    let primal = &real_as_qpoly(&input.xi) * &input.p;
    let dual =
        (&real_as_qpoly(&input.eta) * &input.p.left_mul(&Quaternion::i())).map(|q| -q.clone());
    MotionPoly::new(from_parts(&primal, &dual))
}

/// `(2η(t)/ξ(t), 0, 0)`, checked against the point action of `C(t)`.
pub fn origin_trajectory(input: &ConstraintInput, t: &Rat) -> Result<Vec3> {
    let xi = input.xi.eval(t);
    if xi.is_zero() {
        return Err(Error::PoleAtParameter);
    }
    let formula = vec3(int(2) * input.eta.eval(t) / xi, int(0), int(0));
    let c = build_constraint_motion(input)?;
    let value: DualQuaternion = c.poly().eval_real(t);
    let acted = act_on_point(&value, &zero3()).map_err(|_| Error::PoleAtParameter)?;
    if acted != formula {
        return Err(Error::ConstraintViolation(format!(
            "origin trajectory mismatch at t = {t}"
        )));
    }
    Ok(formula)
}

pub fn classify_case(input: &ConstraintInput) -> CaseKind {
    if input.p.deg() == 2 {
        return CaseKind::DegP2;
    }
    if input.xi.deg() == 1 {
        return CaseKind::DegP1XiLinear;
    }
    match quadratic_roots(&input.xi, Mode::Exact) {
        Ok(QuadraticRoots::ComplexPair) => {}
        _ => return CaseKind::DegP1XiReducible,
    }
    if qpoly_norm(&input.p) != input.xi {
        return CaseKind::NonFactorableCubic;
    }
    let h = input.root().expect("linear P");
    if h.y.is_zero() && h.z.is_zero() {
        CaseKind::VerticalDarboux
    } else {
        CaseKind::Darboux
    }
}

/// Recovers `(P, ξ, η)` from `C = ξ P - ε η i P`, taking `ξ` as the real
/// content of the primal part.
pub fn recognize(c: &DqPoly) -> Option<ConstraintInput> {
    if !c.is_monic() {
        return None;
    }
    let (xi, p) = real_content(&embed_quaternion(&primal_part(c)));
    let p = primal_part(&p);
    if xi.deg() == 0 {
        return None;
    }
    // i * dual(C) = η P, and the scalar part of P is monic.
    let n = dual_part(c).left_mul(&Quaternion::i());
    let scalar = |q: &QPoly| RPoly::new(q.coeffs().iter().map(|h| h.w.clone()).collect());
    let (eta, rem) = scalar(&n).divrem(&scalar(&p)).ok()?;
    if !rem.is_zero() || &real_as_qpoly(&eta) * &p != n {
        return None;
    }
    let input = ConstraintInput::new(p, xi, eta).ok()?;
    (build_constraint_motion(&input).ok()?.poly() == c).then_some(input)
}

/// Everything the pipeline produces for one input.
#[derive(Clone, Debug)]
pub enum Synthesis {
    DegP2 {
        six: SixPack,
        linkages: Vec<Pairing>,
    },
    DegP1Linear(DegP1Linear),
    DegP1Reducible(Box<DegP1Reducible>),
    Darboux(Box<Darboux7R>),
}

/// Runs the case-appropriate pipeline. The two cubic cases without linear
/// factorizations are reported as `NoFactorization`.
pub fn synthesize(input: &ConstraintInput) -> Result<Synthesis> {
    match classify_case(input) {
        CaseKind::DegP2 => {
            let six = degp2_sixpack(input)?;
            let linkages = admissible_pairings(&six)?;
            Ok(Synthesis::DegP2 { six, linkages })
        }
        CaseKind::DegP1XiLinear => Ok(Synthesis::DegP1Linear(degp1_linear(input)?)),
        CaseKind::DegP1XiReducible => {
            Ok(Synthesis::DegP1Reducible(Box::new(degp1_reducible(input)?)))
        }
        CaseKind::Darboux => Ok(Synthesis::Darboux(Box::new(darboux_7r(input)?))),
        CaseKind::VerticalDarboux => Err(Error::NoFactorization(
            "vertical Darboux motion: C admits no factorization into linear motion polynomials"
                .into(),
        )),
        CaseKind::NonFactorableCubic => Err(Error::NoFactorization(
            "xi differs from P conj(P): C has no linear right factor".into(),
        )),
    }
}

/// `t - h` for the translation `ξ - ε η i` with linear `ξ` and constant `η`.
pub(crate) fn translation_factor(input: &ConstraintInput) -> Result<LinearFactor> {
    debug_assert!(input.xi.deg() == 1 && input.eta.deg() == 0);
    let h = DualQuaternion::new(
        Quaternion::real(-input.xi.coeff(0)),
        Quaternion::i().scale(&input.eta.coeff(0)),
    );
    LinearFactor::new(h)
}
