//! Darboux motions: the unique right factor, the circular-translation family
//! on its left, and the 7R linkage obtained with the multiplication trick.

use num_traits::Zero;

use super::{build_constraint_motion, classify_case, CaseKind, ConstraintInput};
use crate::dualquat::{DualQuaternion, Quaternion};
use crate::error::{Error, Result};
use crate::exactalg::{int, Matrix, Poly, RPoly, Rat};
use crate::factorization::{
    circular_translation_criterion, circular_translation_family, multiplication_trick,
    AffineFactor, FactorFamily, Factorization, LinearFactor,
};
use crate::linkage::{assemble, Linkage};
use crate::motionpoly::{
    conj_qpoly, dual_part, embed_real, qpoly_norm, quo_right_linear, real_as_qpoly, DqPoly, QPoly,
};

/// The right factor `t - (h + ε k2)` of a Darboux motion.
#[derive(Clone, Debug, PartialEq)]
pub struct DarbouxRightFactor {
    /// `k2 = a i + b j + c k`.
    pub k2: Quaternion,
    pub factor: LinearFactor,
    /// Left quotient `C1 = ξ + ε D` with `C = C1 (t - h - ε k2)`.
    pub left: DqPoly,
    /// The four equations `z0 x1 - z1 x0`, `z0 x2 - z2 x0`, `z1 x2 - z2 x1`,
    /// `h1 a + h2 b + h3 c` evaluated at `(a, b, c)`.
    pub residuals: [Rat; 4],
    pub delta: Rat,
}

impl DarbouxRightFactor {
    pub fn abc(&self) -> [Rat; 3] {
        [self.k2.x.clone(), self.k2.y.clone(), self.k2.z.clone()]
    }
}

/// `D` with `ξ + ε D` the left quotient of `C` by `t - h - ε k2`:
/// `D = (dual(C) + ξ k2) conj(P) / ξ`.
fn translation_dual(input: &ConstraintInput, c: &DqPoly, k2: &Quaternion) -> Result<QPoly> {
    let xi_q = real_as_qpoly(input.xi());
    let n = &(&dual_part(c) + &xi_q.right_mul(k2)) * &conj_qpoly(input.p());
    let mut comps: Vec<RPoly> = Vec::with_capacity(4);
    for k in 0..4 {
        let r = RPoly::new(
            n.coeffs()
                .iter()
                .map(|q| q.components()[k].clone())
                .collect(),
        );
        let (q, rem) = r.divrem(input.xi())?;
        if !rem.is_zero() {
            return Err(Error::NotAFactor);
        }
        comps.push(q);
    }
    let deg = comps.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    Ok(Poly::new(
        (0..deg)
            .map(|i| {
                Quaternion::from_components([
                    comps[0].coeff(i),
                    comps[1].coeff(i),
                    comps[2].coeff(i),
                    comps[3].coeff(i),
                ])
            })
            .collect(),
    ))
}

/// The circular-translation conditions on `(a, b, c)`.
fn system_residual(
    input: &ConstraintInput,
    c: &DqPoly,
    h: &Quaternion,
    x: &[Rat],
) -> Result<[Rat; 4]> {
    let k2 = Quaternion::new(Rat::zero(), x[0].clone(), x[1].clone(), x[2].clone());
    let z = qpoly_norm(&translation_dual(input, c, &k2)?);
    let xi = input.xi();
    let (z0, z1, z2) = (z.coeff(0), z.coeff(1), z.coeff(2));
    let (x0, x1, x2) = (xi.coeff(0), xi.coeff(1), xi.coeff(2));
    Ok([
        &z0 * &x1 - &z1 * &x0,
        &z0 * &x2 - &z2 * &x0,
        &z1 * &x2 - &z2 * &x1,
        &h.x * &x[0] + &h.y * &x[1] + &h.z * &x[2],
    ])
}

/// `4 (h2² + h3²) ((h0 y1 + y0)² + y1² (h1² + h2² + h3²))`.
pub fn darboux_delta(h: &Quaternion, eta: &RPoly) -> Rat {
    let (y0, y1) = (eta.coeff(0), eta.coeff(1));
    let s = &h.y * &h.y + &h.z * &h.z;
    let u = &h.w * &y1 + &y0;
    int(4) * &s * (&u * &u + &y1 * &y1 * (&h.x * &h.x + &s))
}

/// Closed forms `a = y1/2`, `b = (y0 h3 + y1 (h0 h3 - h1 h2)) / (2 (h2² + h3²))`.
pub fn darboux_closed_form_ab(h: &Quaternion, eta: &RPoly) -> (Rat, Rat) {
    let (y0, y1) = (eta.coeff(0), eta.coeff(1));
    let a = &y1 / int(2);
    let b =
        (&y0 * &h.z + &y1 * (&h.w * &h.z - &h.x * &h.y)) / (int(2) * (&h.y * &h.y + &h.z * &h.z));
    (a, b)
}

pub fn darboux_right_factor(input: &ConstraintInput) -> Result<DarbouxRightFactor> {
    match classify_case(input) {
        CaseKind::Darboux => {}
        CaseKind::VerticalDarboux => return Err(Error::VerticalInput),
        other => {
            return Err(Error::Precondition(format!(
                "expected a Darboux input, got {}",
                other.name()
            )))
        }
    }
    let c = build_constraint_motion(input)?.into_poly();
    let h = input.root().expect("Darboux inputs have linear P");
    let delta = darboux_delta(&h, input.eta());
    if delta.is_zero() {
        return Err(Error::NoSolution(
            "the circular-translation system is degenerate".into(),
        ));
    }

    // The conditions are affine in (a, b, c); any failure of that shows up
    // in the exact residual check below.
    system_residual(input, &c, &h, &[Rat::zero(), Rat::zero(), Rat::zero()])?;
    let residual = |x: &[Rat]| {
        system_residual(input, &c, &h, x)
            .map(|r| r.to_vec())
            .unwrap_or_default()
    };
    let (m, rhs) = Matrix::from_affine(3, residual);
    let sol = m.solve_affine(&rhs).ok_or_else(|| {
        Error::NoSolution("the circular-translation system is inconsistent".into())
    })?;
    if !sol.directions.is_empty() {
        return Err(Error::NoSolution(
            "the circular-translation system is underdetermined".into(),
        ));
    }
    let x = sol.particular;
    let residuals = system_residual(input, &c, &h, &x)?;
    if residuals.iter().any(|r| !r.is_zero()) {
        return Err(Error::NoSolution(
            "the computed dual part violates the circular-translation system".into(),
        ));
    }

    let k2 = Quaternion::new(Rat::zero(), x[0].clone(), x[1].clone(), x[2].clone());
    let factor = LinearFactor::new(DualQuaternion::new(h, k2.clone()))?;
    let left = quo_right_linear(&c, factor.h())?;
    if !circular_translation_criterion(&left)? {
        return Err(Error::NoSolution(
            "left quotient is not a circular translation".into(),
        ));
    }
    Ok(DarbouxRightFactor {
        k2,
        factor,
        left,
        residuals,
        delta,
    })
}

/// All factorizations `C = (t - g1)(t - g2)(t - h - ε k2)`.
pub fn darboux_family(input: &ConstraintInput) -> Result<FactorFamily> {
    let right = darboux_right_factor(input)?;
    let left = circular_translation_family(&right.left)?;
    let n = left.parameters().len();
    let mut factors = left.factors().to_vec();
    factors.push(AffineFactor::fixed(right.factor.h().clone(), n));
    FactorFamily::new(
        left.parameters().to_vec(),
        left.particular().to_vec(),
        factors,
        RPoly::one(),
        build_constraint_motion(input)?.into_poly(),
    )
}

/// The 7R linkage: `Q1 Q2 Q3 = C` and `Q7 Q6^2 Q5 Q4 = ξ C`.
#[derive(Clone, Debug, PartialEq)]
pub struct Darboux7R {
    pub right: DarbouxRightFactor,
    pub family: FactorFamily,
    pub chain_a: Factorization,
    pub chain_b: Factorization,
    pub linkage: Linkage,
}

impl Darboux7R {
    /// `Q1, ..., Q7` in loop order.
    pub fn joints(&self) -> Vec<LinearFactor> {
        self.linkage
            .loop_joints()
            .into_iter()
            .map(|j| j.factor.clone())
            .collect()
    }
}

/// Uses the particular members of both families: the left factors of the
/// circular translation and the doubled middle factor of the trick chain
/// then have vanishing dual part where possible.
pub fn darboux_7r(input: &ConstraintInput) -> Result<Darboux7R> {
    let right = darboux_right_factor(input)?;
    let family = darboux_family(input)?;
    let chain_a = family.realize_particular()?;

    // C = (ξ - εηi) P, so the trick on ξ - εηi followed by P gives ξ C.
    let trick = multiplication_trick(&input.translation_part())?;
    let mut factors = trick.realize_particular()?.factors().to_vec();
    factors.push(LinearFactor::new(DualQuaternion::from_primal(
        input.root().expect("linear P"),
    ))?);
    let c = build_constraint_motion(input)?.into_poly();
    let chain_b = Factorization::verified(factors, RPoly::one(), &(&embed_real(input.xi()) * &c))?;

    let linkage = assemble(&chain_a, &chain_b)?;
    Ok(Darboux7R {
        right,
        family,
        chain_a,
        chain_b,
        linkage,
    })
}
