//! `deg P = 1` with reducible `ξ`: RPRP/Bennett motions for linear `ξ`, and
//! the two-degree-of-freedom case for a reducible quadratic `ξ`.

use super::{
    build_constraint_motion, classify_case, translation_factor, CaseKind, ConstraintInput,
};
use crate::dualquat::DualQuaternion;
use crate::error::{Error, Result};
use crate::exactalg::RPoly;
use crate::factorization::{
    all_factorizations, reducible_translation_factorizations, AllFactorizations, Factorization,
    LinearFactor, ReducibleOutcome,
};
use crate::linkage::{assemble, Linkage};

/// `C = (ξ - εηi) P` and whatever the generic algorithm adds; two distinct
/// factorizations close to an RPRP (or Bennett) loop.
#[derive(Clone, Debug)]
pub struct DegP1Linear {
    pub trivial: Factorization,
    pub generic: AllFactorizations,
    pub linkage: Option<Linkage>,
}

pub fn degp1_linear(input: &ConstraintInput) -> Result<DegP1Linear> {
    if classify_case(input) != CaseKind::DegP1XiLinear {
        return Err(Error::Precondition("expected deg P = deg xi = 1".into()));
    }
    let c = build_constraint_motion(input)?;
    let p = LinearFactor::new(DualQuaternion::from_primal(input.root().expect("linear P")))?;
    let trivial =
        Factorization::verified(vec![translation_factor(input)?, p], RPoly::one(), c.poly())?;
    let generic = all_factorizations(&c)?;
    let linkage = generic
        .factorizations
        .iter()
        .find_map(|f| assemble(&trivial, f).ok())
        .map(|l| l.with_annotation("RPRP limit of a Bennett linkage"));
    Ok(DegP1Linear {
        trivial,
        generic,
        linkage,
    })
}

/// Factor structure of `C = (ξ - εηi) P` for reducible quadratic `ξ`.
/// Every loop built from it has four prismatic and two parallel revolute
/// joints and two degrees of freedom, so no 1-dof linkage is returned.
#[derive(Clone, Debug)]
pub struct DegP1Reducible {
    pub translation: ReducibleOutcome,
    pub rotation: LinearFactor,
    pub diagnostic: String,
}

pub fn degp1_reducible(input: &ConstraintInput) -> Result<DegP1Reducible> {
    if classify_case(input) != CaseKind::DegP1XiReducible {
        return Err(Error::Precondition(
            "expected deg P = 1 with reducible quadratic xi".into(),
        ));
    }
    let translation = reducible_translation_factorizations(&input.translation_part())?;
    let rotation = LinearFactor::new(DualQuaternion::from_primal(input.root().expect("linear P")))?;
    Ok(DegP1Reducible {
        translation,
        rotation,
        diagnostic: "reducible xi: linkages have four prismatic and two parallel revolute joints, \
                     two degrees of freedom and infinitely many straight line trajectories"
            .into(),
    })
}
