//! JSON and CSV wire formats.
//!
//! Rationals travel as `"p/q"` strings (`"p"` for integers), dual
//! quaternions as 8-arrays `[w, x, y, z, εw, εx, εy, εz]`, quaternions as
//! 4-arrays and polynomials as ascending coefficient arrays.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dualquat::{DualQuaternion, JointKind, Quaternion, Vec3};
use crate::error::{Error, Result};
use crate::exactalg::{fmt_decimal, fmt_rat, parse_rat, Poly, RPoly, Rat};
use crate::factorization::{AffineFactor, FactorFamily, Factorization, LinearFactor};
use crate::linkage::{Joint, Linkage};
use crate::motionpoly::{DqPoly, MotionPoly, QPoly};
use crate::synthesis::ConstraintInput;

pub type DqWire = [String; 8];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstraintWire {
    #[serde(rename = "P")]
    pub p: Vec<[String; 4]>,
    pub xi: Vec<String>,
    pub eta: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorWire {
    pub h: DqWire,
    pub kind: JointKind,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorizationWire {
    pub real_cofactor: Vec<String>,
    pub factors: Vec<FactorWire>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffineWire {
    pub constant: DqWire,
    pub directions: Vec<DqWire>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyWire {
    pub parameters: Vec<String>,
    pub particular: BTreeMap<String, String>,
    pub factors: Vec<AffineWire>,
    pub real_cofactor: Vec<String>,
    pub source: Vec<DqWire>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JointWire {
    pub h: DqWire,
    pub kind: JointKind,
    #[serde(default = "one")]
    pub multiplicity: usize,
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinkageWire {
    pub chain_a: Vec<JointWire>,
    pub chain_b: Vec<JointWire>,
    #[serde(default)]
    pub annotations: Vec<String>,
}

fn rats(xs: &[String]) -> Result<Vec<Rat>> {
    xs.iter().map(|s| parse_rat(s)).collect()
}

pub fn dq_to_wire(h: &DualQuaternion) -> DqWire {
    h.components().map(|c| fmt_rat(&c))
}

pub fn dq_from_wire(w: &DqWire) -> Result<DualQuaternion> {
    let v = rats(w)?;
    Ok(DualQuaternion::from_components(
        v.try_into().expect("eight entries"),
    ))
}

pub fn rpoly_to_wire(p: &RPoly) -> Vec<String> {
    p.coeffs().iter().map(fmt_rat).collect()
}

pub fn rpoly_from_wire(w: &[String]) -> Result<RPoly> {
    Ok(RPoly::new(rats(w)?))
}

pub fn motion_to_wire(c: &DqPoly) -> Vec<DqWire> {
    c.coeffs().iter().map(dq_to_wire).collect()
}

pub fn motion_from_wire(w: &[DqWire]) -> Result<DqPoly> {
    Ok(Poly::new(
        w.iter().map(dq_from_wire).collect::<Result<_>>()?,
    ))
}

pub fn constraint_to_wire(c: &ConstraintInput) -> ConstraintWire {
    ConstraintWire {
        p: c.p()
            .coeffs()
            .iter()
            .map(|q| q.components().map(fmt_rat))
            .collect(),
        xi: rpoly_to_wire(c.xi()),
        eta: rpoly_to_wire(c.eta()),
    }
}

pub fn constraint_from_wire(w: &ConstraintWire) -> Result<ConstraintInput> {
    let p: QPoly = Poly::new(
        w.p.iter()
            .map(|q| {
                Ok(Quaternion::from_components(
                    rats(q)?.try_into().expect("four entries"),
                ))
            })
            .collect::<Result<_>>()?,
    );
    ConstraintInput::new(p, rpoly_from_wire(&w.xi)?, rpoly_from_wire(&w.eta)?)
}

pub fn factorization_to_wire(f: &Factorization) -> FactorizationWire {
    FactorizationWire {
        real_cofactor: rpoly_to_wire(f.real_cofactor()),
        factors: f
            .factors()
            .iter()
            .map(|l| FactorWire {
                h: dq_to_wire(l.h()),
                kind: l.kind(),
            })
            .collect(),
    }
}

fn factor_from_wire(h: &DqWire, kind: JointKind) -> Result<LinearFactor> {
    let f = LinearFactor::new(dq_from_wire(h)?)?;
    if f.kind() != kind {
        return Err(Error::Parse(format!(
            "joint kind {kind:?} does not match its coefficient"
        )));
    }
    Ok(f)
}

/// Rebuilds a factorization; the product is recomputed, not trusted.
pub fn factorization_from_wire(w: &FactorizationWire) -> Result<Factorization> {
    let factors = w
        .factors
        .iter()
        .map(|f| factor_from_wire(&f.h, f.kind))
        .collect::<Result<Vec<_>>>()?;
    let cofactor = rpoly_from_wire(&w.real_cofactor)?;
    let product = factors
        .iter()
        .fold(DqPoly::one(), |acc, f| &acc * &f.poly())
        .mul_real(&cofactor);
    Factorization::verified(factors, cofactor, &product)
}

pub fn family_to_wire(f: &FactorFamily) -> FamilyWire {
    FamilyWire {
        parameters: f.parameters().to_vec(),
        particular: f
            .parameters()
            .iter()
            .cloned()
            .zip(f.particular().iter().map(fmt_rat))
            .collect(),
        factors: f
            .factors()
            .iter()
            .map(|a| AffineWire {
                constant: dq_to_wire(&a.constant),
                directions: a.directions.iter().map(dq_to_wire).collect(),
            })
            .collect(),
        real_cofactor: rpoly_to_wire(f.real_cofactor()),
        source: motion_to_wire(f.source()),
    }
}

/// Rebuilds and re-verifies a family against its source polynomial.
pub fn family_from_wire(w: &FamilyWire) -> Result<FactorFamily> {
    let particular = w
        .parameters
        .iter()
        .map(|p| {
            let v = w
                .particular
                .get(p)
                .ok_or_else(|| Error::Parse(format!("missing particular value for {p}")))?;
            parse_rat(v)
        })
        .collect::<Result<Vec<_>>>()?;
    let factors = w
        .factors
        .iter()
        .map(|a| {
            Ok(AffineFactor {
                constant: dq_from_wire(&a.constant)?,
                directions: a
                    .directions
                    .iter()
                    .map(dq_from_wire)
                    .collect::<Result<_>>()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    FactorFamily::new(
        w.parameters.clone(),
        particular,
        factors,
        rpoly_from_wire(&w.real_cofactor)?,
        motion_from_wire(&w.source)?,
    )
}

fn joint_to_wire(j: &Joint) -> JointWire {
    JointWire {
        h: dq_to_wire(j.factor.h()),
        kind: j.factor.kind(),
        multiplicity: j.multiplicity,
    }
}

fn joint_from_wire(w: &JointWire) -> Result<Joint> {
    Ok(Joint {
        factor: factor_from_wire(&w.h, w.kind)?,
        multiplicity: w.multiplicity,
    })
}

pub fn linkage_to_wire(l: &Linkage) -> LinkageWire {
    LinkageWire {
        chain_a: l.chain_a().iter().map(joint_to_wire).collect(),
        chain_b: l.chain_b().iter().map(joint_to_wire).collect(),
        annotations: l.annotations().to_vec(),
    }
}

/// Rebuilds a linkage without assuming it closes; see
/// [`Linkage::closure_check`].
pub fn linkage_from_wire(w: &LinkageWire) -> Result<Linkage> {
    let chain = |c: &[JointWire]| c.iter().map(joint_from_wire).collect::<Result<Vec<_>>>();
    Linkage::new(
        chain(&w.chain_a)?,
        chain(&w.chain_b)?,
        w.annotations.clone(),
    )
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_motion(text: &str) -> Result<MotionPoly> {
    MotionPoly::new(motion_from_wire(&parse_json::<Vec<DqWire>>(text)?)?)
}

pub fn parse_constraint(text: &str) -> Result<ConstraintInput> {
    constraint_from_wire(&parse_json(text)?)
}

pub fn parse_linkage(text: &str) -> Result<Linkage> {
    linkage_from_wire(&parse_json(text)?)
}

pub fn parse_factorization(text: &str) -> Result<Factorization> {
    factorization_from_wire(&parse_json(text)?)
}

pub fn parse_family(text: &str) -> Result<FactorFamily> {
    family_from_wire(&parse_json(text)?)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("wire types serialize")
}

/// How numbers are rendered in CSV output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Render {
    Rational,
    Decimal(usize),
}

impl Render {
    pub fn rat(self, r: &Rat) -> String {
        match self {
            Render::Rational => fmt_rat(r),
            Render::Decimal(d) => fmt_decimal(r, d),
        }
    }
}

/// `t,x,y,z` rows with a header line.
pub fn trajectory_csv(ts: &[Rat], points: &[Vec3], render: Render) -> String {
    let mut out = String::from("t,x,y,z\n");
    for (t, p) in ts.iter().zip(points) {
        out.push_str(&format!(
            "{},{},{},{}\n",
            render.rat(t),
            render.rat(&p[0]),
            render.rat(&p[1]),
            render.rat(&p[2])
        ));
    }
    out
}
