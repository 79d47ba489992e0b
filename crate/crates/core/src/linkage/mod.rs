//! Single-loop linkages assembled from two factorizations of one motion.

mod report;
mod trajectory;

use num_traits::Zero;

use crate::dualquat::DualQuaternion;
use crate::error::{Error, Result};
use crate::exactalg::Rat;
use crate::factorization::{Factorization, LinearFactor};
use crate::motionpoly::{conj_poly, projective_equal, DqPoly};

pub use report::{geometric_report, AngleEquality, GeometricReport, HalfAngle};
pub use trajectory::{
    coplanarity_determinant, coupler_trajectory, planarity_test, sample_parameters,
    straight_line_test,
};

/// A joint traversed `multiplicity` times in a row by its chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Joint {
    pub factor: LinearFactor,
    pub multiplicity: usize,
}

impl Joint {
    pub fn single(factor: LinearFactor) -> Self {
        Joint {
            factor,
            multiplicity: 1,
        }
    }

    fn poly(&self) -> DqPoly {
        (0..self.multiplicity).fold(DqPoly::one(), |acc, _| &acc * &self.factor.poly())
    }
}

/// Two open chains between the base and the moving link. The loop visits
/// `chain_a` left to right and then `chain_b` right to left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linkage {
    chain_a: Vec<Joint>,
    chain_b: Vec<Joint>,
    annotations: Vec<String>,
}

/// Merges runs of equal consecutive factors into one joint.
fn joints_of(f: &Factorization) -> Vec<Joint> {
    let mut out: Vec<Joint> = Vec::new();
    for factor in f.factors() {
        match out.last_mut() {
            Some(j) if j.factor == *factor => j.multiplicity += 1,
            _ => out.push(Joint::single(factor.clone())),
        }
    }
    out
}

/// Joins two factorizations of the same motion into a closed loop.
pub fn assemble(f1: &Factorization, f2: &Factorization) -> Result<Linkage> {
    if !projective_equal(&f1.product(), &f2.product()) {
        return Err(Error::NotSameMotion);
    }
    let linkage = Linkage::new(joints_of(f1), joints_of(f2), vec![])?;
    for j in linkage.chain_a.iter().chain(&linkage.chain_b) {
        if j.multiplicity > 1 {
            let note = format!(
                "joint {} is traversed {} times in a row; its axis counts once",
                j.factor, j.multiplicity
            );
            return Ok(linkage.with_annotation(note));
        }
    }
    Ok(linkage)
}

/// `t - h` at a parameter value, as a displacement.
pub fn joint_displacement(f: &LinearFactor, t: &Rat) -> Result<DualQuaternion> {
    let v = DualQuaternion::real(t.clone()) - f.h().clone();
    if v.primal.is_zero() {
        return Err(Error::SingularParameter);
    }
    Ok(v)
}

impl Linkage {
    /// Builds a loop from explicit chains. Only the dangling-link rule is
    /// checked; use [`assemble`] or [`Linkage::closure_check`] for closure.
    pub fn new(chain_a: Vec<Joint>, chain_b: Vec<Joint>, annotations: Vec<String>) -> Result<Self> {
        let (Some(fa), Some(fb)) = (chain_a.first(), chain_b.first()) else {
            return Err(Error::Precondition("chains must not be empty".into()));
        };
        if fa.factor == fb.factor {
            return Err(Error::DanglingLink(
                "both chains start with the same factor".into(),
            ));
        }
        if chain_a.last().map(|j| &j.factor) == chain_b.last().map(|j| &j.factor) {
            return Err(Error::DanglingLink(
                "both chains end with the same factor".into(),
            ));
        }
        if chain_a.iter().chain(&chain_b).any(|j| j.multiplicity == 0) {
            return Err(Error::Precondition(
                "joint multiplicity must be positive".into(),
            ));
        }
        Ok(Linkage {
            chain_a,
            chain_b,
            annotations,
        })
    }

    pub fn with_annotation(mut self, note: impl Into<String>) -> Self {
        self.annotations.push(note.into());
        self
    }

    pub fn chain_a(&self) -> &[Joint] {
        &self.chain_a
    }

    pub fn chain_b(&self) -> &[Joint] {
        &self.chain_b
    }

    pub fn annotations(&self) -> &[String] {
        &self.annotations
    }

    /// Joints in loop order, each axis once.
    pub fn loop_joints(&self) -> Vec<&Joint> {
        self.chain_a
            .iter()
            .chain(self.chain_b.iter().rev())
            .collect()
    }

    pub fn joint_count(&self) -> usize {
        self.chain_a.len() + self.chain_b.len()
    }

    pub fn signature(&self) -> String {
        self.loop_joints()
            .iter()
            .map(|j| j.factor.kind().letter())
            .collect()
    }

    pub fn chain_polys(&self) -> (DqPoly, DqPoly) {
        let prod = |c: &[Joint]| c.iter().fold(DqPoly::one(), |acc, j| &acc * &j.poly());
        (prod(&self.chain_a), prod(&self.chain_b))
    }

    /// `chain_a(t) * conj(chain_b(t))` must be real at every sample, and as a
    /// polynomial.
    pub fn closure_check(&self, samples: &[Rat]) -> ClosureReport {
        let (a, b) = self.chain_polys();
        let loop_poly = &a * &conj_poly(&b);
        let symbolic =
            loop_poly.coeffs().iter().all(DualQuaternion::is_real) && !loop_poly.is_zero();
        let samples = samples
            .iter()
            .map(|t| {
                let value = |chain: &[Joint]| -> Option<DualQuaternion> {
                    let mut acc = DualQuaternion::real(Rat::from_integer(1.into()));
                    for j in chain {
                        let d = joint_displacement(&j.factor, t).ok()?;
                        for _ in 0..j.multiplicity {
                            acc = &acc * &d;
                        }
                    }
                    Some(acc)
                };
                match (value(&self.chain_a), value(&self.chain_b)) {
                    (Some(va), Some(vb)) => {
                        let v = &va * &vb.conj();
                        let mut residual = v.components();
                        residual[0] = Rat::zero();
                        ClosureSample {
                            t: t.clone(),
                            residual: Some(residual),
                        }
                    }
                    _ => ClosureSample {
                        t: t.clone(),
                        residual: None,
                    },
                }
            })
            .collect();
        ClosureReport { symbolic, samples }
    }
}

/// Non-scalar part of the loop product at one parameter; `None` when a
/// joint is singular there.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosureSample {
    pub t: Rat,
    pub residual: Option<[Rat; 8]>,
}

impl ClosureSample {
    pub fn closes(&self) -> bool {
        self.residual
            .as_ref()
            .is_some_and(|r| r.iter().all(Zero::is_zero))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosureReport {
    pub symbolic: bool,
    pub samples: Vec<ClosureSample>,
}

impl ClosureReport {
    /// Symbolic closure plus closure at every sample where all joints are
    /// regular.
    pub fn passed(&self) -> bool {
        self.symbolic
            && self
                .samples
                .iter()
                .all(|s| s.residual.is_none() || s.closes())
    }

    pub fn singular_samples(&self) -> usize {
        self.samples.iter().filter(|s| s.residual.is_none()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualquat::Quaternion;
    use crate::exactalg::{int, rat, RPoly};
    use crate::factorization::all_factorizations;
    use crate::motionpoly::MotionPoly;

    fn lf(c: [i64; 8]) -> LinearFactor {
        LinearFactor::new(DualQuaternion::from_ints(c)).unwrap()
    }

    fn bennett() -> (Factorization, Factorization) {
        let c = &lf([0, 1, 0, 0, 0, 0, 0, 0]).poly() * &lf([0, 0, 2, 0, 0, 0, 0, 1]).poly();
        let all = all_factorizations(&MotionPoly::new(c).unwrap()).unwrap();
        assert_eq!(all.factorizations.len(), 2);
        (all.factorizations[0].clone(), all.factorizations[1].clone())
    }

    #[test]
    fn bennett_loop_closes() {
        let (f, g) = bennett();
        let l = assemble(&f, &g).unwrap();
        assert_eq!(l.signature(), "RRRR");
        let samples: Vec<Rat> = (-10..10).map(|n| rat(n, 3)).collect();
        assert!(l.closure_check(&samples).passed());
    }

    #[test]
    fn dangling_and_mismatch() {
        let (f, _) = bennett();
        assert!(matches!(assemble(&f, &f), Err(Error::DanglingLink(_))));
        let other = Factorization::verified(
            vec![lf([0, 0, 0, 1, 0, 0, 0, 0])],
            RPoly::one(),
            &lf([0, 0, 0, 1, 0, 0, 0, 0]).poly(),
        )
        .unwrap();
        assert_eq!(assemble(&f, &other), Err(Error::NotSameMotion));
    }

    #[test]
    fn tampered_linkage_is_flagged() {
        let (f, g) = bennett();
        let l = assemble(&f, &g).unwrap();
        let mut a = l.chain_a().to_vec();
        let h = a[0].factor.h().clone()
            + DualQuaternion::from_dual(Quaternion::from_ints([0, 0, 0, 1]));
        a[0] = Joint::single(LinearFactor::new(h).unwrap());
        let bad = Linkage::new(a, l.chain_b().to_vec(), vec![]).unwrap();
        let report = bad.closure_check(&[int(0), int(1), rat(1, 2)]);
        assert!(!report.passed());
        assert!(!report.symbolic);
    }

    #[test]
    fn displacement_examples() {
        assert_eq!(
            joint_displacement(&lf([0, 1, 0, 0, 0, 0, 0, 0]), &int(0)).unwrap(),
            DualQuaternion::from_ints([0, -1, 0, 0, 0, 0, 0, 0])
        );
        let d = joint_displacement(&lf([0, 0, 0, 0, 0, 1, 0, 0]), &int(1)).unwrap();
        assert_eq!(d, DualQuaternion::from_ints([1, 0, 0, 0, 0, -1, 0, 0]));
        let moved = crate::dualquat::act_on_point(&d, &[int(0), int(0), int(0)]).unwrap();
        assert_eq!(moved, [int(2), int(0), int(0)]);
        let r = joint_displacement(&lf([0, 1, 0, 0, 0, 0, 0, 0]), &int(1)).unwrap();
        let moved = crate::dualquat::act_on_point(&r, &[int(0), int(1), int(0)]).unwrap();
        assert_eq!(crate::dualquat::dot(&moved, &moved), int(1));
        assert_eq!(moved[0], int(0));
        assert_eq!(
            joint_displacement(&lf([0, 0, 0, 0, 0, 1, 0, 0]), &int(0)).unwrap_err(),
            Error::SingularParameter
        );
    }
}
