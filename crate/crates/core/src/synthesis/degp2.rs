//! `deg P = 2`: the six factorizations and their admissible pairings.

use super::{
    build_constraint_motion, classify_case, translation_factor, CaseKind, ConstraintInput,
};
use crate::dualquat::DualQuaternion;
use crate::error::{Error, Result};
use crate::exactalg::{quadratic_factor_decomposition, Mode, RPoly};
use crate::factorization::{
    factor_with_order, qpoly_two_factorizations, Factorization, LinearFactor,
};
use crate::linkage::{assemble, Linkage};
use crate::motionpoly::qpoly_norm;

/// The six factorizations of `C = ξ P - ε η i P`, with `ξ^2`, `M2`, `M3`
/// the norm factors and `P conj(P) = M2 M3`.
///
/// * `A`, `A'`: `(ξ - εηi)` times the two factorizations of `P`.
/// * `B`, `B'`: translation on the right, consuming `ξ^2`.
/// * `C`, `C'`: translation in the middle; same right factor as `A`, `A'`.
#[derive(Clone, Debug, PartialEq)]
pub struct SixPack {
    pub a: Factorization,
    pub a_prime: Factorization,
    pub b: Factorization,
    pub b_prime: Factorization,
    pub c: Factorization,
    pub c_prime: Factorization,
}

impl SixPack {
    pub fn labeled(&self) -> [(&'static str, &Factorization); 6] {
        [
            ("A", &self.a),
            ("A'", &self.a_prime),
            ("B", &self.b),
            ("B'", &self.b_prime),
            ("C", &self.c),
            ("C'", &self.c_prime),
        ]
    }

    pub fn get(&self, label: &str) -> Option<&Factorization> {
        self.labeled()
            .into_iter()
            .find(|(l, _)| *l == label)
            .map(|(_, f)| f)
    }
}

pub fn degp2_sixpack(input: &ConstraintInput) -> Result<SixPack> {
    if classify_case(input) != CaseKind::DegP2 {
        return Err(Error::Precondition(
            "input is not of degree-two type".into(),
        ));
    }
    let motion = build_constraint_motion(input)?;
    let c = motion.poly();
    let (pf, pf_prime) = qpoly_two_factorizations(input.p())?;
    if pf == pf_prime {
        return Err(Error::DegenerateP);
    }
    let t = translation_factor(input)?;
    let with_translation = |f: &Factorization| -> Result<Factorization> {
        let mut factors = vec![t.clone()];
        for lf in f.factors() {
            factors.push(LinearFactor::new(DualQuaternion::from_primal(
                lf.h().primal.clone(),
            ))?);
        }
        Factorization::verified(factors, RPoly::one(), c)
    };
    let m1 = input.xi() * input.xi();
    let split = quadratic_factor_decomposition(&qpoly_norm(input.p()), Mode::Exact)?;
    let (m2, m3) = (split[0].clone(), split[1].clone());
    let order = |o: [&RPoly; 3]| factor_with_order(&motion, &o.map(Clone::clone));
    Ok(SixPack {
        a: with_translation(&pf)?,
        a_prime: with_translation(&pf_prime)?,
        b: order([&m1, &m2, &m3])?,
        b_prime: order([&m1, &m3, &m2])?,
        c: order([&m2, &m1, &m3])?,
        c_prime: order([&m3, &m1, &m2])?,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Pairing {
    pub label: String,
    pub linkage: Linkage,
}

/// Loop from two labeled factorizations; pairs sharing a first or last
/// factor are rejected.
pub fn pair(six: &SixPack, first: &str, second: &str) -> Result<Linkage> {
    let get = |l: &str| {
        six.get(l)
            .ok_or_else(|| Error::Precondition(format!("unknown factorization label {l}")))
    };
    assemble(get(first)?, get(second)?)
}

/// The four essentially different admissible pairings.
pub fn admissible_pairings(six: &SixPack) -> Result<Vec<Pairing>> {
    let mut out = Vec::new();
    for (x, y) in [("A", "B"), ("A", "C'"), ("B", "C'"), ("C", "C'")] {
        let mut linkage = pair(six, x, y)?;
        if (x, y) == ("A", "C'") {
            linkage = linkage.with_annotation(
                "three consecutive revolute axes meet in the origin and may be viewed as a spherical joint (PSPR); \
                 collapsing it to one revolute joint changes the end effector motion",
            );
        }
        out.push(Pairing {
            label: format!("{x}-{y}"),
            linkage,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::degp2;
    use super::*;
    use crate::dualquat::{angle_cos_squared, axis_of, JointKind, Quaternion};
    use crate::exactalg::{rat, Poly};
    use crate::linkage::geometric_report;
    use crate::motionpoly::{conj_poly, MotionPoly};

    #[test]
    fn six_factorizations_with_signatures() {
        let six = degp2_sixpack(&degp2()).unwrap();
        let sigs: Vec<String> = six.labeled().iter().map(|(_, f)| f.signature()).collect();
        assert_eq!(sigs, ["PRR", "PRR", "RRP", "RRP", "RPR", "RPR"]);
        let c = build_constraint_motion(&degp2()).unwrap();
        for (_, f) in six.labeled() {
            assert_eq!(f.expand(), *c.poly());
        }
        assert_eq!(six.b.factors()[2].kind(), JointKind::Translational);
        // Shared factors that make some pairings dangle.
        assert_eq!(six.a.factors()[2], six.c.factors()[2]);
        assert_eq!(six.a_prime.factors()[2], six.c_prime.factors()[2]);
        assert_eq!(six.b.factors()[0], six.c.factors()[0]);
        assert_eq!(six.b.factors()[2], six.b_prime.factors()[2]);
    }

    #[test]
    fn pairings() {
        let six = degp2_sixpack(&degp2()).unwrap();
        assert!(matches!(pair(&six, "A", "A'"), Err(Error::DanglingLink(_))));
        let sigs: Vec<String> = admissible_pairings(&six)
            .unwrap()
            .iter()
            .map(|p| p.linkage.signature())
            .collect();
        assert_eq!(sigs, ["PRRPRR", "PRRRPR", "RRPRPR", "RPRRPR"]);

        let ab = geometric_report(&pair(&six, "A", "B").unwrap());
        assert!(ab.same_parallel_class(1, 5) && ab.same_parallel_class(2, 4));
        assert!(ab.concurrent(&[1, 2]).is_some());

        let ac = geometric_report(&pair(&six, "A", "C'").unwrap());
        assert_eq!(ac.concurrent(&[1, 2, 3]), Some(&crate::dualquat::zero3()));

        let cc = geometric_report(&pair(&six, "C", "C'").unwrap());
        assert!(cc.concurrent(&[2, 3]).is_some());
    }

    #[test]
    fn rprp_and_bennett_consequences() {
        let six = degp2_sixpack(&degp2()).unwrap();
        let dir =
            |f: &Factorization, i: usize| axis_of(f.factors()[i].h()).unwrap().direction().clone();
        let parallel = |u: [crate::exactalg::Rat; 3], v: [crate::exactalg::Rat; 3]| {
            crate::dualquat::is_zero3(&crate::dualquat::cross(&u, &v))
        };
        // h1 ∥ r1, h1' ∥ r1', h2 ∥ r2, h2' ∥ r2'
        assert!(parallel(dir(&six.a, 1), dir(&six.b, 0)));
        assert!(parallel(dir(&six.a_prime, 1), dir(&six.b_prime, 0)));
        assert!(parallel(dir(&six.a, 2), dir(&six.b, 1)));
        assert!(parallel(dir(&six.a_prime, 2), dir(&six.b_prime, 1)));
        for f in [&six.a, &six.a_prime] {
            for i in 1..3 {
                assert!(axis_of(f.factors()[i].h())
                    .unwrap()
                    .line()
                    .unwrap()
                    .passes_through_origin());
            }
        }
        assert!(parallel(dir(&six.a, 0), [rat(1, 1), rat(0, 1), rat(0, 1)]));
        // ∠(i, r1) = ∠(r1, s2)
        let i = [rat(1, 1), rat(0, 1), rat(0, 1)];
        for f in [&six.c, &six.c_prime] {
            let (r1, s2) = (dir(f, 0), dir(f, 1));
            assert_eq!(
                angle_cos_squared(&i, &r1).unwrap(),
                angle_cos_squared(&r1, &s2).unwrap()
            );
        }
        // Bennett quadruple: (t - r1)(t - r2) = (t - r1')(t - r2').
        let left = |f: &Factorization| &f.factors()[0].poly() * &f.factors()[1].poly();
        assert_eq!(left(&six.b), left(&six.b_prime));
        let closure = &left(&six.b) * &conj_poly(&left(&six.b_prime));
        assert!(closure.coeffs().iter().all(DualQuaternion::is_real));
        let _ = MotionPoly::new(left(&six.b)).unwrap();
    }

    #[test]
    fn degenerate_p() {
        // P = (t - i)^2 has a single factorization.
        let p = &Poly::linear(Quaternion::i()) * &Poly::linear(Quaternion::i());
        let input =
            ConstraintInput::new(p, RPoly::from_ints(&[1, 1]), RPoly::from_ints(&[1])).unwrap();
        assert_eq!(degp2_sixpack(&input), Err(Error::DegenerateP));
    }
}
