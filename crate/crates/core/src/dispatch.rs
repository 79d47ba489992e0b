//! Factoring front end: the generic algorithm first, then the special
//! cases it cannot handle.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exactalg::{quadratic_factor_decomposition, Mode, RPoly};
use crate::factorization::{
    all_factorizations, approximate_factorization, circular_translation_criterion,
    circular_translation_family, factor_with_order, multiplication_trick,
    reducible_translation_factorizations, AllFactorizations, ApproxFactorization, FactorFamily,
    Factorization, QuadraticTranslation, ReducibleOutcome,
};
use crate::motionpoly::MotionPoly;
use crate::synthesis::{classify_case, darboux_7r, recognize, CaseKind, Darboux7R};

#[derive(Clone, Debug, Default)]
pub struct FactorRequest {
    /// One-based indices into the norm factor list; the first index is
    /// consumed first and gives the rightmost factor.
    pub order: Option<Vec<usize>>,
    /// Report every ordering rather than the first success.
    pub all: bool,
    pub mode: Mode,
}

#[derive(Clone, Debug)]
pub enum FactorOutcome {
    Generic(AllFactorizations),
    Approximate {
        norm_factors: Vec<RPoly>,
        results: Vec<ApproxFactorization>,
    },
    CircularTranslation(FactorFamily),
    TranslationOrderings(Factorization, Factorization),
    TranslationFamily(FactorFamily),
    Darboux(Box<Darboux7R>),
    /// Proven non-existence; a factorization of `ξ C` may still exist.
    NoFactorization {
        reason: String,
        trick: Option<FactorFamily>,
    },
    /// The generic algorithm failed and no special case applies.
    Unresolved(AllFactorizations),
}

#[derive(Clone, Debug)]
pub struct FactorReport {
    /// Human-readable dispatch path.
    pub path: Vec<String>,
    pub outcome: FactorOutcome,
}

impl FactorReport {
    pub fn factorization_exists(&self) -> bool {
        !matches!(self.outcome, FactorOutcome::NoFactorization { .. })
    }
}

fn ordered(norm: &[RPoly], order: &[usize]) -> Result<Vec<RPoly>> {
    if order.len() != norm.len()
        || !order.iter().all(|&i| (1..=norm.len()).contains(&i))
        || !order.iter().all_unique()
    {
        return Err(Error::Precondition(format!(
            "order must be a permutation of 1..={} (norm factors: {})",
            norm.len(),
            norm.iter().join(", ")
        )));
    }
    Ok(order.iter().map(|&i| norm[i - 1].clone()).collect())
}

pub fn factor(c: &MotionPoly, req: &FactorRequest) -> Result<FactorReport> {
    if !c.is_monic() {
        return Err(Error::Precondition(
            "motion polynomial must be monic".into(),
        ));
    }
    let mut path = Vec::new();
    if let Mode::Float(eps) = req.mode {
        let norm = quadratic_factor_decomposition(&c.norm_poly(), req.mode)?;
        let orders: Vec<Vec<RPoly>> = match &req.order {
            Some(o) => vec![ordered(&norm, o)?],
            None => (0..norm.len())
                .permutations(norm.len())
                .map(|p| p.iter().map(|&i| norm[i].clone()).collect())
                .unique()
                .collect(),
        };
        let mut results = Vec::new();
        let mut last_err = None;
        for o in &orders {
            match approximate_factorization(c, o, eps) {
                Ok(r) => results.push(r),
                Err(e) => last_err = Some(e),
            }
            if !req.all && !results.is_empty() {
                break;
            }
        }
        if results.is_empty() {
            return Err(last_err.unwrap_or(Error::Numerical("no ordering succeeded".into())));
        }
        path.push(format!("float mode, tolerance {eps:e}"));
        return Ok(FactorReport {
            path,
            outcome: FactorOutcome::Approximate {
                norm_factors: norm,
                results,
            },
        });
    }

    let mut generic = match &req.order {
        Some(o) => {
            let norm = quadratic_factor_decomposition(&c.norm_poly(), Mode::Exact)?;
            let order = ordered(&norm, o)?;
            let (factorizations, failures) = match factor_with_order(c, &order) {
                Ok(f) => (vec![f], vec![]),
                Err(e @ Error::NonGeneric(_)) => (vec![], vec![(order, e)]),
                Err(e) => return Err(e),
            };
            AllFactorizations {
                norm_factors: norm,
                factorizations,
                failures,
            }
        }
        None => all_factorizations(c)?,
    };
    if !generic.factorizations.is_empty() {
        path.push("generic algorithm".into());
        if !req.all {
            generic.factorizations.truncate(1);
        }
        return Ok(FactorReport {
            path,
            outcome: FactorOutcome::Generic(generic),
        });
    }
    path.push("generic algorithm fails".into());
    special_cases(c, generic, path)
}

fn special_cases(
    c: &MotionPoly,
    generic: AllFactorizations,
    mut path: Vec<String>,
) -> Result<FactorReport> {
    if let Ok(t) = QuadraticTranslation::from_motion(c.poly()) {
        if t.xi_irreducible() {
            if circular_translation_criterion(c.poly())? {
                path.push("circular translation family".into());
                let family = circular_translation_family(c.poly())?;
                return Ok(FactorReport {
                    path,
                    outcome: FactorOutcome::CircularTranslation(family),
                });
            }
            path.push("no 2-factor factorization; multiplication trick available".into());
            let trick = multiplication_trick(c.poly()).ok();
            let reason =
                "translation with irreducible primal part that is not circular".to_string();
            return Ok(FactorReport {
                path,
                outcome: FactorOutcome::NoFactorization { reason, trick },
            });
        }
        path.push("translation with reducible primal part".into());
        let outcome = match reducible_translation_factorizations(c.poly())? {
            ReducibleOutcome::TwoOrderings(f, g) => FactorOutcome::TranslationOrderings(f, g),
            ReducibleOutcome::ConstantDirectionFamily(f) => FactorOutcome::TranslationFamily(f),
            ReducibleOutcome::NoFactorization => FactorOutcome::NoFactorization {
                reason: "double root of the primal part without matching dual part".into(),
                trick: None,
            },
        };
        return Ok(FactorReport { path, outcome });
    }
    if let Some(input) = recognize(c.poly()) {
        match classify_case(&input) {
            CaseKind::Darboux => {
                path.push("Darboux pipeline applied".into());
                let r = darboux_7r(&input)?;
                return Ok(FactorReport {
                    path,
                    outcome: FactorOutcome::Darboux(Box::new(r)),
                });
            }
            CaseKind::VerticalDarboux => {
                path.push("vertical Darboux motion".into());
                let reason = "vertical Darboux motions admit no factorization".to_string();
                return Ok(FactorReport {
                    path,
                    outcome: FactorOutcome::NoFactorization {
                        reason,
                        trick: None,
                    },
                });
            }
            CaseKind::NonFactorableCubic => {
                path.push("straight-line cubic with xi != P conj(P)".into());
                let reason = "no linear right factor exists".to_string();
                return Ok(FactorReport {
                    path,
                    outcome: FactorOutcome::NoFactorization {
                        reason,
                        trick: None,
                    },
                });
            }
            _ => {}
        }
    }
    path.push("no special case applies".into());
    Ok(FactorReport {
        path,
        outcome: FactorOutcome::Unresolved(generic),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualquat::{DualQuaternion, Quaternion};
    use crate::exactalg::{rat, Coeff, Poly};
    use crate::factorization::translational::translation_motion;
    use crate::synthesis::build_constraint_motion;
    use num_traits::Zero;

    fn mp(c: crate::motionpoly::DqPoly) -> MotionPoly {
        MotionPoly::new(c).unwrap()
    }

    #[test]
    fn generic_cubic_all_orders() {
        let l = |q: [i64; 4]| Poly::linear(DualQuaternion::from_primal(Quaternion::from_ints(q)));
        let c = mp(&(&l([0, 1, 0, 0]) * &l([1, 0, 2, 0])) * &l([0, 1, 1, 1]));
        let r = factor(
            &c,
            &FactorRequest {
                all: true,
                ..Default::default()
            },
        )
        .unwrap();
        let FactorOutcome::Generic(g) = r.outcome else {
            panic!()
        };
        assert!(g.factorizations.len() <= 6 && !g.factorizations.is_empty());
        let r = factor(
            &c,
            &FactorRequest {
                order: Some(vec![3, 1, 2]),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(matches!(r.outcome, FactorOutcome::Generic(_)));
        assert!(factor(
            &c,
            &FactorRequest {
                order: Some(vec![1, 1, 2]),
                ..Default::default()
            }
        )
        .is_err());
    }

    #[test]
    fn darboux_is_routed() {
        let h = Quaternion::new(rat(0, 1), rat(7, 9), rat(-4, 9), rat(4, 9));
        let input = crate::synthesis::ConstraintInput::new(
            Poly::linear(h),
            RPoly::from_ints(&[1, 0, 1]),
            RPoly::new(vec![rat(-3, 4), rat(5, 2)]),
        )
        .unwrap();
        let c = build_constraint_motion(&input).unwrap();
        let r = factor(&c, &FactorRequest::default()).unwrap();
        assert_eq!(
            r.path,
            ["generic algorithm fails", "Darboux pipeline applied"]
        );
        assert!(matches!(r.outcome, FactorOutcome::Darboux(_)));
    }

    #[test]
    fn translations_are_routed() {
        let sarrus = translation_motion(
            &RPoly::from_ints(&[1, 0, 1]),
            &Poly::new(vec![Quaternion::zero(), Quaternion::i()]),
        );
        let r = factor(&mp(sarrus), &FactorRequest::default()).unwrap();
        assert!(r
            .path
            .iter()
            .any(|p| p == "no 2-factor factorization; multiplication trick available"));
        assert!(!r.factorization_exists());
        let FactorOutcome::NoFactorization { trick, .. } = r.outcome else {
            panic!()
        };
        assert!(trick.is_some());

        let circular = translation_motion(
            &RPoly::from_ints(&[1, 0, 1]),
            &Poly::new(vec![-Quaternion::i(), -Quaternion::j()]),
        );
        let r = factor(&mp(circular), &FactorRequest::default()).unwrap();
        assert!(matches!(r.outcome, FactorOutcome::CircularTranslation(_)));

        let d = Poly::new(vec![Quaternion::j(), Quaternion::i().scale(&rat(1, 1))]);
        // Distinct real roots: the generic algorithm already finds both orderings.
        let r = factor(
            &mp(translation_motion(&RPoly::from_ints(&[2, -3, 1]), &d)),
            &FactorRequest {
                all: true,
                ..Default::default()
            },
        )
        .unwrap();
        let FactorOutcome::Generic(g) = r.outcome else {
            panic!()
        };
        assert_eq!(g.factorizations.len(), 2);

        let double = translation_motion(
            &RPoly::from_ints(&[1, -2, 1]),
            &Poly::new(vec![-Quaternion::i(), Quaternion::i()]),
        );
        let r = factor(&mp(double), &FactorRequest::default()).unwrap();
        assert!(matches!(r.outcome, FactorOutcome::TranslationFamily(_)));
    }
}
