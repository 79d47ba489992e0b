//! Factorization of motion polynomials into linear factors.
//!
//! The generic algorithm lives in [`generic`]. The remaining submodules treat
//! the non-generic situations: quadratic translational motions (circular
//! translations, reducible primal part), and the multiplication trick that
//! unlocks factorizations of non-circular translations after multiplying by
//! their primal part.

pub mod family;
pub mod generic;
pub mod qpoly;
pub mod translational;
pub mod trick;

use std::fmt;

use crate::dualquat::{classify_linear, is_joint_coefficient, DualQuaternion, JointKind};
use crate::error::{Error, Result};
use crate::exactalg::{Poly, RPoly};
use crate::motionpoly::DqPoly;

pub use family::{AffineFactor, FactorFamily};
pub use generic::{
    all_factorizations, approximate_factorization, factor_with_order, zero_of_linear_remainder,
    AllFactorizations, ApproxFactorization,
};
pub use qpoly::qpoly_two_factorizations;
pub use translational::{
    circular_translation_criterion, circular_translation_family,
    reducible_translation_factorizations, QuadraticTranslation, ReducibleOutcome,
};
pub use trick::multiplication_trick;

/// Monic linear motion polynomial `t - h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearFactor {
    h: DualQuaternion,
    kind: JointKind,
}

impl LinearFactor {
    /// Fails unless `h` is a rotation or translation quaternion.
    pub fn new(h: DualQuaternion) -> Result<Self> {
        if !is_joint_coefficient(&h) {
            return Err(Error::Precondition(format!(
                "{h} is neither a rotation nor a translation quaternion"
            )));
        }
        let kind = classify_linear(&h);
        Ok(LinearFactor { h, kind })
    }

    pub fn h(&self) -> &DualQuaternion {
        &self.h
    }

    pub fn kind(&self) -> JointKind {
        self.kind
    }

    pub fn poly(&self) -> DqPoly {
        Poly::linear(self.h.clone())
    }

    /// `(t - h)(t - conj h)`, the quadratic norm factor this factor consumes.
    pub fn norm_factor(&self) -> RPoly {
        let h = &self.h.primal;
        RPoly::new(vec![h.norm_sq(), -(&h.w + &h.w), crate::exactalg::int(1)])
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t")?;
        crate::dualquat::dual::write_signed(f, &-self.h.clone(), false)?;
        Ok(())
    }
}

/// Ordered product of linear factors times a real cofactor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<LinearFactor>,
    real_cofactor: RPoly,
}

impl Factorization {
    /// Checks `cofactor * prod(t - h_i) == source` before returning.
    pub fn verified(
        factors: Vec<LinearFactor>,
        real_cofactor: RPoly,
        source: &DqPoly,
    ) -> Result<Self> {
        let f = Factorization {
            factors,
            real_cofactor,
        };
        if f.expand() != *source {
            return Err(Error::ProductMismatch);
        }
        Ok(f)
    }

    pub fn factors(&self) -> &[LinearFactor] {
        &self.factors
    }

    pub fn real_cofactor(&self) -> &RPoly {
        &self.real_cofactor
    }

    /// `prod(t - h_i)` without the cofactor.
    pub fn product(&self) -> DqPoly {
        self.factors
            .iter()
            .fold(DqPoly::one(), |acc, f| &acc * &f.poly())
    }

    /// `real_cofactor * prod(t - h_i)`.
    pub fn expand(&self) -> DqPoly {
        self.product().mul_real(&self.real_cofactor)
    }

    /// Joint letters left to right, e.g. `PRR`.
    pub fn signature(&self) -> String {
        self.factors.iter().map(|f| f.kind.letter()).collect()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.real_cofactor != RPoly::one() {
            write!(f, "({}) ", self.real_cofactor)?;
        }
        for (n, factor) in self.factors.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "({factor})")?;
        }
        Ok(())
    }
}
