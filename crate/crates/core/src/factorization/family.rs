//! Affine families of factorizations.

use num_traits::Zero;

use super::{Factorization, LinearFactor};
use crate::dualquat::DualQuaternion;
use crate::error::{Error, Result};
use crate::exactalg::{Coeff, Matrix, RPoly, Rat};
use crate::motionpoly::DqPoly;

/// `h = constant + sum_j params[j] * directions[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineFactor {
    pub constant: DualQuaternion,
    pub directions: Vec<DualQuaternion>,
}

impl AffineFactor {
    pub fn fixed(h: DualQuaternion, nparams: usize) -> Self {
        AffineFactor {
            constant: h,
            directions: vec![DualQuaternion::zero(); nparams],
        }
    }

    pub fn at(&self, params: &[Rat]) -> DualQuaternion {
        self.directions
            .iter()
            .zip(params)
            .fold(self.constant.clone(), |acc, (d, p)| acc + d.scale(p))
    }
}

/// Factorizations `real_cofactor * prod(t - h_i(params)) = source`, valid
/// identically in the real parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorFamily {
    parameters: Vec<String>,
    particular: Vec<Rat>,
    factors: Vec<AffineFactor>,
    real_cofactor: RPoly,
    source: DqPoly,
}

impl FactorFamily {
    /// Builds the family and proves the product identity for all parameter
    /// values. Parameters may only enter dual parts, so the product is affine
    /// in them and checking `particular` plus one step along each parameter
    /// suffices.
    pub fn new(
        parameters: Vec<String>,
        particular: Vec<Rat>,
        factors: Vec<AffineFactor>,
        real_cofactor: RPoly,
        source: DqPoly,
    ) -> Result<Self> {
        let n = parameters.len();
        if particular.len() != n || factors.iter().any(|f| f.directions.len() != n) {
            return Err(Error::Precondition("parameter count mismatch".into()));
        }
        if factors
            .iter()
            .flat_map(|f| &f.directions)
            .any(|d| !d.primal.is_zero())
        {
            return Err(Error::Precondition(
                "family parameters must only move dual parts".into(),
            ));
        }
        let family = FactorFamily {
            parameters,
            particular,
            factors,
            real_cofactor,
            source,
        };
        family.realize(&family.particular)?;
        for j in 0..n {
            let mut p = family.particular.clone();
            p[j] += Rat::from_integer(1.into());
            family.realize(&p)?;
        }
        Ok(family)
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn particular(&self) -> &[Rat] {
        &self.particular
    }

    pub fn factors(&self) -> &[AffineFactor] {
        &self.factors
    }

    pub fn real_cofactor(&self) -> &RPoly {
        &self.real_cofactor
    }

    pub fn source(&self) -> &DqPoly {
        &self.source
    }

    /// The factorization at the given parameter values, product-verified.
    pub fn realize(&self, params: &[Rat]) -> Result<Factorization> {
        if params.len() != self.parameters.len() {
            return Err(Error::Precondition("wrong number of parameters".into()));
        }
        let factors = self
            .factors
            .iter()
            .map(|f| LinearFactor::new(f.at(params)))
            .collect::<Result<Vec<_>>>()?;
        Factorization::verified(factors, self.real_cofactor.clone(), &self.source)
    }

    pub fn realize_particular(&self) -> Result<Factorization> {
        self.realize(&self.particular)
    }

    /// Parameter values reproducing the given factor values, if any.
    pub fn fit(&self, targets: &[DualQuaternion]) -> Option<Vec<Rat>> {
        if targets.len() != self.factors.len() {
            return None;
        }
        let n = self.parameters.len();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (f, target) in self.factors.iter().zip(targets) {
            let c = f.constant.components();
            let t = target.components();
            let dirs: Vec<[Rat; 8]> = f.directions.iter().map(|d| d.components()).collect();
            for k in 0..8 {
                rows.push((0..n).map(|j| dirs[j][k].clone()).collect());
                rhs.push(&t[k] - &c[k]);
            }
        }
        let sol = Matrix::new(rows, n).solve_affine(&rhs)?;
        Some(sol.particular)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualquat::Quaternion;
    use crate::exactalg::int;

    #[test]
    fn rejects_a_family_that_breaks_the_product() {
        let h = DualQuaternion::from_primal(Quaternion::i());
        let source = crate::exactalg::Poly::linear(h.clone());
        let good = FactorFamily::new(
            vec![],
            vec![],
            vec![AffineFactor::fixed(h.clone(), 0)],
            RPoly::one(),
            source.clone(),
        );
        assert!(good.is_ok());
        // A free dual shift of a single factor changes the product.
        let shifted = AffineFactor {
            constant: h,
            directions: vec![DualQuaternion::from_dual(Quaternion::j())],
        };
        let bad = FactorFamily::new(
            vec!["a".into()],
            vec![int(0)],
            vec![shifted],
            RPoly::one(),
            source,
        );
        assert!(bad.is_err());
    }
}
