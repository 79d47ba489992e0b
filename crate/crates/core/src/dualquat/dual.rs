use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::quaternion::{write_terms, Quaternion};
use crate::exactalg::{Coeff, Rat};

/// Dual quaternion `primal + ε dual` with `ε² = 0` and `ε` central.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DualQuaternion {
    pub primal: Quaternion,
    pub dual: Quaternion,
}

impl DualQuaternion {
    pub fn new(primal: Quaternion, dual: Quaternion) -> Self {
        DualQuaternion { primal, dual }
    }

    pub fn from_primal(primal: Quaternion) -> Self {
        DualQuaternion::new(primal, Quaternion::zero())
    }

    pub fn from_dual(dual: Quaternion) -> Self {
        DualQuaternion::new(Quaternion::zero(), dual)
    }

    pub fn real(r: Rat) -> Self {
        DualQuaternion::from_primal(Quaternion::real(r))
    }

    /// Components in the order `[w, x, y, z, εw, εx, εy, εz]`.
    pub fn components(&self) -> [Rat; 8] {
        let p = &self.primal;
        let d = &self.dual;
        [
            p.w.clone(),
            p.x.clone(),
            p.y.clone(),
            p.z.clone(),
            d.w.clone(),
            d.x.clone(),
            d.y.clone(),
            d.z.clone(),
        ]
    }

    pub fn from_components(c: [Rat; 8]) -> Self {
        let [a, b, c2, d, e, f, g, h] = c;
        DualQuaternion::new(Quaternion::new(a, b, c2, d), Quaternion::new(e, f, g, h))
    }

    pub fn from_ints(c: [i64; 8]) -> Self {
        Self::from_components(c.map(crate::exactalg::int))
    }

    pub fn conj(&self) -> Self {
        DualQuaternion::new(self.primal.conj(), self.dual.conj())
    }

    /// `h * conj(h)`.
    pub fn norm(&self) -> Self {
        self.clone() * self.conj()
    }

    /// Real scalar (no imaginary and no dual component).
    pub fn is_real(&self) -> bool {
        self.primal.is_real() && self.dual.is_zero()
    }

    pub fn as_real(&self) -> Option<Rat> {
        self.is_real().then(|| self.primal.w.clone())
    }

    /// `primal * conj(dual) + dual * conj(primal) = 0`.
    pub fn study_condition(&self) -> bool {
        let s = &self.primal * &self.dual.conj() + &self.dual * &self.primal.conj();
        s.is_zero()
    }

    /// Inverse; exists iff the primal part is nonzero.
    pub fn inverse(&self) -> Option<Self> {
        let pi = self.primal.inverse()?;
        let dual = -(&(&pi * &self.dual) * &pi);
        Some(DualQuaternion::new(pi, dual))
    }

    pub fn is_invertible(&self) -> bool {
        !self.primal.is_zero()
    }
}

impl Zero for DualQuaternion {
    fn zero() -> Self {
        DualQuaternion::new(Quaternion::zero(), Quaternion::zero())
    }
    fn is_zero(&self) -> bool {
        self.primal.is_zero() && self.dual.is_zero()
    }
}

impl One for DualQuaternion {
    fn one() -> Self {
        DualQuaternion::from_primal(Quaternion::one())
    }
}

impl Add for DualQuaternion {
    type Output = DualQuaternion;
    fn add(self, o: DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(self.primal + o.primal, self.dual + o.dual)
    }
}

impl Sub for DualQuaternion {
    type Output = DualQuaternion;
    fn sub(self, o: DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(self.primal - o.primal, self.dual - o.dual)
    }
}

impl Neg for DualQuaternion {
    type Output = DualQuaternion;
    fn neg(self) -> DualQuaternion {
        DualQuaternion::new(-self.primal, -self.dual)
    }
}

impl Mul for &DualQuaternion {
    type Output = DualQuaternion;
    fn mul(self, o: &DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(
            &self.primal * &o.primal,
            &self.primal * &o.dual + &self.dual * &o.primal,
        )
    }
}

impl Mul for DualQuaternion {
    type Output = DualQuaternion;
    fn mul(self, o: DualQuaternion) -> DualQuaternion {
        &self * &o
    }
}

impl Coeff for DualQuaternion {
    fn from_rat(r: Rat) -> Self {
        DualQuaternion::real(r)
    }

    fn scale(&self, s: &Rat) -> Self {
        DualQuaternion::new(self.primal.scale(s), self.dual.scale(s))
    }
}

impl From<Quaternion> for DualQuaternion {
    fn from(q: Quaternion) -> Self {
        DualQuaternion::from_primal(q)
    }
}

const UNITS: [&str; 8] = ["", "i", "j", "k", "ε", "εi", "εj", "εk"];

/// Writes `sign * h` as signed terms after an existing prefix.
pub(crate) fn write_signed(
    f: &mut fmt::Formatter<'_>,
    h: &DualQuaternion,
    first: bool,
) -> Result<bool, fmt::Error> {
    let c = h.components();
    let terms: Vec<(&Rat, &str)> = c.iter().zip(UNITS).collect();
    write_terms(f, &terms, first)
}

impl fmt::Display for DualQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !write_signed(f, self, true)? {
            write!(f, "0")?;
        }
        Ok(())
    }
}
