use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactalg::{Coeff, Rat};

/// A point or direction in three-space.
pub type Vec3 = [Rat; 3];

pub fn vec3(x: Rat, y: Rat, z: Rat) -> Vec3 {
    [x, y, z]
}

pub fn dot(a: &Vec3, b: &Vec3) -> Rat {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn sub3(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

pub fn add3(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

pub fn scale3(a: &Vec3, s: &Rat) -> Vec3 {
    [&a[0] * s, &a[1] * s, &a[2] * s]
}

pub fn is_zero3(a: &Vec3) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn zero3() -> Vec3 {
    [Rat::zero(), Rat::zero(), Rat::zero()]
}

/// Quaternion `w + x i + y j + z k` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quaternion {
    pub w: Rat,
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl Quaternion {
    pub fn new(w: Rat, x: Rat, y: Rat, z: Rat) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        let [w, x, y, z] = c.map(crate::exactalg::int);
        Quaternion { w, x, y, z }
    }

    pub fn real(w: Rat) -> Self {
        Quaternion::new(w, Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn from_vector(v: Vec3) -> Self {
        let [x, y, z] = v;
        Quaternion::new(Rat::zero(), x, y, z)
    }

    pub fn i() -> Self {
        Self::from_ints([0, 1, 0, 0])
    }

    pub fn j() -> Self {
        Self::from_ints([0, 0, 1, 0])
    }

    pub fn k() -> Self {
        Self::from_ints([0, 0, 0, 1])
    }

    pub fn components(&self) -> [&Rat; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn from_components(c: [Rat; 4]) -> Self {
        let [w, x, y, z] = c;
        Quaternion { w, x, y, z }
    }

    pub fn vector(&self) -> Vec3 {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// `q * conj(q)`, the squared Euclidean norm.
    pub fn norm_sq(&self) -> Rat {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_pure(&self) -> bool {
        self.w.is_zero()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return None;
        }
        Some(self.conj().scale(&n.recip()))
    }
}

impl Zero for Quaternion {
    fn zero() -> Self {
        Quaternion::real(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.is_real()
    }
}

impl One for Quaternion {
    fn one() -> Self {
        Quaternion::real(Rat::one())
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        &self * &o
    }
}

impl Coeff for Quaternion {
    fn from_rat(r: Rat) -> Self {
        Quaternion::real(r)
    }

    fn scale(&self, s: &Rat) -> Self {
        Quaternion::new(&self.w * s, &self.x * s, &self.y * s, &self.z * s)
    }
}

/// Writes signed terms such as `7/9 i - 4/9 j`, skipping zeros. Returns
/// whether anything was written.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &[(&Rat, &str)],
    mut first: bool,
) -> Result<bool, fmt::Error> {
    use num_traits::Signed;
    let mut wrote = false;
    for (c, unit) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        wrote = true;
        let mag = c.abs();
        match (mag.is_one(), unit.is_empty()) {
            (true, false) => write!(f, "{unit}")?,
            (_, true) => write!(f, "{mag}")?,
            (false, false) => write!(f, "{mag} {unit}")?,
        }
    }
    Ok(wrote)
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [
            (&self.w, ""),
            (&self.x, "i"),
            (&self.y, "j"),
            (&self.z, "k"),
        ];
        if !write_terms(f, &terms, true)? {
            write!(f, "0")?;
        }
        Ok(())
    }
}
