//! Point action, joint classification and axis geometry.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::dual::DualQuaternion;
use super::quaternion::{cross, dot, is_zero3, Quaternion, Vec3};
use crate::error::{Error, Result};
use crate::exactalg::rat::sqrt_exact;
use crate::exactalg::{Matrix, RPoly, Rat};

/// Joint type of a linear factor `t - h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JointKind {
    Rotational,
    Translational,
}

impl JointKind {
    pub fn letter(self) -> char {
        match self {
            JointKind::Rotational => 'R',
            JointKind::Translational => 'P',
        }
    }
}

/// `t - h` is a motion polynomial: the dual part of `h` has no scalar part
/// and `h` satisfies the Study condition.
pub fn is_joint_coefficient(h: &DualQuaternion) -> bool {
    h.dual.w.is_zero() && h.study_condition()
}

pub fn study_condition(h: &DualQuaternion) -> bool {
    h.study_condition()
}

/// Translational iff the primal part is real.
pub fn classify_linear(h: &DualQuaternion) -> JointKind {
    if h.primal.is_real() {
        JointKind::Translational
    } else {
        JointKind::Rotational
    }
}

/// Image of the point `p` under the displacement `x + εy`:
/// `1 + ε p' = (x - εy)(1 + ε p) conj(x + εy)`, divided by `x conj(x)`.
pub fn act_on_point(h: &DualQuaternion, p: &Vec3) -> Result<Vec3> {
    if h.primal.is_zero() {
        return Err(Error::ZeroPrimal);
    }
    if !h.study_condition() {
        return Err(Error::Precondition("Study condition violated".into()));
    }
    let left = DualQuaternion::new(h.primal.clone(), -h.dual.clone());
    let point = DualQuaternion::new(Quaternion::one(), Quaternion::from_vector(p.clone()));
    let image = &(&left * &point) * &h.conj();
    let scale = image.primal.w.recip();
    Ok([
        &image.dual.x * &scale,
        &image.dual.y * &scale,
        &image.dual.z * &scale,
    ])
}

/// Spatial line in Plücker coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerLine {
    pub direction: Vec3,
    pub moment: Vec3,
}

impl PlueckerLine {
    pub fn new(direction: Vec3, moment: Vec3) -> Result<Self> {
        if is_zero3(&direction) {
            return Err(Error::ZeroDirection);
        }
        if !dot(&direction, &moment).is_zero() {
            return Err(Error::DegenerateAxis);
        }
        Ok(PlueckerLine { direction, moment })
    }

    pub fn through(point: &Vec3, direction: Vec3) -> Result<Self> {
        let moment = cross(point, &direction);
        PlueckerLine::new(direction, moment)
    }

    pub fn contains(&self, point: &Vec3) -> bool {
        cross(point, &self.direction) == self.moment
    }

    pub fn passes_through_origin(&self) -> bool {
        is_zero3(&self.moment)
    }

    pub fn is_parallel(&self, other: &PlueckerLine) -> bool {
        is_zero3(&cross(&self.direction, &other.direction))
    }

    /// Reciprocal product; zero iff the lines are coplanar.
    pub fn reciprocal(&self, other: &PlueckerLine) -> Rat {
        dot(&self.direction, &other.moment) + dot(&other.direction, &self.moment)
    }

    /// Common point of two intersecting, non-parallel lines.
    pub fn intersection(&self, other: &PlueckerLine) -> Option<Vec3> {
        if self.is_parallel(other) || !self.reciprocal(other).is_zero() {
            return None;
        }
        common_point(&[self, other])
    }

    /// Point of the line closest to the origin.
    pub fn foot_point(&self) -> Vec3 {
        let d2 = dot(&self.direction, &self.direction);
        let c = cross(&self.direction, &self.moment);
        c.map(|v| v / &d2)
    }
}

/// A point on every given line, if one exists (exact rank computation on the
/// stacked incidence equations `p × d = m`).
pub fn common_point(lines: &[&PlueckerLine]) -> Option<Vec3> {
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for l in lines {
        let [d0, d1, d2] = &l.direction;
        let z = Rat::zero;
        // p × d as a linear map of p.
        rows.push(vec![z(), d2.clone(), -d1.clone()]);
        rows.push(vec![-d2.clone(), z(), d0.clone()]);
        rows.push(vec![d1.clone(), -d0.clone(), z()]);
        rhs.extend(l.moment.iter().cloned());
    }
    let sol = Matrix::new(rows, 3).solve_affine(&rhs)?;
    if !sol.directions.is_empty() && lines.len() > 1 {
        // Coincident lines: report the foot point of the first one.
        return Some(lines[0].foot_point());
    }
    let [x, y, z] = <[Rat; 3]>::try_from(sol.particular).ok()?;
    Some([x, y, z])
}

/// Axis of a joint: a full line for revolute joints, a direction for
/// prismatic ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Axis {
    Line(PlueckerLine),
    Direction(Vec3),
}

impl Axis {
    pub fn direction(&self) -> &Vec3 {
        match self {
            Axis::Line(l) => &l.direction,
            Axis::Direction(d) => d,
        }
    }

    pub fn line(&self) -> Option<&PlueckerLine> {
        match self {
            Axis::Line(l) => Some(l),
            Axis::Direction(_) => None,
        }
    }
}

/// Axis of the joint `t - h`. The revolute axis is the fixed-point set of the
/// displacement `-h` (the value at `t = 0`).
pub fn axis_of(h: &DualQuaternion) -> Result<Axis> {
    match classify_linear(h) {
        JointKind::Translational => {
            let d = h.dual.vector();
            if is_zero3(&d) {
                return Err(Error::DegenerateAxis);
            }
            Ok(Axis::Direction(d))
        }
        JointKind::Rotational => {
            let x = -h.primal.clone();
            let y = -h.dual.clone();
            let direction = h.primal.vector();
            let n = x.norm_sq();
            // Fixed points: x p conj(x) - |x|^2 p = 2 y conj(x).
            let basis = [Quaternion::i(), Quaternion::j(), Quaternion::k()];
            let images: Vec<Vec3> = basis
                .iter()
                .map(|e| {
                    let v = (&(&x * e) * &x.conj()).vector();
                    let ev = e.vector();
                    [
                        &v[0] - &n * &ev[0],
                        &v[1] - &n * &ev[1],
                        &v[2] - &n * &ev[2],
                    ]
                })
                .collect();
            let rows = (0..3)
                .map(|r| (0..3).map(|c| images[c][r].clone()).collect())
                .collect();
            let two = Rat::from_integer(2.into());
            let rhs = (&y * &x.conj()).vector().map(|v| v * &two);
            let sol = Matrix::new(rows, 3)
                .solve_affine(&rhs)
                .ok_or(Error::DegenerateAxis)?;
            let point: Vec3 =
                <[Rat; 3]>::try_from(sol.particular).map_err(|_| Error::DegenerateAxis)?;
            Ok(Axis::Line(PlueckerLine::through(&point, direction)?))
        }
    }
}

/// Quaternion root of a monic irreducible real quadratic `t^2 + x1 t + x0`
/// with vector direction `s` (a rational unit vector):
/// `½(-x1 + w s)`, `w = sqrt(4 x0 - x1^2)`.
pub fn quaternion_roots_of_real_quadratic(xi: &RPoly, s: &Vec3) -> Result<Quaternion> {
    if xi.deg() != 2 || !xi.is_monic() {
        return Err(Error::Precondition("expected a monic quadratic".into()));
    }
    if !dot(s, s).is_one() {
        return Err(Error::Precondition(
            "direction must be a unit vector".into(),
        ));
    }
    let (x0, x1) = (xi.coeff(0), xi.coeff(1));
    let four = Rat::from_integer(4.into());
    let disc = &four * &x0 - &x1 * &x1;
    if !disc.is_positive() {
        return Err(Error::ReducibleInput);
    }
    let w = sqrt_exact(&disc).ok_or(Error::ExactModeIrrationalRoot)?;
    let half = Rat::new(1.into(), 2.into());
    Ok(Quaternion::new(
        -&x1 * &half,
        &w * &s[0] * &half,
        &w * &s[1] * &half,
        &w * &s[2] * &half,
    ))
}

/// Squared cosine of the angle between two directions and the sign of their
/// dot product.
pub fn angle_cos_squared(u: &Vec3, v: &Vec3) -> Result<(Rat, i8)> {
    let (uu, vv) = (dot(u, u), dot(v, v));
    if uu.is_zero() || vv.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let d = dot(u, v);
    let sign = if d.is_positive() {
        1
    } else if d.is_negative() {
        -1
    } else {
        0
    };
    Ok((&d * &d / (uu * vv), sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat, Coeff};

    fn v(a: i64, b: i64, c: i64) -> Vec3 {
        [int(a), int(b), int(c)]
    }

    #[test]
    fn identity_and_half_turn() {
        assert_eq!(
            act_on_point(&DualQuaternion::one(), &v(1, 2, 3)).unwrap(),
            v(1, 2, 3)
        );
        let i = DualQuaternion::from_primal(Quaternion::i());
        assert_eq!(act_on_point(&i, &v(0, 1, 0)).unwrap(), v(0, -1, 0));
    }

    #[test]
    fn translation_sign_convention() {
        // 1 - ½ εi moves the origin to (1, 0, 0).
        let h = DualQuaternion::new(Quaternion::one(), Quaternion::i().scale(&rat(-1, 2)));
        assert_eq!(act_on_point(&h, &v(0, 0, 0)).unwrap(), v(1, 0, 0));
    }

    #[test]
    fn zero_primal_rejected() {
        let h = DualQuaternion::from_dual(Quaternion::i());
        assert_eq!(act_on_point(&h, &v(0, 0, 0)), Err(Error::ZeroPrimal));
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify_linear(&DualQuaternion::from_primal(Quaternion::i())),
            JointKind::Rotational
        );
        assert_eq!(
            classify_linear(&DualQuaternion::from_dual(Quaternion::i())),
            JointKind::Translational
        );
        let h = DualQuaternion::new(Quaternion::real(int(2)), Quaternion::j());
        assert_eq!(classify_linear(&h), JointKind::Translational);
    }

    #[test]
    fn axes() {
        let a = axis_of(&DualQuaternion::from_primal(Quaternion::i())).unwrap();
        assert_eq!(
            a,
            Axis::Line(PlueckerLine::new(v(1, 0, 0), v(0, 0, 0)).unwrap())
        );
        let a = axis_of(&DualQuaternion::from_primal(Quaternion::j())).unwrap();
        assert_eq!(
            a,
            Axis::Line(PlueckerLine::new(v(0, 1, 0), v(0, 0, 0)).unwrap())
        );
        let a = axis_of(&DualQuaternion::from_dual(Quaternion::i())).unwrap();
        assert_eq!(a, Axis::Direction(v(1, 0, 0)));
    }

    #[test]
    fn offset_axis_is_fixed() {
        // j + ε(5/4 i + 3/8 k): axis parallel to j, off the origin.
        let h = DualQuaternion::new(
            Quaternion::j(),
            Quaternion::new(int(0), rat(5, 4), int(0), rat(3, 8)),
        );
        let Axis::Line(line) = axis_of(&h).unwrap() else {
            panic!()
        };
        assert_eq!(line.direction, v(0, 1, 0));
        let foot = line.foot_point();
        for t in [-3, 0, 2, 7] {
            let m = DualQuaternion::real(int(t)) - h.clone();
            assert_eq!(act_on_point(&m, &foot).unwrap(), foot);
        }
    }

    #[test]
    fn roots_of_quadratics() {
        let xi = RPoly::from_ints(&[1, 0, 1]);
        assert_eq!(
            quaternion_roots_of_real_quadratic(&xi, &v(1, 0, 0)).unwrap(),
            Quaternion::i()
        );
        let xi2 = RPoly::from_ints(&[5, -2, 1]);
        assert_eq!(
            quaternion_roots_of_real_quadratic(&xi2, &v(0, 1, 0)).unwrap(),
            Quaternion::from_ints([1, 0, 2, 0])
        );
        let s = [rat(7, 9), rat(-4, 9), rat(4, 9)];
        let h = quaternion_roots_of_real_quadratic(&xi, &s).unwrap();
        assert_eq!(h, Quaternion::new(int(0), rat(7, 9), rat(-4, 9), rat(4, 9)));
        assert!(xi
            .map(|c| Quaternion::real(c.clone()))
            .eval_right(&h)
            .is_zero());
        let red = RPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(
            quaternion_roots_of_real_quadratic(&red, &v(1, 0, 0)),
            Err(Error::ReducibleInput)
        );
        let irr = RPoly::from_ints(&[2, 0, 1]);
        assert_eq!(
            quaternion_roots_of_real_quadratic(&irr, &v(1, 0, 0)),
            Err(Error::ExactModeIrrationalRoot)
        );
    }

    #[test]
    fn squared_cosines() {
        assert_eq!(
            angle_cos_squared(&v(1, 0, 0), &v(1, 0, 0)).unwrap(),
            (int(1), 1)
        );
        assert_eq!(
            angle_cos_squared(&v(1, 0, 0), &v(0, 1, 0)).unwrap(),
            (int(0), 0)
        );
        assert_eq!(
            angle_cos_squared(&v(1, 1, 0), &v(1, 0, 0)).unwrap(),
            (rat(1, 2), 1)
        );
        assert_eq!(
            angle_cos_squared(&v(0, 0, 0), &v(1, 0, 0)),
            Err(Error::ZeroDirection)
        );
    }

    #[test]
    fn line_intersection() {
        let a = PlueckerLine::through(&v(0, 0, 0), v(1, 0, 0)).unwrap();
        let b = PlueckerLine::through(&v(2, 0, 0), v(0, 1, 1)).unwrap();
        assert_eq!(a.intersection(&b), Some(v(2, 0, 0)));
        let c = PlueckerLine::through(&v(0, 0, 5), v(0, 1, 0)).unwrap();
        assert_eq!(a.intersection(&c), None);
    }
}
