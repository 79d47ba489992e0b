use num_traits::Zero;

use crate::dualquat::{act_on_point, cross, is_zero3, sub3, Vec3};
use crate::error::{Error, Result};
use crate::exactalg::{int, Matrix, Rat};
use crate::motionpoly::DqPoly;

/// `steps + 1` equally spaced parameters from `lo` to `hi`.
pub fn sample_parameters(lo: &Rat, hi: &Rat, steps: usize) -> Vec<Rat> {
    if steps == 0 {
        return vec![lo.clone()];
    }
    let h = (hi - lo) / int(steps as i64);
    (0..=steps).map(|k| lo + &h * int(k as i64)).collect()
}

/// Positions of `point` under the motion at the given parameters.
pub fn coupler_trajectory(motion: &DqPoly, point: &Vec3, ts: &[Rat]) -> Result<Vec<Vec3>> {
    ts.iter()
        .map(|t| {
            act_on_point(&motion.eval_real(t), point).map_err(|e| match e {
                Error::ZeroPrimal => Error::PoleAtParameter,
                e => e,
            })
        })
        .collect()
}

fn differences(points: &[Vec3]) -> Vec<Vec3> {
    points.iter().skip(1).map(|p| sub3(p, &points[0])).collect()
}

/// All points lie on one line (a constant trajectory counts).
pub fn straight_line_test(points: &[Vec3]) -> bool {
    let diffs = differences(points);
    let Some(base) = diffs.iter().find(|d| !is_zero3(d)) else {
        return true;
    };
    diffs.iter().all(|d| is_zero3(&cross(base, d)))
}

/// All points lie in one plane, decided by the rank of the difference
/// vectors.
pub fn planarity_test(points: &[Vec3]) -> bool {
    let rows: Vec<Vec<Rat>> = differences(points)
        .into_iter()
        .map(|d| d.to_vec())
        .collect();
    rows.is_empty() || Matrix::new(rows, 3).rank() <= 2
}

/// `det [[p, 1], [q, 1], [r, 1], [s, 1]]`, zero iff the points are coplanar.
pub fn coplanarity_determinant(p: &Vec3, q: &Vec3, r: &Vec3, s: &Vec3) -> Rat {
    let m = [sub3(q, p), sub3(r, p), sub3(s, p)];
    let c = cross(&m[1], &m[2]);
    let det = (0..3).fold(Rat::zero(), |acc, k| acc + &m[0][k] * &c[k]);
    -det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualquat::{vec3, DualQuaternion};
    use crate::exactalg::{rat, Poly};

    fn v(a: i64, b: i64, c: i64) -> Vec3 {
        vec3(int(a), int(b), int(c))
    }

    #[test]
    fn sampling() {
        assert_eq!(
            sample_parameters(&int(-2), &int(2), 4),
            (-2..=2).map(int).collect::<Vec<_>>()
        );
        assert_eq!(sample_parameters(&int(0), &int(1), 2)[1], rat(1, 2));
    }

    #[test]
    fn identity_motion_is_constant() {
        let id = Poly::constant(DualQuaternion::real(int(1)));
        let pts = coupler_trajectory(&id, &v(1, 2, 3), &[int(0), int(5)]).unwrap();
        assert!(pts.iter().all(|p| *p == v(1, 2, 3)));
        assert!(straight_line_test(&pts));
    }

    #[test]
    fn collinear_and_coplanar() {
        let line = [v(0, 0, 0), v(1, 1, 1), v(3, 3, 3)];
        assert!(straight_line_test(&line));
        let plane = [v(0, 0, 0), v(1, 0, 0), v(0, 1, 0), v(5, 7, 0)];
        assert!(!straight_line_test(&plane));
        assert!(planarity_test(&plane));
        assert!(coplanarity_determinant(&plane[0], &plane[1], &plane[2], &plane[3]).is_zero());
        let solid = [v(0, 0, 0), v(1, 0, 0), v(0, 1, 0), v(0, 0, 1)];
        assert!(!planarity_test(&solid));
        assert!(!coplanarity_determinant(&solid[0], &solid[1], &solid[2], &solid[3]).is_zero());
    }

    #[test]
    fn pole_is_reported() {
        // t - i vanishes nowhere on the reals, t - εi's primal vanishes at 0.
        let m = Poly::linear(DualQuaternion::from_ints([0, 0, 0, 0, 0, 1, 0, 0]));
        assert_eq!(
            coupler_trajectory(&m, &v(0, 0, 0), &[int(0)]),
            Err(Error::PoleAtParameter)
        );
    }
}
