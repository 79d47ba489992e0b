use super::Linkage;
use crate::dualquat::{
    angle_cos_squared, axis_of, cross, is_zero3, zero3, Axis, JointKind, PlueckerLine, Vec3,
};
use crate::exactalg::Rat;

/// `∠(u, v) = ∠(v, w)` for three consecutive loop joints, as squared
/// cosines of the axis directions with matching sign.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleEquality {
    pub joints: [usize; 3],
    pub cos_squared: Rat,
    pub sign: i8,
}

/// Joint rotation as `cot(θ/2) = (t - offset) / sqrt(norm_sq)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfAngle {
    pub joint: usize,
    pub offset: Rat,
    pub norm_sq: Rat,
}

/// Relations between joint axes; joint indices are zero-based loop positions.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometricReport {
    pub parallel_classes: Vec<Vec<usize>>,
    pub concurrent_points: Vec<(Vec3, Vec<usize>)>,
    pub through_origin: Vec<usize>,
    pub angle_equalities: Vec<AngleEquality>,
    pub joint_signature: String,
    pub half_angles: Vec<HalfAngle>,
}

impl GeometricReport {
    pub fn same_parallel_class(&self, a: usize, b: usize) -> bool {
        self.parallel_classes
            .iter()
            .any(|c| c.contains(&a) && c.contains(&b))
    }

    pub fn concurrent(&self, joints: &[usize]) -> Option<&Vec3> {
        self.concurrent_points
            .iter()
            .find(|(_, js)| joints.iter().all(|j| js.contains(j)))
            .map(|(p, _)| p)
    }

    /// True if all revolute joints rotate with the same half-angle function.
    pub fn equal_joint_angles(&self) -> bool {
        self.half_angles
            .windows(2)
            .all(|w| w[0].offset == w[1].offset && w[0].norm_sq == w[1].norm_sq)
    }
}

pub fn geometric_report(l: &Linkage) -> GeometricReport {
    let joints = l.loop_joints();
    let n = joints.len();
    let axes: Vec<Option<Axis>> = joints.iter().map(|j| axis_of(j.factor.h()).ok()).collect();
    let kinds: Vec<JointKind> = joints.iter().map(|j| j.factor.kind()).collect();

    let mut parallel_classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let Some(ai) = &axes[i] else { continue };
        let class = parallel_classes.iter_mut().find(|c| {
            let r = c[0];
            kinds[r] == kinds[i]
                && is_zero3(&cross(
                    axes[r].as_ref().unwrap().direction(),
                    ai.direction(),
                ))
        });
        match class {
            Some(c) => c.push(i),
            None => parallel_classes.push(vec![i]),
        }
    }

    let lines: Vec<(usize, &PlueckerLine)> = axes
        .iter()
        .enumerate()
        .filter_map(|(i, a)| a.as_ref().and_then(|a| a.line()).map(|l| (i, l)))
        .collect();
    let mut concurrent_points: Vec<(Vec3, Vec<usize>)> = Vec::new();
    for (x, (_, la)) in lines.iter().enumerate() {
        for (_, lb) in &lines[x + 1..] {
            let Some(p) = la.intersection(lb) else {
                continue;
            };
            if concurrent_points.iter().any(|(q, _)| *q == p) {
                continue;
            }
            let on: Vec<usize> = lines
                .iter()
                .filter(|(_, l)| l.contains(&p))
                .map(|(i, _)| *i)
                .collect();
            concurrent_points.push((p, on));
        }
    }
    let origin = zero3();
    let through_origin = lines
        .iter()
        .filter(|(_, l)| l.contains(&origin))
        .map(|(i, _)| *i)
        .collect();

    let mut angle_equalities = Vec::new();
    if n >= 3 {
        for i in 0..n {
            let idx = [i, (i + 1) % n, (i + 2) % n];
            let [Some(u), Some(v), Some(w)] = idx.map(|k| axes[k].as_ref()) else {
                continue;
            };
            let (Ok(first), Ok(second)) = (
                angle_cos_squared(u.direction(), v.direction()),
                angle_cos_squared(v.direction(), w.direction()),
            ) else {
                continue;
            };
            if first == second {
                angle_equalities.push(AngleEquality {
                    joints: idx,
                    cos_squared: first.0,
                    sign: first.1,
                });
            }
        }
    }

    let half_angles = joints
        .iter()
        .enumerate()
        .filter(|(_, j)| j.factor.kind() == JointKind::Rotational)
        .map(|(i, j)| {
            let p = &j.factor.h().primal;
            HalfAngle {
                joint: i,
                offset: p.w.clone(),
                norm_sq: p.norm_sq() - &p.w * &p.w,
            }
        })
        .collect();

    GeometricReport {
        parallel_classes,
        concurrent_points,
        through_origin,
        angle_equalities,
        joint_signature: l.signature(),
        half_angles,
    }
}
