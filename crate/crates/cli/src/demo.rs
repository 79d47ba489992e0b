use motionfact::dualquat::{DualQuaternion, JointKind, Quaternion};
use motionfact::exactalg::{int, rat, Poly, RPoly, Rat};
use motionfact::linkage::{coupler_trajectory, geometric_report, straight_line_test};
use motionfact::synthesis::{build_constraint_motion, darboux_7r, ConstraintInput};
use serde_json::json;

use crate::commands::verification_samples;
use crate::render::{self, print_json};
use crate::{Config, Failure, Output};

/// P = t - (7i - 4j + 4k)/9, ξ = t² + 1, η = 5t/2 - 3/4.
pub fn darboux_input() -> ConstraintInput {
    let h = Quaternion::new(int(0), rat(7, 9), rat(-4, 9), rat(4, 9));
    ConstraintInput::new(
        Poly::linear(h),
        RPoly::from_ints(&[1, 0, 1]),
        RPoly::new(vec![rat(-3, 4), rat(5, 2)]),
    )
    .expect("valid example input")
}

fn r(n: i64, d: i64) -> Rat {
    rat(n, d)
}

fn dq(c: [Rat; 8]) -> DualQuaternion {
    DualQuaternion::from_components(c)
}

/// The seven joint coefficients the example is known to produce.
pub fn expected_joints() -> Vec<DualQuaternion> {
    let z = || int(0);
    vec![
        dq([
            z(),
            r(7, 9),
            r(4, 9),
            r(-4, 9),
            z(),
            r(5, 4),
            r(-43, 64),
            r(97, 64),
        ]),
        dq([z(), r(-7, 9), r(-4, 9), r(4, 9), z(), z(), z(), z()]),
        dq([
            z(),
            r(7, 9),
            r(-4, 9),
            r(4, 9),
            z(),
            r(5, 4),
            r(43, 64),
            r(-97, 64),
        ]),
        dq([z(), r(7, 9), r(-4, 9), r(4, 9), z(), z(), z(), z()]),
        dq([z(), z(), int(1), z(), z(), r(5, 4), z(), r(-3, 8)]),
        dq([z(), z(), int(-1), z(), z(), z(), z(), z()]),
        dq([z(), z(), int(1), z(), z(), r(5, 4), z(), r(3, 8)]),
    ]
}

pub fn darboux7r(cfg: &Config) -> Result<(), Failure> {
    let input = darboux_input();
    let d = darboux_7r(&input)?;
    let joints = d.joints();
    let report = geometric_report(&d.linkage);
    let samples = verification_samples(20);
    let closure = d.linkage.closure_check(&samples);
    let origin = coupler_trajectory(
        build_constraint_motion(&input)?.poly(),
        &[int(0), int(0), int(0)],
        &samples,
    )?;

    let hs: Vec<DualQuaternion> = joints.iter().map(|q| q.h().clone()).collect();
    let checks = [
        ("joints match the known solution", hs == expected_joints()),
        (
            "right factor (a, b, c) = (5/4, 43/64, -97/64)",
            d.right.abc() == [r(5, 4), r(43, 64), r(-97, 64)],
        ),
        (
            "linear system residuals vanish",
            d.right.residuals.iter().all(|x| *x == int(0)),
        ),
        (
            "solvability determinant is non-zero",
            d.right.delta != int(0),
        ),
        (
            "all joints revolute",
            joints.iter().all(|q| q.kind() == JointKind::Rotational),
        ),
        (
            "parallel classes {1,2} {3,4} {5,6,7}",
            report.parallel_classes == vec![vec![0, 1], vec![2, 3], vec![4, 5, 6]],
        ),
        ("equal joint angles", report.equal_joint_angles()),
        ("closure at 20 samples", closure.passed()),
        (
            "origin moves on a straight line",
            straight_line_test(&origin),
        ),
    ];
    let ok = checks.iter().all(|(_, pass)| *pass);

    match cfg.output {
        Output::Json => print_json(&json!({
            "joints": joints.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
            "linkage": render::linkage(&d.linkage),
            "geometry": render::geometry(&report),
            "closure": render::closure(&closure),
            "checks": checks.iter().map(|(name, pass)| json!({ "check": name, "pass": pass })).collect::<Vec<_>>(),
            "passed": ok,
        })),
        _ => {
            for (k, q) in joints.iter().enumerate() {
                out!("Q{} = {q}", k + 1);
            }
            out!("{}", render::geometry_text(&report));
            out!("{}", render::closure_text(&closure));
            for (name, pass) in &checks {
                out!("{} {name}", if *pass { "ok  " } else { "FAIL" });
            }
            out!(
                "{}",
                if ok {
                    "all checks passed"
                } else {
                    "some checks failed"
                }
            );
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
