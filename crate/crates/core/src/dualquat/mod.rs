//! Quaternions, dual quaternions and the geometry of their point action.

pub mod dual;
pub mod geometry;
pub mod quaternion;

pub use dual::DualQuaternion;
pub use geometry::{
    act_on_point, angle_cos_squared, axis_of, classify_linear, common_point, is_joint_coefficient,
    quaternion_roots_of_real_quadratic, study_condition, Axis, JointKind, PlueckerLine,
};
pub use quaternion::{add3, cross, dot, is_zero3, scale3, sub3, vec3, zero3, Quaternion, Vec3};
