use motionfact::dualquat::{DualQuaternion, Vec3};
use motionfact::exactalg::{fmt_decimal, fmt_rat, int, Rat};
use motionfact::factorization::{FactorFamily, Factorization};
use motionfact::linkage::{ClosureReport, GeometricReport, Linkage};
use motionfact::wire::{self, to_json};
use serde_json::{json, Value};

pub fn print_json(v: &Value) {
    out!("{}", to_json(v));
}

pub fn factorization(f: &Factorization) -> Value {
    json!({ "signature": f.signature(), "factorization": wire::factorization_to_wire(f) })
}

pub fn family(f: &FactorFamily) -> Value {
    serde_json::to_value(wire::family_to_wire(f)).expect("serializable")
}

pub fn linkage(l: &Linkage) -> Value {
    json!({ "signature": l.signature(), "linkage": wire::linkage_to_wire(l) })
}

pub fn point(p: &Vec3) -> Value {
    json!(p.iter().map(fmt_rat).collect::<Vec<_>>())
}

pub fn point_text(p: &Vec3) -> String {
    format!("({}, {}, {})", p[0], p[1], p[2])
}

pub fn dq_decimal(h: &DualQuaternion, digits: usize) -> String {
    let c = h.components();
    let part = |r: &[Rat]| {
        r.iter()
            .map(|x| fmt_decimal(x, digits))
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!("[{}] + ε[{}]", part(&c[..4]), part(&c[4..]))
}

/// One-based joint indices, comma separated.
fn joints(js: &[usize]) -> String {
    js.iter()
        .map(|j| (j + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn family_text(f: &FactorFamily) -> String {
    let mut out = format!("family in parameters [{}]", f.parameters().join(", "));
    for (k, a) in f.factors().iter().enumerate() {
        out.push_str(&format!("\n  factor {}: t - ({})", k + 1, a.constant));
        for (name, d) in f.parameters().iter().zip(&a.directions) {
            if d.components().iter().any(|c| *c != int(0)) {
                out.push_str(&format!(" - {name} ({d})"));
            }
        }
    }
    out
}

pub fn geometry(r: &GeometricReport) -> Value {
    json!({
        "joint_signature": r.joint_signature,
        "parallel_classes": r.parallel_classes.iter().map(|c| c.iter().map(|j| j + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "concurrent_points": r.concurrent_points.iter().map(|(p, js)| json!({
            "point": point(p),
            "joints": js.iter().map(|j| j + 1).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "through_origin": r.through_origin.iter().map(|j| j + 1).collect::<Vec<_>>(),
        "angle_equalities": r.angle_equalities.iter().map(|a| json!({
            "joints": a.joints.iter().map(|j| j + 1).collect::<Vec<_>>(),
            "cos_squared": fmt_rat(&a.cos_squared),
            "sign": a.sign,
        })).collect::<Vec<_>>(),
        "half_angles": r.half_angles.iter().map(|h| json!({
            "joint": h.joint + 1,
            "offset": fmt_rat(&h.offset),
            "norm_sq": fmt_rat(&h.norm_sq),
        })).collect::<Vec<_>>(),
        "equal_joint_angles": r.equal_joint_angles(),
    })
}

pub fn geometry_text(r: &GeometricReport) -> String {
    let mut out = format!("signature: {}\n", r.joint_signature);
    let classes: Vec<String> = r
        .parallel_classes
        .iter()
        .map(|c| format!("{{{}}}", joints(c)))
        .collect();
    out.push_str(&format!("parallel classes: {}\n", classes.join(" ")));
    for (p, js) in &r.concurrent_points {
        out.push_str(&format!("axes {} meet at {}\n", joints(js), point_text(p)));
    }
    out.push_str(&format!("through origin: {}\n", joints(&r.through_origin)));
    for a in &r.angle_equalities {
        out.push_str(&format!(
            "angle({},{}) = angle({},{}), cos^2 = {}\n",
            a.joints[0] + 1,
            a.joints[1] + 1,
            a.joints[1] + 1,
            a.joints[2] + 1,
            a.cos_squared
        ));
    }
    out.push_str(&format!("equal joint angles: {}", r.equal_joint_angles()));
    out
}

pub fn closure(r: &ClosureReport) -> Value {
    json!({
        "passed": r.passed(),
        "symbolic": r.symbolic,
        "samples": r.samples.iter().map(|s| json!({
            "t": fmt_rat(&s.t),
            "closes": s.closes(),
            "singular": s.residual.is_none(),
        })).collect::<Vec<_>>(),
    })
}

pub fn closure_text(r: &ClosureReport) -> String {
    let closed = r.samples.iter().filter(|s| s.closes()).count();
    format!(
        "closure: symbolic {}, {} of {} samples closed exactly ({} singular): {}",
        if r.symbolic { "ok" } else { "FAILED" },
        closed,
        r.samples.len(),
        r.singular_samples(),
        if r.passed() { "pass" } else { "FAIL" }
    )
}
