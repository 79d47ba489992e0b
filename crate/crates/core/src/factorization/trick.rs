//! The multiplication trick: a non-circular translation `C1 = ξ + εD` has no
//! factorization, but `ξ C1` factors as `(t - g1)(t - g2)^2 (t - g3)` with
//! primal parts `p, conj p, conj p, p` for a quaternion root `p` of `ξ`.

use num_traits::{One, Signed, Zero};

use super::translational::{circular_translation_criterion, QuadraticTranslation};
use super::{AffineFactor, FactorFamily};
use crate::dualquat::{dot, vec3, DualQuaternion, Quaternion, Vec3};
use crate::error::{Error, Result};
use crate::exactalg::rat::sqrt_exact;
use crate::exactalg::{int, rat, Matrix, Poly, Rat};
use crate::motionpoly::{embed_real, DqPoly};

/// Family of factorizations of `ξ C1` with a doubled middle factor.
///
/// The root `p = p0 + s u` of `ξ` is chosen by trying the axis directions
/// first and then small rational unit vectors perpendicular to `d1`; for the
/// first direction whose linear system for the dual parts is consistent the
/// complete solution set is returned. The particular solution has a zero
/// dual part in the middle factor whenever that is possible.
pub fn multiplication_trick(c1: &DqPoly) -> Result<FactorFamily> {
    if circular_translation_criterion(c1)? {
        return Err(Error::Precondition(
            "circular translation factors directly, use the circular family".into(),
        ));
    }
    let t = QuadraticTranslation::from_motion(c1)?;
    let p0 = -t.xi.coeff(1) / int(2);
    let s2 = t.xi.coeff(0) - &p0 * &p0;
    let s = sqrt_exact(&s2).ok_or(Error::ExactModeIrrationalRoot)?;
    let target = &embed_real(&t.xi) * c1;

    let candidates = root_directions(&t.d1.vector());
    for u in &candidates {
        let p = Quaternion::new(p0.clone(), &u[0] * &s, &u[1] * &s, &u[2] * &s);
        if let Some(family) = solve_for_root(&p, &target)? {
            return Ok(family);
        }
    }
    Err(Error::NoSolution(format!(
        "the linear system for the dual parts of (t - p - εa)(t - conj p - εb)^2(t - p - εc) = {} \
         is inconsistent for all {} candidate roots p of {}",
        "ξ C1",
        candidates.len(),
        t.xi
    )))
}

fn solve_for_root(p: &Quaternion, target: &DqPoly) -> Result<Option<FactorFamily>> {
    let pc = p.conj();
    let v = p.vector();
    let factors_at = |x: &[Rat]| -> [DualQuaternion; 4] {
        let a = Quaternion::from_vector(vec3(x[0].clone(), x[1].clone(), x[2].clone()));
        let b = Quaternion::from_vector(vec3(x[3].clone(), x[4].clone(), x[5].clone()));
        let c = Quaternion::from_vector(vec3(x[6].clone(), x[7].clone(), x[8].clone()));
        [
            DualQuaternion::new(p.clone(), a),
            DualQuaternion::new(pc.clone(), b.clone()),
            DualQuaternion::new(pc.clone(), b),
            DualQuaternion::new(p.clone(), c),
        ]
    };
    // Product identity plus the Study condition of each factor; both are
    // affine in the nine unknown dual vector components.
    let residual = |x: &[Rat]| -> Vec<Rat> {
        let hs = factors_at(x);
        let prod = hs
            .iter()
            .fold(DqPoly::one(), |acc, h| &acc * &Poly::linear(h.clone()));
        let diff = &prod - target;
        let mut r: Vec<Rat> = (0..=4).flat_map(|i| diff.coeff(i).components()).collect();
        let neg_v = vec3(-v[0].clone(), -v[1].clone(), -v[2].clone());
        r.push(dot(&v, &hs[0].dual.vector()));
        r.push(dot(&neg_v, &hs[1].dual.vector()));
        r.push(dot(&v, &hs[3].dual.vector()));
        r
    };
    let (m, rhs) = Matrix::from_affine(9, residual);
    let Some(full) = m.solve_affine(&rhs) else {
        return Ok(None);
    };

    let mut rows = m.rows().to_vec();
    let mut brhs = rhs.clone();
    for k in 3..6 {
        let mut row = vec![Rat::zero(); 9];
        row[k] = Rat::one();
        rows.push(row);
        brhs.push(Rat::zero());
    }
    let particular = Matrix::new(rows, 9)
        .solve_affine(&brhs)
        .map(|s| s.particular)
        .unwrap_or_else(|| full.particular.clone());

    let base = factors_at(&particular);
    let dirs: Vec<[DualQuaternion; 4]> = full
        .directions
        .iter()
        .map(|d| {
            let hs = factors_at(d);
            hs.map(|h| DualQuaternion::from_dual(h.dual))
        })
        .collect();
    let factors = (0..4)
        .map(|i| AffineFactor {
            constant: base[i].clone(),
            directions: dirs.iter().map(|d| d[i].clone()).collect(),
        })
        .collect();
    let names = (1..=dirs.len()).map(|j| format!("s{j}")).collect();
    let family = FactorFamily::new(
        names,
        vec![Rat::zero(); dirs.len()],
        factors,
        Poly::one(),
        target.clone(),
    )?;
    Ok(Some(family))
}

/// `e_x, e_y, e_z`, then rational unit vectors perpendicular to `d1` from
/// the inverse stereographic projection of small integer points.
fn root_directions(d1: &Vec3) -> Vec<Vec3> {
    let mut out: Vec<Vec3> = vec![
        vec3(int(1), int(0), int(0)),
        vec3(int(0), int(1), int(0)),
        vec3(int(0), int(0), int(1)),
    ];
    const R: i64 = 4;
    for m in -R..=R {
        for n in -R..=R {
            let den = m * m + n * n + 1;
            let w = [
                rat(2 * m, den),
                rat(2 * n, den),
                rat(m * m + n * n - 1, den),
            ];
            for perm in [[0, 1, 2], [1, 2, 0], [2, 0, 1]] {
                let u = vec3(w[perm[0]].clone(), w[perm[1]].clone(), w[perm[2]].clone());
                if dot(&u, d1).is_zero() && !out.contains(&u) {
                    out.push(u);
                }
            }
        }
    }
    // Prefer the simplest vectors.
    let height = |u: &Vec3| u.iter().map(|c| c.denom().clone()).max().unwrap();
    out[3..].sort_by_key(|u| (height(u), u.iter().filter(|c| c.is_negative()).count()));
    out
}
