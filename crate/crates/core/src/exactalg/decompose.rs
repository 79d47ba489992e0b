//! Splitting non-negative real polynomials into monic quadratic factors.
//!
//! Roots are located numerically (Aberth iteration on each square-free
//! part), turned into candidate rational factors via continued fractions and
//! then certified by exact division. Nothing is returned in exact mode that
//! has not passed the exact check.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::poly::RPoly;
use super::rat::{convergents, sqrt_exact, to_f64, Rat};
use crate::error::{Error, Result};

/// Arithmetic mode for operations that may leave the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub enum Mode {
    #[default]
    Exact,
    /// Floating point with an absolute coefficient tolerance.
    Float(f64),
}

/// Roots of a real quadratic.
#[derive(Clone, Debug, PartialEq)]
pub enum QuadraticRoots {
    Distinct(Rat, Rat),
    Double(Rat),
    ComplexPair,
    Float(f64, f64),
}

/// `d | p`, exactly.
pub fn rpoly_divides(d: &RPoly, p: &RPoly) -> Result<bool> {
    RPoly::divides(d, p)
}

pub fn quadratic_roots(p: &RPoly, mode: Mode) -> Result<QuadraticRoots> {
    if p.deg() != 2 || p.is_zero() {
        return Err(Error::Precondition(format!(
            "expected a quadratic, got degree {}",
            p.degree()
        )));
    }
    let (a, b, c) = (p.coeff(2), p.coeff(1), p.coeff(0));
    let disc = &b * &b - Rat::from_integer(4.into()) * &a * &c;
    if disc.is_negative() {
        return Ok(QuadraticRoots::ComplexPair);
    }
    let two_a = &a + &a;
    if disc.is_zero() {
        return Ok(QuadraticRoots::Double(-&b / &two_a));
    }
    match mode {
        Mode::Exact => {
            let s = sqrt_exact(&disc).ok_or(Error::ExactModeIrrationalRoot)?;
            let mut r1 = (-&b - &s) / &two_a;
            let mut r2 = (-&b + &s) / &two_a;
            if r1 > r2 {
                std::mem::swap(&mut r1, &mut r2);
            }
            Ok(QuadraticRoots::Distinct(r1, r2))
        }
        Mode::Float(_) => {
            let (bf, df, af) = (to_f64(&b), to_f64(&disc).sqrt(), to_f64(&two_a));
            let (r1, r2) = ((-bf - df) / af, (-bf + df) / af);
            Ok(QuadraticRoots::Float(r1.min(r2), r1.max(r2)))
        }
    }
}

/// Writes `p` (non-negative, even degree) as a positive constant times a
/// product of monic quadratics, each irreducible over the reals or the square
/// of a linear factor. Squares come first, then irreducible factors; each
/// group is sorted by coefficients.
pub fn quadratic_factor_decomposition(p: &RPoly, mode: Mode) -> Result<Vec<RPoly>> {
    let lead = p
        .leading()
        .ok_or_else(|| Error::Precondition("zero polynomial has no decomposition".into()))?;
    if p.deg() % 2 == 1 || lead.is_negative() {
        return Err(Error::NotNonNegative);
    }
    if let Mode::Float(eps) = mode {
        return float_decomposition(p, eps);
    }
    let mut squares = Vec::new();
    let mut irreducible = Vec::new();
    for (idx, part) in p.squarefree().into_iter().enumerate() {
        let mult = idx + 1;
        if part.deg() == 0 {
            continue;
        }
        let (linears, quads) = split_squarefree(&part)?;
        if !linears.is_empty() && mult % 2 == 1 {
            return Err(Error::NotNonNegative);
        }
        for r in linears {
            let sq = &r * &r;
            squares.extend(std::iter::repeat_n(sq, mult / 2));
        }
        for q in quads {
            irreducible.extend(std::iter::repeat_n(q, mult));
        }
    }
    squares.sort_by(|a, b| a.cmp_coeffs(b));
    irreducible.sort_by(|a, b| a.cmp_coeffs(b));
    squares.extend(irreducible);
    Ok(squares)
}

/// Splits a monic square-free polynomial into rational linear factors (its
/// real roots) and rational irreducible quadratics.
fn split_squarefree(f: &RPoly) -> Result<(Vec<RPoly>, Vec<RPoly>)> {
    let n_real = f.count_real_roots();
    let mut roots = numeric_roots(f);
    roots.sort_by(|a, b| a.im.abs().total_cmp(&b.im.abs()));
    let (real, complex) = roots.split_at(n_real);
    let mut rest = f.clone();
    let mut linears = Vec::new();
    for r in real {
        let lin = certify_linear(&rest, r.re).ok_or(Error::ExactModeIrrationalSplit)?;
        rest = rest.divrem(&lin)?.0;
        linears.push(lin);
    }
    let mut quads = Vec::new();
    let mut pending: Vec<Complex64> = complex.iter().filter(|z| z.im > 0.0).copied().collect();
    pending.sort_by(|a, b| a.re.total_cmp(&b.re));
    for z in pending {
        if rest.deg() == 0 {
            break;
        }
        let q = certify_quadratic(&rest, z).ok_or(Error::ExactModeIrrationalSplit)?;
        rest = rest.divrem(&q)?.0;
        quads.push(q);
    }
    if rest.deg() != 0 {
        return Err(Error::ExactModeIrrationalSplit);
    }
    Ok((linears, quads))
}

fn max_den() -> BigInt {
    BigInt::from(10).pow(12)
}

fn close(candidate: &Rat, x: f64) -> bool {
    (to_f64(candidate) - x).abs() <= 1e-6 * (1.0 + x.abs())
}

fn certify_linear(f: &RPoly, root: f64) -> Option<RPoly> {
    convergents(root, &max_den())
        .into_iter()
        .filter(|r| close(r, root))
        .find(|r| f.eval(r).is_zero())
        .map(|r| RPoly::new(vec![-r, Rat::one()]))
}

fn certify_quadratic(f: &RPoly, z: Complex64) -> Option<RPoly> {
    let b = -2.0 * z.re;
    let c = z.norm_sqr();
    let bs: Vec<Rat> = convergents(b, &max_den())
        .into_iter()
        .filter(|r| close(r, b))
        .collect();
    let cs: Vec<Rat> = convergents(c, &max_den())
        .into_iter()
        .filter(|r| close(r, c))
        .collect();
    for bc in &bs {
        for cc in &cs {
            let q = RPoly::new(vec![cc.clone(), bc.clone(), Rat::one()]);
            if RPoly::divides(&q, f).unwrap_or(false) {
                return Some(q);
            }
        }
    }
    None
}

/// All complex roots of `f` (Aberth–Ehrlich iteration with Newton polish).
pub(crate) fn numeric_roots(f: &RPoly) -> Vec<Complex64> {
    let n = f.deg();
    if n == 0 {
        return Vec::new();
    }
    let lead = to_f64(f.leading().expect("nonzero"));
    let cs: Vec<f64> = f.coeffs().iter().map(|c| to_f64(c) / lead).collect();
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &c in cs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    };
    let bound = 1.0 + cs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut zs: Vec<Complex64> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(0.5 * bound, ang)
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(zs[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (zs[i] - zs[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                zs[i] -= step;
                moved = moved.max(step.norm() / (1.0 + zs[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    for z in zs.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval(*z);
            let step = p / dp;
            if step.is_finite() {
                *z -= step;
            }
        }
    }
    zs
}

fn float_decomposition(p: &RPoly, eps: f64) -> Result<Vec<RPoly>> {
    let monic = p.monic();
    let mut roots = numeric_roots(&monic);
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let mut squares = Vec::new();
    let mut irreducible = Vec::new();
    let mut used = vec![false; roots.len()];
    let from = |x: f64| Rat::from_float(x).unwrap_or_else(Rat::zero);
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let z = roots[i];
        // Partner: conjugate for complex roots, nearest real root otherwise.
        let j = (0..roots.len())
            .filter(|&j| !used[j])
            .min_by(|&a, &b| {
                (roots[a] - z.conj())
                    .norm()
                    .total_cmp(&(roots[b] - z.conj()).norm())
            })
            .ok_or(Error::NotNonNegative)?;
        used[j] = true;
        let w = roots[j];
        let b = -(z + w).re;
        let c = (z * w).re;
        let q = RPoly::new(vec![from(c), from(b), Rat::one()]);
        if z.im.abs() <= eps.sqrt() {
            squares.push(q);
        } else {
            irreducible.push(q);
        }
    }
    let product = squares
        .iter()
        .chain(irreducible.iter())
        .fold(RPoly::one(), |acc, q| &acc * q);
    let residual = (&product - &monic)
        .coeffs()
        .iter()
        .fold(0.0f64, |m, c| m.max(to_f64(c).abs()));
    if residual > eps {
        return Err(Error::Numerical(format!(
            "float decomposition residual {residual:e} exceeds tolerance {eps:e}"
        )));
    }
    squares.extend(irreducible);
    Ok(squares)
}
