//! Univariate polynomials over an arbitrary (possibly noncommutative) coefficient ring.
//!
//! Coefficients are written to the left of the indeterminate `t`, and `t`
//! commutes with every coefficient. With real coefficients this is the usual
//! polynomial ring; with quaternion or dual quaternion coefficients it gives
//! the left-polynomials used for motion polynomials.

use std::cmp::Ordering;
use std::fmt::{self, Debug};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rat::Rat;
use crate::error::{Error, Result};

/// Coefficient ring for [`Poly`].
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Embeds a real scalar (the center of the ring).
    fn from_rat(r: Rat) -> Self;

    /// Multiplication by a real scalar.
    fn scale(&self, s: &Rat) -> Self;
}

impl Coeff for Rat {
    fn from_rat(r: Rat) -> Self {
        r
    }

    fn scale(&self, s: &Rat) -> Self {
        self * s
    }
}

/// Polynomial degree; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense polynomial, ascending coefficients, never with trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Real polynomial.
pub type RPoly = Poly<Rat>;

impl<R: Coeff> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The monic linear polynomial `t - h`.
    pub fn linear(h: R) -> Self {
        Self::new(vec![-h, R::one()])
    }

    /// `c * t^n`.
    pub fn monomial(c: R, n: usize) -> Self {
        let mut coeffs = vec![R::zero(); n];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as a number; zero for the zero polynomial. Only use where the
    /// zero polynomial has been excluded.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(s)).collect())
    }

    /// Product with a real polynomial (which commutes with everything).
    pub fn mul_real(&self, m: &RPoly) -> Self {
        if self.is_zero() || m.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + m.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in m.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.scale(b);
            }
        }
        Self::new(out)
    }

    /// Left multiplication of every coefficient by `c`.
    pub fn left_mul(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| c.clone() * a.clone()).collect())
    }

    /// Right multiplication of every coefficient by `c`.
    pub fn right_mul(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Value at `h` from the expanded form, coefficients on the left:
    /// `sum c_i h^i`.
    pub fn eval_right(&self, h: &R) -> R {
        let mut acc = R::zero();
        let mut power = R::one();
        for c in &self.coeffs {
            acc = acc + c.clone() * power.clone();
            power = power * h.clone();
        }
        acc
    }

    /// Value at a real parameter.
    pub fn eval_real(&self, t: &Rat) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(t) + c.clone();
        }
        acc
    }

    /// Right division by a monic real polynomial: `self = q * m + r`, `deg r < deg m`.
    pub fn divrem_real(&self, m: &RPoly) -> Result<(Self, Self)> {
        let n = m.degree().finite().ok_or(Error::DivisionByZero)?;
        let lead = m.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= n {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![R::zero(); rem.len() - n];
        let inv = lead.recip();
        for k in (0..quot.len()).rev() {
            let q = rem[k + n].scale(&inv);
            for (j, mj) in m.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.scale(mj);
            }
            quot[k] = q;
        }
        rem.truncate(n);
        Ok((Self::new(quot), Self::new(rem)))
    }
}

impl<R: Coeff> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<R: Coeff> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<R: Coeff> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<R: Coeff> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Coeff> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Coeff> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl<R: Coeff> Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl RPoly {
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| super::rat::int(c)).collect())
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.eval_real(t)
    }

    /// Euclidean division by an arbitrary nonzero real polynomial.
    pub fn divrem(&self, d: &RPoly) -> Result<(RPoly, RPoly)> {
        let lead = d.leading().ok_or(Error::DivisionByZero)?.clone();
        let monic = d.scale(&lead.recip());
        let (q, r) = self.divrem_real(&monic)?;
        Ok((q.scale(&lead.recip()), r))
    }

    /// Exact divisibility test: `d | p`.
    pub fn divides(d: &RPoly, p: &RPoly) -> Result<bool> {
        Ok(p.divrem(d)?.1.is_zero())
    }

    pub fn monic(&self) -> RPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => RPoly::zero(),
        }
    }

    pub fn derivative(&self) -> RPoly {
        RPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * super::rat::int(i as i64))
                .collect(),
        )
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(a: &RPoly, b: &RPoly) -> RPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free decomposition (Yun): returns `(f_1, f_2, ...)` with
    /// `monic(p) = prod f_i^i`, each `f_i` square-free and monic.
    pub fn squarefree(&self) -> Vec<RPoly> {
        let p = self.monic();
        if p.deg() == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let a = RPoly::gcd(&p, &dp);
        let mut b = p.divrem(&a).expect("gcd divides").0;
        let mut c = dp.divrem(&a).expect("gcd divides").0;
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        loop {
            let f = RPoly::gcd(&b, &d);
            b = b.divrem(&f).expect("gcd divides").0;
            c = d.divrem(&f).expect("gcd divides").0;
            out.push(f);
            if b.deg() == 0 {
                break;
            }
            d = &c - &b.derivative();
        }
        while out.last().is_some_and(|f| f.deg() == 0) {
            out.pop();
        }
        out
    }

    /// Number of distinct real roots (Sturm sequence).
    pub fn count_real_roots(&self) -> usize {
        if self.deg() == 0 {
            return 0;
        }
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].divrem(&seq[n - 1]).expect("nonzero").1;
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        let sign_changes = |signs: Vec<i32>| {
            let nz: Vec<i32> = signs.into_iter().filter(|&s| s != 0).collect();
            nz.windows(2).filter(|w| w[0] != w[1]).count()
        };
        // Leading-term signs at +inf and -inf.
        let at_pos = seq
            .iter()
            .map(|q| sign(q.leading().expect("nonzero")))
            .collect();
        let at_neg = seq
            .iter()
            .map(|q| {
                let s = sign(q.leading().expect("nonzero"));
                if q.deg() % 2 == 1 {
                    -s
                } else {
                    s
                }
            })
            .collect();
        sign_changes(at_neg) - sign_changes(at_pos)
    }

    /// Lexicographic comparison on coefficients, constant term first.
    pub fn cmp_coeffs(&self, other: &RPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().cmp(other.coeffs.iter()))
    }
}

fn sign(r: &Rat) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
                if i > 0 {
                    write!(f, " ")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::{int, rat};

    #[test]
    fn zero_degree_is_negative_infinity() {
        assert_eq!(RPoly::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(RPoly::from_ints(&[0, 0]).degree(), Degree::NegInfinity);
    }

    #[test]
    fn division_reconstructs() {
        let p = RPoly::from_ints(&[2, -3, 0, 1, 5]);
        let d = RPoly::from_ints(&[1, 0, 3]);
        let (q, r) = p.divrem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, p);
        assert!(r.deg() < 2);
    }

    #[test]
    fn divides_examples() {
        let d = RPoly::from_ints(&[1, 0, 1]);
        let p = &d * &RPoly::from_ints(&[2, 0, 1]);
        assert!(RPoly::divides(&d, &p).unwrap());
        assert!(RPoly::divides(&d, &d).unwrap());
        // D conj(D) for D = -i(5/2 t - 3/4).
        let dd = RPoly::new(vec![rat(9, 16), rat(-15, 4), rat(25, 4)]);
        assert!(!RPoly::divides(&d, &dd).unwrap());
        assert!(RPoly::divides(&RPoly::zero(), &d).is_err());
    }

    #[test]
    fn squarefree_parts() {
        // (t^2+1)^2 (t-1)^3
        let a = RPoly::from_ints(&[1, 0, 1]);
        let b = RPoly::from_ints(&[-1, 1]);
        let p = &(&(&a * &a) * &b) * &(&b * &b);
        let parts = p.squarefree();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], RPoly::one());
        assert_eq!(parts[1], a);
        assert_eq!(parts[2], b);
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(RPoly::from_ints(&[1, 0, 1]).count_real_roots(), 0);
        assert_eq!(RPoly::from_ints(&[2, -3, 1]).count_real_roots(), 2);
        assert_eq!(RPoly::from_ints(&[-2, 0, 1]).count_real_roots(), 2);
        assert_eq!(RPoly::from_ints(&[0, 0, 0, 1]).count_real_roots(), 1);
    }

    #[test]
    fn display() {
        assert_eq!(RPoly::from_ints(&[1, 0, 1]).to_string(), "t^2 + 1");
        assert_eq!(
            RPoly::new(vec![rat(-3, 4), rat(5, 2)]).to_string(),
            "5/2 t - 3/4"
        );
        assert_eq!(RPoly::new(vec![int(0), int(-1)]).to_string(), "-t");
    }
}
