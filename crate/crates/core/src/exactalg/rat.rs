//! Rational scalars.
//!
//! All scalar arithmetic in the crate runs on [`Rat`], an arbitrary
//! precision rational kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Builds `n/d`. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p/q`, `p` or a finite decimal such as `-0.75`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let digits = format!(
            "{}{}",
            if whole_digits.is_empty() {
                "0"
            } else {
                whole_digits
            },
            frac
        );
        let mut n: BigInt = digits.parse().map_err(|_| bad())?;
        if negative {
            n = -n;
        }
        let d = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rat::new(n, d));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(n))
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

/// Decimal rendering with `digits` fractional digits (used by float output).
pub fn fmt_decimal(r: &Rat, digits: usize) -> String {
    format!("{:.*}", digits, to_f64(r))
}

pub fn to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact square root, if `r` is the square of a rational.
pub fn sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// Continued-fraction convergents of `x` (exactly, from its binary value),
/// stopping once the denominator exceeds `max_den`.
pub fn convergents(x: f64, max_den: &BigInt) -> Vec<Rat> {
    let Some(exact) = Rat::from_float(x) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    let mut rest = exact;
    loop {
        let a = rest.floor().to_integer();
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        if &k_next > max_den {
            break;
        }
        out.push(Rat::new(h_next.clone(), k_next.clone()));
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        let frac = &rest - Rat::from_integer(a);
        if frac.is_zero() {
            break;
        }
        rest = frac.recip();
    }
    out
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_round_trip() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-6/8").unwrap(), rat(-3, 4));
        assert_eq!(parse_rat("7").unwrap(), int(7));
        assert_eq!(parse_rat("-0.75").unwrap(), rat(-3, 4));
        assert_eq!(fmt_rat(&rat(-97, 64)), "-97/64");
        assert_eq!(fmt_rat(&rat(4, 2)), "2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&int(2)), None);
        assert_eq!(sqrt_exact(&int(-4)), None);
    }

    #[test]
    fn convergents_find_small_fractions() {
        let cs = convergents(43.0 / 64.0, &BigInt::from(1000));
        assert!(cs.contains(&rat(43, 64)));
    }

    #[test]
    fn sums_agree_two_ways() {
        let (a, b, c, d) = (rat(1, 3), rat(5, 7), rat(-2, 9), rat(11, 4));
        let lhs = (&a + &b) + (&c + &d);
        let rhs = ((&d + &c) + &b) + &a;
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.numer(), rhs.numer());
        assert_eq!(lhs.denom(), rhs.denom());
    }
}
