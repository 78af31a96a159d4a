//! Exact scalar arithmetic: arbitrary-precision rationals in canonical
//! reduced form (gcd(num, den) = 1, den > 0), closed under the four field
//! operations. Everything downstream -- twist parameters, polynomial
//! coefficients, determinant values -- lives here.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational scalar. `num_rational::BigRational`
/// already maintains the canonical reduced form on every operation.
pub type Scalar = num_rational::BigRational;

/// Integer-valued scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `n/d` as a scalar. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// `base^exp` with integer exponent of either sign (base must be nonzero
/// when `exp < 0`).
pub fn pow_i64(base: &Scalar, exp: i64) -> Scalar {
    if exp == 0 {
        return Scalar::one();
    }
    let mag = {
        let e = exp.unsigned_abs() as u32;
        let mut acc = Scalar::one();
        let mut sq = base.clone();
        let mut rem = e;
        while rem > 0 {
            if rem & 1 == 1 {
                acc *= &sq;
            }
            rem >>= 1;
            if rem > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    };
    if exp < 0 {
        Scalar::one() / mag
    } else {
        mag
    }
}

/// Parses `"num/den"` (or a bare integer) into a scalar.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = n
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let den: BigInt = d
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Scalar::new(num, den))
}

/// Serializes a scalar as `"num/den"`, always with an explicit denominator.
pub fn format_scalar(s: &Scalar) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

/// Short human-readable form: drops the `/1` of integers.
pub fn display_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parity helper for sign prefactors `(-1)^e` with `e` of either sign.
pub fn sign_pow(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// True when `s` is an integer power of `base` with exponent in
/// `[-max_abs, max_abs]`; used by the resonance scan.
pub fn is_small_power_of(s: &Scalar, base: &Scalar, max_abs: u32) -> Option<i64> {
    if base.is_zero() || s.is_zero() {
        return None;
    }
    let mut up = Scalar::one();
    let mut down = Scalar::one();
    for k in 0..=max_abs as i64 {
        if &up == s {
            return Some(k);
        }
        if &down == s {
            return Some(-k);
        }
        up *= base;
        down /= base;
    }
    None
}

/// Signum as an exact scalar (-1, 0, 1); handy for grading factors.
pub fn signum(s: &Scalar) -> i8 {
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}
