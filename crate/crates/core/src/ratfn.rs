//! Rational functions of the spectral variable: pairs of Laurent
//! polynomials with cross-multiplied exact equality. Reduction to lowest
//! terms is lazy -- equality and the functional-relation checks never need
//! it -- and `canonicalize` is available for output.

use std::fmt;

use num_traits::Zero;

use crate::poly::LaurentPoly;
use crate::scalar::{self, Scalar};
use crate::{Error, Result};

#[derive(Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RationalFn { num, den }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_scalar(s: Scalar) -> Self {
        Self::from_poly(LaurentPoly::constant(s))
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn neg(&self) -> Self {
        RationalFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        RationalFn {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        Ok(RationalFn {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn shift(&self, k: i64, t: &Scalar) -> Self {
        RationalFn {
            num: self.num.shift(k, t),
            den: self.den.shift(k, t),
        }
    }

    /// Exact evaluation; errors when the denominator vanishes at `x0`.
    pub fn eval(&self, x0: &Scalar) -> Result<Scalar> {
        let d = self.den.eval(x0)?;
        if d.is_zero() {
            return Err(Error::PoleAtSample);
        }
        Ok(self.num.eval(x0)? / d)
    }

    /// Reduces to lowest terms and normalizes the denominator so its
    /// lowest-exponent coefficient is 1 (our denominators are products of
    /// Q-functions with Q(0) = 1, so this is the natural gauge).
    pub fn canonicalize(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let g = self.num.gcd(&self.den);
        let (mut n, mut d) = if g.is_one() {
            (self.num.clone(), self.den.clone())
        } else {
            (
                self.num.divide_exact(&g).expect("gcd divides numerator"),
                self.den.divide_exact(&g).expect("gcd divides denominator"),
            )
        };
        // Shift x-powers so the denominator is an ordinary polynomial with
        // a nonzero constant term.
        let k = d.min_exp().unwrap();
        n = n.mul_xpow(-k);
        d = d.mul_xpow(-k);
        let c = d.coeff(d.min_exp().unwrap());
        let inv = Scalar::new(c.denom().clone(), c.numer().clone());
        RationalFn {
            num: n.scale(&inv),
            den: d.scale(&inv),
        }
    }

    pub fn add(&self, rhs: &RationalFn) -> Self {
        RationalFn {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }

    pub fn sub(&self, rhs: &RationalFn) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RationalFn) -> Self {
        RationalFn {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }

    pub fn div(&self, rhs: &RationalFn) -> Result<Self> {
        Ok(self.mul(&rhs.recip()?))
    }

    /// Cross-multiplied exact equality: `a/b = c/d <=> a d = c b`.
    pub fn eq_exact(&self, rhs: &RationalFn) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        self.eq_exact(other)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonicalize();
        if c.den.is_one() {
            write!(f, "{}", c.num)
        } else {
            write!(f, "({}) / ({})", c.num, c.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

/// Leading coefficients of a polynomial, for failure witnesses.
pub fn leading_terms(p: &LaurentPoly, n: usize) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let terms: Vec<_> = p.terms().map(|(e, c)| (e, c.clone())).collect();
    for (e, c) in terms.iter().rev().take(n) {
        parts.push(format!("{}*x^{}", scalar::display_scalar(c), e));
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn p(coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn eval_x_over_one_plus_x() {
        let r = RationalFn::new(p(&[0, 1]), p(&[1, 1]));
        assert_eq!(r.eval(&int(1)).unwrap(), ratio(1, 2));
    }

    #[test]
    fn eval_is_num_over_den() {
        let r = RationalFn::new(p(&[2, -1, 3]), p(&[1, 5]));
        let x0 = ratio(3, 7);
        let expect = r.num().eval(&x0).unwrap() / r.den().eval(&x0).unwrap();
        assert_eq!(r.eval(&x0).unwrap(), expect);
    }

    #[test]
    fn normalization_point() {
        // p(0)=q(0)=1 evaluates to 1 at x=0.
        let r = RationalFn::new(p(&[1, 4, 4]), p(&[1, -2]));
        assert_eq!(r.eval(&int(0)).unwrap(), int(1));
    }

    #[test]
    fn equality_is_scaling_invariant() {
        let a = RationalFn::new(p(&[1, 1]), p(&[1, -1]));
        let m = p(&[3, 0, 2]);
        let b = RationalFn::new(a.num() * &m, a.den() * &m);
        assert!(a.eq_exact(&b));
        assert_eq!(a.canonicalize().num(), b.canonicalize().num());
    }

    #[test]
    fn pole_at_sample_reported() {
        let r = RationalFn::new(p(&[1]), p(&[-1, 1]));
        assert!(matches!(r.eval(&int(1)), Err(Error::PoleAtSample)));
    }
}
