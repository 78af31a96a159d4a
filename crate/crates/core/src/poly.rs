//! Laurent polynomials in the spectral variable `x` with exact rational
//! coefficients.
//!
//! The central non-ring operation is the spectral shift: with a fixed
//! rational base `t = q^{1/2}`, `shift(p, k)(x) = p(x t^k)`, realized
//! coefficient-wise as `a_j -> a_j t^{k j}`. Every `x q^s` substitution in
//! the functional relations is an integer number of such half-steps, so
//! all shifts stay inside exact rational arithmetic.
//!
//! Exponents may be negative (the support is a finite window of Z); the
//! objects produced by the hierarchy are ordinary polynomials, but the
//! Laurent window keeps shifts and divisibility uniform.

use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{self, Scalar};

/// Dense Laurent polynomial: `sum_i coeffs[i] x^{base+i}` with nonzero
/// first and last coefficients (the zero polynomial stores no
/// coefficients).
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    base: i64,
    coeffs: Vec<Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            base: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                base: 0,
                coeffs: vec![c],
            }
        }
    }

    /// `c x^k`.
    pub fn monomial(k: i64, c: Scalar) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                base: k,
                coeffs: vec![c],
            }
        }
    }

    pub fn x() -> Self {
        Self::monomial(1, Scalar::one())
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents add.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Scalar)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p = &p + &Self::monomial(e, c);
        }
        p
    }

    /// Dense constructor from ordinary-polynomial coefficients
    /// `c0 + c1 x + ...`.
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        let mut p = LaurentPoly { base: 0, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.base += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.base = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.base == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.base)
    }

    /// Highest exponent with nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.base + self.coeffs.len() as i64 - 1)
    }

    /// Degree as an ordinary polynomial (max exponent; 0 for the zero
    /// polynomial, which keeps degree statistics simple).
    pub fn degree(&self) -> i64 {
        self.max_exp().unwrap_or(0)
    }

    pub fn coeff(&self, e: i64) -> Scalar {
        if self.is_zero() || e < self.base || e >= self.base + self.coeffs.len() as i64 {
            Scalar::zero()
        } else {
            self.coeffs[(e - self.base) as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        let base = self.base;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (base + i as i64, c))
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            base: self.base,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            base: self.base,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// `p(x) -> p(x t^k)`: coefficient rule `a_j -> a_j t^{k j}`.
    pub fn shift(&self, k: i64, t: &Scalar) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let step = scalar::pow_i64(t, k);
        let mut factor = scalar::pow_i64(t, k * self.base);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &factor);
            factor *= &step;
        }
        LaurentPoly {
            base: self.base,
            coeffs,
        }
    }

    /// Multiplies by `x^k`.
    pub fn mul_xpow(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            base: self.base + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Exact evaluation. Negative exponents require `x0 != 0`.
    pub fn eval(&self, x0: &Scalar) -> crate::Result<Scalar> {
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        if x0.is_zero() {
            if self.base < 0 {
                return Err(crate::Error::PoleAtSample);
            }
            return Ok(self.coeff(0));
        }
        // Horner on the dense window, then the base power.
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        Ok(acc * scalar::pow_i64(x0, self.base))
    }

    /// Exact division in the Laurent ring (where `x` is a unit):
    /// returns `Some(q)` with `self = d q` iff `d` divides `self`.
    pub fn divide_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        // Long division on the dense windows; the base offsets ride along.
        let mut rem = self.coeffs.clone();
        let dc = &d.coeffs;
        let dlead = dc.last().unwrap();
        let qlen = rem.len() - dc.len() + 1;
        let mut q = vec![Scalar::zero(); qlen];
        for qi in (0..qlen).rev() {
            let lead = rem[qi + dc.len() - 1].clone();
            if lead.is_zero() {
                continue;
            }
            let coef = lead / dlead;
            for (di, dcoef) in dc.iter().enumerate() {
                let t = dcoef * &coef;
                rem[qi + di] -= t;
            }
            q[qi] = coef;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut out = LaurentPoly {
            base: self.base - d.base,
            coeffs: q,
        };
        out.normalize();
        Some(out)
    }

    /// Monic gcd of the ordinary-polynomial parts (`x` powers are units in
    /// the Laurent ring and are stripped). Returns 0 only if both are 0.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        fn plain(p: &LaurentPoly) -> Vec<Scalar> {
            p.coeffs.clone()
        }
        fn rem(mut a: Vec<Scalar>, b: &[Scalar]) -> Vec<Scalar> {
            let blead = b.last().unwrap();
            while a.len() >= b.len() {
                let lead = a.last().unwrap().clone();
                let coef = lead / blead;
                let off = a.len() - b.len();
                for (i, bc) in b.iter().enumerate() {
                    let t = bc * &coef;
                    a[off + i] -= t;
                }
                while a.last().map_or(false, |c| c.is_zero()) {
                    a.pop();
                }
                if a.is_empty() {
                    break;
                }
            }
            a
        }
        if self.is_zero() {
            return other.monic_plain();
        }
        if other.is_zero() {
            return self.monic_plain();
        }
        let mut a = plain(self);
        let mut b = plain(other);
        while !b.is_empty() {
            let r = rem(a, &b);
            a = b;
            b = r;
        }
        let lead = a.last().unwrap().clone();
        let coeffs = a.into_iter().map(|c| c / &lead).collect();
        LaurentPoly { base: 0, coeffs }
    }

    fn monic_plain(&self) -> LaurentPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let lead = self.coeffs.last().unwrap();
        LaurentPoly {
            base: 0,
            coeffs: self.coeffs.iter().map(|c| c / lead).collect(),
        }
    }

    /// Number of stored (nonzero) coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

/// `(true, Some(q))` iff `p = d q`; the divisibility predicate used by the
/// pole-cancellation suite.
pub fn divides(d: &LaurentPoly, p: &LaurentPoly) -> (bool, Option<LaurentPoly>) {
    match p.divide_exact(d) {
        Some(q) => (true, Some(q)),
        None => (false, None),
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let base = self.base.min(rhs.base);
        let top = (self.base + self.coeffs.len() as i64).max(rhs.base + rhs.coeffs.len() as i64);
        let mut coeffs = vec![Scalar::zero(); (top - base) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.base - base) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.base - base) as usize + i] += c;
        }
        let mut out = LaurentPoly { base, coeffs };
        out.normalize();
        out
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &rhs.neg()
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        let mut out = LaurentPoly {
            base: self.base + rhs.base,
            coeffs,
        };
        out.normalize();
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let cs = scalar::display_scalar(c);
            let lead = if first {
                first = false;
                cs
            } else if cs.starts_with('-') {
                format!(" - {}", &cs[1..])
            } else {
                format!(" + {cs}")
            };
            match e {
                0 => write!(f, "{lead}")?,
                1 => write!(f, "{lead}*x")?,
                _ => write!(f, "{lead}*x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn p(coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn shift_identity_case() {
        let q = p(&[1, 1]);
        assert_eq!(q.shift(0, &int(2)), q);
    }

    #[test]
    fn shift_coefficient_rule() {
        // t=2: (1+x)(x 2^2) = 1+4x
        assert_eq!(p(&[1, 1]).shift(2, &int(2)), p(&[1, 4]));
        // t=3: x^2 -> 9 x^2
        assert_eq!(
            LaurentPoly::monomial(2, int(1)).shift(1, &int(3)),
            LaurentPoly::monomial(2, int(9))
        );
    }

    #[test]
    fn shift_composes_additively() {
        let t = ratio(3, 2);
        let q = LaurentPoly::from_terms([(-1, int(5)), (0, int(1)), (3, ratio(-2, 7))]);
        assert_eq!(q.shift(2, &t).shift(3, &t), q.shift(5, &t));
    }

    #[test]
    fn divides_examples() {
        // (x-2) | (x^2-4) with quotient x+2
        let d = p(&[-2, 1]);
        let (ok, q) = divides(&d, &p(&[-4, 0, 1]));
        assert!(ok);
        assert_eq!(q.unwrap(), p(&[2, 1]));
        // (x-2) does not divide x^2+1
        let (ok, q) = divides(&d, &p(&[1, 0, 1]));
        assert!(!ok && q.is_none());
    }

    #[test]
    fn divides_laurent_offsets() {
        let d = LaurentPoly::from_terms([(-1, int(1)), (0, int(1))]); // x^{-1} + 1
        let prod = &d * &p(&[3, 1]);
        let (ok, q) = divides(&d, &prod);
        assert!(ok);
        assert_eq!(q.unwrap(), p(&[3, 1]));
    }

    #[test]
    fn eval_matches_horner_with_negative_exponents() {
        let q = LaurentPoly::from_terms([(-2, int(3)), (1, ratio(1, 2))]);
        let x0 = ratio(2, 5);
        let expect = int(3) * ratio(25, 4) + ratio(1, 2) * ratio(2, 5);
        assert_eq!(q.eval(&x0).unwrap(), expect);
        assert!(q.eval(&int(0)).is_err());
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let g = p(&[1, 1]);
        let a = &g * &p(&[-3, 1]);
        let b = &g * &p(&[5, 2]);
        assert_eq!(a.gcd(&b), g);
    }
}
