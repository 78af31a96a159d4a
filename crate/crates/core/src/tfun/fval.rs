//! Factored rational values for the tableaux-sum routes.
//!
//! A tableaux T-function is a sum of many terms whose denominators are
//! products of shifted Q-functions drawn from a small set. Keeping the
//! denominator as a multiset of (subset, shift) factors lets terms cancel
//! factor-by-factor and keeps the common denominator of a whole sum near
//! its true size instead of the product of all term denominators.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::LaurentPoly;
use crate::scalar::Scalar;

use super::TCtx;

/// A shifted table entry: `poly(mask) (x t^shift)`.
pub type FactorKey = (u32, i64);

/// Multiset of factors.
pub type Factors = BTreeMap<FactorKey, u32>;

fn insert(f: &mut Factors, key: FactorKey, mult: u32) {
    if mult > 0 {
        *f.entry(key).or_insert(0) += mult;
    }
}

fn remove_one(f: &mut Factors, key: &FactorKey) -> bool {
    match f.get_mut(key) {
        Some(m) if *m > 0 => {
            *m -= 1;
            if *m == 0 {
                f.remove(key);
            }
            true
        }
        _ => false,
    }
}

/// A single product term `coef * prod(num) / prod(den)`, kept fully
/// factored so that shared factors cancel exactly.
#[derive(Clone, Debug)]
pub struct FTerm {
    pub coef: Scalar,
    pub num: Factors,
    pub den: Factors,
}

impl FTerm {
    pub fn one() -> Self {
        FTerm {
            coef: Scalar::one(),
            num: Factors::new(),
            den: Factors::new(),
        }
    }

    pub fn scale(&mut self, s: &Scalar) {
        self.coef *= s;
    }

    pub fn mul_num(&mut self, key: FactorKey) {
        if !remove_one(&mut self.den, &key) {
            insert(&mut self.num, key, 1);
        }
    }

    pub fn mul_den(&mut self, key: FactorKey) {
        if !remove_one(&mut self.num, &key) {
            insert(&mut self.den, key, 1);
        }
    }

    /// Multiplies by another term, cancelling matching factors.
    pub fn mul_term(&mut self, other: &FTerm) {
        self.coef *= &other.coef;
        for (key, mult) in &other.num {
            for _ in 0..*mult {
                self.mul_num(*key);
            }
        }
        for (key, mult) in &other.den {
            for _ in 0..*mult {
                self.mul_den(*key);
            }
        }
    }
}

/// Sum-of-terms value: expanded numerator over a factored denominator.
#[derive(Clone, Debug)]
pub struct FVal {
    pub num: LaurentPoly,
    pub den: Factors,
}

impl FVal {
    pub fn zero() -> Self {
        FVal {
            num: LaurentPoly::zero(),
            den: Factors::new(),
        }
    }

    pub fn one() -> Self {
        FVal {
            num: LaurentPoly::one(),
            den: Factors::new(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        FVal {
            num: p,
            den: Factors::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn from_term(ctx: &TCtx, term: &FTerm) -> Self {
        let mut num = LaurentPoly::constant(term.coef.clone());
        for (key, mult) in &term.num {
            let p = ctx.factor_poly(*key);
            for _ in 0..*mult {
                num = &num * &p;
            }
        }
        FVal {
            num,
            den: term.den.clone(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        FVal {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        FVal {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// `value(x) -> value(x t^k)`: shifts the numerator and every
    /// denominator factor.
    pub fn shift(&self, ctx: &TCtx, k: i64) -> Self {
        let num = self.num.shift(k, ctx.t());
        let den = self
            .den
            .iter()
            .map(|(&(m, s), &mult)| ((m, s + k), mult))
            .collect();
        FVal { num, den }
    }

    pub fn add(&self, ctx: &TCtx, other: &FVal) -> Self {
        let mut den = self.den.clone();
        for (key, &mult) in &other.den {
            let have = den.get(key).copied().unwrap_or(0);
            if mult > have {
                den.insert(*key, mult);
            }
        }
        let a = &self.num * &ctx.expand_diff(&den, &self.den);
        let b = &other.num * &ctx.expand_diff(&den, &other.den);
        let mut out = FVal { num: &a + &b, den };
        out.prune();
        out
    }

    pub fn sub(&self, ctx: &TCtx, other: &FVal) -> Self {
        self.add(ctx, &other.neg())
    }

    pub fn add_term(&mut self, ctx: &TCtx, term: &FTerm) {
        *self = self.add(ctx, &FVal::from_term(ctx, term));
    }

    pub fn mul(&self, ctx: &TCtx, other: &FVal) -> Self {
        let _ = ctx;
        let mut den = self.den.clone();
        for (key, &mult) in &other.den {
            insert(&mut den, *key, mult);
        }
        FVal {
            num: &self.num * &other.num,
            den,
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        FVal {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn mul_factor(&self, ctx: &TCtx, key: FactorKey) -> Self {
        let mut out = self.clone();
        if remove_one(&mut out.den, &key) {
            return out;
        }
        out.num = &out.num * &ctx.factor_poly(key);
        out
    }

    pub fn div_factor(&self, key: FactorKey) -> Self {
        let mut out = self.clone();
        insert(&mut out.den, key, 1);
        out
    }

    fn prune(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
        }
    }

    /// Exact equality: expand only the factor-multiset difference on each
    /// side, then compare cross-multiplied numerators.
    pub fn eq_exact(&self, ctx: &TCtx, other: &FVal) -> bool {
        let mut union = self.den.clone();
        for (key, &mult) in &other.den {
            let have = union.get(key).copied().unwrap_or(0);
            if mult > have {
                union.insert(*key, mult);
            }
        }
        let a = &self.num * &ctx.expand_diff(&union, &self.den);
        let b = &other.num * &ctx.expand_diff(&union, &other.den);
        a == b
    }

    pub fn to_ratfn(&self, ctx: &TCtx) -> crate::ratfn::RationalFn {
        crate::ratfn::RationalFn::new(self.num.clone(), ctx.expand(&self.den))
    }

    pub fn eval(&self, ctx: &TCtx, x0: &Scalar) -> crate::Result<Scalar> {
        let mut d = Scalar::one();
        for (key, mult) in &self.den {
            let v = ctx.factor_poly(*key).eval(x0)?;
            if v.is_zero() {
                return Err(crate::Error::PoleAtSample);
            }
            for _ in 0..*mult {
                d *= &v;
            }
        }
        Ok(self.num.eval(x0)? / d)
    }

    /// Degree statistic for reports.
    pub fn degree(&self, ctx: &TCtx) -> i64 {
        let den_deg: i64 = self
            .den
            .iter()
            .map(|(key, mult)| ctx.factor_poly(*key).degree() * *mult as i64)
            .sum();
        self.num.degree().max(den_deg)
    }
}
