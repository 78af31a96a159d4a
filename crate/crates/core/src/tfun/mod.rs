//! T-function routes: tableaux sums, quantum Jacobi-Trudi determinants,
//! Wronskian determinants, Laplace expansions, Weyl-group sums, typical
//! factorizations and the x -> 0 supercharacters.

pub mod boxes;
pub mod chars;
pub mod fval;
pub mod wronskian;

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::poly::LaurentPoly;
use crate::qhierarchy::QHierarchy;
use crate::scalar::Scalar;
use crate::subset::Subset;

pub use fval::{FVal, FactorKey, Factors};
pub use wronskian::{ComplementView, LaplaceRegime, QTable};

/// How symbolic Q-references resolve against the hierarchy table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Binding {
    /// Same-convention symbols read the table directly; the opposite
    /// convention reads the complement entry (the jouken identification
    /// `Q̄_I = Q_{complement I}`).
    Jouken,
    /// The reversal substitution: opposite-convention symbols read the
    /// *same* subset at the negated shift.
    NegatedShift,
}

/// Evaluation context for the tableaux-side routes: a hierarchy, a symbol
/// binding and a cache of expanded shifted factors. Caches are confined to
/// the context (one per task).
pub struct TCtx<'a> {
    h: &'a QHierarchy,
    binding: Binding,
    cache: RefCell<HashMap<FactorKey, Rc<LaurentPoly>>>,
}

impl<'a> TCtx<'a> {
    pub fn new(h: &'a QHierarchy) -> Self {
        TCtx {
            h,
            binding: Binding::Jouken,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn with_binding(h: &'a QHierarchy, binding: Binding) -> Self {
        TCtx {
            h,
            binding,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn hierarchy(&self) -> &'a QHierarchy {
        self.h
    }

    pub fn t(&self) -> &Scalar {
        self.h.twist().t()
    }

    /// Maps a symbolic reference (subset, shift, barredness-of-symbol) to
    /// a concrete table factor.
    pub fn resolve(&self, set: Subset, shift: i64, sym_barred: bool) -> FactorKey {
        let native = sym_barred == self.h.convention().is_barred();
        match (self.binding, native) {
            (_, true) => (set.0, shift),
            (Binding::Jouken, false) => (set.complement(self.h.size()).0, shift),
            (Binding::NegatedShift, false) => (set.0, -shift),
        }
    }

    /// Expanded polynomial of a resolved factor, cached.
    pub fn factor_poly(&self, key: FactorKey) -> Rc<LaurentPoly> {
        if let Some(p) = self.cache.borrow().get(&key) {
            return Rc::clone(p);
        }
        let (mask, shift) = key;
        let p = Rc::new(self.h.q(Subset(mask)).shift(shift, self.t()));
        self.cache.borrow_mut().insert(key, Rc::clone(&p));
        p
    }

    /// Product of a factor multiset.
    pub fn expand(&self, factors: &Factors) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (key, mult) in factors {
            let p = self.factor_poly(*key);
            for _ in 0..*mult {
                acc = &acc * &p;
            }
        }
        acc
    }

    /// Product of the multiset difference `big - small` (requires
    /// `small <= big` entrywise).
    pub fn expand_diff(&self, big: &Factors, small: &Factors) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (key, &mult) in big {
            let have = small.get(key).copied().unwrap_or(0);
            debug_assert!(have <= mult);
            let p = self.factor_poly(*key);
            for _ in 0..mult - have {
                acc = &acc * &p;
            }
        }
        acc
    }
}
