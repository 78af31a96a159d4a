//! Bäcklund-transformation suite: the eight bilinear relations connecting
//! nested index subsets, their TQ-relation degenerations, and the
//! tableaux-side analogues.

use std::collections::HashMap;

use crate::diagrams::GradedTuple;
use crate::poly::LaurentPoly;
use crate::qhierarchy::QHierarchy;
use crate::subset::Subset;
use crate::tfun::boxes::normalized_f_rect;
use crate::tfun::wronskian::wronskian_t_rect;
use crate::tfun::{FVal, TCtx};

use super::Checker;

struct Rect<'a> {
    h: &'a QHierarchy,
    barred: bool,
    memo: HashMap<(Vec<u8>, Vec<u8>, i64, i64), LaurentPoly>,
}

impl<'a> Rect<'a> {
    fn new(h: &'a QHierarchy) -> Self {
        Rect {
            h,
            barred: h.convention().is_barred(),
            memo: HashMap::new(),
        }
    }

    fn get(&mut self, bs: &[u8], fs: &[u8], a: i64, s: i64) -> LaurentPoly {
        let key = (bs.to_vec(), fs.to_vec(), a, s);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let p = wronskian_t_rect(self.h, self.barred, bs, fs, a, s);
        self.memo.insert(key, p.clone());
        p
    }
}

/// The four relations of the active convention over every nested chain
/// `B_{m-1} ⊂ B_m`, `F_{n-1} ⊂ F_n`, plus the TQ degeneration.
pub fn verify_backlund(checker: &mut Checker, h: &QHierarchy, a_max: i64, s_max: i64) {
    let twist = h.twist();
    let t = twist.t().clone();
    let barred = h.convention().is_barred();
    let conv = h.convention().name();
    // Barred relations carry the mirrored argument shifts.
    let mirror: i64 = if barred { -1 } else { 1 };
    let mut tr = Rect::new(h);
    let bosons = twist.bosons();
    let fermions = twist.fermions();
    // Boson-dropping relations: chain B_{m-1} = B_m minus its last entry.
    for m in 1..=bosons.len() {
        let bm = &bosons[..m];
        let bm1 = &bosons[..m - 1];
        let zb = twist.z(bm[m - 1]).clone();
        for n in 0..=fermions.len() {
            let fn_ = &fermions[..n];
            let label = |id: &str| format!("conv={conv} B={bm:?} F={fn_:?} {id}");
            for a in 0..=a_max {
                for s in 0..=s_max {
                    // bac1 / bac5
                    let lhs = &(&tr.get(bm, fn_, a + 1, s)
                        * &tr.get(bm1, fn_, a, s).shift(mirror * 3, &t))
                        - &(&tr.get(bm, fn_, a, s).shift(mirror * 2, &t)
                            * &tr.get(bm1, fn_, a + 1, s).shift(mirror, &t));
                    let rhs = (&tr.get(bm, fn_, a + 1, s - 1).shift(mirror * 2, &t)
                        * &tr.get(bm1, fn_, a, s + 1).shift(mirror, &t))
                        .scale(&zb);
                    let id = if barred { "bac5" } else { "bac1" };
                    checker.poly_eq(id, label(&format!("a={a} s={s}")), &lhs, &rhs);
                    // bac2 / bac6
                    let lhs = &(&tr.get(bm, fn_, a, s + 1).shift(mirror * 2, &t)
                        * &tr.get(bm1, fn_, a, s).shift(mirror, &t))
                        - &(&tr.get(bm, fn_, a, s)
                            * &tr.get(bm1, fn_, a, s + 1).shift(mirror * 3, &t));
                    let rhs = (&tr.get(bm, fn_, a + 1, s).shift(mirror * 2, &t)
                        * &tr.get(bm1, fn_, a - 1, s + 1).shift(mirror, &t))
                        .scale(&zb);
                    let id = if barred { "bac6" } else { "bac2" };
                    checker.poly_eq(id, label(&format!("a={a} s={s}")), &lhs, &rhs);
                }
            }
            // TQ degeneration of bac1 at a = 0 (explicit restatement).
            let whole_m = Subset::from_indices(bm).union(Subset::from_indices(fn_));
            let whole_m1 = Subset::from_indices(bm1).union(Subset::from_indices(fn_));
            let mn = m as i64 - n as i64;
            for s in 1..=s_max {
                let (lq1, lq2, rq) = if barred {
                    (
                        h.q(whole_m1).shift(mn + 2 * s - 4, &t),
                        h.q(whole_m).shift(mn + 2 * s - 2, &t),
                        h.q(whole_m1).shift(2 * s + mn, &t),
                    )
                } else {
                    (
                        h.q(whole_m1).shift(-mn - 2 * s + 4, &t),
                        h.q(whole_m).shift(-mn - 2 * s + 2, &t),
                        h.q(whole_m1).shift(-2 * s - mn, &t),
                    )
                };
                let lhs = &(&tr.get(bm, fn_, 1, s) * &lq1)
                    - &(&lq2 * &tr.get(bm1, fn_, 1, s).shift(mirror, &t));
                let rhs = (&tr.get(bm, fn_, 1, s - 1).shift(mirror * 2, &t) * &rq).scale(&zb);
                checker.poly_eq("tqeq", label(&format!("s={s}")), &lhs, &rhs);
            }
        }
    }
    // Fermion-dropping relations.
    for n in 1..=fermions.len() {
        let fn_ = &fermions[..n];
        let fn1 = &fermions[..n - 1];
        let zf = twist.z(fn_[n - 1]).clone();
        for m in 0..=bosons.len() {
            let bm = &bosons[..m];
            let label = |id: &str| format!("conv={conv} B={bm:?} F={fn_:?} {id}");
            for a in 0..=a_max {
                for s in 0..=s_max {
                    // bac3 / bac7
                    let lhs = &(&tr.get(bm, fn1, a + 1, s)
                        * &tr.get(bm, fn_, a, s).shift(mirror * 3, &t))
                        - &(&tr.get(bm, fn1, a, s).shift(mirror * 2, &t)
                            * &tr.get(bm, fn_, a + 1, s).shift(mirror, &t));
                    let rhs = (&tr.get(bm, fn1, a + 1, s - 1).shift(mirror * 2, &t)
                        * &tr.get(bm, fn_, a, s + 1).shift(mirror, &t))
                        .scale(&zf);
                    let id = if barred { "bac7" } else { "bac3" };
                    checker.poly_eq(id, label(&format!("a={a} s={s}")), &lhs, &rhs);
                    // bac4 / bac8
                    let lhs = &(&tr.get(bm, fn1, a, s + 1).shift(mirror * 2, &t)
                        * &tr.get(bm, fn_, a, s).shift(mirror, &t))
                        - &(&tr.get(bm, fn1, a, s)
                            * &tr.get(bm, fn_, a, s + 1).shift(mirror * 3, &t));
                    let rhs = (&tr.get(bm, fn1, a + 1, s).shift(mirror * 2, &t)
                        * &tr.get(bm, fn_, a - 1, s + 1).shift(mirror, &t))
                        .scale(&zf);
                    let id = if barred { "bac8" } else { "bac4" };
                    checker.poly_eq(id, label(&format!("a={a} s={s}")), &lhs, &rhs);
                }
            }
        }
    }
}

/// Tableaux-side Bäcklund relations on the normalized F-functions, for
/// tuple prefixes (unbarred hierarchy) and suffixes (barred hierarchy;
/// the barred relations assume the barred normalization).
pub fn verify_f_backlund(checker: &mut Checker, h: &QHierarchy, a_max: i64, s_max: i64) {
    let twist = h.twist();
    let size = twist.size();
    if size < 2 {
        return;
    }
    let native_barred = h.convention().is_barred();
    let ctx = TCtx::new(h);
    let natural = GradedTuple::natural(twist.m_bos(), twist.n_fer());
    let mut memo: HashMap<(Vec<u8>, bool, i64, i64), FVal> = HashMap::new();
    let f = |tuple: &GradedTuple,
             barred: bool,
             a: i64,
             s: i64,
             memo: &mut HashMap<(Vec<u8>, bool, i64, i64), FVal>|
     -> FVal {
        let key = (tuple.indices().to_vec(), barred, a, s);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let v = normalized_f_rect(&ctx, tuple, a, s, barred);
        memo.insert(key, v.clone());
        v
    };
    // Unbarred: drop the last entry of the natural tuple (bac01/bac02 for
    // a bosonic tail, bac03/bac04 for a fermionic one; the shift pattern
    // is the same, keyed by the grading of the dropped index).
    let prefix_range: Vec<usize> = if native_barred {
        Vec::new()
    } else {
        (2..=size).rev().take(2).collect()
    };
    for k in prefix_range {
        let ik = natural.prefix(k);
        let ik1 = natural.prefix(k - 1);
        let dropped = ik.indices()[k - 1];
        let z = twist.z(dropped).clone();
        let plus = twist.grading(dropped) > 0;
        let label = |id: &str| format!("tuple={:?} {id}", ik.indices());
        for a in 0..=a_max {
            for s in 0..=s_max {
                let (lhs, rhs, id) = if plus {
                    (
                        f(&ik, false, a + 1, s, &mut memo)
                            .mul(&ctx, &f(&ik1, false, a, s, &mut memo).shift(&ctx, 3))
                            .sub(
                                &ctx,
                                &f(&ik, false, a, s, &mut memo)
                                    .shift(&ctx, 2)
                                    .mul(&ctx, &f(&ik1, false, a + 1, s, &mut memo).shift(&ctx, 1)),
                            ),
                        f(&ik, false, a + 1, s - 1, &mut memo)
                            .shift(&ctx, 2)
                            .mul(&ctx, &f(&ik1, false, a, s + 1, &mut memo).shift(&ctx, 1))
                            .scale(&z),
                        "bac01",
                    )
                } else {
                    (
                        f(&ik1, false, a + 1, s, &mut memo)
                            .mul(&ctx, &f(&ik, false, a, s, &mut memo).shift(&ctx, 3))
                            .sub(
                                &ctx,
                                &f(&ik1, false, a, s, &mut memo)
                                    .shift(&ctx, 2)
                                    .mul(&ctx, &f(&ik, false, a + 1, s, &mut memo).shift(&ctx, 1)),
                            ),
                        f(&ik1, false, a + 1, s - 1, &mut memo)
                            .shift(&ctx, 2)
                            .mul(&ctx, &f(&ik, false, a, s + 1, &mut memo).shift(&ctx, 1))
                            .scale(&z),
                        "bac03",
                    )
                };
                checker.fval_eq(id, label(&format!("a={a} s={s}")), &ctx, &lhs, &rhs);
                let (lhs2, rhs2, id2) = if plus {
                    (
                        f(&ik, false, a, s + 1, &mut memo)
                            .shift(&ctx, 2)
                            .mul(&ctx, &f(&ik1, false, a, s, &mut memo).shift(&ctx, 1))
                            .sub(
                                &ctx,
                                &f(&ik, false, a, s, &mut memo)
                                    .mul(&ctx, &f(&ik1, false, a, s + 1, &mut memo).shift(&ctx, 3)),
                            ),
                        f(&ik, false, a + 1, s, &mut memo)
                            .shift(&ctx, 2)
                            .mul(
                                &ctx,
                                &f(&ik1, false, a - 1, s + 1, &mut memo).shift(&ctx, 1),
                            )
                            .scale(&z),
                        "bac02",
                    )
                } else {
                    (
                        f(&ik1, false, a, s + 1, &mut memo)
                            .shift(&ctx, 2)
                            .mul(&ctx, &f(&ik, false, a, s, &mut memo).shift(&ctx, 1))
                            .sub(
                                &ctx,
                                &f(&ik1, false, a, s, &mut memo)
                                    .mul(&ctx, &f(&ik, false, a, s + 1, &mut memo).shift(&ctx, 3)),
                            ),
                        f(&ik1, false, a + 1, s, &mut memo)
                            .shift(&ctx, 2)
                            .mul(&ctx, &f(&ik, false, a - 1, s + 1, &mut memo).shift(&ctx, 1))
                            .scale(&z),
                        "bac04",
                    )
                };
                checker.fval_eq(id2, label(&format!("a={a} s={s}")), &ctx, &lhs2, &rhs2);
            }
        }
    }
    // Barred: the suffix chain with mirrored shifts (bac05-bac08).
    for k in [1usize, 2] {
        if !native_barred || k + 1 > size {
            break;
        }
        let ik = natural.suffix(k + 1);
        let ik1 = natural.suffix(k);
        // Here I_{K-1} has one *more* element: the barred chain grows.
        let dropped = ik1.indices()[0];
        let z = twist.z(dropped).clone();
        let plus = twist.grading(dropped) > 0;
        let label = |id: &str| format!("tuple={:?} barred {id}", ik1.indices());
        for a in 0..=a_max {
            for s in 0..=s_max {
                let (lhs, rhs, id) = if plus {
                    (
                        f(&ik1, true, a + 1, s, &mut memo)
                            .mul(&ctx, &f(&ik, true, a, s, &mut memo).shift(&ctx, -3))
                            .sub(
                                &ctx,
                                &f(&ik1, true, a, s, &mut memo)
                                    .shift(&ctx, -2)
                                    .mul(&ctx, &f(&ik, true, a + 1, s, &mut memo).shift(&ctx, -1)),
                            ),
                        f(&ik1, true, a + 1, s - 1, &mut memo)
                            .shift(&ctx, -2)
                            .mul(&ctx, &f(&ik, true, a, s + 1, &mut memo).shift(&ctx, -1))
                            .scale(&z),
                        "bac05",
                    )
                } else {
                    (
                        f(&ik, true, a + 1, s, &mut memo)
                            .mul(&ctx, &f(&ik1, true, a, s, &mut memo).shift(&ctx, -3))
                            .sub(
                                &ctx,
                                &f(&ik, true, a, s, &mut memo)
                                    .shift(&ctx, -2)
                                    .mul(&ctx, &f(&ik1, true, a + 1, s, &mut memo).shift(&ctx, -1)),
                            ),
                        f(&ik, true, a + 1, s - 1, &mut memo)
                            .shift(&ctx, -2)
                            .mul(&ctx, &f(&ik1, true, a, s + 1, &mut memo).shift(&ctx, -1))
                            .scale(&z),
                        "bac07",
                    )
                };
                checker.fval_eq(id, label(&format!("a={a} s={s}")), &ctx, &lhs, &rhs);
                let (lhs2, rhs2, id2) = if plus {
                    (
                        f(&ik1, true, a, s + 1, &mut memo)
                            .shift(&ctx, -2)
                            .mul(&ctx, &f(&ik, true, a, s, &mut memo).shift(&ctx, -1))
                            .sub(
                                &ctx,
                                &f(&ik1, true, a, s, &mut memo)
                                    .mul(&ctx, &f(&ik, true, a, s + 1, &mut memo).shift(&ctx, -3)),
                            ),
                        f(&ik1, true, a + 1, s, &mut memo)
                            .shift(&ctx, -2)
                            .mul(&ctx, &f(&ik, true, a - 1, s + 1, &mut memo).shift(&ctx, -1))
                            .scale(&z),
                        "bac06",
                    )
                } else {
                    (
                        f(&ik, true, a, s + 1, &mut memo)
                            .shift(&ctx, -2)
                            .mul(&ctx, &f(&ik1, true, a, s, &mut memo).shift(&ctx, -1))
                            .sub(
                                &ctx,
                                &f(&ik, true, a, s, &mut memo)
                                    .mul(&ctx, &f(&ik1, true, a, s + 1, &mut memo).shift(&ctx, -3)),
                            ),
                        f(&ik, true, a + 1, s, &mut memo)
                            .shift(&ctx, -2)
                            .mul(
                                &ctx,
                                &f(&ik1, true, a - 1, s + 1, &mut memo).shift(&ctx, -1),
                            )
                            .scale(&z),
                        "bac08",
                    )
                };
                checker.fval_eq(id2, label(&format!("a={a} s={s}")), &ctx, &lhs2, &rhs2);
            }
        }
    }
}
