//! Baxter-equation suite: the finite-order linear difference equations on
//! the level-one Q-functions, derived from the vanishing of determinants
//! with repeated columns, plus their reduced (factored) forms.

use crate::poly::LaurentPoly;
use crate::qhierarchy::QHierarchy;
use crate::scalar::{self};
use crate::subset::Subset;
use crate::tfun::wronskian::wronskian_t;
use crate::Partition;

use super::Checker;

fn delta(a: i64, b: i64) -> i64 {
    (a == b) as i64
}

/// All four Baxter equations and the four reduced forms, over every
/// subset pair `(B_m, F_n)` of the hierarchy and every `k`.
pub fn verify_baxter(checker: &mut Checker, h: &QHierarchy) {
    let twist = h.twist();
    let t = twist.t().clone();
    let barred = h.convention().is_barred();
    let mirror: i64 = if barred { -1 } else { 1 };
    let conv = h.convention().name();
    for bs in all_prefix_subsets(&twist.bosons()) {
        for fs in all_prefix_subsets(&twist.fermions()) {
            let (m, n) = (bs.len() as i64, fs.len() as i64);
            let label = |id: &str, k: u8| format!("conv={conv} B={bs:?} F={fs:?} k={k} {id}");
            // Bosonic equation: sum over column heights a = 0..m of the
            // stacked-rectangle T times a shifted Q_k.
            for &k in &bs {
                let mut acc = LaurentPoly::zero();
                for a in 0..=m {
                    let mu = stacked(n, a, m);
                    let tshift = mirror * (-2 * (a - m) * delta(n, 0) - 2 * delta(a, 0));
                    let qshift = mirror * (-4 * a + 3 * m + n);
                    let tval = wronskian_t(h, barred, &bs, &fs, &mu).shift(tshift, &t);
                    let qval = h.q(Subset::singleton(k)).shift(qshift, &t);
                    let coef = scalar::pow_i64(&-twist.z(k).clone(), -a);
                    acc = &acc + &(&tval * &qval).scale(&coef);
                }
                let id = if barred { "baxtereq3" } else { "baxtereq1" };
                checker.poly_zero(id, label(id, k), &acc);
            }
            // Fermionic equation.
            for &k in &fs {
                let mut acc = LaurentPoly::zero();
                for a in 0..=n {
                    let mu = row_extended(n, m, a);
                    let tshift = mirror * (2 * (a - n) * delta(m, 0) + 2 * delta(a, 0));
                    let qshift = mirror * (4 * a - m - 3 * n);
                    let tval = wronskian_t(h, barred, &bs, &fs, &mu).shift(tshift, &t);
                    let qval = h.q(Subset::singleton(k)).shift(qshift, &t);
                    let coef = scalar::pow_i64(twist.z(k), -a);
                    acc = &acc + &(&tval * &qval).scale(&coef);
                }
                let id = if barred { "baxtereq4" } else { "baxtereq2" };
                checker.poly_zero(id, label(id, k), &acc);
            }
            // Reduced forms: the boson-only and fermion-only blocks.
            if fs.is_empty() {
                for &k in &bs {
                    let mut acc = LaurentPoly::zero();
                    for a in 0..=m {
                        let mu = Partition::rectangle(a as u32, 1);
                        let tshift = mirror * (-2 * a - 2 * delta(a, 0));
                        let qshift = mirror * (-4 * a + m);
                        let tval = wronskian_t(h, barred, &bs, &[], &mu).shift(tshift, &t);
                        let qval = h.q(Subset::singleton(k)).shift(qshift, &t);
                        let coef = scalar::pow_i64(&-twist.z(k).clone(), -a);
                        acc = &acc + &(&tval * &qval).scale(&coef);
                    }
                    let id = if barred { "baxtereq3r" } else { "baxtereq1r" };
                    checker.poly_zero(id, label(id, k), &acc);
                }
            }
            if bs.is_empty() {
                for &k in &fs {
                    let mut acc = LaurentPoly::zero();
                    for a in 0..=n {
                        let mu = Partition::new(if a == 0 { vec![] } else { vec![a as u32] });
                        let tshift = mirror * (2 * a + 2 * delta(a, 0));
                        let qshift = mirror * (4 * a - n);
                        let tval = wronskian_t(h, barred, &[], &fs, &mu).shift(tshift, &t);
                        let qval = h.q(Subset::singleton(k)).shift(qshift, &t);
                        let coef = scalar::pow_i64(twist.z(k), -a);
                        acc = &acc + &(&tval * &qval).scale(&coef);
                    }
                    let id = if barred { "baxtereq4r" } else { "baxtereq2r" };
                    checker.poly_zero(id, label(id, k), &acc);
                }
            }
        }
    }
}

/// `((n+1)^a, n^{m-a})`.
fn stacked(n: i64, a: i64, m: i64) -> Partition {
    let mut parts = Vec::new();
    for _ in 0..a {
        parts.push(n as u32 + 1);
    }
    for _ in a..m {
        if n > 0 {
            parts.push(n as u32);
        }
    }
    Partition::new(parts)
}

/// `(n^m, a)` with `a <= n`.
fn row_extended(n: i64, m: i64, a: i64) -> Partition {
    let mut parts = Vec::new();
    for _ in 0..m {
        if n > 0 {
            parts.push(n as u32);
        }
    }
    if a > 0 {
        parts.push(a as u32);
    }
    Partition::new(parts)
}

fn all_prefix_subsets(v: &[u8]) -> Vec<Vec<u8>> {
    (0..=v.len()).map(|k| v[..k].to_vec()).collect()
}
