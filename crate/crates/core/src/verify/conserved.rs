//! Conserved-quantity suite: the rank-deficient determinant families built
//! from the relaxed Laplace-expansion T-functions, their Q-augmented
//! generalized Baxter equations, and the s- (resp. a-) independence of the
//! minor ratios.

use num_traits::One;

use crate::matrix::{det_poly, minor_det};
use crate::poly::LaurentPoly;
use crate::qhierarchy::QHierarchy;
use crate::scalar::{self, Scalar};
use crate::subset::Subset;
use crate::tfun::wronskian::{laplace_t, subsets_of, LaplaceRegime};

use super::Checker;

/// All four determinant-vanishing families plus the minor-ratio conserved
/// quantities across three consecutive spectral labels.
pub fn verify_conserved(checker: &mut Checker, h: &QHierarchy, range: i64) {
    let twist = h.twist();
    let mut pairs: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
    for m in 1..=twist.m_bos().min(2) {
        for n in 1..=twist.n_fer().min(1) {
            pairs.push((twist.bosons()[..m].to_vec(), twist.fermions()[..n].to_vec()));
        }
    }
    let t = twist.t().clone();
    for (bs, fs) in pairs {
        let (m, n) = (bs.len() as i64, fs.len() as i64);
        let label = |id: &str| format!("B={bs:?} F={fs:?} {id}");
        // Relaxed boson-side T: any integer subscript s is legal.
        let tb = |a: i64, s: i64, w: i64| -> LaurentPoly {
            laplace_t(h, false, &bs, &fs, a, s, LaplaceRegime::Boson, false)
                .expect("relaxed form")
                .shift(w, &t)
        };
        for a in 0..=m {
            let size = binom(m, a) + 1;
            let mat_i = |s: i64| -> Vec<Vec<LaurentPoly>> {
                (1..=size)
                    .map(|i| {
                        (1..=size)
                            .map(|j| tb(a, s + i + j, -2 * s + 2 * i - 2 * j))
                            .collect()
                    })
                    .collect()
            };
            let mat_j = |s: i64| -> Vec<Vec<LaurentPoly>> {
                (1..=size)
                    .map(|i| {
                        (1..=size)
                            .map(|j| tb(a, s - i - j, 2 * s + 2 * i - 2 * j))
                            .collect()
                    })
                    .collect()
            };
            for s in 1..=range.max(3) {
                checker.poly_zero(
                    "cons-det-I",
                    label(&format!("a={a} s={s}")),
                    &det_poly(&mat_i(s)),
                );
                checker.poly_zero(
                    "cons-det-J",
                    label(&format!("a={a} s={s}")),
                    &det_poly(&mat_j(s)),
                );
            }
            // Minor ratios independent of s across three consecutive values
            // (cross-multiplied to avoid rational-function division).
            for (mat, id) in [
                (&mat_i as &dyn Fn(i64) -> _, "th-cons1-I"),
                (&mat_j, "th-cons1-J"),
            ] {
                for s in 1..=2i64 {
                    let m0 = mat(s);
                    let m1 = mat(s + 1);
                    let num0 = minor_det(&m0, &[0], &[0]);
                    let den0 = minor_det(&m0, &[1], &[0]);
                    let num1 = minor_det(&m1, &[0], &[0]);
                    let den1 = minor_det(&m1, &[1], &[0]);
                    checker.poly_eq(
                        id,
                        label(&format!("a={a} s={s}..{}", s + 1)),
                        &(&num0 * &den1),
                        &(&num1 * &den0),
                    );
                }
            }
            // Q-augmented determinants vanish (generalized Baxter
            // equations) for every admissible replaced column.
            for subset in subsets_of(&bs, a as usize) {
                let iset = Subset::from_indices(&subset);
                let rest = Subset::from_indices(&bs).union(Subset::from_indices(&fs));
                let rest = Subset(rest.0 & !iset.0);
                let zprod: Scalar = subset
                    .iter()
                    .fold(Scalar::one(), |acc, &b| acc * twist.z(b));
                for r in 0..size as usize {
                    let s = 1i64;
                    let mut mi = mat_i(s);
                    for i in 1..=size {
                        mi[(i - 1) as usize][r] = h
                            .q(iset)
                            .shift(4 * i + (m - n), &t)
                            .scale(&scalar::pow_i64(&zprod, i));
                    }
                    checker.poly_zero(
                        "baxterEQ-general",
                        label(&format!("a={a} I={iset} col={}", r + 1)),
                        &det_poly(&mi),
                    );
                    let mut mj = mat_j(s);
                    for i in 1..=size {
                        mj[(i - 1) as usize][r] = h
                            .q(rest)
                            .shift(4 * i - (m - n), &t)
                            .scale(&scalar::pow_i64(&zprod, -i));
                    }
                    checker.poly_zero(
                        "baxterEQ-general-J",
                        label(&format!("a={a} I={iset} col={}", r + 1)),
                        &det_poly(&mj),
                    );
                }
            }
        }
        // Relaxed fermion-side T: any integer superscript a is legal.
        let tf = |a: i64, s: i64, w: i64| -> LaurentPoly {
            laplace_t(h, false, &bs, &fs, a, s, LaplaceRegime::Fermion, false)
                .expect("relaxed form")
                .shift(w, &t)
        };
        for s in 0..=n {
            let size = binom(n, s) + 1;
            let mat_k = |a: i64| -> Vec<Vec<LaurentPoly>> {
                (1..=size)
                    .map(|i| {
                        (1..=size)
                            .map(|j| tf(a + i + j, s, 2 * a - 2 * i + 2 * j))
                            .collect()
                    })
                    .collect()
            };
            let mat_l = |a: i64| -> Vec<Vec<LaurentPoly>> {
                (1..=size)
                    .map(|i| {
                        (1..=size)
                            .map(|j| tf(a - i - j, s, -2 * a - 2 * i + 2 * j))
                            .collect()
                    })
                    .collect()
            };
            for a in 1..=range.max(3) {
                checker.poly_zero(
                    "cons-det-K",
                    label(&format!("s={s} a={a}")),
                    &det_poly(&mat_k(a)),
                );
                checker.poly_zero(
                    "cons-det-L",
                    label(&format!("s={s} a={a}")),
                    &det_poly(&mat_l(a)),
                );
            }
            for (mat, id) in [
                (&mat_k as &dyn Fn(i64) -> _, "th-cons3-K"),
                (&mat_l, "th-cons3-L"),
            ] {
                for a in 1..=2i64 {
                    let m0 = mat(a);
                    let m1 = mat(a + 1);
                    let num0 = minor_det(&m0, &[0], &[0]);
                    let den0 = minor_det(&m0, &[1], &[0]);
                    let num1 = minor_det(&m1, &[0], &[0]);
                    let den1 = minor_det(&m1, &[1], &[0]);
                    checker.poly_eq(
                        id,
                        label(&format!("s={s} a={a}..{}", a + 1)),
                        &(&num0 * &den1),
                        &(&num1 * &den0),
                    );
                }
            }
            for subset in subsets_of(&fs, s as usize) {
                let jset = Subset::from_indices(&subset);
                let rest = Subset::from_indices(&bs).union(Subset::from_indices(&fs));
                let rest = Subset(rest.0 & !jset.0);
                let zprod: Scalar = subset
                    .iter()
                    .fold(Scalar::one(), |acc, &f| acc * -twist.z(f).clone());
                for r in 0..size as usize {
                    let a = 1i64;
                    let mut mk = mat_k(a);
                    for i in 1..=size {
                        mk[(i - 1) as usize][r] = h
                            .q(jset)
                            .shift(-4 * i + (m - n), &t)
                            .scale(&scalar::pow_i64(&zprod, i));
                    }
                    checker.poly_zero(
                        "baxterEQ-general-2",
                        label(&format!("s={s} J={jset} col={}", r + 1)),
                        &det_poly(&mk),
                    );
                    let mut ml = mat_l(a);
                    for i in 1..=size {
                        ml[(i - 1) as usize][r] = h
                            .q(rest)
                            .shift(-4 * i - (m - n), &t)
                            .scale(&scalar::pow_i64(&zprod, -i));
                    }
                    checker.poly_zero(
                        "baxterEQ-general-2L",
                        label(&format!("s={s} J={jset} col={}", r + 1)),
                        &det_poly(&ml),
                    );
                }
            }
        }
    }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
