//! Determinant-identity suite: the Plücker specializations and the Jacobi
//! identity on seeded random matrices, and the shift lemmas on actual
//! hierarchy minors.

use num_traits::One;

use crate::matrix::minor_det;
use crate::poly::LaurentPoly;
use crate::prng::SplitMix64;
use crate::qhierarchy::QHierarchy;
use crate::scalar::{self, Scalar};
use crate::tfun::wronskian::delta_minor;

use super::Checker;

fn random_matrix(
    rng: &mut SplitMix64,
    rows: usize,
    cols: usize,
    poly_entries: bool,
) -> Vec<Vec<LaurentPoly>> {
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    let c0 = scalar::ratio(rng.next_signed(9), 1 + rng.next_range(4) as i64);
                    if poly_entries {
                        let c1 = scalar::ratio(rng.next_signed(9), 1 + rng.next_range(4) as i64);
                        LaurentPoly::from_coeffs(vec![c0, c1])
                    } else {
                        LaurentPoly::constant(c0)
                    }
                })
                .collect()
        })
        .collect()
}

/// Plücker and Jacobi identities on random rational matrices up to size 6,
/// plus the argument-shift lemmas on minors of the hierarchy itself.
pub fn verify_det_identities(checker: &mut Checker, h: &QHierarchy) {
    let mut rng = SplitMix64::new(0x5EED);
    for n in 3..=6usize {
        let poly_entries = n <= 4;
        // Row Plücker on an (n+2) x n matrix.
        let m = random_matrix(&mut rng, n + 2, n, poly_entries);
        let d = |r: &[usize], c: &[usize]| minor_det(&m, r, c);
        let (j1, j2, j3, j4) = (0usize, 1, 2, n + 1);
        let lhs =
            &(&d(&[j1, j2], &[]) * &d(&[j3, j4], &[])) - &(&d(&[j1, j3], &[]) * &d(&[j2, j4], &[]));
        let lhs = &lhs + &(&d(&[j1, j4], &[]) * &d(&[j2, j3], &[]));
        checker.poly_zero("plucker", format!("rows n={n}"), &lhs);
        // Column Plücker on an n x (n+2) matrix.
        let m = random_matrix(&mut rng, n, n + 2, poly_entries);
        let d = |r: &[usize], c: &[usize]| minor_det(&m, r, c);
        let (k1, k2, k3, k4) = (0usize, 1, 3, n + 1);
        let lhs =
            &(&d(&[], &[k1, k2]) * &d(&[], &[k3, k4])) - &(&d(&[], &[k1, k3]) * &d(&[], &[k2, k4]));
        let lhs = &lhs + &(&d(&[], &[k1, k4]) * &d(&[], &[k2, k3]));
        checker.poly_zero("plucker2", format!("cols n={n}"), &lhs);
        // Mixed forms.
        let m = random_matrix(&mut rng, n + 1, n, poly_entries);
        let d = |r: &[usize], c: &[usize]| minor_det(&m, r, c);
        let (j1, j2, j3, k1) = (0usize, 1, n, 0usize);
        let lhs =
            &(&d(&[j1], &[]) * &d(&[j2, j3], &[k1])) - &(&d(&[j2], &[]) * &d(&[j1, j3], &[k1]));
        let lhs = &lhs + &(&d(&[j3], &[]) * &d(&[j1, j2], &[k1]));
        checker.poly_zero("plucker3", format!("n={n}"), &lhs);
        let m = random_matrix(&mut rng, n, n + 1, poly_entries);
        let d = |r: &[usize], c: &[usize]| minor_det(&m, r, c);
        let (k1, k2, k3, j1) = (0usize, 2, n, 0usize);
        let lhs =
            &(&d(&[], &[k1]) * &d(&[j1], &[k2, k3])) - &(&d(&[], &[k2]) * &d(&[j1], &[k1, k3]));
        let lhs = &lhs + &(&d(&[], &[k3]) * &d(&[j1], &[k1, k2]));
        checker.poly_zero("plucker4", format!("n={n}"), &lhs);
        // Jacobi (Desnanot) identity on a square matrix.
        let m = random_matrix(&mut rng, n, n, poly_entries);
        let d = |r: &[usize], c: &[usize]| minor_det(&m, r, c);
        let (j1, j2, k1, k2) = (0usize, n - 1, 1usize, n - 1);
        let lhs =
            &(&d(&[], &[]) * &d(&[j1, j2], &[k1, k2])) - &(&d(&[j1], &[k1]) * &d(&[j2], &[k2]));
        let lhs = &lhs + &(&d(&[j1], &[k2]) * &d(&[j2], &[k1]));
        checker.poly_zero("jacobi", format!("n={n}"), &lhs);
    }
    // Degenerate instance: two equal rows, every minor relation is 0 = 0.
    let mut m = random_matrix(&mut rng, 5, 3, false);
    m[1] = m[0].clone();
    let d = |r: &[usize], c: &[usize]| minor_det(&m, r, c);
    let lhs = &(&d(&[0, 1], &[]) * &d(&[2, 3], &[])) - &(&d(&[0, 2], &[]) * &d(&[1, 3], &[]));
    let lhs = &lhs + &(&d(&[0, 3], &[]) * &d(&[1, 2], &[]));
    checker.poly_zero("plucker", "degenerate equal rows".into(), &lhs);

    shift_lemmas(checker, h);
}

/// The argument-shift lemmas on actual hierarchy minors: a zero column
/// (resp. row) selection lets the whole minor slide by `q^{±2}` at the
/// cost of a twist-ratio prefactor; boson-only and fermion-only minors
/// slide by any integer offset of their selections.
fn shift_lemmas(checker: &mut Checker, h: &QHierarchy) {
    let twist = h.twist();
    let barred = h.convention().is_barred();
    let mirror: i64 = if barred { -1 } else { 1 };
    let t = twist.t().clone();
    let bs = twist.bosons();
    let fs = twist.fermions();
    if bs.len() >= 2 && !fs.is_empty() {
        let b2 = &bs[..2];
        let f1 = &fs[..1];
        // defe1: s contains 0 => shift the minor by q^2 while sliding the
        // selections by one.
        let lhs = delta_minor(h, barred, b2, f1, &[1], &[0, 2], mirror * 4).unwrap();
        let coef = scalar::sign_pow(1) * (twist.z(f1[0]) / (twist.z(b2[0]) * twist.z(b2[1])));
        let rhs = delta_minor(h, barred, b2, f1, &[0], &[1, 3], 0)
            .unwrap()
            .scale(&coef);
        checker.poly_eq("defe1", format!("B={b2:?} F={f1:?}"), &lhs, &rhs);
        // defe2: r contains 0 => the mirrored slide by q^{-2}.
        let lhs = delta_minor(h, barred, b2, f1, &[0], &[1, 2], mirror * -4).unwrap();
        let coef = scalar::sign_pow(1) * (twist.z(b2[0]) * twist.z(b2[1]) / twist.z(f1[0]));
        let rhs = delta_minor(h, barred, b2, f1, &[1], &[0, 1], 0)
            .unwrap()
            .scale(&coef);
        checker.poly_eq("defe2", format!("B={b2:?} F={f1:?}"), &lhs, &rhs);
    }
    // del-shift1 on a fermion-only minor with c = 2.
    if fs.len() >= 2 {
        let f2 = &fs[..2];
        let c = 2i64;
        let lhs = delta_minor(h, barred, &[], f2, &[1 + c, 2 + c], &[], 0).unwrap();
        let zprod: Scalar = f2
            .iter()
            .fold(Scalar::one(), |acc, &f| acc * -twist.z(f).clone());
        let rhs = delta_minor(h, barred, &[], f2, &[1, 2], &[], 0)
            .unwrap()
            .shift(mirror * -4 * c, &t)
            .scale(&scalar::pow_i64(&zprod, c));
        checker.poly_eq("del-shift1", format!("F={f2:?} c={c}"), &lhs, &rhs);
    }
    // del-shift2 on a boson-only minor with c = 2.
    if bs.len() >= 2 {
        let b2 = &bs[..2];
        let c = 2i64;
        let lhs = delta_minor(h, barred, b2, &[], &[], &[1 + c, 2 + c], 0).unwrap();
        let zprod: Scalar = b2.iter().fold(Scalar::one(), |acc, &b| acc * twist.z(b));
        let rhs = delta_minor(h, barred, b2, &[], &[], &[1, 2], 0)
            .unwrap()
            .shift(mirror * 4 * c, &t)
            .scale(&scalar::pow_i64(&zprod, c));
        checker.poly_eq("del-shift2", format!("B={b2:?} c={c}"), &lhs, &rhs);
    }
}
