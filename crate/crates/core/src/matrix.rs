//! Exact determinants of polynomial and rational-function matrices.
//!
//! Cofactor expansion up to 4x4, Bareiss fraction-free elimination above
//! (the intermediate divisions are exact over an integral domain, which
//! bounds coefficient blow-up). Rational-function matrices are cleared to
//! a common-denominator polynomial matrix first.

use crate::poly::LaurentPoly;
use crate::ratfn::RationalFn;
use crate::scalar::Scalar;

/// Determinant of a square matrix of Laurent polynomials. The empty
/// matrix has determinant 1.
pub fn det_poly(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    match n {
        0 => LaurentPoly::one(),
        1..=4 => det_cofactor(m),
        _ => det_bareiss(m.to_vec()),
    }
}

fn det_cofactor(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = LaurentPoly::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let sub: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = entry * &det_cofactor(&sub);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn det_bareiss(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    let mut sign = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // Pivot search; an all-zero column means a zero determinant.
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = match t.divide_exact(&prev) {
                    Some(q) => q,
                    // A degenerate pivot pattern outside the Bareiss
                    // invariant; fall back to cofactor expansion.
                    None => {
                        return if sign {
                            det_cofactor(&m).neg()
                        } else {
                            det_cofactor(&m)
                        }
                    }
                };
            }
        }
        for i in k + 1..n {
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

/// Determinant of a square matrix of rational functions: each row is
/// cleared by the product of its denominators, the polynomial determinant
/// is taken, and the row factors are divided back out.
pub fn det_ratfn(m: &[Vec<RationalFn>]) -> RationalFn {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    if n == 0 {
        return RationalFn::one();
    }
    let mut cleared = Vec::with_capacity(n);
    let mut factor = LaurentPoly::one();
    for row in m {
        let row_den = row.iter().fold(LaurentPoly::one(), |acc, e| &acc * e.den());
        let prow: Vec<LaurentPoly> = row
            .iter()
            .map(|e| {
                let others = row_den
                    .divide_exact(e.den())
                    .expect("row denominator divides");
                e.num() * &others
            })
            .collect();
        factor = &factor * &row_den;
        cleared.push(prow);
    }
    RationalFn::new(det_poly(&cleared), factor)
}

/// Determinant of a scalar matrix.
pub fn det_scalar(m: &[Vec<Scalar>]) -> Scalar {
    let pm: Vec<Vec<LaurentPoly>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| LaurentPoly::constant(s.clone()))
                .collect()
        })
        .collect();
    let d = det_poly(&pm);
    if d.is_zero() {
        Scalar::from_integer(0.into())
    } else {
        d.coeff(0)
    }
}

/// Minor determinant with the listed rows and columns removed
/// (the `D[j1,...;k1,...]` of the determinant identities).
pub fn minor_det(m: &[Vec<LaurentPoly>], drop_rows: &[usize], drop_cols: &[usize]) -> LaurentPoly {
    let sub: Vec<Vec<LaurentPoly>> = m
        .iter()
        .enumerate()
        .filter(|(i, _)| !drop_rows.contains(i))
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| !drop_cols.contains(j))
                .map(|(_, e)| e.clone())
                .collect()
        })
        .collect();
    det_poly(&sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prng::SplitMix64;
    use crate::scalar::{int, ratio};

    fn c(v: i64) -> LaurentPoly {
        LaurentPoly::constant(int(v))
    }

    #[test]
    fn empty_and_two_by_two() {
        assert!(det_poly(&[]).is_one());
        // det [[a,b],[c,d]] = ad - bc
        let m = vec![vec![c(2), c(3)], vec![c(5), c(7)]];
        assert_eq!(det_poly(&m), c(-1));
    }

    #[test]
    fn bareiss_matches_cofactor_on_random_matrices() {
        let mut rng = SplitMix64::new(42);
        for n in 5..=6 {
            let m: Vec<Vec<LaurentPoly>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            LaurentPoly::constant(ratio(
                                rng.next_range(19) as i64 - 9,
                                1 + rng.next_range(7) as i64,
                            ))
                        })
                        .collect()
                })
                .collect();
            assert_eq!(det_bareiss(m.clone()), det_cofactor(&m));
        }
    }

    #[test]
    fn polynomial_entries_random_4x4_matches_cofactor() {
        let mut rng = SplitMix64::new(7);
        let m: Vec<Vec<LaurentPoly>> = (0..4)
            .map(|_| {
                (0..4)
                    .map(|_| {
                        LaurentPoly::from_coeffs(vec![
                            ratio(rng.next_range(9) as i64 - 4, 1),
                            ratio(rng.next_range(9) as i64 - 4, 1 + rng.next_range(3) as i64),
                        ])
                    })
                    .collect()
            })
            .collect();
        let five: Vec<Vec<LaurentPoly>> = (0..5)
            .map(|i| {
                (0..5)
                    .map(|j| {
                        if i < 4 && j < 4 {
                            m[i][j].clone()
                        } else if i == j {
                            c(1)
                        } else {
                            c(0)
                        }
                    })
                    .collect()
            })
            .collect();
        // Bordering with a unit row/column preserves the determinant.
        assert_eq!(det_poly(&five), det_cofactor(&m));
    }

    #[test]
    fn row_swap_negates_and_repeated_row_vanishes() {
        let a = vec![
            vec![c(1), c(2), c(3)],
            vec![c(4), c(5), c(6)],
            vec![c(7), c(8), c(10)],
        ];
        let mut b = a.clone();
        b.swap(0, 2);
        assert_eq!(det_poly(&a), det_poly(&b).neg());
        let mut r = a.clone();
        r[2] = r[0].clone();
        assert!(det_poly(&r).is_zero());
    }

    #[test]
    fn ratfn_determinant_clears_denominators() {
        let e = |n: i64, d: i64| RationalFn::new(c(n), c(d));
        let m = vec![vec![e(1, 2), e(1, 3)], vec![e(1, 5), e(1, 7)]];
        let expect = RationalFn::from_scalar(ratio(1, 14) - ratio(1, 15));
        assert!(det_ratfn(&m).eq_exact(&expect));
    }
}
