//! The QQ-relation suite: every bosonic, mixed and unified three-term
//! relation over all subsets, plus the Cauchy-type determinant identity
//! behind the Wronskian normalization.

use crate::qhierarchy::QHierarchy;
use crate::scalar::Scalar;
use crate::subset::Subset;
use crate::tfun::wronskian::{deno, t_empty_zero, t_empty_zero_det};
use crate::twist::TwistData;

use super::Checker;

/// Checks the three-term relations for every `(I, i, j)` with
/// `i, j not in I`. The barred family satisfies the mirrored relations;
/// the mirror is the only difference between the two runs.
pub fn verify_qq(checker: &mut Checker, h: &QHierarchy) {
    let twist = h.twist();
    let t = twist.t();
    let size = twist.size();
    let barred = h.convention().is_barred();
    let mirror: i64 = if barred { -1 } else { 1 };
    let conv = h.convention().name();
    for set in Subset::all(size) {
        for i in 1..=size as u8 {
            if set.contains(i) {
                continue;
            }
            for j in i + 1..=size as u8 {
                if set.contains(j) {
                    continue;
                }
                let pi = twist.grading(i);
                let same_grading = twist.grading(i) == twist.grading(j);
                let zi = twist.z(i);
                let zj = twist.z(j);
                let q_i = h.q(set);
                let q_ij = h.q(set.insert(i).insert(j));
                let qi = h.q(set.insert(i));
                let qj = h.q(set.insert(j));
                let params = format!("conv={conv} I={set} i={i} j={j}");
                let sh = mirror * 2 * pi;
                if same_grading {
                    // (z_i - z_j) Q_I Q_{I+ij} =
                    //   z_i Q_{I+i}(xq^{p_i}) Q_{I+j}(xq^{-p_i}) - (i <-> j)
                    let lhs = (q_i * q_ij).scale(&(zi - zj));
                    let rhs = &(&qi.shift(sh, t) * &qj.shift(-sh, t)).scale(zi)
                        - &(&qi.shift(-sh, t) * &qj.shift(sh, t)).scale(zj);
                    let id = if barred { "qq-rel3" } else { "qq-rel1" };
                    checker.poly_eq(id, params.clone(), &lhs, &rhs);
                } else {
                    // (z_i - z_j) Q_{I+i} Q_{I+j} =
                    //   z_i Q_I(xq^{-p_i}) Q_{I+ij}(xq^{p_i}) - (i <-> j)
                    let lhs = (qi * qj).scale(&(zi - zj));
                    let rhs = &(&q_i.shift(-sh, t) * &q_ij.shift(sh, t)).scale(zi)
                        - &(&q_i.shift(sh, t) * &q_ij.shift(-sh, t)).scale(zj);
                    let id = if barred { "qq-rel4" } else { "qq-rel2" };
                    checker.poly_eq(id, params.clone(), &lhs, &rhs);
                }
                // Unified form, all sign combinations.
                let psum = mirror * (twist.grading(i) + twist.grading(j));
                let pdif = mirror * (twist.grading(i) - twist.grading(j));
                let lhs = &(&qi.shift(psum, t) * &qj.shift(-psum, t)).scale(zi)
                    - &(&qi.shift(-psum, t) * &qj.shift(psum, t)).scale(zj);
                let rhs = &(&q_i.shift(-pdif, t) * &q_ij.shift(pdif, t)).scale(zi)
                    - &(&q_i.shift(pdif, t) * &q_ij.shift(-pdif, t)).scale(zj);
                checker.poly_eq("qq-unified", params, &lhs, &rhs);
            }
        }
    }
}

/// The Cauchy-type identity `T_∅(0) = (-1)^{(m-n)(m+n-1)/2} D` compared
/// against direct determinant evaluation, and the three-term relations of
/// the denominator `D` itself.
pub fn verify_cauchy_deno(checker: &mut Checker, max_mn: usize) {
    let twist = TwistData::auto(max_mn, max_mn);
    for m in 0..=max_mn {
        for n in 0..=max_mn {
            if m + n == 0 {
                continue;
            }
            let bs: Vec<u8> = (1..=m as u8).collect();
            let fs: Vec<u8> = (max_mn as u8 + 1..=(max_mn + n) as u8).collect();
            let det = t_empty_zero_det(&twist, &bs, &fs);
            let closed = t_empty_zero(&twist, &bs, &fs);
            let pass = det == closed;
            checker.record(
                "bf-id",
                format!("m={m} n={n}"),
                pass,
                (!pass).then(|| format!("det route {det} vs product route {closed}")),
            );
        }
    }
    // D three-term relations on generic twists.
    let z = |a: u8| twist.z(a).clone();
    let d = |bs: &[u8], fs: &[u8]| deno(&twist, bs, fs);
    let checks: [(&str, Scalar, Scalar); 3] = [
        (
            "q-sys-bf",
            d(&[1], &[4]) * d(&[1, 2, 3], &[4]),
            (z(2) - z(3)) * d(&[1, 2], &[4]) * d(&[1, 3], &[4]),
        ),
        (
            "q-sys-bf2",
            d(&[1], &[4]) * d(&[1], &[4, 5, 6]),
            (z(6) - z(5)) * d(&[1], &[4, 5]) * d(&[1], &[4, 6]),
        ),
        (
            "q-sys-bf3",
            d(&[1, 2], &[4]) * d(&[1], &[4, 5]),
            (z(2) - z(5)) * d(&[1], &[4]) * d(&[1, 2], &[4, 5]),
        ),
    ];
    for (id, lhs, rhs) in checks {
        let pass = lhs == rhs;
        checker.record(
            id,
            "generic twists".into(),
            pass,
            (!pass).then(|| format!("{lhs} != {rhs}")),
        );
    }
}
