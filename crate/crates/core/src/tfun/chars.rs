//! Supercharacters: the x -> 0 limit of the T-functions, reachable three
//! independent ways -- the first-Weyl-type alternating sum, the tableaux
//! super-Schur sum, and the Wronskian determinant at the origin.

use num_traits::One;

use crate::diagrams::{enumerate_admissible, hook_check, GradedTuple, Partition, SkewDiagram};
use crate::scalar::Scalar;
use crate::twist::TwistData;
use crate::{Error, Result};

use super::wronskian::{self, QTable};

/// First-Weyl-type alternating sum over `S_M x S_N` for the supercharacter
/// of the tensor representation labeled by an in-hook partition.
pub fn sergeev_pragacz(twist: &TwistData, mu: &Partition) -> Result<Scalar> {
    let m = twist.m_bos();
    let n = twist.n_fer();
    if !hook_check(mu, m, n) {
        return Err(Error::HookViolation(mu.to_string(), m, n));
    }
    let xs: Vec<Scalar> = (1..=m as u8).map(|a| twist.z(a).clone()).collect();
    let ys: Vec<Scalar> = (m as u8 + 1..=(m + n) as u8)
        .map(|a| twist.z(a).clone())
        .collect();
    let x_at = |v: &[Scalar], i: usize| -> Scalar {
        v.get(i - 1)
            .cloned()
            .unwrap_or_else(|| Scalar::from_integer(0.into()))
    };
    let mut num = Scalar::from_integer(0.into());
    let bidx: Vec<u8> = (1..=m as u8).collect();
    let fidx: Vec<u8> = (1..=n as u8).collect();
    for (bp, bsign) in wronskian::permutations_with_sign(&bidx) {
        for (fp, fsign) in wronskian::permutations_with_sign(&fidx) {
            let xv: Vec<Scalar> = bp.iter().map(|&i| xs[(i - 1) as usize].clone()).collect();
            let yv: Vec<Scalar> = fp.iter().map(|&j| ys[(j - 1) as usize].clone()).collect();
            let mut term = Scalar::one();
            for i in 1..m {
                term *= crate::scalar::pow_i64(&xv[i - 1], (m - i) as i64);
            }
            for j in 1..n {
                term *= crate::scalar::pow_i64(&yv[j - 1], (n - j) as i64);
            }
            for (i, j) in SkewDiagram::from_partition(mu.clone()).cells() {
                term *= x_at(&xv, i as usize) - x_at(&yv, j as usize);
            }
            if bsign * fsign < 0 {
                num -= term;
            } else {
                num += term;
            }
        }
    }
    let mut den = Scalar::one();
    for i in 0..m {
        for j in i + 1..m {
            den *= &xs[i] - &xs[j];
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            den *= &ys[i] - &ys[j];
        }
    }
    Ok(num / den)
}

/// Tableaux super-Schur sum: the x -> 0 limit of the tableaux T-function,
/// where every box collapses to its signed twist parameter.
pub fn super_schur_tab(twist: &TwistData, mu: &Partition) -> Result<Scalar> {
    let m = twist.m_bos();
    let n = twist.n_fer();
    if !hook_check(mu, m, n) {
        return Err(Error::HookViolation(mu.to_string(), m, n));
    }
    let tuple = GradedTuple::natural(m, n);
    let d = SkewDiagram::from_partition(mu.clone());
    let mut acc = Scalar::from_integer(0.into());
    for tab in enumerate_admissible(&tuple, &d) {
        let mut term = Scalar::one();
        for &v in &tab.entries {
            let idx = tuple.indices()[(v - 1) as usize];
            let z = twist.z(idx);
            term *= if twist.is_boson(idx) {
                z.clone()
            } else {
                -z.clone()
            };
        }
        acc += term;
    }
    Ok(acc)
}

/// The Wronskian T-function evaluated at the origin (where every
/// Q-function is 1, so the value is Q-independent).
pub fn wronskian_char(table: &impl QTable, mu: &Partition) -> Result<Scalar> {
    let twist = table.twist();
    let m = twist.m_bos();
    let n = twist.n_fer();
    if !hook_check(mu, m, n) {
        return Err(Error::HookViolation(mu.to_string(), m, n));
    }
    let bs: Vec<u8> = twist.bosons();
    let fs: Vec<u8> = twist.fermions();
    let t = wronskian::wronskian_t(table, false, &bs, &fs, mu);
    t.eval(&Scalar::from_integer(0.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qhierarchy::{Convention, GenConfig, QHierarchy};
    use crate::scalar::int;

    #[test]
    fn empty_diagram_character_is_one() {
        let twist = TwistData::auto(2, 1);
        assert_eq!(
            sergeev_pragacz(&twist, &Partition::empty()).unwrap(),
            int(1)
        );
        assert_eq!(
            super_schur_tab(&twist, &Partition::empty()).unwrap(),
            int(1)
        );
    }

    #[test]
    fn single_box_character_1_1() {
        // M = N = 1, mu = (1): z_1 - z_2 all three ways.
        let twist = TwistData::new(1, 1, int(2), vec![int(2), int(3)]).unwrap();
        let mu: Partition = "1".parse().unwrap();
        assert_eq!(sergeev_pragacz(&twist, &mu).unwrap(), int(-1));
        assert_eq!(super_schur_tab(&twist, &mu).unwrap(), int(-1));
        let h =
            QHierarchy::build(twist, Convention::Unbarred, &GenConfig::uniform(1, 1, 2)).unwrap();
        assert_eq!(wronskian_char(&h, &mu).unwrap(), int(-1));
    }

    #[test]
    fn three_way_agreement_2_1() {
        let twist = TwistData::auto(2, 1);
        let h = QHierarchy::build(
            twist.clone(),
            Convention::Unbarred,
            &GenConfig::uniform(3, 1, 3),
        )
        .unwrap();
        for mu in Partition::enumerate(4, 4, 4) {
            if !hook_check(&mu, 2, 1) {
                continue;
            }
            let a = sergeev_pragacz(&twist, &mu).unwrap();
            let b = super_schur_tab(&twist, &mu).unwrap();
            let c = wronskian_char(&h, &mu).unwrap();
            assert_eq!(a, b, "mu = {mu}");
            assert_eq!(a, c, "mu = {mu}");
        }
    }

    #[test]
    fn hook_violation_is_reported() {
        let twist = TwistData::auto(1, 1);
        let mu = Partition::rectangle(2, 2);
        assert!(sergeev_pragacz(&twist, &mu).is_err());
        assert!(super_schur_tab(&twist, &mu).is_err());
    }
}
