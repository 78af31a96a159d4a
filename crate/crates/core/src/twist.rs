//! Twist data of the model: the grading sizes (M, N), the exact shift
//! base `t = q^{1/2}` and the boundary-twist parameters `z_a`. Genericity
//! of the twists is what keeps every denominator in the Wronskian and
//! pair-solve formulas nonzero.

use num_traits::{One, Zero};

use crate::scalar::{self, Scalar};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct TwistData {
    m_bos: usize,
    n_fer: usize,
    t: Scalar,
    z: Vec<Scalar>,
}

impl TwistData {
    pub fn new(m_bos: usize, n_fer: usize, t: Scalar, z: Vec<Scalar>) -> Result<Self> {
        if z.len() != m_bos + n_fer {
            return Err(Error::Genericity(format!(
                "expected {} twist parameters, got {}",
                m_bos + n_fer,
                z.len()
            )));
        }
        Ok(TwistData { m_bos, n_fer, t, z })
    }

    /// Default twists: `t = 2` and `z_a` the a-th prime, generic and
    /// resonance-free for small `K_max` by construction.
    pub fn auto(m_bos: usize, n_fer: usize) -> Self {
        const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
        let z = PRIMES[..m_bos + n_fer]
            .iter()
            .map(|&p| scalar::int(p))
            .collect();
        TwistData {
            m_bos,
            n_fer,
            t: scalar::int(2),
            z,
        }
    }

    pub fn m_bos(&self) -> usize {
        self.m_bos
    }

    pub fn n_fer(&self) -> usize {
        self.n_fer
    }

    pub fn size(&self) -> usize {
        self.m_bos + self.n_fer
    }

    /// The half-step base `t = q^{1/2}`.
    pub fn t(&self) -> &Scalar {
        &self.t
    }

    /// `q = t^2`.
    pub fn q(&self) -> Scalar {
        &self.t * &self.t
    }

    /// Twist parameter of index `a` (1-based).
    pub fn z(&self, a: u8) -> &Scalar {
        &self.z[(a - 1) as usize]
    }

    pub fn z_all(&self) -> &[Scalar] {
        &self.z
    }

    /// Grading `p_a`: +1 for `a <= M`, -1 otherwise.
    pub fn grading(&self, a: u8) -> i64 {
        if (a as usize) <= self.m_bos {
            1
        } else {
            -1
        }
    }

    pub fn is_boson(&self, a: u8) -> bool {
        self.grading(a) > 0
    }

    pub fn bosons(&self) -> Vec<u8> {
        (1..=self.m_bos as u8).collect()
    }

    pub fn fermions(&self) -> Vec<u8> {
        (self.m_bos as u8 + 1..=self.size() as u8).collect()
    }

    /// Checks all genericity invariants up to `k_max`:
    /// `t` not in {0, 1, -1}; the `z_a` nonzero and pairwise distinct; and
    /// no twist ratio `z_i / z_j` equal to a half-step power `t^e` with
    /// `0 < |e| <= 4 k_max`. The latter covers in particular the
    /// boson-fermion pair-solve resonances `z_b / z_f = q^{-2k}`.
    /// Returns every violation.
    pub fn validate_genericity(&self, k_max: u32) -> std::result::Result<(), Vec<String>> {
        let mut bad = Vec::new();
        if self.t.is_zero() || self.t.is_one() || self.t == -Scalar::one() {
            bad.push(format!("t = {} must lie outside {{0, 1, -1}}", self.t));
        }
        for (i, zi) in self.z.iter().enumerate() {
            if zi.is_zero() {
                bad.push(format!("z_{} = 0", i + 1));
            }
        }
        for i in 0..self.z.len() {
            for j in i + 1..self.z.len() {
                if self.z[i] == self.z[j] {
                    bad.push(format!("duplicate twist z_{} = z_{}", i + 1, j + 1));
                }
            }
        }
        if !self.t.is_zero() {
            for i in 1..=self.z.len() as u8 {
                for j in 1..=self.z.len() as u8 {
                    if i == j || self.z(i).is_zero() || self.z(j).is_zero() {
                        continue;
                    }
                    let r = self.z(i) / self.z(j);
                    if let Some(e) = scalar::is_small_power_of(&r, &self.t, 4 * k_max) {
                        if e <= 0 {
                            continue; // reported from the transposed pair
                        }
                        let mut msg = format!("resonance z_{i}/z_{j} = t^{e}");
                        if e % 2 == 0 {
                            msg.push_str(&format!(" = q^{}", e / 2));
                        }
                        if self.is_boson(i) != self.is_boson(j) && e % 4 == 0 {
                            msg.push_str(&format!(
                                ", pair-solve denominator vanishes at k = {}",
                                e / 4
                            ));
                        }
                        bad.push(msg);
                    }
                }
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(bad)
        }
    }

    pub fn require_generic(&self, k_max: u32) -> Result<()> {
        self.validate_genericity(k_max)
            .map_err(|v| Error::Genericity(v.join("; ")))
    }

    /// Image under the conjugation map `z_a -> z_a^{-1}`.
    pub fn conjugated(&self) -> Self {
        TwistData {
            m_bos: self.m_bos,
            n_fer: self.n_fer,
            t: self.t.clone(),
            z: self.z.iter().map(|z| Scalar::one() / z).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn auto_twists_are_generic() {
        let tw = TwistData::auto(2, 3);
        assert!(tw.validate_genericity(64).is_ok());
        assert_eq!(tw.grading(2), 1);
        assert_eq!(tw.grading(3), -1);
    }

    #[test]
    fn prime_twists_pass_wide_scan() {
        // t = 2 (q = 4), z = first five primes: ok at K_max = 64.
        let tw =
            TwistData::new(3, 2, int(2), vec![int(2), int(3), int(5), int(7), int(11)]).unwrap();
        assert!(tw.validate_genericity(64).is_ok());
    }

    #[test]
    fn resonance_detected() {
        // z_2/z_1 = 16 = q^2 at t = 2: resonance at k = 1.
        let tw = TwistData::new(1, 1, int(2), vec![int(16), int(1)]).unwrap();
        let errs = tw.validate_genericity(8).unwrap_err();
        assert!(
            errs.iter()
                .any(|e| e.contains("resonance") && e.contains("k = 1")),
            "{errs:?}"
        );
    }

    #[test]
    fn duplicates_and_degenerate_t_detected() {
        let tw = TwistData::new(1, 1, int(2), vec![int(2), int(2)]).unwrap();
        assert!(tw
            .validate_genericity(4)
            .unwrap_err()
            .iter()
            .any(|e| e.contains("duplicate")));
        let tw = TwistData::new(1, 1, int(1), vec![int(2), int(3)]).unwrap();
        assert!(tw.validate_genericity(4).is_err());
    }

    #[test]
    fn conjugated_twists_stay_generic() {
        let tw = TwistData::auto(2, 1);
        assert!(tw.conjugated().validate_genericity(64).is_ok());
    }
}
