//! The Wronskian-like determinant route to Q- and T-functions: minor
//! determinants of the infinite matrix with twist-power and Q-function
//! entries, their Maya-sequence specializations, the Laplace-expansion
//! subset sums, the Weyl-group sum rewriting, and the continuous-parameter
//! factorizations of typical representations.
//!
//! All values here are Laurent polynomials (the only denominators in the
//! entries are scalar twist differences), so these routes stay in
//! polynomial arithmetic end to end.

use num_traits::One;

use crate::diagrams::{maya_sequences, mn_index, Partition};
use crate::matrix::det_poly;
use crate::poly::LaurentPoly;
use crate::scalar::{self, Scalar};
use crate::subset::Subset;
use crate::twist::TwistData;
use crate::{Error, Result};

/// Anything that resolves a subset to its stored Q-polynomial. The
/// hierarchy implements it natively; build-time partial tables and
/// complement (jouken) views wrap it.
pub trait QTable {
    fn twist(&self) -> &TwistData;
    fn poly(&self, set: Subset) -> &LaurentPoly;
}

/// Jouken view: reads `Q̄_I` out of an unbarred table (or vice versa) as
/// the complement entry.
pub struct ComplementView<'a, T: QTable>(pub &'a T);

impl<T: QTable> QTable for ComplementView<'_, T> {
    fn twist(&self) -> &TwistData {
        self.0.twist()
    }

    fn poly(&self, set: Subset) -> &LaurentPoly {
        self.0.poly(set.complement(self.0.twist().size()))
    }
}

/// The Cauchy-type denominator
/// `D(B|F) = prod_{i<j}(z_{b_i}-z_{b_j}) prod_{i<j}(z_{f_j}-z_{f_i})
///           / prod_{i,j}(z_{b_i}-z_{f_j})`.
pub fn deno(twist: &TwistData, bs: &[u8], fs: &[u8]) -> Scalar {
    let mut val = Scalar::one();
    for i in 0..bs.len() {
        for j in i + 1..bs.len() {
            val *= twist.z(bs[i]) - twist.z(bs[j]);
        }
    }
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            val *= twist.z(fs[j]) - twist.z(fs[i]);
        }
    }
    for &b in bs {
        for &f in fs {
            val /= twist.z(b) - twist.z(f);
        }
    }
    val
}

/// `T_∅(0)` by the closed Cauchy-type product.
pub fn t_empty_zero(twist: &TwistData, bs: &[u8], fs: &[u8]) -> Scalar {
    let (m, n) = (bs.len() as i64, fs.len() as i64);
    scalar::sign_pow((m - n) * (m + n - 1) / 2) * deno(twist, bs, fs)
}

/// `T_∅(0)` by direct determinant evaluation at `x = 0` (all Q's are 1
/// there); the independent route for the Cauchy-identity check.
pub fn t_empty_zero_det(twist: &TwistData, bs: &[u8], fs: &[u8]) -> Scalar {
    let (m, n) = (bs.len(), fs.len());
    let xi = mn_index(&Partition::empty(), m, n);
    let maya = maya_sequences(&Partition::empty(), m, n).expect("empty diagram never vanishes");
    let rows = m + maya.r.len();
    let mut mat = vec![vec![LaurentPoly::zero(); rows]; rows];
    for (k, &b) in bs.iter().enumerate() {
        for (l, &f) in fs.iter().enumerate() {
            mat[k][l] = LaurentPoly::constant(Scalar::one() / (twist.z(b) - twist.z(f)));
        }
        for (l, &sl) in maya.s.iter().enumerate() {
            mat[k][n + l] = LaurentPoly::constant(scalar::pow_i64(twist.z(b), sl - 1));
        }
    }
    for (k, &rk) in maya.r.iter().enumerate() {
        for (l, &f) in fs.iter().enumerate() {
            mat[m + k][l] = LaurentPoly::constant(scalar::pow_i64(&-twist.z(f).clone(), rk - 1));
        }
    }
    let d = det_poly(&mat);
    let sign = scalar::sign_pow((m as i64 + n as i64 + 1) * (xi as i64 + 1));
    sign * if d.is_zero() {
        Scalar::from_integer(0.into())
    } else {
        d.coeff(0)
    }
}

/// Minor determinant of the block matrix `[[Z, X], [Y, 0]]` with all
/// Q-arguments pre-shifted by `arg_shift` half-steps. `barred` mirrors the
/// entry shifts (`q -> q^{-1}`).
pub fn delta_minor(
    table: &impl QTable,
    barred: bool,
    bs: &[u8],
    fs: &[u8],
    r: &[i64],
    s: &[i64],
    arg_shift: i64,
) -> Result<LaurentPoly> {
    let twist = table.twist();
    let (m, n) = (bs.len(), fs.len());
    let (alpha, beta) = (r.len(), s.len());
    if m + alpha != n + beta {
        return Err(Error::SizeMismatch(format!(
            "minor blocks: {m}+{alpha} rows vs {n}+{beta} columns"
        )));
    }
    let t = twist.t();
    let size = m + alpha;
    let mirror: i64 = if barred { -1 } else { 1 };
    let mut mat = vec![vec![LaurentPoly::zero(); size]; size];
    for (k, &b) in bs.iter().enumerate() {
        for (l, &f) in fs.iter().enumerate() {
            let pair = table.poly(Subset::from_indices(&[b, f]));
            mat[k][l] = pair
                .shift(arg_shift, t)
                .scale(&(Scalar::one() / (twist.z(b) - twist.z(f))));
        }
        for (l, &sl) in s.iter().enumerate() {
            let q = table.poly(Subset::singleton(b));
            mat[k][n + l] = q
                .shift(arg_shift + mirror * (4 * sl - 2), t)
                .scale(&scalar::pow_i64(twist.z(b), sl - 1));
        }
    }
    for (k, &rk) in r.iter().enumerate() {
        for (l, &f) in fs.iter().enumerate() {
            let q = table.poly(Subset::singleton(f));
            mat[m + k][l] = q
                .shift(arg_shift + mirror * (-4 * rk + 2), t)
                .scale(&scalar::pow_i64(&-twist.z(f).clone(), rk - 1));
        }
    }
    Ok(det_poly(&mat))
}

/// The unnormalized `T_mu` determinant: sign times the Maya-sequence minor
/// at the diagram-dependent argument shift. `None` when the diagram makes
/// the formula vanish (`xi > m+1`).
pub fn t_cal(
    table: &impl QTable,
    barred: bool,
    bs: &[u8],
    fs: &[u8],
    mu: &Partition,
) -> Option<LaurentPoly> {
    let (m, n) = (bs.len(), fs.len());
    let xi = mn_index(mu, m, n);
    if xi > m + 1 {
        return None;
    }
    let maya = maya_sequences(mu, m, n)?;
    let (mm, nn) = (m as i64, n as i64);
    let mu1 = mu.first() as i64;
    let mu1c = mu.len() as i64;
    let w = if barred {
        3 * (mm - nn) - 2 * mu1c + 2 * mu1
    } else {
        -3 * (mm - nn) + 2 * mu1c - 2 * mu1
    };
    let delta = delta_minor(table, barred, bs, fs, &maya.r, &maya.s, w)
        .expect("maya sequences are size-consistent");
    let sign = scalar::sign_pow((mm + nn + 1) * (xi as i64 + 1));
    Some(delta.scale(&sign))
}

/// Normalized Wronskian T-function `T_mu = T_cal_mu(x) / T_cal_∅(0)`;
/// zero when `mu` contains the `(m+1) x (n+1)` rectangle.
pub fn wronskian_t(
    table: &impl QTable,
    barred: bool,
    bs: &[u8],
    fs: &[u8],
    mu: &Partition,
) -> LaurentPoly {
    match t_cal(table, barred, bs, fs, mu) {
        None => LaurentPoly::zero(),
        Some(num) => {
            let d = t_empty_zero(table.twist(), bs, fs);
            num.scale(&(Scalar::one() / d))
        }
    }
}

/// Rectangular T with the boundary conventions: determinant for
/// `a, s >= 1`, shifted `T_∅` on the axes, zero elsewhere.
pub fn wronskian_t_rect(
    table: &impl QTable,
    barred: bool,
    bs: &[u8],
    fs: &[u8],
    a: i64,
    s: i64,
) -> LaurentPoly {
    let t = table.twist().t().clone();
    let mirror: i64 = if barred { -1 } else { 1 };
    if a >= 1 && s >= 1 {
        wronskian_t(
            table,
            barred,
            bs,
            fs,
            &Partition::rectangle(a as u32, s as u32),
        )
    } else if a == 0 {
        wronskian_t(table, barred, bs, fs, &Partition::empty()).shift(mirror * -2 * s, &t)
    } else if s == 0 && a >= 0 {
        wronskian_t(table, barred, bs, fs, &Partition::empty()).shift(mirror * 2 * a, &t)
    } else {
        LaurentPoly::zero()
    }
}

/// The Q-function of a mixed subset by the Wronskian solution:
/// `Q_{B ⊔ F}(x) = T_∅(x q^{(m-n)/2})` (mirrored for barred).
pub fn wronskian_q(table: &impl QTable, barred: bool, bs: &[u8], fs: &[u8]) -> LaurentPoly {
    let (m, n) = (bs.len() as i64, fs.len() as i64);
    let shift = if barred { -(m - n) } else { m - n };
    let t = table.twist().t().clone();
    wronskian_t(table, barred, bs, fs, &Partition::empty()).shift(shift, &t)
}

/// Which Laplace expansion to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LaplaceRegime {
    /// Subset sum over bosons; requires `a - s <= m - n`.
    Boson,
    /// Subset sum over fermions; requires `a - s >= m - n`.
    Fermion,
}

/// Laplace-expansion form of the rectangular T-function. With
/// `check_regime` the stated validity region is enforced; the relaxed
/// form (any integer `s` resp. `a`) is what the conserved-quantity
/// determinants are built from.
pub fn laplace_t(
    table: &impl QTable,
    barred: bool,
    bs: &[u8],
    fs: &[u8],
    a: i64,
    s: i64,
    regime: LaplaceRegime,
    check_regime: bool,
) -> Result<LaurentPoly> {
    let twist = table.twist();
    let (m, n) = (bs.len() as i64, fs.len() as i64);
    if check_regime {
        let ok = match regime {
            LaplaceRegime::Boson => a - s <= m - n,
            LaplaceRegime::Fermion => a - s >= m - n,
        };
        if !ok {
            return Err(Error::Regime(format!(
                "{regime:?} expansion needs a-s {} m-n (a={a}, s={s}, m={m}, n={n})",
                if regime == LaplaceRegime::Boson {
                    "<="
                } else {
                    ">="
                }
            )));
        }
    }
    let t = twist.t();
    let mirror: i64 = if barred { -1 } else { 1 };
    let whole = Subset::from_indices(bs).union(Subset::from_indices(fs));
    let mut acc = LaurentPoly::zero();
    match regime {
        LaplaceRegime::Boson => {
            if a < 0 {
                return Ok(LaurentPoly::zero());
            }
            for sub in subsets_of(bs, a as usize) {
                let iset = Subset::from_indices(&sub);
                let mut coef = Scalar::one();
                let mut zprod = Scalar::one();
                for &al in &sub {
                    zprod *= twist.z(al);
                    for &be in fs {
                        coef *= twist.z(al) - twist.z(be);
                    }
                    for &be in bs.iter().filter(|&&x| !sub.contains(&x)) {
                        coef /= twist.z(al) - twist.z(be);
                    }
                }
                coef *= scalar::pow_i64(&zprod, s - a + m - n);
                let rest = table
                    .poly(Subset(whole.0 & !iset.0))
                    .shift(mirror * (-2 * s - (m - n)), t);
                let part = table.poly(iset).shift(mirror * (2 * s + (m - n)), t);
                acc = &acc + &(&rest * &part).scale(&coef);
            }
        }
        LaplaceRegime::Fermion => {
            if s < 0 {
                return Ok(LaurentPoly::zero());
            }
            for sub in subsets_of(fs, s as usize) {
                let jset = Subset::from_indices(&sub);
                let mut coef = Scalar::one();
                let mut zprod = Scalar::one();
                for &be in &sub {
                    zprod *= -twist.z(be).clone();
                    for &al in bs {
                        coef *= twist.z(al) - twist.z(be);
                    }
                    for &al in fs.iter().filter(|&&x| !sub.contains(&x)) {
                        coef /= twist.z(al) - twist.z(be);
                    }
                }
                coef *= scalar::pow_i64(&zprod, a - s + n - m);
                let rest = table
                    .poly(Subset(whole.0 & !jset.0))
                    .shift(mirror * (2 * a - (m - n)), t);
                let part = table.poly(jset).shift(mirror * (-2 * a + (m - n)), t);
                acc = &acc + &(&rest * &part).scale(&coef);
            }
        }
    }
    Ok(acc)
}

/// All `card`-element sub-multituples of `v` in ascending bit order.
pub fn subsets_of(v: &[u8], card: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if card > v.len() {
        return out;
    }
    let n = v.len();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize == card {
            out.push(
                (0..n)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| v[i])
                    .collect(),
            );
        }
    }
    out
}

/// Permutations of `v` with their signs (Heap's algorithm).
pub fn permutations_with_sign(v: &[u8]) -> Vec<(Vec<u8>, i8)> {
    let mut out = Vec::new();
    let mut work = v.to_vec();
    let n = work.len();
    let mut c = vec![0usize; n];
    let mut sign = 1i8;
    out.push((work.clone(), sign));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                work.swap(0, i);
            } else {
                work.swap(c[i], i);
            }
            sign = -sign;
            out.push((work.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// One Weyl-sum monomial: the product of twist powers, single and pair
/// Q-functions attached to a fixed ordering of the index tuples.
fn weyl_monomial(
    table: &impl QTable,
    barred: bool,
    bs: &[u8],
    fs: &[u8],
    mu: &Partition,
) -> LaurentPoly {
    let twist = table.twist();
    let t = twist.t();
    let (m, n) = (bs.len() as i64, fs.len() as i64);
    let xi = mn_index(mu, bs.len(), fs.len()) as i64;
    let conj = mu.conjugate();
    let l = mu.part(xi as usize) as i64 + 1;
    let r = n - m + xi - l;
    let mu1 = mu.first() as i64;
    let mu1c = mu.len() as i64;
    // Common tail of every exponent, mirrored for the barred family.
    let base = (m - n) + 2 * mu1c - 2 * mu1;
    let mirror: i64 = if barred { -1 } else { 1 };
    let mut acc = LaurentPoly::one();
    for i in 1..=xi - 1 {
        let b = bs[(i - 1) as usize];
        let mui = mu.part(i as usize) as i64;
        let coef = scalar::pow_i64(twist.z(b), mui + m - n - i);
        let shift = mirror * (4 * mui - 4 * i + 2 + base);
        acc = &acc
            * &table
                .poly(Subset::singleton(b))
                .shift(shift, t)
                .scale(&coef);
    }
    for i in 1..=l - 1 {
        let f = fs[(i - 1) as usize];
        let mui = conj.part(i as usize) as i64;
        let coef = scalar::pow_i64(&-twist.z(f).clone(), mui + n - m - i);
        let shift = mirror * (-4 * mui + 4 * i - 2 + base);
        acc = &acc
            * &table
                .poly(Subset::singleton(f))
                .shift(shift, t)
                .scale(&coef);
    }
    for i in xi..=m {
        let b = bs[(i - 1) as usize];
        let f = fs[(l + i - xi - 1) as usize];
        let coef = scalar::pow_i64(&-twist.z(f).clone(), r)
            / scalar::pow_i64(twist.z(b), r)
            / (twist.z(b) - twist.z(f));
        let shift = mirror * (-4 * (r + m - n) + base);
        acc = &acc
            * &table
                .poly(Subset::from_indices(&[b, f]))
                .shift(shift, t)
                .scale(&coef);
    }
    for i in (l + m + 1 - xi)..=n {
        let f = fs[(i - 1) as usize];
        let coef = scalar::pow_i64(&-twist.z(f).clone(), n - i);
        let shift = mirror * (-4 * (m - i) - 2 + base);
        acc = &acc
            * &table
                .poly(Subset::singleton(f))
                .shift(shift, t)
                .scale(&coef);
    }
    acc
}

/// Weyl-group sum route: the signed sum of `weyl_monomial` over
/// `S(B) x S(F)`, divided by `(m - xi + 1)! D`.
pub fn weyl_sum_t(
    table: &impl QTable,
    barred: bool,
    bs: &[u8],
    fs: &[u8],
    mu: &Partition,
) -> LaurentPoly {
    let (m, n) = (bs.len(), fs.len());
    let xi = mn_index(mu, m, n);
    if xi > m + 1 {
        return LaurentPoly::zero();
    }
    let mut acc = LaurentPoly::zero();
    for (bperm, bsign) in permutations_with_sign(bs) {
        for (fperm, fsign) in permutations_with_sign(fs) {
            let term = weyl_monomial(table, barred, &bperm, &fperm, mu);
            let sign = (bsign * fsign) as i64;
            acc = if sign > 0 { &acc + &term } else { &acc - &term };
        }
    }
    let mut fact = Scalar::one();
    for k in 2..=(m as i64 - xi as i64 + 1) {
        fact *= scalar::int(k);
    }
    let d = deno(table.twist(), bs, fs);
    acc.scale(&(Scalar::one() / (fact * d)))
}

/// The stacked diagram `mu_{c1,c2}` of the typical-representation
/// factorization: `(mu_1+c1, ..., mu_m+c1, n^{c2}, mu_{m+1}, ...)`.
pub fn mu_augmented(mu: &Partition, m: usize, n: usize, c1: u32, c2: u32) -> Partition {
    let mut parts = Vec::new();
    for i in 1..=m {
        parts.push(mu.part(i) + c1);
    }
    for _ in 0..c2 {
        parts.push(n as u32);
    }
    for i in m + 1..=mu.len() {
        parts.push(mu.part(i));
    }
    Partition::new(parts)
}

/// Factorized typical-representation T-function with integer continuous
/// parameters: the product of a boson-only and a fermion-only Wronskian
/// block. Requires the `xi = m+1` regime `mu_{m+1} <= n <= mu_m`.
pub fn typical_t(
    table: &impl QTable,
    barred: bool,
    bs: &[u8],
    fs: &[u8],
    mu: &Partition,
    c1: u32,
    c2: u32,
) -> Result<LaurentPoly> {
    let twist = table.twist();
    let (m, n) = (bs.len(), fs.len());
    if m == 0 || n == 0 {
        return Err(Error::Regime(
            "typical factorization needs m, n >= 1".into(),
        ));
    }
    if !(mu.part(m + 1) <= n as u32 && n as u32 <= mu.part(m)) {
        return Err(Error::Regime(format!(
            "typical factorization needs mu_{}+1 <= {n} <= mu_{} (mu = {mu})",
            m + 1,
            m
        )));
    }
    let tau = Partition::new((1..=m).map(|i| mu.part(i) - n as u32).collect());
    let eta = Partition::new((m + 1..=mu.len()).map(|i| mu.part(i)).collect());
    let conj = mu.conjugate();
    let (mm, nn) = (m as i64, n as i64);
    let c = (c1 + c2) as i64;
    let mut coef = scalar::pow_i64(
        &bs.iter().fold(Scalar::one(), |acc, &b| acc * twist.z(b)),
        c1 as i64,
    );
    coef *= scalar::pow_i64(
        &fs.iter()
            .fold(Scalar::one(), |acc, &f| acc * -twist.z(f).clone()),
        c2 as i64,
    );
    for &b in bs {
        for &f in fs {
            coef *= twist.z(b) - twist.z(f);
        }
    }
    let t = twist.t();
    let (bshift, fshift) = if barred {
        (
            -nn + 2 * conj.part(n + 1) as i64 - 2 * conj.part(1) as i64 - 2 * c,
            mm - 2 * mu.part(m + 1) as i64 + 2 * mu.part(1) as i64 + 2 * c,
        )
    } else {
        (
            nn - 2 * conj.part(n + 1) as i64 + 2 * conj.part(1) as i64 + 2 * c,
            -mm + 2 * mu.part(m + 1) as i64 - 2 * mu.part(1) as i64 - 2 * c,
        )
    };
    let tb = wronskian_t(table, barred, bs, &[], &tau).shift(bshift, t);
    let tf = wronskian_t(table, barred, &[], fs, &eta).shift(fshift, t);
    Ok((&tb * &tf).scale(&coef))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qhierarchy::{Convention, GenConfig, QHierarchy};

    fn hierarchy(m: usize, n: usize, deg: u32, seed: u64, conv: Convention) -> QHierarchy {
        QHierarchy::build(
            TwistData::auto(m, n),
            conv,
            &GenConfig::uniform(seed, deg, m + n),
        )
        .unwrap()
    }

    #[test]
    fn cauchy_identity_small_cases() {
        let twist = TwistData::auto(3, 3);
        for m in 0..=3usize {
            for n in 0..=3usize {
                if m + n == 0 {
                    continue;
                }
                let bs: Vec<u8> = (1..=m as u8).collect();
                let fs: Vec<u8> = (4..=3 + n as u8).collect();
                assert_eq!(
                    t_empty_zero_det(&twist, &bs, &fs),
                    t_empty_zero(&twist, &bs, &fs),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn deno_three_term_relations() {
        let twist = TwistData::auto(4, 2);
        let d = |bs: &[u8], fs: &[u8]| deno(&twist, bs, fs);
        let z = |a: u8| twist.z(a).clone();
        // Appending two bosons.
        let lhs = d(&[1], &[5]) * d(&[1, 2, 3], &[5]);
        let rhs = (z(2) - z(3)) * d(&[1, 2], &[5]) * d(&[1, 3], &[5]);
        assert_eq!(lhs, rhs);
        // Appending two fermions.
        let lhs = d(&[1], &[5]) * d(&[1], &[5, 6, 4]);
        let rhs = (z(4) - z(6)) * d(&[1], &[5, 6]) * d(&[1], &[5, 4]);
        assert_eq!(lhs, rhs);
        // Mixed append.
        let lhs = d(&[1, 2], &[5]) * d(&[1], &[5, 6]);
        let rhs = (z(2) - z(6)) * d(&[1], &[5]) * d(&[1, 2], &[5, 6]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn singletons_collapse_to_the_stored_polynomials() {
        let h = hierarchy(2, 1, 2, 3, Convention::Unbarred);
        assert_eq!(
            &wronskian_q(&h, false, &[1], &[]),
            h.q(Subset::singleton(1))
        );
        assert_eq!(
            &wronskian_q(&h, false, &[], &[3]),
            h.q(Subset::singleton(3))
        );
        // The (1,1) Wronskian reproduces the solved pair.
        assert_eq!(
            &wronskian_q(&h, false, &[1], &[3]),
            h.q(Subset::from_indices(&[1, 3]))
        );
    }

    #[test]
    fn barred_explicit_two_one_determinant() {
        // The displayed m=2, n=1 case of the barred Wronskian solution.
        let h = hierarchy(2, 1, 1, 9, Convention::Barred);
        let tw = h.twist();
        let t = tw.t();
        let q = |s: &[u8]| h.q(Subset::from_indices(s)).clone();
        let (z1, z2, z3) = (tw.z(1), tw.z(2), tw.z(3));
        let pref = -(z1 - z3) * (z2 - z3) / (z1 - z2);
        let det = &(&q(&[1, 3]).shift(2, t).scale(&(Scalar::one() / (z1 - z3))) * &q(&[2]))
            - &(&q(&[2, 3]).shift(2, t).scale(&(Scalar::one() / (z2 - z3))) * &q(&[1]));
        let expect = det.scale(&pref);
        assert_eq!(wronskian_q(&h, true, &[1, 2], &[3]), expect);
    }

    #[test]
    fn laplace_regime_checks() {
        let h = hierarchy(2, 1, 1, 4, Convention::Unbarred);
        assert!(laplace_t(&h, false, &[1, 2], &[3], 2, 0, LaplaceRegime::Boson, true).is_err());
        assert!(laplace_t(&h, false, &[1, 2], &[3], 0, 2, LaplaceRegime::Fermion, true).is_err());
        // Equality point a - s = m - n is allowed in both regimes and the
        // two expansions agree there.
        let a = laplace_t(&h, false, &[1, 2], &[3], 2, 1, LaplaceRegime::Boson, true).unwrap();
        let b = laplace_t(&h, false, &[1, 2], &[3], 2, 1, LaplaceRegime::Fermion, true).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn typical_regime_rejected_outside_window() {
        let h = hierarchy(2, 1, 1, 4, Convention::Unbarred);
        // mu_m = mu_2 = 0 < n = 1 violates mu_{m+1} <= n <= mu_m.
        let mu: Partition = "1".parse().unwrap();
        assert!(typical_t(&h, false, &[1, 2], &[3], &mu, 0, 0).is_err());
        // Inside the window the call succeeds.
        let mu: Partition = "2,1".parse().unwrap();
        assert!(typical_t(&h, false, &[1, 2], &[3], &mu, 0, 0).is_ok());
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations_with_sign(&[1, 2, 3]);
        assert_eq!(perms.len(), 6);
        let id_sign = perms.iter().find(|(p, _)| p == &vec![1, 2, 3]).unwrap().1;
        assert_eq!(id_sign, 1);
        let swap_sign = perms.iter().find(|(p, _)| p == &vec![2, 1, 3]).unwrap().1;
        assert_eq!(swap_sign, -1);
    }

    #[test]
    fn wronskian_vanishes_on_forbidden_rectangle() {
        let h = hierarchy(1, 1, 1, 6, Convention::Unbarred);
        let mu = Partition::rectangle(2, 2);
        assert!(wronskian_t(&h, false, &[1], &[2], &mu).is_zero());
        assert!(weyl_sum_t(&h, false, &[1], &[2], &mu).is_zero());
    }

    #[test]
    fn t_rect_boundary_conventions() {
        let h = hierarchy(2, 1, 1, 6, Convention::Unbarred);
        let t = h.twist().t().clone();
        let bs = [1u8, 2];
        let fs = [3u8];
        let (m, n) = (2i64, 1i64);
        // T^{(a)}_0(x) = Q(x q^{-(m-n)/2 + a}).
        for a in 0..3i64 {
            let lhs = wronskian_t_rect(&h, false, &bs, &fs, a, 0);
            let rhs = h
                .q(Subset::from_indices(&[1, 2, 3]))
                .shift(-(m - n) + 2 * a, &t);
            assert_eq!(lhs, rhs, "a = {a}");
        }
        // T^{(0)}_s(x) = Q(x q^{-(m-n)/2 - s}), any integer s.
        for s in -2..3i64 {
            let lhs = wronskian_t_rect(&h, false, &bs, &fs, 0, s);
            let rhs = h
                .q(Subset::from_indices(&[1, 2, 3]))
                .shift(-(m - n) - 2 * s, &t);
            assert_eq!(lhs, rhs, "s = {s}");
        }
        // Zero sector.
        assert!(wronskian_t_rect(&h, false, &bs, &fs, -1, 2).is_zero());
        assert!(wronskian_t_rect(&h, false, &bs, &fs, 2, -1).is_zero());
        assert!(wronskian_t_rect(&h, false, &bs, &fs, 3, 2).is_zero());
    }

    #[test]
    fn tuple_order_invariance_of_wronskian() {
        let h = hierarchy(2, 2, 1, 12, Convention::Unbarred);
        let mu: Partition = "2,1".parse().unwrap();
        let a = wronskian_t(&h, false, &[1, 2], &[3, 4], &mu);
        let b = wronskian_t(&h, false, &[2, 1], &[4, 3], &mu);
        assert_eq!(a, b);
    }

    #[test]
    fn twist_powers_with_negative_exponents() {
        let tw = TwistData::auto(1, 1);
        assert_eq!(scalar::pow_i64(tw.z(1), -2), scalar::ratio(1, 4));
    }

    #[test]
    fn weyl_monomial_is_invariant_under_the_paired_subgroup() {
        // For mu = ∅ at (2,2) the index is 1, so the subgroup pairs the
        // permutation of (b_1, b_2) with the same permutation of
        // (f_1, f_2); the monomial must not change, which is what makes
        // the coset sum equal the full sum over (m - xi + 1)!.
        let h = hierarchy(2, 2, 1, 8, Convention::Unbarred);
        let mu = Partition::empty();
        let a = weyl_sum_t(&h, false, &[1, 2], &[3, 4], &mu);
        let b = weyl_sum_t(&h, false, &[2, 1], &[4, 3], &mu);
        assert_eq!(a, b);
        // And the full-sum route with the factorial normalization equals
        // the determinant route.
        let det = wronskian_t(&h, false, &[1, 2], &[3, 4], &mu);
        assert_eq!(a, det);
    }
}
