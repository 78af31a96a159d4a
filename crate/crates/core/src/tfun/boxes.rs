//! Tableaux-side T-functions: the box ratios of shifted Q-functions, the
//! admissible-tableaux sums, the quantum Jacobi-Trudi determinants over
//! one-row/one-column generators, and the pole-killing normalization.

use std::collections::HashMap;

use num_traits::One;

use crate::diagrams::{enumerate_admissible, GradedTuple, Partition, SkewDiagram};
use crate::scalar::Scalar;
use crate::subset::Subset;

use super::fval::{FTerm, FVal, FactorKey};
use super::TCtx;

/// Which box ratio to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoxKind {
    /// Prefix-tuple box of the unbarred sums.
    X,
    /// Suffix-tuple box of the barred sums.
    XBar,
    /// Conjugation image of `X`: twists inverted, shifts negated.
    XConj,
}

/// The box as a factored term at argument `x t^extra`. Factors whose
/// resolved polynomial is the constant 1 (the normalization anchors) are
/// dropped at construction.
pub fn box_term(ctx: &TCtx, tuple: &GradedTuple, kind: BoxKind, extra: i64) -> FTerm {
    let twist = ctx.hierarchy().twist();
    let mn = twist.m_bos() as i64 - twist.n_fer() as i64;
    let k = tuple.len();
    assert!(k >= 1, "box of an empty tuple");
    let full_set = Subset::from_indices(tuple.indices());
    let sigma_full: i64 = tuple.indices().iter().map(|&i| tuple.grading_of(i)).sum();
    let mut term = FTerm::one();
    let push = |term: &mut FTerm, key: FactorKey, num: bool| {
        if ctx.factor_poly(key).is_one() {
            return;
        }
        if num {
            term.mul_num(key);
        } else {
            term.mul_den(key);
        }
    };
    match kind {
        BoxKind::X | BoxKind::XConj => {
            let gamma = tuple.indices()[k - 1];
            let p = tuple.grading_of(gamma);
            let hat_set = Subset::from_indices(tuple.prefix(k - 1).indices());
            let sigma_hat = sigma_full - p;
            let mirror: i64 = if kind == BoxKind::XConj { -1 } else { 1 };
            push(
                &mut term,
                ctx.resolve(
                    hat_set,
                    mirror * (-2 * sigma_hat - 4 * p + mn) + extra,
                    false,
                ),
                true,
            );
            push(
                &mut term,
                ctx.resolve(
                    full_set,
                    mirror * (-2 * sigma_full + 4 * p + mn) + extra,
                    false,
                ),
                true,
            );
            push(
                &mut term,
                ctx.resolve(hat_set, mirror * (-2 * sigma_hat + mn) + extra, false),
                false,
            );
            push(
                &mut term,
                ctx.resolve(full_set, mirror * (-2 * sigma_full + mn) + extra, false),
                false,
            );
            let z = twist.z(gamma);
            term.scale(&if kind == BoxKind::XConj {
                Scalar::one() / z
            } else {
                z.clone()
            });
        }
        BoxKind::XBar => {
            let gamma = tuple.indices()[0];
            let p = tuple.grading_of(gamma);
            let chk_set = Subset::from_indices(tuple.suffix(2).indices());
            let sigma_chk = sigma_full - p;
            push(
                &mut term,
                ctx.resolve(chk_set, 2 * sigma_chk + 4 * p - mn + extra, true),
                true,
            );
            push(
                &mut term,
                ctx.resolve(full_set, 2 * sigma_full - 4 * p - mn + extra, true),
                true,
            );
            push(
                &mut term,
                ctx.resolve(chk_set, 2 * sigma_chk - mn + extra, true),
                false,
            );
            push(
                &mut term,
                ctx.resolve(full_set, 2 * sigma_full - mn + extra, true),
                false,
            );
            term.scale(twist.z(gamma));
        }
    }
    term
}

/// The box as a value.
pub fn box_value(ctx: &TCtx, tuple: &GradedTuple, kind: BoxKind) -> FVal {
    FVal::from_term(ctx, &box_term(ctx, tuple, kind, 0))
}

/// Extra argument shift of the box sitting in cell `(r, c)` of a diagram
/// with outer shape data `(mu1, mu1c)`, for a tuple with `m` bosons and
/// `n` fermions.
fn cell_shift(barred: bool, mu1: i64, mu1c: i64, r: i64, c: i64, m: i64, n: i64, mn: i64) -> i64 {
    let grading_part = if barred { -(m - n) + mn } else { (m - n) - mn };
    2 * (mu1 - mu1c) + 4 * r - 4 * c + grading_part
}

/// Admissible-tableaux sum over a skew diagram: the unbarred sum over
/// prefix-tuple boxes or the barred sum over suffix-tuple boxes. The empty
/// diagram gives 1; a nonempty diagram over the empty tuple gives 0.
pub fn tab_sum(ctx: &TCtx, tuple: &GradedTuple, d: &SkewDiagram, barred: bool) -> FVal {
    if d.is_empty() {
        return FVal::one();
    }
    if tuple.is_empty() {
        return FVal::zero();
    }
    let twist = ctx.hierarchy().twist();
    let mn = twist.m_bos() as i64 - twist.n_fer() as i64;
    let (m, n) = (tuple.m() as i64, tuple.n() as i64);
    let mu1 = d.outer().first() as i64;
    let mu1c = d.outer().len() as i64;
    let cells = d.cells();
    let mut acc = FVal::zero();
    for tab in enumerate_admissible(tuple, d) {
        let mut term = FTerm::one();
        for (idx, &(r, c)) in cells.iter().enumerate() {
            let v = tab.entries[idx] as usize;
            let extra = cell_shift(barred, mu1, mu1c, r as i64, c as i64, m, n, mn);
            let sub = if barred {
                tuple.suffix(v)
            } else {
                tuple.prefix(v)
            };
            let kind = if barred { BoxKind::XBar } else { BoxKind::X };
            let bterm = box_term(ctx, &sub, kind, extra);
            term.mul_term(&bterm);
            if tuple.p(v) < 0 {
                term.scale(&-Scalar::one());
            }
        }
        acc.add_term(ctx, &term);
    }
    acc
}

/// One-row generator `F_(c)`; zero for negative length, one for zero.
pub fn one_row(ctx: &TCtx, tuple: &GradedTuple, c: i64, barred: bool) -> FVal {
    match c {
        c if c < 0 => FVal::zero(),
        0 => FVal::one(),
        c => tab_sum(
            ctx,
            tuple,
            &SkewDiagram::from_partition(Partition::new(vec![c as u32])),
            barred,
        ),
    }
}

/// One-column generator `F_(1^c)`.
pub fn one_column(ctx: &TCtx, tuple: &GradedTuple, c: i64, barred: bool) -> FVal {
    match c {
        c if c < 0 => FVal::zero(),
        0 => FVal::one(),
        c => tab_sum(
            ctx,
            tuple,
            &SkewDiagram::from_partition(Partition::rectangle(c as u32, 1)),
            barred,
        ),
    }
}

/// Determinant axis of the quantum Jacobi-Trudi expression.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JTAxis {
    /// Size `mu_1` determinant over one-column generators.
    Column,
    /// Size `mu'_1` determinant over one-row generators.
    Row,
}

/// Quantum Jacobi-Trudi determinant of the tableaux sum over a skew
/// diagram. Both axes agree with `tab_sum`. The barred determinant is the
/// reversal image of the unbarred one: rotated diagram data with mirrored
/// argument shifts over the barred generators.
pub fn jacobi_trudi(
    ctx: &TCtx,
    tuple: &GradedTuple,
    d: &SkewDiagram,
    barred: bool,
    axis: JTAxis,
) -> FVal {
    if d.is_empty() {
        return FVal::one();
    }
    let rotated;
    let d = if barred {
        rotated = d.rotate180();
        &rotated
    } else {
        d
    };
    let mu = d.outer();
    let la = d.inner();
    let muc = mu.conjugate();
    let lac = la.conjugate();
    let mu1 = mu.first() as i64;
    let mu1c = mu.len() as i64;
    let mut memo: HashMap<(bool, i64), FVal> = HashMap::new();
    let mut generator = |is_col: bool, len: i64| -> FVal {
        if len < 0 {
            return FVal::zero();
        }
        memo.entry((is_col, len))
            .or_insert_with(|| {
                if is_col {
                    one_column(ctx, tuple, len, barred)
                } else {
                    one_row(ctx, tuple, len, barred)
                }
            })
            .clone()
    };
    let mirror: i64 = if barred { -1 } else { 1 };
    let mat: Vec<Vec<FVal>> = match axis {
        JTAxis::Column => (1..=mu1)
            .map(|i| {
                (1..=mu1)
                    .map(|j| {
                        let len = muc.part(i as usize) as i64 - lac.part(j as usize) as i64 - i + j;
                        let shift = 2
                            * (mu1 - mu1c
                                + muc.part(i as usize) as i64
                                + lac.part(j as usize) as i64
                                - i
                                - j
                                + 1);
                        let g = generator(true, len);
                        g.shift(ctx, mirror * shift)
                    })
                    .collect()
            })
            .collect(),
        JTAxis::Row => (1..=mu1c)
            .map(|i| {
                (1..=mu1c)
                    .map(|j| {
                        let len = mu.part(j as usize) as i64 - la.part(i as usize) as i64 + i - j;
                        let shift = 2
                            * (mu1
                                - mu1c
                                - mu.part(j as usize) as i64
                                - la.part(i as usize) as i64
                                + i
                                + j
                                - 1);
                        let g = generator(false, len);
                        g.shift(ctx, mirror * shift)
                    })
                    .collect()
            })
            .collect(),
    };
    det_fval(ctx, &mat)
}

/// Determinant of a matrix of factored values by column-subset dynamic
/// programming over the leading rows.
pub fn det_fval(ctx: &TCtx, mat: &[Vec<FVal>]) -> FVal {
    let n = mat.len();
    if n == 0 {
        return FVal::one();
    }
    let mut minors: HashMap<u32, FVal> = HashMap::new();
    minors.insert(0, FVal::one());
    for row in 0..n {
        let mut next: HashMap<u32, FVal> = HashMap::new();
        for (cols, minor) in &minors {
            if minor.is_zero() {
                continue;
            }
            let mut below = 0usize;
            for j in 0..n {
                let bit = 1u32 << j;
                if cols & bit != 0 {
                    below += 1;
                    continue;
                }
                let entry = &mat[row][j];
                if entry.is_zero() {
                    continue;
                }
                // Inversions added by sigma(row) = j: used columns above j.
                let inversions = row - below;
                let mut term = minor.mul(ctx, entry);
                if inversions % 2 == 1 {
                    term = term.neg();
                }
                let key = cols | bit;
                let slot = next.remove(&key);
                next.insert(
                    key,
                    match slot {
                        Some(v) => v.add(ctx, &term),
                        None => term,
                    },
                );
            }
        }
        minors = next;
    }
    minors.remove(&((1u32 << n) - 1)).unwrap_or_else(FVal::zero)
}

/// The pole-killing transformation of a (non-skew) tableaux sum:
/// `F_mu = Q_tuple(shift) * tab_sum(rotated mu)` unbarred, and
/// `F̄_mu = Q̄_tuple(shift) * tab_sum(mu)` barred.
pub fn normalized_f(ctx: &TCtx, tuple: &GradedTuple, mu: &Partition, barred: bool) -> FVal {
    let (m, n) = (tuple.m() as i64, tuple.n() as i64);
    let mu1 = mu.first() as i64;
    let mu1c = mu.len() as i64;
    let set = Subset::from_indices(tuple.indices());
    if barred {
        let key = ctx.resolve(set, (m - n) + 2 * mu1 - 2 * mu1c, true);
        tab_sum(ctx, tuple, &SkewDiagram::from_partition(mu.clone()), true).mul_factor(ctx, key)
    } else {
        let key = ctx.resolve(set, -(m - n) - 2 * mu1 + 2 * mu1c, false);
        let rot = SkewDiagram::from_partition(mu.clone()).rotate180();
        tab_sum(ctx, tuple, &rot, false).mul_factor(ctx, key)
    }
}

/// Jacobi-Trudi determinant with the pole-killing prefactor: the third
/// route to the normalized T-function.
pub fn normalized_f_via_jt(
    ctx: &TCtx,
    tuple: &GradedTuple,
    mu: &Partition,
    barred: bool,
    axis: JTAxis,
) -> FVal {
    let (m, n) = (tuple.m() as i64, tuple.n() as i64);
    let mu1 = mu.first() as i64;
    let mu1c = mu.len() as i64;
    let set = Subset::from_indices(tuple.indices());
    if barred {
        let key = ctx.resolve(set, (m - n) + 2 * mu1 - 2 * mu1c, true);
        jacobi_trudi(
            ctx,
            tuple,
            &SkewDiagram::from_partition(mu.clone()),
            true,
            axis,
        )
        .mul_factor(ctx, key)
    } else {
        let key = ctx.resolve(set, -(m - n) - 2 * mu1 + 2 * mu1c, false);
        let rot = SkewDiagram::from_partition(mu.clone()).rotate180();
        jacobi_trudi(ctx, tuple, &rot, false, axis).mul_factor(ctx, key)
    }
}

/// Rectangular `F^{(a)}_s` with the boundary conventions: pure shifted
/// Q-functions on the `a = 0` and `s = 0` axes, zero outside the stated
/// sector.
pub fn normalized_f_rect(ctx: &TCtx, tuple: &GradedTuple, a: i64, s: i64, barred: bool) -> FVal {
    let (m, n) = (tuple.m() as i64, tuple.n() as i64);
    let set = Subset::from_indices(tuple.indices());
    let qfactor = |shift: i64| -> FVal {
        let key = ctx.resolve(set, shift, barred);
        FVal::from_poly((*ctx.factor_poly(key)).clone())
    };
    let mirror: i64 = if barred { -1 } else { 1 };
    if a < 0 || (a > 0 && s < 0) || (a > m && s > n) {
        FVal::zero()
    } else if a == 0 {
        qfactor(mirror * (-(m - n) - 2 * s))
    } else if s == 0 {
        qfactor(mirror * (-(m - n) + 2 * a))
    } else {
        normalized_f(
            ctx,
            tuple,
            &Partition::rectangle(a as u32, s as u32),
            barred,
        )
    }
}

/// Adjacent-level box combination of the pole-cancellation statement:
/// returns `p_a X_{I_a} + p_{a+1} X_{I_{a+1}}` and the factor key of the
/// shared denominator `Q_{I_a}` whose zeros must cancel.
pub fn pole_pair(ctx: &TCtx, full: &GradedTuple, a: usize) -> (FVal, FactorKey) {
    assert!(a >= 1 && a < full.len());
    let twist = ctx.hierarchy().twist();
    let mn = twist.m_bos() as i64 - twist.n_fer() as i64;
    let pa = full.p(a);
    let pb = full.p(a + 1);
    let xa = box_value(ctx, &full.prefix(a), BoxKind::X).scale(&crate::scalar::int(pa));
    let xb = box_value(ctx, &full.prefix(a + 1), BoxKind::X).scale(&crate::scalar::int(pb));
    let sum = xa.add(ctx, &xb);
    let ia = full.prefix(a);
    let sigma: i64 = ia.indices().iter().map(|&i| full.grading_of(i)).sum();
    let divisor = ctx.resolve(Subset::from_indices(ia.indices()), -2 * sigma + mn, false);
    (sum, divisor)
}
