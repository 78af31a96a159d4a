//! Partition, skew-Young-diagram, Maya-sequence and admissible-tableau
//! combinatorics, plus the Kac-Dynkin labels of tensor representations.
//!
//! Cell coordinates are 1-based, row index growing downwards and column
//! index to the right, with the top-left corner of the outer shape at
//! (1,1). Shift exponents in the T-function formulas depend on the raw
//! first row/column of the outer partition, so skew diagrams keep their
//! outer shape uncanonicalized.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Weakly decreasing list of nonnegative integers, trailing zeros
/// stripped: `(4,3,2,1,1,0,0) == (4,3,2,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(width^height)`.
    pub fn rectangle(height: u32, width: u32) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Partition(vec![width; height as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `mu_i` with 1-based `i`; zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            panic!("partition parts are 1-based");
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts, i.e. `mu'_1`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> u32 {
        self.part_or_zero(1)
    }

    fn part_or_zero(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Conjugate partition `mu'_j = #{k : mu_k >= j}`; an involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let mut out = Vec::with_capacity(cols);
        for j in 1..=cols {
            out.push(self.0.iter().filter(|&&p| p >= j as u32).count() as u32);
        }
        Partition(out)
    }

    /// True iff the diagram contains an `h x w` rectangle, i.e.
    /// `mu_h >= w` (h, w >= 1).
    pub fn contains_rectangle(&self, h: u32, w: u32) -> bool {
        self.part(h as usize) >= w
    }

    /// All partitions of size <= `max_size` with at most `max_rows` rows
    /// and parts at most `max_part` (deterministic lexicographic order).
    pub fn enumerate(max_size: u32, max_rows: usize, max_part: u32) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        fn rec(
            cur: &mut Vec<u32>,
            remaining: u32,
            max_next: u32,
            max_rows: usize,
            out: &mut Vec<Partition>,
        ) {
            if cur.len() >= max_rows || remaining == 0 {
                return;
            }
            for p in (1..=max_next.min(remaining)).rev() {
                cur.push(p);
                out.push(Partition(cur.clone()));
                rec(cur, remaining - p, p, max_rows, out);
                cur.pop();
            }
        }
        let mut cur = Vec::new();
        rec(&mut cur, max_size, max_part, max_rows, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part {piece:?}")))?;
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!("parts not weakly decreasing: {s:?}")));
        }
        Ok(Partition::new(parts))
    }
}

/// Skew diagram `lambda subset mu`: the cell set
/// `{(i,j) : lambda_i < j <= mu_i}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewDiagram {
    inner: Partition,
    outer: Partition,
}

impl SkewDiagram {
    pub fn new(inner: Partition, outer: Partition) -> Result<Self> {
        for i in 1..=inner.len() {
            if inner.part(i) > outer.part(i) {
                return Err(Error::Parse(format!(
                    "inner shape {inner} not contained in outer shape {outer}"
                )));
            }
        }
        Ok(SkewDiagram { inner, outer })
    }

    pub fn from_partition(outer: Partition) -> Self {
        SkewDiagram {
            inner: Partition::empty(),
            outer,
        }
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn is_empty(&self) -> bool {
        self.cell_count() == 0
    }

    pub fn cell_count(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Cells in row-major order, coordinates on the outer shape.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 1..=self.outer.len() {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                out.push((i as u32, j));
            }
        }
        out
    }

    /// The 180-degree rotation.
    pub fn rotate180(&self) -> SkewDiagram {
        let mu = &self.outer;
        let la = &self.inner;
        let m1 = mu.first();
        let rows = mu.len();
        let lrows = la.len();
        // Rotated inner shape: (mu_1 - mu_{rows}, ..., mu_1 - mu_2, 0).
        let mut inner = Vec::new();
        for k in (2..=rows).rev() {
            inner.push(m1 - mu.part(k));
        }
        // Rotated outer shape: mu_1 repeated (rows - lrows) times, then
        // (mu_1 - la_{lrows}, ..., mu_1 - la_1).
        let mut outer = vec![m1; rows - lrows];
        for k in (1..=lrows).rev() {
            outer.push(m1 - la.part(k));
        }
        SkewDiagram::new(Partition::new(inner), Partition::new(outer))
            .expect("rotation preserves containment")
    }

    /// Cells translated so the bounding box starts at (1,1); two diagrams
    /// with equal canonical cells are translates of each other.
    pub fn canonical_cells(&self) -> Vec<(u32, u32)> {
        let cells = self.cells();
        if cells.is_empty() {
            return cells;
        }
        let min_r = cells.iter().map(|c| c.0).min().unwrap();
        let min_c = cells.iter().map(|c| c.1).min().unwrap();
        cells
            .iter()
            .map(|&(r, c)| (r - min_r + 1, c - min_c + 1))
            .collect()
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}⊂{}", self.inner, self.outer)
        }
    }
}

/// Ordered tuple of distinct indices from `{1..M+N}` with the grading
/// boundary `M` (index `a` is bosonic iff `a <= M`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedTuple {
    indices: Vec<u8>,
    boson_bound: u8,
}

impl GradedTuple {
    pub fn new(indices: Vec<u8>, boson_bound: u8) -> Self {
        let mut seen = indices.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), indices.len(), "tuple entries must be distinct");
        GradedTuple {
            indices,
            boson_bound,
        }
    }

    /// The natural full tuple `(1, 2, ..., M+N)`.
    pub fn natural(m_bos: usize, n_fer: usize) -> Self {
        GradedTuple::new((1..=(m_bos + n_fer) as u8).collect(), m_bos as u8)
    }

    pub fn indices(&self) -> &[u8] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Grading of an index: +1 bosonic, -1 fermionic.
    pub fn grading_of(&self, index: u8) -> i64 {
        if index <= self.boson_bound {
            1
        } else {
            -1
        }
    }

    /// Grading of the k-th component (1-based).
    pub fn p(&self, k: usize) -> i64 {
        self.grading_of(self.indices[k - 1])
    }

    /// Count of bosonic entries.
    pub fn m(&self) -> usize {
        self.indices
            .iter()
            .filter(|&&i| i <= self.boson_bound)
            .count()
    }

    /// Count of fermionic entries.
    pub fn n(&self) -> usize {
        self.len() - self.m()
    }

    /// Prefix tuple of the first `k` components.
    pub fn prefix(&self, k: usize) -> GradedTuple {
        GradedTuple {
            indices: self.indices[..k].to_vec(),
            boson_bound: self.boson_bound,
        }
    }

    /// Suffix tuple from the k-th component (1-based) onwards.
    pub fn suffix(&self, k: usize) -> GradedTuple {
        GradedTuple {
            indices: self.indices[k - 1..].to_vec(),
            boson_bound: self.boson_bound,
        }
    }

    pub fn reversed(&self) -> GradedTuple {
        let mut indices = self.indices.clone();
        indices.reverse();
        GradedTuple {
            indices,
            boson_bound: self.boson_bound,
        }
    }

    pub fn boson_bound(&self) -> u8 {
        self.boson_bound
    }
}

/// Filling of a skew diagram by positions into a tuple, row-major over
/// `SkewDiagram::cells()`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    pub entries: Vec<u8>,
}

/// All admissible tableaux of `diagram` for `tuple`: (i) weak increase
/// along rows and columns, (ii) strict along a row when either index is
/// fermionic, (iii) strict along a column when either index is bosonic.
/// Depth-first over cells in row-major order with per-cell bounds from
/// the already-filled neighbors.
pub fn enumerate_admissible(tuple: &GradedTuple, diagram: &SkewDiagram) -> Vec<Tableau> {
    enumerate_admissible_in_order(tuple, diagram, false)
}

/// Same set generated column-major; retained as the cross-check of the
/// generation order.
pub fn enumerate_admissible_col_major(tuple: &GradedTuple, diagram: &SkewDiagram) -> Vec<Tableau> {
    enumerate_admissible_in_order(tuple, diagram, true)
}

fn enumerate_admissible_in_order(
    tuple: &GradedTuple,
    diagram: &SkewDiagram,
    col_major: bool,
) -> Vec<Tableau> {
    let row_major_cells = diagram.cells();
    if row_major_cells.is_empty() {
        return vec![Tableau {
            entries: Vec::new(),
        }];
    }
    if tuple.is_empty() {
        return Vec::new();
    }
    let k = tuple.len() as u8;
    let m = tuple.m() as u32;
    let n = tuple.n() as u32;
    if diagram.inner().is_empty() && diagram.outer().contains_rectangle(m + 1, n + 1) {
        return Vec::new();
    }
    let mut cells = row_major_cells.clone();
    if col_major {
        cells.sort_by_key(|&(r, c)| (c, r));
    }
    let pos: std::collections::HashMap<(u32, u32), usize> =
        cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let fermionic: Vec<bool> = (1..=k).map(|v| tuple.p(v as usize) < 0).collect();
    let mut out = Vec::new();
    let mut entries = vec![0u8; cells.len()];
    fill_cells(0, &cells, &pos, &fermionic, k, &mut entries, &mut out);
    if col_major {
        // Re-express the entries row-major so both orders yield the same
        // representation.
        let row_pos: std::collections::HashMap<(u32, u32), usize> = row_major_cells
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        for t in &mut out {
            let mut e = vec![0u8; t.entries.len()];
            for (i, cell) in cells.iter().enumerate() {
                e[row_pos[cell]] = t.entries[i];
            }
            t.entries = e;
        }
        out.sort_by(|a, b| a.entries.cmp(&b.entries));
    }
    out
}

fn fill_cells(
    idx: usize,
    cells: &[(u32, u32)],
    pos: &std::collections::HashMap<(u32, u32), usize>,
    fermionic: &[bool],
    k: u8,
    entries: &mut Vec<u8>,
    out: &mut Vec<Tableau>,
) {
    if idx == cells.len() {
        out.push(Tableau {
            entries: entries.clone(),
        });
        return;
    }
    let (r, c) = cells[idx];
    // Both traversal orders fill the left and upper neighbor first.
    let left = (c > 1)
        .then(|| {
            pos.get(&(r, c - 1))
                .filter(|&&i| i < idx)
                .map(|&i| entries[i])
        })
        .flatten();
    let above = (r > 1)
        .then(|| {
            pos.get(&(r - 1, c))
                .filter(|&&i| i < idx)
                .map(|&i| entries[i])
        })
        .flatten();
    for v in 1..=k {
        if let Some(l) = left {
            // Weak along the row, strict when either index is fermionic.
            let strict = fermionic[(l - 1) as usize] || fermionic[(v - 1) as usize];
            if v < l || (strict && v == l) {
                continue;
            }
        }
        if let Some(a) = above {
            // Weak down the column, strict when either index is bosonic.
            let strict = !fermionic[(a - 1) as usize] || !fermionic[(v - 1) as usize];
            if v < a || (strict && v == a) {
                continue;
            }
        }
        entries[idx] = v;
        fill_cells(idx + 1, cells, pos, fermionic, k, entries, out);
    }
}

/// The (m,n)-index `xi_{m,n}(mu) = min{j >= 1 : mu_j + m - j <= n-1}`.
/// Values `>= m+2` signal the vanishing case of the Wronskian formulas.
pub fn mn_index(mu: &Partition, m: usize, n: usize) -> usize {
    let mut j = 1usize;
    loop {
        let cond = mu.part(j) as i64 + m as i64 - j as i64 <= n as i64 - 1;
        if cond {
            return j;
        }
        j += 1;
    }
}

/// Maya sequences of the Wronskian minors: strictly increasing integer
/// rows/columns selections. `None` when `xi > m+1` (vanishing case).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MayaPair {
    /// Row selections, length `n - m + xi - 1`.
    pub r: Vec<i64>,
    /// Column selections, length `xi - 1`.
    pub s: Vec<i64>,
}

pub fn maya_sequences(mu: &Partition, m: usize, n: usize) -> Option<MayaPair> {
    let xi = mn_index(mu, m, n);
    if xi > m + 1 {
        return None;
    }
    let xi = xi as i64;
    let (m, n) = (m as i64, n as i64);
    let conj = mu.conjugate();
    let s: Vec<i64> = (1..=xi - 1)
        .map(|l| mu.part((xi - l) as usize) as i64 + m - n - xi + l + 1)
        .collect();
    let r: Vec<i64> = (1..=n - m + xi - 1)
        .map(|k| conj.part((n - m + xi - k) as usize) as i64 + k - xi + 1)
        .collect();
    Some(MayaPair { r, s })
}

/// True iff `mu` fits the (M,N)-hook, `mu_{M+1} <= N`.
pub fn hook_check(mu: &Partition, m_bos: usize, n_fer: usize) -> bool {
    mu.part(m_bos + 1) <= n_fer as u32
}

/// Kac-Dynkin labels `[b_1, ..., b_{M+N-1}]` of the tensor representation
/// labeled by an in-hook partition, with `eta_j = max(mu'_j - M, 0)`.
pub fn kac_dynkin(mu: &Partition, m_bos: usize, n_fer: usize) -> Result<Vec<i64>> {
    if !hook_check(mu, m_bos, n_fer) {
        return Err(Error::HookViolation(mu.to_string(), m_bos, n_fer));
    }
    assert!(m_bos >= 1 && n_fer >= 1, "Kac-Dynkin labels need M, N >= 1");
    let conj = mu.conjugate();
    let eta = |j: usize| (conj.part(j) as i64 - m_bos as i64).max(0);
    let mut labels = Vec::with_capacity(m_bos + n_fer - 1);
    for j in 1..m_bos {
        labels.push(mu.part(j) as i64 - mu.part(j + 1) as i64);
    }
    labels.push(mu.part(m_bos) as i64 + eta(1));
    for j in 1..n_fer {
        labels.push(eta(j) - eta(j + 1));
    }
    Ok(labels)
}

/// Typicality of the tensor representation: `mu_M >= N`.
pub fn is_typical(mu: &Partition, m_bos: usize, n_fer: usize) -> bool {
    mu.part(m_bos) >= n_fer as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(pt(&[4, 3, 2, 1, 1]).conjugate(), pt(&[5, 3, 2, 1]));
        // Rectangle transpose.
        assert_eq!(
            Partition::rectangle(3, 5).conjugate(),
            Partition::rectangle(5, 3)
        );
    }

    #[test]
    fn trailing_zeros_stripped() {
        assert_eq!(pt(&[4, 3, 2, 1, 1, 0, 0]), pt(&[4, 3, 2, 1, 1]));
        assert_eq!(
            "4,3,2,1,1".parse::<Partition>().unwrap(),
            pt(&[4, 3, 2, 1, 1])
        );
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn rotation_examples() {
        // Figure example: (2,1) in (4,3,2,1,1) rotates to (3,3,2,1) in (4,4,4,3,2).
        let d = SkewDiagram::new(pt(&[2, 1]), pt(&[4, 3, 2, 1, 1])).unwrap();
        let r = d.rotate180();
        assert_eq!(r.inner(), &pt(&[3, 3, 2, 1]));
        assert_eq!(r.outer(), &pt(&[4, 4, 4, 3, 2]));
        // Rectangles are rotation-invariant.
        let rect = SkewDiagram::from_partition(Partition::rectangle(2, 3));
        assert_eq!(rect.rotate180(), rect);
        // Direct evaluation for (2,1).
        let d = SkewDiagram::from_partition(pt(&[2, 1]));
        let r = d.rotate180();
        assert_eq!(r.inner(), &pt(&[1]));
        assert_eq!(r.outer(), &pt(&[2, 2]));
    }

    #[test]
    fn rotation_twice_is_a_translate() {
        for parts in [vec![4, 3, 2, 1, 1], vec![3, 1], vec![2, 2, 2]] {
            let d = SkewDiagram::new(pt(&[1]), pt(&parts)).unwrap();
            assert_eq!(
                d.rotate180().rotate180().canonical_cells(),
                d.canonical_cells()
            );
        }
    }

    #[test]
    fn mn_index_examples() {
        // xi(empty) = m - n + 1 for m >= n.
        assert_eq!(mn_index(&Partition::empty(), 3, 1), 3);
        assert_eq!(mn_index(&Partition::empty(), 2, 0), 3);
        // xi_{m,0} = m + 1, xi_{0,n} = 1.
        assert_eq!(mn_index(&pt(&[2, 1]), 2, 0), 3);
        assert_eq!(mn_index(&pt(&[1]), 0, 2), 1);
        // Rectangle with a - s <= m - n <= a gives a + 1.
        assert_eq!(mn_index(&Partition::rectangle(2, 2), 2, 1), 3);
        // Direct scan example.
        assert_eq!(mn_index(&pt(&[4, 3, 2, 1, 1]), 2, 2), 3);
        // mu_{m+1} <= n <= mu_m gives m + 1.
        for (m, n) in [(2usize, 1usize), (1, 1), (3, 2)] {
            let mu = pt(&[4, 2, 1]);
            if mu.part(m + 1) <= n as u32 && (m == 0 || n as u32 <= mu.part(m)) {
                assert_eq!(mn_index(&mu, m, n), m + 1);
            }
        }
    }

    #[test]
    fn maya_examples() {
        // Empty mu, (m,n)=(2,0): s=(1,2), r=().
        let mp = maya_sequences(&Partition::empty(), 2, 0).unwrap();
        assert_eq!(mp.s, vec![1, 2]);
        assert!(mp.r.is_empty());
        // Rectangle (s^a) with a <= m-n.
        let mp = maya_sequences(&Partition::rectangle(1, 2), 3, 0).unwrap();
        assert_eq!(mp.s, vec![1, 2, 5]); // (1,..,m-n-a, m-n-a+s+1,..,m-n+s) = (1,2,5)
        assert!(mp.r.is_empty());
        // Rectangle with m-n <= -s mirrors to rows:
        // r = (1,..,n-m-s, n-m-s+a+1,..,n-m+a) = (1,3,4) for s=2, a=1, n=3.
        let mp = maya_sequences(&Partition::rectangle(1, 2), 0, 3).unwrap();
        assert_eq!(mp.r, vec![1, 3, 4]);
        assert!(mp.s.is_empty());
        // Vanishing case.
        assert!(maya_sequences(&Partition::rectangle(2, 2), 1, 1).is_none());
    }

    #[test]
    fn maya_entries_positive_and_increasing() {
        for mu in Partition::enumerate(8, 5, 5) {
            for m in 0..4usize {
                for n in 0..4usize {
                    if let Some(mp) = maya_sequences(&mu, m, n) {
                        for w in mp.r.windows(2) {
                            assert!(w[0] < w[1]);
                        }
                        for w in mp.s.windows(2) {
                            assert!(w[0] < w[1]);
                        }
                        assert!(mp.r.iter().all(|&v| v >= 1), "{mu} {m} {n} {:?}", mp.r);
                        assert!(mp.s.iter().all(|&v| v >= 1), "{mu} {m} {n} {:?}", mp.s);
                    }
                }
            }
        }
    }

    #[test]
    fn hook_examples() {
        assert!(hook_check(&Partition::empty(), 2, 2));
        assert!(!hook_check(&pt(&[3, 3, 3]), 2, 2));
        assert!(hook_check(&Partition::rectangle(2, 7), 2, 1));
    }

    #[test]
    fn kac_dynkin_examples() {
        assert_eq!(kac_dynkin(&Partition::empty(), 2, 1).unwrap(), vec![0, 0]);
        assert_eq!(kac_dynkin(&pt(&[2, 1]), 2, 1).unwrap(), vec![1, 1]);
        assert!(kac_dynkin(&pt(&[3, 3, 3]), 2, 2).is_err());
        assert!(is_typical(&pt(&[2, 1]), 2, 1));
        assert!(!is_typical(&pt(&[2]), 2, 1));
    }

    /// Brute-force admissibility filter used as the enumeration oracle.
    fn brute_force(tuple: &GradedTuple, d: &SkewDiagram) -> Vec<Tableau> {
        let cells = d.cells();
        let k = tuple.len() as u8;
        if cells.is_empty() {
            return vec![Tableau { entries: vec![] }];
        }
        if k == 0 {
            return vec![];
        }
        let pos: std::collections::HashMap<(u32, u32), usize> =
            cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut out = Vec::new();
        let total = (k as u64).pow(cells.len() as u32);
        for code in 0..total {
            let mut e = Vec::with_capacity(cells.len());
            let mut c = code;
            for _ in 0..cells.len() {
                e.push((c % k as u64) as u8 + 1);
                c /= k as u64;
            }
            let ok = cells.iter().enumerate().all(|(i, &(r, col))| {
                let v = e[i];
                let right = pos.get(&(r, col + 1)).map(|&j| e[j]);
                let below = pos.get(&(r + 1, col)).map(|&j| e[j]);
                let row_ok = right.map_or(true, |w| {
                    let strict = tuple.p(v as usize) < 0 || tuple.p(w as usize) < 0;
                    if strict {
                        v < w
                    } else {
                        v <= w
                    }
                });
                let col_ok = below.map_or(true, |w| {
                    let strict = tuple.p(v as usize) > 0 || tuple.p(w as usize) > 0;
                    if strict {
                        v < w
                    } else {
                        v <= w
                    }
                });
                row_ok && col_ok
            });
            if ok {
                out.push(Tableau { entries: e });
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let tuple = GradedTuple::new(vec![1, 3, 2, 4], 2);
        for outer in [
            pt(&[1]),
            pt(&[2]),
            pt(&[1, 1]),
            pt(&[2, 1]),
            pt(&[2, 2]),
            pt(&[3, 2]),
            pt(&[2, 2, 2]),
        ] {
            let d = SkewDiagram::from_partition(outer);
            let mut a = enumerate_admissible(&tuple, &d);
            let mut b = brute_force(&tuple, &d);
            a.sort_by(|x, y| x.entries.cmp(&y.entries));
            b.sort_by(|x, y| x.entries.cmp(&y.entries));
            assert_eq!(a, b, "diagram {d}");
        }
        // Skew case.
        let d = SkewDiagram::new(pt(&[1]), pt(&[3, 2])).unwrap();
        assert_eq!(
            enumerate_admissible(&tuple, &d).len(),
            brute_force(&tuple, &d).len()
        );
    }

    #[test]
    fn enumeration_counting_examples() {
        // Single box: K tableaux.
        let tuple = GradedTuple::new(vec![2, 1, 3], 2);
        let single = SkewDiagram::from_partition(pt(&[1]));
        assert_eq!(enumerate_admissible(&tuple, &single).len(), 3);
        // Column (1^a) on an all-bosonic tuple: C(m, a).
        let bos = GradedTuple::new(vec![1, 2, 3, 4], 4);
        let col = SkewDiagram::from_partition(pt(&[1, 1]));
        assert_eq!(enumerate_admissible(&bos, &col).len(), 6);
        // Diagram containing an (m+1) x (n+1) rectangle: empty.
        let mixed = GradedTuple::new(vec![1, 3], 1); // m=1, n=1
        let rect = SkewDiagram::from_partition(pt(&[2, 2]));
        assert!(enumerate_admissible(&mixed, &rect).is_empty());
        // Empty tuple, nonempty diagram: empty set of fillings.
        let empty = GradedTuple::new(vec![], 2);
        assert!(enumerate_admissible(&empty, &single).is_empty());
    }

    #[test]
    fn row_major_and_column_major_generation_agree() {
        let tuple = GradedTuple::natural(2, 2);
        for outer in [pt(&[2, 1]), pt(&[3, 1]), pt(&[2, 2, 1]), pt(&[3, 2, 1])] {
            let d = SkewDiagram::from_partition(outer);
            let mut rows = enumerate_admissible(&tuple, &d);
            rows.sort_by(|a, b| a.entries.cmp(&b.entries));
            assert_eq!(
                rows,
                enumerate_admissible_col_major(&tuple, &d),
                "diagram {d}"
            );
        }
    }

    proptest::proptest! {
        #[test]
        fn conjugate_is_involutive(parts in proptest::collection::vec(0u32..7, 0..6)) {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let mu = Partition::new(sorted);
            proptest::prop_assert_eq!(mu.conjugate().conjugate(), mu);
        }
    }
}
