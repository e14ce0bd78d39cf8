//! Integer partitions, Young diagrams and standard Young tableaux.
//!
//! Nodes are 1-based `(row, col)` pairs. Diagrams are drawn in English
//! notation: row 1 on top, rows weakly shorter going down.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A node `(i, j)` of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub const fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.row, self.col)
    }
}

/// An integer partition `λ_1 ≥ … ≥ λ_l > 0`, identified with its diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition from non-increasing parts. Trailing zeros are
    /// dropped; a zero followed by a positive part is a monotonicity error.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NonMonotone { index: index + 1 });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let size = parts
            .iter()
            .try_fold(0usize, |acc, &p| acc.checked_add(p))
            .ok_or(Error::Overflow("partition size"))?;
        Ok(Partition { parts, size })
    }

    /// Like [`Partition::new`] but accepts signed input, rejecting negative parts.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for (index, &value) in parts.iter().enumerate() {
            let part = usize::try_from(value).map_err(|_| Error::Negative { index, value })?;
            out.push(part);
        }
        Partition::new(out)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `n = Σ λ_i`, the number of nodes.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of (non-zero) rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        row.checked_sub(1)
            .and_then(|r| self.parts.get(r))
            .copied()
            .unwrap_or(0)
    }

    /// Length of column `j` (1-based).
    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.row_len(node.row)
    }

    /// Nodes in row-reading order: row 1 left to right, then row 2, ...
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Node::new(r + 1, c)))
    }

    /// Position of `node` in row-reading order.
    pub fn node_index(&self, node: Node) -> Option<usize> {
        if !self.contains(node) {
            return None;
        }
        let before: usize = self.parts[..node.row - 1].iter().sum();
        Some(before + node.col - 1)
    }

    pub fn arm(&self, node: Node) -> usize {
        self.row_len(node.row) - node.col
    }

    pub fn leg(&self, node: Node) -> usize {
        self.col_len(node.col) - node.row
    }

    /// `h_α = arm + leg + 1`.
    pub fn hook(&self, node: Node) -> usize {
        self.arm(node) + self.leg(node) + 1
    }

    /// Hook lengths of every node, in row-reading order.
    pub fn hooks(&self) -> Vec<usize> {
        self.nodes().map(|node| self.hook(node)).collect()
    }

    /// The transposed diagram, `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts: Vec<usize> = (1..=width).map(|j| self.col_len(j)).collect();
        Partition {
            parts,
            size: self.size,
        }
    }

    /// `l(λ) = Σ_{(i,j) ∈ λ} (i − 1)`.
    pub fn l_stat(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (i * p) as u64)
            .sum()
    }

    /// Number of standard Young tableaux, `n! / ∏ h_α`.
    ///
    /// The quotient is formed over prime factorizations, so intermediate
    /// values never exceed the result. Errors with `Overflow` once the count
    /// itself no longer fits in a `u64` (first happens around n = 24).
    pub fn syt_count(&self) -> Result<u64> {
        let n = self.size;
        let mut exponents = vec![0i64; n + 1];
        for k in 2..=n {
            add_factorization(&mut exponents, k, 1);
        }
        for h in self.hooks() {
            add_factorization(&mut exponents, h, -1);
        }
        let mut count: u64 = 1;
        for (prime, &e) in exponents.iter().enumerate() {
            debug_assert!(e >= 0, "hook product does not divide n!");
            for _ in 0..e {
                count = count
                    .checked_mul(prime as u64)
                    .ok_or(Error::Overflow("syt_count"))?;
            }
        }
        Ok(count)
    }

    /// Standard Young tableaux of this shape in lexicographic order of their
    /// row-reading words.
    pub fn standard_tableaux(&self) -> SytIter {
        SytIter::new(self.clone())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

fn add_factorization(exponents: &mut [i64], mut k: usize, sign: i64) {
    let mut p = 2;
    while p * p <= k {
        while k % p == 0 {
            exponents[p] += sign;
            k /= p;
        }
        p += 1;
    }
    if k > 1 {
        exponents[k] += sign;
    }
}

/// All partitions of `n`, largest first in reverse lexicographic order:
/// `(3), (2,1), (1,1,1)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            let size = prefix.iter().sum();
            out.push(Partition {
                parts: prefix.clone(),
                size,
            });
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A bijective filling of a diagram by `1..=n`, increasing along rows and
/// down columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect::<Vec<_>>())
            .map_err(|_| Error::InvalidTableau("row lengths must be non-increasing"))?;
        if shape.len() != rows.len() {
            return Err(Error::InvalidTableau("empty row"));
        }
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::InvalidTableau(
                        "entries must be a permutation of 1..=n",
                    ));
                }
                seen[v] = true;
                if c > 0 && row[c - 1] >= v {
                    return Err(Error::InvalidTableau("rows must increase"));
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(Error::InvalidTableau("columns must increase"));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub(crate) fn from_parts_unchecked(shape: Partition, rows: Vec<Vec<usize>>) -> Self {
        StandardTableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn get(&self, node: Node) -> Option<usize> {
        self.rows
            .get(node.row.checked_sub(1)?)?
            .get(node.col.checked_sub(1)?)
            .copied()
    }

    /// `row_of[k]` is the row (1-based) holding entry `k`; index 0 unused.
    fn row_of(&self) -> Vec<usize> {
        let mut row_of = vec![0; self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v] = r + 1;
            }
        }
        row_of
    }

    /// The node holding entry `k`.
    pub fn node_of(&self, k: usize) -> Option<Node> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter()
                .position(|&v| v == k)
                .map(|c| Node::new(r + 1, c + 1))
        })
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `i` is a descent when `i + 1` sits in a strictly lower row than `i`.
    pub fn descents(&self) -> Vec<usize> {
        let row_of = self.row_of();
        (1..self.size())
            .filter(|&i| row_of[i + 1] > row_of[i])
            .collect()
    }

    pub fn maj(&self) -> u64 {
        self.descents().iter().map(|&i| i as u64).sum()
    }

    pub fn comaj(&self) -> u64 {
        let n = self.size();
        self.descents().iter().map(|&i| (n - i) as u64).sum()
    }

    /// `Qᵀ(j, i) = Q(i, j)`, a tableau of the conjugate shape.
    pub fn transpose(&self) -> StandardTableau {
        let shape = self.shape.conjugate();
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(j, &len)| (0..len).map(|i| self.rows[i][j]).collect())
            .collect();
        StandardTableau { shape, rows }
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("/")?;
            }
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Backtracking enumerator behind [`Partition::standard_tableaux`].
///
/// Cells are filled in row-reading order, each with the smallest admissible
/// unused value, which yields tableaux in lexicographic order of the reading
/// word. Values outside `[i·j, n − hook-rectangle + 1]` are pruned up front.
pub struct SytIter {
    shape: Partition,
    cells: Vec<Node>,
    lower: Vec<usize>,
    upper: Vec<usize>,
    values: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl SytIter {
    fn new(shape: Partition) -> Self {
        let n = shape.size();
        let cells: Vec<Node> = shape.nodes().collect();
        let lower = cells.iter().map(|c| c.row * c.col).collect();
        let upper = cells
            .iter()
            .map(|c| {
                let above: usize = (c.row..=shape.len())
                    .map(|r| shape.row_len(r).saturating_sub(c.col - 1))
                    .sum();
                n + 1 - above
            })
            .collect();
        SytIter {
            shape,
            cells,
            lower,
            upper,
            values: vec![0; n],
            used: vec![false; n + 1],
            started: false,
            done: false,
        }
    }

    fn candidate(&self, pos: usize, start: usize) -> Option<usize> {
        let cell = self.cells[pos];
        let mut lo = start.max(self.lower[pos]);
        if cell.col > 1 {
            lo = lo.max(self.values[pos - 1] + 1);
        }
        if cell.row > 1 {
            let above = pos - self.shape.row_len(cell.row - 1);
            lo = lo.max(self.values[above] + 1);
        }
        (lo..=self.upper[pos]).find(|&v| !self.used[v])
    }

    fn unassign(&mut self, pos: usize) -> usize {
        let v = self.values[pos];
        self.used[v] = false;
        self.values[pos] = 0;
        v
    }

    fn emit(&self) -> StandardTableau {
        let mut rows = Vec::with_capacity(self.shape.len());
        let mut offset = 0;
        for &len in self.shape.parts() {
            rows.push(self.values[offset..offset + len].to_vec());
            offset += len;
        }
        StandardTableau::from_parts_unchecked(self.shape.clone(), rows)
    }
}

impl Iterator for SytIter {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        if self.done {
            return None;
        }
        let n = self.cells.len();
        if n == 0 {
            self.done = true;
            return Some(StandardTableau::from_parts_unchecked(
                self.shape.clone(),
                Vec::new(),
            ));
        }
        let (mut pos, mut start) = if self.started {
            let last = n - 1;
            let v = self.unassign(last);
            (last, v + 1)
        } else {
            self.started = true;
            (0, 1)
        };
        loop {
            match self.candidate(pos, start) {
                Some(v) => {
                    self.values[pos] = v;
                    self.used[v] = true;
                    pos += 1;
                    if pos == n {
                        return Some(self.emit());
                    }
                    start = 1;
                }
                None => {
                    if pos == 0 {
                        self.done = true;
                        return None;
                    }
                    pos -= 1;
                    start = self.unassign(pos) + 1;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn make_partition() {
        let lambda = p(&[3, 2]);
        assert_eq!(lambda.parts(), &[3, 2]);
        assert_eq!(lambda.size(), 5);
        assert_eq!(p(&[]).size(), 0);
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
        assert_eq!(
            Partition::new(vec![2, 3]),
            Err(Error::NonMonotone { index: 1 })
        );
        assert_eq!(
            Partition::new(vec![2, 0, 1]),
            Err(Error::NonMonotone { index: 2 })
        );
        assert_eq!(
            Partition::from_signed(&[2, -1]),
            Err(Error::Negative {
                index: 1,
                value: -1
            })
        );
    }

    #[test]
    fn hooks() {
        let mut h = p(&[3, 2]).hooks();
        assert_eq!(h, vec![4, 3, 1, 2, 1]);
        h = p(&[5]).hooks();
        assert_eq!(h, vec![5, 4, 3, 2, 1]);
        assert_eq!(p(&[1]).hooks(), vec![1]);
    }

    #[test]
    fn conjugate_and_l() {
        assert_eq!(p(&[3, 2]).conjugate(), p(&[2, 2, 1]));
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[3, 2, 1]).l_stat(), 4);
        assert_eq!(p(&[4]).l_stat(), 0);
        assert_eq!(p(&[2, 1]).l_stat(), 1);
    }

    #[test]
    fn syt_counts() {
        assert_eq!(p(&[3, 2]).syt_count(), Ok(5));
        assert_eq!(p(&[1, 1, 1]).syt_count(), Ok(1));
        assert_eq!(p(&[2, 1]).syt_count(), Ok(2));
        assert_eq!(p(&[]).syt_count(), Ok(1));
        // 10-by-10 square: 100!/∏h is far beyond u64.
        assert_eq!(p(&[10; 10]).syt_count(), Err(Error::Overflow("syt_count")));
    }

    #[test]
    fn enumerate_small() {
        let all: Vec<_> = p(&[2, 1]).standard_tableaux().collect();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(all[1].rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(p(&[4]).standard_tableaux().count(), 1);
        assert_eq!(p(&[3, 2]).standard_tableaux().count(), 5);
        assert_eq!(p(&[]).standard_tableaux().count(), 1);
    }

    #[test]
    fn descent_statistics() {
        let t = StandardTableau::new(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(t.descents(), vec![2]);
        assert_eq!((t.maj(), t.comaj()), (2, 1));
        let t = StandardTableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(t.descents(), vec![1]);
        assert_eq!((t.maj(), t.comaj()), (1, 2));
        let t = StandardTableau::new(vec![vec![1, 2, 3]]).unwrap();
        assert!(t.descents().is_empty());
        assert_eq!(t.maj(), 0);
    }

    #[test]
    fn tableau_validation() {
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![4]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1]]).is_err());
    }

    #[test]
    fn transpose_is_involution() {
        for t in p(&[3, 2, 1]).standard_tableaux() {
            let tt = t.transpose();
            assert_eq!(tt.shape(), &p(&[3, 2, 1]).conjugate());
            assert!(StandardTableau::new(tt.rows().to_vec()).is_ok());
            assert_eq!(tt.transpose(), t);
        }
    }

    #[test]
    fn partitions_listing() {
        let all = partitions_of(3);
        assert_eq!(all, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
