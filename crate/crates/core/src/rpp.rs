//! Reverse plane partitions: order-preserving maps from a poset to the
//! non-negative integers.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::posets::Poset;
use crate::shapes::Partition;

/// Values are stored densely in element order of the poset.
#[derive(Debug, Clone)]
pub struct ReversePlanePartition<'p> {
    poset: &'p Poset,
    values: Vec<u32>,
}

impl<'p> ReversePlanePartition<'p> {
    pub fn new(poset: &'p Poset, values: Vec<u32>) -> Result<Self> {
        if values.len() != poset.len() {
            return Err(Error::MissingValue {
                expected: poset.len(),
                got: values.len(),
            });
        }
        if let Some(&(lower, upper)) = poset.covers().iter().find(|&&(a, b)| values[a] > values[b])
        {
            return Err(Error::NotMonotone { lower, upper });
        }
        Ok(ReversePlanePartition { poset, values })
    }

    pub(crate) fn new_unchecked(poset: &'p Poset, values: Vec<u32>) -> Self {
        debug_assert!(ReversePlanePartition::new(poset, values.clone()).is_ok());
        ReversePlanePartition { poset, values }
    }

    pub fn zero(poset: &'p Poset) -> Self {
        ReversePlanePartition {
            poset,
            values: vec![0; poset.len()],
        }
    }

    /// Row-array form for Young posets, e.g. `[[0,2],[1]]`.
    pub fn from_rows(poset: &'p Poset, rows: &[Vec<u32>]) -> Result<Self> {
        let shape = poset.shape().ok_or(Error::ShapeMismatch)?;
        let lengths_match = rows.len() == shape.len()
            && rows
                .iter()
                .zip(shape.parts())
                .all(|(row, &len)| row.len() == len);
        if !lengths_match {
            return Err(Error::ShapeMismatch);
        }
        ReversePlanePartition::new(poset, rows.iter().flatten().copied().collect())
    }

    /// Values keyed by element label; every element must appear exactly once.
    pub fn from_labeled<'a>(
        poset: &'p Poset,
        entries: impl IntoIterator<Item = (&'a str, u32)>,
    ) -> Result<Self> {
        let mut values = vec![None; poset.len()];
        for (label, value) in entries {
            let e = poset
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            values[e] = Some(value);
        }
        let got = values.iter().filter(|v| v.is_some()).count();
        let values: Option<Vec<u32>> = values.into_iter().collect();
        let values = values.ok_or(Error::MissingValue {
            expected: poset.len(),
            got,
        })?;
        ReversePlanePartition::new(poset, values)
    }

    pub fn poset(&self) -> &'p Poset {
        self.poset
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, element: usize) -> u32 {
        self.values[element]
    }

    /// Row arrays, when the underlying poset is a Young diagram.
    pub fn to_rows(&self) -> Option<Vec<Vec<u32>>> {
        let shape = self.poset.shape()?;
        let mut rows = Vec::with_capacity(shape.len());
        let mut offset = 0;
        for &len in shape.parts() {
            rows.push(self.values[offset..offset + len].to_vec());
            offset += len;
        }
        Some(rows)
    }

    /// `|𝔔|`, the sum of all entries.
    pub fn volume(&self) -> u64 {
        self.values.iter().map(|&v| u64::from(v)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Entries in non-decreasing order; the index tuple of the monomial
    /// `∏ x_{𝔔(α)}`.
    pub fn sorted_values(&self) -> Vec<u32> {
        let mut sorted = self.values.clone();
        sorted.sort_unstable();
        sorted
    }

    /// `Π(𝔔)`: all entries listed in non-increasing order, zeros dropped.
    pub fn pi_sort(&self) -> Partition {
        let mut parts: Vec<usize> = self.values.iter().map(|&v| v as usize).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted parts are non-increasing")
    }

    /// Pointwise difference `self − other`.
    pub fn checked_sub(
        &self,
        other: &ReversePlanePartition<'_>,
    ) -> Result<ReversePlanePartition<'p>> {
        self.check_same_poset(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .enumerate()
            .map(|(e, (&a, &b))| a.checked_sub(b).ok_or(Error::NegativeEntry(e)))
            .collect::<Result<Vec<_>>>()?;
        ReversePlanePartition::new(self.poset, values)
    }

    /// Pointwise sum `self + other`.
    pub fn checked_add(
        &self,
        other: &ReversePlanePartition<'_>,
    ) -> Result<ReversePlanePartition<'p>> {
        self.check_same_poset(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow("rpp_add")))
            .collect::<Result<Vec<_>>>()?;
        ReversePlanePartition::new(self.poset, values)
    }

    fn check_same_poset(&self, other: &ReversePlanePartition<'_>) -> Result<()> {
        if core::ptr::eq(self.poset, other.poset) || self.poset == other.poset {
            Ok(())
        } else {
            Err(Error::PosetMismatch)
        }
    }
}

impl PartialEq for ReversePlanePartition<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && self.check_same_poset(other).is_ok()
    }
}

impl Eq for ReversePlanePartition<'_> {}

/// Every reverse plane partition on `poset` of volume at most `max_volume`.
///
/// Elements are assigned in the canonical linear extension order, each at
/// least the largest value among its lower covers, so the stream is
/// lexicographic in that order.
pub fn enumerate_rpp(poset: &Poset, max_volume: u64) -> RppIter<'_> {
    let slots = poset.canonical_extension().order().to_vec();
    let n = poset.len();
    let mut weight = vec![1u64; n];
    for (e, w) in weight.iter_mut().enumerate() {
        *w += (0..n).filter(|&b| poset.less(e, b)).count() as u64;
    }
    let constraints = slots
        .iter()
        .map(|&e| poset.lower_covers(e).iter().map(|&a| (a, false)).collect())
        .collect();
    RppIter::new(
        poset,
        slots,
        constraints,
        Bound::Volume {
            max: max_volume,
            weight,
        },
    )
}

/// Column-strict fillings of a Young poset with entries in `0..=max_entry`:
/// weakly increasing along rows, strictly increasing down columns.
pub fn enumerate_column_strict(poset: &Poset, max_entry: u32) -> Result<RppIter<'_>> {
    let shape = poset.shape().ok_or(Error::ShapeMismatch)?;
    let slots: Vec<usize> = (0..poset.len()).collect();
    let constraints = shape
        .nodes()
        .enumerate()
        .map(|(idx, node)| {
            let mut c = Vec::with_capacity(2);
            if node.col > 1 {
                c.push((idx - 1, false));
            }
            if node.row > 1 {
                c.push((idx - shape.row_len(node.row - 1), true));
            }
            c
        })
        .collect();
    Ok(RppIter::new(
        poset,
        slots,
        constraints,
        Bound::MaxEntry(max_entry),
    ))
}

enum Bound {
    /// `weight[e]` is `1 + #{b : e ≺ b}`: assigning `v` to `e` forces at least
    /// `v · weight[e]` more volume.
    Volume {
        max: u64,
        weight: Vec<u64>,
    },
    MaxEntry(u32),
}

/// Depth-first enumerator shared by [`enumerate_rpp`] and
/// [`enumerate_column_strict`].
pub struct RppIter<'p> {
    poset: &'p Poset,
    slots: Vec<usize>,
    /// For each slot: earlier elements `a` with `value(a) ≤ value` (or `<` when strict).
    constraints: Vec<Vec<(usize, bool)>>,
    bound: Bound,
    values: Vec<u32>,
    sums: Vec<u64>,
    depth: usize,
    started: bool,
    done: bool,
}

impl<'p> RppIter<'p> {
    fn new(
        poset: &'p Poset,
        slots: Vec<usize>,
        constraints: Vec<Vec<(usize, bool)>>,
        bound: Bound,
    ) -> Self {
        let n = slots.len();
        RppIter {
            poset,
            slots,
            constraints,
            bound,
            values: vec![0; poset.len()],
            sums: vec![0; n + 1],
            depth: 0,
            started: false,
            done: false,
        }
    }

    fn candidate(&self, slot: usize, start: u32) -> Option<u32> {
        let mut lo = start;
        for &(a, strict) in &self.constraints[slot] {
            lo = lo.max(self.values[a] + u32::from(strict));
        }
        let e = self.slots[slot];
        let ok = match &self.bound {
            Bound::Volume { max, weight } => {
                u64::from(lo)
                    .checked_mul(weight[e])
                    .and_then(|w| w.checked_add(self.sums[slot]))
                    <= Some(*max)
            }
            Bound::MaxEntry(m) => lo <= *m,
        };
        ok.then_some(lo)
    }
}

impl<'p> Iterator for RppIter<'p> {
    type Item = ReversePlanePartition<'p>;

    fn next(&mut self) -> Option<ReversePlanePartition<'p>> {
        if self.done {
            return None;
        }
        let n = self.slots.len();
        let mut start = 0;
        if self.started {
            if n == 0 {
                self.done = true;
                return None;
            }
            self.depth = n - 1;
            start = self.values[self.slots[self.depth]] + 1;
        }
        self.started = true;
        loop {
            if self.depth == n {
                return Some(ReversePlanePartition::new_unchecked(
                    self.poset,
                    self.values.clone(),
                ));
            }
            match self.candidate(self.depth, start) {
                Some(v) => {
                    let e = self.slots[self.depth];
                    self.values[e] = v;
                    self.sums[self.depth + 1] = self.sums[self.depth] + u64::from(v);
                    self.depth += 1;
                    start = 0;
                }
                None => {
                    let e = self.slots[self.depth];
                    self.values[e] = 0;
                    if self.depth == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth -= 1;
                    start = self.values[self.slots[self.depth]] + 1;
                }
            }
        }
    }
}
