//! The degree-`n` component `R_n` of formal power series in `x_0, x_1, …`
//! with the ∗-product, plus one-variable integer polynomials.
//!
//! A monomial `x_{i_1} ⋯ x_{i_n}` is stored as its sorted index tuple
//! `i_1 ≤ … ≤ i_n`. That tuple is also the exponent vector of the image
//! `y_1^{i_1} ⋯ y_n^{i_n}` in `ℤ[[y_1, …, y_n]]`, which is why ∗ is plain
//! componentwise addition and why `R_n` has no zero divisors.

mod generating;
mod verify;

pub use generating::{bar_s_row, bar_schur, principal_specialization, schur};
pub use verify::{
    bar_schur_asymmetry, family_membership_check, find_asymmetry, schur_symmetry_check,
    verify_identity_01, verify_identity_04, verify_maj_comaj, Candidate, Discrepancy, FamilyReport,
    SymmetryWitness, Verdict,
};

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::shapes::Partition;

/// `x_{i_1, …, i_n}` in canonical (sorted) form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    indices: Vec<u32>,
}

impl Monomial {
    /// Sorts `indices` into canonical form.
    pub fn new(mut indices: Vec<u32>) -> Self {
        indices.sort_unstable();
        Monomial { indices }
    }

    /// `x_0^n`, the unit of ∗.
    pub fn unit(n: usize) -> Self {
        Monomial {
            indices: vec![0; n],
        }
    }

    /// The monomial of a partition with at most `n` parts: parts padded with
    /// zeros to length `n`, listed in ascending order.
    pub fn from_partition(partition: &Partition, n: usize) -> Result<Self> {
        if partition.len() > n {
            return Err(Error::TooManyParts {
                parts: partition.len(),
                max: n,
            });
        }
        let mut indices = vec![0; n];
        for (slot, &part) in indices.iter_mut().rev().zip(partition.parts()) {
            *slot = u32::try_from(part).map_err(|_| Error::Overflow("monomial index"))?;
        }
        Ok(Monomial { indices })
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn volume(&self) -> u64 {
        self.indices.iter().map(|&i| u64::from(i)).sum()
    }

    /// `x_{i} ∗ x_{j} = x_{i + j}`, componentwise on sorted tuples.
    pub fn star(&self, other: &Monomial) -> Result<Monomial> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let indices = self
            .indices
            .iter()
            .zip(&other.indices)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow("star")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { indices })
    }

    /// Image under the variable transposition `x_t ↔ x_{t+1}`.
    pub fn swap_variables(&self, t: u32) -> Monomial {
        let indices = self
            .indices
            .iter()
            .map(|&i| match i {
                _ if i == t => t + 1,
                _ if i == t + 1 => t,
                _ => i,
            })
            .collect();
        Monomial::new(indices)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut rest = &self.indices[..];
        while let Some(&i) = rest.first() {
            let run = rest.iter().take_while(|&&j| j == i).count();
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            rest = &rest[run..];
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// An element of `R_n`, optionally truncated to volumes `≤ V`.
///
/// Zero coefficients are never stored; iteration is lexicographic in the
/// index tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    degree: usize,
    truncation: Option<u64>,
    terms: BTreeMap<Monomial, i64>,
}

impl Series {
    pub fn zero(degree: usize, truncation: Option<u64>) -> Self {
        Series {
            degree,
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(degree: usize) -> Self {
        let mut s = Series::zero(degree, None);
        s.terms.insert(Monomial::unit(degree), 1);
        s
    }

    /// `n`: every monomial has exactly this many factors.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn truncation(&self) -> Option<u64> {
        self.truncation
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, i64> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> i64 {
        self.terms.get(monomial).copied().unwrap_or(0)
    }

    /// Adds `coeff · monomial`. Terms above the truncation are discarded.
    pub fn add_term(&mut self, monomial: Monomial, coeff: i64) -> Result<()> {
        if monomial.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, monomial.degree()));
        }
        if coeff == 0 || self.truncation.is_some_and(|v| monomial.volume() > v) {
            return Ok(());
        }
        match self.terms.entry(monomial) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            btree_map::Entry::Occupied(mut slot) => {
                let sum = slot
                    .get()
                    .checked_add(coeff)
                    .ok_or(Error::Overflow("series coefficient"))?;
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// Adds every term of `other` into `self`.
    pub fn add_series(&mut self, other: &Series) -> Result<()> {
        for (m, &c) in other.terms() {
            self.add_term(m.clone(), c)?;
        }
        Ok(())
    }

    /// Bilinear extension of [`Monomial::star`], keeping volumes `≤ bound`.
    ///
    /// The product is only exact up to the smallest truncation among the
    /// factors and `bound`; that becomes the truncation of the result.
    pub fn star(&self, other: &Series, bound: Option<u64>) -> Result<Series> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let truncation = [bound, self.truncation, other.truncation]
            .into_iter()
            .flatten()
            .min();
        let mut out = Series::zero(self.degree, truncation);
        for (a, &ca) in self.terms() {
            let va = a.volume();
            if truncation.is_some_and(|v| va > v) {
                continue;
            }
            for (b, &cb) in other.terms() {
                if truncation.is_some_and(|v| va + b.volume() > v) {
                    continue;
                }
                let c = ca
                    .checked_mul(cb)
                    .ok_or(Error::Overflow("series product"))?;
                out.add_term(a.star(b)?, c)?;
            }
        }
        Ok(out)
    }

    /// Drops every term of volume above `bound`.
    pub fn truncate(&self, bound: u64) -> Series {
        let terms = self.terms.iter().filter(|(m, _)| m.volume() <= bound);
        Series {
            degree: self.degree,
            truncation: Some(self.truncation.map_or(bound, |v| v.min(bound))),
            terms: terms.map(|(m, &c)| (m.clone(), c)).collect(),
        }
    }

    /// Image under `x_t ↔ x_{t+1}`.
    pub fn swap_variables(&self, t: u32) -> Result<Series> {
        let mut out = Series::zero(self.degree, None);
        for (m, &c) in self.terms() {
            out.add_term(m.swap_variables(t), c)?;
        }
        out.truncation = self.truncation;
        Ok(out)
    }

    /// The lexicographically first monomial whose coefficients differ,
    /// with both coefficients.
    pub fn first_difference(&self, other: &Series) -> Option<(Monomial, i64, i64)> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort_unstable();
        keys.into_iter().find_map(|m| {
            let (a, b) = (self.coefficient(m), other.coefficient(m));
            (a != b).then(|| (m.clone(), a, b))
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            f.write_str("0")?;
        }
        for (k, (m, &c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let abs = c.unsigned_abs();
            if abs != 1 {
                write!(f, "{abs}*")?;
            }
            write!(f, "{m}")?;
        }
        if let Some(v) = self.truncation {
            write!(f, " + O(vol > {v})")?;
        }
        Ok(())
    }
}

/// Polynomial in one variable with `i64` coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<i64>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![1] }
    }

    /// `x^k`.
    pub fn x_pow(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        UniPoly { coeffs }
    }

    /// `1 − x^k` for `k ≥ 1`.
    pub fn one_minus_x_pow(k: usize) -> Self {
        assert!(k >= 1, "1 - x^0 is zero");
        let mut coeffs = vec![0; k + 1];
        coeffs[0] = 1;
        coeffs[k] = -1;
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Adds `c · x^k`.
    pub fn add_term(&mut self, k: usize, c: i64) -> Result<()> {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] = self.coeffs[k]
            .checked_add(c)
            .ok_or(Error::Overflow("polynomial"))?;
        *self = UniPoly::new(core::mem::take(&mut self.coeffs));
        Ok(())
    }

    pub fn checked_mul(&self, other: &UniPoly) -> Result<UniPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(UniPoly::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let prod = a
                    .checked_mul(b)
                    .ok_or(Error::Overflow("polynomial product"))?;
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(prod)
                    .ok_or(Error::Overflow("polynomial product"))?;
            }
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Keeps degrees `≤ max_degree`.
    pub fn truncate(&self, max_degree: usize) -> UniPoly {
        UniPoly::new(self.coeffs.iter().take(max_degree + 1).copied().collect())
    }

    /// Lowest degree where the two polynomials differ, with both coefficients.
    pub fn first_difference(&self, other: &UniPoly) -> Option<(usize, i64, i64)> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find_map(|k| {
            let (a, b) = (self.coeff(k), other.coeff(k));
            (a != b).then_some((k, a, b))
        })
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.unsigned_abs();
            match (k, abs) {
                (0, _) => write!(f, "{abs}")?,
                (_, 1) => {}
                _ => write!(f, "{abs}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
