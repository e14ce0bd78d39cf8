//! Pedestals of pairs of linear extensions, the pedestal polynomial, and the
//! bijection between reverse plane partitions and (pedestal, partition)
//! pairs.
//!
//! Everything here takes linear extensions of an arbitrary finite poset; for
//! a Young diagram these are its standard Young tableaux.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::posets::{LinearExtension, Poset};
use crate::ring::{Discrepancy, Monomial, Series, UniPoly};
use crate::rpp::ReversePlanePartition;
use crate::shapes::Partition;

/// The `P`-pedestal of `Q`, tagged with the pair that generated it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pedestal<'p> {
    rpp: ReversePlanePartition<'p>,
    p: LinearExtension<'p>,
    q: LinearExtension<'p>,
}

impl<'p> Pedestal<'p> {
    pub fn rpp(&self) -> &ReversePlanePartition<'p> {
        &self.rpp
    }

    pub fn p(&self) -> &LinearExtension<'p> {
        &self.p
    }

    pub fn q(&self) -> &LinearExtension<'p> {
        &self.q
    }

    pub fn volume(&self) -> u64 {
        self.rpp.volume()
    }

    pub fn into_rpp(self) -> ReversePlanePartition<'p> {
        self.rpp
    }
}

fn check_pair(p: &LinearExtension<'_>, q: &LinearExtension<'_>) -> Result<()> {
    if p.same_poset(q) {
        Ok(())
    } else {
        Err(Error::PosetMismatch)
    }
}

/// Writes `q_{P,Q}` into `out` (indexed by element). `p_rank[e]` is the
/// rank of `e` under `P`, `q_order[k]` the element of rank `k` under `Q`.
#[inline]
fn pedestal_values(p_rank: &[usize], q_order: &[usize], out: &mut [u32]) {
    let mut count = 0;
    for (k, &e) in q_order.iter().enumerate() {
        out[e] = count;
        if let Some(&next) = q_order.get(k + 1) {
            if p_rank[next] < p_rank[e] {
                count += 1;
            }
        }
    }
}

/// Elements `α_k` (listed in `Q`-order) with `α_{k+1} ≺_P α_k`.
pub fn disagreement_nodes(p: &LinearExtension<'_>, q: &LinearExtension<'_>) -> Result<Vec<usize>> {
    check_pair(p, q)?;
    Ok(q.order()
        .windows(2)
        .filter(|w| p.precedes(w[1], w[0]))
        .map(|w| w[0])
        .collect())
}

/// `q_{P,Q}(α_k) = #{l < k : α_l is a (P,Q)-disagreement node}`.
pub fn pedestal<'p>(p: &LinearExtension<'p>, q: &LinearExtension<'p>) -> Result<Pedestal<'p>> {
    check_pair(p, q)?;
    let mut values = vec![0; q.order().len()];
    pedestal_values(p.ranks(), q.order(), &mut values);
    Ok(Pedestal {
        rpp: ReversePlanePartition::new_unchecked(p.poset(), values),
        p: p.clone(),
        q: q.clone(),
    })
}

/// `𝔥_P = Σ_Q ∏_α x_{q_{P,Q}(α)}`, summed over every linear extension `Q`.
///
/// Extensions are streamed; memory stays at one pedestal plus the result.
pub fn pedestal_polynomial(p: &LinearExtension<'_>) -> Series {
    let poset = p.poset();
    let mut out = Series::zero(poset.len(), None);
    let mut values = vec![0; poset.len()];
    for q in poset.linear_extensions() {
        pedestal_values(p.ranks(), q.order(), &mut values);
        out.add_term(Monomial::new(values.clone()), 1)
            .expect("extension count fits in i64 at enumerable sizes");
    }
    out
}

/// `π(x) = Σ_Q x^{|q_{P,Q}|}` for the canonical `P`.
pub fn pi_poly(poset: &Poset) -> UniPoly {
    pi_poly_for(&poset.canonical_extension())
}

/// `π(x)` computed against a chosen `P`.
pub fn pi_poly_for(p: &LinearExtension<'_>) -> UniPoly {
    let poset = p.poset();
    let mut counts: Vec<i64> = Vec::new();
    let mut values = vec![0; poset.len()];
    for q in poset.linear_extensions() {
        pedestal_values(p.ranks(), q.order(), &mut values);
        let volume = values.iter().map(|&v| v as usize).sum::<usize>();
        if counts.len() <= volume {
            counts.resize(volume + 1, 0);
        }
        counts[volume] += 1;
    }
    UniPoly::new(counts)
}

/// Outcome of checking that `𝔥_P` is the same for every `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceReport {
    pub extensions: usize,
    /// `𝔥_P` for the canonical `P`.
    pub polynomial: Series,
    /// An extension whose polynomial differs from the canonical one.
    pub counterexample: Option<(Vec<usize>, Discrepancy)>,
    /// Two extensions (as element orders) whose pedestal sets differ, if any.
    pub pedestal_set_witness: Option<(Vec<usize>, Vec<usize>)>,
}

impl IndependenceReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Computes `𝔥_P` for every linear extension `P` and compares them.
///
/// Also records whether the set of `P`-pedestals itself changes with `P`.
pub fn verify_independence(poset: &Poset) -> IndependenceReport {
    let extensions: Vec<LinearExtension<'_>> = poset.linear_extensions().collect();
    let pedestal_set = |p: &LinearExtension<'_>| {
        let mut set: Vec<Vec<u32>> = extensions
            .iter()
            .map(|q| {
                let mut values = vec![0; poset.len()];
                pedestal_values(p.ranks(), q.order(), &mut values);
                values
            })
            .collect();
        set.sort_unstable();
        set
    };

    let reference = &extensions[0];
    let polynomial = pedestal_polynomial(reference);
    let reference_set = pedestal_set(reference);
    let mut counterexample = None;
    let mut pedestal_set_witness = None;
    for p in &extensions[1..] {
        if counterexample.is_none() {
            let other = pedestal_polynomial(p);
            if let Some((monomial, lhs, rhs)) = polynomial.first_difference(&other) {
                counterexample =
                    Some((p.order().to_vec(), Discrepancy::Term { monomial, lhs, rhs }));
            }
        }
        if pedestal_set_witness.is_none() && pedestal_set(p) != reference_set {
            pedestal_set_witness = Some((reference.order().to_vec(), p.order().to_vec()));
        }
        if counterexample.is_some() && pedestal_set_witness.is_some() {
            break;
        }
    }
    IndependenceReport {
        extensions: extensions.len(),
        polynomial,
        counterexample,
        pedestal_set_witness,
    }
}

/// `Q(𝔔)`: order elements by value, breaking ties by `P`.
pub fn tableau_from_rpp<'p>(
    p: &LinearExtension<'p>,
    rpp: &ReversePlanePartition<'p>,
) -> Result<LinearExtension<'p>> {
    if !core::ptr::eq(p.poset(), rpp.poset()) && p.poset() != rpp.poset() {
        return Err(Error::PosetMismatch);
    }
    let mut order: Vec<usize> = (0..rpp.values().len()).collect();
    order.sort_unstable_by_key(|&e| (rpp.get(e), p.rank(e)));
    LinearExtension::new(p.poset(), order)
}

/// `b_St(𝔔) = (q_{P,Q(𝔔)}, Π(𝔔 − q_{P,Q(𝔔)}))`.
pub fn b_st<'p>(
    p: &LinearExtension<'p>,
    rpp: &ReversePlanePartition<'p>,
) -> Result<(Pedestal<'p>, Partition)> {
    let q = tableau_from_rpp(p, rpp)?;
    let ped = pedestal(p, &q)?;
    let rest = rpp.checked_sub(ped.rpp())?;
    Ok((ped, rest.pi_sort()))
}

/// `b_St⁻¹(q_{P,Q}, μ) = q_{P,Q} + 𝔔_{Q,μ}`.
///
/// `𝔔_{Q,μ}` puts on the element of `Q`-rank `k` the `k`-th smallest part
/// of `μ` after padding with zeros to `n` parts. Ascending order is what
/// makes the sum monotone along `Q`.
pub fn b_st_inverse<'p>(
    p: &LinearExtension<'p>,
    q: &LinearExtension<'p>,
    partition: &Partition,
) -> Result<ReversePlanePartition<'p>> {
    let n = q.order().len();
    let ascending = Monomial::from_partition(partition, n)?;
    let ped = pedestal(p, q)?;
    let mut values = vec![0; n];
    for (&e, &part) in q.order().iter().zip(ascending.indices()) {
        values[e] = part;
    }
    let lifted = ReversePlanePartition::new(p.poset(), values)?;
    ped.rpp().checked_add(&lifted)
}
