//! Multi-threaded drivers for the exhaustive verifiers.
//!
//! Work is split over the choice of `P`; results are reduced by index so the
//! outcome is identical to the sequential verifiers in `pedestal-core`.

use pedestal_core::ring::{verify_identity_01, Discrepancy, Verdict};
use pedestal_core::{pedestal, pedestal_polynomial, IndependenceReport, LinearExtension, Poset};
use rayon::prelude::*;

/// Environment variable capping verifier threads.
pub const THREADS_ENV: &str = "PEDESTAL_THREADS";

/// A pool sized by `PEDESTAL_THREADS` (unset or unparsable means rayon's
/// default).
pub fn thread_pool() -> rayon::ThreadPool {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

/// Parallel counterpart of [`pedestal_core::verify_independence`].
pub fn verify_independence(pool: &rayon::ThreadPool, poset: &Poset) -> IndependenceReport {
    let extensions: Vec<LinearExtension<'_>> = poset.linear_extensions().collect();
    let pedestal_set = |p: &LinearExtension<'_>| {
        let mut set: Vec<Vec<u32>> = extensions
            .iter()
            .map(|q| pedestal(p, q).expect("same poset").rpp().values().to_vec())
            .collect();
        set.sort_unstable();
        set
    };
    let reference = &extensions[0];
    let polynomial = pedestal_polynomial(reference);
    let reference_set = pedestal_set(reference);

    let outcomes: Vec<(Option<Discrepancy>, bool)> = pool.install(|| {
        extensions[1..]
            .par_iter()
            .map(|p| {
                let mismatch = polynomial
                    .first_difference(&pedestal_polynomial(p))
                    .map(|(monomial, lhs, rhs)| Discrepancy::Term { monomial, lhs, rhs });
                (mismatch, pedestal_set(p) != reference_set)
            })
            .collect()
    });

    let counterexample = outcomes
        .iter()
        .enumerate()
        .find_map(|(i, (d, _))| d.clone().map(|d| (extensions[i + 1].order().to_vec(), d)));
    let pedestal_set_witness = outcomes.iter().position(|(_, differs)| *differs).map(|i| {
        (
            reference.order().to_vec(),
            extensions[i + 1].order().to_vec(),
        )
    });
    IndependenceReport {
        extensions: extensions.len(),
        polynomial,
        counterexample,
        pedestal_set_witness,
    }
}

/// Runs the factorization check for every `P`; returns the first failing
/// `P` (as an element order) with its verdict, or `None`.
pub fn verify_identity_01_all(
    pool: &rayon::ThreadPool,
    poset: &Poset,
    max_volume: u64,
) -> pedestal_core::Result<Option<(Vec<usize>, Verdict)>> {
    let extensions: Vec<LinearExtension<'_>> = poset.linear_extensions().collect();
    let verdicts: Vec<pedestal_core::Result<Verdict>> = pool.install(|| {
        extensions
            .par_iter()
            .map(|p| verify_identity_01(p, max_volume))
            .collect()
    });
    for (p, verdict) in extensions.iter().zip(verdicts) {
        let verdict = verdict?;
        if !verdict.holds() {
            return Ok(Some((p.order().to_vec(), verdict)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pedestal_core::{partitions_of, Partition};

    #[test]
    fn matches_sequential() {
        let pool = thread_pool();
        for lambda in partitions_of(5) {
            let poset = Poset::young(&lambda);
            assert_eq!(
                verify_independence(&pool, &poset),
                pedestal_core::verify_independence(&poset)
            );
        }
        for poset in pedestal_core::connected_posets(4) {
            assert_eq!(
                verify_independence(&pool, &poset),
                pedestal_core::verify_independence(&poset)
            );
        }
    }

    #[test]
    fn identity_01_every_p() {
        let pool = thread_pool();
        let poset = Poset::young(&Partition::new(vec![2, 2]).unwrap());
        assert_eq!(verify_identity_01_all(&pool, &poset, 5).unwrap(), None);
    }
}
