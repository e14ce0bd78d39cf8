use crate::error::Result;
use crate::posets::Poset;
use crate::ring::{Monomial, Series, UniPoly};
use crate::rpp::{enumerate_column_strict, enumerate_rpp};
use crate::shapes::partitions_of;

/// `s̄` truncated to volume `≤ max_volume`: one monomial per reverse plane
/// partition, the sorted tuple of its entries.
pub fn bar_schur(poset: &Poset, max_volume: u64) -> Result<Series> {
    let mut out = Series::zero(poset.len(), Some(max_volume));
    for rpp in enumerate_rpp(poset, max_volume) {
        out.add_term(Monomial::new(rpp.values().to_vec()), 1)?;
    }
    Ok(out)
}

/// The Schur polynomial `s_λ(x_0, …, x_m)` of a Young poset, summed over
/// column-strict fillings with entries `≤ max_entry`.
pub fn schur(poset: &Poset, max_entry: u32) -> Result<Series> {
    let mut out = Series::zero(poset.len(), None);
    for rpp in enumerate_column_strict(poset, max_entry)? {
        out.add_term(Monomial::new(rpp.values().to_vec()), 1)?;
    }
    Ok(out)
}

/// `s̄_(n)` truncated to volume `≤ max_volume`: every monomial of degree `n`
/// once. Built from partitions with at most `n` parts.
pub fn bar_s_row(n: usize, max_volume: u64) -> Series {
    let mut out = Series::zero(n, Some(max_volume));
    for volume in 0..=max_volume as usize {
        for mu in partitions_of(volume) {
            if let Ok(m) = Monomial::from_partition(&mu, n) {
                out.add_term(m, 1).expect("coefficient 1 per monomial");
            }
        }
    }
    out
}

/// `x_i ↦ x^i`: each monomial lands on `x^{volume}`.
pub fn principal_specialization(series: &Series) -> Result<UniPoly> {
    let mut out = UniPoly::zero();
    for (m, &c) in series.terms() {
        out.add_term(m.volume() as usize, c)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;
    use alloc::vec;
    use alloc::vec::Vec;

    fn young(parts: &[usize]) -> Poset {
        Poset::young(&Partition::new(parts.to_vec()).unwrap())
    }

    fn terms(s: &Series) -> Vec<(Vec<u32>, i64)> {
        s.terms().map(|(m, &c)| (m.indices().to_vec(), c)).collect()
    }

    #[test]
    fn bar_schur_examples() {
        assert_eq!(
            terms(&bar_schur(&young(&[1]), 2).unwrap()),
            vec![(vec![0], 1), (vec![1], 1), (vec![2], 1)]
        );
        assert_eq!(
            terms(&bar_schur(&young(&[2]), 2).unwrap()),
            vec![
                (vec![0, 0], 1),
                (vec![0, 1], 1),
                (vec![0, 2], 1),
                (vec![1, 1], 1)
            ]
        );
        assert_eq!(
            terms(&bar_schur(&young(&[2, 1]), 2).unwrap()),
            vec![
                (vec![0, 0, 0], 1),
                (vec![0, 0, 1], 2),
                (vec![0, 0, 2], 2),
                (vec![0, 1, 1], 1)
            ]
        );
    }

    #[test]
    fn schur_examples() {
        assert_eq!(
            terms(&schur(&young(&[1]), 2).unwrap()),
            vec![(vec![0], 1), (vec![1], 1), (vec![2], 1)]
        );
        assert_eq!(
            terms(&schur(&young(&[1, 1]), 1).unwrap()),
            vec![(vec![0, 1], 1)]
        );
        assert_eq!(
            terms(&schur(&young(&[2]), 1).unwrap()),
            vec![(vec![0, 0], 1), (vec![0, 1], 1), (vec![1, 1], 1)]
        );
    }

    #[test]
    fn bar_s_row_examples() {
        assert_eq!(
            terms(&bar_s_row(1, 2)),
            vec![(vec![0], 1), (vec![1], 1), (vec![2], 1)]
        );
        assert_eq!(
            terms(&bar_s_row(3, 2)),
            vec![
                (vec![0, 0, 0], 1),
                (vec![0, 0, 1], 1),
                (vec![0, 0, 2], 1),
                (vec![0, 1, 1], 1)
            ]
        );
        assert_eq!(bar_s_row(5, 0), Series::unit(5).truncate(0));
    }

    #[test]
    fn specialization() {
        assert_eq!(
            principal_specialization(&Series::unit(4)).unwrap(),
            UniPoly::one()
        );
        let s = bar_schur(&young(&[2]), 2).unwrap();
        assert_eq!(principal_specialization(&s).unwrap().coeffs(), &[1, 1, 2]);
    }
}
