use pedestal_core::ring::principal_specialization;
use pedestal_core::{
    b_st, b_st_inverse, enumerate_rpp, partitions_of, Monomial, Partition, Poset,
    ReversePlanePartition, Series,
};
use proptest::prelude::*;

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..6, n).prop_map(Monomial::new)
}

fn series(n: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec((monomial(n), -3i64..4), 0..6).prop_map(move |terms| {
        let mut s = Series::zero(n, None);
        for (m, c) in terms {
            s.add_term(m, c).unwrap();
        }
        s
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..6, 0..6).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn star_is_a_commutative_monoid(a in monomial(4), b in monomial(4), c in monomial(4)) {
        prop_assert_eq!(a.star(&b).unwrap(), b.star(&a).unwrap());
        prop_assert_eq!(
            a.star(&b).unwrap().star(&c).unwrap(),
            a.star(&b.star(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.star(&Monomial::unit(4)).unwrap(), a.clone());
        prop_assert_eq!(a.star(&b).unwrap().volume(), a.volume() + b.volume());
    }

    #[test]
    fn star_cancels(m in monomial(3), a in monomial(3), b in monomial(3)) {
        let (ma, mb) = (m.star(&a).unwrap(), m.star(&b).unwrap());
        prop_assert_eq!(ma == mb, a == b);
    }

    #[test]
    fn series_star_is_commutative_and_associative(
        u in series(3), v in series(3), w in series(3), bound in 0u64..12
    ) {
        let b = Some(bound);
        prop_assert_eq!(u.star(&v, b).unwrap(), v.star(&u, b).unwrap());
        prop_assert_eq!(
            u.star(&v, b).unwrap().star(&w, b).unwrap(),
            u.star(&v.star(&w, b).unwrap(), b).unwrap()
        );
    }

    #[test]
    fn specialization_is_multiplicative(u in series(3), v in series(3), bound in 0u64..15) {
        let lhs = principal_specialization(&u.star(&v, Some(bound)).unwrap()).unwrap();
        let rhs = principal_specialization(&u).unwrap()
            .checked_mul(&principal_specialization(&v).unwrap())
            .unwrap()
            .truncate(bound as usize);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugation(lambda in partition()) {
        let conj = lambda.conjugate();
        prop_assert_eq!(conj.conjugate(), lambda.clone());
        let mut h = lambda.hooks();
        let mut hc = conj.hooks();
        h.sort_unstable();
        hc.sort_unstable();
        prop_assert_eq!(h.len(), lambda.size());
        prop_assert_eq!(h, hc);
    }

    #[test]
    fn pi_sort_is_a_partition_of_the_volume(
        idx in 0usize..7, extra in prop::collection::vec(0u32..4, 6)
    ) {
        let shapes = partitions_of(4);
        let lambda = &shapes[idx % shapes.len()];
        let poset = Poset::young(lambda);
        // Sorting the extras along the canonical order makes them monotone.
        let mut sorted = extra[..poset.len()].to_vec();
        sorted.sort_unstable();
        let mut values = vec![0; poset.len()];
        for (&e, &v) in poset.canonical_extension().order().iter().zip(&sorted) {
            values[e] = v;
        }
        let rpp = ReversePlanePartition::new(&poset, values).unwrap();
        let mu = rpp.pi_sort();
        prop_assert_eq!(mu.size() as u64, rpp.volume());
        prop_assert!(mu.len() <= poset.len());
    }
}

#[test]
fn add_undoes_sub() {
    for lambda in partitions_of(4) {
        let poset = Poset::young(&lambda);
        let all: Vec<_> = enumerate_rpp(&poset, 4).collect();
        for a in &all {
            for b in &all {
                if let Ok(diff) = a.checked_sub(b) {
                    assert_eq!(&diff.checked_add(b).unwrap(), a);
                }
            }
        }
    }
}

/// Volume bookkeeping and monomial factorization of b_st on every small
/// reverse plane partition, for every choice of P.
#[test]
fn b_st_factorizes_monomials() {
    let mut posets: Vec<Poset> = (1..=4)
        .flat_map(partitions_of)
        .map(|l| Poset::young(&l))
        .collect();
    posets.extend((2..=4).flat_map(pedestal_core::connected_posets));
    for poset in &posets {
        let n = poset.len();
        for p in poset.linear_extensions() {
            let mut seen = std::collections::BTreeSet::new();
            for rpp in enumerate_rpp(poset, 6) {
                let (q, mu) = b_st(&p, &rpp).unwrap();
                assert_eq!(q.volume() + mu.size() as u64, rpp.volume());
                assert!(mu.len() <= n);
                let lhs = Monomial::new(rpp.values().to_vec());
                let rhs = Monomial::new(q.rpp().values().to_vec())
                    .star(&Monomial::from_partition(&mu, n).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
                assert!(
                    seen.insert((q.q().order().to_vec(), mu.clone())),
                    "b_st not injective"
                );
                assert_eq!(b_st_inverse(&p, q.q(), &mu).unwrap(), rpp);
            }
        }
    }
}
