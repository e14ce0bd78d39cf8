//! Exact checks of the generating-function identities.
//!
//! Each verifier returns a [`Verdict`] carrying the first discrepancy it
//! met, rather than a bare boolean.

use alloc::vec::Vec;

use crate::error::Result;
use crate::pedestal::{pedestal_polynomial, pi_poly};
use crate::posets::{LinearExtension, Poset};
use crate::ring::{bar_s_row, bar_schur, schur, Monomial, Series, UniPoly};
use crate::shapes::{Partition, StandardTableau};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Discrepancy {
    /// Coefficients of `monomial` on the two sides of a series identity.
    Term {
        monomial: Monomial,
        lhs: i64,
        rhs: i64,
    },
    /// Coefficients of `x^degree` on the two sides of a polynomial identity.
    Coefficient {
        relation: &'static str,
        degree: usize,
        lhs: i64,
        rhs: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Verdict {
    pub discrepancy: Option<Discrepancy>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.discrepancy.is_none()
    }

    fn compare_series(lhs: &Series, rhs: &Series) -> Verdict {
        let discrepancy = lhs
            .first_difference(rhs)
            .map(|(monomial, lhs, rhs)| Discrepancy::Term { monomial, lhs, rhs });
        Verdict { discrepancy }
    }

    fn compare_poly(relation: &'static str, lhs: &UniPoly, rhs: &UniPoly) -> Verdict {
        let discrepancy =
            lhs.first_difference(rhs)
                .map(|(degree, lhs, rhs)| Discrepancy::Coefficient {
                    relation,
                    degree,
                    lhs,
                    rhs,
                });
        Verdict { discrepancy }
    }
}

/// `s̄ = 𝔥_P ∗ s̄_(n)` up to volume `max_volume`.
pub fn verify_identity_01(p: &LinearExtension<'_>, max_volume: u64) -> Result<Verdict> {
    let poset = p.poset();
    let lhs = bar_schur(poset, max_volume)?;
    let rhs = pedestal_polynomial(p).star(&bar_s_row(poset.len(), max_volume), Some(max_volume))?;
    Ok(Verdict::compare_series(&lhs, &rhs))
}

/// `π_λ(x) · ∏_α (1 − x^{h_α}) = ∏_{k=1}^{n} (1 − x^k)`.
pub fn verify_identity_04(shape: &Partition) -> Result<Verdict> {
    let mut lhs = pi_poly(&Poset::young(shape));
    for h in shape.hooks() {
        lhs = lhs.checked_mul(&UniPoly::one_minus_x_pow(h))?;
    }
    let mut rhs = UniPoly::one();
    for k in 1..=shape.size() {
        rhs = rhs.checked_mul(&UniPoly::one_minus_x_pow(k))?;
    }
    Ok(Verdict::compare_poly("hook product", &lhs, &rhs))
}

fn statistic_poly(shape: &Partition, stat: impl Fn(&StandardTableau) -> u64) -> Result<UniPoly> {
    let mut out = UniPoly::zero();
    for t in shape.standard_tableaux() {
        out.add_term(stat(&t) as usize, 1)?;
    }
    Ok(out)
}

/// `Σ_Q x^{maj Q} = x^{l(λ)} π_λ(x) = Σ_Q x^{comaj Q}`.
pub fn verify_maj_comaj(shape: &Partition) -> Result<Verdict> {
    let shifted =
        UniPoly::x_pow(shape.l_stat() as usize).checked_mul(&pi_poly(&Poset::young(shape)))?;
    let maj = statistic_poly(shape, StandardTableau::maj)?;
    let verdict = Verdict::compare_poly("maj", &maj, &shifted);
    if !verdict.holds() {
        return Ok(verdict);
    }
    let comaj = statistic_poly(shape, StandardTableau::comaj)?;
    Ok(Verdict::compare_poly("comaj", &comaj, &shifted))
}

/// A function on standard tableaux tested for membership in the pedestal
/// volume family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub name: &'static str,
    /// Value on each tableau, in canonical tableau order.
    pub values: Vec<i64>,
    /// Index of a `P` with `|q_{P,·}|` equal to this function, if one exists.
    pub matched_by: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub shape: Partition,
    /// All standard tableaux of the shape, canonical order.
    pub tableaux: Vec<StandardTableau>,
    /// `family[p][q] = |q_{P,Q}|` with `P = tableaux[p]`, `Q = tableaux[q]`.
    pub family: Vec<Vec<i64>>,
    pub candidates: Vec<Candidate>,
}

impl FamilyReport {
    /// True when no candidate belongs to the family.
    pub fn none_in_family(&self) -> bool {
        self.candidates.iter().all(|c| c.matched_by.is_none())
    }
}

type Statistic = fn(&StandardTableau) -> i64;

/// Compares `maj − l(λ)`, `comaj − l(λ)` and their transposed partners
/// (`Q ↦ maj(Qᵀ) − l(λᵀ)` and the comaj twin) with every function
/// `Q ↦ |q_{P,Q}|`, `P` ranging over all standard tableaux.
pub fn family_membership_check(shape: &Partition) -> FamilyReport {
    let poset = Poset::young(shape);
    let tableaux: Vec<StandardTableau> = shape.standard_tableaux().collect();
    let extensions: Vec<LinearExtension<'_>> = tableaux
        .iter()
        .map(|t| LinearExtension::from_tableau(&poset, t).expect("tableau matches its own shape"))
        .collect();
    let family: Vec<Vec<i64>> = extensions
        .iter()
        .map(|p| {
            extensions
                .iter()
                .map(|q| {
                    let ped = crate::pedestal::pedestal(p, q).expect("same poset");
                    ped.volume() as i64
                })
                .collect()
        })
        .collect();

    let l = shape.l_stat() as i64;
    let l_t = shape.conjugate().l_stat() as i64;
    let specs: [(&str, Statistic); 4] = [
        ("maj - l", |t| t.maj() as i64),
        ("comaj - l", |t| t.comaj() as i64),
        ("maj(transpose) - l(transpose)", |t| {
            t.transpose().maj() as i64
        }),
        ("comaj(transpose) - l(transpose)", |t| {
            t.transpose().comaj() as i64
        }),
    ];
    let candidates = specs
        .iter()
        .enumerate()
        .map(|(k, &(name, stat))| {
            let shift = if k < 2 { l } else { l_t };
            let values: Vec<i64> = tableaux.iter().map(|t| stat(t) - shift).collect();
            let matched_by = family.iter().position(|f| *f == values);
            Candidate {
                name,
                values,
                matched_by,
            }
        })
        .collect();
    FamilyReport {
        shape: shape.clone(),
        tableaux,
        family,
        candidates,
    }
}

/// Evidence that a series is not symmetric under `x_t ↔ x_{t+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryWitness {
    pub swap: u32,
    pub monomial: Monomial,
    pub coefficient: i64,
    pub swapped_coefficient: i64,
}

/// First adjacent transposition `x_t ↔ x_{t+1}`, `t < max_var`, that changes
/// a coefficient. Under truncation only pairs of monomials that both lie
/// inside the volume bound are compared.
pub fn find_asymmetry(series: &Series, max_var: u32) -> Option<SymmetryWitness> {
    for t in 0..max_var {
        for (m, &c) in series.terms() {
            let swapped = m.swap_variables(t);
            if series.truncation().is_some_and(|v| swapped.volume() > v) {
                continue;
            }
            let other = series.coefficient(&swapped);
            if other != c {
                return Some(SymmetryWitness {
                    swap: t,
                    monomial: m.clone(),
                    coefficient: c,
                    swapped_coefficient: other,
                });
            }
        }
    }
    None
}

/// `None` when `s_λ(x_0, …, x_m)` is invariant under every adjacent swap.
pub fn schur_symmetry_check(poset: &Poset, max_entry: u32) -> Result<Option<SymmetryWitness>> {
    Ok(find_asymmetry(&schur(poset, max_entry)?, max_entry))
}

/// Searches the volume-truncated `s̄` for a coefficient broken by an
/// adjacent swap.
pub fn bar_schur_asymmetry(poset: &Poset, max_volume: u64) -> Result<Option<SymmetryWitness>> {
    let series = bar_schur(poset, max_volume)?;
    Ok(find_asymmetry(&series, max_volume as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn identity_01_small() {
        let y = Poset::young(&shape(&[2, 1]));
        assert!(verify_identity_01(&y.canonical_extension(), 2)
            .unwrap()
            .holds());
        let row = Poset::young(&shape(&[3]));
        for v in 0..5 {
            assert!(verify_identity_01(&row.canonical_extension(), v)
                .unwrap()
                .holds());
        }
    }

    #[test]
    fn identity_04_small() {
        assert!(verify_identity_04(&shape(&[2, 1])).unwrap().holds());
        assert!(verify_identity_04(&shape(&[3, 2])).unwrap().holds());
        assert!(verify_identity_04(&Partition::empty()).unwrap().holds());
    }

    #[test]
    fn maj_comaj_small() {
        assert!(verify_maj_comaj(&shape(&[2, 1])).unwrap().holds());
        assert!(verify_maj_comaj(&shape(&[4])).unwrap().holds());
    }

    #[test]
    fn family_for_row_and_hook() {
        let report = family_membership_check(&shape(&[3]));
        assert_eq!(report.family, vec![vec![0]]);
        assert_eq!(report.candidates[0].matched_by, Some(0));

        let report = family_membership_check(&shape(&[2, 1]));
        assert_eq!(report.tableaux.len(), 2);
        // P = [[1,2],[3]]: volumes (0, 1); P = [[1,3],[2]]: volumes (1, 0).
        assert_eq!(report.family, vec![vec![0, 1], vec![1, 0]]);
        // maj = (2, 1), l = 1.
        assert_eq!(report.candidates[0].values, vec![1, 0]);
        assert_eq!(report.candidates[0].matched_by, Some(1));
    }

    #[test]
    fn asymmetry_of_bar_schur() {
        let y = Poset::young(&shape(&[2, 1]));
        let w = bar_schur_asymmetry(&y, 2).unwrap().expect("witness");
        assert_eq!(w.swap, 0);
        assert_eq!(w.monomial.indices(), &[0, 0, 1]);
        assert_eq!((w.coefficient, w.swapped_coefficient), (2, 1));
        assert_eq!(schur_symmetry_check(&y, 3).unwrap(), None);
    }
}
