//! Pedestal polynomials of Young diagrams and finite posets.
//!
//! For a linear extension `P` of a finite poset, every other linear
//! extension `Q` gets a reverse plane partition `q_{P,Q}`, its `P`-pedestal,
//! counting the places where `Q` runs against `P`. Summing the monomials
//! `∏ x_{q_{P,Q}(α)}` over all `Q` gives the pedestal polynomial, which turns
//! out not to depend on `P`; for a Young diagram its principal specialization
//! is the numerator of the hook-length generating function.
//!
//! The crate is `no_std` and only needs `alloc`. Modules:
//!
//! - [`shapes`]: partitions, hooks, standard Young tableaux, maj/comaj
//! - [`posets`]: finite posets, linear extensions, the Young poset
//! - [`rpp`]: reverse plane partitions and their enumeration
//! - [`pedestal`]: pedestals, the pedestal polynomial, the bijection
//!   `𝔔 ↦ (q, μ)` and its inverse
//! - [`ring`]: the ∗-product ring `R_n`, truncated Schur-type series and
//!   the identity verifiers

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod pedestal;
pub mod posets;
pub mod ring;
pub mod rpp;
pub mod shapes;

pub use error::{Error, Result};
pub use pedestal::{
    b_st, b_st_inverse, disagreement_nodes, pedestal, pedestal_polynomial, pi_poly, pi_poly_for,
    tableau_from_rpp, verify_independence, IndependenceReport, Pedestal,
};
pub use posets::{connected_posets, LinearExtension, Poset};
pub use ring::{Monomial, Series, UniPoly};
pub use rpp::{enumerate_column_strict, enumerate_rpp, ReversePlanePartition};
pub use shapes::{partitions_of, Node, Partition, StandardTableau};
