//! Simplicial complexes, their face numbers, and the numerical tests and
//! constructions built on them.

mod complex;
mod edgewise;
mod kruskal_katona;

pub use complex::{h_from_f, FVector, SimplicialComplex, DEFAULT_BUDGET};
pub use edgewise::{
    check_edgewise_hilbert, edgewise, edgewise_with_budget, phi, EdgewiseHilbert, EdgewiseSubdivision, GridPoint,
};
pub use kruskal_katona::{
    binomial_representation, is_basic_admissible, is_f_vector, is_m_sequence, kruskal_katona_bound,
    macaulay_bound, revlex_realize, revlex_realize_with_budget,
};
