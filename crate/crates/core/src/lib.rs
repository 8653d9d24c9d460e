//! Exact arithmetic for Veronese transforms of rational power series.
//!
//! A series `a(t) = h(t) / (1 - t)^d` keeps a numerator of the same shape
//! when only every `r`-th coefficient is retained. This crate computes that
//! numerator exactly, the bounded-composition counts that drive the
//! transform, the derived g-vectors, and the simplicial-complex machinery
//! (Kruskal–Katona, Macaulay, edgewise subdivision) used to interpret them.
//!
//! Everything is arbitrary-precision integer or rational arithmetic.

pub mod error;
pub mod polyseries;
pub mod report;
pub mod simplicial;
pub mod veronese;

pub use error::{Error, Result};
pub use polyseries::{GVectorSeq, IntPolynomial, RationalSeries, SeriesPrefix};
pub use report::{Check, Report};
pub use simplicial::{FVector, SimplicialComplex};
