//! Exact computations around multiplicative Chow–Künneth decompositions of cubic
//! hypersurfaces: Schubert calculus on Gr(2, m), the tautological ring of the
//! Fano variety of lines, Hodge-class censuses and a correspondence calculus
//! realized in a model of the cohomology of X^k.
//!
//! Everything is exact; there is no floating point anywhere in this crate.

pub mod exact;
pub mod fano;
pub mod graded;
pub mod hodge;
pub mod motive;
pub mod schubert;
