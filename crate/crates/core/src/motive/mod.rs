//! Correspondences on powers of a variety, realized in a finite cohomology model, together
//! with a symbolic calculus of diagonal cycles.

use thiserror::Error;

pub mod bundle;
pub mod corr;
pub mod cubic;
pub mod cycle;
pub mod formal;
pub mod franchetta;
pub mod gamma3;
pub mod model;
pub mod projectors;
pub mod tensor;

pub use corr::Corr;
pub use formal::{FormalPoly, Ring};
pub use model::CohModel;
pub use tensor::Tensor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotiveError {
    #[error("bad model: {0}")]
    BadModel(String),
    #[error("expected arity {expected}, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("shape mismatch: {left:?} against {right:?}")]
    Shape {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("underived: {0}")]
    Underived(String),
}
