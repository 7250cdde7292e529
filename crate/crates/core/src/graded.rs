//! Graded dimension vectors (Poincaré polynomials with nonnegative coefficients).

use std::fmt;

/// Dimensions indexed by degree, with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct GradedDims {
    dims: Vec<u64>,
}

impl GradedDims {
    pub fn new(mut dims: Vec<u64>) -> Self {
        while dims.last() == Some(&0) {
            dims.pop();
        }
        GradedDims { dims }
    }

    pub fn get(&self, degree: usize) -> u64 {
        self.dims.get(degree).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.dims
    }

    /// One past the highest nonzero degree.
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.dims.iter().sum()
    }

    /// Alternating sum Σ (-1)^i dim_i.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// Symmetric about the middle of a range of length `len`.
    pub fn is_palindromic(&self, len: usize) -> bool {
        (0..len).all(|i| self.get(i) == self.get(len - 1 - i))
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}
