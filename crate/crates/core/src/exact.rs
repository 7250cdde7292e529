//! Exact rational scalars and dense linear algebra over them.
//!
//! Elimination is fraction-free: each row is cleared of denominators and the
//! forward pass runs Bareiss' integer-preserving update, so intermediate values
//! are minors of the input rather than ever-growing fractions. Pivots are taken
//! as the first nonzero entry in column order, which makes every echelon form
//! and kernel basis reproducible.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn big(v: BigInt) -> Scalar {
    Scalar::from_integer(v)
}

/// Binomial coefficient C(n, k), zero outside 0 ≤ k ≤ n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn is_integral(x: &Scalar) -> bool {
    x.denom().is_one()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("rows have differing lengths")]
    Ragged,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("inconsistent system")]
    Inconsistent,
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed so that a matrix with no rows
    /// still knows its width.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Self, LinalgError> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::Ragged);
        }
        let n = rows.len();
        Ok(ExactMatrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
            cols,
        )
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Scalar>], rows: usize) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::Ragged);
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Dimension(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form: `rref` holds only the `rank` nonzero rows.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub rref: ExactMatrix,
}

fn integer_rows(m: &ExactMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

/// Bareiss forward elimination. Returns the integer echelon rows and their pivot columns.
fn bareiss(m: &ExactMatrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a = integer_rows(m);
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rref(m: &ExactMatrix) -> Echelon {
    let (rows, pivots) = bareiss(m);
    let rank = pivots.len();
    let cols = m.cols();
    let mut red: Vec<Vec<Scalar>> = rows
        .into_iter()
        .map(|row| row.into_iter().map(big).collect())
        .collect();
    for r in (0..rank).rev() {
        let p = pivots[r];
        let lead = red[r][p].clone();
        if !lead.is_one() {
            for x in red[r].iter_mut() {
                *x /= &lead;
            }
        }
        for above in 0..r {
            let factor = red[above][p].clone();
            if factor.is_zero() {
                continue;
            }
            for j in p..cols {
                let delta = &factor * &red[r][j];
                red[above][j] -= delta;
            }
        }
    }
    let rref = ExactMatrix::from_rows(red, cols).expect("rows share width");
    Echelon { rank, pivots, rref }
}

pub fn rank(m: &ExactMatrix) -> usize {
    bareiss(m).1.len()
}

fn kernel_from(e: &Echelon, cols: usize) -> Vec<Vec<Scalar>> {
    let mut is_pivot = vec![false; cols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (r, &p) in e.pivots.iter().enumerate() {
                v[p] = -e.rref.get(r, f).clone();
            }
            v
        })
        .collect()
}

/// Rank together with a kernel basis, one vector per free column.
pub fn rank_and_kernel(m: &ExactMatrix) -> (usize, Vec<Vec<Scalar>>) {
    let e = rref(m);
    let k = kernel_from(&e, m.cols());
    (e.rank, k)
}

/// A particular solution of `A x = b` and a basis of the kernel of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

pub fn solve_linear(a: &ExactMatrix, b: &[Scalar]) -> Result<Solution, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::Dimension(format!(
            "{} rows but right-hand side of length {}",
            a.rows(),
            b.len()
        )));
    }
    let cols = a.cols();
    let mut aug = ExactMatrix::zeros(a.rows(), cols + 1);
    for i in 0..a.rows() {
        for j in 0..cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, cols, b[i].clone());
    }
    let e = rref(&aug);
    if e.pivots.last() == Some(&cols) {
        return Err(LinalgError::Inconsistent);
    }
    let mut x = vec![Scalar::zero(); cols];
    for (r, &p) in e.pivots.iter().enumerate() {
        x[p] = e.rref.get(r, cols).clone();
    }
    let inner = Echelon {
        rank: e.rank,
        pivots: e.pivots.clone(),
        rref: e.rref.select(
            &(0..e.rank).collect::<Vec<_>>(),
            &(0..cols).collect::<Vec<_>>(),
        ),
    };
    Ok(Solution {
        particular: x,
        kernel: kernel_from(&inner, cols),
    })
}

/// Rank of a family of vectors of common length `dim`.
pub fn span_rank(vectors: &[Vec<Scalar>], dim: usize) -> usize {
    let m = ExactMatrix::from_rows(vectors.to_vec(), dim).expect("vectors share length");
    rank(&m)
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[Vec<Scalar>], b: &[Vec<Scalar>], dim: usize) -> bool {
    let ra = span_rank(a, dim);
    let rb = span_rank(b, dim);
    let joint: Vec<Vec<Scalar>> = a.iter().chain(b).cloned().collect();
    ra == rb && span_rank(&joint, dim) == ra
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        let (r, k) = rank_and_kernel(&ExactMatrix::identity(2));
        assert_eq!(r, 2);
        assert!(k.is_empty());
    }

    #[test]
    fn proportional_rows() {
        let m = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]).unwrap();
        let (r, k) = rank_and_kernel(&m);
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec![int(-2), int(1)]]);
    }

    #[test]
    fn solve_scalar() {
        let a = ExactMatrix::from_i64(&[&[2]]).unwrap();
        let s = solve_linear(&a, &[int(1)]).unwrap();
        assert_eq!(s.particular, vec![frac(1, 2)]);
        assert!(s.kernel.is_empty());
    }

    #[test]
    fn inconsistent_system() {
        let a = ExactMatrix::from_i64(&[&[1, 1], &[2, 2]]).unwrap();
        assert_eq!(
            solve_linear(&a, &[int(1), int(3)]),
            Err(LinalgError::Inconsistent)
        );
    }

    #[test]
    fn empty_matrix() {
        let m = ExactMatrix::zeros(0, 3);
        let (r, k) = rank_and_kernel(&m);
        assert_eq!(r, 0);
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
    }
}
