//! Finite models of H*(X): a graded basis, structure constants and an integral.

use crate::exact::{frac, int, ExactMatrix, Scalar};
use crate::hodge::cubic_middle_betti;

use super::MotiveError;

/// A sparse vector in the model basis.
pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Debug, Clone)]
pub struct CohModel {
    name: String,
    dim: u32,
    degrees: Vec<u32>,
    labels: Vec<String>,
    unit: usize,
    integral: Vec<Scalar>,
    products: Vec<Vec<SparseVec>>,
    gram: ExactMatrix,
    partners: Vec<SparseVec>,
    diagonal: Vec<(usize, usize, Scalar)>,
}

impl CohModel {
    /// `product(i, j)` returns x_i·x_j in the basis. The model must be graded-commutative with
    /// a nondegenerate pairing; both are checked.
    pub fn new(
        name: impl Into<String>,
        dim: u32,
        degrees: Vec<u32>,
        labels: Vec<String>,
        unit: usize,
        integral: Vec<Scalar>,
        product: impl Fn(usize, usize) -> SparseVec,
    ) -> Result<Self, MotiveError> {
        let size = degrees.len();
        let name = name.into();
        if labels.len() != size || integral.len() != size || unit >= size || degrees[unit] != 0 {
            return Err(MotiveError::BadModel(format!(
                "{name}: inconsistent basis data"
            )));
        }
        let products: Vec<Vec<SparseVec>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        product(i, j)
                            .into_iter()
                            .filter(|(_, c)| c != &int(0))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        for i in 0..size {
            for j in 0..size {
                let sign = if degrees[i] % 2 == 1 && degrees[j] % 2 == 1 {
                    -1
                } else {
                    1
                };
                let back: SparseVec = products[j][i]
                    .iter()
                    .map(|(k, c)| (*k, c * int(sign)))
                    .collect();
                if sort_vec(&products[i][j]) != sort_vec(&back) {
                    return Err(MotiveError::BadModel(format!(
                        "{name}: x{i}·x{j} breaks graded commutativity"
                    )));
                }
            }
        }
        let mut gram = ExactMatrix::zeros(size, size);
        for i in 0..size {
            for j in 0..size {
                let v: Scalar = products[i][j].iter().map(|(k, c)| c * &integral[*k]).sum();
                gram.set(i, j, v);
            }
        }
        let inverse = invert(&gram).ok_or_else(|| {
            MotiveError::BadModel(format!("{name}: degenerate intersection pairing"))
        })?;
        let partners = (0..size)
            .map(|i| {
                (0..size)
                    .filter(|&j| gram.get(i, j) != &int(0))
                    .map(|j| (j, gram.get(i, j).clone()))
                    .collect()
            })
            .collect();
        // Δ = Σ D_st x_s⊗x_t with D = G^{-T}·diag((-1)^{|t|}).
        let mut diagonal = Vec::new();
        for s in 0..size {
            for t in 0..size {
                let v = inverse.get(t, s).clone();
                if v != int(0) {
                    let sign = if degrees[t] % 2 == 1 { -1 } else { 1 };
                    diagonal.push((s, t, v * int(sign)));
                }
            }
        }
        Ok(CohModel {
            name,
            dim,
            degrees,
            labels,
            unit,
            integral,
            products,
            gram,
            partners,
            diagonal,
        })
    }

    /// Smooth cubic n-fold: h^0..h^n, then a basis e_1..e_b of primitive middle cohomology.
    /// The primitive form is the identity for even n and the standard symplectic matrix for odd n.
    pub fn cubic(n: u32) -> Result<Self, MotiveError> {
        if n < 1 {
            return Err(MotiveError::BadModel("cubic of dimension 0".into()));
        }
        let b = cubic_middle_betti(n).map_err(|e| MotiveError::BadModel(e.to_string()))? as usize;
        let tate = n as usize + 1;
        let mut degrees: Vec<u32> = (0..=n).map(|i| 2 * i).collect();
        degrees.extend(std::iter::repeat(n).take(b));
        let mut labels: Vec<String> = (0..=n).map(|i| format!("h^{i}")).collect();
        labels.extend((1..=b).map(|a| format!("e{a}")));
        let mut integral = vec![int(0); tate + b];
        integral[n as usize] = int(3);
        let form = primitive_form(b, n % 2 == 1);
        let top = n as usize;
        CohModel::new(
            format!("cubic {n}-fold"),
            n,
            degrees,
            labels,
            0,
            integral,
            |i, j| match (i < tate, j < tate) {
                (true, true) if i + j <= top => vec![(i + j, int(1))],
                (true, true) => vec![],
                (true, false) if i == 0 => vec![(j, int(1))],
                (false, true) if j == 0 => vec![(i, int(1))],
                (false, false) => {
                    let v = form[i - tate][j - tate];
                    if v == 0 {
                        vec![]
                    } else {
                        vec![(top, frac(v, 3))]
                    }
                }
                _ => vec![],
            },
        )
    }

    /// Smooth curve of genus g: 1, a_1..a_g, b_1..b_g, pt with a_i·b_i = pt.
    pub fn curve(genus: usize) -> Result<Self, MotiveError> {
        let size = 2 * genus + 2;
        let top = size - 1;
        let mut degrees = vec![0];
        degrees.extend(std::iter::repeat(1).take(2 * genus));
        degrees.push(2);
        let mut labels = vec!["1".to_string()];
        labels.extend((1..=genus).map(|i| format!("a{i}")));
        labels.extend((1..=genus).map(|i| format!("b{i}")));
        labels.push("pt".into());
        let mut integral = vec![int(0); size];
        integral[top] = int(1);
        CohModel::new(
            format!("genus {genus} curve"),
            1,
            degrees,
            labels,
            0,
            integral,
            |i, j| {
                if i == 0 {
                    return vec![(j, int(1))];
                }
                if j == 0 {
                    return vec![(i, int(1))];
                }
                if i == top || j == top {
                    return vec![];
                }
                let (ia, ja) = (i <= genus, j <= genus);
                if ia && !ja && j - genus == i {
                    vec![(top, int(1))]
                } else if !ia && ja && i - genus == j {
                    vec![(top, int(-1))]
                } else {
                    vec![]
                }
            },
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Complex dimension.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn size(&self) -> usize {
        self.degrees.len()
    }

    /// Cohomological degree of a basis vector.
    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i][j]
    }

    pub fn integral(&self, i: usize) -> &Scalar {
        &self.integral[i]
    }

    pub fn gram(&self) -> &ExactMatrix {
        &self.gram
    }

    /// Basis vectors with nonzero pairing against x_i, with the pairing value.
    pub fn partners(&self, i: usize) -> &SparseVec {
        &self.partners[i]
    }

    /// Coefficients of the diagonal class in H*(X×X).
    pub fn diagonal_terms(&self) -> &[(usize, usize, Scalar)] {
        &self.diagonal
    }

    /// Product of two dense vectors.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![int(0); self.size()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| x != &&int(0)) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| y != &&int(0)) {
                for (k, c) in &self.products[i][j] {
                    out[*k] += x * y * c;
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![int(0); self.size()];
        v[i] = int(1);
        v
    }

    pub fn integrate_vec(&self, v: &[Scalar]) -> Scalar {
        v.iter().zip(&self.integral).map(|(a, b)| a * b).sum()
    }

    /// Euler characteristic Σ(-1)^{deg} over the basis.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .map(|d| if d % 2 == 0 { 1 } else { -1 })
            .sum()
    }
}

fn sort_vec(v: &SparseVec) -> SparseVec {
    let mut v = v.clone();
    v.sort_by_key(|(k, _)| *k);
    v
}

fn primitive_form(b: usize, alternating: bool) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; b]; b];
    if alternating {
        let half = b / 2;
        for i in 0..half {
            m[i][i + half] = 1;
            m[i + half][i] = -1;
        }
    } else {
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
    }
    m
}

fn invert(m: &ExactMatrix) -> Option<ExactMatrix> {
    let size = m.rows();
    let mut aug = ExactMatrix::zeros(size, 2 * size);
    for i in 0..size {
        for j in 0..size {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, size + i, int(1));
    }
    let ech = crate::exact::rref(&aug);
    if ech.rank < size
        || ech
            .pivots
            .iter()
            .take(size)
            .enumerate()
            .any(|(i, &p)| p != i)
    {
        return None;
    }
    let mut inv = ExactMatrix::zeros(size, size);
    for i in 0..size {
        for j in 0..size {
            inv.set(i, j, ech.rref.get(i, size + j).clone());
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_models() {
        let x = CohModel::cubic(4).unwrap();
        assert_eq!(x.size(), 5 + 22);
        assert_eq!(x.euler_characteristic(), 27);
        let x3 = CohModel::cubic(3).unwrap();
        assert_eq!(x3.euler_characteristic(), -6);
    }

    #[test]
    fn curve_model() {
        let c = CohModel::curve(2).unwrap();
        assert_eq!(c.euler_characteristic(), -2);
        assert_eq!(c.product(1, 3), &vec![(5, int(1))]);
        assert_eq!(c.product(3, 1), &vec![(5, int(-1))]);
    }
}
