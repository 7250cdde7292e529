//! Rank checks for the generically defined cycles on X and X×X of a cubic hypersurface:
//! every linear relation visible in cohomology must come from the installed relations.

use crate::exact::{int, rank_and_kernel, same_span, span_rank, ExactMatrix, Scalar};

use super::cubic::{decomposable, diagonal_with, realize_cubic, CubicAlgebra, CubicCycle};
use super::cycle::{self, Monomial};
use super::model::CohModel;
use super::tensor::{self, Tensor};
use super::MotiveError;

/// One spanning element of the generically defined ring in a given codimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Spanning {
    /// h^a on X.
    Power(u32),
    /// h^a × h^b on X×X.
    Decomposable(u32, u32),
    /// Δ · p₁*h^a · p₂*h^b on X×X.
    Diagonal(u32, u32),
}

impl Spanning {
    pub fn label(&self) -> String {
        match self {
            Spanning::Power(a) => format!("h^{a}"),
            Spanning::Decomposable(a, b) => format!("h^{a}×h^{b}"),
            Spanning::Diagonal(0, 0) => "Δ".into(),
            Spanning::Diagonal(a, b) => format!("Δ·p₁*h^{a}·p₂*h^{b}"),
        }
    }

    fn symbolic(&self, alg: &CubicAlgebra) -> Result<CubicCycle, MotiveError> {
        Ok(match *self {
            Spanning::Power(a) => cycle::monomial(alg, 1, vec![(vec![0], a)], int(1)),
            Spanning::Decomposable(a, b) => decomposable(alg, a, b),
            Spanning::Diagonal(a, b) => diagonal_with(alg, a, b)?,
        })
    }
}

/// Spanning monomials of codimension d on X^power; h-exponents stay at most n.
pub fn spanning_set(d: u32, power: u32, n: u32) -> Vec<Spanning> {
    match power {
        1 => (d <= n).then_some(Spanning::Power(d)).into_iter().collect(),
        _ => {
            let mut out: Vec<Spanning> = (0..=d.min(n))
                .filter(|a| d - a <= n)
                .map(|a| Spanning::Decomposable(a, d - a))
                .collect();
            if d >= n {
                out.extend((0..=d - n).map(|a| Spanning::Diagonal(a, d - n - a)));
            }
            out
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FranchettaReport {
    pub n: u32,
    pub codim: u32,
    pub power: u32,
    pub spanning: Vec<String>,
    /// Rank of the realization map on the spanning set.
    pub rank: usize,
    pub gram_rank: usize,
    pub relations: Vec<Vec<Scalar>>,
    pub cycle_kernel: Vec<Vec<Scalar>>,
    pub gram_kernel: Vec<Vec<Scalar>>,
}

impl FranchettaReport {
    /// Kernel vectors not generated by the installed relations.
    pub fn unexplained(&self) -> Vec<Vec<Scalar>> {
        let dim = self.spanning.len();
        let base = span_rank(&self.relations, dim);
        self.cycle_kernel
            .iter()
            .chain(&self.gram_kernel)
            .filter(|v| {
                let mut with = self.relations.clone();
                with.push((*v).clone());
                span_rank(&with, dim) > base
            })
            .cloned()
            .collect()
    }

    pub fn holds(&self) -> bool {
        let dim = self.spanning.len();
        same_span(&self.relations, &self.cycle_kernel, dim)
            && same_span(&self.relations, &self.gram_kernel, dim)
    }
}

fn coordinates(t: &Tensor, rows: &[Vec<usize>]) -> Vec<Scalar> {
    rows.iter().map(|r| t.coefficient(r)).collect()
}

fn pairing(model: &CohModel, a: &Tensor, b: &Tensor) -> Scalar {
    tensor::integrate(model, &tensor::product(model, a, b))
}

/// Relation vectors: each Δ-monomial of positive h-degree minus its normal form.
fn relations(alg: &CubicAlgebra, span: &[Spanning]) -> Result<Vec<Vec<Scalar>>, MotiveError> {
    let mut out = Vec::new();
    for (idx, s) in span.iter().enumerate() {
        let Spanning::Diagonal(a, b) = *s else {
            continue;
        };
        if a + b == 0 {
            continue;
        }
        let normal = s.symbolic(alg)?;
        let mut v = vec![int(0); span.len()];
        v[idx] = int(1);
        for (m, c) in normal.terms() {
            let pos = locate(span, m).ok_or_else(|| {
                MotiveError::Underived(format!("normal form of {} leaves the span", s.label()))
            })?;
            v[pos] -= c;
        }
        out.push(v);
    }
    Ok(out)
}

fn locate(span: &[Spanning], m: &Monomial<u32>) -> Option<usize> {
    let blocks = m.blocks();
    let target = match blocks {
        [x, y] if x.factors == [0] && y.factors == [1] => Spanning::Decomposable(x.class, y.class),
        [x] if x.factors == [0, 1] => Spanning::Diagonal(x.class, 0),
        _ => return None,
    };
    span.iter().position(|s| *s == target)
}

/// Gram-matrix and cycle-class kernels against the installed relations.
pub fn franchetta_rank_check(
    codim: u32,
    power: u32,
    n: u32,
) -> Result<FranchettaReport, MotiveError> {
    if !(1..=2).contains(&power) || codim > n * power {
        return Err(MotiveError::OutOfRange(format!(
            "codim {codim}, power {power} for n = {n}"
        )));
    }
    let model = CohModel::cubic(n)?;
    let alg = CubicAlgebra::new(n);
    let span = spanning_set(codim, power, n);
    let dual = spanning_set(n * power - codim, power, n);
    let realize = |s: &Spanning| -> Result<Tensor, MotiveError> {
        Ok(realize_cubic(&model, &s.symbolic(&alg)?))
    };
    let tensors: Vec<Tensor> = span.iter().map(realize).collect::<Result<_, _>>()?;
    let dual_tensors: Vec<Tensor> = dual.iter().map(realize).collect::<Result<_, _>>()?;

    let mut rows: Vec<Vec<usize>> = tensors
        .iter()
        .flat_map(|t| t.terms().keys().cloned())
        .collect();
    rows.sort();
    rows.dedup();
    let columns: Vec<Vec<Scalar>> = tensors.iter().map(|t| coordinates(t, &rows)).collect();
    let cycle_map = ExactMatrix::from_columns(&columns, rows.len())
        .map_err(|e| MotiveError::BadModel(e.to_string()))?;
    let (rank, cycle_kernel) = rank_and_kernel(&cycle_map);

    // Row j pairs every spanning element with the j-th complementary element.
    let gram_rows: Vec<Vec<Scalar>> = dual_tensors
        .iter()
        .map(|d| tensors.iter().map(|t| pairing(&model, t, d)).collect())
        .collect();
    let gram = ExactMatrix::from_rows(gram_rows, span.len())
        .map_err(|e| MotiveError::BadModel(e.to_string()))?;
    let (gram_rank, gram_kernel) = rank_and_kernel(&gram);

    Ok(FranchettaReport {
        n,
        codim,
        power,
        spanning: span.iter().map(Spanning::label).collect(),
        rank,
        gram_rank,
        relations: relations(&alg, &span)?,
        cycle_kernel,
        gram_kernel,
    })
}
