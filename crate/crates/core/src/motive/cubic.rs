//! Symbolic and realized correspondences on powers of a smooth cubic hypersurface.

use num_bigint::BigInt;

use crate::exact::{big, binomial, frac, int, solve_linear, ExactMatrix, Scalar};

use super::corr::Corr;
use super::cycle::{self, ClassAlgebra, Cycle};
use super::model::CohModel;
use super::tensor::{self, Tensor};
use super::MotiveError;

/// Chern classes of a cubic n-fold: c_k(T_X) = coeff_k · h^k from (1+h)^{n+2}/(1+3h).
pub fn chern_cubic(n: u32) -> Vec<BigInt> {
    (0..=n as i64)
        .map(|k| {
            (0..=k)
                .map(|j| binomial(n as i64 + 2, j) * BigInt::from(-3).pow((k - j) as u32))
                .sum()
        })
        .collect()
}

/// Classes h^a on a cubic n-fold, with Δ·p₁*h = (1/3)Σ_{i+j=n+1, i,j≥1} h^i×h^j as split rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubicAlgebra {
    n: u32,
}

impl CubicAlgebra {
    pub fn new(n: u32) -> Self {
        CubicAlgebra { n }
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

pub type CubicCycle = Cycle<u32, Scalar>;

impl ClassAlgebra for CubicAlgebra {
    type Coeff = Scalar;
    type Class = u32;

    fn dim(&self) -> u32 {
        self.n
    }

    fn unit_class(&self) -> u32 {
        0
    }

    fn class_degree(&self, c: &u32) -> u32 {
        *c
    }

    fn multiply(&self, a: &u32, b: &u32) -> Vec<(Scalar, u32)> {
        if a + b <= self.n {
            vec![(int(1), a + b)]
        } else {
            vec![]
        }
    }

    fn top_chern(&self) -> Vec<(Scalar, u32)> {
        vec![(big(chern_cubic(self.n)[self.n as usize].clone()), self.n)]
    }

    fn evaluate(&self, c: &u32) -> Scalar {
        if *c == self.n {
            int(3)
        } else {
            int(0)
        }
    }

    fn split(&self, c: &u32) -> Option<Vec<(Scalar, u32, u32)>> {
        if *c == 0 {
            return None;
        }
        let n = self.n;
        Some(
            (1..=n)
                .filter(|&i| (1..=n).contains(&(n + 1 - i)) && i + c - 1 <= n)
                .map(|i| (frac(1, 3), i + c - 1, n + 1 - i))
                .collect(),
        )
    }

    fn render_class(&self, c: &u32) -> String {
        if *c == 1 {
            "h".into()
        } else {
            format!("h^{c}")
        }
    }
}

/// Realization of a symbolic cubic cycle in the cubic model.
pub fn realize_cubic(model: &CohModel, c: &CubicCycle) -> Tensor {
    cycle::realize::<CubicAlgebra>(model, c, |a| model.basis_vector(*a as usize), |k| k.clone())
}

/// h^a × h^b as a symbolic cycle on X×X.
pub fn decomposable(alg: &CubicAlgebra, a: u32, b: u32) -> CubicCycle {
    cycle::monomial(alg, 2, vec![(vec![0], a), (vec![1], b)], int(1))
}

/// Δ · p₁*h^a · p₂*h^b, not normalized.
pub fn diagonal_with(alg: &CubicAlgebra, a: u32, b: u32) -> Result<CubicCycle, MotiveError> {
    let d = cycle::diagonal(alg, 2, vec![0, 1]);
    let d = cycle::multiply(alg, &d, &cycle::pullback_class(alg, 2, 0, a))?;
    cycle::multiply(alg, &d, &cycle::pullback_class(alg, 2, 1, b))
}

/// A correspondence with a symbolic form, when one is known, and its realization.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrClass {
    pub symbolic: Option<CubicCycle>,
    pub corr: Corr,
}

impl CorrClass {
    pub fn from_symbolic(
        model: &CohModel,
        c: CubicCycle,
        source: usize,
    ) -> Result<Self, MotiveError> {
        let t = realize_cubic(model, &c);
        let target = c.arity() - source;
        Ok(CorrClass {
            corr: Corr::new(source, target, t)?,
            symbolic: Some(c),
        })
    }

    pub fn from_corr(model: &CohModel, corr: Corr) -> Self {
        let symbolic = reexpress(model, &corr);
        CorrClass { symbolic, corr }
    }

    pub fn compose(
        model: &CohModel,
        outer: &CorrClass,
        inner: &CorrClass,
    ) -> Result<Self, MotiveError> {
        Ok(CorrClass::from_corr(
            model,
            Corr::compose(model, &outer.corr, &inner.corr)?,
        ))
    }

    pub fn transpose(&self, model: &CohModel) -> Self {
        CorrClass::from_corr(model, self.corr.transpose(model))
    }

    pub fn render(&self, model: &CohModel) -> String {
        match &self.symbolic {
            Some(c) => cycle::render(&CubicAlgebra::new(model.dim()), c),
            None => self.corr.tensor().render(model),
        }
    }
}

/// Writes a self-correspondence of X as a combination of Δ and h^a×h^b when possible.
pub fn reexpress(model: &CohModel, corr: &Corr) -> Option<CubicCycle> {
    if (corr.source(), corr.target()) != (1, 1) {
        return None;
    }
    let n = model.dim();
    let alg = CubicAlgebra::new(n);
    let mut basis = vec![cycle::diagonal(&alg, 2, vec![0, 1])];
    for a in 0..=n {
        for b in 0..=n {
            basis.push(decomposable(&alg, a, b));
        }
    }
    let tensors: Vec<Tensor> = basis.iter().map(|c| realize_cubic(model, c)).collect();
    let mut rows: Vec<Vec<usize>> = tensors
        .iter()
        .chain(std::iter::once(corr.tensor()))
        .flat_map(|t| t.terms().keys().cloned())
        .collect();
    rows.sort();
    rows.dedup();
    let columns: Vec<Vec<Scalar>> = tensors
        .iter()
        .map(|t| rows.iter().map(|r| t.coefficient(r)).collect())
        .collect();
    let a = ExactMatrix::from_columns(&columns, rows.len()).ok()?;
    let rhs: Vec<Scalar> = rows.iter().map(|r| corr.tensor().coefficient(r)).collect();
    let sol = solve_linear(&a, &rhs).ok()?;
    let mut out = Cycle::zero(2);
    for (c, k) in basis.iter().zip(sol.particular) {
        out = out.add(&c.scaled(&k));
    }
    Some(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationX2Report {
    pub n: u32,
    pub via_first: Tensor,
    pub via_second: Tensor,
    pub decomposed: Tensor,
    /// The symbolic normal form of Δ·p₁*h.
    pub normal_form: String,
}

impl RelationX2Report {
    pub fn holds(&self) -> bool {
        self.via_first == self.decomposed && self.via_second == self.decomposed
    }
}

/// Δ·p₁*h = Δ·p₂*h = (1/3) Σ_{i+j=n+1, i,j>0} h^i×h^j, checked in the realization.
pub fn relation_x2(n: u32) -> Result<RelationX2Report, MotiveError> {
    let model = CohModel::cubic(n)?;
    let alg = CubicAlgebra::new(n);
    let delta = tensor::diagonal(&model);
    let h = model.basis_vector(1);
    let p1h = tensor::pullback(&model, &Tensor::from_vec(&h), &[0], 2);
    let p2h = tensor::pullback(&model, &Tensor::from_vec(&h), &[1], 2);
    let via_first = tensor::product(&model, &delta, &p1h);
    let via_second = tensor::product(&model, &delta, &p2h);
    let mut decomposed = Tensor::zero(2);
    for i in 1..=n {
        decomposed.add_term(vec![i as usize, (n + 1 - i) as usize], frac(1, 3));
    }
    let normal = diagonal_with(&alg, 1, 0)?;
    Ok(RelationX2Report {
        n,
        via_first,
        via_second,
        decomposed,
        normal_form: cycle::render(&alg, &normal),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chern_numbers() {
        assert_eq!(chern_cubic(4)[4], BigInt::from(9));
        assert_eq!(chern_cubic(1)[1], BigInt::from(0));
        assert_eq!(&chern_cubic(2)[2] * 3, BigInt::from(9));
    }

    #[test]
    fn relation_holds() {
        for n in 2..=5 {
            let r = relation_x2(n).unwrap();
            assert!(r.holds(), "n = {n}");
        }
        assert_eq!(
            relation_x2(2).unwrap().normal_form,
            "1/3·p₁*h·p₂*h^2 + 1/3·p₁*h^2·p₂*h"
        );
    }

    #[test]
    fn symbolic_products_match_realization() {
        for n in 2..=4 {
            let model = CohModel::cubic(n).unwrap();
            let alg = CubicAlgebra::new(n);
            let d = cycle::diagonal(&alg, 2, vec![0, 1]);
            let dd = cycle::multiply(&alg, &d, &d).unwrap();
            let td = realize_cubic(&model, &d);
            assert_eq!(
                realize_cubic(&model, &dd),
                tensor::product(&model, &td, &td)
            );
            let delta3 = cycle::multiply(
                &alg,
                &cycle::diagonal(&alg, 3, vec![0, 1]),
                &cycle::diagonal(&alg, 3, vec![1, 2]),
            )
            .unwrap();
            assert_eq!(
                realize_cubic(&model, &delta3),
                tensor::multi_diagonal(&model, 3)
            );
            let x = diagonal_with(&alg, 1, 1).unwrap();
            assert!(!x.terms().keys().any(|m| m.has_diagonal()));
        }
    }

    #[test]
    fn reexpression_round_trip() {
        let model = CohModel::cubic(3).unwrap();
        let alg = CubicAlgebra::new(3);
        let c =
            cycle::diagonal(&alg, 2, vec![0, 1]).sub(&decomposable(&alg, 2, 1).scaled(&frac(1, 3)));
        let cc = CorrClass::from_symbolic(&model, c.clone(), 1).unwrap();
        assert_eq!(reexpress(&model, &cc.corr), Some(c));
    }
}
