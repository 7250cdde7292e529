//! Chow–Künneth projectors of a cubic hypersurface and the multiplicativity obstructions.

use std::collections::BTreeMap;

use crate::exact::{frac, int, ExactMatrix, Scalar};

use super::corr::Corr;
use super::cubic::{decomposable, CorrClass, CubicAlgebra};
use super::cycle;
use super::model::CohModel;
use super::tensor;
use super::MotiveError;

#[derive(Debug, Clone)]
pub struct ProjectorSet {
    n: u32,
    model: CohModel,
    projectors: Vec<CorrClass>,
}

/// π^{2i} = (1/3) h^{n-i}×h^i for 2i ≠ n, π^n = Δ - Σ π^{2i}, odd ones zero otherwise.
pub fn ck_projectors_cubic(n: u32) -> Result<ProjectorSet, MotiveError> {
    if n < 2 {
        return Err(MotiveError::OutOfRange(format!("n = {n} is below 2")));
    }
    let model = CohModel::cubic(n)?;
    let alg = CubicAlgebra::new(n);
    let mut symbolic = vec![cycle::Cycle::zero(2); 2 * n as usize + 1];
    let mut middle = cycle::diagonal(&alg, 2, vec![0, 1]);
    for i in 0..=n {
        if 2 * i == n {
            continue;
        }
        let p = decomposable(&alg, n - i, i).scaled(&frac(1, 3));
        middle = middle.sub(&p);
        symbolic[2 * i as usize] = p;
    }
    symbolic[n as usize] = middle;
    let projectors = symbolic
        .into_iter()
        .map(|c| CorrClass::from_symbolic(&model, c, 1))
        .collect::<Result<_, _>>()?;
    Ok(ProjectorSet {
        n,
        model,
        projectors,
    })
}

impl ProjectorSet {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn model(&self) -> &CohModel {
        &self.model
    }

    pub fn len(&self) -> usize {
        self.projectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projectors.is_empty()
    }

    /// π^i; zero for i beyond 2n.
    pub fn get(&self, i: usize) -> Corr {
        self.projectors
            .get(i)
            .map(|p| p.corr.clone())
            .unwrap_or_else(|| Corr::zero(1, 1))
    }

    pub fn class(&self, i: usize) -> Option<&CorrClass> {
        self.projectors.get(i)
    }

    /// Replaces π^i, e.g. to exercise the failure paths of the checks.
    pub fn with_projector(mut self, i: usize, p: CorrClass) -> Self {
        self.projectors[i] = p;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CkReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl CkReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Idempotence, orthogonality, completeness and the Künneth property, in the realization.
pub fn verify_ck_axioms(ps: &ProjectorSet) -> Result<CkReport, MotiveError> {
    let model = &ps.model;
    let mut report = CkReport::default();
    let count = ps.len();
    for i in 0..count {
        for j in 0..count {
            let comp = Corr::compose(model, &ps.get(i), &ps.get(j))?;
            if i == j {
                report.record(comp == ps.get(i), || format!("π^{i} is not idempotent"));
            } else {
                report.record(comp.is_zero(), || format!("π^{i}∘π^{j} ≠ 0"));
            }
        }
    }
    let mut sum = Corr::zero(1, 1);
    for i in 0..count {
        sum = sum.add(&ps.get(i))?;
    }
    report.record(sum == Corr::identity(model), || "Σ π^i ≠ Δ".into());
    for i in 0..count {
        let m = ps.get(i).realization_matrix(model)?;
        let mut expected = ExactMatrix::zeros(model.size(), model.size());
        for p in 0..model.size() {
            if model.degree(p) as usize == i {
                expected.set(p, p, int(1));
            }
        }
        report.record(m == expected, || {
            format!("π^{i} is not the Künneth projector onto H^{i}")
        });
    }
    Ok(report)
}

/// π^i = ᵗπ^{2n-i} for all i.
pub fn verify_self_duality(ps: &ProjectorSet) -> bool {
    let top = 2 * ps.n as usize;
    (0..=top).all(|i| ps.get(i).transpose(&ps.model) == ps.get(top - i))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Obstruction {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// π^k∘δ∘(π^i⊗π^j).
    pub class: Corr,
    /// The same class averaged over the swap of the two source factors.
    pub symmetrized: Corr,
    /// For k = i + j: whether π^k∘δ∘(π^i⊗π^j) = δ∘(π^i⊗π^j).
    pub sum_degree: Option<bool>,
}

impl Obstruction {
    pub fn vanishes(&self) -> bool {
        self.class.is_zero()
    }

    pub fn symmetrized_vanishes(&self) -> bool {
        self.symmetrized.is_zero()
    }

    /// Whether the verdict matches the expectation for this triple.
    pub fn passes(&self) -> bool {
        match self.sum_degree {
            Some(ok) => ok,
            None => self.vanishes() && self.symmetrized_vanishes(),
        }
    }
}

/// Caches δ∘(π^i⊗π^j) across triples.
pub struct MckEngine<'a> {
    ps: &'a ProjectorSet,
    delta: Corr,
    inner: BTreeMap<(usize, usize), Corr>,
}

impl<'a> MckEngine<'a> {
    pub fn new(ps: &'a ProjectorSet) -> Self {
        MckEngine {
            ps,
            delta: Corr::small_diagonal(&ps.model),
            inner: BTreeMap::new(),
        }
    }

    fn inner(&mut self, i: usize, j: usize) -> Result<Corr, MotiveError> {
        if let Some(c) = self.inner.get(&(i, j)) {
            return Ok(c.clone());
        }
        let model = &self.ps.model;
        let (pi, pj) = (self.ps.get(i), self.ps.get(j));
        let c = if pi.is_zero() || pj.is_zero() {
            Corr::zero(2, 1)
        } else {
            Corr::compose(model, &self.delta, &Corr::exterior(model, &pi, &pj))?
        };
        self.inner.insert((i, j), c.clone());
        Ok(c)
    }

    pub fn obstruction(
        &mut self,
        i: usize,
        j: usize,
        k: usize,
    ) -> Result<Obstruction, MotiveError> {
        let top = 2 * self.ps.n as usize;
        if i > top || j > top || k > top {
            return Err(MotiveError::OutOfRange(format!(
                "({i},{j},{k}) beyond 2n = {top}"
            )));
        }
        let model = &self.ps.model;
        let inner = self.inner(i, j)?;
        let pk = self.ps.get(k);
        let class = if inner.is_zero() || pk.is_zero() {
            Corr::zero(2, 1)
        } else {
            Corr::compose(model, &pk, &inner)?
        };
        let swapped = Corr::new(2, 1, tensor::permute(model, class.tensor(), &[1, 0, 2]))?;
        let symmetrized = class.add(&swapped)?.scaled(&frac(1, 2));
        let sum_degree = (k == i + j).then(|| class == inner);
        Ok(Obstruction {
            i,
            j,
            k,
            class,
            symmetrized,
            sum_degree,
        })
    }

    /// The sum-degree identity for i + j beyond 2n, where π^{i+j} is zero.
    fn overflow_condition(&mut self, i: usize, j: usize) -> Result<bool, MotiveError> {
        Ok(self.inner(i, j)?.is_zero())
    }
}

pub fn mck_obstruction(n: u32, i: usize, j: usize, k: usize) -> Result<Obstruction, MotiveError> {
    let ps = ck_projectors_cubic(n)?;
    MckEngine::new(&ps).obstruction(i, j, k)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MckSweep {
    pub n: u32,
    pub triples: usize,
    pub vanishing: usize,
    pub sum_degree_checked: usize,
    pub failures: Vec<(usize, usize, usize)>,
}

impl MckSweep {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every triple (i,j,k) in [0,2n]³: vanishing for k ≠ i+j, the sum-degree identity for k = i+j.
pub fn mck_sweep(ps: &ProjectorSet) -> Result<MckSweep, MotiveError> {
    let top = 2 * ps.n as usize;
    let mut engine = MckEngine::new(ps);
    let mut sweep = MckSweep {
        n: ps.n,
        triples: 0,
        vanishing: 0,
        sum_degree_checked: 0,
        failures: Vec::new(),
    };
    for i in 0..=top {
        for j in 0..=top {
            if i + j > top {
                sweep.sum_degree_checked += 1;
                if !engine.overflow_condition(i, j)? {
                    sweep.failures.push((i, j, i + j));
                }
            }
            for k in 0..=top {
                let o = engine.obstruction(i, j, k)?;
                sweep.triples += 1;
                if o.sum_degree.is_some() {
                    sweep.sum_degree_checked += 1;
                } else if o.vanishes() {
                    sweep.vanishing += 1;
                }
                if !o.passes() {
                    sweep.failures.push((i, j, k));
                }
            }
        }
    }
    Ok(sweep)
}

/// deg(Δ·Δ) on X×X by tensor contraction.
pub fn diagonal_self_intersection(model: &CohModel) -> Scalar {
    let d = tensor::diagonal(model);
    tensor::integrate(model, &tensor::product(model, &d, &d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projectors_for_small_n() {
        for n in [3, 4] {
            let ps = ck_projectors_cubic(n).unwrap();
            let r = verify_ck_axioms(&ps).unwrap();
            assert!(r.holds(), "{:?}", r.failures);
            assert!(verify_self_duality(&ps));
        }
    }

    #[test]
    fn first_projector_of_fourfold() {
        let ps = ck_projectors_cubic(4).unwrap();
        assert_eq!(ps.class(0).unwrap().render(ps.model()), "1/3·p₁*h^4");
    }

    #[test]
    fn perturbed_set_fails() {
        let ps = ck_projectors_cubic(4).unwrap();
        let alg = CubicAlgebra::new(4);
        let c = ps.class(0).unwrap().symbolic.clone().unwrap();
        let bad = c.add(&decomposable(&alg, 3, 1).scaled(&frac(1, 3)));
        let bad = CorrClass::from_symbolic(ps.model(), bad, 1).unwrap();
        let ps = ps.with_projector(0, bad);
        let r = verify_ck_axioms(&ps).unwrap();
        assert!(r.failures.iter().any(|f| f.contains("π^0∘π^2")));
        assert!(!verify_self_duality(&ps));
    }

    #[test]
    fn obstructions_on_fourfold() {
        let ps = ck_projectors_cubic(4).unwrap();
        let mut e = MckEngine::new(&ps);
        assert!(e.obstruction(2, 2, 0).unwrap().vanishes());
        assert_eq!(e.obstruction(2, 2, 4).unwrap().sum_degree, Some(true));
        assert_eq!(e.obstruction(4, 4, 8).unwrap().sum_degree, Some(true));
        assert_eq!(e.obstruction(0, 0, 0).unwrap().sum_degree, Some(true));
    }

    #[test]
    fn euler_characteristic_gate() {
        for n in 2..=5 {
            let model = CohModel::cubic(n).unwrap();
            assert_eq!(
                diagonal_self_intersection(&model),
                int(model.euler_characteristic())
            );
        }
    }
}
