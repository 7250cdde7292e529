//! Correspondences X^a ⊢ X^b as Künneth tensors on X^{a+b}, source factors first.

use std::collections::HashMap;

use crate::exact::{int, ExactMatrix, Scalar};

use super::model::CohModel;
use super::tensor::{self, koszul_product_sign, Tensor};
use super::MotiveError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corr {
    source: usize,
    target: usize,
    tensor: Tensor,
}

impl Corr {
    pub fn new(source: usize, target: usize, tensor: Tensor) -> Result<Self, MotiveError> {
        if tensor.arity() != source + target {
            return Err(MotiveError::Arity {
                expected: source + target,
                found: tensor.arity(),
            });
        }
        Ok(Corr {
            source,
            target,
            tensor,
        })
    }

    pub fn zero(source: usize, target: usize) -> Self {
        Corr {
            source,
            target,
            tensor: Tensor::zero(source + target),
        }
    }

    pub fn identity(model: &CohModel) -> Self {
        Corr {
            source: 1,
            target: 1,
            tensor: tensor::diagonal(model),
        }
    }

    /// The small diagonal of X³ as a correspondence X×X ⊢ X.
    pub fn small_diagonal(model: &CohModel) -> Self {
        Corr {
            source: 2,
            target: 1,
            tensor: tensor::multi_diagonal(model, 3),
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }

    fn same_shape(&self, other: &Corr) -> Result<(), MotiveError> {
        if (self.source, self.target) != (other.source, other.target) {
            return Err(MotiveError::Shape {
                left: (self.source, self.target),
                right: (other.source, other.target),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Corr) -> Result<Corr, MotiveError> {
        self.same_shape(other)?;
        Ok(Corr {
            tensor: self.tensor.add(&other.tensor),
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Corr) -> Result<Corr, MotiveError> {
        self.same_shape(other)?;
        Ok(Corr {
            tensor: self.tensor.sub(&other.tensor),
            ..self.clone()
        })
    }

    pub fn scaled(&self, k: &Scalar) -> Corr {
        Corr {
            tensor: self.tensor.scaled(k),
            ..self.clone()
        }
    }

    /// outer ∘ inner = p13_*(p12^*inner · p23^*outer), contracting the middle block.
    pub fn compose(model: &CohModel, outer: &Corr, inner: &Corr) -> Result<Corr, MotiveError> {
        if inner.target != outer.source {
            return Err(MotiveError::Shape {
                left: (outer.source, outer.target),
                right: (inner.source, inner.target),
            });
        }
        let (a, b) = (inner.source, inner.target);
        let mut by_source: HashMap<&[usize], Vec<(&[usize], &Scalar)>> = HashMap::new();
        for (idx, c) in outer.tensor.terms() {
            by_source.entry(&idx[..b]).or_default().push((&idx[b..], c));
        }
        let mut out = Tensor::zero(a + outer.target);
        for (idx, c) in inner.tensor.terms() {
            let (s, t) = idx.split_at(a);
            // Every middle factor must pair nontrivially with its partner.
            let mut candidates: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), c.clone())];
            for &ti in t {
                let mut next = Vec::new();
                for (prefix, pc) in &candidates {
                    for (partner, g) in model.partners(ti) {
                        let mut p = prefix.clone();
                        p.push(*partner);
                        next.push((p, pc * g));
                    }
                }
                candidates = next;
            }
            for (t2, coeff) in candidates {
                let Some(rows) = by_source.get(t2.as_slice()) else {
                    continue;
                };
                let coeff = if koszul_product_sign(model, t, &t2) {
                    -coeff
                } else {
                    coeff
                };
                for (u, gc) in rows {
                    let mut key = s.to_vec();
                    key.extend_from_slice(u);
                    out.add_term(key, &coeff * *gc);
                }
            }
        }
        Ok(Corr {
            source: a,
            target: outer.target,
            tensor: out,
        })
    }

    /// Swaps source and target blocks.
    pub fn transpose(&self, model: &CohModel) -> Corr {
        let (a, b) = (self.source, self.target);
        let perm: Vec<usize> = (0..a).map(|i| b + i).chain(0..b).collect();
        Corr {
            source: b,
            target: a,
            tensor: tensor::permute(model, &self.tensor, &perm),
        }
    }

    /// Realization f_*(u) = p_target*(f · p_source^*u).
    pub fn act(&self, model: &CohModel, u: &Tensor) -> Result<Tensor, MotiveError> {
        if u.arity() != self.source {
            return Err(MotiveError::Arity {
                expected: self.source,
                found: u.arity(),
            });
        }
        let arity = self.source + self.target;
        let positions: Vec<usize> = (0..self.source).collect();
        let pulled = tensor::pullback(model, u, &positions, arity);
        let prod = tensor::product(model, &self.tensor, &pulled);
        let keep: Vec<usize> = (self.source..arity).collect();
        Ok(tensor::pushforward(model, &prod, &keep))
    }

    /// Matrix of f_* on H*(X) for a correspondence X ⊢ X; column p is f_*(x_p).
    pub fn realization_matrix(&self, model: &CohModel) -> Result<ExactMatrix, MotiveError> {
        if (self.source, self.target) != (1, 1) {
            return Err(MotiveError::Shape {
                left: (self.source, self.target),
                right: (1, 1),
            });
        }
        let size = model.size();
        let mut m = ExactMatrix::zeros(size, size);
        for p in 0..size {
            let image = self.act(model, &Tensor::pure(vec![p], int(1)))?;
            for (idx, c) in image.terms() {
                m.set(idx[0], p, c.clone());
            }
        }
        Ok(m)
    }

    /// f ⊗ g : X^{a+c} ⊢ X^{b+d}.
    pub fn exterior(model: &CohModel, f: &Corr, g: &Corr) -> Corr {
        let (a, b, c, d) = (f.source, f.target, g.source, g.target);
        let arity = a + b + c + d;
        let fpos: Vec<usize> = (0..a).chain(a + c..a + c + b).collect();
        let gpos: Vec<usize> = (a..a + c).chain(a + c + b..arity).collect();
        let pf = tensor::pullback(model, &f.tensor, &fpos, arity);
        let pg = tensor::pullback(model, &g.tensor, &gpos, arity);
        Corr {
            source: a + c,
            target: b + d,
            tensor: tensor::product(model, &pf, &pg),
        }
    }

    /// Pushforward to a point.
    pub fn degree(&self, model: &CohModel) -> Scalar {
        tensor::integrate(model, &self.tensor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        for model in [CohModel::cubic(3).unwrap(), CohModel::curve(2).unwrap()] {
            let id = Corr::identity(&model);
            assert_eq!(Corr::compose(&model, &id, &id).unwrap(), id);
            assert!(id.realization_matrix(&model).unwrap() == ExactMatrix::identity(model.size()));
            assert_eq!(id.transpose(&model), id);
        }
    }

    #[test]
    fn small_diagonal_realizes_the_cup_product() {
        for model in [CohModel::cubic(3).unwrap(), CohModel::curve(2).unwrap()] {
            let delta = Corr::small_diagonal(&model);
            for i in 0..model.size() {
                for j in 0..model.size() {
                    let image = delta
                        .act(&model, &Tensor::pure(vec![i, j], int(1)))
                        .unwrap();
                    let mut expected = Tensor::zero(1);
                    for (k, c) in model.product(i, j) {
                        expected.add_term(vec![*k], c.clone());
                    }
                    assert_eq!(image, expected, "x{i}·x{j} in {}", model.name());
                }
            }
        }
    }
}
