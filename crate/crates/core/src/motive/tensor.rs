//! Künneth tensors in H*(X^k) and the operations on them that need a model:
//! cup product with Koszul signs, pullback, pushforward and the diagonal classes.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::exact::{int, Scalar};

use super::model::CohModel;

/// A linear combination of pure tensors x_{i_1}⊗…⊗x_{i_k}.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        Tensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn pure(index: Vec<usize>, coeff: Scalar) -> Self {
        let mut t = Tensor::zero(index.len());
        t.add_term(index, coeff);
        t
    }

    pub fn from_vec(v: &[Scalar]) -> Self {
        let mut t = Tensor::zero(1);
        for (i, c) in v.iter().enumerate() {
            t.add_term(vec![i], c.clone());
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, index: &[usize]) -> Scalar {
        self.terms.get(index).cloned().unwrap_or_else(|| int(0))
    }

    pub fn add_term(&mut self, index: Vec<usize>, coeff: Scalar) {
        debug_assert_eq!(index.len(), self.arity);
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&index) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&index);
                }
            }
            None => {
                self.terms.insert(index, coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Tensor, k: &Scalar) {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        for (i, c) in &other.terms {
            self.add_term(i.clone(), c * k);
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(other, &int(1));
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(other, &int(-1));
        out
    }

    pub fn scaled(&self, k: &Scalar) -> Tensor {
        let mut out = Tensor::zero(self.arity);
        out.add_scaled(self, k);
        out
    }

    /// Readable form using the model's basis labels.
    pub fn render(&self, model: &CohModel) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (idx, c)) in self.terms.iter().enumerate() {
            let body: Vec<&str> = idx.iter().map(|&i| model.label(i)).collect();
            let body = if body.is_empty() {
                "1".to_string()
            } else {
                body.join("⊗")
            };
            let abs = c.abs();
            let sep = match (n, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(sep);
            if abs == int(1) {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{abs}·{body}"));
            }
        }
        out
    }
}

fn odd(model: &CohModel, i: usize) -> bool {
    model.degree(i) % 2 == 1
}

/// Koszul sign of (x_1⊗…⊗x_k)·(y_1⊗…⊗y_k) = ± Π x_i y_i: parity of Σ_{i>j} |x_i||y_j|.
pub fn koszul_product_sign(model: &CohModel, xs: &[usize], ys: &[usize]) -> bool {
    let mut parity = false;
    let mut odd_y_before = false;
    for (x, y) in xs.iter().zip(ys) {
        if odd(model, *x) && odd_y_before {
            parity = !parity;
        }
        if odd(model, *y) {
            odd_y_before = !odd_y_before;
        }
    }
    parity
}

fn apply_sign(c: Scalar, negative: bool) -> Scalar {
    if negative {
        -c
    } else {
        c
    }
}

/// Cup product in H*(X^k).
pub fn product(model: &CohModel, a: &Tensor, b: &Tensor) -> Tensor {
    assert_eq!(a.arity, b.arity, "arity mismatch");
    let mut out = Tensor::zero(a.arity);
    for (xs, cx) in &a.terms {
        for (ys, cy) in &b.terms {
            let sign = koszul_product_sign(model, xs, ys);
            let mut partial: Vec<(Vec<usize>, Scalar)> =
                vec![(Vec::new(), apply_sign(cx * cy, sign))];
            for (x, y) in xs.iter().zip(ys) {
                let prod = model.product(*x, *y);
                if prod.is_empty() {
                    partial.clear();
                    break;
                }
                let mut next = Vec::with_capacity(partial.len() * prod.len());
                for (idx, c) in &partial {
                    for (k, pc) in prod {
                        let mut idx = idx.clone();
                        idx.push(*k);
                        next.push((idx, c * pc));
                    }
                }
                partial = next;
            }
            for (idx, c) in partial {
                out.add_term(idx, c);
            }
        }
    }
    out
}

/// Moves factor i to position `perm[i]`, with the Koszul sign of the permutation.
pub fn permute(model: &CohModel, t: &Tensor, perm: &[usize]) -> Tensor {
    assert_eq!(perm.len(), t.arity, "permutation length");
    let mut out = Tensor::zero(t.arity);
    for (idx, c) in &t.terms {
        let mut negative = false;
        for i in 0..idx.len() {
            for j in i + 1..idx.len() {
                if perm[i] > perm[j] && odd(model, idx[i]) && odd(model, idx[j]) {
                    negative = !negative;
                }
            }
        }
        let mut new = vec![0; idx.len()];
        for (i, &x) in idx.iter().enumerate() {
            new[perm[i]] = x;
        }
        out.add_term(new, apply_sign(c.clone(), negative));
    }
    out
}

/// Pullback along the projection X^arity → X^k onto the given positions.
pub fn pullback(model: &CohModel, t: &Tensor, positions: &[usize], arity: usize) -> Tensor {
    assert_eq!(positions.len(), t.arity, "one position per factor");
    let mut padded = Tensor::zero(arity);
    for (idx, c) in &t.terms {
        let mut new = idx.clone();
        new.resize(arity, model.unit());
        padded.add_term(new, c.clone());
    }
    let mut perm: Vec<usize> = positions.to_vec();
    perm.extend((0..arity).filter(|p| !positions.contains(p)));
    permute(model, &padded, &perm)
}

/// Pushforward to the factors in `keep` (kept in increasing order), integrating the rest.
pub fn pushforward(model: &CohModel, t: &Tensor, keep: &[usize]) -> Tensor {
    let mut out = Tensor::zero(keep.len());
    for (idx, c) in &t.terms {
        let mut coeff = c.clone();
        for (pos, &x) in idx.iter().enumerate() {
            if !keep.contains(&pos) {
                coeff *= model.integral(x);
            }
        }
        if !coeff.is_zero() {
            out.add_term(keep.iter().map(|&p| idx[p]).collect(), coeff);
        }
    }
    out
}

pub fn integrate(model: &CohModel, t: &Tensor) -> Scalar {
    pushforward(model, t, &[]).coefficient(&[])
}

/// The class of the diagonal in X×X.
pub fn diagonal(model: &CohModel) -> Tensor {
    let mut t = Tensor::zero(2);
    for (s, u, c) in model.diagonal_terms() {
        t.add_term(vec![*s, *u], c.clone());
    }
    t
}

/// The class of {(x,…,x)} in X^k, built as Δ₁₂·Δ₂₃·…·Δ_{k-1,k}.
pub fn multi_diagonal(model: &CohModel, k: usize) -> Tensor {
    match k {
        0 => Tensor::pure(vec![], int(1)),
        1 => Tensor::pure(vec![model.unit()], int(1)),
        _ => {
            let delta = diagonal(model);
            let mut acc = pullback(model, &delta, &[0, 1], k);
            for i in 1..k - 1 {
                acc = product(model, &acc, &pullback(model, &delta, &[i, i + 1], k));
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_self_intersection_is_euler_characteristic() {
        for model in [CohModel::cubic(3).unwrap(), CohModel::curve(2).unwrap()] {
            let d = diagonal(&model);
            let dd = product(&model, &d, &d);
            assert_eq!(integrate(&model, &dd), int(model.euler_characteristic()));
        }
    }

    #[test]
    fn small_diagonal_multiplies() {
        let model = CohModel::curve(1).unwrap();
        let delta = multi_diagonal(&model, 3);
        let ab = pullback(&model, &Tensor::pure(vec![1, 2], int(1)), &[0, 1], 3);
        let image = pushforward(&model, &product(&model, &delta, &ab), &[2]);
        let expected = Tensor::pure(vec![3], int(1));
        assert_eq!(image, expected);
    }
}
