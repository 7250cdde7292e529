//! Symbolic cycles on X^k built from partial diagonals.
//!
//! A monomial is a set partition of the factors; each block B stands for the diagonal
//! X ↪ X^B carrying a class on X. Products join partitions and pick up an excess
//! factor c_top(T_X)^e with e = |B| + 1 - p - q for a joined block made of p blocks from
//! the left and q from the right. Pushforward forgets factors; a block forgotten entirely
//! contributes the degree of its class.

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::Scalar;

use super::formal::Ring;
use super::model::CohModel;
use super::tensor::{self, Tensor};
use super::MotiveError;

/// Rewrites are abandoned after this many steps.
pub const STEP_BOUND: usize = 10_000;

pub trait ClassAlgebra {
    type Coeff: Ring;
    type Class: Clone + Ord + fmt::Debug;

    /// Complex dimension of X.
    fn dim(&self) -> u32;
    fn unit_class(&self) -> Self::Class;
    /// Codimension of a class.
    fn class_degree(&self, c: &Self::Class) -> u32;
    /// Product of two classes as a linear combination; empty when zero.
    fn multiply(&self, a: &Self::Class, b: &Self::Class) -> Vec<(Self::Coeff, Self::Class)>;
    fn top_chern(&self) -> Vec<(Self::Coeff, Self::Class)>;
    /// Degree of a class of codimension dim.
    fn evaluate(&self, c: &Self::Class) -> Self::Coeff;
    /// Optional rewrite of Δ_B·c (B of size ≥ 2) as Σ coeff · (c₁ on the first factor) × (Δ_{B∖first}·c₂).
    fn split(&self, _c: &Self::Class) -> Option<Vec<(Self::Coeff, Self::Class, Self::Class)>> {
        None
    }
    fn render_class(&self, c: &Self::Class) -> String;
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Block<C> {
    pub factors: Vec<usize>,
    pub class: C,
}

/// Blocks sorted by their smallest factor; every factor appears exactly once.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial<C> {
    blocks: Vec<Block<C>>,
}

impl<C: Clone + Ord> Monomial<C> {
    fn new(mut blocks: Vec<Block<C>>) -> Self {
        for b in &mut blocks {
            b.factors.sort();
        }
        blocks.sort_by(|a, b| a.factors.cmp(&b.factors));
        Monomial { blocks }
    }

    pub fn blocks(&self) -> &[Block<C>] {
        &self.blocks
    }

    pub fn arity(&self) -> usize {
        self.blocks.iter().map(|b| b.factors.len()).sum()
    }

    /// Whether some block joins two or more factors.
    pub fn has_diagonal(&self) -> bool {
        self.blocks.iter().any(|b| b.factors.len() > 1)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cycle<C: Ord, R> {
    arity: usize,
    terms: BTreeMap<Monomial<C>, R>,
}

impl<C: Clone + Ord + fmt::Debug, R: Ring> Cycle<C, R> {
    pub fn zero(arity: usize) -> Self {
        Cycle {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Monomial<C>, R> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial<C>, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, k: &R) -> Self {
        let mut out = Cycle::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(k));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(&R::one().neg()))
    }

    pub fn map_coefficients(&self, f: impl Fn(&R) -> R) -> Self {
        let mut out = Cycle::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

/// Builds a monomial cycle from the listed blocks; unlisted factors get the unit class.
pub fn monomial<A: ClassAlgebra>(
    alg: &A,
    arity: usize,
    blocks: Vec<(Vec<usize>, A::Class)>,
    coeff: A::Coeff,
) -> Cycle<A::Class, A::Coeff> {
    let mut seen = vec![false; arity];
    let mut out_blocks = Vec::new();
    for (factors, class) in blocks {
        for &f in &factors {
            assert!(f < arity && !seen[f], "factor {f} repeated or out of range");
            seen[f] = true;
        }
        out_blocks.push(Block { factors, class });
    }
    for (f, s) in seen.iter().enumerate() {
        if !s {
            out_blocks.push(Block {
                factors: vec![f],
                class: alg.unit_class(),
            });
        }
    }
    let mut c = Cycle::zero(arity);
    c.add_term(Monomial::new(out_blocks), coeff);
    c
}

/// Pullback of a class on X along the i-th projection.
pub fn pullback_class<A: ClassAlgebra>(
    alg: &A,
    arity: usize,
    factor: usize,
    class: A::Class,
) -> Cycle<A::Class, A::Coeff> {
    monomial(alg, arity, vec![(vec![factor], class)], A::Coeff::one())
}

/// The partial diagonal on the listed factors.
pub fn diagonal<A: ClassAlgebra>(
    alg: &A,
    arity: usize,
    factors: Vec<usize>,
) -> Cycle<A::Class, A::Coeff> {
    monomial(
        alg,
        arity,
        vec![(factors, alg.unit_class())],
        A::Coeff::one(),
    )
}

fn class_product<A: ClassAlgebra>(
    alg: &A,
    acc: Vec<(A::Coeff, A::Class)>,
    next: &A::Class,
) -> Vec<(A::Coeff, A::Class)> {
    let mut out: Vec<(A::Coeff, A::Class)> = Vec::new();
    for (c, cls) in acc {
        for (k, prod) in alg.multiply(&cls, next) {
            out.push((c.mul(&k), prod));
        }
    }
    out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

fn multiply_monomials<A: ClassAlgebra>(
    alg: &A,
    arity: usize,
    left: &Monomial<A::Class>,
    right: &Monomial<A::Class>,
) -> Vec<(A::Coeff, Monomial<A::Class>)> {
    let mut parent: Vec<usize> = (0..arity).collect();
    for b in left.blocks.iter().chain(&right.blocks) {
        for w in b.factors.windows(2) {
            let (x, y) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[x.max(y)] = x.min(y);
        }
    }
    let mut components: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for f in 0..arity {
        let r = find(&mut parent, f);
        components.entry(r).or_default().push(f);
    }
    let top = alg.top_chern();
    let mut partial: Vec<(A::Coeff, Vec<Block<A::Class>>)> = vec![(A::Coeff::one(), Vec::new())];
    for (root, factors) in components {
        let mut lin: Vec<(A::Coeff, A::Class)> = vec![(A::Coeff::one(), alg.unit_class())];
        let mut pieces = 0usize;
        for b in left.blocks.iter().chain(&right.blocks) {
            if find(&mut parent, b.factors[0]) == root {
                pieces += 1;
                lin = class_product(alg, lin, &b.class);
            }
        }
        let excess = factors.len() + 1 - pieces;
        for _ in 0..excess {
            let mut next = Vec::new();
            for (c, cls) in lin {
                for (k, t) in &top {
                    for (k2, prod) in alg.multiply(&cls, t) {
                        next.push((c.mul(k).mul(&k2), prod));
                    }
                }
            }
            lin = next;
        }
        let mut next = Vec::new();
        for (c, blocks) in &partial {
            for (k, cls) in &lin {
                let mut bl = blocks.clone();
                bl.push(Block {
                    factors: factors.clone(),
                    class: cls.clone(),
                });
                next.push((c.mul(k), bl));
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(c, blocks)| (c, Monomial::new(blocks)))
        .collect()
}

/// Product of cycles on X^k, normalized by the algebra's split rule.
pub fn multiply<A: ClassAlgebra>(
    alg: &A,
    a: &Cycle<A::Class, A::Coeff>,
    b: &Cycle<A::Class, A::Coeff>,
) -> Result<Cycle<A::Class, A::Coeff>, MotiveError> {
    if a.arity != b.arity {
        return Err(MotiveError::Arity {
            expected: a.arity,
            found: b.arity,
        });
    }
    let mut out = Cycle::zero(a.arity);
    for (m1, c1) in &a.terms {
        for (m2, c2) in &b.terms {
            for (k, m) in multiply_monomials(alg, a.arity, m1, m2) {
                out.add_term(m, c1.mul(c2).mul(&k));
            }
        }
    }
    normalize(alg, &out)
}

/// Applies the split rule until every diagonal block is irreducible.
pub fn normalize<A: ClassAlgebra>(
    alg: &A,
    c: &Cycle<A::Class, A::Coeff>,
) -> Result<Cycle<A::Class, A::Coeff>, MotiveError> {
    let mut pending: Vec<(Monomial<A::Class>, A::Coeff)> = c
        .terms
        .iter()
        .map(|(m, k)| (m.clone(), k.clone()))
        .collect();
    let mut out = Cycle::zero(c.arity);
    let mut steps = 0;
    while let Some((m, k)) = pending.pop() {
        let target = m.blocks.iter().enumerate().find_map(|(i, b)| {
            if b.factors.len() > 1 {
                alg.split(&b.class).map(|s| (i, s))
            } else {
                None
            }
        });
        let Some((i, split)) = target else {
            out.add_term(m, k);
            continue;
        };
        steps += 1;
        if steps > STEP_BOUND {
            return Err(MotiveError::Underived(format!(
                "normalization exceeded {STEP_BOUND} steps"
            )));
        }
        let block = &m.blocks[i];
        for (coeff, first, rest) in split {
            let mut blocks = m.blocks.clone();
            blocks.remove(i);
            blocks.push(Block {
                factors: vec![block.factors[0]],
                class: first,
            });
            blocks.push(Block {
                factors: block.factors[1..].to_vec(),
                class: rest,
            });
            pending.push((Monomial::new(blocks), k.mul(&coeff)));
        }
    }
    Ok(out)
}

/// Pushforward to the factors in `keep` (sorted), renumbered 0..keep.len().
pub fn pushforward<A: ClassAlgebra>(
    alg: &A,
    c: &Cycle<A::Class, A::Coeff>,
    keep: &[usize],
) -> Cycle<A::Class, A::Coeff> {
    let mut out = Cycle::zero(keep.len());
    'terms: for (m, k) in &c.terms {
        let mut coeff = k.clone();
        let mut blocks = Vec::new();
        for b in &m.blocks {
            let kept: Vec<usize> = b
                .factors
                .iter()
                .filter_map(|f| keep.iter().position(|x| x == f))
                .collect();
            if kept.is_empty() {
                if alg.class_degree(&b.class) != alg.dim() {
                    continue 'terms;
                }
                coeff = coeff.mul(&alg.evaluate(&b.class));
            } else {
                blocks.push(Block {
                    factors: kept,
                    class: b.class.clone(),
                });
            }
        }
        out.add_term(Monomial::new(blocks), coeff);
    }
    out
}

/// Pullback along X^arity → X^k placing factor i at `positions[i]`.
pub fn pullback<A: ClassAlgebra>(
    alg: &A,
    c: &Cycle<A::Class, A::Coeff>,
    positions: &[usize],
    arity: usize,
) -> Cycle<A::Class, A::Coeff> {
    let mut out = Cycle::zero(arity);
    for (m, k) in &c.terms {
        let mut blocks: Vec<Block<A::Class>> = m
            .blocks
            .iter()
            .map(|b| Block {
                factors: b.factors.iter().map(|&f| positions[f]).collect(),
                class: b.class.clone(),
            })
            .collect();
        for f in (0..arity).filter(|f| !positions.contains(f)) {
            blocks.push(Block {
                factors: vec![f],
                class: alg.unit_class(),
            });
        }
        out.add_term(Monomial::new(blocks), k.clone());
    }
    out
}

/// Codimension of a monomial on X^k.
pub fn codimension<A: ClassAlgebra>(alg: &A, m: &Monomial<A::Class>) -> u32 {
    m.blocks
        .iter()
        .map(|b| (b.factors.len() as u32 - 1) * alg.dim() + alg.class_degree(&b.class))
        .sum()
}

const SUBSCRIPTS: [&str; 10] = ["₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"];

fn subscript(f: usize) -> &'static str {
    SUBSCRIPTS[(f + 1) % 10]
}

/// Human-readable monomial: p₁*K·p₂*z, p₁*K·Δ, δ, Δ₁₃·p₂*z.
pub fn render_monomial<A: ClassAlgebra>(alg: &A, arity: usize, m: &Monomial<A::Class>) -> String {
    let unit = alg.unit_class();
    let mut diagonals = Vec::new();
    let mut singles = Vec::new();
    for b in &m.blocks {
        let class = (b.class != unit).then(|| alg.render_class(&b.class));
        if b.factors.len() == 1 {
            if let Some(c) = class {
                singles.push(if arity == 1 {
                    c
                } else {
                    format!("p{}*{}", subscript(b.factors[0]), c)
                });
            }
            continue;
        }
        if let Some(c) = class {
            diagonals.push(format!("p{}*{}", subscript(b.factors[0]), c));
        }
        diagonals.push(if b.factors.len() == arity {
            if arity == 2 {
                "Δ".into()
            } else {
                "δ".into()
            }
        } else {
            let idx: String = b.factors.iter().map(|&f| subscript(f)).collect();
            format!("Δ{idx}")
        });
    }
    diagonals.extend(singles);
    if diagonals.is_empty() {
        "1".into()
    } else {
        diagonals.join("·")
    }
}

/// Human-readable cycle with coefficients in front: "(2 - 2g)·z".
pub fn render<A: ClassAlgebra>(alg: &A, c: &Cycle<A::Class, A::Coeff>) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, k)) in c.terms.iter().enumerate() {
        let body = render_monomial(alg, c.arity, m);
        let coeff = k.to_string();
        let (neg, coeff) = match k.as_scalar() {
            Some(s) if s < Scalar::from_integer(0.into()) => (true, (-s).to_string()),
            _ => (false, coeff),
        };
        let compound = coeff.contains(' ') || (coeff.starts_with('-') && i > 0);
        out.push_str(match (i, neg) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        });
        let coeff = if compound {
            format!("({coeff})")
        } else {
            coeff
        };
        if coeff == "1" {
            out.push_str(&body);
        } else if body == "1" {
            out.push_str(&coeff);
        } else {
            out.push_str(&format!("{coeff}·{body}"));
        }
    }
    out
}

/// Expands a symbolic cycle into Künneth tensors in a concrete model.
pub fn realize<A: ClassAlgebra>(
    model: &CohModel,
    c: &Cycle<A::Class, A::Coeff>,
    class_vec: impl Fn(&A::Class) -> Vec<Scalar>,
    coeff: impl Fn(&A::Coeff) -> Scalar,
) -> Tensor {
    let arity = c.arity;
    let mut diagonals: BTreeMap<usize, Tensor> = BTreeMap::new();
    let mut out = Tensor::zero(arity);
    for (m, k) in &c.terms {
        let mut acc = Tensor::pure(vec![model.unit(); arity], coeff(k));
        for b in &m.blocks {
            let size = b.factors.len();
            let diag = diagonals
                .entry(size)
                .or_insert_with(|| tensor::multi_diagonal(model, size))
                .clone();
            let class =
                tensor::pullback(model, &Tensor::from_vec(&class_vec(&b.class)), &[0], size);
            let block = tensor::product(model, &diag, &class);
            let placed = tensor::pullback(model, &block, &b.factors, arity);
            acc = tensor::product(model, &acc, &placed);
        }
        out = out.add(&acc);
    }
    out
}
