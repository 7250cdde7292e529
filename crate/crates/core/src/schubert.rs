//! Schubert calculus on Gr(2, m), the Grassmannian of lines in P^{m-1}.
//!
//! Classes are indexed by two-row partitions inside the (m-2) x 2 box. The
//! special classes `g = σ_{1,0}` and `c = σ_{1,1}` act by Pieri's rule; every
//! other product goes through the expression of a Schubert class as a
//! polynomial in g and c.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{big, binomial, int, span_rank, ExactMatrix, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchubertError {
    #[error("partition ({a},{b}) does not fit in the box of Gr(2,{m})")]
    OutOfBox { a: u32, b: u32, m: u32 },
    #[error("Gr(2,{0}) is not defined")]
    BadAmbient(u32),
    #[error("classes live on Gr(2,{0}) and Gr(2,{1})")]
    AmbientMismatch(u32, u32),
}

/// σ_{a,b} with a ≥ b ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoRowPartition {
    a: u32,
    b: u32,
}

impl TwoRowPartition {
    pub fn new(a: u32, b: u32, m: u32) -> Result<Self, SchubertError> {
        if m < 2 || b > a || a > m - 2 {
            return Err(SchubertError::OutOfBox { a, b, m });
        }
        Ok(TwoRowPartition { a, b })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn codegree(&self) -> u32 {
        self.a + self.b
    }

    /// The partition whose class pairs to 1 with this one.
    pub fn complement(&self, m: u32) -> TwoRowPartition {
        TwoRowPartition {
            a: m - 2 - self.b,
            b: m - 2 - self.a,
        }
    }
}

impl fmt::Display for TwoRowPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ_{{{},{}}}", self.a, self.b)
    }
}

/// All partitions of the given codegree in the box of Gr(2, m), largest first row first.
pub fn partitions_of_codegree(m: u32, d: u32) -> Vec<TwoRowPartition> {
    if m < 2 {
        return Vec::new();
    }
    let top = m - 2;
    (0..=d / 2)
        .map(|b| (d - b, b))
        .filter(|&(a, b)| a <= top && b <= a)
        .map(|(a, b)| TwoRowPartition { a, b })
        .rev()
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Special {
    G,
    C,
}

/// A ℚ-linear combination of Schubert classes on Gr(2, m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertElement {
    m: u32,
    terms: BTreeMap<TwoRowPartition, Scalar>,
}

impl SchubertElement {
    pub fn zero(m: u32) -> Self {
        SchubertElement {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(m: u32) -> Self {
        Self::class(m, TwoRowPartition { a: 0, b: 0 })
    }

    pub fn point(m: u32) -> Self {
        Self::class(m, TwoRowPartition { a: m - 2, b: m - 2 })
    }

    pub fn class(m: u32, p: TwoRowPartition) -> Self {
        let mut e = Self::zero(m);
        e.add_term(p, Scalar::one());
        e
    }

    pub fn ambient(&self) -> u32 {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<TwoRowPartition, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, p: &TwoRowPartition) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: TwoRowPartition, coeff: Scalar) {
        let entry = self.terms.entry(p).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn scaled(&self, k: &Scalar) -> Self {
        let mut out = Self::zero(self.m);
        if k.is_zero() {
            return out;
        }
        for (p, c) in &self.terms {
            out.terms.insert(*p, c * k);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, SchubertError> {
        if self.m != other.m {
            return Err(SchubertError::AmbientMismatch(self.m, other.m));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(*p, c.clone());
        }
        Ok(out)
    }

    /// Pieri's rule for the two special classes.
    pub fn mul_special(&self, s: Special) -> Self {
        let top = self.m - 2;
        let mut out = Self::zero(self.m);
        for (p, coeff) in &self.terms {
            match s {
                Special::G => {
                    if p.a < top {
                        out.add_term(TwoRowPartition { a: p.a + 1, b: p.b }, coeff.clone());
                    }
                    if p.b < p.a {
                        out.add_term(TwoRowPartition { a: p.a, b: p.b + 1 }, coeff.clone());
                    }
                }
                Special::C => {
                    if p.a < top {
                        out.add_term(
                            TwoRowPartition {
                                a: p.a + 1,
                                b: p.b + 1,
                            },
                            coeff.clone(),
                        );
                    }
                }
            }
        }
        out
    }

    /// Multiplies by g^a c^b.
    pub fn mul_monomial(&self, a: u32, b: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..b {
            out = out.mul_special(Special::C);
        }
        for _ in 0..a {
            out = out.mul_special(Special::G);
        }
        out
    }

    pub fn mul_poly(&self, p: &WeightedGCPoly) -> Self {
        let mut out = Self::zero(self.m);
        for (&(a, b), coeff) in &p.coeffs {
            let part = self.mul_monomial(a, b).scaled(coeff);
            out = out.add(&part).expect("same ambient");
        }
        out
    }

    /// Product of two arbitrary elements, by expanding `other` in g and c.
    pub fn mul(&self, other: &Self) -> Result<Self, SchubertError> {
        if self.m != other.m {
            return Err(SchubertError::AmbientMismatch(self.m, other.m));
        }
        Ok(self.mul_poly(&other.as_gc_poly()))
    }

    /// A g,c-polynomial mapping to this element.
    pub fn as_gc_poly(&self) -> WeightedGCPoly {
        let mut out = WeightedGCPoly::zero();
        for (p, c) in &self.terms {
            out = out.add(&schubert_polynomial(*p).scaled(c));
        }
        out
    }

    /// Push-forward to a point: the coefficient of σ_{m-2,m-2}.
    pub fn degree(&self) -> Scalar {
        let top = self.m - 2;
        self.coefficient(&TwoRowPartition { a: top, b: top })
    }

    /// Coefficients in codegree `d`, listed in `partitions_of_codegree` order.
    pub fn coordinates(&self, d: u32) -> Vec<Scalar> {
        partitions_of_codegree(self.m, d)
            .iter()
            .map(|p| self.coefficient(p))
            .collect()
    }
}

impl fmt::Display for SchubertElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.terms.iter().rev() {
            write_term(f, c, &p.to_string(), first)?;
            first = false;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &Scalar, symbol: &str, first: bool) -> fmt::Result {
    let negative = *c < Scalar::zero();
    let mag = if negative { -c.clone() } else { c.clone() };
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
        (true, false) => {}
    }
    if symbol.is_empty() {
        write!(f, "{}", mag)
    } else if mag.is_one() {
        write!(f, "{}", symbol)
    } else if mag.is_integer() {
        write!(f, "{}{}", mag, symbol)
    } else {
        write!(f, "({}){}", mag, symbol)
    }
}

/// The class of g^a c^b on Gr(2, m).
pub fn gc_monomial(a: u32, b: u32, m: u32) -> SchubertElement {
    SchubertElement::unit(m).mul_monomial(a, b)
}

/// Polynomial in g (weight 1) and c (weight 2) with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightedGCPoly {
    coeffs: BTreeMap<(u32, u32), Scalar>,
}

impl WeightedGCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(a: u32, b: u32, coeff: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, coeff);
        p
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), Scalar> {
        &self.coeffs
    }

    pub fn coefficient(&self, a: u32, b: u32) -> Scalar {
        self.coeffs
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, a: u32, b: u32, coeff: Scalar) {
        let entry = self.coeffs.entry((a, b)).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&(a, b));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &other.coeffs {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn scaled(&self, k: &Scalar) -> Self {
        let mut out = Self::zero();
        if k.is_zero() {
            return out;
        }
        for (&key, c) in &self.coeffs {
            out.coeffs.insert(key, c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a1, b1), c1) in &self.coeffs {
            for (&(a2, b2), c2) in &other.coeffs {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    /// The common weighted degree, if the polynomial is homogeneous and nonzero.
    pub fn weighted_degree(&self) -> Option<u32> {
        let mut degs = self.coeffs.keys().map(|&(a, b)| a + 2 * b);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn evaluate(&self, m: u32) -> SchubertElement {
        SchubertElement::unit(m).mul_poly(self)
    }
}

impl fmt::Display for WeightedGCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // Highest power of g first.
        let mut first = true;
        for (&(a, b), c) in self.coeffs.iter().rev() {
            write_term(f, c, &gc_symbol(a, b), first)?;
            first = false;
        }
        Ok(())
    }
}

pub fn gc_symbol(a: u32, b: u32) -> String {
    let part = |name: &str, e: u32| match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{}^{}", name, e),
    };
    format!("{}{}", part("g", a), part("c", b))
}

/// σ_k = Σ_j (-1)^j C(k-j, j) g^{k-2j} c^j, from σ_{k+1} = g σ_k - c σ_{k-1}.
pub fn special_class_polynomial(k: u32) -> WeightedGCPoly {
    let mut p = WeightedGCPoly::zero();
    for j in 0..=k / 2 {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = binomial((k - j) as i64, j as i64) * sign;
        p.add_term(k - 2 * j, j, big(c));
    }
    p
}

/// σ_{a,b} = c^b σ_{a-b}.
pub fn schubert_polynomial(p: TwoRowPartition) -> WeightedGCPoly {
    special_class_polynomial(p.a - p.b).mul(&WeightedGCPoly::monomial(0, p.b, Scalar::one()))
}

/// The two generators R_{n+1}, R_{n+2} of the ideal of relations of CH*(Gr(2, n+2)).
pub fn presentation_relations(n: u32) -> (WeightedGCPoly, WeightedGCPoly) {
    (
        special_class_polynomial(n + 1),
        special_class_polynomial(n + 2),
    )
}

/// Per-codegree bookkeeping of the presentation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationDegree {
    pub codegree: u32,
    pub monomials: usize,
    pub ideal_rank: usize,
    pub quotient_dim: usize,
    pub schubert_count: usize,
    pub evaluation_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationReport {
    pub n: u32,
    pub relations: (WeightedGCPoly, WeightedGCPoly),
    pub relations_vanish: bool,
    pub degrees: Vec<PresentationDegree>,
}

impl PresentationReport {
    pub fn holds(&self) -> bool {
        self.relations_vanish
            && self.degrees.iter().all(|d| {
                d.quotient_dim == d.schubert_count && d.evaluation_rank == d.schubert_count
            })
    }

    pub fn schubert_counts(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.schubert_count).collect()
    }
}

fn monomials_of_weight(d: u32) -> Vec<(u32, u32)> {
    (0..=d / 2).map(|b| (d - 2 * b, b)).collect()
}

/// Checks that R_{n+1}, R_{n+2} vanish on Gr(2, n+2) and generate all relations in codegree ≤ 2n.
pub fn verify_presentation(n: u32) -> Result<PresentationReport, SchubertError> {
    if n < 1 {
        return Err(SchubertError::BadAmbient(n + 2));
    }
    let m = n + 2;
    let relations = presentation_relations(n);
    let relations_vanish = relations.0.evaluate(m).is_zero() && relations.1.evaluate(m).is_zero();
    let mut degrees = Vec::new();
    for d in 0..=2 * n {
        let monos = monomials_of_weight(d);
        let index: BTreeMap<(u32, u32), usize> =
            monos.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let mut ideal = Vec::new();
        for (rel, w) in [(&relations.0, n + 1), (&relations.1, n + 2)] {
            if w > d {
                continue;
            }
            for (a, b) in monomials_of_weight(d - w) {
                let multiple = rel.mul(&WeightedGCPoly::monomial(a, b, Scalar::one()));
                let mut v = vec![Scalar::zero(); monos.len()];
                for (key, c) in multiple.coeffs() {
                    v[index[key]] = c.clone();
                }
                ideal.push(v);
            }
        }
        let ideal_rank = span_rank(&ideal, monos.len());
        let schubert = partitions_of_codegree(m, d);
        let columns: Vec<Vec<Scalar>> = monos
            .iter()
            .map(|&(a, b)| gc_monomial(a, b, m).coordinates(d))
            .collect();
        let eval = ExactMatrix::from_columns(&columns, schubert.len()).expect("consistent sizes");
        degrees.push(PresentationDegree {
            codegree: d,
            monomials: monos.len(),
            ideal_rank,
            quotient_dim: monos.len() - ideal_rank,
            schubert_count: schubert.len(),
            evaluation_rank: crate::exact::rank(&eval),
        });
    }
    Ok(PresentationReport {
        n,
        relations,
        relations_vanish,
        degrees,
    })
}

/// Catalan number C_k, used as an independent check of deg g^{2(m-2)}.
pub fn catalan(k: u32) -> Scalar {
    big(binomial(2 * k as i64, k as i64)) / int(k as i64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: u32, b: u32) -> TwoRowPartition {
        TwoRowPartition::new(a, b, 6).unwrap()
    }

    #[test]
    fn unit_times_g() {
        let e = SchubertElement::unit(5).mul_special(Special::G);
        assert_eq!(
            e,
            SchubertElement::class(5, TwoRowPartition::new(1, 0, 5).unwrap())
        );
    }

    #[test]
    fn pieri_on_gr26() {
        let mut e = SchubertElement::zero(6);
        e.add_term(p(4, 0), int(1));
        e.add_term(p(3, 1), int(3));
        e.add_term(p(2, 2), int(2));
        let mut want = SchubertElement::zero(6);
        want.add_term(p(4, 1), int(4));
        want.add_term(p(3, 2), int(5));
        assert_eq!(e.mul_special(Special::G), want);

        let mut e = SchubertElement::zero(6);
        e.add_term(p(4, 2), int(9));
        e.add_term(p(3, 3), int(5));
        assert_eq!(
            e.mul_special(Special::C),
            SchubertElement::point(6).scaled(&int(5))
        );
    }

    #[test]
    fn relations_small_n() {
        let (r3, r4) = presentation_relations(2);
        assert_eq!(r3.to_string(), "g^3 - 2gc");
        assert_eq!(r4.to_string(), "g^4 - 3g^2c + c^2");
        assert_eq!(
            presentation_relations(4).0.to_string(),
            "g^5 - 4g^3c + 3gc^2"
        );
    }

    #[test]
    fn presentation_gr24() {
        let r = verify_presentation(2).unwrap();
        assert!(r.holds());
        assert_eq!(r.schubert_counts(), vec![1, 1, 2, 1, 1]);
        assert!(verify_presentation(1).unwrap().holds());
    }

    #[test]
    fn g_squared_display() {
        assert_eq!(gc_monomial(2, 0, 6).to_string(), "σ_{2,0} + σ_{1,1}");
    }

    #[test]
    fn out_of_box_rejected() {
        assert!(TwoRowPartition::new(5, 0, 6).is_err());
        assert!(TwoRowPartition::new(1, 2, 6).is_err());
    }
}
