//! The tautological ring of the Fano variety of lines F on a smooth cubic n-fold.
//!
//! F sits in G = Gr(2, n+2) with class 18 g²c + 9 c², so the degree of any
//! g,c-monomial on F is a Schubert computation on G. The subring generated by
//! g and c modulo numerical equivalence is then the apolar algebra of that
//! degree functional.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{
    big, binomial, frac, int, is_integral, rank, rank_and_kernel, ExactMatrix, Scalar,
};
use crate::graded::GradedDims;
use crate::schubert::{
    partitions_of_codegree, presentation_relations, SchubertElement, WeightedGCPoly,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanoError {
    #[error("n = {0} is below the supported range")]
    DimensionTooSmall(u32),
    #[error("index {index} outside 0..={max}")]
    OutOfRange { index: u32, max: u32 },
    #[error("no relation of weighted degree {0} kills [F]")]
    NoRelation(u32),
    #[error("{dim} independent relations of weighted degree {degree} kill [F]")]
    Ambiguous { degree: u32, dim: usize },
    #[error("the relation has vanishing leading coefficient")]
    VanishingLeadingCoefficient,
}

#[derive(Debug, Clone)]
pub struct FanoContext {
    n: u32,
    fano_class: SchubertElement,
    /// deg_F(g^{2n-4-2b} c^b) for b = 0..=n-2.
    top_degrees: Vec<Scalar>,
}

impl FanoContext {
    pub fn new(n: u32) -> Result<Self, FanoError> {
        if n < 3 {
            return Err(FanoError::DimensionTooSmall(n));
        }
        let m = n + 2;
        let class =
            WeightedGCPoly::monomial(2, 1, int(18)).add(&WeightedGCPoly::monomial(0, 2, int(9)));
        let fano_class = class.evaluate(m);
        let dim = 2 * n - 4;
        let top_degrees = (0..=dim / 2)
            .map(|b| fano_class.mul_monomial(dim - 2 * b, b).degree())
            .collect();
        Ok(FanoContext {
            n,
            fano_class,
            top_degrees,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ambient_m(&self) -> u32 {
        self.n + 2
    }

    pub fn dim(&self) -> u32 {
        2 * self.n - 4
    }

    pub fn fano_class(&self) -> &SchubertElement {
        &self.fano_class
    }

    /// deg(g^a c^b · [F]) on G; zero unless a + 2b = dim F.
    pub fn degree_f(&self, a: u32, b: u32) -> Scalar {
        if a + 2 * b != self.dim() {
            return Scalar::zero();
        }
        self.top_degrees[b as usize].clone()
    }

    fn monomials(&self, i: u32) -> Vec<(u32, u32)> {
        (0..=i / 2).map(|b| (i - 2 * b, b)).collect()
    }

    /// Pairing of weighted-degree-i monomials against degree (dim F - i) monomials.
    pub fn pairing_matrix(&self, i: u32) -> Result<ExactMatrix, FanoError> {
        let dim = self.dim();
        if i > dim {
            return Err(FanoError::OutOfRange { index: i, max: dim });
        }
        let rows = self.monomials(i);
        let cols = self.monomials(dim - i);
        let mut m = ExactMatrix::zeros(rows.len(), cols.len());
        for (r, &(a1, b1)) in rows.iter().enumerate() {
            for (c, &(a2, b2)) in cols.iter().enumerate() {
                m.set(r, c, self.degree_f(a1 + a2, b1 + b2));
            }
        }
        Ok(m)
    }

    /// Hilbert function of the apolar algebra, degrees 0..=dim F.
    pub fn hilbert_function(&self) -> GradedDims {
        GradedDims::new(
            (0..=self.dim())
                .map(|i| rank(&self.pairing_matrix(i).expect("in range")) as u64)
                .collect(),
        )
    }

    /// After discarding dependent rows and columns the degree-i pairing is square and invertible.
    pub fn pairing_is_perfect(&self, i: u32) -> Result<bool, FanoError> {
        let m = self.pairing_matrix(i)?;
        let row_pivots = crate::exact::rref(&m.transpose()).pivots;
        let col_pivots = crate::exact::rref(&m).pivots;
        if row_pivots.len() != col_pivots.len() {
            return Ok(false);
        }
        let sub = m.select(&row_pivots, &col_pivots);
        Ok(rank(&sub) == row_pivots.len())
    }
}

/// Expected dimension of R^i(F).
pub fn r_formula(i: u32, n: u32) -> Result<u64, FanoError> {
    if n < 2 {
        return Err(FanoError::DimensionTooSmall(n));
    }
    let top = 2 * n - 4;
    if i > top {
        return Err(FanoError::OutOfRange { index: i, max: top });
    }
    Ok(if i <= n - 2 {
        ((i + 2) / 2) as u64
    } else {
        ((2 * n - 2 - i) / 2) as u64
    })
}

pub fn r_vector(n: u32) -> Result<Vec<u64>, FanoError> {
    if n < 2 {
        return Err(FanoError::DimensionTooSmall(n));
    }
    (0..=2 * n - 4).map(|i| r_formula(i, n)).collect()
}

fn r_or_zero(i: i64, n: u32) -> u64 {
    if i < 0 {
        return 0;
    }
    r_formula(i as u32, n).unwrap_or(0)
}

/// Σ_i r_i r_{k-i}.
pub fn r_convolution(k: u32, n: u32) -> u64 {
    (0..=k as i64)
        .map(|i| r_or_zero(i, n) * r_or_zero(k as i64 - i, n))
        .sum()
}

/// Upper bound for dim R^k(F×F): the convolution of the r_i plus a correction
/// in the middle range coming from the incidence and diagonal classes.
pub fn dim_rfxf_bound(k: u32, n: u32) -> Result<u64, FanoError> {
    if n < 3 {
        return Err(FanoError::DimensionTooSmall(n));
    }
    let top = 4 * n - 8;
    if k > top {
        return Err(FanoError::OutOfRange { index: k, max: top });
    }
    let conv = r_convolution(k, n);
    let (k, n) = (k as u64, n as u64);
    Ok(if k < n - 2 {
        conv
    } else if k < 2 * n - 4 {
        conv + (k - (n - 2) + 1)
    } else if k == 2 * n - 4 {
        conv + (n - 1) + 1
    } else if k <= 3 * n - 6 {
        conv + (3 * n - 6 - k + 1)
    } else {
        conv
    })
}

/// A relation P(g,c) of weighted degree n-1 with P·[F] = 0 on G.
#[derive(Debug, Clone)]
pub struct SocleRelation {
    pub n: u32,
    pub poly: WeightedGCPoly,
    pub recurrence_p: Vec<Scalar>,
    pub recurrence_a: Vec<Scalar>,
}

impl SocleRelation {
    /// P·[F] recomputed in the Schubert model.
    pub fn residual(&self) -> SchubertElement {
        FanoContext::new(self.n)
            .expect("n >= 5")
            .fano_class()
            .mul_poly(&self.poly)
    }
}

/// The unique (up to scale) weighted-degree n-1 relation on [F], normalized to g^{n-1} + ….
pub fn solve_socle_relation(n: u32) -> Result<SocleRelation, FanoError> {
    if n < 5 {
        return Err(FanoError::DimensionTooSmall(n));
    }
    let ctx = FanoContext::new(n)?;
    let m = n + 2;
    let degree = n - 1;
    let monos: Vec<(u32, u32)> = (0..=degree / 2).map(|b| (degree - 2 * b, b)).collect();
    let target = partitions_of_codegree(m, n + 3);
    let columns: Vec<Vec<Scalar>> = monos
        .iter()
        .map(|&(a, b)| ctx.fano_class().mul_monomial(a, b).coordinates(n + 3))
        .collect();
    let system = ExactMatrix::from_columns(&columns, target.len()).expect("consistent sizes");
    let (_, kernel) = rank_and_kernel(&system);
    match kernel.len() {
        0 => return Err(FanoError::NoRelation(degree)),
        1 => {}
        dim => return Err(FanoError::Ambiguous { degree, dim }),
    }
    let v = &kernel[0];
    let lead = v[0].clone();
    if lead.is_zero() {
        return Err(FanoError::VanishingLeadingCoefficient);
    }
    let mut poly = WeightedGCPoly::zero();
    for (&(a, b), x) in monos.iter().zip(v) {
        poly.add_term(a, b, x / &lead);
    }
    let rec = recurrence_check(n)?;
    Ok(SocleRelation {
        n,
        poly,
        recurrence_p: rec.expanded.p,
        recurrence_a: rec.expanded.a,
    })
}

/// One run of the triangular system 2p₁ = a₂, 2p_j + p_{j-1} = a_{j+1}, p_m = a_{m+2}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceRun {
    /// a_2 … a_{m+2}.
    pub a: Vec<Scalar>,
    /// p_1 … p_m.
    pub p: Vec<Scalar>,
    pub a_integral: bool,
    /// p_j is not an integer for every 2 ≤ j ≤ m.
    pub p_nonintegral: bool,
    /// The last equation p_m = a_{m+2} fails.
    pub contradiction: bool,
}

impl RecurrenceRun {
    fn from_coefficients(a: Vec<Scalar>) -> Self {
        let m = a.len() - 1;
        let mut p: Vec<Scalar> = Vec::with_capacity(m);
        p.push(&a[0] / int(2));
        for j in 2..=m {
            let next = (&a[j - 1] - &p[j - 2]) / int(2);
            p.push(next);
        }
        let a_integral = a.iter().all(is_integral);
        let p_nonintegral = p.iter().skip(1).all(|x| !is_integral(x));
        let contradiction = p[m - 1] != a[m];
        RecurrenceRun {
            a,
            p,
            a_integral,
            p_nonintegral,
            contradiction,
        }
    }
}

/// The non-divisibility argument for the socle relation, run twice: once on the
/// closed form (-1)^j C(n+1-j, j-1) for the right-hand coefficients and once on
/// the coefficients read off from (x² - y) R_{n+1} - x R_{n+2}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub n: u32,
    pub m: u32,
    pub closed_form: RecurrenceRun,
    pub expanded: RecurrenceRun,
}

impl RecurrenceReport {
    pub fn closed_form_matches_expansion(&self) -> bool {
        self.closed_form.a == self.expanded.a
    }

    pub fn expected_p1(&self) -> Scalar {
        frac(self.n as i64 - 1, 2)
    }

    pub fn expected_p2(&self) -> Scalar {
        let n = self.n as i64;
        frac(-(n * n - 4 * n + 5), 4)
    }

    /// p₁ and p₂ from the run agree with (n-1)/2 and -(n²-4n+5)/4.
    pub fn matches_stated_values(run: &RecurrenceRun, n: u32) -> bool {
        let n = n as i64;
        run.p[0] == frac(n - 1, 2) && run.p.get(1) == Some(&frac(-(n * n - 4 * n + 5), 4))
    }

    /// Whether the non-divisibility argument goes through on the expanded coefficients.
    pub fn argument_holds(&self) -> bool {
        let e = &self.expanded;
        e.a_integral && e.p_nonintegral && e.contradiction
    }
}

/// a_j = (-1)^j C(n+1-j, j-1).
pub fn closed_form_a(n: u32, j: u32) -> Scalar {
    let sign = if j.is_multiple_of(2) { 1 } else { -1 };
    big(binomial(n as i64 + 1 - j as i64, j as i64 - 1) * sign)
}

pub fn recurrence_check(n: u32) -> Result<RecurrenceReport, FanoError> {
    if n < 5 {
        return Err(FanoError::DimensionTooSmall(n));
    }
    let m = (n - 1) / 2;
    let closed: Vec<Scalar> = (2..=m + 2).map(|j| closed_form_a(n, j)).collect();

    let (r1, r2) = presentation_relations(n);
    let x2_minus_y = WeightedGCPoly::monomial(2, 0, Scalar::one()).add(&WeightedGCPoly::monomial(
        0,
        1,
        -Scalar::one(),
    ));
    let x = WeightedGCPoly::monomial(1, 0, Scalar::one());
    let rhs = x2_minus_y.mul(&r1).add(&x.mul(&r2).scaled(&-Scalar::one()));
    let expanded: Vec<Scalar> = (2..=m + 2)
        .map(|j| rhs.coefficient(n + 3 - 2 * j, j))
        .collect();

    Ok(RecurrenceReport {
        n,
        m,
        closed_form: RecurrenceRun::from_coefficients(closed),
        expanded: RecurrenceRun::from_coefficients(expanded),
    })
}

/// (-1)^j C(n+1-j, j-2), the coefficients of (x² - y) R_{n+1} - x R_{n+2}.
pub fn expanded_a(n: u32, j: u32) -> Scalar {
    let sign = if j.is_multiple_of(2) { 1 } else { -1 };
    big(binomial(n as i64 + 1 - j as i64, j as i64 - 2) * sign)
}

/// The socle relation read as a rewrite rule g^{n-1} ↦ g^{n-1} - P.
pub fn leading_power_rewrite(rel: &SocleRelation) -> WeightedGCPoly {
    let degree = rel.n - 1;
    let mut out = WeightedGCPoly::zero();
    for (&(a, b), c) in rel.poly.coeffs() {
        if (a, b) != (degree, 0) {
            out.add_term(a, b, -c.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_on_fano_of_cubic_fourfold() {
        let ctx = FanoContext::new(4).unwrap();
        assert_eq!(ctx.degree_f(4, 0), int(108));
        assert_eq!(ctx.degree_f(3, 0), int(0));
    }

    #[test]
    fn hilbert_small_cases() {
        assert_eq!(
            FanoContext::new(4).unwrap().hilbert_function().as_slice(),
            &[1, 1, 2, 1, 1]
        );
        assert_eq!(
            FanoContext::new(3).unwrap().hilbert_function().as_slice(),
            &[1, 1, 1]
        );
        assert_eq!(
            FanoContext::new(5).unwrap().hilbert_function().as_slice(),
            &[1, 1, 2, 2, 2, 1, 1]
        );
    }

    #[test]
    fn r_values() {
        assert_eq!(r_formula(0, 7).unwrap(), 1);
        assert_eq!(r_formula(2, 4).unwrap(), 2);
        assert_eq!(r_formula(3, 4).unwrap(), 1);
        assert!(r_formula(5, 4).is_err());
    }

    #[test]
    fn rfxf_bound_values() {
        assert_eq!(dim_rfxf_bound(0, 4).unwrap(), 1);
        assert_eq!(dim_rfxf_bound(2, 4).unwrap(), 6);
        assert_eq!(dim_rfxf_bound(4, 4).unwrap(), 12);
        assert!(dim_rfxf_bound(9, 4).is_err());
    }

    #[test]
    fn socle_relation_n5() {
        let rel = solve_socle_relation(5).unwrap();
        assert_eq!(rel.poly.coefficient(4, 0), int(1));
        assert!(rel.residual().is_zero());
        assert!(matches!(
            solve_socle_relation(4),
            Err(FanoError::DimensionTooSmall(4))
        ));
    }

    #[test]
    fn recurrence_values() {
        let r = recurrence_check(5).unwrap();
        assert_eq!(r.closed_form.p[0], int(2));
        assert_eq!(r.closed_form.p[1], frac(-5, 2));
        assert_eq!(recurrence_check(6).unwrap().closed_form.p[0], frac(5, 2));
        assert_eq!(recurrence_check(9).unwrap().closed_form.p[1], frac(-25, 2));
        // The product (x²-y)R₆ - xR₇ is x⁴y² - 3x²y³ + y⁴.
        assert_eq!(r.expanded.a, vec![int(1), int(-3), int(1)]);
        assert!(r.argument_holds());
    }
}
