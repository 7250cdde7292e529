//! Coefficient rings for symbolic cycles: exact rationals and polynomials in named symbols.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::{int, Scalar};

pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_scalar(s: Scalar) -> Self;
    /// The rational value, when the element is a constant.
    fn as_scalar(&self) -> Option<Scalar>;
}

impl Ring for Scalar {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn as_scalar(&self) -> Option<Scalar> {
        Some(self.clone())
    }
}

/// A monomial in named symbols: symbol → exponent.
pub type SymbolMonomial = BTreeMap<String, u32>;

/// Polynomial over ℚ in named symbols.
#[derive(Debug, Clone, PartialEq, Eq, Default, PartialOrd, Ord)]
pub struct FormalPoly {
    terms: BTreeMap<SymbolMonomial, Scalar>,
}

impl FormalPoly {
    pub fn constant(c: Scalar) -> Self {
        let mut p = FormalPoly::default();
        p.add_term(SymbolMonomial::new(), c);
        p
    }

    pub fn symbol(name: &str) -> Self {
        let mut m = SymbolMonomial::new();
        m.insert(name.to_string(), 1);
        let mut p = FormalPoly::default();
        p.add_term(m, int(1));
        p
    }

    pub fn add_term(&mut self, m: SymbolMonomial, c: Scalar) {
        if Zero::is_zero(&c) {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(|| int(0));
        *entry += c;
        if Zero::is_zero(entry) {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> &BTreeMap<SymbolMonomial, Scalar> {
        &self.terms
    }

    pub fn scaled(&self, k: &Scalar) -> Self {
        let mut out = FormalPoly::default();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    /// Substitutes rational values for every symbol; missing symbols are an error.
    pub fn evaluate(&self, values: &BTreeMap<String, Scalar>) -> Option<Scalar> {
        let mut total = int(0);
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (s, &e) in m {
                let x = values.get(s)?;
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        Some(total)
    }

    /// Replaces each symbol by a polynomial.
    pub fn substitute(&self, map: &BTreeMap<String, FormalPoly>) -> FormalPoly {
        let mut out = FormalPoly::default();
        for (m, c) in &self.terms {
            let mut v = FormalPoly::constant(c.clone());
            for (s, &e) in m {
                let x = map.get(s).cloned().unwrap_or_else(|| FormalPoly::symbol(s));
                for _ in 0..e {
                    v = Ring::mul(&v, &x);
                }
            }
            out = Ring::add(&out, &v);
        }
        out
    }

    /// Whether the polynomial needs wrapping in parentheses when used as a coefficient.
    pub fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

impl Ring for FormalPoly {
    fn zero() -> Self {
        FormalPoly::default()
    }
    fn one() -> Self {
        FormalPoly::constant(int(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = FormalPoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                for (s, e) in m2 {
                    *m.entry(s.clone()).or_insert(0) += e;
                }
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        self.scaled(&int(-1))
    }
    fn from_scalar(s: Scalar) -> Self {
        FormalPoly::constant(s)
    }
    fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(int(0)),
            1 => self.terms.get(&SymbolMonomial::new()).cloned(),
            _ => None,
        }
    }
}

/// Greek-named symbols are written before Latin ones: β₂·g.
fn write_monomial(f: &mut fmt::Formatter<'_>, m: &SymbolMonomial) -> fmt::Result {
    let mut ordered: Vec<(&String, &u32)> = m.iter().collect();
    ordered.sort_by_key(|(s, _)| (s.is_ascii(), s.as_str()));
    let parts: Vec<String> = ordered
        .into_iter()
        .map(|(s, &e)| {
            if e == 1 {
                s.clone()
            } else {
                format!("{s}^{e}")
            }
        })
        .collect();
    f.write_str(&parts.join("·"))
}

impl fmt::Display for FormalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest total degree first, constants last ("2g - 2"), but lead with a positive
        // term when there is one ("2 - 2g").
        let mut ordered: Vec<(&SymbolMonomial, &Scalar)> = self.terms.iter().collect();
        ordered.sort_by_key(|(m, _)| std::cmp::Reverse(m.values().sum::<u32>()));
        if let Some(pos) = ordered.iter().position(|(_, c)| c.is_positive()) {
            ordered.rotate_left(pos);
        }
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if abs.is_integer() && !abs.is_one() {
                    write!(f, "{abs}")?;
                } else if !abs.is_integer() {
                    write!(f, "({abs})")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let g = FormalPoly::symbol("g");
        let p = Ring::add(&g.scaled(&int(2)), &FormalPoly::constant(int(-2)));
        assert_eq!(p.to_string(), "2g - 2");
        let sq = Ring::mul(&p, &p);
        assert_eq!(sq.to_string(), "4g^2 - 8g + 4");
        let mut vals = BTreeMap::new();
        vals.insert("g".to_string(), int(3));
        assert_eq!(sq.evaluate(&vals), Some(int(16)));
        assert_eq!(Ring::neg(&p).to_string(), "2 - 2g");
        assert_eq!(g.scaled(&crate::exact::frac(-1, 3)).to_string(), "-(1/3)g");
    }
}
