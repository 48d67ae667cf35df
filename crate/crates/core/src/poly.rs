//! Sparse multivariate polynomials in the simple-root variables.
//!
//! These hold equivariant localization values, so coefficients are exact
//! rationals internally (division by linear forms passes through rationals)
//! and integral whenever exposed.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{q_from, Q, Z};

/// Exponent vector, one entry per simple root.
pub type Exp = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    pub vars: usize,
    /// Exponent vector -> coefficient; zero coefficients are never stored.
    pub terms: BTreeMap<Exp, Q>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> MultiPoly {
        MultiPoly { terms: BTreeMap::new(), vars }
    }

    pub fn constant(vars: usize, c: Q) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0u8; vars], c);
        }
        MultiPoly { terms, vars }
    }

    pub fn one(vars: usize) -> MultiPoly {
        Self::constant(vars, Q::one())
    }

    /// The linear form with the given simple-root coordinates.
    pub fn linear(coords: &[i64]) -> MultiPoly {
        let vars = coords.len();
        let mut terms = BTreeMap::new();
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                let mut e = vec![0u8; vars];
                e[i] = 1;
                terms.insert(e, q_from(c));
            }
        }
        MultiPoly { terms, vars }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| usize::from(x)).sum())
            .max()
            .unwrap_or(0)
    }

    /// The constant coefficient, if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Q> {
        if self.terms.is_empty() {
            return Some(Q::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Integer view of the coefficients; errors if any is fractional.
    pub fn integer_terms(&self) -> Result<BTreeMap<Exp, Z>> {
        self.terms
            .iter()
            .map(|(e, c)| {
                if c.is_integer() {
                    Ok((e.clone(), c.to_integer()))
                } else {
                    Err(Error::Invariant("polynomial has a fractional coefficient".into()))
                }
            })
            .collect()
    }

    pub fn add_assign(&mut self, other: &MultiPoly) {
        for (e, c) in &other.terms {
            let entry = self.terms.entry(e.clone()).or_insert_with(Q::zero);
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    pub fn sub_assign(&mut self, other: &MultiPoly) {
        for (e, c) in &other.terms {
            let entry = self.terms.entry(e.clone()).or_insert_with(Q::zero);
            *entry -= c;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out: BTreeMap<Exp, Q> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exp = ea.iter().zip(eb).map(|(&x, &y)| x + y).collect();
                let entry = out.entry(e).or_insert_with(Q::zero);
                *entry += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        MultiPoly { terms: out, vars: self.vars }
    }

    pub fn mul_scalar(&self, s: &Q) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero(self.vars);
        }
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// Multiply by the linear form with the given root coordinates.
    pub fn mul_linear(&self, coords: &[i64]) -> MultiPoly {
        self.mul(&MultiPoly::linear(coords))
    }

    /// Exact division by a nonzero linear form; `None` if not divisible.
    pub fn div_exact_linear(&self, coords: &[i64]) -> Option<MultiPoly> {
        if self.is_zero() {
            return Some(MultiPoly::zero(self.vars));
        }
        let j = coords.iter().position(|&c| c != 0)?;
        let cj = q_from(coords[j]);
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.vars);
        // Cancel leading terms in an ordering where the degree of variable j
        // dominates; the j-degree of the remainder strictly decreases.
        while !rem.is_zero() {
            let (e, c) = rem
                .terms
                .iter()
                .max_by(|(ea, _), (eb, _)| (ea[j], *ea).cmp(&(eb[j], *eb)))
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            if e[j] == 0 {
                return None;
            }
            let mut qe = e.clone();
            qe[j] -= 1;
            let qc = c / &cj;
            let mut t = MultiPoly::zero(self.vars);
            t.terms.insert(qe.clone(), qc.clone());
            quot.add_assign(&t);
            rem.sub_assign(&t.mul_linear(coords));
        }
        Some(quot)
    }
}

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e.iter().all(|&x| x == 0) {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            let mut firstv = true;
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    if !firstv {
                        write!(f, "*")?;
                    }
                    firstv = false;
                    write!(f, "a{}", i + 1)?;
                    if x > 1 {
                        write!(f, "^{x}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_division() {
        // (a1 + a2)(2a1 + a2) = 2a1^2 + 3a1a2 + a2^2
        let f = MultiPoly::linear(&[1, 1]).mul(&MultiPoly::linear(&[2, 1]));
        assert_eq!(f.degree(), 2);
        let q = f.div_exact_linear(&[1, 1]).unwrap();
        assert_eq!(q, MultiPoly::linear(&[2, 1]));
        let q = f.div_exact_linear(&[2, 1]).unwrap();
        assert_eq!(q, MultiPoly::linear(&[1, 1]));
        // Not divisible by a1.
        assert!(f.div_exact_linear(&[1, 0]).is_none());
    }

    #[test]
    fn division_with_lead_coefficient() {
        // A form with no unit coefficient anywhere: (2a1+3a2)*(3a1+2a2).
        let f = MultiPoly::linear(&[2, 3]).mul(&MultiPoly::linear(&[3, 2]));
        let q = f.div_exact_linear(&[2, 3]).unwrap();
        assert_eq!(q, MultiPoly::linear(&[3, 2]));
    }
}
