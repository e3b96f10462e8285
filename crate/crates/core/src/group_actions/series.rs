//! Truncated power series and rational functions in `t` over cyclotomic scalars.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::{CycloScalar, Rational};

/// Power series known through degree `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    pub coeffs: Vec<CycloScalar>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<CycloScalar>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least its constant term");
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&x| CycloScalar::from_int(x)).collect())
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs[..=n.min(self.order())].to_vec())
    }

    /// Coefficients as rationals, if all are rational.
    pub fn rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(CycloScalar::to_rational).collect()
    }

    /// Coefficients as machine integers; errors when some coefficient is not an integer.
    pub fn integer_coeffs(&self) -> Result<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                c.to_rational()
                    .filter(|r| r.is_integer())
                    .and_then(|r| i64::try_from(r.to_integer()).ok())
                    .ok_or_else(|| Error::Inconsistency(format!("coefficient {c} is not an integer")))
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Self::new((0..=n).map(|i| &self.coeffs[i] + &o.coeffs[i]).collect())
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Product with the polynomial `p` (coefficients from degree 0), keeping the truncation.
    pub fn mul_poly(&self, p: &[CycloScalar]) -> Self {
        let n = self.order();
        let mut out = vec![CycloScalar::zero(); n + 1];
        for (i, a) in p.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for j in 0..=n - i {
                out[i + j] += &(a * &self.coeffs[j]);
            }
        }
        Self::new(out)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(t^{})", parts.join(", "), self.coeffs.len())
    }
}

/// `numerator / denominator` with a denominator invertible at `t = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalFunction {
    pub numerator: Vec<CycloScalar>,
    pub denominator: Vec<CycloScalar>,
}

impl RationalFunction {
    pub fn new(numerator: Vec<CycloScalar>, denominator: Vec<CycloScalar>) -> Result<Self> {
        if denominator.first().is_none_or(Zero::is_zero) {
            return Err(Error::InvalidParameters("denominator must have nonzero constant term".into()));
        }
        Ok(RationalFunction { numerator, denominator })
    }

    /// Product of `(1 - c t^e)` factors as a polynomial.
    pub fn product_of(factors: &[(CycloScalar, usize)]) -> Vec<CycloScalar> {
        let mut p = vec![CycloScalar::one()];
        for (c, e) in factors {
            let mut next = vec![CycloScalar::zero(); p.len() + e];
            for (i, x) in p.iter().enumerate() {
                next[i] += x;
                next[i + e] -= &(x * c);
            }
            p = next;
        }
        p
    }

    /// Integer-coefficient polynomial from `(coefficient, exponent)` pairs.
    pub fn sparse_poly(terms: &[(i64, usize)]) -> Vec<CycloScalar> {
        let deg = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut p = vec![CycloScalar::zero(); deg + 1];
        for &(c, e) in terms {
            p[e] += &CycloScalar::from_int(c);
        }
        p
    }

    /// Power-series expansion through degree `n`.
    pub fn expand(&self, n: usize) -> TruncatedSeries {
        let inv0 = self.denominator[0].inv().expect("checked at construction");
        let mut out: Vec<CycloScalar> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.numerator.get(k).cloned().unwrap_or_else(CycloScalar::zero);
            for (i, d) in self.denominator.iter().enumerate().skip(1) {
                if i > k {
                    break;
                }
                if !d.is_zero() {
                    acc -= &(d * &out[k - i]);
                }
            }
            out.push(&acc * &inv0);
        }
        TruncatedSeries::new(out)
    }
}
