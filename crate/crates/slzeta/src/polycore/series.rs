//! Truncated power series in one distinguished variable with exact
//! multivariate polynomial coefficients.

use super::monomial::{Monomial, Var};
use super::poly::MVPolynomial;
use crate::error::{Error, Result};

/// Coefficients `0..=cutoff` of a power series in `var`; each coefficient is
/// an exact polynomial in the remaining variables. Degrees beyond the cutoff
/// are never consulted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    var: Var,
    coeffs: Vec<MVPolynomial>,
}

impl TruncatedSeries {
    pub fn zero(var: Var, cutoff: usize) -> Self {
        TruncatedSeries {
            var,
            coeffs: vec![MVPolynomial::zero(); cutoff + 1],
        }
    }

    /// Bucket a polynomial by its `var`-degree, shifted by `shift`.
    /// A nonzero coefficient at a negative shifted degree is a domain error
    /// (the function has a pole at `var = 0`).
    pub fn from_poly(
        var: Var,
        cutoff: usize,
        p: &MVPolynomial,
        shift: i64,
    ) -> Result<TruncatedSeries> {
        let mut s = TruncatedSeries::zero(var.clone(), cutoff);
        for (m, c) in p.terms() {
            let d = m.exponent_of(&var) + shift;
            if d < 0 {
                return Err(Error::domain(format!(
                    "term with negative {var}-degree {d}; no power-series expansion"
                )));
            }
            let d = d as usize;
            if d <= cutoff {
                let rest = m.div(&Monomial::var(var.clone(), m.exponent_of(&var)));
                s.coeffs[d].add_term(rest, c.clone());
            }
        }
        Ok(s)
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> &MVPolynomial {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[MVPolynomial] {
        &self.coeffs
    }

    pub fn add_term(&mut self, d: usize, p: &MVPolynomial) {
        if d < self.coeffs.len() {
            self.coeffs[d] = &self.coeffs[d] + p;
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.var, other.var);
        let cutoff = self.cutoff().min(other.cutoff());
        let mut out = TruncatedSeries::zero(self.var.clone(), cutoff);
        for d in 0..=cutoff {
            out.coeffs[d] = &self.coeffs[d] + &other.coeffs[d];
        }
        out
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.var, other.var);
        let cutoff = self.cutoff().min(other.cutoff());
        let mut out = TruncatedSeries::zero(self.var.clone(), cutoff);
        for i in 0..=cutoff {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(cutoff - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{BinomFactor, FactoredRatFunc};

    #[test]
    fn geometric_series() {
        // 1/(1 - q^2 t) -> [1, q^2, q^4, q^6]
        let t = Var::new("t");
        let f = FactoredRatFunc::new(
            MVPolynomial::one(),
            vec![BinomFactor::new(
                1,
                "q^2*t".parse::<MVPolynomial>()
                    .unwrap()
                    .as_signed_monomial()
                    .unwrap()
                    .mono,
            )],
        );
        let s = f.series_expand(&t, 3).unwrap();
        let expect: Vec<MVPolynomial> = ["1", "q^2", "q^4", "q^6"]
            .iter()
            .map(|x| x.parse().unwrap())
            .collect();
        assert_eq!(s.coeffs(), &expect[..]);
    }

    #[test]
    fn product_of_expansions_is_expansion_of_product() {
        let t = Var::new("t");
        let a = FactoredRatFunc::new(
            "1 - t".parse().unwrap(),
            vec![BinomFactor::new(
                1,
                "q*t".parse::<MVPolynomial>()
                    .unwrap()
                    .as_signed_monomial()
                    .unwrap()
                    .mono,
            )],
        );
        let b = FactoredRatFunc::new(
            "1 + q*t^2".parse().unwrap(),
            vec![BinomFactor::new(
                1,
                "t^2".parse::<MVPolynomial>()
                    .unwrap()
                    .as_signed_monomial()
                    .unwrap()
                    .mono,
            )],
        );
        let lhs = a.mul(&b).series_expand(&t, 6).unwrap();
        let rhs = a
            .series_expand(&t, 6)
            .unwrap()
            .mul(&b.series_expand(&t, 6).unwrap());
        assert_eq!(lhs, rhs);
    }
}
