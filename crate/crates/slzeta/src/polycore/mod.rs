//! Exact arithmetic kernel: arbitrary-precision multivariate Laurent
//! polynomials, rational functions with binomial denominators, and truncated
//! power series.
//!
//! Everything downstream (permutation generating polynomials, Igusa
//! functions, zeta functions) is carried by these three types. All arithmetic
//! is exact; there is no floating point anywhere in the crate.

mod monomial;
mod poly;
mod ratfunc;
mod series;

pub use monomial::{Monomial, SignedMonomial, Var};
pub use poly::MVPolynomial;
pub use ratfunc::{BinomFactor, FactoredRatFunc};
pub use series::TruncatedSeries;

use crate::error::Result;
use num_bigint::BigInt;

/// The `X`-binomial coefficient `[n choose i]_X`, computed as the defining
/// product with exact division.
///
/// Expands `prod_{j=1}^{i} (1 - X^{n-i+j}) / (1 - X^j)`; the division is
/// carried out termwise on polynomials and must be exact.
pub fn qbinom(n: u32, i: u32, var: &Var) -> Result<MVPolynomial> {
    if i > n {
        return Err(crate::error::Error::domain(format!(
            "qbinom({n}, {i}): index exceeds n"
        )));
    }
    let mut num = MVPolynomial::one();
    for j in 1..=i {
        num = &num * &binomial_one_minus_power(var, (n - i + j) as i64);
    }
    let mut result = num;
    for j in 1..=i {
        let d = binomial_one_minus_power(var, j as i64);
        result = result.try_div_exact(&d).ok_or_else(|| {
            crate::error::Error::internal(format!(
                "qbinom({n}, {i}): division by 1 - {var}^{j} not exact"
            ))
        })?;
    }
    Ok(result)
}

/// The `X`-multinomial coefficient `[n choose I]_X` for a sorted subset
/// `I = {i_1 < ... < i_l}`: `[n choose i_l]_X [i_l choose i_{l-1}]_X ...`.
/// The empty set yields 1.
pub fn qmultinom(n: u32, indices: &[u32], var: &Var) -> Result<MVPolynomial> {
    for w in indices.windows(2) {
        if w[0] >= w[1] {
            return Err(crate::error::Error::domain(
                "qmultinom: index set must be strictly ascending".to_string(),
            ));
        }
    }
    if let Some(&top) = indices.last() {
        if top > n {
            return Err(crate::error::Error::domain(format!(
                "qmultinom: index {top} exceeds n = {n}"
            )));
        }
    }
    let mut result = MVPolynomial::one();
    let mut upper = n;
    for &i in indices.iter().rev() {
        result = &result * &qbinom(upper, i, var)?;
        upper = i;
    }
    Ok(result)
}

/// The polynomial `1 - v^e` (Laurent exponents allowed).
pub fn binomial_one_minus_power(var: &Var, e: i64) -> MVPolynomial {
    &MVPolynomial::one() - &MVPolynomial::from_monomial(Monomial::var(var.clone(), e), BigInt::from(1))
}
