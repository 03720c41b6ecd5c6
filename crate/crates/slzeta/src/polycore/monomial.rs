//! Variable names and Laurent exponent vectors.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// An interned variable name. Ordering is by name, so term orders are
/// independent of creation order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.as_ref().cmp(other.0.as_ref())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Var({})", self.0)
    }
}

/// A Laurent monomial: exponent per variable, sorted by variable name,
/// no zero exponents stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, i64)>);

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// `v^e` (zero exponent collapses to `1`).
    pub fn var(v: Var, e: i64) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Build from (variable, exponent) pairs in any order.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i64)>) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m = m.mul(&Monomial::var(v, e));
        }
        m
    }

    pub fn exponents(&self) -> &[(Var, i64)] {
        &self.0
    }

    pub fn exponent_of(&self, v: &Var) -> i64 {
        self.0
            .iter()
            .find(|(w, _)| w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.0.iter().any(|(_, e)| *e < 0)
    }

    /// Merge-multiply: add exponents, dropping zeros.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = self.0[i].1 + other.0[j].1;
                    if e != 0 {
                        out.push((self.0[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Formal quotient: subtract exponents (always defined for Laurent monomials).
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), -e)).collect())
    }

    pub fn pow(&self, k: i64) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), e * k)).collect())
    }

    /// Whether `self / other` has only nonnegative exponents.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        !self.div(other).has_negative_exponent()
    }
}

/// Graded lexicographic order: total degree first, then the exponent vectors
/// over the union of variables (in name order) compared lexicographically.
/// This order is compatible with multiplication, which the exact-division
/// algorithm relies on.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some((_, e)), None) => return e.cmp(&0),
                (None, Some((_, e))) => return 0.cmp(e),
                (Some((v1, e1)), Some((v2, e2))) => match v1.cmp(v2) {
                    Ordering::Less => return e1.cmp(&0),
                    Ordering::Greater => return 0.cmp(e2),
                    Ordering::Equal => {
                        if e1 != e2 {
                            return e1.cmp(e2);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An integer multiple of a Laurent monomial, e.g. `-Y` or `q^2*t`.
/// These are the admissible substitution targets and Igusa slot values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedMonomial {
    pub coeff: BigInt,
    pub mono: Monomial,
}

impl SignedMonomial {
    pub fn new(coeff: impl Into<BigInt>, mono: Monomial) -> Self {
        SignedMonomial {
            coeff: coeff.into(),
            mono,
        }
    }

    pub fn one() -> Self {
        SignedMonomial::new(1, Monomial::one())
    }

    pub fn var(v: Var, e: i64) -> Self {
        SignedMonomial::new(1, Monomial::var(v, e))
    }

    pub fn is_unit_coeff(&self) -> bool {
        self.coeff.abs().is_one()
    }

    pub fn mul(&self, other: &SignedMonomial) -> SignedMonomial {
        SignedMonomial::new(&self.coeff * &other.coeff, self.mono.mul(&other.mono))
    }

    /// `self^k`; a negative `k` requires the coefficient to be a unit.
    pub fn pow(&self, k: i64) -> Option<SignedMonomial> {
        if k >= 0 {
            Some(SignedMonomial::new(
                self.coeff.pow(k as u32),
                self.mono.pow(k),
            ))
        } else if self.is_unit_coeff() {
            let c = if (-k) % 2 == 0 || self.coeff.is_one() {
                BigInt::from(1)
            } else {
                self.coeff.clone()
            };
            Some(SignedMonomial::new(c, self.mono.pow(k)))
        } else {
            None
        }
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "{}", self.mono)
        } else if (-&self.coeff).is_one() {
            write!(f, "-{}", self.mono)
        } else {
            write!(f, "{}*{}", self.coeff, self.mono)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_mul_cancels_zeros() {
        let q = Var::new("q");
        let t = Var::new("t");
        let a = Monomial::from_pairs([(q.clone(), 2), (t.clone(), 1)]);
        let b = Monomial::from_pairs([(q.clone(), -2), (t.clone(), 3)]);
        let c = a.mul(&b);
        assert_eq!(c.exponent_of(&q), 0);
        assert_eq!(c.exponent_of(&t), 4);
        assert_eq!(c.to_string(), "t^4");
    }

    #[test]
    fn graded_order() {
        let q = Var::new("q");
        let t = Var::new("t");
        let one = Monomial::one();
        let tm = Monomial::var(t.clone(), 1);
        let q2t2 = Monomial::from_pairs([(q.clone(), 2), (t.clone(), 2)]);
        let q2t3 = Monomial::from_pairs([(q.clone(), 2), (t.clone(), 3)]);
        assert!(one < tm && tm < q2t2 && q2t2 < q2t3);
    }

    #[test]
    fn signed_monomial_pow() {
        let q = Var::new("q");
        let m = SignedMonomial::new(-1, Monomial::var(q.clone(), 2));
        let p = m.pow(-3).unwrap();
        assert_eq!(p.coeff, BigInt::from(-1));
        assert_eq!(p.mono.exponent_of(&q), -6);
        let big = SignedMonomial::new(3, Monomial::var(q, 1));
        assert!(big.pow(-1).is_none());
    }
}
