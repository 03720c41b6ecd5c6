//! Sparse multivariate Laurent polynomials over arbitrary-precision integers.

use super::monomial::{Monomial, SignedMonomial, Var};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Exact multivariate Laurent polynomial. Terms are kept in a canonical
/// (graded, then lexicographic) order and zero coefficients are never stored,
/// so equal polynomials have identical representations.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MVPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MVPolynomial {
    pub fn zero() -> Self {
        MVPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MVPolynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MVPolynomial { terms }
    }

    pub fn var(v: Var) -> Self {
        MVPolynomial::from_monomial(Monomial::var(v, 1), BigInt::one())
    }

    pub fn from_monomial(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MVPolynomial { terms }
    }

    pub fn from_signed_monomial(sm: &SignedMonomial) -> Self {
        MVPolynomial::from_monomial(sm.mono.clone(), sm.coeff.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Whether the polynomial is `c * m` for a single monomial `m`.
    pub fn as_signed_monomial(&self) -> Option<SignedMonomial> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some(SignedMonomial::new(c.clone(), m.clone()))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Largest term in the canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Smallest term in the canonical order.
    pub fn trailing_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next()
    }

    pub fn scale(&self, c: &BigInt) -> MVPolynomial {
        if c.is_zero() {
            return MVPolynomial::zero();
        }
        MVPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MVPolynomial {
        MVPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul_signed_monomial(&self, sm: &SignedMonomial) -> MVPolynomial {
        self.mul_monomial(&sm.mono).scale(&sm.coeff)
    }

    pub fn pow(&self, k: u32) -> MVPolynomial {
        let mut acc = MVPolynomial::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// All variables appearing with nonzero exponent.
    pub fn vars(&self) -> Vec<Var> {
        let mut out: Vec<Var> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in m.exponents() {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
        }
        out.sort();
        out
    }

    /// Exponent range of `v` across terms, `None` for the zero polynomial.
    pub fn degree_range(&self, v: &Var) -> Option<(i64, i64)> {
        let mut range: Option<(i64, i64)> = None;
        for m in self.terms.keys() {
            let e = m.exponent_of(v);
            range = Some(match range {
                None => (e, e),
                Some((lo, hi)) => (lo.min(e), hi.max(e)),
            });
        }
        range
    }

    pub fn max_degree(&self, v: &Var) -> i64 {
        self.degree_range(v).map(|(_, hi)| hi).unwrap_or(0)
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.keys().any(|m| m.has_negative_exponent())
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: &Var, k: i64) -> MVPolynomial {
        let mut out = MVPolynomial::zero();
        for (m, c) in &self.terms {
            if m.exponent_of(v) == k {
                out.add_term(m.div(&Monomial::var(v.clone(), k)), c.clone());
            }
        }
        out
    }

    /// Substitute each mapped variable by a signed Laurent monomial.
    /// Unmapped variables are left alone. Raising a non-unit coefficient to a
    /// negative exponent is a domain error.
    pub fn substitute(&self, map: &HashMap<Var, SignedMonomial>) -> Result<MVPolynomial> {
        let mut out = MVPolynomial::zero();
        for (m, c) in &self.terms {
            let mut target = SignedMonomial::new(c.clone(), Monomial::one());
            for (v, e) in m.exponents() {
                match map.get(v) {
                    None => target = target.mul(&SignedMonomial::var(v.clone(), *e)),
                    Some(sm) => {
                        let p = sm.pow(*e).ok_or_else(|| {
                            Error::domain(format!(
                                "substitution target {sm} cannot be raised to exponent {e}"
                            ))
                        })?;
                        target = target.mul(&p);
                    }
                }
            }
            out.add_term(target.mono, target.coeff);
        }
        Ok(out)
    }

    /// Evaluate at an exact rational point; every variable must be bound.
    pub fn evaluate(&self, point: &HashMap<Var, BigRational>) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from(c.clone());
            for (v, e) in m.exponents() {
                let x = point
                    .get(v)
                    .ok_or_else(|| Error::domain(format!("unbound variable {v} in evaluation")))?;
                if x.is_zero() && *e < 0 {
                    return Err(Error::domain("evaluation at zero with negative exponent".to_string()));
                }
                term *= rational_pow(x, *e);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Greatest common divisor of all coefficients (positive), 0 for the zero
    /// polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Factor out `unit * x^alpha` so the remainder has nonnegative exponents,
    /// content 1 and positive trailing coefficient. Returns `(unit, primitive)`
    /// with `self = unit * primitive`. The zero polynomial returns unit 1.
    pub fn extract_unit(&self) -> (SignedMonomial, MVPolynomial) {
        if self.is_zero() {
            return (SignedMonomial::one(), MVPolynomial::zero());
        }
        let mut mins: HashMap<Var, i64> = HashMap::new();
        let mut vars: Vec<Var> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in m.exponents() {
                if !mins.contains_key(v) {
                    vars.push(v.clone());
                }
                mins.entry(v.clone()).or_insert(i64::MAX);
            }
        }
        for m in self.terms.keys() {
            for v in &vars {
                let e = m.exponent_of(v);
                let slot = mins.get_mut(v).unwrap();
                if e < *slot {
                    *slot = e;
                }
            }
        }
        let shift = Monomial::from_pairs(vars.iter().map(|v| (v.clone(), mins[v])));
        let mut content = self.content();
        let shifted = self.mul_monomial(&shift.inv());
        if shifted.trailing_term().unwrap().1.is_negative() {
            content = -content;
        }
        let primitive = MVPolynomial {
            terms: shifted
                .terms
                .into_iter()
                .map(|(m, c)| (m, c / &content))
                .collect(),
        };
        (SignedMonomial::new(content, shift), primitive)
    }

    /// Exact division. Returns `None` when the division is not exact over the
    /// ring of integer Laurent polynomials.
    ///
    /// Both operands are reduced to primitive parts (monomial unit and content
    /// pulled out), after which the quotient, if it exists, is again primitive
    /// with nonnegative exponents; the bottom-up division then terminates
    /// because its quotient monomials increase strictly inside a finite set.
    pub fn try_div_exact(&self, divisor: &MVPolynomial) -> Option<MVPolynomial> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MVPolynomial::zero());
        }
        let (fu, fp) = self.extract_unit();
        let (du, dp) = divisor.extract_unit();
        let (uc, ur) = fu.coeff.div_rem(&du.coeff);
        if !ur.is_zero() {
            return None;
        }
        let unit = SignedMonomial::new(uc, fu.mono.div(&du.mono));

        let (dm, dc) = dp.trailing_term()?;
        let dm = dm.clone();
        let dc = dc.clone();
        let bound = {
            let (lm, _) = fp.leading_term()?;
            let (dl, _) = dp.leading_term()?;
            lm.div(dl)
        };
        let mut rem = fp;
        let mut quot = MVPolynomial::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.trailing_term()?;
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let qm = rm.div(&dm);
            if qm.has_negative_exponent() || qm > bound {
                return None;
            }
            let piece = MVPolynomial::from_monomial(qm, q);
            rem = &rem - &(&piece * &dp);
            quot = &quot + &piece;
        }
        Some(quot.mul_signed_monomial(&unit))
    }

    /// Serialize to the list-of-terms JSON form.
    pub fn to_json(&self) -> serde_json::Value {
        let mut arr = Vec::new();
        for (m, c) in &self.terms {
            let mut exps = serde_json::Map::new();
            for (v, e) in m.exponents() {
                exps.insert(v.name().to_string(), serde_json::json!(e));
            }
            arr.push(serde_json::json!({ "exps": exps, "coeff": c.to_string() }));
        }
        serde_json::Value::Array(arr)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<MVPolynomial> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::parse("polynomial JSON must be an array".to_string()))?;
        let mut out = MVPolynomial::zero();
        for item in arr {
            let coeff_str = item
                .get("coeff")
                .and_then(|c| c.as_str())
                .ok_or_else(|| Error::parse("term missing string coeff".to_string()))?;
            let coeff = BigInt::from_str(coeff_str)
                .map_err(|e| Error::parse(format!("bad coefficient {coeff_str}: {e}")))?;
            let exps = item
                .get("exps")
                .and_then(|e| e.as_object())
                .ok_or_else(|| Error::parse("term missing exps object".to_string()))?;
            let mut mono = Monomial::one();
            for (name, e) in exps {
                let e = e
                    .as_i64()
                    .ok_or_else(|| Error::parse(format!("bad exponent for {name}")))?;
                mono = mono.mul(&Monomial::var(Var::new(name), e));
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

pub(crate) fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let p = x.pow(e.unsigned_abs().try_into().unwrap_or(i32::MAX));
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

impl Add for &MVPolynomial {
    type Output = MVPolynomial;
    fn add(self, rhs: &MVPolynomial) -> MVPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MVPolynomial {
    type Output = MVPolynomial;
    fn sub(self, rhs: &MVPolynomial) -> MVPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MVPolynomial {
    type Output = MVPolynomial;
    fn neg(self) -> MVPolynomial {
        MVPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &MVPolynomial {
    type Output = MVPolynomial;
    fn mul(self, rhs: &MVPolynomial) -> MVPolynomial {
        let mut out = MVPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MVPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MVPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for MVPolynomial {
    type Err = Error;

    /// Parse the canonical text format, e.g. `1 - t - q^2*t^2 + 3*q^2*t^3`.
    fn from_str(s: &str) -> Result<MVPolynomial> {
        let mut out = MVPolynomial::zero();
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(Error::parse("empty polynomial".to_string()));
        }
        let mut sign = BigInt::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        loop {
            let end = rest
                .char_indices()
                .find(|(i, c)| (*c == '+' || *c == '-') && *i > 0 && !rest[..*i].ends_with('^'))
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            let (term_str, tail) = rest.split_at(end);
            let (c, m) = parse_term(term_str.trim())?;
            out.add_term(m, c * &sign);
            rest = tail;
            if rest.is_empty() {
                break;
            }
            if let Some(r) = rest.strip_prefix('+') {
                sign = BigInt::one();
                rest = r.trim_start();
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -BigInt::one();
                rest = r.trim_start();
            } else {
                return Err(Error::parse(format!("unexpected input at `{rest}`")));
            }
        }
        Ok(out)
    }
}

fn parse_term(s: &str) -> Result<(BigInt, Monomial)> {
    if s.is_empty() {
        return Err(Error::parse("empty term".to_string()));
    }
    let mut coeff = BigInt::one();
    let mut mono = Monomial::one();
    for piece in s.split('*') {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(Error::parse(format!("empty factor in term `{s}`")));
        }
        if piece.chars().next().unwrap().is_ascii_digit() {
            let c = BigInt::from_str(piece)
                .map_err(|e| Error::parse(format!("bad coefficient `{piece}`: {e}")))?;
            coeff *= c;
        } else {
            let (name, exp) = match piece.split_once('^') {
                None => (piece, 1),
                Some((n, e)) => (
                    n,
                    e.parse::<i64>()
                        .map_err(|err| Error::parse(format!("bad exponent `{e}`: {err}")))?,
                ),
            };
            if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::parse(format!("bad variable name `{name}`")));
            }
            mono = mono.mul(&Monomial::var(Var::new(name), exp));
        }
    }
    Ok((coeff, mono))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MVPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn display_canonical_order() {
        let f = p("q^2*t^3 - t + 1 - q^2*t^2");
        assert_eq!(f.to_string(), "1 - t - q^2*t^2 + q^2*t^3");
    }

    #[test]
    fn parse_roundtrip() {
        let f = p("1 - 2*t + 3*q^2*t^2 - q^-1");
        let g: MVPolynomial = f.to_string().parse().unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn arithmetic_basics() {
        let a = p("1 + q");
        let b = p("1 - q");
        assert_eq!((&a * &b).to_string(), "1 - q^2");
        assert_eq!((&a + &b).to_string(), "2");
        assert_eq!((&a - &a).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let f = p("1 - q^2");
        let d = p("1 - q");
        assert_eq!(f.try_div_exact(&d).unwrap().to_string(), "1 + q");
        assert!(p("1 + q^2").try_div_exact(&d).is_none());
        // non-exact integer content
        assert!(p("1 + q").try_div_exact(&p("2")).is_none());
        assert_eq!(p("2 + 2*q").try_div_exact(&p("2")).unwrap(), p("1 + q"));
    }

    #[test]
    fn unit_extraction() {
        let f = p("2*q^-1*t - 4*t^2");
        let (u, prim) = f.extract_unit();
        assert_eq!(prim.to_string(), "1 - 2*q*t");
        assert_eq!(u.to_string(), "2*q^-1*t");
        assert_eq!(&MVPolynomial::from_signed_monomial(&u) * &prim, f);
    }

    #[test]
    fn substitute_monomials() {
        let q = Var::new("q");
        let t = Var::new("t");
        let f = p("1 - q^2*t");
        let mut map = HashMap::new();
        map.insert(q.clone(), SignedMonomial::var(q.clone(), -1));
        map.insert(t.clone(), SignedMonomial::var(t.clone(), -1));
        let g = f.substitute(&map).unwrap();
        // graded order puts the degree -3 term first
        assert_eq!(g.to_string(), "-q^-2*t^-1 + 1");
    }

    #[test]
    fn evaluate_rational() {
        let f = p("1 - q^2");
        let mut pt = HashMap::new();
        pt.insert(Var::new("q"), BigRational::new(1.into(), 2.into()));
        assert_eq!(
            f.evaluate(&pt).unwrap(),
            BigRational::new(3.into(), 4.into())
        );
        let g = p("1 - w");
        assert!(g.evaluate(&pt).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let f = p("1 - t - q^2*t^2 + q^2*t^3");
        let j = f.to_json();
        assert_eq!(MVPolynomial::from_json(&j).unwrap(), f);
    }
}
