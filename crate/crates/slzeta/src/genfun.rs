//! The named generating polynomials and rational functions: `f_{n,I}`,
//! `b_{n,i}`, `f_{K_n,I}`, Igusa functions, the `B_n` sum, plus executable
//! checkers for the polynomial identities and conjectures.
//!
//! Wherever two constructions of the same object exist (closed product vs.
//! signed Coxeter sum, subset sum vs. descent sum), both are computed and
//! compared; a mismatch is an internal-consistency error, never silently
//! ignored.

use crate::coxeter::{enumerate, CoxeterType};
use crate::error::{Error, Result};
use crate::polycore::{
    binomial_one_minus_power, qbinom, qmultinom, BinomFactor, FactoredRatFunc, MVPolynomial,
    Monomial, SignedMonomial, Var,
};
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Cache key for the named polynomials. Subsets are stored as bitmasks over
/// `[n-1]_0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PaperPolynomialId {
    /// `f_{n,I}` in the variable X.
    F { n: u8, indices: u32 },
    /// `b_{n,i}` in the variable X.
    B { n: u8, i: u8 },
    /// `f_{K_n,I}` in the variable X.
    Fk { n: u8, indices: u32 },
    /// The `S_n` numerator polynomial of the factored zeta route, in (q, t).
    V { n: u8 },
}

fn cache() -> &'static Mutex<HashMap<PaperPolynomialId, Arc<MVPolynomial>>> {
    static CACHE: OnceLock<Mutex<HashMap<PaperPolynomialId, Arc<MVPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cache_get(id: PaperPolynomialId) -> Option<Arc<MVPolynomial>> {
    cache().lock().unwrap().get(&id).cloned()
}

fn cache_put(id: PaperPolynomialId, p: MVPolynomial) -> Arc<MVPolynomial> {
    let mut guard = cache().lock().unwrap();
    guard.entry(id).or_insert_with(|| Arc::new(p)).clone()
}

fn var_x() -> Var {
    Var::new("X")
}

pub(crate) fn mask_of(indices: &[usize]) -> u32 {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

pub(crate) fn indices_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

/// Ranks up to which the exhaustive `B_n` sums are recomputed alongside the
/// closed forms (`|B_6| = 46080`; beyond that only the closed forms are used).
const SUM_CHECK_MAX_RANK: usize = 6;

/// Signed generating sums over the quotients `B_n^{I^c}` for every subset
/// mask at once: one sweep of `B_n`, each element contributing to all
/// supersets of its descent set.
fn signed_quotient_sums(n: usize, subtract_eps: bool) -> Vec<MVPolynomial> {
    let x = var_x();
    let mut table = vec![MVPolynomial::zero(); 1 << n];
    for w in enumerate(n, CoxeterType::B) {
        let st = w.stats();
        let exp = st.ell as i64 - if subtract_eps { st.eps_n as i64 } else { 0 };
        let coeff = if st.neg % 2 == 0 {
            BigInt::from(1)
        } else {
            BigInt::from(-1)
        };
        let mono = Monomial::var(x.clone(), exp);
        let des = st.des_mask();
        let full = (1u32 << n) - 1;
        let mut sup = des;
        loop {
            table[sup as usize].add_term(mono.clone(), coeff.clone());
            if sup == full {
                break;
            }
            sup = (sup + 1) | des;
        }
    }
    table
}

fn f_closed(n: usize, indices: &[usize]) -> Result<MVPolynomial> {
    let x = var_x();
    if indices.is_empty() {
        return Ok(MVPolynomial::one());
    }
    let idx_u32: Vec<u32> = indices.iter().map(|&i| i as u32).collect();
    let mut p = qmultinom(n as u32, &idx_u32, &x)?;
    for j in (indices[0] + 1)..=n {
        p = &p * &binomial_one_minus_power(&x, j as i64);
    }
    Ok(p)
}

/// `f_{n,I}(X)`: for nonempty `I` the product
/// `[n choose I]_X * prod_{j = min I + 1}^{n} (1 - X^j)`, and 1 for empty `I`
/// (the value the signed-sum form forces). For small ranks the Reiner-type
/// signed sum over `B_n^{I^c}` is recomputed and must agree.
pub fn f_poly(n: usize, indices: &[usize]) -> Result<MVPolynomial> {
    validate_subset(n, indices)?;
    let id = PaperPolynomialId::F {
        n: n as u8,
        indices: mask_of(indices),
    };
    if let Some(p) = cache_get(id) {
        return Ok((*p).clone());
    }
    if n <= SUM_CHECK_MAX_RANK {
        let sums = signed_quotient_sums(n, false);
        for (mask, sum) in sums.iter().enumerate() {
            let idxs = indices_of(mask as u32);
            let cl = f_closed(n, &idxs)?;
            if &cl != sum {
                return Err(Error::internal(format!(
                    "f_poly({n}, {idxs:?}): product form {cl} != signed sum {sum}"
                )));
            }
            cache_put(
                PaperPolynomialId::F {
                    n: n as u8,
                    indices: mask as u32,
                },
                cl,
            );
        }
        Ok((*cache_get(id).expect("family just cached")).clone())
    } else {
        let closed = f_closed(n, indices)?;
        Ok((*cache_put(id, closed)).clone())
    }
}

/// `b_{n,i}(X)`: the traceless rank-count polynomial
/// `f_{n,i}(X) + (-1)^{n-i} [n choose i]_X (1-X) X^{C(n+1,2)-C(i+1,2)-1}`,
/// cross-checked for small ranks against the signed sum over `B_n^{{i}^c}`
/// with exponent `ell - eps_n`.
pub fn b_poly(n: usize, i: usize) -> Result<MVPolynomial> {
    if i >= n {
        return Err(Error::domain(format!("b_poly({n}, {i}): need 0 <= i < n")));
    }
    let id = PaperPolynomialId::B {
        n: n as u8,
        i: i as u8,
    };
    if let Some(p) = cache_get(id) {
        return Ok((*p).clone());
    }
    let x = var_x();
    let f = f_poly(n, &[i])?;
    let e = (n * (n + 1) / 2 - i * (i + 1) / 2 - 1) as i64;
    let sign = if (n - i) % 2 == 0 { 1 } else { -1 };
    let base = qbinom(n as u32, i as u32, &x)?
        .mul_signed_monomial(&SignedMonomial::new(sign, Monomial::var(x.clone(), e)));
    let correction = &base - &base.mul_monomial(&Monomial::var(x.clone(), 1));
    let closed = &f + &correction;
    if n <= SUM_CHECK_MAX_RANK {
        let sums = signed_quotient_sums(n, true);
        let sum = &sums[1 << i];
        if &closed != sum {
            return Err(Error::internal(format!(
                "b_poly({n}, {i}): closed form {closed} != signed sum {sum}"
            )));
        }
    }
    Ok((*cache_put(id, closed)).clone())
}

/// `f_{K_n,I}(X)`: the signed sum over `B_n^{I^c}` with exponent
/// `ell - eps_n`, asserted equal to the factorization
/// `b_{n,max I}(X) * f_{max I, I \ {max I}}(X)`.
pub fn fk_poly(n: usize, indices: &[usize]) -> Result<MVPolynomial> {
    validate_subset(n, indices)?;
    if indices.is_empty() {
        return Err(Error::domain(
            "fk_poly: index set must be nonempty".to_string(),
        ));
    }
    let id = PaperPolynomialId::Fk {
        n: n as u8,
        indices: mask_of(indices),
    };
    if let Some(p) = cache_get(id) {
        return Ok((*p).clone());
    }
    if n <= SUM_CHECK_MAX_RANK {
        let sums = signed_quotient_sums(n, true);
        for mask in 1u32..(1 << n) {
            let idxs = indices_of(mask);
            let t = *idxs.last().unwrap();
            let r: Vec<usize> = idxs[..idxs.len() - 1].to_vec();
            let fac = &b_poly(n, t)? * &f_poly(t, &r)?;
            if fac != sums[mask as usize] {
                return Err(Error::internal(format!(
                    "fk_poly({n}, {idxs:?}): factorization {fac} != signed sum {}",
                    sums[mask as usize]
                )));
            }
            cache_put(
                PaperPolynomialId::Fk {
                    n: n as u8,
                    indices: mask,
                },
                fac,
            );
        }
        Ok((*cache_get(id).expect("family just cached")).clone())
    } else {
        let top = *indices.last().unwrap();
        let rest: Vec<usize> = indices[..indices.len() - 1].to_vec();
        let factored = &b_poly(n, top)? * &f_poly(top, &rest)?;
        Ok((*cache_put(id, factored)).clone())
    }
}

fn validate_subset(n: usize, indices: &[usize]) -> Result<()> {
    for w in indices.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::domain(
                "index set must be sorted strictly ascending".to_string(),
            ));
        }
    }
    if let Some(&top) = indices.last() {
        if top >= n {
            return Err(Error::domain(format!(
                "index {top} outside [n-1]_0 for n = {n}"
            )));
        }
    }
    Ok(())
}

/// The Igusa function of degree `n` with parameter `y` and numerical data
/// `data[i]` for `i` in `[n-1]_0`, computed both as the subset sum
/// `1/(1-data[0]) * sum_I [n choose I]_y prod gp(data[i])` and as the `S_n`
/// descent sum over `prod_j (1 - data[j])`; the two must agree.
///
/// `i` is the 0-based index of the numerical data: the distinguished slot
/// behind the standalone `1/(1 - .)` prefactor is `data[0]`, and a descent at
/// position `j` picks up `data[j]`.
pub fn igusa(n: usize, y: &SignedMonomial, data: &[SignedMonomial]) -> Result<FactoredRatFunc> {
    if n == 0 || data.len() != n {
        return Err(Error::domain(format!(
            "igusa: need n >= 1 numerical data slots, got n = {n}, {} slots",
            data.len()
        )));
    }
    let yvar = Var::new("Y");
    let ymap: HashMap<Var, SignedMonomial> = [(yvar.clone(), y.clone())].into_iter().collect();

    // subset-sum form
    let mut subset_sum = FactoredRatFunc::zero();
    for mask in 0u32..(1 << (n - 1)) {
        let idxs: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let idx_u32: Vec<u32> = idxs.iter().map(|&i| i as u32).collect();
        let multinom = qmultinom(n as u32, &idx_u32, &yvar)?.substitute(&ymap)?;
        let mut term = FactoredRatFunc::from_poly(multinom);
        for &i in &idxs {
            term = term.mul(&FactoredRatFunc::gp(&data[i])?);
        }
        subset_sum = subset_sum.add(&term);
    }
    let prefactor = FactoredRatFunc::new(
        MVPolynomial::one(),
        vec![BinomFactor::new(data[0].coeff.clone(), data[0].mono.clone())],
    );
    let subset_form = subset_sum.mul(&prefactor);

    // S_n descent form
    let mut num = MVPolynomial::zero();
    for w in enumerate(n, CoxeterType::A) {
        let st = w.stats();
        let mut term = y.pow(st.ell as i64).ok_or_else(|| {
            Error::domain("igusa parameter cannot be raised to the required power".to_string())
        })?;
        for &j in &st.des_set {
            term = term.mul(&data[j]);
        }
        num.add_term(term.mono, term.coeff);
    }
    let den: Vec<BinomFactor> = (0..n)
        .map(|j| BinomFactor::new(data[j].coeff.clone(), data[j].mono.clone()))
        .collect();
    let descent_form = FactoredRatFunc::new(num, den);

    if !subset_form.eq_semantic(&descent_form) {
        return Err(Error::internal(format!(
            "igusa({n}): subset form {subset_form} != descent form {descent_form}"
        )));
    }
    Ok(descent_form)
}

/// The three-variable rational function `B_n(X, Y, Z)`: the sum over
/// `j = 0..n` of `[n choose j]_X Z^{n-j} prod_i (1 - X^{-i-j-1} Y)` divided by
/// `prod_i (1 - X^{i+j} Z)`.
pub fn script_b(n: usize) -> Result<FactoredRatFunc> {
    let (x, y, z) = (Var::new("X"), Var::new("Y"), Var::new("Z"));
    let mut total = FactoredRatFunc::zero();
    for j in 0..=n {
        let mut num =
            qbinom(n as u32, j as u32, &x)?.mul_monomial(&Monomial::var(z.clone(), (n - j) as i64));
        for i in 0..(n - j) {
            let e = -(i as i64) - (j as i64) - 1;
            let factor = &MVPolynomial::one()
                - &MVPolynomial::from_monomial(
                    Monomial::var(x.clone(), e).mul(&Monomial::var(y.clone(), 1)),
                    BigInt::from(1),
                );
            num = &num * &factor;
        }
        let den: Vec<BinomFactor> = (0..(n - j))
            .map(|i| {
                BinomFactor::new(
                    1,
                    Monomial::var(x.clone(), (i + j) as i64).mul(&Monomial::var(z.clone(), 1)),
                )
            })
            .collect();
        total = total.add(&FactoredRatFunc::new(num, den));
    }
    Ok(total)
}

/// Outcome of an exact polynomial identity check, with both sides kept for
/// diagnosis.
#[derive(Clone, Debug)]
pub struct PolyIdentityVerdict {
    pub lhs: MVPolynomial,
    pub rhs: MVPolynomial,
    pub pass: bool,
}

/// Outcome of an exact rational-function identity check.
#[derive(Clone, Debug)]
pub struct RatIdentityVerdict {
    pub lhs: FactoredRatFunc,
    pub rhs: FactoredRatFunc,
    pub pass: bool,
}

/// The four-variable factorization: the joint distribution of
/// `(des - eps_n, sigma_B - ell, neg, rmaj)` over `B_n` against the `S_n`
/// generating polynomial times `prod_j (1 + X^j Y Z)`.
pub fn prop_factor_check(n: usize) -> Result<PolyIdentityVerdict> {
    if n == 0 {
        return Err(Error::domain("prop_factor_check: need n >= 1".to_string()));
    }
    let (w_, x, y, z) = (Var::new("W"), Var::new("X"), Var::new("Y"), Var::new("Z"));
    let mut lhs = MVPolynomial::zero();
    for w in enumerate(n, CoxeterType::B) {
        let st = w.stats();
        let mono = Monomial::from_pairs([
            (w_.clone(), st.des as i64 - st.eps_n as i64),
            (x.clone(), st.sigma_b as i64 - st.ell as i64),
            (y.clone(), st.neg as i64),
            (z.clone(), st.rmaj as i64),
        ]);
        lhs.add_term(mono, BigInt::from(1));
    }
    let mut rhs = MVPolynomial::zero();
    for w in enumerate(n, CoxeterType::A) {
        let st = w.stats();
        let mono = Monomial::from_pairs([
            (w_.clone(), st.des as i64),
            (
                x.clone(),
                st.sigma_a as i64 - st.ell as i64 + (n as i64) * st.rmaj as i64,
            ),
            (z.clone(), st.rmaj as i64),
        ]);
        rhs.add_term(mono, BigInt::from(1));
    }
    for j in 0..n {
        let factor = &MVPolynomial::one()
            + &MVPolynomial::from_monomial(
                Monomial::from_pairs([(x.clone(), j as i64), (y.clone(), 1), (z.clone(), 1)]),
                BigInt::from(1),
            );
        rhs = &rhs * &factor;
    }
    let pass = lhs == rhs;
    Ok(PolyIdentityVerdict { lhs, rhs, pass })
}

/// The `W = 1` specialization factors completely:
/// `sum_{B_n} X^{sigma_B - ell} Y^{neg} Z^{rmaj}` equals
/// `prod_j ((1-(X^{n+j}Z)^{n-j})/(1-X^{n+j}Z)) (1+X^j Y Z)`.
pub fn prop_factor_w1_check(n: usize) -> Result<RatIdentityVerdict> {
    let (x, y, z) = (Var::new("X"), Var::new("Y"), Var::new("Z"));
    let mut lhs = MVPolynomial::zero();
    for w in enumerate(n, CoxeterType::B) {
        let st = w.stats();
        let mono = Monomial::from_pairs([
            (x.clone(), st.sigma_b as i64 - st.ell as i64),
            (y.clone(), st.neg as i64),
            (z.clone(), st.rmaj as i64),
        ]);
        lhs.add_term(mono, BigInt::from(1));
    }
    let lhs = FactoredRatFunc::from_poly(lhs);
    let mut rhs = FactoredRatFunc::one();
    for j in 0..n {
        let base = Monomial::var(x.clone(), (n + j) as i64).mul(&Monomial::var(z.clone(), 1));
        let geo_num = &MVPolynomial::one()
            - &MVPolynomial::from_monomial(base.pow((n - j) as i64), BigInt::from(1));
        let geo = FactoredRatFunc::new(geo_num, vec![BinomFactor::new(1, base)]);
        let aff = FactoredRatFunc::from_poly(
            &MVPolynomial::one()
                + &MVPolynomial::from_monomial(
                    Monomial::from_pairs([(x.clone(), j as i64), (y.clone(), 1), (z.clone(), 1)]),
                    BigInt::from(1),
                ),
        );
        rhs = rhs.mul(&geo).mul(&aff);
    }
    let pass = lhs.eq_semantic(&rhs);
    Ok(RatIdentityVerdict { lhs, rhs, pass })
}

/// Check on `B_n(X, -Y, X^n Z)`: equality with
/// `prod (1 + X^j Y Z) / prod (1 - X^{n+j} Z)` and with the Igusa form
/// `I_n(X^{-1}; (X^{n^2-i^2} Z^{n-i})) * prod (1 + X^j Y Z)`.
pub fn cor_bn_check(n: usize) -> Result<(RatIdentityVerdict, RatIdentityVerdict)> {
    let (x, y, z) = (Var::new("X"), Var::new("Y"), Var::new("Z"));
    let bn = script_b(n)?;
    let map: HashMap<Var, SignedMonomial> = [
        (
            y.clone(),
            SignedMonomial::new(-1, Monomial::var(y.clone(), 1)),
        ),
        (
            z.clone(),
            SignedMonomial::new(
                1,
                Monomial::var(x.clone(), n as i64).mul(&Monomial::var(z.clone(), 1)),
            ),
        ),
    ]
    .into_iter()
    .collect();
    let lhs = bn.substitute(&map)?;

    let mut aff_prod = MVPolynomial::one();
    for j in 0..n {
        let factor = &MVPolynomial::one()
            + &MVPolynomial::from_monomial(
                Monomial::from_pairs([(x.clone(), j as i64), (y.clone(), 1), (z.clone(), 1)]),
                BigInt::from(1),
            );
        aff_prod = &aff_prod * &factor;
    }
    let den: Vec<BinomFactor> = (0..n)
        .map(|j| {
            BinomFactor::new(
                1,
                Monomial::var(x.clone(), (n + j) as i64).mul(&Monomial::var(z.clone(), 1)),
            )
        })
        .collect();
    let rhs1 = FactoredRatFunc::new(aff_prod.clone(), den);
    let first = RatIdentityVerdict {
        pass: lhs.eq_semantic(&rhs1),
        lhs: lhs.clone(),
        rhs: rhs1,
    };

    let data: Vec<SignedMonomial> = (0..n)
        .map(|i| {
            SignedMonomial::new(
                1,
                Monomial::var(x.clone(), (n * n - i * i) as i64)
                    .mul(&Monomial::var(z.clone(), (n - i) as i64)),
            )
        })
        .collect();
    let ig = igusa(n, &SignedMonomial::var(x.clone(), -1), &data)?;
    let rhs2 = ig.mul(&FactoredRatFunc::from_poly(aff_prod));
    let second = RatIdentityVerdict {
        pass: lhs.eq_semantic(&rhs2),
        lhs,
        rhs: rhs2,
    };
    Ok((first, second))
}

/// The twisted odd-length factorization (conjectural): the length-signed
/// distribution of `X^{(sigma_B + rmaj)/2 - L} Z^{rmaj}` over `B_n` against
/// the `S_n` sum times `prod (1 - X^i Z)`. A failed identity is reported as
/// evidence, not as an error; an odd value of `sigma_B + rmaj` is an error.
pub fn conjecture_hn1_check(n: usize) -> Result<PolyIdentityVerdict> {
    let (x, z) = (Var::new("X"), Var::new("Z"));
    let mut lhs = MVPolynomial::zero();
    for w in enumerate(n, CoxeterType::B) {
        let st = w.stats();
        let half = sigma_rmaj_half(&st)?;
        let mono = Monomial::from_pairs([
            (x.clone(), half - st.odd_l as i64),
            (z.clone(), st.rmaj as i64),
        ]);
        let sign = if st.ell % 2 == 0 { 1 } else { -1 };
        lhs.add_term(mono, BigInt::from(sign));
    }
    let mut rhs = MVPolynomial::zero();
    for w in enumerate(n, CoxeterType::A) {
        let st = w.stats();
        let half = sigma_rmaj_half(&st)?;
        let mono = Monomial::from_pairs([
            (x.clone(), half - st.ell as i64),
            (z.clone(), st.rmaj as i64),
        ]);
        rhs.add_term(mono, BigInt::from(1));
    }
    for i in 0..n {
        let factor = &MVPolynomial::one()
            - &MVPolynomial::from_monomial(
                Monomial::from_pairs([(x.clone(), i as i64), (z.clone(), 1)]),
                BigInt::from(1),
            );
        rhs = &rhs * &factor;
    }
    let pass = lhs == rhs;
    Ok(PolyIdentityVerdict { lhs, rhs, pass })
}

fn sigma_rmaj_half(st: &crate::coxeter::StatRecord) -> Result<i64> {
    let total = st.sigma_b + st.rmaj;
    if total % 2 != 0 {
        return Err(Error::internal(format!(
            "sigma_B + rmaj = {total} is odd; the halved exponent is undefined"
        )));
    }
    Ok((total / 2) as i64)
}

/// `V_n(q, t)`: the `S_n` numerator of the factored zeta route,
/// `sum_{w} q^{-ell(w)} prod_{j in Des(w)} q^{n^2-j^2-1} t^{n-j}`, which is a
/// genuine polynomial (nonnegative exponents after the product is folded in).
pub fn v_numerator(n: usize) -> MVPolynomial {
    let id = PaperPolynomialId::V { n: n as u8 };
    if let Some(p) = cache_get(id) {
        return (*p).clone();
    }
    let (q, t) = (Var::new("q"), Var::new("t"));
    let mut v = MVPolynomial::zero();
    for w in enumerate(n, CoxeterType::A) {
        let st = w.stats();
        let mut qe = -(st.ell as i64);
        let mut te = 0i64;
        for &j in &st.des_set {
            qe += (n * n - j * j - 1) as i64;
            te += (n - j) as i64;
        }
        v.add_term(
            Monomial::var(q.clone(), qe).mul(&Monomial::var(t.clone(), te)),
            BigInt::from(1),
        );
    }
    (*cache_put(id, v)).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MVPolynomial {
        s.parse().unwrap()
    }

    fn sm(s: &str) -> SignedMonomial {
        p(s).as_signed_monomial().unwrap()
    }

    #[test]
    fn qbinom_examples() {
        let x = Var::new("X");
        assert_eq!(qbinom(2, 1, &x).unwrap(), p("1 + X"));
        assert_eq!(qbinom(5, 0, &x).unwrap(), p("1"));
        assert_eq!(qbinom(4, 2, &x).unwrap(), p("1 + X + 2*X^2 + X^3 + X^4"));
        assert!(qbinom(2, 3, &x).is_err());
        for n in 0..=8u32 {
            for i in 0..=n {
                assert_eq!(qbinom(n, i, &x).unwrap(), qbinom(n, n - i, &x).unwrap());
            }
        }
    }

    #[test]
    fn qmultinom_examples() {
        let x = Var::new("X");
        assert_eq!(qmultinom(7, &[], &x).unwrap(), p("1"));
        assert_eq!(qmultinom(5, &[2], &x).unwrap(), qbinom(5, 2, &x).unwrap());
        assert_eq!(
            qmultinom(3, &[1, 2], &x).unwrap(),
            &p("1 + X + X^2") * &p("1 + X")
        );
        assert!(qmultinom(3, &[1, 4], &x).is_err());
    }

    #[test]
    fn f_poly_examples() {
        assert_eq!(f_poly(3, &[]).unwrap(), p("1"));
        assert_eq!(f_poly(1, &[0]).unwrap(), p("1 - X"));
        assert_eq!(f_poly(2, &[1]).unwrap(), p("1 + X - X^2 - X^3"));
    }

    #[test]
    fn b_poly_examples() {
        assert_eq!(b_poly(2, 0).unwrap(), p("1 - X"));
        assert_eq!(b_poly(2, 1).unwrap(), p("1 - X^2"));
        // b is f with one exponent lowered, so they differ in exactly two terms
        let f = f_poly(3, &[1]).unwrap();
        let b = b_poly(3, 1).unwrap();
        let diff = &f - &b;
        assert_eq!(diff.num_terms(), 2);
    }

    #[test]
    fn fk_poly_examples() {
        assert_eq!(fk_poly(2, &[1]).unwrap(), p("1 - X^2"));
        assert_eq!(fk_poly(2, &[0, 1]).unwrap(), &p("1 - X^2") * &p("1 - X"));
        for n in 1..=4 {
            for i in 0..n {
                assert_eq!(fk_poly(n, &[i]).unwrap(), b_poly(n, i).unwrap());
            }
        }
        assert!(fk_poly(3, &[]).is_err());
    }

    #[test]
    fn igusa_small() {
        // igusa(1; y; x) = 1/(1 - x)
        let x1 = sm("q*t");
        let ig = igusa(1, &sm("q^-1"), &[x1.clone()]).unwrap();
        let expect = FactoredRatFunc::new(
            MVPolynomial::one(),
            vec![BinomFactor::new(1, x1.mono.clone())],
        );
        assert!(ig.eq_semantic(&expect));
    }

    #[test]
    fn igusa_two_slots_closed_form() {
        // igusa(2; Y; slots) = (1 + Y*data[1]) / ((1-data[0])(1-data[1]))
        let d0 = sm("u");
        let d1 = sm("v");
        let ig = igusa(2, &sm("Y"), &[d0.clone(), d1.clone()]).unwrap();
        let expect = FactoredRatFunc::new(
            p("1 + Y*v"),
            vec![
                BinomFactor::new(1, d0.mono.clone()),
                BinomFactor::new(1, d1.mono.clone()),
            ],
        );
        assert!(ig.eq_semantic(&expect));
    }

    #[test]
    fn igusa_total_factorization() {
        // I_n(X^{-1}; ((X^i Z)^{n-i})_i) = 1 / prod_j (1 - X^j Z)
        let (x, z) = (Var::new("X"), Var::new("Z"));
        for n in 1..=5 {
            let data: Vec<SignedMonomial> = (0..n)
                .map(|i| {
                    SignedMonomial::new(
                        1,
                        Monomial::var(x.clone(), i as i64)
                            .mul(&Monomial::var(z.clone(), 1))
                            .pow((n - i) as i64),
                    )
                })
                .collect();
            let ig = igusa(n, &SignedMonomial::var(x.clone(), -1), &data).unwrap();
            let expect = FactoredRatFunc::new(
                MVPolynomial::one(),
                (0..n)
                    .map(|j| {
                        BinomFactor::new(
                            1,
                            Monomial::var(x.clone(), j as i64).mul(&Monomial::var(z.clone(), 1)),
                        )
                    })
                    .collect(),
            );
            assert!(ig.eq_semantic(&expect), "n = {n}");
        }
    }

    #[test]
    fn prop_factor_small() {
        for n in 1..=4 {
            let v = prop_factor_check(n).unwrap();
            assert!(v.pass, "factorization failed at n = {n}");
        }
        // n = 1 by hand: LHS = 1 + YZ
        let v = prop_factor_check(1).unwrap();
        assert_eq!(v.lhs, p("1 + Y*Z"));
    }

    #[test]
    fn prop_factor_w1_small() {
        for n in 1..=4 {
            let v = prop_factor_w1_check(n).unwrap();
            assert!(v.pass, "W=1 factorization failed at n = {n}");
        }
    }

    #[test]
    fn cor_bn_small() {
        for n in 1..=3 {
            let (a, b) = cor_bn_check(n).unwrap();
            assert!(a.pass && b.pass, "cor_Bn failed at n = {n}");
        }
    }

    #[test]
    fn conjecture_hn1_small() {
        let v = conjecture_hn1_check(1).unwrap();
        assert!(v.pass);
        assert_eq!(v.lhs, p("1 - Z"));
        for n in 2..=4 {
            let v = conjecture_hn1_check(n).unwrap();
            assert!(v.pass, "conjectured identity refuted at n = {n}?");
        }
    }

    #[test]
    fn sigma_plus_rmaj_always_even() {
        for n in 1..=5 {
            for w in enumerate(n, CoxeterType::B) {
                let st = w.stats();
                assert_eq!((st.sigma_b + st.rmaj) % 2, 0, "w = {w}");
                // closed form: sum over descents of (n-j)(n+j+1)
                let s: u64 = st
                    .des_set
                    .iter()
                    .map(|&j| ((n - j) * (n + j + 1)) as u64)
                    .sum();
                assert_eq!(st.sigma_b + st.rmaj, s);
            }
        }
    }

    #[test]
    fn v_numerator_small() {
        assert_eq!(v_numerator(1), p("1"));
        assert_eq!(v_numerator(2), p("1 + q*t"));
    }
}
