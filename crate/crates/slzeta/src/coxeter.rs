//! Signed permutation groups `B_n` (with `S_n` embedded as the sign-free
//! elements), their standard statistics, descent-class quotients, and the
//! bar-lift bijection that shifts the inverse negative set.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Which Weyl family an operation refers to: `A` is the symmetric group
/// `S_n` inside `B_n`, `B` the full signed permutation group.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoxeterType {
    A,
    B,
}

/// A signed permutation in one-line notation: `window[i-1] = w(i)`, absolute
/// values a permutation of `1..=n`. The element lies in `S_n` iff every entry
/// is positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > n || seen[a] {
                return Err(Error::domain(format!(
                    "invalid one-line notation {window:?}"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    /// `w(i)` for `i` in `1..=n`.
    pub fn image(&self, i: usize) -> i32 {
        self.window[i - 1]
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&x| x > 0)
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.rank();
        let mut window = vec![0; n];
        for i in 1..=n {
            let v = self.window[i - 1];
            if v > 0 {
                window[v as usize - 1] = i as i32;
            } else {
                window[(-v) as usize - 1] = -(i as i32);
            }
        }
        SignedPermutation { window }
    }

    /// Letters occurring with a negative sign, i.e. `Neg(w^{-1})`.
    pub fn negative_letters(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .window
            .iter()
            .filter(|&&x| x < 0)
            .map(|&x| (-x) as usize)
            .collect();
        out.sort_unstable();
        out
    }

    /// Right multiplication by the Coxeter generator `s_i` (`i = 0` negates
    /// the first window entry; `i >= 1` swaps positions `i` and `i+1`).
    pub fn right_multiply_generator(&self, i: usize) -> SignedPermutation {
        let mut window = self.window.clone();
        if i == 0 {
            window[0] = -window[0];
        } else {
            window.swap(i - 1, i);
        }
        SignedPermutation { window }
    }

    pub fn stats(&self) -> StatRecord {
        StatRecord::of(self)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        f.write_str(&strs.join(" "))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let window: std::result::Result<Vec<i32>, _> =
            s.split_whitespace().map(|x| x.parse::<i32>()).collect();
        let window = window.map_err(|e| Error::parse(format!("bad window entry: {e}")))?;
        SignedPermutation::new(window)
    }
}

/// All statistics of one element, computed in a single pass.
///
/// Invariants: `ell = inv + neg + nsp`; `des = |des_set|`;
/// `rmaj = sum (n-i)`, `sigma_b = sum (n^2-i^2)` over the descent set;
/// `eps_n = 1` iff `w(n) < 0`; `sigma_a` is only meaningful on `S_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StatRecord {
    pub inv: u64,
    pub neg: u64,
    pub nsp: u64,
    pub ell: u64,
    pub des_set: Vec<usize>,
    pub des: u64,
    pub rmaj: u64,
    pub sigma_b: u64,
    pub sigma_a: u64,
    pub eps_n: u64,
    pub odd_l: u64,
}

impl StatRecord {
    pub fn of(w: &SignedPermutation) -> StatRecord {
        let n = w.rank();
        let win = &w.window;
        let mut inv = 0u64;
        let mut nsp = 0u64;
        for i in 0..n {
            for j in (i + 1)..n {
                if win[i] > win[j] {
                    inv += 1;
                }
                if win[i] + win[j] < 0 {
                    nsp += 1;
                }
            }
        }
        let neg = win.iter().filter(|&&x| x < 0).count() as u64;
        let ell = inv + neg + nsp;
        let mut des_set = Vec::new();
        if n > 0 && win[0] < 0 {
            des_set.push(0);
        }
        for i in 1..n {
            if win[i - 1] > win[i] {
                des_set.push(i);
            }
        }
        let des = des_set.len() as u64;
        let rmaj: u64 = des_set.iter().map(|&i| (n - i) as u64).sum();
        let sigma_b: u64 = des_set.iter().map(|&i| (n * n - i * i) as u64).sum();
        let sigma_a: u64 = des_set.iter().map(|&i| (i * (n - i)) as u64).sum();
        let eps_n = if n > 0 && win[n - 1] < 0 { 1 } else { 0 };
        // Odd length: inversions of the window [-n, n] with w(0) = 0 and
        // w(-i) = -w(i), counted over opposite-parity index pairs; the total
        // is always even and is halved exactly.
        let full_image = |i: i64| -> i64 {
            if i == 0 {
                0
            } else if i > 0 {
                win[(i - 1) as usize] as i64
            } else {
                -(win[(-i - 1) as usize] as i64)
            }
        };
        let mut odd_pairs = 0u64;
        let nn = n as i64;
        for i in -nn..=nn {
            for j in (i + 1)..=nn {
                if (i - j) % 2 != 0 && full_image(i) > full_image(j) {
                    odd_pairs += 1;
                }
            }
        }
        debug_assert!(odd_pairs % 2 == 0, "odd-length count must be even");
        let odd_l = odd_pairs / 2;
        StatRecord {
            inv,
            neg,
            nsp,
            ell,
            des_set,
            des,
            rmaj,
            sigma_b,
            sigma_a,
            eps_n,
            odd_l,
        }
    }

    pub fn des_mask(&self) -> u32 {
        self.des_set.iter().fold(0, |m, &i| m | (1 << i))
    }
}

/// Stream of all elements of `S_n` or `B_n` in lexicographic window order.
pub fn enumerate(n: usize, ty: CoxeterType) -> ElementIter {
    ElementIter::new(n, ty)
}

/// Group order: `n!` for type A, `2^n n!` for type B.
pub fn group_order(n: usize, ty: CoxeterType) -> u64 {
    let fact: u64 = (1..=n as u64).product();
    match ty {
        CoxeterType::A => fact,
        CoxeterType::B => fact << n,
    }
}

/// Backtracking iterator over windows in lexicographic order.
pub struct ElementIter {
    n: usize,
    ty: CoxeterType,
    stack: Vec<i32>,
    used: Vec<bool>,
    done: bool,
    fresh: bool,
}

impl ElementIter {
    fn new(n: usize, ty: CoxeterType) -> Self {
        ElementIter {
            n,
            ty,
            stack: Vec::with_capacity(n),
            used: vec![false; n + 1],
            done: false,
            fresh: true,
        }
    }

    /// Next unused candidate value strictly after `after`, ascending.
    fn next_candidate(&self, after: Option<i32>) -> Option<i32> {
        let lo = match self.ty {
            CoxeterType::A => 1,
            CoxeterType::B => -(self.n as i32),
        };
        let mut v = match after {
            None => lo,
            Some(a) => a + 1,
        };
        while v <= self.n as i32 {
            if v != 0 && !self.used[v.unsigned_abs() as usize] {
                return Some(v);
            }
            v += 1;
        }
        None
    }

    fn descend(&mut self) -> bool {
        while self.stack.len() < self.n {
            match self.next_candidate(None) {
                Some(v) => {
                    self.used[v.unsigned_abs() as usize] = true;
                    self.stack.push(v);
                }
                None => return false,
            }
        }
        true
    }

    fn backtrack(&mut self) -> bool {
        while let Some(top) = self.stack.pop() {
            self.used[top.unsigned_abs() as usize] = false;
            if let Some(v) = self.next_candidate(Some(top)) {
                self.used[v.unsigned_abs() as usize] = true;
                self.stack.push(v);
                return true;
            }
        }
        false
    }
}

impl Iterator for ElementIter {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            if self.n == 0 {
                self.done = true;
                return Some(SignedPermutation::identity(0));
            }
            if !self.descend() {
                self.done = true;
                return None;
            }
        } else if !self.backtrack() || !self.descend() {
            self.done = true;
            return None;
        }
        Some(SignedPermutation {
            window: self.stack.clone(),
        })
    }
}

/// The quotient `W^{I^c}`: all elements whose descent set is contained in
/// `I`, in lexicographic order. Type A restricts `I` to `[n-1]`, type B to
/// `[n-1]_0`.
pub fn quotient(n: usize, indices: &[usize], ty: CoxeterType) -> Result<Vec<SignedPermutation>> {
    for &i in indices {
        let ok = match ty {
            CoxeterType::A => (1..n).contains(&i),
            CoxeterType::B => i < n,
        };
        if !ok {
            return Err(Error::domain(format!(
                "quotient index {i} out of range for rank {n} type {ty:?}"
            )));
        }
    }
    let mask: u32 = indices.iter().fold(0, |m, &i| m | (1 << i));
    Ok(enumerate(n, ty)
        .filter(|w| {
            let dm = w.stats().des_mask();
            dm & !mask == 0
        })
        .collect())
}

/// The bar-lift relabelling: given `w` with `J = Neg(w^{-1})` and a letter
/// `j` with `max J < j <= n`, produce the element with inverse negative set
/// `J ∪ {j}` by replacing the positive letters other than `n` by their
/// counterparts with `j` removed from the list, and putting `-j` where the
/// letter `n` stood.
pub fn bar_lift(w: &SignedPermutation, j: usize) -> Result<SignedPermutation> {
    let n = w.rank();
    let neg = w.negative_letters();
    let max_neg = neg.last().copied().unwrap_or(0);
    if j <= max_neg || j > n {
        return Err(Error::domain(format!(
            "bar_lift letter {j} not above Neg(w^-1) = {neg:?}"
        )));
    }
    // positive letters a_1 < ... < a_s (a_s = n); removing j gives b_1 < ... < b_{s-1}
    let positives: Vec<usize> = (1..=n).filter(|a| !neg.contains(a)).collect();
    debug_assert_eq!(positives.last(), Some(&n));
    let shifted: Vec<usize> = positives.iter().copied().filter(|&a| a != j).collect();
    let mut image = vec![0i32; n + 1];
    for (r, &a) in positives.iter().enumerate() {
        if a == n {
            image[a] = -(j as i32);
        } else {
            image[a] = shifted[r] as i32;
        }
    }
    let window = w
        .window
        .iter()
        .map(|&x| if x > 0 { image[x as usize] } else { x })
        .collect();
    SignedPermutation::new(window)
}

/// Coxeter length computed independently of the statistics formula: greedily
/// strip descents until the identity is reached, counting generator
/// multiplications.
pub fn length_by_reduction(w: &SignedPermutation) -> u64 {
    let mut cur = w.clone();
    let mut steps = 0u64;
    let id = SignedPermutation::identity(w.rank());
    while cur != id {
        let st = cur.stats();
        let i = *st
            .des_set
            .first()
            .expect("non-identity element has a descent");
        cur = cur.right_multiply_generator(i);
        steps += 1;
    }
    steps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(2, CoxeterType::A).count(), 2);
        assert_eq!(enumerate(2, CoxeterType::B).count(), 8);
        assert_eq!(enumerate(3, CoxeterType::B).count(), 48);
        assert_eq!(enumerate(4, CoxeterType::A).count(), 24);
        // n = 0 yields exactly the empty-window identity
        assert_eq!(enumerate(0, CoxeterType::B).count(), 1);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all: Vec<SignedPermutation> = enumerate(2, CoxeterType::B).collect();
        let windows: Vec<&[i32]> = all.iter().map(|w| w.window()).collect();
        assert_eq!(
            windows,
            vec![
                &[-2, -1][..],
                &[-2, 1],
                &[-1, -2],
                &[-1, 2],
                &[1, -2],
                &[1, 2],
                &[2, -1],
                &[2, 1]
            ]
        );
    }

    #[test]
    fn stats_examples() {
        // the generator s_0 = (-1, 2, ..., n)
        for n in 1..=5 {
            let mut win: Vec<i32> = (1..=n as i32).collect();
            win[0] = -1;
            let st = SignedPermutation::new(win).unwrap().stats();
            assert_eq!(st.ell, 1);
            assert_eq!(st.neg, 1);
            assert_eq!(st.des_set, vec![0]);
        }
        let st = sp("1 -2").stats();
        assert_eq!((st.inv, st.neg, st.nsp, st.ell, st.eps_n), (1, 1, 1, 3, 1));
        assert_eq!(st.des_set, vec![1]);
        // Neg((1,-3,-4,2)^{-1}) = {3,4}
        assert_eq!(sp("1 -3 -4 2").negative_letters(), vec![3, 4]);
        assert_eq!(sp("1 -3 -4 2").inverse().window(), &[1, 4, -2, -3]);
    }

    #[test]
    fn descents_match_length_rule() {
        for n in 1..=5 {
            for w in enumerate(n, CoxeterType::B) {
                let st = w.stats();
                for i in 0..n {
                    let ws = w.right_multiply_generator(i);
                    let drops = ws.stats().ell < st.ell;
                    assert_eq!(
                        st.des_set.contains(&i),
                        drops,
                        "descent rule mismatch at w = {w}, i = {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn length_by_greedy_reduction_agrees() {
        for n in 1..=4 {
            for w in enumerate(n, CoxeterType::B) {
                assert_eq!(length_by_reduction(&w), w.stats().ell, "w = {w}");
            }
        }
    }

    #[test]
    fn restriction_to_sn_is_inversion_count() {
        for n in 1..=5 {
            for w in enumerate(n, CoxeterType::A) {
                let st = w.stats();
                assert_eq!(st.ell, st.inv);
                assert_eq!(st.neg, 0);
                assert_eq!(st.nsp, 0);
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let q = quotient(3, &[], CoxeterType::A).unwrap();
        assert_eq!(q, vec![SignedPermutation::identity(3)]);
        let q = quotient(2, &[1], CoxeterType::B).unwrap();
        let mut windows: Vec<&[i32]> = q.iter().map(|w| w.window()).collect();
        windows.sort();
        assert_eq!(windows, vec![&[1, -2][..], &[1, 2], &[2, -1], &[2, 1]]);
        // |S_n^{{i}^c}| = C(n, i)
        for n in 1..=5usize {
            for i in 1..n {
                let count = quotient(n, &[i], CoxeterType::A).unwrap().len();
                let c = (0..i).fold(1usize, |acc, k| acc * (n - k) / (k + 1));
                assert_eq!(count, c, "n = {n}, i = {i}");
            }
        }
        assert!(quotient(3, &[3], CoxeterType::A).is_err());
        assert!(quotient(3, &[0], CoxeterType::A).is_err());
    }

    #[test]
    fn bar_lift_smallest_case() {
        let w = SignedPermutation::identity(1);
        let v = bar_lift(&w, 1).unwrap();
        assert_eq!(v.window(), &[-1]);
        let (sw, sv) = (w.stats(), v.stats());
        assert_eq!(sv.neg, sw.neg + 1);
        assert_eq!(sv.rmaj, sw.rmaj + 1);
    }

    #[test]
    fn bar_lift_bijection_and_shifts() {
        use std::collections::{HashMap, HashSet};
        for n in 1..=4 {
            let mut classes: HashMap<Vec<usize>, Vec<SignedPermutation>> = HashMap::new();
            for w in enumerate(n, CoxeterType::B) {
                classes.entry(w.negative_letters()).or_default().push(w);
            }
            for (neg_set, members) in &classes {
                let max_neg = neg_set.last().copied().unwrap_or(0);
                for j in (max_neg + 1)..=n {
                    let mut target: Vec<usize> = neg_set.clone();
                    target.push(j);
                    target.sort_unstable();
                    let mut images = HashSet::new();
                    for w in members {
                        let v = bar_lift(w, j).unwrap();
                        assert_eq!(v.negative_letters(), target);
                        let (sw, sv) = (w.stats(), v.stats());
                        let k = (w.window().iter().position(|&x| x == n as i32).unwrap() + 1)
                            as i64;
                        assert_eq!(
                            sv.ell as i64,
                            sw.ell as i64 + 2 * k - n as i64 - 1 + j as i64
                        );
                        let mut expect_des: Vec<usize> = sw
                            .des_set
                            .iter()
                            .copied()
                            .filter(|&d| d != k as usize)
                            .collect();
                        expect_des.push(k as usize - 1);
                        expect_des.sort_unstable();
                        expect_des.dedup();
                        assert_eq!(sv.des_set, expect_des);
                        assert_eq!(sv.sigma_b - sv.ell, sw.sigma_b - sw.ell + (n - j) as u64);
                        assert_eq!(sv.des - sv.eps_n, sw.des - sw.eps_n);
                        assert_eq!(sv.neg, sw.neg + 1);
                        assert_eq!(sv.rmaj, sw.rmaj + 1);
                        images.insert(v);
                    }
                    // injective with the right cardinality = bijection
                    assert_eq!(images.len(), members.len());
                    assert_eq!(
                        images.len(),
                        classes.get(&target).map(|v| v.len()).unwrap_or(0)
                    );
                }
            }
        }
    }

    #[test]
    fn bar_lift_domain_errors() {
        let w = sp("1 -3 -4 2"); // Neg(w^{-1}) = {3, 4}
        assert!(bar_lift(&w, 3).is_err());
        assert!(bar_lift(&w, 4).is_err());
        assert!(bar_lift(&w, 5).is_err());
    }

    #[test]
    fn parse_display_roundtrip() {
        let w = sp("1 -3 -4 2");
        assert_eq!(w.to_string(), "1 -3 -4 2");
        assert!(SignedPermutation::new(vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![1, 3]).is_err());
        assert!(SignedPermutation::new(vec![0, 1]).is_err());
    }
}
