//! Binomial (cascade) representations and the shadow operators built on them.
//!
//! Every non-negative integer `r` has, for each `k >= 1`, a unique expansion
//!
//! ```text
//! r = C(r_k, k) + C(r_{k-1}, k-1) + ... + C(r_j, j),   r_k > r_{k-1} > ... > r_j >= j >= 1
//! ```
//!
//! where trailing terms of value zero are dropped. The three shadow operators
//! replace each term `C(m, i)` by
//!
//! | operator            | term image        |
//! |---------------------|-------------------|
//! | [`lower_shadow`]    | `C(m, i - 1)`     |
//! | [`macaulay_shadow`] | `C(m - 1, i - 1)` |
//! | [`upper_shadow`]    | `C(m + 1, i + 1)` |
//!
//! `lower_shadow(r, k)` is the minimum shadow size of `r` distinct `k`-sets,
//! `macaulay_shadow(r, k)` the minimum shadow size of `r` distinct `k`-multisets
//! and `upper_shadow(r, k)` the maximum number of `(k+1)`-multisets whose
//! shadow fits inside `r` given `k`-multisets.
//!
//! All arithmetic is exact; values are [`BigUint`].

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: &BigUint, k: u64) -> BigUint {
    let k_big = BigUint::from(k);
    if &k_big > n {
        return BigUint::zero();
    }
    let complement = n - &k_big;
    let steps = match complement.to_u64() {
        Some(c) if c < k => c,
        _ => k,
    };
    let mut acc = BigUint::one();
    for i in 0..steps {
        acc *= n - BigUint::from(i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// `C(n, k)` for machine-sized `n`.
pub fn binomial_u64(n: u64, k: u64) -> BigUint {
    binomial(&BigUint::from(n), k)
}

/// The cascade expansion of a non-negative integer for a fixed depth `k`.
///
/// Terms are stored as `(r_i, i)` with `i` strictly descending from `k`.
/// The zero integer has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinomialRep {
    k: u32,
    terms: Vec<(BigUint, u32)>,
}

impl BinomialRep {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn terms(&self) -> &[(BigUint, u32)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the terms; reproduces the represented integer.
    pub fn value(&self) -> BigUint {
        self.map_terms(|m, i| binomial(m, i as u64))
    }

    /// Applies `term(r_i, i)` to every term and sums the results.
    fn map_terms<F>(&self, term: F) -> BigUint
    where
        F: Fn(&BigUint, u32) -> BigUint,
    {
        self.terms
            .iter()
            .fold(BigUint::zero(), |acc, (m, i)| acc + term(m, *i))
    }
}

impl fmt::Display for BinomialRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, i)| format!("C({m},{i})"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Largest `m` with `C(m, i) <= r`, for `r >= 1` and `i >= 1`.
fn largest_top(r: &BigUint, i: u32) -> BigUint {
    if i == 1 {
        return r.clone();
    }
    let i64_ = i as u64;
    let mut lo = BigUint::from(i64_);
    let mut hi = BigUint::from(2 * i64_ + 1);
    while &binomial(&hi, i64_) <= r {
        lo = hi.clone();
        hi <<= 1;
    }
    // C(lo, i) <= r < C(hi, i)
    while &hi - &lo > BigUint::one() {
        let mid: BigUint = (&lo + &hi) >> 1;
        if &binomial(&mid, i64_) <= r {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy cascade expansion of `r` with depth `k`.
///
/// # Panics
///
/// If `k == 0`.
pub fn binomial_rep(r: &BigUint, k: u32) -> BinomialRep {
    assert!(k >= 1, "binomial representation needs k >= 1");
    let mut rest = r.clone();
    let mut terms = Vec::new();
    for i in (1..=k).rev() {
        if rest.is_zero() {
            break;
        }
        let top = largest_top(&rest, i);
        rest -= binomial(&top, i as u64);
        terms.push((top, i));
    }
    debug_assert!(rest.is_zero());
    BinomialRep { k, terms }
}

/// Kruskal–Katona shadow: each `C(m, i)` becomes `C(m, i - 1)`.
pub fn lower_shadow(r: &BigUint, k: u32) -> BigUint {
    binomial_rep(r, k).map_terms(|m, i| binomial(m, (i - 1) as u64))
}

/// Macaulay shadow: each `C(m, i)` becomes `C(m - 1, i - 1)`.
pub fn macaulay_shadow(r: &BigUint, k: u32) -> BigUint {
    // every stored term has m >= i >= 1, so m - 1 never underflows
    binomial_rep(r, k).map_terms(|m, i| binomial(&(m - 1u32), (i - 1) as u64))
}

/// Macaulay upper bound: each `C(m, i)` becomes `C(m + 1, i + 1)`.
pub fn upper_shadow(r: &BigUint, k: u32) -> BigUint {
    binomial_rep(r, k).map_terms(|m, i| binomial(&(m + 1u32), (i + 1) as u64))
}

/// Which of the three shadow operators to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShadowKind {
    Lower,
    Macaulay,
    Upper,
}

impl ShadowKind {
    pub fn apply(self, r: &BigUint, k: u32) -> BigUint {
        match self {
            ShadowKind::Lower => lower_shadow(r, k),
            ShadowKind::Macaulay => macaulay_shadow(r, k),
            ShadowKind::Upper => upper_shadow(r, k),
        }
    }
}
