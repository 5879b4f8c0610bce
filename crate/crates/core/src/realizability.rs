//! Decision procedures for face vectors and h-vectors.
//!
//! The relative checks all follow the same shape: two sequences `a` and `b`
//! are built from the input, `a - b` reproduces the input and `(1, a)`,
//! `(1, b)` are the componentwise smallest face vectors of a nested pair of
//! (multi)complexes realizing it. Top-down runs are accepted iff `a_0` fits
//! the ground set; bottom-up runs iff `b` never turns negative.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json::big_vec;
use crate::shadow::{macaulay_shadow, upper_shadow, ShadowKind};
use crate::vector::{FVector, HVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    TopDown,
    BottomUp,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    /// `index` is the dimension index of the failing comparison.
    Rejected {
        index: i64,
        reason: String,
    },
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }

    pub fn failed_index(&self) -> Option<i64> {
        match self {
            Verdict::Accepted => None,
            Verdict::Rejected { index, .. } => Some(*index),
        }
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            Verdict::Accepted => None,
            Verdict::Rejected { reason, .. } => Some(reason),
        }
    }

    fn rejected(index: i64, reason: impl Into<String>) -> Self {
        Verdict::Rejected {
            index,
            reason: reason.into(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accepted => write!(f, "accepted"),
            Verdict::Rejected { index, reason } => write!(f, "rejected at {index}: {reason}"),
        }
    }
}

/// The `(a, b)` trace of a realizability recursion together with its verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificatePair {
    pub a: Vec<BigInt>,
    pub b: Vec<BigInt>,
    pub direction: Direction,
    pub verdict: Verdict,
}

impl CertificatePair {
    pub fn is_accepted(&self) -> bool {
        self.verdict.is_accepted()
    }

    /// `b_k >= 0` for each computed index.
    pub fn nonnegative_b(&self) -> Vec<bool> {
        self.b.iter().map(|x| !x.is_negative()).collect()
    }

    pub fn to_json(&self) -> VerdictJson {
        VerdictJson {
            accepted: self.verdict.is_accepted(),
            a: self.a.clone(),
            b: self.b.clone(),
            failed_index: self.verdict.failed_index(),
            reason: self.verdict.reason().map(str::to_owned),
        }
    }
}

/// Wire form `{"accepted":bool,"a":[…],"b":[…],"failed_index":int|null,"reason":string|null}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictJson {
    pub accepted: bool,
    #[serde(with = "big_vec")]
    pub a: Vec<BigInt>,
    #[serde(with = "big_vec")]
    pub b: Vec<BigInt>,
    pub failed_index: Option<i64>,
    pub reason: Option<String>,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        VerdictJson {
            accepted: v.is_accepted(),
            a: Vec::new(),
            b: Vec::new(),
            failed_index: v.failed_index(),
            reason: v.reason().map(str::to_owned),
        }
    }
}

fn big(x: &BigUint) -> BigInt {
    BigInt::from(x.clone())
}

fn sub_or_zero(x: &BigUint, y: &BigUint) -> BigUint {
    if x > y {
        x - y
    } else {
        BigUint::zero()
    }
}

/// Top-down recursion over `f_0, ..., f_{d-1}` with the given shadow.
fn top_down(f: &[BigUint], shadow: ShadowKind) -> (Vec<BigUint>, Vec<BigUint>) {
    let d = f.len();
    let mut a = vec![BigUint::zero(); d];
    let mut b = vec![BigUint::zero(); d];
    if d == 0 {
        return (a, b);
    }
    a[d - 1] = f[d - 1].clone();
    for k in (1..d).rev() {
        let sa = shadow.apply(&a[k], k as u32 + 1);
        let sb = shadow.apply(&b[k], k as u32 + 1);
        a[k - 1] = sa.clone().max(&f[k - 1] + &sb);
        b[k - 1] = sb.max(sub_or_zero(&sa, &f[k - 1]));
    }
    (a, b)
}

fn proper_entries(f: &FVector) -> Result<Vec<BigUint>> {
    if !f.is_proper() {
        return Err(Error::NotProper);
    }
    let trimmed = f.trimmed().to_naturals()?;
    Ok(trimmed.into_iter().skip(1).collect())
}

fn relative_top_down(f: &FVector, n: u64, shadow: ShadowKind) -> Result<CertificatePair> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let entries = proper_entries(f)?;
    let (a, b) = top_down(&entries, shadow);
    let verdict = match a.first() {
        Some(a0) if a0 > &BigUint::from(n) => Verdict::rejected(0, format!("a_0 = {a0} > n = {n}")),
        _ => Verdict::Accepted,
    };
    Ok(CertificatePair {
        a: a.iter().map(big).collect(),
        b: b.iter().map(big).collect(),
        direction: Direction::TopDown,
        verdict,
    })
}

/// Kruskal–Katona: `(1, f_0, ..., f_{d-1})` is a face vector iff
/// `lower_shadow(f_k, k + 1) <= f_{k-1}` for all `k >= 1`.
pub fn kruskal_katona_check(f: &FVector) -> Result<Verdict> {
    let f = f.trimmed();
    if f.entries().first().is_none_or(|x| !x.is_one()) {
        return Err(Error::ExpectedNonRelative);
    }
    let v = f.to_naturals()?;
    for k in 1..v.len().saturating_sub(1) {
        // v[k + 1] = f_k, v[k] = f_{k-1}
        let s = ShadowKind::Lower.apply(&v[k + 1], k as u32 + 1);
        if s > v[k] {
            return Ok(Verdict::rejected(
                k as i64,
                format!(
                    "shadow of f_{k} = {} is {s} > f_{} = {}",
                    v[k + 1],
                    k - 1,
                    v[k]
                ),
            ));
        }
    }
    Ok(Verdict::Accepted)
}

/// Macaulay: `(1, f_0, f_1, ...)` is the face vector of a multicomplex iff
/// `f_{k-1} >= macaulay_shadow(f_k, k + 1)` for all `k >= 1`.
pub fn m_sequence_check(f: &FVector) -> Verdict {
    let Ok(v) = f.to_naturals() else {
        return Verdict::rejected(-1, "negative entry");
    };
    if v.first().is_none_or(|x| !x.is_one()) {
        return Verdict::rejected(-1, "an M-sequence starts with 1");
    }
    for k in 1..v.len().saturating_sub(1) {
        let s = macaulay_shadow(&v[k + 1], k as u32 + 1);
        if s > v[k] {
            return Verdict::rejected(
                k as i64,
                format!(
                    "Macaulay shadow of f_{k} = {} is {s} > f_{} = {}",
                    v[k + 1],
                    k - 1,
                    v[k]
                ),
            );
        }
    }
    Verdict::Accepted
}

/// The growth form of Macaulay's condition: `f_{k+1} <= upper_shadow(f_k, k + 1)`
/// for all `k >= 0`. Equivalent to [`m_sequence_check`] on non-negative input.
pub fn m_sequence_upward(f: &FVector) -> bool {
    let Ok(v) = f.to_naturals() else {
        return false;
    };
    if v.first().is_none_or(|x| !x.is_one()) {
        return false;
    }
    // v[k + 1] = f_k
    (0..v.len().saturating_sub(2)).all(|k| v[k + 2] <= upper_shadow(&v[k + 1], k as u32 + 1))
}

/// Proper relative simplicial complexes on `[n]` with face vector `f`.
pub fn rel_f_check(f: &FVector, n: u64) -> Result<CertificatePair> {
    relative_top_down(f, n, ShadowKind::Lower)
}

/// Proper finite relative multicomplexes on `[n]` with face vector `f`.
pub fn rel_multi_check(f: &FVector, n: u64) -> Result<CertificatePair> {
    relative_top_down(f, n, ShadowKind::Macaulay)
}

/// Outcome of a bottom-up prefix check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixReport {
    pub certificate: CertificatePair,
}

impl PrefixReport {
    /// The first index with `b_k < 0`, if any.
    pub fn first_violation(&self) -> Option<usize> {
        self.certificate.verdict.failed_index().map(|i| i as usize)
    }

    pub fn per_index(&self) -> Vec<bool> {
        self.certificate.nonnegative_b()
    }

    pub fn is_clean(&self) -> bool {
        self.certificate.is_accepted()
    }
}

/// Bottom-up check of a finite prefix `(0, f_0, ..., f_K)` of a possibly
/// infinite face vector of a relative multicomplex on `[n]`.
///
/// Acceptance means no violation within the prefix; it says nothing about
/// continuations of it.
pub fn rel_multi_prefix_check(f: &FVector, n: u64) -> Result<PrefixReport> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if !f.is_proper() {
        return Err(Error::NotProper);
    }
    let v: Vec<BigInt> = f
        .to_naturals()?
        .into_iter()
        .skip(1)
        .map(BigInt::from)
        .collect();
    let mut a: Vec<BigInt> = Vec::with_capacity(v.len());
    let mut b: Vec<BigInt> = Vec::with_capacity(v.len());
    let mut verdict = Verdict::Accepted;
    for (k, fk) in v.iter().enumerate() {
        let (ak, bk) = if k == 0 {
            (BigInt::from(n), BigInt::from(n) - fk)
        } else {
            let up = |x: &BigInt| BigInt::from(upper_shadow(x.magnitude(), k as u32));
            let ua = up(&a[k - 1]);
            let ub = up(&b[k - 1]);
            ((&ub + fk).min(ua.clone()), ub.min(ua - fk))
        };
        let negative = bk.sign() == Sign::Minus;
        a.push(ak);
        b.push(bk);
        if negative {
            verdict = Verdict::rejected(k as i64, format!("b_{k} = {} < 0", b[k]));
            break;
        }
    }
    Ok(PrefixReport {
        certificate: CertificatePair {
            a,
            b,
            direction: Direction::BottomUp,
            verdict,
        },
    })
}

/// Hilbert functions `H(0..=K)` of quotients `I/J` of homogeneous ideals in
/// `n` variables; delegates with `f_k = H(k + 1)`.
pub fn hilbert_quotient_check(hilbert: &[BigInt], n: u64) -> Result<PrefixReport> {
    match hilbert.first() {
        Some(h0) if h0.is_zero() => {}
        _ => return Err(Error::Precondition("H(0) must be 0".into())),
    }
    rel_multi_prefix_check(&FVector::new(hilbert.to_vec()), n)
}

fn h_recursion(h: &HVector) -> Result<(usize, Vec<BigUint>, Vec<BigUint>)> {
    if !h.is_proper() {
        return Err(Error::NotProper);
    }
    let v = h.to_naturals()?;
    let d = v.len().saturating_sub(1);
    let tail: Vec<BigUint> = v.into_iter().skip(1).collect();
    let (a, b) = top_down(&tail, ShadowKind::Macaulay);
    Ok((d, a, b))
}

/// h-vectors of fully Cohen–Macaulay relative complexes on `[n]`:
/// the Macaulay recursion on `(h_1, ..., h_d)` must end with `a_0 <= n - d`.
pub fn fully_cm_h_check(h: &HVector, n: u64) -> Result<CertificatePair> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let (d, a, b) = h_recursion(h)?;
    let verdict = match a.first() {
        None => Verdict::Accepted,
        Some(_) if h.is_zero() => Verdict::Accepted,
        Some(_) if n <= d as u64 => Verdict::rejected(
            0,
            format!(
                "n = {n} <= d = {d}: no room for a {}-dimensional presentation",
                d - 1
            ),
        ),
        Some(a0) if a0 > &BigUint::from(n - d as u64) => {
            Verdict::rejected(0, format!("a_0 = {a0} > n - d = {}", n - d as u64))
        }
        Some(_) => Verdict::Accepted,
    };
    Ok(CertificatePair {
        a: a.iter().map(big).collect(),
        b: b.iter().map(big).collect(),
        direction: Direction::TopDown,
        verdict,
    })
}

/// Necessary condition for h-vectors of Cohen–Macaulay relative complexes
/// on `[n]`: `a_0 <= n`. Passing does not certify existence.
pub fn cm_h_necessary_check(h: &HVector, n: u64) -> Result<CertificatePair> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let (_, a, b) = h_recursion(h)?;
    let verdict = match a.first() {
        Some(a0) if a0 > &BigUint::from(n) => Verdict::rejected(0, format!("a_0 = {a0} > n = {n}")),
        _ => Verdict::Accepted,
    };
    Ok(CertificatePair {
        a: a.iter().map(big).collect(),
        b: b.iter().map(big).collect(),
        direction: Direction::TopDown,
        verdict,
    })
}
