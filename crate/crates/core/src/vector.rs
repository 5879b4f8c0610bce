//! Face vectors and h-vectors.
//!
//! An [`FVector`] stores `(f_{-1}, f_0, ..., f_{d-1})`, so position `i` holds
//! the number of faces of dimension `i - 1`. An [`HVector`] stores
//! `(h_0, ..., h_d)`. The two are related by
//!
//! ```text
//! sum_{k=0}^{d} f_{k-1} t^{d-k} = sum_{i=0}^{d} h_i (t+1)^{d-i}
//! ```

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::shadow::binomial_u64;

fn fmt_entries(entries: &[BigInt], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let parts: Vec<String> = entries.iter().map(BigInt::to_string).collect();
    write!(f, "({})", parts.join(","))
}

fn trim_zeros(entries: &[BigInt]) -> Vec<BigInt> {
    let end = entries
        .iter()
        .rposition(|x| !x.is_zero())
        .map_or(1, |i| i + 1);
    let mut v: Vec<BigInt> = entries.iter().take(end).cloned().collect();
    if v.is_empty() {
        v.push(BigInt::zero());
    }
    v
}

fn naturals(entries: &[BigInt]) -> Result<Vec<BigUint>> {
    entries
        .iter()
        .enumerate()
        .map(|(position, x)| {
            x.to_biguint().ok_or_else(|| Error::NegativeEntry {
                position,
                value: x.to_string(),
            })
        })
        .collect()
}

/// Face counts indexed from the empty face.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FVector(Vec<BigInt>);

/// h-vector `(h_0, ..., h_d)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HVector(Vec<BigInt>);

impl FVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        FVector(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        FVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn from_counts(counts: &[usize]) -> Self {
        FVector(counts.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `f_dim`, zero outside the stored range.
    pub fn get(&self, dim: i64) -> BigInt {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.0.get(i).cloned())
            .unwrap_or_default()
    }

    /// A relative complex is proper iff it misses the empty face.
    pub fn is_proper(&self) -> bool {
        self.0.first().is_none_or(Zero::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Drops trailing zeros; the all-zero vector becomes `(0)`.
    pub fn trimmed(&self) -> FVector {
        FVector(trim_zeros(&self.0))
    }

    /// `d` such that the trimmed vector reads `(f_{-1}, ..., f_{d-1})`.
    pub fn dimension_count(&self) -> usize {
        trim_zeros(&self.0).len() - 1
    }

    /// Entries as naturals, rejecting negative ones.
    pub fn to_naturals(&self) -> Result<Vec<BigUint>> {
        naturals(&self.0)
    }
}

impl HVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        HVector(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        HVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `d` for `(h_0, ..., h_d)`.
    pub fn d(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn get(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn is_proper(&self) -> bool {
        self.0.first().is_none_or(Zero::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_naturals(&self) -> Result<Vec<BigUint>> {
        naturals(&self.0)
    }

    /// Small entries as `u64`, for explicit searches.
    pub fn to_u64s(&self) -> Result<Vec<u64>> {
        self.0
            .iter()
            .enumerate()
            .map(|(position, x)| {
                if x.sign() == Sign::Minus {
                    return Err(Error::NegativeEntry {
                        position,
                        value: x.to_string(),
                    });
                }
                x.to_u64().ok_or_else(|| Error::TooLarge(x.to_string()))
            })
            .collect()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(&self.0, f)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(&self.0, f)
    }
}

fn binom_int(n: usize, k: usize) -> BigInt {
    BigInt::from(binomial_u64(n as u64, k as u64))
}

/// h-vector of a face vector read as `(d-1)`-dimensional.
///
/// `f` may be shorter than `d + 1` (missing entries are zero); nonzero
/// entries beyond `f_{d-1}` are rejected.
pub fn f_to_h(f: &FVector, d: usize) -> Result<HVector> {
    if let Some(pos) = f.0.iter().skip(d + 1).position(|x| !x.is_zero()) {
        return Err(Error::Precondition(format!(
            "f has a nonzero entry at dimension {} beyond d - 1 = {}",
            pos + d,
            d as i64 - 1
        )));
    }
    let fk = |k: usize| f.0.get(k).cloned().unwrap_or_default();
    let h = (0..=d)
        .map(|i| {
            (0..=i).fold(BigInt::zero(), |acc, k| {
                let term = binom_int(d - k, i - k) * fk(k);
                if (i - k) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    Ok(HVector(h))
}

/// Inverse of [`f_to_h`]; the result has length `d + 1`.
pub fn h_to_f(h: &HVector) -> FVector {
    let d = h.d();
    if h.0.is_empty() {
        return FVector(Vec::new());
    }
    let f = (0..=d)
        .map(|k| {
            (0..=k).fold(BigInt::zero(), |acc, i| {
                acc + binom_int(d - i, k - i) * &h.0[i]
            })
        })
        .collect();
    FVector(f)
}
