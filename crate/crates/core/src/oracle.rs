//! Brute-force ground truth on small ground sets.
//!
//! Complexes on `[n]` are encoded as `u64` masks over the `2^n` subsets of
//! `[n]` (subset `s` is bit `s`, read as a vertex bitmask), which caps
//! every enumeration at `n = 6`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{RelativeComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::shadow::binomial_u64;
use crate::shelling::{find_shelling, SearchOutcome};
use crate::vector::{f_to_h, FVector, HVector};

/// Largest ground set the subset-mask encoding supports.
pub const MASK_LIMIT: u32 = 6;
/// Default cap for [`enumerate_complexes`].
pub const MAX_COMPLEX_N: u32 = 6;
/// Default cap for [`achievable_relative_f`].
pub const MAX_PAIR_N: u32 = 5;
/// Default caps for [`achievable_fully_shellable_h`].
pub const MAX_SHELLABLE_N: u32 = 5;
pub const MAX_SHELLABLE_D: usize = 2;
/// Default cap on the number of families [`min_shadow`] may visit.
pub const MAX_SHADOW_FAMILIES: u64 = 20_000_000;

const SHELLING_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OracleConfig {
    /// Lifts the default caps up to the structural limits of the encoding.
    pub allow_long_runtimes: bool,
}

impl OracleConfig {
    fn check(&self, what: &str, value: u64, cap: u64, hard: u64) -> Result<()> {
        let limit = if self.allow_long_runtimes { hard } else { cap };
        if value > limit {
            let hint = if !self.allow_long_runtimes && hard > cap {
                " (allow long runtimes to raise it)"
            } else {
                ""
            };
            return Err(Error::CapExceeded(format!(
                "{what} = {value} exceeds the limit {limit}{hint}"
            )));
        }
        Ok(())
    }
}

fn subset_count(n: u32) -> u32 {
    1 << n
}

/// Subsets of `[n]` ordered by size, then by mask value.
fn subsets_by_size(n: u32) -> Vec<u32> {
    let mut v: Vec<u32> = (0..subset_count(n)).collect();
    v.sort_by_key(|s| (s.count_ones(), *s));
    v
}

fn closed_after_adding(mask: u64, s: u32) -> bool {
    let mut bits = s;
    while bits != 0 {
        let low = bits & bits.wrapping_neg();
        if mask >> (s ^ low) & 1 == 0 {
            return false;
        }
        bits ^= low;
    }
    true
}

/// Streams the downward-closed families of subsets of `[n]` as masks.
pub struct ComplexMasks {
    order: Vec<u32>,
    stack: Vec<(usize, u64)>,
}

impl Iterator for ComplexMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while let Some((mut p, mask)) = self.stack.pop() {
            while p < self.order.len() && !closed_after_adding(mask, self.order[p]) {
                p += 1;
            }
            if p == self.order.len() {
                return Some(mask);
            }
            self.stack.push((p + 1, mask));
            self.stack.push((p + 1, mask | 1 << self.order[p]));
        }
        None
    }
}

pub fn complex_masks(n: u32, config: &OracleConfig) -> Result<ComplexMasks> {
    config.check("n", n as u64, MAX_COMPLEX_N as u64, MASK_LIMIT as u64)?;
    Ok(ComplexMasks {
        order: subsets_by_size(n),
        stack: vec![(0, 0)],
    })
}

fn subset_face(s: u32) -> Face {
    Face::new((0..32).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect())
        .expect("bit positions are increasing")
}

/// The complex with the faces in `mask`.
pub fn mask_to_complex(n: u32, mask: u64) -> SimplicialComplex {
    if mask == 0 {
        return SimplicialComplex::void(n);
    }
    let faces: Vec<Face> = (0..subset_count(n))
        .filter(|&s| mask >> s & 1 == 1)
        .filter(|&s| (0..n).all(|i| s >> i & 1 == 1 || mask >> (s | 1 << i) & 1 == 0))
        .map(subset_face)
        .collect();
    SimplicialComplex::from_facets(n, faces).expect("subsets of [n]")
}

/// All simplicial complexes on `[n]`, void and `{∅}` included, each once.
pub fn enumerate_complexes(
    n: u32,
    config: &OracleConfig,
) -> Result<impl Iterator<Item = SimplicialComplex>> {
    Ok(complex_masks(n, config)?.map(move |m| mask_to_complex(n, m)))
}

/// `size_masks[k]`: the subsets of `[n]` of cardinality `k`.
fn size_masks(n: u32) -> Vec<u64> {
    let mut v = vec![0u64; n as usize + 1];
    for s in 0..subset_count(n) {
        v[s.count_ones() as usize] |= 1 << s;
    }
    v
}

fn counts_of(mask: u64, sizes: &[u64]) -> Vec<u8> {
    let mut counts: Vec<u8> = sizes
        .iter()
        .map(|m| (mask & m).count_ones() as u8)
        .collect();
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

fn counts_to_f(counts: &[u8]) -> FVector {
    FVector::new(counts.iter().map(|&c| BigInt::from(c)).collect())
}

/// Face vectors of all nonempty proper relative complexes `Δ ∖ Γ` on `[n]`,
/// `Γ ⊊ Δ`, `Γ` not void.
pub fn achievable_relative_f(n: u32, config: &OracleConfig) -> Result<BTreeSet<FVector>> {
    config.check("n", n as u64, MAX_PAIR_N as u64, MASK_LIMIT as u64)?;
    let all: Vec<u64> = complex_masks(n, config)?.collect();
    let sizes = size_masks(n);
    let found: HashSet<Vec<u8>> = all
        .par_iter()
        .fold(HashSet::new, |mut acc, &delta| {
            for &gamma in &all {
                if gamma != 0 && gamma != delta && gamma & !delta == 0 {
                    acc.insert(counts_of(delta & !gamma, &sizes));
                }
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(found.iter().map(|c| counts_to_f(c)).collect())
}

/// Minimum shadow size over all `m`-families of `k`-subsets of `[n]`.
pub fn min_shadow(m: u64, k: u32, n: u32, config: &OracleConfig) -> Result<u64> {
    let pool = binomial_u64(n as u64, k as u64);
    let pool: u64 = u64::try_from(&pool).map_err(|_| Error::TooLarge(pool.to_string()))?;
    if m > pool {
        return Err(Error::Precondition(format!(
            "only {pool} {k}-subsets of [{n}] exist, {m} requested"
        )));
    }
    if m == 0 || k == 0 {
        return Ok(0);
    }
    let families = binomial_u64(pool, m);
    let families = u64::try_from(&families).unwrap_or(u64::MAX);
    config.check("family count", families, MAX_SHADOW_FAMILIES, u64::MAX)?;
    let lower = binomial_u64(n as u64, k as u64 - 1);
    let lower = u64::try_from(&lower).unwrap_or(u64::MAX);
    if lower > 128 {
        return Err(Error::CapExceeded(format!(
            "{} {}-subsets of [{n}] exceed the 128-bit shadow encoding",
            lower,
            k - 1
        )));
    }
    let sets: Vec<u32> = (0..1u32 << n).filter(|s| s.count_ones() == k).collect();
    let below: Vec<u32> = (0..1u32 << n).filter(|s| s.count_ones() == k - 1).collect();
    let index: HashMap<u32, usize> = below.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let shadows: Vec<u128> = sets
        .iter()
        .map(|&s| {
            (0..n)
                .filter(|i| s >> i & 1 == 1)
                .fold(0u128, |acc, i| acc | 1 << index[&(s ^ 1 << i)])
        })
        .collect();
    let mut best = u64::MAX;
    shadow_dfs(&shadows, 0, m as usize, 0, &mut best);
    Ok(best)
}

fn shadow_dfs(shadows: &[u128], start: usize, left: usize, acc: u128, best: &mut u64) {
    let size = acc.count_ones() as u64;
    if size >= *best {
        return;
    }
    if left == 0 {
        *best = size;
        return;
    }
    for i in start..=shadows.len() - left {
        shadow_dfs(shadows, i + 1, left - 1, acc | shadows[i], best);
    }
}

fn is_pure_of_size(mask: u64, n: u32, d: u32) -> bool {
    // every face lies in a d-face: the maximal faces all have size d
    mask != 0
        && (0..subset_count(n)).all(|s| {
            mask >> s & 1 == 0
                || s.count_ones() == d
                || (0..n).any(|i| s >> i & 1 == 0 && mask >> (s | 1 << i) & 1 == 1)
        })
        && (0..subset_count(n)).all(|s| mask >> s & 1 == 0 || s.count_ones() <= d)
}

fn shellable(psi: &RelativeComplex) -> Result<bool> {
    match find_shelling(psi, SHELLING_BUDGET)? {
        SearchOutcome::Found(_) => Ok(true),
        SearchOutcome::NotShellable => Ok(false),
        SearchOutcome::BudgetExceeded => Err(Error::CapExceeded(
            "shelling search exceeded its budget".into(),
        )),
    }
}

/// h-vectors of relative complexes `Δ ∖ Γ` on `[n]` with `Δ`, `Γ` and
/// `Ψ` all pure of dimension `d - 1` and shellable.
pub fn achievable_fully_shellable_h(
    n: u32,
    d: usize,
    config: &OracleConfig,
) -> Result<BTreeSet<HVector>> {
    config.check("n", n as u64, MAX_SHELLABLE_N as u64, MASK_LIMIT as u64)?;
    config.check("d", d as u64, MAX_SHELLABLE_D as u64, MASK_LIMIT as u64)?;
    if d == 0 {
        return Err(Error::Precondition("d must be positive".into()));
    }
    if d > n as usize {
        return Ok(BTreeSet::new());
    }
    let sizes = size_masks(n);
    let mut pure: Vec<u64> = Vec::new();
    for mask in complex_masks(n, config)? {
        if is_pure_of_size(mask, n, d as u32)
            && shellable(&RelativeComplex::from_complex(mask_to_complex(n, mask)))?
        {
            pure.push(mask);
        }
    }
    let top = sizes[d];
    let pairs: Vec<(u64, u64)> = pure
        .iter()
        .flat_map(|&delta| {
            pure.iter()
                .filter(move |&&gamma| gamma != delta && gamma & !delta == 0)
                .map(move |&gamma| (delta, gamma))
        })
        .filter(|&(delta, gamma)| (delta & !gamma) & top != 0)
        .collect();
    // Ψ is pure of dimension d-1 whenever it has a d-face: each face of Ψ
    // lies in a d-face of Δ, which then avoids Γ
    let mut by_psi: BTreeMap<u64, (u64, u64)> = BTreeMap::new();
    for (delta, gamma) in pairs {
        by_psi.entry(delta & !gamma).or_insert((delta, gamma));
    }
    let mut by_h: BTreeMap<Vec<u8>, Vec<(u64, u64)>> = BTreeMap::new();
    for (psi, pair) in by_psi {
        by_h.entry(counts_of(psi, &sizes)).or_default().push(pair);
    }
    let found: Vec<Option<HVector>> = by_h
        .into_par_iter()
        .map(|(counts, candidates)| -> Result<Option<HVector>> {
            for (delta, gamma) in candidates {
                let psi =
                    RelativeComplex::new(mask_to_complex(n, delta), mask_to_complex(n, gamma))?;
                if shellable(&psi)? {
                    return Ok(Some(f_to_h(&counts_to_f(&counts), d)?));
                }
            }
            Ok(None)
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// Summary of the enumerations on `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub n: u32,
    pub complexes: u64,
    pub achievable_f: Vec<FVector>,
    /// Keyed by `d`.
    pub achievable_fully_shellable_h: BTreeMap<usize, Vec<HVector>>,
    pub elapsed_ms: u128,
}

/// Runs every enumeration that fits the configured caps.
pub fn enumeration_report(n: u32, config: &OracleConfig) -> Result<EnumerationReport> {
    let start = Instant::now();
    let complexes = complex_masks(n, config)?.count() as u64;
    let achievable_f = achievable_relative_f(n, config)?.into_iter().collect();
    let mut fs = BTreeMap::new();
    let dmax = if config.allow_long_runtimes {
        n as usize
    } else {
        MAX_SHELLABLE_D.min(n as usize)
    };
    for d in 1..=dmax {
        fs.insert(
            d,
            achievable_fully_shellable_h(n, d, config)?
                .into_iter()
                .collect(),
        );
    }
    Ok(EnumerationReport {
        n,
        complexes,
        achievable_f,
        achievable_fully_shellable_h: fs,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
