//! Faces, multifaces and the reverse-lexicographic machinery on them.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::shadow::binomial_u64;

/// A finite set of positive integers, stored strictly increasing.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<u32>);

/// A finite multiset of positive integers, stored weakly increasing.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiFace(Vec<u32>);

/// Common read access to the sorted element tuple of a (multi)face.
pub trait Elements {
    fn elements(&self) -> &[u32];

    fn cardinality(&self) -> usize {
        self.elements().len()
    }

    /// `cardinality - 1`; the empty (multi)face has dimension `-1`.
    fn dim(&self) -> i64 {
        self.elements().len() as i64 - 1
    }
}

impl Elements for Face {
    fn elements(&self) -> &[u32] {
        &self.0
    }
}

impl Elements for MultiFace {
    fn elements(&self) -> &[u32] {
        &self.0
    }
}

impl Face {
    pub fn new(vertices: Vec<u32>) -> Result<Self> {
        let valid =
            vertices.first().is_none_or(|&v| v >= 1) && vertices.windows(2).all(|w| w[0] < w[1]);
        if valid {
            Ok(Face(vertices))
        } else {
            Err(Error::InvalidFace(vertices))
        }
    }

    /// Sorts and deduplicates; rejects the vertex 0.
    pub fn from_unsorted<I: IntoIterator<Item = u32>>(vertices: I) -> Result<Self> {
        let mut v: Vec<u32> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face::new(v)
    }

    /// `{1, ..., k}`.
    pub fn initial(k: u32) -> Self {
        Face((1..=k).collect())
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_vertex(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                match w.cmp(v) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v: Vec<u32> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .copied()
                .filter(|v| !other.contains(*v))
                .collect(),
        )
    }

    pub fn without(&self, v: u32) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// Relabels vertices through `f`, which must be injective on this face.
    pub fn map_vertices<F: Fn(u32) -> u32>(&self, f: F) -> Face {
        let mut v: Vec<u32> = self.0.iter().map(|&x| f(x)).collect();
        v.sort_unstable();
        Face(v)
    }

    /// The faces obtained by removing one vertex.
    pub fn boundary(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |skip| {
            Face(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }

    /// All `2^len` subsets, indexed by position bitmask.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        assert!(self.0.len() < 32, "face too large to expand");
        (0u32..(1u32 << self.0.len())).map(move |mask| self.subset_from_mask(mask))
    }

    /// The subset selected by a bitmask over positions.
    pub(crate) fn subset_from_mask(&self, mask: u32) -> Face {
        Face(
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect(),
        )
    }

    /// Bitmask over this face's positions of the vertices it shares with `other`.
    pub(crate) fn position_mask(&self, other: &Face) -> u32 {
        self.0
            .iter()
            .enumerate()
            .filter(|&(_, &v)| other.contains(v))
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }
}

impl MultiFace {
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        let valid =
            elements.first().is_none_or(|&v| v >= 1) && elements.windows(2).all(|w| w[0] <= w[1]);
        if valid {
            Ok(MultiFace(elements))
        } else {
            Err(Error::InvalidMultiFace(elements))
        }
    }

    pub fn empty() -> Self {
        MultiFace(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_element(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// The multisets obtained by removing one copy of one element.
    pub fn boundary(&self) -> impl Iterator<Item = MultiFace> + '_ {
        (0..self.0.len())
            .filter(move |&i| i + 1 == self.0.len() || self.0[i] != self.0[i + 1])
            .map(move |skip| {
                let mut v = self.0.clone();
                v.remove(skip);
                MultiFace(v)
            })
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Display for MultiFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for MultiFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Reverse-lexicographic comparison of two equal-size (multi)faces: the one
/// with the smaller element at the largest differing position comes first.
pub fn revlex_cmp<T: Elements>(a: &T, b: &T) -> Result<Ordering> {
    let (x, y) = (a.elements(), b.elements());
    if x.len() != y.len() {
        return Err(Error::CardinalityMismatch(x.len(), y.len()));
    }
    Ok(x.iter().rev().cmp(y.iter().rev()))
}

/// Cardinality first, then reverse-lexicographic.
pub fn graded_revlex_cmp<T: Elements>(a: &T, b: &T) -> Ordering {
    let (x, y) = (a.elements(), b.elements());
    x.len()
        .cmp(&y.len())
        .then_with(|| x.iter().rev().cmp(y.iter().rev()))
}

/// Number of `k`-subsets of `[n]`.
pub fn count_sets(k: usize, n: u32) -> BigUint {
    binomial_u64(n as u64, k as u64)
}

/// Number of `k`-multisubsets of `[n]`.
pub fn count_multisets(k: usize, n: u32) -> BigUint {
    if k == 0 {
        return BigUint::from(1u32);
    }
    if n == 0 {
        return BigUint::from(0u32);
    }
    binomial_u64(n as u64 + k as u64 - 1, k as u64)
}

/// All `k`-subsets of `[n]` in reverse-lexicographic order.
pub fn revlex_sets(k: usize, n: u32) -> RevlexSets {
    let current = if k as u64 <= n as u64 {
        Some((1..=k as u32).collect())
    } else {
        None
    };
    RevlexSets { n, current }
}

/// All `k`-multisubsets of `[n]` in reverse-lexicographic order.
pub fn revlex_multisets(k: usize, n: u32) -> RevlexMultisets {
    let current = if k == 0 || n >= 1 {
        Some(vec![1; k])
    } else {
        None
    };
    RevlexMultisets { n, current }
}

pub struct RevlexSets {
    n: u32,
    current: Option<Vec<u32>>,
}

impl Iterator for RevlexSets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.current.take()?;
        let k = cur.len();
        let mut next = cur.clone();
        // smallest position that can be bumped without colliding with its right neighbour
        let pivot = (0..k).find(|&i| {
            let cap = if i + 1 < k { next[i + 1] } else { self.n + 1 };
            next[i] + 1 < cap
        });
        if let Some(i) = pivot {
            next[i] += 1;
            for (j, slot) in next.iter_mut().enumerate().take(i) {
                *slot = j as u32 + 1;
            }
            self.current = Some(next);
        }
        Some(Face(cur))
    }
}

pub struct RevlexMultisets {
    n: u32,
    current: Option<Vec<u32>>,
}

impl Iterator for RevlexMultisets {
    type Item = MultiFace;

    fn next(&mut self) -> Option<MultiFace> {
        let cur = self.current.take()?;
        let k = cur.len();
        let mut next = cur.clone();
        let pivot = (0..k).find(|&i| {
            let cap = if i + 1 < k { next[i + 1] } else { self.n };
            next[i] < cap
        });
        if let Some(i) = pivot {
            next[i] += 1;
            for slot in next.iter_mut().take(i) {
                *slot = 1;
            }
            self.current = Some(next);
        }
        Some(MultiFace(cur))
    }
}

/// The first `m` `k`-subsets of `[n]` in reverse-lexicographic order.
pub fn compressed_sets(m: usize, k: usize, n: u32) -> Result<Vec<Face>> {
    let available = count_sets(k, n);
    if BigUint::from(m) > available {
        return Err(Error::TooManyFaces {
            requested: m,
            k,
            n,
            available: available.to_string(),
        });
    }
    Ok(revlex_sets(k, n).take(m).collect())
}

/// The first `m` `k`-multisubsets of `[n]` in reverse-lexicographic order.
pub fn compressed_multisets(m: usize, k: usize, n: u32) -> Result<Vec<MultiFace>> {
    let available = count_multisets(k, n);
    if BigUint::from(m) > available {
        return Err(Error::TooManyFaces {
            requested: m,
            k,
            n,
            available: available.to_string(),
        });
    }
    Ok(revlex_multisets(k, n).take(m).collect())
}

/// All `(k-1)`-subsets of the members of a family of `k`-sets, in
/// reverse-lexicographic order.
pub fn shadow_of_family(faces: &[Face]) -> Result<Vec<Face>> {
    let Some(first) = faces.first() else {
        return Ok(Vec::new());
    };
    let k = first.len();
    let mut out = BTreeSet::new();
    for f in faces {
        if f.len() != k {
            return Err(Error::CardinalityMismatch(k, f.len()));
        }
        out.extend(f.boundary());
    }
    let mut v: Vec<Face> = out.into_iter().collect();
    v.sort_by(graded_revlex_cmp);
    Ok(v)
}

/// Multiset analogue of [`shadow_of_family`].
pub fn shadow_of_multifamily(faces: &[MultiFace]) -> Result<Vec<MultiFace>> {
    let Some(first) = faces.first() else {
        return Ok(Vec::new());
    };
    let k = first.len();
    let mut out = BTreeSet::new();
    for f in faces {
        if f.len() != k {
            return Err(Error::CardinalityMismatch(k, f.len()));
        }
        out.extend(f.boundary());
    }
    let mut v: Vec<MultiFace> = out.into_iter().collect();
    v.sort_by(graded_revlex_cmp);
    Ok(v)
}
