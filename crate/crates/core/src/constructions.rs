//! Explicit witnesses for accepted vectors.
//!
//! * [`witness_rel_f`]: compressed pair `(Δ, Γ)` with a prescribed face vector
//! * [`bfs_witness`]: fully shellable pair with a prescribed h-vector, built
//!   from compressed multicomplexes through [`phi_d`]
//! * [`cone_skeleton_repair`]: equal-dimension presentation on a larger ground set
//! * [`find_decomposition`], [`decomposition_witness`]: sums of shifted
//!   M-sequences and the disjoint unions realizing them

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{
    compressed_complex, compressed_multicomplex, Multicomplex, RelativeComplex, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::face::{Elements, Face, MultiFace};
use crate::json::big_vec;
use crate::realizability::{fully_cm_h_check, m_sequence_check, rel_f_check, Verdict};
use crate::shadow::upper_shadow;
use crate::shelling::{h_from_shelling, verify_shelling, ShellingCheck, ShellingStep};
use crate::vector::{FVector, HVector};

fn with_leading_one(v: &[BigInt]) -> FVector {
    FVector::new(
        std::iter::once(BigInt::from(1))
            .chain(v.iter().cloned())
            .collect(),
    )
}

fn to_u32(x: &BigInt) -> Result<u32> {
    x.to_u32().ok_or_else(|| Error::TooLarge(x.to_string()))
}

/// Compressed `Δ` and `Γ` on `[n]` with `f(Δ ∖ Γ) = f`.
pub fn witness_rel_f(f: &FVector, n: u32) -> Result<RelativeComplex> {
    let cert = rel_f_check(f, n as u64)?;
    if let Verdict::Rejected { reason, .. } = &cert.verdict {
        return Err(Error::Precondition(format!(
            "f is not realizable: {reason}"
        )));
    }
    if cert.a.is_empty() {
        return Ok(RelativeComplex::from_complex(SimplicialComplex::void(n)));
    }
    let delta = compressed_complex(&with_leading_one(&cert.a), n)?;
    let gamma = compressed_complex(&with_leading_one(&cert.b), n)?;
    let psi = RelativeComplex::new(delta, gamma)?;
    if psi.f_vector() != f.trimmed() {
        return Err(Error::Verification(format!(
            "witness has f = {}, expected {}",
            psi.f_vector(),
            f.trimmed()
        )));
    }
    Ok(psi)
}

/// `{b_1 ≤ ... ≤ b_k} ↦ {1, ..., d-k} ∪ {b_1 + d-k+1, ..., b_k + d}`.
///
/// Bijective from multisets of size at most `d` on `[n-d]` onto `d`-subsets
/// of `[n]`; order preserving within each multiset size.
pub fn phi_d(face: &MultiFace, d: usize) -> Result<Face> {
    let k = face.len();
    if k > d {
        return Err(Error::Precondition(format!(
            "multiset of size {k} exceeds d = {d}"
        )));
    }
    let head = 1..=(d - k) as u32;
    let tail = face
        .elements()
        .iter()
        .enumerate()
        .map(|(j, &b)| b + (d - k + j + 1) as u32);
    Face::new(head.chain(tail).collect())
}

/// Output of [`bfs_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsWitness {
    pub psi: RelativeComplex,
    pub delta_order: Vec<Face>,
    pub gamma_order: Vec<Face>,
    pub psi_order: Vec<Face>,
    pub psi_steps: Vec<ShellingStep>,
}

/// Facets `Φ_d(F)` for the faces of `delta` in graded revlex order, split
/// by membership in `gamma`.
fn phi_facets(
    delta: &Multicomplex,
    gamma: Option<&Multicomplex>,
    d: usize,
) -> Result<(Vec<Face>, Vec<Face>, Vec<Face>)> {
    let mut all = Vec::new();
    let mut inside = Vec::new();
    let mut outside = Vec::new();
    for f in delta.faces_graded_revlex() {
        let sigma = phi_d(&f, d)?;
        if gamma.is_some_and(|g| g.contains(&f)) {
            inside.push(sigma.clone());
        } else {
            outside.push(sigma.clone());
        }
        all.push(sigma);
    }
    Ok((all, inside, outside))
}

fn expect_shelling(psi: &RelativeComplex, order: &[Face], what: &str) -> Result<Vec<ShellingStep>> {
    match verify_shelling(psi, order)? {
        ShellingCheck::Valid(steps) => Ok(steps),
        ShellingCheck::Failed(fail) => Err(Error::Verification(format!(
            "{what}: order fails at step {} ({})",
            fail.step, fail.facet
        ))),
    }
}

/// Fully shellable `Ψ` on `[n]` with `h(Ψ) = h`, together with a common
/// facet order shelling `Δ`, `Γ` and `Ψ`.
///
/// The zero h-vector yields the void pair.
pub fn bfs_witness(h: &HVector, n: u32) -> Result<BfsWitness> {
    let cert = fully_cm_h_check(h, n as u64)?;
    if let Verdict::Rejected { reason, .. } = &cert.verdict {
        return Err(Error::Precondition(format!(
            "h is not the h-vector of a fully Cohen-Macaulay relative complex: {reason}"
        )));
    }
    if h.is_zero() {
        let void = SimplicialComplex::void(n);
        return Ok(BfsWitness {
            psi: RelativeComplex::from_complex(void),
            delta_order: Vec::new(),
            gamma_order: Vec::new(),
            psi_order: Vec::new(),
            psi_steps: Vec::new(),
        });
    }
    let d = h.d();
    let m = n - d as u32;
    let delta_tilde = compressed_multicomplex(&with_leading_one(&cert.a), m)?;
    let gamma_tilde = compressed_multicomplex(&with_leading_one(&cert.b), m)?;
    let (delta_order, gamma_order, psi_order) = phi_facets(&delta_tilde, Some(&gamma_tilde), d)?;

    let delta = SimplicialComplex::from_facets(n, delta_order.clone())?;
    let gamma = SimplicialComplex::from_facets(n, gamma_order.clone())?;
    let psi = RelativeComplex::new(delta.clone(), gamma.clone())?;

    let delta_steps = expect_shelling(&RelativeComplex::from_complex(delta), &delta_order, "Δ")?;
    expect_shelling(&RelativeComplex::from_complex(gamma), &gamma_order, "Γ")?;
    let psi_steps = expect_shelling(&psi, &psi_order, "Ψ")?;

    for (step, f) in delta_steps.iter().zip(delta_tilde.faces_graded_revlex()) {
        let prefix: Face = Face::initial((d - f.len()) as u32);
        if step.restriction != step.facet.difference(&prefix) {
            return Err(Error::Verification(format!(
                "restriction of {} is {}",
                step.facet, step.restriction
            )));
        }
    }
    let from_shelling = h_from_shelling(&psi_steps, d)?;
    if &from_shelling != h || psi.h_vector() != *h {
        return Err(Error::Verification(format!(
            "witness has h = {}, expected {h}",
            psi.h_vector()
        )));
    }
    Ok(BfsWitness {
        psi,
        delta_order,
        gamma_order,
        psi_order,
        psi_steps,
    })
}

/// Shellable complex with h-vector `nu` (an M-sequence), on `[nu_1 + d]`
/// where `d = len(nu) - 1`, and its shelling order.
pub fn bfs_complex(nu: &[BigInt]) -> Result<(SimplicialComplex, Vec<Face>)> {
    let f = FVector::new(nu.to_vec());
    if let Verdict::Rejected { reason, .. } = m_sequence_check(&f) {
        return Err(Error::Precondition(format!("not an M-sequence: {reason}")));
    }
    let d = nu.len() - 1;
    let m = nu.get(1).map(to_u32).transpose()?.unwrap_or(0);
    let multi = compressed_multicomplex(&f, m)?;
    let (order, _, _) = phi_facets(&multi, None, d)?;
    let complex = SimplicialComplex::from_facets(m + d as u32, order.clone())?;
    Ok((complex, order))
}

/// Cones `Γ` over `cone_steps` new vertices, adds the cone to `Δ`, and
/// keeps the faces of dimension at most `dim Ψ`. The relative face set is
/// unchanged.
pub fn cone_skeleton_repair(psi: &RelativeComplex, cone_steps: u32) -> Result<RelativeComplex> {
    if psi.gamma().is_void() {
        return Err(Error::Precondition("Γ must not be void".into()));
    }
    let Some(dim) = psi.dim() else {
        return Err(Error::Precondition(
            "the relative complex has no faces".into(),
        ));
    };
    let n = psi.ground_size();
    let total = n + cone_steps;
    let apexes = Face::new((n + 1..=total).collect())?;
    let gamma1 = psi.gamma().with_ground_size(total)?.join_simplex(&apexes);
    let delta1 = psi.delta().with_ground_size(total)?.union(&gamma1);
    let repaired = RelativeComplex::new(delta1.skeleton(dim), gamma1.skeleton(dim))?;
    if repaired.faces() != psi.faces() {
        return Err(Error::Verification(
            "repair changed the relative face set".into(),
        ));
    }
    Ok(repaired)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionPart {
    pub shift: usize,
    #[serde(with = "big_vec")]
    pub nu: Vec<BigInt>,
}

/// `target = Σ E^{shift_i} nu_i`, where `E^a` prepends `a` zeros.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BjornerDecomposition {
    #[serde(with = "big_vec")]
    pub target: Vec<BigInt>,
    pub parts: Vec<DecompositionPart>,
}

pub fn verify_decomposition(dec: &BjornerDecomposition) -> Verdict {
    let mut sum: Vec<BigInt> = dec.target.iter().map(|_| BigInt::zero()).collect();
    for (i, part) in dec.parts.iter().enumerate() {
        if let Verdict::Rejected { reason, .. } = m_sequence_check(&FVector::new(part.nu.clone())) {
            return Verdict::Rejected {
                index: i as i64,
                reason: format!("part {i}: {reason}"),
            };
        }
        for (j, x) in part.nu.iter().enumerate() {
            let pos = part.shift + j;
            if pos >= sum.len() {
                if x.is_zero() {
                    continue;
                }
                return Verdict::Rejected {
                    index: pos as i64,
                    reason: format!("part {i} reaches position {pos} beyond the target"),
                };
            }
            sum[pos] += x;
        }
    }
    match sum.iter().zip(&dec.target).position(|(s, t)| s != t) {
        None => Verdict::Accepted,
        Some(pos) => Verdict::Rejected {
            index: pos as i64,
            reason: format!(
                "parts sum to {} at position {pos}, target has {}",
                sum[pos], dec.target[pos]
            ),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionOutcome {
    Found(BjornerDecomposition),
    None,
    BoundExceeded,
}

/// Exact search for M-sequences `nu_i` with `Σ E^{a_i} nu_i = h`.
///
/// Parts are filled in increasing shift order and each `nu` is the
/// lexicographically smallest that still admits a completion. `bound` caps
/// the number of search nodes.
pub fn find_decomposition(
    h: &HVector,
    shifts: &[usize],
    bound: u64,
) -> Result<DecompositionOutcome> {
    let target = h.to_u64s()?;
    let mut shifts = shifts.to_vec();
    shifts.sort_unstable();
    let mut search = DecompSearch {
        shifts: &shifts,
        residual: target.clone(),
        chosen: Vec::new(),
        dead: HashSet::new(),
        nodes: bound,
    };
    Ok(match search.part(0) {
        None => DecompositionOutcome::BoundExceeded,
        Some(false) => DecompositionOutcome::None,
        Some(true) => DecompositionOutcome::Found(BjornerDecomposition {
            target: h.entries().to_vec(),
            parts: shifts
                .iter()
                .zip(search.chosen)
                .map(|(&shift, mut nu)| {
                    while nu.len() > 1 && nu.last() == Some(&0) {
                        nu.pop();
                    }
                    DecompositionPart {
                        shift,
                        nu: nu.into_iter().map(BigInt::from).collect(),
                    }
                })
                .collect(),
        }),
    })
}

struct DecompSearch<'a> {
    shifts: &'a [usize],
    residual: Vec<u64>,
    chosen: Vec<Vec<u64>>,
    dead: HashSet<(usize, Vec<u64>)>,
    nodes: u64,
}

impl DecompSearch<'_> {
    /// `Some(true)` found, `Some(false)` impossible, `None` out of nodes.
    fn part(&mut self, i: usize) -> Option<bool> {
        if i == self.shifts.len() {
            return Some(self.residual.iter().all(|&x| x == 0));
        }
        if self.dead.contains(&(i, self.residual.clone())) {
            return Some(false);
        }
        let a = self.shifts[i];
        if a >= self.residual.len() || self.residual[a] == 0 {
            self.dead.insert((i, self.residual.clone()));
            return Some(false);
        }
        self.residual[a] -= 1;
        let mut nu = vec![1u64];
        let found = self.entry(i, &mut nu);
        self.residual[a] += 1;
        if found == Some(false) {
            self.dead.insert((i, self.residual.clone()));
        }
        found
    }

    /// Chooses `nu[j]` for `j = nu.len()`, smallest first.
    fn entry(&mut self, i: usize, nu: &mut Vec<u64>) -> Option<bool> {
        if self.nodes == 0 {
            return None;
        }
        self.nodes -= 1;
        let pos = self.shifts[i] + nu.len();
        if pos >= self.residual.len() {
            self.chosen.push(nu.clone());
            let r = self.part(i + 1);
            if r != Some(true) {
                self.chosen.pop();
            }
            return r;
        }
        let j = nu.len();
        let prev = nu[j - 1];
        let cap = if j == 1 {
            self.residual[pos]
        } else {
            let up = upper_shadow(&num_bigint::BigUint::from(prev), j as u32 - 1);
            up.to_u64()
                .map_or(self.residual[pos], |u| u.min(self.residual[pos]))
        };
        for x in 0..=cap {
            self.residual[pos] -= x;
            nu.push(x);
            let r = self.entry(i, nu);
            nu.pop();
            self.residual[pos] += x;
            if r != Some(false) {
                return r;
            }
        }
        Some(false)
    }
}

/// Output of [`decomposition_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionWitness {
    pub psi: RelativeComplex,
    pub order: Vec<Face>,
    pub steps: Vec<ShellingStep>,
}

/// Disjoint union of one shellable relative complex per part.
///
/// Part `i` is the BFS complex of `nu_i` on a fresh vertex block, with
/// `shift_i` fresh vertices `V_i` added to every facet and enough fresh
/// apexes to reach the target dimension; `Γ_i` consists of the faces
/// missing some vertex of `V_i`. Vertices are allocated in part order.
pub fn decomposition_witness(dec: &BjornerDecomposition) -> Result<DecompositionWitness> {
    if let Verdict::Rejected { reason, .. } = verify_decomposition(dec) {
        return Err(Error::Precondition(format!(
            "invalid decomposition: {reason}"
        )));
    }
    if dec.parts.len() > 1 && dec.parts.iter().any(|p| p.shift == 0) {
        return Err(Error::Precondition(
            "a part with shift 0 contains the empty face and cannot share the union".into(),
        ));
    }
    let d = dec.target.len().saturating_sub(1);
    let mut next = 0u32;
    let mut delta_facets: Vec<Face> = Vec::new();
    let mut gamma_facets: Vec<Face> = Vec::new();
    let mut order: Vec<Face> = Vec::new();
    for part in &dec.parts {
        let mut nu = part.nu.clone();
        while nu.len() > 1 && nu.last().is_some_and(Zero::is_zero) {
            nu.pop();
        }
        let (complex, part_order) = bfs_complex(&nu)?;
        let offset = next;
        next += complex.n();
        let extra: Vec<u32> = (next + 1..=next + part.shift as u32).collect();
        next += part.shift as u32;
        let top = nu.len() - 1 + part.shift;
        let apexes: Vec<u32> = (next + 1..=next + (d - top) as u32).collect();
        next += (d - top) as u32;
        let v_i = Face::new(extra.clone())?;
        let w_i = Face::new(apexes)?;
        for sigma in &part_order {
            let base = sigma.map_vertices(|v| v + offset).union(&w_i);
            let facet = base.union(&v_i);
            for &v in &extra {
                gamma_facets.push(facet.without(v));
            }
            delta_facets.push(facet.clone());
            order.push(facet);
        }
    }
    let (delta, gamma) = if delta_facets.is_empty() {
        (SimplicialComplex::void(next), SimplicialComplex::void(next))
    } else if gamma_facets.is_empty() {
        (
            SimplicialComplex::from_facets(next, delta_facets)?,
            SimplicialComplex::void(next),
        )
    } else {
        (
            SimplicialComplex::from_facets(next, delta_facets)?,
            SimplicialComplex::from_facets(next, gamma_facets)?,
        )
    };
    let psi = RelativeComplex::new(delta, gamma)?;
    let steps = expect_shelling(&psi, &order, "Ψ")?;
    let target = HVector::new(dec.target.clone());
    if !order.is_empty() {
        let h = h_from_shelling(&steps, d)?;
        if h != target || psi.h_vector() != target {
            return Err(Error::Verification(format!(
                "witness has h = {}, expected {target}",
                psi.h_vector()
            )));
        }
    }
    let minimal: BTreeSet<usize> = psi.minimal_faces().iter().map(Face::len).collect();
    let shifts: BTreeSet<usize> = dec.parts.iter().map(|p| p.shift).collect();
    if minimal != shifts {
        return Err(Error::Verification(format!(
            "minimal face sizes {minimal:?} differ from the shifts {shifts:?}"
        )));
    }
    Ok(DecompositionWitness { psi, order, steps })
}
