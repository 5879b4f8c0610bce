//! Shelling orders of relative complexes.
//!
//! For an order `σ_1, ..., σ_m` of the facets of `Ψ = Δ ∖ Γ`, step `j` adds
//! the faces of `σ_j` that lie in neither `Γ` nor an earlier facet. Those
//! faces form an up-set of `2^{σ_j}`; the order is a shelling iff each such
//! up-set has a single minimal element, the restriction set `R(σ_j)`.
//!
//! Each step is evaluated on bitmasks over the positions of `σ_j`: every
//! earlier facet and every facet of `Γ` contributes the mask of shared
//! positions, and a face is new iff it meets the complement of each mask.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::{RelativeComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{graded_revlex_cmp, revlex_sets, Face};
use crate::vector::HVector;

/// Largest facet the bitmask evaluation supports.
pub const MAX_FACET_SIZE: usize = 31;

/// Largest ground set [`is_fully_shellable`] searches over.
pub const MAX_PRESENTATION_GROUND: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingStep {
    pub facet: Face,
    /// The unique minimal face added at this step.
    pub restriction: Face,
    /// Number of faces added at this step.
    pub new_faces: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingFailure {
    /// Zero-based position in the order.
    pub step: usize,
    pub facet: Face,
    /// The incomparable minimal new faces (at least two, or none if the
    /// facet added nothing).
    pub minimal_faces: Vec<Face>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShellingCheck {
    Valid(Vec<ShellingStep>),
    Failed(ShellingFailure),
}

impl ShellingCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, ShellingCheck::Valid(_))
    }

    pub fn steps(&self) -> Option<&[ShellingStep]> {
        match self {
            ShellingCheck::Valid(steps) => Some(steps),
            ShellingCheck::Failed(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Vec<Face>),
    NotShellable,
    BudgetExceeded,
}

impl SearchOutcome {
    pub fn order(&self) -> Option<&[Face]> {
        match self {
            SearchOutcome::Found(order) => Some(order),
            _ => None,
        }
    }
}

/// Wire form `{"order":[[…],…],"restrictions":[[…],…]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingTranscript {
    pub order: Vec<Vec<u32>>,
    #[serde(default)]
    pub restrictions: Vec<Vec<u32>>,
}

impl ShellingTranscript {
    pub fn from_steps(steps: &[ShellingStep]) -> Self {
        ShellingTranscript {
            order: steps.iter().map(|s| s.facet.vertices().to_vec()).collect(),
            restrictions: steps
                .iter()
                .map(|s| s.restriction.vertices().to_vec())
                .collect(),
        }
    }

    pub fn faces(&self) -> Result<Vec<Face>> {
        self.order.iter().cloned().map(Face::new).collect()
    }
}

/// Node counter shared between nested searches.
#[derive(Debug, Clone)]
pub struct Budget {
    remaining: u64,
}

impl Budget {
    pub fn new(nodes: u64) -> Self {
        Budget { remaining: nodes }
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }

    fn tick(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        self.remaining -= 1;
        true
    }
}

/// Facets of `Ψ` with their pairwise and `Γ` intersection masks.
struct Prepared {
    facets: Vec<Face>,
    /// `shared[j][i]`: positions of `σ_j` that lie in `σ_i`.
    shared: Vec<Vec<u32>>,
    /// Complements (within `σ_j`) of the masks of `Γ`'s facets.
    gamma_outside: Vec<Vec<u32>>,
}

impl Prepared {
    fn new(psi: &RelativeComplex, facets: Vec<Face>) -> Result<Self> {
        if let Some(f) = facets.iter().find(|f| f.len() > MAX_FACET_SIZE) {
            return Err(Error::TooLarge(format!(
                "facet {f} exceeds {MAX_FACET_SIZE} vertices"
            )));
        }
        let shared = facets
            .iter()
            .map(|s| facets.iter().map(|t| s.position_mask(t)).collect())
            .collect();
        let gamma_outside = facets
            .iter()
            .map(|s| {
                let full = full_mask(s);
                let mut v: Vec<u32> = psi
                    .gamma()
                    .facets()
                    .iter()
                    .map(|g| full & !s.position_mask(g))
                    .collect();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect();
        Ok(Prepared {
            facets,
            shared,
            gamma_outside,
        })
    }

    /// Restriction mask of facet `j` after the facets in `earlier`, if unique.
    fn restriction(&self, j: usize, earlier: impl Iterator<Item = usize>) -> Option<u32> {
        let full = full_mask(&self.facets[j]);
        let outside: Vec<u32> = earlier
            .map(|i| full & !self.shared[j][i])
            .chain(self.gamma_outside[j].iter().copied())
            .collect();
        let singles = outside
            .iter()
            .filter(|c| c.count_ones() == 1)
            .fold(0u32, |acc, c| acc | c);
        outside.iter().all(|c| c & singles != 0).then_some(singles)
    }

    /// Minimal new faces of facet `j` by enumeration, for failure reports.
    fn minimal_new_faces(&self, j: usize, earlier: &[usize]) -> Vec<Face> {
        let facet = &self.facets[j];
        let full = full_mask(facet);
        let outside: Vec<u32> = earlier
            .iter()
            .map(|&i| full & !self.shared[j][i])
            .chain(self.gamma_outside[j].iter().copied())
            .collect();
        if facet.len() > 20 {
            return Vec::new();
        }
        let is_new = |m: u32| outside.iter().all(|c| c & m != 0);
        let new: Vec<u32> = (0..=full).filter(|&m| is_new(m)).collect();
        let mut minimal: Vec<Face> = new
            .iter()
            .filter(|&&m| !new.iter().any(|&o| o != m && o & m == o))
            .map(|&m| facet.subset_from_mask(m))
            .collect();
        minimal.sort_by(graded_revlex_cmp);
        minimal
    }
}

fn full_mask(f: &Face) -> u32 {
    if f.len() >= 32 {
        u32::MAX
    } else {
        (1u32 << f.len()) - 1
    }
}

fn step_for(facet: &Face, mask: u32) -> ShellingStep {
    let restriction = facet.subset_from_mask(mask);
    let free = facet.len() - restriction.len();
    ShellingStep {
        facet: facet.clone(),
        restriction,
        new_faces: 1u64 << free,
    }
}

/// Checks `order` step by step and returns the restriction sets.
pub fn verify_shelling(psi: &RelativeComplex, order: &[Face]) -> Result<ShellingCheck> {
    let facets = psi.facets();
    let given: BTreeSet<&Face> = order.iter().collect();
    let expected: BTreeSet<&Face> = facets.iter().collect();
    if given.len() != order.len() || given != expected {
        return Err(Error::InvalidOrder(format!(
            "expected a permutation of the {} facets of the relative complex",
            facets.len()
        )));
    }
    let prepared = Prepared::new(psi, order.to_vec())?;
    let mut steps = Vec::with_capacity(order.len());
    for (j, facet) in order.iter().enumerate() {
        match prepared.restriction(j, 0..j) {
            Some(mask) => steps.push(step_for(facet, mask)),
            None => {
                let earlier: Vec<usize> = (0..j).collect();
                return Ok(ShellingCheck::Failed(ShellingFailure {
                    step: j,
                    facet: facet.clone(),
                    minimal_faces: prepared.minimal_new_faces(j, &earlier),
                }));
            }
        }
    }
    Ok(ShellingCheck::Valid(steps))
}

/// `h_i = #{j : |R(σ_j)| = i}` for a shelling of a pure `(d-1)`-dimensional
/// relative complex.
pub fn h_from_shelling(steps: &[ShellingStep], d: usize) -> Result<HVector> {
    if steps.iter().any(|s| s.facet.len() != d) {
        return Err(Error::NotPure);
    }
    let mut h = vec![0usize; d + 1];
    for s in steps {
        h[s.restriction.len()] += 1;
    }
    Ok(HVector::new(h.into_iter().map(Into::into).collect()))
}

/// Backtracking search for a shelling order, facets tried in graded revlex
/// order. Dead sets of placed facets are memoized, since whether a facet
/// can come next depends only on which facets precede it.
pub fn find_shelling(psi: &RelativeComplex, budget: u64) -> Result<SearchOutcome> {
    find_shelling_with(psi, &mut Budget::new(budget))
}

pub fn find_shelling_with(psi: &RelativeComplex, budget: &mut Budget) -> Result<SearchOutcome> {
    let mut facets = psi.facets();
    facets.sort_by(graded_revlex_cmp);
    if facets.is_empty() {
        return Ok(SearchOutcome::Found(Vec::new()));
    }
    let prepared = Prepared::new(psi, facets)?;
    let m = prepared.facets.len();
    let mut search = Search {
        prepared: &prepared,
        used: vec![0u64; m.div_ceil(64)],
        order: Vec::with_capacity(m),
        dead: HashSet::new(),
        budget,
    };
    Ok(match search.run() {
        Some(true) => SearchOutcome::Found(
            search
                .order
                .iter()
                .map(|&i| prepared.facets[i].clone())
                .collect(),
        ),
        Some(false) => SearchOutcome::NotShellable,
        None => SearchOutcome::BudgetExceeded,
    })
}

struct Search<'a> {
    prepared: &'a Prepared,
    used: Vec<u64>,
    order: Vec<usize>,
    dead: HashSet<Vec<u64>>,
    budget: &'a mut Budget,
}

impl Search<'_> {
    /// `Some(true)` when complete, `Some(false)` when exhausted, `None` when
    /// out of budget.
    fn run(&mut self) -> Option<bool> {
        let m = self.prepared.facets.len();
        if self.order.len() == m {
            return Some(true);
        }
        if self.dead.contains(&self.used) {
            return Some(false);
        }
        for j in 0..m {
            if self.used[j / 64] >> (j % 64) & 1 == 1 {
                continue;
            }
            if !self.budget.tick() {
                return None;
            }
            if self
                .prepared
                .restriction(j, self.order.iter().copied())
                .is_none()
            {
                continue;
            }
            self.used[j / 64] |= 1 << (j % 64);
            self.order.push(j);
            match self.run() {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.order.pop();
            self.used[j / 64] &= !(1 << (j % 64));
        }
        self.dead.insert(self.used.clone());
        Some(false)
    }
}

/// A presentation `(Δ′, Γ′)` of `Ψ` with shelling orders for all three.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullShelling {
    pub presentation: RelativeComplex,
    pub delta_order: Vec<Face>,
    pub gamma_order: Vec<Face>,
    pub psi_order: Vec<Face>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FullOutcome {
    FullyShellable(Box<FullShelling>),
    NotFullyShellable(String),
    BudgetExceeded,
}

impl FullOutcome {
    pub fn is_fully_shellable(&self) -> bool {
        matches!(self, FullOutcome::FullyShellable(_))
    }
}

/// Searches all presentations `(Δ′, Γ′)` on `[ground]` with `Δ′ ∖ Γ′ = Ψ`,
/// `dim Γ′ = dim Ψ`, and `Δ′`, `Γ′`, `Ψ` shellable.
///
/// Shellings are taken pure: `Γ′` is generated by `d`-sets avoiding `Ψ`
/// together with all their subsets, and must contain every face of the
/// closure of `Ψ` that lies outside `Ψ`. When `Ψ` contains the empty face
/// its only presentation has `Γ′` void, and the answer is the shellability
/// of `Ψ` itself.
pub fn is_fully_shellable(
    psi: &RelativeComplex,
    ground: Option<u32>,
    budget: u64,
) -> Result<FullOutcome> {
    let mut budget = Budget::new(budget);
    let faces = psi.faces();
    let n = ground.unwrap_or_else(|| psi.ground_size());
    if let Some(v) = faces.iter().filter_map(Face::max_vertex).max() {
        if v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if n > MAX_PRESENTATION_GROUND {
        return Err(Error::CapExceeded(format!(
            "presentation search supports ground sets up to [{MAX_PRESENTATION_GROUND}], got [{n}]"
        )));
    }
    let facets = psi.facets();
    let Some(d) = facets.iter().map(Face::len).max() else {
        return Ok(FullOutcome::NotFullyShellable(
            "the relative complex has no faces".into(),
        ));
    };
    if !psi.is_pure() {
        return Ok(FullOutcome::NotFullyShellable(
            "the relative complex is not pure".into(),
        ));
    }
    let psi_order = match find_shelling_with(psi, &mut budget)? {
        SearchOutcome::Found(order) => order,
        SearchOutcome::NotShellable => {
            return Ok(FullOutcome::NotFullyShellable(
                "the relative complex is not shellable".into(),
            ))
        }
        SearchOutcome::BudgetExceeded => return Ok(FullOutcome::BudgetExceeded),
    };

    if faces.contains(&Face::empty()) {
        let delta = SimplicialComplex::from_facets(n, facets.clone())?;
        return Ok(FullOutcome::FullyShellable(Box::new(FullShelling {
            presentation: RelativeComplex::from_complex(delta),
            delta_order: psi_order.clone(),
            gamma_order: Vec::new(),
            psi_order,
        })));
    }

    let forced: Vec<Face> = facets
        .iter()
        .flat_map(|f| f.subsets())
        .filter(|f| !faces.contains(f))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let candidates: Vec<Face> = revlex_sets(d, n)
        .filter(|c| c.subsets().all(|s| !faces.contains(&s)))
        .collect();
    let covers: Vec<u128> = candidates
        .iter()
        .map(|c| {
            forced
                .iter()
                .enumerate()
                .filter(|(_, r)| r.is_subset_of(c))
                .fold(0u128, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let all_forced: u128 = if forced.len() >= 128 {
        u128::MAX
    } else {
        (1u128 << forced.len()) - 1
    };
    if covers.iter().fold(0, |acc, c| acc | c) != all_forced {
        return Ok(FullOutcome::NotFullyShellable(format!(
            "no {}-dimensional presentation on [{n}] exists",
            d - 1
        )));
    }

    let c = candidates.len();
    for size in 1..=c {
        for chosen in subsets_of_size(c, size) {
            if !budget.tick() {
                return Ok(FullOutcome::BudgetExceeded);
            }
            let covered = chosen.iter().fold(0u128, |acc, &i| acc | covers[i]);
            if covered != all_forced {
                continue;
            }
            let gamma_facets: Vec<Face> = chosen.iter().map(|&i| candidates[i].clone()).collect();
            let gamma = SimplicialComplex::from_facets(n, gamma_facets.clone())?;
            let gamma_order = match find_shelling_with(
                &RelativeComplex::from_complex(gamma.clone()),
                &mut budget,
            )? {
                SearchOutcome::Found(order) => order,
                SearchOutcome::NotShellable => continue,
                SearchOutcome::BudgetExceeded => return Ok(FullOutcome::BudgetExceeded),
            };
            let delta = SimplicialComplex::from_facets(
                n,
                gamma_facets
                    .into_iter()
                    .chain(facets.iter().cloned())
                    .collect(),
            )?;
            let delta_order = match find_shelling_with(
                &RelativeComplex::from_complex(delta.clone()),
                &mut budget,
            )? {
                SearchOutcome::Found(order) => order,
                SearchOutcome::NotShellable => continue,
                SearchOutcome::BudgetExceeded => return Ok(FullOutcome::BudgetExceeded),
            };
            let presentation = RelativeComplex::new(delta, gamma)?;
            if presentation.faces() != faces {
                return Err(Error::Verification(
                    "presentation changed the relative face set".into(),
                ));
            }
            return Ok(FullOutcome::FullyShellable(Box::new(FullShelling {
                presentation,
                delta_order,
                gamma_order,
                psi_order,
            })));
        }
    }
    Ok(FullOutcome::NotFullyShellable(format!(
        "none of the {}-dimensional presentations on [{n}] is shellable",
        d - 1
    )))
}

/// `size`-subsets of `0..c` in lexicographic order.
fn subsets_of_size(c: usize, size: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (size <= c).then(|| (0..size).collect());
    std::iter::from_fn(move || {
        let out = current.take()?;
        let mut next = out.clone();
        let mut i = size;
        while i > 0 {
            i -= 1;
            if next[i] < c - size + i {
                next[i] += 1;
                for j in i + 1..size {
                    next[j] = next[j - 1] + 1;
                }
                current = Some(next);
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn face(v: &[u32]) -> Face {
        Face::new(v.to_vec()).unwrap()
    }

    fn complex(n: u32, facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| face(f)).collect()).unwrap()
    }

    #[test]
    fn triangle_boundary_restrictions() {
        let psi = RelativeComplex::from_complex(complex(3, &[&[1, 2], &[1, 3], &[2, 3]]));
        let order = [face(&[1, 2]), face(&[1, 3]), face(&[2, 3])];
        let ShellingCheck::Valid(steps) = verify_shelling(&psi, &order).unwrap() else {
            panic!("expected a shelling");
        };
        let r: Vec<Face> = steps.iter().map(|s| s.restriction.clone()).collect();
        assert_eq!(r, vec![face(&[]), face(&[3]), face(&[2, 3])]);
        assert_eq!(steps.iter().map(|s| s.new_faces).sum::<u64>(), 7);
        assert_eq!(
            h_from_shelling(&steps, 2).unwrap(),
            HVector::from_i64s(&[1, 1, 1])
        );
    }

    #[test]
    fn open_edges_restrict_to_themselves() {
        let psi = fixtures::open_edges();
        let order = psi.facets();
        let ShellingCheck::Valid(steps) = verify_shelling(&psi, &order).unwrap() else {
            panic!("expected a shelling");
        };
        assert!(steps.iter().all(|s| s.restriction == s.facet));
        assert_eq!(
            h_from_shelling(&steps, 2).unwrap(),
            HVector::from_i64s(&[0, 0, 4])
        );
    }

    #[test]
    fn disjoint_edges_fail_at_second_step() {
        let psi = RelativeComplex::from_complex(complex(4, &[&[1, 2], &[3, 4]]));
        let check = verify_shelling(&psi, &[face(&[3, 4]), face(&[1, 2])]).unwrap();
        let ShellingCheck::Failed(failure) = check else {
            panic!("expected failure");
        };
        assert_eq!(failure.step, 1);
        assert_eq!(failure.minimal_faces, vec![face(&[1]), face(&[2])]);
        assert_eq!(
            find_shelling(&psi, 1000).unwrap(),
            SearchOutcome::NotShellable
        );
    }

    #[test]
    fn order_must_be_a_facet_permutation() {
        let psi = RelativeComplex::from_complex(complex(3, &[&[1, 2], &[2, 3]]));
        assert!(verify_shelling(&psi, &[face(&[1, 2])]).is_err());
        assert!(verify_shelling(&psi, &[face(&[1, 2]), face(&[1, 2])]).is_err());
        assert!(verify_shelling(&psi, &[face(&[1, 2]), face(&[1, 3])]).is_err());
    }

    #[test]
    fn single_facet_and_purity() {
        let psi = RelativeComplex::from_complex(complex(3, &[&[1, 2, 3]]));
        let order = find_shelling(&psi, 10).unwrap();
        let steps = verify_shelling(&psi, order.order().unwrap()).unwrap();
        assert_eq!(
            h_from_shelling(steps.steps().unwrap(), 3).unwrap(),
            HVector::from_i64s(&[1, 0, 0, 0])
        );
        let mixed = RelativeComplex::from_complex(complex(3, &[&[1, 2], &[3]]));
        let ShellingCheck::Valid(steps) =
            verify_shelling(&mixed, &[face(&[1, 2]), face(&[3])]).unwrap()
        else {
            panic!("a vertex after an edge is a (non-pure) shelling");
        };
        assert_eq!(h_from_shelling(&steps, 2), Err(Error::NotPure));
    }

    #[test]
    fn search_finds_and_respects_budget() {
        let psi = fixtures::open_edges();
        let found = find_shelling(&psi, 1000).unwrap();
        assert!(verify_shelling(&psi, found.order().unwrap())
            .unwrap()
            .is_valid());
        let psi = RelativeComplex::from_complex(complex(4, &[&[1, 2], &[3, 4]]));
        assert_eq!(
            find_shelling(&psi, 1).unwrap(),
            SearchOutcome::BudgetExceeded
        );
    }

    #[test]
    fn open_edges_are_not_fully_shellable_on_four_vertices() {
        let psi = fixtures::open_edges();
        let out = is_fully_shellable(&psi, None, 100_000).unwrap();
        assert!(!out.is_fully_shellable(), "{out:?}");
        let out = is_fully_shellable(&psi, Some(5), 100_000).unwrap();
        let FullOutcome::FullyShellable(w) = out else {
            panic!("expected a presentation on [5]");
        };
        assert_eq!(w.presentation.faces(), psi.faces());
        assert_eq!(w.presentation.gamma().dim(), Some(1));
        assert_eq!(w.presentation.delta().dim(), Some(1));
    }

    #[test]
    fn simplex_is_fully_shellable() {
        let psi = RelativeComplex::from_complex(complex(3, &[&[1, 2, 3]]));
        assert!(is_fully_shellable(&psi, None, 100)
            .unwrap()
            .is_fully_shellable());
        assert!(matches!(
            is_fully_shellable(&psi, Some(7), 100),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn transcript_shape() {
        let psi = RelativeComplex::from_complex(complex(3, &[&[1, 2], &[1, 3], &[2, 3]]));
        let order = [face(&[1, 2]), face(&[1, 3]), face(&[2, 3])];
        let steps = verify_shelling(&psi, &order).unwrap();
        let t = ShellingTranscript::from_steps(steps.steps().unwrap());
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"order":[[1,2],[1,3],[2,3]],"restrictions":[[],[3],[2,3]]}"#
        );
    }

    #[test]
    fn subset_enumeration() {
        let all: Vec<Vec<usize>> = subsets_of_size(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(subsets_of_size(2, 3).count(), 0);
        assert_eq!(subsets_of_size(3, 0).count(), 1);
    }
}
