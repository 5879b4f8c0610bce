//! Simplicial complexes, multicomplexes and relative complexes on `[n]`.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::face::{
    compressed_multisets, compressed_sets, graded_revlex_cmp, Elements, Face, MultiFace,
};
use crate::vector::{f_to_h, FVector, HVector};

/// A simplicial complex on `[n]`, stored by its facets.
///
/// The void complex (no faces at all) and the complex `{∅}` are different
/// values: the former has `void == true` and no facets, the latter the
/// single facet `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<Face>,
    void: bool,
}

fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::new();
    for f in faces {
        if !kept.iter().any(|g| f.is_subset_of(g)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

fn counts_to_fvector(counts: &[usize]) -> FVector {
    FVector::from_counts(counts).trimmed()
}

impl SimplicialComplex {
    pub fn void(n: u32) -> Self {
        SimplicialComplex {
            n,
            facets: Vec::new(),
            void: true,
        }
    }

    /// The complex `{∅}`.
    pub fn empty(n: u32) -> Self {
        SimplicialComplex {
            n,
            facets: vec![Face::empty()],
            void: false,
        }
    }

    /// The complex generated by `faces`; an empty list gives the void complex.
    pub fn from_facets(n: u32, faces: Vec<Face>) -> Result<Self> {
        for f in &faces {
            if let Some(v) = f.max_vertex().filter(|&v| v > n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if faces.is_empty() {
            return Ok(SimplicialComplex::void(n));
        }
        Ok(SimplicialComplex {
            n,
            facets: maximal_faces(faces),
            void: false,
        })
    }

    /// The full simplex `2^face`.
    pub fn simplex(n: u32, face: Face) -> Result<Self> {
        SimplicialComplex::from_facets(n, vec![face])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.facets.iter().any(|g| face.is_subset_of(g))
    }

    /// `None` for the void complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(Elements::dim).max()
    }

    pub fn faces(&self) -> BTreeSet<Face> {
        self.facets.iter().flat_map(|f| f.subsets()).collect()
    }

    pub fn faces_of_size(&self, k: usize) -> BTreeSet<Face> {
        self.faces().into_iter().filter(|f| f.len() == k).collect()
    }

    pub fn vertices(&self) -> BTreeSet<u32> {
        self.facets
            .iter()
            .flat_map(|f| f.vertices().iter().copied())
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains(f))
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = Vec::new();
        for f in self.faces() {
            if counts.len() <= f.len() {
                counts.resize(f.len() + 1, 0);
            }
            counts[f.len()] += 1;
        }
        counts_to_fvector(&counts)
    }

    /// h-vector with `d = dim + 1`; the void complex gives `(0)`.
    pub fn h_vector(&self) -> HVector {
        let d = self.dim().map_or(0, |x| (x + 1) as usize);
        f_to_h(&self.f_vector(), d).expect("f-vector length matches dimension")
    }

    /// All faces of dimension at most `max_dim`.
    pub fn skeleton(&self, max_dim: i64) -> SimplicialComplex {
        if self.void {
            return self.clone();
        }
        let size = (max_dim + 1).max(0) as usize;
        let mut faces = Vec::new();
        for f in &self.facets {
            if f.len() <= size {
                faces.push(f.clone());
            } else {
                faces.extend(f.subsets().filter(|g| g.len() == size));
            }
        }
        SimplicialComplex {
            n: self.n,
            facets: maximal_faces(faces),
            void: false,
        }
    }

    /// Join with the full simplex on `apexes`; the void complex stays void.
    pub fn join_simplex(&self, apexes: &Face) -> SimplicialComplex {
        let n = self.n.max(apexes.max_vertex().unwrap_or(0));
        if self.void {
            return SimplicialComplex::void(n);
        }
        SimplicialComplex {
            n,
            facets: maximal_faces(self.facets.iter().map(|f| f.union(apexes)).collect()),
            void: false,
        }
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let n = self.n.max(other.n);
        if self.void && other.void {
            return SimplicialComplex::void(n);
        }
        let faces = self.facets.iter().chain(&other.facets).cloned().collect();
        SimplicialComplex {
            n,
            facets: maximal_faces(faces),
            void: false,
        }
    }

    /// Relabels through an injective map into `[n]`.
    pub fn relabel<F: Fn(u32) -> u32>(&self, n: u32, f: F) -> Result<SimplicialComplex> {
        if self.void {
            return Ok(SimplicialComplex::void(n));
        }
        let faces = self.facets.iter().map(|g| g.map_vertices(&f)).collect();
        SimplicialComplex::from_facets(n, faces)
    }

    /// Same complex regarded on a larger ground set.
    pub fn with_ground_size(&self, n: u32) -> Result<SimplicialComplex> {
        if let Some(v) = self.vertices().last().copied().filter(|&v| v > n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(SimplicialComplex { n, ..self.clone() })
    }
}

/// A finite multicomplex on `[n]`, stored face by face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multicomplex {
    n: u32,
    faces: BTreeSet<MultiFace>,
}

impl Multicomplex {
    /// Validates closure under multisubsets and the ground-set bound.
    pub fn new(n: u32, faces: BTreeSet<MultiFace>) -> Result<Self> {
        for f in &faces {
            if let Some(v) = f.max_element().filter(|&v| v > n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if let Some(missing) = f.boundary().find(|g| !faces.contains(g)) {
                return Err(Error::NotClosed(missing.elements().to_vec()));
            }
        }
        Ok(Multicomplex { n, faces })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn faces(&self) -> &BTreeSet<MultiFace> {
        &self.faces
    }

    pub fn contains(&self, face: &MultiFace) -> bool {
        self.faces.contains(face)
    }

    /// Faces sorted by cardinality, then reverse-lexicographically.
    pub fn faces_graded_revlex(&self) -> Vec<MultiFace> {
        let mut v: Vec<MultiFace> = self.faces.iter().cloned().collect();
        v.sort_by(graded_revlex_cmp);
        v
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = Vec::new();
        for f in &self.faces {
            if counts.len() <= f.len() {
                counts.resize(f.len() + 1, 0);
            }
            counts[f.len()] += 1;
        }
        counts_to_fvector(&counts)
    }
}

/// A presentation `(Δ, Γ)` with `Γ ⊆ Δ`; its faces are `Δ ∖ Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelativeComplex {
    delta: SimplicialComplex,
    gamma: SimplicialComplex,
}

impl RelativeComplex {
    pub fn new(delta: SimplicialComplex, gamma: SimplicialComplex) -> Result<Self> {
        if let Some(missing) = gamma.facets().iter().find(|f| !delta.contains(f)) {
            return Err(Error::NotSubcomplex(missing.vertices().to_vec()));
        }
        Ok(RelativeComplex { delta, gamma })
    }

    /// `(Δ, void)`: a plain simplicial complex.
    pub fn from_complex(delta: SimplicialComplex) -> Self {
        let n = delta.n();
        RelativeComplex {
            delta,
            gamma: SimplicialComplex::void(n),
        }
    }

    pub fn delta(&self) -> &SimplicialComplex {
        &self.delta
    }

    pub fn gamma(&self) -> &SimplicialComplex {
        &self.gamma
    }

    pub fn ground_size(&self) -> u32 {
        self.delta.n().max(self.gamma.n())
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.delta.contains(face) && !self.gamma.contains(face)
    }

    pub fn faces(&self) -> BTreeSet<Face> {
        self.delta
            .faces()
            .into_iter()
            .filter(|f| !self.gamma.contains(f))
            .collect()
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(&Face::empty())
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = Vec::new();
        for f in self.faces() {
            if counts.len() <= f.len() {
                counts.resize(f.len() + 1, 0);
            }
            counts[f.len()] += 1;
        }
        counts_to_fvector(&counts)
    }

    /// `None` when `Δ ∖ Γ` is empty.
    pub fn dim(&self) -> Option<i64> {
        self.faces().iter().map(Elements::dim).max()
    }

    /// h-vector with `d = dim Ψ + 1`; `(0)` when `Ψ` has no faces.
    pub fn h_vector(&self) -> HVector {
        let d = self.dim().map_or(0, |x| (x + 1) as usize);
        f_to_h(&self.f_vector(), d).expect("f-vector length matches dimension")
    }

    /// Inclusion-maximal faces of `Δ ∖ Γ`, sorted.
    pub fn facets(&self) -> Vec<Face> {
        // a face of Δ∖Γ lies in some facet of Δ, which is then outside Γ
        let faces: Vec<Face> = self
            .delta
            .facets()
            .iter()
            .filter(|f| !self.gamma.contains(f))
            .cloned()
            .collect();
        maximal_faces(faces)
    }

    /// Inclusion-minimal faces of `Δ ∖ Γ`, sorted.
    pub fn minimal_faces(&self) -> Vec<Face> {
        let faces = self.faces();
        faces
            .iter()
            .filter(|f| f.boundary().all(|g| !faces.contains(&g)))
            .cloned()
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        self.facets().windows(2).all(|w| w[0].len() == w[1].len())
    }
}

fn fvector_counts(f: &FVector) -> Result<Vec<usize>> {
    f.trimmed()
        .to_naturals()?
        .iter()
        .map(|x| x.to_usize().ok_or_else(|| Error::TooLarge(x.to_string())))
        .collect()
}

/// The compressed simplicial complex on `[n]` with face vector `f`.
///
/// `f = (1, f_0, ..., f_{d-1})`; the all-zero vector gives the void complex.
/// A vector that does not satisfy the Kruskal–Katona inequalities (or needs
/// more than `n` vertices) is rejected with the first offending dimension.
pub fn compressed_complex(f: &FVector, n: u32) -> Result<SimplicialComplex> {
    let counts = fvector_counts(f)?;
    if counts == [0] {
        return Ok(SimplicialComplex::void(n));
    }
    if counts[0] != 1 {
        return Err(Error::ExpectedNonRelative);
    }
    let mut levels: Vec<Vec<Face>> = vec![vec![Face::empty()]];
    for (k, &m) in counts.iter().enumerate().skip(1) {
        let level = compressed_sets(m, k, n).map_err(|_| Error::Infeasible {
            index: k as i64 - 1,
        })?;
        levels.push(level);
    }
    let sets: Vec<BTreeSet<Face>> = levels.iter().map(|l| l.iter().cloned().collect()).collect();
    let mut facets = Vec::new();
    for k in 0..levels.len() {
        let above: BTreeSet<Face> = levels
            .get(k + 1)
            .map(|l| l.iter().flat_map(|f| f.boundary()).collect())
            .unwrap_or_default();
        if !above.is_subset(&sets[k]) {
            return Err(Error::Infeasible { index: k as i64 });
        }
        facets.extend(levels[k].iter().filter(|f| !above.contains(*f)).cloned());
    }
    SimplicialComplex::from_facets(n, facets)
}

/// The compressed multicomplex on `[n]` with face vector `f`.
pub fn compressed_multicomplex(f: &FVector, n: u32) -> Result<Multicomplex> {
    let counts = fvector_counts(f)?;
    if counts == [0] {
        return Ok(Multicomplex {
            n,
            faces: BTreeSet::new(),
        });
    }
    if counts[0] != 1 {
        return Err(Error::ExpectedNonRelative);
    }
    let mut faces: BTreeSet<MultiFace> = BTreeSet::new();
    faces.insert(MultiFace::empty());
    for (k, &m) in counts.iter().enumerate().skip(1) {
        let level = compressed_multisets(m, k, n).map_err(|_| Error::Infeasible {
            index: k as i64 - 1,
        })?;
        for g in &level {
            if g.boundary().any(|b| !faces.contains(&b)) {
                return Err(Error::Infeasible {
                    index: k as i64 - 1,
                });
            }
        }
        faces.extend(level);
    }
    Ok(Multicomplex { n, faces })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(v: &[u32]) -> Face {
        Face::new(v.to_vec()).unwrap()
    }

    fn complex(n: u32, facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| face(f)).collect()).unwrap()
    }

    fn k4() -> SimplicialComplex {
        complex(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]])
    }

    #[test]
    fn void_and_empty_are_distinct() {
        let void = SimplicialComplex::void(3);
        let empty = SimplicialComplex::empty(3);
        assert_ne!(void, empty);
        assert_eq!(void.f_vector(), FVector::from_i64s(&[0]));
        assert_eq!(empty.f_vector(), FVector::from_i64s(&[1]));
        assert_eq!(void.dim(), None);
        assert_eq!(empty.dim(), Some(-1));
        assert_eq!(SimplicialComplex::from_facets(3, vec![]).unwrap(), void);
    }

    #[test]
    fn facets_are_reduced() {
        let c = complex(3, &[&[1], &[1, 2], &[2, 3], &[3]]);
        assert_eq!(c.facets(), &[face(&[1, 2]), face(&[2, 3])]);
        assert!(SimplicialComplex::from_facets(2, vec![face(&[1, 3])]).is_err());
    }

    #[test]
    fn relative_f_vector_examples() {
        // open edge: simplex minus its boundary
        let delta = complex(2, &[&[1, 2]]);
        let gamma = complex(2, &[&[1], &[2]]);
        let psi = RelativeComplex::new(delta, gamma).unwrap();
        assert_eq!(psi.f_vector(), FVector::from_i64s(&[0, 0, 1]));

        let matching = complex(4, &[&[1, 3], &[2, 4]]);
        let psi = RelativeComplex::new(k4(), matching).unwrap();
        assert_eq!(psi.f_vector(), FVector::from_i64s(&[0, 0, 4]));
        assert_eq!(psi.h_vector(), HVector::from_i64s(&[0, 0, 4]));
        assert_eq!(psi.facets().len(), 4);
        assert_eq!(psi.minimal_faces(), psi.facets());

        let triangle = complex(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let psi = RelativeComplex::from_complex(triangle);
        assert_eq!(psi.f_vector(), FVector::from_i64s(&[1, 3, 3]));
        assert_eq!(psi.h_vector(), HVector::from_i64s(&[1, 1, 1]));
    }

    #[test]
    fn malformed_presentation_is_rejected() {
        let delta = complex(3, &[&[1, 2]]);
        let gamma = complex(3, &[&[3]]);
        assert_eq!(
            RelativeComplex::new(delta, gamma),
            Err(Error::NotSubcomplex(vec![3]))
        );
    }

    #[test]
    fn skeleton_and_join() {
        let tri = complex(3, &[&[1, 2, 3]]);
        assert_eq!(tri.skeleton(0), complex(3, &[&[1], &[2], &[3]]));
        assert_eq!(tri.skeleton(-1), SimplicialComplex::empty(3));
        let cone = complex(2, &[&[1], &[2]]).join_simplex(&face(&[3]));
        assert_eq!(cone, complex(3, &[&[1, 3], &[2, 3]]));
        assert!(SimplicialComplex::void(2)
            .join_simplex(&face(&[3]))
            .is_void());
    }

    #[test]
    fn compressed_complex_examples() {
        let c = compressed_complex(&FVector::from_i64s(&[1, 4, 4]), 4).unwrap();
        assert_eq!(c.faces_of_size(2).len(), 4);
        assert_eq!(
            c.facets(),
            &[face(&[1, 2]), face(&[1, 3]), face(&[1, 4]), face(&[2, 3])]
        );
        assert_eq!(c.f_vector(), FVector::from_i64s(&[1, 4, 4]));

        let e = compressed_complex(&FVector::from_i64s(&[1]), 7).unwrap();
        assert_eq!(e, SimplicialComplex::empty(7));

        assert_eq!(
            compressed_complex(&FVector::from_i64s(&[1, 3, 4]), 5),
            Err(Error::Infeasible { index: 1 })
        );
        assert_eq!(
            compressed_complex(&FVector::from_i64s(&[1, 5]), 4),
            Err(Error::Infeasible { index: 0 })
        );
    }

    #[test]
    fn compressed_multicomplex_examples() {
        let m = compressed_multicomplex(&FVector::from_i64s(&[1, 2, 1]), 2).unwrap();
        let expected: BTreeSet<MultiFace> = [vec![], vec![1], vec![2], vec![1, 1]]
            .into_iter()
            .map(|v| MultiFace::new(v).unwrap())
            .collect();
        assert_eq!(m.faces(), &expected);
        assert!(compressed_multicomplex(&FVector::from_i64s(&[1, 2, 4]), 2).is_err());
        assert!(Multicomplex::new(2, [MultiFace::new(vec![1, 1]).unwrap()].into()).is_err());
    }
}
