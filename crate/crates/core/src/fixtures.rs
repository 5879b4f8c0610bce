//! Small relative complexes used throughout the tests and examples.

use crate::complex::{RelativeComplex, SimplicialComplex};
use crate::face::Face;

fn complex(n: u32, facets: &[&[u32]]) -> SimplicialComplex {
    let facets = facets
        .iter()
        .map(|f| Face::new(f.to_vec()).expect("fixture faces are sorted"))
        .collect();
    SimplicialComplex::from_facets(n, facets).expect("fixture is well formed")
}

fn relative(delta: SimplicialComplex, gamma: SimplicialComplex) -> RelativeComplex {
    RelativeComplex::new(delta, gamma).expect("fixture is a presentation")
}

/// The complete graph on `[4]` relative to the perfect matching
/// `{1,3}, {2,4}`: four open edges.
pub fn open_edges() -> RelativeComplex {
    relative(
        complex(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]),
        complex(4, &[&[1, 3], &[2, 4]]),
    )
}

/// The 4-cycle on `[4]` relative to its vertex set; the same four open edges
/// with a lower-dimensional `Γ`.
pub fn open_cycle() -> RelativeComplex {
    relative(
        complex(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]),
        complex(4, &[&[1], &[2], &[3], &[4]]),
    )
}

/// [`open_edges`] with every vertex joined to a new vertex 5, in both `Δ`
/// and `Γ`; both graphs are connected.
pub fn coned_open_edges() -> RelativeComplex {
    relative(
        complex(
            5,
            &[
                &[1, 2],
                &[1, 3],
                &[1, 4],
                &[2, 3],
                &[2, 4],
                &[3, 4],
                &[1, 5],
                &[2, 5],
                &[3, 5],
                &[4, 5],
            ],
        ),
        complex(5, &[&[1, 3], &[2, 4], &[1, 5], &[2, 5], &[3, 5], &[4, 5]]),
    )
}
