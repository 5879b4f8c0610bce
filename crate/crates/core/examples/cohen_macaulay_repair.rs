//! Coning Γ over new vertices so that Δ, Γ and Ψ share a dimension while
//! the relative faces stay the same.

use relkk::constructions::cone_skeleton_repair;
use relkk::realizability::cm_h_necessary_check;
use relkk::{Face, RelativeComplex, SimplicialComplex};

fn main() -> relkk::Result<()> {
    let tri = |v: [u32; 3]| Face::new(v.to_vec()).unwrap();
    let delta = SimplicialComplex::from_facets(4, vec![tri([1, 2, 3]), tri([1, 2, 4])])?;
    let gamma = SimplicialComplex::from_facets(4, vec![Face::new(vec![1, 2])?])?;
    let psi = RelativeComplex::new(delta, gamma)?;
    println!("dim Ψ = {:?}, dim Γ = {:?}", psi.dim(), psi.gamma().dim());

    let repaired = cone_skeleton_repair(&psi, 1)?;
    println!("repaired Γ facets: {:?}", repaired.gamma().facets());
    println!("repaired Δ facets: {:?}", repaired.delta().facets());
    assert_eq!(repaired.faces(), psi.faces());

    let h = psi.h_vector();
    let cert = cm_h_necessary_check(&h, repaired.ground_size() as u64)?;
    println!(
        "h = {h} passes the necessary condition: {}",
        cert.is_accepted()
    );
    Ok(())
}
