//! h-vectors of fully Cohen-Macaulay relative complexes, with a fully
//! shellable witness and its three shelling orders.

use relkk::constructions::bfs_witness;
use relkk::realizability::fully_cm_h_check;
use relkk::shelling::{h_from_shelling, is_fully_shellable, verify_shelling, FullOutcome};
use relkk::{fixtures, HVector};

fn main() -> relkk::Result<()> {
    let h = HVector::from_i64s(&[0, 0, 4]);
    for n in [4, 5] {
        println!(
            "h = {h} on [{n}]: accepted = {}",
            fully_cm_h_check(&h, n)?.is_accepted()
        );
    }

    let w = bfs_witness(&h, 5)?;
    println!("Ψ facets: {:?}", w.psi.facets());
    println!("shelling of Ψ: {:?}", w.psi_order);
    let steps = verify_shelling(&w.psi, &w.psi_order)?;
    let steps = steps.steps().expect("witness orders are shellings");
    for s in steps {
        println!("  {:?} restricted to {:?}", s.facet, s.restriction);
    }
    println!("h from the shelling: {}", h_from_shelling(steps, 2)?);

    // the same h from four open edges needs a fifth vertex
    for ground in [4, 5] {
        match is_fully_shellable(&fixtures::open_edges(), Some(ground), 1_000_000)? {
            FullOutcome::FullyShellable(full) => {
                println!(
                    "open edges on [{ground}]: Γ = {:?}",
                    full.presentation.gamma().facets()
                )
            }
            FullOutcome::NotFullyShellable(why) => println!("open edges on [{ground}]: {why}"),
            FullOutcome::BudgetExceeded => println!("open edges on [{ground}]: budget exceeded"),
        }
    }
    Ok(())
}
