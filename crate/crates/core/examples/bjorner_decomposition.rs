//! Splitting an h-vector into shifted M-sequences and gluing the matching
//! shellable pieces together.

use relkk::constructions::{decomposition_witness, find_decomposition, DecompositionOutcome};
use relkk::HVector;

fn main() -> relkk::Result<()> {
    let h = HVector::from_i64s(&[0, 2, 1]);
    for shifts in [vec![1, 1], vec![1, 2], vec![2, 2]] {
        match find_decomposition(&h, &shifts, 1_000_000)? {
            DecompositionOutcome::Found(dec) => {
                for part in &dec.parts {
                    let nu: Vec<String> = part.nu.iter().map(ToString::to_string).collect();
                    println!("  shift {}: ν = ({})", part.shift, nu.join(","));
                }
                let w = decomposition_witness(&dec)?;
                println!(
                    "shifts {shifts:?}: Ψ has h = {} and minimal faces {:?}",
                    w.psi.h_vector(),
                    w.psi.minimal_faces()
                );
            }
            DecompositionOutcome::None => println!("shifts {shifts:?}: no decomposition"),
            DecompositionOutcome::BoundExceeded => println!("shifts {shifts:?}: search bound hit"),
        }
    }
    Ok(())
}
