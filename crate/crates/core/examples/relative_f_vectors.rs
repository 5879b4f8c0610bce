//! Deciding face vectors of relative complexes on a fixed ground set and
//! building a witness pair for an accepted one.

use relkk::constructions::witness_rel_f;
use relkk::realizability::rel_f_check;
use relkk::FVector;

fn main() -> relkk::Result<()> {
    let f = FVector::from_i64s(&[0, 0, 4]);
    for n in 2..=4 {
        let cert = rel_f_check(&f, n)?;
        println!(
            "f = {f} on [{n}]: accepted = {}, a = {:?}, b = {:?}",
            cert.is_accepted(),
            cert.a.iter().map(ToString::to_string).collect::<Vec<_>>(),
            cert.b.iter().map(ToString::to_string).collect::<Vec<_>>(),
        );
    }

    let psi = witness_rel_f(&f, 4)?;
    println!("Δ facets: {:?}", psi.delta().facets());
    println!("Γ facets: {:?}", psi.gamma().facets());
    println!("faces of Δ ∖ Γ: {:?}", psi.faces());
    assert_eq!(psi.f_vector(), f);
    Ok(())
}
