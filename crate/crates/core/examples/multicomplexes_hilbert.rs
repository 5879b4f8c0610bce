//! Relative multicomplexes and Hilbert functions of monomial quotients.

use num_bigint::BigInt;
use relkk::realizability::{
    hilbert_quotient_check, m_sequence_check, rel_multi_check, rel_multi_prefix_check,
};
use relkk::FVector;

fn main() -> relkk::Result<()> {
    let macaulay = FVector::from_i64s(&[1, 3, 6, 10]);
    println!(
        "{macaulay} is an M-sequence: {}",
        m_sequence_check(&macaulay).is_accepted()
    );

    let f = FVector::from_i64s(&[0, 0, 4]);
    for n in [2, 3] {
        let cert = rel_multi_check(&f, n)?;
        println!(
            "relative multicomplex {f} on [{n}]: {}",
            verdict(cert.is_accepted())
        );
    }

    // a growing prefix: which entries can still be extended?
    let prefix = FVector::from_i64s(&[0, 1, 3, 2, 5]);
    let report = rel_multi_prefix_check(&prefix, 2)?;
    println!(
        "prefix {prefix} on [2]: first violation at {:?}",
        report.first_violation()
    );

    let hilbert: Vec<BigInt> = [0, 1, 2, 3, 4].into_iter().map(BigInt::from).collect();
    let report = hilbert_quotient_check(&hilbert, 2)?;
    println!(
        "H = (0,1,2,3,4) for an ideal quotient in 2 variables: {}",
        verdict(report.is_clean())
    );
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "realizable"
    } else {
        "not realizable"
    }
}
