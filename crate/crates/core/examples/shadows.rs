//! Binomial representations and the three numerical shadows.

use num_bigint::BigUint;
use relkk::face::{compressed_sets, shadow_of_family};
use relkk::{binomial_rep, lower_shadow, macaulay_shadow, upper_shadow};

fn main() {
    let r = BigUint::from(10u32);
    for k in 1..=4 {
        let rep = binomial_rep(&r, k);
        let terms: Vec<String> = rep
            .terms()
            .iter()
            .map(|(m, i)| format!("C({m},{i})"))
            .collect();
        println!(
            "r = {r}, k = {k}: {} | lower {} | Macaulay {} | upper {}",
            terms.join(" + "),
            lower_shadow(&r, k),
            macaulay_shadow(&r, k),
            upper_shadow(&r, k),
        );
    }

    // the first 10 triangles of [6] in revlex have the smallest possible shadow
    let family = compressed_sets(10, 3, 6).unwrap();
    let shadow = shadow_of_family(&family).unwrap();
    println!(
        "compressed family of 10 triangles has {} edges in its shadow",
        shadow.len()
    );

    let huge: BigUint = "123456789012345678901234567890".parse().unwrap();
    println!(
        "upper shadow of {huge} at k = 7: {}",
        upper_shadow(&huge, 7)
    );
}
