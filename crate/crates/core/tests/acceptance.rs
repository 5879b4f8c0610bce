//! Acceptance criteria, one test per criterion.
//!
//! Each test prints a `criterion N: PASS|FAIL` line (visible with
//! `--nocapture`); cargo's own per-test line carries the same verdict.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use relkk::complex::RelativeComplex;
use relkk::constructions::{
    bfs_witness, decomposition_witness, find_decomposition, verify_decomposition, witness_rel_f,
    DecompositionOutcome,
};
use relkk::face::Face;
use relkk::fixtures;
use relkk::oracle::{
    achievable_fully_shellable_h, achievable_relative_f, min_shadow, OracleConfig,
};
use relkk::realizability::{
    fully_cm_h_check, hilbert_quotient_check, m_sequence_check, rel_f_check, rel_multi_check,
};
use relkk::shadow::{binomial_u64, lower_shadow, macaulay_shadow, upper_shadow};
use relkk::shelling::{h_from_shelling, is_fully_shellable, verify_shelling, ShellingCheck};
use relkk::vector::{f_to_h, h_to_f, FVector, HVector};

const CFG: OracleConfig = OracleConfig {
    allow_long_runtimes: false,
};

fn report(n: u32, what: &str, ok: bool, start: Instant) {
    println!(
        "criterion {n}: {} {what} ({:.2?})",
        if ok { "PASS" } else { "FAIL" },
        start.elapsed()
    );
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// All proper face vectors on `[n]` with a positive last entry that fit the
/// subset counts of `[n]`.
fn candidate_f_vectors(n: u32) -> Vec<FVector> {
    let caps: Vec<u64> = (1..=n as u64)
        .map(|k| u64::try_from(&binomial_u64(n as u64, k)).unwrap())
        .collect();
    let mut out = Vec::new();
    for d in 1..=n as usize {
        let mut entries = vec![0u64; d];
        loop {
            if entries[d - 1] > 0 {
                let v: Vec<i64> = std::iter::once(0)
                    .chain(entries.iter().map(|&x| x as i64))
                    .collect();
                out.push(FVector::from_i64s(&v));
            }
            let mut i = 0;
            while i < d && entries[i] == caps[i] {
                entries[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
            entries[i] += 1;
        }
    }
    out
}

#[test]
fn criterion_1_relative_f_vectors_match_enumeration() {
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=5u32 {
        let oracle = achievable_relative_f(n, &CFG).unwrap();
        let accepted: BTreeSet<FVector> = candidate_f_vectors(n)
            .into_iter()
            .filter(|f| rel_f_check(f, n as u64).unwrap().is_accepted())
            .collect();
        let same = oracle == accepted;
        println!(
            "  n = {n}: {} achievable, {} accepted, equal = {same}",
            oracle.len(),
            accepted.len()
        );
        if !same {
            for f in oracle.symmetric_difference(&accepted) {
                println!("    differs: {f}");
            }
        }
        ok &= same;
    }
    report(
        1,
        "rel_f_check equals the enumerated f-vectors for n <= 5",
        ok,
        start,
    );
    assert!(ok);
}

#[test]
fn criterion_2_shadow_identities() {
    let start = Instant::now();
    let mut ok = true;
    for r in 0..=500u64 {
        for k in 1..=5u32 {
            ok &= macaulay_shadow(&upper_shadow(&big(r), k), k + 1) == big(r);
        }
        for k in 2..=5u32 {
            ok &= upper_shadow(&macaulay_shadow(&big(r), k), k - 1) >= big(r);
        }
    }
    report(
        2,
        "Macaulay and upper shadows are adjoint for r <= 500",
        ok,
        start,
    );
    assert!(ok);
}

#[test]
fn criterion_3_compressed_families_minimize_shadows() {
    let start = Instant::now();
    let mut ok = true;
    for k in [2u32, 3] {
        for m in 0..=12u64 {
            let found = min_shadow(m, k, 6, &CFG).unwrap();
            let predicted = lower_shadow(&big(m), k);
            if big(found) != predicted {
                println!("  m = {m}, k = {k}: minimum {found}, shadow formula {predicted}");
                ok = false;
            }
        }
    }
    report(
        3,
        "min_shadow(m, k, 6) equals the lower shadow for m <= 12, k in {2, 3}",
        ok,
        start,
    );
    assert!(ok);
}

#[test]
fn criterion_4_worked_examples() {
    let start = Instant::now();
    let f = FVector::from_i64s(&[0, 0, 4]);
    let h = HVector::from_i64s(&[0, 0, 4]);
    let checks = [
        (
            "relative multicomplex (0,0,4) on [2] rejected",
            !rel_multi_check(&f, 2).unwrap().is_accepted(),
        ),
        (
            "fully CM h (0,0,4) on [4] rejected",
            !fully_cm_h_check(&h, 4).unwrap().is_accepted(),
        ),
        (
            "fully CM h (0,0,4) on [5] accepted",
            fully_cm_h_check(&h, 5).unwrap().is_accepted(),
        ),
        (
            "relative f (0,0,4) on [4] accepted",
            rel_f_check(&f, 4).unwrap().is_accepted(),
        ),
        (
            "witness for (0,0,4) on [4] verified",
            witness_rel_f(&f, 4).is_ok_and(|w| w.f_vector() == f && w.ground_size() <= 4),
        ),
        (
            "four open edges not fully shellable on [4]",
            !is_fully_shellable(&fixtures::open_edges(), None, 1_000_000)
                .unwrap()
                .is_fully_shellable(),
        ),
        (
            "four open edges fully shellable on [5]",
            is_fully_shellable(&fixtures::open_edges(), Some(5), 1_000_000)
                .unwrap()
                .is_fully_shellable(),
        ),
    ];
    let mut ok = true;
    for (what, passed) in checks {
        println!("  {what}: {passed}");
        ok &= passed;
    }
    report(4, "worked examples", ok, start);
    assert!(ok);
}

fn shells(psi: &RelativeComplex, order: &[Face]) -> Option<Vec<relkk::shelling::ShellingStep>> {
    match verify_shelling(psi, order).ok()? {
        ShellingCheck::Valid(steps) => Some(steps),
        ShellingCheck::Failed(_) => None,
    }
}

/// All `(0, h_1, ..., h_d)` with `1 <= d <= 3` and entries in `0..=3`.
fn small_h_vectors() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for d in 1..=3usize {
        for code in 0..4i64.pow(d as u32) {
            let mut h = vec![0i64];
            let mut c = code;
            for _ in 0..d {
                h.push(c % 4);
                c /= 4;
            }
            out.push(h);
        }
    }
    out
}

#[test]
fn criterion_5_bfs_witnesses_are_fully_shellable() {
    let start = Instant::now();
    let mut ok = true;
    let mut tested = 0;
    for entries in small_h_vectors() {
        let h = HVector::from_i64s(&entries);
        if h.is_zero() {
            continue;
        }
        let d = h.d();
        let probe = fully_cm_h_check(&h, 1_000).unwrap();
        let n = u32::try_from(&probe.a[0]).unwrap() + d as u32;
        if n > 7 {
            continue;
        }
        tested += 1;
        let passed = (|| {
            let w = bfs_witness(&h, n).ok()?;
            let delta = RelativeComplex::from_complex(w.psi.delta().clone());
            let gamma = RelativeComplex::from_complex(w.psi.gamma().clone());
            shells(&delta, &w.delta_order)?;
            shells(&gamma, &w.gamma_order)?;
            let steps = shells(&w.psi, &w.psi_order)?;
            let dims = [w.psi.delta().dim(), w.psi.gamma().dim(), w.psi.dim()];
            Some(
                h_from_shelling(&steps, d).ok()? == h
                    && w.psi.h_vector() == h
                    && dims.iter().all(|&x| x == Some(d as i64 - 1))
                    && w.psi.ground_size() <= n,
            )
        })()
        .unwrap_or(false);
        if !passed {
            println!("  h = {h}, n = {n}: witness failed");
        }
        ok &= passed;
    }
    report(
        5,
        &format!("{tested} witnesses shell Δ, Γ and Ψ with the requested h"),
        ok,
        start,
    );
    assert!(ok && tested > 0);
}

#[test]
fn criterion_6_fully_shellable_h_vectors_match_enumeration() {
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=5u32 {
        let oracle = achievable_fully_shellable_h(n, 2, &CFG).unwrap();
        let top = u64::try_from(&binomial_u64(n as u64, 2)).unwrap() as i64;
        let mut accepted = BTreeSet::new();
        for h1 in 0..=n as i64 {
            for h2 in 0..=top {
                let h = HVector::from_i64s(&[0, h1, h2]);
                if !h.is_zero() && fully_cm_h_check(&h, n as u64).unwrap().is_accepted() {
                    accepted.insert(h);
                }
            }
        }
        let same = oracle == accepted;
        println!(
            "  n = {n}: {} achievable, {} accepted, equal = {same}",
            oracle.len(),
            accepted.len()
        );
        if !same {
            for h in oracle.symmetric_difference(&accepted) {
                println!("    differs: {h}");
            }
        }
        ok &= same;
    }
    report(
        6,
        "fcm_h_check equals the fully shellable h-vectors for d = 2, n <= 5",
        ok,
        start,
    );
    assert!(ok);
}

#[test]
fn criterion_7_hilbert_functions() {
    let start = Instant::now();
    let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let ok = hilbert_quotient_check(&ints(&[0, 1, 2, 3, 4]), 2)
        .unwrap()
        .is_clean()
        && !hilbert_quotient_check(&ints(&[0, 0, 2]), 1)
            .unwrap()
            .is_clean();
    report(
        7,
        "Hilbert function of (x) in two variables accepted, (0,0,2) in one rejected",
        ok,
        start,
    );
    assert!(ok);
}

/// Multisets of shifts in `1..=d` using shift `p` at most `h_p` times.
fn shift_multisets(h: &[i64]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for (p, &hp) in h.iter().enumerate().skip(1) {
        let mut next = Vec::new();
        for base in &out {
            for count in 0..=hp as usize {
                let mut s = base.clone();
                s.extend(std::iter::repeat_n(p, count));
                next.push(s);
            }
        }
        out = next;
    }
    out
}

/// M-sequences `(1, ν_1, ...)` of length at most `len` with entries `<= cap`.
fn small_m_sequences(len: usize, cap: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut frontier = vec![vec![1i64]];
    while let Some(nu) = frontier.pop() {
        if m_sequence_check(&FVector::from_i64s(&nu)).is_accepted() {
            out.push(nu.clone());
            if nu.len() < len {
                for x in 0..=cap {
                    let mut longer = nu.clone();
                    longer.push(x);
                    frontier.push(longer);
                }
            }
        }
    }
    out
}

/// Whether `h` is a sum of `E^{a_i} ν_i`, by forward reachability over
/// partial sums.
fn decomposable(h: &[i64], shifts: &[usize]) -> bool {
    let mut reachable: BTreeSet<Vec<i64>> = BTreeSet::new();
    reachable.insert(vec![0; h.len()]);
    for &a in shifts {
        if a >= h.len() {
            return false;
        }
        let options = small_m_sequences(h.len() - a, 3);
        let mut next = BTreeSet::new();
        for partial in &reachable {
            for nu in &options {
                let mut s = partial.clone();
                for (j, x) in nu.iter().enumerate() {
                    s[a + j] += x;
                }
                if s.iter().zip(h).all(|(x, y)| x <= y) {
                    next.insert(s);
                }
            }
        }
        reachable = next;
    }
    reachable.contains(h)
}

#[test]
fn criterion_8_decompositions_round_trip() {
    let start = Instant::now();
    let mut ok = true;
    let (mut found, mut none) = (0, 0);
    for entries in small_h_vectors() {
        let h = HVector::from_i64s(&entries);
        for shifts in shift_multisets(&entries) {
            if shifts.is_empty() {
                continue;
            }
            let expected = decomposable(&entries, &shifts);
            match find_decomposition(&h, &shifts, 10_000_000).unwrap() {
                DecompositionOutcome::Found(dec) => {
                    found += 1;
                    let mut sizes: Vec<usize> = Vec::new();
                    let good = expected
                        && verify_decomposition(&dec).is_accepted()
                        && decomposition_witness(&dec).is_ok_and(|w| {
                            sizes = w.psi.minimal_faces().iter().map(Face::len).collect();
                            sizes.sort_unstable();
                            w.psi.h_vector() == h && sizes == shifts
                        });
                    if !good {
                        println!(
                            "  h = {h}, shifts = {shifts:?}: round trip failed (sizes {sizes:?})"
                        );
                    }
                    ok &= good;
                }
                DecompositionOutcome::None => {
                    none += 1;
                    if expected {
                        println!("  h = {h}, shifts = {shifts:?}: missed a decomposition");
                        ok = false;
                    }
                }
                DecompositionOutcome::BoundExceeded => {
                    println!("  h = {h}, shifts = {shifts:?}: bound exceeded");
                    ok = false;
                }
            }
        }
    }
    report(
        8,
        &format!("{found} decompositions round trip, {none} correctly absent"),
        ok,
        start,
    );
    assert!(ok);
}

#[test]
fn criterion_9_f_h_involution() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut ok = true;
    for _ in 0..10_000 {
        let len = rng.gen_range(1..=8);
        let v: Vec<i64> = (0..len).map(|_| rng.gen_range(-20..=20)).collect();
        let f = FVector::from_i64s(&v);
        let back = h_to_f(&f_to_h(&f, len - 1).unwrap());
        if back != f {
            println!("  {f} -> {back}");
            ok = false;
        }
    }
    report(
        9,
        "h_to_f(f_to_h(v)) = v for 10^4 random vectors",
        ok,
        start,
    );
    assert!(ok);
}
