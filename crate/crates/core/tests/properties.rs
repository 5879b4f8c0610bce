use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use proptest::sample::Index;

use relkk::complex::{RelativeComplex, SimplicialComplex};
use relkk::constructions::{cone_skeleton_repair, phi_d, witness_rel_f};
use relkk::face::{
    compressed_multisets, compressed_sets, count_multisets, count_sets, revlex_cmp,
    revlex_multisets, shadow_of_family, shadow_of_multifamily,
};
use relkk::oracle::{complex_masks, mask_to_complex, OracleConfig};
use relkk::realizability::{
    fully_cm_h_check, m_sequence_check, m_sequence_upward, rel_f_check, rel_multi_check,
    rel_multi_prefix_check,
};
use relkk::shadow::{binomial_rep, lower_shadow, macaulay_shadow, upper_shadow};
use relkk::shelling::{
    find_shelling, h_from_shelling, verify_shelling, SearchOutcome, ShellingCheck,
};
use relkk::vector::{f_to_h, h_to_f, FVector, HVector};

fn complexes_on_4() -> &'static [SimplicialComplex] {
    static ALL: OnceLock<Vec<SimplicialComplex>> = OnceLock::new();
    ALL.get_or_init(|| {
        complex_masks(4, &OracleConfig::default())
            .unwrap()
            .map(|m| mask_to_complex(4, m))
            .collect()
    })
}

/// A pair `Γ ⊆ Δ` built from two complexes on `[4]` as intersection and union.
fn pair(i: &Index, j: &Index) -> RelativeComplex {
    let all = complexes_on_4();
    let (a, b) = (&all[i.index(all.len())], &all[j.index(all.len())]);
    let delta = a.union(b);
    let common: Vec<_> = a.faces().intersection(&b.faces()).cloned().collect();
    let gamma = if common.is_empty() {
        SimplicialComplex::void(4)
    } else {
        SimplicialComplex::from_facets(4, common).unwrap()
    };
    RelativeComplex::new(delta, gamma).unwrap()
}

fn proper_f() -> impl Strategy<Value = FVector> {
    prop::collection::vec(0i64..12, 1..6).prop_map(|mut v| {
        v.insert(0, 0);
        FVector::from_i64s(&v)
    })
}

proptest! {
    #[test]
    fn binomial_rep_recovers_r(r in 0u64..1_000_000_000_000, k in 1u32..9) {
        let rep = binomial_rep(&BigUint::from(r), k);
        prop_assert_eq!(rep.value(), BigUint::from(r));
        let tops: Vec<_> = rep.terms().iter().map(|(m, _)| m.clone()).collect();
        prop_assert!(tops.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn shadows_are_adjoint(r in 0u64..1_000_000_000, k in 2u32..9) {
        let r = BigUint::from(r);
        prop_assert_eq!(macaulay_shadow(&upper_shadow(&r, k), k + 1), r.clone());
        prop_assert!(upper_shadow(&macaulay_shadow(&r, k), k - 1) >= r);
        prop_assert!(lower_shadow(&r, k) >= macaulay_shadow(&r, k));
    }

    #[test]
    fn compressed_families_realize_the_shadow_formulas(n in 1u32..8, k in 1usize..5, seed in any::<Index>()) {
        let total = u64::try_from(&count_sets(k, n)).unwrap() as usize;
        if total > 0 {
            let m = seed.index(total + 1);
            let sets = compressed_sets(m, k, n).unwrap();
            let shadow = shadow_of_family(&sets).unwrap();
            prop_assert_eq!(BigUint::from(shadow.len()), lower_shadow(&BigUint::from(m), k as u32));
        }
        let total = u64::try_from(&count_multisets(k, n)).unwrap() as usize;
        let m = seed.index(total + 1);
        let multisets = compressed_multisets(m, k, n).unwrap();
        let shadow = shadow_of_multifamily(&multisets).unwrap();
        prop_assert_eq!(BigUint::from(shadow.len()), macaulay_shadow(&BigUint::from(m), k as u32));
    }

    #[test]
    fn phi_d_is_a_bijection_preserving_order_within_degree(m in 1u32..6, d in 1usize..5) {
        let mut images = BTreeSet::new();
        for k in 0..=d {
            let sources: Vec<_> = revlex_multisets(k, m).collect();
            let targets: Vec<_> = sources.iter().map(|f| phi_d(f, d).unwrap()).collect();
            for pair in targets.windows(2) {
                prop_assert!(revlex_cmp(&pair[0], &pair[1]).unwrap().is_lt());
            }
            for t in targets {
                prop_assert_eq!(t.len(), d);
                prop_assert!(t.max_vertex().unwrap_or(0) <= m + d as u32);
                prop_assert!(images.insert(t));
            }
        }
        prop_assert_eq!(BigUint::from(images.len()), count_sets(d, m + d as u32));
    }

    #[test]
    fn downward_and_upward_m_conditions_agree(tail in prop::collection::vec(0i64..15, 0..6)) {
        let mut v = vec![1];
        v.extend(tail);
        let f = FVector::from_i64s(&v);
        prop_assert_eq!(m_sequence_check(&f).is_accepted(), m_sequence_upward(&f));
    }

    #[test]
    fn zero_padded_prefix_check_matches_top_down(f in proper_f(), n in 1u64..7, pad in 1usize..4) {
        let mut padded = f.entries().to_vec();
        padded.extend(std::iter::repeat_n(BigInt::from(0), pad));
        let top_down = rel_multi_check(&f, n).unwrap().is_accepted();
        let bottom_up = rel_multi_prefix_check(&FVector::new(padded), n).unwrap().is_clean();
        prop_assert_eq!(top_down, bottom_up);
    }

    #[test]
    fn fully_cm_h_reduces_to_multicomplexes(f in proper_f(), n in 1u64..10) {
        let h = HVector::new(f.entries().to_vec());
        let d = h.d() as u64;
        let fcm = fully_cm_h_check(&h, n).unwrap().is_accepted();
        if n > d {
            prop_assert_eq!(fcm, rel_multi_check(&f, n - d).unwrap().is_accepted());
        } else {
            prop_assert_eq!(fcm, h.is_zero());
        }
    }

    #[test]
    fn accepted_f_vectors_have_witnesses(f in proper_f(), n in 1u32..7) {
        if rel_f_check(&f, n as u64).unwrap().is_accepted() {
            let w = witness_rel_f(&f, n).unwrap();
            prop_assert_eq!(w.f_vector().trimmed(), f.trimmed());
            prop_assert!(w.ground_size() <= n);
        } else {
            prop_assert!(witness_rel_f(&f, n).is_err());
        }
    }

    #[test]
    fn f_h_conversion_is_invertible(v in prop::collection::vec(-50i64..50, 1..9)) {
        let h = HVector::from_i64s(&v);
        prop_assert_eq!(f_to_h(&h_to_f(&h), h.d()).unwrap(), h);
    }

    #[test]
    fn cone_repair_keeps_faces_and_equalizes_dimensions(i in any::<Index>(), j in any::<Index>()) {
        let psi = pair(&i, &j);
        let (Some(dim), Some(gamma_dim)) = (psi.dim(), psi.gamma().dim()) else {
            return Ok(());
        };
        let steps = (dim - gamma_dim).max(0) as u32;
        let repaired = cone_skeleton_repair(&psi, steps).unwrap();
        prop_assert_eq!(repaired.faces(), psi.faces());
        prop_assert_eq!(repaired.h_vector(), psi.h_vector());
        prop_assert_eq!(repaired.delta().dim(), Some(dim));
        prop_assert_eq!(repaired.gamma().dim(), Some(dim));
    }

    #[test]
    fn found_shellings_verify_and_give_the_h_vector(i in any::<Index>(), j in any::<Index>()) {
        let psi = pair(&i, &j);
        if let SearchOutcome::Found(order) = find_shelling(&psi, 1_000_000).unwrap() {
            let ShellingCheck::Valid(steps) = verify_shelling(&psi, &order).unwrap() else {
                return Err(TestCaseError::fail("found order does not verify"));
            };
            if let (true, Some(dim)) = (psi.is_pure(), psi.dim()) {
                let d = (dim + 1) as usize;
                prop_assert_eq!(h_from_shelling(&steps, d).unwrap(), psi.h_vector());
            }
        }
    }
}
