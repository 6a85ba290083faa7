use proptest::prelude::*;

use kcore::affine::{phi, AffinePermutation, Side};
use kcore::cores::{c_map, core_from_word, k_conjugate, p_map};
use kcore::ktableau::{enumerate_semistandard, KTableau};
use kcore::lattice::{down_covers, is_cover, up_covers};
use kcore::{Composition, Core, Partition};

fn bounded_partition(k: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=k, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn k_and_partition(max_len: usize) -> impl Strategy<Value = (usize, Partition)> {
    (1usize..=5).prop_flat_map(move |k| (Just(k), bounded_partition(k, max_len)))
}

fn k_and_word(max_len: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1usize..=4).prop_flat_map(move |k| (Just(k), prop::collection::vec(0..=k, 0..=max_len)))
}

proptest! {
    #[test]
    fn core_round_trip((k, lambda) in k_and_partition(12)) {
        let core = c_map(&lambda, k).unwrap();
        prop_assert!(Core::new(core.shape().clone(), k).is_ok());
        prop_assert_eq!(p_map(&core), lambda.clone());
        prop_assert_eq!(core.bounded_hook_count(), lambda.degree());
    }

    #[test]
    fn k_conjugate_involution((k, lambda) in k_and_partition(12)) {
        let w = k_conjugate(&lambda, k).unwrap();
        prop_assert!(w.is_k_bounded(k));
        prop_assert_eq!(w.degree(), lambda.degree());
        prop_assert_eq!(k_conjugate(&w, k).unwrap(), lambda);
    }

    #[test]
    fn k_conjugation_reverses_covers((k, lambda) in k_and_partition(8)) {
        let lw = k_conjugate(&lambda, k).unwrap();
        for mu in up_covers(&lambda, k).unwrap() {
            prop_assert!(is_cover(&lambda, &mu, k));
            prop_assert!(down_covers(&mu, k).unwrap().contains(&lambda));
            let mw = k_conjugate(&mu, k).unwrap();
            prop_assert!(up_covers(&lw, k).unwrap().contains(&mw));
        }
    }

    #[test]
    fn operators_are_involutions((k, lambda) in k_and_partition(10), i in 0usize..6) {
        let core = c_map(&lambda, k).unwrap();
        let i = i % (k + 1);
        let s = core.apply_si(i).unwrap();
        prop_assert_eq!(s.apply_si(i).unwrap(), core.clone());
        let d = s.bounded_hook_count() as i64 - core.bounded_hook_count() as i64;
        prop_assert!(d.abs() <= 1);
    }

    #[test]
    fn words_act_alike_on_windows_and_cores((k, word) in k_and_word(10)) {
        let sigma = AffinePermutation::from_word(&word, k).unwrap();
        let core = core_from_word(&word, k).unwrap();
        prop_assert_eq!(sigma.min_coset_rep().s_map().unwrap(), core);
    }

    #[test]
    fn generators_change_length_by_one((k, word) in k_and_word(12), i in 0usize..5) {
        let sigma = AffinePermutation::from_word(&word, k).unwrap();
        let i = i % (k + 1);
        for side in [Side::Left, Side::Right] {
            let t = sigma.apply_generator(i, side).unwrap();
            prop_assert_eq!((t.length() as i64 - sigma.length() as i64).abs(), 1);
        }
        prop_assert_eq!(sigma.inverse().length(), sigma.length());
        prop_assert!(sigma.compose(&sigma.inverse()).unwrap().is_identity());
    }

    #[test]
    fn braid_relations((k, word) in (2usize..=4).prop_flat_map(|k| (Just(k), prop::collection::vec(0..=k, 0..=10))), i in 0usize..5) {
        let sigma = AffinePermutation::from_word(&word, k).unwrap();
        let i = i % (k + 1);
        let j = (i + 1) % (k + 1);
        let apply = |s: &AffinePermutation, w: &[usize]| {
            w.iter().fold(s.clone(), |acc, &g| acc.apply_generator(g, Side::Right).unwrap())
        };
        prop_assert_eq!(apply(&sigma, &[i, j, i]), apply(&sigma, &[j, i, j]));
        prop_assert_eq!(apply(&sigma, &[i, i]), sigma);
    }

    #[test]
    fn phi_inverts((k, lambda) in k_and_partition(8)) {
        let sigma = phi(&lambda, k).unwrap();
        prop_assert!(sigma.is_min_coset_rep());
        prop_assert_eq!(sigma.length(), lambda.degree());
        prop_assert_eq!(sigma.to_partition().unwrap(), lambda);
    }

    #[test]
    fn partition_text_and_json_round_trip(v in prop::collection::vec(1usize..20, 0..10)) {
        let mut v = v;
        v.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(v).unwrap();
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p.clone());
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn semistandard_tableaux_standardize((k, lambda) in k_and_partition(4), seed in any::<u64>()) {
        // a composition of |λ| chosen from the seed's bits
        let n = lambda.degree();
        let mut parts = Vec::new();
        let mut run = 0;
        for b in 0..n {
            run += 1;
            if b + 1 == n || (seed >> b) & 1 == 1 {
                parts.push(run);
                run = 0;
            }
        }
        let alpha = Composition::new(parts).unwrap();
        for t in enumerate_semistandard(&lambda, &alpha, k).unwrap() {
            let st = t.standardize();
            prop_assert!(st.validate().is_ok());
            prop_assert!(st.is_standard());
            prop_assert_eq!(st.shape(), t.shape());
            let json = serde_json::to_string(&t).unwrap();
            prop_assert_eq!(serde_json::from_str::<KTableau>(&json).unwrap(), t.clone());
            prop_assert_eq!(t.gamma_inv().unwrap().increments(), alpha.clone());
        }
    }
}
