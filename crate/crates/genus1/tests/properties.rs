//! Property-based and exhaustive invariant tests.

use genus1::dynkin::{self, Diagram, Family};
use genus1::linalg;
use genus1::q444;
use genus1::weightings;
use proptest::prelude::*;

/// Every diagram with at most `max_rank` components (rank + 1 vertices for
/// the branched families).
fn all_diagrams(max_rank: usize) -> Vec<Diagram> {
    let mut out = vec![
        dynkin::build(Family::AStar1, 1).unwrap(),
        dynkin::build(Family::AStar2, 2).unwrap(),
    ];
    for n in 1..=max_rank {
        out.push(dynkin::build(Family::A, n).unwrap());
    }
    for n in 4..=max_rank {
        out.push(dynkin::build(Family::D, n).unwrap());
    }
    for n in 6..=8.min(max_rank) {
        out.push(dynkin::build(Family::E, n).unwrap());
    }
    out
}

#[test]
fn enumeration_is_stable_under_deeper_bounds() {
    for d in all_diagrams(12) {
        for m in 0..=2i64 {
            let shallow: Vec<Vec<i64>> = weightings::enumerate_admissible(&d, m, -6)
                .into_iter()
                .map(|(w, _)| w)
                .collect();
            let deep: Vec<Vec<i64>> = weightings::enumerate_admissible(&d, m, -8)
                .into_iter()
                .map(|(w, _)| w)
                .collect();
            assert_eq!(shallow, deep, "{} m={}", d.name(), m);
        }
    }
}

#[test]
fn excess_identity_holds_for_all_admissible_weightings() {
    for d in all_diagrams(12) {
        for m in 0..=2i64 {
            for (w, cert) in weightings::enumerate_admissible(&d, m, -6) {
                let e = weightings::total_excess(&d, &w);
                assert_eq!(e, cert.excess);
                let wv: i64 = w.iter().zip(&d.excess_vertex).map(|(a, b)| a * b).sum();
                assert_eq!(e + d.n_coeff * m, -wv, "{} w={:?}", d.name(), w);
            }
        }
    }
}

#[test]
fn certificate_decompositions_recompose_the_weighting() {
    for d in all_diagrams(12) {
        for m in 0..=2i64 {
            for (w, cert) in weightings::enumerate_admissible(&d, m, -6) {
                let dec = cert.decomposition.expect("admissible implies certified");
                // w(v) = (u, E_v) + w'(v) with w' >= 0 of fibre weight m.
                for v in 0..d.len() {
                    let pair: i64 =
                        (0..d.len()).map(|j| d.gram[v][j] * dec.u[j]).sum();
                    assert_eq!(w[v], pair + dec.complement[v], "{}", d.name());
                    assert!(dec.complement[v] >= 0);
                }
                let mp: i64 =
                    dec.complement.iter().zip(&d.f).map(|(a, b)| a * b).sum();
                assert_eq!(mp, m, "{}", d.name());
            }
        }
    }
}

#[test]
fn canonical_form_is_idempotent_and_automorphism_invariant() {
    for d in all_diagrams(10) {
        for m in 0..=2i64 {
            for (w, _) in weightings::enumerate_admissible(&d, m, -6) {
                let c = weightings::canonical_under_auts(&d, &w);
                assert_eq!(c, weightings::canonical_under_auts(&d, &c), "{}", d.name());
                for g in &d.automorphisms {
                    let mut moved = vec![0i64; d.len()];
                    for i in 0..d.len() {
                        moved[g[i]] = w[i];
                    }
                    assert_eq!(
                        c,
                        weightings::canonical_under_auts(&d, &moved),
                        "{} g={:?}",
                        d.name(),
                        g
                    );
                }
            }
        }
    }
}

#[test]
fn the_flip_group_acts_freely_on_the_standard_configuration() {
    // Two words move the standard configuration to the same place exactly
    // when they represent the same group element (the stabilizer is
    // trivial): over all words of length <= 6 the matrix <-> configuration
    // correspondence is a bijection. Note that words reduced in the free
    // group can still coincide as group elements, e.g. the braid relation
    // sigma_2 sigma_1 sigma_2 = sigma_1 sigma_2 sigma_1 from
    // (sigma_1 sigma_2)^3 = 1.
    let tower = q444::build_tower();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..6 {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 1..=3usize {
                if w.last() == Some(&i) {
                    continue;
                }
                let mut w2 = w.clone();
                w2.push(i);
                next.push(w2);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let mut matrix_to_config = std::collections::BTreeMap::new();
    let mut config_to_matrix = std::collections::BTreeMap::new();
    for w in &words {
        let m = q444::word_matrix(&tower, w);
        let t = q444::apply_to_config(&m, &tower.standard);
        assert!(t.is_valid());
        if let Some(prev) = matrix_to_config.insert(m.clone(), t.vecs.clone()) {
            assert_eq!(prev, t.vecs, "one matrix, two configurations: {:?}", w);
        }
        if let Some(prev) = config_to_matrix.insert(t.vecs, m.clone()) {
            assert_eq!(prev, m, "one configuration, two matrices: {:?}", w);
        }
    }
    assert_eq!(matrix_to_config.len(), config_to_matrix.len());
    // The braid relation itself, checked directly.
    assert_eq!(
        q444::word_matrix(&tower, &[2, 1, 2]),
        q444::word_matrix(&tower, &[1, 2, 1])
    );
    for (m, cfg) in &matrix_to_config {
        assert_eq!(config_to_matrix.get(cfg), Some(m));
    }
}

proptest! {
    #[test]
    fn words_act_by_isometries(word in proptest::collection::vec(1..=3usize, 0..8)) {
        let tower = q444::build_tower();
        let m = q444::word_matrix(&tower, &word);
        let base = q444::base_form();
        let cols: Vec<Vec<_>> = (0..q444::DIM)
            .map(|j| (0..q444::DIM).map(|i| m[i][j].clone()).collect())
            .collect();
        for i in 0..q444::DIM {
            for j in 0..q444::DIM {
                prop_assert_eq!(
                    q444::pairing(&cols[i], &cols[j]),
                    linalg::q(base[i][j])
                );
            }
        }
    }

    #[test]
    fn flips_are_involutions_on_word_orbit_configs(
        word in proptest::collection::vec(1..=3usize, 0..6),
        arm in 1..=3usize,
    ) {
        let tower = q444::build_tower();
        let m = q444::word_matrix(&tower, &word);
        let t = q444::apply_to_config(&m, &tower.standard);
        let once = q444::flip(&t, arm);
        prop_assert!(once.is_valid());
        let twice = q444::flip(&once, arm);
        prop_assert_eq!(twice, t);
    }

    #[test]
    fn applying_a_word_matches_its_matrix(
        word in proptest::collection::vec(1..=3usize, 0..8),
        coeffs in proptest::collection::vec(-3..=3i64, 10),
    ) {
        let tower = q444::build_tower();
        let x: Vec<_> = coeffs.iter().map(|&c| linalg::q(c)).collect();
        let via_word = q444::apply_word(&tower, &word, &x);
        let via_matrix = linalg::mat_vec(&q444::word_matrix(&tower, &word), &x);
        prop_assert_eq!(via_word, via_matrix);
    }
}
