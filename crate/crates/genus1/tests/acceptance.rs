//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `cargo test --test acceptance -- --nocapture`
//! to see the lines).

use std::time::Instant;

use genus1::conductrix::{self, TableKind};
use genus1::dynkin::{self, Family};
use genus1::fibration::{self, SurfaceModel};
use genus1::linalg;
use genus1::q444;
use genus1::weightings;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};

fn report(name: &str, passed: bool, note: &str) {
    println!("{} {}: {}", if passed { "PASS" } else { "FAIL" }, name, note);
    assert!(passed, "{name}: {note}");
}

#[test]
fn criterion_1_quasi_elliptic_golden_table() {
    let start = Instant::now();
    let generated = conductrix::generate_table(TableKind::QuasiElliptic, 9, -6).unwrap();
    let golden = conductrix::load_golden(TableKind::QuasiElliptic, None).unwrap();
    let diff = conductrix::diff_tables(&generated, &golden);
    let elapsed = start.elapsed();
    let passed = generated.rows.len() == 12
        && golden.rows.len() == 12
        && diff.is_empty()
        && elapsed.as_secs_f64() < 10.0;
    report(
        "criterion-1 quasi-elliptic-table",
        passed,
        &format!(
            "12 rows, {} diff entries, {:.2}s",
            diff.len(),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_2_elliptic_golden_table() {
    let start = Instant::now();
    let generated = conductrix::generate_table(TableKind::Elliptic, 9, -6).unwrap();
    let golden = conductrix::load_golden(TableKind::Elliptic, None).unwrap();
    let diff = conductrix::diff_tables(&generated, &golden);
    let elapsed = start.elapsed();
    let passed = generated.rows.len() == 24
        && golden.rows.len() == 24
        && diff.is_empty()
        && elapsed.as_secs_f64() < 30.0;
    report(
        "criterion-2 elliptic-table",
        passed,
        &format!(
            "24 rows, {} diff entries, {:.2}s",
            diff.len(),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_3_excess_results_suite() {
    let start = Instant::now();
    let mut passed = true;
    let mut notes: Vec<String> = Vec::new();

    let mut diagrams = vec![
        dynkin::build(Family::AStar1, 1).unwrap(),
        dynkin::build(Family::AStar2, 2).unwrap(),
    ];
    for n in 1..=12 {
        diagrams.push(dynkin::build(Family::A, n).unwrap());
    }
    for n in 4..=12 {
        diagrams.push(dynkin::build(Family::D, n).unwrap());
    }
    for n in 6..=8 {
        diagrams.push(dynkin::build(Family::E, n).unwrap());
    }
    for d in &diagrams {
        let rep = weightings::verify_excess_results(d, -6);
        if !rep.all_passed() {
            passed = false;
            notes.push(format!("{} clauses failed", d.name()));
        }
    }

    // E~6, m = 0: exactly the two alternating weightings. (The zero
    // weighting is not admissible: the degree-3 centre would have three
    // weight-0 neighbours.)
    let e6 = dynkin::build(Family::E, 6).unwrap();
    let e6_count = weightings::enumerate_admissible(&e6, 0, -6).len();
    if e6_count != 2 {
        passed = false;
        notes.push(format!("E~6 m=0 count {e6_count} != 2"));
    }

    // E~7, m = 2 with excess 0: exactly one.
    let e7 = dynkin::build(Family::E, 7).unwrap();
    let e7_zero = weightings::enumerate_admissible(&e7, 2, -6)
        .iter()
        .filter(|(_, cert)| cert.excess == 0)
        .count();
    if e7_zero != 1 {
        passed = false;
        notes.push(format!("E~7 m=2 excess-0 count {e7_zero} != 1"));
    }

    // D~(4n+3), m = 0: no nonzero excess-0 weighting.
    for rank in [7usize, 11] {
        let d = dynkin::build(Family::D, rank).unwrap();
        let nonzero = weightings::enumerate_admissible(&d, 0, -6)
            .iter()
            .filter(|(w, cert)| cert.excess == 0 && w.iter().any(|&x| x != 0))
            .count();
        if nonzero != 0 {
            passed = false;
            notes.push(format!("D~{rank} m=0 nonzero excess-0 count {nonzero} != 0"));
        }
    }

    // D~4 admits a fibre-weight-2 weighting.
    let d4 = dynkin::build(Family::D, 4).unwrap();
    if weightings::enumerate_admissible(&d4, 2, -6).is_empty() {
        passed = false;
        notes.push("D~4 has no m=2 weighting".into());
    }

    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 60.0 {
        passed = false;
        notes.push(format!("too slow: {:.2}s", elapsed.as_secs_f64()));
    }
    let note = if notes.is_empty() {
        format!(
            "all clauses to rank 12; counts E~6=2, E~7=1, D~7/D~11=0, D~4 m=2 present; {:.2}s",
            elapsed.as_secs_f64()
        )
    } else {
        notes.join("; ")
    };
    report("criterion-3 excess-results", passed, &note);
}

#[test]
fn criterion_4_lattice_constants() {
    let tower = q444::build_tower();
    let mut passed = true;
    let mut notes: Vec<String> = Vec::new();

    let disc_q = tower.q.discriminant();
    if disc_q != linalg::q(-16) {
        passed = false;
        notes.push(format!("disc Q = {disc_q}"));
    }
    let disc_qpp = tower.q_double_prime.discriminant();
    if disc_qpp.abs() != num_rational::BigRational::one() {
        passed = false;
        notes.push(format!("|disc Q''| = {}", disc_qpp.abs()));
    }
    let report_max = q444::verify_maximality(&tower);
    for check in &report_max.checks {
        if !check.passed {
            passed = false;
            notes.push(format!("{} failed ({})", check.name, check.note));
        }
    }
    let parities = report_max
        .checks
        .iter()
        .find(|c| c.name == "overlattice-parities")
        .map(|c| c.passed)
        .unwrap_or(false);
    if !parities {
        passed = false;
        notes.push("overlattice parities not (1, 1, 3)".into());
    }
    let note = if notes.is_empty() {
        "disc Q = -16, |det Q''| = 1, overlattice parities (1, 1, 3)".into()
    } else {
        notes.join("; ")
    };
    report("criterion-4 lattice-constants", passed, &note);
}

#[test]
fn criterion_5_sigma_flip_calculus() {
    let tower = q444::build_tower();
    let mut passed = true;
    let mut notes: Vec<String> = Vec::new();
    let base = q444::base_form();

    // sigma_i are exact isometries.
    for i in 1..=3usize {
        let m = q444::sigma(&tower, i);
        let cols: Vec<Vec<_>> = (0..q444::DIM)
            .map(|j| (0..q444::DIM).map(|r| m[r][j].clone()).collect())
            .collect();
        for a in 0..q444::DIM {
            for b in 0..q444::DIM {
                if q444::pairing(&cols[a], &cols[b]) != linalg::q(base[a][b]) {
                    passed = false;
                    notes.push(format!("sigma_{i} not an isometry"));
                }
            }
        }
    }

    // sigma_i(f_i) = 2e - f_i and sigma_i(f_j) = -f_k as matrix identities.
    for i in 0..3usize {
        let m = q444::sigma(&tower, i + 1);
        let fi = linalg::mat_vec(&m, &tower.named.f[i]);
        let expected: Vec<_> = (0..q444::DIM)
            .map(|k| linalg::q(2) * &tower.named.e[k] - &tower.named.f[i][k])
            .collect();
        if fi != expected {
            passed = false;
            notes.push(format!("sigma_{}(f_{}) != 2e - f_{}", i + 1, i + 1, i + 1));
        }
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let fj = linalg::mat_vec(&m, &tower.named.f[j]);
        let neg_fk: Vec<_> = tower.named.f[k].iter().map(|x| -x).collect();
        if fj != neg_fk {
            passed = false;
            notes.push(format!("sigma_{}(f_{}) != -f_{}", i + 1, j + 1, k + 1));
        }
    }

    // All 18 displayed flip-table entries for each n in {0, 1, 2}.
    let cells = q444::verify_flip_table(&tower, 2);
    let bad = cells.iter().filter(|c| !c.passed).count();
    if cells.len() != 54 || bad != 0 {
        passed = false;
        notes.push(format!("flip table: {} cells, {} failed", cells.len(), bad));
    }

    // 200 random words of length <= 8: iterated flips equal the word
    // isometry exactly (first performed flip outermost).
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    for _ in 0..200 {
        let len = rng.gen_range(1..=8usize);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=3usize)).collect();
        let via_word =
            q444::apply_to_config(&q444::word_matrix(&tower, &word), &tower.standard);
        let mut via_flips = tower.standard.clone();
        for &arm in &word {
            via_flips = q444::flip(&via_flips, arm);
        }
        if via_word != via_flips {
            passed = false;
            notes.push(format!("word {word:?} mismatch"));
            break;
        }
    }

    let note = if notes.is_empty() {
        "isometries, half-fibre identities, 54 flip-table cells, 200 random words".into()
    } else {
        notes.join("; ")
    };
    report("criterion-5 sigma-flip-calculus", passed, &note);
}

#[test]
fn criterion_6_torsor_census() {
    let start = Instant::now();
    let tower = q444::build_tower();
    let mut passed = true;
    let mut notes: Vec<String> = Vec::new();

    // Flip-graph node counts.
    let g0 = fibration::build_flip_graph(&tower, SurfaceModel::T6 { mw_rank: 0 }, 5).unwrap();
    if g0.nodes.len() != 1 {
        passed = false;
        notes.push(format!("rank-0 graph has {} nodes", g0.nodes.len()));
    }
    for r in 1..=5usize {
        let g1 =
            fibration::build_flip_graph(&tower, SurfaceModel::T6 { mw_rank: 1 }, r).unwrap();
        if g1.nodes.len() != 2 * r + 1 {
            passed = false;
            notes.push(format!("rank-1 radius {r}: {} nodes", g1.nodes.len()));
        }
    }
    for r in 3..=5usize {
        let g2 =
            fibration::build_flip_graph(&tower, SurfaceModel::T6 { mw_rank: 2 }, r).unwrap();
        let expected = fibration::config_count_by_words(&tower, r);
        if g2.nodes.len() != expected {
            passed = false;
            notes.push(format!(
                "rank-2 radius {r}: {} nodes != {} by words",
                g2.nodes.len(),
                expected
            ));
        }
    }

    // Census.
    let c0 = fibration::fibration_census(&tower, SurfaceModel::T6 { mw_rank: 0 }, 5).unwrap();
    if c0.quasi_elliptic_classes.len() != 3 || c0.elliptic_count != 1 {
        passed = false;
        notes.push(format!(
            "rank-0 census: {} QE classes",
            c0.quasi_elliptic_classes.len()
        ));
    }
    let c8 = fibration::fibration_census(&tower, SurfaceModel::T8, 5).unwrap();
    if c8.quasi_elliptic_classes.len() + c8.elliptic_count != 1 {
        passed = false;
        notes.push("T8 census != 1 fibration".into());
    }
    for (simple, expect) in [(true, 3usize), (false, 2)] {
        let c7 = fibration::fibration_census(
            &tower,
            SurfaceModel::T7 { second_fibre_simple: simple },
            5,
        )
        .unwrap();
        if c7.quasi_elliptic_classes.len() != expect || c7.elliptic_count != 0 {
            passed = false;
            notes.push(format!("T7({simple}) census"));
        }
    }
    // Complete classes have membership multiplicity 1 or 2.
    for rank in 0..=2u8 {
        let c = fibration::fibration_census(&tower, SurfaceModel::T6 { mw_rank: rank }, 5)
            .unwrap();
        for class in &c.quasi_elliptic_classes {
            if class.complete && !(1..=2).contains(&class.member_configs.len()) {
                passed = false;
                notes.push(format!(
                    "rank {rank} class {} multiplicity {}",
                    class.class,
                    class.member_configs.len()
                ));
            }
        }
    }

    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 30.0 {
        passed = false;
        notes.push(format!("too slow: {:.2}s", elapsed.as_secs_f64()));
    }
    let note = if notes.is_empty() {
        format!(
            "graphs and censuses at radius 5, {:.2}s",
            elapsed.as_secs_f64()
        )
    } else {
        notes.join("; ")
    };
    report("criterion-6 torsor-census", passed, &note);
}

#[test]
fn criterion_7_property_suite() {
    let tower = q444::build_tower();
    let mut passed = true;
    let mut notes: Vec<String> = Vec::new();

    // Enumeration stability: bound -6 vs -8 up to rank 12.
    let mut diagrams = vec![
        dynkin::build(Family::AStar1, 1).unwrap(),
        dynkin::build(Family::AStar2, 2).unwrap(),
    ];
    for n in 1..=12 {
        diagrams.push(dynkin::build(Family::A, n).unwrap());
    }
    for n in 4..=12 {
        diagrams.push(dynkin::build(Family::D, n).unwrap());
    }
    for n in 6..=8 {
        diagrams.push(dynkin::build(Family::E, n).unwrap());
    }
    for d in &diagrams {
        for m in 0..=2i64 {
            let a: Vec<_> = weightings::enumerate_admissible(d, m, -6)
                .into_iter()
                .map(|(w, _)| w)
                .collect();
            let b: Vec<_> = weightings::enumerate_admissible(d, m, -8)
                .into_iter()
                .map(|(w, _)| w)
                .collect();
            if a != b {
                passed = false;
                notes.push(format!("{} m={m} unstable", d.name()));
            }
        }
    }

    // Exactly six candidate extraneous vectors: e +- f_i.
    let candidates = q444::candidate_vectors(&tower);
    let mut expected: Vec<Vec<_>> = Vec::new();
    for i in 0..3 {
        for sign in [1i64, -1] {
            expected.push(
                (0..q444::DIM)
                    .map(|k| &tower.named.e[k] + linalg::q(sign) * &tower.named.f[i][k])
                    .collect(),
            );
        }
    }
    expected.sort();
    if candidates.len() != 6 || candidates != expected {
        passed = false;
        notes.push(format!("{} candidate vectors", candidates.len()));
    }

    // Torsor check over at least 100 sampled classes F.
    let torsor = q444::t333_extension_torsor_check(&tower, 5);
    if torsor.samples < 100 || !torsor.failures.is_empty() {
        passed = false;
        notes.push(format!(
            "torsor: {} samples, {} failures",
            torsor.samples,
            torsor.failures.len()
        ));
    }

    let note = if notes.is_empty() {
        format!(
            "stability to rank 12, 6 candidates, torsor over {} classes",
            torsor.samples
        )
    } else {
        notes.join("; ")
    };
    report("criterion-7 property-suite", passed, &note);
}
