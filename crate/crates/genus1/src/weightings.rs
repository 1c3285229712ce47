//! Admissible weightings on extended Dynkin diagrams.
//!
//! A *weighting* assigns an integer `w(v)` to every vertex. The six
//! admissibility conditions are:
//!
//! 1. `w(v) <= 1` for every vertex;
//! 2. every edge `uv` has nonnegative *excess* `-(w(u) + w(v))`;
//! 3. the *fibre weight* `m = sum w(v) F(v)` lies in `{0, 1, 2}`;
//! 4. a vertex of weight 0 is adjacent to at most two vertices of weight 0;
//! 5. there is a *representing element* `u` in the root lattice with
//!    `w(v) >= (u, v)` for every `v`, taken reduced (nonnegative and not
//!    dominating the Kodaira–Néron cycle `F`); equivalently, `w` decomposes
//!    as `w = (., u) + w'` with `w' >= 0` integral and `sum w'(v) F(v) = m`;
//! 6. when `m = 2`, some such reduced `u` vanishes at every vertex of
//!    Kodaira–Néron multiplicity 1.
//!
//! *Semi-admissibility* drops condition 2; it is the relevant notion for
//! `A~*1`, whose two nonzero table weightings have a negative edge excess.
//!
//! The *total excess* is `e = sum over edges of excess-cycle multiplicity
//! times edge excess`; it satisfies the identity `e + n m = -w(V)` where
//! `n` and `V` are the excess-cycle data of the diagram.

use serde::Serialize;

use crate::dynkin::{Diagram, Family};
use crate::linalg::{self, Q};
use num_traits::Zero;

/// A decomposition `w = (., u) + w'` certifying condition 5 (and 6 when
/// `m = 2`): `u` is the representing element, `complement` is `w'`
/// (supported on the cusp components in the quasi-elliptic reading).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub u: Vec<i64>,
    pub complement: Vec<i64>,
}

/// Full admissibility certificate for one weighting.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    /// Fibre weight `m = sum w(v) F(v)`.
    pub m: i64,
    /// Total excess `e`.
    pub excess: i64,
    /// Outcome of each of the six conditions (index `i` = condition `i+1`).
    pub conditions: [bool; 6],
    /// All six conditions hold.
    pub admissible: bool,
    /// All conditions except edge-excess nonnegativity hold.
    pub semi_admissible: bool,
    /// A witnessing decomposition when conditions 5/6 hold (for `m = 2`,
    /// one passing condition 6).
    pub decomposition: Option<Decomposition>,
}

/// Fibre weight `m = sum w(v) F(v)` of a weighting.
pub fn fibre_weight(d: &Diagram, w: &[i64]) -> i64 {
    w.iter().zip(&d.f).map(|(a, b)| a * b).sum()
}

/// Excess `-(w(u) + w(v))` of the `k`-th edge.
pub fn edge_excess(d: &Diagram, w: &[i64], k: usize) -> i64 {
    let e = d.edges[k];
    -(w[e.a] + w[e.b])
}

/// Total excess: the pairing of `-w` with the edge part of the excess
/// cycle.
pub fn total_excess(d: &Diagram, w: &[i64]) -> i64 {
    (0..d.edges.len())
        .map(|k| d.excess_edge[k] * edge_excess(d, w, k))
        .sum()
}

/// All decompositions `w = (., u) + w'` with `u` reduced. When
/// `require_condition_6` is set, only decompositions whose `u` vanishes on
/// every multiplicity-1 vertex are returned.
pub fn decompositions(
    d: &Diagram,
    w: &[i64],
    require_condition_6: bool,
) -> Vec<Decomposition> {
    let m = fibre_weight(d, w);
    if m < 0 {
        return vec![];
    }
    let n = d.len();
    let mut out = Vec::new();
    // Enumerate complements w' >= 0 with sum w'(v) F(v) = m.
    let mut wp = vec![0i64; n];
    enumerate_complements(d, m, 0, 0, &mut wp, &mut |wp| {
        if let Some(u) = solve_representing(d, w, wp) {
            if !require_condition_6
                || u.iter().zip(&d.f).all(|(&ui, &fi)| fi != 1 || ui == 0)
            {
                out.push(Decomposition { u, complement: wp.to_vec() });
            }
        }
    });
    out
}

fn enumerate_complements(
    d: &Diagram,
    m: i64,
    idx: usize,
    acc: i64,
    wp: &mut Vec<i64>,
    f: &mut dyn FnMut(&[i64]),
) {
    if idx == d.len() {
        if acc == m {
            f(wp);
        }
        return;
    }
    let mut v = 0i64;
    while acc + v * d.f[idx] <= m {
        wp[idx] = v;
        enumerate_complements(d, m, idx + 1, acc + v * d.f[idx], wp, f);
        v += 1;
    }
    wp[idx] = 0;
}

/// Solves `(u, .) = w - w'` for an integral `u` with `u(attached) = 0`,
/// then reduces it to a nonnegative representative modulo the radical.
/// Returns `None` when no integral solution exists.
fn solve_representing(d: &Diagram, w: &[i64], wp: &[i64]) -> Option<Vec<i64>> {
    let n = d.len();
    let att = d.attached;
    let keep: Vec<usize> = (0..n).filter(|&i| i != att).collect();
    // Gram restricted to the non-attached vertices is nonsingular.
    let a: Vec<Vec<Q>> = keep
        .iter()
        .map(|&i| keep.iter().map(|&j| linalg::q(d.gram[i][j])).collect())
        .collect();
    let b: Vec<Q> = keep.iter().map(|&i| linalg::q(w[i] - wp[i])).collect();
    let sol = linalg::solve(&a, &b)?;
    let mut u = vec![Q::zero(); n];
    for (pos, &i) in keep.iter().enumerate() {
        u[i] = sol[pos].clone();
    }
    // The dropped row is automatically consistent because the target
    // w - w' pairs to zero with F; assert it anyway.
    let row: Q = (0..n).map(|j| linalg::q(d.gram[att][j]) * &u[j]).sum();
    debug_assert_eq!(row, linalg::q(w[att] - wp[att]));
    if !u.iter().all(|x| x.is_integer()) {
        return None;
    }
    let mut ui: Vec<i64> = u
        .iter()
        .map(|x| i64::try_from(x.to_integer()).expect("coefficient fits i64"))
        .collect();
    // Reduce: add the minimal multiple of F making all coordinates
    // nonnegative. Minimality makes the result reduced (some coordinate
    // of u - F stays negative).
    let k = ui
        .iter()
        .zip(&d.f)
        .map(|(&c, &f)| (-c + f - 1).div_euclid(f).max(0))
        .max()
        .unwrap_or(0);
    for (c, &f) in ui.iter_mut().zip(&d.f) {
        *c += k * f;
    }
    debug_assert!(ui.iter().all(|&c| c >= 0));
    debug_assert!(ui.iter().zip(&d.f).any(|(&c, &f)| c - f < 0));
    Some(ui)
}

/// Checks all six admissibility conditions and returns the certificate.
pub fn check(d: &Diagram, w: &[i64]) -> Certificate {
    assert_eq!(w.len(), d.len());
    let m = fibre_weight(d, w);
    let excess = total_excess(d, w);
    let c1 = w.iter().all(|&x| x <= 1);
    let c2 = (0..d.edges.len()).all(|k| edge_excess(d, w, k) >= 0);
    let c3 = (0..=2).contains(&m);
    let c4 = (0..d.len()).all(|v| {
        w[v] != 0 || d.adjacency[v].iter().filter(|&&u| w[u] == 0).count() <= 2
    });
    let (c5, c6, decomposition) = if c1 && c3 && c4 {
        let all = decompositions(d, w, false);
        let c5 = !all.is_empty();
        if m == 2 {
            let filtered: Vec<Decomposition> = all
                .iter()
                .filter(|dec| {
                    dec.u
                        .iter()
                        .zip(&d.f)
                        .all(|(&ui, &fi)| fi != 1 || ui == 0)
                })
                .cloned()
                .collect();
            let c6 = !filtered.is_empty();
            (c5, c6, filtered.into_iter().next().or_else(|| all.into_iter().next()))
        } else {
            (c5, true, all.into_iter().next())
        }
    } else {
        (false, false, None)
    };
    let admissible = c1 && c2 && c3 && c4 && c5 && c6;
    let semi_admissible = c1 && c3 && c4 && c5 && c6;
    Certificate {
        m,
        excess,
        conditions: [c1, c2, c3, c4, c5, c6],
        admissible,
        semi_admissible,
        decomposition,
    }
}

/// Enumerates all weightings with fibre weight `m` that are admissible
/// (semi-admissible for `A~*1`), with values bounded below by `bound`.
///
/// The search is exhaustive over `bound <= w(v) <= 1`; condition 1 caps
/// the values above and in practice the admissible set is stable once
/// `bound <= -6` (checked by property tests against `bound = -8`).
pub fn enumerate_admissible(d: &Diagram, m: i64, bound: i64) -> Vec<(Vec<i64>, Certificate)> {
    assert!(bound <= 1, "lower bound must be <= 1");
    let skip_edge_pruning = d.family == Family::AStar1;
    let n = d.len();
    // Suffix sums of F for fibre-weight window pruning.
    let mut suffix_f = vec![0i64; n + 1];
    for i in (0..n).rev() {
        suffix_f[i] = suffix_f[i + 1] + d.f[i];
    }
    let mut out = Vec::new();
    let mut w = vec![0i64; n];
    dfs(
        d,
        m,
        bound,
        skip_edge_pruning,
        &suffix_f,
        0,
        0,
        &mut w,
        &mut out,
    );
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    d: &Diagram,
    m: i64,
    bound: i64,
    skip_edge_pruning: bool,
    suffix_f: &[i64],
    idx: usize,
    acc: i64,
    w: &mut Vec<i64>,
    out: &mut Vec<(Vec<i64>, Certificate)>,
) {
    if idx == d.len() {
        if acc != m {
            return;
        }
        let cert = check(d, w);
        let ok = if d.family == Family::AStar1 {
            cert.semi_admissible
        } else {
            cert.admissible
        };
        if ok {
            out.push((w.clone(), cert));
        }
        return;
    }
    let rem = suffix_f[idx];
    let mut v = 1i64;
    while v >= bound {
        w[idx] = v;
        let acc2 = acc + v * d.f[idx];
        let rest = rem - d.f[idx];
        // Window: remaining vertices contribute between bound*rest and rest.
        if acc2 + rest >= m && acc2 + bound * rest <= m {
            // Per-edge excess pruning on fully assigned edges.
            let edges_ok = skip_edge_pruning
                || d.edges.iter().all(|e| {
                    let (a, b) = (e.a, e.b);
                    if a.max(b) != idx {
                        true
                    } else {
                        w[a] + w[b] <= 0
                    }
                });
            if edges_ok {
                dfs(d, m, bound, skip_edge_pruning, suffix_f, idx + 1, acc2, w, out);
            }
        }
        v -= 1;
    }
    w[idx] = 0;
}

/// Number of admissible weightings for `m = 0, 1, 2` (semi-admissible for
/// `A~*1`), up to nothing (raw count, not up to automorphism).
pub fn admissible_counts(d: &Diagram, bound: i64) -> [usize; 3] {
    [0, 1, 2].map(|m| enumerate_admissible(d, m, bound).len())
}

/// One clause of the excess-results verification report.
#[derive(Debug, Clone, Serialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    pub note: String,
}

/// Report of [`verify_excess_results`].
#[derive(Debug, Clone, Serialize)]
pub struct ExcessReport {
    pub diagram: String,
    pub clauses: Vec<Clause>,
}

impl ExcessReport {
    /// True when every clause passed.
    pub fn all_passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }
}

/// Branch weights of an admissible weighting: `f = -w(center)` for the
/// single-branch diagrams (`D~4`, `E~7`, `E~8`), `(f1, f2) = (-w(b1),
/// -w(b2))` for `D~n`, n >= 5. Zero for unbranched diagrams.
pub fn branch_weights(d: &Diagram, w: &[i64]) -> Vec<i64> {
    let branch: Vec<usize> = (0..d.len()).filter(|&v| d.degree(v) >= 3).collect();
    branch.iter().map(|&v| -w[v]).collect()
}

/// Verifies the structural results about total excess for one diagram:
///
/// * (i) on cycles (`A~` families) and on `E~6`, every admissible weighting
///   has `e = m = 0` and is zero or alternating `±1` (cycles admit only
///   zero; `E~6` admits exactly the two alternating weightings);
/// * (ii) on `D~4`, `E~7`, `E~8`: `e + m = 2 f` with `f` the branch weight;
/// * (iii) on `D~n`, n > 4: `e + m = f1 + f2`;
/// * (iv) branch weights are at most 1, except the `D~4` weighting with
///   `f = 2` and, on `D~4k` (k >= 2), the alternating family with
///   `{f1, f2} = {2, 1}`, `m = 0`, `e = 3`;
/// * (iv-b) in any decomposition `w = (., u) + w'`, a multiplicity-1 vertex
///   outside the support of `u` has `w'(v) = 0`;
/// * (v) classification of excess-zero weightings: nonzero ones with
///   `m = 0` exist exactly on `D~{4k+1}` (one, up to automorphism) and
///   `E~6` (two); `m = 2` excess-zero weightings exist exactly on `D~2k`,
///   `E~7`, `E~8`, are unique with a unique decomposition, and the
///   complement `w'` is supported on the middle chain vertex (`D~2k`),
///   the short-arm vertex (`E~7`) or the long-leaf end (`E~8`); there are
///   no excess-zero weightings with `m = 1`.
pub fn verify_excess_results(d: &Diagram, bound: i64) -> ExcessReport {
    let mut clauses = Vec::new();
    let mut add = |name: &str, passed: bool, note: String| {
        clauses.push(Clause { name: name.into(), passed, note });
    };
    let per_m: Vec<Vec<(Vec<i64>, Certificate)>> =
        (0..=2).map(|m| enumerate_admissible(d, m, bound)).collect();
    let all: Vec<&(Vec<i64>, Certificate)> = per_m.iter().flatten().collect();

    // Identity e + n m = -w(V), for every admissible weighting.
    {
        let ok = all.iter().all(|(w, c)| {
            let wv: i64 = w.iter().zip(&d.excess_vertex).map(|(a, b)| a * b).sum();
            c.excess + d.n_coeff * c.m == -wv
        });
        add("excess-identity", ok, format!("{} weightings", all.len()));
    }

    match d.family {
        Family::A | Family::AStar2 | Family::AStar1 => {
            let ok = if d.family == Family::AStar1 {
                // A~*1 is special: the semi-admissible set is {0, (1,0),
                // (0,1), (1,1)}.
                per_m[0].len() == 1 && per_m[1].len() == 2 && per_m[2].len() == 1
            } else {
                // Cycles: only the zero weighting.
                per_m[0].len() == 1
                    && per_m[0][0].0.iter().all(|&x| x == 0)
                    && per_m[1].is_empty()
                    && per_m[2].is_empty()
            };
            add("cycle-only-zero", ok, format!("counts {:?}", per_m.iter().map(|v| v.len()).collect::<Vec<_>>()));
        }
        Family::E if d.rank == 6 => {
            // Exactly the two alternating weightings, e = m = 0.
            let ok = per_m[1].is_empty()
                && per_m[2].is_empty()
                && per_m[0].len() == 2
                && per_m[0].iter().all(|(w, c)| {
                    c.excess == 0 && w.iter().all(|&x| x == 1 || x == -1)
                });
            add("e6-alternating", ok, format!("m=0 count {}", per_m[0].len()));
        }
        _ => {}
    }

    let branched = matches!(d.family, Family::D | Family::E if !(d.family == Family::E && d.rank == 6));
    if branched {
        // (ii)/(iii): e + m = sum of branch weights.
        let ok = all.iter().all(|(w, c)| {
            let bw = branch_weights(d, w);
            let expected = if d.degree_three_count() == 1 {
                // Single branch vertex counted twice (V = 2 * center).
                2 * bw[0]
            } else {
                bw.iter().sum()
            };
            c.excess + c.m == expected
        });
        add("excess-vs-branch-weights", ok, String::new());

        // (iv): branch weights <= 1 except the documented families.
        let mut bad = Vec::new();
        for (w, c) in &all {
            let bw = branch_weights(d, w);
            if bw.iter().all(|&f| f <= 1) {
                continue;
            }
            let d4_outlier = d.family == Family::D
                && d.rank == 4
                && bw == vec![2]
                && c.m == 0
                && c.excess == 4;
            let d4k_family = d.family == Family::D
                && d.rank >= 8
                && d.rank % 4 == 0
                && {
                    let mut s = bw.clone();
                    s.sort_unstable();
                    s == vec![1, 2]
                }
                && c.m == 0
                && c.excess == 3;
            if !(d4_outlier || d4k_family) {
                bad.push(w.clone());
            }
        }
        add(
            "branch-weights-bounded",
            bad.is_empty(),
            format!("violations {:?}", bad),
        );

        // (iv-b): multiplicity-1 vertices outside supp(u) have w'(v) = 0,
        // in every decomposition of every admissible weighting.
        let mut ok = true;
        for (w, _c) in &all {
            for dec in decompositions(d, w, false) {
                for v in 0..d.len() {
                    if d.f[v] == 1 && dec.u[v] == 0 && dec.complement[v] != 0 {
                        ok = false;
                    }
                }
            }
        }
        add("complement-vanishes-off-support", ok, String::new());
    }

    // (v): excess-zero classification.
    {
        let zero_excess: Vec<(i64, &Vec<i64>, &Certificate)> = all
            .iter()
            .filter(|(_, c)| c.excess == 0)
            .map(|(w, c)| (c.m, w, c))
            .collect();
        // No m = 1 excess-zero weightings anywhere.
        let no_m1 = zero_excess.iter().all(|(m, _, _)| *m != 1);
        add("no-m1-excess-zero", no_m1, String::new());

        // Nonzero m = 0 excess-zero weightings.
        let nonzero_m0: Vec<&Vec<i64>> = zero_excess
            .iter()
            .filter(|(m, w, _)| *m == 0 && w.iter().any(|&x| x != 0))
            .map(|(_, w, _)| *w)
            .collect();
        let expected_orbits: usize = match d.family {
            Family::D if d.rank % 4 == 1 => 1,
            Family::E if d.rank == 6 => 2,
            _ => 0,
        };
        let orbits = count_orbits(d, &nonzero_m0);
        add(
            "m0-excess-zero-orbits",
            orbits == expected_orbits,
            format!("found {orbits}, expected {expected_orbits}"),
        );

        // m = 2 excess-zero weightings.
        let m2: Vec<(&Vec<i64>, &Certificate)> = zero_excess
            .iter()
            .filter(|(m, _, _)| *m == 2)
            .map(|(_, w, c)| (*w, *c))
            .collect();
        let expects_m2 = matches!(d.family, Family::D if d.rank % 2 == 0)
            || matches!(d.family, Family::E if d.rank == 7 || d.rank == 8)
            || d.family == Family::AStar1;
        if d.family == Family::AStar1 {
            add("m2-excess-zero", m2.is_empty(), "A~*1 m=2 weighting has negative excess".into());
        } else if !expects_m2 {
            add("m2-excess-zero", m2.is_empty(), format!("found {}", m2.len()));
        } else {
            let mut ok = m2.len() == 1;
            let mut note = format!("count {}", m2.len());
            if ok {
                let (w, _c) = m2[0];
                let decs = decompositions(d, w, true);
                ok &= decs.len() == 1;
                if let Some(dec) = decs.first() {
                    let support: Vec<usize> = (0..d.len())
                        .filter(|&v| dec.complement[v] != 0)
                        .collect();
                    let expected_vertex = match d.family {
                        // Middle vertex of the chain of D~2k; for D~4 the
                        // chain is the center itself.
                        Family::D => {
                            if d.rank == 4 {
                                1
                            } else {
                                // chain is b1=1 .. b2=rank-3; middle of it
                                (1 + (d.rank - 3)) / 2
                            }
                        }
                        Family::E if d.rank == 7 => 4, // short-arm vertex s
                        Family::E => 0,                // E~8 short-leaf end c2
                        _ => unreachable!(),
                    };
                    ok &= support == vec![expected_vertex]
                        && dec.complement[expected_vertex] * d.f[expected_vertex] == 2;
                    note = format!("complement support {:?}", support);
                }
            }
            add("m2-excess-zero", ok, note);
        }

        // D~{4k+3}: no nonzero m=0 excess-zero weightings (already covered
        // by the orbit count above, but recorded explicitly).
        if d.family == Family::D && d.rank % 4 == 3 {
            add(
                "d4k3-no-excess-zero",
                nonzero_m0.is_empty(),
                format!("found {}", nonzero_m0.len()),
            );
        }
    }

    ExcessReport { diagram: d.name(), clauses }
}

/// Counts orbits of a set of weightings under the diagram automorphisms.
fn count_orbits(d: &Diagram, ws: &[&Vec<i64>]) -> usize {
    let mut reps: Vec<Vec<i64>> = Vec::new();
    for &w in ws {
        let canon = canonical_under_auts(d, w);
        if !reps.contains(&canon) {
            reps.push(canon);
        }
    }
    reps.len()
}

/// Lexicographically minimal image of a weighting under the automorphism
/// group.
pub fn canonical_under_auts(d: &Diagram, w: &[i64]) -> Vec<i64> {
    d.automorphisms
        .iter()
        .map(|g| {
            // g[i] = image of i, so the permuted weighting has value w[i]
            // at position g[i].
            let mut out = vec![0i64; w.len()];
            for (i, &gi) in g.iter().enumerate() {
                out[gi] = w[i];
            }
            out
        })
        .min()
        .expect("automorphism group contains the identity")
}

impl Diagram {
    fn degree_three_count(&self) -> usize {
        (0..self.len()).filter(|&v| self.degree(v) >= 3).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{build, Family};

    #[test]
    fn frozen_admissible_counts() {
        // Raw counts for m = 0, 1, 2 at bound -6, frozen from a
        // brute-force enumeration with no pruning.
        let cases: Vec<(Family, usize, [usize; 3])> = vec![
            (Family::AStar1, 1, [1, 2, 1]),
            (Family::AStar2, 2, [1, 0, 0]),
            (Family::A, 1, [1, 0, 0]),
            (Family::A, 5, [1, 0, 0]),
            (Family::A, 12, [1, 0, 0]),
            (Family::D, 4, [5, 4, 1]),
            (Family::D, 5, [3, 0, 0]),
            (Family::D, 6, [3, 4, 1]),
            (Family::D, 7, [3, 0, 0]),
            (Family::D, 8, [8, 4, 1]),
            (Family::D, 9, [6, 0, 0]),
            (Family::D, 10, [6, 4, 1]),
            (Family::D, 11, [6, 0, 0]),
            (Family::D, 12, [13, 4, 1]),
            (Family::E, 6, [2, 0, 0]),
            (Family::E, 7, [2, 2, 1]),
            (Family::E, 8, [5, 1, 1]),
        ];
        for (fam, rank, expected) in cases {
            let d = build(fam, rank).unwrap();
            assert_eq!(admissible_counts(&d, -6), expected, "{}", d.name());
        }
    }

    #[test]
    fn d4_admissible_set() {
        let d = build(Family::D, 4).unwrap();
        let m0 = enumerate_admissible(&d, 0, -6);
        // The f = 2 outlier plus the S4-orbit of (-1,-1,1,1,1); the zero
        // weighting fails condition 4 (center has four weight-0
        // neighbours).
        assert!(m0.iter().any(|(w, _)| w == &vec![1, -2, 1, 1, 1]));
        assert!(!m0.iter().any(|(w, _)| w.iter().all(|&x| x == 0)));
        let outlier = m0.iter().find(|(w, _)| w == &vec![1, -2, 1, 1, 1]).unwrap();
        assert_eq!(branch_weights(&d, &outlier.0), vec![2]);
        assert_eq!(outlier.1.excess, 4);
    }

    #[test]
    fn astar1_certificates() {
        let d = build(Family::AStar1, 1).unwrap();
        let c = check(&d, &[1, 0]);
        assert!(c.semi_admissible && !c.admissible);
        assert_eq!(c.m, 1);
        // The representing element is forced to zero.
        assert_eq!(c.decomposition.as_ref().unwrap().u, vec![0, 0]);
        assert_eq!(c.decomposition.as_ref().unwrap().complement, vec![1, 0]);
        let c2 = check(&d, &[1, 1]);
        assert!(c2.semi_admissible && c2.m == 2);
        let z = check(&d, &[0, 0]);
        assert!(z.admissible);
    }

    #[test]
    fn d8_branch_weight_two_family_is_admissible() {
        let d = build(Family::D, 8).unwrap();
        let w = vec![1, -2, 1, -1, 1, -1, 1, 1, 1];
        let c = check(&d, &w);
        assert!(c.admissible, "{:?}", c.conditions);
        assert_eq!(c.m, 0);
        assert_eq!(c.excess, 3);
        let mut bw = branch_weights(&d, &w);
        bw.sort_unstable();
        assert_eq!(bw, vec![1, 2]);
    }

    #[test]
    fn excess_reports_pass_up_to_rank_12() {
        let mut diagrams = vec![
            build(Family::AStar1, 1).unwrap(),
            build(Family::AStar2, 2).unwrap(),
            build(Family::E, 6).unwrap(),
            build(Family::E, 7).unwrap(),
            build(Family::E, 8).unwrap(),
        ];
        for n in 1..=12 {
            diagrams.push(build(Family::A, n).unwrap());
        }
        for n in 4..=12 {
            diagrams.push(build(Family::D, n).unwrap());
        }
        for d in diagrams {
            let report = verify_excess_results(&d, -6);
            assert!(
                report.all_passed(),
                "{}: {:?}",
                d.name(),
                report
                    .clauses
                    .iter()
                    .filter(|c| !c.passed)
                    .collect::<Vec<_>>()
            );
        }
    }
}
