//! Genus-one fibrations through the flip graph.
//!
//! A surface model records which extraneous `(-2)`-classes exist beside
//! the `T(4,4,4)` configuration classes:
//!
//! * `T8` — no configuration flips at all (one quasi-elliptic fibration,
//!   no elliptic ones);
//! * `T7` — no flips; two or three quasi-elliptic fibrations depending on
//!   whether the second fibre of the pencil is double or simple;
//! * `T6` with Mordell–Weil rank 2 — every flip is effective; the
//!   extraneous set is empty;
//! * `T6` with rank 1 — the extraneous classes are `e ± f_1`; a flip is
//!   effective exactly when its result is 1-realisable;
//! * `T6` with rank 0 — the extraneous classes are `e - f_1, e - f_2,
//!   e - f_3`; no flip is effective.
//!
//! The flip graph is the ball of configurations reachable from the
//! standard one by effective flips. Quasi-elliptic fibrations of a `T6`
//! surface correspond to the `E~7`-subtree cycles `e'_i` of the
//! configurations in the graph; each such class is shared by at most two
//! configurations (the two ends of the flip edge in that arm).

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::Error;
use crate::linalg::Q;
use crate::q444::{self, TConfiguration, Tower};

/// The surface models whose genus-one fibrations the flip graph encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SurfaceModel {
    /// `T(2,3,8)`-type surface.
    T8,
    /// `T(2,4,6)`-type surface; the flag records whether the second fibre
    /// of its quasi-elliptic pencil is simple (three fibrations) or double
    /// (two).
    T7 { second_fibre_simple: bool },
    /// `T(3,3,3)`-type surface with the given Mordell–Weil rank (0, 1, 2).
    T6 { mw_rank: u8 },
}

impl SurfaceModel {
    pub fn label(&self) -> String {
        match self {
            SurfaceModel::T8 => "T8".into(),
            SurfaceModel::T7 { second_fibre_simple } => format!(
                "T7({})",
                if *second_fibre_simple { "simple" } else { "double" }
            ),
            SurfaceModel::T6 { mw_rank } => format!("T6(rank {mw_rank})"),
        }
    }
}

/// The extraneous `(-2)`-classes of a `T6` surface model, as ambient
/// vectors. Empty for rank 2 and for the `T7`/`T8` models.
pub fn extraneous_classes(tower: &Tower, model: SurfaceModel) -> Vec<Vec<Q>> {
    let e = &tower.named.e;
    let comb = |i: usize, sign: i64| -> Vec<Q> {
        e.iter()
            .zip(&tower.named.f[i])
            .map(|(a, b)| a + crate::linalg::q(sign) * b)
            .collect()
    };
    match model {
        SurfaceModel::T6 { mw_rank: 1 } => vec![comb(0, 1), comb(0, -1)],
        SurfaceModel::T6 { mw_rank: 0 } => vec![comb(0, -1), comb(1, -1), comb(2, -1)],
        _ => vec![],
    }
}

/// Applies a flip if it is effective on the given surface model.
///
/// Errors for `T7`/`T8` models (they carry no `T(4,4,4)` configuration);
/// returns `None` when the flip is not effective.
pub fn effective_flip(
    tower: &Tower,
    model: SurfaceModel,
    t: &TConfiguration,
    arm: usize,
) -> Result<Option<TConfiguration>, Error> {
    let rank = match model {
        SurfaceModel::T6 { mw_rank } => mw_rank,
        _ => {
            return Err(Error::BadInput(format!(
                "{} has no T(4,4,4) configuration to flip",
                model.label()
            )))
        }
    };
    match rank {
        2 => Ok(Some(q444::flip(t, arm))),
        1 => {
            let flipped = q444::flip(t, arm);
            if q444::one_realisable_arm(tower, &flipped).is_some() {
                Ok(Some(flipped))
            } else {
                Ok(None)
            }
        }
        0 => Ok(None),
        _ => Err(Error::BadInput("Mordell–Weil rank must be 0, 1, or 2".into())),
    }
}

/// A node of the flip graph.
#[derive(Debug, Clone)]
pub struct FlipNode {
    pub id: usize,
    /// Word distance from the standard configuration.
    pub depth: usize,
    pub config: TConfiguration,
}

/// The flip graph: ball of effective flips around the standard
/// configuration.
#[derive(Debug, Clone)]
pub struct FlipGraph {
    pub model: SurfaceModel,
    pub radius: usize,
    pub nodes: Vec<FlipNode>,
    /// Edges `(from, arm, to)` with `from < to`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl FlipGraph {
    /// GraphViz DOT rendering.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph flips {{");
        let _ = writeln!(s, "  label=\"{} radius {}\";", self.model.label(), self.radius);
        for node in &self.nodes {
            let _ = writeln!(
                s,
                "  n{} [label=\"{} (d={})\"];",
                node.id, node.id, node.depth
            );
        }
        for (a, arm, b) in &self.edges {
            let _ = writeln!(s, "  n{a} -- n{b} [label=\"{arm}\"];");
        }
        s.push_str("}\n");
        s
    }
}

/// Builds the flip graph by breadth-first search up to the given radius.
///
/// For `T7`/`T8` the graph is a single node with no edges (there is
/// nothing to flip); for `T6` rank 0 likewise (no flip is effective).
pub fn build_flip_graph(
    tower: &Tower,
    model: SurfaceModel,
    radius: usize,
) -> Result<FlipGraph, Error> {
    let mut nodes = vec![FlipNode { id: 0, depth: 0, config: tower.standard.clone() }];
    let mut edges = Vec::new();
    let flippable = matches!(model, SurfaceModel::T6 { .. });
    if flippable {
        let mut index: BTreeMap<Vec<Vec<Q>>, usize> = BTreeMap::new();
        index.insert(tower.standard.vecs.clone(), 0);
        let mut frontier = vec![0usize];
        while let Some(&id) = frontier.first() {
            frontier.remove(0);
            let depth = nodes[id].depth;
            if depth >= radius {
                continue;
            }
            for arm in 1..=3 {
                let config = nodes[id].config.clone();
                if let Some(next) = effective_flip(tower, model, &config, arm)? {
                    let key = next.vecs.clone();
                    let nid = match index.get(&key) {
                        Some(&nid) => nid,
                        None => {
                            let nid = nodes.len();
                            nodes.push(FlipNode { id: nid, depth: depth + 1, config: next });
                            index.insert(key, nid);
                            frontier.push(nid);
                            nid
                        }
                    };
                    let (a, b) = (id.min(nid), id.max(nid));
                    if !edges.contains(&(a, arm, b)) {
                        edges.push((a, arm, b));
                    }
                }
            }
        }
    }
    Ok(FlipGraph { model, radius, nodes, edges })
}

/// Independent cross-check of the rank-2 flip graph: enumerate reduced
/// words in the three flip isometries (no immediate repetitions, since
/// each is an involution), apply them to the standard configuration, and
/// count the distinct configurations within the radius.
pub fn config_count_by_words(tower: &Tower, radius: usize) -> usize {
    let mut seen: BTreeMap<Vec<Vec<Q>>, usize> = BTreeMap::new();
    seen.insert(tower.standard.vecs.clone(), 0);
    let mut frontier: Vec<(Vec<usize>, TConfiguration)> =
        vec![(vec![], tower.standard.clone())];
    for depth in 1..=radius {
        let mut next = Vec::new();
        for (word, config) in &frontier {
            for arm in 1..=3 {
                if word.last() == Some(&arm) {
                    continue;
                }
                let m = q444::sigma(tower, arm);
                let image = q444::apply_to_config(&m, config);
                let key = image.vecs.clone();
                if !seen.contains_key(&key) {
                    seen.insert(key, depth);
                    let mut w = word.clone();
                    w.push(arm);
                    next.push((w, image));
                }
            }
        }
        frontier = next;
    }
    seen.len()
}

/// One quasi-elliptic fibration class in a census.
#[derive(Debug, Clone, Serialize)]
pub struct QeClass {
    /// Rendering of the class (the `E~7`-subtree cycle for `T6` models,
    /// a fibre label for `T7`/`T8`).
    pub class: String,
    /// Flip-graph nodes whose configuration carries the class.
    pub member_configs: Vec<usize>,
    /// Whether every member lies strictly inside the ball (membership
    /// counts are then final).
    pub complete: bool,
}

/// Census of genus-one fibrations visible in the flip-graph ball.
#[derive(Debug, Clone, Serialize)]
pub struct Census {
    pub surface: String,
    pub radius: usize,
    pub elliptic_count: usize,
    pub quasi_elliptic_classes: Vec<QeClass>,
    pub flip_graph: FlipGraphSummary,
}

/// Node/edge counts of the flip graph.
#[derive(Debug, Clone, Serialize)]
pub struct FlipGraphSummary {
    pub nodes: usize,
    pub edges: usize,
}

/// Builds the census for a surface model.
///
/// * `T8`: one quasi-elliptic fibration, no elliptic ones.
/// * `T7`: no elliptic fibrations; three quasi-elliptic ones when the
///   second fibre is simple, two when it is double.
/// * `T6`: one elliptic fibration; the quasi-elliptic ones are the
///   distinct `E~7`-subtree cycles of the configurations in the ball.
///   Each class is carried by one or two configurations (two when the
///   flip joining them in that arm is effective).
pub fn fibration_census(
    tower: &Tower,
    model: SurfaceModel,
    radius: usize,
) -> Result<Census, Error> {
    let graph = build_flip_graph(tower, model, radius)?;
    let summary = FlipGraphSummary { nodes: graph.nodes.len(), edges: graph.edges.len() };
    let (elliptic_count, classes) = match model {
        SurfaceModel::T8 => (
            0,
            vec![QeClass {
                class: "the unique quasi-elliptic pencil".into(),
                member_configs: vec![],
                complete: true,
            }],
        ),
        SurfaceModel::T7 { second_fibre_simple } => {
            let n = if second_fibre_simple { 3 } else { 2 };
            (
                0,
                (0..n)
                    .map(|k| QeClass {
                        class: format!("quasi-elliptic pencil {}", k + 1),
                        member_configs: vec![],
                        complete: true,
                    })
                    .collect(),
            )
        }
        SurfaceModel::T6 { .. } => {
            let mut by_class: BTreeMap<Vec<Q>, Vec<usize>> = BTreeMap::new();
            for node in &graph.nodes {
                for arm in 1..=3 {
                    let cycle = q444::e7_cycle(&node.config, arm);
                    by_class.entry(cycle).or_default().push(node.id);
                }
            }
            let classes = by_class
                .into_iter()
                .map(|(cycle, mut members)| {
                    members.sort_unstable();
                    members.dedup();
                    let complete =
                        members.iter().all(|&id| graph.nodes[id].depth < radius);
                    QeClass {
                        class: q444::render_vector(&cycle),
                        member_configs: members,
                        complete,
                    }
                })
                .collect();
            (1, classes)
        }
    };
    Ok(Census {
        surface: model.label(),
        radius,
        elliptic_count,
        quasi_elliptic_classes: classes,
        flip_graph: summary,
    })
}

/// One `(-2)`-curve class (an end vector of some configuration in the
/// ball) with the configurations carrying it.
#[derive(Debug, Clone, Serialize)]
pub struct CurveClass {
    pub class: String,
    pub member_configs: Vec<usize>,
    pub complete: bool,
}

/// Inventory of the end-vector `(-2)`-classes over the flip-graph ball.
/// A class carried only by interior configurations appears in at most six
/// configurations (two per arm).
pub fn minus_two_curve_inventory(
    tower: &Tower,
    model: SurfaceModel,
    radius: usize,
) -> Result<Vec<CurveClass>, Error> {
    let graph = build_flip_graph(tower, model, radius)?;
    let mut by_class: BTreeMap<Vec<Q>, Vec<usize>> = BTreeMap::new();
    for node in &graph.nodes {
        for arm in 1..=3 {
            by_class
                .entry(node.config.end_vec(arm).clone())
                .or_default()
                .push(node.id);
        }
    }
    Ok(by_class
        .into_iter()
        .map(|(v, mut members)| {
            members.sort_unstable();
            members.dedup();
            let complete = members.iter().all(|&id| graph.nodes[id].depth < radius);
            CurveClass {
                class: q444::render_vector(&v),
                member_configs: members,
                complete,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower() -> Tower {
        q444::build_tower()
    }

    #[test]
    fn rank0_graph_is_a_point_with_three_classes() {
        let t = tower();
        let model = SurfaceModel::T6 { mw_rank: 0 };
        let g = build_flip_graph(&t, model, 5).unwrap();
        assert_eq!(g.nodes.len(), 1);
        assert!(g.edges.is_empty());
        let census = fibration_census(&t, model, 5).unwrap();
        assert_eq!(census.elliptic_count, 1);
        assert_eq!(census.quasi_elliptic_classes.len(), 3);
        assert_eq!(extraneous_classes(&t, model).len(), 3);
    }

    #[test]
    fn rank1_graph_is_a_line() {
        let t = tower();
        let model = SurfaceModel::T6 { mw_rank: 1 };
        for radius in [2usize, 4] {
            let g = build_flip_graph(&t, model, radius).unwrap();
            assert_eq!(g.nodes.len(), 2 * radius + 1, "radius {radius}");
            assert_eq!(g.edges.len(), 2 * radius);
            // Interior nodes have degree 2.
            for node in &g.nodes {
                let deg = g
                    .edges
                    .iter()
                    .filter(|(a, _, b)| *a == node.id || *b == node.id)
                    .count();
                assert!(deg <= 2);
                if node.depth < radius {
                    assert_eq!(deg, 2);
                }
            }
        }
        assert_eq!(extraneous_classes(&t, model).len(), 2);
    }

    #[test]
    fn one_flip_transitions() {
        // From a 1-realisable configuration, the flip in the realisable
        // arm is not effective; the other two are, and the results are
        // 1-realisable in the remaining arm.
        let t = tower();
        let model = SurfaceModel::T6 { mw_rank: 1 };
        let start = t.standard.clone();
        let arm0 = q444::one_realisable_arm(&t, &start).unwrap();
        assert_eq!(arm0, 1);
        assert!(effective_flip(&t, model, &start, arm0).unwrap().is_none());
        for arm in 1..=3 {
            if arm == arm0 {
                continue;
            }
            let next = effective_flip(&t, model, &start, arm).unwrap().unwrap();
            let next_arm = q444::one_realisable_arm(&t, &next).unwrap();
            assert_ne!(next_arm, arm);
            assert_ne!(next_arm, arm0);
        }
    }

    #[test]
    fn rank2_graph_matches_word_enumeration() {
        let t = tower();
        let model = SurfaceModel::T6 { mw_rank: 2 };
        for radius in [2usize, 3, 4] {
            let g = build_flip_graph(&t, model, radius).unwrap();
            let by_words = config_count_by_words(&t, radius);
            assert_eq!(g.nodes.len(), by_words, "radius {radius}");
        }
    }

    #[test]
    fn t6_census_membership_bounds() {
        let t = tower();
        for rank in [0u8, 1, 2] {
            let census = fibration_census(&t, SurfaceModel::T6 { mw_rank: rank }, 4).unwrap();
            for class in &census.quasi_elliptic_classes {
                assert!(!class.member_configs.is_empty());
                if class.complete {
                    assert!(
                        class.member_configs.len() <= 2,
                        "rank {rank}: {:?}",
                        class
                    );
                }
            }
        }
    }

    #[test]
    fn t7_t8_census() {
        let t = tower();
        let c8 = fibration_census(&t, SurfaceModel::T8, 5).unwrap();
        assert_eq!(c8.elliptic_count, 0);
        assert_eq!(c8.quasi_elliptic_classes.len(), 1);
        let c7s =
            fibration_census(&t, SurfaceModel::T7 { second_fibre_simple: true }, 5).unwrap();
        assert_eq!(c7s.quasi_elliptic_classes.len(), 3);
        let c7d =
            fibration_census(&t, SurfaceModel::T7 { second_fibre_simple: false }, 5).unwrap();
        assert_eq!(c7d.quasi_elliptic_classes.len(), 2);
        assert!(effective_flip(&t, SurfaceModel::T8, &t.standard, 1).is_err());
    }

    #[test]
    fn inventory_grows_for_small_rank() {
        let t = tower();
        for rank in [1u8, 2] {
            let small = minus_two_curve_inventory(&t, SurfaceModel::T6 { mw_rank: rank }, 2)
                .unwrap()
                .len();
            let large = minus_two_curve_inventory(&t, SurfaceModel::T6 { mw_rank: rank }, 4)
                .unwrap()
                .len();
            assert!(large > small, "rank {rank}: {small} vs {large}");
        }
        // Every class carried only by interior configurations appears in
        // at most six configurations.
        let inv = minus_two_curve_inventory(&t, SurfaceModel::T6 { mw_rank: 2 }, 4).unwrap();
        for class in inv.iter().filter(|c| c.complete) {
            assert!(class.member_configs.len() <= 6);
        }
    }
}
