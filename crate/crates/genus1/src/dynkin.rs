//! Extended (affine) Dynkin diagrams of types that occur as dual graphs of
//! degenerate genus-one fibres, together with the multiplicity data carried
//! by each: the Kodaira–Néron cycle, the excess cycle, and the full
//! automorphism group.
//!
//! A diagram is stored with a fixed, documented vertex order (the order in
//! which rows of the classification tables are displayed):
//!
//! * `A~*1` — two vertices joined by a single edge of multiplicity 2
//!   (pairing 2); vertex order `(v0, v1)`.
//! * `A~n` (n ≥ 1) — a cycle `v0, ..., vn`; for n = 1 the two vertices are
//!   joined by two distinct edges of multiplicity 1.
//! * `A~*2` — combinatorially the `A~2` cycle; kept as a separate family
//!   tag because it classifies a different fibre.
//! * `D~4` — star `(L1, C, L2, L3, L4)` with center `C`.
//! * `D~n` (n ≥ 5) — `(L1, b1, m1, ..., m_{n-5}, b2, L2, L3, L4)`:
//!   leaves `L1, L4` at branch vertex `b1`, chain `b1..b2`, leaves
//!   `L2, L3` at `b2`.
//! * `E~6` — `(out1, in1, C, in2, in3, out2, out3)`.
//! * `E~7` — `(l1, q1, p1, C, s, p2, q2, l2)` with the short arm `s`
//!   attached at the center `C`.
//! * `E~8` — `(c2, c1, C, b, d1, d2, d3, d4, d5)`: short arm `c2, c1`,
//!   center `C`, leaf `b` of multiplicity 3, long arm `d1..d5`.
//!
//! The *attached vertex* is a fixed choice of multiplicity-1 vertex of the
//! Kodaira–Néron cycle (the component met by a section); it is the vertex
//! whose row/column is dropped when solving for representing elements in
//! the root lattice.

use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;

/// The family of an extended Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    /// Two components meeting at one point with multiplicity 2.
    AStar1,
    /// Three components through a single common point (the `A~2` graph).
    AStar2,
    /// Cycle of n+1 components.
    A,
    /// Branched diagram `D~n`, n ≥ 4.
    D,
    /// Branched diagram `E~n`, n ∈ {6, 7, 8}.
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::AStar1 => write!(f, "A~*1"),
            Family::AStar2 => write!(f, "A~*2"),
            Family::A => write!(f, "A~"),
            Family::D => write!(f, "D~"),
            Family::E => write!(f, "E~"),
        }
    }
}

/// An edge of the diagram: endpoints `(a, b)` and pairing multiplicity
/// (`2` only for the `A~*1` edge; `1` otherwise).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub pairing: i64,
}

/// An extended Dynkin diagram with all derived structure precomputed.
#[derive(Debug, Clone, Serialize)]
pub struct Diagram {
    pub family: Family,
    /// Index: `A~n` has rank n (n+1 vertices); `A~*1` rank 1; `A~*2` rank 2;
    /// `D~n`/`E~n` rank n (n+1 vertices).
    pub rank: usize,
    /// Display names of the vertices, in canonical order.
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    /// Index of the attached (multiplicity-1) vertex.
    pub attached: usize,
    /// Kodaira–Néron cycle multiplicities `F`.
    pub f: Vec<i64>,
    /// Vertex part `V` of the excess cycle: zero for cycles and `E~6`;
    /// twice the degree-≥3 vertex for `D~4`, `E~7`, `E~8`; the sum of the
    /// two degree-3 vertices for `D~n`, n ≥ 5.
    pub excess_vertex: Vec<i64>,
    /// Edge part of the excess cycle: multiplicity of each edge, solving
    /// `sum of multiplicities at v = n * F(v) + V(v)` for every vertex `v`.
    pub excess_edge: Vec<i64>,
    /// The coefficient `n` in the excess identity: 2 for the `A~` families,
    /// 1 otherwise.
    pub n_coeff: i64,
    /// Symmetric pairing matrix (`-2` on the diagonal, edge multiplicities
    /// off it).
    pub gram: Vec<Vec<i64>>,
    /// Full automorphism group, each element a permutation `g` with
    /// `g[i]` = image of vertex `i`.
    pub automorphisms: Vec<Vec<usize>>,
    /// Neighbour lists (an `A~1` double edge contributes its neighbour once
    /// per edge).
    pub adjacency: Vec<Vec<usize>>,
}

impl Diagram {
    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// True when the diagram has no vertices (never, for constructed ones).
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Pairing `(x, y)` of two integer vectors in the vertex basis.
    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, row) in self.gram.iter().enumerate() {
            if x[i] == 0 {
                continue;
            }
            for (j, &g) in row.iter().enumerate() {
                s += x[i] * g * y[j];
            }
        }
        s
    }

    /// Degree of a vertex, counting edge multiplicities and double edges.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Canonical display name, e.g. `D~6` or `A~*1`.
    pub fn name(&self) -> String {
        match self.family {
            Family::AStar1 => "A~*1".into(),
            Family::AStar2 => "A~*2".into(),
            Family::A => format!("A~{}", self.rank),
            Family::D => format!("D~{}", self.rank),
            Family::E => format!("E~{}", self.rank),
        }
    }
}

/// Builds the diagram of the given family and rank.
///
/// Ranks: `A~*1` requires rank 1, `A~*2` rank 2, `A~n` any n ≥ 1,
/// `D~n` n ≥ 4, `E~n` n ∈ {6, 7, 8}.
pub fn build(family: Family, rank: usize) -> Result<Diagram, Error> {
    match family {
        Family::AStar1 => {
            if rank != 1 {
                return Err(Error::BadDiagram("A~*1 has rank 1".into()));
            }
            finish(
                family,
                1,
                vec!["v0".into(), "v1".into()],
                vec![Edge { a: 0, b: 1, pairing: 2 }],
                0,
                vec![1, 1],
                vec![0, 0],
                2,
                vec![vec![1, 0]],
            )
        }
        Family::AStar2 | Family::A => {
            let n = if family == Family::AStar2 { 2 } else { rank };
            if family == Family::AStar2 && rank != 2 {
                return Err(Error::BadDiagram("A~*2 has rank 2".into()));
            }
            if n < 1 {
                return Err(Error::BadDiagram("A~n needs n >= 1".into()));
            }
            let verts: Vec<String> = (0..=n).map(|i| format!("v{i}")).collect();
            let edges: Vec<Edge> = (0..=n)
                .map(|i| Edge { a: i, b: (i + 1) % (n + 1), pairing: 1 })
                .collect();
            // Dihedral group: rotation and reflection.
            let rot: Vec<usize> = (0..=n).map(|i| (i + 1) % (n + 1)).collect();
            let refl: Vec<usize> = (0..=n).map(|i| (n + 1 - i) % (n + 1)).collect();
            finish(
                family,
                n,
                verts,
                edges,
                0,
                vec![1; n + 1],
                vec![0; n + 1],
                2,
                vec![rot, refl],
            )
        }
        Family::D => {
            if rank < 4 {
                return Err(Error::BadDiagram("D~n needs n >= 4".into()));
            }
            if rank == 4 {
                // (L1, C, L2, L3, L4)
                let verts = ["L1", "C", "L2", "L3", "L4"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect();
                let edges = [0usize, 2, 3, 4]
                    .iter()
                    .map(|&l| Edge { a: 1, b: l, pairing: 1 })
                    .collect();
                finish(
                    Family::D,
                    4,
                    verts,
                    edges,
                    0,
                    vec![1, 2, 1, 1, 1],
                    vec![0, 2, 0, 0, 0],
                    1,
                    // Generators of S4 on the leaves {L1, L2, L3, L4}.
                    vec![vec![2, 1, 0, 3, 4], vec![2, 1, 3, 4, 0]],
                )
            } else {
                // (L1, b1, m1, ..., m_{n-5}, b2, L2, L3, L4)
                let n = rank;
                let mids = n - 5;
                let mut verts: Vec<String> = vec!["L1".into(), "b1".into()];
                for i in 1..=mids {
                    verts.push(format!("m{i}"));
                }
                verts.extend(["b2".into(), "L2".into(), "L3".into(), "L4".into()]);
                let b1 = 1;
                let b2 = 2 + mids;
                let (l1, l2, l3, l4) = (0, b2 + 1, b2 + 2, b2 + 3);
                let mut edges = vec![Edge { a: l1, b: b1, pairing: 1 }];
                for i in b1..b2 {
                    edges.push(Edge { a: i, b: i + 1, pairing: 1 });
                }
                edges.push(Edge { a: b2, b: l2, pairing: 1 });
                edges.push(Edge { a: b2, b: l3, pairing: 1 });
                edges.push(Edge { a: b1, b: l4, pairing: 1 });
                let mut f = vec![2i64; n + 1];
                for &l in &[l1, l2, l3, l4] {
                    f[l] = 1;
                }
                let mut vcyc = vec![0i64; n + 1];
                vcyc[b1] = 1;
                vcyc[b2] = 1;
                // Automorphism generators: swap the two leaves at each
                // branch vertex; reverse the chain.
                let id: Vec<usize> = (0..=n).collect();
                let mut s14 = id.clone();
                s14.swap(l1, l4);
                let mut s23 = id.clone();
                s23.swap(l2, l3);
                let mut rev = id.clone();
                rev.swap(l1, l2);
                rev.swap(l4, l3);
                for k in 0..(b2 - b1 + 1) {
                    rev[b1 + k] = b2 - k;
                }
                finish(Family::D, n, verts, edges, 0, f, vcyc, 1, vec![s14, s23, rev])
            }
        }
        Family::E => match rank {
            6 => {
                let verts = ["out1", "in1", "C", "in2", "in3", "out2", "out3"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect();
                let edges = [(0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (4, 6)]
                    .iter()
                    .map(|&(a, b)| Edge { a, b, pairing: 1 })
                    .collect();
                finish(
                    Family::E,
                    6,
                    verts,
                    edges,
                    0,
                    vec![1, 2, 3, 2, 2, 1, 1],
                    vec![0; 7],
                    1,
                    // Swap arms 2,3; rotate the three arms.
                    vec![vec![0, 1, 2, 4, 3, 6, 5], vec![5, 3, 2, 4, 1, 6, 0]],
                )
            }
            7 => {
                let verts = ["l1", "q1", "p1", "C", "s", "p2", "q2", "l2"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect();
                let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (6, 7)]
                    .iter()
                    .map(|&(a, b)| Edge { a, b, pairing: 1 })
                    .collect();
                let mut vcyc = vec![0i64; 8];
                vcyc[3] = 2;
                finish(
                    Family::E,
                    7,
                    verts,
                    edges,
                    0,
                    vec![1, 2, 3, 4, 2, 3, 2, 1],
                    vcyc,
                    1,
                    vec![vec![7, 6, 5, 3, 4, 2, 1, 0]],
                )
            }
            8 => {
                let verts = ["c2", "c1", "C", "b", "d1", "d2", "d3", "d4", "d5"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect();
                let edges = [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
                    .iter()
                    .map(|&(a, b)| Edge { a, b, pairing: 1 })
                    .collect();
                let mut vcyc = vec![0i64; 9];
                vcyc[2] = 2;
                finish(
                    Family::E,
                    8,
                    verts,
                    edges,
                    8,
                    vec![2, 4, 6, 3, 5, 4, 3, 2, 1],
                    vcyc,
                    1,
                    vec![],
                )
            }
            _ => Err(Error::BadDiagram("E~n needs n in {6,7,8}".into())),
        },
    }
}

/// Parses a diagram name such as `D~6`, `A~3`, `A~*1`, `E~8`.
pub fn parse_name(name: &str) -> Result<Diagram, Error> {
    let bad = || Error::BadDiagram(format!("unrecognized diagram name: {name}"));
    if let Some(rest) = name.strip_prefix("A~*") {
        let r: usize = rest.parse().map_err(|_| bad())?;
        return match r {
            1 => build(Family::AStar1, 1),
            2 => build(Family::AStar2, 2),
            _ => Err(bad()),
        };
    }
    if let Some(rest) = name.strip_prefix("A~") {
        return build(Family::A, rest.parse().map_err(|_| bad())?);
    }
    if let Some(rest) = name.strip_prefix("D~") {
        return build(Family::D, rest.parse().map_err(|_| bad())?);
    }
    if let Some(rest) = name.strip_prefix("E~") {
        return build(Family::E, rest.parse().map_err(|_| bad())?);
    }
    Err(bad())
}

#[allow(clippy::too_many_arguments)]
fn finish(
    family: Family,
    rank: usize,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    attached: usize,
    f: Vec<i64>,
    excess_vertex: Vec<i64>,
    n_coeff: i64,
    aut_gens: Vec<Vec<usize>>,
) -> Result<Diagram, Error> {
    let n = vertices.len();
    let mut gram = vec![vec![0i64; n]; n];
    let mut adjacency = vec![Vec::new(); n];
    for (i, row) in gram.iter_mut().enumerate() {
        row[i] = -2;
    }
    for e in &edges {
        gram[e.a][e.b] += e.pairing;
        gram[e.b][e.a] += e.pairing;
        adjacency[e.a].push(e.b);
        adjacency[e.b].push(e.a);
    }
    let excess_edge = solve_excess_edges(n, &edges, &f, &excess_vertex, n_coeff)?;
    let automorphisms = close_group(n, &aut_gens);
    let d = Diagram {
        family,
        rank,
        vertices,
        edges,
        attached,
        f,
        excess_vertex,
        excess_edge,
        n_coeff,
        gram,
        automorphisms,
        adjacency,
    };
    debug_assert!(d.f[d.attached] == 1);
    Ok(d)
}

/// Solves for the edge multiplicities of the excess cycle: at every vertex
/// `v`, the multiplicities of the edges through `v` must sum to
/// `n * F(v) + V(v)`.
fn solve_excess_edges(
    n: usize,
    edges: &[Edge],
    f: &[i64],
    vcyc: &[i64],
    n_coeff: i64,
) -> Result<Vec<i64>, Error> {
    let m = edges.len();
    let mut mult = vec![None::<i64>; m];
    let mut target: Vec<i64> = (0..n).map(|v| n_coeff * f[v] + vcyc[v]).collect();
    if m == n {
        // Cycle graphs: every edge has multiplicity 1 (targets are all 2
        // and each vertex lies on two edges; for A~*1 the single pairing-2
        // edge carries multiplicity 2).
        let mut out = vec![0i64; m];
        for (k, e) in edges.iter().enumerate() {
            out[k] = if e.pairing == 2 { 2 } else { 1 };
        }
        return Ok(out);
    }
    // Trees: repeatedly satisfy a vertex with exactly one undetermined edge.
    let mut remaining: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, e) in edges.iter().enumerate() {
        remaining[e.a].push(k);
        remaining[e.b].push(k);
    }
    loop {
        let mut progressed = false;
        for v in 0..n {
            let undecided: Vec<usize> = remaining[v]
                .iter()
                .copied()
                .filter(|&k| mult[k].is_none())
                .collect();
            if undecided.len() == 1 {
                let k = undecided[0];
                let val = target[v];
                mult[k] = Some(val);
                let e = edges[k];
                target[e.a] -= val;
                target[e.b] -= val;
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }
    if mult.iter().any(|x| x.is_none()) || target.iter().any(|&t| t != 0) {
        return Err(Error::BadDiagram("excess cycle system not solvable".into()));
    }
    Ok(mult.into_iter().map(|x| x.unwrap()).collect())
}

/// Closure of a set of permutation generators (includes the identity).
pub fn close_group(n: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for h in gens {
            let gh: Vec<usize> = (0..n).map(|i| h[g[i]]).collect();
            if seen.insert(gh.clone()) {
                frontier.push(gh);
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all() -> Vec<Diagram> {
        let mut v = vec![
            build(Family::AStar1, 1).unwrap(),
            build(Family::AStar2, 2).unwrap(),
            build(Family::E, 6).unwrap(),
            build(Family::E, 7).unwrap(),
            build(Family::E, 8).unwrap(),
        ];
        for n in 1..=12 {
            v.push(build(Family::A, n).unwrap());
        }
        for n in 4..=12 {
            v.push(build(Family::D, n).unwrap());
        }
        v
    }

    #[test]
    fn kodaira_neron_cycle_is_isotropic_kernel() {
        // F pairs to zero with every vertex (it spans the radical).
        for d in all() {
            for v in 0..d.len() {
                let mut ev = vec![0i64; d.len()];
                ev[v] = 1;
                assert_eq!(d.pair(&d.f, &ev), 0, "{} vertex {}", d.name(), v);
            }
            assert_eq!(d.pair(&d.f, &d.f), 0);
            assert_eq!(d.f[d.attached], 1);
        }
    }

    #[test]
    fn excess_cycle_balances() {
        for d in all() {
            for v in 0..d.len() {
                let mut s = 0;
                for (k, e) in d.edges.iter().enumerate() {
                    if e.a == v || e.b == v {
                        s += d.excess_edge[k];
                    }
                }
                assert_eq!(
                    s,
                    d.n_coeff * d.f[v] + d.excess_vertex[v],
                    "{} vertex {}",
                    d.name(),
                    v
                );
            }
        }
    }

    #[test]
    fn excess_edge_values_match_known_cases() {
        let e7 = build(Family::E, 7).unwrap();
        // edges: (l1,q1)(q1,p1)(p1,C)(C,s)(C,p2)(p2,q2)(q2,l2)
        assert_eq!(e7.excess_edge, vec![1, 1, 2, 2, 2, 1, 1]);
        let e8 = build(Family::E, 8).unwrap();
        // edges: (c2,c1)(c1,C)(C,b)(C,d1)(d1,d2)(d2,d3)(d3,d4)(d4,d5)
        assert_eq!(e8.excess_edge, vec![2, 2, 3, 3, 2, 2, 1, 1]);
        let d6 = build(Family::D, 6).unwrap();
        assert!(d6.excess_edge.iter().all(|&x| x == 1));
        let e6 = build(Family::E, 6).unwrap();
        assert!(e6.excess_edge.iter().all(|&x| x == 1));
    }

    #[test]
    fn automorphism_groups_have_expected_order() {
        assert_eq!(build(Family::AStar1, 1).unwrap().automorphisms.len(), 2);
        assert_eq!(build(Family::D, 4).unwrap().automorphisms.len(), 24);
        assert_eq!(build(Family::D, 6).unwrap().automorphisms.len(), 8);
        assert_eq!(build(Family::E, 6).unwrap().automorphisms.len(), 6);
        assert_eq!(build(Family::E, 7).unwrap().automorphisms.len(), 2);
        assert_eq!(build(Family::E, 8).unwrap().automorphisms.len(), 1);
        assert_eq!(build(Family::A, 5).unwrap().automorphisms.len(), 12);
    }

    #[test]
    fn automorphisms_preserve_structure() {
        for d in all() {
            for g in &d.automorphisms {
                for i in 0..d.len() {
                    assert_eq!(d.f[g[i]], d.f[i]);
                    assert_eq!(d.excess_vertex[g[i]], d.excess_vertex[i]);
                    for j in 0..d.len() {
                        assert_eq!(d.gram[g[i]][g[j]], d.gram[i][j]);
                    }
                }
            }
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!(parse_name("A~*1").unwrap().name(), "A~*1");
        assert_eq!(parse_name("D~10").unwrap().name(), "D~10");
        assert_eq!(parse_name("E~7").unwrap().name(), "E~7");
        assert!(parse_name("E~9").is_err());
        assert!(parse_name("X~3").is_err());
    }
}
