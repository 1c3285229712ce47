//! The conductrix tables: turning admissible weightings into classification
//! rows (component self-intersections, conductrix multiplicities `A_s`, and
//! cusp data), canonicalizing them up to diagram automorphisms, and diffing
//! against the frozen golden tables.
//!
//! Every table row records, for one degenerate genus-one fibre:
//!
//! * the dual diagram and (for quasi-elliptic fibres) the tangency degree
//!   `d` of the cusp curve: `d = 1` on simple fibres, `d = 2` on double
//!   fibres;
//! * the self-intersection type of each component upstairs;
//! * the multiplicity `A_s` of each component in the conductrix (the
//!   representing element `u` of the weighting);
//! * the cusp components `(vertex, degree)` (the complement `w'`).
//!
//! The weight-to-fibre dictionary: a weighting value `w(v)` determines the
//! upstairs self-intersection through the behaviour table of the
//! [`invariant_table`] — each `w(v)` admits one or two local types, and a
//! transversality constraint along each edge cuts the combinations down.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::dynkin::{self, Diagram, Family};
use crate::error::Error;
use crate::weightings::{self, Decomposition};

/// One row of the local-invariant table: a component with weighting
/// contribution `pairing` = (A, E), where `r` is the number of fixed
/// points of the involution on the component counted with the scheme
/// structure and `s` the degree of the component over its image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantRow {
    pub r: i64,
    pub s: i64,
    /// Pairing (A, E) of the conductrix with the component.
    pub pairing: i64,
    /// Self-intersection of the component upstairs.
    pub self_int: i64,
    /// Genus of the component upstairs (always 0 here).
    pub genus: i64,
}

/// The six local behaviours of a component under the purely inseparable
/// double cover. Both defining relations hold for every row:
/// `self_int = (-2 - r) s^2 / 2` and `2 genus - 2 = self_int - s * pairing`.
pub fn invariant_table() -> Vec<InvariantRow> {
    let rows = vec![
        InvariantRow { r: 0, s: 1, pairing: 1, self_int: -1, genus: 0 },
        InvariantRow { r: 2, s: 1, pairing: 0, self_int: -2, genus: 0 },
        InvariantRow { r: 4, s: 1, pairing: -1, self_int: -3, genus: 0 },
        InvariantRow { r: 6, s: 1, pairing: -2, self_int: -4, genus: 0 },
        InvariantRow { r: 0, s: 2, pairing: -1, self_int: -4, genus: 0 },
        InvariantRow { r: 1, s: 2, pairing: -2, self_int: -6, genus: 0 },
    ];
    for row in &rows {
        assert_eq!(2 * row.self_int, (-2 - row.r) * row.s * row.s);
        assert_eq!(2 * row.genus - 2, row.self_int - row.s * row.pairing);
    }
    rows
}

/// The self-intersection options for a component of weight `w`, in display
/// order. The `-3` option (type `(r, s) = (4, 1)`) only occurs on the `D~`
/// diagrams.
pub fn self_int_options(family: Family, w: i64) -> Vec<i64> {
    match w {
        1 => vec![-1],
        0 => vec![-2],
        -1 => {
            if family == Family::D {
                vec![-4, -3]
            } else {
                vec![-4]
            }
        }
        -2 => vec![-6, -2],
        _ => vec![],
    }
}

/// The local type `(r, s)` of a component with weight `w` and chosen
/// self-intersection: `r` counts fixed points, `s` is the degree over the
/// image.
fn rs_of(w: i64, self_int: i64) -> (i64, i64) {
    match (self_int, w) {
        (-1, 1) => (0, 1),
        (-2, 0) => (2, 1),
        (-2, -2) => (6, 1),
        (-3, -1) => (4, 1),
        (-4, -1) => (0, 2),
        (-6, -2) => (1, 2),
        _ => panic!("no local type for (self_int, w) = ({self_int}, {w})"),
    }
}

/// Whether two components with local types `(r1, s1)` and `(r2, s2)` may
/// meet transversally: they can if the degrees differ, if both have degree
/// 2, or if both have degree 1 and both carry fixed points. (The `A~*1`
/// edge is not transversal and is exempt.)
pub fn transversal_ok(rs1: (i64, i64), rs2: (i64, i64)) -> bool {
    let (r1, s1) = rs1;
    let (r2, s2) = rs2;
    s1 != s2 || (s1 == 2 && s2 == 2) || (r1 > 0 && r2 > 0)
}

/// Diagram tag stored in a table row: a family name and an optional rank
/// (`None` marks the generic cycle row that collapses all `A~n` and
/// `A~*2`, whose conductrix is always zero).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramTag {
    pub family: String,
    pub rank: Option<usize>,
}

/// One canonical table row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub diagram: DiagramTag,
    /// Tangency degree of the cusp curve: 1 or 2 for quasi-elliptic rows,
    /// 0 for elliptic rows.
    pub d: u8,
    pub self_int: Vec<i64>,
    pub a_s: Vec<i64>,
    pub cusp: Vec<(usize, i64)>,
}

/// A golden or generated table: the fibration kind plus its rows.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Table {
    pub kind: String,
    pub rows: Vec<TableRow>,
}

/// Kind of genus-one fibration a table classifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    QuasiElliptic,
    Elliptic,
}

impl TableKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TableKind::QuasiElliptic => "quasi-elliptic",
            TableKind::Elliptic => "elliptic",
        }
    }

    pub fn parse(s: &str) -> Result<TableKind, Error> {
        match s {
            "quasi-elliptic" | "qe" => Ok(TableKind::QuasiElliptic),
            "elliptic" => Ok(TableKind::Elliptic),
            _ => Err(Error::BadInput(format!("unknown table kind: {s}"))),
        }
    }
}

/// Table scope: rows are generated from admissible weightings whose branch
/// vertices (degree >= 3) have weight at least -1 (-2 on `D~4`). This is
/// exactly the scope of the classification tables; the excess-results
/// verification documents the one admissible family outside it
/// (`D~4k`, k >= 2, with branch weights {2, 1}).
pub fn in_table_scope(d: &Diagram, w: &[i64]) -> bool {
    let bound = if d.family == Family::D && d.rank == 4 { 2 } else { 1 };
    (0..d.len()).all(|v| d.degree(v) < 3 || -w[v] <= bound)
}

/// All edge-compatible self-intersection assignments for the weighting `w`
/// (here named `pairings` since `w(v)` is the pairing of the component with
/// the half-conductrix class).
pub fn assign_self_intersections(d: &Diagram, pairings: &[i64]) -> Vec<Vec<i64>> {
    let n = d.len();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(
        d: &Diagram,
        pairings: &[i64],
        idx: usize,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if idx == d.len() {
            out.push(cur.clone());
            return;
        }
        for opt in self_int_options(d.family, pairings[idx]) {
            cur[idx] = opt;
            // Check transversality against already-assigned neighbours.
            let ok = d.family == Family::AStar1
                || d.edges.iter().all(|e| {
                    let (a, b) = (e.a, e.b);
                    if a.max(b) != idx || a.min(b) > idx {
                        return true;
                    }
                    let (lo, hi) = (a.min(b), a.max(b));
                    transversal_ok(
                        rs_of(pairings[lo], cur[lo]),
                        rs_of(pairings[hi], cur[hi]),
                    )
                });
            if ok {
                rec(d, pairings, idx + 1, cur, out);
            }
        }
        cur[idx] = 0;
    }
    rec(d, pairings, 0, &mut cur, &mut out);
    out
}

/// Canonical form of a row triple under the diagram automorphisms:
/// the lexicographically minimal `(self_int, a_s, complement)` image.
fn canonical_triple(
    d: &Diagram,
    self_int: &[i64],
    a_s: &[i64],
    complement: &[i64],
) -> (Vec<i64>, Vec<i64>, Vec<i64>) {
    d.automorphisms
        .iter()
        .map(|g| {
            let n = d.len();
            let mut s = vec![0i64; n];
            let mut a = vec![0i64; n];
            let mut c = vec![0i64; n];
            for i in 0..n {
                s[g[i]] = self_int[i];
                a[g[i]] = a_s[i];
                c[g[i]] = complement[i];
            }
            (s, a, c)
        })
        .min()
        .expect("nonempty automorphism group")
}

fn rows_for_diagram(d: &Diagram, kind: TableKind, bound: i64) -> Vec<TableRow> {
    let mut set: BTreeSet<(u8, Vec<i64>, Vec<i64>, Vec<i64>)> = BTreeSet::new();
    let ms: &[i64] = match kind {
        TableKind::QuasiElliptic => &[1, 2],
        TableKind::Elliptic => &[0],
    };
    for &m in ms {
        // Tangency degree of the cusp: on the branched diagrams the cusp
        // meets a simple fibre in two simple points (m = 2, d = 1) and a
        // double fibre in one double point (m = 1, d = 2); on A~*1 the
        // cusp passes through the singular point (d = m).
        let deg: u8 = match kind {
            TableKind::Elliptic => 0,
            TableKind::QuasiElliptic if d.family == Family::AStar1 => m as u8,
            TableKind::QuasiElliptic => {
                if m == 2 {
                    1
                } else {
                    2
                }
            }
        };
        for (w, cert) in weightings::enumerate_admissible(d, m, bound) {
            if !in_table_scope(d, &w) {
                continue;
            }
            let decs: Vec<Decomposition> = if d.family == Family::AStar1 {
                // The representing element is forced to zero.
                vec![cert.decomposition.clone().expect("certified")]
            } else {
                weightings::decompositions(d, &w, m == 2)
            };
            for dec in decs {
                for self_int in assign_self_intersections(d, &w) {
                    let (s, a, c) = canonical_triple(d, &self_int, &dec.u, &dec.complement);
                    set.insert((deg, s, a, c));
                }
            }
        }
    }
    set.into_iter()
        .map(|(deg, s, a, c)| TableRow {
            diagram: DiagramTag { family: d.family.to_string(), rank: Some(d.rank) },
            d: deg,
            self_int: s,
            a_s: a,
            cusp: (0..d.len()).filter(|&v| c[v] != 0).map(|v| (v, c[v])).collect(),
        })
        .collect()
}

/// Generates the classification table of the given kind, covering all
/// diagrams with at most `max_components` vertices (default 9, the table
/// range).
pub fn generate_table(kind: TableKind, max_components: usize, bound: i64) -> Result<Table, Error> {
    let mut rows: Vec<TableRow> = Vec::new();
    let a_star1 = dynkin::build(Family::AStar1, 1)?;
    rows.extend(rows_for_diagram(&a_star1, kind, bound));

    // Cycle diagrams: the only admissible weighting is zero (checked), so
    // the elliptic table carries one generic row for all of them and the
    // quasi-elliptic table none.
    let mut cycle_rows: BTreeSet<Vec<i64>> = BTreeSet::new();
    for n in 1..max_components {
        let d = dynkin::build(Family::A, n)?;
        for row in rows_for_diagram(&d, kind, bound) {
            cycle_rows.insert(row.self_int.clone());
            if row.self_int.iter().any(|&x| x != -2) || !row.cusp.is_empty() {
                return Err(Error::VerificationFailed(format!(
                    "unexpected nonzero cycle row on {}",
                    d.name()
                )));
            }
        }
    }
    {
        let d = dynkin::build(Family::AStar2, 2)?;
        for row in rows_for_diagram(&d, kind, bound) {
            cycle_rows.insert(row.self_int.clone());
        }
    }
    if kind == TableKind::Elliptic {
        if cycle_rows.is_empty() {
            return Err(Error::VerificationFailed("missing cycle rows".into()));
        }
        rows.push(TableRow {
            diagram: DiagramTag { family: "A~".into(), rank: None },
            d: 0,
            self_int: vec![-2],
            a_s: vec![0],
            cusp: vec![],
        });
    } else if !cycle_rows.is_empty() {
        return Err(Error::VerificationFailed(
            "cycle diagrams must not contribute quasi-elliptic rows".into(),
        ));
    }

    for n in 4..max_components {
        let d = dynkin::build(Family::D, n)?;
        rows.extend(rows_for_diagram(&d, kind, bound));
    }
    for n in [6usize, 7, 8] {
        if n + 1 <= max_components {
            let d = dynkin::build(Family::E, n)?;
            rows.extend(rows_for_diagram(&d, kind, bound));
        }
    }
    rows.sort_by_key(row_sort_key);
    Ok(Table { kind: kind.as_str().into(), rows })
}

fn family_order(family: &str) -> u8 {
    match family {
        "A~*1" => 0,
        "A~" => 1,
        "A~*2" => 2,
        "D~" => 3,
        "E~" => 4,
        _ => 5,
    }
}

fn row_sort_key(row: &TableRow) -> (u8, usize, u8, Vec<i64>, Vec<i64>) {
    (
        family_order(&row.diagram.family),
        row.diagram.rank.unwrap_or(0),
        row.d,
        row.self_int.clone(),
        row.a_s.clone(),
    )
}

/// The golden tables compiled into the binary.
pub fn golden_builtin(kind: TableKind) -> Table {
    let text = match kind {
        TableKind::QuasiElliptic => include_str!("../tables/quasi_elliptic.json"),
        TableKind::Elliptic => include_str!("../tables/elliptic.json"),
    };
    serde_json::from_str(text).expect("builtin golden tables parse")
}

/// Loads the golden table: from `path` when given, else from the file
/// in the directory named by the `GENUS1_GOLDEN_DIR` environment
/// variable, else the builtin copy.
pub fn load_golden(kind: TableKind, path: Option<&str>) -> Result<Table, Error> {
    let file = match kind {
        TableKind::QuasiElliptic => "quasi_elliptic.json",
        TableKind::Elliptic => "elliptic.json",
    };
    let chosen: Option<std::path::PathBuf> = match path {
        Some(p) => Some(p.into()),
        None => std::env::var("GENUS1_GOLDEN_DIR")
            .ok()
            .map(|dir| std::path::Path::new(&dir).join(file)),
    };
    match chosen {
        Some(p) => {
            let text = std::fs::read_to_string(&p)?;
            Ok(serde_json::from_str(&text)?)
        }
        None => Ok(golden_builtin(kind)),
    }
}

/// One discrepancy between a generated and a golden table.
#[derive(Debug, Clone, Serialize)]
pub struct DiffEntry {
    /// "missing": in golden but not generated; "extra": generated but not
    /// golden.
    pub status: String,
    pub row: TableRow,
}

/// Diffs two tables as row sets (rows are canonical, so set equality is
/// the right notion of "zero diff up to diagram automorphism").
pub fn diff_tables(generated: &Table, golden: &Table) -> Vec<DiffEntry> {
    let mut out = Vec::new();
    for row in &golden.rows {
        if !generated.rows.contains(row) {
            out.push(DiffEntry { status: "missing".into(), row: row.clone() });
        }
    }
    for row in &generated.rows {
        if !golden.rows.contains(row) {
            out.push(DiffEntry { status: "extra".into(), row: row.clone() });
        }
    }
    out
}

/// Renders a table row in the arm-by-arm display layout: one line of
/// self-intersections, one of conductrix multiplicities, with vertex names
/// above, mirroring the printed tables.
pub fn render_row(row: &TableRow) -> String {
    let mut s = String::new();
    let name = match row.diagram.rank {
        Some(r) => format!("{}{}", row.diagram.family, if row.diagram.family.ends_with('~') { r.to_string() } else { String::new() }),
        None => format!("{}n (any cycle)", row.diagram.family),
    };
    s.push_str(&format!("{name}  d={}\n", row.d));
    if let Some(rank) = row.diagram.rank {
        if let Ok(d) = diagram_of(&row.diagram.family, rank) {
            let names: Vec<String> = d.vertices.clone();
            let w = names.iter().map(|n| n.len().max(3)).collect::<Vec<_>>();
            let line = |vals: &[i64]| {
                vals.iter()
                    .zip(&w)
                    .map(|(v, width)| format!("{v:>width$}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            s.push_str(&format!(
                "  comps: {}\n",
                names
                    .iter()
                    .zip(&w)
                    .map(|(n, width)| format!("{n:>width$}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            s.push_str(&format!("  E^2:   {}\n", line(&row.self_int)));
            s.push_str(&format!("  A_s:   {}\n", line(&row.a_s)));
        }
    } else {
        s.push_str("  E^2:   -2 on every component; A_s: 0\n");
    }
    if !row.cusp.is_empty() {
        s.push_str(&format!("  cusp:  {:?}\n", row.cusp));
    }
    s
}

fn diagram_of(family: &str, rank: usize) -> Result<Diagram, Error> {
    match family {
        "A~*1" => dynkin::build(Family::AStar1, 1),
        "A~*2" => dynkin::build(Family::AStar2, 2),
        "A~" => dynkin::build(Family::A, rank),
        "D~" => dynkin::build(Family::D, rank),
        "E~" => dynkin::build(Family::E, rank),
        _ => Err(Error::BadDiagram(format!("unknown family {family}"))),
    }
}
