//! Compiles a family and a strict partition into a concrete lattice.

use serde::Serialize;

use crate::labels::{ColLabel, Family, RowLabel, StrictPartition};
use crate::lattice::{Config, EdgeId, Lattice, NodeId, NodeKind, BOTTOM, E, N, S, SOUTH, TOP, W, WEST};

/// Geometric position of an edge. `H { row, slot }` is the horizontal edge of
/// row index `row` east of its `slot`-th vertex (slot 0 is the left boundary);
/// the last slot of a row runs into its bend, corner or right boundary.
/// `V { col, slot }` is the vertical edge of column index `col` above row index
/// `slot` (slot equal to the row count is the bottom boundary).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeGeom {
    H { row: usize, slot: usize },
    V { col: usize, slot: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelSpec {
    pub family: Family,
    pub lambda: StrictPartition,
    /// Row labels, top to bottom.
    pub rows: Vec<RowLabel>,
    /// Column labels, left to right.
    pub columns: Vec<ColLabel>,
    pub lattice: Lattice,
    /// `grid[row][col]` is the six-vertex node at that position, if any.
    pub grid: Vec<Vec<Option<NodeId>>>,
    /// `(top row, bottom row, node)` for each bend.
    pub bends: Vec<(usize, usize, NodeId)>,
    pub corner: Option<NodeId>,
    /// Row index of the central row, if any.
    pub central: Option<usize>,
    pub geom: Vec<EdgeGeom>,
}

impl ModelSpec {
    pub fn n(&self) -> u8 {
        self.lambda.n()
    }

    /// Number of six-vertex nodes (bends and the corner excluded).
    pub fn vertex_count(&self) -> usize {
        self.lattice.nodes.iter().filter(|v| matches!(v.kind, NodeKind::Six { .. })).count()
    }

    pub fn half_column(&self) -> Option<usize> {
        self.columns.iter().position(|c| matches!(c, ColLabel::Half(_)))
    }

    pub fn row_index(&self, label: RowLabel) -> Option<usize> {
        self.rows.iter().position(|&r| r == label)
    }

    /// The edge at a geometric position.
    pub fn edge_at(&self, g: EdgeGeom) -> Option<EdgeId> {
        self.geom.iter().position(|&x| x == g)
    }

    /// Per-node configurations of an admissible orientation.
    pub fn configs(&self, bits: &[bool]) -> Vec<Config> {
        (0..self.lattice.nodes.len())
            .map(|v| self.lattice.config(v, bits).expect("inadmissible orientation"))
            .collect()
    }

    /// Whether the vertical edge is oriented upward.
    pub fn points_up(&self, e: EdgeId, bits: &[bool]) -> bool {
        debug_assert!(matches!(self.geom[e], EdgeGeom::V { .. }));
        !bits[e]
    }

    /// Direction of every fixed boundary edge, for golden files.
    pub fn boundary_json(&self) -> serde_json::Value {
        let fixed: Vec<serde_json::Value> = self
            .lattice
            .edges
            .iter()
            .zip(&self.geom)
            .filter_map(|(e, g)| {
                e.fixed.map(|bit| serde_json::json!({"edge": e.name, "dir": direction(*g, bit)}))
            })
            .collect();
        serde_json::json!({
            "family": self.family.name(),
            "lambda": self.lambda.parts(),
            "rows": self.rows.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "columns": self.columns.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "vertices": self.vertex_count(),
            "bends": self.bends.len(),
            "fixed": fixed,
        })
    }
}

/// Compass direction of an edge under a bit.
pub fn direction(g: EdgeGeom, bit: bool) -> &'static str {
    match (g, bit) {
        (EdgeGeom::H { .. }, true) => "right",
        (EdgeGeom::H { .. }, false) => "left",
        (EdgeGeom::V { .. }, true) => "down",
        (EdgeGeom::V { .. }, false) => "up",
    }
}

fn row_labels(family: Family, n: u8) -> Vec<RowLabel> {
    let top = (1..=n).map(RowLabel::plain);
    let bottom = (1..=n).rev().map(RowLabel::bar);
    match family {
        Family::A => top.collect(),
        Family::B | Family::Cstar | Family::D => top.chain(bottom).collect(),
        Family::Bstar | Family::C => top.chain(std::iter::once(RowLabel::plain(0))).chain(bottom).collect(),
        Family::BC => (1..=n).map(RowLabel::plain).chain((1..n).rev().map(RowLabel::bar)).collect(),
    }
}

pub fn build_model(family: Family, lambda: &StrictPartition) -> ModelSpec {
    let n = lambda.n();
    let rows = row_labels(family, n);
    let lowest_full = if family == Family::D { 2 } else { 1 };
    let mut columns: Vec<ColLabel> = (lowest_full..=lambda.largest()).rev().map(ColLabel::Full).collect();
    let half = match family {
        Family::C | Family::Cstar => Some(0),
        Family::D => Some(1),
        _ => None,
    };
    if let Some(h) = half {
        columns.push(ColLabel::Half(h));
    }
    let central = family.central(n).and_then(|c| rows.iter().position(|r| *r == RowLabel::plain(c)));
    // rows crossed by the half column
    let first_lower = match family {
        Family::C => n as usize + 1,
        _ => n as usize,
    };
    let in_row =
        |r: usize, c: usize| -> bool { !matches!(columns[c], ColLabel::Half(_)) || r >= first_lower };

    let mut lat = Lattice::new();
    let mut grid = vec![vec![None; columns.len()]; rows.len()];
    let mut bends = Vec::new();
    let mut bend_of_row: Vec<Option<NodeId>> = vec![None; rows.len()];
    let mut corner = None;
    for (r, &label) in rows.iter().enumerate() {
        for (c, &col) in columns.iter().enumerate() {
            if in_row(r, c) {
                grid[r][c] = Some(lat.add_node(NodeKind::Six { row: label, col }));
            }
        }
        if family.is_bent() && !label.barred && Some(r) != central {
            let partner = rows.iter().position(|&x| x == label.flipped()).unwrap();
            let b = lat.add_node(NodeKind::Bend { top: label, bottom: label.flipped() });
            bends.push((r, partner, b));
            bend_of_row[r] = Some(b);
            bend_of_row[partner] = Some(b);
        }
        if family == Family::C && Some(r) == central {
            corner = Some(lat.add_node(NodeKind::Corner));
        }
    }

    let mut geom = Vec::new();
    let mut edge = |lat: &mut Lattice,
                    name: String,
                    g: EdgeGeom,
                    a: Option<(NodeId, usize)>,
                    b: Option<(NodeId, usize)>,
                    fixed: Option<bool>|
     -> EdgeId {
        geom.push(g);
        lat.add_edge(name, a, b, fixed)
    };

    // horizontal edges; `true` points right
    for (r, &label) in rows.iter().enumerate() {
        let verts: Vec<NodeId> = grid[r].iter().flatten().copied().collect();
        let h = |slot: usize| format!("h.{label}.{slot}");
        // the left boundary edge points in; a row without vertices runs
        // straight into its bend
        let mut prev: Option<(NodeId, usize)> = None;
        for (k, &v) in verts.iter().enumerate() {
            let fixed = if k == 0 { Some(true) } else { None };
            edge(&mut lat, h(k), EdgeGeom::H { row: r, slot: k }, prev, Some((v, W)), fixed);
            prev = Some((v, E));
        }
        let fixed_left = if verts.is_empty() { Some(true) } else { None };
        let g = EdgeGeom::H { row: r, slot: verts.len() };
        if let Some(b) = bend_of_row[r] {
            let port = if label.barred { BOTTOM } else { TOP };
            edge(&mut lat, h(verts.len()), g, prev, Some((b, port)), fixed_left);
        } else if Some(r) == central && family == Family::C {
            edge(&mut lat, h(verts.len()), g, prev, Some((corner.unwrap(), WEST)), fixed_left);
        } else {
            // right boundary: 𝔄 rows and 𝔅ℭ's central row point in (left);
            // 𝔅*'s central row points out (right)
            let bit = family == Family::Bstar;
            edge(&mut lat, h(verts.len()), g, prev, None, Some(bit));
        }
    }

    // vertical edges; `true` points down
    for (c, &col) in columns.iter().enumerate() {
        let verts: Vec<(usize, NodeId)> =
            (0..rows.len()).filter_map(|r| grid[r][c].map(|v| (r, v))).collect();
        let v = |slot: usize| format!("v.{col}.{slot}");
        let (r0, v0) = verts[0];
        let top_g = EdgeGeom::V { col: c, slot: r0 };
        match col {
            ColLabel::Full(p) => {
                edge(&mut lat, v(r0), top_g, None, Some((v0, N)), Some(!lambda.contains(p)));
            }
            ColLabel::Half(_) => match family {
                Family::C => {
                    edge(&mut lat, v(r0), top_g, Some((corner.unwrap(), SOUTH)), Some((v0, N)), None);
                }
                Family::Cstar => {
                    edge(&mut lat, v(r0), top_g, None, Some((v0, N)), Some(true));
                }
                _ => {
                    edge(&mut lat, v(r0), top_g, None, Some((v0, N)), Some(!lambda.contains(1)));
                }
            },
        }
        for k in 1..verts.len() {
            let (r, node) = verts[k];
            edge(
                &mut lat,
                v(r),
                EdgeGeom::V { col: c, slot: r },
                Some((verts[k - 1].1, S)),
                Some((node, N)),
                None,
            );
        }
        let (_, vl) = *verts.last().unwrap();
        edge(
            &mut lat,
            v(rows.len()),
            EdgeGeom::V { col: c, slot: rows.len() },
            Some((vl, S)),
            None,
            Some(true),
        );
    }

    ModelSpec {
        family,
        lambda: lambda.clone(),
        rows,
        columns,
        lattice: lat,
        grid,
        bends,
        corner,
        central,
        geom,
    }
}
