//! Oriented graphs of vertices and edges, with a backtracking enumerator of
//! admissible orientations. Used for full models and for the small diagrams of
//! the local relations.

use serde::Serialize;

use crate::labels::{ColLabel, RowLabel};

pub type NodeId = usize;
pub type EdgeId = usize;

/// Six-vertex ports.
pub const N: usize = 0;
pub const E: usize = 1;
pub const S: usize = 2;
pub const W: usize = 3;
/// Crossing ports.
pub const LT: usize = 0;
pub const LB: usize = 1;
pub const RT: usize = 2;
pub const RB: usize = 3;
/// Bend ports.
pub const TOP: usize = 0;
pub const BOTTOM: usize = 1;
/// Corner ports.
pub const WEST: usize = 0;
pub const SOUTH: usize = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NodeKind {
    Six {
        row: RowLabel,
        col: ColLabel,
    },
    /// The R-vertex; `top` and `bottom` label the strands entering on the left.
    Cross {
        top: RowLabel,
        bottom: RowLabel,
    },
    Bend {
        top: RowLabel,
        bottom: RowLabel,
    },
    Corner,
}

impl NodeKind {
    pub fn degree(self) -> usize {
        match self {
            NodeKind::Six { .. } | NodeKind::Cross { .. } => 4,
            NodeKind::Bend { .. } | NodeKind::Corner => 2,
        }
    }
}

/// Vertex configuration, named as in the weight tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Config {
    A1,
    A2,
    B1,
    B2,
    C1,
    C2,
    U,
    D,
    L,
    R,
    /// R-vertex configuration 1..=6 in the order of the crossing table.
    Cross(u8),
}

impl Config {
    pub fn name(self) -> String {
        match self {
            Config::A1 => "a1".into(),
            Config::A2 => "a2".into(),
            Config::B1 => "b1".into(),
            Config::B2 => "b2".into(),
            Config::C1 => "c1".into(),
            Config::C2 => "c2".into(),
            Config::U => "U".into(),
            Config::D => "D".into(),
            Config::L => "L".into(),
            Config::R => "R".into(),
            Config::Cross(k) => format!("R{k}"),
        }
    }
}

/// Classifies a node from the bitmask of its inward ports.
pub fn classify(kind: NodeKind, inward: u8) -> Option<Config> {
    match kind {
        NodeKind::Six { .. } => {
            const NN: u8 = 1 << N;
            const EE: u8 = 1 << E;
            const SS: u8 = 1 << S;
            const WW: u8 = 1 << W;
            match inward {
                x if x == NN | WW => Some(Config::A1),
                x if x == SS | EE => Some(Config::A2),
                x if x == SS | WW => Some(Config::B1),
                x if x == NN | EE => Some(Config::B2),
                x if x == NN | SS => Some(Config::C1),
                x if x == EE | WW => Some(Config::C2),
                _ => None,
            }
        }
        NodeKind::Cross { .. } => {
            const T1: u8 = 1 << LT;
            const B1: u8 = 1 << LB;
            const T2: u8 = 1 << RT;
            const B2: u8 = 1 << RB;
            match inward {
                x if x == T1 | B1 => Some(Config::Cross(1)),
                x if x == T2 | B2 => Some(Config::Cross(2)),
                x if x == B1 | T2 => Some(Config::Cross(3)),
                x if x == T1 | B2 => Some(Config::Cross(4)),
                x if x == T1 | T2 => Some(Config::Cross(5)),
                x if x == B1 | B2 => Some(Config::Cross(6)),
                _ => None,
            }
        }
        NodeKind::Bend { .. } => match inward {
            x if x == 1 << TOP => Some(Config::D),
            x if x == 1 << BOTTOM => Some(Config::U),
            _ => None,
        },
        NodeKind::Corner => match inward {
            x if x == 1 << WEST => Some(Config::R),
            x if x == 1 << SOUTH => Some(Config::L),
            _ => None,
        },
    }
}

/// Which end of an edge a port sits on. An edge's bit is `true` when the
/// arrow points from its `A` end to its `B` end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Debug, Serialize)]
pub struct Edge {
    pub name: String,
    /// `(node, port)` at each end; `None` is the outside of the graph.
    pub a: Option<(NodeId, usize)>,
    pub b: Option<(NodeId, usize)>,
    pub fixed: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Node {
    pub kind: NodeKind,
    pub ports: Vec<Option<(EdgeId, Side)>>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Lattice {
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

impl Lattice {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, kind: NodeKind) -> NodeId {
        self.nodes.push(Node { kind, ports: vec![None; kind.degree()] });
        self.nodes.len() - 1
    }

    /// Adds an edge from end `a` to end `b`.
    pub fn add_edge(
        &mut self,
        name: impl Into<String>,
        a: Option<(NodeId, usize)>,
        b: Option<(NodeId, usize)>,
        fixed: Option<bool>,
    ) -> EdgeId {
        let id = self.edges.len();
        for (end, side) in [(a, Side::A), (b, Side::B)] {
            if let Some((node, port)) = end {
                assert!(self.nodes[node].ports[port].is_none(), "port used twice");
                self.nodes[node].ports[port] = Some((id, side));
            }
        }
        self.edges.push(Edge { name: name.into(), a, b, fixed });
        id
    }

    /// The bit that makes a boundary edge point into (or out of) the graph.
    pub fn boundary_bit(&self, edge: EdgeId, inward: bool) -> bool {
        let e = &self.edges[edge];
        match (e.a, e.b) {
            (None, Some(_)) => inward,
            (Some(_), None) => !inward,
            _ => panic!("edge {} is not a boundary edge", e.name),
        }
    }

    pub fn set_fixed(&mut self, edge: EdgeId, bit: Option<bool>) {
        self.edges[edge].fixed = bit;
    }

    /// Whether a port is inward under the given orientation.
    pub fn port_inward(&self, node: NodeId, port: usize, bits: &[bool]) -> bool {
        let (e, side) = self.nodes[node].ports[port].expect("unconnected port");
        matches!((bits[e], side), (true, Side::B) | (false, Side::A))
    }

    pub fn inward_mask(&self, node: NodeId, bits: &[bool]) -> u8 {
        (0..self.nodes[node].ports.len())
            .filter(|&p| self.port_inward(node, p, bits))
            .fold(0, |m, p| m | (1 << p))
    }

    pub fn config(&self, node: NodeId, bits: &[bool]) -> Option<Config> {
        classify(self.nodes[node].kind, self.inward_mask(node, bits))
    }

    pub fn is_admissible(&self, bits: &[bool]) -> bool {
        bits.len() == self.edges.len()
            && self.edges.iter().zip(bits).all(|(e, &b)| e.fixed.is_none_or(|f| f == b))
            && (0..self.nodes.len()).all(|v| self.config(v, bits).is_some())
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.name == name)
    }

    /// Calls `visit` on every admissible orientation, in a fixed order.
    pub fn for_each_state(&self, mut visit: impl FnMut(&[bool])) {
        let mut search = Search::new(self);
        if search.seed() {
            search.run(0, &mut visit);
        }
    }

    pub fn enumerate(&self) -> Vec<Vec<bool>> {
        let mut out = Vec::new();
        self.for_each_state(|s| out.push(s.to_vec()));
        out
    }

    pub fn count_states(&self) -> usize {
        let mut n = 0;
        self.for_each_state(|_| n += 1);
        n
    }
}

/// Backtracking over free edges. Edges are ordered by first appearance when
/// nodes are visited in insertion order, so each node completes soon after it
/// is reached; a node whose assigned ports already exceed half its degree in
/// either direction prunes the branch.
struct Search<'a> {
    lat: &'a Lattice,
    order: Vec<EdgeId>,
    bits: Vec<bool>,
    ins: Vec<u8>,
    outs: Vec<u8>,
    incident: Vec<Vec<(NodeId, Side)>>,
}

impl<'a> Search<'a> {
    fn new(lat: &'a Lattice) -> Self {
        let mut incident = vec![Vec::new(); lat.edges.len()];
        for (v, node) in lat.nodes.iter().enumerate() {
            for &(e, side) in node.ports.iter().flatten() {
                incident[e].push((v, side));
            }
        }
        let mut seen = vec![false; lat.edges.len()];
        let mut order = Vec::new();
        for node in &lat.nodes {
            for &(e, _) in node.ports.iter().flatten() {
                if !seen[e] && lat.edges[e].fixed.is_none() {
                    seen[e] = true;
                    order.push(e);
                }
            }
        }
        for (e, edge) in lat.edges.iter().enumerate() {
            if !seen[e] && edge.fixed.is_none() {
                order.push(e);
            }
        }
        Search {
            lat,
            order,
            bits: vec![false; lat.edges.len()],
            ins: vec![0; lat.nodes.len()],
            outs: vec![0; lat.nodes.len()],
            incident,
        }
    }

    fn assign(&mut self, e: EdgeId, bit: bool) -> bool {
        self.bits[e] = bit;
        let mut ok = true;
        for &(v, side) in &self.incident[e] {
            let inward = matches!((bit, side), (true, Side::B) | (false, Side::A));
            if inward {
                self.ins[v] += 1;
            } else {
                self.outs[v] += 1;
            }
            let half = (self.lat.nodes[v].kind.degree() / 2) as u8;
            if self.ins[v] > half || self.outs[v] > half {
                ok = false;
            }
        }
        ok
    }

    fn unassign(&mut self, e: EdgeId) {
        let bit = self.bits[e];
        for &(v, side) in &self.incident[e] {
            let inward = matches!((bit, side), (true, Side::B) | (false, Side::A));
            if inward {
                self.ins[v] -= 1;
            } else {
                self.outs[v] -= 1;
            }
        }
    }

    fn seed(&mut self) -> bool {
        let mut ok = true;
        for e in 0..self.lat.edges.len() {
            if let Some(bit) = self.lat.edges[e].fixed {
                ok &= self.assign(e, bit);
            }
        }
        ok
    }

    fn run(&mut self, depth: usize, visit: &mut impl FnMut(&[bool])) {
        if depth == self.order.len() {
            visit(&self.bits);
            return;
        }
        let e = self.order[depth];
        for bit in [true, false] {
            if self.assign(e, bit) {
                self.run(depth + 1, visit);
            }
            self.unassign(e);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A single six-vertex node with all four edges to the outside.
    fn single() -> (Lattice, [EdgeId; 4]) {
        let mut lat = Lattice::new();
        let v = lat.add_node(NodeKind::Six { row: RowLabel::plain(1), col: ColLabel::Full(1) });
        let n = lat.add_edge("n", None, Some((v, N)), None);
        let w = lat.add_edge("w", None, Some((v, W)), None);
        let e = lat.add_edge("e", Some((v, E)), None, None);
        let s = lat.add_edge("s", Some((v, S)), None, None);
        (lat, [n, e, s, w])
    }

    #[test]
    fn free_vertex_has_six_states() {
        let (lat, _) = single();
        let states = lat.enumerate();
        assert_eq!(states.len(), 6);
        let mut kinds: Vec<Config> = states.iter().map(|s| lat.config(0, s).unwrap()).collect();
        kinds.sort();
        assert_eq!(kinds, vec![Config::A1, Config::A2, Config::B1, Config::B2, Config::C1, Config::C2]);
    }

    #[test]
    fn kind_table() {
        let (mut lat, [n, e, s, w]) = single();
        // horizontal arrows inward, vertical outward
        lat.set_fixed(w, Some(true));
        lat.set_fixed(e, Some(false));
        lat.set_fixed(n, Some(false));
        lat.set_fixed(s, Some(true));
        let states = lat.enumerate();
        assert_eq!(states.len(), 1);
        assert_eq!(lat.config(0, &states[0]), Some(Config::C2));
        // NW inward is a1
        lat.set_fixed(n, Some(true));
        lat.set_fixed(e, Some(true));
        let states = lat.enumerate();
        assert_eq!(lat.config(0, &states[0]), Some(Config::A1));
    }

    #[test]
    fn crossing_has_six_states() {
        let mut lat = Lattice::new();
        let v = lat.add_node(NodeKind::Cross { top: RowLabel::plain(1), bottom: RowLabel::plain(2) });
        for p in 0..4 {
            lat.add_edge(format!("p{p}"), None, Some((v, p)), None);
        }
        let mut kinds: Vec<Config> = lat.enumerate().iter().map(|s| lat.config(0, s).unwrap()).collect();
        kinds.sort();
        assert_eq!(kinds, (1..=6).map(Config::Cross).collect::<Vec<_>>());
    }
}
