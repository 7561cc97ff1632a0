//! Local relations checked exhaustively over the boundary of small diagrams.

use std::collections::BTreeMap;

use bent_poly::LaurentPoly;
use rayon::prelude::*;
use serde::Serialize;

use crate::labels::{ColLabel, Family, RowLabel};
use crate::lattice::{
    EdgeId, Lattice, NodeId, NodeKind, BOTTOM, E, LB, LT, N, RB, RT, S, SOUTH, TOP, W, WEST,
};
use crate::state::{states_of, sum_weights};
use crate::weights::{Regime, RowWeights, WeightScheme};
use crate::IceError;

type P = LaurentPoly;

/// A small graph whose boundary edges are named slots.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub lat: Lattice,
    pub slots: Vec<(String, EdgeId)>,
}

type Port = (NodeId, usize);

#[derive(Default)]
struct Builder {
    lat: Lattice,
    slots: Vec<(String, EdgeId)>,
}

impl Builder {
    fn node(&mut self, kind: NodeKind) -> NodeId {
        self.lat.add_node(kind)
    }

    fn six(&mut self, row: RowLabel) -> NodeId {
        self.node(NodeKind::Six { row, col: ColLabel::Full(1) })
    }

    fn half(&mut self, row: RowLabel) -> NodeId {
        self.node(NodeKind::Six { row, col: ColLabel::Half(0) })
    }

    fn cross(&mut self, top: RowLabel, bottom: RowLabel) -> NodeId {
        self.node(NodeKind::Cross { top, bottom })
    }

    fn bend(&mut self, top: RowLabel, bottom: RowLabel) -> NodeId {
        self.node(NodeKind::Bend { top, bottom })
    }

    fn name(&self) -> String {
        format!("e{}", self.lat.edges.len())
    }

    fn link(&mut self, from: Port, to: Port) {
        let name = self.name();
        self.lat.add_edge(name, Some(from), Some(to), None);
    }

    /// Slot on the left or top boundary.
    fn slot_in(&mut self, slot: &str, to: Port) {
        let e = self.lat.add_edge(slot, None, Some(to), None);
        self.slots.push((slot.into(), e));
    }

    /// Slot on the right or bottom boundary.
    fn slot_out(&mut self, slot: &str, from: Port) {
        let e = self.lat.add_edge(slot, Some(from), None, None);
        self.slots.push((slot.into(), e));
    }

    /// Fixed boundary edge entering `to` from the left or top.
    fn fixed_in(&mut self, to: Port, inward: bool) {
        let name = self.name();
        self.lat.add_edge(name, None, Some(to), Some(inward));
    }

    /// Fixed boundary edge leaving `from` to the right or bottom.
    fn fixed_out(&mut self, from: Port, inward: bool) {
        let name = self.name();
        self.lat.add_edge(name, Some(from), None, Some(!inward));
    }

    fn finish(mut self, order: &[&str]) -> Diagram {
        self.slots.sort_by_key(|(s, _)| order.iter().position(|o| o == s).expect("unknown slot"));
        Diagram { lat: self.lat, slots: self.slots }
    }
}

impl Diagram {
    pub fn slot_names(&self) -> Vec<String> {
        self.slots.iter().map(|(s, _)| s.clone()).collect()
    }

    /// Fixes the slots; bit `k` of `mask` set means slot `k` points inward.
    pub fn with_boundary(&self, mask: u32) -> Lattice {
        let mut lat = self.lat.clone();
        for (k, (_, e)) in self.slots.iter().enumerate() {
            let bit = lat.boundary_bit(*e, mask >> k & 1 == 1);
            lat.set_fixed(*e, Some(bit));
        }
        lat
    }

    /// Partition function for one boundary assignment.
    pub fn value(&self, mask: u32, scheme: &WeightScheme) -> Result<P, IceError> {
        let lat = self.with_boundary(mask);
        let states = states_of(&lat);
        sum_weights(&lat, &states, scheme)
    }

    pub fn values(&self, scheme: &WeightScheme) -> Result<Vec<P>, IceError> {
        (0..1u32 << self.slots.len()).into_par_iter().map(|m| self.value(m, scheme)).collect()
    }
}

fn describe(slots: &[String], mask: u32) -> BTreeMap<String, &'static str> {
    slots
        .iter()
        .enumerate()
        .map(|(k, s)| (s.clone(), if mask >> k & 1 == 1 { "in" } else { "out" }))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub boundary: BTreeMap<String, &'static str>,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub relation: String,
    pub pass: bool,
    pub slots: Vec<String>,
    /// One entry per boundary assignment, in mask order: `true` when it holds.
    pub assignments: Vec<bool>,
    pub witness: Option<Witness>,
    /// Common ratio, for the fish and jellyfish relations.
    pub ratio: Option<serde_json::Value>,
    /// Whether the common ratio equals the closed form.
    pub closed_form: Option<bool>,
}

/// Compares two diagrams assignment by assignment.
pub fn compare(
    relation: &str,
    left: &Diagram,
    right: &Diagram,
    scheme: &WeightScheme,
) -> Result<Verdict, IceError> {
    let slots = left.slot_names();
    assert_eq!(slots, right.slot_names());
    let l = left.values(scheme)?;
    let r = right.values(scheme)?;
    let assignments: Vec<bool> = l.iter().zip(&r).map(|(a, b)| a == b).collect();
    let witness = assignments.iter().position(|ok| !ok).map(|m| Witness {
        boundary: describe(&slots, m as u32),
        left: l[m].to_string(),
        right: r[m].to_string(),
    });
    Ok(Verdict {
        relation: relation.into(),
        pass: witness.is_none(),
        slots,
        assignments,
        witness,
        ratio: None,
        closed_form: None,
    })
}

/// Checks that `Z(twisted) = c · Z(bare)` for one `c` across all assignments,
/// by cross-multiplication against a reference assignment.
pub fn ratio_check(
    relation: &str,
    twisted: &Diagram,
    bare: &Diagram,
    scheme: &WeightScheme,
    closed_form: &P,
) -> Result<Verdict, IceError> {
    let slots = twisted.slot_names();
    assert_eq!(slots, bare.slot_names());
    let t = twisted.values(scheme)?;
    let b = bare.values(scheme)?;
    let reference = b.iter().position(|x| !x.is_zero()).ok_or_else(|| {
        IceError::Verification(format!("{relation}: the bare diagram has no nonzero filling"))
    })?;
    let assignments: Vec<bool> =
        t.iter().zip(&b).map(|(tm, bm)| tm * &b[reference] == &t[reference] * bm).collect();
    let witness = assignments.iter().position(|ok| !ok).map(|m| Witness {
        boundary: describe(&slots, m as u32),
        left: format!("Z = {}, wt = {}", t[m], b[m]),
        right: format!("reference Z = {}, wt = {}", t[reference], b[reference]),
    });
    let pass = witness.is_none();
    let mut ratio = None;
    let mut closed = None;
    if pass {
        if let Some(c) = t[reference].exact_divide(&b[reference])? {
            closed = Some(&c == closed_form);
            ratio = Some(c.to_json());
        } else {
            closed = Some(false);
        }
    }
    Ok(Verdict { relation: relation.into(), pass, slots, assignments, witness, ratio, closed_form: closed })
}

/// Scheme holding two rows labelled 1 and 2.
pub fn two_row_scheme(wj: &RowWeights, wk: &RowWeights) -> WeightScheme {
    let mut s = WeightScheme::all_ones(Family::A, 2);
    s.regime = Regime::Custom;
    s.rows.insert(RowLabel::plain(1), wj.clone());
    s.rows.insert(RowLabel::plain(2), wk.clone());
    s
}

/// The two sides of the Yang-Baxter equation for rows `j`, `k`.
pub fn ybe_diagrams(j: RowLabel, k: RowLabel) -> (Diagram, Diagram) {
    const ORDER: [&str; 6] = ["alpha", "beta", "gamma", "delta", "epsilon", "phi"];
    let mut l = Builder::default();
    let r = l.cross(j, k);
    let top = l.six(k);
    let bot = l.six(j);
    l.slot_in("alpha", (r, LT));
    l.slot_in("beta", (r, LB));
    l.link((r, RT), (top, W));
    l.link((r, RB), (bot, W));
    l.slot_in("phi", (top, N));
    l.link((top, S), (bot, N));
    l.slot_out("gamma", (bot, S));
    l.slot_out("epsilon", (top, E));
    l.slot_out("delta", (bot, E));

    let mut g = Builder::default();
    let top = g.six(j);
    let bot = g.six(k);
    let r = g.cross(j, k);
    g.slot_in("alpha", (top, W));
    g.slot_in("beta", (bot, W));
    g.slot_in("phi", (top, N));
    g.link((top, S), (bot, N));
    g.slot_out("gamma", (bot, S));
    g.link((top, E), (r, LT));
    g.link((bot, E), (r, LB));
    g.slot_out("epsilon", (r, RT));
    g.slot_out("delta", (r, RB));
    (l.finish(&ORDER), g.finish(&ORDER))
}

pub fn ybe_check(wj: &RowWeights, wk: &RowWeights) -> Result<Verdict, IceError> {
    let (l, r) = ybe_diagrams(RowLabel::plain(1), RowLabel::plain(2));
    compare("ybe", &l, &r, &two_row_scheme(wj, wk))
}

/// Rows `j, k, j̄, k̄` with the crossing moved through both bends.
pub fn bend_ybe_diagrams(j: u8, k: u8) -> (Diagram, Diagram) {
    const ORDER: [&str; 4] = ["alpha", "beta", "gamma", "delta"];
    let (pj, pk, bj, bk) = (RowLabel::plain(j), RowLabel::plain(k), RowLabel::bar(j), RowLabel::bar(k));
    let mut l = Builder::default();
    let r = l.cross(pj, pk);
    let outer = l.bend(pk, bk);
    let inner = l.bend(pj, bj);
    l.slot_in("alpha", (r, LT));
    l.slot_in("beta", (r, LB));
    l.link((r, RT), (outer, TOP));
    l.link((r, RB), (inner, TOP));
    l.slot_in("gamma", (inner, BOTTOM));
    l.slot_in("delta", (outer, BOTTOM));

    let mut g = Builder::default();
    let r = g.cross(bj, bk);
    let outer = g.bend(pj, bj);
    let inner = g.bend(pk, bk);
    g.slot_in("alpha", (outer, TOP));
    g.slot_in("beta", (inner, TOP));
    g.slot_in("gamma", (r, LT));
    g.slot_in("delta", (r, LB));
    g.link((r, RT), (inner, BOTTOM));
    g.link((r, RB), (outer, BOTTOM));
    (l.finish(&ORDER), g.finish(&ORDER))
}

pub fn bend_ybe_check(scheme: &WeightScheme, j: u8, k: u8) -> Result<Verdict, IceError> {
    let (l, r) = bend_ybe_diagrams(j, k);
    compare("bend-ybe", &l, &r, scheme)
}

/// Rows `j̄, ★, j` with a column on either side of three crossings.
pub fn caduceus_diagrams(j: u8, star: u8) -> (Diagram, Diagram) {
    const ORDER: [&str; 8] = ["alpha", "beta", "gamma", "delta", "epsilon", "phi", "kappa", "lambda"];
    let (pj, bj, c) = (RowLabel::plain(j), RowLabel::bar(j), RowLabel::plain(star));
    let braid = |b: &mut Builder, inputs: [Port; 3]| -> [Port; 3] {
        let r1 = b.cross(bj, c);
        let r2 = b.cross(bj, pj);
        let r3 = b.cross(c, pj);
        b.link(inputs[0], (r1, LT));
        b.link(inputs[1], (r1, LB));
        b.link((r1, RB), (r2, LT));
        b.link(inputs[2], (r2, LB));
        b.link((r1, RT), (r3, LT));
        b.link((r2, RT), (r3, LB));
        [(r3, RT), (r3, RB), (r2, RB)]
    };
    let column = |b: &mut Builder, rows: [RowLabel; 3]| -> [NodeId; 3] {
        let v = rows.map(|r| b.six(r));
        b.slot_in("lambda", (v[0], N));
        b.link((v[0], S), (v[1], N));
        b.link((v[1], S), (v[2], N));
        b.slot_out("delta", (v[2], S));
        v
    };

    let mut l = Builder::default();
    // boundary edges enter the first crossings directly
    let r1 = l.cross(bj, c);
    let r2 = l.cross(bj, pj);
    let r3 = l.cross(c, pj);
    l.slot_in("alpha", (r1, LT));
    l.slot_in("beta", (r1, LB));
    l.slot_in("gamma", (r2, LB));
    l.link((r1, RB), (r2, LT));
    l.link((r1, RT), (r3, LT));
    l.link((r2, RT), (r3, LB));
    let v = column(&mut l, [pj, c, bj]);
    l.link((r3, RT), (v[0], W));
    l.link((r3, RB), (v[1], W));
    l.link((r2, RB), (v[2], W));
    l.slot_out("kappa", (v[0], E));
    l.slot_out("phi", (v[1], E));
    l.slot_out("epsilon", (v[2], E));

    let mut g = Builder::default();
    let v = column(&mut g, [bj, c, pj]);
    g.slot_in("alpha", (v[0], W));
    g.slot_in("beta", (v[1], W));
    g.slot_in("gamma", (v[2], W));
    let out = braid(&mut g, [(v[0], E), (v[1], E), (v[2], E)]);
    g.slot_out("kappa", out[0]);
    g.slot_out("phi", out[1]);
    g.slot_out("epsilon", out[2]);
    (l.finish(&ORDER), g.finish(&ORDER))
}

pub fn caduceus_check(scheme: &WeightScheme, j: u8) -> Result<Verdict, IceError> {
    let star = scheme.family.central(scheme.n).unwrap_or(0);
    let (l, r) = caduceus_diagrams(j, star);
    compare("caduceus", &l, &r, scheme)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FishVariant {
    B,
    /// `ℭ*`, and `𝔇` without 1 in `λ`.
    CstarD,
    /// `𝔇` with 1 in `λ`.
    DWithOne,
}

impl FishVariant {
    pub fn name(self) -> &'static str {
        match self {
            FishVariant::B => "fish-B",
            FishVariant::CstarD => "fish-Cstar",
            FishVariant::DWithOne => "fish-D",
        }
    }
}

pub fn fish_diagrams(j: u8, variant: FishVariant) -> (Diagram, Diagram) {
    let (pj, bj) = (RowLabel::plain(j), RowLabel::bar(j));
    let mut t = Builder::default();
    let r = t.cross(bj, pj);
    let bend = t.bend(pj, bj);
    t.slot_in("alpha", (r, LT));
    t.slot_in("beta", (r, LB));
    t.link((r, RT), (bend, TOP));
    let mut b = Builder::default();
    let bare_bend = b.bend(bj, pj);
    b.slot_in("alpha", (bare_bend, TOP));
    if variant == FishVariant::B {
        t.link((r, RB), (bend, BOTTOM));
        b.slot_in("beta", (bare_bend, BOTTOM));
        return (t.finish(&["alpha", "beta"]), b.finish(&["alpha", "beta"]));
    }
    // the half column crosses the bottom strand; its top arrow points in for
    // ℭ* and out for 𝔇 with 1 in λ
    let top_in = variant == FishVariant::CstarD;
    let h = t.half(bj);
    t.link((r, RB), (h, W));
    t.fixed_in((h, N), top_in);
    t.slot_out("gamma", (h, S));
    t.link((h, E), (bend, BOTTOM));

    let h = b.half(pj);
    b.slot_in("beta", (h, W));
    b.fixed_in((h, N), top_in);
    b.slot_out("gamma", (h, S));
    b.link((h, E), (bare_bend, BOTTOM));
    let order = ["alpha", "beta", "gamma"];
    (t.finish(&order), b.finish(&order))
}

fn fish_closed_form(w: &RowWeights, variant: FishVariant) -> P {
    let i = P::i();
    match variant {
        FishVariant::B => &(&w.a1 - &(&i * &w.b2)) * &(&w.a2 + &(&i * &w.b1)),
        FishVariant::CstarD => &w.a2.pow(2) + &w.b1.pow(2),
        FishVariant::DWithOne => &w.a1.pow(2) + &w.b2.pow(2),
    }
}

fn require_bends(scheme: &WeightScheme, j: u8) -> Result<(), IceError> {
    for l in [RowLabel::plain(j), RowLabel::bar(j)] {
        for (name, map) in [("U", &scheme.bend_up), ("D", &scheme.bend_down)] {
            if map.get(&l).is_none_or(|p| p.is_zero()) {
                return Err(IceError::Input(format!("{name} at {l} must be nonzero")));
            }
        }
    }
    Ok(())
}

pub fn fish_check(scheme: &WeightScheme, j: u8, variant: FishVariant) -> Result<Verdict, IceError> {
    require_bends(scheme, j)?;
    let (t, b) = fish_diagrams(j, variant);
    let closed = fish_closed_form(scheme.row(RowLabel::plain(j))?, variant);
    ratio_check(variant.name(), &t, &b, scheme, &closed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum JellyfishVariant {
    C,
    Bstar,
    BC,
}

impl JellyfishVariant {
    pub fn name(self) -> &'static str {
        match self {
            JellyfishVariant::C => "jellyfish-C",
            JellyfishVariant::Bstar => "jellyfish-Bstar",
            JellyfishVariant::BC => "jellyfish-BC",
        }
    }
}

/// Rows `j̄, ★, j`: three crossings carry `j` to the top, where it bends onto
/// `j̄`. The central row ends at the corner (`ℭ`) or at a fixed boundary edge.
pub fn jellyfish_diagrams(j: u8, star: u8, variant: JellyfishVariant) -> (Diagram, Diagram) {
    let (pj, bj, c) = (RowLabel::plain(j), RowLabel::bar(j), RowLabel::plain(star));
    let mut t = Builder::default();
    let r1 = t.cross(bj, c);
    let r2 = t.cross(bj, pj);
    let r3 = t.cross(c, pj);
    let bend = t.bend(pj, bj);
    t.slot_in("alpha", (r1, LT));
    t.link((r1, RB), (r2, LT));
    t.link((r1, RT), (r3, LT));
    t.link((r2, RT), (r3, LB));
    t.link((r3, RT), (bend, TOP));

    let mut b = Builder::default();
    let bare_bend = b.bend(bj, pj);
    b.slot_in("alpha", (bare_bend, TOP));
    match variant {
        JellyfishVariant::C => {
            t.slot_in("beta", (r1, LB));
            t.slot_in("gamma", (r2, LB));
            let corner = t.node(NodeKind::Corner);
            let h = t.half(bj);
            t.link((r3, RB), (corner, WEST));
            t.link((corner, SOUTH), (h, N));
            t.link((r2, RB), (h, W));
            t.slot_out("delta", (h, S));
            t.link((h, E), (bend, BOTTOM));

            let corner = b.node(NodeKind::Corner);
            let h = b.half(pj);
            b.slot_in("beta", (corner, WEST));
            b.slot_in("gamma", (h, W));
            b.link((corner, SOUTH), (h, N));
            b.slot_out("delta", (h, S));
            b.link((h, E), (bare_bend, BOTTOM));
            let order = ["alpha", "beta", "gamma", "delta"];
            (t.finish(&order), b.finish(&order))
        }
        JellyfishVariant::Bstar | JellyfishVariant::BC => {
            // 𝔅*: the central row enters on the left and leaves on the
            // right; 𝔅ℭ: the reverse
            let enters = variant == JellyfishVariant::Bstar;
            t.fixed_in((r1, LB), enters);
            t.fixed_out((r3, RB), !enters);
            t.slot_in("beta", (r2, LB));
            t.link((r2, RB), (bend, BOTTOM));
            b.slot_in("beta", (bare_bend, BOTTOM));
            let order = ["alpha", "beta"];
            (t.finish(&order), b.finish(&order))
        }
    }
}

fn jellyfish_closed_form(w: &RowWeights, c: &RowWeights, variant: JellyfishVariant) -> P {
    let i = P::i();
    let (a0, b0) = (&c.a1, &c.b1);
    let s1 = &(&w.a1 * a0) + &(b0 * &w.b2);
    let s2 = &(a0 * &w.a2) + &(&w.b1 * b0);
    match variant {
        JellyfishVariant::C => {
            let f = &(&w.a1 - &(&i * &w.b2)) * &(&w.a2 + &(&i * &w.b1));
            &(&f * &s1) * &s2
        }
        JellyfishVariant::Bstar => &(&s2 * &s1) * &(&w.a1.pow(2) + &w.b2.pow(2)),
        JellyfishVariant::BC => &(&s2 * &s1) * &(&w.a2.pow(2) + &w.b1.pow(2)),
    }
}

pub fn jellyfish_check(scheme: &WeightScheme, j: u8, variant: JellyfishVariant) -> Result<Verdict, IceError> {
    require_bends(scheme, j)?;
    let star = match variant {
        JellyfishVariant::BC => scheme.n,
        _ => 0,
    };
    let (t, b) = jellyfish_diagrams(j, star, variant);
    let closed =
        jellyfish_closed_form(scheme.row(RowLabel::plain(j))?, scheme.row(RowLabel::plain(star))?, variant);
    ratio_check(variant.name(), &t, &b, scheme, &closed)
}
