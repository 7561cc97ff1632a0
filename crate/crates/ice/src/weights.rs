//! Boltzmann weight schemes.

use std::collections::BTreeMap;

use bent_poly::{LaurentPoly, Var};
use serde::Serialize;

use crate::labels::{Family, RowLabel};
use crate::lattice::{Config, NodeKind};
use crate::IceError;

type P = LaurentPoly;

/// The six weights of one spectral index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowWeights {
    pub a1: P,
    pub a2: P,
    pub b1: P,
    pub b2: P,
    pub c1: P,
    pub c2: P,
}

impl RowWeights {
    /// Free-fermion row with `c2 = 1`.
    pub fn free_fermion(a1: P, a2: P, b1: P, b2: P) -> Self {
        let c1 = &(&a1 * &a2) + &(&b1 * &b2);
        RowWeights { a1, a2, b1, b2, c1, c2: P::one() }
    }

    pub fn constants(v: [i64; 6]) -> Self {
        let [a1, a2, b1, b2, c1, c2] = v.map(P::int);
        RowWeights { a1, a2, b1, b2, c1, c2 }
    }

    /// The weights seen from the barred row.
    pub fn barred(&self) -> Self {
        RowWeights {
            a1: self.a2.clone(),
            a2: self.a1.clone(),
            b1: self.b2.clone(),
            b2: self.b1.clone(),
            c1: self.c1.clone(),
            c2: self.c2.clone(),
        }
    }

    pub fn get(&self, c: Config) -> Option<&P> {
        Some(match c {
            Config::A1 => &self.a1,
            Config::A2 => &self.a2,
            Config::B1 => &self.b1,
            Config::B2 => &self.b2,
            Config::C1 => &self.c1,
            Config::C2 => &self.c2,
            _ => return None,
        })
    }

    /// `a1 a2 + b1 b2 - c1 c2`.
    pub fn delta(&self) -> P {
        &(&(&self.a1 * &self.a2) + &(&self.b1 * &self.b2)) - &(&self.c1 * &self.c2)
    }

    pub fn map(&self, f: impl Fn(&P) -> P) -> Self {
        RowWeights {
            a1: f(&self.a1),
            a2: f(&self.a2),
            b1: f(&self.b1),
            b2: f(&self.b2),
            c1: f(&self.c1),
            c2: f(&self.c2),
        }
    }
}

/// Weight of an R-vertex configuration with strand `j` entering top-left and
/// `k` entering bottom-left.
pub fn cross_weight(cfg: u8, j: &RowWeights, k: &RowWeights) -> P {
    match cfg {
        1 => &(&k.a1 * &j.a2) + &(&j.b1 * &k.b2),
        2 => &(&j.a1 * &k.a2) + &(&k.b1 * &j.b2),
        3 => &j.c1 * &k.c2,
        4 => &k.c1 * &j.c2,
        5 => &(&j.a1 * &k.b2) - &(&k.a1 * &j.b2),
        6 => &(&j.a2 * &k.b1) - &(&k.a2 * &j.b1),
        _ => panic!("no crossing configuration {cfg}"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    Generic,
    Deformation,
    Okada,
    Character,
    Tokuyama,
    Custom,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Generic => "generic",
            Regime::Deformation => "deformation",
            Regime::Okada => "okada",
            Regime::Character => "character",
            Regime::Tokuyama => "tokuyama",
            Regime::Custom => "custom",
        }
    }
}

#[derive(Clone, Debug)]
pub struct WeightScheme {
    pub family: Family,
    pub n: u8,
    pub regime: Regime,
    pub rows: BTreeMap<RowLabel, RowWeights>,
    pub bend_up: BTreeMap<RowLabel, P>,
    pub bend_down: BTreeMap<RowLabel, P>,
    pub corner_l: Option<P>,
    pub corner_r: Option<P>,
}

fn gen_row(j: u8) -> RowWeights {
    RowWeights::free_fermion(P::var(Var::A1(j)), P::var(Var::A2(j)), P::var(Var::B1(j)), P::var(Var::B2(j)))
}

fn gen_central(j: u8) -> RowWeights {
    let a = P::var(Var::A(j));
    let b = P::var(Var::B(j));
    RowWeights::free_fermion(a.clone(), a, b.clone(), b)
}

fn def_row(j: u8) -> RowWeights {
    let it = &P::i() * &P::var(Var::T(j));
    RowWeights {
        a1: P::one(),
        a2: P::one(),
        b1: &it * &P::var(Var::X(j)),
        b2: &it * &P::var_raw(Var::X(j), -2),
        c1: &P::one() - &P::var(Var::T(j)).pow(2),
        c2: P::one(),
    }
}

fn def_central(j: u8) -> RowWeights {
    let b = &(&P::i() * &P::var(Var::T(j))) * &P::var(Var::X(j));
    RowWeights {
        a1: P::one(),
        a2: P::one(),
        b1: b.clone(),
        b2: b.clone(),
        c1: &P::one() + &(&b * &b),
        c2: P::one(),
    }
}

/// `D` from the bend table (with `U = 1`).
pub fn table_bend_down(family: Family) -> P {
    match family {
        Family::B | Family::C => P::i(),
        _ => P::one(),
    }
}

impl WeightScheme {
    fn assemble(
        family: Family,
        n: u8,
        regime: Regime,
        row: impl Fn(u8) -> RowWeights,
        central: impl Fn(u8) -> RowWeights,
    ) -> Self {
        let mut rows = BTreeMap::new();
        let c = family.central(n);
        for j in 1..=n {
            if Some(j) == c {
                continue;
            }
            let w = row(j);
            if family.is_bent() {
                rows.insert(RowLabel::bar(j), w.barred());
            }
            rows.insert(RowLabel::plain(j), w);
        }
        if let Some(c) = c {
            rows.insert(RowLabel::plain(c), central(c));
        }
        let mut s = WeightScheme {
            family,
            n,
            regime,
            rows,
            bend_up: BTreeMap::new(),
            bend_down: BTreeMap::new(),
            corner_l: None,
            corner_r: None,
        };
        if family.is_bent() {
            s.set_bends(P::one(), table_bend_down(family));
        }
        if family == Family::C {
            let w = &s.rows[&RowLabel::plain(0)];
            s.corner_l = Some(&w.a1 - &(&P::i() * &w.b1));
            s.corner_r = Some(P::one());
        }
        s
    }

    /// Sets `U` and `D` on every bend label `j` and `j̄`.
    pub fn set_bends(&mut self, up: P, down: P) {
        let c = self.family.central(self.n);
        for j in 1..=self.n {
            if Some(j) == c {
                continue;
            }
            for l in [RowLabel::plain(j), RowLabel::bar(j)] {
                self.bend_up.insert(l, up.clone());
                self.bend_down.insert(l, down.clone());
            }
        }
    }

    pub fn generic(family: Family, n: u8) -> Self {
        Self::assemble(family, n, Regime::Generic, gen_row, gen_central)
    }

    pub fn deformation(family: Family, n: u8) -> Self {
        Self::assemble(family, n, Regime::Deformation, def_row, def_central)
    }

    /// Deformation weights followed by the Okada specialization.
    pub fn okada(family: Family, n: u8) -> Self {
        let mut sigma = BTreeMap::new();
        // values are for the storage unit x^{1/2}, t^{1/2}
        match family {
            Family::C => {
                sigma.insert(Var::X(0), P::i());
            }
            Family::Bstar => {
                sigma.insert(Var::X(0), P::one());
            }
            Family::BC => {
                sigma.insert(Var::X(n), P::one());
            }
            _ => {}
        }
        let t_image = match family {
            Family::B | Family::C => P::var(Var::Tau),
            _ => &P::i() * &P::var_raw(Var::Tau, 1),
        };
        for j in 0..=n {
            sigma.insert(Var::T(j), t_image.clone());
        }
        let mut s = Self::deformation(family, n).substituted(&sigma);
        s.regime = Regime::Okada;
        s
    }

    /// Deformation weights at `t_j = 1`.
    pub fn character(family: Family, n: u8) -> Self {
        let mut sigma = BTreeMap::new();
        match family {
            Family::C => {
                sigma.insert(Var::X(0), P::i());
            }
            Family::Bstar => {
                sigma.insert(Var::X(0), P::one());
            }
            Family::BC => {
                sigma.insert(Var::X(n), P::one());
            }
            _ => {}
        }
        for j in 0..=n {
            sigma.insert(Var::T(j), P::one());
        }
        let mut s = Self::deformation(family, n).substituted(&sigma);
        s.regime = Regime::Character;
        s
    }

    /// Type-A weights for the deformed Weyl denominator identity:
    /// `a1 = 1, a2 = x_j, b1 = t, b2 = x_j, c1 = t + 1, c2 = x_j`.
    /// Moving `x_j` from `c1` to `c2` multiplies each row by `x_j`, which
    /// accounts for columns being labelled from 1.
    pub fn tokuyama(n: u8) -> Self {
        let t = P::var(Var::Tau);
        let row = |j: u8| {
            let x = P::var(Var::X(j));
            RowWeights {
                a1: P::one(),
                a2: x.clone(),
                b1: t.clone(),
                b2: x.clone(),
                c1: &t + &P::one(),
                c2: x.clone(),
            }
        };
        let mut s = Self::assemble(Family::A, n, Regime::Tokuyama, row, gen_central);
        s.regime = Regime::Tokuyama;
        s
    }

    /// Every weight equal to 1.
    pub fn all_ones(family: Family, n: u8) -> Self {
        let ones = |_| RowWeights::constants([1; 6]);
        let mut s = Self::assemble(family, n, Regime::Custom, ones, ones);
        if family.is_bent() {
            s.set_bends(P::one(), P::one());
        }
        if family == Family::C {
            s.corner_l = Some(P::one());
        }
        s
    }

    pub fn by_name(name: &str, family: Family, n: u8) -> Result<Self, IceError> {
        Ok(match name {
            "generic" => Self::generic(family, n),
            "deformation" => Self::deformation(family, n),
            "okada" => Self::okada(family, n),
            "character" => Self::character(family, n),
            "tokuyama" => {
                if family != Family::A {
                    return Err(IceError::Input("tokuyama weights are for family A".into()));
                }
                Self::tokuyama(n)
            }
            "ones" => Self::all_ones(family, n),
            _ => return Err(IceError::Input(format!("unknown scheme `{name}`"))),
        })
    }

    /// Applies a substitution to every weight.
    pub fn substituted(&self, sigma: &BTreeMap<Var, P>) -> Self {
        let sub = |p: &P| p.substitute(sigma).expect("unit substitution");
        WeightScheme {
            family: self.family,
            n: self.n,
            regime: self.regime,
            rows: self.rows.iter().map(|(k, w)| (*k, w.map(sub))).collect(),
            bend_up: self.bend_up.iter().map(|(k, p)| (*k, sub(p))).collect(),
            bend_down: self.bend_down.iter().map(|(k, p)| (*k, sub(p))).collect(),
            corner_l: self.corner_l.as_ref().map(sub),
            corner_r: self.corner_r.as_ref().map(sub),
        }
    }

    pub fn row(&self, label: RowLabel) -> Result<&RowWeights, IceError> {
        self.rows.get(&label).ok_or_else(|| IceError::MissingWeight(format!("row {label}")))
    }

    pub fn delta(&self, label: RowLabel) -> Result<P, IceError> {
        Ok(self.row(label)?.delta())
    }

    /// Weight of a node in a configuration.
    pub fn vertex_weight(&self, kind: NodeKind, cfg: Config) -> Result<P, IceError> {
        let missing = || IceError::MissingWeight(format!("{} at {:?}", cfg.name(), kind));
        match (kind, cfg) {
            (NodeKind::Six { row, .. }, _) => self.row(row)?.get(cfg).cloned().ok_or_else(missing),
            (NodeKind::Cross { top, bottom }, Config::Cross(k)) => {
                Ok(cross_weight(k, self.row(top)?, self.row(bottom)?))
            }
            (NodeKind::Bend { top, .. }, Config::U) => self.bend_up.get(&top).cloned().ok_or_else(missing),
            (NodeKind::Bend { top, .. }, Config::D) => self.bend_down.get(&top).cloned().ok_or_else(missing),
            (NodeKind::Corner, Config::L) => self.corner_l.clone().ok_or_else(missing),
            (NodeKind::Corner, Config::R) => self.corner_r.clone().ok_or_else(missing),
            _ => Err(missing()),
        }
    }

    /// Lists every violated constraint; empty when the scheme is valid.
    pub fn check(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (label, w) in &self.rows {
            if !w.delta().is_zero() {
                out.push(format!("free-fermion: Delta at row {label} is {}", w.delta()));
            }
            if label.barred {
                if let Some(p) = self.rows.get(&label.flipped()) {
                    if &p.barred() != w {
                        out.push(format!("symmetry 1: rows {} and {label} do not match", label.flipped()));
                    }
                }
            }
        }
        if let Some(c) = self.family.central(self.n) {
            if let Ok(w) = self.row(RowLabel::plain(c)) {
                if w.a1 != w.a2 || w.b1 != w.b2 {
                    out.push(format!("central row {c}: a1 = a2 and b1 = b2 fail"));
                }
                let sq = &(&w.a1 * &w.a1) + &(&w.b1 * &w.b1);
                if &sq * &w.c2 != w.c1 {
                    out.push(format!("central row {c}: c1 differs from a^2 + b^2"));
                }
            }
        }
        for (name, map) in [("U", &self.bend_up), ("D", &self.bend_down)] {
            for (label, p) in map {
                if label.barred {
                    if let Some(q) = map.get(&label.flipped()) {
                        if p != q {
                            out.push(format!(
                                "symmetry 2: {name} differs on {} and {label}",
                                label.flipped()
                            ));
                        }
                    }
                }
            }
        }
        if self.family.is_bent() {
            let d = table_bend_down(self.family);
            for (label, p) in &self.bend_up {
                if !p.is_one() {
                    out.push(format!("bend table: U at {label} is {p}, expected 1"));
                }
            }
            for (label, p) in &self.bend_down {
                if *p != d {
                    out.push(format!("bend table: D at {label} is {p}, expected {d}"));
                }
            }
        }
        if self.family == Family::C {
            if self.corner_r.as_ref().is_none_or(|r| !r.is_one()) {
                out.push("bend table: R must be 1".into());
            }
            if let Ok(w) = self.row(RowLabel::plain(0)) {
                let l = &w.a1 - &(&P::i() * &w.b1);
                if self.corner_l.as_ref() != Some(&l) {
                    out.push("bend table: L must be a - i b at row 0".into());
                }
            }
        }
        out
    }

    /// Entry table for golden files.
    pub fn to_json(&self) -> serde_json::Value {
        let mut rows = serde_json::Map::new();
        for (label, w) in &self.rows {
            rows.insert(
                label.to_string(),
                serde_json::json!({
                    "a1": w.a1.to_json(), "a2": w.a2.to_json(),
                    "b1": w.b1.to_json(), "b2": w.b2.to_json(),
                    "c1": w.c1.to_json(), "c2": w.c2.to_json(),
                }),
            );
        }
        let bends = |m: &BTreeMap<RowLabel, P>| -> serde_json::Value {
            m.iter().map(|(k, p)| (k.to_string(), p.to_json())).collect::<serde_json::Map<_, _>>().into()
        };
        serde_json::json!({
            "family": self.family.name(),
            "n": self.n,
            "regime": self.regime.name(),
            "rows": rows,
            "U": bends(&self.bend_up),
            "D": bends(&self.bend_down),
            "L": self.corner_l.as_ref().map(P::to_json),
            "R": self.corner_r.as_ref().map(P::to_json),
        })
    }
}
