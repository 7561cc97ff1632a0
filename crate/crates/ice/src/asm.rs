//! Sign matrices of states, inversion statistics on them, and the chain of
//! up-arrow column sets.

use std::collections::HashSet;

use bent_poly::{LaurentPoly, Var};
use serde::Serialize;

use crate::labels::{ColLabel, Family};
use crate::lattice::Config;
use crate::model::{build_model, EdgeGeom, ModelSpec};
use crate::state::{enumerate_states, state_weight, Caps, IceState};
use crate::weights::WeightScheme;
use crate::IceError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Symmetry {
    None,
    HalfTurn,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignMatrix {
    pub entries: Vec<Vec<i8>>,
    pub symmetry: Symmetry,
}

impl SignMatrix {
    pub fn new(entries: Vec<Vec<i8>>, symmetry: Symmetry) -> Self {
        SignMatrix { entries, symmetry }
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n).map(|i| (0..n).map(|j| i8::from(i == j)).collect()).collect();
        SignMatrix::new(entries, Symmetry::HalfTurn)
    }

    pub fn anti_identity(n: usize) -> Self {
        let entries = (0..n).map(|i| (0..n).map(|j| i8::from(i + j + 1 == n)).collect()).collect();
        SignMatrix::new(entries, Symmetry::HalfTurn)
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    fn lines(&self) -> Vec<Vec<i8>> {
        let mut out = self.entries.clone();
        out.extend((0..self.cols()).map(|j| self.entries.iter().map(|r| r[j]).collect()));
        out
    }

    /// Nonzero entries alternate in sign along every row and column.
    pub fn alternates(&self) -> bool {
        self.lines().iter().all(|l| {
            let nz: Vec<i8> = l.iter().copied().filter(|&x| x != 0).collect();
            nz.windows(2).all(|w| w[0] == -w[1]) && nz.iter().all(|x| x.abs() == 1)
        })
    }

    pub fn is_half_turn_symmetric(&self) -> bool {
        let (r, c) = (self.rows(), self.cols());
        (0..r).all(|i| (0..c).all(|j| self.entries[i][j] == self.entries[r - 1 - i][c - 1 - j]))
    }

    /// Square, with every row and column partial sum in {0, 1} and total 1.
    pub fn is_asm(&self) -> bool {
        self.rows() == self.cols()
            && self.lines().iter().all(|l| {
                let mut s = 0i32;
                for &x in l {
                    s += x as i32;
                    if !(0..=1).contains(&s) {
                        return false;
                    }
                }
                s == 1
            })
    }

    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|r| r.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.entries)
    }
}

fn entry(c: Config) -> i8 {
    match c {
        Config::C2 => 1,
        Config::C1 => -1,
        _ => 0,
    }
}

/// The sign matrix of a state. Bent families get their right half from
/// half-turn symmetry; the one cell this leaves open in `ℭ` takes the value
/// making its row sum 1. Completions of `𝔅*` need not alternate along the
/// central row, so no alternation check is made here.
pub fn state_to_matrix(spec: &ModelSpec, state: &IceState) -> Result<SignMatrix, IceError> {
    if spec.family == Family::BC {
        return Err(IceError::Input("no direct matrix export for the BC family".into()));
    }
    let cell = |r: usize, c: usize| spec.grid[r][c].map(|v| entry(state.configs[v]));
    let rows = spec.rows.len();
    if spec.family == Family::A {
        let entries =
            (0..rows).map(|r| (0..spec.columns.len()).map(|c| cell(r, c).unwrap_or(0)).collect()).collect();
        return Ok(SignMatrix::new(entries, Symmetry::None));
    }
    let full = spec.columns.iter().filter(|c| matches!(c, ColLabel::Full(_))).count();
    let half = spec.half_column();
    let cols = 2 * full + usize::from(half.is_some());
    let mut m: Vec<Vec<Option<i8>>> = vec![vec![None; cols]; rows];
    for (r, row) in m.iter_mut().enumerate() {
        for (c, x) in row.iter_mut().take(full).enumerate() {
            *x = cell(r, c);
        }
        if let Some(h) = half {
            row[full] = cell(r, h);
        }
    }
    for r in 0..rows {
        for c in 0..cols {
            let (rr, cc) = (rows - 1 - r, cols - 1 - c);
            match (m[r][c], m[rr][cc]) {
                (Some(a), Some(b)) if a != b => {
                    return Err(IceError::Verification(format!("cells ({r},{c}) and ({rr},{cc}) disagree")))
                }
                (Some(a), None) => m[rr][cc] = Some(a),
                _ => {}
            }
        }
    }
    let mut entries = Vec::with_capacity(rows);
    for (r, row) in m.iter().enumerate() {
        let missing: Vec<usize> = (0..cols).filter(|&c| row[c].is_none()).collect();
        let known: i32 = row.iter().flatten().map(|&x| x as i32).sum();
        let mut out: Vec<i8> = row.iter().map(|x| x.unwrap_or(0)).collect();
        match missing[..] {
            [] => {}
            [c] if (-1..=1).contains(&(1 - known)) => out[c] = (1 - known) as i8,
            _ => return Err(bad_fill(r)),
        }
        entries.push(out);
    }
    Ok(SignMatrix::new(entries, Symmetry::HalfTurn))
}

fn bad_fill(r: usize) -> IceError {
    IceError::Verification(format!("row {r} of the completion is not determined"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OkadaStats {
    pub inv: i64,
    pub minus_count: i64,
    pub i1_plus: i64,
    pub i1_minus: i64,
    pub i2: i64,
    /// `δ − Âδ` in half units, first `n` coordinates.
    pub x_exponent: Vec<i64>,
}

/// `δ(B_n)` in half units.
pub fn delta_b(n: usize) -> Vec<i64> {
    (0..2 * n).map(|k| 2 * (n as i64 - k as i64) - 1).collect()
}

pub fn okada_stats(m: &SignMatrix) -> Result<OkadaStats, IceError> {
    if !m.is_asm() || !m.is_half_turn_symmetric() || !m.rows().is_multiple_of(2) {
        return Err(IceError::Input("expected an even half-turn symmetric ASM".into()));
    }
    let size = m.rows();
    let n = size / 2;
    let a = |i: usize, j: usize| m.entries[i][j] as i64;
    let mut inv = 0;
    for i in 0..size {
        for j in 0..size {
            if a(i, j) == 0 {
                continue;
            }
            for k in i + 1..size {
                for l in 0..j {
                    inv += a(i, j) * a(k, l);
                }
            }
        }
    }
    let minus_count = m.entries.iter().flatten().filter(|&&x| x == -1).count() as i64;
    let quart = (0..n).flat_map(|i| (n..size).map(move |j| (i, j)));
    let (mut i1_plus, mut i1_minus) = (0, 0);
    for (i, j) in quart {
        match a(i, j) {
            1 => i1_plus += 1,
            -1 => i1_minus += 1,
            _ => {}
        }
    }
    let d = delta_b(n);
    let x_exponent = (0..n).map(|i| d[i] - (0..size).map(|j| a(i, j) * d[j]).sum::<i64>()).collect();
    Ok(OkadaStats { inv, minus_count, i1_plus, i1_minus, i2: inv - i1_plus - i1_minus, x_exponent })
}

pub fn okada_matrix_weight(m: &SignMatrix) -> Result<LaurentPoly, IceError> {
    let st = okada_stats(m)?;
    let s = st.minus_count;
    if (st.i2 - s) % 2 != 0 || s % 2 != 0 || st.inv < s {
        return Err(IceError::Verification(format!("statistics out of range: {st:?}")));
    }
    let t = LaurentPoly::var(Var::Tau);
    let sign = if (st.i1_plus + (st.i2 - s) / 2).rem_euclid(2) == 0 { 1 } else { -1 };
    let mut w = &LaurentPoly::int(sign) * &t.pow((st.inv - s) as u32);
    w = &w * &(&LaurentPoly::one() - &t.pow(2)).pow((s / 2) as u32);
    for (j, &e) in st.x_exponent.iter().enumerate() {
        w = &w * &LaurentPoly::var_raw(Var::X(j as u8 + 1), e as i32);
    }
    Ok(w)
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub n: u8,
    pub states: usize,
    /// Distinct matrices among the images.
    pub matrices: usize,
    /// Matrix weight equals lattice weight on every state.
    pub pass: bool,
    /// `#(−1) = 2·#c1`, `inv − #(−1) = #b`, and `i1⁺ − i1⁻ = #D` on every state.
    pub lemmas: bool,
    /// First mismatching state as edge directions.
    pub witness: Option<serde_json::Value>,
}

/// Matrix weight against lattice weight on every state of `𝔅^ρ`, with the
/// counting lemmas relating matrix statistics to vertex counts.
pub fn bijection_check(n: u8, scheme: &WeightScheme, caps: &Caps) -> Result<BijectionReport, IceError> {
    let spec = build_model(Family::B, &crate::labels::StrictPartition::rho(n));
    let states = enumerate_states(&spec, caps)?;
    let mut seen = HashSet::new();
    let mut witness = None;
    let mut lemmas = true;
    for s in &states {
        let m = state_to_matrix(&spec, s)?;
        let lhs = okada_matrix_weight(&m)?;
        if witness.is_none() && lhs != state_weight(&spec.lattice, s, scheme)? {
            witness = Some(s.to_json(&spec));
        }
        let st = okada_stats(&m)?;
        let b = (s.count(Config::B1) + s.count(Config::B2)) as i64;
        lemmas &= st.minus_count == 2 * s.count(Config::C1) as i64
            && st.inv - st.minus_count == b
            && st.i1_plus - st.i1_minus == s.count(Config::D) as i64;
        seen.insert(m.entries);
    }
    Ok(BijectionReport {
        n,
        states: states.len(),
        matrices: seen.len(),
        pass: witness.is_none(),
        lemmas,
        witness,
    })
}

/// Up-arrow column labels between consecutive rows, top boundary first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionChain {
    pub chain: Vec<Vec<u32>>,
}

/// Whether the parts of `a` and `b` (both decreasing) interleave.
pub fn interleaves(a: &[u32], b: &[u32]) -> bool {
    let check = |big: &[u32], small: &[u32]| {
        big.len() >= small.len()
            && big.len() <= small.len() + 1
            && small.iter().enumerate().all(|(k, &s)| big[k] >= s && big.get(k + 1).is_none_or(|&x| s >= x))
    };
    check(a, b) || check(b, a)
}

pub fn interleave_chain(spec: &ModelSpec, state: &IceState) -> Result<PartitionChain, IceError> {
    if spec.family != Family::B {
        return Err(IceError::Input("partition chains are defined for the B family".into()));
    }
    let rows = spec.rows.len();
    let chain: Vec<Vec<u32>> = (0..=rows)
        .map(|slot| {
            spec.columns
                .iter()
                .enumerate()
                .filter(|&(col, _)| {
                    let e = spec.edge_at(EdgeGeom::V { col, slot }).expect("vertical edge");
                    spec.points_up(e, &state.bits)
                })
                .map(|(_, c)| c.value())
                .collect()
        })
        .collect();
    let n = spec.n() as i64;
    for (i, w) in chain.windows(2).enumerate() {
        if !interleaves(&w[0], &w[1]) {
            return Err(IceError::Verification(format!(
                "chain steps {} and {} do not interleave",
                i + 1,
                i + 2
            )));
        }
    }
    for i in 1..=rows + 1 {
        let diff = chain[i - 1].len() as i64 - chain[rows + 1 - i].len() as i64;
        if diff != n + 1 - i as i64 {
            return Err(IceError::Verification(format!("length rule fails at step {i}")));
        }
    }
    Ok(PartitionChain { chain })
}

impl PartitionChain {
    /// Indicator rows: entry `j` is 1 when column label `λ_1 − j` is present.
    pub fn b_matrix(&self, largest: u32) -> Vec<Vec<i8>> {
        self.chain
            .iter()
            .map(|p| (0..largest).map(|j| i8::from(p.contains(&(largest - j)))).collect())
            .collect()
    }

    /// Differences of consecutive indicator rows.
    pub fn c_matrix(&self, largest: u32) -> Vec<Vec<i8>> {
        let b = self.b_matrix(largest);
        b.windows(2).map(|w| w[0].iter().zip(&w[1]).map(|(x, y)| x - y).collect()).collect()
    }
}
