//! TikZ export of states, and reading states back from arrow drawings.
//!
//! Horizontal edges sit at integer `x` between vertices at half-integer `x`;
//! vertical edges sit at half-integer `y`. An arrow tip at an edge position
//! gives that edge's orientation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::lattice::Lattice;
use crate::model::{EdgeGeom, ModelSpec};
use crate::state::IceState;
use crate::IceError;

/// Renders an admissible state. Every edge gets an arrowhead at its midpoint.
pub fn emit(spec: &ModelSpec, state: &IceState) -> String {
    let mut out = String::from("\\begin{tikzpicture}\n");
    for (g, &bit) in spec.geom.iter().zip(&state.bits) {
        let line = match *g {
            EdgeGeom::H { row, slot } => {
                let (x, y) = (slot as f64, 0.0 - row as f64);
                format!("\\draw [{}-] ({x},{y}) -- ({},{y});", if bit { '>' } else { '<' }, x + 0.5)
            }
            EdgeGeom::V { col, slot } => {
                let (x, y) = (col as f64 + 0.5, 0.5 - slot as f64);
                format!("\\draw [{}-] ({x},{y}) -- ({x},{});", if bit { '>' } else { '<' }, y - 0.5)
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    for &(top, bottom, _) in &spec.bends {
        let x = row_end(spec, top);
        let r = (bottom - top) as f64 / 2.0;
        let _ = writeln!(out, "\\draw ({x},{}) arc (90:-90:{r});", 0.0 - top as f64);
    }
    if spec.corner.is_some() {
        if let Some(c) = spec.central {
            let _ =
                writeln!(out, "\\fill ({},{}) circle (2pt);", row_end(spec, c) as f64 + 0.5, 0.0 - c as f64);
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

fn row_end(spec: &ModelSpec, row: usize) -> usize {
    spec.grid[row].iter().filter(|v| v.is_some()).count()
}

#[derive(Clone, Copy, Debug)]
enum Seg {
    Line((f64, f64), (f64, f64)),
    Arc((f64, f64), f64, f64, f64),
}

#[derive(Clone, Debug)]
struct Draw {
    start: Option<char>,
    end: Option<char>,
    segs: Vec<Seg>,
}

fn num(s: &str) -> Result<f64, IceError> {
    s.trim().parse().map_err(|_| IceError::Input(format!("bad number {s:?}")))
}

fn pair(s: &str, sep: char) -> Result<Vec<f64>, IceError> {
    s.split(sep).map(num).collect()
}

fn parse_draw(cmd: &str) -> Result<Option<Draw>, IceError> {
    let Some(at) = cmd.find("\\draw") else {
        return Ok(None);
    };
    let rest = &cmd[at + "\\draw".len()..];
    let rest = rest.trim().trim_end_matches(';');
    let (opts, path) = match rest.strip_prefix('[') {
        Some(r) => {
            // options may nest braces and brackets; find the matching ']'
            let mut depth = 0;
            let mut close = None;
            for (i, ch) in r.char_indices() {
                match ch {
                    '{' | '[' => depth += 1,
                    '}' => depth -= 1,
                    ']' if depth == 0 => {
                        close = Some(i);
                        break;
                    }
                    ']' => depth -= 1,
                    _ => {}
                }
            }
            let i = close.ok_or_else(|| IceError::Input("unclosed draw options".into()))?;
            (&r[..i], &r[i + 1..])
        }
        None => ("", rest),
    };
    let tips = opts.split(',').next().unwrap_or("").trim();
    let (start, end) = match tips.split_once('-') {
        Some((a, b)) if a.len() <= 1 && b.len() <= 1 => {
            let tip = |s: &str| s.chars().next().filter(|c| matches!(c, '<' | '>'));
            (tip(a), tip(b))
        }
        _ => (None, None),
    };
    let mut segs = Vec::new();
    let mut cur: Option<(f64, f64)> = None;
    let mut s = path.trim();
    while !s.is_empty() {
        if let Some(r) = s.strip_prefix("--") {
            s = r.trim_start();
        } else if let Some(r) = s.strip_prefix("arc") {
            let r = r.trim_start();
            let close = r.find(')').ok_or_else(|| IceError::Input("bad arc".into()))?;
            let v = pair(&r[1..close], ':')?;
            let [a0, a1, rad] = v[..] else {
                return Err(IceError::Input("arc needs start:end:radius".into()));
            };
            let p = cur.ok_or_else(|| IceError::Input("arc without a start point".into()))?;
            segs.push(Seg::Arc(p, a0, a1, rad));
            let (c0, c1) = (a0.to_radians(), a1.to_radians());
            let centre = (p.0 - rad * c0.cos(), p.1 - rad * c0.sin());
            cur = Some((centre.0 + rad * c1.cos(), centre.1 + rad * c1.sin()));
            s = r[close + 1..].trim_start();
        } else if s.starts_with('(') {
            let close = s.find(')').ok_or_else(|| IceError::Input("bad point".into()))?;
            let v = pair(&s[1..close], ',')?;
            let [x, y] = v[..] else {
                return Err(IceError::Input("point needs two coordinates".into()));
            };
            if let Some(p) = cur {
                segs.push(Seg::Line(p, (x, y)));
            }
            cur = Some((x, y));
            s = s[close + 1..].trim_start();
        } else {
            return Err(IceError::Input(format!("unsupported path element near {s:?}")));
        }
    }
    Ok(Some(Draw { start, end, segs }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    H(i64, i64),
    V(i64, i64),
}

fn half_units(v: f64) -> i64 {
    (v * 2.0).round() as i64
}

/// Tip position and travel direction at the start or end of a segment.
fn tip_at(seg: Seg, at_end: bool) -> ((f64, f64), (f64, f64), bool) {
    match seg {
        Seg::Line(a, b) => {
            let d = (b.0 - a.0, b.1 - a.1);
            (if at_end { b } else { a }, d, d.1.abs() < 1e-9)
        }
        Seg::Arc(p, a0, a1, r) => {
            let ang = if at_end { a1 } else { a0 }.to_radians();
            let sign = (a1 - a0).signum();
            let c = (p.0 - r * a0.to_radians().cos(), p.1 - r * a0.to_radians().sin());
            let q = (c.0 + r * ang.cos(), c.1 + r * ang.sin());
            (q, (-ang.sin() * sign, ang.cos() * sign), true)
        }
    }
}

/// Edge orientations read from a drawing, keyed by model geometry.
///
/// A `>` tip points along the path and `<` against it. Rows are numbered from
/// the highest horizontal line, slots from the leftmost horizontal point.
pub fn parse_orientations(src: &str) -> Result<Vec<(EdgeGeom, bool)>, IceError> {
    let draws: Vec<Draw> = src
        .split(';')
        .filter(|c| !c.trim().is_empty())
        .map(parse_draw)
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut tips: BTreeMap<Key, bool> = BTreeMap::new();
    let (mut xleft, mut ytop) = (f64::INFINITY, f64::NEG_INFINITY);
    for d in &draws {
        for s in &d.segs {
            if let Seg::Line(a, b) = *s {
                if (a.1 - b.1).abs() < 1e-9 {
                    xleft = xleft.min(a.0.min(b.0));
                    ytop = ytop.max(a.1);
                }
            }
        }
    }
    for d in &draws {
        let ends = [(d.start, d.segs.first(), false), (d.end, d.segs.last(), true)];
        for (tip, seg, at_end) in ends {
            let (Some(tip), Some(&seg)) = (tip, seg) else { continue };
            let (p, dir, horizontal) = tip_at(seg, at_end);
            let dir = if tip == '>' { dir } else { (-dir.0, -dir.1) };
            let (key, bit) = if horizontal {
                (Key::H(half_units(p.0), half_units(p.1)), dir.0 > 0.0)
            } else {
                (Key::V(half_units(p.0), half_units(p.1)), dir.1 < 0.0)
            };
            if let Some(&old) = tips.get(&key) {
                if old != bit {
                    return Err(IceError::Input(format!("conflicting arrows at {key:?}")));
                }
            }
            tips.insert(key, bit);
        }
    }
    let (xl, yt) = (half_units(xleft), half_units(ytop));
    let idx = |v: i64| -> Result<usize, IceError> {
        if v < 0 || v % 2 != 0 {
            return Err(IceError::Input("arrow off the lattice".into()));
        }
        Ok((v / 2) as usize)
    };
    tips.into_iter()
        .map(|(k, bit)| {
            let g = match k {
                Key::H(x, y) => EdgeGeom::H { row: idx(yt - y)?, slot: idx(x - xl)? },
                Key::V(x, y) => EdgeGeom::V { col: idx(x - xl - 1)?, slot: idx(yt + 1 - y)? },
            };
            Ok((g, bit))
        })
        .collect()
}

/// Converts parsed orientations to fixed bits on the model's edges.
pub fn to_partial(spec: &ModelSpec, tips: &[(EdgeGeom, bool)]) -> Result<Vec<Option<bool>>, IceError> {
    let mut out = vec![None; spec.lattice.edges.len()];
    for &(g, bit) in tips {
        let e = spec
            .edge_at(g)
            .ok_or_else(|| IceError::Input(format!("no edge at {g:?} in {}^{}", spec.family, spec.lambda)))?;
        out[e] = Some(bit);
    }
    Ok(out)
}

/// Admissible states agreeing with a partial orientation.
pub fn completions(spec: &ModelSpec, partial: &[Option<bool>]) -> Vec<IceState> {
    let mut lat: Lattice = spec.lattice.clone();
    for (e, &b) in partial.iter().enumerate() {
        if let Some(b) = b {
            if lat.edges[e].fixed.is_some_and(|f| f != b) {
                return Vec::new();
            }
            lat.set_fixed(e, Some(b));
        }
    }
    let mut out = Vec::new();
    lat.for_each_state(|bits| out.push(IceState::new(&spec.lattice, bits)));
    out
}

/// The unique state of `spec` drawn in `src`.
pub fn read_state(spec: &ModelSpec, src: &str) -> Result<IceState, IceError> {
    let partial = to_partial(spec, &parse_orientations(src)?)?;
    let mut found = completions(spec, &partial);
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(IceError::Verification("drawing is not an admissible state".into())),
        k => Err(IceError::Verification(format!("drawing leaves {k} admissible completions"))),
    }
}
