//! Weyl groups as signed permutations, Weyl characters, the bijection between
//! nonzero states and group elements under character weights, and the
//! type-A deformed denominator identity.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use bent_poly::{LaurentPoly, Var};
use serde::Serialize;

use crate::labels::{Family, RowLabel, StrictPartition};
use crate::lattice::Config;
use crate::model::{build_model, EdgeGeom, ModelSpec};
use crate::state::{enumerate_states, partition_function, state_weights, Caps, IceState};
use crate::weights::WeightScheme;
use crate::IceError;

type P = LaurentPoly;

/// Weyl group flavour: all sign vectors, or evenly many `−1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupType {
    BC,
    D,
}

/// Cartan type fixing the Weyl vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Cartan {
    B,
    C,
    D,
}

impl Cartan {
    pub fn group(self) -> GroupType {
        match self {
            Cartan::D => GroupType::D,
            _ => GroupType::BC,
        }
    }

    /// The Weyl vector in half units.
    pub fn rho(self, n: usize) -> Vec<i64> {
        let n = n as i64;
        (0..n)
            .map(|k| match self {
                Cartan::B => 2 * (n - k) - 1,
                Cartan::C => 2 * (n - k),
                Cartan::D => 2 * (n - k - 1),
            })
            .collect()
    }
}

/// `(σ, v)` acting on vectors by `(w·λ)_j = v_j λ_{σ(j)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedPermutation {
    /// `sigma[j - 1] = σ(j)`, 1-based values.
    pub sigma: Vec<u8>,
    pub v: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { sigma: (1..=n as u8).collect(), v: vec![1; n] }
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    /// `(σ₁, v₁)(σ₂, v₂) = (σ₂σ₁, v₁ · v₂^{σ₁})`.
    pub fn compose(&self, other: &Self) -> Self {
        let sigma = self.sigma.iter().map(|&s| other.sigma[s as usize - 1]).collect();
        let v = self.v.iter().zip(&self.sigma).map(|(&a, &s)| a * other.v[s as usize - 1]).collect();
        SignedPermutation { sigma, v }
    }

    pub fn act(&self, lambda: &[i64]) -> Vec<i64> {
        self.sigma.iter().zip(&self.v).map(|(&s, &e)| e as i64 * lambda[s as usize - 1]).collect()
    }

    pub fn minus_count(&self) -> usize {
        self.v.iter().filter(|&&e| e < 0).count()
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, group: GroupType) -> u32 {
        let n = self.n();
        let negative = |r: &[i64]| r.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0);
        let mut roots: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for s in [-1, 1] {
                    let mut r = vec![0; n];
                    r[i] = 1;
                    r[j] = s;
                    roots.push(r);
                }
            }
            if group == GroupType::BC {
                let mut r = vec![0; n];
                r[i] = 1;
                roots.push(r);
            }
        }
        roots.iter().filter(|r| negative(&self.act(r))).count() as u32
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .sigma
            .iter()
            .zip(&self.v)
            .map(|(s, v)| if *v < 0 { format!("-{s}") } else { s.to_string() })
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n as u8);
            out.push(q);
        }
    }
    out.sort();
    out
}

pub fn weyl_group(group: GroupType, n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for sigma in permutations(n) {
        for mask in 0u32..1 << n {
            let v: Vec<i8> = (0..n).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect();
            let w = SignedPermutation { sigma: sigma.clone(), v };
            if group == GroupType::BC || w.minus_count().is_multiple_of(2) {
                out.push(w);
            }
        }
    }
    out
}

/// Simple reflections: adjacent transpositions, then `s_n`.
pub fn simple_reflections(group: GroupType, n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut w = SignedPermutation::identity(n);
        w.sigma.swap(i, i + 1);
        out.push(w);
    }
    match group {
        GroupType::BC if n >= 1 => {
            let mut w = SignedPermutation::identity(n);
            w.v[n - 1] = -1;
            out.push(w);
        }
        GroupType::D if n >= 2 => {
            let mut w = SignedPermutation::identity(n);
            w.sigma.swap(n - 2, n - 1);
            w.v[n - 2] = -1;
            w.v[n - 1] = -1;
            out.push(w);
        }
        _ => {}
    }
    out
}

/// Word lengths by breadth-first search over simple reflections.
pub fn word_lengths(group: GroupType, n: usize) -> HashMap<SignedPermutation, u32> {
    let gens = simple_reflections(group, n);
    let mut dist = HashMap::new();
    let id = SignedPermutation::identity(n);
    dist.insert(id.clone(), 0);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for s in &gens {
            let u = w.compose(s);
            if !dist.contains_key(&u) {
                dist.insert(u.clone(), d + 1);
                queue.push_back(u);
            }
        }
    }
    dist
}

/// `x^e` for an exponent vector in half units, coordinates `x_1, x_2, …`.
fn x_pow(e: &[i64]) -> P {
    let mut out = P::one();
    for (j, &k) in e.iter().enumerate() {
        out = &out * &P::var_raw(Var::X(j as u8 + 1), k as i32);
    }
    out
}

/// `Σ_w (−1)^{ℓ(w)} x^{w(μ + ρ)}`, with `μ` in whole units.
pub fn alternant(cartan: Cartan, n: usize, mu: &[u32]) -> P {
    alternant_in(cartan.group(), cartan, n, mu)
}

/// The alternant over `group` with the Weyl vector of `cartan`.
pub fn alternant_in(group: GroupType, cartan: Cartan, n: usize, mu: &[u32]) -> P {
    alternant_of(group, &shifted(cartan, n, mu))
}

/// The alternant of an exponent vector given in half units.
pub fn alternant_of(group: GroupType, lam: &[i64]) -> P {
    let terms: Vec<P> = weyl_group(group, lam.len())
        .iter()
        .map(|w| {
            let s = if w.length(group).is_multiple_of(2) { 1 } else { -1 };
            &P::int(s) * &x_pow(&w.act(lam))
        })
        .collect();
    P::sum(terms.iter())
}

fn shifted(cartan: Cartan, n: usize, mu: &[u32]) -> Vec<i64> {
    let rho = cartan.rho(n);
    (0..n).map(|k| rho[k] + 2 * *mu.get(k).unwrap_or(&0) as i64).collect()
}

pub fn weyl_character(cartan: Cartan, n: usize, mu: &[u32]) -> Result<P, IceError> {
    character_in(cartan.group(), cartan, n, mu)
}

/// Alternant ratio over `group` with the Weyl vector of `cartan`; the BC
/// family pairs the even-sign group with the type-B vector.
pub fn character_in(group: GroupType, cartan: Cartan, n: usize, mu: &[u32]) -> Result<P, IceError> {
    alternant_in(group, cartan, n, mu)
        .exact_divide(&alternant_in(group, cartan, n, &[]))?
        .ok_or_else(|| IceError::Verification(format!("alternant ratio for {cartan:?} {mu:?} is not exact")))
}

/// Cartan type and Weyl vector used for a family's characters.
pub fn family_cartan(family: Family) -> Result<Cartan, IceError> {
    Ok(match family {
        Family::B | Family::Bstar | Family::BC => Cartan::B,
        Family::C | Family::Cstar => Cartan::C,
        Family::D => Cartan::D,
        Family::A => return Err(IceError::Input("family A has no classical Weyl group here".into())),
    })
}

pub fn family_group(family: Family) -> GroupType {
    match family {
        Family::D | Family::BC => GroupType::D,
        _ => GroupType::BC,
    }
}

/// The character a family's partition functions are compared against. For
/// BC, `x_n = 1` is substituted into both alternants before dividing.
pub fn family_character(family: Family, n: usize, mu: &[u32]) -> Result<P, IceError> {
    let (group, cartan) = (family_group(family), family_cartan(family)?);
    let top = specialize(family, n, &alternant_in(group, cartan, n, mu))?;
    let bottom = specialize(family, n, &alternant_in(group, cartan, n, &[]))?;
    top.exact_divide(&bottom)?
        .ok_or_else(|| IceError::Verification(format!("{family} alternant ratio for {mu:?} is not exact")))
}

/// `μ = λ − ρ`.
pub fn mu_of(lambda: &StrictPartition) -> Vec<u32> {
    let n = lambda.n() as u32;
    lambda.parts().iter().enumerate().map(|(k, &p)| p - (n - k as u32)).collect()
}

fn i_pow(k: i64) -> P {
    P::i().pow(k.rem_euclid(4) as u32)
}

/// Drops `x_n` for the BC family, where it is specialized to 1.
fn specialize(family: Family, n: usize, p: &P) -> Result<P, IceError> {
    if family != Family::BC {
        return Ok(p.clone());
    }
    let sigma = BTreeMap::from([(Var::X(n as u8), P::one())]);
    Ok(p.substitute(&sigma)?)
}

/// Closed-form weight of the state attached to `w`.
pub fn weyl_state_weight(
    w: &SignedPermutation,
    family: Family,
    lambda: &StrictPartition,
) -> Result<P, IceError> {
    let n = lambda.n() as usize;
    let cartan = family_cartan(family)?;
    let group = family_group(family);
    let mu = mu_of(lambda);
    let size: i64 = mu.iter().map(|&m| m as i64).sum();
    let mut sign = if w.length(group).is_multiple_of(2) { 1 } else { -1 };
    if matches!(family, Family::B | Family::Bstar | Family::C | Family::Cstar) && n % 2 == 1 {
        sign = -sign;
    }
    let rho = cartan.rho(n);
    let p = &(&i_pow(size) * &P::int(sign)) * &(&x_pow(&rho) * &x_pow(&w.act(&shifted(cartan, n, &mu))));
    specialize(family, n, &p)
}

/// Rows of a bend pair or the central row, as row indices.
fn row_of(spec: &ModelSpec, label: RowLabel) -> Result<usize, IceError> {
    spec.row_index(label).ok_or_else(|| IceError::Input(format!("no row {label}")))
}

/// Column label of the unique `c2` vertex in a row, if any.
fn c2_column(spec: &ModelSpec, state: &IceState, row: usize) -> Result<Option<u32>, IceError> {
    let found: Vec<u32> = spec.grid[row]
        .iter()
        .enumerate()
        .filter_map(|(c, v)| v.filter(|&v| state.configs[v] == Config::C2).map(|_| spec.columns[c].value()))
        .collect();
    match found[..] {
        [] => Ok(None),
        [c] => Ok(Some(c)),
        _ => Err(IceError::Verification(format!("row {} has several c2 vertices", spec.rows[row]))),
    }
}

fn has_zero_character_weight(state: &IceState) -> bool {
    state.configs.iter().any(|&c| matches!(c, Config::C1 | Config::L))
}

/// The group element attached to a nonzero-weight state.
pub fn state_to_weyl(spec: &ModelSpec, state: &IceState) -> Result<SignedPermutation, IceError> {
    let family = spec.family;
    family_cartan(family)?;
    if has_zero_character_weight(state) {
        return Err(IceError::Input("state has zero character weight".into()));
    }
    let n = spec.n() as usize;
    let parts = spec.lambda.parts();
    let part_index = |c: u32| -> Result<u8, IceError> {
        parts
            .iter()
            .position(|&p| p == c)
            .map(|k| k as u8 + 1)
            .ok_or_else(|| IceError::Verification(format!("c2 in column {c}, which is not a part")))
    };
    let mut sigma = vec![0u8; n];
    let mut v = vec![1i8; n];
    let mut free: Option<usize> = None;
    for j in 1..=n as u8 {
        if family == Family::BC && j as usize == n {
            let c = c2_column(spec, state, row_of(spec, RowLabel::plain(j))?)?
                .ok_or_else(|| IceError::Verification("central row without c2".into()))?;
            sigma[n - 1] = part_index(c)?;
            free = Some(n - 1);
            continue;
        }
        let top = c2_column(spec, state, row_of(spec, RowLabel::plain(j))?)?;
        let bottom = c2_column(spec, state, row_of(spec, RowLabel::bar(j))?)?;
        let (c, up) = match (top, bottom) {
            (Some(c), None) => (c, true),
            (None, Some(c)) => (c, false),
            _ => return Err(IceError::Verification(format!("row pair {j} needs exactly one c2"))),
        };
        sigma[j as usize - 1] = part_index(c)?;
        v[j as usize - 1] = if up { -1 } else { 1 };
        if family == Family::D && !up && c == 1 {
            free = Some(j as usize - 1);
        }
    }
    if let Some(k) = free {
        v[k] = 1;
        let odd = v.iter().filter(|&&e| e < 0).count() % 2 == 1;
        v[k] = if odd { -1 } else { 1 };
    }
    let w = SignedPermutation { sigma, v };
    let mut seen = w.sigma.clone();
    seen.sort();
    if seen != (1..=n as u8).collect::<Vec<_>>() {
        return Err(IceError::Verification(format!("{w} is not a permutation")));
    }
    Ok(w)
}

/// Parts of `λ` whose column edge above `row` points up.
fn up_parts(spec: &ModelSpec, state: &IceState, row: usize) -> Vec<u32> {
    let parts = spec.lambda.parts();
    spec.columns
        .iter()
        .enumerate()
        .filter(|(col, c)| {
            parts.contains(&c.value())
                && spec
                    .edge_at(EdgeGeom::V { col: *col, slot: row })
                    .is_some_and(|e| spec.points_up(e, &state.bits))
        })
        .map(|(_, c)| c.value())
        .collect()
}

/// The sign statistic of a nonzero-weight state, assembled from up-arrow
/// counts left of (and, in the BC central row, at or right of) the removed part.
pub fn phi(spec: &ModelSpec, state: &IceState) -> Result<i64, IceError> {
    let w = state_to_weyl(spec, state)?;
    let n = spec.n() as i64;
    let parts = spec.lambda.parts();
    let mut total = 0i64;
    for j in 1..=n as u8 {
        let removed = parts[w.sigma[j as usize - 1] as usize - 1];
        let plus = |row: usize| up_parts(spec, state, row).iter().filter(|&&p| p > removed).count() as i64;
        if spec.family == Family::BC && j as i64 == n {
            let row = row_of(spec, RowLabel::plain(j))?;
            let minus = up_parts(spec, state, row).iter().filter(|&&p| p <= removed).count() as i64;
            total += 1 - minus;
            continue;
        }
        let top = row_of(spec, RowLabel::plain(j))?;
        let up = c2_column(spec, state, top)?.is_some();
        total += if up {
            plus(top) - n + i64::from(spec.family == Family::D)
        } else {
            plus(row_of(spec, RowLabel::bar(j))?) - j as i64 + 1
        };
    }
    Ok(total)
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylReport {
    pub family: Family,
    pub lambda: StrictPartition,
    pub nonzero_states: usize,
    pub group_order: usize,
    pub bijective: bool,
    pub weights_match: bool,
    pub phi_parity: bool,
    /// First element whose state weight differs from the closed form.
    pub witness: Option<String>,
}

/// Nonzero-weight states against group elements: bijection, closed-form
/// weights, and the parity of `φ`.
pub fn weyl_bijection_check(
    family: Family,
    lambda: &StrictPartition,
    caps: &Caps,
) -> Result<WeylReport, IceError> {
    let n = lambda.n();
    let spec = build_model(family, lambda);
    let scheme = WeightScheme::character(family, n);
    let states = enumerate_states(&spec, caps)?;
    let weights = state_weights(&spec.lattice, &states, &scheme)?;
    let group = family_group(family);
    let elements = weyl_group(group, n as usize);
    let mut seen = BTreeMap::new();
    let mut weights_match = true;
    let mut phi_parity = true;
    let mut witness = None;
    let mut nonzero = 0;
    for (s, wt) in states.iter().zip(&weights) {
        if wt.is_zero() {
            continue;
        }
        nonzero += 1;
        let w = state_to_weyl(&spec, s)?;
        if wt != &weyl_state_weight(&w, family, lambda)? {
            weights_match = false;
            witness.get_or_insert_with(|| w.to_string());
        }
        if (phi(&spec, s)? - w.length(group) as i64).rem_euclid(2) != 0 {
            phi_parity = false;
            witness.get_or_insert_with(|| w.to_string());
        }
        seen.insert(w, ());
    }
    let bijective =
        seen.len() == nonzero && nonzero == elements.len() && elements.iter().all(|w| seen.contains_key(w));
    Ok(WeylReport {
        family,
        lambda: lambda.clone(),
        nonzero_states: nonzero,
        group_order: elements.len(),
        bijective,
        weights_match,
        phi_parity,
        witness,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterVerdict {
    pub family: Family,
    pub lambda: StrictPartition,
    pub mu: Vec<u32>,
    pub pass: bool,
    #[serde(skip)]
    pub difference: P,
}

/// `Z(𝔐^λ) = i^{|μ|} Z(𝔐^ρ) χ_μ` under character weights.
pub fn character_theorem_check(
    family: Family,
    lambda: &StrictPartition,
    caps: &Caps,
) -> Result<CharacterVerdict, IceError> {
    let n = lambda.n();
    let scheme = WeightScheme::character(family, n);
    let z = partition_function(&build_model(family, lambda), &scheme, caps)?;
    let z_rho = partition_function(&build_model(family, &StrictPartition::rho(n)), &scheme, caps)?;
    let mu = mu_of(lambda);
    let chi = family_character(family, n as usize, &mu)?;
    let size: i64 = mu.iter().map(|&m| m as i64).sum();
    let rhs = &(&i_pow(size) * &z_rho) * &chi;
    let difference = &z - &rhs;
    Ok(CharacterVerdict { family, lambda: lambda.clone(), mu, pass: difference.is_zero(), difference })
}

/// Schur polynomial as a ratio of type-A alternants.
pub fn schur(n: usize, mu: &[u32]) -> Result<P, IceError> {
    let alt = |shift: &[i64]| {
        let terms: Vec<P> = permutations(n)
            .iter()
            .map(|s| {
                let e: Vec<i64> = s.iter().map(|&k| 2 * shift[k as usize - 1]).collect();
                &P::int(perm_sign(s)) * &x_pow(&e)
            })
            .collect();
        P::sum(terms.iter())
    };
    let delta: Vec<i64> = (0..n).map(|k| (n - 1 - k) as i64).collect();
    let top: Vec<i64> = (0..n).map(|k| delta[k] + *mu.get(k).unwrap_or(&0) as i64).collect();
    alt(&top)
        .exact_divide(&alt(&delta))?
        .ok_or_else(|| IceError::Verification("Schur ratio is not exact".into()))
}

fn perm_sign(s: &[u8]) -> i64 {
    let mut inv = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] > s[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `x^ρ ∏_{i<j} (1 + t x_j / x_i)` with `ρ = [n, …, 1]` and `t` given.
pub fn deformed_denominator(n: usize, t: &P) -> P {
    let rho: Vec<i64> = (0..n).map(|k| 2 * (n - k) as i64).collect();
    let mut out = x_pow(&rho);
    for i in 1..=n as u8 {
        for j in i + 1..=n as u8 {
            let ratio = &P::var(Var::X(j)) * &P::var_raw(Var::X(i), -2);
            out = &out * &(&P::one() + &(t * &ratio));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct TokuyamaVerdict {
    pub lambda: StrictPartition,
    pub pass: bool,
    /// The same identity at `t = −1`.
    pub pass_at_minus_one: bool,
}

pub fn tokuyama_check(lambda: &StrictPartition, caps: &Caps) -> Result<TokuyamaVerdict, IceError> {
    let n = lambda.n() as usize;
    let z = partition_function(&build_model(Family::A, lambda), &WeightScheme::tokuyama(n as u8), caps)?;
    let s = schur(n, &mu_of(lambda))?;
    let t = P::var(Var::Tau);
    let pass = z == &deformed_denominator(n, &t) * &s;
    // t is stored in half units, so t = −1 is the value i
    let at = BTreeMap::from([(Var::Tau, P::i())]);
    let z1 = z.substitute(&at)?;
    let pass_at_minus_one = z1 == &deformed_denominator(n, &P::int(-1)) * &s;
    Ok(TokuyamaVerdict { lambda: lambda.clone(), pass, pass_at_minus_one })
}
