//! Admissible states, their weights and partition functions.

use std::collections::HashMap;

use bent_poly::LaurentPoly;
use rayon::prelude::*;
use serde::Serialize;

use crate::lattice::{Config, Lattice, NodeId};
use crate::model::{direction, ModelSpec};
use crate::weights::WeightScheme;
use crate::IceError;

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub max_n: u8,
    pub max_cols: u32,
}

/// Environment variable holding default caps as `max_n,max_cols`.
pub const CAPS_ENV: &str = "BENT_ICE_CAPS";

impl Default for Caps {
    fn default() -> Self {
        Caps { max_n: 4, max_cols: 8 }
    }
}

impl Caps {
    /// Defaults, overridden by `BENT_ICE_CAPS` when it parses.
    pub fn from_env() -> Self {
        std::env::var(CAPS_ENV)
            .ok()
            .and_then(|s| {
                let (a, b) = s.split_once(',')?;
                Some(Caps { max_n: a.trim().parse().ok()?, max_cols: b.trim().parse().ok()? })
            })
            .unwrap_or_default()
    }

    pub fn check(&self, spec: &ModelSpec) -> Result<(), IceError> {
        if spec.n() > self.max_n || spec.lambda.largest() > self.max_cols {
            return Err(IceError::CapExceeded(format!(
                "{}^{} exceeds n <= {}, lambda_1 <= {}",
                spec.family, spec.lambda, self.max_n, self.max_cols
            )));
        }
        Ok(())
    }
}

/// One admissible orientation with its per-node configurations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IceState {
    pub bits: Vec<bool>,
    pub configs: Vec<Config>,
}

impl IceState {
    pub fn new(lat: &Lattice, bits: &[bool]) -> Self {
        let configs =
            (0..lat.nodes.len()).map(|v| lat.config(v, bits).expect("inadmissible orientation")).collect();
        IceState { bits: bits.to_vec(), configs }
    }

    pub fn count(&self, c: Config) -> usize {
        self.configs.iter().filter(|&&x| x == c).count()
    }

    /// Edge name to compass direction.
    pub fn to_json(&self, spec: &ModelSpec) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = spec
            .lattice
            .edges
            .iter()
            .zip(&spec.geom)
            .zip(&self.bits)
            .map(|((e, g), &b)| (e.name.clone(), direction(*g, b).into()))
            .collect();
        map.into()
    }
}

pub fn enumerate_states(spec: &ModelSpec, caps: &Caps) -> Result<Vec<IceState>, IceError> {
    caps.check(spec)?;
    Ok(states_of(&spec.lattice))
}

pub fn states_of(lat: &Lattice) -> Vec<IceState> {
    let mut out = Vec::new();
    lat.for_each_state(|b| out.push(IceState::new(lat, b)));
    out
}

/// Per-node weights, looked up once per distinct (node kind, configuration).
pub struct WeightTable<'a> {
    lat: &'a Lattice,
    scheme: &'a WeightScheme,
    cache: HashMap<(crate::lattice::NodeKind, Config), LaurentPoly>,
}

impl<'a> WeightTable<'a> {
    pub fn new(lat: &'a Lattice, scheme: &'a WeightScheme) -> Self {
        WeightTable { lat, scheme, cache: HashMap::new() }
    }

    pub fn get(&mut self, v: NodeId, c: Config) -> Result<&LaurentPoly, IceError> {
        let kind = self.lat.nodes[v].kind;
        if !self.cache.contains_key(&(kind, c)) {
            let w = self.scheme.vertex_weight(kind, c)?;
            self.cache.insert((kind, c), w);
        }
        Ok(&self.cache[&(kind, c)])
    }

    /// Weights for every configuration the given states use.
    fn prime(&mut self, states: &[IceState]) -> Result<(), IceError> {
        for s in states {
            for (v, &c) in s.configs.iter().enumerate() {
                self.get(v, c)?;
            }
        }
        Ok(())
    }

    fn lookup(&self, v: NodeId, c: Config) -> &LaurentPoly {
        &self.cache[&(self.lat.nodes[v].kind, c)]
    }

    fn product(&self, s: &IceState) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (v, &c) in s.configs.iter().enumerate() {
            let w = self.lookup(v, c);
            if w.is_zero() {
                return LaurentPoly::zero();
            }
            if !w.is_one() {
                acc = &acc * w;
            }
        }
        acc
    }
}

pub fn state_weight(lat: &Lattice, state: &IceState, scheme: &WeightScheme) -> Result<LaurentPoly, IceError> {
    let mut table = WeightTable::new(lat, scheme);
    table.prime(std::slice::from_ref(state))?;
    Ok(table.product(state))
}

/// Weights of many states, in order.
pub fn state_weights(
    lat: &Lattice,
    states: &[IceState],
    scheme: &WeightScheme,
) -> Result<Vec<LaurentPoly>, IceError> {
    let mut table = WeightTable::new(lat, scheme);
    table.prime(states)?;
    Ok(states.par_iter().map(|s| table.product(s)).collect())
}

/// Sum of weights over the given states.
pub fn sum_weights(
    lat: &Lattice,
    states: &[IceState],
    scheme: &WeightScheme,
) -> Result<LaurentPoly, IceError> {
    let mut table = WeightTable::new(lat, scheme);
    table.prime(states)?;
    Ok(states
        .par_iter()
        .fold(LaurentPoly::zero, |acc, s| &acc + &table.product(s))
        .reduce(LaurentPoly::zero, |a, b| &a + &b))
}

pub fn partition_function(
    spec: &ModelSpec,
    scheme: &WeightScheme,
    caps: &Caps,
) -> Result<LaurentPoly, IceError> {
    let states = enumerate_states(spec, caps)?;
    sum_weights(&spec.lattice, &states, scheme)
}
