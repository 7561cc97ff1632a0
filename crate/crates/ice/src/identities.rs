//! Known factors of partition functions, exact divisibility, quotient
//! symmetry and the deformed denominator products.

use std::collections::BTreeMap;

use bent_poly::{gi, to_rational, GaussianRational, LaurentPoly, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::character::deformed_denominator;
use crate::labels::{Family, StrictPartition};
use crate::model::build_model;
use crate::state::{partition_function, Caps};
use crate::weights::{Regime, WeightScheme};
use crate::IceError;

type P = LaurentPoly;

fn v(x: Var) -> P {
    P::var(x)
}

/// Indices that carry a bend, i.e. every non-central row index.
pub fn bent_indices(family: Family, n: u8) -> Vec<u8> {
    let c = family.central(n);
    (1..=n).filter(|&j| Some(j) != c).collect()
}

/// Generic-bank factors.
mod generic {
    use super::*;

    pub fn p(j: u8) -> P {
        &v(Var::A2(j)) + &(&P::i() * &v(Var::B1(j)))
    }
    pub fn q(j: u8, k: u8) -> P {
        &(&v(Var::A1(k)) * &v(Var::A2(j))) + &(&v(Var::B1(j)) * &v(Var::B2(k)))
    }
    pub fn r(j: u8, k: u8) -> P {
        &(&v(Var::A2(j)) * &v(Var::A2(k))) + &(&v(Var::B1(k)) * &v(Var::B1(j)))
    }
    pub fn s(c: u8, j: u8) -> P {
        &(&v(Var::A(c)) * &v(Var::A2(j))) + &(&v(Var::B1(j)) * &v(Var::B(c)))
    }
    pub fn sq(j: u8) -> P {
        &v(Var::A2(j)).pow(2) + &v(Var::B1(j)).pow(2)
    }
}

/// Deformation-bank factors.
mod deformation {
    use super::*;

    fn x(j: u8, e: i32) -> P {
        P::var_raw(Var::X(j), 2 * e)
    }
    fn t(j: u8) -> P {
        v(Var::T(j))
    }
    pub fn p(j: u8) -> P {
        &P::one() - &(&t(j) * &x(j, 1))
    }
    pub fn q(j: u8, k: u8) -> P {
        &P::one() - &(&(&t(j) * &t(k)) * &(&x(j, 1) * &x(k, -1)))
    }
    pub fn r(j: u8, k: u8) -> P {
        &P::one() - &(&(&t(j) * &t(k)) * &(&x(j, 1) * &x(k, 1)))
    }
    pub fn s(c: u8, j: u8) -> P {
        &P::one() - &(&(&t(c) * &t(j)) * &(&x(c, 1) * &x(j, 1)))
    }
    pub fn sq(j: u8) -> P {
        &P::one() - &(&t(j).pow(2) * &x(j, 2))
    }
}

type FactorBank = (fn(u8) -> P, fn(u8, u8) -> P, fn(u8, u8) -> P, fn(u8, u8) -> P, fn(u8) -> P);

/// The factor list of the divisibility theorem (generic regime) or of its
/// deformation corollary. `has_one` selects the `𝔇` case.
pub fn known_factor(family: Family, n: u8, regime: Regime, has_one: bool) -> Vec<P> {
    let (p, q, r, s, sq): FactorBank = match regime {
        Regime::Generic => (generic::p, generic::q, generic::r, generic::s, generic::sq),
        Regime::Deformation => {
            (deformation::p, deformation::q, deformation::r, deformation::s, deformation::sq)
        }
        _ => panic!("known factors exist for the generic and deformation regimes only"),
    };
    let idx = bent_indices(family, n);
    let mut out = Vec::new();
    for &j in &idx {
        match family {
            Family::A => {}
            Family::B => out.push(p(j)),
            Family::Bstar => out.push(s(0, j)),
            Family::C => {
                out.push(p(j));
                out.push(s(0, j));
            }
            Family::Cstar => out.push(sq(j)),
            Family::D => {
                if !has_one {
                    out.push(sq(j))
                }
            }
            Family::BC => {
                out.push(s(n, j));
                out.push(sq(j));
            }
        }
    }
    if family != Family::A {
        for (a, &j) in idx.iter().enumerate() {
            for &k in &idx[a + 1..] {
                out.push(q(j, k));
                out.push(r(j, k));
            }
        }
    }
    out
}

/// The deformed denominator products in `t`, with `x_0`, `x_n` specialized as
/// in the Okada weights.
pub fn okada_product(family: Family, n: u8) -> P {
    let t = v(Var::Tau);
    let x = |j: u8, e: i32| P::var_raw(Var::X(j), 2 * e);
    let one = P::one();
    let mut out = P::one();
    let idx = bent_indices(family, n);
    let (pair_sign, t_pair) = match family {
        Family::B | Family::C => (-1, t.pow(2)),
        _ => (1, t.clone()),
    };
    let pair = |m: P| &one + &(&(&t_pair * &m) * &P::int(pair_sign));
    for &j in &idx {
        let f = match family {
            Family::A => one.clone(),
            Family::B => &one - &(&t * &x(j, 1)),
            Family::Bstar => &one + &(&t * &x(j, 1)),
            Family::C => &(&one - &(&t * &x(j, 1))) * &(&one + &(&t.pow(2) * &x(j, 1))),
            Family::Cstar => &one + &(&t * &x(j, 2)),
            Family::D => one.clone(),
            Family::BC => &(&one + &(&t * &x(j, 1))) * &(&one + &(&t * &x(j, 2))),
        };
        out = &out * &f;
    }
    for (a, &j) in idx.iter().enumerate() {
        for &k in &idx[a + 1..] {
            out = &out * &pair(&x(j, 1) * &x(k, -1));
            out = &out * &pair(&x(j, 1) * &x(k, 1));
        }
    }
    out
}

/// Spectral index actions on a quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IndexAction {
    Swap(u8, u8),
    Bar(u8),
}

impl IndexAction {
    pub fn substitution(self, regime: Regime) -> BTreeMap<Var, P> {
        let mut m = BTreeMap::new();
        match (self, regime) {
            (IndexAction::Swap(j, k), Regime::Generic) => {
                for f in [Var::A1, Var::A2, Var::B1, Var::B2] {
                    m.insert(f(j), v(f(k)));
                    m.insert(f(k), v(f(j)));
                }
            }
            (IndexAction::Bar(j), Regime::Generic) => {
                m.insert(Var::A1(j), v(Var::A2(j)));
                m.insert(Var::A2(j), v(Var::A1(j)));
                m.insert(Var::B1(j), v(Var::B2(j)));
                m.insert(Var::B2(j), v(Var::B1(j)));
            }
            (IndexAction::Swap(j, k), _) => {
                for f in [Var::X, Var::T] {
                    m.insert(f(j), P::var_raw(f(k), 1));
                    m.insert(f(k), P::var_raw(f(j), 1));
                }
            }
            (IndexAction::Bar(j), _) => {
                m.insert(Var::X(j), P::var_raw(Var::X(j), -1));
            }
        }
        m
    }

    pub fn apply(self, p: &P, regime: Regime) -> Result<P, IceError> {
        Ok(p.substitute(&self.substitution(regime))?)
    }
}

impl std::fmt::Display for IndexAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IndexAction::Swap(j, k) => write!(f, "swap({j},{k})"),
            IndexAction::Bar(j) => write!(f, "bar({j})"),
        }
    }
}

/// Adjacent swaps among bent indices and every bar involution (no bars for
/// type `A`).
pub fn symmetry_actions(family: Family, n: u8) -> Vec<IndexAction> {
    let idx = bent_indices(family, n);
    let mut out: Vec<IndexAction> = idx.windows(2).map(|w| IndexAction::Swap(w[0], w[1])).collect();
    if family == Family::A {
        return out;
    }
    out.extend(idx.iter().map(|&j| IndexAction::Bar(j)));
    out
}

/// Names of the actions that change `q`; empty when it is symmetric.
pub fn quotient_symmetry_check(
    q: &P,
    family: Family,
    n: u8,
    regime: Regime,
) -> Result<Vec<String>, IceError> {
    let mut broken = Vec::new();
    for a in symmetry_actions(family, n) {
        if &a.apply(q, regime)? != q {
            broken.push(a.to_string());
        }
    }
    Ok(broken)
}

/// A random Gaussian-integer point with nonzero coordinates.
pub fn random_point(vars: &[Var], rng: &mut ChaCha8Rng) -> BTreeMap<Var, GaussianRational> {
    vars.iter()
        .map(|&x| {
            let (re, im) = loop {
                let re: i64 = rng.gen_range(-9..=9);
                let im: i64 = rng.gen_range(-9..=9);
                if (re, im) != (0, 0) {
                    break (re, im);
                }
            };
            (x, to_rational(&gi(re, im)))
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Divisibility {
    pub family: Family,
    pub lambda: StrictPartition,
    pub regime: Regime,
    #[serde(skip)]
    pub z: P,
    #[serde(skip)]
    pub quotient: P,
    pub factors: usize,
    pub probes: usize,
}

/// Divides the partition function by each known factor in turn. Before the
/// exact division, random probes compare `Z` against the product of the
/// factors and the quotient; any disagreement is an error.
pub fn divisibility_check(
    family: Family,
    lambda: &StrictPartition,
    regime: Regime,
    caps: &Caps,
    seed: u64,
) -> Result<Divisibility, IceError> {
    let n = lambda.n();
    let spec = build_model(family, lambda);
    let scheme = match regime {
        Regime::Generic => WeightScheme::generic(family, n),
        Regime::Deformation => WeightScheme::deformation(family, n),
        _ => {
            return Err(IceError::Input("divisibility is stated for generic and deformation weights".into()))
        }
    };
    let z = partition_function(&spec, &scheme, caps)?;
    let mut factors = known_factor(family, n, regime, lambda.contains(1));
    factors.sort_by(|a, b| a.leading().map(|x| x.0).cmp(&b.leading().map(|x| x.0)));
    let mut q = z.clone();
    for f in &factors {
        q = q.exact_divide(f)?.ok_or_else(|| {
            IceError::Verification(format!("{family}^{lambda} ({}) is not divisible by {f}", regime.name()))
        })?;
    }
    let mut vars = z.variables();
    for f in &factors {
        vars.extend(f.variables());
    }
    vars.sort();
    vars.dedup();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probes = 5;
    for _ in 0..probes {
        let pt = random_point(&vars, &mut rng);
        let mut rhs = q.evaluate(&pt)?;
        for f in &factors {
            rhs *= f.evaluate(&pt)?;
        }
        if z.evaluate(&pt)? != rhs {
            return Err(IceError::Verification(format!(
                "{family}^{lambda}: exact quotient disagrees with a random probe"
            )));
        }
    }
    Ok(Divisibility {
        family,
        lambda: lambda.clone(),
        regime,
        z,
        quotient: q,
        factors: factors.len(),
        probes,
    })
}

/// `Z(𝔐^ρ)` under Okada weights, with the shared `t`.
pub fn okada_partition(family: Family, n: u8, caps: &Caps) -> Result<P, IceError> {
    let spec = build_model(family, &StrictPartition::rho(n));
    partition_function(&spec, &WeightScheme::okada(family, n), caps)
}

/// Checks `Z(𝔐^ρ)` against the published product; returns the difference.
pub fn okada_product_check(family: Family, n: u8, caps: &Caps) -> Result<P, IceError> {
    let z = okada_partition(family, n, caps)?;
    Ok(&z - &okada_product(family, n))
}

/// The product `Z(𝔐^ρ)` should equal: the known factors for bent families,
/// and the deformed denominator for type `A` under Tokuyama weights.
pub fn rho_product(family: Family, n: u8, regime: Regime) -> Result<P, IceError> {
    match (family, regime) {
        (Family::A, Regime::Tokuyama) => Ok(deformed_denominator(n as usize, &v(Var::Tau))),
        (Family::A, _) => Err(IceError::Input("type A at rho is checked with tokuyama weights".into())),
        (_, Regime::Generic | Regime::Deformation) => {
            Ok(bent_poly::product(&known_factor(family, n, regime, true)))
        }
        _ => Err(IceError::Input("rho products are stated for generic and deformation weights".into())),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RhoCheck {
    pub family: Family,
    pub n: u8,
    pub regime: Regime,
    pub pass: bool,
    #[serde(skip)]
    pub difference: P,
}

pub fn rho_check(family: Family, n: u8, regime: Regime, caps: &Caps) -> Result<RhoCheck, IceError> {
    let expected = rho_product(family, n, regime)?;
    let scheme = match regime {
        Regime::Generic => WeightScheme::generic(family, n),
        Regime::Deformation => WeightScheme::deformation(family, n),
        _ => WeightScheme::tokuyama(n),
    };
    let z = partition_function(&build_model(family, &StrictPartition::rho(n)), &scheme, caps)?;
    let difference = &z - &expected;
    Ok(RhoCheck { family, n, regime, pass: difference.is_zero(), difference })
}
