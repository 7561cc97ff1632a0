//! Sparse Laurent polynomials with Gaussian-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::gaussian::{
    exact_quotient, format_gaussian, is_unit, rational_inverse, to_rational, GaussianInt, GaussianRational,
};
use crate::monomial::Monomial;
use crate::var::{Bank, Var};
use crate::PolyError;

/// A Laurent polynomial. The term map never holds a zero coefficient, so equal
/// polynomials compare equal structurally.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, GaussianInt>,
    bank: Option<Bank>,
}

fn merge_bank(a: Option<Bank>, b: Option<Bank>) -> Result<Option<Bank>, PolyError> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => Err(PolyError::CrossBank),
        (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
        (None, None) => Ok(None),
    }
}

fn bank_of(m: &Monomial) -> Result<Option<Bank>, PolyError> {
    m.pairs().iter().try_fold(None, |acc, &(v, _)| merge_bank(acc, Some(v.bank())))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianInt::one())
    }

    pub fn constant(c: GaussianInt) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(GaussianInt::new(BigInt::from(c), BigInt::zero()))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::constant(GaussianInt::new(BigInt::zero(), BigInt::one()))
    }

    /// `c·m`. Panics if `m` mixes banks.
    pub fn term(c: GaussianInt, m: Monomial) -> Self {
        let bank = bank_of(&m).expect("monomial mixes variable banks");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms, bank }
    }

    /// A variable to the first power (one full unit; two storage units for
    /// half-unit variables).
    pub fn var(v: Var) -> Self {
        let e = if v.is_half_unit() { 2 } else { 1 };
        Self::term(GaussianInt::one(), Monomial::var_pow(v, e))
    }

    /// A variable to a raw storage-unit exponent.
    pub fn var_raw(v: Var, e: i32) -> Self {
        Self::term(GaussianInt::one(), Monomial::var_pow(v, e))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianInt)> {
        self.terms.iter()
    }

    pub fn bank(&self) -> Option<Bank> {
        self.bank
    }

    /// The constant coefficient if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<GaussianInt> {
        match self.terms.len() {
            0 => Some(GaussianInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &GaussianInt)> {
        self.terms.iter().next_back()
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.pairs().iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Maximum over terms of the sum of stored exponents.
    pub fn max_raw_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::raw_degree).max()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        let bank = merge_bank(self.bank, other.bank)?;
        let (big, small) = if self.terms.len() >= other.terms.len() { (self, other) } else { (other, self) };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(Self::normalized(terms, bank))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let bank = merge_bank(self.bank, other.bank)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                add_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Ok(Self::normalized(terms, bank))
    }

    fn normalized(terms: BTreeMap<Monomial, GaussianInt>, bank: Option<Bank>) -> Self {
        let bank = if terms.keys().all(Monomial::is_one) { None } else { bank };
        LaurentPoly { terms, bank }
    }

    pub fn scale(&self, c: &GaussianInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(), bank: self.bank }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let bank =
            merge_bank(self.bank, bank_of(m).expect("mixed monomial")).expect("monomial from another bank");
        Self::normalized(self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(), bank)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Sum of many polynomials, merging into one term map.
    pub fn sum<'a, I: IntoIterator<Item = &'a LaurentPoly>>(items: I) -> Self {
        let mut terms = BTreeMap::new();
        let mut bank = None;
        for p in items {
            bank = merge_bank(bank, p.bank).expect("sum mixes variable banks");
            for (m, c) in &p.terms {
                add_term(&mut terms, m.clone(), c.clone());
            }
        }
        Self::normalized(terms, bank)
    }

    /// The monomial whose division clears all negative exponents and all
    /// common variable factors: `self = content · (polynomial without
    /// monomial factor)`.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, m| acc.gcd_with(m))
    }

    /// Inverse of a single-term polynomial with unit coefficient.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        is_unit(c).then(|| Self::term(c.conj(), m.inverse()))
    }

    /// Exact division. `Ok(None)` when `d` does not divide `self`.
    pub fn exact_divide(&self, d: &Self) -> Result<Option<Self>, PolyError> {
        if d.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        merge_bank(self.bank, d.bank)?;
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        let pc = self.monomial_content();
        let dc = d.monomial_content();
        let p0 = self.mul_monomial(&pc.inverse());
        let d0 = d.mul_monomial(&dc.inverse());
        let Some(q0) = divide_polynomial(&p0, &d0) else {
            return Ok(None);
        };
        Ok(Some(q0.mul_monomial(&pc.mul(&dc.inverse()))))
    }

    /// Simultaneous substitution. Images are given for the storage unit of each
    /// variable (`x^{1/2}` for half-unit variables). Variables that occur with
    /// a negative exponent need a unit image.
    pub fn substitute(&self, sigma: &BTreeMap<Var, LaurentPoly>) -> Result<Self, PolyError> {
        let mut cache: BTreeMap<(Var, i32), LaurentPoly> = BTreeMap::new();
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            let mut rest = Vec::new();
            for &(v, e) in m.pairs() {
                let Some(img) = sigma.get(&v) else {
                    rest.push((v, e));
                    continue;
                };
                let factor = match cache.get(&(v, e)) {
                    Some(f) => f.clone(),
                    None => {
                        let f = if e >= 0 {
                            img.pow(e as u32)
                        } else {
                            img.unit_inverse().ok_or(PolyError::NonUnitImage(v))?.pow((-e) as u32)
                        };
                        cache.insert((v, e), f.clone());
                        f
                    }
                };
                acc = acc.checked_mul(&factor)?;
            }
            let rest = Monomial::from_pairs(rest);
            if !rest.is_one() {
                acc = acc.checked_mul(&Self::term(GaussianInt::one(), rest))?;
            }
            parts.push(acc);
        }
        let mut out = Self::zero();
        for p in &parts {
            out = out.checked_add(p)?;
        }
        Ok(out)
    }

    /// Exact evaluation. Values are given for the storage unit of each
    /// variable.
    pub fn evaluate(&self, point: &BTreeMap<Var, GaussianRational>) -> Result<GaussianRational, PolyError> {
        let mut total = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut acc = to_rational(c);
            for &(v, e) in m.pairs() {
                let val = point.get(&v).ok_or(PolyError::Unassigned(v))?;
                let base = if e < 0 {
                    rational_inverse(val).ok_or(PolyError::DivisionByZero(v))?
                } else {
                    val.clone()
                };
                for _ in 0..e.unsigned_abs() {
                    acc *= &base;
                }
            }
            total += acc;
        }
        Ok(total)
    }

    /// Canonical JSON rendering.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono: serde_json::Map<String, serde_json::Value> =
                    m.pairs().iter().map(|&(v, e)| (v.to_string(), serde_json::Value::from(e))).collect();
                serde_json::json!({
                    "coeff": [big_to_json(&c.re), big_to_json(&c.im)],
                    "monomial": mono,
                })
            })
            .collect();
        serde_json::json!({ "exponent_unit": "half", "terms": terms })
    }

    /// LaTeX rendering, terms in ascending monomial order.
    pub fn to_latex(&self) -> String {
        self.render(|v| v.latex(), true)
    }

    fn render(&self, name: impl Fn(Var) -> String, latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (negative, mag) = split_sign(c);
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = render_monomial(m, &name, latex);
            let coeff = if mag.is_one() && !mono.is_empty() {
                String::new()
            } else if !mag.re.is_zero() && !mag.im.is_zero() {
                format!("({})", format_gaussian(&mag))
            } else {
                format_gaussian(&mag)
            };
            out.push_str(&coeff);
            if !coeff.is_empty() && !mono.is_empty() {
                out.push(' ');
            }
            out.push_str(&mono);
        }
        out
    }
}

fn split_sign(c: &GaussianInt) -> (bool, GaussianInt) {
    let negative = if c.re.is_zero() { c.im.is_negative() } else { c.re.is_negative() };
    if negative {
        (true, -c.clone())
    } else {
        (false, c.clone())
    }
}

fn render_monomial(m: &Monomial, name: &impl Fn(Var) -> String, latex: bool) -> String {
    let parts: Vec<String> = m
        .pairs()
        .iter()
        .map(|&(v, e)| {
            let exp = if v.is_half_unit() {
                if e % 2 == 0 {
                    (e / 2).to_string()
                } else {
                    format!("{e}/2")
                }
            } else {
                e.to_string()
            };
            if exp == "1" {
                name(v)
            } else if latex {
                format!("{}^{{{}}}", name(v), exp)
            } else {
                format!("{}^{}", name(v), exp)
            }
        })
        .collect();
    parts.join(if latex { " " } else { "*" })
}

fn big_to_json(b: &BigInt) -> serde_json::Value {
    match i64::try_from(b) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(b.to_string()),
    }
}

fn add_term(terms: &mut BTreeMap<Monomial, GaussianInt>, m: Monomial, c: GaussianInt) {
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Division of polynomials without monomial content (all exponents
/// nonnegative). Returns `None` when the remainder would be nonzero.
fn divide_polynomial(p: &LaurentPoly, d: &LaurentPoly) -> Option<LaurentPoly> {
    let (ld_m, ld_c) = d.leading().map(|(m, c)| (m.clone(), c.clone()))?;
    let mut rem = p.terms.clone();
    let mut quotient = BTreeMap::new();
    while let Some((lm, lc)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        let qm = lm.divide(&ld_m)?;
        let qc = exact_quotient(&lc, &ld_c)?;
        for (m, c) in &d.terms {
            add_term(&mut rem, m.mul(&qm), -(c * &qc));
        }
        add_term(&mut quotient, qm, qc);
    }
    Some(LaurentPoly::normalized(quotient, merge_bank(p.bank, d.bank).ok()?))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|v| v.to_string(), false))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("addition mixes variable banks")
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("multiplication mixes variable banks")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
            bank: self.bank,
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { self.$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        let bank = merge_bank(self.bank, rhs.bank).expect("addition mixes variable banks");
        for (m, c) in &rhs.terms {
            add_term(&mut self.terms, m.clone(), c.clone());
        }
        let terms = std::mem::take(&mut self.terms);
        *self = Self::normalized(terms, bank);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self += &(-rhs);
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::int(c)
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> Self {
        LaurentPoly::var(v)
    }
}

/// Product of a list of polynomials.
pub fn product<'a, I: IntoIterator<Item = &'a LaurentPoly>>(items: I) -> LaurentPoly {
    items.into_iter().fold(LaurentPoly::one(), |acc, p| &acc * p)
}
