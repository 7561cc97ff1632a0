//! Laurent monomials in the global lexicographic order.

use std::cmp::Ordering;

use crate::var::Var;

/// A product of variable powers. Entries are sorted by variable and carry no
/// zero exponents. Exponents of half-unit variables are stored doubled.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `v` raised to a raw (storage-unit) exponent.
    pub fn var_pow(v: Var, e: i32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Builds from arbitrary pairs, merging repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Self {
        let mut v: Vec<(Var, i32)> = pairs.into_iter().collect();
        v.sort_by_key(|p| p.0);
        let mut out: Vec<(Var, i32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    /// Raw stored exponent of `v`.
    pub fn exponent(&self, v: Var) -> i32 {
        self.0.binary_search_by_key(&v, |p| p.0).map(|i| self.0[i].1).unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// `self / other` when every exponent stays nonnegative.
    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        let q = self.mul(&other.inverse());
        q.0.iter().all(|p| p.1 >= 0).then_some(q)
    }

    /// Componentwise minimum with zero: the monomial that clears all negative
    /// exponents when divided out.
    pub fn negative_part(&self) -> Monomial {
        Monomial(self.0.iter().filter(|p| p.1 < 0).copied().collect())
    }

    /// Componentwise minimum of two monomials.
    pub fn gcd_with(&self, other: &Monomial) -> Monomial {
        let mut vars: Vec<Var> = self.0.iter().chain(other.0.iter()).map(|p| p.0).collect();
        vars.sort();
        vars.dedup();
        Monomial::from_pairs(vars.into_iter().map(|v| (v, self.exponent(v).min(other.exponent(v)))))
    }

    /// Sum of stored exponents.
    pub fn raw_degree(&self) -> i64 {
        self.0.iter().map(|p| p.1 as i64).sum()
    }
}

impl Ord for Monomial {
    /// Lexicographic: the first variable (in global order) whose exponents
    /// differ decides, the larger exponent being the larger monomial.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order() {
        let x1 = Monomial::var_pow(Var::X(1), 2);
        let x2 = Monomial::var_pow(Var::X(2), 2);
        let one = Monomial::one();
        assert!(one < x1);
        assert!(x2 < x1);
        assert!(x1.inverse() < one);
        assert!(x2.pow(5) < x1);
    }

    #[test]
    fn order_is_multiplicative() {
        let a = Monomial::from_pairs([(Var::A1(1), 1), (Var::B2(2), -3)]);
        let b = Monomial::from_pairs([(Var::A1(1), 1), (Var::A2(1), 1)]);
        let c = Monomial::from_pairs([(Var::B1(1), 4), (Var::A2(1), -1)]);
        assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
    }

    #[test]
    fn merge_drops_zero() {
        let m = Monomial::from_pairs([(Var::X(1), 2), (Var::X(1), -2), (Var::T(1), 1)]);
        assert_eq!(m.pairs(), &[(Var::T(1), 1)]);
    }
}
