//! Families, partitions and row/column labels.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::IceError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    Bstar,
    C,
    Cstar,
    D,
    BC,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Family::A, Family::B, Family::Bstar, Family::C, Family::Cstar, Family::D, Family::BC];
    pub const BENT: [Family; 6] = [Family::B, Family::Bstar, Family::C, Family::Cstar, Family::D, Family::BC];

    pub fn is_bent(self) -> bool {
        self != Family::A
    }

    /// Row index of the self-paired central row, if any.
    pub fn central(self, n: u8) -> Option<u8> {
        match self {
            Family::Bstar | Family::C => Some(0),
            Family::BC => Some(n),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::Bstar => "Bstar",
            Family::C => "C",
            Family::Cstar => "Cstar",
            Family::D => "D",
            Family::BC => "BC",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = IceError;
    fn from_str(s: &str) -> Result<Self, IceError> {
        Ok(match s {
            "A" => Family::A,
            "B" => Family::B,
            "Bstar" | "B*" => Family::Bstar,
            "C" => Family::C,
            "Cstar" | "C*" => Family::Cstar,
            "D" => Family::D,
            "BC" => Family::BC,
            _ => return Err(IceError::Input(format!("unknown family `{s}`"))),
        })
    }
}

/// `λ_1 > λ_2 > … > λ_n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, IceError> {
        if parts.is_empty() {
            return Err(IceError::Input("partition must be nonempty".into()));
        }
        if parts.contains(&0) {
            return Err(IceError::Input("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(IceError::Input(format!("parts {parts:?} must be strictly decreasing")));
        }
        Ok(StrictPartition(parts))
    }

    /// `ρ = [n, n-1, …, 1]`.
    pub fn rho(n: u8) -> Self {
        StrictPartition((1..=n as u32).rev().collect())
    }

    /// `μ + ρ` for a weakly decreasing `μ` with `n` entries.
    pub fn from_mu(mu: &[u32]) -> Result<Self, IceError> {
        let n = mu.len() as u32;
        Self::new(mu.iter().enumerate().map(|(i, &m)| m + n - i as u32).collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> u8 {
        self.0.len() as u8
    }

    pub fn largest(&self) -> u32 {
        self.0[0]
    }

    pub fn contains(&self, part: u32) -> bool {
        self.0.contains(&part)
    }

    /// `μ = λ - ρ`.
    pub fn mu(&self) -> Vec<u32> {
        let n = self.0.len() as u32;
        self.0.iter().enumerate().map(|(i, &p)| p - (n - i as u32)).collect()
    }

    /// Every strict partition with `n` parts and largest part at most `max`.
    pub fn all(n: u8, max: u32) -> Vec<StrictPartition> {
        fn rec(n: usize, below: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if cur.len() == n {
                out.push(StrictPartition(cur.clone()));
                return;
            }
            let need = (n - cur.len()) as u32;
            for p in (need..below).rev() {
                cur.push(p);
                rec(n, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n as usize, max + 1, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl FromStr for StrictPartition {
    type Err = IceError;
    fn from_str(s: &str) -> Result<Self, IceError> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| IceError::Input(format!("bad part `{p}` in `{s}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}

/// A spectral index: `j`, `j̄`, or a central index (`barred` is false).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RowLabel {
    pub index: u8,
    pub barred: bool,
}

impl RowLabel {
    pub const fn plain(index: u8) -> Self {
        RowLabel { index, barred: false }
    }

    pub const fn bar(index: u8) -> Self {
        RowLabel { index, barred: true }
    }

    pub fn flipped(self) -> Self {
        RowLabel { index: self.index, barred: !self.barred }
    }

    pub fn latex(self) -> String {
        if self.barred {
            format!("\\overline{{{}}}", self.index)
        } else {
            self.index.to_string()
        }
    }
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}b", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

/// A column: a full column with its part label, or the half column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ColLabel {
    Full(u32),
    Half(u32),
}

impl ColLabel {
    pub fn value(self) -> u32 {
        match self {
            ColLabel::Full(v) | ColLabel::Half(v) => v,
        }
    }
}

impl fmt::Display for ColLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColLabel::Full(v) => write!(f, "{v}"),
            ColLabel::Half(v) => write!(f, "{v}h"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reject() {
        assert_eq!("3,1".parse::<StrictPartition>().unwrap().parts(), &[3, 1]);
        assert!("1,3".parse::<StrictPartition>().is_err());
        assert!("2,2".parse::<StrictPartition>().is_err());
        assert!("2,0".parse::<StrictPartition>().is_err());
        assert!("x".parse::<StrictPartition>().is_err());
    }

    #[test]
    fn enumerate_partitions() {
        let all = StrictPartition::all(2, 4);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].parts(), &[4, 3]);
        assert_eq!(StrictPartition::from_mu(&[1, 0]).unwrap().parts(), &[3, 1]);
        assert_eq!(StrictPartition::rho(3).mu(), vec![0, 0, 0]);
    }
}
