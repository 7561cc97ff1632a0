//! Variables of the two banks.
//!
//! The derived `Ord` is the global variable order: generic bank first, then
//! symbol, then row index.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bank {
    Generic,
    Deformation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// `a_1^{(j)}`
    A1(u8),
    /// `a_2^{(j)}`
    A2(u8),
    /// `b_1^{(j)}`
    B1(u8),
    /// `b_2^{(j)}`
    B2(u8),
    /// central-row `a^{(j)}`
    A(u8),
    /// central-row `b^{(j)}`
    B(u8),
    /// per-row deformation parameter `t_j`
    T(u8),
    /// shared parameter `t`, stored in half units
    Tau,
    /// spectral parameter `x_j`, stored in half units
    X(u8),
}

impl Var {
    pub fn bank(self) -> Bank {
        match self {
            Var::A1(_) | Var::A2(_) | Var::B1(_) | Var::B2(_) | Var::A(_) | Var::B(_) => Bank::Generic,
            Var::T(_) | Var::Tau | Var::X(_) => Bank::Deformation,
        }
    }

    /// Exponents of these variables are stored doubled.
    pub fn is_half_unit(self) -> bool {
        matches!(self, Var::X(_) | Var::Tau)
    }

    pub fn latex(self) -> String {
        match self {
            Var::A1(j) => format!("a_{{1}}^{{({j})}}"),
            Var::A2(j) => format!("a_{{2}}^{{({j})}}"),
            Var::B1(j) => format!("b_{{1}}^{{({j})}}"),
            Var::B2(j) => format!("b_{{2}}^{{({j})}}"),
            Var::A(j) => format!("a^{{({j})}}"),
            Var::B(j) => format!("b^{{({j})}}"),
            Var::T(j) => format!("t_{{{j}}}"),
            Var::Tau => "t".to_string(),
            Var::X(j) => format!("x_{{{j}}}"),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::A1(j) => write!(f, "a1_{j}"),
            Var::A2(j) => write!(f, "a2_{j}"),
            Var::B1(j) => write!(f, "b1_{j}"),
            Var::B2(j) => write!(f, "b2_{j}"),
            Var::A(j) => write!(f, "a_{j}"),
            Var::B(j) => write!(f, "b_{j}"),
            Var::T(j) => write!(f, "t_{j}"),
            Var::Tau => write!(f, "t"),
            Var::X(j) => write!(f, "x_{j}"),
        }
    }
}
