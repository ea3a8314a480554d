//! Non-negative extended naturals used for endowments, requirements and bounds.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use crate::error::CrgError;

/// A non-negative integer or positive infinity.
///
/// The derived order puts every finite value below `Infinite`, and addition
/// saturates at `Infinite`. Finite addition is checked: [`Game`](crate::Game)
/// construction guarantees that no sum formed by the model overflows, so the
/// `Add` impl treats finite overflow as a broken invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantity {
    Finite(u64),
    Infinite,
}

impl Quantity {
    pub const ZERO: Quantity = Quantity::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Quantity::Finite(_))
    }

    pub fn is_zero(self) -> bool {
        self == Quantity::ZERO
    }

    /// The finite value, or `None` for `Infinite`.
    pub fn finite(self) -> Option<u64> {
        match self {
            Quantity::Finite(v) => Some(v),
            Quantity::Infinite => None,
        }
    }

    /// Saturating at `Infinite`; `None` only when two finite values overflow `u64`.
    pub fn checked_add(self, other: Quantity) -> Option<Quantity> {
        match (self, other) {
            (Quantity::Finite(a), Quantity::Finite(b)) => a.checked_add(b).map(Quantity::Finite),
            _ => Some(Quantity::Infinite),
        }
    }
}

impl Default for Quantity {
    fn default() -> Self {
        Quantity::ZERO
    }
}

impl From<u64> for Quantity {
    fn from(v: u64) -> Self {
        Quantity::Finite(v)
    }
}

impl Add for Quantity {
    type Output = Quantity;

    fn add(self, other: Quantity) -> Quantity {
        self.checked_add(other)
            .expect("finite quantity overflow: game totals are validated at construction")
    }
}

impl Sum for Quantity {
    fn sum<I: Iterator<Item = Quantity>>(iter: I) -> Quantity {
        iter.fold(Quantity::ZERO, Add::add)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Finite(v) => write!(f, "{v}"),
            Quantity::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Quantity {
    type Err = CrgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Quantity::Infinite);
        }
        s.parse::<u64>()
            .map(Quantity::Finite)
            .map_err(|_| CrgError::input(format!("`{s}` is not a non-negative integer or \"inf\"")))
    }
}
