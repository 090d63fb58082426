use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

/// A value in ℕ ∪ {∞}. `Finite` values order below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedNat {
    Finite(u64),
    Infinite,
}

impl ExtendedNat {
    pub const ZERO: ExtendedNat = ExtendedNat::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(n) => Some(n),
            ExtendedNat::Infinite => None,
        }
    }
}

impl From<u64> for ExtendedNat {
    fn from(n: u64) -> Self {
        ExtendedNat::Finite(n)
    }
}

impl Add for ExtendedNat {
    type Output = ExtendedNat;

    fn add(self, rhs: ExtendedNat) -> ExtendedNat {
        match (self, rhs) {
            (ExtendedNat::Finite(a), ExtendedNat::Finite(b)) => ExtendedNat::Finite(a.saturating_add(b)),
            _ => ExtendedNat::Infinite,
        }
    }
}

impl PartialEq<u64> for ExtendedNat {
    fn eq(&self, other: &u64) -> bool {
        *self == ExtendedNat::Finite(*other)
    }
}

impl PartialOrd<u64> for ExtendedNat {
    fn partial_cmp(&self, other: &u64) -> Option<Ordering> {
        Some(self.cmp(&ExtendedNat::Finite(*other)))
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(n) => write!(f, "{n}"),
            ExtendedNat::Infinite => f.write_str("inf"),
        }
    }
}

/// Finite values serialize as numbers, ∞ as the string `"inf"`.
impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(n) => serializer.serialize_u64(*n),
            ExtendedNat::Infinite => serializer.serialize_str("inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::ExtendedNat::{self, *};

    #[test]
    fn order_and_sum() {
        assert!(Finite(3) < Infinite);
        assert!(Finite(0) < Finite(1));
        assert_eq!(Finite(2) + Finite(3), Finite(5));
        assert_eq!(Finite(2) + Infinite, Infinite);
        assert_eq!(Infinite + Infinite, Infinite);
        assert!(ExtendedNat::ZERO == 0);
    }

    #[test]
    fn renders_inf_literal() {
        assert_eq!(Infinite.to_string(), "inf");
        assert_eq!(serde_json::to_string(&vec![Finite(1), Infinite]).unwrap(), r#"[1,"inf"]"#);
    }
}
