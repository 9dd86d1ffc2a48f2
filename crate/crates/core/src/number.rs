//! Possibly infinite Reidemeister numbers and JSON helpers for big integers.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A Reidemeister number: a positive integer or infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReidemeisterNumber {
    Finite(BigUint),
    Infinite,
}

impl ReidemeisterNumber {
    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            ReidemeisterNumber::Finite(v) => Some(v),
            ReidemeisterNumber::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ReidemeisterNumber::Infinite)
    }
}

impl From<usize> for ReidemeisterNumber {
    fn from(v: usize) -> Self {
        ReidemeisterNumber::Finite(BigUint::from(v))
    }
}

impl fmt::Display for ReidemeisterNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReidemeisterNumber::Finite(v) => write!(f, "{v}"),
            ReidemeisterNumber::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for ReidemeisterNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ReidemeisterNumber::Finite(v) => JsonInt(BigInt::from(v.clone())).serialize(s),
            ReidemeisterNumber::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// An integer written as a JSON number when it fits in 64 bits and as a
/// decimal string otherwise. Both forms are accepted on input.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if let Ok(v) = i64::try_from(&self.0) {
            s.serialize_i64(v)
        } else if let Ok(v) = u64::try_from(&self.0) {
            s.serialize_u64(v)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Signed(i64),
            Unsigned(u64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Signed(v) => Ok(JsonInt(BigInt::from(v))),
            Repr::Unsigned(v) => Ok(JsonInt(BigInt::from(v))),
            Repr::Text(t) => t
                .trim()
                .parse::<BigInt>()
                .map(JsonInt)
                .map_err(|_| D::Error::custom(format!("not an integer: {t:?}"))),
        }
    }
}
