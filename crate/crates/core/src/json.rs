//! Exact integers in JSON: numbers while they fit in `±(2⁵³−1)`, decimal
//! strings beyond.

use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

const SAFE: i64 = (1 << 53) - 1;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct JsonInt(pub BigInt);

impl From<BigInt> for JsonInt {
    fn from(b: BigInt) -> Self {
        JsonInt(b)
    }
}

impl From<i64> for JsonInt {
    fn from(v: i64) -> Self {
        JsonInt(BigInt::from(v))
    }
}

impl fmt::Display for JsonInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) if (-SAFE..=SAFE).contains(&v) => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct JsonIntVisitor;

impl Visitor<'_> for JsonIntVisitor {
    type Value = JsonInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
        Ok(JsonInt(BigInt::from(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
        Ok(JsonInt(BigInt::from(v)))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
        v.parse::<BigInt>()
            .map(JsonInt)
            .map_err(|_| E::custom(format!("'{v}' is not an integer")))
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(JsonIntVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_are_numbers_large_are_strings() {
        let small = JsonInt::from(SAFE);
        assert_eq!(serde_json::to_string(&small).unwrap(), SAFE.to_string());
        let big = JsonInt::from(SAFE + 1);
        assert_eq!(serde_json::to_string(&big).unwrap(), format!("\"{}\"", SAFE + 1));
        for v in [small, big, JsonInt::from(-5)] {
            let s = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<JsonInt>(&s).unwrap(), v);
        }
    }
}
