//! JSON encoding of big integers: a plain number when it fits in `i64`,
//! otherwise a decimal string. Both forms are accepted on input.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Wire {
    Small(i64),
    Big(String),
}

fn to_wire(x: &BigInt) -> Wire {
    x.to_i64().map_or_else(|| Wire::Big(x.to_string()), Wire::Small)
}

fn from_wire<E: serde::de::Error>(w: Wire) -> Result<BigInt, E> {
    match w {
        Wire::Small(n) => Ok(BigInt::from(n)),
        Wire::Big(s) => s.parse().map_err(|_| E::custom(format!("not an integer: {s}"))),
    }
}

pub mod flat {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(to_wire).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Wire>::deserialize(d)?.into_iter().map(from_wire).collect()
    }
}

pub mod nested {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|r| r.iter().map(to_wire).collect::<Vec<_>>()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        Vec::<Vec<Wire>>::deserialize(d)?
            .into_iter()
            .map(|r| r.into_iter().map(from_wire).collect())
            .collect()
    }
}
