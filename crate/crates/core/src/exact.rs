//! Exact integer helpers: generalized binomials and JSON number encoding for
//! big integers (emitted as bare JSON numbers, never strings or floats).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// `C(x, k)` for any integer `x`, via `x (x-1) ... (x-k+1) / k!`.
pub fn binomial(x: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= x - i as i64;
        den *= i + 1;
    }
    num / den
}

/// `C(n, k)` for natural `n`, zero when `k > n`.
pub fn binomial_nat(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Central binomial `C(n, floor(n/2))`.
pub fn central_binomial(n: u64) -> BigUint {
    binomial_nat(n, n / 2)
}

fn to_number<E: serde::ser::Error>(digits: String) -> Result<serde_json::Number, E> {
    digits.parse().map_err(E::custom)
}

pub mod biguint {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        to_number::<S::Error>(v.to_string())?.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        n.to_string().parse().map_err(serde::de::Error::custom)
    }
}

pub mod bigint {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_number::<S::Error>(v.to_string())?.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        n.to_string().parse().map_err(serde::de::Error::custom)
    }
}

pub mod biguint_vec {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&to_number::<S::Error>(x.to_string())?)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<serde_json::Number>::deserialize(d)?
            .into_iter()
            .map(|n| n.to_string().parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

pub mod bigint_vec {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&to_number::<S::Error>(x.to_string())?)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<serde_json::Number>::deserialize(d)?
            .into_iter()
            .map(|n| n.to_string().parse().map_err(serde::de::Error::custom))
            .collect()
    }
}
