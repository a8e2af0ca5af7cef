//! Serde adapters that write rationals as `"p/q"` strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::{DeserializeOwned, Error as _};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
    let q: BigInt = q.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
    if q == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(p, q))
}

/// A value with a string-based mirror image used on the wire.
pub trait Mirror: Sized {
    type Wire: Serialize + DeserializeOwned;
    fn to_wire(&self) -> Self::Wire;
    fn from_wire(w: Self::Wire) -> Result<Self, String>;
}

impl Mirror for BigRational {
    type Wire = String;
    fn to_wire(&self) -> String {
        self.to_string()
    }
    fn from_wire(w: String) -> Result<Self, String> {
        parse_rational(&w)
    }
}

impl<T: Mirror> Mirror for Vec<T> {
    type Wire = Vec<T::Wire>;
    fn to_wire(&self) -> Self::Wire {
        self.iter().map(Mirror::to_wire).collect()
    }
    fn from_wire(w: Self::Wire) -> Result<Self, String> {
        w.into_iter().map(T::from_wire).collect()
    }
}

impl<T: Mirror> Mirror for Option<T> {
    type Wire = Option<T::Wire>;
    fn to_wire(&self) -> Self::Wire {
        self.as_ref().map(Mirror::to_wire)
    }
    fn from_wire(w: Self::Wire) -> Result<Self, String> {
        w.map(T::from_wire).transpose()
    }
}

impl<T: Mirror> Mirror for [T; 2] {
    type Wire = Vec<T::Wire>;
    fn to_wire(&self) -> Self::Wire {
        self.iter().map(Mirror::to_wire).collect()
    }
    fn from_wire(w: Self::Wire) -> Result<Self, String> {
        let v: Vec<T> = w.into_iter().map(T::from_wire).collect::<Result<_, _>>()?;
        v.try_into().map_err(|_| "expected a pair".to_string())
    }
}

pub fn serialize<T: Mirror, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    v.to_wire().serialize(s)
}

pub fn deserialize<'de, T: Mirror, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
    let w = T::Wire::deserialize(d)?;
    T::from_wire(w).map_err(D::Error::custom)
}
