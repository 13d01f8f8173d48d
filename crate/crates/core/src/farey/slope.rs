use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeTuple;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A vertex of the Farey graph: a reduced fraction `p/q`, or `1/0` for ∞.
///
/// Canonical form: `gcd(|p|, q) = 1`, `q >= 0`, and `q = 0` only as `1/0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    /// Reduces `p/q` to canonical form. `(0, 0)` is rejected.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (mut p, mut q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::InvalidSlope("0/0".into()));
        }
        if q.is_zero() {
            return Ok(Self::infinity());
        }
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        let d = p.gcd(&q);
        Ok(Self { p: p / &d, q: q / d })
    }

    /// Like [`Slope::new`] but fails unless `p/q` is already reduced
    /// (up to an overall sign).
    pub fn reduced(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if !p.gcd(&q).is_one() {
            return Err(Error::InvalidSlope(format!("{p}/{q} is not reduced")));
        }
        Self::new(p, q)
    }

    pub fn infinity() -> Self {
        Self { p: BigInt::one(), q: BigInt::zero() }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self { p: n.into(), q: BigInt::one() }
    }

    /// Canonical slope of a primitive integer vector `(p, q)`.
    pub(crate) fn from_vector(p: BigInt, q: BigInt) -> Self {
        Self::new(p, q).expect("nonzero vector")
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    /// `p_s q_t - q_s p_t`.
    pub fn det(&self, other: &Slope) -> BigInt {
        &self.p * &other.q - &self.q * &other.p
    }

    /// `max(|p|, q)`, the height used by bounded enumeration.
    pub fn height(&self) -> BigInt {
        self.p.abs().max(self.q.clone())
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_infinity() {
            f64::INFINITY
        } else {
            self.p.to_f64().unwrap_or(f64::NAN) / self.q.to_f64().unwrap_or(f64::NAN)
        }
    }

    /// Image under the integer matrix `[[a, b], [c, d]]` acting on `(p, q)`.
    pub fn transform(&self, m: &[[BigInt; 2]; 2]) -> Self {
        let p = &m[0][0] * &self.p + &m[0][1] * &self.q;
        let q = &m[1][0] * &self.p + &m[1][1] * &self.q;
        Self::from_vector(p, q)
    }
}

impl Ord for Slope {
    /// Real order on ℚ with ∞ last.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => (&self.p * &other.q).cmp(&(&other.p * &self.q)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidSlope(format!("cannot parse '{s}'"));
        match s.split_once('/') {
            Some((p, q)) => Slope::new(
                p.trim().parse::<BigInt>().map_err(|_| bad())?,
                q.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None if s == "inf" || s == "∞" => Ok(Slope::infinity()),
            None => Ok(Slope::integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

impl From<i64> for Slope {
    fn from(n: i64) -> Self {
        Slope::integer(n)
    }
}

fn ser_int<S: SerializeTuple>(t: &mut S, v: &BigInt) -> std::result::Result<(), S::Error> {
    match v.to_i64() {
        Some(x) => t.serialize_element(&x),
        None => t.serialize_element(&v.to_string()),
    }
}

/// Serialized as `[p, q]`; components beyond 64 bits are written as strings.
impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        ser_int(&mut t, &self.p)?;
        ser_int(&mut t, &self.q)?;
        t.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Text(String),
}

impl IntRepr {
    fn into_big<E: de::Error>(self) -> std::result::Result<BigInt, E> {
        match self {
            IntRepr::Small(x) => Ok(x.into()),
            IntRepr::Text(s) => s.parse().map_err(|_| E::custom(format!("bad integer '{s}'"))),
        }
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Slope;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a pair [p, q]")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Slope, A::Error> {
                let p: IntRepr = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let q: IntRepr = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(1, &self))?;
                Slope::new(p.into_big::<A::Error>()?, q.into_big::<A::Error>()?).map_err(de::Error::custom)
            }
        }
        d.deserialize_seq(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let s = Slope::new(-4, -6).unwrap();
        assert_eq!((s.p().clone(), s.q().clone()), (BigInt::from(2), BigInt::from(3)));
        assert_eq!(Slope::new(-5, 0).unwrap(), Slope::infinity());
        assert_eq!(Slope::new(3, -6).unwrap().to_string(), "-1/2");
        assert!(Slope::new(0, 0).is_err());
        assert!(Slope::reduced(2, 4).is_err());
    }

    #[test]
    fn ordering_and_parsing() {
        let a: Slope = "1/3".parse().unwrap();
        let b: Slope = "1/2".parse().unwrap();
        assert!(a < b && b < Slope::infinity());
        assert_eq!("inf".parse::<Slope>().unwrap(), Slope::infinity());
        assert_eq!("-2".parse::<Slope>().unwrap(), Slope::integer(-2));
    }

    #[test]
    fn json_round_trip_with_big_components() {
        let big = BigInt::from(7).pow(40);
        let s = Slope::new(big.clone(), big + 1).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.starts_with("[\""));
        assert_eq!(serde_json::from_str::<Slope>(&text).unwrap(), s);
        assert_eq!(serde_json::to_string(&Slope::infinity()).unwrap(), "[1,0]");
    }
}
