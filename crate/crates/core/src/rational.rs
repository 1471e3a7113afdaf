//! Exact rationals and their `"p/q"` text form.

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serializer};

pub type Q = Rational64;

/// `"p/q"` in lowest terms with positive denominator; integers as `"p/1"`.
pub fn format_q(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `"p/q"` or a bare integer.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            (q != 0).then(|| Q::new(p, q))
        }
        None => s.parse().ok().map(Q::from_integer),
    }
}

fn de_q<'de, D: Deserializer<'de>>(s: String) -> Result<Q, D::Error> {
    parse_q(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
}

pub mod as_str {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        de_q::<D>(String::deserialize(d)?)
    }
}

pub mod vec_as_str {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(format_q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        Vec::<String>::deserialize(d)?.into_iter().map(de_q::<D>).collect()
    }
}

pub mod vec_vec_as_str {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<Q>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|row| row.iter().map(format_q).collect::<Vec<_>>()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Q>>, D::Error> {
        Vec::<Vec<String>>::deserialize(d)?
            .into_iter()
            .map(|row| row.into_iter().map(de_q::<D>).collect())
            .collect()
    }
}
