//! Serialization: rationals travel as strings ("p/q", or "p" for integers).

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::format::parse_poly;
use crate::exactalg::{MPoly, Q};

pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Format(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Format(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(n, d))
}

/// Comma-separated rational vector, e.g. `2,0,-3,0,6` or `1/2, -1/3`.
pub fn parse_rational_vec(s: &str) -> Result<Vec<Q>> {
    s.split(',').map(parse_rational).collect()
}

pub fn rational_vec_strings(v: &[Q]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

pub mod qser {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub mod qopt_ser {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
        x.as_ref().map(|v| v.to_string()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Q>, D::Error> {
        match Option::<String>::deserialize(d)? {
            Some(s) => parse_rational(&s).map(Some).map_err(serde::de::Error::custom),
            None => Ok(None),
        }
    }
}

pub mod qvec_ser {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        rational_vec_strings(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect()
    }
}

pub mod qvec_opt_ser {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Vec<Q>>, s: S) -> std::result::Result<S::Ok, S::Error> {
        x.as_ref().map(|v| rational_vec_strings(v)).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Vec<Q>>, D::Error> {
        let v = Option::<Vec<String>>::deserialize(d)?;
        v.map(|v| v.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect())
            .transpose()
    }
}

pub mod qmat_ser {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
        x.iter().map(|r| rational_vec_strings(r)).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Q>>, D::Error> {
        let v = Vec::<Vec<String>>::deserialize(d)?;
        v.iter()
            .map(|r| r.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect())
            .collect()
    }
}

pub mod qpairs_ser {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &[(usize, Q)], s: S) -> std::result::Result<S::Ok, S::Error> {
        x.iter().map(|(i, q)| (*i, q.to_string())).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<(usize, Q)>, D::Error> {
        let v = Vec::<(usize, String)>::deserialize(d)?;
        v.into_iter()
            .map(|(i, s)| parse_rational(&s).map(|q| (i, q)).map_err(serde::de::Error::custom))
            .collect()
    }
}

pub mod qmult_ser {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &[(Q, usize)], s: S) -> std::result::Result<S::Ok, S::Error> {
        x.iter().map(|(q, m)| (q.to_string(), *m)).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<(Q, usize)>, D::Error> {
        let v = Vec::<(String, usize)>::deserialize(d)?;
        v.into_iter()
            .map(|(s, m)| parse_rational(&s).map(|q| (q, m)).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Polynomials serialized in their text form.
pub mod poly_ser {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Tagged {
        nvars: usize,
        poly: String,
    }

    pub fn serialize<S: Serializer>(p: &MPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
        Tagged { nvars: p.nvars(), poly: p.to_string() }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<MPoly, D::Error> {
        let t = Tagged::deserialize(d)?;
        parse_poly(&t.poly, Some(t.nvars)).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

/// `{"nvars": n, "terms": [{"e": [...], "c": "p/q"}, ...]}`, terms in descending lex order.
pub fn poly_to_json(p: &MPoly) -> serde_json::Value {
    serde_json::to_value(PolyJson {
        nvars: p.nvars(),
        terms: p.terms().rev().map(|(e, c)| TermJson { e: e.clone(), c: c.to_string() }).collect(),
    })
    .expect("polynomial json")
}

pub fn poly_from_json(v: &serde_json::Value) -> Result<MPoly> {
    let pj: PolyJson = serde_json::from_value(v.clone()).map_err(|e| Error::Format(e.to_string()))?;
    let mut terms = Vec::with_capacity(pj.terms.len());
    for t in pj.terms {
        if t.e.len() != pj.nvars {
            return Err(Error::Dimension { expected: pj.nvars, got: t.e.len() });
        }
        terms.push((t.e, parse_rational(&t.c)?));
    }
    Ok(MPoly::from_terms(pj.nvars, terms))
}

/// Reads either the JSON form or the text form (optionally with a leading
/// `# nvars: n` comment line).
pub fn read_poly(text: &str, nvars: Option<usize>) -> Result<MPoly> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(trimmed).map_err(|e| Error::Format(e.to_string()))?;
        return poly_from_json(&v);
    }
    let mut nv = nvars;
    let mut body = String::new();
    for line in text.lines() {
        if let Some(rest) = line.trim_start().strip_prefix('#') {
            if let Some(n) = rest.trim().strip_prefix("nvars:") {
                nv = Some(n.trim().parse().map_err(|_| Error::Format(format!("bad nvars line: {line}")))?);
            }
            body.push('\n');
            continue;
        }
        body.push_str(line);
        body.push('\n');
    }
    parse_poly(&body, nv)
}
