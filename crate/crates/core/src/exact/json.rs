use super::{BigRational, LaurentPoly, Mono};
use crate::error::{Error, Result};
use num::{BigInt, Zero};
use serde_json::{json, Value};
use std::str::FromStr;

fn half_to_json(e2: i64) -> Value {
    if e2 % 2 == 0 {
        json!(e2 / 2)
    } else {
        json!(format!("{e2}/2"))
    }
}

fn half_from_json(v: &Value) -> Result<i64> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|x| 2 * x)
            .ok_or_else(|| Error::Parse(format!("non-integer exponent {n}"))),
        Value::String(s) => {
            if let Some(num) = s.strip_suffix("/2") {
                num.parse::<i64>().map_err(|e| Error::Parse(e.to_string()))
            } else {
                s.parse::<i64>().map(|x| 2 * x).map_err(|e| Error::Parse(e.to_string()))
            }
        }
        _ => Err(Error::Parse(format!("bad exponent {v}"))),
    }
}

/// JSON rendering of a Laurent polynomial: a list of terms
/// `{"q": r, "t": r, "a": n, "coeff": "p/q"}` where exponents of q and t may
/// be integers or halves rendered as `"n/2"`.
pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            json!({
                "q": half_to_json(m.q2),
                "t": half_to_json(m.t2),
                "a": m.a,
                "coeff": c.to_string(),
            })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly> {
    let terms = v
        .get("terms")
        .and_then(|t| t.as_array())
        .ok_or_else(|| Error::Parse("missing terms array".into()))?;
    let mut p = LaurentPoly::zero();
    for t in terms {
        let q2 = half_from_json(t.get("q").ok_or_else(|| Error::Parse("missing q".into()))?)?;
        let t2 = half_from_json(t.get("t").ok_or_else(|| Error::Parse("missing t".into()))?)?;
        let a = t
            .get("a")
            .and_then(|x| x.as_i64())
            .ok_or_else(|| Error::Parse("missing a".into()))?;
        let cs = t
            .get("coeff")
            .and_then(|x| x.as_str())
            .ok_or_else(|| Error::Parse("missing coeff".into()))?;
        let c = parse_rational(cs)?;
        if !c.is_zero() {
            p.add_term(Mono::halves(q2, t2, a), c);
        }
    }
    Ok(p)
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|e| Error::Parse(e.to_string()))?;
        let d = BigInt::from_str(d.trim()).map_err(|e| Error::Parse(e.to_string()))?;
        if d.is_zero() {
            return Err(Error::Parse("zero denominator in rational".into()));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n = BigInt::from_str(s.trim()).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(BigRational::from(n))
    }
}
