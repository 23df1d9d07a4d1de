use super::poly::NCPoly;
use super::presentation::Rule;
use super::symbol::{Sym, Word};
use crate::groundfield::Scalar;
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed polynomial JSON: {0}")]
pub struct JsonError(pub String);

pub fn word_to_json(w: &[Sym]) -> Value {
    Value::Array(w.iter().map(|s| Value::String(s.token())).collect())
}

pub fn word_from_json(v: &Value) -> Result<Word, JsonError> {
    let arr = v.as_array().ok_or_else(|| JsonError("word must be an array".into()))?;
    arr.iter()
        .map(|t| {
            let s = t.as_str().ok_or_else(|| JsonError("word token must be a string".into()))?;
            Sym::parse_token(s).ok_or_else(|| JsonError(format!("unknown token {s}")))
        })
        .collect()
}

pub fn poly_to_json(p: &NCPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(w, c)| json!({"coeff": c.to_canonical_string(), "word": word_to_json(w)}))
        .collect();
    json!({ "terms": terms })
}

pub fn poly_from_json(v: &Value) -> Result<NCPoly, JsonError> {
    let terms = v
        .get("terms")
        .and_then(|t| t.as_array())
        .ok_or_else(|| JsonError("missing \"terms\" array".into()))?;
    let mut p = NCPoly::zero();
    for t in terms {
        let c = t
            .get("coeff")
            .and_then(|c| c.as_str())
            .ok_or_else(|| JsonError("term without string \"coeff\"".into()))?;
        let c = Scalar::parse(c).map_err(|e| JsonError(e.to_string()))?;
        let w = word_from_json(t.get("word").ok_or_else(|| JsonError("term without \"word\"".into()))?)?;
        p.add_term(w, c);
    }
    Ok(p)
}

pub fn poly_from_json_str(s: &str) -> Result<NCPoly, JsonError> {
    let v: Value = serde_json::from_str(s).map_err(|e| JsonError(e.to_string()))?;
    poly_from_json(&v)
}

pub fn rule_to_json(r: &Rule) -> Value {
    json!({ "lhs": word_to_json(&r.lhs), "rhs": poly_to_json(&r.rhs) })
}

pub fn rule_from_json(v: &Value) -> Result<Rule, JsonError> {
    let lhs = word_from_json(v.get("lhs").ok_or_else(|| JsonError("rule without lhs".into()))?)?;
    if lhs.len() != 2 {
        return Err(JsonError("rule lhs must have length 2".into()));
    }
    let rhs = poly_from_json(v.get("rhs").ok_or_else(|| JsonError("rule without rhs".into()))?)?;
    Ok(Rule { lhs: [lhs[0], lhs[1]], rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        let mut p = NCPoly::from_syms(Scalar::q_pow(2), &[Sym::z(1, 1), Sym::zs(1, 1)]);
        p.add_term(Word::new(), Scalar::one() - Scalar::q_pow(2));
        p.add_term(
            [Sym::dz(2, 1), Sym::f0(), Sym::dzs(1, 2)].into_iter().collect(),
            Scalar::s_pow(-1) / (Scalar::one() + Scalar::q()),
        );
        let text = poly_to_json(&p).to_string();
        let back = poly_from_json_str(&text).unwrap();
        assert_eq!(back, p);
        assert_eq!(poly_to_json(&back).to_string(), text);
    }

    #[test]
    fn accepts_plain_coefficients() {
        let p = poly_from_json_str(r#"{"terms":[{"coeff":"1","word":["zs[1,1]","z[1,1]"]}]}"#).unwrap();
        assert!(p.coeff(&[Sym::zs(1, 1), Sym::z(1, 1)]).is_one());
    }

    #[test]
    fn rule_round_trip() {
        let r = Rule {
            lhs: [Sym::z(1, 2), Sym::z(1, 1)],
            rhs: NCPoly::from_syms(Scalar::q_pow(-1), &[Sym::z(1, 1), Sym::z(1, 2)]),
        };
        assert_eq!(rule_from_json(&rule_to_json(&r)).unwrap(), r);
    }

    #[test]
    fn rejects_bad_tokens() {
        assert!(poly_from_json_str(r#"{"terms":[{"coeff":"1","word":["w[1,1]"]}]}"#).is_err());
    }
}
