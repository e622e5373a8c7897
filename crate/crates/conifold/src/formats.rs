//! JSON file formats. Rationals are always strings, `"p/q"` or `"p"`.

use std::io::Read;

use conifold_core::{
    CheckReport, GvClass, GvDataset, LambdaSeries, Mismatch, MultiClassSeries, PotentialSeries, QSeries, RatFunc,
    Rational,
};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{CliError, Result};

pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|_| CliError::BadRational(s.to_string()))
}

/// `{"exp": "p/q", ...}` over nonzero terms.
pub fn lambda_series_json(s: &LambdaSeries) -> Value {
    let map: Map<String, Value> =
        s.terms().map(|(e, c)| (e.to_string(), Value::String(rational_to_string(c)))).collect();
    Value::Object(map)
}

/// `{"n": "p/q", ...}` over nonzero terms.
pub fn q_series_json(s: &QSeries<Rational>) -> Value {
    let map: Map<String, Value> =
        s.iter().map(|(n, c)| (n.to_string(), Value::String(rational_to_string(c)))).collect();
    Value::Object(map)
}

pub fn ratfunc_json(f: &RatFunc) -> Value {
    let poly = |p: &conifold_core::Poly| -> Value {
        p.coeffs().iter().map(|c| Value::String(rational_to_string(c))).collect()
    };
    json!({ "numerator": poly(f.numerator()), "denominator": poly(f.denominator()) })
}

/// `{"genus_cut": G, "q_cut": N, "coeffs": {"n": {"exp": "p/q", ...}, ...}}`
pub fn potential_json(p: &PotentialSeries) -> Value {
    let coeffs: Map<String, Value> = p.iter().map(|(n, f)| (n.to_string(), lambda_series_json(f))).collect();
    json!({ "genus_cut": p.genus_cut(), "q_cut": p.q_cut(), "coeffs": coeffs })
}

/// Keyed by class label, then multi-cover degree `k`, then `λ` exponent.
pub fn multiclass_json(s: &MultiClassSeries) -> Value {
    let map: Map<String, Value> = s
        .iter()
        .map(|(label, series)| {
            let per_k: Map<String, Value> =
                series.iter().map(|(k, f)| (k.to_string(), lambda_series_json(f))).collect();
            (label.to_string(), Value::Object(per_k))
        })
        .collect();
    Value::Object(map)
}

fn mismatch_json(m: &Mismatch) -> Value {
    json!({
        "q_degree": m.q_degree,
        "lambda_exp": m.lambda_exp,
        "expected": rational_to_string(&m.expected),
        "actual": rational_to_string(&m.actual),
        "class": m.class,
    })
}

/// `{"check", "passed", "lambda_order", "q_order", "first_failure"}`
pub fn report_json(r: &CheckReport) -> Value {
    json!({
        "check": r.check_name,
        "passed": r.passed,
        "lambda_order": r.trunc_lambda,
        "q_order": r.trunc_q,
        "first_failure": r.first_failure.as_ref().map(mismatch_json),
    })
}

/// Read a dataset `{"classes": [{"label": string, "n0": integer}, ...]}`.
pub fn load_gv_dataset(mut source: impl Read) -> Result<GvDataset> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    let root: Value = serde_json::from_str(&text)?;
    let classes = root
        .get("classes")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Dataset("expected a top-level \"classes\" array".into()))?;

    let mut out = Vec::with_capacity(classes.len());
    for (i, entry) in classes.iter().enumerate() {
        let label = entry
            .get("label")
            .and_then(Value::as_str)
            .ok_or_else(|| CliError::Dataset(format!("class {i}: missing string \"label\"")))?;
        let n0 = match entry.get("n0") {
            Some(Value::Number(n)) if n.is_i64() => BigInt::from(n.as_i64().unwrap()),
            Some(Value::Number(n)) if n.is_u64() => BigInt::from(n.as_u64().unwrap()),
            Some(other) => {
                return Err(CliError::Dataset(format!("class `{label}`: n0 must be an integer, got {other}")))
            }
            None => return Err(CliError::Dataset(format!("class `{label}`: missing \"n0\""))),
        };
        out.push(GvClass { label: label.to_string(), n0 });
    }
    Ok(GvDataset::new(out)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use conifold_core::{potential, rat};

    #[test]
    fn rationals_render_and_parse() {
        assert_eq!(rational_to_string(&rat(-1, 30)), "-1/30");
        assert_eq!(rational_to_string(&rat(4, 2)), "2");
        assert_eq!(parse_rational("-1/30").unwrap(), rat(-1, 30));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn potential_layout() {
        let v = potential_json(&potential(1, 1).unwrap());
        assert_eq!(v, json!({"genus_cut": 1, "q_cut": 1, "coeffs": {"1": {"-2": "1", "0": "1/12"}}}));
    }

    #[test]
    fn dataset_errors() {
        let dup = r#"{"classes":[{"label":"a","n0":1},{"label":"a","n0":2}]}"#;
        assert!(matches!(
            load_gv_dataset(dup.as_bytes()),
            Err(CliError::Core(conifold_core::Error::DuplicateLabel(_)))
        ));
        let frac = r#"{"classes":[{"label":"a","n0":1.5}]}"#;
        assert!(matches!(load_gv_dataset(frac.as_bytes()), Err(CliError::Dataset(_))));
        let string_n0 = r#"{"classes":[{"label":"a","n0":"3"}]}"#;
        assert!(matches!(load_gv_dataset(string_n0.as_bytes()), Err(CliError::Dataset(_))));
        assert!(matches!(load_gv_dataset("{".as_bytes()), Err(CliError::Json(_))));
        assert!(matches!(load_gv_dataset("{}".as_bytes()), Err(CliError::Dataset(_))));
    }

    #[test]
    fn dataset_minimal() {
        let d = load_gv_dataset(r#"{"classes":[{"label":"d","n0":1}]}"#.as_bytes()).unwrap();
        assert_eq!(d.classes().len(), 1);
        assert_eq!(d.get("d").unwrap().n0, BigInt::from(1));
    }
}
