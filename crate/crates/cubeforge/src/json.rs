//! JSON documents for theorems, orbits and forms.
//!
//! Integers of any size are written as plain JSON numbers; readers also
//! accept decimal strings.

use cubeforge_core::cfinite::{Certificate, RationalGF, Verdict};
use cubeforge_core::concoct::{form_vars, FormResult, FormTarget};
use cubeforge_core::cubic::{ParamQuadruple, WeightedQuadruple};
use cubeforge_core::forge::{CubicTheorem, Provenance};
use cubeforge_core::kernel::{MultiPoly, UniPoly};
use cubeforge_core::quadform::{OrbitKind, OrbitSource, PellOrbit, QuadForm};
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::parse::parse_poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid document: {0}")]
pub struct FormatError(pub String);

fn bad<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError(msg.into()))
}

pub fn int_value(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("decimal integer is a JSON number"))
}

pub fn value_int(v: &Value) -> Result<BigInt, FormatError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return bad(format!("expected an integer, found {v}")),
    };
    text.parse().or_else(|_| bad(format!("expected an integer, found {text}")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value, FormatError> {
    obj.get(key).ok_or_else(|| FormatError(format!("missing field `{key}`")))
}

fn as_object(v: &Value) -> Result<&Map<String, Value>, FormatError> {
    v.as_object().ok_or_else(|| FormatError(format!("expected an object, found {v}")))
}

fn as_array(v: &Value) -> Result<&Vec<Value>, FormatError> {
    v.as_array().ok_or_else(|| FormatError(format!("expected an array, found {v}")))
}

fn as_str(v: &Value) -> Result<&str, FormatError> {
    v.as_str().ok_or_else(|| FormatError(format!("expected a string, found {v}")))
}

fn as_usize(v: &Value) -> Result<usize, FormatError> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| FormatError(format!("expected a nonnegative integer, found {v}")))
}

fn int_list(v: &Value) -> Result<Vec<BigInt>, FormatError> {
    as_array(v)?.iter().map(value_int).collect()
}

fn ints_value<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(it.into_iter().map(int_value).collect())
}

pub fn gf_to_json(g: &RationalGF) -> Value {
    json!({ "num": ints_value(g.num().coeffs()), "den": ints_value(g.den().coeffs()) })
}

pub fn gf_from_json(v: &Value) -> Result<RationalGF, FormatError> {
    let obj = as_object(v)?;
    let num = UniPoly::new(int_list(field(obj, "num")?)?);
    let den = UniPoly::new(int_list(field(obj, "den")?)?);
    RationalGF::new(num, den).map_err(|e| FormatError(e.to_string()))
}

fn kind_str(k: OrbitKind) -> &'static str {
    match k {
        OrbitKind::Constant => "constant",
        OrbitKind::Alternating => "alternating",
    }
}

fn kind_from(v: &Value) -> Result<OrbitKind, FormatError> {
    match as_str(v)? {
        "constant" => Ok(OrbitKind::Constant),
        "alternating" => Ok(OrbitKind::Alternating),
        other => bad(format!("unknown kind `{other}`")),
    }
}

fn claimed_certificate(v: &Value) -> Result<Certificate, FormatError> {
    Ok(Certificate { bound: as_usize(v)?, verdict: Verdict::Certified })
}

const MN: [&str; 2] = ["m", "n"];

pub fn orbit_to_json(o: &PellOrbit) -> Value {
    json!({
        "form": o.form.to_poly(&MN).to_string(),
        "gf_m": gf_to_json(&o.gf_m),
        "gf_n": gf_to_json(&o.gf_n),
        "target": int_value(&o.target),
        "kind": kind_str(o.kind),
        "certified_depth": o.certificate.bound,
        "source": match o.source {
            OrbitSource::Box => "box",
            OrbitSource::Convergents => "convergents",
        },
    })
}

fn poly_from(v: &Value, vars: &[&str]) -> Result<MultiPoly, FormatError> {
    let src = as_str(v)?;
    parse_poly(src, vars).map_err(|e| FormatError(format!("`{src}`: {e}")))
}

pub fn orbit_from_json(v: &Value) -> Result<PellOrbit, FormatError> {
    let obj = as_object(v)?;
    let form = QuadForm::from_poly(&poly_from(field(obj, "form")?, &MN)?).map_err(|e| FormatError(e.to_string()))?;
    let source = match obj.get("source").map(as_str).transpose()? {
        None | Some("box") => OrbitSource::Box,
        Some("convergents") => OrbitSource::Convergents,
        Some(other) => return bad(format!("unknown source `{other}`")),
    };
    Ok(PellOrbit {
        form,
        gf_m: gf_from_json(field(obj, "gf_m")?)?,
        gf_n: gf_from_json(field(obj, "gf_n")?)?,
        target: value_int(field(obj, "target")?)?,
        kind: kind_from(field(obj, "kind")?)?,
        certificate: claimed_certificate(field(obj, "certified_depth")?)?,
        source,
    })
}

fn provenance_to_json(p: &Provenance) -> Value {
    json!({
        "seed": {
            "a": int_value(p.seed.a()),
            "b": int_value(p.seed.b()),
            "coords": ints_value(p.seed.coords()),
        },
        "param": p.param.polys.iter().map(|q| Value::String(q.to_string())).collect::<Vec<_>>(),
        "solved_index": p.solved_index,
        "orbit": orbit_to_json(&p.orbit),
    })
}

fn provenance_from_json(v: &Value) -> Result<Provenance, FormatError> {
    let obj = as_object(v)?;
    let seed = as_object(field(obj, "seed")?)?;
    let a = value_int(field(seed, "a")?)?;
    let b = value_int(field(seed, "b")?)?;
    let coords: [BigInt; 4] = int_list(field(seed, "coords")?)?
        .try_into()
        .or_else(|_| bad("seed needs four coordinates"))?;
    let seed = WeightedQuadruple::new(a.clone(), b.clone(), coords).map_err(|e| FormatError(e.to_string()))?;
    let polys: [MultiPoly; 4] = as_array(field(obj, "param")?)?
        .iter()
        .map(|p| poly_from(p, &MN))
        .collect::<Result<Vec<_>, _>>()?
        .try_into()
        .or_else(|_| bad("param needs four polynomials"))?;
    let solved_index = as_usize(field(obj, "solved_index")?)?;
    if solved_index > 3 {
        return bad("solved_index must be 0..3");
    }
    Ok(Provenance {
        seed,
        param: ParamQuadruple { a, b, polys },
        orbit: orbit_from_json(field(obj, "orbit")?)?,
        solved_index,
    })
}

pub fn theorem_to_json(t: &CubicTheorem) -> Value {
    json!({
        "a": int_value(&t.a),
        "b": int_value(&t.b),
        "c": int_value(&t.c),
        "rhs_kind": kind_str(t.rhs_kind),
        "gfs": t.gfs.iter().map(gf_to_json).collect::<Vec<_>>(),
        "certified_depth": t.certificate.bound,
        "provenance": t.provenance.as_ref().map_or(Value::Null, provenance_to_json),
    })
}

/// Reads a theorem as stated; the certificate is taken as claimed and is
/// not re-checked here.
pub fn theorem_from_json(v: &Value) -> Result<CubicTheorem, FormatError> {
    let obj = as_object(v)?;
    let gfs: [RationalGF; 3] = as_array(field(obj, "gfs")?)?
        .iter()
        .map(gf_from_json)
        .collect::<Result<Vec<_>, _>>()?
        .try_into()
        .or_else(|_| bad("a theorem has exactly three generating functions"))?;
    let provenance = match obj.get("provenance") {
        None | Some(Value::Null) => None,
        Some(p) => Some(provenance_from_json(p)?),
    };
    let certificate = match obj.get("certified_depth") {
        Some(d) => claimed_certificate(d)?,
        None => Certificate { bound: 0, verdict: Verdict::Certified },
    };
    Ok(CubicTheorem {
        a: value_int(field(obj, "a")?)?,
        b: value_int(field(obj, "b")?)?,
        c: value_int(field(obj, "c")?)?,
        rhs_kind: kind_from(field(obj, "rhs_kind")?)?,
        gfs,
        provenance,
        certificate,
    })
}

/// A found form together with the sequences it was found for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormDocument {
    pub result: FormResult,
    pub gfs: Vec<RationalGF>,
}

pub fn form_to_json(r: &FormResult, gfs: &[RationalGF]) -> Value {
    let coeffs: Vec<Value> = r
        .coeffs()
        .iter()
        .map(|(e, c)| json!([e, int_value(c)]))
        .collect();
    json!({
        "degree": r.degree,
        "vars": r.form.vars(),
        "coeffs": coeffs,
        "C": int_value(&r.c),
        "target": r.target.as_str(),
        "certified_depth": r.certificate.bound,
        "gfs": gfs.iter().map(gf_to_json).collect::<Vec<_>>(),
    })
}

pub fn form_from_json(v: &Value) -> Result<FormDocument, FormatError> {
    let obj = as_object(v)?;
    let degree = u32::try_from(as_usize(field(obj, "degree")?)?).or_else(|_| bad("degree too large"))?;
    let gfs: Vec<RationalGF> = match obj.get("gfs") {
        Some(g) => as_array(g)?.iter().map(gf_from_json).collect::<Result<_, _>>()?,
        None => Vec::new(),
    };
    let mut terms = Vec::new();
    for entry in as_array(field(obj, "coeffs")?)? {
        let pair = as_array(entry)?;
        if pair.len() != 2 {
            return bad("each coefficient entry is [exponents, coefficient]");
        }
        let exps: Vec<u32> = as_array(&pair[0])?
            .iter()
            .map(|e| as_usize(e).and_then(|x| u32::try_from(x).or_else(|_| bad("exponent too large"))))
            .collect::<Result<_, _>>()?;
        if exps.iter().sum::<u32>() != degree {
            return bad("exponent vector does not match the degree");
        }
        terms.push((exps, value_int(&pair[1])?));
    }
    let d = terms.first().map_or(gfs.len(), |(e, _)| e.len());
    if terms.iter().any(|(e, _)| e.len() != d) {
        return bad("exponent vectors have different lengths");
    }
    let vars: Vec<String> = match obj.get("vars") {
        Some(v) => as_array(v)?.iter().map(|s| as_str(s).map(str::to_owned)).collect::<Result<_, _>>()?,
        None => form_vars(d),
    };
    if vars.len() != d {
        return bad("variable list does not match the exponent vectors");
    }
    let target = match as_str(field(obj, "target")?)? {
        "constant" => FormTarget::Constant,
        "alternating" => FormTarget::Alternating,
        "none" => FormTarget::None,
        other => return bad(format!("unknown target `{other}`")),
    };
    let result = FormResult {
        degree,
        form: MultiPoly::from_terms(&vars, terms),
        c: value_int(field(obj, "C")?)?,
        target,
        certificate: match obj.get("certified_depth") {
            Some(d) => claimed_certificate(d)?,
            None => Certificate { bound: 0, verdict: Verdict::Certified },
        },
    };
    Ok(FormDocument { result, gfs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_stay_exact() {
        let n: BigInt = "123456789012345678901234567890123456789".parse().unwrap();
        let v = int_value(&n);
        assert_eq!(v.to_string(), "123456789012345678901234567890123456789");
        assert_eq!(value_int(&v).unwrap(), n);
        let back: Value = serde_json::from_str(&v.to_string()).unwrap();
        assert_eq!(value_int(&back).unwrap(), n);
        assert!(value_int(&json!(1.5)).is_err());
    }

    #[test]
    fn gf_round_trip() {
        let g = RationalGF::from_i64(&[1, 53, 9], &[1, -82, -82, 1]).unwrap();
        let v = gf_to_json(&g);
        assert_eq!(v, json!({"num": [1, 53, 9], "den": [1, -82, -82, 1]}));
        assert_eq!(gf_from_json(&v).unwrap(), g);
        assert!(gf_from_json(&json!({"num": [1], "den": [0, 1]})).is_err());
    }
}
