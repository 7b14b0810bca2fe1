//! Text and JSON output. Numbers are rounded to 12 significant digits; the
//! text form of a value reparses under the expression grammar.

use hypalg_core::{ColumnSpinor, EvenComponents, FourVector, HyperComplex, Multivector, OddComponents};
use serde_json::{json, Value as Json};

use crate::eval::Value;

const SIG_DIGITS: usize = 12;
/// Components at or below this fraction of the value's largest component are
/// printed as zero.
const CHOP: f64 = 1e-13;

pub const HYPER_UNITS: [&str; 4] = ["", "i", "j", "ij"];
pub const SIGMA_UNITS: [&str; 4] = ["", "s1", "s2", "s3"];

pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", SIG_DIGITS - 1, x).parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn fmt_num(x: f64) -> String {
    let r = round_sig(x);
    if r == 0.0 {
        return "0".into();
    }
    if !r.is_finite() {
        return r.to_string();
    }
    let a = r.abs();
    if (1e-5..1e15).contains(&a) {
        r.to_string()
    } else {
        format!("{r:e}")
    }
}

fn chop(x: f64, scale: f64) -> f64 {
    if x.abs() <= CHOP * scale {
        0.0
    } else {
        round_sig(x)
    }
}

/// Joins `(coefficient, unit-name)` pairs as `c*unit + ...`.
fn render_terms(terms: &[(f64, String)]) -> String {
    let mut out = String::new();
    for (c, unit) in terms.iter().filter(|(c, _)| *c != 0.0) {
        let mag = c.abs();
        if out.is_empty() {
            if *c < 0.0 {
                out.push('-');
            }
        } else {
            out.push_str(if *c < 0.0 { " - " } else { " + " });
        }
        match (unit.is_empty(), mag == 1.0) {
            (true, _) => out.push_str(&fmt_num(mag)),
            (false, true) => out.push_str(unit),
            (false, false) => {
                out.push_str(&fmt_num(mag));
                out.push('*');
                out.push_str(unit);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn unit_name(sigma: usize, part: usize) -> String {
    match (HYPER_UNITS[part], SIGMA_UNITS[sigma]) {
        ("", "") => String::new(),
        (h, "") => h.to_string(),
        ("", s) => s.to_string(),
        (h, s) => format!("{h}*{s}"),
    }
}

/// Basis labels of the flat 16-component layout.
pub fn basis16() -> Vec<String> {
    (0..16)
        .map(|n| {
            let name = unit_name(n / 4, n % 4);
            if name.is_empty() {
                "1".into()
            } else {
                name
            }
        })
        .collect()
}

fn chopped_multi(m: Multivector) -> [f64; 16] {
    let scale = m.max_abs();
    m.to_flat().map(|c| chop(c, scale))
}

fn chopped_hyper(z: HyperComplex) -> [f64; 4] {
    let scale = z.max_abs();
    z.to_array().map(|c| chop(c, scale))
}

pub fn hyper_text(z: HyperComplex) -> String {
    let c = chopped_hyper(z);
    render_terms(&(0..4).map(|k| (c[k], unit_name(0, k))).collect::<Vec<_>>())
}

pub fn multi_text(m: Multivector) -> String {
    let c = chopped_multi(m);
    render_terms(&(0..16).map(|n| (c[n], unit_name(n / 4, n % 4))).collect::<Vec<_>>())
}

pub fn value_text(v: &Value) -> String {
    match *v {
        Value::Real(x) => fmt_num(x),
        Value::Hyper(z) => hyper_text(z),
        Value::Multi(m) => multi_text(m),
    }
}

pub fn value_json(v: &Value) -> Json {
    let (coeffs, basis): (Vec<f64>, Vec<String>) = match *v {
        Value::Real(x) => (vec![round_sig(x)], vec!["1".into()]),
        Value::Hyper(z) => (chopped_hyper(z).to_vec(), ["1", "i", "j", "ij"].map(String::from).to_vec()),
        Value::Multi(m) => (chopped_multi(m).to_vec(), basis16()),
    };
    json!({ "kind": v.kind(), "coeffs": coeffs, "basis": basis })
}

pub fn four_vector_text(x: FourVector) -> String {
    let scale = x.0.iter().fold(0.0f64, |a, c| a.max(c.abs()));
    let parts: Vec<_> = x.0.iter().map(|&c| fmt_num(chop(c, scale))).collect();
    format!("({})", parts.join(", "))
}

pub fn four_vector_json(x: FourVector) -> Json {
    let scale = x.0.iter().fold(0.0f64, |a, c| a.max(c.abs()));
    json!({ "kind": "fourvector", "coeffs": x.0.map(|c| chop(c, scale)) })
}

const EVEN_KEYS: [&str; 6] = ["b32", "b13", "b21", "b10", "b20", "b30"];

fn even_rounded(e: &EvenComponents) -> (f64, [f64; 6], f64) {
    let scale = e.b.iter().fold(e.s.abs().max(e.p.abs()), |a, c| a.max(c.abs()));
    (chop(e.s, scale), e.b.map(|c| chop(c, scale)), chop(e.p, scale))
}

pub fn even_text(e: &EvenComponents) -> String {
    let (s, b, p) = even_rounded(e);
    let mut lines = vec![format!("s = {}", fmt_num(s))];
    lines.extend(EVEN_KEYS.iter().zip(b).map(|(k, v)| format!("{k} = {}", fmt_num(v))));
    lines.push(format!("p = {}", fmt_num(p)));
    lines.join("\n")
}

pub fn even_json(e: &EvenComponents) -> Json {
    let (s, b, p) = even_rounded(e);
    let mut map = serde_json::Map::new();
    map.insert("s".into(), json!(s));
    for (k, v) in EVEN_KEYS.iter().zip(b) {
        map.insert((*k).into(), json!(v));
    }
    map.insert("p".into(), json!(p));
    Json::Object(map)
}

pub fn odd_text(o: &OddComponents) -> String {
    let fmt4 = |a: [f64; 4]| four_vector_text(FourVector(a));
    format!("v = {}\neta = {}", fmt4(o.v), fmt4(o.eta))
}

pub fn odd_json(o: &OddComponents) -> Json {
    json!({ "v": o.v.map(round_sig), "eta": o.eta.map(round_sig) })
}

pub fn column_text(c: &ColumnSpinor) -> String {
    format!("c1 = {}\nc2 = {}", hyper_text(c.c1), hyper_text(c.c2))
}

pub fn column_json(c: &ColumnSpinor) -> Json {
    json!({ "c1": chopped_hyper(c.c1), "c2": chopped_hyper(c.c2) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::eval_str;
    use proptest::prelude::*;

    #[test]
    fn number_formatting() {
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(-0.0), "0");
        assert_eq!(fmt_num(0.5), "0.5");
        assert_eq!(fmt_num(0.49999999999999994), "0.5");
        assert_eq!(fmt_num(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_num(-2.0), "-2");
        assert_eq!(fmt_num(1e-20), "1e-20");
        assert_eq!(fmt_num(6.02214076e23), "6.02214076e23");
    }

    #[test]
    fn hypercomplex_text() {
        assert_eq!(hyper_text(HyperComplex::new(1.0, 2.0, 3.0, 4.0)), "1 + 2*i + 3*j + 4*ij");
        assert_eq!(hyper_text(HyperComplex::new(1.0, -1.0, 0.0, 1.0)), "1 - i + ij");
        assert_eq!(hyper_text(HyperComplex::new(0.0, 0.0, -0.5, 0.0)), "-0.5*j");
        assert_eq!(hyper_text(HyperComplex::ZERO), "0");
    }

    #[test]
    fn multivector_text() {
        let m = Multivector::S1 * HyperComplex::J - Multivector::S3 * HyperComplex::new(0.0, 0.0, 0.0, 2.5);
        assert_eq!(multi_text(m), "j*s1 - 2.5*ij*s3");
        let noisy = Multivector::real(0.5) + Multivector::S2 * 1e-17;
        assert_eq!(multi_text(noisy), "0.5");
    }

    #[test]
    fn json_schema() {
        let v = value_json(&Value::Hyper(HyperComplex::J));
        assert_eq!(v["kind"], "hypercomplex");
        assert_eq!(v["coeffs"], json!([0.0, 0.0, 1.0, 0.0]));
        let m = value_json(&Value::Multi(Multivector::S2 * HyperComplex::IJ));
        assert_eq!(m["coeffs"].as_array().unwrap().len(), 16);
        assert_eq!(m["coeffs"][11], json!(1.0));
        assert_eq!(m["basis"][11], "ij*s2");
        let e = even_json(&EvenComponents { s: 1.0, ..Default::default() });
        assert_eq!(
            e,
            json!({"s": 1.0, "b32": 0.0, "b13": 0.0, "b21": 0.0, "b10": 0.0, "b20": 0.0, "b30": 0.0, "p": 0.0})
        );
    }

    proptest! {
        #[test]
        fn text_reparses_to_value(c in proptest::array::uniform16(-100.0..100.0f64)) {
            let m = Multivector::from_flat(c);
            let back = eval_str(&multi_text(m)).unwrap().to_multi();
            prop_assert!(back.approx_eq(m, 1e-9));
        }
    }
}
