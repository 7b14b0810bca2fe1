//! Subcommand bodies. Each returns the text for stdout and an exit code.

use hypalg_core::lorentz::{boost, rotation};
use hypalg_core::spinor::{mott_factor, product_modulus_sq};
use hypalg_core::{FourVector, LorentzParams, Spinor};

use crate::format::{self, fmt_num};
use crate::{eval_str, verify, CliError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

pub fn eval(src: &str, json: bool) -> Result<Output, CliError> {
    let v = eval_str(src)?;
    Ok(Output::ok(if json { format::value_json(&v).to_string() } else { format::value_text(&v) }))
}

/// Applies the rotation, then the boost.
pub fn transform(boost_rapidity: [f64; 3], rotate: [f64; 3], vector: [f64; 4], json: bool) -> Result<Output, CliError> {
    let t = boost(boost_rapidity) * rotation(rotate);
    let y = t.apply(FourVector(vector)).map_err(|error| crate::EvalError::Algebra { error, at: 0 })?;
    Ok(Output::ok(if json { format::four_vector_json(y).to_string() } else { format::four_vector_text(y) }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpinorView {
    #[default]
    Even,
    Odd,
    Column,
}

/// Closed-form component values `(name, value)` for the spin transformation
/// with the given parameters, in the canonical positive index orderings.
pub fn closed_form_components(p: LorentzParams) -> [(&'static str, f64); 8] {
    let (sp, cp) = (p.phi / 2.0).sin_cos();
    let (st, ct) = (p.theta / 2.0).sin_cos();
    let (sh, ch) = ((p.xi / 2.0).sinh(), (p.xi / 2.0).cosh());
    [
        ("psi0", cp * ct * ch),
        ("psi10", cp * st * sh),
        ("psi20", sp * st * sh),
        ("psi30", cp * ct * sh),
        ("psi12", sp * ct * ch),
        ("psi31", cp * st * ch),
        ("psi32", sp * st * ch),
        ("psi3210", sp * ct * sh),
    ]
}

/// The same eight components read from the computed spinor, using index
/// antisymmetry (`ψ¹² = -ψ²¹`, `ψ³¹ = -ψ¹³`, `ψ³²¹⁰ = ψ⁰¹²³`).
pub fn computed_components(psi: &Spinor) -> [(&'static str, f64); 8] {
    let e = psi.even_components();
    let [b32, b13, b21, b10, b20, b30] = e.b;
    [
        ("psi0", e.s),
        ("psi10", b10),
        ("psi20", b20),
        ("psi30", b30),
        ("psi12", -b21),
        ("psi31", -b13),
        ("psi32", b32),
        ("psi3210", e.pseudoscalar_tensor([3, 2, 1, 0])),
    ]
}

pub fn spinor(p: LorentzParams, view: SpinorView, check: bool, json: bool) -> Output {
    let psi = Spinor::from_params(p);
    let mut stdout = match (view, json) {
        (SpinorView::Even, false) => format::even_text(&psi.even_components()),
        (SpinorView::Even, true) => format::even_json(&psi.even_components()).to_string(),
        (SpinorView::Odd, false) => format::odd_text(&psi.odd_components()),
        (SpinorView::Odd, true) => format::odd_json(&psi.odd_components()).to_string(),
        (SpinorView::Column, false) => format::column_text(&psi.to_column()),
        (SpinorView::Column, true) => format::column_json(&psi.to_column()).to_string(),
    };
    let mut code = 0;
    if check {
        for ((name, got), (_, want)) in computed_components(&psi).into_iter().zip(closed_form_components(p)) {
            let ok = (got - want).abs() <= 1e-12;
            if !ok {
                code = 1;
            }
            stdout.push_str(&format!(
                "\ncheck {name} computed {} closed-form {} {}",
                fmt_num(got),
                fmt_num(want),
                if ok { "ok" } else { "MISMATCH" }
            ));
        }
    }
    Output { stdout, code }
}

/// `|φ∘ψ|²` of the spinor with the given parameters against the standard spinor.
pub fn cross_section(p: LorentzParams, json: bool) -> Result<Output, CliError> {
    let phi = Spinor::from_params(p);
    let m = product_modulus_sq(&phi, &Spinor::STANDARD).map_err(|error| crate::EvalError::Algebra { error, at: 0 })?;
    let mott = mott_factor(p.theta);
    let r = |x: f64| format::round_sig(if x.abs() <= 1e-13 { 0.0 } else { x });
    Ok(Output::ok(if json {
        serde_json::json!({ "real": r(m.x), "ij": r(m.w), "mott": r(mott) }).to_string()
    } else {
        format!("real = {}\nij = {}\nmott = {}", fmt_num(r(m.x)), fmt_num(r(m.w)), fmt_num(r(mott)))
    }))
}

pub fn verify() -> Output {
    let reports = verify::all();
    let code = if reports.iter().all(|r| r.passed()) { 0 } else { 1 };
    Output { stdout: reports.iter().map(|r| r.line()).collect::<Vec<_>>().join("\n"), code }
}
