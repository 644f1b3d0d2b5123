//! Text rendering of engine values and the stable JSON schema. Every JSON
//! payload carries exactly the keys {status, generator, g, h, classes,
//! timings}; fields that do not apply are null.

use serde_json::{json, Value};
use unirat_core::decompose::Decomposition;
use unirat_core::display::poly_to_text;
use unirat_core::ratfunc::RatFunc;
use unirat_core::unipoly::UniRatFunc;

pub fn ratfunc_text(f: &RatFunc, vars: &[String]) -> String {
    let refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    if f.is_polynomial() {
        poly_to_text(f.num(), &refs)
    } else {
        format!("({})/({})", poly_to_text(f.num(), &refs), poly_to_text(f.den(), &refs))
    }
}

pub fn unirat_text(g: &UniRatFunc) -> String {
    g.to_text("t")
}

pub fn decomposition_json(d: &Decomposition, vars: &[String]) -> Value {
    json!({
        "g": unirat_text(&d.g),
        "h": ratfunc_text(&d.h, vars),
    })
}

pub struct Timings {
    pub total_ms: f64,
    pub factor_ms: f64,
}

/// Assemble the fixed-schema payload.
pub fn payload(
    status: &str,
    generator: Option<String>,
    g: Option<String>,
    h: Option<String>,
    classes: Option<Value>,
    timings: &Timings,
) -> Value {
    json!({
        "status": status,
        "generator": generator,
        "g": g,
        "h": h,
        "classes": classes,
        "timings": {
            "total_ms": timings.total_ms,
            "factor_ms": timings.factor_ms,
        },
    })
}
