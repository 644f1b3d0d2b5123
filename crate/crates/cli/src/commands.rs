//! Command implementations shared by the binary and the test suites.
//! Every command reports a stable JSON payload, a human text form, and an
//! exit class: Ok (0), Null for none/null mathematical answers (1), and
//! usage errors (2) surfaced as Err.

use crate::output::{decomposition_json, payload, ratfunc_text, unirat_text, Timings};
use crate::parser::{parse_ratfunc, ParseError};
use serde_json::{json, Value};
use std::time::Instant;
use unirat_core::decompose::{
    decompose_all, decompose_factor, decompose_nearsep, left_component,
};
use unirat_core::factor::timing;
use unirat_core::lueroth::{luroth_generator, polynomial_generator, GeneratorStatus};
use unirat_core::ratfunc::RatFunc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitClass {
    Ok,
    Null,
}

pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub exit: ExitClass,
}

#[derive(Debug)]
pub enum CmdError {
    Parse(ParseError),
    Engine(unirat_core::Error),
    Usage(String),
}

impl std::fmt::Display for CmdError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CmdError::Parse(e) => write!(f, "{e}"),
            CmdError::Engine(e) => write!(f, "{e}"),
            CmdError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl From<ParseError> for CmdError {
    fn from(e: ParseError) -> Self {
        CmdError::Parse(e)
    }
}

impl From<unirat_core::Error> for CmdError {
    fn from(e: unirat_core::Error) -> Self {
        CmdError::Engine(e)
    }
}

pub type CmdResult = Result<Outcome, CmdError>;

fn parse_all(exprs: &[String], vars: &[String]) -> Result<Vec<RatFunc>, CmdError> {
    exprs.iter().map(|e| Ok(parse_ratfunc(e, vars)?)).collect()
}

struct Stopwatch(Instant);

impl Stopwatch {
    fn start() -> Self {
        timing::reset();
        Stopwatch(Instant::now())
    }

    fn timings(&self) -> Timings {
        Timings {
            total_ms: self.0.elapsed().as_secs_f64() * 1e3,
            factor_ms: timing::elapsed().as_secs_f64() * 1e3,
        }
    }
}

pub fn cmd_luroth(exprs: &[String], vars: &[String]) -> CmdResult {
    let fs = parse_all(exprs, vars)?;
    let sw = Stopwatch::start();
    let result = luroth_generator(&fs)?;
    let t = sw.timings();
    Ok(match result.status {
        GeneratorStatus::Generator(g) => {
            let text = ratfunc_text(&g, vars);
            Outcome {
                json: payload("generator", Some(text.clone()), None, None, None, &t),
                text: format!("generator: {text}"),
                exit: ExitClass::Ok,
            }
        }
        GeneratorStatus::NotTranscendenceDegreeOne => Outcome {
            json: payload("not-transcendence-degree-one", None, None, None, None, &t),
            text: "the field does not have transcendence degree 1".into(),
            exit: ExitClass::Null,
        },
        GeneratorStatus::ConstantField => Outcome {
            json: payload("constant-field", None, None, None, None, &t),
            text: "every input is constant".into(),
            exit: ExitClass::Null,
        },
    })
}

pub fn cmd_polygen(exprs: &[String], vars: &[String]) -> CmdResult {
    let fs = parse_all(exprs, vars)?;
    let sw = Stopwatch::start();
    let result = polynomial_generator(&fs)?;
    let t = sw.timings();
    Ok(match result {
        Some(p) => {
            let text = ratfunc_text(&RatFunc::from_poly(p), vars);
            Outcome {
                json: payload("polynomial-generator", Some(text.clone()), None, None, None, &t),
                text: format!("polynomial generator: {text}"),
                exit: ExitClass::Ok,
            }
        }
        None => Outcome {
            json: payload("none", None, None, None, None, &t),
            text: "the field contains no non-constant polynomial".into(),
            exit: ExitClass::Null,
        },
    })
}

pub fn cmd_decompose(expr: &str, vars: &[String], all: bool) -> CmdResult {
    let f = parse_ratfunc(expr, vars)?;
    let sw = Stopwatch::start();
    if all {
        let classes = decompose_all(&f)?;
        let t = sw.timings();
        if classes.is_empty() {
            return Ok(Outcome {
                json: payload("indecomposable", None, None, None, Some(json!([])), &t),
                text: "no nontrivial decomposition".into(),
                exit: ExitClass::Null,
            });
        }
        let rendered: Vec<Value> =
            classes.iter().map(|d| decomposition_json(d, vars)).collect();
        let lines: Vec<String> = classes
            .iter()
            .enumerate()
            .map(|(i, d)| {
                format!(
                    "class {}: g = {}, h = {}",
                    i + 1,
                    unirat_text(&d.g),
                    ratfunc_text(&d.h, vars)
                )
            })
            .collect();
        return Ok(Outcome {
            json: payload(
                "decomposed",
                None,
                Some(unirat_text(&classes[0].g)),
                Some(ratfunc_text(&classes[0].h, vars)),
                Some(Value::Array(rendered)),
                &t,
            ),
            text: format!("{} equivalence class(es)\n{}", classes.len(), lines.join("\n")),
            exit: ExitClass::Ok,
        });
    }
    let d = decompose_nearsep(&f)?;
    let t = sw.timings();
    Ok(match d {
        Some(d) => {
            let g = unirat_text(&d.g);
            let h = ratfunc_text(&d.h, vars);
            Outcome {
                json: payload(
                    "decomposed",
                    None,
                    Some(g.clone()),
                    Some(h.clone()),
                    Some(Value::Array(vec![decomposition_json(&d, vars)])),
                    &t,
                ),
                text: format!("g = {g}\nh = {h}"),
                exit: ExitClass::Ok,
            }
        }
        None => Outcome {
            json: payload("indecomposable", None, None, None, None, &t),
            text: "no nontrivial decomposition".into(),
            exit: ExitClass::Null,
        },
    })
}

/// Membership of f in Q(h): report the unique g with f = g(h) when present.
pub fn cmd_member(f_expr: &str, h_expr: &str, vars: &[String]) -> CmdResult {
    let f = parse_ratfunc(f_expr, vars)?;
    let h = parse_ratfunc(h_expr, vars)?;
    let sw = Stopwatch::start();
    let g = left_component(&f, &h)?;
    let t = sw.timings();
    Ok(match g {
        Some(g) => {
            let text = unirat_text(&g);
            Outcome {
                json: payload("member", None, Some(text.clone()), None, None, &t),
                text: format!("g = {text}"),
                exit: ExitClass::Ok,
            }
        }
        None => Outcome {
            json: payload("not-a-member", None, None, None, None, &t),
            text: "f is not a rational function of h".into(),
            exit: ExitClass::Null,
        },
    })
}

/// Field equality of Q(h1) and Q(h2): degree-1 left components both ways.
pub fn cmd_equiv(h1_expr: &str, h2_expr: &str, vars: &[String]) -> CmdResult {
    let h1 = parse_ratfunc(h1_expr, vars)?;
    let h2 = parse_ratfunc(h2_expr, vars)?;
    let sw = Stopwatch::start();
    let fwd = left_component(&h1, &h2)?;
    let bwd = left_component(&h2, &h1)?;
    let t = sw.timings();
    let eq = matches!(
        (&fwd, &bwd),
        (Some(a), Some(b)) if a.degree() == 1 && b.degree() == 1
    );
    Ok(Outcome {
        json: payload(if eq { "equivalent" } else { "inequivalent" }, None, None, None, None, &t),
        text: if eq { "equivalent".into() } else { "inequivalent".into() },
        exit: if eq { ExitClass::Ok } else { ExitClass::Null },
    })
}

/// Cross-check helper used by the golden runner: the factor-pair route.
pub fn decompose_factor_checked(
    f: &RatFunc,
) -> Result<Option<unirat_core::decompose::Decomposition>, CmdError> {
    Ok(decompose_factor(f)?)
}
