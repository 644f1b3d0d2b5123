//! Canonical text form: graded-lex descending terms, explicit `*` and `^`,
//! rationals printed `p/q`. This is the format golden tests compare against
//! and the CLI parser reads back.

use crate::multipoly::MultiPoly;
use crate::rat::Rat;
use num_traits::{One, Signed};
use std::fmt::Write;

/// Default variable names: x, y, z for up to three variables, x1..xn beyond.
pub fn default_var_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"].iter().take(n).map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

fn push_coeff_and_vars(out: &mut String, c: &Rat, vars: &[(usize, u16)], names: &[&str]) {
    let abs = c.abs();
    if vars.is_empty() {
        write!(out, "{abs}").unwrap();
        return;
    }
    if !abs.is_one() {
        write!(out, "{abs}*").unwrap();
    }
    let mut first = true;
    for &(v, e) in vars {
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(names[v]);
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

/// Render with explicit variable names (graded-lex descending).
pub fn poly_to_text(p: &MultiPoly, names: &[&str]) -> String {
    assert!(names.len() >= p.nvars(), "not enough variable names");
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let vars: Vec<(usize, u16)> = m
            .exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| (v, e))
            .collect();
        push_coeff_and_vars(&mut out, c, &vars, names);
    }
    out
}

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names = default_var_names(self.nvars());
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        f.write_str(&poly_to_text(self, &refs))
    }
}
