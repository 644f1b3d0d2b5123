//! Golden-corpus runner. Corpus files are plain text, one expression per
//! line, with `#` comment lines; directive comments describe the command,
//! the variables, and the expected output, e.g.
//!
//!   # cmd: decompose
//!   # vars: x,y,z
//!   # algorithms: nearsep,factor
//!   <f>
//!   # expect-g: 4*t^2 - 2*t + 10
//!   # expect-h: x + z^2*y - z*y^2
//!
//! Expected values are compared up to equivalence (decompositions by a
//! degree-1 unit on the right component, generators by mutual degree-1
//! left components).

use crate::parser::parse_ratfunc;
use std::fmt::Write as _;
use std::path::Path;
use unirat_core::decompose::{
    decompose_factor, decompose_nearsep, equivalent, left_component, Decomposition,
};
use unirat_core::lueroth::{luroth_generator, GeneratorStatus};
use unirat_core::ratfunc::{compose, RatFunc};

#[derive(Debug, Default)]
pub struct CorpusReport {
    pub passed: Vec<String>,
    pub failed: Vec<(String, String)>,
    pub warnings: Vec<String>,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.failed.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for w in &self.warnings {
            writeln!(out, "warning: {w}").unwrap();
        }
        for p in &self.passed {
            writeln!(out, "PASS {p}").unwrap();
        }
        for (name, diff) in &self.failed {
            writeln!(out, "FAIL {name}\n{diff}").unwrap();
        }
        writeln!(
            out,
            "{} passed, {} failed",
            self.passed.len(),
            self.failed.len()
        )
        .unwrap();
        out
    }
}

struct CorpusFile {
    cmd: String,
    vars: Vec<String>,
    algorithms: Vec<String>,
    classes: Option<usize>,
    exprs: Vec<String>,
    expect: Option<String>,
    expect_g: Option<String>,
    expect_h: Option<String>,
}

fn parse_corpus_file(name: &str, text: &str) -> Result<CorpusFile, String> {
    let _ = name;
    let mut file = CorpusFile {
        cmd: String::new(),
        vars: vec!["x".into(), "y".into(), "z".into()],
        algorithms: vec!["nearsep".into()],
        classes: None,
        exprs: Vec::new(),
        expect: None,
        expect_g: None,
        expect_h: None,
    };
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some((key, value)) = comment.split_once(':') {
                let value = value.trim().to_string();
                match key.trim() {
                    "cmd" => file.cmd = value,
                    "vars" => {
                        file.vars = value.split(',').map(|v| v.trim().to_string()).collect()
                    }
                    "algorithms" => {
                        file.algorithms =
                            value.split(',').map(|v| v.trim().to_string()).collect()
                    }
                    "classes" => {
                        file.classes =
                            Some(value.parse().map_err(|_| "bad classes directive")?)
                    }
                    "expect" => file.expect = Some(value),
                    "expect-g" => file.expect_g = Some(value),
                    "expect-h" => file.expect_h = Some(value),
                    _ => {} // free-form comment
                }
            }
            continue;
        }
        file.exprs.push(line.to_string());
    }
    if file.cmd.is_empty() {
        return Err("missing '# cmd:' directive".into());
    }
    Ok(file)
}

fn same_field(a: &RatFunc, b: &RatFunc) -> Result<bool, String> {
    let fwd = left_component(a, b).map_err(|e| e.to_string())?;
    let bwd = left_component(b, a).map_err(|e| e.to_string())?;
    Ok(matches!((fwd, bwd), (Some(l1), Some(l2)) if l1.degree() == 1 && l2.degree() == 1))
}

fn run_file(file: &CorpusFile) -> Result<(), String> {
    let parse = |text: &str| {
        parse_ratfunc(text, &file.vars).map_err(|e| format!("cannot parse '{text}': {e}"))
    };
    match file.cmd.as_str() {
        "luroth" => {
            let fs: Vec<RatFunc> =
                file.exprs.iter().map(|e| parse(e)).collect::<Result<_, _>>()?;
            let expected = parse(
                file.expect
                    .as_deref()
                    .ok_or("luroth corpus entry needs '# expect:'")?,
            )?;
            let result = luroth_generator(&fs).map_err(|e| e.to_string())?;
            let GeneratorStatus::Generator(gen) = &result.status else {
                return Err(format!("expected a generator, engine said {:?}", result.status));
            };
            if !same_field(gen, &expected)? {
                return Err(format!(
                    "generator mismatch\n  engine:   {gen:?}\n  expected: {expected:?}"
                ));
            }
            Ok(())
        }
        "decompose" => {
            let f = parse(file.exprs.first().ok_or("decompose needs one expression")?)?;
            let g_text = file.expect_g.as_deref().ok_or("missing '# expect-g:'")?;
            let h_text = file.expect_h.as_deref().ok_or("missing '# expect-h:'")?;
            let expected_h = parse(h_text)?;
            let expected_g = {
                let tvars = vec!["t".to_string()];
                let gf = parse_ratfunc(g_text, &tvars)
                    .map_err(|e| format!("cannot parse expected g: {e}"))?;
                unirat_core::unipoly::UniRatFunc::new(
                    unirat_core::unipoly::UniPoly::from_multipoly(gf.num(), 0),
                    unirat_core::unipoly::UniPoly::from_multipoly(gf.den(), 0),
                )
                .map_err(|e| e.to_string())?
            };
            let expected = Decomposition::new(expected_g, expected_h, f.degree());
            if compose(&expected.g, &expected.h).map_err(|e| e.to_string())? != f {
                return Err("expected decomposition does not compose to the input".into());
            }
            for alg in &file.algorithms {
                let d = match alg.as_str() {
                    "nearsep" => decompose_nearsep(&f),
                    "factor" => decompose_factor(&f),
                    other => return Err(format!("unknown algorithm '{other}'")),
                }
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("algorithm {alg} found no decomposition"))?;
                if compose(&d.g, &d.h).map_err(|e| e.to_string())? != f {
                    return Err(format!("algorithm {alg} returned a non-composing pair"));
                }
                if !equivalent(&d, &expected).map_err(|e| e.to_string())? {
                    return Err(format!(
                        "algorithm {alg} decomposition not equivalent\n  engine h:   {:?}\n  expected h: {:?}",
                        d.h, expected.h
                    ));
                }
            }
            if let Some(k) = file.classes {
                let all =
                    unirat_core::decompose::decompose_all(&f).map_err(|e| e.to_string())?;
                if all.len() != k {
                    return Err(format!(
                        "expected exactly {k} equivalence class(es), found {}",
                        all.len()
                    ));
                }
            }
            Ok(())
        }
        other => Err(format!("unknown corpus command '{other}'")),
    }
}

/// Execute every golden example in a corpus directory.
pub fn run_golden_corpus(dir: &Path) -> std::io::Result<CorpusReport> {
    let mut report = CorpusReport::default();
    let mut entries: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().map(|x| x == "txt").unwrap_or(false))
        .collect();
    entries.sort();
    if entries.is_empty() {
        report
            .warnings
            .push(format!("corpus directory {} holds no .txt files; vacuous pass", dir.display()));
        return Ok(report);
    }
    for path in entries {
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        let text = std::fs::read_to_string(&path)?;
        match parse_corpus_file(&name, &text).and_then(|f| run_file(&f)) {
            Ok(()) => report.passed.push(name),
            Err(diff) => report.failed.push((name, diff)),
        }
    }
    Ok(report)
}
