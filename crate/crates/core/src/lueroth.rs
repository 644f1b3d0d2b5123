//! Lueroth generators of unirational fields of transcendence degree one.
//!
//! Given rational functions f_1..f_m in Q(x_1..x_n), the generator search
//! works in Q(x)[y] with a fresh block y of n variables: each f_k yields
//! F_k = f_kn(y) - f_k(x) f_kd(y), stored cleared of denominators as
//! f_kd(x) f_kn(y) - f_kn(x) f_kd(y) in Z[x, y]. The running gcd of the
//! F_k (made primitive over the y block) either certifies that the field
//! is not of transcendence degree one, exposes one of the current functions
//! as a generator through its leading y-monomial, or contributes a smaller
//! new generator from its coefficients.

use crate::error::{Error, Result};
use crate::mgcd::{gcd_int, gcd_int_many};
use crate::monomial::ExpVec;
use crate::multipoly::MultiPoly;
use crate::ratfunc::RatFunc;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorStatus {
    /// A single rational function generating the whole field.
    Generator(RatFunc),
    NotTranscendenceDegreeOne,
    /// Every input was constant.
    ConstantField,
}

#[derive(Clone, Debug)]
pub struct GeneratorResult {
    pub status: GeneratorStatus,
    /// Number of gcd rounds performed.
    pub iterations: usize,
    /// The auxiliary functions adjoined in step D, in order.
    pub adjoined: Vec<RatFunc>,
}

/// The cleared polynomial `f_d(x) f_n(y) - f_n(x) f_d(y)` in 2n variables
/// (x block first). As an element of Q(x)[y] this is `f_d(x)` times
/// `F = f_n(y) - f(x) f_d(y)`.
pub fn build_f(f: &RatFunc) -> Result<MultiPoly> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let n = f.nvars();
    let fn_y = f.num().embed(2 * n, n);
    let fd_y = f.den().embed(2 * n, n);
    let fn_x = f.num().embed(2 * n, 0);
    let fd_x = f.den().embed(2 * n, 0);
    fd_x.mul(&fn_y)?.sub(&fn_x.mul(&fd_y)?)
}

/// Group the terms of a 2n-variable polynomial by y-monomial; coefficients
/// keep the 2n arity with the y block zeroed.
fn yblock_coeffs(h: &MultiPoly, n: usize) -> BTreeMap<ExpVec, MultiPoly> {
    let mut out: BTreeMap<ExpVec, MultiPoly> = BTreeMap::new();
    for (m, c) in h.terms() {
        let exps = m.exps();
        let ymono = ExpVec::from_exps(&exps[n..]);
        let mut xexps = exps.to_vec();
        for e in xexps[n..].iter_mut() {
            *e = 0;
        }
        out.entry(ymono)
            .or_insert_with(|| MultiPoly::zero(2 * n))
            .add_term(ExpVec::from_exps(&xexps), c.clone());
    }
    out
}

/// Divide out constants and the y-content (the gcd over Z[x] of the
/// y-coefficients), leaving a primitive integer polynomial.
fn y_primitive(h: &MultiPoly, n: usize) -> MultiPoly {
    if h.is_zero() {
        return h.clone();
    }
    let (_, h) = h.primitive_parts();
    let coeffs: Vec<MultiPoly> = yblock_coeffs(&h, n).into_values().collect();
    let content = gcd_int_many(&coeffs);
    let reduced = h.exact_div(&content).expect("y-content divides");
    let (_, prim) = reduced.primitive_parts();
    prim
}

/// Leading y-monomial (graded lex over the y block, coefficients ignored).
fn lm_y(h: &MultiPoly, n: usize) -> Option<ExpVec> {
    h.terms().map(|(m, _)| ExpVec::from_exps(&m.exps()[n..])).max()
}

fn y_degree(h: &MultiPoly, n: usize) -> usize {
    h.block_degree(n, 2 * n)
}

/// The Lueroth generator of Q(f_1, ..., f_m), when the field has
/// transcendence degree one.
pub fn luroth_generator(fs: &[RatFunc]) -> Result<GeneratorResult> {
    if fs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = fs[0].nvars();
    for f in fs {
        if f.nvars() != n {
            return Err(Error::VarMismatch { left: n, right: f.nvars() });
        }
    }
    let mut list: Vec<RatFunc> = fs.iter().filter(|f| !f.is_constant()).cloned().collect();
    if list.is_empty() {
        return Ok(GeneratorResult {
            status: GeneratorStatus::ConstantField,
            iterations: 0,
            adjoined: Vec::new(),
        });
    }
    let original = list.len();
    // primitive integer versions; constant scalings do not change the gcds
    let mut cleared: Vec<MultiPoly> = list
        .iter()
        .map(|f| build_f(f).map(|c| c.primitive_parts().1))
        .collect::<Result<_>>()?;
    let mut h = y_primitive(&cleared[0], n);
    for f in &cleared[1..] {
        h = y_primitive(&gcd_int(&h, f), n);
    }

    let mut iterations = 0usize;
    loop {
        iterations += 1;
        if iterations > 64 {
            return Err(Error::Internal("generator search exceeded its round budget".into()));
        }
        if y_degree(&h, n) == 0 {
            return Ok(GeneratorResult {
                status: GeneratorStatus::NotTranscendenceDegreeOne,
                iterations,
                adjoined: list[original..].to_vec(),
            });
        }
        let lm_h = lm_y(&h, n).unwrap();
        if let Some(j) = cleared.iter().position(|f| lm_y(f, n).as_ref() == Some(&lm_h)) {
            return Ok(GeneratorResult {
                status: GeneratorStatus::Generator(list[j].clone()),
                iterations,
                adjoined: list[original..].to_vec(),
            });
        }
        // adjoin a non-constant coefficient of the monic gcd
        let coeffs = yblock_coeffs(&h, n);
        let lead = coeffs.get(&lm_h).unwrap().project(0, n);
        let mut best: Option<(usize, String, RatFunc)> = None;
        for (mono, cpoly) in &coeffs {
            if *mono == lm_h {
                continue;
            }
            let cand = RatFunc::new(cpoly.project(0, n), lead.clone())?;
            if cand.is_constant() {
                continue;
            }
            let names = crate::display::default_var_names(n);
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let key = (
                cand.degree(),
                format!(
                    "({})/({})",
                    crate::display::poly_to_text(cand.num(), &refs),
                    crate::display::poly_to_text(cand.den(), &refs)
                ),
                cand,
            );
            best = match best {
                None => Some(key),
                Some(b) if (key.0, &key.1) < (b.0, &b.1) => Some(key),
                Some(b) => Some(b),
            };
        }
        let Some((deg, _, adjoin)) = best else {
            // monic gcd with every coefficient constant and y-degree > 0
            // cannot happen for inputs of positive degree; treat as failure
            return Err(Error::Internal("gcd has no non-constant coefficient".into()));
        };
        let max_deg = list.iter().map(|f| f.degree()).max().unwrap();
        if deg >= max_deg {
            return Err(Error::Internal(format!(
                "adjoined coefficient degree {deg} did not decrease below {max_deg}"
            )));
        }
        let f_new = build_f(&adjoin)?.primitive_parts().1;
        list.push(adjoin);
        cleared.push(f_new.clone());
        h = y_primitive(&gcd_int(&h, &f_new), n);
    }
}

/// A polynomial generating Q(f_1, ..., f_m), when one exists.
///
/// Runs the generator search and then normalizes: for a generator
/// f' = f'_n/f'_d of degree s, either the numerator or denominator
/// dominates (the field contains a polynomial only if the dominated side is
/// constant), or both have degree s and the top homogeneous components must
/// have a constant ratio `a` with `f'_n - a f'_d` constant; in that case
/// f'_d itself is a polynomial generator.
pub fn polynomial_generator(fs: &[RatFunc]) -> Result<Option<MultiPoly>> {
    let result = luroth_generator(fs)?;
    let f = match result.status {
        GeneratorStatus::Generator(f) => f,
        _ => return Ok(None),
    };
    let sn = f.num().total_degree();
    let sd = f.den().total_degree();
    if sn > sd {
        if f.is_polynomial() {
            return Ok(Some(f.num().clone()));
        }
        return Ok(None);
    }
    if sn < sd {
        if f.num().is_constant() {
            return Ok(Some(f.recip()?.num().clone()));
        }
        return Ok(None);
    }
    // equal top degrees: ratio of top homogeneous components must be constant
    let top_n = f.num().homogeneous_component(sn);
    let top_d = f.den().homogeneous_component(sd);
    let Some(q) = top_n.exact_div(&top_d) else {
        return Ok(None);
    };
    let Some(a) = q.constant_value() else {
        return Ok(None);
    };
    let rem = f.num().sub(&f.den().mul_scalar(&a))?;
    match rem.constant_value() {
        Some(c) if !num_traits::Zero::is_zero(&c) => Ok(Some(f.den().clone())),
        _ => Ok(None),
    }
}
