//! Uni-multivariate decomposition f = g(h) by two independent routes.
//!
//! The near-separated route factors p = f_n(x) f_d(y) - f_d(x) f_n(y) and
//! searches its divisors for symmetric near-separated polynomials
//! H = r(x) s(y) - s(x) r(y); each representation gives a right component
//! h = r/s, and the left component g comes from an exact linear solve.
//!
//! The factor-pair route first normalizes f so that lm f_n > lm f_d,
//! f_n(0) = 0 and f_d(0) != 0; then every right component divides the
//! numerator/denominator pair, so candidates (A, B) are drawn from their
//! factorizations under vanishing, leading-monomial, and degree filters.

use crate::error::{Error, Result};
use crate::factor::{divisors, factor, DivisorFilter};
use crate::linsolve::QMatrix;
use crate::monomial::{ExpVec, MOrder};
use crate::multipoly::MultiPoly;
use crate::rat::Rat;
use crate::ratfunc::{compose, RatFunc};
use crate::unipoly::{UniPoly, UniRatFunc};
use num_traits::{One, Zero};

// ---------------------------------------------------------------------------
// near-separated polynomials

/// p = f_n(x) f_d(y) - f_d(x) f_n(y) in 2n variables (x block first).
pub fn near_sep_poly(f: &RatFunc) -> Result<MultiPoly> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let n = f.nvars();
    f.num()
        .embed(2 * n, 0)
        .mul(&f.den().embed(2 * n, n))?
        .sub(&f.den().embed(2 * n, 0).mul(&f.num().embed(2 * n, n))?)
}

/// A symmetric near-separated representation H = r(x) s(y) - s(x) r(y),
/// normalized so r(anchor) = 0 and s(anchor) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearSepRep {
    pub r: MultiPoly,
    pub s: MultiPoly,
}

/// Deterministic anchor sequence: origin, unit vectors, then integer grids
/// of growing radius.
fn anchor_points(n: usize) -> impl Iterator<Item = Vec<Rat>> {
    let zero = std::iter::once(vec![Rat::zero(); n]);
    let units = (0..n).map(move |i| {
        let mut v = vec![Rat::zero(); n];
        v[i] = Rat::one();
        v
    });
    let grids = (2i64..=4).flat_map(move |radius| {
        let side = (2 * radius + 1) as usize;
        let total = side.pow(n as u32);
        (0..total).map(move |idx| {
            let mut v = Vec::with_capacity(n);
            let mut rest = idx;
            for _ in 0..n {
                let digit = (rest % side) as i64 - radius;
                rest /= side;
                v.push(Rat::from_integer(digit.into()));
            }
            v
        })
    });
    zero.chain(units).chain(grids)
}

/// Try to write a 2n-variable polynomial as r(x) s(y) - s(x) r(y).
/// Absence is the `None` return; the input must be nonzero.
pub fn symmetric_nearsep_rep(h: &MultiPoly) -> Option<NearSepRep> {
    assert!(!h.is_zero());
    assert!(h.nvars() % 2 == 0);
    let n = h.nvars() / 2;
    if !h.diagonal().is_zero() {
        return None;
    }
    if h.swap_blocks() != h.neg() {
        return None;
    }
    let dx = h.block_degree(0, n);
    // anchor with H(x, alpha) != 0
    let (alpha, r) = anchor_points(n)
        .map(|a| {
            let r = h.eval_second_block(&a);
            (a, r)
        })
        .find(|(_, r)| !r.is_zero())?;
    // unknowns: coefficients of s on monomials of degree <= dx
    let monos = monomials_up_to(n, dx);
    let r_x = r.embed(2 * n, 0);
    let r_y = r.embed(2 * n, n);
    // rows over the union of monomials of the generators and h
    let mut row_index = std::collections::BTreeMap::new();
    let mut columns: Vec<MultiPoly> = Vec::with_capacity(monos.len());
    for mu in &monos {
        let gen = r_x
            .mul_term(&mu.embed(2 * n, n), &Rat::one())
            .sub(&r_y.mul_term(&mu.embed(2 * n, 0), &Rat::one()))
            .unwrap();
        for (m, _) in gen.terms() {
            let next = row_index.len();
            row_index.entry(m.clone()).or_insert(next);
        }
        columns.push(gen);
    }
    for (m, _) in h.terms() {
        let next = row_index.len();
        row_index.entry(m.clone()).or_insert(next);
    }
    let mut mat = QMatrix::zero(row_index.len(), monos.len());
    for (j, gen) in columns.iter().enumerate() {
        for (m, c) in gen.terms() {
            mat.set(row_index[m], j, c.clone());
        }
    }
    let mut rhs = vec![Rat::zero(); row_index.len()];
    for (m, c) in h.terms() {
        rhs[row_index[m]] = c.clone();
    }
    let sol = mat.solve(&rhs).ok()??;
    let mut s = MultiPoly::zero(n);
    for (mu, c) in monos.into_iter().zip(sol) {
        s.add_term(mu, c);
    }
    // exact verification (the solve covered every row, so this is a theorem;
    // keep the check as the contract of the operation)
    let rebuilt = r_x
        .mul(&s.embed(2 * n, n))
        .unwrap()
        .sub(&s.embed(2 * n, 0).mul(&r_y).unwrap())
        .unwrap();
    if &rebuilt != h {
        return None;
    }
    debug_assert!(r.evaluate(&alpha).is_zero());
    debug_assert!(s.evaluate(&alpha).is_one());
    Some(NearSepRep { r, s })
}

fn monomials_up_to(n: usize, deg: usize) -> Vec<ExpVec> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    fn rec(exps: &mut Vec<u16>, v: usize, left: usize, out: &mut Vec<ExpVec>) {
        if v == exps.len() {
            out.push(ExpVec::from_exps(exps));
            return;
        }
        for d in 0..=left {
            exps[v] = d as u16;
            rec(exps, v + 1, left - d, out);
        }
        exps[v] = 0;
    }
    rec(&mut exps, 0, deg, &mut out);
    out
}

// ---------------------------------------------------------------------------
// left components

/// The homogeneous linear system of the left-component solve: columns are
/// a_0..a_w then b_0..b_w, rows are the monomials of
/// f_n * (sum b_i h_n^i h_d^(w-i)) - f_d * (sum a_i h_n^i h_d^(w-i)).
pub fn left_component_system(f: &RatFunc, h: &RatFunc, w: usize) -> QMatrix {
    let n = f.nvars();
    let mut powers = Vec::with_capacity(w + 1);
    for i in 0..=w {
        powers.push(h.num().pow(i).mul(&h.den().pow(w - i)).unwrap());
    }
    let mut row_index = std::collections::BTreeMap::new();
    let mut cols: Vec<MultiPoly> = Vec::with_capacity(2 * (w + 1));
    for i in 0..=w {
        cols.push(f.den().mul(&powers[i]).unwrap().neg());
    }
    for i in 0..=w {
        cols.push(f.num().mul(&powers[i]).unwrap());
    }
    for col in &cols {
        for (m, _) in col.terms() {
            let next = row_index.len();
            row_index.entry(m.clone()).or_insert(next);
        }
    }
    let mut mat = QMatrix::zero(row_index.len(), 2 * (w + 1));
    let _ = n;
    for (j, col) in cols.iter().enumerate() {
        for (m, c) in col.terms() {
            mat.set(row_index[m], j, c.clone());
        }
    }
    mat
}

fn g_from_vector(v: &[Rat], w: usize) -> Option<UniRatFunc> {
    let num = UniPoly::from_coeffs(v[..=w].to_vec());
    let den = UniPoly::from_coeffs(v[w + 1..].to_vec());
    if den.is_zero() {
        return None;
    }
    UniRatFunc::new(num, den).ok()
}

/// Restrict a polynomial to the line x_i = c_i t + d_i.
fn restrict_line(p: &MultiPoly, c: &[Rat], d: &[Rat]) -> UniPoly {
    let n = p.nvars();
    let mut tables: Vec<Vec<UniPoly>> = Vec::with_capacity(n);
    for v in 0..n {
        let dmax = p.degree_in_var(v);
        let lin = UniPoly::from_coeffs(vec![d[v].clone(), c[v].clone()]);
        let mut row = Vec::with_capacity(dmax + 1);
        row.push(UniPoly::one());
        for e in 1..=dmax {
            let nxt = row[e - 1].mul(&lin);
            row.push(nxt);
        }
        tables.push(row);
    }
    let mut acc = UniPoly::zero();
    for (m, coef) in p.terms() {
        let mut t = UniPoly::constant(coef.clone());
        for (v, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                t = t.mul(&tables[v][e as usize]);
            }
        }
        acc = acc.add(&t);
    }
    acc
}

/// Left-component solve restricted to one line (both fractions must stay
/// reduced with full degree on the line for the restriction to be faithful).
fn uni_left_component(f: &UniRatFunc, h: &UniRatFunc, w: usize) -> Option<UniRatFunc> {
    let mut powers = Vec::with_capacity(w + 1);
    for i in 0..=w {
        powers.push(h.num().pow(i).mul(&h.den().pow(w - i)));
    }
    let rows = 1 + (f.num().degree().max(f.den().degree()) + w * h.degree());
    let mut mat = QMatrix::zero(rows + 1, 2 * (w + 1));
    for i in 0..=w {
        let col = f.den().mul(&powers[i]).neg();
        for (e, c) in col.coeffs().iter().enumerate() {
            mat.set(e, i, c.clone());
        }
        let col = f.num().mul(&powers[i]);
        for (e, c) in col.coeffs().iter().enumerate() {
            mat.set(e, w + 1 + i, c.clone());
        }
    }
    for v in mat.nullspace() {
        if let Some(g) = g_from_vector(&v, w) {
            return Some(g);
        }
    }
    None
}

/// The unique g with f = g(h), computed by an exact linear solve
/// (`None` when no such g exists). Requires h non-constant.
pub fn left_component(f: &RatFunc, h: &RatFunc) -> Result<Option<UniRatFunc>> {
    if h.is_constant() {
        return Err(Error::ConstantInput);
    }
    let df = f.degree();
    let dh = h.degree();
    if df == 0 || df % dh != 0 {
        return Ok(None);
    }
    let w = df / dh;

    // fast path: solve on a faithful line; sound because the univariate left
    // component is unique, complete because faithful restrictions preserve it
    let n = f.nvars();
    for attempt in 0..6u64 {
        let (c, d): (Vec<Rat>, Vec<Rat>) = (0..n)
            .map(|v| {
                let mix = attempt * 7 + v as u64;
                (
                    Rat::from_integer(((mix % 5) as i64 + 1).into()),
                    Rat::from_integer((((mix / 5) % 7) as i64 - 3).into()),
                )
            })
            .unzip();
        let fl = match UniRatFunc::new(restrict_line(f.num(), &c, &d), restrict_line(f.den(), &c, &d)) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let hl = match UniRatFunc::new(restrict_line(h.num(), &c, &d), restrict_line(h.den(), &c, &d)) {
            Ok(v) => v,
            Err(_) => continue,
        };
        if fl.degree() != df || hl.degree() != dh {
            continue; // degree dropped: not a faithful line
        }
        return Ok(match uni_left_component(&fl, &hl, w) {
            None => None,
            Some(g) => {
                if g.degree() == w && compose(&g, h)? == *f {
                    Some(g)
                } else {
                    None
                }
            }
        });
    }

    // full multivariate system
    let mat = left_component_system(f, h, w);
    for v in mat.nullspace() {
        if let Some(g) = g_from_vector(&v, w) {
            if g.degree() == w && compose(&g, h)? == *f {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// decompositions

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub g: UniRatFunc,
    pub h: RatFunc,
    /// Not (1 < deg h < deg f).
    pub trivial: bool,
}

impl Decomposition {
    pub fn new(g: UniRatFunc, h: RatFunc, f_degree: usize) -> Self {
        let dh = h.degree();
        Decomposition { g, h, trivial: !(1 < dh && dh < f_degree) }
    }
}

/// True when the two decompositions' right components generate the same
/// field, i.e. a degree-1 unit l has d1.h = l(d2.h).
pub fn equivalent(d1: &Decomposition, d2: &Decomposition) -> Result<bool> {
    Ok(matches!(left_component(&d1.h, &d2.h)?, Some(l) if l.degree() == 1))
}

fn nontrivial_degrees(df: usize) -> Vec<usize> {
    (2..df).filter(|d| df % d == 0).collect()
}

/// Algorithm based on the near-separated polynomial: factor
/// p = f_n(x) f_d(y) - f_d(x) f_n(y) and test its divisors.
pub fn decompose_nearsep(f: &RatFunc) -> Result<Option<Decomposition>> {
    Ok(nearsep_sweep(f, false)?.into_iter().next())
}

/// All pairwise-inequivalent nontrivial decompositions (one representative
/// per intermediate field).
pub fn decompose_all(f: &RatFunc) -> Result<Vec<Decomposition>> {
    nearsep_sweep(f, true)
}

fn nearsep_sweep(f: &RatFunc, exhaustive: bool) -> Result<Vec<Decomposition>> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let df = f.degree();
    let valid: Vec<usize> = nontrivial_degrees(df);
    if valid.is_empty() {
        return Ok(Vec::new());
    }
    let n = f.nvars();
    let p = near_sep_poly(f)?;
    let fl = factor(&p)?;
    // cheap necessary screen: candidates must vanish on the diagonal
    let diag_point: Vec<Rat> = (0..2 * n)
        .map(|v| Rat::from_integer(((v % n) as i64 + 2).into()))
        .collect();
    let filter = DivisorFilter {
        max_degree: Some(2 * valid.iter().max().unwrap()),
        vanish_at: Some((diag_point, true)),
        ..Default::default()
    };
    let mut found: Vec<Decomposition> = Vec::new();
    for cand in divisors(&fl, &filter) {
        let dx = cand.block_degree(0, n);
        let dy = cand.block_degree(n, 2 * n);
        if dx != dy || !valid.contains(&dx) {
            continue;
        }
        let Some(rep) = symmetric_nearsep_rep(&cand) else {
            continue;
        };
        let h = RatFunc::new(rep.r, rep.s)?;
        if h.is_constant() {
            continue;
        }
        let Some(g) = left_component(f, &h)? else {
            continue;
        };
        let dec = Decomposition::new(g, h, df);
        if dec.trivial {
            continue;
        }
        if exhaustive {
            let mut fresh = true;
            for seen in &found {
                if equivalent(&dec, seen)? {
                    fresh = false;
                    break;
                }
            }
            if fresh {
                found.push(dec);
            }
        } else {
            found.push(dec);
            break;
        }
    }
    Ok(found)
}

// ---------------------------------------------------------------------------
// normalization for the factor-pair algorithm

/// Units applied on the left (in order) and the shift point; applying the
/// recorded inverses to a decomposition of the normalized function yields a
/// decomposition of the original.
#[derive(Clone, Debug)]
pub struct NormalizationRecord {
    pub units: Vec<UniRatFunc>,
    pub alpha: Vec<Rat>,
}

/// Produce fbar = u2(u1(f)(x + alpha)) with lm fbar_n > lm fbar_d,
/// fbar_n(0) = 0 and fbar_d(0) != 0 under the given ordering.
pub fn normalize_for_factoring(
    f: &RatFunc,
    ord: &MOrder,
) -> Result<(RatFunc, NormalizationRecord)> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let (lmn, lcn) = f.num().leading_monomial(ord)?;
    let (lmd, lcd) = f.den().leading_monomial(ord)?;
    let u1 = match ord.cmp(&lmn, &lmd) {
        std::cmp::Ordering::Less => {
            UniRatFunc::new(UniPoly::one(), UniPoly::var()).unwrap()
        }
        std::cmp::Ordering::Equal => {
            // 1/(y - lc f_n / lc f_d)
            let c = lcn / lcd;
            UniRatFunc::new(UniPoly::one(), UniPoly::from_coeffs(vec![-c, Rat::one()])).unwrap()
        }
        std::cmp::Ordering::Greater => UniRatFunc::identity(),
    };
    let f1 = compose(&u1, f)?;
    {
        let (n1, _) = f1.num().leading_monomial(ord)?;
        let (d1, _) = f1.den().leading_monomial(ord)?;
        assert_eq!(ord.cmp(&n1, &d1), std::cmp::Ordering::Greater, "unit step failed");
    }
    let alpha = anchor_points(f.nvars())
        .find(|a| !f1.den().evaluate(a).is_zero())
        .expect("anchor sequence exhausted");
    let f2 = f1.shift(&alpha);
    let origin = vec![Rat::zero(); f.nvars()];
    let c2 = f2.num().evaluate(&origin) / f2.den().evaluate(&origin);
    let u2 = UniRatFunc::new(
        UniPoly::from_coeffs(vec![-c2.clone(), Rat::one()]),
        UniPoly::one(),
    )
    .unwrap();
    let fbar = f2.add_scalar(&-c2);
    // Lemma postconditions
    {
        let (n1, _) = fbar.num().leading_monomial(ord)?;
        let (d1, _) = fbar.den().leading_monomial(ord)?;
        assert_eq!(ord.cmp(&n1, &d1), std::cmp::Ordering::Greater);
        assert!(fbar.num().evaluate(&origin).is_zero());
        assert!(!fbar.den().evaluate(&origin).is_zero());
    }
    Ok((fbar, NormalizationRecord { units: vec![u1, u2], alpha }))
}

/// Algorithm based on factor pairs of the normalized numerator and
/// denominator.
pub fn decompose_factor(f: &RatFunc) -> Result<Option<Decomposition>> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let df = f.degree();
    let valid = nontrivial_degrees(df);
    if valid.is_empty() {
        return Ok(None);
    }
    let n = f.nvars();
    let ord = MOrder::graded_lex(n);
    let (fbar, record) = normalize_for_factoring(f, &ord)?;
    debug_assert_eq!(fbar.degree(), df);
    let fl_n = factor(fbar.num())?;
    let fl_d = factor(fbar.den())?;
    let origin = vec![Rat::zero(); n];
    let a_filter = DivisorFilter {
        max_degree: Some(*valid.iter().max().unwrap()),
        degree_divides: Some(df),
        vanish_at: Some((origin.clone(), true)),
        ..Default::default()
    };
    for a in divisors(&fl_n, &a_filter) {
        let d = a.total_degree();
        if d <= 1 {
            continue;
        }
        let (lm_a, _) = a.leading_natural().unwrap();
        // under a graded order lm A > lm B forces deg B <= deg A
        let b_filter = DivisorFilter {
            max_degree: Some(d),
            vanish_at: Some((origin.clone(), false)),
            lm_below: Some(lm_a.clone()),
            ..Default::default()
        };
        for b in divisors(&fl_d, &b_filter) {
            let hbar = RatFunc::new(a.clone(), b)?;
            debug_assert_eq!(hbar.degree(), d);
            let Some(gbar) = left_component(&fbar, &hbar)? else {
                continue;
            };
            // undo the normalization
            let back: Vec<Rat> = record.alpha.iter().map(|v| -v.clone()).collect();
            let h = hbar.shift(&back);
            let mut g = gbar;
            for u in record.units.iter().rev() {
                g = u.unit_inverse()?.compose(&g)?;
            }
            if compose(&g, &h)? != *f {
                continue;
            }
            let dec = Decomposition::new(g, h, df);
            if dec.trivial {
                continue;
            }
            return Ok(Some(dec));
        }
    }
    Ok(None)
}
