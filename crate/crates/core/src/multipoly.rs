//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap<ExpVec, Rat>`; the map's key order is graded
//! lex under the natural variable priority (see `monomial`), so iteration
//! is always in canonical ascending term order and the natural leading term
//! is the last entry. No zero coefficients are ever stored.

use crate::error::{Error, Result};
use crate::monomial::{ExpVec, MOrder};
use crate::rat::{Int, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<ExpVec, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(ExpVec::zero(nvars), c);
        }
        p
    }

    /// The variable `x_i` as a polynomial.
    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(i < nvars);
        let mut p = Self::zero(nvars);
        p.terms.insert(ExpVec::var(i, nvars), Rat::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (ExpVec, Rat)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "term arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().map(|c| c.is_one()).unwrap_or(false)
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero included).
    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExpVec, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &ExpVec) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total degree; zero polynomial reports 0.
    pub fn total_degree(&self) -> usize {
        self.terms.keys().next_back().map(|m| m.total_degree()).unwrap_or(0)
    }

    pub fn degree_in_var(&self, v: usize) -> usize {
        self.terms.keys().map(|m| m.exp(v) as usize).max().unwrap_or(0)
    }

    /// Total degree restricted to variables `[lo, hi)`.
    pub fn block_degree(&self, lo: usize, hi: usize) -> usize {
        self.terms.keys().map(|m| m.block_degree(lo, hi)).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: ExpVec, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.nvars);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        // Iterate the smaller operand on the outside.
        let (small, big) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn mul_scalar(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn mul_term(&self, m: &ExpVec, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = Self::zero(self.nvars);
        for (mm, cc) in &self.terms {
            out.terms.insert(mm.mul(m), cc * c);
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).unwrap();
            }
        }
        acc
    }

    /// Leading (monomial, coefficient) under the natural graded lex order.
    pub fn leading_natural(&self) -> Result<(ExpVec, Rat)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Leading (monomial, coefficient) under an arbitrary admissible order.
    pub fn leading_monomial(&self, ord: &MOrder) -> Result<(ExpVec, Rat)> {
        let mut best: Option<&ExpVec> = None;
        for m in self.terms.keys() {
            best = match best {
                None => Some(m),
                Some(b) => {
                    if ord.cmp(m, b) == std::cmp::Ordering::Greater {
                        Some(m)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        let m = best.ok_or(Error::ZeroPolynomial)?;
        Ok((m.clone(), self.terms[m].clone()))
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn homogeneous_component(&self, k: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.total_degree() == k {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn derivative(&self, v: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                let mut exps: Vec<u16> = m.exps().to_vec();
                exps[v] -= 1;
                out.add_term(ExpVec::from_exps(&exps), c * Rat::from_integer(Int::from(e)));
            }
        }
        out
    }

    /// Full evaluation at a rational point.
    pub fn evaluate(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let pows = power_tables(point, &self.max_exps());
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t *= &pows[v][e as usize];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute constants for a subset of variables; the result keeps the
    /// ambient arity with zero exponents in the evaluated slots.
    pub fn eval_vars(&self, assignments: &[(usize, Rat)]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            let mut exps: Vec<u16> = m.exps().to_vec();
            for (v, val) in assignments {
                let e = exps[*v];
                if e > 0 {
                    let mut pw = Rat::one();
                    for _ in 0..e {
                        pw *= val;
                    }
                    t *= pw;
                    exps[*v] = 0;
                }
            }
            out.add_term(ExpVec::from_exps(&exps), t);
        }
        out
    }

    /// Shift `x_i -> x_i + alpha_i` for every variable.
    pub fn shift(&self, alpha: &[Rat]) -> Self {
        assert_eq!(alpha.len(), self.nvars);
        let mut cur = self.clone();
        for (v, a) in alpha.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            cur = cur.shift_var(v, a);
        }
        cur
    }

    /// Shift a single variable `x_v -> x_v + a` via binomial expansion.
    pub fn shift_var(&self, v: usize, a: &Rat) -> Self {
        let dmax = self.degree_in_var(v);
        // binom[e][j] * a^(e-j)
        let mut weights: Vec<Vec<Rat>> = Vec::with_capacity(dmax + 1);
        for e in 0..=dmax {
            let mut row = Vec::with_capacity(e + 1);
            let mut binom = Int::one();
            for j in 0..=e {
                if j > 0 {
                    binom = &binom * Int::from(e - j + 1) / Int::from(j);
                }
                let mut w = Rat::from_integer(binom.clone());
                for _ in 0..(e - j) {
                    w *= a;
                }
                row.push(w);
            }
            weights.push(row);
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            if e == 0 {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            let mut exps: Vec<u16> = m.exps().to_vec();
            for j in 0..=e {
                exps[v] = j as u16;
                out.add_term(ExpVec::from_exps(&exps), c * &weights[e][j]);
            }
        }
        out
    }

    fn max_exps(&self) -> Vec<u16> {
        let mut mx = vec![0u16; self.nvars];
        for m in self.terms.keys() {
            for (v, &e) in m.exps().iter().enumerate() {
                if e > mx[v] {
                    mx[v] = e;
                }
            }
        }
        mx
    }

    /// Exact division: `Some(q)` with `self = q * d` or `None`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert_eq!(self.nvars, d.nvars);
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        if let Some(c) = d.constant_value() {
            return Some(self.mul_scalar(&c.recip()));
        }
        let (dm, dc) = d.leading_natural().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((rm, rc)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))
        {
            let qm = rm.try_div(&dm)?;
            let qc = rc / &dc;
            // rem -= (qc * qm) * d
            for (m, c) in &d.terms {
                rem.add_term(m.mul(&qm), -(c * &qc));
            }
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    /// True when every coefficient is an integer.
    pub fn is_integer(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Smallest positive integer `d` with `d * self` integral.
    pub fn denominator_lcm(&self) -> Int {
        let mut l = Int::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        l
    }

    /// gcd of the numerators of an integer polynomial (positive; 0 for zero).
    pub fn integer_content(&self) -> Int {
        let mut g = Int::zero();
        for c in self.terms.values() {
            debug_assert!(c.denom().is_one());
            g = g.gcd(c.numer());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Write `self = (num/den) * prim` with `prim` primitive integer with
    /// positive leading coefficient (natural graded lex). Zero maps to
    /// `(0, prim = 0)`.
    pub fn primitive_parts(&self) -> (Rat, Self) {
        if self.is_zero() {
            return (Rat::zero(), self.clone());
        }
        let den = self.denominator_lcm();
        let scaled = self.mul_scalar(&Rat::from_integer(den.clone()));
        let mut content = scaled.integer_content();
        let (_, lc) = scaled.leading_natural().unwrap();
        if lc.numer().is_negative() {
            content = -content;
        }
        let prim = scaled.mul_scalar(&Rat::from_integer(content.clone()).recip());
        (Rat::new(content, den), prim)
    }

    /// Scale so the natural-graded-lex leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_natural() {
            Ok((_, lc)) => self.mul_scalar(&lc.recip()),
            Err(_) => self.clone(),
        }
    }

    /// Per-variable minimum exponents (the monomial content).
    pub fn min_exps(&self) -> ExpVec {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => m,
            None => return ExpVec::zero(self.nvars),
        };
        let mut mins: Vec<u16> = first.exps().to_vec();
        for m in it {
            for (v, &e) in m.exps().iter().enumerate() {
                if e < mins[v] {
                    mins[v] = e;
                }
            }
        }
        ExpVec::from_exps(&mins)
    }

    pub fn div_monomial(&self, m: &ExpVec) -> Self {
        let mut out = Self::zero(self.nvars);
        for (mm, c) in &self.terms {
            out.terms.insert(mm.try_div(m).expect("monomial does not divide"), c.clone());
        }
        out
    }

    /// Coefficients viewed as a dense univariate polynomial in `v`; entry `e`
    /// is the coefficient of `v^e` (a polynomial with `v`-exponent zeroed).
    pub fn coeffs_in_var(&self, v: usize) -> Vec<Self> {
        let d = self.degree_in_var(v);
        let mut out = vec![Self::zero(self.nvars); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            let mut exps: Vec<u16> = m.exps().to_vec();
            exps[v] = 0;
            out[e].terms.insert(ExpVec::from_exps(&exps), c.clone());
        }
        out
    }

    /// Leading coefficient with respect to a single variable.
    pub fn lc_in_var(&self, v: usize) -> Self {
        let d = self.degree_in_var(v);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.exp(v) as usize == d {
                let mut exps: Vec<u16> = m.exps().to_vec();
                exps[v] = 0;
                out.terms.insert(ExpVec::from_exps(&exps), c.clone());
            }
        }
        out
    }

    /// Re-embed into `new_nvars` variables with this polynomial's variables
    /// starting at `offset`.
    pub fn embed(&self, new_nvars: usize, offset: usize) -> Self {
        assert!(offset + self.nvars <= new_nvars);
        let mut out = Self::zero(new_nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.embed(new_nvars, offset), c.clone());
        }
        out
    }

    /// Keep only variables `[offset, offset+keep)`; panics if any other
    /// variable occurs.
    pub fn project(&self, offset: usize, keep: usize) -> Self {
        let mut out = Self::zero(keep);
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; keep];
            for (v, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    assert!(
                        v >= offset && v < offset + keep,
                        "project: variable {v} out of block"
                    );
                    exps[v - offset] = e;
                }
            }
            out.terms.insert(ExpVec::from_exps(&exps), c.clone());
        }
        out
    }

    /// In a 2n-variable polynomial, swap the two n-variable blocks.
    pub fn swap_blocks(&self) -> Self {
        assert!(self.nvars % 2 == 0);
        let n = self.nvars / 2;
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; self.nvars];
            for v in 0..n {
                exps[v] = m.exp(v + n);
                exps[v + n] = m.exp(v);
            }
            out.terms.insert(ExpVec::from_exps(&exps), c.clone());
        }
        out
    }

    /// In a 2n-variable polynomial, substitute `y_i := x_i` and project to n
    /// variables.
    pub fn diagonal(&self) -> Self {
        assert!(self.nvars % 2 == 0);
        let n = self.nvars / 2;
        let mut out = Self::zero(n);
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; n];
            for v in 0..n {
                exps[v] = m.exp(v) + m.exp(v + n);
            }
            out.add_term(ExpVec::from_exps(&exps), c.clone());
        }
        out
    }

    /// Substitute constants for the second block of a 2n-variable polynomial
    /// and project onto the first block.
    pub fn eval_second_block(&self, alpha: &[Rat]) -> Self {
        assert!(self.nvars % 2 == 0);
        let n = self.nvars / 2;
        assert_eq!(alpha.len(), n);
        let assignments: Vec<(usize, Rat)> =
            alpha.iter().enumerate().map(|(i, a)| (n + i, a.clone())).collect();
        self.eval_vars(&assignments).project(0, n)
    }

    /// Deterministic total order on polynomials (for canonical factor lists).
    pub fn cmp_canonical(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.terms.len().cmp(&other.terms.len()))
            .then_with(|| {
                for ((ma, ca), (mb, cb)) in self.terms.iter().rev().zip(other.terms.iter().rev()) {
                    let o = ma.cmp(mb).then_with(|| ca.cmp(cb));
                    if o != std::cmp::Ordering::Equal {
                        return o;
                    }
                }
                std::cmp::Ordering::Equal
            })
    }
}

/// Power tables `point[v]^e` for `e <= max_exps[v]`.
fn power_tables(point: &[Rat], max_exps: &[u16]) -> Vec<Vec<Rat>> {
    point
        .iter()
        .zip(max_exps.iter())
        .map(|(p, &mx)| {
            let mut row = Vec::with_capacity(mx as usize + 1);
            row.push(Rat::one());
            for e in 1..=mx as usize {
                let nxt = &row[e - 1] * p;
                row.push(nxt);
            }
            row
        })
        .collect()
}

/// Convert an integer-coefficient polynomial to `BigInt` term pairs.
pub fn int_terms(p: &MultiPoly) -> Vec<(ExpVec, BigInt)> {
    p.terms().map(|(m, c)| (m.clone(), c.numer().clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn xy(nvars: usize, exps: &[u16], c: i64) -> (ExpVec, Rat) {
        (ExpVec::from_exps(&exps[..nvars]), rat(c))
    }

    #[test]
    fn add_cancels() {
        // (x+y) + (x-y) = 2x
        let a = MultiPoly::from_terms(2, [xy(2, &[1, 0], 1), xy(2, &[0, 1], 1)]);
        let b = MultiPoly::from_terms(2, [xy(2, &[1, 0], 1), xy(2, &[0, 1], -1)]);
        let s = a.add(&b).unwrap();
        assert_eq!(s, MultiPoly::from_terms(2, [xy(2, &[1, 0], 2)]));
    }

    #[test]
    fn mul_by_zero_absorbs() {
        let p = MultiPoly::from_terms(2, [xy(2, &[1, 1], 3), xy(2, &[0, 0], -2)]);
        assert!(p.mul(&MultiPoly::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let x = MultiPoly::var(0, 2);
        let y = MultiPoly::var(1, 2);
        let prod = x.sub(&y).unwrap().mul(&x.add(&y).unwrap()).unwrap();
        let expect = MultiPoly::from_terms(2, [xy(2, &[2, 0], 1), xy(2, &[0, 2], -1)]);
        assert_eq!(prod, expect);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let p = MultiPoly::var(0, 2);
        let q = MultiPoly::var(0, 3);
        assert!(matches!(p.add(&q), Err(Error::VarMismatch { .. })));
    }

    #[test]
    fn leading_monomial_tie_breaks_lexicographically() {
        // x^2 y + x y^2, graded lex x > y -> x^2 y
        let p = MultiPoly::from_terms(2, [xy(2, &[2, 1], 1), xy(2, &[1, 2], 1)]);
        let (m, c) = p.leading_monomial(&MOrder::graded_lex(2)).unwrap();
        assert_eq!(m, ExpVec::from_exps(&[2, 1]));
        assert_eq!(c, rat(1));
    }

    #[test]
    fn leading_of_constant_and_zero() {
        let five = MultiPoly::constant(2, rat(5));
        let (m, c) = five.leading_monomial(&MOrder::graded_lex(2)).unwrap();
        assert!(m.is_unit());
        assert_eq!(c, rat(5));
        assert!(MultiPoly::zero(2).leading_monomial(&MOrder::graded_lex(2)).is_err());
    }

    #[test]
    fn homogeneous_components() {
        // p = xy + 2x + 3
        let p = MultiPoly::from_terms(2, [xy(2, &[1, 1], 1), xy(2, &[1, 0], 2), xy(2, &[0, 0], 3)]);
        assert_eq!(p.homogeneous_component(2), MultiPoly::from_terms(2, [xy(2, &[1, 1], 1)]));
        assert!(p.homogeneous_component(5).is_zero());
        let mut sum = MultiPoly::zero(2);
        for k in 0..=p.total_degree() {
            sum = sum.add(&p.homogeneous_component(k)).unwrap();
        }
        assert_eq!(sum, p);
    }

    #[test]
    fn exact_division() {
        let x = MultiPoly::var(0, 2);
        let y = MultiPoly::var(1, 2);
        let a = x.add(&y).unwrap();
        let b = x.sub(&y).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p.exact_div(&a).unwrap(), b);
        assert_eq!(p.exact_div(&b).unwrap(), a);
        assert!(p.exact_div(&x.add(&MultiPoly::one(2)).unwrap()).is_none());
    }

    #[test]
    fn shift_and_evaluate() {
        // p = x^2 y, shift x -> x+1, y -> y-2
        let p = MultiPoly::from_terms(2, [xy(2, &[2, 1], 1)]);
        let q = p.shift(&[rat(1), rat(-2)]);
        // q(x,y) = (x+1)^2 (y-2); check a few points
        for (a, b) in [(0i64, 0i64), (1, 1), (-3, 2), (2, -5)] {
            let lhs = q.evaluate(&[rat(a), rat(b)]);
            let rhs = rat((a + 1) * (a + 1) * (b - 2));
            assert_eq!(lhs, rhs);
        }
        assert_eq!(p.shift(&[rat(0), rat(0)]), p);
    }

    #[test]
    fn primitive_parts_roundtrip() {
        let p = MultiPoly::from_terms(
            2,
            [(ExpVec::from_exps(&[1, 0]), crate::rat::ratq(4, 3)), (ExpVec::from_exps(&[0, 1]), rat(-2))],
        );
        let (c, prim) = p.primitive_parts();
        assert!(prim.is_integer());
        assert!(prim.leading_natural().unwrap().1 > Rat::zero());
        assert_eq!(prim.mul_scalar(&c), p);
    }

    #[test]
    fn block_ops() {
        // f(x,y) = x^2 - y  in 2 vars, embed as y-block of 4 vars
        let f = MultiPoly::from_terms(2, [xy(2, &[2, 0], 1), xy(2, &[0, 1], -1)]);
        let g = f.embed(4, 2);
        assert_eq!(g.block_degree(2, 4), 2);
        assert_eq!(g.block_degree(0, 2), 0);
        assert_eq!(g.swap_blocks(), f.embed(4, 0));
        assert_eq!(g.project(2, 2), f);
        // diagonal of f(x) - f(y) is zero
        let d = f.embed(4, 0).sub(&g).unwrap();
        assert!(d.diagonal().is_zero());
    }
}
