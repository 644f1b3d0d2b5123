//! Arithmetic kernel modulo word-size primes: scalar field ops, dense
//! univariate polynomials, sparse multivariate polynomials, interpolation,
//! and CRT/symmetric-remainder reconstruction. The modular gcd and the
//! multivariate Hensel lifting both run on this kernel; exactness of their
//! answers comes from trial-division verification over Z, so everything
//! here only has to be fast and deterministic.

use crate::monomial::ExpVec;
use crate::multipoly::MultiPoly;
use crate::rat::{Int, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;

// ---------------------------------------------------------------------------
// primes

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod_u64(acc, b, m);
        }
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the standard 12-witness set).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The k-th prime below 2^62, counting down (k = 0, 1, ...).
pub fn prime_62bit(k: usize) -> u64 {
    let mut n: u64 = (1u64 << 62) - 1;
    let mut found = 0;
    loop {
        if is_prime_u64(n) {
            if found == k {
                return n;
            }
            found += 1;
        }
        n -= 2;
    }
}

/// The smallest prime >= n.
pub fn next_prime_u64(mut n: u64) -> u64 {
    if n <= 2 {
        return 2;
    }
    if n % 2 == 0 {
        n += 1;
    }
    while !is_prime_u64(n) {
        n += 2;
    }
    n
}

// ---------------------------------------------------------------------------
// scalar field

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(is_prime_u64(p));
        Fp { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mulmod_u64(a, b, self.p)
    }

    pub fn pow(&self, b: u64, e: u64) -> u64 {
        powmod_u64(b, e, self.p)
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn from_int(&self, n: &Int) -> u64 {
        let m = n.mod_floor(&Int::from(self.p));
        m.to_u64().expect("reduced residue fits u64")
    }

    /// None when the denominator vanishes mod p (unlucky prime).
    pub fn from_rat(&self, r: &Rat) -> Option<u64> {
        let d = self.from_int(r.denom());
        if d == 0 {
            return None;
        }
        Some(self.mul(self.from_int(r.numer()), self.inv(d)))
    }

    /// Symmetric remainder in (-p/2, p/2].
    pub fn symmetric(&self, a: u64) -> Int {
        if a > self.p / 2 {
            Int::from(a) - Int::from(self.p)
        } else {
            Int::from(a)
        }
    }
}

// ---------------------------------------------------------------------------
// dense univariate polynomials over Fp (coefficients ascending, trimmed)

pub type UPoly = Vec<u64>;

pub fn utrim(a: &mut UPoly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn udeg(a: &UPoly) -> usize {
    a.len().saturating_sub(1)
}

pub fn uadd(fp: &Fp, a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = fp.add(out[i], c);
    }
    utrim(&mut out);
    out
}

pub fn usub(fp: &Fp, a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = fp.sub(out[i], c);
    }
    utrim(&mut out);
    out
}

pub fn umul(fp: &Fp, a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = fp.add(out[i + j], fp.mul(x, y));
        }
    }
    utrim(&mut out);
    out
}

pub fn uscale(fp: &Fp, a: &UPoly, c: u64) -> UPoly {
    if c == 0 {
        return Vec::new();
    }
    a.iter().map(|&x| fp.mul(x, c)).collect()
}

pub fn udivrem(fp: &Fp, a: &UPoly, d: &UPoly) -> (UPoly, UPoly) {
    assert!(!d.is_empty(), "division by zero");
    if a.len() < d.len() {
        return (Vec::new(), a.clone());
    }
    let mut rem = a.clone();
    let mut quot = vec![0u64; a.len() - d.len() + 1];
    let dlc_inv = fp.inv(*d.last().unwrap());
    for i in (d.len() - 1..a.len()).rev() {
        if rem[i] == 0 {
            continue;
        }
        let q = fp.mul(rem[i], dlc_inv);
        let shift = i - (d.len() - 1);
        quot[shift] = q;
        for (j, &c) in d.iter().enumerate() {
            rem[shift + j] = fp.sub(rem[shift + j], fp.mul(c, q));
        }
    }
    utrim(&mut rem);
    utrim(&mut quot);
    (quot, rem)
}

pub fn urem(fp: &Fp, a: &UPoly, d: &UPoly) -> UPoly {
    udivrem(fp, a, d).1
}

pub fn umonic(fp: &Fp, a: &UPoly) -> UPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => uscale(fp, a, fp.inv(lc)),
    }
}

/// Monic gcd.
pub fn ugcd(fp: &Fp, a: &UPoly, b: &UPoly) -> UPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let r = urem(fp, &a, &b);
        a = b;
        b = r;
    }
    umonic(fp, &a)
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
pub fn uext_gcd(fp: &Fp, a: &UPoly, b: &UPoly) -> (UPoly, UPoly, UPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = udivrem(fp, &r0, &r1);
        let s = usub(fp, &s0, &umul(fp, &q, &s1));
        let t = usub(fp, &t0, &umul(fp, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if let Some(&lc) = r0.last() {
        let inv = fp.inv(lc);
        (uscale(fp, &r0, inv), uscale(fp, &s0, inv), uscale(fp, &t0, inv))
    } else {
        (r0, s0, t0)
    }
}

pub fn ueval(fp: &Fp, a: &UPoly, x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in a.iter().rev() {
        acc = fp.add(fp.mul(acc, x), c);
    }
    acc
}

pub fn uderiv(fp: &Fp, a: &UPoly) -> UPoly {
    if a.len() <= 1 {
        return Vec::new();
    }
    let mut out: UPoly =
        a.iter().enumerate().skip(1).map(|(i, &c)| fp.mul(c, i as u64 % fp.p)).collect();
    utrim(&mut out);
    out
}

/// b^e mod (m, p).
pub fn upowmod(fp: &Fp, b: &UPoly, mut e: u64, m: &UPoly) -> UPoly {
    let mut acc = vec![1u64];
    let mut b = urem(fp, b, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = urem(fp, &umul(fp, &acc, &b), m);
        }
        b = urem(fp, &umul(fp, &b, &b), m);
        e >>= 1;
    }
    acc
}

// ---------------------------------------------------------------------------
// sparse multivariate polynomials over Fp

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPoly {
    pub nvars: usize,
    pub terms: BTreeMap<ExpVec, u64>,
}

impl PPoly {
    pub fn zero(nvars: usize) -> Self {
        PPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: u64) -> Self {
        let mut p = Self::zero(nvars);
        if c != 0 {
            p.terms.insert(ExpVec::zero(nvars), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    pub fn add_term(&mut self, fp: &Fp, m: ExpVec, c: u64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = fp.add(*e.get(), c);
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, fp: &Fp, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(fp, m.clone(), c);
        }
        out
    }

    pub fn sub(&self, fp: &Fp, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(fp, m.clone(), fp.neg(c));
        }
        out
    }

    pub fn neg(&self, fp: &Fp) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = fp.neg(*c);
        }
        out
    }

    pub fn mul(&self, fp: &Fp, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        let (small, big) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        for (ma, &ca) in &small.terms {
            for (mb, &cb) in &big.terms {
                out.add_term(fp, ma.mul(mb), fp.mul(ca, cb));
            }
        }
        out
    }

    pub fn mul_scalar(&self, fp: &Fp, c: u64) -> Self {
        if c == 0 {
            return Self::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = fp.mul(*v, c);
        }
        out
    }

    pub fn mul_term(&self, fp: &Fp, m: &ExpVec, c: u64) -> Self {
        let mut out = Self::zero(self.nvars);
        if c == 0 {
            return out;
        }
        for (mm, &cc) in &self.terms {
            out.terms.insert(mm.mul(m), fp.mul(cc, c));
        }
        out
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().next_back().map(|m| m.total_degree()).unwrap_or(0)
    }

    pub fn degree_in_var(&self, v: usize) -> usize {
        self.terms.keys().map(|m| m.exp(v) as usize).max().unwrap_or(0)
    }

    /// Total degree over all variables except `skip`.
    pub fn degree_except(&self, skip: usize) -> usize {
        self.terms
            .keys()
            .map(|m| m.total_degree() - m.exp(skip) as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn lc_in_var(&self, fp: &Fp, v: usize) -> Self {
        let _ = fp;
        let d = self.degree_in_var(v);
        let mut out = Self::zero(self.nvars);
        for (m, &c) in &self.terms {
            if m.exp(v) as usize == d {
                let mut exps: Vec<u16> = m.exps().to_vec();
                exps[v] = 0;
                out.terms.insert(ExpVec::from_exps(&exps), c);
            }
        }
        out
    }

    /// Leading coefficient under the natural graded-lex term order.
    pub fn lc_natural(&self) -> u64 {
        self.terms.values().next_back().copied().unwrap_or(0)
    }

    /// Full evaluation; `point[v]` supplies every variable.
    pub fn eval_all(&self, fp: &Fp, point: &[u64]) -> u64 {
        let pows = self.power_tables(fp, point, usize::MAX);
        let mut acc = 0u64;
        for (m, &c) in &self.terms {
            let mut t = c;
            for (v, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = fp.mul(t, pows[v][e as usize]);
                }
            }
            acc = fp.add(acc, t);
        }
        acc
    }

    /// Evaluate every variable except `keep` at `point[v]`, producing a dense
    /// univariate polynomial in `keep`.
    pub fn eval_except(&self, fp: &Fp, keep: usize, point: &[u64]) -> UPoly {
        let pows = self.power_tables(fp, point, keep);
        let mut out = vec![0u64; self.degree_in_var(keep) + 1];
        for (m, &c) in &self.terms {
            let mut t = c;
            for (v, &e) in m.exps().iter().enumerate() {
                if v != keep && e > 0 {
                    t = fp.mul(t, pows[v][e as usize]);
                }
            }
            let d = m.exp(keep) as usize;
            out[d] = fp.add(out[d], t);
        }
        utrim(&mut out);
        out
    }

    fn power_tables(&self, fp: &Fp, point: &[u64], skip: usize) -> Vec<Vec<u64>> {
        let mut mx = vec![0u16; self.nvars];
        for m in self.terms.keys() {
            for (v, &e) in m.exps().iter().enumerate() {
                if e > mx[v] {
                    mx[v] = e;
                }
            }
        }
        (0..self.nvars)
            .map(|v| {
                if v == skip {
                    return Vec::new();
                }
                let mut row = Vec::with_capacity(mx[v] as usize + 1);
                row.push(1u64);
                for e in 1..=mx[v] as usize {
                    let nxt = fp.mul(row[e - 1], point[v]);
                    row.push(nxt);
                }
                row
            })
            .collect()
    }

    /// Substitute a constant for one variable (arity preserved).
    pub fn eval_var(&self, fp: &Fp, v: usize, value: u64) -> Self {
        let mut pw = vec![1u64];
        for e in 1..=self.degree_in_var(v) {
            let nxt = fp.mul(pw[e - 1], value);
            pw.push(nxt);
        }
        let mut out = Self::zero(self.nvars);
        for (m, &c) in &self.terms {
            let e = m.exp(v) as usize;
            if e == 0 {
                out.add_term(fp, m.clone(), c);
            } else {
                let mut exps: Vec<u16> = m.exps().to_vec();
                exps[v] = 0;
                out.add_term(fp, ExpVec::from_exps(&exps), fp.mul(c, pw[e]));
            }
        }
        out
    }

    /// Shift `x_v -> x_v + a` by binomial expansion.
    pub fn shift_var(&self, fp: &Fp, v: usize, a: u64) -> Self {
        if a == 0 {
            return self.clone();
        }
        let dmax = self.degree_in_var(v);
        let mut weights: Vec<Vec<u64>> = Vec::with_capacity(dmax + 1);
        for e in 0..=dmax {
            let mut row = Vec::with_capacity(e + 1);
            for j in 0..=e {
                let prev: u64 = if j == 0 {
                    if e == 0 {
                        1
                    } else {
                        fp.mul(weights[e - 1][0], a)
                    }
                } else if j == e {
                    1
                } else {
                    fp.add(fp.mul(weights[e - 1][j], a), weights[e - 1][j - 1])
                };
                row.push(prev);
            }
            weights.push(row);
        }
        let mut out = Self::zero(self.nvars);
        for (m, &c) in &self.terms {
            let e = m.exp(v) as usize;
            if e == 0 {
                out.add_term(fp, m.clone(), c);
                continue;
            }
            let mut exps: Vec<u16> = m.exps().to_vec();
            for j in 0..=e {
                exps[v] = j as u16;
                out.add_term(fp, ExpVec::from_exps(&exps), fp.mul(c, weights[e][j]));
            }
        }
        out
    }

    pub fn derivative(&self, fp: &Fp, v: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, &c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                let mut exps: Vec<u16> = m.exps().to_vec();
                exps[v] -= 1;
                out.add_term(fp, ExpVec::from_exps(&exps), fp.mul(c, e as u64 % fp.p));
            }
        }
        out
    }

    /// Coefficient of `x_v^e` (with `v`-exponent zeroed in the result).
    pub fn coeff_of_var_power(&self, v: usize, e: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, &c) in &self.terms {
            if m.exp(v) as usize == e {
                let mut exps: Vec<u16> = m.exps().to_vec();
                exps[v] = 0;
                out.terms.insert(ExpVec::from_exps(&exps), c);
            }
        }
        out
    }

    /// Exact division; `None` when not divisible (mod p).
    pub fn exact_div(&self, fp: &Fp, d: &Self) -> Option<Self> {
        assert!(!d.is_zero());
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        let (dm, dlc) = {
            let (m, c) = d.terms.iter().next_back().unwrap();
            (m.clone(), *c)
        };
        let dlc_inv = fp.inv(dlc);
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((rm, rc)) = rem.terms.iter().next_back().map(|(m, &c)| (m.clone(), c)) {
            let qm = rm.try_div(&dm)?;
            let qc = fp.mul(rc, dlc_inv);
            for (m, &c) in &d.terms {
                rem.add_term(fp, m.mul(&qm), fp.neg(fp.mul(c, qc)));
            }
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    /// Reduce a rational polynomial mod p; `None` on denominator collision.
    pub fn from_multipoly(fp: &Fp, p: &MultiPoly) -> Option<Self> {
        let mut out = Self::zero(p.nvars());
        for (m, c) in p.terms() {
            let v = fp.from_rat(c)?;
            if v != 0 {
                out.terms.insert(m.clone(), v);
            }
        }
        Some(out)
    }

    /// Lift to integer coefficients by symmetric remainder.
    pub fn to_multipoly_symmetric(&self, fp: &Fp) -> MultiPoly {
        MultiPoly::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, &c)| (m.clone(), Rat::from_integer(fp.symmetric(c)))),
        )
    }
}

// ---------------------------------------------------------------------------
// interpolation

/// Newton interpolation of a dense univariate polynomial from distinct nodes.
pub fn newton_interp(fp: &Fp, nodes: &[u64], values: &[u64]) -> UPoly {
    assert_eq!(nodes.len(), values.len());
    let n = nodes.len();
    // divided differences
    let mut dd: Vec<u64> = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = fp.sub(dd[i], dd[i - 1]);
            let den = fp.sub(nodes[i], nodes[i - j]);
            dd[i] = fp.mul(num, fp.inv(den));
        }
    }
    // expand sum dd[k] * prod_{j<k} (x - nodes[j])
    let mut acc: UPoly = Vec::new();
    let mut basis: UPoly = vec![1];
    for (k, &c) in dd.iter().enumerate() {
        acc = uadd(fp, &acc, &uscale(fp, &basis, c));
        if k + 1 < n {
            basis = umul(fp, &basis, &[fp.neg(nodes[k]), 1].to_vec());
        }
    }
    acc
}

/// Solve the shifted transposed Vandermonde system
/// `sum_m u_m * w_m^i = b_i` for `i = 1..=s` (nodes distinct and nonzero).
pub fn solve_vandermonde_shifted(fp: &Fp, nodes: &[u64], b: &[u64]) -> Option<Vec<u64>> {
    let s = nodes.len();
    assert_eq!(b.len(), s);
    // master polynomial M(z) = prod (z - w_m)
    let mut master: UPoly = vec![1];
    for &w in nodes {
        master = umul(fp, &master, &[fp.neg(w), 1].to_vec());
    }
    let mut out = Vec::with_capacity(s);
    for &w in nodes {
        // D(z) = M(z)/(z - w) by synthetic division; delta = D(w)
        let mut d = vec![0u64; s];
        let mut carry = 0u64;
        for i in (0..s).rev() {
            let c = fp.add(master[i + 1], carry);
            d[i] = c;
            carry = fp.mul(c, w);
        }
        let delta = ueval(fp, &d, w);
        if delta == 0 {
            return None; // repeated node
        }
        // x_w = (sum_k b_{k+1} * d_k) / (delta * w)   [shifted system]
        let mut acc = 0u64;
        for (k, &dk) in d.iter().enumerate() {
            acc = fp.add(acc, fp.mul(dk, b[k]));
        }
        if w == 0 {
            return None;
        }
        out.push(fp.mul(acc, fp.inv(fp.mul(delta, w))));
    }
    Some(out)
}

// ---------------------------------------------------------------------------
// CRT over term maps

/// Combine two integer polynomials known mod m1 and mod p2 into one mod
/// m1*p2, coefficients kept in symmetric range via BigInt.
pub fn crt_multipoly(a: &MultiPoly, m1: &Int, b: &PPoly, fp2: &Fp) -> MultiPoly {
    let p2 = Int::from(fp2.p);
    let m1_inv_p2 = {
        // inverse of m1 mod p2
        let r = fp2.from_int(m1);
        Int::from(fp2.inv(r))
    };
    let modulus = m1 * &p2;
    let half = &modulus / 2;
    let mut keys: std::collections::BTreeSet<ExpVec> = a.terms().map(|(m, _)| m.clone()).collect();
    keys.extend(b.terms.keys().cloned());
    let terms = keys.into_iter().filter_map(|m| {
        let av = a.coeff(&m).numer().clone();
        let bv = b.terms.get(&m).copied().unwrap_or(0);
        // x = av + m1 * ((bv - av) * m1^{-1} mod p2)
        let diff = Int::from(bv) - &av;
        let k = (diff * &m1_inv_p2).mod_floor(&p2);
        let mut x = av + m1 * k;
        x = x.mod_floor(&modulus);
        if x > half {
            x -= &modulus;
        }
        if x.is_zero() {
            None
        } else {
            Some((m, Rat::from_integer(x)))
        }
    });
    MultiPoly::from_terms(a.nvars().max(b.nvars), terms)
}

/// Reduce an integer polynomial into Fp, tracking BigInt coefficients.
pub fn reduce_int_poly(fp: &Fp, p: &MultiPoly) -> PPoly {
    let mut out = PPoly::zero(p.nvars());
    for (m, c) in p.terms() {
        debug_assert!(c.denom().is_one());
        let v = fp.from_int(c.numer());
        if v != 0 {
            out.terms.insert(m.clone(), v);
        }
    }
    out
}

pub fn bigint_from_u64_sym(fp: &Fp, v: u64) -> BigInt {
    fp.symmetric(v)
}
