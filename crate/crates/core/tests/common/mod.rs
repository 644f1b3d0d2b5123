//! Shared test helpers: a small expression parser for writing the golden
//! polynomials readably, and seeded random generators for property suites.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unirat_core::monomial::ExpVec;
use unirat_core::multipoly::MultiPoly;
use unirat_core::rat::{rat, Rat};
use unirat_core::ratfunc::RatFunc;
use unirat_core::unipoly::{UniPoly, UniRatFunc};

/// Parse `+ - * / ^ ( )` expressions over the named variables into a
/// rational function (exact arithmetic throughout).
pub fn rf(text: &str, vars: &[&str]) -> RatFunc {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, vars };
    let out = p.expr();
    p.skip_ws();
    assert!(p.pos == p.chars.len(), "trailing input at {} in {text}", p.pos);
    out
}

/// Parse a polynomial (panics if the expression has a denominator).
pub fn poly(text: &str, vars: &[&str]) -> MultiPoly {
    let f = rf(text, vars);
    assert!(f.is_polynomial(), "expected a polynomial: {text}");
    f.num().clone()
}

/// Parse a univariate rational function in the variable `t`.
pub fn urf(text: &str) -> UniRatFunc {
    let f = rf(text, &["t"]);
    UniRatFunc::new(
        UniPoly::from_multipoly(f.num(), 0),
        UniPoly::from_multipoly(f.den(), 0),
    )
    .unwrap()
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> RatFunc {
        let mut acc = self.term();
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()).unwrap();
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()).unwrap();
                }
                _ => return acc,
            }
        }
    }

    fn term(&mut self) -> RatFunc {
        let mut acc = self.unary();
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()).unwrap();
                }
                Some('/') => {
                    self.pos += 1;
                    acc = acc.div(&self.unary()).unwrap();
                }
                _ => return acc,
            }
        }
    }

    fn unary(&mut self) -> RatFunc {
        if self.peek() == Some('-') {
            self.pos += 1;
            return self.unary().neg();
        }
        self.power()
    }

    fn power(&mut self) -> RatFunc {
        let base = self.atom();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: usize = self.chars[start..self.pos].iter().collect::<String>().parse().unwrap();
            let mut acc = RatFunc::constant(base.nvars(), rat(1));
            for _ in 0..e {
                acc = acc.mul(&base).unwrap();
            }
            return acc;
        }
        base
    }

    fn atom(&mut self) -> RatFunc {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr();
                assert_eq!(self.peek(), Some(')'), "missing closing paren");
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: i64 = self.chars[start..self.pos].iter().collect::<String>().parse().unwrap();
                RatFunc::constant(self.vars.len(), rat(n))
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let idx = self
                    .vars
                    .iter()
                    .position(|v| **v == name)
                    .unwrap_or_else(|| panic!("unknown variable {name}"));
                RatFunc::var(idx, self.vars.len())
            }
            other => panic!("unexpected token {other:?} at {}", self.pos),
        }
    }
}

// ---------------------------------------------------------------------------
// random generators

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Dense random polynomial of total degree <= deg, coefficients in [-5, 5].
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, deg: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(nvars);
    let mut exps = vec![0u16; nvars];
    fn rec(
        exps: &mut Vec<u16>,
        v: usize,
        left: usize,
        rng: &mut ChaCha8Rng,
        p: &mut MultiPoly,
    ) {
        if v == exps.len() {
            let c = rng.gen_range(-5i64..=5);
            if c != 0 {
                p.add_term(ExpVec::from_exps(exps), rat(c));
            }
            return;
        }
        for d in 0..=left {
            exps[v] = d as u16;
            rec(exps, v + 1, left - d, rng, p);
        }
        exps[v] = 0;
    }
    rec(&mut exps, 0, deg, rng, &mut p);
    p
}

/// Random polynomial of exact total degree `deg` (a top term is forced).
pub fn random_poly_exact_degree(rng: &mut ChaCha8Rng, nvars: usize, deg: usize) -> MultiPoly {
    let mut p = random_poly(rng, nvars, deg);
    while p.total_degree() < deg {
        let mut exps = vec![0u16; nvars];
        let mut left = deg;
        for (i, e) in exps.iter_mut().enumerate() {
            let d = if i + 1 == nvars { left } else { rng.gen_range(0..=left) };
            *e = d as u16;
            left -= d;
        }
        let c = rng.gen_range(1i64..=5);
        p.add_term(ExpVec::from_exps(&exps), rat(c));
    }
    p
}

/// Random non-constant reduced rational function of exact degree `deg`.
pub fn random_ratfunc(rng: &mut ChaCha8Rng, nvars: usize, deg: usize) -> RatFunc {
    loop {
        let num = random_poly_exact_degree(rng, nvars, deg);
        let den = {
            let d = rng.gen_range(0..=deg);
            if d == 0 {
                MultiPoly::constant(nvars, rat(1))
            } else {
                random_poly_exact_degree(rng, nvars, d)
            }
        };
        if den.is_zero() {
            continue;
        }
        let f = RatFunc::new(num, den).unwrap();
        if !f.is_constant() && f.degree() == deg {
            return f;
        }
    }
}

/// Random reduced univariate rational function of exact degree `deg`.
pub fn random_unirat(rng: &mut ChaCha8Rng, deg: usize) -> UniRatFunc {
    loop {
        let num: Vec<Rat> = (0..=deg).map(|_| rat(rng.gen_range(-5i64..=5))).collect();
        let dend = rng.gen_range(0..=deg);
        let den: Vec<Rat> = (0..=dend).map(|_| rat(rng.gen_range(-5i64..=5))).collect();
        let (Ok(n), Ok(d)) = (
            Ok::<_, ()>(UniPoly::from_coeffs(num)),
            Ok::<_, ()>(UniPoly::from_coeffs(den)),
        ) else {
            continue;
        };
        if d.is_zero() {
            continue;
        }
        let Ok(g) = UniRatFunc::new(n, d) else { continue };
        if g.degree() == deg && !g.is_constant() {
            return g;
        }
    }
}
