//! Dense univariate polynomials over Q and reduced univariate rational
//! functions (the left components `g` and the degree-1 composition units).

use crate::error::{Error, Result};
use crate::monomial::ExpVec;
use crate::multipoly::MultiPoly;
use crate::rat::Rat;
use num_traits::{One, Signed, Zero};
use std::fmt::Write;

/// Coefficients ascending by degree; no trailing zeros; empty = zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Rat>);

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn one() -> Self {
        UniPoly(vec![Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = UniPoly(vec![c]);
        p.trim();
        p
    }

    /// The identity polynomial `t`.
    pub fn var() -> Self {
        UniPoly(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = UniPoly(coeffs);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.0.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Rat {
        self.0.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = vec![Rat::zero(); self.0.len().max(other.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn mul_scalar(&self, c: &Rat) -> Self {
        Self::from_coeffs(self.0.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder; panics when dividing by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "univariate division by zero");
        let mut rem = self.0.clone();
        if rem.len() < d.0.len() {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - d.0.len() + 1];
        let dlc = d.lc();
        for i in (d.0.len() - 1..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &dlc;
            let shift = i - (d.0.len() - 1);
            quot[shift] = q.clone();
            for (j, c) in d.0.iter().enumerate() {
                let v = c * &q;
                rem[shift + j] -= v;
            }
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.mul_scalar(&self.lc().recip())
    }

    pub fn derivative(&self) -> Self {
        if self.0.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn evaluate(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn to_multipoly(&self, nvars: usize, var: usize) -> MultiPoly {
        let mut terms = Vec::new();
        for (i, c) in self.0.iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0u16; nvars];
                exps[var] = i as u16;
                terms.push((ExpVec::from_exps(&exps), c.clone()));
            }
        }
        MultiPoly::from_terms(nvars, terms)
    }

    /// Extract from a multivariate polynomial that uses a single variable.
    pub fn from_multipoly(p: &MultiPoly, var: usize) -> Self {
        let mut out = vec![Rat::zero(); p.degree_in_var(var) + 1];
        for (m, c) in p.terms() {
            for (v, &e) in m.exps().iter().enumerate() {
                assert!(v == var || e == 0, "polynomial is not univariate in the given variable");
            }
            out[m.exp(var) as usize] = c.clone();
        }
        Self::from_coeffs(out)
    }

    pub fn to_text(&self, name: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (e, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let abs = c.abs();
            if e == 0 {
                write!(out, "{abs}").unwrap();
            } else {
                if !abs.is_one() {
                    write!(out, "{abs}*").unwrap();
                }
                out.push_str(name);
                if e > 1 {
                    write!(out, "^{e}").unwrap();
                }
            }
        }
        out
    }
}

/// Reduced univariate rational function: gcd(num, den) = 1, den monic,
/// constant denominators forced to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniRatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl UniRatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        let scale = den.lc().recip();
        num = num.mul_scalar(&scale);
        den = den.mul_scalar(&scale);
        Ok(UniRatFunc { num, den })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        UniRatFunc { num: p, den: UniPoly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// The identity function `t`.
    pub fn identity() -> Self {
        Self::from_poly(UniPoly::var())
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity()
    }

    /// deg = max(deg num, deg den).
    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }

    pub fn add_scalar(&self, c: &Rat) -> Self {
        Self::new(self.num.add(&self.den.mul_scalar(c)), self.den.clone()).unwrap()
    }

    /// Composition `self(other)` through the homogenized formulas; the raw
    /// numerator and denominator are already coprime when both inputs are
    /// reduced and `other` is non-constant.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if other.is_constant() && !self.is_constant() {
            // Evaluate instead; may hit a pole.
            let x = other.num.coeff(0) / other.den.coeff(0);
            let dv = self.den.evaluate(&x);
            if dv.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            return Ok(Self::constant(self.num.evaluate(&x) / dv));
        }
        let u = self.num.degree();
        let v = self.den.degree();
        let hn = &other.num;
        let hd = &other.den;
        let mut num = UniPoly::zero();
        for (i, a) in self.num.coeffs().iter().enumerate() {
            if !a.is_zero() {
                num = num.add(&hn.pow(i).mul(&hd.pow(u - i)).mul_scalar(a));
            }
        }
        let mut den = UniPoly::zero();
        for (i, b) in self.den.coeffs().iter().enumerate() {
            if !b.is_zero() {
                den = den.add(&hn.pow(i).mul(&hd.pow(v - i)).mul_scalar(b));
            }
        }
        if v > u {
            num = num.mul(&hd.pow(v - u));
        } else {
            den = den.mul(&hd.pow(u - v));
        }
        let out = Self::new(num, den)?;
        debug_assert!(
            other.is_constant() || out.degree() == self.degree() * other.degree(),
            "univariate composition degree mismatch"
        );
        Ok(out)
    }

    /// Inverse of a degree-1 unit under composition.
    pub fn unit_inverse(&self) -> Result<Self> {
        if self.degree() != 1 {
            return Err(Error::NotAUnit { degree: self.degree() });
        }
        // (a t + b)/(c t + d)  ->  (d t - b)/(-c t + a)
        let a = self.num.coeff(1);
        let b = self.num.coeff(0);
        let c = self.den.coeff(1);
        let d = self.den.coeff(0);
        Self::new(
            UniPoly::from_coeffs(vec![-b, d]),
            UniPoly::from_coeffs(vec![a, -c]),
        )
    }

    pub fn to_text(&self, name: &str) -> String {
        if self.den.is_constant() {
            self.num.to_text(name)
        } else {
            format!("({})/({})", self.num.to_text(name), self.den.to_text(name))
        }
    }
}

impl std::fmt::Display for UniRatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratq};

    fn up(cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn reduction_and_canonical_form() {
        // (t^2 - 1) / (2t - 2) = (t + 1)/2
        let f = UniRatFunc::new(up(&[-1, 0, 1]), up(&[-2, 2])).unwrap();
        assert_eq!(f.num(), &UniPoly::from_coeffs(vec![ratq(1, 2), ratq(1, 2)]));
        assert_eq!(f.den(), &UniPoly::one());
        assert_eq!(f.degree(), 1);
    }

    #[test]
    fn unit_inverse_roundtrip() {
        // l = (t - 1): inverse t + 1
        let l = UniRatFunc::from_poly(up(&[-1, 1]));
        assert_eq!(l.unit_inverse().unwrap(), UniRatFunc::from_poly(up(&[1, 1])));
        // l = t is self-inverse
        let id = UniRatFunc::identity();
        assert_eq!(id.unit_inverse().unwrap(), id);
        // l = (2t+3)/(t-1): frozen inverse (t+3)/(t-2), and l(l^-1) = t
        let l = UniRatFunc::new(up(&[3, 2]), up(&[-1, 1])).unwrap();
        let inv = l.unit_inverse().unwrap();
        assert_eq!(inv, UniRatFunc::new(up(&[3, 1]), up(&[-2, 1])).unwrap());
        assert!(l.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&l).unwrap().is_identity());
    }

    #[test]
    fn unit_inverse_rejects_higher_degree() {
        let sq = UniRatFunc::from_poly(up(&[0, 0, 1]));
        assert!(matches!(sq.unit_inverse(), Err(Error::NotAUnit { degree: 2 })));
    }

    #[test]
    fn composition_degree_multiplies() {
        let g = UniRatFunc::new(up(&[1, 0, 2]), up(&[-1, 1])).unwrap(); // (2t^2+1)/(t-1)
        let h = UniRatFunc::new(up(&[0, 3, 1]), up(&[2])).unwrap(); // (t^2+3t)/2
        let c = g.compose(&h).unwrap();
        assert_eq!(c.degree(), g.degree() * h.degree());
    }

    #[test]
    fn text_form() {
        let g = UniRatFunc::new(up(&[10, -2, 4]), up(&[1])).unwrap();
        assert_eq!(g.to_text("t"), "4*t^2 - 2*t + 10");
        let f = UniRatFunc::new(up(&[-6561, 0, 625]), up(&[-13122, 0, 625])).unwrap();
        // den is normalized monic, so the text shows the scaled form
        assert_eq!(f.degree(), 2);
    }
}
