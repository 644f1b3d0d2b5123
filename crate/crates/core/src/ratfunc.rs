//! Reduced multivariate rational functions in canonical form:
//! gcd(num, den) = 1, constant denominators forced to 1, otherwise the
//! denominator's natural-graded-lex leading coefficient is 1. Canonical
//! form makes equality a structural comparison, which golden tests rely on.

use crate::error::{Error, Result};
use crate::mgcd::mgcd;
use crate::multipoly::MultiPoly;
use crate::rat::Rat;
use crate::unipoly::UniRatFunc;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Reduce and normalize. The only error is a zero denominator.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if num.nvars() != den.nvars() {
            return Err(Error::VarMismatch { left: num.nvars(), right: den.nvars() });
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: MultiPoly::one(den.nvars()) });
        }
        let g = mgcd(&num, &den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        Ok(Self::normalized_unchecked(num, den))
    }

    /// Normalize an already-coprime pair (used where coprimality is a
    /// theorem, e.g. the homogenized composition formulas).
    fn normalized_unchecked(num: MultiPoly, den: MultiPoly) -> Self {
        if let Some(c) = den.constant_value() {
            RatFunc { num: num.mul_scalar(&c.recip()), den: MultiPoly::one(den.nvars()) }
        } else {
            let (_, lc) = den.leading_natural().unwrap();
            let inv = lc.recip();
            RatFunc { num: num.mul_scalar(&inv), den: den.mul_scalar(&inv) }
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let n = p.nvars();
        RatFunc { num: p, den: MultiPoly::one(n) }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, c))
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        Self::from_poly(MultiPoly::var(i, nvars))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.num.constant_value().unwrap() / self.den.constant_value().unwrap())
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// deg f = max(deg num, deg den) for the reduced representative.
    pub fn degree(&self) -> usize {
        self.num.total_degree().max(self.den.total_degree())
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let num = self
            .num
            .mul(&other.den)?
            .add(&other.num.mul(&self.den)?)?;
        let den = self.den.mul(&other.den)?;
        Self::new(num, den)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(self.num.mul(&other.den)?, self.den.mul(&other.num)?)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized_unchecked(self.den.clone(), self.num.clone()))
    }

    pub fn add_scalar(&self, c: &Rat) -> Self {
        let num = self.num.add(&self.den.mul_scalar(c)).unwrap();
        Self::normalized_unchecked(num, self.den.clone())
    }

    /// Substitute x_i -> x_i + alpha_i; reduction is preserved by shifts.
    pub fn shift(&self, alpha: &[Rat]) -> Self {
        Self::normalized_unchecked(self.num.shift(alpha), self.den.shift(alpha))
    }

    /// Evaluate at a point; None at poles.
    pub fn evaluate(&self, point: &[Rat]) -> Option<Rat> {
        let d = self.den.evaluate(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.evaluate(point) / d)
    }
}

/// Composition `g(h)` through the homogenized formulas: with
/// `g = (a_u y^u + ... + a_0)/(b_v y^v + ... + b_0)` the numerator is
/// `(a_u h_n^u + ... + a_0 h_d^u) h_d^max(v-u,0)` and symmetrically for the
/// denominator. For reduced inputs with `h` non-constant the result is
/// already reduced, and `deg g(h) = deg g * deg h`; both facts are checked.
pub fn compose(g: &UniRatFunc, h: &RatFunc) -> Result<RatFunc> {
    let n = h.nvars();
    if h.is_constant() {
        if !g.is_constant() {
            return Err(Error::ConstantInput);
        }
        return Ok(RatFunc::constant(n, g.num().coeff(0) / g.den().coeff(0)));
    }
    if g.is_constant() {
        return Ok(RatFunc::constant(n, g.num().coeff(0) / g.den().coeff(0)));
    }
    let u = g.num().degree();
    let v = g.den().degree();
    let w = u.max(v);
    // shared power table h_n^i * h_d^(w-i)
    let powers: Vec<MultiPoly> = {
        let mut hn_pows = Vec::with_capacity(w + 1);
        let mut hd_pows = Vec::with_capacity(w + 1);
        let mut acc = MultiPoly::one(n);
        for _ in 0..=w {
            hn_pows.push(acc.clone());
            acc = acc.mul(h.num()).unwrap();
        }
        acc = MultiPoly::one(n);
        for _ in 0..=w {
            hd_pows.push(acc.clone());
            acc = acc.mul(h.den()).unwrap();
        }
        (0..=w).map(|i| hn_pows[i].mul(&hd_pows[w - i]).unwrap()).collect()
    };
    let mut num = MultiPoly::zero(n);
    for (i, a) in g.num().coeffs().iter().enumerate() {
        if !a.is_zero() {
            // a_i h_n^i h_d^(u-i) * h_d^(w-u) = a_i * powers[i]
            num = num.add(&powers[i].mul_scalar(a))?;
        }
    }
    let mut den = MultiPoly::zero(n);
    for (i, b) in g.den().coeffs().iter().enumerate() {
        if !b.is_zero() {
            den = den.add(&powers[i].mul_scalar(b))?;
        }
    }
    // the raw pair is coprime when g and h are reduced (checked)
    debug_assert!(
        mgcd(&num, &den).map(|g| g.is_constant()).unwrap_or(false),
        "composition produced a reducible fraction"
    );
    let out = RatFunc::normalized_unchecked(num, den);
    assert_eq!(
        out.degree(),
        g.degree() * h.degree(),
        "composition degree must multiply"
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ExpVec;
    use crate::rat::{rat, ratq};
    use crate::unipoly::UniPoly;

    fn t(exps: &[u16], c: i64) -> (ExpVec, Rat) {
        (ExpVec::from_exps(exps), rat(c))
    }

    #[test]
    fn reduces_common_factor() {
        // (x^2 - 1)/(x - 1) = (x + 1)/1
        let num = MultiPoly::from_terms(1, [t(&[2], 1), t(&[0], -1)]);
        let den = MultiPoly::from_terms(1, [t(&[1], 1), t(&[0], -1)]);
        let f = RatFunc::new(num, den).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.num(), &MultiPoly::from_terms(1, [t(&[1], 1), t(&[0], 1)]));
    }

    #[test]
    fn canonical_scaling() {
        // (2x, 4y) -> x/(2y): lc(den) = 1 means den = y, num = x/2
        let f = RatFunc::new(
            MultiPoly::from_terms(2, [t(&[1, 0], 2)]),
            MultiPoly::from_terms(2, [t(&[0, 1], 4)]),
        )
        .unwrap();
        assert_eq!(f.den(), &MultiPoly::from_terms(2, [t(&[0, 1], 1)]));
        assert_eq!(
            f.num(),
            &MultiPoly::from_terms(2, [(ExpVec::from_exps(&[1, 0]), ratq(1, 2))])
        );
    }

    #[test]
    fn idempotent_on_canonical() {
        let f = RatFunc::new(
            MultiPoly::from_terms(2, [t(&[1, 0], 1), t(&[0, 0], 3)]),
            MultiPoly::from_terms(2, [t(&[0, 1], 1), t(&[0, 0], -1)]),
        )
        .unwrap();
        let again = RatFunc::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RatFunc::new(MultiPoly::one(1), MultiPoly::zero(1)),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn field_ops() {
        let x = RatFunc::var(0, 2);
        let y = RatFunc::var(1, 2);
        let f = x.div(&y).unwrap(); // x/y
        let g = f.add(&y).unwrap(); // (x + y^2)/y
        assert_eq!(g.degree(), 2);
        let back = g.sub(&y).unwrap();
        assert_eq!(back, f);
        let r = f.recip().unwrap();
        assert_eq!(f.mul(&r).unwrap(), RatFunc::constant(2, rat(1)));
    }

    #[test]
    fn compose_identity_and_degree() {
        // h = (x + y^2)/(x - 1)
        let h = RatFunc::new(
            MultiPoly::from_terms(2, [t(&[1, 0], 1), t(&[0, 2], 1)]),
            MultiPoly::from_terms(2, [t(&[1, 0], 1), t(&[0, 0], -1)]),
        )
        .unwrap();
        let id = UniRatFunc::identity();
        assert_eq!(compose(&id, &h).unwrap(), h);
        // g = (t^2 + 1)/(t - 2)
        let g = UniRatFunc::new(
            UniPoly::from_coeffs(vec![rat(1), rat(0), rat(1)]),
            UniPoly::from_coeffs(vec![rat(-2), rat(1)]),
        )
        .unwrap();
        let f = compose(&g, &h).unwrap();
        assert_eq!(f.degree(), g.degree() * h.degree());
    }

    #[test]
    fn compose_constant_h_needs_constant_g() {
        let h = RatFunc::constant(2, rat(3));
        let g = UniRatFunc::identity();
        assert!(matches!(compose(&g, &h), Err(Error::ConstantInput)));
        let c = UniRatFunc::constant(rat(5));
        assert_eq!(compose(&c, &h).unwrap(), RatFunc::constant(2, rat(5)));
    }
}
