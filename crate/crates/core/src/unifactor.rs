//! Univariate factorization over Z: Berlekamp-style mod-p factorization
//! (distinct-degree + Cantor-Zassenhaus splitting), multifactor linear
//! Hensel lifting to p^k past the coefficient bound, and subset
//! recombination with exact trial division.

use crate::modp::{self, udeg, ugcd, umul, upowmod, urem, usub, utrim, Fp, UPoly};
use crate::rat::Int;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense integer polynomial, coefficients ascending, trimmed.
pub(crate) type ZPoly = Vec<Int>;

pub(crate) fn zdeg(a: &ZPoly) -> usize {
    a.len().saturating_sub(1)
}

pub(crate) fn ztrim(a: &mut ZPoly) {
    while a.last().map(|c| c.is_zero()).unwrap_or(false) {
        a.pop();
    }
}

pub(crate) fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(&mut out);
    out
}

/// Exact division over Z; None when not a factor.
pub(crate) fn zdiv_exact(a: &ZPoly, d: &ZPoly) -> Option<ZPoly> {
    assert!(!d.is_empty());
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < d.len() {
        return None;
    }
    let mut rem = a.clone();
    let mut quot = vec![Int::zero(); a.len() - d.len() + 1];
    let dlc = d.last().unwrap();
    for i in (d.len() - 1..a.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let (q, r) = rem[i].div_rem(dlc);
        if !r.is_zero() {
            return None;
        }
        let shift = i - (d.len() - 1);
        for (j, c) in d.iter().enumerate() {
            rem[shift + j] -= c * &q;
        }
        quot[shift] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    ztrim(&mut quot);
    Some(quot)
}

pub(crate) fn zcontent(a: &ZPoly) -> Int {
    let mut g = Int::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient; returns (unit*content, pp).
pub(crate) fn zprimitive(a: &ZPoly) -> (Int, ZPoly) {
    let mut c = zcontent(a);
    if c.is_zero() {
        return (Int::zero(), Vec::new());
    }
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    (c.clone(), a.iter().map(|x| x / &c).collect())
}

fn to_fp(fp: &Fp, a: &ZPoly) -> UPoly {
    let mut out: UPoly = a.iter().map(|c| fp.from_int(c)).collect();
    utrim(&mut out);
    out
}

fn zderiv(a: &ZPoly) -> ZPoly {
    if a.len() <= 1 {
        return Vec::new();
    }
    let mut out: ZPoly =
        a.iter().enumerate().skip(1).map(|(i, c)| c * Int::from(i)).collect();
    ztrim(&mut out);
    out
}

// ---------------------------------------------------------------------------
// factorization in Fp[x]

/// x^(p^d) powering needs BigInt exponents.
fn upowmod_big(fp: &Fp, b: &UPoly, e: &Int, m: &UPoly) -> UPoly {
    let mut acc = vec![1u64];
    let mut base = urem(fp, b, m);
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            acc = urem(fp, &umul(fp, &acc, &base), m);
        }
        if i + 1 < bits {
            base = urem(fp, &umul(fp, &base, &base), m);
        }
    }
    acc
}

/// Distinct-degree decomposition of a monic squarefree polynomial.
fn distinct_degree(fp: &Fp, f: &UPoly) -> Vec<(UPoly, usize)> {
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut v: UPoly = vec![0, 1]; // x
    let mut d = 0usize;
    while udeg(&g) > 0 {
        d += 1;
        if 2 * d > udeg(&g) {
            out.push((g.clone(), udeg(&g)));
            break;
        }
        v = upowmod(fp, &v, fp.p, &g);
        let diff = usub(fp, &v, &[0, 1].to_vec());
        let h = ugcd(fp, &diff, &g);
        if udeg(&h) > 0 {
            out.push((h.clone(), d));
            g = modp::udivrem(fp, &g, &h).0;
            v = urem(fp, &v, &g);
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting (odd p).
fn equal_degree(fp: &Fp, f: &UPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<UPoly>) {
    if udeg(f) == d {
        out.push(f.clone());
        return;
    }
    let exp: Int = (Int::from(fp.p).pow(d as u32) - 1) / 2;
    loop {
        let r: UPoly = {
            let mut r: UPoly = (0..udeg(f)).map(|_| rng.gen_range(0..fp.p)).collect();
            utrim(&mut r);
            if r.len() <= 1 {
                continue;
            }
            r
        };
        let s = upowmod_big(fp, &r, &exp, f);
        let mut s1 = s.clone();
        if s1.is_empty() {
            continue;
        }
        s1[0] = fp.sub(s1[0], 1);
        utrim(&mut s1);
        let g = ugcd(fp, &s1, f);
        let dg = udeg(&g);
        if dg > 0 && dg < udeg(f) {
            let rest = modp::udivrem(fp, f, &g).0;
            equal_degree(fp, &g, d, rng, out);
            equal_degree(fp, &rest, d, rng, out);
            return;
        }
    }
}

fn factor_mod_p(fp: &Fp, f: &UPoly, rng: &mut ChaCha8Rng) -> Vec<UPoly> {
    let monic = modp::umonic(fp, f);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(fp, &monic) {
        equal_degree(fp, &g, d, rng, &mut out);
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Hensel lifting mod p^k

struct LiftCtx {
    modulus: Int,
}

impl LiftCtx {
    fn reduce(&self, a: &mut ZPoly) {
        for c in a.iter_mut() {
            *c = c.mod_floor(&self.modulus);
        }
        ztrim(a);
    }

    fn mul(&self, a: &ZPoly, b: &ZPoly) -> ZPoly {
        let mut out = zmul(a, b);
        self.reduce(&mut out);
        out
    }

    fn sub(&self, a: &ZPoly, b: &ZPoly) -> ZPoly {
        let mut out = vec![Int::zero(); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            out[i] = c.clone();
        }
        for (i, c) in b.iter().enumerate() {
            out[i] -= c;
        }
        self.reduce(&mut out);
        out
    }

    fn sym(&self, a: &ZPoly) -> ZPoly {
        let half = &self.modulus / 2;
        let mut out: ZPoly = a
            .iter()
            .map(|c| {
                let r = c.mod_floor(&self.modulus);
                if r > half {
                    r - &self.modulus
                } else {
                    r
                }
            })
            .collect();
        ztrim(&mut out);
        out
    }
}

/// Lift the mod-p factorization of the monic image of `f` to mod p^k with
/// p^k > bound, returning (p^k, monic lifted factors).
fn hensel_lift_monic(fp: &Fp, f: &ZPoly, factors: &[UPoly], bound: &Int) -> (Int, Vec<ZPoly>) {
    let p = Int::from(fp.p);
    let mut k = 1u32;
    let mut modulus = p.clone();
    while &modulus <= bound {
        modulus *= &p;
        k += 1;
    }
    let _ = k;
    let ctx = LiftCtx { modulus: modulus.clone() };

    // Bezout basis mod p: s_i = (prod_{j != i} g_j)^{-1} mod g_i
    let bezout: Vec<UPoly> = (0..factors.len())
        .map(|i| {
            let mut b: UPoly = vec![1];
            for (j, g) in factors.iter().enumerate() {
                if j != i {
                    b = urem(fp, &umul(fp, &b, g), &factors[i]);
                }
            }
            // inverse of b mod g_i
            let (g, s, _) = modp::uext_gcd(fp, &b, &factors[i]);
            debug_assert_eq!(udeg(&g), 0);
            s
        })
        .collect();

    // monic version of f mod p^k
    let lc_inv = int_inv_mod(f.last().unwrap(), &modulus);
    let mut fm: ZPoly = f.iter().map(|c| (c * &lc_inv).mod_floor(&modulus)).collect();
    ztrim(&mut fm);

    let mut lifted: Vec<ZPoly> =
        factors.iter().map(|g| g.iter().map(|&c| Int::from(c)).collect()).collect();

    let mut pj = p.clone();
    while pj < modulus {
        // e = (fm - prod lifted) / p^j  mod p
        let mut prod: ZPoly = vec![Int::one()];
        for g in &lifted {
            prod = ctx.mul(&prod, g);
        }
        let e = ctx.sub(&fm, &prod);
        if e.iter().all(|c| c.is_zero()) {
            break;
        }
        let ebar: UPoly = {
            let mut v: UPoly = e
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(&pj);
                    debug_assert!(r.is_zero(), "error not divisible by p^j");
                    fp.from_int(&q)
                })
                .collect();
            utrim(&mut v);
            v
        };
        for (i, g) in lifted.iter_mut().enumerate() {
            let gi0 = to_fp(fp, g);
            let gi0 = {
                let mut v = gi0;
                for c in v.iter_mut() {
                    *c %= fp.p;
                }
                utrim(&mut v);
                v
            };
            let sigma = urem(fp, &umul(fp, &bezout[i], &ebar), &gi0);
            for (deg, &c) in sigma.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                if g.len() <= deg {
                    g.resize(deg + 1, Int::zero());
                }
                g[deg] = (&g[deg] + Int::from(c) * &pj).mod_floor(&modulus);
            }
        }
        pj *= &p;
    }
    (modulus, lifted)
}

fn int_inv_mod(a: &Int, m: &Int) -> Int {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

// ---------------------------------------------------------------------------
// Zassenhaus driver

/// Factor a primitive squarefree integer polynomial of degree >= 1 into
/// primitive irreducible factors with positive leading coefficients.
pub(crate) fn factor_squarefree_z(f: &ZPoly) -> Vec<ZPoly> {
    debug_assert!(zdeg(f) >= 1);
    if zdeg(f) == 1 {
        let (_, pp) = zprimitive(f);
        return vec![pp];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a61_7373);

    // choose a prime keeping f squarefree
    let lc = f.last().unwrap().clone();
    let deriv = zderiv(f);
    let mut pcand = 3u64;
    let fp = loop {
        pcand = modp::next_prime_u64(pcand);
        let fp = Fp::new(pcand);
        if fp.from_int(&lc) == 0 {
            pcand += 1;
            continue;
        }
        let im = to_fp(&fp, f);
        let imd = to_fp(&fp, &deriv);
        if udeg(&ugcd(&fp, &im, &imd)) == 0 {
            break fp;
        }
        pcand += 1;
    };

    let factors_p = factor_mod_p(&fp, &to_fp(&fp, f), &mut rng);
    if factors_p.len() == 1 {
        let (_, pp) = zprimitive(f);
        return vec![pp];
    }

    // coefficient bound: 2^deg * (deg+1) * maxabs(f) * |lc|, doubled for the
    // symmetric range
    let maxabs = f.iter().map(|c| c.abs()).max().unwrap();
    let bound: Int =
        (Int::one() << zdeg(f)) * Int::from(zdeg(f) as u64 + 1) * maxabs * lc.abs() * 2;
    let (modulus, lifted) = hensel_lift_monic(&fp, f, &factors_p, &bound);
    let ctx = LiftCtx { modulus };

    // subset recombination
    let mut remaining: Vec<ZPoly> = lifted;
    let mut cur = f.clone();
    let mut out: Vec<ZPoly> = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut prod: ZPoly = vec![cur.last().unwrap().clone()];
            for &i in &combo {
                prod = ctx.mul(&prod, &remaining[i]);
            }
            let cand = ctx.sym(&prod);
            let (_, cand) = zprimitive(&cand);
            if cand.is_empty() {
                continue;
            }
            if let Some(quot) = zdiv_exact(&cur, &cand) {
                out.push(cand);
                cur = quot;
                let keep: Vec<ZPoly> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, g)| g.clone())
                    .collect();
                remaining = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if zdeg(&cur) >= 1 {
        let (_, pp) = zprimitive(&cur);
        out.push(pp);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(combo.iter().map(|&i| items[i]).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(cs: &[i64]) -> ZPoly {
        let mut v: ZPoly = cs.iter().map(|&c| Int::from(c)).collect();
        ztrim(&mut v);
        v
    }

    #[test]
    fn splits_quadratics() {
        // (2x + 3)(x - 5) = 2x^2 - 7x - 15
        let f = zp(&[-15, -7, 2]);
        let fs = factor_squarefree_z(&f);
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&zp(&[3, 2])));
        assert!(fs.contains(&zp(&[-5, 1])));
    }

    #[test]
    fn keeps_irreducible_whole() {
        // x^4 + 1 is irreducible over Z (though reducible mod every prime)
        let f = zp(&[1, 0, 0, 0, 1]);
        let fs = factor_squarefree_z(&f);
        assert_eq!(fs, vec![zp(&[1, 0, 0, 0, 1])]);
    }

    #[test]
    fn many_factors() {
        // (x-1)(x+2)(x^2+x+1)(3x+5)
        let f = zmul(&zmul(&zp(&[-1, 1]), &zp(&[2, 1])), &zmul(&zp(&[1, 1, 1]), &zp(&[5, 3])));
        let mut fs = factor_squarefree_z(&f);
        fs.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        assert_eq!(fs.len(), 4);
        let mut prod: ZPoly = vec![Int::one()];
        for g in &fs {
            prod = zmul(&prod, g);
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn big_coefficients() {
        // (625 x^2 - 6561)(x + 7) -- the content-free split used by golden data
        let f = zmul(&zp(&[-6561, 0, 625]), &zp(&[7, 1]));
        let fs = factor_squarefree_z(&f);
        assert_eq!(fs.len(), 3); // 625x^2 - 6561 = (25x-81)(25x+81)
        let mut prod: ZPoly = vec![Int::one()];
        for g in &fs {
            prod = zmul(&prod, g);
        }
        assert_eq!(prod, f);
    }
}
