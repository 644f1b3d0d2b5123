//! Multivariate polynomial gcd over Q.
//!
//! Strategy: strip integer and monomial content, then try to certify a
//! trivial gcd from univariate images (sound: the image of a divisor divides
//! the image gcd, and the leading-coefficient checks rule out degree drops).
//! Nontrivial gcds go through a Zippel-style sparse modular interpolation
//! mod 62-bit primes with CRT, verified by exact trial division, with a
//! primitive PRS as the last-resort fallback. All randomness is drawn from a
//! fixed-seed generator so runs are reproducible.

use crate::error::{Error, Result};
use crate::modp::{self, solve_vandermonde_shifted, udeg, ugcd, uscale, Fp, PPoly, UPoly};
use crate::monomial::ExpVec;
use crate::multipoly::MultiPoly;
use crate::rat::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_PRIMES: usize = 24;
const POINT_RETRIES: usize = 8;

/// Monic gcd over Q (leading coefficient 1 under natural graded lex).
/// `gcd(p, 0)` is the monic normalization of `p`.
pub fn mgcd(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    if p.nvars() != q.nvars() {
        return Err(Error::VarMismatch { left: p.nvars(), right: q.nvars() });
    }
    if p.is_zero() && q.is_zero() {
        return Err(Error::BothZero);
    }
    if p.is_zero() {
        return Ok(q.monic());
    }
    if q.is_zero() {
        return Ok(p.monic());
    }
    let (_, pp) = p.primitive_parts();
    let (_, qq) = q.primitive_parts();
    Ok(gcd_int(&pp, &qq).monic())
}

/// gcd over Z of two nonzero integer-coefficient polynomials, returned
/// primitive-times-content with positive natural leading coefficient.
pub(crate) fn gcd_int(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    debug_assert!(!p.is_zero() && !q.is_zero());
    debug_assert!(p.is_integer() && q.is_integer());
    let (cp, pp) = p.primitive_parts();
    let (cq, qq) = q.primitive_parts();
    let ic = cp.numer().gcd(cq.numer());
    let mp = pp.min_exps();
    let mq = qq.min_exps();
    let common =
        ExpVec::from_exps(&mp.exps().iter().zip(mq.exps()).map(|(a, b)| *a.min(b)).collect::<Vec<_>>());
    let core = gcd_core(&pp.div_monomial(&mp), &qq.div_monomial(&mq));
    core.mul_term(&common, &Rat::from_integer(ic))
}

/// Fold gcd over a list of integer polynomials (zeros skipped), with early
/// exit once the running gcd is constant. Empty/all-zero input gives zero.
pub(crate) fn gcd_int_many(polys: &[MultiPoly]) -> MultiPoly {
    let mut acc: Option<MultiPoly> = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => {
                let (c, prim) = p.primitive_parts();
                prim.mul_scalar(&Rat::from_integer(c.numer().abs()))
            }
            Some(g) => gcd_int(&g, p),
        });
        if let Some(g) = &acc {
            if g.is_one() {
                return g.clone();
            }
        }
    }
    acc.unwrap_or_else(|| MultiPoly::zero(polys.first().map(|p| p.nvars()).unwrap_or(0)))
}

/// Content of `p` with respect to variable `v`: the gcd of the coefficient
/// polynomials of the powers of `v`.
pub(crate) fn content_wrt_var(p: &MultiPoly, v: usize) -> MultiPoly {
    gcd_int_many(&p.coeffs_in_var(v))
}

fn gcd_core(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    debug_assert!(!p.is_zero() && !q.is_zero());
    let n = p.nvars();
    if p == q {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one(n);
    }
    let common: Vec<usize> =
        (0..n).filter(|&v| p.degree_in_var(v) > 0 && q.degree_in_var(v) > 0).collect();
    if common.is_empty() {
        return MultiPoly::one(n);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x6763_6400);

    // Sound quick rejection: certify degree 0 in every common variable.
    if certify_trivial(p, q, &common, &mut rng) {
        return MultiPoly::one(n);
    }

    // Single shared variable with both inputs univariate in it.
    if common.len() == 1 {
        let v = common[0];
        let p_uni = (0..n).all(|w| w == v || p.degree_in_var(w) == 0);
        let q_uni = (0..n).all(|w| w == v || q.degree_in_var(w) == 0);
        if p_uni && q_uni {
            return gcd_int_univariate(p, q, v, &mut rng);
        }
    }

    // Main variable: largest common minimum degree.
    let main = *common
        .iter()
        .max_by_key(|&&v| p.degree_in_var(v).min(q.degree_in_var(v)))
        .unwrap();

    // Contents with respect to the main variable.
    let cont_p = content_wrt_var(p, main);
    let cont_q = content_wrt_var(q, main);
    let pp = p.exact_div(&cont_p).expect("content divides");
    let qq = q.exact_div(&cont_q).expect("content divides");
    let cont_gcd = gcd_int(&cont_p, &cont_q);

    let core = gcd_primitive_main(&pp, &qq, main, &mut rng);
    let full = cont_gcd.mul(&core).unwrap();
    let (c, prim) = full.primitive_parts();
    prim.mul_scalar(&Rat::from_integer(c.numer().abs()))
}

/// Evaluate away all variables but `v` at a random point and certify that the
/// gcd has degree 0 in every common variable. Sound because divisor images
/// divide image gcds and the leading-coefficient checks forbid degree drops.
fn certify_trivial(
    p: &MultiPoly,
    q: &MultiPoly,
    common: &[usize],
    rng: &mut ChaCha8Rng,
) -> bool {
    let fp = Fp::new(modp::prime_62bit(0));
    let (Some(pm), Some(qm)) = (PPoly::from_multipoly(&fp, p), PPoly::from_multipoly(&fp, q))
    else {
        return false;
    };
    'vars: for &v in common {
        let lcp = pm.lc_in_var(&fp, v);
        let lcq = qm.lc_in_var(&fp, v);
        for _ in 0..POINT_RETRIES {
            let point: Vec<u64> =
                (0..p.nvars()).map(|_| rng.gen_range(1..fp.p)).collect();
            if lcp.eval_all(&fp, &point) == 0 || lcq.eval_all(&fp, &point) == 0 {
                continue;
            }
            let a = pm.eval_except(&fp, v, &point);
            let b = qm.eval_except(&fp, v, &point);
            if udeg(&ugcd(&fp, &a, &b)) == 0 {
                continue 'vars; // certified: gcd degree 0 in v
            }
            return false; // nontrivial image gcd; go do real work
        }
        return false; // could not find a faithful point; fall through
    }
    true
}

/// Modular univariate gcd over Z with CRT and trial-division verification.
fn gcd_int_univariate(
    p: &MultiPoly,
    q: &MultiPoly,
    v: usize,
    _rng: &mut ChaCha8Rng,
) -> MultiPoly {
    let n = p.nvars();
    let gamma = {
        let lp = p.lc_in_var(v).constant_value().unwrap();
        let lq = q.lc_in_var(v).constant_value().unwrap();
        lp.numer().gcd(lq.numer())
    };
    let mut acc: Option<(MultiPoly, Int, usize)> = None; // (accum, modulus, deg)
    for k in 0..MAX_PRIMES {
        let fp = Fp::new(modp::prime_62bit(k));
        let pm = modp::reduce_int_poly(&fp, p);
        let qm = modp::reduce_int_poly(&fp, q);
        let a = pm.eval_except(&fp, v, &vec![0; n]);
        let b = qm.eval_except(&fp, v, &vec![0; n]);
        if udeg(&a) != p.degree_in_var(v) || udeg(&b) != q.degree_in_var(v) {
            continue; // lc vanished mod p
        }
        let g = ugcd(&fp, &a, &b);
        if udeg(&g) == 0 {
            return MultiPoly::one(n);
        }
        let scaled = uscale(&fp, &g, fp.from_int(&gamma));
        let img = upoly_to_multipoly(&fp, &scaled, v, n);
        let d = udeg(&scaled);
        acc = match acc {
            Some((old, m, od)) if od < d => Some((old, m, od)),
            Some((old, m, od)) if od == d => {
                let img_p = modp::reduce_int_poly(&fp, &img);
                Some((modp::crt_multipoly(&old, &m, &img_p, &fp), m * Int::from(fp.p), od))
            }
            _ => Some((img, Int::from(fp.p), d)),
        };
        if let Some((cand, _, _)) = &acc {
            let (_, prim) = cand.primitive_parts();
            if prim.divides(p) && prim.divides(q) {
                return prim;
            }
        }
    }
    gcd_prs(p, q, v)
}

fn upoly_to_multipoly(fp: &Fp, u: &UPoly, v: usize, nvars: usize) -> MultiPoly {
    let mut terms = Vec::new();
    for (e, &c) in u.iter().enumerate() {
        if c != 0 {
            let mut exps = vec![0u16; nvars];
            exps[v] = e as u16;
            terms.push((ExpVec::from_exps(&exps), Rat::from_integer(fp.symmetric(c))));
        }
    }
    MultiPoly::from_terms(nvars, terms)
}

/// gcd of inputs primitive with respect to `main`, via sparse modular
/// interpolation. Returns a primitive positive-lc polynomial.
fn gcd_primitive_main(
    p: &MultiPoly,
    q: &MultiPoly,
    main: usize,
    rng: &mut ChaCha8Rng,
) -> MultiPoly {
    let n = p.nvars();
    let gamma = gcd_int(&p.lc_in_var(main), &q.lc_in_var(main));
    let bounds: Vec<usize> =
        (0..n).map(|v| p.degree_in_var(v).min(q.degree_in_var(v))).collect();

    let mut acc: Option<(MultiPoly, Int, usize)> = None;
    for k in 0..MAX_PRIMES {
        let fp = Fp::new(modp::prime_62bit(k));
        let pm = modp::reduce_int_poly(&fp, p);
        let qm = modp::reduce_int_poly(&fp, q);
        if pm.degree_in_var(main) != p.degree_in_var(main)
            || qm.degree_in_var(main) != q.degree_in_var(main)
        {
            continue;
        }
        let gm = modp::reduce_int_poly(&fp, &gamma);
        let Some(g_star) = zippel_modp(&fp, &pm, &qm, main, &gm, &bounds, rng) else {
            continue;
        };
        if g_star.is_constant() {
            return MultiPoly::one(n);
        }
        let d = g_star.degree_in_var(main);
        let img = g_star.to_multipoly_symmetric(&fp);
        acc = match acc {
            Some((old, m, od)) if od < d => Some((old, m, od)),
            Some((old, m, od))
                if od == d && same_support(&old, &img) =>
            {
                Some((modp::crt_multipoly(&old, &m, &g_star, &fp), m * Int::from(fp.p), od))
            }
            _ => Some((img, Int::from(fp.p), d)),
        };
        if let Some((cand, _, _)) = &acc {
            let (_, prim) = cand.primitive_parts();
            if !prim.is_constant() && prim.divides(p) && prim.divides(q) {
                return prim;
            }
        }
    }
    gcd_prs(p, q, main)
}

fn same_support(a: &MultiPoly, b: &MultiPoly) -> bool {
    a.num_terms() == b.num_terms() && a.terms().zip(b.terms()).all(|((m1, _), (m2, _))| m1 == m2)
}

/// One modular image of the scaled gcd `(gamma / lc(G)) * G`, or None when
/// the attempt ran into unlucky points.
fn zippel_modp(
    fp: &Fp,
    p: &PPoly,
    q: &PPoly,
    main: usize,
    gamma: &PPoly,
    bounds: &[usize],
    rng: &mut ChaCha8Rng,
) -> Option<PPoly> {
    let n = p.nvars;
    let lcp = p.lc_in_var(fp, main);
    let lcq = q.lc_in_var(fp, main);
    let stage_bound =
        |v: usize| -> usize { bounds[v] + gamma.degree_in_var(v) };
    let stage_vars: Vec<usize> =
        (0..n).filter(|&v| v != main && stage_bound(v) > 0).collect();

    'attempt: for _ in 0..POINT_RETRIES {
        let alpha: Vec<u64> = (0..n).map(|_| rng.gen_range(1..fp.p)).collect();
        if lcp.eval_all(fp, &alpha) == 0 || lcq.eval_all(fp, &alpha) == 0 {
            continue;
        }
        let a = p.eval_except(fp, main, &alpha);
        let b = q.eval_except(fp, main, &alpha);
        let g0 = ugcd(fp, &a, &b);
        let d1 = udeg(&g0);
        if d1 == 0 {
            return Some(PPoly::constant(n, 1));
        }
        let scale = gamma.eval_all(fp, &alpha);
        let mut g_cur = upoly_to_ppoly(fp, &uscale(fp, &g0, scale), main, n);

        for &v in &stage_vars {
            let bv = stage_bound(v);
            let mut nodes: Vec<u64> = vec![alpha[v]];
            let mut slices: Vec<PPoly> = vec![g_cur.clone()];
            // skeleton per main-power, taken from the current partial gcd
            let skeleton: Vec<(usize, Vec<ExpVec>)> = (0..=d1)
                .map(|d| {
                    let coeff = g_cur.coeff_of_var_power(main, d);
                    (d, coeff.terms.keys().cloned().collect::<Vec<_>>())
                })
                .filter(|(_, s)| !s.is_empty())
                .collect();
            let s_max = skeleton.iter().map(|(_, s)| s.len()).max().unwrap_or(0);
            if s_max == 0 {
                return None;
            }

            for _ in 0..bv {
                // fresh node for this slice
                let t = loop {
                    let t = rng.gen_range(1..fp.p);
                    if !nodes.contains(&t) {
                        break t;
                    }
                };
                let mut solved: Option<PPoly> = None;
                'cattempt: for _ in 0..POINT_RETRIES {
                    // random base c for already-materialized variables
                    let c: Vec<u64> = (0..n).map(|_| rng.gen_range(2..fp.p)).collect();
                    // node values m(c) must be distinct per skeleton class
                    for (_, monos) in &skeleton {
                        let mut vals: Vec<u64> =
                            monos.iter().map(|m| eval_monomial(fp, m, &c)).collect();
                        vals.sort_unstable();
                        vals.dedup();
                        if vals.len() != monos.len() {
                            continue 'cattempt;
                        }
                    }
                    // gather univariate images at powers of c
                    let mut images: Vec<UPoly> = Vec::with_capacity(s_max);
                    let mut cpow = vec![1u64; n];
                    for _ in 1..=s_max {
                        for (j, cp) in cpow.iter_mut().enumerate() {
                            *cp = fp.mul(*cp, c[j]);
                        }
                        let mut point = alpha.clone();
                        for &w in &stage_vars {
                            if w == v {
                                break;
                            }
                            point[w] = cpow[w];
                        }
                        point[v] = t;
                        if lcp.eval_all(fp, &point) == 0 || lcq.eval_all(fp, &point) == 0 {
                            continue 'cattempt;
                        }
                        let ia = p.eval_except(fp, main, &point);
                        let ib = q.eval_except(fp, main, &point);
                        let g = ugcd(fp, &ia, &ib);
                        match udeg(&g).cmp(&d1) {
                            std::cmp::Ordering::Less => continue 'attempt, // base was unlucky
                            std::cmp::Ordering::Greater => continue 'cattempt,
                            std::cmp::Ordering::Equal => {}
                        }
                        images.push(uscale(fp, &g, gamma.eval_all(fp, &point)));
                    }
                    // solve for skeleton coefficients per main-power
                    let mut g_j = PPoly::zero(n);
                    for (d, monos) in &skeleton {
                        let nodes_m: Vec<u64> =
                            monos.iter().map(|m| eval_monomial(fp, m, &c)).collect();
                        let rhs: Vec<u64> = images[..monos.len()]
                            .iter()
                            .map(|img| img.get(*d).copied().unwrap_or(0))
                            .collect();
                        let sol = solve_vandermonde_shifted(fp, &nodes_m, &rhs)?;
                        for (m, u) in monos.iter().zip(sol) {
                            if u != 0 {
                                let mut exps: Vec<u16> = m.exps().to_vec();
                                exps[main] = *d as u16;
                                g_j.add_term(fp, ExpVec::from_exps(&exps), u);
                            }
                        }
                    }
                    solved = Some(g_j);
                    break;
                }
                let g_j = solved?;
                nodes.push(t);
                slices.push(g_j);
            }
            g_cur = interp_ppoly_var(fp, v, &nodes, &slices);
        }

        // quick modular divisibility screen before the caller's exact check
        if p.exact_div(fp, &g_cur.mul_scalar(fp, fp.inv(g_cur.lc_natural()))).is_none() {
            continue 'attempt;
        }
        return Some(g_cur);
    }
    None
}

fn eval_monomial(fp: &Fp, m: &ExpVec, point: &[u64]) -> u64 {
    let mut acc = 1u64;
    for (v, &e) in m.exps().iter().enumerate() {
        if e > 0 {
            acc = fp.mul(acc, fp.pow(point[v], e as u64));
        }
    }
    acc
}

fn upoly_to_ppoly(fp: &Fp, u: &UPoly, v: usize, nvars: usize) -> PPoly {
    let mut out = PPoly::zero(nvars);
    for (e, &c) in u.iter().enumerate() {
        if c != 0 {
            let mut exps = vec![0u16; nvars];
            exps[v] = e as u16;
            out.add_term(fp, ExpVec::from_exps(&exps), c);
        }
    }
    out
}

/// Newton interpolation in variable `v` with polynomial values.
fn interp_ppoly_var(fp: &Fp, v: usize, nodes: &[u64], values: &[PPoly]) -> PPoly {
    let n = values[0].nvars;
    let k = nodes.len();
    let mut dd: Vec<PPoly> = values.to_vec();
    for j in 1..k {
        for i in (j..k).rev() {
            let num = dd[i].sub(fp, &dd[i - 1]);
            let den_inv = fp.inv(fp.sub(nodes[i], nodes[i - j]));
            dd[i] = num.mul_scalar(fp, den_inv);
        }
    }
    let mut acc = PPoly::zero(n);
    let mut basis = PPoly::constant(n, 1);
    for (i, d) in dd.iter().enumerate() {
        acc = acc.add(fp, &d.mul(fp, &basis));
        if i + 1 < k {
            // basis *= (x_v - nodes[i])
            let mut lin = PPoly::zero(n);
            lin.add_term(fp, ExpVec::var(v, n), 1);
            lin.add_term(fp, ExpVec::zero(n), fp.neg(nodes[i]));
            basis = basis.mul(fp, &lin);
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// primitive PRS fallback

/// Primitive pseudo-remainder sequence in `main`. Slow but exact; only
/// reached when the modular engine exhausts its retry budget.
fn gcd_prs(p: &MultiPoly, q: &MultiPoly, main: usize) -> MultiPoly {
    let cont_p = content_wrt_var(p, main);
    let cont_q = content_wrt_var(q, main);
    let cont = gcd_int(&cont_p, &cont_q);
    let mut a = p.exact_div(&cont_p).unwrap();
    let mut b = q.exact_div(&cont_q).unwrap();
    if a.degree_in_var(main) < b.degree_in_var(main) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b, main);
        a = b;
        b = match r {
            Some(r) if !r.is_zero() => {
                let c = content_wrt_var(&r, main);
                r.exact_div(&c).unwrap()
            }
            _ => MultiPoly::zero(p.nvars()),
        };
    }
    let (_, prim) = a.primitive_parts();
    let g = cont.mul(&prim).unwrap();
    let (c, prim) = g.primitive_parts();
    prim.mul_scalar(&Rat::from_integer(c.numer().abs()))
}

/// Pseudo-remainder of `a` by `b` in variable `v` (lc(b)^(da-db+1) * a mod b).
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, v: usize) -> Option<MultiPoly> {
    let db = b.degree_in_var(v);
    if a.degree_in_var(v) < db {
        return Some(a.clone());
    }
    let lcb = b.lc_in_var(v);
    let mut r = a.clone();
    loop {
        let dr = r.degree_in_var(v);
        if r.is_zero() || dr < db {
            return Some(r);
        }
        let lcr = r.lc_in_var(v);
        // r = lcb * r - lcr * x_v^(dr-db) * b
        let shift = ExpVec::var(v, a.nvars()).pow((dr - db) as u16);
        let t = b.mul(&lcr).unwrap().mul_term(&shift, &Rat::one());
        r = r.mul(&lcb).unwrap().sub(&t).unwrap();
    }
}
