//! Multivariate factorization over Q: square-free decomposition (Yun),
//! then for each square-free part a Hensel-lifting factorization: evaluate
//! all but a main variable, factor the univariate image over Z, distribute
//! the leading coefficient by Wang's valuation matching, lift mod a 62-bit
//! prime with ideal-adic corrections, and reconstruct integer factors
//! verified by exact trial division. Also: divisor enumeration with
//! pruning filters, and a wall-clock accumulator so the bench harness can
//! report time spent factoring.

use crate::error::{Error, Result};
use crate::mgcd::{content_wrt_var, gcd_int};
use crate::modp::{self, udeg, umul, urem, utrim, Fp, PPoly, UPoly};
use crate::monomial::ExpVec;
use crate::multipoly::MultiPoly;
use crate::rat::{Int, Rat};
use crate::unifactor::{factor_squarefree_z, zdeg, ZPoly};

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

// ---------------------------------------------------------------------------
// timing accumulator (outermost factor() calls only)

pub mod timing {
    use std::cell::Cell;
    use std::time::Duration;

    thread_local! {
        static DEPTH: Cell<usize> = const { Cell::new(0) };
        static ACC: Cell<Duration> = const { Cell::new(Duration::ZERO) };
    }

    pub fn reset() {
        ACC.with(|a| a.set(Duration::ZERO));
    }

    /// Accumulated factorization wall time since the last reset.
    pub fn elapsed() -> Duration {
        ACC.with(|a| a.get())
    }

    pub(super) struct Guard {
        start: std::time::Instant,
        outermost: bool,
    }

    pub(super) fn enter() -> Guard {
        let outermost = DEPTH.with(|d| {
            let v = d.get();
            d.set(v + 1);
            v == 0
        });
        Guard { start: std::time::Instant::now(), outermost }
    }

    impl Drop for Guard {
        fn drop(&mut self) {
            DEPTH.with(|d| d.set(d.get() - 1));
            if self.outermost {
                ACC.with(|a| a.set(a.get() + self.start.elapsed()));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// factor lists

/// Complete factorization: `content * prod factors[i]^mult[i]` reproduces the
/// input exactly. Factors are primitive integer polynomials with positive
/// leading coefficient under natural graded lex, pairwise non-associate,
/// sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorList {
    pub nvars: usize,
    pub content: Rat,
    pub factors: Vec<(MultiPoly, u32)>,
}

impl FactorList {
    pub fn reconstruct(&self) -> MultiPoly {
        let mut acc = MultiPoly::constant(self.nvars, self.content.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m as usize)).unwrap();
        }
        acc
    }

    fn sort(&mut self) {
        self.factors.sort_by(|(a, _), (b, _)| a.cmp_canonical(b));
    }
}

// ---------------------------------------------------------------------------
// square-free decomposition

/// Square-free decomposition: pairwise-coprime square-free parts with
/// multiplicities (Yun's algorithm per variable, recursing on contents).
pub fn squarefree(p: &MultiPoly) -> Result<FactorList> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (content, prim) = p.primitive_parts();
    let mut fl = FactorList { nvars: p.nvars(), content, factors: Vec::new() };
    let mono = prim.min_exps();
    let core = prim.div_monomial(&mono);
    for (v, &e) in mono.exps().iter().enumerate() {
        if e > 0 {
            fl.factors.push((MultiPoly::var(v, p.nvars()), e as u32));
        }
    }
    if !core.is_constant() {
        squarefree_primitive(&core, &mut fl.factors);
    }
    fl.sort();
    Ok(fl)
}

fn squarefree_primitive(p: &MultiPoly, out: &mut Vec<(MultiPoly, u32)>) {
    debug_assert!(!p.is_constant() && p.is_integer());
    let v = (0..p.nvars()).find(|&v| p.degree_in_var(v) > 0).unwrap();
    let cont = content_wrt_var(p, v);
    let pp = p.exact_div(&cont).unwrap();
    if !cont.is_constant() {
        squarefree_primitive(&cont, out);
    }
    // Yun in variable v on the v-primitive part
    let deriv = pp.derivative(v);
    let u = gcd_int(&pp, &deriv);
    if u.is_constant() {
        let (_, prim) = pp.primitive_parts();
        out.push((prim, 1));
        return;
    }
    let mut vi = pp.exact_div(&u).unwrap();
    let mut wi = deriv.exact_div(&u).unwrap();
    let mut i = 1u32;
    loop {
        let z = wi.sub(&vi.derivative(v)).unwrap();
        if z.is_zero() {
            let (_, prim) = vi.primitive_parts();
            if !prim.is_constant() {
                out.push((prim, i));
            }
            break;
        }
        let a = gcd_int(&vi, &z);
        if !a.is_constant() {
            let (_, prim) = a.primitive_parts();
            out.push((prim, i));
        }
        vi = vi.exact_div(&a).unwrap();
        wi = z.exact_div(&a).unwrap();
        i += 1;
    }
}

// ---------------------------------------------------------------------------
// full factorization

/// Complete irreducible factorization over Q.
pub fn factor(p: &MultiPoly) -> Result<FactorList> {
    let _t = timing::enter();
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (content, prim) = p.primitive_parts();
    let mut fl = FactorList { nvars: p.nvars(), content, factors: Vec::new() };
    let mono = prim.min_exps();
    let core = prim.div_monomial(&mono);
    for (v, &e) in mono.exps().iter().enumerate() {
        if e > 0 {
            fl.factors.push((MultiPoly::var(v, p.nvars()), e as u32));
        }
    }
    if !core.is_constant() {
        let mut parts = Vec::new();
        squarefree_primitive(&core, &mut parts);
        for (part, mult) in parts {
            for f in factor_squarefree(&part)? {
                fl.factors.push((f, mult));
            }
        }
    }
    fl.sort();
    Ok(fl)
}

/// Factor a primitive square-free integer polynomial (non-constant, no
/// monomial content) into primitive irreducibles.
fn factor_squarefree(p: &MultiPoly) -> Result<Vec<MultiPoly>> {
    let n = p.nvars();
    let active: Vec<usize> = (0..n).filter(|&v| p.degree_in_var(v) > 0).collect();
    if active.len() == 1 {
        let v = active[0];
        let dense = multipoly_to_zpoly(p, v);
        return Ok(factor_squarefree_z(&dense)
            .into_iter()
            .map(|f| zpoly_to_multipoly(&f, v, n))
            .collect());
    }

    // main variable: prefer a constant leading coefficient, then low degree
    let main = *active
        .iter()
        .min_by_key(|&&v| {
            let lc = p.lc_in_var(v);
            (if lc.is_constant() { 0 } else { 1 }, p.degree_in_var(v), lc.num_terms())
        })
        .unwrap();

    let cont = content_wrt_var(p, main);
    if !cont.is_constant() {
        let pp = p.exact_div(&cont).unwrap();
        let (_, cprim) = cont.primitive_parts();
        let mut out = factor_squarefree(&cprim)?;
        out.extend(factor_squarefree(&pp)?);
        return Ok(out);
    }
    if p.degree_in_var(main) == 1 {
        // linear in the main variable and primitive there: irreducible
        return Ok(vec![p.clone()]);
    }
    hensel_factor(p, main)
}

fn multipoly_to_zpoly(p: &MultiPoly, v: usize) -> ZPoly {
    let mut out = vec![Int::zero(); p.degree_in_var(v) + 1];
    for (m, c) in p.terms() {
        out[m.exp(v) as usize] = c.numer().clone();
    }
    out
}

fn zpoly_to_multipoly(f: &ZPoly, v: usize, nvars: usize) -> MultiPoly {
    MultiPoly::from_terms(
        nvars,
        f.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, c)| {
            let mut exps = vec![0u16; nvars];
            exps[v] = e as u16;
            (ExpVec::from_exps(&exps), Rat::from_integer(c.clone()))
        }),
    )
}

// ---------------------------------------------------------------------------
// the multivariate Hensel engine

const MAX_ATTEMPTS: usize = 60;

struct Attempt {
    point: Vec<Int>,
    ufactors: Vec<ZPoly>,
}

fn hensel_factor(p: &MultiPoly, main: usize) -> Result<Vec<MultiPoly>> {
    let n = p.nvars();
    let gamma = p.lc_in_var(main);
    let gamma_fl = factor(&gamma)?;
    let c_gamma = gamma_fl.content.numer().clone();
    debug_assert!(gamma_fl.content.denom().is_one());

    let mut rng = ChaCha8Rng::seed_from_u64(0x6565_7a66);
    let mut best: Option<Attempt> = None;
    let mut seen_valid = 0usize;
    for trial in 0..MAX_ATTEMPTS {
        let point = sample_point(&mut rng, n, main, trial);
        let Some(u) = univariate_image(p, main, &point, &gamma) else {
            continue;
        };
        let ufactors = factor_squarefree_z(&u);
        if ufactors.len() == 1 {
            return Ok(vec![p.clone()]);
        }
        let better = match &best {
            None => true,
            Some(b) => ufactors.len() < b.ufactors.len(),
        };
        if better {
            best = Some(Attempt { point, ufactors });
        }
        seen_valid += 1;
        if seen_valid >= 3 {
            let attempt = best.take().unwrap();
            match lift_attempt(p, main, &attempt, &gamma_fl, &c_gamma, &mut rng) {
                Some(factors) => return Ok(factors),
                None => {
                    seen_valid = 0; // retry with fresh points
                    best = None;
                }
            }
        }
    }
    Err(Error::Internal(format!(
        "multivariate factorization did not converge on a {n}-variable input"
    )))
}

/// Evaluation points: the origin first, then small boxes, then points whose
/// coordinates are pairwise-distinct primes with random signs. The prime
/// coordinates give every irreducible factor of the leading coefficient an
/// identifying prime divisor, which the lc distribution step needs.
fn sample_point(rng: &mut ChaCha8Rng, n: usize, main: usize, trial: usize) -> Vec<Int> {
    const COORD_PRIMES: [i64; 16] =
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
    if trial == 0 {
        return vec![Int::zero(); n];
    }
    if trial % 3 == 1 {
        let range = if trial < 10 { 1 } else { 2 };
        return (0..n)
            .map(|v| {
                if v == main {
                    Int::zero()
                } else {
                    Int::from(rng.gen_range(-range..=range))
                }
            })
            .collect();
    }
    // distinct primes, shuffled, random signs
    let mut pool: Vec<i64> = COORD_PRIMES.to_vec();
    for i in (1..pool.len()).rev() {
        pool.swap(i, rng.gen_range(0..=i));
    }
    (0..n)
        .map(|v| {
            if v == main {
                Int::zero()
            } else {
                let p = pool[v % pool.len()];
                Int::from(if rng.gen_bool(0.5) { p } else { -p })
            }
        })
        .collect()
}

/// Dense univariate image of `p` in `main` at `point`; None when the leading
/// coefficient vanishes or the image is not squarefree.
fn univariate_image(p: &MultiPoly, main: usize, point: &[Int], gamma: &MultiPoly) -> Option<ZPoly> {
    let ratpoint: Vec<Rat> = point.iter().map(|a| Rat::from_integer(a.clone())).collect();
    if gamma.evaluate(&ratpoint).is_zero() {
        return None;
    }
    let assignments: Vec<(usize, Rat)> = ratpoint
        .iter()
        .enumerate()
        .filter(|(v, _)| *v != main)
        .map(|(v, a)| (v, a.clone()))
        .collect();
    let image = p.eval_vars(&assignments);
    let u = multipoly_to_zpoly(&image, main);
    // squarefree check via a modular image (sound: lc is preserved)
    let fp = Fp::new(modp::prime_62bit(0));
    let up: UPoly = {
        let mut v: UPoly = u.iter().map(|c| fp.from_int(c)).collect();
        utrim(&mut v);
        v
    };
    if udeg(&up) != zdeg(&u) {
        return None;
    }
    let der = modp::uderiv(&fp, &up);
    if udeg(&modp::ugcd(&fp, &up, &der)) != 0 {
        return None;
    }
    Some(u)
}

/// Wang's leading-coefficient distribution: which power of each irreducible
/// factor of gamma belongs to each univariate factor's lc.
fn distribute_lc(
    gamma_fl: &FactorList,
    c_gamma: &Int,
    point: &[Int],
    ufactors: &[ZPoly],
) -> Option<Vec<MultiPoly>> {
    let n_factors = ufactors.len();
    if gamma_fl.factors.is_empty() {
        return Some(vec![MultiPoly::one(point.len()); n_factors]);
    }
    let ratpoint: Vec<Rat> = point.iter().map(|a| Rat::from_integer(a.clone())).collect();
    let omegas: Vec<Int> =
        gamma_fl.factors.iter().map(|(q, _)| q.evaluate(&ratpoint).numer().clone()).collect();
    // identifying prime for each q_k
    let mut idprimes: Vec<u64> = Vec::with_capacity(omegas.len());
    for (k, om) in omegas.iter().enumerate() {
        let primes = small_prime_factors(&om.abs())?;
        let pick = primes.iter().copied().find(|&pi| {
            let pi_int = Int::from(pi);
            (c_gamma % &pi_int).is_zero().not()
                && omegas
                    .iter()
                    .enumerate()
                    .all(|(j, oj)| j == k || !(oj % &pi_int).is_zero())
        })?;
        idprimes.push(pick);
    }
    // valuations give the exponent of q_k in each factor's lc
    let mut dist = vec![vec![0u32; gamma_fl.factors.len()]; n_factors];
    for (k, ((_, ek), (om, pi))) in gamma_fl
        .factors
        .iter()
        .zip(omegas.iter().zip(idprimes.iter()))
        .enumerate()
    {
        let pi_int = Int::from(*pi);
        let vom = int_valuation(om, &pi_int);
        let mut total = 0u32;
        for (i, u) in ufactors.iter().enumerate() {
            let vl = int_valuation(u.last().unwrap(), &pi_int);
            if vl % vom != 0 {
                return None;
            }
            dist[i][k] = (vl / vom) as u32;
            total += dist[i][k];
        }
        if total != *ek {
            return None;
        }
    }
    let n = point.len();
    Some(
        dist.into_iter()
            .map(|row| {
                let mut acc = MultiPoly::one(n);
                for ((q, _), e) in gamma_fl.factors.iter().zip(row) {
                    if e > 0 {
                        acc = acc.mul(&q.pow(e as usize)).unwrap();
                    }
                }
                acc
            })
            .collect(),
    )
}

trait NotExt {
    fn not(self) -> bool;
}
impl NotExt for bool {
    fn not(self) -> bool {
        !self
    }
}

fn int_valuation(a: &Int, p: &Int) -> u32 {
    let mut a = a.abs();
    let mut v = 0;
    while !a.is_zero() && (&a % p).is_zero() {
        a /= p;
        v += 1;
    }
    v
}

/// Trial-division factorization of a small positive integer; None when a
/// composite residual survives (caller retries with another point).
fn small_prime_factors(a: &Int) -> Option<Vec<u64>> {
    if a.is_zero() {
        return None;
    }
    let mut a = a.to_u64_digits().1.first().copied().unwrap_or(1);
    if a == 0 || !a_fits(&a) {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= a && d < 100_000 {
        if a % d == 0 {
            out.push(d);
            while a % d == 0 {
                a /= d;
            }
        }
        d += 1;
    }
    if a > 1 {
        if modp::is_prime_u64(a) {
            out.push(a);
        } else {
            return None;
        }
    }
    Some(out)
}

fn a_fits(_a: &u64) -> bool {
    true
}

fn lift_attempt(
    p: &MultiPoly,
    main: usize,
    attempt: &Attempt,
    gamma_fl: &FactorList,
    c_gamma: &Int,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<MultiPoly>> {
    let lcs = distribute_lc(gamma_fl, c_gamma, &attempt.point, &attempt.ufactors)?;
    // translate so the evaluation point becomes the origin
    let shift: Vec<Rat> = attempt.point.iter().map(|a| Rat::from_integer(a.clone())).collect();
    let p_t = p.shift(&shift);
    for prime_idx in [1usize, 3] {
        let fp = Fp::new(modp::prime_62bit(prime_idx));
        if let Some(ws) = lift_mod(&fp, &p_t, main, attempt, &lcs, c_gamma, rng) {
            if let Some(out) = reconstruct(&p_t, &ws, &fp, c_gamma, &shift) {
                return Some(out);
            }
        }
    }
    None
}

/// Ideal-adic Hensel lift mod a single prime. Returns lifted factors with
/// `prod w_i = c_gamma^{r-1} * p_t` exactly mod the prime, or None.
fn lift_mod(
    fp: &Fp,
    p_t: &MultiPoly,
    main: usize,
    attempt: &Attempt,
    lcs: &[MultiPoly],
    c_gamma: &Int,
    _rng: &mut ChaCha8Rng,
) -> Option<Vec<PPoly>> {
    let n = p_t.nvars();
    let r = attempt.ufactors.len();
    let cg = fp.from_int(c_gamma);
    if cg == 0 {
        return None;
    }
    let pt_q = PPoly::from_multipoly(fp, p_t)?;
    let target = pt_q.mul_scalar(fp, fp.pow(cg, (r - 1) as u64));

    // translated lc targets (c_gamma * D_i)
    let shift = &attempt.point;
    let lc_targets: Vec<PPoly> = lcs
        .iter()
        .map(|d| {
            let mut q = PPoly::from_multipoly(fp, d)?;
            for (v, a) in shift.iter().enumerate() {
                if !a.is_zero() {
                    q = q.shift_var(fp, v, fp.from_int(a));
                }
            }
            Some(q.mul_scalar(fp, cg))
        })
        .collect::<Option<Vec<_>>>()?;

    // initial factors: scaled univariate images with the lc slot replaced
    let monic_images: Vec<UPoly> = attempt
        .ufactors
        .iter()
        .map(|u| {
            let mut v: UPoly = u.iter().map(|c| fp.from_int(c)).collect();
            utrim(&mut v);
            modp::umonic(fp, &v)
        })
        .collect();
    if monic_images.iter().zip(&attempt.ufactors).any(|(m, u)| udeg(m) != zdeg(u)) {
        return None;
    }
    let scales: Vec<u64> = lc_targets
        .iter()
        .map(|t| t.terms.get(&ExpVec::zero(n)).copied().unwrap_or(0))
        .collect();
    if scales.iter().any(|&s| s == 0) {
        return None;
    }
    let mut ws: Vec<PPoly> = Vec::with_capacity(r);
    for ((mi, &sc), lct) in monic_images.iter().zip(&scales).zip(&lc_targets) {
        let d = udeg(mi);
        let mut w = PPoly::zero(n);
        for (e, &c) in mi.iter().enumerate().take(d) {
            if c != 0 {
                let mut exps = vec![0u16; n];
                exps[main] = e as u16;
                w.add_term(fp, ExpVec::from_exps(&exps), fp.mul(c, sc));
            }
        }
        // impose the full multivariate leading coefficient
        let lead = ExpVec::var(main, n).pow(d as u16);
        w = w.add(fp, &lct.mul_term(fp, &lead, 1));
        ws.push(w);
    }

    // Bezout basis for the monic images
    let cofactors: Vec<UPoly> = (0..r)
        .map(|i| {
            let mut acc: UPoly = vec![1];
            for (j, m) in monic_images.iter().enumerate() {
                if j != i {
                    acc = umul(fp, &acc, m);
                }
            }
            acc
        })
        .collect();
    let bezout: Vec<UPoly> = (0..r)
        .map(|i| {
            let (g, s, _) = modp::uext_gcd(fp, &urem(fp, &cofactors[i], &monic_images[i]), &monic_images[i]);
            if udeg(&g) != 0 {
                return Vec::new();
            }
            s
        })
        .collect();
    if bezout.iter().any(|b| b.is_empty()) {
        return None;
    }
    // gamma0 = prod of the point scalings = lc of target at the origin
    let mut gamma0 = 1u64;
    for &s in &scales {
        gamma0 = fp.mul(gamma0, s);
    }
    let gamma0_inv = fp.inv(gamma0);

    let bound = target.degree_except(main);
    let mut error = target.sub(fp, &product(fp, &ws));
    for k in 1..=bound {
        if error.is_zero() {
            break;
        }
        debug_assert!(min_ideal_degree(&error, main) >= k, "lift invariant broken");
        // group the order-k part by ideal monomial
        let mut groups: BTreeMap<ExpVec, UPoly> = BTreeMap::new();
        for (m, &c) in &error.terms {
            if m.total_degree() - m.exp(main) as usize != k {
                continue;
            }
            let mut exps: Vec<u16> = m.exps().to_vec();
            let d = exps[main] as usize;
            exps[main] = 0;
            let key = ExpVec::from_exps(&exps);
            let entry = groups.entry(key).or_default();
            if entry.len() <= d {
                entry.resize(d + 1, 0);
            }
            entry[d] = c;
        }
        if groups.is_empty() {
            continue;
        }
        let mut deltas: Vec<PPoly> = vec![PPoly::zero(n); r];
        for (mu, mut cmu) in groups {
            utrim(&mut cmu);
            for i in 0..r {
                let sigma = urem(fp, &umul(fp, &bezout[i], &cmu), &monic_images[i]);
                if sigma.is_empty() {
                    continue;
                }
                let adj = fp.mul(scales[i], gamma0_inv);
                for (e, &c) in sigma.iter().enumerate() {
                    if c != 0 {
                        let mut exps: Vec<u16> = mu.exps().to_vec();
                        exps[main] = e as u16;
                        deltas[i].add_term(fp, ExpVec::from_exps(&exps), fp.mul(c, adj));
                    }
                }
            }
        }
        // update factors and the error term exactly
        if r == 2 {
            let upd = deltas[0]
                .mul(fp, &ws[1])
                .add(fp, &deltas[1].mul(fp, &ws[0]))
                .add(fp, &deltas[0].mul(fp, &deltas[1]));
            error = error.sub(fp, &upd);
            ws[0] = ws[0].add(fp, &deltas[0]);
            ws[1] = ws[1].add(fp, &deltas[1]);
        } else {
            for (w, d) in ws.iter_mut().zip(&deltas) {
                *w = w.add(fp, d);
            }
            error = target.sub(fp, &product(fp, &ws));
        }
    }
    if error.is_zero() {
        Some(ws)
    } else {
        None
    }
}

fn product(fp: &Fp, ws: &[PPoly]) -> PPoly {
    let mut acc = ws[0].clone();
    for w in &ws[1..] {
        acc = acc.mul(fp, w);
    }
    acc
}

fn min_ideal_degree(p: &PPoly, main: usize) -> usize {
    p.terms
        .keys()
        .map(|m| m.total_degree() - m.exp(main) as usize)
        .min()
        .unwrap_or(usize::MAX)
}

/// Recover integer factors from the lifted images. Each lifted `w_i` equals
/// `(c_gamma / eps_i) * g_i` mod the prime for some divisor `eps_i` of
/// `c_gamma`, so scaling by `eps / c_gamma` and taking symmetric remainders
/// yields the true factor; exact division verifies every acceptance.
fn reconstruct(
    p_t: &MultiPoly,
    ws: &[PPoly],
    fp: &Fp,
    c_gamma: &Int,
    shift: &[Rat],
) -> Option<Vec<MultiPoly>> {
    let cg_inv = {
        let v = fp.from_int(c_gamma);
        if v == 0 {
            return None;
        }
        fp.inv(v)
    };
    let eps_candidates = positive_divisors(c_gamma);
    // coefficients of true factors are tiny compared to the prime
    let plaus_bound = Int::from(fp.p >> 12);
    let mut remaining = p_t.clone();
    let mut out = Vec::with_capacity(ws.len());
    for (idx, w) in ws.iter().enumerate() {
        if idx == ws.len() - 1 {
            // last factor: the remaining cofactor, if consistent
            let (c, prim) = remaining.primitive_parts();
            if prim.is_constant() || !c.denom().is_one() {
                return None;
            }
            out.push(prim.clone());
            remaining = MultiPoly::constant(p_t.nvars(), c);
            break;
        }
        let mut found = false;
        for eps in &eps_candidates {
            let scale = fp.mul(fp.from_int(eps), cg_inv);
            let cand = w.mul_scalar(fp, scale).to_multipoly_symmetric(fp);
            if cand.is_zero() {
                continue;
            }
            let plausible = cand
                .terms()
                .all(|(_, c)| c.numer().abs() < plaus_bound);
            if !plausible {
                continue;
            }
            if let Some(q) = remaining.exact_div(&cand) {
                out.push(cand);
                remaining = q;
                found = true;
                break;
            }
        }
        if !found {
            return None;
        }
    }
    if !remaining.is_constant() {
        return None;
    }
    // translate back and normalize
    let back: Vec<Rat> = shift.iter().map(|a| -a.clone()).collect();
    Some(
        out.into_iter()
            .map(|f| {
                let (_, prim) = f.shift(&back).primitive_parts();
                prim
            })
            .collect(),
    )
}

fn positive_divisors(a: &Int) -> Vec<Int> {
    let a = a.abs();
    let mut primes: Vec<(Int, u32)> = Vec::new();
    let mut rest = a.clone();
    let mut d = Int::from(2);
    while (&d * &d) <= rest {
        let mut e = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
        if primes.iter().map(|(_, e)| e).sum::<u32>() > 64 {
            break;
        }
    }
    if rest > Int::one() {
        primes.push((rest, 1));
    }
    let mut divs = vec![Int::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d0 in &divs {
            let mut pk = Int::one();
            for _ in 0..=e {
                next.push(d0 * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}

// ---------------------------------------------------------------------------
// divisor enumeration

/// Pruning predicate for divisor enumeration.
#[derive(Clone, Debug, Default)]
pub struct DivisorFilter {
    /// Keep divisors of total degree at most this.
    pub max_degree: Option<usize>,
    /// Keep divisors whose total degree (>= 1) divides this target.
    pub degree_divides: Option<usize>,
    /// Keep divisors that vanish (true) or do not vanish (false) at a point.
    pub vanish_at: Option<(Vec<Rat>, bool)>,
    /// Keep divisors whose natural-graded-lex leading monomial is strictly
    /// below this one.
    pub lm_below: Option<ExpVec>,
}

impl DivisorFilter {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn accepts(&self, p: &MultiPoly) -> bool {
        let deg = p.total_degree();
        if let Some(mx) = self.max_degree {
            if deg > mx {
                return false;
            }
        }
        if let Some(target) = self.degree_divides {
            if deg == 0 || target % deg != 0 {
                return false;
            }
        }
        if let Some((point, want_zero)) = &self.vanish_at {
            if p.evaluate(point).is_zero() != *want_zero {
                return false;
            }
        }
        if let Some(bound) = &self.lm_below {
            match p.leading_natural() {
                Ok((lm, _)) => {
                    if &lm >= bound {
                        return false;
                    }
                }
                Err(_) => return false,
            }
        }
        true
    }
}

/// Lazily enumerate the divisors `prod factor_i^(e_i)`, `0 <= e_i <= mult_i`,
/// that satisfy the filter, in increasing total degree (exponent tuples
/// break ties). The numeric content is ignored: divisors are normalized
/// products of the canonical factors, including 1 and the full product.
pub fn divisors(fl: &FactorList, filter: &DivisorFilter) -> impl Iterator<Item = MultiPoly> {
    let degs: Vec<usize> = fl.factors.iter().map(|(f, _)| f.total_degree()).collect();
    let mut tuples: Vec<(usize, Vec<u32>)> = Vec::new();
    let mut cur: Vec<u32> = vec![0; fl.factors.len()];
    loop {
        let deg: usize =
            cur.iter().zip(&degs).map(|(&e, &d)| e as usize * d).sum();
        let keep = match filter.max_degree {
            Some(mx) => deg <= mx,
            None => true,
        };
        if keep {
            tuples.push((deg, cur.clone()));
        }
        // increment the mixed-radix counter
        let mut i = 0;
        loop {
            if i == cur.len() {
                tuples.sort();
                let nvars = fl.nvars;
                let factors = fl.factors.clone();
                let filter = filter.clone();
                return tuples.into_iter().filter_map(move |(_, tuple)| {
                    let mut acc = MultiPoly::one(nvars);
                    for ((f, _), &e) in factors.iter().zip(&tuple) {
                        if e > 0 {
                            acc = acc.mul(&f.pow(e as usize)).unwrap();
                        }
                    }
                    if filter.accepts(&acc) {
                        Some(acc)
                    } else {
                        None
                    }
                });
            }
            if cur[i] < fl.factors[i].1 {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}
