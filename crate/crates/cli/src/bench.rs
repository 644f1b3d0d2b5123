//! Random-instance benchmark harness. Instances are built by composing a
//! random univariate g with a random sparse multivariate h so the ground
//! truth is known; both decomposition algorithms run on each instance and
//! the report records total and factorization wall times. Times are
//! reported, never asserted.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;
use unirat_core::decompose::{decompose_factor, decompose_nearsep};
use unirat_core::factor::timing;
use unirat_core::monomial::ExpVec;
use unirat_core::multipoly::MultiPoly;
use unirat_core::rat::{rat, Rat};
use unirat_core::ratfunc::{compose, RatFunc};
use unirat_core::unipoly::{UniPoly, UniRatFunc};

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub degree: usize,
    pub algorithm: &'static str,
    pub total_ms: f64,
    pub factor_ms: f64,
    pub factor_fraction: f64,
    pub success: bool,
}

#[derive(Clone, Debug, Default)]
pub struct BenchParams {
    pub seed: u64,
    pub n_list: Vec<usize>,
    pub d_list: Vec<usize>,
    pub reps: usize,
    pub max_seconds: f64,
}

impl BenchParams {
    pub fn table_grid(seed: u64) -> Self {
        BenchParams {
            seed,
            n_list: vec![2, 4, 8],
            d_list: vec![8, 10, 25, 30],
            reps: 1,
            max_seconds: 60.0,
        }
    }
}

/// Split the target degree into (deg g, deg h) with both parts >= 2.
fn split_degree(d: usize) -> (usize, usize) {
    for dg in 2..=d {
        if d % dg == 0 && d / dg >= 2 {
            return (dg, d / dg);
        }
    }
    (d, 1)
}

fn sparse_poly(rng: &mut ChaCha8Rng, nvars: usize, deg: usize, terms: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(nvars);
    for _ in 0..terms {
        let mut exps = vec![0u16; nvars];
        let mut left = rng.gen_range(0..=deg);
        for e in exps.iter_mut() {
            let d = rng.gen_range(0..=left);
            *e = d as u16;
            left -= d;
        }
        let c = rng.gen_range(-5i64..=5);
        if c != 0 {
            p.add_term(ExpVec::from_exps(&exps), rat(c));
        }
    }
    // force the exact degree with a clean top term
    let mut exps = vec![0u16; nvars];
    let mut left = deg;
    for (i, e) in exps.iter_mut().enumerate() {
        let d = if i + 1 == nvars { left } else { rng.gen_range(0..=left) };
        *e = d as u16;
        left -= d;
    }
    p.add_term(ExpVec::from_exps(&exps), rat(rng.gen_range(1i64..=5)));
    p
}

fn random_instance(rng: &mut ChaCha8Rng, n: usize, d: usize) -> RatFunc {
    let (dg, dh) = split_degree(d);
    loop {
        let hn = sparse_poly(rng, n, dh, 8);
        let hd = if rng.gen_bool(0.5) {
            MultiPoly::one(n)
        } else {
            let dd = rng.gen_range(1..=dh);
            sparse_poly(rng, n, dd, 6)
        };
        if hd.is_zero() {
            continue;
        }
        let Ok(h) = RatFunc::new(hn, hd) else { continue };
        if h.is_constant() || h.degree() != dh {
            continue;
        }
        let g = {
            let num: Vec<Rat> = (0..=dg).map(|_| rat(rng.gen_range(-5i64..=5))).collect();
            let den: Vec<Rat> =
                (0..=rng.gen_range(0..=dg)).map(|_| rat(rng.gen_range(-5i64..=5))).collect();
            let n = UniPoly::from_coeffs(num);
            let d = UniPoly::from_coeffs(den);
            if d.is_zero() {
                continue;
            }
            let Ok(g) = UniRatFunc::new(n, d) else { continue };
            g
        };
        if g.degree() != dg || g.is_constant() {
            continue;
        }
        return compose(&g, &h).unwrap();
    }
}

/// Run the grid; instances that blow the per-instance budget cancel the
/// rest of their grid cell.
pub fn run_bench(params: &BenchParams) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for &n in &params.n_list {
        for &d in &params.d_list {
            let mut budget_blown = false;
            for _ in 0..params.reps.max(1) {
                if budget_blown {
                    break;
                }
                let f = random_instance(&mut rng, n, d);
                type AlgFn = fn(
                    &RatFunc,
                )
                    -> unirat_core::Result<Option<unirat_core::decompose::Decomposition>>;
                for (name, run) in
                    [("nearsep", decompose_nearsep as AlgFn), ("factor", decompose_factor as AlgFn)]
                {
                    timing::reset();
                    let start = Instant::now();
                    let result = run(&f);
                    let total = start.elapsed();
                    let fact = timing::elapsed();
                    let success = match result {
                        Ok(Some(dec)) => compose(&dec.g, &dec.h)
                            .map(|c| c == f)
                            .unwrap_or(false),
                        _ => false,
                    };
                    rows.push(BenchRow {
                        n,
                        degree: d,
                        algorithm: name,
                        total_ms: total.as_secs_f64() * 1e3,
                        factor_ms: fact.as_secs_f64() * 1e3,
                        factor_fraction: if total.as_secs_f64() > 0.0 {
                            fact.as_secs_f64() / total.as_secs_f64()
                        } else {
                            0.0
                        },
                        success,
                    });
                    if total.as_secs_f64() > params.max_seconds {
                        budget_blown = true;
                    }
                }
            }
        }
    }
    rows
}

pub fn render_rows(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    out.push_str("  n   deg  algorithm   total(s)  factor(s)  fraction  ok\n");
    for r in rows {
        out.push_str(&format!(
            "{:3}  {:4}  {:<9} {:9.3}  {:9.3}  {:8.2}  {}\n",
            r.n,
            r.degree,
            r.algorithm,
            r.total_ms / 1e3,
            r.factor_ms / 1e3,
            r.factor_fraction,
            if r.success { "yes" } else { "no" }
        ));
    }
    out
}
