//! Acceptance suite: every criterion runs at its stated tolerance and
//! prints one pass/fail line (run with `--nocapture` to see them). Golden
//! values are exact; random suites are seeded and deterministic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};
use unirat::bench::{run_bench, BenchParams};
use unirat::parser::parse_ratfunc;
use unirat_core::decompose::{
    decompose_all, decompose_factor, decompose_nearsep, equivalent, left_component,
    near_sep_poly, normalize_for_factoring, Decomposition,
};
use unirat_core::linsolve::QMatrix;
use unirat_core::lueroth::{luroth_generator, GeneratorStatus};
use unirat_core::monomial::{ExpVec, MOrder};
use unirat_core::multipoly::MultiPoly;
use unirat_core::rat::{rat, Rat};
use unirat_core::ratfunc::{compose, RatFunc};
use unirat_core::unipoly::{UniPoly, UniRatFunc};

fn vars3() -> Vec<String> {
    vec!["x".into(), "y".into(), "z".into()]
}

fn parse(text: &str) -> RatFunc {
    parse_ratfunc(text, &vars3()).unwrap()
}

fn parse_uni(text: &str) -> UniRatFunc {
    let f = parse_ratfunc(text, &["t".to_string()]).unwrap();
    UniRatFunc::new(
        UniPoly::from_multipoly(f.num(), 0),
        UniPoly::from_multipoly(f.den(), 0),
    )
    .unwrap()
}

fn same_field(a: &RatFunc, b: &RatFunc) -> bool {
    let fwd = left_component(a, b).unwrap();
    let bwd = left_component(b, a).unwrap();
    matches!((fwd, bwd), (Some(l1), Some(l2)) if l1.degree() == 1 && l2.degree() == 1)
}

fn report(name: &str, ok: bool, detail: &str) {
    println!("ACCEPTANCE {name}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{name} failed: {detail}");
}

fn ex3_f() -> RatFunc {
    parse(
        "(y^2*x^2 + 2*x^2*y*z^2 - 2*y^6*x + z^4*x^2 - 2*z^2*x*y^5 + y^10 - 81*x^2 \
         - 450*x*y*z - 625*y^2*z^2)/(y^2*x^2 + 2*x^2*y*z^2 - 2*y^6*x + z^4*x^2 \
         - 2*z^2*x*y^5 + y^10 - 162*x^2 - 900*x*y*z - 1250*y^2*z^2)",
    )
}

#[test]
fn golden_example_1_luroth_generator() {
    let start = Instant::now();
    let f1 = parse(
        "(y^2*x^4 - 2*y^2*x^2*z + y^2*z^2 + x^2 - 2*x*z + z^2)/(y*x^3 - y*x*z - y*z*x^2 + z^2*y)",
    );
    let f2 = parse(
        "(y^2*x^4 - 2*y^2*x^2*z + y^2*z^2)/(x^2 - 2*x*z + y*x^3 - y*x*z + z^2 - y*z*x^2 + z^2*y)",
    );
    let result = luroth_generator(&[f1, f2]).unwrap();
    let GeneratorStatus::Generator(gen) = &result.status else {
        panic!("no generator found");
    };
    let expected = parse("(x^2*y - z*y)/(x - z)");
    let ok = same_field(gen, &expected);
    let elapsed = start.elapsed();
    report(
        "golden-example-1",
        ok && elapsed < Duration::from_secs(5),
        &format!("generator equivalent both ways, {:.2?} < 5s", elapsed),
    );
}

#[test]
fn golden_example_2_decompose_both_routes() {
    let f = parse(
        "4*z^4*y^2 - 8*z^3*y^3 + 8*z^2*y*x + 4*z^2*y^4 - 8*z*y^2*x + 4*x^2 - 2*z^2*y \
         + 2*z*y^2 - 2*x + 10",
    );
    let expected = Decomposition::new(
        parse_uni("4*t^2 - 2*t + 10"),
        parse("x + z^2*y - z*y^2"),
        f.degree(),
    );
    let t1 = Instant::now();
    let d1 = decompose_nearsep(&f).unwrap().expect("algorithm 3");
    let e1 = t1.elapsed();
    let t2 = Instant::now();
    let d2 = decompose_factor(&f).unwrap().expect("algorithm 4");
    let e2 = t2.elapsed();
    let ok = equivalent(&d1, &expected).unwrap()
        && equivalent(&d2, &expected).unwrap()
        && compose(&d1.g, &d1.h).unwrap() == f
        && compose(&d2.g, &d2.h).unwrap() == f
        && e1 < Duration::from_secs(10)
        && e2 < Duration::from_secs(10);
    report(
        "golden-example-2",
        ok,
        &format!("both routes equivalent to (4t^2-2t+10, x+z^2*y-z*y^2); {e1:.2?} and {e2:.2?} < 10s"),
    );
}

#[test]
fn golden_example_3_nearsep_route() {
    let f = ex3_f();
    let expected = Decomposition::new(
        parse_uni("(625*t^2 - 6561)/(625*t^2 - 13122)"),
        parse("(-9/25*x*z^2 - 9/25*x*y + 9/25*y^5)/(x + 25/9*z*y)"),
        f.degree(),
    );
    assert_eq!(compose(&expected.g, &expected.h).unwrap(), f);
    let start = Instant::now();
    let d = decompose_nearsep(&f).unwrap().expect("algorithm 3");
    let elapsed = start.elapsed();
    let ok = equivalent(&d, &expected).unwrap()
        && compose(&d.g, &d.h).unwrap() == f
        && elapsed < Duration::from_secs(30);
    report(
        "golden-example-3",
        ok,
        &format!("g = (625t^2-6561)/(625t^2-13122) with h = r/s up to equivalence, {elapsed:.2?} < 30s"),
    );
}

#[test]
fn golden_example_5_factor_route_and_class_count() {
    let f = ex3_f();
    let expected = Decomposition::new(
        parse_uni("(t^2 - 1)/(t^2 - 2)"),
        parse("(z^2*x + y*x - y^5)/(9*x + 25*y*z)"),
        f.degree(),
    );
    assert_eq!(compose(&expected.g, &expected.h).unwrap(), f);
    let start = Instant::now();
    let d = decompose_factor(&f).unwrap().expect("algorithm 4");
    let all = decompose_all(&f).unwrap();
    let elapsed = start.elapsed();
    let ok = equivalent(&d, &expected).unwrap()
        && all.len() == 1
        && equivalent(&all[0], &expected).unwrap()
        && elapsed < Duration::from_secs(30);
    report(
        "golden-example-5",
        ok,
        &format!("factor route equivalent, exactly one class, {elapsed:.2?} < 30s"),
    );
}

/// Dense random polynomial, coefficients drawn from [-5, 5].
fn dense_poly(rng: &mut ChaCha8Rng, nvars: usize, deg: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(nvars);
    let mut exps = vec![0u16; nvars];
    fn rec(exps: &mut Vec<u16>, v: usize, left: usize, rng: &mut ChaCha8Rng, p: &mut MultiPoly) {
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

fn exact_degree_ratfunc(rng: &mut ChaCha8Rng, nvars: usize, deg: usize) -> RatFunc {
    loop {
        let num = dense_poly(rng, nvars, deg);
        let dd = rng.gen_range(0..=deg);
        let den = if dd == 0 { MultiPoly::one(nvars) } else { dense_poly(rng, nvars, dd) };
        if den.is_zero() || num.is_zero() {
            continue;
        }
        let Ok(f) = RatFunc::new(num, den) else { continue };
        if !f.is_constant() && f.degree() == deg {
            return f;
        }
    }
}

fn exact_degree_unirat(rng: &mut ChaCha8Rng, deg: usize) -> UniRatFunc {
    loop {
        let num: Vec<Rat> = (0..=deg).map(|_| rat(rng.gen_range(-5i64..=5))).collect();
        let dd = rng.gen_range(0..=deg);
        let den: Vec<Rat> = (0..=dd).map(|_| rat(rng.gen_range(-5i64..=5))).collect();
        let n = UniPoly::from_coeffs(num);
        let d = UniPoly::from_coeffs(den);
        if d.is_zero() {
            continue;
        }
        let Ok(g) = UniRatFunc::new(n, d) else { continue };
        if g.degree() == deg && !g.is_constant() {
            return g;
        }
    }
}

#[test]
fn property_roundtrip_100_instances() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20260810);
    let mut recovered = 0usize;
    let mut agreed = 0usize;
    const N: usize = 100;
    for i in 0..N {
        let n = 2 + (i % 2);
        let dg = 2 + ((i / 2) % 2);
        let dh = 2 + ((i / 4) % 2);
        let g = exact_degree_unirat(&mut rng, dg);
        let h = exact_degree_ratfunc(&mut rng, n, dh);
        let f = compose(&g, &h).unwrap();
        let planted = Decomposition::new(g, h, f.degree());
        let d1 = decompose_nearsep(&f).unwrap();
        let d2 = decompose_factor(&f).unwrap();
        let ok1 = d1
            .as_ref()
            .map(|d| {
                compose(&d.g, &d.h).unwrap() == f && equivalent(d, &planted).unwrap()
            })
            .unwrap_or(false);
        let ok2 = d2
            .as_ref()
            .map(|d| {
                compose(&d.g, &d.h).unwrap() == f && equivalent(d, &planted).unwrap()
            })
            .unwrap_or(false);
        if ok1 && ok2 {
            recovered += 1;
        }
        if d1.is_some() == d2.is_some()
            && d1
                .as_ref()
                .zip(d2.as_ref())
                .map(|(a, b)| equivalent(a, b).unwrap())
                .unwrap_or(true)
        {
            agreed += 1;
        }
    }
    let elapsed = start.elapsed();
    report(
        "property-roundtrip",
        recovered == N && agreed == N && elapsed < Duration::from_secs(900),
        &format!("{recovered}/{N} recovered, {agreed}/{N} cross-validated, {elapsed:.1?} < 15min"),
    );
}

#[test]
fn property_negative_prime_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(31337);
    let primes = [2usize, 3, 5, 7];
    let mut clean = 0usize;
    const N: usize = 50;
    for i in 0..N {
        let n = 2 + (i % 2);
        let deg = primes[i % primes.len()];
        let f = exact_degree_ratfunc(&mut rng, n, deg);
        let d1 = decompose_nearsep(&f).unwrap();
        let d2 = decompose_factor(&f).unwrap();
        // prime degree admits no nontrivial decomposition; whenever a
        // decomposition is returned it must verify by composition
        let ok = match (&d1, &d2) {
            (None, None) => true,
            (a, b) => {
                a.as_ref().map(|d| compose(&d.g, &d.h).unwrap() == f).unwrap_or(true)
                    && b.as_ref().map(|d| compose(&d.g, &d.h).unwrap() == f).unwrap_or(true)
            }
        };
        if ok && d1.is_none() && d2.is_none() {
            clean += 1;
        }
    }
    report(
        "property-negative",
        clean == N,
        &format!("{clean}/{N} prime-degree inputs correctly reported none"),
    );
}

#[test]
fn property_luroth_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(424242);
    let mut generated = 0usize;
    const N: usize = 50;
    for i in 0..N {
        let n = 2 + (i % 2);
        let dw = 1 + (i % 3);
        let w = exact_degree_ratfunc(&mut rng, n, dw);
        let dg1 = 1 + (i % 2);
        let dg2 = 1 + ((i / 2) % 3);
        let g1 = exact_degree_unirat(&mut rng, dg1);
        let g2 = exact_degree_unirat(&mut rng, dg2);
        let f1 = compose(&g1, &w).unwrap();
        let f2 = compose(&g2, &w).unwrap();
        let result = luroth_generator(&[f1.clone(), f2.clone()]).unwrap();
        if let GeneratorStatus::Generator(gen) = &result.status {
            if left_component(&f1, gen).unwrap().is_some()
                && left_component(&f2, gen).unwrap().is_some()
            {
                generated += 1;
            }
        }
    }
    let mut independent = 0usize;
    const M: usize = 20;
    for i in 0..M {
        let n = 2 + (i % 3);
        let a = i % n;
        let b = (a + 1) % n;
        let r = luroth_generator(&[RatFunc::var(a, n), RatFunc::var(b, n)]).unwrap();
        if r.status == GeneratorStatus::NotTranscendenceDegreeOne {
            independent += 1;
        }
    }
    report(
        "property-luroth",
        generated == N && independent == M,
        &format!("{generated}/{N} composed pairs generated with membership, {independent}/{M} independent pairs detected"),
    );
}

#[test]
fn invariant_suites_on_seeded_corpora() {
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    // degree multiplicativity and Corollary-1 coprimality
    let mut deg_ok = true;
    for _ in 0..20 {
        let (dg, dh, n) = (rng.gen_range(1..=4), rng.gen_range(1..=4), rng.gen_range(1..=3));
        let g = exact_degree_unirat(&mut rng, dg);
        let h = exact_degree_ratfunc(&mut rng, n, dh);
        let f = compose(&g, &h).unwrap(); // internally checks coprimality
        deg_ok &= f.degree() == dg * dh;
    }
    // Theorem-3 divisibility
    let mut div_ok = true;
    for _ in 0..10 {
        let h = exact_degree_ratfunc(&mut rng, 2, 2);
        let g = exact_degree_unirat(&mut rng, 2);
        let f = compose(&g, &h).unwrap();
        let hp = near_sep_poly(&h).unwrap();
        let fp = near_sep_poly(&f).unwrap();
        div_ok &= fp.exact_div(&hp).is_some();
    }
    // Lemma-1 postconditions
    let mut norm_ok = true;
    for _ in 0..10 {
        let (n, df) = (rng.gen_range(1..=3), rng.gen_range(1..=4));
        let f = exact_degree_ratfunc(&mut rng, n, df);
        let ord = MOrder::graded_lex(n);
        let (fbar, _) = normalize_for_factoring(&f, &ord).unwrap();
        let origin = vec![Rat::zero(); n];
        let (lmn, _) = fbar.num().leading_monomial(&ord).unwrap();
        let (lmd, _) = fbar.den().leading_monomial(&ord).unwrap();
        norm_ok &= ord.cmp(&lmn, &lmd) == std::cmp::Ordering::Greater;
        norm_ok &= num_traits::Zero::is_zero(&fbar.num().evaluate(&origin));
        norm_ok &= !num_traits::Zero::is_zero(&fbar.den().evaluate(&origin));
    }
    // nullspace exactness
    let mut null_ok = true;
    for _ in 0..15 {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=5);
        let mut m = QMatrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, rat(rng.gen_range(-4i64..=4)));
            }
        }
        for v in m.nullspace() {
            null_ok &= m
                .mul_vec(&v)
                .unwrap()
                .iter()
                .all(num_traits::Zero::is_zero);
        }
    }
    report(
        "invariant-suites",
        deg_ok && div_ok && norm_ok && null_ok,
        &format!(
            "degree multiplicativity {deg_ok}, divisibility {div_ok}, normalization {norm_ok}, nullspace {null_ok}"
        ),
    );
}

#[test]
fn bench_grid_report_shape() {
    let start = Instant::now();
    let params = BenchParams {
        seed: 1,
        n_list: vec![2, 4],
        d_list: vec![8, 10],
        reps: 1,
        max_seconds: 60.0,
    };
    let rows = run_bench(&params);
    let elapsed = start.elapsed();
    let shape_ok = !rows.is_empty()
        && rows.iter().all(|r| {
            r.factor_ms <= r.total_ms + 1e-9
                && (0.0..=1.0).contains(&r.factor_fraction)
                && (r.algorithm == "nearsep" || r.algorithm == "factor")
        });
    let json = serde_json::to_value(&rows).unwrap();
    let keys_ok = json.as_array().unwrap().iter().all(|row| {
        let o = row.as_object().unwrap();
        ["n", "degree", "algorithm", "total_ms", "factor_ms", "factor_fraction", "success"]
            .iter()
            .all(|k| o.contains_key(*k))
    });
    let success_ok = rows.iter().all(|r| r.success);
    report(
        "bench-grid",
        shape_ok && keys_ok && success_ok && elapsed < Duration::from_secs(600),
        &format!(
            "{} rows, schema stable, all successful, {elapsed:.1?} (absolute times reported, not asserted)",
            rows.len()
        ),
    );
}
