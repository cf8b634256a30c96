//! One pass/fail line per acceptance criterion, with wall-clock limits.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use univoque::b2core::{f_eval, prop62_pair, qf_poly, qs_poly};
use univoque::bases::{alpha_digits, count_expansions, Count};
use univoque::dimension::{dim_u, kl_upper_approximant, local_bound_below_one};
use univoque::enumerate::{enum_b2, ladder_entry, min_derived, qn_ladder};
use univoque::{omega, thue_morse, AlgBase, ComponentSpec, EPSeq, IntPoly};

use common::{oracle, props};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn check(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn base(p: IntPoly) -> AlgBase {
    AlgBase::from_poly_checked(&p, &"1".parse().unwrap(), &"2".parse().unwrap()).unwrap()
}

fn coeffs(q: &AlgBase) -> Vec<i64> {
    q.minpoly().coeffs().iter().map(|c| c.try_into().unwrap()).collect()
}

fn near(q: &AlgBase, x: f64, tol: f64) -> bool {
    (q.to_f64() - x).abs() < tol
}

fn smallest_element() -> Outcome {
    let w = enum_b2(1, 6).map_err(err)?;
    let first = w.first().ok_or("no witnesses")?;
    check(coeffs(&first.root) == [-1, -1, -2, 0, 1], format!("minpoly {}", first.root.minpoly()))?;
    check(near(&first.root, 1.71064, 1e-5), first.root.approx(10))?;
    check(first.admissible && first.residual().is_zero(), "witness not certified")?;
    check(first.root == base(qs_poly()), "root differs from q_s")?;
    Ok(format!("q_s = {}", first.root.approx(8)))
}

fn second_element() -> Outcome {
    let w = enum_b2(1, 6).map_err(err)?;
    let second = w.get(1).ok_or("fewer than two witnesses")?;
    check(coeffs(&second.root) == [-1, 1, -2, 1], format!("minpoly {}", second.root.minpoly()))?;
    check(near(&second.root, 1.75488, 1e-5), second.root.approx(10))?;
    check(second.admissible && second.residual().is_zero(), "witness not certified")?;
    Ok(format!("q_f = {}", second.root.approx(8)))
}

fn ladder_values() -> Outcome {
    let comp = ComponentSpec::first();
    let ladder = qn_ladder(&comp, 4).map_err(err)?;
    for (e, x) in ladder.iter().zip([1.61803, 1.75488, 1.78460, 1.78721]) {
        check(near(&e.base, x, 1e-5), format!("q_{} = {}", e.n, e.base.approx(10)))?;
    }
    let q8 = ladder_entry(&comp, 8).map_err(err)?.base;
    check(near(&q8, 1.78723, 1e-4), format!("q_8 = {}", q8.approx(10)))?;
    Ok(format!("q_4 = {}, q_8 = {}", ladder[3].base.approx(8), q8.approx(8)))
}

fn thue_morse_identity() -> Outcome {
    let w = omega(&ComponentSpec::first(), 4);
    check(w == thue_morse(16) && w.to_string() == "1101001100101101", w.to_string())?;
    Ok(w.to_string())
}

fn quasi_greedy_constants() -> Outcome {
    let phi = base(IntPoly::new(vec![(-1).into(), (-1).into(), 1.into()]));
    let a = alpha_digits(&phi, 10).to_string();
    let b = alpha_digits(&base(qf_poly()), 12).to_string();
    check(a == "1010101010" && b == "110011001100", format!("{a} {b}"))?;
    Ok(format!("{a}, {b}"))
}

fn two_expansions() -> Outcome {
    let w = enum_b2(1, 6).map_err(err)?;
    let qs = &w[0].root;
    let c: EPSeq = "00(10)".parse().map_err(err)?;
    check(w[0].c == c || w[0].d == c, format!("witness {} {}", w[0].c, w[0].d))?;
    let x = qs.eval(&c.prepend(&"1".parse().map_err(err)?));
    let n = count_expansions(&x, qs, 3, 64).map_err(err)?;
    check(n == Count::Exact(2), format!("{n:?}"))?;
    Ok("Exact(2)".into())
}

fn sign_change() -> Outcome {
    let comp = ComponentSpec::first();
    for n in 2..=4 {
        let (c, d) = prop62_pair(&comp, n).map_err(err)?;
        let lo = ladder_entry(&comp, n).map_err(err)?.base;
        let hi = ladder_entry(&comp, n + 1).map_err(err)?.base;
        let (a, b) = (f_eval(&c, &d, &lo).sign(), f_eval(&c, &d, &hi).sign());
        check(
            a == num_bigint::Sign::Minus && b == num_bigint::Sign::Plus,
            format!("n = {n}: {a:?} {b:?}"),
        )?;
    }
    Ok("n = 2, 3, 4".into())
}

fn derived_orders() -> Outcome {
    let comp = ComponentSpec::first();
    let j2 = min_derived(2, 6, 5).map_err(err)?;
    check(j2.root == base(qf_poly()), format!("j = 2 gives {}", j2.root.approx(10)))?;
    let j4 = min_derived(4, 6, 5).map_err(err)?;
    let q3 = ladder_entry(&comp, 3).map_err(err)?.base;
    let q5 = ladder_entry(&comp, 5).map_err(err)?.base;
    check(q3 <= j4.root && j4.root < q5, format!("j = 4 gives {}", j4.root.approx(10)))?;
    Ok(format!("j = 2: q_f, j = 4: {}", j4.root.approx(8)))
}

fn dimension_endpoints() -> Outcome {
    let comp = ComponentSpec::first();
    let d2 = dim_u(&AlgBase::two()).map_err(err)?;
    check(d2.exact && d2.lo == 1.0 && d2.hi == 1.0, format!("dim at 2: {d2:?}"))?;
    for n in [3, 4] {
        let d = dim_u(&ladder_entry(&comp, n).map_err(err)?.base).map_err(err)?;
        check(d.exact && d.lo == 0.0 && d.hi == 0.0, format!("dim at q_{n}: {d:?}"))?;
    }
    let bases = ["1*", "(10)", "(1100)", "(110)", "(1110)", "(11010010)"];
    for a in bases {
        check(oracle::counts_match(a, 14), format!("path counts differ at α = {a}"))?;
    }
    Ok(format!("counts agree at {} bases", bases.len()))
}

fn local_bound() -> Outcome {
    let q = kl_upper_approximant(4).map_err(err)?;
    let b = local_bound_below_one(&q, 30).map_err(err)?;
    check(b.bound[1] < 1.0, format!("bound {}", b.bound[1]))?;
    Ok(format!("q = {}, δ = {}, bound ≤ {:.4}", q.approx(8), b.delta, b.bound[1]))
}

fn property_suites() -> Outcome {
    let pairs = props::f_pairs(200)?;
    let chains = props::root_chains()?;
    check(chains >= 50, format!("only {chains} chains"))?;
    let words = props::omega_inequalities()?;
    let scanned = props::forbidden_words()?;
    let refl = props::reflection_invariance(500)?;
    Ok(format!("{pairs} pairs, {chains} chains, {words} words, {scanned} sequences, {refl} reflections"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("smallest element of B2", 10, smallest_element),
        ("second element of B2", 10, second_element),
        ("ladder values", 5, ladder_values),
        ("Thue-Morse identity", 1, thue_morse_identity),
        ("quasi-greedy constants", 1, quasi_greedy_constants),
        ("two expansions at q_s", 5, two_expansions),
        ("sign change across the ladder", 10, sign_change),
        ("derived-order bracket", 120, derived_orders),
        ("dimension endpoints and path counts", 60, dimension_endpoints),
        ("local bound below 1", 120, local_bound),
        ("property suites", 300, property_suites),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let line = match outcome {
            Ok(_) if took > Duration::from_secs(*limit) => Err(format!("over the {limit} s limit")),
            o => o,
        };
        match line {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} ({:.2?})", i + 1, took),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {e} ({:.2?})", i + 1, took);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
