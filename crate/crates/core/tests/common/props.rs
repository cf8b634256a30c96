//! Exact invariants of `f_{c,d}`, the ladder words and `U'_q`, shared by the property
//! tests and the acceptance report.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;
use proptest::sample::Index;
use proptest::test_runner::{Config, TestRunner};
use univoque::b2core::{f_eval, f_eval_rational, solve_qcd};
use univoque::bases::base_from_alpha;
use univoque::classify::{in_a_prime, is_univoque_seq};
use univoque::enumerate::{enum_reprs, ladder_entry, repr_to_seq};
use univoque::{omega, AlgBase, ComponentSpec, EPSeq, Word};

type Check = Result<usize, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

/// `q_{n+1}` of the first component with the enumerated sequences of interval `n`,
/// each checked to lie in `A'_{q_{n+1}}`.
pub struct Pool {
    pub q: AlgBase,
    pub seqs: Vec<EPSeq>,
}

fn build_pool(n: usize, jmax: usize) -> Pool {
    let q = ladder_entry(&ComponentSpec::first(), n + 1).unwrap().base;
    let mut seqs: Vec<EPSeq> = enum_reprs(n, jmax)
        .iter()
        .map(|v| repr_to_seq(v, &ComponentSpec::first(), &Word::empty()).unwrap())
        .collect();
    seqs.sort();
    seqs.dedup();
    for s in &seqs {
        assert!(in_a_prime(s, &q).unwrap(), "{s} not admissible at q_{}", n + 1);
    }
    Pool { q, seqs }
}

pub fn pools() -> &'static [Pool] {
    static POOLS: OnceLock<Vec<Pool>> = OnceLock::new();
    POOLS.get_or_init(|| vec![build_pool(1, 10), build_pool(2, 4), build_pool(3, 2)])
}

/// Symmetry, strict monotonicity in each argument and `f(2) ≥ 0` on random pairs
/// from `A'_q`.
pub fn f_pairs(cases: u32) -> Check {
    let strat = (0usize..3, any::<Index>(), any::<Index>(), any::<Index>());
    runner(cases)
        .run(&strat, |(p, i, j, k)| {
            let pool = &pools()[p];
            let s = &pool.seqs;
            let (c, d, ct) = (&s[i.index(s.len())], &s[j.index(s.len())], &s[k.index(s.len())]);
            let q = &pool.q;
            let fcd = f_eval(c, d, q);
            prop_assert!(fcd == f_eval(d, c, q), "asymmetric at {} {}", c, d);
            let expect = ct.cmp(c);
            prop_assert_eq!(f_eval(ct, d, q).cmp_elem(&fcd), expect);
            prop_assert_eq!(f_eval(d, ct, q).cmp_elem(&f_eval(d, c, q)), expect);
            prop_assert!(f_eval(c, d, &AlgBase::two()).sign() != Sign::Minus);
            Ok(())
        })
        .map(|_| cases as usize)
        .map_err(|e| e.to_string())
}

/// The root of `f_{c,d}` in `[q, 2]` when `(c, d)` lies in `Ω'_q`.
fn omega_root(c: &EPSeq, d: &EPSeq, q: &AlgBase) -> Option<AlgBase> {
    match f_eval(c, d, q).sign() {
        Sign::Plus => None,
        Sign::NoSign => Some(q.clone()),
        Sign::Minus => {
            let lo = q.interval_bits(128).1;
            assert!(f_eval_rational(c, d, &lo).unwrap().is_negative());
            let two = BigRational::from_integer(BigInt::from(2));
            Some(solve_qcd(c, d, &lo, &two).unwrap().expect("root in [q, 2]"))
        }
    }
}

/// For `c̃ > c` with both pairs in `Ω'_q`, `q_{c̃,d} < q_{c,d}`. Returns the number
/// of chains checked.
pub fn root_chains() -> Check {
    let mut chains = 0;
    for pool in pools().iter().take(2) {
        let s = &pool.seqs;
        for d in s {
            let roots: Vec<(&EPSeq, AlgBase)> =
                s.iter().filter_map(|c| omega_root(c, d, &pool.q).map(|r| (c, r))).collect();
            for (c, rc) in &roots {
                for (ct, rt) in &roots {
                    if ct > c {
                        ensure(rt < rc, || format!("c={c} c~={ct} d={d}"))?;
                        chains += 1;
                    }
                }
            }
        }
    }
    Ok(chains)
}

/// `reflect(θ₁…θ_{L-i}) < θ_{i+1}…θ_L ≤ θ₁…θ_{L-i}` for `ω_n = θ₁…θ_L`, `0 < i < L`,
/// over several components and `n ≤ 8`.
pub fn omega_inequalities() -> Check {
    let mut words = 0;
    for g in ["0", "10", "110", "1110", "11010"] {
        let Ok(comp) = ComponentSpec::new(g.parse().unwrap()) else { continue };
        for n in 0..=8 {
            let w = omega(&comp, n);
            let t = w.digits();
            let l = t.len();
            for i in 1..l {
                let (head, tail) = (&t[..l - i], &t[i..]);
                let refl: Vec<u8> = head.iter().map(|b| 1 - b).collect();
                ensure(refl.as_slice() < tail && tail <= head, || format!("ω_{n} = {w}, i = {i}"))?;
            }
            words += 1;
        }
    }
    Ok(words)
}

/// No enumerated sequence of interval `n ≤ 4` contains `ω_n`, nor its reflection
/// after the first digit 1. Returns the number of sequences scanned.
pub fn forbidden_words() -> Check {
    let comp = ComponentSpec::first();
    let mut scanned = 0;
    for n in 1..=4 {
        let om = omega(&comp, n);
        let om_r = om.reflect();
        let jmax = [0, 12, 6, 3, 2][n];
        for v in enum_reprs(n, jmax) {
            let s = repr_to_seq(&v, &comp, &Word::empty()).unwrap();
            let w = s.prefix(s.pre().len() + 2 * s.per().len() + om.len());
            ensure(!w.contains_factor(&om), || format!("ω_{n} in {s}"))?;
            // an occurrence of the reflection needs a preceding 1
            if let Some(p) = w.digits().iter().position(|&b| b == 1) {
                ensure(!w.slice(p, w.len()).contains_factor(&om_r), || format!("reflected ω_{n} in {s}"))?;
            }
            scanned += 1;
        }
    }
    Ok(scanned)
}

fn reflection_bases() -> &'static [AlgBase] {
    static B: OnceLock<Vec<AlgBase>> = OnceLock::new();
    B.get_or_init(|| {
        let mut v: Vec<AlgBase> = ["(10)", "(1100)", "(110)", "(1110)", "(11010010)", "(11100)"]
            .iter()
            .map(|a| base_from_alpha(&a.parse().unwrap()).unwrap())
            .collect();
        v.push(AlgBase::two());
        v
    })
}

/// `s ∈ U'_q` iff `reflect(s) ∈ U'_q` on random eventually periodic sequences.
pub fn reflection_invariance(cases: u32) -> Check {
    let strat = (
        prop::collection::vec(0u8..2, 0..=6),
        prop::collection::vec(0u8..2, 1..=6),
        any::<Index>(),
    );
    runner(cases)
        .run(&strat, |(pre, per, b)| {
            let s = EPSeq::new(Word::new(pre).unwrap(), Word::new(per).unwrap()).unwrap();
            let bases = reflection_bases();
            let q = &bases[b.index(bases.len())];
            prop_assert_eq!(is_univoque_seq(&s, q).unwrap(), is_univoque_seq(&s.reflect(), q).unwrap());
            Ok(())
        })
        .map(|_| cases as usize)
        .map_err(|e| e.to_string())
}
