//! Path counts of the entropy automaton against direct enumeration of the words that
//! begin some sequence of `U'_q`.

mod common;

use common::oracle::counts_match;
use univoque::dimension::entropy_of_alpha;

fn check(alpha: &str, nmax: usize) {
    assert!(counts_match(alpha, nmax), "α = {alpha}");
}

#[test]
fn base_two() {
    check("1*", 14);
}

#[test]
fn golden_ratio() {
    check("(10)", 14);
}

#[test]
fn q_f() {
    check("(1100)", 14);
}

#[test]
fn tribonacci() {
    check("(110)", 14);
}

#[test]
fn period_1110() {
    check("(1110)", 14);
}

#[test]
fn ladder_q3_and_preperiodic() {
    check("(11010010)", 14);
    check("11(10)", 12);
    check("(110100110010)", 12);
}

#[test]
fn counts_dominate_entropy() {
    let (_, h) = entropy_of_alpha(&"(1110)".parse().unwrap(), 32).unwrap();
    let (lo, _) = h.log_bounds();
    let fb = h.finite_bounds();
    for k in 0..5 {
        let (a, b) = (fb[(1 << k) - 1], fb[(1 << (k + 1)) - 1]);
        assert!(a >= lo && b >= lo && b <= a + 1e-12);
    }
}
