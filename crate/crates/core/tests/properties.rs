mod common;

use common::props;

#[test]
fn f_symmetric_monotone_and_nonnegative_at_two() {
    props::f_pairs(200).unwrap();
}

#[test]
fn roots_decrease_as_c_increases() {
    let chains = props::root_chains().unwrap();
    assert!(chains >= 50, "only {chains} chains");
}

#[test]
fn omega_prefix_suffix_inequalities() {
    assert!(props::omega_inequalities().unwrap() >= 9);
}

#[test]
fn ladder_words_forbidden_below_next_rung() {
    assert!(props::forbidden_words().unwrap() > 4);
}

#[test]
fn univoque_membership_reflection_invariant() {
    props::reflection_invariance(500).unwrap();
}
