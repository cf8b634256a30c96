//! A certified bound below 1 for the dimension of B₂ around q_KL.

use num_rational::BigRational;
use univoque::dimension::{b2_local_bound, kl_upper_approximant, local_bound_below_one};

fn main() -> univoque::Result<()> {
    let q = kl_upper_approximant(4)?;
    println!("q = {} with alpha {}", q.approx(10), q.alpha_hint().expect("built from alpha"));
    for k in [5, 6, 7] {
        let delta = BigRational::new(1.into(), (1u64 << k).into());
        let b = b2_local_bound(&q, &delta)?;
        println!("δ = {}: α(q+δ) ≤ {}  bound {:.6}", b.delta, b.alpha_upper, b.bound[1]);
    }
    let b = local_bound_below_one(&q, 30)?;
    println!("first δ = 2^-k below 1: δ = {}, bound {:.6}", b.delta, b.bound[1]);
    Ok(())
}
