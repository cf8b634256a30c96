//! Greedy and quasi-greedy expansions of 1, and the base recovered from an expansion.

use univoque::bases::{alpha_digits, alpha_sequence, base_from_alpha, beta_digits, parry_check};
use univoque::{AlgBase, EPSeq, IntPoly};

fn main() -> univoque::Result<()> {
    let phi = AlgBase::from_poly_checked(&IntPoly::from_i64(&[-1, -1, 1]), &"3/2".parse().unwrap(), &"2".parse().unwrap())?;
    println!("golden ratio {}", phi.approx(12));
    println!("  alpha digits  {}", alpha_digits(&phi, 10));
    let (beta, finite) = beta_digits(&phi, 10);
    println!("  beta digits   {beta} (finite: {finite})");
    println!("  alpha         {}", alpha_sequence(&phi, 100)?);

    for s in ["(1100)", "(110)", "(1110)", "11(10)", "1*"] {
        let a: EPSeq = s.parse()?;
        let q = base_from_alpha(&a)?;
        println!("alpha = {a:<10} q = {}  minpoly {}", q.approx(10), q.minpoly());
    }

    // (1101)^∞ has a shift larger than itself after a 0
    let bad: EPSeq = "(1101)".parse()?;
    println!("{bad} quasi-greedy: {}", parry_check(&bad)?);
    Ok(())
}
