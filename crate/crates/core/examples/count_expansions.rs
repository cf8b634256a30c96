//! Count the expansions of a point exactly by walking the remainder graph.

use univoque::bases::{base_from_alpha, count_expansions};
use univoque::b2core::qs_poly;
use univoque::{AlgBase, EPSeq};

fn main() -> univoque::Result<()> {
    let qs = AlgBase::from_poly_checked(&qs_poly(), &"17/10".parse().unwrap(), &"9/5".parse().unwrap())?;
    // x = (1·00(10)^∞)_q has exactly two expansions at q_s
    let x = qs.eval(&"100(10)".parse::<EPSeq>()?);
    println!("q_s = {}: {:?}", qs.approx(10), count_expansions(&x, &qs, 3, 64)?);

    let phi = base_from_alpha(&"(10)".parse()?)?;
    let one = phi.from_int(1);
    println!("1 in base phi: {:?}", count_expansions(&one, &phi, 5, 40)?);
    let half = phi.from_rational(&"1/2".parse().unwrap());
    println!("1/2 in base phi: {:?}", count_expansions(&half, &phi, 5, 40)?);
    Ok(())
}
