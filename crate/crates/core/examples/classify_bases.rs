//! Sort bases into U, Ubar\U, V\Ubar and the rest by comparing the shifts of α(q).

use univoque::bases::base_from_alpha;
use univoque::classify::{classify_alpha, classify_base, is_univoque_seq};
use univoque::{AlgBase, EPSeq};

fn main() -> univoque::Result<()> {
    for s in ["(10)", "(1100)", "(110)", "(1110)", "11(10)", "1(100)"] {
        let a: EPSeq = s.parse()?;
        let c = classify_alpha(&a);
        println!("{a:<8} {:<8} lower tie {:?} upper tie {:?} violation {:?}", c.tag.label(), c.lower_tie, c.upper_tie, c.violation);
    }
    println!("q = 2: {}", classify_base(&AlgBase::two())?.tag.label());

    // 00(10)^∞ has exactly one expansion at q_f but not at φ
    let qf = base_from_alpha(&"(1100)".parse()?)?;
    let phi = base_from_alpha(&"(10)".parse()?)?;
    let s: EPSeq = "00(10)".parse()?;
    println!("{s} unique at q_f: {}, at phi: {}", is_univoque_seq(&s, &qf)?, is_univoque_seq(&s, &phi)?);
    Ok(())
}
