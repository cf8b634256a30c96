//! q_s and q_f as roots of f_{c,d}, with the case analysis and admissibility check.

use num_rational::BigRational;
use univoque::b2core::{certify_b2, f_minpoly, monotone_case, qf_poly, qs_poly};
use univoque::EPSeq;

fn r(s: &str) -> BigRational {
    s.parse().unwrap()
}

fn main() -> univoque::Result<()> {
    for (c, d, lo, hi) in [("00(10)", "0000(10)", "17/10", "9/5"), ("00(10)", "00000(10)", "7/4", "9/5"), ("0*", "0*", "19/10", "2")] {
        let (c, d): (EPSeq, EPSeq) = (c.parse()?, d.parse()?);
        println!("c = {c}, d = {d}: {:?}, reduced numerator {}", monotone_case(&c, &d), f_minpoly(&c, &d));
        match certify_b2(&c, &d, &r(lo), &r(hi))? {
            Some(w) => println!("  root {} minpoly {} admissible {}", w.root.approx(12), w.root.minpoly(), w.admissible),
            None => println!("  no root"),
        }
    }
    println!("q_s minimal polynomial {}", qs_poly());
    println!("q_f minimal polynomial {}", qf_poly());
    Ok(())
}
