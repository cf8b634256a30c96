//! The explicit pair whose f changes sign across (q_n, q_{n+1}).

use univoque::b2core::{f_eval, prop62_pair, solve_qcd};
use univoque::enumerate::ladder_entry;
use univoque::ComponentSpec;

fn main() -> univoque::Result<()> {
    let comp = ComponentSpec::first();
    for n in 2..=5 {
        let (c, d) = prop62_pair(&comp, n)?;
        let (lo, hi) = (ladder_entry(&comp, n)?.base, ladder_entry(&comp, n + 1)?.base);
        let (a, b) = (f_eval(&c, &d, &lo).sign(), f_eval(&c, &d, &hi).sign());
        let root = solve_qcd(&c, &d, &lo.interval().0, &hi.interval().1)?;
        println!("n = {n}: f(q_n) {a:?}, f(q_n+1) {b:?}, root {}", root.map(|r| r.approx(10)).unwrap_or_default());
    }
    match prop62_pair(&comp, 1) {
        Err(e) => println!("n = 1: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
