//! The words ω_n, their Thue–Morse limit, and the ladder q_n increasing to q_KL.

use std::time::Instant;

use univoque::enumerate::qn_ladder;
use univoque::{omega, thue_morse, ComponentSpec};

fn main() -> univoque::Result<()> {
    let comp = ComponentSpec::first();
    for n in 0..=4 {
        println!("omega_{n} = {}", omega(&comp, n));
    }
    println!("thue_morse(16) = {}", thue_morse(16));

    let t = Instant::now();
    for e in qn_ladder(&comp, 8)? {
        println!("q_{} = {}  degree {:<3} alpha = {}", e.n, e.base.approx(10), e.base.degree(), if e.n <= 4 { e.alpha.to_string() } else { "…".into() });
    }
    println!("ladder to n = 8 in {:?}", t.elapsed());

    // the component above the tribonacci number
    let comp = ComponentSpec::new("110".parse()?)?;
    for e in qn_ladder(&comp, 3)? {
        println!("gen 110: q_{} = {}  alpha = {}", e.n, e.base.approx(10), e.alpha);
    }
    Ok(())
}
