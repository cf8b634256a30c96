//! Smallest bases found with a given derived order, bracketed by the ladder.

use std::time::Instant;

use univoque::enumerate::{ladder_entry, min_derived};
use univoque::ComponentSpec;

fn main() -> univoque::Result<()> {
    let comp = ComponentSpec::first();
    for j in 0..=4 {
        let t = Instant::now();
        let w = min_derived(j, 6, 5)?;
        println!("j = {j}: {} order {:?} c = {} d = {} ({:?})", w.root.approx(10), w.derived_order, w.c, w.d, t.elapsed());
    }
    let (q3, q5) = (ladder_entry(&comp, 3)?, ladder_entry(&comp, 5)?);
    println!("bracket for j = 4: [{}, {})", q3.base.approx(8), q5.base.approx(8));
    Ok(())
}
