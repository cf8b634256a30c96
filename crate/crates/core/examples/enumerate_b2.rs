//! B₂ inside the first two ladder intervals, from pairs of representation vectors.

use std::time::Instant;

use univoque::enumerate::{enum_b2, enum_reprs, repr_to_seq};
use univoque::{ComponentSpec, Word};

fn main() -> univoque::Result<()> {
    let comp = ComponentSpec::first();
    for v in enum_reprs(2, 1).iter().take(6) {
        println!("vector {v:<20} sequence {}", repr_to_seq(v, &comp, &Word::empty())?);
    }
    for (n, jmax) in [(1, 6), (2, 4)] {
        let t = Instant::now();
        let ws = enum_b2(n, jmax)?;
        println!("n = {n}, jmax = {jmax}: {} bases in {:?}", ws.len(), t.elapsed());
        for w in ws.iter().take(5) {
            println!("  {} order {:?} c = {} d = {} ({} representations)", w.root.approx(8), w.derived_order, w.c, w.d, w.representations.len());
        }
    }
    Ok(())
}
