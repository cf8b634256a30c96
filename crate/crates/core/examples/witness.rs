//! Two-expansion witnesses at V-bases and sequences built from representation vectors.

use univoque::b2core::{udiff_generate, v_base_witness};
use univoque::bases::count_expansions;
use univoque::enumerate::ReprVector;
use univoque::{ComponentSpec, Word};

fn main() -> univoque::Result<()> {
    for gen in ["10", "110", "1110"] {
        let w = v_base_witness(&gen.parse()?)?;
        let x = w.root.eval(&w.c.prepend(&"1".parse::<Word>()?));
        let count = count_expansions(&x, &w.root, 3, 64)?;
        println!("gen {gen}: q = {} c = {} d = {} residual zero {} count {count:?}", w.root.approx(10), w.c, w.d, w.residual().is_zero());
    }
    let comp = ComponentSpec::first();
    let v = ReprVector::new(vec![0, 1], vec![1], vec![1, 1])?;
    println!("{v} -> {}", udiff_generate(&comp, &"0".parse()?, &v)?);
    Ok(())
}
