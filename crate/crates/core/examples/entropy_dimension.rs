//! Entropy of U'_q from its automaton and the dimension of U_q.

use univoque::bases::base_from_alpha;
use univoque::dimension::{dim_from_entropy, entropy};
use univoque::enumerate::ladder_entry;
use univoque::{AlgBase, ComponentSpec, EPSeq};

fn main() -> univoque::Result<()> {
    let mut bases = vec![("2".to_string(), AlgBase::two())];
    for n in [3, 4] {
        bases.push((format!("q_{n}"), ladder_entry(&ComponentSpec::first(), n)?.base));
    }
    for s in ["(110)", "(1110)", "(110100110010)"] {
        bases.push((format!("alpha {s}"), base_from_alpha(&s.parse::<EPSeq>()?)?));
    }
    for (name, q) in bases {
        let h = entropy(&q, 12)?;
        let d = dim_from_entropy(&q, &h);
        let counts: Vec<String> = h.counts.iter().take(10).map(|c| c.to_string()).collect();
        println!("{name:<22} states {:<4} log λ ∈ {:?} dim ∈ [{:.6}, {:.6}]{}", h.states, h.log_bounds(), d.lo, d.hi, if d.exact { " exact" } else { "" });
        println!("{:<22} #L_n = {}", "", counts.join(" "));
    }
    Ok(())
}
