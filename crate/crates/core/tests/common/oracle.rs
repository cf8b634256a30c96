// Direct enumeration of the words that begin some sequence of `U'_q`, used to check
// the entropy automaton.

use univoque::classify::follower_condition;
use univoque::dimension::UqAutomaton;
use univoque::{EPSeq, Word};

fn words(len: usize) -> Vec<Vec<u8>> {
    (0..1u32 << len).map(|m| (0..len).map(|i| ((m >> i) & 1) as u8).collect()).collect()
}

/// Periodic tails tried after a word: short words and rotations of the period of `α`
/// and of its reflection.
fn tails(alpha: &EPSeq) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = (1..=8).flat_map(words).collect();
    for p in [alpha.per().clone(), alpha.per().reflect()] {
        let d = p.digits();
        for r in 0..d.len() {
            out.push(d[r..].iter().chain(&d[..r]).copied().collect());
        }
    }
    out
}

/// Finite necessary conditions on a prefix alone.
fn weakly_ok(w: &[u8], alpha: &EPSeq) -> bool {
    weakly_ok_upto(w, alpha, w.len())
}

/// The weak conditions at positions `< upto`, comparing what is available of `w`.
fn weakly_ok_upto(w: &[u8], alpha: &EPSeq, upto: usize) -> bool {
    let a: Vec<u8> = (0..w.len()).map(|i| alpha.digit(i)).collect();
    (0..upto).all(|i| {
        let rest = &w[i + 1..];
        let head = &a[..rest.len()];
        if w[i] == 0 {
            rest <= head
        } else {
            let r: Vec<u8> = rest.iter().map(|x| 1 - x).collect();
            r.as_slice() <= head
        }
    })
}

fn extendable(w: &[u8], alpha: &EPSeq, tails: &[Vec<u8>]) -> bool {
    if !weakly_ok(w, alpha) {
        return false;
    }
    for ulen in 0..=3 {
        for u in words(ulen) {
            let pre: Vec<u8> = w.iter().chain(&u).copied().collect();
            for v in tails {
                let long: Vec<u8> = pre.iter().chain(v.iter().cycle().take(64)).copied().collect();
                if !weakly_ok_upto(&long, alpha, pre.len() + 32) {
                    continue;
                }
                let s = EPSeq::new(Word::new(pre.clone()).unwrap(), Word::new(v.clone()).unwrap()).unwrap();
                if follower_condition(&s, alpha, true) {
                    return true;
                }
            }
        }
    }
    false
}

fn brute_counts(alpha: &EPSeq, nmax: usize) -> Vec<u64> {
    let tails = tails(alpha);
    let mut level: Vec<Vec<u8>> = vec![Vec::new()];
    let mut out = vec![1];
    for _ in 0..nmax {
        let mut next = Vec::new();
        for w in &level {
            for b in 0..2u8 {
                let mut x = w.clone();
                x.push(b);
                if extendable(&x, alpha, &tails) {
                    next.push(x);
                }
            }
        }
        out.push(next.len() as u64);
        level = next;
    }
    out
}

/// True if automaton path counts equal direct word counts up to `nmax`.
pub fn counts_match(alpha: &str, nmax: usize) -> bool {
    let a: EPSeq = alpha.parse().unwrap();
    let aut = UqAutomaton::from_alpha(&a).unwrap();
    let got: Vec<u64> = aut.path_counts(nmax).iter().map(|c| c.try_into().unwrap()).collect();
    got == brute_counts(&a, nmax)
}
