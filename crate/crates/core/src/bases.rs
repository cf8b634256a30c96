//! Greedy and quasi-greedy expansions of 1, Parry admissibility, the inverse
//! map from quasi-greedy sequences to bases, and an exact expansion counter.

use std::collections::{HashMap, VecDeque};

use num_bigint::Sign;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::algebraic::{AlgBase, FieldElem};
use crate::error::{domain, Error, Result};
use crate::words::{EPSeq, Word};

/// First `n` digits of the quasi-greedy expansion `α(q)` of 1.
pub fn alpha_digits(q: &AlgBase, n: usize) -> Word {
    if let Some(a) = q.alpha_hint() {
        return a.prefix(n);
    }
    let mut r = q.from_int(1);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let t = r.mul_gen();
        let t1 = t.add_int(-1);
        if t1.sign() == Sign::Plus {
            out.push(1);
            r = t1;
        } else {
            out.push(0);
            r = t;
        }
    }
    Word::from_vec(out)
}

/// First `n` digits of the greedy expansion `β(q)` of 1, and whether the
/// remainder reached 0 within those digits.
pub fn beta_digits(q: &AlgBase, n: usize) -> (Word, bool) {
    let mut r = q.from_int(1);
    let mut out = Vec::with_capacity(n);
    let mut finite = false;
    for _ in 0..n {
        if r.is_zero() {
            finite = true;
            out.push(0);
            continue;
        }
        let t = r.mul_gen();
        let t1 = t.add_int(-1);
        if t1.sign() != Sign::Minus {
            out.push(1);
            r = t1;
        } else {
            out.push(0);
            r = t;
        }
    }
    (Word::from_vec(out), finite || r.is_zero())
}

/// `α(q)` as an eventually periodic sequence, detected by a repeated exact remainder
/// within `max_steps` digits.
pub fn alpha_sequence(q: &AlgBase, max_steps: usize) -> Result<EPSeq> {
    if let Some(a) = q.alpha_hint() {
        return Ok(a.clone());
    }
    let mut seen: HashMap<FieldElem, usize> = HashMap::new();
    let mut r = q.from_int(1);
    let mut digits = Vec::new();
    for k in 0..=max_steps {
        if let Some(&j) = seen.get(&r) {
            let pre = Word::from_vec(digits[..j].to_vec());
            let per = Word::from_vec(digits[j..k].to_vec());
            return EPSeq::new(pre, per);
        }
        seen.insert(r.clone(), k);
        let t = r.mul_gen();
        let t1 = t.add_int(-1);
        if t1.sign() == Sign::Plus {
            digits.push(1);
            r = t1;
        } else {
            digits.push(0);
            r = t;
        }
    }
    Err(Error::UnsupportedBase(format!(
        "no period found in the first {max_steps} digits of alpha({})",
        q.approx(12)
    )))
}

/// Parry's condition for quasi-greedy expansions: `σⁿ a ≤ a` whenever `a_n = 0`.
pub fn parry_check(s: &EPSeq) -> Result<bool> {
    if s.per().digits() == [0] {
        return domain(format!("{s} has only finitely many ones"));
    }
    for n in 1..=s.window() {
        if s.digit(n - 1) == 0 && s.shift(n) > *s {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique `q ∈ (1, 2]` with `α(q) = s`.
pub fn base_from_alpha(s: &EPSeq) -> Result<AlgBase> {
    if !parry_check(s)? {
        return domain(format!("{s} is not the quasi-greedy expansion of any base"));
    }
    if s.ones_tail() && s.pre().is_empty() {
        return Ok(AlgBase::two());
    }
    let (n, d) = s.series();
    let p = d.sub(&n);
    let one = BigRational::one();
    let two = BigRational::from_integer(2.into());
    Ok(AlgBase::from_bracket(&p, &one, &two)?.with_alpha(s.clone()))
}

/// Result of counting expansions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Count {
    Exact(u64),
    AtLeast(u64),
}

const NODE_BUDGET: usize = 200_000;

/// Count the `q`-expansions of `x` by exploring the exact remainder graph
/// `r ↦ q r - d` up to `depth` levels.
pub fn count_expansions(x: &FieldElem, q: &AlgBase, cap: u64, depth: usize) -> Result<Count> {
    if cap == 0 {
        return domain("cap must be at least 1");
    }
    let upper = q.gen().add_int(-1).inv()?;
    if x.sign() == Sign::Minus || x.cmp_elem(&upper) == std::cmp::Ordering::Greater {
        return domain("x lies outside [0, 1/(q-1)]");
    }
    let mut index: HashMap<FieldElem, usize> = HashMap::new();
    let mut nodes = vec![x.clone()];
    let mut level = vec![0usize];
    let mut edges: Vec<Vec<usize>> = vec![Vec::new()];
    let mut frontier = vec![false];
    index.insert(x.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        if level[v] >= depth || nodes.len() >= NODE_BUDGET {
            frontier[v] = true;
            continue;
        }
        let t = nodes[v].mul_gen();
        for d in [0i64, 1] {
            let c = t.add_int(-d);
            if c.sign() == Sign::Minus || c.cmp_elem(&upper) == std::cmp::Ordering::Greater {
                continue;
            }
            let w = match index.get(&c) {
                Some(&w) => w,
                None => {
                    let w = nodes.len();
                    index.insert(c.clone(), w);
                    nodes.push(c);
                    level.push(level[v] + 1);
                    edges.push(Vec::new());
                    frontier.push(false);
                    queue.push_back(w);
                    w
                }
            };
            edges[v].push(w);
        }
    }
    let complete = !frontier.iter().any(|&f| f);
    let paths = count_paths(&edges, &frontier, cap + 1);
    Ok(match paths {
        Some(k) if complete && k <= cap => Count::Exact(k),
        Some(k) => Count::AtLeast(k.min(cap + 1)),
        None => Count::AtLeast(cap + 1),
    })
}

/// Number of infinite paths from node 0 in a graph where frontier nodes count as one path each.
/// `None` if there are infinitely many. Counts saturate at `sat`.
fn count_paths(edges: &[Vec<usize>], frontier: &[bool], sat: u64) -> Option<u64> {
    let sccs = tarjan(edges);
    let mut comp = vec![0usize; edges.len()];
    for (i, c) in sccs.iter().enumerate() {
        for &v in c {
            comp[v] = i;
        }
    }
    let mut ways = vec![0u64; sccs.len()];
    // Tarjan emits components in reverse topological order, sinks first.
    for (i, c) in sccs.iter().enumerate() {
        let internal: usize = c
            .iter()
            .map(|&v| edges[v].iter().filter(|&&w| comp[w] == i).count())
            .sum();
        let exits: Vec<usize> = c
            .iter()
            .flat_map(|&v| edges[v].iter().filter(|&&w| comp[w] != i).map(|&w| comp[w]))
            .collect();
        if internal > 0 {
            if internal > c.len() || !exits.is_empty() {
                return None;
            }
            ways[i] = 1;
        } else if frontier[c[0]] {
            ways[i] = 1;
        } else {
            ways[i] = exits.iter().fold(0u64, |a, &j| a.saturating_add(ways[j]).min(sat));
        }
    }
    Some(ways[comp[0]])
}

pub(crate) fn tarjan(edges: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = edges.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on = vec![false; n];
    let mut stack = Vec::new();
    let mut out = Vec::new();
    let mut next = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&mut (v, ref mut ei)) = call.last_mut() {
            if *ei == 0 && index[v] == usize::MAX {
                index[v] = next;
                low[v] = next;
                next += 1;
                stack.push(v);
                on[v] = true;
            }
            if *ei < edges[v].len() {
                let w = edges[v][*ei];
                *ei += 1;
                if index[w] == usize::MAX {
                    call.push((w, 0));
                } else if on[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(u, _)) = call.last() {
                    low[u] = low[u].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut c = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on[w] = false;
                        c.push(w);
                        if w == v {
                            break;
                        }
                    }
                    out.push(c);
                }
            }
        }
    }
    out
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;

    fn e(s: &str) -> EPSeq {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn poly_base(c: &[i64]) -> AlgBase {
        let one = BigRational::one();
        let two = BigRational::from_integer(2.into());
        AlgBase::from_bracket(&IntPoly::from_i64(c), &one, &two).unwrap()
    }

    #[test]
    fn quasi_greedy_digits() {
        let phi = poly_base(&[-1, -1, 1]);
        assert_eq!(alpha_digits(&phi, 6), w("101010"));
        let qf = poly_base(&[-1, 1, -2, 1]);
        assert_eq!(alpha_digits(&qf, 8), w("11001100"));
        assert_eq!(alpha_digits(&AlgBase::two(), 5), w("11111"));
        assert_eq!(alpha_sequence(&qf, 100).unwrap(), e("(1100)"));
    }

    #[test]
    fn greedy_digits() {
        let qf = poly_base(&[-1, 1, -2, 1]);
        assert_eq!(beta_digits(&qf, 6), (w("110100"), true));
        assert_eq!(beta_digits(&AlgBase::two(), 3), (w("111"), false));
        let phi = poly_base(&[-1, -1, 1]);
        assert_eq!(beta_digits(&phi, 2), (w("11"), true));
        let (b, fin) = beta_digits(&phi, 2);
        assert!(fin);
        assert_eq!(EPSeq::periodic(b.dec().unwrap()).unwrap(), alpha_sequence(&phi, 10).unwrap());
    }

    #[test]
    fn parry() {
        assert!(parry_check(&e("(10)")).unwrap());
        assert!(parry_check(&e("(1100)")).unwrap());
        assert!(!parry_check(&e("(1001)")).unwrap());
        assert!(parry_check(&e("0*")).is_err());
    }

    #[test]
    fn inverse_map() {
        let phi = base_from_alpha(&e("(10)")).unwrap();
        assert_eq!(phi.minpoly(), &IntPoly::from_i64(&[-1, -1, 1]));
        assert_eq!(phi.approx(5), "1.61803");
        let qf = base_from_alpha(&e("(1100)")).unwrap();
        assert_eq!(qf.minpoly(), &IntPoly::from_i64(&[-1, 1, -2, 1]));
        assert!(base_from_alpha(&e("(1)")).unwrap().is_two());
        let t = base_from_alpha(&e("(110)")).unwrap();
        assert_eq!(t.minpoly(), &IntPoly::from_i64(&[-1, -1, -1, 1]));
        // a freshly built base recovers the same expansion without the hint
        let plain = AlgBase::from_bracket(t.minpoly(), &BigRational::one(), &BigRational::from_integer(2.into())).unwrap();
        assert_eq!(alpha_sequence(&plain, 50).unwrap(), e("(110)"));
    }

    #[test]
    fn counting() {
        let two = AlgBase::two();
        assert_eq!(count_expansions(&two.from_int(0), &two, 5, 64).unwrap(), Count::Exact(1));
        let half = two.from_rational(&BigRational::new(1.into(), 2.into()));
        assert_eq!(count_expansions(&half, &two, 5, 64).unwrap(), Count::Exact(2));
        // 1 in base φ has countably many expansions
        let phi = poly_base(&[-1, -1, 1]);
        assert_eq!(count_expansions(&phi.from_int(1), &phi, 5, 64).unwrap(), Count::AtLeast(6));
        assert!(count_expansions(&phi.from_int(3), &phi, 5, 64).is_err());
    }
}
