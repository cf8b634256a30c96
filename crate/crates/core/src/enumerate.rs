//! The ladder `q_1 < q_2 < ⋯` of a component, representation vectors of the
//! sequences in `A'_q`, bounded enumeration of `B₂ ∩ (q_n, q_{n+1}]`, and
//! derived-set orders.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::Sign;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebraic::AlgBase;
use crate::b2core::{f_minpoly, numerator_from, prop62_vectors, B2Witness};
use crate::bases::base_from_alpha;
use crate::classify::in_a_prime_alpha;
use crate::error::{domain, Error, Result};
use crate::poly::IntPoly;
use crate::words::{ComponentSpec, EPSeq, Word};

/// `(k₁,…,k_m; s₂,…,s_m; j₀,…,j_{m-1}, ∞)`. The empty vector stands for `(∞)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ReprVector {
    pub k: Vec<usize>,
    pub s: Vec<u8>,
    pub j: Vec<usize>,
}

impl ReprVector {
    pub fn new(k: Vec<usize>, s: Vec<u8>, j: Vec<usize>) -> Result<ReprVector> {
        let m = k.len();
        if k.windows(2).any(|w| w[0] >= w[1]) {
            return domain("k must be strictly increasing");
        }
        if s.len() != m.saturating_sub(1) || s.iter().any(|&b| b > 1) {
            return domain(format!("expected {} bits s", m.saturating_sub(1)));
        }
        if j.len() != m {
            return domain(format!("expected {m} finite exponents j"));
        }
        Ok(ReprVector { k, s, j })
    }

    /// `(∞)`, the vector of `0^∞`.
    pub fn infinite() -> ReprVector {
        ReprVector { k: vec![], s: vec![], j: vec![] }
    }

    pub fn m(&self) -> usize {
        self.k.len()
    }

    /// `k_m`, or `-1` for `(∞)`.
    pub fn k_max(&self) -> i64 {
        self.k.last().map_or(-1, |&k| k as i64)
    }

    /// `k_m + 1`.
    pub fn weight(&self) -> usize {
        self.k.last().map_or(0, |&k| k + 1)
    }

    fn complexity(&self) -> usize {
        self.m() + self.j.iter().sum::<usize>() + self.s.iter().map(|&b| b as usize).sum::<usize>()
    }

    /// Some block `ω_{k_r}` is absent, so a shorter vector gives the same sequence.
    fn has_missing_block(&self) -> bool {
        (1..self.m()).any(|r| {
            let before = if r == 1 { 0 } else { self.s[r - 2] as usize };
            before + self.j[r] + self.s[r - 1] as usize == 0
        })
    }
}

impl fmt::Display for ReprVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k.is_empty() {
            return write!(f, "(∞)");
        }
        let join = |v: Vec<String>| v.join(",");
        let s = if self.s.is_empty() { "∅".to_string() } else { join(self.s.iter().map(|x| x.to_string()).collect()) };
        write!(
            f,
            "({};{};{},∞)",
            join(self.k.iter().map(|x| x.to_string()).collect()),
            s,
            join(self.j.iter().map(|x| x.to_string()).collect())
        )
    }
}

/// `ω (ω₀⁻)^{j₀} (ω_{k₁} reflect(ω_{k₁}))^{j₁} (ω_{k₁} reflect(ω_{k₂}))^{s₂} ⋯ (ω_{k_m} reflect(ω_{k_m}))^∞`.
///
/// For the first component an empty initial word is allowed; the leading zeros
/// are then carried by `j₀ ≥ 1`.
pub fn repr_to_seq(v: &ReprVector, comp: &ComponentSpec, initial: &Word) -> Result<EPSeq> {
    let v = ReprVector::new(v.k.clone(), v.s.clone(), v.j.clone())?;
    let gen = comp.generator();
    if initial.is_empty() {
        let zero_gen = gen.digits() == [0];
        if !zero_gen || (v.m() > 0 && v.j[0] == 0) {
            return domain("the initial word may be empty only in the first component with j₀ ≥ 1");
        }
    }
    let m = v.m();
    if m == 0 {
        return EPSeq::new(initial.clone(), gen.clone());
    }
    let om = comp.omegas(*v.k.last().unwrap());
    let block = |a: usize, b: usize| om[a].concat(&om[b].reflect());
    let mut pre = initial.concat(&gen.repeat(v.j[0]));
    for r in 0..m {
        if r > 0 && v.s[r - 1] == 1 {
            pre = pre.concat(&block(v.k[r - 1], v.k[r]));
        }
        if r + 1 < m {
            pre = pre.concat(&block(v.k[r], v.k[r]).repeat(v.j[r + 1]));
        }
    }
    EPSeq::new(pre, block(v.k[m - 1], v.k[m - 1]))
}

fn first_seq(v: &ReprVector) -> EPSeq {
    repr_to_seq(v, &ComponentSpec::first(), &Word::empty()).expect("enumerated vectors are well formed")
}

/// All vectors with `k`-components below `n` and finite `j`-components at most `jmax`,
/// `j₀ ≥ 1`, without absent blocks; graded by size, then lexicographic.
pub fn enum_reprs(n: usize, jmax: usize) -> Vec<ReprVector> {
    let mut out = vec![ReprVector::infinite()];
    for mask in 1u64..(1u64 << n) {
        let k: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let m = k.len();
        let mut j = vec![1usize; m];
        j[1..].iter_mut().for_each(|x| *x = 0);
        'outer: loop {
            for sbits in 0u64..(1u64 << (m - 1)) {
                let s: Vec<u8> = (0..m - 1).map(|i| (sbits >> i & 1) as u8).collect();
                let v = ReprVector { k: k.clone(), s, j: j.clone() };
                if !v.has_missing_block() {
                    out.push(v);
                }
            }
            // odometer over j₀ ∈ 1..=jmax, j_r ∈ 0..=jmax
            let mut i = 0;
            loop {
                if i == m {
                    break 'outer;
                }
                let lo = usize::from(i == 0);
                if j[i] < jmax {
                    j[i] += 1;
                    break;
                }
                j[i] = lo;
                i += 1;
            }
        }
    }
    out.sort_by(|a, b| a.complexity().cmp(&b.complexity()).then_with(|| a.cmp(b)));
    out
}

/// `q_n` with `α(q_n) = (ω_n⁻)^∞` and `β(q_n) = ω_n 0^∞`.
#[derive(Clone, Debug, Serialize)]
pub struct LadderEntry {
    pub n: usize,
    pub base: AlgBase,
    pub alpha: EPSeq,
    pub beta_word: Word,
}

type LadderCache = Mutex<HashMap<(Word, usize), LadderEntry>>;

fn ladder_cache() -> &'static LadderCache {
    static CACHE: OnceLock<LadderCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The entry `q_n`, `n ≥ 1`.
pub fn ladder_entry(comp: &ComponentSpec, n: usize) -> Result<LadderEntry> {
    if n == 0 {
        return domain("ladder indices start at 1");
    }
    let key = (comp.generator().clone(), n);
    if let Some(e) = ladder_cache().lock().unwrap().get(&key) {
        return Ok(e.clone());
    }
    let om = comp.omegas(n).pop().expect("ω_n");
    let alpha = EPSeq::periodic(om.dec()?)?;
    let base = base_from_alpha(&alpha)?;
    let e = LadderEntry { n, base, alpha, beta_word: om };
    ladder_cache().lock().unwrap().insert(key, e.clone());
    Ok(e)
}

/// `q_1, …, q_N`.
pub fn qn_ladder(comp: &ComponentSpec, big_n: usize) -> Result<Vec<LadderEntry>> {
    (1..=big_n).into_par_iter().map(|n| ladder_entry(comp, n)).collect()
}

/// A candidate sequence with its value at both ends of the interval.
struct Cand {
    v: ReprVector,
    s: EPSeq,
    at: [f64; 2],
}

/// `Σ s_i q^{-i-1}` in floating point.
fn value_f64(s: &EPSeq, q: f64) -> f64 {
    let r = 1.0 / q;
    let sum = |w: &[u8]| w.iter().rev().fold(0.0, |acc, &b| (acc + b as f64) * r);
    let (pre, per) = (s.pre().digits(), s.per().digits());
    sum(pre) + r.powi(pre.len() as i32) * sum(per) / (1.0 - r.powi(per.len() as i32))
}

/// Margin below which the floating sign is rechecked exactly.
const F64_MARGIN: f64 = 1e-8;

/// Sign of `f_{c,d}` at the ladder end `e` (0 left, 1 right). `N_f / (B_c B_d)` equals
/// `(q−1)(2 + v_c + v_d) − q` and the denominators are positive.
fn sign_at(iv: &Interval, e: usize, x: &Cand, y: &Cand) -> Sign {
    let q = &iv.ends[e];
    let g = (iv.f64s[e] - 1.0) * (2.0 + x.at[e] + y.at[e]) - iv.f64s[e];
    if g > F64_MARGIN {
        Sign::Plus
    } else if g < -F64_MARGIN {
        Sign::Minus
    } else {
        q.sign_of(&numerator(&x.s, &y.s))
    }
}

fn numerator(c: &EPSeq, d: &EPSeq) -> IntPoly {
    let ((nc, bc), (nd, bd)) = (c.series(), d.series());
    numerator_from(&bc.add(&nc), &bc, &bd.add(&nd), &bd)
}

/// The candidate sequences of `A'_q` for `q ∈ (q_n, q_{n+1}]`, one per distinct sequence.
fn candidates(iv: &Interval, jmax: usize, seeds: bool) -> Vec<Cand> {
    let n = iv.n;
    let mut vs = enum_reprs(n, jmax);
    if seeds && n >= 2 {
        if let Ok(((w, v), (wt, vt))) = prop62_vectors(&ComponentSpec::first(), n) {
            // fold the initial zeros into j₀
            for (w, mut v) in [(w, v), (wt, vt)] {
                v.j[0] += w.len();
                vs.push(v);
            }
        }
    }
    let alpha = &iv.hi.alpha;
    let mut seen = HashSet::new();
    let seqs: Vec<(ReprVector, EPSeq)> =
        vs.into_iter().map(|v| (first_seq(&v), v)).filter(|(s, _)| seen.insert(s.clone())).map(|(s, v)| (v, s)).collect();
    seqs.into_par_iter()
        .filter(|(_, s)| in_a_prime_alpha(s, alpha))
        .map(|(v, s)| {
            let at = [value_f64(&s, iv.f64s[0]), value_f64(&s, iv.f64s[1])];
            Cand { v, s, at }
        })
        .collect()
}

/// Interior interval index of a root for derived orders: root in `(q_n, q_{n+1}]`.
struct Interval {
    n: usize,
    lo: LadderEntry,
    hi: LadderEntry,
    ends: [AlgBase; 2],
    f64s: [f64; 2],
}

impl Interval {
    fn new(n: usize) -> Result<Interval> {
        let comp = ComponentSpec::first();
        let (lo, hi) = (ladder_entry(&comp, n)?, ladder_entry(&comp, n + 1)?);
        let ends = [lo.base.clone(), hi.base.clone()];
        let f64s = [ends[0].to_f64(), ends[1].to_f64()];
        Ok(Interval { n, lo, hi, ends, f64s })
    }
}

/// Root of `f_{c,d}` in `(q_n, q_{n+1}]`, if any.
fn root_in(iv: &Interval, x: &Cand, y: &Cand) -> Option<AlgBase> {
    let (ql, qh) = (&iv.lo.base, &iv.hi.base);
    if iv.n == 1 {
        // below q_f: isolate every root of the reduced numerator
        let g = f_minpoly(&x.s, &y.s);
        if g.degree() == 0 {
            return None;
        }
        let (lo, _) = ql.interval();
        let (_, hi) = qh.interval();
        let mut found = None;
        for (a, b) in g.isolate_roots(&lo, &hi) {
            let r = AlgBase::from_bracket(&g, &a, &b).ok()?;
            let r = if r == *qh { qh.clone() } else { r };
            if r > *ql && r <= *qh {
                found = Some(r);
            }
        }
        return found;
    }
    if sign_at(iv, 0, x, y) != Sign::Minus {
        return None;
    }
    match sign_at(iv, 1, x, y) {
        Sign::Minus => None,
        Sign::NoSign => Some(qh.clone()),
        Sign::Plus => {
            let nf = numerator(&x.s, &y.s);
            let mut bits = 96;
            loop {
                let (_, a) = ql.interval_bits(bits);
                let (b, _) = qh.interval_bits(bits);
                if a < b && nf.sign_at(&a) == Sign::Minus && nf.sign_at(&b) == Sign::Plus {
                    return AlgBase::from_bracket(&nf, &a, &b).ok();
                }
                bits *= 2;
            }
        }
    }
}

/// `2n − (k_{m₁}+1) − (k̃_{m₂}+1)` inside the interval, `2(n+1) − ⋯` at its right endpoint.
fn order_of(n: usize, endpoint: bool, a: &ReprVector, b: &ReprVector) -> usize {
    let top = if endpoint { 2 * (n + 1) } else { 2 * n };
    top.saturating_sub(a.weight() + b.weight())
}

struct Hit {
    root: AlgBase,
    i: usize,
    j: usize,
}

fn collect_witnesses(iv: &Interval, seqs: &[Cand], mut hits: Vec<Hit>) -> Result<Vec<B2Witness>> {
    hits.sort_by(|a, b| a.root.cmp(&b.root).then((a.i, a.j).cmp(&(b.i, b.j))));
    let mut out: Vec<B2Witness> = Vec::new();
    for h in hits {
        let endpoint = h.root == iv.hi.base;
        let (x, y) = (&seqs[h.i], &seqs[h.j]);
        let rep = (x.v.clone(), y.v.clone());
        let ord = order_of(iv.n, endpoint, &x.v, &y.v);
        if let Some(last) = out.last_mut() {
            if last.root == h.root {
                last.representations.push(rep);
                last.derived_order = last.derived_order.max(Some(ord));
                continue;
            }
        }
        let root = if endpoint { iv.hi.base.clone() } else { h.root };
        let mut w = B2Witness::new(x.s.clone(), y.s.clone(), root)?;
        w.repr_vectors = Some(rep.clone());
        w.representations.push(rep);
        w.derived_order = Some(ord);
        out.push(w);
    }
    Ok(out)
}

/// Apply `f` to every pair `i ≤ j` with weight sum at most `bound`.
fn scan<T: Send>(seqs: &[Cand], bound: usize, f: impl Fn(usize, usize) -> Option<T> + Sync) -> Vec<T> {
    let w: Vec<usize> = seqs.iter().map(|x| x.v.weight()).collect();
    (0..seqs.len())
        .into_par_iter()
        .filter(|&i| w[i] <= bound)
        .flat_map_iter(|i| {
            let w = &w;
            let f = &f;
            (i..seqs.len()).filter(move |&j| w[i] + w[j] <= bound).filter_map(move |j| f(i, j))
        })
        .collect()
}

/// `B₂ ∩ (q_n, q_{n+1}]` for the first component, from all pairs of vectors with `j ≤ jmax`;
/// ascending, one witness per base with every representation found.
pub fn enum_b2(n: usize, jmax: usize) -> Result<Vec<B2Witness>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    if jmax == 0 {
        return domain("jmax must be at least 1");
    }
    let iv = Interval::new(n)?;
    let seqs = candidates(&iv, jmax, false);
    let hits = scan(&seqs, usize::MAX / 2, |i, j| root_in(&iv, &seqs[i], &seqs[j]).map(|root| Hit { root, i, j }));
    collect_witnesses(&iv, &seqs, hits)
}

/// Largest `j` with the witness in `(B₂ ∩ (q_n, q_{n+1}])^{(j)}` over its known representations;
/// the right endpoint `q_{n+1}` also counts accumulation from the next interval.
pub fn derived_order_bound(w: &B2Witness, n: usize) -> Result<usize> {
    if w.representations.is_empty() {
        return domain("witness has no representation vectors");
    }
    let iv = Interval::new(n.max(1))?;
    if n == 0 || w.root <= iv.lo.base || w.root > iv.hi.base {
        return domain(format!("root {} is not in (q_{n}, q_{}]", w.root.approx(6), n + 1));
    }
    let endpoint = w.root == iv.hi.base;
    Ok(w.representations.iter().map(|(a, b)| order_of(n, endpoint, a, b)).max().unwrap_or(0))
}

enum Found {
    Interior(Hit),
    Endpoint(usize, usize),
}

/// The smallest base found whose derived order is at least `j`, scanning `n = 1..=nmax`
/// with vectors bounded by `jmax` plus the explicit sign-changing pairs.
pub fn min_derived(j: usize, jmax: usize, nmax: usize) -> Result<B2Witness> {
    for n in 1..=nmax {
        if 2 * n + 2 < j {
            continue;
        }
        let iv = Interval::new(n)?;
        let seqs = candidates(&iv, jmax, true);
        let interior = (2 * n).checked_sub(j);
        let found = scan(&seqs, 2 * n + 2 - j, |a, b| {
            let (x, y) = (&seqs[a], &seqs[b]);
            if sign_at(&iv, 1, x, y) == Sign::NoSign {
                return Some(Found::Endpoint(a, b));
            }
            let fits = interior.is_some_and(|t| x.v.weight() + y.v.weight() <= t);
            if !fits {
                return None;
            }
            root_in(&iv, x, y).map(|root| Found::Interior(Hit { root, i: a, j: b }))
        });
        let (mut inner, mut ends) = (Vec::new(), Vec::new());
        for f in found {
            match f {
                Found::Interior(h) => inner.push(h),
                Found::Endpoint(a, b) => ends.push((a, b)),
            }
        }
        if inner.is_empty() {
            if let Some(&(a, b)) = ends.iter().min() {
                inner.push(Hit { root: iv.hi.base.clone(), i: a, j: b });
            }
        }
        if !inner.is_empty() {
            let ws = collect_witnesses(&iv, &seqs, inner)?;
            return Ok(ws.into_iter().next().expect("nonempty"));
        }
    }
    Err(Error::NotFoundWithinBounds(format!(
        "no base of derived order ≥ {j} with jmax = {jmax}, nmax = {nmax}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{alpha_digits, beta_digits};
    use crate::words::omega;

    fn e(s: &str) -> EPSeq {
        s.parse().unwrap()
    }

    fn rv(k: &[usize], s: &[u8], j: &[usize]) -> ReprVector {
        ReprVector::new(k.to_vec(), s.to_vec(), j.to_vec()).unwrap()
    }

    #[test]
    fn vectors_to_sequences() {
        assert_eq!(first_seq(&ReprVector::infinite()), EPSeq::zeros());
        assert_eq!(first_seq(&rv(&[0], &[], &[2])), e("00(10)"));
        assert_eq!(first_seq(&rv(&[0, 1], &[1], &[1, 1])), e("010100(1100)"));
        assert_eq!(rv(&[0, 1], &[1], &[1, 1]).to_string(), "(0,1;1;1,1,∞)");
        assert!(ReprVector::new(vec![1, 0], vec![0], vec![1, 1]).is_err());
        assert!(repr_to_seq(&rv(&[0], &[], &[0]), &ComponentSpec::first(), &Word::empty()).is_err());
    }

    #[test]
    fn vector_counts() {
        assert_eq!(enum_reprs(0, 5), vec![ReprVector::infinite()]);
        assert_eq!(enum_reprs(1, 3).len(), 4);
        // (∞), 2 + 2 one-block vectors, 2·(3·2 − 1) two-block vectors
        assert_eq!(enum_reprs(2, 2).len(), 1 + 4 + 10);
    }

    #[test]
    fn ladder() {
        let comp = ComponentSpec::first();
        let l = qn_ladder(&comp, 4).unwrap();
        for (e, want) in l.iter().zip([1.61803, 1.75488, 1.78460, 1.78721]) {
            assert!((e.base.to_f64() - want).abs() < 1e-5);
        }
        for e in &l {
            let om = omega(&comp, e.n);
            assert_eq!(alpha_digits(&e.base, 2 * om.len()), e.alpha.prefix(2 * om.len()));
            let (b, fin) = beta_digits(&e.base, om.len() + 4);
            assert!(fin);
            assert_eq!(b.slice(0, om.len()), om);
        }
        assert!(l.windows(2).all(|w| w[0].base < w[1].base));
    }

    #[test]
    fn first_interval() {
        let ws = enum_b2(1, 6).unwrap();
        assert!(ws.len() >= 2);
        assert_eq!(ws[0].root.minpoly(), &crate::b2core::qs_poly());
        assert_eq!(ws[0].derived_order, Some(0));
        let last = ws.last().unwrap();
        assert_eq!(last.root.minpoly(), &crate::b2core::qf_poly());
        assert_eq!(last.derived_order, Some(2));
        assert!(ws.iter().all(|w| w.admissible && w.residual().is_zero()));
        assert!(enum_b2(0, 6).unwrap().is_empty());
    }
}
