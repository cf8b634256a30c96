//! Entropy of `U'_q` from a finite automaton, the dimension of `U_q`, and the local
//! dimension bound for `B₂`.
//!
//! A state holds the tightest pending upper bound on the unread tail (a suffix of `α`,
//! or none) and the tightest pending lower bound (a suffix of `reflect(α)`, or none).
//! Strict inequalities fail only when a bound is followed with equality forever, so a
//! path is accepted when both bounds are relieved infinitely often.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebraic::{AlgBase, FieldElem};
use crate::bases::parry_check;
use crate::classify::ALPHA_SEARCH;
use crate::error::{domain, Error, Result};
use crate::poly::IntPoly;
use crate::words::{omega, ComponentSpec, EPSeq, Word};

/// Strongly connected components up to this size get an exact characteristic polynomial.
pub const EXACT_SCC_LIMIT: usize = 48;

/// Tracker for one side: the index of the pending suffix of `α`, or `None`.
type Track = Option<usize>;

struct Tracker {
    digits: Vec<u8>,
    /// Preperiod length; suffix indices wrap from `len` back here.
    pre: usize,
    /// `cmp(σ⁰α, σⁱα)`.
    head_cmp: Vec<Ordering>,
}

impl Tracker {
    fn new(alpha: &EPSeq) -> Tracker {
        let (a, p) = (alpha.pre().len(), alpha.per().len());
        let digits: Vec<u8> = (0..a + p).map(|i| alpha.digit(i)).collect();
        let head_cmp = (0..a + p).map(|i| alpha.cmp(&alpha.shift(i))).collect();
        Tracker { digits, pre: a, head_cmp }
    }

    fn next(&self, i: usize) -> usize {
        if i + 1 < self.digits.len() {
            i + 1
        } else {
            self.pre
        }
    }

    /// Read digit `b`; `None` if a bound is violated. The flag is set when the pending
    /// bound was absent, strictly met, or replaced by a strictly smaller one.
    fn step(&self, t: Track, b: u8) -> Option<(Track, bool)> {
        let (mut t, mut good) = match t {
            None => (None, true),
            Some(i) => match b.cmp(&self.digits[i]) {
                Ordering::Greater => return None,
                Ordering::Less => (None, true),
                Ordering::Equal => (Some(self.next(i)), false),
            },
        };
        if b == 0 {
            match t {
                None => t = Some(0),
                Some(i) if self.head_cmp[i] == Ordering::Less => {
                    t = Some(0);
                    good = true;
                }
                Some(_) => {}
            }
        }
        Some((t, good))
    }
}

#[derive(Clone, Copy, Debug)]
struct Edge {
    to: usize,
    upper_good: bool,
    lower_good: bool,
}

/// Deterministic automaton whose accepted infinite paths from the initial state spell
/// exactly the sequences of `U'_q`; only states with an accepted continuation are kept.
#[derive(Clone, Debug)]
pub struct UqAutomaton {
    pub alpha: EPSeq,
    states: Vec<(Track, Track)>,
    edges: Vec<[Option<Edge>; 2]>,
    /// Component index per state, and whether the component carries a cycle.
    scc: Vec<usize>,
    cyclic: Vec<bool>,
}

impl UqAutomaton {
    /// Build from the quasi-greedy expansion `α`, which must be eventually periodic.
    pub fn from_alpha(alpha: &EPSeq) -> Result<UqAutomaton> {
        if !parry_check(alpha)? {
            return domain(format!("{alpha} is not a quasi-greedy expansion"));
        }
        let tr = Tracker::new(alpha);
        let mut index = std::collections::HashMap::new();
        let mut states = vec![(None, None)];
        index.insert((None, None), 0usize);
        let mut raw: Vec<[Option<Edge>; 2]> = Vec::new();
        let mut k = 0;
        while k < states.len() {
            let (u, l) = states[k];
            let mut out = [None, None];
            for b in 0..2u8 {
                let (Some((u2, ug)), Some((l2, lg))) = (tr.step(u, b), tr.step(l, 1 - b)) else {
                    continue;
                };
                let key = (u2, l2);
                let to = *index.entry(key).or_insert_with(|| {
                    states.push(key);
                    states.len() - 1
                });
                out[b as usize] = Some(Edge { to, upper_good: ug, lower_good: lg });
            }
            raw.push(out);
            k += 1;
        }
        let (scc, count) = components(&raw);
        // components whose internal edges relieve both bounds
        let mut ug = vec![false; count];
        let mut lg = vec![false; count];
        let mut cyclic = vec![false; count];
        for (s, out) in raw.iter().enumerate() {
            for e in out.iter().flatten() {
                if scc[e.to] == scc[s] {
                    cyclic[scc[s]] = true;
                    ug[scc[s]] |= e.upper_good;
                    lg[scc[s]] |= e.lower_good;
                }
            }
        }
        let mut live: Vec<bool> = (0..raw.len()).map(|s| ug[scc[s]] && lg[scc[s]]).collect();
        // backward closure: components are numbered in reverse topological order
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by_key(|&s| scc[s]);
        for &s in &order {
            if raw[s].iter().flatten().any(|e| live[e.to]) {
                live[s] = true;
            }
        }
        if !live[0] {
            return Err(Error::UnsupportedBase(format!("U'_q is empty for α = {alpha}")));
        }
        // keep live states, renumbered with the initial state first
        let keep: Vec<usize> = (0..raw.len()).filter(|&s| live[s]).collect();
        let mut new_id = vec![usize::MAX; raw.len()];
        for (i, &s) in keep.iter().enumerate() {
            new_id[s] = i;
        }
        let edges = keep
            .iter()
            .map(|&s| {
                raw[s].map(|e| e.filter(|e| live[e.to]).map(|e| Edge { to: new_id[e.to], ..e }))
            })
            .collect();
        let mut comp_id = std::collections::HashMap::new();
        let scc_new: Vec<usize> = keep
            .iter()
            .map(|&s| {
                let n = comp_id.len();
                *comp_id.entry(scc[s]).or_insert(n)
            })
            .collect();
        let mut cyc = vec![false; comp_id.len()];
        for (&old, &new) in &comp_id {
            cyc[new] = cyclic[old];
        }
        Ok(UqAutomaton {
            alpha: alpha.clone(),
            states: keep.iter().map(|&s| states[s]).collect(),
            edges,
            scc: scc_new,
            cyclic: cyc,
        })
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    /// Successor of state `s` on digit `b`.
    pub fn successor(&self, s: usize, b: u8) -> Option<usize> {
        self.edges[s][b as usize].map(|e| e.to)
    }

    /// `#L_n(U'_q)` for `n = 0..=nmax`: words of length `n` that begin some element of `U'_q`.
    pub fn path_counts(&self, nmax: usize) -> Vec<BigUint> {
        let mut v = vec![BigUint::zero(); self.states.len()];
        v[0] = BigUint::one();
        let mut out = vec![BigUint::one()];
        for _ in 0..nmax {
            let mut w = vec![BigUint::zero(); self.states.len()];
            for (s, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for e in self.edges[s].iter().flatten() {
                    w[e.to] += x;
                }
            }
            out.push(w.iter().sum());
            v = w;
        }
        out
    }

    /// The cyclic components as lists of states.
    fn cyclic_components(&self) -> Vec<Vec<usize>> {
        let mut comps = vec![Vec::new(); self.cyclic.len()];
        for (s, &c) in self.scc.iter().enumerate() {
            if self.cyclic[c] {
                comps[c].push(s);
            }
        }
        comps.retain(|c| !c.is_empty());
        comps
    }

    /// Adjacency matrix of a component in local indices.
    fn matrix(&self, comp: &[usize]) -> Vec<Vec<u8>> {
        let pos: std::collections::HashMap<usize, usize> = comp.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut m = vec![vec![0u8; comp.len()]; comp.len()];
        for (i, &s) in comp.iter().enumerate() {
            for e in self.edges[s].iter().flatten() {
                if let Some(&j) = pos.get(&e.to) {
                    m[i][j] += 1;
                }
            }
        }
        m
    }
}

/// Kosaraju; components come out in reverse topological order of the condensation.
fn components(edges: &[[Option<Edge>; 2]]) -> (Vec<usize>, usize) {
    let n = edges.len();
    let mut rev = vec![Vec::new(); n];
    for (s, out) in edges.iter().enumerate() {
        for e in out.iter().flatten() {
            rev[e.to].push(s);
        }
    }
    let mut seen = vec![false; n];
    let mut finish = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some((s, i)) = stack.pop() {
            if i < 2 {
                stack.push((s, i + 1));
                if let Some(e) = edges[s][i] {
                    if !seen[e.to] {
                        seen[e.to] = true;
                        stack.push((e.to, 0));
                    }
                }
            } else {
                finish.push(s);
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    // reverse finishing order on the reversed graph yields sources of the
    // condensation first; renumber so that sinks come first
    let mut order = Vec::new();
    for &root in finish.iter().rev() {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = count;
        let mut stack = vec![root];
        while let Some(s) = stack.pop() {
            for &t in &rev[s] {
                if comp[t] == usize::MAX {
                    comp[t] = count;
                    stack.push(t);
                }
            }
        }
        order.push(count);
        count += 1;
    }
    for c in comp.iter_mut() {
        *c = count - 1 - *c;
    }
    (comp, count)
}

/// Characteristic polynomial `det(xI − A)` by Berkowitz's division-free algorithm.
pub fn charpoly(a: &[Vec<u8>]) -> IntPoly {
    let n = a.len();
    let at = |i: usize, j: usize| BigInt::from(a[i][j]);
    // coefficients from the leading one down
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for i in 0..n {
        // column vector [1, -a_ii, -R C, -R A C, ...] for the leading (i+1)x(i+1) block
        let mut col = vec![BigInt::one(), -at(i, i)];
        let mut c: Vec<BigInt> = (0..i).map(|r| at(r, i)).collect();
        for _ in 0..i {
            let rc: BigInt = (0..i).map(|k| at(i, k) * &c[k]).sum();
            col.push(-rc);
            c = (0..i).map(|r| (0..i).map(|k| at(r, k) * &c[k]).sum()).collect();
        }
        let mut q = vec![BigInt::zero(); i + 2];
        for (r, qr) in q.iter_mut().enumerate() {
            for (k, pk) in p.iter().enumerate() {
                if r >= k {
                    *qr += &col[r - k] * pk;
                }
            }
        }
        p = q;
    }
    p.reverse();
    IntPoly::new(p)
}

/// Spectral radius of the live part of the automaton.
#[derive(Clone, Debug)]
pub enum SpectralRadius {
    /// Every cyclic component is a single cycle: polynomial growth.
    One,
    Exact(AlgBase),
    /// Certified enclosure from a positive test vector.
    Enclosure(BigRational, BigRational),
}

impl SpectralRadius {
    /// `[lo, hi]` as rationals.
    pub fn bounds(&self) -> (BigRational, BigRational) {
        match self {
            SpectralRadius::One => (BigRational::one(), BigRational::one()),
            SpectralRadius::Exact(l) => l.interval_bits(80),
            SpectralRadius::Enclosure(lo, hi) => (lo.clone(), hi.clone()),
        }
    }
}

/// Largest root in `(1, 2]` of a characteristic polynomial.
fn perron_root(p: &IntPoly) -> Result<AlgBase> {
    let g = p.squarefree();
    let one = BigRational::one();
    let two = BigRational::from_integer(2.into());
    if g.sign_at(&two) == Sign::NoSign {
        return Ok(AlgBase::two());
    }
    let (a, b) = g
        .isolate_roots(&one, &two)
        .into_iter()
        .max()
        .ok_or_else(|| Error::Domain("no eigenvalue in (1, 2]".into()))?;
    AlgBase::from_bracket(&g, &a.max(one), &b)
}

/// Collatz–Wielandt bounds `min (Ax)_i / x_i ≤ λ ≤ max (Ax)_i / x_i` for irreducible `A`.
fn enclosure(m: &[Vec<u8>]) -> (BigRational, BigRational) {
    let n = m.len();
    let mut x = vec![1.0f64; n];
    // iterate with A + I, which has the same Perron vector and is aperiodic
    for _ in 0..(20 * n).max(2000) {
        let mut y: Vec<f64> = (0..n).map(|i| x[i] + (0..n).map(|j| m[i][j] as f64 * x[j]).sum::<f64>()).collect();
        let s: f64 = y.iter().sum();
        y.iter_mut().for_each(|v| *v /= s);
        x = y;
    }
    let fallback = (BigRational::one(), BigRational::from_integer(2.into()));
    let xr: Option<Vec<BigRational>> = x.iter().map(|&v| if v > 0.0 { BigRational::from_float(v) } else { None }).collect();
    let Some(xr) = xr else {
        return fallback;
    };
    let ratios: Vec<BigRational> = (0..n)
        .map(|i| {
            let ax: BigRational = (0..n).filter(|&j| m[i][j] > 0).map(|j| &xr[j] * BigRational::from_integer(m[i][j].into())).sum();
            ax / &xr[i]
        })
        .collect();
    let lo = ratios.iter().min().cloned().unwrap_or_else(BigRational::one);
    let hi = ratios.iter().max().cloned().unwrap_or_else(BigRational::one);
    (lo.max(BigRational::one()), hi.min(BigRational::from_integer(2.into())))
}

/// Topological entropy of `U'_q`.
#[derive(Clone, Debug)]
pub struct Entropy {
    pub radius: SpectralRadius,
    pub states: usize,
    /// Characteristic polynomial of the dominant component, when computed exactly.
    pub charpoly: Option<IntPoly>,
    /// `#L_n` for `n = 1..=nmax`.
    pub counts: Vec<BigUint>,
}

fn ln_rat(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN).ln()
}

/// Pad a floating value outward by a few ulps.
fn down(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x - x.abs() * 4.0 * f64::EPSILON
    }
}

fn up(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x + x.abs() * 4.0 * f64::EPSILON
    }
}

impl Entropy {
    /// Enclosure of `log λ`.
    pub fn log_bounds(&self) -> (f64, f64) {
        match &self.radius {
            SpectralRadius::One => (0.0, 0.0),
            r => {
                let (lo, hi) = r.bounds();
                (down(ln_rat(&lo)).max(0.0), up(ln_rat(&hi)))
            }
        }
    }

    /// `(log #L_n)/n` for `n = 1..=nmax`; each dominates `log λ`.
    pub fn finite_bounds(&self) -> Vec<f64> {
        self.counts.iter().enumerate().map(|(i, c)| ln_big(c) / (i + 1) as f64).collect()
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.radius, SpectralRadius::One)
    }
}

fn ln_big(c: &BigUint) -> f64 {
    let bits = c.bits();
    if bits < 1000 {
        c.to_f64().unwrap_or(f64::INFINITY).ln()
    } else {
        let shift = bits - 64;
        (c >> shift).to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Entropy of `U'_q` for the base with quasi-greedy expansion `α`.
pub fn entropy_of_alpha(alpha: &EPSeq, nmax: usize) -> Result<(UqAutomaton, Entropy)> {
    let aut = UqAutomaton::from_alpha(alpha)?;
    let counts = aut.path_counts(nmax).split_off(1);
    let mut best: Option<(SpectralRadius, Option<IntPoly>)> = None;
    let mut better = |r: SpectralRadius, p: Option<IntPoly>| {
        let wins = match &best {
            None => true,
            Some((SpectralRadius::Exact(a), _)) => match &r {
                SpectralRadius::Exact(b) => b > a,
                other => other.bounds().1 > a.interval_bits(80).1,
            },
            Some((cur, _)) => r.bounds().1 > cur.bounds().1,
        };
        if wins {
            best = Some((r, p));
        }
    };
    let mut enclosed: Vec<(BigRational, BigRational)> = Vec::new();
    for comp in aut.cyclic_components() {
        if comp.iter().all(|&s| aut.edges[s].iter().flatten().filter(|e| aut.scc[e.to] == aut.scc[s]).count() == 1) {
            continue;
        }
        let m = aut.matrix(&comp);
        if comp.len() <= EXACT_SCC_LIMIT {
            let p = charpoly(&m);
            better(SpectralRadius::Exact(perron_root(&p)?), Some(p));
        } else {
            let (lo, hi) = enclosure(&m);
            enclosed.push((lo.clone(), hi.clone()));
            better(SpectralRadius::Enclosure(lo, hi), None);
        }
    }
    let radius = match best {
        None => SpectralRadius::One,
        Some((r, p)) => {
            // widen to an enclosure if another component could still dominate
            let (lo, hi) = r.bounds();
            let hi_any = enclosed.iter().map(|e| e.1.clone()).max().unwrap_or_else(|| hi.clone());
            let r = if hi_any > hi && !matches!(r, SpectralRadius::Enclosure(..)) {
                SpectralRadius::Enclosure(lo, hi_any)
            } else {
                r
            };
            let charpoly = if matches!(r, SpectralRadius::Exact(_)) { p } else { None };
            return Ok((aut.clone(), Entropy { radius: r, states: aut.num_states(), charpoly, counts }));
        }
    };
    let states = aut.num_states();
    Ok((aut, Entropy { radius, states, charpoly: None, counts }))
}

/// Build the automaton for a base with eventually periodic `α(q)`.
pub fn build_automaton(q: &AlgBase) -> Result<UqAutomaton> {
    UqAutomaton::from_alpha(&crate::bases::alpha_sequence(q, ALPHA_SEARCH)?)
}

pub fn entropy(q: &AlgBase, nmax: usize) -> Result<Entropy> {
    let alpha = crate::bases::alpha_sequence(q, ALPHA_SEARCH)?;
    Ok(entropy_of_alpha(&alpha, nmax)?.1)
}

/// Enclosure of `dim_H U_q = h_top(U'_q) / log q`.
#[derive(Clone, Debug, Serialize)]
pub struct Dimension {
    pub lo: f64,
    pub hi: f64,
    /// The value is known exactly (`0` or `1`).
    pub exact: bool,
}

pub fn dim_from_entropy(q: &AlgBase, h: &Entropy) -> Dimension {
    match &h.radius {
        SpectralRadius::One => Dimension { lo: 0.0, hi: 0.0, exact: true },
        SpectralRadius::Exact(l) if l == q => Dimension { lo: 1.0, hi: 1.0, exact: true },
        _ => {
            let (hl, hh) = h.log_bounds();
            let (ql, qh) = q.interval_bits(80);
            let lo = down(hl / up(ln_rat(&qh)));
            let hi = up(hh / down(ln_rat(&ql))).min(1.0);
            Dimension { lo: lo.max(0.0), hi, exact: false }
        }
    }
}

pub fn dim_u(q: &AlgBase) -> Result<Dimension> {
    Ok(dim_from_entropy(q, &entropy(q, 1)?))
}

/// `h`, `dim` and the automaton size as one JSON object.
pub fn entropy_json(q: &AlgBase, h: &Entropy) -> serde_json::Value {
    let (hl, hh) = h.log_bounds();
    let d = dim_from_entropy(q, h);
    let entropy_log = match &h.radius {
        SpectralRadius::One => "0".to_string(),
        SpectralRadius::Exact(l) if l.is_two() => "log 2".to_string(),
        _ => format!("{hl:.12}..{hh:.12}"),
    };
    let fmt = |x: f64| if d.exact { format!("{x}") } else { format!("{x:.12}") };
    serde_json::json!({
        "entropy_log": entropy_log,
        "dim": [fmt(d.lo), fmt(d.hi)],
        "states": h.states,
        "charpoly": h.charpoly.as_ref().map(|p| p.coeffs().iter().map(|c| i64::try_from(c).map(serde_json::Value::from).unwrap_or_else(|_| c.to_string().into())).collect::<Vec<_>>()),
        "lambda": match &h.radius {
            SpectralRadius::One => serde_json::json!("1"),
            SpectralRadius::Exact(l) => l.to_json(20),
            SpectralRadius::Enclosure(lo, hi) => serde_json::json!([lo.to_f64(), hi.to_f64()]),
        },
        "finite_bounds": h.finite_bounds(),
    })
}

/// First `n` digits of the quasi-greedy expansion of 1 in base `r`.
fn quasi_greedy_digits(r: &FieldElem, n: usize) -> Vec<u8> {
    let mut y = r.base().from_int(1);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let t = y.mul(r);
        let t1 = t.add_int(-1);
        if t1.sign() == Sign::Plus {
            out.push(1);
            y = t1;
        } else {
            out.push(0);
            y = t;
        }
    }
    out
}

/// A quasi-greedy expansion `(a₁⋯a_L)^∞` dominating every quasi-greedy `α` that begins
/// with `digits`, for the longest `L` passing Parry's condition. Any such `α` satisfies
/// `α ≤ (α₁⋯α_L)^∞`.
pub fn alpha_over_approximation(digits: &[u8]) -> Result<EPSeq> {
    for l in (1..=digits.len()).rev() {
        if !digits[..l].contains(&1) {
            continue;
        }
        let s = EPSeq::periodic(Word::new(digits[..l].to_vec())?)?;
        if parry_check(&s)? {
            return Ok(s);
        }
    }
    Ok(EPSeq::ones())
}

/// Certified upper bound for `dim_H(B₂ ∩ (q−δ, q+δ))`.
#[derive(Clone, Debug, Serialize)]
pub struct LocalBound {
    pub delta: String,
    /// Quasi-greedy expansion dominating `α(q+δ)`.
    pub alpha_upper: EPSeq,
    pub entropy_hi: f64,
    pub log_lo: f64,
    /// `[0, 2 h / log(q−δ)]`.
    pub bound: [f64; 2],
    pub states: usize,
}

/// Digits of `α(q+δ)` examined when over-approximating it.
pub const LOCAL_DIGITS: usize = 40;

pub fn b2_local_bound(q: &AlgBase, delta: &BigRational) -> Result<LocalBound> {
    if *delta <= BigRational::zero() {
        return domain("δ must be positive");
    }
    let d = q.from_rational(delta);
    let qe = q.gen();
    // 0 < δ < (2 − q)/3
    if qe.add(&d.add(&d).add(&d)).add_int(-2).sign() != Sign::Minus {
        return domain(format!("δ = {delta} is not below (2 − q)/3"));
    }
    let digits = quasi_greedy_digits(&qe.add(&d), LOCAL_DIGITS);
    let alpha_upper = alpha_over_approximation(&digits)?;
    let (_, h) = entropy_of_alpha(&alpha_upper, 1)?;
    let (_, hh) = h.log_bounds();
    let (ql, _) = q.interval_bits(80);
    let log_lo = down(ln_rat(&(ql - delta)));
    if log_lo <= 0.0 {
        return domain("q − δ must exceed 1");
    }
    Ok(LocalBound {
        delta: delta.to_string(),
        alpha_upper,
        entropy_hi: hh,
        log_lo,
        bound: [0.0, up(2.0 * hh / log_lo)],
        states: h.states,
    })
}

/// A base just above `q_KL`: `α = (t₁⋯t_L)^∞` for the longest prefix of `ω_n` that is
/// quasi-greedy and exceeds the Thue–Morse expansion.
pub fn kl_upper_approximant(n: usize) -> Result<AlgBase> {
    let comp = ComponentSpec::first();
    let w = omega(&comp, n);
    let tm = EPSeq::finite(&omega(&comp, n + 2));
    for l in (1..=w.len()).rev() {
        let s = EPSeq::periodic(w.slice(0, l))?;
        if s > tm && parry_check(&s)? {
            return crate::bases::base_from_alpha(&s);
        }
    }
    Ok(AlgBase::two())
}

/// Search `δ = 2^{-k}`, `k = 2..=kmax`, for a local bound below 1 at `q`.
pub fn local_bound_below_one(q: &AlgBase, kmax: u32) -> Result<LocalBound> {
    for k in 2..=kmax {
        let delta = BigRational::new(BigInt::one(), BigInt::one() << k);
        match b2_local_bound(q, &delta) {
            Ok(b) if b.bound[1] < 1.0 => return Ok(b),
            Ok(_) | Err(Error::Domain(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NotFoundWithinBounds(format!("no δ = 2^-k, k ≤ {kmax}, gives a bound below 1")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::base_from_alpha;

    fn e(s: &str) -> EPSeq {
        s.parse().unwrap()
    }

    #[test]
    fn full_shift() {
        let (aut, h) = entropy_of_alpha(&EPSeq::ones(), 10).unwrap();
        let c = aut.path_counts(10);
        assert_eq!(c[10], BigUint::from(1024u32));
        assert!(matches!(&h.radius, SpectralRadius::Exact(l) if l.is_two()));
        let d = dim_from_entropy(&AlgBase::two(), &h);
        assert!(d.exact && d.lo == 1.0);
    }

    #[test]
    fn golden_ratio_has_two_sequences() {
        let (aut, h) = entropy_of_alpha(&e("(10)"), 12).unwrap();
        assert!(aut.path_counts(12).iter().skip(1).all(|c| *c == BigUint::from(2u32)));
        assert!(h.is_zero());
    }

    #[test]
    fn charpoly_small() {
        // [[1,1],[1,0]] → x² − x − 1
        let p = charpoly(&[vec![1, 1], vec![1, 0]]);
        assert_eq!(p, IntPoly::from_i64(&[-1, -1, 1]));
        let p = charpoly(&[vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]]);
        assert_eq!(p, IntPoly::from_i64(&[-1, -1, 0, 1]));
    }

    #[test]
    fn enclosure_matches_exact() {
        let m = vec![vec![1, 1], vec![1, 0]];
        let (lo, hi) = enclosure(&m);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!(lo.to_f64().unwrap() <= phi + 1e-12 && hi.to_f64().unwrap() >= phi - 1e-12);
        assert!(hi.to_f64().unwrap() - lo.to_f64().unwrap() < 1e-9);
    }

    #[test]
    fn positive_entropy_above_kl() {
        let q = base_from_alpha(&e("(1110)")).unwrap();
        let h = entropy(&q, 16).unwrap();
        let (lo, hi) = h.log_bounds();
        assert!(lo > 0.0);
        let fb = h.finite_bounds();
        assert!(fb.iter().all(|&b| b >= lo - 1e-12));
        assert!(hi < 2f64.ln());
    }

    #[test]
    fn over_approximation() {
        let s = alpha_over_approximation(&[1, 1, 0, 1, 0, 0, 1, 1]).unwrap();
        assert_eq!(s, e("(110100)"));
        let s = alpha_over_approximation(&[1, 1, 1, 0, 0, 0]).unwrap();
        assert_eq!(s, e("(111000)"));
    }
}
