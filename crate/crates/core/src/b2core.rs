//! The two-expansion function `f_{c,d}(q) = (1c)_q + (1d)_q - (1^∞)_q`, its roots,
//! admissibility of the defining sequences, and explicit witness constructions.

use num_bigint::Sign;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::algebraic::{AlgBase, FieldElem};
use crate::bases::{alpha_sequence, base_from_alpha};
use crate::classify::{classify_alpha, in_a_prime_alpha, ALPHA_SEARCH};
use crate::enumerate::{repr_to_seq, ReprVector};
use crate::error::{domain, Error, Result};
use crate::factor::strip_cyclotomic;
use crate::poly::IntPoly;
use crate::words::{ComponentSpec, EPSeq, Word};

/// Which part of the monotonicity trichotomy on `[q_f, 2]` applies to a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MonotoneCase {
    /// `c ≥ 010^∞` or `d ≥ 010^∞`: `f > 0`.
    PositiveI,
    /// `c ≥ 0³10^∞, d ≥ 0²10^∞` or the symmetric case: `f > 0`.
    PositiveII,
    /// `f` is strictly increasing.
    IncreasingIII,
}

/// `x³ - 2x² + x - 1`, whose root in `(1, 2)` is `q_f`.
pub fn qf_poly() -> IntPoly {
    IntPoly::from_i64(&[-1, 1, -2, 1])
}

/// `x⁴ - 2x² - x - 1`, whose root in `(1, 2)` is `q_s`.
pub fn qs_poly() -> IntPoly {
    IntPoly::from_i64(&[-1, -1, -2, 0, 1])
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Exact `f_{c,d}(q)` in the number field of `q`.
pub fn f_eval(c: &EPSeq, d: &EPSeq, q: &AlgBase) -> FieldElem {
    let inv_q = q.gen().inv().expect("q is nonzero");
    let inv_q1 = q.gen().add_int(-1).inv().expect("q exceeds 1");
    let s = q.eval(c).add_int(1).add(&q.eval(d).add_int(1));
    s.mul(&inv_q).sub(&inv_q1)
}

/// Exact `f_{c,d}(q)` at a rational `q > 1`.
pub fn f_eval_rational(c: &EPSeq, d: &EPSeq, q: &BigRational) -> Result<BigRational> {
    let one = BigRational::one();
    if *q <= one {
        return domain("base must exceed 1");
    }
    let vc = c.eval_rational(q)?;
    let vd = d.eval_rational(q)?;
    Ok((vc + vd + rat(2, 1)) / q - one.clone() / (q - one))
}

/// Numerator of `f_{c,d}` over the positive denominator `q·D_c·D_d·(q-1)`.
/// Monic, and of the same sign as `f` on `(1, ∞)`.
pub fn f_numerator(c: &EPSeq, d: &EPSeq) -> IntPoly {
    let (nc, dc) = c.series();
    let (nd, dd) = d.series();
    numerator_from(&dc.add(&nc), &dc, &dd.add(&nd), &dd)
}

/// `(x-1)(A_c B_d + A_d B_c) - x B_c B_d` with `A = D + N`, `B = D`.
pub(crate) fn numerator_from(ac: &IntPoly, bc: &IntPoly, ad: &IntPoly, bd: &IntPoly) -> IntPoly {
    let x1 = IntPoly::from_i64(&[-1, 1]);
    let s = ac.mul(bd).add(&ad.mul(bc));
    x1.mul(&s).sub(&bc.mul(bd).shift(1))
}

/// Squarefree part of the numerator with factors `x` and small cyclotomic factors removed;
/// monic, and vanishing at every root of `f_{c,d}` in `(1, 2]`.
pub fn f_minpoly(c: &EPSeq, d: &EPSeq) -> IntPoly {
    let p = strip_cyclotomic(&f_numerator(c, d).squarefree());
    if p.lc().is_negative() {
        p.neg()
    } else {
        p
    }
}

pub fn monotone_case(c: &EPSeq, d: &EPSeq) -> MonotoneCase {
    let t1 = EPSeq::finite(&w("01"));
    let t2 = EPSeq::finite(&w("001"));
    let t3 = EPSeq::finite(&w("0001"));
    if *c >= t1 || *d >= t1 {
        MonotoneCase::PositiveI
    } else if (*c >= t3 && *d >= t2) || (*c >= t2 && *d >= t3) {
        MonotoneCase::PositiveII
    } else {
        MonotoneCase::IncreasingIII
    }
}

fn w(s: &str) -> Word {
    s.parse().expect("literal word")
}

fn check_bracket(lo: &BigRational, hi: &BigRational) -> Result<()> {
    if *lo < BigRational::one() || *hi > rat(2, 1) || lo >= hi {
        return domain(format!("bracket [{lo}, {hi}] must satisfy 1 ≤ lo < hi ≤ 2"));
    }
    Ok(())
}

/// True if the rational `x` is at least `q_f`.
fn at_least_qf(x: &BigRational) -> bool {
    qf_poly().sign_at(x) != Sign::Minus
}

/// Every root of `f_{c,d}` in `(lo, hi]`, ascending.
pub fn solve_all(c: &EPSeq, d: &EPSeq, lo: &BigRational, hi: &BigRational) -> Result<Vec<AlgBase>> {
    check_bracket(lo, hi)?;
    let g = f_minpoly(c, d);
    if g.degree() == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (a, b) in g.isolate_roots(lo, hi) {
        if g.sign_at(&b) == Sign::NoSign && b == rat(2, 1) {
            out.push(AlgBase::two());
            continue;
        }
        out.push(AlgBase::from_bracket(&g, &a, &b)?);
    }
    Ok(out)
}

/// The root of `f_{c,d}` in `(lo, hi]`.
///
/// On brackets inside `[q_f, 2]` the pair's case is checked first and a sign change
/// at the endpoints decides. Brackets reaching below `q_f` are handled by exact root
/// isolation and fail if more than one root is found.
pub fn solve_qcd(c: &EPSeq, d: &EPSeq, lo: &BigRational, hi: &BigRational) -> Result<Option<AlgBase>> {
    check_bracket(lo, hi)?;
    if at_least_qf(lo) {
        let case = monotone_case(c, d);
        if case != MonotoneCase::IncreasingIII {
            return Err(Error::NoRootByCase(format!("{case:?}: f > 0 on [q_f, 2]")));
        }
        let nf = f_numerator(c, d);
        let sh = nf.sign_at(hi);
        if sh == Sign::NoSign {
            // a monic integer polynomial has only integer rational roots
            return Ok(Some(AlgBase::two()));
        }
        if nf.sign_at(lo) != Sign::Minus || sh != Sign::Plus {
            return Ok(None);
        }
        return AlgBase::from_bracket(&nf, lo, hi).map(Some);
    }
    let mut roots = solve_all(c, d, lo, hi)?;
    match roots.len() {
        0 => Ok(None),
        1 => Ok(roots.pop()),
        k => domain(format!("f has {k} roots in ({lo}, {hi}]; narrow the bracket")),
    }
}

/// The quasi-greedy sequence whose strict follower conditions describe `A'_q`.
///
/// For `q` in `(q_{n-1}, q_n]` of the first component this is `α(q_n) = (ω_n⁻)^∞`,
/// located by exact sign tests; otherwise `α(q)` itself.
pub fn governing_alpha(q: &AlgBase) -> Result<EPSeq> {
    if let Some(a) = q.alpha_hint() {
        return Ok(a.clone());
    }
    let comp = ComponentSpec::first();
    for om in comp.omegas(LOCATE_DEPTH).into_iter().skip(1) {
        let a = EPSeq::periodic(om.dec()?)?;
        let (n, d) = a.series();
        // q ≤ q_n  ⟺  (α(q_n))_q ≥ 1
        if q.sign_of(&n.sub(&d)) != Sign::Minus {
            return Ok(a);
        }
    }
    alpha_sequence(q, ALPHA_SEARCH)
}

const LOCATE_DEPTH: usize = 10;

/// `s ∈ A'_q`.
pub fn admissible_at(s: &EPSeq, q: &AlgBase) -> Result<bool> {
    Ok(in_a_prime_alpha(s, &governing_alpha(q)?))
}

/// A base in `B₂` together with the pair `(c, d)` solving `f_{c,d}(q) = 0`.
#[derive(Clone, Debug)]
pub struct B2Witness {
    pub c: EPSeq,
    pub d: EPSeq,
    pub root: AlgBase,
    /// The monic numerator of `f_{c,d}`.
    pub fpoly: IntPoly,
    /// `c, d ∈ A'_root`.
    pub admissible: bool,
    pub repr_vectors: Option<(ReprVector, ReprVector)>,
    /// Every vector pair found for this root, including `repr_vectors`.
    pub representations: Vec<(ReprVector, ReprVector)>,
    pub derived_order: Option<usize>,
}

impl B2Witness {
    /// Builds the witness and checks admissibility at the root.
    pub fn new(c: EPSeq, d: EPSeq, root: AlgBase) -> Result<B2Witness> {
        let alpha = governing_alpha(&root)?;
        let admissible = in_a_prime_alpha(&c, &alpha) && in_a_prime_alpha(&d, &alpha);
        let fpoly = f_numerator(&c, &d);
        Ok(B2Witness {
            c,
            d,
            root,
            fpoly,
            admissible,
            repr_vectors: None,
            representations: Vec::new(),
            derived_order: None,
        })
    }

    /// `f_{c,d}(root)`, exactly zero for a valid witness.
    pub fn residual(&self) -> FieldElem {
        f_eval(&self.c, &self.d, &self.root)
    }

    pub fn to_json(&self, digits: usize) -> serde_json::Value {
        let minpoly: Vec<serde_json::Value> = self
            .root
            .minpoly()
            .coeffs()
            .iter()
            .map(|x| match i64::try_from(x) {
                Ok(v) => v.into(),
                Err(_) => x.to_string().into(),
            })
            .collect();
        let reprs: Vec<String> = self.representations.iter().map(|(a, b)| format!("{a} {b}")).collect();
        serde_json::json!({
            "c": self.c.to_string(),
            "d": self.d.to_string(),
            "minpoly": minpoly,
            "root": self.root.approx(digits),
            "admissible": self.admissible,
            "derived_order": self.derived_order,
            "representations": reprs,
        })
    }
}

/// Solve on the bracket and check admissibility at the root.
pub fn certify_b2(c: &EPSeq, d: &EPSeq, lo: &BigRational, hi: &BigRational) -> Result<Option<B2Witness>> {
    match solve_qcd(c, d, lo, hi)? {
        None => Ok(None),
        Some(root) => B2Witness::new(c.clone(), d.clone(), root).map(Some),
    }
}

/// `(a_i)` with `reflect(a) ≤ σⁿ a ≤ a` for all `n ≥ 1`.
pub fn in_v_prime(a: &EPSeq) -> bool {
    classify_alpha(a).violation.is_none()
}

/// The pair `c = reflect(a⁺) a^∞`, `d = 0^{2m} reflect(a)^∞` for a block `a = a_1…a_m`,
/// whose root is the base with `α(q) = (a⁺ reflect(a⁺))^∞`.
pub fn witness_for_v_base(gen: &Word) -> Result<(EPSeq, EPSeq)> {
    let m = gen.len();
    if m < 2 {
        return domain("the block must have length at least 2");
    }
    let top = gen.inc()?;
    let a = EPSeq::periodic(gen.clone())?;
    let alpha = EPSeq::periodic(top.concat(&top.reflect()))?;
    if !in_v_prime(&a) || !in_v_prime(&alpha) {
        return domain(format!("({gen})^∞ or {alpha} violates the V' conditions"));
    }
    let c = EPSeq::new(top.reflect(), gen.clone())?;
    let d = EPSeq::new(Word::zeros(2 * m), gen.reflect())?;
    Ok((c, d))
}

/// The witness at the base `α(q) = (a⁺ reflect(a⁺))^∞` for the block `gen`.
pub fn v_base_witness(gen: &Word) -> Result<B2Witness> {
    let (c, d) = witness_for_v_base(gen)?;
    let top = gen.inc()?;
    let root = base_from_alpha(&EPSeq::periodic(top.concat(&top.reflect()))?)?;
    B2Witness::new(c, d, root)
}

/// Initial words and vectors of the sign-changing pair on `(q_n, q_{n+1})`, `n ≥ 2`.
pub fn prop62_vectors(comp: &ComponentSpec, n: usize) -> Result<((Word, ReprVector), (Word, ReprVector))> {
    if n < 2 {
        return domain("the pair exists only for n ≥ 2");
    }
    let om0 = comp.omegas(0).pop().expect("ω₀");
    let big = 1usize.checked_shl(n as u32).and_then(|p| p.checked_mul(comp.m()));
    let big = big.ok_or_else(|| Error::Domain(format!("n = {n} too large")))?;
    let w = Word::zeros(big).concat(&om0.reflect());
    let v = ReprVector::new(vec![0], vec![], vec![1])?;
    let wt = om0.reflect();
    let vt = ReprVector::new((0..n - 1).collect(), vec![0; n - 2], vec![1; n - 1])?;
    Ok(((w, v), (wt, vt)))
}

/// `c = 0^{2ⁿm} reflect(ω₀) ω₀⁻ (ω₀ reflect(ω₀))^∞` and
/// `d = reflect(ω₀) ω₀⁻ (ω₀ reflect(ω₀)) ⋯ (ω_{n-2} reflect(ω_{n-2}))^∞`.
pub fn prop62_pair(comp: &ComponentSpec, n: usize) -> Result<(EPSeq, EPSeq)> {
    let ((w, v), (wt, vt)) = prop62_vectors(comp, n)?;
    Ok((udiff_generate(comp, &w, &v)?, udiff_generate(comp, &wt, &vt)?))
}

/// `ω (ω₀⁻)^{j₀} (ω_{k₁} reflect(ω_{k₁}))^{j₁} (ω_{k₁} reflect(ω_{k₂}))^{s₂} ⋯ (ω_{k_m} reflect(ω_{k_m}))^∞`
/// for a nonempty initial word `ω`.
pub fn udiff_generate(comp: &ComponentSpec, initial: &Word, v: &ReprVector) -> Result<EPSeq> {
    if initial.is_empty() {
        return domain("the initial word must be nonempty");
    }
    repr_to_seq(v, comp, initial)
}
