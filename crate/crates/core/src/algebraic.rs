//! Real algebraic bases in `(1, 2]` and exact arithmetic in their number fields.
//!
//! A base is an irreducible monic integer polynomial together with a dyadic
//! isolating interval. Signs of field elements are decided by an exact zero
//! test (reduction modulo the minimal polynomial) followed by interval
//! evaluation on successively refined intervals.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{domain, Result};
use crate::factor::irreducible_factor_with;
use crate::poly::{IntPoly, RatPoly};
use crate::words::EPSeq;

const INITIAL_BITS: u64 = 96;

/// Dyadic interval `[lo, hi] / 2^bits` holding the root.
#[derive(Clone, Debug)]
struct Dyadic {
    lo: BigInt,
    hi: BigInt,
    bits: u64,
}

impl Dyadic {
    fn to_rationals(&self) -> (BigRational, BigRational) {
        let d = BigInt::one() << self.bits;
        (BigRational::new(self.lo.clone(), d.clone()), BigRational::new(self.hi.clone(), d))
    }
}

struct Inner {
    minpoly: IntPoly,
    iv: Dyadic,
    /// Sign of the minimal polynomial just left of the root.
    left_sign: Sign,
    alpha: Option<EPSeq>,
}

/// A real algebraic number `q ∈ (1, 2]`.
#[derive(Clone)]
pub struct AlgBase(Arc<Inner>);

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl AlgBase {
    /// The base 2.
    pub fn two() -> AlgBase {
        let bits = INITIAL_BITS;
        let hi = BigInt::from(2) << bits;
        AlgBase(Arc::new(Inner {
            minpoly: IntPoly::from_i64(&[-2, 1]),
            iv: Dyadic { lo: &hi - 1, hi, bits },
            left_sign: Sign::Minus,
            alpha: Some(EPSeq::ones()),
        }))
    }

    /// The root of `p` in `(lo, hi]`, which the caller guarantees to be the only one there.
    /// `p` need not be irreducible or squarefree.
    pub fn from_bracket(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<AlgBase> {
        if *lo < BigRational::one() || hi > &rat(2, 1) || lo >= hi {
            return domain(format!("bracket [{lo}, {hi}] not inside [1, 2]"));
        }
        let sf = p.squarefree();
        if sf.degree() == 0 {
            return domain("constant polynomial has no root");
        }
        if sf.sign_at(hi) == Sign::NoSign {
            if *hi == rat(2, 1) {
                return Ok(Self::two());
            }
            return domain(format!("rational root {hi} is not a supported base"));
        }
        let mut lo = lo.clone();
        let hi = hi.clone();
        if sf.sign_at(&lo) == Sign::NoSign {
            // the root sits strictly above lo; step inward until lo is not a root
            let mut step = (&hi - &lo) / rat(2, 1);
            loop {
                let c = &lo + &step;
                if sf.sign_at(&c) != Sign::NoSign && sf.count_roots(&lo, &c) == 0 {
                    lo = c;
                    break;
                }
                step /= rat(2, 1);
            }
        }
        let (sl, sh) = (sf.sign_at(&lo), sf.sign_at(&hi));
        if sl == sh {
            return domain(format!("{p} does not change sign on [{lo}, {hi}]"));
        }
        let f = irreducible_factor_with(&sf, |g| g.sign_at(&lo) != g.sign_at(&hi));
        let f = if f.lc().is_negative() { f.neg() } else { f };
        if !f.is_monic() {
            return domain(format!("{f} is not monic"));
        }
        if f.degree() == 1 {
            let r = BigRational::new(-f.coeff(0), BigInt::one());
            if r == rat(2, 1) {
                return Ok(Self::two());
            }
            return domain(format!("rational root {r} is not a supported base"));
        }
        let left = f.sign_at(&lo);
        // rational bisection, then snap to a dyadic interval inside the bracket
        let (mut a, mut b) = (lo, hi);
        let width = BigRational::new(BigInt::one(), BigInt::one() << 40);
        while &b - &a > width {
            let m = (&a + &b) / rat(2, 1);
            match f.sign_at(&m) {
                Sign::NoSign => unreachable!("irreducible of degree > 1 has no rational root"),
                s if s == left => a = m,
                _ => b = m,
            }
        }
        let mut bits = 48u64;
        let iv = loop {
            let scale = BigRational::from_integer(BigInt::one() << bits);
            let l = (&a * &scale).ceil().to_integer();
            let h = (&b * &scale).floor().to_integer();
            if l < h
                && f.sign_at_dyadic(&l, bits) == left
                && f.sign_at_dyadic(&h, bits) == -left
            {
                break Dyadic { lo: l, hi: h, bits };
            }
            bits += 16;
        };
        let mut base = Inner { minpoly: f, iv, left_sign: left, alpha: None };
        refine(&mut base.iv, &base.minpoly, base.left_sign, INITIAL_BITS);
        Ok(AlgBase(Arc::new(base)))
    }

    /// Base from a user-supplied polynomial and interval, checking that the interval isolates one root.
    pub fn from_poly_checked(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<AlgBase> {
        let sf = p.squarefree();
        if sf.sign_at(lo) == Sign::NoSign && *lo > BigRational::one() {
            return domain("interval endpoint is a root");
        }
        if sf.count_roots(lo, hi) != 1 {
            return domain(format!("{p} does not have exactly one root in ({lo}, {hi}]"));
        }
        Self::from_bracket(p, lo, hi)
    }

    /// Attach a known quasi-greedy expansion of 1.
    pub fn with_alpha(&self, alpha: EPSeq) -> AlgBase {
        AlgBase(Arc::new(Inner {
            minpoly: self.0.minpoly.clone(),
            iv: self.0.iv.clone(),
            left_sign: self.0.left_sign,
            alpha: Some(alpha),
        }))
    }

    pub fn alpha_hint(&self) -> Option<&EPSeq> {
        self.0.alpha.as_ref()
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.0.minpoly
    }

    pub fn degree(&self) -> usize {
        self.0.minpoly.degree()
    }

    pub fn is_two(&self) -> bool {
        self.degree() == 1
    }

    /// Current isolating interval.
    pub fn interval(&self) -> (BigRational, BigRational) {
        self.0.iv.to_rationals()
    }

    /// Isolating interval of width at most `2^-bits`.
    pub fn interval_bits(&self, bits: u64) -> (BigRational, BigRational) {
        if self.is_two() {
            return (rat(2, 1) - BigRational::new(1.into(), BigInt::one() << bits), rat(2, 1));
        }
        let mut iv = self.0.iv.clone();
        refine(&mut iv, &self.0.minpoly, self.0.left_sign, bits);
        iv.to_rationals()
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.interval_bits(60);
        ((lo + hi) / rat(2, 1)).to_f64().unwrap_or(f64::NAN)
    }

    /// Sign of `g(q)`.
    pub fn sign_of(&self, g: &IntPoly) -> Sign {
        let r = g.rem_monic(&self.0.minpoly);
        if r.is_zero() {
            return Sign::NoSign;
        }
        if r.degree() == 0 {
            return r.coeff(0).sign();
        }
        if self.is_two() {
            return r.eval_int(&BigInt::from(2)).sign();
        }
        let mut iv = self.0.iv.clone();
        loop {
            if let Some(s) = horner_sign(&r, &iv) {
                return s;
            }
            let target = iv.bits + (iv.bits / 2).max(32);
            refine(&mut iv, &self.0.minpoly, self.0.left_sign, target);
        }
    }

    /// Sign of `q - x`.
    pub fn cmp_rational(&self, x: &BigRational) -> Ordering {
        let g = IntPoly::new(vec![-x.numer().clone(), x.denom().clone()]);
        match self.sign_of(&g) {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    /// Exact comparison of two algebraic bases.
    pub fn cmp_base(&self, o: &AlgBase) -> Ordering {
        if self.minpoly() == o.minpoly() {
            let (a, b) = (self.interval(), o.interval());
            if a.0 <= b.1 && b.0 <= a.1 {
                return Ordering::Equal;
            }
            return a.0.cmp(&b.0);
        }
        let mut bits = INITIAL_BITS;
        loop {
            let (a, b) = (self.interval_bits(bits), o.interval_bits(bits));
            if a.1 < b.0 {
                return Ordering::Less;
            }
            if b.1 < a.0 {
                return Ordering::Greater;
            }
            bits *= 2;
        }
    }

    /// Decimal string with `digits` digits after the point, truncated; every printed digit is certified.
    pub fn approx(&self, digits: usize) -> String {
        let ten = BigInt::from(10).pow(digits as u32);
        let int = if self.is_two() {
            BigInt::from(2) * &ten
        } else {
            let mut bits = INITIAL_BITS.max((digits as f64 * 3.33) as u64 + 16);
            loop {
                let (lo, hi) = self.interval_bits(bits);
                let a = (lo * BigRational::from_integer(ten.clone())).floor().to_integer();
                let b = (hi * BigRational::from_integer(ten.clone())).floor().to_integer();
                if a == b {
                    break a;
                }
                bits += 32;
            }
        };
        let (ip, fp) = int.div_rem(&ten);
        if digits == 0 {
            return ip.to_string();
        }
        format!("{ip}.{:0>width$}", fp.to_string(), width = digits)
    }

    /// The element `q` of the number field.
    pub fn gen(&self) -> FieldElem {
        FieldElem::from_poly(self, &IntPoly::from_i64(&[0, 1]), &BigInt::one())
    }

    pub fn from_int(&self, a: i64) -> FieldElem {
        FieldElem::from_poly(self, &IntPoly::from_i64(&[a]), &BigInt::one())
    }

    pub fn from_rational(&self, x: &BigRational) -> FieldElem {
        FieldElem::from_poly(self, &IntPoly::constant(x.numer().clone()), x.denom())
    }

    /// Exact value of the sequence at this base.
    pub fn eval(&self, s: &EPSeq) -> FieldElem {
        let (n, d) = s.series();
        let n = FieldElem::from_poly(self, &n, &BigInt::one());
        let d = FieldElem::from_poly(self, &d, &BigInt::one());
        n.div(&d).expect("denominator positive")
    }

    pub fn to_json(&self, digits: usize) -> serde_json::Value {
        let (lo, hi) = self.interval();
        serde_json::json!({
            "minpoly": self.minpoly().coeffs().iter().map(|c| c.to_string().parse::<serde_json::Number>().map(serde_json::Value::Number).unwrap_or_else(|_| serde_json::Value::String(c.to_string()))).collect::<Vec<_>>(),
            "interval": [lo.to_string(), hi.to_string()],
            "approx": self.approx(digits),
        })
    }
}

/// Bisect until the interval has at least `bits` bits of precision.
fn refine(iv: &mut Dyadic, p: &IntPoly, left: Sign, bits: u64) {
    while iv.bits < bits {
        let lo2 = &iv.lo << 1;
        let hi2 = &iv.hi << 1;
        let mid = &iv.lo + &iv.hi;
        let b = iv.bits + 1;
        let s = p.sign_at_dyadic(&mid, b);
        debug_assert!(s != Sign::NoSign);
        if s == left {
            *iv = Dyadic { lo: mid, hi: hi2, bits: b };
        } else {
            *iv = Dyadic { lo: lo2, hi: mid, bits: b };
        }
    }
}

/// Interval Horner evaluation on `[lo, hi] / 2^bits` (positive endpoints);
/// `Some(sign)` when the enclosure excludes zero.
fn horner_sign(g: &IntPoly, iv: &Dyadic) -> Option<Sign> {
    let c = g.coeffs();
    let d = c.len() - 1;
    let (l, h) = (&iv.lo, &iv.hi);
    let mut a = c[d].clone();
    let mut b = c[d].clone();
    for i in (0..d).rev() {
        let (na, nb) = if !a.is_negative() {
            (&a * l, &b * h)
        } else if !b.is_positive() {
            (&a * h, &b * l)
        } else {
            (&a * h, &b * h)
        };
        let t = &c[i] << (iv.bits * (d - i) as u64);
        a = na + &t;
        b = nb + t;
    }
    if a.is_positive() {
        Some(Sign::Plus)
    } else if b.is_negative() {
        Some(Sign::Minus)
    } else {
        None
    }
}

impl PartialEq for AlgBase {
    fn eq(&self, o: &Self) -> bool {
        self.cmp_base(o) == Ordering::Equal
    }
}

impl Eq for AlgBase {}

impl PartialOrd for AlgBase {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for AlgBase {
    fn cmp(&self, o: &Self) -> Ordering {
        self.cmp_base(o)
    }
}

impl fmt::Debug for AlgBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgBase({} ≈ {})", self.minpoly(), self.approx(12))
    }
}

impl fmt::Display for AlgBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.approx(12))
    }
}

impl Serialize for AlgBase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json(30).serialize(s)
    }
}

/// Element of `Q(q)`: `num(q) / den` with `deg num < deg minpoly`, `den > 0` and
/// `gcd(content(num), den) = 1`.
#[derive(Clone)]
pub struct FieldElem {
    base: AlgBase,
    num: IntPoly,
    den: BigInt,
}

impl FieldElem {
    pub fn from_poly(base: &AlgBase, num: &IntPoly, den: &BigInt) -> FieldElem {
        assert!(!den.is_zero());
        let num = num.rem_monic(base.minpoly());
        let mut e = FieldElem { base: base.clone(), num, den: den.clone() };
        e.normalize();
        e
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            self.num = self.num.neg();
        }
        if self.num.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let g = self.num.content().gcd(&self.den);
        if !g.is_one() {
            self.num = IntPoly::new(self.num.coeffs().iter().map(|c| c / &g).collect());
            self.den = &self.den / &g;
        }
    }

    pub fn base(&self) -> &AlgBase {
        &self.base
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn sign(&self) -> Sign {
        self.base.sign_of(&self.num)
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        let num = self.num.scale(&o.den).add(&o.num.scale(&self.den));
        FieldElem::from_poly(&self.base, &num, &(&self.den * &o.den))
    }

    pub fn sub(&self, o: &FieldElem) -> FieldElem {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem { base: self.base.clone(), num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &FieldElem) -> FieldElem {
        FieldElem::from_poly(&self.base, &self.num.mul(&o.num), &(&self.den * &o.den))
    }

    /// Multiply by `q`.
    pub fn mul_gen(&self) -> FieldElem {
        FieldElem::from_poly(&self.base, &self.num.shift(1), &self.den)
    }

    pub fn add_int(&self, a: i64) -> FieldElem {
        let num = self.num.add(&IntPoly::constant(&self.den * a));
        FieldElem::from_poly(&self.base, &num, &self.den)
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return domain("division by zero in number field");
        }
        let m = RatPoly::from_int(self.base.minpoly());
        let inv = RatPoly::from_int(&self.num)
            .inverse_mod(&m)
            .expect("minimal polynomial is irreducible");
        let mut den = BigInt::one();
        for c in inv.coeffs() {
            den = den.lcm(c.denom());
        }
        let num = IntPoly::new(
            inv.coeffs()
                .iter()
                .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
                .collect(),
        );
        // (num/den)^{-1} * self.den
        Ok(FieldElem::from_poly(&self.base, &num.scale(&self.den), &den))
    }

    pub fn div(&self, o: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn cmp_elem(&self, o: &FieldElem) -> Ordering {
        match self.sub(o).sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.base.interval_bits(60);
        let x = (lo + hi) / rat(2, 1);
        let v = self.num.eval_rat(&x) / BigRational::from_integer(self.den.clone());
        v.to_f64().unwrap_or(f64::NAN)
    }

    /// Rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.degree() == 0 {
            Some(BigRational::new(self.num.coeff(0), self.den.clone()))
        } else {
            None
        }
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, o: &Self) -> bool {
        self.num == o.num && self.den == o.den
    }
}

impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.num.hash(h);
        self.den.hash(h);
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / {}", self.num, self.den)
    }
}
