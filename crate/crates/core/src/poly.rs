//! Dense univariate polynomials over Z and Q, with Sturm-sequence root counting.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer polynomial, coefficients stored lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    c: Vec<BigInt>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
}

impl IntPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        trim(&mut c);
        IntPoly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(a: BigInt) -> Self {
        Self::new(vec![a])
    }

    /// `a * x^k`
    pub fn monomial(a: BigInt, k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k];
        c.push(a);
        Self::new(c)
    }

    /// Polynomial with 0/1 coefficients read from `digits`, highest power first:
    /// `digits = d_1..d_n` gives `d_1 x^{n-1} + ... + d_n`.
    pub fn from_digits(digits: &[u8]) -> Self {
        Self::new(digits.iter().rev().map(|&d| BigInt::from(d)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.c.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.c.last().is_some_and(|x| x.is_one())
    }

    pub fn add(&self, o: &IntPoly) -> IntPoly {
        let n = self.c.len().max(o.c.len());
        let mut r = Vec::with_capacity(n);
        for i in 0..n {
            r.push(self.coeff(i) + o.coeff(i));
        }
        Self::new(r)
    }

    pub fn sub(&self, o: &IntPoly) -> IntPoly {
        let n = self.c.len().max(o.c.len());
        let mut r = Vec::with_capacity(n);
        for i in 0..n {
            r.push(self.coeff(i) - o.coeff(i));
        }
        Self::new(r)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut r = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    r[i + j] += a * b;
                }
            }
        }
        Self::new(r)
    }

    pub fn scale(&self, a: &BigInt) -> IntPoly {
        Self::new(self.c.iter().map(|x| x * a).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.c.iter().cloned());
        IntPoly { c }
    }

    pub fn derivative(&self) -> IntPoly {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * BigInt::from(i))
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        Self::new(self.c.iter().map(|x| x / &g).collect())
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero(), "pseudo-division by zero");
        let db = b.degree();
        let lb = b.lc();
        let mut r = self.clone();
        if r.is_zero() || r.degree() < db {
            return r;
        }
        let mut extra = r.degree() - db + 1;
        while !r.is_zero() && r.degree() >= db {
            let k = r.degree() - db;
            let lr = r.lc();
            r = r.scale(&lb).sub(&b.scale(&lr).shift(k));
            extra -= 1;
        }
        if extra > 0 {
            r = r.scale(&num_traits::pow(lb, extra));
        }
        r
    }

    /// Exact quotient over Z, or `None` if `b` does not divide `self` in Z[x].
    pub fn div_exact(&self, b: &IntPoly) -> Option<IntPoly> {
        assert!(!b.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < b.degree() {
            return None;
        }
        let db = b.degree();
        let lb = b.lc();
        let mut r = self.c.clone();
        let mut q = vec![BigInt::zero(); self.degree() - db + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let (qq, rem) = top.div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            for (j, bc) in b.c.iter().enumerate() {
                r[k + j] -= &qq * bc;
            }
            q[k] = qq;
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, m: &IntPoly) -> IntPoly {
        debug_assert!(m.is_monic());
        let dm = m.degree();
        if self.c.len() <= dm {
            return self.clone();
        }
        let mut r = self.c.clone();
        for k in (dm..r.len()).rev() {
            let top = std::mem::take(&mut r[k]);
            if top.is_zero() {
                continue;
            }
            for j in 0..dm {
                if !m.c[j].is_zero() {
                    r[k - dm + j] -= &top * &m.c[j];
                }
            }
        }
        r.truncate(dm);
        Self::new(r)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, o: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = o.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Primitive squarefree part.
    pub fn squarefree(&self) -> IntPoly {
        if self.degree() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive()
            .div_exact(&g)
            .expect("gcd divides")
            .primitive()
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + BigRational::from_integer(a.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// Sign of the value at a rational point, without forming fractions.
    pub fn sign_at(&self, x: &BigRational) -> Sign {
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qp = BigInt::one();
        for a in self.c.iter().rev() {
            acc = acc * p + a * &qp;
            qp *= q;
        }
        acc.sign()
    }

    /// Sign at `m / 2^k`.
    pub fn sign_at_dyadic(&self, m: &BigInt, k: u64) -> Sign {
        let mut acc = BigInt::zero();
        for (step, a) in self.c.iter().rev().enumerate() {
            acc = acc * m + (a << (k * step as u64));
        }
        acc.sign()
    }

    /// Sturm sequence of the squarefree part.
    pub fn sturm(&self) -> Vec<IntPoly> {
        let p = self.squarefree();
        let mut seq = vec![p.clone(), p.derivative().primitive()];
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.is_zero() || b.degree() == 0 {
                break;
            }
            let mut r = a.pseudo_rem(b);
            let odd = (a.degree() - b.degree() + 1) % 2 == 1;
            if b.lc().is_negative() && odd {
                r = r.neg();
            }
            if r.is_zero() {
                break;
            }
            let r = r.neg();
            let g = r.content();
            let r = IntPoly::new(r.c.iter().map(|x| x / &g).collect());
            seq.push(r);
        }
        seq
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let s = self.sturm();
        let va = variations(&s, lo);
        let vb = variations(&s, hi);
        va.saturating_sub(vb)
    }

    /// Isolating intervals `(a, b]` for the distinct real roots in `(lo, hi]`, ascending.
    pub fn isolate_roots(&self, lo: &BigRational, hi: &BigRational) -> Vec<(BigRational, BigRational)> {
        let s = self.sturm();
        let mut out = Vec::new();
        let mut stack = vec![(lo.clone(), hi.clone(), variations(&s, lo), variations(&s, hi))];
        while let Some((a, b, va, vb)) = stack.pop() {
            let n = va.saturating_sub(vb);
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push((a, b));
                continue;
            }
            let mid = (&a + &b) / BigRational::from_integer(2.into());
            let vm = variations(&s, &mid);
            stack.push((mid.clone(), b, vm, vb));
            stack.push((a, mid, va, vm));
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }
}

fn variations(seq: &[IntPoly], x: &BigRational) -> usize {
    let mut last = Sign::NoSign;
    let mut v = 0;
    for p in seq {
        let s = p.sign_at(x);
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coef = !mag.is_one() || i == 0;
            if show_coef {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Rational polynomial; only what the number-field inverse needs.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatPoly {
    c: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        trim(&mut c);
        RatPoly { c }
    }

    pub fn from_int(p: &IntPoly) -> Self {
        Self::new(p.c.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn coeff(&self, i: usize) -> BigRational {
        self.c.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn sub(&self, o: &RatPoly) -> RatPoly {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::default();
        }
        let mut r = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                r[i + j] += a * b;
            }
        }
        Self::new(r)
    }

    pub fn divrem(&self, b: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!b.is_zero());
        let db = b.degree();
        let lb = b.c[db].clone();
        let mut r = self.c.clone();
        if r.len() <= db {
            return (RatPoly::default(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let t = &r[k + db] / &lb;
            if t.is_zero() {
                continue;
            }
            for (j, bc) in b.c.iter().enumerate() {
                r[k + j] -= &t * bc;
            }
            q[k] = t;
        }
        r.truncate(db);
        (Self::new(q), Self::new(r))
    }

    /// Inverse of `self` modulo `m`, if `gcd(self, m) = 1`.
    pub fn inverse_mod(&self, m: &RatPoly) -> Option<RatPoly> {
        let (mut r0, mut r1) = (m.clone(), self.divrem(m).1);
        let (mut t0, mut t1) = (RatPoly::default(), RatPoly::new(vec![BigRational::one()]));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        if r0.degree() != 0 {
            return None;
        }
        let inv = r0.c[0].recip();
        let t = RatPoly::new(t0.c.into_iter().map(|x| x * &inv).collect());
        Some(t.divrem(m).1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x-2)
        let p = IntPoly::from_i64(&[-2, 5, -4, 1]);
        assert_eq!(p.squarefree(), IntPoly::from_i64(&[2, -3, 1]));
        let q = IntPoly::from_i64(&[-1, 1]).mul(&IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(p.gcd(&q), IntPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn exact_division() {
        let a = IntPoly::from_i64(&[-1, 1]);
        let b = IntPoly::from_i64(&[-1, 1, 1]);
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&IntPoly::from_i64(&[1, 2])), None);
        assert_eq!(p.rem_monic(&b), IntPoly::zero());
    }

    #[test]
    fn sturm_counts() {
        // x^3 - 2x^2 + x - 1 has a single real root near 1.75488
        let p = IntPoly::from_i64(&[-1, 1, -2, 1]);
        assert_eq!(p.count_roots(&rat(-10, 1), &rat(10, 1)), 1);
        assert_eq!(p.count_roots(&rat(175, 100), &rat(176, 100)), 1);
        // (x^2 - 2)(x - 3/2)
        let q = IntPoly::from_i64(&[-2, 0, 1]).mul(&IntPoly::from_i64(&[-3, 2]));
        let roots = q.isolate_roots(&rat(-2, 1), &rat(2, 1));
        assert_eq!(roots.len(), 3);
        for (a, b) in roots {
            assert_ne!(q.sign_at(&a), q.sign_at(&b));
        }
        // root exactly at the right endpoint counts
        assert_eq!(q.count_roots(&rat(142, 100), &rat(3, 2)), 1);
    }

    #[test]
    fn inverse_in_quotient_ring() {
        let m = RatPoly::from_int(&IntPoly::from_i64(&[-1, -1, 1]));
        let a = RatPoly::from_int(&IntPoly::from_i64(&[0, 1]));
        let inv = a.inverse_mod(&m).unwrap();
        let prod = a.mul(&inv).divrem(&m).1;
        assert_eq!(prod, RatPoly::new(vec![BigRational::one()]));
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64(&[-1, 1, -2, 1]).to_string(), "x^3 - 2x^2 + x - 1");
    }
}
