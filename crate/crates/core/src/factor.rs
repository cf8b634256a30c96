//! Picking out the irreducible factor of an integer polynomial that vanishes at a given root.
//!
//! Cyclotomic factors are split off first, then irreducibility of the cofactor is
//! certified from distinct-degree factorizations modulo several primes. Only when
//! that certificate fails is a full factorization over Z performed.

use std::sync::{Mutex, OnceLock};

use algebraics::polynomial::Polynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::poly::IntPoly;

fn totient(mut n: usize) -> usize {
    let mut r = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if n > 1 {
        r -= r / n;
    }
    r
}

fn cyclotomic(k: usize) -> IntPoly {
    static CACHE: OnceLock<Mutex<Vec<IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![IntPoly::zero()]));
    {
        let c = cache.lock().unwrap();
        if k < c.len() {
            return c[k].clone();
        }
    }
    let mut c = cache.lock().unwrap();
    while c.len() <= k {
        let n = c.len();
        let mut p = IntPoly::monomial(1.into(), n).sub(&IntPoly::one());
        for d in 1..n {
            if n.is_multiple_of(d) {
                p = p.div_exact(&c[d]).expect("cyclotomic division");
            }
        }
        c.push(p);
    }
    c[k].clone()
}

/// Remove factors `x` and cyclotomic factors of small order from a squarefree polynomial.
pub fn strip_cyclotomic(p: &IntPoly) -> IntPoly {
    let mut p = p.primitive();
    while !p.is_zero() && p.coeff(0).is_zero() {
        p = IntPoly::new(p.coeffs()[1..].to_vec());
    }
    let mut k = 1;
    while p.degree() > 0 && k <= 2 * p.degree() + 2 {
        if totient(k) <= p.degree() {
            let c = cyclotomic(k);
            if let Some(q) = p.div_exact(&c) {
                p = q;
                continue;
            }
        }
        k += 1;
    }
    p
}

// ---------- arithmetic over F_p ----------

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn rem_p(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let il = inv_mod(m[dm], p);
    while r.len() > dm {
        let k = r.len() - 1 - dm;
        let t = r[r.len() - 1] * il % p;
        for j in 0..=dm {
            r[k + j] = (r[k + j] + p - t * m[j] % p) % p;
        }
        trim(&mut r);
    }
    r
}

fn mul_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    trim(&mut r);
    r
}

fn gcd_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem_p(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn div_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let il = inv_mod(b[db], p);
    if r.len() <= db {
        return Vec::new();
    }
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let t = r[k + db] * il % p;
        q[k] = t;
        for j in 0..=db {
            r[k + j] = (r[k + j] + p - t * b[j] % p) % p;
        }
    }
    q
}

/// Degrees of the irreducible factors of `f` mod `p`, or `None` if `f` is not squarefree mod `p`.
fn factor_degrees_mod(f: &IntPoly, p: u64) -> Option<Vec<usize>> {
    let bp = BigInt::from(p);
    let fp: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&bp).to_u64().unwrap())
        .collect();
    let n = f.degree();
    if fp.len() != n + 1 {
        return None;
    }
    let dfp: Vec<u64> = (1..=n).map(|i| fp[i] * (i as u64 % p) % p).collect();
    if gcd_p(&fp, &dfp, p).len() != 1 {
        return None;
    }
    // Frobenius matrix: row i is x^{i p} mod f
    let mut xp = vec![1u64];
    let mut base = vec![0u64, 1];
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            xp = rem_p(&mul_p(&xp, &base, p), &fp, p);
        }
        base = rem_p(&mul_p(&base, &base, p), &fp, p);
        e >>= 1;
    }
    let mut rows = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for _ in 0..n {
        rows.push(cur.clone());
        cur = rem_p(&mul_p(&cur, &xp, p), &fp, p);
    }
    let frob = |h: &[u64]| -> Vec<u64> {
        let mut r = vec![0u64; n];
        for (i, &c) in h.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, &v) in rows[i].iter().enumerate() {
                r[j] = (r[j] + c * v) % p;
            }
        }
        trim(&mut r);
        r
    };
    let mut degs = Vec::new();
    let mut g = fp.clone();
    let mut h = vec![0u64, 1];
    let mut i = 0;
    while g.len() > 2 * (i + 1) {
        i += 1;
        h = rem_p(&frob(&h), &fp, p);
        let mut hx = h.clone();
        hx.resize(hx.len().max(2), 0);
        hx[1] = (hx[1] + p - 1) % p;
        trim(&mut hx);
        let hx = rem_p(&hx, &g, p);
        let d = gcd_p(&g, &hx, p);
        let dd = d.len() - 1;
        if dd > 0 {
            for _ in 0..dd / i {
                degs.push(i);
            }
            g = div_p(&g, &d, p);
        }
    }
    if g.len() > 1 {
        degs.push(g.len() - 1);
    }
    Some(degs)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// True if the monic polynomial is provably irreducible over Q by degree patterns mod primes.
/// A `false` answer means "not certified", not "reducible".
pub fn certify_irreducible(f: &IntPoly) -> bool {
    let n = f.degree();
    if n <= 1 {
        return true;
    }
    let mut possible = vec![true; n + 1];
    let mut tried = 0;
    let mut p = 1_000_003u64;
    while tried < 16 {
        p += 2;
        if !is_prime(p) {
            continue;
        }
        let Some(degs) = factor_degrees_mod(f, p) else {
            continue;
        };
        tried += 1;
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for d in degs {
            for s in (d..=n).rev() {
                if sums[s - d] {
                    sums[s] = true;
                }
            }
        }
        for s in 0..=n {
            possible[s] &= sums[s];
        }
        if (1..n).all(|s| !possible[s]) {
            return true;
        }
    }
    false
}

/// Full factorization into irreducible primitive factors (multiplicities dropped).
pub fn factor(p: &IntPoly) -> Vec<IntPoly> {
    let ap: Polynomial<BigInt> = p.coeffs().to_vec().into();
    ap.factor()
        .polynomial_factors
        .into_iter()
        .map(|f| IntPoly::new(f.polynomial.into_coefficients()).primitive())
        .filter(|f| f.degree() > 0)
        .collect()
}

/// The irreducible factor of `p` selected by `has_root`, which must hold for exactly one factor.
pub fn irreducible_factor_with<F: Fn(&IntPoly) -> bool>(p: &IntPoly, has_root: F) -> IntPoly {
    let q = strip_cyclotomic(&p.squarefree());
    if q.degree() <= 1 || certify_irreducible(&q) {
        return q;
    }
    factor(&q)
        .into_iter()
        .find(|f| has_root(f))
        .expect("some factor carries the root")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn thue_morse_poly(l: usize) -> IntPoly {
        let mut c = vec![0i64; l + 1];
        c[l] = 1;
        for i in 1..=l {
            c[l - i] -= (i.count_ones() % 2) as i64;
        }
        IntPoly::from_i64(&c)
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(8), IntPoly::from_i64(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn strip_ladder_polynomial() {
        // x^4 - x^3 - x^2 - x... for L=4: (x+1)(x^3 - 2x^2 + x - 1)
        let p = thue_morse_poly(4);
        assert_eq!(strip_cyclotomic(&p), IntPoly::from_i64(&[-1, 1, -2, 1]));
        let p = thue_morse_poly(16);
        let q = strip_cyclotomic(&p);
        assert_eq!(q.degree(), 9);
        assert!(certify_irreducible(&q));
    }

    #[test]
    fn reducible_not_certified() {
        let a = IntPoly::from_i64(&[-1, -1, 1]);
        let b = IntPoly::from_i64(&[-1, 1, -2, 1]);
        let p = a.mul(&b);
        assert!(!certify_irreducible(&p));
        let fs = factor(&p);
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&a) && fs.contains(&b));
    }
}
