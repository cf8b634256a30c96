//! Finite binary words, eventually periodic sequences and the ω-word recursion.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::poly::IntPoly;

/// A finite word over {0,1}.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(digits: Vec<u8>) -> Result<Word> {
        if digits.iter().any(|&d| d > 1) {
            return domain("word digits must be 0 or 1");
        }
        Ok(Word(digits))
    }

    pub(crate) fn from_vec(digits: Vec<u8>) -> Word {
        debug_assert!(digits.iter().all(|&d| d <= 1));
        Word(digits)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn zeros(n: usize) -> Word {
        Word(vec![0; n])
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn repeat(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn reflect(&self) -> Word {
        Word(self.0.iter().map(|d| 1 - d).collect())
    }

    /// `w⁺`: last digit 0 becomes 1.
    pub fn inc(&self) -> Result<Word> {
        match self.0.last() {
            Some(0) => {
                let mut v = self.0.clone();
                *v.last_mut().unwrap() = 1;
                Ok(Word(v))
            }
            Some(_) => domain(format!("cannot increment {self}: last digit is 1")),
            None => domain("cannot increment the empty word"),
        }
    }

    /// `w⁻`: last digit 1 becomes 0.
    pub fn dec(&self) -> Result<Word> {
        match self.0.last() {
            Some(1) => {
                let mut v = self.0.clone();
                *v.last_mut().unwrap() = 0;
                Ok(Word(v))
            }
            Some(_) => domain(format!("cannot decrement {self}: last digit is 0")),
            None => domain("cannot decrement the empty word"),
        }
    }

    /// Compare `u0^∞` with `v0^∞`.
    pub fn cmp_padded(&self, o: &Word) -> Ordering {
        let n = self.len().max(o.len());
        for i in 0..n {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = o.0.get(i).copied().unwrap_or(0);
            if a != b {
                return a.cmp(&b);
            }
        }
        Ordering::Equal
    }

    /// True if `f` occurs as a factor (contiguous subword).
    pub fn contains_factor(&self, f: &Word) -> bool {
        f.is_empty() || self.0.windows(f.len()).any(|w| w == f.0.as_slice())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse(format!("bad digit {c:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

/// An eventually periodic sequence `pre (per)^∞`, always kept in canonical form:
/// the period is primitive and the preperiod is as short as possible.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EPSeq {
    pre: Word,
    per: Word,
}

impl EPSeq {
    pub fn new(pre: Word, per: Word) -> Result<EPSeq> {
        if per.is_empty() {
            return domain("period must be nonempty");
        }
        Ok(Self::canonical(pre.0, per.0))
    }

    /// `w^∞`.
    pub fn periodic(per: Word) -> Result<EPSeq> {
        Self::new(Word::empty(), per)
    }

    pub fn zeros() -> EPSeq {
        EPSeq { pre: Word::empty(), per: Word(vec![0]) }
    }

    pub fn ones() -> EPSeq {
        EPSeq { pre: Word::empty(), per: Word(vec![1]) }
    }

    /// `w 0^∞`.
    pub fn finite(w: &Word) -> EPSeq {
        Self::canonical(w.0.clone(), vec![0])
    }

    fn canonical(mut pre: Vec<u8>, mut per: Vec<u8>) -> EPSeq {
        let p = per.len();
        for d in 1..=p {
            if p.is_multiple_of(d) && (0..p).all(|i| per[i] == per[i % d]) {
                per.truncate(d);
                break;
            }
        }
        while let (Some(&a), Some(&b)) = (pre.last(), per.last()) {
            if a != b {
                break;
            }
            pre.pop();
            per.rotate_right(1);
        }
        EPSeq { pre: Word(pre), per: Word(per) }
    }

    pub fn pre(&self) -> &Word {
        &self.pre
    }

    pub fn per(&self) -> &Word {
        &self.per
    }

    /// Digit at 0-based position `i`.
    pub fn digit(&self, i: usize) -> u8 {
        let k = self.pre.len();
        if i < k {
            self.pre.0[i]
        } else {
            self.per.0[(i - k) % self.per.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word((0..n).map(|i| self.digit(i)).collect())
    }

    pub fn first(&self) -> u8 {
        self.digit(0)
    }

    pub fn reflect(&self) -> EPSeq {
        EPSeq { pre: self.pre.reflect(), per: self.per.reflect() }
    }

    /// `σⁿ s`.
    pub fn shift(&self, n: usize) -> EPSeq {
        let k = self.pre.len();
        if n <= k {
            return Self::canonical(self.pre.0[n..].to_vec(), self.per.0.clone());
        }
        let mut per = self.per.0.clone();
        let r = (n - k) % per.len();
        per.rotate_left(r);
        Self::canonical(Vec::new(), per)
    }

    /// `w s`.
    pub fn prepend(&self, w: &Word) -> EPSeq {
        let mut pre = w.0.clone();
        pre.extend_from_slice(&self.pre.0);
        Self::canonical(pre, self.per.0.clone())
    }

    /// Number of digits after which every shift repeats: `|pre| + |per|`.
    pub fn window(&self) -> usize {
        self.pre.len() + self.per.len()
    }

    pub fn is_finite(&self) -> bool {
        self.per.0 == [0]
    }

    pub fn ones_tail(&self) -> bool {
        self.per.0 == [1]
    }

    /// Exact value `Σ s_i q^{-i}` at a rational `q > 1`.
    pub fn eval_rational(&self, q: &BigRational) -> Result<BigRational> {
        if *q <= BigRational::one() {
            return domain("base must exceed 1");
        }
        let (num, den) = self.series();
        Ok(num.eval_rat(q) / den.eval_rat(q))
    }

    /// Closed form of the value as a ratio `N(q) / D(q)` of integer polynomials,
    /// with `D(q) = q^{|pre|} (q^{|per|} - 1)` positive for `q > 1`.
    pub fn series(&self) -> (IntPoly, IntPoly) {
        let a = self.pre.len();
        let p = self.per.len();
        let u = IntPoly::from_digits(&self.pre.0);
        let v = IntPoly::from_digits(&self.per.0);
        let qp1 = IntPoly::monomial(1.into(), p).sub(&IntPoly::one());
        (u.mul(&qp1).add(&v), qp1.shift(a))
    }
}

/// Lexicographic comparison by first difference, looking at a bounded prefix.
pub fn lex_cmp(s1: &EPSeq, s2: &EPSeq) -> Ordering {
    let (p1, p2) = (s1.per.len(), s2.per.len());
    let bound = s1.pre.len().max(s2.pre.len()) + p1.lcm(&p2) + p1.max(p2);
    for i in 0..bound {
        let (a, b) = (s1.digit(i), s2.digit(i));
        if a != b {
            return a.cmp(&b);
        }
    }
    Ordering::Equal
}

impl Ord for EPSeq {
    fn cmp(&self, o: &Self) -> Ordering {
        lex_cmp(self, o)
    }
}

impl PartialOrd for EPSeq {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for EPSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pre.is_empty() && self.per.0 == [0] {
            return write!(f, "0*");
        }
        write!(f, "{}({})", self.pre, self.per)
    }
}

impl fmt::Debug for EPSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EPSeq({self})")
    }
}

/// Accepts `pre(per)`, `(per)`, `0*` and more generally `w*` meaning `w` with its
/// last digit repeated forever.
impl FromStr for EPSeq {
    type Err = Error;
    fn from_str(s: &str) -> Result<EPSeq> {
        let s = s.trim().trim_matches('"');
        if let Some(w) = s.strip_suffix('*') {
            let w: Word = w.parse()?;
            let Some(&last) = w.0.last() else {
                return Err(Error::Parse("`*` needs a preceding digit".into()));
            };
            return EPSeq::new(w.slice(0, w.len() - 1), Word(vec![last]));
        }
        let (pre, rest) = s
            .split_once('(')
            .ok_or_else(|| Error::Parse(format!("expected pre(per) in {s:?}")))?;
        let per = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("missing ')' in {s:?}")))?;
        let (pre, per): (Word, Word) = (pre.parse()?, per.parse()?);
        if per.is_empty() {
            return Err(Error::Parse(format!("empty period in {s:?}")));
        }
        EPSeq::new(pre, per)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for EPSeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for EPSeq {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `τ_1 … τ_n` of the Thue–Morse sequence, `τ_0 = 0`, `τ_{2i} = τ_i`, `τ_{2i+1} = 1 - τ_i`.
pub fn thue_morse(n: usize) -> Word {
    Word((1..=n).map(|i: usize| (i.count_ones() % 2) as u8).collect())
}

/// Both inequality chains for a generator word `a_1 … a_m`:
/// every rotation's reflection and every `a_i…a_m⁺ reflect(a_1…a_{i-1})` stay `≤ a_1…a_m⁺`.
pub fn check_generator(w: &Word) -> bool {
    let Ok(top) = w.inc() else {
        return false;
    };
    let m = w.len();
    for i in 0..m {
        let rot = w.slice(i, m).concat(&w.slice(0, i));
        if rot.reflect().cmp_padded(&top) == Ordering::Greater {
            return false;
        }
        let tail = w.slice(i, m).inc().expect("last digit is 0");
        let lhs = tail.concat(&w.slice(0, i).reflect());
        if lhs.cmp_padded(&top) == Ordering::Greater {
            return false;
        }
    }
    true
}

/// A connected component of `(1,2]` minus the closure of the univoque bases,
/// described by its generator `ω₀⁻`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ComponentSpec {
    generator: Word,
}

impl ComponentSpec {
    pub fn new(generator: Word) -> Result<ComponentSpec> {
        if generator.is_empty() || !check_generator(&generator) {
            return domain(format!("{generator} is not a valid generator"));
        }
        Ok(ComponentSpec { generator })
    }

    /// The component `(1, q_KL)`, generated by `0`.
    pub fn first() -> ComponentSpec {
        ComponentSpec { generator: Word(vec![0]) }
    }

    pub fn generator(&self) -> &Word {
        &self.generator
    }

    pub fn m(&self) -> usize {
        self.generator.len()
    }

    /// `ω₀, …, ω_n`.
    pub fn omegas(&self, n: usize) -> Vec<Word> {
        let mut out = Vec::with_capacity(n + 1);
        let mut w = self.generator.inc().expect("validated generator");
        for _ in 0..n {
            let next = w.concat(&w.reflect().inc().expect("ω ends in 1"));
            out.push(w);
            w = next;
        }
        out.push(w);
        out
    }
}

/// `ω_n` for the component.
pub fn omega(comp: &ComponentSpec, n: usize) -> Word {
    comp.omegas(n).pop().unwrap()
}
