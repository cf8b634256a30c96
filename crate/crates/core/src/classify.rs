//! Lexicographic membership tests for sequences and the U / Ū / V classification of bases.

use std::cmp::Ordering;

use serde::Serialize;

use crate::algebraic::AlgBase;
use crate::bases::alpha_sequence;
use crate::error::Result;
use crate::words::EPSeq;

/// Digits searched for a period of `α(q)` before giving up.
pub const ALPHA_SEARCH: usize = 4096;

fn alpha(q: &AlgBase) -> Result<EPSeq> {
    alpha_sequence(q, ALPHA_SEARCH)
}

/// Check the two follower conditions against `α` with strict or weak comparisons.
pub fn follower_condition(s: &EPSeq, alpha: &EPSeq, strict: bool) -> bool {
    let ok = |o: Ordering| if strict { o == Ordering::Less } else { o != Ordering::Greater };
    (1..=s.window()).all(|n| {
        let t = s.shift(n);
        if s.digit(n - 1) == 0 {
            ok(t.cmp(alpha))
        } else {
            ok(t.reflect().cmp(alpha))
        }
    })
}

/// `s` is the unique expansion of its value: after every 0 the tail is `< α(q)`,
/// after every 1 the reflected tail is `< α(q)`.
pub fn is_univoque_seq(s: &EPSeq, q: &AlgBase) -> Result<bool> {
    Ok(follower_condition(s, &alpha(q)?, true))
}

/// Weak form of the same conditions.
pub fn in_vq_seq(s: &EPSeq, q: &AlgBase) -> Result<bool> {
    Ok(follower_condition(s, &alpha(q)?, false))
}

/// Unique expansions starting with 0.
pub fn in_a_prime(s: &EPSeq, q: &AlgBase) -> Result<bool> {
    Ok(s.first() == 0 && is_univoque_seq(s, q)?)
}

/// Same as [`in_a_prime`] with `α` supplied directly.
pub fn in_a_prime_alpha(s: &EPSeq, alpha: &EPSeq) -> bool {
    s.first() == 0 && follower_condition(s, alpha, true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassTag {
    #[serde(rename = "U")]
    InU,
    #[serde(rename = "Ubar\\U")]
    InUbarMinusU,
    #[serde(rename = "V\\Ubar")]
    InVMinusUbar,
    #[serde(rename = "not-V")]
    OutsideV,
}

impl ClassTag {
    pub fn label(self) -> &'static str {
        match self {
            ClassTag::InU => "U",
            ClassTag::InUbarMinusU => "Ubar\\U",
            ClassTag::InVMinusUbar => "V\\Ubar",
            ClassTag::OutsideV => "not-V",
        }
    }
}

/// Which shift indices met the bounds with equality or violated them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseClass {
    #[serde(rename = "class")]
    pub tag: ClassTag,
    pub alpha: EPSeq,
    /// First `n` with `σⁿ α = reflect(α)`.
    pub lower_tie: Option<usize>,
    /// First `n` with `σⁿ α = α`.
    pub upper_tie: Option<usize>,
    /// First `n` where a weak bound fails.
    pub violation: Option<usize>,
    /// Shifts checked, `1..=window`.
    pub window: usize,
}

impl BaseClass {
    pub fn strict_lower(&self) -> bool {
        self.violation.is_none() && self.lower_tie.is_none()
    }

    pub fn strict_upper(&self) -> bool {
        self.violation.is_none() && self.upper_tie.is_none()
    }
}

/// Classify by comparing every shift of `α` with `α` and its reflection.
pub fn classify_alpha(alpha: &EPSeq) -> BaseClass {
    let refl = alpha.reflect();
    let (mut lower_tie, mut upper_tie, mut violation) = (None, None, None);
    let window = alpha.window();
    for n in 1..=window {
        let t = alpha.shift(n);
        match t.cmp(&refl) {
            Ordering::Less => {
                violation.get_or_insert(n);
            }
            Ordering::Equal => {
                lower_tie.get_or_insert(n);
            }
            Ordering::Greater => {}
        }
        match t.cmp(alpha) {
            Ordering::Greater => {
                violation.get_or_insert(n);
            }
            Ordering::Equal => {
                upper_tie.get_or_insert(n);
            }
            Ordering::Less => {}
        }
    }
    let tag = if *alpha == EPSeq::ones() {
        ClassTag::InU
    } else if violation.is_some() {
        ClassTag::OutsideV
    } else if lower_tie.is_some() {
        ClassTag::InVMinusUbar
    } else if upper_tie.is_some() {
        ClassTag::InUbarMinusU
    } else {
        ClassTag::InU
    };
    BaseClass { tag, alpha: alpha.clone(), lower_tie, upper_tie, violation, window }
}

pub fn classify_base(q: &AlgBase) -> Result<BaseClass> {
    Ok(classify_alpha(&alpha(q)?))
}

/// Verdict from the first `depth` digits of `α(q)` only, for bases whose
/// expansion has no detectable period. Not a proof.
pub fn probable_class(q: &AlgBase, depth: usize) -> ClassTag {
    let a = crate::bases::alpha_digits(q, depth);
    let d = a.digits();
    let mut tag = ClassTag::InU;
    for n in 1..depth {
        let tail = &d[n..];
        let head = &d[..depth - n];
        let refl: Vec<u8> = head.iter().map(|x| 1 - x).collect();
        if tail < refl.as_slice() || tail > head {
            return ClassTag::OutsideV;
        }
        if tail == refl.as_slice() {
            tag = ClassTag::InVMinusUbar;
        } else if tail == head && tag == ClassTag::InU {
            tag = ClassTag::InUbarMinusU;
        }
    }
    tag
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::base_from_alpha;

    fn e(s: &str) -> EPSeq {
        s.parse().unwrap()
    }

    fn b(s: &str) -> AlgBase {
        base_from_alpha(&e(s)).unwrap()
    }

    #[test]
    fn univoque_sequences() {
        let phi = b("(10)");
        let qf = b("(1100)");
        assert!(is_univoque_seq(&EPSeq::zeros(), &phi).unwrap());
        assert!(is_univoque_seq(&EPSeq::zeros(), &AlgBase::two()).unwrap());
        assert!(!is_univoque_seq(&e("0(10)"), &phi).unwrap());
        assert!(is_univoque_seq(&e("00(10)"), &qf).unwrap());
        assert!(!in_a_prime(&e("(10)"), &qf).unwrap());
    }

    #[test]
    fn weak_membership() {
        let phi = b("(10)");
        let qf = b("(1100)");
        assert!(in_vq_seq(&e("(1100)"), &qf).unwrap());
        assert!(in_vq_seq(&e("0(10)"), &phi).unwrap());
        assert!(!in_vq_seq(&e("(1001)"), &phi).unwrap());
    }

    #[test]
    fn base_classes() {
        assert_eq!(classify_base(&b("(10)")).unwrap().tag, ClassTag::InVMinusUbar);
        assert_eq!(classify_base(&b("(1100)")).unwrap().tag, ClassTag::InVMinusUbar);
        assert_eq!(classify_base(&b("(110)")).unwrap().tag, ClassTag::InUbarMinusU);
        assert_eq!(classify_base(&AlgBase::two()).unwrap().tag, ClassTag::InU);
        assert_eq!(classify_alpha(&e("(1110)")).tag, ClassTag::InUbarMinusU);
        assert_eq!(classify_alpha(&e("1(100)")).tag, ClassTag::OutsideV);
        assert_eq!(classify_alpha(&e("11(10)")).tag, ClassTag::InU);
        assert_eq!(probable_class(&b("(110)"), 40), ClassTag::InUbarMinusU);
    }
}
