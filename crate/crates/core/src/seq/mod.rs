//! Eventually periodic sequences over nonzero integers, tail equivalence
//! `~` and its parity refinement `~₂`.
//!
//! The alphabet stands in for `ω₁* + ω₁`: the sign gives the side and the
//! magnitude the rank, with `0` reserved for the identified midpoint.

pub mod flatten;
pub mod oracle;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lex::Cursor;

/// `pre · per · per · …` in canonical form: `per` is primitive and the last
/// symbol of `pre` differs from the last symbol of `per`, so equal sequences
/// have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EvPeriodicSeq {
    pre: Vec<i64>,
    per: Vec<i64>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Even,
    Odd,
    Full,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Even => "even",
            Label::Odd => "odd",
            Label::Full => "full",
        })
    }
}

fn check_symbols(word: &[i64]) -> Result<()> {
    if word.contains(&0) {
        return Err(Error::Sequence("symbol 0 is not in the alphabet".into()));
    }
    Ok(())
}

/// Length of the primitive root of `w`.
fn primitive_len(w: &[i64]) -> usize {
    let n = w.len();
    (1..=n)
        .find(|&p| n.is_multiple_of(p) && (p..n).all(|i| w[i] == w[i - p]))
        .unwrap_or(n)
}

fn is_rotation(a: &[i64], b: &[i64]) -> Option<usize> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    (0..n).find(|&d| (0..n).all(|i| b[i] == a[(i + d) % n]))
}

fn least_rotation(w: &[i64]) -> Vec<i64> {
    (0..w.len())
        .map(|d| w[d..].iter().chain(&w[..d]).copied().collect::<Vec<_>>())
        .min()
        .expect("nonempty period")
}

impl EvPeriodicSeq {
    pub fn new(pre: Vec<i64>, per: Vec<i64>) -> Result<Self> {
        if per.is_empty() {
            return Err(Error::Sequence("period must be nonempty".into()));
        }
        check_symbols(&pre)?;
        check_symbols(&per)?;
        let mut s = EvPeriodicSeq { pre, per };
        s.canonicalize();
        Ok(s)
    }

    /// The purely periodic sequence `per · per · …`.
    pub fn periodic(per: Vec<i64>) -> Result<Self> {
        EvPeriodicSeq::new(Vec::new(), per)
    }

    fn canonicalize(&mut self) {
        let p = primitive_len(&self.per);
        self.per.truncate(p);
        while let (Some(&a), Some(&b)) = (self.pre.last(), self.per.last()) {
            if a != b {
                break;
            }
            self.pre.pop();
            self.per.rotate_right(1);
        }
    }

    pub fn preperiod(&self) -> &[i64] {
        &self.pre
    }

    pub fn period(&self) -> &[i64] {
        &self.per
    }

    pub fn at(&self, i: usize) -> i64 {
        if i < self.pre.len() {
            self.pre[i]
        } else {
            self.per[(i - self.pre.len()) % self.per.len()]
        }
    }

    pub fn prefix(&self, len: usize) -> Vec<i64> {
        (0..len).map(|i| self.at(i)).collect()
    }
}

/// `a·u`.
pub fn cons(a: i64, u: &EvPeriodicSeq) -> Result<EvPeriodicSeq> {
    let mut pre = Vec::with_capacity(u.pre.len() + 1);
    pre.push(a);
    pre.extend_from_slice(&u.pre);
    EvPeriodicSeq::new(pre, u.per.clone())
}

/// The `δ` with `v.per[n] = u.per[n + δ]` (indices mod the period), when
/// the primitive periods are conjugate.
fn alignment(u: &EvPeriodicSeq, v: &EvPeriodicSeq) -> Option<usize> {
    is_rotation(&u.per, &v.per)
}

/// `u = r·w` and `v = s·w` for some finite `r`, `s`.
pub fn tail_equiv(u: &EvPeriodicSeq, v: &EvPeriodicSeq) -> bool {
    alignment(u, v).is_some()
}

/// As [`tail_equiv`] with `|r| ≡ |s| (mod 2)`.
///
/// With primitive period `P`, the common tails start at positions
/// `(|pre_u| + δ + tP + m, |pre_v| + m)`, so the parity of `|r| - |s|` is
/// free when `P` is odd and fixed to that of `|pre_u| + δ - |pre_v|`
/// otherwise.
pub fn tail_equiv2(u: &EvPeriodicSeq, v: &EvPeriodicSeq) -> bool {
    match alignment(u, v) {
        None => false,
        Some(_) if u.per.len() % 2 == 1 => true,
        Some(d) => (u.pre.len() + d + v.pre.len()).is_multiple_of(2),
    }
}

/// Some periodic representation of `u` has odd period, i.e. the primitive
/// period is odd.
pub fn odd_period_char(u: &EvPeriodicSeq) -> bool {
    u.per.len() % 2 == 1
}

/// The fixed representative of the tail class of `u`: the purely periodic
/// sequence on the least rotation of its primitive period.
pub fn class_representative(u: &EvPeriodicSeq) -> EvPeriodicSeq {
    EvPeriodicSeq {
        pre: Vec::new(),
        per: least_rotation(&u.per),
    }
}

pub fn label(u: &EvPeriodicSeq) -> Label {
    if odd_period_char(u) {
        Label::Full
    } else if tail_equiv2(u, &class_representative(u)) {
        Label::Even
    } else {
        Label::Odd
    }
}

impl Ord for EvPeriodicSeq {
    /// Lexicographic order on the infinite sequences. Past both
    /// preperiods the sequences are periodic with periods `p`, `q`, so
    /// agreement on `p + q` further positions means agreement forever.
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.pre.len().max(other.pre.len()) + self.per.len() + other.per.len();
        (0..len)
            .map(|i| self.at(i).cmp(&other.at(i)))
            .find(|c| c.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for EvPeriodicSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[i64]) -> fmt::Result {
    f.write_str("[")?;
    for (i, a) in w.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}")?;
    }
    f.write_str("]")
}

impl fmt::Display for EvPeriodicSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("seq{pre=")?;
        write_word(f, &self.pre)?;
        f.write_str("; per=")?;
        write_word(f, &self.per)?;
        f.write_str("}")
    }
}

impl Serialize for EvPeriodicSeq {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_word(cur: &mut Cursor) -> Result<Vec<i64>> {
    cur.expect_sym('[')?;
    let mut out = Vec::new();
    if !cur.is_sym(']') {
        loop {
            out.push(cur.expect_int()?);
            if !cur.eat_sym(',') {
                break;
            }
        }
    }
    cur.expect_sym(']')?;
    Ok(out)
}

impl FromStr for EvPeriodicSeq {
    type Err = Error;

    /// `seq{pre=[1,-2]; per=[3,4]}`
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s)?;
        cur.expect_ident("seq")?;
        cur.expect_sym('{')?;
        cur.expect_ident("pre")?;
        cur.expect_sym('=')?;
        let pre = parse_word(&mut cur)?;
        cur.expect_sym(';')?;
        cur.expect_ident("per")?;
        cur.expect_sym('=')?;
        let per = parse_word(&mut cur)?;
        cur.expect_sym('}')?;
        cur.expect_end()?;
        EvPeriodicSeq::new(pre, per)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn per(w: &[i64]) -> EvPeriodicSeq {
        EvPeriodicSeq::periodic(w.to_vec()).unwrap()
    }

    fn seq(pre: &[i64], p: &[i64]) -> EvPeriodicSeq {
        EvPeriodicSeq::new(pre.to_vec(), p.to_vec()).unwrap()
    }

    #[test]
    fn cons_examples() {
        let c = cons(1, &per(&[2])).unwrap();
        assert_eq!((c.preperiod(), c.period()), (&[1][..], &[2][..]));
        assert_eq!(cons(2, &per(&[2])).unwrap(), per(&[2]));
        let c = cons(1, &seq(&[1], &[2, 3])).unwrap();
        assert_eq!((c.preperiod(), c.period()), (&[1, 1][..], &[2, 3][..]));
        assert!(cons(0, &per(&[1])).is_err());
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(per(&[1, 1]).period(), &[1]);
        assert_eq!(per(&[1, 2, 1, 2]).period(), &[1, 2]);
        // 3 (1 2 3)^ω = (3 1 2)^ω
        let s = seq(&[3], &[1, 2, 3]);
        assert!(s.preperiod().is_empty());
        assert_eq!(s.period(), &[3, 1, 2]);
        assert!(EvPeriodicSeq::new(vec![1], vec![]).is_err());
        assert!(EvPeriodicSeq::new(vec![0], vec![1]).is_err());
    }

    #[test]
    fn tail_equivalence_examples() {
        let u = per(&[1, 2]);
        assert!(tail_equiv(&u, &cons(7, &u).unwrap()));
        assert!(!tail_equiv(&u, &per(&[1, 3])));
        let one = per(&[1]);
        assert!(tail_equiv2(&one, &cons(5, &one).unwrap()));
        assert!(!tail_equiv2(&u, &cons(1, &u).unwrap()));
        assert!(tail_equiv2(&u, &u));
        // 1·(2 1)^ω and 9·(2 1)^ω
        assert!(tail_equiv2(&u, &cons(9, &per(&[2, 1])).unwrap()));
    }

    #[test]
    fn odd_periods() {
        assert!(odd_period_char(&per(&[1, 2, 3])));
        assert!(!odd_period_char(&per(&[1, 2])));
        assert!(odd_period_char(&per(&[1, 1])));
    }

    /// Every periodic representation of `(1 2)^ω` has a period that is a
    /// multiple of 2: no length `≤ 12` other than even ones reproduces it.
    #[test]
    fn even_primitive_period_admits_no_odd_representation() {
        let u = per(&[1, 2]);
        let window = u.prefix(60);
        for p in 1..=12 {
            let periodic = (p..window.len()).all(|i| window[i] == window[i - p]);
            assert_eq!(periodic, p % 2 == 0, "p = {p}");
        }
    }

    #[test]
    fn labels() {
        assert_eq!(label(&per(&[3])), Label::Full);
        let uc = per(&[1, 2]);
        assert_eq!(label(&uc), Label::Even);
        assert_eq!(label(&cons(5, &uc).unwrap()), Label::Odd);
        assert_eq!(label(&per(&[2, 1])), Label::Odd);
        let twice = cons(-4, &cons(6, &per(&[2, 1])).unwrap()).unwrap();
        assert_eq!(label(&twice), Label::Odd);
    }

    #[test]
    fn ordering() {
        let u = per(&[1]);
        let v = per(&[2]);
        assert!(u < v);
        assert!(per(&[-1]) < u);
        assert!(seq(&[1, 1, 1], &[2]) > u);
        assert_eq!(seq(&[1, 2], &[1, 2]).cmp(&per(&[1, 2])), Ordering::Equal);
    }

    #[test]
    fn literal_round_trip() {
        let s: EvPeriodicSeq = "seq{pre=[1,-2]; per=[3,4]}".parse().unwrap();
        assert_eq!(s, seq(&[1, -2], &[3, 4]));
        assert_eq!(s.to_string(), "seq{pre=[1,-2]; per=[3,4]}");
        assert_eq!(s.to_string().parse::<EvPeriodicSeq>().unwrap(), s);
        assert!("seq{pre=[]; per=[]}".parse::<EvPeriodicSeq>().is_err());
        assert!("seq{pre=[0]; per=[1]}".parse::<EvPeriodicSeq>().is_err());
        assert!(matches!(
            "seq{pre=[1] per=[1]}".parse::<EvPeriodicSeq>(),
            Err(Error::Parse(_))
        ));
    }
}
