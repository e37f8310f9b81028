//! Eventually-affine schemas for ω*-sums `… + l_2·ω^{k_2} + l_1·ω^{k_1} + ω^ω`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lex::render_affine;

/// `j ↦ slope·j + offset`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Affine {
    pub slope: i64,
    pub offset: i64,
}

impl Affine {
    pub const fn new(slope: i64, offset: i64) -> Self {
        Affine { slope, offset }
    }

    pub fn at(&self, j: i64) -> i64 {
        self.slope * j + self.offset
    }

    /// `j ↦ self(j + shift)`.
    pub fn shifted(&self, shift: i64) -> Affine {
        Affine::new(self.slope, self.offset + self.slope * shift)
    }
}

/// A sequence of pairs `(l_j, k_j)`, `j ≥ 1`, given explicitly for
/// `j < onset` and by affine maps from `onset` on.
///
/// Kept in canonical form: trailing initial entries that the tail maps
/// would reproduce are folded into the tail, so two schemas are equal iff
/// they denote the same sequence.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct EvAffineSeq {
    initial: Vec<(i64, i64)>,
    tail_l: Affine,
    tail_k: Affine,
}

impl EvAffineSeq {
    /// `initial` covers indices `1..onset`; `onset` must equal
    /// `initial.len() + 1`.
    pub fn new(
        initial: Vec<(i64, i64)>,
        onset: i64,
        tail_l: Affine,
        tail_k: Affine,
    ) -> Result<Self> {
        if onset != initial.len() as i64 + 1 {
            return Err(Error::Schema(format!(
                "tail onset {onset} does not follow {} initial entries",
                initial.len()
            )));
        }
        if let Some(&(l, k)) = initial.iter().find(|&&(l, k)| l < 1 || k < 1) {
            return Err(Error::Schema(format!("entry ({l},{k}) is not positive")));
        }
        if tail_k.slope < 1 {
            return Err(Error::Schema(
                "exponents must strictly increase (k slope >= 1)".into(),
            ));
        }
        if tail_l.slope < 0 || tail_l.at(onset) < 1 || tail_k.at(onset) < 1 {
            return Err(Error::Schema("tail values must stay positive".into()));
        }
        let ks: Vec<i64> = initial
            .iter()
            .map(|&(_, k)| k)
            .chain([tail_k.at(onset)])
            .collect();
        if ks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Schema("exponents must strictly increase".into()));
        }
        let mut seq = EvAffineSeq {
            initial,
            tail_l,
            tail_k,
        };
        seq.canonicalize();
        Ok(seq)
    }

    /// A schema given entirely by affine maps from index 1.
    pub fn pure_tail(tail_l: Affine, tail_k: Affine) -> Result<Self> {
        EvAffineSeq::new(Vec::new(), 1, tail_l, tail_k)
    }

    fn canonicalize(&mut self) {
        while let Some(&last) = self.initial.last() {
            let j = self.initial.len() as i64;
            if last == (self.tail_l.at(j), self.tail_k.at(j)) {
                self.initial.pop();
            } else {
                break;
            }
        }
    }

    pub fn onset(&self) -> i64 {
        self.initial.len() as i64 + 1
    }

    pub fn initial(&self) -> &[(i64, i64)] {
        &self.initial
    }

    pub fn tail_l(&self) -> Affine {
        self.tail_l
    }

    pub fn tail_k(&self) -> Affine {
        self.tail_k
    }

    /// `(l_j, k_j)` for `j ≥ 1`.
    pub fn pair(&self, j: i64) -> (i64, i64) {
        assert!(j >= 1, "schema index starts at 1");
        if j < self.onset() {
            self.initial[(j - 1) as usize]
        } else {
            (self.tail_l.at(j), self.tail_k.at(j))
        }
    }

    pub fn l(&self, j: i64) -> i64 {
        self.pair(j).0
    }

    pub fn k(&self, j: i64) -> i64 {
        self.pair(j).1
    }

    /// Adds `delta` to every exponent.
    pub fn with_exponents_raised(&self, delta: i64) -> EvAffineSeq {
        let mut s = EvAffineSeq {
            initial: self.initial.iter().map(|&(l, k)| (l, k + delta)).collect(),
            tail_l: self.tail_l,
            tail_k: Affine::new(self.tail_k.slope, self.tail_k.offset + delta),
        };
        s.canonicalize();
        s
    }

    /// Drops the first `count` entries and re-indexes from 1.
    pub fn dropping(&self, count: usize) -> EvAffineSeq {
        let c = count as i64;
        let initial = self.initial.iter().skip(count).copied().collect();
        let mut s = EvAffineSeq {
            initial,
            tail_l: self.tail_l.shifted(c),
            tail_k: self.tail_k.shifted(c),
        };
        s.canonicalize();
        s
    }

    /// Run-length expansion: `k_j` repeated `l_j` times, `j` increasing.
    pub fn expanded(&self) -> impl Iterator<Item = i64> + '_ {
        (1i64..).flat_map(move |j| {
            let (l, k) = self.pair(j);
            std::iter::repeat_n(k, l as usize)
        })
    }
}

impl fmt::Display for EvAffineSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "init=[")?;
        for (i, (l, k)) in self.initial.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({l},{k})")?;
        }
        write!(
            f,
            "]; tail j>={}: l={}, k={}",
            self.onset(),
            render_affine(self.tail_l.slope, self.tail_l.offset, "j"),
            render_affine(self.tail_k.slope, self.tail_k.offset, "j"),
        )
    }
}

/// The order `… + l_2·ω^{k_2} + l_1·ω^{k_1} + ω^ω`. Index 1 is the summand
/// immediately left of the terminal `ω^ω`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Rj4Order {
    seq: EvAffineSeq,
}

impl Rj4Order {
    pub fn new(seq: EvAffineSeq) -> Self {
        Rj4Order { seq }
    }

    pub fn seq(&self) -> &EvAffineSeq {
        &self.seq
    }

    pub fn l(&self, j: i64) -> i64 {
        self.seq.l(j)
    }

    pub fn k(&self, j: i64) -> i64 {
        self.seq.k(j)
    }

    /// Exponent of the `m`-th copy of `ω^{k}` counting leftwards from the
    /// terminal `ω^ω` (`m ≥ 1`), after expanding `l_j·ω^{k_j}` into `l_j`
    /// copies.
    pub fn block_exponent(&self, m: u64) -> i64 {
        assert!(m >= 1);
        let mut remaining = m;
        let mut j = 1;
        loop {
            let (l, k) = self.seq.pair(j);
            if remaining <= l as u64 {
                return k;
            }
            remaining -= l as u64;
            j += 1;
        }
    }

    /// The `i` with `self == make_l(i)` exactly, if any.
    pub fn as_l_family_member(&self) -> Option<i64> {
        let (tl, tk) = (self.seq.tail_l, self.seq.tail_k);
        if !self.seq.initial.is_empty() || tl.slope != 1 || tk.slope != 1 {
            return None;
        }
        let i = tk.offset - tl.offset;
        (make_l(i) == *self).then_some(i)
    }
}

impl fmt::Display for Rj4Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_l_family_member() {
            Some(i) => write!(f, "L({i})"),
            None => write!(f, "rj4{{{}}}", self.seq),
        }
    }
}

/// `L_i`: for `i ≥ 0`, `l_j = j, k_j = i + j`
/// (`… + 3ω^{i+3} + 2ω^{i+2} + ω^{i+1} + ω^ω`); for `i = -n < 0`,
/// `l_j = n + j, k_j = j` (`… + (n+2)ω^2 + (n+1)ω + ω^ω`).
pub fn make_l(i: i64) -> Rj4Order {
    let seq = if i >= 0 {
        EvAffineSeq::pure_tail(Affine::new(1, 0), Affine::new(1, i))
    } else {
        EvAffineSeq::pure_tail(Affine::new(1, -i), Affine::new(1, 0))
    };
    Rj4Order::new(seq.expect("L-family schemas are well formed"))
}

/// Right multiplication by `ω`. Each `l·ω^k` becomes `l·ω^{k+1}` and the
/// terminal `ω^ω·ω = ω^{1+ω} = ω^ω` is unchanged. No summand is
/// reinserted; finite prefixes absorb into `ω^ω`, so the result is compared
/// with other schemas up to isomorphism.
pub fn rj4_mul_omega(order: &Rj4Order) -> Rj4Order {
    Rj4Order::new(order.seq.with_exponents_raised(1))
}

/// Witness for Slater's criterion: for every `n ≥ from`, entry `n` of the
/// second order equals entry `n + shift` of the first. A negative shift is
/// the symmetric case.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SlaterMatch {
    pub shift: i64,
    pub from: i64,
}

/// Decides whether the `(l, k)` sequences of two schemas eventually agree
/// up to an index shift.
///
/// Agreement is necessary for isomorphism (Slater). It is also sufficient:
/// past the agreement point both orders share a common ω*-tail, and what
/// remains on either side is a finite sum of powers `ω^k`, an ordinal below
/// `ω^ω`, which is absorbed by the terminal `ω^ω`.
pub fn slater_match(first: &Rj4Order, second: &Rj4Order) -> Option<SlaterMatch> {
    let (a, b) = (&first.seq, &second.seq);
    if a.tail_k.slope != b.tail_k.slope || a.tail_l.slope != b.tail_l.slope {
        return None;
    }
    // b_k(n) = a_k(n + r)  ⇔  b.off = a.off + a.slope·r
    let diff = b.tail_k.offset - a.tail_k.offset;
    if diff % a.tail_k.slope != 0 {
        return None;
    }
    let shift = diff / a.tail_k.slope;
    if a.tail_l.shifted(shift) != b.tail_l {
        return None;
    }
    let mut from = b.onset().max(a.onset() - shift).max(1 - shift).max(1);
    while from > 1 && from - 1 + shift >= 1 && b.pair(from - 1) == a.pair(from - 1 + shift) {
        from -= 1;
    }
    Some(SlaterMatch { shift, from })
}

pub fn slater_iso(first: &Rj4Order, second: &Rj4Order) -> bool {
    slater_match(first, second).is_some()
}

/// The `i` with `order ≅ L_i`, if the order is isomorphic to a member of
/// the L-family. `L_i` has `k_j - l_j = i` at every index, and that
/// difference is invariant under index shift.
pub fn l_family_index(order: &Rj4Order) -> Option<i64> {
    let (tl, tk) = (order.seq.tail_l, order.seq.tail_k);
    if tl.slope != 1 || tk.slope != 1 {
        return None;
    }
    let i = tk.offset - tl.offset;
    slater_iso(order, &make_l(i)).then_some(i)
}
