//! Symbolic classification of cuts into `(κ, λ)` classes.
//!
//! Cuts of these orders form uncountable sets; only the finitely many
//! realized classes are computed, by structural recursion over summands.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use super::schema::Rj4Order;
use super::zsum::ZBlockSum;
use crate::ordinal::{Cofinality, Ordinal};
use crate::term::CofClass;

/// A `(κ, λ)`-cut: the left side has cofinality `κ`, the right side
/// coinitiality `λ`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CutType {
    pub left_cof: CofClass,
    pub right_coin: CofClass,
}

impl CutType {
    pub const fn new(left_cof: CofClass, right_coin: CofClass) -> Self {
        CutType {
            left_cof,
            right_coin,
        }
    }

    pub fn is_gap(&self) -> bool {
        self.left_cof != CofClass::One && self.right_coin != CofClass::One
    }
}

impl fmt::Display for CutType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left_cof, self.right_coin)
    }
}

impl Serialize for CutType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Coinitiality and cofinality of a whole order.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct EndData {
    pub coinitiality: CofClass,
    pub cofinality: CofClass,
}

fn cof_of_ordinal(o: &Ordinal) -> CofClass {
    match o.cofinality() {
        Cofinality::One => CofClass::One,
        Cofinality::Omega => CofClass::Omega,
        Cofinality::Zero => unreachable!("empty summands do not occur"),
    }
}

/// Classes of the proper cuts of an ordinal `α`. A cut at position
/// `0 < β < α` has a least element on its right; its left side `β` has
/// cofinality 1 when `β` is a successor and `ω` when it is a limit.
pub fn ordinal_cut_types(alpha: &Ordinal) -> BTreeSet<CutType> {
    let mut out = BTreeSet::new();
    // successor positions exist below α iff α ≥ 2, limits iff α > ω
    if *alpha >= Ordinal::nat(2) {
        out.insert(CutType::new(CofClass::One, CofClass::One));
    }
    if *alpha > Ordinal::omega() {
        out.insert(CutType::new(CofClass::Omega, CofClass::One));
    }
    out
}

/// Classes of all proper cuts of `order`: cuts inside a summand, plus the
/// cuts at summand boundaries, whose left side ends in some `ω^k` (`k ≥ 1`)
/// and whose right side starts with a least point.
pub fn cut_types(order: &Rj4Order) -> BTreeSet<CutType> {
    let mut out = BTreeSet::new();
    let terminal = Ordinal::omega_pow(Ordinal::omega());
    out.extend(ordinal_cut_types(&terminal));
    // Summands past index 2 have k ≥ 2 and l ≥ 1, so their classes repeat
    // those already collected; the affine tail adds nothing new.
    let last = order.seq().onset().max(2) + 1;
    for j in 1..=last {
        let (l, k) = order.seq().pair(j);
        let summand = Ordinal::monomial(Ordinal::nat(k as u64), l as u64);
        out.extend(ordinal_cut_types(&summand));
        // boundary on the right of summand j
        out.insert(CutType::new(cof_of_ordinal(&summand), CofClass::One));
    }
    out
}

/// An ω*-sum of nonempty summands has no least point and coinitiality `ω`;
/// the last summand `ω^ω` fixes the cofinality.
pub fn end_data(_order: &Rj4Order) -> EndData {
    EndData {
        coinitiality: CofClass::Omega,
        cofinality: cof_of_ordinal(&Ordinal::omega_pow(Ordinal::omega())),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GapProfile {
    /// Union of the cut classes inside individual blocks.
    pub interior: BTreeSet<CutType>,
    /// Class of every cut between consecutive blocks.
    pub boundary: CutType,
    /// True when no interior class is a gap and the boundary class is one,
    /// i.e. `(ω, ω)`-gaps occur exactly at block boundaries.
    pub gaps_only_at_boundaries: bool,
}

pub fn gap_profile(sum: &ZBlockSum) -> GapProfile {
    let blocks = sum.representative_blocks();
    let mut interior = BTreeSet::new();
    for b in &blocks {
        interior.extend(cut_types(b));
    }
    // Between block i and i+1 the left side has the cofinality of block i
    // and the right side the coinitiality of block i+1.
    let boundary = blocks
        .windows(2)
        .map(|w| CutType::new(end_data(&w[0]).cofinality, end_data(&w[1]).coinitiality))
        .chain(blocks.first().map(|b| {
            let e = end_data(b);
            CutType::new(e.cofinality, e.coinitiality)
        }))
        .reduce(|a, b| {
            assert_eq!(a, b, "block ends differ within one family");
            a
        })
        .expect("at least one block");
    GapProfile {
        gaps_only_at_boundaries: boundary.is_gap() && !interior.iter().any(CutType::is_gap),
        interior,
        boundary,
    }
}
