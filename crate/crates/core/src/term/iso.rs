use std::fmt;

use serde::Serialize;

use super::{normalize, OrderTerm};
use crate::scattered::{slater_iso, zsum_iso};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Isomorphic,
    NotIsomorphic,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Isomorphic => "isomorphic",
            Verdict::NotIsomorphic => "not_isomorphic",
            Verdict::Unknown => "unknown",
        })
    }
}

fn from_bool(b: bool) -> Verdict {
    if b {
        Verdict::Isomorphic
    } else {
        Verdict::NotIsomorphic
    }
}

/// Partial isomorphism test on normal forms. A definite verdict is given
/// only when a complete criterion applies: CNF equality for ordinals,
/// Slater's criterion for RJ4 blocks, block matching for ℤ-sums of
/// L-family blocks, and syntactic identity.
pub fn iso_check(s: &OrderTerm, t: &OrderTerm) -> Verdict {
    dispatch(&normalize(s), &normalize(t))
}

fn dispatch(s: &OrderTerm, t: &OrderTerm) -> Verdict {
    if s == t {
        return Verdict::Isomorphic;
    }
    if let (Some(a), Some(b)) = (s.ordinal_value(), t.ordinal_value()) {
        return from_bool(a == b);
    }
    match (s, t) {
        (OrderTerm::Rj4(a), OrderTerm::Rj4(b)) => from_bool(slater_iso(a, b)),
        (OrderTerm::ZSum(a), OrderTerm::ZSum(b)) => {
            zsum_iso(a, b).map_or(Verdict::Unknown, from_bool)
        }
        // reversal is a bijection on isomorphism classes
        (OrderTerm::Reverse(a), OrderTerm::Reverse(b)) => dispatch(a, b),
        _ => Verdict::Unknown,
    }
}
