use serde::Serialize;

use super::schema::{EvAffineSeq, Rj4Order};

/// A nondecreasing, unbounded integer sequence stored as runs: value `k_j`
/// repeated `l_j` times.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Spectrum {
    runs: EvAffineSeq,
}

impl Spectrum {
    pub fn from_runs(runs: EvAffineSeq) -> Self {
        Spectrum { runs }
    }

    pub fn runs(&self) -> &EvAffineSeq {
        &self.runs
    }

    pub fn prefix(&self, len: usize) -> Vec<i64> {
        self.runs.expanded().take(len).collect()
    }

    /// The same spectrum with its first `count` runs removed.
    pub fn dropping_runs(&self, count: usize) -> Spectrum {
        Spectrum {
            runs: self.runs.dropping(count),
        }
    }
}

/// Types of the boundary cuts read right to left: every exponent `k_j`
/// occurs `l_j` times. This is the spectrum of the ladder through the
/// rightmost boundary.
pub fn spectrum(order: &Rj4Order) -> Spectrum {
    Spectrum {
        runs: order.seq().clone(),
    }
}

/// Index `m` with run value `k_m == value`. Values strictly increase and
/// are positive, so `k_m ≥ m` and the search range is `1..=value`.
fn run_with_value(runs: &EvAffineSeq, value: i64) -> Option<i64> {
    let (mut lo, mut hi) = (1i64, value.max(1));
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        match runs.k(mid).cmp(&value) {
            std::cmp::Ordering::Equal => return Some(mid),
            std::cmp::Ordering::Less => lo = mid + 1,
            std::cmp::Ordering::Greater => hi = mid - 1,
        }
    }
    None
}

/// Whether the expanded sequences share a common tail.
///
/// Since run values strictly increase, a common tail must align whole runs
/// except possibly the first compared one, which may be truncated. The
/// alignment is found by locating a far run value of `u` among the runs of
/// `v`; the two tails then agree iff the shifted run maps coincide.
pub fn spectra_tail_equivalent(u: &Spectrum, v: &Spectrum) -> bool {
    let (a, b) = (&u.runs, &v.runs);
    // Far enough that, if the tails agree at all, they agree from here and
    // the matching run of `b` lies in its affine part.
    let n0 = a.onset() + b.onset() + a.tail_k().offset.abs() + b.tail_k().offset.abs() + 1;
    let Some(m) = run_with_value(b, a.k(n0)) else {
        return false;
    };
    if m < b.onset() {
        return false;
    }
    let s = m - n0;
    b.tail_k().shifted(s) == a.tail_k() && b.tail_l().shifted(s) == a.tail_l()
}
