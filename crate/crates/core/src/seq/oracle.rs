//! Shift enumeration over raw `(preperiod, period)` words, independent of
//! canonical forms.

fn at(pre: &[i64], per: &[i64], i: usize) -> i64 {
    if i < pre.len() {
        pre[i]
    } else {
        per[(i - pre.len()) % per.len()]
    }
}

/// All `(i, j)` with `u[i..]` equal to `v[j..]`, for `i < 2(|pre_u| + |per_u|)`
/// and `j < 2(|pre_v| + |per_v|)`. Equality of the shifted sequences is
/// decided on a window of `|pre_u| + |pre_v| + |per_u| + |per_v|` symbols,
/// which suffices for eventually periodic words.
pub fn common_tail_shifts(u: (&[i64], &[i64]), v: (&[i64], &[i64])) -> Vec<(usize, usize)> {
    let (pu, qu) = u;
    let (pv, qv) = v;
    let bu = 2 * (pu.len() + qu.len());
    let bv = 2 * (pv.len() + qv.len());
    let window = pu.len() + pv.len() + qu.len() + qv.len();
    let mut out = Vec::new();
    for i in 0..bu {
        for j in 0..bv {
            if (0..window).all(|n| at(pu, qu, i + n) == at(pv, qv, j + n)) {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn tail_equiv_brute(u: (&[i64], &[i64]), v: (&[i64], &[i64])) -> bool {
    !common_tail_shifts(u, v).is_empty()
}

pub fn tail_equiv2_brute(u: (&[i64], &[i64]), v: (&[i64], &[i64])) -> bool {
    common_tail_shifts(u, v)
        .iter()
        .any(|&(i, j)| (i + j) % 2 == 0)
}

/// Smallest `p ≤ max_period` such that `u` is periodic with period `p`
/// from some point on, found by checking a long window.
pub fn least_eventual_period(u: (&[i64], &[i64]), max_period: usize) -> Option<usize> {
    let (pre, per) = u;
    let start = pre.len();
    let len = start + 4 * (per.len() + max_period);
    (1..=max_period).find(|&p| (start..len).all(|i| at(pre, per, i + p) == at(pre, per, i)))
}
