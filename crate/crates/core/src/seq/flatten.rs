//! Finite-scale checks of the flattening map `(a, u) ↦ a·u` on
//! `A × A^ω` and of density of `A^ω` on eventually periodic points.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::{cons, EvPeriodicSeq};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FlattenWitness {
    /// `(a, u) < (b, v)` but `a·u ≥ b·v`.
    OrderViolation {
        a: i64,
        u: EvPeriodicSeq,
        b: i64,
        v: EvPeriodicSeq,
    },
    /// No valid `w` strictly between `u < v` was produced.
    DensityFailure { u: EvPeriodicSeq, v: EvPeriodicSeq },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FlattenReport {
    pub alphabet_bound: i64,
    /// Order-preservation pairs plus density pairs examined.
    pub checked: usize,
    pub violations: usize,
    pub order_checked: usize,
    pub order_violations: usize,
    pub density_checked: usize,
    pub density_failures: usize,
    pub first_witness: Option<FlattenWitness>,
}

impl FlattenReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

fn symbol(rng: &mut StdRng, bound: i64) -> i64 {
    let k = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        k
    } else {
        -k
    }
}

/// Preperiod length `0..=3`, period length `1..=4`.
pub fn sample_seq(rng: &mut StdRng, bound: i64) -> EvPeriodicSeq {
    let pre_len = rng.gen_range(0..=3);
    let per_len = rng.gen_range(1..=4);
    let pre = (0..pre_len).map(|_| symbol(rng, bound)).collect();
    let per = (0..per_len).map(|_| symbol(rng, bound)).collect();
    EvPeriodicSeq::new(pre, per).expect("nonzero symbols and nonempty period")
}

/// Successor in the nonzero integers.
fn succ(a: i64) -> i64 {
    if a == -1 {
        1
    } else {
        a + 1
    }
}

/// Some eventually periodic `w` with `u < w < v`, given `u < v`: keep `u`
/// through the first index `n` where it differs from `v`, then continue with
/// a constant sequence above `u_{n+1}`. Symbols may leave the sampling
/// alphabet; the order on `A` has no endpoints.
pub fn between(u: &EvPeriodicSeq, v: &EvPeriodicSeq) -> Result<EvPeriodicSeq> {
    if u >= v {
        return Err(Error::Precondition(format!("{u} is not below {v}")));
    }
    let n = (0..)
        .find(|&i| u.at(i) != v.at(i))
        .expect("distinct sequences differ somewhere");
    EvPeriodicSeq::new(u.prefix(n + 1), vec![succ(u.at(n + 1))])
}

pub fn flatten_check(alphabet_bound: i64, samples: usize, seed: u64) -> Result<FlattenReport> {
    if alphabet_bound < 2 {
        return Err(Error::Precondition(
            "alphabet bound must be at least 2".into(),
        ));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut r = FlattenReport {
        alphabet_bound,
        checked: 0,
        violations: 0,
        order_checked: 0,
        order_violations: 0,
        density_checked: 0,
        density_failures: 0,
        first_witness: None,
    };
    for _ in 0..samples {
        // (a) order preservation
        let (mut a, mut u) = (
            symbol(&mut rng, alphabet_bound),
            sample_seq(&mut rng, alphabet_bound),
        );
        let (mut b, mut v) = (
            symbol(&mut rng, alphabet_bound),
            sample_seq(&mut rng, alphabet_bound),
        );
        if (a, &u) > (b, &v) {
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut u, &mut v);
        }
        if (a, &u) != (b, &v) {
            r.order_checked += 1;
            if cons(a, &u)? >= cons(b, &v)? {
                r.order_violations += 1;
                r.first_witness
                    .get_or_insert(FlattenWitness::OrderViolation { a, u, b, v });
            }
        }

        // (b) density
        let (mut u, mut v) = (
            sample_seq(&mut rng, alphabet_bound),
            sample_seq(&mut rng, alphabet_bound),
        );
        if u == v {
            continue;
        }
        if u > v {
            std::mem::swap(&mut u, &mut v);
        }
        r.density_checked += 1;
        let ok = between(&u, &v).is_ok_and(|w| u < w && w < v);
        if !ok {
            r.density_failures += 1;
            r.first_witness
                .get_or_insert(FlattenWitness::DensityFailure { u, v });
        }
    }
    r.checked = r.order_checked + r.density_checked;
    r.violations = r.order_violations + r.density_failures;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn per(w: &[i64]) -> EvPeriodicSeq {
        EvPeriodicSeq::periodic(w.to_vec()).unwrap()
    }

    #[test]
    fn between_example() {
        let (u, v) = (per(&[1]), per(&[2]));
        let w = between(&u, &v).unwrap();
        assert_eq!(w, cons(1, &per(&[2])).unwrap());
        assert!(u < w && w < v);
        assert!(between(&v, &u).is_err());
        assert!(between(&u, &u).is_err());
    }

    #[test]
    fn between_crosses_zero_gap() {
        let u = EvPeriodicSeq::new(vec![3], vec![-1]).unwrap();
        let v = per(&[4]);
        let w = between(&u, &v).unwrap();
        assert_eq!(w.prefix(3), vec![3, 1, 1]);
    }

    #[test]
    fn seeded_run_is_clean_and_reproducible() {
        let r = flatten_check(5, 2000, 11).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.order_checked > 1900);
        assert_eq!(r, flatten_check(5, 2000, 11).unwrap());
        assert!(flatten_check(1, 10, 0).is_err());
    }

    /// Comparison on long explicit prefixes agrees with the exact order.
    #[test]
    fn order_matches_long_prefix_comparison() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..2000 {
            let u = sample_seq(&mut rng, 2);
            let v = sample_seq(&mut rng, 2);
            assert_eq!(u.cmp(&v), u.prefix(64).cmp(&v.prefix(64)), "{u} {v}");
        }
    }
}
