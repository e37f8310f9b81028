use std::cmp::Ordering;

use proptest::prelude::*;

use lexorder::ordinal::{ord_add, ord_cmp, ord_mul, Cofinality, Ordinal};

/// Ordinals below `ω^ω` as coefficient vectors: `v[e]` is the coefficient
/// of `ω^e`. The oracle below never touches the CNF code.
const DIM: usize = 8;
type Vecn = [u64; DIM];

fn top(v: &Vecn) -> Option<usize> {
    (0..DIM).rev().find(|&e| v[e] > 0)
}

fn add_v(a: &Vecn, b: &Vecn) -> Vecn {
    let Some(e) = top(b) else { return *a };
    let mut r = [0; DIM];
    r[e + 1..].copy_from_slice(&a[e + 1..]);
    r[e] = a[e] + b[e];
    r[..e].copy_from_slice(&b[..e]);
    r
}

/// `a·b` term by term over `b`, highest first:
/// `a·ω^f·c = ω^{d+f}·c` for `f > 0`, and `a·c` multiplies the leading
/// coefficient of `a`.
fn mul_v(a: &Vecn, b: &Vecn) -> Vecn {
    let Some(d) = top(a) else { return [0; DIM] };
    let mut acc = [0; DIM];
    for f in (0..DIM).rev().filter(|&f| b[f] > 0) {
        let mut t = [0; DIM];
        if f > 0 {
            t[d + f] = b[f];
        } else {
            t = *a;
            t[d] = a[d] * b[0];
        }
        acc = add_v(&acc, &t);
    }
    acc
}

fn cmp_v(a: &Vecn, b: &Vecn) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

fn to_ordinal(v: &Vecn) -> Ordinal {
    (0..DIM)
        .rev()
        .filter(|&e| v[e] > 0)
        .fold(Ordinal::zero(), |acc, e| {
            ord_add(&acc, &Ordinal::monomial(Ordinal::nat(e as u64), v[e]))
        })
}

/// Coefficients up to exponent 3 so that products stay below `ω^7`.
fn small() -> impl Strategy<Value = Vecn> {
    prop::collection::vec(prop_oneof![2 => Just(0u64), 3 => 1u64..5], 4).prop_map(|c| {
        let mut v = [0; DIM];
        v[..4].copy_from_slice(&c);
        v
    })
}

/// Arbitrary CNF ordinals with exponents that may themselves be infinite.
fn deep() -> impl Strategy<Value = Ordinal> {
    let leaf = (0u64..4).prop_map(Ordinal::nat);
    leaf.prop_recursive(2, 16, 3, |inner| {
        prop::collection::vec((inner, 1u64..4), 1..4).prop_map(|ts| {
            ts.into_iter().fold(Ordinal::zero(), |acc, (e, c)| {
                ord_add(&acc, &Ordinal::monomial(e, c))
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn addition_matches_oracle(a in small(), b in small()) {
        prop_assert_eq!(ord_add(&to_ordinal(&a), &to_ordinal(&b)), to_ordinal(&add_v(&a, &b)));
    }

    #[test]
    fn multiplication_matches_oracle(a in small(), b in small()) {
        prop_assert_eq!(ord_mul(&to_ordinal(&a), &to_ordinal(&b)), to_ordinal(&mul_v(&a, &b)));
    }

    #[test]
    fn comparison_matches_oracle(a in small(), b in small()) {
        prop_assert_eq!(ord_cmp(&to_ordinal(&a), &to_ordinal(&b)), cmp_v(&a, &b));
    }

    #[test]
    fn finite_ordinals_are_naturals(m in 0u64..1000, n in 0u64..1000) {
        let (a, b) = (Ordinal::nat(m), Ordinal::nat(n));
        prop_assert_eq!(ord_add(&a, &b), Ordinal::nat(m + n));
        prop_assert_eq!(ord_mul(&a, &b), Ordinal::nat(m * n));
        prop_assert_eq!(ord_cmp(&a, &b), m.cmp(&n));
    }

    #[test]
    fn semiring_laws(a in deep(), b in deep(), c in deep()) {
        prop_assert_eq!(ord_add(&ord_add(&a, &b), &c), ord_add(&a, &ord_add(&b, &c)));
        prop_assert_eq!(ord_mul(&ord_mul(&a, &b), &c), ord_mul(&a, &ord_mul(&b, &c)));
        prop_assert_eq!(ord_mul(&a, &ord_add(&b, &c)), ord_add(&ord_mul(&a, &b), &ord_mul(&a, &c)));
    }

    #[test]
    fn addition_is_monotone_on_the_right(a in deep(), b in deep(), c in deep()) {
        let lhs = ord_cmp(&ord_add(&a, &b), &ord_add(&a, &c));
        prop_assert_eq!(lhs, ord_cmp(&b, &c));
        prop_assert_ne!(ord_cmp(&ord_add(&a, &b), &b), Ordering::Less);
    }

    #[test]
    fn results_stay_well_formed(a in deep(), b in deep()) {
        prop_assert!(ord_add(&a, &b).is_well_formed());
        prop_assert!(ord_mul(&a, &b).is_well_formed());
    }

    #[test]
    fn display_round_trips(a in deep()) {
        prop_assert_eq!(a.to_string().parse::<Ordinal>().unwrap(), a);
    }

    #[test]
    fn cofinality_by_last_term(a in deep()) {
        let expected = match a.terms().last() {
            None => Cofinality::Zero,
            Some(t) if t.exponent.is_zero() => Cofinality::One,
            Some(_) => Cofinality::Omega,
        };
        prop_assert_eq!(a.cofinality(), expected);
    }
}

#[test]
fn non_commutativity_examples() {
    let w = Ordinal::omega();
    let one = Ordinal::one();
    let two = Ordinal::nat(2);
    assert_eq!(ord_add(&one, &w), w);
    assert_ne!(ord_add(&w, &one), w);
    assert_eq!(ord_mul(&two, &w), w);
    assert_eq!(ord_mul(&w, &two).to_string(), "w*2");
}
