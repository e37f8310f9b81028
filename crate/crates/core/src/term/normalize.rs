use super::OrderTerm;
use crate::ordinal::{ord_add, ord_mul, Ordinal};
use crate::scattered::{rj4_mul_omega, zsum_mul_omega};

/// Rewrites to a fixed point, innermost first, with these rules only:
///
/// * R1 `(X + Y) * Z → X*Z + Y*Z` (right distributivity; there is no
///   left-distributive rule)
/// * R2 `a * b → b·a` on ordinal leaves
/// * R3 adjacent ordinal summands fuse by ordinal addition
/// * R4 `pow(X, m) * pow(X, n) → pow(X, m + n)`
/// * R5 nested sums flatten; `0` and `1` are eliminated as summands and
///   factors, `pow(X, 1) → X`, and `rev` cancels on itself and on finite
///   orders
/// * R6 `B * w^k → B·ω^k` for an RJ4 block `B` and finite `k ≥ 1`
/// * R7 `S * w^k` for a ℤ-sum `S`: R6 on every block, then the index shift
pub fn normalize(t: &OrderTerm) -> OrderTerm {
    let t = match t {
        OrderTerm::Reverse(x) => OrderTerm::Reverse(Box::new(normalize(x))),
        OrderTerm::Sum(parts) => OrderTerm::Sum(parts.iter().map(normalize).collect()),
        OrderTerm::Prod(x, y) => OrderTerm::Prod(Box::new(normalize(x)), Box::new(normalize(y))),
        OrderTerm::Pow(x, n) => OrderTerm::Pow(Box::new(normalize(x)), *n),
        leaf => leaf.clone(),
    };
    match rewrite_root(&t) {
        Some(next) => normalize(&next),
        None => t,
    }
}

fn finite_omega_power(t: &OrderTerm) -> Option<u64> {
    match t {
        OrderTerm::Ord(o) => o.as_omega_nat_pow().filter(|&k| k >= 1),
        _ => None,
    }
}

/// One rewrite at the root of a term whose children are already normal.
fn rewrite_root(t: &OrderTerm) -> Option<OrderTerm> {
    match t {
        OrderTerm::Reverse(x) => match &**x {
            OrderTerm::Reverse(inner) => Some((**inner).clone()),
            OrderTerm::Ord(o) if o.is_finite() => Some((**x).clone()),
            _ => None,
        },
        OrderTerm::Sum(parts) => rewrite_sum(parts),
        OrderTerm::Pow(x, n) => {
            if *n == 1 || x.is_zero() || x.is_one() {
                Some((**x).clone())
            } else {
                None
            }
        }
        OrderTerm::Prod(x, y) => rewrite_prod(x, y),
        _ => None,
    }
}

fn rewrite_sum(parts: &[OrderTerm]) -> Option<OrderTerm> {
    let mut out: Vec<OrderTerm> = Vec::with_capacity(parts.len());
    let mut changed = false;
    for p in parts {
        match p {
            OrderTerm::Sum(inner) => {
                changed = true;
                out.extend(inner.iter().cloned());
            }
            _ if p.is_zero() => changed = true,
            _ => out.push(p.clone()),
        }
    }
    let mut fused: Vec<OrderTerm> = Vec::with_capacity(out.len());
    for p in out {
        if let (Some(OrderTerm::Ord(a)), OrderTerm::Ord(b)) = (fused.last_mut(), &p) {
            *a = ord_add(a, b);
            changed = true;
        } else {
            fused.push(p);
        }
    }
    if fused.len() < 2 {
        return Some(
            fused
                .pop()
                .unwrap_or_else(|| OrderTerm::Ord(Ordinal::zero())),
        );
    }
    changed.then_some(OrderTerm::Sum(fused))
}

fn rewrite_prod(x: &OrderTerm, y: &OrderTerm) -> Option<OrderTerm> {
    if x.is_zero() || y.is_zero() {
        return Some(OrderTerm::Ord(Ordinal::zero()));
    }
    if y.is_one() {
        return Some(x.clone());
    }
    if x.is_one() {
        return Some(y.clone());
    }
    match (x, y) {
        (OrderTerm::Sum(parts), _) => Some(OrderTerm::Sum(
            parts
                .iter()
                .map(|p| super::lex_prod(p.clone(), y.clone()))
                .collect(),
        )),
        (OrderTerm::Ord(a), OrderTerm::Ord(b)) => Some(OrderTerm::Ord(ord_mul(b, a))),
        (OrderTerm::Pow(bx, m), OrderTerm::Pow(by, n)) if bx == by => {
            Some(OrderTerm::Pow(bx.clone(), m + n))
        }
        (OrderTerm::Rj4(r), _) => {
            let k = finite_omega_power(y)?;
            Some(OrderTerm::Rj4(
                (0..k).fold(r.clone(), |r, _| rj4_mul_omega(&r)),
            ))
        }
        (OrderTerm::ZSum(s), _) => {
            let k = finite_omega_power(y)?;
            let raised = (0..k).fold(s.clone(), |s, _| zsum_mul_omega(&s));
            Some(OrderTerm::ZSum(raised.reindexed()))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scattered::{make_i, make_l, IVariant};
    use crate::term::{lex_prod, parse};

    fn n(src: &str) -> OrderTerm {
        normalize(&parse(src).unwrap())
    }

    #[test]
    fn distribution_then_fusion() {
        let t = lex_prod(
            OrderTerm::Sum(vec![OrderTerm::nat(1), OrderTerm::omega()]),
            OrderTerm::omega(),
        );
        // ω copies of 1 + ω is ω + ω² as an ordinal sum, i.e. ω²
        let expected = ord_add(&Ordinal::omega(), &Ordinal::omega_nat_pow(2));
        assert_eq!(normalize(&t), OrderTerm::Ord(expected.clone()));
        assert_eq!(expected, Ordinal::omega_nat_pow(2));
        assert_eq!(
            expected,
            ord_mul(&Ordinal::omega(), &"1 + w".parse().unwrap())
        );
    }

    #[test]
    fn block_times_omega() {
        let t = lex_prod(OrderTerm::Rj4(make_l(0)), OrderTerm::omega());
        assert_eq!(normalize(&t), OrderTerm::Rj4(make_l(1)));
        // l_j = j + 2, k_j = j + 3: the same sequence as L_1 from index 3 on
        let OrderTerm::Rj4(r) = n("L(-2) * w^3") else {
            panic!()
        };
        assert_eq!(r.seq().pair(1), (3, 4));
        assert!(crate::scattered::slater_iso(&r, &make_l(1)));
        assert_eq!(n("I_even * w"), OrderTerm::ZSum(make_i(IVariant::Odd)));
        assert_eq!(n("I_mid * w^2"), n("zsum{L(i+2)}"));
    }

    #[test]
    fn powers_merge() {
        let t = lex_prod(
            OrderTerm::pow(OrderTerm::omega(), 2).unwrap(),
            OrderTerm::pow(OrderTerm::omega(), 3).unwrap(),
        );
        let r = normalize(&t);
        assert_eq!(r, OrderTerm::pow(OrderTerm::omega(), 5).unwrap());
        assert_eq!(r.ordinal_value().unwrap(), Ordinal::omega_nat_pow(5));
    }

    #[test]
    fn ordinal_leaf_products_reverse() {
        assert_eq!(n("w^2 * w"), OrderTerm::Ord(Ordinal::omega_nat_pow(3)));
        assert_eq!(n("2 * w"), OrderTerm::Ord("w*2".parse().unwrap()));
        assert_eq!(n("w * 2"), OrderTerm::omega());
        assert_eq!(n("L(3) * 1"), OrderTerm::Rj4(make_l(3)));
    }

    #[test]
    fn units_and_reversal() {
        assert_eq!(n("0 + w + 0"), OrderTerm::omega());
        assert_eq!(n("rev(rev(w))"), OrderTerm::omega());
        assert_eq!(n("rev(5)"), OrderTerm::nat(5));
        assert_eq!(n("w1 * 0"), OrderTerm::nat(0));
        assert_eq!(n("pow(w1, 1)"), n("w1"));
        assert_eq!(n("(w1 + 2) + (3 + w1)"), n("w1 + 5 + w1"));
    }

    #[test]
    fn no_left_distribution() {
        let t = n("w1 * (w + 1)");
        assert!(matches!(t, OrderTerm::Prod(..)), "{t}");
    }

    #[test]
    fn atoms_are_kept() {
        assert_eq!(n("(1 + w1) * 2").to_string(), "2 + w1 * 2");
    }
}
