//! Ladders of cuts in an [`Rj4Order`].
//!
//! Expand each summand `l_j·ω^{k_j}` into `l_j` copies of `ω^{k_j}` and
//! number the copies `1, 2, …` from right to left, so copy 1 sits directly
//! left of the terminal `ω^ω`. A cut is then one of
//!
//! * the boundary on the right end of copy `m`,
//! * a position `0 < α < ω^{k}` strictly inside copy `m`,
//! * a position `0 < α < ω^ω` strictly inside the terminal summand.
//!
//! The type of a cut is the `n` for which the left side ends in a copy of
//! `ω^n`: the exponent of the copy for a boundary, and the trailing CNF
//! exponent of `α` for an interior position.

use std::collections::HashMap;

use serde::Serialize;

use super::schema::Rj4Order;
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Cut {
    Boundary(u64),
    Interior { block: u64, position: Ordinal },
    Terminal(Ordinal),
}

fn finite_exponent(o: &Ordinal) -> Option<u64> {
    o.trailing_exponent().and_then(Ordinal::as_finite)
}

fn check_position(position: &Ordinal, bound: &Ordinal, what: &str) -> Result<()> {
    if position.is_zero() || position >= bound {
        return Err(Error::InvalidCut(format!(
            "position {position} must lie strictly inside {what}"
        )));
    }
    Ok(())
}

pub fn validate_cut(order: &Rj4Order, cut: &Cut) -> Result<()> {
    match cut {
        Cut::Boundary(0) => Err(Error::InvalidCut("boundaries are numbered from 1".into())),
        Cut::Boundary(_) => Ok(()),
        Cut::Interior { block: 0, .. } => {
            Err(Error::InvalidCut("blocks are numbered from 1".into()))
        }
        Cut::Interior { block, position } => {
            let e = order.block_exponent(*block) as u64;
            check_position(position, &Ordinal::omega_nat_pow(e), &format!("w^{e}"))
        }
        Cut::Terminal(position) => {
            check_position(position, &Ordinal::omega_pow(Ordinal::omega()), "w^w")
        }
    }
}

/// Type of a valid cut.
pub fn cut_type(order: &Rj4Order, cut: &Cut) -> u64 {
    match cut {
        Cut::Boundary(m) => order.block_exponent(*m) as u64,
        Cut::Interior { position, .. } | Cut::Terminal(position) => {
            finite_exponent(position).expect("interior positions lie below w^w")
        }
    }
}

/// First boundary at or left of boundary `m` whose type is at least `t`.
/// Copies passed over have every interior type below their own exponent,
/// hence below `t`.
fn boundary_at_least(order: &Rj4Order, mut m: u64, t: u64) -> Cut {
    while (order.block_exponent(m) as u64) < t {
        m += 1;
    }
    Cut::Boundary(m)
}

/// The rightmost cut strictly left of `cut` whose type is at least the type
/// of `cut`.
pub fn next_rung(order: &Rj4Order, cut: &Cut) -> Cut {
    let t = cut_type(order, cut);
    match cut {
        Cut::Boundary(m) => boundary_at_least(order, m + 1, t),
        // α = β + ω^t: nothing strictly between β and α has type ≥ t, and β
        // itself has type ≥ t.
        Cut::Interior { block, position } => {
            let prev = position.drop_last_unit();
            if prev.is_zero() {
                boundary_at_least(order, block + 1, t)
            } else {
                Cut::Interior {
                    block: *block,
                    position: prev,
                }
            }
        }
        Cut::Terminal(position) => {
            let prev = position.drop_last_unit();
            if prev.is_zero() {
                boundary_at_least(order, 1, t)
            } else {
                Cut::Terminal(prev)
            }
        }
    }
}

/// A lazily extended ladder; iterating yields the start cut first.
#[derive(Clone, Debug)]
pub struct Ladder<'a> {
    order: &'a Rj4Order,
    next: Cut,
}

impl Iterator for Ladder<'_> {
    type Item = Cut;

    fn next(&mut self) -> Option<Cut> {
        let following = next_rung(self.order, &self.next);
        Some(std::mem::replace(&mut self.next, following))
    }
}

pub fn ladder<'a>(order: &'a Rj4Order, start: Cut) -> Result<Ladder<'a>> {
    validate_cut(order, &start)?;
    Ok(Ladder { order, next: start })
}

/// Cut types along the first `depth` rungs.
pub fn ladder_types(order: &Rj4Order, start: Cut, depth: usize) -> Result<Vec<u64>> {
    Ok(ladder(order, start)?
        .take(depth)
        .map(|c| cut_type(order, &c))
        .collect())
}

/// Indices `(k0, l0)` with `C_{k0+n} = D_{l0+n}` for every `n` that stays
/// within `depth` rungs of both ladders, or `None` if the ladders do not
/// meet within `depth`.
pub fn coalescence(
    order: &Rj4Order,
    a: Cut,
    b: Cut,
    depth: usize,
) -> Result<Option<(usize, usize)>> {
    let xs: Vec<Cut> = ladder(order, a)?.take(depth).collect();
    let ys: Vec<Cut> = ladder(order, b)?.take(depth).collect();
    let index: HashMap<&Cut, usize> = ys.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let Some((k0, l0)) = xs
        .iter()
        .enumerate()
        .find_map(|(k, c)| index.get(c).map(|&l| (k, l)))
    else {
        return Ok(None);
    };
    let agree = xs[k0..].iter().zip(&ys[l0..]).all(|(x, y)| x == y);
    Ok(agree.then_some((k0, l0)))
}
