//! Order-type expressions.
//!
//! Products are lexicographic: `X * Y` replaces every point of `X` by a copy
//! of `Y`. On ordinal leaves this is the ordinal product taken in the other
//! order, `a * b = b·a`, so `2 * w = w·2` (two copies of `w`) while
//! `w * 2 = 2·w = w`.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! term   := sum
//! sum    := prod ('+' prod)*
//! prod   := factor ('*' factor)*
//! factor := 'rev(' term ')' | 'pow(' term ',' nat ')' | 'ord(' ordinal ')'
//!         | 'L(' int ')' | 'I_even' | 'I_odd' | 'I_mid'
//!         | 'rj4{' … '}' | 'zsum{' … '}'
//!         | 'w^w' | 'w^' nat | 'w^(' ordinal ')' | 'w' | nat
//!         | '(' term ')' | atom-name
//! ```
//!
//! `ordinal` is the CNF syntax of [`crate::ordinal`], where `*` is the
//! ordinal product.

mod iso;
mod normalize;
mod parse;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ordinal::{ord_add, ord_mul, Ordinal};
use crate::scattered::{Rj4Order, ZBlockSum};

pub use iso::{iso_check, Verdict};
pub use normalize::normalize;
pub use parse::{parse, parse_with_atoms};

/// Cofinality or coinitiality class of an order: a point, `ω`, or `ω₁`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CofClass {
    One,
    Omega,
    Omega1,
}

impl fmt::Display for CofClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CofClass::One => "1",
            CofClass::Omega => "ω",
            CofClass::Omega1 => "ω₁",
        })
    }
}

/// An opaque order known only by name and end behaviour.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Atom {
    pub name: String,
    pub coinitiality: CofClass,
    pub cofinality: CofClass,
}

impl Atom {
    pub fn new(name: impl Into<String>, coinitiality: CofClass, cofinality: CofClass) -> Self {
        Atom {
            name: name.into(),
            coinitiality,
            cofinality,
        }
    }

    /// `ω₁`, written `w1`.
    pub fn omega1() -> Self {
        Atom::new("w1", CofClass::One, CofClass::Omega1)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum OrderTerm {
    Ord(Ordinal),
    Atom(Atom),
    Reverse(Box<OrderTerm>),
    Sum(Vec<OrderTerm>),
    Prod(Box<OrderTerm>, Box<OrderTerm>),
    Pow(Box<OrderTerm>, u32),
    Rj4(Rj4Order),
    ZSum(ZBlockSum),
}

impl OrderTerm {
    pub fn ord(o: Ordinal) -> Self {
        OrderTerm::Ord(o)
    }

    pub fn nat(n: u64) -> Self {
        OrderTerm::Ord(Ordinal::nat(n))
    }

    pub fn omega() -> Self {
        OrderTerm::Ord(Ordinal::omega())
    }

    /// A sum; one part is returned as is and no parts give the empty order.
    pub fn sum(mut parts: Vec<OrderTerm>) -> Self {
        match parts.len() {
            0 => OrderTerm::nat(0),
            1 => parts.pop().unwrap(),
            _ => OrderTerm::Sum(parts),
        }
    }

    pub fn pow(base: OrderTerm, exponent: u32) -> Result<Self> {
        if exponent == 0 {
            return Err(Error::Precondition(
                "power exponent must be at least 1".into(),
            ));
        }
        Ok(OrderTerm::Pow(Box::new(base), exponent))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, OrderTerm::Ord(o) if o.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, OrderTerm::Ord(o) if o.is_one())
    }

    /// The ordinal this term denotes, when it is built from ordinal leaves
    /// by sums, products, powers, and reversal of finite orders.
    pub fn ordinal_value(&self) -> Option<Ordinal> {
        match self {
            OrderTerm::Ord(o) => Some(o.clone()),
            OrderTerm::Sum(parts) => parts.iter().try_fold(Ordinal::zero(), |acc, p| {
                Some(ord_add(&acc, &p.ordinal_value()?))
            }),
            OrderTerm::Prod(x, y) => Some(ord_mul(&y.ordinal_value()?, &x.ordinal_value()?)),
            OrderTerm::Pow(x, n) => {
                let base = x.ordinal_value()?;
                Some((1..*n).fold(base.clone(), |acc, _| ord_mul(&acc, &base)))
            }
            OrderTerm::Reverse(x) => x.ordinal_value().filter(Ordinal::is_finite),
            OrderTerm::Atom(_) | OrderTerm::Rj4(_) | OrderTerm::ZSum(_) => None,
        }
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderTerm::Ord(o) => fmt_ordinal_leaf(o, f),
            OrderTerm::Atom(a) => f.write_str(&a.name),
            OrderTerm::Reverse(x) => write!(f, "rev({x})"),
            OrderTerm::Pow(x, n) => write!(f, "pow({x}, {n})"),
            OrderTerm::Rj4(r) => write!(f, "{r}"),
            OrderTerm::ZSum(z) => write!(f, "{z}"),
            OrderTerm::Sum(_) | OrderTerm::Prod(..) => write!(f, "({self})"),
        }
    }

    fn fmt_prod(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderTerm::Prod(x, y) => {
                x.fmt_prod(f)?;
                f.write_str(" * ")?;
                y.fmt_factor(f)
            }
            _ => self.fmt_factor(f),
        }
    }
}

fn fmt_ordinal_leaf(o: &Ordinal, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if let Some(n) = o.as_finite() {
        return write!(f, "{n}");
    }
    match o.terms() {
        [t] if t.coefficient == 1 => write!(f, "{o}"),
        _ => write!(f, "ord({o})"),
    }
}

impl fmt::Display for OrderTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderTerm::Sum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    p.fmt_prod(f)?;
                }
                Ok(())
            }
            _ => self.fmt_prod(f),
        }
    }
}

/// The unreduced product `x × y`.
pub fn lex_prod(x: OrderTerm, y: OrderTerm) -> OrderTerm {
    OrderTerm::Prod(Box::new(x), Box::new(y))
}

/// Pushes reversal through the term: `(X + Y)* = Y* + X*`,
/// `(XY)* = X*Y*`, `(X^n)* = (X*)^n`, finite orders are self-dual, and a
/// double reversal cancels. The result carries `rev` only on infinite
/// leaves.
pub fn reverse(t: &OrderTerm) -> OrderTerm {
    push_reversal(t, true)
}

fn push_reversal(t: &OrderTerm, flip: bool) -> OrderTerm {
    match t {
        OrderTerm::Ord(o) if o.is_finite() => t.clone(),
        OrderTerm::Reverse(x) => push_reversal(x, !flip),
        OrderTerm::Sum(parts) => {
            let mut parts: Vec<OrderTerm> = parts.iter().map(|p| push_reversal(p, flip)).collect();
            if flip {
                parts.reverse();
            }
            OrderTerm::Sum(parts)
        }
        OrderTerm::Prod(x, y) => lex_prod(push_reversal(x, flip), push_reversal(y, flip)),
        OrderTerm::Pow(x, n) => OrderTerm::Pow(Box::new(push_reversal(x, flip)), *n),
        OrderTerm::Ord(_) | OrderTerm::Atom(_) | OrderTerm::Rj4(_) | OrderTerm::ZSum(_) => {
            if flip {
                OrderTerm::Reverse(Box::new(t.clone()))
            } else {
                t.clone()
            }
        }
    }
}
