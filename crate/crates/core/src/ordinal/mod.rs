//! Ordinals below ε₀ in hereditary Cantor normal form.
//!
//! An [`Ordinal`] is a finite list of terms `ω^e · c` with strictly
//! decreasing exponents `e` (themselves ordinals) and positive coefficients
//! `c`. The empty list is zero. Arithmetic is the standard ordinal sum and
//! product; both are non-commutative (`1 + ω = ω`, `2 · ω = ω`).
//!
//! The text syntax is `w^3*2 + w + 5`: `*` here is the *ordinal* product, so
//! a CNF coefficient follows its power of `w`. Exponents other than naturals
//! and `w` are parenthesized: `w^(w+1)`.

pub mod laws;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, ParseError};
use crate::lex::{Cursor, Tok};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Ordinal {
    terms: Vec<CnfTerm>,
}

/// One summand `ω^exponent · coefficient` of a Cantor normal form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CnfTerm {
    pub exponent: Ordinal,
    pub coefficient: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cofinality {
    Zero,
    One,
    Omega,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::nat(1)
    }

    pub fn nat(n: u64) -> Self {
        if n == 0 {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![CnfTerm {
                exponent: Ordinal::zero(),
                coefficient: n,
            }],
        }
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// `ω^exponent`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal::monomial(exponent, 1)
    }

    /// `ω^exponent · coefficient`; zero when the coefficient is zero.
    pub fn monomial(exponent: Ordinal, coefficient: u64) -> Self {
        if coefficient == 0 {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![CnfTerm {
                exponent,
                coefficient,
            }],
        }
    }

    /// `ω^n` for a natural `n`.
    pub fn omega_nat_pow(n: u64) -> Self {
        Ordinal::omega_pow(Ordinal::nat(n))
    }

    /// Builds an ordinal from explicit CNF terms, rejecting lists that are
    /// not in normal form.
    pub fn from_terms(terms: Vec<CnfTerm>) -> Result<Self, Error> {
        let o = Ordinal { terms };
        if o.is_well_formed() {
            Ok(o)
        } else {
            Err(Error::Ordinal(
                "exponents must strictly decrease and coefficients be positive".into(),
            ))
        }
    }

    pub(crate) fn from_terms_unchecked(terms: Vec<CnfTerm>) -> Self {
        Ordinal { terms }
    }

    pub fn terms(&self) -> &[CnfTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_finite() == Some(1)
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    pub fn as_finite(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|t| !t.exponent.is_zero())
    }

    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|t| &t.exponent)
    }

    /// Exponent of the last CNF term. For `0 < α < ω^ω` this is the `n` such
    /// that `α` has a final segment of type `ω^n`.
    pub fn trailing_exponent(&self) -> Option<&Ordinal> {
        self.terms.last().map(|t| &t.exponent)
    }

    /// Ordinal `ω^e` with `e` a natural number, returning that `e`.
    pub fn as_omega_nat_pow(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [t] if t.coefficient == 1 => t.exponent.as_finite(),
            _ => None,
        }
    }

    pub fn cofinality(&self) -> Cofinality {
        match self.terms.last() {
            None => Cofinality::Zero,
            Some(t) if t.exponent.is_zero() => Cofinality::One,
            Some(_) => Cofinality::Omega,
        }
    }

    /// Exponents strictly decreasing, coefficients positive, recursively.
    pub fn is_well_formed(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.coefficient > 0 && t.exponent.is_well_formed())
            && self
                .terms
                .windows(2)
                .all(|w| w[0].exponent.cmp(&w[1].exponent) == Ordering::Greater)
    }

    /// The same ordinal with its last unit `ω^e` removed: `α = β + ω^e`
    /// returns `β`. Zero maps to zero.
    pub fn drop_last_unit(&self) -> Ordinal {
        let mut terms = self.terms.clone();
        if let Some(last) = terms.last_mut() {
            if last.coefficient > 1 {
                last.coefficient -= 1;
            } else {
                terms.pop();
            }
        }
        Ordinal { terms }
    }
}

const COEFFICIENT_OVERFLOW: &str = "ordinal coefficient overflows u64";

/// Ordinal sum. Terms of `a` below the leading exponent of `b` are absorbed.
///
/// Panics if a coefficient exceeds `u64::MAX`.
pub fn ord_add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let Some(head) = b.terms.first() else {
        return a.clone();
    };
    let mut terms = Vec::with_capacity(a.terms.len() + b.terms.len());
    let mut rest = &b.terms[..];
    for t in &a.terms {
        match t.exponent.cmp(&head.exponent) {
            Ordering::Greater => terms.push(t.clone()),
            Ordering::Equal => {
                terms.push(CnfTerm {
                    exponent: t.exponent.clone(),
                    coefficient: t
                        .coefficient
                        .checked_add(head.coefficient)
                        .expect(COEFFICIENT_OVERFLOW),
                });
                rest = &b.terms[1..];
                break;
            }
            Ordering::Less => break,
        }
    }
    terms.extend(rest.iter().cloned());
    Ordinal { terms }
}

/// Ordinal product `a · b` (b copies of a, in ordinal convention).
///
/// Panics if a coefficient exceeds `u64::MAX`.
pub fn ord_mul(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let Some(lead) = a.terms.first() else {
        return Ordinal::zero();
    };
    let mut out = Ordinal::zero();
    for t in &b.terms {
        let piece = if t.exponent.is_zero() {
            let mut terms = a.terms.clone();
            terms[0].coefficient = lead
                .coefficient
                .checked_mul(t.coefficient)
                .expect(COEFFICIENT_OVERFLOW);
            Ordinal { terms }
        } else {
            Ordinal::monomial(ord_add(&lead.exponent, &t.exponent), t.coefficient)
        };
        out = ord_add(&out, &piece);
    }
    out
}

pub fn ord_cmp(a: &Ordinal, b: &Ordinal) -> Ordering {
    a.cmp(b)
}

pub fn ord_cofinality(a: &Ordinal) -> Cofinality {
    a.cofinality()
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (x, y) in self.terms.iter().zip(&other.terms) {
            let c = x
                .exponent
                .cmp(&y.exponent)
                .then(x.coefficient.cmp(&y.coefficient));
            if c != Ordering::Equal {
                return c;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for &Ordinal {
    type Output = Ordinal;
    fn add(self, rhs: &Ordinal) -> Ordinal {
        ord_add(self, rhs)
    }
}

impl std::ops::Mul for &Ordinal {
    type Output = Ordinal;
    fn mul(self, rhs: &Ordinal) -> Ordinal {
        ord_mul(self, rhs)
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}

fn fmt_exponent(e: &Ordinal, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if e.is_one() {
        write!(f, "w")
    } else if let Some(n) = e.as_finite() {
        write!(f, "w^{n}")
    } else if *e == Ordinal::omega() {
        write!(f, "w^w")
    } else {
        write!(f, "w^({e})")
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
            } else {
                fmt_exponent(&t.exponent, f)?;
                if t.coefficient > 1 {
                    write!(f, "*{}", t.coefficient)?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Ordinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s)?;
        let o = parse_sum(&mut cur)?;
        cur.expect_end()?;
        Ok(o)
    }
}

// sum := prod ('+' prod)* ; prod := atom ('*' atom)* ;
// atom := nat | 'w' ['^' exp] | '(' sum ')' ; exp := nat | 'w' | '(' sum ')'
pub(crate) fn parse_sum(cur: &mut Cursor) -> Result<Ordinal, ParseError> {
    let mut acc = parse_prod(cur)?;
    while cur.eat_sym('+') {
        let rhs = parse_prod(cur)?;
        acc = ord_add(&acc, &rhs);
    }
    Ok(acc)
}

fn parse_prod(cur: &mut Cursor) -> Result<Ordinal, ParseError> {
    let mut acc = parse_atom(cur)?;
    while cur.eat_sym('*') {
        let rhs = parse_atom(cur)?;
        acc = ord_mul(&acc, &rhs);
    }
    Ok(acc)
}

fn parse_atom(cur: &mut Cursor) -> Result<Ordinal, ParseError> {
    match cur.peek() {
        Some(Tok::Num(n)) => {
            let n = *n;
            cur.bump();
            Ok(Ordinal::nat(n))
        }
        Some(Tok::Sym('(')) => {
            cur.bump();
            let o = parse_sum(cur)?;
            cur.expect_sym(')')?;
            Ok(o)
        }
        Some(Tok::Ident(s)) if s == "w" => {
            cur.bump();
            if cur.eat_sym('^') {
                Ok(Ordinal::omega_pow(parse_exponent(cur)?))
            } else {
                Ok(Ordinal::omega())
            }
        }
        _ => Err(cur.error("expected an ordinal")),
    }
}

pub(crate) fn parse_exponent(cur: &mut Cursor) -> Result<Ordinal, ParseError> {
    match cur.peek() {
        Some(Tok::Num(n)) => {
            let n = *n;
            cur.bump();
            Ok(Ordinal::nat(n))
        }
        Some(Tok::Ident(s)) if s == "w" => {
            cur.bump();
            Ok(Ordinal::omega())
        }
        Some(Tok::Sym('(')) => {
            cur.bump();
            let o = parse_sum(cur)?;
            cur.expect_sym(')')?;
            Ok(o)
        }
        _ => Err(cur.error("expected an exponent")),
    }
}
