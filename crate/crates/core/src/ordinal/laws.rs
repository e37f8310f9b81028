//! Law-based self-check for ordinal arithmetic.
//!
//! There is no independent model of limit ordinals to test against, so the
//! arithmetic is pinned down by algebraic laws on random samples below `ω^6`
//! plus a table of hand-verified identities. The suite is parameterized over
//! an [`Arithmetic`] so that deliberately broken implementations can be fed
//! through it and shown to be caught.

use std::cmp::Ordering;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::{ord_add, ord_mul, CnfTerm, Ordinal};

pub type BinOp = fn(&Ordinal, &Ordinal) -> Ordinal;

#[derive(Clone, Copy)]
pub struct Arithmetic {
    pub add: BinOp,
    pub mul: BinOp,
}

impl Arithmetic {
    pub const STANDARD: Arithmetic = Arithmetic {
        add: ord_add,
        mul: ord_mul,
    };
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawViolation {
    pub law: String,
    pub witnesses: Vec<Ordinal>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub identities_checked: usize,
    pub samples_checked: usize,
    pub violation: Option<LawViolation>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

enum Expected {
    Equals(Ordinal),
    Differs,
}

struct Identity {
    name: &'static str,
    lhs: fn(&Arithmetic) -> Ordinal,
    rhs: fn(&Arithmetic) -> Ordinal,
    expect: Expected,
    witnesses: fn() -> Vec<Ordinal>,
}

fn cnf(terms: &[(Ordinal, u64)]) -> Ordinal {
    Ordinal::from_terms_unchecked(
        terms
            .iter()
            .map(|(e, c)| CnfTerm {
                exponent: e.clone(),
                coefficient: *c,
            })
            .collect(),
    )
}

fn n(k: u64) -> Ordinal {
    Ordinal::nat(k)
}

fn w() -> Ordinal {
    Ordinal::omega()
}

fn ww() -> Ordinal {
    Ordinal::omega_pow(w())
}

// Expected values are written directly as CNF term lists, never through
// the arithmetic under test.
fn identity_table() -> Vec<Identity> {
    vec![
        Identity {
            name: "1 + w = w",
            lhs: |a| (a.add)(&n(1), &w()),
            rhs: |_| w(),
            expect: Expected::Equals(w()),
            witnesses: || vec![n(1), w()],
        },
        Identity {
            name: "3 + w = w",
            lhs: |a| (a.add)(&n(3), &w()),
            rhs: |_| w(),
            expect: Expected::Equals(w()),
            witnesses: || vec![n(3), w()],
        },
        Identity {
            name: "w + w^w = w^w",
            lhs: |a| (a.add)(&w(), &ww()),
            rhs: |_| ww(),
            expect: Expected::Equals(ww()),
            witnesses: || vec![w(), ww()],
        },
        Identity {
            name: "(w*2 + 3) + (w + 1) = w*3 + 1",
            lhs: |a| (a.add)(&cnf(&[(n(1), 2), (n(0), 3)]), &cnf(&[(n(1), 1), (n(0), 1)])),
            rhs: |_| cnf(&[(n(1), 3), (n(0), 1)]),
            expect: Expected::Equals(cnf(&[(n(1), 3), (n(0), 1)])),
            witnesses: || vec![cnf(&[(n(1), 2), (n(0), 3)]), cnf(&[(n(1), 1), (n(0), 1)])],
        },
        Identity {
            name: "w * 2 = w*2",
            lhs: |a| (a.mul)(&w(), &n(2)),
            rhs: |_| cnf(&[(n(1), 2)]),
            expect: Expected::Equals(cnf(&[(n(1), 2)])),
            witnesses: || vec![w(), n(2)],
        },
        Identity {
            name: "2 * w = w",
            lhs: |a| (a.mul)(&n(2), &w()),
            rhs: |_| w(),
            expect: Expected::Equals(w()),
            witnesses: || vec![n(2), w()],
        },
        Identity {
            name: "w * 2 != 2 * w",
            lhs: |a| (a.mul)(&w(), &n(2)),
            rhs: |a| (a.mul)(&n(2), &w()),
            expect: Expected::Differs,
            witnesses: || vec![w(), n(2)],
        },
        Identity {
            name: "(w + 1) * w = w * w",
            lhs: |a| (a.mul)(&cnf(&[(n(1), 1), (n(0), 1)]), &w()),
            rhs: |a| (a.mul)(&w(), &w()),
            expect: Expected::Equals(cnf(&[(n(2), 1)])),
            witnesses: || vec![cnf(&[(n(1), 1), (n(0), 1)]), w()],
        },
        Identity {
            name: "w^w * w = w^(w + 1)",
            lhs: |a| (a.mul)(&ww(), &w()),
            rhs: |_| cnf(&[(cnf(&[(n(1), 1), (n(0), 1)]), 1)]),
            expect: Expected::Equals(cnf(&[(cnf(&[(n(1), 1), (n(0), 1)]), 1)])),
            witnesses: || vec![ww(), w()],
        },
        Identity {
            name: "w * w^w = w^w",
            lhs: |a| (a.mul)(&w(), &ww()),
            rhs: |_| ww(),
            expect: Expected::Equals(ww()),
            witnesses: || vec![w(), ww()],
        },
        Identity {
            name: "(w^2 + w) * w = w^3",
            lhs: |a| (a.mul)(&cnf(&[(n(2), 1), (n(1), 1)]), &w()),
            rhs: |_| cnf(&[(n(3), 1)]),
            expect: Expected::Equals(cnf(&[(n(3), 1)])),
            witnesses: || vec![cnf(&[(n(2), 1), (n(1), 1)]), w()],
        },
        Identity {
            name: "2 * (w + 1) = w + 2",
            lhs: |a| (a.mul)(&n(2), &cnf(&[(n(1), 1), (n(0), 1)])),
            rhs: |_| cnf(&[(n(1), 1), (n(0), 2)]),
            expect: Expected::Equals(cnf(&[(n(1), 1), (n(0), 2)])),
            witnesses: || vec![n(2), cnf(&[(n(1), 1), (n(0), 1)])],
        },
        Identity {
            name: "(w + 1) * 2 = w*2 + 1",
            lhs: |a| (a.mul)(&cnf(&[(n(1), 1), (n(0), 1)]), &n(2)),
            rhs: |_| cnf(&[(n(1), 2), (n(0), 1)]),
            expect: Expected::Equals(cnf(&[(n(1), 2), (n(0), 1)])),
            witnesses: || vec![cnf(&[(n(1), 1), (n(0), 1)]), n(2)],
        },
    ]
}

fn check_identities(arith: &Arithmetic) -> Result<usize, LawViolation> {
    let table = identity_table();
    for id in &table {
        let lhs = (id.lhs)(arith);
        let rhs = (id.rhs)(arith);
        let ok = match &id.expect {
            Expected::Equals(v) => lhs == *v && rhs == *v,
            Expected::Differs => lhs != rhs,
        };
        if !ok {
            return Err(LawViolation {
                law: format!("identity {}", id.name),
                witnesses: (id.witnesses)(),
                detail: format!("lhs = {lhs}, rhs = {rhs}"),
            });
        }
    }
    Ok(table.len())
}

fn violation(law: &str, witnesses: &[&Ordinal], detail: String) -> LawViolation {
    LawViolation {
        law: law.to_string(),
        witnesses: witnesses.iter().map(|o| (*o).clone()).collect(),
        detail,
    }
}

/// Checks every sampled law on one triple.
pub fn check_triple(
    arith: &Arithmetic,
    a: &Ordinal,
    b: &Ordinal,
    c: &Ordinal,
) -> Result<(), LawViolation> {
    let add = arith.add;
    let mul = arith.mul;

    for (x, y, op, name) in [
        (a, b, add, "sum is in normal form"),
        (a, b, mul, "product is in normal form"),
    ] {
        let r = op(x, y);
        if !r.is_well_formed() {
            return Err(violation(name, &[x, y], format!("result {r:?}")));
        }
    }

    let l = add(&add(a, b), c);
    let r = add(a, &add(b, c));
    if l != r {
        return Err(violation(
            "associativity of +",
            &[a, b, c],
            format!("(a+b)+c = {l}, a+(b+c) = {r}"),
        ));
    }

    let l = mul(&mul(a, b), c);
    let r = mul(a, &mul(b, c));
    if l != r {
        return Err(violation(
            "associativity of *",
            &[a, b, c],
            format!("(ab)c = {l}, a(bc) = {r}"),
        ));
    }

    let l = mul(a, &add(b, c));
    let r = add(&mul(a, b), &mul(a, c));
    if l != r {
        return Err(violation(
            "left distributivity",
            &[a, b, c],
            format!("a(b+c) = {l}, ab+ac = {r}"),
        ));
    }

    let s = add(a, b);
    if s < *b {
        return Err(violation("a + b >= b", &[a, b], format!("a+b = {s}")));
    }

    let (lo, hi) = match b.cmp(c) {
        Ordering::Less => (b, c),
        Ordering::Greater => (c, b),
        Ordering::Equal => (b, c),
    };
    if lo != hi {
        let (x, y) = (add(a, lo), add(a, hi));
        if x >= y {
            return Err(violation(
                "strict monotonicity of + in the right argument",
                &[a, lo, hi],
                format!("a+lo = {x}, a+hi = {y}"),
            ));
        }
        if !a.is_zero() {
            let (x, y) = (mul(a, lo), mul(a, hi));
            if x >= y {
                return Err(violation(
                    "strict monotonicity of * in the right argument",
                    &[a, lo, hi],
                    format!("a*lo = {x}, a*hi = {y}"),
                ));
            }
        }
    }

    // absorption: finite n vanishes in front of a limit
    let finite = Ordinal::nat(1 + a.terms().iter().map(|t| t.coefficient).sum::<u64>() % 7);
    let limit = if c.is_limit() {
        c.clone()
    } else {
        add(c, &Ordinal::omega())
    };
    let s = add(&finite, &limit);
    if s != limit {
        return Err(violation(
            "absorption n + limit = limit",
            &[&finite, &limit],
            format!("n + limit = {s}"),
        ));
    }
    Ok(())
}

/// A random ordinal below `ω^(max_exponent + 1)` with up to four CNF terms
/// and coefficients in `1..=9`.
pub fn sample_ordinal(rng: &mut impl Rng, max_exponent: u64) -> Ordinal {
    let count = rng.gen_range(0..=4usize);
    let mut exps: Vec<u64> = (0..count)
        .map(|_| rng.gen_range(0..=max_exponent))
        .collect();
    exps.sort_unstable_by(|a, b| b.cmp(a));
    exps.dedup();
    Ordinal::from_terms_unchecked(
        exps.into_iter()
            .map(|e| CnfTerm {
                exponent: Ordinal::nat(e),
                coefficient: rng.gen_range(1..=9),
            })
            .collect(),
    )
}

pub fn law_suite_with<I>(arith: &Arithmetic, samples: I) -> LawReport
where
    I: IntoIterator<Item = [Ordinal; 3]>,
{
    let identities_checked = match check_identities(arith) {
        Ok(n) => n,
        Err(v) => {
            return LawReport {
                identities_checked: 0,
                samples_checked: 0,
                violation: Some(v),
            }
        }
    };
    let mut samples_checked = 0;
    for [a, b, c] in samples {
        if let Err(v) = check_triple(arith, &a, &b, &c) {
            return LawReport {
                identities_checked,
                samples_checked,
                violation: Some(v),
            };
        }
        samples_checked += 1;
    }
    LawReport {
        identities_checked,
        samples_checked,
        violation: None,
    }
}

/// Runs the identity table and `budget` seeded random triples below `ω^6`.
pub fn law_suite(budget: usize, seed: u64) -> LawReport {
    law_suite_seeded(&Arithmetic::STANDARD, budget, seed)
}

pub fn law_suite_seeded(arith: &Arithmetic, budget: usize, seed: u64) -> LawReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let samples = (0..budget).map(move |_| {
        [
            sample_ordinal(&mut rng, 5),
            sample_ordinal(&mut rng, 5),
            sample_ordinal(&mut rng, 5),
        ]
    });
    law_suite_with(arith, samples)
}

/// Deliberately broken arithmetic used to show the suite has teeth.
pub mod mutants {
    use super::*;

    /// Ordinal sum that merges equal exponents but never absorbs smaller
    /// terms of the left operand.
    pub fn add_without_absorption(a: &Ordinal, b: &Ordinal) -> Ordinal {
        let mut terms: Vec<CnfTerm> = a.terms().to_vec();
        for t in b.terms() {
            match terms.last_mut() {
                Some(last) if last.exponent == t.exponent => last.coefficient += t.coefficient,
                _ => terms.push(t.clone()),
            }
        }
        Ordinal::from_terms_unchecked(terms)
    }

    pub const BROKEN_ABSORPTION: Arithmetic = Arithmetic {
        add: add_without_absorption,
        mul: ord_mul,
    };
}
