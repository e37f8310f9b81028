use super::{Atom, OrderTerm};
use crate::error::{Error, ParseError, Result};
use crate::lex::{parse_affine, Cursor, Tok};
use crate::ordinal::{parse_exponent, parse_sum, Ordinal};
use crate::scattered::{make_i, make_l, Affine, EvAffineSeq, IVariant, Rj4Order, ZBlockSum};

/// Parses a term; the only atom known is `w1` (`ω₁`).
pub fn parse(text: &str) -> Result<OrderTerm> {
    parse_with_atoms(text, &[Atom::omega1()])
}

/// Parses a term, resolving bare identifiers against `atoms`.
pub fn parse_with_atoms(text: &str, atoms: &[Atom]) -> Result<OrderTerm> {
    let mut p = Parser {
        cur: Cursor::new(text)?,
        atoms,
    };
    let t = p.sum()?;
    p.cur.expect_end()?;
    Ok(t)
}

struct Parser<'a> {
    cur: Cursor,
    atoms: &'a [Atom],
}

impl Parser<'_> {
    fn sum(&mut self) -> Result<OrderTerm> {
        let mut parts = vec![self.prod()?];
        while self.cur.eat_sym('+') {
            parts.push(self.prod()?);
        }
        Ok(OrderTerm::sum(parts))
    }

    fn prod(&mut self) -> Result<OrderTerm> {
        let mut acc = self.factor()?;
        while self.cur.eat_sym('*') {
            let rhs = self.factor()?;
            acc = super::lex_prod(acc, rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<OrderTerm> {
        let pos = self.cur.pos();
        match self.cur.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.cur.bump();
                Ok(OrderTerm::nat(n))
            }
            Some(Tok::Sym('(')) => {
                self.cur.bump();
                let t = self.sum()?;
                self.cur.expect_sym(')')?;
                Ok(t)
            }
            Some(Tok::Ident(name)) => {
                self.cur.bump();
                self.named(&name, pos)
            }
            _ => Err(self.cur.error("expected a term").into()),
        }
    }

    fn named(&mut self, name: &str, pos: usize) -> Result<OrderTerm> {
        match name {
            "w" => {
                if self.cur.eat_sym('^') {
                    Ok(OrderTerm::Ord(Ordinal::omega_pow(parse_exponent(
                        &mut self.cur,
                    )?)))
                } else {
                    Ok(OrderTerm::omega())
                }
            }
            "rev" => {
                self.cur.expect_sym('(')?;
                let t = self.sum()?;
                self.cur.expect_sym(')')?;
                Ok(OrderTerm::Reverse(Box::new(t)))
            }
            "pow" => {
                self.cur.expect_sym('(')?;
                let t = self.sum()?;
                self.cur.expect_sym(',')?;
                let npos = self.cur.pos();
                let n = self.cur.expect_num()?;
                let n = u32::try_from(n)
                    .ok()
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| ParseError::new(npos, "power exponent must be in 1..2^32"))?;
                self.cur.expect_sym(')')?;
                OrderTerm::pow(t, n)
            }
            "ord" => {
                self.cur.expect_sym('(')?;
                let o = parse_sum(&mut self.cur)?;
                self.cur.expect_sym(')')?;
                Ok(OrderTerm::Ord(o))
            }
            "L" => Ok(OrderTerm::Rj4(self.l_block()?)),
            "rj4" => Ok(OrderTerm::Rj4(self.rj4_body(pos)?)),
            "zsum" => Ok(OrderTerm::ZSum(self.zsum_body(pos)?)),
            "I_even" => Ok(OrderTerm::ZSum(make_i(IVariant::Even))),
            "I_odd" => Ok(OrderTerm::ZSum(make_i(IVariant::Odd))),
            "I_mid" => Ok(OrderTerm::ZSum(make_i(IVariant::Mid))),
            _ => self
                .atoms
                .iter()
                .find(|a| a.name == name)
                .map(|a| OrderTerm::Atom(a.clone()))
                .ok_or_else(|| Error::UnknownBlock(name.to_string())),
        }
    }

    fn l_block(&mut self) -> Result<Rj4Order> {
        self.cur.expect_sym('(')?;
        let i = self.cur.expect_int()?;
        self.cur.expect_sym(')')?;
        Ok(make_l(i))
    }

    fn block(&mut self) -> Result<Rj4Order> {
        let pos = self.cur.pos();
        if self.cur.is_ident("L") {
            self.cur.bump();
            self.l_block()
        } else if self.cur.is_ident("rj4") {
            self.cur.bump();
            self.rj4_body(pos)
        } else {
            Err(self.cur.error("expected 'L(..)' or 'rj4{..}'").into())
        }
    }

    // rj4{init=[(l,k),...]; tail j>=J: l=a*j+b, k=c*j+d}
    fn rj4_body(&mut self, pos: usize) -> Result<Rj4Order> {
        let c = &mut self.cur;
        c.expect_sym('{')?;
        c.expect_ident("init")?;
        c.expect_sym('=')?;
        c.expect_sym('[')?;
        let mut initial = Vec::new();
        if !c.is_sym(']') {
            loop {
                c.expect_sym('(')?;
                let l = c.expect_int()?;
                c.expect_sym(',')?;
                let k = c.expect_int()?;
                c.expect_sym(')')?;
                initial.push((l, k));
                if !c.eat_sym(',') {
                    break;
                }
            }
        }
        c.expect_sym(']')?;
        c.expect_sym(';')?;
        c.expect_ident("tail")?;
        c.expect_ident("j")?;
        c.expect_sym('>')?;
        c.expect_sym('=')?;
        let onset = c.expect_int()?;
        c.expect_sym(':')?;
        c.expect_ident("l")?;
        c.expect_sym('=')?;
        let (ls, lo) = parse_affine(c, "j")?;
        c.expect_sym(',')?;
        c.expect_ident("k")?;
        c.expect_sym('=')?;
        let (ks, ko) = parse_affine(c, "j")?;
        c.expect_sym('}')?;
        let seq = EvAffineSeq::new(initial, onset, Affine::new(ls, lo), Affine::new(ks, ko))
            .map_err(|e| at(pos, e))?;
        Ok(Rj4Order::new(seq))
    }

    // zsum{L(p*i+q)} | zsum{[block, ...]}
    fn zsum_body(&mut self, pos: usize) -> Result<ZBlockSum> {
        self.cur.expect_sym('{')?;
        let z = if self.cur.eat_sym('[') {
            let mut blocks = vec![self.block()?];
            while self.cur.eat_sym(',') {
                blocks.push(self.block()?);
            }
            self.cur.expect_sym(']')?;
            ZBlockSum::table(blocks)
        } else {
            self.cur.expect_ident("L")?;
            self.cur.expect_sym('(')?;
            let (p, q) = parse_affine(&mut self.cur, "i")?;
            self.cur.expect_sym(')')?;
            ZBlockSum::l_family(p, q)
        }
        .map_err(|e| at(pos, e))?;
        self.cur.expect_sym('}')?;
        Ok(z)
    }
}

/// Reports a semantic schema error as a syntax error at `pos`.
fn at(pos: usize, e: Error) -> Error {
    match e {
        Error::Schema(m) => ParseError::new(pos, m).into(),
        other => other,
    }
}
