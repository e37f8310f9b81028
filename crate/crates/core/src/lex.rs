//! Tokenizer and cursor shared by the ordinal, order-term, and sequence
//! literal parsers.

use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Num(u64),
    Ident(String),
    Sym(char),
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub pos: usize,
}

const SYMBOLS: &[char] = &[
    '(', ')', '+', '-', '*', '^', ',', '[', ']', '{', '}', ';', '=', '>', ':',
];

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            let n = src[pos..end]
                .parse::<u64>()
                .map_err(|_| ParseError::new(pos, "integer literal out of range"))?;
            out.push(Token {
                tok: Tok::Num(n),
                pos,
            });
        } else if c.is_alphabetic() || c == '_' {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            out.push(Token {
                tok: Tok::Ident(src[pos..end].to_string()),
                pos,
            });
        } else if SYMBOLS.contains(&c) {
            out.push(Token {
                tok: Tok::Sym(c),
                pos,
            });
            chars.next();
        } else {
            return Err(ParseError::new(pos, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

/// A position in a token stream. `end` is the byte offset reported for
/// errors at end of input.
pub(crate) struct Cursor {
    toks: Vec<Token>,
    idx: usize,
    end: usize,
}

impl Cursor {
    pub fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Cursor {
            toks: tokenize(src)?,
            idx: 0,
            end: src.len(),
        })
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|t| &t.tok)
    }

    pub fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |t| t.pos)
    }

    pub fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|t| t.tok.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    pub fn at_end(&self) -> bool {
        self.idx >= self.toks.len()
    }

    pub fn is_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    pub fn is_ident(&self, name: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == name)
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub fn expect_ident(&mut self, name: &str) -> Result<(), ParseError> {
        if self.is_ident(name) {
            self.idx += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{name}'")))
        }
    }

    pub fn expect_num(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Some(&Tok::Num(n)) => {
                self.idx += 1;
                Ok(n)
            }
            _ => Err(self.error("expected a natural number")),
        }
    }

    /// An optionally negated integer.
    pub fn expect_int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat_sym('-');
        let pos = self.pos();
        let n = self.expect_num()?;
        let n = i64::try_from(n).map_err(|_| ParseError::new(pos, "integer out of range"))?;
        Ok(if neg { -n } else { n })
    }

    pub fn expect_end(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    pub fn error(&self, msg: impl Into<String>) -> ParseError {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(Tok::Num(n)) => format!("'{n}'"),
            Some(Tok::Ident(s)) => format!("'{s}'"),
            Some(Tok::Sym(c)) => format!("'{c}'"),
        };
        ParseError::new(self.pos(), format!("{}, found {found}", msg.into()))
    }
}

/// Parses an affine expression in one variable, e.g. `2*i+1`, `i - 3`,
/// `-1*j`, or a bare constant. Returns `(slope, offset)`.
pub(crate) fn parse_affine(cur: &mut Cursor, var: &str) -> Result<(i64, i64), ParseError> {
    let mut slope = 0i64;
    let mut offset = 0i64;
    let mut first = true;
    loop {
        let sign = if cur.eat_sym('-') {
            -1
        } else if first || cur.eat_sym('+') {
            1
        } else {
            break;
        };
        first = false;
        if cur.is_ident(var) {
            cur.bump();
            slope += sign;
            continue;
        }
        let pos = cur.pos();
        let n = cur.expect_num()?;
        let n = i64::try_from(n).map_err(|_| ParseError::new(pos, "integer out of range"))?;
        if cur.eat_sym('*') {
            cur.expect_ident(var)?;
            slope += sign * n;
        } else {
            offset += sign * n;
        }
    }
    Ok((slope, offset))
}

pub(crate) fn render_affine(slope: i64, offset: i64, var: &str) -> String {
    let mut s = match slope {
        0 => return offset.to_string(),
        1 => var.to_string(),
        -1 => format!("-{var}"),
        _ => format!("{slope}*{var}"),
    };
    if offset > 0 {
        s.push_str(&format!("+{offset}"));
    } else if offset < 0 {
        s.push_str(&format!("-{}", -offset));
    }
    s
}
