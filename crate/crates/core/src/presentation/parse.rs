//! Parser for the presentation DSL:
//!
//! ```text
//! quandle< a, b | a*b*a = b ; b*a*b = a >
//! group< s, t | s t s t^-1 s^-1 t^-1 >
//! ```
//!
//! Quandle words may also be parenthesized (`a * (b *- c)`); they are
//! normalized on the way in. `#` starts a comment running to end of line.

use std::collections::HashMap;
use std::fmt;

use super::{normalize, GroupPresentation, GroupWord, QExpr, QWord, QuandlePresentation, Sign};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Presentation {
    Quandle(QuandlePresentation),
    Group(GroupPresentation),
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Presentation::Quandle(p) => p.fmt(f),
            Presentation::Group(p) => p.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        };
        if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_whitespace() {
            bump(&mut chars);
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            out.push(Spanned { tok: Tok::Ident(s), line: l, column: col });
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            let n = s.parse().map_err(|_| Error::Syntax {
                line: l,
                column: col,
                message: format!("integer `{s}` too large"),
            })?;
            out.push(Spanned { tok: Tok::Int(n), line: l, column: col });
        } else if "<>|,;=*-^()".contains(c) {
            bump(&mut chars);
            out.push(Spanned { tok: Tok::Sym(c), line: l, column: col });
        } else {
            return Err(Error::Syntax {
                line: l,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push(Spanned { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    names: HashMap<String, usize>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.column)
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: String) -> Result<T> {
        let (line, column) = self.here();
        Err(Error::Syntax { line, column, message })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Sym(c) {
            self.next();
            Ok(())
        } else {
            self.error(format!("expected `{c}`, found {}", self.peek()))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize)> {
        let t = self.next();
        match t.tok {
            Tok::Ident(s) => Ok((s, t.line, t.column)),
            other => Err(Error::Syntax {
                line: t.line,
                column: t.column,
                message: format!("expected identifier, found {other}"),
            }),
        }
    }

    fn generator(&mut self) -> Result<usize> {
        let (name, line, column) = self.ident()?;
        self.names
            .get(&name)
            .copied()
            .ok_or(Error::UnknownGenerator { name, line, column })
    }

    fn generators(&mut self) -> Result<Vec<String>> {
        let mut gens = Vec::new();
        loop {
            let (name, line, column) = self.ident()?;
            if self.names.insert(name.clone(), gens.len()).is_some() {
                return Err(Error::Syntax {
                    line,
                    column,
                    message: format!("generator `{name}` declared twice"),
                });
            }
            gens.push(name);
            if !self.eat(',') {
                return Ok(gens);
            }
        }
    }

    fn operator(&mut self) -> Option<Sign> {
        if self.eat('*') {
            Some(if self.eat('-') { Sign::Neg } else { Sign::Pos })
        } else {
            None
        }
    }

    /// `atom (op atom)*`, left associative.
    fn qexpr(&mut self) -> Result<QExpr> {
        let mut lhs = self.qatom()?;
        while let Some(sign) = self.operator() {
            let rhs = self.qatom()?;
            lhs = QExpr::op(lhs, sign, rhs);
        }
        Ok(lhs)
    }

    fn qatom(&mut self) -> Result<QExpr> {
        if self.eat('(') {
            let e = self.qexpr()?;
            self.expect(')')?;
            Ok(e)
        } else {
            Ok(QExpr::Gen(self.generator()?))
        }
    }

    fn qrelation(&mut self) -> Result<(QWord, QWord)> {
        let l = normalize(&self.qexpr()?);
        self.expect('=')?;
        let r = normalize(&self.qexpr()?);
        Ok((l, r))
    }

    fn gword(&mut self) -> Result<GroupWord> {
        let mut letters = Vec::new();
        while matches!(self.peek(), Tok::Ident(_)) {
            let g = self.generator()?;
            let mut k: i64 = 1;
            if self.eat('^') {
                let neg = self.eat('-');
                let t = self.next();
                match t.tok {
                    Tok::Int(n) if n <= 1_000_000 => k = if neg { -(n as i64) } else { n as i64 },
                    other => {
                        return Err(Error::Syntax {
                            line: t.line,
                            column: t.column,
                            message: format!("expected exponent, found {other}"),
                        })
                    }
                }
            }
            let s = if k >= 0 { Sign::Pos } else { Sign::Neg };
            letters.extend(std::iter::repeat_n((g, s), k.unsigned_abs() as usize));
        }
        if letters.is_empty() && !matches!(self.peek(), Tok::Sym(';') | Tok::Sym('>')) {
            return self.error(format!("expected relator, found {}", self.peek()));
        }
        Ok(GroupWord::from_letters(letters))
    }

    fn presentation(&mut self) -> Result<Presentation> {
        let (kind, line, column) = self.ident()?;
        if kind != "quandle" && kind != "group" {
            return Err(Error::Syntax {
                line,
                column,
                message: format!("expected `quandle` or `group`, found `{kind}`"),
            });
        }
        self.expect('<')?;
        let gens = self.generators()?;
        self.expect('|')?;
        let out = if kind == "quandle" {
            let mut rels = Vec::new();
            while *self.peek() != Tok::Sym('>') {
                rels.push(self.qrelation()?);
                if !self.eat(';') {
                    break;
                }
            }
            Presentation::Quandle(QuandlePresentation::new(gens, rels))
        } else {
            let mut rels = Vec::new();
            while *self.peek() != Tok::Sym('>') {
                rels.push(self.gword()?);
                if !self.eat(';') {
                    break;
                }
            }
            Presentation::Group(GroupPresentation::new(gens, rels))
        };
        self.expect('>')?;
        if *self.peek() != Tok::End {
            return self.error(format!("trailing input {}", self.peek()));
        }
        Ok(out)
    }
}

pub fn parse(text: &str) -> Result<Presentation> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        names: HashMap::new(),
    };
    p.presentation()
}

impl std::str::FromStr for Presentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}
