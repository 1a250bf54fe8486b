//! The lattice-based modal language: AST, ASCII parser, printer.
//!
//! Grammar: the unary keywords `box`, `dia`, `bbox`, `bdia`, `rt`, `lt` bind
//! tighter than `&`, which binds tighter than `|`; `T` and `F` are the
//! constants; parentheses group; sequents are written `phi |- psi`. The
//! black connectives `bbox`/`bdia` are extended syntax for the semantic
//! adjoints.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Formula {
    Bot,
    Top,
    Atom(String),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Box_(Box<Formula>),
    Dia(Box<Formula>),
    BlackBox(Box<Formula>),
    BlackDia(Box<Formula>),
    RTri(Box<Formula>),
    LTri(Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_string())
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn boxed(f: Formula) -> Formula {
        Formula::Box_(Box::new(f))
    }

    pub fn dia(f: Formula) -> Formula {
        Formula::Dia(Box::new(f))
    }

    pub fn rtri(f: Formula) -> Formula {
        Formula::RTri(Box::new(f))
    }

    pub fn ltri(f: Formula) -> Formula {
        Formula::LTri(Box::new(f))
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut set = BTreeSet::new();
        self.collect_atoms(&mut set);
        set
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Bot | Formula::Top => {}
            Formula::Atom(p) => {
                out.insert(p.clone());
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            Formula::Box_(f)
            | Formula::Dia(f)
            | Formula::BlackBox(f)
            | Formula::BlackDia(f)
            | Formula::RTri(f)
            | Formula::LTri(f) => f.collect_atoms(out),
        }
    }

    /// True when the formula uses only `⊥, ⊤, atoms, ∧, ∨`.
    pub fn is_modality_free(&self) -> bool {
        match self {
            Formula::Bot | Formula::Top | Formula::Atom(_) => true,
            Formula::And(l, r) | Formula::Or(l, r) => l.is_modality_free() && r.is_modality_free(),
            _ => false,
        }
    }
}

// precedence levels: 0 = |, 1 = &, 2 = unary/primary
fn fmt_prec(f: &Formula, prec: u8, out: &mut String) {
    match f {
        Formula::Bot => out.push('F'),
        Formula::Top => out.push('T'),
        Formula::Atom(p) => out.push_str(p),
        Formula::Or(l, r) => {
            let wrap = prec > 0;
            if wrap {
                out.push('(');
            }
            fmt_prec(l, 0, out);
            out.push_str(" | ");
            fmt_prec(r, 1, out);
            if wrap {
                out.push(')');
            }
        }
        Formula::And(l, r) => {
            let wrap = prec > 1;
            if wrap {
                out.push('(');
            }
            fmt_prec(l, 1, out);
            out.push_str(" & ");
            fmt_prec(r, 2, out);
            if wrap {
                out.push(')');
            }
        }
        Formula::Box_(g)
        | Formula::Dia(g)
        | Formula::BlackBox(g)
        | Formula::BlackDia(g)
        | Formula::RTri(g)
        | Formula::LTri(g) => {
            out.push_str(match f {
                Formula::Box_(_) => "box ",
                Formula::Dia(_) => "dia ",
                Formula::BlackBox(_) => "bbox ",
                Formula::BlackDia(_) => "bdia ",
                Formula::RTri(_) => "rt ",
                Formula::LTri(_) => "lt ",
                _ => unreachable!(),
            });
            fmt_prec(g, 2, out);
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        fmt_prec(self, 0, &mut s);
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Ident(String),
    And,
    Or,
    LParen,
    RParen,
    Turnstile,
}

fn lex(src: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '&' => {
                tokens.push((i, Token::And));
                i += 1;
            }
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            '|' => {
                if bytes.get(i + 1) == Some(&b'-') {
                    tokens.push((i, Token::Turnstile));
                    i += 2;
                } else {
                    tokens.push((i, Token::Or));
                    i += 1;
                }
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() {
                    let d = bytes[i] as char;
                    if d.is_ascii_alphanumeric() || d == '_' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                tokens.push((start, Token::Ident(src[start..i].to_string())));
            }
            _ => {
                return Err(Error::Syntax {
                    position: i,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn formula(&mut self) -> Result<Formula> {
        let mut left = self.conjunct()?;
        while self.peek() == Some(&Token::Or) {
            self.bump();
            let right = self.conjunct()?;
            left = Formula::or(left, right);
        }
        Ok(left)
    }

    fn conjunct(&mut self) -> Result<Formula> {
        let mut left = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.bump();
            let right = self.unary()?;
            left = Formula::and(left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula> {
        if let Some(Token::Ident(word)) = self.peek() {
            let ctor: Option<fn(Box<Formula>) -> Formula> = match word.as_str() {
                "box" => Some(Formula::Box_),
                "dia" => Some(Formula::Dia),
                "bbox" => Some(Formula::BlackBox),
                "bdia" => Some(Formula::BlackDia),
                "rt" => Some(Formula::RTri),
                "lt" => Some(Formula::LTri),
                _ => None,
            };
            if let Some(ctor) = ctor {
                self.bump();
                let inner = self.unary()?;
                return Ok(ctor(Box::new(inner)));
            }
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula> {
        let position = self.here();
        match self.bump() {
            Some(Token::Ident(word)) => match word.as_str() {
                "T" => Ok(Formula::Top),
                "F" => Ok(Formula::Bot),
                _ => Ok(Formula::Atom(word)),
            },
            Some(Token::LParen) => {
                let inner = self.formula()?;
                let position = self.here();
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Syntax {
                        position,
                        message: "expected `)`".to_string(),
                    }),
                }
            }
            other => Err(Error::Syntax {
                position,
                message: format!("expected a formula, found {other:?}"),
            }),
        }
    }
}

fn parser_for(text: &str) -> Result<Parser> {
    Ok(Parser {
        tokens: lex(text)?,
        pos: 0,
        end: text.len(),
    })
}

/// Parse a single formula.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = parser_for(text)?;
    let f = p.formula()?;
    if p.peek().is_some() {
        return Err(Error::Syntax {
            position: p.here(),
            message: "trailing input".to_string(),
        });
    }
    Ok(f)
}

/// Parse a sequent `phi |- psi`.
pub fn parse_sequent(text: &str) -> Result<(Formula, Formula)> {
    let mut p = parser_for(text)?;
    let lhs = p.formula()?;
    let position = p.here();
    match p.bump() {
        Some(Token::Turnstile) => {}
        _ => {
            return Err(Error::Syntax {
                position,
                message: "expected `|-`".to_string(),
            })
        }
    }
    let rhs = p.formula()?;
    if p.peek().is_some() {
        return Err(Error::Syntax {
            position: p.here(),
            message: "trailing input".to_string(),
        });
    }
    Ok((lhs, rhs))
}
