use super::formula::{Atom, Formula};
use super::SyntaxError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Meta(char),
    Bot,
    Neg,
    ENeg,
    Nec,
    And,
    Or,
    Imp,
    Sup,
    LParen,
    RParen,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ImpKind {
    Int,
    Cls,
}

fn err(pos: usize, msg: impl Into<String>) -> SyntaxError {
    SyntaxError::Parse { pos, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        match c {
            c if c.is_whitespace() => {
                it.next();
            }
            'a'..='z' => {
                let mut name = String::new();
                while let Some(&(_, c)) = it.peek() {
                    if c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_' {
                        name.push(c);
                        it.next();
                    } else {
                        break;
                    }
                }
                if name == "bot" {
                    out.push((pos, Tok::Bot));
                } else {
                    out.push((pos, Tok::Ident(name)));
                }
            }
            'A'..='Z' => {
                it.next();
                if let Some(&(p2, c2)) = it.peek() {
                    if c2.is_ascii_alphanumeric() || c2 == '_' {
                        return Err(err(p2, "metavariables are single uppercase letters"));
                    }
                }
                out.push((pos, Tok::Meta(c)));
            }
            '(' => {
                it.next();
                out.push((pos, Tok::LParen));
            }
            ')' => {
                it.next();
                out.push((pos, Tok::RParen));
            }
            '&' | '∧' => {
                it.next();
                out.push((pos, Tok::And));
            }
            '|' | '∨' => {
                it.next();
                out.push((pos, Tok::Or));
            }
            '~' => {
                it.next();
                out.push((pos, Tok::ENeg));
            }
            '¬' => {
                it.next();
                out.push((pos, Tok::Neg));
            }
            '□' => {
                it.next();
                out.push((pos, Tok::Nec));
            }
            '⊥' => {
                it.next();
                out.push((pos, Tok::Bot));
            }
            '→' => {
                it.next();
                out.push((pos, Tok::Imp));
            }
            '⊃' | '⇒' => {
                it.next();
                out.push((pos, Tok::Sup));
            }
            '-' => {
                it.next();
                if matches!(it.peek(), Some(&(_, '>'))) {
                    it.next();
                    out.push((pos, Tok::Imp));
                } else {
                    out.push((pos, Tok::Neg));
                }
            }
            '=' => {
                it.next();
                match it.next() {
                    Some((_, '>')) => out.push((pos, Tok::Sup)),
                    _ => return Err(err(pos, "expected `=>`")),
                }
            }
            '[' => {
                it.next();
                match it.next() {
                    Some((_, ']')) => out.push((pos, Tok::Nec)),
                    _ => return Err(err(pos, "expected `[]`")),
                }
            }
            other => return Err(err(pos, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    allow_meta: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn imp(&mut self) -> Result<Formula, SyntaxError> {
        let first = self.or()?;
        let mut operands = vec![first];
        let mut kind: Option<ImpKind> = None;
        loop {
            let k = match self.peek() {
                Some(Tok::Imp) => ImpKind::Int,
                Some(Tok::Sup) => ImpKind::Cls,
                _ => break,
            };
            if let Some(prev) = kind {
                if prev != k {
                    return Err(err(
                        self.pos(),
                        "`->` and `=>` cannot be mixed at one level without parentheses",
                    ));
                }
            }
            kind = Some(k);
            self.bump();
            operands.push(self.or()?);
        }
        let mut acc = operands.pop().expect("at least one operand");
        while let Some(l) = operands.pop() {
            acc = match kind {
                Some(ImpKind::Int) => Formula::imp(l, acc),
                _ => Formula::sup(l, acc),
            };
        }
        Ok(acc)
    }

    fn or(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.bump();
            let r = self.and()?;
            acc = Formula::or(acc, r);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.bump();
            let r = self.unary()?;
            acc = Formula::and(acc, r);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Neg) => Ok(Formula::neg(self.unary()?)),
            Some(Tok::ENeg) => Ok(Formula::eneg(self.unary()?)),
            Some(Tok::Nec) => Ok(Formula::nec(self.unary()?)),
            Some(Tok::Bot) => Ok(Formula::Bottom),
            Some(Tok::Ident(name)) => Ok(Formula::Atom(Atom::new(name))),
            Some(Tok::Meta(c)) => {
                if self.allow_meta {
                    Ok(Formula::Atom(Atom::new(c.to_string())))
                } else {
                    Err(err(pos, format!("metavariable `{c}` is not allowed in a formula")))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.imp()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(self.toks.get(self.at - 1).map_or(self.end, |t| t.0), "expected `)`")),
                }
            }
            Some(t) => Err(err(pos, format!("unexpected token {t:?}"))),
            None => Err(err(pos, "unexpected end of input")),
        }
    }
}

pub(crate) fn parse(text: &str, allow_meta: bool) -> Result<Formula, SyntaxError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len(), allow_meta };
    let f = p.imp()?;
    if p.at < p.toks.len() {
        return Err(err(p.pos(), "trailing input"));
    }
    Ok(f)
}

fn prec(f: &Formula) -> u8 {
    match f {
        Formula::IntImp(..) | Formula::ClsImp(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        _ => 4,
    }
}

fn wrap(out: &mut String, f: &Formula, parens: bool) {
    if parens {
        out.push('(');
        write(out, f);
        out.push(')');
    } else {
        write(out, f);
    }
}

fn write(out: &mut String, f: &Formula) {
    match f {
        Formula::Atom(a) => out.push_str(a.name()),
        Formula::Bottom => out.push_str("bot"),
        Formula::Nec(a) => {
            out.push_str("[]");
            wrap(out, a, prec(a) < 4);
        }
        Formula::And(l, r) => {
            wrap(out, l, prec(l) < 3);
            out.push_str(" & ");
            wrap(out, r, prec(r) <= 3);
        }
        Formula::Or(l, r) => {
            wrap(out, l, prec(l) < 2);
            out.push_str(" | ");
            wrap(out, r, prec(r) <= 2);
        }
        Formula::IntImp(l, r) | Formula::ClsImp(l, r) => {
            let int = matches!(f, Formula::IntImp(..));
            wrap(out, l, prec(l) <= 1);
            out.push_str(if int { " -> " } else { " => " });
            let mixed = match &**r {
                Formula::IntImp(..) => !int,
                Formula::ClsImp(..) => int,
                _ => false,
            };
            wrap(out, r, mixed);
        }
    }
}

pub(crate) fn render(f: &Formula) -> String {
    let mut out = String::new();
    write(&mut out, f);
    out
}
