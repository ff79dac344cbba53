//! A minimal s-expression reader that keeps source positions.

use crate::error::{KernelError, Result};

/// One-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl Pos {
    pub fn error(self, msg: impl Into<String>) -> KernelError {
        KernelError::ParseError { line: self.line, col: self.col, msg: msg.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sexp {
    Atom(String, Pos),
    List(Vec<Sexp>, Pos),
}

impl Sexp {
    pub fn pos(&self) -> Pos {
        match self {
            Sexp::Atom(_, p) | Sexp::List(_, p) => *p,
        }
    }

    pub fn atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom(s, _) => Some(s),
            Sexp::List(..) => None,
        }
    }

    pub fn list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::List(items, _) => Some(items),
            Sexp::Atom(..) => None,
        }
    }

    /// The head atom of a nonempty list.
    pub fn head(&self) -> Option<&str> {
        self.list()?.first()?.atom()
    }

    pub fn expect_list(&self, what: &str) -> Result<&[Sexp]> {
        self.list().ok_or_else(|| self.pos().error(format!("expected {what}")))
    }

    pub fn expect_atom(&self, what: &str) -> Result<&str> {
        self.atom().ok_or_else(|| self.pos().error(format!("expected {what}")))
    }

    pub fn expect_nat(&self) -> Result<usize> {
        let s = self.expect_atom("a natural number")?;
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.pos().error(format!("expected a natural number, found `{s}`")));
        }
        s.parse().map_err(|_| self.pos().error(format!("number `{s}` is too large")))
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl Reader<'_> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.col = 1;
        } else {
            self.pos.col += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == ';' {
                while self.chars.peek().is_some_and(|&c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn read(&mut self) -> Result<Sexp> {
        self.skip_trivia();
        let start = self.pos;
        match self.chars.peek() {
            None => Err(start.error("unexpected end of input")),
            Some(')') => Err(start.error("unexpected `)`")),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.chars.peek() {
                        None => return Err(start.error("unclosed `(`")),
                        Some(')') => {
                            self.bump();
                            return Ok(Sexp::List(items, start));
                        }
                        Some(_) => items.push(self.read()?),
                    }
                }
            }
            Some(_) => {
                let mut s = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == ';' {
                        break;
                    }
                    s.push(c);
                    self.bump();
                }
                Ok(Sexp::Atom(s, start))
            }
        }
    }
}

/// Every top-level form in `text`.
pub fn read_all(text: &str) -> Result<Vec<Sexp>> {
    let mut r = Reader { chars: text.chars().peekable(), pos: Pos { line: 1, col: 1 } };
    let mut out = Vec::new();
    loop {
        r.skip_trivia();
        if r.chars.peek().is_none() {
            return Ok(out);
        }
        out.push(r.read()?);
    }
}

/// Exactly one top-level form.
pub fn read_one(text: &str) -> Result<Sexp> {
    let mut forms = read_all(text)?;
    match forms.len() {
        1 => Ok(forms.remove(0)),
        0 => Err(Pos { line: 1, col: 1 }.error("empty input")),
        _ => Err(forms[1].pos().error("expected a single form")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_nested_lists_with_positions() {
        let s = read_one("(a\n  (b c) ; note\n d)").unwrap();
        let items = s.list().unwrap();
        assert_eq!(items.len(), 3);
        assert_eq!(items[1].pos(), Pos { line: 2, col: 3 });
        assert_eq!(items[2].atom(), Some("d"));
    }

    #[test]
    fn reports_where_things_go_wrong() {
        let e = read_one("(a (b)").unwrap_err();
        assert_eq!(e, KernelError::ParseError { line: 1, col: 1, msg: "unclosed `(`".into() });
        let e = read_one("(a))").unwrap_err();
        assert!(matches!(e, KernelError::ParseError { line: 1, col: 4, .. }));
        assert!(read_one("; only a comment\n").is_err());
    }

    #[test]
    fn naturals() {
        let forms = read_all("12 x -1").unwrap();
        assert_eq!(forms[0].expect_nat().unwrap(), 12);
        assert!(forms[1].expect_nat().is_err());
        assert!(forms[2].expect_nat().is_err());
    }
}
