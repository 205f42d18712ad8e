//! Shared tokenizer and cursor for the text formats read by this crate.
//!
//! Every file format (theories, algebras, monoids, graded algebras, operads,
//! categories) is a brace-delimited block of `;`-terminated items, so they
//! share one lexer. `#` starts a comment that runs to the end of the line.

use std::fmt;

use thiserror::Error;

/// A syntax error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        ParseError { line: pos.line, column: pos.column, message: message.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Nat(u64),
    Punct(&'static str),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Nat(n) => write!(f, "`{n}`"),
            Tok::Punct(p) => write!(f, "`{p}`"),
        }
    }
}

const PUNCTS: &[&str] = &["->", "=>", "{", "}", "(", ")", "[", "]", ";", ":", ",", "=", ".", "*", "+", "/"];

pub fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    let mut line = 1;
    let mut line_start = 0;
    while let Some(&(i, c)) = chars.peek() {
        let pos = Pos { line, column: text[line_start..i].chars().count() + 1 };
        if c == '\n' {
            chars.next();
            line += 1;
            line_start = i + 1;
        } else if c.is_whitespace() {
            chars.next();
        } else if c == '#' {
            while let Some(&(_, c)) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
            }
        } else if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            let n = text[i..end].parse::<u64>().map_err(|_| ParseError::new(pos, "number too large"))?;
            out.push((Tok::Nat(n), pos));
        } else if c.is_alphabetic() || c == '_' {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_' || d == '\'') {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            out.push((Tok::Ident(text[i..end].to_string()), pos));
        } else {
            let rest = &text[i..];
            match PUNCTS.iter().find(|p| rest.starts_with(**p)) {
                Some(p) => {
                    for _ in 0..p.len() {
                        chars.next();
                    }
                    out.push((Tok::Punct(p), pos));
                }
                None => return Err(ParseError::new(pos, format!("unexpected character `{c}`"))),
            }
        }
    }
    Ok(out)
}

/// Token cursor with the small set of combinators the format parsers need.
pub struct Cursor {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Cursor {
    pub fn new(text: &str) -> Result<Self, ParseError> {
        let toks = tokenize(text)?;
        let lines = text.lines().count().max(1);
        let last = text.lines().last().map(|l| l.chars().count()).unwrap_or(0);
        Ok(Cursor { toks, at: 0, end: Pos { line: lines, column: last + 1 } })
    }

    pub fn pos(&self) -> Pos {
        self.toks.get(self.at).map(|t| t.1).unwrap_or(self.end)
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    pub fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.toks.get(self.at + offset).map(|t| &t.0)
    }

    pub fn at_end(&self) -> bool {
        self.at >= self.toks.len()
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos(), message)
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {t}")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    pub fn is_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Some(Tok::Punct(q)) if *q == p)
    }

    pub fn is_keyword(&self, k: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == k)
    }

    pub fn eat_punct(&mut self, p: &str) -> bool {
        if self.is_punct(p) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    pub fn expect_punct(&mut self, p: &str) -> Result<(), ParseError> {
        if self.eat_punct(p) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{p}`")))
        }
    }

    pub fn expect_keyword(&mut self, k: &str) -> Result<(), ParseError> {
        if self.is_keyword(k) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{k}`")))
        }
    }

    pub fn ident(&mut self) -> Result<(String, Pos), ParseError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok((s, pos))
            }
            _ => Err(self.unexpected("identifier")),
        }
    }

    /// An identifier or a bare number, as used for object names.
    pub fn name(&mut self) -> Result<(String, Pos), ParseError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Nat(n)) => {
                let s = n.to_string();
                self.at += 1;
                Ok((s, pos))
            }
            Some(Tok::Ident(_)) => self.ident(),
            _ => Err(self.unexpected("name")),
        }
    }

    pub fn nat(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Some(Tok::Nat(n)) => {
                let n = *n;
                self.at += 1;
                Ok(n)
            }
            _ => Err(self.unexpected("number")),
        }
    }

    pub fn usize(&mut self) -> Result<usize, ParseError> {
        let pos = self.pos();
        let n = self.nat()?;
        usize::try_from(n).map_err(|_| ParseError::new(pos, "number too large"))
    }

    /// `[n, n, ...]`, possibly empty.
    pub fn nat_list(&mut self) -> Result<Vec<usize>, ParseError> {
        self.expect_punct("[")?;
        let mut out = Vec::new();
        if self.eat_punct("]") {
            return Ok(out);
        }
        loop {
            out.push(self.usize()?);
            if self.eat_punct("]") {
                return Ok(out);
            }
            self.expect_punct(",")?;
        }
    }

    /// `KEYWORD NAME {` header shared by every format.
    pub fn header(&mut self, keyword: &str) -> Result<String, ParseError> {
        self.expect_keyword(keyword)?;
        let (name, _) = self.ident()?;
        self.expect_punct("{")?;
        Ok(name)
    }

    pub fn finish(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }
}

/// Writes `[a,b,c]`.
pub fn render_list(values: &[usize]) -> String {
    let inner: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_one_based() {
        let toks = tokenize("op f:2;\n  eq").unwrap();
        assert_eq!(toks[0].1, Pos { line: 1, column: 1 });
        assert_eq!(toks[1].1, Pos { line: 1, column: 4 });
        assert_eq!(toks.last().unwrap().1, Pos { line: 2, column: 3 });
    }

    #[test]
    fn comments_and_arrows() {
        let toks = tokenize("arrow f : a -> b; # note\ncell x : f => g;").unwrap();
        assert!(toks.iter().any(|t| t.0 == Tok::Punct("->")));
        assert!(toks.iter().any(|t| t.0 == Tok::Punct("=>")));
        assert!(!toks.iter().any(|t| t.0 == Tok::Ident("note".into())));
    }

    #[test]
    fn bad_character_reports_position() {
        let err = tokenize("op f:2;\n  @").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
    }
}
