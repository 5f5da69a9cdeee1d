//! Monomial and ideal text, with line/column positions in errors.

use std::fmt;
use std::sync::Arc;

use monideal::{Monomial, MonomialIdeal, RingContext};

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {message}")]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        Self { pos, message: message.into() }
    }
}

pub type ParseResult<T> = std::result::Result<T, ParseError>;

/// A character stream that remembers where each character came from.
#[derive(Debug, Clone)]
pub struct Cursor {
    chars: Vec<(char, Pos)>,
    at: usize,
    end: Pos,
}

impl Cursor {
    /// Cursor over a single line of text starting at `start`.
    pub fn new(text: &str, start: Pos) -> Self {
        let mut chars = Vec::new();
        let mut pos = start;
        for c in text.chars() {
            chars.push((c, pos));
            if c == '\n' {
                pos = Pos { line: pos.line + 1, column: 1 };
            } else {
                pos.column += 1;
            }
        }
        Self { chars, at: 0, end: pos }
    }

    pub fn from_chars(chars: Vec<(char, Pos)>, end: Pos) -> Self {
        Self { chars, at: 0, end }
    }

    pub fn pos(&self) -> Pos {
        self.chars.get(self.at).map_or(self.end, |&(_, p)| p)
    }

    pub fn skip_ws(&mut self) {
        while self.peek_raw().is_some_and(char::is_whitespace) {
            self.at += 1;
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(c, _)| c)
    }

    /// Next non-whitespace character, not consumed.
    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> ParseResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn expect_end(&mut self) -> ParseResult<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    pub fn unexpected(&mut self, wanted: &str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError::new(self.pos(), format!("expected {wanted}, found {found}"))
    }

    /// `[A-Za-z_][A-Za-z0-9_]*`
    pub fn ident(&mut self) -> ParseResult<(String, Pos)> {
        self.skip_ws();
        let pos = self.pos();
        match self.peek_raw() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return Err(self.unexpected("a name")),
        }
        let mut name = String::new();
        while let Some(c) = self.peek_raw().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
            name.push(c);
            self.at += 1;
        }
        Ok((name, pos))
    }

    pub fn number(&mut self) -> ParseResult<(u64, Pos)> {
        self.skip_ws();
        let pos = self.pos();
        let mut digits = String::new();
        while let Some(c) = self.peek_raw().filter(char::is_ascii_digit) {
            digits.push(c);
            self.at += 1;
        }
        if digits.is_empty() {
            return Err(self.unexpected("a number"));
        }
        digits
            .parse()
            .map(|n| (n, pos))
            .map_err(|_| ParseError::new(pos, format!("number {digits} is too large")))
    }

    pub fn starts_term(&mut self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
    }
}

/// `term := var ('^' posint)? | '1'`; `monomial := term ('*'? term)*`.
///
/// Juxtaposed terms multiply, so `x1 x2` and `x1*x2` agree.
pub fn monomial(cur: &mut Cursor, ring: &RingContext) -> ParseResult<Monomial> {
    let mut exps = vec![0u32; ring.n()];
    loop {
        term(cur, ring, &mut exps)?;
        if cur.eat('*') {
            continue;
        }
        if !cur.starts_term() {
            break;
        }
    }
    Ok(Monomial::from_exponents(exps))
}

fn term(cur: &mut Cursor, ring: &RingContext, exps: &mut [u32]) -> ParseResult<()> {
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        let (n, pos) = cur.number()?;
        if n != 1 {
            return Err(ParseError::new(pos, format!("coefficient {n} is not allowed; only 1 denotes a monomial")));
        }
        return Ok(());
    }
    let (name, pos) = cur.ident()?;
    let var = ring
        .index_of(&name)
        .ok_or_else(|| ParseError::new(pos, format!("unknown variable '{name}'")))?;
    let power = if cur.eat('^') {
        let neg_pos = cur.pos();
        if cur.eat('-') {
            return Err(ParseError::new(neg_pos, "exponents must be positive"));
        }
        let (e, epos) = cur.number()?;
        if e == 0 {
            return Err(ParseError::new(epos, "exponents must be positive"));
        }
        u32::try_from(e).map_err(|_| ParseError::new(epos, format!("exponent {e} is too large")))?
    } else {
        1
    };
    exps[var] = exps[var]
        .checked_add(power)
        .ok_or_else(|| ParseError::new(pos, format!("exponent of {name} overflows")))?;
    Ok(())
}

/// `ideal := '0' | monomial (',' monomial)*`
pub fn ideal(cur: &mut Cursor, ring: &Arc<RingContext>) -> ParseResult<MonomialIdeal> {
    if cur.peek() == Some('0') {
        cur.number()?;
        return Ok(MonomialIdeal::zero(ring.clone()));
    }
    let mut gens = vec![monomial(cur, ring)?];
    while cur.eat(',') {
        gens.push(monomial(cur, ring)?);
    }
    Ok(MonomialIdeal::new(ring.clone(), gens).expect("parsed monomials live in the ring"))
}

/// Parses a whole string as one monomial.
pub fn parse_monomial(text: &str, ring: &RingContext) -> ParseResult<Monomial> {
    let mut cur = Cursor::new(text, Pos { line: 1, column: 1 });
    let m = monomial(&mut cur, ring)?;
    cur.expect_end()?;
    Ok(m)
}

/// Parses a whole string as a comma-separated generator list.
pub fn parse_ideal(text: &str, ring: &Arc<RingContext>) -> ParseResult<MonomialIdeal> {
    let mut cur = Cursor::new(text, Pos { line: 1, column: 1 });
    let i = ideal(&mut cur, ring)?;
    cur.expect_end()?;
    Ok(i)
}

/// Variable list such as `x1,x2,x4`, returned as sorted 0-based indices.
pub fn parse_var_list(text: &str, ring: &RingContext) -> ParseResult<Vec<usize>> {
    let mut cur = Cursor::new(text, Pos { line: 1, column: 1 });
    let mut vars = Vec::new();
    loop {
        let (name, pos) = cur.ident()?;
        vars.push(ring.index_of(&name).ok_or_else(|| ParseError::new(pos, format!("unknown variable '{name}'")))?);
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect_end()?;
    vars.sort_unstable();
    vars.dedup();
    Ok(vars)
}
