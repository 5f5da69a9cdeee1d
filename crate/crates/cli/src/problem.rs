//! Problem files: a ring declaration followed by named constructs.
//!
//! ```text
//! # comments run to the end of the line
//! ring n=8                      # or: ring t1, t2, t3
//! ideal I = x1^4, x2^7,
//!     x3^5*x8^2                 # indented lines continue a stanza
//! clutter C = {x1,x2},{x2,x3}
//! sym S = n:8 exps:1,3,3
//! ```

use std::fmt;
use std::sync::Arc;

use monideal::{Clutter, MonomialIdeal, RingContext, SymmetricPatternIdeal};

use crate::parse::{self, Cursor, ParseError, ParseResult, Pos};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construct {
    Ideal(MonomialIdeal),
    Clutter(Clutter),
    Symmetric(SymmetricPatternIdeal),
}

impl Construct {
    pub fn kind(&self) -> &'static str {
        match self {
            Construct::Ideal(_) => "ideal",
            Construct::Clutter(_) => "clutter",
            Construct::Symmetric(_) => "sym",
        }
    }

    /// The ideal the construct stands for.
    pub fn to_ideal(&self) -> MonomialIdeal {
        match self {
            Construct::Ideal(i) => i.clone(),
            Construct::Clutter(c) => c.edge_ideal(),
            Construct::Symmetric(s) => s.build(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub ring: Arc<RingContext>,
    pub items: Vec<(String, Construct)>,
}

impl ProblemFile {
    pub fn parse(text: &str) -> ParseResult<Self> {
        let mut ring: Option<Arc<RingContext>> = None;
        let mut items: Vec<(String, Construct)> = Vec::new();
        for stanza in stanzas(text)? {
            let mut cur = stanza;
            let (keyword, kpos) = cur.ident()?;
            if keyword == "ring" {
                if ring.is_some() {
                    return Err(ParseError::new(kpos, "ring declared twice"));
                }
                ring = Some(ring_decl(&mut cur)?);
                continue;
            }
            let r = ring
                .clone()
                .ok_or_else(|| ParseError::new(kpos, "a ring declaration must come first"))?;
            let (name, npos) = cur.ident()?;
            if items.iter().any(|(n, _)| *n == name) {
                return Err(ParseError::new(npos, format!("'{name}' is already defined")));
            }
            cur.expect('=')?;
            let construct = match keyword.as_str() {
                "ideal" => Construct::Ideal(parse::ideal(&mut cur, &r)?),
                "clutter" => Construct::Clutter(clutter(&mut cur, &r)?),
                "sym" => Construct::Symmetric(symmetric(&mut cur, &r)?),
                other => {
                    return Err(ParseError::new(
                        kpos,
                        format!("unknown stanza '{other}' (expected ring, ideal, clutter or sym)"),
                    ))
                }
            };
            cur.expect_end()?;
            items.push((name, construct));
        }
        let ring = ring.ok_or_else(|| ParseError::new(Pos { line: 1, column: 1 }, "missing ring declaration"))?;
        Ok(Self { ring, items })
    }

    pub fn get(&self, name: &str) -> Option<&Construct> {
        self.items.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }

    pub fn first(&self) -> Option<&(String, Construct)> {
        self.items.first()
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}", self.ring.names().join(", "))?;
        for (name, c) in &self.items {
            match c {
                Construct::Ideal(i) => writeln!(f, "ideal {name} = {}", i.generators_text())?,
                Construct::Clutter(c) => {
                    let edges: Vec<String> = c
                        .edges()
                        .iter()
                        .map(|e| {
                            let names: Vec<&str> = e.vertices().map(|v| self.ring.name(v)).collect();
                            format!("{{{}}}", names.join(","))
                        })
                        .collect();
                    writeln!(f, "clutter {name} = {}", edges.join(","))?
                }
                Construct::Symmetric(s) => {
                    let exps: Vec<String> = s.exps().iter().map(u32::to_string).collect();
                    writeln!(f, "sym {name} = n:{} exps:{}", self.ring.n(), exps.join(","))?
                }
            }
        }
        Ok(())
    }
}

/// Splits the text into stanzas. A stanza starts on an unindented line;
/// indented lines continue it. Comments and blank lines are dropped.
fn stanzas(text: &str) -> ParseResult<Vec<Cursor>> {
    let mut out: Vec<(Vec<(char, Pos)>, Pos)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let chars: Vec<(char, Pos)> = body.chars().enumerate().map(|(c, ch)| (ch, Pos { line, column: c + 1 })).collect();
        let end = Pos { line, column: body.chars().count() + 1 };
        if body.starts_with(char::is_whitespace) {
            let (prev, prev_end) = out
                .last_mut()
                .ok_or_else(|| ParseError::new(Pos { line, column: 1 }, "indented line does not continue a stanza"))?;
            prev.push(('\n', *prev_end));
            prev.extend(chars);
            *prev_end = end;
        } else {
            out.push((chars, end));
        }
    }
    Ok(out.into_iter().map(|(chars, end)| Cursor::from_chars(chars, end)).collect())
}

/// `n=<count>` or a comma-separated name list.
fn ring_decl(cur: &mut Cursor) -> ParseResult<Arc<RingContext>> {
    let pos = cur.pos();
    let (first, _) = cur.ident()?;
    let ring = if first == "n" && cur.eat('=') {
        let (n, npos) = cur.number()?;
        RingContext::new(n as usize).map_err(|e| ParseError::new(npos, e.to_string()))?
    } else {
        let mut names = vec![first];
        while cur.eat(',') {
            names.push(cur.ident()?.0);
        }
        RingContext::with_names(names).map_err(|e| ParseError::new(pos, e.to_string()))?
    };
    cur.expect_end()?;
    Ok(ring)
}

/// `{v,...},{v,...}`
fn clutter(cur: &mut Cursor, ring: &Arc<RingContext>) -> ParseResult<Clutter> {
    let pos = cur.pos();
    let mut edges = Vec::new();
    loop {
        cur.expect('{')?;
        let mut edge = Vec::new();
        if !cur.eat('}') {
            loop {
                let (name, vpos) = cur.ident()?;
                edge.push(ring.index_of(&name).ok_or_else(|| ParseError::new(vpos, format!("unknown vertex '{name}'")))?);
                if !cur.eat(',') {
                    break;
                }
            }
            cur.expect('}')?;
        }
        edges.push(edge);
        if !cur.eat(',') {
            break;
        }
    }
    Clutter::new(ring.clone(), edges).map_err(|e| ParseError::new(pos, e.to_string()))
}

/// `n:<count>`, optional `k:<len>`, and `exps:<a>,<a>,...` in any order.
fn symmetric(cur: &mut Cursor, ring: &Arc<RingContext>) -> ParseResult<SymmetricPatternIdeal> {
    let start = cur.pos();
    let mut exps: Option<Vec<u32>> = None;
    let mut k: Option<(u64, Pos)> = None;
    while !cur.at_end() {
        let (key, kpos) = cur.ident()?;
        cur.expect(':')?;
        match key.as_str() {
            "n" => {
                let (n, npos) = cur.number()?;
                if n as usize != ring.n() {
                    return Err(ParseError::new(npos, format!("n:{n} does not match the ring's {} variables", ring.n())));
                }
            }
            "k" => k = Some(cur.number()?),
            "exps" => {
                let mut list = Vec::new();
                loop {
                    let (a, apos) = cur.number()?;
                    list.push(u32::try_from(a).map_err(|_| ParseError::new(apos, "exponent is too large"))?);
                    if !cur.eat(',') {
                        break;
                    }
                }
                exps = Some(list);
            }
            other => return Err(ParseError::new(kpos, format!("unknown key '{other}' (expected n, k or exps)"))),
        }
    }
    let exps = exps.ok_or_else(|| ParseError::new(start, "missing exps:"))?;
    if let Some((k, kpos)) = k {
        if k as usize != exps.len() {
            return Err(ParseError::new(kpos, format!("k:{k} but {} exponents given", exps.len())));
        }
    }
    SymmetricPatternIdeal::new(ring.clone(), exps).map_err(|e| ParseError::new(start, e.to_string()))
}
