//! Text and JSON forms of monomial ideals.
//!
//! Text grammar, one item per line (`#` starts a comment, blank lines skipped):
//!
//! ```text
//! vars: x1 x2 x3 x4      # optional; fixes the ambient ring and variable order
//! x1^2*x3
//! x2*x4
//! 1                      # the unit monomial
//! ```
//!
//! A variable is `[A-Za-z_][A-Za-z0-9_]*`; an exponent is a decimal integer
//! after `^`; factors are joined by `*`. Without a `vars:` line the ambient
//! ring is every variable in order of first appearance.
//!
//! JSON: either a list of `{"variable": exponent}` maps, or an object
//! `{"vars": [...], "generators": [ {...}, ... ]}`.

use std::collections::BTreeMap;
use std::collections::HashMap;

use serde_json::Value;

use super::{Monomial, MonomialIdeal, Var};
use crate::error::{Error, Result};

/// Names for variable indices; `Var(i)` is `names[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VarNames {
    names: Vec<String>,
    index: HashMap<String, Var>,
}

impl VarNames {
    pub fn new(names: impl IntoIterator<Item = impl Into<String>>) -> Self {
        let mut out = VarNames::default();
        for n in names {
            out.intern(&n.into());
        }
        out
    }

    /// `x1, ..., xn` for `Var(0), ..., Var(n-1)`.
    pub fn numbered(n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn intern(&mut self, name: &str) -> Var {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = Var(self.names.len() as u32);
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), v);
        v
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        self.index.get(name).copied()
    }

    pub fn name(&self, v: Var) -> String {
        self.names
            .get(v.index())
            .cloned()
            .unwrap_or_else(|| v.to_string())
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> {
        (0..self.names.len() as u32).map(Var)
    }

    pub fn render(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.pairs()
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    self.name(v)
                } else {
                    format!("{}^{e}", self.name(v))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn render_ideal(&self, ideal: &MonomialIdeal) -> Vec<String> {
        ideal.generators().iter().map(|g| self.render(g)).collect()
    }

    pub fn to_map(&self, m: &Monomial) -> BTreeMap<String, u32> {
        m.pairs().iter().map(|&(v, e)| (self.name(v), e)).collect()
    }
}

/// An ideal together with the names of its variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedIdeal {
    pub ideal: MonomialIdeal,
    pub names: VarNames,
}

impl NamedIdeal {
    pub fn to_text(&self) -> String {
        let mut out = String::from("vars:");
        for v in self.ideal.ambient() {
            out.push(' ');
            out.push_str(&self.names.name(*v));
        }
        out.push('\n');
        for g in self.names.render_ideal(&self.ideal) {
            out.push_str(&g);
            out.push('\n');
        }
        out
    }
}

/// Dispatches on the first non-blank character: `[` or `{` means JSON.
pub fn parse_ideal(input: &str) -> Result<NamedIdeal> {
    match input.trim_start().chars().next() {
        Some('[') | Some('{') => parse_ideal_json(input),
        _ => parse_ideal_text(input),
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

struct LineCursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    src: &'a str,
}

impl<'a> LineCursor<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        LineCursor {
            chars: src.char_indices().collect(),
            pos: 0,
            line,
            src,
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.column(), msg)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if is_ident_start(c) => self.pos += 1,
            Some(c) => return Err(self.err(format!("expected a variable name, found '{c}'"))),
            None => return Err(self.err("expected a variable name")),
        }
        while matches!(self.peek(), Some(c) if is_ident(c)) {
            self.pos += 1;
        }
        Ok(self.slice(start, self.pos))
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a non-negative integer"));
        }
        self.slice(start, self.pos)
            .parse()
            .map_err(|_| Error::parse(self.line, start + 1, "integer out of range"))
    }

    fn slice(&self, start: usize, end: usize) -> &'a str {
        let b = self.chars.get(start).map_or(self.src.len(), |&(i, _)| i);
        let e = self.chars.get(end).map_or(self.src.len(), |&(i, _)| i);
        &self.src[b..e]
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_monomial_line(
    cur: &mut LineCursor<'_>,
    names: &mut VarNames,
    fixed: bool,
) -> Result<Monomial> {
    cur.skip_ws();
    if cur.peek() == Some('1') {
        cur.pos += 1;
        cur.skip_ws();
        if cur.peek().is_some() {
            return Err(cur.err("unexpected input after unit monomial"));
        }
        return Ok(Monomial::one());
    }
    let mut pairs = Vec::new();
    loop {
        cur.skip_ws();
        let col = cur.column();
        let name = cur.ident()?;
        let v = if fixed {
            names.lookup(name).ok_or_else(|| {
                Error::parse(cur.line, col, format!("variable '{name}' not declared in vars:"))
            })?
        } else {
            names.intern(name)
        };
        cur.skip_ws();
        let e = if cur.peek() == Some('^') {
            cur.pos += 1;
            cur.number()?
        } else {
            1
        };
        pairs.push((v, e));
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some('*') => cur.pos += 1,
            Some(c) => return Err(cur.err(format!("expected '*' or end of line, found '{c}'"))),
        }
    }
    Ok(Monomial::from_pairs(pairs))
}

pub fn parse_ideal_text(input: &str) -> Result<NamedIdeal> {
    let mut names = VarNames::default();
    let mut fixed = false;
    let mut gens = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let lineno = i + 1;
        if let Some(rest) = line.trim_start().strip_prefix("vars:") {
            if fixed || !gens.is_empty() {
                return Err(Error::parse(lineno, 1, "vars: must come first and only once"));
            }
            let offset = line.len() - rest.len();
            let mut cur = LineCursor::new(rest, lineno);
            loop {
                cur.skip_ws();
                if cur.peek().is_none() {
                    break;
                }
                let name = cur.ident().map_err(|e| shift(e, offset))?;
                if names.lookup(name).is_some() {
                    return Err(Error::parse(lineno, offset + cur.column(), format!("duplicate variable '{name}'")));
                }
                names.intern(name);
            }
            fixed = true;
            continue;
        }
        let mut cur = LineCursor::new(line, lineno);
        gens.push(parse_monomial_line(&mut cur, &mut names, fixed)?);
    }
    let ideal = MonomialIdeal::new(gens, names.vars())?;
    Ok(NamedIdeal { ideal, names })
}

fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line,
            column: column + offset,
            message,
        },
        other => other,
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::parse(e.line(), e.column(), e.to_string())
}

fn json_monomial(v: &Value, names: &mut VarNames, fixed: bool) -> Result<Monomial> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::parse(0, 0, "generator must be a {variable: exponent} map"))?;
    let mut pairs = Vec::new();
    for (name, e) in obj {
        let e = e
            .as_u64()
            .and_then(|e| u32::try_from(e).ok())
            .ok_or_else(|| Error::parse(0, 0, format!("exponent of '{name}' must be a non-negative integer")))?;
        if name.is_empty() || !name.chars().next().is_some_and(is_ident_start) || !name.chars().all(is_ident) {
            return Err(Error::parse(0, 0, format!("invalid variable name '{name}'")));
        }
        let var = if fixed {
            names
                .lookup(name)
                .ok_or_else(|| Error::parse(0, 0, format!("variable '{name}' not declared in vars")))?
        } else {
            names.intern(name)
        };
        pairs.push((var, e));
    }
    Ok(Monomial::from_pairs(pairs))
}

pub fn parse_ideal_json(input: &str) -> Result<NamedIdeal> {
    let value: Value = serde_json::from_str(input).map_err(json_err)?;
    let mut names = VarNames::default();
    let (fixed, list) = match &value {
        Value::Array(list) => (false, list.clone()),
        Value::Object(obj) => {
            let mut fixed = false;
            if let Some(vars) = obj.get("vars") {
                let vars = vars
                    .as_array()
                    .ok_or_else(|| Error::parse(0, 0, "\"vars\" must be a list of names"))?;
                for v in vars {
                    let n = v
                        .as_str()
                        .ok_or_else(|| Error::parse(0, 0, "\"vars\" entries must be strings"))?;
                    names.intern(n);
                }
                fixed = true;
            }
            let gens = obj
                .get("generators")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::parse(0, 0, "missing \"generators\" list"))?;
            (fixed, gens.clone())
        }
        _ => return Err(Error::parse(1, 1, "expected a list or an object")),
    };
    let gens = list
        .iter()
        .map(|g| json_monomial(g, &mut names, fixed))
        .collect::<Result<Vec<_>>>()?;
    let ideal = MonomialIdeal::new(gens, names.vars())?;
    Ok(NamedIdeal { ideal, names })
}
