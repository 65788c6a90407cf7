//! Text syntax shared by free words, braid words and mixed `ℝP²` words.
//!
//! ```text
//! expr    := term (['*'] term)*
//! term    := atom ('^' int | '\'')*
//! atom    := ident | ident '[' int ',' int ']' | '(' expr ')' | '[' expr ',' expr ']' | '1'
//! ```
//!
//! `[u, v]` is commutator sugar for `u^-1 v^-1 u v`. A postfix `'` inverts.
//! Indexed identifiers such as `A[1,3]` are atomic symbols.

use crate::error::{Error, Result};

/// One occurrence of an atomic symbol in an expanded expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub name: String,
    pub inverse: bool,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Symbol { name: String, column: usize },
    Identity,
    Seq(Vec<Node>),
    Comm(Box<Node>, Box<Node>),
    Pow(Box<Node>, i64),
}

const MAX_EXPANDED_LEN: usize = 50_000_000;
const MAX_POWER: u64 = 1_000_000;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        text.parse::<i64>()
            .map_err(|_| Error::Parse {
                column: start + 1,
                message: format!("expected an integer, found {text:?}"),
            })
    }

    fn expr(&mut self) -> Result<Node> {
        let mut terms = Vec::new();
        loop {
            match self.peek() {
                None | Some(b')') | Some(b']') | Some(b',') => break,
                Some(b'*') => {
                    if terms.is_empty() {
                        return Err(self.err("'*' without a left operand"));
                    }
                    self.pos += 1;
                    match self.peek() {
                        None | Some(b')') | Some(b']') | Some(b',') | Some(b'*') => {
                            return Err(self.err("'*' without a right operand"))
                        }
                        _ => {}
                    }
                }
                _ => terms.push(self.term()?),
            }
        }
        Ok(Node::Seq(terms))
    }

    fn term(&mut self) -> Result<Node> {
        let mut node = self.atom()?;
        loop {
            match self.peek() {
                Some(b'^') => {
                    self.pos += 1;
                    let k = self.int()?;
                    if k.unsigned_abs() > MAX_POWER {
                        return Err(self.err(format!("exponent {k} is too large")));
                    }
                    node = Node::Pow(Box::new(node), k);
                }
                Some(b'\'') => {
                    self.pos += 1;
                    node = Node::Pow(Box::new(node), -1);
                }
                _ => break,
            }
        }
        Ok(node)
    }

    fn atom(&mut self) -> Result<Node> {
        let c = self.peek().ok_or_else(|| self.err("unexpected end of input"))?;
        match c {
            b'(' => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            b'[' => {
                self.pos += 1;
                let left = self.expr()?;
                self.expect(b',')?;
                let right = self.expr()?;
                self.expect(b']')?;
                Ok(Node::Comm(Box::new(left), Box::new(right)))
            }
            b'1' => {
                self.pos += 1;
                Ok(Node::Identity)
            }
            c if c.is_ascii_alphabetic() || c == b'_' => Ok(self.ident()),
            other => Err(self.err(format!("unexpected character '{}'", other as char))),
        }
    }

    fn ident(&mut self) -> Node {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let mut name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        if let Some(index) = self.indexed_suffix() {
            name.push_str(&index);
        }
        Node::Symbol {
            name,
            column: start + 1,
        }
    }

    /// Recognizes `[i,j]` directly after an identifier.
    fn indexed_suffix(&mut self) -> Option<String> {
        if self.src.get(self.pos) != Some(&b'[') {
            return None;
        }
        let rest = &self.src[self.pos + 1..];
        let close = rest.iter().position(|&c| c == b']')?;
        let inner = std::str::from_utf8(&rest[..close]).ok()?;
        let mut parts = inner.split(',');
        let i: usize = parts.next()?.trim().parse().ok()?;
        let j: usize = parts.next()?.trim().parse().ok()?;
        if parts.next().is_some() {
            return None;
        }
        self.pos += close + 2;
        Some(format!("[{i},{j}]"))
    }
}

fn expand_into(node: &Node, inverse: bool, out: &mut Vec<Occurrence>) -> Result<()> {
    if out.len() > MAX_EXPANDED_LEN {
        return Err(Error::Parse {
            column: 0,
            message: "expanded word is too long".into(),
        });
    }
    match node {
        Node::Identity => {}
        Node::Symbol { name, column } => out.push(Occurrence {
            name: name.clone(),
            inverse,
            column: *column,
        }),
        Node::Seq(items) => {
            if inverse {
                for item in items.iter().rev() {
                    expand_into(item, true, out)?;
                }
            } else {
                for item in items {
                    expand_into(item, false, out)?;
                }
            }
        }
        Node::Pow(base, k) => {
            let inv = inverse ^ (*k < 0);
            for _ in 0..k.unsigned_abs() {
                expand_into(base, inv, out)?;
                if out.len() > MAX_EXPANDED_LEN {
                    return Err(Error::Parse {
                        column: 0,
                        message: "expanded word is too long".into(),
                    });
                }
            }
        }
        Node::Comm(u, v) => {
            // [u,v] = u^-1 v^-1 u v ; its inverse is v^-1 u^-1 v u
            let seq: [(&Node, bool); 4] = [(u, true), (v, true), (u, false), (v, false)];
            if inverse {
                for (n, i) in seq.iter().rev() {
                    expand_into(n, !i, out)?;
                }
            } else {
                for (n, i) in seq {
                    expand_into(n, i, out)?;
                }
            }
        }
    }
    Ok(())
}

/// Parses `text` and expands powers and commutators into a flat sequence of
/// symbol occurrences.
pub fn parse_occurrences(text: &str) -> Result<Vec<Occurrence>> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let node = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.err("unbalanced bracket or trailing input"));
    }
    let mut out = Vec::new();
    expand_into(&node, false, &mut out)?;
    Ok(out)
}

/// Formats a sequence of `(symbol, inverse)` pairs, collapsing runs into powers.
pub fn format_letters<'a>(letters: impl IntoIterator<Item = (&'a str, bool)>) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut run: Option<(&str, bool, usize)> = None;
    let flush = |run: Option<(&str, bool, usize)>, parts: &mut Vec<String>| {
        if let Some((name, inv, count)) = run {
            let exp = if inv { -(count as i64) } else { count as i64 };
            if exp == 1 {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{name}^{exp}"));
            }
        }
    };
    for (name, inv) in letters {
        match run {
            Some((n, i, c)) if n == name && i == inv => run = Some((n, i, c + 1)),
            _ => {
                flush(run, &mut parts);
                run = Some((name, inv, 1));
            }
        }
    }
    flush(run, &mut parts);
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flat(text: &str) -> Vec<(String, bool)> {
        parse_occurrences(text)
            .unwrap()
            .into_iter()
            .map(|o| (o.name, o.inverse))
            .collect()
    }

    fn s(name: &str, inv: bool) -> (String, bool) {
        (name.to_string(), inv)
    }

    #[test]
    fn powers_and_inverses() {
        assert_eq!(flat("w^2 A23^-1"), vec![s("w", false), s("w", false), s("A23", true)]);
        assert_eq!(flat("x' * y"), vec![s("x", true), s("y", false)]);
        assert_eq!(flat("(x y)^-1"), vec![s("y", true), s("x", true)]);
        assert!(flat("").is_empty());
        assert!(flat("1").is_empty());
    }

    #[test]
    fn commutator_sugar() {
        assert_eq!(
            flat("[y, x]"),
            vec![s("y", true), s("x", true), s("y", false), s("x", false)]
        );
        assert_eq!(
            flat("[y, x]^-1"),
            vec![s("x", true), s("y", true), s("x", false), s("y", false)]
        );
        let nested = flat("[[x2,x1],x2]");
        assert_eq!(nested.len(), 10);
    }

    #[test]
    fn indexed_symbols() {
        assert_eq!(flat("A[1,3] A[2, 3]^-1"), vec![s("A[1,3]", false), s("A[2,3]", true)]);
        // commutator of indexed symbols
        assert_eq!(flat("[A[1,3],A[2,3]]").len(), 4);
    }

    #[test]
    fn errors_report_columns() {
        match parse_occurrences("x ^") {
            Err(Error::Parse { .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_occurrences("(x y").is_err());
        assert!(parse_occurrences("x)").is_err());
        assert!(parse_occurrences("x # y").is_err());
        assert!(parse_occurrences("* x").is_err());
    }

    #[test]
    fn formatting_collapses_runs() {
        assert_eq!(format_letters([("w", false), ("w", false), ("A23", true)]), "w^2 A23^-1");
        assert_eq!(format_letters(std::iter::empty()), "1");
    }
}
