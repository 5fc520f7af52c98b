//! A small bracket-tree reader shared by model descriptors and element literals.
//!
//! `Gamma(Lex(Z,Z),(1,0))` reads as a call node whose second argument is a
//! parenthesised list; interpretation is left to the caller.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Atom(String),
    Call(String, Vec<Node>),
    Paren(Vec<Node>),
    Bracket(Vec<Node>),
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, items: &[Node]| -> fmt::Result {
            for (i, n) in items.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{n}")?;
            }
            Ok(())
        };
        match self {
            Node::Atom(a) => f.write_str(a),
            Node::Call(name, args) => {
                write!(f, "{name}(")?;
                list(f, args)?;
                f.write_str(")")
            }
            Node::Paren(items) => {
                f.write_str("(")?;
                list(f, items)?;
                f.write_str(")")
            }
            Node::Bracket(items) => {
                f.write_str("[")?;
                list(f, items)?;
                f.write_str("]")
            }
        }
    }
}

fn is_atom_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '^' | '/' | '-' | '+' | '*' | '.' | '\'')
}

struct Reader<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl Reader<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        let consumed: String = self.chars[..self.pos.min(self.chars.len())].iter().collect();
        let line = consumed.matches('\n').count() + 1;
        let column = consumed.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Error::Syntax { line, column, message: format!("{} in `{}`", message.into(), self.src) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn list(&mut self, close: char) -> Result<Vec<Node>> {
        let mut items = Vec::new();
        if self.peek() == Some(close) {
            self.pos += 1;
            return Ok(items);
        }
        loop {
            items.push(self.node()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(c) if c == close => {
                    self.pos += 1;
                    return Ok(items);
                }
                _ => return Err(self.error(format!("expected `,` or `{close}`"))),
            }
        }
    }

    fn node(&mut self) -> Result<Node> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                Ok(Node::Paren(self.list(')')?))
            }
            Some('[') => {
                self.pos += 1;
                Ok(Node::Bracket(self.list(']')?))
            }
            Some(c) if is_atom_char(c) => {
                let start = self.pos;
                while self.pos < self.chars.len() && is_atom_char(self.chars[self.pos]) {
                    self.pos += 1;
                }
                let atom: String = self.chars[start..self.pos].iter().collect();
                if self.chars.get(self.pos) == Some(&'(') {
                    self.pos += 1;
                    Ok(Node::Call(atom, self.list(')')?))
                } else {
                    Ok(Node::Atom(atom))
                }
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Reads exactly one node from `src`.
pub fn read(src: &str) -> Result<Node> {
    let mut r = Reader { chars: src.chars().collect(), pos: 0, src };
    let node = r.node()?;
    if r.peek().is_some() {
        return Err(r.error("trailing input"));
    }
    Ok(node)
}

/// Reads a comma-separated list of nodes, ignoring commas nested in brackets.
pub fn read_list(src: &str) -> Result<Vec<Node>> {
    let mut r = Reader { chars: src.chars().collect(), pos: 0, src };
    let mut items = Vec::new();
    if r.peek().is_none() {
        return Ok(items);
    }
    loop {
        items.push(r.node()?);
        match r.peek() {
            Some(',') => r.pos += 1,
            None => return Ok(items),
            _ => return Err(r.error("expected `,`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_calls() {
        let n = read("Gamma(Lex(Z, Z^2), (1,0))").unwrap();
        assert_eq!(n.to_string(), "Gamma(Lex(Z,Z^2),(1,0))");
        match n {
            Node::Call(name, args) => {
                assert_eq!(name, "Gamma");
                assert_eq!(args.len(), 2);
                assert!(matches!(&args[1], Node::Paren(v) if v.len() == 2));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn top_level_list() {
        let items = read_list("(c,1-c,0), (0,0,1)").unwrap();
        assert_eq!(items.len(), 2);
        assert_eq!(items[0].to_string(), "(c,1-c,0)");
    }

    #[test]
    fn reports_position() {
        match read("Prod(C,,C)") {
            Err(Error::Syntax { line: 1, column, .. }) => assert_eq!(column, 8),
            other => panic!("{other:?}"),
        }
        assert!(read("C C").is_err());
    }
}
