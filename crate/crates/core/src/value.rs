//! Elements of every concrete carrier, as one tagged union.

use std::fmt;

use smallvec::SmallVec;

use crate::int::Integer;

pub type Coords = SmallVec<[Integer; 2]>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Value {
    /// `n c` in Chang's algebra.
    Fin(Integer),
    /// `1 - n c` in Chang's algebra.
    CoFin(Integer),
    /// `k/m` in the finite chain with `m + 1` elements.
    Chain(u64, u64),
    /// Integer vector of a pointwise-ordered group `Z^n`.
    Vec(Coords),
    /// Element `(h, t)` of `Z x_lex G`.
    Lex(Integer, Box<Value>),
    /// Radical element `(0, g)` of `Sigma(G)`, with `g >= 0`.
    Rad(Box<Value>),
    /// Coradical element `(1, g)` of `Sigma(G)`, with `g <= 0`.
    Corad(Box<Value>),
    /// Element of a finite product.
    Tuple(Vec<Value>),
    /// Canonical Grothendieck pair `[u, v]` with `inf(u, v) = 0`.
    Pair(Box<Value>, Box<Value>),
}

impl Value {
    pub fn int(v: i64) -> Value {
        Value::Vec(SmallVec::from_elem(Integer::from(v), 1))
    }

    pub fn vector<I: IntoIterator<Item = i64>>(coords: I) -> Value {
        Value::Vec(coords.into_iter().map(Integer::from).collect())
    }

    pub fn fin(n: u64) -> Value {
        Value::Fin(Integer::from(n))
    }

    pub fn cofin(n: u64) -> Value {
        Value::CoFin(Integer::from(n))
    }

    pub fn lex(head: i64, tail: Value) -> Value {
        Value::Lex(Integer::from(head), Box::new(tail))
    }

    pub fn pair(u: Value, v: Value) -> Value {
        Value::Pair(Box::new(u), Box::new(v))
    }

    pub fn rad(g: Value) -> Value {
        Value::Rad(Box::new(g))
    }

    pub fn corad(g: Value) -> Value {
        Value::Corad(Box::new(g))
    }

    pub fn tuple(items: Vec<Value>) -> Value {
        Value::Tuple(items)
    }
}

fn chang_multiple(f: &mut fmt::Formatter<'_>, n: &Integer) -> fmt::Result {
    if *n == Integer::ONE {
        write!(f, "c")
    } else {
        write!(f, "{n}c")
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Fin(n) if n.is_zero() => write!(f, "0"),
            Value::Fin(n) => chang_multiple(f, n),
            Value::CoFin(n) if n.is_zero() => write!(f, "1"),
            Value::CoFin(n) => {
                write!(f, "1-")?;
                chang_multiple(f, n)
            }
            Value::Chain(0, _) => write!(f, "0"),
            Value::Chain(k, m) if k == m => write!(f, "1"),
            Value::Chain(k, m) => write!(f, "{k}/{m}"),
            Value::Vec(c) if c.is_empty() => write!(f, "0"),
            Value::Vec(c) if c.len() == 1 => write!(f, "{}", c[0]),
            Value::Vec(c) => write_list(f, "(", c.iter(), ")"),
            Value::Lex(h, t) => write!(f, "({h},{t})"),
            Value::Rad(g) => write!(f, "Rad({g})"),
            Value::Corad(g) => write!(f, "Corad({g})"),
            Value::Tuple(items) => write_list(f, "(", items.iter(), ")"),
            Value::Pair(u, v) => write!(f, "[{u},{v}]"),
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    open: &str,
    items: impl Iterator<Item = T>,
    close: &str,
) -> fmt::Result {
    f.write_str(open)?;
    for (i, item) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    f.write_str(close)
}
