//! Model descriptors and element literals.
//!
//! MV-algebras: `C`, `B`, `L(m)`, `Sigma(G)`, `Gamma(G,u)`, `Prod(A,...)`,
//! `Trivial`, `Quot(A,a)`.
//! Groups: `Z`, `Z^n`, `Lex(Z,G)`, `Groth(M)`, `Delta(A)`, `Pairs(A)`.
//! Monoids: `N`, `N^n`, `PosCone(G)`, `Rad(A)`.
//!
//! Elements are read against a known carrier: `3c`, `1-2c`, `1/2`, `-4`,
//! `(1,-2)`, `Rad(3)`, `Corad((0,-1))`, `[2c,0]`.

use crate::error::{Error, Result};
use crate::int::Integer;
use crate::lgroup::{canon_pair, LGroup, Monoid};
use crate::model::Structure;
use crate::mv::{interval_quotient, MvAlgebra};
use crate::syntax::{read, read_list, Node};
use crate::value::Value;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn rank_suffix(atom: &str, letter: &str) -> Option<usize> {
    if atom == letter {
        return Some(1);
    }
    atom.strip_prefix(letter)?.strip_prefix('^')?.parse().ok()
}

fn arity(name: &str, args: &[Node], n: usize) -> Result<()> {
    if args.len() == n {
        Ok(())
    } else {
        Err(invalid(format!("{name} takes {n} argument(s), got {}", args.len())))
    }
}

fn structure_of(node: &Node) -> Result<Structure> {
    match node {
        Node::Atom(a) => match a.as_str() {
            "C" => Ok(Structure::Mv(MvAlgebra::Chang)),
            "B" => Ok(Structure::Mv(MvAlgebra::B)),
            "Trivial" => Ok(Structure::Mv(MvAlgebra::trivial())),
            other => {
                if let Some(n) = rank_suffix(other, "Z") {
                    Ok(Structure::Group(LGroup::Zn(n)))
                } else if let Some(n) = rank_suffix(other, "N") {
                    Ok(Structure::Monoid(Monoid::naturals(n)))
                } else {
                    Err(invalid(format!("unknown model `{other}`")))
                }
            }
        },
        Node::Call(name, args) => match name.as_str() {
            "L" => {
                arity(name, args, 1)?;
                match &args[0] {
                    Node::Atom(m) => {
                        let m: u64 = m.parse().map_err(|_| invalid(format!("bad chain size `{m}`")))?;
                        if m == 0 {
                            return Err(invalid("L(m) needs m >= 1"));
                        }
                        Ok(Structure::Mv(MvAlgebra::Chain(m)))
                    }
                    other => Err(invalid(format!("bad chain size `{other}`"))),
                }
            }
            "Sigma" => {
                arity(name, args, 1)?;
                Ok(Structure::Mv(MvAlgebra::Sigma(group_of(&args[0])?)))
            }
            "Gamma" => {
                arity(name, args, 2)?;
                let group = group_of(&args[0])?;
                let unit = group_element(&group, &args[1])?;
                Ok(Structure::Mv(crate::equivalence::gamma(&group, &unit)?))
            }
            "Prod" => Ok(Structure::Mv(MvAlgebra::Product(args.iter().map(mv_of).collect::<Result<_>>()?))),
            "Quot" => {
                arity(name, args, 2)?;
                let base = mv_of(&args[0])?;
                let kernel = mv_element(&base, &args[1])?;
                if !base.is_boolean(&kernel)? {
                    return Err(invalid(format!("{kernel} is not Boolean in {base}")));
                }
                Ok(Structure::Mv(interval_quotient(&base, &kernel)?))
            }
            "Lex" => {
                arity(name, args, 2)?;
                if args[0] != Node::Atom("Z".into()) {
                    return Err(invalid("Lex only supports a Z head: Lex(Z,G)"));
                }
                Ok(Structure::Group(LGroup::Lex(Box::new(group_of(&args[1])?))))
            }
            "Groth" => {
                arity(name, args, 1)?;
                Ok(Structure::Group(LGroup::Groth(Box::new(monoid_of(&args[0])?))))
            }
            "Delta" => {
                arity(name, args, 1)?;
                Ok(Structure::Group(LGroup::Groth(Box::new(Monoid::Radical(mv_of(&args[0])?)))))
            }
            "Pairs" => {
                arity(name, args, 1)?;
                Ok(Structure::Group(LGroup::Pairs(Box::new(mv_of(&args[0])?))))
            }
            "PosCone" => {
                arity(name, args, 1)?;
                Ok(Structure::Monoid(Monoid::PosCone(group_of(&args[0])?)))
            }
            "Rad" => {
                arity(name, args, 1)?;
                Ok(Structure::Monoid(Monoid::Radical(mv_of(&args[0])?)))
            }
            other => Err(invalid(format!("unknown constructor `{other}`"))),
        },
        other => Err(invalid(format!("`{other}` is not a model descriptor"))),
    }
}

fn mv_of(node: &Node) -> Result<MvAlgebra> {
    match structure_of(node)? {
        Structure::Mv(a) => Ok(a),
        other => Err(invalid(format!("{other} is not an MV-algebra"))),
    }
}

fn group_of(node: &Node) -> Result<LGroup> {
    match structure_of(node)? {
        Structure::Group(g) => Ok(g),
        other => Err(invalid(format!("{other} is not an l-group"))),
    }
}

fn monoid_of(node: &Node) -> Result<Monoid> {
    match structure_of(node)? {
        Structure::Monoid(m) => Ok(m),
        other => Err(invalid(format!("{other} is not a monoid"))),
    }
}

pub fn parse_structure(src: &str) -> Result<Structure> {
    structure_of(&read(src)?)
}

pub fn parse_mv(src: &str) -> Result<MvAlgebra> {
    mv_of(&read(src)?)
}

pub fn parse_group(src: &str) -> Result<LGroup> {
    group_of(&read(src)?)
}

pub fn parse_monoid(src: &str) -> Result<Monoid> {
    monoid_of(&read(src)?)
}

fn integer(node: &Node) -> Result<Integer> {
    match node {
        Node::Atom(a) => a.parse().map_err(|_| invalid(format!("`{a}` is not an integer"))),
        other => Err(invalid(format!("`{other}` is not an integer"))),
    }
}

fn chang_multiple(s: &str) -> Option<Integer> {
    let n = s.strip_suffix('c')?;
    if n.is_empty() {
        Some(Integer::ONE)
    } else {
        n.strip_suffix('*').unwrap_or(n).parse().ok().filter(|v: &Integer| !v.is_negative())
    }
}

fn chang_element(node: &Node) -> Option<Value> {
    match node {
        Node::Atom(a) => match a.as_str() {
            "0" => Some(Value::Fin(Integer::ZERO)),
            "1" => Some(Value::CoFin(Integer::ZERO)),
            s => match s.strip_prefix("1-") {
                Some(rest) => chang_multiple(rest).map(Value::CoFin),
                None => chang_multiple(s).map(Value::Fin),
            },
        },
        Node::Call(name, args) if args.len() == 1 => {
            let n = integer(&args[0]).ok().filter(|v| !v.is_negative())?;
            match name.as_str() {
                "Fin" => Some(Value::Fin(n)),
                "CoFin" => Some(Value::CoFin(n)),
                _ => None,
            }
        }
        _ => None,
    }
}

fn chain_element(m: u64, node: &Node) -> Option<Value> {
    let Node::Atom(a) = node else { return None };
    match a.as_str() {
        "0" => return Some(Value::Chain(0, m)),
        "1" => return Some(Value::Chain(m, m)),
        _ => {}
    }
    let (k, d) = a.split_once('/')?;
    let (k, d): (u64, u64) = (k.parse().ok()?, d.parse().ok()?);
    if d == 0 || !(k * m).is_multiple_of(d) || k > d {
        return None;
    }
    Some(Value::Chain(k * m / d, m))
}

fn group_raw(g: &LGroup, node: &Node) -> Result<Value> {
    match (g, node) {
        (LGroup::Zn(0), Node::Atom(a)) if a == "0" => Ok(g.zero()),
        (LGroup::Zn(0), Node::Paren(items)) if items.is_empty() => Ok(g.zero()),
        (LGroup::Zn(1), Node::Atom(_)) => Ok(Value::Vec(std::iter::once(integer(node)?).collect())),
        (LGroup::Zn(n), Node::Paren(items)) if items.len() == *n => {
            Ok(Value::Vec(items.iter().map(integer).collect::<Result<_>>()?))
        }
        (LGroup::Lex(tail), Node::Paren(items)) if items.len() == 2 => {
            Ok(Value::Lex(integer(&items[0])?, Box::new(group_element(tail, &items[1])?)))
        }
        (LGroup::Groth(m), Node::Bracket(items)) if items.len() == 2 => {
            let (u, v) = canon_pair(m, &monoid_element(m, &items[0])?, &monoid_element(m, &items[1])?)?;
            Ok(Value::pair(u, v))
        }
        (LGroup::Pairs(a), Node::Bracket(items)) if items.len() == 2 => {
            let (p, q) = (mv_element(a, &items[0])?, mv_element(a, &items[1])?);
            Ok(Value::pair(a.ominus(&p, &q)?, a.ominus(&q, &p)?))
        }
        _ => Err(invalid(format!("`{node}` is not an element of {g}"))),
    }
}

pub(crate) fn group_element(g: &LGroup, node: &Node) -> Result<Value> {
    let v = group_raw(g, node)?;
    if g.contains(&v) {
        Ok(v)
    } else {
        Err(invalid(format!("`{node}` is not an element of {g}")))
    }
}

pub(crate) fn monoid_element(m: &Monoid, node: &Node) -> Result<Value> {
    let v = match m {
        Monoid::PosCone(g) => group_raw(g, node)?,
        Monoid::Radical(a) => mv_element(a, node)?,
    };
    if m.contains(&v) {
        Ok(v)
    } else {
        Err(invalid(format!("`{node}` is not an element of {m}")))
    }
}

pub(crate) fn mv_element(a: &MvAlgebra, node: &Node) -> Result<Value> {
    let v = match a {
        MvAlgebra::Chang => chang_element(node),
        MvAlgebra::Chain(m) => chain_element(*m, node),
        MvAlgebra::Gamma { group, .. } => group_raw(group, node).ok(),
        MvAlgebra::Sigma(g) => match node {
            Node::Atom(s) if s == "0" => Some(a.zero()),
            Node::Atom(s) if s == "1" => Some(a.one()),
            Node::Call(tag, args) if args.len() == 1 => {
                let inner = group_raw(g, &args[0])?;
                match tag.as_str() {
                    "Rad" => Some(Value::rad(inner)),
                    "Corad" => Some(Value::corad(inner)),
                    _ => None,
                }
            }
            _ => None,
        },
        MvAlgebra::Product(fs) => match node {
            Node::Paren(items) if items.len() == fs.len() => Some(Value::Tuple(
                fs.iter().zip(items).map(|(f, n)| mv_element(f, n)).collect::<Result<_>>()?,
            )),
            Node::Atom(s) if s == "0" => Some(a.zero()),
            Node::Atom(s) if s == "1" => Some(a.one()),
            _ => None,
        },
        MvAlgebra::Quotient { base, .. } => Some(mv_element(base, node)?),
    };
    match v {
        Some(v) if a.contains(&v) => Ok(v),
        _ => Err(invalid(format!("`{node}` is not an element of {a}"))),
    }
}

/// Reads one element of `s`.
pub fn parse_element(s: &Structure, src: &str) -> Result<Value> {
    let node = read(src)?;
    element_of(s, &node)
}

/// Reads a comma-separated list of elements of `s`.
pub fn parse_elements(s: &Structure, src: &str) -> Result<Vec<Value>> {
    read_list(src)?.iter().map(|n| element_of(s, n)).collect()
}

fn element_of(s: &Structure, node: &Node) -> Result<Value> {
    match s {
        Structure::Mv(a) => mv_element(a, node),
        Structure::Group(g) => group_element(g, node),
        Structure::Monoid(m) => monoid_element(m, node),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors_round_trip() {
        for src in [
            "C",
            "B",
            "L(3)",
            "Trivial",
            "Sigma(Z^2)",
            "Gamma(Z,2)",
            "Gamma(Lex(Z,Z),(1,0))",
            "Prod(C,C,B)",
            "Z",
            "Z^3",
            "Lex(Z,Lex(Z,Z))",
            "Groth(N^2)",
            "Delta(C)",
            "Pairs(Sigma(Z))",
            "N",
            "PosCone(Lex(Z,Z))",
            "Rad(C)",
            "Quot(Prod(C,C),(1,0))",
        ] {
            let s = parse_structure(src).unwrap();
            assert_eq!(s.to_string(), src);
            assert_eq!(parse_structure(&s.to_string()).unwrap(), s);
        }
    }

    #[test]
    fn descriptor_errors() {
        assert!(parse_structure("Q").is_err());
        assert!(parse_structure("L(0)").is_err());
        assert!(parse_structure("Gamma(Z,-1)").is_err());
        assert!(parse_structure("Lex(Z^2,Z)").is_err());
        assert!(parse_structure("Quot(C,c)").is_err());
        assert!(parse_mv("Z").is_err());
        assert!(parse_group("C").is_err());
    }

    #[test]
    fn element_literals() {
        let c = Structure::Mv(MvAlgebra::Chang);
        assert_eq!(parse_element(&c, "3c").unwrap(), Value::fin(3));
        assert_eq!(parse_element(&c, "c").unwrap(), Value::fin(1));
        assert_eq!(parse_element(&c, "1-c").unwrap(), Value::cofin(1));
        assert_eq!(parse_element(&c, "1-12c").unwrap(), Value::cofin(12));
        assert_eq!(parse_element(&c, "1").unwrap(), Value::cofin(0));
        assert_eq!(parse_element(&c, "CoFin(2)").unwrap(), Value::cofin(2));
        assert!(parse_element(&c, "2").is_err());
        assert!(parse_element(&c, "-c").is_err());

        let l2 = parse_structure("L(2)").unwrap();
        assert_eq!(parse_element(&l2, "1/2").unwrap(), Value::Chain(1, 2));
        assert!(parse_element(&l2, "1/3").is_err());

        let s = parse_structure("Sigma(Z^2)").unwrap();
        assert_eq!(parse_element(&s, "Corad((0,-1))").unwrap(), Value::corad(Value::vector([0, -1])));
        assert!(parse_element(&s, "Rad((0,-1))").is_err());

        let lex = parse_structure("Lex(Z,Z)").unwrap();
        assert_eq!(parse_element(&lex, "(1,0)").unwrap(), Value::lex(1, Value::int(0)));

        let g = parse_structure("Groth(N)").unwrap();
        assert_eq!(parse_element(&g, "[5,3]").unwrap(), Value::pair(Value::int(2), Value::int(0)));

        let cc = parse_structure("Prod(C,C,B)").unwrap();
        let gens = parse_elements(&cc, "(c,1-c,0), (0,0,1)").unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].to_string(), "(c,1-c,0)");

        let n = parse_structure("N").unwrap();
        assert!(parse_element(&n, "-1").is_err());
    }
}
