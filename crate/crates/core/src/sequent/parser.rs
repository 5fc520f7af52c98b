//! Recursive-descent parser for the sequent language.
//!
//! ```text
//! sequent  := formula "|-" ["[" [ident {"," ident}] "]"] formula
//! formula  := conj {"\/" conj}
//! conj     := atom {"/\" atom}
//! atom     := "true" | "false" | "exists" ident "." formula
//!           | "bigvee" ident "<=" num "." formula
//!           | term ("=" | "<=" | ">=") term | "(" formula ")"
//! term     := prod {("(+)" | "+" | "-") prod}
//! prod     := prefix {"(.)" prefix}
//! prefix   := ("neg" | "-" | scalar "*") prefix | postfix
//! postfix  := primary {"^" scalar}
//! primary  := ident | "0" | "1" | ("inf" | "sup" | "d") "(" term "," term ")"
//!           | "(" term ")"
//! scalar   := num | ident
//! ```

use super::ast::{Formula, Scalar, Sequent, Signature, Term};
use super::lexer::{syntax_error, tokenize, Tok, Token};
use crate::error::{Error, Result};

const KEYWORDS: &[&str] = &["neg", "true", "false", "exists", "bigvee"];

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let t = &self.toks[self.pos];
        syntax_error(t.line, t.column, message)
    }

    fn unexpected(&self, wanted: &str) -> Error {
        self.error(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.unexpected("an identifier")),
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let mut f = self.conj()?;
        while *self.peek() == Tok::Or {
            self.bump();
            f = f.or(self.conj()?);
        }
        Ok(f)
    }

    fn conj(&mut self) -> Result<Formula> {
        let mut f = self.atom()?;
        while *self.peek() == Tok::And {
            self.bump();
            f = f.and(self.atom()?);
        }
        Ok(f)
    }

    fn atom(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "true" => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Ident(s) if s == "false" => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Ident(s) if s == "exists" => {
                self.bump();
                let v = self.ident()?;
                self.expect(Tok::Dot, "`.`")?;
                Ok(Formula::Exists(v, Box::new(self.formula()?)))
            }
            Tok::Ident(s) if s == "bigvee" => {
                self.bump();
                let index = self.ident()?;
                self.expect(Tok::Le, "`<=`")?;
                let cap = match self.bump() {
                    Tok::Num(n) => n,
                    _ => {
                        self.pos -= 1;
                        return Err(self.unexpected("a numeric cap"));
                    }
                };
                self.expect(Tok::Dot, "`.`")?;
                Ok(Formula::BigOr { index, cap, body: Box::new(self.formula()?) })
            }
            Tok::LParen => {
                // Either a parenthesised term starting a relation, or a
                // parenthesised formula. Try the relation first.
                let start = self.pos;
                match self.relation() {
                    Ok(f) => Ok(f),
                    Err(as_term) => {
                        let term_reach = self.pos;
                        self.pos = start + 1;
                        let inner = self.formula().and_then(|f| {
                            self.expect(Tok::RParen, "`)`")?;
                            Ok(f)
                        });
                        match inner {
                            Ok(f) => Ok(f),
                            Err(e) if self.pos >= term_reach => Err(e),
                            Err(_) => Err(as_term),
                        }
                    }
                }
            }
            _ => self.relation(),
        }
    }

    fn relation(&mut self) -> Result<Formula> {
        let lhs = self.term()?;
        let op = self.bump();
        let rhs = match op {
            Tok::Eq | Tok::Le | Tok::Ge => self.term()?,
            _ => {
                self.pos -= 1;
                return Err(self.unexpected("`=`, `<=` or `>=`"));
            }
        };
        Ok(match op {
            Tok::Eq => Formula::Eq(lhs, rhs),
            Tok::Le => Formula::Leq(lhs, rhs),
            _ => Formula::Leq(rhs, lhs),
        })
    }

    fn term(&mut self) -> Result<Term> {
        let mut t = self.prod()?;
        loop {
            t = match self.peek() {
                Tok::OplusOp => {
                    self.bump();
                    Term::Oplus(Box::new(t), Box::new(self.prod()?))
                }
                Tok::Plus => {
                    self.bump();
                    Term::Add(Box::new(t), Box::new(self.prod()?))
                }
                Tok::Minus => {
                    self.bump();
                    Term::Add(Box::new(t), Box::new(Term::Minus(Box::new(self.prod()?))))
                }
                _ => return Ok(t),
            };
        }
    }

    fn prod(&mut self) -> Result<Term> {
        let mut t = self.prefix()?;
        while *self.peek() == Tok::OdotOp {
            self.bump();
            t = Term::Odot(Box::new(t), Box::new(self.prefix()?));
        }
        Ok(t)
    }

    fn prefix(&mut self) -> Result<Term> {
        match (self.peek().clone(), self.peek_at(1).clone()) {
            (Tok::Ident(s), _) if s == "neg" => {
                self.bump();
                Ok(Term::Neg(Box::new(self.prefix()?)))
            }
            (Tok::Minus, _) => {
                self.bump();
                Ok(Term::Minus(Box::new(self.prefix()?)))
            }
            (Tok::Num(n), Tok::Star) => {
                self.pos += 2;
                Ok(Term::Scalar(Scalar::Lit(n), Box::new(self.prefix()?)))
            }
            (Tok::Ident(s), Tok::Star) => {
                self.pos += 2;
                Ok(Term::Scalar(Scalar::Index(s), Box::new(self.prefix()?)))
            }
            _ => self.postfix(),
        }
    }

    fn postfix(&mut self) -> Result<Term> {
        let mut t = self.primary()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let n = match self.bump() {
                Tok::Num(n) => Scalar::Lit(n),
                Tok::Ident(s) => Scalar::Index(s),
                _ => {
                    self.pos -= 1;
                    return Err(self.unexpected("an exponent"));
                }
            };
            t = Term::Power(Box::new(t), n);
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<Term> {
        match (self.peek().clone(), self.peek_at(1).clone()) {
            (Tok::Num(0), _) => {
                self.bump();
                Ok(Term::Zero)
            }
            (Tok::Num(1), _) => {
                self.bump();
                Ok(Term::One)
            }
            (Tok::Num(n), _) => {
                Err(self.error(format!("numeral {n} is not a term; write a multiple as `{n}*x`")))
            }
            (Tok::Ident(f), Tok::LParen) if matches!(f.as_str(), "inf" | "sup" | "d") => {
                self.pos += 2;
                let x = self.term()?;
                self.expect(Tok::Comma, "`,`")?;
                let y = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                let (x, y) = (Box::new(x), Box::new(y));
                Ok(match f.as_str() {
                    "inf" => Term::Inf(x, y),
                    "sup" => Term::Sup(x, y),
                    _ => Term::D(x, y),
                })
            }
            (Tok::Ident(_), _) => Ok(Term::Var(self.ident()?)),
            (Tok::LParen, _) => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(self.unexpected("a term")),
        }
    }

    fn end(&self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => Err(self.unexpected("end of input")),
        }
    }
}

/// Parses a term and checks it against `signature` (pass `Neutral` to accept
/// any well-signed term).
pub fn parse_term(src: &str, signature: Signature) -> Result<Term> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0 };
    let t = p.term()?;
    p.end()?;
    let sig = t.signature()?;
    if signature != Signature::Neutral && sig.join(signature)? != signature {
        return Err(Error::SignatureMismatch(format!("`{src}` is a {sig} term, expected {signature}")));
    }
    Ok(t)
}

pub fn parse_formula(src: &str) -> Result<Formula> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0 };
    let f = p.formula()?;
    p.end()?;
    f.signature()?;
    Ok(f)
}

/// Parses `phi |-[x,...] psi`. Without brackets the context is the free
/// variables in order of appearance. `u` and `a` that are neither in the
/// context nor bound denote the distinguished constant.
pub fn parse_sequent(src: &str) -> Result<Sequent> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0 };
    let mut antecedent = p.formula()?;
    let turnstile = p.pos;
    p.expect(Tok::Turnstile, "`|-`")?;
    let explicit = if *p.peek() == Tok::LBracket {
        p.bump();
        let mut ctx = Vec::new();
        if *p.peek() != Tok::RBracket {
            loop {
                let v = p.ident()?;
                if ctx.contains(&v) {
                    p.pos -= 1;
                    return Err(p.error(format!("`{v}` appears twice in the context")));
                }
                ctx.push(v);
                if *p.peek() == Tok::Comma {
                    p.bump();
                } else {
                    break;
                }
            }
        }
        p.expect(Tok::RBracket, "`,` or `]`")?;
        Some(ctx)
    } else {
        None
    };
    let mut consequent = p.formula()?;
    p.end()?;

    let mut scope = explicit.clone().unwrap_or_default();
    antecedent.resolve_unit(&mut scope);
    consequent.resolve_unit(&mut scope);
    let mut free = antecedent.free_vars();
    for v in consequent.free_vars() {
        if !free.contains(&v) {
            free.push(v);
        }
    }
    let context = match explicit {
        Some(ctx) => {
            if let Some(v) = free.iter().find(|v| !ctx.contains(v)) {
                let t = &p.toks[turnstile];
                return Err(syntax_error(t.line, t.column, format!("variable `{v}` is not in the context")));
            }
            ctx
        }
        None => free,
    };
    antecedent.check_indices(&mut Vec::new())?;
    consequent.check_indices(&mut Vec::new())?;
    let s = Sequent { context, antecedent, consequent, name: None };
    s.signature()?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Box<Term> {
        Box::new(Term::var("x"))
    }

    #[test]
    fn p3_sequent() {
        let s = parse_sequent("x (+) x = x |-[x] x = 0 \\/ x = 1").unwrap();
        assert_eq!(s.context, vec!["x"]);
        assert_eq!(s.antecedent, Formula::Eq(Term::Oplus(x(), x()), Term::var("x")));
        assert_eq!(
            s.consequent,
            Formula::Eq(Term::var("x"), Term::Zero).or(Formula::Eq(Term::var("x"), Term::One))
        );
        assert_eq!(s.signature().unwrap(), Signature::Mv);
    }

    #[test]
    fn mv4_and_trivial() {
        let s = parse_sequent("true |-[x] neg (neg x) = x").unwrap();
        assert_eq!(s.consequent, Formula::Eq(Term::Neg(Box::new(Term::Neg(x()))), Term::var("x")));
        let s = parse_sequent("true |-[] 0 = 0").unwrap();
        assert!(s.context.is_empty());
        assert_eq!(s.signature().unwrap(), Signature::Neutral);
    }

    #[test]
    fn precedence() {
        let t = parse_term("2*x^2 (+) neg x (.) y", Signature::Mv).unwrap();
        assert_eq!(t.to_string(), "2*x^2 (+) neg x (.) y");
        match t {
            Term::Oplus(l, r) => {
                assert_eq!(*l, Term::Scalar(Scalar::Lit(2), Box::new(Term::Power(x(), Scalar::Lit(2)))));
                assert!(matches!(*r, Term::Odot(..)));
            }
            other => panic!("{other:?}"),
        }
        let t = parse_term("x - y - z", Signature::Group).unwrap();
        assert_eq!(t.to_string(), "x - y - z");
        assert!(parse_term("x (+) y", Signature::Group).is_err());
    }

    #[test]
    fn parenthesised_formulas_and_terms() {
        let s = parse_sequent("(x = 0) \\/ (x) = 1 |-[x] (x (+) x) <= x").unwrap();
        assert_eq!(s.antecedent.to_string(), "x = 0 \\/ x = 1");
        let s = parse_sequent("((x = 0 /\\ true)) |- true").unwrap();
        assert_eq!(s.context, vec!["x"]);
    }

    #[test]
    fn units_and_context_inference() {
        let s = parse_sequent("x >= 0 |-[x] bigvee n<=64 . x <= n*u").unwrap();
        assert_eq!(
            s.consequent,
            Formula::BigOr {
                index: "n".into(),
                cap: 64,
                body: Box::new(Formula::Leq(
                    Term::var("x"),
                    Term::Scalar(Scalar::Index("n".into()), Box::new(Term::Unit))
                )),
            }
        );
        assert_eq!(s.antecedent, Formula::Leq(Term::Zero, Term::var("x")));
        let s = parse_sequent("true |-[u] u = u").unwrap();
        assert_eq!(s.consequent, Formula::Eq(Term::var("u"), Term::var("u")));
        let s = parse_sequent("x + z <= y + z |- x <= y").unwrap();
        assert_eq!(s.context, vec!["x", "z", "y"]);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_sequent("x = |-[x] x = x") {
            Err(Error::Syntax { line: 1, column: 5, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_sequent("true |-[x]\n  y = x") {
            Err(Error::Syntax { line: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_sequent("true |-[x,x] x = x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_sequent("true |-[x] x + neg x = 0"), Err(Error::SignatureMismatch(_))));
        assert!(matches!(parse_sequent("true |-[x] x <= n*x"), Err(Error::UnboundVariable(_))));
        assert!(parse_sequent("true |-[x] x = 3").is_err());
    }
}
