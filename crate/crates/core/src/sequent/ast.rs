//! Terms, formulas and sequents, with the pretty-printer.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::ModelKind;

/// A natural-number coefficient: a literal or an index bound by `bigvee`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Lit(u64),
    Index(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    /// The distinguished constant: `a` in the MV signature, `u` otherwise.
    Unit,
    Oplus(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    Odot(Box<Term>, Box<Term>),
    Inf(Box<Term>, Box<Term>),
    Sup(Box<Term>, Box<Term>),
    Add(Box<Term>, Box<Term>),
    Minus(Box<Term>),
    Scalar(Scalar, Box<Term>),
    Power(Box<Term>, Scalar),
    D(Box<Term>, Box<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Bot,
    Eq(Term, Term),
    Leq(Term, Term),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    /// `bigvee n<=cap . body`, a finite stand-in for a disjunction over all `n`.
    BigOr {
        index: String,
        cap: u64,
        body: Box<Formula>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub context: Vec<String>,
    pub antecedent: Formula,
    pub consequent: Formula,
    pub name: Option<String>,
}

/// Which signature a term or sequent is written in. `Neutral` uses only
/// symbols common to all three (variables, `0`, `inf`, `sup`, `n*`, the
/// distinguished constant).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Signature {
    Neutral,
    Mv,
    Monoid,
    Group,
}

impl Signature {
    pub fn join(self, other: Signature) -> Result<Signature> {
        use Signature::*;
        match (self, other) {
            (Neutral, s) | (s, Neutral) => Ok(s),
            (Mv, Mv) => Ok(Mv),
            (Mv, _) | (_, Mv) => Err(Error::SignatureMismatch("MV symbols mixed with group symbols".into())),
            (Group, _) | (_, Group) => Ok(Group),
            (Monoid, Monoid) => Ok(Monoid),
        }
    }

    /// Whether a sequent in this signature can be evaluated in a model of
    /// `kind`. Monoid terms also make sense in groups.
    pub fn accepts(self, kind: ModelKind) -> bool {
        match self {
            Signature::Neutral => true,
            Signature::Mv => kind == ModelKind::Mv,
            Signature::Group => kind == ModelKind::Group,
            Signature::Monoid => matches!(kind, ModelKind::Monoid | ModelKind::Group),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Signature::Neutral => "neutral",
            Signature::Mv => "MV",
            Signature::Monoid => "monoid",
            Signature::Group => "l-group",
        })
    }
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn signature(&self) -> Result<Signature> {
        use Term::*;
        let own = match self {
            Var(_) | Zero | Unit | Inf(..) | Sup(..) | Scalar(..) => Signature::Neutral,
            One | Oplus(..) | Neg(_) | Odot(..) | Power(..) | D(..) => Signature::Mv,
            Add(..) => Signature::Monoid,
            Minus(_) => Signature::Group,
        };
        self.children().try_fold(own, |s, t| s.join(t.signature()?))
    }

    fn children(&self) -> impl Iterator<Item = &Term> {
        use Term::*;
        let (a, b): (Option<&Term>, Option<&Term>) = match self {
            Var(_) | Zero | One | Unit => (None, None),
            Neg(t) | Minus(t) | Scalar(_, t) | Power(t, _) => (Some(t), None),
            Oplus(x, y) | Odot(x, y) | Inf(x, y) | Sup(x, y) | Add(x, y) | D(x, y) => (Some(x), Some(y)),
        };
        a.into_iter().chain(b)
    }

    pub fn uses_unit(&self) -> bool {
        matches!(self, Term::Unit) || self.children().any(Term::uses_unit)
    }

    fn scalars(&self, out: &mut Vec<String>) {
        match self {
            Term::Scalar(Scalar::Index(i), _) | Term::Power(_, Scalar::Index(i)) => out.push(i.clone()),
            _ => {}
        }
        for c in self.children() {
            c.scalars(out);
        }
    }

    fn vars(&self, out: &mut Vec<String>) {
        if let Term::Var(v) = self {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        for c in self.children() {
            c.vars(out);
        }
    }

    /// Rewrites variables named `u` or `a` that are not in `bound` to the
    /// distinguished constant.
    pub(crate) fn resolve_unit(&mut self, bound: &[String]) {
        use Term::*;
        match self {
            Var(v) if (v == "u" || v == "a") && !bound.contains(v) => *self = Unit,
            Var(_) | Zero | One | Unit => {}
            Neg(t) | Minus(t) | Scalar(_, t) | Power(t, _) => t.resolve_unit(bound),
            Oplus(x, y) | Odot(x, y) | Inf(x, y) | Sup(x, y) | Add(x, y) | D(x, y) => {
                x.resolve_unit(bound);
                y.resolve_unit(bound);
            }
        }
    }
}

impl Formula {
    pub fn and(self, other: Formula) -> Formula {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Formula {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn signature(&self) -> Result<Signature> {
        match self {
            Formula::Top | Formula::Bot => Ok(Signature::Neutral),
            Formula::Eq(x, y) | Formula::Leq(x, y) => x.signature()?.join(y.signature()?),
            Formula::And(p, q) | Formula::Or(p, q) => p.signature()?.join(q.signature()?),
            Formula::Exists(_, p) | Formula::BigOr { body: p, .. } => p.signature(),
        }
    }

    /// Free variables in order of first occurrence.
    pub fn free_vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut Vec<String>) {
        let push_term = |t: &Term, out: &mut Vec<String>| {
            let mut vs = Vec::new();
            t.vars(&mut vs);
            for v in vs {
                if !bound.contains(&v) && !out.contains(&v) {
                    out.push(v);
                }
            }
        };
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Eq(x, y) | Formula::Leq(x, y) => {
                push_term(x, out);
                push_term(y, out);
            }
            Formula::And(p, q) | Formula::Or(p, q) => {
                p.collect_free(bound, out);
                q.collect_free(bound, out);
            }
            Formula::Exists(v, p) => {
                bound.push(v.clone());
                p.collect_free(bound, out);
                bound.pop();
            }
            Formula::BigOr { body, .. } => body.collect_free(bound, out),
        }
    }

    pub(crate) fn resolve_unit(&mut self, bound: &mut Vec<String>) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Eq(x, y) | Formula::Leq(x, y) => {
                x.resolve_unit(bound);
                y.resolve_unit(bound);
            }
            Formula::And(p, q) | Formula::Or(p, q) => {
                p.resolve_unit(bound);
                q.resolve_unit(bound);
            }
            Formula::Exists(v, p) => {
                bound.push(v.clone());
                p.resolve_unit(bound);
                bound.pop();
            }
            Formula::BigOr { body, .. } => body.resolve_unit(bound),
        }
    }

    /// Checks that every scalar index is bound by an enclosing `bigvee`.
    pub(crate) fn check_indices(&self, bound: &mut Vec<String>) -> Result<()> {
        let check_term = |t: &Term, bound: &Vec<String>| -> Result<()> {
            let mut used = Vec::new();
            t.scalars(&mut used);
            match used.into_iter().find(|i| !bound.contains(i)) {
                Some(i) => Err(Error::UnboundVariable(i)),
                None => Ok(()),
            }
        };
        match self {
            Formula::Top | Formula::Bot => Ok(()),
            Formula::Eq(x, y) | Formula::Leq(x, y) => {
                check_term(x, bound)?;
                check_term(y, bound)
            }
            Formula::And(p, q) | Formula::Or(p, q) => {
                p.check_indices(bound)?;
                q.check_indices(bound)
            }
            Formula::Exists(_, p) => p.check_indices(bound),
            Formula::BigOr { index, body, .. } => {
                bound.push(index.clone());
                let r = body.check_indices(bound);
                bound.pop();
                r
            }
        }
    }

    pub fn uses_unit(&self) -> bool {
        match self {
            Formula::Top | Formula::Bot => false,
            Formula::Eq(x, y) | Formula::Leq(x, y) => x.uses_unit() || y.uses_unit(),
            Formula::And(p, q) | Formula::Or(p, q) => p.uses_unit() || q.uses_unit(),
            Formula::Exists(_, p) | Formula::BigOr { body: p, .. } => p.uses_unit(),
        }
    }

    pub fn has_bigor(&self) -> bool {
        match self {
            Formula::BigOr { .. } => true,
            Formula::And(p, q) | Formula::Or(p, q) => p.has_bigor() || q.has_bigor(),
            Formula::Exists(_, p) => p.has_bigor(),
            _ => false,
        }
    }
}

impl Sequent {
    pub fn signature(&self) -> Result<Signature> {
        self.antecedent.signature()?.join(self.consequent.signature()?)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Whether checking can only refute: a capped disjunction that stays
    /// false might still hold for a larger index.
    pub fn uses_unit(&self) -> bool {
        self.antecedent.uses_unit() || self.consequent.uses_unit()
    }

    pub fn has_capped_disjunction(&self) -> bool {
        self.antecedent.has_bigor() || self.consequent.has_bigor()
    }
}

// Printing. Term precedence: 0 binary (+) + -, 1 (.), 2 prefix, 3 postfix ^, 4 atoms.

fn scalar_str(s: &Scalar) -> String {
    match s {
        Scalar::Lit(n) => n.to_string(),
        Scalar::Index(i) => i.clone(),
    }
}

struct TermPrinter<'a> {
    term: &'a Term,
    prec: u8,
    unit: &'static str,
}

impl<'a> fmt::Display for TermPrinter<'a> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Term::*;
        let unit = self.unit;
        let sub = |term: &'a Term, prec: u8| TermPrinter { term, prec, unit };
        let own = match self.term {
            Oplus(..) | Add(..) => 0,
            Odot(..) => 1,
            Neg(_) | Minus(_) | Scalar(..) => 2,
            Power(..) => 3,
            _ => 4,
        };
        if own < self.prec {
            return write!(f, "({})", sub(self.term, 0));
        }
        match self.term {
            Var(v) => f.write_str(v),
            Zero => f.write_str("0"),
            One => f.write_str("1"),
            Unit => f.write_str(unit),
            Oplus(x, y) => write!(f, "{} (+) {}", sub(x, 0), sub(y, 1)),
            Add(x, y) => match &**y {
                Minus(z) => write!(f, "{} - {}", sub(x, 0), sub(z, 1)),
                _ => write!(f, "{} + {}", sub(x, 0), sub(y, 1)),
            },
            Odot(x, y) => write!(f, "{} (.) {}", sub(x, 1), sub(y, 2)),
            Neg(x) => write!(f, "neg {}", sub(x, 2)),
            Minus(x) => write!(f, "-{}", sub(x, 2)),
            Scalar(n, x) => write!(f, "{}*{}", scalar_str(n), sub(x, 2)),
            Power(x, n) => write!(f, "{}^{}", sub(x, 3), scalar_str(n)),
            Inf(x, y) => write!(f, "inf({}, {})", sub(x, 0), sub(y, 0)),
            Sup(x, y) => write!(f, "sup({}, {})", sub(x, 0), sub(y, 0)),
            D(x, y) => write!(f, "d({}, {})", sub(x, 0), sub(y, 0)),
        }
    }
}

// Formula precedence: 0 quantifier bodies and top level, 1 \/ operands, 2 /\ operands.
struct FormulaPrinter<'a> {
    formula: &'a Formula,
    prec: u8,
    unit: &'static str,
}

impl<'a> fmt::Display for FormulaPrinter<'a> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = self.unit;
        let sub = |formula: &'a Formula, prec: u8| FormulaPrinter { formula, prec, unit };
        let term = |term: &'a Term| TermPrinter { term, prec: 0, unit };
        let own = match self.formula {
            Formula::Exists(..) | Formula::BigOr { .. } => 0,
            Formula::Or(..) => 1,
            Formula::And(..) => 2,
            _ => 3,
        };
        if own < self.prec {
            return write!(f, "({})", sub(self.formula, 0));
        }
        match self.formula {
            Formula::Top => f.write_str("true"),
            Formula::Bot => f.write_str("false"),
            Formula::Eq(x, y) => write!(f, "{} = {}", term(x), term(y)),
            Formula::Leq(x, y) => write!(f, "{} <= {}", term(x), term(y)),
            Formula::Or(p, q) => write!(f, "{} \\/ {}", sub(p, 1), sub(q, 2)),
            Formula::And(p, q) => write!(f, "{} /\\ {}", sub(p, 2), sub(q, 3)),
            Formula::Exists(v, p) => write!(f, "exists {v}. {}", sub(p, 0)),
            Formula::BigOr { index, cap, body } => {
                write!(f, "bigvee {index}<={cap} . {}", sub(body, 0))
            }
        }
    }
}

fn unit_name(sig: Result<Signature>) -> &'static str {
    if matches!(sig, Ok(Signature::Mv)) {
        "a"
    } else {
        "u"
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        TermPrinter { term: self, prec: 0, unit: unit_name(self.signature()) }.fmt(f)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        FormulaPrinter { formula: self, prec: 0, unit: unit_name(self.signature()) }.fmt(f)
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = unit_name(self.signature());
        write!(
            f,
            "{} |-[{}] {}",
            FormulaPrinter { formula: &self.antecedent, prec: 0, unit },
            self.context.join(","),
            FormulaPrinter { formula: &self.consequent, prec: 0, unit },
        )
    }
}
