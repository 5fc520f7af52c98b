//! Evaluation of terms and formulas in a model, with Kleene three-valued
//! truth for the bounded quantifiers.

use std::borrow::Cow;
use std::collections::HashMap;

use super::ast::{Formula, Scalar, Term};
use crate::error::{Error, Result};
use crate::model::{Model, ModelKind};
use crate::value::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Truth {
    False,
    Unknown,
    True,
}

impl From<bool> for Truth {
    fn from(b: bool) -> Self {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }
}

/// Evaluates a closed-over term: `env` must bind every variable of `t`.
pub fn eval_term(model: &dyn Model, t: &Term, env: &HashMap<String, Value>) -> Result<Value> {
    let mut slots = Slots::default();
    let names: Vec<String> = env.keys().cloned().collect();
    for n in &names {
        slots.values.push(n.clone());
    }
    let compiled = slots.term(t)?;
    let unit = unit_of(model, t.uses_unit())?;
    let values: Vec<Value> = names.iter().map(|n| env[n].clone()).collect();
    let eval = Evaluator { model, unit, witnesses: &[], witness_complete: false };
    Ok(eval.term(&compiled, &values, &[])?.into_owned())
}

fn unit_of(model: &dyn Model, needed: bool) -> Result<Option<Value>> {
    match model.unit() {
        Some(u) => Ok(Some(u)),
        None if needed => {
            Err(Error::SignatureMismatch(format!("{} has no distinguished constant", model.name())))
        }
        None => Ok(None),
    }
}

#[derive(Clone, Debug)]
pub(crate) enum CScalar {
    Lit(u64),
    Index(usize),
}

#[derive(Clone, Debug)]
pub(crate) enum CTerm {
    Slot(usize),
    Zero,
    One,
    Unit,
    Plus(Box<CTerm>, Box<CTerm>),
    Negate(Box<CTerm>),
    Odot(Box<CTerm>, Box<CTerm>),
    Inf(Box<CTerm>, Box<CTerm>),
    Sup(Box<CTerm>, Box<CTerm>),
    Scalar(CScalar, Box<CTerm>),
    Power(Box<CTerm>, CScalar),
    D(Box<CTerm>, Box<CTerm>),
}

#[derive(Clone, Debug)]
pub(crate) enum CFormula {
    Top,
    Bot,
    Eq(CTerm, CTerm),
    Leq(CTerm, CTerm),
    And(Box<CFormula>, Box<CFormula>),
    Or(Box<CFormula>, Box<CFormula>),
    Exists(usize, Box<CFormula>),
    BigOr(usize, u64, Box<CFormula>),
}

/// Name resolution: element variables to value slots, `bigvee` indices to
/// index slots. Inner bindings shadow outer ones.
#[derive(Default)]
pub(crate) struct Slots {
    pub values: Vec<String>,
    pub indices: Vec<String>,
    pub max_values: usize,
    pub max_indices: usize,
}

impl Slots {
    pub fn with_context(context: &[String]) -> Self {
        Slots { values: context.to_vec(), max_values: context.len(), ..Default::default() }
    }

    fn scalar(&self, s: &Scalar) -> Result<CScalar> {
        match s {
            Scalar::Lit(n) => Ok(CScalar::Lit(*n)),
            Scalar::Index(i) => self
                .indices
                .iter()
                .rposition(|n| n == i)
                .map(CScalar::Index)
                .ok_or_else(|| Error::UnboundVariable(i.clone())),
        }
    }

    pub fn term(&self, t: &Term) -> Result<CTerm> {
        let b = |t: &Term| self.term(t).map(Box::new);
        Ok(match t {
            Term::Var(v) => match self.values.iter().rposition(|n| n == v) {
                Some(i) => CTerm::Slot(i),
                None => return Err(Error::UnboundVariable(v.clone())),
            },
            Term::Zero => CTerm::Zero,
            Term::One => CTerm::One,
            Term::Unit => CTerm::Unit,
            Term::Oplus(x, y) | Term::Add(x, y) => CTerm::Plus(b(x)?, b(y)?),
            Term::Neg(x) | Term::Minus(x) => CTerm::Negate(b(x)?),
            Term::Odot(x, y) => CTerm::Odot(b(x)?, b(y)?),
            Term::Inf(x, y) => CTerm::Inf(b(x)?, b(y)?),
            Term::Sup(x, y) => CTerm::Sup(b(x)?, b(y)?),
            Term::D(x, y) => CTerm::D(b(x)?, b(y)?),
            Term::Scalar(n, x) => CTerm::Scalar(self.scalar(n)?, b(x)?),
            Term::Power(x, n) => CTerm::Power(b(x)?, self.scalar(n)?),
        })
    }

    pub fn formula(&mut self, f: &Formula) -> Result<CFormula> {
        Ok(match f {
            Formula::Top => CFormula::Top,
            Formula::Bot => CFormula::Bot,
            Formula::Eq(x, y) => CFormula::Eq(self.term(x)?, self.term(y)?),
            Formula::Leq(x, y) => CFormula::Leq(self.term(x)?, self.term(y)?),
            Formula::And(p, q) => CFormula::And(Box::new(self.formula(p)?), Box::new(self.formula(q)?)),
            Formula::Or(p, q) => CFormula::Or(Box::new(self.formula(p)?), Box::new(self.formula(q)?)),
            Formula::Exists(v, p) => {
                self.values.push(v.clone());
                self.max_values = self.max_values.max(self.values.len());
                let slot = self.values.len() - 1;
                let body = self.formula(p);
                self.values.pop();
                CFormula::Exists(slot, Box::new(body?))
            }
            Formula::BigOr { index, cap, body } => {
                self.indices.push(index.clone());
                self.max_indices = self.max_indices.max(self.indices.len());
                let slot = self.indices.len() - 1;
                let body = self.formula(body);
                self.indices.pop();
                CFormula::BigOr(slot, *cap, Box::new(body?))
            }
        })
    }
}

pub(crate) struct Evaluator<'a> {
    pub model: &'a dyn Model,
    pub unit: Option<Value>,
    /// Candidate witnesses for `exists`.
    pub witnesses: &'a [Value],
    /// Whether `witnesses` is the whole carrier, so that a failed search is
    /// a definite `False`.
    pub witness_complete: bool,
}

impl Evaluator<'_> {
    fn scalar(s: &CScalar, idx: &[u64]) -> u64 {
        match s {
            CScalar::Lit(n) => *n,
            CScalar::Index(i) => idx[*i],
        }
    }

    pub fn term<'e>(&self, t: &CTerm, env: &'e [Value], idx: &[u64]) -> Result<Cow<'e, Value>> {
        let m = self.model;
        if let CTerm::Slot(i) = t {
            return Ok(Cow::Borrowed(&env[*i]));
        }
        Ok(Cow::Owned(match t {
            CTerm::Slot(_) => unreachable!(),
            CTerm::Zero => m.zero(),
            CTerm::One => m.negate(&m.zero())?,
            CTerm::Unit => self.unit.clone().ok_or_else(|| {
                Error::SignatureMismatch(format!("{} has no distinguished constant", m.name()))
            })?,
            CTerm::Plus(x, y) => m.plus(&*self.term(x, env, idx)?, &*self.term(y, env, idx)?)?,
            CTerm::Negate(x) => m.negate(&*self.term(x, env, idx)?)?,
            CTerm::Odot(x, y) => {
                let (x, y) = (self.term(x, env, idx)?, self.term(y, env, idx)?);
                self.odot(&x, &y)?
            }
            CTerm::Inf(x, y) => m.inf(&*self.term(x, env, idx)?, &*self.term(y, env, idx)?)?,
            CTerm::Sup(x, y) => m.sup(&*self.term(x, env, idx)?, &*self.term(y, env, idx)?)?,
            CTerm::Scalar(n, x) => m.scale(Self::scalar(n, idx), &*self.term(x, env, idx)?)?,
            CTerm::Power(x, n) => {
                let x = self.term(x, env, idx)?;
                m.negate(&m.scale(Self::scalar(n, idx), &m.negate(&x)?)?)?
            }
            CTerm::D(x, y) => {
                let (x, y) = (self.term(x, env, idx)?, self.term(y, env, idx)?);
                let xy = self.odot(&x, &m.negate(&y)?)?;
                let yx = self.odot(&y, &m.negate(&x)?)?;
                m.plus(&xy, &yx)?
            }
        }))
    }

    fn odot(&self, x: &Value, y: &Value) -> Result<Value> {
        let m = self.model;
        m.negate(&m.plus(&m.negate(x)?, &m.negate(y)?)?)
    }

    /// `env` and `idx` must have room for every bound slot.
    pub fn formula(&self, f: &CFormula, env: &mut [Value], idx: &mut [u64]) -> Result<Truth> {
        Ok(match f {
            CFormula::Top => Truth::True,
            CFormula::Bot => Truth::False,
            CFormula::Eq(x, y) => (self.term(x, env, idx)? == self.term(y, env, idx)?).into(),
            CFormula::Leq(x, y) => {
                self.model.leq(&*self.term(x, env, idx)?, &*self.term(y, env, idx)?)?.into()
            }
            CFormula::And(p, q) => {
                let a = self.formula(p, env, idx)?;
                if a == Truth::False {
                    return Ok(a);
                }
                a.min(self.formula(q, env, idx)?)
            }
            CFormula::Or(p, q) => {
                let a = self.formula(p, env, idx)?;
                if a == Truth::True {
                    return Ok(a);
                }
                a.max(self.formula(q, env, idx)?)
            }
            CFormula::Exists(slot, p) => {
                let mut best = Truth::False;
                for w in self.witnesses {
                    env[*slot] = w.clone();
                    best = best.max(self.formula(p, env, idx)?);
                    if best == Truth::True {
                        break;
                    }
                }
                if best == Truth::False && !self.witness_complete {
                    Truth::Unknown
                } else {
                    best
                }
            }
            CFormula::BigOr(slot, cap, p) => {
                let mut best = Truth::False;
                for n in 0..=*cap {
                    idx[*slot] = n;
                    best = best.max(self.formula(p, env, idx)?);
                    if best == Truth::True {
                        break;
                    }
                }
                // A false capped disjunction may still hold past the cap.
                best.max(Truth::Unknown)
            }
        })
    }
}

/// Rejects models whose kind the signature does not cover.
pub(crate) fn check_signature(sig: super::ast::Signature, kind: ModelKind, model: &str) -> Result<()> {
    if sig.accepts(kind) {
        Ok(())
    } else {
        Err(Error::SignatureMismatch(format!("a {sig} sequent cannot be evaluated in the {kind} {model}")))
    }
}
