//! The interface the sequent checker evaluates against.

use std::fmt;

use crate::error::{Error, Result};
use crate::lgroup::{LGroup, Monoid};
use crate::mv::MvAlgebra;
use crate::value::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Mv,
    Group,
    Monoid,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::Mv => "MV-algebra",
            ModelKind::Group => "l-group",
            ModelKind::Monoid => "monoid",
        })
    }
}

/// A structure for one of the three signatures. `plus` is `(+)` in an
/// MV-algebra and `+` otherwise; `negate` is `neg` or unary `-`.
pub trait Model: Sync {
    fn kind(&self) -> ModelKind;
    fn name(&self) -> String;
    fn elements(&self, bound: u64) -> Result<Vec<Value>>;
    fn exhaustive(&self, bound: u64) -> bool;
    fn zero(&self) -> Value;
    fn plus(&self, x: &Value, y: &Value) -> Result<Value>;
    fn negate(&self, x: &Value) -> Result<Value>;
    fn inf(&self, x: &Value, y: &Value) -> Result<Value>;
    fn sup(&self, x: &Value, y: &Value) -> Result<Value>;
    fn leq(&self, x: &Value, y: &Value) -> Result<bool>;

    /// `n` copies of `x` under `plus`.
    fn scale(&self, n: u64, x: &Value) -> Result<Value> {
        let mut acc = self.zero();
        for _ in 0..n {
            acc = self.plus(&acc, x)?;
        }
        Ok(acc)
    }

    /// The distinguished constant (`u` for unital groups, `a` for pointed
    /// algebras), if any.
    fn unit(&self) -> Option<Value> {
        None
    }
}

impl Model for MvAlgebra {
    fn kind(&self) -> ModelKind {
        ModelKind::Mv
    }
    fn name(&self) -> String {
        self.to_string()
    }
    fn elements(&self, bound: u64) -> Result<Vec<Value>> {
        MvAlgebra::elements(self, bound)
    }
    fn exhaustive(&self, bound: u64) -> bool {
        MvAlgebra::exhaustive(self, bound)
    }
    fn zero(&self) -> Value {
        MvAlgebra::zero(self)
    }
    fn plus(&self, x: &Value, y: &Value) -> Result<Value> {
        self.oplus(x, y)
    }
    fn negate(&self, x: &Value) -> Result<Value> {
        self.neg(x)
    }
    fn inf(&self, x: &Value, y: &Value) -> Result<Value> {
        MvAlgebra::inf(self, x, y)
    }
    fn sup(&self, x: &Value, y: &Value) -> Result<Value> {
        MvAlgebra::sup(self, x, y)
    }
    fn leq(&self, x: &Value, y: &Value) -> Result<bool> {
        MvAlgebra::leq(self, x, y)
    }
    fn scale(&self, n: u64, x: &Value) -> Result<Value> {
        self.scalar(n, x)
    }
}

impl Model for LGroup {
    fn kind(&self) -> ModelKind {
        ModelKind::Group
    }
    fn name(&self) -> String {
        self.to_string()
    }
    fn elements(&self, bound: u64) -> Result<Vec<Value>> {
        LGroup::elements(self, bound)
    }
    fn exhaustive(&self, bound: u64) -> bool {
        LGroup::exhaustive(self, bound)
    }
    fn zero(&self) -> Value {
        LGroup::zero(self)
    }
    fn plus(&self, x: &Value, y: &Value) -> Result<Value> {
        self.add(x, y)
    }
    fn negate(&self, x: &Value) -> Result<Value> {
        LGroup::negate(self, x)
    }
    fn inf(&self, x: &Value, y: &Value) -> Result<Value> {
        LGroup::inf(self, x, y)
    }
    fn sup(&self, x: &Value, y: &Value) -> Result<Value> {
        LGroup::sup(self, x, y)
    }
    fn leq(&self, x: &Value, y: &Value) -> Result<bool> {
        LGroup::leq(self, x, y)
    }
    fn scale(&self, n: u64, x: &Value) -> Result<Value> {
        LGroup::scale(self, n, x)
    }
}

impl Model for Monoid {
    fn kind(&self) -> ModelKind {
        ModelKind::Monoid
    }
    fn name(&self) -> String {
        self.to_string()
    }
    fn elements(&self, bound: u64) -> Result<Vec<Value>> {
        Monoid::elements(self, bound)
    }
    fn exhaustive(&self, bound: u64) -> bool {
        Monoid::exhaustive(self, bound)
    }
    fn zero(&self) -> Value {
        Monoid::zero(self)
    }
    fn plus(&self, x: &Value, y: &Value) -> Result<Value> {
        self.add(x, y)
    }
    fn negate(&self, _: &Value) -> Result<Value> {
        Err(Error::SignatureMismatch("monoids have no negation".into()))
    }
    fn inf(&self, x: &Value, y: &Value) -> Result<Value> {
        Monoid::inf(self, x, y)
    }
    fn sup(&self, x: &Value, y: &Value) -> Result<Value> {
        Monoid::sup(self, x, y)
    }
    fn leq(&self, x: &Value, y: &Value) -> Result<bool> {
        Monoid::leq(self, x, y)
    }
}

/// Any of the concrete structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Mv(MvAlgebra),
    Group(LGroup),
    Monoid(Monoid),
}

impl Structure {
    fn model(&self) -> &dyn Model {
        match self {
            Structure::Mv(a) => a,
            Structure::Group(g) => g,
            Structure::Monoid(m) => m,
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::Mv(a) => a.fmt(f),
            Structure::Group(g) => g.fmt(f),
            Structure::Monoid(m) => m.fmt(f),
        }
    }
}

/// A structure together with an optional distinguished element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelHandle {
    pub structure: Structure,
    pub unit: Option<Value>,
}

impl ModelHandle {
    pub fn new(structure: Structure) -> Self {
        ModelHandle { structure, unit: None }
    }

    pub fn with_unit(structure: Structure, unit: Value) -> Self {
        ModelHandle { structure, unit: Some(unit) }
    }
}

impl From<MvAlgebra> for ModelHandle {
    fn from(a: MvAlgebra) -> Self {
        ModelHandle::new(Structure::Mv(a))
    }
}

impl From<LGroup> for ModelHandle {
    fn from(g: LGroup) -> Self {
        ModelHandle::new(Structure::Group(g))
    }
}

impl From<Monoid> for ModelHandle {
    fn from(m: Monoid) -> Self {
        ModelHandle::new(Structure::Monoid(m))
    }
}

impl fmt::Display for ModelHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.unit {
            Some(u) => write!(f, "{} with unit {u}", self.structure),
            None => write!(f, "{}", self.structure),
        }
    }
}

impl Model for ModelHandle {
    fn kind(&self) -> ModelKind {
        self.structure.model().kind()
    }
    fn name(&self) -> String {
        self.to_string()
    }
    fn elements(&self, bound: u64) -> Result<Vec<Value>> {
        self.structure.model().elements(bound)
    }
    fn exhaustive(&self, bound: u64) -> bool {
        self.structure.model().exhaustive(bound)
    }
    fn zero(&self) -> Value {
        self.structure.model().zero()
    }
    fn plus(&self, x: &Value, y: &Value) -> Result<Value> {
        self.structure.model().plus(x, y)
    }
    fn negate(&self, x: &Value) -> Result<Value> {
        self.structure.model().negate(x)
    }
    fn inf(&self, x: &Value, y: &Value) -> Result<Value> {
        self.structure.model().inf(x, y)
    }
    fn sup(&self, x: &Value, y: &Value) -> Result<Value> {
        self.structure.model().sup(x, y)
    }
    fn leq(&self, x: &Value, y: &Value) -> Result<bool> {
        self.structure.model().leq(x, y)
    }
    fn scale(&self, n: u64, x: &Value) -> Result<Value> {
        self.structure.model().scale(n, x)
    }
    fn unit(&self) -> Option<Value> {
        self.unit.clone()
    }
}
