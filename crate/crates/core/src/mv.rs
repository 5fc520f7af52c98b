//! Concrete MV-algebras and the operations derived from `(+)`, `neg`, `0`.

use std::fmt;

use crate::error::{mismatch, Error, Result};
use crate::int::Integer;
use crate::lgroup::{lex_add, lex_inf, lex_negate, LGroup, Verdict};
use crate::value::Value;
use crate::{cartesian, check_size};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MvAlgebra {
    /// Chang's algebra `C`.
    Chang,
    /// The chain `{0, 1/m, ..., 1}`; `Chain(1)` is the two-element algebra.
    Chain(u64),
    /// The unit interval `[0, unit]` of an l-group with truncated addition.
    Gamma { group: LGroup, unit: Value },
    /// `Gamma(Z x_lex G, (1,0))` with elements tagged `Rad`/`Corad`.
    Sigma(LGroup),
    /// Finite direct product; the empty product is the trivial algebra.
    Product(Vec<MvAlgebra>),
    /// `A/(k)` for a Boolean `k`, realised on the interval `[0, neg k]`.
    Quotient { base: Box<MvAlgebra>, kernel: Value, top: Value },
}

/// An axiom name with its elementwise test.
type NamedTest = (&'static str, fn(&MvAlgebra, &Value) -> Result<bool>);

/// Result of [`MvAlgebra::order_of`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    NoneUpTo(u64),
}

/// A failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub x: Value,
}

fn natural(n: &Integer) -> Result<&Integer> {
    if n.is_negative() {
        Err(mismatch(format!("negative Chang index {n}")))
    } else {
        Ok(n)
    }
}

fn sigma_to_lex(x: &Value) -> Result<Value> {
    match x {
        Value::Rad(g) => Ok(Value::Lex(Integer::ZERO, g.clone())),
        Value::Corad(g) => Ok(Value::Lex(Integer::ONE, g.clone())),
        other => Err(mismatch(format!("{other} is not an element of a Sigma algebra"))),
    }
}

fn sigma_from_lex(x: Value) -> Result<Value> {
    match x {
        Value::Lex(h, g) if h.is_zero() => Ok(Value::Rad(g)),
        Value::Lex(h, g) if h == Integer::ONE => Ok(Value::Corad(g)),
        other => Err(mismatch(format!("{other} left the unit interval"))),
    }
}

fn sigma_unit(g: &LGroup) -> Value {
    Value::Lex(Integer::ONE, Box::new(g.zero()))
}

impl MvAlgebra {
    /// The two-element Boolean algebra.
    pub const B: MvAlgebra = MvAlgebra::Chain(1);

    pub fn trivial() -> MvAlgebra {
        MvAlgebra::Product(Vec::new())
    }

    pub fn zero(&self) -> Value {
        match self {
            MvAlgebra::Chang => Value::Fin(Integer::ZERO),
            MvAlgebra::Chain(m) => Value::Chain(0, *m),
            MvAlgebra::Gamma { group, .. } => group.zero(),
            MvAlgebra::Sigma(g) => Value::rad(g.zero()),
            MvAlgebra::Product(fs) => Value::Tuple(fs.iter().map(|f| f.zero()).collect()),
            MvAlgebra::Quotient { base, .. } => base.zero(),
        }
    }

    pub fn one(&self) -> Value {
        match self {
            MvAlgebra::Chang => Value::CoFin(Integer::ZERO),
            MvAlgebra::Chain(m) => Value::Chain(*m, *m),
            MvAlgebra::Gamma { unit, .. } => unit.clone(),
            MvAlgebra::Sigma(g) => Value::corad(g.zero()),
            MvAlgebra::Product(fs) => Value::Tuple(fs.iter().map(|f| f.one()).collect()),
            MvAlgebra::Quotient { top, .. } => top.clone(),
        }
    }

    pub fn oplus(&self, x: &Value, y: &Value) -> Result<Value> {
        match self {
            MvAlgebra::Chang => match (x, y) {
                (Value::Fin(a), Value::Fin(b)) => Ok(Value::Fin(natural(a)? + natural(b)?)),
                (Value::Fin(a), Value::CoFin(b)) | (Value::CoFin(b), Value::Fin(a)) => {
                    let (a, b) = (natural(a)?, natural(b)?);
                    Ok(Value::CoFin(if a < b { b - a } else { Integer::ZERO }))
                }
                (Value::CoFin(a), Value::CoFin(b)) => {
                    natural(a)?;
                    natural(b)?;
                    Ok(Value::CoFin(Integer::ZERO))
                }
                _ => Err(mismatch(format!("{x}, {y} are not elements of C"))),
            },
            MvAlgebra::Chain(m) => match (x, y) {
                (Value::Chain(k, mx), Value::Chain(l, my)) if mx == m && my == m && k <= m && l <= m => {
                    Ok(Value::Chain((k + l).min(*m), *m))
                }
                _ => Err(mismatch(format!("{x}, {y} are not elements of L({m})"))),
            },
            MvAlgebra::Gamma { group, unit } => group.inf(unit, &group.add(x, y)?),
            MvAlgebra::Sigma(g) => {
                let s = lex_add(g, &sigma_to_lex(x)?, &sigma_to_lex(y)?)?;
                sigma_from_lex(lex_inf(g, &sigma_unit(g), &s)?)
            }
            MvAlgebra::Product(fs) => match (x, y) {
                (Value::Tuple(a), Value::Tuple(b)) if a.len() == fs.len() && b.len() == fs.len() => {
                    let items = fs
                        .iter()
                        .zip(a.iter().zip(b.iter()))
                        .map(|(f, (p, q))| f.oplus(p, q))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Value::Tuple(items))
                }
                _ => Err(mismatch(format!("{x}, {y} are not {}-tuples", fs.len()))),
            },
            MvAlgebra::Quotient { base, top, .. } => base.inf(&base.oplus(x, y)?, top),
        }
    }

    pub fn neg(&self, x: &Value) -> Result<Value> {
        match self {
            MvAlgebra::Chang => match x {
                Value::Fin(n) => Ok(Value::CoFin(natural(n)?.clone())),
                Value::CoFin(n) => Ok(Value::Fin(natural(n)?.clone())),
                _ => Err(mismatch(format!("{x} is not an element of C"))),
            },
            MvAlgebra::Chain(m) => match x {
                Value::Chain(k, mx) if mx == m && k <= m => Ok(Value::Chain(m - k, *m)),
                _ => Err(mismatch(format!("{x} is not an element of L({m})"))),
            },
            MvAlgebra::Gamma { group, unit } => group.sub(unit, x),
            MvAlgebra::Sigma(g) => {
                sigma_from_lex(lex_add(g, &sigma_unit(g), &lex_negate(g, &sigma_to_lex(x)?)?)?)
            }
            MvAlgebra::Product(fs) => match x {
                Value::Tuple(a) if a.len() == fs.len() => {
                    Ok(Value::Tuple(fs.iter().zip(a).map(|(f, p)| f.neg(p)).collect::<Result<Vec<_>>>()?))
                }
                _ => Err(mismatch(format!("{x} is not a {}-tuple", fs.len()))),
            },
            MvAlgebra::Quotient { base, top, .. } => base.inf(&base.neg(x)?, top),
        }
    }

    /// `x (.) y = neg(neg x (+) neg y)`.
    pub fn odot(&self, x: &Value, y: &Value) -> Result<Value> {
        self.neg(&self.oplus(&self.neg(x)?, &self.neg(y)?)?)
    }

    /// `x - y = x (.) neg y`.
    pub fn ominus(&self, x: &Value, y: &Value) -> Result<Value> {
        self.odot(x, &self.neg(y)?)
    }

    /// `sup(x, y) = (x (.) neg y) (+) y`.
    pub fn sup(&self, x: &Value, y: &Value) -> Result<Value> {
        self.oplus(&self.ominus(x, y)?, y)
    }

    /// `inf(x, y) = (x (+) neg y) (.) y`.
    pub fn inf(&self, x: &Value, y: &Value) -> Result<Value> {
        self.odot(&self.oplus(x, &self.neg(y)?)?, y)
    }

    /// `x <= y` iff `inf(x, y) = x`.
    pub fn leq(&self, x: &Value, y: &Value) -> Result<bool> {
        Ok(self.inf(x, y)? == *x)
    }

    /// `d(x, y) = (x - y) (+) (y - x)`.
    pub fn dist(&self, x: &Value, y: &Value) -> Result<Value> {
        self.oplus(&self.ominus(x, y)?, &self.ominus(y, x)?)
    }

    /// `n x`, the `n`-fold `(+)`.
    pub fn scalar(&self, n: u64, x: &Value) -> Result<Value> {
        if let (MvAlgebra::Chang, Value::Fin(k)) = (self, x) {
            return Ok(Value::Fin(natural(k)?.scale(n)));
        }
        let one = self.one();
        let mut acc = self.zero();
        for _ in 0..n {
            acc = self.oplus(&acc, x)?;
            if acc == one {
                break;
            }
        }
        Ok(acc)
    }

    /// `x^n`, the `n`-fold `(.)`.
    pub fn power(&self, x: &Value, n: u64) -> Result<Value> {
        self.neg(&self.scalar(n, &self.neg(x)?)?)
    }

    /// Least `n <= bound` with `n x = 1`.
    pub fn order_of(&self, x: &Value, bound: u64) -> Result<Order> {
        let one = self.one();
        let mut acc = self.zero();
        for n in 1..=bound {
            acc = self.oplus(&acc, x)?;
            if acc == one {
                return Ok(Order::Finite(n));
            }
        }
        Ok(Order::NoneUpTo(bound))
    }

    /// `x <= neg x`; the radical in Chang's variety.
    pub fn is_radical(&self, x: &Value) -> Result<bool> {
        self.leq(x, &self.neg(x)?)
    }

    /// `neg x <= x`.
    pub fn is_coradical(&self, x: &Value) -> Result<bool> {
        self.leq(&self.neg(x)?, x)
    }

    /// `x (+) x = x`.
    pub fn is_boolean(&self, x: &Value) -> Result<bool> {
        Ok(self.oplus(x, x)? == *x)
    }

    /// `(2x)^2` for each generator; Boolean in every algebra of Chang's variety.
    pub fn boolean_skeleton_generators(&self, gens: &[Value]) -> Result<Vec<Value>> {
        gens.iter().map(|x| self.power(&self.scalar(2, x)?, 2)).collect()
    }

    pub fn contains(&self, x: &Value) -> bool {
        match (self, x) {
            (MvAlgebra::Chang, Value::Fin(n) | Value::CoFin(n)) => !n.is_negative(),
            (MvAlgebra::Chain(m), Value::Chain(k, mx)) => mx == m && k <= m,
            (MvAlgebra::Gamma { group, unit }, x) => {
                group.contains(x)
                    && group.leq(&group.zero(), x).unwrap_or(false)
                    && group.leq(x, unit).unwrap_or(false)
            }
            (MvAlgebra::Sigma(g), Value::Rad(t)) => g.contains(t) && g.leq(&g.zero(), t).unwrap_or(false),
            (MvAlgebra::Sigma(g), Value::Corad(t)) => g.contains(t) && g.leq(t, &g.zero()).unwrap_or(false),
            (MvAlgebra::Product(fs), Value::Tuple(items)) => {
                fs.len() == items.len() && fs.iter().zip(items).all(|(f, v)| f.contains(v))
            }
            (MvAlgebra::Quotient { base, top, .. }, x) => {
                base.contains(x) && base.leq(x, top).unwrap_or(false)
            }
            _ => false,
        }
    }

    /// Deterministic listing that grows with `bound`: Chang elements `n c` and
    /// `1 - n c` for `n <= bound`, unit-interval elements whose coordinates
    /// lie in `[-bound, bound]`, and cartesian products of factor listings.
    pub fn elements(&self, bound: u64) -> Result<Vec<Value>> {
        match self {
            MvAlgebra::Chang => {
                check_size(2 * (bound as u128 + 1))?;
                let mut out: Vec<Value> = (0..=bound).map(Value::fin).collect();
                out.extend((0..=bound).map(Value::cofin));
                Ok(out)
            }
            MvAlgebra::Chain(m) => {
                check_size(*m as u128 + 1)?;
                Ok((0..=*m).map(|k| Value::Chain(k, *m)).collect())
            }
            MvAlgebra::Gamma { group, unit } => {
                let zero = group.zero();
                let mut out = Vec::new();
                for x in group.elements(bound)? {
                    if group.leq(&zero, &x)? && group.leq(&x, unit)? {
                        out.push(x);
                    }
                }
                Ok(out)
            }
            MvAlgebra::Sigma(g) => {
                let zero = g.zero();
                let all = g.elements(bound)?;
                let mut rads = Vec::new();
                let mut corads = Vec::new();
                for t in all {
                    if g.leq(&zero, &t)? {
                        rads.push(Value::rad(t.clone()));
                    }
                    if g.leq(&t, &zero)? {
                        corads.push(Value::corad(t));
                    }
                }
                rads.extend(corads);
                Ok(rads)
            }
            MvAlgebra::Product(fs) => {
                let lists = fs.iter().map(|f| f.elements(bound)).collect::<Result<Vec<_>>>()?;
                let size = lists
                    .iter()
                    .try_fold(1u128, |acc, l| acc.checked_mul(l.len() as u128))
                    .unwrap_or(u128::MAX);
                check_size(size)?;
                Ok(cartesian(&lists).into_iter().map(Value::Tuple).collect())
            }
            MvAlgebra::Quotient { base, top, .. } => {
                let mut seen = std::collections::HashSet::new();
                let mut out = Vec::new();
                for x in base.elements(bound)? {
                    let y = base.inf(&x, top)?;
                    if seen.insert(y.clone()) {
                        out.push(y);
                    }
                }
                Ok(out)
            }
        }
    }

    /// Whether `elements(bound)` lists the whole carrier.
    pub fn exhaustive(&self, bound: u64) -> bool {
        match self {
            MvAlgebra::Chang => false,
            MvAlgebra::Chain(_) => true,
            MvAlgebra::Gamma { group, unit } => match (group, unit) {
                (LGroup::Zn(_), Value::Vec(c)) => c.iter().all(|v| v.abs() <= Integer::from(bound)),
                _ => group.exhaustive(bound),
            },
            MvAlgebra::Sigma(g) => g.exhaustive(bound),
            MvAlgebra::Product(fs) => fs.iter().all(|f| f.exhaustive(bound)),
            MvAlgebra::Quotient { base, .. } => base.exhaustive(bound),
        }
    }

    /// Whether `elements(bound)` contains every radical element.
    pub(crate) fn radical_exhaustive(&self, bound: u64) -> bool {
        match self {
            // Rad(C) = {n c} is infinite; finite chains have radical {0}.
            MvAlgebra::Chang => false,
            MvAlgebra::Sigma(g) => g.exhaustive(bound),
            other => other.exhaustive(bound),
        }
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            MvAlgebra::Product(fs) => fs.is_empty() || fs.iter().any(|f| f.is_trivial()),
            MvAlgebra::Quotient { base, top, .. } => *top == base.zero(),
            MvAlgebra::Gamma { group, unit } => *unit == group.zero(),
            MvAlgebra::Chain(m) => *m == 0,
            _ => false,
        }
    }

    /// Checks `xi: 2x^2 = (2x)^2` and `2(2x)^2 = (2x)^2` on `elements(bound)`.
    pub fn check_chang_variety(&self, bound: u64) -> Result<Verdict<AxiomFailure>> {
        let elements = self.elements(bound)?;
        for (axiom, test) in [("xi", xi as fn(&MvAlgebra, &Value) -> Result<bool>), ("P.2", p2)] {
            for x in &elements {
                if !test(self, x)? {
                    return Ok(Verdict::CounterExample(AxiomFailure { axiom, x: x.clone() }));
                }
            }
        }
        Ok(Verdict::Holds)
    }

    /// Checks P.1-P.4 on `elements(bound)`, reporting the first failing axiom
    /// in that order. The family `{P.1, beta}` is evaluated as well and must
    /// agree with `{P.1, P.2, P.3}`.
    pub fn check_perfect(&self, bound: u64) -> Result<Verdict<AxiomFailure>> {
        let elements = self.elements(bound)?;
        let first = |axioms: &[NamedTest]| {
            for (axiom, test) in axioms {
                for x in &elements {
                    if !test(self, x)? {
                        return Ok(Some(AxiomFailure { axiom, x: x.clone() }));
                    }
                }
            }
            Ok::<_, Error>(None)
        };
        let main = first(&[("P.1", p1), ("P.2", p2), ("P.3", p3)])?;
        let alt = first(&[("P.1", p1), ("beta", beta)])?;
        if main.is_some() != alt.is_some() {
            return Err(Error::FamilyDisagreement(format!(
                "{{P.1,P.2,P.3}}: {main:?}; {{P.1,beta}}: {alt:?} in {self}"
            )));
        }
        if let Some(f) = main {
            return Ok(Verdict::CounterExample(f));
        }
        match first(&[("P.4", p4)])? {
            Some(f) => Ok(Verdict::CounterExample(f)),
            None => Ok(Verdict::Holds),
        }
    }
}

fn xi(a: &MvAlgebra, x: &Value) -> Result<bool> {
    Ok(a.scalar(2, &a.power(x, 2)?)? == a.power(&a.scalar(2, x)?, 2)?)
}

fn p1(a: &MvAlgebra, x: &Value) -> Result<bool> {
    let sq = a.power(x, 2)?;
    Ok(a.oplus(&sq, &sq)? == a.power(&a.oplus(x, x)?, 2)?)
}

fn p2(a: &MvAlgebra, x: &Value) -> Result<bool> {
    let b = a.power(&a.scalar(2, x)?, 2)?;
    Ok(a.scalar(2, &b)? == b)
}

fn p3(a: &MvAlgebra, x: &Value) -> Result<bool> {
    Ok(!a.is_boolean(x)? || *x == a.zero() || *x == a.one())
}

fn p4(a: &MvAlgebra, x: &Value) -> Result<bool> {
    Ok(*x != a.neg(x)?)
}

fn beta(a: &MvAlgebra, x: &Value) -> Result<bool> {
    Ok(a.is_radical(x)? || a.is_coradical(x)?)
}

impl fmt::Display for MvAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MvAlgebra::Chang => write!(f, "C"),
            MvAlgebra::Chain(1) => write!(f, "B"),
            MvAlgebra::Chain(m) => write!(f, "L({m})"),
            MvAlgebra::Gamma { group, unit } => write!(f, "Gamma({group},{unit})"),
            MvAlgebra::Sigma(g) => write!(f, "Sigma({g})"),
            MvAlgebra::Product(fs) if fs.is_empty() => write!(f, "Trivial"),
            MvAlgebra::Product(fs) => {
                write!(f, "Prod(")?;
                for (i, a) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
            MvAlgebra::Quotient { base, kernel, .. } => write!(f, "Quot({base},{kernel})"),
        }
    }
}

/// `A/(k)` for Boolean `k`, as the interval `[0, neg k]`.
pub(crate) fn interval_quotient(base: &MvAlgebra, kernel: &Value) -> Result<MvAlgebra> {
    Ok(MvAlgebra::Quotient { top: base.neg(kernel)?, base: Box::new(base.clone()), kernel: kernel.clone() })
}

/// `Gamma(Z x_lex G, (1,0))` on untagged lexicographic pairs.
pub fn lex_interval(g: &LGroup) -> MvAlgebra {
    MvAlgebra::Gamma { group: LGroup::Lex(Box::new(g.clone())), unit: sigma_unit(g) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cc() -> MvAlgebra {
        MvAlgebra::Product(vec![MvAlgebra::Chang, MvAlgebra::Chang])
    }

    fn sigma_z2() -> MvAlgebra {
        MvAlgebra::Sigma(LGroup::Zn(2))
    }

    #[test]
    fn chang_derived_operations() {
        let c = MvAlgebra::Chang;
        assert_eq!(c.odot(&Value::fin(1), &Value::fin(1)).unwrap(), Value::fin(0));
        assert!(c.leq(&Value::fin(3), &Value::cofin(3)).unwrap());
        assert!(!c.leq(&Value::cofin(3), &Value::fin(3)).unwrap());
        assert_eq!(c.inf(&Value::fin(2), &Value::fin(2)).unwrap(), Value::fin(2));
        assert_eq!(c.one(), Value::cofin(0));
        // (1-2c)(.)(1-2c) = neg(2c (+) 2c) = 1-4c.
        assert_eq!(c.power(&Value::cofin(2), 2).unwrap(), Value::cofin(4));
        // d(c, 3c) = (c - 3c) (+) (3c - c) = 0 (+) 2c.
        assert_eq!(c.dist(&Value::fin(1), &Value::fin(3)).unwrap(), Value::fin(2));
        assert_eq!(c.scalar(4, &Value::fin(3)).unwrap(), Value::fin(12));
        assert_eq!(c.scalar(1, &Value::cofin(5)).unwrap(), Value::cofin(5));
        assert_eq!(c.power(&Value::fin(7), 0).unwrap(), c.one());
        assert_eq!(c.scalar(0, &Value::fin(7)).unwrap(), c.zero());
    }

    #[test]
    fn chang_orders() {
        let c = MvAlgebra::Chang;
        for n in 1..=10 {
            assert_eq!(c.order_of(&Value::cofin(n), 10).unwrap(), Order::Finite(2));
            assert_eq!(c.order_of(&Value::fin(n), 50).unwrap(), Order::NoneUpTo(50));
        }
        assert_eq!(c.order_of(&c.one(), 5).unwrap(), Order::Finite(1));
    }

    #[test]
    fn radicals_and_booleans() {
        let c = MvAlgebra::Chang;
        for n in 0..20 {
            assert!(c.is_radical(&Value::fin(n)).unwrap());
        }
        assert!(c.is_radical(&c.zero()).unwrap());
        assert!(!c.is_coradical(&Value::fin(1)).unwrap());
        assert!(c.is_boolean(&Value::fin(0)).unwrap());
        assert!(c.is_boolean(&Value::cofin(0)).unwrap());
        assert!(!c.is_boolean(&Value::fin(1)).unwrap());
        let booleans: Vec<Value> =
            c.elements(20).unwrap().into_iter().filter(|x| c.is_boolean(x).unwrap()).collect();
        assert_eq!(booleans, vec![Value::fin(0), Value::cofin(0)]);
        assert!(cc().is_boolean(&Value::tuple(vec![Value::cofin(0), Value::fin(0)])).unwrap());
    }

    #[test]
    fn skeleton_generators() {
        let c = MvAlgebra::Chang;
        assert_eq!(c.boolean_skeleton_generators(&[Value::fin(2)]).unwrap(), vec![Value::fin(0)]);
        assert_eq!(c.boolean_skeleton_generators(&[c.zero()]).unwrap(), vec![c.zero()]);
        let g = Value::tuple(vec![Value::fin(1), Value::cofin(1)]);
        assert_eq!(
            cc().boolean_skeleton_generators(&[g]).unwrap(),
            vec![Value::tuple(vec![Value::fin(0), Value::cofin(0)])]
        );
    }

    #[test]
    fn chang_variety_membership() {
        assert_eq!(MvAlgebra::Chang.check_chang_variety(20).unwrap(), Verdict::Holds);
        assert_eq!(
            MvAlgebra::Chain(2).check_chang_variety(3).unwrap(),
            Verdict::CounterExample(AxiomFailure { axiom: "xi", x: Value::Chain(1, 2) })
        );
        assert_eq!(MvAlgebra::B.check_chang_variety(2).unwrap(), Verdict::Holds);
    }

    #[test]
    fn perfectness() {
        assert_eq!(MvAlgebra::Chang.check_perfect(20).unwrap(), Verdict::Holds);
        assert_eq!(sigma_z2().check_perfect(4).unwrap(), Verdict::Holds);
        let trivial = MvAlgebra::trivial();
        assert!(matches!(
            trivial.check_perfect(1).unwrap(),
            Verdict::CounterExample(AxiomFailure { axiom: "P.4", .. })
        ));
        assert_eq!(
            cc().check_perfect(8).unwrap(),
            Verdict::CounterExample(AxiomFailure {
                axiom: "P.3",
                x: Value::tuple(vec![Value::fin(0), Value::cofin(0)])
            })
        );
        assert!(matches!(
            MvAlgebra::Chain(2).check_perfect(1).unwrap(),
            Verdict::CounterExample(AxiomFailure { axiom: "P.1", .. })
        ));
    }

    #[test]
    fn sigma_arithmetic() {
        let s = MvAlgebra::Sigma(LGroup::Zn(1));
        // (0,2) + (1,-3) = (1,-1), below the unit (1,0).
        assert_eq!(
            s.oplus(&Value::rad(Value::int(2)), &Value::corad(Value::int(-3))).unwrap(),
            Value::corad(Value::int(-1))
        );
        assert_eq!(s.oplus(&Value::rad(Value::int(5)), &Value::corad(Value::int(-3))).unwrap(), s.one());
        assert_eq!(s.neg(&Value::rad(Value::int(4))).unwrap(), Value::corad(Value::int(-4)));
        let trivial = MvAlgebra::Sigma(LGroup::Zn(0));
        assert_eq!(trivial.elements(3).unwrap().len(), 2);
        assert!(trivial.exhaustive(1));
    }

    #[test]
    fn sigma_of_z_is_chang() {
        let s = MvAlgebra::Sigma(LGroup::Zn(1));
        let c = MvAlgebra::Chang;
        let to_c = |v: &Value| match v {
            Value::Rad(g) => Value::fin(g.to_string().parse().unwrap()),
            Value::Corad(g) => Value::cofin((-g.to_string().parse::<i64>().unwrap()) as u64),
            other => panic!("{other}"),
        };
        let els = s.elements(6).unwrap();
        assert_eq!(els.len(), 14);
        for x in &els {
            assert_eq!(to_c(&s.neg(x).unwrap()), c.neg(&to_c(x)).unwrap());
            for y in &els {
                assert_eq!(to_c(&s.oplus(x, y).unwrap()), c.oplus(&to_c(x), &to_c(y)).unwrap());
            }
        }
    }

    #[test]
    fn gamma_of_integers() {
        let g2 = MvAlgebra::Gamma { group: LGroup::Zn(1), unit: Value::int(2) };
        assert_eq!(g2.elements(4).unwrap(), vec![Value::int(0), Value::int(1), Value::int(2)]);
        assert_eq!(g2.oplus(&Value::int(1), &Value::int(2)).unwrap(), Value::int(2));
        assert_eq!(g2.neg(&Value::int(1)).unwrap(), Value::int(1));
        assert!(g2.exhaustive(2));
        assert!(!g2.exhaustive(1));
    }

    #[test]
    fn carrier_mismatch() {
        let c = MvAlgebra::Chang;
        assert!(matches!(c.oplus(&Value::fin(1), &Value::int(1)), Err(Error::CarrierMismatch(_))));
        assert!(matches!(cc().neg(&Value::fin(1)), Err(Error::CarrierMismatch(_))));
        assert!(MvAlgebra::Chain(2).oplus(&Value::Chain(1, 3), &Value::Chain(1, 2)).is_err());
    }

    #[test]
    fn rad_coradical_exclusive_in_sigma() {
        for a in [MvAlgebra::Chang, sigma_z2()] {
            for x in a.elements(6).unwrap() {
                let r = a.is_radical(&x).unwrap();
                let c = a.is_coradical(&x).unwrap();
                assert!(r ^ c, "{x}");
                match &x {
                    Value::Rad(_) => assert!(r),
                    Value::Corad(_) => assert!(c),
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn gamma_lex_reproduces_sigma_carrier() {
        for g in [LGroup::Zn(1), LGroup::Zn(2)] {
            let direct: Vec<Value> = lex_interval(&g)
                .elements(4)
                .unwrap()
                .into_iter()
                .map(|x| sigma_from_lex(x).unwrap())
                .collect();
            let mut sigma = MvAlgebra::Sigma(g.clone()).elements(4).unwrap();
            let mut direct = direct;
            sigma.sort_by_key(|v| v.to_string());
            direct.sort_by_key(|v| v.to_string());
            assert_eq!(sigma, direct);
        }
    }

    #[test]
    fn enumeration_monotone() {
        for a in [MvAlgebra::Chang, cc(), sigma_z2(), MvAlgebra::Chain(3)] {
            let small = a.elements(2).unwrap();
            let large = a.elements(3).unwrap();
            assert!(small.iter().all(|x| large.contains(x)));
            assert_eq!(small, a.elements(2).unwrap());
        }
    }

    fn chang_value() -> impl Strategy<Value = Value> {
        (any::<bool>(), 0u64..1000).prop_map(|(co, n)| if co { Value::cofin(n) } else { Value::fin(n) })
    }

    fn sigma_value() -> impl Strategy<Value = Value> {
        (any::<bool>(), 0i64..30, 0i64..30).prop_map(|(co, a, b)| {
            if co {
                Value::corad(Value::vector([-a, -b]))
            } else {
                Value::rad(Value::vector([a, b]))
            }
        })
    }

    fn mv_axioms(a: &MvAlgebra, x: &Value, y: &Value, z: &Value) -> std::result::Result<(), TestCaseError> {
        let o = |p: &Value, q: &Value| a.oplus(p, q).unwrap();
        let n = |p: &Value| a.neg(p).unwrap();
        prop_assert_eq!(o(x, &o(y, z)), o(&o(x, y), z));
        prop_assert_eq!(o(x, y), o(y, x));
        prop_assert_eq!(o(x, &a.zero()), x.clone());
        prop_assert_eq!(n(&n(x)), x.clone());
        prop_assert_eq!(o(x, &n(&a.zero())), n(&a.zero()));
        prop_assert_eq!(o(&n(&o(&n(x), y)), y), o(&n(&o(&n(y), x)), x));
        Ok(())
    }

    proptest! {
        #[test]
        fn chang_satisfies_mv_axioms(x in chang_value(), y in chang_value(), z in chang_value()) {
            mv_axioms(&MvAlgebra::Chang, &x, &y, &z)?;
        }

        #[test]
        fn sigma_satisfies_mv_axioms(x in sigma_value(), y in sigma_value(), z in sigma_value()) {
            mv_axioms(&sigma_z2(), &x, &y, &z)?;
        }

        #[test]
        fn gamma_n_sequents_in_chang(x in chang_value(), n in 1u32..=5) {
            let c = MvAlgebra::Chang;
            if c.scalar(1 << n, &x).unwrap() == c.one() {
                prop_assert_eq!(c.scalar(2, &x).unwrap(), c.one());
            }
        }
    }
}
