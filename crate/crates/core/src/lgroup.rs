//! Lattice-ordered abelian groups, their positive cones, and Grothendieck groups.

use std::collections::HashSet;
use std::fmt;

use crate::error::{mismatch, Error, Result};
use crate::int::Integer;
use crate::mv::MvAlgebra;
use crate::value::{Coords, Value};
use crate::{cartesian, check_size};

/// A concrete l-group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LGroup {
    /// `Z^n` with the pointwise order; rank 0 is the trivial group.
    Zn(usize),
    /// `Z x_lex G`.
    Lex(Box<LGroup>),
    /// Grothendieck group of a monoid, on canonical pairs.
    Groth(Box<Monoid>),
    /// Canonical pairs of radical elements of a perfect algebra, with the
    /// operations written directly in MV terms.
    Pairs(Box<MvAlgebra>),
}

/// A cancellative subtractive lattice-ordered monoid with bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Monoid {
    /// The positive cone of an l-group; `N^n` is the cone of `Z^n`.
    PosCone(LGroup),
    /// The radical of a perfect algebra under `(+)`, `inf`, `sup`.
    Radical(MvAlgebra),
}

/// Outcome of a bounded check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    CounterExample(W),
    /// No definite failure, but some instance could not be settled within
    /// the search cap.
    Inconclusive(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn is_counterexample(&self) -> bool {
        matches!(self, Verdict::CounterExample(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::CounterExample(_) => "counterexample",
            Verdict::Inconclusive(_) => "inconclusive",
        }
    }
}

fn coords(x: &Value, rank: usize) -> Result<&Coords> {
    match x {
        Value::Vec(c) if c.len() == rank => Ok(c),
        other => Err(mismatch(format!("{other} is not an element of Z^{rank}"))),
    }
}

fn zip_coords(rank: usize, x: &Value, y: &Value, f: impl Fn(&Integer, &Integer) -> Integer) -> Result<Value> {
    let (a, b) = (coords(x, rank)?, coords(y, rank)?);
    Ok(Value::Vec(a.iter().zip(b.iter()).map(|(p, q)| f(p, q)).collect()))
}

fn lex_parts(x: &Value) -> Result<(&Integer, &Value)> {
    match x {
        Value::Lex(h, t) => Ok((h, t)),
        other => Err(mismatch(format!("{other} is not a lexicographic pair"))),
    }
}

fn pair_parts(x: &Value) -> Result<(&Value, &Value)> {
    match x {
        Value::Pair(u, v) => Ok((u, v)),
        other => Err(mismatch(format!("{other} is not a pair"))),
    }
}

pub(crate) fn lex_add(tail: &LGroup, x: &Value, y: &Value) -> Result<Value> {
    let ((a, s), (b, t)) = (lex_parts(x)?, lex_parts(y)?);
    Ok(Value::Lex(a + b, Box::new(tail.add(s, t)?)))
}

pub(crate) fn lex_negate(tail: &LGroup, x: &Value) -> Result<Value> {
    let (a, s) = lex_parts(x)?;
    Ok(Value::Lex(-a, Box::new(tail.negate(s)?)))
}

pub(crate) fn lex_leq(tail: &LGroup, x: &Value, y: &Value) -> Result<bool> {
    let ((a, s), (b, t)) = (lex_parts(x)?, lex_parts(y)?);
    Ok(a < b || (a == b && tail.leq(s, t)?))
}

pub(crate) fn lex_inf(tail: &LGroup, x: &Value, y: &Value) -> Result<Value> {
    let ((a, s), (b, t)) = (lex_parts(x)?, lex_parts(y)?);
    Ok(match a.cmp(b) {
        std::cmp::Ordering::Less => x.clone(),
        std::cmp::Ordering::Greater => y.clone(),
        std::cmp::Ordering::Equal => Value::Lex(a.clone(), Box::new(tail.inf(s, t)?)),
    })
}

pub(crate) fn lex_sup(tail: &LGroup, x: &Value, y: &Value) -> Result<Value> {
    let ((a, s), (b, t)) = (lex_parts(x)?, lex_parts(y)?);
    Ok(match a.cmp(b) {
        std::cmp::Ordering::Less => y.clone(),
        std::cmp::Ordering::Greater => x.clone(),
        std::cmp::Ordering::Equal => Value::Lex(a.clone(), Box::new(tail.sup(s, t)?)),
    })
}

/// Splits `(x, y)` into the canonical representative `(u, v)` of its class:
/// `x = inf(x,y) + u`, `y = inf(x,y) + v`.
pub fn canon_pair(m: &Monoid, x: &Value, y: &Value) -> Result<(Value, Value)> {
    let low = m.inf(x, y)?;
    Ok((m.subtract(x, &low)?, m.subtract(y, &low)?))
}

fn canon_value(m: &Monoid, x: &Value, y: &Value) -> Result<Value> {
    let (u, v) = canon_pair(m, x, y)?;
    Ok(Value::pair(u, v))
}

/// Radical-pair arithmetic in MV terms: the class `[p, q]` is represented by
/// `(p - q, q - p)` with truncated subtraction.
fn mv_canon(a: &MvAlgebra, p: &Value, q: &Value) -> Result<Value> {
    Ok(Value::pair(a.ominus(p, q)?, a.ominus(q, p)?))
}

impl LGroup {
    pub fn zero(&self) -> Value {
        match self {
            LGroup::Zn(n) => Value::Vec(std::iter::repeat_n(Integer::ZERO, *n).collect()),
            LGroup::Lex(g) => Value::Lex(Integer::ZERO, Box::new(g.zero())),
            LGroup::Groth(m) => Value::pair(m.zero(), m.zero()),
            LGroup::Pairs(a) => Value::pair(a.zero(), a.zero()),
        }
    }

    pub fn add(&self, x: &Value, y: &Value) -> Result<Value> {
        match self {
            LGroup::Zn(n) => zip_coords(*n, x, y, |p, q| p + q),
            LGroup::Lex(g) => lex_add(g, x, y),
            LGroup::Groth(m) => {
                let ((a, b), (c, d)) = (pair_parts(x)?, pair_parts(y)?);
                canon_value(m, &m.add(a, c)?, &m.add(b, d)?)
            }
            LGroup::Pairs(alg) => {
                let ((u, v), (a, b)) = (pair_parts(x)?, pair_parts(y)?);
                mv_canon(alg, &alg.oplus(u, a)?, &alg.oplus(v, b)?)
            }
        }
    }

    pub fn negate(&self, x: &Value) -> Result<Value> {
        match self {
            LGroup::Zn(n) => Ok(Value::Vec(coords(x, *n)?.iter().map(|c| -c).collect())),
            LGroup::Lex(g) => lex_negate(g, x),
            LGroup::Groth(_) | LGroup::Pairs(_) => {
                let (u, v) = pair_parts(x)?;
                Ok(Value::pair(v.clone(), u.clone()))
            }
        }
    }

    pub fn sub(&self, x: &Value, y: &Value) -> Result<Value> {
        self.add(x, &self.negate(y)?)
    }

    pub fn inf(&self, x: &Value, y: &Value) -> Result<Value> {
        match self {
            LGroup::Zn(n) => zip_coords(*n, x, y, |p, q| p.min(q).clone()),
            LGroup::Lex(g) => lex_inf(g, x, y),
            LGroup::Groth(m) => {
                let ((a, b), (h, k)) = (pair_parts(x)?, pair_parts(y)?);
                let low = m.inf(&m.add(a, k)?, &m.add(b, h)?)?;
                canon_value(m, &low, &m.add(b, k)?)
            }
            LGroup::Pairs(alg) => {
                let ((u, v), (a, b)) = (pair_parts(x)?, pair_parts(y)?);
                let low = alg.inf(&alg.oplus(u, b)?, &alg.oplus(v, a)?)?;
                mv_canon(alg, &low, &alg.oplus(v, b)?)
            }
        }
    }

    pub fn sup(&self, x: &Value, y: &Value) -> Result<Value> {
        match self {
            LGroup::Zn(n) => zip_coords(*n, x, y, |p, q| p.max(q).clone()),
            LGroup::Lex(g) => lex_sup(g, x, y),
            LGroup::Groth(m) => {
                let ((a, b), (h, k)) = (pair_parts(x)?, pair_parts(y)?);
                let high = m.sup(&m.add(a, k)?, &m.add(b, h)?)?;
                canon_value(m, &high, &m.add(b, k)?)
            }
            LGroup::Pairs(alg) => {
                let ((u, v), (a, b)) = (pair_parts(x)?, pair_parts(y)?);
                let high = alg.sup(&alg.oplus(u, b)?, &alg.oplus(v, a)?)?;
                mv_canon(alg, &high, &alg.oplus(v, b)?)
            }
        }
    }

    pub fn leq(&self, x: &Value, y: &Value) -> Result<bool> {
        match self {
            LGroup::Zn(n) => {
                let (a, b) = (coords(x, *n)?, coords(y, *n)?);
                Ok(a.iter().zip(b.iter()).all(|(p, q)| p <= q))
            }
            LGroup::Lex(g) => lex_leq(g, x, y),
            LGroup::Groth(_) | LGroup::Pairs(_) => Ok(self.inf(x, y)? == *x),
        }
    }

    /// `g+ = sup(0, g)`.
    pub fn pos_part(&self, g: &Value) -> Result<Value> {
        self.sup(&self.zero(), g)
    }

    /// `g- = sup(0, -g)`.
    pub fn neg_part(&self, g: &Value) -> Result<Value> {
        self.sup(&self.zero(), &self.negate(g)?)
    }

    /// `|g| = g+ + g-`.
    pub fn abs(&self, g: &Value) -> Result<Value> {
        self.add(&self.pos_part(g)?, &self.neg_part(g)?)
    }

    pub fn scale(&self, n: u64, x: &Value) -> Result<Value> {
        if let LGroup::Zn(rank) = self {
            return Ok(Value::Vec(coords(x, *rank)?.iter().map(|c| c.scale(n)).collect()));
        }
        let mut acc = self.zero();
        for _ in 0..n {
            acc = self.add(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn contains(&self, x: &Value) -> bool {
        match (self, x) {
            (LGroup::Zn(n), Value::Vec(c)) => c.len() == *n,
            (LGroup::Lex(g), Value::Lex(_, t)) => g.contains(t),
            (LGroup::Groth(m), Value::Pair(u, v)) => {
                m.contains(u) && m.contains(v) && m.inf(u, v).ok() == Some(m.zero())
            }
            (LGroup::Pairs(a), Value::Pair(u, v)) => {
                a.contains(u)
                    && a.contains(v)
                    && a.is_radical(u).unwrap_or(false)
                    && a.is_radical(v).unwrap_or(false)
                    && a.inf(u, v).ok() == Some(a.zero())
            }
            _ => false,
        }
    }

    /// Elements whose integer coordinates all lie in `[-bound, bound]`.
    /// The listing grows with `bound` and is deterministic.
    pub fn elements(&self, bound: u64) -> Result<Vec<Value>> {
        let b = i64::try_from(bound).map_err(|_| Error::InvalidArgument("bound too large".into()))?;
        match self {
            LGroup::Zn(n) => {
                let side = 2 * bound as u128 + 1;
                check_size(side.checked_pow(*n as u32).unwrap_or(u128::MAX))?;
                let axis: Vec<Integer> = (-b..=b).map(Integer::from).collect();
                let axes = vec![axis; *n];
                Ok(cartesian(&axes).into_iter().map(|c| Value::Vec(c.into_iter().collect())).collect())
            }
            LGroup::Lex(g) => {
                let tails = g.elements(bound)?;
                check_size((2 * bound as u128 + 1) * tails.len() as u128)?;
                let mut out = Vec::new();
                for h in -b..=b {
                    for t in &tails {
                        out.push(Value::Lex(Integer::from(h), Box::new(t.clone())));
                    }
                }
                Ok(out)
            }
            LGroup::Groth(m) => {
                let base = m.elements(bound)?;
                check_size(base.len() as u128 * base.len() as u128)?;
                let mut seen = HashSet::new();
                let mut out = Vec::new();
                for x in &base {
                    for y in &base {
                        let p = canon_value(m, x, y)?;
                        if seen.insert(p.clone()) {
                            out.push(p);
                        }
                    }
                }
                Ok(out)
            }
            LGroup::Pairs(a) => {
                let rads: Vec<Value> =
                    a.elements(bound)?.into_iter().filter(|x| a.is_radical(x).unwrap_or(false)).collect();
                check_size(rads.len() as u128 * rads.len() as u128)?;
                let zero = a.zero();
                let mut out = Vec::new();
                for u in &rads {
                    for v in &rads {
                        if a.inf(u, v)? == zero {
                            out.push(Value::pair(u.clone(), v.clone()));
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    /// Whether `elements(bound)` lists the whole carrier.
    pub fn exhaustive(&self, bound: u64) -> bool {
        match self {
            LGroup::Zn(n) => *n == 0,
            LGroup::Lex(_) => false,
            LGroup::Groth(m) => m.exhaustive(bound),
            LGroup::Pairs(a) => a.radical_exhaustive(bound),
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, LGroup::Zn(0))
    }
}

impl Monoid {
    /// `N^n`.
    pub fn naturals(rank: usize) -> Monoid {
        Monoid::PosCone(LGroup::Zn(rank))
    }

    pub fn zero(&self) -> Value {
        match self {
            Monoid::PosCone(g) => g.zero(),
            Monoid::Radical(a) => a.zero(),
        }
    }

    pub fn add(&self, x: &Value, y: &Value) -> Result<Value> {
        match self {
            Monoid::PosCone(g) => g.add(x, y),
            Monoid::Radical(a) => a.oplus(x, y),
        }
    }

    pub fn inf(&self, x: &Value, y: &Value) -> Result<Value> {
        match self {
            Monoid::PosCone(g) => g.inf(x, y),
            Monoid::Radical(a) => a.inf(x, y),
        }
    }

    pub fn sup(&self, x: &Value, y: &Value) -> Result<Value> {
        match self {
            Monoid::PosCone(g) => g.sup(x, y),
            Monoid::Radical(a) => a.sup(x, y),
        }
    }

    pub fn leq(&self, x: &Value, y: &Value) -> Result<bool> {
        match self {
            Monoid::PosCone(g) => g.leq(x, y),
            Monoid::Radical(a) => a.leq(x, y),
        }
    }

    /// The unique `z` with `x + z = y`, for `x <= y`.
    pub fn subtract(&self, y: &Value, x: &Value) -> Result<Value> {
        match self {
            Monoid::PosCone(g) => g.sub(y, x),
            Monoid::Radical(a) => a.odot(y, &a.neg(x)?),
        }
    }

    pub fn contains(&self, x: &Value) -> bool {
        match self {
            Monoid::PosCone(g) => g.contains(x) && g.leq(&g.zero(), x).unwrap_or(false),
            Monoid::Radical(a) => a.contains(x) && a.is_radical(x).unwrap_or(false),
        }
    }

    pub fn elements(&self, bound: u64) -> Result<Vec<Value>> {
        match self {
            Monoid::PosCone(g) => {
                let zero = g.zero();
                let mut out = Vec::new();
                for x in g.elements(bound)? {
                    if g.leq(&zero, &x)? {
                        out.push(x);
                    }
                }
                Ok(out)
            }
            Monoid::Radical(a) => {
                let mut out = Vec::new();
                for x in a.elements(bound)? {
                    if a.is_radical(&x)? {
                        out.push(x);
                    }
                }
                Ok(out)
            }
        }
    }

    pub fn exhaustive(&self, bound: u64) -> bool {
        match self {
            Monoid::PosCone(g) => g.exhaustive(bound),
            Monoid::Radical(a) => a.radical_exhaustive(bound),
        }
    }
}

/// `R(G)`: the positive cone as a monoid.
pub fn positive_cone(g: &LGroup) -> Monoid {
    Monoid::PosCone(g.clone())
}

/// `T(M)`: the Grothendieck group of a monoid.
pub fn grothendieck_group(m: &Monoid) -> LGroup {
    LGroup::Groth(Box::new(m.clone()))
}

/// Checks `L_u.1` exactly and `L_u.2` with `n` searched up to
/// `2 * bound + 2`.
///
/// A failure of `L_u.2` is reported as a counterexample only when
/// `(x - n u)+ = (x - (n+1) u)+ != 0`, which rules out every larger `n` as
/// well; otherwise the unresolved element is reported as inconclusive.
pub fn strong_unit_check(g: &LGroup, u: &Value, bound: u64) -> Result<Verdict<Value>> {
    let zero = g.zero();
    if !g.leq(&zero, u)? {
        return Ok(Verdict::CounterExample(u.clone()));
    }
    let cap = 2 * bound + 2;
    let mut undecided = None;
    'elements: for x in g.elements(bound)? {
        if !g.leq(&zero, &x)? {
            continue;
        }
        let mut nu = zero.clone();
        let mut rest = g.pos_part(&x)?;
        for _ in 0..=cap {
            if g.leq(&x, &nu)? {
                continue 'elements;
            }
            nu = g.add(&nu, u)?;
            let next = g.pos_part(&g.sub(&x, &nu)?)?;
            if next == rest && next != zero {
                return Ok(Verdict::CounterExample(x));
            }
            rest = next;
        }
        undecided.get_or_insert(x);
    }
    Ok(match undecided {
        Some(x) => Verdict::Inconclusive(x),
        None => Verdict::Holds,
    })
}

impl fmt::Display for LGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LGroup::Zn(1) => write!(f, "Z"),
            LGroup::Zn(n) => write!(f, "Z^{n}"),
            LGroup::Lex(g) => write!(f, "Lex(Z,{g})"),
            LGroup::Groth(m) => match &**m {
                Monoid::Radical(a) => write!(f, "Delta({a})"),
                m => write!(f, "Groth({m})"),
            },
            LGroup::Pairs(a) => write!(f, "Pairs({a})"),
        }
    }
}

impl fmt::Display for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monoid::PosCone(LGroup::Zn(1)) => write!(f, "N"),
            Monoid::PosCone(LGroup::Zn(n)) => write!(f, "N^{n}"),
            Monoid::PosCone(g) => write!(f, "PosCone({g})"),
            Monoid::Radical(a) => write!(f, "Rad({a})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z() -> LGroup {
        LGroup::Zn(1)
    }

    fn lex_zz() -> LGroup {
        LGroup::Lex(Box::new(z()))
    }

    #[test]
    fn positive_and_negative_parts() {
        assert_eq!(z().pos_part(&Value::int(-3)).unwrap(), Value::int(0));
        let z2 = LGroup::Zn(2);
        assert_eq!(z2.abs(&Value::vector([2, -5])).unwrap(), Value::vector([2, 5]));
        let g = Value::lex(-1, Value::int(7));
        assert_eq!(lex_zz().neg_part(&g).unwrap(), Value::lex(1, Value::int(-7)));
        assert_eq!(lex_zz().pos_part(&g).unwrap(), Value::lex(0, Value::int(0)));
    }

    #[test]
    fn lex_order_is_total_on_heads() {
        let g = lex_zz();
        let a = Value::lex(0, Value::int(100));
        let b = Value::lex(1, Value::int(-100));
        assert!(g.leq(&a, &b).unwrap());
        assert_eq!(g.inf(&a, &b).unwrap(), a);
        assert_eq!(g.sup(&a, &b).unwrap(), b);
    }

    #[test]
    fn positive_cone_listing() {
        let n2 = positive_cone(&LGroup::Zn(2));
        let els = n2.elements(2).unwrap();
        assert_eq!(els.len(), 9);
        assert!(els.iter().all(|x| matches!(x, Value::Vec(c) if c.iter().all(|v| !v.is_negative()))));
        assert_eq!(positive_cone(&lex_zz()).zero(), lex_zz().zero());
    }

    #[test]
    fn canonical_pairs() {
        let n = Monoid::naturals(1);
        assert_eq!(canon_pair(&n, &Value::int(5), &Value::int(3)).unwrap(), (Value::int(2), Value::int(0)));
        let n2 = Monoid::naturals(2);
        assert_eq!(
            canon_pair(&n2, &Value::vector([2, 1]), &Value::vector([1, 4])).unwrap(),
            (Value::vector([1, 0]), Value::vector([0, 3]))
        );
        assert_eq!(canon_pair(&n, &Value::int(4), &Value::int(4)).unwrap(), (Value::int(0), Value::int(0)));
    }

    #[test]
    fn grothendieck_of_naturals() {
        let g = grothendieck_group(&Monoid::naturals(1));
        let p = |u, v| Value::pair(Value::int(u), Value::int(v));
        assert_eq!(g.add(&p(2, 0), &p(0, 5)).unwrap(), p(0, 3));
        assert_eq!(g.negate(&p(2, 0)).unwrap(), p(0, 2));
        assert_eq!(g.inf(&p(1, 0), &p(0, 1)).unwrap(), p(0, 1));
        assert_eq!(g.sup(&p(1, 0), &p(0, 1)).unwrap(), p(1, 0));
        assert_eq!(g.zero(), p(0, 0));
        // Enumeration at bound b gives the differences -b..=b.
        assert_eq!(g.elements(3).unwrap().len(), 7);
    }

    #[test]
    fn strong_units() {
        assert_eq!(strong_unit_check(&z(), &Value::int(1), 10).unwrap(), Verdict::Holds);
        let u = Value::lex(1, Value::int(0));
        assert_eq!(strong_unit_check(&lex_zz(), &u, 5).unwrap(), Verdict::Holds);
        assert_eq!(
            strong_unit_check(&LGroup::Zn(2), &Value::vector([1, 0]), 3).unwrap(),
            Verdict::CounterExample(Value::vector([0, 1]))
        );
        assert_eq!(
            strong_unit_check(&z(), &Value::int(-1), 3).unwrap(),
            Verdict::CounterExample(Value::int(-1))
        );
        // (0,1) is not a strong unit of the lex group, but no finite search
        // can refute it.
        let small = Value::lex(0, Value::int(1));
        assert!(matches!(strong_unit_check(&lex_zz(), &small, 2).unwrap(), Verdict::Inconclusive(_)));
    }

    #[test]
    fn enumeration_grows() {
        for g in [z(), LGroup::Zn(2), lex_zz()] {
            let small: HashSet<Value> = g.elements(2).unwrap().into_iter().collect();
            let large: HashSet<Value> = g.elements(3).unwrap().into_iter().collect();
            assert!(small.is_subset(&large));
            assert_eq!(g.elements(2).unwrap(), g.elements(2).unwrap());
        }
    }

    fn zn_value(rank: usize) -> impl Strategy<Value = Value> {
        prop::collection::vec(-50i64..50, rank).prop_map(Value::vector)
    }

    fn lex_value() -> impl Strategy<Value = Value> {
        (-5i64..5, -50i64..50).prop_map(|(h, t)| Value::lex(h, Value::int(t)))
    }

    fn check_parts(g: &LGroup, x: &Value) -> std::result::Result<(), TestCaseError> {
        let (p, n) = (g.pos_part(x).unwrap(), g.neg_part(x).unwrap());
        prop_assert_eq!(g.sub(&p, &n).unwrap(), x.clone());
        prop_assert_eq!(g.inf(&p, &n).unwrap(), g.zero());
        Ok(())
    }

    proptest! {
        #[test]
        fn parts_decompose_pointwise(x in zn_value(3)) {
            check_parts(&LGroup::Zn(3), &x)?;
        }

        #[test]
        fn parts_decompose_lex(x in lex_value()) {
            check_parts(&lex_zz(), &x)?;
        }

        #[test]
        fn canon_pair_is_idempotent_and_sound(a in zn_value(2), b in zn_value(2)) {
            let m = Monoid::naturals(2);
            let g = LGroup::Zn(2);
            let (x, y) = (g.pos_part(&a).unwrap(), g.pos_part(&b).unwrap());
            let (u, v) = canon_pair(&m, &x, &y).unwrap();
            prop_assert_eq!(m.inf(&u, &v).unwrap(), m.zero());
            prop_assert_eq!(canon_pair(&m, &u, &v).unwrap(), (u.clone(), v.clone()));
            prop_assert_eq!(m.add(&x, &v).unwrap(), m.add(&y, &u).unwrap());
        }
    }
}
