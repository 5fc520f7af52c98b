//! Quotients by Boolean elements and the splitting of an algebra of Chang's
//! variety into a finite product of perfect algebras.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lgroup::Verdict;
use crate::mv::{interval_quotient, MvAlgebra};
use crate::value::Value;

/// How one factor of a product survives a quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Part {
    Keep,
    Drop,
    Sub(Box<BooleanQuotient>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Shape {
    Identity,
    Trivial,
    /// `[0, neg k]` inside the base algebra.
    Interval,
    /// Per-factor projection of a product.
    Product(Vec<Part>),
}

/// `A/(k)` for a Boolean `k`, together with the canonical projection and a
/// section of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanQuotient {
    pub base: MvAlgebra,
    pub kernel: Value,
    pub algebra: MvAlgebra,
    shape: Shape,
}

fn tuple_items(x: &Value) -> Result<&[Value]> {
    match x {
        Value::Tuple(items) => Ok(items),
        other => Err(Error::CarrierMismatch(format!("{other} is not a tuple"))),
    }
}

/// `A/(k)`. On products this is a projection: factors where `k` is `1`
/// vanish, factors where `k` is `0` survive whole, and the rest recurse. A
/// single surviving factor is returned unwrapped. Elsewhere the quotient is
/// the interval `[0, neg k]`.
pub fn quotient_by_boolean(a: &MvAlgebra, k: &Value) -> Result<BooleanQuotient> {
    if !a.contains(k) {
        return Err(Error::CarrierMismatch(format!("{k} is not an element of {a}")));
    }
    if !a.is_boolean(k)? {
        return Err(Error::InvalidArgument(format!("{k} is not Boolean in {a}")));
    }
    let make = |algebra, shape| BooleanQuotient { base: a.clone(), kernel: k.clone(), algebra, shape };
    if *k == a.zero() {
        return Ok(make(a.clone(), Shape::Identity));
    }
    if *k == a.one() {
        return Ok(make(MvAlgebra::trivial(), Shape::Trivial));
    }
    match a {
        MvAlgebra::Product(factors) => {
            let mut parts = Vec::with_capacity(factors.len());
            let mut kept = Vec::new();
            for (f, ki) in factors.iter().zip(tuple_items(k)?) {
                let q = quotient_by_boolean(f, ki)?;
                let part = match q.shape {
                    Shape::Identity => Part::Keep,
                    Shape::Trivial => Part::Drop,
                    _ => Part::Sub(Box::new(q.clone())),
                };
                if part != Part::Drop {
                    kept.push(q.algebra);
                }
                parts.push(part);
            }
            let algebra = if kept.len() == 1 { kept.pop().unwrap() } else { MvAlgebra::Product(kept) };
            Ok(make(algebra, Shape::Product(parts)))
        }
        _ => Ok(make(interval_quotient(a, k)?, Shape::Interval)),
    }
}

impl BooleanQuotient {
    fn single(&self) -> bool {
        matches!(&self.shape, Shape::Product(parts) if parts.iter().filter(|p| **p != Part::Drop).count() == 1)
    }

    /// The class of `x` in `A/(k)`.
    pub fn project(&self, x: &Value) -> Result<Value> {
        match &self.shape {
            Shape::Identity => Ok(x.clone()),
            Shape::Trivial => Ok(self.algebra.zero()),
            Shape::Interval => self.base.inf(x, &self.base.neg(&self.kernel)?),
            Shape::Product(parts) => {
                let mut out = Vec::new();
                for (p, xi) in parts.iter().zip(tuple_items(x)?) {
                    match p {
                        Part::Keep => out.push(xi.clone()),
                        Part::Drop => {}
                        Part::Sub(q) => out.push(q.project(xi)?),
                    }
                }
                if self.single() {
                    Ok(out.pop().unwrap())
                } else {
                    Ok(Value::Tuple(out))
                }
            }
        }
    }

    /// The representative of `y` below `neg k` in `A`.
    pub fn lift(&self, y: &Value) -> Result<Value> {
        match &self.shape {
            Shape::Identity | Shape::Interval => Ok(y.clone()),
            Shape::Trivial => Ok(self.base.zero()),
            Shape::Product(parts) => {
                let factors = match &self.base {
                    MvAlgebra::Product(f) => f,
                    _ => unreachable!("product shape on a non-product"),
                };
                let single = [y.clone()];
                let ys: &[Value] = if self.single() { &single } else { tuple_items(y)? };
                let mut ys = ys.iter();
                let mut out = Vec::with_capacity(parts.len());
                for (p, f) in parts.iter().zip(factors) {
                    if *p == Part::Drop {
                        out.push(f.zero());
                        continue;
                    }
                    let yi = ys
                        .next()
                        .ok_or_else(|| Error::CarrierMismatch(format!("{y} has the wrong arity")))?;
                    out.push(match p {
                        Part::Sub(q) => q.lift(yi)?,
                        _ => yi.clone(),
                    });
                }
                Ok(Value::Tuple(out))
            }
        }
    }
}

/// The nonzero meets `u_1 /\ ... /\ u_n`, each `u_i` either `(2 x_i)^2` or its
/// complement. Meets are listed by sign mask in ascending order, the first
/// generator as the most significant bit and a set bit meaning complement.
pub fn atoms_from_generators(a: &MvAlgebra, gens: &[Value]) -> Result<Vec<Value>> {
    if gens.len() > 20 {
        return Err(Error::InvalidArgument("at most 20 generators".into()));
    }
    let bs = a.boolean_skeleton_generators(gens)?;
    let n = bs.len();
    let zero = a.zero();
    let mut atoms: Vec<Value> = Vec::new();
    for mask in 0u32..(1 << n) {
        let mut meet = a.one();
        for (i, b) in bs.iter().enumerate() {
            let u = if mask >> (n - 1 - i) & 1 == 1 { a.neg(b)? } else { b.clone() };
            meet = a.inf(&meet, &u)?;
        }
        if meet != zero && !atoms.contains(&meet) {
            atoms.push(meet);
        }
    }
    Ok(atoms)
}

/// `A` as the product of `A/(neg a_i)` over pairwise disjoint Boolean atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomDecomposition {
    pub algebra: MvAlgebra,
    pub atoms: Vec<Value>,
    pub factors: Vec<BooleanQuotient>,
}

impl AtomDecomposition {
    pub fn from_atoms(a: &MvAlgebra, atoms: Vec<Value>) -> Result<Self> {
        let factors =
            atoms.iter().map(|at| quotient_by_boolean(a, &a.neg(at)?)).collect::<Result<Vec<_>>>()?;
        Ok(AtomDecomposition { algebra: a.clone(), atoms, factors })
    }

    /// The product of the factor algebras.
    pub fn product(&self) -> MvAlgebra {
        MvAlgebra::Product(self.factors.iter().map(|q| q.algebra.clone()).collect())
    }

    /// `b -> (b /\ a_i)_i`, each component read in its factor.
    pub fn forward(&self, b: &Value) -> Result<Value> {
        Ok(Value::Tuple(self.factors.iter().map(|q| q.project(b)).collect::<Result<_>>()?))
    }

    /// `(z_i)_i -> sup_i z_i`.
    pub fn backward(&self, z: &Value) -> Result<Value> {
        let zs = tuple_items(z)?;
        if zs.len() != self.factors.len() {
            return Err(Error::CarrierMismatch(format!("{z} has the wrong arity")));
        }
        let mut acc = self.algebra.zero();
        for (q, zi) in self.factors.iter().zip(zs) {
            acc = self.algebra.sup(&acc, &q.lift(zi)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for AtomDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.algebra)?;
        for (i, q) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{}", q.algebra)?;
        }
        Ok(())
    }
}

/// Splits `a` along the atoms of its generators without checking the factors.
pub fn decompose_product_unchecked(a: &MvAlgebra, gens: &[Value]) -> Result<AtomDecomposition> {
    AtomDecomposition::from_atoms(a, atoms_from_generators(a, gens)?)
}

/// Splits `a` along the atoms of its generators and checks every factor is
/// perfect at `bound`.
pub fn decompose_product(a: &MvAlgebra, gens: &[Value], bound: u64) -> Result<AtomDecomposition> {
    if a.is_trivial() {
        return Err(Error::InvalidArgument("the trivial algebra has no perfect factors".into()));
    }
    let d = decompose_product_unchecked(a, gens)?;
    for (i, q) in d.factors.iter().enumerate() {
        if let Verdict::CounterExample(f) = q.algebra.check_perfect(bound)? {
            return Err(Error::DecompositionFailure {
                factor: i,
                detail: format!("{} fails {} at {}", q.algebra, f.axiom, f.x),
            });
        }
    }
    Ok(d)
}

/// A Boolean `a` such that `A/(neg a)` is perfect, tested elementwise: for
/// every `x` with `x /\ neg x /\ a = 0`, exactly one of `x /\ a = 0` and
/// `a <= x` holds.
pub fn is_perfect_element(a: &MvAlgebra, e: &Value, bound: u64) -> Result<bool> {
    if !a.is_boolean(e)? {
        return Ok(false);
    }
    let zero = a.zero();
    for x in a.elements(bound)? {
        let meet = a.inf(&x, e)?;
        if a.inf(&a.inf(&x, &a.neg(&x)?)?, e)? != zero {
            continue;
        }
        if (meet == zero) == a.leq(e, &x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A homomorphism out of the algebra, as a closure.
pub type Projection<'a> = &'a dyn Fn(&Value) -> Result<Value>;

/// Joint injectivity of `projections` on `A.elements(bound)`: the first pair
/// of distinct elements with equal images, if any.
pub fn weak_subdirect_check(
    a: &MvAlgebra,
    projections: &[Projection<'_>],
    bound: u64,
) -> Result<Verdict<(Value, Value)>> {
    let mut seen: HashMap<Vec<Value>, Value> = HashMap::new();
    for x in a.elements(bound)? {
        let images = projections.iter().map(|p| p(&x)).collect::<Result<Vec<_>>>()?;
        if let Some(first) = seen.get(&images) {
            return Ok(Verdict::CounterExample((first.clone(), x)));
        }
        seen.insert(images, x);
    }
    Ok(Verdict::Holds)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionFailure {
    pub check: &'static str,
    pub element: Value,
}

/// Atom sanity (Boolean, disjoint, joining to `1`), then on every element
/// up to `bound`: `backward(forward(b)) = b`, and `forward` preserves `(+)`
/// and `neg`.
pub fn product_reconstruction_check(
    d: &AtomDecomposition,
    bound: u64,
) -> Result<Verdict<ReconstructionFailure>> {
    let a = &d.algebra;
    let fail = |check, element: &Value| {
        Ok(Verdict::CounterExample(ReconstructionFailure { check, element: element.clone() }))
    };
    let mut join = a.zero();
    for (i, at) in d.atoms.iter().enumerate() {
        if !a.is_boolean(at)? {
            return fail("atom is Boolean", at);
        }
        for other in &d.atoms[i + 1..] {
            if a.inf(at, other)? != a.zero() {
                return fail("atoms are disjoint", other);
            }
        }
        join = a.sup(&join, at)?;
    }
    if join != a.one() {
        return fail("atoms join to 1", &join);
    }
    let prod = d.product();
    let elements = a.elements(bound)?;
    let images = elements.iter().map(|x| d.forward(x)).collect::<Result<Vec<_>>>()?;
    for (x, fx) in elements.iter().zip(&images) {
        if d.backward(fx)? != *x {
            return fail("backward after forward", x);
        }
        if d.forward(&a.neg(x)?)? != prod.neg(fx)? {
            return fail("forward preserves neg", x);
        }
    }
    for (x, fx) in elements.iter().zip(&images) {
        for (y, fy) in elements.iter().zip(&images) {
            if d.forward(&a.oplus(x, y)?)? != prod.oplus(fx, fy)? {
                return fail("forward preserves (+)", &Value::tuple(vec![x.clone(), y.clone()]));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// For Boolean `e`, `x -> (x mod (e), x mod (neg e))` is an isomorphism
/// onto `A/(e) x A/(neg e)`: injective and a homomorphism on
/// `A.elements(bound)`, and onto every pair of enumerated classes. The
/// witness is `(e, offending element)`.
pub fn pushout_pullback_check(a: &MvAlgebra, e: &Value, bound: u64) -> Result<Verdict<(Value, Value)>> {
    let q1 = quotient_by_boolean(a, e)?;
    let q2 = quotient_by_boolean(a, &a.neg(e)?)?;
    let prod = MvAlgebra::Product(vec![q1.algebra.clone(), q2.algebra.clone()]);
    let map = |x: &Value| -> Result<Value> { Ok(Value::tuple(vec![q1.project(x)?, q2.project(x)?])) };
    let fail = |x: &Value| Ok(Verdict::CounterExample((e.clone(), x.clone())));
    let elements = a.elements(bound)?;
    let mut seen: HashMap<Value, Value> = HashMap::new();
    let images = elements.iter().map(map).collect::<Result<Vec<_>>>()?;
    for (x, fx) in elements.iter().zip(&images) {
        if seen.insert(fx.clone(), x.clone()).is_some() {
            return fail(x);
        }
        if map(&a.neg(x)?)? != prod.neg(fx)? {
            return fail(x);
        }
    }
    for (x, fx) in elements.iter().zip(&images) {
        for (y, fy) in elements.iter().zip(&images) {
            if map(&a.oplus(x, y)?)? != prod.oplus(fx, fy)? {
                return fail(&Value::tuple(vec![x.clone(), y.clone()]));
            }
        }
    }
    for y in q1.algebra.elements(bound)? {
        for z in q2.algebra.elements(bound)? {
            let x = a.sup(&q1.lift(&y)?, &q2.lift(&z)?)?;
            if map(&x)? != Value::tuple(vec![y.clone(), z]) {
                return fail(&x);
            }
        }
    }
    Ok(Verdict::Holds)
}

/// [`pushout_pullback_check`] for every Boolean element up to `bound`.
pub fn pushout_pullback_all(a: &MvAlgebra, bound: u64) -> Result<Verdict<(Value, Value)>> {
    for e in a.elements(bound)? {
        if a.is_boolean(&e)? {
            let v = pushout_pullback_check(a, &e, bound)?;
            if !v.holds() {
                return Ok(v);
            }
        }
    }
    Ok(Verdict::Holds)
}
