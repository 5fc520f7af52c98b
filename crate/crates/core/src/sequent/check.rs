//! Bounded checking of sequents over enumerated environments.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::ast::{Formula, Sequent};
use super::eval::{check_signature, CFormula, Evaluator, Slots, Truth};
use super::registry;
use crate::error::{Error, Result};
use crate::lgroup::Verdict;
use crate::model::Model;
use crate::value::Value;

/// An assignment of carrier elements to the context variables.
pub type Env = Vec<(String, Value)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampling {
    pub seed: u64,
    pub samples: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub bound: u64,
    /// Enumeration bound for `exists` witnesses; `2 * bound` when unset.
    pub witness_bound: Option<u64>,
    /// Check a seeded random sample of environments instead of all of them.
    pub sampling: Option<Sampling>,
}

impl CheckOptions {
    pub fn new(bound: u64) -> Self {
        CheckOptions { bound, witness_bound: None, sampling: None }
    }

    fn witness_bound(&self) -> u64 {
        self.witness_bound.unwrap_or(2 * self.bound)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub model: String,
    pub sequent: String,
    pub bound: u64,
    pub verdict: Verdict<Env>,
    /// Size of the environment space `|carrier|^|context|`.
    pub environments: u128,
    /// Environments examined: all of them, or the sample size.
    pub examined: u64,
    pub caveats: Vec<String>,
}

fn has_exists(f: &Formula) -> bool {
    match f {
        Formula::Exists(..) => true,
        Formula::And(p, q) | Formula::Or(p, q) => has_exists(p) || has_exists(q),
        Formula::BigOr { body, .. } => has_exists(body),
        _ => false,
    }
}

struct Compiled {
    ante: CFormula,
    cons: CFormula,
    width: usize,
    indices: usize,
}

enum Outcome {
    Holds,
    Fails,
    Unknown,
}

pub fn check_sequent(model: &dyn Model, s: &Sequent, opts: &CheckOptions) -> Result<CheckReport> {
    if opts.bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    check_signature(s.signature()?, model.kind(), &model.name())?;
    let elements = model.elements(opts.bound)?;
    let mut caveats = Vec::new();
    let exists = has_exists(&s.antecedent) || has_exists(&s.consequent);
    let wb = opts.witness_bound();
    let (witnesses, witness_complete) = if exists {
        let complete = model.exhaustive(wb);
        if !complete {
            caveats.push(format!("existential witnesses searched up to bound {wb}"));
        }
        (model.elements(wb)?, complete)
    } else {
        (Vec::new(), true)
    };
    if s.has_capped_disjunction() {
        caveats.push("capped disjunctions are refutation-only: a false instance is inconclusive".into());
    }
    let mut slots = Slots::with_context(&s.context);
    let compiled = Compiled {
        ante: slots.formula(&s.antecedent)?,
        cons: slots.formula(&s.consequent)?,
        width: slots.max_values,
        indices: slots.max_indices,
    };
    let eval = Evaluator { model, unit: model.unit(), witnesses: &witnesses, witness_complete };
    if s.uses_unit() && eval.unit.is_none() {
        return Err(Error::SignatureMismatch(format!("{} has no distinguished constant", model.name())));
    }

    let n = elements.len() as u128;
    let k = s.context.len() as u32;
    let environments = n.checked_pow(k).unwrap_or(u128::MAX);
    let decode = |mut i: u128, env: &mut [Value], digits: &mut [usize]| {
        for j in (0..k as usize).rev() {
            digits[j] = (i % n) as usize;
            env[j] = elements[digits[j]].clone();
            i /= n;
        }
    };
    // Moves `env` to the next index in place, touching only changed slots.
    let step = |env: &mut [Value], digits: &mut [usize]| {
        for j in (0..k as usize).rev() {
            digits[j] += 1;
            if digits[j] < elements.len() {
                env[j] = elements[digits[j]].clone();
                return;
            }
            digits[j] = 0;
            env[j] = elements[0].clone();
        }
    };
    let run = |env: &mut Vec<Value>, idx: &mut Vec<u64>| -> Result<Outcome> {
        let a = eval.formula(&compiled.ante, env, idx)?;
        if a == Truth::False {
            return Ok(Outcome::Holds);
        }
        let c = eval.formula(&compiled.cons, env, idx)?;
        Ok(match (a, c) {
            (_, Truth::True) => Outcome::Holds,
            (Truth::True, Truth::False) => Outcome::Fails,
            _ => Outcome::Unknown,
        })
    };

    // Positions are scanned in order; `pick` maps a position to an
    // environment index.
    let (positions, picks): (u64, Option<Vec<u128>>) = match opts.sampling {
        Some(Sampling { seed, samples }) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let picks: Vec<u128> = (0..samples).map(|_| rng.gen_range(0..environments)).collect();
            caveats.push(format!("sampled {samples} of {environments} environments (seed {seed})"));
            (samples, Some(picks))
        }
        None => {
            let total = u64::try_from(environments)
                .map_err(|_| Error::CarrierTooLarge { size: environments, cap: crate::carrier_cap() })?;
            (total, None)
        }
    };
    let pick = |p: u64| picks.as_ref().map_or(p as u128, |v| v[p as usize]);

    let first_fail = AtomicU64::new(u64::MAX);
    let first_unknown = AtomicU64::new(u64::MAX);
    let chunk = (positions / (rayon::current_num_threads() as u64 * 16)).clamp(256, 1 << 16);
    let chunks = positions.div_ceil(chunk);
    (0..chunks).into_par_iter().try_for_each(|c| -> Result<()> {
        let mut env = vec![model.zero(); compiled.width];
        let mut idx = vec![0u64; compiled.indices];
        let mut digits = vec![0usize; k as usize];
        let end = ((c + 1) * chunk).min(positions);
        for p in c * chunk..end {
            if p >= first_fail.load(Ordering::Relaxed) {
                break;
            }
            if picks.is_none() && p > c * chunk {
                step(&mut env, &mut digits);
            } else {
                decode(pick(p), &mut env, &mut digits);
            }
            match run(&mut env, &mut idx)? {
                Outcome::Holds => {}
                Outcome::Fails => {
                    first_fail.fetch_min(p, Ordering::Relaxed);
                    break;
                }
                Outcome::Unknown => {
                    first_unknown.fetch_min(p, Ordering::Relaxed);
                }
            }
        }
        Ok(())
    })?;

    let env_at = |p: u64| -> Env {
        let mut env = vec![model.zero(); k as usize];
        decode(pick(p), &mut env, &mut vec![0; k as usize]);
        s.context.iter().cloned().zip(env).collect()
    };
    let verdict = match (first_fail.into_inner(), first_unknown.into_inner()) {
        (p, _) if p != u64::MAX => Verdict::CounterExample(env_at(p)),
        (_, p) if p != u64::MAX => Verdict::Inconclusive(env_at(p)),
        _ => Verdict::Holds,
    };
    Ok(CheckReport {
        model: model.name(),
        sequent: s.name.clone().unwrap_or_else(|| s.to_string()),
        bound: opts.bound,
        verdict,
        environments,
        examined: positions,
        caveats,
    })
}

/// Verdict of a family of sequents: the first counterexample if any member
/// fails, otherwise the first inconclusive member, otherwise holds.
fn family_verdict<'a>(verdicts: impl Iterator<Item = &'a Verdict<Env>>) -> &'static str {
    let mut label = "holds";
    for v in verdicts {
        match v {
            Verdict::CounterExample(_) => return "counterexample",
            Verdict::Inconclusive(_) => label = "inconclusive",
            Verdict::Holds => {}
        }
    }
    label
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyComparison {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub left_verdict: &'static str,
    pub right_verdict: &'static str,
}

impl FamilyComparison {
    pub fn agree(&self) -> bool {
        self.left_verdict == self.right_verdict
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub model: String,
    pub bound: u64,
    pub entries: Vec<CheckReport>,
    pub comparisons: Vec<FamilyComparison>,
}

impl FamilyReport {
    /// `holds` only if every member holds and every equivalent pair agrees.
    pub fn verdict(&self) -> &'static str {
        if self.comparisons.iter().any(|c| !c.agree()) {
            return "counterexample";
        }
        family_verdict(self.entries.iter().map(|e| &e.verdict))
    }
}

/// Checks each registry label in input order. When the labels cover both
/// sides of a registered pair of equivalent families, their verdicts are
/// compared.
pub fn check_family(model: &dyn Model, labels: &[&str], opts: &CheckOptions) -> Result<FamilyReport> {
    let mut entries = Vec::with_capacity(labels.len());
    for label in labels {
        entries.push(check_sequent(model, &registry::lookup(label)?, opts)?);
    }
    let verdict_of = |label: &str| labels.iter().position(|l| *l == label).map(|i| &entries[i].verdict);
    let mut comparisons = Vec::new();
    for (left, right) in registry::EQUIVALENT_FAMILIES {
        let lv: Option<Vec<_>> = left.iter().map(|l| verdict_of(l)).collect();
        let rv: Option<Vec<_>> = right.iter().map(|l| verdict_of(l)).collect();
        if let (Some(lv), Some(rv)) = (lv, rv) {
            comparisons.push(FamilyComparison {
                left: left.iter().map(|s| s.to_string()).collect(),
                right: right.iter().map(|s| s.to_string()).collect(),
                left_verdict: family_verdict(lv.into_iter()),
                right_verdict: family_verdict(rv.into_iter()),
            });
        }
    }
    Ok(FamilyReport { model: model.name(), bound: opts.bound, entries, comparisons })
}
