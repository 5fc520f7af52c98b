//! Every named sequent, with where it comes from and which models it is
//! meant to hold in.

use std::fmt;

use super::ast::Sequent;
use super::parser::parse_sequent;
use crate::descriptor::{parse_element, parse_structure};
use crate::error::{Error, Result};
use crate::model::ModelHandle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    /// MV-algebras.
    Mv,
    /// The variety generated by Chang's algebra.
    Chang,
    /// Perfect MV-algebras.
    Perfect,
    /// Lattice-ordered abelian groups.
    L,
    /// l-groups with strong unit.
    Lu,
    /// Cancellative subtractive lattice-ordered abelian monoids with bottom.
    M,
    /// Perfect MV-algebras with a radical generator.
    PointedPerfect,
    /// Antiarchimedean unital l-groups.
    Ant,
    /// Unital l-groups corresponding to Chang's variety.
    A,
}

impl Theory {
    pub const ALL: [Theory; 9] = [
        Theory::Mv,
        Theory::Chang,
        Theory::Perfect,
        Theory::L,
        Theory::Lu,
        Theory::M,
        Theory::PointedPerfect,
        Theory::Ant,
        Theory::A,
    ];

    /// Descriptors (and distinguished elements) of the models every entry
    /// of this theory is checked in.
    pub fn model_descriptors(self) -> &'static [(&'static str, Option<&'static str>)] {
        match self {
            Theory::Mv => {
                &[("C", None), ("B", None), ("Prod(C,C)", None), ("Gamma(Z,2)", None), ("Sigma(Z^2)", None)]
            }
            Theory::Chang => &[("C", None), ("B", None), ("Prod(C,C)", None), ("Sigma(Z^2)", None)],
            Theory::Perfect => &[("C", None), ("Sigma(Z^2)", None)],
            Theory::L => &[("Z", None), ("Z^2", None), ("Lex(Z,Z)", None), ("Delta(C)", None)],
            Theory::Lu => &[("Z", Some("1")), ("Z^2", Some("(1,1)")), ("Lex(Z,Z)", Some("(1,0)"))],
            Theory::M => &[("N", None), ("N^2", None), ("PosCone(Lex(Z,Z))", None), ("Rad(C)", None)],
            Theory::PointedPerfect => &[("C", Some("c")), ("Sigma(Z^2)", Some("Rad((1,1))"))],
            Theory::Ant => &[("Lex(Z,Z)", Some("(1,0)")), ("Z", Some("1"))],
            Theory::A => &[("Lex(Z,Z)", Some("(1,0)")), ("Z", Some("1")), ("Z^2", Some("(1,1)"))],
        }
    }

    pub fn models(self) -> Result<Vec<ModelHandle>> {
        self.model_descriptors()
            .iter()
            .map(|(desc, unit)| {
                let s = parse_structure(desc)?;
                Ok(match unit {
                    Some(u) => ModelHandle::with_unit(s.clone(), parse_element(&s, u)?),
                    None => ModelHandle::new(s),
                })
            })
            .collect()
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::Mv => "MV",
            Theory::Chang => "Chang",
            Theory::Perfect => "P",
            Theory::L => "L",
            Theory::Lu => "Lu",
            Theory::M => "M",
            Theory::PointedPerfect => "P*",
            Theory::Ant => "Ant",
            Theory::A => "A",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Axiom,
    /// A consequence, validated semantically on the theory's models.
    Provable,
}

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub label: &'static str,
    pub location: &'static str,
    pub source: &'static str,
    pub theory: Theory,
    pub status: Status,
}

impl Entry {
    pub fn sequent(&self) -> Sequent {
        parse_sequent(self.source)
            .unwrap_or_else(|e| panic!("registry entry {} does not parse: {e}", self.label))
            .with_name(self.label)
    }
}

/// Pairs of sequent families that are interderivable over the MV axioms.
pub const EQUIVALENT_FAMILIES: &[(&[&str], &[&str])] = &[(&["P.1", "P.2", "P.3"], &["P.1", "beta"])];

const fn e(
    label: &'static str,
    location: &'static str,
    source: &'static str,
    theory: Theory,
    status: Status,
) -> Entry {
    Entry { label, location, source, theory, status }
}

use Status::{Axiom, Provable};
use Theory::*;

const MV_AX: &str = "MV-algebra axioms";
const PERFECT_AX: &str = "axioms of perfect MV-algebras";
const L_AX: &str = "l-group axioms";
const M_AX: &str = "axioms of cancellative subtractive l-monoids with bottom";
const RAD: &str = "lemma on the radical as an ideal of a perfect algebra";
const GAMMA: &str = "lemma bounding the order of elements in Chang's variety";
const CHI: &str = "sequents provable in every MV-algebra, used for the order lemma";
const RAD_MULT: &str = "radical closed under multiples: x <= neg x entails n*x <= neg x, checked for small n";

static ENTRIES: &[Entry] = &[
    e("MV.1", MV_AX, "true |-[x,y,z] x (+) (y (+) z) = (x (+) y) (+) z", Mv, Axiom),
    e("MV.2", MV_AX, "true |-[x,y] x (+) y = y (+) x", Mv, Axiom),
    e("MV.3", MV_AX, "true |-[x] x (+) 0 = x", Mv, Axiom),
    e("MV.4", MV_AX, "true |-[x] neg (neg x) = x", Mv, Axiom),
    e("MV.5", MV_AX, "true |-[x] x (+) neg 0 = neg 0", Mv, Axiom),
    e("MV.6", MV_AX, "true |-[x,y] neg (neg x (+) y) (+) y = neg (neg y (+) x) (+) x", Mv, Axiom),
    e("xi", "axiom of Chang's variety: 2x^2 = (2x)^2", "true |-[x] 2*x^2 = (2*x)^2", Chang, Axiom),
    e("P.1", PERFECT_AX, "true |-[x] x^2 (+) x^2 = (x (+) x)^2", Perfect, Axiom),
    e(
        "P.2",
        "axioms of perfect MV-algebras; also an axiom of Chang's variety (2x^2 is Boolean)",
        "true |-[x] 2*(2*x)^2 = (2*x)^2",
        Perfect,
        Axiom,
    ),
    e("P.3", PERFECT_AX, "x (+) x = x |-[x] x = 0 \\/ x = 1", Perfect, Axiom),
    e("P.4", PERFECT_AX, "x = neg x |-[x] false", Perfect, Axiom),
    e(
        "P.3'",
        "variant of P.3 used for the covering topology of perfect algebras",
        "inf(x, neg x) = 0 |-[x] x = 0 \\/ x = 1",
        Perfect,
        Provable,
    ),
    e(
        "beta",
        "theorem: {P.1, P.2, P.3} is equivalent to {P.1, beta}",
        "true |-[x] x <= neg x \\/ neg x <= x",
        Perfect,
        Provable,
    ),
    e(
        "sigma",
        "classical characterisation of perfect algebras (with non-triviality)",
        "true |-[x] x^2 (+) x^2 = (x (+) x)^2",
        Perfect,
        Provable,
    ),
    e(
        "tau",
        "classical characterisation of perfect algebras (with non-triviality)",
        "x^2 = x |-[x] x = 0 \\/ x = 1",
        Perfect,
        Provable,
    ),
    e(
        "alpha",
        "lemma: non-triviality entails alpha in Chang's variety",
        "x = neg x |-[x] false",
        Chang,
        Provable,
    ),
    e("gamma_1", GAMMA, "2*x = 1 |-[x] 2*x = 1", Chang, Provable),
    e("gamma_2", GAMMA, "4*x = 1 |-[x] 2*x = 1", Chang, Provable),
    e("gamma_3", GAMMA, "8*x = 1 |-[x] 2*x = 1", Chang, Provable),
    e("gamma_4", GAMMA, "16*x = 1 |-[x] 2*x = 1", Chang, Provable),
    e("gamma_5", GAMMA, "32*x = 1 |-[x] 2*x = 1", Chang, Provable),
    e("chi_1", CHI, "1*x^2 = 1 |-[x] 2*x = 1", Mv, Provable),
    e("chi_2", CHI, "2*x^2 = 1 |-[x] 2*x = 1", Mv, Provable),
    e("chi_3", CHI, "3*x^2 = 1 |-[x] 2*x = 1", Mv, Provable),
    e("chi_4", CHI, "4*x^2 = 1 |-[x] 2*x = 1", Mv, Provable),
    e("chi_5", CHI, "5*x^2 = 1 |-[x] 2*x = 1", Mv, Provable),
    e("chi_6", CHI, "6*x^2 = 1 |-[x] 2*x = 1", Mv, Provable),
    e("chi_7", CHI, "7*x^2 = 1 |-[x] 2*x = 1", Mv, Provable),
    e("chi_8", CHI, "8*x^2 = 1 |-[x] 2*x = 1", Mv, Provable),
    e("rad_ideal.i", RAD, "x <= neg x /\\ y <= x |-[x,y] y <= neg y", Perfect, Provable),
    e("rad_ideal.ii", RAD, "neg z <= z |-[z] neg z^2 <= z^2", Perfect, Provable),
    e("rad_ideal.iii", RAD, "z <= neg z |-[z] 2*z <= neg 2*z", Perfect, Provable),
    e("rad_ideal.iv", RAD, "z^2 <= neg z^2 |-[z] z <= neg z", Perfect, Provable),
    e("rad_ideal.v", RAD, "x <= neg x /\\ y <= neg y |-[x,y] sup(x, y) <= neg sup(x, y)", Perfect, Provable),
    e("rad_ideal.vi", RAD, "x <= neg x /\\ y <= neg y |-[x,y] inf(x, y) <= neg inf(x, y)", Perfect, Provable),
    e("rad_ideal.vii", RAD, "x <= neg x /\\ y <= neg y |-[x,y] x (+) y <= neg (x (+) y)", Perfect, Provable),
    e("rad_ideal.viii", RAD, "neg x <= x /\\ neg y <= y |-[x,y] x (+) y = 1", Perfect, Provable),
    e("rad_ideal.ix", RAD, "x <= neg x /\\ neg y <= y |-[x,y] x <= y", Perfect, Provable),
    e("rad_mult_1", RAD_MULT, "x <= neg x |-[x] 1*x <= neg x", Perfect, Provable),
    e("rad_mult_2", RAD_MULT, "x <= neg x |-[x] 2*x <= neg x", Perfect, Provable),
    e("rad_mult_3", RAD_MULT, "x <= neg x |-[x] 3*x <= neg x", Perfect, Provable),
    e("rad_mult_4", RAD_MULT, "x <= neg x |-[x] 4*x <= neg x", Perfect, Provable),
    e("rad_mult_5", RAD_MULT, "x <= neg x |-[x] 5*x <= neg x", Perfect, Provable),
    e("rad_mult_6", RAD_MULT, "x <= neg x |-[x] 6*x <= neg x", Perfect, Provable),
    e("rad_mult_7", RAD_MULT, "x <= neg x |-[x] 7*x <= neg x", Perfect, Provable),
    e("rad_mult_8", RAD_MULT, "x <= neg x |-[x] 8*x <= neg x", Perfect, Provable),
    e("rad_mult_9", RAD_MULT, "x <= neg x |-[x] 9*x <= neg x", Perfect, Provable),
    e("rad_mult_10", RAD_MULT, "x <= neg x |-[x] 10*x <= neg x", Perfect, Provable),
    e("L.1", L_AX, "true |-[x,y,z] x + (y + z) = (x + y) + z", L, Axiom),
    e("L.2", L_AX, "true |-[x] x + 0 = x", L, Axiom),
    e("L.3", L_AX, "true |-[x] x + -x = 0", L, Axiom),
    e("L.4", L_AX, "true |-[x,y] x + y = y + x", L, Axiom),
    e("L.5", L_AX, "true |-[x] x <= x", L, Axiom),
    e("L.6", L_AX, "x <= y /\\ y <= x |-[x,y] x = y", L, Axiom),
    e("L.7", L_AX, "x <= y /\\ y <= z |-[x,y,z] x <= z", L, Axiom),
    e("L.8", L_AX, "true |-[x,y] inf(x, y) <= x /\\ inf(x, y) <= y", L, Axiom),
    e("L.9", L_AX, "z <= x /\\ z <= y |-[x,y,z] z <= inf(x, y)", L, Axiom),
    e("L.10", L_AX, "true |-[x,y] x <= sup(x, y) /\\ y <= sup(x, y)", L, Axiom),
    e("L.11", L_AX, "x <= z /\\ y <= z |-[x,y,z] sup(x, y) <= z", L, Axiom),
    e("L.12", L_AX, "x <= y |-[x,y,t] t + x <= t + y", L, Axiom),
    e(
        "phi_sup",
        "identity showing that phi_G preserves sup",
        "true |-[g1,g2] sup(sup(g1, g2), 0) + inf(sup(g1, 0) + sup(g2, 0) - g2, \
         sup(g2, 0) + sup(g1, 0) - g1) = sup(g1, 0) + sup(g2, 0) + sup(sup(g1, g2), 0) - sup(g1, g2)",
        L,
        Provable,
    ),
    e("Lu.1", "strong unit axioms", "true |-[] u >= 0", Lu, Axiom),
    e(
        "Lu.2",
        "strong unit axioms (disjunction over n capped at 64)",
        "x >= 0 |-[x] bigvee n<=64 . x <= n*u",
        Lu,
        Axiom,
    ),
    e("M.1", M_AX, "true |-[x,y,z] x + (y + z) = (x + y) + z", M, Axiom),
    e("M.2", M_AX, "true |-[x] x + 0 = x", M, Axiom),
    e("M.3", M_AX, "true |-[x,y] x + y = y + x", M, Axiom),
    e("M.4", M_AX, "true |-[x] x <= x", M, Axiom),
    e("M.5", M_AX, "x <= y /\\ y <= x |-[x,y] x = y", M, Axiom),
    e("M.6", M_AX, "x <= y /\\ y <= z |-[x,y,z] x <= z", M, Axiom),
    e("M.7", M_AX, "true |-[x,y] inf(x, y) <= x /\\ inf(x, y) <= y", M, Axiom),
    e("M.8", M_AX, "z <= x /\\ z <= y |-[x,y,z] z <= inf(x, y)", M, Axiom),
    e("M.9", M_AX, "true |-[x,y] x <= sup(x, y) /\\ y <= sup(x, y)", M, Axiom),
    e("M.10", M_AX, "x <= z /\\ y <= z |-[x,y,z] sup(x, y) <= z", M, Axiom),
    e("M.11", M_AX, "x <= y |-[x,y,t] t + x <= t + y", M, Axiom),
    e("M.12", M_AX, "x + y = x + z |-[x,y,z] y = z", M, Axiom),
    e("M.13", M_AX, "true |-[x] 0 <= x", M, Axiom),
    e("M.14", M_AX, "x <= y |-[x,y] exists z. x + z = y", M, Axiom),
    e("C", "cancellation in the radical monoid", "x + a = y + a |-[x,y,a] x = y", M, Provable),
    e("M.cancel_order", "order cancellation, provable in M", "x + z <= y + z |-[x,y,z] x <= y", M, Provable),
    e(
        "M.inf_translate",
        "translation invariance of inf, provable in M",
        "true |-[a,b,c] inf(a, b) + c = inf(a + c, b + c)",
        M,
        Provable,
    ),
    e("P*.1", "axioms of pointed perfect MV-algebras", "true |-[] a <= neg a", PointedPerfect, Axiom),
    e(
        "P*.2",
        "axioms of pointed perfect MV-algebras (disjunction over n capped at 64)",
        "x <= neg x |-[x] bigvee n<=64 . x <= n*a",
        PointedPerfect,
        Axiom,
    ),
    e(
        "Ant.1",
        "antiarchimedean unital l-groups",
        "0 <= x /\\ x <= u |-[x] sup(0, 2*inf(2*x, u) - u) = inf(u, 2*sup(2*x - u, 0))",
        Ant,
        Axiom,
    ),
    e(
        "Ant.2",
        "antiarchimedean unital l-groups",
        "0 <= x /\\ x <= u /\\ inf(2*x, u) = x |-[x] x = 0 \\/ x = u",
        Ant,
        Axiom,
    ),
    e(
        "A.1",
        "unital l-groups whose unit interval lies in Chang's variety",
        "0 <= x /\\ x <= u |-[x] sup(0, 2*inf(2*x, u) - u) = inf(u, 2*sup(2*x - u, 0))",
        A,
        Axiom,
    ),
    e(
        "A.2",
        "unital l-groups whose unit interval lies in Chang's variety",
        "0 <= x /\\ x <= u |-[x] inf(u, 2*sup(0, 2*inf(2*x, u) - u)) = sup(0, 2*inf(2*x, u) - u)",
        A,
        Axiom,
    ),
];

pub fn entries() -> &'static [Entry] {
    ENTRIES
}

pub fn entry(label: &str) -> Result<&'static Entry> {
    ENTRIES.iter().find(|e| e.label == label).ok_or_else(|| Error::NotFound(label.to_string()))
}

pub fn lookup(label: &str) -> Result<Sequent> {
    entry(label).map(Entry::sequent)
}

/// All registry sequents, in registry order.
pub fn named_sequents() -> Vec<Sequent> {
    ENTRIES.iter().map(Entry::sequent).collect()
}

/// Entries whose home is `theory` with the given status.
pub fn of_theory(theory: Theory, status: Status) -> impl Iterator<Item = &'static Entry> {
    ENTRIES.iter().filter(move |e| e.theory == theory && e.status == status)
}
