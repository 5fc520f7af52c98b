//! Exact computation with MV-algebras, lattice-ordered abelian groups and the
//! functors between them, plus a bounded model checker for coherent sequents.

pub mod cli;
pub mod decompose;
pub mod descriptor;
pub mod equivalence;
pub mod error;
pub mod int;
pub mod lgroup;
pub mod model;
pub mod mv;
pub mod sequent;
pub mod syntax;
pub mod value;

pub use descriptor::{parse_element, parse_elements, parse_group, parse_monoid, parse_mv, parse_structure};
pub use error::{Error, Result};
pub use int::Integer;
pub use lgroup::{canon_pair, grothendieck_group, positive_cone, strong_unit_check, LGroup, Monoid, Verdict};
pub use model::{Model, ModelHandle, ModelKind, Structure};
pub use mv::{AxiomFailure, MvAlgebra, Order};
pub use value::Value;

/// Default cap on the number of enumerated carrier elements.
pub const DEFAULT_CARRIER_CAP: usize = 1_000_000;

/// The carrier cap, overridable through `MVTOOL_MAX_CARRIER`.
pub fn carrier_cap() -> usize {
    std::env::var("MVTOOL_MAX_CARRIER")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CARRIER_CAP)
}

pub(crate) fn check_size(size: u128) -> Result<()> {
    let cap = carrier_cap();
    if size > cap as u128 {
        Err(Error::CarrierTooLarge { size, cap })
    } else {
        Ok(())
    }
}

/// Cartesian product in lexicographic order, first factor slowest.
pub(crate) fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::with_capacity(lists.len())];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for item in list {
                let mut v = prefix.clone();
                v.push(item.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}
