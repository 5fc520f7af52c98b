//! A small language of coherent sequents over the MV, l-group and monoid
//! signatures, and a bounded checker for it.

pub mod ast;
pub mod check;
pub mod eval;
pub mod lexer;
pub mod parser;
pub mod registry;

pub use ast::{Formula, Scalar, Sequent, Signature, Term};
pub use check::{check_family, check_sequent, CheckOptions, CheckReport, Env, FamilyReport, Sampling};
pub use eval::{eval_term, Truth};
pub use parser::{parse_formula, parse_sequent, parse_term};
pub use registry::{lookup, named_sequents, Theory};
