//! Equations in one variable over the Brandt semigroup `B_n`.
//!
//! - [`element`]: the semigroup itself.
//! - [`term`]: one-variable terms, evaluation and canonical forms.
//! - [`equation`]: solving `f1 = f2`, by brute force and by case analysis.
//! - [`census`]: exact solution-count distributions over all equations.
//! - [`poly`]: integer polynomials in `n` used by the closed-form tables.

pub mod census;
pub mod element;
pub mod equation;
pub mod error;
pub mod formulas;
mod parse;
pub mod poly;
pub mod term;

pub use census::{CensusTable, Mode};
pub use element::{Brandt, Element, Pair};
pub use equation::{count_solutions, Equation, EquationType, SolutionSet};
pub use error::{Error, Result};
pub use term::{canonical_count, CanonicalTerm, Class, Factor, Term};
