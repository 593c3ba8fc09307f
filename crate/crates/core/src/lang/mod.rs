//! Programs and their answer-set and well-founded semantics.

mod atom;
mod enumerate;
mod program;
mod semantics;

pub use atom::{is_atom_name, Atom, SymbolTable};
pub use enumerate::{
    consequences, consequences_of, enumerate_answer_sets, Consequences, Limits, DEFAULT_CAP,
};
pub(crate) use program::sorted_names;
pub use program::{Interpretation, Program, Rule};
pub use semantics::{gamma, is_answer_set, least_model, reduct, well_founded};
