//! Answer-set semantics for finite normal logic programs, with static
//! analysis (signings, call- and order-consistency, stratification),
//! splitting sequences, and executable checks of the cumulativity family of
//! metatheorems.
//!
//! ```
//! use lpsem::lang::{enumerate_answer_sets, Limits, Program};
//!
//! let p = Program::parse("a :- not b. b :- not a. c :- a. c :- b.").unwrap();
//! let sets = enumerate_answer_sets(&p, &Limits::default()).unwrap();
//! let names: Vec<_> = sets.iter().map(|x| p.names(x)).collect();
//! assert_eq!(names, [["a", "c"], ["b", "c"]]);
//! ```

pub mod analysis;
pub mod error;
pub mod lang;
pub mod metatheory;
pub mod par;
pub mod splitting;
pub mod text;

pub use error::{Error, Result};
pub use lang::{Atom, Interpretation, Limits, Program, Rule};
