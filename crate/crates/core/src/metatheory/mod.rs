//! Executable metatheory: one checker per theorem, a seeded program
//! generator, and a fuzz driver that shrinks counterexamples.

mod checks;
mod fuzz;
mod generate;
mod verdict;

pub use checks::{
    check, check_cautious_monotonicity, check_component_subset, check_cumulativity, check_cut,
    check_dung, check_fages, check_schlipf, check_signing_lemma, check_splitting_theorem,
    default_sequence, outcome,
};
pub use fuzz::{fuzz, shrink, trial_seed};
pub use generate::{generate, GeneratorConfig, Mode};
pub use verdict::{describe_witness, Counterexample, Outcome, Property, Verdict, Witness};
