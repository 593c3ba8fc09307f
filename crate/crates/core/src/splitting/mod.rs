//! Splitting sets, finite splitting sequences, components and solutions.

mod sequence;
mod solution;

pub use sequence::{
    bottom, build_signed_splitting_sequence, component_sequence, evaluate, is_splitting_set,
    remove_subgoals, top, u_components, SplittingSequence,
};
pub use solution::{assemble, decomposed_answer_sets, enumerate_solutions, is_solution, Solution};
