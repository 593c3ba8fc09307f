//! Static classification of programs: dependency profiles, signings,
//! call-consistency, order-consistency and stratification.

mod dependency;
mod order;
mod signing;
mod strata;

pub use dependency::{dependency_profile, dependency_profiles, DependencyProfile};
pub use order::{
    call_consistency, find_level_mapping, is_call_consistent, LevelMapping, NegativeCycle,
};
pub use signing::{find_signing, is_signing, Signing};
pub use strata::{dependency_components, is_stratified};

use crate::lang::{Atom, Program};
use crate::par::Execution;

/// Every syntactic verdict for one program, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub positive: bool,
    pub signed: Option<Signing>,
    /// `Err` holds the least atom that depends negatively on itself.
    pub call_consistent: Result<(), Atom>,
    pub order_consistent: Result<LevelMapping, NegativeCycle>,
    pub stratified: bool,
}

pub fn classify(program: &Program) -> Classification {
    let profiles = dependency_profiles(program, Execution::default());
    Classification {
        positive: program.is_positive(),
        signed: find_signing(program),
        call_consistent: call_consistency(program),
        order_consistent: order::find_level_mapping_with(&profiles),
        stratified: is_stratified(program),
    }
}
