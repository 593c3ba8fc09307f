use crate::lang::{Atom, Interpretation, Program, Rule};
use crate::par::Execution;

/// The atoms on which `atom` depends positively (`plus`) and negatively
/// (`minus`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencyProfile {
    pub atom: Atom,
    pub plus: Interpretation,
    pub minus: Interpretation,
}

impl DependencyProfile {
    pub fn both(&self) -> Interpretation {
        self.plus.intersection(&self.minus)
    }
}

/// Rules grouped by head atom index.
pub(crate) fn rules_by_head(program: &Program) -> Vec<Vec<&Rule>> {
    let mut index = vec![Vec::new(); program.symbols().len()];
    for r in program.rules() {
        index[r.head.index()].push(r);
    }
    index
}

/// Least `plus`/`minus` sets closed under signed propagation: from an atom
/// reached with sign `s`, each rule for it passes `s` to its positive
/// subgoals and the opposite sign to its negated ones.
pub fn dependency_profile(program: &Program, atom: Atom) -> DependencyProfile {
    profile_with_index(&rules_by_head(program), atom)
}

/// Profiles of every atom of `atoms(P)`, in id order.
pub fn dependency_profiles(program: &Program, execution: Execution) -> Vec<DependencyProfile> {
    let index = rules_by_head(program);
    let atoms: Vec<Atom> = program.atoms().into_iter().collect();
    execution.map_slice(&atoms, |&a| profile_with_index(&index, a))
}

pub(crate) fn profile_with_index(index: &[Vec<&Rule>], atom: Atom) -> DependencyProfile {
    let mut plus = Interpretation::new();
    let mut minus = Interpretation::new();
    plus.insert(atom);
    let mut work = vec![(atom, true)];
    while let Some((b, positive)) = work.pop() {
        for r in index.get(b.index()).into_iter().flatten() {
            let (same, flip) = if positive {
                (&mut plus, &mut minus)
            } else {
                (&mut minus, &mut plus)
            };
            for &p in &r.pos {
                if same.insert(p) {
                    work.push((p, positive));
                }
            }
            for &n in &r.neg {
                if flip.insert(n) {
                    work.push((n, !positive));
                }
            }
        }
    }
    DependencyProfile { atom, plus, minus }
}
