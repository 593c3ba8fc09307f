//! Test-only oracles written straight from the definitions, sharing no code
//! with the library's evaluation paths.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use lpsem::lang::{Atom, Interpretation, Program, Rule, SymbolTable};

pub const DIX: &str = "a :- not b. b :- c, not a. c :- a.";
pub const P1: &str = "a :- not b. b :- not a.";
pub const P2: &str = "a :- not b. b :- not a. c :- a. c :- b.";

pub fn parse(text: &str) -> Program {
    Program::parse(text).unwrap()
}

pub fn names(p: &Program, sets: &[Interpretation]) -> Vec<Vec<String>> {
    sets.iter().map(|x| p.names(x)).collect()
}

type Set = BTreeSet<Atom>;

fn atoms_of(p: &Program) -> Vec<Atom> {
    let mut all: Set = Set::new();
    for r in p.rules() {
        all.insert(r.head);
        all.extend(r.pos.iter().copied());
        all.extend(r.neg.iter().copied());
    }
    all.into_iter().collect()
}

/// Naive least model: apply every rule until nothing changes.
fn naive_least_model(rules: &[(Atom, Set)]) -> Set {
    let mut m = Set::new();
    loop {
        let mut changed = false;
        for (h, pos) in rules {
            if pos.is_subset(&m) && m.insert(*h) {
                changed = true;
            }
        }
        if !changed {
            return m;
        }
    }
}

pub fn naive_gamma(p: &Program, x: &Set) -> Set {
    let reduct: Vec<(Atom, Set)> = p
        .rules()
        .filter(|r| r.neg.is_disjoint(x))
        .map(|r| (r.head, r.pos.clone()))
        .collect();
    naive_least_model(&reduct)
}

/// Every subset of `atoms(P)` checked against the definition, in canonical order.
pub fn naive_answer_sets(p: &Program) -> Vec<Interpretation> {
    let atoms = atoms_of(p);
    assert!(atoms.len() <= 16, "oracle scan too large");
    let mut out: Vec<Interpretation> = (0u32..1 << atoms.len())
        .map(|m| {
            atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &a)| a)
                .collect::<Set>()
        })
        .filter(|x| naive_gamma(p, x) == *x)
        .map(Interpretation::from)
        .collect();
    out.sort();
    out
}

pub fn naive_well_founded(p: &Program) -> Interpretation {
    let mut x = Set::new();
    loop {
        let next = naive_gamma(p, &naive_gamma(p, &x));
        if next == x {
            return x.into();
        }
        x = next;
    }
}

/// `(P_a^+, P_a^-)` for every atom at once, by iterating the closure
/// conditions over all pairs until stable.
pub fn naive_profiles(p: &Program) -> Vec<(Atom, Set, Set)> {
    let atoms = atoms_of(p);
    let mut state: Vec<(Atom, Set, Set)> = atoms
        .iter()
        .map(|&a| (a, Set::from([a]), Set::new()))
        .collect();
    loop {
        let mut changed = false;
        for (_, plus, minus) in state.iter_mut() {
            for r in p.rules() {
                if plus.contains(&r.head) {
                    for &b in &r.pos {
                        changed |= plus.insert(b);
                    }
                    for &b in &r.neg {
                        changed |= minus.insert(b);
                    }
                }
                if minus.contains(&r.head) {
                    for &b in &r.pos {
                        changed |= minus.insert(b);
                    }
                    for &b in &r.neg {
                        changed |= plus.insert(b);
                    }
                }
            }
        }
        if !changed {
            return state;
        }
    }
}

/// Whether some subset of `atoms(P)` is a signing, by exhaustive search.
pub fn naive_has_signing(p: &Program) -> bool {
    let atoms = atoms_of(p);
    (0u32..1 << atoms.len()).any(|m| {
        let s: Set = atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| m >> i & 1 == 1)
            .map(|(_, &a)| a)
            .collect();
        p.rules().all(|r| {
            if s.contains(&r.head) {
                r.pos.is_subset(&s) && r.neg.is_disjoint(&s)
            } else {
                r.pos.is_disjoint(&s) && r.neg.is_subset(&s)
            }
        })
    })
}

/// Arbitrary programs over `a0 … a{max_atoms-1}` with up to `max_rules` rules.
pub fn arb_program(max_atoms: usize, max_rules: usize) -> impl Strategy<Value = Program> {
    (1..=max_atoms).prop_flat_map(move |n| {
        let idx = 0..n;
        let rule = (
            idx.clone(),
            prop::collection::btree_set(idx.clone(), 0..=2.min(n)),
            prop::collection::btree_set(idx, 0..=2.min(n)),
        );
        prop::collection::vec(rule, 0..=max_rules).prop_map(move |rules| {
            let mut table = SymbolTable::new();
            for i in 0..n {
                table.intern(&format!("a{i}"));
            }
            let rules: Vec<Rule> = rules
                .into_iter()
                .map(|(h, pos, neg)| {
                    Rule::new(
                        Atom::from_index(h),
                        pos.into_iter().map(Atom::from_index),
                        neg.into_iter().map(Atom::from_index),
                    )
                })
                .collect();
            Program::new(Arc::new(table), rules)
        })
    })
}
