//! Reducts, least models, the Γ operator and the well-founded set.

use std::collections::BTreeSet;

use super::program::{Interpretation, Program, Rule};
use crate::error::{Error, Result};

/// The reduct `P^X`: rules whose negated subgoals miss `x`, with negation dropped.
pub fn reduct(program: &Program, x: &Interpretation) -> Program {
    program.derive(
        program
            .rules()
            .filter(|r| r.neg.iter().all(|n| !x.contains(*n)))
            .map(|r| Rule {
                head: r.head,
                pos: r.pos.clone(),
                neg: BTreeSet::new(),
            }),
    )
}

/// The least set of atoms closed under a positive program.
pub fn least_model(program: &Program) -> Result<Interpretation> {
    if let Some(r) = program.rules().find(|r| !r.neg.is_empty()) {
        return Err(Error::NotPositive {
            head: program.name(r.head).to_owned(),
        });
    }
    Ok(closure(program, program.rules()))
}

/// `Γ_P(X)`: the least model of `P^X`.
pub fn gamma(program: &Program, x: &Interpretation) -> Interpretation {
    closure(
        program,
        program
            .rules()
            .filter(|r| r.neg.iter().all(|n| !x.contains(*n))),
    )
}

pub fn is_answer_set(program: &Program, x: &Interpretation) -> bool {
    // Answer sets only contain rule heads; cheap rejection first.
    x.iter().all(|a| program.rules().any(|r| r.head == a)) && gamma(program, x) == *x
}

/// `WF(P)`: the least fixpoint of `Γ_P²`, iterated from the empty set.
pub fn well_founded(program: &Program) -> Interpretation {
    let mut x = Interpretation::new();
    loop {
        let next = gamma(program, &gamma(program, &x));
        if next == x {
            return x;
        }
        x = next;
    }
}

/// Positive closure over the positive bodies of `rules`, ignoring negation.
/// Linear in the total rule size: each rule keeps a count of unsatisfied
/// positive subgoals.
fn closure<'a>(program: &Program, rules: impl Iterator<Item = &'a Rule>) -> Interpretation {
    let n = program.symbols().len();
    let rules: Vec<&Rule> = rules.collect();
    let mut missing: Vec<usize> = rules.iter().map(|r| r.pos.len()).collect();
    let mut watchers: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, r) in rules.iter().enumerate() {
        for b in &r.pos {
            watchers[b.index()].push(i);
        }
    }
    let mut derived = vec![false; n];
    let mut queue: Vec<usize> = (0..rules.len()).filter(|&i| missing[i] == 0).collect();
    let mut model = Interpretation::new();
    while let Some(i) = queue.pop() {
        let head = rules[i].head;
        if derived[head.index()] {
            continue;
        }
        derived[head.index()] = true;
        model.insert(head);
        for &j in &watchers[head.index()] {
            missing[j] -= 1;
            if missing[j] == 0 {
                queue.push(j);
            }
        }
    }
    model
}
