use super::sequence::{bottom, build_signed_splitting_sequence, SplittingSequence};
use crate::error::{Error, Result};
use crate::lang::{enumerate_answer_sets, is_answer_set, Interpretation, Limits, Program};

/// Per-layer answer sets `⟨X_0, …, X_{μ-1}⟩` aligned with a splitting sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Solution {
    pub parts: Vec<Interpretation>,
}

impl Solution {
    pub fn new(parts: Vec<Interpretation>) -> Self {
        Solution { parts }
    }
}

/// `⋃ X_α`.
pub fn assemble(solution: &Solution) -> Interpretation {
    solution
        .parts
        .iter()
        .fold(Interpretation::new(), |acc, x| acc.union(x))
}

/// Checks the solution conditions layer by layer. A misaligned solution is
/// never a solution.
pub fn is_solution(program: &Program, u: &SplittingSequence, solution: &Solution) -> bool {
    let parts = &solution.parts;
    if parts.len() != u.len() || u.is_empty() {
        return false;
    }
    if !is_answer_set(&bottom(&u.layers()[0], program), &parts[0]) {
        return false;
    }
    let mut prefix = parts[0].clone();
    for alpha in 0..u.len() - 1 {
        let layer = u.layer_program(program, alpha, &prefix);
        if !is_answer_set(&layer, &parts[alpha + 1]) {
            return false;
        }
        prefix.extend(&parts[alpha + 1]);
    }
    true
}

/// Every solution of `program` with respect to `u`, found depth-first and
/// returned in lexicographic order. Branches below distinct first-layer
/// answer sets are explored in parallel.
pub fn enumerate_solutions(
    program: &Program,
    u: &SplittingSequence,
    limits: &Limits,
) -> Result<Vec<Solution>> {
    u.validate(program)?;
    let roots = enumerate_answer_sets(&bottom(&u.layers()[0], program), limits)?;
    let branches = limits.execution.map_slice(&roots, |x0| {
        let mut out = Vec::new();
        extend(program, u, limits, vec![x0.clone()], x0.clone(), &mut out)?;
        Ok::<_, Error>(out)
    });
    let mut all = Vec::new();
    for branch in branches {
        all.extend(branch?);
    }
    all.sort();
    Ok(all)
}

fn extend(
    program: &Program,
    u: &SplittingSequence,
    limits: &Limits,
    parts: Vec<Interpretation>,
    prefix: Interpretation,
    out: &mut Vec<Solution>,
) -> Result<()> {
    let alpha = parts.len() - 1;
    if alpha + 1 == u.len() {
        out.push(Solution::new(parts));
        return Ok(());
    }
    let layer = u.layer_program(program, alpha, &prefix);
    for x in enumerate_answer_sets(&layer, limits)? {
        let mut next = parts.clone();
        next.push(x.clone());
        extend(program, u, limits, next, prefix.union(&x), out)?;
    }
    Ok(())
}

/// Answer sets assembled from the solutions over a signed splitting
/// sequence. Programs that are not order-consistent fall back to the
/// brute-force scan.
pub fn decomposed_answer_sets(program: &Program, limits: &Limits) -> Result<Vec<Interpretation>> {
    let u = match build_signed_splitting_sequence(program) {
        Ok(u) => u,
        Err(Error::NotOrderConsistent { .. }) => return enumerate_answer_sets(program, limits),
        Err(e) => return Err(e),
    };
    let mut sets: Vec<Interpretation> = enumerate_solutions(program, &u, limits)?
        .iter()
        .map(assemble)
        .collect();
    sets.sort();
    sets.dedup();
    Ok(sets)
}
