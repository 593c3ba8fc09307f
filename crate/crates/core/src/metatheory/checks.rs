//! Single-program checkers, one per metatheorem.

use crate::analysis::{find_level_mapping, find_signing};
use crate::error::Result;
use crate::lang::{
    consequences_of, enumerate_answer_sets, is_answer_set, well_founded, Atom, Interpretation,
    Limits, Program,
};
use crate::splitting::{
    assemble, build_signed_splitting_sequence, component_sequence, enumerate_solutions, evaluate,
    u_components, SplittingSequence,
};

use super::verdict::{Outcome, Property, Verdict, Witness};

/// Runs the checker for `property` and reports the bare outcome.
pub fn outcome(property: Property, program: &Program, limits: &Limits) -> Result<Outcome> {
    match property {
        Property::Cut => cut(program, limits),
        Property::CautiousMonotonicity => cautious_monotonicity(program, limits),
        Property::CautiousMonotonicityCn => cautious_monotonicity_cn(program, limits),
        Property::Cumulativity => cumulativity(program, limits),
        Property::Fages => fages(program, limits),
        Property::SigningLemma => signing_lemma(program, limits),
        Property::Dung => dung(program, limits),
        Property::Schlipf => schlipf(program, limits),
        Property::Splitting => splitting(program, &default_sequence(program), limits),
        Property::ComponentSubset => component_subset(program, &default_sequence(program), limits),
    }
}

pub fn check(property: Property, program: &Program, limits: &Limits) -> Result<Verdict> {
    Ok(Verdict::single(
        property,
        program,
        outcome(property, program, limits)?,
    ))
}

pub fn check_cut(program: &Program, limits: &Limits) -> Result<Verdict> {
    check(Property::Cut, program, limits)
}

pub fn check_cautious_monotonicity(program: &Program, limits: &Limits) -> Result<Verdict> {
    check(Property::CautiousMonotonicity, program, limits)
}

pub fn check_cumulativity(program: &Program, limits: &Limits) -> Result<Verdict> {
    check(Property::Cumulativity, program, limits)
}

pub fn check_fages(program: &Program, limits: &Limits) -> Result<Verdict> {
    check(Property::Fages, program, limits)
}

pub fn check_signing_lemma(program: &Program, limits: &Limits) -> Result<Verdict> {
    check(Property::SigningLemma, program, limits)
}

pub fn check_dung(program: &Program, limits: &Limits) -> Result<Verdict> {
    check(Property::Dung, program, limits)
}

pub fn check_schlipf(program: &Program, limits: &Limits) -> Result<Verdict> {
    check(Property::Schlipf, program, limits)
}

pub fn check_splitting_theorem(
    program: &Program,
    u: &SplittingSequence,
    limits: &Limits,
) -> Result<Verdict> {
    Ok(Verdict::single(
        Property::Splitting,
        program,
        splitting(program, u, limits)?,
    ))
}

pub fn check_component_subset(
    program: &Program,
    u: &SplittingSequence,
    limits: &Limits,
) -> Result<Verdict> {
    Ok(Verdict::single(
        Property::ComponentSubset,
        program,
        component_subset(program, u, limits)?,
    ))
}

/// The signed sequence when the program is order-consistent, else the plain
/// dependency-component sequence.
pub fn default_sequence(program: &Program) -> SplittingSequence {
    build_signed_splitting_sequence(program).unwrap_or_else(|_| component_sequence(program))
}

/// Answer sets before and after adding `atom ←`, as (gained, lost).
fn answer_set_change(
    program: &Program,
    before: &[Interpretation],
    atom: Atom,
    limits: &Limits,
) -> Result<(Vec<Interpretation>, Vec<Interpretation>)> {
    let after = enumerate_answer_sets(&program.with_fact(atom), limits)?;
    let gained = after
        .iter()
        .filter(|x| !before.contains(x))
        .cloned()
        .collect();
    let lost = before
        .iter()
        .filter(|x| !after.contains(x))
        .cloned()
        .collect();
    Ok((gained, lost))
}

/// Requires every `a` in `atoms` to leave the answer sets unchanged.
fn invariant_under_facts(
    program: &Program,
    before: &[Interpretation],
    atoms: &Interpretation,
    limits: &Limits,
) -> Result<Outcome> {
    for added in atoms.iter() {
        let (gained, lost) = answer_set_change(program, before, added, limits)?;
        if !gained.is_empty() || !lost.is_empty() {
            return Ok(Outcome::Fails(Witness::ChangedAnswerSets {
                added,
                gained,
                lost,
            }));
        }
    }
    Ok(Outcome::Holds)
}

fn cut(program: &Program, limits: &Limits) -> Result<Outcome> {
    for x in enumerate_answer_sets(program, limits)? {
        for atom in x.iter() {
            if !is_answer_set(&program.with_fact(atom), &x) {
                return Ok(Outcome::Fails(Witness::Cut {
                    atom,
                    answer_set: x.clone(),
                }));
            }
        }
    }
    Ok(Outcome::Holds)
}

fn cautious_monotonicity(program: &Program, limits: &Limits) -> Result<Outcome> {
    let before = enumerate_answer_sets(program, limits)?;
    let cn = consequences_of(program, &before);
    if cn.inconsistent {
        return Ok(Outcome::Holds);
    }
    for added in cn.atoms.iter() {
        let augmented = program.with_fact(added);
        let after = enumerate_answer_sets(&augmented, limits)?;
        if let Some(x) = after.iter().find(|x| !before.contains(x)) {
            let lost = cn
                .atoms
                .difference(&consequences_of(&augmented, &after).atoms);
            return Ok(Outcome::Fails(Witness::NewAnswerSet {
                added,
                answer_set: x.clone(),
                lost,
            }));
        }
    }
    Ok(Outcome::Holds)
}

fn cautious_monotonicity_cn(program: &Program, limits: &Limits) -> Result<Outcome> {
    let before = enumerate_answer_sets(program, limits)?;
    let cn = consequences_of(program, &before);
    if cn.inconsistent {
        return Ok(Outcome::Holds);
    }
    for added in cn.atoms.iter() {
        let augmented = program.with_fact(added);
        let after = consequences_of(&augmented, &enumerate_answer_sets(&augmented, limits)?);
        let lost = cn.atoms.difference(&after.atoms);
        if !lost.is_empty() {
            return Ok(Outcome::Fails(Witness::LostConsequences { added, lost }));
        }
    }
    Ok(Outcome::Holds)
}

fn cumulativity(program: &Program, limits: &Limits) -> Result<Outcome> {
    let before = enumerate_answer_sets(program, limits)?;
    let cn = consequences_of(program, &before);
    if cn.inconsistent {
        return Ok(Outcome::Holds);
    }
    invariant_under_facts(program, &before, &cn.atoms, limits)
}

fn fages(program: &Program, limits: &Limits) -> Result<Outcome> {
    if find_level_mapping(program).is_err() {
        return Ok(Outcome::NotApplicable);
    }
    Ok(if enumerate_answer_sets(program, limits)?.is_empty() {
        Outcome::Fails(Witness::NoAnswerSet)
    } else {
        Outcome::Holds
    })
}

fn signing_lemma(program: &Program, limits: &Limits) -> Result<Outcome> {
    if find_signing(program).is_none() {
        return Ok(Outcome::NotApplicable);
    }
    cumulativity(program, limits)
}

fn dung(program: &Program, limits: &Limits) -> Result<Outcome> {
    if find_signing(program).is_none() {
        return Ok(Outcome::NotApplicable);
    }
    let cn = consequences_of(program, &enumerate_answer_sets(program, limits)?);
    let wf = well_founded(program);
    Ok(if cn.atoms == wf {
        Outcome::Holds
    } else {
        Outcome::Fails(Witness::Dung {
            consequences: cn.atoms,
            well_founded: wf,
            inconsistent: cn.inconsistent,
        })
    })
}

fn schlipf(program: &Program, limits: &Limits) -> Result<Outcome> {
    let before = enumerate_answer_sets(program, limits)?;
    invariant_under_facts(program, &before, &well_founded(program), limits)
}

fn splitting(program: &Program, u: &SplittingSequence, limits: &Limits) -> Result<Outcome> {
    let solutions = enumerate_solutions(program, u, limits)?;
    for s in &solutions {
        let mut seen = Interpretation::new();
        for part in &s.parts {
            if !seen.is_disjoint(part) {
                return Ok(Outcome::Fails(Witness::OverlappingParts {
                    solution: s.clone(),
                }));
            }
            seen.extend(part);
        }
    }
    let mut assembled: Vec<Interpretation> = solutions.iter().map(assemble).collect();
    assembled.sort();
    let brute = enumerate_answer_sets(program, limits)?;
    let missing: Vec<_> = brute
        .iter()
        .filter(|x| !assembled.contains(x))
        .cloned()
        .collect();
    let extra: Vec<_> = assembled
        .iter()
        .filter(|x| !brute.contains(x))
        .cloned()
        .collect();
    Ok(if missing.is_empty() && extra.is_empty() {
        Outcome::Holds
    } else {
        Outcome::Fails(Witness::SplittingMismatch { missing, extra })
    })
}

/// Checks, for every layer and every `X ⊆ U_α`, that the partial evaluation
/// is contained in the matching component, and that every component only
/// mentions atoms of its own layer.
fn component_subset(program: &Program, u: &SplittingSequence, limits: &Limits) -> Result<Outcome> {
    let components = u_components(program, u)?;
    let layers = u.layers();
    for (layer, component) in components.iter().enumerate() {
        let home = if layer == 0 {
            layers[0].clone()
        } else {
            layers[layer].difference(&layers[layer - 1])
        };
        if let Some(atom) = component.atoms().iter().find(|&a| !home.contains(a)) {
            return Ok(Outcome::Fails(Witness::ComponentAtom { layer, atom }));
        }
    }
    for alpha in 0..layers.len().saturating_sub(1) {
        let base: Vec<Atom> = layers[alpha].iter().collect();
        if base.len() > limits.cap.min(63) {
            return Err(crate::error::Error::TooLarge {
                atoms: base.len(),
                cap: limits.cap,
            });
        }
        let top = u.layer_top(program, alpha);
        let component = &components[alpha + 1];
        for mask in 0u64..(1 << base.len()) {
            let x: Interpretation = base
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &a)| a)
                .collect();
            let e = evaluate(&layers[alpha], &top, &x);
            if !e.rules().all(|r| component.contains(r)) {
                return Ok(Outcome::Fails(Witness::EvaluationOutsideComponent {
                    layer: alpha,
                    x,
                }));
            }
        }
    }
    Ok(Outcome::Holds)
}
