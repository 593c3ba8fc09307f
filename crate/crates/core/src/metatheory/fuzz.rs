use crate::error::Result;
use crate::lang::{Limits, Program, Rule};

use super::checks::outcome;
use super::generate::{generate, GeneratorConfig};
use super::verdict::{Counterexample, Outcome, Property, Verdict, Witness};

/// Seed for trial `trial` of a run seeded with `seed` (splitmix64 finalizer).
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    let mut z = seed
        ^ (trial as u64)
            .wrapping_add(1)
            .wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs `property` on `trials` generated programs.
///
/// Trials run under `limits.execution` and are independent; the verdict
/// does not depend on scheduling. The lowest-indexed failing trial is
/// shrunk and reported.
pub fn fuzz(
    property: Property,
    config: &GeneratorConfig,
    trials: usize,
    limits: &Limits,
) -> Result<Verdict> {
    let results = limits
        .execution
        .map_range(trials, |i| -> Result<(Program, Outcome)> {
            let program = generate(&config.clone().with_seed(trial_seed(config.seed, i)))?;
            let result = outcome(property, &program, limits)?;
            Ok((program, result))
        });
    let mut not_applicable = 0;
    let mut first_failure = None;
    for (i, r) in results.into_iter().enumerate() {
        let (program, result) = r?;
        match result {
            Outcome::NotApplicable => not_applicable += 1,
            Outcome::Fails(_) if first_failure.is_none() => first_failure = Some((i, program)),
            _ => {}
        }
    }
    let counterexample = match first_failure {
        Some((trial, program)) => {
            let (program, witness) = shrink(property, &program, limits)?;
            Some(Counterexample {
                program,
                witness,
                trial: Some(trial),
            })
        }
        None => None,
    };
    Ok(Verdict {
        property,
        holds: counterexample.is_none(),
        trials,
        not_applicable,
        counterexample,
    })
}

/// Greedily shrinks a failing program: drop whole rules while the property
/// still fails, then drop single subgoals, repeating until neither helps.
/// Returns the smaller program with its re-checked witness.
///
/// Panics if `program` does not fail `property`.
pub fn shrink(
    property: Property,
    program: &Program,
    limits: &Limits,
) -> Result<(Program, Witness)> {
    let fails = |p: &Program| -> Result<Option<Witness>> {
        Ok(match outcome(property, p, limits)? {
            Outcome::Fails(w) => Some(w),
            _ => None,
        })
    };
    let mut current = program.clone();
    let mut witness = fails(&current)?.expect("shrinking a program that does not fail");
    loop {
        let mut progressed = false;
        for rule in current
            .canonical_rules()
            .into_iter()
            .cloned()
            .collect::<Vec<_>>()
        {
            let candidate = current.without_rule(&rule);
            if let Some(w) = fails(&candidate)? {
                current = candidate;
                witness = w;
                progressed = true;
            }
        }
        for rule in current
            .canonical_rules()
            .into_iter()
            .cloned()
            .collect::<Vec<_>>()
        {
            if !current.contains(&rule) {
                continue;
            }
            let rest = current.without_rule(&rule);
            for smaller in weaker_rules(&rule) {
                let candidate = rest.derive(rest.rules().cloned().chain([smaller]));
                if let Some(w) = fails(&candidate)? {
                    current = candidate;
                    witness = w;
                    progressed = true;
                    break;
                }
            }
        }
        if !progressed {
            return Ok((current, witness));
        }
    }
}

/// The rule with one subgoal removed, for each subgoal.
fn weaker_rules(rule: &Rule) -> Vec<Rule> {
    let mut out = Vec::new();
    for &b in &rule.pos {
        let mut r = rule.clone();
        r.pos.remove(&b);
        out.push(r);
    }
    for &b in &rule.neg {
        let mut r = rule.clone();
        r.neg.remove(&b);
        out.push(r);
    }
    out
}
