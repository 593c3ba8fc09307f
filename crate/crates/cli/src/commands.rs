use serde_json::{json, Value};

use lpsem::analysis::classify as run_classify;
use lpsem::lang::{consequences_of, enumerate_answer_sets, well_founded as wf, Limits, Program};
use lpsem::metatheory::{
    self, default_sequence, describe_witness, GeneratorConfig, Property, Verdict,
};
use lpsem::splitting::{decomposed_answer_sets, enumerate_solutions, u_components};
use lpsem::text::{serialize, Format, ProgramJson};
use lpsem::Interpretation;

use crate::exit;
use crate::report::{self, Output};
use crate::Failure;

fn program_json(p: &Program) -> Value {
    serde_json::to_value(ProgramJson::from(p)).expect("program json")
}

/// Brute force within the cap, otherwise the splitting decomposition.
fn answer_sets_of(program: &Program, limits: &Limits) -> Result<Vec<Interpretation>, Failure> {
    let sets = if program.atoms().len() <= limits.cap {
        enumerate_answer_sets(program, limits)?
    } else {
        decomposed_answer_sets(program, limits)?
    };
    Ok(sets)
}

pub fn answer_sets(out: &Output, program: &Program, limits: &Limits) -> Result<u8, Failure> {
    let mut sets = answer_sets_of(program, limits)?;
    report::by_name(program, &mut sets);
    if out.json {
        out.json(&report::sets_json(program, &sets));
    } else {
        for x in &sets {
            println!("{}", report::set(program, x));
        }
    }
    Ok(exit::OK)
}

pub fn well_founded(out: &Output, program: &Program) -> Result<u8, Failure> {
    let x = wf(program);
    if out.json {
        out.json(&report::set_json(program, &x));
    } else {
        println!("{}", report::set(program, &x));
    }
    Ok(exit::OK)
}

pub fn consequences(out: &Output, program: &Program, limits: &Limits) -> Result<u8, Failure> {
    let cn = consequences_of(program, &answer_sets_of(program, limits)?);
    if out.json {
        out.json(&json!({
            "atoms": report::set_json(program, &cn.atoms),
            "inconsistent": cn.inconsistent,
        }));
    } else {
        println!("{}", report::set(program, &cn.atoms));
        if cn.inconsistent {
            println!("% inconsistent: no answer sets, every atom of the program is a consequence");
        }
    }
    Ok(exit::OK)
}

pub fn classify(out: &Output, program: &Program) -> Result<u8, Failure> {
    let c = run_classify(program);
    let name = |a| program.name(a).to_owned();
    let levels: Option<Vec<(String, usize)>> = c.order_consistent.as_ref().ok().map(|m| {
        let mut v: Vec<_> = m.levels.iter().map(|(&a, &l)| (name(a), l)).collect();
        v.sort();
        v
    });
    let cycle: Option<Vec<String>> = c
        .order_consistent
        .as_ref()
        .err()
        .map(|cy| cy.0.iter().map(|&a| name(a)).collect());
    if out.json {
        out.json(&json!({
            "positive": c.positive,
            "signed": c.signed.is_some(),
            "signing": c.signed.as_ref().map(|s| report::set_json(program, s.set())),
            "call_consistent": c.call_consistent.is_ok(),
            "self_negative_atom": c.call_consistent.err().map(name),
            "order_consistent": c.order_consistent.is_ok(),
            "level_mapping": levels.as_ref().map(|v| {
                v.iter().map(|(k, l)| (k.clone(), Value::from(*l))).collect::<serde_json::Map<_, _>>()
            }),
            "negative_cycle": cycle,
            "stratified": c.stratified,
        }));
        return Ok(exit::OK);
    }
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    println!("positive: {}", yes_no(c.positive));
    match &c.signed {
        Some(s) => println!("signed: yes, S = {}", report::set(program, s.set())),
        None => println!("signed: no"),
    }
    match c.call_consistent {
        Ok(()) => println!("call-consistent: yes"),
        Err(a) => println!(
            "call-consistent: no, {} depends negatively on itself",
            name(a)
        ),
    }
    match (&levels, &cycle) {
        (Some(levels), _) => {
            let shown: Vec<String> = levels.iter().map(|(a, l)| format!("{a}={l}")).collect();
            println!("order-consistent: yes, levels {}", shown.join(" "));
        }
        (None, Some(cycle)) => {
            let mut path = cycle.clone();
            path.push(cycle[0].clone());
            println!("order-consistent: no, cycle {}", path.join(" < "));
        }
        (None, None) => unreachable!(),
    }
    println!("stratified: {}", yes_no(c.stratified));
    Ok(exit::OK)
}

pub fn split(out: &Output, program: &Program) -> Result<u8, Failure> {
    let u = default_sequence(program);
    let components = u_components(program, &u)?;
    let signed: Vec<bool> = components
        .iter()
        .map(|c| lpsem::analysis::find_signing(c).is_some())
        .collect();
    if out.json {
        out.json(&json!({
            "sequence": report::sets_json(program, u.layers()),
            "components": components.iter().map(program_json).collect::<Vec<_>>(),
            "signed": signed,
        }));
        return Ok(exit::OK);
    }
    println!("sequence: {}", report::sequence(program, u.layers()));
    for (i, (c, s)) in components.iter().zip(&signed).enumerate() {
        println!("component {i}{}:", if *s { " (signed)" } else { "" });
        print!("{}", report::indented(c));
    }
    Ok(exit::OK)
}

pub fn solutions(out: &Output, program: &Program, limits: &Limits) -> Result<u8, Failure> {
    let u = default_sequence(program);
    let sols = enumerate_solutions(program, &u, limits)?;
    if out.json {
        out.json(&json!({
            "sequence": report::sets_json(program, u.layers()),
            "solutions": sols.iter().map(|s| report::sets_json(program, &s.parts)).collect::<Vec<_>>(),
        }));
        return Ok(exit::OK);
    }
    println!("sequence: {}", report::sequence(program, u.layers()));
    for s in &sols {
        println!(
            "{} => {}",
            report::sequence(program, &s.parts),
            report::set(program, &lpsem::splitting::assemble(s))
        );
    }
    Ok(exit::OK)
}

fn verdict(out: &Output, v: &Verdict) -> u8 {
    if out.json {
        out.json(&v.to_json());
    } else {
        let status = if !v.holds {
            "fails"
        } else if !v.applicable() {
            "not applicable"
        } else {
            "holds"
        };
        print!("{}: {status}", v.property);
        if v.trials > 1 {
            print!(
                " ({} trials, {} not applicable)",
                v.trials, v.not_applicable
            );
        }
        println!();
        if let Some(c) = &v.counterexample {
            println!("counterexample:");
            print!("{}", report::indented(&c.program));
            println!("witness: {}", describe_witness(&c.program, &c.witness));
        }
    }
    if v.holds {
        exit::OK
    } else {
        exit::PROPERTY_FAILS
    }
}

pub fn check(
    out: &Output,
    property: Property,
    program: &Program,
    limits: &Limits,
) -> Result<u8, Failure> {
    Ok(verdict(out, &metatheory::check(property, program, limits)?))
}

pub fn fuzz(
    out: &Output,
    property: Property,
    config: &GeneratorConfig,
    trials: usize,
    limits: &Limits,
) -> Result<u8, Failure> {
    Ok(verdict(
        out,
        &metatheory::fuzz(property, config, trials, limits)?,
    ))
}

pub fn generate(out: &Output, config: &GeneratorConfig) -> Result<u8, Failure> {
    let p = metatheory::generate(config)?;
    let format = if out.json { Format::Json } else { Format::Text };
    let text = serialize(&p, format);
    if out.json {
        println!("{text}");
    } else {
        print!("{text}");
    }
    Ok(exit::OK)
}
