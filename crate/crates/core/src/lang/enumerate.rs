//! Brute-force answer-set enumeration over bitmask-compiled programs.

use super::atom::Atom;
use super::program::{Interpretation, Program};
use crate::error::{Error, Result};
use crate::par::Execution;

pub const DEFAULT_CAP: usize = 22;

/// Bit width available to the compiled representation.
const MASK_BITS: usize = 63;

/// Below this many candidate bits the scan stays on the calling thread.
const PARALLEL_THRESHOLD: u32 = 14;

/// Enumeration limits shared by every operation that scans subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `|atoms(P)|` the brute-force scan accepts.
    pub cap: usize,
    pub execution: Execution,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            cap: DEFAULT_CAP,
            execution: Execution::default(),
        }
    }
}

impl Limits {
    pub fn with_cap(cap: usize) -> Self {
        Limits {
            cap,
            ..Limits::default()
        }
    }

    pub fn sequential(self) -> Self {
        Limits {
            execution: Execution::Sequential,
            ..self
        }
    }
}

/// `Cn(P)` together with whether the program had no answer set at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Consequences {
    pub atoms: Interpretation,
    pub inconsistent: bool,
}

#[derive(Debug, Clone, Copy)]
struct MaskRule {
    head: u64,
    pos: u64,
    neg: u64,
}

/// A program over at most 63 atoms with every atom set packed into a `u64`.
#[derive(Debug, Clone)]
struct MaskProgram {
    atoms: Vec<Atom>,
    rules: Vec<MaskRule>,
    heads: u64,
}

impl MaskProgram {
    fn compile(program: &Program) -> Self {
        let atoms: Vec<Atom> = program.atoms().into_iter().collect();
        let bit = |a: &Atom| -> u64 { 1 << atoms.binary_search(a).expect("atom of program") };
        let rules: Vec<MaskRule> = program
            .rules()
            .map(|r| MaskRule {
                head: bit(&r.head),
                pos: r.pos.iter().map(bit).fold(0, |m, b| m | b),
                neg: r.neg.iter().map(bit).fold(0, |m, b| m | b),
            })
            .collect();
        let heads = rules.iter().fold(0, |m, r| m | r.head);
        MaskProgram {
            atoms,
            rules,
            heads,
        }
    }

    /// True iff `x` is the least model of the reduct relative to `x`.
    fn is_fixpoint(&self, x: u64) -> bool {
        let mut model = 0u64;
        loop {
            let before = model;
            for r in &self.rules {
                if r.neg & x == 0 && r.pos & !model == 0 {
                    model |= r.head;
                }
            }
            if model & !x != 0 {
                return false;
            }
            if model == before {
                return model == x;
            }
        }
    }

    fn decode(&self, mut mask: u64) -> Interpretation {
        let mut out = Interpretation::new();
        while mask != 0 {
            let i = mask.trailing_zeros() as usize;
            out.insert(self.atoms[i]);
            mask &= mask - 1;
        }
        out
    }
}

/// Scatters the low bits of `index` onto the set bits of `mask`.
fn deposit(mut index: u64, mut mask: u64) -> u64 {
    let mut out = 0;
    while mask != 0 {
        let low = mask & mask.wrapping_neg();
        if index & 1 == 1 {
            out |= low;
        }
        index >>= 1;
        mask &= mask - 1;
    }
    out
}

/// Every answer set of `program`, in canonical order.
///
/// Only subsets of the rule heads are tested, since no other set can be an
/// answer set.
pub fn enumerate_answer_sets(program: &Program, limits: &Limits) -> Result<Vec<Interpretation>> {
    let n = program.atoms().len();
    let cap = limits.cap.min(MASK_BITS);
    if n > cap {
        return Err(Error::TooLarge {
            atoms: n,
            cap: limits.cap,
        });
    }
    let compiled = MaskProgram::compile(program);
    let k = compiled.heads.count_ones();
    let total: u64 = 1 << k;

    let scan = |lo: u64, hi: u64| -> Vec<u64> {
        (lo..hi)
            .map(|i| deposit(i, compiled.heads))
            .filter(|&x| compiled.is_fixpoint(x))
            .collect()
    };
    let masks: Vec<u64> = if k < PARALLEL_THRESHOLD || limits.execution == Execution::Sequential {
        scan(0, total)
    } else {
        let chunks = 256u64;
        let width = total / chunks;
        limits.execution.flat_map_range(chunks as usize, |c| {
            scan(c as u64 * width, (c as u64 + 1) * width)
        })
    };
    let mut sets: Vec<Interpretation> = masks.into_iter().map(|m| compiled.decode(m)).collect();
    sets.sort();
    Ok(sets)
}

/// Intersection of the given answer sets; `atoms(P)` when there are none.
pub fn consequences_of(program: &Program, answer_sets: &[Interpretation]) -> Consequences {
    match answer_sets.split_first() {
        None => Consequences {
            atoms: program.atoms(),
            inconsistent: true,
        },
        Some((first, rest)) => Consequences {
            atoms: rest
                .iter()
                .fold(first.clone(), |acc, x| acc.intersection(x)),
            inconsistent: false,
        },
    }
}

pub fn consequences(program: &Program, limits: &Limits) -> Result<Consequences> {
    Ok(consequences_of(
        program,
        &enumerate_answer_sets(program, limits)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIX: &str = "a :- not b. b :- c, not a. c :- a.";
    const P2: &str = "a :- not b. b :- not a. c :- a. c :- b.";

    fn names(p: &Program, sets: &[Interpretation]) -> Vec<Vec<String>> {
        sets.iter().map(|x| p.names(x)).collect()
    }

    #[test]
    fn deposit_scatters_bits() {
        assert_eq!(deposit(0b11, 0b1010), 0b1010);
        assert_eq!(deposit(0b01, 0b1010), 0b0010);
        assert_eq!(deposit(0b10, 0b1010), 0b1000);
        assert_eq!(deposit(0, 0), 0);
    }

    #[test]
    fn enumerates_examples() {
        let l = Limits::default();
        let dix = Program::parse(DIX).unwrap();
        assert_eq!(
            names(&dix, &enumerate_answer_sets(&dix, &l).unwrap()),
            vec![vec!["a", "c"]]
        );
        let p2 = Program::parse(P2).unwrap();
        assert_eq!(
            names(&p2, &enumerate_answer_sets(&p2, &l).unwrap()),
            vec![vec!["a", "c"], vec!["b", "c"]]
        );
        let odd = Program::parse("a :- not a.").unwrap();
        assert!(enumerate_answer_sets(&odd, &l).unwrap().is_empty());
        let empty = Program::parse("").unwrap();
        assert_eq!(
            enumerate_answer_sets(&empty, &l).unwrap(),
            vec![Interpretation::new()]
        );
    }

    #[test]
    fn cap_is_enforced() {
        let p = Program::parse(P2).unwrap();
        assert_eq!(
            enumerate_answer_sets(&p, &Limits::with_cap(2)),
            Err(Error::TooLarge { atoms: 3, cap: 2 })
        );
        assert!(enumerate_answer_sets(&p, &Limits::with_cap(3)).is_ok());
    }

    #[test]
    fn consequence_examples() {
        let l = Limits::default();
        let dix = Program::parse(DIX).unwrap();
        let cn = consequences(&dix, &l).unwrap();
        assert_eq!(dix.names(&cn.atoms), vec!["a", "c"]);
        assert!(!cn.inconsistent);
        let dix_c = dix.with_fact(dix.atom("c").unwrap());
        assert_eq!(
            dix_c.names(&consequences(&dix_c, &l).unwrap().atoms),
            vec!["c"]
        );
        let p2 = Program::parse(P2).unwrap();
        assert_eq!(p2.names(&consequences(&p2, &l).unwrap().atoms), vec!["c"]);
    }

    #[test]
    fn inconsistent_program_consequences() {
        let p = Program::parse("a :- not a.").unwrap();
        let cn = consequences(&p, &Limits::default()).unwrap();
        assert!(cn.inconsistent);
        assert_eq!(cn.atoms, p.atoms());
    }

    #[test]
    fn sequential_and_parallel_scans_agree() {
        // 8 independent even loops: 16 head atoms, above the parallel threshold.
        let text: String = (0..8)
            .map(|i| format!("p{i} :- not q{i}. q{i} :- not p{i}. "))
            .collect();
        let p = Program::parse(&text).unwrap();
        let l = Limits::with_cap(32);
        let par = enumerate_answer_sets(&p, &l).unwrap();
        let seq = enumerate_answer_sets(&p, &l.sequential()).unwrap();
        assert_eq!(par.len(), 1 << 8);
        assert_eq!(par, seq);
    }
}
