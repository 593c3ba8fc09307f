use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::Error;
use crate::lang::{Atom, Interpretation, Program};
use crate::splitting::Solution;
use crate::text::ProgramJson;

/// The checkable metatheorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    /// Each answer set survives adding any of its atoms as a fact.
    Cut,
    /// Adding a consequence creates no new answer set.
    CautiousMonotonicity,
    /// Adding a consequence loses no consequence.
    CautiousMonotonicityCn,
    /// Adding a consequence leaves the answer sets unchanged.
    Cumulativity,
    /// Order-consistent programs have an answer set.
    Fages,
    /// Signed programs keep their answer sets when a consequence is added.
    SigningLemma,
    /// Signed programs have `Cn(P) = WF(P)`.
    Dung,
    /// Adding a well-founded atom leaves the answer sets unchanged.
    Schlipf,
    /// Assembled solutions are exactly the answer sets.
    Splitting,
    /// Partial evaluations sit inside their components, whose atoms stay in
    /// their layer.
    ComponentSubset,
}

impl Property {
    pub const ALL: [Property; 10] = [
        Property::Cut,
        Property::CautiousMonotonicity,
        Property::CautiousMonotonicityCn,
        Property::Cumulativity,
        Property::Fages,
        Property::SigningLemma,
        Property::Dung,
        Property::Schlipf,
        Property::Splitting,
        Property::ComponentSubset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Cut => "cut",
            Property::CautiousMonotonicity => "cautious-monotonicity",
            Property::CautiousMonotonicityCn => "cautious-monotonicity-cn",
            Property::Cumulativity => "cumulativity",
            Property::Fages => "fages",
            Property::SigningLemma => "signing-lemma",
            Property::Dung => "dung",
            Property::Schlipf => "schlipf",
            Property::Splitting => "splitting",
            Property::ComponentSubset => "component-subset",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.replace('_', "-");
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or(Error::UnknownProperty(s))
    }
}

/// Evidence that a property failed on one program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `answer_set` is not an answer set once `atom ←` is added.
    Cut {
        atom: Atom,
        answer_set: Interpretation,
    },
    /// Adding consequence `added` yields `answer_set`, which is not an
    /// answer set of the original; `lost` are the consequences that vanish.
    NewAnswerSet {
        added: Atom,
        answer_set: Interpretation,
        lost: Interpretation,
    },
    /// Adding consequence `added` drops the consequences in `lost`.
    LostConsequences { added: Atom, lost: Interpretation },
    /// Adding `added` changes the answer sets.
    ChangedAnswerSets {
        added: Atom,
        gained: Vec<Interpretation>,
        lost: Vec<Interpretation>,
    },
    /// An order-consistent program with no answer set.
    NoAnswerSet,
    Dung {
        consequences: Interpretation,
        well_founded: Interpretation,
        inconsistent: bool,
    },
    /// Assembled solutions and brute-force answer sets disagree.
    SplittingMismatch {
        missing: Vec<Interpretation>,
        extra: Vec<Interpretation>,
    },
    /// A solution whose parts share an atom.
    OverlappingParts { solution: Solution },
    /// `e_{U_α}(top, x)` has a rule outside component `α + 1`.
    EvaluationOutsideComponent { layer: usize, x: Interpretation },
    /// `atom` occurs in component `layer` but not in that layer's new atoms.
    ComponentAtom { layer: usize, atom: Atom },
}

/// Result of one property on one program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails(Witness),
    NotApplicable,
}

impl Outcome {
    pub fn fails(&self) -> bool {
        matches!(self, Outcome::Fails(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub program: Program,
    pub witness: Witness,
    /// Index of the fuzz trial that produced it, before shrinking.
    pub trial: Option<usize>,
}

/// Aggregate outcome of a property over one or more programs.
///
/// `holds` is false exactly when a counterexample is present. Trials where
/// the property did not apply are counted in `not_applicable` and do not
/// count as passes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub property: Property,
    pub holds: bool,
    pub trials: usize,
    pub not_applicable: usize,
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn single(property: Property, program: &Program, outcome: Outcome) -> Self {
        let not_applicable = usize::from(outcome == Outcome::NotApplicable);
        let counterexample = match outcome {
            Outcome::Fails(witness) => Some(Counterexample {
                program: program.clone(),
                witness,
                trial: None,
            }),
            _ => None,
        };
        Verdict {
            property,
            holds: counterexample.is_none(),
            trials: 1,
            not_applicable,
            counterexample,
        }
    }

    /// True when the property held on at least one applicable trial.
    pub fn applicable(&self) -> bool {
        self.not_applicable < self.trials
    }

    pub fn to_json(&self) -> Value {
        let (counterexample, witness) = match &self.counterexample {
            Some(c) => (
                serde_json::to_value(ProgramJson::from(&c.program)).expect("program json"),
                witness_json(&c.program, &c.witness, c.trial),
            ),
            None => (Value::Null, Value::Null),
        };
        json!({
            "property": self.property.name(),
            "holds": self.holds,
            "trials": self.trials,
            "not_applicable": self.not_applicable,
            "counterexample": counterexample,
            "witness": witness,
        })
    }
}

fn witness_json(program: &Program, witness: &Witness, trial: Option<usize>) -> Value {
    let set = |x: &Interpretation| Value::from(program.names(x));
    let sets = |xs: &[Interpretation]| Value::from(xs.iter().map(set).collect::<Vec<_>>());
    let atom = |a: &Atom| Value::from(program.name(*a));
    let mut value = match witness {
        Witness::Cut {
            atom: a,
            answer_set,
        } => {
            json!({"kind": "cut", "atom": atom(a), "answer_set": set(answer_set)})
        }
        Witness::NewAnswerSet {
            added,
            answer_set,
            lost,
        } => json!({
            "kind": "new-answer-set",
            "added": atom(added),
            "answer_set": set(answer_set),
            "lost": set(lost),
        }),
        Witness::LostConsequences { added, lost } => {
            json!({"kind": "lost-consequences", "added": atom(added), "lost": set(lost)})
        }
        Witness::ChangedAnswerSets {
            added,
            gained,
            lost,
        } => json!({
            "kind": "changed-answer-sets",
            "added": atom(added),
            "gained": sets(gained),
            "lost": sets(lost),
        }),
        Witness::NoAnswerSet => json!({"kind": "no-answer-set"}),
        Witness::Dung {
            consequences,
            well_founded,
            inconsistent,
        } => json!({
            "kind": "dung",
            "consequences": set(consequences),
            "well_founded": set(well_founded),
            "inconsistent": inconsistent,
        }),
        Witness::SplittingMismatch { missing, extra } => {
            json!({"kind": "splitting-mismatch", "missing": sets(missing), "extra": sets(extra)})
        }
        Witness::OverlappingParts { solution } => {
            json!({"kind": "overlapping-parts", "solution": sets(&solution.parts)})
        }
        Witness::EvaluationOutsideComponent { layer, x } => {
            json!({"kind": "evaluation-outside-component", "layer": layer, "x": set(x)})
        }
        Witness::ComponentAtom { layer, atom: a } => {
            json!({"kind": "component-atom", "layer": layer, "atom": atom(a)})
        }
    };
    if let Some(trial) = trial {
        value["trial"] = Value::from(trial);
    }
    value
}

/// One-line human summary of a witness.
pub fn describe_witness(program: &Program, witness: &Witness) -> String {
    let set = |x: &Interpretation| format!("{{{}}}", program.names(x).join(", "));
    let sets = |xs: &[Interpretation]| xs.iter().map(set).collect::<Vec<_>>().join(" ");
    match witness {
        Witness::Cut { atom, answer_set } => format!(
            "{} is not an answer set after adding {}.",
            set(answer_set),
            program.name(*atom)
        ),
        Witness::NewAnswerSet {
            added,
            answer_set,
            lost,
        } => format!(
            "adding the fact {}. yields answer set {} that the program lacks; lost consequences {}",
            program.name(*added),
            set(answer_set),
            set(lost)
        ),
        Witness::LostConsequences { added, lost } => format!(
            "adding the fact {}. loses consequences {}",
            program.name(*added),
            set(lost)
        ),
        Witness::ChangedAnswerSets {
            added,
            gained,
            lost,
        } => format!(
            "adding {}. gains answer sets [{}] and loses [{}]",
            program.name(*added),
            sets(gained),
            sets(lost)
        ),
        Witness::NoAnswerSet => "order-consistent program has no answer set".into(),
        Witness::Dung {
            consequences,
            well_founded,
            inconsistent,
        } => format!(
            "consequences {} differ from well-founded atoms {}{}",
            set(consequences),
            set(well_founded),
            if *inconsistent {
                " (program inconsistent)"
            } else {
                ""
            }
        ),
        Witness::SplittingMismatch { missing, extra } => format!(
            "answer sets missing from solutions [{}]; assembled sets that are not answer sets [{}]",
            sets(missing),
            sets(extra)
        ),
        Witness::OverlappingParts { solution } => {
            format!("solution parts overlap: {}", sets(&solution.parts))
        }
        Witness::EvaluationOutsideComponent { layer, x } => format!(
            "partial evaluation at layer {layer} with X = {} leaves component {}",
            set(x),
            layer + 1
        ),
        Witness::ComponentAtom { layer, atom } => {
            format!(
                "atom {} of component {layer} lies outside its layer",
                program.name(*atom)
            )
        }
    }
}
