use crate::analysis::{dependency_components, find_level_mapping, find_signing};
use crate::error::{Error, Result};
use crate::lang::{Interpretation, Program, Rule};

/// `U` is a splitting set iff every rule with its head in `U` lies entirely in `U`.
pub fn is_splitting_set(u: &Interpretation, program: &Program) -> bool {
    program
        .rules()
        .filter(|r| u.contains(r.head))
        .all(|r| r.atoms().all(|a| u.contains(a)))
}

fn inside(u: &Interpretation, r: &Rule) -> bool {
    r.atoms().all(|a| u.contains(a))
}

/// `b_U(P)`: the rules whose atoms all lie in `U`.
pub fn bottom(u: &Interpretation, program: &Program) -> Program {
    program.derive(program.rules().filter(|r| inside(u, r)).cloned())
}

/// `P \ b_U(P)`.
pub fn top(u: &Interpretation, program: &Program) -> Program {
    program.derive(program.rules().filter(|r| !inside(u, r)).cloned())
}

/// `e_U(P, X)`: keeps each rule with `pos ∩ U ⊆ X` and `neg ∩ X = ∅`, then
/// drops its subgoals in `U`. `program` is expected to be a top part.
pub fn evaluate(u: &Interpretation, program: &Program, x: &Interpretation) -> Program {
    program.derive(
        program
            .rules()
            .filter(|r| {
                r.pos.iter().all(|&b| !u.contains(b) || x.contains(b))
                    && r.neg.iter().all(|&b| !x.contains(b))
            })
            .map(|r| Rule {
                head: r.head,
                pos: r.pos.iter().copied().filter(|&b| !u.contains(b)).collect(),
                neg: r.neg.iter().copied().filter(|&b| !u.contains(b)).collect(),
            }),
    )
}

/// `rm(P, X)`: every subgoal in `X` removed from every rule.
pub fn remove_subgoals(program: &Program, x: &Interpretation) -> Program {
    program.derive(program.rules().map(|r| Rule {
        head: r.head,
        pos: r.pos.iter().copied().filter(|&b| !x.contains(b)).collect(),
        neg: r.neg.iter().copied().filter(|&b| !x.contains(b)).collect(),
    }))
}

/// A finite splitting sequence `⟨U_0, …, U_{μ-1}⟩`.
///
/// Only finite sequences exist here, so continuity at limit ordinals holds
/// vacuously. The invariants depend on the program, so they are checked by
/// [`SplittingSequence::validate`] rather than at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingSequence {
    layers: Vec<Interpretation>,
}

impl SplittingSequence {
    pub fn new(layers: Vec<Interpretation>) -> Self {
        SplittingSequence { layers }
    }

    /// The one-layer sequence `⟨atoms(P)⟩`.
    pub fn trivial(program: &Program) -> Self {
        SplittingSequence::new(vec![program.atoms()])
    }

    pub fn layers(&self) -> &[Interpretation] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// The same sequence with `∅` inserted in front.
    pub fn prefixed_with_empty(&self) -> Self {
        let mut layers = Vec::with_capacity(self.layers.len() + 1);
        layers.push(Interpretation::new());
        layers.extend(self.layers.iter().cloned());
        SplittingSequence::new(layers)
    }

    pub fn validate(&self, program: &Program) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidSequence(msg));
        let Some(last) = self.layers.last() else {
            return invalid("sequence is empty".into());
        };
        for (i, u) in self.layers.iter().enumerate() {
            if !is_splitting_set(u, program) {
                return invalid(format!("U_{i} is not a splitting set"));
            }
            if i > 0 && !self.layers[i - 1].is_subset(u) {
                return invalid(format!("U_{} is not contained in U_{i}", i - 1));
            }
        }
        if *last != program.atoms() {
            return invalid("the union of the layers is not atoms(P)".into());
        }
        Ok(())
    }

    /// The rules `b_{U_{α+1}}(P) \ b_{U_α}(P)` added by layer `α + 1`.
    pub fn layer_top(&self, program: &Program, alpha: usize) -> Program {
        top(
            &self.layers[alpha],
            &bottom(&self.layers[alpha + 1], program),
        )
    }

    /// The program whose answer sets are the candidates for `X_{α+1}`, given
    /// the union `x` of the earlier parts.
    pub fn layer_program(&self, program: &Program, alpha: usize, x: &Interpretation) -> Program {
        evaluate(&self.layers[alpha], &self.layer_top(program, alpha), x)
    }
}

/// `b_{U_0}(P)` followed by `rm(b_{U_{α+1}}(P) \ b_{U_α}(P), U_α)` per layer.
pub fn u_components(program: &Program, u: &SplittingSequence) -> Result<Vec<Program>> {
    u.validate(program)?;
    let layers = u.layers();
    let mut out = vec![bottom(&layers[0], program)];
    for (alpha, layer) in layers[..layers.len() - 1].iter().enumerate() {
        out.push(remove_subgoals(&u.layer_top(program, alpha), layer));
    }
    Ok(out)
}

/// Cumulative unions of the dependency components, dependencies first.
/// Always a valid splitting sequence.
pub fn component_sequence(program: &Program) -> SplittingSequence {
    let mut acc = Interpretation::new();
    let mut layers = Vec::new();
    for c in dependency_components(program) {
        acc.extend(&c);
        layers.push(acc.clone());
    }
    if layers.is_empty() {
        layers.push(Interpretation::new());
    }
    SplittingSequence::new(layers)
}

/// A splitting sequence whose components are all signed, for an
/// order-consistent program.
pub fn build_signed_splitting_sequence(program: &Program) -> Result<SplittingSequence> {
    if let Err(cycle) = find_level_mapping(program) {
        return Err(Error::NotOrderConsistent {
            cycle: cycle
                .0
                .iter()
                .map(|&a| program.name(a).to_owned())
                .collect(),
        });
    }
    let seq = component_sequence(program);
    for (layer, component) in u_components(program, &seq)?.iter().enumerate() {
        if find_signing(component).is_none() {
            return Err(Error::InternalDecompositionFailure { layer });
        }
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P1: &str = "a :- not b. b :- not a.";
    const P2: &str = "a :- not b. b :- not a. c :- a. c :- b.";

    fn p2() -> Program {
        Program::parse(P2).unwrap()
    }

    fn seq(p: &Program, layers: &[&[&str]]) -> SplittingSequence {
        SplittingSequence::new(layers.iter().map(|l| p.interpretation(l.iter())).collect())
    }

    #[test]
    fn splitting_sets_of_p2() {
        let p = p2();
        assert!(is_splitting_set(&p.interpretation(["a", "b"]), &p));
        assert!(is_splitting_set(&Interpretation::new(), &p));
        assert!(is_splitting_set(&p.atoms(), &p));
        assert!(!is_splitting_set(&p.interpretation(["a"]), &p));
    }

    #[test]
    fn bottoms() {
        let p = p2();
        assert_eq!(
            bottom(&p.interpretation(["a", "b"]), &p),
            Program::parse(P1).unwrap()
        );
        assert!(bottom(&Interpretation::new(), &p).is_empty());
        assert_eq!(bottom(&p.atoms(), &p), p);
    }

    #[test]
    fn partial_evaluation_of_p2() {
        let p = p2();
        let u = p.interpretation(["a", "b"]);
        let t = top(&u, &p);
        let fact_c = Program::parse("c.").unwrap();
        assert_eq!(evaluate(&u, &t, &p.interpretation(["a"])), fact_c);
        assert_eq!(evaluate(&u, &t, &p.interpretation(["b"])), fact_c);
        assert!(evaluate(&u, &t, &Interpretation::new()).is_empty());
        assert_eq!(
            evaluate(&Interpretation::new(), &p, &Interpretation::new()),
            p
        );
    }

    #[test]
    fn rm_examples() {
        let p = Program::parse("c :- a. c :- b.").unwrap();
        assert_eq!(
            remove_subgoals(&p, &p.interpretation(["a", "b"])),
            Program::parse("c.").unwrap()
        );
        assert_eq!(remove_subgoals(&p, &Interpretation::new()), p);
        let q = Program::parse("b :- c, not a.").unwrap();
        assert_eq!(
            remove_subgoals(&q, &q.interpretation(["c"])),
            Program::parse("b :- not a.").unwrap()
        );
    }

    #[test]
    fn components_of_p2() {
        let p = p2();
        let u = seq(&p, &[&["a", "b"], &["a", "b", "c"]]);
        let comps = u_components(&p, &u).unwrap();
        assert_eq!(
            comps,
            vec![Program::parse(P1).unwrap(), Program::parse("c.").unwrap()]
        );
        assert_eq!(
            u_components(&p, &SplittingSequence::trivial(&p)).unwrap(),
            vec![p.clone()]
        );
    }

    #[test]
    fn components_of_positive_chain() {
        let p = Program::parse("a. c :- a.").unwrap();
        let u = seq(&p, &[&["a"], &["a", "c"]]);
        assert_eq!(
            u_components(&p, &u).unwrap(),
            vec![Program::parse("a.").unwrap(), Program::parse("c.").unwrap()]
        );
    }

    #[test]
    fn invalid_sequences_rejected() {
        let p = p2();
        let bad = [
            SplittingSequence::new(vec![]),
            seq(&p, &[&["a"], &["a", "b", "c"]]),
            seq(&p, &[&["a", "b"]]),
            seq(&p, &[&["a", "b", "c"], &["a", "b"]]),
        ];
        for u in bad {
            assert!(
                matches!(u_components(&p, &u), Err(Error::InvalidSequence(_))),
                "{u:?}"
            );
        }
    }

    #[test]
    fn signed_sequence_builder() {
        let p = p2();
        let u = build_signed_splitting_sequence(&p).unwrap();
        assert_eq!(u, seq(&p, &[&["a", "b"], &["a", "b", "c"]]));
        let p1 = Program::parse(P1).unwrap();
        assert_eq!(
            build_signed_splitting_sequence(&p1).unwrap(),
            seq(&p1, &[&["a", "b"]])
        );
        let dix = Program::parse("a :- not b. b :- c, not a. c :- a.").unwrap();
        assert_eq!(
            build_signed_splitting_sequence(&dix),
            Err(Error::NotOrderConsistent {
                cycle: vec!["a".into()]
            })
        );
    }

    #[test]
    fn empty_program_sequence() {
        let p = Program::parse("").unwrap();
        let u = build_signed_splitting_sequence(&p).unwrap();
        assert_eq!(u.layers(), &[Interpretation::new()]);
        assert_eq!(u_components(&p, &u).unwrap(), vec![p]);
    }

    #[test]
    fn prefixing_keeps_validity() {
        let p = p2();
        let u = build_signed_splitting_sequence(&p)
            .unwrap()
            .prefixed_with_empty();
        assert_eq!(u.len(), 3);
        u.validate(&p).unwrap();
    }
}
