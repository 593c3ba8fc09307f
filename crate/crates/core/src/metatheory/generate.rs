use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{find_signing, is_call_consistent, is_stratified};
use crate::error::{Error, Result};
use crate::lang::{Atom, Program, Rule, SymbolTable};

/// The class of programs a generator samples from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Any,
    Positive,
    Signed,
    CallConsistent,
    Stratified,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Any => "any",
            Mode::Positive => "positive",
            Mode::Signed => "signed",
            Mode::CallConsistent => "call-consistent",
            Mode::Stratified => "stratified",
        }
    }

    fn accepts(self, program: &Program) -> bool {
        match self {
            Mode::Any | Mode::Positive => true,
            Mode::Signed => find_signing(program).is_some(),
            Mode::CallConsistent => is_call_consistent(program),
            Mode::Stratified => is_stratified(program),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.replace('_', "-");
        [
            Mode::Any,
            Mode::Positive,
            Mode::Signed,
            Mode::CallConsistent,
            Mode::Stratified,
        ]
        .into_iter()
        .find(|m| m.name() == s)
        .ok_or_else(|| format!("unknown mode `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    /// Size of the atom universe `a0 … a{n-1}`.
    pub atom_count: usize,
    /// Upper bound on the number of rules drawn per program.
    pub rule_count: usize,
    pub max_pos: usize,
    pub max_neg: usize,
    pub mode: Mode,
    pub seed: u64,
    pub max_rejections: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            atom_count: 8,
            rule_count: 14,
            max_pos: 2,
            max_neg: 2,
            mode: Mode::Any,
            seed: 0,
            max_rejections: 100_000,
        }
    }
}

impl GeneratorConfig {
    pub fn with_mode(self, mode: Mode) -> Self {
        GeneratorConfig { mode, ..self }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        GeneratorConfig { seed, ..self }
    }

    fn validate(&self) -> Result<()> {
        let invalid = |msg: &str| Err(Error::InvalidConfig(msg.into()));
        if self.atom_count == 0 {
            return invalid("atom count must be positive");
        }
        if self.rule_count == 0 {
            return invalid("rule count must be positive");
        }
        if self.max_rejections == 0 {
            return invalid("rejection budget must be positive");
        }
        Ok(())
    }
}

/// Draws a random program. The result depends only on `config`.
///
/// Each program gets between 1 and `rule_count` rules; each rule draws its
/// head uniformly and then positive and negated subgoal sets, each of a
/// uniform size up to its maximum, without replacement. Constrained modes
/// redraw until the matching classifier accepts the program.
pub fn generate(config: &GeneratorConfig) -> Result<Program> {
    config.validate()?;
    let mut symbols = SymbolTable::new();
    for i in 0..config.atom_count {
        symbols.intern(&format!("a{i}"));
    }
    let symbols = Arc::new(symbols);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let max_neg = if config.mode == Mode::Positive {
        0
    } else {
        config.max_neg
    };
    for _ in 0..config.max_rejections {
        let program = draw(&mut rng, &symbols, config, max_neg);
        if config.mode.accepts(&program) {
            return Ok(program);
        }
    }
    Err(Error::GenerationExhausted {
        rejections: config.max_rejections,
    })
}

fn draw(
    rng: &mut ChaCha8Rng,
    symbols: &Arc<SymbolTable>,
    config: &GeneratorConfig,
    max_neg: usize,
) -> Program {
    let n = config.atom_count;
    let subgoals = |rng: &mut ChaCha8Rng, max: usize| -> Vec<Atom> {
        let k = rng.random_range(0..=max.min(n));
        sample(rng, n, k)
            .into_iter()
            .map(Atom::from_index)
            .collect()
    };
    let rules = rng.random_range(1..=config.rule_count);
    let rules: Vec<Rule> = (0..rules)
        .map(|_| {
            let head = Atom::from_index(rng.random_range(0..n));
            let pos = subgoals(rng, config.max_pos);
            let neg = subgoals(rng, max_neg);
            Rule::new(head, pos, neg)
        })
        .collect();
    Program::new(Arc::clone(symbols), rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::is_call_consistent;

    #[test]
    fn deterministic_in_seed() {
        let cfg = GeneratorConfig::default().with_seed(42);
        assert_eq!(generate(&cfg).unwrap(), generate(&cfg).unwrap());
        let other = generate(&cfg.clone().with_seed(43)).unwrap();
        assert_ne!(generate(&cfg).unwrap(), other);
    }

    #[test]
    fn modes_are_respected() {
        for seed in 0..50 {
            let base = GeneratorConfig::default().with_seed(seed);
            assert!(generate(&base.clone().with_mode(Mode::Positive))
                .unwrap()
                .is_positive());
            assert!(
                find_signing(&generate(&base.clone().with_mode(Mode::Signed)).unwrap()).is_some()
            );
            assert!(is_call_consistent(
                &generate(&base.clone().with_mode(Mode::CallConsistent)).unwrap()
            ));
            assert!(is_stratified(
                &generate(&base.clone().with_mode(Mode::Stratified)).unwrap()
            ));
        }
    }

    #[test]
    fn shape_bounds() {
        let cfg = GeneratorConfig {
            atom_count: 5,
            rule_count: 6,
            max_pos: 1,
            max_neg: 3,
            ..Default::default()
        };
        for seed in 0..100 {
            let p = generate(&cfg.clone().with_seed(seed)).unwrap();
            assert!((1..=6).contains(&p.len()));
            assert!(p.atoms().len() <= 5);
            assert!(p.rules().all(|r| r.pos.len() <= 1 && r.neg.len() <= 3));
        }
    }

    #[test]
    fn exhausted_budget() {
        // One atom, one rule: `a0 :- not a0.` is never signed, `a0.` always is.
        let cfg = GeneratorConfig {
            atom_count: 1,
            rule_count: 1,
            max_pos: 0,
            max_neg: 1,
            mode: Mode::Signed,
            seed: 0,
            max_rejections: 3,
        };
        let outcomes: Vec<_> = (0..20)
            .map(|s| generate(&cfg.clone().with_seed(s)))
            .collect();
        assert!(outcomes
            .iter()
            .any(|r| matches!(r, Err(Error::GenerationExhausted { rejections: 3 }))));
        assert!(outcomes.iter().any(|r| r.is_ok()));
    }

    #[test]
    fn invalid_config() {
        let cfg = GeneratorConfig {
            atom_count: 0,
            ..Default::default()
        };
        assert!(matches!(generate(&cfg), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn mode_names_round_trip() {
        for m in [
            Mode::Any,
            Mode::Positive,
            Mode::Signed,
            Mode::CallConsistent,
            Mode::Stratified,
        ] {
            assert_eq!(m.name().parse::<Mode>(), Ok(m));
        }
        assert_eq!("call_consistent".parse::<Mode>(), Ok(Mode::CallConsistent));
        assert!("bogus".parse::<Mode>().is_err());
    }
}
