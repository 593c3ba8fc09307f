use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::atom::{Atom, SymbolTable};

/// A finite set of atoms: a candidate answer set or a fixpoint iterate.
///
/// Ordering is lexicographic on the ascending atom ids, which is the
/// canonical order used for every enumerated family of interpretations.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interpretation(BTreeSet<Atom>);

impl Interpretation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, atom: Atom) -> bool {
        self.0.contains(&atom)
    }

    pub fn insert(&mut self, atom: Atom) -> bool {
        self.0.insert(atom)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Atom> + '_ {
        self.0.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<Atom> {
        &self.0
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &Interpretation) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &Interpretation) -> Interpretation {
        self.0.union(&other.0).copied().collect()
    }

    pub fn intersection(&self, other: &Interpretation) -> Interpretation {
        self.0.intersection(&other.0).copied().collect()
    }

    pub fn difference(&self, other: &Interpretation) -> Interpretation {
        self.0.difference(&other.0).copied().collect()
    }

    pub fn extend(&mut self, other: &Interpretation) {
        self.0.extend(other.iter());
    }
}

impl FromIterator<Atom> for Interpretation {
    fn from_iter<I: IntoIterator<Item = Atom>>(iter: I) -> Self {
        Interpretation(iter.into_iter().collect())
    }
}

impl From<BTreeSet<Atom>> for Interpretation {
    fn from(set: BTreeSet<Atom>) -> Self {
        Interpretation(set)
    }
}

impl IntoIterator for Interpretation {
    type Item = Atom;
    type IntoIter = std::collections::btree_set::IntoIter<Atom>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// `head <- pos, not neg`. `pos` and `neg` may overlap.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    pub head: Atom,
    pub pos: BTreeSet<Atom>,
    pub neg: BTreeSet<Atom>,
}

impl Rule {
    pub fn new(
        head: Atom,
        pos: impl IntoIterator<Item = Atom>,
        neg: impl IntoIterator<Item = Atom>,
    ) -> Self {
        Rule {
            head,
            pos: pos.into_iter().collect(),
            neg: neg.into_iter().collect(),
        }
    }

    pub fn fact(head: Atom) -> Self {
        Rule::new(head, [], [])
    }

    pub fn is_fact(&self) -> bool {
        self.pos.is_empty() && self.neg.is_empty()
    }

    /// `{head} ∪ pos ∪ neg`.
    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        std::iter::once(self.head)
            .chain(self.pos.iter().copied())
            .chain(self.neg.iter().copied())
    }

    /// Canonical text form: body atoms sorted by name, positive before negated.
    pub fn display<'a>(&'a self, symbols: &'a SymbolTable) -> impl fmt::Display + 'a {
        DisplayRule {
            rule: self,
            symbols,
        }
    }

    fn sort_key(&self, symbols: &SymbolTable) -> (String, Vec<String>, Vec<String>) {
        (
            symbols.name(self.head).to_owned(),
            sorted_names(symbols, self.pos.iter().copied()),
            sorted_names(symbols, self.neg.iter().copied()),
        )
    }
}

struct DisplayRule<'a> {
    rule: &'a Rule,
    symbols: &'a SymbolTable,
}

impl fmt::Display for DisplayRule<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (head, pos, neg) = self.rule.sort_key(self.symbols);
        f.write_str(&head)?;
        let body: Vec<String> = pos
            .into_iter()
            .chain(neg.into_iter().map(|n| format!("not {n}")))
            .collect();
        if !body.is_empty() {
            write!(f, " :- {}", body.join(", "))?;
        }
        f.write_str(".")
    }
}

pub(crate) fn sorted_names(
    symbols: &SymbolTable,
    atoms: impl Iterator<Item = Atom>,
) -> Vec<String> {
    let mut names: Vec<String> = atoms.map(|a| symbols.name(a).to_owned()).collect();
    names.sort();
    names
}

/// A normal logic program: a finite set of rules over a shared symbol table.
///
/// Programs derived from one another (`P ∪ {a ←}`, bottoms, reducts) share
/// the same table, so their interpretations are directly comparable.
#[derive(Debug, Clone)]
pub struct Program {
    symbols: Arc<SymbolTable>,
    rules: BTreeSet<Rule>,
}

impl Program {
    pub fn new(symbols: Arc<SymbolTable>, rules: impl IntoIterator<Item = Rule>) -> Self {
        let rules: BTreeSet<Rule> = rules.into_iter().collect();
        debug_assert!(rules
            .iter()
            .flat_map(Rule::atoms)
            .all(|a| a.index() < symbols.len()));
        Program { symbols, rules }
    }

    pub fn empty(symbols: Arc<SymbolTable>) -> Self {
        Program::new(symbols, [])
    }

    /// Parses the `.lp` text format. See [`crate::text::parse`].
    pub fn parse(text: &str) -> Result<Self, crate::text::ParseError> {
        crate::text::parse(text)
    }

    pub fn symbols(&self) -> &Arc<SymbolTable> {
        &self.symbols
    }

    pub fn rules(&self) -> impl ExactSizeIterator<Item = &Rule> + Clone {
        self.rules.iter()
    }

    pub fn contains(&self, rule: &Rule) -> bool {
        self.rules.contains(rule)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Builds another program over the same symbol table.
    pub fn derive(&self, rules: impl IntoIterator<Item = Rule>) -> Program {
        Program::new(Arc::clone(&self.symbols), rules)
    }

    /// `atoms(P)`: every atom occurring in some rule.
    pub fn atoms(&self) -> Interpretation {
        self.rules.iter().flat_map(Rule::atoms).collect()
    }

    pub fn heads(&self) -> Interpretation {
        self.rules.iter().map(|r| r.head).collect()
    }

    pub fn is_positive(&self) -> bool {
        self.rules.iter().all(|r| r.neg.is_empty())
    }

    /// `P ∪ {atom ←}`.
    pub fn with_fact(&self, atom: Atom) -> Program {
        let mut rules = self.rules.clone();
        rules.insert(Rule::fact(atom));
        Program {
            symbols: Arc::clone(&self.symbols),
            rules,
        }
    }

    pub fn without_rule(&self, rule: &Rule) -> Program {
        let mut rules = self.rules.clone();
        rules.remove(rule);
        Program {
            symbols: Arc::clone(&self.symbols),
            rules,
        }
    }

    pub fn atom(&self, name: &str) -> Option<Atom> {
        self.symbols.lookup(name)
    }

    /// Builds an interpretation from names. Panics on unknown names; meant
    /// for tests and literal examples.
    pub fn interpretation<S: AsRef<str>>(
        &self,
        names: impl IntoIterator<Item = S>,
    ) -> Interpretation {
        names
            .into_iter()
            .map(|n| {
                let n = n.as_ref();
                self.atom(n).unwrap_or_else(|| panic!("unknown atom `{n}`"))
            })
            .collect()
    }

    /// Atom names of `x`, sorted by name.
    pub fn names(&self, x: &Interpretation) -> Vec<String> {
        sorted_names(&self.symbols, x.iter())
    }

    pub fn name(&self, atom: Atom) -> &str {
        self.symbols.name(atom)
    }

    /// Rules in canonical order: by head name, then positive, then negated
    /// body names.
    pub fn canonical_rules(&self) -> Vec<&Rule> {
        let mut keyed: Vec<_> = self
            .rules
            .iter()
            .map(|r| (r.sort_key(&self.symbols), r))
            .collect();
        keyed.sort();
        keyed.into_iter().map(|(_, r)| r).collect()
    }

    fn named_rules(&self) -> BTreeSet<(String, Vec<String>, Vec<String>)> {
        self.rules
            .iter()
            .map(|r| r.sort_key(&self.symbols))
            .collect()
    }
}

/// Programs are equal when they contain the same rules by atom *name*, so
/// programs over different symbol tables compare meaningfully.
impl PartialEq for Program {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.symbols, &other.symbols) {
            self.rules == other.rules
        } else {
            self.named_rules() == other.named_rules()
        }
    }
}

impl Eq for Program {}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in self.canonical_rules() {
            writeln!(f, "{}", rule.display(&self.symbols))?;
        }
        Ok(())
    }
}
