use std::collections::HashMap;
use std::fmt;

/// An interned propositional atom. Ids are dense and assigned in interning
/// order, so they are only meaningful relative to one [`SymbolTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(u32);

impl Atom {
    pub fn from_index(index: usize) -> Self {
        Atom(u32::try_from(index).expect("atom index overflow"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Returns true if `name` is a legal atom token: `[a-z][a-zA-Z0-9_]*`,
/// excluding the keyword `not`.
pub fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    name != "not" && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Bijective map between atom names and dense ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolTable {
    names: Vec<String>,
    ids: HashMap<String, Atom>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Interns `name`, returning the existing id if it is already known.
    ///
    /// Panics if `name` is not a legal atom token.
    pub fn intern(&mut self, name: &str) -> Atom {
        if let Some(&atom) = self.ids.get(name) {
            return atom;
        }
        assert!(is_atom_name(name), "illegal atom name `{name}`");
        let atom = Atom::from_index(self.names.len());
        self.names.push(name.to_owned());
        self.ids.insert(name.to_owned(), atom);
        atom
    }

    pub fn lookup(&self, name: &str) -> Option<Atom> {
        self.ids.get(name).copied()
    }

    pub fn name(&self, atom: Atom) -> &str {
        &self.names[atom.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        (0..self.names.len()).map(Atom::from_index)
    }
}
