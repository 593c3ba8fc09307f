use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::lang::{is_atom_name, Interpretation, Program, Rule, SymbolTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleJson {
    pub head: String,
    pub neg: Vec<String>,
    pub pos: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgramJson {
    pub rules: Vec<RuleJson>,
}

impl From<&Program> for ProgramJson {
    fn from(program: &Program) -> Self {
        let symbols = program.symbols();
        let names = |atoms: &std::collections::BTreeSet<crate::lang::Atom>| {
            crate::lang::sorted_names(symbols, atoms.iter().copied())
        };
        ProgramJson {
            rules: program
                .canonical_rules()
                .into_iter()
                .map(|r| RuleJson {
                    head: symbols.name(r.head).to_owned(),
                    neg: names(&r.neg),
                    pos: names(&r.pos),
                })
                .collect(),
        }
    }
}

impl ProgramJson {
    /// Rebuilds a program, interning atoms in order of appearance. Returns
    /// the first illegal atom name on failure.
    pub fn to_program(&self) -> Result<Program, String> {
        let mut symbols = SymbolTable::new();
        let mut intern = |name: &str| {
            if is_atom_name(name) {
                Ok(symbols.intern(name))
            } else {
                Err(name.to_owned())
            }
        };
        let mut rules = Vec::with_capacity(self.rules.len());
        for r in &self.rules {
            let head = intern(&r.head)?;
            let pos = r
                .pos
                .iter()
                .map(|n| intern(n))
                .collect::<Result<Vec<_>, _>>()?;
            let neg = r
                .neg
                .iter()
                .map(|n| intern(n))
                .collect::<Result<Vec<_>, _>>()?;
            rules.push(Rule::new(head, pos, neg));
        }
        Ok(Program::new(Arc::new(symbols), rules))
    }
}

/// Canonical rendering: atoms sorted by name, rules sorted by head, then
/// positive body, then negated body.
pub fn serialize(program: &Program, format: Format) -> String {
    match format {
        Format::Text => program.to_string(),
        Format::Json => to_canonical_json(&ProgramJson::from(program)),
    }
}

/// Sorted array of atom names.
pub fn interpretation_json(program: &Program, x: &Interpretation) -> serde_json::Value {
    serde_json::Value::from(program.names(x))
}

/// Serializes through `serde_json::Value`, whose maps keep keys sorted, so
/// equal values always render to identical bytes.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("serializable value");
    serde_json::to_string(&value).expect("json rendering")
}
