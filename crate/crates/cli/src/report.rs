use serde_json::Value;

use lpsem::lang::{Interpretation, Program};

pub struct Output {
    pub json: bool,
}

impl Output {
    pub fn json(&self, value: &Value) {
        println!("{}", lpsem::text::to_canonical_json(value));
    }
}

pub fn set(program: &Program, x: &Interpretation) -> String {
    format!("{{{}}}", program.names(x).join(", "))
}

pub fn set_json(program: &Program, x: &Interpretation) -> Value {
    lpsem::text::interpretation_json(program, x)
}

pub fn sets_json(program: &Program, xs: &[Interpretation]) -> Value {
    Value::from(xs.iter().map(|x| set_json(program, x)).collect::<Vec<_>>())
}

/// Sorts interpretations by their sorted name lists, the order used in output.
pub fn by_name(program: &Program, xs: &mut [Interpretation]) {
    xs.sort_by_cached_key(|x| program.names(x));
}

pub fn sequence(program: &Program, layers: &[Interpretation]) -> String {
    let parts: Vec<String> = layers.iter().map(|u| set(program, u)).collect();
    format!("<{}>", parts.join(", "))
}

pub fn indented(program: &Program) -> String {
    program
        .to_string()
        .lines()
        .map(|l| format!("  {l}\n"))
        .collect()
}
