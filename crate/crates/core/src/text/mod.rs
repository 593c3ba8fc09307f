//! The `.lp` text format and the JSON report schema.

mod parse;
mod serialize;

pub use parse::{parse, ParseError};
pub use serialize::{
    interpretation_json, serialize, to_canonical_json, Format, ProgramJson, RuleJson,
};
