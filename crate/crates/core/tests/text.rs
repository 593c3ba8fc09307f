mod common;

use common::*;
use lpsem::text::{parse, serialize, Format, ProgramJson};
use proptest::prelude::*;

#[test]
fn dix_text_transliteration() {
    let p = parse("a :- not b.\nb :- c, not a.\nc :- a.").unwrap();
    assert_eq!(
        serialize(&p, Format::Text),
        "a :- not b.\nb :- c, not a.\nc :- a.\n"
    );
}

proptest! {
    #[test]
    fn text_round_trip(p in arb_program(8, 12)) {
        let text = serialize(&p, Format::Text);
        let q = parse(&text).unwrap();
        prop_assert_eq!(&q, &p);
        prop_assert_eq!(serialize(&q, Format::Text), text);
    }

    #[test]
    fn json_round_trip(p in arb_program(8, 12)) {
        let json = serialize(&p, Format::Json);
        let back: ProgramJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_program().unwrap(), p);
    }
}
