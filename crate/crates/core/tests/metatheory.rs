mod common;

use common::*;
use lpsem::lang::Limits;
use lpsem::metatheory::*;
use lpsem::text::to_canonical_json;

fn corpus() -> Vec<(&'static str, lpsem::Program)> {
    let dix = parse(DIX);
    let dix_c = dix.with_fact(dix.atom("c").unwrap());
    vec![
        ("dix", dix),
        ("dix+c", dix_c),
        ("p1", parse(P1)),
        ("p2", parse(P2)),
        ("odd", parse("a :- not a.")),
        ("fact", parse("c.")),
    ]
}

#[test]
fn fixed_corpus_verdicts() {
    let l = Limits::default();
    for (name, p) in corpus() {
        assert!(check_cut(&p, &l).unwrap().holds, "cut on {name}");
        let cm = check_cautious_monotonicity(&p, &l).unwrap();
        assert_eq!(cm.holds, name != "dix", "cautious monotonicity on {name}");
        let fages = check_fages(&p, &l).unwrap();
        assert!(fages.holds, "fages on {name}");
        let order_consistent = lpsem::analysis::find_level_mapping(&p).is_ok();
        assert_eq!(fages.applicable(), order_consistent, "{name}");
    }
}

#[test]
fn corpus_counterexamples_refail() {
    let l = Limits::default();
    for (_, p) in corpus() {
        for property in Property::ALL {
            let v = check(property, &p, &l).unwrap();
            if let Some(c) = &v.counterexample {
                assert!(outcome(property, &c.program, &l).unwrap().fails());
            }
        }
    }
}

#[test]
fn fuzz_is_deterministic() {
    let cfg = GeneratorConfig {
        atom_count: 4,
        rule_count: 5,
        seed: 99,
        ..Default::default()
    };
    let l = Limits::default();
    let a = fuzz(Property::CautiousMonotonicity, &cfg, 2000, &l).unwrap();
    let b = fuzz(Property::CautiousMonotonicity, &cfg, 2000, &l).unwrap();
    assert_eq!(
        to_canonical_json(&a.to_json()),
        to_canonical_json(&b.to_json())
    );
}

#[test]
fn fuzzed_counterexamples_refail_after_shrinking() {
    let l = Limits::default();
    for property in [
        Property::CautiousMonotonicity,
        Property::CautiousMonotonicityCn,
        Property::Cumulativity,
    ] {
        let cfg = GeneratorConfig {
            atom_count: 4,
            rule_count: 6,
            seed: 5,
            ..Default::default()
        };
        let v = fuzz(property, &cfg, 20_000, &l).unwrap();
        let c = v
            .counterexample
            .expect("mode=any fuzzing finds a violation");
        assert!(!v.holds);
        assert!(
            outcome(property, &c.program, &l).unwrap().fails(),
            "{property}"
        );
        // no single rule can be dropped without losing the failure
        for r in c.program.rules() {
            assert!(!outcome(property, &c.program.without_rule(r), &l)
                .unwrap()
                .fails());
        }
    }
}

#[test]
fn signed_mode_suites() {
    let cfg = GeneratorConfig::default()
        .with_mode(Mode::Signed)
        .with_seed(17);
    let l = Limits::default();
    for property in [Property::Dung, Property::SigningLemma, Property::Schlipf] {
        let v = fuzz(property, &cfg, 300, &l).unwrap();
        assert!(v.holds, "{property}: {:?}", v.counterexample);
        assert_eq!(v.not_applicable, 0);
    }
}

#[test]
fn verdict_json_schema() {
    let p = parse(DIX);
    let v = check_cautious_monotonicity(&p, &Limits::default()).unwrap();
    let json = to_canonical_json(&v.to_json());
    assert_eq!(
        json,
        concat!(
            r#"{"counterexample":{"rules":[{"head":"a","neg":["b"],"pos":[]},{"head":"b","neg":["a"],"pos":["c"]},{"head":"c","neg":[],"pos":["a"]}]},"#,
            r#""holds":false,"not_applicable":0,"property":"cautious-monotonicity","trials":1,"#,
            r#""witness":{"added":"c","answer_set":["b","c"],"kind":"new-answer-set","lost":["a"]}}"#
        )
    );
    let ok = check_cut(&p, &Limits::default()).unwrap();
    assert_eq!(ok.to_json()["counterexample"], serde_json::Value::Null);
}

#[test]
fn property_names_parse() {
    for p in Property::ALL {
        assert_eq!(p.name().parse::<Property>().unwrap(), p);
    }
    assert!("nonsense".parse::<Property>().is_err());
}
