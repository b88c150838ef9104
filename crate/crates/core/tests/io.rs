//! JSON round trips for every catalog entry and diagnostics for malformed input.

use gsla_core::catalog::{build, Built, Params, ENTRIES};
use gsla_core::abgroup::GroupElem;
use gsla_core::io::{algebra_to_json, module_to_json, parse_algebra, parse_loop_build, parse_module};
use gsla_core::Error;

fn params() -> Params {
    Params {
        n: Some(2),
        h1: Some(1),
        h2: Some(0),
        moduli: Some(vec![2, 4]),
        p_gens: vec![GroupElem::new(vec![0, 2])],
        ..Params::default()
    }
}

#[test]
fn catalog_entries_round_trip() {
    for (name, _, _) in ENTRIES {
        match build(name, &params()).unwrap() {
            Built::Algebra(g) => {
                let text = serde_json::to_string(&algebra_to_json(&g)).unwrap();
                let back = parse_algebra(&text).unwrap();
                assert!(back.same_structure(&g) && back.field() == g.field(), "{name}");
                assert_eq!(back.group(), g.group(), "{name}");
            }
            Built::Module(w) => {
                let text = serde_json::to_string(&module_to_json(&w)).unwrap();
                let back = parse_module(&text).unwrap();
                assert_eq!(back.degrees(), w.degrees(), "{name}");
                assert_eq!(back.group(), w.group(), "{name}");
                assert!(back.algebra().same_structure(w.algebra()), "{name}");
                for i in 0..w.algebra().dim() {
                    for j in 0..w.dim() {
                        assert_eq!(back.action_entry(i, j), w.action_entry(i, j), "{name}");
                    }
                }
            }
            Built::LoopRequest(..) => {}
        }
    }
}

fn invalid(text: &str) -> String {
    match parse_algebra(text) {
        Err(Error::InvalidInput(m)) => m,
        other => panic!("expected invalid input, got {other:?}"),
    }
}

#[test]
fn diagnostics_name_the_path() {
    let ok = r#"{"format":1,"field":{"kind":"rationals"},"group":{"moduli":[2]},"dim":2,
                "degrees":[[0],[1]],"brackets":[{"i":0,"j":1,"coeffs":[{"k":1,"c":"1"}]}]}"#;
    assert_eq!(parse_algebra(ok).unwrap().dim(), 2);
    assert!(invalid(&ok.replace(r#""format":1"#, r#""format":2"#)).contains("$.format"));
    assert!(invalid(&ok.replace(r#""dim":2"#, r#""dim":-2"#)).contains("$.dim"));
    assert!(invalid(&ok.replace(r#"[[0],[1]]"#, r#"[[0],[2]]"#)).contains("$.degrees[1]"));
    assert!(invalid(&ok.replace(r#""k":1"#, r#""k":7"#)).contains("$.brackets[0]"));
    assert!(invalid(&ok.replace(r#""c":"1""#, r#""c":"1/0""#)).contains("$.brackets[0]"));
    assert!(invalid(&ok.replace(r#""dim":2"#, r#""dim":2,"extra":true"#)).contains("extra"));
}

#[test]
fn loop_request_parses() {
    let Built::LoopRequest(q, p, a) = build("loop-request", &params()).unwrap() else { panic!() };
    let text = format!(
        r#"{{"format":1,"group":{},"P":[[0,2]],"a":{}}}"#,
        serde_json::to_string(&gsla_core::io::group_to_json(&q)).unwrap(),
        serde_json::to_string(&algebra_to_json(&a)).unwrap()
    );
    let (q2, p2, a2) = parse_loop_build(&text).unwrap();
    assert_eq!((q2, p2.elements().to_vec()), (q, p.elements().to_vec()));
    assert!(a2.same_structure(&a));
}
