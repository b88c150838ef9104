//! Graded Lie algebras: simplicity against enumeration, recognition, and
//! the characteristic-3 example.

mod common;

use common::{algebra_sum, oracle_graded_simple, small_corpus};
use gsla_core::action::Verdict;
use gsla_core::abgroup::FinAbGroup;
use gsla_core::catalog::{example0_algebra, loop_catalog, pauli_sl2, sl2, sl2_sum_ungraded, LOOP_GROUPS};
use gsla_core::exactfield::Field;
use gsla_core::liecore::{graded_simple_check, simplicity_certificate, verify_algebra, Simplicity};
use gsla_core::loopalg::{loop_algebra, loop_ideal_decomposition, recognize};
use gsla_core::{Error, Options};

#[test]
fn graded_simplicity_agrees_with_enumeration() {
    let opts = Options::default();
    for p in [5, 7] {
        let k = Field::prime(p).unwrap();
        for (name, g) in small_corpus(&k) {
            assert!(verify_algebra(&g).passes(), "{name}");
            let truth = oracle_graded_simple(&g);
            let v = graded_simple_check(&g, &opts);
            match &v {
                Verdict::GradedSimple(_) | Verdict::ProbablyGradedSimple { .. } => assert!(truth, "{name} mod {p}"),
                Verdict::NotGradedSimple { .. } => assert!(!truth, "{name} mod {p}"),
                Verdict::Inconclusive(r) => panic!("{name} mod {p}: {r}"),
            }
        }
    }
}

#[test]
fn corpus_has_both_verdicts() {
    let k = Field::prime(5).unwrap();
    let verdicts: Vec<bool> = small_corpus(&k).iter().map(|(_, g)| oracle_graded_simple(g)).collect();
    assert!(verdicts.iter().any(|&b| b) && verdicts.iter().any(|&b| !b));
}

#[test]
fn loop_algebras_are_graded_simple_but_split_ungraded() {
    let opts = Options::default();
    for e in loop_catalog(&LOOP_GROUPS).unwrap() {
        let g = loop_algebra(&e.q, &e.p, &e.a).unwrap().algebra;
        assert!(graded_simple_check(&g, &opts).is_graded_simple(), "{}", e.name);
        let s = simplicity_certificate(&g, &opts);
        if e.p.is_trivial() {
            assert!(matches!(s, Simplicity::SimpleCertified), "{}: {s:?}", e.name);
        } else {
            assert!(matches!(s, Simplicity::NotSimple(_)), "{}: {s:?}", e.name);
        }
    }
}

#[test]
fn recognize_rejects_what_is_not_graded_simple() {
    let k = Field::cyclotomic(4);
    let p = pauli_sl2(&k).unwrap();
    let pp = algebra_sum(&p, &p);
    assert!(matches!(recognize(&pp, &Options::default()), Err(Error::NotGradedSimple(_))));
    let ungraded = sl2_sum_ungraded(&k).unwrap();
    assert!(recognize(&ungraded, &Options::default()).is_err());
}

#[test]
fn example0_has_no_loop_presentation() {
    let l = example0_algebra(3).unwrap();
    assert!(verify_algebra(&l.algebra).passes());
    assert!(matches!(loop_ideal_decomposition(&l), Err(Error::NoSuchRoot { .. })));
    assert!(matches!(recognize(&l.algebra, &Options::default()), Err(Error::NoSuchRoot { .. })));
    // over F_7, which has cube roots of unity, g(Z3, Z3, sl2) splits into 3 copies
    let k = Field::prime(7).unwrap();
    let z3 = FinAbGroup::cyclic(3);
    let whole = z3.whole();
    let quo = z3.quotient_by(&whole).unwrap();
    let a = sl2(&k).unwrap().with_degrees(&quo, vec![quo.zero(); 3]).unwrap();
    let l7 = loop_algebra(&z3, &whole, &a).unwrap();
    assert_eq!(loop_ideal_decomposition(&l7).unwrap().len(), 3);
}
