//! Graded modules: simplicity against enumeration, reconstruction round
//! trips, Schur and Weyl on catalog modules.

mod common;

use common::{ge, projective_points};
use gsla_core::catalog::{
    adjoint_module, diagonal_module, direct_sum_modules, ex1, matrix2_module, pair_module, pauli_sl2, shift_module,
    sl2_irrep, trivial_module,
};
use gsla_core::exactfield::{Field, Subspace};
use gsla_core::gradedmod::{
    graded_simple_module_check, reconstruct_module, schur_report, submodule_closure, verify_module, weyl_decompose,
    GradedModule,
};
use gsla_core::action::Verdict;
use gsla_core::Options;

/// Graded simplicity by enumerating homogeneous vectors over `F_p`.
fn oracle_module_graded_simple(w: &GradedModule) -> bool {
    let field = w.field();
    let p = field.characteristic();
    let n = w.dim();
    let acts = (0..w.algebra().dim()).any(|i| (0..n).any(|j| !w.action_entry(i, j).is_empty()));
    if !acts {
        return false;
    }
    for (_, idx) in w.action().components() {
        for point in projective_points(p, idx.len()) {
            let mut v = vec![field.zero(); n];
            for (&i, &c) in idx.iter().zip(&point) {
                v[i] = field.from_i64(c as i64);
            }
            if !submodule_closure(w, &Subspace::from_vectors(field, n, vec![v])).is_full() {
                return false;
            }
        }
    }
    true
}

fn finite_field_modules(k: &Field) -> Vec<(&'static str, GradedModule)> {
    let m = matrix2_module(k).unwrap();
    let ad = adjoint_module(&pauli_sl2(k).unwrap()).unwrap();
    vec![
        ("matrix2", m.clone()),
        ("matrix2+matrix2", direct_sum_modules(&m, &m).unwrap()),
        ("matrix2+trivial", direct_sum_modules(&m, &trivial_module(m.algebra(), 1, &m.group().zero()).unwrap()).unwrap()),
        ("adjoint", ad.clone()),
        ("shifted adjoint", shift_module(&ad, &ge(&[1, 1])).unwrap()),
        ("irrep 1", sl2_irrep(k, 1).unwrap()),
        ("irrep 2", sl2_irrep(k, 2).unwrap()),
        ("pair(1,0)", pair_module(k, 1, 0).unwrap()),
        ("pair(1,1)", pair_module(k, 1, 1).unwrap()),
        ("diagonal(1)", diagonal_module(k, 1).unwrap()),
    ]
}

#[test]
fn module_checks_agree_with_enumeration() {
    let opts = Options::default();
    for p in [5, 13] {
        let k = Field::prime(p).unwrap();
        for (name, w) in finite_field_modules(&k) {
            assert!(verify_module(&w).passes(), "{name}");
            let truth = oracle_module_graded_simple(&w);
            match graded_simple_module_check(&w, &opts) {
                Verdict::GradedSimple(_) | Verdict::ProbablyGradedSimple { .. } => assert!(truth, "{name} mod {p}"),
                Verdict::NotGradedSimple { witness, .. } => {
                    assert!(!truth, "{name} mod {p}");
                    if let Some(s) = witness {
                        assert!(w.action().is_invariant(&s) && !s.is_full() && !s.is_zero(), "{name}: bad witness");
                    }
                }
                Verdict::Inconclusive(r) => panic!("{name} mod {p}: {r}"),
            }
        }
    }
}

#[test]
fn reconstruction_round_trips_through_the_loop_module() {
    let k = Field::cyclotomic(4);
    let opts = Options::default();
    for w in [matrix2_module(&k).unwrap(), pair_module(&k, 1, 0).unwrap(), ex1().unwrap().w] {
        let rec = reconstruct_module(&w, &opts).unwrap();
        assert!(rec.certified(), "{:?}", rec.certificates);
        assert_eq!(rec.v.dim() * rec.choice.p.order(), w.dim());
        let again = reconstruct_module(&rec.loop_module.module, &opts).unwrap();
        assert!(again.certified());
        assert_eq!(again.choice.p.order(), rec.choice.p.order());
        assert_eq!(again.v.dim(), rec.v.dim());
    }
}

#[test]
fn schur_rejects_reducible_modules() {
    let k = Field::cyclotomic(4);
    let m = matrix2_module(&k).unwrap();
    let mm = direct_sum_modules(&m, &m).unwrap();
    assert!(schur_report(&mm, &Options::default()).is_err());
    let r = schur_report(&m, &Options::default()).unwrap();
    assert!(r.scalar_only);
    // nonzero degrees carry the rest of the graded endomorphisms
    assert!(r.per_degree.iter().filter(|d| d.dim > 0).count() > 1);
}

#[test]
fn weyl_on_irreps_and_shifts() {
    let q = Field::rationals();
    let opts = Options::default();
    let w = direct_sum_modules(
        &direct_sum_modules(&sl2_irrep(&q, 0).unwrap(), &sl2_irrep(&q, 1).unwrap()).unwrap(),
        &sl2_irrep(&q, 3).unwrap(),
    )
    .unwrap();
    let mut dims: Vec<usize> = weyl_decompose(&w, &opts).unwrap().iter().map(Subspace::dim).collect();
    dims.sort();
    assert_eq!(dims, vec![1, 2, 4]);

    let k = Field::cyclotomic(4);
    let ad = adjoint_module(&pauli_sl2(&k).unwrap()).unwrap();
    let three = direct_sum_modules(&direct_sum_modules(&ad, &ad).unwrap(), &shift_module(&ad, &ge(&[0, 1])).unwrap()).unwrap();
    let parts = weyl_decompose(&three, &opts).unwrap();
    assert_eq!(parts.len(), 3);
    assert!(parts.iter().all(|s| s.dim() == 3));
}

#[test]
fn weyl_needs_a_semisimple_algebra() {
    let e = ex1().unwrap();
    assert!(matches!(weyl_decompose(&e.w, &Options::default()), Err(gsla_core::Error::NotSemisimple(_))));
}
