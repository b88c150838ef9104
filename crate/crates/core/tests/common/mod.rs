//! Brute-force oracles and the small-algebra corpus shared by the
//! integration suites.
#![allow(dead_code)]

use gsla_core::abgroup::{FinAbGroup, GroupElem};
use gsla_core::catalog::{cartan_sl2, pauli_sl2, sl2, sl2_gradings, sl2_pair, sl2_sum_ungraded};
use gsla_core::exactfield::{Field, FieldElem};
use gsla_core::liecore::GradedLieAlgebra;
use gsla_core::loopalg::loop_algebra;

pub fn ge(c: &[u64]) -> GroupElem {
    GroupElem::new(c.to_vec())
}

/// Every element of `F_p^d` whose first nonzero coordinate is 1.
pub fn projective_points(p: u64, d: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for lead in 0..d {
        let free = d - lead - 1;
        for mut k in 0..p.pow(free as u32) {
            let mut v = vec![0; d];
            v[lead] = 1;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = k % p;
                k /= p;
            }
            out.push(v);
        }
    }
    out
}

/// Graded simplicity by enumeration over a prime field: `g` is graded simple
/// iff it is not abelian and every nonzero homogeneous element generates
/// all of `g` as an ideal (every nonzero graded ideal contains such an
/// element, and the ideal it generates is graded).
pub fn oracle_graded_simple(g: &GradedLieAlgebra) -> bool {
    let field = g.field();
    let p = field.characteristic();
    assert!(p > 0, "the oracle enumerates vectors over a prime field");
    if g.is_abelian() {
        return false;
    }
    let n = g.dim();
    for alpha in g.grading_support() {
        let idx = g.component(&alpha);
        for point in projective_points(p, idx.len()) {
            let mut v = vec![field.zero(); n];
            for (&i, &c) in idx.iter().zip(&point) {
                v[i] = field.from_i64(c as i64);
            }
            let s = gsla_core::exactfield::Subspace::from_vectors(field, n, vec![v]);
            if !g.ideal_closure(&s).is_full() {
                return false;
            }
        }
    }
    true
}

/// `g ⊕ h`, both graded by the same group.
pub fn algebra_sum(g: &GradedLieAlgebra, h: &GradedLieAlgebra) -> GradedLieAlgebra {
    let n = g.dim();
    let mut degrees = g.degrees().to_vec();
    degrees.extend_from_slice(h.degrees());
    GradedLieAlgebra::from_fn(g.field(), g.group(), degrees, |i, j| {
        if j < n {
            g.bracket_basis(i, j).clone()
        } else if i >= n {
            h.bracket_basis(i - n, j - n).iter().map(|(k, c)| (k + n, c.clone())).collect()
        } else {
            vec![]
        }
    })
    .expect("direct sum")
}

fn int(field: &Field, v: i64) -> FieldElem {
    field.from_i64(v)
}

/// Graded Lie algebras of dimension at most 6, simple and not, all
/// definable over any field of characteristic other than 2.
pub fn small_corpus(field: &Field) -> Vec<(String, GradedLieAlgebra)> {
    let mut out: Vec<(String, GradedLieAlgebra)> = Vec::new();
    let z2 = FinAbGroup::cyclic(2);
    let z3 = FinAbGroup::cyclic(3);
    let triv = FinAbGroup::trivial();
    out.push(("sl2".into(), sl2(field).unwrap()));
    out.push(("pauli-sl2".into(), pauli_sl2(field).unwrap()));
    out.push(("cartan-z2".into(), cartan_sl2(field, &z2, &ge(&[1])).unwrap()));
    out.push(("cartan-z3".into(), cartan_sl2(field, &z3, &ge(&[1])).unwrap()));
    out.push(("sl2-pair".into(), sl2_pair(field).unwrap()));
    out.push(("sl2+sl2".into(), sl2_sum_ungraded(field).unwrap()));
    for moduli in [&[2][..], &[3], &[4], &[2, 2]] {
        let q = FinAbGroup::new(moduli.to_vec()).unwrap();
        for p in q.subgroups().into_iter().filter(|p| p.order() <= 2) {
            let quo = q.quotient_by(&p).unwrap();
            for (name, a) in sl2_gradings(field, &quo).unwrap() {
                let l = loop_algebra(&q, &p, &a).unwrap();
                out.push((format!("loop {q}/{}:{name}", p.order()), l.algebra));
            }
        }
    }
    // not graded simple
    out.push((
        "abelian-z2".into(),
        GradedLieAlgebra::from_fn(field, &z2, vec![ge(&[0]), ge(&[1])], |_, _| vec![]).unwrap(),
    ));
    out.push((
        "affine-line".into(),
        GradedLieAlgebra::from_fn(field, &triv, vec![triv.zero(); 2], |_, _| vec![(1, int(field, 1))]).unwrap(),
    ));
    out.push((
        "heisenberg-z3".into(),
        GradedLieAlgebra::from_fn(field, &z3, vec![ge(&[1]), ge(&[2]), ge(&[0])], |i, j| {
            if (i, j) == (0, 1) {
                vec![(2, int(field, 1))]
            } else {
                vec![]
            }
        })
        .unwrap(),
    ));
    let center = GradedLieAlgebra::from_fn(field, &triv, vec![triv.zero()], |_, _| vec![]).unwrap();
    out.push(("sl2+center".into(), algebra_sum(&sl2(field).unwrap(), &center)));
    let pauli = pauli_sl2(field).unwrap();
    out.push(("pauli+pauli".into(), algebra_sum(&pauli, &pauli)));
    let c2 = cartan_sl2(field, &z2, &ge(&[1])).unwrap();
    let line = GradedLieAlgebra::from_fn(field, &z2, vec![ge(&[1])], |_, _| vec![]).unwrap();
    out.push(("cartan-z2+line".into(), algebra_sum(&c2, &line)));
    out
}

/// A prime that has the roots of unity `q` needs, kept small so the
/// oracle's enumeration stays cheap.
pub fn oracle_prime(q: &FinAbGroup) -> u64 {
    let e = q.exponent().max(1);
    let n = num_integer::lcm(e, 4);
    gsla_core::exactfield::primes_one_mod(n, 5).next().unwrap()
}
