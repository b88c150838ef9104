use crate::abgroup::{character_coset_reps, characters, fixed_subgroup, Character, GroupElem, Subgroup};
use crate::action::{random_on, unit, Verdict};
use crate::config::Options;
use crate::error::{Error, Result};
use crate::exactfield::{idempotents_commutative, vecops, FieldElem, Matrix, Subspace};
use crate::liecore::{
    centroid, graded_simple_check, min_support_span, simplicity_certificate, verify_algebra, GradedLieAlgebra,
    Simplicity,
};
use crate::report::Check;

use super::{inv_subgroup, loop_algebra, tau_image, verify_graded_iso, GroupMap, LoopAlgebra};

/// How a proper ideal was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealRoute {
    CentroidIdempotent,
    TwoTermDifference,
    CharacterProbe,
    RandomProbe,
}

fn proper(s: &Subspace) -> bool {
    !s.is_zero() && !s.is_full()
}

/// First proper nonzero ideal found by: centroid idempotents, closures of
/// two-term differences `b_{α,k} − b_{α+β,k}`, closures of character sums
/// `Σ_{β∈P′} χ(β) b_{α+β,k}`, then random vectors.
pub fn find_proper_ideal(g: &GradedLieAlgebra, opts: &Options) -> Result<Option<(Subspace, IdealRoute)>> {
    let n = g.dim();
    let field = g.field();
    let q = g.group();
    if let Ok(c) = centroid(g) {
        if c.dim() > 1 {
            if let Ok(alg) = c.algebra(field) {
                if let Ok(ids) = idempotents_commutative(&alg) {
                    let maps = c.maps();
                    for e in ids {
                        let mut m = Matrix::zeros(field, n, n);
                        for (x, b) in e.iter().zip(&maps) {
                            if !x.is_zero() {
                                m = m.add(&b.scale(x));
                            }
                        }
                        let img = m.image();
                        if proper(&img) {
                            return Ok(Some((img, IdealRoute::CentroidIdempotent)));
                        }
                    }
                }
            }
        }
    }
    let comps = g.adjoint().components();
    let close = |v: Vec<FieldElem>| g.adjoint().closure(&[v]);
    for (alpha, idx) in &comps {
        for (k, &i) in idx.iter().enumerate() {
            for beta in q.elements().iter().skip(1) {
                let Some(&j) = comps.get(&q.add(alpha, beta)).and_then(|c| c.get(k)) else {
                    continue;
                };
                let mut v = unit(field, n, i);
                v[j] -= &field.one();
                let c = close(v);
                if proper(&c) {
                    return Ok(Some((c, IdealRoute::TwoTermDifference)));
                }
            }
        }
    }
    if let Ok(chars) = characters(q, field) {
        for sub in q.subgroups().into_iter().filter(|s| !s.is_trivial()) {
            let mut restrictions: Vec<Vec<FieldElem>> = Vec::new();
            for f in &chars {
                let r: Vec<FieldElem> = sub.elements().iter().map(|b| f.eval(b)).collect();
                if !restrictions.contains(&r) {
                    restrictions.push(r);
                }
            }
            for chi in &restrictions {
                for (alpha, idx) in &comps {
                    for k in 0..idx.len() {
                        let mut v = vec![field.zero(); n];
                        for (b, c) in sub.elements().iter().zip(chi) {
                            if let Some(&j) = comps.get(&q.add(alpha, b)).and_then(|c| c.get(k)) {
                                v[j] += c;
                            }
                        }
                        if vecops::is_zero(&v) {
                            continue;
                        }
                        let c = close(v);
                        if proper(&c) {
                            return Ok(Some((c, IdealRoute::CharacterProbe)));
                        }
                    }
                }
            }
        }
    }
    let all: Vec<usize> = (0..n).collect();
    for p in 0..opts.probes {
        let mut rng = opts.rng(u64::MAX - 1, p as u64);
        let c = close(random_on(field, n, &all, &mut rng));
        if proper(&c) {
            return Ok(Some((c, IdealRoute::RandomProbe)));
        }
    }
    Ok(None)
}

/// Shrinks a proper non-graded ideal until its `τ`-orbit members meet
/// pairwise in zero: while some `f ∉ Inv(I)` has `I ∩ τ_f(I) ≠ 0`, replace
/// `I` by the ideal generated by the minimal-support elements of that
/// intersection.
pub fn refine_ideal(g: &GradedLieAlgebra, i: &Subspace, chars: &[Character], opts: &Options) -> Result<Subspace> {
    if !g.is_ideal(i) {
        return Err(Error::NotAnIdeal);
    }
    if i.is_zero() || i.is_full() {
        return Err(Error::NotProper(format!("dimension {} of {}", i.dim(), g.dim())));
    }
    if inv_subgroup(g, i, chars).len() == chars.len() {
        return Err(Error::AlreadyGraded);
    }
    let mut cur = i.clone();
    // each round strictly shrinks the ideal
    for _ in 0..=g.dim() {
        let inv = inv_subgroup(g, &cur, chars);
        let mut next = None;
        for f in chars.iter().filter(|f| !inv.contains(f)) {
            let meet = cur.intersect(&tau_image(g, f, &cur))?;
            if !meet.is_zero() {
                next = Some(meet);
                break;
            }
        }
        let Some(meet) = next else {
            return Ok(cur);
        };
        let (_, span) = min_support_span(g, &meet, opts.max_subsets)?;
        let smaller = g.ideal_closure(&span);
        if smaller == cur {
            return Err(Error::VerificationFailure("refinement made no progress".into()));
        }
        cur = smaller;
    }
    Err(Error::VerificationFailure("refinement did not terminate".into()))
}

/// Output of [`recognize`]: `g ≅ g(Q, P, a)` via `phi`.
#[derive(Clone, Debug)]
pub struct Recognition {
    pub p: Subgroup,
    /// `a`, graded by `Q/P`
    pub a: GradedLieAlgebra,
    pub loop_algebra: LoopAlgebra,
    /// `g(Q,P,a) → g`, columns indexed by the loop basis
    pub phi: Matrix,
    /// the ideal of `g` that became `a`
    pub ideal: Subspace,
    pub route: Option<IdealRoute>,
    pub graded: Verdict,
    pub a_simplicity: Simplicity,
    pub certificates: Vec<Check>,
}

impl Recognition {
    /// Every certificate passed and `a` is certified simple.
    pub fn certified(&self) -> bool {
        self.certificates.iter().all(|c| c.passed) && matches!(self.a_simplicity, Simplicity::SimpleCertified)
    }
}

fn as_algebra(g: &GradedLieAlgebra, s: &Subspace) -> Result<GradedLieAlgebra> {
    let t = crate::abgroup::FinAbGroup::trivial();
    g.restrict(s.vectors(), &t, vec![t.zero(); s.dim()])
}

/// Presents a graded-simple `g` over a finite group as a loop algebra.
pub fn recognize(g: &GradedLieAlgebra, opts: &Options) -> Result<Recognition> {
    let report = verify_algebra(g);
    if !report.passes() {
        return Err(Error::VerificationFailure(format!("input algebra fails verification: {report:?}")));
    }
    let graded = graded_simple_check(g, opts);
    if let Verdict::NotGradedSimple { reason, .. } = &graded {
        return Err(Error::NotGradedSimple(reason.clone()));
    }
    let q = g.group().clone();
    let field = g.field().clone();
    let chars = characters(&q, &field)?;
    let mut certificates = vec![Check::pass("input-verifies")];

    let (ideal, route, a_simplicity) = match find_proper_ideal(g, opts)? {
        None => (Subspace::full(&field, g.dim()), None, simplicity_certificate(g, opts)),
        Some((start, route)) => {
            let mut cur = start;
            loop {
                cur = match refine_ideal(g, &cur, &chars, opts) {
                    Err(Error::AlreadyGraded) => {
                        return Err(Error::NotGradedSimple("found a proper graded ideal".into()))
                    }
                    other => other?,
                };
                let sub = as_algebra(g, &cur)?;
                match simplicity_certificate(&sub, opts) {
                    Simplicity::NotSimple(j) => {
                        // an ideal of I is an ideal of g: the other orbit members bracket I to zero
                        let vecs: Vec<Vec<FieldElem>> = j
                            .vectors()
                            .iter()
                            .map(|c| {
                                let mut x = vec![field.zero(); g.dim()];
                                for (coef, b) in c.iter().zip(cur.vectors()) {
                                    vecops::axpy(&mut x, coef, &b);
                                }
                                x
                            })
                            .collect();
                        let next = Subspace::from_vectors(&field, g.dim(), vecs);
                        if !g.is_ideal(&next) || next.dim() >= cur.dim() {
                            return Err(Error::VerificationFailure("descent produced a non-ideal".into()));
                        }
                        cur = next;
                    }
                    s => break (cur, Some(route), s),
                }
            }
        }
    };

    let inv = inv_subgroup(g, &ideal, &chars);
    let p = fixed_subgroup(&q, &inv);
    let quo = q.quotient_by(&p)?;
    certificates.push(Check::from_bool(
        "inv-index",
        chars.len() / inv.len() == p.order() && chars.len() % inv.len() == 0,
        format!("|Q^| = {}, |Inv(I)| = {}, |P| = {}", chars.len(), inv.len(), p.order()),
    ));
    let reps = character_coset_reps(&chars, &inv);
    let disjoint = reps.iter().skip(1).all(|f| {
        ideal
            .intersect(&tau_image(g, f, &ideal))
            .map(|s| s.is_zero())
            .unwrap_or(false)
    });
    certificates.push(Check::from_bool("orbit-disjoint", disjoint, "I ∩ τ_f(I) ≠ 0"));

    // Q/P-homogeneous basis of I
    let mut basis = Vec::new();
    let mut degrees: Vec<GroupElem> = Vec::new();
    for bar in quo.elements() {
        let idx: Vec<usize> = (0..g.dim()).filter(|&k| quo.canon(g.degree(k)) == *bar).collect();
        let part = ideal.intersect(&Subspace::coordinate(&field, g.dim(), &idx))?;
        for v in part.vectors() {
            basis.push(v);
            degrees.push(bar.clone());
        }
    }
    if basis.len() != ideal.dim() {
        return Err(Error::VerificationFailure("I is not graded by Q/P".into()));
    }
    let a = g.restrict(basis.clone(), &quo, degrees)?;
    let l = loop_algebra(&q, &p, &a)?;

    let mut sources = Vec::new();
    let mut targets = Vec::new();
    for f in &reps {
        let fl: Vec<FieldElem> = l.algebra.degrees().iter().map(|d| f.eval(d)).collect();
        let fg: Vec<FieldElem> = g.degrees().iter().map(|d| f.eval(d)).collect();
        for (i, u) in basis.iter().enumerate() {
            let s = l.psi(&a.basis_vector(i))?;
            sources.push(s.iter().zip(&fl).map(|(x, c)| x * c).collect::<Vec<_>>());
            targets.push(u.iter().zip(&fg).map(|(x, c)| x * c).collect::<Vec<_>>());
        }
    }
    let s = Matrix::from_columns(&field, l.algebra.dim(), &sources);
    let t = Matrix::from_columns(&field, g.dim(), &targets);
    if !s.is_square() || !s.is_invertible() || l.algebra.dim() != g.dim() {
        return Err(Error::VerificationFailure(format!(
            "orbit images do not form a basis (loop dim {}, algebra dim {}, {} images)",
            l.algebra.dim(),
            g.dim(),
            sources.len()
        )));
    }
    let phi = t.mul(&s.inverse()?)?;
    let verdict = verify_graded_iso(&l.algebra, g, &GroupMap::identity(&q), &phi)?;
    certificates.push(Check::from_bool(
        "phi-graded-iso",
        verdict.ok,
        verdict.reason.clone().unwrap_or_default(),
    ));
    certificates.push(Check::from_bool(
        "a-simple",
        matches!(a_simplicity, Simplicity::SimpleCertified),
        a_simplicity.name(),
    ));
    Ok(Recognition {
        p,
        a,
        loop_algebra: l,
        phi,
        ideal,
        route,
        graded,
        a_simplicity,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::FinAbGroup;
    use crate::catalog::{pauli_sl2, sl2};
    use crate::exactfield::Field;

    #[test]
    fn pauli_is_its_own_loop() {
        let k = Field::cyclotomic(4);
        let g = pauli_sl2(&k).unwrap();
        let r = recognize(&g, &Options::default()).unwrap();
        assert!(r.p.is_trivial());
        assert_eq!(r.a.dim(), 3);
        assert!(r.certified());
    }

    #[test]
    fn z2_loop_round_trip() {
        let k = Field::cyclotomic(4);
        let z2 = FinAbGroup::cyclic(2);
        let p = z2.whole();
        let quo = z2.quotient_by(&p).unwrap();
        let a = sl2(&k).unwrap().with_degrees(&quo, vec![quo.zero(); 3]).unwrap();
        let l = loop_algebra(&z2, &p, &a).unwrap();
        let r = recognize(&l.algebra, &Options::default()).unwrap();
        assert_eq!(r.p.order(), 2);
        assert_eq!(r.a.dim(), 3);
        assert!(r.certified(), "{:?}", r.certificates);
    }

    #[test]
    fn refine_rejects_bad_input() {
        let k = Field::cyclotomic(4);
        let g = pauli_sl2(&k).unwrap();
        let chars = characters(g.group(), &k).unwrap();
        let full = Subspace::full(&k, 3);
        assert!(matches!(refine_ideal(&g, &full, &chars, &Options::default()), Err(Error::NotProper(_))));
        let line = Subspace::from_vectors(&k, 3, vec![unit(&k, 3, 0)]);
        assert!(matches!(refine_ideal(&g, &line, &chars, &Options::default()), Err(Error::NotAnIdeal)));
    }
}
