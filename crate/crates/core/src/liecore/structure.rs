use crate::abgroup::GroupElem;
use crate::action::{random_on, unit, Verdict};
use crate::config::Options;
use crate::error::Result;
use crate::exactfield::{CommAlgebra, Field, FieldElem, Matrix, SparseSystem, Subspace};

use super::GradedLieAlgebra;

/// Kernel of the stacked `ad b_i`.
pub fn center(g: &GradedLieAlgebra) -> Subspace {
    let n = g.dim();
    let mut sys = SparseSystem::new(g.field(), n);
    for i in 0..n {
        // coordinate k of [b_i, x] = Σ_j x_j c_ij^k
        let mut rows: Vec<Vec<(usize, FieldElem)>> = vec![vec![]; n];
        for j in 0..n {
            for (k, c) in g.bracket_basis(i, j) {
                rows[*k].push((j, c.clone()));
            }
        }
        for r in rows {
            if !r.is_empty() {
                sys.add_equation(r);
            }
        }
    }
    sys.nullspace()
}

/// Gram matrix of the Killing form and whether it is nondegenerate.
pub fn killing_gram(g: &GradedLieAlgebra) -> (Matrix, bool) {
    let n = g.dim();
    let field = g.field();
    let coeff = |j: usize, k: usize, l: usize| -> Option<&FieldElem> {
        let v = g.bracket_basis(j, k);
        v.binary_search_by_key(&l, |(x, _)| *x).ok().map(|p| &v[p].1)
    };
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in i..n {
            // trace(ad b_i ad b_j) = Σ_l Σ_k c_il^k c_jk^l
            let mut acc = field.zero();
            for l in 0..n {
                for (k, c) in g.bracket_basis(i, l) {
                    if let Some(d) = coeff(j, *k, l) {
                        acc += &(c * d);
                    }
                }
            }
            m.set(i, j, acc.clone());
            m.set(j, i, acc);
        }
    }
    let nondeg = m.rank() == n;
    (m, nondeg)
}

/// Centroid split by degree: the degree-γ part sends `g_α` into `g_{α+γ}`.
#[derive(Clone, Debug)]
pub struct Centroid {
    pub by_degree: Vec<(GroupElem, Vec<Matrix>)>,
}

impl Centroid {
    pub fn maps(&self) -> Vec<Matrix> {
        self.by_degree.iter().flat_map(|(_, m)| m.iter().cloned()).collect()
    }

    pub fn dim(&self) -> usize {
        self.by_degree.iter().map(|(_, m)| m.len()).sum()
    }

    pub fn degree(&self, gamma: &GroupElem) -> &[Matrix] {
        self.by_degree
            .iter()
            .find(|(d, _)| d == gamma)
            .map(|(_, m)| m.as_slice())
            .unwrap_or(&[])
    }

    /// Multiplication table of the whole centroid; fails with `NotCommutative`
    /// when the maps do not commute.
    pub fn algebra(&self, field: &Field) -> Result<CommAlgebra> {
        CommAlgebra::from_matrices(field, &self.maps())
    }
}

pub fn centroid(g: &GradedLieAlgebra) -> Result<Centroid> {
    let adj = g.adjoint();
    let mut by_degree = Vec::new();
    for gamma in g.group().elements() {
        let maps = adj.hom_space(adj, Some(gamma))?;
        if !maps.is_empty() {
            by_degree.push((gamma.clone(), maps));
        }
    }
    Ok(Centroid { by_degree })
}

/// Ungraded simplicity verdict.
#[derive(Clone, Debug)]
pub enum Simplicity {
    /// central simple: Killing nondegenerate with scalar centroid, or the
    /// adjoint operators generate the full matrix algebra
    SimpleCertified,
    NotSimple(Subspace),
    /// abelian of dimension ≤ 1: no proper ideal, but not simple either
    Abelian,
    Unknown,
}

impl Simplicity {
    pub fn name(&self) -> &'static str {
        match self {
            Simplicity::SimpleCertified => "SimpleCertified",
            Simplicity::NotSimple(_) => "NotSimple",
            Simplicity::Abelian => "Abelian",
            Simplicity::Unknown => "Unknown",
        }
    }
}

pub fn simplicity_certificate(g: &GradedLieAlgebra, opts: &Options) -> Simplicity {
    let n = g.dim();
    if g.is_abelian() {
        return if n >= 2 {
            Simplicity::NotSimple(Subspace::from_vectors(g.field(), n, vec![unit(g.field(), n, 0)]))
        } else {
            Simplicity::Abelian
        };
    }
    let z = center(g);
    if !z.is_zero() {
        return Simplicity::NotSimple(z);
    }
    let d = g.derived();
    if !d.is_full() {
        return Simplicity::NotSimple(d);
    }
    let u = g.forget_grading();
    let cent = centroid(&u).ok();
    if g.field().characteristic() == 0 && cent.as_ref().is_some_and(|c| c.dim() == 1) && killing_gram(g).1 {
        return Simplicity::SimpleCertified;
    }
    if n <= 16 && u.adjoint().generates_full_matrix_algebra() {
        return Simplicity::SimpleCertified;
    }
    if let Some(c) = cent.filter(|c| c.dim() > 1) {
        if let Some(i) = u.adjoint().split_by_idempotents(&c.maps()) {
            return Simplicity::NotSimple(i);
        }
    }
    if let Some(i) = probe_ideal(&u, opts) {
        return Simplicity::NotSimple(i);
    }
    Simplicity::Unknown
}

/// Closures of basis vectors, then of random vectors; first proper one wins.
pub(crate) fn probe_ideal(g: &GradedLieAlgebra, opts: &Options) -> Option<Subspace> {
    let n = g.dim();
    for b in 0..n {
        let c = g.ideal_closure(&Subspace::from_vectors(g.field(), n, vec![unit(g.field(), n, b)]));
        if !c.is_full() {
            return Some(c);
        }
    }
    let all: Vec<usize> = (0..n).collect();
    for p in 0..opts.probes {
        let mut rng = opts.rng(u64::MAX, p as u64);
        let v = random_on(g.field(), n, &all, &mut rng);
        let c = g.adjoint().closure(&[v]);
        if !c.is_full() {
            return Some(c);
        }
    }
    None
}

/// Graded simplicity: abelian algebras are never graded simple; otherwise the
/// shared procedure on the adjoint action, with the scalar degree-0 centroid
/// accepted as a certificate when the Killing form is nondegenerate in
/// characteristic 0.
pub fn graded_simple_check(g: &GradedLieAlgebra, opts: &Options) -> Verdict {
    if g.is_abelian() {
        let n = g.dim();
        return Verdict::NotGradedSimple {
            witness: (n > 1).then(|| Subspace::from_vectors(g.field(), n, vec![unit(g.field(), n, 0)])),
            reason: "abelian".into(),
        };
    }
    let semisimple = g.field().characteristic() == 0 && killing_gram(g).1;
    g.adjoint().graded_simple_check(opts, semisimple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::FinAbGroup;
    use crate::catalog::{pauli_sl2, sl2};
    use crate::liecore::GradedLieAlgebra;

    #[test]
    fn sl2_killing() {
        let q = Field::rationals();
        let g = sl2(&q).unwrap();
        let (k, nondeg) = killing_gram(&g);
        assert!(nondeg);
        // basis e, h, f
        assert_eq!(k.get(1, 1), &q.from_i64(8));
        assert_eq!(k.get(0, 2), &q.from_i64(4));
        assert!(k.get(0, 0).is_zero());
    }

    #[test]
    fn centers() {
        let q = Field::rationals();
        assert!(center(&pauli_sl2(&q).unwrap()).is_zero());
        let t = FinAbGroup::trivial();
        let ab = GradedLieAlgebra::new(&q, &t, vec![t.zero(); 3], vec![]).unwrap();
        assert!(center(&ab).is_full());
        assert!(!killing_gram(&ab).1);
    }

    #[test]
    fn sl2_centroid_and_certificate() {
        let q = Field::rationals();
        let g = sl2(&q).unwrap();
        assert_eq!(centroid(&g).unwrap().dim(), 1);
        assert!(matches!(simplicity_certificate(&g, &Options::default()), Simplicity::SimpleCertified));
    }

    #[test]
    fn pauli_tier_a() {
        let g = pauli_sl2(&Field::rationals()).unwrap();
        assert!(matches!(
            graded_simple_check(&g, &Options::default()),
            Verdict::GradedSimple(crate::action::Certificate::TierA)
        ));
    }
}
