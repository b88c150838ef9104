//! Graded Lie algebras given by structure constants.
//!
//! ```
//! use gsla_core::catalog::pauli_sl2;
//! use gsla_core::exactfield::Field;
//! use gsla_core::liecore::verify_algebra;
//! let g = pauli_sl2(&Field::rationals()).unwrap();
//! let report = verify_algebra(&g);
//! assert!(report.passes() && report.minimal);
//! ```

mod structure;
mod support;

pub use structure::{
    center, centroid, graded_simple_check, killing_gram, simplicity_certificate, Centroid, Simplicity,
};
pub use support::{min_support_span, size, support};

use std::fmt;

use crate::abgroup::{FinAbGroup, GroupElem, Subgroup};
use crate::action::{apply_sparse, GradedAction, SparseVec};
use crate::error::{Error, Result};
use crate::exactfield::{Coordinatizer, Field, FieldElem, Matrix, SpanBuilder, Subspace};

/// `(i, j, [b_i, b_j])` with the bracket as sparse coordinates.
pub type BracketEntry = (usize, usize, SparseVec);

/// A Lie algebra with a basis of homogeneous elements.
///
/// The bracket table is stored in full; constructors complete the
/// antisymmetric half when only `i < j` entries are supplied.
#[derive(Clone)]
pub struct GradedLieAlgebra {
    adj: GradedAction,
}

impl fmt::Debug for GradedLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedLieAlgebra(dim {}, {} over {})", self.dim(), self.group(), self.field().spec())
    }
}

fn check_sparse(v: &SparseVec, dim: usize) -> Result<()> {
    if let Some((k, _)) = v.iter().find(|(k, _)| *k >= dim) {
        return Err(Error::InvalidInput(format!("basis index {k} out of range (dim {dim})")));
    }
    Ok(())
}

pub(crate) fn normalize(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|(k, _)| *k);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (k, c) in v {
        match out.last_mut() {
            Some((k0, c0)) if *k0 == k => *c0 += &c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

pub(crate) fn dense_to_sparse(v: &[FieldElem]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

impl GradedLieAlgebra {
    /// From bracket entries; a missing `(j, i)` is filled in as `−(i, j)`.
    pub fn new(field: &Field, group: &FinAbGroup, degrees: Vec<GroupElem>, brackets: Vec<BracketEntry>) -> Result<Self> {
        let n = degrees.len();
        let mut table: Vec<Vec<Option<SparseVec>>> = vec![vec![None; n]; n];
        for (i, j, v) in brackets {
            if i >= n || j >= n {
                return Err(Error::InvalidInput(format!("bracket index ({i},{j}) out of range (dim {n})")));
            }
            check_sparse(&v, n)?;
            for (_, c) in &v {
                field.check(c)?;
            }
            if table[i][j].is_some() {
                return Err(Error::InvalidInput(format!("bracket ({i},{j}) given twice")));
            }
            table[i][j] = Some(normalize(v));
        }
        let mut full = vec![vec![SparseVec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                full[i][j] = match (&table[i][j], &table[j][i]) {
                    (Some(v), _) => v.clone(),
                    (None, Some(w)) => w.iter().map(|(k, c)| (*k, -c)).collect(),
                    (None, None) => vec![],
                };
            }
        }
        Self::from_table(field, group, degrees, full)
    }

    /// From a complete table `table[i][j] = [b_i, b_j]`, stored as given.
    pub fn from_table(field: &Field, group: &FinAbGroup, degrees: Vec<GroupElem>, table: Vec<Vec<SparseVec>>) -> Result<Self> {
        let n = degrees.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("bracket table has the wrong shape".into()));
        }
        for row in &table {
            for v in row {
                check_sparse(v, n)?;
            }
        }
        let table: Vec<Vec<SparseVec>> = table.into_iter().map(|r| r.into_iter().map(normalize).collect()).collect();
        let adj = GradedAction::new(field, group, degrees.clone(), degrees, table)?;
        Ok(GradedLieAlgebra { adj })
    }

    /// Brackets computed by `f(i, j)` for `i < j`, completed antisymmetrically.
    pub fn from_fn(
        field: &Field,
        group: &FinAbGroup,
        degrees: Vec<GroupElem>,
        mut f: impl FnMut(usize, usize) -> SparseVec,
    ) -> Result<Self> {
        let n = degrees.len();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j);
                if !v.is_empty() {
                    entries.push((i, j, v));
                }
            }
        }
        Self::new(field, group, degrees, entries)
    }

    /// The subalgebra spanned by independent `basis` vectors, with the given
    /// degrees in `group`. Fails if the span is not closed under the bracket.
    pub fn restrict(&self, basis: Vec<Vec<FieldElem>>, group: &FinAbGroup, degrees: Vec<GroupElem>) -> Result<Self> {
        let coords = Coordinatizer::new(self.field(), self.dim(), basis)?;
        let b = coords.basis();
        let mut entries = Vec::new();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let c = coords.coords(&self.bracket(&b[i], &b[j])).ok_or(Error::NotAnIdeal)?;
                entries.push((i, j, dense_to_sparse(&c)));
            }
        }
        Self::new(self.field(), group, degrees, entries)
    }

    pub fn field(&self) -> &Field {
        self.adj.field()
    }
    pub fn group(&self) -> &FinAbGroup {
        self.adj.group()
    }
    pub fn dim(&self) -> usize {
        self.adj.dim()
    }
    pub fn degree(&self, i: usize) -> &GroupElem {
        &self.adj.degrees()[i]
    }
    pub fn degrees(&self) -> &[GroupElem] {
        self.adj.degrees()
    }

    /// The adjoint action `ad b_i` on `g` itself.
    pub fn adjoint(&self) -> &GradedAction {
        &self.adj
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.adj.op(i)[j]
    }

    pub fn bracket(&self, u: &[FieldElem], v: &[FieldElem]) -> Vec<FieldElem> {
        let mut out = vec![self.field().zero(); self.dim()];
        for (i, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let w = apply_sparse(self.field(), self.adj.op(i), v, self.dim());
            for (o, y) in out.iter_mut().zip(&w) {
                if !y.is_zero() {
                    *o += &(x * y);
                }
            }
        }
        out
    }

    /// Matrix of `ad x`.
    pub fn ad(&self, x: &[FieldElem]) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dim(), self.dim());
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.adj.matrix(i).scale(c));
            }
        }
        m
    }

    pub fn basis_vector(&self, i: usize) -> Vec<FieldElem> {
        crate::action::unit(self.field(), self.dim(), i)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.dim()).all(|i| self.adj.op(i).iter().all(Vec::is_empty))
    }

    /// `[U, V]`.
    pub fn bracket_subspaces(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut span = SpanBuilder::new(self.field(), self.dim());
        let vs = v.vectors();
        for x in u.vectors() {
            for y in &vs {
                span.insert(self.bracket(&x, y));
            }
        }
        span.finish()
    }

    /// `[g, g]`.
    pub fn derived(&self) -> Subspace {
        let full = Subspace::full(self.field(), self.dim());
        self.bracket_subspaces(&full, &full)
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Subspace {
        self.adj.closure_of(s)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.adj.is_invariant(s)
    }

    pub fn project(&self, x: &[FieldElem], alpha: &GroupElem) -> Vec<FieldElem> {
        self.adj.project(x, alpha)
    }

    pub fn component(&self, alpha: &GroupElem) -> Vec<usize> {
        self.adj.component(alpha)
    }

    /// Degrees carrying a nonzero component, in group order.
    pub fn grading_support(&self) -> Vec<GroupElem> {
        self.adj.components().into_keys().collect()
    }

    /// Same structure constants, degrees pushed into a coarser group.
    pub fn regrade(&self, group: &FinAbGroup) -> Result<Self> {
        Ok(GradedLieAlgebra {
            adj: self.adj.regrade(group)?,
        })
    }

    /// The same algebra graded by the trivial group.
    pub fn forget_grading(&self) -> Self {
        GradedLieAlgebra {
            adj: self.adj.forget_grading(),
        }
    }

    /// Same structure constants and group, new degrees.
    pub fn with_degrees(&self, group: &FinAbGroup, degrees: Vec<GroupElem>) -> Result<Self> {
        let table: Vec<Vec<SparseVec>> = (0..self.dim()).map(|i| self.adj.op(i).to_vec()).collect();
        Self::from_table(self.field(), group, degrees, table)
    }

    /// Structure constants and degrees agree entry by entry.
    pub fn same_structure(&self, other: &GradedLieAlgebra) -> bool {
        self.dim() == other.dim()
            && self.degrees() == other.degrees()
            && (0..self.dim()).all(|i| self.adj.op(i) == other.adj.op(i))
    }
}

/// `g` regraded by `Q/P`.
pub fn regrade_by_quotient(g: &GradedLieAlgebra, p: &Subgroup) -> Result<GradedLieAlgebra> {
    let quo = g.group().quotient_by(p)?;
    g.regrade(&quo)
}

/// Outcome of [`verify_algebra`]. Witness lists are truncated.
#[derive(Clone, Debug, Default)]
pub struct AlgebraReport {
    pub antisymmetry: Vec<(usize, usize)>,
    pub jacobi: Vec<(usize, usize, usize)>,
    /// `(i, j)` with `[b_i, b_j]` outside the component of degree `deg i + deg j`
    pub grading: Vec<(usize, usize)>,
    /// the grading support generates the group
    pub minimal: bool,
}

impl AlgebraReport {
    pub fn passes(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty() && self.grading.is_empty()
    }
}

const MAX_WITNESSES: usize = 8;

pub fn verify_algebra(g: &GradedLieAlgebra) -> AlgebraReport {
    let n = g.dim();
    let field = g.field();
    let group = g.group();
    let mut rep = AlgebraReport::default();
    for i in 0..n {
        for j in i..n {
            let a = g.bracket_basis(i, j);
            let b = g.bracket_basis(j, i);
            let ok = a.len() == b.len() && a.iter().zip(b).all(|((k, x), (l, y))| k == l && (x + y).is_zero());
            if !ok && rep.antisymmetry.len() < MAX_WITNESSES {
                rep.antisymmetry.push((i, j));
            }
            for (ii, jj) in [(i, j), (j, i)] {
                let target = group.add(g.degree(ii), g.degree(jj));
                if g.bracket_basis(ii, jj).iter().any(|(k, _)| *g.degree(*k) != target)
                    && rep.grading.len() < MAX_WITNESSES
                    && !rep.grading.contains(&(ii, jj))
                {
                    rep.grading.push((ii, jj));
                }
            }
        }
    }
    let basis: Vec<Vec<FieldElem>> = (0..n).map(|i| g.basis_vector(i)).collect();
    let inner: Vec<Vec<Vec<FieldElem>>> = (0..n)
        .map(|j| (0..n).map(|k| apply_sparse(field, g.adj.op(j), &basis[k], n)).collect())
        .collect();
    'outer: for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut s = g.bracket(&basis[i], &inner[j][k]);
                let t = g.bracket(&basis[j], &inner[k][i]);
                let u = g.bracket(&basis[k], &inner[i][j]);
                for ((x, y), z) in s.iter_mut().zip(&t).zip(&u) {
                    *x += y;
                    *x += z;
                }
                if s.iter().any(|x| !x.is_zero()) {
                    rep.jacobi.push((i, j, k));
                    if rep.jacobi.len() >= MAX_WITNESSES {
                        break 'outer;
                    }
                }
            }
        }
    }
    let supp = g.grading_support();
    rep.minimal = group.subgroup(&supp).is_whole();
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{pauli_sl2, sl2};

    #[test]
    fn pauli_verifies() {
        let g = pauli_sl2(&Field::rationals()).unwrap();
        let r = verify_algebra(&g);
        assert!(r.passes(), "{r:?}");
        assert!(r.minimal);
    }

    #[test]
    fn broken_antisymmetry_is_reported() {
        let q = Field::rationals();
        let g = sl2(&q).unwrap();
        let mut table: Vec<Vec<SparseVec>> = (0..3).map(|i| g.adjoint().op(i).to_vec()).collect();
        table[0][1] = table[0][1].iter().map(|(k, c)| (*k, -c)).collect();
        let bad = GradedLieAlgebra::from_table(&q, g.group(), g.degrees().to_vec(), table).unwrap();
        let r = verify_algebra(&bad);
        assert_eq!(r.antisymmetry, vec![(0, 1)]);
    }

    #[test]
    fn pauli_bracket() {
        let q = Field::rationals();
        let g = pauli_sl2(&q).unwrap();
        // basis h, u = e+f, w = e−f
        let h = g.basis_vector(0);
        let u = g.basis_vector(1);
        let w: Vec<FieldElem> = g.basis_vector(2).iter().map(|x| x * &q.from_i64(2)).collect();
        assert_eq!(g.bracket(&h, &u), w);
        assert!(g.bracket(&u, &u).iter().all(FieldElem::is_zero));
    }

    #[test]
    fn regrade_pauli() {
        let q = Field::rationals();
        let g = pauli_sl2(&q).unwrap();
        let p = g.group().subgroup(&[GroupElem::new(vec![1, 1])]);
        let r = regrade_by_quotient(&g, &p).unwrap();
        // h ↦ 1̄, e+f ↦ 1̄... (0,1) ~ (1,0) and (1,1) ~ (0,0)
        assert_eq!(r.degree(0), r.degree(1));
        assert_eq!(r.degree(2), &r.group().zero());
        let whole = regrade_by_quotient(&g, &g.group().whole()).unwrap();
        assert!(whole.degrees().iter().all(|d| d == &whole.group().zero()));
    }
}
