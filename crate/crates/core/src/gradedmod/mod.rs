//! Graded modules over graded Lie algebras.
//!
//! A module carries its own grading group: either the algebra's group `Q`
//! or a quotient `Q/P` of it, in which case algebra degrees act through the
//! projection. Loop modules `M(Q,P,V)` and the reconstruction of a graded
//! simple module as one live here too.
//!
//! ```
//! use gsla_core::catalog::matrix2_module;
//! use gsla_core::exactfield::Field;
//! use gsla_core::gradedmod::{graded_simple_module_check, verify_module};
//! use gsla_core::Options;
//! let w = matrix2_module(&Field::cyclotomic(4)).unwrap();
//! assert!(verify_module(&w).passes());
//! assert!(graded_simple_module_check(&w, &Options::default()).is_graded_simple());
//! ```

mod loopmod;
mod reconstruct;
mod weyl;

pub use loopmod::{automorphism_from_twist, loop_module, psi_iso, twist_decomposition, LoopModule, TwistSummand};
pub use reconstruct::{max_commutative_d, pprime, reconstruct_module, vprime, CommutativeChoice, PPrime, Reconstruction};
pub use weyl::weyl_decompose;

use std::fmt;

use crate::abgroup::{Character, FinAbGroup, GroupElem};
use crate::action::{GradedAction, SparseVec, Verdict};
use crate::config::Options;
use crate::error::{Error, Result};
use crate::exactfield::{Coordinatizer, Field, FieldElem, Matrix, Subspace};
use crate::liecore::{dense_to_sparse, killing_gram, normalize, GradedLieAlgebra};

/// `(algebra basis i, module basis j, x_i · v_j)`.
pub type ActionEntry = (usize, usize, SparseVec);

#[derive(Clone)]
pub struct GradedModule {
    algebra: GradedLieAlgebra,
    act: GradedAction,
}

impl fmt::Debug for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedModule(dim {}, graded by {}, over {:?})", self.dim(), self.group(), self.algebra)
    }
}

/// A linear map between modules, `target.dim × source.dim`.
#[derive(Clone, Debug)]
pub struct ModuleHom {
    pub matrix: Matrix,
    /// `Some(α)` for a map sending degree β into degree β+α
    pub degree: Option<GroupElem>,
}

impl GradedModule {
    /// Action entries not listed are zero. `group` must have the algebra's
    /// moduli and be the algebra's group or a quotient of it.
    pub fn new(
        algebra: &GradedLieAlgebra,
        group: &FinAbGroup,
        degrees: Vec<GroupElem>,
        action: Vec<ActionEntry>,
    ) -> Result<Self> {
        let n = degrees.len();
        let mut ops = vec![vec![SparseVec::new(); n]; algebra.dim()];
        for (i, j, v) in action {
            if i >= algebra.dim() || j >= n || v.iter().any(|(k, _)| *k >= n) {
                return Err(Error::InvalidInput(format!("action entry ({i},{j}) out of range")));
            }
            for (_, c) in &v {
                algebra.field().check(c)?;
            }
            if !ops[i][j].is_empty() {
                return Err(Error::InvalidInput(format!("action entry ({i},{j}) given twice")));
            }
            ops[i][j] = normalize(v);
        }
        Self::from_ops(algebra, group, degrees, ops)
    }

    /// `f(i, j) = x_i · v_j`.
    pub fn from_fn(
        algebra: &GradedLieAlgebra,
        group: &FinAbGroup,
        degrees: Vec<GroupElem>,
        mut f: impl FnMut(usize, usize) -> SparseVec,
    ) -> Result<Self> {
        let n = degrees.len();
        let ops = (0..algebra.dim())
            .map(|i| (0..n).map(|j| normalize(f(i, j))).collect())
            .collect();
        Self::from_ops(algebra, group, degrees, ops)
    }

    fn from_ops(algebra: &GradedLieAlgebra, group: &FinAbGroup, degrees: Vec<GroupElem>, ops: Vec<Vec<SparseVec>>) -> Result<Self> {
        if !group.is_coarsening_of(algebra.group()) {
            return Err(Error::GradingMismatch(format!(
                "module group {group} is not a quotient of the algebra's group {}",
                algebra.group()
            )));
        }
        let act = GradedAction::new(algebra.field(), group, degrees, algebra.degrees().to_vec(), ops)?;
        Ok(GradedModule {
            algebra: algebra.clone(),
            act,
        })
    }

    pub fn algebra(&self) -> &GradedLieAlgebra {
        &self.algebra
    }
    pub fn field(&self) -> &Field {
        self.act.field()
    }
    pub fn group(&self) -> &FinAbGroup {
        self.act.group()
    }
    pub fn dim(&self) -> usize {
        self.act.dim()
    }
    pub fn degree(&self, j: usize) -> &GroupElem {
        &self.act.degrees()[j]
    }
    pub fn degrees(&self) -> &[GroupElem] {
        self.act.degrees()
    }
    pub fn action(&self) -> &GradedAction {
        &self.act
    }

    /// `x_i · v`.
    pub fn act(&self, i: usize, v: &[FieldElem]) -> Vec<FieldElem> {
        self.act.apply(i, v)
    }

    /// `x · v` for an arbitrary algebra element.
    pub fn act_by(&self, x: &[FieldElem], v: &[FieldElem]) -> Vec<FieldElem> {
        let mut out = vec![self.field().zero(); self.dim()];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, y) in out.iter_mut().zip(self.act(i, v)) {
                *o += &(c * &y);
            }
        }
        out
    }

    pub fn action_entry(&self, i: usize, j: usize) -> &SparseVec {
        &self.act.op(i)[j]
    }

    pub fn basis_vector(&self, j: usize) -> Vec<FieldElem> {
        crate::action::unit(self.field(), self.dim(), j)
    }

    /// Same action, degrees pushed into a coarser group.
    pub fn regrade(&self, group: &FinAbGroup) -> Result<Self> {
        let degrees = self.degrees().to_vec();
        let ops = (0..self.algebra.dim()).map(|i| self.act.op(i).to_vec()).collect();
        Self::from_ops(&self.algebra, group, degrees, ops)
    }

    /// Same structure constants, new degrees (in `group`).
    pub fn with_degrees(&self, group: &FinAbGroup, degrees: Vec<GroupElem>) -> Result<Self> {
        let ops = (0..self.algebra.dim()).map(|i| self.act.op(i).to_vec()).collect();
        Self::from_ops(&self.algebra, group, degrees, ops)
    }

    /// The submodule with the given homogeneous basis, as a module in its
    /// own right. Fails with `NotProper` if the span is not invariant.
    pub fn submodule(&self, basis: Vec<(GroupElem, Vec<FieldElem>)>) -> Result<Self> {
        let (degrees, vecs): (Vec<GroupElem>, Vec<Vec<FieldElem>>) = basis.into_iter().unzip();
        let coords = Coordinatizer::new(self.field(), self.dim(), vecs)?;
        let b = coords.basis().to_vec();
        let mut ops = vec![vec![SparseVec::new(); b.len()]; self.algebra.dim()];
        for i in 0..self.algebra.dim() {
            for (j, v) in b.iter().enumerate() {
                let c = coords
                    .coords(&self.act(i, v))
                    .ok_or_else(|| Error::NotProper("span is not a submodule".into()))?;
                ops[i][j] = dense_to_sparse(&c);
            }
        }
        Self::from_ops(&self.algebra, self.group(), degrees, ops)
    }

    /// Same space and grading, acting algebra replaced by one with identical
    /// structure constants (e.g. a regrading of it).
    pub fn over_algebra(&self, algebra: &GradedLieAlgebra) -> Result<Self> {
        if algebra.dim() != self.algebra.dim() || (0..algebra.dim()).any(|i| algebra.adjoint().op(i) != self.algebra.adjoint().op(i)) {
            return Err(Error::GradingMismatch("replacement algebra has different structure constants".into()));
        }
        let ops = (0..self.algebra.dim()).map(|i| self.act.op(i).to_vec()).collect();
        Self::from_ops(algebra, self.group(), self.degrees().to_vec(), ops)
    }
}

/// Outcome of [`verify_module`]; witness lists are truncated.
#[derive(Clone, Debug, Default)]
pub struct ModuleReport {
    /// `(i, i′, j)` with `x_i(x_i′ v_j) − x_i′(x_i v_j) ≠ [x_i, x_i′] v_j`
    pub action_law: Vec<(usize, usize, usize)>,
    /// `(i, j)` with `x_i v_j` outside degree `deg x_i + deg v_j`
    pub grading: Vec<(usize, usize)>,
    /// `gW ≠ 0`
    pub nontrivial: bool,
}

impl ModuleReport {
    pub fn passes(&self) -> bool {
        self.action_law.is_empty() && self.grading.is_empty()
    }
}

const MAX_WITNESSES: usize = 8;

pub fn verify_module(w: &GradedModule) -> ModuleReport {
    let g = w.algebra();
    let field = w.field();
    let n = w.dim();
    let grp = w.group();
    let mut rep = ModuleReport::default();
    for i in 0..g.dim() {
        for j in 0..n {
            let target = grp.add(&grp.canon(g.degree(i)), w.degree(j));
            if w.action_entry(i, j).iter().any(|(k, _)| *w.degree(*k) != target) && rep.grading.len() < MAX_WITNESSES {
                rep.grading.push((i, j));
            }
            if !w.action_entry(i, j).is_empty() {
                rep.nontrivial = true;
            }
        }
    }
    'outer: for i in 0..g.dim() {
        for i2 in i + 1..g.dim() {
            let br = g.bracket_basis(i, i2);
            for j in 0..n {
                let v = w.basis_vector(j);
                let a = w.act(i, &w.act(i2, &v));
                let b = w.act(i2, &w.act(i, &v));
                let mut rhs = vec![field.zero(); n];
                for (k, coef) in br {
                    for (o, y) in rhs.iter_mut().zip(w.act(*k, &v)) {
                        *o += &(coef * &y);
                    }
                }
                let ok = a.iter().zip(&b).zip(&rhs).all(|((x, y), z)| (x - y) == *z);
                if !ok {
                    rep.action_law.push((i, i2, j));
                    if rep.action_law.len() >= MAX_WITNESSES {
                        break 'outer;
                    }
                }
            }
        }
    }
    rep
}

/// Smallest submodule containing `s`.
pub fn submodule_closure(w: &GradedModule, s: &Subspace) -> Subspace {
    w.action().closure_of(s)
}

fn algebra_is_semisimple(g: &GradedLieAlgebra) -> bool {
    g.field().characteristic() == 0 && !g.is_abelian() && killing_gram(g).1
}

/// Graded simplicity; the scalar-`End₀` certificate is used when the algebra
/// is semisimple in characteristic 0 (graded modules are then completely
/// reducible).
pub fn graded_simple_module_check(w: &GradedModule, opts: &Options) -> Verdict {
    w.action().graded_simple_check(opts, algebra_is_semisimple(w.algebra()))
}

/// Ungraded simplicity of the underlying module.
pub fn simple_module_check(w: &GradedModule, opts: &Options) -> Verdict {
    w.action().forget_grading().graded_simple_check(opts, algebra_is_semisimple(w.algebra()))
}

fn same_algebra(a: &GradedModule, b: &GradedModule) -> Result<()> {
    let (g, h) = (a.algebra(), b.algebra());
    if g.dim() != h.dim() || (0..g.dim()).any(|i| g.adjoint().op(i) != h.adjoint().op(i)) {
        return Err(Error::GradingMismatch("modules over different algebras".into()));
    }
    Ok(())
}

/// Basis of module maps `W → W′`; graded ones shift degrees by `alpha`.
pub fn hom_space(w: &GradedModule, w2: &GradedModule, alpha: &GroupElem, graded: bool) -> Result<Vec<ModuleHom>> {
    same_algebra(w, w2)?;
    let maps = if graded {
        if w.group() != w2.group() {
            return Err(Error::GradingMismatch("graded homs need a common grading group".into()));
        }
        w.action().hom_space(w2.action(), Some(alpha))?
    } else {
        w.action().hom_space(w2.action(), None)?
    };
    let degree = graded.then(|| w.group().canon(alpha));
    Ok(maps
        .into_iter()
        .map(|matrix| ModuleHom {
            matrix,
            degree: degree.clone(),
        })
        .collect())
}

/// `μ` commutes with the actions (and has the stated degree, if any).
pub fn is_module_hom(w: &GradedModule, w2: &GradedModule, h: &ModuleHom) -> bool {
    same_algebra(w, w2).is_ok()
        && w.action().intertwines(w2.action(), &h.matrix)
        && h.degree.as_ref().is_none_or(|d| w.group() == w2.group() && w.action().has_degree(w2.action(), &h.matrix, d))
}

/// Per-degree data of the graded endomorphism ring.
#[derive(Clone, Debug)]
pub struct DegreeEnd {
    pub degree: GroupElem,
    pub dim: usize,
    /// an invertible element was found in this degree
    pub invertible: bool,
}

#[derive(Clone, Debug)]
pub struct SchurReport {
    pub verdict: Verdict,
    pub end0_dim: usize,
    pub scalar_only: bool,
    pub per_degree: Vec<DegreeEnd>,
}

/// Dimension of `End₀` and of each graded piece of `End`, for a graded simple `W`.
pub fn schur_report(w: &GradedModule, opts: &Options) -> Result<SchurReport> {
    let verdict = graded_simple_module_check(w, opts);
    if let Verdict::NotGradedSimple { reason, .. } = &verdict {
        return Err(Error::NotGradedSimple(reason.clone()));
    }
    let mut per_degree = Vec::new();
    for alpha in w.group().elements() {
        let maps = hom_space(w, w, alpha, true)?;
        let invertible = reconstruct::find_invertible(w.field(), &maps.iter().map(|m| m.matrix.clone()).collect::<Vec<_>>(), opts).is_some();
        per_degree.push(DegreeEnd {
            degree: alpha.clone(),
            dim: maps.len(),
            invertible,
        });
    }
    let end0_dim = per_degree[0].dim;
    Ok(SchurReport {
        verdict,
        end0_dim,
        scalar_only: end0_dim == 1,
        per_degree,
    })
}

/// `V^f`: the action of `x_α` scaled by `f(α)`. If the acting algebra is
/// graded by a quotient, `f` must be trivial on the kernel.
pub fn twist(v: &GradedModule, f: &Character) -> Result<GradedModule> {
    let g = v.algebra();
    let f = if f.group() == g.group() { f.clone() } else { f.transfer(g.group())? };
    if f.field().spec() != v.field().spec() {
        return Err(Error::FieldMismatch("character and module over different fields".into()));
    }
    GradedModule::from_fn(g, v.group(), v.degrees().to_vec(), |i, j| {
        let s = f.eval(g.degree(i));
        v.action_entry(i, j).iter().map(|(k, c)| (*k, c * &s)).collect()
    })
}

/// `W ⊕ W′` over the same algebra and group.
pub fn direct_sum(w: &GradedModule, w2: &GradedModule) -> Result<GradedModule> {
    same_algebra(w, w2)?;
    if w.group() != w2.group() {
        return Err(Error::GradingMismatch("summands graded by different groups".into()));
    }
    let n = w.dim();
    let degrees = w.degrees().iter().chain(w2.degrees()).cloned().collect();
    GradedModule::from_fn(w.algebra(), w.group(), degrees, |i, j| {
        if j < n {
            w.action_entry(i, j).clone()
        } else {
            w2.action_entry(i, j - n).iter().map(|(k, c)| (k + n, c.clone())).collect()
        }
    })
}
