//! A graded vector space acted on by a family of homogeneous operators.
//!
//! Both the adjoint action of a graded Lie algebra on itself and the action
//! on a graded module reduce to this: ideals and submodules are invariant
//! subspaces, the centroid and `End₀` are commutant spaces, and the
//! graded-simplicity verdicts are the same procedure.

use std::collections::{BTreeMap, VecDeque};

use rand::Rng;

use crate::abgroup::{FinAbGroup, GroupElem};
use crate::config::Options;
use crate::error::{Error, Result};
use crate::exactfield::{
    idempotents_commutative, vecops, CommAlgebra, Field, FieldElem, Matrix, SpanBuilder, SparseSystem, Subspace,
};

/// Sparse column: `(row, value)` pairs.
pub type SparseVec = Vec<(usize, FieldElem)>;

#[derive(Clone, Debug)]
pub struct GradedAction {
    field: Field,
    group: FinAbGroup,
    degrees: Vec<GroupElem>,
    op_degrees: Vec<GroupElem>,
    /// `ops[i][j]` = image of basis vector `j` under operator `i`
    ops: Vec<Vec<SparseVec>>,
}

/// How a positive graded-simplicity verdict was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// every nonzero component is one-dimensional and every basis closure is everything
    TierA,
    /// the operators generate the full matrix algebra, so there is no invariant subspace at all
    Burnside,
    /// complete reducibility holds and the degree-0 commutant is the scalars
    ScalarEnd0,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    GradedSimple(Certificate),
    /// `witness` is a proper nonzero graded invariant subspace when one exists
    NotGradedSimple { witness: Option<Subspace>, reason: String },
    ProbablyGradedSimple { probes: usize },
    Inconclusive(String),
}

impl Verdict {
    pub fn is_graded_simple(&self) -> bool {
        matches!(self, Verdict::GradedSimple(_))
    }
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::GradedSimple(_) => "GradedSimple",
            Verdict::NotGradedSimple { .. } => "NotGradedSimple",
            Verdict::ProbablyGradedSimple { .. } => "ProbablyGradedSimple",
            Verdict::Inconclusive(_) => "Inconclusive",
        }
    }
}

pub(crate) fn apply_sparse(field: &Field, cols: &[SparseVec], v: &[FieldElem], out_dim: usize) -> Vec<FieldElem> {
    let mut out = vec![field.zero(); out_dim];
    for (j, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (k, c) in &cols[j] {
            out[*k] += &(x * c);
        }
    }
    out
}

pub(crate) fn random_small(field: &Field, rng: &mut impl Rng) -> FieldElem {
    field.from_i64(rng.gen_range(-2..=2))
}

impl GradedAction {
    pub fn new(
        field: &Field,
        group: &FinAbGroup,
        degrees: Vec<GroupElem>,
        op_degrees: Vec<GroupElem>,
        ops: Vec<Vec<SparseVec>>,
    ) -> Result<Self> {
        let degrees = degrees.iter().map(|d| group.canonical(d)).collect::<Result<Vec<_>>>()?;
        let op_degrees = op_degrees.iter().map(|d| group.canonical(d)).collect::<Result<Vec<_>>>()?;
        if ops.len() != op_degrees.len() || ops.iter().any(|o| o.len() != degrees.len()) {
            return Err(Error::DimensionMismatch("operator table has the wrong shape".into()));
        }
        Ok(GradedAction {
            field: field.clone(),
            group: group.clone(),
            degrees,
            op_degrees,
            ops,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }
    pub fn dim(&self) -> usize {
        self.degrees.len()
    }
    pub fn degrees(&self) -> &[GroupElem] {
        &self.degrees
    }
    pub fn op_degrees(&self) -> &[GroupElem] {
        &self.op_degrees
    }
    pub fn num_ops(&self) -> usize {
        self.ops.len()
    }
    pub fn op(&self, i: usize) -> &[SparseVec] {
        &self.ops[i]
    }

    pub fn apply(&self, i: usize, v: &[FieldElem]) -> Vec<FieldElem> {
        apply_sparse(&self.field, &self.ops[i], v, self.dim())
    }

    pub fn matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.dim(), self.dim());
        for (j, col) in self.ops[i].iter().enumerate() {
            for (k, c) in col {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Basis indices grouped by degree, in group order.
    pub fn components(&self) -> BTreeMap<GroupElem, Vec<usize>> {
        let mut out: BTreeMap<GroupElem, Vec<usize>> = BTreeMap::new();
        for (i, d) in self.degrees.iter().enumerate() {
            out.entry(d.clone()).or_default().push(i);
        }
        out
    }

    pub fn component(&self, alpha: &GroupElem) -> Vec<usize> {
        let a = self.group.canon(alpha);
        (0..self.dim()).filter(|&i| self.degrees[i] == a).collect()
    }

    /// Same operators, every degree pushed into `group` (same moduli, coarser).
    pub fn regrade(&self, group: &FinAbGroup) -> Result<GradedAction> {
        if !group.is_coarsening_of(&self.group) {
            return Err(Error::GradingMismatch(format!("{group} is not a quotient of {}", self.group)));
        }
        GradedAction::new(&self.field, group, self.degrees.clone(), self.op_degrees.clone(), self.ops.clone())
    }

    /// Same operators with every degree set to the identity of the trivial group.
    pub fn forget_grading(&self) -> GradedAction {
        let triv = FinAbGroup::trivial();
        GradedAction {
            field: self.field.clone(),
            degrees: vec![triv.zero(); self.dim()],
            op_degrees: vec![triv.zero(); self.num_ops()],
            group: triv,
            ops: self.ops.clone(),
        }
    }

    pub fn project(&self, v: &[FieldElem], alpha: &GroupElem) -> Vec<FieldElem> {
        let a = self.group.canon(alpha);
        v.iter()
            .zip(&self.degrees)
            .map(|(x, d)| if *d == a { x.clone() } else { self.field.zero() })
            .collect()
    }

    /// Degrees on which `v` has a nonzero component.
    pub fn support_of(&self, v: &[FieldElem]) -> Vec<GroupElem> {
        let mut s: Vec<GroupElem> = v
            .iter()
            .zip(&self.degrees)
            .filter(|(x, _)| !x.is_zero())
            .map(|(_, d)| d.clone())
            .collect();
        s.sort();
        s.dedup();
        s
    }

    /// Smallest invariant subspace containing `gens`.
    pub fn closure(&self, gens: &[Vec<FieldElem>]) -> Subspace {
        let mut span = SpanBuilder::new(&self.field, self.dim());
        let mut queue = VecDeque::new();
        for g in gens {
            if span.insert(g.clone()) {
                queue.push_back(g.clone());
            }
        }
        while let Some(v) = queue.pop_front() {
            if span.is_full() {
                break;
            }
            for i in 0..self.num_ops() {
                let w = self.apply(i, &v);
                if span.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        span.finish()
    }

    pub fn closure_of(&self, s: &Subspace) -> Subspace {
        self.closure(&s.vectors())
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        s.vectors()
            .iter()
            .all(|v| (0..self.num_ops()).all(|i| s.contains(&self.apply(i, v))))
    }

    /// `U ∩ (component α)`.
    pub fn homogeneous_part(&self, s: &Subspace, alpha: &GroupElem) -> Subspace {
        let comp = Subspace::coordinate(&self.field, self.dim(), &self.component(alpha));
        s.intersect(&comp).expect("same ambient")
    }

    /// True when `U = ⊕_α (U ∩ component α)`.
    pub fn is_graded_subspace(&self, s: &Subspace) -> bool {
        let comps = self.components();
        s.vectors()
            .iter()
            .all(|v| comps.keys().all(|a| s.contains(&self.project(v, a))))
    }

    /// Homogeneous basis of a graded subspace, component by component.
    pub fn homogeneous_basis(&self, s: &Subspace) -> Vec<(GroupElem, Vec<FieldElem>)> {
        let mut out = Vec::new();
        for alpha in self.components().keys() {
            for v in self.homogeneous_part(s, alpha).vectors() {
                out.push((alpha.clone(), v));
            }
        }
        out
    }

    /// Linear maps `φ: self → dst` commuting with every operator; with
    /// `Some(γ)` only those sending component α into component α+γ.
    /// Operators are matched by index, so both sides must be actions of the
    /// same algebra basis. Matrices are `dst.dim × self.dim`.
    pub fn hom_space(&self, dst: &GradedAction, gamma: Option<&GroupElem>) -> Result<Vec<Matrix>> {
        if self.num_ops() != dst.num_ops() {
            return Err(Error::DimensionMismatch("actions of different algebras".into()));
        }
        if gamma.is_some() && self.group != dst.group {
            return Err(Error::GradingMismatch("graded homs need a common grading group".into()));
        }
        let (n, m) = (self.dim(), dst.dim());
        let gamma = gamma.map(|g| self.group.canon(g));
        let mut var = vec![usize::MAX; m * n];
        let mut nvars = 0;
        for b in 0..n {
            let target = gamma.as_ref().map(|g| self.group.add(&self.degrees[b], g));
            for a in 0..m {
                if target.as_ref().is_none_or(|t| dst.degrees[a] == *t) {
                    var[a * n + b] = nvars;
                    nvars += 1;
                }
            }
        }
        if nvars == 0 {
            return Ok(vec![]);
        }
        let mut sys = SparseSystem::new(&self.field, nvars);
        for i in 0..self.num_ops() {
            for b in 0..n {
                let mut acc: BTreeMap<usize, BTreeMap<usize, FieldElem>> = BTreeMap::new();
                // D_i φ(e_b)
                for mm in 0..m {
                    let x = var[mm * n + b];
                    if x == usize::MAX {
                        continue;
                    }
                    for (a, c) in &dst.ops[i][mm] {
                        let e = acc.entry(*a).or_default().entry(x).or_insert_with(|| self.field.zero());
                        *e += c;
                    }
                }
                // − φ(S_i e_b)
                for (k, s) in &self.ops[i][b] {
                    for a in 0..m {
                        let x = var[a * n + k];
                        if x == usize::MAX {
                            continue;
                        }
                        let e = acc.entry(a).or_default().entry(x).or_insert_with(|| self.field.zero());
                        *e -= s;
                    }
                }
                for (_, row) in acc {
                    sys.add_equation(row.into_iter().filter(|(_, v)| !v.is_zero()));
                }
                if sys.is_full_rank() {
                    return Ok(vec![]);
                }
            }
        }
        let sols = sys.nullspace();
        Ok(sols
            .vectors()
            .into_iter()
            .map(|sol| {
                let mut mat = Matrix::zeros(&self.field, m, n);
                for a in 0..m {
                    for b in 0..n {
                        let x = var[a * n + b];
                        if x != usize::MAX && !sol[x].is_zero() {
                            mat.set(a, b, sol[x].clone());
                        }
                    }
                }
                mat
            })
            .collect())
    }

    /// True when `φ` (a `dst.dim × self.dim` matrix) commutes with every operator.
    pub fn intertwines(&self, dst: &GradedAction, phi: &Matrix) -> bool {
        if phi.rows() != dst.dim() || phi.cols() != self.dim() || self.num_ops() != dst.num_ops() {
            return false;
        }
        (0..self.dim()).all(|b| {
            let col = phi.column(b);
            (0..self.num_ops()).all(|i| {
                let left = dst.apply(i, &col);
                let right = phi.mul_vec(&self.apply(i, &unit(&self.field, self.dim(), b)));
                left == right
            })
        })
    }

    /// True when `φ` maps component α into dst's component α+γ.
    pub fn has_degree(&self, dst: &GradedAction, phi: &Matrix, gamma: &GroupElem) -> bool {
        (0..self.dim()).all(|b| {
            let t = self.group.add(&self.degrees[b], gamma);
            (0..dst.dim()).all(|a| phi.get(a, b).is_zero() || dst.degrees[a] == t)
        })
    }

    /// Whether the operators (with the identity) generate all of `End(V)`.
    pub fn generates_full_matrix_algebra(&self) -> bool {
        let n = self.dim();
        if n == 0 {
            return false;
        }
        let mats: Vec<Matrix> = (0..self.num_ops()).map(|i| self.matrix(i)).collect();
        let mut span = SpanBuilder::new(&self.field, n * n);
        let id = Matrix::identity(&self.field, n);
        span.insert(id.entries().to_vec());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            if span.is_full() {
                return true;
            }
            for a in &mats {
                let y = a.mul(&x).expect("square");
                if span.insert(y.entries().to_vec()) {
                    queue.push_back(y);
                }
            }
        }
        span.is_full()
    }

    /// Graded simplicity of the action.
    ///
    /// `semisimple` asserts complete reducibility into graded simple pieces,
    /// which turns a one-dimensional degree-0 commutant into a certificate.
    pub fn graded_simple_check(&self, opts: &Options, semisimple: bool) -> Verdict {
        let n = self.dim();
        if n == 0 {
            return Verdict::NotGradedSimple {
                witness: None,
                reason: "zero space".into(),
            };
        }
        let acts = (0..self.num_ops()).any(|i| self.ops[i].iter().any(|c| !c.is_empty()));
        if !acts {
            let witness = (n > 1).then(|| Subspace::from_vectors(&self.field, n, vec![unit(&self.field, n, 0)]));
            return Verdict::NotGradedSimple {
                witness,
                reason: "the action is zero".into(),
            };
        }
        for b in 0..n {
            let c = self.closure(&[unit(&self.field, n, b)]);
            if !c.is_full() {
                return Verdict::NotGradedSimple {
                    witness: Some(c),
                    reason: format!("closure of basis vector {b} is proper"),
                };
            }
        }
        let comps = self.components();
        if comps.values().all(|c| c.len() == 1) {
            return Verdict::GradedSimple(Certificate::TierA);
        }
        if n <= 16 && self.generates_full_matrix_algebra() {
            return Verdict::GradedSimple(Certificate::Burnside);
        }
        if let Ok(end0) = self.hom_space(self, Some(&self.group.zero())) {
            if end0.len() == 1 && semisimple {
                return Verdict::GradedSimple(Certificate::ScalarEnd0);
            }
            if end0.len() > 1 {
                if let Some(w) = self.split_by_idempotents(&end0) {
                    return Verdict::NotGradedSimple {
                        witness: Some(w),
                        reason: "image of a degree-0 idempotent endomorphism".into(),
                    };
                }
            }
        }
        if opts.probes == 0 {
            return Verdict::Inconclusive("no probes requested".into());
        }
        for (ci, (_, idx)) in comps.iter().enumerate() {
            for p in 0..opts.probes {
                let mut rng = opts.rng(ci as u64, p as u64);
                let v = random_on(&self.field, n, idx, &mut rng);
                let c = self.closure(&[v]);
                if !c.is_full() {
                    return Verdict::NotGradedSimple {
                        witness: Some(c),
                        reason: "closure of a random homogeneous vector is proper".into(),
                    };
                }
            }
        }
        Verdict::ProbablyGradedSimple {
            probes: opts.probes * comps.len(),
        }
    }

    /// Proper nonzero image of a nontrivial idempotent in the span of `maps`
    /// (which must be a commutative algebra containing the identity).
    pub fn split_by_idempotents(&self, maps: &[Matrix]) -> Option<Subspace> {
        let alg = CommAlgebra::from_matrices(&self.field, maps).ok()?;
        let ids = idempotents_commutative(&alg).ok()?;
        for e in ids {
            let mut m = Matrix::zeros(&self.field, maps[0].rows(), maps[0].cols());
            for (c, b) in e.iter().zip(maps) {
                if !c.is_zero() {
                    m = m.add(&b.scale(c));
                }
            }
            let img = m.image();
            if !img.is_zero() && !img.is_full() {
                return Some(img);
            }
        }
        None
    }
}

pub(crate) fn unit(field: &Field, n: usize, i: usize) -> Vec<FieldElem> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Random nonzero vector supported on `idx`, coordinates in `{−2,…,2}`.
pub(crate) fn random_on(field: &Field, n: usize, idx: &[usize], rng: &mut impl Rng) -> Vec<FieldElem> {
    loop {
        let mut v = vec![field.zero(); n];
        for &i in idx {
            v[i] = random_small(field, rng);
        }
        if !vecops::is_zero(&v) {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// sl₂ acting on its natural 2-dim module, e=E12, h=diag(1,−1), f=E21.
    fn natural_sl2(field: &Field) -> GradedAction {
        let triv = FinAbGroup::trivial();
        let z = triv.zero();
        let one = field.one();
        let ops = vec![
            vec![vec![], vec![(0, one.clone())]],
            vec![vec![(0, one.clone())], vec![(1, -one.clone())]],
            vec![vec![(1, one)], vec![]],
        ];
        GradedAction::new(field, &triv, vec![z.clone(); 2], vec![z; 3], ops).unwrap()
    }

    #[test]
    fn natural_module_is_simple() {
        let q = Field::rationals();
        let a = natural_sl2(&q);
        assert!(a.generates_full_matrix_algebra());
        assert!(matches!(
            a.graded_simple_check(&Options::default(), false),
            Verdict::GradedSimple(Certificate::Burnside)
        ));
        let end = a.hom_space(&a, None).unwrap();
        assert_eq!(end.len(), 1);
        assert!(a.intertwines(&a, &end[0]));
    }

    #[test]
    fn closure_of_highest_weight_vector() {
        let q = Field::rationals();
        let a = natural_sl2(&q);
        assert!(a.closure(&[unit(&q, 2, 0)]).is_full());
        assert!(a.closure(&[]).is_zero());
    }
}
