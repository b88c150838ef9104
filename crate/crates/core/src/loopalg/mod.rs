//! Loop algebras `g(Q, P, a) = ⊕_α a_ᾱ ⊗ t^α`, the character action `τ_f`,
//! and recognition of a graded-simple algebra as a loop algebra.
//!
//! ```
//! use gsla_core::abgroup::FinAbGroup;
//! use gsla_core::catalog::sl2;
//! use gsla_core::exactfield::Field;
//! use gsla_core::loopalg::loop_algebra;
//! let k = Field::cyclotomic(4);
//! let z2 = FinAbGroup::cyclic(2);
//! let p = z2.whole();
//! let quo = z2.quotient_by(&p).unwrap();
//! let a = sl2(&k).unwrap().with_degrees(&quo, vec![quo.zero(); 3]).unwrap();
//! let l = loop_algebra(&z2, &p, &a).unwrap();
//! assert_eq!(l.algebra.dim(), 6);
//! ```

mod recognize;

pub use recognize::{find_proper_ideal, recognize, refine_ideal, Recognition, IdealRoute};

use std::collections::HashMap;

use crate::abgroup::{
    annihilator, character_coset_reps, characters, Character, FinAbGroup, GroupElem, Subgroup,
};
use crate::error::{Error, Result};
use crate::exactfield::{FieldElem, Matrix, Subspace};
use crate::liecore::GradedLieAlgebra;

/// `g(Q, P, a)` together with its construction data.
#[derive(Clone, Debug)]
pub struct LoopAlgebra {
    /// the algebra itself, graded by `Q`
    pub algebra: GradedLieAlgebra,
    /// `a`, graded by `Q/P`
    pub base: GradedLieAlgebra,
    pub p: Subgroup,
    /// basis vector `n` of `algebra` is `x_i ⊗ t^α` for `labels[n] = (i, α)`
    pub labels: Vec<(usize, GroupElem)>,
}

impl LoopAlgebra {
    pub fn index_of(&self, i: usize, alpha: &GroupElem) -> Option<usize> {
        let a = self.algebra.group().canon(alpha);
        self.labels.iter().position(|(j, b)| *j == i && *b == a)
    }

    /// `ψ(x) = |P|⁻¹ Σ_i x_i Σ_{β∈P} x_i ⊗ t^{α_i+β}`, the canonical embedding
    /// of `a` (basis vector `x_i` has Q/P-degree `ᾱ_i`, represented by `α_i`).
    pub fn psi(&self, x: &[FieldElem]) -> Result<Vec<FieldElem>> {
        let field = self.algebra.field();
        let q = self.algebra.group();
        let inv = field.from_i64(self.p.order() as i64).inv().map_err(|_| {
            Error::DecompositionFailure(format!("|P| = {} is not invertible in {}", self.p.order(), field.spec()))
        })?;
        let mut out = vec![field.zero(); self.algebra.dim()];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let alpha = self.base.degree(i);
            for beta in self.p.elements() {
                let n = self.index_of(i, &q.add(alpha, beta)).expect("label exists");
                out[n] += &(c * &inv);
            }
        }
        Ok(out)
    }

    /// `I = ψ(a)`.
    pub fn canonical_ideal(&self) -> Result<Subspace> {
        let vecs = (0..self.base.dim())
            .map(|i| self.psi(&self.base.basis_vector(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::from_vectors(self.algebra.field(), self.algebra.dim(), vecs))
    }
}

/// Builds `g(Q, P, a)`; `a` must be graded by exactly `Q/P`.
pub fn loop_algebra(q: &FinAbGroup, p: &Subgroup, a: &GradedLieAlgebra) -> Result<LoopAlgebra> {
    if p.parent() != q {
        return Err(Error::GradingMismatch("P is not a subgroup of Q".into()));
    }
    let quo = q.quotient_by(p)?;
    if a.group() != &quo {
        return Err(Error::GradingMismatch(format!("a is graded by {}, expected {quo}", a.group())));
    }
    let mut labels = Vec::new();
    let mut index: HashMap<(usize, GroupElem), usize> = HashMap::new();
    for alpha in q.elements() {
        let bar = quo.canon(alpha);
        for i in 0..a.dim() {
            if *a.degree(i) == bar {
                index.insert((i, alpha.clone()), labels.len());
                labels.push((i, alpha.clone()));
            }
        }
    }
    debug_assert_eq!(labels.len(), a.dim() * p.order());
    let degrees = labels.iter().map(|(_, al)| al.clone()).collect();
    let algebra = GradedLieAlgebra::from_fn(a.field(), q, degrees, |m, n| {
        let (i, al) = &labels[m];
        let (j, be) = &labels[n];
        let sum = q.add(al, be);
        a.bracket_basis(*i, *j)
            .iter()
            .map(|(k, c)| (index[&(*k, sum.clone())], c.clone()))
            .collect()
    })?;
    Ok(LoopAlgebra {
        algebra,
        base: a.clone(),
        p: p.clone(),
        labels,
    })
}

/// An invertible linear map of `g` shifting degrees by `degree`.
#[derive(Clone, Debug)]
pub struct GradedAutomorphism {
    pub matrix: Matrix,
    pub degree: GroupElem,
}

/// `τ_f`: scale `g_α` by `f(α)`.
pub fn tau_f(g: &GradedLieAlgebra, f: &Character) -> Result<GradedAutomorphism> {
    if f.group() != g.group() {
        return Err(Error::GradingMismatch(format!("character of {} applied to {}", f.group(), g.group())));
    }
    if f.field().spec() != g.field().spec() {
        return Err(Error::FieldMismatch(format!("character over {}, algebra over {}", f.field().spec(), g.field().spec())));
    }
    let diag: Vec<FieldElem> = g.degrees().iter().map(|d| f.eval(d)).collect();
    Ok(GradedAutomorphism {
        matrix: Matrix::diagonal(g.field(), &diag),
        degree: g.group().zero(),
    })
}

/// `τ_f(U)`.
pub fn tau_image(g: &GradedLieAlgebra, f: &Character, u: &Subspace) -> Subspace {
    let scale: Vec<FieldElem> = g.degrees().iter().map(|d| f.eval(d)).collect();
    let vecs = u
        .vectors()
        .into_iter()
        .map(|v| v.iter().zip(&scale).map(|(x, s)| x * s).collect())
        .collect();
    Subspace::from_vectors(g.field(), g.dim(), vecs)
}

/// `Inv(I) = {f : τ_f(I) = I}`.
pub fn inv_subgroup(g: &GradedLieAlgebra, i: &Subspace, chars: &[Character]) -> Vec<Character> {
    chars.iter().filter(|f| tau_image(g, f, i) == *i).cloned().collect()
}

/// `σ[b_i, b_j] = [σ b_i, σ b_j]` for all basis pairs (σ: `g → h`, `h.dim × g.dim`).
pub fn preserves_bracket(g: &GradedLieAlgebra, h: &GradedLieAlgebra, sigma: &Matrix) -> Option<(usize, usize)> {
    let cols: Vec<Vec<FieldElem>> = (0..g.dim()).map(|j| sigma.column(j)).collect();
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs = sigma.mul_vec(&g.bracket(&g.basis_vector(i), &g.basis_vector(j)));
            if lhs != h.bracket(&cols[i], &cols[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// One member of the decomposition: the ideal `τ_f(I)` and the
/// isomorphism `a → τ_f(I)` (columns are images of `a`'s basis).
#[derive(Clone, Debug)]
pub struct LoopIdeal {
    pub character: Character,
    pub ideal: Subspace,
    pub iso: Matrix,
}

/// `g(Q,P,a) = ⊕_f τ_f(ψ(a))` over coset representatives of `Q̂/P^⊥`,
/// every property checked.
pub fn loop_ideal_decomposition(l: &LoopAlgebra) -> Result<Vec<LoopIdeal>> {
    let g = &l.algebra;
    let field = g.field();
    let fail = |m: String| Err(Error::DecompositionFailure(m));
    let chars = characters(g.group(), field)?;
    let perp = annihilator(&l.p, &chars);
    let reps = character_coset_reps(&chars, &perp);
    let base_vecs: Vec<Vec<FieldElem>> = (0..l.base.dim())
        .map(|i| l.psi(&l.base.basis_vector(i)))
        .collect::<Result<_>>()?;
    let mut out: Vec<LoopIdeal> = Vec::new();
    for f in reps {
        let scale: Vec<FieldElem> = g.degrees().iter().map(|d| f.eval(d)).collect();
        let cols: Vec<Vec<FieldElem>> = base_vecs
            .iter()
            .map(|v| v.iter().zip(&scale).map(|(x, s)| x * s).collect())
            .collect();
        let iso = Matrix::from_columns(field, g.dim(), &cols);
        let ideal = Subspace::from_vectors(field, g.dim(), cols);
        if ideal.dim() != l.base.dim() {
            return fail("ψ is not injective".into());
        }
        if !g.is_ideal(&ideal) {
            return fail(format!("τ_{:?}(I) is not an ideal", f.exps()));
        }
        if let Some((i, j)) = preserves_bracket(&l.base, g, &iso) {
            return fail(format!("embedding does not preserve [x_{i}, x_{j}]"));
        }
        let quo = l.base.group();
        for c in 0..l.base.dim() {
            for r in 0..g.dim() {
                if !iso.get(r, c).is_zero() && quo.canon(g.degree(r)) != *l.base.degree(c) {
                    return fail(format!("embedding moves x_{c} out of its Q/P-component"));
                }
            }
        }
        for prev in &out {
            if !ideal.intersect(&prev.ideal)?.is_zero() {
                return fail("two members intersect".into());
            }
            if !g.bracket_subspaces(&ideal, &prev.ideal).is_zero() {
                return fail("two members do not commute".into());
            }
        }
        out.push(LoopIdeal { character: f, ideal, iso });
    }
    if out.len() != l.p.order() {
        return fail(format!("{} members, expected |P| = {}", out.len(), l.p.order()));
    }
    let total: usize = out.iter().map(|m| m.ideal.dim()).sum();
    if total != g.dim() {
        return fail(format!("members span {total} of {} dimensions", g.dim()));
    }
    Ok(out)
}

/// Group homomorphism given by images of the standard generators.
#[derive(Clone, Debug)]
pub struct GroupMap {
    pub source: FinAbGroup,
    pub target: FinAbGroup,
    pub images: Vec<GroupElem>,
}

impl GroupMap {
    pub fn identity(q: &FinAbGroup) -> Self {
        let images = (0..q.rank())
            .map(|i| {
                let mut c = vec![0; q.rank()];
                c[i] = 1;
                q.canon(&GroupElem::new(c))
            })
            .collect();
        GroupMap {
            source: q.clone(),
            target: q.clone(),
            images,
        }
    }

    pub fn apply(&self, a: &GroupElem) -> GroupElem {
        let mut acc = self.target.zero();
        for (x, img) in a.coords().iter().zip(&self.images) {
            acc = self.target.add(&acc, &self.target.scale(*x, img));
        }
        acc
    }

    /// Well defined, additive and bijective.
    pub fn check(&self) -> Result<()> {
        let t = &self.target;
        if self.images.len() != self.source.rank() {
            return Err(Error::NotHomomorphism("one image per generator required".into()));
        }
        for img in &self.images {
            t.canonical(img).map_err(|e| Error::NotHomomorphism(e.to_string()))?;
        }
        for (i, n) in self.source.moduli().iter().enumerate() {
            if !t.is_zero(&t.scale(*n, &self.images[i])) {
                return Err(Error::NotHomomorphism(format!("generator {i} has order dividing {n}, its image does not")));
            }
        }
        for s in self.source.quotient_subgroup_elements() {
            if !t.is_zero(&self.apply(s)) {
                return Err(Error::NotHomomorphism(format!("{s} is zero in the source but not in the target")));
            }
        }
        let mut imgs: Vec<GroupElem> = self.source.elements().iter().map(|a| self.apply(a)).collect();
        imgs.sort();
        imgs.dedup();
        if imgs.len() != self.source.order() || self.source.order() != t.order() {
            return Err(Error::NotHomomorphism("not bijective".into()));
        }
        Ok(())
    }
}

/// Result of [`verify_graded_iso`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoVerdict {
    pub ok: bool,
    pub reason: Option<String>,
}

/// Is `σ: g → g′` an isomorphism with `σ(g_α) = g′_{τ(α)}`?
pub fn verify_graded_iso(g: &GradedLieAlgebra, h: &GradedLieAlgebra, tau: &GroupMap, sigma: &Matrix) -> Result<IsoVerdict> {
    if sigma.rows() != h.dim() || sigma.cols() != g.dim() || g.dim() != h.dim() {
        return Err(Error::DimensionMismatch(format!(
            "σ is {}×{}, algebras have dimensions {} and {}",
            sigma.rows(),
            sigma.cols(),
            g.dim(),
            h.dim()
        )));
    }
    if &tau.source != g.group() || &tau.target != h.group() {
        return Err(Error::NotHomomorphism("τ has the wrong source or target".into()));
    }
    tau.check()?;
    let bad = |r: String| Ok(IsoVerdict { ok: false, reason: Some(r) });
    if !sigma.is_invertible() {
        return bad("σ is not invertible".into());
    }
    if let Some((i, j)) = preserves_bracket(g, h, sigma) {
        return bad(format!("σ does not preserve [b_{i}, b_{j}]"));
    }
    for b in 0..g.dim() {
        let t = tau.apply(g.degree(b));
        for a in 0..h.dim() {
            if !sigma.get(a, b).is_zero() && *h.degree(a) != t {
                return bad(format!("σ sends b_{b} (degree {}) outside degree {t}", g.degree(b)));
            }
        }
    }
    Ok(IsoVerdict { ok: true, reason: None })
}

/// `τ(P) = P′` as sets.
pub fn maps_subgroup(tau: &GroupMap, p: &Subgroup, p2: &Subgroup) -> bool {
    let mut img: Vec<GroupElem> = p.elements().iter().map(|a| tau.apply(a)).collect();
    img.sort();
    img.dedup();
    img == p2.elements()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{pauli_sl2, sl2};
    use crate::exactfield::Field;
    use crate::liecore::{size, verify_algebra};

    fn z2_loop(field: &Field) -> LoopAlgebra {
        let z2 = FinAbGroup::cyclic(2);
        let p = z2.whole();
        let quo = z2.quotient_by(&p).unwrap();
        let a = sl2(field).unwrap().with_degrees(&quo, vec![quo.zero(); 3]).unwrap();
        loop_algebra(&z2, &p, &a).unwrap()
    }

    #[test]
    fn loop_dims() {
        let k = Field::cyclotomic(4);
        let l = z2_loop(&k);
        assert_eq!(l.algebra.dim(), 6);
        assert!(verify_algebra(&l.algebra).passes());
        let g = pauli_sl2(&k).unwrap();
        let q = g.group().clone();
        let triv = q.trivial_subgroup();
        let a = g.regrade(&q.quotient_by(&triv).unwrap()).unwrap();
        let l0 = loop_algebra(&q, &triv, &a).unwrap();
        assert_eq!(l0.algebra.dim(), 3);
    }

    #[test]
    fn tau_laws() {
        let k = Field::cyclotomic(4);
        let l = z2_loop(&k);
        let chars = characters(l.algebra.group(), &k).unwrap();
        let t = tau_f(&l.algebra, &chars[1]).unwrap();
        let t2 = t.matrix.mul(&t.matrix).unwrap();
        assert_eq!(t2, Matrix::identity(&k, 6));
        assert_eq!(tau_f(&l.algebra, &chars[0]).unwrap().matrix, Matrix::identity(&k, 6));
    }

    #[test]
    fn canonical_ideal_properties() {
        let k = Field::cyclotomic(4);
        let l = z2_loop(&k);
        let i = l.canonical_ideal().unwrap();
        assert_eq!(i.dim(), 3);
        assert!(l.algebra.is_ideal(&i));
        let chars = characters(l.algebra.group(), &k).unwrap();
        assert_eq!(inv_subgroup(&l.algebra, &i, &chars).len(), 1);
        assert_eq!(size(&l.algebra, &i, 1 << 16).unwrap(), 2);
        let dec = loop_ideal_decomposition(&l).unwrap();
        assert_eq!(dec.len(), 2);
    }

    #[test]
    fn group_map_checks() {
        let z4 = FinAbGroup::cyclic(4);
        let neg = GroupMap {
            source: z4.clone(),
            target: z4.clone(),
            images: vec![GroupElem::new(vec![3])],
        };
        assert!(neg.check().is_ok());
        let dbl = GroupMap {
            images: vec![GroupElem::new(vec![2])],
            ..neg.clone()
        };
        assert!(matches!(dbl.check(), Err(Error::NotHomomorphism(_))));
        let p = z4.subgroup(&[GroupElem::new(vec![2])]);
        assert!(maps_subgroup(&neg, &p, &p));
    }
}
