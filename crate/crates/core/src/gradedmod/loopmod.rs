use std::collections::HashMap;

use super::{is_module_hom, twist, GradedModule, ModuleHom};
use crate::abgroup::{annihilator, character_coset_reps, characters, Character, FinAbGroup, GroupElem, Subgroup};
use crate::error::{Error, Result};
use crate::exactfield::{FieldElem, Matrix, Subspace};

/// `M(Q, P, V)` together with its construction data.
#[derive(Clone, Debug)]
pub struct LoopModule {
    /// the module itself, graded by `Q`
    pub module: GradedModule,
    /// `V`, graded by `Q/P`
    pub base: GradedModule,
    pub p: Subgroup,
    /// basis vector `n` is `v_j ⊗ t^α` for `labels[n] = (j, α)`
    pub labels: Vec<(usize, GroupElem)>,
}

impl LoopModule {
    pub fn index_of(&self, j: usize, alpha: &GroupElem) -> Option<usize> {
        let a = self.module.group().canon(alpha);
        self.labels.iter().position(|(k, b)| *k == j && *b == a)
    }
}

/// Builds `M(Q, P, V)`. `V` is graded by `Q/P` and its algebra by `Q`;
/// `x_α · (v ⊗ t^β) = (x_α v) ⊗ t^{α+β}`.
pub fn loop_module(q: &FinAbGroup, p: &Subgroup, v: &GradedModule) -> Result<LoopModule> {
    if p.parent() != q {
        return Err(Error::GradingMismatch("P is not a subgroup of Q".into()));
    }
    let quo = q.quotient_by(p)?;
    if v.group() != &quo {
        return Err(Error::GradingMismatch(format!("V is graded by {}, expected {quo}", v.group())));
    }
    let g = v.algebra();
    if g.group() != q {
        return Err(Error::GradingMismatch(format!("the acting algebra is graded by {}, expected {q}", g.group())));
    }
    let mut labels = Vec::new();
    let mut index: HashMap<(usize, GroupElem), usize> = HashMap::new();
    for alpha in q.elements() {
        let bar = quo.canon(alpha);
        for j in 0..v.dim() {
            if *v.degree(j) == bar {
                index.insert((j, alpha.clone()), labels.len());
                labels.push((j, alpha.clone()));
            }
        }
    }
    let degrees = labels.iter().map(|(_, a)| a.clone()).collect();
    let module = GradedModule::from_fn(g, q, degrees, |i, n| {
        let (j, beta) = &labels[n];
        let target = q.add(g.degree(i), beta);
        v.action_entry(i, *j)
            .iter()
            .map(|(k, c)| (index[&(*k, target.clone())], c.clone()))
            .collect()
    })?;
    Ok(LoopModule {
        module,
        base: v.clone(),
        p: p.clone(),
        labels,
    })
}

/// `Ψ: M^f → M`, `v ↦ f(α)⁻¹ v` on degree `α`; checked to be a degree-0
/// isomorphism.
pub fn psi_iso(m: &LoopModule, f: &Character) -> Result<ModuleHom> {
    let w = &m.module;
    let f = if f.group() == w.group() { f.clone() } else { f.transfer(w.group())? };
    let twisted = twist(w, &f)?;
    let diag = w
        .degrees()
        .iter()
        .map(|d| f.eval(d).inv())
        .collect::<Result<Vec<FieldElem>>>()?;
    let h = ModuleHom {
        matrix: Matrix::diagonal(w.field(), &diag),
        degree: Some(w.group().zero()),
    };
    if !is_module_hom(&twisted, w, &h) {
        return Err(Error::VerificationFailure("Ψ does not intertwine M^f and M".into()));
    }
    Ok(h)
}

/// One summand of `M(Q,P,V) = ⊕_f ι_f(V^f)`.
#[derive(Clone, Debug)]
pub struct TwistSummand {
    pub character: Character,
    pub submodule: Subspace,
    /// `ι_f: V^f → M`, columns are images of `V`'s basis
    pub embedding: Matrix,
}

/// `ι_f(v_ᾱ) = Σ_{γ∈ᾱ} f(γ)⁻¹ v ⊗ t^γ` over coset representatives `f` of
/// `Q̂/P^⊥`; each embedding is checked to be an injective module map from
/// `V^f`, and the images to form a direct sum filling `M`.
pub fn twist_decomposition(m: &LoopModule) -> Result<Vec<TwistSummand>> {
    let w = &m.module;
    let field = w.field();
    let q = w.group();
    let fail = |s: String| Err(Error::DecompositionFailure(s));
    let chars = characters(q, field)?;
    let reps = character_coset_reps(&chars, &annihilator(&m.p, &chars));
    let mut out: Vec<TwistSummand> = Vec::new();
    let mut total = Subspace::zero(field, w.dim());
    for f in reps {
        let mut cols = Vec::with_capacity(m.base.dim());
        for j in 0..m.base.dim() {
            let mut col = vec![field.zero(); w.dim()];
            for (n, (k, gamma)) in m.labels.iter().enumerate() {
                if *k == j {
                    col[n] = f.eval(gamma).inv()?;
                }
            }
            cols.push(col);
        }
        let embedding = Matrix::from_columns(field, w.dim(), &cols);
        let vf = twist(&m.base, &f)?;
        if !vf.action().intertwines(w.action(), &embedding) {
            return fail(format!("ι_{:?} is not a module map", f.exps()));
        }
        let submodule = Subspace::from_vectors(field, w.dim(), cols);
        if submodule.dim() != m.base.dim() {
            return fail(format!("ι_{:?} is not injective", f.exps()));
        }
        if !total.intersect(&submodule)?.is_zero() {
            return fail("summands are not independent".into());
        }
        total = total.sum(&submodule)?;
        out.push(TwistSummand {
            character: f,
            submodule,
            embedding,
        });
    }
    if !total.is_full() {
        return fail(format!("summands span {} of {} dimensions", total.dim(), w.dim()));
    }
    Ok(out)
}

/// `τ(v ⊗ t^β) = f(β) μ(v) ⊗ t^{β+α}` for an isomorphism `μ: V^f → V` of
/// degree `ᾱ`. Fails with `WitnessInvalid` if `μ` is not such a map.
pub fn automorphism_from_twist(m: &LoopModule, f: &Character, mu: &Matrix, alpha: &GroupElem) -> Result<ModuleHom> {
    let w = &m.module;
    let q = w.group();
    let alpha = q.canonical(alpha)?;
    let f = if f.group() == q { f.clone() } else { f.transfer(q)? };
    let v = &m.base;
    if mu.rows() != v.dim() || mu.cols() != v.dim() {
        return Err(Error::DimensionMismatch(format!("μ is {}×{}, V has dimension {}", mu.rows(), mu.cols(), v.dim())));
    }
    let vf = twist(v, &f)?;
    let abar = v.group().canon(&alpha);
    let mu_hom = ModuleHom {
        matrix: mu.clone(),
        degree: Some(abar),
    };
    if !is_module_hom(&vf, v, &mu_hom) {
        return Err(Error::WitnessInvalid("μ is not a graded map V^f → V of degree ᾱ".into()));
    }
    if !mu.is_invertible() {
        return Err(Error::WitnessInvalid("μ is not invertible".into()));
    }
    let field = w.field();
    let mut tau = Matrix::zeros(field, w.dim(), w.dim());
    for (n, (j, beta)) in m.labels.iter().enumerate() {
        let s = f.eval(beta);
        let target = q.add(beta, &alpha);
        for k in 0..v.dim() {
            let c = mu.get(k, *j);
            if c.is_zero() {
                continue;
            }
            let r = m
                .index_of(k, &target)
                .ok_or_else(|| Error::VerificationFailure("μ(v) lands outside M".into()))?;
            tau.set(r, n, c * &s);
        }
    }
    let h = ModuleHom {
        matrix: tau,
        degree: Some(alpha),
    };
    if !is_module_hom(w, w, &h) || !h.matrix.is_invertible() {
        return Err(Error::VerificationFailure("τ is not a graded automorphism of M".into()));
    }
    Ok(h)
}
