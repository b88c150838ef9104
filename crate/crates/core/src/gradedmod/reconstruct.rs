use std::collections::{BTreeMap, VecDeque};

use super::{graded_simple_module_check, hom_space, loop_module, simple_module_check, verify_module, GradedModule, LoopModule};
use crate::abgroup::{GroupElem, Subgroup};
use crate::action::{random_small, Verdict};
use crate::config::Options;
use crate::error::{Error, Result};
use crate::exactfield::{primitive_root_of_unity, Field, FieldElem, FieldSpec, Matrix, Subspace};
use crate::liecore::dense_to_sparse;
use crate::report::Check;

/// Some invertible element of the span of `maps`: each basis map, then
/// random small combinations.
pub(crate) fn find_invertible(field: &Field, maps: &[Matrix], opts: &Options) -> Option<Matrix> {
    if let Some(m) = maps.iter().find(|m| m.is_invertible()) {
        return Some(m.clone());
    }
    if maps.len() < 2 {
        return None;
    }
    let mut rng = opts.rng(7, maps.len() as u64);
    for _ in 0..opts.probes.max(4) {
        let mut acc = maps[0].scale(&random_small(field, &mut rng));
        for m in &maps[1..] {
            acc = acc.add(&m.scale(&random_small(field, &mut rng)));
        }
        if acc.is_invertible() {
            return Some(acc);
        }
    }
    None
}

/// Degrees `α` for which `End(W)_α` contains an isomorphism, with one such
/// `Λ_α` each (`Λ_0 = id`).
#[derive(Clone, Debug)]
pub struct PPrime {
    pub elements: Vec<(GroupElem, Matrix)>,
    /// whether the degrees found form a subgroup
    pub closed: bool,
}

impl PPrime {
    pub fn degrees(&self) -> Vec<GroupElem> {
        self.elements.iter().map(|(a, _)| a.clone()).collect()
    }
}

pub fn pprime(w: &GradedModule, opts: &Options) -> Result<PPrime> {
    let q = w.group();
    let mut elements = Vec::new();
    for alpha in q.elements() {
        if q.is_zero(alpha) {
            elements.push((alpha.clone(), Matrix::identity(w.field(), w.dim())));
            continue;
        }
        let maps: Vec<Matrix> = hom_space(w, w, alpha, true)?.into_iter().map(|h| h.matrix).collect();
        if let Some(m) = find_invertible(w.field(), &maps, opts) {
            elements.push((alpha.clone(), m));
        }
    }
    let degs: Vec<GroupElem> = elements.iter().map(|(a, _)| a.clone()).collect();
    let closed = degs.iter().all(|a| degs.iter().all(|b| degs.contains(&q.add(a, b))));
    Ok(PPrime { elements, closed })
}

/// A commuting family `Λ_α` (`α ∈ P`) normalized so that `Λ_α Λ_β = Λ_{α+β}`.
#[derive(Clone, Debug)]
pub struct CommutativeChoice {
    pub p: Subgroup,
    /// `Λ_α` for every `α ∈ P`, in `P`'s element order
    pub lambdas: Vec<(GroupElem, Matrix)>,
    /// `Λ_γ ↦ s Λ_γ` applied to each generator `γ`
    pub scalings: Vec<(GroupElem, FieldElem)>,
}

/// Greedy maximal commuting subfamily of `P′`, scanned in lexicographic
/// order of degrees or in the order given by `order` (a permutation of
/// `0..|P′|`).
pub fn max_commutative_d(w: &GradedModule, pp: &PPrime, order: Option<&[usize]>) -> Result<CommutativeChoice> {
    let q = w.group();
    let field = w.field();
    let n = pp.elements.len();
    let perm: Vec<usize> = match order {
        None => (0..n).collect(),
        Some(o) => {
            let mut sorted = o.to_vec();
            sorted.sort_unstable();
            if sorted != (0..n).collect::<Vec<_>>() {
                return Err(Error::InvalidInput(format!("commute order must be a permutation of 0..{n}")));
            }
            o.to_vec()
        }
    };
    let mut kept: Vec<(GroupElem, Matrix)> = Vec::new();
    for &k in &perm {
        let (a, m) = &pp.elements[k];
        let commutes = kept
            .iter()
            .all(|(_, l)| l.commutator(m).map(|c| c.is_zero()).unwrap_or(false));
        if commutes {
            kept.push((a.clone(), m.clone()));
        }
    }
    let degs: Vec<GroupElem> = kept.iter().map(|(a, _)| a.clone()).collect();
    let p = q.subgroup(&degs);
    if p.order() != degs.len() {
        return Err(Error::VerificationFailure(format!(
            "commuting degrees {} do not form a subgroup",
            degs.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
        )));
    }
    // normalize generators, then build Λ on all of P by products
    let mut scalings = Vec::new();
    let mut gens: Vec<(GroupElem, Matrix)> = Vec::new();
    for g in p.generators() {
        let (_, m) = kept.iter().find(|(a, _)| a == g).expect("generator kept");
        let ord = q.order_of(g) as i64;
        let mut pw = Matrix::identity(field, w.dim());
        for _ in 0..ord {
            pw = pw.mul(m)?;
        }
        let c = scalar_of(&pw).ok_or_else(|| {
            Error::VerificationFailure(format!("Λ_{g}^{ord} is not a scalar"))
        })?;
        let s = find_root(field, &c.inv()?, ord as u64)
            .ok_or_else(|| Error::NoSuchRoot {
                field: field.spec().to_string(),
                order: ord as u64,
            })?;
        scalings.push((g.clone(), s.clone()));
        gens.push((g.clone(), m.scale(&s)));
    }
    let mut lambda: BTreeMap<GroupElem, Matrix> = BTreeMap::new();
    lambda.insert(q.zero(), Matrix::identity(field, w.dim()));
    let mut queue = VecDeque::from([q.zero()]);
    while let Some(a) = queue.pop_front() {
        let la = lambda[&a].clone();
        for (g, lg) in &gens {
            let b = q.add(&a, g);
            let lb = lg.mul(&la)?;
            match lambda.get(&b) {
                Some(prev) if *prev != lb => {
                    return Err(Error::VerificationFailure(format!(
                        "normalized family is only projective: two products disagree in degree {b}"
                    )))
                }
                Some(_) => {}
                None => {
                    lambda.insert(b.clone(), lb);
                    queue.push_back(b);
                }
            }
        }
    }
    let lambdas = p.elements().iter().map(|a| (a.clone(), lambda[a].clone())).collect();
    Ok(CommutativeChoice { p, lambdas, scalings })
}

fn scalar_of(m: &Matrix) -> Option<FieldElem> {
    let c = m.get(0, 0).clone();
    let id = Matrix::identity(m.field(), m.rows()).scale(&c);
    (*m == id && !c.is_zero()).then_some(c)
}

/// An `s` with `s^k = c`, searched among `q·ζ^j` for `q ∈ {±1, ±2, ±1/2}`
/// and roots of unity `ζ^j` of the field (all of `F_p` for small `p`).
fn find_root(field: &Field, c: &FieldElem, k: u64) -> Option<FieldElem> {
    let hit = |s: &FieldElem| s.pow(k as i64).ok().as_ref() == Some(c);
    if let FieldSpec::Prime { p } = field.spec() {
        if p <= 1 << 16 {
            return (1..p as i64).map(|v| field.from_i64(v)).find(hit);
        }
    }
    let roots = match field.spec() {
        FieldSpec::Cyclotomic { n } if n % 2 == 1 => 2 * n as u64,
        FieldSpec::Cyclotomic { n } => n as u64,
        FieldSpec::Rationals => 2,
        FieldSpec::Prime { p } => p - 1,
    };
    let zeta = primitive_root_of_unity(field, roots.min(1 << 16)).unwrap_or_else(|_| field.from_i64(-1));
    let scalars = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)];
    let mut z = field.one();
    for _ in 0..roots.min(1 << 16) {
        for (a, b) in scalars {
            let s = &field.from_ratio(a, b) * &z;
            if hit(&s) {
                return Some(s);
            }
        }
        z = &z * &zeta;
    }
    None
}

/// `V′ = span{v − Λ_α v}`, required to be a proper submodule.
pub fn vprime(w: &GradedModule, choice: &CommutativeChoice) -> Result<Subspace> {
    let field = w.field();
    let mut vecs = Vec::new();
    for (_, l) in &choice.lambdas {
        for j in 0..w.dim() {
            let e = w.basis_vector(j);
            let le = l.mul_vec(&e);
            vecs.push(e.iter().zip(&le).map(|(x, y)| x - y).collect());
        }
    }
    let s = Subspace::from_vectors(field, w.dim(), vecs);
    if !w.action().is_invariant(&s) {
        return Err(Error::NotProper("V′ is not a submodule".into()));
    }
    if s.is_full() && w.dim() > 0 {
        return Err(Error::NotProper("V′ is all of W".into()));
    }
    Ok(s)
}

/// `W ≅ M(Q, P, V)` with every step checked.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub graded: Verdict,
    pub pprime: PPrime,
    pub choice: CommutativeChoice,
    pub vprime: Subspace,
    /// `V = W/V′`, graded by `Q/P`
    pub v: GradedModule,
    pub loop_module: LoopModule,
    /// `κ: W → M(Q,P,V)`, `w_α ↦ (w_α + V′) ⊗ t^α`
    pub iso: Matrix,
    pub v_graded: Verdict,
    pub v_ungraded: Verdict,
    pub certificates: Vec<Check>,
}

impl Reconstruction {
    pub fn certified(&self) -> bool {
        self.certificates.iter().all(|c| c.passed)
    }
}

pub fn reconstruct_module(w: &GradedModule, opts: &Options) -> Result<Reconstruction> {
    let report = verify_module(w);
    if !report.passes() {
        return Err(Error::VerificationFailure("W is not a graded module".into()));
    }
    let graded = graded_simple_module_check(w, opts);
    if let Verdict::NotGradedSimple { reason, .. } = &graded {
        return Err(Error::NotGradedSimple(reason.clone()));
    }
    let q = w.group();
    let field = w.field();
    let pp = pprime(w, opts)?;
    let choice = max_commutative_d(w, &pp, opts.commute_order.as_deref())?;
    let vp = vprime(w, &choice)?;
    let quo = q.quotient_by(&choice.p)?;

    // W/V′ on the non-pivot coordinates of V′
    let keep = vp.non_pivots();
    let proj = |v: &[FieldElem]| -> Vec<FieldElem> {
        let r = vp.reduce(v);
        keep.iter().map(|&k| r[k].clone()).collect()
    };
    let v_degrees = keep.iter().map(|&k| quo.canon(w.degree(k))).collect();
    let v = GradedModule::from_fn(w.algebra(), &quo, v_degrees, |i, j| dense_to_sparse(&proj(&w.act(i, &w.basis_vector(keep[j])))))?;
    let m = loop_module(q, &choice.p, &v)?;
    let mut iso = Matrix::zeros(field, m.module.dim(), w.dim());
    for b in 0..w.dim() {
        let alpha = w.degree(b);
        for (j, c) in proj(&w.basis_vector(b)).into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = m
                .index_of(j, alpha)
                .ok_or_else(|| Error::VerificationFailure("κ leaves M(Q,P,V)".into()))?;
            iso.set(r, b, c);
        }
    }
    let mut certificates = vec![Check::pass("module-axioms")];
    certificates.push(Check::from_bool(
        "pprime-subgroup",
        pp.closed,
        "degrees of invertible endomorphisms are not closed under addition",
    ));
    certificates.push(Check::from_bool(
        "quotient-module",
        verify_module(&v).passes(),
        "W/V′ fails the module axioms",
    ));
    certificates.push(Check::from_bool(
        "kappa-dimension",
        m.module.dim() == w.dim(),
        format!("dim M(Q,P,V) = {}, dim W = {}", m.module.dim(), w.dim()),
    ));
    certificates.push(Check::from_bool(
        "kappa-hom",
        w.action().intertwines(m.module.action(), &iso) && w.action().has_degree(m.module.action(), &iso, &q.zero()),
        "κ is not a degree-0 module map",
    ));
    certificates.push(Check::from_bool(
        "kappa-bijective",
        iso.is_square() && iso.is_invertible(),
        "κ is not bijective",
    ));
    let v_graded = graded_simple_module_check(&v, opts);
    let v_ungraded = simple_module_check(&v, opts);
    certificates.push(Check::from_bool(
        "v-graded-simple",
        v_graded.is_graded_simple(),
        format!("V: {}", v_graded.name()),
    ));
    Ok(Reconstruction {
        graded,
        pprime: pp,
        choice,
        vprime: vp,
        v,
        loop_module: m,
        iso,
        v_graded,
        v_ungraded,
        certificates,
    })
}
