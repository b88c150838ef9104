use super::{pauli_matrices, sl2, sl2_pair};
use crate::abgroup::{FinAbGroup, GroupElem, Subgroup};
use crate::error::{Error, Result};
use crate::exactfield::{Coordinatizer, Field, FieldElem, Matrix};
use crate::gradedmod::{direct_sum, GradedModule};
use crate::liecore::{dense_to_sparse, GradedLieAlgebra};

/// 2×2 matrices under left multiplication by the Pauli-graded `sl₂`.
/// Basis `I, diag(1,−1), E12+E21, E12−E21` in degrees `(0,0), (1,0), (0,1), (1,1)`.
pub fn matrix2_module(field: &Field) -> Result<GradedModule> {
    let g = super::pauli_sl2(field)?;
    let [h, x, j] = pauli_matrices(field);
    let basis = [Matrix::identity(field, 2), h.clone(), x.clone(), j.clone()];
    let coords = Coordinatizer::new(field, 4, basis.iter().map(|m| m.entries().to_vec()).collect())?;
    let degrees = [[0, 0], [1, 0], [0, 1], [1, 1]].iter().map(|d| GroupElem::new(d.to_vec())).collect();
    let ops = [h, x, j];
    GradedModule::from_fn(&g, g.group(), degrees, |i, k| {
        let prod = ops[i].mul(&basis[k]).expect("2x2");
        dense_to_sparse(&coords.coords(prod.entries()).expect("basis spans all matrices"))
    })
}

/// `L(n)`: basis `v_0, …, v_n` with `h v_k = (n−2k) v_k`, `f v_k = v_{k+1}`,
/// `e v_k = k(n−k+1) v_{k−1}`; trivially graded.
pub fn sl2_irrep(field: &Field, n: usize) -> Result<GradedModule> {
    require_small_weight(field, n)?;
    let g = sl2(field)?;
    irrep_over(&g, g.group(), n)
}

fn irrep_over(g: &GradedLieAlgebra, group: &FinAbGroup, n: usize) -> Result<GradedModule> {
    let field = g.field().clone();
    let degrees = vec![group.zero(); n + 1];
    GradedModule::from_fn(g, group, degrees, |i, k| irrep_entry(&field, n, i, k))
}

/// `x_i v_k` in `L(n)` for `x = e, h, f`.
fn irrep_entry(field: &Field, n: usize, i: usize, k: usize) -> Vec<(usize, FieldElem)> {
    let (n, kk) = (n as i64, k as i64);
    match i {
        0 if k > 0 => vec![(k - 1, field.from_i64(kk * (n - kk + 1)))],
        1 => vec![(k, field.from_i64(n - 2 * kk))],
        2 if kk < n => vec![(k + 1, field.one())],
        _ => vec![],
    }
}

fn irrep_matrices(field: &Field, n: usize) -> [Matrix; 3] {
    [0, 1, 2].map(|i| {
        let mut m = Matrix::zeros(field, n + 1, n + 1);
        for k in 0..=n {
            for (r, c) in irrep_entry(field, n, i, k) {
                m.set(r, k, c);
            }
        }
        m
    })
}

/// `A ⊗ I + s·(I ⊗ B)`.
fn kron_sum(field: &Field, a: &Matrix, b: &Matrix, s: i64) -> Matrix {
    let (da, db) = (a.rows(), b.rows());
    let s = field.from_i64(s);
    let mut m = Matrix::zeros(field, da * db, da * db);
    for i in 0..da {
        for j in 0..db {
            for k in 0..da {
                let c = a.get(k, i);
                if !c.is_zero() {
                    let prev = m.get(k * db + j, i * db + j).clone();
                    m.set(k * db + j, i * db + j, &prev + c);
                }
            }
            for k in 0..db {
                let c = b.get(k, j);
                if !c.is_zero() {
                    let prev = m.get(i * db + k, i * db + j).clone();
                    m.set(i * db + k, i * db + j, &prev + &(c * &s));
                }
            }
        }
    }
    m
}

/// Module over the swap-graded `sl₂ ⊕ sl₂` from dense operator matrices and
/// a homogeneous basis of the space they act on.
fn swap_graded(field: &Field, ops: &[Matrix], basis: Vec<Vec<FieldElem>>, degrees: Vec<GroupElem>) -> Result<GradedModule> {
    let g = sl2_pair(field)?;
    let n = ops[0].rows();
    let coords = Coordinatizer::new(field, n, basis.clone())?;
    GradedModule::from_fn(&g, g.group(), degrees, |i, k| {
        dense_to_sparse(&coords.coords(&ops[i].mul_vec(&basis[k])).expect("invariant space"))
    })
}

/// `(x, y)` ranges over `(x, x)` then `(x, −x)` for `x = e, h, f`.
fn pair_signs() -> impl Iterator<Item = (usize, i64)> {
    [(0, 1), (1, 1), (2, 1), (0, -1), (1, -1), (2, -1)].into_iter()
}

/// `L(h₁,h₂) ⊕ L(h₂,h₁)`, where `L(a,b) = V(a) ⊗ V(b)` with the componentwise
/// action of `sl₂ ⊕ sl₂`. The swap `u⊗w ↔ w⊗u` between the two summands
/// gives the grading: its fixed vectors in degree 0, anti-fixed in degree 1.
pub fn pair_module(field: &Field, h1: usize, h2: usize) -> Result<GradedModule> {
    require_small_weight(field, h1.max(h2))?;
    let (ma, mb) = (irrep_matrices(field, h1), irrep_matrices(field, h2));
    let (d1, d2) = (h1 + 1, h2 + 1);
    let half = d1 * d2;
    let ops: Vec<Matrix> = pair_signs()
        .map(|(x, s)| {
            let top = kron_sum(field, &ma[x], &mb[x], s);
            let bottom = kron_sum(field, &mb[x], &ma[x], s);
            block_diag(field, &top, &bottom)
        })
        .collect();
    let mut basis = Vec::new();
    let mut degrees = Vec::new();
    for (deg, sign) in [(0u64, 1i64), (1, -1)] {
        for a in 0..d1 {
            for b in 0..d2 {
                let mut v = vec![field.zero(); 2 * half];
                v[a * d2 + b] = field.one();
                v[half + b * d1 + a] = field.from_i64(sign);
                basis.push(v);
                degrees.push(GroupElem::new(vec![deg]));
            }
        }
    }
    swap_graded(field, &ops, basis, degrees)
}

fn block_diag(field: &Field, a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.rows(), b.rows());
    let mut out = Matrix::zeros(field, n + m, n + m);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..m {
        for j in 0..m {
            out.set(n + i, n + j, b.get(i, j).clone());
        }
    }
    out
}

/// `L(h,h)`: symmetric tensors in degree 0, antisymmetric ones in degree 1.
pub fn diagonal_module(field: &Field, h: usize) -> Result<GradedModule> {
    require_small_weight(field, h)?;
    let m = irrep_matrices(field, h);
    let d = h + 1;
    let ops: Vec<Matrix> = pair_signs().map(|(x, s)| kron_sum(field, &m[x], &m[x], s)).collect();
    let mut basis = Vec::new();
    let mut degrees = Vec::new();
    for (deg, sign) in [(0u64, 1i64), (1, -1)] {
        for a in 0..d {
            for b in a..d {
                if sign == -1 && a == b {
                    continue;
                }
                let mut v = vec![field.zero(); d * d];
                v[a * d + b] = field.one();
                v[b * d + a] = &v[b * d + a] + &field.from_i64(sign);
                basis.push(v);
                degrees.push(GroupElem::new(vec![deg]));
            }
        }
    }
    swap_graded(field, &ops, basis, degrees)
}

fn require_small_weight(field: &Field, m: usize) -> Result<()> {
    let p = field.characteristic();
    if p != 0 && p <= m as u64 {
        return Err(Error::BadCharacteristic(format!("V({m}) needs characteristic 0 or p > {m}, got {p}")));
    }
    Ok(())
}

/// `g` acting on itself.
pub fn adjoint_module(g: &GradedLieAlgebra) -> Result<GradedModule> {
    GradedModule::from_fn(g, g.group(), g.degrees().to_vec(), |i, j| g.bracket_basis(i, j).clone())
}

/// `dim` copies of the trivial module, all in `degree`.
pub fn trivial_module(g: &GradedLieAlgebra, dim: usize, degree: &GroupElem) -> Result<GradedModule> {
    let d = g.group().canonical(degree)?;
    GradedModule::from_fn(g, g.group(), vec![d; dim], |_, _| vec![])
}

/// `W` with every degree shifted by `delta`.
pub fn shift_module(w: &GradedModule, delta: &GroupElem) -> Result<GradedModule> {
    let q = w.group();
    let delta = q.canonical(delta)?;
    let degrees = w.degrees().iter().map(|d| q.add(d, &delta)).collect();
    w.with_degrees(q, degrees)
}

pub fn direct_sum_modules(w: &GradedModule, w2: &GradedModule) -> Result<GradedModule> {
    direct_sum(w, w2)
}

/// A two-dimensional module whose reconstruction has `P = Z₂ × {0}` and
/// one-dimensional `V`.
#[derive(Clone, Debug)]
pub struct Ex1 {
    /// basis `w00, w10`; `g00` acts as the identity, `g10` swaps, `g01` kills
    pub w: GradedModule,
    pub p: Subgroup,
    /// `V`, graded by `Q/P`: `g00 v = g10 v = v`, `g01 v = 0`
    pub v: GradedModule,
}

/// The abelian algebra `g00, g10, g01` over `Q` graded by `Z₂ × Z₂`, with
/// the module `W` and the expected `P`, `V`.
pub fn ex1() -> Result<Ex1> {
    ex1_over(&Field::rationals())
}

/// [`ex1`] over another field.
pub fn ex1_over(field: &Field) -> Result<Ex1> {
    let field = field.clone();
    let q = FinAbGroup::new(vec![2, 2])?;
    let e = |a, b| GroupElem::new(vec![a, b]);
    let g = GradedLieAlgebra::from_fn(&field, &q, vec![e(0, 0), e(1, 0), e(0, 1)], |_, _| vec![])?;
    let one = field.one();
    let w = GradedModule::from_fn(&g, &q, vec![e(0, 0), e(1, 0)], |i, j| match i {
        0 => vec![(j, one.clone())],
        1 => vec![(1 - j, one.clone())],
        _ => vec![],
    })?;
    let p = q.subgroup(&[e(1, 0)]);
    let quo = q.quotient_by(&p)?;
    let v = GradedModule::from_fn(&g, &quo, vec![quo.zero()], |i, _| match i {
        0 | 1 => vec![(0, one.clone())],
        _ => vec![],
    })?;
    Ok(Ex1 { w, p, v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradedmod::{graded_simple_module_check, simple_module_check, verify_module};
    use crate::Options;

    #[test]
    fn all_verify() {
        let q = Field::rationals();
        let k = Field::cyclotomic(4);
        let mods = [
            matrix2_module(&k).unwrap(),
            sl2_irrep(&q, 3).unwrap(),
            pair_module(&q, 1, 0).unwrap(),
            diagonal_module(&q, 1).unwrap(),
            adjoint_module(&sl2(&q).unwrap()).unwrap(),
            ex1().unwrap().w,
            ex1().unwrap().v,
        ];
        for m in &mods {
            assert!(verify_module(m).passes(), "{m:?}");
        }
    }

    #[test]
    fn pair_is_graded_simple_only() {
        let q = Field::rationals();
        let w = pair_module(&q, 1, 0).unwrap();
        let o = Options::default();
        assert!(graded_simple_module_check(&w, &o).is_graded_simple());
        assert!(matches!(simple_module_check(&w, &o), crate::action::Verdict::NotGradedSimple { .. }));
        let d = diagonal_module(&q, 1).unwrap();
        assert_eq!(d.dim(), 4);
        assert!(simple_module_check(&d, &o).is_graded_simple());
    }
}
