//! Built-in algebras and modules: `sl_n`, the Pauli grading of `sl₂`, its
//! 2×2 matrix module, `sl₂`-irreducibles, the swap-graded `sl₂ ⊕ sl₂` with
//! its modules `L(h₁,h₂)`, and the small worked examples.

mod entries;
mod modules;

pub use entries::{build, loop_catalog, loop_field, Built, LoopEntry, Params, ENTRIES, LOOP_GROUPS};

pub use modules::{
    adjoint_module, diagonal_module, direct_sum_modules, ex1, ex1_over, matrix2_module, pair_module, shift_module, sl2_irrep,
    trivial_module, Ex1,
};

use crate::abgroup::{FinAbGroup, GroupElem, Subgroup};
use crate::error::{Error, Result};
use crate::exactfield::{Coordinatizer, Field, FieldSpec, Matrix};
use crate::liecore::{dense_to_sparse, GradedLieAlgebra};
use crate::loopalg::{loop_algebra, LoopAlgebra};

/// Lie algebra spanned by independent matrices closed under commutators.
pub fn matrix_lie_algebra(field: &Field, group: &FinAbGroup, basis: &[Matrix], degrees: Vec<GroupElem>) -> Result<GradedLieAlgebra> {
    let n = basis.first().map_or(0, Matrix::rows);
    let flat = basis.iter().map(|m| m.entries().to_vec()).collect();
    let coords = Coordinatizer::new(field, n * n, flat)?;
    GradedLieAlgebra::from_fn(field, group, degrees, |i, j| {
        let c = basis[i].commutator(&basis[j]).expect("square matrices");
        dense_to_sparse(&coords.coords(c.entries()).expect("basis closed under commutators"))
    })
}

fn require_char_not_dividing(field: &Field, n: u64, what: &str) -> Result<()> {
    let p = field.characteristic();
    if p != 0 && n.is_multiple_of(p) {
        return Err(Error::BadCharacteristic(format!("{what} needs characteristic not dividing {n}, got {p}")));
    }
    Ok(())
}

fn unit_matrix(field: &Field, n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    m.set(i, j, field.one());
    m
}

/// Basis of `sl_n`: `E_ij` for `i < j`, then `E_kk − E_{k+1,k+1}`, then `E_ij` for `i > j`.
pub fn sl_n_matrices(field: &Field, n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(unit_matrix(field, n, i, j));
        }
    }
    for k in 0..n - 1 {
        out.push(unit_matrix(field, n, k, k).sub(&unit_matrix(field, n, k + 1, k + 1)));
    }
    for i in 0..n {
        for j in 0..i {
            out.push(unit_matrix(field, n, i, j));
        }
    }
    out
}

/// `sl_n`, trivially graded.
pub fn sl_n(field: &Field, n: usize) -> Result<GradedLieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidInput("sl_n needs n ≥ 2".into()));
    }
    require_char_not_dividing(field, n as u64, "sl_n")?;
    let t = FinAbGroup::trivial();
    let basis = sl_n_matrices(field, n);
    let degrees = vec![t.zero(); basis.len()];
    matrix_lie_algebra(field, &t, &basis, degrees)
}

/// `sl₂` with basis `e, h, f`: `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f`.
pub fn sl2(field: &Field) -> Result<GradedLieAlgebra> {
    sl_n(field, 2)
}

/// `(e, h, f)` as 2×2 matrices.
pub fn sl2_matrices(field: &Field) -> [Matrix; 3] {
    let m = sl_n_matrices(field, 2);
    [m[0].clone(), m[1].clone(), m[2].clone()]
}

pub(crate) fn pauli_matrices(field: &Field) -> [Matrix; 3] {
    let [e, h, f] = sl2_matrices(field);
    [h, e.add(&f), e.sub(&f)]
}

fn z2z2() -> FinAbGroup {
    FinAbGroup::new(vec![2, 2]).expect("Z2xZ2")
}

/// `sl₂` graded by `Z₂ × Z₂`: `h` in `(1,0)`, `e+f` in `(0,1)`, `e−f` in `(1,1)`.
pub fn pauli_sl2(field: &Field) -> Result<GradedLieAlgebra> {
    require_char_not_dividing(field, 2, "the Pauli grading")?;
    let q = z2z2();
    let degrees = vec![GroupElem::new(vec![1, 0]), GroupElem::new(vec![0, 1]), GroupElem::new(vec![1, 1])];
    matrix_lie_algebra(field, &q, &pauli_matrices(field), degrees)
}

/// `sl₂` graded by `group` with `e, h, f` in degrees `g, 0, −g`.
pub fn cartan_sl2(field: &Field, group: &FinAbGroup, g: &GroupElem) -> Result<GradedLieAlgebra> {
    require_char_not_dividing(field, 2, "sl2")?;
    let degrees = vec![group.canonical(g)?, group.zero(), group.neg(g)];
    matrix_lie_algebra(field, group, &sl2_matrices(field), degrees)
}

/// `sl₂` graded by `group` with `h, e+f, e−f` in degrees `a, b, a+b`
/// (`a`, `b` distinct elements of order 2).
pub fn pauli_sl2_in(field: &Field, group: &FinAbGroup, a: &GroupElem, b: &GroupElem) -> Result<GradedLieAlgebra> {
    require_char_not_dividing(field, 2, "the Pauli grading")?;
    let degrees = vec![group.canonical(a)?, group.canonical(b)?, group.add(a, b)];
    matrix_lie_algebra(field, group, &pauli_matrices(field), degrees)
}

/// Every grading of `sl₂` by `group` reachable from the Cartan and Pauli
/// patterns, up to the obvious symmetries: Cartan gradings for `g` up to
/// sign, and one Pauli grading per Klein four-subgroup.
pub fn sl2_gradings(field: &Field, group: &FinAbGroup) -> Result<Vec<(String, GradedLieAlgebra)>> {
    let mut out = Vec::new();
    let mut seen: Vec<GroupElem> = Vec::new();
    for g in group.elements() {
        let neg = group.neg(g);
        if seen.contains(&neg) {
            continue;
        }
        seen.push(g.clone());
        out.push((format!("cartan{g}"), cartan_sl2(field, group, g)?));
    }
    let involutions: Vec<&GroupElem> = group.elements().iter().filter(|a| group.order_of(a) == 2).collect();
    let mut kleins: Vec<Vec<GroupElem>> = Vec::new();
    for (i, a) in involutions.iter().enumerate() {
        for b in &involutions[i + 1..] {
            let k = group.subgroup(&[(*a).clone(), (*b).clone()]).elements().to_vec();
            if k.len() == 4 && !kleins.contains(&k) {
                kleins.push(k);
                out.push((format!("pauli{a}{b}"), pauli_sl2_in(field, group, a, b)?));
            }
        }
    }
    Ok(out)
}

/// `sl₂ ⊕ sl₂` graded by `Z₂`: `(x, x)` in degree 0, `(x, −x)` in degree 1,
/// for `x = e, h, f` in that order.
pub fn sl2_pair(field: &Field) -> Result<GradedLieAlgebra> {
    require_char_not_dividing(field, 2, "sl2")?;
    let z2 = FinAbGroup::cyclic(2);
    let base = sl2_matrices(field);
    let block = |x: &Matrix, s: i64| {
        let mut m = Matrix::zeros(field, 4, 4);
        for i in 0..2 {
            for j in 0..2 {
                m.set(i, j, x.get(i, j).clone());
                m.set(i + 2, j + 2, x.get(i, j) * &field.from_i64(s));
            }
        }
        m
    };
    let mut basis = Vec::new();
    let mut degrees = Vec::new();
    for (s, d) in [(1, 0), (-1, 1)] {
        for x in &base {
            basis.push(block(x, s));
            degrees.push(GroupElem::new(vec![d]));
        }
    }
    matrix_lie_algebra(field, &z2, &basis, degrees)
}

/// `sl₂ ⊕ sl₂` with every basis vector `(x,0)`, `(0,x)` in degree 0.
pub fn sl2_sum_ungraded(field: &Field) -> Result<GradedLieAlgebra> {
    let g = sl2(field)?;
    let t = FinAbGroup::trivial();
    let n = 3;
    GradedLieAlgebra::from_fn(field, &t, vec![t.zero(); 2 * n], |i, j| {
        if (i < n) != (j < n) {
            return vec![];
        }
        let off = if i < n { 0 } else { n };
        g.bracket_basis(i - off, j - off).iter().map(|(k, c)| (k + off, c.clone())).collect()
    })
}

/// The loop algebra `g(Z_p, Z_p, sl₂)` over `F_p`.
pub fn example0_algebra(p: u64) -> Result<LoopAlgebra> {
    if p == 2 {
        return Err(Error::BadCharacteristic("sl2 needs p ≠ 2".into()));
    }
    let field = Field::new(FieldSpec::Prime { p })?;
    let zp = FinAbGroup::cyclic(p);
    let whole: Subgroup = zp.whole();
    let quo = zp.quotient_by(&whole)?;
    let a = sl2(&field)?.with_degrees(&quo, vec![quo.zero(); 3])?;
    loop_algebra(&zp, &whole, &a)
}
