use super::{algebra_is_semisimple, graded_simple_module_check, hom_space, verify_module, GradedModule};
use crate::action::Verdict;
use crate::config::Options;
use crate::error::{Error, Result};
use crate::exactfield::{FieldElem, Matrix, SparseSystem, Subspace};

/// An irreducible graded submodule of `w` inside the graded submodule `u`:
/// the smallest closure of a homogeneous vector, shrunk along any
/// non-simplicity witness. A homogeneous line the algebra kills counts as
/// irreducible.
fn simple_piece(w: &GradedModule, u: &Subspace, opts: &Options) -> Result<Subspace> {
    let act = w.action();
    let mut best = act
        .homogeneous_basis(u)
        .into_iter()
        .map(|(_, v)| act.closure(&[v]))
        .min_by_key(Subspace::dim)
        .ok_or(Error::EmptySubspace)?;
    loop {
        if best.dim() == 1 {
            return Ok(best);
        }
        let sub = w.submodule(act.homogeneous_basis(&best))?;
        match graded_simple_module_check(&sub, opts) {
            Verdict::NotGradedSimple { witness: Some(s), .. } if !s.is_zero() && !s.is_full() => {
                let basis: Vec<Vec<FieldElem>> = act.homogeneous_basis(&best).into_iter().map(|(_, v)| v).collect();
                let cols = Matrix::from_columns(w.field(), w.dim(), &basis);
                best = s.image_under(&cols);
            }
            Verdict::NotGradedSimple { reason, .. } => {
                return Err(Error::DecompositionFailure(format!("piece of dimension {} is not graded simple: {reason}", best.dim())))
            }
            _ => return Ok(best),
        }
    }
}

/// Splits `w` into irreducible graded submodules (graded simple, or
/// one-dimensional with zero action), each time finding a degree-0
/// projection onto a simple piece and continuing on its kernel. Needs a
/// semisimple algebra in characteristic 0.
pub fn weyl_decompose(w: &GradedModule, opts: &Options) -> Result<Vec<Subspace>> {
    if !algebra_is_semisimple(w.algebra()) {
        return Err(Error::NotSemisimple("the Killing form is degenerate or the characteristic is positive".into()));
    }
    if !verify_module(w).passes() {
        return Err(Error::VerificationFailure("W is not a graded module".into()));
    }
    let field = w.field();
    let act = w.action();
    let zero = w.group().zero();
    let mut out = Vec::new();
    let mut u = Subspace::full(field, w.dim());
    while !u.is_zero() {
        let s = simple_piece(w, &u, opts)?;
        if s == u {
            out.push(s);
            break;
        }
        let ubasis: Vec<Vec<FieldElem>> = act.homogeneous_basis(&u).into_iter().map(|(_, v)| v).collect();
        let sbasis: Vec<Vec<FieldElem>> = act.homogeneous_basis(&s).into_iter().map(|(_, v)| v).collect();
        let umod = w.submodule(act.homogeneous_basis(&u))?;
        let smod = w.submodule(act.homogeneous_basis(&s))?;
        let maps: Vec<Matrix> = hom_space(&umod, &smod, &zero, true)?.into_iter().map(|h| h.matrix).collect();
        // coordinates of S's basis inside U's basis
        let ucols = Matrix::from_columns(field, w.dim(), &ubasis);
        let incl: Vec<Vec<FieldElem>> = sbasis
            .iter()
            .map(|v| ucols.solve(v).ok_or_else(|| Error::DecompositionFailure("S ⊄ U".into())))
            .collect::<Result<_>>()?;
        // Σ c_k φ_k ∘ ι = id_S, one equation per matrix entry; the extra
        // column carries the right-hand side
        let k = maps.len();
        let mut sys = SparseSystem::new(field, k + 1);
        let ds = sbasis.len();
        for (col, x) in incl.iter().enumerate() {
            let images: Vec<Vec<FieldElem>> = maps.iter().map(|m| m.mul_vec(x)).collect();
            for row in 0..ds {
                let mut eq: Vec<(usize, FieldElem)> = (0..k)
                    .filter(|&c| !images[c][row].is_zero())
                    .map(|c| (c, images[c][row].clone()))
                    .collect();
                if row == col {
                    eq.push((k, -field.one()));
                }
                sys.add_equation(eq);
            }
        }
        let sol = sys
            .solution_with(k)
            .ok_or_else(|| Error::NoProjectionFound(format!("no degree-0 projection onto a piece of dimension {ds}")))?;
        let mut phi = Matrix::zeros(field, ds, ubasis.len());
        for (c, m) in maps.iter().enumerate() {
            phi = phi.add(&m.scale(&sol[c]));
        }
        let kernel = phi.kernel().image_under(&ucols);
        out.push(s);
        u = kernel;
    }
    let total = out.iter().try_fold(Subspace::zero(field, w.dim()), |acc, s| acc.sum(s))?;
    let dims: usize = out.iter().map(Subspace::dim).sum();
    if !total.is_full() || dims != w.dim() {
        return Err(Error::DecompositionFailure("summands do not form a direct sum decomposition".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{direct_sum_modules, matrix2_module, sl2_irrep, trivial_module};
    use crate::exactfield::Field;

    #[test]
    fn matrix_module_splits() {
        let k = Field::cyclotomic(4);
        let w = matrix2_module(&k).unwrap();
        let ww = direct_sum_modules(&w, &w).unwrap();
        let parts = weyl_decompose(&ww, &Options::default()).unwrap();
        assert_eq!(parts.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![4, 4]);
    }

    #[test]
    fn irreps_split() {
        let q = Field::rationals();
        let w = direct_sum_modules(&sl2_irrep(&q, 1).unwrap(), &sl2_irrep(&q, 2).unwrap()).unwrap();
        let mut dims: Vec<usize> = weyl_decompose(&w, &Options::default()).unwrap().iter().map(Subspace::dim).collect();
        dims.sort();
        assert_eq!(dims, vec![2, 3]);
    }

    #[test]
    fn trivial_summand_is_kept() {
        let k = Field::cyclotomic(4);
        let m = matrix2_module(&k).unwrap();
        let t = trivial_module(m.algebra(), 2, &m.group().zero()).unwrap();
        let mut dims: Vec<usize> =
            weyl_decompose(&direct_sum_modules(&m, &t).unwrap(), &Options::default()).unwrap().iter().map(Subspace::dim).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 4]);
    }
}
