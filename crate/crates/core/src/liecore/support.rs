use std::collections::BTreeSet;

use crate::abgroup::GroupElem;
use crate::error::{Error, Result};
use crate::exactfield::{vecops, Matrix, SpanBuilder, Subspace};

use super::GradedLieAlgebra;

/// Degrees α with `π_α(U) ≠ 0`.
pub fn support(g: &GradedLieAlgebra, u: &Subspace) -> Vec<GroupElem> {
    let mut s: BTreeSet<GroupElem> = BTreeSet::new();
    for v in u.vectors() {
        s.extend(g.adjoint().support_of(&v));
    }
    s.into_iter().collect()
}

/// Minimum support size over nonzero elements of `U`.
pub fn size(g: &GradedLieAlgebra, u: &Subspace, cap: u64) -> Result<usize> {
    min_support_span(g, u, cap).map(|(r, _)| r)
}

/// `(r, span)` where `r = size(U)` and `span` is spanned by the elements of
/// `U` whose support has `r` elements. Subsets of `supp(U)` are enumerated by
/// increasing cardinality; more than `cap` subsets is an error.
pub fn min_support_span(g: &GradedLieAlgebra, u: &Subspace, cap: u64) -> Result<(usize, Subspace)> {
    if u.is_zero() {
        return Err(Error::EmptySubspace);
    }
    let field = g.field();
    let n = g.dim();
    let supp = support(g, u);
    let basis = u.basis();
    let d = u.dim();
    let mut count = 0u64;
    for r in 1..=supp.len() {
        let mut span = SpanBuilder::new(field, n);
        let mut found = false;
        for subset in combinations(supp.len(), r) {
            count += 1;
            if count > cap {
                return Err(Error::SearchCapExceeded { cap });
            }
            let inside: BTreeSet<&GroupElem> = subset.iter().map(|&i| &supp[i]).collect();
            let outside: Vec<usize> = (0..n).filter(|&k| !inside.contains(g.degree(k))).collect();
            // c·B vanishes off S  ⟺  c ∈ ker(B_out^T)
            let mut bt = Matrix::zeros(field, outside.len(), d);
            for (a, &k) in outside.iter().enumerate() {
                for row in 0..d {
                    bt.set(a, row, basis.get(row, k).clone());
                }
            }
            for c in bt.kernel().vectors() {
                let mut x = vec![field.zero(); n];
                for (row, coef) in c.iter().enumerate() {
                    vecops::axpy(&mut x, coef, basis.row(row));
                }
                // support may be smaller than r only if a smaller size existed
                span.insert(x);
                found = true;
            }
        }
        if found {
            return Ok((r, span.finish()));
        }
    }
    unreachable!("a nonzero subspace meets the sum of its own support")
}

/// All `r`-subsets of `0..m` in lexicographic order.
pub(crate) fn combinations(m: usize, r: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if r <= m { Some((0..r).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut i = r;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < m - r + i {
                next[i] += 1;
                for j in i + 1..r {
                    next[j] = next[j - 1] + 1;
                }
                cur = Some(next);
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(4, 2).count(), 6);
        assert_eq!(combinations(3, 0).count(), 1);
        assert_eq!(combinations(2, 3).count(), 0);
        assert_eq!(combinations(3, 3).collect::<Vec<_>>(), vec![vec![0, 1, 2]]);
    }
}
