//! Incremental sparse elimination for large, very sparse homogeneous systems
//! (centroids, hom spaces). Rows are kept in echelon form, not reduced.

use std::collections::BTreeMap;

use super::field::{Field, FieldElem};
use super::subspace::Subspace;

/// Sparse row: sorted `(column, nonzero value)` pairs.
pub type SparseRow = Vec<(usize, FieldElem)>;

#[derive(Clone, Debug)]
pub struct SparseSystem {
    field: Field,
    ncols: usize,
    /// pivot column → row whose leading entry is 1 at that column
    rows: BTreeMap<usize, SparseRow>,
}

fn sub_scaled(a: &SparseRow, c: &FieldElem, b: &SparseRow) -> SparseRow {
    // a − c·b
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ka = a.get(i).map(|x| x.0);
        let kb = b.get(j).map(|x| x.0);
        match (ka, kb) {
            (Some(x), Some(y)) if x == y => {
                let v = &a[i].1 - &(c * &b[j].1);
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, -&(c * &b[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

impl SparseSystem {
    pub fn new(field: &Field, ncols: usize) -> Self {
        SparseSystem {
            field: field.clone(),
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds the equation `Σ c·x_col = 0`. Duplicate columns are summed.
    pub fn add_equation(&mut self, terms: impl IntoIterator<Item = (usize, FieldElem)>) -> bool {
        let mut acc: BTreeMap<usize, FieldElem> = BTreeMap::new();
        for (c, v) in terms {
            assert!(c < self.ncols, "column out of range");
            if v.is_zero() {
                continue;
            }
            match acc.get_mut(&c) {
                Some(x) => *x += &v,
                None => {
                    acc.insert(c, v);
                }
            }
        }
        let mut row: SparseRow = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        loop {
            let Some((lead, lv)) = row.first().cloned() else {
                return false;
            };
            match self.rows.get(&lead) {
                Some(p) => row = sub_scaled(&row, &lv, p),
                None => {
                    let inv = lv.inv().expect("nonzero");
                    for (_, v) in row.iter_mut() {
                        *v = &*v * &inv;
                    }
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
    }

    pub fn is_full_rank(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Null space of all equations added so far.
    pub fn nullspace(&self) -> Subspace {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect();
        let mut vecs = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![self.field.zero(); self.ncols];
            x[f] = self.field.one();
            for (&p, row) in self.rows.iter().rev() {
                let mut acc = self.field.zero();
                for (c, v) in row.iter().skip(1) {
                    if !x[*c].is_zero() {
                        acc += &(v * &x[*c]);
                    }
                }
                x[p] = -acc;
            }
            vecs.push(x);
        }
        Subspace::from_vectors(&self.field, self.ncols, vecs)
    }

    /// Some solution with `x_col = 1` for the given column, if one exists
    /// (used to solve inhomogeneous systems via an extra column).
    pub fn solution_with(&self, col: usize) -> Option<Vec<FieldElem>> {
        let ns = self.nullspace();
        for v in ns.vectors() {
            if !v[col].is_zero() {
                let inv = v[col].inv().ok()?;
                return Some(v.iter().map(|x| x * &inv).collect());
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Matrix;

    #[test]
    fn matches_dense_kernel() {
        let q = Field::rationals();
        let m = Matrix::from_i64(&q, &[&[1, 2, 0, -1], &[2, 4, 1, 0], &[3, 6, 1, -1]]);
        let mut s = SparseSystem::new(&q, 4);
        for i in 0..3 {
            s.add_equation((0..4).map(|j| (j, m.get(i, j).clone())));
        }
        assert_eq!(s.rank(), 2);
        assert_eq!(s.nullspace(), m.kernel());
    }

    #[test]
    fn inhomogeneous_via_extra_column() {
        // x + y = 3, x - y = 1  →  (2, 1)
        let q = Field::rationals();
        let mut s = SparseSystem::new(&q, 3);
        s.add_equation([(0, q.one()), (1, q.one()), (2, q.from_i64(-3))]);
        s.add_equation([(0, q.one()), (1, q.from_i64(-1)), (2, q.from_i64(-1))]);
        let x = s.solution_with(2).unwrap();
        assert_eq!(x, vec![q.from_i64(2), q.one(), q.one()]);
    }
}
