use super::field::{Field, FieldElem};
use super::matrix::{vecops, Matrix};
use crate::error::{Error, Result};

/// Coordinates with respect to a fixed, linearly independent list of vectors.
///
/// Picks a set of rows on which the basis is invertible once, so each lookup
/// is a small matrix-vector product plus an exact membership check.
#[derive(Clone, Debug)]
pub struct Coordinatizer {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<FieldElem>>,
    rows: Vec<usize>,
    inv: Matrix,
}

impl Coordinatizer {
    pub fn new(field: &Field, ambient: usize, basis: Vec<Vec<FieldElem>>) -> Result<Self> {
        let d = basis.len();
        let cols = Matrix::from_columns(field, ambient, &basis);
        // pivot columns of the transpose pick independent coordinates
        let (_, rank, pivots) = cols.transpose().rref();
        if rank < d {
            return Err(Error::InvalidInput("coordinatizer basis is linearly dependent".into()));
        }
        let mut square = Matrix::zeros(field, d, d);
        for (a, &r) in pivots.iter().enumerate() {
            for b in 0..d {
                square.set(a, b, cols.get(r, b).clone());
            }
        }
        let inv = square.inverse()?;
        Ok(Coordinatizer {
            field: field.clone(),
            ambient,
            basis,
            rows: pivots,
            inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<FieldElem>] {
        &self.basis
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &[FieldElem]) -> Option<Vec<FieldElem>> {
        let sel: Vec<FieldElem> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inv.mul_vec(&sel);
        if self.combine(&c) == v {
            Some(c)
        } else {
            None
        }
    }

    pub fn combine(&self, c: &[FieldElem]) -> Vec<FieldElem> {
        let mut out = vec![self.field.zero(); self.ambient];
        for (x, b) in c.iter().zip(&self.basis) {
            vecops::axpy(&mut out, x, b);
        }
        out
    }
}
