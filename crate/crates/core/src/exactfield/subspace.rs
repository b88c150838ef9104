use std::fmt;

use super::field::{Field, FieldElem};
use super::matrix::{vecops, Matrix};
use crate::error::{Error, Result};

/// A subspace of `F^n`, stored by its canonical RREF basis.
///
/// Two subspaces are equal exactly when their bases agree entrywise.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient)?;
        fmt::Debug::fmt(&self.basis, f)
    }
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: vec![],
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_vectors(field: &Field, ambient: usize, vectors: Vec<Vec<FieldElem>>) -> Self {
        let mut b = SpanBuilder::new(field, ambient);
        for v in vectors {
            b.insert(v);
        }
        b.finish()
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: &Field, ambient: usize, indices: &[usize]) -> Self {
        let vecs = indices
            .iter()
            .map(|&i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace::from_vectors(field, ambient, vecs)
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<FieldElem>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots; they index a canonical complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// `v` minus its component along the basis (zero iff `v` lies in the span).
    pub fn reduce(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        let mut r = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if !r[p].is_zero() {
                let c = -&r[p];
                vecops::axpy(&mut r, &c, self.basis.row(k));
            }
        }
        r
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        vecops::is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[FieldElem]) -> Option<Vec<FieldElem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && (0..self.dim()).all(|k| other.contains(self.basis.row(k)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut b = SpanBuilder::from_subspace(self);
        for v in other.vectors() {
            b.insert(v);
        }
        Ok(b.finish())
    }

    /// `U ∩ V` from the left kernel of the stacked bases.
    ///
    /// ```
    /// use gsla_core::exactfield::{Field, Subspace};
    /// let q = Field::rationals();
    /// let u = Subspace::coordinate(&q, 3, &[0, 1]);
    /// let v = Subspace::coordinate(&q, 3, &[1, 2]);
    /// assert_eq!(u.intersect(&v).unwrap(), Subspace::coordinate(&q, 3, &[1]));
    /// ```
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(field, self.ambient));
        }
        let du = self.dim();
        let mut rows = self.vectors();
        rows.extend(other.vectors());
        let stacked = Matrix::from_rows(field, self.ambient, rows);
        let left_kernel = stacked.transpose().kernel();
        let mut vecs = Vec::with_capacity(left_kernel.dim());
        for coeffs in left_kernel.vectors() {
            let mut x = vec![field.zero(); self.ambient];
            for (k, c) in coeffs.iter().take(du).enumerate() {
                vecops::axpy(&mut x, c, self.basis.row(k));
            }
            vecs.push(x);
        }
        Ok(Subspace::from_vectors(field, self.ambient, vecs))
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "image_under: size mismatch");
        let vecs = (0..self.dim()).map(|k| m.mul_vec(self.basis.row(k))).collect();
        Subspace::from_vectors(self.field(), m.rows(), vecs)
    }

    /// Projection of the subspace onto a set of coordinates (others zeroed).
    pub fn project(&self, coords: &[usize]) -> Subspace {
        let field = self.field();
        let vecs = (0..self.dim())
            .map(|k| {
                let row = self.basis.row(k);
                let mut v = vec![field.zero(); self.ambient];
                for &c in coords {
                    v[c] = row[c].clone();
                }
                v
            })
            .collect();
        Subspace::from_vectors(field, self.ambient, vecs)
    }
}

/// Incrementally maintained RREF span.
#[derive(Clone)]
pub struct SpanBuilder {
    field: Field,
    ambient: usize,
    rows: Vec<(usize, Vec<FieldElem>)>,
}

impl SpanBuilder {
    pub fn new(field: &Field, ambient: usize) -> Self {
        SpanBuilder {
            field: field.clone(),
            ambient,
            rows: vec![],
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        SpanBuilder {
            field: s.field().clone(),
            ambient: s.ambient,
            rows: s.pivots.iter().copied().zip(s.vectors()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        let mut r = v.to_vec();
        for (p, row) in &self.rows {
            if !r[*p].is_zero() {
                let c = -&r[*p];
                vecops::axpy(&mut r, &c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        vecops::is_zero(&self.reduce(v))
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: Vec<FieldElem>) -> bool {
        assert_eq!(v.len(), self.ambient, "SpanBuilder: vector length mismatch");
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -&row[p];
                vecops::axpy(row, &c, &r);
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn finish(mut self) -> Subspace {
        self.rows.sort_by_key(|(p, _)| *p);
        let pivots = self.rows.iter().map(|(p, _)| *p).collect();
        let basis = Matrix::from_rows(&self.field, self.ambient, self.rows.into_iter().map(|(_, r)| r).collect());
        Subspace {
            ambient: self.ambient,
            basis,
            pivots,
        }
    }

    pub fn snapshot(&self) -> Subspace {
        self.clone().finish()
    }
}
