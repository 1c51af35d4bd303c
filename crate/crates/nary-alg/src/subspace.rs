//! Subspaces of F^n in canonical RREF form, with the lattice operations.
//!
//! Two subspaces are equal exactly when their RREF basis matrices are
//! identical, so `PartialEq` on [`Subspace`] decides subspace equality.

use crate::error::Error;
use crate::matrix::{Matrix, RrefBuilder};
use crate::scalar::{Field, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    /// Full-row-rank matrix in RREF; rows are the canonical basis.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize, field: Field) -> Subspace {
        Subspace {
            ambient,
            field,
            basis: Matrix::zero(0, ambient, field),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize, field: Field) -> Subspace {
        Subspace {
            ambient,
            field,
            basis: Matrix::identity(ambient, field),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_rows(
        ambient: usize,
        field: Field,
        rows: impl IntoIterator<Item = Vec<Scalar>>,
    ) -> Subspace {
        let mut b = RrefBuilder::new(ambient, field);
        for r in rows {
            b.insert(r);
        }
        Subspace::from_builder(b)
    }

    pub fn from_builder(b: RrefBuilder) -> Subspace {
        let ambient = b.width();
        let pivots = b.pivots().to_vec();
        let field = b.field();
        Subspace {
            ambient,
            field,
            pivots,
            basis: b.into_matrix(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.basis.rows_iter()
    }

    fn builder(&self) -> RrefBuilder {
        let mut b = RrefBuilder::new(self.ambient, self.field);
        for r in self.basis.rows_iter() {
            b.insert(r.to_vec());
        }
        b
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.builder().contains(v)
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v` is outside.
    /// For an RREF basis the coordinate on row `i` is just `v[pivot_i]`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rem = v.to_vec();
        for (row, c) in self.basis.rows_iter().zip(&coords) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in rem.iter_mut().zip(row) {
                if !y.is_zero() {
                    let prod = c * y;
                    *x -= &prod;
                }
            }
        }
        if rem.iter().all(Scalar::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    /// True when `other` is contained in `self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        if self.ambient != other.ambient {
            return false;
        }
        let b = self.builder();
        other.basis.rows_iter().all(|r| b.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let mut b = self.builder();
        for r in other.basis.rows_iter() {
            b.insert(r.to_vec());
        }
        Ok(Subspace::from_builder(b))
    }

    /// Intersection via the Zassenhaus construction: row reduce
    /// `[A | A; B | 0]`; rows whose left half vanishes carry the
    /// intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut b = RrefBuilder::new(2 * n, self.field);
        for r in self.basis.rows_iter() {
            let mut row = r.to_vec();
            row.extend_from_slice(r);
            b.insert(row);
        }
        for r in other.basis.rows_iter() {
            let mut row = r.to_vec();
            row.extend(vec![self.field.zero(); n]);
            b.insert(row);
        }
        let mut out = RrefBuilder::new(n, self.field);
        for row in b.rows_ref() {
            if row[..n].iter().all(Scalar::is_zero) {
                out.insert(row[n..].to_vec());
            }
        }
        Ok(Subspace::from_builder(out))
    }

    /// True when `whole = self ⊕ other`.
    pub fn is_direct_sum_with(&self, other: &Subspace, whole: &Subspace) -> Result<bool, Error> {
        self.check_ambient(other)?;
        self.check_ambient(whole)?;
        if self.dim() + other.dim() != whole.dim() {
            return Ok(false);
        }
        if !self.intersect(other)?.is_zero() {
            return Ok(false);
        }
        Ok(whole.contains(self) && whole.contains(other))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

/// Right kernel of `m`: all v with `m v = 0`.
pub fn nullspace(m: &Matrix) -> Subspace {
    let (rref, pivots) = m.rref();
    let n = m.cols();
    let field = m.field();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut rows = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![field.zero(); n];
        v[f] = field.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -rref.at(r, f);
        }
        rows.push(v);
    }
    Subspace::from_rows(n, field, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Q
    }

    fn span(ambient: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::from_rows(
            ambient,
            q(),
            rows.iter()
                .map(|r| r.iter().map(|&v| q().from_i64(v)).collect::<Vec<_>>()),
        )
    }

    #[test]
    fn nullspace_rank_one() {
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]], q());
        let k = nullspace(&m);
        assert_eq!(k.dim(), 1);
        // span{(-2, 1)}; canonical RREF representative is (1, -1/2)... check m v = 0
        for r in k.basis_rows() {
            assert!(m.apply(r).iter().all(Scalar::is_zero));
        }
        assert!(k.contains_vector(&[q().from_i64(-2), q().from_i64(1)]));
    }

    #[test]
    fn nullspace_identity_and_zero() {
        assert_eq!(nullspace(&Matrix::identity(2, q())).dim(), 0);
        let z = Matrix::zero(2, 3, q());
        let k = nullspace(&z);
        assert_eq!(k.dim(), 3);
        assert_eq!(k, Subspace::full(3, q()));
    }

    #[test]
    fn sum_intersect_direct() {
        let ex = span(2, &[&[1, 0]]);
        let ey = span(2, &[&[0, 1]]);
        assert!(ex.intersect(&ey).unwrap().is_zero());
        let plane = ex.sum(&ey).unwrap();
        assert_eq!(plane, Subspace::full(2, q()));
        assert!(ex.is_direct_sum_with(&ey, &plane).unwrap());
        let diag = span(2, &[&[1, 1]]);
        assert!(plane.contains(&diag));
        assert!(ex.is_direct_sum_with(&diag, &plane).unwrap());
        assert!(!ex.is_direct_sum_with(&ex, &plane).unwrap());
    }

    #[test]
    fn containment() {
        let whole = span(2, &[&[1, 0], &[0, 1]]);
        let diag = span(2, &[&[1, 1]]);
        assert!(whole.contains(&diag));
        assert!(!diag.contains(&whole));
    }

    #[test]
    fn equality_is_basis_independent() {
        let a = span(3, &[&[1, 1, 0], &[0, 0, 1]]);
        let b = span(3, &[&[1, 1, 1], &[0, 0, 2], &[2, 2, 3]]);
        assert_eq!(a, b);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = span(2, &[&[1, 0]]);
        let b = span(3, &[&[1, 0, 0]]);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
    }
}
