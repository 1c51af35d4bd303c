//! Dense exact matrices and reduced row echelon form.

use std::fmt;

use crate::error::Error;
use crate::scalar::{Field, Scalar};

/// A dense row-major matrix over the session field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: Field) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Matrix {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize, field: Field) -> Matrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols,
            field,
            data,
        }
    }

    /// Builds from integer entries, mostly for tests and catalog tables.
    pub fn from_i64(rows: &[&[i64]], field: Field) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Matrix::zero(r, c, field);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                *m.at_mut(i, j) = field.from_i64(*v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(|r| self.row(r))
    }

    pub fn col_vec(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut m = self.clone();
        for e in &mut m.data {
            *e = &*e * s;
        }
        m
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        m
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut m = Matrix::zero(self.rows, other.cols, self.field);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    *m.at_mut(r, c) += &prod;
                }
            }
        }
        m
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![self.field.zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                let prod = a * &v[c];
                out[r] += &prod;
            }
        }
        out
    }

    /// Flattens row-major into a single vector.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, field: Field, data: Vec<Scalar>) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    /// The result has the same shape; zero rows are collected at the bottom.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut b = RrefBuilder::new(self.cols, self.field);
        for r in 0..self.rows {
            b.insert(self.row_vec(r));
        }
        let pivots = b.pivots.clone();
        let mut rows = b.rows;
        while rows.len() < self.rows {
            rows.push(vec![self.field.zero(); self.cols]);
        }
        (Matrix::from_rows(rows, self.cols, self.field), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n, self.field);
        for r in 0..n {
            for c in 0..n {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, n + r) = self.field.one();
        }
        let (red, pivots) = aug.rref();
        if pivots != (0..n).collect::<Vec<_>>() {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zero(n, n, self.field);
        for r in 0..n {
            for c in 0..n {
                *inv.at_mut(r, c) = red.at(r, n + c).clone();
            }
        }
        Ok(inv)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incremental Gauss-Jordan elimination. Rows are kept fully reduced and
/// ordered by pivot column, so the accumulated matrix is always the canonical
/// RREF of the row space seen so far, independent of insertion order.
pub struct RrefBuilder {
    width: usize,
    field: Field,
    pub(crate) rows: Vec<Vec<Scalar>>,
    pub(crate) pivots: Vec<usize>,
}

impl RrefBuilder {
    pub fn new(width: usize, field: Field) -> RrefBuilder {
        RrefBuilder {
            width,
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current basis without inserting it.
    pub fn reduce(&self, mut row: Vec<Scalar>) -> Vec<Scalar> {
        for (i, &p) in self.pivots.iter().enumerate() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&self.rows[i]) {
                if !y.is_zero() {
                    let prod = &c * y;
                    *x -= &prod;
                }
            }
        }
        row
    }

    /// Like [`reduce`](Self::reduce) but also returns the coefficient of each
    /// basis row used, i.e. the coordinates of the reduced-away part.
    pub fn reduce_with_coords(&self, mut row: Vec<Scalar>) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut coords = vec![self.field.zero(); self.rows.len()];
        for (i, &p) in self.pivots.iter().enumerate() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&self.rows[i]) {
                if !y.is_zero() {
                    let prod = &c * y;
                    *x -= &prod;
                }
            }
            coords[i] = c;
        }
        (row, coords)
    }

    /// Inserts a row; returns true when it enlarged the span.
    pub fn insert(&mut self, row: Vec<Scalar>) -> bool {
        debug_assert_eq!(row.len(), self.width);
        let mut row = self.reduce(row);
        let Some(lead) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[lead].inv();
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // eliminate the new pivot column from existing rows
        for r in 0..self.rows.len() {
            if self.rows[r][lead].is_zero() {
                continue;
            }
            let c = self.rows[r][lead].clone();
            for (x, y) in self.rows[r].iter_mut().zip(&row) {
                if !y.is_zero() {
                    let prod = &c * y;
                    *x -= &prod;
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, row);
        true
    }

    /// True when `row` lies in the current span.
    pub fn contains(&self, row: &[Scalar]) -> bool {
        self.reduce(row.to_vec()).iter().all(Scalar::is_zero)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows_ref(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn into_matrix(self) -> Matrix {
        Matrix::from_rows(self.rows, self.width, self.field)
    }
}
