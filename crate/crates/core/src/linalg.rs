//! Dense matrices over a [`Field`] with exact elimination.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{Elem, Field};
use crate::{Error, Result};

/// A row-major matrix whose entries all lie in one field.
#[derive(Clone, Debug)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
    }
}

impl Eq for Matrix {}

impl Matrix {
    pub fn zeros(field: &Arc<Field>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Arc<Field>, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Elem::ONE;
        }
        m
    }

    /// Builds a matrix from row-major data.
    pub fn new(field: &Arc<Field>, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        field.check_all(&data)?;
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(field: &Arc<Field>, rows: &[Vec<Elem>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Elem) {
        assert!(self.field.contains(x), "element outside the matrix field");
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c));
            }
        }
        Matrix {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// The submatrix formed by the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c]));
        }
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    /// Stacks `self` on top of `below`.
    pub fn vstack(&self, below: &Matrix) -> Result<Matrix> {
        self.same_field(below)?;
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: below.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(&self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, rhs.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// The row vector `x * self`.
    pub fn left_mul(&self, x: &[Elem]) -> Result<Vec<Elem>> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: x.len(),
            });
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.cols];
        for (r, &coef) in x.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(coef, g));
            }
        }
        Ok(out)
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.eliminate(true).pivots;
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate(false).pivots.len()
    }

    pub fn det(&self) -> Result<Elem> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let e = m.eliminate(false);
        if e.pivots.len() < self.rows {
            return Ok(Elem::ZERO);
        }
        let f = &self.field;
        let mut det = e.pivot_product;
        if e.swaps % 2 == 1 {
            det = f.neg(det);
        }
        Ok(det)
    }

    /// One solution of `x * self = b`, or `None` when `b` is outside the
    /// row space. Free variables are set to zero.
    pub fn solve_left(&self, b: &[Elem]) -> Result<Option<Vec<Elem>>> {
        if b.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: b.len(),
            });
        }
        self.field.check_all(b)?;
        // self^T x^T = b^T, augmented with b as the last column
        let t = self.transpose();
        let mut data = Vec::with_capacity(t.rows * (t.cols + 1));
        for r in 0..t.rows {
            data.extend_from_slice(t.row(r));
            data.push(b[r]);
        }
        let mut aug = Matrix {
            field: self.field.clone(),
            rows: t.rows,
            cols: t.cols + 1,
            data,
        };
        let pivots = aug.eliminate(true).pivots;
        if pivots.last() == Some(&t.cols) {
            return Ok(None);
        }
        let mut x = vec![Elem::ZERO; self.rows];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(i, t.cols);
        }
        Ok(Some(x))
    }

    /// A basis of `{x : x * self = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<Elem>> {
        let (r, pivots) = self.transpose().rref();
        let f = &self.field;
        let n = self.rows;
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Elem::ZERO; n];
            v[free] = Elem::ONE;
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Gaussian elimination in place; first nonzero entry wins as pivot.
    fn eliminate(&mut self, reduced: bool) -> Elimination {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut swaps = 0usize;
        let mut pivot_product = Elem::ONE;
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(r * cols + j, pr * cols + j);
                }
                swaps += 1;
            }
            let pivot = self.data[r * cols + c];
            pivot_product = f.mul(pivot_product, pivot);
            let inv = f.inv(pivot).expect("pivot is nonzero");
            for j in c..cols {
                self.data[r * cols + j] = f.mul(self.data[r * cols + j], inv);
            }
            let start = if reduced { 0 } else { r + 1 };
            for i in start..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let sub = f.mul(factor, self.data[r * cols + j]);
                    self.data[i * cols + j] = f.sub(self.data[i * cols + j], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Elimination {
            pivots,
            swaps,
            pivot_product,
        }
    }
}

struct Elimination {
    pivots: Vec<usize>,
    swaps: usize,
    pivot_product: Elem,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Arc<Field> {
        Arc::new(Field::prime(p).unwrap())
    }

    fn mat(f: &Arc<Field>, rows: &[&[u32]]) -> Matrix {
        let rows: Vec<Vec<Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| f.element(v).unwrap()).collect())
            .collect();
        Matrix::from_rows(f, &rows).unwrap()
    }

    #[test]
    fn identity_properties() {
        let f = gf(5);
        let id = Matrix::identity(&f, 4);
        assert_eq!(id.rank(), 4);
        assert_eq!(id.det(), Ok(Elem::ONE));
        assert_eq!(id.rref().0, id);
        assert!(id.left_kernel().is_empty());
        let b: Vec<Elem> = (1..5).map(|v| f.element(v).unwrap()).collect();
        assert_eq!(id.solve_left(&b), Ok(Some(b.clone())));
    }

    #[test]
    fn zero_matrix() {
        let f = gf(3);
        let z = Matrix::zeros(&f, 3, 4);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.left_kernel().len(), 3);
    }

    #[test]
    fn rank_one_rref() {
        let f = gf(7);
        let m = mat(&f, &[&[2, 4], &[1, 2]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0]);
        assert_eq!(r, mat(&f, &[&[1, 2], &[0, 0]]));
        assert_eq!(m.det(), Ok(Elem::ZERO));
    }

    #[test]
    fn det_tracks_swaps() {
        let f = gf(7);
        // [[0,1],[1,0]] has det -1 = 6
        let m = mat(&f, &[&[0, 1], &[1, 0]]);
        assert_eq!(m.det(), Ok(f.element(6).unwrap()));
        let m = mat(&f, &[&[2, 3], &[1, 4]]);
        assert_eq!(m.det(), Ok(f.element(5).unwrap()));
    }

    #[test]
    fn det_rejects_non_square() {
        let f = gf(2);
        assert_eq!(
            Matrix::zeros(&f, 2, 3).det(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn duplicated_blocks_are_singular() {
        let f = gf(5);
        let top = mat(&f, &[&[1, 2, 3, 4], &[0, 1, 4, 2]]);
        assert_eq!(top.vstack(&top).unwrap().det(), Ok(Elem::ZERO));
    }

    #[test]
    fn unsolvable_system() {
        let f = gf(2);
        let a = mat(&f, &[&[1, 1, 0]]);
        let b = vec![Elem::ONE, Elem::ZERO, Elem::ZERO];
        assert_eq!(a.solve_left(&b), Ok(None));
        assert!(matches!(
            a.solve_left(&b[..2]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn field_mismatch_detected() {
        let a = Matrix::identity(&gf(2), 2);
        let b = Matrix::identity(&gf(3), 2);
        assert_eq!(a.mul(&b), Err(Error::FieldMismatch));
        assert_eq!(a.vstack(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn out_of_range_entries_rejected() {
        let f = gf(3);
        assert!(matches!(
            Matrix::new(&f, 1, 1, vec![Elem::ONE; 1]).and_then(|_| f.element(3)),
            Err(Error::ElementOutOfRange { .. })
        ));
    }
}
