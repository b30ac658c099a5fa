//! Dense matrices over an exact field, with rank and homology kernels.

use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("differentials do not compose to zero at entry ({row}, {col})")]
pub struct CompositionNonzero {
    pub row: usize,
    pub col: usize,
}

/// Row-major dense matrix with entries in a field `F`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(v));
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

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self, field: &F) -> Self {
        let mut t = Self::zeros(field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn matmul(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if field.is_zero(b) {
                        continue;
                    }
                    let v = field.add(out.get(i, j), &field.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.entries.iter().all(|e| field.is_zero(e))
    }

    /// Row rank by exact Gaussian elimination. Pivot choice is the first
    /// nonzero entry in column order, which keeps runs deterministic.
    pub fn rank(&self, field: &F) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut work = self.clone();
        let mut rank = 0usize;
        for col in 0..work.cols {
            if rank == work.rows {
                break;
            }
            let pivot_row = (rank..work.rows).find(|&r| !field.is_zero(work.get(r, col)));
            let Some(pr) = pivot_row else { continue };
            if pr != rank {
                for j in 0..work.cols {
                    let a = work.get(rank, j).clone();
                    let b = work.get(pr, j).clone();
                    work.set(rank, j, b);
                    work.set(pr, j, a);
                }
            }
            let inv = field
                .inv(work.get(rank, col))
                .expect("pivot is nonzero by construction");
            for j in col..work.cols {
                let v = field.mul(work.get(rank, j), &inv);
                work.set(rank, j, v);
            }
            for r in (rank + 1)..work.rows {
                let factor = work.get(r, col).clone();
                if field.is_zero(&factor) {
                    continue;
                }
                for j in col..work.cols {
                    let v = field.sub(work.get(r, j), &field.mul(&factor, work.get(rank, j)));
                    work.set(r, j, v);
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Dimension of homology at the middle slot of `... -> A --d_in--> M --d_out--> B -> ...`.
///
/// `d_in` maps into the middle space (its rows index M); `d_out` maps out of
/// it (its columns index M). Requires `d_out . d_in = 0`; returns
/// `dim M - rank(d_out) - rank(d_in)`.
pub fn homology_dim<F: Field>(
    d_in: &DenseMatrix<F>,
    d_out: &DenseMatrix<F>,
    field: &F,
) -> Result<usize, CompositionNonzero> {
    assert_eq!(
        d_out.cols(),
        d_in.rows(),
        "middle space dimensions must agree"
    );
    let m = d_out.cols();
    if d_in.cols() > 0 && d_out.rows() > 0 {
        let comp = d_out.matmul(field, d_in);
        for i in 0..comp.rows() {
            for j in 0..comp.cols() {
                if !field.is_zero(comp.get(i, j)) {
                    return Err(CompositionNonzero { row: i, col: j });
                }
            }
        }
    }
    Ok(m - d_out.rank(field) - d_in.rank(field))
}
