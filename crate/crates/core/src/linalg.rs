//! Exact row reduction over the rationals.
//!
//! Pivot choice is deterministic (first nonzero entry in column order), so
//! echelon bases, quotient bases and nullspaces are reproducible across runs.

use crate::Q;
use num_traits::{One, Zero};

/// Reduces the rows in place to reduced row echelon form and returns the
/// pivot columns. Zero rows are dropped.
pub fn rref(rows: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x = &*x / &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    let delta = &factor * p;
                    *x = &*x - &delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// A linear subspace of Q^n held as a reduced row echelon basis; equality of
/// subspaces is equality of the canonical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ncols: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rows(ncols: usize, rows: Vec<Vec<Q>>) -> Subspace {
        for row in &rows {
            assert_eq!(row.len(), ncols, "ragged rows");
        }
        let mut rows = rows;
        let pivots = rref(&mut rows);
        Subspace { ncols, rows, pivots }
    }

    pub fn zero(ncols: usize) -> Subspace {
        Subspace::from_rows(ncols, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ncols
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that carry no pivot; their images form a basis of the
    /// quotient by this subspace.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Residual of v after elimination against the echelon basis.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.ncols);
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let factor = out[p].clone();
                for c in 0..self.ncols {
                    let delta = &factor * &row[c];
                    out[c] = &out[c] - &delta;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Q::is_zero)
    }

    /// Kernel of the linear map whose matrix rows are this basis, i.e. the
    /// set of v with (row, v) = 0 for every row.
    pub fn kernel(&self) -> Subspace {
        let free = self.free_columns();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Q::zero(); self.ncols];
            v[f] = Q::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -row[f].clone();
            }
            basis.push(v);
        }
        Subspace::from_rows(self.ncols, basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    fn qv(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rref_and_rank() {
        let sub = Subspace::from_rows(
            3,
            vec![qv(&[2, 4, 6]), qv(&[1, 2, 3]), qv(&[0, 1, 1])],
        );
        assert_eq!(sub.dim(), 2);
        assert_eq!(sub.pivots(), &[0, 1]);
        assert!(sub.contains(&qv(&[1, 2, 3])));
        assert!(sub.contains(&qv(&[3, 7, 10])));
        assert!(!sub.contains(&qv(&[0, 0, 1])));
    }

    #[test]
    fn kernel_dimensions() {
        let sub = Subspace::from_rows(4, vec![qv(&[1, 1, 0, 0]), qv(&[0, 0, 1, -1])]);
        let ker = sub.kernel();
        assert_eq!(ker.dim(), 2);
        for b in ker.basis() {
            for row in sub.basis() {
                let dot: Q = row.iter().zip(b).map(|(a, c)| a * c).sum();
                assert!(dot == q(0));
            }
        }
    }

    #[test]
    fn subspace_equality_is_canonical() {
        let a = Subspace::from_rows(3, vec![qv(&[1, 1, 0]), qv(&[0, 2, 2])]);
        let b = Subspace::from_rows(3, vec![qv(&[2, 2, 0]), qv(&[1, 2, 1])]);
        assert_eq!(a, b);
    }
}
