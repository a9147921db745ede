//! Sparse symmetric matrices and the factorization machinery behind
//! eigenvalue counting. Storage is full CSR (both triangles) so matvec and
//! entrywise transforms stay simple; the LDLT path builds its own permuted
//! upper-triangular view.

mod ldlt;
mod order;
mod sturm;

pub use ldlt::{ldlt_inertia, LdltOutcome, UpperCsc};
pub use order::{grid_nd_order, reverse_cuthill_mckee};
pub use sturm::sturm_count;

use crate::error::{Error, Result};

/// Symmetric sparse matrix in CSR form with both triangles stored.
/// Column indices within each row are strictly increasing.
#[derive(Debug, Clone)]
pub struct SymmetricCsr {
    n: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<u32>,
    values: Vec<f64>,
}

impl SymmetricCsr {
    /// Builds from (row, col, value) triplets covering both triangles.
    /// Duplicate positions are summed; asymmetric input is rejected.
    pub fn from_triplets(n: usize, triplets: &[(usize, usize, f64)]) -> Result<Self> {
        let mut entries: Vec<(usize, u32, f64)> = Vec::with_capacity(triplets.len());
        for &(i, j, v) in triplets {
            if i >= n || j >= n {
                return Err(Error::InvalidGrid(format!(
                    "triplet ({i}, {j}) out of bounds for order {n}"
                )));
            }
            entries.push((i, j as u32, v));
        }
        entries.sort_unstable_by_key(|&(i, j, _)| (i, j));
        let mut row_ptr = vec![0usize; n + 1];
        let mut col_idx: Vec<u32> = Vec::with_capacity(entries.len());
        let mut values: Vec<f64> = Vec::with_capacity(entries.len());
        for (i, j, v) in entries {
            if col_idx.len() > row_ptr[i] && row_ptr[i + 1] > 0 {
                let last = col_idx.len() - 1;
                if row_ptr[i + 1] == col_idx.len() && col_idx[last] == j {
                    values[last] += v;
                    continue;
                }
            }
            col_idx.push(j);
            values.push(v);
            row_ptr[i + 1] = col_idx.len();
        }
        for i in 0..n {
            if row_ptr[i + 1] == 0 {
                row_ptr[i + 1] = row_ptr[i];
            }
        }
        let m = Self {
            n,
            row_ptr,
            col_idx,
            values,
        };
        m.check_symmetry()?;
        Ok(m)
    }

    /// Builds from strictly-upper-plus-diagonal triplets, mirroring the
    /// strict upper triangle into the lower one.
    pub fn from_upper_triplets(n: usize, upper: &[(usize, usize, f64)]) -> Result<Self> {
        let mut all = Vec::with_capacity(upper.len() * 2);
        for &(i, j, v) in upper {
            if j < i {
                return Err(Error::InvalidGrid(format!(
                    "entry ({i}, {j}) is below the diagonal"
                )));
            }
            all.push((i, j, v));
            if j > i {
                all.push((j, i, v));
            }
        }
        Self::from_triplets(n, &all)
    }

    fn check_symmetry(&self) -> Result<()> {
        for i in 0..self.n {
            for (j, v) in self.row(i) {
                if j > i {
                    let vt = self.get(j, i);
                    if vt.map(|x| x.to_bits()) != Some(v.to_bits()) {
                        return Err(Error::InvalidGrid(format!(
                            "asymmetric entries at ({i}, {j}): {v} vs {vt:?}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    #[must_use]
    pub fn order(&self) -> usize {
        self.n
    }

    #[must_use]
    pub fn nnz(&self) -> usize {
        self.col_idx.len()
    }

    /// Iterator over (col, value) of one row.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let lo = self.row_ptr[i];
        let hi = self.row_ptr[i + 1];
        self.col_idx[lo..hi]
            .iter()
            .zip(&self.values[lo..hi])
            .map(|(&j, &v)| (j as usize, v))
    }

    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        let lo = self.row_ptr[i];
        let hi = self.row_ptr[i + 1];
        let slice = &self.col_idx[lo..hi];
        slice
            .binary_search(&(j as u32))
            .ok()
            .map(|k| self.values[lo + k])
    }

    /// y = A x.
    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        assert_eq!(x.len(), self.n);
        assert_eq!(y.len(), self.n);
        for i in 0..self.n {
            let mut acc = 0.0;
            for (j, v) in self.row(i) {
                acc += v * x[j];
            }
            y[i] = acc;
        }
    }

    /// Largest absolute entry.
    #[must_use]
    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// True when every entry sits on the diagonal or first off-diagonals.
    #[must_use]
    pub fn is_tridiagonal(&self) -> bool {
        for i in 0..self.n {
            for (j, _) in self.row(i) {
                if i.abs_diff(j) > 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Extracts (diagonal, superdiagonal) from a tridiagonal matrix.
    /// Missing entries read as zero.
    #[must_use]
    pub fn tridiagonal_bands(&self) -> (Vec<f64>, Vec<f64>) {
        debug_assert!(self.is_tridiagonal());
        let mut d = vec![0.0; self.n];
        let mut e = vec![0.0; self.n.saturating_sub(1)];
        for i in 0..self.n {
            for (j, v) in self.row(i) {
                if j == i {
                    d[i] = v;
                } else if j == i + 1 {
                    e[i] = v;
                }
            }
        }
        (d, e)
    }

    /// Entrywise map keeping the sparsity pattern: v' = f(i, j, v).
    #[must_use]
    pub fn map_entries(&self, mut f: impl FnMut(usize, usize, f64) -> f64) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            let lo = out.row_ptr[i];
            let hi = out.row_ptr[i + 1];
            for k in lo..hi {
                out.values[k] = f(i, out.col_idx[k] as usize, out.values[k]);
            }
        }
        out
    }

    /// Gershgorin lower bound on the spectrum: min over rows of
    /// a_ii - sum_{j != i} |a_ij|.
    #[must_use]
    pub fn gershgorin_lower_bound(&self) -> f64 {
        let mut bound = f64::INFINITY;
        for i in 0..self.n {
            let mut diag = 0.0;
            let mut off = 0.0;
            for (j, v) in self.row(i) {
                if j == i {
                    diag = v;
                } else {
                    off += v.abs();
                }
            }
            bound = bound.min(diag - off);
        }
        bound
    }

    #[must_use]
    pub fn to_dense(&self) -> nalgebra::DMatrix<f64> {
        let mut m = nalgebra::DMatrix::zeros(self.n, self.n);
        for i in 0..self.n {
            for (j, v) in self.row(i) {
                m[(i, j)] = v;
            }
        }
        m
    }

    /// All stored entries as (row, col, value), row-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| self.row(i).map(move |(j, v)| (i, j, v)))
    }

    /// Adjacency lists of the off-diagonal pattern, used by orderings.
    #[must_use]
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for i in 0..self.n {
            for (j, _) in self.row(i) {
                if j != i {
                    adj[i].push(j);
                }
            }
        }
        adj
    }
}
