//! Cohomology dimensions of finite cochain complexes `0 → C^1 → C^2 → …`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{rank, SparseMatrix, SparseVec};

/// One line of a cohomology table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub cochain_dim: usize,
    /// Rank of the coboundary leaving this degree.
    pub rank: usize,
    pub kernel_dim: usize,
    pub cohomology_dim: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub rows: Vec<DegreeRow>,
}

impl CohomologyTable {
    /// Builds the table from cochain dimensions and the ranks of `δ^n` for
    /// `n = 1..=len`; the complex starts at degree 1 so `rank δ^0 = 0`.
    pub fn from_ranks(dims: &[usize], ranks: &[usize]) -> Self {
        let rows = dims
            .iter()
            .zip(ranks)
            .enumerate()
            .map(|(k, (&dim, &r))| {
                let incoming = if k == 0 { 0 } else { ranks[k - 1] };
                let kernel_dim = dim - r;
                DegreeRow {
                    degree: k + 1,
                    cochain_dim: dim,
                    rank: r,
                    kernel_dim,
                    cohomology_dim: kernel_dim - incoming,
                }
            })
            .collect();
        CohomologyTable { rows }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.cohomology_dim).collect()
    }
}

/// Matrix of a linear operator given by its action on basis vectors.
pub fn matrix_of<F>(dom: usize, cod: usize, mut image: F) -> Result<SparseMatrix>
where
    F: FnMut(usize) -> Result<SparseVec>,
{
    let cols = (0..dom).map(&mut image).collect::<Result<Vec<_>>>()?;
    SparseMatrix::from_columns(cod, cols)
}

/// Cohomology table for degrees `1..=max_degree`, given the dimension of
/// `C^n` and the matrix of `δ^n : C^n → C^{n+1}`.
pub fn cohomology_table<D, M>(max_degree: usize, dim: D, mut coboundary: M) -> Result<CohomologyTable>
where
    D: Fn(usize) -> usize,
    M: FnMut(usize) -> Result<SparseMatrix>,
{
    let mut dims = Vec::with_capacity(max_degree);
    let mut ranks = Vec::with_capacity(max_degree);
    for n in 1..=max_degree {
        dims.push(dim(n));
        ranks.push(rank(&coboundary(n)?));
    }
    Ok(CohomologyTable::from_ranks(&dims, &ranks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_differential_keeps_everything() {
        let t = CohomologyTable::from_ranks(&[2, 4, 8], &[0, 0, 0]);
        assert_eq!(t.dims(), vec![2, 4, 8]);
    }

    #[test]
    fn exact_sequence_has_no_cohomology() {
        // 0 → K → K → 0 with δ^1 an isomorphism, δ^2 = 0
        let t = CohomologyTable::from_ranks(&[1, 1], &[1, 0]);
        assert_eq!(t.dims(), vec![0, 0]);
        assert_eq!(t.rows[1].kernel_dim, 1);
    }
}
