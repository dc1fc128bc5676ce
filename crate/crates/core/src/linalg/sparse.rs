use crate::error::Error;
use crate::linalg::Rational;

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// Sorts and merges duplicate indices, dropping zeros.
pub fn normalize(mut entries: Vec<(usize, Rational)>) -> SparseVec {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `x + a * y` for sorted sparse vectors.
pub fn axpy(x: &[(usize, Rational)], a: &Rational, y: &[(usize, Rational)]) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i >= x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, a * &y[j].1));
            j += 1;
        } else {
            let v = &x[i].1 + &(a * &y[j].1);
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale_vec(x: &[(usize, Rational)], a: &Rational) -> SparseVec {
    if a.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(i, v)| (*i, v * a)).collect()
}

/// Column-compressed sparse matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: (0..n).map(|i| vec![(i, Rational::one())]).collect() }
    }

    /// Builds from (row, col, value) triplets; duplicates are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::Dimension(format!("entry ({r}, {c}) outside a {rows}x{cols} matrix")));
            }
            buckets[c].push((r, v));
        }
        Ok(SparseMatrix { rows, cols: buckets.into_iter().map(normalize).collect() })
    }

    /// Builds from already-normalized columns.
    pub fn from_columns(rows: usize, cols: Vec<SparseVec>) -> Result<Self, Error> {
        for col in &cols {
            if let Some((r, _)) = col.last() {
                if *r >= rows {
                    return Err(Error::Dimension(format!("row {r} outside {rows} rows")));
                }
            }
        }
        Ok(SparseMatrix { rows, cols })
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut cols = vec![Vec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    cols[j].push((i, v.clone()));
                }
            }
        }
        SparseMatrix { rows: nrows, cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.ncols()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out[*i][j] = v.clone();
            }
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, Rational)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        match self.cols[c].binary_search_by_key(&r, |e| e.0) {
            Ok(k) => self.cols[c][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Entries sorted by (row, col).
    pub fn triplets(&self) -> Vec<(usize, usize, Rational)> {
        let mut out: Vec<_> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v.clone())))
            .collect();
        out.sort_by_key(|t| (t.0, t.1));
        out
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                cols[*i].push((j, v.clone()));
            }
        }
        SparseMatrix { rows: self.ncols(), cols }
    }

    pub fn apply(&self, x: &[(usize, Rational)]) -> SparseVec {
        let mut acc = Vec::new();
        for (j, a) in x {
            for (i, v) in &self.cols[*j] {
                acc.push((*i, a * v));
            }
        }
        normalize(acc)
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<Self, Error> {
        if self.ncols() != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.ncols(),
                rhs.rows,
                rhs.ncols()
            )));
        }
        let cols = rhs.cols.iter().map(|c| self.apply(c)).collect();
        Ok(SparseMatrix { rows: self.rows, cols })
    }

    fn same_shape(&self, rhs: &SparseMatrix) -> Result<(), Error> {
        if self.rows != rhs.rows || self.ncols() != rhs.ncols() {
            return Err(Error::Dimension(format!(
                "shape {}x{} differs from {}x{}",
                self.rows,
                self.ncols(),
                rhs.rows,
                rhs.ncols()
            )));
        }
        Ok(())
    }

    /// `self + a * rhs`.
    pub fn add_scaled(&self, a: &Rational, rhs: &SparseMatrix) -> Result<Self, Error> {
        self.same_shape(rhs)?;
        let cols = self.cols.iter().zip(&rhs.cols).map(|(x, y)| axpy(x, a, y)).collect();
        Ok(SparseMatrix { rows: self.rows, cols })
    }

    pub fn add(&self, rhs: &SparseMatrix) -> Result<Self, Error> {
        self.add_scaled(&Rational::one(), rhs)
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> Result<Self, Error> {
        self.add_scaled(&-Rational::one(), rhs)
    }

    pub fn scale(&self, a: &Rational) -> Self {
        SparseMatrix { rows: self.rows, cols: self.cols.iter().map(|c| scale_vec(c, a)).collect() }
    }

    /// Kronecker product under lexicographic flattening (left factor most significant).
    pub fn kron(&self, rhs: &SparseMatrix) -> Self {
        let rows = self.rows * rhs.rows;
        let mut cols = Vec::with_capacity(self.ncols() * rhs.ncols());
        for a in &self.cols {
            for b in &rhs.cols {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (k, y) in b {
                        col.push((i * rhs.rows + k, x * y));
                    }
                }
                cols.push(col);
            }
        }
        SparseMatrix { rows, cols }
    }

    /// Columns of `self` followed by columns of `rhs`.
    pub fn hstack(&self, rhs: &SparseMatrix) -> Result<Self, Error> {
        if self.rows != rhs.rows {
            return Err(Error::Dimension("hstack row mismatch".into()));
        }
        let mut cols = self.cols.clone();
        cols.extend(rhs.cols.iter().cloned());
        Ok(SparseMatrix { rows: self.rows, cols })
    }

    pub fn rank(&self) -> usize {
        crate::linalg::elim::rank(self)
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        crate::linalg::elim::kernel_basis(self)
    }

    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>, Error> {
        crate::linalg::elim::solve(self, b)
    }
}
