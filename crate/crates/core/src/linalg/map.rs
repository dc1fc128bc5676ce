use rand::Rng;

use crate::error::Error;
use crate::linalg::sparse::{normalize, SparseMatrix, SparseVec};
use crate::linalg::tensor::tensor_dim;
use crate::linalg::Rational;

/// Linear map `K^dom → K^cod`, stored as a `cod × dom` sparse matrix whose
/// column `j` is the image of the basis vector `e_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    matrix: SparseMatrix,
}

impl LinearMap {
    pub fn from_matrix(matrix: SparseMatrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { matrix: SparseMatrix::identity(n) }
    }

    pub fn zero(dom: usize, cod: usize) -> Self {
        LinearMap { matrix: SparseMatrix::zeros(cod, dom) }
    }

    /// Triplets are `(from, to, value)`: `e_from ↦ value · e_to`, summed.
    pub fn from_images<I>(dom: usize, cod: usize, images: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let m = SparseMatrix::from_triplets(cod, dom, images.into_iter().map(|(f, t, v)| (t, f, v)))?;
        Ok(LinearMap { matrix: m })
    }

    pub fn from_columns(dom: usize, cod: usize, cols: Vec<SparseVec>) -> Result<Self, Error> {
        if cols.len() != dom {
            return Err(Error::Dimension(format!("expected {dom} columns, got {}", cols.len())));
        }
        Ok(LinearMap { matrix: SparseMatrix::from_columns(cod, cols)? })
    }

    pub fn dom(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn cod(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn image(&self, j: usize) -> &[(usize, Rational)] {
        self.matrix.column(j)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `(from, to, value)` triplets sorted by `(from, to)`.
    pub fn images(&self) -> Vec<(usize, usize, Rational)> {
        let mut t: Vec<_> = self.matrix.triplets().into_iter().map(|(r, c, v)| (c, r, v)).collect();
        t.sort_by_key(|x| (x.0, x.1));
        t
    }

    pub fn apply(&self, x: &[(usize, Rational)]) -> SparseVec {
        self.matrix.apply(x)
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap, Error> {
        if g.cod() != self.dom() {
            return Err(Error::Dimension(format!(
                "cannot compose a map from {} after a map into {}",
                self.dom(),
                g.cod()
            )));
        }
        Ok(LinearMap { matrix: self.matrix.mul(&g.matrix)? })
    }

    /// `self ⊗ g`, with `(f⊗g)(e_i⊗e_j) = f(e_i)⊗g(e_j)`.
    pub fn tensor(&self, g: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.kron(&g.matrix) }
    }

    /// `id_{d^left} ⊗ self ⊗ id_{d^right}`.
    pub fn pad(&self, left: usize, right: usize, d: usize) -> LinearMap {
        let dom = tensor_dim(d, left) * self.dom() * tensor_dim(d, right);
        self.pad_then(tensor_dim(d, left), tensor_dim(d, right), &LinearMap::identity(dom))
            .expect("identity has matching shape")
    }

    /// `(id_{left} ⊗ self ⊗ id_{right}) ∘ g` without materializing the padded map.
    /// `left` and `right` are the dimensions of the untouched factors.
    pub fn pad_then(&self, left: usize, right: usize, g: &LinearMap) -> Result<LinearMap, Error> {
        self.pad_then_signed(left, right, g, |_| false)
    }

    /// Like [`pad_then`](Self::pad_then); `negate(a)` flips the sign of terms whose
    /// left block has flat index `a` (used for Koszul signs).
    pub fn pad_then_signed<F>(&self, left: usize, right: usize, g: &LinearMap, negate: F) -> Result<LinearMap, Error>
    where
        F: Fn(usize) -> bool,
    {
        let inner = self.dom() * right;
        if g.cod() != left * inner {
            return Err(Error::Dimension(format!(
                "padded map expects {} inputs, got a map into {}",
                left * inner,
                g.cod()
            )));
        }
        let out_block = self.cod() * right;
        let cols = g
            .matrix
            .columns()
            .iter()
            .map(|col| {
                let mut acc = Vec::new();
                for (idx, v) in col {
                    let a = idx / inner;
                    let b = (idx / right) % self.dom();
                    let c = idx % right;
                    let v = if negate(a) { -v } else { v.clone() };
                    for (k, w) in self.image(b) {
                        acc.push((a * out_block + k * right + c, &v * w));
                    }
                }
                normalize(acc)
            })
            .collect();
        Ok(LinearMap { matrix: SparseMatrix::from_columns(left * out_block, cols)? })
    }

    pub fn add(&self, g: &LinearMap) -> Result<LinearMap, Error> {
        Ok(LinearMap { matrix: self.matrix.add(&g.matrix)? })
    }

    pub fn sub(&self, g: &LinearMap) -> Result<LinearMap, Error> {
        Ok(LinearMap { matrix: self.matrix.sub(&g.matrix)? })
    }

    pub fn add_scaled(&self, a: &Rational, g: &LinearMap) -> Result<LinearMap, Error> {
        Ok(LinearMap { matrix: self.matrix.add_scaled(a, &g.matrix)? })
    }

    pub fn scale(&self, a: &Rational) -> LinearMap {
        LinearMap { matrix: self.matrix.scale(a) }
    }

    pub fn neg(&self) -> LinearMap {
        self.scale(&-Rational::one())
    }

    pub fn transpose(&self) -> LinearMap {
        LinearMap { matrix: self.matrix.transpose() }
    }

    /// Column-major flattening: entry `(to, from)` sits at `from * cod + to`.
    pub fn to_vector(&self) -> SparseVec {
        let cod = self.cod();
        self.matrix
            .columns()
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (j * cod + i, v.clone())))
            .collect()
    }

    pub fn from_vector(dom: usize, cod: usize, v: &[(usize, Rational)]) -> Result<LinearMap, Error> {
        LinearMap::from_images(dom, cod, v.iter().map(|(k, x)| (k / cod, k % cod, x.clone())))
    }

    /// Random map with entries in `{±1, ±2, ±1/2}`, each nonzero with probability `density`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, dom: usize, cod: usize, density: f64) -> LinearMap {
        const VALUES: [(i64, i64); 6] = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)];
        let mut t = Vec::new();
        for j in 0..dom {
            for i in 0..cod {
                if rng.gen_bool(density) {
                    let (p, q) = VALUES[rng.gen_range(0..VALUES.len())];
                    t.push((j, i, Rational::new(p, q).expect("nonzero denominator")));
                }
            }
        }
        LinearMap::from_images(dom, cod, t).expect("indices in range")
    }

    /// The elementary map `e_from ↦ e_to`.
    pub fn unit(dom: usize, cod: usize, from: usize, to: usize) -> LinearMap {
        LinearMap::from_images(dom, cod, [(from, to, Rational::one())]).expect("in range")
    }
}

/// `f ∘ g`.
pub fn compose(f: &LinearMap, g: &LinearMap) -> Result<LinearMap, Error> {
    f.compose(g)
}

/// `f ⊗ g`.
pub fn tensor(f: &LinearMap, g: &LinearMap) -> LinearMap {
    f.tensor(g)
}

/// `id_{d^left} ⊗ f ⊗ id_{d^right}`.
pub fn pad(f: &LinearMap, left: usize, right: usize, d: usize) -> LinearMap {
    f.pad(left, right, d)
}

/// Sum of a list of equally-shaped maps; `zero` is returned for an empty list.
pub fn sum_maps<'a, I>(dom: usize, cod: usize, maps: I) -> Result<LinearMap, Error>
where
    I: IntoIterator<Item = (Rational, &'a LinearMap)>,
{
    let mut acc = LinearMap::zero(dom, cod);
    for (c, m) in maps {
        acc = acc.add_scaled(&c, m)?;
    }
    Ok(acc)
}
