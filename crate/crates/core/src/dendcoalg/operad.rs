use rand::Rng;

use super::labels::{check_label, r0, ri, LabelSum};
use crate::coalg::CoHochCochain;
use crate::error::{Error, Result};
use crate::linalg::{sum_maps, tensor_dim, LinearMap, Rational, SparseVec};
use crate::operad::{check_arity, check_position, Operad, OperadElement};

/// Element of `Hom(K[C_n] ⊗ M, C^{⊗n})`: one map `M → C^{⊗n}` per label.
#[derive(Clone, Debug, PartialEq)]
pub struct DendCochain {
    comps: Vec<LinearMap>,
}

impl DendCochain {
    /// `d` is the dimension of `C`; the degree is the number of components.
    pub fn new(d: usize, comps: Vec<LinearMap>) -> Result<Self> {
        let n = comps.len();
        if n == 0 {
            return Err(Error::DegreeZero);
        }
        let (dom, cod) = (comps[0].dom(), tensor_dim(d, n));
        for c in &comps {
            if c.dom() != dom || c.cod() != cod {
                return Err(Error::Dimension(format!(
                    "degree {n} components must be maps {dom} → {cod}, got {} → {}",
                    c.dom(),
                    c.cod()
                )));
            }
        }
        Ok(DendCochain { comps })
    }

    pub(crate) fn from_parts(comps: Vec<LinearMap>) -> Self {
        DendCochain { comps }
    }

    pub fn zero(m: usize, d: usize, degree: usize) -> Self {
        DendCochain { comps: vec![LinearMap::zero(m, tensor_dim(d, degree)); degree] }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, m: usize, d: usize, degree: usize) -> Self {
        let cod = tensor_dim(d, degree);
        DendCochain { comps: (0..degree).map(|_| LinearMap::random(rng, m, cod, 0.4)).collect() }
    }

    /// Cochain with `map` at label `label` and zeros elsewhere.
    pub fn single(d: usize, degree: usize, label: usize, map: LinearMap) -> Result<Self> {
        check_label(label, degree)?;
        let zero = LinearMap::zero(map.dom(), map.cod());
        let comps = (1..=degree).map(|r| if r == label { map.clone() } else { zero.clone() }).collect();
        DendCochain::new(d, comps)
    }

    pub fn degree(&self) -> usize {
        self.comps.len()
    }

    pub fn source_dim(&self) -> usize {
        self.comps[0].dom()
    }

    pub fn target_dim(&self) -> usize {
        self.comps[0].cod()
    }

    pub fn components(&self) -> &[LinearMap] {
        &self.comps
    }

    pub fn component(&self, label: usize) -> Result<&LinearMap> {
        check_label(label, self.degree())?;
        Ok(&self.comps[label - 1])
    }

    /// `σ_[1] + … + σ_[n]`.
    pub fn total(&self) -> LinearMap {
        sum_maps(self.source_dim(), self.target_dim(), self.comps.iter().map(|c| (Rational::one(), c)))
            .expect("components share shape")
    }

    /// Linear extension to `K[C_n]`.
    pub fn eval(&self, labels: &LabelSum) -> Result<LinearMap> {
        check_arity(self.degree(), labels.arity())?;
        sum_maps(
            self.source_dim(),
            self.target_dim(),
            labels.terms().iter().map(|(r, c)| (c.clone(), &self.comps[r - 1])),
        )
    }

    /// Stacked column-major vectors of the components, label `[1]` first.
    pub fn to_vector(&self) -> SparseVec {
        let block = self.source_dim() * self.target_dim();
        self.comps
            .iter()
            .enumerate()
            .flat_map(|(r, c)| c.to_vector().into_iter().map(move |(k, v)| (r * block + k, v)))
            .collect()
    }

    pub fn from_vector(m: usize, d: usize, degree: usize, v: &[(usize, Rational)]) -> Result<Self> {
        let cod = tensor_dim(d, degree);
        let block = m * cod;
        let mut parts = vec![Vec::new(); degree];
        for (k, x) in v {
            let r = k / block;
            if r >= degree {
                return Err(Error::Dimension(format!("vector index {k} outside {}", degree * block)));
            }
            parts[r].push((k % block, x.clone()));
        }
        let comps = parts.iter().map(|p| LinearMap::from_vector(m, cod, p)).collect::<Result<_>>()?;
        Ok(DendCochain { comps })
    }

    /// The comparison map `S(σ) = σ_[1] + … + σ_[n]` into coHochschild cochains.
    pub fn s_map(&self, d: usize) -> CoHochCochain {
        CoHochCochain::new(d, self.degree(), self.total()).expect("shape checked")
    }
}

impl OperadElement for DendCochain {
    fn arity(&self) -> usize {
        self.comps.len()
    }

    fn add_scaled(&self, a: &Rational, other: &Self) -> Result<Self> {
        check_arity(self.degree(), other.degree())?;
        let comps = self.comps.iter().zip(&other.comps).map(|(x, y)| x.add_scaled(a, y)).collect::<Result<_>>()?;
        Ok(DendCochain { comps })
    }

    fn scale(&self, a: &Rational) -> Self {
        DendCochain { comps: self.comps.iter().map(|c| c.scale(a)).collect() }
    }

    fn is_zero(&self) -> bool {
        self.comps.iter().all(LinearMap::is_zero)
    }
}

/// The operad `O(n) = Hom(K[C_n] ⊗ A, A^{⊗n})` with
/// `(f •_i g)[r] = (id^{i−1} ⊗ g(R_i[r]) ⊗ id^{m−i}) ∘ f(R_0[r])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabeledCoEnd {
    pub dim: usize,
}

impl LabeledCoEnd {
    pub fn new(dim: usize) -> Self {
        LabeledCoEnd { dim }
    }
}

impl Operad for LabeledCoEnd {
    type Elem = DendCochain;

    fn unit(&self) -> DendCochain {
        DendCochain { comps: vec![LinearMap::identity(self.dim)] }
    }

    fn zero(&self, arity: usize) -> DendCochain {
        DendCochain::zero(self.dim, self.dim, arity)
    }

    fn partial(&self, f: &DendCochain, g: &DendCochain, i: usize) -> Result<DendCochain> {
        let (m, n, d) = (f.degree(), g.degree(), self.dim);
        check_position(i, m)?;
        let (left, right) = (tensor_dim(d, i - 1), tensor_dim(d, m - i));
        let g_total = g.total();
        let comps = (1..=m + n - 1)
            .map(|r| {
                let labels = ri(m, n, i, r)?;
                let inner = if labels.is_full() { g_total.clone() } else { g.eval(&labels)? };
                inner.pad_then(left, right, &f.comps[r0(m, n, i, r)? - 1])
            })
            .collect::<Result<_>>()?;
        Ok(DendCochain { comps })
    }

    fn random<R: Rng + ?Sized>(&self, arity: usize, rng: &mut R) -> DendCochain {
        DendCochain::random(rng, self.dim, self.dim, arity)
    }
}
