//! Truncated formal deformations of dendriform coalgebras.
//!
//! A deformation of order `N` is a list `Δ_1, …, Δ_N` of labeled 2-cochains
//! over a base structure `Δ_0`. Everything is computed modulo `t^{N+1}`.

use rand::Rng;

use crate::coalg::check_shape;
use crate::dendcoalg::{
    dend_coboundary, dend_coboundary_matrix, DendBicomodule, DendCoalgebra, DendCochain, LabeledCoEnd,
};
use crate::error::{Error, Result};
use crate::linalg::{solve, LinearMap, Rational};
use crate::operad::{dot, OperadElement};
use crate::report::CheckReport;

/// `Δ_t = Δ_0 + Δ_1 t + … + Δ_N t^N` with `Δ_0` the base structure.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncDeformation {
    base: DendCoalgebra,
    terms: Vec<DendCochain>,
}

fn check_term(d: usize, term: &DendCochain) -> Result<()> {
    if term.degree() != 2 || term.source_dim() != d || term.target_dim() != d * d {
        return Err(Error::Dimension(format!(
            "deformation terms must be degree 2 cochains {d} → {}, got degree {} with {} → {}",
            d * d,
            term.degree(),
            term.source_dim(),
            term.target_dim()
        )));
    }
    Ok(())
}

impl TruncDeformation {
    pub fn new(base: DendCoalgebra, terms: Vec<DendCochain>) -> Result<Self> {
        for t in &terms {
            check_term(base.dim(), t)?;
        }
        Ok(TruncDeformation { base, terms })
    }

    /// All higher terms zero.
    pub fn trivial(base: DendCoalgebra, order: usize) -> Self {
        let d = base.dim();
        TruncDeformation { base, terms: vec![DendCochain::zero(d, d, 2); order] }
    }

    pub fn base(&self) -> &DendCoalgebra {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// `Δ_1, …, Δ_N`.
    pub fn terms(&self) -> &[DendCochain] {
        &self.terms
    }

    /// `Δ_i`, with `Δ_0` the base pair and zero past the order.
    pub fn coefficient(&self, i: usize) -> DendCochain {
        let d = self.base.dim();
        match i {
            0 => base_cochain(&self.base),
            i if i <= self.order() => self.terms[i - 1].clone(),
            _ => DendCochain::zero(d, d, 2),
        }
    }

    /// The same series with one more term appended.
    pub fn with_term(&self, term: DendCochain) -> Result<Self> {
        check_term(self.base.dim(), &term)?;
        let mut terms = self.terms.clone();
        terms.push(term);
        Ok(TruncDeformation { base: self.base.clone(), terms })
    }
}

fn base_cochain(base: &DendCoalgebra) -> DendCochain {
    DendCochain::new(base.dim(), vec![base.prec().clone(), base.succ().clone()]).expect("shape checked")
}

/// `Φ_t = id + Φ_1 t + … + Φ_N t^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalIso {
    dim: usize,
    terms: Vec<LinearMap>,
}

impl FormalIso {
    pub fn new(dim: usize, terms: Vec<LinearMap>) -> Result<Self> {
        for t in &terms {
            check_shape("formal isomorphism term", t, dim, dim)?;
        }
        Ok(FormalIso { dim, terms })
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        FormalIso { dim, terms: vec![LinearMap::zero(dim, dim); order] }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, dim: usize, order: usize) -> Self {
        FormalIso { dim, terms: (0..order).map(|_| LinearMap::random(rng, dim, dim, 0.5)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[LinearMap] {
        &self.terms
    }

    /// `Φ_i`, with `Φ_0 = id` and zero past the order.
    pub fn coefficient(&self, i: usize) -> LinearMap {
        match i {
            0 => LinearMap::identity(self.dim),
            i if i <= self.order() => self.terms[i - 1].clone(),
            _ => LinearMap::zero(self.dim, self.dim),
        }
    }

    /// Truncated inverse `Ψ_n = −Σ_{j=1..n} Φ_j ∘ Ψ_{n−j}`.
    pub fn inverse(&self) -> FormalIso {
        let d = self.dim;
        let mut psi = vec![LinearMap::identity(d)];
        for n in 1..=self.order() {
            let mut acc = LinearMap::zero(d, d);
            for j in 1..=n {
                let term = self.terms[j - 1].compose(&psi[n - j]).expect("square maps");
                acc = acc.sub(&term).expect("square maps");
            }
            psi.push(acc);
        }
        psi.remove(0);
        FormalIso { dim: d, terms: psi }
    }
}

/// `Σ_{i+j=n} Δ_i • Δ_j` in the labeled operad.
fn deformation_sum(op: &LabeledCoEnd, def: &TruncDeformation, n: usize, from: usize) -> Result<DendCochain> {
    let d = def.base.dim();
    let mut acc = DendCochain::zero(d, d, 3);
    for i in from..=n - from {
        acc = acc.add(&dot(op, &def.coefficient(i), &def.coefficient(n - i))?)?;
    }
    Ok(acc)
}

/// Deformation equations `Σ_{i+j=n} Δ_i • Δ_j = 0` for `0 ≤ n ≤ N`, one
/// verdict per order and label, named `order n [r]`.
pub fn check_deformation(def: &TruncDeformation) -> Result<CheckReport> {
    let op = LabeledCoEnd::new(def.base.dim());
    let mut report = CheckReport::default();
    for n in 0..=def.order() {
        let sum = deformation_sum(&op, def, n, 0)?;
        for (r, comp) in sum.components().iter().enumerate() {
            report.push(format!("order {n} [{}]", r + 1), comp.is_zero());
        }
    }
    Ok(report)
}

fn self_module(base: &DendCoalgebra) -> DendBicomodule {
    DendBicomodule::self_bicomodule(base)
}

/// Labels at which a cochain is nonzero.
fn nonzero_labels(s: &DendCochain) -> Vec<usize> {
    s.components().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(r, _)| r + 1).collect()
}

/// A cochain together with its coboundary, so callers can inspect the residual.
#[derive(Clone, Debug, PartialEq)]
pub struct CochainWithCoboundary {
    pub cochain: DendCochain,
    pub coboundary: DendCochain,
}

impl CochainWithCoboundary {
    fn of(base: &DendCoalgebra, cochain: DendCochain) -> Result<Self> {
        let coboundary = dend_coboundary(&self_module(base), &cochain)?;
        Ok(CochainWithCoboundary { cochain, coboundary })
    }

    pub fn is_cocycle(&self) -> bool {
        self.coboundary.is_zero()
    }
}

/// `Δ_1` as a 2-cochain, with `δ_c(Δ_1)`.
pub fn infinitesimal(def: &TruncDeformation) -> Result<CochainWithCoboundary> {
    if def.order() == 0 {
        return Err(Error::Order(def.order(), 1));
    }
    CochainWithCoboundary::of(&def.base, def.terms[0].clone())
}

/// The deformation `Δ'_t = (Φ_t⊗Φ_t) ∘ Δ_t ∘ Φ_t^{−1}` modulo `t^{N+1}`.
pub fn apply_equivalence(phi: &FormalIso, def: &TruncDeformation) -> Result<TruncDeformation> {
    let (n_max, d) = (def.order(), def.base.dim());
    if phi.order() != n_max {
        return Err(Error::Order(phi.order(), n_max));
    }
    if phi.dim() != d {
        return Err(Error::Dimension(format!("isomorphism on {} vs base of dimension {d}", phi.dim())));
    }
    let psi = phi.inverse();
    let mut terms = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut comps = vec![LinearMap::zero(d, d * d); 2];
        for a in 0..=n {
            for b in 0..=n - a {
                let outer = phi.coefficient(a).tensor(&phi.coefficient(b));
                for k in 0..=n - a - b {
                    let delta = def.coefficient(k);
                    let psi_l = psi.coefficient(n - a - b - k);
                    for (r, comp) in comps.iter_mut().enumerate() {
                        let term = outer.compose(&delta.components()[r].compose(&psi_l)?)?;
                        *comp = comp.add(&term)?;
                    }
                }
            }
        }
        terms.push(DendCochain::new(d, comps)?);
    }
    TruncDeformation::new(def.base.clone(), terms)
}

/// Intertwining identities `Σ_{i+j=n} Δ'_i[r] ∘ Φ_j = Σ_{i+j+k=n} (Φ_i⊗Φ_j) ∘ Δ_k[r]`
/// for `0 ≤ n ≤ N`, named `order n [r]`.
pub fn check_equivalence(phi: &FormalIso, def: &TruncDeformation, other: &TruncDeformation) -> Result<CheckReport> {
    let n_max = def.order();
    if phi.order() != n_max || other.order() != n_max {
        return Err(Error::Order(phi.order().max(other.order()), n_max));
    }
    let d = def.base.dim();
    let mut report = CheckReport::default();
    for n in 0..=n_max {
        for r in 0..2 {
            let mut lhs = LinearMap::zero(d, d * d);
            for i in 0..=n {
                let term = other.coefficient(i).components()[r].compose(&phi.coefficient(n - i))?;
                lhs = lhs.add(&term)?;
            }
            let mut rhs = LinearMap::zero(d, d * d);
            for i in 0..=n {
                for j in 0..=n - i {
                    let outer = phi.coefficient(i).tensor(&phi.coefficient(j));
                    let term = outer.compose(&def.coefficient(n - i - j).components()[r])?;
                    rhs = rhs.add(&term)?;
                }
            }
            report.push(format!("order {n} [{}]", r + 1), lhs == rhs);
        }
    }
    Ok(report)
}

/// The order-1 deformation `Δ + z t` over `K[t]/(t²)`; rejects a non-cocycle,
/// naming the labels where `δ_c(z)` is nonzero.
pub fn infinitesimal_deformation_from_cocycle(base: &DendCoalgebra, z: &DendCochain) -> Result<TruncDeformation> {
    check_term(base.dim(), z)?;
    let bad = nonzero_labels(&dend_coboundary(&self_module(base), z)?);
    if !bad.is_empty() {
        let labels = bad.iter().map(|r| format!("[{r}]")).collect::<Vec<_>>().join(", ");
        return Err(Error::Identity(format!("2-cocycle condition at {labels}")));
    }
    TruncDeformation::new(base.clone(), vec![z.clone()])
}

fn require_valid(def: &TruncDeformation) -> Result<()> {
    let report = check_deformation(def)?;
    if !report.passed() {
        return Err(Error::Identity(format!("deformation equations {}", report.violated().join(", "))));
    }
    Ok(())
}

/// `Ob = −Σ_{i+j=N+1, i,j≥1} Δ_i • Δ_j`, with `δ_c(Ob)`.
pub fn obstruction(def: &TruncDeformation) -> Result<CochainWithCoboundary> {
    require_valid(def)?;
    let op = LabeledCoEnd::new(def.base.dim());
    let ob = deformation_sum(&op, def, def.order() + 1, 1)?.scale(&-Rational::one());
    CochainWithCoboundary::of(&def.base, ob)
}

/// Order `N+1` extension `Δ_{N+1}` with `Δ_0 • Δ_{N+1} + Δ_{N+1} • Δ_0 = Ob`.
/// Since `δ_c = −(Δ_0 • _ + _ • Δ_0)` on 2-cochains this is the linear system
/// `δ_c(Δ_{N+1}) = −Ob`. Returns `None` when `Ob` is not a coboundary.
pub fn extend(def: &TruncDeformation) -> Result<Option<TruncDeformation>> {
    let ob = obstruction(def)?.cochain;
    let d = def.base.dim();
    let matrix = dend_coboundary_matrix(&self_module(&def.base), 2)?;
    let mut rhs = vec![Rational::zero(); matrix.nrows()];
    for (k, v) in ob.scale(&-Rational::one()).to_vector() {
        rhs[k] = v;
    }
    let Some(x) = solve(&matrix, &rhs)? else {
        return Ok(None);
    };
    let sparse: Vec<_> = x.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
    let term = DendCochain::from_vector(d, d, 2, &sparse)?;
    Ok(Some(def.with_term(term)?))
}
