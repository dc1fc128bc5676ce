//! Relative Rota-Baxter operators on associative coalgebras, the induced
//! dendriform and coalgebra structures, the derived bracket and the
//! comparison maps into dendriform cochains.

use crate::coalg::{check_shape, cohoch_coboundary, embed_map, AssocBicomodule, AssocCoalgebra, CoEnd, CoHochCochain};
use crate::cohomology::{cohomology_table, matrix_of, CohomologyTable};
use crate::dendcoalg::{DendCoalgebra, DendCochain};
use crate::error::{Error, Result};
use crate::linalg::{tensor_dim, unflatten, LinearMap, Rational, SparseMatrix};
use crate::operad::{bracket, OperadElement};

/// Element of `Hom(C, M^{⊗n})`; the same data as a coHochschild cochain of
/// the induced coalgebra on `M` with coefficients in `C`.
pub type RBOCochain = CoHochCochain;

/// A linear map `T : C → M` into a bicomodule over `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct RelRBO {
    module: AssocBicomodule,
    t: LinearMap,
}

impl RelRBO {
    pub fn new(module: AssocBicomodule, t: LinearMap) -> Result<Self> {
        check_shape("operator", &t, module.base().dim(), module.dim())?;
        Ok(RelRBO { module, t })
    }

    /// An operator on `C` itself, viewed as relative to the self-bicomodule.
    pub fn on_self(base: &AssocCoalgebra, t: LinearMap) -> Result<Self> {
        RelRBO::new(AssocBicomodule::self_bicomodule(base), t)
    }

    /// `R(c_k) = c_{k−1}/k`, `R(c_0) = 0` on the divided-power coalgebra.
    pub fn divided_power(dim: usize) -> Self {
        let images = (1..dim).map(|k| (k, k - 1, Rational::new(1, k as i64).unwrap()));
        let t = LinearMap::from_images(dim, dim, images).expect("in range");
        RelRBO::on_self(&AssocCoalgebra::divided_power(dim), t).expect("square operator")
    }

    pub fn base(&self) -> &AssocCoalgebra {
        self.module.base()
    }

    pub fn module(&self) -> &AssocBicomodule {
        &self.module
    }

    pub fn operator(&self) -> &LinearMap {
        &self.t
    }

    /// `(T⊗T)∘Δ − (id⊗T)∘Δ^r∘T − (T⊗id)∘Δ^l∘T`.
    pub fn defect(&self) -> LinearMap {
        let t = &self.t;
        let lhs = t.tensor(t).compose(self.base().delta()).expect("shapes agree");
        let prec = self.prec_coproduct().compose(t).expect("shapes agree");
        let succ = self.succ_coproduct().compose(t).expect("shapes agree");
        lhs.sub(&prec).and_then(|x| x.sub(&succ)).expect("shapes agree")
    }

    pub fn check_rbo(&self) -> bool {
        self.defect().is_zero()
    }

    fn require_rbo(&self) -> Result<()> {
        if self.check_rbo() {
            Ok(())
        } else {
            Err(Error::Identity("rbo".into()))
        }
    }

    /// `(id⊗T)∘Δ^r : M → M⊗M`.
    fn prec_coproduct(&self) -> LinearMap {
        self.t.pad_then(self.module.dim(), 1, self.module.delta_r()).expect("shapes agree")
    }

    /// `(T⊗id)∘Δ^l : M → M⊗M`.
    fn succ_coproduct(&self) -> LinearMap {
        self.t.pad_then(1, self.module.dim(), self.module.delta_l()).expect("shapes agree")
    }

    /// The dendriform coalgebra `Δ_≺ = (id⊗T)∘Δ^r`, `Δ_≻ = (T⊗id)∘Δ^l` on `M`.
    pub fn induced_dendriform(&self) -> Result<DendCoalgebra> {
        self.require_rbo()?;
        DendCoalgebra::new(self.module.dim(), self.prec_coproduct(), self.succ_coproduct())
    }

    /// `(M, Δ_*)` with `Δ_* = (id⊗T)∘Δ^r + (T⊗id)∘Δ^l`.
    pub fn induced_coalgebra(&self) -> Result<AssocCoalgebra> {
        self.require_rbo()?;
        AssocCoalgebra::new(self.module.dim(), self.prec_coproduct().add(&self.succ_coproduct())?)
    }

    /// `C` as a bicomodule over `(M, Δ_*)` with `Δ^l_* = (T⊗id)∘Δ − Δ^r∘T`
    /// and `Δ^r_* = (id⊗T)∘Δ − Δ^l∘T`.
    pub fn induced_bicomodule(&self) -> Result<AssocBicomodule> {
        let coalgebra = self.induced_coalgebra()?;
        let (d, t) = (self.base().dim(), &self.t);
        let delta = self.base().delta();
        let left = t.pad_then(1, d, delta)?.sub(&self.module.delta_r().compose(t)?)?;
        let right = t.pad_then(d, 1, delta)?.sub(&self.module.delta_l().compose(t)?)?;
        AssocBicomodule::new(coalgebra, d, left, right)
    }

    /// Explicit coHochschild coboundary of `f ∈ Hom(C, M^{⊗n})` written in
    /// terms of `T`, `Δ`, `Δ^l`, `Δ^r` (five summands).
    pub fn cohoch_coboundary(&self, f: &RBOCochain) -> Result<RBOCochain> {
        let (d, m, n) = (self.base().dim(), self.module.dim(), f.degree());
        check_shape("cochain", f.map(), d, tensor_dim(m, n))?;
        let (t, delta) = (&self.t, self.base().delta());
        let fm = f.map();
        let t_then_delta = t.pad_then(1, d, delta)?;
        let mut acc = fm.pad_then(m, 1, &t_then_delta)?;
        acc = acc.sub(&fm.pad_then(m, 1, &self.module.delta_r().compose(t)?)?)?;
        let star = self.prec_coproduct().add(&self.succ_coproduct())?;
        for i in 1..=n {
            let term = star.pad_then(tensor_dim(m, i - 1), tensor_dim(m, n - i), fm)?;
            acc = acc.add_scaled(&Rational::sign(i), &term)?;
        }
        let delta_then_t = t.pad_then(d, 1, delta)?;
        let last = fm.pad_then(1, m, &delta_then_t)?.sub(&fm.pad_then(1, m, &self.module.delta_l().compose(t)?)?)?;
        acc = acc.add_scaled(&Rational::sign(n + 1), &last)?;
        RBOCochain::new(m, n + 1, acc)
    }

    /// `d_T f = (−1)^n δ_coHoch f`.
    pub fn coboundary(&self, f: &RBOCochain) -> Result<RBOCochain> {
        self.require_rbo()?;
        Ok(self.cohoch_coboundary(f)?.scale(&Rational::sign(f.degree())))
    }

    pub fn cochain_dim(&self, n: usize) -> usize {
        self.base().dim() * tensor_dim(self.module.dim(), n)
    }

    pub fn coboundary_matrix(&self, n: usize) -> Result<SparseMatrix> {
        self.require_rbo()?;
        let (d, m) = (self.base().dim(), self.module.dim());
        let cod = tensor_dim(m, n);
        matrix_of(self.cochain_dim(n), self.cochain_dim(n + 1), |k| {
            let f = RBOCochain::new(m, n, LinearMap::unit(d, cod, k / cod, k % cod))?;
            Ok(self.coboundary(&f)?.map().to_vector())
        })
    }

    pub fn cohomology(&self, max_degree: usize) -> Result<CohomologyTable> {
        cohomology_table(max_degree, |n| self.cochain_dim(n), |n| self.coboundary_matrix(n))
    }

    pub fn cohomology_dims(&self, max_degree: usize) -> Result<Vec<usize>> {
        Ok(self.cohomology(max_degree)?.dims())
    }

    /// `Θ_n(f)`: `[1] ↦ (−1)^{n+1}(id⊗f)∘Δ^r`, `[n+1] ↦ (f⊗id)∘Δ^l`, zero between.
    pub fn theta(&self, f: &RBOCochain) -> Result<DendCochain> {
        let (d, m, n) = (self.base().dim(), self.module.dim(), f.degree());
        check_shape("cochain", f.map(), d, tensor_dim(m, n))?;
        let first = f.map().pad_then(m, 1, self.module.delta_r())?.scale(&Rational::sign(n + 1));
        let last = f.map().pad_then(1, m, self.module.delta_l())?;
        let zero = LinearMap::zero(m, tensor_dim(m, n + 1));
        let mut comps = vec![zero; n + 1];
        comps[0] = first;
        comps[n] = comps[n].add(&last)?;
        DendCochain::new(m, comps)
    }
}

/// The ambient space `A = C ⊕ M` (basis of `C` first) with the structure
/// maps embedded in its coendomorphism operad.
struct Ambient {
    d: usize,
    m: usize,
}

impl Ambient {
    fn dim(&self) -> usize {
        self.d + self.m
    }

    fn mu(&self, module: &AssocBicomodule) -> Result<CoHochCochain> {
        let (d, m, a) = (self.d, self.m, self.dim());
        let delta = embed_map(module.base().delta(), a, 0, &[d, d], &[0, 0])?;
        let left = embed_map(module.delta_l(), a, d, &[d, m], &[0, d])?;
        let right = embed_map(module.delta_r(), a, d, &[m, d], &[d, 0])?;
        CoHochCochain::new(a, 2, delta.add(&left)?.add(&right)?)
    }

    /// `Hom(C, M^{⊗n}) → Hom(A, A^{⊗n})`.
    fn embed(&self, f: &RBOCochain) -> Result<CoHochCochain> {
        let n = f.degree();
        let map = embed_map(f.map(), self.dim(), 0, &vec![self.m; n], &vec![self.d; n])?;
        CoHochCochain::new(self.dim(), n, map)
    }

    /// Restriction to `C` followed by projection onto `M^{⊗n}`.
    fn project(&self, x: &CoHochCochain) -> Result<RBOCochain> {
        let (a, n) = (self.dim(), x.degree());
        let images = x.map().images().into_iter().filter_map(|(from, to, v)| {
            if from >= self.d {
                return None;
            }
            let comps = unflatten(a, n, to);
            if comps.iter().any(|&c| c < self.d) {
                return None;
            }
            let local = comps.iter().fold(0, |acc, &c| acc * self.m + (c - self.d));
            Some((from, local, v))
        });
        RBOCochain::new(self.m, n, LinearMap::from_images(self.d, tensor_dim(self.m, n), images)?)
    }
}

/// Whether `μ = Δ + Δ^l + Δ^r` satisfies `[μ, μ] = 0` in `coEnd(C ⊕ M)`.
pub fn check_maurer_cartan(module: &AssocBicomodule) -> Result<bool> {
    let amb = Ambient { d: module.base().dim(), m: module.dim() };
    let mu = amb.mu(module)?;
    Ok(bracket(&CoEnd::new(amb.dim()), &mu, &mu)?.is_zero())
}

/// `⟦P, Q⟧ = (−1)^p [[μ, P], Q]` computed in `coEnd(C ⊕ M)` and projected
/// back to `Hom(C, M^{⊗(p+q)})`.
pub fn derived_bracket(module: &AssocBicomodule, p: &RBOCochain, q: &RBOCochain) -> Result<RBOCochain> {
    let amb = Ambient { d: module.base().dim(), m: module.dim() };
    let op = CoEnd::new(amb.dim());
    let mu = amb.mu(module)?;
    let inner = bracket(&op, &mu, &amb.embed(p)?)?;
    let outer = bracket(&op, &inner, &amb.embed(q)?)?;
    Ok(amb.project(&outer)?.scale(&Rational::sign(p.degree())))
}

/// Closed form of `⟦P, Q⟧` for `P ∈ Hom(C, M)`, `Q ∈ Hom(C, M^{⊗n})`:
/// `(Q⊗id)Δ^l P − (−1)^n (id⊗Q)Δ^r P + Σ_i (−1)^{n+i} (id^{i−1}⊗X⊗id^{n−i}) Q
///  + (−1)^n (P⊗Q)Δ − (Q⊗P)Δ` with `X = (P⊗id)Δ^l + (id⊗P)Δ^r`.
pub fn derived_bracket_explicit(module: &AssocBicomodule, p: &RBOCochain, q: &RBOCochain) -> Result<RBOCochain> {
    if p.degree() != 1 {
        return Err(Error::Arity { expected: 1, found: p.degree() });
    }
    let (d, m, n) = (module.base().dim(), module.dim(), q.degree());
    let (pm, qm) = (p.map(), q.map());
    let mut acc = qm.pad_then(1, m, &module.delta_l().compose(pm)?)?;
    acc = acc.add_scaled(&-Rational::sign(n), &qm.pad_then(m, 1, &module.delta_r().compose(pm)?)?)?;
    let x = pm.pad_then(1, m, module.delta_l())?.add(&pm.pad_then(m, 1, module.delta_r())?)?;
    for i in 1..=n {
        let term = x.pad_then(tensor_dim(m, i - 1), tensor_dim(m, n - i), qm)?;
        acc = acc.add_scaled(&Rational::sign(n + i), &term)?;
    }
    let delta = module.base().delta();
    let p_then_q = qm.pad_then(m, 1, &pm.pad_then(1, d, delta)?)?;
    let q_then_p = pm.pad_then(tensor_dim(m, n), 1, &qm.pad_then(1, d, delta)?)?;
    acc = acc.add_scaled(&Rational::sign(n), &p_then_q)?.sub(&q_then_p)?;
    RBOCochain::new(m, n + 1, acc)
}

/// `δ_coHoch` of the induced coalgebra on `M` with coefficients in `C`.
pub fn induced_cohoch_coboundary(t: &RelRBO, f: &RBOCochain) -> Result<RBOCochain> {
    cohoch_coboundary(&t.induced_bicomodule()?, f)
}
