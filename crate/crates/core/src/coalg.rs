//! Associative coalgebras, their bicomodules, the coHochschild complex and
//! the coendomorphism operad.

use rand::Rng;

use crate::cohomology::{cohomology_table, matrix_of, CohomologyTable};
use crate::error::{Error, Result};
use crate::linalg::{flatten, tensor_dim, LinearMap, Rational, SparseMatrix};
use crate::operad::{check_arity, check_position, Multiplication, Operad, OperadElement};
use crate::report::CheckReport;

pub(crate) fn check_shape(what: &str, map: &LinearMap, dom: usize, cod: usize) -> Result<()> {
    if map.dom() != dom || map.cod() != cod {
        return Err(Error::Dimension(format!(
            "{what}: expected a map {dom} → {cod}, got {} → {}",
            map.dom(),
            map.cod()
        )));
    }
    Ok(())
}

/// Re-indexes a map between tensor powers into a larger ambient space.
/// `dom_offset` shifts the source basis; each output factor `k` is shifted by
/// `offsets[k]` and re-flattened with dimension `ambient`.
pub(crate) fn embed_map(
    map: &LinearMap,
    ambient: usize,
    dom_offset: usize,
    factor_dim: &[usize],
    offsets: &[usize],
) -> Result<LinearMap> {
    let arity = offsets.len();
    let images = map.images().into_iter().map(|(from, to, v)| {
        let mut comps = Vec::with_capacity(arity);
        let mut rest = to;
        for k in (0..arity).rev() {
            comps.push(rest % factor_dim[k] + offsets[k]);
            rest /= factor_dim[k];
        }
        comps.reverse();
        (from + dom_offset, flatten(ambient, &comps), v)
    });
    LinearMap::from_images(ambient, tensor_dim(ambient, arity), images)
}

/// Coassociative coproduct `Δ : C → C⊗C` on `K^d`; no counit is assumed.
#[derive(Clone, Debug, PartialEq)]
pub struct AssocCoalgebra {
    dim: usize,
    delta: LinearMap,
}

impl AssocCoalgebra {
    /// Shape-checked constructor; coassociativity is a separate check.
    pub fn new(dim: usize, delta: LinearMap) -> Result<Self> {
        check_shape("coproduct", &delta, dim, dim * dim)?;
        Ok(AssocCoalgebra { dim, delta })
    }

    pub fn zero(dim: usize) -> Self {
        AssocCoalgebra { dim, delta: LinearMap::zero(dim, dim * dim) }
    }

    /// `Δ(e_i) = e_i ⊗ e_i`.
    pub fn group_like(dim: usize) -> Self {
        let images = (0..dim).map(|i| (i, i * dim + i, Rational::one()));
        AssocCoalgebra { dim, delta: LinearMap::from_images(dim, dim * dim, images).expect("in range") }
    }

    /// `Δ(c_n) = Σ_{i+j=n} c_i ⊗ c_j` on `c_0, …, c_{d−1}`.
    pub fn divided_power(dim: usize) -> Self {
        let images = (0..dim).flat_map(|n| (0..=n).map(move |i| (n, i * dim + (n - i), Rational::one())));
        AssocCoalgebra { dim, delta: LinearMap::from_images(dim, dim * dim, images).expect("in range") }
    }

    /// Direct sum with `self` spanning the first basis vectors.
    pub fn direct_sum(&self, other: &AssocCoalgebra) -> AssocCoalgebra {
        let d = self.dim + other.dim;
        let a = embed_map(&self.delta, d, 0, &[self.dim; 2], &[0, 0]).expect("in range");
        let b = embed_map(&other.delta, d, self.dim, &[other.dim; 2], &[self.dim; 2]).expect("in range");
        AssocCoalgebra { dim: d, delta: a.add(&b).expect("same shape") }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self) -> &LinearMap {
        &self.delta
    }

    /// `(Δ⊗id)∘Δ − (id⊗Δ)∘Δ`.
    pub fn coassociator(&self) -> LinearMap {
        let d = self.dim;
        let left = self.delta.pad_then(1, d, &self.delta).expect("shapes agree");
        let right = self.delta.pad_then(d, 1, &self.delta).expect("shapes agree");
        left.sub(&right).expect("shapes agree")
    }

    pub fn check_coassociative(&self) -> bool {
        self.coassociator().is_zero()
    }
}

/// Bicomodule `M` over an associative coalgebra, with coactions
/// `Δ^l : M → C⊗M` and `Δ^r : M → M⊗C`.
#[derive(Clone, Debug, PartialEq)]
pub struct AssocBicomodule {
    dim: usize,
    base: AssocCoalgebra,
    delta_l: LinearMap,
    delta_r: LinearMap,
}

impl AssocBicomodule {
    pub fn new(base: AssocCoalgebra, dim: usize, delta_l: LinearMap, delta_r: LinearMap) -> Result<Self> {
        let d = base.dim();
        check_shape("left coaction", &delta_l, dim, d * dim)?;
        check_shape("right coaction", &delta_r, dim, dim * d)?;
        Ok(AssocBicomodule { dim, base, delta_l, delta_r })
    }

    /// `M = C` with both coactions equal to `Δ`.
    pub fn self_bicomodule(base: &AssocCoalgebra) -> Self {
        AssocBicomodule {
            dim: base.dim(),
            base: base.clone(),
            delta_l: base.delta().clone(),
            delta_r: base.delta().clone(),
        }
    }

    pub fn zero(base: &AssocCoalgebra, dim: usize) -> Self {
        let d = base.dim();
        AssocBicomodule {
            dim,
            base: base.clone(),
            delta_l: LinearMap::zero(dim, d * dim),
            delta_r: LinearMap::zero(dim, dim * d),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn base(&self) -> &AssocCoalgebra {
        &self.base
    }

    pub fn delta_l(&self) -> &LinearMap {
        &self.delta_l
    }

    pub fn delta_r(&self) -> &LinearMap {
        &self.delta_r
    }

    /// Verdicts for `coassoc` (the base) and the coaction identities:
    /// `b1`: `(Δ⊗id)Δ^l = (id⊗Δ^l)Δ^l`, `b2`: `(id⊗Δ^r)Δ^l = (Δ^l⊗id)Δ^r`,
    /// `b3`: `(Δ^r⊗id)Δ^r = (id⊗Δ)Δ^r`.
    pub fn check(&self) -> CheckReport {
        let (d, m) = (self.base.dim(), self.dim);
        let delta = self.base.delta();
        let (l, r) = (&self.delta_l, &self.delta_r);
        let eq = |a: LinearMap, b: LinearMap| a == b;
        let mut report = CheckReport::default();
        report.push("coassoc", self.base.check_coassociative());
        report.push("b1", eq(delta.pad_then(1, m, l).unwrap(), l.pad_then(d, 1, l).unwrap()));
        report.push("b2", eq(r.pad_then(d, 1, l).unwrap(), l.pad_then(1, d, r).unwrap()));
        report.push("b3", eq(r.pad_then(1, d, r).unwrap(), delta.pad_then(m, 1, r).unwrap()));
        report
    }

    pub fn check_bicomodule(&self) -> bool {
        self.check().passed()
    }
}

/// Element of `Hom(M, C^{⊗n})`, `n ≥ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoHochCochain {
    degree: usize,
    map: LinearMap,
}

impl CoHochCochain {
    /// `d` is the dimension of the tensor factor `C`.
    pub fn new(d: usize, degree: usize, map: LinearMap) -> Result<Self> {
        if degree == 0 {
            return Err(Error::DegreeZero);
        }
        if map.cod() != tensor_dim(d, degree) {
            return Err(Error::Dimension(format!(
                "degree {degree} cochain must land in dimension {}, got {}",
                tensor_dim(d, degree),
                map.cod()
            )));
        }
        Ok(CoHochCochain { degree, map })
    }

    pub fn zero(m: usize, d: usize, degree: usize) -> Self {
        CoHochCochain { degree, map: LinearMap::zero(m, tensor_dim(d, degree)) }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, m: usize, d: usize, degree: usize) -> Self {
        CoHochCochain { degree, map: LinearMap::random(rng, m, tensor_dim(d, degree), 0.5) }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn into_map(self) -> LinearMap {
        self.map
    }
}

impl OperadElement for CoHochCochain {
    fn arity(&self) -> usize {
        self.degree
    }

    fn add_scaled(&self, a: &Rational, other: &Self) -> Result<Self> {
        check_arity(self.degree, other.degree)?;
        Ok(CoHochCochain { degree: self.degree, map: self.map.add_scaled(a, &other.map)? })
    }

    fn scale(&self, a: &Rational) -> Self {
        CoHochCochain { degree: self.degree, map: self.map.scale(a) }
    }

    fn is_zero(&self) -> bool {
        self.map.is_zero()
    }
}

/// `δσ = (id⊗σ)∘Δ^l + Σ_i (−1)^i (id^{i−1}⊗Δ⊗id^{n−i})∘σ + (−1)^{n+1} (σ⊗id)∘Δ^r`.
pub fn cohoch_coboundary(module: &AssocBicomodule, s: &CoHochCochain) -> Result<CoHochCochain> {
    let (d, m, n) = (module.base.dim(), module.dim, s.degree);
    check_shape("cochain", &s.map, m, tensor_dim(d, n))?;
    let mut acc = s.map.pad_then(d, 1, &module.delta_l)?;
    let delta = module.base.delta();
    for i in 1..=n {
        let term = delta.pad_then(tensor_dim(d, i - 1), tensor_dim(d, n - i), &s.map)?;
        acc = acc.add_scaled(&Rational::sign(i), &term)?;
    }
    let last = s.map.pad_then(1, d, &module.delta_r)?;
    acc = acc.add_scaled(&Rational::sign(n + 1), &last)?;
    Ok(CoHochCochain { degree: n + 1, map: acc })
}

/// Dimension of `Hom(M, C^{⊗n})`.
pub fn cohoch_cochain_dim(module: &AssocBicomodule, n: usize) -> usize {
    module.dim * tensor_dim(module.base.dim(), n)
}

/// Matrix of `δ^n` in the basis `e_from ↦ e_to` ordered by `from · d^n + to`.
pub fn cohoch_coboundary_matrix(module: &AssocBicomodule, n: usize) -> Result<SparseMatrix> {
    let (d, m) = (module.base.dim(), module.dim);
    let cod = tensor_dim(d, n);
    matrix_of(m * cod, m * tensor_dim(d, n + 1), |k| {
        let s = CoHochCochain { degree: n, map: LinearMap::unit(m, cod, k / cod, k % cod) };
        Ok(cohoch_coboundary(module, &s)?.map.to_vector())
    })
}

pub fn cohoch_cohomology(module: &AssocBicomodule, max_degree: usize) -> Result<CohomologyTable> {
    cohomology_table(max_degree, |n| cohoch_cochain_dim(module, n), |n| cohoch_coboundary_matrix(module, n))
}

pub fn cohoch_cohomology_dims(module: &AssocBicomodule, max_degree: usize) -> Result<Vec<usize>> {
    Ok(cohoch_cohomology(module, max_degree)?.dims())
}

/// Coendomorphism operad of `K^d`: `O(n) = Hom(A, A^{⊗n})`,
/// `f •_i g = (id^{i−1} ⊗ g ⊗ id^{m−i}) ∘ f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoEnd {
    pub dim: usize,
}

impl CoEnd {
    pub fn new(dim: usize) -> Self {
        CoEnd { dim }
    }

    pub fn element(&self, arity: usize, map: LinearMap) -> Result<CoHochCochain> {
        check_shape("coEnd element", &map, self.dim, tensor_dim(self.dim, arity))?;
        CoHochCochain::new(self.dim, arity, map)
    }

    /// The multiplication given by a coassociative coproduct.
    pub fn multiplication(&self, coalgebra: &AssocCoalgebra) -> Result<Multiplication<CoHochCochain>> {
        let pi = self.element(2, coalgebra.delta().clone())?;
        Multiplication::new(self, pi)
    }
}

impl Operad for CoEnd {
    type Elem = CoHochCochain;

    fn unit(&self) -> CoHochCochain {
        CoHochCochain { degree: 1, map: LinearMap::identity(self.dim) }
    }

    fn zero(&self, arity: usize) -> CoHochCochain {
        CoHochCochain::zero(self.dim, self.dim, arity)
    }

    fn partial(&self, f: &CoHochCochain, g: &CoHochCochain, i: usize) -> Result<CoHochCochain> {
        let (m, n, d) = (f.degree, g.degree, self.dim);
        check_position(i, m)?;
        let map = g.map.pad_then(tensor_dim(d, i - 1), tensor_dim(d, m - i), &f.map)?;
        Ok(CoHochCochain { degree: m + n - 1, map })
    }

    fn random<R: Rng + ?Sized>(&self, arity: usize, rng: &mut R) -> CoHochCochain {
        CoHochCochain::random(rng, self.dim, self.dim, arity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{
        bracket, check_operad_axioms, cup, d_pi, dot, mul_circ_defect, pre_lie_defect, random_samples,
    };
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn corpus_coalgebras_are_coassociative() {
        assert!(AssocCoalgebra::group_like(1).check_coassociative());
        assert!(AssocCoalgebra::zero(3).check_coassociative());
        assert!(AssocCoalgebra::divided_power(4).check_coassociative());
        let sum = AssocCoalgebra::divided_power(2).direct_sum(&AssocCoalgebra::group_like(1));
        assert_eq!(sum.dim(), 3);
        assert!(sum.check_coassociative());
    }

    #[test]
    fn divided_power_coassociativity_by_index_expansion() {
        // both sides send c_n to Σ_{i+j+k=n} c_i⊗c_j⊗c_k
        let d = 4;
        let c = AssocCoalgebra::divided_power(d);
        let lhs = c.delta().pad_then(1, d, c.delta()).unwrap();
        for n in 0..d {
            let mut expect = Vec::new();
            for i in 0..=n {
                for j in 0..=n - i {
                    expect.push((flatten(d, &[i, j, n - i - j]), q(1)));
                }
            }
            expect.sort_by_key(|x| x.0);
            assert_eq!(lhs.image(n), expect.as_slice());
        }
    }

    #[test]
    fn bicomodule_checks() {
        let c = AssocCoalgebra::divided_power(3);
        assert!(AssocBicomodule::self_bicomodule(&c).check_bicomodule());
        assert!(AssocBicomodule::zero(&c, 2).check_bicomodule());
        let mut bad = AssocBicomodule::self_bicomodule(&c);
        bad.delta_l = bad.delta_l.add(&LinearMap::unit(3, 9, 1, 4)).unwrap();
        let report = bad.check();
        assert!(!report.passed());
        assert!(report.holds("coassoc").unwrap());
    }

    #[test]
    fn group_like_coboundary_in_degree_one() {
        let c = AssocCoalgebra::group_like(1);
        let m = AssocBicomodule::self_bicomodule(&c);
        let s = CoHochCochain::new(1, 1, LinearMap::identity(1).scale(&q(3))).unwrap();
        let ds = cohoch_coboundary(&m, &s).unwrap();
        assert_eq!(ds.map().images(), vec![(0, 0, q(3))]);
        assert_eq!(cohoch_cohomology_dims(&m, 2).unwrap(), vec![0, 0]);
    }

    #[test]
    fn degree_zero_rejected() {
        assert!(matches!(CoHochCochain::new(2, 0, LinearMap::zero(2, 1)), Err(Error::DegreeZero)));
    }

    #[test]
    fn zero_structure_has_full_cohomology() {
        let c = AssocCoalgebra::zero(2);
        let m = AssocBicomodule::zero(&c, 3);
        assert_eq!(cohoch_cohomology_dims(&m, 3).unwrap(), vec![6, 12, 24]);
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let bases = [AssocCoalgebra::divided_power(3), AssocCoalgebra::group_like(2)];
        for c in &bases {
            for module in [AssocBicomodule::self_bicomodule(c), AssocBicomodule::zero(c, 2)] {
                for n in 1..=3 {
                    let s = CoHochCochain::random(&mut rng, module.dim(), c.dim(), n);
                    let dds = cohoch_coboundary(&module, &cohoch_coboundary(&module, &s).unwrap()).unwrap();
                    assert!(dds.is_zero());
                }
            }
        }
    }

    #[test]
    fn rank_nullity_on_coboundary_matrices() {
        let c = AssocCoalgebra::divided_power(2);
        let m = AssocBicomodule::self_bicomodule(&c);
        for n in 1..=3 {
            let mat = cohoch_coboundary_matrix(&m, n).unwrap();
            let ker = crate::linalg::kernel_basis(&mat);
            assert_eq!(crate::linalg::rank(&mat) + ker.len(), mat.ncols());
        }
    }

    #[test]
    fn coend_composition_examples() {
        let op = CoEnd::new(2);
        let c = AssocCoalgebra::divided_power(2);
        let delta = op.element(2, c.delta().clone()).unwrap();
        let first = op.partial(&delta, &delta, 1).unwrap();
        assert_eq!(first.map(), &c.delta().tensor(&LinearMap::identity(2)).compose(c.delta()).unwrap());
        assert!(op.partial(&delta, &delta, 3).is_err());
    }

    #[test]
    fn coend_operad_axioms_and_pre_lie() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let op = CoEnd::new(2);
        let samples = random_samples(&op, 3, 4, &mut rng);
        assert!(check_operad_axioms(&op, &samples).unwrap().passed());
        for f in &samples {
            for g in &samples {
                let fg = bracket(&op, f, g).unwrap();
                let gf = bracket(&op, g, f).unwrap();
                let s = Rational::sign((f.arity() - 1) * (g.arity() - 1));
                assert!(fg.add_scaled(&s, &gf).unwrap().is_zero());
                for h in &samples {
                    assert!(pre_lie_defect(&op, f, g, h).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn bracket_of_coproduct_with_itself() {
        let op = CoEnd::new(2);
        let delta = op.element(2, LinearMap::random(&mut ChaCha8Rng::seed_from_u64(3), 2, 4, 0.6)).unwrap();
        let twice = dot(&op, &delta, &delta).unwrap().scale(&q(2));
        assert_eq!(bracket(&op, &delta, &delta).unwrap(), twice);
    }

    #[test]
    fn d_pi_is_signed_coboundary_on_self_coefficients() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let c = AssocCoalgebra::divided_power(2);
        let op = CoEnd::new(2);
        let pi = op.multiplication(&c).unwrap();
        let module = AssocBicomodule::self_bicomodule(&c);
        for k in 1..=3 {
            let f = op.random(k, &mut rng);
            let dp = d_pi(&op, &pi, &f).unwrap();
            let dc = cohoch_coboundary(&module, &f).unwrap();
            assert_eq!(dp, dc.scale(&Rational::sign(k - 1)));
        }
        assert_eq!(d_pi(&op, &pi, &op.unit()).unwrap(), pi.pi().clone());
    }

    #[test]
    fn cup_sign_makes_mul_circ_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let op = CoEnd::new(2);
        let pi = op.multiplication(&AssocCoalgebra::divided_power(2)).unwrap();
        for _ in 0..5 {
            let f = op.random(2, &mut rng);
            let g = op.random(2, &mut rng);
            assert!(mul_circ_defect(&op, &pi, &f, &g).unwrap().is_zero());
        }
        let unit = op.unit();
        let c = cup(&op, &pi, &unit, &unit).unwrap();
        assert_eq!(c, pi.pi().scale(&Rational::from_int(crate::operad::CUP_SIGN)));
    }

    #[test]
    fn non_multiplication_is_refused() {
        let op = CoEnd::new(2);
        let mut bad = AssocCoalgebra::divided_power(2).delta().clone();
        bad = bad.add(&LinearMap::unit(2, 4, 1, 1)).unwrap();
        let pi = op.element(2, bad).unwrap();
        assert!(matches!(Multiplication::new(&op, pi), Err(Error::NotMultiplication)));
    }
}
