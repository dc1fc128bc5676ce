use super::ainf::{check_ainf, check_rbo_inf, AInfCoalgebra, RBOInf};
use super::graded::{pad_graded_then, parity_sign, GradedSpace};
use crate::dendcoalg::{r0, ri, DendCoalgebra, LabelSum};
use crate::error::{Error, Result};
use crate::linalg::{tensor_dim, unflatten, LinearMap, Rational};
use crate::report::CheckReport;

/// Labeled cooperations `Δ_{k,[r]} : C → C^{⊗k}`, `1 ≤ r ≤ k ≤ max_arity`.
/// `ops[k − 1][r − 1]` is `Δ_{k,[r]}`.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledOps {
    space: GradedSpace,
    ops: Vec<Vec<LinearMap>>,
}

impl LabeledOps {
    fn new(space: GradedSpace, ops: Vec<Vec<LinearMap>>, degree: impl Fn(usize) -> i64) -> Result<Self> {
        for (k, family) in (1..).zip(&ops) {
            if family.len() != k {
                return Err(Error::Arity { expected: k, found: family.len() });
            }
            for (r, op) in (1..).zip(family) {
                space.check_homogeneous(&format!("Δ_{{{k},[{r}]}}"), op, k, degree(k))?;
            }
        }
        Ok(LabeledOps { space, ops })
    }

    fn zero(space: GradedSpace, max_arity: usize) -> Self {
        let d = space.dim();
        let ops = (1..=max_arity).map(|k| vec![LinearMap::zero(d, tensor_dim(d, k)); k]).collect();
        LabeledOps { space, ops }
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn max_arity(&self) -> usize {
        self.ops.len()
    }

    pub fn ops(&self) -> &[Vec<LinearMap>] {
        &self.ops
    }

    /// `Δ_{k,[r]}`.
    pub fn op(&self, k: usize, r: usize) -> Result<&LinearMap> {
        let family = self.ops.get(k.wrapping_sub(1)).ok_or(Error::Arity { expected: self.max_arity(), found: k })?;
        family.get(r.wrapping_sub(1)).ok_or(Error::Label { label: r, max: k })
    }

    /// `Δ_{k,[r_1]+…}` for a label combination.
    pub fn eval(&self, k: usize, labels: &LabelSum) -> Result<LinearMap> {
        let d = self.space.dim();
        let mut acc = LinearMap::zero(d, tensor_dim(d, k));
        for (r, c) in labels.terms() {
            acc = acc.add_scaled(c, self.op(k, *r)?)?;
        }
        Ok(acc)
    }

    /// `Δ_k = Δ_{k,[1]} + … + Δ_{k,[k]}`.
    pub fn total(&self, k: usize) -> Result<LinearMap> {
        self.eval(k, &LabelSum::full(k))
    }

    /// `Σ_{r+s+t=n} sign(r,s,t) (id^{⊗r} ⊗ Δ_{s,R_{r+1}[θ]} ⊗ id^{⊗t}) ∘ Δ_{r+1+t,R_0[θ]}`
    /// with the arity-`s` insertion at position `r + 1` of the outer cooperation.
    fn identity_sum(
        &self,
        n: usize,
        theta: usize,
        sign: impl Fn(usize, usize, usize) -> Rational,
        degree: impl Fn(usize) -> i64,
    ) -> Result<LinearMap> {
        if n == 0 || n > self.max_arity() {
            return Err(Error::Truncation(format!("identity n={n} needs arity {n}, beyond {}", self.max_arity())));
        }
        let d = self.space.dim();
        let mut acc = LinearMap::zero(d, tensor_dim(d, n));
        for s in 1..=n {
            for r in 0..=n - s {
                let t = n - s - r;
                let m = r + 1 + t;
                let inner = self.eval(s, &ri(m, s, r + 1, theta)?)?;
                let outer = self.op(m, r0(m, s, r + 1, theta)?)?;
                let term = pad_graded_then(&self.space, &inner, degree(s), r, t, outer)?;
                acc = acc.add_scaled(&sign(r, s, t), &term)?;
            }
        }
        Ok(acc)
    }
}

fn dendinf_degree(k: usize) -> i64 {
    k as i64 - 2
}

fn shifted_degree(_: usize) -> i64 {
    -1
}

fn labeled_report(
    ops: &LabeledOps,
    prefix: &str,
    n_max: usize,
    sum: impl Fn(usize, usize) -> Result<LinearMap>,
) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for n in 1..=n_max {
        for theta in 1..=n {
            let name = format!("{prefix} n={n} [{theta}]");
            if n > ops.max_arity() {
                report.skip(name);
            } else {
                report.push(name, sum(n, theta)?.is_zero());
            }
        }
    }
    Ok(report)
}

/// Homotopy dendriform coalgebra: `Δ_{k,[r]}` of degree `k − 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct DendInfCoalgebra(LabeledOps);

impl DendInfCoalgebra {
    pub fn new(space: GradedSpace, ops: Vec<Vec<LinearMap>>) -> Result<Self> {
        Ok(DendInfCoalgebra(LabeledOps::new(space, ops, dendinf_degree)?))
    }

    pub fn zero(space: GradedSpace, max_arity: usize) -> Self {
        DendInfCoalgebra(LabeledOps::zero(space, max_arity))
    }

    /// A dendriform coalgebra in degree 0: `Δ_{2,[1]} = Δ_≺`, `Δ_{2,[2]} = Δ_≻`, all else zero.
    pub fn from_dendriform(c: &DendCoalgebra, max_arity: usize) -> Self {
        let mut out = LabeledOps::zero(GradedSpace::concentrated(c.dim()), max_arity.max(2));
        out.ops[1] = vec![c.prec().clone(), c.succ().clone()];
        DendInfCoalgebra(out)
    }

    pub fn labeled(&self) -> &LabeledOps {
        &self.0
    }

    pub fn space(&self) -> &GradedSpace {
        &self.0.space
    }

    pub fn max_arity(&self) -> usize {
        self.0.max_arity()
    }

    /// The signed identity for `(n, θ)`, a map `C → C^{⊗n}`.
    pub fn identity_sum(&self, n: usize, theta: usize) -> Result<LinearMap> {
        self.0.identity_sum(n, theta, |r, s, t| Rational::sign(r * s + t), dendinf_degree)
    }
}

/// The Dend_∞ identities for `n ≤ n_max` and every `[θ] ∈ C_n`, named `dendinf n=N [θ]`.
pub fn check_dendinf(d: &DendInfCoalgebra, n_max: usize) -> Result<CheckReport> {
    labeled_report(&d.0, "dendinf", n_max, |n, theta| d.identity_sum(n, theta))
}

/// Shifted form on the desuspension: every `Δ_{k,[r]}` has degree −1 and the
/// identities carry no sign.
#[derive(Clone, Debug, PartialEq)]
pub struct DendInf1Coalgebra(LabeledOps);

impl DendInf1Coalgebra {
    pub fn new(space: GradedSpace, ops: Vec<Vec<LinearMap>>) -> Result<Self> {
        Ok(DendInf1Coalgebra(LabeledOps::new(space, ops, shifted_degree)?))
    }

    pub fn labeled(&self) -> &LabeledOps {
        &self.0
    }

    pub fn space(&self) -> &GradedSpace {
        &self.0.space
    }

    pub fn max_arity(&self) -> usize {
        self.0.max_arity()
    }

    /// The unsigned identity for `(n, θ)`.
    pub fn identity_sum(&self, n: usize, theta: usize) -> Result<LinearMap> {
        self.0.identity_sum(n, theta, |_, _, _| Rational::one(), shifted_degree)
    }
}

pub fn check_dendinf1(d: &DendInf1Coalgebra, n_max: usize) -> Result<CheckReport> {
    labeled_report(&d.0, "dendinf1", n_max, |n, theta| d.identity_sum(n, theta))
}

/// Sign of `(s^{−1})^{⊗k}` on `a_1 ⊗ … ⊗ a_k` under the Koszul rule:
/// `(−1)^{Σ_i (k−i)|a_i|}`.
fn desuspension_sign(degrees: &[i64], components: &[usize]) -> Rational {
    let k = components.len();
    parity_sign(components.iter().enumerate().map(|(i, &c)| (k - 1 - i) as i64 * degrees[c]).sum())
}

/// Normalization `ε_k = (−1)^{(k−1)(k−2)/2}` of the shifted cooperations. With it the
/// shifted identity for `n` is `ε_n` times the desuspended unshifted identity.
pub fn shift_normalization(k: usize) -> Rational {
    Rational::sign((k - 1) * k.saturating_sub(2) / 2)
}

/// `f ↦ ε_k · (s^{−1})^{⊗k} ∘ f ∘ s` on basis coefficients; `degrees` are those of
/// the unshifted space. Applying it twice with the same degrees is the identity.
fn conjugate(f: &LinearMap, k: usize, degrees: &[i64], dim: usize) -> LinearMap {
    let eps = shift_normalization(k);
    let images = f.images().into_iter().map(|(from, to, v)| {
        let sign = desuspension_sign(degrees, &unflatten(dim, k, to));
        (from, to, v * &sign * &eps)
    });
    LinearMap::from_images(f.dom(), f.cod(), images.collect::<Vec<_>>()).expect("same shape")
}

/// The Dend_∞[1] structure on `s^{−1}C`.
pub fn shift_to_dendinf1(d: &DendInfCoalgebra) -> Result<DendInf1Coalgebra> {
    let (space, dim) = (d.space(), d.space().dim());
    let degrees = space.degrees();
    let ops =
        d.0.ops
            .iter()
            .enumerate()
            .map(|(i, fam)| fam.iter().map(|f| conjugate(f, i + 1, &degrees, dim)).collect())
            .collect();
    DendInf1Coalgebra::new(space.shifted(-1), ops)
}

/// Inverse of [`shift_to_dendinf1`].
pub fn unshift_from_dendinf1(d: &DendInf1Coalgebra) -> Result<DendInfCoalgebra> {
    let space = d.space().shifted(1);
    let (dim, degrees) = (space.dim(), space.degrees());
    let ops =
        d.0.ops
            .iter()
            .enumerate()
            .map(|(i, fam)| fam.iter().map(|f| conjugate(f, i + 1, &degrees, dim)).collect())
            .collect();
    DendInfCoalgebra::new(space, ops)
}

/// The desuspension conjugate `(s^{−1})^{⊗n} ∘ f ∘ s` of a map `C → C^{⊗n}`, without
/// normalization; used to compare identities across the shift.
pub fn desuspend_map(space: &GradedSpace, f: &LinearMap, n: usize) -> LinearMap {
    let degrees = space.degrees();
    let images = f
        .images()
        .into_iter()
        .map(|(from, to, v)| (from, to, v * &desuspension_sign(&degrees, &unflatten(space.dim(), n, to))));
    LinearMap::from_images(f.dom(), f.cod(), images.collect::<Vec<_>>()).expect("same shape")
}

/// `Δ_k = Δ_{k,[1]} + … + Δ_{k,[k]}`; rejects input failing its identities up to
/// the stored arity.
pub fn split(d: &DendInfCoalgebra) -> Result<AInfCoalgebra> {
    let report = check_dendinf(d, d.max_arity())?;
    if !report.passed() {
        return Err(Error::Identity(report.violated().join(", ")));
    }
    split_unchecked(d)
}

/// The label sums without validating the input.
pub fn split_unchecked(d: &DendInfCoalgebra) -> Result<AInfCoalgebra> {
    let ops = (1..=d.max_arity()).map(|k| d.0.total(k)).collect::<Result<_>>()?;
    AInfCoalgebra::new(d.space().clone(), ops)
}

/// `Δ_{k,[r]} = (R ⊗ … ⊗ id_r ⊗ … ⊗ R) ∘ Δ_k`; both inputs must pass their checks.
pub fn induce_dendinf(c: &AInfCoalgebra, r: &RBOInf) -> Result<DendInfCoalgebra> {
    let mut violated = check_ainf(c, c.max_arity())?.violated().into_iter().map(String::from).collect::<Vec<_>>();
    violated.extend(check_rbo_inf(c, r)?.violated().into_iter().map(String::from));
    if !violated.is_empty() {
        return Err(Error::Identity(violated.join(", ")));
    }
    induce_unchecked(c, r)
}

pub fn induce_unchecked(c: &AInfCoalgebra, r: &RBOInf) -> Result<DendInfCoalgebra> {
    let ops = (1..=c.max_arity())
        .map(|k| (1..=k).map(|place| r.tensor_power(k, place).compose(&c.ops()[k - 1])).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    DendInfCoalgebra::new(c.space().clone(), ops)
}
