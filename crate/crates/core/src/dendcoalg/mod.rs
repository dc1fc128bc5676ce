//! Dendriform coalgebras, their bicomodules, the labeled coendomorphism
//! operad, the coboundary `δ_c` and the comparison with coHochschild
//! cohomology.

mod coboundary;
pub mod labels;
mod operad;

pub use coboundary::{
    dend_coboundary, dend_coboundary_matrix, dend_cochain_dim, dend_cohomology, dend_cohomology_dims, s_map,
};
pub use labels::{r0, ri, LabelSum};
pub use operad::{DendCochain, LabeledCoEnd};

use crate::coalg::{check_shape, embed_map, AssocBicomodule, AssocCoalgebra};
use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::operad::Multiplication;
use crate::report::CheckReport;

/// `(a ⊗ id_x) ∘ b − (id_y ⊗ e) ∘ f`.
fn two_sided_defect(a: &LinearMap, x: usize, b: &LinearMap, y: usize, e: &LinearMap, f: &LinearMap) -> LinearMap {
    let lhs = a.pad_then(1, x, b).expect("shapes agree");
    let rhs = e.pad_then(y, 1, f).expect("shapes agree");
    lhs.sub(&rhs).expect("shapes agree")
}

/// Two coproducts `Δ_≺, Δ_≻ : C → C⊗C` on `K^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct DendCoalgebra {
    dim: usize,
    prec: LinearMap,
    succ: LinearMap,
}

impl DendCoalgebra {
    /// Shape-checked constructor; the identities are checked by [`check`](Self::check).
    pub fn new(dim: usize, prec: LinearMap, succ: LinearMap) -> Result<Self> {
        check_shape("prec coproduct", &prec, dim, dim * dim)?;
        check_shape("succ coproduct", &succ, dim, dim * dim)?;
        Ok(DendCoalgebra { dim, prec, succ })
    }

    pub fn zero(dim: usize) -> Self {
        DendCoalgebra { dim, prec: LinearMap::zero(dim, dim * dim), succ: LinearMap::zero(dim, dim * dim) }
    }

    /// `Δ_≺ = Δ`, `Δ_≻ = 0`.
    pub fn split_left(c: &AssocCoalgebra) -> Self {
        let d = c.dim();
        DendCoalgebra { dim: d, prec: c.delta().clone(), succ: LinearMap::zero(d, d * d) }
    }

    /// `Δ_≺ = 0`, `Δ_≻ = Δ`.
    pub fn split_right(c: &AssocCoalgebra) -> Self {
        let d = c.dim();
        DendCoalgebra { dim: d, prec: LinearMap::zero(d, d * d), succ: c.delta().clone() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn prec(&self) -> &LinearMap {
        &self.prec
    }

    pub fn succ(&self) -> &LinearMap {
        &self.succ
    }

    /// `Δ_≺ + Δ_≻`.
    pub fn total_map(&self) -> LinearMap {
        self.prec.add(&self.succ).expect("same shape")
    }

    /// `Δ_≺` for label 1, `Δ_≻` for label 2.
    pub fn by_label(&self, label: usize) -> &LinearMap {
        if label == 1 {
            &self.prec
        } else {
            &self.succ
        }
    }

    /// Left-minus-right defects of `c1`, `c2`, `c3` as maps `C → C^{⊗3}`.
    pub fn defects(&self) -> [LinearMap; 3] {
        let d = self.dim;
        let total = self.total_map();
        [
            two_sided_defect(&self.prec, d, &self.prec, d, &total, &self.prec),
            two_sided_defect(&self.succ, d, &self.prec, d, &self.prec, &self.succ),
            two_sided_defect(&total, d, &self.succ, d, &self.succ, &self.succ),
        ]
    }

    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::default();
        for (k, defect) in self.defects().iter().enumerate() {
            report.push(format!("c{}", k + 1), defect.is_zero());
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.check().passed()
    }

    /// The associative coalgebra `(C, Δ_≺ + Δ_≻)`.
    pub fn total(&self) -> AssocCoalgebra {
        AssocCoalgebra::new(self.dim, self.total_map()).expect("shape checked")
    }

    /// The labeled multiplication `[1] ↦ Δ_≺`, `[2] ↦ Δ_≻`.
    pub fn multiplication(&self) -> Result<Multiplication<DendCochain>> {
        let op = LabeledCoEnd::new(self.dim);
        let pi = DendCochain::new(self.dim, vec![self.prec.clone(), self.succ.clone()])?;
        Multiplication::new(&op, pi)
    }
}

/// Bicomodule over a dendriform coalgebra, with coactions
/// `Δ^l_≺, Δ^l_≻ : M → C⊗M` and `Δ^r_≺, Δ^r_≻ : M → M⊗C`.
#[derive(Clone, Debug, PartialEq)]
pub struct DendBicomodule {
    dim: usize,
    base: DendCoalgebra,
    l_prec: LinearMap,
    l_succ: LinearMap,
    r_prec: LinearMap,
    r_succ: LinearMap,
}

impl DendBicomodule {
    pub fn new(
        base: DendCoalgebra,
        dim: usize,
        l_prec: LinearMap,
        l_succ: LinearMap,
        r_prec: LinearMap,
        r_succ: LinearMap,
    ) -> Result<Self> {
        let d = base.dim();
        check_shape("l_prec", &l_prec, dim, d * dim)?;
        check_shape("l_succ", &l_succ, dim, d * dim)?;
        check_shape("r_prec", &r_prec, dim, dim * d)?;
        check_shape("r_succ", &r_succ, dim, dim * d)?;
        Ok(DendBicomodule { dim, base, l_prec, l_succ, r_prec, r_succ })
    }

    /// `M = C` with all four coactions given by the coproducts.
    pub fn self_bicomodule(base: &DendCoalgebra) -> Self {
        DendBicomodule {
            dim: base.dim,
            base: base.clone(),
            l_prec: base.prec.clone(),
            l_succ: base.succ.clone(),
            r_prec: base.prec.clone(),
            r_succ: base.succ.clone(),
        }
    }

    pub fn zero(base: &DendCoalgebra, dim: usize) -> Self {
        let d = base.dim();
        DendBicomodule {
            dim,
            base: base.clone(),
            l_prec: LinearMap::zero(dim, d * dim),
            l_succ: LinearMap::zero(dim, d * dim),
            r_prec: LinearMap::zero(dim, dim * d),
            r_succ: LinearMap::zero(dim, dim * d),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn base(&self) -> &DendCoalgebra {
        &self.base
    }

    pub fn l_prec(&self) -> &LinearMap {
        &self.l_prec
    }

    pub fn l_succ(&self) -> &LinearMap {
        &self.l_succ
    }

    pub fn r_prec(&self) -> &LinearMap {
        &self.r_prec
    }

    pub fn r_succ(&self) -> &LinearMap {
        &self.r_succ
    }

    /// Left coaction for label 1 (`≺`) or 2 (`≻`).
    pub fn left(&self, label: usize) -> &LinearMap {
        if label == 1 {
            &self.l_prec
        } else {
            &self.l_succ
        }
    }

    pub fn right(&self, label: usize) -> &LinearMap {
        if label == 1 {
            &self.r_prec
        } else {
            &self.r_succ
        }
    }

    /// Left-minus-right defects of `r1`–`r9`.
    pub fn defects(&self) -> [LinearMap; 9] {
        let (d, m) = (self.base.dim, self.dim);
        let b = &self.base;
        let total = b.total_map();
        let l_total = self.l_prec.add(&self.l_succ).expect("same shape");
        let r_total = self.r_prec.add(&self.r_succ).expect("same shape");
        [
            two_sided_defect(&b.prec, m, &self.l_prec, d, &l_total, &self.l_prec),
            two_sided_defect(&b.succ, m, &self.l_prec, d, &self.l_prec, &self.l_succ),
            two_sided_defect(&total, m, &self.l_succ, d, &self.l_succ, &self.l_succ),
            two_sided_defect(&self.l_prec, d, &self.r_prec, d, &r_total, &self.l_prec),
            two_sided_defect(&self.l_succ, d, &self.r_prec, d, &self.r_prec, &self.l_succ),
            two_sided_defect(&l_total, d, &self.r_succ, d, &self.r_succ, &self.l_succ),
            two_sided_defect(&self.r_prec, d, &self.r_prec, m, &total, &self.r_prec),
            two_sided_defect(&self.r_succ, d, &self.r_prec, m, &b.prec, &self.r_succ),
            two_sided_defect(&r_total, d, &self.r_succ, m, &b.succ, &self.r_succ),
        ]
    }

    /// Verdicts for the base identities `c1`–`c3` followed by `r1`–`r9`.
    pub fn check(&self) -> CheckReport {
        let mut report = self.base.check();
        for (k, defect) in self.defects().iter().enumerate() {
            report.push(format!("r{}", k + 1), defect.is_zero());
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.check().passed()
    }

    /// Bicomodule over the total coalgebra with summed coactions.
    pub fn total(&self) -> AssocBicomodule {
        AssocBicomodule::new(
            self.base.total(),
            self.dim,
            self.l_prec.add(&self.l_succ).expect("same shape"),
            self.r_prec.add(&self.r_succ).expect("same shape"),
        )
        .expect("shape checked")
    }

    /// Dendriform coalgebra on `C ⊕ M` (basis of `C` first).
    pub fn semidirect(&self) -> Result<DendCoalgebra> {
        let report = self.check();
        if !report.passed() {
            return Err(Error::Identity(report.violated().join(", ")));
        }
        let (d, m) = (self.base.dim, self.dim);
        let n = d + m;
        let block = |on_c: &LinearMap, left: &LinearMap, right: &LinearMap| -> Result<LinearMap> {
            let c = embed_map(on_c, n, 0, &[d, d], &[0, 0])?;
            let l = embed_map(left, n, d, &[d, m], &[0, d])?;
            let r = embed_map(right, n, d, &[m, d], &[d, 0])?;
            c.add(&l)?.add(&r)
        };
        let prec = block(&self.base.prec, &self.l_prec, &self.r_prec)?;
        let succ = block(&self.base.succ, &self.l_succ, &self.r_succ)?;
        DendCoalgebra::new(n, prec, succ)
    }
}
