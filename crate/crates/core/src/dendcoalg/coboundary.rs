use super::labels::{r0, ri, LabelSum};
use super::operad::DendCochain;
use super::DendBicomodule;
use crate::coalg::{check_shape, CoHochCochain};
use crate::cohomology::{cohomology_table, matrix_of, CohomologyTable};
use crate::error::{Error, Result};
use crate::linalg::{tensor_dim, LinearMap, Rational, SparseMatrix};

/// `a` at label `[1]`, `b` at label `[2]`, extended linearly.
fn eval_pair(a: &LinearMap, b: &LinearMap, labels: &LabelSum) -> Result<LinearMap> {
    let mut acc = LinearMap::zero(a.dom(), a.cod());
    for (r, c) in labels.terms() {
        acc = acc.add_scaled(c, if *r == 1 { a } else { b })?;
    }
    Ok(acc)
}

/// The coboundary `δ_c` with coefficients in a bicomodule.
pub fn dend_coboundary(module: &DendBicomodule, s: &DendCochain) -> Result<DendCochain> {
    let (d, m, n) = (module.base().dim(), module.dim(), s.degree());
    for c in s.components() {
        check_shape("cochain component", c, m, tensor_dim(d, n))?;
    }
    let base = module.base();
    let total = s.total();
    let eval = |labels: &LabelSum| -> Result<LinearMap> {
        if labels.is_full() {
            Ok(total.clone())
        } else {
            s.eval(labels)
        }
    };
    let mut comps = Vec::with_capacity(n + 1);
    for r in 1..=n + 1 {
        let coaction = eval_pair(module.l_prec(), module.l_succ(), &LabelSum::single(2, r0(2, n, 2, r)?)?)?;
        let mut acc = eval(&ri(2, n, 2, r)?)?.pad_then(d, 1, &coaction)?;
        for i in 1..=n {
            let inner = eval_pair(base.prec(), base.succ(), &ri(n, 2, i, r)?)?;
            let sigma = &s.components()[r0(n, 2, i, r)? - 1];
            let term = inner.pad_then(tensor_dim(d, i - 1), tensor_dim(d, n - i), sigma)?;
            acc = acc.add_scaled(&Rational::sign(i), &term)?;
        }
        let coaction = eval_pair(module.r_prec(), module.r_succ(), &LabelSum::single(2, r0(2, n, 1, r)?)?)?;
        let last = eval(&ri(2, n, 1, r)?)?.pad_then(1, d, &coaction)?;
        acc = acc.add_scaled(&Rational::sign(n + 1), &last)?;
        comps.push(acc);
    }
    Ok(DendCochain::from_parts(comps))
}

/// `dim C^n = n · m · d^n`.
pub fn dend_cochain_dim(module: &DendBicomodule, n: usize) -> usize {
    n * module.dim() * tensor_dim(module.base().dim(), n)
}

/// Matrix of `δ_c^n` in the stacked basis of [`DendCochain::to_vector`].
pub fn dend_coboundary_matrix(module: &DendBicomodule, n: usize) -> Result<SparseMatrix> {
    let (d, m) = (module.base().dim(), module.dim());
    let cod = tensor_dim(d, n);
    let block = m * cod;
    matrix_of(dend_cochain_dim(module, n), dend_cochain_dim(module, n + 1), |k| {
        let (r, rest) = (k / block, k % block);
        let s = DendCochain::single(d, n, r + 1, LinearMap::unit(m, cod, rest / cod, rest % cod))?;
        Ok(dend_coboundary(module, &s)?.to_vector())
    })
}

pub fn dend_cohomology(module: &DendBicomodule, max_degree: usize) -> Result<CohomologyTable> {
    if max_degree == 0 {
        return Err(Error::DegreeZero);
    }
    cohomology_table(max_degree, |n| dend_cochain_dim(module, n), |n| dend_coboundary_matrix(module, n))
}

pub fn dend_cohomology_dims(module: &DendBicomodule, max_degree: usize) -> Result<Vec<usize>> {
    Ok(dend_cohomology(module, max_degree)?.dims())
}

/// `S(σ) = σ_[1] + … + σ_[n]`; `d` is the dimension of `C`.
pub fn s_map(s: &DendCochain, d: usize) -> CoHochCochain {
    s.s_map(d)
}
