use super::graded::{pad_graded_then, GradedSpace};
use crate::coalg::AssocCoalgebra;
use crate::error::{Error, Result};
use crate::linalg::{flatten, tensor_dim, LinearMap, Rational};
use crate::report::CheckReport;

/// Cooperations `Δ_k : C → C^{⊗k}` of degree `k − 2` for `k ≤ max_arity`;
/// higher arities are unknown, not zero.
#[derive(Clone, Debug, PartialEq)]
pub struct AInfCoalgebra {
    space: GradedSpace,
    ops: Vec<LinearMap>,
}

impl AInfCoalgebra {
    /// `ops[k − 1]` is `Δ_k`.
    pub fn new(space: GradedSpace, ops: Vec<LinearMap>) -> Result<Self> {
        for (k, op) in (1..).zip(&ops) {
            space.check_homogeneous(&format!("Δ_{k}"), op, k, k as i64 - 2)?;
        }
        Ok(AInfCoalgebra { space, ops })
    }

    pub fn zero(space: GradedSpace, max_arity: usize) -> Self {
        let d = space.dim();
        let ops = (1..=max_arity).map(|k| LinearMap::zero(d, tensor_dim(d, k))).collect();
        AInfCoalgebra { space, ops }
    }

    /// An ungraded coalgebra in degree 0 with `Δ_2 = Δ` and every other cooperation zero.
    pub fn from_coalgebra(c: &AssocCoalgebra, max_arity: usize) -> Self {
        let mut out = AInfCoalgebra::zero(GradedSpace::concentrated(c.dim()), max_arity.max(2));
        out.ops[1] = c.delta().clone();
        out
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn max_arity(&self) -> usize {
        self.ops.len()
    }

    pub fn ops(&self) -> &[LinearMap] {
        &self.ops
    }

    /// `Δ_k`, if within the truncation.
    pub fn op(&self, k: usize) -> Option<&LinearMap> {
        self.ops.get(k.wrapping_sub(1))
    }

    /// `Σ_{r+s+t=n} (−1)^{rs+t} (id^{⊗r} ⊗ Δ_s ⊗ id^{⊗t}) ∘ Δ_{r+1+t}`, a map `C → C^{⊗n}`.
    pub fn identity_sum(&self, n: usize) -> Result<LinearMap> {
        if n == 0 || n > self.max_arity() {
            return Err(Error::Truncation(format!("identity n={n} needs Δ_{n}, beyond arity {}", self.max_arity())));
        }
        let d = self.space.dim();
        let mut acc = LinearMap::zero(d, tensor_dim(d, n));
        for s in 1..=n {
            for r in 0..=n - s {
                let t = n - s - r;
                let term = pad_graded_then(&self.space, &self.ops[s - 1], s as i64 - 2, r, t, &self.ops[r + t])?;
                acc = acc.add_scaled(&Rational::sign(r * s + t), &term)?;
            }
        }
        Ok(acc)
    }

    /// With `Δ_k = 0` for `k ≥ 3` the identities for `n ≤ 3` say that `Δ_1` is a
    /// differential, a coderivation of `Δ_2`, and that `Δ_2` is coassociative.
    pub fn is_dg(&self) -> bool {
        self.ops.iter().skip(2).all(LinearMap::is_zero)
    }
}

/// Higher coassociativity for `1 ≤ n ≤ n_max`, named `ainf n=N`; identities
/// beyond the stored arity are listed as not checked.
pub fn check_ainf(c: &AInfCoalgebra, n_max: usize) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for n in 1..=n_max {
        let name = format!("ainf n={n}");
        if n > c.max_arity() {
            report.skip(name);
        } else {
            report.push(name, c.identity_sum(n)?.is_zero());
        }
    }
    Ok(report)
}

/// A degree 0 map `R : C → C`.
#[derive(Clone, Debug, PartialEq)]
pub struct RBOInf {
    map: LinearMap,
}

impl RBOInf {
    pub fn new(space: &GradedSpace, map: LinearMap) -> Result<Self> {
        space.check_homogeneous("R", &map, 1, 0)?;
        Ok(RBOInf { map })
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    /// `R ⊗ … ⊗ id ⊗ … ⊗ R` with the identity at 1-based `place` (`0` for none).
    pub fn tensor_power(&self, arity: usize, place: usize) -> LinearMap {
        let d = self.map.dom();
        let id = LinearMap::identity(d);
        (1..=arity).fold(LinearMap::identity(1), |acc, i| acc.tensor(if i == place { &id } else { &self.map }))
    }
}

/// `R^{⊗k} ∘ Δ_k = (Σ_i R ⊗ … ⊗ id_i ⊗ … ⊗ R) ∘ Δ_k ∘ R` for `k ≤ max arity`,
/// named `rbo k=K`.
pub fn check_rbo_inf(c: &AInfCoalgebra, r: &RBOInf) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for k in 1..=c.max_arity() {
        let op = &c.ops()[k - 1];
        let lhs = r.tensor_power(k, 0).compose(op)?;
        let inner = op.compose(r.map())?;
        let mut rhs = LinearMap::zero(lhs.dom(), lhs.cod());
        for place in 1..=k {
            rhs = rhs.add(&r.tensor_power(k, place).compose(&inner)?)?;
        }
        report.push(format!("rbo k={k}"), lhs == rhs);
    }
    Ok(report)
}

/// Normalized simplicial chains of the standard `dim`-simplex for `dim ≤ 2`,
/// with the simplicial boundary as `Δ_1` and the Alexander-Whitney coproduct as `Δ_2`.
pub fn simplex_chains(dim: usize, max_arity: usize) -> Result<AInfCoalgebra> {
    // faces as sorted vertex lists, grouped by degree
    let faces: Vec<Vec<usize>> = match dim {
        1 => vec![vec![0], vec![1], vec![0, 1]],
        2 => vec![vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]],
        _ => return Err(Error::Dimension(format!("simplex chains are provided for dimension 1 and 2, not {dim}"))),
    };
    let mut support = Vec::new();
    for k in 0..=dim {
        support.push((k as i64, faces.iter().filter(|f| f.len() == k + 1).count()));
    }
    let space = GradedSpace::new(support)?;
    let n = faces.len();
    let index = |f: &[usize]| faces.iter().position(|g| g == f).expect("face of the simplex");
    let mut boundary = Vec::new();
    let mut coproduct = Vec::new();
    for (j, f) in faces.iter().enumerate() {
        if f.len() > 1 {
            for drop in 0..f.len() {
                let face: Vec<usize> = f.iter().enumerate().filter(|(i, _)| *i != drop).map(|(_, v)| *v).collect();
                boundary.push((j, index(&face), Rational::sign(drop)));
            }
        }
        // front face ⊗ back face
        for split in 0..f.len() {
            let front = index(&f[..=split]);
            let back = index(&f[split..]);
            coproduct.push((j, flatten(n, &[front, back]), Rational::one()));
        }
    }
    let mut c = AInfCoalgebra::zero(space.clone(), max_arity.max(2));
    c.ops[0] = LinearMap::from_images(n, n, boundary)?;
    c.ops[1] = LinearMap::from_images(n, n * n, coproduct)?;
    AInfCoalgebra::new(space, c.ops)
}

/// `C ⊗ B` for an ungraded coalgebra `C` in degree 0 and a dg-coalgebra `B`, with
/// `Δ_1 = id ⊗ Δ_1^B` and `Δ_2(c ⊗ b) = Σ (c' ⊗ b') ⊗ (c'' ⊗ b'')`. Basis `c_i ⊗ b_j`
/// sits at `i·dim B + j`, so the space is reordered by degree afterwards.
pub fn tensor_with_dg(c: &AssocCoalgebra, b: &AInfCoalgebra) -> Result<(AInfCoalgebra, LinearMap)> {
    if !b.is_dg() || b.max_arity() < 2 {
        return Err(Error::Dimension("second factor must be a dg-coalgebra with Δ_2 given".into()));
    }
    let (dc, db) = (c.dim(), b.space().dim());
    let n = dc * db;
    // permutation to the degree-sorted basis: position of (i, j)
    let b_degrees = b.space().degrees();
    let mut order: Vec<(i64, usize, usize)> =
        (0..dc).flat_map(|i| (0..db).map(move |j| (i, j))).map(|(i, j)| (b_degrees[j], i, j)).collect();
    order.sort();
    let mut pos = vec![0; n];
    for (p, &(_, i, j)) in order.iter().enumerate() {
        pos[i * db + j] = p;
    }
    let mut support: Vec<(i64, usize)> = Vec::new();
    for &(deg, _, _) in &order {
        match support.last_mut() {
            Some((d, count)) if *d == deg => *count += 1,
            _ => support.push((deg, 1)),
        }
    }
    let space = GradedSpace::new(support)?;
    let mut ops = Vec::new();
    let mut d1 = Vec::new();
    for i in 0..dc {
        for (j, to, v) in b.ops()[0].images() {
            d1.push((pos[i * db + j], pos[i * db + to], v));
        }
    }
    ops.push(LinearMap::from_images(n, n, d1)?);
    let mut d2 = Vec::new();
    for (i, ci, u) in c.delta().images() {
        let (i1, i2) = (ci / dc, ci % dc);
        for (j, bj, v) in b.ops()[1].images() {
            let (j1, j2) = (bj / db, bj % db);
            d2.push((pos[i * db + j], flatten(n, &[pos[i1 * db + j1], pos[i2 * db + j2]]), &u * &v));
        }
    }
    ops.push(LinearMap::from_images(n, n * n, d2)?);
    for k in 3..=b.max_arity() {
        ops.push(LinearMap::zero(n, tensor_dim(n, k)));
    }
    let perm = LinearMap::from_images(n, n, (0..n).map(|k| (k, pos[k], Rational::one())))?;
    Ok((AInfCoalgebra::new(space, ops)?, perm))
}

/// `T ⊗ id_B` transported to the degree-sorted basis of [`tensor_with_dg`].
pub fn tensor_operator(t: &LinearMap, db: usize, perm: &LinearMap) -> Result<LinearMap> {
    let lifted = t.tensor(&LinearMap::identity(db));
    let inverse = perm.transpose();
    perm.compose(&lifted.compose(&inverse)?)
}

/// Flips the sign of one structure constant of `Δ_k`.
pub fn flip_entry(c: &AInfCoalgebra, k: usize, which: usize) -> Result<AInfCoalgebra> {
    let op = &c.ops()[k - 1];
    let images = op.images();
    let (from, to, v) = images
        .get(which)
        .cloned()
        .ok_or_else(|| Error::Dimension(format!("Δ_{k} has fewer than {} entries", which + 1)))?;
    let bumped =
        op.add_scaled(&Rational::from_int(-2), &LinearMap::from_images(op.dom(), op.cod(), [(from, to, v)])?)?;
    let mut ops = c.ops().to_vec();
    ops[k - 1] = bumped;
    AInfCoalgebra::new(c.space().clone(), ops)
}
