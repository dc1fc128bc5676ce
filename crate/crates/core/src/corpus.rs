//! Generators of structures that satisfy their axioms by construction.
//!
//! Random structure constants almost never satisfy (co)associativity, so
//! tests draw from these families instead: split structures over group-like
//! and divided-power coalgebras, Rota-Baxter-induced structures, duals of
//! dendriform algebras, semidirect products, and transports of any of these
//! along seeded unitriangular changes of basis.

use rand::Rng;

use crate::coalg::AssocCoalgebra;
use crate::dendalg::{dualize, DendAlgebra};
use crate::dendcoalg::{DendBicomodule, DendCoalgebra};
use crate::error::Result;
use crate::linalg::{LinearMap, Rational};
use crate::rota::RelRBO;

/// Named dendriform coalgebras of dimension at most 3.
pub fn dend_coalgebras() -> Vec<(String, DendCoalgebra)> {
    let gl = AssocCoalgebra::group_like;
    let dp = AssocCoalgebra::divided_power;
    let scaled_rbo = RelRBO::on_self(&dp(3), RelRBO::divided_power(3).operator().scale(&Rational::new(-3, 2).unwrap()))
        .expect("square operator");
    let semidirect =
        DendBicomodule::self_bicomodule(&DendCoalgebra::split_left(&gl(1))).semidirect().expect("valid module");
    let entries = vec![
        ("zero(2)", DendCoalgebra::zero(2)),
        ("split_left(group_like(1))", DendCoalgebra::split_left(&gl(1))),
        ("split_left(group_like(2))", DendCoalgebra::split_left(&gl(2))),
        ("split_right(group_like(2))", DendCoalgebra::split_right(&gl(2))),
        ("split_left(divided_power(3))", DendCoalgebra::split_left(&dp(3))),
        ("split_right(divided_power(2))", DendCoalgebra::split_right(&dp(2))),
        ("split_left(group_like(1) + divided_power(2))", DendCoalgebra::split_left(&gl(1).direct_sum(&dp(2)))),
        ("rbo_induced(divided_power(3))", RelRBO::divided_power(3).induced_dendriform().expect("valid operator")),
        ("rbo_induced(-3/2 divided_power(3))", scaled_rbo.induced_dendriform().expect("valid operator")),
        ("dual(truncated_polynomial(3))", dualize(&DendAlgebra::truncated_polynomial(3))),
        ("dual(truncated_polynomial(2))", dualize(&DendAlgebra::truncated_polynomial(2))),
        ("semidirect(self over split_left(group_like(1)))", semidirect),
    ];
    entries.into_iter().map(|(n, c)| (n.to_string(), c)).collect()
}

/// Named dendriform algebras of dimension at most 3.
pub fn dend_algebras() -> Vec<(String, DendAlgebra)> {
    // e_i · e_i = e_i on K^2
    let diagonal = LinearMap::from_images(4, 2, [(0, 0, Rational::one()), (3, 1, Rational::one())]).expect("in range");
    let entries = vec![
        ("truncated_polynomial(3)", DendAlgebra::truncated_polynomial(3)),
        ("truncated_polynomial(2)", DendAlgebra::truncated_polynomial(2)),
        ("split_left(diagonal(2))", DendAlgebra::split_left(2, diagonal).expect("shape")),
        ("zero(2)", DendAlgebra::zero(2)),
    ];
    entries.into_iter().map(|(n, a)| (n.to_string(), a)).collect()
}

/// Named Rota-Baxter operators on coalgebras of dimension at most 4.
pub fn rbos() -> Vec<(String, RelRBO)> {
    let dp3 = AssocCoalgebra::divided_power(3);
    let gl2 = AssocCoalgebra::group_like(2);
    let entries = vec![
        ("divided_power(4)", RelRBO::divided_power(4)),
        ("divided_power(3)", RelRBO::divided_power(3)),
        ("divided_power(2)", RelRBO::divided_power(2)),
        (
            "-3/2 divided_power(3)",
            RelRBO::on_self(&dp3, RelRBO::divided_power(3).operator().scale(&Rational::new(-3, 2).unwrap())).unwrap(),
        ),
        (
            "zero into zero module",
            RelRBO::new(crate::coalg::AssocBicomodule::zero(&dp3, 2), LinearMap::zero(3, 2)).unwrap(),
        ),
        ("zero on group_like(2)", RelRBO::on_self(&gl2, LinearMap::zero(2, 2)).unwrap()),
    ];
    entries.into_iter().map(|(n, t)| (n.to_string(), t)).collect()
}

/// `id + N` with `N` strictly upper triangular, and its inverse `Σ_k (−N)^k`.
pub fn unitriangular<R: Rng + ?Sized>(rng: &mut R, d: usize) -> (LinearMap, LinearMap) {
    let nil = LinearMap::from_images(
        d,
        d,
        (0..d)
            .flat_map(|j| (0..j).map(move |i| (j, i)))
            .filter_map(|(j, i)| {
                let v = rng.gen_range(-2i64..=2);
                (v != 0).then(|| (j, i, Rational::from_int(v)))
            })
            .collect::<Vec<_>>(),
    )
    .expect("in range");
    let id = LinearMap::identity(d);
    let g = id.add(&nil).expect("square");
    let minus = nil.neg();
    let mut inv = id.clone();
    let mut power = id;
    for _ in 1..d {
        power = minus.compose(&power).expect("square");
        inv = inv.add(&power).expect("square");
    }
    (g, inv)
}

/// Transport along `g`: `Δ'_x = (g⊗g) ∘ Δ_x ∘ g^{−1}`.
pub fn transport(c: &DendCoalgebra, g: &LinearMap, g_inv: &LinearMap) -> Result<DendCoalgebra> {
    let gg = g.tensor(g);
    let prec = gg.compose(&c.prec().compose(g_inv)?)?;
    let succ = gg.compose(&c.succ().compose(g_inv)?)?;
    DendCoalgebra::new(c.dim(), prec, succ)
}

/// A corpus structure transported along a seeded unitriangular change of basis.
pub fn random_dend_coalgebra<R: Rng + ?Sized>(rng: &mut R) -> DendCoalgebra {
    let corpus = dend_coalgebras();
    let (_, c) = &corpus[rng.gen_range(0..corpus.len())];
    let (g, g_inv) = unitriangular(rng, c.dim());
    transport(c, &g, &g_inv).expect("shapes agree")
}

/// The self bicomodule with its right coactions set to zero.
pub fn left_only(c: &DendCoalgebra) -> DendBicomodule {
    let d = c.dim();
    let zero = LinearMap::zero(d, d * d);
    DendBicomodule::new(c.clone(), d, c.prec().clone(), c.succ().clone(), zero.clone(), zero).expect("shapes agree")
}

/// The self bicomodule with its left coactions set to zero.
pub fn right_only(c: &DendCoalgebra) -> DendBicomodule {
    let d = c.dim();
    let zero = LinearMap::zero(d, d * d);
    DendBicomodule::new(c.clone(), d, zero.clone(), zero, c.prec().clone(), c.succ().clone()).expect("shapes agree")
}

/// `M ⊕ N` over a common base, with `M` spanning the first basis vectors.
pub fn direct_sum(m: &DendBicomodule, n: &DendBicomodule) -> Result<DendBicomodule> {
    let d = m.base().dim();
    let (a, b) = (m.dim(), n.dim());
    let size = a + b;
    // left coactions land in C⊗M: index c·size + x; right ones in M⊗C: index x·d + c
    let left = |f: &LinearMap, g: &LinearMap| -> Result<LinearMap> {
        let mut images = Vec::new();
        for (from, to, v) in f.images() {
            images.push((from, (to / a) * size + to % a, v));
        }
        for (from, to, v) in g.images() {
            images.push((a + from, (to / b) * size + a + to % b, v));
        }
        LinearMap::from_images(size, d * size, images)
    };
    let right = |f: &LinearMap, g: &LinearMap| -> Result<LinearMap> {
        let mut images = f.images();
        for (from, to, v) in g.images() {
            images.push((a + from, (a + to / d) * d + to % d, v));
        }
        LinearMap::from_images(size, size * d, images)
    };
    DendBicomodule::new(
        m.base().clone(),
        size,
        left(m.l_prec(), n.l_prec())?,
        left(m.l_succ(), n.l_succ())?,
        right(m.r_prec(), n.r_prec())?,
        right(m.r_succ(), n.r_succ())?,
    )
}

/// Valid bicomodules of dimension at most 3 over `c`, named.
pub fn bicomodules(c: &DendCoalgebra) -> Vec<(String, DendBicomodule)> {
    let mut out = vec![
        ("self".to_string(), DendBicomodule::self_bicomodule(c)),
        ("zero(2)".to_string(), DendBicomodule::zero(c, 2)),
        ("left_only".to_string(), left_only(c)),
        ("right_only".to_string(), right_only(c)),
    ];
    if c.dim() < 3 {
        let sum = direct_sum(&left_only(c), &DendBicomodule::zero(c, 1)).expect("common base");
        out.push(("left_only + zero(1)".to_string(), sum));
    }
    out
}
