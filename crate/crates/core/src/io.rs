//! JSON documents for every structure kind.
//!
//! Rationals are strings (`"3/2"`, `"-1"`); numbers are rejected. Emitted
//! documents list structure constants sorted by source then target index.
//!
//! Two-factor maps use entries `[from, a, b, "p/q"]` meaning `e_from ↦ (p/q)·e_a ⊗ e_b`,
//! algebra products `[a, b, to, "p/q"]` meaning `e_a · e_b += (p/q)·e_to`, and
//! plain maps `[from, to, "p/q"]`. Graded maps group entries `[from, to, "p/q"]` by
//! the degree of `e_from`, with `from` a global basis index and `to` a flat index
//! into the tensor power.

use serde::{Deserialize, Serialize};

use crate::coalg::{AssocBicomodule, AssocCoalgebra};
use crate::deform::{FormalIso, TruncDeformation};
use crate::dendalg::DendAlgebra;
use crate::dendcoalg::{DendBicomodule, DendCoalgebra, DendCochain};
use crate::error::{Error, Result};
use crate::homotopy::{AInfCoalgebra, DendInfCoalgebra, GradedSpace, RBOInf};
use crate::linalg::{tensor_dim, LinearMap, Rational};
use crate::rota::RelRBO;

pub type Entry2 = (usize, usize, usize, Rational);
pub type Entry1 = (usize, usize, Rational);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoalgebraDoc {
    pub dim: usize,
    pub delta: Vec<Entry2>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BicomoduleDoc {
    pub dim: usize,
    pub delta: Vec<Entry2>,
    pub dim_m: usize,
    pub delta_l: Vec<Entry2>,
    pub delta_r: Vec<Entry2>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DendCoalgebraDoc {
    pub dim: usize,
    pub prec: Vec<Entry2>,
    pub succ: Vec<Entry2>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DendBicomoduleDoc {
    pub dim: usize,
    pub prec: Vec<Entry2>,
    pub succ: Vec<Entry2>,
    pub dim_m: usize,
    pub l_prec: Vec<Entry2>,
    pub l_succ: Vec<Entry2>,
    pub r_prec: Vec<Entry2>,
    pub r_succ: Vec<Entry2>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DendAlgebraDoc {
    pub dim: usize,
    pub prec: Vec<Entry2>,
    pub succ: Vec<Entry2>,
}

/// `"self"` or an explicit bicomodule over the operator's coalgebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleRef {
    Named(String),
    Explicit(Box<BicomoduleDoc>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RboDoc {
    pub coalgebra: CoalgebraDoc,
    pub bicomodule: ModuleRef,
    #[serde(rename = "T")]
    pub t: Vec<Entry1>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabeledTermDoc {
    pub prec: Vec<Entry2>,
    pub succ: Vec<Entry2>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeformationDoc {
    pub base: DendCoalgebraDoc,
    pub order: usize,
    pub terms: Vec<LabeledTermDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormalIsoDoc {
    pub dim: usize,
    pub order: usize,
    pub terms: Vec<Vec<Entry1>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GradedSpaceDoc {
    pub support: Vec<(i64, usize)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GradedMapDoc {
    pub shift: i64,
    pub blocks: Vec<(i64, Vec<Entry1>)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AInfDoc {
    pub space: GradedSpaceDoc,
    pub ops: Vec<GradedMapDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DendInfDoc {
    pub space: GradedSpaceDoc,
    pub ops: Vec<Vec<GradedMapDoc>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AInfRboDoc {
    pub coalgebra: AInfDoc,
    #[serde(rename = "R")]
    pub r: GradedMapDoc,
}

/// A structure file, tagged by `"kind"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Coalgebra(CoalgebraDoc),
    Bicomodule(BicomoduleDoc),
    DendriformCoalgebra(DendCoalgebraDoc),
    DendriformBicomodule(DendBicomoduleDoc),
    DendriformAlgebra(DendAlgebraDoc),
    Rbo(RboDoc),
    Deformation(DeformationDoc),
    FormalIso(FormalIsoDoc),
    GradedSpace(GradedSpaceDoc),
    AinfCoalgebra(AInfDoc),
    DendinfCoalgebra(DendInfDoc),
    AinfRbo(AInfRboDoc),
}

/// A validated-shape structure loaded from a [`Document`].
#[derive(Clone, Debug, PartialEq)]
pub enum Structure {
    Coalgebra(AssocCoalgebra),
    Bicomodule(AssocBicomodule),
    DendCoalgebra(DendCoalgebra),
    DendBicomodule(DendBicomodule),
    DendAlgebra(DendAlgebra),
    Rbo(RelRBO),
    Deformation(TruncDeformation),
    FormalIso(FormalIso),
    GradedSpace(GradedSpace),
    AInf(AInfCoalgebra),
    DendInf(DendInfCoalgebra),
    AInfRbo(AInfCoalgebra, RBOInf),
}

impl Structure {
    /// The `"kind"` tag of the corresponding document.
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Coalgebra(_) => "coalgebra",
            Structure::Bicomodule(_) => "bicomodule",
            Structure::DendCoalgebra(_) => "dendriform_coalgebra",
            Structure::DendBicomodule(_) => "dendriform_bicomodule",
            Structure::DendAlgebra(_) => "dendriform_algebra",
            Structure::Rbo(_) => "rbo",
            Structure::Deformation(_) => "deformation",
            Structure::FormalIso(_) => "formal_iso",
            Structure::GradedSpace(_) => "graded_space",
            Structure::AInf(_) => "ainf_coalgebra",
            Structure::DendInf(_) => "dendinf_coalgebra",
            Structure::AInfRbo(..) => "ainf_rbo",
        }
    }
}

/// Parses a structure file.
pub fn parse(json: &str) -> Result<Structure> {
    let doc: Document = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    from_document(doc)
}

/// Canonical pretty-printed JSON for a structure.
pub fn to_json(s: &Structure) -> String {
    serde_json::to_string_pretty(&to_document(s)).expect("documents serialize") + "\n"
}

pub fn from_document(doc: Document) -> Result<Structure> {
    Ok(match doc {
        Document::Coalgebra(c) => Structure::Coalgebra(coalgebra(&c)?),
        Document::Bicomodule(b) => Structure::Bicomodule(bicomodule(&b)?),
        Document::DendriformCoalgebra(c) => Structure::DendCoalgebra(dend_coalgebra(&c)?),
        Document::DendriformBicomodule(b) => {
            let base = dend_coalgebra(&DendCoalgebraDoc { dim: b.dim, prec: b.prec, succ: b.succ })?;
            let (d, m) = (b.dim, b.dim_m);
            Structure::DendBicomodule(DendBicomodule::new(
                base,
                m,
                two_factor(m, d, m, &b.l_prec)?,
                two_factor(m, d, m, &b.l_succ)?,
                two_factor(m, m, d, &b.r_prec)?,
                two_factor(m, m, d, &b.r_succ)?,
            )?)
        }
        Document::DendriformAlgebra(a) => {
            let d = a.dim;
            Structure::DendAlgebra(DendAlgebra::new(d, product(d, &a.prec)?, product(d, &a.succ)?)?)
        }
        Document::Rbo(r) => {
            let base = coalgebra(&r.coalgebra)?;
            let module = match &r.bicomodule {
                ModuleRef::Named(name) if name == "self" => AssocBicomodule::self_bicomodule(&base),
                ModuleRef::Named(name) => {
                    return Err(Error::Parse(format!("bicomodule must be \"self\" or an object, got {name:?}")))
                }
                ModuleRef::Explicit(b) => {
                    let module = bicomodule(b)?;
                    if module.base() != &base {
                        return Err(Error::Parse("bicomodule is over a different coalgebra".into()));
                    }
                    module
                }
            };
            let t = plain(base.dim(), module.dim(), &r.t)?;
            Structure::Rbo(RelRBO::new(module, t)?)
        }
        Document::Deformation(def) => {
            let base = dend_coalgebra(&def.base)?;
            if def.terms.len() != def.order {
                return Err(Error::Parse(format!("order {} with {} terms", def.order, def.terms.len())));
            }
            let d = base.dim();
            let terms = def
                .terms
                .iter()
                .map(|t| DendCochain::new(d, vec![two_factor(d, d, d, &t.prec)?, two_factor(d, d, d, &t.succ)?]))
                .collect::<Result<_>>()?;
            Structure::Deformation(TruncDeformation::new(base, terms)?)
        }
        Document::FormalIso(f) => {
            if f.terms.len() != f.order {
                return Err(Error::Parse(format!("order {} with {} terms", f.order, f.terms.len())));
            }
            let terms = f.terms.iter().map(|t| plain(f.dim, f.dim, t)).collect::<Result<_>>()?;
            Structure::FormalIso(FormalIso::new(f.dim, terms)?)
        }
        Document::GradedSpace(s) => Structure::GradedSpace(GradedSpace::new(s.support)?),
        Document::AinfCoalgebra(a) => Structure::AInf(ainf(&a)?),
        Document::DendinfCoalgebra(a) => {
            let space = GradedSpace::new(a.space.support.clone())?;
            let ops = (1..)
                .zip(&a.ops)
                .map(|(k, fam)| fam.iter().map(|m| graded_map(&space, k, k as i64 - 2, m)).collect::<Result<Vec<_>>>())
                .collect::<Result<_>>()?;
            Structure::DendInf(DendInfCoalgebra::new(space, ops)?)
        }
        Document::AinfRbo(doc) => {
            let c = ainf(&doc.coalgebra)?;
            let r = RBOInf::new(c.space(), graded_map(c.space(), 1, 0, &doc.r)?)?;
            Structure::AInfRbo(c, r)
        }
    })
}

pub fn to_document(s: &Structure) -> Document {
    match s {
        Structure::Coalgebra(c) => Document::Coalgebra(coalgebra_doc(c)),
        Structure::Bicomodule(b) => Document::Bicomodule(bicomodule_doc(b)),
        Structure::DendCoalgebra(c) => Document::DendriformCoalgebra(dend_coalgebra_doc(c)),
        Structure::DendBicomodule(b) => {
            let base = dend_coalgebra_doc(b.base());
            let (d, m) = (b.base().dim(), b.dim());
            Document::DendriformBicomodule(DendBicomoduleDoc {
                dim: base.dim,
                prec: base.prec,
                succ: base.succ,
                dim_m: m,
                l_prec: two_factor_entries(b.l_prec(), m),
                l_succ: two_factor_entries(b.l_succ(), m),
                r_prec: two_factor_entries(b.r_prec(), d),
                r_succ: two_factor_entries(b.r_succ(), d),
            })
        }
        Structure::DendAlgebra(a) => {
            let d = a.dim();
            Document::DendriformAlgebra(DendAlgebraDoc {
                dim: d,
                prec: product_entries(a.prec(), d),
                succ: product_entries(a.succ(), d),
            })
        }
        Structure::Rbo(r) => {
            let module = if r.module() == &AssocBicomodule::self_bicomodule(r.base()) {
                ModuleRef::Named("self".into())
            } else {
                ModuleRef::Explicit(Box::new(bicomodule_doc(r.module())))
            };
            Document::Rbo(RboDoc {
                coalgebra: coalgebra_doc(r.base()),
                bicomodule: module,
                t: plain_entries(r.operator()),
            })
        }
        Structure::Deformation(def) => {
            let d = def.base().dim();
            let terms = def
                .terms()
                .iter()
                .map(|t| LabeledTermDoc {
                    prec: two_factor_entries(&t.components()[0], d),
                    succ: two_factor_entries(&t.components()[1], d),
                })
                .collect();
            Document::Deformation(DeformationDoc { base: dend_coalgebra_doc(def.base()), order: def.order(), terms })
        }
        Structure::FormalIso(f) => Document::FormalIso(FormalIsoDoc {
            dim: f.dim(),
            order: f.order(),
            terms: f.terms().iter().map(plain_entries).collect(),
        }),
        Structure::GradedSpace(s) => Document::GradedSpace(GradedSpaceDoc { support: s.support().to_vec() }),
        Structure::AInf(c) => Document::AinfCoalgebra(ainf_doc(c)),
        Structure::DendInf(c) => {
            let space = c.space();
            let ops = (1..)
                .zip(c.labeled().ops())
                .map(|(k, fam): (i64, _)| fam.iter().map(|m| graded_map_doc(space, k - 2, m)).collect())
                .collect();
            Document::DendinfCoalgebra(DendInfDoc { space: GradedSpaceDoc { support: space.support().to_vec() }, ops })
        }
        Structure::AInfRbo(c, r) => {
            Document::AinfRbo(AInfRboDoc { coalgebra: ainf_doc(c), r: graded_map_doc(c.space(), 0, r.map()) })
        }
    }
}

fn out_of_range(what: &str, index: usize, bound: usize) -> Error {
    Error::Parse(format!("{what} index {index} out of range (dimension {bound})"))
}

/// `V → A ⊗ B` from `[from, a, b, v]` entries.
fn two_factor(dom: usize, a_dim: usize, b_dim: usize, entries: &[Entry2]) -> Result<LinearMap> {
    let mut images = Vec::with_capacity(entries.len());
    for (from, a, b, v) in entries {
        for (what, i, bound) in [("source", *from, dom), ("first factor", *a, a_dim), ("second factor", *b, b_dim)] {
            if i >= bound {
                return Err(out_of_range(what, i, bound));
            }
        }
        images.push((*from, a * b_dim + b, v.clone()));
    }
    LinearMap::from_images(dom, a_dim * b_dim, images)
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn two_factor_entries(map: &LinearMap, b_dim: usize) -> Vec<Entry2> {
    sorted(map.images().into_iter().map(|(from, to, v)| (from, to / b_dim, to % b_dim, v)).collect())
}

/// `A ⊗ A → A` from `[a, b, to, v]` entries.
fn product(d: usize, entries: &[Entry2]) -> Result<LinearMap> {
    let mut images = Vec::with_capacity(entries.len());
    for (a, b, to, v) in entries {
        for i in [*a, *b, *to] {
            if i >= d {
                return Err(out_of_range("basis", i, d));
            }
        }
        images.push((a * d + b, *to, v.clone()));
    }
    LinearMap::from_images(d * d, d, images)
}

fn product_entries(map: &LinearMap, d: usize) -> Vec<Entry2> {
    sorted(map.images().into_iter().map(|(from, to, v)| (from / d, from % d, to, v)).collect())
}

fn plain(dom: usize, cod: usize, entries: &[Entry1]) -> Result<LinearMap> {
    for (from, to, _) in entries {
        if *from >= dom {
            return Err(out_of_range("source", *from, dom));
        }
        if *to >= cod {
            return Err(out_of_range("target", *to, cod));
        }
    }
    LinearMap::from_images(dom, cod, entries.iter().cloned())
}

fn plain_entries(map: &LinearMap) -> Vec<Entry1> {
    sorted(map.images())
}

fn coalgebra(c: &CoalgebraDoc) -> Result<AssocCoalgebra> {
    AssocCoalgebra::new(c.dim, two_factor(c.dim, c.dim, c.dim, &c.delta)?)
}

fn coalgebra_doc(c: &AssocCoalgebra) -> CoalgebraDoc {
    CoalgebraDoc { dim: c.dim(), delta: two_factor_entries(c.delta(), c.dim()) }
}

fn bicomodule(b: &BicomoduleDoc) -> Result<AssocBicomodule> {
    let base = coalgebra(&CoalgebraDoc { dim: b.dim, delta: b.delta.clone() })?;
    let (d, m) = (b.dim, b.dim_m);
    AssocBicomodule::new(base, m, two_factor(m, d, m, &b.delta_l)?, two_factor(m, m, d, &b.delta_r)?)
}

fn bicomodule_doc(b: &AssocBicomodule) -> BicomoduleDoc {
    let base = coalgebra_doc(b.base());
    BicomoduleDoc {
        dim: base.dim,
        delta: base.delta,
        dim_m: b.dim(),
        delta_l: two_factor_entries(b.delta_l(), b.dim()),
        delta_r: two_factor_entries(b.delta_r(), b.base().dim()),
    }
}

fn dend_coalgebra(c: &DendCoalgebraDoc) -> Result<DendCoalgebra> {
    let d = c.dim;
    DendCoalgebra::new(d, two_factor(d, d, d, &c.prec)?, two_factor(d, d, d, &c.succ)?)
}

fn dend_coalgebra_doc(c: &DendCoalgebra) -> DendCoalgebraDoc {
    let d = c.dim();
    DendCoalgebraDoc { dim: d, prec: two_factor_entries(c.prec(), d), succ: two_factor_entries(c.succ(), d) }
}

fn graded_map(space: &GradedSpace, arity: usize, shift: i64, doc: &GradedMapDoc) -> Result<LinearMap> {
    if doc.shift != shift {
        return Err(Error::Degree(format!("arity {arity} map declared with shift {}, expected {shift}", doc.shift)));
    }
    let (d, degrees) = (space.dim(), space.degrees());
    let mut entries = Vec::new();
    for (deg, block) in &doc.blocks {
        for entry in block {
            if entry.0 < d && degrees[entry.0] != *deg {
                return Err(Error::Degree(format!(
                    "basis vector {} has degree {}, listed under {deg}",
                    entry.0, degrees[entry.0]
                )));
            }
            entries.push(entry.clone());
        }
    }
    let map = plain(d, tensor_dim(d, arity), &entries)?;
    space.check_homogeneous(&format!("arity {arity} map"), &map, arity, shift)?;
    Ok(map)
}

fn graded_map_doc(space: &GradedSpace, shift: i64, map: &LinearMap) -> GradedMapDoc {
    let degrees = space.degrees();
    let entries = plain_entries(map);
    let blocks = space
        .support()
        .iter()
        .map(|&(deg, _)| (deg, entries.iter().filter(|e| degrees[e.0] == deg).cloned().collect::<Vec<_>>()))
        .filter(|(_, block)| !block.is_empty())
        .collect();
    GradedMapDoc { shift, blocks }
}

fn ainf(a: &AInfDoc) -> Result<AInfCoalgebra> {
    let space = GradedSpace::new(a.space.support.clone())?;
    let ops = (1..).zip(&a.ops).map(|(k, m)| graded_map(&space, k, k as i64 - 2, m)).collect::<Result<_>>()?;
    AInfCoalgebra::new(space, ops)
}

fn ainf_doc(c: &AInfCoalgebra) -> AInfDoc {
    let space = c.space();
    let ops = (1..).zip(c.ops()).map(|(k, m): (i64, _)| graded_map_doc(space, k - 2, m)).collect();
    AInfDoc { space: GradedSpaceDoc { support: space.support().to_vec() }, ops }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{dend_algebras, dend_coalgebras, rbos};
    use crate::homotopy::{simplex_chains, tensor_operator, tensor_with_dg};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn round_trip(s: Structure) {
        let json = to_json(&s);
        let back = parse(&json).unwrap();
        assert_eq!(back, s, "{}", s.kind());
        assert_eq!(to_json(&back), json);
    }

    #[test]
    fn every_kind_round_trips() {
        for (_, c) in dend_coalgebras() {
            round_trip(Structure::Coalgebra(c.total()));
            round_trip(Structure::DendBicomodule(DendBicomodule::self_bicomodule(&c)));
            round_trip(Structure::DendCoalgebra(c));
        }
        for (_, a) in dend_algebras() {
            round_trip(Structure::DendAlgebra(a));
        }
        for (_, r) in rbos() {
            round_trip(Structure::Bicomodule(r.module().clone()));
            round_trip(Structure::Rbo(r));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let iso = FormalIso::random(&mut rng, 3, 2);
        let base = dend_coalgebras()[4].1.clone();
        let def = crate::deform::apply_equivalence(&iso, &TruncDeformation::trivial(base, 2)).unwrap();
        round_trip(Structure::Deformation(def));
        round_trip(Structure::FormalIso(iso));
        let chains = simplex_chains(2, 3).unwrap();
        round_trip(Structure::GradedSpace(chains.space().clone()));
        round_trip(Structure::AInf(chains.clone()));
        round_trip(Structure::DendInf(DendInfCoalgebra::from_dendriform(&dend_coalgebras()[7].1, 3)));
        let rbo = RelRBO::divided_power(2);
        let (c, perm) = tensor_with_dg(rbo.base(), &chains).unwrap();
        let r = RBOInf::new(c.space(), tensor_operator(rbo.operator(), chains.space().dim(), &perm).unwrap()).unwrap();
        round_trip(Structure::AInfRbo(c, r));
    }

    #[test]
    fn documented_layout() {
        let json = r#"{"kind":"coalgebra","dim":2,"delta":[[1,0,1,"1"],[1,1,0,"1"],[0,0,0,"1"]]}"#;
        let Structure::Coalgebra(c) = parse(json).unwrap() else { panic!() };
        assert_eq!(c, AssocCoalgebra::divided_power(2));
        let out = to_json(&Structure::Coalgebra(c));
        assert!(out.find("[\n      0,").unwrap() < out.find("[\n      1,").unwrap());
        let rbo = r#"{"kind":"rbo","coalgebra":{"dim":2,"delta":[[0,0,0,"1"],[1,0,1,"1"],[1,1,0,"1"]]},"bicomodule":"self","T":[[1,0,"1"]]}"#;
        let Structure::Rbo(r) = parse(rbo).unwrap() else { panic!() };
        assert_eq!(r, RelRBO::divided_power(2));
    }

    #[test]
    fn rejects_bad_input() {
        let zero_den = r#"{"kind":"coalgebra","dim":1,"delta":[[0,0,0,"1/0"]]}"#;
        assert!(matches!(parse(zero_den), Err(Error::Parse(_))));
        let float = r#"{"kind":"coalgebra","dim":1,"delta":[[0,0,0,1.5]]}"#;
        assert!(matches!(parse(float), Err(Error::Parse(_))));
        let range = r#"{"kind":"coalgebra","dim":1,"delta":[[0,0,1,"1"]]}"#;
        assert!(matches!(parse(range), Err(Error::Parse(_))));
        assert!(matches!(parse(r#"{"kind":"unknown"}"#), Err(Error::Parse(_))));
        let module = r#"{"kind":"rbo","coalgebra":{"dim":1,"delta":[]},"bicomodule":"other","T":[]}"#;
        assert!(matches!(parse(module), Err(Error::Parse(_))));
        let shift = r#"{"kind":"ainf_coalgebra","space":{"support":[[0,1]]},"ops":[{"shift":0,"blocks":[]}]}"#;
        assert!(matches!(parse(shift), Err(Error::Degree(_))));
        let block = r#"{"kind":"ainf_coalgebra","space":{"support":[[0,1],[1,1]]},"ops":[{"shift":-1,"blocks":[[0,[[1,0,"1"]]]]}]}"#;
        assert!(matches!(parse(block), Err(Error::Degree(_))));
    }
}
