//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Set `ACCEPTANCE_SEED` to vary the randomized samples (default 0).

use std::fmt::Display;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use dendri_core::coalg::{cohoch_coboundary, AssocCoalgebra, CoEnd};
use dendri_core::corpus::{bicomodules, dend_algebras, dend_coalgebras, rbos};
use dendri_core::deform::{
    apply_equivalence, check_deformation, extend, infinitesimal, obstruction, FormalIso, TruncDeformation,
};
use dendri_core::dendalg::{alg_cohomology_dims, check_iso_compat, dualize, AlgCochain};
use dendri_core::dendcoalg::{
    dend_coboundary, dend_coboundary_matrix, dend_cohomology_dims, s_map, DendBicomodule, DendCoalgebra, DendCochain,
    LabeledCoEnd,
};
use dendri_core::homotopy::{
    check_ainf, check_d_squared, check_dendinf, check_dendinf1, induce_dendinf, shift_to_dendinf1, simplex_chains,
    split, tensor_operator, tensor_with_dg, AInfCoalgebra, DendInfCoalgebra, GradedSpace, RBOInf,
};
use dendri_core::io::{self, Structure};
use dendri_core::operad::{
    bracket, check_operad_axioms, mul_circ_defect, pre_lie_defect, random_samples, Operad, OperadElement,
};
use dendri_core::rota::{derived_bracket, induced_cohoch_coboundary, RBOCochain, RelRBO};
use dendri_core::{CheckReport, LinearMap, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

trait Context<T> {
    fn ctx(self, what: &str) -> Result<T, String>;
}

impl<T, E: Display> Context<T> for Result<T, E> {
    fn ctx(self, what: &str) -> Result<T, String> {
        self.map_err(|e| format!("{what}: {e}"))
    }
}

fn ensure(holds: bool, failure: impl FnOnce() -> String) -> Result<(), String> {
    if holds {
        Ok(())
    } else {
        Err(failure())
    }
}

fn rng_for(seed: u64, criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(1_000_003).wrapping_add(criterion))
}

fn corpus() -> Vec<(String, DendCoalgebra)> {
    dend_coalgebras()
}

/// `δ_c ∘ δ_c = 0` as a matrix identity and on random cochains.
fn coboundary_squares_to_zero(seed: u64) -> Outcome {
    let mut rng = rng_for(seed, 1);
    let (mut pairs, mut matrices, mut samples) = (0, 0, 0);
    for (name, c) in corpus() {
        for (module_name, module) in bicomodules(&c) {
            if module.dim() > 3 {
                continue;
            }
            pairs += 1;
            for n in 1..=3 {
                let first = dend_coboundary_matrix(&module, n).ctx("coboundary matrix")?;
                let second = dend_coboundary_matrix(&module, n + 1).ctx("coboundary matrix")?;
                let square = second.mul(&first).ctx("composite")?;
                ensure(square.is_zero(), || format!("{name} with {module_name}: δ∘δ ≠ 0 on C^{n}"))?;
                matrices += 1;
            }
            for k in 0..20 {
                let s = DendCochain::random(&mut rng, module.dim(), c.dim(), 1 + k % 4);
                let ds = dend_coboundary(&module, &s).ctx("coboundary")?;
                let dds = dend_coboundary(&module, &ds).ctx("coboundary")?;
                ensure(dds.is_zero(), || format!("{name} with {module_name}: δδσ ≠ 0 for degree {}", s.degree()))?;
                samples += 1;
            }
        }
    }
    Ok(format!("{pairs} structure/module pairs, {matrices} composite matrices, {samples} random cochains"))
}

fn operad_checks<O: Operad>(op: &O, rng: &mut ChaCha8Rng, label: &str) -> Result<usize, String> {
    let samples = random_samples(op, 3, 6, rng);
    let axioms = check_operad_axioms(op, &samples).ctx("operad axioms")?;
    ensure(axioms.passed(), || format!("{label}: {:?}", axioms.violations))?;
    for t in 0..50 {
        let arities = [1 + t % 3, 1 + (t / 3) % 3, 1 + (t / 9) % 3];
        let [f, g, h] = arities.map(|a| op.random(a, rng));
        let defect = pre_lie_defect(op, &f, &g, &h).ctx("pre-Lie defect")?;
        ensure(defect.is_zero(), || format!("{label}: pre-Lie identity fails for arities {arities:?}"))?;
    }
    Ok(axioms.checked + 50)
}

/// Operad axioms, pre-Lie identity and the Leibniz-type rule for `δ_π` on `O(2)`.
fn operad_suite(seed: u64) -> Outcome {
    let mut rng = rng_for(seed, 2);
    let mut checked = 0;
    for d in 1..=2 {
        checked += operad_checks(&CoEnd::new(d), &mut rng, &format!("coEnd({d})"))?;
        checked += operad_checks(&LabeledCoEnd::new(d), &mut rng, &format!("labeled coEnd({d})"))?;
    }
    let mut products = 0;
    for (name, c) in corpus().into_iter().filter(|(_, c)| c.dim() <= 2) {
        let labeled = LabeledCoEnd::new(c.dim());
        let pi = c.multiplication().ctx("multiplication")?;
        let plain = CoEnd::new(c.dim());
        let total = plain.multiplication(&c.total()).ctx("multiplication")?;
        for _ in 0..3 {
            let (f, g) = (labeled.random(2, &mut rng), labeled.random(2, &mut rng));
            ensure(mul_circ_defect(&labeled, &pi, &f, &g).ctx("defect")?.is_zero(), || {
                format!("{name}: labeled rule fails")
            })?;
            let (f, g) = (plain.random(2, &mut rng), plain.random(2, &mut rng));
            ensure(mul_circ_defect(&plain, &total, &f, &g).ctx("defect")?.is_zero(), || {
                format!("{name}: coEnd rule fails")
            })?;
            products += 2;
        }
    }
    Ok(format!("{checked} axiom and pre-Lie checks, {products} product rules"))
}

/// `δ_c(id) = (Δ_≺, Δ_≻)` and `δ_c(π) = 0`.
fn identity_and_multiplication(_seed: u64) -> Outcome {
    let mut count = 0;
    for (name, c) in corpus() {
        let module = DendBicomodule::self_bicomodule(&c);
        let id = DendCochain::new(c.dim(), vec![LinearMap::identity(c.dim())]).ctx("identity cochain")?;
        let did = dend_coboundary(&module, &id).ctx("coboundary")?;
        ensure(did.components() == [c.prec().clone(), c.succ().clone()], || format!("{name}: δ_c(id) ≠ (Δ_≺, Δ_≻)"))?;
        let pi = c.multiplication().ctx("multiplication")?;
        ensure(dend_coboundary(&module, pi.pi()).ctx("coboundary")?.is_zero(), || format!("{name}: δ_c(π) ≠ 0"))?;
        count += 1;
    }
    Ok(format!("{count} structures"))
}

/// Cohomology of an algebra equals that of its dual, and the dual isomorphism respects compositions.
fn duality(seed: u64) -> Outcome {
    let mut rng = rng_for(seed, 4);
    let mut summary = Vec::new();
    for (name, a) in dend_algebras().into_iter().take(3) {
        let alg = alg_cohomology_dims(&a, 3).ctx("algebra cohomology")?;
        let coalg = dend_cohomology_dims(&DendBicomodule::self_bicomodule(&dualize(&a)), 3).ctx("dual cohomology")?;
        ensure(alg == coalg, || format!("{name}: {alg:?} vs {coalg:?}"))?;
        summary.push(format!("{name} {alg:?}"));
    }
    for _ in 0..20 {
        let d = rng.gen_range(1..=2);
        let (nf, ng) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
        let f = AlgCochain::random(&mut rng, d, nf);
        let g = AlgCochain::random(&mut rng, d, ng);
        let i = rng.gen_range(1..=f.degree());
        ensure(check_iso_compat(&f, &g, i, d).ctx("iso compatibility")?, || {
            format!("dual isomorphism fails for degrees {}, {} at {i}", f.degree(), g.degree())
        })?;
    }
    Ok(format!("{}; 20 composition pairs", summary.join(", ")))
}

/// `S` intertwines `δ_c` with the coHochschild coboundary of the total structure.
fn s_is_a_chain_map(seed: u64) -> Outcome {
    let mut rng = rng_for(seed, 5);
    let mut count = 0;
    for (name, c) in corpus() {
        for (module_name, module) in bicomodules(&c) {
            let total = module.total();
            for k in 0..20 {
                let n = 1 + k % 3;
                let s = DendCochain::random(&mut rng, module.dim(), c.dim(), n);
                let lhs = cohoch_coboundary(&total, &s_map(&s, c.dim())).ctx("coHochschild coboundary")?;
                let rhs = s_map(&dend_coboundary(&module, &s).ctx("coboundary")?, c.dim());
                ensure(lhs == rhs, || format!("{name} with {module_name}: S fails at degree {n}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} random cochains"))
}

fn bumped(t: &RelRBO) -> Option<RelRBO> {
    let (d, m) = (t.base().dim(), t.module().dim());
    (d >= 2 && m >= 1).then(|| {
        let t2 = t.operator().add(&LinearMap::unit(d, m, 1, 0)).expect("same shape");
        RelRBO::new(t.module().clone(), t2).expect("same shape")
    })
}

/// Rota-Baxter operators: induced structures, `⟦T,T⟧`, `d_T` and `Θ`.
fn rota_baxter_suite(seed: u64) -> Outcome {
    let mut rng = rng_for(seed, 6);
    let dp4 = RelRBO::divided_power(4);
    ensure(dp4.check_rbo(), || "divided_power(4) is not an operator".into())?;
    ensure(dp4.induced_dendriform().ctx("induced")?.is_valid(), || "induced structure is not dendriform".into())?;
    ensure(dp4.induced_coalgebra().ctx("induced")?.check_coassociative(), || "induced coalgebra".into())?;
    ensure(dp4.induced_bicomodule().ctx("induced")?.check_bicomodule(), || "induced bicomodule".into())?;

    let mut candidates: Vec<(String, RelRBO)> = Vec::new();
    for (name, t) in rbos() {
        if let Some(b) = bumped(&t) {
            candidates.push((format!("bumped {name}"), b));
        }
        candidates.push((name, t));
    }
    let mut non_operators = 0;
    for (name, t) in &candidates {
        let op = RBOCochain::new(t.module().dim(), 1, t.operator().clone()).ctx("operator cochain")?;
        let tt = derived_bracket(t.module(), &op, &op).ctx("derived bracket")?;
        ensure(tt.is_zero() == t.check_rbo(), || format!("{name}: ⟦T,T⟧ = 0 disagrees with the operator identity"))?;
        non_operators += usize::from(!t.check_rbo());
    }
    ensure(non_operators > 0, || "no mutation breaks the operator identity".into())?;

    let mut differentials = 0;
    for (name, t) in candidates.iter().filter(|(_, t)| t.check_rbo()) {
        let (d, m) = (t.base().dim(), t.module().dim());
        let op = LabeledCoEnd::new(m);
        let induced = DendBicomodule::self_bicomodule(&t.induced_dendriform().ctx("induced")?);
        for n in 1..=3 {
            let f = RBOCochain::random(&mut rng, d, m, n);
            let dt = t.coboundary(&f).ctx("d_T")?;
            let hoch = induced_cohoch_coboundary(t, &f).ctx("induced coHochschild coboundary")?;
            ensure(dt == hoch.scale(&Rational::sign(n)), || format!("{name}: d_T ≠ (−1)^n δ at n={n}"))?;
            let chain = dend_coboundary(&induced, &t.theta(&f).ctx("theta")?).ctx("coboundary")?;
            ensure(chain == t.theta(&dt).ctx("theta")?.scale(&Rational::sign(n)), || {
                format!("{name}: Θ chain map at n={n}")
            })?;
            if n <= 2 {
                let p = RBOCochain::random(&mut rng, d, m, 1);
                let lhs = t.theta(&derived_bracket(t.module(), &p, &f).ctx("derived bracket")?).ctx("theta")?;
                let rhs = bracket(&op, &t.theta(&p).ctx("theta")?, &t.theta(&f).ctx("theta")?).ctx("bracket")?;
                ensure(lhs == rhs, || format!("{name}: Θ does not intertwine brackets at n={n}"))?;
            }
            differentials += 1;
        }
    }
    Ok(format!("{} candidates ({non_operators} non-operators), {differentials} differential samples", candidates.len()))
}

/// Transforms of trivial deformations: validity, infinitesimals, obstructions and extensions.
fn deformation_suite(seed: u64) -> Outcome {
    let mut rng = rng_for(seed, 7);
    let bases = corpus();
    let mut nonzero = 0;
    for k in 0..10 {
        let (name, base) = &bases[(5 * k + 1) % bases.len()];
        let order = 1 + k % 3;
        let phi = FormalIso::random(&mut rng, base.dim(), order);
        let def = apply_equivalence(&phi, &TruncDeformation::trivial(base.clone(), order)).ctx("transform")?;
        let report = check_deformation(&def).ctx("deformation check")?;
        ensure(report.passed(), || format!("{name}, order {order}: {:?}", report.violated()))?;
        let inf = infinitesimal(&def).ctx("infinitesimal")?;
        let phi1 = DendCochain::new(base.dim(), vec![phi.coefficient(1)]).ctx("cochain")?;
        let expected = dend_coboundary(&DendBicomodule::self_bicomodule(base), &phi1).ctx("coboundary")?;
        ensure(inf.is_cocycle() && inf.cochain == expected, || {
            format!("{name}, order {order}: infinitesimal ≠ δ_c(Φ_1)")
        })?;
        let ob = obstruction(&def).ctx("obstruction")?;
        ensure(ob.is_cocycle(), || format!("{name}, order {order}: obstruction is not a cocycle"))?;
        nonzero += usize::from(!ob.cochain.is_zero());
        let ext = extend(&def).ctx("extension")?.ok_or_else(|| format!("{name}, order {order}: no extension"))?;
        let report = check_deformation(&ext).ctx("deformation check")?;
        ensure(ext.order() == order + 1 && report.passed(), || format!("{name}, order {order}: invalid extension"))?;
    }
    Ok(format!("10 deformations, {nonzero} with nonzero obstruction"))
}

fn suffixes(report: &CheckReport, prefix: &str) -> Vec<(String, bool)> {
    report.checks.iter().map(|v| (v.name.strip_prefix(prefix).unwrap_or(&v.name).to_string(), v.holds)).collect()
}

fn random_dendinf(rng: &mut ChaCha8Rng, space: &GradedSpace, max_arity: usize) -> Result<DendInfCoalgebra, String> {
    let ops = (1..=max_arity).map(|k| (0..k).map(|_| space.random_map(rng, k, k as i64 - 2, 0.4)).collect()).collect();
    DendInfCoalgebra::new(space.clone(), ops).ctx("random structure")
}

/// Degree-zero reduction, split of induced structures, and `D² = 0` against the shifted identities.
fn homotopy_suite(seed: u64) -> Outcome {
    let mut rng = rng_for(seed, 8);
    let mut structures: Vec<DendCoalgebra> = corpus().into_iter().map(|(_, c)| c).collect();
    for _ in 0..5 {
        let (prec, succ) = (LinearMap::random(&mut rng, 2, 4, 0.5), LinearMap::random(&mut rng, 2, 4, 0.5));
        structures.push(DendCoalgebra::new(2, prec, succ).ctx("random structure")?);
    }
    let mut degree_zero = 0;
    for c in &structures {
        let d = DendInfCoalgebra::from_dendriform(c, 3);
        let report = check_dendinf(&d, 3).ctx("Dend_∞ check")?;
        let axioms = c.check();
        for k in 1..=3 {
            let lhs = report.holds(&format!("dendinf n=3 [{k}]"));
            ensure(lhs == axioms.holds(&format!("c{k}")), || format!("degree-zero verdict {k} differs"))?;
        }
        let ainf = check_ainf(&AInfCoalgebra::from_coalgebra(&c.total(), 3), 3).ctx("A_∞ check")?;
        ensure(ainf.passed() == c.total().check_coassociative(), || "degree-zero A_∞ verdict differs".into())?;
        degree_zero += 1;
    }

    let rbo = RelRBO::divided_power(2);
    let mut d_squared = Vec::new();
    for dim in 1..=2 {
        let chains = simplex_chains(dim, 4).ctx("simplex chains")?;
        let (c, perm) = tensor_with_dg(rbo.base(), &chains).ctx("tensor product")?;
        let t = tensor_operator(rbo.operator(), chains.space().dim(), &perm).ctx("tensor operator")?;
        let r = RBOInf::new(c.space(), t).ctx("operator")?;
        let d = induce_dendinf(&c, &r).ctx("induced structure")?;
        let total = split(&d).ctx("split")?;
        let report = check_ainf(&total, 4).ctx("A_∞ check")?;
        ensure(report.passed() && report.not_checked.is_empty(), || {
            format!("split of induced structure: {:?}", report.violated())
        })?;
        d_squared.push(d);
    }
    let mixed = GradedSpace::new(vec![(0, 1), (1, 1), (-1, 1)]).ctx("space")?;
    for _ in 0..3 {
        d_squared.push(random_dendinf(&mut rng, &mixed, 4)?);
    }
    for c in structures.iter().take(4) {
        d_squared.push(DendInfCoalgebra::from_dendriform(c, 4));
    }
    d_squared.push(DendInfCoalgebra::from_dendriform(structures.last().expect("nonempty"), 4));
    let mut failing = 0;
    for d in &d_squared {
        let shifted = shift_to_dendinf1(d).ctx("shift")?;
        let identities = check_dendinf1(&shifted, 4).ctx("shifted check")?;
        let square = check_d_squared(&shifted, 4, 4).ctx("D² check")?;
        ensure(suffixes(&identities, "dendinf1") == suffixes(&square, "D^2"), || {
            "D² verdicts differ from the shifted identities".into()
        })?;
        failing += usize::from(!square.passed());
    }
    Ok(format!(
        "{degree_zero} degree-zero structures, 2 induced splits, {} D² comparisons ({failing} failing)",
        d_squared.len()
    ))
}

struct CliRun {
    code: i32,
    stdout: String,
}

fn dendri(args: &[&str]) -> Result<CliRun, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_dendri")).args(args).output().ctx("running dendri")?;
    let stdout = String::from_utf8(out.stdout).ctx("utf-8 output")?;
    Ok(CliRun { code: out.status.code().unwrap_or(-1), stdout })
}

fn write(dir: &Path, name: &str, s: &Structure) -> Result<String, String> {
    let path = dir.join(name);
    std::fs::write(&path, io::to_json(s)).ctx("writing input")?;
    Ok(path.to_string_lossy().into_owned())
}

/// The binary reports `dim H^n = n·d^{n+1}` for the zero structure.
fn cli_zero_structure(_seed: u64) -> Outcome {
    let dir = tempfile::tempdir().ctx("temp dir")?;
    let mut seen = Vec::new();
    for d in 1..=3usize {
        let file = write(dir.path(), &format!("zero{d}.json"), &Structure::DendCoalgebra(DendCoalgebra::zero(d)))?;
        let run = dendri(&["cohomology", &file, "--max-degree", "3"])?;
        ensure(run.code == 0, || format!("exit code {} for zero({d})", run.code))?;
        let report: serde_json::Value = serde_json::from_str(&run.stdout).ctx("report")?;
        let table = report["tables"].as_object().and_then(|t| t.values().next()).ok_or("no cohomology table")?;
        let dims: Vec<u64> = table["rows"]
            .as_array()
            .ok_or("no rows")?
            .iter()
            .map(|r| r["cohomology_dim"].as_u64().unwrap_or(u64::MAX))
            .collect();
        let expected: Vec<u64> = (1..=3u32).map(|n| u64::from(n) * (d as u64).pow(n + 1)).collect();
        ensure(dims == expected, || format!("zero({d}): {dims:?}, expected {expected:?}"))?;
        seen.push(format!("{dims:?}"));
    }
    Ok(seen.join(" "))
}

fn cli_transcript(dir: &Path, seed: u64) -> Result<String, String> {
    let seed = seed.to_string();
    let coalg = write(dir, "c.json", &Structure::DendCoalgebra(corpus()[7].1.clone()))?;
    let alg = write(dir, "a.json", &Structure::DendAlgebra(dend_algebras()[0].1.clone()))?;
    let rbo = write(dir, "t.json", &Structure::Rbo(RelRBO::divided_power(3)))?;
    let mut rng = rng_for(0, 10);
    let base = corpus()[4].1.clone();
    let phi = FormalIso::random(&mut rng, base.dim(), 1);
    let def = apply_equivalence(&phi, &TruncDeformation::trivial(base, 1)).ctx("transform")?;
    let def = write(dir, "def.json", &Structure::Deformation(def))?;
    let ainf = write(dir, "ainf.json", &Structure::Coalgebra(AssocCoalgebra::divided_power(3)))?;
    let commands: Vec<Vec<&str>> = vec![
        vec!["check", &coalg],
        vec!["cohomology", &coalg, "--compare-hochschild"],
        vec!["rbo", "cohomology", &rbo],
        vec!["deform", "extend", &def],
        vec!["homotopy", "diass", &coalg],
        vec!["homotopy", "check-ainf", &ainf],
        vec!["dual", &alg, "--compare-cohomology"],
    ];
    let mut transcript = String::new();
    for args in commands {
        let mut full = args.clone();
        full.extend(["--seed", &seed]);
        let run = dendri(&full)?;
        transcript.push_str(&format!("$ {} -> {}\n{}", args[0], run.code, run.stdout));
    }
    Ok(transcript)
}

type Criterion = (&'static str, fn(u64) -> Outcome);

const CRITERIA: [Criterion; 9] = [
    ("dendriform coboundary squares to zero", coboundary_squares_to_zero),
    ("operad axioms, pre-Lie identity, product rule", operad_suite),
    ("coboundary of identity and multiplication", identity_and_multiplication),
    ("algebra/coalgebra duality", duality),
    ("S is a chain map", s_is_a_chain_map),
    ("relative Rota-Baxter operators", rota_baxter_suite),
    ("formal deformations", deformation_suite),
    ("homotopy structures", homotopy_suite),
    ("CLI cohomology of zero structures", cli_zero_structure),
];

fn run_guarded(f: fn(u64) -> Outcome, seed: u64) -> Outcome {
    std::panic::catch_unwind(|| f(seed)).unwrap_or_else(|_| Err("panicked".into()))
}

/// Reruns everything with the same seed and compares the summaries and CLI output byte for byte.
fn determinism(seed: u64, first: &[Outcome]) -> Outcome {
    let second: Vec<Outcome> = CRITERIA.iter().map(|(_, f)| run_guarded(*f, seed)).collect();
    ensure(first == second.as_slice(), || "criterion summaries differ between runs".into())?;
    let (a, b) = (tempfile::tempdir().ctx("temp dir")?, tempfile::tempdir().ctx("temp dir")?);
    let (one, two) = (cli_transcript(a.path(), seed)?, cli_transcript(b.path(), seed)?);
    ensure(one == two, || "CLI reports differ between runs".into())?;
    Ok(format!("{} criteria, {} bytes of CLI output", first.len(), one.len()))
}

fn main() -> ExitCode {
    let seed = std::env::var("ACCEPTANCE_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    println!("acceptance suite, seed {seed}");
    let mut outcomes = Vec::new();
    let mut failures = 0;
    let mut report = |index: usize, title: &str, outcome: &Outcome, started: Instant| {
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {index:>2} PASS  {title} ({detail}) [{secs:.1}s]"),
            Err(reason) => {
                failures += 1;
                println!("criterion {index:>2} FAIL  {title}: {reason} [{secs:.1}s]");
            }
        }
    };
    for (index, (title, f)) in (1..).zip(CRITERIA) {
        let started = Instant::now();
        let outcome = run_guarded(f, seed);
        report(index, title, &outcome, started);
        outcomes.push(outcome);
    }
    let started = Instant::now();
    let outcome = determinism(seed, &outcomes);
    report(10, "determinism", &outcome, started);
    if failures == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} of 10 criteria failed");
        ExitCode::FAILURE
    }
}
