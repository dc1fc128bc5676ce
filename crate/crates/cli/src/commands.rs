use std::fs;
use std::path::Path;

use dendri_core::coalg::{cohoch_coboundary, cohoch_cochain_dim, cohoch_cohomology, AssocBicomodule};
use dendri_core::cohomology::{matrix_of, CohomologyTable};
use dendri_core::deform::{check_deformation, check_equivalence, extend, infinitesimal, obstruction, TruncDeformation};
use dendri_core::dendalg::{alg_cohomology, dualize};
use dendri_core::dendcoalg::{
    dend_coboundary, dend_cochain_dim, dend_cohomology, DendBicomodule, DendCochain, LabeledCoEnd,
};
use dendri_core::homotopy::{
    check_ainf, check_d_squared, check_dendinf, check_dendinf1, check_rbo_inf, induce_dendinf, shift_to_dendinf1,
    split, AInfCoalgebra, DendInfCoalgebra,
};
use dendri_core::io::{self, Structure};
use dendri_core::linalg::rank;
use dendri_core::operad::{bracket, OperadElement};
use dendri_core::rota::{derived_bracket, RBOCochain, RelRBO};
use dendri_core::{Error, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::args::{Cli, Command, DeformCommand, HomotopyCommand, RboCommand};
use crate::report::{MapRow, RunReport};
use crate::CliError;

type CmdResult = Result<(), CliError>;

/// Reads and parses a structure file, recording its digest.
fn load(report: &mut RunReport, path: &Path) -> Result<Structure, CliError> {
    let bytes = fs::read(path).map_err(|source| CliError::Read { path: path.display().to_string(), source })?;
    report.add_input(&bytes);
    let text = String::from_utf8(bytes).map_err(|_| CliError::Input(format!("{}: not UTF-8", path.display())))?;
    io::parse(&text).map_err(|source| CliError::Load { path: path.display().to_string(), source })
}

fn wrong_kind(path: &Path, found: &Structure, expected: &str) -> CliError {
    CliError::Input(format!("{}: expected {expected}, found {}", path.display(), found.kind()))
}

fn emit(cli: &Cli, report: &mut RunReport, s: &Structure) -> CmdResult {
    match &cli.out {
        Some(path) => {
            fs::write(path, io::to_json(s))
                .map_err(|source| CliError::Write { path: path.display().to_string(), source })?;
            report.written = Some(path.display().to_string());
        }
        None => report.output = Some(io::to_document(s)),
    }
    Ok(())
}

fn rng(cli: &Cli) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cli.seed)
}

fn add_table(report: &mut RunReport, name: &str, table: CohomologyTable) {
    let mut incoming = 0;
    for row in &table.rows {
        let consistent = row.cochain_dim == row.rank + row.kernel_dim && row.kernel_dim >= incoming;
        report.push(format!("{name} rank-nullity n={}", row.degree), consistent);
        incoming = row.rank;
    }
    report.tables.insert(name.to_string(), table);
}

pub(crate) fn run(cli: &Cli, report: &mut RunReport) -> CmdResult {
    match &cli.command {
        Command::Check { file, max_arity } => check(report, file, *max_arity),
        Command::Cohomology { file, max_degree, module, compare_hochschild } => {
            cohomology(cli, report, file, *max_degree, module.as_deref(), *compare_hochschild)
        }
        Command::Rbo { action } => rbo(cli, report, action),
        Command::Deform { action } => deform(cli, report, action),
        Command::Homotopy { action } => homotopy(cli, report, action),
        Command::Dual { file, compare_cohomology, max_degree } => {
            dual(cli, report, file, *compare_cohomology, *max_degree)
        }
    }
}

fn check(report: &mut RunReport, file: &Path, max_arity: Option<usize>) -> CmdResult {
    match load(report, file)? {
        Structure::Coalgebra(c) => report.push("coassoc", c.check_coassociative()),
        Structure::Bicomodule(b) => report.absorb(b.check()),
        Structure::DendCoalgebra(c) => report.absorb(c.check()),
        Structure::DendBicomodule(b) => report.absorb(b.check()),
        Structure::DendAlgebra(a) => report.absorb(a.check()),
        Structure::Rbo(r) => rbo_verdicts(report, &r),
        Structure::Deformation(def) => report.absorb(check_deformation(&def)?),
        Structure::FormalIso(f) => {
            report.note(format!("formal isomorphism of order {} on dimension {}", f.order(), f.dim()))
        }
        Structure::GradedSpace(s) => report.note(format!("graded space of dimension {}", s.dim())),
        Structure::AInf(c) => report.absorb(check_ainf(&c, max_arity.unwrap_or(c.max_arity()))?),
        Structure::DendInf(d) => report.absorb(check_dendinf(&d, max_arity.unwrap_or(d.max_arity()))?),
        Structure::AInfRbo(c, r) => {
            report.absorb(check_ainf(&c, max_arity.unwrap_or(c.max_arity()))?);
            report.absorb(check_rbo_inf(&c, &r)?);
        }
    }
    Ok(())
}

fn rbo_verdicts(report: &mut RunReport, r: &RelRBO) {
    report.absorb(r.module().check());
    report.push("rbo", r.check_rbo());
}

fn cohomology(
    cli: &Cli,
    report: &mut RunReport,
    file: &Path,
    max_degree: usize,
    module: Option<&Path>,
    compare: bool,
) -> CmdResult {
    match load(report, file)? {
        Structure::DendCoalgebra(c) => {
            let module = match module {
                None => DendBicomodule::self_bicomodule(&c),
                Some(path) => match load(report, path)? {
                    Structure::DendBicomodule(m) if m.base() == &c => m,
                    Structure::DendBicomodule(_) => {
                        return Err(CliError::Input(format!(
                            "{}: bicomodule over a different coalgebra",
                            path.display()
                        )))
                    }
                    other => return Err(wrong_kind(path, &other, "dendriform_bicomodule")),
                },
            };
            report.absorb(module.check());
            if !report.passed() {
                return Ok(());
            }
            add_table(report, "dendriform", dend_cohomology(&module, max_degree)?);
            if compare {
                compare_hochschild(cli, report, &module, max_degree)?;
            }
        }
        Structure::Coalgebra(c) => {
            let module = match module {
                None => AssocBicomodule::self_bicomodule(&c),
                Some(path) => match load(report, path)? {
                    Structure::Bicomodule(m) if m.base() == &c => m,
                    Structure::Bicomodule(_) => {
                        return Err(CliError::Input(format!(
                            "{}: bicomodule over a different coalgebra",
                            path.display()
                        )))
                    }
                    other => return Err(wrong_kind(path, &other, "bicomodule")),
                },
            };
            report.absorb(module.check());
            if report.passed() {
                add_table(report, "cohochschild", cohoch_cohomology(&module, max_degree)?);
            }
        }
        Structure::DendAlgebra(a) => {
            report.absorb(a.check());
            if report.passed() {
                add_table(report, "dendriform_algebra", alg_cohomology(&a, max_degree)?);
            }
        }
        Structure::Rbo(r) => rbo_cohomology(cli, report, &r, max_degree)?,
        other => return Err(wrong_kind(file, &other, "coalgebra, dendriform_coalgebra, dendriform_algebra or rbo")),
    }
    Ok(())
}

/// CoHochschild table of the total structure, ranks of the summing map and its chain-map verdicts.
fn compare_hochschild(cli: &Cli, report: &mut RunReport, module: &DendBicomodule, max_degree: usize) -> CmdResult {
    let total = module.total();
    let (d, m) = (module.base().dim(), module.dim());
    add_table(report, "cohochschild", cohoch_cohomology(&total, max_degree)?);
    let mut rows = Vec::new();
    let mut rng = rng(cli);
    for n in 1..=max_degree {
        let (source_dim, target_dim) = (dend_cochain_dim(module, n), cohoch_cochain_dim(&total, n));
        let matrix = matrix_of(source_dim, target_dim, |j| {
            Ok(DendCochain::from_vector(m, d, n, &[(j, Rational::one())])?.s_map(d).map().to_vector())
        })?;
        rows.push(MapRow { degree: n, source_dim, target_dim, rank: rank(&matrix) });
        let s = DendCochain::random(&mut rng, m, d, n);
        let lhs = cohoch_coboundary(&total, &s.s_map(d))?;
        let rhs = dend_coboundary(module, &s)?.s_map(d);
        report.push(format!("S chain map n={n}"), lhs == rhs);
    }
    report.maps.insert("S".into(), rows);
    Ok(())
}

fn rbo(cli: &Cli, report: &mut RunReport, action: &RboCommand) -> CmdResult {
    let load_rbo = |report: &mut RunReport, file: &Path| match load(report, file)? {
        Structure::Rbo(r) => Ok(r),
        other => Err(wrong_kind(file, &other, "rbo")),
    };
    match action {
        RboCommand::Check { file } => {
            let r = load_rbo(report, file)?;
            rbo_verdicts(report, &r);
        }
        RboCommand::Induce { file } => {
            let r = load_rbo(report, file)?;
            rbo_verdicts(report, &r);
            if report.passed() {
                emit(cli, report, &Structure::DendCoalgebra(r.induced_dendriform()?))?;
            }
        }
        RboCommand::Cohomology { file, max_degree } => {
            let r = load_rbo(report, file)?;
            rbo_cohomology(cli, report, &r, *max_degree)?;
        }
    }
    Ok(())
}

/// Operator complex dimensions and the verdicts comparing it with the induced dendriform complex.
fn rbo_cohomology(cli: &Cli, report: &mut RunReport, r: &RelRBO, max_degree: usize) -> CmdResult {
    rbo_verdicts(report, r);
    if !report.passed() {
        return Ok(());
    }
    add_table(report, "rbo", r.cohomology(max_degree)?);
    let (d, m) = (r.base().dim(), r.module().dim());
    let op = RBOCochain::new(m, 1, r.operator().clone())?;
    let induced = r.induced_dendriform()?;
    report.push("theta(T) = multiplication", r.theta(&op)? == induced.multiplication()?.into_inner());
    let dend_module = DendBicomodule::self_bicomodule(&induced);
    let labeled = LabeledCoEnd::new(m);
    let mut rng = rng(cli);
    for n in 1..max_degree {
        let f = RBOCochain::random(&mut rng, d, m, n);
        let lhs = dend_coboundary(&dend_module, &r.theta(&f)?)?;
        let rhs = r.theta(&r.coboundary(&f)?)?.scale(&Rational::sign(n));
        report.push(format!("theta chain map n={n}"), lhs == rhs);
        let p = RBOCochain::random(&mut rng, d, m, 1);
        let lhs = r.theta(&derived_bracket(r.module(), &p, &f)?)?;
        let rhs = bracket(&labeled, &r.theta(&p)?, &r.theta(&f)?)?;
        report.push(format!("theta bracket n={n}"), lhs == rhs);
    }
    Ok(())
}

fn deform(cli: &Cli, report: &mut RunReport, action: &DeformCommand) -> CmdResult {
    let load_def = |report: &mut RunReport, file: &Path| match load(report, file)? {
        Structure::Deformation(d) => Ok(d),
        other => Err(wrong_kind(file, &other, "deformation")),
    };
    // every subcommand requires a valid deformation up to its stored order
    let valid = |report: &mut RunReport, def: &TruncDeformation| -> Result<bool, CliError> {
        report.absorb(check_deformation(def)?);
        Ok(report.passed())
    };
    match action {
        DeformCommand::Check { file, iso, against } => {
            let def = load_def(report, file)?;
            valid(report, &def)?;
            if let (Some(iso_path), Some(other_path)) = (iso, against) {
                let phi = match load(report, iso_path)? {
                    Structure::FormalIso(f) => f,
                    other => return Err(wrong_kind(iso_path, &other, "formal_iso")),
                };
                let other = load_def(report, other_path)?;
                let mut eq = check_equivalence(&phi, &def, &other)?;
                for v in &mut eq.checks {
                    v.name = format!("equivalence {}", v.name);
                }
                report.absorb(eq);
            }
        }
        DeformCommand::Infinitesimal { file } => {
            let def = load_def(report, file)?;
            if valid(report, &def)? {
                let inf = infinitesimal(&def)?;
                report.push("infinitesimal 2-cocycle", inf.is_cocycle());
                report.note(format!("coboundary residual entries: {}", inf.coboundary.to_vector().len()));
                let base = def.base().clone();
                emit(cli, report, &Structure::Deformation(TruncDeformation::new(base, vec![inf.cochain])?))?;
            }
        }
        DeformCommand::Obstruct { file } => {
            let def = load_def(report, file)?;
            if valid(report, &def)? {
                let ob = obstruction(&def)?;
                report.push("obstruction cocycle", ob.is_cocycle());
                let class_zero = extend(&def)?.is_some();
                report.note(format!("obstruction class {}", if class_zero { "vanishes" } else { "is nonzero" }));
            }
        }
        DeformCommand::Extend { file } => {
            let def = load_def(report, file)?;
            if valid(report, &def)? {
                match extend(&def)? {
                    Some(ext) => {
                        report.absorb(check_deformation(&ext)?);
                        emit(cli, report, &Structure::Deformation(ext))?;
                    }
                    None => {
                        report.push(format!("order {} obstruction class vanishes", def.order() + 1), false);
                        report.note("the obstruction class is nonzero, no extension exists");
                    }
                }
            }
        }
    }
    Ok(())
}

fn load_ainf(report: &mut RunReport, file: &Path, max_arity: Option<usize>) -> Result<AInfCoalgebra, CliError> {
    match load(report, file)? {
        Structure::AInf(c) | Structure::AInfRbo(c, _) => Ok(c),
        Structure::Coalgebra(c) => Ok(AInfCoalgebra::from_coalgebra(&c, max_arity.unwrap_or(3))),
        other => Err(wrong_kind(file, &other, "ainf_coalgebra or coalgebra")),
    }
}

fn load_dendinf(report: &mut RunReport, file: &Path, max_arity: Option<usize>) -> Result<DendInfCoalgebra, CliError> {
    match load(report, file)? {
        Structure::DendInf(d) => Ok(d),
        Structure::DendCoalgebra(c) => Ok(DendInfCoalgebra::from_dendriform(&c, max_arity.unwrap_or(3))),
        other => Err(wrong_kind(file, &other, "dendinf_coalgebra or dendriform_coalgebra")),
    }
}

fn homotopy(cli: &Cli, report: &mut RunReport, action: &HomotopyCommand) -> CmdResult {
    match action {
        HomotopyCommand::CheckAinf { file, max_arity } => {
            let c = load_ainf(report, file, *max_arity)?;
            report.absorb(check_ainf(&c, max_arity.unwrap_or(c.max_arity()))?);
        }
        HomotopyCommand::CheckDendinf { file, max_arity } => {
            let d = load_dendinf(report, file, *max_arity)?;
            report.absorb(check_dendinf(&d, max_arity.unwrap_or(d.max_arity()))?);
        }
        HomotopyCommand::Split { file } => {
            let d = load_dendinf(report, file, None)?;
            report.absorb(check_dendinf(&d, d.max_arity())?);
            if report.passed() {
                let c = split(&d)?;
                report.absorb(check_ainf(&c, c.max_arity())?);
                emit(cli, report, &Structure::AInf(c))?;
            }
        }
        HomotopyCommand::Induce { file } => {
            let (c, r) = match load(report, file)? {
                Structure::AInfRbo(c, r) => (c, r),
                other => return Err(wrong_kind(file, &other, "ainf_rbo")),
            };
            report.absorb(check_ainf(&c, c.max_arity())?);
            report.absorb(check_rbo_inf(&c, &r)?);
            if report.passed() {
                let d = induce_dendinf(&c, &r)?;
                report.absorb(check_dendinf(&d, d.max_arity())?);
                emit(cli, report, &Structure::DendInf(d))?;
            }
        }
        HomotopyCommand::Diass { file, trunc, max_arity } => {
            let d = load_dendinf(report, file, *max_arity)?;
            let n_max = max_arity.unwrap_or(d.max_arity());
            let shifted = shift_to_dendinf1(&d)?;
            let squared = check_d_squared(&shifted, *trunc, n_max)?;
            let identities = check_dendinf1(&shifted, n_max.min(*trunc))?;
            let agree = squared.checks.iter().zip(&identities.checks).all(|(a, b)| a.holds == b.holds);
            report.absorb(squared);
            report.push("D^2 agrees with shifted identities", agree);
        }
    }
    Ok(())
}

fn dual(cli: &Cli, report: &mut RunReport, file: &Path, compare: bool, max_degree: usize) -> CmdResult {
    let a = match load(report, file)? {
        Structure::DendAlgebra(a) => a,
        other => return Err(wrong_kind(file, &other, "dendriform_algebra")),
    };
    report.absorb(a.check());
    if !report.passed() {
        return Ok(());
    }
    let c = dualize(&a);
    if compare {
        let alg = alg_cohomology(&a, max_degree)?;
        let coalg = dend_cohomology(&DendBicomodule::self_bicomodule(&c), max_degree)?;
        for (n, (x, y)) in (1..).zip(alg.dims().iter().zip(coalg.dims())) {
            report.push(format!("duality n={n}"), *x == y);
        }
        add_table(report, "algebra", alg);
        add_table(report, "dual", coalg);
    }
    emit(cli, report, &Structure::DendCoalgebra(c))
}

/// Core errors that express a failed identity or an exceeded truncation rather than bad input.
pub(crate) fn is_violation(e: &Error) -> bool {
    matches!(e, Error::Identity(_) | Error::Truncation(_) | Error::NotMultiplication)
}
