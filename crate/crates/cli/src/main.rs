//! `nichols`: analyses of braided vector spaces over `Q(q)` from the command line.

mod error;
mod family;
mod report;
mod specfile;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use error::{CliError, CliResult};
use family::{Params, FAMILIES};
use nichols_core::braidcore::{check_braid_equation, hecke_check, is_diagonal, Braiding, BraidVerdict};
use nichols_core::families::quantum_determinant_terms;
use nichols_core::linalg::{rank, FieldMatrix};
use nichols_core::nichols::{
    analyze, image_a2, kernel_a2, koszul_identity, quadratic_dims_for, relation_annihilator,
    with_backend, Backend, DiagonalFinding, KoszulReport, Ranker,
};
use nichols_core::tableaux::{enumerate_sstab, DominantWeight};
use report::{
    tensor_vectors, AnalysisReport, BraidCheck, DetSection, DetTerm, ExactConfirmation, FamilyEntry, FamilySection,
    InputIdentity, KernelSection, QuadraticSection, TableauxSection,
};
use specfile::BraidingSpecFile;

#[derive(Parser)]
#[command(name = "nichols", version, about = "Nichols algebras and quadratic algebras of braidings over Q(q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify invertibility and the braid equation; exits 1 when either fails.
    Check(InputArgs),
    /// Minimal polynomial, Hecke type and diagonal type.
    Hecke(InputArgs),
    /// Graded dimensions of the Nichols algebra and its quadratic cover.
    Dims(DimsArgs),
    /// A basis of ker(A_2), the quadratic relations.
    Kernel(InputArgs),
    /// Graded dimensions of the quadratic algebra and its quadratic dual.
    Quadratic(InputArgs),
    /// Numerical Koszul identity for the quadratic algebra; exits 1 when it fails.
    Koszul(InputArgs),
    /// Build a named family, optionally writing it as a spec file.
    Family(FamilyArgs),
    /// Count semistandard tableaux of a shape with entries in 1..n.
    Tableaux(TableauxArgs),
    /// Terms of the quantum determinant of C_q[GL_N].
    Det(DetArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Specialized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    /// Highest tensor degree to compute (default dim V + 2).
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    /// Seed for the stream of specialization points.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

impl Common {
    fn backend(&self) -> Backend {
        match self.mode {
            Mode::Exact => Backend::Exact,
            Mode::Specialized => Backend::Specialized { seed: self.seed },
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// Built-in family name (see `family --list`).
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    /// Family parameter as key=value; repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    /// Braiding spec file (JSON).
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct DimsArgs {
    #[command(flatten)]
    input: InputArgs,
    /// In specialized mode, also recompute exactly and record agreement.
    #[arg(long)]
    confirm: bool,
}

#[derive(Args)]
struct FamilyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Write the braiding as a spec file.
    #[arg(long)]
    emit: Option<PathBuf>,
    /// List the available families.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct TableauxArgs {
    /// Row lengths, e.g. "2,1".
    #[arg(long)]
    shape: String,
    /// n=N, the size of the entry alphabet.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    /// Include every tableau in the report.
    #[arg(long)]
    list: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct DetArgs {
    /// N=size.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    #[command(flatten)]
    common: Common,
}

/// A braiding candidate as read from the command line, not yet validated.
struct Loaded {
    dim: usize,
    matrix: FieldMatrix,
    identity: InputIdentity,
    label: String,
}

impl Loaded {
    fn braiding(&self) -> CliResult<Braiding> {
        Ok(Braiding::new(self.dim, self.matrix.clone())?)
    }
}

fn load(args: &InputArgs) -> CliResult<Loaded> {
    match (&args.family, &args.input) {
        (Some(name), None) => {
            let params = Params::parse(&args.params)?;
            let b = family::build(name, &params)?;
            let label = if params.map().is_empty() {
                name.clone()
            } else {
                let p: Vec<String> = params.map().iter().map(|(k, v)| format!("{k}={v}")).collect();
                format!("{name}({})", p.join(","))
            };
            Ok(Loaded {
                dim: b.dim(),
                matrix: b.into_matrix(),
                identity: InputIdentity::Family { name: name.clone(), params: params.map().clone() },
                label,
            })
        }
        (None, Some(path)) => {
            if !args.params.is_empty() {
                return Err(CliError::Input("--param applies to --family only".into()));
            }
            let bytes = std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let text = String::from_utf8(bytes.clone())
                .map_err(|_| CliError::Input(format!("{}: not UTF-8", path.display())))?;
            let spec = BraidingSpecFile::from_json(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let matrix = spec.matrix().map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let file = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
            let label = spec.name.clone().unwrap_or_else(|| {
                path.file_stem().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default()
            });
            Ok(Loaded {
                dim: spec.dim,
                matrix,
                identity: InputIdentity::File { file, sha256: hex::encode(Sha256::digest(text.as_bytes())) },
                label,
            })
        }
        (None, None) => Err(CliError::Input("give --family NAME or --input FILE".into())),
        (Some(_), Some(_)) => Err(CliError::Input("--family and --input are exclusive".into())),
    }
}

fn emit(report: &AnalysisReport, common: &Common) -> CliResult<()> {
    let body = match common.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match &common.output {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn max_degree(common: &Common, dim: usize) -> usize {
    common.max_degree.unwrap_or(dim + 2)
}

fn with_input(command: &str, args: &InputArgs) -> CliResult<(Loaded, AnalysisReport)> {
    let loaded = load(args)?;
    let mut report = AnalysisReport::new(command, loaded.identity.clone());
    report.dim = Some(loaded.dim);
    Ok((loaded, report))
}

fn note_backend(report: &mut AnalysisReport, backend: Backend, ranker: &Ranker) {
    report.backend = Some(backend);
    report.screening = Some(ranker.point().is_some());
    report.specialization_point = ranker.point().map(|x| x.to_string());
}

fn cmd_check(args: &InputArgs) -> CliResult<(AnalysisReport, Option<String>)> {
    let (loaded, mut report) = with_input("check", args)?;
    let start = Instant::now();
    let d2 = loaded.dim * loaded.dim;
    if loaded.matrix.rows() != d2 || loaded.matrix.cols() != d2 {
        return Err(CliError::Input(format!("matrix is {}x{}, expected {d2}x{d2}", loaded.matrix.rows(), loaded.matrix.cols())));
    }
    let invertible = rank(&loaded.matrix) == d2;
    let verdict = check_braid_equation(loaded.dim, &loaded.matrix)?;
    report.timings_ms.insert("check".into(), ms(start));
    let violation = match &verdict {
        BraidVerdict::Holds => None,
        BraidVerdict::Fails(v) => Some(v.to_string()),
    };
    let ok = invertible && verdict.holds();
    report.braid_equation = Some(BraidCheck { verdict: ok, invertible, braid_equation: verdict.holds(), violation });
    let failure = (!ok).then(|| {
        if invertible {
            "braid equation fails".to_string()
        } else {
            "matrix is not invertible".to_string()
        }
    });
    Ok((report, failure))
}

fn cmd_hecke(args: &InputArgs) -> CliResult<AnalysisReport> {
    let (loaded, mut report) = with_input("hecke", args)?;
    let b = loaded.braiding()?;
    let start = Instant::now();
    report.hecke = Some(hecke_check(&b)?);
    report.timings_ms.insert("hecke".into(), ms(start));
    let start = Instant::now();
    let lambda = is_diagonal(&b);
    report.diagonal = Some(DiagonalFinding { is_diagonal: lambda.is_some(), lambda });
    report.timings_ms.insert("diagonal".into(), ms(start));
    Ok(report)
}

fn cmd_dims(args: &DimsArgs) -> CliResult<AnalysisReport> {
    let (loaded, mut report) = with_input("dims", &args.input)?;
    let b = loaded.braiding()?;
    let common = &args.input.common;
    let top = max_degree(common, loaded.dim);
    let start = Instant::now();
    let graded = analyze(&loaded.label, &b, top, common.backend())?;
    report.timings_ms.insert("analyze".into(), ms(start));
    report.backend = Some(graded.backend);
    report.screening = Some(graded.screening);
    report.specialization_point = graded.specialization_point.clone();
    if args.confirm && graded.screening {
        let start = Instant::now();
        let exact = analyze(&loaded.label, &b, top, Backend::Exact)?;
        report.timings_ms.insert("exact_confirmation".into(), ms(start));
        let agrees = exact.nichols_dims == graded.nichols_dims
            && exact.quadratic_dims == graded.quadratic_dims
            && exact.dual_dims == graded.dual_dims;
        report.exact_confirmation = Some(ExactConfirmation {
            nichols_dims: exact.nichols_dims,
            quadratic_dims: exact.quadratic_dims,
            dual_dims: exact.dual_dims,
            agrees,
        });
    }
    report.graded = Some(graded);
    Ok(report)
}

fn cmd_kernel(args: &InputArgs) -> CliResult<AnalysisReport> {
    let (loaded, mut report) = with_input("kernel", args)?;
    let b = loaded.braiding()?;
    let start = Instant::now();
    let ker = kernel_a2(&b);
    let im = image_a2(&b);
    report.timings_ms.insert("kernel_a2".into(), ms(start));
    report.kernel_a2 = Some(KernelSection { dim: ker.dim(), image_dim: im.dim(), basis: tensor_vectors(b.dim(), &ker) });
    Ok(report)
}

fn quadratic_pair(b: &Braiding, top: usize, backend: Backend) -> CliResult<(usize, Vec<usize>, Vec<usize>, Ranker)> {
    let rel = kernel_a2(b);
    let dual = relation_annihilator(&rel);
    let ((a, c), ranker) = with_backend(backend, |r| {
        Ok((quadratic_dims_for(b.dim(), &rel, top, r)?, quadratic_dims_for(b.dim(), &dual, top, r)?))
    })?;
    Ok((rel.dim(), a, c, ranker))
}

fn cmd_quadratic(args: &InputArgs) -> CliResult<AnalysisReport> {
    let (loaded, mut report) = with_input("quadratic", args)?;
    let b = loaded.braiding()?;
    let backend = args.common.backend();
    let start = Instant::now();
    let (relations_dim, quadratic_dims, dual_dims, ranker) =
        quadratic_pair(&b, max_degree(&args.common, b.dim()), backend)?;
    report.timings_ms.insert("quadratic".into(), ms(start));
    note_backend(&mut report, backend, &ranker);
    report.quadratic = Some(QuadraticSection { relations_dim, quadratic_dims, dual_dims });
    Ok(report)
}

fn cmd_koszul(args: &InputArgs) -> CliResult<(AnalysisReport, Option<String>)> {
    let (loaded, mut report) = with_input("koszul", args)?;
    let b = loaded.braiding()?;
    let backend = args.common.backend();
    let top = max_degree(&args.common, b.dim()).max(2);
    let start = Instant::now();
    let (_, a, c, ranker) = quadratic_pair(&b, top, backend)?;
    report.timings_ms.insert("koszul".into(), ms(start));
    note_backend(&mut report, backend, &ranker);
    let degrees = koszul_identity(&a, &c);
    let passes = degrees.iter().all(|d| d.passes);
    let failure = degrees
        .iter()
        .find(|d| !d.passes)
        .map(|d| format!("koszul identity fails in degree {} (value {})", d.degree, d.value));
    report.koszul = Some(KoszulReport { quadratic_dims: a, dual_dims: c, degrees, passes });
    Ok((report, failure))
}

fn cmd_family(args: &FamilyArgs) -> CliResult<AnalysisReport> {
    if args.list {
        let mut report = AnalysisReport::new("family", InputIdentity::None);
        report.families = Some(
            FAMILIES
                .iter()
                .map(|(n, p, s)| FamilyEntry { name: n.to_string(), params: p.to_string(), summary: s.to_string() })
                .collect(),
        );
        return Ok(report);
    }
    if args.input.input.is_some() {
        return Err(CliError::Input("family takes --family, not --input".into()));
    }
    let (loaded, mut report) = with_input("family", &args.input)?;
    let b = loaded.braiding()?;
    let emitted = match &args.emit {
        Some(path) => {
            let spec = BraidingSpecFile::from_braiding(&b, Some(loaded.label.clone()), None);
            std::fs::write(path, spec.to_json()).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            Some(path.display().to_string())
        }
        None => None,
    };
    report.family = Some(FamilySection { braiding: loaded.label, dim: b.dim(), nonzeros: b.matrix().nnz(), emitted });
    Ok(report)
}

fn single_count(raw: &[String], key: &str) -> CliResult<usize> {
    let params = Params::parse(raw)?;
    if let Some(k) = params.map().keys().find(|k| k.as_str() != key) {
        return Err(CliError::Input(format!("unknown parameter '{k}' (expected {key}=...)")));
    }
    let v = params.map().get(key).ok_or_else(|| CliError::Input(format!("missing --param {key}=...")))?;
    v.parse().map_err(|_| CliError::Input(format!("{key}={v} is not a nonnegative integer")))
}

fn cmd_tableaux(args: &TableauxArgs) -> CliResult<AnalysisReport> {
    let n = single_count(&args.params, "n")?;
    let parts = if args.shape.trim().is_empty() {
        Vec::new()
    } else {
        args.shape
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::Input(format!("shape '{}' is not a list of row lengths", args.shape)))?
    };
    let shape = DominantWeight::new(parts)?;
    let mut report = AnalysisReport::new("tableaux", InputIdentity::None);
    let start = Instant::now();
    let all = enumerate_sstab(&shape, n);
    report.timings_ms.insert("enumerate".into(), ms(start));
    report.tableaux = Some(TableauxSection {
        shape: shape.parts().to_vec(),
        n,
        count: all.len(),
        tableaux: args.list.then(|| all.iter().map(|t| t.to_string()).collect()),
    });
    Ok(report)
}

fn cmd_det(args: &DetArgs) -> CliResult<AnalysisReport> {
    let n = single_count(&args.params, "N")?;
    if n == 0 {
        return Err(CliError::Input("N must be at least 1".into()));
    }
    let mut report = AnalysisReport::new("det", InputIdentity::None);
    let start = Instant::now();
    let terms = quantum_determinant_terms(n)
        .into_iter()
        .map(|(p, coeff)| DetTerm { permutation: p.to_string(), coeff })
        .collect();
    report.timings_ms.insert("det".into(), ms(start));
    report.det = Some(DetSection { n, terms });
    Ok(report)
}

/// Report plus an optional failed assertion, ready to be written.
type Outcome = (AnalysisReport, Option<String>);

fn run(cli: &Cli) -> CliResult<(Outcome, &Common)> {
    let ok = |r: AnalysisReport| (r, None);
    Ok(match &cli.command {
        Command::Check(a) => (cmd_check(a)?, &a.common),
        Command::Hecke(a) => (ok(cmd_hecke(a)?), &a.common),
        Command::Dims(a) => (ok(cmd_dims(a)?), &a.input.common),
        Command::Kernel(a) => (ok(cmd_kernel(a)?), &a.common),
        Command::Quadratic(a) => (ok(cmd_quadratic(a)?), &a.common),
        Command::Koszul(a) => (cmd_koszul(a)?, &a.common),
        Command::Family(a) => (ok(cmd_family(a)?), &a.input.common),
        Command::Tableaux(a) => (ok(cmd_tableaux(a)?), &a.common),
        Command::Det(a) => (ok(cmd_det(a)?), &a.common),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|((report, failure), common)| {
        emit(&report, common)?;
        match failure {
            Some(msg) => Err(CliError::Verdict(msg)),
            None => Ok(()),
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("nichols: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
