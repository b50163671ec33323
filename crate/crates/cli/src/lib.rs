//! Command-line front end for the fusion-ring workbench.

pub mod report;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use frw_core::classify::{self, ClassifyError, DimensionProfile, Verdict};
use frw_core::enumeration::{self, ConstraintSet, EnumError, Predicate};
use frw_core::fpdim::{self, DimVector, FpdimError};
use frw_core::modular::{self, ModularError};
use frw_core::ring::{validate_ring, FusionRing};
use frw_core::structure::{self, StructureError};
use frw_core::{fmt_real, parse_ring, TypeVector};

pub use report::{Report, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "frw", version, about = "Fusion-ring workbench")]
pub struct Cli {
    /// Numeric tolerance (FP dimensions: 1e-14..=1e-6, default 1e-10; S-matrix checks default 1e-9)
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Search budget for enumeration and subring searches
    #[arg(long, global = true, env = "FRW_BUDGET")]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a ring and check the based-ring axioms
    Validate { file: PathBuf },
    /// Full structural report
    Analyze { file: PathBuf },
    /// Frobenius-Perron dimensions and integrality
    Fpdim { file: PathBuf },
    /// Dimension type of a ring
    Type { file: PathBuf },
    /// Universal grading
    Grading { file: PathBuf },
    /// Enumerate dimension types of a given global dimension
    Enumerate(EnumerateArgs),
    /// Nonnegative solutions of c1*a1 + ... + cm*am = target
    Diophantine {
        target: u64,
        /// Comma-separated positive coefficients
        coefficients: String,
    },
    /// Classification verdict for a dimension or a ring
    Classify(ClassifyArgs),
    /// S-matrix consistency checks
    Smatrix {
        file: PathBuf,
        #[arg(long)]
        x0: Option<usize>,
    },
    /// Case analysis for a 2-dimensional basis element
    NicholsRichmond {
        file: PathBuf,
        /// Basis label or index
        #[arg(long)]
        object: String,
    },
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    pub dimension: u64,
    #[arg(long, default_value = "base")]
    pub preset: String,
    /// Golden file of expected types; succeeds iff every line is enumerated
    #[arg(long)]
    pub golden: Option<PathBuf>,
    /// Pruning predicate applied after enumeration (repeatable)
    #[arg(long = "filter")]
    pub filters: Vec<String>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(required_unless_present = "ring", conflicts_with = "ring")]
    pub dimension: Option<u64>,
    #[arg(long)]
    pub ring: Option<PathBuf>,
    #[arg(long)]
    pub integral: bool,
    #[arg(long)]
    pub weakly_integral: bool,
    #[arg(long)]
    pub weakly_group_theoretical: bool,
}

/// Exit code and rendered standard output / standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_CHECK_FAILED,
            message: message.into(),
        }
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        let code = match e {
            EnumError::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<FpdimError> for Failure {
    fn from(e: FpdimError) -> Self {
        let code = match e {
            FpdimError::InvalidTolerance(_) => EXIT_USAGE,
            _ => EXIT_CHECK_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<StructureError> for Failure {
    fn from(e: StructureError) -> Self {
        let code = match e {
            StructureError::SearchBudgetExceeded { .. } => EXIT_BUDGET,
            StructureError::PreconditionUnmet(_) => EXIT_USAGE,
            _ => EXIT_CHECK_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::OutOfRange(_) => Failure::usage(e.to_string()),
            ClassifyError::Fpdim(e) => e.into(),
            ClassifyError::Structure(e) => e.into(),
        }
    }
}

impl From<ModularError> for Failure {
    fn from(e: ModularError) -> Self {
        let code = match e {
            ModularError::NonIntegralEntry { .. } => EXIT_CHECK_FAILED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> RunResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                RunResult {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                RunResult {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let format = cli.format;
    match execute(&cli) {
        Ok((code, report)) => RunResult {
            code,
            stdout: render(&report, format),
            stderr: String::new(),
        },
        Err(f) => RunResult {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

fn execute(cli: &Cli) -> Result<(i32, Report), Failure> {
    let ring_tol = cli.tolerance.unwrap_or(fpdim::DEFAULT_TOLERANCE);
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Analyze { file } => analyze(file, ring_tol),
        Command::Fpdim { file } => {
            let r = load_valid_ring(file)?;
            let dims = fpdim::fp_dim_vector(&r, ring_tol)?;
            let mut rep = header("fpdim", file, &r);
            rep.push("tolerance", ring_tol);
            append_dimensions(&mut rep, &r, &dims)?;
            Ok((EXIT_OK, rep))
        }
        Command::Type { file } => {
            let r = load_valid_ring(file)?;
            let dims = fpdim::fp_dim_vector(&r, ring_tol)?;
            let mut rep = header("type", file, &r);
            rep.push("fpdim", dims.global());
            rep.push("type", structure::ring_type(&dims).to_string());
            Ok((EXIT_OK, rep))
        }
        Command::Grading { file } => {
            let r = load_valid_ring(file)?;
            let dims = fpdim::fp_dim_vector(&r, ring_tol)?;
            let mut rep = header("grading", file, &r);
            match structure::universal_grading(&r, &dims) {
                Ok(g) => {
                    rep.push("grading", grading_section(&r, &dims, &g));
                    Ok((EXIT_OK, rep))
                }
                Err(e @ StructureError::GradingInconsistent { .. }) => {
                    rep.push("error", e.to_string());
                    Ok((EXIT_CHECK_FAILED, rep))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Enumerate(args) => {
            enumerate(args, cli.budget.unwrap_or(enumeration::DEFAULT_BUDGET))
        }
        Command::Diophantine {
            target,
            coefficients,
        } => diophantine(
            *target,
            coefficients,
            cli.budget.unwrap_or(enumeration::DEFAULT_BUDGET),
        ),
        Command::Classify(args) => classify_cmd(args, ring_tol),
        Command::Smatrix { file, x0 } => smatrix(
            file,
            *x0,
            cli.tolerance.unwrap_or(modular::DEFAULT_TOLERANCE),
        ),
        Command::NicholsRichmond { file, object } => nichols_richmond(
            file,
            object,
            ring_tol,
            cli.budget.unwrap_or(structure::DEFAULT_SEARCH_BUDGET),
        ),
    }
}

fn read(file: &Path) -> Result<String, Failure> {
    fs::read_to_string(file).map_err(|e| Failure::usage(format!("{}: {e}", file.display())))
}

fn load_ring(file: &Path) -> Result<FusionRing, Failure> {
    parse_ring(&read(file)?).map_err(|e| Failure::usage(format!("{}: {e}", file.display())))
}

/// Loads a ring and rejects it when any axiom fails.
fn load_valid_ring(file: &Path) -> Result<FusionRing, Failure> {
    let r = load_ring(file)?;
    let violations = validate_ring(&r);
    if let Some(v) = violations.first() {
        return Err(Failure::check(format!(
            "{}: ring data violates the axioms ({} violations, first: {v})",
            file.display(),
            violations.len()
        )));
    }
    Ok(r)
}

fn header(command: &str, file: &Path, r: &FusionRing) -> Report {
    let mut rep = Report::new();
    rep.push("command", command)
        .push("file", file.display().to_string())
        .push("rank", r.rank())
        .push("labels", r.labels().join(" "));
    rep
}

fn validate(file: &Path) -> Result<(i32, Report), Failure> {
    let r = load_ring(file)?;
    let violations = validate_ring(&r);
    let mut rep = header("validate", file, &r);
    rep.push("violation_count", violations.len())
        .push(
            "violations",
            violations
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
        )
        .push("valid", violations.is_empty());
    let code = if violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    Ok((code, rep))
}

fn names(r: &FusionRing, members: &[usize]) -> String {
    members
        .iter()
        .map(|&i| r.label(i))
        .collect::<Vec<_>>()
        .join(",")
}

fn append_dimensions(rep: &mut Report, r: &FusionRing, dims: &DimVector) -> Result<(), Failure> {
    let mut values = Report::new();
    for (i, v) in dims.values.iter().enumerate() {
        values.push(r.label(i), *v);
    }
    let mut certified = Report::new();
    for (i, c) in dims.certified_integers.iter().enumerate() {
        match c {
            Some(d) => certified.push(r.label(i), *d),
            None => certified.push(r.label(i), "none"),
        };
    }
    rep.push("dimensions", values)
        .push("certified_integer_dimensions", certified)
        .push("fpdim", dims.global())
        .push("integral", fpdim::is_integral(r, dims)?)
        .push("weakly_integral", fpdim::is_weakly_integral(r, dims)?);
    Ok(())
}

fn grading_section(r: &FusionRing, dims: &DimVector, g: &structure::GradingPartition) -> Report {
    let mut s = Report::new();
    s.push("group", g.group.describe()).push("order", g.order());
    let components: Vec<Value> = g
        .blocks
        .iter()
        .zip(&g.block_dimensions)
        .map(|(b, d)| {
            let mut c = Report::new();
            c.push("members", names(r, b)).push("dimension", *d);
            Value::Section(c)
        })
        .collect();
    s.push("components", Value::List(components));
    s.push(
        "order_times_neutral_dimension",
        g.order() as f64 * g.block_dimensions[0],
    )
    .push("fpdim", dims.global());
    s
}

fn analyze(file: &Path, tol: f64) -> Result<(i32, Report), Failure> {
    let r = load_valid_ring(file)?;
    let dims = fpdim::fp_dim_vector(&r, tol)?;
    let mut rep = header("analyze", file, &r);
    rep.push("tolerance", tol);
    append_dimensions(&mut rep, &r, &dims)?;
    rep.push("type", structure::ring_type(&dims).to_string());

    let pointed = structure::invertibles(&r);
    let mut inv = Report::new();
    inv.push("members", names(&r, pointed.subring.members()))
        .push("group", pointed.group.describe());
    rep.push("invertibles", inv);

    let mut stabilizers = Report::new();
    for i in 0..r.rank() {
        stabilizers.push(r.label(i), names(&r, &structure::stabilizer(&r, i)));
    }
    rep.push("stabilizers", stabilizers);
    rep.push(
        "adjoint_subring",
        names(&r, structure::adjoint_subring(&r).members()),
    );

    let mut code = EXIT_OK;
    match structure::universal_grading(&r, &dims) {
        Ok(g) => {
            rep.push("universal_grading", grading_section(&r, &dims, &g));
        }
        Err(e @ StructureError::GradingInconsistent { .. }) => {
            code = EXIT_CHECK_FAILED;
            let mut s = Report::new();
            s.push("error", e.to_string());
            rep.push("universal_grading", s);
        }
        Err(e) => return Err(e.into()),
    }
    match structure::nilpotency_chain(&r, &dims) {
        Ok(chain) => {
            let steps: Vec<Value> = chain
                .steps
                .iter()
                .map(|s| {
                    let mut c = Report::new();
                    c.push("members", names(&r, &s.members))
                        .push("grading_group", s.grading_group.describe());
                    Value::Section(c)
                })
                .collect();
            let mut s = Report::new();
            s.push("steps", Value::List(steps))
                .push("nilpotent", chain.is_nilpotent)
                .push("cyclically_nilpotent", chain.is_cyclically_nilpotent);
            rep.push("nilpotency_chain", s);
        }
        Err(e @ StructureError::GradingInconsistent { .. }) => {
            code = EXIT_CHECK_FAILED;
            let mut s = Report::new();
            s.push("error", e.to_string());
            rep.push("nilpotency_chain", s);
        }
        Err(e) => return Err(e.into()),
    }
    if code == EXIT_OK {
        let c = classify::classify_ring(&r, tol)?;
        rep.push("verdict", verdict_section(&c.verdict));
    }
    Ok((code, rep))
}

fn profile_section(p: &DimensionProfile) -> Report {
    let tri = |x: Option<bool>| match x {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    };
    let factorization = if p.factorization.is_empty() {
        "1".to_string()
    } else {
        p.factorization
            .iter()
            .map(|&(q, e)| {
                if e == 1 {
                    q.to_string()
                } else {
                    format!("{q}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" * ")
    };
    let mut s = Report::new();
    s.push("dimension", p.n)
        .push("factorization", factorization)
        .push("integral", tri(p.integral))
        .push("weakly_integral", tri(p.weakly_integral))
        .push("weakly_group_theoretical", tri(p.weakly_group_theoretical));
    s
}

fn verdict_section(v: &Verdict) -> Report {
    let trace: Vec<Value> = v
        .trace
        .iter()
        .map(|rule| {
            let bindings = rule
                .bindings
                .iter()
                .map(|(k, x)| format!("{k}={x}"))
                .collect::<Vec<_>>()
                .join(", ");
            let bindings = if bindings.is_empty() {
                "none".to_string()
            } else {
                bindings
            };
            let mut s = Report::new();
            s.push("rule", rule.id)
                .push("conclusion", rule.conclusion.to_string())
                .push("bindings", bindings)
                .push("citation", rule.citation);
            Value::Section(s)
        })
        .collect();
    let mut s = Report::new();
    s.push("outcome", v.outcome.to_string())
        .push(
            "maximal",
            v.maximal
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
        )
        .push("trace", Value::List(trace))
        .push("annotations", v.annotations.clone());
    s
}

fn classify_cmd(args: &ClassifyArgs, tol: f64) -> Result<(i32, Report), Failure> {
    let mut rep = Report::new();
    rep.push("command", "classify");
    let verdict = if let Some(file) = &args.ring {
        let r = load_valid_ring(file)?;
        let c = classify::classify_ring(&r, tol)?;
        rep.push("file", file.display().to_string())
            .push("fpdim", c.fpdim)
            .push("pointed", c.facts.pointed)
            .push("nilpotent", c.facts.nilpotent)
            .push("cyclically_nilpotent", c.facts.cyclically_nilpotent);
        if let Some(p) = &c.profile {
            rep.push("profile", profile_section(p));
        }
        c.verdict
    } else {
        let n = args
            .dimension
            .expect("clap requires a dimension without --ring");
        let flag = |b: bool| b.then_some(true);
        let p = classify::factorize(n)?.with_flags(
            flag(args.integral),
            flag(args.weakly_integral),
            flag(args.weakly_group_theoretical),
        );
        rep.push("profile", profile_section(&p));
        classify::classify_dimension(&p)
    };
    let code = if verdict.outcome == classify::Outcome::Unknown {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    };
    rep.push("verdict", verdict_section(&verdict));
    Ok((code, rep))
}

fn enumerate(args: &EnumerateArgs, budget: u64) -> Result<(i32, Report), Failure> {
    let constraints = ConstraintSet::preset(&args.preset).ok_or_else(|| {
        Failure::usage(format!(
            "unknown preset {:?} (expected one of {})",
            args.preset,
            enumeration::PRESETS.join(", ")
        ))
    })?;
    let predicates = args
        .filters
        .iter()
        .map(|p| Predicate::parse(p))
        .collect::<Result<Vec<_>, _>>()?;
    let types = enumeration::enumerate_types(args.dimension, &constraints, budget)?;
    let types = enumeration::filter_types(&types, &predicates);
    let mut rep = Report::new();
    rep.push("command", "enumerate")
        .push("dimension", args.dimension)
        .push("preset", args.preset.as_str())
        .push("filters", args.filters.clone())
        .push("count", types.len())
        .push(
            "types",
            types.iter().map(ToString::to_string).collect::<Vec<_>>(),
        );
    let mut code = EXIT_OK;
    if let Some(path) = &args.golden {
        let golden = enumeration::parse_type_lines(&read(path)?)
            .map_err(|(line, e)| Failure::usage(format!("{}: line {line}: {e}", path.display())))?;
        let produced: BTreeSet<&TypeVector> = types.iter().collect();
        let expected: BTreeSet<&TypeVector> = golden.iter().collect();
        let missing: Vec<String> = golden
            .iter()
            .filter(|t| !produced.contains(t))
            .map(ToString::to_string)
            .collect();
        let extra: Vec<String> = types
            .iter()
            .filter(|t| !expected.contains(t))
            .map(ToString::to_string)
            .collect();
        let mut g = Report::new();
        g.push("file", path.display().to_string())
            .push("golden_count", golden.len())
            .push("contains_golden", missing.is_empty())
            .push("missing", missing.clone())
            .push("extra_count", extra.len())
            .push("extra", extra);
        rep.push("golden", g);
        if !missing.is_empty() {
            code = EXIT_CHECK_FAILED;
        }
    }
    Ok((code, rep))
}

fn diophantine(target: u64, coefficients: &str, budget: u64) -> Result<(i32, Report), Failure> {
    let coeffs = coefficients
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<u64>()
                .map_err(|_| Failure::usage(format!("invalid coefficient {c:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let solutions = enumeration::solve_diophantine(target, &coeffs, budget)?;
    let tuple = |s: &[u64]| {
        format!(
            "({})",
            s.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    };
    let firsts: BTreeSet<u64> = solutions.iter().map(|s| s[0]).collect();
    let mut rep = Report::new();
    rep.push("command", "diophantine")
        .push("target", target)
        .push("coefficients", tuple(&coeffs))
        .push("count", solutions.len())
        .push(
            "solutions",
            solutions.iter().map(|s| tuple(s)).collect::<Vec<_>>(),
        )
        .push(
            "first_coordinate_values",
            format!(
                "{{{}}}",
                firsts
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        );
    match firsts.first() {
        Some(&m) => rep.push("min_first_coordinate", m),
        None => rep.push("min_first_coordinate", "none"),
    };
    Ok((EXIT_OK, rep))
}

fn smatrix(file: &Path, x0: Option<usize>, tol: f64) -> Result<(i32, Report), Failure> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Failure::usage(format!("invalid tolerance {tol}")));
    }
    let m = modular::parse_smatrix(&read(file)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", file.display())))?;
    let columns = x0.map(|x| vec![x]);
    let summary = modular::check_all(&m, columns.as_deref(), tol)?;
    let mut rep = Report::new();
    rep.push("command", "smatrix")
        .push("file", file.display().to_string())
        .push("order", m.order())
        .push("unit", m.unit)
        .push("tolerance", tol)
        .push("global_dimension", m.global_dimension())
        .push(
            "invariant_violations",
            summary
                .invariant_violations
                .iter()
                .map(|(a, b, what)| format!("({a},{b}): {what}"))
                .collect::<Vec<_>>(),
        );
    let columns: Vec<Value> = summary
        .orthogonality
        .iter()
        .zip(&summary.norm)
        .map(|(o, n)| {
            let mut c = Report::new();
            c.push("x0", o.x0)
                .push("orthogonality_sum", fmt_complex(o.value.re, o.value.im))
                .push("orthogonality_bound", o.bound)
                .push("orthogonality_pass", o.pass)
                .push("norm_deviation", n.value.re)
                .push("norm_pass", n.pass);
            Value::Section(c)
        })
        .collect();
    rep.push("columns", Value::List(columns))
        .push("pass", summary.pass());
    let code = if summary.pass() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    Ok((code, rep))
}

fn nichols_richmond(
    file: &Path,
    object: &str,
    tol: f64,
    budget: u64,
) -> Result<(i32, Report), Failure> {
    let r = load_valid_ring(file)?;
    let x = r
        .index_of(object)
        .ok_or_else(|| Failure::usage(format!("no basis element {object:?}")))?;
    let dims = fpdim::fp_dim_vector(&r, tol)?;
    let report = structure::nichols_richmond(&r, &dims, x, budget)?;
    let mut rep = header("nichols-richmond", file, &r);
    rep.push("object", r.label(x))
        .push("stabilizer", names(&r, &report.stabilizer))
        .push(
            "cases",
            report
                .cases
                .iter()
                .map(|c| format!("({})", c.number()))
                .collect::<Vec<_>>(),
        )
        .push(
            "annotations",
            classify::nichols_richmond_report(&r, &dims, x, budget)?,
        )
        .push("theorem_violated", report.theorem_violated());
    let code = if report.theorem_violated() {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    };
    Ok((code, rep))
}

/// `a+bi` with both parts at report precision; purely real values print as reals.
fn fmt_complex(re: f64, im: f64) -> String {
    let re = fmt_real(re);
    let im = fmt_real(im);
    if im == "0" {
        re
    } else if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}
