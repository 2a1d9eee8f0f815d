use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use axial_core::algebra::{Algebra, Element};
use axial_core::axis::{verify_axis, verify_axis_via_p, verify_axis_via_q, AxisCertificate, AxisError};
use axial_core::catalog::{
    check_derivation_criterion, format_report, list_identities, run_suite, AxisPair, CatalogError, Tier,
};
use axial_core::constructions::{named_fixture, ConstructionError, Fixture, FIXTURE_NAMES};
use axial_core::format::{load_algebra, parse_element, save_algebra, FormatError};
use axial_core::linalg::Matrix;
use axial_core::parallel::Execution;
use axial_core::scalar::FieldSpec;

const OK: u8 = 0;
const MATH_FAILURE: u8 = 1;
const PARSE_ERROR: u8 = 2;
const INVARIANT_BREACH: u8 = 3;
const PRECONDITION: u8 = 4;

/// Exact checks for axes of Jordan type 1/2.
#[derive(Parser)]
#[command(name = "axial", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load an algebra and report its structure.
    Validate(InputArgs),
    /// Certify an element as an axis by all three routes.
    Axis {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "a")]
        element: String,
    },
    /// Split `x` into its components with respect to an axis.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "a")]
        axis: String,
        #[arg(long)]
        x: String,
    },
    /// Print the Miyamoto involution of an axis and check it.
    Miyamoto {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "a")]
        axis: String,
    },
    /// Run the identity catalog on an axis pair.
    Suite {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "a")]
        a: String,
        #[arg(long, default_value = "b")]
        b: String,
        #[arg(long, value_enum, default_value_t = TierArg::Mandatory)]
        tier: TierArg,
        /// Only identities whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        /// Write the TSV report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Evaluate identities on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Write a built-in fixture to a file.
    Construct {
        #[arg(long)]
        fixture: String,
        #[arg(long)]
        field: Option<FieldSpec>,
        #[arg(long)]
        output: PathBuf,
    },
    /// List catalogued identities.
    Identities {
        #[arg(long, value_enum, default_value_t = TierArg::Extended)]
        tier: TierArg,
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Built-in fixture, e.g. spin:1/3, lambda-one, matsuo:S4, split, sym:3/5,4/5,0.
    #[arg(long, required_unless_present = "input", conflicts_with = "input")]
    fixture: Option<String>,
    /// Algebra file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Field for built-in fixtures: Q or GF<p>.
    #[arg(long, requires = "fixture")]
    field: Option<FieldSpec>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Mandatory,
    Extended,
}

impl From<TierArg> for Tier {
    fn from(t: TierArg) -> Tier {
        match t {
            TierArg::Mandatory => Tier::Mandatory,
            TierArg::Extended => Tier::Extended,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::UnknownFixture(_) => {
                fail(PARSE_ERROR, format!("{e} (built-in: {})", FIXTURE_NAMES.join(", ")))
            }
            _ => fail(PARSE_ERROR, e.to_string()),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Algebra(_) => fail(MATH_FAILURE, format!("invalid algebra: {e}")),
            _ => fail(PARSE_ERROR, e.to_string()),
        }
    }
}

/// An algebra plus the named elements a fixture provides.
struct Loaded {
    algebra: Algebra,
    names: Vec<(String, Element)>,
}

impl Loaded {
    fn load(input: &InputArgs) -> Result<Self, Failure> {
        if let Some(name) = &input.fixture {
            let Fixture { algebra, elements, .. } = named_fixture(name, input.field)?;
            return Ok(Loaded { algebra, names: elements });
        }
        let path = input.input.as_ref().expect("clap requires one source");
        Ok(Loaded { algebra: load_algebra(path)?, names: Vec::new() })
    }

    /// A fixture name, a bare basis index, or a linear combination of `e<i>`.
    fn element(&self, text: &str) -> Result<Element, Failure> {
        let text = text.trim();
        if let Some((_, e)) = self.names.iter().find(|(n, _)| n == text) {
            return Ok(e.clone());
        }
        if let Ok(i) = text.parse::<usize>() {
            if i < self.algebra.dim() {
                return Ok(self.algebra.basis_element(i));
            }
            return Err(fail(PARSE_ERROR, format!("basis index {i} out of range")));
        }
        parse_element(&self.algebra, text).map_err(|e| fail(PARSE_ERROR, e.to_string()))
    }

    fn axis(&self, text: &str) -> Result<AxisCertificate<'_>, Failure> {
        let c = self.element(text)?;
        verify_axis(&self.algebra, &c).map_err(|e| fail(PRECONDITION, format!("{text} is not an axis: {e}")))
    }
}

fn coords(e: &Element) -> String {
    let parts: Vec<String> = e.coords().iter().map(|s| s.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn validate(input: &InputArgs) -> Result<u8, Failure> {
    let loaded = Loaded::load(input)?;
    let alg = &loaded.algebra;
    println!("field: {}", alg.field());
    println!("dim: {}", alg.dim());
    println!("commutative: yes");
    println!("frobenius: yes");
    println!("radical dim: {}", alg.radical().dim());
    Ok(OK)
}

fn axis(input: &InputArgs, element: &str) -> Result<u8, Failure> {
    let loaded = Loaded::load(input)?;
    let alg = &loaded.algebra;
    let c = loaded.element(element)?;
    let direct = verify_axis(alg, &c);
    let by_q = match verify_axis_via_q(alg, &c) {
        Ok(v) => v,
        Err(AxisError::NotIdempotent) => false,
        Err(e) => return Err(fail(INVARIANT_BREACH, e.to_string())),
    };
    let by_p = match verify_axis_via_p(alg, &c) {
        Ok(v) => v,
        Err(AxisError::NotIdempotent | AxisError::FormNotOne(_)) => false,
        Err(e) => return Err(fail(INVARIANT_BREACH, e.to_string())),
    };
    let verdict = |b: bool| if b { "axis" } else { "not an axis" };
    println!("element: {c}");
    match &direct {
        Ok(_) => println!("decomposition route: axis"),
        Err(AxisError::NotAnAxis(reason)) => {
            println!("decomposition route: not an axis ({})", reason.clause())
        }
        Err(e) => return Err(fail(INVARIANT_BREACH, e.to_string())),
    }
    println!("Q route: {}", verdict(by_q));
    println!("P route: {}", verdict(by_p));
    if by_q != direct.is_ok() || by_p != direct.is_ok() {
        return Err(fail(INVARIANT_BREACH, "certification routes disagree"));
    }
    match direct {
        Ok(cert) => {
            let (one, zero, half) = cert.dims();
            println!("dims: ({one}, {zero}, {half})");
            Ok(OK)
        }
        Err(AxisError::NotAnAxis(reason)) => {
            println!("not an axis: {reason}");
            Ok(MATH_FAILURE)
        }
        Err(e) => Err(fail(INVARIANT_BREACH, e.to_string())),
    }
}

fn decompose(input: &InputArgs, axis: &str, x: &str) -> Result<u8, Failure> {
    let loaded = Loaded::load(input)?;
    let cert = loaded.axis(axis)?;
    let x = loaded.element(x)?;
    let d = cert.decompose(&x).map_err(|e| fail(INVARIANT_BREACH, e.to_string()))?;
    println!("alpha: {}", d.alpha);
    println!("x0: {}  = {}", coords(&d.x0), d.x0);
    println!("xhalf: {}  = {}", coords(&d.xhalf), d.xhalf);
    if cert.reconstruct(&d) != x {
        return Err(fail(INVARIANT_BREACH, "decomposition does not reconstruct x"));
    }
    Ok(OK)
}

fn miyamoto(input: &InputArgs, axis: &str) -> Result<u8, Failure> {
    let loaded = Loaded::load(input)?;
    let alg = &loaded.algebra;
    let cert = loaded.axis(axis)?;
    let tau = cert.miyamoto();
    println!("{tau}");
    let auto = alg.is_automorphism(&tau).map_err(|e| fail(INVARIANT_BREACH, e.to_string()))?;
    let involution = tau.mul(&tau) == Matrix::identity(alg.field(), alg.dim());
    println!("automorphism: {}", if auto.passed() { "yes" } else { "no" });
    println!("involution: {}", if involution { "yes" } else { "no" });
    Ok(if auto.passed() && involution { OK } else { MATH_FAILURE })
}

fn suite(
    input: &InputArgs,
    a: &str,
    b: &str,
    tier: TierArg,
    filter: Option<&str>,
    report: Option<&PathBuf>,
    sequential: bool,
) -> Result<u8, Failure> {
    let loaded = Loaded::load(input)?;
    let alg = &loaded.algebra;
    let (ea, eb) = (loaded.element(a)?, loaded.element(b)?);
    let pair = AxisPair::new(alg, &ea, &eb).map_err(|e| match e {
        CatalogError::Axis(_) => fail(PRECONDITION, e.to_string()),
        _ => fail(MATH_FAILURE, e.to_string()),
    })?;
    let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
    let reports =
        run_suite(&pair, tier.into(), filter, exec).map_err(|e| fail(INVARIANT_BREACH, e.to_string()))?;
    if let Some(path) = report {
        std::fs::write(path, format_report(&reports))
            .map_err(|e| fail(PRECONDITION, format!("{}: {e}", path.display())))?;
    }
    println!("lambda: {}", pair.lambda);
    for r in reports.iter().filter(|r| !r.failures.is_empty()) {
        let first = &r.failures[0];
        let inputs: Vec<String> = first.inputs.iter().map(|(s, i)| format!("{s}[{i}]")).collect();
        println!(
            "FAIL {} ({} of {} tuples), first at {}: residual {}",
            r.id,
            r.failures.len(),
            r.checked_tuples,
            inputs.join(", "),
            first.residual
        );
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    let failed = reports.iter().filter(|r| !r.failures.is_empty()).count();
    let skipped = reports.iter().filter(|r| !r.applicable).count();
    println!("passed: {passed} failed: {failed} skipped: {skipped}");
    let crit = check_derivation_criterion(&pair).map_err(|e| fail(INVARIANT_BREACH, e.to_string()))?;
    println!(
        "derivation criterion: leibniz {} conditions {} ({})",
        crit.leibniz,
        crit.conditions(),
        if crit.consistent() { "consistent" } else { "INCONSISTENT" }
    );
    Ok(if failed == 0 && crit.consistent() { OK } else { MATH_FAILURE })
}

fn construct(fixture: &str, field: Option<FieldSpec>, output: &PathBuf) -> Result<u8, Failure> {
    let fx = named_fixture(fixture, field)?;
    save_algebra(&fx.algebra, output).map_err(|e| fail(PRECONDITION, e.to_string()))?;
    println!("wrote {} (dim {}) to {}", fx.name, fx.algebra.dim(), output.display());
    for (name, e) in &fx.elements {
        println!("{name} = {e}");
    }
    Ok(OK)
}

fn identities(tier: TierArg, filter: Option<&str>) -> Result<u8, Failure> {
    let tier: Tier = tier.into();
    for d in list_identities().iter().filter(|d| d.tier <= tier && filter.is_none_or(|p| d.id.starts_with(p)))
    {
        let slots: Vec<String> = d.slots.iter().map(|s| s.to_string()).collect();
        println!(
            "{}\t{:?}\t[{}]\t{}\t{}",
            d.id,
            d.tier,
            slots.join(", "),
            d.hypotheses.describe(),
            d.text.split_whitespace().collect::<Vec<_>>().join(" ")
        );
    }
    Ok(OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate(input) => validate(input),
        Command::Axis { input, element } => axis(input, element),
        Command::Decompose { input, axis, x } => decompose(input, axis, x),
        Command::Miyamoto { input, axis } => miyamoto(input, axis),
        Command::Suite { input, a, b, tier, filter, report, sequential } => {
            suite(input, a, b, *tier, filter.as_deref(), report.as_ref(), *sequential)
        }
        Command::Construct { fixture, field, output } => construct(fixture, *field, output),
        Command::Identities { tier, filter } => identities(*tier, filter.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
