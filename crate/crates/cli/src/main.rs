use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use foliation_core::bott::legendrian_degree_with;
use foliation_core::contact::{limit_fiber_checked, limit_fiber_from_basis};
use foliation_core::polylab::{fit_sequence, pointwise_check, PointwiseMatch};
use foliation_core::reference::{verify, verify_contact_example, CheckOutcome, Reference};
use foliation_core::{
    build_phi_basis, elementary_symmetric, format_scalar, pencil_degree, Error, Family, FiberSelection, FixedPointP5,
    LimitMethod, Pair, RationalPolynomial, WeightSystem,
};

/// Exact torus-localization degrees of foliation varieties on P3.
#[derive(Debug, Parser)]
#[command(name = "foliations", version)]
struct Cli {
    /// Worker threads for the fixed-point and weight-block tasks.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Degree of the variety of Legendrian foliations of degree d.
    Legendrian(DegreeArgs),
    /// Degree of the variety of foliations tangent to a pencil of planes.
    Pencil(DegreeArgs),
    /// Recompute the d = 2 worked example and compare it with the embedded constants.
    Verify(VerifyArgs),
    /// Interpolate a degree sequence and compare it with the closed form.
    Interpolate(InterpolateArgs),
    /// Limit fiber weights at one fixed point of P5.
    Fiber(FiberArgs),
    /// The weight basis of divergence-free fields of degree d.
    Basis(BasisArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Image,
    Kernel,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Legendrian,
    Pencil,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Legendrian => Family::Legendrian,
            FamilyArg::Pencil => Family::Pencil,
        }
    }
}

#[derive(Debug, Args)]
struct Common {
    /// Torus weights `a,b,c,d`.
    #[arg(long, default_value = "0,2,7,10")]
    weights: WeightSystem,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Also write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DegreeArgs {
    #[arg(long)]
    degree: u32,

    /// Limit-fiber route; defaults to `both` for d <= 4 and `image` above.
    #[arg(long, value_enum)]
    method: Option<MethodArg>,

    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Check the contact-form tangency example instead.
    #[arg(long)]
    example: bool,

    /// Constants file to compare against instead of the embedded one.
    #[arg(long)]
    reference: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct InterpolateArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,

    #[arg(long)]
    min: u32,

    #[arg(long)]
    max: u32,

    /// Compare with the closed form pointwise instead of interpolating.
    #[arg(long)]
    partial: bool,

    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct FiberArgs {
    #[arg(long)]
    degree: u32,

    /// Fixed point `i,j`.
    #[arg(long, default_value = "3,4")]
    pair: String,

    #[arg(long, value_enum)]
    method: Option<MethodArg>,

    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct BasisArgs {
    #[arg(long)]
    degree: u32,

    #[command(flatten)]
    common: Common,
}

fn selection(method: Option<MethodArg>, d: u32) -> FiberSelection {
    match method {
        Some(MethodArg::Image) => FiberSelection::Image,
        Some(MethodArg::Kernel) => FiberSelection::Kernel,
        Some(MethodArg::Both) => FiberSelection::Both,
        None if d <= 4 => FiberSelection::Both,
        None => FiberSelection::Image,
    }
}

fn parse_pair(s: &str) -> anyhow::Result<Pair> {
    let parts: Vec<_> = s.split(',').map(str::trim).collect();
    let [i, j] = parts.as_slice() else {
        bail!("expected a pair `i,j`, got `{s}`");
    };
    Ok(Pair::new(i.parse()?, j.parse()?)?)
}

/// Prints `text` or the JSON of `value`, and dumps JSON to `out` if asked.
fn emit<T: Serialize>(common: &Common, value: &T, text: String) -> anyhow::Result<()> {
    let json = serde_json::to_string_pretty(value)?;
    match common.format {
        Format::Text => print!("{text}"),
        Format::Json => println!("{json}"),
    }
    if let Some(path) = &common.out {
        fs::write(path, format!("{json}\n")).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct InterpolationReport {
    family: Family,
    min: u32,
    max: u32,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    polynomial: Option<RationalPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rendered: Option<String>,
    points: Vec<PointwiseMatch>,
    matches: bool,
}

impl InterpolationReport {
    fn render_text(&self) -> String {
        let mut s = format!("{} degrees, d = {}..{}\n", self.family, self.min, self.max);
        for p in &self.points {
            let mark = if p.matches() { "ok" } else { "MISMATCH" };
            s.push_str(&format!(
                "  d = {:>2}  {}  closed form {}  {mark}\n",
                p.d,
                format_scalar(&p.computed),
                format_scalar(&p.expected)
            ));
        }
        if let Some(r) = &self.rendered {
            s.push_str(&format!("polynomial: {r}\n"));
        }
        let verdict = if self.matches {
            "matches closed form"
        } else {
            "does NOT match closed form"
        };
        s.push_str(&format!("{verdict}\n"));
        s
    }
}

/// `Ok(true)` on success, `Ok(false)` when a computed check fails.
fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Legendrian(a) => {
            let report = legendrian_degree_with(a.degree, &a.common.weights, selection(a.method, a.degree))?;
            emit(&a.common, &report, report.render_text())?;
            Ok(true)
        }
        Command::Pencil(a) => {
            let report = pencil_degree(a.degree, &a.common.weights)?;
            emit(&a.common, &report, report.render_text())?;
            Ok(true)
        }
        Command::Verify(a) => {
            let outcomes: Vec<CheckOutcome> = if a.example {
                vec![verify_contact_example()]
            } else {
                let reference = match &a.reference {
                    Some(path) => Reference::parse(
                        &fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
                    )?,
                    None => Reference::embedded(),
                };
                verify(&reference)?
            };
            match a.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&outcomes)?),
                Format::Text => {
                    for o in &outcomes {
                        println!("{} {}: {}", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail);
                    }
                }
            }
            Ok(outcomes.iter().all(|o| o.passed))
        }
        Command::Interpolate(a) => {
            let family = Family::from(a.family);
            if a.min > a.max {
                bail!("empty range {}..{}", a.min, a.max);
            }
            let points = pointwise_check(family, a.min, a.max, &a.common.weights)?;
            let (polynomial, matches) = if a.partial {
                (None, points.iter().all(PointwiseMatch::matches))
            } else {
                let pts: Vec<_> = points.iter().map(|p| (p.d, p.computed.clone())).collect();
                let poly = fit_sequence(&pts, family.degree_bound())?;
                let ok = poly == family.closed_form();
                (Some(poly), ok)
            };
            let report = InterpolationReport {
                family,
                min: a.min,
                max: a.max,
                mode: if a.partial { "pointwise" } else { "interpolate" },
                rendered: polynomial.as_ref().map(|p| format!("{p}")),
                polynomial,
                points,
                matches,
            };
            emit(&a.common, &report, report.render_text())?;
            Ok(matches)
        }
        Command::Fiber(a) => {
            let fp = FixedPointP5(parse_pair(&a.pair)?);
            let basis = build_phi_basis(a.degree, &a.common.weights)?;
            let fiber = match selection(a.method, a.degree) {
                FiberSelection::Image => limit_fiber_from_basis(fp, &basis, LimitMethod::ImageFiber)?,
                FiberSelection::Kernel => limit_fiber_from_basis(fp, &basis, LimitMethod::KernelLimit)?,
                FiberSelection::Both => limit_fiber_checked(fp, &basis)?,
            };
            let e5 = elementary_symmetric(5, &fiber.quotient_weights)?;
            let text = format!(
                "fixed point {}, d = {}, method {}\nquotient weights {:?}\nkernel weights {:?}\ne5 {}\n",
                fiber.pair,
                fiber.d,
                fiber.method.name(),
                fiber.quotient_weights.as_slice(),
                fiber.kernel_weights.as_slice(),
                format_scalar(&e5)
            );
            emit(&a.common, &fiber, text)?;
            Ok(true)
        }
        Command::Basis(a) => {
            let basis = build_phi_basis(a.degree, &a.common.weights)?;
            let mut text = format!("{} fields, d = {}\n", basis.len(), a.degree);
            let fields: Vec<_> = basis
                .fields()
                .iter()
                .map(|f| {
                    text.push_str(&format!("  [{:>3}]  {f}\n", f.weight()));
                    serde_json::json!({ "weight": f.weight(), "field": f.to_string() })
                })
                .collect();
            emit(&a.common, &fields, text)?;
            Ok(true)
        }
    }
}

fn configure_pool(jobs: Option<usize>) -> anyhow::Result<()> {
    let Some(jobs) = jobs else { return Ok(()) };
    if jobs == 0 {
        bail!("--jobs must be positive");
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    #[cfg(not(feature = "parallel"))]
    if jobs > 1 {
        eprintln!("warning: built without the `parallel` feature, running sequentially");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_pool(cli.jobs).and_then(|()| run(cli));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::InadmissibleWeights { .. }) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
