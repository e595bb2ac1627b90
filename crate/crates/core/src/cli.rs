//! The `slicekit` command-line frontend.
//!
//! Every subcommand builds a serializable report and then renders it as
//! plain text, JSON, or LaTeX. Exit codes: 0 success, 1 counterexample
//! found, 2 usage error.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::characters::{EquivariantCharacter, QPolynomial};
use crate::checks::{self, SweepReport};
use crate::convolution::{
    self, ClosedFormReport, ConvolutionDatum, CoveringChart, FixedPointTuple,
};
use crate::error::{Error, Result};
use crate::rep;
use crate::root_datum::{Coweight, RootChar, RootDatum};
use crate::slices::{self, FibrationDecomposition, SliceDatum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(
    name = "slicekit",
    version,
    about = "Exact combinatorics of affine Grassmannian slices"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    /// Worker threads for sweeps; 0 or omitted means one per core.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ConvolutionArgs {
    /// Group descriptor: GL<n> or <TYPE><rank>.
    pub group: String,
    /// Factors λ_1;…;λ_N. Coordinates are comma-separated, factors are
    /// separated by `;`. A list of shorthands such as `w1,w1` is also accepted.
    #[arg(long, allow_hyphen_values = true)]
    pub lambdas: String,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClosedForm {
    /// Condition `⟨α∨, μ_1 + … + μ_{i-1}⟩ = -1`.
    AsPrinted,
    /// Condition `⟨α∨, μ_1 + … + μ_{i-1}⟩ = 0`.
    Offset0,
}

impl ClosedForm {
    fn offset(self) -> i64 {
        match self {
            ClosedForm::AsPrinted => -1,
            ClosedForm::Offset0 => 0,
        }
    }

    fn method(self) -> &'static str {
        match self {
            ClosedForm::AsPrinted => "closed-form-as-printed",
            ClosedForm::Offset0 => "closed-form-offset0",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    WeightRep,
    PairingOrbit,
    Oracle,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Roots, coroots, 2ρ, 2ρ∨ and the minuscule census.
    RootSystem { group: String },
    /// Invariants of a single slice.
    Slice {
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Torus fixed points of a convolution diagram.
    FixedPoints(ConvolutionArgs),
    /// Tangent characters at fixed points.
    Tangent {
        #[command(flatten)]
        conv: ConvolutionArgs,
        /// Index into the canonical fixed-point order; all points if omitted.
        #[arg(long)]
        tuple: Option<usize>,
    },
    /// Poincare polynomial of compactly supported cohomology.
    Poincare {
        #[command(flatten)]
        conv: ConvolutionArgs,
        #[arg(long, value_enum)]
        closed_form: Option<ClosedForm>,
        /// Also report the direct count against both closed forms.
        #[arg(long)]
        compare: bool,
    },
    /// Affine charts covering a convolution diagram.
    Charts(ConvolutionArgs),
    /// Exhaustive checks; exits with 1 if a counterexample is found.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        group: String,
        #[arg(long)]
        lambda_bound: Option<i64>,
        #[arg(long = "box")]
        box_radius: Option<i64>,
        /// Number of random highest weights for the oracle suite.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

/// Rendered output and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit_code: i32,
}

/// Parses `λ_1;…;λ_N`. A single segment made only of `w<i>` shorthands
/// separated by commas is read as one factor per shorthand.
pub fn parse_lambda_list(datum: &RootDatum, input: &str) -> Result<Vec<Coweight>> {
    let mut out = Vec::new();
    for segment in input.split(';') {
        let items: Vec<&str> = segment.split(',').map(str::trim).collect();
        if items.len() > 1 && items.iter().all(|t| t.contains('w')) {
            for t in items {
                out.push(datum.parse_coweight(t)?);
            }
        } else {
            out.push(datum.parse_coweight(segment)?);
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct MinusculeEntry {
    index: usize,
    coweight: Coweight,
    orbit_size: usize,
}

#[derive(Serialize)]
struct RootSystemReport {
    group: String,
    rank: usize,
    ss_rank: usize,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<RootChar>,
    simple_coroots: Vec<Coweight>,
    positive_roots: Vec<RootChar>,
    positive_coroots: Vec<Coweight>,
    two_rho_check: RootChar,
    two_rho: Coweight,
    minuscule: Vec<MinusculeEntry>,
}

#[derive(Serialize)]
struct SliceReport {
    group: String,
    lambda: Coweight,
    mu: Coweight,
    dimension: i64,
    repellent_dimension: i64,
    has_fixed_point: bool,
    mu_condition: bool,
    decomposition: Option<FibrationDecomposition>,
    decomposition_error: Option<String>,
    minuscule_character: Option<EquivariantCharacter>,
}

#[derive(Serialize)]
struct FixedPointsReport {
    group: String,
    lambdas: Vec<Coweight>,
    mu: Coweight,
    count: usize,
    fixed_points: Vec<FixedPointTuple>,
}

#[derive(Serialize)]
struct TangentEntry {
    index: usize,
    tuple: FixedPointTuple,
    character: EquivariantCharacter,
}

#[derive(Serialize)]
struct TangentReport {
    group: String,
    lambdas: Vec<Coweight>,
    mu: Coweight,
    characters: Vec<TangentEntry>,
}

#[derive(Serialize)]
struct PoincareReport {
    group: String,
    lambdas: Vec<Coweight>,
    mu: Coweight,
    method: String,
    polynomial: QPolynomial,
    #[serde(skip_serializing_if = "Option::is_none")]
    comparison: Option<ClosedFormReport>,
}

#[derive(Serialize)]
struct ChartsReport {
    group: String,
    lambdas: Vec<Coweight>,
    mu: Coweight,
    dimension: i64,
    charts: Vec<CoveringChart>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn render_char(datum: &RootDatum, ch: &EquivariantCharacter, format: Format) -> Result<String> {
    match format {
        Format::Latex => ch.render_latex(datum),
        _ => ch.render_plain(datum),
    }
}

fn render_poly(p: &QPolynomial, format: Format) -> String {
    match format {
        Format::Latex => p.render_latex(),
        _ => p.render_plain(),
    }
}

fn conv_datum(args: &ConvolutionArgs) -> Result<(RootDatum, ConvolutionDatum)> {
    let datum = RootDatum::parse(&args.group)?;
    let lambdas = parse_lambda_list(&datum, &args.lambdas)?;
    let mu = datum.parse_coweight(&args.mu)?;
    let c = ConvolutionDatum::new(&datum, lambdas, mu)?;
    Ok((datum, c))
}

fn root_system(group: &str, format: Format) -> Result<Output> {
    let d = RootDatum::parse(group)?;
    let minuscule = rep::minuscule_fundamental_coweights(&d)
        .into_iter()
        .map(|(index, coweight)| MinusculeEntry {
            index,
            orbit_size: d.weyl_orbit(&coweight).len(),
            coweight,
        })
        .collect();
    let report = RootSystemReport {
        group: d.label.clone(),
        rank: d.rank,
        ss_rank: d.ss_rank,
        cartan: d.cartan.clone(),
        simple_roots: d.simple_roots.clone(),
        simple_coroots: d.simple_coroots.clone(),
        positive_roots: d.positive_roots.clone(),
        positive_coroots: d.positive_coroots.clone(),
        two_rho_check: d.two_rho_check.clone(),
        two_rho: d.two_rho.clone(),
        minuscule,
    };
    if format == Format::Json {
        return Ok(ok(to_json(&report)));
    }
    let mut s = String::new();
    writeln!(
        s,
        "group: {} (rank {}, semisimple rank {})",
        report.group, report.rank, report.ss_rank
    )
    .unwrap();
    writeln!(s, "positive roots: {}", report.positive_roots.len()).unwrap();
    for (r, c) in report.positive_roots.iter().zip(&report.positive_coroots) {
        writeln!(s, "  root {r}  coroot {c}").unwrap();
    }
    writeln!(s, "2rho_check: {}", report.two_rho_check).unwrap();
    writeln!(s, "2rho: {}", report.two_rho).unwrap();
    writeln!(
        s,
        "minuscule fundamental coweights: {}",
        report.minuscule.len()
    )
    .unwrap();
    for m in &report.minuscule {
        writeln!(
            s,
            "  w{} = {}  orbit size {}",
            m.index, m.coweight, m.orbit_size
        )
        .unwrap();
    }
    Ok(ok(s))
}

fn slice(group: &str, lambda: &str, mu: &str, format: Format) -> Result<Output> {
    let d = RootDatum::parse(group)?;
    let lambda = d.parse_coweight(lambda)?;
    let mu = d.parse_coweight(mu)?;
    let s = SliceDatum::new(&d, lambda, mu)?;
    let (decomposition, decomposition_error) = match slices::fibration_decomposition(&d, &s) {
        Ok(f) => (Some(f), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let minuscule_character = slices::minuscule_slice_character(&d, &s).ok();
    let report = SliceReport {
        group: d.label.clone(),
        dimension: slices::slice_dimension(&d, &s),
        repellent_dimension: slices::repellent_dimension(&d, &s),
        has_fixed_point: slices::has_torus_fixed_point(&d, &s),
        mu_condition: slices::mu_condition(&d, &s.mu),
        decomposition,
        decomposition_error,
        minuscule_character,
        lambda: s.lambda,
        mu: s.mu,
    };
    if format == Format::Json {
        return Ok(ok(to_json(&report)));
    }
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    writeln!(
        out,
        "slice in {}: lambda = {}, mu = {}",
        report.group, report.lambda, report.mu
    )
    .unwrap();
    let shape = if report.dimension == 0 {
        " (point)"
    } else {
        ""
    };
    writeln!(out, "dimension: {}{shape}", report.dimension).unwrap();
    writeln!(out, "repellent dimension: {}", report.repellent_dimension).unwrap();
    writeln!(out, "torus fixed point: {}", yn(report.has_fixed_point)).unwrap();
    writeln!(out, "mu-condition: {}", yn(report.mu_condition)).unwrap();
    match (&report.decomposition, &report.decomposition_error) {
        (Some(f), _) => {
            let kind = if f.is_affine_space {
                " (affine space)"
            } else {
                ""
            };
            writeln!(
                out,
                "decomposition: A^{} x slice(lambda = {}, mu = {}){kind}",
                f.affine_dim, f.base_lambda, f.base_mu_plus
            )
            .unwrap();
        }
        (None, Some(e)) => writeln!(out, "decomposition: refused ({e})").unwrap(),
        (None, None) => {}
    }
    if let Some(ch) = &report.minuscule_character {
        writeln!(out, "character: {}", render_char(&d, ch, format)?).unwrap();
    }
    Ok(ok(out))
}

fn fixed_points(args: &ConvolutionArgs, format: Format) -> Result<Output> {
    let (d, c) = conv_datum(args)?;
    let fps = convolution::fixed_points(&d, &c);
    let report = FixedPointsReport {
        group: d.label.clone(),
        count: fps.len(),
        fixed_points: fps,
        lambdas: c.lambdas,
        mu: c.mu,
    };
    if format == Format::Json {
        return Ok(ok(to_json(&report)));
    }
    let mut s = String::new();
    writeln!(s, "fixed points: {}", report.count).unwrap();
    for (i, t) in report.fixed_points.iter().enumerate() {
        writeln!(s, "  [{i}] {t}").unwrap();
    }
    Ok(ok(s))
}

fn tangent(args: &ConvolutionArgs, index: Option<usize>, format: Format) -> Result<Output> {
    let (d, c) = conv_datum(args)?;
    let fps = convolution::fixed_points(&d, &c);
    let chosen: Vec<(usize, FixedPointTuple)> = match index {
        Some(i) => {
            let t = fps.get(i).cloned().ok_or_else(|| {
                Error::TupleNotFixedPoint(format!(
                    "index {i} out of range (there are {})",
                    fps.len()
                ))
            })?;
            vec![(i, t)]
        }
        None => fps.into_iter().enumerate().collect(),
    };
    let characters = chosen
        .into_iter()
        .map(|(index, tuple)| {
            let character = convolution::tangent_character(&d, &c, &tuple)?;
            Ok(TangentEntry {
                index,
                tuple,
                character,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let report = TangentReport {
        group: d.label.clone(),
        lambdas: c.lambdas,
        mu: c.mu,
        characters,
    };
    if format == Format::Json {
        return Ok(ok(to_json(&report)));
    }
    let mut s = String::new();
    for e in &report.characters {
        writeln!(
            s,
            "[{}] {}: {}",
            e.index,
            e.tuple,
            render_char(&d, &e.character, format)?
        )
        .unwrap();
    }
    Ok(ok(s))
}

fn poincare(
    args: &ConvolutionArgs,
    closed: Option<ClosedForm>,
    compare: bool,
    format: Format,
) -> Result<Output> {
    let (d, c) = conv_datum(args)?;
    let (method, polynomial) = match closed {
        None => (
            "direct".to_string(),
            convolution::poincare_polynomial(&d, &c)?,
        ),
        Some(cf) => (
            cf.method().to_string(),
            convolution::poincare_closed_form(&d, &c, cf.offset())?,
        ),
    };
    let comparison = if compare {
        Some(convolution::closed_form_report(&d, &c)?)
    } else {
        None
    };
    let report = PoincareReport {
        group: d.label.clone(),
        lambdas: c.lambdas,
        mu: c.mu,
        method,
        polynomial,
        comparison,
    };
    if format == Format::Json {
        return Ok(ok(to_json(&report)));
    }
    let mut s = String::new();
    writeln!(s, "{}", render_poly(&report.polynomial, format)).unwrap();
    if let Some(cmp) = &report.comparison {
        let yn = |b: bool| if b { "matches" } else { "differs" };
        writeln!(
            s,
            "direct:             {}",
            render_poly(&cmp.direct, format)
        )
        .unwrap();
        writeln!(
            s,
            "closed form, = 0:   {} ({})",
            render_poly(&cmp.offset0, format),
            yn(cmp.offset0_matches)
        )
        .unwrap();
        writeln!(
            s,
            "closed form, = -1:  {} ({})",
            render_poly(&cmp.as_printed, format),
            yn(cmp.as_printed_matches)
        )
        .unwrap();
        for cell in &cmp.cells {
            writeln!(
                s,
                "  {}: direct {} / offset0 {} / as printed {}",
                cell.tuple, cell.direct, cell.offset0, cell.as_printed
            )
            .unwrap();
        }
    }
    Ok(ok(s))
}

fn charts(args: &ConvolutionArgs, format: Format) -> Result<Output> {
    let (d, c) = conv_datum(args)?;
    let charts = convolution::covering_charts(&d, &c)?;
    let report = ChartsReport {
        group: d.label.clone(),
        dimension: c.dimension(&d),
        lambdas: c.lambdas,
        mu: c.mu,
        charts,
    };
    if format == Format::Json {
        return Ok(ok(to_json(&report)));
    }
    let mut s = String::new();
    writeln!(
        s,
        "charts: {} (dimension {})",
        report.charts.len(),
        report.dimension
    )
    .unwrap();
    for ch in &report.charts {
        let dims: Vec<String> = ch.chart_dims.iter().map(|x| x.to_string()).collect();
        writeln!(
            s,
            "  {}: dims [{}] total {}",
            ch.tuple,
            dims.join(", "),
            ch.total()
        )
        .unwrap();
    }
    Ok(ok(s))
}

fn check(
    suite: Suite,
    group: &str,
    lambda_bound: Option<i64>,
    box_radius: Option<i64>,
    samples: usize,
    seed: u64,
    format: Format,
) -> Result<Output> {
    let d = RootDatum::parse(group)?;
    let (default_lambda, default_box) = checks::default_bounds(&d);
    let report: SweepReport = match suite {
        Suite::WeightRep => checks::sweep_weight_rep(&d, lambda_bound.unwrap_or(default_lambda)),
        Suite::PairingOrbit => {
            checks::sweep_pairing_orbit_equiv(&d, box_radius.unwrap_or(default_box))
        }
        Suite::Oracle => {
            let lambdas = checks::sample_dominant(&d, lambda_bound.unwrap_or(4), samples, seed);
            checks::sweep_oracle(&d, &lambdas)
        }
    };
    let exit_code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    let text = if format == Format::Json {
        to_json(&report)
    } else {
        let mut s = String::new();
        writeln!(
            s,
            "{} on {} (bound {}): {} cases, {} counterexamples",
            report.suite,
            report.group,
            report.box_radius,
            report.cases_checked,
            report.counterexamples.len()
        )
        .unwrap();
        for c in &report.counterexamples {
            writeln!(s, "  {}", serde_json::to_string(c).expect("serializes")).unwrap();
        }
        s
    };
    Ok(Output { text, exit_code })
}

fn ok(text: String) -> Output {
    Output {
        text,
        exit_code: EXIT_OK,
    }
}

/// Runs a parsed command on a pool of `cli.jobs` workers.
pub fn execute(cli: &Cli) -> Result<Output> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .expect("thread pool");
    pool.install(|| match &cli.command {
        Command::RootSystem { group } => root_system(group, cli.format),
        Command::Slice { group, lambda, mu } => slice(group, lambda, mu, cli.format),
        Command::FixedPoints(args) => fixed_points(args, cli.format),
        Command::Tangent { conv, tuple } => tangent(conv, *tuple, cli.format),
        Command::Poincare {
            conv,
            closed_form,
            compare,
        } => poincare(conv, *closed_form, *compare, cli.format),
        Command::Charts(args) => charts(args, cli.format),
        Command::Check {
            suite,
            group,
            lambda_bound,
            box_radius,
            samples,
        } => check(
            *suite,
            group,
            *lambda_bound,
            *box_radius,
            *samples,
            cli.seed,
            cli.format,
        ),
    })
}

/// Parses arguments and runs; usage and input errors map to exit code 2.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let exit_code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return Output {
                text: e.render().to_string(),
                exit_code,
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => Output {
            text: format!("error: {e}\n"),
            exit_code: EXIT_USAGE,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Output {
        run(std::iter::once("slicekit").chain(args.iter().copied()))
    }

    #[test]
    fn lambda_lists() {
        let gl2 = RootDatum::parse("GL2").unwrap();
        let cw = |v: &[i64]| Coweight(v.to_vec());
        assert_eq!(
            parse_lambda_list(&gl2, "w1,w1").unwrap(),
            vec![cw(&[1, 0]), cw(&[1, 0])]
        );
        assert_eq!(
            parse_lambda_list(&gl2, "1,0;1,1").unwrap(),
            vec![cw(&[1, 0]), cw(&[1, 1])]
        );
        assert_eq!(
            parse_lambda_list(&gl2, "w1;2,0").unwrap(),
            vec![cw(&[1, 0]), cw(&[2, 0])]
        );
        assert!(parse_lambda_list(&gl2, "1,0,0").is_err());
    }

    #[test]
    fn root_system_counts() {
        let out = run_args(&["root-system", "GL2"]);
        assert!(out.text.contains("positive roots: 1"));
        let out = run_args(&["root-system", "A3"]);
        assert!(out.text.contains("positive roots: 6"));
        assert!(out.text.contains("minuscule fundamental coweights: 3"));
        let out = run_args(&["root-system", "G2"]);
        assert!(out.text.contains("positive roots: 6"));
        assert!(out.text.contains("minuscule fundamental coweights: 0"));
    }

    #[test]
    fn slice_output() {
        let out = run_args(&["slice", "GL2", "--lambda", "1,0", "--mu", "0,1"]);
        assert_eq!(out.exit_code, 0);
        assert!(out.text.contains("dimension: 2\n"));
        assert!(out.text.contains("character: a1^-1 + h*a1"));
        let out = run_args(&["slice", "GL2", "--lambda", "1,0", "--mu", "1,0"]);
        assert!(out.text.contains("dimension: 0 (point)"));
        let out = run_args(&["slice", "GL2", "--lambda", "2,0", "--mu", "0,2"]);
        assert!(out.text.contains("mu-condition: no"));
        assert!(out.text.contains("decomposition: refused"));
        assert_eq!(out.exit_code, 0);
    }

    #[test]
    fn convolution_commands() {
        let out = run_args(&["poincare", "GL2", "--lambdas", "w1,w1", "--mu", "1,1"]);
        assert_eq!(out.text, "q^2 + q^4\n");
        let out = run_args(&[
            "fixed-points",
            "GL2",
            "--lambdas",
            "w1,w1,w1",
            "--mu",
            "1,2",
        ]);
        assert!(out.text.starts_with("fixed points: 3\n"));
        let out = run_args(&[
            "tangent",
            "GL2",
            "--lambdas",
            "w1,w1",
            "--mu",
            "1,1",
            "--tuple",
            "0",
        ]);
        assert_eq!(out.text, "[0] ((0,1), (1,0)): a1^-1 + h*a1\n");
        let out = run_args(&[
            "poincare",
            "GL2",
            "--lambdas",
            "w1",
            "--mu",
            "0,1",
            "--closed-form",
            "as-printed",
        ]);
        assert_eq!(out.text, "q^2\n");
        let out = run_args(&["charts", "GL2", "--lambdas", "w1,w1", "--mu", "1,1"]);
        assert!(out.text.starts_with("charts: 2 (dimension 2)"));
    }

    #[test]
    fn checks_and_errors() {
        assert_eq!(
            run_args(&["check", "weight-rep", "GL2", "--lambda-bound", "4"]).exit_code,
            0
        );
        assert_eq!(
            run_args(&["check", "pairing-orbit", "B2", "--box", "2"]).exit_code,
            0
        );
        assert_eq!(
            run_args(&["check", "weight-rep", "Q7"]).exit_code,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["frobnicate"]).exit_code, EXIT_USAGE);
        assert_eq!(
            run_args(&["poincare", "GL2", "--lambdas", "w1,w1", "--mu", "0,2"]).exit_code,
            EXIT_USAGE
        );
    }

    #[test]
    fn latex_and_json() {
        let out = run_args(&[
            "--format",
            "latex",
            "poincare",
            "GL2",
            "--lambdas",
            "w1,w1",
            "--mu",
            "1,1",
        ]);
        assert_eq!(out.text, "q^{2} + q^{4}\n");
        let out = run_args(&[
            "poincare",
            "GL2",
            "--lambdas",
            "w1,w1",
            "--mu",
            "1,1",
            "--format",
            "json",
        ]);
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["polynomial"], serde_json::json!({"2": 1, "4": 1}));
        assert_eq!(v["method"], "direct");
    }
}
