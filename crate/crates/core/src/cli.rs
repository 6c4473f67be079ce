//! Command-line front end: `kernel`, `norms`, `verify` and `sweep`.
//!
//! Every command validates all flags before computing, renders its whole
//! output into a string, and returns an [`Outcome`]. Exit codes are 0 on
//! success, 1 when a verification fails or a series does not converge, and
//! 2 on invalid input.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::asymptotics::{convergence_sweep_at, records_table};
use crate::bargmann::{BargmannDirichletSpace, NuPlacement};
use crate::bergman::BergmanDirichletSpace;
use crate::error::{Error, Result};
use crate::holo::{inner, CVector, TaylorSeries};
use crate::hypergeo::{SeriesOptions, DEFAULT_MAX_TERMS, DEFAULT_TOL};
use crate::multiindex::{
    falling_factorial, indices_up_to, power_sum_residual, snomial_identity_residual,
};
use crate::quad::{defining_inner, verify_monomial_norm, QuadratureGrid};
use crate::report::{Cell, Table};
use crate::space::KernelSpace;

#[derive(Debug, Parser)]
#[command(
    name = "bergfock",
    version,
    about = "Kernels, norms, quadrature checks and flat-limit sweeps for Bergman-Dirichlet and Bargmann-Dirichlet spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the reproducing kernel at <z, w>.
    Kernel(KernelArgs),
    /// Tabulate monomial norms up to a total degree.
    Norms(NormsArgs),
    /// Check norm formulas and identities against independent oracles.
    Verify(VerifyArgs),
    /// Follow the ball kernel with alpha = nu R^2 towards the Gaussian kernel.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceKind {
    Ball,
    Fock,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Series,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Norms,
    Orthogonality,
    Sobolev,
    Identities,
}

#[derive(Debug, Args)]
struct SpaceArgs {
    #[arg(long, value_enum)]
    space: SpaceKind,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    m: u32,
    /// Ball weight exponent.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    alpha: f64,
    /// Ball radius.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    radius: f64,
    /// Gaussian parameter.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    nu: f64,
    /// Put nu^m under the falling factorial in the Gaussian monomial norms.
    #[arg(long, hide = true, alias = "paper-nu-variant")]
    nu_denominator_variant: bool,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Args)]
struct KernelArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// <z, w> given directly, as `re` or `re,im`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["z", "w"])]
    t: Option<String>,
    /// Point z as `re[,im];re[,im];...`.
    #[arg(long, allow_hyphen_values = true, requires = "w")]
    z: Option<String>,
    /// Point w, same syntax as z.
    #[arg(long, allow_hyphen_values = true, requires = "z")]
    w: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    method: Method,
    /// Truncation degree for the series method.
    #[arg(long, default_value_t = 200)]
    max_degree: u32,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
    max_terms: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct NormsArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long, default_value_t = 4)]
    max_degree: u32,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, value_enum, default_value_t = SpaceKind::Ball)]
    space: SpaceKind,
    /// Dimensions, e.g. `1,2`.
    #[arg(long, default_value = "2")]
    n: String,
    /// Orders, e.g. `0,1,2` or `0..3`.
    #[arg(long, default_value = "0..3")]
    m: String,
    /// Ball weight exponents, e.g. `0,0.5,2`.
    #[arg(long, default_value = "0,0.5,2", allow_hyphen_values = true)]
    alpha: String,
    /// Gaussian parameters, e.g. `0.5,1,3`.
    #[arg(long, default_value = "0.5,1,2,3", allow_hyphen_values = true)]
    nu: String,
    /// Largest total degree checked.
    #[arg(long, default_value_t = 6)]
    degree: u32,
    /// Pass threshold; defaults to 1e-8 (norms, sobolev), 1e-10 (orthogonality), 1e-12 (identities).
    #[arg(long)]
    tol: Option<f64>,
    /// Random polynomials per parameter set in the sobolev suite.
    #[arg(long, default_value_t = 5)]
    cases: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, hide = true, alias = "paper-nu-variant")]
    nu_denominator_variant: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    nu: f64,
    #[arg(long, default_value_t = 0)]
    m: u32,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["z", "w"])]
    t: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "w")]
    z: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "z")]
    w: Option<String>,
    /// Strictly increasing radii, e.g. `5,10,20,40`.
    #[arg(long, default_value = "5,10,20,40")]
    radii: String,
    #[command(flatten)]
    out: OutputArgs,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Outcome {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `args` (program name first) and runs the selected command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome::ok(text, 0)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Kernel(a) => cmd_kernel(a),
        Command::Norms(a) => cmd_norms(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
    };
    match result {
        Ok(out) => out,
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DimensionMismatch { .. }
        | Error::InvalidParameter(_)
        | Error::Domain(_)
        | Error::Capacity { .. } => 2,
        Error::Divergent(_) | Error::NonConvergence { .. } => 1,
    }
}

fn render(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn parse_f64(s: &str) -> Result<f64> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| bad(format!("cannot read `{s}` as a number")))?;
    if !x.is_finite() {
        return Err(bad(format!("`{s}` is not finite")));
    }
    Ok(x)
}

/// `re` or `re,im`.
fn parse_complex(s: &str) -> Result<Complex64> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [re] => Ok(Complex64::new(parse_f64(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(parse_f64(re)?, parse_f64(im)?)),
        _ => Err(bad(format!("`{s}` is not of the form re[,im]"))),
    }
}

/// `re[,im];re[,im];...`.
fn parse_point(s: &str) -> Result<CVector> {
    let comps = s
        .split(';')
        .map(parse_complex)
        .collect::<Result<Vec<_>>>()?;
    CVector::new(comps)
}

fn parse_f64_list(s: &str) -> Result<Vec<f64>> {
    let v = s.split(',').map(parse_f64).collect::<Result<Vec<_>>>()?;
    if v.is_empty() {
        return Err(bad("empty list"));
    }
    Ok(v)
}

/// `a,b,c` or an inclusive range `a..b`.
fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    let int = |x: &str| -> Result<u32> {
        x.trim()
            .parse()
            .map_err(|_| bad(format!("cannot read `{x}` as a nonnegative integer")))
    };
    if let Some((lo, hi)) = s.split_once("..") {
        let (lo, hi) = (int(lo)?, int(hi)?);
        if lo > hi {
            return Err(bad(format!("empty range `{s}`")));
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',').map(int).collect()
}

fn placement(variant: bool) -> NuPlacement {
    if variant {
        NuPlacement::Denominator
    } else {
        NuPlacement::Numerator
    }
}

enum AnySpace {
    Ball(BergmanDirichletSpace),
    Fock(BargmannDirichletSpace),
}

impl AnySpace {
    fn build(a: &SpaceArgs) -> Result<AnySpace> {
        Ok(match a.space {
            SpaceKind::Ball => AnySpace::Ball(BergmanDirichletSpace::with_radius(
                a.n, a.alpha, a.m, a.radius,
            )?),
            SpaceKind::Fock => AnySpace::Fock(
                BargmannDirichletSpace::new(a.n, a.nu, a.m)?
                    .with_placement(placement(a.nu_denominator_variant)),
            ),
        })
    }

    fn get(&self) -> &dyn KernelSpace {
        match self {
            AnySpace::Ball(s) => s,
            AnySpace::Fock(s) => s,
        }
    }

    /// Ratio of successive series terms for large degree, used for the tail estimate.
    fn tail_ratio(&self, t: Complex64, degree: u32) -> f64 {
        match self {
            AnySpace::Ball(s) => t.norm() / (s.radius() * s.radius()),
            AnySpace::Fock(s) => s.nu() * t.norm() / (degree as f64 + 1.0),
        }
    }
}

fn space_meta(table: &mut Table, a: &SpaceArgs) {
    table.meta("space", format!("{:?}", a.space).to_lowercase());
    table.meta("n", a.n).meta("m", a.m);
    match a.space {
        SpaceKind::Ball => {
            table.meta("alpha", a.alpha).meta("radius", a.radius);
        }
        SpaceKind::Fock => {
            let p = if a.nu_denominator_variant {
                "denominator"
            } else {
                "numerator"
            };
            table.meta("nu", a.nu).meta("nu_placement", p);
        }
    }
}

fn resolve_t(
    t: &Option<String>,
    z: &Option<String>,
    w: &Option<String>,
    n: usize,
) -> Result<Complex64> {
    match (t, z, w) {
        (Some(t), _, _) => parse_complex(t),
        (None, Some(z), Some(w)) => {
            let (z, w) = (parse_point(z)?, parse_point(w)?);
            if z.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: z.dim(),
                });
            }
            inner(&z, &w)
        }
        _ => Err(bad("give either --t or both --z and --w")),
    }
}

fn cmd_kernel(a: &KernelArgs) -> Result<Outcome> {
    let space = AnySpace::build(&a.space)?;
    let t = resolve_t(&a.t, &a.z, &a.w, a.space.n)?;
    if a.tol.is_nan() || a.tol <= 0.0 {
        return Err(bad(format!("tol = {} must be positive", a.tol)));
    }
    if a.max_terms == 0 {
        return Err(bad("max_terms must be at least 1"));
    }
    let s = space.get();
    let (value, terms, estimate) = match a.method {
        Method::Closed => {
            let opts = SeriesOptions {
                tol: a.tol,
                max_terms: a.max_terms,
            };
            let v = s.kernel_with(t, opts)?;
            (v.value, v.terms_used, v.error_estimate)
        }
        Method::Series => {
            let v = s.kernel_series_at(t, a.max_degree)?;
            let last = if a.max_degree == 0 {
                v
            } else {
                v - s.kernel_series_at(t, a.max_degree - 1)?
            };
            let rho = space.tail_ratio(t, a.max_degree);
            let est = if rho < 1.0 {
                last.norm() * rho / (1.0 - rho)
            } else {
                f64::INFINITY
            };
            (v, a.max_degree as usize + 1, est)
        }
    };

    let mut table = Table::new(["method", "re", "im", "terms_used", "error_estimate"]);
    table.meta("command", "kernel");
    space_meta(&mut table, &a.space);
    table
        .meta("t_re", t.re)
        .meta("t_im", t.im)
        .meta("max_degree", a.max_degree)
        .meta("tol", format!("{:e}", a.tol))
        .meta("max_terms", a.max_terms);
    let method = format!("{:?}", a.method).to_lowercase();
    table.push(vec![
        method.into(),
        value.re.into(),
        value.im.into(),
        terms.into(),
        estimate.into(),
    ]);
    Ok(Outcome::ok(render(&table, a.out.format), 0))
}

fn cmd_norms(a: &NormsArgs) -> Result<Outcome> {
    let space = AnySpace::build(&a.space)?;
    let mut table = Table::new(["p", "degree", "coeff", "norm_sq"]);
    table.meta("command", "norms");
    space_meta(&mut table, &a.space);
    table.meta("max_degree", a.max_degree);
    for p in indices_up_to(a.space.n, a.max_degree) {
        let norm = space.get().monomial_norm_sq(&p)?;
        // gamma_{alpha,p} on the ball; norm / (pi/nu)^n for the Gaussian space.
        let coeff = match &space {
            AnySpace::Ball(s) => s.gamma_coeff(&p)?,
            AnySpace::Fock(s) => norm * s.prefactor(),
        };
        table.push(vec![
            p.to_string().into(),
            (p.degree() as usize).into(),
            coeff.into(),
            norm.into(),
        ]);
    }
    Ok(Outcome::ok(render(&table, a.out.format), 0))
}

struct Worst {
    value: f64,
    case: String,
    count: usize,
}

impl Worst {
    fn new() -> Worst {
        Worst {
            value: 0.0,
            case: String::from("-"),
            count: 0,
        }
    }

    fn record(&mut self, value: f64, case: impl FnOnce() -> String) {
        self.count += 1;
        // A NaN residual is the worst outcome and stays recorded.
        if !self.value.is_nan() && (value.is_nan() || value > self.value) {
            self.value = value;
            self.case = case();
        }
    }
}

fn random_polynomial(rng: &mut ChaCha8Rng, n: usize, degree: u32) -> Result<TaylorSeries> {
    let mut f = TaylorSeries::zero(n);
    for p in indices_up_to(n, degree) {
        let a = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        f.add_term(p, a)?;
    }
    Ok(f)
}

fn cmd_verify(a: &VerifyArgs) -> Result<Outcome> {
    let dims = parse_u32_list(&a.n)?;
    let orders = parse_u32_list(&a.m)?;
    let params = match a.space {
        SpaceKind::Ball => parse_f64_list(&a.alpha)?,
        SpaceKind::Fock => parse_f64_list(&a.nu)?,
    };
    let tol = a.tol.unwrap_or(match a.suite {
        Suite::Norms | Suite::Sobolev => 1e-8,
        Suite::Orthogonality => 1e-10,
        Suite::Identities => 1e-12,
    });
    if tol.is_nan() || tol <= 0.0 {
        return Err(bad(format!("tol = {tol} must be positive")));
    }
    let param_name = match a.space {
        SpaceKind::Ball => "alpha",
        SpaceKind::Fock => "nu",
    };

    // Build every space up front so that invalid flags produce no output.
    let mut spaces = Vec::new();
    if a.suite != Suite::Identities {
        for &n in &dims {
            let n = n as usize;
            for &x in &params {
                for &m in &orders {
                    let space = match a.space {
                        SpaceKind::Ball => AnySpace::Ball(BergmanDirichletSpace::new(n, x, m)?),
                        SpaceKind::Fock => AnySpace::Fock(
                            BargmannDirichletSpace::new(n, x, m)?
                                .with_placement(placement(a.nu_denominator_variant)),
                        ),
                    };
                    let grid = QuadratureGrid::for_space(space.get(), a.degree)?;
                    spaces.push((n, x, m, space, grid));
                }
            }
        }
    }

    let mut table = Table::new([
        "suite",
        "n",
        param_name,
        "m",
        "cases",
        "worst",
        "worst_case",
        "tol",
        "status",
    ]);
    let suite_name = format!("{:?}", a.suite).to_lowercase();
    let mut all_pass = true;
    let mut push = |table: &mut Table, n: Cell, x: Cell, m: Cell, w: &Worst| {
        let pass = w.value <= tol;
        all_pass &= pass;
        table.push(vec![
            suite_name.clone().into(),
            n,
            x,
            m,
            w.count.into(),
            w.value.into(),
            w.case.clone().into(),
            tol.into(),
            if pass { "pass" } else { "fail" }.into(),
        ]);
    };

    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    match a.suite {
        Suite::Identities => {
            let mut worst = Worst::new();
            for k in 0..=a.degree {
                for _ in 0..a.cases {
                    let (z1, z2) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
                    let scale = falling_factorial(z1 + z2, k).abs().max(1.0);
                    let r = snomial_identity_residual(z1, z2, k) / scale;
                    worst.record(r, || format!("snomial k={k} z=({z1},{z2})"));
                }
                for &n in &dims {
                    for _ in 0..a.cases {
                        let mut point = || -> Vec<Complex64> {
                            (0..n)
                                .map(|_| {
                                    Complex64::new(
                                        rng.gen_range(-1.0..1.0),
                                        rng.gen_range(-1.0..1.0),
                                    )
                                })
                                .collect()
                        };
                        let (z, w) = (point(), point());
                        let t = inner(&CVector::new(z.clone())?, &CVector::new(w.clone())?)?;
                        let fact: f64 = (1..=k).map(|j| j as f64).product();
                        let scale = (t.norm().powi(k as i32) / fact).max(1.0);
                        let r = power_sum_residual(&z, &w, k)? / scale;
                        worst.record(r, || format!("power-sum n={n} k={k}"));
                    }
                }
            }
            push(&mut table, "-".into(), "-".into(), "-".into(), &worst);
        }
        _ => {
            for (n, x, m, space, grid) in &spaces {
                let s = space.get();
                let mut worst = Worst::new();
                match a.suite {
                    Suite::Norms => {
                        for p in indices_up_to(*n, a.degree) {
                            let e = verify_monomial_norm(s, grid, &p)?;
                            worst.record(e, || p.to_string());
                        }
                    }
                    Suite::Orthogonality => {
                        let idx = indices_up_to(*n, a.degree);
                        let polys: Vec<TaylorSeries> = idx
                            .iter()
                            .map(|p| TaylorSeries::monomial(p.clone()))
                            .collect();
                        let norms = polys
                            .iter()
                            .map(|f| Ok(defining_inner(s, grid, f, f)?.re.sqrt()))
                            .collect::<Result<Vec<f64>>>()?;
                        for i in 0..idx.len() {
                            for j in i + 1..idx.len() {
                                let c = defining_inner(s, grid, &polys[i], &polys[j])?;
                                let e = c.norm() / (norms[i] * norms[j]);
                                worst.record(e, || format!("{} vs {}", idx[i], idx[j]));
                            }
                        }
                    }
                    Suite::Sobolev => {
                        for case in 0..a.cases {
                            let f = random_polynomial(&mut rng, *n, a.degree)?;
                            let quad = defining_inner(s, grid, &f, &f)?.re;
                            let coeff = s.function_norm_sq(&f)?;
                            let e = (quad - coeff).abs() / coeff;
                            worst.record(e, || format!("polynomial #{case}"));
                        }
                    }
                    Suite::Identities => unreachable!("handled above"),
                }
                push(
                    &mut table,
                    (*n).into(),
                    (*x).into(),
                    (*m as usize).into(),
                    &worst,
                );
            }
        }
    }

    table.meta("command", "verify");
    table
        .meta("suite", &suite_name)
        .meta("space", format!("{:?}", a.space).to_lowercase());
    table.meta("n", &a.n).meta("m", &a.m);
    match a.space {
        SpaceKind::Ball => table.meta("alpha", &a.alpha),
        SpaceKind::Fock => table.meta("nu", &a.nu),
    };
    table
        .meta("degree", a.degree)
        .meta("tol", format!("{tol:e}"))
        .meta("cases", a.cases)
        .meta("seed", a.seed);
    if a.nu_denominator_variant {
        table.meta("nu_placement", "denominator");
    }
    table.meta("result", if all_pass { "pass" } else { "fail" });
    Ok(Outcome::ok(
        render(&table, a.out.format),
        if all_pass { 0 } else { 1 },
    ))
}

fn cmd_sweep(a: &SweepArgs) -> Result<Outcome> {
    if !(a.nu.is_finite() && a.nu > 0.0) {
        return Err(bad(format!("nu = {} must be positive", a.nu)));
    }
    let t = resolve_t(&a.t, &a.z, &a.w, a.n)?;
    let radii = parse_f64_list(&a.radii)?;
    let records = convergence_sweep_at(a.nu, a.m, a.n, t, &radii)?;

    let base = records_table(&records);
    let mut table = Table::new([
        "R",
        "Re(K_R)",
        "Im(K_R)",
        "Re(K_inf)",
        "Im(K_inf)",
        "abs_error",
        "error_ratio",
    ]);
    table.meta("command", "sweep");
    table
        .meta("nu", a.nu)
        .meta("m", a.m)
        .meta("n", a.n)
        .meta("t_re", t.re)
        .meta("t_im", t.im)
        .meta("radii", &a.radii);
    for (i, row) in base.rows().iter().enumerate() {
        let mut row = row.clone();
        // Previous error over this one; about 4 when R doubles.
        row.push(if i == 0 {
            Cell::Text(String::new())
        } else {
            Cell::Num(records[i - 1].abs_error / records[i].abs_error)
        });
        table.push(row);
    }
    Ok(Outcome::ok(render(&table, a.out.format), 0))
}
