mod sweep;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use bruhat_sl2::diagnostics::{
    diamond_complete, forbidden_swap_violations, permutation_path, sign_grid, sign_grid_violations,
};
use bruhat_sl2::hasse::{hasse_export, hasse_graph, GraphFormat, Order};
use bruhat_sl2::interval::{weak_leq, DEFAULT_MAX_ELEMENTS};
use bruhat_sl2::padded::chain_sum_with;
use bruhat_sl2::schubert::{macdonald_sum, principal_specialization, schubert};
use bruhat_sl2::sl2::verify_sl2_with;
use bruhat_sl2::sperner::certify_sperner_with;
use bruhat_sl2::{Error, IntervalConfig, MultiPolynomial, Permutation, Verdict, WeakInterval};

const EXIT_REFUTED: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_NOT_132_AVOIDING: u8 = 65;
const EXIT_MEMBERSHIP: u8 = 66;
const EXIT_IO: u8 = 74;

/// Largest n accepted in an --n range; enumeration walks all of S_n.
const MAX_SWEEP_N: usize = 10;

#[derive(Parser)]
#[command(name = "bruhat-sl2", version, about = "Exact sl2 operators, Sperner certificates and Schubert specializations on weak order intervals")]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for sweeps (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Largest interval to build before giving up.
    #[arg(long, global = true, env = "BRUHAT_SL2_MAX_INTERVAL")]
    max_interval: Option<usize>,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Check [E,F] = H, [H,E] = 2E, [H,F] = -2F on [e, pi]_R.
    #[command(name = "verify-sl2")]
    VerifySl2(Targets),
    /// Certify the strong Sperner property of [e, pi]_R.
    Sperner {
        #[command(flatten)]
        targets: Targets,
        /// Cross-check against antichain matching and brute force.
        #[arg(long)]
        oracle: bool,
    },
    /// Schubert polynomial and principal specializations of a permutation.
    Schubert(SchubertArgs),
    /// Sign grids, permutation paths and diamond completions.
    Diag {
        #[command(subcommand)]
        which: Diag,
    },
    /// Hasse diagram of [e, pi]_R.
    Hasse {
        #[arg(long)]
        pi: Permutation,
        #[arg(long, value_enum, default_value = "weak")]
        order: OrderArg,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Targets {
    /// Every 132-avoiding top with n in this range: `4`, `2..6` or `2-6`.
    #[arg(long)]
    n: Option<NRange>,
    /// A single top, comma separated.
    #[arg(long)]
    pi: Option<Permutation>,
}

#[derive(Args)]
struct SchubertArgs {
    #[arg(long)]
    perm: Permutation,
    /// Print the polynomial.
    #[arg(long)]
    poly: bool,
    /// Principal specialization from the polynomial.
    #[arg(long)]
    spec: bool,
    /// Principal specialization from reduced words.
    #[arg(long)]
    macdonald: bool,
    /// Principal specialization from weighted strong chains up to this top.
    #[arg(long, value_name = "PI")]
    chain_sum: Option<Permutation>,
    /// All three specializations, checked for equality.
    #[arg(long, value_name = "PI")]
    all_three: Option<Permutation>,
}

#[derive(Subcommand)]
enum Diag {
    SignGrid {
        #[command(flatten)]
        pair: Pair,
    },
    Path {
        #[command(flatten)]
        pair: Pair,
        /// Column value whose path is traced.
        #[arg(long)]
        col: u8,
    },
    Diamond {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        tau: Permutation,
    },
}

#[derive(Args)]
struct Pair {
    #[arg(long)]
    pi: Permutation,
    #[arg(long)]
    sigma: Permutation,
    /// Verify the associated invariants; exit 2 on any violation.
    #[arg(long)]
    check: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Weak,
    Strong,
}

#[derive(Clone, Debug)]
struct NRange(RangeInclusive<usize>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a size"));
        let (lo, hi) = match s.split_once("..=").or_else(|| s.split_once("..")).or_else(|| s.split_once('-')) {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if lo == 0 || lo > hi || hi > MAX_SWEEP_N {
            return Err(format!("range `{s}` must satisfy 1 <= lo <= hi <= {MAX_SWEEP_N}"));
        }
        Ok(NRange(lo..=hi))
    }
}

/// A failure that ends the run with a specific exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Non132Avoiding(_) => EXIT_NOT_132_AVOIDING,
            Error::NotBelowPi { .. } | Error::NotInInterval { .. } => EXIT_MEMBERSHIP,
            Error::IntervalTooLarge { .. } => EXIT_INCONCLUSIVE,
            Error::DiamondMismatch { .. } => EXIT_REFUTED,
            Error::InexactDivision { .. } => EXIT_REFUTED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

struct Context {
    format: Option<Format>,
    config: IntervalConfig,
    pool: rayon::ThreadPool,
    out: Box<dyn Write>,
}

impl Context {
    fn format(&self, default: Format, allowed: &[Format], command: &str) -> Result<Format, Failure> {
        let f = self.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            Err(usage(format!("{command} does not support --format {}", format_name(f))))
        }
    }

    fn line(&mut self, text: &str) -> Result<(), Failure> {
        writeln!(self.out, "{text}")?;
        self.out.flush()?;
        Ok(())
    }

    fn json(&mut self, value: &impl Serialize) -> Result<(), Failure> {
        let text = serde_json::to_string(value).expect("plain data serializes");
        self.line(&text)
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Table => "table",
    }
}

fn tops(range: &NRange) -> Result<Vec<Permutation>, Failure> {
    let mut out = Vec::new();
    for n in range.0.clone() {
        out.extend(Permutation::avoiding_132(n)?);
    }
    Ok(out)
}

fn same_size(a: &Permutation, b: &Permutation) -> Result<(), Failure> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        }
        .into());
    }
    Ok(())
}

#[derive(Serialize, Default)]
struct Summary {
    command: &'static str,
    total: usize,
    passed: usize,
    failed: usize,
    inconclusive: usize,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

#[derive(Serialize)]
struct ErrorLine {
    pi: Permutation,
    error: String,
}

impl Summary {
    fn exit_code(&self) -> u8 {
        if self.failed > 0 {
            EXIT_REFUTED
        } else if self.inconclusive > 0 {
            EXIT_INCONCLUSIVE
        } else {
            0
        }
    }

    fn table(&self) -> String {
        format!(
            "total {}  passed {}  failed {}  inconclusive {}",
            self.total, self.passed, self.failed, self.inconclusive
        )
    }
}

enum Status {
    Passed,
    Failed,
    Inconclusive,
}

/// Runs `job` over every top, emitting one record per top and a summary.
fn run_sweep<R: Serialize + Send>(
    ctx: &mut Context,
    command: &'static str,
    items: &[Permutation],
    job: impl Fn(&Permutation) -> Result<R, Error> + Sync,
    classify: impl Fn(&R) -> (Status, String),
) -> Result<u8, Failure> {
    let format = ctx.format(Format::Json, &[Format::Json, Format::Table], command)?;
    let mut summary = Summary {
        command,
        ..Summary::default()
    };
    let mut io_error = None;
    let (pool, out) = (&ctx.pool, &mut ctx.out);
    sweep::ordered(
        pool,
        items,
        |pi| (pi.clone(), job(pi)),
        |(pi, result)| {
            summary.total += 1;
            let (status, text) = match &result {
                Ok(record) => classify(record),
                Err(Error::IntervalTooLarge { .. }) => (Status::Inconclusive, String::new()),
                Err(_) => (Status::Failed, String::new()),
            };
            match status {
                Status::Passed => summary.passed += 1,
                Status::Failed => summary.failed += 1,
                Status::Inconclusive => summary.inconclusive += 1,
            }
            let line = match (format, &result) {
                (Format::Table, Ok(_)) => format!("{pi}\t{text}"),
                (Format::Table, Err(e)) => format!("{pi}\terror: {e}"),
                (_, Ok(record)) => serde_json::to_string(record).expect("plain data serializes"),
                (_, Err(e)) => serde_json::to_string(&ErrorLine {
                    pi: pi.clone(),
                    error: e.to_string(),
                })
                .expect("plain data serializes"),
            };
            if io_error.is_none() {
                if let Err(e) = writeln!(out, "{line}").and_then(|_| out.flush()) {
                    io_error = Some(e);
                }
            }
        },
    );
    if let Some(e) = io_error {
        return Err(e.into());
    }
    match format {
        Format::Table => ctx.line(&summary.table())?,
        _ => ctx.json(&SummaryLine { summary: &summary })?,
    }
    Ok(summary.exit_code())
}

fn cmd_verify_sl2(ctx: &mut Context, targets: &Targets) -> Result<u8, Failure> {
    let config = ctx.config;
    if let Some(pi) = &targets.pi {
        let format = ctx.format(Format::Json, &[Format::Json, Format::Table], "verify-sl2")?;
        let report = verify_sl2_with(pi, &config)?;
        match format {
            Format::Table => ctx.line(&format!("{pi}\t{}", if report.passed() { "pass" } else { "fail" }))?,
            _ => ctx.json(&report)?,
        }
        return Ok(if report.passed() { 0 } else { EXIT_REFUTED });
    }
    let items = tops(targets.n.as_ref().expect("clap requires --n or --pi"))?;
    run_sweep(
        ctx,
        "verify-sl2",
        &items,
        |pi| verify_sl2_with(pi, &config),
        |report| {
            if report.passed() {
                (Status::Passed, "pass".into())
            } else {
                (Status::Failed, "fail".into())
            }
        },
    )
}

fn verdict_status(cert: &bruhat_sl2::SpernerCertificate) -> (Status, String) {
    let oracle_ok = cert.oracle.as_ref().map(|o| o.agrees).unwrap_or(true);
    match cert.verdict {
        Verdict::Certified if oracle_ok => (Status::Passed, "certified".into()),
        Verdict::Certified => (Status::Failed, "certified, oracle disagrees".into()),
        Verdict::Refuted => (Status::Failed, "refuted".into()),
        Verdict::Inconclusive => (Status::Inconclusive, "inconclusive".into()),
    }
}

fn cmd_sperner(ctx: &mut Context, targets: &Targets, oracle: bool) -> Result<u8, Failure> {
    let config = ctx.config;
    if let Some(pi) = &targets.pi {
        let format = ctx.format(Format::Json, &[Format::Json, Format::Table], "sperner")?;
        let cert = certify_sperner_with(pi, &config, oracle)?;
        let (status, text) = verdict_status(&cert);
        match format {
            Format::Table => ctx.line(&format!("{pi}\t{text}"))?,
            _ => ctx.json(&cert)?,
        }
        return Ok(match status {
            Status::Passed => 0,
            Status::Failed => EXIT_REFUTED,
            Status::Inconclusive => EXIT_INCONCLUSIVE,
        });
    }
    let items = tops(targets.n.as_ref().expect("clap requires --n or --pi"))?;
    run_sweep(ctx, "sperner", &items, |pi| certify_sperner_with(pi, &config, oracle), verdict_status)
}

#[derive(Serialize)]
struct SchubertOutput {
    sigma: Permutation,
    #[serde(skip_serializing_if = "Option::is_none")]
    polynomial: Option<MultiPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    principal_specialization: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    macdonald: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pi: Option<Permutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chain_sum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn cmd_schubert(ctx: &mut Context, args: &SchubertArgs) -> Result<u8, Failure> {
    let format = ctx.format(Format::Table, &[Format::Json, Format::Table], "schubert")?;
    if args.chain_sum.is_some() && args.all_three.is_some() {
        return Err(usage("--chain-sum and --all-three each name a top; give only one"));
    }
    let sigma = &args.perm;
    let top = args.all_three.as_ref().or(args.chain_sum.as_ref());
    if let Some(pi) = top {
        same_size(sigma, pi)?;
    }
    let want_spec = args.spec || args.all_three.is_some();
    let want_macdonald = args.macdonald || args.all_three.is_some();
    let nothing_else = !want_spec && !want_macdonald && top.is_none();
    let mut output = SchubertOutput {
        sigma: sigma.clone(),
        polynomial: (args.poly || nothing_else).then(|| (*schubert(sigma)).clone()),
        principal_specialization: None,
        macdonald: None,
        pi: top.cloned(),
        chain_sum: None,
        agree: None,
    };
    let spec = want_spec.then(|| principal_specialization(sigma));
    let macdonald = if want_macdonald { Some(macdonald_sum(sigma)?) } else { None };
    let chain = match top {
        Some(pi) => Some(chain_sum_with(sigma, pi, &ctx.config)?),
        None => None,
    };
    let mut code = 0;
    if args.all_three.is_some() {
        let agree = spec == macdonald && spec == chain;
        output.agree = Some(agree);
        if !agree {
            code = EXIT_REFUTED;
        }
    }
    output.principal_specialization = spec.as_ref().map(BigInt::to_string);
    output.macdonald = macdonald.as_ref().map(BigInt::to_string);
    output.chain_sum = chain.as_ref().map(BigInt::to_string);

    match format {
        Format::Json => ctx.json(&output)?,
        _ => {
            let mut rows: Vec<(&str, String)> = Vec::new();
            if let Some(p) = &output.polynomial {
                rows.push(("polynomial", p.to_string()));
            }
            if let Some(v) = &output.principal_specialization {
                rows.push(("principal_specialization", v.clone()));
            }
            if let Some(v) = &output.macdonald {
                rows.push(("macdonald", v.clone()));
            }
            if let Some(v) = &output.chain_sum {
                rows.push(("chain_sum", v.clone()));
            }
            if let Some(a) = output.agree {
                rows.push(("agree", a.to_string()));
            }
            if rows.len() == 1 {
                ctx.line(&rows[0].1)?;
            } else {
                for (k, v) in rows {
                    ctx.line(&format!("{k}: {v}"))?;
                }
            }
        }
    }
    Ok(code)
}

fn check_pair(pair: &Pair) -> Result<(), Failure> {
    same_size(&pair.sigma, &pair.pi)?;
    if !pair.pi.avoids_132() {
        return Err(Error::Non132Avoiding(pair.pi.clone()).into());
    }
    if !weak_leq(&pair.sigma, &pair.pi)? {
        return Err(Error::NotInInterval {
            sigma: pair.sigma.clone(),
            pi: pair.pi.clone(),
        }
        .into());
    }
    Ok(())
}

#[derive(Serialize)]
struct Checked<T: Serialize> {
    #[serde(flatten)]
    body: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    violations: Option<Vec<String>>,
}

fn cmd_diag(ctx: &mut Context, which: &Diag) -> Result<u8, Failure> {
    let format = ctx.format(Format::Table, &[Format::Json, Format::Table], "diag")?;
    let (rendered, json, violations) = match which {
        Diag::SignGrid { pair } => {
            check_pair(pair)?;
            let grid = sign_grid(&pair.sigma, &pair.pi)?;
            let violations = if pair.check {
                Some(sign_grid_violations(&pair.sigma, &pair.pi)?)
            } else {
                None
            };
            let json = serde_json::to_string(&Checked {
                body: &grid,
                violations: violations.clone(),
            });
            (grid.render(), json, violations)
        }
        Diag::Path { pair, col } => {
            check_pair(pair)?;
            let path = permutation_path(&pair.sigma, &pair.pi, *col)?;
            let violations = if pair.check {
                let grid = sign_grid(&pair.sigma, &pair.pi)?;
                let mut v = forbidden_swap_violations(&pair.sigma, &pair.pi)?;
                v.extend(path.lemma_violations(&grid));
                Some(v)
            } else {
                None
            };
            let mut text = format!(
                "pivot position {} at ({}, {}); lines x={}, y={}\n",
                path.pivot_position, path.pivot_x, path.pivot_y, path.pivot_x, path.pivot_y
            );
            for (k, p) in path.points.iter().enumerate() {
                text.push_str(&format!("{:>2}: ({}, {}) {:?}\n", k + 1, p.x, p.y, p.quadrant));
            }
            let json = serde_json::to_string(&Checked {
                body: &path,
                violations: violations.clone(),
            });
            (text, json, violations)
        }
        Diag::Diamond { pair, tau } => {
            check_pair(pair)?;
            check_pair(&Pair {
                pi: pair.pi.clone(),
                sigma: tau.clone(),
                check: false,
            })?;
            let (text, diamond, violations) = match diamond_complete(&pair.sigma, tau, &pair.pi) {
                Ok(Some(d)) => (
                    format!(
                        "alpha {} = sigma*s{}\nbeta {} = sigma*t({},{})\nwt(beta, sigma) {}\nwt(tau, alpha) {}\n",
                        d.alpha, d.m, d.beta, d.i, d.j, d.weight_beta_sigma, d.weight_tau_alpha
                    ),
                    Some(d),
                    pair.check.then(Vec::new),
                ),
                Ok(None) => ("no completion\n".to_string(), None, pair.check.then(Vec::new)),
                Err(e @ Error::DiamondMismatch { .. }) => {
                    (format!("{e}\n"), None, Some(vec![e.to_string()]))
                }
                Err(e) => return Err(e.into()),
            };
            let json = serde_json::to_string(&Checked {
                body: serde_json::json!({ "sigma": pair.sigma, "tau": tau, "pi": pair.pi, "diamond": diamond }),
                violations: violations.clone(),
            });
            (text, json, violations)
        }
    };
    match format {
        Format::Json => ctx.line(&json.expect("plain data serializes"))?,
        _ => {
            ctx.line(rendered.trim_end())?;
            if let Some(v) = &violations {
                if v.is_empty() {
                    ctx.line("check: ok")?;
                }
                for line in v {
                    ctx.line(&format!("violation: {line}"))?;
                }
            }
        }
    }
    Ok(if violations.is_some_and(|v| !v.is_empty()) { EXIT_REFUTED } else { 0 })
}

fn cmd_hasse(ctx: &mut Context, pi: &Permutation, order: OrderArg) -> Result<u8, Failure> {
    let format = ctx.format(Format::Json, &[Format::Json, Format::Dot, Format::Table], "hasse")?;
    let interval = WeakInterval::build_with(pi, &ctx.config)?;
    let order = match order {
        OrderArg::Weak => Order::Weak,
        OrderArg::Strong => Order::Strong,
    };
    let text = match format {
        Format::Json => hasse_export(&interval, order, GraphFormat::Json),
        Format::Dot => hasse_export(&interval, order, GraphFormat::Dot),
        Format::Table => {
            let graph = hasse_graph(&interval, order);
            graph
                .edges
                .iter()
                .map(|e| format!("{} -> {}", graph.elements[e.src], graph.elements[e.dst]))
                .collect::<Vec<_>>()
                .join("\n")
        }
    };
    ctx.line(text.trim_end())?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(usage("--workers must be at least 1"));
        }
        builder = builder.num_threads(w);
    }
    let pool = builder.build().map_err(|e| usage(e.to_string()))?;
    let out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    let mut ctx = Context {
        format: cli.format,
        config: IntervalConfig {
            max_elements: cli.max_interval.unwrap_or(DEFAULT_MAX_ELEMENTS),
        },
        pool,
        out,
    };
    match &cli.command {
        Command::VerifySl2(targets) => cmd_verify_sl2(&mut ctx, targets),
        Command::Sperner { targets, oracle } => cmd_sperner(&mut ctx, targets, *oracle),
        Command::Schubert(args) => cmd_schubert(&mut ctx, args),
        Command::Diag { which } => cmd_diag(&mut ctx, which),
        Command::Hasse { pi, order } => cmd_hasse(&mut ctx, pi, *order),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
