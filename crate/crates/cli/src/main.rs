//! `qtbranch`: compute branching coefficients, run verification sweeps, print tables.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use qtbranch::branching::{
    c_gt_pattern, c_hl, c_qt, omega, psi, run_suites, set_sk_fault, sk, trace_series, BranchTable, ChlForm,
    CqtMethod, Suite, TableParams, VerifyConfig,
};
use qtbranch::padic::{self, DEFAULT_MAX_ORDER};
use qtbranch::partition::{gt_patterns, parse_parts, shifted_shape_doubled, subpartitions, Partition, Signature};
use qtbranch::qt::T;
use qtbranch::sym::{p_poly, Basis};
use qtbranch::Error;

use output::{Format, Rendered};

#[derive(Parser)]
#[command(name = "qtbranch", version, about = "Exact branching coefficients of Macdonald trace functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one polynomial, coefficient, series or count.
    Compute {
        #[arg(value_enum)]
        what: ComputeKind,
    },
    /// Run verification sweeps; exits 1 if any case fails.
    Verify {
        /// Suite names, or `all`.
        #[arg(required = true)]
        suites: Vec<String>,
    },
    /// Print a table of coefficients or subgroup counts.
    Table {
        #[arg(value_enum)]
        what: TableKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ComputeKind {
    Macdonald,
    Hl,
    CQt,
    CHl,
    Sk,
    Psi,
    Omega,
    Trace,
    Alpha,
    Chains,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Branch,
    Gt,
    Alpha,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    PsiOmega,
    Extract,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Limit,
    Sum,
    Ratio,
    Product,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fault {
    Sk,
}

#[derive(Args)]
struct Opts {
    /// Partition or signature, comma separated (`2,1,0`).
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Lower shape; repeat for a chain of subgroup types.
    #[arg(long, global = true, allow_hyphen_values = true)]
    mu: Vec<String>,
    /// Number of variables (default: length of lambda).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Exponent in the specialization t = q^k.
    #[arg(long, global = true)]
    k: Option<u32>,
    /// Prime for subgroup counts.
    #[arg(long, global = true, default_value_t = 3)]
    p: u64,
    /// Degree cutoff D (default: |lambda| + 4).
    #[arg(long, global = true, allow_hyphen_values = true)]
    cutoff: Option<i64>,
    /// Largest partition size in a sweep.
    #[arg(long, global = true)]
    max_size: Option<i64>,
    /// Use the q = 0 coefficients.
    #[arg(long, global = true)]
    q0: bool,
    /// How `c-qt` is evaluated.
    #[arg(long, global = true, value_enum, default_value = "psi-omega")]
    method: Method,
    /// Which closed form `c-hl` evaluates.
    #[arg(long, global = true, value_enum, default_value = "product")]
    form: Form,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for the evaluation points of verification sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, hide = true, value_enum)]
    inject_fault: Option<Fault>,
}

enum Failure {
    Invalid(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_bound() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

type Outcome = Result<(Rendered, bool), Failure>;

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Invalid(msg.into())
}

impl Opts {
    fn lambda_parts(&self) -> Result<Vec<i64>, Failure> {
        let s = self.lambda.as_deref().ok_or_else(|| invalid("--lambda is required"))?;
        parse_parts(s).map_err(|e| invalid(format!("--lambda: {e}")))
    }

    fn mu_parts(&self) -> Result<Vec<i64>, Failure> {
        match self.mu.as_slice() {
            [one] => parse_parts(one).map_err(|e| invalid(format!("--mu: {e}"))),
            [] => Err(invalid("--mu is required")),
            _ => Err(invalid("--mu given more than once")),
        }
    }

    fn partition(parts: Vec<i64>, flag: &str) -> Result<Partition, Failure> {
        Partition::new(parts).map_err(|e| invalid(format!("{flag}: {e}")))
    }

    fn lambda_partition(&self) -> Result<Partition, Failure> {
        Self::partition(self.lambda_parts()?, "--lambda")
    }

    fn mu_partition(&self) -> Result<Partition, Failure> {
        Self::partition(self.mu_parts()?, "--mu")
    }

    /// `parts` padded with zeros to `len`.
    fn signature(mut parts: Vec<i64>, len: usize, flag: &str) -> Result<Signature, Failure> {
        if parts.len() > len {
            return Err(invalid(format!("{flag} has {} parts, more than {len}", parts.len())));
        }
        parts.resize(len, 0);
        Signature::new(parts).map_err(|e| invalid(format!("{flag}: {e}")))
    }

    fn n_for(&self, parts: &[i64]) -> usize {
        self.n.unwrap_or(parts.len().max(1))
    }

    /// `(lambda, mu)` as signatures of lengths `n` and `n - 1`.
    fn branching_pair(&self) -> Result<(Signature, Signature), Failure> {
        let lp = self.lambda_parts()?;
        let n = self.n_for(&lp);
        if n == 0 {
            return Err(invalid("--n must be at least 1"));
        }
        let lam = Self::signature(lp, n, "--lambda")?;
        let mu = Self::signature(self.mu_parts()?, n - 1, "--mu")?;
        Ok((lam, mu))
    }

    fn cutoff_for(&self, lam: &[i64]) -> i64 {
        self.cutoff.unwrap_or(lam.iter().sum::<i64>() + 4)
    }

    fn k_or(&self, default: u32) -> Result<u32, Failure> {
        match self.k.unwrap_or(default) {
            0 => Err(invalid("--k must be at least 1")),
            k => Ok(k),
        }
    }
}

fn max_group() -> Result<u64, Failure> {
    match std::env::var("QTBRANCH_MAX_GROUP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| invalid(format!("QTBRANCH_MAX_GROUP={v:?} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn method(m: Method) -> CqtMethod {
    match m {
        Method::PsiOmega => CqtMethod::PsiOmega,
        Method::Extract => CqtMethod::Extract,
    }
}

fn form(f: Form) -> ChlForm {
    match f {
        Form::Limit => ChlForm::Limit,
        Form::Sum => ChlForm::Sum,
        Form::Ratio => ChlForm::Ratio,
        Form::Product => ChlForm::Product,
    }
}

fn meta(command: &str, fields: Vec<(&str, Value)>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    for (k, v) in fields {
        m.insert(k.into(), v);
    }
    m
}

fn compute(what: ComputeKind, o: &Opts) -> Outcome {
    let name = ComputeKind::to_possible_value(&what).expect("no skipped variants").get_name().to_string();
    let cmd = format!("compute {name}");
    let rendered = match what {
        ComputeKind::Macdonald | ComputeKind::Hl => {
            let lam = o.lambda_partition()?;
            let n = o.n.unwrap_or(lam.len().max(1));
            let basis = if matches!(what, ComputeKind::Hl) { Basis::HallLittlewood } else { Basis::Macdonald };
            let f = p_poly(&lam, n, basis)?;
            Rendered::laurent(meta(&cmd, vec![("lambda", json!(lam.parts())), ("n", json!(n))]), f)
        }
        ComputeKind::CQt | ComputeKind::CHl => {
            let (lam, mu) = o.branching_pair()?;
            let mut fields = vec![("lambda", json!(lam.parts())), ("mu", json!(mu.parts())), ("n", json!(lam.len()))];
            let c = if matches!(what, ComputeKind::CQt) {
                let m = method(o.method);
                let cutoff = o.cutoff_for(lam.parts());
                fields.push(("method", json!(Method::to_possible_value(&o.method).unwrap().get_name())));
                if m == CqtMethod::Extract {
                    fields.push(("cutoff", json!(cutoff)));
                }
                c_qt(&lam, &mu, m, Some(cutoff))?
            } else {
                fields.push(("form", json!(Form::to_possible_value(&o.form).unwrap().get_name())));
                c_hl(&lam, &mu, form(o.form))?
            };
            Rendered::qqt(meta(&cmd, fields), c)
        }
        ComputeKind::Sk | ComputeKind::Psi => {
            let (lam, mu) = (o.lambda_partition()?, o.mu_partition()?);
            let c = if matches!(what, ComputeKind::Sk) { sk(&lam, &mu, T) } else { psi(&lam, &mu) };
            Rendered::qqt(meta(&cmd, vec![("lambda", json!(lam.parts())), ("mu", json!(mu.parts()))]), c)
        }
        ComputeKind::Omega => {
            let lp = o.lambda_parts()?;
            let n = o.n_for(&lp);
            let beta = Opts::signature(lp, n, "--lambda")?;
            let mu = Opts::signature(o.mu_parts()?, n, "--mu")?;
            let d = o.cutoff_for(beta.parts());
            let c = omega(&beta, &mu, d, true)?;
            let fields = vec![("lambda", json!(beta.parts())), ("mu", json!(mu.parts())), ("cutoff", json!(d))];
            Rendered::qqt(meta(&cmd, fields), c)
        }
        ComputeKind::Trace => {
            let lp = o.lambda_parts()?;
            let n = o.n_for(&lp);
            let lam = Opts::signature(lp, n, "--lambda")?;
            let d = o.cutoff_for(lam.parts());
            let tr = trace_series(&lam, d, o.q0)?;
            let fields = vec![("lambda", json!(lam.parts())), ("cutoff", json!(d)), ("q0", json!(o.q0))];
            Rendered::trace(meta(&cmd, fields), tr)
        }
        ComputeKind::Alpha => {
            let (lam, mu) = (o.lambda_partition()?, o.mu_partition()?);
            let bound = max_group()?;
            let a = padic::alpha(&lam, &mu, o.p, bound)?;
            let fields = vec![
                ("lambda", json!(lam.parts())),
                ("mu", json!(mu.parts())),
                ("p", json!(o.p)),
                ("max_group", json!(bound)),
            ];
            Rendered::count(meta(&cmd, fields), a)
        }
        ComputeKind::Chains => {
            let lam = o.lambda_partition()?;
            let types = o
                .mu
                .iter()
                .map(|s| Opts::partition(parse_parts(s).map_err(|e| invalid(format!("--mu: {e}")))?, "--mu"))
                .collect::<Result<Vec<_>, _>>()?;
            let bound = max_group()?;
            let c = padic::count_chains(&lam, &types, o.p, bound)?;
            let fields = vec![
                ("lambda", json!(lam.parts())),
                ("mu", json!(types.iter().map(|t| t.parts().to_vec()).collect::<Vec<_>>())),
                ("p", json!(o.p)),
                ("max_group", json!(bound)),
            ];
            Rendered::count(meta(&cmd, fields), c)
        }
    };
    Ok((rendered, true))
}

fn table(what: TableKind, o: &Opts) -> Outcome {
    match what {
        TableKind::Branch => {
            let lp = o.lambda_parts()?;
            let n = o.n_for(&lp);
            let lam = Opts::signature(lp, n, "--lambda")?;
            let d = o.cutoff_for(lam.parts());
            let (params, label) = match (o.q0, o.k) {
                (true, Some(_)) => return Err(invalid("--q0 and --k are exclusive")),
                (true, None) => (TableParams::Q0, json!("q0")),
                (false, Some(_)) => (TableParams::TEqQk { k: o.k_or(1)? }, json!(format!("t=q^{}", o.k_or(1)?))),
                (false, None) => (TableParams::Generic, json!("generic")),
            };
            let t = BranchTable::build(&lam, d, params)?;
            let fields = vec![("lambda", json!(lam.parts())), ("cutoff", json!(d)), ("params", label)];
            Ok((Rendered::branch(meta("table branch", fields), t), true))
        }
        TableKind::Gt => {
            let lp = o.lambda_parts()?;
            let n = o.n_for(&lp);
            let lam = Opts::signature(lp, n, "--lambda")?;
            let k = o.k_or(1)?;
            let rows = gt_patterns(&shifted_shape_doubled(&lam, k))
                .into_iter()
                .map(|pat| Ok((pat.display_rows(), c_gt_pattern(&pat, k)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            let fields = vec![("lambda", json!(lam.parts())), ("n", json!(n)), ("k", json!(k))];
            Ok((Rendered::gt(meta("table gt", fields), rows), true))
        }
        TableKind::Alpha => {
            let lam = o.lambda_partition()?;
            let bound = max_group()?;
            let counts = padic::type_counts(&lam, o.p, bound)?;
            let mut rows = Vec::new();
            for mu in subpartitions(&lam) {
                let got = counts.get(&mu).copied().unwrap_or(0);
                let want = padic::predicted_alpha(&lam, &mu, o.p)?;
                rows.push(output::AlphaRow {
                    lambda: lam.to_string(),
                    mu: mu.to_string(),
                    p: o.p,
                    alpha: got,
                    matches: want.is_integer() && want.to_integer() == got.into(),
                    predicted: want.to_string(),
                });
            }
            let ok = rows.iter().all(|r| r.matches);
            let fields = vec![("lambda", json!(lam.parts())), ("p", json!(o.p)), ("max_group", json!(bound))];
            Ok((Rendered::alpha(meta("table alpha", fields), rows), ok))
        }
    }
}

fn verify(names: &[String], o: &Opts) -> Outcome {
    let mut suites = Vec::new();
    for name in names {
        if name == "all" {
            suites.extend(Suite::ALL);
        } else {
            suites.push(name.parse::<Suite>().map_err(|e| invalid(e.to_string()))?);
        }
    }
    suites.dedup();
    let cfg = VerifyConfig {
        max_size: o.max_size,
        n: o.n,
        k: o.k,
        cutoff: o.cutoff,
        p: o.p,
        max_order: max_group()?,
        seed: o.seed,
        ..VerifyConfig::default()
    };
    let reports = run_suites(&suites, &cfg);
    let ok = reports.iter().all(|r| r.passed());
    let fields = vec![
        ("suites", json!(suites.iter().map(|s| s.name()).collect::<Vec<_>>())),
        ("config", serde_json::to_value(&cfg).expect("plain data")),
    ];
    Ok((Rendered::reports(meta("verify", fields), reports), ok))
}

fn run(cli: &Cli) -> Outcome {
    if let Some(jobs) = cli.opts.jobs {
        if jobs == 0 {
            return Err(invalid("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| invalid(e.to_string()))?;
    }
    if let Some(Fault::Sk) = cli.opts.inject_fault {
        set_sk_fault(true);
    }
    match &cli.command {
        Command::Compute { what } => compute(*what, &cli.opts),
        Command::Verify { suites } => verify(suites, &cli.opts),
        Command::Table { what } => table(*what, &cli.opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((rendered, ok)) => {
            let text = match rendered.render(cli.opts.format) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let written = match &cli.opts.out {
                Some(path) => std::fs::write(path, text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
