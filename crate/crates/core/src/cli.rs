//! Batch driver.
//!
//! Exit codes: `0` pass, `1` assertion failure, `2` usage or configuration error.
//! Reports go to `--out` (or stdout); the one-line summary goes to stderr.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Deserialize;

use crate::asymptotics::{
    conjecture_scan, hayman_index, ratio_convergence, zalcman_equivalence_audit, AuditGrids, ClosedForm, Predicate,
    ScanPath,
};
use crate::classes::{ClassSpec, ClassTag, Phases};
use crate::error::{invalid, Error, Result};
use crate::functional::{regime, sharp_bound, sum_form_check, zalcman, BoundReport, FunctionalSpec};
use crate::grid::{parse_complex, parse_indices, LambdaGrid, DEFAULT_LAMBDA_GRID};
use crate::report::{timestamp, Cell, Format, Table, BOUND_COLUMNS, HAYMAN_COLUMNS, SCAN_COLUMNS};
use crate::rng::stream;
use crate::search::{maximize_functional, SearchConfig};
use crate::series::TruncatedSeries;

/// Samples whose membership residual exceeds this are excluded from slack statistics.
pub const RESIDUAL_GATE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Verify,
    Extremal,
    Search,
    Scan,
    Hayman,
    Ratio,
    Audit,
}

impl Command {
    /// Default `--tol`.
    pub fn default_tolerance(self) -> f64 {
        match self {
            Command::Verify | Command::Scan => 1e-9,
            Command::Extremal | Command::Audit => 1e-12,
            Command::Search => 1e-6,
            Command::Hayman | Command::Ratio => 1e-3,
        }
    }
}

const AFTER_HELP: &str = "\
λ grids: \"r1,r2,... x K\" takes every radius times K equally spaced angles (radius 0 gives one
point) and appends the class's critical values: 0, 1, and 8 points on each of the circles
ρ·(critical circle), ρ ∈ {0.99, 1, 1.01}. The critical circle is |λ| = n²/(2n−1) (Hurwitz, m = n),
|λ| = 4mn/(m+n−1) (Hurwitz, m ≠ n), |1 − 2(m+n−1)λ/(mn)| = 1 (nw), |1 − λ| = 1 (hull_convex),
|λA_mA_n − A_{m+n−1}| = A_{m+n−1} (hull_convex_alpha), |1 − mnλ/(m+n−1)| = 1 (hull_starlike).
A comma-separated list of complex literals (\"2,1-0.5i,i\") is used as given.

Index lists: \"3\", \"2..5\" or \"2,4,7\".

Exit codes: 0 pass, 1 assertion failure, 2 usage error.";

/// Command-line flags; every one may also be given in the `--config` JSON file.
#[derive(Debug, Clone, Default, Parser)]
#[command(name = "zalcman", version, about = "Sharp-bound verification for λ a_m a_n − a_{m+n−1}", after_help = AFTER_HELP)]
pub struct Flags {
    #[arg(long, value_enum)]
    pub command: Option<Command>,
    /// hurwitz, nw, hull_convex, hull_convex_alpha, hull_starlike, koebe
    #[arg(long)]
    pub class: Option<String>,
    /// Order α < 1 for hull_convex_alpha.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda_grid: Option<String>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Truncation order; defaults to 2·max(m, n) (2·(2n−1) for scans).
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub format: Option<String>,
    /// Omit the timestamp header.
    #[arg(long)]
    pub deterministic: bool,
    /// JSON file with the same keys as the flags (kebab-case).
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub restarts: Option<usize>,
    /// Coordinate sweeps per restart.
    #[arg(long)]
    pub max_iter: Option<usize>,
    /// identity, koebe, half_plane, odd_half_plane (hayman, ratio).
    #[arg(long)]
    pub function: Option<String>,
    /// B, C or D (scan).
    #[arg(long)]
    pub predicate: Option<String>,
    /// t for B, r for C and D (scan).
    #[arg(long)]
    pub param: Option<f64>,
    /// "k=value": overwrite a_k of sample 0 (verify).
    #[arg(long, allow_hyphen_values = true)]
    pub inject: Option<String>,
    /// Audit a single pair instead of random ones.
    #[arg(long, allow_hyphen_values = true)]
    pub a_n: Option<String>,
    #[arg(long = "a-2n1", allow_hyphen_values = true)]
    pub a_2n1: Option<String>,
    /// Number of radii 1 − 2^{−j} (hayman).
    #[arg(long)]
    pub levels: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct FileConfig {
    command: Option<Command>,
    class: Option<String>,
    alpha: Option<f64>,
    #[serde(default, deserialize_with = "index_spec")]
    m: Option<String>,
    #[serde(default, deserialize_with = "index_spec")]
    n: Option<String>,
    lambda_grid: Option<String>,
    samples: Option<usize>,
    seed: Option<u64>,
    order: Option<usize>,
    tol: Option<f64>,
    out: Option<PathBuf>,
    format: Option<String>,
    deterministic: Option<bool>,
    restarts: Option<usize>,
    max_iter: Option<usize>,
    function: Option<String>,
    predicate: Option<String>,
    param: Option<f64>,
    inject: Option<String>,
    a_n: Option<String>,
    #[serde(rename = "a-2n1")]
    a_2n1: Option<String>,
    levels: Option<usize>,
}

/// Accepts `"2..5"` as well as a bare number for `m` and `n`.
fn index_spec<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Option<String>, D::Error> {
    Ok(match Option::<serde_json::Value>::deserialize(d)? {
        None => None,
        Some(serde_json::Value::String(s)) => Some(s),
        Some(serde_json::Value::Number(n)) => Some(n.to_string()),
        Some(other) => return Err(serde::de::Error::custom(format!("bad index spec {other}"))),
    })
}

impl Flags {
    /// Fills unset flags from `cfg`.
    fn merge(mut self, cfg: FileConfig) -> Self {
        macro_rules! fill {
            ($($f:ident),*) => { $( if self.$f.is_none() { self.$f = cfg.$f; } )* };
        }
        fill!(
            command, class, alpha, m, n, lambda_grid, samples, seed, order, tol, out, format, restarts, max_iter,
            function, predicate, param, inject, a_n, a_2n1, levels
        );
        self.deterministic |= cfg.deterministic.unwrap_or(false);
        self
    }
}

/// Fully resolved run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub class: Option<ClassSpec>,
    pub ms: Vec<usize>,
    pub ns: Vec<usize>,
    pub lambda_grid: Option<LambdaGrid>,
    pub samples: usize,
    pub seed: u64,
    pub order: Option<usize>,
    pub tol: f64,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub deterministic: bool,
    pub restarts: usize,
    pub max_iter: usize,
    pub function: ClosedForm,
    pub predicate: Option<Predicate>,
    pub inject: Option<(usize, Complex64)>,
    pub pair: Option<(Complex64, Complex64)>,
    pub levels: usize,
}

impl RunConfig {
    pub fn from_flags(flags: Flags) -> Result<Self> {
        let flags = match &flags.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| invalid(format!("cannot read config {}: {e}", path.display())))?;
                let cfg: FileConfig =
                    serde_json::from_str(&text).map_err(|e| invalid(format!("bad config {}: {e}", path.display())))?;
                flags.merge(cfg)
            }
            None => flags,
        };
        let command = flags.command.ok_or_else(|| invalid("--command is required"))?;
        let class = flags
            .class
            .as_deref()
            .map(|c| ClassSpec::from_tag(c.parse::<ClassTag>()?, flags.alpha))
            .transpose()?;
        let default_n = match command {
            Command::Scan => "2..8",
            Command::Ratio => "2..60",
            Command::Audit => "2..10",
            _ => "2",
        };
        let ms = parse_indices(flags.m.as_deref().unwrap_or("2"))?;
        let ns = parse_indices(flags.n.as_deref().unwrap_or(default_n))?;
        if ms.is_empty() || ns.is_empty() {
            return Err(invalid("empty index list"));
        }
        let lambda_grid = flags.lambda_grid.as_deref().map(LambdaGrid::parse).transpose()?;
        let samples = flags.samples.unwrap_or(1000);
        if samples == 0 {
            return Err(invalid("--samples must be at least 1"));
        }
        let tol = flags.tol.unwrap_or(command.default_tolerance());
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(invalid(format!("--tol {tol} must be positive")));
        }
        let predicate = match (&flags.predicate, command) {
            (Some(p), _) => Some(Predicate::parse(p, flags.param.unwrap_or(0.0))?),
            (None, Command::Scan) => Some(Predicate::B(flags.param.unwrap_or(0.0))),
            (None, _) => None,
        };
        let inject = flags
            .inject
            .as_deref()
            .map(|s| {
                let (k, v) = s
                    .split_once('=')
                    .ok_or_else(|| invalid(format!("--inject expects k=value, got '{s}'")))?;
                let k: usize = k.trim().parse().map_err(|_| invalid(format!("bad index in --inject '{s}'")))?;
                Ok::<_, Error>((k, parse_complex(v)?))
            })
            .transpose()?;
        let pair = match (&flags.a_n, &flags.a_2n1) {
            (Some(a), Some(b)) => Some((parse_complex(a)?, parse_complex(b)?)),
            (None, None) => None,
            _ => return Err(invalid("--a-n and --a-2n1 must be given together")),
        };
        let levels = flags.levels.unwrap_or(20);
        if levels == 0 || levels > 52 {
            return Err(invalid("--levels must lie in 1..=52"));
        }
        Ok(Self {
            command,
            class,
            ms,
            ns,
            lambda_grid,
            samples,
            seed: flags.seed.unwrap_or(0),
            order: flags.order,
            tol,
            out: flags.out,
            format: flags.format.as_deref().unwrap_or("csv").parse()?,
            deterministic: flags.deterministic,
            restarts: flags.restarts.unwrap_or(20),
            max_iter: flags.max_iter.unwrap_or(20_000),
            function: flags.function.as_deref().unwrap_or("koebe").parse()?,
            predicate,
            inject,
            pair,
            levels,
        })
    }

    fn class(&self) -> Result<ClassSpec> {
        self.class.ok_or_else(|| invalid(format!("--class is required for {:?}", self.command)))
    }

    fn grid(&self) -> Result<LambdaGrid> {
        match &self.lambda_grid {
            Some(g) => Ok(g.clone()),
            None => LambdaGrid::parse(DEFAULT_LAMBDA_GRID),
        }
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        self.ms
            .iter()
            .flat_map(|&m| self.ns.iter().map(move |&n| (m, n)))
            .collect()
    }

    fn header(&self) -> Option<String> {
        (!self.deterministic).then(timestamp)
    }
}

/// Outcome of a command: report plus pass/fail.
pub struct Outcome {
    pub table: Table,
    pub passed: bool,
    pub summary: String,
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let flags = match Flags::try_parse_from(args) {
        Ok(f) => f,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match RunConfig::from_flags(flags).and_then(|cfg| execute(&cfg).map(|o| (cfg, o))) {
        Ok((cfg, outcome)) => {
            if let Err(e) = emit(&cfg, &outcome.table) {
                eprintln!("error: {e}");
                return 2;
            }
            eprintln!("{}", outcome.summary);
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn emit(cfg: &RunConfig, table: &Table) -> Result<()> {
    let header = cfg.header();
    match &cfg.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| invalid(format!("cannot create {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            table.write(&mut w, cfg.format, header.as_deref())?;
            w.flush().map_err(|e| Error::Domain(e.to_string()))
        }
        None => table.write(std::io::stdout().lock(), cfg.format, header.as_deref()),
    }
}

/// Runs the configured command without writing anything.
pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    match cfg.command {
        Command::Verify => run_verify(cfg),
        Command::Extremal => run_extremal(cfg),
        Command::Search => run_search(cfg),
        Command::Scan => run_scan(cfg),
        Command::Hayman => run_hayman(cfg),
        Command::Ratio => run_ratio(cfg),
        Command::Audit => run_audit(cfg),
    }
}

/// Draws sample `index` exactly as `verify` does.
pub fn verify_sample(class: &ClassSpec, order: usize, seed: u64, index: usize) -> Result<TruncatedSeries> {
    class.sample(order, &mut stream(seed, index as u64))
}

pub fn run_verify(cfg: &RunConfig) -> Result<Outcome> {
    let class = cfg.class()?;
    let grid = cfg.grid()?;
    let pairs = cfg.pairs();
    for &(m, n) in &pairs {
        FunctionalSpec::real(0.0, m, n)?;
    }
    let needed = pairs.iter().map(|&(m, n)| 2 * m.max(n)).max().expect("nonempty");
    let order = cfg.order.unwrap_or(needed);
    let lambdas = pairs
        .iter()
        .map(|&(m, n)| grid.theorem_aware(&class, m, n))
        .collect::<Result<Vec<_>>>()?;
    let label = class.label();

    let per_sample = (0..cfg.samples)
        .into_par_iter()
        .map(|i| -> Result<(Vec<Vec<Cell>>, f64, usize)> {
            let mut f = verify_sample(&class, order, cfg.seed, i)?;
            if let (0, Some((k, v))) = (i, cfg.inject) {
                if k < 1 || k > f.order() {
                    return Err(invalid(format!("--inject index {k} outside 1..={}", f.order())));
                }
                f.set(k, v);
            }
            let residual = class.membership_residual(&f).value();
            let gated = residual > RESIDUAL_GATE;
            let mut rows = Vec::new();
            let mut min_slack = f64::INFINITY;
            let mut tested = 0;
            for (&(m, n), lams) in pairs.iter().zip(&lambdas) {
                let sum_slack = sum_form_check(&class, &f, m, n)?;
                for &lam in lams {
                    let spec = FunctionalSpec::new(lam, m, n)?;
                    let rep = BoundReport::evaluate(&class, &f, &spec, residual)?;
                    let slack = rep.slack.min(sum_slack);
                    let flag = if gated {
                        "excluded"
                    } else if slack < -cfg.tol {
                        "violation"
                    } else {
                        "ok"
                    };
                    if !gated {
                        min_slack = min_slack.min(slack);
                        tested += 1;
                    }
                    rows.push(vec![
                        label.clone().into(),
                        m.into(),
                        n.into(),
                        lam.re.into(),
                        lam.im.into(),
                        rep.value.into(),
                        rep.bound.into(),
                        rep.slack.into(),
                        residual.into(),
                        cfg.seed.into(),
                        i.into(),
                        sum_slack.into(),
                        flag.into(),
                    ]);
                }
            }
            Ok((rows, min_slack, tested))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut table = Table::new(BOUND_COLUMNS);
    let mut min_slack = f64::INFINITY;
    let mut tested = 0;
    for (rows, s, t) in per_sample {
        min_slack = min_slack.min(s);
        tested += t;
        rows.into_iter().for_each(|r| table.push(r));
    }
    let passed = min_slack >= -cfg.tol;
    Ok(Outcome {
        table,
        passed,
        summary: format!("{label}, pairs tested: {tested}, min slack: {min_slack:.6e}"),
    })
}

pub fn run_extremal(cfg: &RunConfig) -> Result<Outcome> {
    let class = cfg.class()?;
    let grid = cfg.grid()?;
    let mut table = Table::new([
        "class",
        "m",
        "n",
        "re_lambda",
        "im_lambda",
        "branch",
        "value",
        "bound",
        "difference",
        "pass",
    ]);
    let mut passed = true;
    let mut worst = 0.0f64;
    for (m, n) in cfg.pairs() {
        for lam in grid.theorem_aware(&class, m, n)? {
            let spec = FunctionalSpec::new(lam, m, n)?;
            let bound = sharp_bound(&class, &spec)?;
            for branch in regime(&class, &spec)?.branches(1e-12) {
                let order = cfg.order.unwrap_or(spec.default_order());
                let f = class.extremal(m, n, branch, Phases::default(), order)?;
                let value = zalcman(&f, &spec)?.norm();
                let diff = (value - bound).abs();
                let ok = diff <= cfg.tol * bound.max(1.0);
                passed &= ok;
                worst = worst.max(diff);
                table.push(vec![
                    class.label().into(),
                    m.into(),
                    n.into(),
                    lam.re.into(),
                    lam.im.into(),
                    branch.to_string().into(),
                    value.into(),
                    bound.into(),
                    diff.into(),
                    ok.into(),
                ]);
            }
        }
    }
    Ok(Outcome {
        summary: format!("{}, extremal checks: {}, max |value − bound|: {worst:.6e}", class.label(), table.len()),
        table,
        passed,
    })
}

pub fn run_search(cfg: &RunConfig) -> Result<Outcome> {
    let class = cfg.class()?;
    let lambdas = match &cfg.lambda_grid {
        Some(g) => g.points(),
        None => vec![Complex64::new(1.0, 0.0)],
    };
    let mut table = Table::new([
        "class",
        "m",
        "n",
        "re_lambda",
        "im_lambda",
        "best_value",
        "bound",
        "gap",
        "restarts_used",
        "seed",
        "params",
    ]);
    let mut passed = true;
    let mut worst_gap = 0.0f64;
    for (m, n) in cfg.pairs() {
        for &lam in &lambdas {
            let spec = FunctionalSpec::new(lam, m, n)?;
            let search = SearchConfig {
                restarts: cfg.restarts,
                max_iterations: cfg.max_iter,
                seed: cfg.seed,
                target: Some(sharp_bound(&class, &spec)?),
                ..SearchConfig::default()
            };
            let res = maximize_functional(&class, &spec, &search)?;
            passed &= res.gap <= cfg.tol && res.best_value <= res.bound + 1e-9;
            worst_gap = worst_gap.max(res.gap);
            let params = serde_json::to_string(&res.params).map_err(|e| Error::Domain(e.to_string()))?;
            table.push(vec![
                class.label().into(),
                m.into(),
                n.into(),
                lam.re.into(),
                lam.im.into(),
                res.best_value.into(),
                res.bound.into(),
                res.gap.into(),
                res.restarts_used.into(),
                res.seed.into(),
                params.into(),
            ]);
        }
    }
    Ok(Outcome {
        summary: format!("{}, searches: {}, max gap: {worst_gap:.6e}", class.label(), table.len()),
        table,
        passed,
    })
}

pub fn run_scan(cfg: &RunConfig) -> Result<Outcome> {
    let class = cfg.class()?;
    let predicate = cfg.predicate.expect("scan always has a predicate");
    if cfg.ns.iter().any(|&n| n < 2) {
        return Err(invalid("scan needs n ≥ 2"));
    }
    let needed = 2 * cfg.ns.iter().max().expect("nonempty") - 1;
    let order = cfg.order.unwrap_or(needed);
    let samples = (0..cfg.samples)
        .into_par_iter()
        .map(|i| verify_sample(&class, order, cfg.seed, i))
        .collect::<Result<Vec<_>>>()?;
    let report = conjecture_scan(&samples, predicate, &cfg.ns)?;
    let mut table = Table::new(SCAN_COLUMNS);
    for row in &report.rows {
        table.push(vec![
            row.predicate.name().into(),
            row.predicate.param().into(),
            row.n.into(),
            row.sample_index.into(),
            row.slack.into(),
            row.violated.into(),
        ]);
    }
    let witness = match report.witness {
        Some(w) => format!(", witness: sample {} n {}", w.sample_index, w.n),
        None => String::new(),
    };
    Ok(Outcome {
        summary: format!(
            "{}, {predicate}, rows: {}, min slack: {:.6e}{witness}",
            class.label(),
            table.len(),
            report.min_slack
        ),
        passed: report.witness.is_none(),
        table,
    })
}

pub fn run_hayman(cfg: &RunConfig) -> Result<Outcome> {
    let est = hayman_index(&cfg.function, cfg.levels)?;
    let mut table = Table::new(HAYMAN_COLUMNS);
    for (j, (r, v)) in est.radii.iter().zip(&est.values).enumerate() {
        table.push(vec![(j + 1).into(), (*r).into(), (*v).into()]);
    }
    Ok(Outcome {
        summary: format!("{}, radii: {}, alpha_hat: {:.12}", cfg.function, cfg.levels, est.alpha_hat),
        table,
        passed: (0.0..=1.0 + 1e-6).contains(&est.alpha_hat),
    })
}

pub fn run_ratio(cfg: &RunConfig) -> Result<Outcome> {
    let lambdas = match &cfg.lambda_grid {
        Some(g) => g.points(),
        None => vec![Complex64::new(1.0, 0.0)],
    };
    let mut table = Table::new(["path", "m", "n", "re_lambda", "im_lambda", "ratio"]);
    let mut excluded = 0;
    for path in ScanPath::ALL {
        for &lam in &lambdas {
            for pair in path.pairs(cfg.ns.iter().copied()) {
                match ratio_convergence(&cfg.function, lam, &[pair]) {
                    Ok(r) => table.push(vec![
                        path.name().into(),
                        pair.0.into(),
                        pair.1.into(),
                        lam.re.into(),
                        lam.im.into(),
                        r[0].into(),
                    ]),
                    Err(Error::ExcludedPair { .. }) => excluded += 1,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(Outcome {
        summary: format!("{}, ratios: {}, excluded pairs: {excluded}", cfg.function, table.len()),
        table,
        passed: true,
    })
}

pub fn run_audit(cfg: &RunConfig) -> Result<Outcome> {
    let grids = AuditGrids::default();
    let mut table = Table::new([
        "n",
        "sample_index",
        "re_a_n",
        "im_a_n",
        "re_a_2n1",
        "im_a_2n1",
        "a",
        "b",
        "c",
        "d",
        "agree",
    ]);
    let mut cases = Vec::new();
    match cfg.pair {
        Some((a, b)) => cases.push((cfg.ns[0], 0, a, b)),
        None => {
            for &n in &cfg.ns {
                for i in 0..cfg.samples {
                    let mut rng = stream(cfg.seed, (n * cfg.samples + i) as u64);
                    let (a, b) = random_admissible_pair(n, &mut rng);
                    cases.push((n, i, a, b));
                }
            }
        }
    }
    let mut passed = true;
    for (n, i, a, b) in cases {
        let out = zalcman_equivalence_audit(a, b, n, &grids)?;
        passed &= out.agree();
        table.push(vec![
            n.into(),
            i.into(),
            a.re.into(),
            a.im.into(),
            b.re.into(),
            b.im.into(),
            out.a.into(),
            out.b.into(),
            out.c.into(),
            out.d.into(),
            out.agree().into(),
        ]);
    }
    Ok(Outcome {
        summary: format!("audit, cases: {}, all agree: {passed}", table.len()),
        table,
        passed,
    })
}

/// `a_n` uniform in the disk of radius `n`, `a_{2n−1}` uniform in the disk of radius `2n − 1`.
pub fn random_admissible_pair<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> (Complex64, Complex64) {
    let mut disk = |radius: f64| {
        let r = radius * rng.random::<f64>().sqrt();
        Complex64::from_polar(r, rng.random_range(0.0..std::f64::consts::TAU))
    };
    let a = disk(n as f64);
    let b = disk((2 * n - 1) as f64);
    (a, b)
}
