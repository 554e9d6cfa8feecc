//! `sglen`: CSV/JSON reports on weighted factorization lengths.

pub mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use semigroup_lengths::exact::frac;
use semigroup_lengths::{
    canonicalize_pair, count_in_window, density_f, empirical_stats, is_element,
    length_multiset, predicted_stats, residue_class, scaled_histogram, validate,
    verify_translation, Fraction, Rational, StatsKind, StatsReport, SupersymmetricSystem,
    WeightSystem,
};

use report::{
    decimal, decimal_f64, BoundsRow, Format, HistogramRow, ResidueRow, RowSink, StatsRow,
    SupersymRow, WindowRow,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] semigroup_lengths::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for inputs that violate a hypothesis, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_validation() => 2,
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

fn parse_triple(s: &str) -> std::result::Result<[i64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let values: Vec<i64> = parts
        .iter()
        .map(|p| p.parse::<i64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    values
        .try_into()
        .map_err(|v: Vec<i64>| format!("expected three comma-separated integers, got {}", v.len()))
}

#[derive(Debug, Parser)]
#[command(name = "sglen", version, about = "Weighted factorization lengths in three-generator numerical semigroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Instance {
    /// Weights m1,m2,m3 (any integers).
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    pub m: [i64; 3],
    /// Generators n1,n2,n3, ordered so that m1/n1 >= m2/n2 >= m3/n3.
    #[arg(long = "n-gens", value_parser = parse_triple)]
    pub n_gens: [i64; 3],
    /// Also require distinct, coprime generators.
    #[arg(long)]
    pub strict: bool,
}

impl Instance {
    fn system(&self) -> Result<WeightSystem> {
        Ok(validate(self.m, self.n_gens, self.strict)?)
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Output {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Elements {
    /// Semigroup element; repeat or comma-separate for several.
    #[arg(long = "n", required = true, value_delimiter = ',')]
    pub n: Vec<u64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct WindowArgs {
    /// Lower end of the window, as "p/q" or a decimal.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Fraction,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Fraction,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Actual and predicted mean, median, mode, stdev, min and max.
    Stats {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        elements: Elements,
        #[command(flatten)]
        #[serde(skip)]
        output: Output,
    },
    /// Scaled histogram rows (m, count, m/n, scaled value, F(m/n)).
    Histogram {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        elements: Elements,
        #[command(flatten)]
        #[serde(skip)]
        output: Output,
    },
    /// Count and scaled mass of the window [alpha n, beta n].
    Window {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        elements: Elements,
        #[command(flatten)]
        window: WindowArgs,
        #[command(flatten)]
        #[serde(skip)]
        output: Output,
    },
    /// Window mass against the limiting integral and both error bounds.
    Bounds {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        elements: Elements,
        #[command(flatten)]
        window: WindowArgs,
        #[command(flatten)]
        #[serde(skip)]
        output: Output,
    },
    /// Residue class c (mod d) of the populated lengths.
    Residues {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        elements: Elements,
        #[command(flatten)]
        #[serde(skip)]
        output: Output,
    },
    /// Translation offsets between the two weightings of <ab, ac, bc>.
    Supersym {
        #[command(flatten)]
        pair: SupersymPair,
        /// Check every element up to this bound.
        #[arg(long = "n-max", default_value_t = 120)]
        n_max: u64,
        #[command(flatten)]
        #[serde(skip)]
        output: Output,
    },
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SupersymPair {
    /// Distinct positive a,b,c.
    #[arg(long, value_parser = parse_triple, conflicts_with_all = ["m", "n_gens", "m2", "n_gens2"])]
    pub abc: Option<[i64; 3]>,
    /// First weighting, in any coordinate order.
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true, requires_all = ["n_gens", "m2", "n_gens2"])]
    pub m: Option<[i64; 3]>,
    #[arg(long = "n-gens", value_parser = parse_triple)]
    pub n_gens: Option<[i64; 3]>,
    /// Second weighting, in any coordinate order.
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    pub m2: Option<[i64; 3]>,
    #[arg(long = "n-gens2", value_parser = parse_triple)]
    pub n_gens2: Option<[i64; 3]>,
}

#[derive(Serialize)]
struct Config<'a> {
    #[serde(flatten)]
    command: &'a Command,
    #[serde(skip_serializing_if = "Option::is_none")]
    canonical: Option<SupersymmetricSystem>,
}

impl Command {
    fn output(&self) -> &Output {
        match self {
            Command::Stats { output, .. }
            | Command::Histogram { output, .. }
            | Command::Window { output, .. }
            | Command::Bounds { output, .. }
            | Command::Residues { output, .. }
            | Command::Supersym { output, .. } => output,
        }
    }
}

/// Sorted, deduplicated elements.
fn sorted(elements: &Elements) -> Vec<u64> {
    let mut ns = elements.n.clone();
    ns.sort_unstable();
    ns.dedup();
    ns
}

fn stats_row(r: &StatsReport) -> StatsRow {
    StatsRow {
        n: r.n,
        kind: match r.kind {
            StatsKind::Empirical => "empirical",
            StatsKind::Predicted => "predicted",
        }
        .into(),
        mean: r.mean_exact.into(),
        mean_decimal: decimal(&r.mean_exact),
        median_decimal: decimal_f64(r.median),
        mode: r.mode.into(),
        stdev_decimal: decimal_f64(r.stdev),
        min: r.min.into(),
        max: r.max.into(),
    }
}

fn scaled_mass(ws: &WeightSystem, n: u64, count: u128) -> Result<Rational> {
    let count = i128::try_from(count).map_err(|_| semigroup_lengths::Error::Overflow)?;
    let nn = (n as i128)
        .checked_mul(n as i128)
        .ok_or(semigroup_lengths::Error::Overflow)?;
    if nn == 0 {
        return Err(semigroup_lengths::Error::ZeroElement.into());
    }
    count
        .checked_mul(2 * ws.gens().product())
        .map(|num| frac(num, nn))
        .ok_or_else(|| semigroup_lengths::Error::Overflow.into())
}

fn resolve_pair(pair: &SupersymPair) -> Result<(SupersymmetricSystem, Option<String>)> {
    if let Some([a, b, c]) = pair.abc {
        return Ok((SupersymmetricSystem::new(a, b, c)?, None));
    }
    match (pair.m, pair.n_gens, pair.m2, pair.n_gens2) {
        (Some(m), Some(n), Some(m2), Some(n2)) => {
            let p = canonicalize_pair((m, n), (m2, n2))?;
            let s = p.system;
            let notice = format!(
                "canonicalized to (a,b,c) = ({},{},{}): first weighting uses input coordinates {:?}, second {:?}{}",
                s.a,
                s.b,
                s.c,
                p.first.permutation,
                p.second.permutation,
                if p.swapped { ", inputs swapped" } else { "" }
            );
            Ok((s, Some(notice)))
        }
        _ => Err(CliError::Usage(
            "give either --abc or all of --m, --n-gens, --m2, --n-gens2".into(),
        )),
    }
}

/// Runs one command; `notices` receives human-readable remarks that are not
/// part of the report.
pub fn run(cli: &Cli, notices: &mut dyn Write) -> Result<()> {
    let output = cli.command.output();
    match &output.out {
        Some(path) => {
            let file = BufWriter::new(File::create(path)?);
            run_to(cli, file, notices)
        }
        None => run_to(cli, BufWriter::new(io::stdout().lock()), notices),
    }
}

pub fn run_to<W: Write>(cli: &Cli, out: W, notices: &mut dyn Write) -> Result<()> {
    let command = &cli.command;
    let format = command.output().format;

    // validate before anything is written
    let canonical = match command {
        Command::Supersym { pair, .. } => {
            let (sys, notice) = resolve_pair(pair)?;
            if let Some(notice) = notice {
                writeln!(notices, "{notice}")?;
            }
            Some(sys)
        }
        Command::Stats { instance, .. }
        | Command::Histogram { instance, .. }
        | Command::Window { instance, .. }
        | Command::Bounds { instance, .. }
        | Command::Residues { instance, .. } => {
            instance.system()?;
            None
        }
    };
    if let Command::Window { window, .. } | Command::Bounds { window, .. } = command {
        if window.alpha > window.beta {
            return Err(semigroup_lengths::Error::InvalidWindow {
                alpha: window.alpha.to_string(),
                beta: window.beta.to_string(),
            }
            .into());
        }
    }
    let config = Config { command, canonical };
    let mut sink = RowSink::new(format, out, &config)?;

    match command {
        Command::Stats { instance, elements, .. } => {
            let ws = instance.system()?;
            for n in sorted(elements) {
                let actual = empirical_stats(&length_multiset(&ws, n)?)?;
                sink.push(&stats_row(&actual))?;
                sink.push(&stats_row(&predicted_stats(&ws, n)?))?;
            }
        }
        Command::Histogram { instance, elements, .. } => {
            let ws = instance.system()?;
            let dd = ws.direction();
            for n in sorted(elements) {
                for point in scaled_histogram(&ws, &dd, n)? {
                    let p = point?;
                    let density = density_f(&ws, &p.position)?;
                    sink.push(&HistogramRow {
                        n,
                        m: p.m,
                        count: p.count,
                        position: p.position.into(),
                        position_decimal: decimal(&p.position),
                        scaled_value: p.value.into(),
                        scaled_value_decimal: decimal(&p.value),
                        density: density.into(),
                        density_decimal: decimal(&density),
                    })?;
                }
            }
        }
        Command::Window { instance, elements, window, .. } => {
            let ws = instance.system()?;
            for n in sorted(elements) {
                let count = count_in_window(&ws, n, &window.alpha.0, &window.beta.0)?;
                let mass = scaled_mass(&ws, n, count)?;
                sink.push(&WindowRow {
                    n,
                    alpha: window.alpha,
                    beta: window.beta,
                    count,
                    scaled_mass: mass.into(),
                    scaled_mass_decimal: decimal(&mass),
                })?;
            }
        }
        Command::Bounds { instance, elements, window, .. } => {
            let ws = instance.system()?;
            let dd = ws.direction();
            for n in sorted(elements) {
                let r = semigroup_lengths::verify_bound(&ws, &dd, n, &window.alpha.0, &window.beta.0)?;
                sink.push(&BoundsRow {
                    n,
                    alpha: window.alpha,
                    beta: window.beta,
                    count: r.count,
                    scaled_mass: r.scaled_mass.into(),
                    scaled_mass_decimal: decimal(&r.scaled_mass),
                    integral: r.integral.into(),
                    integral_decimal: decimal(&r.integral),
                    error: r.error.into(),
                    error_decimal: decimal(&r.error),
                    theorem_bound: r.theorem_bound.into(),
                    theorem_bound_decimal: decimal(&r.theorem_bound),
                    refined_bound: r.refined_bound.into(),
                    refined_bound_decimal: decimal(&r.refined_bound),
                    within_theorem_bound: r.within_theorem_bound(),
                    within_refined_bound: r.within_refined_bound(),
                })?;
            }
        }
        Command::Residues { instance, elements, .. } => {
            let ws = instance.system()?;
            let dd = ws.direction();
            for n in sorted(elements) {
                let class = residue_class(&ws, &dd, n as i128)?;
                sink.push(&ResidueRow { n, d: class.d, c: class.c })?;
            }
        }
        Command::Supersym { n_max, .. } => {
            let sys = canonical.expect("resolved above");
            let gens = sys.gens();
            for n in (0..=*n_max).filter(|&n| is_element(&gens, n as i128)) {
                let check = verify_translation(&sys, n)?;
                let d = check.decomposition;
                let [x1, x2, x3] = d.x.x;
                sink.push(&SupersymRow {
                    n,
                    q: d.q,
                    r: d.r,
                    x1,
                    x2,
                    x3,
                    offset: check.offset,
                    passed: check.passed,
                })?;
            }
        }
    }
    sink.finish()?.flush()?;
    Ok(())
}
