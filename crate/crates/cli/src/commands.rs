use std::f64::consts::TAU;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use trigspline::alias::{fold_table, fold_table_csv};
use trigspline::kernel::{filter_response, sigma, KernelConfig, SigmaVariant};
use trigspline::output::CsvTable;
use trigspline::signal::suite_signal;
use trigspline::verify::{bound_rows_csv, check_bound, BoundKind, ROUNDOFF_ALLOWANCE};
use trigspline::{
    build_spline, discrete_coeffs, make_grid, sample, AnalyticSignal, PeriodicFunction,
    SpectralError, UniformGrid,
};

use crate::{
    AliasArgs, BoundsArgs, DftArgs, Format, GenSignalArgs, KernelArgs, ResponseArgs, SignalSource,
    SplineArgs,
};

/// Largest tolerated `|fold - dft|` beyond the reported fold tail.
const IDENTITY_TOL: f64 = 1e-10;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Numerical(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) | CliError::Numerical(m) => f.write_str(m),
        }
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Config(e.to_string())
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Everything a command produces, written only once the run has succeeded.
pub struct Outcome {
    files: Vec<(Option<PathBuf>, String)>,
    violation: bool,
}

impl Outcome {
    fn single(out: &Option<PathBuf>, text: String) -> Self {
        Outcome {
            files: vec![(out.clone(), text)],
            violation: false,
        }
    }

    /// Writes the outputs; returns whether a violation was detected.
    pub fn write(self) -> Result<bool> {
        for (path, text) in &self.files {
            match path {
                Some(p) => fs::write(p, text)
                    .map_err(|e| CliError::Config(format!("cannot write {}: {e}", p.display())))?,
                None => std::io::stdout()
                    .write_all(text.as_bytes())
                    .map_err(|e| CliError::Config(format!("cannot write to stdout: {e}")))?,
            }
        }
        Ok(self.violation)
    }
}

fn load_signal(source: &SignalSource) -> Result<AnalyticSignal> {
    if let Some(path) = &source.signal {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        return Ok(AnalyticSignal::from_json(&text)?);
    }
    if let Some(text) = &source.inline {
        return Ok(AnalyticSignal::from_json(text)?);
    }
    let name = source.suite.as_deref().unwrap_or_default();
    suite_signal(name).ok_or_else(|| CliError::Config(format!("unknown suite signal '{name}'")))
}

fn grid(n: usize) -> Result<UniformGrid> {
    Ok(make_grid(n)?)
}

fn kernel_config(args: &KernelArgs, grid: UniformGrid, tail_tol: f64) -> Result<KernelConfig> {
    let variant: SigmaVariant = args.variant.parse()?;
    Ok(KernelConfig::new(args.r, grid, variant)?
        .with_tail_tol(tail_tol)?
        .with_m_max_cap(args.m_max_cap)?)
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    path.with_extension(suffix)
}

pub fn gen_signal(args: &GenSignalArgs) -> Result<Outcome> {
    let signal = load_signal(&args.source)?;
    let format = args.format.unwrap_or(if args.n.is_some() {
        Format::Csv
    } else {
        Format::Json
    });
    let text = match format {
        Format::Json => signal.to_json(),
        Format::Csv => {
            let n = args
                .n
                .ok_or_else(|| CliError::Config("CSV samples need --n".into()))?;
            sample(&signal, grid(n)?)?.to_csv()
        }
    };
    Ok(Outcome::single(&args.out, text))
}

pub fn dft(args: &DftArgs) -> Result<Outcome> {
    let signal = load_signal(&args.source)?;
    let spectrum = discrete_coeffs(&sample(&signal, grid(args.n)?)?);
    let text = match args.format {
        Format::Csv => spectrum.to_csv(),
        Format::Json => spectrum.to_json(),
    };
    Ok(Outcome::single(&args.common.out, text))
}

pub fn spline(args: &SplineArgs) -> Result<Outcome> {
    let signal = load_signal(&args.source)?;
    let grid = grid(args.n)?;
    let config = kernel_config(&args.kernel, grid, args.common.tail_tol)?;
    if args.eval_grid.is_some() && args.common.out.is_none() {
        return Err(CliError::Config("--eval-grid needs --out".into()));
    }
    if args.eval_grid == Some(0) {
        return Err(CliError::Config("--eval-grid must be positive".into()));
    }
    let spline = build_spline(&sample(&signal, grid)?, &config)?;
    let j_max = args.j_max.unwrap_or(4 * grid.len() as u64);
    let unfolded = spline.unfolded_csv(j_max, Some(&signal));

    let mut files = Vec::new();
    match (&args.common.out, args.format) {
        (out, Format::Json) => {
            files.push((out.clone(), spline.to_json()));
            if let Some(path) = out {
                files.push((Some(sibling(path, "unfolded.csv")), unfolded));
            }
        }
        (out, Format::Csv) => files.push((out.clone(), unfolded)),
    }
    if let (Some(points), Some(path)) = (args.eval_grid, &args.common.out) {
        let mut table = CsvTable::new(&["t", "spline", "signal", "abs_err"]);
        for i in 0..points {
            let t = TAU * i as f64 / points as f64;
            let s = spline.eval(t);
            let f = signal.value(t);
            table.row(&[t.into(), s.into(), f.into(), (s - f).abs().into()]);
        }
        files.push((Some(sibling(path, "eval.csv")), table.into_string()));
    }
    Ok(Outcome {
        files,
        violation: false,
    })
}

fn parse_orders(list: &str) -> Result<Vec<u32>> {
    let orders: Vec<u32> = list
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Config(format!("invalid order '{s}' in --r")))
        })
        .collect::<Result<_>>()?;
    if orders.is_empty() {
        return Err(CliError::Config("--r needs at least one order".into()));
    }
    Ok(orders)
}

pub fn response(args: &ResponseArgs) -> Result<Outcome> {
    let grid = grid(args.n)?;
    let orders = parse_orders(&args.r)?;
    let kernel = |r: u32| KernelArgs {
        r,
        variant: args.variant.clone(),
        m_max_cap: args.m_max_cap,
    };
    let j_max = args.j_max.unwrap_or(2 * grid.len());
    let tables = orders
        .iter()
        .map(|&r| {
            let config = kernel_config(&kernel(r), grid, args.common.tail_tol)?;
            Ok((r, config, filter_response(&config, j_max)?))
        })
        .collect::<Result<Vec<_>>>()?;

    let text = match args.format {
        Format::Csv => {
            let mut csv = CsvTable::new(&["r", "j", "k_class", "sigma", "H", "alpha"]);
            for (r, config, table) in &tables {
                for j in 1..=j_max as u64 {
                    let k = trigspline::sampling::alias_class(j, grid.len()).k;
                    csv.row(&[
                        (*r as u64).into(),
                        j.into(),
                        k.into(),
                        sigma(j, config)?.into(),
                        table.h(k).into(),
                        table.alpha(j).into(),
                    ]);
                }
            }
            csv.into_string()
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Curve {
                r: u32,
                alpha: Vec<f64>,
            }
            #[derive(Serialize)]
            struct Doc<'a> {
                #[serde(rename = "N")]
                len: usize,
                variant: &'a str,
                j_max: usize,
                curves: Vec<Curve>,
            }
            let doc = Doc {
                len: grid.len(),
                variant: &args.variant,
                j_max,
                curves: tables
                    .iter()
                    .map(|(r, _, table)| Curve {
                        r: *r,
                        alpha: (1..=j_max as u64).map(|j| table.alpha(j)).collect(),
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&doc).expect("finite response") + "\n"
        }
    };
    Ok(Outcome::single(&args.common.out, text))
}

fn check_scale(scale: f64) -> Result<()> {
    if scale > 0.0 && scale.is_finite() {
        Ok(())
    } else {
        Err(CliError::Config(format!(
            "--bound-scale must be positive, got {scale}"
        )))
    }
}

pub fn alias(args: &AliasArgs) -> Result<Outcome> {
    check_scale(args.bound_scale)?;
    let signal = load_signal(&args.source)?;
    let grid = grid(args.n)?;
    let mut rows = fold_table(&signal, &grid, args.common.tail_tol)?;
    let mut violation = false;
    for row in &mut rows {
        row.bound *= args.bound_scale;
        let limit = IDENTITY_TOL + row.fold.tail_bound;
        if row.abs_diff_a() > limit || row.abs_diff_b() > limit {
            violation = true;
        }
        let (a, b) = signal.true_coeff(row.fold.k as u64);
        let err = (a - row.dft_a).abs().max((b - row.dft_b).abs());
        if err > row.bound + ROUNDOFF_ALLOWANCE {
            violation = true;
        }
    }
    Ok(Outcome {
        files: vec![(args.common.out.clone(), fold_table_csv(&rows))],
        violation,
    })
}

pub fn bounds(args: &BoundsArgs) -> Result<Outcome> {
    check_scale(args.bound_scale)?;
    let signal = load_signal(&args.source)?;
    let kind: BoundKind = args.kind.parse()?;
    let config = kernel_config(&args.kernel, grid(args.n)?, args.common.tail_tol)?;
    let rows = check_bound(kind, &signal, &config, args.bound_scale)?;
    Ok(Outcome {
        violation: rows.iter().any(|r| !r.holds),
        files: vec![(args.common.out.clone(), bound_rows_csv(&rows))],
    })
}
