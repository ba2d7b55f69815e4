//! Command-line driver: argument parsing, sweep execution and CSV output.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, ValueEnum};

use crate::force::{self, GridScale, Method, SweepConfig, SweepRow};
use crate::occupancy::DEFAULT_TOL;

pub const CSV_HEADER: &str = "t,method,alpha_plus,alpha_minus,f_plus,f_minus,delta_f,status";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScaleArg {
    Linear,
    Log,
}

/// Net force on the partition of a Dirichlet/Neumann split box of ideal
/// bosons, swept over temperature and written as CSV.
#[derive(Debug, Parser)]
#[command(name = "wallforce", version, allow_negative_numbers = true)]
struct Args {
    /// Bosons in each half-well
    #[arg(long = "n-particles", default_value_t = 100)]
    n_particles: u64,

    /// Lowest dimensionless temperature
    #[arg(long, default_value_t = 0.01)]
    t_min: f64,

    /// Highest dimensionless temperature
    #[arg(long, default_value_t = 160.0)]
    t_max: f64,

    /// Number of temperatures in the grid
    #[arg(long, default_value_t = 400)]
    points: usize,

    #[arg(long, value_enum, default_value = "log")]
    scale: ScaleArg,

    /// Comma-separated subset of numeric, low-t, linear, semi-analytic, high-t
    #[arg(long, value_delimiter = ',', default_value = "numeric")]
    methods: Vec<Method>,

    /// Relative tolerance on the particle-number constraint
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,

    /// Output file, or `-` for standard output
    #[arg(long, default_value = "-")]
    output: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Stdout,
    Path(PathBuf),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub sweep: SweepConfig,
    pub output: Output,
}

/// Parses the argument list (program name first). Errors carry clap's usage
/// text and exit code 2; `--help`/`--version` come back as errors with exit code 0.
pub fn parse_config<I, T>(args: I) -> Result<Config, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = Args::try_parse_from(args)?;
    let sweep = SweepConfig {
        particle_count: args.n_particles,
        t_min: args.t_min,
        t_max: args.t_max,
        grid_points: args.points,
        grid_scale: match args.scale {
            ScaleArg::Linear => GridScale::Linear,
            ScaleArg::Log => GridScale::Log,
        },
        methods: args.methods,
        tolerance: args.tol,
    };
    if let Err(e) = sweep.validate() {
        return Err(Args::command().error(ErrorKind::ValueValidation, e.to_string()));
    }
    let output = if args.output == "-" {
        Output::Stdout
    } else {
        Output::Path(PathBuf::from(args.output))
    };
    Ok(Config { sweep, output })
}

fn number(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.16e}")).unwrap_or_default()
}

/// Writes the sweep as CSV. Floats carry 17 significant digits; fields a
/// method does not produce are left empty.
pub fn write_csv<W: Write>(rows: &[SweepRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        let t = number(Some(row.t));
        match &row.outcome {
            Ok(v) => writeln!(
                out,
                "{t},{},{},{},{},{},{},{}",
                row.method,
                number(v.alpha_plus),
                number(v.alpha_minus),
                number(v.f_plus),
                number(v.f_minus),
                number(Some(v.delta_f)),
                if v.in_range { "ok" } else { "out-of-range" },
            )?,
            Err(_) => writeln!(out, "{t},{},,,,,,error", row.method)?,
        }
    }
    out.flush()
}

/// Runs the sweep and writes the CSV. Returns the process exit code:
/// 0 on success, 1 if any point failed or the output could not be written.
pub fn run(config: &Config) -> i32 {
    let rows = match force::sweep(&config.sweep) {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("wallforce: {e}");
            return 2;
        }
    };
    let mut status = 0;
    for row in &rows {
        if let Err(e) = &row.outcome {
            eprintln!("wallforce: t = {:e} ({}): {e}", row.t, row.method);
            status = 1;
        }
    }
    let written = match &config.output {
        Output::Stdout => write_csv(&rows, BufWriter::new(io::stdout().lock())),
        Output::Path(path) => File::create(path).and_then(|f| write_csv(&rows, BufWriter::new(f))),
    };
    if let Err(e) = written {
        eprintln!("wallforce: failed to write output: {e}");
        return 1;
    }
    status
}
