//! Command-line front end: argument handling, CSV/SVG output and exit codes.

pub mod args;
pub mod output;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};
use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::Parser;
use thiserror::Error;

use tridm::experiments::{
    figure_preset_by_name, run_sweep, validate_closed_forms, ExperimentError, FigureName,
    StateEvaluator, SweepAxis, SweepConfig, SweepTable, ValidationGrids,
};
use tridm::model::{ModelError, PartitionId, SystemParams};

use args::{
    AxisArg, Cli, Command, EvolveArgs, FigureArgs, Format, ModeArgs, OutputArgs, ParamArgs,
    SweepArgs,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("cannot write {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
            CliError::Numerical(_) => EXIT_NUMERICAL,
        }
    }
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

fn usage(e: ModelError) -> CliError {
    CliError::Usage(e.to_string())
}

/// Parameters used by `evolve` and `sweep` when not overridden.
pub fn default_params() -> SystemParams {
    SystemParams::new(FRAC_PI_3, FRAC_PI_2, 0.9, 2.0, 0.5).expect("default parameters are valid")
}

fn apply_params(base: SystemParams, o: &ParamArgs) -> Result<SystemParams, CliError> {
    SystemParams::new(
        o.alpha.unwrap_or(base.alpha()),
        o.gamma.unwrap_or(base.gamma()),
        o.kappa.unwrap_or(base.kappa()),
        o.omega.unwrap_or(base.omega()),
        o.dz.unwrap_or(base.dz()),
    )
    .map_err(usage)
}

fn apply_mode(cfg: &mut SweepConfig, m: &ModeArgs) {
    if let Some(p) = m.propagator {
        cfg.propagator = p;
    }
    if let Some(i) = m.info_mode {
        cfg.info_mode = i;
    }
    cfg.allow_nonconventional_closed_form |= m.allow_nonconventional_closed_form;
}

fn write_outputs(table: &SweepTable, out: &OutputArgs) -> Result<(), CliError> {
    match (out.format, out.out.as_deref()) {
        (Format::CsvSvg, None) => Err(CliError::Usage("--format csv+svg requires --out".into())),
        (Format::Csv, path) => output::emit_csv(table, path),
        (Format::CsvSvg, Some(path)) => {
            output::emit_csv(table, Some(path))?;
            output::emit_svg(table, path).map(|_| ())
        }
    }
}

fn run_evolve(a: &EvolveArgs) -> Result<(), CliError> {
    let params = apply_params(default_params(), &a.params)?;
    let partitions = a
        .partitions
        .clone()
        .unwrap_or_else(|| PartitionId::PAIRS.to_vec());
    let mut cfg = SweepConfig::time(params, partitions);
    apply_mode(&mut cfg, &a.mode);
    let evaluator = StateEvaluator::new(cfg.clone())?;
    let row = evaluator.evaluate(a.t)?;
    let table = SweepTable {
        config: cfg,
        rows: vec![row],
    };
    output::emit_csv(&table, a.out.as_deref())
}

fn sweep_config(a: &SweepArgs) -> Result<SweepConfig, CliError> {
    let params = apply_params(default_params(), &a.params)?;
    let partitions = a
        .partitions
        .clone()
        .unwrap_or_else(|| vec![PartitionId::AB]);
    let mut cfg = SweepConfig::time(params, partitions);
    cfg.axis = match a.axis {
        AxisArg::Time => SweepAxis::Time {
            start: a.start.unwrap_or(0.0),
            end: a.end.unwrap_or(5.0),
            steps: a.steps.unwrap_or(501),
        },
        AxisArg::Kappa => {
            let start = a.start.unwrap_or(0.0);
            let end = a.end.unwrap_or(1.0);
            if !(0.0..=1.0).contains(&start) || !(0.0..=1.0).contains(&end) {
                return Err(CliError::Usage("kappa out of [0,1]".into()));
            }
            SweepAxis::Kappa {
                start,
                end,
                steps: a.steps.unwrap_or(101),
                t: a.at_t,
            }
        }
    };
    apply_mode(&mut cfg, &a.mode);
    cfg.validate()?;
    Ok(cfg)
}

fn figure_config(a: &FigureArgs) -> Result<SweepConfig, CliError> {
    let preset = figure_preset_by_name(&a.name)?;
    let mut cfg = preset.config;
    cfg.params = apply_params(cfg.params, &a.params)?;
    if let Some(n) = a.steps {
        match &mut cfg.axis {
            SweepAxis::Time { steps, .. } | SweepAxis::Kappa { steps, .. } => *steps = n,
        }
    }
    apply_mode(&mut cfg, &a.mode);
    cfg.validate()?;
    Ok(cfg)
}

fn run_validate(out: &Path) -> Result<(), CliError> {
    let report = validate_closed_forms(&ValidationGrids::default())?;
    output::emit_validation(&report, out)?;
    print!("{}", output::validation_summary(&report));
    Ok(())
}

fn list_presets() -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    for name in FigureName::ALL {
        let p = tridm::experiments::figure_preset(name);
        let flag = if p.inferred { " (inferred)" } else { "" };
        writeln!(lock, "{:<7} {}{flag}", name.label(), p.description).map_err(|e| {
            CliError::Io {
                path: "<stdout>".into(),
                source: e,
            }
        })?;
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Evolve(a) => run_evolve(a),
        Command::Sweep(a) => write_outputs(&run_sweep(&sweep_config(a)?)?, &a.output),
        Command::Figure(a) => write_outputs(&run_sweep(&figure_config(a)?)?, &a.output),
        Command::Validate(a) => run_validate(&a.out),
        Command::ListPresets => list_presets(),
    }
}

/// Parses `argv`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("tri-dm: {e}");
            e.exit_code()
        }
    }
}
