//! Command-line harness: run verification checks over matroid spec files or
//! generated families and write reproducible JSON reports.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use matroid_verify::checks;
use matroid_verify::harness::{self, CheckKind, HarnessError, Report, RunConfig};
use matroid_verify::lorentzian::is_lorentzian;
use matroid_verify::matroid::Matroid;

/// Directory used for relative or defaulted report paths.
const REPORT_DIR_ENV: &str = "MATROID_VERIFY_REPORT_DIR";

#[derive(Parser)]
#[command(
    name = "matroid-verify",
    version,
    about = "Exact verification of log-concavity inequalities for matroid independent-set polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks on a single matroid read from a spec file.
    Check {
        /// Path to a matroid spec document (JSON; see the README schema).
        spec_file: PathBuf,
        /// Comma-separated checks: dowling, zhao, ultra, strong, gaojie,
        /// highd, lorentzian, prop1, oracle-equiv.
        #[arg(long, value_delimiter = ',', value_parser = parse_check, default_value = "dowling,zhao,strong")]
        checks: Vec<CheckKind>,
        /// Block counts for gaojie/highd/oracle-equiv.
        #[arg(long = "p", value_delimiter = ',', default_value = "3")]
        p_values: Vec<usize>,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report output path; "-" or omitted writes to stdout. Relative
        /// paths resolve against $MATROID_VERIFY_REPORT_DIR when set.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Also write a CSV summary next to the JSON report.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Include wall-clock timings (makes reports non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Run checks over the generated matroid family.
    Sweep {
        /// Uniform-family ground-set cap (hard limit 24).
        #[arg(long = "n-max", default_value_t = 6)]
        n_max: usize,
        #[arg(long, value_delimiter = ',', value_parser = parse_check, default_value = "dowling,zhao,strong")]
        checks: Vec<CheckKind>,
        /// Seed for the random GF(2) members of the family.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "p", value_delimiter = ',', default_value = "3")]
        p_values: Vec<usize>,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Number of seeded GF(2) matroids in the family.
        #[arg(long, default_value_t = 50)]
        linear_count: usize,
        /// Additional matroid spec files to include in the family.
        #[arg(long = "spec")]
        spec_files: Vec<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        timings: bool,
    },
    /// Decide whether the homogenized generating polynomial of the matroid
    /// in the spec file is Lorentzian.
    Lorentzian {
        spec_file: PathBuf,
    },
    /// Print a polynomial associated with the matroid in the spec file.
    Show {
        spec_file: PathBuf,
        /// Which polynomial to print.
        #[arg(long, value_enum, default_value_t = ShowPoly::Fk)]
        poly: ShowPoly,
        /// Size for `fk` (omitted: every k up to the rank).
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ShowPoly {
    /// Independent-set polynomials f_k.
    Fk,
    /// The homogenized generating polynomial.
    G,
    /// The bivariate collapse of G·G.
    Collapse,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, HarnessError> {
    match cli.command {
        Command::Check {
            spec_file,
            checks,
            p_values,
            jobs,
            report,
            csv,
            timings,
        } => {
            let config = RunConfig {
                checks: checks.into_iter().collect::<BTreeSet<_>>(),
                generated_families: false,
                p_values,
                jobs,
                include_timings: timings,
                spec_files: vec![spec_file],
                ..RunConfig::default()
            };
            let report_data = harness::run(&config)?;
            emit_report(&report_data, report.as_deref(), csv.as_deref())?;
            Ok(ExitCode::from(report_data.exit_code() as u8))
        }
        Command::Sweep {
            n_max,
            checks,
            seed,
            p_values,
            jobs,
            linear_count,
            spec_files,
            report,
            csv,
            timings,
        } => {
            let config = RunConfig {
                checks: checks.into_iter().collect::<BTreeSet<_>>(),
                n_max,
                seed,
                p_values,
                jobs,
                linear_count,
                include_timings: timings,
                spec_files,
                ..RunConfig::default()
            };
            let report_data = harness::run(&config)?;
            emit_report(&report_data, report.as_deref(), csv.as_deref())?;
            Ok(ExitCode::from(report_data.exit_code() as u8))
        }
        Command::Lorentzian { spec_file } => {
            let matroid = load(&spec_file)?;
            let g = checks::g_polynomial(&matroid);
            let verdict = is_lorentzian(&g);
            if verdict.is_lorentzian {
                println!("{}: G is Lorentzian", matroid.name());
                Ok(ExitCode::SUCCESS)
            } else {
                let reason = verdict
                    .failure
                    .map(|f| f.to_string())
                    .unwrap_or_else(|| "unknown".into());
                println!("{}: G is NOT Lorentzian ({reason})", matroid.name());
                Ok(ExitCode::from(1))
            }
        }
        Command::Show { spec_file, poly, k } => {
            let matroid = load(&spec_file)?;
            match poly {
                ShowPoly::Fk => {
                    let rank = matroid.rank_full();
                    let ks: Vec<usize> = match k {
                        Some(k) => vec![k],
                        None => (0..=rank).collect(),
                    };
                    for k in ks {
                        if k > rank {
                            println!("# f_{k} = 0 (k exceeds the rank {rank})");
                            continue;
                        }
                        println!("# f_{k}");
                        for line in checks::independent_sets_poly(&matroid, k).to_lines() {
                            println!("{line}");
                        }
                    }
                }
                ShowPoly::G => {
                    for line in checks::g_polynomial(&matroid).to_lines() {
                        println!("{line}");
                    }
                }
                ShowPoly::Collapse => {
                    for line in checks::collapse_s(&matroid).to_lines() {
                        println!("{line}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_check(s: &str) -> Result<CheckKind, String> {
    s.parse()
}

fn load(path: &Path) -> Result<Matroid, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    harness::parse_matroid_spec(&text).map_err(|e| match e {
        HarnessError::Parse { message, .. } => HarnessError::Parse {
            path: Some(path.to_path_buf()),
            message,
        },
        other => other,
    })
}

fn resolve_report_path(path: &Path) -> PathBuf {
    if path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os(REPORT_DIR_ENV) {
        Some(dir) => Path::new(&dir).join(path),
        None => path.to_path_buf(),
    }
}

fn emit_report(
    report: &Report,
    json_path: Option<&Path>,
    csv_path: Option<&Path>,
) -> Result<(), HarnessError> {
    let json = report.to_json();
    match json_path {
        Some(p) if p.as_os_str() != "-" => {
            let target = resolve_report_path(p);
            std::fs::write(&target, &json).map_err(|source| HarnessError::Io {
                path: target.clone(),
                source,
            })?;
            eprintln!(
                "wrote {} records to {} ({} violations)",
                report.summary.total,
                target.display(),
                report.summary.violations
            );
        }
        _ => print!("{json}"),
    }
    if let Some(p) = csv_path {
        let target = resolve_report_path(p);
        std::fs::write(&target, report.to_csv()).map_err(|source| HarnessError::Io {
            path: target.clone(),
            source,
        })?;
    }
    Ok(())
}
