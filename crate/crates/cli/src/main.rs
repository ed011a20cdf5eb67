mod config;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use pertspec::format::sig;
use pertspec::oracle::report::{discrepancy_report, ReportConfig};
use pertspec::perturbation::{breakdown, BreakdownRecord, Variant};
use pertspec::spectra::{ho_radial_wavefunction, coulomb_radial_wavefunction, Family, Normalization, QuantumNumbers};
use pertspec::tables::{build_table, GridSettings, TableConfig};
use pertspec::verify::{run_suite, Suite, SuiteReport, VerifyConfig};
use pertspec::Spec;

use config::{resolve, Command, Flags, OutputFormat, Resolved, OUT_DIR_VAR};

/// Perturbative spectra of screened oscillator- and Coulomb-type potentials.
#[derive(Debug, Parser)]
#[command(name = "pertspec", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<pertspec::Error> for Failure {
    fn from(e: pertspec::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn emit(r: &Resolved, text: &str) -> Outcome {
    match &r.out {
        Some(path) => write_file(path, text.as_bytes()),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
        }
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Outcome {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|e| Failure::Usage(format!("cannot create {}: {e}", parent.display())))?;
    }
    fs::write(path, bytes).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn table_config(r: &Resolved, base: TableConfig) -> TableConfig {
    let mut cfg = base;
    if let Some(f) = r.family.filter(|f| *f != cfg.family) {
        eprintln!("note: --family {} ignored; this table fixes the family", f.label());
    }
    cfg.z = r.z.unwrap_or(cfg.z);
    cfg.nu = r.nu.unwrap_or(cfg.nu);
    cfg.variant = r.variant.unwrap_or(cfg.variant);
    cfg.s = r.s;
    cfg.omega2 = r.omega2;
    cfg.n = r.n;
    cfg.l = r.l;
    cfg.grid = GridSettings {
        r_min: r.r_min.unwrap_or(cfg.grid.r_min),
        r_max: r.r_max.unwrap_or(cfg.grid.r_max),
        points: r.points.unwrap_or(cfg.grid.points),
    };
    cfg.skip_reference = r.skip_ref;
    cfg
}

fn run_table(r: &Resolved, base: TableConfig) -> Outcome {
    let cfg = table_config(r, base);
    let table = build_table(&cfg)?;
    if table.rows.is_empty() {
        return Err(Failure::Usage("no table row matches the given filters".into()));
    }
    let text = match r.format {
        OutputFormat::Md => table.to_markdown(r.precision),
        OutputFormat::Csv => table.to_csv(r.precision),
        OutputFormat::Json => table.to_json() + "\n",
    };
    emit(r, &text)
}

struct SpectrumDefaults {
    z: f64,
    s: f64,
    nu: f64,
    omega2: f64,
    variant: Variant,
}

fn spectrum_defaults(family: Family) -> SpectrumDefaults {
    match family {
        Family::HarmonicOscillator => SpectrumDefaults { z: 0.5, s: 0.5, nu: 0.8, omega2: 0.0001, variant: Variant::TableI4s },
        Family::Coulomb => SpectrumDefaults { z: -1.0, s: 0.001, nu: 0.1, omega2: 1.0, variant: Variant::AsPrinted },
    }
}

fn run_spectrum(r: &Resolved) -> Outcome {
    let family = r.family.unwrap_or(Family::HarmonicOscillator);
    let d = spectrum_defaults(family);
    let spec = Spec::new(
        family,
        r.z.unwrap_or(d.z),
        r.s.unwrap_or(d.s),
        r.nu.unwrap_or(d.nu),
        r.omega2.unwrap_or(d.omega2),
    )?;
    let qn = QuantumNumbers::new(r.n.unwrap_or(0), r.l.unwrap_or(0));
    let b = breakdown(&spec, qn, r.variant.unwrap_or(d.variant))?;
    let rec = BreakdownRecord::new(&spec, qn, &b);
    let p = r.precision;
    let text = match r.format {
        OutputFormat::Json => serde_json::to_string_pretty(&rec).expect("record serializes") + "\n",
        OutputFormat::Csv => format!("{}\n{}\n", BreakdownRecord::CSV_HEADER, rec.csv_row(|x| sig(x, p))),
        OutputFormat::Md => {
            let mut out = format!(
                "### {} family: Z = {}, s = {}, nu = {}, omega2 = {}, n = {}, l = {}, variant {}\n\n",
                family.label(),
                rec.z,
                rec.s,
                rec.nu,
                rec.omega2,
                rec.n,
                rec.l,
                rec.variant
            );
            out.push_str("| term | value |\n|---|---|\n");
            for (name, v) in [
                ("e0", rec.e0),
                ("e1", rec.e1),
                ("e2_diag", rec.e2_diag),
                ("e2_offdiag", rec.e2_offdiag),
                ("total", rec.total),
            ] {
                out.push_str(&format!("| {name} | {} |\n", sig(v, p)));
            }
            out
        }
    };
    if r.dump_quadrature.is_some() || r.profile.is_some() {
        let state = match family {
            Family::HarmonicOscillator => ho_radial_wavefunction(&spec, qn)?,
            Family::Coulomb => coulomb_radial_wavefunction(&spec, qn, Normalization::Unit)?,
        };
        if let Some(path) = &r.dump_quadrature {
            let mut buf = Vec::new();
            state.moment_rule(0)?.write_csv(&mut buf).expect("in-memory write");
            write_file(path, &buf)?;
        }
        if let Some(path) = &r.profile {
            let r_max = r.r_max.unwrap_or(10.0);
            let count = r.points.unwrap_or(400).max(2);
            let radii: Vec<f64> = (0..count).map(|i| r_max * i as f64 / (count - 1) as f64).collect();
            let mut buf = Vec::new();
            state.write_profile_csv(&mut buf, &radii).expect("in-memory write");
            write_file(path, &buf)?;
        }
    }
    emit(r, &text)
}

fn run_verify(r: &Resolved) -> Outcome {
    if r.format == OutputFormat::Csv {
        return Err(Failure::Usage("verify supports --format md or json".into()));
    }
    let cfg = VerifyConfig { table_variant: r.variant.unwrap_or(Variant::TableI4s) };
    let suites: Vec<Suite> = match r.suite {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    let reports: Vec<SuiteReport> = suites.iter().map(|s| run_suite(*s, &cfg)).collect::<Result<_, _>>()?;
    let text = match r.format {
        OutputFormat::Json => serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n",
        _ => {
            let mut out = String::new();
            for rep in &reports {
                out.push_str(&rep.summary_line());
                out.push('\n');
                for c in rep.failures() {
                    out.push_str(&format!("  FAIL {}: deviation {:.3e} > {:.1e}\n", c.name, c.deviation, c.tolerance));
                }
            }
            out
        }
    };
    emit(r, &text)?;
    let failed: Vec<&SuiteReport> = reports.iter().filter(|rep| !rep.passed()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        let mut msg = String::from("verification failed:");
        for rep in failed {
            for c in rep.failures() {
                msg.push_str(&format!("\n  {}: {}", rep.suite, c.name));
            }
        }
        Err(Failure::Verification(msg))
    }
}

fn run_report(r: &Resolved) -> Outcome {
    let report = discrepancy_report(&ReportConfig::default())?;
    let text = match r.format {
        OutputFormat::Md => report.to_markdown(r.precision),
        OutputFormat::Json => report.to_json() + "\n",
        OutputFormat::Csv => return Err(Failure::Usage("report supports --format md or json".into())),
    };
    emit(r, &text)
}

fn run(cli: Cli) -> Outcome {
    let out_dir = std::env::var_os(OUT_DIR_VAR).map(PathBuf::from);
    let r = resolve(cli.flags, out_dir.as_deref()).map_err(Failure::Usage)?;
    match cli.command {
        Command::Table1 => run_table(&r, TableConfig::oscillator()),
        Command::Table2 => run_table(&r, TableConfig::coulomb()),
        Command::Spectrum => run_spectrum(&r),
        Command::Verify => run_verify(&r),
        Command::Report => run_report(&r),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
