//! Option resolution: flags, then the key=value config file, then defaults.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use pertspec::format::{check_precision, DEFAULT_PRECISION};
use pertspec::perturbation::Variant;
use pertspec::spectra::Family;
use pertspec::verify::Suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Table1,
    Table2,
    Spectrum,
    Verify,
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Md,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyFlag {
    Ho,
    Coulomb,
}

impl From<FamilyFlag> for Family {
    fn from(f: FamilyFlag) -> Self {
        match f {
            FamilyFlag::Ho => Family::HarmonicOscillator,
            FamilyFlag::Coulomb => Family::Coulomb,
        }
    }
}

/// Every flag is optional so the config file can fill the gaps.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    #[arg(long, value_enum)]
    pub family: Option<FamilyFlag>,
    #[arg(long, allow_negative_numbers = true)]
    pub z: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub s: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub nu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub omega2: Option<f64>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub l: Option<u32>,
    /// printed (as-printed) or table1 (tableI-4s).
    #[arg(long)]
    pub variant: Option<Variant>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Significant digits, 6 to 17.
    #[arg(long)]
    pub precision: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Plain key=value file; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub suite: Option<Suite>,
    #[arg(long)]
    pub r_min: Option<f64>,
    #[arg(long)]
    pub r_max: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    /// Leave the table reference column empty instead of solving on the grid.
    #[arg(long)]
    pub skip_ref: bool,
    /// spectrum: write the state's normalization quadrature rule as CSV.
    #[arg(long)]
    pub dump_quadrature: Option<PathBuf>,
    /// spectrum: write `r,psi` samples of the unperturbed state as CSV.
    #[arg(long)]
    pub profile: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Resolved {
    pub family: Option<Family>,
    pub z: Option<f64>,
    pub s: Option<f64>,
    pub nu: Option<f64>,
    pub omega2: Option<f64>,
    pub n: Option<u32>,
    pub l: Option<u32>,
    pub variant: Option<Variant>,
    pub format: OutputFormat,
    pub precision: usize,
    pub out: Option<PathBuf>,
    pub suite: Option<Suite>,
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
    pub points: Option<usize>,
    pub skip_ref: bool,
    pub dump_quadrature: Option<PathBuf>,
    pub profile: Option<PathBuf>,
}

pub const OUT_DIR_VAR: &str = "PERTSPEC_OUT_DIR";

pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("config line {}: expected key=value, got '{line}'", i + 1))?;
        let key = k.trim().replace('-', "_");
        if !KEYS.contains(&key.as_str()) {
            return Err(format!("config line {}: unknown key '{}'", i + 1, k.trim()));
        }
        map.insert(key, v.trim().to_string());
    }
    Ok(map)
}

const KEYS: [&str; 16] = [
    "family", "z", "s", "nu", "omega2", "n", "l", "variant", "format", "precision", "out", "suite", "r_min", "r_max",
    "points", "skip_ref",
];

fn from_config<T: std::str::FromStr>(cfg: &BTreeMap<String, String>, key: &str) -> Result<Option<T>, String>
where
    T::Err: std::fmt::Display,
{
    cfg.get(key)
        .map(|v| v.parse::<T>().map_err(|e| format!("config key '{key}': invalid value '{v}': {e}")))
        .transpose()
}

fn enum_from_config<T: ValueEnum>(cfg: &BTreeMap<String, String>, key: &str) -> Result<Option<T>, String> {
    cfg.get(key).map(|v| T::from_str(v, true).map_err(|e| format!("config key '{key}': {e}"))).transpose()
}

fn in_out_dir(path: Option<PathBuf>, out_dir: Option<&Path>) -> Option<PathBuf> {
    match (path, out_dir) {
        (Some(p), Some(dir)) if p.is_relative() => Some(dir.join(p)),
        (p, _) => p,
    }
}

/// Merges flags over the config file; `out_dir` prefixes relative output paths.
pub fn resolve(flags: Flags, out_dir: Option<&Path>) -> Result<Resolved, String> {
    let cfg = match &flags.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
            parse_config_text(&text)?
        }
        None => BTreeMap::new(),
    };
    let family = match flags.family {
        Some(f) => Some(f),
        None => enum_from_config::<FamilyFlag>(&cfg, "family")?,
    };
    let precision = match flags.precision {
        Some(p) => p,
        None => from_config(&cfg, "precision")?.unwrap_or(DEFAULT_PRECISION),
    };
    check_precision(precision).map_err(|e| e.to_string())?;
    let skip_ref = flags.skip_ref || from_config::<bool>(&cfg, "skip_ref")?.unwrap_or(false);
    Ok(Resolved {
        family: family.map(Family::from),
        z: flags.z.map_or_else(|| from_config(&cfg, "z"), |v| Ok(Some(v)))?,
        s: flags.s.map_or_else(|| from_config(&cfg, "s"), |v| Ok(Some(v)))?,
        nu: flags.nu.map_or_else(|| from_config(&cfg, "nu"), |v| Ok(Some(v)))?,
        omega2: flags.omega2.map_or_else(|| from_config(&cfg, "omega2"), |v| Ok(Some(v)))?,
        n: flags.n.map_or_else(|| from_config(&cfg, "n"), |v| Ok(Some(v)))?,
        l: flags.l.map_or_else(|| from_config(&cfg, "l"), |v| Ok(Some(v)))?,
        variant: flags.variant.map_or_else(|| from_config(&cfg, "variant"), |v| Ok(Some(v)))?,
        format: match flags.format {
            Some(f) => f,
            None => enum_from_config(&cfg, "format")?.unwrap_or(OutputFormat::Md),
        },
        precision,
        out: in_out_dir(flags.out.map_or_else(|| from_config(&cfg, "out"), |v| Ok(Some(v)))?, out_dir),
        suite: flags.suite.map_or_else(|| from_config(&cfg, "suite"), |v| Ok(Some(v)))?,
        r_min: flags.r_min.map_or_else(|| from_config(&cfg, "r_min"), |v| Ok(Some(v)))?,
        r_max: flags.r_max.map_or_else(|| from_config(&cfg, "r_max"), |v| Ok(Some(v)))?,
        points: flags.points.map_or_else(|| from_config(&cfg, "points"), |v| Ok(Some(v)))?,
        skip_ref,
        dump_quadrature: in_out_dir(flags.dump_quadrature, out_dir),
        profile: in_out_dir(flags.profile, out_dir),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_text_parsing() {
        let m = parse_config_text("# comment\nz = 0.5\nr-min=1e-6\n\nvariant=printed\n").unwrap();
        assert_eq!(m["z"], "0.5");
        assert_eq!(m["r_min"], "1e-6");
        assert_eq!(m["variant"], "printed");
        assert!(parse_config_text("z 0.5").is_err());
        assert!(parse_config_text("bogus=1").is_err());
    }

    #[test]
    fn flags_beat_config() {
        let dir = std::env::temp_dir().join(format!("pertspec-cfg-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.cfg");
        fs::write(&path, "z=0.3\nnu=0.2\nformat=csv\nprecision=8\n").unwrap();
        let flags = Flags { z: Some(0.7), config: Some(path), ..Flags::default() };
        let r = resolve(flags, None).unwrap();
        assert_eq!(r.z, Some(0.7));
        assert_eq!(r.nu, Some(0.2));
        assert_eq!(r.format, OutputFormat::Csv);
        assert_eq!(r.precision, 8);
        fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn precision_and_out_dir() {
        assert!(resolve(Flags { precision: Some(5), ..Flags::default() }, None).is_err());
        let r = resolve(Flags { out: Some("t.md".into()), ..Flags::default() }, Some(Path::new("/tmp/x"))).unwrap();
        assert_eq!(r.out, Some(PathBuf::from("/tmp/x/t.md")));
        let r = resolve(Flags { out: Some("/abs/t.md".into()), ..Flags::default() }, Some(Path::new("/tmp/x"))).unwrap();
        assert_eq!(r.out, Some(PathBuf::from("/abs/t.md")));
        assert_eq!(resolve(Flags::default(), None).unwrap().precision, DEFAULT_PRECISION);
    }
}
