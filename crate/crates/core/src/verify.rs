//! Invariant suites with per-check deviations and tolerances.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laguerre::{
    gauss_laguerre_rule, generating_closed_form, generating_partial_sum, integral_orthogonality, laguerre_eval,
    laguerre_eval_explicit, quad_laguerre_product, y_recursion_coefficients, LaguerreIndex,
};
use crate::oracle::report::{discrepancy_report, Item, ReportConfig};
use crate::oracle::{
    exact_full, hellmann_feynman_check, solve_line, solve_radial_log, Extrapolation, HfParameter, LineGrid, LogGrid,
};
use crate::perturbation::{
    ho_hprime_diag_reference, ho_offdiag_explicit_sum, ho_offdiag_second_order, ho_total_energy, Variant,
};
use crate::spectra::{
    coulomb_energy_via_morse, coulomb_radial_wavefunction, ho_energy_via_morse, ho_radial_wavefunction, AMode,
    LangerMap, MorseParams, Normalization, Observable, PotentialSpec, QuantumNumbers,
};
use crate::tables::{build_table, TableConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Laguerre,
    Spectra,
    Perturbation,
    Oracle,
    Tables,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Laguerre, Suite::Spectra, Suite::Perturbation, Suite::Oracle, Suite::Tables];

    pub fn label(self) -> &'static str {
        match self {
            Suite::Laguerre => "laguerre",
            Suite::Spectra => "spectra",
            Suite::Perturbation => "perturbation",
            Suite::Oracle => "oracle",
            Suite::Tables => "tables",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|v| v.label() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite '{s}'; expected one of laguerre, spectra, perturbation, oracle, tables")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub deviation: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.deviation <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn max_deviation(&self) -> f64 {
        self.checks.iter().map(|c| c.deviation).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.failures().next().is_none()
    }

    pub fn summary_line(&self) -> String {
        let failed = self.failures().count();
        format!(
            "{} {}: {} checks, {} failed, max deviation {:.3e}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.checks.len(),
            failed,
            self.max_deviation()
        )
    }
}

/// Relative deviation with an absolute floor on the scale.
pub fn rel(got: f64, want: f64, floor: f64) -> f64 {
    let d = (got - want).abs();
    if d == 0.0 {
        0.0
    } else {
        d / want.abs().max(floor)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    /// Variant used to rebuild the oscillator table in the tables suite.
    pub table_variant: Variant,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { table_variant: Variant::TableI4s }
    }
}

fn push(checks: &mut Vec<Check>, name: String, deviation: f64, tolerance: f64) {
    // NaN never passes
    let deviation = if deviation.is_nan() { f64::INFINITY } else { deviation };
    checks.push(Check { name, deviation, tolerance });
}

pub const ORTHOGONALITY_ORDERS: [f64; 4] = [0.5, 1.0, 1.024_695_076_6, 2.049_390_153_2];

/// Quadrature against the orthogonality closed form, scaled by `√(h_m h_n)`.
pub fn orthogonality_checks(max_degree: usize, orders: &[f64], tol: f64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &k in orders {
        for m in 0..=max_degree {
            for n in 0..=max_degree {
                let q = quad_laguerre_product(m, n, k, 0)?;
                let scale = (integral_orthogonality(m, m, k) * integral_orthogonality(n, n, k)).sqrt();
                let dev = (q - integral_orthogonality(m, n, k)).abs() / scale;
                push(&mut out, format!("orthogonality m={m} n={n} k={k}"), dev, tol);
            }
        }
    }
    Ok(out)
}

/// Three-term `y` recursion residual, relative to the sum of term magnitudes.
pub fn y_recursion_checks(max_degree: usize, orders: &[f64], tol: f64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &k in orders {
        for n in 0..=max_degree {
            let c = y_recursion_coefficients(LaguerreIndex::new(n, k)?);
            for y in [0.1, 0.7, 2.0, 5.0, 12.0] {
                let l = |d: usize| laguerre_eval(LaguerreIndex::new(d, k).unwrap(), y).unwrap();
                let down = if n == 0 { 0.0 } else { c.down * l(n - 1) };
                let terms = [y * l(n), c.diag * l(n), c.up * l(n + 1), down];
                let residual = terms[0] - terms[1] - terms[2] - terms[3];
                let scale = terms.iter().map(|t| t.abs()).sum::<f64>().max(1.0);
                push(&mut out, format!("y-recursion n={n} k={k} y={y}"), residual.abs() / scale, tol);
            }
        }
    }
    Ok(out)
}

/// Explicit sum against the recurrence.
pub fn explicit_sum_checks(max_degree: usize, orders: &[f64], tol: f64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &k in orders {
        for n in 0..=max_degree {
            for z in [0.05, 0.5, 1.0, 3.0, 8.0, 15.0] {
                let i = LaguerreIndex::new(n, k)?;
                let a = laguerre_eval_explicit(i, z)?;
                let b = laguerre_eval(i, z)?;
                push(&mut out, format!("explicit-sum n={n} k={k} z={z}"), rel(a, b, 1.0), tol);
            }
        }
    }
    Ok(out)
}

pub fn laguerre_suite() -> Result<SuiteReport> {
    let mut checks = orthogonality_checks(20, &ORTHOGONALITY_ORDERS, 1e-10)?;
    checks.extend(y_recursion_checks(20, &ORTHOGONALITY_ORDERS, 1e-11)?);
    checks.extend(explicit_sum_checks(15, &ORTHOGONALITY_ORDERS, 1e-10)?);
    for (sigma, z, f) in [(0.5, 1.0, 0.3), (1.0, 2.0, 0.2), (2.5, 0.5, -0.4)] {
        let partial = generating_partial_sum(sigma, z, f, 200)?;
        push(
            &mut checks,
            format!("generating series sigma={sigma} z={z} f={f}"),
            rel(partial, generating_closed_form(sigma, z, f), 1e-300),
            1e-10,
        );
    }
    for order in [5, 20, 60] {
        let rule = gauss_laguerre_rule(order, 0.5)?;
        let total: f64 = rule.weights().iter().sum();
        push(&mut checks, format!("rule weights order={order}"), rel(total, crate::special::gamma(1.5), 1e-300), 1e-12);
    }
    Ok(SuiteReport { suite: Suite::Laguerre, checks })
}

pub const GAUGE_ALPHAS: [f64; 3] = [0.3, 1.0, 2.7];
pub const GAUGE_R0S: [f64; 3] = [0.5, 1.0, 4.0];

/// Spread of the Morse-route energies over the gauge grid, per state and family.
pub fn gauge_checks(tol: f64) -> Result<Vec<Check>> {
    let ho = PotentialSpec::<f64>::harmonic(0.5, 0.5, 0.8, 0.0)?;
    let cou = PotentialSpec::<f64>::coulomb(-1.0, -1.0, 0.1, 0.0)?;
    let mut out = Vec::new();
    for n in 0..4 {
        for l in 0..3 {
            let qn = QuantumNumbers::new(n, l);
            let mut ho_e = Vec::new();
            let mut cou_e = Vec::new();
            for a in GAUGE_ALPHAS {
                for r0 in GAUGE_R0S {
                    ho_e.push(ho_energy_via_morse(&ho, qn, &LangerMap::ho(a, r0)?, AMode::Printed)?);
                    cou_e.push(coulomb_energy_via_morse(&cou, qn, &LangerMap::coulomb(a, r0)?, AMode::Printed)?);
                }
            }
            for (family, e) in [("oscillator", ho_e), ("coulomb", cou_e)] {
                let lo = e.iter().cloned().fold(f64::INFINITY, f64::min);
                let hi = e.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                push(&mut out, format!("gauge {family} n={n} l={l}"), (hi - lo) / lo.abs().max(hi.abs()), tol);
            }
        }
    }
    Ok(out)
}

/// Morse levels of `(V₁, V₂, α) = (-16, 8, 1)` against the line grid, plus the level count.
pub fn morse_checks(points: usize, tol: f64) -> Result<Vec<Check>> {
    let p = MorseParams::<f64>::new(-16.0, 8.0, 1.0)?;
    let grid = LineGrid::new(-2.0, 30.0, points)?;
    let count = p.level_count();
    let levels = solve_line(&p, &grid, count as usize, Extrapolation::Richardson)?;
    let mut out = Vec::new();
    for (n, got) in levels.iter().enumerate() {
        push(&mut out, format!("morse level n={n}"), (got - p.energy(n as u32)?).abs(), tol);
    }
    let below = crate::oracle::line_levels_below(&p, &grid, 0.0)?;
    push(&mut out, format!("morse level count {count} vs grid {below}"), (count as f64 - below as f64).abs(), 0.0);
    Ok(out)
}

pub fn spectra_suite() -> Result<SuiteReport> {
    let mut checks = gauge_checks(1e-12)?;
    checks.extend(morse_checks(4000, 1e-5)?);
    let ho = PotentialSpec::<f64>::harmonic(0.5, 0.25, 0.8, 0.0)?;
    let cou = PotentialSpec::<f64>::coulomb(1.0, 1.0, 0.1, 0.0)?;
    for n in 0..4 {
        for l in 0..3 {
            let qn = QuantumNumbers::new(n, l);
            let a = ho_radial_wavefunction(&ho, qn)?.norm_integral()?;
            push(&mut checks, format!("oscillator norm n={n} l={l}"), (a - 1.0).abs(), 1e-12);
            let b = coulomb_radial_wavefunction(&cou, qn, Normalization::Unit)?.norm_integral()?;
            push(&mut checks, format!("coulomb norm n={n} l={l}"), (b - 1.0).abs(), 1e-12);
        }
    }
    Ok(SuiteReport { suite: Suite::Spectra, checks })
}

pub const OFFDIAG_Z: [f64; 3] = [0.3, 0.5, 1.0];
pub const OFFDIAG_S: [f64; 2] = [0.25, 0.5];

/// Off-diagonal closed form against the explicit `m = n ± 1` sum.
pub fn offdiag_checks(max_n: u32, max_l: u32, tol: f64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for z in OFFDIAG_Z {
        for s in OFFDIAG_S {
            let spec = PotentialSpec::<f64>::harmonic(z, s, 0.8, 0.0)?;
            for n in 0..=max_n {
                for l in 0..=max_l {
                    let qn = QuantumNumbers::new(n, l);
                    let closed = ho_offdiag_second_order(&spec, qn)?;
                    let sum = ho_offdiag_explicit_sum(&spec, qn)?;
                    push(&mut out, format!("offdiag z={z} s={s} n={n} l={l}"), rel(sum, closed, 1e-300), tol);
                }
            }
        }
    }
    Ok(out)
}

pub fn perturbation_suite() -> Result<SuiteReport> {
    let mut checks = offdiag_checks(8, 3, 1e-12)?;
    for s in OFFDIAG_S {
        let spec = PotentialSpec::<f64>::harmonic(0.5, s, 0.8, 0.01)?;
        for n in 0..4 {
            for l in 0..3 {
                let qn = QuantumNumbers::new(n, l);
                let state = ho_radial_wavefunction(&spec, qn)?;
                let quad = 0.01 * state.expectation(Observable::InvR2)?;
                let closed = ho_hprime_diag_reference(&spec, qn)?;
                push(&mut checks, format!("inverse-square element s={s} n={n} l={l}"), rel(quad, closed, 1e-300), 1e-10);
            }
        }
    }
    // the two denominators agree wherever 2s = 1
    let spec = PotentialSpec::<f64>::harmonic(0.5, 0.5, 0.8, 0.01)?;
    for n in 0..4 {
        let qn = QuantumNumbers::new(n, 0);
        let a = ho_total_energy(&spec, qn, Variant::AsPrinted)?;
        let b = ho_total_energy(&spec, qn, Variant::TableI4s)?;
        push(&mut checks, format!("variants at s=0.5 n={n}"), rel(a, b, 1e-300), 1e-15);
    }
    Ok(SuiteReport { suite: Suite::Perturbation, checks })
}

/// Hellmann–Feynman identities over the sampled box of both families.
pub fn hellmann_feynman_checks(max_n: u32, max_l: u32, tol: f64) -> Result<Vec<Check>> {
    let specs = [
        PotentialSpec::<f64>::harmonic(0.5, 0.5, 0.8, 0.01)?,
        PotentialSpec::<f64>::harmonic(1.0, 0.25, 0.3, 0.0001)?,
        PotentialSpec::<f64>::coulomb(-1.0, 0.001, 0.1, 0.2)?,
        PotentialSpec::<f64>::coulomb(-2.0, -1.0, 0.5, 0.5)?,
    ];
    let mut out = Vec::new();
    for spec in &specs {
        for n in 0..=max_n {
            for l in 0..=max_l {
                let qn = QuantumNumbers::new(n, l);
                for param in [HfParameter::Nu, HfParameter::Coupling] {
                    let (lhs, rhs) = hellmann_feynman_check(spec, qn, param)?;
                    push(
                        &mut out,
                        format!("hellmann-feynman {} z={} {param:?} n={n} l={l}", spec.family().label(), spec.z()),
                        rel(lhs, rhs, 1.0),
                        tol,
                    );
                }
            }
        }
    }
    Ok(out)
}

pub fn oracle_suite() -> Result<SuiteReport> {
    let mut checks = hellmann_feynman_checks(4, 2, 1e-7)?;
    let specs = [PotentialSpec::<f64>::harmonic(0.5, 0.5, 0.8, 0.01)?, PotentialSpec::<f64>::coulomb(-1.0, 0.001, 0.1, 0.0)?];
    for spec in &specs {
        let (r_max, z, c) = (if spec.family().mu() == 2 { 20.0 } else { 400.0 }, spec.z(), spec.nu() + spec.omega2());
        let mu = spec.family().mu();
        let grid = LogGrid::new(1e-13, r_max, 2000)?;
        for l in 0..2 {
            let levels = solve_radial_log(|r: f64| z * r.powi(mu) + c / (r * r), l, &grid, 3, Extrapolation::Richardson)?;
            for (n, got) in levels.iter().enumerate() {
                let want = exact_full(spec, QuantumNumbers::new(n as u32, l))?;
                push(&mut checks, format!("log grid {} n={n} l={l}", spec.family().label()), rel(*got, want, 1e-300), 1e-7);
            }
        }
    }
    let report = discrepancy_report(&ReportConfig::default())?;
    for item in Item::ALL {
        let count = report.of(item).count();
        push(&mut checks, format!("catalog item ({}) present", item.letter()), if count > 0 { 0.0 } else { 1.0 }, 0.0);
    }
    for r in &report.records {
        let dev = if r.routes.len() >= 2 { r.route_spread() } else { f64::INFINITY };
        push(&mut checks, format!("catalog routes {}", r.quantity), dev, crate::oracle::report::ROUTE_TOLERANCE);
    }
    Ok(SuiteReport { suite: Suite::Oracle, checks })
}

/// Published table values, oscillator table rebuilt under `variant`.
pub fn tables_suite(variant: Variant) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let mut osc = TableConfig::oscillator();
    osc.variant = variant;
    let mut cou = TableConfig::coulomb();
    for cfg in [&mut osc, &mut cou] {
        cfg.skip_reference = true;
        let table = build_table(cfg)?;
        for r in &table.rows {
            for (name, got, want) in [("E_pure", r.e_pure, r.published_e_pure), ("E_n", r.e_n, r.published_e_n)] {
                if let Some(w) = want {
                    push(
                        &mut checks,
                        format!(
                            "{} table s={} Omega={} n={} l={} {name} ({})",
                            cfg.family.label(),
                            r.s,
                            r.omega2,
                            r.n,
                            r.l,
                            cfg.variant.label()
                        ),
                        rel(got, w, 1e-300),
                        1e-12,
                    );
                }
            }
        }
    }
    Ok(SuiteReport { suite: Suite::Tables, checks })
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    match suite {
        Suite::Laguerre => laguerre_suite(),
        Suite::Spectra => spectra_suite(),
        Suite::Perturbation => perturbation_suite(),
        Suite::Oracle => oracle_suite(),
        Suite::Tables => tables_suite(cfg.table_variant),
    }
}


#[cfg(test)]
mod slow {
    use super::*;

    #[test]
    fn slow_suites_pass() {
        for s in [Suite::Spectra, Suite::Oracle] {
            let t = std::time::Instant::now();
            let rep = run_suite(s, &VerifyConfig::default()).unwrap();
            eprintln!("{} in {:?}", rep.summary_line(), t.elapsed());
            assert!(rep.passed(), "{:?}", rep.failures().take(5).collect::<Vec<_>>());
        }
    }
}
