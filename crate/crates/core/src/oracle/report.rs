//! Catalog of closed forms that disagree with an independent oracle.

use serde::{Deserialize, Serialize};

use super::{exact_full_coulomb, exact_full_ho, solve_radial_log, Extrapolation, LogGrid};
use crate::error::Result;
use crate::format::sig;
use crate::laguerre::{integral_km1_printed, integral_km1_reference, quad_laguerre_product};
use crate::perturbation::{coulomb_total_energy, ho_hprime_diag_printed, ho_hprime_diag_reference, ho_total_energy, Variant};
use crate::spectra::{
    coulomb_energy_via_morse, coulomb_radial_wavefunction, coulomb_unperturbed_energy, ho_radial_wavefunction,
    ho_unperturbed_energy, AMode, CoulombEnergyMode, LangerMap, Normalization, Observable, PotentialSpec,
    QuantumNumbers,
};
use crate::tables::{OSCILLATOR_NU, OSCILLATOR_S, OSCILLATOR_TABLE, OSCILLATOR_Z};

/// Relative agreement required between independent oracle routes.
pub const ROUTE_TOLERANCE: f64 = 1e-6;

/// Catalog items `a` through `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Item {
    /// `z^{k-1}` weighted Laguerre product: three-case closed form vs integration.
    LaguerreProduct,
    /// Oscillator `⟨ω²/r²⟩` closed form vs the exact expectation.
    OscillatorInverseSquare,
    /// Coulomb unperturbed level closed form vs the Morse route.
    CoulombLevel,
    /// Coulomb prefactor `Λ(n)` norm vs 1.
    CoulombNorm,
    /// `A = ν + (l+½)²` vs the coefficient the radial equation implies.
    ACoefficient,
    /// Coulomb total at `ω² = 0` vs the exact level.
    CoulombTotal,
    /// Oscillator table column `s = 0.25` under the two denominators.
    TableVariant,
}

impl Item {
    pub const ALL: [Item; 7] = [
        Item::LaguerreProduct,
        Item::OscillatorInverseSquare,
        Item::CoulombLevel,
        Item::CoulombNorm,
        Item::ACoefficient,
        Item::CoulombTotal,
        Item::TableVariant,
    ];

    pub fn letter(self) -> char {
        (b'a' + Item::ALL.iter().position(|i| *i == self).expect("listed") as u8) as char
    }

    pub fn anchor(self) -> &'static str {
        match self {
            Item::LaguerreProduct => "laguerre: z^(k-1) weighted product of L_m^(k) L_n^(k), three-case closed form",
            Item::OscillatorInverseSquare => "oscillator: diagonal element of omega2/r^2 via <1/y>",
            Item::CoulombLevel => "coulomb: unperturbed level -[sqrt(2) Z/(N + sqrt(A))]^2",
            Item::CoulombNorm => "coulomb: radial prefactor Lambda(n) = sqrt(n!/(4Z Gamma(n+2sqrt(A)+1)))",
            Item::ACoefficient => "spectra: A = nu + (l + 1/2)^2 in the unperturbed levels",
            Item::CoulombTotal => "coulomb: total energy [2(Z-s)^2 + 4Z omega2 - 2s^2]/D^2 at omega2 = 0",
            Item::TableVariant => "oscillator table: final denominator 4s sqrt(2s) vs 4s at s = 0.25",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Route {
    pub name: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyRecord {
    pub item: Item,
    pub quantity: String,
    pub printed_value: f64,
    pub oracle_value: f64,
    pub abs_dev: f64,
    pub rel_dev: f64,
    pub anchor: String,
    /// Independent evaluations of `oracle_value`.
    pub routes: Vec<Route>,
}

impl DiscrepancyRecord {
    pub fn new(item: Item, quantity: String, printed: f64, routes: Vec<Route>) -> Self {
        let oracle = routes.first().map_or(f64::NAN, |r| r.value);
        let abs_dev = (printed - oracle).abs();
        Self {
            item,
            quantity,
            printed_value: printed,
            oracle_value: oracle,
            abs_dev,
            rel_dev: abs_dev / oracle.abs().max(1e-300),
            anchor: item.anchor().to_string(),
            routes,
        }
    }

    /// Largest relative spread between the routes and `oracle_value`.
    pub fn route_spread(&self) -> f64 {
        let scale = self.oracle_value.abs().max(1e-300);
        self.routes.iter().map(|r| (r.value - self.oracle_value).abs() / scale).fold(0.0, f64::max)
    }

    /// At least two routes, all within [`ROUTE_TOLERANCE`].
    pub fn confirmed(&self) -> bool {
        self.routes.len() >= 2 && self.route_spread() <= ROUTE_TOLERANCE
    }
}

fn route(name: &str, value: f64) -> Route {
    Route { name: name.to_string(), value }
}

/// Sampling ranges of the catalog.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub laguerre_orders: Vec<f64>,
    pub max_degree: usize,
    pub max_n: u32,
    pub max_l: u32,
    pub log_grid_points: usize,
}

impl Default for ReportConfig {
    fn default() -> Self {
        Self { laguerre_orders: vec![0.5, 1.0, 1.5, 2.5], max_degree: 3, max_n: 2, max_l: 1, log_grid_points: 3000 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub config: ReportConfig,
    pub records: Vec<DiscrepancyRecord>,
}

fn states(cfg: &ReportConfig) -> Vec<QuantumNumbers> {
    (0..=cfg.max_l).flat_map(|l| (0..=cfg.max_n).map(move |n| QuantumNumbers::new(n, l))).collect()
}

fn log_level<F: Fn(f64) -> f64>(v: F, qn: QuantumNumbers, r_max: f64, points: usize) -> Result<f64> {
    let grid = LogGrid::new(1e-13, r_max, points)?;
    let levels = solve_radial_log(v, qn.l, &grid, qn.n as usize + 1, Extrapolation::Richardson)?;
    Ok(levels[qn.n as usize])
}

fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, intervals: usize) -> f64 {
    let m = intervals + intervals % 2;
    let h = (b - a) / m as f64;
    let inner: f64 = (1..m).map(|i| if i % 2 == 1 { 4.0 } else { 2.0 } * f(a + i as f64 * h)).sum();
    (f(a) + f(b) + inner) * h / 3.0
}

fn laguerre_records(cfg: &ReportConfig, out: &mut Vec<DiscrepancyRecord>) -> Result<()> {
    for &k in &cfg.laguerre_orders {
        for n in 0..=cfg.max_degree {
            for m in n.saturating_sub(1)..=n + 1 {
                let Some(printed) = integral_km1_printed(m, n, k).value() else { continue };
                out.push(DiscrepancyRecord::new(
                    Item::LaguerreProduct,
                    format!("km1_product[m={m},n={n},k={k}]"),
                    printed,
                    vec![
                        route("closed-form", integral_km1_reference(m, n, k)),
                        route("gauss-laguerre", quad_laguerre_product(m, n, k, -1)?),
                    ],
                ));
            }
        }
    }
    Ok(())
}

fn oscillator_inverse_square_records(cfg: &ReportConfig, out: &mut Vec<DiscrepancyRecord>) -> Result<()> {
    for s in OSCILLATOR_S {
        let spec = PotentialSpec::harmonic(OSCILLATOR_Z, s, OSCILLATOR_NU, 1.0)?;
        for qn in states(cfg) {
            let st = ho_radial_wavefunction(&spec, qn)?;
            out.push(DiscrepancyRecord::new(
                Item::OscillatorInverseSquare,
                format!("ho_hprime_diag[s={s},nu={OSCILLATOR_NU},omega2=1,n={},l={}]", qn.n, qn.l),
                ho_hprime_diag_printed(&spec, qn)?,
                vec![
                    route("closed-form", ho_hprime_diag_reference(&spec, qn)?),
                    route("quadrature", st.expectation(Observable::InvR2)?),
                ],
            ));
        }
    }
    Ok(())
}

fn coulomb_level_records(cfg: &ReportConfig, out: &mut Vec<DiscrepancyRecord>) -> Result<()> {
    // nu = 0 keeps both A conventions equal, isolating the prefactor
    let spec = PotentialSpec::coulomb(-1.0, -1.0, 0.0, 0.0)?;
    let map = LangerMap::coulomb(1.0, 1.0)?;
    for qn in states(cfg) {
        let principal = (qn.n + qn.l + 1) as f64;
        out.push(DiscrepancyRecord::new(
            Item::CoulombLevel,
            format!("coulomb_e0[z=-1,s=-1,nu=0,n={},l={}]", qn.n, qn.l),
            coulomb_unperturbed_energy(&spec, qn, CoulombEnergyMode::Printed)?,
            vec![
                route("morse-route", coulomb_energy_via_morse(&spec, qn, &map, AMode::Printed)?),
                route("log-grid", log_level(|r| -1.0 / r, qn, 40.0 * principal * principal, cfg.log_grid_points)?),
            ],
        ));
    }
    Ok(())
}

fn coulomb_norm_records(cfg: &ReportConfig, out: &mut Vec<DiscrepancyRecord>) -> Result<()> {
    for z in [1.0, 2.0] {
        let spec = PotentialSpec::coulomb(z, z, 0.1, 0.0)?;
        for qn in states(cfg) {
            let printed = coulomb_radial_wavefunction(&spec, qn, Normalization::Printed)?;
            let unit = coulomb_radial_wavefunction(&spec, qn, Normalization::Unit)?;
            // the state decays like e^{-Δr/2}
            let r_max = 80.0 / unit.scale();
            out.push(DiscrepancyRecord::new(
                Item::CoulombNorm,
                format!("coulomb_norm[z={z},nu=0.1,n={},l={}]", qn.n, qn.l),
                printed.norm_integral()?,
                vec![
                    route("quadrature", unit.norm_integral()?),
                    route("simpson", simpson(|r| unit.psi(r).powi(2), 0.0, r_max, 40000)),
                ],
            ));
        }
    }
    Ok(())
}

fn a_coefficient_records(cfg: &ReportConfig, out: &mut Vec<DiscrepancyRecord>) -> Result<()> {
    let ho = PotentialSpec::harmonic(OSCILLATOR_Z, OSCILLATOR_Z, OSCILLATOR_NU, 0.0)?;
    let cou = PotentialSpec::coulomb(-1.0, -1.0, 0.1, 0.0)?;
    for qn in states(cfg) {
        let c = OSCILLATOR_NU;
        out.push(DiscrepancyRecord::new(
            Item::ACoefficient,
            format!("ho_e0[z=s={OSCILLATOR_Z},nu={c},n={},l={}]", qn.n, qn.l),
            ho_unperturbed_energy(&ho, qn, AMode::Printed)?,
            vec![
                route("closed-form", exact_full_ho(&ho, qn)?),
                route("log-grid", log_level(|r| OSCILLATOR_Z * r * r + c / (r * r), qn, 20.0, cfg.log_grid_points)?),
            ],
        ));
        let principal = (qn.n + qn.l + 1) as f64;
        out.push(DiscrepancyRecord::new(
            Item::ACoefficient,
            format!("coulomb_e0[z=s=-1,nu=0.1,n={},l={}]", qn.n, qn.l),
            coulomb_unperturbed_energy(&cou, qn, CoulombEnergyMode::LangerDerived)?,
            vec![
                route("closed-form", exact_full_coulomb(&cou, qn)?),
                route(
                    "log-grid",
                    log_level(|r| -1.0 / r + 0.1 / (r * r), qn, 40.0 * principal * principal, cfg.log_grid_points)?,
                ),
            ],
        ));
    }
    Ok(())
}

fn coulomb_total_records(cfg: &ReportConfig, out: &mut Vec<DiscrepancyRecord>) -> Result<()> {
    for s in [0.001, 0.0001] {
        let spec = PotentialSpec::coulomb(-1.0, s, 0.1, 0.0)?;
        for qn in states(cfg) {
            let principal = (qn.n + qn.l + 1) as f64;
            out.push(DiscrepancyRecord::new(
                Item::CoulombTotal,
                format!("coulomb_total[z=-1,s={s},nu=0.1,omega2=0,n={},l={}]", qn.n, qn.l),
                coulomb_total_energy(&spec, qn)?,
                vec![
                    route("closed-form", exact_full_coulomb(&spec, qn)?),
                    route(
                        "log-grid",
                        log_level(|r| -1.0 / r + 0.1 / (r * r), qn, 40.0 * principal * principal, cfg.log_grid_points)?,
                    ),
                ],
            ));
        }
    }
    Ok(())
}

fn table_variant_records(out: &mut Vec<DiscrepancyRecord>) -> Result<()> {
    for (col, s) in OSCILLATOR_S.into_iter().enumerate() {
        for e in &OSCILLATOR_TABLE {
            let spec = PotentialSpec::harmonic(OSCILLATOR_Z, s, OSCILLATOR_NU, e.omega2)?;
            let qn = QuantumNumbers::new(e.n, e.l);
            out.push(DiscrepancyRecord::new(
                Item::TableVariant,
                format!("table_e_n[s={s},omega2={},n={},l={}]", e.omega2, e.n, e.l),
                ho_total_energy(&spec, qn, Variant::AsPrinted)?,
                vec![
                    route("tableI-4s", ho_total_energy(&spec, qn, Variant::TableI4s)?),
                    route("published", e.e_n[col].parse().expect("decimal literal")),
                ],
            ));
        }
    }
    Ok(())
}

pub fn discrepancy_report(cfg: &ReportConfig) -> Result<DiscrepancyReport> {
    let mut records = Vec::new();
    laguerre_records(cfg, &mut records)?;
    oscillator_inverse_square_records(cfg, &mut records)?;
    coulomb_level_records(cfg, &mut records)?;
    coulomb_norm_records(cfg, &mut records)?;
    a_coefficient_records(cfg, &mut records)?;
    coulomb_total_records(cfg, &mut records)?;
    table_variant_records(&mut records)?;
    Ok(DiscrepancyReport { config: cfg.clone(), records })
}

impl DiscrepancyReport {
    pub fn of(&self, item: Item) -> impl Iterator<Item = &DiscrepancyRecord> {
        self.records.iter().filter(move |r| r.item == item)
    }

    pub fn find(&self, quantity: &str) -> Option<&DiscrepancyRecord> {
        self.records.iter().find(|r| r.quantity == quantity)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_markdown(&self, precision: usize) -> String {
        let mut out = String::from("| item | quantity | printed | oracle | abs_dev | rel_dev | anchor |\n");
        out.push_str("|---|---|---|---|---|---|---|\n");
        for r in &self.records {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} | {} |\n",
                r.item.letter(),
                r.quantity,
                sig(r.printed_value, precision),
                sig(r.oracle_value, precision),
                sig(r.abs_dev, 3.max(precision.min(6))),
                sig(r.rel_dev, 3.max(precision.min(6))),
                r.anchor
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report() -> DiscrepancyReport {
        discrepancy_report(&ReportConfig::default()).unwrap()
    }

    #[test]
    fn every_item_is_present_and_confirmed() {
        let rep = report();
        for item in Item::ALL {
            assert!(rep.of(item).count() > 0, "{item:?} missing");
        }
        for r in &rep.records {
            assert!(r.confirmed(), "{}: spread {}", r.quantity, r.route_spread());
        }
    }

    #[test]
    fn catalog_examples() {
        let rep = report();
        let a = rep.find("km1_product[m=0,n=0,k=1]").unwrap();
        assert_eq!((a.printed_value, a.rel_dev), (2.0, 1.0));
        assert!((a.oracle_value - 1.0).abs() < 1e-15);

        let d = rep.find("coulomb_norm[z=1,nu=0.1,n=0,l=0]").unwrap();
        assert!((d.printed_value - 0.2979).abs() < 1e-4);
        assert!((d.oracle_value - 1.0).abs() < 1e-12);

        for g in rep.of(Item::TableVariant).filter(|r| r.quantity.starts_with("table_e_n[s=0.5,")) {
            assert!(g.abs_dev <= 1e-15 * g.oracle_value.abs());
        }
        for g in rep.of(Item::TableVariant).filter(|r| r.quantity.starts_with("table_e_n[s=0.25,")) {
            assert!(g.rel_dev > 1e-12, "{}", g.quantity);
        }

        let c = rep.find("coulomb_e0[z=-1,s=-1,nu=0,n=0,l=0]").unwrap();
        assert!((c.printed_value + 2.0).abs() < 1e-14 && (c.oracle_value + 0.5).abs() < 1e-14);
    }

    #[test]
    fn json_round_trip_and_markdown() {
        let rep = report();
        let back = DiscrepancyReport::from_json(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
        let md = rep.to_markdown(10);
        assert!(md.starts_with("| item | quantity | printed | oracle | abs_dev | rel_dev | anchor |"));
        assert_eq!(md.lines().count(), rep.records.len() + 2);
    }

    #[test]
    fn letters() {
        assert_eq!(Item::LaguerreProduct.letter(), 'a');
        assert_eq!(Item::TableVariant.letter(), 'g');
    }
}
