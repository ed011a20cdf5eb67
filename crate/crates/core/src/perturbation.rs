//! First- and second-order Rayleigh–Schrödinger corrections for the
//! oscillator-type (`h' = ω²/r²`) and Coulomb-type (`h' = ω²/r`) problems.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectra::{
    a_coefficient, coulomb_denominator, coulomb_unperturbed_energy, ho_ladder, ACoefficient, AMode,
    CoulombEnergyMode, Family, PotentialSpec, QuantumNumbers,
};

/// Evaluation convention for the final `(Z - s)` denominator of the oscillator totals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Variant {
    /// `4s√(2s)`, as written.
    #[default]
    #[serde(rename = "as-printed")]
    AsPrinted,
    /// `4s`, the convention behind the published `s = 0.25` oscillator column.
    #[serde(rename = "tableI-4s")]
    TableI4s,
}

impl Variant {
    pub fn label(self) -> &'static str {
        match self {
            Variant::AsPrinted => "as-printed",
            Variant::TableI4s => "tableI-4s",
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "as-printed" | "printed" => Ok(Variant::AsPrinted),
            "tableI-4s" | "table1" => Ok(Variant::TableI4s),
            other => Err(Error::Domain(format!(
                "unknown variant {other:?}; expected printed or table1"
            ))),
        }
    }
}

/// Component-wise energy `e0 + e1 + e2_diag + e2_offdiag`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyBreakdown<T> {
    pub e0: T,
    pub e1: T,
    pub e2_diag: T,
    pub e2_offdiag: T,
    pub total: T,
    pub variant: Variant,
}

struct HoParts<T> {
    root_2s: T,
    a: ACoefficient<T>,
    ladder: T,
}

fn ho_parts<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<HoParts<T>> {
    spec.expect(Family::HarmonicOscillator)?;
    let a = a_coefficient(spec.nu(), qn.l, AMode::Printed)?;
    Ok(HoParts { root_2s: (T::lit(2.0) * spec.s()).sqrt(), a, ladder: ho_ladder(qn, a.root()) })
}

/// Denominator of the `(Z - s)` terms in the oscillator totals.
fn screening_denominator<T: Real>(s: T, root_2s: T, variant: Variant) -> T {
    match variant {
        Variant::AsPrinted => T::lit(4.0) * s * root_2s,
        Variant::TableI4s => T::lit(4.0) * s,
    }
}

/// `(Z - s)(2n + 1 + √A)/√(2s)`, i.e. `(Z - s)⟨r²⟩`.
pub fn ho_first_order<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    let p = ho_parts(spec, qn)?;
    Ok((spec.z() - spec.s()) * p.ladder / p.root_2s)
}

/// `√(2s) ω² (2n + 1 + √A) / ((n + √A)(n + 1))`, the closed form as written.
pub fn ho_hprime_diag_printed<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    let p = ho_parts(spec, qn)?;
    let n = qn.n_real::<T>();
    Ok(p.root_2s * spec.omega2() * p.ladder / ((n + p.a.root()) * (n + T::one())))
}

/// `√(2s) ω² / √A`, the exact value of `⟨ω²/r²⟩`.
pub fn ho_hprime_diag_reference<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    let p = ho_parts(spec, qn)?;
    Ok(p.root_2s * spec.omega2() / p.a.root())
}

/// `-(Z - s)² (2n + 1 + √A) / (4s√(2s))`.
pub fn ho_offdiag_second_order<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    let p = ho_parts(spec, qn)?;
    let zs = spec.z() - spec.s();
    Ok(-zs * zs * p.ladder / (T::lit(4.0) * spec.s() * p.root_2s))
}

/// `Σ_{m = n ± 1} |⟨m|(Z - s) r²|n⟩|² / (E⁽⁰⁾ₙ - E⁽⁰⁾ₘ)` evaluated term by term.
///
/// `r² = y/√(2s)` and the only non-zero off-diagonal elements of `y` are
/// `-√((n+1)(n+1+√A))` and `-√(n(n+√A))`; the level spacing is `2√(2s)`.
pub fn ho_offdiag_explicit_sum<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    let p = ho_parts(spec, qn)?;
    let coupling = (spec.z() - spec.s()) / p.root_2s;
    let gap = T::lit(2.0) * p.root_2s;
    let n = qn.n_real::<T>();
    let k = p.a.root();
    let up = coupling * -((n + T::one()) * (n + T::one() + k)).sqrt();
    let mut sum = up * up / -gap;
    if qn.n > 0 {
        let down = coupling * -(n * (n + k)).sqrt();
        sum = sum + down * down / gap;
    }
    Ok(sum)
}

/// `√(2s)[X + ω²X/((n+√A)(n+1))] - (5s² + Z² - 6Zs) X / d`, `X = 2n + 1 + √A`,
/// with `d` chosen by `variant`.
pub fn ho_total_energy<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers, variant: Variant) -> Result<T> {
    let p = ho_parts(spec, qn)?;
    let (z, s) = (spec.z(), spec.s());
    let n = qn.n_real::<T>();
    let diag = spec.omega2() * p.ladder / ((n + p.a.root()) * (n + T::one()));
    let screening = (z - s) * (z - T::lit(5.0) * s) * p.ladder / screening_denominator(s, p.root_2s, variant);
    Ok(p.root_2s * (p.ladder + diag) - screening)
}

/// `(n' + 3/2)[√(2s)(1 + 2ω²/((n+1)(n'+l+1))) - (5s² + Z² - 6Zs)/d]` for `ν = 0`.
pub fn pure_ho_total<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers, variant: Variant) -> Result<T> {
    spec.expect(Family::HarmonicOscillator)?;
    if spec.nu() != T::zero() {
        return Err(Error::Domain(format!(
            "pure oscillator total needs nu = 0, got {}",
            spec.nu().as_f64()
        )));
    }
    let (z, s) = (spec.z(), spec.s());
    let root_2s = (T::lit(2.0) * s).sqrt();
    let n_prime = T::from_u32(qn.n_prime()).unwrap();
    let span = (qn.n_real::<T>() + T::one()) * (n_prime + T::from_u32(qn.l).unwrap() + T::one());
    let bracket = root_2s * (T::one() + T::lit(2.0) * spec.omega2() / span)
        - (z - s) * (z - T::lit(5.0) * s) / screening_denominator(s, root_2s, variant);
    Ok((n_prime + T::lit(1.5)) * bracket)
}

fn coulomb_d<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    spec.expect(Family::Coulomb)?;
    let a = a_coefficient(spec.nu(), qn.l, AMode::Printed)?;
    Ok(coulomb_denominator(qn, a.root()))
}

/// `4Z(Z - s) / (2n + 1 + 2√A)²`.
pub fn coulomb_first_order<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    let d = coulomb_d(spec, qn)?;
    Ok(T::lit(4.0) * spec.z() * (spec.z() - spec.s()) / (d * d))
}

/// `4Zω² / (2n + 1 + 2√A)²`.
pub fn coulomb_hprime_diag<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    let d = coulomb_d(spec, qn)?;
    Ok(T::lit(4.0) * spec.z() * spec.omega2() / (d * d))
}

/// `[2(Z - s)² + 4Zω² - 2s²] / (2n + 1 + 2√A)²`.
pub fn coulomb_total_energy<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    let d = coulomb_d(spec, qn)?;
    let (z, s) = (spec.z(), spec.s());
    let two = T::lit(2.0);
    Ok((two * (z - s) * (z - s) + T::lit(4.0) * z * spec.omega2() - two * s * s) / (d * d))
}

/// `2Z(Z - 2s + 2ω²)/(n' + l + 2)²`, without forming the square root of the written form.
/// `ν` does not enter.
pub fn pure_coulomb_total<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    spec.expect(Family::Coulomb)?;
    let z = spec.z();
    let two = T::lit(2.0);
    let m = T::from_u32(qn.n_prime() + qn.l + 2).unwrap();
    Ok(two * z * (z - two * spec.s() + two * spec.omega2()) / (m * m))
}

/// Splits the total into unperturbed, first-order and second-order parts.
///
/// Oscillator: the `variant` rescales `e1` and `e2_offdiag` by `√(2s)` so that
/// the parts still sum to [`ho_total_energy`]. Coulomb: `e0` is the written
/// unperturbed level and `e2_offdiag` is the residual of the written total.
pub fn breakdown<T: Real>(
    spec: &PotentialSpec<T>,
    qn: QuantumNumbers,
    variant: Variant,
) -> Result<EnergyBreakdown<T>> {
    match spec.family() {
        Family::HarmonicOscillator => {
            let p = ho_parts(spec, qn)?;
            let e0 = p.root_2s * p.ladder;
            let (mut e1, mut e2_offdiag) = (ho_first_order(spec, qn)?, ho_offdiag_second_order(spec, qn)?);
            if variant == Variant::TableI4s {
                e1 = e1 * p.root_2s;
                e2_offdiag = e2_offdiag * p.root_2s;
            }
            let e2_diag = ho_hprime_diag_printed(spec, qn)?;
            Ok(EnergyBreakdown { e0, e1, e2_diag, e2_offdiag, total: ho_total_energy(spec, qn, variant)?, variant })
        }
        Family::Coulomb => {
            if variant == Variant::TableI4s {
                return Err(Error::Domain("the tableI-4s variant applies to the oscillator family only".into()));
            }
            let e0 = coulomb_unperturbed_energy(spec, qn, CoulombEnergyMode::Printed)?;
            let e1 = coulomb_first_order(spec, qn)?;
            let e2_diag = coulomb_hprime_diag(spec, qn)?;
            let total = coulomb_total_energy(spec, qn)?;
            Ok(EnergyBreakdown { e0, e1, e2_diag, e2_offdiag: total - (e0 + e1 + e2_diag), total, variant })
        }
    }
}

/// Flat, serializable view of a breakdown together with its inputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BreakdownRecord {
    pub family: Family,
    pub z: f64,
    pub s: f64,
    pub nu: f64,
    pub omega2: f64,
    pub n: u32,
    pub l: u32,
    pub variant: Variant,
    pub e0: f64,
    pub e1: f64,
    pub e2_diag: f64,
    pub e2_offdiag: f64,
    pub total: f64,
}

impl BreakdownRecord {
    pub const CSV_HEADER: &'static str = "family,z,s,nu,omega2,n,l,variant,e0,e1,e2_diag,e2_offdiag,total";

    pub fn new<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers, b: &EnergyBreakdown<T>) -> Self {
        Self {
            family: spec.family(),
            z: spec.z().as_f64(),
            s: spec.s().as_f64(),
            nu: spec.nu().as_f64(),
            omega2: spec.omega2().as_f64(),
            n: qn.n,
            l: qn.l,
            variant: b.variant,
            e0: b.e0.as_f64(),
            e1: b.e1.as_f64(),
            e2_diag: b.e2_diag.as_f64(),
            e2_offdiag: b.e2_offdiag.as_f64(),
            total: b.total.as_f64(),
        }
    }

    /// Family, inputs and variant as CSV cells; numbers use `fmt`.
    pub fn csv_row(&self, fmt: impl Fn(f64) -> String) -> String {
        let head = [self.family.label().to_string(), fmt(self.z), fmt(self.s), fmt(self.nu), fmt(self.omega2)];
        let tail = [self.e0, self.e1, self.e2_diag, self.e2_offdiag, self.total].map(&fmt);
        format!(
            "{},{},{},{},{}",
            head.join(","),
            self.n,
            self.l,
            self.variant.label(),
            tail.join(",")
        )
    }

    pub fn write_csv<W: Write>(&self, mut out: W, fmt: impl Fn(f64) -> String) -> io::Result<()> {
        writeln!(out, "{}", Self::CSV_HEADER)?;
        writeln!(out, "{}", self.csv_row(fmt))
    }
}
