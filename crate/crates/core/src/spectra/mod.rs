//! Unperturbed spectra: the Morse problem, the Langer mapping onto it, and
//! the three-dimensional oscillator- and Coulomb-type levels and states.

mod langer;
mod morse;
mod state;

pub use langer::{
    coulomb_energy_via_morse, ho_energy_via_morse, langer_map_coulomb, langer_map_ho, LangerMap,
};
pub use morse::{MorseParams, MorseState};
pub use state::{coulomb_radial_wavefunction, ho_radial_wavefunction, Normalization, Observable, RadialState};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Power `μ` of the `s r^μ` term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `μ = 2`, perturbing term `ω²/r²`.
    HarmonicOscillator,
    /// `μ = -1`, perturbing term `ω²/r`.
    Coulomb,
}

impl Family {
    pub fn mu(self) -> i32 {
        match self {
            Family::HarmonicOscillator => 2,
            Family::Coulomb => -1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::HarmonicOscillator => "ho",
            Family::Coulomb => "coulomb",
        }
    }
}

/// `h₀ = -½ d²/dr² + s r^μ + ν/r²`, `h₁ = (Z - s) r^μ + h'`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec<T> {
    family: Family,
    z: T,
    s: T,
    nu: T,
    omega2: T,
}

impl<T: Real> PotentialSpec<T> {
    pub fn new(family: Family, z: T, s: T, nu: T, omega2: T) -> Result<Self> {
        for (name, v) in [("Z", z), ("s", s), ("nu", nu), ("omega2", omega2)] {
            if !v.is_finite() {
                return Err(Error::Domain(format!("{name} must be finite, got {}", v.as_f64())));
            }
        }
        match family {
            Family::HarmonicOscillator if !(s > T::zero()) => Err(Error::Domain(format!(
                "harmonic-oscillator family requires s > 0 (got {})",
                s.as_f64()
            ))),
            Family::Coulomb if z == T::zero() => {
                Err(Error::Domain("Coulomb family requires Z != 0".into()))
            }
            _ => Ok(Self { family, z, s, nu, omega2 }),
        }
    }

    pub fn harmonic(z: T, s: T, nu: T, omega2: T) -> Result<Self> {
        Self::new(Family::HarmonicOscillator, z, s, nu, omega2)
    }

    pub fn coulomb(z: T, s: T, nu: T, omega2: T) -> Result<Self> {
        Self::new(Family::Coulomb, z, s, nu, omega2)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn z(&self) -> T {
        self.z
    }

    pub fn s(&self) -> T {
        self.s
    }

    pub fn nu(&self) -> T {
        self.nu
    }

    pub fn omega2(&self) -> T {
        self.omega2
    }

    pub(crate) fn expect(&self, family: Family) -> Result<()> {
        if self.family != family {
            return Err(Error::Domain(format!(
                "operation needs the {} family, got {}",
                family.label(),
                self.family.label()
            )));
        }
        Ok(())
    }
}

/// Radial quantum number `n` and orbital quantum number `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub n: u32,
    pub l: u32,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: u32) -> Self {
        Self { n, l }
    }

    /// `N = n + 1/2`.
    pub fn big_n<T: Real>(&self) -> T {
        T::from_u32(self.n).unwrap() + T::lit(0.5)
    }

    /// `n' = 2n + l`.
    pub fn n_prime(&self) -> u32 {
        2 * self.n + self.l
    }

    pub(crate) fn n_real<T: Real>(&self) -> T {
        T::from_u32(self.n).unwrap()
    }
}

/// Which inverse-square coefficient to combine with the centrifugal term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AMode {
    /// `A = ν + (l + 1/2)²`, the coefficient the closed-form energies use.
    Printed,
    /// `A = 2ν + (l + 1/2)²`, the coefficient of `-½ d²/dr² + ν/r²`.
    LangerConsistent,
}

/// Effective inverse-square coefficient `A` and its root `√A`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ACoefficient<T> {
    value: T,
    root: T,
    mode: AMode,
}

impl<T: Real> ACoefficient<T> {
    pub fn value(&self) -> T {
        self.value
    }

    pub fn root(&self) -> T {
        self.root
    }

    pub fn mode(&self) -> AMode {
        self.mode
    }

    /// Wraps a raw positive coefficient, e.g. one that includes `ω²`.
    pub fn from_value(value: T, mode: AMode) -> Result<Self> {
        if !(value > T::zero()) || !value.is_finite() {
            return Err(Error::Domain(format!(
                "A = {} must be positive: the inverse-square strength is too attractive",
                value.as_f64()
            )));
        }
        Ok(Self { value, root: value.sqrt(), mode })
    }
}

pub fn a_coefficient<T: Real>(nu: T, l: u32, mode: AMode) -> Result<ACoefficient<T>> {
    let lh = T::from_u32(l).unwrap() + T::lit(0.5);
    let value = match mode {
        AMode::Printed => nu + lh * lh,
        AMode::LangerConsistent => T::lit(2.0) * nu + lh * lh,
    };
    ACoefficient::from_value(value, mode).map_err(|_| {
        Error::Domain(format!(
            "A = {} is not positive for nu = {}, l = {l}; nu must exceed -(l + 1/2)^2{}",
            value.as_f64(),
            nu.as_f64(),
            if mode == AMode::LangerConsistent { " / 2" } else { "" }
        ))
    })
}

/// `E⁽⁰⁾ = √(2s) (2n + 1 + √A)`.
pub fn ho_unperturbed_energy<T: Real>(
    spec: &PotentialSpec<T>,
    qn: QuantumNumbers,
    mode: AMode,
) -> Result<T> {
    spec.expect(Family::HarmonicOscillator)?;
    let a = a_coefficient(spec.nu, qn.l, mode)?;
    Ok((T::lit(2.0) * spec.s).sqrt() * ho_ladder(qn, a.root))
}

/// `2n + 1 + √A`.
pub(crate) fn ho_ladder<T: Real>(qn: QuantumNumbers, root: T) -> T {
    T::lit(2.0) * qn.n_real::<T>() + T::one() + root
}

/// `D = 2n + 1 + 2√A`.
pub(crate) fn coulomb_denominator<T: Real>(qn: QuantumNumbers, root: T) -> T {
    T::lit(2.0) * (qn.n_real::<T>() + root) + T::one()
}

/// Closed forms for the Coulomb-type unperturbed level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoulombEnergyMode {
    /// `-[√2 Z / (N + √A)]²`, as written.
    Printed,
    /// `-s² / (2 (N + √A)²)`, what the Morse route produces for coupling `s`.
    LangerDerived,
}

pub fn coulomb_unperturbed_energy<T: Real>(
    spec: &PotentialSpec<T>,
    qn: QuantumNumbers,
    mode: CoulombEnergyMode,
) -> Result<T> {
    spec.expect(Family::Coulomb)?;
    let a = a_coefficient(spec.nu, qn.l, AMode::Printed)?;
    let denom = qn.big_n::<T>() + a.root;
    Ok(match mode {
        CoulombEnergyMode::Printed => {
            let t = T::lit(2.0).sqrt() * spec.z / denom;
            -t * t
        }
        CoulombEnergyMode::LangerDerived => -spec.s * spec.s / (T::lit(2.0) * denom * denom),
    })
}

/// `Δₙ = 4Z / (2n + 1 + 2√A)`; the sign follows `Z`.
pub fn delta_n<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    spec.expect(Family::Coulomb)?;
    let a = a_coefficient(spec.nu, qn.l, AMode::Printed)?;
    Ok(T::lit(4.0) * spec.z / coulomb_denominator(qn, a.root))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ho(s: f64, nu: f64) -> PotentialSpec<f64> {
        PotentialSpec::harmonic(s, s, nu, 0.0).unwrap()
    }

    #[test]
    fn a_coefficient_examples() {
        let a = a_coefficient(0.8f64, 0, AMode::Printed).unwrap();
        assert!((a.value() - 1.05).abs() < 1e-15);
        assert!((a.root() * a.root() - a.value()).abs() <= 1e-14 * a.value());
        assert_eq!(a_coefficient(0.0f64, 2, AMode::Printed).unwrap().value(), 6.25);
        let a = a_coefficient(0.8f64, 0, AMode::LangerConsistent).unwrap();
        assert!((a.value() - 1.85).abs() < 1e-15);
        let err = a_coefficient(-0.3f64, 0, AMode::Printed).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn spec_validation() {
        let err = PotentialSpec::harmonic(0.5, -1.0, 0.0, 0.0).unwrap_err();
        assert!(err.to_string().contains("s > 0"));
        assert!(PotentialSpec::coulomb(0.0, 0.1, 0.0, 0.0).is_err());
        assert!(PotentialSpec::coulomb(-1.0, 0.001, 0.1, 1.0).is_ok());
        assert!(PotentialSpec::harmonic(f64::NAN, 1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn quantum_number_derivations() {
        let q = QuantumNumbers::new(2, 1);
        assert_eq!(q.big_n::<f64>(), 2.5);
        assert_eq!(q.n_prime(), 5);
    }

    #[test]
    fn ho_energy_examples() {
        let e = ho_unperturbed_energy(&ho(0.5, 0.0), QuantumNumbers::new(0, 0), AMode::Printed);
        assert!((e.unwrap() - 1.5).abs() < 1e-15);
        let e = ho_unperturbed_energy(&ho(0.5, 0.8), QuantumNumbers::new(0, 0), AMode::Printed);
        assert!((e.unwrap() - 2.024_695_076_6).abs() < 1e-10);
        let e = ho_unperturbed_energy(&ho(0.5, 0.8), QuantumNumbers::new(0, 0), AMode::LangerConsistent).unwrap();
        assert!((e - (1.0 + 1.85f64.sqrt())).abs() < 1e-15);
        assert!((e - 2.360_147_050_8).abs() < 1e-10);
    }

    #[test]
    fn ho_ladder_at_zero_nu() {
        for s in [0.25f64, 0.5, 2.0] {
            for n in 0..5 {
                for l in 0..4 {
                    let qn = QuantumNumbers::new(n, l);
                    let e = ho_unperturbed_energy(&ho(s, 0.0), qn, AMode::Printed).unwrap();
                    let ladder = (2.0 * s).sqrt() * (2.0 * n as f64 + l as f64 + 1.5);
                    assert!((e - ladder).abs() <= 1e-15 * ladder, "{e} vs {ladder}");
                }
            }
        }
    }

    #[test]
    fn coulomb_energy_examples() {
        let spec = PotentialSpec::coulomb(-1.0f64, -1.0, 0.0, 0.0).unwrap();
        let q0 = QuantumNumbers::new(0, 0);
        let e = coulomb_unperturbed_energy(&spec, q0, CoulombEnergyMode::Printed).unwrap();
        assert!((e + 2.0).abs() < 1e-15);
        let e = coulomb_unperturbed_energy(&spec, q0, CoulombEnergyMode::LangerDerived).unwrap();
        assert!((e + 0.5).abs() < 1e-15);
        let e = coulomb_unperturbed_energy(&spec, QuantumNumbers::new(1, 0), CoulombEnergyMode::LangerDerived);
        assert!((e.unwrap() + 0.125).abs() < 1e-15);
        assert!(coulomb_unperturbed_energy(&ho(0.5, 0.0), q0, CoulombEnergyMode::Printed).is_err());
    }

    #[test]
    fn delta_n_examples() {
        let q0 = QuantumNumbers::new(0, 0);
        let spec = PotentialSpec::coulomb(1.0f64, 1.0, 0.0, 0.0).unwrap();
        assert!((delta_n(&spec, q0).unwrap() - 2.0).abs() < 1e-15);
        assert!((delta_n(&spec, QuantumNumbers::new(1, 0)).unwrap() - 1.0).abs() < 1e-15);
        let spec = PotentialSpec::coulomb(-1.0f64, 0.001, 0.1, 0.0).unwrap();
        let expected = -4.0 / (1.0 + 2.0 * 0.35f64.sqrt());
        assert!((delta_n(&spec, q0).unwrap() - expected).abs() < 1e-15);
        assert!((delta_n(&spec, q0).unwrap() + 1.832_159_566_2).abs() < 1e-9);
    }
}
