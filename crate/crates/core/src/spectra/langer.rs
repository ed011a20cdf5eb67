//! Langer substitution `r = r₀ e^{-Γαx}` mapping the radial problem of `h₀`
//! onto the Morse form.
//!
//! After the substitution the constant term is `½ Γ² α² A` and the two
//! exponentials carry `(Γαr₀)² s r₀^μ` and `-(Γαr₀)² E⁽⁰⁾`. Matching those to
//! `-ε`, `V₁` and `V₂` and imposing the Morse quantization condition fixes
//! `E⁽⁰⁾`. Oscillator: `μ = 2`, `Γ = 1/2`; Coulomb: `μ = -1`, `Γ = 1`.

use super::{a_coefficient, AMode, Family, MorseParams, PotentialSpec, QuantumNumbers};
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LangerMap<T> {
    mu: i32,
    gamma: T,
    alpha: T,
    r0: T,
}

impl<T: Real> LangerMap<T> {
    pub fn new(mu: i32, gamma: T, alpha: T, r0: T) -> Result<Self> {
        let consistent = (mu == 2 && gamma == T::lit(0.5)) || (mu == -1 && gamma == T::one());
        if !consistent {
            return Err(Error::Domain(format!(
                "(mu, Gamma) = ({mu}, {}) is not one of (2, 1/2), (-1, 1)",
                gamma.as_f64()
            )));
        }
        if !(alpha > T::zero()) || !(r0 > T::zero()) {
            return Err(Error::Domain(format!(
                "Langer map needs alpha > 0 and r0 > 0, got ({}, {})",
                alpha.as_f64(),
                r0.as_f64()
            )));
        }
        Ok(Self { mu, gamma, alpha, r0 })
    }

    pub fn ho(alpha: T, r0: T) -> Result<Self> {
        Self::new(2, T::lit(0.5), alpha, r0)
    }

    pub fn coulomb(alpha: T, r0: T) -> Result<Self> {
        Self::new(-1, T::one(), alpha, r0)
    }

    pub fn mu(&self) -> i32 {
        self.mu
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn r0(&self) -> T {
        self.r0
    }

    fn family(&self) -> Family {
        if self.mu == 2 {
            Family::HarmonicOscillator
        } else {
            Family::Coulomb
        }
    }

    /// `(Γ α r₀)²`.
    fn prefactor(&self) -> T {
        let g = self.gamma * self.alpha * self.r0;
        g * g
    }

    /// Morse energy the constant term must equal: `ε = -½ Γ² α² A`.
    fn target_energy(&self, a: T) -> T {
        let g = self.gamma * self.alpha;
        -g * g * a / T::lit(2.0)
    }

    fn check(&self, spec: &PotentialSpec<T>) -> Result<()> {
        spec.expect(self.family())
    }

    /// Morse parameters produced by the map for a given `E⁽⁰⁾`.
    pub fn morse_params(&self, spec: &PotentialSpec<T>, e0: T) -> Result<MorseParams<T>> {
        self.check(spec)?;
        let pre = self.prefactor();
        let coupled = pre * spec.s() * self.r0.powi(self.mu);
        let energetic = -pre * e0;
        match self.family() {
            Family::HarmonicOscillator => MorseParams::new(energetic, coupled, self.alpha),
            Family::Coulomb => MorseParams::new(coupled, energetic, self.alpha),
        }
    }

    /// Solves the Morse condition `ε_n(V₁, V₂) = -½ Γ² α² A` for `E⁽⁰⁾`.
    fn solve_energy(&self, spec: &PotentialSpec<T>, qn: QuantumNumbers, mode: AMode) -> Result<T> {
        self.check(spec)?;
        let a = a_coefficient(spec.nu(), qn.l, mode)?;
        let eps = self.target_energy(a.value());
        let two = T::lit(2.0);
        // √(-ε) = |V₁|/(2√V₂) - α N/√2
        let shifted = (-eps).sqrt() + self.alpha * qn.big_n::<T>() / two.sqrt();
        let pre = self.prefactor();
        let coupled = pre * spec.s() * self.r0.powi(self.mu);
        let e0 = match self.family() {
            Family::HarmonicOscillator => {
                if !(coupled > T::zero()) {
                    return Err(Error::Domain("oscillator map needs s > 0".into()));
                }
                two * coupled.sqrt() * shifted / pre
            }
            Family::Coulomb => {
                if !(coupled < T::zero()) {
                    return Err(Error::Domain(format!(
                        "Coulomb map needs an attractive coupling s < 0, got {}",
                        spec.s().as_f64()
                    )));
                }
                let root_v2 = coupled.abs() / (two * shifted);
                -root_v2 * root_v2 / pre
            }
        };
        let morse = self.morse_params(spec, e0)?;
        let eps_back = morse.energy(qn.n)?;
        if !((eps_back - eps).abs() <= T::lit(1e3) * T::epsilon() * eps.abs().max(T::one())) {
            return Err(Error::Numeric(format!(
                "Morse round trip mismatch: target {} vs level {}",
                eps.as_f64(),
                eps_back.as_f64()
            )));
        }
        Ok(e0)
    }
}

/// `V₁ = -α² r₀² E⁽⁰⁾ / 4`, `V₂ = +α² r₀⁴ s / 4`.
pub fn langer_map_ho<T: Real>(
    map: &LangerMap<T>,
    spec: &PotentialSpec<T>,
    e0: T,
) -> Result<MorseParams<T>> {
    if map.mu != 2 {
        return Err(Error::Domain("oscillator mapping needs mu = 2".into()));
    }
    map.morse_params(spec, e0)
}

/// `V₁ = α² r₀ s`, `V₂ = -α² r₀² E⁽⁰⁾`.
pub fn langer_map_coulomb<T: Real>(
    map: &LangerMap<T>,
    spec: &PotentialSpec<T>,
    e0: T,
) -> Result<MorseParams<T>> {
    if map.mu != -1 {
        return Err(Error::Domain("Coulomb mapping needs mu = -1".into()));
    }
    map.morse_params(spec, e0)
}

/// Oscillator `E⁽⁰⁾` from the Morse route; equals `√(2s)(2n + 1 + √A)` for any gauge `(α, r₀)`.
pub fn ho_energy_via_morse<T: Real>(
    spec: &PotentialSpec<T>,
    qn: QuantumNumbers,
    map: &LangerMap<T>,
    mode: AMode,
) -> Result<T> {
    if map.mu != 2 {
        return Err(Error::Domain("oscillator route needs mu = 2".into()));
    }
    map.solve_energy(spec, qn, mode)
}

/// Coulomb `E⁽⁰⁾` from the Morse route; equals `-s²/(2(N + √A)²)` and needs `s < 0`.
pub fn coulomb_energy_via_morse<T: Real>(
    spec: &PotentialSpec<T>,
    qn: QuantumNumbers,
    map: &LangerMap<T>,
    mode: AMode,
) -> Result<T> {
    if map.mu != -1 {
        return Err(Error::Domain("Coulomb route needs mu = -1".into()));
    }
    map.solve_energy(spec, qn, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{coulomb_unperturbed_energy, ho_unperturbed_energy, CoulombEnergyMode};

    #[test]
    fn ho_map_example() {
        let spec = PotentialSpec::harmonic(0.5f64, 0.5, 0.8, 0.0).unwrap();
        let map = LangerMap::ho(1.0, 1.0).unwrap();
        let p = langer_map_ho(&map, &spec, 2.024_695_076_6).unwrap();
        assert!((p.v1() + 0.506_173_769_15).abs() < 1e-10);
        assert!((p.v2() - 0.125).abs() < 1e-15);
    }

    #[test]
    fn v2_positive_for_positive_s() {
        for s in [1e-3, 0.25, 0.5, 7.0] {
            let spec = PotentialSpec::harmonic(s, s, 0.0, 0.0).unwrap();
            for (alpha, r0) in [(0.3, 0.5), (1.0, 1.0), (2.7, 4.0)] {
                let map = LangerMap::ho(alpha, r0).unwrap();
                assert!(langer_map_ho(&map, &spec, 1.0).unwrap().v2() > 0.0);
            }
        }
    }

    #[test]
    fn ho_route_examples() {
        let spec = PotentialSpec::harmonic(0.5f64, 0.5, 0.8, 0.0).unwrap();
        let q0 = QuantumNumbers::new(0, 0);
        let e = ho_energy_via_morse(&spec, q0, &LangerMap::ho(1.0, 1.0).unwrap(), AMode::Printed).unwrap();
        assert!((e - 2.024_695_076_6).abs() < 1e-10);
        let g = ho_energy_via_morse(&spec, q0, &LangerMap::ho(0.3, 2.7).unwrap(), AMode::Printed).unwrap();
        assert!((g - e).abs() <= 1e-12 * e);

        let bare = PotentialSpec::harmonic(0.5f64, 0.5, 0.0, 0.0).unwrap();
        let e = ho_energy_via_morse(&bare, QuantumNumbers::new(1, 0), &LangerMap::ho(1.0, 1.0).unwrap(), AMode::Printed);
        assert!((e.unwrap() - 3.5).abs() < 1e-13);
    }

    #[test]
    fn routes_match_closed_forms() {
        let spec = PotentialSpec::harmonic(0.25f64, 0.25, 0.8, 0.0).unwrap();
        let cspec = PotentialSpec::coulomb(-1.0f64, -1.0, 0.1, 0.0).unwrap();
        for n in 0..4 {
            for l in 0..3 {
                let qn = QuantumNumbers::new(n, l);
                let closed = ho_unperturbed_energy(&spec, qn, AMode::Printed).unwrap();
                let routed = ho_energy_via_morse(&spec, qn, &LangerMap::ho(2.7, 0.5).unwrap(), AMode::Printed).unwrap();
                assert!((closed - routed).abs() <= 1e-12 * closed);

                let closed = coulomb_unperturbed_energy(&cspec, qn, CoulombEnergyMode::LangerDerived).unwrap();
                let routed = coulomb_energy_via_morse(&cspec, qn, &LangerMap::coulomb(0.3, 4.0).unwrap(), AMode::Printed).unwrap();
                assert!((closed - routed).abs() <= 1e-12 * closed.abs());
            }
        }
    }

    #[test]
    fn coulomb_route_needs_attraction() {
        let spec = PotentialSpec::coulomb(-1.0f64, 0.001, 0.1, 1.0).unwrap();
        let map = LangerMap::coulomb(1.0, 1.0).unwrap();
        assert!(coulomb_energy_via_morse(&spec, QuantumNumbers::new(0, 0), &map, AMode::Printed).is_err());
    }

    #[test]
    fn map_validation() {
        assert!(LangerMap::new(2, 1.0f64, 1.0, 1.0).is_err());
        assert!(LangerMap::new(-1, 0.5f64, 1.0, 1.0).is_err());
        assert!(LangerMap::ho(0.0f64, 1.0).is_err());
        let spec = PotentialSpec::harmonic(0.5f64, 0.5, 0.0, 0.0).unwrap();
        let cmap = LangerMap::coulomb(1.0, 1.0).unwrap();
        assert!(langer_map_ho(&cmap, &spec, 1.0).is_err());
        assert!(cmap.morse_params(&spec, 1.0).is_err());
    }
}
