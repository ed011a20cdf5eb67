use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use super::{a_coefficient, coulomb_denominator, ACoefficient, AMode, Family, PotentialSpec, QuantumNumbers};
use crate::error::{Error, Result};
use crate::laguerre::{eval_unchecked, gauss_laguerre_rule, QuadratureRule};
use crate::scalar::Real;
use crate::special::gamma_ratio;

/// How the prefactor `Λ(n)` of a radial state is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// The closed-form prefactor as written; not unit-normalizing for Coulomb states.
    Printed,
    /// Rescaled so that `∫|ψ|² dr = 1`.
    Unit,
}

/// Radial operators whose expectation values the oracle checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Observable {
    InvR,
    InvR2,
    R2,
}

impl Observable {
    fn power(self) -> i32 {
        match self {
            Observable::InvR => -1,
            Observable::InvR2 => -2,
            Observable::R2 => 2,
        }
    }
}

/// An unperturbed radial eigenfunction `ψ(y) = Λ y^p e^{-y/2} L_n^{(k)}(y)`.
///
/// Oscillator: `y = √(2s) r²`, `p = (1/2 + √A)/2`, `k = √A`.
/// Coulomb: `y = Δₙ r`, `p = 1/2 + √A`, `k = 2√A`.
/// In both cases `|ψ|² dr = C y^{e₀} e^{-y} L² dy`, which gives every moment
/// `⟨r^q⟩` as a single Gauss–Laguerre integral of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialState<T> {
    spec: PotentialSpec<T>,
    qn: QuantumNumbers,
    a: ACoefficient<T>,
    scale: T,
    norm: T,
    normalization: Normalization,
}

impl<T: Real> RadialState<T> {
    /// Oscillator state with an explicit `A` coefficient; always unit-normalized.
    pub fn harmonic(spec: PotentialSpec<T>, qn: QuantumNumbers, a: ACoefficient<T>) -> Result<Self> {
        spec.expect(Family::HarmonicOscillator)?;
        let scale = (T::lit(2.0) * spec.s()).sqrt();
        // Λ(n) = √(2 (2s)^{1/4}) √(Γ(n+1)/Γ(n+√A+1))
        let norm = (T::lit(2.0) * scale.sqrt() / gamma_ratio(qn.n as usize, a.root())).sqrt();
        Ok(Self { spec, qn, a, scale, norm, normalization: Normalization::Unit })
    }

    /// Coulomb state with an explicit `A` coefficient.
    pub fn coulomb(
        spec: PotentialSpec<T>,
        qn: QuantumNumbers,
        a: ACoefficient<T>,
        normalization: Normalization,
    ) -> Result<Self> {
        spec.expect(Family::Coulomb)?;
        let denom = coulomb_denominator(qn, a.root());
        let scale = T::lit(4.0) * spec.z() / denom;
        if !(scale > T::zero()) {
            let msg = format!(
                "Δn = {} must be positive (Z = {}); the state does not decay",
                scale.as_f64(),
                spec.z().as_f64()
            );
            return Err(match normalization {
                Normalization::Unit => Error::Normalizability(msg),
                Normalization::Printed => Error::Domain(msg),
            });
        }
        let k = T::lit(2.0) * a.root();
        let ratio = gamma_ratio(qn.n as usize, k);
        let norm_sq = match normalization {
            // Λ(n) = √(Γ(n+1) / (4Z Γ(n+2√A+1)))
            Normalization::Printed => T::one() / (T::lit(4.0) * spec.z() * ratio),
            Normalization::Unit => scale / (denom * ratio),
        };
        Ok(Self { spec, qn, a, scale, norm: norm_sq.sqrt(), normalization })
    }

    pub fn spec(&self) -> &PotentialSpec<T> {
        &self.spec
    }

    pub fn qn(&self) -> QuantumNumbers {
        self.qn
    }

    pub fn a(&self) -> &ACoefficient<T> {
        &self.a
    }

    /// `√(2s)` for oscillator states, `Δₙ` for Coulomb states.
    pub fn scale(&self) -> T {
        self.scale
    }

    /// The prefactor `Λ(n)`.
    pub fn norm(&self) -> T {
        self.norm
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    fn is_ho(&self) -> bool {
        self.spec.family() == Family::HarmonicOscillator
    }

    pub fn laguerre_order(&self) -> T {
        if self.is_ho() {
            self.a.root()
        } else {
            T::lit(2.0) * self.a.root()
        }
    }

    fn y_power(&self) -> T {
        let half = T::lit(0.5);
        if self.is_ho() {
            half * (half + self.a.root())
        } else {
            half + self.a.root()
        }
    }

    /// Dimensionless variable `y(r)`.
    pub fn y_of_r(&self, r: T) -> T {
        if self.is_ho() {
            self.scale * r * r
        } else {
            self.scale * r
        }
    }

    /// `ψ` as a function of `y`.
    pub fn psi_y(&self, y: T) -> T {
        if !(y > T::zero()) {
            return T::zero();
        }
        let envelope = (self.y_power() * y.ln() - y / T::lit(2.0)).exp();
        self.norm * envelope * eval_unchecked(self.qn.n as usize, self.laguerre_order(), y)
    }

    /// `ψ` as a function of `r`.
    pub fn psi(&self, r: T) -> T {
        self.psi_y(self.y_of_r(r))
    }

    /// `(C, e₀, r-exponent of y)` with `|ψ|² dr = C y^{e₀} e^{-y} L² dy`.
    fn measure(&self) -> (T, T, T) {
        let n2 = self.norm * self.norm;
        if self.is_ho() {
            (n2 / (T::lit(2.0) * self.scale.sqrt()), self.a.root(), T::lit(0.5))
        } else {
            (n2 / self.scale, T::one() + T::lit(2.0) * self.a.root(), T::one())
        }
    }

    /// Gauss rule integrating `ψ² r^q` exactly in the `y` variable.
    pub fn moment_rule(&self, q: i32) -> Result<QuadratureRule<T>> {
        let (_, e0, p) = self.measure();
        let exponent = e0 + p * T::from_i32(q).unwrap();
        if !(exponent > -T::one()) {
            return Err(Error::Domain(format!(
                "<r^{q}> diverges for this state (weight exponent {})",
                exponent.as_f64()
            )));
        }
        gauss_laguerre_rule(self.qn.n as usize + 2, exponent)
    }

    /// `∫ ψ² r^q dr` by exact-degree Gauss–Laguerre quadrature.
    pub fn moment(&self, q: i32) -> Result<T> {
        let (c, _, p) = self.measure();
        // r = (y / scale)^p, so r^q = scale^{-pq} y^{pq}
        let pq = p * T::from_i32(q).unwrap();
        let rule = self.moment_rule(q)?;
        let degree = self.qn.n as usize;
        let k = self.laguerre_order();
        let integral = rule.integrate(|y| {
            let l = eval_unchecked(degree, k, y);
            l * l
        });
        Ok(c * self.scale.powf(-pq) * integral)
    }

    /// `∫₀^∞ |ψ|² dr`.
    pub fn norm_integral(&self) -> Result<T> {
        self.moment(0)
    }

    /// `⟨ψ|O|ψ⟩`; only defined for unit-normalized states.
    pub fn expectation(&self, observable: Observable) -> Result<T> {
        if self.normalization != Normalization::Unit {
            return Err(Error::Normalizability(
                "expectation values need a unit-normalized state".into(),
            ));
        }
        self.moment(observable.power())
    }

    /// Writes `r,psi` samples as CSV.
    pub fn write_profile_csv<W: Write>(&self, mut out: W, radii: &[T]) -> io::Result<()> {
        writeln!(out, "r,psi")?;
        for &r in radii {
            writeln!(out, "{:e},{:e}", r.as_f64(), self.psi(r).as_f64())?;
        }
        Ok(())
    }
}

/// Oscillator state with the closed-form `A = ν + (l + 1/2)²`.
pub fn ho_radial_wavefunction<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<RadialState<T>> {
    spec.expect(Family::HarmonicOscillator)?;
    let a = a_coefficient(spec.nu(), qn.l, AMode::Printed)?;
    RadialState::harmonic(*spec, qn, a)
}

/// Coulomb state with the closed-form `A = ν + (l + 1/2)²`.
pub fn coulomb_radial_wavefunction<T: Real>(
    spec: &PotentialSpec<T>,
    qn: QuantumNumbers,
    normalization: Normalization,
) -> Result<RadialState<T>> {
    spec.expect(Family::Coulomb)?;
    let a = a_coefficient(spec.nu(), qn.l, AMode::Printed)?;
    RadialState::coulomb(*spec, qn, a, normalization)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, m: usize) -> f64 {
        let h = (b - a) / m as f64;
        let mut acc = f(a) + f(b);
        for i in 1..m {
            acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(a + i as f64 * h);
        }
        acc * h / 3.0
    }

    fn sign_changes(values: &[f64]) -> usize {
        let nz: Vec<f64> = values.iter().copied().filter(|v| *v != 0.0).collect();
        nz.windows(2).filter(|w| w[0].signum() != w[1].signum()).count()
    }

    #[test]
    fn ho_states_are_unit_normalized() {
        let spec = PotentialSpec::harmonic(0.5f64, 0.5, 0.8, 0.0).unwrap();
        for n in 0..4 {
            for l in 0..3 {
                let st = ho_radial_wavefunction(&spec, QuantumNumbers::new(n, l)).unwrap();
                assert!((st.norm_integral().unwrap() - 1.0).abs() < 1e-12);
                let direct = simpson(|r| st.psi(r).powi(2), 0.0, 12.0, 20000);
                assert!((direct - 1.0).abs() < 1e-8, "n={n} l={l}: {direct}");
            }
        }
    }

    #[test]
    fn ho_mean_y_follows_recursion() {
        let spec = PotentialSpec::harmonic(0.5f64, 0.5, 0.8, 0.0).unwrap();
        for n in 0..6 {
            let st = ho_radial_wavefunction(&spec, QuantumNumbers::new(n, 0)).unwrap();
            let mean_y = st.scale() * st.expectation(Observable::R2).unwrap();
            let expected = 2.0 * n as f64 + 1.0 + st.a().root();
            assert!((mean_y - expected).abs() < 1e-10 * expected);
        }
    }

    #[test]
    fn node_counts() {
        let spec = PotentialSpec::harmonic(0.5f64, 0.5, 0.8, 0.0).unwrap();
        let cspec = PotentialSpec::coulomb(1.0f64, 1.0, 0.1, 0.0).unwrap();
        for n in 0..6 {
            let st = ho_radial_wavefunction(&spec, QuantumNumbers::new(n, 1)).unwrap();
            let s: Vec<f64> = (1..4000).map(|i| st.psi(i as f64 * 10.0 / 4000.0)).collect();
            assert_eq!(sign_changes(&s), n as usize);
            let st = coulomb_radial_wavefunction(&cspec, QuantumNumbers::new(n, 0), Normalization::Unit).unwrap();
            let s: Vec<f64> = (1..8000).map(|i| st.psi(i as f64 * 200.0 / 8000.0)).collect();
            assert_eq!(sign_changes(&s), n as usize);
        }
    }

    #[test]
    fn printed_coulomb_prefactor_is_not_unit() {
        let spec = PotentialSpec::coulomb(1.0f64, 1.0, 0.1, 0.0).unwrap();
        let q0 = QuantumNumbers::new(0, 0);
        let printed = coulomb_radial_wavefunction(&spec, q0, Normalization::Printed).unwrap();
        let d = 1.0 + 2.0 * 0.35f64.sqrt();
        let norm = printed.norm_integral().unwrap();
        assert!((norm - d * d / 16.0).abs() < 1e-12);
        assert!((norm - 0.297_901_9).abs() < 1e-6);
        assert!(printed.expectation(Observable::InvR).is_err());

        let unit = coulomb_radial_wavefunction(&spec, q0, Normalization::Unit).unwrap();
        assert!((unit.norm_integral().unwrap() - 1.0).abs() < 1e-12);
        let direct = simpson(|r| unit.psi(r).powi(2), 0.0, 60.0, 40000);
        assert!((direct - 1.0).abs() < 1e-8, "{direct}");
    }

    #[test]
    fn hydrogen_ground_state_inverse_r() {
        let spec = PotentialSpec::coulomb(1.0f64, 1.0, 0.0, 0.0).unwrap();
        let st = coulomb_radial_wavefunction(&spec, QuantumNumbers::new(0, 0), Normalization::Unit).unwrap();
        assert!((st.expectation(Observable::InvR).unwrap() - 1.0).abs() < 1e-10);
        // u = 2 r e^{-r}
        assert!((st.psi(0.7) - 2.0 * 0.7 * (-0.7f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn negative_delta_is_rejected() {
        let spec = PotentialSpec::coulomb(-1.0f64, 0.001, 0.1, 1.0).unwrap();
        let q0 = QuantumNumbers::new(0, 0);
        assert!(matches!(
            coulomb_radial_wavefunction(&spec, q0, Normalization::Unit),
            Err(Error::Normalizability(_))
        ));
    }

    #[test]
    fn profile_csv() {
        let spec = PotentialSpec::harmonic(0.5f64, 0.5, 0.0, 0.0).unwrap();
        let st = ho_radial_wavefunction(&spec, QuantumNumbers::new(0, 0)).unwrap();
        let mut buf = Vec::new();
        st.write_profile_csv(&mut buf, &[0.5, 1.0]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("r,psi"));
        assert_eq!(text.lines().count(), 3);
    }
}
