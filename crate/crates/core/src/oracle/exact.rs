use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectra::{ACoefficient, AMode, Family, Normalization, Observable, PotentialSpec, QuantumNumbers, RadialState};

/// Squared effective index `(l + 1/2)² + 2c` for an inverse-square coefficient `c`.
fn effective_a<T: Real>(l: u32, c: T) -> Result<ACoefficient<T>> {
    let lh = T::from_u32(l).unwrap() + T::lit(0.5);
    ACoefficient::from_value(lh * lh + T::lit(2.0) * c, AMode::LangerConsistent)
}

/// Exact level of `-½d²/dr² + Z r² + (ν + ω²)/r²`: `√(2Z)(2n + 1 + √((l+½)² + 2ν + 2ω²))`.
pub fn exact_full_ho<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    ho_full_state(spec, qn).map(|(st, _)| st).map(|st| {
        let root_2z = st.scale();
        root_2z * (T::lit(2.0) * qn.n_real::<T>() + T::one() + st.a().root())
    })
}

/// Exact level of `-½d²/dr² + (Z + ω²)/r + ν/r²`: `-(Z+ω²)²/(2(n + ½ + √((l+½)² + 2ν))²)`.
pub fn exact_full_coulomb<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    let (st, g) = coulomb_full_state(spec, qn)?;
    let m = qn.big_n::<T>() + st.a().root();
    Ok(-g * g / (T::lit(2.0) * m * m))
}

/// Unit-normalized eigenstate of the full oscillator-type Hamiltonian.
fn ho_full_state<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<(RadialState<T>, T)> {
    spec.expect(Family::HarmonicOscillator)?;
    let z = spec.z();
    if !(z > T::zero()) {
        return Err(Error::NoBoundState(format!("Z r² with Z = {} does not confine", z.as_f64())));
    }
    let a = effective_a(qn.l, spec.nu() + spec.omega2())?;
    let unscreened = PotentialSpec::harmonic(z, z, spec.nu() + spec.omega2(), T::zero())?;
    Ok((RadialState::harmonic(unscreened, qn, a)?, z))
}

/// Unit-normalized eigenstate of the full Coulomb-type Hamiltonian and its coupling `Z + ω²`.
fn coulomb_full_state<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<(RadialState<T>, T)> {
    spec.expect(Family::Coulomb)?;
    let g = spec.z() + spec.omega2();
    if !(g < T::zero()) {
        return Err(Error::NoBoundState(format!(
            "(Z + omega2)/r with Z + omega2 = {} is not attractive",
            g.as_f64()
        )));
    }
    let a = effective_a(qn.l, spec.nu())?;
    // the decaying solution of an attractive coupling g has Δ = 4|g|/D
    let mirrored = PotentialSpec::coulomb(-g, -g, spec.nu(), T::zero())?;
    Ok((RadialState::coulomb(mirrored, qn, a, Normalization::Unit)?, g))
}

/// Unit-normalized eigenstate of the full Hamiltonian for either family.
pub fn full_state<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<RadialState<T>> {
    match spec.family() {
        Family::HarmonicOscillator => ho_full_state(spec, qn).map(|(st, _)| st),
        Family::Coulomb => coulomb_full_state(spec, qn).map(|(st, _)| st),
    }
}

/// Exact level of the full Hamiltonian for either family.
pub fn exact_full<T: Real>(spec: &PotentialSpec<T>, qn: QuantumNumbers) -> Result<T> {
    match spec.family() {
        Family::HarmonicOscillator => exact_full_ho(spec, qn),
        Family::Coulomb => exact_full_coulomb(spec, qn),
    }
}

/// `⟨ψ|O|ψ⟩` by exact-degree Gauss–Laguerre quadrature; needs a unit-normalized state.
pub fn quad_expectation<T: Real>(state: &RadialState<T>, observable: Observable) -> Result<T> {
    state.expectation(observable)
}

/// Parameter differentiated in a Hellmann–Feynman check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HfParameter {
    /// `ν`, conjugate to `1/r²`.
    Nu,
    /// `Z`, conjugate to `r²` (oscillator) or `1/r` (Coulomb).
    Coupling,
}

pub const HF_STEP: f64 = 1e-6;

/// `(∂E/∂λ by centered difference of the exact level, ⟨∂H/∂λ⟩ by quadrature)`.
pub fn hellmann_feynman_check<T: Real>(
    spec: &PotentialSpec<T>,
    qn: QuantumNumbers,
    parameter: HfParameter,
) -> Result<(T, T)> {
    let h = T::lit(HF_STEP);
    let shifted = |d: T| -> Result<T> {
        let (z, nu) = match parameter {
            HfParameter::Nu => (spec.z(), spec.nu() + d),
            HfParameter::Coupling => (spec.z() + d, spec.nu()),
        };
        exact_full(&PotentialSpec::new(spec.family(), z, spec.s(), nu, spec.omega2())?, qn)
    };
    let lhs = (shifted(h)? - shifted(-h)?) / (T::lit(2.0) * h);
    let observable = match (parameter, spec.family()) {
        (HfParameter::Nu, _) => Observable::InvR2,
        (HfParameter::Coupling, Family::HarmonicOscillator) => Observable::R2,
        (HfParameter::Coupling, Family::Coulomb) => Observable::InvR,
    };
    let rhs = quad_expectation(&full_state(spec, qn)?, observable)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{solve_radial, solve_radial_log, Extrapolation, LogGrid, RadialGrid};

    fn ho(z: f64, nu: f64, w: f64) -> PotentialSpec<f64> {
        PotentialSpec::harmonic(z, 0.5, nu, w).unwrap()
    }

    fn cou(z: f64, nu: f64, w: f64) -> PotentialSpec<f64> {
        PotentialSpec::coulomb(z, 0.001, nu, w).unwrap()
    }

    const G: QuantumNumbers = QuantumNumbers { n: 0, l: 0 };

    #[test]
    fn ho_examples() {
        assert!((exact_full_ho(&ho(0.5, 0.0, 0.0), G).unwrap() - 1.5).abs() < 1e-15);
        let e = exact_full_ho(&ho(0.5, 0.8, 0.0), G).unwrap();
        assert!((e - 2.360_147_050_8).abs() < 1e-10);
        let e_w = exact_full_ho(&ho(0.5, 0.8, 1e-4), G).unwrap();
        assert!((e_w - 2.360_220_573_3).abs() < 1e-8);
        assert!((e_w - (1.0 + 1.8502f64.sqrt())).abs() < 1e-15);
        let grid = RadialGrid::new(1e-8, 12.0, 6000).unwrap();
        let g = solve_radial(|r: f64| 0.5 * r * r + 0.8001 / (r * r), 0, &grid, 1, Extrapolation::Richardson).unwrap();
        assert!((g[0] - e_w).abs() < 1e-6);
        assert!(matches!(exact_full_ho(&ho(-0.5, 0.0, 0.0), G), Err(Error::NoBoundState(_))));
    }

    #[test]
    fn coulomb_examples() {
        assert!((exact_full_coulomb(&cou(-1.0, 0.0, 0.0), G).unwrap() + 0.5).abs() < 1e-15);
        let e = exact_full_coulomb(&cou(-1.0, 0.1, 0.0), G).unwrap();
        assert!((e + 0.364_745_084_3).abs() < 1e-9);
        let grid = LogGrid::new(1e-13, 400.0, 2000).unwrap();
        let g = solve_radial_log(|r: f64| -1.0 / r + 0.1 / (r * r), 0, &grid, 1, Extrapolation::Richardson).unwrap();
        assert!(((g[0] - e) / e).abs() < 1e-8);
        assert!(matches!(exact_full_coulomb(&cou(-1.0, 0.1, 1.0), G), Err(Error::NoBoundState(_))));
    }

    #[test]
    fn quadrature_examples() {
        let st = crate::spectra::ho_radial_wavefunction(&ho(0.5, 0.8, 0.0), G).unwrap();
        assert!((quad_expectation(&st, Observable::R2).unwrap() - 2.024_695_076_6).abs() < 1e-9);
        let st = crate::spectra::ho_radial_wavefunction(&ho(0.5, 0.0, 0.0), G).unwrap();
        assert!((quad_expectation(&st, Observable::InvR2).unwrap() - 2.0).abs() < 1e-12);
        let spec = PotentialSpec::coulomb(1.0f64, 1.0, 0.0, 0.0).unwrap();
        let st = crate::spectra::coulomb_radial_wavefunction(&spec, G, Normalization::Unit).unwrap();
        assert!((quad_expectation(&st, Observable::InvR).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hellmann_feynman_examples() {
        let (l, r) = hellmann_feynman_check(&ho(0.5, 0.0, 0.0), G, HfParameter::Nu).unwrap();
        assert!((l - 2.0).abs() < 1e-7 && (r - 2.0).abs() < 1e-12);
        let (l, r) = hellmann_feynman_check(&cou(-1.5, 0.0, 0.5), G, HfParameter::Coupling).unwrap();
        assert!((l - 1.0).abs() < 1e-7 && (r - 1.0).abs() < 1e-12);
        let (l, r) = hellmann_feynman_check(&ho(0.5, 0.0, 0.0), G, HfParameter::Coupling).unwrap();
        assert!((l - 1.5).abs() < 1e-7 && (r - 1.5).abs() < 1e-12);
    }

    #[test]
    fn hellmann_feynman_box() {
        for n in 0..5 {
            for l in 0..3 {
                let qn = QuantumNumbers::new(n, l);
                for spec in [ho(0.5, 0.8, 0.01), ho(1.7, 0.1, 0.3), cou(-1.0, 0.1, 0.2), cou(-2.0, 0.4, 0.0)] {
                    for p in [HfParameter::Nu, HfParameter::Coupling] {
                        let (lhs, rhs) = hellmann_feynman_check(&spec, qn, p).unwrap();
                        assert!((lhs - rhs).abs() <= 1e-7, "{spec:?} {qn:?} {p:?}: {lhs} vs {rhs}");
                    }
                }
            }
        }
    }
}
