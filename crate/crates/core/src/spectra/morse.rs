use crate::error::{Error, Result};
use crate::laguerre::{eval_unchecked, gauss_laguerre_rule};
use crate::scalar::Real;

/// One-dimensional generalized Morse potential `V₁ e^{-αx} + V₂ e^{-2αx}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorseParams<T> {
    v1: T,
    v2: T,
    alpha: T,
}

impl<T: Real> MorseParams<T> {
    /// Requires `v1 < 0`, `v2 > 0`, `alpha > 0`. A parameter set with no bound
    /// level is accepted; [`energy`](Self::energy) then rejects every `n`.
    pub fn new(v1: T, v2: T, alpha: T) -> Result<Self> {
        if !(v1 < T::zero()) || !v1.is_finite() {
            return Err(Error::Domain(format!("Morse V1 must be negative, got {}", v1.as_f64())));
        }
        if !(v2 > T::zero()) || !v2.is_finite() {
            return Err(Error::Domain(format!("Morse V2 must be positive, got {}", v2.as_f64())));
        }
        if !(alpha > T::zero()) || !alpha.is_finite() {
            return Err(Error::Domain(format!(
                "Morse alpha must be positive, got {}",
                alpha.as_f64()
            )));
        }
        Ok(Self { v1, v2, alpha })
    }

    pub fn v1(&self) -> T {
        self.v1
    }

    pub fn v2(&self) -> T {
        self.v2
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn potential(&self, x: T) -> T {
        let e = (-self.alpha * x).exp();
        self.v1 * e + self.v2 * e * e
    }

    /// Bound levels satisfy `n < |V₁| / (√(2V₂) α) - 1/2`.
    pub fn level_bound(&self) -> T {
        self.v1.abs() / ((T::lit(2.0) * self.v2).sqrt() * self.alpha) - T::lit(0.5)
    }

    pub fn level_count(&self) -> u32 {
        let bound = self.level_bound();
        if bound <= T::zero() {
            0
        } else {
            bound.ceil().to_u32().unwrap_or(u32::MAX)
        }
    }

    fn check_level(&self, n: u32) -> Result<()> {
        let count = self.level_count();
        if n >= count {
            return Err(Error::BoundStateCount { n, count });
        }
        Ok(())
    }

    /// `ε_n = -(V₁²/4V₂) [1 - √(2V₂) α N / |V₁|]²`, `N = n + 1/2`.
    pub fn energy(&self, n: u32) -> Result<T> {
        self.check_level(n)?;
        let big_n = T::from_u32(n).unwrap() + T::lit(0.5);
        let t = T::one() - (T::lit(2.0) * self.v2).sqrt() * self.alpha * big_n / self.v1.abs();
        Ok(-self.v1 * self.v1 / (T::lit(4.0) * self.v2) * t * t)
    }

    /// Potential minimum `-V₁²/(4V₂)`.
    pub fn well_depth(&self) -> T {
        -self.v1 * self.v1 / (T::lit(4.0) * self.v2)
    }

    /// Normalized bound state `φₙ(x) = Aₙ y^λ e^{-y/2} L_n^{(2λ)}(y)` with
    /// `y = (2√(2V₂)/α) e^{-αx}` and `λ = √(-2εₙ)/α`. `Aₙ` comes from an
    /// exact-degree quadrature of `∫|φ|² dx`.
    pub fn wavefunction(&self, n: u32) -> Result<MorseState<T>> {
        let energy = self.energy(n)?;
        let lambda = (-T::lit(2.0) * energy).sqrt() / self.alpha;
        let order = T::lit(2.0) * lambda;
        let y_scale = T::lit(2.0) * (T::lit(2.0) * self.v2).sqrt() / self.alpha;
        let degree = n as usize;
        // dx = -dy / (α y), so ∫|φ|² dx = A²/α ∫ y^{2λ-1} e^{-y} L² dy
        let rule = gauss_laguerre_rule(degree + 1, order - T::one())?;
        let integral = rule.integrate(|y| {
            let l = eval_unchecked(degree, order, y);
            l * l
        }) / self.alpha;
        Ok(MorseState {
            params: *self,
            n,
            energy,
            lambda,
            y_scale,
            norm: T::one() / integral.sqrt(),
        })
    }
}

/// A normalized Morse eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorseState<T> {
    params: MorseParams<T>,
    n: u32,
    energy: T,
    lambda: T,
    y_scale: T,
    norm: T,
}

impl<T: Real> MorseState<T> {
    pub fn energy(&self) -> T {
        self.energy
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn params(&self) -> &MorseParams<T> {
        &self.params
    }

    /// Normalization constant `Aₙ`.
    pub fn norm(&self) -> T {
        self.norm
    }

    pub fn eval(&self, x: T) -> T {
        let y = self.y_scale * (-self.params.alpha * x).exp();
        if y == T::zero() {
            return T::zero();
        }
        let envelope = (self.lambda * y.ln() - y / T::lit(2.0)).exp();
        self.norm
            * envelope
            * eval_unchecked(self.n as usize, T::lit(2.0) * self.lambda, y)
    }
}
