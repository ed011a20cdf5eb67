//! Generalized Laguerre polynomials `L_n^{(k)}`: evaluation, recursions,
//! closed-form weighted product integrals and a Gauss–Laguerre oracle.

use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::special::{gamma, gamma_ratio, DoubleWord};
use crate::tridiag::SymTridiagonal;

/// Highest degree accepted by [`laguerre_eval_explicit`].
pub const EXPLICIT_DEGREE_LIMIT: usize = 25;
/// Highest order accepted by [`gauss_laguerre_rule`].
pub const RULE_ORDER_LIMIT: usize = 200;

/// Degree and order of `L_degree^(order)`; the order is strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreIndex<T> {
    degree: usize,
    order: T,
}

impl<T: Real> LaguerreIndex<T> {
    pub fn new(degree: usize, order: T) -> Result<Self> {
        if !(order > T::zero()) || !order.is_finite() {
            return Err(Error::Domain(format!(
                "Laguerre order must be a finite positive number, got {}",
                order.as_f64()
            )));
        }
        Ok(Self { degree, order })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> T {
        self.order
    }
}

fn check_argument<T: Real>(z: T) -> Result<()> {
    if !z.is_finite() || z < T::zero() {
        return Err(Error::Domain(format!(
            "Laguerre argument must be finite and non-negative, got {}",
            z.as_f64()
        )));
    }
    Ok(())
}

/// Forward three-term recurrence without argument checks; any order > -1 is fine.
pub(crate) fn eval_unchecked<T: Real>(degree: usize, order: T, z: T) -> T {
    let mut prev = T::one();
    if degree == 0 {
        return prev;
    }
    let mut cur = order + T::one() - z;
    for j in 1..degree {
        let fj = T::from_count(j);
        let next = ((T::lit(2.0) * fj + T::one() + order - z) * cur - (fj + order) * prev)
            / (fj + T::one());
        prev = cur;
        cur = next;
    }
    cur
}

/// `L_degree^(order)(z)` via the degree recurrence seeded with `L₀ = 1`, `L₁ = k + 1 - z`.
pub fn laguerre_eval<T: Real>(idx: LaguerreIndex<T>, z: T) -> Result<T> {
    check_argument(z)?;
    Ok(eval_unchecked(idx.degree, idx.order, z))
}

/// The explicit alternating sum `Σ_j C(p+q, p-j) (-z)^j / j!`.
///
/// Each term follows from its predecessor by the exact ratio
/// `-z (p - j) / ((j + 1)(q + j + 1))`, starting from `C(p+q, p) = Π (q+i)/i`.
/// The accumulation runs in double-word arithmetic because the sum cancels
/// by up to seven decimal orders at moderate `z`.
pub fn laguerre_eval_explicit<T: Real>(idx: LaguerreIndex<T>, z: T) -> Result<T> {
    check_argument(z)?;
    let p = idx.degree;
    let q = idx.order;
    if p > EXPLICIT_DEGREE_LIMIT {
        return Err(Error::Capability(format!(
            "explicit Laguerre sum supports degree <= {EXPLICIT_DEGREE_LIMIT}, got {p}"
        )));
    }
    let mut term = DoubleWord::new(T::one());
    for i in 1..=p {
        term = term
            .mul(DoubleWord::sum_of(q, T::from_count(i)))
            .div_scalar(T::from_count(i));
    }
    let mut sum = term;
    for j in 0..p {
        let numer = T::from_count(p - j);
        let denom = DoubleWord::sum_of(q, T::from_count(j + 1)).mul_scalar(T::from_count(j + 1));
        term = term.mul_scalar(-z).mul_scalar(numer).div(denom);
        sum = sum.add(term);
    }
    Ok(sum.value())
}

/// Partial sum `Σ_{i<terms} L_i^(σ)(z) f^i` of the generating series.
pub fn generating_partial_sum<T: Real>(sigma: T, z: T, f: T, terms: usize) -> Result<T> {
    check_argument(z)?;
    if !(f.abs() < T::one()) {
        return Err(Error::Domain(format!(
            "generating series requires |f| < 1, got {}",
            f.as_f64()
        )));
    }
    if !(sigma > T::zero()) {
        return Err(Error::Domain(format!("sigma must be positive, got {}", sigma.as_f64())));
    }
    let mut sum = T::zero();
    let mut power = T::one();
    let mut prev = T::zero();
    let mut cur = T::one();
    for i in 0..terms {
        sum = sum + cur * power;
        power = power * f;
        let fi = T::from_count(i);
        let next = ((T::lit(2.0) * fi + T::one() + sigma - z) * cur - (fi + sigma) * prev)
            / (fi + T::one());
        prev = cur;
        cur = next;
    }
    Ok(sum)
}

/// Closed form `(1 - f)^(-σ-1) exp(-f z / (1 - f))` of the generating series.
pub fn generating_closed_form<T: Real>(sigma: T, z: T, f: T) -> T {
    let one = T::one();
    (one - f).powf(-sigma - one) * (-f * z / (one - f)).exp()
}

/// Coefficients of `y L_n = diag L_n + up L_{n+1} + down L_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YRecursion<T> {
    pub diag: T,
    pub up: T,
    pub down: T,
}

/// Returns `(2n + k + 1, -(n + 1), -(n + k))`. At `n = 0` the down coefficient
/// multiplies an absent polynomial.
pub fn y_recursion_coefficients<T: Real>(idx: LaguerreIndex<T>) -> YRecursion<T> {
    let n = T::from_count(idx.degree);
    let k = idx.order;
    YRecursion {
        diag: T::lit(2.0) * n + k + T::one(),
        up: -(n + T::one()),
        down: -(n + k),
    }
}

/// A Gauss rule for the weight `z^exponent e^{-z}` on `(0, ∞)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule<T> {
    order: usize,
    exponent: T,
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Real> QuadratureRule<T> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> T {
        self.exponent
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// `Σ w_i f(z_i)`, approximating `∫ z^exponent e^{-z} f(z) dz`.
    pub fn integrate<F: Fn(T) -> T>(&self, f: F) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (&z, &w)| acc + w * f(z))
    }

    /// Writes the rule as CSV with columns `node,weight`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "node,weight")?;
        for (z, w) in self.nodes.iter().zip(&self.weights) {
            writeln!(out, "{:e},{:e}", z.as_f64(), w.as_f64())?;
        }
        Ok(())
    }
}

/// Generalized Gauss–Laguerre rule from the eigenvalues of the Jacobi matrix.
///
/// Weights at the outermost nodes of very high-order rules can underflow to
/// zero; every other weight is positive.
pub fn gauss_laguerre_rule<T: Real>(order: usize, exponent: T) -> Result<QuadratureRule<T>> {
    if order == 0 || order > RULE_ORDER_LIMIT {
        return Err(Error::Capability(format!(
            "quadrature order must be in 1..={RULE_ORDER_LIMIT}, got {order}"
        )));
    }
    if !(exponent > -T::one()) || !exponent.is_finite() {
        return Err(Error::Domain(format!(
            "weight exponent must exceed -1, got {}",
            exponent.as_f64()
        )));
    }
    let two = T::lit(2.0);
    let diag: Vec<T> = (0..order)
        .map(|i| two * T::from_count(i) + exponent + T::one())
        .collect();
    let off: Vec<T> = (1..order)
        .map(|i| {
            let fi = T::from_count(i);
            (fi * (fi + exponent)).sqrt()
        })
        .collect();
    let jacobi = SymTridiagonal::new(diag, off)?;
    let nodes = jacobi.eigenvalues()?;
    let mu0 = gamma(exponent + T::one());
    let weights: Vec<T> = nodes
        .iter()
        .map(|&z| mu0 * jacobi.first_component_sq(z))
        .collect();

    for (i, pair) in nodes.windows(2).enumerate() {
        if !(pair[1] > pair[0]) {
            return Err(Error::Numeric(format!(
                "nodes {i} and {} are not increasing: {} >= {} (order {order}, exponent {})",
                i + 1,
                pair[0].as_f64(),
                pair[1].as_f64(),
                exponent.as_f64()
            )));
        }
    }
    if nodes[0] <= T::zero() {
        return Err(Error::Numeric(format!(
            "smallest node {} is not positive (order {order}, exponent {})",
            nodes[0].as_f64(),
            exponent.as_f64()
        )));
    }
    if let Some(i) = weights.iter().position(|w| !w.is_finite() || *w < T::zero()) {
        return Err(Error::Numeric(format!(
            "weight {i} is invalid: {} (order {order}, exponent {})",
            weights[i].as_f64(),
            exponent.as_f64()
        )));
    }
    Ok(QuadratureRule { order, exponent, nodes, weights })
}

/// `∫₀^∞ z^{k+shift} e^{-z} L_m^{(k)} L_n^{(k)} dz` by an exact-degree Gauss rule.
pub fn quad_laguerre_product<T: Real>(m: usize, n: usize, k: T, shift: i32) -> Result<T> {
    if !(k > T::zero()) {
        return Err(Error::Domain(format!("k must be positive, got {}", k.as_f64())));
    }
    if !(-1..=1).contains(&shift) {
        return Err(Error::Domain(format!("shift must be -1, 0 or 1, got {shift}")));
    }
    if shift == -1 && k <= T::lit(1e-6) {
        return Err(Error::IllConditioned(format!(
            "weight z^(k-1) with k = {} is nearly non-integrable",
            k.as_f64()
        )));
    }
    let rule = gauss_laguerre_rule((m + n).div_ceil(2) + 1, k + T::from_i32(shift).unwrap())?;
    Ok(rule.integrate(|z| eval_unchecked(m, k, z) * eval_unchecked(n, k, z)))
}

/// Orthogonality: `Γ(n+k+1)/Γ(n+1)` when `m = n`, else 0.
pub fn integral_orthogonality<T: Real>(m: usize, n: usize, k: T) -> T {
    if m == n {
        gamma_ratio(n, k)
    } else {
        T::zero()
    }
}

/// Result of the three-case closed form for the `z^{k-1}` weighted product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PrintedIntegral<T> {
    Value(T),
    /// `|m - n| >= 2`: no closed form is listed for this case.
    NotCovered,
}

impl<T: Copy> PrintedIntegral<T> {
    pub fn value(self) -> Option<T> {
        match self {
            PrintedIntegral::Value(v) => Some(v),
            PrintedIntegral::NotCovered => None,
        }
    }
}

/// The three listed cases for `∫ z^{k-1} e^{-z} L_m^{(k)} L_n^{(k)} dz`, as written:
/// `m = n-1`: `-Γ(n+k)(n+1)/Γ(n+2)`; `m = n`: `Γ(n+k)(2n+k+1)/Γ(n+2)`;
/// `m = n+1`: `-Γ(n+k+1)/Γ(n+2)`.
///
/// These do not agree with direct integration; compare
/// [`integral_km1_reference`].
pub fn integral_km1_printed<T: Real>(m: usize, n: usize, k: T) -> PrintedIntegral<T> {
    let nf = T::from_count(n);
    let one = T::one();
    let two = T::lit(2.0);
    // Γ(n+k)/Γ(n+2) = Γ(n+k+1) / ((n+k) Γ(n+2))
    let g_nk = gamma_ratio(n, k) / (nf + k) / (nf + one);
    if m + 1 == n {
        PrintedIntegral::Value(-g_nk * (nf + one))
    } else if m == n {
        PrintedIntegral::Value(g_nk * (two * nf + k + one))
    } else if m == n + 1 {
        PrintedIntegral::Value(-gamma_ratio(n, k) / (nf + one))
    } else {
        PrintedIntegral::NotCovered
    }
}

/// The true value `Γ(k+q+1)/(q! k)` with `q = min(m, n)`.
pub fn integral_km1_reference<T: Real>(m: usize, n: usize, k: T) -> T {
    gamma_ratio(m.min(n), k) / k
}

/// `∫ z^{k+1} e^{-z} [L_n^{(k)}]² dz = (2n+k+1) Γ(n+k+1)/Γ(n+1)`.
pub fn integral_kp1_diag<T: Real>(n: usize, k: T) -> T {
    (T::lit(2.0) * T::from_count(n) + k + T::one()) * gamma_ratio(n, k)
}
