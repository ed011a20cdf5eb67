//! Symmetric tridiagonal eigenvalues by Sturm-count bisection.
//!
//! One solver serves two consumers: the Jacobi matrices behind the Gauss
//! rules and the finite-difference Hamiltonians of the grid oracle. Only
//! eigenvalues are computed; the squared first eigenvector component, which
//! Gauss weights need, comes from the three-term recurrence at a converged
//! eigenvalue.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Upper bound on bisection steps; a bracket collapses to adjacent floats long before.
const MAX_BISECTION_STEPS: usize = 512;

#[derive(Debug, Clone)]
pub struct SymTridiagonal<T> {
    diag: Vec<T>,
    off: Vec<T>,
    off_sq: Vec<T>,
    pivmin: T,
}

impl<T: Real> SymTridiagonal<T> {
    /// `diag` has length `n`, `off` has length `n - 1`.
    pub fn new(diag: Vec<T>, off: Vec<T>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Domain("tridiagonal matrix must be non-empty".into()));
        }
        if off.len() + 1 != diag.len() {
            return Err(Error::Domain(format!(
                "off-diagonal length {} does not match diagonal length {}",
                off.len(),
                diag.len()
            )));
        }
        if let Some(i) = diag.iter().chain(off.iter()).position(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("non-finite matrix entry at position {i}")));
        }
        let off_sq: Vec<T> = off.iter().map(|&b| b * b).collect();
        let max_sq = off_sq.iter().fold(T::one(), |m, &v| m.max(v));
        let pivmin = T::min_positive_value() * max_sq;
        Ok(Self { diag, off, off_sq, pivmin })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    pub fn off(&self) -> &[T] {
        &self.off
    }

    /// Interval containing every eigenvalue.
    pub fn gershgorin(&self) -> (T, T) {
        let n = self.len();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for i in 0..n {
            let mut radius = T::zero();
            if i > 0 {
                radius = radius + self.off[i - 1].abs();
            }
            if i + 1 < n {
                radius = radius + self.off[i].abs();
            }
            lo = lo.min(self.diag[i] - radius);
            hi = hi.max(self.diag[i] + radius);
        }
        let pad = T::epsilon() * T::from_count(2 * n) * lo.abs().max(hi.abs()) + self.pivmin;
        (lo - pad, hi + pad)
    }

    /// Number of eigenvalues below `x`, from the negative pivots of `T - xI = LDLᵀ`.
    pub fn count_below(&self, x: T) -> usize {
        let mut count = 0;
        let mut d = self.diag[0] - x;
        if d.abs() < self.pivmin {
            d = -self.pivmin;
        }
        if d < T::zero() {
            count += 1;
        }
        for i in 1..self.len() {
            d = (self.diag[i] - x) - self.off_sq[i - 1] / d;
            if d.abs() < self.pivmin {
                d = -self.pivmin;
            }
            if d < T::zero() {
                count += 1;
            }
        }
        count
    }

    /// Number of eigenvalues of the pencil `T - x W` below `x` for a positive
    /// diagonal `W`, i.e. the negative pivots of `T - x W` (Sylvester inertia).
    pub fn count_below_weighted(&self, x: T, weights: &[T]) -> usize {
        debug_assert_eq!(weights.len(), self.len());
        let mut count = 0;
        let mut d = T::one();
        for i in 0..self.len() {
            d = self.diag[i] - x * weights[i] - if i == 0 { T::zero() } else { self.off_sq[i - 1] / d };
            if d.abs() < self.pivmin {
                d = -self.pivmin;
            }
            if d < T::zero() {
                count += 1;
            }
        }
        count
    }

    /// The `count` smallest eigenvalues of `T u = λ W u` with positive diagonal `W`.
    pub fn lowest_weighted(&self, count: usize, weights: &[T]) -> Result<Vec<T>> {
        if weights.len() != self.len() || weights.iter().any(|w| !(*w > T::zero())) {
            return Err(Error::Domain("weights must be positive, one per row".into()));
        }
        if count > self.len() {
            return Err(Error::Domain(format!(
                "requested {count} eigenvalues from a pencil of order {}",
                self.len()
            )));
        }
        let two = T::lit(2.0);
        let limit = T::max_value().sqrt();
        let mut out = Vec::with_capacity(count);
        for k in 0..count {
            let mut lo = -T::one();
            while self.count_below_weighted(lo, weights) > k {
                lo = lo * two;
                if lo.abs() > limit {
                    return Err(Error::Numeric("pencil spectrum is unbounded below".into()));
                }
            }
            let mut hi = T::one();
            while self.count_below_weighted(hi, weights) <= k {
                hi = hi * two;
                if hi > limit {
                    return Err(Error::Numeric(format!("eigenvalue {k} of the pencil not bracketed")));
                }
            }
            if let Some(&prev) = out.last() {
                lo = lo.max(prev);
            }
            let mut steps = 0;
            loop {
                let mid = (lo + hi) / two;
                if hi - lo <= two * T::epsilon() * lo.abs().max(hi.abs()) || mid <= lo || mid >= hi {
                    out.push(mid);
                    break;
                }
                if self.count_below_weighted(mid, weights) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
                steps += 1;
                if steps > MAX_BISECTION_STEPS {
                    return Err(Error::Numeric(format!("pencil bisection for eigenvalue {k} did not converge")));
                }
            }
        }
        Ok(out)
    }

    /// Sign changes of the leading-minor sequence `det(T_i - xI)`, `i = 0..n`.
    ///
    /// Computed from the characteristic-polynomial recurrence with rescaling,
    /// independently of [`count_below`](Self::count_below).
    pub fn sturm_sign_changes(&self, x: T) -> usize {
        let big = T::max_value().sqrt().sqrt();
        let mut prev = T::one();
        let mut cur = self.diag[0] - x;
        let mut changes = 0;
        let mut last_sign = T::one();
        let mut record = |value: T, prev_sign: &mut T| {
            // a zero minor takes the sign opposite to its predecessor
            let sign = if value == T::zero() { -*prev_sign } else { value.signum() };
            if sign != *prev_sign {
                changes += 1;
            }
            *prev_sign = sign;
        };
        record(cur, &mut last_sign);
        for i in 1..self.len() {
            let next = (self.diag[i] - x) * cur - self.off_sq[i - 1] * prev;
            prev = cur;
            cur = next;
            let mag = cur.abs();
            if mag > big || (mag < T::one() / big && mag > T::zero()) {
                prev = prev / mag;
                cur = cur / mag;
            }
            record(cur, &mut last_sign);
        }
        changes
    }

    /// The `index`-th smallest eigenvalue (0-based).
    pub fn eigenvalue(&self, index: usize) -> Result<T> {
        let (lo, hi) = self.gershgorin();
        self.bisect(index, lo, hi)
    }

    fn bisect(&self, index: usize, mut lo: T, mut hi: T) -> Result<T> {
        if index >= self.len() {
            return Err(Error::Domain(format!(
                "eigenvalue index {index} out of range for order {}",
                self.len()
            )));
        }
        let two = T::lit(2.0);
        for _ in 0..MAX_BISECTION_STEPS {
            let mid = (lo + hi) / two;
            let tol = two * T::epsilon() * lo.abs().max(hi.abs()) + self.pivmin;
            if hi - lo <= tol || mid <= lo || mid >= hi {
                return Ok(mid);
            }
            if self.count_below(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Err(Error::Numeric(format!(
            "bisection for eigenvalue {index} did not converge: bracket [{}, {}]",
            lo.as_f64(),
            hi.as_f64()
        )))
    }

    /// The `count` smallest eigenvalues in increasing order.
    pub fn lowest(&self, count: usize) -> Result<Vec<T>> {
        if count > self.len() {
            return Err(Error::Domain(format!(
                "requested {count} eigenvalues from a matrix of order {}",
                self.len()
            )));
        }
        let (lo, hi) = self.gershgorin();
        let mut out = Vec::with_capacity(count);
        let mut floor = lo;
        for k in 0..count {
            let value = self.bisect(k, floor, hi)?;
            // eigenvalues are sorted, so the previous bracket bottom is reusable
            floor = floor.max(value - (hi - lo) * T::epsilon());
            out.push(value);
        }
        Ok(out)
    }

    pub fn eigenvalues(&self) -> Result<Vec<T>> {
        self.lowest(self.len())
    }

    /// Square of the first component of the unit eigenvector for eigenvalue `lambda`.
    ///
    /// The unnormalized eigenvector has first component 1 and follows the
    /// three-term recurrence; the squared first component is the inverse of
    /// its squared norm. Requires all off-diagonals to be non-zero.
    pub fn first_component_sq(&self, lambda: T) -> T {
        let big = T::max_value().sqrt().sqrt();
        let n = self.len();
        let mut prev = T::zero();
        let mut cur = T::one();
        let mut sum = T::one();
        // sum carries a factor big^(2 * rescales)
        let mut rescales = 0i32;
        for j in 0..n - 1 {
            let back = if j == 0 { T::zero() } else { self.off[j - 1] * prev };
            let next = ((lambda - self.diag[j]) * cur - back) / self.off[j];
            prev = cur;
            cur = next;
            if cur.abs() > big {
                prev = prev / big;
                cur = cur / big;
                sum = sum / (big * big);
                rescales += 1;
            }
            sum = sum + cur * cur;
        }
        let mut inv = T::one() / sum;
        for _ in 0..rescales {
            inv = inv / (big * big);
        }
        inv
    }
}
