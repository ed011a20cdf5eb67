//! Gamma function and double-word arithmetic helpers.

use crate::scalar::Real;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_series<T: Real>(x: T) -> T {
    let mut acc = T::lit(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + T::lit(c) / (x + T::from_count(i));
    }
    acc
}

/// Gamma function for real arguments (Lanczos approximation with reflection).
pub fn gamma<T: Real>(x: T) -> T {
    if x >= T::one() && x <= T::lit(170.0) && x == x.floor() {
        return factorial(x.to_usize().unwrap_or(1) - 1);
    }
    let half = T::lit(0.5);
    if x < half {
        let pi = T::PI();
        return pi / ((pi * x).sin() * gamma(T::one() - x));
    }
    let x = x - T::one();
    let t = x + T::lit(LANCZOS_G) + half;
    // split the power so that t^(x+1/2) does not overflow before e^-t damps it
    let p = t.powf((x + half) * half) * (-t * half).exp();
    (T::TAU()).sqrt() * lanczos_series(x) * p * p
}

/// Natural logarithm of the Gamma function for `x > 0`.
pub fn ln_gamma<T: Real>(x: T) -> T {
    let half = T::lit(0.5);
    if x < half {
        let pi = T::PI();
        return (pi / (pi * x).sin().abs()).ln() - ln_gamma(T::one() - x);
    }
    let x = x - T::one();
    let t = x + T::lit(LANCZOS_G) + half;
    half * T::TAU().ln() + (x + half) * t.ln() - t + lanczos_series(x).ln()
}

/// `Γ(n + k + 1) / Γ(n + 1)` as `Γ(k + 1) · Π_{i=1..n} (k + i) / i`.
pub fn gamma_ratio<T: Real>(n: usize, k: T) -> T {
    let mut acc = gamma(k + T::one());
    for i in 1..=n {
        let fi = T::from_count(i);
        acc = acc * (k + fi) / fi;
    }
    acc
}

/// `n!` for small `n`, exact up to the precision of `T`.
pub fn factorial<T: Real>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * T::from_count(i))
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleWord<T> {
    pub hi: T,
    pub lo: T,
}

#[inline]
fn two_sum<T: Real>(a: T, b: T) -> DoubleWord<T> {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    DoubleWord { hi: s, lo: err }
}

#[inline]
fn fast_two_sum<T: Real>(a: T, b: T) -> DoubleWord<T> {
    let s = a + b;
    DoubleWord { hi: s, lo: b - (s - a) }
}

#[inline]
fn two_prod<T: Real>(a: T, b: T) -> DoubleWord<T> {
    let p = a * b;
    DoubleWord { hi: p, lo: a.mul_add(b, -p) }
}

impl<T: Real> DoubleWord<T> {
    pub fn new(x: T) -> Self {
        Self { hi: x, lo: T::zero() }
    }

    /// Exact sum of two scalars.
    pub fn sum_of(a: T, b: T) -> Self {
        two_sum(a, b)
    }

    pub fn value(self) -> T {
        self.hi + self.lo
    }

    pub fn add(self, y: Self) -> Self {
        let s = two_sum(self.hi, y.hi);
        let t = two_sum(self.lo, y.lo);
        let v = fast_two_sum(s.hi, s.lo + t.hi);
        fast_two_sum(v.hi, t.lo + v.lo)
    }

    pub fn mul_scalar(self, y: T) -> Self {
        let c = two_prod(self.hi, y);
        fast_two_sum(c.hi, self.lo.mul_add(y, c.lo))
    }

    pub fn mul(self, y: Self) -> Self {
        let c = two_prod(self.hi, y.hi);
        let tl = self.hi.mul_add(y.lo, self.lo * y.lo);
        let cl = self.lo.mul_add(y.hi, tl);
        fast_two_sum(c.hi, c.lo + cl)
    }

    pub fn div(self, y: Self) -> Self {
        let th = self.hi / y.hi;
        let r = y.mul_scalar(th);
        let ph = self.hi - r.hi;
        let dl = self.lo - r.lo;
        let tl = (ph + dl) / y.hi;
        fast_two_sum(th, tl)
    }

    pub fn div_scalar(self, y: T) -> Self {
        self.div(Self::new(y))
    }

    pub fn neg(self) -> Self {
        Self { hi: -self.hi, lo: -self.lo }
    }
}
