//! Three-point finite-difference eigensolvers for the radial and line problems.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectra::MorseParams;
use crate::tridiag::SymTridiagonal;

pub const MIN_POINTS: usize = 100;

/// Uniform grid `r_i = r_min + i h`, `i = 0..points`, with `u = 0` at both ends.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid<T> {
    r_min: T,
    r_max: T,
    points: usize,
}

impl<T: Real> RadialGrid<T> {
    pub fn new(r_min: T, r_max: T, points: usize) -> Result<Self> {
        if !(r_min > T::zero()) || !(r_max > r_min) || !r_max.is_finite() {
            return Err(Error::Domain(format!(
                "radial grid needs 0 < r_min < r_max, got [{}, {}]",
                r_min.as_f64(),
                r_max.as_f64()
            )));
        }
        check_points(points)?;
        Ok(Self { r_min, r_max, points })
    }

    pub fn r_min(&self) -> T {
        self.r_min
    }

    pub fn r_max(&self) -> T {
        self.r_max
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> T {
        spacing(self.r_min, self.r_max, self.points)
    }

    /// Same interval with `h` halved.
    pub fn refined(&self) -> Self {
        Self { points: 2 * self.points - 1, ..*self }
    }
}

/// Uniform grid on `[x_min, x_max]` with `u = 0` at both ends.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineGrid<T> {
    x_min: T,
    x_max: T,
    points: usize,
}

impl<T: Real> LineGrid<T> {
    pub fn new(x_min: T, x_max: T, points: usize) -> Result<Self> {
        if !(x_max > x_min) || !x_min.is_finite() || !x_max.is_finite() {
            return Err(Error::Domain(format!(
                "line grid needs x_min < x_max, got [{}, {}]",
                x_min.as_f64(),
                x_max.as_f64()
            )));
        }
        check_points(points)?;
        Ok(Self { x_min, x_max, points })
    }

    pub fn x_min(&self) -> T {
        self.x_min
    }

    pub fn x_max(&self) -> T {
        self.x_max
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> T {
        spacing(self.x_min, self.x_max, self.points)
    }

    pub fn refined(&self) -> Self {
        Self { points: 2 * self.points - 1, ..*self }
    }
}

fn check_points(points: usize) -> Result<()> {
    if points < MIN_POINTS {
        return Err(Error::Domain(format!("grid needs at least {MIN_POINTS} points, got {points}")));
    }
    Ok(())
}

fn spacing<T: Real>(a: T, b: T, points: usize) -> T {
    (b - a) / T::from_count(points - 1)
}

/// Grid uniform in `t = ln r` on `[ln r_min, ln r_max]`.
///
/// With `u(r) = √r φ(ln r)` the radial equation becomes the pencil
/// `-½φ'' + [(l + ½)²/2 + r²V(r)]φ = E r² φ`, whose solutions are smooth in `t`
/// even where `u` has a fractional power `r^{l_eff + 1}` at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogGrid<T> {
    r_min: T,
    r_max: T,
    points: usize,
}

impl<T: Real> LogGrid<T> {
    pub fn new(r_min: T, r_max: T, points: usize) -> Result<Self> {
        if !(r_min > T::zero()) || !(r_max > r_min) || !r_max.is_finite() {
            return Err(Error::Domain(format!(
                "log grid needs 0 < r_min < r_max, got [{}, {}]",
                r_min.as_f64(),
                r_max.as_f64()
            )));
        }
        check_points(points)?;
        Ok(Self { r_min, r_max, points })
    }

    pub fn r_min(&self) -> T {
        self.r_min
    }

    pub fn r_max(&self) -> T {
        self.r_max
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn refined(&self) -> Self {
        Self { points: 2 * self.points - 1, ..*self }
    }
}

/// Either a single-grid solve or two-grid Richardson extrapolation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Extrapolation {
    None,
    #[default]
    Richardson,
}

/// Lowest eigenvalues of `-½u'' + w(t)u` on the interior of a uniform grid.
fn lowest_levels<T: Real, F: Fn(T) -> T>(a: T, b: T, points: usize, w: F, count: usize) -> Result<Vec<T>> {
    if count == 0 {
        return Err(Error::Domain("at least one eigenvalue must be requested".into()));
    }
    let interior = points - 2;
    if count > interior {
        return Err(Error::Truncation(format!(
            "{count} levels requested from a grid with {interior} interior points"
        )));
    }
    let h = spacing(a, b, points);
    let kinetic = T::one() / (h * h);
    let mut diag = Vec::with_capacity(interior);
    for i in 1..=interior {
        let t = a + T::from_count(i) * h;
        let v = w(t);
        if !v.is_finite() {
            return Err(Error::Domain(format!(
                "potential is not finite at grid node {}",
                t.as_f64()
            )));
        }
        diag.push(kinetic + v);
    }
    let wall = w(b - h);
    let off = vec![-kinetic / T::lit(2.0); interior - 1];
    let levels = SymTridiagonal::new(diag, off)?.lowest(count)?;
    if let Some((i, e)) = levels.iter().enumerate().find(|(_, e)| **e >= wall) {
        return Err(Error::Truncation(format!(
            "level {i} at {} is not below the outer-wall potential {}; the grid does not confine it",
            e.as_f64(),
            wall.as_f64()
        )));
    }
    Ok(levels)
}

fn extrapolate<T: Real>(coarse: &[T], fine: &[T]) -> Vec<T> {
    coarse
        .iter()
        .zip(fine)
        .map(|(&c, &f)| (T::lit(4.0) * f - c) / T::lit(3.0))
        .collect()
}

/// Lowest `count` eigenvalues of `-½u'' + [V(r) + l(l+1)/(2r²)]u = Eu`.
pub fn solve_radial<T: Real, F: Fn(T) -> T>(
    potential: F,
    l: u32,
    grid: &RadialGrid<T>,
    count: usize,
    extrapolation: Extrapolation,
) -> Result<Vec<T>> {
    let ll = T::from_u32(l * (l + 1)).unwrap() / T::lit(2.0);
    let w = |r: T| potential(r) + ll / (r * r);
    let coarse = lowest_levels(grid.r_min, grid.r_max, grid.points, w, count)?;
    match extrapolation {
        Extrapolation::None => Ok(coarse),
        Extrapolation::Richardson => {
            let fine_grid = grid.refined();
            let fine = lowest_levels(fine_grid.r_min, fine_grid.r_max, fine_grid.points, w, count)?;
            Ok(extrapolate(&coarse, &fine))
        }
    }
}

fn log_levels<T: Real, F: Fn(T) -> T>(potential: &F, l: u32, grid: &LogGrid<T>, count: usize) -> Result<Vec<T>> {
    if count == 0 {
        return Err(Error::Domain("at least one eigenvalue must be requested".into()));
    }
    let interior = grid.points - 2;
    if count > interior {
        return Err(Error::Truncation(format!(
            "{count} levels requested from a grid with {interior} interior points"
        )));
    }
    let (a, b) = (grid.r_min.ln(), grid.r_max.ln());
    let h = spacing(a, b, grid.points);
    let kinetic = T::one() / (h * h);
    let lh = T::from_u32(l).unwrap() + T::lit(0.5);
    let centrifugal = lh * lh / T::lit(2.0);
    let mut diag = Vec::with_capacity(interior);
    let mut weights = Vec::with_capacity(interior);
    for i in 1..=interior {
        let r = (a + T::from_count(i) * h).exp();
        let v = potential(r);
        if !v.is_finite() {
            return Err(Error::Domain(format!("potential is not finite at r = {}", r.as_f64())));
        }
        let r2 = r * r;
        diag.push(kinetic + centrifugal + r2 * v);
        weights.push(r2);
    }
    let off = vec![-kinetic / T::lit(2.0); interior - 1];
    let levels = SymTridiagonal::new(diag, off)?.lowest_weighted(count, &weights)?;
    let r_last = (b - h).exp();
    let wall = potential(r_last) + (lh * lh - T::lit(0.25)) / (T::lit(2.0) * r_last * r_last);
    if let Some((i, e)) = levels.iter().enumerate().find(|(_, e)| **e >= wall) {
        return Err(Error::Truncation(format!(
            "level {i} at {} is not below the outer-wall potential {}; the grid does not confine it",
            e.as_f64(),
            wall.as_f64()
        )));
    }
    Ok(levels)
}

/// Same problem as [`solve_radial`] discretized on a [`LogGrid`].
pub fn solve_radial_log<T: Real, F: Fn(T) -> T>(
    potential: F,
    l: u32,
    grid: &LogGrid<T>,
    count: usize,
    extrapolation: Extrapolation,
) -> Result<Vec<T>> {
    let coarse = log_levels(&potential, l, grid, count)?;
    match extrapolation {
        Extrapolation::None => Ok(coarse),
        Extrapolation::Richardson => Ok(extrapolate(&coarse, &log_levels(&potential, l, &grid.refined(), count)?)),
    }
}

/// Lowest `count` eigenvalues of `-½u'' + (V₁e^{-αx} + V₂e^{-2αx})u = εu`.
pub fn solve_line<T: Real>(
    params: &MorseParams<T>,
    grid: &LineGrid<T>,
    count: usize,
    extrapolation: Extrapolation,
) -> Result<Vec<T>> {
    let available = params.level_count() as usize;
    if count > available {
        return Err(Error::Truncation(format!(
            "{count} levels requested but the potential binds only {available}"
        )));
    }
    let w = |x: T| params.potential(x);
    let coarse = lowest_levels(grid.x_min, grid.x_max, grid.points, w, count)?;
    match extrapolation {
        Extrapolation::None => Ok(coarse),
        Extrapolation::Richardson => {
            let g = grid.refined();
            let fine = lowest_levels(g.x_min, g.x_max, g.points, w, count)?;
            Ok(extrapolate(&coarse, &fine))
        }
    }
}

/// Number of grid eigenvalues of the line problem below `energy`.
pub fn line_levels_below<T: Real>(params: &MorseParams<T>, grid: &LineGrid<T>, energy: T) -> Result<usize> {
    let h = grid.spacing();
    let kinetic = T::one() / (h * h);
    let interior = grid.points - 2;
    let diag: Vec<T> = (1..=interior)
        .map(|i| kinetic + params.potential(grid.x_min + T::from_count(i) * h))
        .collect();
    let m = SymTridiagonal::new(diag, vec![-kinetic / T::lit(2.0); interior - 1])?;
    Ok(m.count_below(energy))
}
