//! Significant-digit formatting for table cells.

use crate::error::{Error, Result};

pub const MIN_PRECISION: usize = 6;
pub const MAX_PRECISION: usize = 17;
pub const DEFAULT_PRECISION: usize = 16;

pub fn check_precision(p: usize) -> Result<usize> {
    if (MIN_PRECISION..=MAX_PRECISION).contains(&p) {
        Ok(p)
    } else {
        Err(Error::Domain(format!(
            "precision must be within {MIN_PRECISION}..={MAX_PRECISION} significant digits, got {p}"
        )))
    }
}

/// `x` rounded half-to-even to `digits` significant digits.
///
/// Positional notation for decimal exponents in `-5..digits`, scientific otherwise.
pub fn sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits.max(1);
    // no negative zero in tables
    let x = if x == 0.0 { 0.0 } else { x };
    // the exact decimal expansion is rounded half-to-even by the formatter
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        return sci;
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let all: String = mantissa.chars().filter(|c| *c != '.').collect();
    let body = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), all)
    } else {
        let split = exp as usize + 1;
        if split >= all.len() {
            all
        } else {
            format!("{}.{}", &all[..split], &all[split..])
        }
    };
    format!("{sign}{body}")
}
