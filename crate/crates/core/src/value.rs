//! Scalar values that set functions take.
//!
//! Finite combinatorial objects (matroid ranks, measures with rational
//! weights) use the exact rational scalar [`Rat`]; analytically described
//! objects may use `f64`. Everything downstream — quotients, profiles,
//! canonical forms — is generic over [`Value`] so the two worlds share one
//! code path.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Num, ToPrimitive};

/// Exact rational scalar. Numerators and denominators stay tiny here
/// (multiples of 1/n and 1/m grids), so a fixed-width 128-bit ratio is ample.
pub type Rat = num_rational::Ratio<i128>;

/// Scalar type usable as the value of a set function.
pub trait Value:
    Num + PartialOrd + Clone + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Whether comparisons are exact (no rounding anywhere).
    const EXACT: bool;

    /// Construct `numer / denom`. Panics on a zero denominator.
    fn from_int_ratio(numer: i64, denom: i64) -> Self;

    /// Total order used for canonical forms and deduplication.
    fn total_cmp_value(&self, other: &Self) -> Ordering;

    /// Value used for deduplication. Identity for exact scalars; inexact
    /// scalars snap to a 1e-9 grid so nearby floats merge deterministically.
    fn snapped(&self) -> Self;

    /// Lossy conversion for metric computations.
    fn to_f64_lossy(&self) -> f64;

    /// Serialized form (`p/q` for rationals, shortest decimal for floats).
    fn render(&self) -> String;

    /// Inverse of [`Value::render`]; also accepts the other form where
    /// unambiguous.
    fn parse_value(text: &str) -> Option<Self>;

    fn min_value(a: Self, b: Self) -> Self {
        if b < a {
            b
        } else {
            a
        }
    }

    fn max_value(a: Self, b: Self) -> Self {
        if b > a {
            b
        } else {
            a
        }
    }
}

impl Value for Rat {
    const EXACT: bool = true;

    fn from_int_ratio(numer: i64, denom: i64) -> Self {
        Rat::new(numer as i128, denom as i128)
    }

    fn total_cmp_value(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn snapped(&self) -> Self {
        self.clone()
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn render(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_value(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let n: i128 = num.trim().parse().ok()?;
            let d: i128 = den.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Rat::new(n, d))
        } else {
            let n: i128 = text.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

const SNAP_GRID: f64 = 1e9;

impl Value for f64 {
    const EXACT: bool = false;

    fn from_int_ratio(numer: i64, denom: i64) -> Self {
        numer as f64 / denom as f64
    }

    fn total_cmp_value(&self, other: &Self) -> Ordering {
        self.total_cmp(other)
    }

    fn snapped(&self) -> Self {
        (self * SNAP_GRID).round() / SNAP_GRID
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }

    fn render(&self) -> String {
        format!("{self}")
    }

    fn parse_value(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let n: f64 = num.trim().parse().ok()?;
            let d: f64 = den.trim().parse().ok()?;
            if d == 0.0 {
                return None;
            }
            Some(n / d)
        } else {
            text.parse().ok()
        }
    }
}
