//! Inequality reports: both sides of a bound, a sign-adjusted slack, and a
//! verdict.
//!
//! Slack is normalized by max(|lhs|, |rhs|) so tolerances are dimensionless;
//! every inequality here is homogeneous, so this makes verdicts invariant
//! under rescaling the inputs.

use serde::Serialize;
use std::fmt;

/// Default relative comparison tolerance. Double-precision powers lose about
/// five digits by p ≈ 16, so exact-arithmetic equalities are checked to 1e-10.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Which way the bound is supposed to go.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// rhs is an upper bound: holds when lhs ≤ rhs.
    UpperBound,
    /// rhs is a lower bound: holds when lhs ≥ rhs.
    LowerBound,
    /// lhs and rhs must agree to tolerance.
    Identity,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::UpperBound => "upper-bound",
            Direction::LowerBound => "lower-bound",
            Direction::Identity => "identity",
        })
    }
}

/// Direction of the sharpened bounds as a function of p: upper bound for
/// p > 2, exact identity at p = 2, lower bound on (1, 2).
pub(crate) fn direction_for_p(p: f64) -> Direction {
    if p > 2.0 {
        Direction::UpperBound
    } else if p == 2.0 {
        Direction::Identity
    } else {
        Direction::LowerBound
    }
}

/// One evaluated inequality. `slack >= 0` means it holds with margin; verdicts
/// compare the normalized slack against a relative tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct InequalityReport {
    pub label: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub direction: Direction,
    pub slack: f64,
    pub holds: bool,
}

impl InequalityReport {
    pub fn new(label: &'static str, lhs: f64, rhs: f64, direction: Direction) -> Self {
        Self::with_tol(label, lhs, rhs, direction, DEFAULT_TOL)
    }

    pub fn with_tol(
        label: &'static str,
        lhs: f64,
        rhs: f64,
        direction: Direction,
        tol: f64,
    ) -> Self {
        let raw = match direction {
            Direction::UpperBound => rhs - lhs,
            Direction::LowerBound => lhs - rhs,
            Direction::Identity => -(lhs - rhs).abs(),
        };
        let scale = lhs.abs().max(rhs.abs());
        let slack = if raw == 0.0 {
            0.0
        } else if scale.is_finite() {
            raw / scale
        } else if raw.is_nan() {
            f64::NAN
        } else {
            // one side overflowed; only the sign of the margin is meaningful
            raw.signum()
        };
        let holds = slack >= -tol;
        Self {
            label,
            lhs,
            rhs,
            direction,
            slack,
            holds,
        }
    }

    /// Verdict at a different relative tolerance.
    pub fn holds_at(&self, tol: f64) -> bool {
        self.slack >= -tol
    }
}
