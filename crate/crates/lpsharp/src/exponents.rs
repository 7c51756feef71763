//! Closed-form exponents governing how far the convexity bound can be
//! sharpened, and the coefficients used in the sharpness analysis.

use crate::error::{domain, Result};

fn check_n(n: u32, min: u32, constraint: &'static str) -> Result<f64> {
    if n >= min {
        Ok(n as f64)
    } else {
        Err(domain("N", n as f64, constraint))
    }
}

/// The sharp exponent r(N,p) = 2N / (2N + (p-2)(2N-1)).
///
/// This is the largest r for which the reduced scalar inequality holds; note
/// r(N,2) = 1 for every N, and r(N,p) > 1/(p-1) for p > 2.
pub fn r_main(n: u32, p: f64) -> Result<f64> {
    let nn = check_n(n, 2, "N >= 2")?;
    let den = 2.0 * nn + (p - 2.0) * (2.0 * nn - 1.0);
    if den <= 0.0 {
        return Err(domain("p", p, "2N + (p-2)(2N-1) > 0"));
    }
    Ok(2.0 * nn / den)
}

/// The local-minimum threshold r̃(N,p) = N / (N + (p-2)(N-1)).
///
/// Above this exponent the all-equal configuration of the extremal trial
/// family stops being a local minimum of K. At N = 2 it equals 2/p, where it
/// is also sufficient; for N > 2 it is necessary only.
pub fn r_tilde(n: u32, p: f64) -> Result<f64> {
    let nn = check_n(n, 2, "N >= 2")?;
    let den = nn + (p - 2.0) * (nn - 1.0);
    if den <= 0.0 {
        return Err(domain("p", p, "N + (p-2)(N-1) > 0"));
    }
    Ok(nn / den)
}

/// The N-uniform limit exponent 1/(p-1) = lim_{N→∞} r(N,p).
pub fn r_limit(p: f64) -> Result<f64> {
    if p <= 1.0 {
        return Err(domain("p", p, "p > 1"));
    }
    Ok(1.0 / (p - 1.0))
}

/// The necessary bound from the trial family at a = 0:
/// (ln(N-1) - ln(N-2)) / ((p/2 - 1)·ln N + ln(N-1) - (p/2)·ln(N-2)).
///
/// Defined for N ≥ 3 (the a = 0 configuration is degenerate at N = 2, where
/// K is symmetric and equality already holds there) and p > 2.
pub fn nec_bound(n: u32, p: f64) -> Result<f64> {
    let nn = check_n(n, 3, "N >= 3")?;
    if p <= 2.0 {
        return Err(domain("p", p, "p > 2"));
    }
    let num = (nn - 1.0).ln() - (nn - 2.0).ln();
    let den = (p / 2.0 - 1.0) * nn.ln() + (nn - 1.0).ln() - (p / 2.0) * (nn - 2.0).ln();
    Ok(num / den)
}

/// First-order coefficient α of the overlap ratio
/// (1 - Nx/(N-1))^{p/2} (1 + Nx)^{1-p} = 1 - αx + O(x²) at x = 0:
///
/// α = N·((p-2)(2N-1) + 2N) / (2(N-1)).
///
/// The value satisfies r_main(N,p) = N² / ((N-1)·α) exactly, and the +2N term
/// in the bracket is pinned independently by a finite-difference derivative of
/// the ratio.
pub fn alpha_coeff(n: u32, p: f64) -> Result<f64> {
    let nn = check_n(n, 2, "N >= 2")?;
    Ok(nn * ((p - 2.0) * (2.0 * nn - 1.0) + 2.0 * nn) / (2.0 * (nn - 1.0)))
}
