//! The sharpened convexity bounds for N-function families.
//!
//! For non-negative f_1,…,f_N and p > 2,
//!
//! ‖Σ f_j‖_p^p ≤ [1 + (N-1) Γ_p^r]^{p-1} Σ ‖f_j‖_p^p,   r = r_main(N,p),
//!
//! which interpolates between the convexity bound (Γ = 1, factor N^{p-1}) and
//! disjoint-support additivity (Γ = 0, factor 1). For p ∈ (1,2) the reverse
//! inequality holds, and at p = 2 with r = 1 the two sides agree exactly.

use crate::error::{domain, Result};
use crate::exponents::{r_limit, r_main};
use crate::measure::{lp_mass, FunctionFamily};
use crate::overlap::{gamma_p, gamma_tilde_p};
use crate::report::{direction_for_p, InequalityReport};

fn sum_masses(fam: &FunctionFamily, p: f64) -> Result<f64> {
    let mut sum = 0.0;
    for f in fam.functions() {
        sum += lp_mass(f, p, fam.space())?;
    }
    Ok(sum)
}

fn sharpened_report(
    label: &'static str,
    fam: &FunctionFamily,
    p: f64,
    r: f64,
    gamma: f64,
) -> Result<InequalityReport> {
    let n = fam.len() as f64;
    let lhs = lp_mass(&fam.pointwise_sum(), p, fam.space())?;
    let rhs = (1.0 + (n - 1.0) * gamma.powf(r)).powf(p - 1.0) * sum_masses(fam, p)?;
    Ok(InequalityReport::new(label, lhs, rhs, direction_for_p(p)))
}

/// The bound above with overlap Γ_p and exponent r (default r_main(N,p)).
///
/// Direction: upper bound for p > 2, lower bound on (1,2), identity at p = 2
/// where the default exponent is r_main(N,2) = 1.
pub fn main_report(fam: &FunctionFamily, p: f64, r: Option<f64>) -> Result<InequalityReport> {
    if p <= 1.0 {
        return Err(domain("p", p, "p > 1"));
    }
    let r = match r {
        Some(r) if r > 0.0 => r,
        Some(r) => return Err(domain("r", r, "r > 0")),
        None => r_main(fam.len() as u32, p)?,
    };
    sharpened_report("main", fam, p, r, gamma_p(fam, p)?)
}

/// The weaker N-uniform bound with overlap Γ̃_p and exponent 1/(p-1).
pub fn corollary_report(fam: &FunctionFamily, p: f64) -> Result<InequalityReport> {
    if p <= 1.0 {
        return Err(domain("p", p, "p > 1"));
    }
    let r = r_limit(p)?;
    sharpened_report("corollary", fam, p, r, gamma_tilde_p(fam, p)?)
}

/// The exact identity at p = 2, r = 1 as an identity-direction report:
/// ‖Σ f_j‖_2² = [1 + (N-1) Γ_2] Σ ‖f_j‖_2².
pub fn p2_identity_report(fam: &FunctionFamily) -> Result<InequalityReport> {
    let gamma = gamma_p(fam, 2.0)?;
    sharpened_report("p2", fam, 2.0, 1.0, gamma)
}

/// Scale-normalized residual of the p = 2 identity.
pub fn p2_identity_residual(fam: &FunctionFamily) -> Result<f64> {
    let report = p2_identity_report(fam)?;
    Ok(-report.slack)
}
