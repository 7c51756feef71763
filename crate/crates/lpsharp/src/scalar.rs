//! The reduced scalar forms of the sharpened bounds.
//!
//! After normalizing a family so that Σ f_j = 1 on a probability space, the
//! N-function bound collapses to a one-parameter inequality in
//! B = Σ_j ∫ f_j^p ∈ [N^{1-p}, 1], and under B = (1/N + x)^{p-1} to an
//! equivalent polynomial-free form in x ∈ [0, (N-1)/N]. Chasing the exponents
//! reduces everything to the convexity fact 1 + Nx ≤ (1 - Nx/(N-1))^{1-N}.

use crate::error::{domain, Result};
use crate::report::{direction_for_p, Direction, InequalityReport};

// Domain checks allow a hair of slack so that endpoints computed through
// different floating-point routes (e.g. B = (1/N)^{p-1} vs N^{1-p}) stay legal.
const EDGE_SLOP: f64 = 1e-12;

fn check_scalar_np(n: u32, p: f64) -> Result<f64> {
    if n < 2 {
        return Err(domain("N", n as f64, "N >= 2"));
    }
    if p <= 1.0 {
        return Err(domain("p", p, "p > 1"));
    }
    Ok(n as f64)
}

fn check_r(r: f64) -> Result<()> {
    if r > 0.0 {
        Ok(())
    } else {
        Err(domain("r", r, "r > 0"))
    }
}

/// The overlap ratio φ(x) = (1 - Nx/(N-1))^{p/2} / (1 + Nx)^{p-1} appearing in
/// the x-form. φ(0) = 1 and φ((N-1)/N) = 0.
pub fn nf5b_overlap_ratio(x: f64, n: u32, p: f64) -> f64 {
    let nn = n as f64;
    let base = (1.0 - nn * x / (nn - 1.0)).max(0.0);
    base.powf(p / 2.0) / (1.0 + nn * x).powf(p - 1.0)
}

/// The change of variables B = (1/N + x)^{p-1} linking the two scalar forms.
pub fn b_from_x(x: f64, n: u32, p: f64) -> f64 {
    (1.0 / n as f64 + x).powf(p - 1.0)
}

/// The scalar bound in B:
///
/// 1 ≤ (1 + (N-1)·(N((1-B^{1/(p-1)})/(N(N-1)))^{p/2} / B)^r)^{p-1} · B
///
/// for B ∈ [N^{1-p}, 1], with equality at both endpoints. Upper-bound
/// direction for p > 2, reversed on (1,2), identity at p = 2 with r = 1.
pub fn scalar_nf5(b: f64, n: u32, p: f64, r: f64) -> Result<InequalityReport> {
    let nn = check_scalar_np(n, p)?;
    check_r(r)?;
    let b_min = nn.powf(1.0 - p);
    if !(b >= b_min * (1.0 - EDGE_SLOP) && b <= 1.0 + EDGE_SLOP) {
        return Err(domain("B", b, "N^(1-p) <= B <= 1"));
    }
    let inner =
        nn * ((1.0 - b.powf(1.0 / (p - 1.0))).max(0.0) / (nn * (nn - 1.0))).powf(p / 2.0) / b;
    let rhs = (1.0 + (nn - 1.0) * inner.powf(r)).powf(p - 1.0) * b;
    Ok(InequalityReport::new("nf5", 1.0, rhs, direction_for_p(p)))
}

/// The equivalent bound in x: N ≤ (1 + (N-1)·φ(x)^r)(1 + Nx) on
/// x ∈ [0, (N-1)/N], with equality at both endpoints.
pub fn scalar_nf5b(x: f64, n: u32, p: f64, r: f64) -> Result<InequalityReport> {
    let nn = check_scalar_np(n, p)?;
    check_r(r)?;
    let hi = (nn - 1.0) / nn;
    if !(x >= 0.0 && x <= hi * (1.0 + EDGE_SLOP)) {
        return Err(domain("x", x, "0 <= x <= (N-1)/N"));
    }
    let rhs = (1.0 + (nn - 1.0) * nf5b_overlap_ratio(x, n, p).powf(r)) * (1.0 + nn * x);
    Ok(InequalityReport::new("nf5B", nn, rhs, direction_for_p(p)))
}

/// The terminal convexity inequality 1 + Nx ≤ (1 - Nx/(N-1))^{1-N} on
/// 0 ≤ x < (N-1)/N.
pub fn scalar_final(x: f64, n: u32) -> Result<InequalityReport> {
    if n < 2 {
        return Err(domain("N", n as f64, "N >= 2"));
    }
    let nn = n as f64;
    let hi = (nn - 1.0) / nn;
    if !(0.0..hi).contains(&x) {
        return Err(domain("x", x, "0 <= x < (N-1)/N"));
    }
    let lhs = 1.0 + nn * x;
    let rhs = (1.0 - nn * x / (nn - 1.0)).powf(1.0 - nn);
    Ok(InequalityReport::new(
        "final",
        lhs,
        rhs,
        Direction::UpperBound,
    ))
}

/// The two scalar forms evaluated at matched points B = (1/N + x)^{p-1} and x
/// must reach the same verdict.
pub fn nf5_nf5b_verdicts_agree(x: f64, n: u32, p: f64, r: f64) -> Result<bool> {
    let in_b = scalar_nf5(b_from_x(x, n, p), n, p, r)?;
    let in_x = scalar_nf5b(x, n, p, r)?;
    Ok(in_b.holds == in_x.holds)
}

/// The two branch weights ((1+√(1-γ²))/2, (1-√(1-γ²))/2).
///
/// The low branch is computed as γ²/(2(1+√(1-γ²))), which is the same number
/// but does not cancel to zero when γ² drops below machine epsilon; the low
/// branch feeds a 1/p-th power, so losing it would wipe out a correction far
/// larger than the rounding that caused it.
pub(crate) fn branch_halves(gamma: f64) -> (f64, f64) {
    let s = (1.0 - gamma * gamma).max(0.0).sqrt();
    ((1.0 + s) / 2.0, gamma * gamma / (2.0 * (1.0 + s)))
}

/// The scalar comparison behind the strongest two-function bound:
///
/// (((1+√(1-γ²))/2)^{1/p} + ((1-√(1-γ²))/2)^{1/p})^p ≤ (1 + γ^{2/p})^{p-1}
///
/// for γ ∈ [0, 1] and p ≥ 2, with equality at γ = 0 and γ = 1 and a gap of at
/// most a few percent in between.
pub fn pre_scalar(gamma: f64, p: f64) -> Result<InequalityReport> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(domain("gamma", gamma, "0 <= gamma <= 1"));
    }
    if p < 2.0 {
        return Err(domain("p", p, "p >= 2"));
    }
    let (hi, lo) = branch_halves(gamma);
    let bracket = hi.powf(1.0 / p) + lo.powf(1.0 / p);
    let lhs = bracket.powf(p);
    let rhs = (1.0 + gamma.powf(2.0 / p)).powf(p - 1.0);
    Ok(InequalityReport::new(
        "pre",
        lhs,
        rhs,
        Direction::UpperBound,
    ))
}
