//! The extremal trial family and its exact closed forms.
//!
//! N piecewise-constant functions on an equal partition of the unit interval,
//! represented exactly on N atoms of weight 1/N: f_j takes the value a on its
//! own cell and (1-a)/(N-1) elsewhere. By symmetry Σ f_j ≡ 1, Σ f_j^p and the
//! averaged pairwise product are constants, so every quantity in the
//! sharpness analysis is an exact finite expression. a = 1/N is the all-equal
//! configuration and a = 1 the disjoint-support one.

use crate::error::{domain, Result};
use crate::measure::{FunctionFamily, MeasureSpace};

/// Parameters of one trial evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialConfig {
    pub n: u32,
    pub p: f64,
    pub a: f64,
    pub r: f64,
}

impl TrialConfig {
    pub fn new(n: u32, p: f64, a: f64, r: f64) -> Result<Self> {
        check_na(n, a)?;
        if p <= 1.0 {
            return Err(domain("p", p, "p > 1"));
        }
        if r <= 0.0 {
            return Err(domain("r", r, "r > 0"));
        }
        Ok(Self { n, p, a, r })
    }

    pub fn k(&self) -> f64 {
        let forms = closed_forms_unchecked(self.n, self.p, self.a);
        k_from_forms(&forms, self.n, self.p, self.r)
    }
}

fn check_na(n: u32, a: f64) -> Result<()> {
    if n < 2 {
        return Err(domain("N", n as f64, "N >= 2"));
    }
    if !(0.0..=1.0).contains(&a) {
        return Err(domain("a", a, "0 <= a <= 1"));
    }
    Ok(())
}

/// The trial family as an explicit N-atom [`FunctionFamily`].
pub fn make_trial(n: u32, a: f64) -> Result<FunctionFamily> {
    check_na(n, a)?;
    let n = n as usize;
    let off_diag = (1.0 - a) / (n as f64 - 1.0);
    let space = MeasureSpace::uniform_probability(n)?;
    let values = (0..n)
        .map(|j| (0..n).map(|m| if m == j { a } else { off_diag }).collect())
        .collect();
    FunctionFamily::new(space, values)
}

/// The symmetric constants of the trial family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialClosedForms {
    /// Σ_j f_j^p = a^p + (N-1)^{1-p} (1-a)^p (constant over the interval).
    pub sum_fp: f64,
    /// (C(N,2))^{-1} Σ_{i<j} f_i f_j = 1/N² - (a - 1/N)²/(N-1)².
    pub pair_mean: f64,
    /// The overlap Γ_p = N·pair_mean^{p/2} / sum_fp. (Γ̃_p agrees with it for
    /// N = 2 and at a ∈ {1/N, 1}; for N > 2 at generic a the pair products
    /// are distinct functions and Jensen's gap keeps Γ̃_p strictly larger
    /// when p > 2.)
    pub gamma: f64,
}

fn closed_forms_unchecked(n: u32, p: f64, a: f64) -> TrialClosedForms {
    let nn = n as f64;
    let sum_fp = a.powf(p) + (nn - 1.0).powf(1.0 - p) * (1.0 - a).powf(p);
    let centered = a - 1.0 / nn;
    let pair_mean = (1.0 / (nn * nn) - centered * centered / ((nn - 1.0) * (nn - 1.0))).max(0.0);
    let gamma = nn * pair_mean.powf(p / 2.0) / sum_fp;
    TrialClosedForms {
        sum_fp,
        pair_mean,
        gamma,
    }
}

pub fn trial_closed_forms(n: u32, p: f64, a: f64) -> Result<TrialClosedForms> {
    check_na(n, a)?;
    if p == 0.0 {
        return Err(crate::error::Error::ZeroP);
    }
    Ok(closed_forms_unchecked(n, p, a))
}

fn k_from_forms(forms: &TrialClosedForms, n: u32, p: f64, r: f64) -> f64 {
    (1.0 + (n as f64 - 1.0) * forms.gamma.powf(r)).powf(p - 1.0) * forms.sum_fp
}

/// K(a) = (1 + (N-1)·Γ^r)^{p-1} · Σ_j f_j^p: the ratio of the sharpened
/// bound's two sides on the trial family. Admissibility of r on this family
/// is exactly K ≥ 1 for all a, with equality at a = 1/N and a = 1.
pub fn k_value(n: u32, p: f64, a: f64, r: f64) -> Result<f64> {
    Ok(TrialConfig::new(n, p, a, r)?.k())
}

/// Quadratic and cubic coefficients (c2, c3) of Σ_j f_j^p / N^{1-p} expanded
/// about the all-equal point a = 1/N in t = a - 1/N:
///
/// c2 = p(p-1)N²/(2(N-1)),  c3 = p(p-1)(p-2)N³(N-2)/(6(N-1)²).
///
/// c3 vanishes exactly when N = 2 or p = 2; for N > 2 the cubic term is what
/// turns the all-equal point into an inflection at the threshold exponent.
pub fn taylor_coeffs(n: u32, p: f64) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(domain("N", n as f64, "N >= 2"));
    }
    if p <= 1.0 {
        return Err(domain("p", p, "p > 1"));
    }
    let nn = n as f64;
    let c2 = p * (p - 1.0) * nn * nn / (2.0 * (nn - 1.0));
    let c3 = p * (p - 1.0) * (p - 2.0) * nn.powi(3) * (nn - 2.0) / (6.0 * (nn - 1.0) * (nn - 1.0));
    Ok((c2, c3))
}
