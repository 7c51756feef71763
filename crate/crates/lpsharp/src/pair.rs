//! Two-function inequalities: Clarkson's inequality, the improved triangle
//! inequality, and the ladder of sharpened bounds for ∫(f+g)^p.

use crate::error::{domain, Error, Result};
use crate::measure::{lp_mass, lp_norm, FunctionFamily, MeasureSpace};
use crate::overlap::gamma_p;
use crate::report::{Direction, InequalityReport};

fn check_len(f: &[f64], space: &MeasureSpace) -> Result<()> {
    if f.len() != space.atoms() {
        return Err(Error::LengthMismatch {
            len: f.len(),
            atoms: space.atoms(),
        });
    }
    Ok(())
}

/// Clarkson: ‖(g+h)/2‖_p^p + ‖(g-h)/2‖_p^p ≤ (‖g‖_p^p + ‖h‖_p^p)/2 for p ≥ 2.
///
/// At p = 2 this is the parallelogram law and holds with equality. The rows
/// may take either sign; moduli are applied inside the masses.
pub fn clarkson_report(
    g: &[f64],
    h: &[f64],
    p: f64,
    space: &MeasureSpace,
) -> Result<InequalityReport> {
    if p < 2.0 {
        return Err(domain("p", p, "p >= 2"));
    }
    check_len(g, space)?;
    check_len(h, space)?;
    let mean: Vec<f64> = g.iter().zip(h).map(|(&a, &b)| 0.5 * (a + b)).collect();
    let half_diff: Vec<f64> = g.iter().zip(h).map(|(&a, &b)| 0.5 * (a - b)).collect();
    let lhs = lp_mass(&mean, p, space)? + lp_mass(&half_diff, p, space)?;
    let rhs = 0.5 * (lp_mass(g, p, space)? + lp_mass(h, p, space)?);
    Ok(InequalityReport::new(
        "clarkson",
        lhs,
        rhs,
        Direction::UpperBound,
    ))
}

/// The improved triangle inequality for p > 2:
///
/// ‖g+h‖_p ≤ (1 - λ(1-λ)‖u^{p/2} - v^{p/2}‖_2²)^{1/p} (‖g‖_p + ‖h‖_p),
///
/// where λ = ‖g‖_p/(‖g‖_p+‖h‖_p) and u, v are the p-normalized moduli of g
/// and h. The correction factor is at most 1, so the right side never exceeds
/// the plain triangle bound ‖g‖_p + ‖h‖_p.
pub fn improved_triangle_report(
    g: &[f64],
    h: &[f64],
    p: f64,
    space: &MeasureSpace,
) -> Result<InequalityReport> {
    if p <= 2.0 {
        return Err(domain("p", p, "p > 2"));
    }
    check_len(g, space)?;
    check_len(h, space)?;
    let ng = lp_norm(g, p, space)?;
    let nh = lp_norm(h, p, space)?;
    if ng == 0.0 {
        return Err(Error::ZeroFunction("g"));
    }
    if nh == 0.0 {
        return Err(Error::ZeroFunction("h"));
    }
    let lam = ng / (ng + nh);
    let mut dist_sq = 0.0;
    for ((&a, &b), &w) in g.iter().zip(h).zip(space.weights()) {
        let du = (a.abs() / ng).powf(p / 2.0) - (b.abs() / nh).powf(p / 2.0);
        dist_sq += w * du * du;
    }
    let correction = 1.0 - lam * (1.0 - lam) * dist_sq;
    let rhs = correction.powf(1.0 / p) * (ng + nh);
    let sum: Vec<f64> = g.iter().zip(h).map(|(&a, &b)| a + b).collect();
    let lhs = lp_norm(&sum, p, space)?;
    Ok(InequalityReport::new(
        "tri5",
        lhs,
        rhs,
        Direction::UpperBound,
    ))
}

/// The three upper bounds for ∫(f+g)^p on non-negative pairs, p > 2, from
/// weakest to strongest:
///
/// * `carb`:   (1 + ‖fg‖_{p/2} / (‖f‖_p ‖g‖_p))^{p-1} ∫(f^p + g^p)
/// * `carb+`:  (1 + Γ_p^{2/p})^{p-1} ∫(f^p + g^p)
/// * `carb++`: (((1+√(1-Γ_p²))/2)^{1/p} + ((1-√(1-Γ_p²))/2)^{1/p})^p ∫(f^p + g^p)
///
/// All three are equalities when f = g and when f, g have disjoint supports.
/// `carb` is undefined when either norm vanishes and is then omitted; the
/// other two degrade continuously through Γ_p = 0.
pub fn pair_bounds_report(
    f: &[f64],
    g: &[f64],
    p: f64,
    space: &MeasureSpace,
) -> Result<Vec<InequalityReport>> {
    if p <= 2.0 {
        return Err(domain("p", p, "p > 2"));
    }
    let fam = FunctionFamily::new(space.clone(), vec![f.to_vec(), g.to_vec()])?;
    let gamma = gamma_p(&fam, p)?;
    let sum_masses = lp_mass(f, p, space)? + lp_mass(g, p, space)?;
    let combined: Vec<f64> = f.iter().zip(g).map(|(&a, &b)| a + b).collect();
    let lhs = lp_mass(&combined, p, space)?;

    let mut out = Vec::with_capacity(3);
    let nf = lp_norm(f, p, space)?;
    let ng = lp_norm(g, p, space)?;
    if nf > 0.0 && ng > 0.0 {
        let product: Vec<f64> = f.iter().zip(g).map(|(&a, &b)| a * b).collect();
        let ratio = lp_norm(&product, p / 2.0, space)? / (nf * ng);
        let rhs = (1.0 + ratio).powf(p - 1.0) * sum_masses;
        out.push(InequalityReport::new(
            "carb",
            lhs,
            rhs,
            Direction::UpperBound,
        ));
    }
    let rhs_plus = (1.0 + gamma.powf(2.0 / p)).powf(p - 1.0) * sum_masses;
    out.push(InequalityReport::new(
        "carb+",
        lhs,
        rhs_plus,
        Direction::UpperBound,
    ));
    let (hi, lo) = crate::scalar::branch_halves(gamma);
    let bracket = hi.powf(1.0 / p) + lo.powf(1.0 / p);
    let rhs_pp = bracket.powf(p) * sum_masses;
    out.push(InequalityReport::new(
        "carb++",
        lhs,
        rhs_pp,
        Direction::UpperBound,
    ));
    Ok(out)
}

fn normalized_pair(g: &[f64], h: &[f64], p: f64, space: &MeasureSpace) -> Result<(f64, f64)> {
    let ng = lp_norm(g, p, space)?;
    let nh = lp_norm(h, p, space)?;
    if ng == 0.0 {
        return Err(Error::ZeroFunction("g"));
    }
    if nh == 0.0 {
        return Err(Error::ZeroFunction("h"));
    }
    let lam = ng / (ng + nh);
    // ∫ (uv)^{p/2} for the p-normalized moduli
    let mut w = 0.0;
    for ((&a, &b), &wt) in g.iter().zip(h).zip(space.weights()) {
        let prod = (a.abs() / ng) * (b.abs() / nh);
        if prod > 0.0 {
            w += wt * prod.powf(p / 2.0);
        }
    }
    Ok((lam, w))
}

/// The replication bound on (‖|g|+|h|‖_p / (‖g‖_p + ‖h‖_p))^p obtained by
/// splitting g and h into n unit-norm copies (m of u, n-m of v, m = round(λn))
/// and applying the N-uniform corollary bound to that family:
///
/// (1/n + ((n-1)/n) Γ̃_n^{1/(p-1)})^{p-1},  Γ̃_n = a_n + (1-a_n)‖uv‖_{p/2}^{p/2}.
pub fn replicated_triangle_bound(
    g: &[f64],
    h: &[f64],
    p: f64,
    space: &MeasureSpace,
    n: u64,
) -> Result<f64> {
    if p <= 2.0 {
        return Err(domain("p", p, "p > 2"));
    }
    if n < 2 {
        return Err(domain("N", n as f64, "N >= 2"));
    }
    check_len(g, space)?;
    check_len(h, space)?;
    let (lam, w) = normalized_pair(g, h, p, space)?;
    let nn = n as f64;
    let m = (lam * nn).round().clamp(0.0, nn);
    let a_n = (m * (m - 1.0).max(0.0) + (nn - m) * (nn - m - 1.0).max(0.0)) / (nn * (nn - 1.0));
    let overlap = a_n + (1.0 - a_n) * w;
    Ok((1.0 / nn + ((nn - 1.0) / nn) * overlap.powf(1.0 / (p - 1.0))).powf(p - 1.0))
}

/// The n → ∞ limit of [`replicated_triangle_bound`]:
/// 1 - 2λ(1-λ)(1 - ‖uv‖_{p/2}^{p/2}) = 1 - λ(1-λ)‖u^{p/2} - v^{p/2}‖_2².
pub fn limit_triangle_bound(g: &[f64], h: &[f64], p: f64, space: &MeasureSpace) -> Result<f64> {
    if p <= 2.0 {
        return Err(domain("p", p, "p > 2"));
    }
    check_len(g, space)?;
    check_len(h, space)?;
    let (lam, w) = normalized_pair(g, h, p, space)?;
    Ok(1.0 - 2.0 * lam * (1.0 - lam) * (1.0 - w))
}
