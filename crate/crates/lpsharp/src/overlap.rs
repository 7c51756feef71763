//! Overlap functionals quantifying joint support of a family.
//!
//! Both functionals are quotients normalized so that they equal 0 exactly when
//! the functions have pairwise disjoint supports and 1 exactly when all
//! functions coincide (for p > 2):
//!
//! * `gamma_p`: ‖ (C(N,2))^{-1} Σ_{i<j} f_i f_j ‖_{p/2}^{p/2} / ((1/N) Σ_j ‖f_j‖_p^p)
//! * `gamma_tilde_p`: (C(N,2))^{-1} Σ_{i<j} ‖f_i f_j‖_{p/2}^{p/2} / ((1/N) Σ_j ‖f_j‖_p^p)
//!
//! By Jensen's inequality gamma_p ≤ gamma_tilde_p for p > 2 and the ordering
//! reverses for p ∈ (0, 2); at p = 2 both reduce to the weight appearing in
//! the exact L² identity.

use crate::error::{domain, Result};
use crate::measure::{lp_mass, FunctionFamily};

/// Pointwise mean of the pairwise products, (C(N,2))^{-1} Σ_{i<j} f_i f_j.
pub fn pairwise_product_mean(fam: &FunctionFamily) -> Vec<f64> {
    let n = fam.len();
    let pairs = (n * (n - 1) / 2) as f64;
    let mut row = vec![0.0; fam.space().atoms()];
    for i in 0..n {
        for j in (i + 1)..n {
            let (fi, fj) = (fam.function(i), fam.function(j));
            for (m, slot) in row.iter_mut().enumerate() {
                *slot += fi[m] * fj[m];
            }
        }
    }
    for slot in &mut row {
        *slot /= pairs;
    }
    row
}

/// Mean p-mass (1/N) Σ_j ∫ f_j^p shared by both overlap denominators.
fn mean_mass(fam: &FunctionFamily, p: f64) -> Result<f64> {
    let mut sum = 0.0;
    for f in fam.functions() {
        sum += lp_mass(f, p, fam.space())?;
    }
    let mean = sum / fam.len() as f64;
    if mean == 0.0 {
        return Err(crate::error::Error::ZeroFamily);
    }
    Ok(mean)
}

fn check_overlap_p(p: f64) -> Result<()> {
    if p > 0.0 {
        Ok(())
    } else {
        Err(domain("p", p, "overlap functionals require p > 0"))
    }
}

/// Γ_p: p/2-mass of the averaged pairwise product over the mean p-mass.
pub fn gamma_p(fam: &FunctionFamily, p: f64) -> Result<f64> {
    check_overlap_p(p)?;
    let denom = mean_mass(fam, p)?;
    let num = lp_mass(&pairwise_product_mean(fam), p / 2.0, fam.space())?;
    Ok(num / denom)
}

/// Γ̃_p: mean of the pairwise p/2-masses over the mean p-mass.
pub fn gamma_tilde_p(fam: &FunctionFamily, p: f64) -> Result<f64> {
    check_overlap_p(p)?;
    let denom = mean_mass(fam, p)?;
    let n = fam.len();
    let mut num = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let prod: Vec<f64> = fam
                .function(i)
                .iter()
                .zip(fam.function(j))
                .map(|(&a, &b)| a * b)
                .collect();
            num += lp_mass(&prod, p / 2.0, fam.space())?;
        }
    }
    num /= (n * (n - 1) / 2) as f64;
    Ok(num / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::measure::MeasureSpace;
    use crate::sampling::Sampler;
    use approx::assert_relative_eq;

    fn family(weights: Vec<f64>, values: Vec<Vec<f64>>) -> FunctionFamily {
        FunctionFamily::new(MeasureSpace::new(weights).unwrap(), values).unwrap()
    }

    #[test]
    fn product_mean_examples() {
        let all_ones = family(
            vec![0.5, 0.5],
            vec![vec![1.0, 1.0], vec![1.0, 1.0], vec![1.0, 1.0]],
        );
        assert_eq!(pairwise_product_mean(&all_ones), vec![1.0, 1.0]);

        let disjoint = family(vec![1.0, 1.0], vec![vec![1.0, 0.0], vec![0.0, 2.0]]);
        assert_eq!(pairwise_product_mean(&disjoint), vec![0.0, 0.0]);

        let single_pair = family(vec![1.0, 1.0], vec![vec![1.0, 1.0], vec![2.0, 0.0]]);
        assert_eq!(pairwise_product_mean(&single_pair), vec![2.0, 0.0]);
    }

    #[test]
    fn equal_functions_give_one() {
        let fam = family(
            vec![0.2, 0.8],
            vec![vec![1.5, 0.5], vec![1.5, 0.5], vec![1.5, 0.5]],
        );
        for p in [1.0, 2.0, 3.0, 4.0, 8.0] {
            assert_relative_eq!(gamma_p(&fam, p).unwrap(), 1.0, max_relative = 1e-13);
            assert_relative_eq!(gamma_tilde_p(&fam, p).unwrap(), 1.0, max_relative = 1e-13);
        }
    }

    #[test]
    fn disjoint_supports_give_zero() {
        let fam = family(
            vec![1.0, 1.0, 1.0],
            vec![
                vec![2.0, 0.0, 0.0],
                vec![0.0, 3.0, 0.0],
                vec![0.0, 0.0, 0.5],
            ],
        );
        for p in [1.0, 2.5, 4.0] {
            assert_eq!(gamma_p(&fam, p).unwrap(), 0.0);
            assert_eq!(gamma_tilde_p(&fam, p).unwrap(), 0.0);
        }
    }

    #[test]
    fn hand_computed_pair_value() {
        // ‖f1·f2‖_2^2 = 1/2, mean 4-mass = 3/4, quotient 2/3
        let fam = family(vec![0.5, 0.5], vec![vec![1.0, 1.0], vec![1.0, 0.0]]);
        assert_relative_eq!(gamma_p(&fam, 4.0).unwrap(), 2.0 / 3.0, max_relative = 1e-14);
    }

    #[test]
    fn two_function_variants_coincide() {
        let mut sampler = Sampler::new(23);
        for _ in 0..100 {
            let fam = sampler.family(2);
            for p in [1.5, 2.0, 4.0, 7.5] {
                match (gamma_p(&fam, p), gamma_tilde_p(&fam, p)) {
                    (Ok(a), Ok(b)) => assert_relative_eq!(a, b, max_relative = 1e-13),
                    (Err(Error::ZeroFamily), Err(Error::ZeroFamily)) => {}
                    other => panic!("inconsistent results: {other:?}"),
                }
            }
        }
    }

    #[test]
    fn jensen_ordering() {
        let mut sampler = Sampler::new(29);
        for _ in 0..200 {
            let fam = sampler.family(4);
            if fam.pointwise_sum().iter().all(|&s| s == 0.0) {
                continue;
            }
            for p in [2.5, 3.0, 4.0, 8.0] {
                let g = gamma_p(&fam, p).unwrap();
                let gt = gamma_tilde_p(&fam, p).unwrap();
                assert!(gt - g >= -1e-12 * gt.abs().max(1.0), "p={p} g={g} gt={gt}");
                assert!((0.0..=1.0 + 1e-12).contains(&g), "gamma out of range: {g}");
                assert!(gt <= 1.0 + 1e-12, "gamma_tilde out of range: {gt}");
            }
            for p in [0.5, 1.0, 1.5, 1.9] {
                let g = gamma_p(&fam, p).unwrap();
                let gt = gamma_tilde_p(&fam, p).unwrap();
                assert!(g - gt >= -1e-12 * g.abs().max(1.0), "p={p} g={g} gt={gt}");
            }
        }
    }

    #[test]
    fn scale_invariance() {
        let mut sampler = Sampler::new(31);
        for _ in 0..50 {
            let fam = sampler.family(3);
            if fam.pointwise_sum().iter().all(|&s| s == 0.0) {
                continue;
            }
            let scaled = fam.scaled(0.37).unwrap();
            for p in [1.5, 4.0] {
                assert_relative_eq!(
                    gamma_p(&fam, p).unwrap(),
                    gamma_p(&scaled, p).unwrap(),
                    max_relative = 1e-12
                );
                assert_relative_eq!(
                    gamma_tilde_p(&fam, p).unwrap(),
                    gamma_tilde_p(&scaled, p).unwrap(),
                    max_relative = 1e-12
                );
            }
        }
    }

    #[test]
    fn zero_family_is_rejected() {
        let fam = family(vec![1.0, 1.0], vec![vec![0.0, 0.0], vec![0.0, 0.0]]);
        assert!(matches!(gamma_p(&fam, 4.0), Err(Error::ZeroFamily)));
        assert!(matches!(gamma_tilde_p(&fam, 4.0), Err(Error::ZeroFamily)));
        assert!(matches!(gamma_p(&fam, -1.0), Err(Error::Domain { .. })));
    }
}
