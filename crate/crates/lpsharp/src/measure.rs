//! Discrete measure spaces and L^p masses.
//!
//! Everything downstream works on finite lists of weighted atoms, where each
//! integral is an exact finite sum. The L^p functionals follow the convention
//! `‖f‖_p = (∫|f|^p)^{1/p}` for all p ≠ 0, even though this is only a norm for
//! p ≥ 1 and only a quasi-norm for 0 < p < 1. For p < 0 the integral runs over
//! the support of f alone.

use std::fmt;
use std::path::Path;

use crate::error::{domain, Error, Result};

/// A finite measure: M atoms with strictly positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureSpace {
    weights: Vec<f64>,
}

impl MeasureSpace {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptySpace);
        }
        for (atom, &weight) in weights.iter().enumerate() {
            if !weight.is_finite() || weight <= 0.0 {
                return Err(Error::BadWeight { atom, weight });
            }
        }
        Ok(Self { weights })
    }

    /// The uniform probability measure on `atoms` atoms.
    pub fn uniform_probability(atoms: usize) -> Result<Self> {
        if atoms == 0 {
            return Err(Error::EmptySpace);
        }
        Self::new(vec![1.0 / atoms as f64; atoms])
    }

    pub fn atoms(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }
}

/// N non-negative functions sampled on a shared [`MeasureSpace`].
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionFamily {
    space: MeasureSpace,
    values: Vec<Vec<f64>>,
}

impl FunctionFamily {
    pub fn new(space: MeasureSpace, values: Vec<Vec<f64>>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::FamilyTooSmall(values.len()));
        }
        for (function, row) in values.iter().enumerate() {
            if row.len() != space.atoms() {
                return Err(Error::RowLength {
                    function,
                    len: row.len(),
                    atoms: space.atoms(),
                });
            }
            for (atom, &value) in row.iter().enumerate() {
                if !value.is_finite() || value < 0.0 {
                    return Err(Error::NegativeValue {
                        function,
                        atom,
                        value,
                    });
                }
            }
        }
        Ok(Self { space, values })
    }

    /// Number of functions N.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn space(&self) -> &MeasureSpace {
        &self.space
    }

    pub fn function(&self, j: usize) -> &[f64] {
        &self.values[j]
    }

    pub fn functions(&self) -> impl Iterator<Item = &[f64]> {
        self.values.iter().map(Vec::as_slice)
    }

    /// Pointwise sum Σ_j f_j.
    pub fn pointwise_sum(&self) -> Vec<f64> {
        let mut sum = vec![0.0; self.space.atoms()];
        for row in &self.values {
            for (slot, &v) in sum.iter_mut().zip(row) {
                *slot += v;
            }
        }
        sum
    }

    /// The family with every function multiplied by c > 0.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !c.is_finite() || c <= 0.0 {
            return Err(domain("c", c, "c > 0"));
        }
        let values = self
            .values
            .iter()
            .map(|row| row.iter().map(|&v| c * v).collect())
            .collect();
        Self::new(self.space.clone(), values)
    }
}

/// ∫|f|^p dμ = Σ_m w_m |f_m|^p, summed over the support of f.
///
/// Returns 0 for f ≡ 0 when p > 0. For p < 0 an identically zero f is a
/// domain error, since the support is empty.
pub fn lp_mass(f: &[f64], p: f64, space: &MeasureSpace) -> Result<f64> {
    if p == 0.0 {
        return Err(Error::ZeroP);
    }
    if f.len() != space.atoms() {
        return Err(Error::LengthMismatch {
            len: f.len(),
            atoms: space.atoms(),
        });
    }
    let mut sum = 0.0;
    let mut support = false;
    for (&v, &w) in f.iter().zip(space.weights()) {
        let av = v.abs();
        if av > 0.0 {
            support = true;
            sum += w * av.powf(p);
        }
    }
    if !support && p < 0.0 {
        return Err(Error::EmptySupport);
    }
    Ok(sum)
}

/// ‖f‖_p = (∫|f|^p)^{1/p} for p ≠ 0.
pub fn lp_norm(f: &[f64], p: f64, space: &MeasureSpace) -> Result<f64> {
    Ok(lp_mass(f, p, space)?.powf(1.0 / p))
}

/// Reduce a family to the normalized form used throughout the bounds:
/// the measure becomes dν = |Σf_j|^p dμ / ‖Σf_j‖_p^p and each f_i becomes
/// f_i / Σf_j, so the result lives on a probability space and satisfies
/// Σ_j f_j = 1 at every atom. Atoms where Σ_j f_j = 0 carry no ν-mass and
/// are dropped, keeping all weights strictly positive.
pub fn normalize_family(fam: &FunctionFamily, p: f64) -> Result<FunctionFamily> {
    if p == 0.0 {
        return Err(Error::ZeroP);
    }
    let sum = fam.pointwise_sum();
    if sum.iter().all(|&s| s == 0.0) {
        return Err(Error::ZeroFamily);
    }
    let total = lp_mass(&sum, p, fam.space())?;
    let mut weights = Vec::new();
    let mut values = vec![Vec::new(); fam.len()];
    for (m, &s) in sum.iter().enumerate() {
        if s > 0.0 {
            weights.push(fam.space().weights()[m] * s.powf(p) / total);
            for (j, row) in values.iter_mut().enumerate() {
                row.push(fam.function(j)[m] / s);
            }
        }
    }
    FunctionFamily::new(MeasureSpace::new(weights)?, values)
}

/// A family together with the exponent it is meant to be checked at, as read
/// from the plain-text scenario format:
///
/// ```text
/// N M p
/// w_1 ... w_M
/// f_1(1) ... f_1(M)
/// ...
/// f_N(1) ... f_N(M)
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub family: FunctionFamily,
    pub p: f64,
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty());

        let (line, header) = lines
            .next()
            .ok_or_else(|| scenario_err(0, "empty scenario"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(scenario_err(line, "header must be `N M p`"));
        }
        let n: usize = fields[0]
            .parse()
            .map_err(|_| scenario_err(line, "N is not an integer"))?;
        let m: usize = fields[1]
            .parse()
            .map_err(|_| scenario_err(line, "M is not an integer"))?;
        let p: f64 = fields[2]
            .parse()
            .map_err(|_| scenario_err(line, "p is not a number"))?;

        let (line, weights_line) = lines
            .next()
            .ok_or_else(|| scenario_err(line, "missing weights line"))?;
        let weights = parse_row(weights_line, m, line)?;
        let space = MeasureSpace::new(weights)?;

        let mut values = Vec::with_capacity(n);
        let mut last = line;
        for _ in 0..n {
            let (line, row) = lines
                .next()
                .ok_or_else(|| scenario_err(last, "missing function row"))?;
            values.push(parse_row(row, m, line)?);
            last = line;
        }
        if let Some((line, _)) = lines.next() {
            return Err(scenario_err(line, "trailing content after the last row"));
        }
        Ok(Self {
            family: FunctionFamily::new(space, values)?,
            p,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {} {}",
            self.family.len(),
            self.family.space().atoms(),
            self.p
        )?;
        let row = |f: &mut fmt::Formatter<'_>, xs: &[f64]| -> fmt::Result {
            let mut first = true;
            for x in xs {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
            }
            writeln!(f)
        };
        row(f, self.family.space().weights())?;
        for j in 0..self.family.len() {
            row(f, self.family.function(j))?;
        }
        Ok(())
    }
}

fn parse_row(line: &str, m: usize, lineno: usize) -> Result<Vec<f64>> {
    let row: Vec<f64> = line
        .split_whitespace()
        .map(|t| t.parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| scenario_err(lineno, &format!("bad number: {e}")))?;
    if row.len() != m {
        return Err(scenario_err(
            lineno,
            &format!("expected {m} values, got {}", row.len()),
        ));
    }
    Ok(row)
}

fn scenario_err(line: usize, msg: &str) -> Error {
    Error::Scenario {
        line,
        msg: msg.to_string(),
    }
}
