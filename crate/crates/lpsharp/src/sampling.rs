//! Seeded random generators for families and pairs.
//!
//! The fuzzing distribution mixes dense positive values, sparse supports,
//! disjoint patterns, and near-equal families, since the equality cases of
//! the bounds live at both extremes of the overlap range. All streams are
//! ChaCha-based, so identical seeds reproduce identical inputs on every
//! platform.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::measure::{FunctionFamily, MeasureSpace};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn log_uniform(&mut self) -> f64 {
        10f64.powf(self.rng.gen_range(-2.0..1.0))
    }

    fn weights(&mut self, m: usize) -> Vec<f64> {
        (0..m)
            .map(|_| 10f64.powf(self.rng.gen_range(-1.0..1.0)))
            .collect()
    }

    fn rows(&mut self, n: usize, m: usize) -> Vec<Vec<f64>> {
        let mut rows = vec![vec![0.0; m]; n];
        match self.rng.gen_range(0..4u8) {
            // dense positive values
            0 => {
                for row in &mut rows {
                    for v in row.iter_mut() {
                        *v = self.log_uniform();
                    }
                }
            }
            // sparse supports
            1 => {
                for row in &mut rows {
                    for v in row.iter_mut() {
                        if self.rng.gen_bool(0.4) {
                            *v = self.log_uniform();
                        }
                    }
                }
            }
            // pairwise disjoint supports: each atom belongs to one function
            2 =>
            {
                #[allow(clippy::needless_range_loop)]
                for atom in 0..m {
                    let owner = self.rng.gen_range(0..n);
                    rows[owner][atom] = self.log_uniform();
                }
            }
            // near-equal functions
            _ => {
                let base: Vec<f64> = (0..m).map(|_| self.log_uniform()).collect();
                for row in &mut rows {
                    for (v, &b) in row.iter_mut().zip(&base) {
                        *v = b * (1.0 + 0.05 * self.rng.gen_range(-1.0..1.0));
                    }
                }
            }
        }
        if rows.iter().flatten().all(|&v| v == 0.0) {
            rows[0][0] = 1.0;
        }
        rows
    }

    /// A random family of n functions on 2..=16 atoms; never identically zero.
    pub fn family(&mut self, n: u32) -> FunctionFamily {
        let m = self.rng.gen_range(2..=16usize);
        let space = MeasureSpace::new(self.weights(m)).expect("positive weights");
        let rows = self.rows(n as usize, m);
        FunctionFamily::new(space, rows).expect("sampler produces valid families")
    }

    /// A non-negative pair with both functions nonzero.
    pub fn nonneg_pair(&mut self) -> (MeasureSpace, Vec<f64>, Vec<f64>) {
        let m = self.rng.gen_range(2..=16usize);
        let space = MeasureSpace::new(self.weights(m)).expect("positive weights");
        let mut rows = self.rows(2, m);
        for row in &mut rows {
            if row.iter().all(|&v| v == 0.0) {
                let idx = self.rng.gen_range(0..m);
                row[idx] = self.log_uniform();
            }
        }
        let g = rows.pop().unwrap();
        let f = rows.pop().unwrap();
        (space, f, g)
    }

    /// Alias of [`Sampler::nonneg_pair`] communicating the nonzero guarantee.
    pub fn positive_pair(&mut self) -> (MeasureSpace, Vec<f64>, Vec<f64>) {
        self.nonneg_pair()
    }

    /// A real-valued pair (entries of either sign), for the bounds that do
    /// not assume non-negativity.
    pub fn signed_pair(&mut self) -> (MeasureSpace, Vec<f64>, Vec<f64>) {
        let m = self.rng.gen_range(2..=16usize);
        let space = MeasureSpace::new(self.weights(m)).expect("positive weights");
        let sample = |rng: &mut ChaCha8Rng| -> Vec<f64> {
            (0..m).map(|_| rng.gen_range(-2.0..2.0)).collect()
        };
        let g = sample(&mut self.rng);
        let h = sample(&mut self.rng);
        (space, g, h)
    }
}
