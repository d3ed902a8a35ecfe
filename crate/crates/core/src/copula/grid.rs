use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::evaluator::BivariateEvaluator;
use super::point::UnitPoint;
use crate::error::{Error, Result};

/// Values of a function on the `(n+1) x (n+1)` nodes `(i/n, j/n)`.
///
/// When the node values come from a copula, bilinear interpolation between
/// them is the checkerboard copula with the same cell masses, so the grid is
/// itself an evaluator.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    n: usize,
    values: Vec<f64>,
    label: String,
}

impl GridFunction {
    /// Samples `c` at the nodes of an `n x n` grid.
    pub fn from_evaluator<C: BivariateEvaluator + ?Sized>(c: &C, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("grid needs n >= 2, got {n}")));
        }
        let h = 1.0 / n as f64;
        let values: Vec<f64> = (0..=n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let u = i as f64 * h;
                (0..=n).map(move |j| c.at(u, j as f64 * h))
            })
            .collect();
        Ok(Self {
            n,
            values,
            label: format!("grid[{n}]({})", c.label()),
        })
    }

    /// Checkerboard copula of an `m x m` mass matrix whose rows and columns
    /// each sum to `1/m` (a doubly stochastic matrix divided by `m`).
    pub fn from_cell_masses(m: usize, mass: &[f64]) -> Result<Self> {
        if m < 1 || mass.len() != m * m {
            return Err(Error::InvalidSpec("mass matrix must be m x m".into()));
        }
        if mass.iter().any(|&x| x < -1e-12) {
            return Err(Error::InvalidSpec("cell masses must be nonnegative".into()));
        }
        let target = 1.0 / m as f64;
        for k in 0..m {
            let row: f64 = (0..m).map(|j| mass[k * m + j]).sum();
            let col: f64 = (0..m).map(|i| mass[i * m + k]).sum();
            if (row - target).abs() > 1e-9 || (col - target).abs() > 1e-9 {
                return Err(Error::InvalidSpec(
                    "mass matrix is not doubly stochastic".into(),
                ));
            }
        }
        let mut values = vec![0.0; (m + 1) * (m + 1)];
        for i in 1..=m {
            for j in 1..=m {
                values[i * (m + 1) + j] = values[(i - 1) * (m + 1) + j]
                    + values[i * (m + 1) + j - 1]
                    - values[(i - 1) * (m + 1) + j - 1]
                    + mass[(i - 1) * m + j - 1];
            }
        }
        // pin the margins exactly
        for k in 0..=m {
            let t = k as f64 / m as f64;
            values[m * (m + 1) + k] = t;
            values[k * (m + 1) + m] = t;
        }
        Ok(Self {
            n: m,
            values,
            label: format!("checkerboard[{m}]"),
        })
    }

    /// A random checkerboard copula on an `m x m` grid.
    ///
    /// The doubly stochastic matrix mixes a few random permutation matrices
    /// (which reach far into the attainable regions) with a Sinkhorn-balanced
    /// positive matrix.
    pub fn random_checkerboard(m: usize, rng: &mut impl Rng) -> Self {
        let mut p = vec![0.0; m * m];
        let k = rng.gen_range(1..=4);
        let mut weights: Vec<f64> = (0..=k).map(|_| -rng.gen::<f64>().max(1e-12).ln()).collect();
        if rng.gen_bool(0.5) {
            weights[k] = 0.0;
        }
        let total: f64 = weights.iter().sum();
        let mut perm: Vec<usize> = (0..m).collect();
        for w in &weights[..k] {
            perm.shuffle(rng);
            for (i, &j) in perm.iter().enumerate() {
                p[i * m + j] += w / total;
            }
        }
        if weights[k] > 0.0 {
            let mut s: Vec<f64> = (0..m * m).map(|_| rng.gen::<f64>() + 1e-3).collect();
            sinkhorn(&mut s, m);
            for (pi, si) in p.iter_mut().zip(&s) {
                *pi += weights[k] / total * si;
            }
        }
        let mass: Vec<f64> = p.iter().map(|x| x / m as f64).collect();
        Self::from_cell_masses(m, &mass).expect("random checkerboard is doubly stochastic")
    }

    /// Convenience wrapper seeding its own generator.
    pub fn random_checkerboard_seeded(m: usize, seed: u64) -> Self {
        Self::random_checkerboard(m, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * (self.n + 1) + j]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// H-volume of cell `[i/n, (i+1)/n] x [j/n, (j+1)/n]`.
    #[inline]
    pub fn cell_volume(&self, i: usize, j: usize) -> f64 {
        self.get(i + 1, j + 1) - self.get(i + 1, j) - self.get(i, j + 1) + self.get(i, j)
    }

    /// Bilinear interpolation of the node values.
    pub fn interpolate(&self, p: UnitPoint) -> f64 {
        let n = self.n as f64;
        let (x, y) = (p.u() * n, p.v() * n);
        let i = (x.floor() as usize).min(self.n - 1);
        let j = (y.floor() as usize).min(self.n - 1);
        let (fx, fy) = (x - i as f64, y - j as f64);
        let c00 = self.get(i, j);
        let c10 = self.get(i + 1, j);
        let c01 = self.get(i, j + 1);
        let c11 = self.get(i + 1, j + 1);
        c00 * (1.0 - fx) * (1.0 - fy)
            + c10 * fx * (1.0 - fy)
            + c01 * (1.0 - fx) * fy
            + c11 * fx * fy
    }
}

impl BivariateEvaluator for GridFunction {
    fn eval(&self, p: UnitPoint) -> f64 {
        self.interpolate(p)
    }

    fn label(&self) -> String {
        self.label.clone()
    }
}

fn sinkhorn(s: &mut [f64], m: usize) {
    for _ in 0..10_000 {
        for i in 0..m {
            let r: f64 = s[i * m..(i + 1) * m].iter().sum();
            s[i * m..(i + 1) * m].iter_mut().for_each(|x| *x /= r);
        }
        let mut worst: f64 = 0.0;
        for j in 0..m {
            let c: f64 = (0..m).map(|i| s[i * m + j]).sum();
            worst = worst.max((c - 1.0).abs());
            (0..m).for_each(|i| s[i * m + j] /= c);
        }
        if worst < 1e-15 {
            break;
        }
    }
}
