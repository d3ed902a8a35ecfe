use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::evaluator::BivariateEvaluator;
use super::point::UnitPoint;
use crate::error::{Error, Result};

/// One strip of a shuffle of `M`: the `u`-interval `[start, end]` is sent to
/// the `target`-th slot (1-based) of the `v` axis, increasing when
/// `orientation` is `+1` and decreasing when it is `-1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub start: f64,
    pub end: f64,
    pub target: usize,
    pub orientation: i8,
}

/// A shuffle of `M` given by cut points, a permutation of the strips and a
/// per-strip orientation.
#[derive(Debug, Clone, PartialEq)]
pub struct ShuffleSpec {
    cuts: Vec<f64>,
    permutation: Vec<usize>,
    orientation: Vec<i8>,
    // v-interval start of each piece, derived
    v_start: Vec<f64>,
}

impl ShuffleSpec {
    /// `cuts` are `0 = t0 < t1 < ... < tn = 1`; `permutation[i]` is the
    /// 1-based slot of piece `i`.
    pub fn new(cuts: Vec<f64>, permutation: Vec<usize>, orientation: Vec<i8>) -> Result<Self> {
        let n = permutation.len();
        if n == 0 || cuts.len() != n + 1 || orientation.len() != n {
            return Err(Error::InvalidSpec(format!(
                "shuffle needs n+1 cuts, n targets, n orientations (got {}, {}, {})",
                cuts.len(),
                n,
                orientation.len()
            )));
        }
        if (cuts[0]).abs() > 1e-12 || (cuts[n] - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidSpec(
                "shuffle cuts must start at 0 and end at 1".into(),
            ));
        }
        if cuts.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidSpec(
                "shuffle cuts must be strictly increasing".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &t in &permutation {
            if t == 0 || t > n || seen[t - 1] {
                return Err(Error::InvalidSpec(format!(
                    "shuffle targets {permutation:?} are not a permutation of 1..={n}"
                )));
            }
            seen[t - 1] = true;
        }
        if orientation.iter().any(|&o| o != 1 && o != -1) {
            return Err(Error::InvalidSpec("orientation must be +1 or -1".into()));
        }
        let mut cuts = cuts;
        cuts[0] = 0.0;
        cuts[n] = 1.0;
        let lengths: Vec<f64> = cuts.windows(2).map(|w| w[1] - w[0]).collect();
        // slot k holds the piece whose target is k
        let mut by_slot = vec![0usize; n];
        for (i, &t) in permutation.iter().enumerate() {
            by_slot[t - 1] = i;
        }
        let mut v_start = vec![0.0; n];
        let mut acc = 0.0;
        for &i in &by_slot {
            v_start[i] = acc;
            acc += lengths[i];
        }
        Ok(Self {
            cuts,
            permutation,
            orientation,
            v_start,
        })
    }

    pub fn from_pieces(pieces: Vec<Piece>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidSpec("shuffle has no pieces".into()));
        }
        let mut cuts = vec![pieces[0].start];
        for w in pieces.windows(2) {
            if (w[0].end - w[1].start).abs() > 1e-12 {
                return Err(Error::InvalidSpec(
                    "shuffle pieces must be contiguous".into(),
                ));
            }
        }
        cuts.extend(pieces.iter().map(|p| p.end));
        let permutation = pieces.iter().map(|p| p.target).collect();
        let orientation = pieces.iter().map(|p| p.orientation).collect();
        Self::new(cuts, permutation, orientation)
    }

    /// Parses the line format `t_start,t_end,target_index,orientation`.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pieces = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            let bad = || Error::Parse(format!("shuffle line {}: {line:?}", lineno + 1));
            if fields.len() != 4 {
                return Err(bad());
            }
            pieces.push(Piece {
                start: fields[0].parse().map_err(|_| bad())?,
                end: fields[1].parse().map_err(|_| bad())?,
                target: fields[2].parse().map_err(|_| bad())?,
                orientation: fields[3].parse().map_err(|_| bad())?,
            });
        }
        Self::from_pieces(pieces)
    }

    pub fn len(&self) -> usize {
        self.permutation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutation.is_empty()
    }

    pub fn cuts(&self) -> &[f64] {
        &self.cuts
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn orientation(&self) -> &[i8] {
        &self.orientation
    }

    /// Maps a `u` coordinate in piece `i` onto the support.
    fn image(&self, i: usize, u: f64) -> f64 {
        let (s, e) = (self.cuts[i], self.cuts[i + 1]);
        let p = self.v_start[i];
        if self.orientation[i] > 0 {
            p + (u - s)
        } else {
            p + (e - u)
        }
    }

    pub fn eval(&self, pt: UnitPoint) -> f64 {
        let (u, v) = (pt.u(), pt.v());
        let mut total = 0.0;
        for i in 0..self.len() {
            let (s, e) = (self.cuts[i], self.cuts[i + 1]);
            if u <= s {
                break;
            }
            let p = self.v_start[i];
            let q = p + (e - s);
            let hi = e.min(u);
            let len = if self.orientation[i] > 0 {
                hi.min(v - p + s) - s
            } else {
                hi - s.max(q - v + s)
            };
            total += len.max(0.0);
        }
        total
    }

    /// Draws `count` points from the shuffle's singular distribution.
    pub fn sample(&self, count: usize, seed: u64) -> Result<Vec<UnitPoint>> {
        if count == 0 {
            return Err(Error::InvalidSpec("sample count must be at least 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok((0..count)
            .map(|_| {
                let u: f64 = rng.gen();
                let i = self.cuts[1..]
                    .partition_point(|&c| c <= u)
                    .min(self.len() - 1);
                UnitPoint::clamped(u, self.image(i, u))
            })
            .collect())
    }
}

impl BivariateEvaluator for ShuffleSpec {
    fn eval(&self, p: UnitPoint) -> f64 {
        ShuffleSpec::eval(self, p)
    }

    fn label(&self) -> String {
        format!("shuffle[{}]", self.len())
    }
}

/// Samples a shuffle of `M`.
pub fn sample_shuffle(spec: &ShuffleSpec, count: usize, seed: u64) -> Result<Vec<UnitPoint>> {
    spec.sample(count, seed)
}
