//! Random generation of maximum-3 compositions by unfair coin tosses.
//!
//! Parts are drawn left to right: part 1 with probability `lambda`,
//! otherwise part 2, upgraded to 3 with probability `1 - lambda` unless an
//! earlier pair of 1s at positions `i` and `k - i` forces `x_k <= 2`. The
//! resulting law factorises over the parts, so prefix probabilities are
//! exact products ([`exact_probability`]); outputs always satisfy the
//! semigroup inequalities. Sampling is not asymptotically uniform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{NsgError, Result};
use crate::kunz::Composition;

/// Name of the pseudo-random generator backing [`Sampler`], recorded in
/// output metadata so runs are reproducible across implementations.
pub const RNG_ALGORITHM: &str = "chacha12";

/// Sampling target: a fixed multiplicity (exactly `m - 1` parts) or a
/// fixed genus (draw until the running sum reaches it, restart on
/// overshoot).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Multiplicity(u32),
    Genus(u64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig {
    pub lambda: f64,
    pub target: Target,
    pub seed: u64,
}

/// Streaming sampler with a seeded ChaCha12 generator.
pub struct Sampler {
    lambda: f64,
    target: Target,
    rng: ChaCha12Rng,
    ones: Vec<u64>,
    blocked: Vec<u64>,
}

const MAX_RESTARTS: u32 = 1_000_000;

impl Sampler {
    pub fn new(cfg: &SamplerConfig) -> Self {
        assert!(
            cfg.lambda > 0.0 && cfg.lambda < 1.0,
            "lambda must lie strictly between 0 and 1"
        );
        let capacity = match cfg.target {
            Target::Multiplicity(m) => m as usize,
            Target::Genus(g) => g as usize + 2,
        };
        let words = capacity / 64 + 2;
        Sampler {
            lambda: cfg.lambda,
            target: cfg.target,
            rng: ChaCha12Rng::seed_from_u64(cfg.seed),
            ones: vec![0; words],
            blocked: vec![0; words],
        }
    }

    pub fn draw(&mut self) -> Composition {
        match self.target {
            Target::Multiplicity(m) => self.draw_parts((m.max(1) - 1) as usize),
            Target::Genus(g) => {
                for _ in 0..MAX_RESTARTS {
                    if let Some(c) = self.try_draw_genus(g) {
                        return c;
                    }
                }
                // the overshoot probability is about (1 - lambda)/2 per
                // attempt, so this is unreachable in practice
                panic!("genus-mode sampling exceeded {MAX_RESTARTS} restarts");
            }
        }
    }

    fn reset_masks(&mut self) {
        self.ones.fill(0);
        self.blocked.fill(0);
    }

    fn draw_parts(&mut self, len: usize) -> Composition {
        self.reset_masks();
        let mut parts = Vec::with_capacity(len);
        for k in 1..=len {
            parts.push(self.draw_part(k));
        }
        Composition::new(parts).expect("parts are 1..=3")
    }

    fn try_draw_genus(&mut self, g: u64) -> Option<Composition> {
        self.reset_masks();
        let mut parts = Vec::new();
        let mut sum = 0u64;
        while sum < g {
            let k = parts.len() + 1;
            let p = self.draw_part(k);
            parts.push(p);
            sum += p as u64;
        }
        (sum == g).then(|| Composition::new(parts).expect("parts are 1..=3"))
    }

    fn draw_part(&mut self, k: usize) -> u32 {
        if self.rng.random::<f64>() < self.lambda {
            self.set_one(k);
            return 1;
        }
        if self.is_blocked(k) || self.rng.random::<f64>() < self.lambda {
            return 2;
        }
        3
    }

    fn is_blocked(&self, k: usize) -> bool {
        self.blocked[k / 64] >> (k % 64) & 1 == 1
    }

    /// Record a part 1 at position `k`: all sums `k + i` over the existing
    /// 1-positions (including `k` itself) become blocked for part 3.
    fn set_one(&mut self, k: usize) {
        self.ones[k / 64] |= 1 << (k % 64);
        let word_shift = k / 64;
        let bit_shift = k % 64;
        let n = self.blocked.len();
        for i in (0..self.ones.len()).rev() {
            let w = self.ones[i];
            if w == 0 {
                continue;
            }
            let lo = i + word_shift;
            if lo < n {
                self.blocked[lo] |= w << bit_shift;
            }
            if bit_shift > 0 && lo + 1 < n {
                self.blocked[lo + 1] |= w >> (64 - bit_shift);
            }
        }
    }
}

/// One composition from a fresh sampler; use [`Sampler`] directly for
/// repeated draws from a single stream.
pub fn sample(cfg: &SamplerConfig) -> Composition {
    Sampler::new(cfg).draw()
}

/// Exact probability that a sampled composition starts with `x` (equals
/// the probability of `x` itself at matching length). Zero when a pair of
/// 1s at `i, j` with `i + j <= len` meets a part `x_{i+j} = 3`; otherwise
/// the product of the per-part factors.
pub fn exact_probability(x: &Composition, lambda: f64) -> Result<f64> {
    assert!(lambda > 0.0 && lambda < 1.0);
    let parts = x.parts();
    if let Some(&bad) = parts.iter().find(|&&p| p == 0 || p > 3) {
        return Err(NsgError::PartOutOfRange(bad));
    }
    let mut prob = 1.0;
    for (k0, &p) in parts.iter().enumerate() {
        let k = k0 + 1;
        let blocked = (1..k).any(|i| parts[i - 1] == 1 && parts[k - i - 1] == 1);
        prob *= match p {
            1 => lambda,
            2 => {
                if blocked {
                    1.0 - lambda
                } else {
                    lambda * (1.0 - lambda)
                }
            }
            _ => {
                if blocked {
                    return Ok(0.0);
                }
                (1.0 - lambda) * (1.0 - lambda)
            }
        };
    }
    Ok(prob)
}

/// Expected value of `sum_{x_i = 3} i^h` in the infinite-multiplicity
/// limit: `(1-lambda)^2 sum_n (1-lambda^2)^n ((2n+1)^h + (1-lambda)(2n+2)^h)`,
/// summed until the geometric tail bound drops below 1e-12.
pub fn mu_expectation(h: u32, lambda: f64) -> f64 {
    assert!(h <= 4, "moments beyond h = 4 are not needed and not tuned");
    assert!(lambda > 0.0 && lambda < 1.0);
    let r = 1.0 - lambda * lambda;
    let mut acc = 0.0f64;
    for n in 0..u64::MAX {
        let odd = ((2 * n + 1) as f64).powi(h as i32);
        let even = ((2 * n + 2) as f64).powi(h as i32);
        let term = r.powi(n as i32) * (odd + (1.0 - lambda) * even);
        acc += term;
        // consecutive terms shrink by at least r ((2n+3)/(2n+1))^h; once
        // that bound is below 1, the remainder is a geometric tail
        let ratio = r * ((2 * n + 3) as f64 / (2 * n + 1) as f64).powi(h as i32);
        if ratio < 1.0 && term * ratio / (1.0 - ratio) < 1e-16 {
            break;
        }
    }
    (1.0 - lambda) * (1.0 - lambda) * acc
}

/// Closed form for the zeroth moment, `(2 - lambda)(1 - lambda)^2 / lambda^2`.
pub fn mu0_closed_form(lambda: f64) -> f64 {
    (2.0 - lambda) * (1.0 - lambda) * (1.0 - lambda) / (lambda * lambda)
}
