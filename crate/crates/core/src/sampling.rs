//! Seeded random sampling of integer points and Schwartz-Zippel bounds.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::linalg::{Rational, Subspace};

/// Sampling configuration shared by every randomized routine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub seed: u64,
    pub trials: u32,
    pub coeff_bound: u64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 8,
            coeff_bound: 1 << 20,
        }
    }
}

impl Config {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    /// Derived configuration for an independent sub-computation.
    pub fn fork(&self, salt: u64) -> Self {
        Self {
            seed: self
                .seed
                .wrapping_mul(0x9E37_79B9_7F4A_7C15)
                .wrapping_add(salt.wrapping_mul(0xBF58_476D_1CE4_E5B9))
                ^ salt,
            ..*self
        }
    }

    pub fn rng(&self) -> Sampler {
        Sampler::new(self.seed, self.coeff_bound)
    }

    /// `(degree / (2B + 1))^trials`, the probability that every trial lands on
    /// the zero set of a nonzero polynomial of the given degree.
    pub fn failure_bound(&self, degree: usize) -> Rational {
        failure_bound(degree, self.coeff_bound, self.trials)
    }
}

pub fn failure_bound(degree: usize, coeff_bound: u64, trials: u32) -> Rational {
    let per = Rational::new(
        BigInt::from(degree),
        BigInt::from(2u128 * coeff_bound as u128 + 1),
    );
    let mut acc = Rational::one();
    for _ in 0..trials {
        acc *= &per;
    }
    if acc > Rational::one() {
        Rational::one()
    } else {
        acc
    }
}

/// `2^-k` as a rational, for comparisons against failure bounds.
pub fn two_pow_neg(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << k)
}

/// Seeded source of uniform integers in `[-B, B]`.
pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    pub fn new(seed: u64, coeff_bound: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound: coeff_bound.min(i64::MAX as u64 / 2) as i64,
        }
    }

    pub fn coefficient(&mut self) -> Rational {
        Rational::from_integer(BigInt::from(self.rng.random_range(-self.bound..=self.bound)))
    }

    pub fn coefficients(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.coefficient()).collect()
    }

    /// Random integer combination of the canonical basis of `s`.
    pub fn point_in(&mut self, s: &Subspace) -> Vec<Rational> {
        let coeffs = self.coefficients(s.dim());
        s.combine(&coeffs)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }
}

/// True when every entry is zero.
pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_bound_is_tiny() {
        let cfg = Config::default();
        assert!(cfg.failure_bound(250) < two_pow_neg(40));
    }

    #[test]
    fn sampler_is_reproducible() {
        let mut a = Sampler::new(7, 100);
        let mut b = Sampler::new(7, 100);
        assert_eq!(a.coefficients(10), b.coefficients(10));
    }
}
