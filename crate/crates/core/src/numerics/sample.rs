use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::Rational;

const MAX_ABS: i64 = 50;
const RETRIES: usize = 10_000;

/// Deterministic source of sample points.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Nonzero rational `p/q` with `|p| <= 50`, `1 <= q <= 50`, rejected while `avoid` holds.
    pub fn rational(&mut self, avoid: impl Fn(&Rational) -> bool) -> Result<Rational> {
        sample_rational(&mut self.rng, avoid)
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

pub fn sample_rational<R: Rng>(rng: &mut R, avoid: impl Fn(&Rational) -> bool) -> Result<Rational> {
    for _ in 0..RETRIES {
        let mut p = rng.gen_range(-MAX_ABS..MAX_ABS);
        if p >= 0 {
            p += 1;
        }
        let q = rng.gen_range(1..=MAX_ABS);
        let v = Rational::new(BigInt::from(p), BigInt::from(q));
        if !avoid(&v) {
            return Ok(v);
        }
    }
    Err(Error::Exhaustion(RETRIES))
}
