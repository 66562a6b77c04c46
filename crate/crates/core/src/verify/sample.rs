use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat, Rational};

/// Deterministic stream of nonzero rationals `p/q`, `|p| ≤ 20`, `1 ≤ q ≤ 9`.
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn nonzero(&mut self) -> Rational {
        let mut p = 0;
        while p == 0 {
            p = self.rng.gen_range(-20i64..=20);
        }
        rat(p, self.rng.gen_range(1i64..=9))
    }

    /// A point whose coordinates in `zeros` vanish and all others are
    /// nonzero.
    pub fn point(&mut self, nvars: usize, zeros: &[usize]) -> Vec<Rational> {
        (0..nvars)
            .map(|i| {
                if zeros.contains(&i) {
                    Rational::from_integer(0.into())
                } else {
                    self.nonzero()
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn deterministic_and_nonzero() {
        let a: Vec<_> = (0..5).map({
            let mut s = RationalSampler::new(7);
            move |_| s.nonzero()
        }).collect();
        let mut s = RationalSampler::new(7);
        let b: Vec<_> = (0..5).map(|_| s.nonzero()).collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|q| !q.is_zero()));
        let p = RationalSampler::new(1).point(3, &[1]);
        assert!(p[1].is_zero() && !p[0].is_zero() && !p[2].is_zero());
    }
}
