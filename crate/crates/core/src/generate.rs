//! Seeded random quotient instances.
//!
//! `I` gets a few random square-free generators; `J` is built from
//! multiples of `I`'s minimal generators of degree at least `d + 1`, so every
//! generated pair is valid and satisfies the standing degree hypothesis.

use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ideal::{minimalize, validate_pair, QuotientInstance};
use crate::monomial::SquareFreeMonomial;

/// Ranges are inclusive `[min, max]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorParams {
    pub n: usize,
    pub gens_i: [usize; 2],
    pub degree_i: [usize; 2],
    pub gens_j: [usize; 2],
    /// Variables added to an `I` generator to form a `J` generator.
    pub extra_j: [usize; 2],
    pub seed: u64,
}

impl GeneratorParams {
    /// Defaults sized for exhaustive checks at small `n`.
    pub fn desk(n: usize, seed: u64) -> Self {
        GeneratorParams {
            n,
            gens_i: [1, 3],
            degree_i: [1, n.div_ceil(2).max(1)],
            gens_j: [0, n.min(5)],
            extra_j: [1, 3],
            seed,
        }
    }

    /// Single generator `I = (f)`, the setting of the principal-ideal certificate.
    pub fn principal(n: usize, seed: u64) -> Self {
        GeneratorParams {
            gens_i: [1, 1],
            degree_i: [1, (n / 2).max(1)],
            gens_j: [1, 2 * n],
            extra_j: [1, 3],
            ..GeneratorParams::desk(n, seed)
        }
    }

    fn rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

fn pick(rng: &mut impl Rng, range: [usize; 2]) -> usize {
    let (lo, hi) = (range[0].min(range[1]), range[0].max(range[1]));
    rng.gen_range(lo..=hi)
}

fn random_support(rng: &mut impl Rng, n: usize, within: u32, size: usize) -> u32 {
    let free: Vec<usize> = (0..n).filter(|j| within >> j & 1 == 0).collect();
    let size = size.min(free.len());
    sample(rng, free.len(), size)
        .into_iter()
        .fold(0u32, |acc, k| acc | 1 << free[k])
}

/// The `index`-th instance of the stream defined by `params`.
///
/// Each index draws from its own ChaCha stream, so instances do not depend
/// on how many were generated before them.
pub fn generate_instance(params: &GeneratorParams, index: u64) -> QuotientInstance {
    let n = params.n;
    let mut rng = params.rng(index);
    let count_i = pick(&mut rng, params.gens_i).max(1);
    let gens_i: Vec<SquareFreeMonomial> = (0..count_i)
        .map(|_| {
            let deg = pick(&mut rng, params.degree_i).clamp(1, n);
            SquareFreeMonomial::from_bits_unchecked(n, random_support(&mut rng, n, 0, deg))
        })
        .collect();
    let ideal_i = minimalize(n, &gens_i).expect("generated supports are in range");
    let minimal = ideal_i.generators();
    let d = minimal.iter().map(|g| g.degree()).min().unwrap_or(1);

    let count_j = pick(&mut rng, params.gens_j);
    let mut gens_j = Vec::with_capacity(count_j);
    for _ in 0..count_j {
        let g = minimal[rng.gen_range(0..minimal.len())];
        let room = n - g.degree();
        let needed = (d + 1).saturating_sub(g.degree());
        if needed > room {
            continue;
        }
        let extra = pick(&mut rng, params.extra_j).clamp(needed, room);
        let bits = g.bits() | random_support(&mut rng, n, g.bits(), extra);
        gens_j.push(SquareFreeMonomial::from_bits_unchecked(n, bits));
    }
    validate_pair(n, ideal_i.generators(), &gens_j).expect("generator keeps J ⊊ I")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_instances_satisfy_hypothesis() {
        for n in 1..=7 {
            let params = GeneratorParams::desk(n, 11);
            for k in 0..200 {
                let inst = generate_instance(&params, k);
                assert_eq!(inst.n(), n);
                assert!(inst.hypothesis_flag(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn streams_are_reproducible() {
        let params = GeneratorParams::desk(6, 7);
        let a: Vec<_> = (0..20).map(|k| generate_instance(&params, k)).collect();
        let b: Vec<_> = (0..20).rev().map(|k| generate_instance(&params, k)).collect();
        assert!(a.iter().eq(b.iter().rev()));
        let other = GeneratorParams::desk(6, 8);
        assert!((0..20).any(|k| generate_instance(&other, k) != a[k as usize]));
    }

    #[test]
    fn principal_params_give_one_generator() {
        let params = GeneratorParams::principal(5, 3);
        for k in 0..50 {
            assert_eq!(generate_instance(&params, k).ideal_i().generators().len(), 1);
        }
    }
}
