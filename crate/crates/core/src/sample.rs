//! Uniform random forests, drawn as uniform random codes and decoded.
//!
//! The generator is ChaCha8 seeded with `rand_core`'s `seed_from_u64`.
//! Bounded integers come from [`uniform_below`] (rejection sampling on
//! `next_u64`) and shuffles from a descending Fisher–Yates pass, so a seed
//! fixes the output independently of any `rand` version.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::codec::{decode_code, ForestCode};
use crate::error::Result;
use crate::hypergraph::{RootedForest, VertexId};
use crate::shape::ForestShape;

pub type Seed = u64;

/// Uniform integer in `[0, bound)`. `bound` must be positive.
pub fn uniform_below(rng: &mut impl RngCore, bound: u64) -> u64 {
    assert!(bound > 0, "empty range");
    // 2^64 mod bound values at the top are rejected.
    let reject = (u64::MAX % bound + 1) % bound;
    loop {
        let x = rng.next_u64();
        if x <= u64::MAX - reject {
            return x % bound;
        }
    }
}

pub fn shuffle<T>(rng: &mut impl RngCore, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = uniform_below(rng, i as u64 + 1) as usize;
        items.swap(i, j);
    }
}

/// A seeded stream of uniform forests of one shape.
pub struct ForestSampler {
    shape: ForestShape,
    rng: ChaCha8Rng,
}

impl ForestSampler {
    pub fn new(shape: ForestShape, seed: Seed) -> Self {
        ForestSampler { shape, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn shape(&self) -> ForestShape {
        self.shape
    }

    /// Draws `R`, `r`, `P` and `N` independently and uniformly.
    ///
    /// `P` comes from chunking a uniform shuffle of the non-roots; every
    /// partition is hit by exactly `s!·((b−1)!)^s` shuffles, so it is uniform too.
    pub fn next_code(&mut self) -> ForestCode {
        let shape = self.shape;
        let n = shape.n();
        let mut labels: Vec<VertexId> = (1..=n).collect();
        shuffle(&mut self.rng, &mut labels);
        let (roots, rest) = labels.split_at(shape.root_count() as usize);
        let mut roots = roots.to_vec();
        roots.sort_unstable();

        let final_root = (shape.s() > 0)
            .then(|| roots[uniform_below(&mut self.rng, u64::from(shape.root_count())) as usize]);
        let blocks = if shape.s() == 0 {
            Vec::new()
        } else {
            rest.chunks((shape.b() - 1) as usize).map(<[VertexId]>::to_vec).collect()
        };
        let links = (0..shape.link_count())
            .map(|_| uniform_below(&mut self.rng, u64::from(n)) as VertexId + 1)
            .collect();
        ForestCode::new(shape, roots, final_root, blocks, links)
    }

    pub fn next_forest(&mut self) -> Result<RootedForest> {
        decode_code(&self.next_code())
    }
}

impl Iterator for ForestSampler {
    type Item = RootedForest;

    fn next(&mut self) -> Option<RootedForest> {
        Some(self.next_forest().expect("sampled codes are valid"))
    }
}

/// One uniform forest of `shape`, fixed by `seed`.
pub fn sample_forest(shape: ForestShape, seed: Seed) -> Result<RootedForest> {
    ForestSampler::new(shape, seed).next_forest()
}
