//! Fixed inputs shared by the benchmarks.

use zonobez::rng::SplitMix64;
use zonobez::{Mat3xM, Zonotope3};

/// Three zonotopes with `m` generators each, from a fixed seed.
pub fn zonotope_triple(m: usize, seed: u64) -> [Zonotope3; 3] {
    let mut rng = SplitMix64::new(seed);
    [(); 3].map(|_| Zonotope3::new(rng.vectors(m, 16)))
}

pub fn random_matrix(n: usize, seed: u64) -> Mat3xM {
    Mat3xM::new(SplitMix64::new(seed).vectors(n, 16))
}
