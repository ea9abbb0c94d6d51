//! Deterministic random-stream derivation.
//!
//! Every random draw in this crate comes from a ChaCha8 stream keyed by a
//! `(base seed, domain, index, salt)` tuple, so independent work items
//! (solver trials, benchmark problems, adapters) get independent streams
//! that do not depend on scheduling order. Re-running with the same seeds
//! reproduces every draw bit-for-bit.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream domain for solver restart trials.
pub const DOMAIN_TRIAL: u64 = 1;
/// Stream domain for random polynomial generation.
pub const DOMAIN_GENERATOR: u64 = 2;
/// Stream domain for benchmark problem seeds.
pub const DOMAIN_PROBLEM: u64 = 3;
/// Stream domain for benchmark reference-solver seeds.
pub const DOMAIN_SOLVER: u64 = 4;
/// Stream domain for benchmark adapter seeds.
pub const DOMAIN_ADAPTER: u64 = 5;

/// Builds the ChaCha8 stream keyed by `(base, domain, index, salt)`.
pub fn derive_rng(base: u64, domain: u64, index: u64, salt: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&base.to_le_bytes());
    key[8..16].copy_from_slice(&domain.to_le_bytes());
    key[16..24].copy_from_slice(&index.to_le_bytes());
    key[24..32].copy_from_slice(&salt.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Derives a single sub-seed from the tuple (first output of the stream).
pub fn derive_seed(base: u64, domain: u64, index: u64, salt: u64) -> u64 {
    use rand_chacha::rand_core::RngCore;
    derive_rng(base, domain, index, salt).next_u64()
}

/// FNV-1a hash of a name, used to salt adapter streams.
pub fn name_tag(name: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}
