//! Deterministic per-check random substreams.
//!
//! Every check derives its own ChaCha stream from the run seed together
//! with its suite name, check id, and canonical parameter string. Adding,
//! removing, or reordering checks therefore never shifts the samples seen
//! by any other check, and running suites in parallel cannot introduce
//! nondeterminism.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// One step of the splitmix64 sequence; a small, well-known mixer with
/// full 64-bit avalanche, used here as a portable keyed fold (the standard
/// library hashers do not promise stability across releases).
fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Absorb a byte string into the fold state, length-prefixed so that
/// distinct (suite, check, params) triples can never collide by
/// concatenation.
fn absorb(state: &mut u64, bytes: &[u8]) {
    *state ^= bytes.len() as u64;
    splitmix(state);
    for chunk in bytes.chunks(8) {
        let mut word = [0u8; 8];
        word[..chunk.len()].copy_from_slice(chunk);
        *state ^= u64::from_le_bytes(word);
        splitmix(state);
    }
}

/// The random substream for one check, fully determined by the run seed
/// and the check's identity.
pub(crate) fn substream(seed: u64, suite: &str, check_id: &str, params: &str) -> ChaCha12Rng {
    let mut state = seed;
    splitmix(&mut state);
    absorb(&mut state, suite.as_bytes());
    absorb(&mut state, check_id.as_bytes());
    absorb(&mut state, params.as_bytes());
    let mut key = [0u8; 32];
    for word in 0..4 {
        let v = splitmix(&mut state);
        key[8 * word..8 * (word + 1)].copy_from_slice(&v.to_le_bytes());
    }
    ChaCha12Rng::from_seed(key)
}
