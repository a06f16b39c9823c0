use crate::generators::splitmix64::{SplitMix64, GOLDEN_GAMMA};

/// Expands one seed into `count` words by successive SplitMix64 steps.
///
/// The result is never all zero: should every output be zero the expansion
/// restarts from `seed + gamma`.
pub fn seed_expand(seed: u64, count: usize) -> Vec<u64> {
    let mut start = seed;
    loop {
        let mut sm = SplitMix64::new(start);
        let words: Vec<u64> = (0..count).map(|_| sm.next_u64()).collect();
        if count == 0 || words.iter().any(|&w| w != 0) {
            return words;
        }
        start = start.wrapping_add(GOLDEN_GAMMA);
    }
}
