//! One module per algorithm.
//!
//! Each generator stores its state in fixed-width integers and converts to
//! and from the flat `u64` word layout used at every external boundary.
//! Callers normally go through [`crate::GeneratorState`], which checks slice
//! lengths before handing them to [`Generator::from_seed`] or
//! [`Generator::from_state`].

pub mod kiss;
pub mod mt19937_64;
pub mod pcg32;
pub mod splitmix64;
pub mod xorshift128;
pub mod xorshift128plus;
pub mod xorshift32;
pub mod xorshift64;

pub use kiss::Kiss;
pub use mt19937_64::Mt19937_64;
pub use pcg32::Pcg32;
pub use splitmix64::SplitMix64;
pub use xorshift128::Xorshift128;
pub use xorshift128plus::Xorshift128Plus;
pub use xorshift32::Xorshift32;
pub use xorshift64::Xorshift64;

use crate::{Error, GeneratorKind};

pub trait Generator: Clone + std::fmt::Debug {
    const KIND: GeneratorKind;

    /// Initializes from exactly `KIND.seed_words()` user words.
    fn from_seed(seed: &[u64]) -> Result<Self, Error>;

    /// Restores from exactly `KIND.state_words()` words.
    fn from_state(words: &[u64]) -> Result<Self, Error>;

    /// Writes the state into exactly `KIND.state_words()` words.
    fn write_state(&self, out: &mut [u64]);

    /// Advances one step. 32-bit generators return the value zero-extended.
    fn next_word(&mut self) -> u64;

    #[inline]
    fn fill(&mut self, out: &mut [u64]) {
        for slot in out {
            *slot = self.next_word();
        }
    }
}

#[inline]
pub(crate) fn low32(word: u64) -> u32 {
    word as u32
}
