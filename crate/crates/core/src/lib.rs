//! Pseudorandom generators with a flat `u64` state representation.
//!
//! Every generator exposes its whole internal state as a slice of 64-bit
//! words, so the same state can be carried across a C boundary, written to a
//! file, or handed back to [`GeneratorState::from_words`] to continue the
//! sequence exactly where it stopped.
//!
//! ```
//! use crand_core::{GeneratorKind, GeneratorState};
//!
//! let mut state = GeneratorState::new(GeneratorKind::Xorshift64, &[1]).unwrap();
//! assert_eq!(state.next_word().value(), 0x4082_2041);
//! ```

pub mod analysis;
mod error;
pub mod generators;
mod kind;
mod normalize;
mod seed;
mod state;

pub use error::Error;
pub use kind::{GeneratorKind, OutputWidth};
pub use normalize::{normalize, normalize_value, OutputWord, UnitSample};
pub use seed::seed_expand;
pub use state::{required_seed_words, GeneratorState};
