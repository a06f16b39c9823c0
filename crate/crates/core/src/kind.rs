use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Width of a single raw generator output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutputWidth {
    Bits32,
    Bits64,
}

impl OutputWidth {
    pub const fn bits(self) -> u32 {
        match self {
            OutputWidth::Bits32 => 32,
            OutputWidth::Bits64 => 64,
        }
    }

    /// Largest value an output of this width can take.
    pub const fn max_value(self) -> u64 {
        match self {
            OutputWidth::Bits32 => u32::MAX as u64,
            OutputWidth::Bits64 => u64::MAX,
        }
    }
}

/// The supported generator algorithms.
///
/// The discriminants are the stable ids published in the C header; never
/// reorder or reuse them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u32)]
pub enum GeneratorKind {
    Xorshift32 = 0,
    Xorshift64 = 1,
    Xorshift128 = 2,
    Xorshift128Plus = 3,
    Pcg32 = 4,
    Kiss = 5,
    SplitMix64 = 6,
    Mt19937_64 = 7,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 8] = [
        GeneratorKind::Xorshift32,
        GeneratorKind::Xorshift64,
        GeneratorKind::Xorshift128,
        GeneratorKind::Xorshift128Plus,
        GeneratorKind::Pcg32,
        GeneratorKind::Kiss,
        GeneratorKind::SplitMix64,
        GeneratorKind::Mt19937_64,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            GeneratorKind::Xorshift32 => "xorshift32",
            GeneratorKind::Xorshift64 => "xorshift64",
            GeneratorKind::Xorshift128 => "xorshift128",
            GeneratorKind::Xorshift128Plus => "xorshift128plus",
            GeneratorKind::Pcg32 => "pcg32",
            GeneratorKind::Kiss => "kiss",
            GeneratorKind::SplitMix64 => "splitmix64",
            GeneratorKind::Mt19937_64 => "mt19937_64",
        }
    }

    pub const fn id(self) -> u32 {
        self as u32
    }

    pub fn from_id(id: u32) -> Option<GeneratorKind> {
        GeneratorKind::ALL.get(id as usize).copied()
    }

    /// Number of user-facing seed words needed to initialize the generator.
    pub const fn seed_words(self) -> usize {
        match self {
            GeneratorKind::Xorshift32 | GeneratorKind::Xorshift64 => 1,
            GeneratorKind::Xorshift128 | GeneratorKind::Xorshift128Plus => 2,
            GeneratorKind::Pcg32 => 2,
            GeneratorKind::Kiss => 4,
            GeneratorKind::SplitMix64 | GeneratorKind::Mt19937_64 => 1,
        }
    }

    /// Number of words in the full internal state, as exchanged with
    /// [`crate::GeneratorState::words`].
    pub const fn state_words(self) -> usize {
        match self {
            GeneratorKind::Mt19937_64 => crate::generators::mt19937_64::STATE_WORDS,
            other => other.seed_words(),
        }
    }

    pub const fn output_width(self) -> OutputWidth {
        match self {
            GeneratorKind::Xorshift32
            | GeneratorKind::Xorshift128
            | GeneratorKind::Pcg32
            | GeneratorKind::Kiss => OutputWidth::Bits32,
            GeneratorKind::Xorshift64
            | GeneratorKind::Xorshift128Plus
            | GeneratorKind::SplitMix64
            | GeneratorKind::Mt19937_64 => OutputWidth::Bits64,
        }
    }

    pub const fn output_bits(self) -> u32 {
        self.output_width().bits()
    }

    /// True for the pure shift/xor recurrences, for which the all-zero state
    /// is a fixed point.
    pub const fn is_xorshift_family(self) -> bool {
        matches!(
            self,
            GeneratorKind::Xorshift32
                | GeneratorKind::Xorshift64
                | GeneratorKind::Xorshift128
                | GeneratorKind::Xorshift128Plus
        )
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_owned()))
    }
}
