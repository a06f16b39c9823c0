use crate::OutputWidth;

/// One raw generator output together with its width.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OutputWord {
    value: u64,
    width: OutputWidth,
}

impl OutputWord {
    /// Returns `None` if `value` does not fit in `width`.
    pub fn new(value: u64, width: OutputWidth) -> Option<Self> {
        (value <= width.max_value()).then_some(Self { value, width })
    }

    #[inline]
    pub(crate) fn from_raw(value: u64, width: OutputWidth) -> Self {
        debug_assert!(value <= width.max_value());
        Self { value, width }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn width(self) -> OutputWidth {
        self.width
    }
}

/// A draw from the half-open unit interval `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct UnitSample(f64);

impl UnitSample {
    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<UnitSample> for f64 {
    fn from(s: UnitSample) -> f64 {
        s.0
    }
}

const TWO_POW_NEG_53: f64 = 1.0 / (1u64 << 53) as f64;
const TWO_POW_NEG_32: f64 = 1.0 / (1u64 << 32) as f64;

/// Maps a raw output into `[0, 1)`.
///
/// 64-bit outputs keep their top 53 bits and are scaled by 2^-53; 32-bit
/// outputs are scaled by 2^-32. Both products are exact in binary64, so the
/// map is monotone and the largest input stays strictly below one.
pub fn normalize(word: OutputWord) -> UnitSample {
    UnitSample(normalize_value(word.value, word.width))
}

#[inline]
pub fn normalize_value(value: u64, width: OutputWidth) -> f64 {
    match width {
        OutputWidth::Bits64 => (value >> 11) as f64 * TWO_POW_NEG_53,
        OutputWidth::Bits32 => (value as u32) as f64 * TWO_POW_NEG_32,
    }
}
