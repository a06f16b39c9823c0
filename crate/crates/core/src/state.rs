use crate::generators::{
    Generator, Kiss, Mt19937_64, Pcg32, SplitMix64, Xorshift128, Xorshift128Plus, Xorshift32,
    Xorshift64,
};
use crate::{normalize_value, Error, GeneratorKind, OutputWord, UnitSample};

/// Number of user-facing seed words `kind` needs (not its internal size).
pub fn required_seed_words(kind: GeneratorKind) -> usize {
    kind.seed_words()
}

/// The state of one generator of any supported kind.
///
/// A state has a single owner. Cloning it forks the sequence: both copies
/// produce identical output from then on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorState {
    Xorshift32(Xorshift32),
    Xorshift64(Xorshift64),
    Xorshift128(Xorshift128),
    Xorshift128Plus(Xorshift128Plus),
    Pcg32(Pcg32),
    Kiss(Kiss),
    SplitMix64(SplitMix64),
    Mt19937_64(Box<Mt19937_64>),
}

macro_rules! dispatch {
    ($state:expr, $g:ident => $body:expr) => {
        match $state {
            GeneratorState::Xorshift32($g) => $body,
            GeneratorState::Xorshift64($g) => $body,
            GeneratorState::Xorshift128($g) => $body,
            GeneratorState::Xorshift128Plus($g) => $body,
            GeneratorState::Pcg32($g) => $body,
            GeneratorState::Kiss($g) => $body,
            GeneratorState::SplitMix64($g) => $body,
            GeneratorState::Mt19937_64($g) => $body,
        }
    };
}

#[derive(Clone, Copy)]
enum Source {
    Seed,
    State,
}

fn build<G: Generator>(words: &[u64], source: Source) -> Result<G, Error> {
    match source {
        Source::Seed => G::from_seed(words),
        Source::State => G::from_state(words),
    }
}

impl GeneratorState {
    /// Initializes a generator from its user-facing seed words.
    ///
    /// xorshift-family kinds copy the words verbatim (32-bit kinds keep only
    /// the low half of each word). `pcg32` takes `[initstate, initseq]` and
    /// `mt19937_64` expands its single word into the full 312-word vector.
    pub fn new(kind: GeneratorKind, seed: &[u64]) -> Result<Self, Error> {
        let expected = kind.seed_words();
        if seed.len() != expected {
            return Err(Error::WrongSeedCount {
                kind,
                expected,
                got: seed.len(),
            });
        }
        Self::build(kind, seed, Source::Seed)
    }

    /// Restores a state previously produced by [`GeneratorState::words`].
    pub fn from_words(kind: GeneratorKind, words: &[u64]) -> Result<Self, Error> {
        let expected = kind.state_words();
        if words.len() != expected {
            return Err(Error::WrongStateLength {
                kind,
                expected,
                got: words.len(),
            });
        }
        Self::build(kind, words, Source::State)
    }

    fn build(kind: GeneratorKind, words: &[u64], source: Source) -> Result<Self, Error> {
        Ok(match kind {
            GeneratorKind::Xorshift32 => Self::Xorshift32(build(words, source)?),
            GeneratorKind::Xorshift64 => Self::Xorshift64(build(words, source)?),
            GeneratorKind::Xorshift128 => Self::Xorshift128(build(words, source)?),
            GeneratorKind::Xorshift128Plus => Self::Xorshift128Plus(build(words, source)?),
            GeneratorKind::Pcg32 => Self::Pcg32(build(words, source)?),
            GeneratorKind::Kiss => Self::Kiss(build(words, source)?),
            GeneratorKind::SplitMix64 => Self::SplitMix64(build(words, source)?),
            GeneratorKind::Mt19937_64 => Self::Mt19937_64(Box::new(build(words, source)?)),
        })
    }

    pub fn kind(&self) -> GeneratorKind {
        match self {
            Self::Xorshift32(_) => GeneratorKind::Xorshift32,
            Self::Xorshift64(_) => GeneratorKind::Xorshift64,
            Self::Xorshift128(_) => GeneratorKind::Xorshift128,
            Self::Xorshift128Plus(_) => GeneratorKind::Xorshift128Plus,
            Self::Pcg32(_) => GeneratorKind::Pcg32,
            Self::Kiss(_) => GeneratorKind::Kiss,
            Self::SplitMix64(_) => GeneratorKind::SplitMix64,
            Self::Mt19937_64(_) => GeneratorKind::Mt19937_64,
        }
    }

    /// The flat state, `kind().state_words()` long.
    pub fn words(&self) -> Vec<u64> {
        let mut out = vec![0; self.kind().state_words()];
        self.write_words(&mut out);
        out
    }

    /// # Panics
    ///
    /// If `out.len()` differs from `kind().state_words()`.
    pub fn write_words(&self, out: &mut [u64]) {
        assert_eq!(out.len(), self.kind().state_words(), "state buffer length");
        dispatch!(self, g => g.write_state(out))
    }

    #[inline]
    pub fn next_word(&mut self) -> OutputWord {
        let width = self.kind().output_width();
        let value = dispatch!(self, g => g.next_word());
        OutputWord::from_raw(value, width)
    }

    /// Pure form of [`GeneratorState::next_word`]: consumes the state and
    /// returns the output together with the successor.
    pub fn step(mut self) -> (OutputWord, Self) {
        let word = self.next_word();
        (word, self)
    }

    pub fn next_unit(&mut self) -> UnitSample {
        crate::normalize(self.next_word())
    }

    /// Writes `out.len()` successive outputs, zero-extended for 32-bit kinds.
    pub fn fill_into(&mut self, out: &mut [u64]) {
        dispatch!(self, g => g.fill(out))
    }

    pub fn fill(&mut self, n: usize) -> Result<Vec<u64>, Error> {
        let mut out = Vec::new();
        out.try_reserve_exact(n)
            .map_err(|_| Error::AllocationFailure(n))?;
        out.resize(n, 0);
        self.fill_into(&mut out);
        Ok(out)
    }

    /// Writes `out.len()` normalized draws in `[0, 1)`.
    pub fn fill_unit_into(&mut self, out: &mut [f64]) {
        let width = self.kind().output_width();
        dispatch!(self, g => {
            for slot in out.iter_mut() {
                *slot = normalize_value(g.next_word(), width);
            }
        })
    }

    pub fn fill_unit(&mut self, n: usize) -> Result<Vec<f64>, Error> {
        let mut out = Vec::new();
        out.try_reserve_exact(n)
            .map_err(|_| Error::AllocationFailure(n))?;
        out.resize(n, 0.0);
        self.fill_unit_into(&mut out);
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xorshift_seed_is_copied_verbatim() {
        let state = GeneratorState::new(GeneratorKind::Xorshift128Plus, &[233, 43]).unwrap();
        assert_eq!(state.words(), vec![233, 43]);
    }

    #[test]
    fn arity_is_checked() {
        assert_eq!(
            GeneratorState::new(GeneratorKind::Xorshift128Plus, &[233]),
            Err(Error::WrongSeedCount {
                kind: GeneratorKind::Xorshift128Plus,
                expected: 2,
                got: 1
            })
        );
        assert!(matches!(
            GeneratorState::from_words(GeneratorKind::Mt19937_64, &[1]),
            Err(Error::WrongStateLength { expected: 313, .. })
        ));
    }

    #[test]
    fn zero_seeds_are_rejected_for_xorshift_kinds() {
        for kind in GeneratorKind::ALL
            .into_iter()
            .filter(|k| k.is_xorshift_family())
        {
            let zeros = vec![0; kind.seed_words()];
            assert_eq!(
                GeneratorState::new(kind, &zeros),
                Err(Error::DegenerateSeed { kind })
            );
        }
        // Only the low half of a 32-bit kind's word is state.
        assert!(GeneratorState::new(GeneratorKind::Xorshift32, &[1 << 32]).is_err());
        assert!(GeneratorState::new(GeneratorKind::Kiss, &[1, 1, 0, 1]).is_err());
    }

    #[test]
    fn zero_seeds_are_fine_elsewhere() {
        for kind in [
            GeneratorKind::Pcg32,
            GeneratorKind::SplitMix64,
            GeneratorKind::Mt19937_64,
        ] {
            let zeros = vec![0; kind.seed_words()];
            assert!(GeneratorState::new(kind, &zeros).is_ok(), "{kind}");
        }
    }

    #[test]
    fn invalid_restored_states() {
        assert!(matches!(
            GeneratorState::from_words(GeneratorKind::Pcg32, &[1, 2]),
            Err(Error::InvalidState { .. })
        ));
        let mut mt = GeneratorState::new(GeneratorKind::Mt19937_64, &[1])
            .unwrap()
            .words();
        mt[312] = 313;
        assert!(matches!(
            GeneratorState::from_words(GeneratorKind::Mt19937_64, &mt),
            Err(Error::InvalidState { .. })
        ));
        assert_eq!(
            GeneratorState::from_words(GeneratorKind::Mt19937_64, &[0; 313]),
            Err(Error::DegenerateSeed {
                kind: GeneratorKind::Mt19937_64
            })
        );
    }

    #[test]
    fn fill_zero_is_identity() {
        let mut state = GeneratorState::new(GeneratorKind::Pcg32, &[42, 54]).unwrap();
        let before = state.clone();
        assert!(state.fill(0).unwrap().is_empty());
        assert_eq!(state, before);
    }

    #[test]
    fn huge_fill_reports_allocation_failure() {
        let mut state = GeneratorState::new(GeneratorKind::Xorshift64, &[1]).unwrap();
        assert_eq!(
            state.fill(usize::MAX),
            Err(Error::AllocationFailure(usize::MAX))
        );
    }

    #[test]
    fn step_matches_next_word() {
        let state = GeneratorState::new(GeneratorKind::Xorshift64, &[1]).unwrap();
        let (word, next) = state.clone().step();
        assert_eq!(word.value(), 0x4082_2041);
        assert_eq!(next.words(), vec![0x4082_2041]);
        // the input was not mutated
        assert_eq!(state.words(), vec![1]);
    }
}
