use crate::GeneratorKind;

/// Errors raised while constructing or advancing generator state.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{kind} expects {expected} seed word(s), got {got}")]
    WrongSeedCount {
        kind: GeneratorKind,
        expected: usize,
        got: usize,
    },
    #[error("{kind} state is {expected} word(s), got {got}")]
    WrongStateLength {
        kind: GeneratorKind,
        expected: usize,
        got: usize,
    },
    #[error("degenerate seed: {kind} cannot run from an all-zero state")]
    DegenerateSeed { kind: GeneratorKind },
    #[error("invalid {kind} state: {reason}")]
    InvalidState {
        kind: GeneratorKind,
        reason: &'static str,
    },
    #[error("unknown generator `{0}`")]
    UnknownKind(String),
    #[error("cannot allocate {0} output words")]
    AllocationFailure(usize),
}
