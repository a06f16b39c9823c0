//! C entry points of `libcrand`.
//!
//! Declarations live in `include/crand.h`. Every generator entry point
//! returns a [`Status`] code and touches nothing but the caller's buffers, so
//! all functions are reentrant. Sharing one seed array between concurrent
//! calls is a caller error and is not detected.
//!
//! The seed array is the generator's full internal state
//! ([`crand_state_words`] words). It is read on entry and overwritten with
//! the successor state on success, so consecutive calls continue one stream.

#![deny(warnings)]

use std::slice;

use crand_core::{GeneratorKind, GeneratorState};

mod smoke;

pub use smoke::{avg_value, change_var, uint64_var};

/// Status codes returned by the generator entry points.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    BadKind = 1,
    BadSeed = 2,
    NullArgument = 3,
}

/// Every symbol `libcrand` exports, in header order.
pub const EXPORTED_SYMBOLS: [&str; 9] = [
    "crand_kind_count",
    "crand_seed_words",
    "crand_state_words",
    "crand_seed_init",
    "crand_fill",
    "crand_fill_unit",
    "uint64_var",
    "change_var",
    "avg_value",
];

/// Validates the arguments shared by the fill entry points and restores the
/// state. Nothing is written on failure.
///
/// # Safety
///
/// `seed` must be null or valid for `seed_len` reads.
unsafe fn load_state(
    kind: u32,
    seed: *const u64,
    seed_len: usize,
    out_is_null: bool,
    n: usize,
) -> Result<GeneratorState, Status> {
    let kind = GeneratorKind::from_id(kind).ok_or(Status::BadKind)?;
    if seed.is_null() || (n > 0 && out_is_null) {
        return Err(Status::NullArgument);
    }
    let words = slice::from_raw_parts(seed, seed_len);
    GeneratorState::from_words(kind, words).map_err(|_| Status::BadSeed)
}

/// Number of generator kinds; valid ids are `0..crand_kind_count()`.
#[no_mangle]
pub extern "C" fn crand_kind_count() -> u32 {
    GeneratorKind::ALL.len() as u32
}

/// User-facing seed words for `kind` (the length `crand_seed_init` takes),
/// or 0 for an unknown id.
#[no_mangle]
pub extern "C" fn crand_seed_words(kind: u32) -> usize {
    GeneratorKind::from_id(kind).map_or(0, GeneratorKind::seed_words)
}

/// Internal state words for `kind` (the seed array length of the fill
/// functions), or 0 for an unknown id.
#[no_mangle]
pub extern "C" fn crand_state_words(kind: u32) -> usize {
    GeneratorKind::from_id(kind).map_or(0, GeneratorKind::state_words)
}

/// Builds the internal state of `kind` from `seed_len` user seed words.
///
/// # Safety
///
/// `seed` must be valid for `seed_len` reads and `state` for `state_len`
/// writes; the two may not overlap.
#[no_mangle]
pub unsafe extern "C" fn crand_seed_init(
    kind: u32,
    seed: *const u64,
    seed_len: usize,
    state: *mut u64,
    state_len: usize,
) -> i32 {
    let Some(kind) = GeneratorKind::from_id(kind) else {
        return Status::BadKind as i32;
    };
    if seed.is_null() || state.is_null() {
        return Status::NullArgument as i32;
    }
    if state_len != kind.state_words() {
        return Status::BadSeed as i32;
    }
    let words = slice::from_raw_parts(seed, seed_len);
    match GeneratorState::new(kind, words) {
        Ok(g) => {
            g.write_words(slice::from_raw_parts_mut(state, state_len));
            Status::Ok as i32
        }
        Err(_) => Status::BadSeed as i32,
    }
}

/// Writes `n` raw outputs to `out` (32-bit outputs zero-extended) and
/// advances `seed` in place.
///
/// # Safety
///
/// `seed` must be valid for `seed_len` reads and writes; `out` must be valid
/// for `n` writes unless `n == 0`. The buffers may not overlap.
#[no_mangle]
pub unsafe extern "C" fn crand_fill(
    kind: u32,
    seed: *mut u64,
    seed_len: usize,
    out: *mut u64,
    n: usize,
) -> i32 {
    let mut state = match load_state(kind, seed, seed_len, out.is_null(), n) {
        Ok(s) => s,
        Err(status) => return status as i32,
    };
    if n > 0 {
        state.fill_into(slice::from_raw_parts_mut(out, n));
    }
    state.write_words(slice::from_raw_parts_mut(seed, seed_len));
    Status::Ok as i32
}

/// Like [`crand_fill`], but each output is normalized into `[0, 1)`.
///
/// # Safety
///
/// Same contract as [`crand_fill`].
#[no_mangle]
pub unsafe extern "C" fn crand_fill_unit(
    kind: u32,
    seed: *mut u64,
    seed_len: usize,
    out: *mut f64,
    n: usize,
) -> i32 {
    let mut state = match load_state(kind, seed, seed_len, out.is_null(), n) {
        Ok(s) => s,
        Err(status) => return status as i32,
    };
    if n > 0 {
        state.fill_unit_into(slice::from_raw_parts_mut(out, n));
    }
    state.write_words(slice::from_raw_parts_mut(seed, seed_len));
    Status::Ok as i32
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn known_answer_through_the_abi() {
        let mut seed = [1u64];
        let mut out = [0u64; 1];
        let status = unsafe { crand_fill(1, seed.as_mut_ptr(), 1, out.as_mut_ptr(), 1) };
        assert_eq!(status, Status::Ok as i32);
        assert_eq!(out, [0x4082_2041]);
        assert_eq!(seed, [0x4082_2041]);
    }

    #[test]
    fn error_paths_leave_buffers_alone() {
        let sentinel = 0xDEAD_BEEF_u64;
        let mut out = [sentinel; 4];

        let mut seed = [0u64];
        let s = unsafe { crand_fill(1, seed.as_mut_ptr(), 1, out.as_mut_ptr(), 4) };
        assert_eq!(s, Status::BadSeed as i32);

        let mut seed = [1u64];
        let s = unsafe { crand_fill(255, seed.as_mut_ptr(), 1, out.as_mut_ptr(), 4) };
        assert_eq!(s, Status::BadKind as i32);

        let s = unsafe { crand_fill(1, seed.as_mut_ptr(), 2, out.as_mut_ptr(), 4) };
        assert_eq!(s, Status::BadSeed as i32);

        let s = unsafe { crand_fill(1, ptr::null_mut(), 1, out.as_mut_ptr(), 4) };
        assert_eq!(s, Status::NullArgument as i32);

        let s = unsafe { crand_fill(1, seed.as_mut_ptr(), 1, ptr::null_mut(), 4) };
        assert_eq!(s, Status::NullArgument as i32);

        assert_eq!(out, [sentinel; 4]);
        assert_eq!(seed, [1]);
    }

    #[test]
    fn zero_length_fill_accepts_null_out() {
        let mut seed = [7u64];
        let s = unsafe { crand_fill(1, seed.as_mut_ptr(), 1, ptr::null_mut(), 0) };
        assert_eq!(s, Status::Ok as i32);
        assert_eq!(seed, [7]);
    }

    #[test]
    fn seed_init_expands_user_words() {
        let mut state = [0u64; 2];
        let s = unsafe { crand_seed_init(4, [42u64, 54].as_ptr(), 2, state.as_mut_ptr(), 2) };
        assert_eq!(s, Status::Ok as i32);
        let mut out = [0u64; 3];
        unsafe { crand_fill(4, state.as_mut_ptr(), 2, out.as_mut_ptr(), 3) };
        assert_eq!(out, [0xA15C_02B7, 0x7B47_F409, 0xBA1D_3330]);

        let s = unsafe { crand_seed_init(3, [233u64].as_ptr(), 1, state.as_mut_ptr(), 2) };
        assert_eq!(s, Status::BadSeed as i32);
    }

    #[test]
    fn word_counts() {
        assert_eq!(crand_kind_count(), 8);
        assert_eq!(crand_seed_words(3), 2);
        assert_eq!(crand_state_words(7), 313);
        assert_eq!(crand_seed_words(8), 0);
        assert_eq!(crand_state_words(8), 0);
    }
}
