#![allow(dead_code)]

use std::path::PathBuf;

use libloading::{Library, Symbol};

/// Path of the `libcrand` shared library cargo built next to this test.
pub fn shared_library_path() -> PathBuf {
    let name = format!(
        "{}crand{}",
        std::env::consts::DLL_PREFIX,
        std::env::consts::DLL_SUFFIX
    );
    let exe = std::env::current_exe().unwrap();
    let deps = exe.parent().unwrap();
    [deps.join(&name), deps.parent().unwrap().join(&name)]
        .into_iter()
        .find(|p| p.exists())
        .unwrap_or_else(|| panic!("{name} not found next to {}", exe.display()))
}

pub type FillFn = unsafe extern "C" fn(u32, *mut u64, usize, *mut u64, usize) -> i32;
pub type FillUnitFn = unsafe extern "C" fn(u32, *mut u64, usize, *mut f64, usize) -> i32;
pub type SeedInitFn = unsafe extern "C" fn(u32, *const u64, usize, *mut u64, usize) -> i32;
pub type WordsFn = unsafe extern "C" fn(u32) -> usize;

/// Typed handles to every export, resolved once.
pub struct Crand {
    pub lib: Library,
}

impl Crand {
    pub fn load() -> Self {
        let lib = unsafe { Library::new(shared_library_path()) }.expect("load libcrand");
        Self { lib }
    }

    pub fn get<T>(&self, name: &str) -> Symbol<'_, T> {
        unsafe { self.lib.get(name.as_bytes()) }.unwrap_or_else(|e| panic!("{name}: {e}"))
    }

    /// Seeds `kind` from user words and returns the internal state.
    pub fn seed(&self, kind: u32, words: &[u64]) -> Vec<u64> {
        let state_words: Symbol<WordsFn> = self.get("crand_state_words");
        let init: Symbol<SeedInitFn> = self.get("crand_seed_init");
        let mut state = vec![0u64; unsafe { state_words(kind) }];
        let status = unsafe {
            init(
                kind,
                words.as_ptr(),
                words.len(),
                state.as_mut_ptr(),
                state.len(),
            )
        };
        assert_eq!(status, 0);
        state
    }

    pub fn fill(&self, kind: u32, state: &mut [u64], n: usize) -> (i32, Vec<u64>) {
        let fill: Symbol<FillFn> = self.get("crand_fill");
        let mut out = vec![0u64; n];
        let status = unsafe { fill(kind, state.as_mut_ptr(), state.len(), out.as_mut_ptr(), n) };
        (status, out)
    }

    pub fn fill_unit(&self, kind: u32, state: &mut [u64], n: usize) -> (i32, Vec<f64>) {
        let fill: Symbol<FillUnitFn> = self.get("crand_fill_unit");
        let mut out = vec![0f64; n];
        let status = unsafe { fill(kind, state.as_mut_ptr(), state.len(), out.as_mut_ptr(), n) };
        (status, out)
    }
}
