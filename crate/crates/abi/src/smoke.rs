//! Boundary smoke tests: one scalar call, one by-reference call and one
//! array call. Names are kept as-is for existing callers.

/// Ignores its argument and returns `i64::MAX` as an unsigned value.
#[no_mangle]
pub extern "C" fn uint64_var(_var: u64) -> u64 {
    9_223_372_036_854_775_807
}

/// Stores 2.0 through `var`. A null pointer is ignored.
///
/// # Safety
///
/// `var` must be null or valid for one write.
#[no_mangle]
pub unsafe extern "C" fn change_var(var: *mut f64) {
    if let Some(v) = var.as_mut() {
        *v = 2.0;
    }
}

/// Returns the mean of `array[..len]` and zeroes every element.
///
/// Returns 0.0 without writing when `len == 0`, and NaN when `array` is null
/// with a nonzero `len`.
///
/// # Safety
///
/// `array` must be valid for `len` reads and writes.
#[no_mangle]
pub unsafe extern "C" fn avg_value(array: *mut i64, len: usize) -> f64 {
    if len == 0 {
        return 0.0;
    }
    if array.is_null() {
        return f64::NAN;
    }
    let values = std::slice::from_raw_parts_mut(array, len);
    let mut avg = 0.0;
    for v in values {
        avg += *v as f64 / len as f64;
        *v = 0;
    }
    avg
}
