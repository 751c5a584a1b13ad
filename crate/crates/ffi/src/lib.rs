//! C ABI over the `cylwave` library.
//!
//! Expansions live behind the opaque `CwExpansion` handle, created by
//! `cw_expansion_new*` and released by `cw_expansion_free`. Every fallible
//! function returns a `CwStatus`; on failure a message is kept per thread
//! and can be copied out with `cw_last_error_message`. Strings are written
//! into caller buffers as NUL-terminated UTF-8; when the buffer is too small
//! nothing is written, `CW_STATUS_BUFFER_TOO_SMALL` is returned and
//! `*required` holds the needed size including the terminator.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cylwave::duffing;
use cylwave::modes;
use cylwave::pdesim;
use cylwave::rational::Rational;
use cylwave::resonant::{ExpansionConfig, PerturbativeState};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ComputationFailed = 3,
    BufferTooSmall = 4,
    Panic = 5,
}

/// Opaque perturbative expansion.
pub struct CwExpansion {
    state: PerturbativeState,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(message: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = message.into());
}

fn fail(status: CwStatus, message: impl Into<String>) -> CwStatus {
    set_error(message);
    status
}

fn guard<F: FnOnce() -> CwStatus>(f: F) -> CwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(CwStatus::Panic, "internal panic"),
    }
}

/// Copies `text` plus a NUL into `buf` when it fits.
///
/// # Safety
/// `buf` must be valid for `buf_len` bytes when non-null; `required` may be null.
unsafe fn write_str(
    text: &str,
    buf: *mut c_char,
    buf_len: usize,
    required: *mut usize,
) -> CwStatus {
    let status = copy_str(text, buf, buf_len, required);
    if status != CwStatus::Ok {
        set_error(format!(
            "buffer of {buf_len} bytes, {} needed",
            text.len() + 1
        ));
    }
    status
}

/// [`write_str`] without touching the stored error message.
unsafe fn copy_str(text: &str, buf: *mut c_char, buf_len: usize, required: *mut usize) -> CwStatus {
    let needed = text.len() + 1;
    if !required.is_null() {
        *required = needed;
    }
    if buf.is_null() || buf_len < needed {
        return CwStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
    *buf.add(text.len()) = 0;
    CwStatus::Ok
}

unsafe fn handle<'a>(h: *const CwExpansion) -> Result<&'a CwExpansion, CwStatus> {
    h.as_ref()
        .ok_or_else(|| fail(CwStatus::NullPointer, "null expansion handle"))
}

fn build(order: u32, config: ExpansionConfig, out: *mut *mut CwExpansion) -> CwStatus {
    if out.is_null() {
        return fail(CwStatus::NullPointer, "null output pointer");
    }
    if order == 0 {
        return fail(CwStatus::InvalidArgument, "order must be at least 1");
    }
    match PerturbativeState::expand(order as usize, config) {
        Ok(state) => {
            let boxed = Box::new(CwExpansion { state });
            // SAFETY: checked non-null above
            unsafe { *out = Box::into_raw(boxed) };
            CwStatus::Ok
        }
        Err(e) => fail(CwStatus::ComputationFailed, e.to_string()),
    }
}

/// Expands to `order` with all free data zero.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn cw_expansion_new(order: u32, out: *mut *mut CwExpansion) -> CwStatus {
    guard(|| build(order, ExpansionConfig::default(), out))
}

/// Expands to `order` with free data `f_{orders[i]}^(0)(0) = numerators[i] / denominators[i]`.
///
/// # Safety
/// The three arrays must hold `len` elements each (they may be null when
/// `len` is 0); `out` must be valid for writing a handle.
#[no_mangle]
pub unsafe extern "C" fn cw_expansion_new_with_free_data(
    order: u32,
    orders: *const u32,
    numerators: *const i64,
    denominators: *const i64,
    len: usize,
    out: *mut *mut CwExpansion,
) -> CwStatus {
    guard(|| {
        let mut config = ExpansionConfig::default();
        if len > 0 {
            if orders.is_null() || numerators.is_null() || denominators.is_null() {
                return fail(CwStatus::NullPointer, "null free-data array");
            }
            let orders = std::slice::from_raw_parts(orders, len);
            let nums = std::slice::from_raw_parts(numerators, len);
            let dens = std::slice::from_raw_parts(denominators, len);
            for i in 0..len {
                if dens[i] == 0 {
                    return fail(CwStatus::InvalidArgument, "zero denominator in free data");
                }
                if orders[i] < 2 {
                    return fail(CwStatus::InvalidArgument, "free data start at order 2");
                }
                let value = Rational::new(nums[i].into(), dens[i].into());
                config = config.with_free_datum(orders[i] as usize, value);
            }
        }
        build(order, config, out)
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `h` must come from `cw_expansion_new*` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cw_expansion_free(h: *mut CwExpansion) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn cw_expansion_max_order(h: *const CwExpansion, out: *mut u32) -> CwStatus {
    guard(|| {
        let e = match handle(h) {
            Ok(e) => e,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        *out = e.state.max_order() as u32;
        CwStatus::Ok
    })
}

/// Writes `theta_index` as an exact fraction such as `"3/4"`.
///
/// # Safety
/// `h` must be a live handle; `buf` valid for `buf_len` bytes; `required` may be null.
#[no_mangle]
pub unsafe extern "C" fn cw_expansion_theta(
    h: *const CwExpansion,
    index: u32,
    buf: *mut c_char,
    buf_len: usize,
    required: *mut usize,
) -> CwStatus {
    guard(|| {
        let e = match handle(h) {
            Ok(e) => e,
            Err(s) => return s,
        };
        match e.state.thetas().get(index as usize) {
            Some(t) => write_str(&t.to_string(), buf, buf_len, required),
            None => fail(
                CwStatus::InvalidArgument,
                format!("theta_{index} not computed"),
            ),
        }
    })
}

/// Writes `f_order^(mode)` in the canonical text form.
///
/// # Safety
/// As for `cw_expansion_theta`.
#[no_mangle]
pub unsafe extern "C" fn cw_expansion_poly(
    h: *const CwExpansion,
    order: u32,
    mode: u32,
    buf: *mut c_char,
    buf_len: usize,
    required: *mut usize,
) -> CwStatus {
    guard(|| {
        let e = match handle(h) {
            Ok(e) => e,
            Err(s) => return s,
        };
        if order == 0 || order as usize > e.state.max_order() {
            return fail(
                CwStatus::InvalidArgument,
                format!("order {order} not computed"),
            );
        }
        let text = e.state.poly(order as usize, mode as usize).to_string();
        write_str(&text, buf, buf_len, required)
    })
}

/// Sets `*is_zero` to whether the exact residual of `(order, mode)` vanishes.
///
/// # Safety
/// `h` must be a live handle and `is_zero` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn cw_expansion_residual_is_zero(
    h: *const CwExpansion,
    order: u32,
    mode: u32,
    is_zero: *mut bool,
) -> CwStatus {
    guard(|| {
        let e = match handle(h) {
            Ok(e) => e,
            Err(s) => return s,
        };
        if is_zero.is_null() {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        match e.state.residual(order as usize, mode as usize) {
            Ok(r) => {
                *is_zero = r.is_zero();
                CwStatus::Ok
            }
            Err(err) => fail(CwStatus::InvalidArgument, err.to_string()),
        }
    })
}

/// `Omega(epsilon)` from the stored shifts.
///
/// # Safety
/// `h` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn cw_expansion_frequency(
    h: *const CwExpansion,
    epsilon: f64,
    out: *mut f64,
) -> CwStatus {
    guard(|| {
        let e = match handle(h) {
            Ok(e) => e,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        match e.state.frequency(epsilon) {
            Ok(w) => {
                *out = w;
                CwStatus::Ok
            }
            Err(err) => fail(CwStatus::ComputationFailed, err.to_string()),
        }
    })
}

/// Truncated series `f(t, psi)` at amplitude `epsilon`.
///
/// # Safety
/// `h` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn cw_expansion_evaluate(
    h: *const CwExpansion,
    epsilon: f64,
    t: f64,
    psi: f64,
    out: *mut f64,
) -> CwStatus {
    guard(|| {
        let e = match handle(h) {
            Ok(e) => e,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        match e.state.evaluate_solution(epsilon, t, psi) {
            Ok(v) => {
                *out = v;
                CwStatus::Ok
            }
            Err(err) => fail(CwStatus::InvalidArgument, err.to_string()),
        }
    })
}

/// Relative return defect of the PDE flow started from the order-`order` data.
///
/// # Safety
/// `h` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn cw_pde_periodicity_error(
    h: *const CwExpansion,
    epsilon: f64,
    order: u32,
    n_modes: u32,
    dt: f64,
    out: *mut f64,
) -> CwStatus {
    guard(|| {
        let e = match handle(h) {
            Ok(e) => e,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        match pdesim::periodicity_error(&e.state, epsilon, order as usize, n_modes as usize, dt) {
            Ok(v) => {
                *out = v;
                CwStatus::Ok
            }
            Err(err) => fail(CwStatus::ComputationFailed, err.to_string()),
        }
    })
}

/// `C_ijk^(m)`.
#[no_mangle]
pub extern "C" fn cw_interaction_coeff(i: u32, j: u32, k: u32, m: u32) -> u64 {
    modes::interaction_coeff(i as usize, j as usize, k as usize, m as usize)
}

/// Duffing period through `(x0, 0)` by quadrature.
///
/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn cw_duffing_period(x0: f64, quad_points: u32, out: *mut f64) -> CwStatus {
    guard(|| {
        if out.is_null() {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        match duffing::period(x0, quad_points as usize) {
            Ok(t) => {
                *out = t;
                CwStatus::Ok
            }
            Err(err) => fail(CwStatus::InvalidArgument, err.to_string()),
        }
    })
}

/// First-return time and closure gap of the Duffing orbit through `(x0, 0)`.
///
/// # Safety
/// Both output pointers must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn cw_duffing_orbit_closure(
    x0: f64,
    tol: f64,
    return_time: *mut f64,
    gap: *mut f64,
) -> CwStatus {
    guard(|| {
        if return_time.is_null() || gap.is_null() {
            return fail(CwStatus::NullPointer, "null output pointer");
        }
        match duffing::orbit_closure(x0, tol) {
            Ok(c) => {
                *return_time = c.return_time;
                *gap = c.gap;
                CwStatus::Ok
            }
            Err(err) => fail(CwStatus::InvalidArgument, err.to_string()),
        }
    })
}

/// Copies the calling thread's last error message.
///
/// # Safety
/// As for `cw_expansion_theta`.
#[no_mangle]
pub unsafe extern "C" fn cw_last_error_message(
    buf: *mut c_char,
    buf_len: usize,
    required: *mut usize,
) -> CwStatus {
    let message = LAST_ERROR.with(|e| e.borrow().clone());
    copy_str(&message, buf, buf_len, required)
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn cw_version() -> *const c_char {
    static VERSION: &CStr =
        match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
            Ok(v) => v,
            Err(_) => panic!("version contains NUL"),
        };
    VERSION.as_ptr()
}
