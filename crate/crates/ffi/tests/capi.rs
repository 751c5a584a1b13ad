use std::ffi::{c_char, CStr};
use std::ptr;

use cylwave_ffi::*;

fn read_string(f: impl Fn(*mut c_char, usize, *mut usize) -> CwStatus) -> String {
    let mut needed = 0usize;
    assert_eq!(f(ptr::null_mut(), 0, &mut needed), CwStatus::BufferTooSmall);
    let mut buf = vec![0 as c_char; needed];
    assert_eq!(f(buf.as_mut_ptr(), buf.len(), &mut needed), CwStatus::Ok);
    unsafe { CStr::from_ptr(buf.as_ptr()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn last_error() -> String {
    read_string(|b, n, r| unsafe { cw_last_error_message(b, n, r) })
}

fn new_expansion(order: u32) -> *mut CwExpansion {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { cw_expansion_new(order, &mut h) }, CwStatus::Ok);
    assert!(!h.is_null());
    h
}

#[test]
fn shifts_through_handle() {
    let h = new_expansion(6);
    let mut order = 0;
    assert_eq!(
        unsafe { cw_expansion_max_order(h, &mut order) },
        CwStatus::Ok
    );
    assert_eq!(order, 6);
    let thetas: Vec<String> = (0..6)
        .map(|i| read_string(|b, n, r| unsafe { cw_expansion_theta(h, i, b, n, r) }))
        .collect();
    assert_eq!(thetas, ["1", "0", "3/4", "0", "-3/128", "0"]);
    assert_eq!(
        unsafe { cw_expansion_theta(h, 6, ptr::null_mut(), 0, ptr::null_mut()) },
        CwStatus::InvalidArgument
    );
    assert!(last_error().contains("theta_6"));
    unsafe { cw_expansion_free(h) };
}

#[test]
fn polynomial_text_and_residual() {
    let h = new_expansion(3);
    let text = read_string(|b, n, r| unsafe { cw_expansion_poly(h, 3, 0, b, n, r) });
    assert_eq!(
        text,
        "-1/32 * tau^0 * cos(1*tau) + 1/32 * tau^0 * cos(3*tau)"
    );
    let mut zero = false;
    for mode in 0..4 {
        assert_eq!(
            unsafe { cw_expansion_residual_is_zero(h, 3, mode, &mut zero) },
            CwStatus::Ok
        );
        assert!(zero);
    }
    assert_eq!(
        unsafe { cw_expansion_poly(h, 4, 0, ptr::null_mut(), 0, ptr::null_mut()) },
        CwStatus::InvalidArgument
    );
    unsafe { cw_expansion_free(h) };
}

#[test]
fn free_data_handle() {
    let orders = [2u32];
    let nums = [1i64];
    let dens = [2i64];
    let mut h = ptr::null_mut();
    let status = unsafe {
        cw_expansion_new_with_free_data(4, orders.as_ptr(), nums.as_ptr(), dens.as_ptr(), 1, &mut h)
    };
    assert_eq!(status, CwStatus::Ok);
    let t3 = read_string(|b, n, r| unsafe { cw_expansion_theta(h, 3, b, n, r) });
    assert_eq!(t3, "3/4");
    unsafe { cw_expansion_free(h) };

    let bad_den = [0i64];
    let status = unsafe {
        cw_expansion_new_with_free_data(
            4,
            orders.as_ptr(),
            nums.as_ptr(),
            bad_den.as_ptr(),
            1,
            &mut h,
        )
    };
    assert_eq!(status, CwStatus::InvalidArgument);
    let status = unsafe {
        cw_expansion_new_with_free_data(4, ptr::null(), ptr::null(), ptr::null(), 1, &mut h)
    };
    assert_eq!(status, CwStatus::NullPointer);
}

#[test]
fn numeric_entry_points() {
    let h = new_expansion(5);
    let mut w = 0.0;
    assert_eq!(
        unsafe { cw_expansion_frequency(h, 0.0, &mut w) },
        CwStatus::Ok
    );
    assert_eq!(w, 1.0);
    let mut f = 1.0;
    assert_eq!(
        unsafe { cw_expansion_evaluate(h, 0.1, 0.7, 0.0, &mut f) },
        CwStatus::Ok
    );
    assert_eq!(f, 0.0);
    assert_eq!(
        unsafe { cw_expansion_evaluate(h, 0.1, 0.7, 4.0, &mut f) },
        CwStatus::InvalidArgument
    );
    let mut err = 1.0;
    assert_eq!(
        unsafe { cw_pde_periodicity_error(h, 0.0, 5, 8, 1e-2, &mut err) },
        CwStatus::Ok
    );
    assert_eq!(err, 0.0);
    unsafe { cw_expansion_free(h) };

    let mut period = 0.0;
    assert_eq!(
        unsafe { cw_duffing_period(0.5, 64, &mut period) },
        CwStatus::Ok
    );
    let (mut t, mut gap) = (0.0, 1.0);
    assert_eq!(
        unsafe { cw_duffing_orbit_closure(0.5, 1e-12, &mut t, &mut gap) },
        CwStatus::Ok
    );
    assert!((t - period).abs() < 1e-8 && gap < 1e-8);
    assert_eq!(
        unsafe { cw_duffing_period(0.0, 64, &mut period) },
        CwStatus::InvalidArgument
    );
    assert!(last_error().contains("zero amplitude"));

    assert_eq!(cw_interaction_coeff(1, 1, 1, 1), 2);
    let version = unsafe { CStr::from_ptr(cw_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}

#[test]
fn null_and_invalid_arguments() {
    assert_eq!(
        unsafe { cw_expansion_new(3, ptr::null_mut()) },
        CwStatus::NullPointer
    );
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { cw_expansion_new(0, &mut h) },
        CwStatus::InvalidArgument
    );
    assert!(h.is_null());
    let mut order = 0;
    assert_eq!(
        unsafe { cw_expansion_max_order(ptr::null(), &mut order) },
        CwStatus::NullPointer
    );
    assert_eq!(last_error(), "null expansion handle");
    unsafe { cw_expansion_free(ptr::null_mut()) };
}

#[test]
fn small_buffer_is_left_untouched() {
    let h = new_expansion(3);
    let mut buf = [7 as c_char; 2];
    let mut needed = 0;
    let status = unsafe { cw_expansion_theta(h, 2, buf.as_mut_ptr(), buf.len(), &mut needed) };
    assert_eq!(status, CwStatus::BufferTooSmall);
    assert_eq!(needed, 4);
    assert_eq!(buf, [7, 7]);
    unsafe { cw_expansion_free(h) };
}

#[test]
fn header_declares_the_api() {
    let header = include_str!("../include/cylwave.h");
    for name in [
        "cw_expansion_new",
        "cw_expansion_free",
        "cw_expansion_theta",
        "cw_last_error_message",
        "CW_STATUS_BUFFER_TOO_SMALL",
        "typedef struct CwExpansion CwExpansion",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
