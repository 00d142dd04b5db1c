//! C ABI over `collar-algebra`.
//!
//! Every fallible call returns a [`CagStatus`]; on failure a message is kept
//! per thread and can be read with [`cag_last_error`]. Handles and strings
//! handed out by this library are released with the matching `*_free`
//! function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use collar_algebra::primes::PrimeSeq;
use collar_algebra::thompson::{self, Order, TreePair};
use collar_algebra::tower::{self, ProDistinct};
use collar_algebra::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CagStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    VerificationFailed = 4,
    Panic = 5,
}

/// An element of Thompson's group V.
pub struct CagTreePair(TreePair);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: CagStatus, msg: impl Into<String>) -> CagStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> CagStatus {
    let status = match e {
        Error::Verification(_) => CagStatus::VerificationFailed,
        _ => CagStatus::InvalidInput,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> CagStatus) -> CagStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(CagStatus::Panic, "internal panic"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, CagStatus> {
    if s.is_null() {
        return Err(fail(CagStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(CagStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn read_seq(s: *const c_char) -> Result<PrimeSeq, CagStatus> {
    read_str(s)?.parse().map_err(from_error)
}

unsafe fn put<T>(out: *mut T, value: T) -> CagStatus {
    if out.is_null() {
        return fail(CagStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    CagStatus::Ok
}

unsafe fn put_pair(out: *mut *mut CagTreePair, x: TreePair) -> CagStatus {
    put(out, Box::into_raw(Box::new(CagTreePair(x))))
}

unsafe fn handle<'a>(p: *const CagTreePair) -> Result<&'a TreePair, CagStatus> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| fail(CagStatus::NullPointer, "null tree pair"))
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cag_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cag_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{"domain": "(*,*)", "range": "(*,*)", "perm": [1, 0]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cag_tree_pair_from_json(json: *const c_char, out: *mut *mut CagTreePair) -> CagStatus {
    guard(|| {
        let text = tri!(read_str(json));
        match serde_json::from_str::<TreePair>(text) {
            Ok(x) => put_pair(out, x),
            Err(e) => fail(CagStatus::InvalidInput, e.to_string()),
        }
    })
}

/// The torsion element of prime order `p`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cag_tree_pair_element_of_order(p: u64, out: *mut *mut CagTreePair) -> CagStatus {
    guard(|| match thompson::element_of_order(p) {
        Ok(x) => put_pair(out, x),
        Err(e) => from_error(e),
    })
}

/// `a ∘ b`: apply `b`, then `a`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cag_tree_pair_multiply(
    a: *const CagTreePair,
    b: *const CagTreePair,
    out: *mut *mut CagTreePair,
) -> CagStatus {
    guard(|| {
        let (a, b) = (tri!(handle(a)), tri!(handle(b)));
        put_pair(out, a.multiply(b))
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cag_tree_pair_inverse(a: *const CagTreePair, out: *mut *mut CagTreePair) -> CagStatus {
    guard(|| put_pair(out, tri!(handle(a)).inverse()))
}

/// Writes the order of `a`, or 0 when it exceeds `cap`.
///
/// # Safety
/// `a` must be a live handle; `order` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cag_tree_pair_order(a: *const CagTreePair, cap: usize, order: *mut usize) -> CagStatus {
    guard(|| match tri!(handle(a)).order(cap) {
        Order::Finite(n) => put(order, n),
        Order::ExceedsCap => put(order, 0),
    })
}

/// Writes 1 if `a` and `b` are the same element, else 0.
///
/// # Safety
/// `a` and `b` must be live handles; `equal` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cag_tree_pair_equal(
    a: *const CagTreePair,
    b: *const CagTreePair,
    equal: *mut bool,
) -> CagStatus {
    guard(|| {
        let (a, b) = (tri!(handle(a)), tri!(handle(b)));
        put(equal, a == b)
    })
}

/// JSON form of `a`; free with [`cag_string_free`].
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cag_tree_pair_to_json(a: *const CagTreePair, out: *mut *mut c_char) -> CagStatus {
    guard(|| {
        let json = serde_json::to_string(tri!(handle(a))).expect("tree pairs serialize");
        put(out, CString::new(json).expect("JSON has no nul bytes").into_raw())
    })
}

/// # Safety
/// `a` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cag_tree_pair_free(a: *mut CagTreePair) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Whether the tower levels for two comma-separated prime sequences are
/// isomorphic.
///
/// # Safety
/// `a` and `b` must be nul-terminated strings; `iso` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cag_iso_decide(a: *const c_char, b: *const c_char, iso: *mut bool) -> CagStatus {
    guard(|| {
        let (a, b) = (tri!(read_seq(a)), tri!(read_seq(b)));
        put(iso, tower::iso_decide(&a, &b).iso)
    })
}

/// Whether the tower level for `a` maps onto the one for `b`.
///
/// # Safety
/// `a` and `b` must be nul-terminated strings; `epi` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cag_epi_decide(a: *const c_char, b: *const c_char, epi: *mut bool) -> CagStatus {
    guard(|| {
        let (a, b) = (tri!(read_seq(a)), tri!(read_seq(b)));
        put(epi, tower::epi_decide(&a, &b))
    })
}

/// Whether the inverse sequences through `a` and `b` are distinct; when they
/// are, `witness` receives the separating prime, otherwise 0.
///
/// # Safety
/// `a` and `b` must be nul-terminated strings; the outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn cag_pro_distinct(
    a: *const c_char,
    b: *const c_char,
    distinct: *mut bool,
    witness: *mut u64,
) -> CagStatus {
    guard(|| {
        let (a, b) = (tri!(read_seq(a)), tri!(read_seq(b)));
        if distinct.is_null() || witness.is_null() {
            return fail(CagStatus::NullPointer, "null output pointer");
        }
        match tower::pro_distinct(&a, &b) {
            Ok(ProDistinct::EqualPrefix) => {
                put(distinct, false);
                put(witness, 0)
            }
            Ok(ProDistinct::Distinct { witness: p }) => {
                put(distinct, true);
                put(witness, p)
            }
            Err(e) => from_error(e),
        }
    })
}
