//! C ABI over the skeinrep library.
//!
//! Conventions:
//!
//! * every function returns an [`SkStatus`]; results come back through out
//!   pointers;
//! * polynomials are opaque [`SkPoly`] handles, freed with [`sk_poly_free`];
//! * textual results are NUL-terminated UTF-8 strings allocated by this
//!   library, freed with [`sk_string_free`];
//! * on failure, [`sk_last_error_message`] returns a description of the most
//!   recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use skeinrep::braidcompile::{eval_class, parse_braid};
use skeinrep::error::Error;
use skeinrep::laurent::{lx_mul, ExpVec, PolyElement};
use skeinrep::macdonald::mac_poly;
use skeinrep::pairing::pair;
use skeinrep::parse::parse_poly;
use skeinrep::qreduce::Reducer;

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkStatus {
    Ok = 0,
    /// Malformed input text or composition.
    ParseError = 1,
    /// A domain precondition failed (index range, kappa mismatch,
    /// division by zero, degenerate eigenproblem, ...).
    DomainError = 2,
    /// An internal invariant was violated; please report.
    InternalError = 3,
    /// A required pointer argument was NULL.
    NullArgument = 4,
    /// Input text was not valid UTF-8.
    Utf8Error = 5,
}

/// An element of the polynomial representation (opaque).
pub struct SkPoly {
    inner: PolyElement,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<Vec<u8>>) {
    let cstr = CString::new(message).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(cstr));
}

fn status_of(e: &Error) -> SkStatus {
    match e {
        Error::Parse { .. } => SkStatus::ParseError,
        Error::Internal(_) => SkStatus::InternalError,
        _ => SkStatus::DomainError,
    }
}

fn fail(e: &Error) -> SkStatus {
    set_error(e.to_string());
    status_of(e)
}

/// # Safety
/// `text` must be a valid NUL-terminated string.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, SkStatus> {
    if text.is_null() {
        set_error("null string argument");
        return Err(SkStatus::NullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("input is not valid UTF-8");
        SkStatus::Utf8Error
    })
}

fn give_poly(out: *mut *mut SkPoly, value: PolyElement) -> SkStatus {
    if out.is_null() {
        set_error("null output pointer");
        return SkStatus::NullArgument;
    }
    let handle = Box::new(SkPoly { inner: value });
    unsafe { *out = Box::into_raw(handle) };
    SkStatus::Ok
}

fn give_string(out: *mut *mut c_char, value: String) -> SkStatus {
    if out.is_null() {
        set_error("null output pointer");
        return SkStatus::NullArgument;
    }
    match CString::new(value) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            SkStatus::Ok
        }
        Err(_) => {
            set_error("result contained an interior NUL byte");
            SkStatus::InternalError
        }
    }
}

/// The most recent error message on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn sk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|s| s.as_ptr())
            .unwrap_or(ptr::null())
    })
}

/// Parse a polynomial expression in `x1..x<kappa>` over `Q(s,c)`.
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sk_poly_parse(
    kappa: usize,
    text: *const c_char,
    out: *mut *mut SkPoly,
) -> SkStatus {
    if kappa == 0 {
        set_error("kappa must be at least 1");
        return SkStatus::DomainError;
    }
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match parse_poly(text, kappa) {
        Ok(p) => give_poly(out, p),
        Err(e) => fail(&e),
    }
}

/// Evaluate a braid word (letters `T<i>`, `x<i>`, `y<i>`, `g`, optional
/// `^<exponent>`; leftmost letter acts last) to its normal form.
///
/// # Safety
/// `word` must be NUL-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sk_braid_eval(
    kappa: usize,
    word: *const c_char,
    out: *mut *mut SkPoly,
) -> SkStatus {
    if kappa == 0 {
        set_error("kappa must be at least 1");
        return SkStatus::DomainError;
    }
    let word = match read_str(word) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let parsed = match parse_braid(word, kappa) {
        Ok(w) => w,
        Err(e) => return fail(&e),
    };
    match eval_class(&parsed) {
        Ok(nf) => give_poly(out, nf.element),
        Err(e) => fail(&e),
    }
}

/// Render a polynomial deterministically.
///
/// # Safety
/// `poly` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sk_poly_render(poly: *const SkPoly, out: *mut *mut c_char) -> SkStatus {
    let Some(p) = poly.as_ref() else {
        set_error("null polynomial handle");
        return SkStatus::NullArgument;
    };
    give_string(out, p.inner.to_string())
}

/// Exact product of two polynomials with the same kappa.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sk_poly_mul(
    a: *const SkPoly,
    b: *const SkPoly,
    out: *mut *mut SkPoly,
) -> SkStatus {
    let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
        set_error("null polynomial handle");
        return SkStatus::NullArgument;
    };
    match lx_mul(&a.inner, &b.inner) {
        Ok(p) => give_poly(out, p),
        Err(e) => fail(&e),
    }
}

/// Reduce a class to its multiple of the constant braid class; the scalar is
/// rendered to a string.
///
/// # Safety
/// `poly` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sk_reduce(poly: *const SkPoly, out: *mut *mut c_char) -> SkStatus {
    let Some(p) = poly.as_ref() else {
        set_error("null polynomial handle");
        return SkStatus::NullArgument;
    };
    let reducer = Reducer::new(p.inner.kappa());
    match reducer.reduce_class(&p.inner) {
        Ok(v) => give_string(out, v.to_string()),
        Err(e) => fail(&e),
    }
}

/// The skein bilinear form of two classes, rendered to a string.
///
/// # Safety
/// `f` and `g` must be live handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sk_pair(
    f: *const SkPoly,
    g: *const SkPoly,
    out: *mut *mut c_char,
) -> SkStatus {
    let (Some(f), Some(g)) = (f.as_ref(), g.as_ref()) else {
        set_error("null polynomial handle");
        return SkStatus::NullArgument;
    };
    let reducer = Reducer::new(f.inner.kappa());
    match pair(&reducer, &f.inner, &g.inner) {
        Ok(v) => give_string(out, v.value.to_string()),
        Err(e) => fail(&e),
    }
}

/// Compute the Macdonald polynomial of a composition; the result handle is
/// the polynomial, and the rendered eigenvalues come back as a
/// `;`-separated string.
///
/// # Safety
/// `composition` must point to `len` integers; `out_poly` and
/// `out_eigenvalues` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sk_macdonald(
    composition: *const i64,
    len: usize,
    out_poly: *mut *mut SkPoly,
    out_eigenvalues: *mut *mut c_char,
) -> SkStatus {
    if composition.is_null() || len == 0 {
        set_error("composition must be a non-empty integer array");
        return SkStatus::NullArgument;
    }
    let entries = std::slice::from_raw_parts(composition, len).to_vec();
    match mac_poly(&ExpVec::new(entries)) {
        Ok(data) => {
            let eigen = data
                .eigenvalues
                .iter()
                .map(|y| y.to_string())
                .collect::<Vec<_>>()
                .join(";");
            let status = give_string(out_eigenvalues, eigen);
            if status != SkStatus::Ok {
                return status;
            }
            give_poly(out_poly, data.polynomial)
        }
        Err(e) => fail(&e),
    }
}

/// Free a polynomial handle. NULL is a no-op.
///
/// # Safety
/// `poly` must have come from this library and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn sk_poly_free(poly: *mut SkPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Free a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must have come from this library and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn sk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
