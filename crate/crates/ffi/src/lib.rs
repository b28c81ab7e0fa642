//! C ABI over the rookery library.
//!
//! Conventions:
//! - objects created by `rk_*_new`-style constructors are returned through
//!   out-pointers as opaque handles and must be released with the matching
//!   `rk_*_free`;
//! - every fallible call returns an `RkStatus`; on anything other than
//!   `RK_STATUS_OK` the thread-local message from `rk_last_error_message`
//!   describes the failure;
//! - strings returned by the library are freed with `rk_string_free`;
//!   strings passed in are borrowed, NUL-terminated UTF-8, and never freed
//!   by the library;
//! - handles are immutable after construction and safe to share across
//!   threads for reading; the error message is per-thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use rookery::bier::bier_sphere;
use rookery::bottleneck::{bottleneck_via_morse, minmax_bruteforce, Clutter, Weighting};
use rookery::chessboard::{multiple_chessboard, GridSpec, MultiplicityProfile};
use rookery::error::Error;
use rookery::face::Face;
use rookery::homology::{betti, homological_connectivity, sphere_check, Coefficients,
    HomConnectivity};
use rookery::io::{parse_complex, write_complex};
use rookery::morse::{bier_dmf, multiple_chessboard_dmf, DiscreteVectorField};
use rookery::SimplicialComplex;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RkStatus {
    Ok = 0,
    /// A pointer argument was null or a scalar argument out of range.
    InvalidArgument = 1,
    /// The input text or instance failed validation.
    InvalidInput = 2,
    /// An enumeration cap or size limit was exceeded.
    TooLarge = 3,
    /// The operation's mathematical precondition does not hold.
    Unsupported = 4,
    /// An internal consistency check failed.
    Internal = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl std::fmt::Display) {
    let text = message.to_string().replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(text).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> RkStatus {
    match err {
        Error::TooManyFaces { .. } | Error::GroundTooLarge(_) | Error::GroundOverLimit { .. } => {
            RkStatus::TooLarge
        }
        Error::TrivialDual
        | Error::BaseVertexMissing
        | Error::StarConditionViolated { .. }
        | Error::BierOfFullComplex
        | Error::BierOfVoidComplex
        | Error::BierGroundTooSmall(_)
        | Error::CertificateNotApplicable { .. } => RkStatus::Unsupported,
        Error::MatchingInconsistent(_) | Error::PointerUndefined { .. } => RkStatus::Internal,
        _ => RkStatus::InvalidInput,
    }
}

fn fail(err: Error) -> RkStatus {
    let status = status_of(&err);
    set_error(err);
    status
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by the library.
///
/// # Safety
/// `s` must have been returned by a rookery function and not freed yet.
#[no_mangle]
pub unsafe extern "C" fn rk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------------------
// Complex handles.
// ---------------------------------------------------------------------------

/// Opaque simplicial complex handle.
pub struct RkComplex(SimplicialComplex);

/// Opaque discrete-vector-field handle; owns its complex and the derived
/// critical-cell list.
pub struct RkMorse {
    field: DiscreteVectorField,
    critical: Vec<Face>,
    acyclic: bool,
}

unsafe fn cstr<'a>(ptr: *const c_char) -> Result<&'a str, RkStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(RkStatus::InvalidArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        RkStatus::InvalidArgument
    })
}

fn emit_complex(out: *mut *mut RkComplex, complex: SimplicialComplex) -> RkStatus {
    if out.is_null() {
        set_error("null out-pointer");
        return RkStatus::InvalidArgument;
    }
    unsafe { *out = Box::into_raw(Box::new(RkComplex(complex))) };
    RkStatus::Ok
}

/// Parses the facet-list text format (`m <ground>` header, one facet per
/// line with 1-based vertices, `void` sentinel for the void complex).
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rk_complex_parse(
    text: *const c_char,
    out: *mut *mut RkComplex,
) -> RkStatus {
    let text = match cstr(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match parse_complex(text) {
        Ok(complex) => emit_complex(out, complex),
        Err(e) => fail(e),
    }
}

/// The standard chessboard complex on `cols` x `rows`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rk_complex_chessboard(
    cols: usize,
    rows: usize,
    out: *mut *mut RkComplex,
) -> RkStatus {
    let build = || -> Result<SimplicialComplex, Error> {
        let grid = GridSpec::new(cols, rows)?;
        rookery::chessboard::standard_chessboard(&grid)
    };
    match build() {
        Ok(complex) => emit_complex(out, complex),
        Err(e) => fail(e),
    }
}

/// The multiple chessboard complex with per-row caps `row_caps[0..rows]`
/// and per-column caps `col_caps[0..cols]`.
///
/// # Safety
/// The cap arrays must hold at least `rows` and `cols` entries; `out`
/// must be valid.
#[no_mangle]
pub unsafe extern "C" fn rk_complex_multiple_chessboard(
    cols: usize,
    rows: usize,
    row_caps: *const usize,
    col_caps: *const usize,
    out: *mut *mut RkComplex,
) -> RkStatus {
    if row_caps.is_null() || col_caps.is_null() {
        set_error("null cap array");
        return RkStatus::InvalidArgument;
    }
    let build = || -> Result<SimplicialComplex, Error> {
        let grid = GridSpec::new(cols, rows)?;
        let profile = MultiplicityProfile::new(
            std::slice::from_raw_parts(row_caps, rows).to_vec(),
            std::slice::from_raw_parts(col_caps, cols).to_vec(),
        );
        multiple_chessboard(&grid, &profile)
    };
    match build() {
        Ok(complex) => emit_complex(out, complex),
        Err(e) => fail(e),
    }
}

/// The Alexander dual.
///
/// # Safety
/// `complex` must be a live handle; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn rk_complex_dual(
    complex: *const RkComplex,
    out: *mut *mut RkComplex,
) -> RkStatus {
    let Some(handle) = complex.as_ref() else {
        set_error("null complex handle");
        return RkStatus::InvalidArgument;
    };
    match handle.0.alexander_dual_with_cap(rookery::DEFAULT_FACE_CAP) {
        Ok(dual) => emit_complex(out, dual),
        Err(e) => fail(e),
    }
}

/// The Bier sphere of the complex, on twice the ground set.
///
/// # Safety
/// `complex` must be a live handle; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn rk_complex_bier(
    complex: *const RkComplex,
    out: *mut *mut RkComplex,
) -> RkStatus {
    let Some(handle) = complex.as_ref() else {
        set_error("null complex handle");
        return RkStatus::InvalidArgument;
    };
    match bier_sphere(&handle.0) {
        Ok(bier) => emit_complex(out, bier.complex().clone()),
        Err(e) => fail(e),
    }
}

/// Releases a complex handle.
///
/// # Safety
/// `complex` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rk_complex_free(complex: *mut RkComplex) {
    if !complex.is_null() {
        drop(Box::from_raw(complex));
    }
}

/// Ground-set size; 0 for a null handle.
///
/// # Safety
/// `complex` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn rk_complex_ground_size(complex: *const RkComplex) -> usize {
    complex.as_ref().map_or(0, |c| c.0.ground_size())
}

/// Total number of faces, the empty face included.
///
/// # Safety
/// `complex` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn rk_complex_face_count(complex: *const RkComplex) -> usize {
    complex.as_ref().map_or(0, |c| c.0.face_count())
}

/// Euler characteristic (alternating f-vector sum).
///
/// # Safety
/// `complex` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn rk_complex_euler(complex: *const RkComplex) -> i64 {
    complex.as_ref().map_or(0, |c| c.0.euler_characteristic())
}

/// Copies the f-vector into `buf` and stores the entry count in
/// `written`. Fails with `RK_STATUS_TOO_LARGE` when `buf_len` is too
/// small; `written` then holds the required length.
///
/// # Safety
/// `buf` must hold `buf_len` entries; `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rk_complex_f_vector(
    complex: *const RkComplex,
    buf: *mut u64,
    buf_len: usize,
    written: *mut usize,
) -> RkStatus {
    let Some(handle) = complex.as_ref() else {
        set_error("null complex handle");
        return RkStatus::InvalidArgument;
    };
    if written.is_null() {
        set_error("null out-pointer");
        return RkStatus::InvalidArgument;
    }
    let f = handle.0.f_vector();
    *written = f.len();
    if f.len() > buf_len {
        set_error(format!("buffer holds {buf_len} entries, need {}", f.len()));
        return RkStatus::TooLarge;
    }
    for (i, v) in f.iter().enumerate() {
        *buf.add(i) = *v as u64;
    }
    RkStatus::Ok
}

/// Serializes the complex into the facet-list format. Free the result
/// with `rk_string_free`.
///
/// # Safety
/// `complex` must be live; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn rk_complex_to_text(
    complex: *const RkComplex,
    out: *mut *mut c_char,
) -> RkStatus {
    let Some(handle) = complex.as_ref() else {
        set_error("null complex handle");
        return RkStatus::InvalidArgument;
    };
    if out.is_null() {
        set_error("null out-pointer");
        return RkStatus::InvalidArgument;
    }
    let text = write_complex(&handle.0);
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            RkStatus::Ok
        }
        Err(_) => {
            set_error("serialized text contained an interior NUL");
            RkStatus::Internal
        }
    }
}

// ---------------------------------------------------------------------------
// Homology.
// ---------------------------------------------------------------------------

/// Unreduced integer Betti numbers into `buf`; `torsion_free` reports
/// whether every homology group is free.
///
/// # Safety
/// `buf` must hold `buf_len` entries; `written` and `torsion_free` valid.
#[no_mangle]
pub unsafe extern "C" fn rk_betti(
    complex: *const RkComplex,
    buf: *mut u64,
    buf_len: usize,
    written: *mut usize,
    torsion_free: *mut bool,
) -> RkStatus {
    let Some(handle) = complex.as_ref() else {
        set_error("null complex handle");
        return RkStatus::InvalidArgument;
    };
    if written.is_null() || torsion_free.is_null() {
        set_error("null out-pointer");
        return RkStatus::InvalidArgument;
    }
    let profile = match betti(&handle.0, Coefficients::Integer) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    *written = profile.betti.len();
    *torsion_free = !profile.has_torsion();
    if profile.betti.len() > buf_len {
        set_error(format!(
            "buffer holds {buf_len} entries, need {}",
            profile.betti.len()
        ));
        return RkStatus::TooLarge;
    }
    for (i, b) in profile.betti.iter().enumerate() {
        *buf.add(i) = *b as u64;
    }
    RkStatus::Ok
}

/// Whether reduced integer homology equals that of the d-sphere.
///
/// # Safety
/// `complex` must be live; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn rk_sphere_check(
    complex: *const RkComplex,
    d: i64,
    out: *mut bool,
) -> RkStatus {
    let Some(handle) = complex.as_ref() else {
        set_error("null complex handle");
        return RkStatus::InvalidArgument;
    };
    if out.is_null() {
        set_error("null out-pointer");
        return RkStatus::InvalidArgument;
    }
    match sphere_check(&handle.0, d) {
        Ok(v) => {
            *out = v;
            RkStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Homological connectivity encoded as an integer: -2 for an empty
/// realization, -1 for a disconnected complex, the largest degree c with
/// vanishing reduced homology otherwise, and INT64_MAX when every reduced
/// group vanishes.
///
/// # Safety
/// `complex` must be live; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn rk_homological_connectivity(
    complex: *const RkComplex,
    out: *mut i64,
) -> RkStatus {
    let Some(handle) = complex.as_ref() else {
        set_error("null complex handle");
        return RkStatus::InvalidArgument;
    };
    if out.is_null() {
        set_error("null out-pointer");
        return RkStatus::InvalidArgument;
    }
    match homological_connectivity(&handle.0) {
        Ok(HomConnectivity::EmptySpace) => *out = -2,
        Ok(HomConnectivity::Disconnected) => *out = -1,
        Ok(HomConnectivity::UpTo(c)) => *out = c,
        Ok(HomConnectivity::Acyclic) => *out = i64::MAX,
        Err(e) => return fail(e),
    }
    RkStatus::Ok
}

// ---------------------------------------------------------------------------
// Discrete Morse matchings.
// ---------------------------------------------------------------------------

fn emit_morse(out: *mut *mut RkMorse, field: DiscreteVectorField) -> RkStatus {
    if out.is_null() {
        set_error("null out-pointer");
        return RkStatus::InvalidArgument;
    }
    let critical = match field.critical_cells() {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let acyclic = match field.is_acyclic() {
        Ok(a) => a.is_acyclic(),
        Err(e) => return fail(e),
    };
    unsafe {
        *out = Box::into_raw(Box::new(RkMorse {
            field,
            critical,
            acyclic,
        }))
    };
    RkStatus::Ok
}

/// The two-step matching on the Bier sphere of the given base complex.
/// Requires a nonvoid proper complex whose dual contains {1} and is not
/// the empty-face-only complex (`RK_STATUS_UNSUPPORTED` otherwise).
///
/// # Safety
/// `base` must be live; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn rk_morse_bier(
    base: *const RkComplex,
    out: *mut *mut RkMorse,
) -> RkStatus {
    let Some(handle) = base.as_ref() else {
        set_error("null complex handle");
        return RkStatus::InvalidArgument;
    };
    let build = || -> Result<DiscreteVectorField, Error> {
        let bier = bier_sphere(&handle.0)?;
        bier_dmf(&bier)
    };
    match build() {
        Ok(field) => emit_morse(out, field),
        Err(e) => fail(e),
    }
}

/// The stepwise matching on a multiple chessboard complex; requires the
/// cap inequality sum(l) >= sum(k) + rows - 1.
///
/// # Safety
/// Cap arrays sized as in `rk_complex_multiple_chessboard`; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn rk_morse_multiple_chessboard(
    cols: usize,
    rows: usize,
    row_caps: *const usize,
    col_caps: *const usize,
    out: *mut *mut RkMorse,
) -> RkStatus {
    if row_caps.is_null() || col_caps.is_null() {
        set_error("null cap array");
        return RkStatus::InvalidArgument;
    }
    let build = || -> Result<DiscreteVectorField, Error> {
        let grid = GridSpec::new(cols, rows)?;
        let profile = MultiplicityProfile::new(
            std::slice::from_raw_parts(row_caps, rows).to_vec(),
            std::slice::from_raw_parts(col_caps, cols).to_vec(),
        );
        Ok(multiple_chessboard_dmf(&grid, &profile)?.0)
    };
    match build() {
        Ok(field) => emit_morse(out, field),
        Err(e) => fail(e),
    }
}

/// Releases a matching handle.
///
/// # Safety
/// `morse` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rk_morse_free(morse: *mut RkMorse) {
    if !morse.is_null() {
        drop(Box::from_raw(morse));
    }
}

/// Number of matched pairs.
///
/// # Safety
/// `morse` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn rk_morse_pair_count(morse: *const RkMorse) -> usize {
    morse.as_ref().map_or(0, |m| m.field.pairs().len())
}

/// Number of critical cells.
///
/// # Safety
/// `morse` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn rk_morse_critical_count(morse: *const RkMorse) -> usize {
    morse.as_ref().map_or(0, |m| m.critical.len())
}

/// Whether the matching has no closed gradient path.
///
/// # Safety
/// `morse` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn rk_morse_is_acyclic(morse: *const RkMorse) -> bool {
    morse.as_ref().is_some_and(|m| m.acyclic)
}

/// Copies the critical-cell dimensions (sorted ascending) into `buf`.
///
/// # Safety
/// `buf` must hold `buf_len` entries; `written` valid.
#[no_mangle]
pub unsafe extern "C" fn rk_morse_critical_dims(
    morse: *const RkMorse,
    buf: *mut i64,
    buf_len: usize,
    written: *mut usize,
) -> RkStatus {
    let Some(handle) = morse.as_ref() else {
        set_error("null matching handle");
        return RkStatus::InvalidArgument;
    };
    if written.is_null() {
        set_error("null out-pointer");
        return RkStatus::InvalidArgument;
    }
    *written = handle.critical.len();
    if handle.critical.len() > buf_len {
        set_error(format!(
            "buffer holds {buf_len} entries, need {}",
            handle.critical.len()
        ));
        return RkStatus::TooLarge;
    }
    for (i, cell) in handle.critical.iter().enumerate() {
        *buf.add(i) = cell.dim();
    }
    RkStatus::Ok
}

/// The Forman-style connectivity lower bound; fails with
/// `RK_STATUS_UNSUPPORTED` unless the matching has exactly one critical
/// 0-cell.
///
/// # Safety
/// `morse` must be live; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn rk_morse_connectivity_certificate(
    morse: *const RkMorse,
    out: *mut i64,
) -> RkStatus {
    let Some(handle) = morse.as_ref() else {
        set_error("null matching handle");
        return RkStatus::InvalidArgument;
    };
    if out.is_null() {
        set_error("null out-pointer");
        return RkStatus::InvalidArgument;
    }
    match handle.field.connectivity_certificate() {
        Ok(cert) => {
            *out = cert;
            RkStatus::Ok
        }
        Err(e) => fail(e),
    }
}

// ---------------------------------------------------------------------------
// Bottleneck extrema.
// ---------------------------------------------------------------------------

/// Solves the bottleneck problem on a clutter given as "1 2;1 3" style
/// text and comma-separated rational weights. With `use_morse` the value
/// is read off the Bier matching's top critical cell; otherwise brute
/// force. The value is returned as an exact fraction, the element as a
/// 1-based index.
///
/// # Safety
/// `clutter` and `weights` must be valid strings; out-pointers valid.
#[no_mangle]
pub unsafe extern "C" fn rk_bottleneck_solve(
    ground: usize,
    clutter: *const c_char,
    weights: *const c_char,
    use_morse: bool,
    value_num: *mut i64,
    value_den: *mut i64,
    element: *mut usize,
) -> RkStatus {
    let clutter_text = match cstr(clutter) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let weights_text = match cstr(weights) {
        Ok(t) => t,
        Err(status) => return status,
    };
    if value_num.is_null() || value_den.is_null() || element.is_null() {
        set_error("null out-pointer");
        return RkStatus::InvalidArgument;
    }
    let solve = || -> Result<(i64, i64, usize), Error> {
        let clutter = Clutter::parse(ground, clutter_text)?;
        let weighting = Weighting::parse(weights_text)?;
        if weighting.len() != ground {
            return Err(Error::GroundMismatch {
                expected: ground,
                got: weighting.len(),
            });
        }
        let (value, e) = if use_morse {
            let sol = bottleneck_via_morse(&clutter, &weighting)?;
            (sol.value, sol.element)
        } else {
            let sol = minmax_bruteforce(&clutter, &weighting)?;
            (sol.value, sol.element)
        };
        Ok((*value.numer(), *value.denom(), e + 1))
    };
    match solve() {
        Ok((num, den, e)) => {
            *value_num = num;
            *value_den = den;
            *element = e;
            RkStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn rk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
