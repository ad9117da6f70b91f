//! C ABI for `singbraid`.
//!
//! Words live behind opaque handles that the caller frees with the matching
//! `*_free` function. Every call returns an [`SbStatus`]; results come back
//! through out-pointers. On failure, [`sb_last_error_message`] describes the
//! error for the calling thread. Strings returned by the library are owned by
//! the caller and released with [`sb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use singbraid::normal_form::{center_split, equal_sp3, is_trivial_sg3, is_trivial_sp3};
use singbraid::oracle::sg3_necessary_trivial;
use singbraid::sp3::{conjugate_by_sg3_generator, parse_sp_word, rewrite_to_sp3, SpWord};
use singbraid::verify::verify_presentation;
use singbraid::{BraidWord, Error, GeneratorLetter};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    OutOfRange = 4,
    NotPure = 5,
    ForeignLetter = 6,
    Overflow = 7,
    Panic = 8,
}

/// A singular braid word on a fixed number of strands.
pub struct SbBraidWord {
    inner: BraidWord,
}

/// A word over `a12 a13 a23 b12 b13 b23`.
pub struct SbSpWord {
    inner: SpWord,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: SbStatus,
    message: String,
}

impl Failure {
    fn new(status: SbStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Syntax { .. } => SbStatus::Syntax,
            Error::IndexOutOfRange { .. }
            | Error::StrandMismatch { .. }
            | Error::UnsupportedStrands { .. }
            | Error::UnknownGenerator(_) => SbStatus::OutOfRange,
            Error::NotPure { .. } => SbStatus::NotPure,
            Error::ForeignLetter { .. } => SbStatus::ForeignLetter,
            Error::Overflow(_) => SbStatus::Overflow,
        };
        Failure::new(status, e.to_string())
    }
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard<F>(f: F) -> SbStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SbStatus::Ok,
        Ok(Err(failure)) => {
            set_last_error(failure.message);
            failure.status
        }
        Err(_) => {
            set_last_error("panic inside singbraid".to_string());
            SbStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, Failure> {
    if text.is_null() {
        return Err(Failure::new(SbStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| Failure::new(SbStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn deref<'a, T>(handle: *const T) -> Result<&'a T, Failure> {
    handle
        .as_ref()
        .ok_or_else(|| Failure::new(SbStatus::NullPointer, "null handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(SbStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the most recent failed call on this thread, or null.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a word such as `s1 t2^-1 s1^3`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_braid_parse(
    text: *const c_char,
    strands: usize,
    out: *mut *mut SbBraidWord,
) -> SbStatus {
    guard(|| {
        let inner = BraidWord::parse(read_str(text)?, strands)?;
        write_out(out, Box::into_raw(Box::new(SbBraidWord { inner })))
    })
}

/// # Safety
/// `w` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_braid_free(w: *mut SbBraidWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// # Safety
/// `w` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_braid_to_string(
    w: *const SbBraidWord,
    out: *mut *mut c_char,
) -> SbStatus {
    guard(|| write_out(out, into_c_string(deref(w)?.inner.to_string())))
}

/// # Safety
/// `a`, `b` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_braid_concat(
    a: *const SbBraidWord,
    b: *const SbBraidWord,
    out: *mut *mut SbBraidWord,
) -> SbStatus {
    guard(|| {
        let inner = deref(a)?.inner.concat(&deref(b)?.inner)?;
        write_out(out, Box::into_raw(Box::new(SbBraidWord { inner })))
    })
}

/// # Safety
/// `w` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_braid_invert(
    w: *const SbBraidWord,
    out: *mut *mut SbBraidWord,
) -> SbStatus {
    guard(|| {
        let inner = deref(w)?.inner.invert();
        write_out(out, Box::into_raw(Box::new(SbBraidWord { inner })))
    })
}

/// Decides triviality of a 3-strand word.
///
/// # Safety
/// `w` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_braid_is_trivial(w: *const SbBraidWord, out: *mut bool) -> SbStatus {
    guard(|| write_out(out, is_trivial_sg3(&deref(w)?.inner)?))
}

/// Quotient invariants only; `false` proves nontriviality, `true` proves
/// nothing.
///
/// # Safety
/// `w` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_braid_necessary_trivial(
    w: *const SbBraidWord,
    out: *mut bool,
) -> SbStatus {
    guard(|| write_out(out, sg3_necessary_trivial(&deref(w)?.inner)?))
}

/// Rewrites a pure 3-strand word into the six-letter alphabet.
///
/// # Safety
/// `w` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_braid_rewrite(
    w: *const SbBraidWord,
    out: *mut *mut SbSpWord,
) -> SbStatus {
    guard(|| {
        let inner = rewrite_to_sp3(&deref(w)?.inner)?;
        write_out(out, Box::into_raw(Box::new(SbSpWord { inner })))
    })
}

/// Parses a word such as `a12 b13^-1`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_sp_parse(text: *const c_char, out: *mut *mut SbSpWord) -> SbStatus {
    guard(|| {
        let inner = parse_sp_word(read_str(text)?)?;
        write_out(out, Box::into_raw(Box::new(SbSpWord { inner })))
    })
}

/// # Safety
/// `w` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_sp_free(w: *mut SbSpWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// # Safety
/// `w` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_sp_to_string(w: *const SbSpWord, out: *mut *mut c_char) -> SbStatus {
    guard(|| write_out(out, into_c_string(deref(w)?.inner.to_string())))
}

/// Normal form rendered as `d^<k> | <hnn form>`, or `1`.
///
/// # Safety
/// `w` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_sp_normal_form(w: *const SbSpWord, out: *mut *mut c_char) -> SbStatus {
    guard(|| {
        write_out(
            out,
            into_c_string(center_split(&deref(w)?.inner).to_string()),
        )
    })
}

/// # Safety
/// `w` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_sp_is_trivial(w: *const SbSpWord, out: *mut bool) -> SbStatus {
    guard(|| write_out(out, is_trivial_sp3(&deref(w)?.inner)))
}

/// # Safety
/// `a`, `b` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_sp_equal(
    a: *const SbSpWord,
    b: *const SbSpWord,
    out: *mut bool,
) -> SbStatus {
    guard(|| write_out(out, equal_sp3(&deref(a)?.inner, &deref(b)?.inner)))
}

/// Computes `g^-1 w g` for a letter such as `t1` or `s2^-1`.
///
/// # Safety
/// `w` must be a live handle, `letter` a NUL-terminated string and `out` a
/// writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_sp_conjugate(
    w: *const SbSpWord,
    letter: *const c_char,
    out: *mut *mut SbSpWord,
) -> SbStatus {
    guard(|| {
        let g = GeneratorLetter::parse(read_str(letter)?, 3)?;
        let inner = conjugate_by_sg3_generator(&deref(w)?.inner, g)?;
        write_out(out, Box::into_raw(Box::new(SbSpWord { inner })))
    })
}

/// Runs the full presentation check suite.
///
/// # Safety
/// `passed` and `total` must be writable pointers.
#[no_mangle]
pub unsafe extern "C" fn sb_verify(passed: *mut usize, total: *mut usize) -> SbStatus {
    guard(|| {
        let report = verify_presentation()?;
        write_out(passed, report.passed())?;
        write_out(total, report.total())
    })
}
