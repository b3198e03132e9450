//! C ABI over the chromsym library.
//!
//! Objects are opaque handles created and freed through this interface.
//! Every fallible call returns a `ChromsymStatus`; on failure the message is
//! available from `chromsym_last_error` until the next call on the same thread.
//! Strings returned through out-parameters must be released with
//! `chromsym_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use chromsym::cli;
use chromsym::combinatorics::Partition;
use chromsym::graphs::{csf_powersum, SimpleGraph};
use chromsym::sym::{positivity_report, PositivityClass, SymBasis, SymElement};
use chromsym::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChromsymStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    CapExceeded = 4,
    Io = 5,
    Utf8 = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChromsymBasis {
    Monomial = 0,
    Elementary = 1,
    Homogeneous = 2,
    PowerSum = 3,
    Schur = 4,
}

impl From<ChromsymBasis> for SymBasis {
    fn from(b: ChromsymBasis) -> Self {
        match b {
            ChromsymBasis::Monomial => SymBasis::Monomial,
            ChromsymBasis::Elementary => SymBasis::E,
            ChromsymBasis::Homogeneous => SymBasis::H,
            ChromsymBasis::PowerSum => SymBasis::P,
            ChromsymBasis::Schur => SymBasis::S,
        }
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChromsymPositivity {
    EPositive = 0,
    SchurPositive = 1,
    NotSchurPositive = 2,
}

/// Opaque simple graph.
pub struct ChromsymGraph(SimpleGraph);

/// Opaque homogeneous symmetric function.
pub struct ChromsymElement(SymElement);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> ChromsymStatus {
    match e {
        Error::Parse { .. } | Error::Fixture(_) => ChromsymStatus::Parse,
        Error::CapExceeded { .. } => ChromsymStatus::CapExceeded,
        Error::Io(_) => ChromsymStatus::Io,
        _ => ChromsymStatus::InvalidArgument,
    }
}

/// Runs `f`, translating errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), (ChromsymStatus, String)>) -> ChromsymStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            ChromsymStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ChromsymStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (ChromsymStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (ChromsymStatus, String) {
    (ChromsymStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (ChromsymStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (ChromsymStatus::Utf8, format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (ChromsymStatus, String)> {
    let c = CString::new(s).map_err(|_| (ChromsymStatus::Utf8, "interior NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn chromsym_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn chromsym_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The path P_n.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn chromsym_graph_path(n: usize, out: *mut *mut ChromsymGraph) -> ChromsymStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let g = SimpleGraph::path(n).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(ChromsymGraph(g)));
        Ok(())
    })
}

/// The spider with the given leg lengths.
///
/// # Safety
/// `legs` must point to `len` readable values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_graph_spider(
    legs: *const usize,
    len: usize,
    out: *mut *mut ChromsymGraph,
) -> ChromsymStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if legs.is_null() && len > 0 {
            return Err(null("legs"));
        }
        let v = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(legs, len).to_vec()
        };
        let g = SimpleGraph::spider(&Partition::from_unsorted(v)).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(ChromsymGraph(g)));
        Ok(())
    })
}

/// A graph from edge-list text: one 1-indexed `u v` pair per line, `#` comments allowed.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_graph_parse(
    text: *const c_char,
    out: *mut *mut ChromsymGraph,
) -> ChromsymStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let s = read_str(text, "text")?;
        let g = SimpleGraph::parse_edge_list(s).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(ChromsymGraph(g)));
        Ok(())
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn chromsym_graph_vertex_count(g: *const ChromsymGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` must be null or a live graph handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn chromsym_graph_free(g: *mut ChromsymGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// X_G in the requested basis, refusing graphs with more than `max_edges` edges.
///
/// # Safety
/// `g` must be a live graph handle and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_csf(
    g: *const ChromsymGraph,
    basis: ChromsymBasis,
    max_edges: usize,
    out: *mut *mut ChromsymElement,
) -> ChromsymStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let x = csf_powersum(&g.0, max_edges).map_err(lib_err)?.to_basis(basis.into());
        *out = Box::into_raw(Box::new(ChromsymElement(x)));
        Ok(())
    })
}

/// Rewrites the element in another basis, returning a new handle.
///
/// # Safety
/// `e` must be a live element handle and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_element_to_basis(
    e: *const ChromsymElement,
    basis: ChromsymBasis,
    out: *mut *mut ChromsymElement,
) -> ChromsymStatus {
    guard(|| {
        let e = e.as_ref().ok_or_else(|| null("element"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = Box::into_raw(Box::new(ChromsymElement(e.0.to_basis(basis.into()))));
        Ok(())
    })
}

/// Human-readable form, e.g. `s31 - s22 + 5s211 + 8s1111`.
///
/// # Safety
/// `e` must be a live element handle and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_element_to_string(
    e: *const ChromsymElement,
    out: *mut *mut c_char,
) -> ChromsymStatus {
    guard(|| {
        let e = e.as_ref().ok_or_else(|| null("element"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, e.0.to_string())
    })
}

/// JSON form with exact rational coefficients.
///
/// # Safety
/// `e` must be a live element handle and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_element_to_json(
    e: *const ChromsymElement,
    out: *mut *mut c_char,
) -> ChromsymStatus {
    guard(|| {
        let e = e.as_ref().ok_or_else(|| null("element"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = serde_json::to_string(&e.0).map_err(|err| (ChromsymStatus::Panic, err.to_string()))?;
        write_string(out, s)
    })
}

/// e-positive, Schur-positive, or neither.
///
/// # Safety
/// `e` must be a live element handle and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_element_positivity(
    e: *const ChromsymElement,
    out: *mut ChromsymPositivity,
) -> ChromsymStatus {
    guard(|| {
        let e = e.as_ref().ok_or_else(|| null("element"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = match positivity_report(&e.0).class {
            PositivityClass::EPositive => ChromsymPositivity::EPositive,
            PositivityClass::SchurPositive => ChromsymPositivity::SchurPositive,
            PositivityClass::NotSchurPositive => ChromsymPositivity::NotSchurPositive,
        };
        Ok(())
    })
}

/// # Safety
/// `e` must be null or a live element handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn chromsym_element_free(e: *mut ChromsymElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Runs a command-line invocation such as `verify lemma41 --n 10 --k 5` and
/// returns its JSON report. `exit_code` receives the CLI exit code (0 pass,
/// 1 fail, 2 cap exceeded, 64 usage). On a non-zero code `json_out` holds the
/// diagnostic text instead.
///
/// # Safety
/// `args` must be a NUL-terminated string; `json_out` and `exit_code` must be valid.
#[no_mangle]
pub unsafe extern "C" fn chromsym_verify(
    args: *const c_char,
    json_out: *mut *mut c_char,
    exit_code: *mut i32,
) -> ChromsymStatus {
    guard(|| {
        let s = read_str(args, "args")?;
        if json_out.is_null() || exit_code.is_null() {
            return Err(null("out"));
        }
        let argv = ["chromsym", "--json"].into_iter().chain(s.split_whitespace());
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = cli::run(argv, &mut out, &mut err);
        *exit_code = code;
        let text = if code == cli::EXIT_PASS || code == cli::EXIT_FAIL { out } else { err };
        write_string(json_out, String::from_utf8_lossy(&text).into_owned())
    })
}
