//! C ABI over the `hypersoft` core.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns an
//! [`HsStatus`]; on failure the message is available from
//! [`hs_last_error`] on the same thread. Strings handed out by the library
//! are NUL-terminated UTF-8 and must be released with [`hs_string_free`].
//! Reports are returned as JSON with the same shape as the CLI's `--json`
//! output.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hypersoft::algebra::{check_axioms, AxiomMode, HyperVectorSpace};
use hypersoft::io::{self, Document, Section};
use hypersoft::soft::{self, BipolarFuzzySoftSet};
use hypersoft::{hvs_ops, structure, transform};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input text failed to parse.
    Parse = 3,
    /// The arguments were well-formed but rejected (mismatched carriers,
    /// unknown parameters, out-of-range scalars).
    Invalid = 4,
    /// A named section was absent or ambiguous.
    NotFound = 5,
    /// The library panicked; this is a bug.
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsMode {
    Strict = 0,
    Compat = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsOp {
    Meet = 0,
    ExtendedMeet = 1,
    Join = 2,
    RestrictedJoin = 3,
    And = 4,
    Or = 5,
    Sum = 6,
    ExtendedSum = 7,
    Scale = 8,
    Negate = 9,
}

/// A parsed input document.
pub struct HsDocument(Document);

/// A hypervector space.
pub struct HsSpace(HyperVectorSpace);

/// A bipolar fuzzy soft set.
pub struct HsSoftSet(BipolarFuzzySoftSet);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(HsStatus, String);

impl From<hypersoft::Error> for Failure {
    fn from(e: hypersoft::Error) -> Self {
        Failure(HsStatus::Invalid, e.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> HsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HsStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HsStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(HsStatus::NullArgument, format!("`{what}` is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(HsStatus::InvalidUtf8, format!("`{what}` is not UTF-8")))
}

unsafe fn optional_text<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        text(p, what).map(Some)
    }
}

unsafe fn store<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn store_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s).map_err(|_| Failure(HsStatus::Internal, "output contains NUL".into()))?.into_raw();
    Ok(())
}

unsafe fn store_flag(out: *mut bool, v: bool) {
    if !out.is_null() {
        *out = v;
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure(HsStatus::Internal, e.to_string()))
}

fn find<'a>(doc: &'a Document, kind: &'a str, name: Option<&str>) -> Result<&'a Section, Failure> {
    match name {
        Some(n) => doc
            .get(n)
            .filter(|s| s.kind() == kind)
            .ok_or_else(|| Failure(HsStatus::NotFound, format!("no {kind} section `{n}`"))),
        None => {
            let mut all = doc.of_kind(kind);
            match (all.next(), all.next()) {
                (Some(s), None) => Ok(s),
                (None, _) => Err(Failure(HsStatus::NotFound, format!("no {kind} section"))),
                _ => Err(Failure(HsStatus::NotFound, format!("several {kind} sections; pass a name"))),
            }
        }
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn hs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn hs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses text in the section format.
///
/// # Safety
/// `input` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_document_parse(input: *const c_char, out: *mut *mut HsDocument) -> HsStatus {
    guard(|| {
        let t = text(input, "input")?;
        let doc = io::parse(t).map_err(|e| Failure(HsStatus::Parse, e.to_string()))?;
        store(out, HsDocument(doc))
    })
}

/// # Safety
/// `doc` must be null or a handle from [`hs_document_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hs_document_free(doc: *mut HsDocument) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

/// Copies out the hvs section `name`, or the only one when `name` is null.
///
/// # Safety
/// `doc` must be a live handle; `name` null or NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hs_document_space(
    doc: *const HsDocument,
    name: *const c_char,
    out: *mut *mut HsSpace,
) -> HsStatus {
    guard(|| {
        let doc = borrow(doc, "doc")?;
        match find(&doc.0, "hvs", optional_text(name, "name")?)? {
            Section::Hvs { space, .. } => store(out, HsSpace(space.clone())),
            _ => unreachable!("filtered by kind"),
        }
    })
}

/// Copies out the bfss section `name`, or the only one when `name` is null.
///
/// # Safety
/// As for [`hs_document_space`].
#[no_mangle]
pub unsafe extern "C" fn hs_document_soft_set(
    doc: *const HsDocument,
    name: *const c_char,
    out: *mut *mut HsSoftSet,
) -> HsStatus {
    guard(|| {
        let doc = borrow(doc, "doc")?;
        match find(&doc.0, "bfss", optional_text(name, "name")?)? {
            Section::Bfss { set, .. } => store(out, HsSoftSet(set.clone())),
            _ => unreachable!("filtered by kind"),
        }
    })
}

/// # Safety
/// `space` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_space_free(space: *mut HsSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Number of vectors, or 0 for a null handle.
///
/// # Safety
/// `space` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_space_dim(space: *const HsSpace) -> usize {
    space.as_ref().map_or(0, |s| s.0.dim())
}

/// # Safety
/// `set` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_soft_set_free(set: *mut HsSoftSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Number of parameters, or 0 for a null handle.
///
/// # Safety
/// `set` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_soft_set_len(set: *const HsSoftSet) -> usize {
    set.as_ref().map_or(0, |s| s.0.len())
}

/// Canonical text of `set` as a bfss section called `name`.
///
/// # Safety
/// `set` live; `name` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hs_soft_set_print(
    set: *const HsSoftSet,
    name: *const c_char,
    out: *mut *mut c_char,
) -> HsStatus {
    guard(|| {
        let set = borrow(set, "set")?;
        store_string(out, io::print_bfss(text(name, "name")?, &set.0))
    })
}

/// Audits the axioms. Writes the JSON report to `out_json` (if non-null)
/// and the overall verdict to `out_passed` (if non-null).
///
/// # Safety
/// `space` live; output pointers null or writable.
#[no_mangle]
pub unsafe extern "C" fn hs_check_axioms(
    space: *const HsSpace,
    mode: HsMode,
    out_json: *mut *mut c_char,
    out_passed: *mut bool,
) -> HsStatus {
    guard(|| {
        let space = borrow(space, "space")?;
        let mode = match mode {
            HsMode::Strict => AxiomMode::STRICT,
            HsMode::Compat => AxiomMode::COMPAT,
        };
        let report = check_axioms(&space.0, mode);
        store_flag(out_passed, report.passed());
        if !out_json.is_null() {
            store_string(out_json, to_json(&report)?)?;
        }
        Ok(())
    })
}

/// Checks every parameter of `set` against the subhyperspace conditions.
///
/// # Safety
/// As for [`hs_check_axioms`].
#[no_mangle]
pub unsafe extern "C" fn hs_check_bfshvs(
    set: *const HsSoftSet,
    space: *const HsSpace,
    out_json: *mut *mut c_char,
    out_passed: *mut bool,
) -> HsStatus {
    guard(|| {
        let (set, space) = (borrow(set, "set")?, borrow(space, "space")?);
        let report = structure::is_bfs_hypervector_space(&set.0, &space.0)?;
        store_flag(out_passed, report.verdict);
        if !out_json.is_null() {
            store_string(out_json, to_json(&report)?)?;
        }
        Ok(())
    })
}

/// Writes whether `f ⊑ g` to `out_subset`.
///
/// # Safety
/// `f`, `g` live; `out_subset` writable.
#[no_mangle]
pub unsafe extern "C" fn hs_soft_set_subset(
    f: *const HsSoftSet,
    g: *const HsSoftSet,
    out_subset: *mut bool,
) -> HsStatus {
    guard(|| {
        let (f, g) = (borrow(f, "f")?, borrow(g, "g")?);
        if out_subset.is_null() {
            return Err(null("out_subset"));
        }
        *out_subset = soft::is_subset(&f.0, &g.0)?.is_ok();
        Ok(())
    })
}

/// Applies `op`. Binary operations read `g`; `Sum`, `ExtendedSum`, `Scale`
/// and `Negate` read `space`; `Scale` reads `scalar`. Unused pointers may
/// be null.
///
/// # Safety
/// Pointers the operation reads must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hs_soft_set_op(
    op: HsOp,
    f: *const HsSoftSet,
    g: *const HsSoftSet,
    space: *const HsSpace,
    scalar: usize,
    out: *mut *mut HsSoftSet,
) -> HsStatus {
    guard(|| {
        let f = &borrow(f, "f")?.0;
        let g = || borrow(g, "g").map(|g| &g.0);
        let v = || borrow(space, "space").map(|s| &s.0);
        let result = match op {
            HsOp::Meet => soft::intersection(f, g()?)?,
            HsOp::ExtendedMeet => soft::extended_intersection(f, g()?)?,
            HsOp::Join => soft::union(f, g()?)?,
            HsOp::RestrictedJoin => soft::restricted_union(f, g()?)?,
            HsOp::And => soft::and_product(f, g()?)?,
            HsOp::Or => soft::or_product(f, g()?)?,
            HsOp::Sum => hvs_ops::soft_sum(f, g()?, v()?)?,
            HsOp::ExtendedSum => hvs_ops::soft_extended_sum(f, g()?, v()?)?,
            HsOp::Scale => hvs_ops::scalar_product(scalar, f, v()?)?,
            HsOp::Negate => hvs_ops::soft_negate(f, v()?)?,
        };
        store(out, HsSoftSet(result))
    })
}

/// Classifies the map section `map` (or the only one when null) and writes
/// the JSON report and whether it is linear.
///
/// # Safety
/// `doc` live; `map` null or NUL-terminated; outputs null or writable.
#[no_mangle]
pub unsafe extern "C" fn hs_classify_map(
    doc: *const HsDocument,
    map: *const c_char,
    out_json: *mut *mut c_char,
    out_linear: *mut bool,
) -> HsStatus {
    guard(|| {
        let doc = &borrow(doc, "doc")?.0;
        let Section::Map { from, to, function, .. } = find(doc, "map", optional_text(map, "map")?)? else {
            unreachable!("filtered by kind")
        };
        let (v, w) = (doc.hvs(from).expect("resolved"), doc.hvs(to).expect("resolved"));
        let report = transform::classify_map(function.phi(), v, w)?;
        store_flag(out_linear, report.linear);
        if !out_json.is_null() {
            store_string(out_json, to_json(&report)?)?;
        }
        Ok(())
    })
}

/// Image (`inverse == false`) or preimage of `set` under the map section
/// `map` (or the only one when null).
///
/// # Safety
/// As for [`hs_classify_map`]; `set` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hs_map_apply(
    doc: *const HsDocument,
    map: *const c_char,
    set: *const HsSoftSet,
    inverse: bool,
    out: *mut *mut HsSoftSet,
) -> HsStatus {
    guard(|| {
        let doc = &borrow(doc, "doc")?.0;
        let set = &borrow(set, "set")?.0;
        let Section::Map { from, to, function, .. } = find(doc, "map", optional_text(map, "map")?)? else {
            unreachable!("filtered by kind")
        };
        let side = doc.hvs(if inverse { to } else { from }).expect("resolved");
        if side.dim() != set.carrier() {
            return Err(Failure(HsStatus::Invalid, format!("carrier {} does not match the map", set.carrier())));
        }
        let result = if inverse { transform::preimage(function, set)? } else { transform::image(function, set)? };
        store(out, HsSoftSet(result))
    })
}
