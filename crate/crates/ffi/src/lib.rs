//! C interface to the `fcmt` law checker.
//!
//! Structures and reports are opaque handles owned by the caller and released
//! with their `_free` function. Every fallible call returns an [`FcmtStatus`];
//! on failure the message is available from [`fcmt_last_error`] until the
//! next call on the same thread. Strings returned through `char **` are owned
//! by the caller and released with [`fcmt_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fcmt::cli::{self, CheckConfig, Structure};
use fcmt::fc::{Bounds, LawReport};
use fcmt::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FcmtStatus {
    Ok = 0,
    /// A law failed; the report or output is still produced where possible
    LawViolation = 1,
    Malformed = 2,
    Parse = 3,
    Io = 4,
    BudgetExceeded = 5,
    Unsupported = 6,
    NullArgument = 7,
    InvalidUtf8 = 8,
    Panic = 9,
}

/// A parsed structure file.
pub struct FcmtStructure(Structure);

/// A law report, with its strings kept alive for the accessors.
pub struct FcmtReport {
    report: LawReport,
    laws: Vec<CString>,
    witnesses: Vec<CString>,
}

#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct FcmtCheckConfig {
    pub max_arity: usize,
    pub max_nesting: usize,
    pub max_cells_per_frame: usize,
    pub seed: u64,
    pub parallel: bool,
}

impl From<&FcmtCheckConfig> for CheckConfig {
    fn from(c: &FcmtCheckConfig) -> Self {
        CheckConfig {
            bounds: Bounds::new(c.max_arity, c.max_nesting, c.max_cells_per_frame),
            seed: c.seed,
            parallel: c.parallel,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

fn status_of(e: &Error) -> FcmtStatus {
    match e {
        Error::Parse { .. } => FcmtStatus::Parse,
        Error::Io(_) => FcmtStatus::Io,
        Error::BudgetExceeded { .. } => FcmtStatus::BudgetExceeded,
        Error::UnsupportedKind(_) => FcmtStatus::Unsupported,
        e if cli::exit_code(e) == 1 => FcmtStatus::LawViolation,
        _ => FcmtStatus::Malformed,
    }
}

/// Runs `f`, turning errors and panics into a status and the last error.
fn guard(f: impl FnOnce() -> Result<FcmtStatus, FcmtStatus>) -> FcmtStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) | Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            FcmtStatus::Panic
        }
    }
}

fn fail(e: Error) -> FcmtStatus {
    set_error(e.to_string());
    status_of(&e)
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, FcmtStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(FcmtStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        FcmtStatus::InvalidUtf8
    })
}

unsafe fn ref_arg<'a, T>(p: *const T) -> Result<&'a T, FcmtStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle argument");
        FcmtStatus::NullArgument
    })
}

fn out_arg<T>(p: *mut T) -> Result<(), FcmtStatus> {
    if p.is_null() {
        set_error("null output argument");
        return Err(FcmtStatus::NullArgument);
    }
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .unwrap_or_default()
        .into_raw()
}

fn report_handle(report: LawReport) -> *mut FcmtReport {
    let laws = report
        .violations
        .iter()
        .map(|v| CString::new(v.law.replace('\0', " ")).unwrap_or_default())
        .collect();
    let witnesses = report
        .violations
        .iter()
        .map(|v| CString::new(v.witness.replace('\0', " ")).unwrap_or_default())
        .collect();
    Box::into_raw(Box::new(FcmtReport {
        report,
        laws,
        witnesses,
    }))
}

/// The default bounds: arity 3, nesting 2, 10000 cells per frame, seed 0,
/// sequential.
#[no_mangle]
pub extern "C" fn fcmt_check_config_default() -> FcmtCheckConfig {
    let c = CheckConfig::default();
    FcmtCheckConfig {
        max_arity: c.bounds.max_arity,
        max_nesting: c.bounds.max_nesting,
        max_cells_per_frame: c.bounds.max_cells_per_frame,
        seed: c.seed,
        parallel: c.parallel,
    }
}

/// The message of the last failed call on this thread, or "" after a
/// successful one. Valid until the next call.
#[no_mangle]
pub extern "C" fn fcmt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fcmt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a structure file held in `text`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcmt_structure_parse(
    text: *const c_char,
    out: *mut *mut FcmtStructure,
) -> FcmtStatus {
    guard(|| {
        out_arg(out)?;
        *out = ptr::null_mut();
        let s = cli::parse(str_arg(text)?).map_err(fail)?;
        *out = Box::into_raw(Box::new(FcmtStructure(s)));
        Ok(FcmtStatus::Ok)
    })
}

/// Reads and parses the structure file at `path`.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcmt_structure_read(
    path: *const c_char,
    out: *mut *mut FcmtStructure,
) -> FcmtStatus {
    guard(|| {
        out_arg(out)?;
        *out = ptr::null_mut();
        let s = cli::format::read(std::path::Path::new(str_arg(path)?)).map_err(fail)?;
        *out = Box::into_raw(Box::new(FcmtStructure(s)));
        Ok(FcmtStatus::Ok)
    })
}

/// The demo structure `name`; `seed` only affects `random-subsets`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcmt_structure_demo(
    name: *const c_char,
    seed: u64,
    out: *mut *mut FcmtStructure,
) -> FcmtStatus {
    guard(|| {
        out_arg(out)?;
        *out = ptr::null_mut();
        let s = cli::demo::demo(str_arg(name)?, seed).map_err(fail)?;
        *out = Box::into_raw(Box::new(FcmtStructure(s)));
        Ok(FcmtStatus::Ok)
    })
}

/// Serializes a structure in the file format.
///
/// # Safety
/// `s` must be a live structure handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcmt_structure_to_json(
    s: *const FcmtStructure,
    out: *mut *mut c_char,
) -> FcmtStatus {
    guard(|| {
        out_arg(out)?;
        *out = ptr::null_mut();
        *out = c_string(cli::to_string(&ref_arg(s)?.0));
        Ok(FcmtStatus::Ok)
    })
}

/// The kind tag of a structure, as a static string; null for a null handle.
///
/// # Safety
/// `s` must be null or a live structure handle.
#[no_mangle]
pub unsafe extern "C" fn fcmt_structure_kind(s: *const FcmtStructure) -> *const c_char {
    let Some(s) = s.as_ref() else {
        return ptr::null();
    };
    match s.0 {
        Structure::SpanUniverse(_) => c"span-universe",
        Structure::Monoidal(_) => c"monoidal",
        Structure::Multicat(_) => c"multicat",
        Structure::Double(_) => c"double",
        Structure::Monad(_) => c"monad",
        Structure::Bimodule(_) => c"bimodule",
        Structure::Enriched(_) => c"enriched",
        Structure::SubsetFamily(_) => c"subset-family",
    }
    .as_ptr()
}

/// # Safety
/// `s` must be null or a live structure handle.
#[no_mangle]
pub unsafe extern "C" fn fcmt_structure_free(s: *mut FcmtStructure) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Checks the laws of `s`. A null `config` means the defaults. Returns
/// `LawViolation` when the report fails; the report is produced either way.
///
/// # Safety
/// `s` must be a live structure handle, `config` null or valid, and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcmt_check(
    s: *const FcmtStructure,
    config: *const FcmtCheckConfig,
    out: *mut *mut FcmtReport,
) -> FcmtStatus {
    guard(|| {
        out_arg(out)?;
        *out = ptr::null_mut();
        let s = ref_arg(s)?;
        let config = config.as_ref().map(CheckConfig::from).unwrap_or_default();
        let report = cli::check(&s.0, &config).map_err(fail)?;
        let pass = report.pass;
        if !pass {
            set_error(format!("{} law violations", report.violations.len()));
        }
        *out = report_handle(report);
        Ok(if pass {
            FcmtStatus::Ok
        } else {
            FcmtStatus::LawViolation
        })
    })
}

/// The Bim construction on `s`, listed as JSON.
///
/// # Safety
/// As for [`fcmt_check`], with `out` receiving a string.
#[no_mangle]
pub unsafe extern "C" fn fcmt_bim(
    s: *const FcmtStructure,
    config: *const FcmtCheckConfig,
    out: *mut *mut c_char,
) -> FcmtStatus {
    guard(|| {
        out_arg(out)?;
        *out = ptr::null_mut();
        let s = ref_arg(s)?;
        let config = config.as_ref().map(CheckConfig::from).unwrap_or_default();
        let inv = cli::bim(&s.0, &config).map_err(fail)?;
        *out = c_string(serde_json::to_string_pretty(&inv).expect("inventory serializes"));
        Ok(FcmtStatus::Ok)
    })
}

/// Transfers an enriched category or subset family to Bim, writing the
/// result as JSON and its law report as a handle. Either output may be null.
/// A failing source gives `LawViolation` and no outputs.
///
/// # Safety
/// As for [`fcmt_check`]; `json` and `report` may each be null.
#[no_mangle]
pub unsafe extern "C" fn fcmt_derive_bim(
    s: *const FcmtStructure,
    config: *const FcmtCheckConfig,
    json: *mut *mut c_char,
    report: *mut *mut FcmtReport,
) -> FcmtStatus {
    guard(|| {
        if !json.is_null() {
            *json = ptr::null_mut();
        }
        if !report.is_null() {
            *report = ptr::null_mut();
        }
        let s = ref_arg(s)?;
        let config = config.as_ref().map(CheckConfig::from).unwrap_or_default();
        let d = cli::derive_bim(&s.0, &config).map_err(fail)?;
        let pass = d.report.pass;
        if !json.is_null() {
            *json = c_string(serde_json::to_string_pretty(&d).expect("derived Bim serializes"));
        }
        if !report.is_null() {
            *report = report_handle(d.report);
        }
        Ok(if pass {
            FcmtStatus::Ok
        } else {
            FcmtStatus::LawViolation
        })
    })
}

/// # Safety
/// `r` must be a live report handle.
#[no_mangle]
pub unsafe extern "C" fn fcmt_report_pass(r: *const FcmtReport) -> bool {
    r.as_ref().is_some_and(|r| r.report.pass)
}

/// Total number of law instances checked.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn fcmt_report_checked(r: *const FcmtReport) -> u64 {
    r.as_ref().map_or(0, |r| r.report.checked_total())
}

/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn fcmt_report_violation_count(r: *const FcmtReport) -> usize {
    r.as_ref().map_or(0, |r| r.laws.len())
}

/// The law of violation `i`, valid while the report lives; null when out of
/// range.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn fcmt_report_violation_law(
    r: *const FcmtReport,
    i: usize,
) -> *const c_char {
    r.as_ref()
        .and_then(|r| r.laws.get(i))
        .map_or(ptr::null(), |s| s.as_ptr())
}

/// The witness of violation `i`, valid while the report lives; null when out
/// of range.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn fcmt_report_violation_witness(
    r: *const FcmtReport,
    i: usize,
) -> *const c_char {
    r.as_ref()
        .and_then(|r| r.witnesses.get(i))
        .map_or(ptr::null(), |s| s.as_ptr())
}

/// The report as JSON.
///
/// # Safety
/// `r` must be a live report handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcmt_report_to_json(
    r: *const FcmtReport,
    out: *mut *mut c_char,
) -> FcmtStatus {
    guard(|| {
        out_arg(out)?;
        *out = ptr::null_mut();
        *out =
            c_string(serde_json::to_string_pretty(&ref_arg(r)?.report).expect("report serializes"));
        Ok(FcmtStatus::Ok)
    })
}

/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn fcmt_report_free(r: *mut FcmtReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}
