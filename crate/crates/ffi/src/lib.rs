//! C interface to the plcolor engine.
//!
//! Graphs and tables are opaque handles created by `plc_*_new`/`plc_graph_from_*`
//! and released by the matching `*_free`. Every call returns a [`PlcStatus`];
//! on failure `plc_last_error` describes it (per thread, until the next call).
//! Strings handed out by the library must be released with `plc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use plcolor::checks::{check_all, CheckConfig, MemoTables};
use plcolor::{
    chromatic_number, independence_number, lambda_t, lambda_table_with, list_chromatic_number, AdversaryOptions, Caps,
    Error, Graph, LambdaTable,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlcStatus {
    Ok = 0,
    NullPointer = 1,
    ParseError = 2,
    InvalidArgument = 3,
    TooLarge = 4,
    Integrity = 5,
    Io = 6,
    Panic = 7,
}

/// Search limits. `palette = 0` means the default `n * t`.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct PlcOptions {
    pub max_vertices: usize,
    pub max_t: usize,
    pub palette: usize,
    pub unsafe_caps: bool,
}

pub struct PlcGraph {
    graph: Graph,
}

pub struct PlcTable {
    table: LambdaTable,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(PlcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) | Error::Input { .. } => PlcStatus::ParseError,
            Error::TooLarge(_) => PlcStatus::TooLarge,
            Error::Integrity(_) => PlcStatus::Integrity,
            Error::Io(_) | Error::CacheMiss(_) => PlcStatus::Io,
            _ => PlcStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(PlcStatus::NullPointer, format!("{what} is null"))
}

fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> PlcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            PlcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&format!("internal panic: {msg}"));
            PlcStatus::Panic
        }
    }
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null("input string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(PlcStatus::ParseError, "input is not UTF-8".into()))
}

unsafe fn graph<'a>(g: *const PlcGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|g| &g.graph).ok_or_else(|| null("graph"))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn options(o: *const PlcOptions) -> (AdversaryOptions, usize) {
    let Some(o) = o.as_ref() else {
        let d = AdversaryOptions::default();
        let t_max = d.caps.max_t;
        return (d, t_max);
    };
    let caps = if o.unsafe_caps { Caps::unlimited() } else { Caps { max_vertices: o.max_vertices, max_t: o.max_t } };
    let t_max = caps.max_t;
    let palette = (o.palette > 0).then_some(o.palette);
    (AdversaryOptions { caps, palette, ..Default::default() }, t_max)
}

/// The default limits: 10 vertices after peeling, t at most 4.
#[no_mangle]
pub extern "C" fn plc_options_default() -> PlcOptions {
    let c = Caps::default();
    PlcOptions { max_vertices: c.max_vertices, max_t: c.max_t, palette: 0, unsafe_caps: false }
}

/// Message for the last failed call on this thread; empty after a success.
#[no_mangle]
pub extern "C" fn plc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plc_graph_from_graph6(text: *const c_char, out: *mut *mut PlcGraph) -> PlcStatus {
    guard(|| {
        let g = Graph::from_graph6(c_str(text)?.trim()).map_err(Error::from)?;
        put(out, Box::into_raw(Box::new(PlcGraph { graph: g })))
    })
}

/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plc_graph_from_edge_list(text: *const c_char, out: *mut *mut PlcGraph) -> PlcStatus {
    guard(|| {
        let g = Graph::from_edge_list(c_str(text)?).map_err(Error::from)?;
        put(out, Box::into_raw(Box::new(PlcGraph { graph: g })))
    })
}

/// # Safety
/// `g` must come from this library (or be null) and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn plc_graph_free(g: *mut PlcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plc_graph_order(g: *const PlcGraph, out: *mut usize) -> PlcStatus {
    guard(|| put(out, graph(g)?.n()))
}

/// The graph6 encoding; release with `plc_string_free`.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plc_graph_to_graph6(g: *const PlcGraph, out: *mut *mut c_char) -> PlcStatus {
    guard(|| {
        let s = CString::new(graph(g)?.to_graph6()).expect("graph6 has no NUL");
        put(out, s.into_raw())
    })
}

/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plc_chromatic_number(g: *const PlcGraph, out: *mut usize) -> PlcStatus {
    guard(|| put(out, chromatic_number(graph(g)?)))
}

/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plc_independence_number(g: *const PlcGraph, out: *mut usize) -> PlcStatus {
    guard(|| put(out, independence_number(graph(g)?)))
}

/// λ_t(G). `opts` may be null for the defaults.
///
/// # Safety
/// `g` must be a live graph handle, `opts` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plc_lambda_t(
    g: *const PlcGraph,
    t: usize,
    opts: *const PlcOptions,
    out: *mut usize,
) -> PlcStatus {
    guard(|| {
        let (o, _) = options(opts);
        put(out, lambda_t(graph(g)?, t, &o)?.value)
    })
}

/// # Safety
/// `g` must be a live graph handle, `opts` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plc_list_chromatic_number(
    g: *const PlcGraph,
    opts: *const PlcOptions,
    out: *mut usize,
) -> PlcStatus {
    guard(|| {
        let (o, _) = options(opts);
        put(out, list_chromatic_number(graph(g)?, &o)?)
    })
}

/// λ_0, ..., λ_{χ_ℓ} of `g`.
///
/// # Safety
/// `g` must be a live graph handle, `opts` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plc_table_new(
    g: *const PlcGraph,
    opts: *const PlcOptions,
    out: *mut *mut PlcTable,
) -> PlcStatus {
    guard(|| {
        let (o, t_max) = options(opts);
        let table = lambda_table_with(graph(g)?, t_max, |g, t| lambda_t(g, t, &o))?;
        put(out, Box::into_raw(Box::new(PlcTable { table })))
    })
}

/// # Safety
/// `t` must come from this library (or be null) and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn plc_table_free(t: *mut PlcTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `tab` must be a live table handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plc_table_chi_l(tab: *const PlcTable, out: *mut usize) -> PlcStatus {
    guard(|| put(out, tab.as_ref().ok_or_else(|| null("table"))?.table.chi_l))
}

/// λ_t from the table; `n` for t past χ_ℓ.
///
/// # Safety
/// `tab` must be a live table handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plc_table_lambda(tab: *const PlcTable, t: usize, out: *mut usize) -> PlcStatus {
    guard(|| put(out, tab.as_ref().ok_or_else(|| null("table"))?.table.lambda(t)))
}

/// Every verdict for `g` as a JSON document; release with `plc_string_free`.
///
/// # Safety
/// `g` must be a live graph handle, `opts` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plc_check_report_json(
    g: *const PlcGraph,
    opts: *const PlcOptions,
    out: *mut *mut c_char,
) -> PlcStatus {
    guard(|| {
        let g = graph(g)?;
        let (o, t_max) = options(opts);
        let table = lambda_table_with(g, t_max, |g, t| lambda_t(g, t, &o))?;
        let mut tables = MemoTables::new(o);
        let report = check_all(g, &table, &CheckConfig::default(), &mut tables)?;
        let json = serde_json::to_string(&report).expect("reports serialize");
        put(out, CString::new(json).expect("JSON has no NUL").into_raw())
    })
}

/// # Safety
/// `s` must be a string returned by this library (or null), freed once.
#[no_mangle]
pub unsafe extern "C" fn plc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
