//! C ABI over the `sidorenko` crate.
//!
//! Objects cross the boundary as opaque handles created by `*_from_*`
//! functions and released with the matching `*_free`. Every call returns a
//! [`SidStatus`]; on failure [`sid_last_error`] describes the problem.
//! Structured data (complexes, graphs, certificates, reports) travels as JSON
//! strings in the same formats the CLI reads and writes. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`sid_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sidorenko::catalog;
use sidorenko::certify::{
    decide_with_options, is_thick, is_weakly_thick, thickness_problem, verify_certificate, verify_refutation,
    CertificateFile, Claim, Decision, Limits, Mode, Options, RefutationFile,
};
use sidorenko::graph::{FrameGraph, TargetGraph};
use sidorenko::homcount::{count_hom, sidorenko_check};
use sidorenko::io::{from_json, to_json, ComplexFile, Loaded};
use sidorenko::measures::{evaluate_scheme, witness_check};
use sidorenko::Error;

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SidStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    SizeCap = 4,
    Arity = 5,
    Precondition = 6,
    NotInClass = 7,
    MalformedCertificate = 8,
    Unsupported = 9,
    InvalidInput = 10,
    EmptySupport = 11,
    Panic = 12,
}

/// Which set function a certification is about.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SidClaim {
    /// Thick for graphs, weakly thick otherwise.
    Default = 0,
    Thick = 1,
    WeaklyThick = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SidMode {
    /// Constructive route, then restricted LP, then full LP.
    Auto = 0,
    Restricted = 1,
    Full = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SidVerdict {
    Member = 0,
    NotMember = 1,
    Inconclusive = 2,
}

/// A complex (from a trace or an explicit reducible b-hypergraph).
pub struct SidComplex {
    file: ComplexFile,
    loaded: Loaded,
}

/// A pattern graph or uniform hypergraph.
pub struct SidGraph(FrameGraph);

/// A target graph or uniform hypergraph with at least one edge.
pub struct SidTarget(TargetGraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SidStatus {
    match e {
        Error::Parse(_) | Error::Io(_) => SidStatus::Parse,
        Error::SizeCap { .. } => SidStatus::SizeCap,
        Error::Arity(_) => SidStatus::Arity,
        Error::Precondition(_) => SidStatus::Precondition,
        Error::NotInClass(_) => SidStatus::NotInClass,
        Error::MalformedCertificate(_) => SidStatus::MalformedCertificate,
        Error::Unsupported(_) => SidStatus::Unsupported,
        Error::EmptySupport => SidStatus::EmptySupport,
        _ => SidStatus::InvalidInput,
    }
}

struct Fail(SidStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SidStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SidStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SidStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(SidStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(SidStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

/// Writes an owned C string to `out` unless `out` is null.
unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if !out.is_null() {
        let c = CString::new(s).map_err(|_| Fail(SidStatus::InvalidInput, "string contains NUL".into()))?;
        out.write(c.into_raw());
    }
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> Result<String, Fail> {
    Ok(to_json(value)?)
}

/// Library version, as a static string.
#[no_mangle]
pub extern "C" fn sid_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sid_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sid_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a complex file (`{arity, trace}` or `{arity, vertices, edges, relation}`).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sid_complex_from_json(json: *const c_char, out: *mut *mut SidComplex) -> SidStatus {
    guard(|| {
        let file: ComplexFile = from_json(text(json, "json")?)?;
        let loaded = file.load()?;
        put(out, Box::into_raw(Box::new(SidComplex { file, loaded })), "out")
    })
}

/// Builds a catalog construction by name with `n_params` integer parameters.
///
/// # Safety
/// `name` must be a NUL-terminated string; `params` must point to
/// `n_params` values (or be null when `n_params` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sid_complex_from_catalog(
    name: *const c_char,
    params: *const u32,
    n_params: usize,
    out: *mut *mut SidComplex,
) -> SidStatus {
    guard(|| {
        let name = text(name, "name")?;
        let params: &[u32] = match n_params {
            0 => &[],
            _ if params.is_null() => return Err(null("params")),
            n => std::slice::from_raw_parts(params, n),
        };
        let entry = catalog::build(name, params)?;
        let file = ComplexFile::from_complex(&entry.complex);
        put(out, Box::into_raw(Box::new(SidComplex { file, loaded: Loaded::Traced(entry.complex) })), "out")
    })
}

/// # Safety
/// `c` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sid_complex_free(c: *mut SidComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Serializes the complex in the file format it was read in.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sid_complex_to_json(c: *const SidComplex, out: *mut *mut c_char) -> SidStatus {
    guard(|| {
        let c = handle(c, "complex")?;
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, json(&c.file)?)
    })
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sid_complex_vertex_count(c: *const SidComplex, out: *mut usize) -> SidStatus {
    guard(|| put(out, handle(c, "complex")?.loaded.base().vertex_count(), "out"))
}

/// The frame of the complex as a graph handle.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sid_complex_frame(c: *const SidComplex, out: *mut *mut SidGraph) -> SidStatus {
    guard(|| {
        let c = handle(c, "complex")?;
        let frame = sidorenko::complex::frame(c.loaded.base(), c.loaded.arity());
        put(out, Box::into_raw(Box::new(SidGraph(frame))), "out")
    })
}

/// Decides (weak) thickness. On `Member` the certificate file is written to
/// `out_json`, on `NotMember` the refutation file; on `Inconclusive` it is set
/// to null. `out_json` may itself be null. `max_ground` of 0 keeps the default.
///
/// # Safety
/// `c` must be a live handle; `out_verdict` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sid_certify(
    c: *const SidComplex,
    claim: SidClaim,
    mode: SidMode,
    max_ground: usize,
    out_verdict: *mut SidVerdict,
    out_json: *mut *mut c_char,
) -> SidStatus {
    guard(|| {
        let c = handle(c, "complex")?;
        if out_verdict.is_null() {
            return Err(null("out_verdict"));
        }
        let k = c.loaded.arity();
        let claim = match claim {
            SidClaim::Thick => Claim::Thick,
            SidClaim::WeaklyThick => Claim::WeaklyThick,
            SidClaim::Default if k == 2 => Claim::Thick,
            SidClaim::Default => Claim::WeaklyThick,
        };
        let mut limits = Limits::default();
        if max_ground > 0 {
            limits = limits.with_max_ground(max_ground);
        }
        let mode = match mode {
            SidMode::Auto => None,
            SidMode::Restricted => Some(Mode::Restricted),
            SidMode::Full => Some(Mode::Full),
        };
        let opts = Options { mode, limits };
        let problem = thickness_problem(c.loaded.base(), k, claim)?;
        let decision = match (&c.loaded, claim) {
            (Loaded::Traced(m), Claim::Thick) => is_thick(m, &opts)?,
            (Loaded::Traced(m), Claim::WeaklyThick) => is_weakly_thick(m, &opts)?,
            (Loaded::Explicit { .. }, _) => decide_with_options(&problem, &opts)?,
        };
        if !out_json.is_null() {
            out_json.write(ptr::null_mut());
        }
        let verdict = match decision {
            Decision::Member(cert) => {
                put_string(out_json, json(&CertificateFile::new(&problem, &cert, Some(claim)))?)?;
                SidVerdict::Member
            }
            Decision::NotMember(r) => {
                put_string(out_json, json(&RefutationFile::new(&problem, &r, Some(claim)))?)?;
                SidVerdict::NotMember
            }
            Decision::Inconclusive => SidVerdict::Inconclusive,
        };
        put(out_verdict, verdict, "out_verdict")
    })
}

/// Checks a certificate or refutation file against the complex. A
/// structurally invalid certificate yields `valid = false`, not an error.
///
/// # Safety
/// `c` must be a live handle; `json` a NUL-terminated string; `out_valid` writable.
#[no_mangle]
pub unsafe extern "C" fn sid_verify(c: *const SidComplex, json: *const c_char, out_valid: *mut bool) -> SidStatus {
    guard(|| {
        let c = handle(c, "complex")?;
        let value: serde_json::Value = from_json(text(json, "json")?)?;
        let k = c.loaded.arity();
        let default = if k == 2 { Claim::Thick } else { Claim::WeaklyThick };
        let verdict = if value.get("functional").is_some() {
            let f: RefutationFile = serde_json::from_value(value).map_err(Error::from)?;
            let p = thickness_problem(c.loaded.base(), k, f.claim.unwrap_or(default))?;
            let same = p.ground.vertices() == f.ground.as_slice() && p.target == f.target()?;
            if same { verify_refutation(&p, &f.refutation()?) } else { Ok(false) }
        } else {
            let f: CertificateFile = serde_json::from_value(value).map_err(Error::from)?;
            let p = thickness_problem(c.loaded.base(), k, f.claim.unwrap_or(default))?;
            let same = p.ground.vertices() == f.ground.as_slice() && p.target == f.target()?;
            if same { f.certificate().and_then(|cert| verify_certificate(&p, &cert)) } else { Ok(false) }
        };
        let valid = match verdict {
            Ok(v) => v,
            Err(Error::MalformedCertificate(_) | Error::InvalidSubset(_)) => false,
            Err(e) => return Err(e.into()),
        };
        put(out_valid, valid, "out_valid")
    })
}

/// Parses `{vertices, edges}` as a pattern graph.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sid_graph_from_json(json: *const c_char, out: *mut *mut SidGraph) -> SidStatus {
    guard(|| {
        let g: FrameGraph = from_json(text(json, "json")?)?;
        put(out, Box::into_raw(Box::new(SidGraph(g))), "out")
    })
}

/// # Safety
/// `g` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sid_graph_free(g: *mut SidGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Parses `{vertices, edges}` as a target; it needs at least one edge.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sid_target_from_json(json: *const c_char, out: *mut *mut SidTarget) -> SidStatus {
    guard(|| {
        let g = TargetGraph::new(from_json(text(json, "json")?)?)?;
        put(out, Box::into_raw(Box::new(SidTarget(g))), "out")
    })
}

/// # Safety
/// `g` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sid_target_free(g: *mut SidTarget) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// `|Hom(H,G)|`.
///
/// # Safety
/// `h`, `g` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sid_hom_count(h: *const SidGraph, g: *const SidTarget, out: *mut u64) -> SidStatus {
    guard(|| {
        let n = count_hom(&handle(h, "h")?.0, &handle(g, "g")?.0)?;
        let n = u64::try_from(n).map_err(|_| Fail(SidStatus::SizeCap, "count exceeds 64 bits".into()))?;
        put(out, n, "out")
    })
}

/// Exact check of `t(H,G) >= t(e,G)^|E(H)|`. The report (`homomorphisms`,
/// `lhs`, `rhs` as "p/q", `holds`) goes to `out_json` unless it is null.
///
/// # Safety
/// `h`, `g` must be live handles; `out_holds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sid_sidorenko_check(
    h: *const SidGraph,
    g: *const SidTarget,
    out_holds: *mut bool,
    out_json: *mut *mut c_char,
) -> SidStatus {
    guard(|| {
        let r = sidorenko_check(&handle(h, "h")?.0, &handle(g, "g")?.0)?;
        if out_holds.is_null() {
            return Err(null("out_holds"));
        }
        put_string(out_json, json(&r)?)?;
        put(out_holds, r.holds, "out_holds")
    })
}

/// Builds the coupling measure of a traced complex on `g` and compares
/// `D(mu)` with `|E(H)|·D_e`. `max_state` of 0 keeps the default cap.
/// The measure table goes to `out_json` unless it is null.
///
/// # Safety
/// `c`, `g` must be live handles; `out_d_mu`, `out_bound`, `out_holds` writable.
#[no_mangle]
pub unsafe extern "C" fn sid_scheme_witness(
    c: *const SidComplex,
    g: *const SidTarget,
    max_state: u64,
    tol: f64,
    out_d_mu: *mut f64,
    out_bound: *mut f64,
    out_holds: *mut bool,
    out_json: *mut *mut c_char,
) -> SidStatus {
    guard(|| {
        let c = handle(c, "complex")?;
        let g = &handle(g, "g")?.0;
        if out_d_mu.is_null() || out_bound.is_null() || out_holds.is_null() {
            return Err(null("an output pointer"));
        }
        let m = c.loaded.traced()?;
        let cap = if max_state == 0 { sidorenko::measures::DEFAULT_STATE_CAP } else { max_state as u128 };
        let mu = evaluate_scheme(m, g, cap)?;
        let w = witness_check(&mu, &m.frame(), g, tol)?;
        put_string(out_json, json(&mu.to_file())?)?;
        put(out_d_mu, w.d_mu.to_f64(), "out_d_mu")?;
        put(out_bound, w.bound.to_f64().value(), "out_bound")?;
        put(out_holds, w.holds, "out_holds")
    })
}
