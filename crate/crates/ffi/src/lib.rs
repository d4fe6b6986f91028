//! C ABI over `resolab`. Objects cross the boundary as opaque handles that
//! the caller releases with the matching `*_free`. Every fallible call
//! returns a [`ResolabStatus`]; the message of the last failure on the
//! calling thread is available from [`resolab_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use resolab::geometry::BoundaryCurve;
use resolab::nystrom::{assemble_single_layer, smallest_singular_value};
use resolab::resolvent::kernel;
use resolab::resonance::{
    beyn_solve, disk_resonances, multiplicity_in, sphere_resonances, ContourSpec, ResonanceRecord, Source,
};
use resolab::special::{hankel1, BesselOrder};
use resolab::{Error, LogPoint, SectorRegion};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidCurve = 3,
    InvalidContour = 4,
    ContourOnResonance = 5,
    ProbeTooSmall = 6,
    RankWindingMismatch = 7,
    Unconverged = 8,
    ExcludedZone = 9,
    OutOfRange = 10,
    Io = 11,
    Panic = 12,
    Other = 13,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolabSource {
    Bie = 0,
    DiskOracle = 1,
    SphereOracle = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolabComplex {
    pub re: f64,
    pub im: f64,
}

/// A point `modulus · e^{i argument}` of the logarithmic cover.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolabLogPoint {
    pub modulus: f64,
    pub argument: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolabRecord {
    pub location: ResolabLogPoint,
    pub multiplicity: u32,
    pub residual: f64,
    pub source: ResolabSource,
}

/// Contour for the Beyn solver. Zero `nodes`, `rank_tol` or `probe_dim`
/// select the library defaults.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolabContour {
    pub center: ResolabLogPoint,
    pub radius: f64,
    pub nodes: usize,
    pub rank_tol: f64,
    pub probe_dim: usize,
}

/// Sector `arg_min < arg < arg_max`, `mod_min < |λ| < mod_max`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolabRegion {
    pub arg_min: f64,
    pub arg_max: f64,
    pub mod_min: f64,
    pub mod_max: f64,
}

/// Opaque boundary curve.
pub struct ResolabCurve(BoundaryCurve);

/// Opaque list of resonance records.
pub struct ResolabRecordList(Vec<ResonanceRecord>);

thread_local! {
    static LAST_ERROR: RefCell<Vec<u8>> = const { RefCell::new(Vec::new()) };
}

fn set_error(msg: &str) {
    LAST_ERROR.with(|e| {
        let mut e = e.borrow_mut();
        e.clear();
        e.extend_from_slice(msg.as_bytes());
    });
}

fn status_of(err: &Error) -> ResolabStatus {
    match err {
        Error::Domain(_) | Error::BumpTooWide { .. } | Error::Config(_) | Error::Json(_) => ResolabStatus::InvalidArgument,
        Error::InvalidCurve(_) | Error::NotInjective { .. } | Error::SingularJacobian(..) => ResolabStatus::InvalidCurve,
        Error::InvalidContour(_) => ResolabStatus::InvalidContour,
        Error::ContourOnResonance { .. } | Error::ContourExit { .. } => ResolabStatus::ContourOnResonance,
        Error::ProbeTooSmall { .. } => ResolabStatus::ProbeTooSmall,
        Error::RankWindingMismatch { .. } => ResolabStatus::RankWindingMismatch,
        Error::Unconverged(_) => ResolabStatus::Unconverged,
        Error::ExcludedZone(_) => ResolabStatus::ExcludedZone,
        Error::Io(_) | Error::Csv(_) => ResolabStatus::Io,
        Error::PreFlight(_) | Error::Stability(_) => ResolabStatus::Other,
    }
}

/// Run `body`, translating errors and panics into a status code.
fn guard<F: FnOnce() -> Result<(), (ResolabStatus, String)>>(body: F) -> ResolabStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => ResolabStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ResolabStatus::Panic
        }
    }
}

fn lib<T>(r: resolab::Result<T>) -> Result<T, (ResolabStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (ResolabStatus, String) {
    (ResolabStatus::NullPointer, format!("{what} is null"))
}

fn point(p: ResolabLogPoint) -> Result<LogPoint, (ResolabStatus, String)> {
    lib(LogPoint::new(p.modulus, p.argument))
}

fn contour(c: &ResolabContour) -> Result<ContourSpec, (ResolabStatus, String)> {
    let mut spec = ContourSpec::around(point(c.center)?, c.radius);
    if c.nodes != 0 {
        spec.nodes = c.nodes;
    }
    if c.rank_tol != 0.0 {
        spec.rank_tol = c.rank_tol;
    }
    if c.probe_dim != 0 {
        spec.probe_dim = c.probe_dim;
    }
    lib(spec.validate())?;
    Ok(spec)
}

fn region(r: &ResolabRegion) -> Result<SectorRegion, (ResolabStatus, String)> {
    lib(SectorRegion::new(r.arg_min, r.arg_max, r.mod_min, r.mod_max))
}

fn record(r: &ResonanceRecord) -> ResolabRecord {
    ResolabRecord {
        location: ResolabLogPoint { modulus: r.location.modulus, argument: r.location.argument },
        multiplicity: r.multiplicity,
        residual: r.residual,
        source: match r.source {
            Source::Bie => ResolabSource::Bie,
            Source::DiskOracle => ResolabSource::DiskOracle,
            Source::SphereOracle => ResolabSource::SphereOracle,
        },
    }
}

unsafe fn curve_ref<'a>(curve: *const ResolabCurve) -> Result<&'a BoundaryCurve, (ResolabStatus, String)> {
    curve.as_ref().map(|c| &c.0).ok_or_else(|| null("curve"))
}

unsafe fn emit_list(out: *mut *mut ResolabRecordList, records: Vec<ResonanceRecord>) {
    *out = Box::into_raw(Box::new(ResolabRecordList(records)));
}

/// Copies the last error message of this thread into `buf` as a
/// NUL-terminated string, truncating to `len - 1` bytes. Returns the full
/// message length in bytes, not counting the terminator.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn resolab_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = e.len().min(len - 1);
            ptr::copy_nonoverlapping(e.as_ptr(), buf as *mut u8, n);
            *buf.add(n) = 0;
        }
        e.len()
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn resolab_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// `H¹_ν(z)` for `ν = twice_order / 2` at a cover point.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn resolab_hankel1(twice_order: u32, z: ResolabLogPoint, out: *mut ResolabComplex) -> ResolabStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let v = hankel1(BesselOrder::from_twice(twice_order), point(z)?);
        *out = ResolabComplex { re: v.re, im: v.im };
        Ok(())
    })
}

/// Free resolvent kernel `R₀(λ, |x - y| = dist)` in dimension 2 or 3.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn resolab_kernel(dim: u32, lambda: ResolabLogPoint, dist: f64, out: *mut ResolabComplex) -> ResolabStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let v = lib(kernel(dim, point(lambda)?, dist))?;
        *out = ResolabComplex { re: v.re, im: v.im };
        Ok(())
    })
}

/// Named preset (`"disk"`, `"ellipse"`) discretized with `samples` nodes.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn resolab_curve_preset(name: *const c_char, samples: usize, out: *mut *mut ResolabCurve) -> ResolabStatus {
    guard(|| {
        if name.is_null() {
            return Err(null("name"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let name = CStr::from_ptr(name).to_str().map_err(|_| (ResolabStatus::InvalidArgument, "name is not UTF-8".into()))?;
        let curve = lib(BoundaryCurve::preset(name, samples))?;
        *out = Box::into_raw(Box::new(ResolabCurve(curve)));
        Ok(())
    })
}

/// Ellipse with semi-axes `a`, `b`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn resolab_curve_ellipse(a: f64, b: f64, samples: usize, out: *mut *mut ResolabCurve) -> ResolabStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let curve = lib(BoundaryCurve::ellipse(a, b, samples))?;
        *out = Box::into_raw(Box::new(ResolabCurve(curve)));
        Ok(())
    })
}

/// Curve from its JSON description (Fourier coefficients and sample count).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn resolab_curve_from_json(json: *const c_char, out: *mut *mut ResolabCurve) -> ResolabStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|_| (ResolabStatus::InvalidArgument, "json is not UTF-8".into()))?;
        let curve = lib(BoundaryCurve::from_json_str(text))?;
        *out = Box::into_raw(Box::new(ResolabCurve(curve)));
        Ok(())
    })
}

/// Rotated copy of `curve`.
///
/// # Safety
/// `curve` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn resolab_curve_rotated(curve: *const ResolabCurve, angle: f64, out: *mut *mut ResolabCurve) -> ResolabStatus {
    guard(|| {
        let c = curve_ref(curve)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let turned = lib(c.rotated(angle))?;
        *out = Box::into_raw(Box::new(ResolabCurve(turned)));
        Ok(())
    })
}

/// # Safety
/// `curve` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn resolab_curve_free(curve: *mut ResolabCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// Smallest singular value of the discretized single-layer operator.
///
/// # Safety
/// `curve` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn resolab_smallest_singular_value(
    curve: *const ResolabCurve,
    lambda: ResolabLogPoint,
    out: *mut f64,
) -> ResolabStatus {
    guard(|| {
        let c = curve_ref(curve)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = smallest_singular_value(&assemble_single_layer(c, point(lambda)?));
        Ok(())
    })
}

/// Zeros of `H¹_m`, `m <= m_max`, in `region`.
///
/// # Safety
/// `region` must be valid for reads; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn resolab_disk_resonances(
    m_max: u32,
    region: *const ResolabRegion,
    out: *mut *mut ResolabRecordList,
) -> ResolabStatus {
    guard(|| {
        let r = self::region(region.as_ref().ok_or_else(|| null("region"))?)?;
        if out.is_null() {
            return Err(null("out"));
        }
        emit_list(out, lib(disk_resonances(m_max, &r))?);
        Ok(())
    })
}

/// Zeros of the spherical Hankel functions `h¹_l`, `l <= l_max`, in `region`.
///
/// # Safety
/// `region` must be valid for reads; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn resolab_sphere_resonances(
    l_max: u32,
    region: *const ResolabRegion,
    out: *mut *mut ResolabRecordList,
) -> ResolabStatus {
    guard(|| {
        let r = self::region(region.as_ref().ok_or_else(|| null("region"))?)?;
        if out.is_null() {
            return Err(null("out"));
        }
        emit_list(out, lib(sphere_resonances(l_max, &r))?);
        Ok(())
    })
}

/// Resonances of `curve` inside `contour`.
///
/// # Safety
/// `curve` must be a live handle, `contour` valid for reads and `out` valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn resolab_beyn_solve(
    curve: *const ResolabCurve,
    contour: *const ResolabContour,
    out: *mut *mut ResolabRecordList,
) -> ResolabStatus {
    guard(|| {
        let c = curve_ref(curve)?;
        let spec = self::contour(contour.as_ref().ok_or_else(|| null("contour"))?)?;
        if out.is_null() {
            return Err(null("out"));
        }
        emit_list(out, lib(beyn_solve(c, &spec))?);
        Ok(())
    })
}

/// Total multiplicity inside `contour`, checked against the winding number.
///
/// # Safety
/// `curve` must be a live handle, `contour` valid for reads and `out` valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn resolab_multiplicity_in(
    curve: *const ResolabCurve,
    contour: *const ResolabContour,
    out: *mut usize,
) -> ResolabStatus {
    guard(|| {
        let c = curve_ref(curve)?;
        let spec = self::contour(contour.as_ref().ok_or_else(|| null("contour"))?)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = lib(multiplicity_in(c, &spec))?;
        Ok(())
    })
}

/// Number of records; 0 for a null list.
///
/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn resolab_records_len(list: *const ResolabRecordList) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// Copy record `index` into `out`.
///
/// # Safety
/// `list` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn resolab_records_get(
    list: *const ResolabRecordList,
    index: usize,
    out: *mut ResolabRecord,
) -> ResolabStatus {
    guard(|| {
        let l = list.as_ref().ok_or_else(|| null("list"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let r = l.0.get(index).ok_or_else(|| {
            (ResolabStatus::OutOfRange, format!("index {index} out of range for {} records", l.0.len()))
        })?;
        *out = record(r);
        Ok(())
    })
}

/// # Safety
/// `list` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn resolab_records_free(list: *mut ResolabRecordList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}
