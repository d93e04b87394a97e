//! C ABI over `hfmap`.
//!
//! Every fallible function returns an [`HfmapStatus`]; on failure a message is
//! available from [`hfmap_last_error`] until the next call on the same thread.
//! Handles are opaque and must be released with their `_free` function.
//! Strings returned through `char **` are owned by the caller and released
//! with [`hfmap_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hfmap::group::{parson_index, FiniteHeckeGroup, HeckeParams, DEFAULT_MAX_GROUP};
use hfmap::map::{build_algebraic_map_bounded, AlgebraicMap};
use hfmap::polygon::{pairing_rule_check, vertex_classes, PairingTable};
use hfmap::render::{render_quotient, render_universal, Model, QuotientFormat, RenderConfig};
use hfmap::verify::{run_all, VerifyOptions};
use hfmap::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfmapStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParams = 2,
    GroupTooLarge = 3,
    EvenModulus = 4,
    Parse = 5,
    InvalidPairing = 6,
    OutOfRange = 7,
    Failed = 8,
    Panic = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfmapModel {
    Disk = 0,
    HalfPlane = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfmapFormat {
    Svg = 0,
    Dot = 1,
}

/// Counts describing a quotient map.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HfmapInvariants {
    pub q: u32,
    pub n: u32,
    pub darts: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: i64,
    /// 0 when vertices have different valencies.
    pub vertex_valency: usize,
    /// 0 when faces have different sizes.
    pub face_size: usize,
}

pub struct HfmapGroup(FiniteHeckeGroup);
pub struct HfmapMap(AlgebraicMap);
pub struct HfmapPairing(PairingTable);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> HfmapStatus {
    match e {
        Error::GroupTooLarge { .. } => HfmapStatus::GroupTooLarge,
        Error::EvenModulus(_) => HfmapStatus::EvenModulus,
        Error::Parse { .. } | Error::UnknownLabel(_) => HfmapStatus::Parse,
        Error::InvalidPairing(_) => HfmapStatus::InvalidPairing,
        Error::DepthBound { .. } | Error::SearchBound { .. } => HfmapStatus::OutOfRange,
        Error::InvalidParams(_) => HfmapStatus::InvalidParams,
        _ => HfmapStatus::Failed,
    }
}

/// Runs `f`, recording errors and catching panics.
fn guard(f: impl FnOnce() -> Result<(), (HfmapStatus, String)>) -> HfmapStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HfmapStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            HfmapStatus::Panic
        }
    }
}

type Res<T> = Result<T, (HfmapStatus, String)>;

fn lib<T>(r: hfmap::Result<T>) -> Res<T> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (HfmapStatus, String) {
    (HfmapStatus::NullPointer, "null pointer argument".into())
}

fn params(q: u32, n: u32) -> Res<HeckeParams> {
    lib(HeckeParams::new(q, n))
}

fn bound(max_group: usize) -> usize {
    if max_group == 0 {
        DEFAULT_MAX_GROUP
    } else {
        max_group
    }
}

unsafe fn write<T>(out: *mut T, v: T) -> Res<()> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Res<()> {
    let c = CString::new(s).map_err(|_| (HfmapStatus::Failed, "output contains a NUL byte".into()))?;
    write(out, c.into_raw())
}

unsafe fn borrow<'a, T>(p: *const T) -> Res<&'a T> {
    p.as_ref().ok_or_else(null)
}

/// Message for the last failure on this thread; empty after a success.
/// The pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn hfmap_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// NUL-terminated crate version; static storage.
#[no_mangle]
pub extern "C" fn hfmap_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hfmap_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `|H_q : H_q(n)|` from the closed formula.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_parson_index(q: u32, n: u32, out: *mut u64) -> HfmapStatus {
    guard(|| write(out, parson_index(&params(q, n)?)))
}

/// Enumerates `H_q / H_q(n)`; `max_group = 0` uses the default bound.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_group_new(q: u32, n: u32, max_group: usize, out: *mut *mut HfmapGroup) -> HfmapStatus {
    guard(|| {
        let g = lib(FiniteHeckeGroup::enumerate_bounded(params(q, n)?, bound(max_group)))?;
        write(out, Box::into_raw(Box::new(HfmapGroup(g))))
    })
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_group_order(g: *const HfmapGroup, out: *mut usize) -> HfmapStatus {
    guard(|| write(out, borrow(g)?.0.order()))
}

/// # Safety
/// `g` must be null or a handle from [`hfmap_group_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hfmap_group_free(g: *mut HfmapGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_map_new(q: u32, n: u32, max_group: usize, out: *mut *mut HfmapMap) -> HfmapStatus {
    guard(|| {
        let m = lib(build_algebraic_map_bounded(params(q, n)?, bound(max_group)))?;
        write(out, Box::into_raw(Box::new(HfmapMap(m))))
    })
}

/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_map_invariants(m: *const HfmapMap, out: *mut HfmapInvariants) -> HfmapStatus {
    guard(|| {
        let i = borrow(m)?.0.invariants();
        write(
            out,
            HfmapInvariants {
                q: i.q,
                n: i.n,
                darts: i.darts,
                vertices: i.vertices,
                edges: i.edges,
                faces: i.faces,
                genus: i.genus,
                vertex_valency: i.vertex_valency.unwrap_or(0),
                face_size: i.face_size.unwrap_or(0),
            },
        )
    })
}

/// Invariants as a JSON object; free the result with [`hfmap_string_free`].
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_map_to_json(m: *const HfmapMap, out: *mut *mut c_char) -> HfmapStatus {
    guard(|| write_string(out, borrow(m)?.0.invariants().to_json()))
}

/// # Safety
/// `m` must be null or a handle from [`hfmap_map_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hfmap_map_free(m: *mut HfmapMap) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// The published 20-gon pairing.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_pairing_paper(out: *mut *mut HfmapPairing) -> HfmapStatus {
    guard(|| write(out, Box::into_raw(Box::new(HfmapPairing(PairingTable::paper())))))
}

/// Parses `i j` lines (1-based sides, `#` comments).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_pairing_parse(text: *const c_char, out: *mut *mut HfmapPairing) -> HfmapStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| (HfmapStatus::Parse, "text is not UTF-8".into()))?;
        let t = lib(PairingTable::parse(s))?;
        write(out, Box::into_raw(Box::new(HfmapPairing(t))))
    })
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_pairing_sides(p: *const HfmapPairing, out: *mut usize) -> HfmapStatus {
    guard(|| write(out, borrow(p)?.0.sides()))
}

/// Side paired with `side` (both 1-based).
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_pairing_partner(p: *const HfmapPairing, side: usize, out: *mut usize) -> HfmapStatus {
    guard(|| {
        let t = &borrow(p)?.0;
        if side == 0 || side > t.sides() {
            return Err((HfmapStatus::OutOfRange, format!("side {side} outside 1..={}", t.sides())));
        }
        write(out, t.partner(side))
    })
}

/// Whether side `k` is paired with `k + 3` when `k ≡ 2` and with `k + 9`
/// when `k ≡ 3 (mod 4)`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_pairing_rule_check(p: *const HfmapPairing, out: *mut bool) -> HfmapStatus {
    guard(|| write(out, pairing_rule_check(&borrow(p)?.0)))
}

/// Genus of the surface obtained by gluing the polygon.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_pairing_genus(p: *const HfmapPairing, out: *mut i64) -> HfmapStatus {
    guard(|| write(out, vertex_classes(&borrow(p)?.0).genus))
}

/// Corner classes as indices: `classes[k - 1]` receives the class of corner
/// `k`, numbered from 0 in order of first corner. `len` must be at least the
/// number of sides; the class count goes to `count`.
///
/// # Safety
/// `p` must be a live handle, `classes` valid for `len` writes and `count` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_pairing_corner_classes(
    p: *const HfmapPairing,
    classes: *mut usize,
    len: usize,
    count: *mut usize,
) -> HfmapStatus {
    guard(|| {
        let t = &borrow(p)?.0;
        if classes.is_null() {
            return Err(null());
        }
        if len < t.sides() {
            return Err((HfmapStatus::OutOfRange, format!("buffer of {len} for {} corners", t.sides())));
        }
        let c = vertex_classes(t);
        for (i, class) in c.classes.iter().enumerate() {
            for &k in class {
                classes.add(k - 1).write(i);
            }
        }
        write(count, c.classes.len())
    })
}

/// # Safety
/// `p` must be null or a pairing handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hfmap_pairing_free(p: *mut HfmapPairing) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Universal tessellation SVG; free the result with [`hfmap_string_free`].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_render_universal(
    q: u32,
    depth: usize,
    model: HfmapModel,
    out: *mut *mut c_char,
) -> HfmapStatus {
    guard(|| {
        let model = match model {
            HfmapModel::Disk => Model::Disk,
            HfmapModel::HalfPlane => Model::HalfPlane,
        };
        let svg = lib(render_universal(q, &RenderConfig { model, depth, ..RenderConfig::default() }))?;
        write_string(out, svg)
    })
}

/// Coordinate graph of `M_q(n)` as SVG or DOT; free with [`hfmap_string_free`].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hfmap_render_quotient(q: u32, n: u32, format: HfmapFormat, out: *mut *mut c_char) -> HfmapStatus {
    guard(|| {
        let f = match format {
            HfmapFormat::Svg => QuotientFormat::Svg,
            HfmapFormat::Dot => QuotientFormat::Dot,
        };
        write_string(out, lib(render_quotient(params(q, n)?, f))?)
    })
}

/// Runs the ten acceptance checks on the built-in data. Returns `Failed`
/// when any check fails; the counts are written either way.
///
/// # Safety
/// `passed` and `failed` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hfmap_verify_all(passed: *mut u32, failed: *mut u32) -> HfmapStatus {
    guard(|| {
        if passed.is_null() || failed.is_null() {
            return Err(null());
        }
        let r = run_all(&VerifyOptions::default());
        let bad: Vec<String> = r.iter().filter(|c| !c.passed).map(|c| format!("{} {}", c.id, c.name)).collect();
        write(passed, (r.len() - bad.len()) as u32)?;
        write(failed, bad.len() as u32)?;
        if bad.is_empty() {
            Ok(())
        } else {
            Err((HfmapStatus::Failed, format!("failed: {}", bad.join(", "))))
        }
    })
}
