//! C ABI over the `baskakov` crate.
//!
//! Every fallible function returns a [`BkStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can be
//! read with [`bk_last_error_message`]. Objects are opaque handles released
//! with their `*_free` function; strings returned by the library are released
//! with [`bk_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use baskakov::coeffs::{recurrence, CoeffTable, Family};
use baskakov::evaluator::{QiConfig, QuasiInterpolant, SampleSet};
use baskakov::exactalg::Poly;
use baskakov::lebesgue::{lebesgue_function, norm_estimate};
use baskakov::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InsufficientSamples = 3,
    MalformedSamples = 4,
    OrderTooHigh = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BkFamily {
    Theta = 0,
    Eta = 1,
}

impl From<BkFamily> for Family {
    fn from(f: BkFamily) -> Self {
        match f {
            BkFamily::Theta => Family::Theta,
            BkFamily::Eta => Family::Eta,
        }
    }
}

/// Quasi-interpolant built from uniform samples.
pub struct BkQuasiInterpolant {
    inner: QuasiInterpolant,
}

/// Exact coefficient table `θ_r^(n)` or `η_r^(n)`, `r = 0..=r_max`.
pub struct BkCoeffTable {
    inner: CoeffTable,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> BkStatus {
    match e {
        Error::InsufficientSamples { .. } | Error::DifferenceOrderTooHigh { .. } => {
            BkStatus::InsufficientSamples
        }
        Error::MalformedSamples(_) => BkStatus::MalformedSamples,
        Error::OrderExceedsTruncation { .. } | Error::TableTooShort { .. } => {
            BkStatus::OrderTooHigh
        }
        _ => BkStatus::InvalidArgument,
    }
}

/// Runs `body`, recording errors and turning panics into [`BkStatus::Panic`].
fn guard(body: impl FnOnce() -> Result<(), BkStatus>) -> BkStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BkStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic");
            BkStatus::Panic
        }
    }
}

fn lift<T>(r: baskakov::Result<T>) -> Result<T, BkStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), BkStatus> {
    if p.is_null() {
        set_error(format!("{what} is null"));
        return Err(BkStatus::NullPointer);
    }
    Ok(())
}

fn string_out(s: String, out: *mut *mut c_char) -> Result<(), BkStatus> {
    let c = CString::new(s).map_err(|_| {
        set_error("string contains a nul byte");
        BkStatus::InvalidArgument
    })?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message for the last failure on this thread, or null. Valid until the next
/// failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn bk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn bk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds `V_{n,N}^(r)` from `samples[k] = f(k/n)`, `k = 0..len-1`.
///
/// # Safety
/// `samples` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_qi_new(
    n: u32,
    order: usize,
    truncation: usize,
    samples: *const f64,
    len: usize,
    out: *mut *mut BkQuasiInterpolant,
) -> BkStatus {
    guard(|| {
        non_null(out, "out")?;
        non_null(samples, "samples")?;
        let values = std::slice::from_raw_parts(samples, len).to_vec();
        let set = lift(SampleSet::new(n, values))?;
        let cfg = lift(QiConfig::new(n, order, truncation))?;
        let inner = lift(QuasiInterpolant::new(&set, cfg))?;
        *out = Box::into_raw(Box::new(BkQuasiInterpolant { inner }));
        Ok(())
    })
}

/// `V_{n,N}^(r) f(x)`.
///
/// # Safety
/// `qi` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_qi_eval(
    qi: *const BkQuasiInterpolant,
    x: f64,
    out: *mut f64,
) -> BkStatus {
    guard(|| {
        non_null(qi, "qi")?;
        non_null(out, "out")?;
        *out = lift((*qi).inner.eval(x))?;
        Ok(())
    })
}

/// Values of all orders `0..=r` at `x` into `out[0..=r]`; `out_len` must be
/// at least `r + 1`.
///
/// # Safety
/// `qi` must be a live handle; `out` must hold `out_len` doubles.
#[no_mangle]
pub unsafe extern "C" fn bk_qi_eval_orders(
    qi: *const BkQuasiInterpolant,
    x: f64,
    out: *mut f64,
    out_len: usize,
) -> BkStatus {
    guard(|| {
        non_null(qi, "qi")?;
        non_null(out, "out")?;
        let vals = lift((*qi).inner.eval_all_orders(x))?;
        if out_len < vals.len() {
            set_error(format!(
                "buffer holds {out_len} values, {} needed",
                vals.len()
            ));
            return Err(BkStatus::BufferTooSmall);
        }
        ptr::copy_nonoverlapping(vals.as_ptr(), out, vals.len());
        Ok(())
    })
}

/// # Safety
/// `qi` must come from [`bk_qi_new`] and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn bk_qi_free(qi: *mut BkQuasiInterpolant) {
    if !qi.is_null() {
        drop(Box::from_raw(qi));
    }
}

/// Coefficient table by the recurrence.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_coeff_table_new(
    family: BkFamily,
    n: u32,
    r_max: usize,
    out: *mut *mut BkCoeffTable,
) -> BkStatus {
    guard(|| {
        non_null(out, "out")?;
        let inner = lift(recurrence(family.into(), n, r_max))?;
        *out = Box::into_raw(Box::new(BkCoeffTable { inner }));
        Ok(())
    })
}

/// # Safety
/// `table` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bk_coeff_table_r_max(table: *const BkCoeffTable) -> usize {
    if table.is_null() {
        return 0;
    }
    (*table).inner.r_max()
}

/// # Safety
/// `table` must be null or a live handle that outlives the returned borrow.
unsafe fn poly_at<'a>(table: *const BkCoeffTable, r: usize) -> Result<&'a Poly, BkStatus> {
    non_null(table, "table")?;
    let t = &(*table).inner;
    t.get(r).ok_or_else(|| {
        set_error(format!("index {r} beyond r_max = {}", t.r_max()));
        BkStatus::OrderTooHigh
    })
}

/// Polynomial `r` as text, e.g. `-(1/22)x - (1/22)x^2`. Free with
/// [`bk_string_free`].
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_coeff_table_poly_string(
    table: *const BkCoeffTable,
    r: usize,
    out: *mut *mut c_char,
) -> BkStatus {
    guard(|| {
        non_null(out, "out")?;
        string_out(poly_at(table, r)?.to_string(), out)
    })
}

/// Polynomial `r` evaluated in double precision.
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_coeff_table_eval(
    table: *const BkCoeffTable,
    r: usize,
    x: f64,
    out: *mut f64,
) -> BkStatus {
    guard(|| {
        non_null(out, "out")?;
        let c = poly_at(table, r)?.to_f64_coeffs();
        *out = c.iter().rev().fold(0.0, |acc, a| acc * x + a);
        Ok(())
    })
}

/// Whole table as JSON with exact `"p/q"` coefficients. Free with
/// [`bk_string_free`].
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_coeff_table_to_json(
    table: *const BkCoeffTable,
    out: *mut *mut c_char,
) -> BkStatus {
    guard(|| {
        non_null(table, "table")?;
        non_null(out, "out")?;
        string_out((*table).inner.to_json(), out)
    })
}

/// # Safety
/// `table` must come from [`bk_coeff_table_new`] and not have been freed.
/// Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn bk_coeff_table_free(table: *mut BkCoeffTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// `Σ_{j=0}^{N} |v^(r)_{j,n}(x)|`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_lebesgue_function(
    n: u32,
    r: usize,
    x: f64,
    truncation: usize,
    out: *mut f64,
) -> BkStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = lift(lebesgue_function(n, r, x, truncation))?;
        Ok(())
    })
}

/// Maximum of the Lebesgue function on `[0, x_max]` and where it occurs.
///
/// # Safety
/// `value` and `argmax` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_norm_estimate(
    n: u32,
    r: usize,
    x_max: f64,
    coarse_step: f64,
    refine_levels: u32,
    value: *mut f64,
    argmax: *mut f64,
) -> BkStatus {
    guard(|| {
        non_null(value, "value")?;
        non_null(argmax, "argmax")?;
        let e = lift(norm_estimate(n, r, x_max, coarse_step, refine_levels))?;
        *value = e.value;
        *argmax = e.argmax;
        Ok(())
    })
}

/// Copies a nul-terminated string; used by the tests.
///
/// # Safety
/// `p` must be null or point to a nul-terminated string.
#[doc(hidden)]
pub unsafe fn message_text(p: *const c_char) -> Option<String> {
    if p.is_null() {
        return None;
    }
    Some(CStr::from_ptr(p).to_string_lossy().into_owned())
}
