//! C ABI over `signed_brauer`.
//!
//! Every object crosses the boundary as an opaque heap handle created by a
//! constructor and released by the matching `*_free`. Every fallible call
//! returns an [`SbStatus`] and writes its result through an out-pointer; on
//! failure a message is available from [`sb_last_error`] on the same thread.
//! Strings returned to the caller are released with [`sb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use signed_brauer::bsgs::{embedded_generated, GeneratorSet};
use signed_brauer::diagram::{parse_diagram, RenderFormat};
use signed_brauer::groups::{verify, Claim, Mode, VerifyOptions};
use signed_brauer::{arith, Bsgs, Error, Parity, Permutation, SignedDiagram, SignedPermutation};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    DegreeMismatch = 5,
    TooLarge = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SbParity {
    Even = 0,
    Odd = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SbRenderFormat {
    Ascii = 0,
    Dot = 1,
}

/// Summary of one claim verification.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SbReport {
    pub checked: u64,
    pub failures: u64,
    /// True when every element was checked, false when sampled.
    pub exhaustive: bool,
}

/// A permutation of `{1..degree}`.
pub struct SbPermutation(Permutation);

/// An element of the hyperoctahedral group in window form.
pub struct SbSignedPermutation(SignedPermutation);

/// A signed Brauer diagram on `2n` vertices.
pub struct SbDiagram(SignedDiagram);

/// A base and strong generating set for a permutation group.
pub struct SbBsgs(Bsgs);

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
        let status = match e {
            Error::Parse { .. } | Error::UnknownClaim(_) | Error::UnknownFormat(_) => SbStatus::Parse,
            Error::DegreeMismatch { .. } => SbStatus::DegreeMismatch,
            Error::OverCap { .. } | Error::Overflow(_) => SbStatus::TooLarge,
            _ => SbStatus::InvalidArgument,
        };
        Failure::new(status, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn record(message: String) {
    let text = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SbStatus {
    match panic::catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SbStatus::Ok,
        Ok(Err(f)) => {
            record(f.message);
            f.status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            record(format!("panic: {message}"));
            SbStatus::Panic
        }
    }
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure::new(SbStatus::NullPointer, format!("{what} is null")))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(SbStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure::new(SbStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(SbStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let s = CString::new(s).map_err(|e| Failure::new(SbStatus::InvalidArgument, e.to_string()))?;
    write(out, s.into_raw())
}

unsafe fn write_boxed<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(SbStatus::NullPointer, "output pointer is null"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn release<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message of the most recent failure on this thread, or NULL.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sb_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- signed permutations ----

/// Parses window notation such as `"+2 -1"`.
///
/// # Safety
/// `window` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_signed_parse(window: *const c_char, out: *mut *mut SbSignedPermutation) -> SbStatus {
    guard(|| {
        let s = SignedPermutation::parse_window(text(window, "window")?)?;
        write_boxed(out, SbSignedPermutation(s))
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_signed_identity(n: usize, out: *mut *mut SbSignedPermutation) -> SbStatus {
    guard(|| {
        if n == 0 {
            return Err(Error::ZeroDegree.into());
        }
        write_boxed(out, SbSignedPermutation(SignedPermutation::identity(n)))
    })
}

/// Window notation of `s`; free the result with [`sb_string_free`].
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_signed_format(s: *const SbSignedPermutation, out: *mut *mut c_char) -> SbStatus {
    guard(|| write_string(out, handle(s, "element")?.0.to_string()))
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_signed_n(s: *const SbSignedPermutation, out: *mut usize) -> SbStatus {
    guard(|| write(out, handle(s, "element")?.0.n()))
}

/// Number of negative strands.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_signed_neg_count(s: *const SbSignedPermutation, out: *mut usize) -> SbStatus {
    guard(|| write(out, handle(s, "element")?.0.neg_count()))
}

/// Product `a * b`, applying `a` first.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_signed_mul(
    a: *const SbSignedPermutation,
    b: *const SbSignedPermutation,
    out: *mut *mut SbSignedPermutation,
) -> SbStatus {
    guard(|| {
        let product = handle(a, "left operand")?.0.mul(&handle(b, "right operand")?.0)?;
        write_boxed(out, SbSignedPermutation(product))
    })
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_signed_inverse(s: *const SbSignedPermutation, out: *mut *mut SbSignedPermutation) -> SbStatus {
    guard(|| write_boxed(out, SbSignedPermutation(handle(s, "element")?.0.inverse())))
}

/// Image of `s` in the symmetric group on `2n` points.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_signed_embed(s: *const SbSignedPermutation, out: *mut *mut SbPermutation) -> SbStatus {
    guard(|| write_boxed(out, SbPermutation(handle(s, "element")?.0.embed())))
}

/// Preimage of a permutation of `2n` points under the embedding.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_signed_from_embedded(p: *const SbPermutation, out: *mut *mut SbSignedPermutation) -> SbStatus {
    guard(|| {
        let s = SignedPermutation::from_embedded(&handle(p, "permutation")?.0)?;
        write_boxed(out, SbSignedPermutation(s))
    })
}

/// # Safety
/// `s` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_signed_free(s: *mut SbSignedPermutation) {
    release(s)
}

// ---- permutations ----

/// Parses cycle notation such as `"(1 2)(3 4)"` or `"e"` on `degree` points.
///
/// # Safety
/// `cycles` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_perm_parse(cycles: *const c_char, degree: usize, out: *mut *mut SbPermutation) -> SbStatus {
    guard(|| {
        let p = Permutation::parse_cycles(text(cycles, "cycles")?, degree)?;
        write_boxed(out, SbPermutation(p))
    })
}

/// Canonical cycle notation; free the result with [`sb_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_perm_format(p: *const SbPermutation, out: *mut *mut c_char) -> SbStatus {
    guard(|| write_string(out, handle(p, "permutation")?.0.format_cycles()))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_perm_degree(p: *const SbPermutation, out: *mut usize) -> SbStatus {
    guard(|| write(out, handle(p, "permutation")?.0.degree()))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_perm_parity(p: *const SbPermutation, out: *mut SbParity) -> SbStatus {
    guard(|| {
        let parity = match handle(p, "permutation")?.0.parity() {
            Parity::Even => SbParity::Even,
            Parity::Odd => SbParity::Odd,
        };
        write(out, parity)
    })
}

/// Composition applying `a` first, then `b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_perm_compose(
    a: *const SbPermutation,
    b: *const SbPermutation,
    out: *mut *mut SbPermutation,
) -> SbStatus {
    guard(|| {
        let product = handle(a, "left operand")?.0.compose(&handle(b, "right operand")?.0)?;
        write_boxed(out, SbPermutation(product))
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_perm_free(p: *mut SbPermutation) {
    release(p)
}

// ---- diagrams ----

/// Parses a diagram line such as `"n=2; 1-2:+; 3-4:-"`.
///
/// # Safety
/// `line` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_diagram_parse(line: *const c_char, out: *mut *mut SbDiagram) -> SbStatus {
    guard(|| write_boxed(out, SbDiagram(parse_diagram(text(line, "diagram")?)?)))
}

/// The vertical diagram of a signed permutation.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_diagram_from_signed(s: *const SbSignedPermutation, out: *mut *mut SbDiagram) -> SbStatus {
    guard(|| write_boxed(out, SbDiagram(handle(s, "element")?.0.to_diagram())))
}

/// Stacks `a` over `b`. The product is `x^exponent` times the diagram
/// written to `out`, with the loop counts written separately.
///
/// # Safety
/// `a` and `b` must be live handles; all out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_diagram_compose(
    a: *const SbDiagram,
    b: *const SbDiagram,
    out: *mut *mut SbDiagram,
    positive_loops: *mut u32,
    negative_loops: *mut u32,
) -> SbStatus {
    guard(|| {
        if positive_loops.is_null() || negative_loops.is_null() {
            return Err(Failure::new(SbStatus::NullPointer, "loop count pointer is null"));
        }
        let product = handle(a, "top diagram")?.0.compose(&handle(b, "bottom diagram")?.0)?;
        write_boxed(out, SbDiagram(product.diagram))?;
        write(positive_loops, product.positive_loops)?;
        write(negative_loops, product.negative_loops)
    })
}

/// One-line text form; free the result with [`sb_string_free`].
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_diagram_serialize(d: *const SbDiagram, out: *mut *mut c_char) -> SbStatus {
    guard(|| write_string(out, handle(d, "diagram")?.0.serialize()))
}

/// Multi-line picture; free the result with [`sb_string_free`].
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_diagram_render(d: *const SbDiagram, format: SbRenderFormat, out: *mut *mut c_char) -> SbStatus {
    guard(|| {
        let format = match format {
            SbRenderFormat::Ascii => RenderFormat::Ascii,
            SbRenderFormat::Dot => RenderFormat::Dot,
        };
        write_string(out, handle(d, "diagram")?.0.render(format))
    })
}

/// # Safety
/// `d` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_diagram_free(d: *mut SbDiagram) {
    release(d)
}

// ---- Schreier-Sims ----

/// Builds a BSGS for the group generated by `count` permutations of `degree`
/// points. `generators` may be NULL when `count` is zero.
///
/// # Safety
/// `generators` must point to `count` live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_bsgs_build(
    degree: usize,
    generators: *const *const SbPermutation,
    count: usize,
    out: *mut *mut SbBsgs,
) -> SbStatus {
    guard(|| {
        let gens = if count == 0 {
            Vec::new()
        } else {
            if generators.is_null() {
                return Err(Failure::new(SbStatus::NullPointer, "generator array is null"));
            }
            std::slice::from_raw_parts(generators, count)
                .iter()
                .map(|&g| handle(g, "generator").map(|g| g.0.clone()))
                .collect::<Result<Vec<_>, _>>()?
        };
        write_boxed(out, SbBsgs(Bsgs::build(degree, &gens)?))
    })
}

/// BSGS of the embedded hyperoctahedral group on `n` strands, or of its
/// even-sign subgroup when `even` is true.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_bsgs_standard(n: usize, even: bool, out: *mut *mut SbBsgs) -> SbStatus {
    guard(|| {
        let which = if even { GeneratorSet::Even } else { GeneratorSet::Full };
        write_boxed(out, SbBsgs(embedded_generated(n, which)?))
    })
}

/// Group order; fails with `TooLarge` if it does not fit in 64 bits.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_bsgs_order(b: *const SbBsgs, out: *mut u64) -> SbStatus {
    guard(|| {
        let order = handle(b, "bsgs")?.0.order();
        let order = u64::try_from(order).map_err(|_| Failure::new(SbStatus::TooLarge, format!("order {order} exceeds 64 bits")))?;
        write(out, order)
    })
}

/// # Safety
/// `b` and `p` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_bsgs_contains(b: *const SbBsgs, p: *const SbPermutation, out: *mut bool) -> SbStatus {
    guard(|| {
        let member = handle(b, "bsgs")?.0.contains(&handle(p, "permutation")?.0)?;
        write(out, member)
    })
}

/// # Safety
/// `b` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_bsgs_free(b: *mut SbBsgs) {
    release(b)
}

// ---- verification and arithmetic ----

/// Verifies one claim, identified by its registry id such as `"thm_3_1"`,
/// with default options and `jobs` worker threads.
///
/// # Safety
/// `claim` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_verify(claim: *const c_char, n: usize, jobs: usize, out: *mut SbReport) -> SbStatus {
    guard(|| {
        let claim: Claim = text(claim, "claim")?.parse()?;
        let opts = VerifyOptions {
            jobs: jobs.max(1),
            ..Default::default()
        };
        let report = verify(claim, n, &opts)?;
        write(
            out,
            SbReport {
                checked: report.checked,
                failures: report.failures() as u64,
                exhaustive: report.mode == Mode::Exhaustive,
            },
        )
    })
}

/// 2-adic valuation of `n (n-1) ... (floor(n/2) + 1)`, for `n >= 2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_nu2_falling_product(n: u64, out: *mut u64) -> SbStatus {
    guard(|| write(out, arith::nu2_falling_product(n)?.valuation))
}

/// Exponent of a Sylow 2-subgroup of a group of order
/// `n (n-1) ... (floor(n/2) + 1)`, for `n >= 2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sb_sylow2_exponent(n: u64, out: *mut u64) -> SbStatus {
    guard(|| write(out, arith::sylow2_exponent(n)?))
}
