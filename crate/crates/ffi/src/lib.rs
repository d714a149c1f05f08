//! C ABI over the `garside` crate.
//!
//! Contexts and elements are opaque heap handles. Every element remembers
//! the context that created it, and mixing handles from different contexts
//! is reported as `GS_CONTEXT_MISMATCH`. Functions return a status code and
//! write results through out-pointers; the message of the last failure on
//! the calling thread is available from `gs_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicU64, Ordering};

use garside::braid::Perm;
use garside::dihedral::DihedralSimple;
use garside::garside::{Element, Forms, Garside};
use garside::order::{Comparison, OrderChain, OrderedModel, Sign};
use garside::word::{format_element, parse_element, WordContext};
use garside::{Error, GroupContext};

/// Status codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GsStatus {
    GsOk = 0,
    GsNullPointer = 1,
    GsInvalidUtf8 = 2,
    GsParseError = 3,
    GsInvalidParameter = 4,
    GsContextMismatch = 5,
    GsNotPositive = 6,
    GsFailed = 7,
    GsPanic = 8,
}

/// Sign with respect to the standard Dehornoy structure.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GsSign {
    GsNegative = -1,
    GsInG1 = 0,
    GsPositive = 1,
}

/// A group: `A_n` or `I₂(m)`.
pub struct GsContext {
    key: u64,
    group: GroupContext,
}

/// An element of the group of the context that created it.
pub struct GsElement {
    key: u64,
    value: Value,
}

#[derive(Clone)]
enum Value {
    Braid(Element<Perm>),
    Dihedral(Element<DihedralSimple>),
}

static NEXT_KEY: AtomicU64 = AtomicU64::new(1);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(GsStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. } | Error::UnknownGenerator(_) => GsStatus::GsParseError,
            Error::InvalidParameter(_) | Error::UnknownAtom(_) => GsStatus::GsInvalidParameter,
            Error::ContextMismatch => GsStatus::GsContextMismatch,
            Error::NotPositive => GsStatus::GsNotPositive,
            _ => GsStatus::GsFailed,
        };
        Fail(code, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> GsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GsStatus::GsOk,
        Ok(Err(Fail(code, msg))) => {
            set_error(&msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            GsStatus::GsPanic
        }
    }
}

fn null() -> Fail {
    Fail(GsStatus::GsNullPointer, "null pointer argument".into())
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn element<'a>(ctx: &GsContext, e: &'a GsElement) -> Result<&'a Value, Fail> {
    if ctx.key != e.key {
        return Err(Fail(GsStatus::GsContextMismatch, "element belongs to another context".into()));
    }
    Ok(&e.value)
}

fn boxed(ctx: &GsContext, value: Value) -> *mut GsElement {
    Box::into_raw(Box::new(GsElement { key: ctx.key, value }))
}

fn new_context(group: garside::Result<GroupContext>, out: *mut *mut GsContext) -> GsStatus {
    guard(|| {
        let group = group?;
        let key = NEXT_KEY.fetch_add(1, Ordering::Relaxed);
        unsafe { put(out, Box::into_raw(Box::new(GsContext { key, group }))) }
    })
}

/// Creates the braid group `A_n` (n + 1 strands, n ≥ 2).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gs_context_new_braid(n: usize, out: *mut *mut GsContext) -> GsStatus {
    new_context(GroupContext::braid(n), out)
}

/// Creates the dihedral Artin group `I₂(m)`, m ≥ 4.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gs_context_new_dihedral(m: usize, out: *mut *mut GsContext) -> GsStatus {
    new_context(GroupContext::dihedral(m), out)
}

/// # Safety
/// `ctx` must come from a `gs_context_new_*` call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn gs_context_free(ctx: *mut GsContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// # Safety
/// `e` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn gs_element_free(e: *mut GsElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn gs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The message of the last failure on this thread. Owned by the library;
/// valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn gs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a word such as `"s1 s2^-1 D"` or `"s.t.s"`.
///
/// # Safety
/// `ctx` and `out` must be valid; `text` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn gs_element_parse(ctx: *const GsContext, text: *const c_char, out: *mut *mut GsElement) -> GsStatus {
    guard(|| {
        let ctx = get(ctx)?;
        if text.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Fail(GsStatus::GsInvalidUtf8, "text is not UTF-8".into()))?;
        let value = match &ctx.group {
            GroupContext::Braid(b) => Value::Braid(parse_element(b, text)?),
            GroupContext::Dihedral(d) => Value::Dihedral(parse_element(d, text)?),
        };
        put(out, boxed(ctx, value))
    })
}

/// `out = a·b`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gs_element_multiply(
    ctx: *const GsContext,
    a: *const GsElement,
    b: *const GsElement,
    out: *mut *mut GsElement,
) -> GsStatus {
    guard(|| {
        let ctx = get(ctx)?;
        let value = match (&ctx.group, element(ctx, get(a)?)?, element(ctx, get(b)?)?) {
            (GroupContext::Braid(m), Value::Braid(x), Value::Braid(y)) => Value::Braid(m.multiply(x, y)),
            (GroupContext::Dihedral(m), Value::Dihedral(x), Value::Dihedral(y)) => Value::Dihedral(m.multiply(x, y)),
            _ => return Err(Error::ContextMismatch.into()),
        };
        put(out, boxed(ctx, value))
    })
}

/// `out = a⁻¹`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gs_element_inverse(ctx: *const GsContext, a: *const GsElement, out: *mut *mut GsElement) -> GsStatus {
    guard(|| {
        let ctx = get(ctx)?;
        let value = match (&ctx.group, element(ctx, get(a)?)?) {
            (GroupContext::Braid(m), Value::Braid(x)) => Value::Braid(m.inverse(x)),
            (GroupContext::Dihedral(m), Value::Dihedral(x)) => Value::Dihedral(m.inverse(x)),
            _ => return Err(Error::ContextMismatch.into()),
        };
        put(out, boxed(ctx, value))
    })
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gs_element_equal(ctx: *const GsContext, a: *const GsElement, b: *const GsElement, out: *mut bool) -> GsStatus {
    guard(|| {
        let ctx = get(ctx)?;
        let eq = match (element(ctx, get(a)?)?, element(ctx, get(b)?)?) {
            (Value::Braid(x), Value::Braid(y)) => x == y,
            (Value::Dihedral(x), Value::Dihedral(y)) => x == y,
            _ => return Err(Error::ContextMismatch.into()),
        };
        put(out, eq)
    })
}

/// Text of an element; release it with `gs_string_free`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gs_element_format(ctx: *const GsContext, a: *const GsElement, out: *mut *mut c_char) -> GsStatus {
    guard(|| {
        let ctx = get(ctx)?;
        let text = match (&ctx.group, element(ctx, get(a)?)?) {
            (GroupContext::Braid(m), Value::Braid(x)) => format_element(m, x),
            (GroupContext::Dihedral(m), Value::Dihedral(x)) => format_element(m, x),
            _ => return Err(Error::ContextMismatch.into()),
        };
        let c = CString::new(text).map_err(|_| Fail(GsStatus::GsFailed, "text contains NUL".into()))?;
        put(out, c.into_raw())
    })
}

fn sign_of<M: OrderedModel>(m: &M, x: &Element<M::Simple>) -> Result<GsSign, Fail> {
    Ok(match m.dehornoy_structure()?.sign(x)? {
        Sign::Negative => GsSign::GsNegative,
        Sign::InG1 => GsSign::GsInG1,
        Sign::Positive => GsSign::GsPositive,
    })
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gs_sign(ctx: *const GsContext, a: *const GsElement, out: *mut GsSign) -> GsStatus {
    guard(|| {
        let ctx = get(ctx)?;
        let s = match (&ctx.group, element(ctx, get(a)?)?) {
            (GroupContext::Braid(m), Value::Braid(x)) => sign_of(m, x)?,
            (GroupContext::Dihedral(m), Value::Dihedral(x)) => sign_of(m, x)?,
            _ => return Err(Error::ContextMismatch.into()),
        };
        put(out, s)
    })
}

fn compare_in<M: OrderedModel>(m: &M, eps: &[i8], x: &Element<M::Simple>, y: &Element<M::Simple>) -> Result<i32, Fail> {
    Ok(match OrderChain::standard(m, eps)?.compare(x, y)? {
        Comparison::Less => -1,
        Comparison::Equal => 0,
        Comparison::Greater => 1,
    })
}

/// Compares `a` and `b` in the left order selected by `epsilon`, one entry
/// of ±1 per level of the chain. Writes −1, 0 or 1.
///
/// # Safety
/// All pointers must be valid; `epsilon` must hold `epsilon_len` entries.
#[no_mangle]
pub unsafe extern "C" fn gs_compare(
    ctx: *const GsContext,
    epsilon: *const i8,
    epsilon_len: usize,
    a: *const GsElement,
    b: *const GsElement,
    out: *mut i32,
) -> GsStatus {
    guard(|| {
        let ctx = get(ctx)?;
        if epsilon.is_null() && epsilon_len > 0 {
            return Err(null());
        }
        let eps: &[i8] = if epsilon_len == 0 { &[] } else { std::slice::from_raw_parts(epsilon, epsilon_len) };
        let c = match (&ctx.group, element(ctx, get(a)?)?, element(ctx, get(b)?)?) {
            (GroupContext::Braid(m), Value::Braid(x), Value::Braid(y)) => compare_in(m, eps, x, y)?,
            (GroupContext::Dihedral(m), Value::Dihedral(x), Value::Dihedral(y)) => compare_in(m, eps, x, y)?,
            _ => return Err(Error::ContextMismatch.into()),
        };
        put(out, c)
    })
}

fn depth_of<M: OrderedModel>(m: &M, x: &Element<M::Simple>) -> Result<usize, Fail> {
    Ok(m.dehornoy_structure()?.depth(x)?)
}

/// Depth of a monoid element; `GS_NOT_POSITIVE` otherwise.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gs_depth(ctx: *const GsContext, a: *const GsElement, out: *mut usize) -> GsStatus {
    guard(|| {
        let ctx = get(ctx)?;
        let d = match (&ctx.group, element(ctx, get(a)?)?) {
            (GroupContext::Braid(m), Value::Braid(x)) => depth_of(m, x)?,
            (GroupContext::Dihedral(m), Value::Dihedral(x)) => depth_of(m, x)?,
            _ => return Err(Error::ContextMismatch.into()),
        };
        put(out, d)
    })
}

fn delta_form_of<M: WordContext>(m: &M, x: &Element<M::Simple>) -> (Element<M::Simple>, i64) {
    let f = m.delta_form(x);
    (f.unmovable, f.power)
}

/// Δ-form `a = unmovable · Δ^power`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn gs_delta_form(
    ctx: *const GsContext,
    a: *const GsElement,
    unmovable: *mut *mut GsElement,
    power: *mut i64,
) -> GsStatus {
    guard(|| {
        let ctx = get(ctx)?;
        if unmovable.is_null() || power.is_null() {
            return Err(null());
        }
        let (u, k) = match (&ctx.group, element(ctx, get(a)?)?) {
            (GroupContext::Braid(m), Value::Braid(x)) => {
                let (u, k) = delta_form_of(m, x);
                (Value::Braid(u), k)
            }
            (GroupContext::Dihedral(m), Value::Dihedral(x)) => {
                let (u, k) = delta_form_of(m, x);
                (Value::Dihedral(u), k)
            }
            _ => return Err(Error::ContextMismatch.into()),
        };
        put(unmovable, boxed(ctx, u))?;
        put(power, k)
    })
}
