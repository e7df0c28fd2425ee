//! C interface to the degree-bounded spanning tree solver.
//!
//! Every function returns a [`DtStatus`]; on anything but `DT_STATUS_OK` a
//! message is available from [`dt_last_error`] on the same thread. Handles
//! are opaque and must be released with their `_free` function. Panics never
//! cross the boundary; they surface as `DT_STATUS_PANIC`.
//!
//! ```c
//! DtInstance *inst;
//! dt_instance_new(4, &inst);
//! dt_instance_add_edge(inst, 0, 1, 1, NULL);
//! ...
//! dt_instance_constrain(inst, 0, 0, 1);
//! DtOutcome *out;
//! if (dt_solve(inst, &out) == DT_STATUS_OK) { ... dt_outcome_free(out); }
//! dt_instance_free(inst);
//! ```

use degtree::instance::ConstraintEntry;
use degtree::report::ResultFile;
use degtree::{solve, Condition, Instance, InstanceFile, SolveOutcome};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The instance failed validation.
    Malformed = 3,
    /// The solver reported a broken internal invariant.
    Internal = 4,
    /// Output buffer too small; the required length was still written.
    BufferTooSmall = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DtVerdict {
    Feasible = 0,
    Infeasible = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DtCondition {
    /// `sum alpha(S) <= |S| + |N(S)| - 1` fails.
    Alpha = 0,
    /// `sum beta(S) >= components(G - S) + |S| - 1` fails.
    Beta = 1,
}

/// An instance under construction. Validated when solved.
pub struct DtInstance {
    file: InstanceFile,
}

/// The answer for one instance.
pub struct DtOutcome {
    outcome: SolveOutcome,
    json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(DtStatus, String);

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> DtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            DtStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&message);
            DtStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(DtStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn deref_mut<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

/// Copies `items` into `buf` (capacity `cap`) and stores the full length in `len_out`.
unsafe fn fill(
    items: &[usize],
    buf: *mut usize,
    cap: usize,
    len_out: *mut usize,
) -> Result<(), Failure> {
    *deref_mut(len_out, "len_out")? = items.len();
    if items.len() > cap {
        return Err(Failure(
            DtStatus::BufferTooSmall,
            format!("need {} slots, buffer has {cap}", items.len()),
        ));
    }
    if !items.is_empty() {
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(items.as_ptr(), buf, items.len());
    }
    Ok(())
}

/// Message for the most recent failure on this thread; empty after a success.
/// The pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn dt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates an instance with `n` vertices, no edges and no bounds.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn dt_instance_new(n: usize, out: *mut *mut DtInstance) -> DtStatus {
    guard(|| {
        let out = deref_mut(out, "out")?;
        if n == 0 {
            return Err(Failure(
                DtStatus::InvalidArgument,
                "n must be at least 1".into(),
            ));
        }
        let n = i64::try_from(n)
            .map_err(|_| Failure(DtStatus::InvalidArgument, "n too large".into()))?;
        *out = Box::into_raw(Box::new(DtInstance {
            file: InstanceFile {
                n,
                edges: Vec::new(),
                constrained: Vec::new(),
            },
        }));
        Ok(())
    })
}

/// Parses an instance from JSON text and validates it.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_instance_from_json(
    json: *const c_char,
    out: *mut *mut DtInstance,
) -> DtStatus {
    guard(|| {
        let out = deref_mut(out, "out")?;
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| Failure(DtStatus::InvalidArgument, format!("json is not UTF-8: {e}")))?;
        let file =
            InstanceFile::parse(text).map_err(|e| Failure(DtStatus::Malformed, e.to_string()))?;
        file.validate()
            .map_err(|e| Failure(DtStatus::Malformed, e.to_string()))?;
        *out = Box::into_raw(Box::new(DtInstance { file }));
        Ok(())
    })
}

/// Adds edge `{u, v}` with weight `w`; its index is written to `index_out` if non-null.
///
/// # Safety
/// `inst` must come from this library; `index_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn dt_instance_add_edge(
    inst: *mut DtInstance,
    u: usize,
    v: usize,
    w: i64,
    index_out: *mut usize,
) -> DtStatus {
    guard(|| {
        let inst = deref_mut(inst, "inst")?;
        let n = inst.file.n as usize;
        if u >= n || v >= n || u == v {
            return Err(Failure(
                DtStatus::InvalidArgument,
                format!("edge ({u}, {v}) invalid for {n} vertices"),
            ));
        }
        let (a, b) = (u.min(v) as i64, u.max(v) as i64);
        if let Some(i) = inst.file.edges.iter().position(|e| e[0] == a && e[1] == b) {
            return Err(Failure(
                DtStatus::InvalidArgument,
                format!("edge ({u}, {v}) duplicates edge {i}"),
            ));
        }
        if !index_out.is_null() {
            *index_out = inst.file.edges.len();
        }
        inst.file.edges.push([a, b, w]);
        Ok(())
    })
}

/// Requires `alpha <= deg_T(v) <= beta`. Bounded vertices must be pairwise
/// non-adjacent; this is checked by [`dt_solve`].
///
/// # Safety
/// `inst` must come from this library.
#[no_mangle]
pub unsafe extern "C" fn dt_instance_constrain(
    inst: *mut DtInstance,
    v: usize,
    alpha: u32,
    beta: u32,
) -> DtStatus {
    guard(|| {
        let inst = deref_mut(inst, "inst")?;
        if v >= inst.file.n as usize {
            return Err(Failure(
                DtStatus::InvalidArgument,
                format!("vertex {v} out of range"),
            ));
        }
        if alpha > beta {
            return Err(Failure(
                DtStatus::InvalidArgument,
                format!("alpha {alpha} exceeds beta {beta}"),
            ));
        }
        let entry = ConstraintEntry {
            v: v as i64,
            alpha: i64::from(alpha),
            beta: i64::from(beta),
        };
        match inst.file.constrained.iter_mut().find(|c| c.v == entry.v) {
            Some(c) => *c = entry,
            None => inst.file.constrained.push(entry),
        }
        Ok(())
    })
}

/// Releases an instance. Null is ignored.
///
/// # Safety
/// `inst` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dt_instance_free(inst: *mut DtInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Solves the instance: a minimum-cost tree within the bounds, or a certificate.
///
/// # Safety
/// `inst` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_solve(inst: *const DtInstance, out: *mut *mut DtOutcome) -> DtStatus {
    guard(|| {
        let inst = deref(inst, "inst")?;
        let out = deref_mut(out, "out")?;
        let instance: Instance = inst
            .file
            .validate()
            .map_err(|e| Failure(DtStatus::Malformed, e.to_string()))?;
        let outcome = solve(&instance).map_err(|e| Failure(DtStatus::Internal, e.to_string()))?;
        let json = ResultFile::from_outcome(&instance, &outcome).to_json();
        *out = Box::into_raw(Box::new(DtOutcome {
            outcome,
            json: CString::new(json).expect("JSON has no NUL"),
        }));
        Ok(())
    })
}

/// # Safety
/// `out` must come from this library; `verdict` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_outcome_verdict(
    out: *const DtOutcome,
    verdict: *mut DtVerdict,
) -> DtStatus {
    guard(|| {
        let out = deref(out, "outcome")?;
        *deref_mut(verdict, "verdict")? = if out.outcome.is_feasible() {
            DtVerdict::Feasible
        } else {
            DtVerdict::Infeasible
        };
        Ok(())
    })
}

fn not_feasible() -> Failure {
    Failure(DtStatus::InvalidArgument, "outcome is infeasible".into())
}

fn not_infeasible() -> Failure {
    Failure(DtStatus::InvalidArgument, "outcome is feasible".into())
}

/// Total weight of the tree. Fails on an infeasible outcome.
///
/// # Safety
/// `out` must come from this library; `cost` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_outcome_cost(out: *const DtOutcome, cost: *mut i64) -> DtStatus {
    guard(|| match &deref(out, "outcome")?.outcome {
        SolveOutcome::Feasible { cost: c, .. } => {
            *deref_mut(cost, "cost")? = *c;
            Ok(())
        }
        SolveOutcome::Infeasible { .. } => Err(not_feasible()),
    })
}

/// Sorted edge indices of the tree. Writes the length to `len_out` even
/// when `cap` is too small; call with `cap = 0` to query it.
///
/// # Safety
/// `buf` must hold `cap` elements; `len_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_outcome_tree_edges(
    out: *const DtOutcome,
    buf: *mut usize,
    cap: usize,
    len_out: *mut usize,
) -> DtStatus {
    guard(|| match &deref(out, "outcome")?.outcome {
        SolveOutcome::Feasible { tree, .. } => fill(&tree.to_vec(), buf, cap, len_out),
        SolveOutcome::Infeasible { .. } => Err(not_feasible()),
    })
}

/// The violated condition and both sides of the inequality. Fails on a feasible outcome.
///
/// # Safety
/// `out` must come from this library; the three output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_outcome_certificate(
    out: *const DtOutcome,
    condition: *mut DtCondition,
    lhs: *mut i64,
    rhs: *mut i64,
) -> DtStatus {
    guard(|| match &deref(out, "outcome")?.outcome {
        SolveOutcome::Infeasible { certificate, .. } => {
            *deref_mut(condition, "condition")? = match certificate.violated {
                Condition::Alpha => DtCondition::Alpha,
                Condition::Beta => DtCondition::Beta,
            };
            *deref_mut(lhs, "lhs")? = certificate.lhs;
            *deref_mut(rhs, "rhs")? = certificate.rhs;
            Ok(())
        }
        SolveOutcome::Feasible { .. } => Err(not_infeasible()),
    })
}

/// Sorted vertices of the violating set `S`, with the same buffer protocol
/// as [`dt_outcome_tree_edges`].
///
/// # Safety
/// `buf` must hold `cap` elements; `len_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_outcome_witness(
    out: *const DtOutcome,
    buf: *mut usize,
    cap: usize,
    len_out: *mut usize,
) -> DtStatus {
    guard(|| match &deref(out, "outcome")?.outcome {
        SolveOutcome::Infeasible { certificate, .. } => {
            fill(&certificate.witness.to_vec(), buf, cap, len_out)
        }
        SolveOutcome::Feasible { .. } => Err(not_infeasible()),
    })
}

/// The result as JSON, identical to the command-line output. Release with [`dt_string_free`].
///
/// # Safety
/// `out` must come from this library; `json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_outcome_to_json(
    out: *const DtOutcome,
    json: *mut *mut c_char,
) -> DtStatus {
    guard(|| {
        let out = deref(out, "outcome")?;
        *deref_mut(json, "json")? = out.json.clone().into_raw();
        Ok(())
    })
}

/// Releases an outcome. Null is ignored.
///
/// # Safety
/// `out` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dt_outcome_free(out: *mut DtOutcome) {
    if !out.is_null() {
        drop(Box::from_raw(out));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
