//! C ABI over `treerecon`.
//!
//! Trees and card indexes cross the boundary as opaque handles that the
//! caller releases with the matching `*_free` function. Every fallible call
//! returns a [`TrStatus`]; on failure a message is stored per thread and can
//! be read with [`tr_last_error`]. Strings returned through `char **out`
//! are owned by the caller and released with [`tr_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use treerecon::canon::VertexKind;
use treerecon::deck::{build_card_index, card, CardIndex};
use treerecon::error::ReconstructError;
use treerecon::reconstruct::{crn, reconstruct_from_brush_cards, BrushCardPair, CrnValue};
use treerecon::structure::{brush_pairs, is_starlike};
use treerecon::verify;
use treerecon::{free_code, isomorphic, Config, Forest, Tree};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    OutOfRange = 3,
    NoCandidate = 4,
    /// Reconstruction accepted non-isomorphic candidates.
    AmbiguousReconstruction = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrSuite {
    /// Brush card pairs determine the tree.
    BrushReconstruction = 0,
    /// Leaves with isomorphic cards are similar.
    LeafSimilarity = 1,
    /// Near-leaves with isomorphic cards are similar.
    NearLeafSimilarity = 2,
    /// crn is 1 exactly for starlike trees.
    StarlikeCrn = 3,
    /// Histogram of crn; trees with crn >= 3 are reported.
    CrnHistogram = 4,
}

impl TrSuite {
    fn from_raw(v: u32) -> Option<TrSuite> {
        Some(match v {
            0 => TrSuite::BrushReconstruction,
            1 => TrSuite::LeafSimilarity,
            2 => TrSuite::NearLeafSimilarity,
            3 => TrSuite::StarlikeCrn,
            4 => TrSuite::CrnHistogram,
            _ => return None,
        })
    }
}

/// Returned by [`tr_crn`] when no three cards single the tree out.
pub const TR_CRN_EXCEEDS_THREE: u32 = 4;

/// Opaque tree handle.
pub struct TrTree(Tree);

/// Opaque card index over all trees of one order.
pub struct TrCardIndex(CardIndex);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl ToString) {
    let text = CString::new(msg.to_string().replace('\0', " ")).expect("nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn fail(status: TrStatus, msg: impl ToString) -> TrStatus {
    set_error(msg);
    status
}

/// Runs `body`, turning panics into [`TrStatus::Panic`].
fn guard(body: impl FnOnce() -> TrStatus) -> TrStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(TrStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, TrStatus> {
    if text.is_null() {
        return Err(fail(TrStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(text).to_str().map_err(|_| fail(TrStatus::InvalidInput, "string is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: &str) -> TrStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TrStatus::Ok
        }
        Err(_) => fail(TrStatus::InvalidInput, "string contains NUL"),
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(TrStatus::NullPointer, concat!("null argument: ", stringify!($p)));
        })+
    };
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn tr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the tree text format (`n`, then `n - 1` lines `a b`).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_tree_parse(text: *const c_char, out: *mut *mut TrTree) -> TrStatus {
    guard(|| {
        non_null!(out);
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Tree::parse(text) {
            Ok(t) => {
                *out = Box::into_raw(Box::new(TrTree(t)));
                TrStatus::Ok
            }
            Err(e) => fail(TrStatus::InvalidInput, e),
        }
    })
}

/// Builds a tree on `n` vertices from `n - 1` edges stored as consecutive
/// `(a, b)` pairs in `edges` (length `2 * (n - 1)`).
///
/// # Safety
/// `edges` must point to `2 * (n - 1)` readable values (may be NULL when
/// `n == 1`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_tree_from_edges(n: usize, edges: *const usize, out: *mut *mut TrTree) -> TrStatus {
    guard(|| {
        non_null!(out);
        if n == 0 {
            return fail(TrStatus::InvalidInput, "a tree needs at least one vertex");
        }
        let flat: &[usize] = if n == 1 {
            &[]
        } else {
            non_null!(edges);
            std::slice::from_raw_parts(edges, 2 * (n - 1))
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        match Tree::new(n, &pairs) {
            Ok(t) => {
                *out = Box::into_raw(Box::new(TrTree(t)));
                TrStatus::Ok
            }
            Err(e) => fail(TrStatus::InvalidInput, e),
        }
    })
}

/// # Safety
/// `tree` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tr_tree_free(tree: *mut TrTree) {
    if !tree.is_null() {
        drop(Box::from_raw(tree));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `tree` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tr_tree_order(tree: *const TrTree) -> usize {
    tree.as_ref().map_or(0, |t| t.0.n())
}

/// # Safety
/// `tree` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_tree_to_text(tree: *const TrTree, out: *mut *mut c_char) -> TrStatus {
    guard(|| {
        non_null!(tree, out);
        write_string(out, &(*tree).0.to_text())
    })
}

/// Canonical code of the free tree.
///
/// # Safety
/// `tree` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_tree_free_code(tree: *const TrTree, out: *mut *mut c_char) -> TrStatus {
    guard(|| {
        non_null!(tree, out);
        write_string(out, free_code(&(*tree).0).as_str())
    })
}

/// Canonical code of the card obtained by deleting vertex `v`.
///
/// # Safety
/// `tree` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_tree_card(tree: *const TrTree, v: usize, out: *mut *mut c_char) -> TrStatus {
    guard(|| {
        non_null!(tree, out);
        match card(&(*tree).0, v) {
            Ok(c) => write_string(out, c.as_str()),
            Err(e) => fail(TrStatus::OutOfRange, e),
        }
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_isomorphic(a: *const TrTree, b: *const TrTree, out: *mut bool) -> TrStatus {
    guard(|| {
        non_null!(a, b, out);
        *out = isomorphic(&(*a).0, &(*b).0);
        TrStatus::Ok
    })
}

/// # Safety
/// `tree` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_tree_is_starlike(tree: *const TrTree, out: *mut bool) -> TrStatus {
    guard(|| {
        non_null!(tree, out);
        match is_starlike(&(*tree).0) {
            Ok(b) => {
                *out = b;
                TrStatus::Ok
            }
            Err(e) => fail(TrStatus::OutOfRange, e),
        }
    })
}

/// Writes `(leaf, root)` brush pairs as consecutive values into `pairs`,
/// which holds room for `capacity` pairs. `count` receives the total number
/// of pairs; [`TrStatus::BufferTooSmall`] is returned when it exceeds
/// `capacity`. Passing `pairs = NULL` with `capacity = 0` queries the count.
///
/// # Safety
/// `pairs` must have room for `2 * capacity` values; `tree` must be a live
/// handle; `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_tree_brush_pairs(
    tree: *const TrTree,
    pairs: *mut usize,
    capacity: usize,
    count: *mut usize,
) -> TrStatus {
    guard(|| {
        non_null!(tree, count);
        let found = match brush_pairs(&(*tree).0) {
            Ok(p) => p,
            Err(e) => return fail(TrStatus::OutOfRange, e),
        };
        *count = found.len();
        if found.len() > capacity {
            return fail(TrStatus::BufferTooSmall, format!("{} pairs do not fit in {capacity}", found.len()));
        }
        if !found.is_empty() {
            non_null!(pairs);
            let buf = std::slice::from_raw_parts_mut(pairs, 2 * found.len());
            for (i, (u, v)) in found.into_iter().enumerate() {
                buf[2 * i] = u;
                buf[2 * i + 1] = v;
            }
        }
        TrStatus::Ok
    })
}

/// Rebuilds a tree from the card of a brush leaf (`card_u`, tree or forest
/// text) and the card of its root (`card_v`, forest text).
///
/// # Safety
/// Both strings must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_reconstruct(
    card_u: *const c_char,
    card_v: *const c_char,
    checked: bool,
    out: *mut *mut TrTree,
) -> TrStatus {
    guard(|| {
        non_null!(out);
        let (u, v) = match (read_str(card_u), read_str(card_v)) {
            (Ok(u), Ok(v)) => (u, v),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let parsed = Forest::parse(u).and_then(|u| Ok((u, Forest::parse(v)?)));
        let (u, v) = match parsed {
            Ok(p) => p,
            Err(e) => return fail(TrStatus::InvalidInput, e),
        };
        let pair = match BrushCardPair::new(&u, &v) {
            Ok(p) => p,
            Err(e) => return fail(TrStatus::InvalidInput, e),
        };
        match reconstruct_from_brush_cards(&pair, checked) {
            Ok(t) => {
                *out = Box::into_raw(Box::new(TrTree(t)));
                TrStatus::Ok
            }
            Err(e @ ReconstructError::NoCandidate) => fail(TrStatus::NoCandidate, e),
            Err(e @ ReconstructError::MultipleCandidates { .. }) => fail(TrStatus::AmbiguousReconstruction, e),
            Err(e) => fail(TrStatus::InvalidInput, e),
        }
    })
}

/// Builds the card index over all free trees on `n` vertices (`2 <= n <= 20`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tr_card_index_build(n: usize, jobs: usize, out: *mut *mut TrCardIndex) -> TrStatus {
    guard(|| {
        non_null!(out);
        match build_card_index(n, &Config::default().with_jobs(jobs)) {
            Ok(idx) => {
                *out = Box::into_raw(Box::new(TrCardIndex(idx)));
                TrStatus::Ok
            }
            Err(e) => fail(TrStatus::OutOfRange, e),
        }
    })
}

/// # Safety
/// `index` must be NULL or a live handle from [`tr_card_index_build`].
#[no_mangle]
pub unsafe extern "C" fn tr_card_index_free(index: *mut TrCardIndex) {
    if !index.is_null() {
        drop(Box::from_raw(index));
    }
}

/// Class reconstruction number of `tree` within `index`. `value` receives
/// 1..=3 or [`TR_CRN_EXCEEDS_THREE`]; when `witness` is non-NULL it receives
/// the witness cards joined by `,`.
///
/// # Safety
/// Handles must be live; `value` must be writable; `witness` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn tr_crn(
    index: *const TrCardIndex,
    tree: *const TrTree,
    value: *mut u32,
    witness: *mut *mut c_char,
) -> TrStatus {
    guard(|| {
        non_null!(index, tree, value);
        let r = match crn(&(*tree).0, &(*index).0) {
            Ok(r) => r,
            Err(e) => return fail(TrStatus::OutOfRange, e),
        };
        *value = match r.value {
            CrnValue::Exactly(k) => k as u32,
            CrnValue::ExceedsThree => TR_CRN_EXCEEDS_THREE,
        };
        if witness.is_null() {
            return TrStatus::Ok;
        }
        let joined: Vec<&str> = r.witness.iter().map(|c| c.as_str()).collect();
        write_string(witness, &joined.join(","))
    })
}

/// Runs one verification suite (a [`TrSuite`] value) at order `n`; `violations` receives the
/// number of counterexamples (for the crn histogram: trees with crn >= 3).
///
/// # Safety
/// `violations` must be writable; `report` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn tr_verify(
    suite: u32,
    n: usize,
    jobs: usize,
    violations: *mut usize,
    report: *mut *mut c_char,
) -> TrStatus {
    guard(|| {
        non_null!(violations);
        let Some(suite) = TrSuite::from_raw(suite) else {
            return fail(TrStatus::InvalidInput, format!("unknown suite {suite}"));
        };
        let config = Config::default().with_jobs(jobs);
        let result = match suite {
            TrSuite::BrushReconstruction => verify::verify_theorem_main(n, &config).map(|r| (r.count(), r.render())),
            TrSuite::LeafSimilarity => {
                verify::verify_hp0(n, VertexKind::Leaf, &config).map(|r| (r.count(), r.render()))
            }
            TrSuite::NearLeafSimilarity => {
                verify::verify_hp0(n, VertexKind::NearLeaf, &config).map(|r| (r.count(), r.render()))
            }
            TrSuite::StarlikeCrn => verify::verify_remark(n, &config).map(|r| (r.count(), r.render())),
            TrSuite::CrnHistogram => verify::check_conjecture(n, &config).map(|c| (c.report.count(), c.render())),
        };
        match result {
            Ok((count, text)) => {
                *violations = count;
                if report.is_null() {
                    TrStatus::Ok
                } else {
                    write_string(report, &text)
                }
            }
            Err(e) => fail(TrStatus::OutOfRange, e),
        }
    })
}
