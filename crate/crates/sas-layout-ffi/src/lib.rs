//! C ABI for the layout engine: synthesize, parse, measure, render, and
//! free drawings through opaque handles, so any language with a C foreign
//! function interface can bind.
//!
//! Conventions, uniform across the API:
//!
//! - Every fallible function returns a [`SasStatus`] and writes results
//!   through its `out` pointers only on success.
//! - On failure a thread-local message describes what went wrong; read it
//!   with [`sas_last_error_message`].
//! - Strings returned as `*mut c_char` are NUL-terminated UTF-8 owned by
//!   the caller; release them with [`sas_string_free`]. Drawing handles
//!   are released with [`sas_drawing_free`].
//! - Panics never unwind across the boundary; they surface as
//!   [`SasStatus::Panic`].
//!
//! The build script regenerates `include/sas_layout.h` from this file via
//! cbindgen.

#![deny(unsafe_op_in_unsafe_fn)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sas_layout::crossing;
use sas_layout::export::{self, RenderOptions};
use sas_layout::facet;
use sas_layout::model::{make_spec, Coupling, Drawing, EdgeKind, LayoutError, Style};
use sas_layout::stats;
use sas_layout::surface;
use sas_layout::verify;

/// Opaque drawing handle. Created by `sas_drawing_build` or
/// `sas_drawing_parse_json`; released by `sas_drawing_free`.
pub struct SasDrawing(Drawing);

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SasStatus {
    /// Success; all `out` parameters were written.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// An argument value lies outside its documented domain.
    InvalidArgument = 2,
    /// The requested combination is not defined: wrong coupling for a
    /// variant, a style or size a placement does not exist for.
    Unsupported = 3,
    /// A drawing document is malformed or structurally inconsistent.
    BadDocument = 4,
    /// The drawing's geometry violates an embedding rule.
    Geometry = 5,
    /// A string argument was not valid UTF-8.
    Utf8 = 6,
    /// An internal panic was caught at the boundary.
    Panic = 7,
}

/// Where light enters and leaves the chip.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SasCoupling {
    /// Ports couple through the chip surface and may sit anywhere.
    Surface = 0,
    /// Ports couple through the chip facets, on the boundary of a convex
    /// region.
    Facet = 1,
}

/// Switch implementation style.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SasStyle {
    /// Single-point switches; every port is one vertex.
    LumpedElement = 0,
    /// Binary selector trees; every port fans out through split vertices.
    BinaryTree = 1,
}

/// Which drawing `sas_drawing_build` synthesizes.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SasVariant {
    /// Unoptimized drawing: two port columns (surface) or clustered ports
    /// (facet).
    Basic = 0,
    /// Crossing-minimizing planar drawing (surface only).
    Zarankiewicz = 1,
    /// Largest crossing-free spanning subgraph.
    Subgraph = 2,
    /// Crossing-free hybrid drawing with waveguide overpasses.
    Wop = 3,
    /// Lumped-element hybrid routed through boundary chord stubs (surface
    /// only).
    ChordStubWop = 4,
    /// Ports interleaved along two boundary axes (facet only).
    Axes = 5,
    /// Ports interleaved around the boundary (facet only).
    Interleaved = 6,
    /// Ports clustered by party around the boundary (facet only).
    Clustered = 7,
    /// 4 x 4 clustered drawing with detour reroutes (facet only).
    ReroutedClustered = 8,
    /// 4 x 4 interleaved drawing with detour reroutes (facet only).
    ReroutedInterleaved = 9,
}

/// Closed-form crossing and overpass counts for one instance. Optional
/// fields pair a value with a `has_` flag; when the flag is false the
/// value is zero and meaningless.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SasFormulas {
    /// Crossings of the unoptimized drawing.
    pub eta_basic: u64,
    /// Crossings of the optimized drawing: the two-axis count for surface
    /// coupling, the interleaved count for facet coupling.
    pub eta_optimized: u64,
    /// False only for facet instances whose selector count is not a
    /// multiple of the switch count.
    pub has_eta_optimized: bool,
    /// Worst crossings along a single path of the optimized drawing.
    pub xi: u64,
    /// Overpasses of the lumped-element hybrid placement.
    pub mu_le: u64,
    /// Overpasses of the binary-tree hybrid placement.
    pub mu_bt: u64,
    /// False when the binary-tree style does not exist at this size.
    pub has_mu_bt: bool,
}

/// Exact measurements of one drawing, from the geometric oracle.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SasDrawingReport {
    /// Crossings among planar routes and overpass stubs.
    pub planar_crossings: u64,
    /// Largest number of planar crossings carried by a single edge.
    pub per_edge_max: u64,
    /// Crossings among overpass projections only.
    pub projection_crossings: u64,
    /// Edges realized as overpasses.
    pub overpass_count: u64,
    /// Worst planar crossings along a single input-to-output path.
    pub worst_path_crossings: u64,
    /// Worst overpass count along a single input-to-output path.
    pub worst_path_overpasses: u32,
    /// Paths present in the connection map.
    pub connection_count: u64,
}

/// Component totals for an n x n fabric built from binary selector trees.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SasDeviceStats {
    /// Mach-Zehnder interferometers across all 2n selector trees.
    pub mzi_count: u64,
    /// Phase shifters: two arms per interferometer.
    pub phase_shifter_count: u64,
    /// Shifters that must be driven to hold one routing state.
    pub active_shifters_per_state: u64,
    /// Distinct full-fabric routing states, saturating at `UINT64_MAX`.
    pub switch_state_count: u64,
    /// True when the state count saturated.
    pub switch_state_overflowed: bool,
}

/// Accumulated dB penalties along one light path.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct SasPathPenalty {
    /// Total insertion loss in dB.
    pub total_il_db: f64,
    /// Worst-case crosstalk leaked into the path, in dB relative to the
    /// signal; `-INFINITY` when the path crosses nothing.
    pub worst_case_xt_db: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

const NULL_MSG: &str = "required pointer argument is NULL";

fn set_error(msg: &str) {
    let text = CString::new(msg).unwrap_or_else(|_| {
        CString::new("error message contained an interior NUL").expect("literal has no NUL")
    });
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn failure(status: SasStatus, msg: &str) -> SasStatus {
    set_error(msg);
    status
}

fn layout_failure(e: &LayoutError) -> SasStatus {
    failure(status_of(e), &e.to_string())
}

/// Splits the library's error space into the coarse C status codes:
/// domain violations, undefined combinations, malformed documents, and
/// geometric embedding violations.
fn status_of(e: &LayoutError) -> SasStatus {
    use LayoutError as E;
    match e {
        E::ZeroPorts
        | E::TooManyPorts { .. }
        | E::ZeroVertexIndex(_)
        | E::ConnectionOutOfRange { .. }
        | E::NonPositiveScale
        | E::SearchTooLarge { .. }
        | E::StatsTooSmall { .. }
        | E::PositiveCrosstalk(_)
        | E::NegativeInsertionLoss(_)
        | E::RenderTooNarrow(_) => SasStatus::InvalidArgument,
        E::BinaryTreeArity { .. } | E::NotInterleavable { .. } | E::UnsupportedSize { .. } => {
            SasStatus::Unsupported
        }
        E::BadRational(_)
        | E::BadDocument(_)
        | E::DuplicateVertex(_)
        | E::UnknownEndpoint { .. }
        | E::ShortPolyline(_)
        | E::RouteEndpointMismatch(_)
        | E::UnexpectedStubs(_)
        | E::MissingStubs(_)
        | E::BoundaryMissing
        | E::BoundaryUnexpected
        | E::EmptyConnection { .. }
        | E::DuplicateConnection { .. }
        | E::BadEdgeIndex { .. }
        | E::DisconnectedPath { .. }
        | E::MissingTerminal { .. }
        | E::IncompleteConnectionMap { .. } => SasStatus::BadDocument,
        E::CoincidentVertices(..)
        | E::ZeroLengthSegment(_)
        | E::SelfIntersectingPolyline(_)
        | E::DegenerateBoundary
        | E::NonConvexBoundary
        | E::PortOffBoundary(_)
        | E::RouteOutsideBoundary { .. }
        | E::SegmentOverlap(..)
        | E::SelfCrossingEdge(_)
        | E::RouteThroughVertex { .. }
        | E::DegenerateContact(..)
        | E::IrreducibleConflict(..) => SasStatus::Geometry,
    }
}

fn guarded<F: FnOnce() -> SasStatus>(body: F) -> SasStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => failure(SasStatus::Panic, "internal panic caught at the C boundary"),
    }
}

fn coupling_of(coupling: SasCoupling) -> Coupling {
    match coupling {
        SasCoupling::Surface => Coupling::Surface,
        SasCoupling::Facet => Coupling::Facet,
    }
}

fn style_of(style: SasStyle) -> Style {
    match style {
        SasStyle::LumpedElement => Style::LumpedElement,
        SasStyle::BinaryTree => Style::BinaryTree,
    }
}

fn check_4x4(m: u32, n: u32) -> Result<(), SasStatus> {
    if (m, n) == (4, 4) {
        Ok(())
    } else {
        Err(failure(
            SasStatus::Unsupported,
            &format!("rerouted demonstrations are fixed at 4 x 4, got {m} x {n}"),
        ))
    }
}

fn synthesize(
    coupling: SasCoupling,
    style: SasStyle,
    variant: SasVariant,
    m: u32,
    n: u32,
) -> Result<Drawing, SasStatus> {
    let style = style_of(style);
    make_spec(m, n, coupling_of(coupling), style).map_err(|e| layout_failure(&e))?;
    let built = match (coupling, variant) {
        (SasCoupling::Surface, SasVariant::Basic) => surface::build_basic_surface_drawing(m, n),
        (SasCoupling::Surface, SasVariant::Zarankiewicz) => {
            surface::build_zarankiewicz_drawing(m, n)
        }
        (SasCoupling::Surface, SasVariant::Subgraph) => {
            surface::build_spanning_max_planar_subgraph(m, n)
        }
        (SasCoupling::Surface, SasVariant::Wop) => match style {
            Style::LumpedElement => surface::place_wop_le_surface(m, n),
            Style::BinaryTree => surface::place_wop_bt_surface(m, n),
        },
        (SasCoupling::Surface, SasVariant::ChordStubWop) => {
            if style == Style::BinaryTree {
                return Err(failure(
                    SasStatus::Unsupported,
                    "chord-stub placement exists only for the lumped-element style",
                ));
            }
            surface::place_wop_le_surface_chord_stubs(m, n)
        }
        (SasCoupling::Facet, SasVariant::Basic | SasVariant::Clustered) => {
            facet::build_clustered_facet_drawing(m, n)
        }
        (SasCoupling::Facet, SasVariant::Axes) => facet::build_facet_axes_drawing(m, n),
        (SasCoupling::Facet, SasVariant::Interleaved) => {
            facet::build_interleaved_facet_drawing_mn(m, n)
        }
        (SasCoupling::Facet, SasVariant::Subgraph) => {
            facet::build_facet_spanning_planar_subgraph(m, n)
        }
        (SasCoupling::Facet, SasVariant::Wop) => match style {
            Style::LumpedElement => facet::place_wop_le_facet(m, n),
            Style::BinaryTree => facet::place_wop_bt_facet(m, n),
        },
        (SasCoupling::Facet, SasVariant::ReroutedClustered) => {
            check_4x4(m, n)?;
            facet::clustered_rerouted_4x4()
        }
        (SasCoupling::Facet, SasVariant::ReroutedInterleaved) => {
            check_4x4(m, n)?;
            facet::interleaved_rerouted_4x4()
        }
        (coupling, variant) => {
            return Err(failure(
                SasStatus::Unsupported,
                &format!("variant {variant:?} is not defined for {coupling:?} coupling"),
            ));
        }
    };
    built.map_err(|e| layout_failure(&e))
}

fn give_drawing(drawing: Drawing, out: &mut *mut SasDrawing) -> SasStatus {
    *out = Box::into_raw(Box::new(SasDrawing(drawing)));
    SasStatus::Ok
}

fn give_string(text: String, out: &mut *mut c_char) -> SasStatus {
    let text = CString::new(text).expect("generated text has no interior NUL");
    *out = text.into_raw();
    SasStatus::Ok
}

/// Message for the most recent failure on the calling thread, or NULL when
/// no call has failed yet. The pointer stays valid until the next failing
/// call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn sas_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |msg| msg.as_ptr()))
}

/// Writes the closed-form counts for an m x n surface-coupled instance.
///
/// # Safety
/// `out` must be NULL or point to writable memory for one `SasFormulas`.
#[no_mangle]
pub unsafe extern "C" fn sas_surface_formulas(m: u32, n: u32, out: *mut SasFormulas) -> SasStatus {
    guarded(|| {
        let Some(out) = (unsafe { out.as_mut() }) else {
            return failure(SasStatus::NullPointer, NULL_MSG);
        };
        if let Err(e) = make_spec(m, n, Coupling::Surface, Style::LumpedElement) {
            return layout_failure(&e);
        }
        let f = surface::surface_formulas(m, n);
        *out = SasFormulas {
            eta_basic: f.eta_basic,
            eta_optimized: f.eta_conjectured,
            has_eta_optimized: true,
            xi: f.xi,
            mu_le: f.mu_le,
            mu_bt: f.mu_bt.unwrap_or(0),
            has_mu_bt: f.mu_bt.is_some(),
        };
        SasStatus::Ok
    })
}

/// Writes the closed-form counts for an m x n facet-coupled instance.
///
/// # Safety
/// `out` must be NULL or point to writable memory for one `SasFormulas`.
#[no_mangle]
pub unsafe extern "C" fn sas_facet_formulas(m: u32, n: u32, out: *mut SasFormulas) -> SasStatus {
    guarded(|| {
        let Some(out) = (unsafe { out.as_mut() }) else {
            return failure(SasStatus::NullPointer, NULL_MSG);
        };
        if let Err(e) = make_spec(m, n, Coupling::Facet, Style::LumpedElement) {
            return layout_failure(&e);
        }
        let f = facet::facet_formulas(m, n);
        *out = SasFormulas {
            eta_basic: f.eta_basic,
            eta_optimized: f.eta_interleaved.unwrap_or(0),
            has_eta_optimized: f.eta_interleaved.is_some(),
            xi: f.xi,
            mu_le: f.mu_le,
            mu_bt: f.mu_bt.unwrap_or(0),
            has_mu_bt: f.mu_bt.is_some(),
        };
        SasStatus::Ok
    })
}

/// Synthesizes a drawing and returns an owned handle through `out`.
///
/// # Safety
/// `out` must be NULL or point to writable memory for one pointer;
/// `coupling`, `style`, and `variant` must be values declared in this
/// header.
#[no_mangle]
pub unsafe extern "C" fn sas_drawing_build(
    coupling: SasCoupling,
    style: SasStyle,
    variant: SasVariant,
    m: u32,
    n: u32,
    out: *mut *mut SasDrawing,
) -> SasStatus {
    guarded(|| {
        let Some(out) = (unsafe { out.as_mut() }) else {
            return failure(SasStatus::NullPointer, NULL_MSG);
        };
        match synthesize(coupling, style, variant, m, n) {
            Ok(drawing) => give_drawing(drawing, out),
            Err(status) => status,
        }
    })
}

/// Parses a drawing document (the JSON schema emitted by
/// `sas_drawing_export_json`) and returns an owned handle through `out`.
/// The document is revalidated by the full geometric screen.
///
/// # Safety
/// `text` must be NULL or a NUL-terminated string; `out` must be NULL or
/// point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn sas_drawing_parse_json(
    text: *const c_char,
    out: *mut *mut SasDrawing,
) -> SasStatus {
    guarded(|| {
        let Some(out) = (unsafe { out.as_mut() }) else {
            return failure(SasStatus::NullPointer, NULL_MSG);
        };
        if text.is_null() {
            return failure(SasStatus::NullPointer, NULL_MSG);
        }
        let Ok(text) = (unsafe { CStr::from_ptr(text) }).to_str() else {
            return failure(SasStatus::Utf8, "drawing document is not valid UTF-8");
        };
        match export::parse_drawing_json(text) {
            Ok(drawing) => give_drawing(drawing, out),
            Err(e) => layout_failure(&e),
        }
    })
}

/// Serializes a drawing into its JSON document, with exact rational
/// coordinates. Deterministic for a given drawing.
///
/// # Safety
/// `drawing` must be NULL or a live handle from this library; `out` must
/// be NULL or point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn sas_drawing_export_json(
    drawing: *const SasDrawing,
    out: *mut *mut c_char,
) -> SasStatus {
    guarded(|| {
        let Some(out) = (unsafe { out.as_mut() }) else {
            return failure(SasStatus::NullPointer, NULL_MSG);
        };
        let Some(drawing) = (unsafe { drawing.as_ref() }) else {
            return failure(SasStatus::NullPointer, NULL_MSG);
        };
        give_string(export::export_drawing_json(&drawing.0), out)
    })
}

/// Renders a drawing as SVG at the given total width (at least 64 px),
/// with overpass projections dashed and highlighted.
///
/// # Safety
/// `drawing` must be NULL or a live handle from this library; `out` must
/// be NULL or point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn sas_drawing_render_svg(
    drawing: *const SasDrawing,
    width_px: u32,
    out: *mut *mut c_char,
) -> SasStatus {
    guarded(|| {
        let Some(out) = (unsafe { out.as_mut() }) else {
            return failure(SasStatus::NullPointer, NULL_MSG);
        };
        let Some(drawing) = (unsafe { drawing.as_ref() }) else {
            return failure(SasStatus::NullPointer, NULL_MSG);
        };
        let opts = RenderOptions { width_px, ..RenderOptions::default() };
        match export::render_svg(&drawing.0, &opts) {
            Ok(svg) => give_string(svg, out),
            Err(e) => layout_failure(&e),
        }
    })
}

/// Measures a drawing with the exact geometric oracle and writes the
/// totals through `out`.
///
/// # Safety
/// `drawing` must be NULL or a live handle from this library; `out` must
/// be NULL or point to writable memory for one `SasDrawingReport`.
#[no_mangle]
pub unsafe extern "C" fn sas_drawing_report(
    drawing: *const SasDrawing,
    out: *mut SasDrawingReport,
) -> SasStatus {
    guarded(|| {
        let Some(out) = (unsafe { out.as_mut() }) else {
            return failure(SasStatus::NullPointer, NULL_MSG);
        };
        let Some(drawing) = (unsafe { drawing.as_ref() }) else {
            return failure(SasStatus::NullPointer, NULL_MSG);
        };
        let drawing = &drawing.0;
        let counts = match crossing::count_crossings(drawing) {
            Ok(counts) => counts,
            Err(e) => return layout_failure(&e),
        };
        *out = SasDrawingReport {
            planar_crossings: counts.total_planar_crossings,
            per_edge_max: counts.per_edge_max,
            projection_crossings: counts.overpass_projection_crossings,
            overpass_count: drawing
                .edges
                .iter()
                .filter(|e| e.kind == EdgeKind::Overpass)
                .count() as u64,
            worst_path_crossings: crossing::max_crossings_along_path(drawing),
            worst_path_overpasses: crossing::max_overpasses_along_path(drawing),
            connection_count: drawing.connection_map.len() as u64,
        };
        SasStatus::Ok
    })
}

/// Checks every closed form against the exact geometric oracle for one
/// instance and returns the full report as JSON. Known formula-versus-
/// geometry discrepancies are whitelisted inside the report.
///
/// # Safety
/// `out` must be NULL or point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn sas_verify_instance_json(
    coupling: SasCoupling,
    style: SasStyle,
    m: u32,
    n: u32,
    out: *mut *mut c_char,
) -> SasStatus {
    guarded(|| {
        let Some(out) = (unsafe { out.as_mut() }) else {
            return failure(SasStatus::NullPointer, NULL_MSG);
        };
        let spec = match make_spec(m, n, coupling_of(coupling), style_of(style)) {
            Ok(spec) => spec,
            Err(e) => return layout_failure(&e),
        };
        match verify::verify_instance(spec) {
            Ok(report) => {
                let json = serde_json::to_string_pretty(&report).expect("reports serialize");
                give_string(json, out)
            }
            Err(e) => layout_failure(&e),
        }
    })
}

/// Writes component totals for an n x n fabric built from binary selector
/// trees.
///
/// # Safety
/// `out` must be NULL or point to writable memory for one
/// `SasDeviceStats`.
#[no_mangle]
pub unsafe extern "C" fn sas_device_stats(n: u32, out: *mut SasDeviceStats) -> SasStatus {
    guarded(|| {
        let Some(out) = (unsafe { out.as_mut() }) else {
            return failure(SasStatus::NullPointer, NULL_MSG);
        };
        match stats::device_stats(n) {
            Ok(s) => {
                *out = SasDeviceStats {
                    mzi_count: s.mzi_count,
                    phase_shifter_count: s.phase_shifter_count,
                    active_shifters_per_state: s.active_shifters_per_state,
                    switch_state_count: s.switch_state_count,
                    switch_state_overflowed: s.switch_state_overflowed,
                };
                SasStatus::Ok
            }
            Err(e) => layout_failure(&e),
        }
    })
}

/// Prices a path's crossings in dB. Insertion loss per crossing must be
/// nonnegative and crosstalk per crossing nonpositive; `incoherent` sums
/// crosstalk in power rather than amplitude.
///
/// # Safety
/// `out` must be NULL or point to writable memory for one
/// `SasPathPenalty`.
#[no_mangle]
pub unsafe extern "C" fn sas_path_penalty(
    crossings: u64,
    il_per_crossing_db: f64,
    xt_per_crossing_db: f64,
    incoherent: bool,
    out: *mut SasPathPenalty,
) -> SasStatus {
    guarded(|| {
        let Some(out) = (unsafe { out.as_mut() }) else {
            return failure(SasStatus::NullPointer, NULL_MSG);
        };
        let result = if incoherent {
            stats::path_penalty_incoherent(crossings, il_per_crossing_db, xt_per_crossing_db)
        } else {
            stats::path_penalty(crossings, il_per_crossing_db, xt_per_crossing_db)
        };
        match result {
            Ok(p) => {
                *out = SasPathPenalty {
                    total_il_db: p.total_il_db,
                    worst_case_xt_db: p.worst_case_coherent_xt_db,
                };
                SasStatus::Ok
            }
            Err(e) => layout_failure(&e),
        }
    })
}

/// Releases a drawing handle. NULL is accepted and ignored.
///
/// # Safety
/// `drawing` must be NULL or a handle returned by this library that has
/// not been freed already.
#[no_mangle]
pub unsafe extern "C" fn sas_drawing_free(drawing: *mut SasDrawing) {
    if !drawing.is_null() {
        drop(unsafe { Box::from_raw(drawing) });
    }
}

/// Releases a string returned by this library. NULL is accepted and
/// ignored.
///
/// # Safety
/// `text` must be NULL or a string returned by this library that has not
/// been freed already.
#[no_mangle]
pub unsafe extern "C" fn sas_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}

#[cfg(test)]
mod tests {
    use std::mem::MaybeUninit;

    use super::*;

    fn build(
        coupling: SasCoupling,
        style: SasStyle,
        variant: SasVariant,
        m: u32,
        n: u32,
    ) -> *mut SasDrawing {
        let mut handle = ptr::null_mut();
        let status = unsafe { sas_drawing_build(coupling, style, variant, m, n, &mut handle) };
        assert_eq!(status, SasStatus::Ok);
        assert!(!handle.is_null());
        handle
    }

    fn report(handle: *const SasDrawing) -> SasDrawingReport {
        let mut out = MaybeUninit::uninit();
        assert_eq!(unsafe { sas_drawing_report(handle, out.as_mut_ptr()) }, SasStatus::Ok);
        unsafe { out.assume_init() }
    }

    fn take_string(ptr: *mut c_char) -> String {
        assert!(!ptr.is_null());
        let text = unsafe { CStr::from_ptr(ptr) }.to_str().expect("UTF-8").to_owned();
        unsafe { sas_string_free(ptr) };
        text
    }

    fn last_error() -> String {
        let ptr = sas_last_error_message();
        assert!(!ptr.is_null());
        unsafe { CStr::from_ptr(ptr) }.to_str().expect("UTF-8").to_owned()
    }

    #[test]
    fn closed_forms_cross_the_boundary_intact() {
        let mut f = MaybeUninit::uninit();
        assert_eq!(unsafe { sas_surface_formulas(4, 4, f.as_mut_ptr()) }, SasStatus::Ok);
        let f = unsafe { f.assume_init() };
        assert_eq!(
            f,
            SasFormulas {
                eta_basic: 36,
                eta_optimized: 4,
                has_eta_optimized: true,
                xi: 1,
                mu_le: 4,
                mu_bt: 2,
                has_mu_bt: true,
            }
        );

        let mut f = MaybeUninit::uninit();
        assert_eq!(unsafe { sas_facet_formulas(4, 4, f.as_mut_ptr()) }, SasStatus::Ok);
        let f = unsafe { f.assume_init() };
        assert_eq!(
            f,
            SasFormulas {
                eta_basic: 36,
                eta_optimized: 16,
                has_eta_optimized: true,
                xi: 4,
                mu_le: 9,
                mu_bt: 5,
                has_mu_bt: true,
            }
        );

        let mut f = MaybeUninit::uninit();
        assert_eq!(unsafe { sas_facet_formulas(2, 3, f.as_mut_ptr()) }, SasStatus::Ok);
        let f = unsafe { f.assume_init() };
        assert!(!f.has_eta_optimized);

        let mut f = MaybeUninit::uninit();
        assert_eq!(
            unsafe { sas_surface_formulas(0, 4, f.as_mut_ptr()) },
            SasStatus::InvalidArgument
        );
        assert!(last_error().contains("positive"));
    }

    #[test]
    fn hybrid_drawings_report_their_overpass_budget() {
        let le = build(SasCoupling::Surface, SasStyle::LumpedElement, SasVariant::Wop, 4, 4);
        let r = report(le);
        assert_eq!(r.planar_crossings, 0);
        assert_eq!(r.projection_crossings, 0);
        assert_eq!(r.overpass_count, 4);
        assert_eq!(r.connection_count, 16);
        assert!(r.worst_path_overpasses <= 1);
        unsafe { sas_drawing_free(le) };

        let bt = build(SasCoupling::Surface, SasStyle::BinaryTree, SasVariant::Wop, 4, 4);
        let r = report(bt);
        assert_eq!(r.planar_crossings, 0);
        assert_eq!(r.overpass_count, 2);
        assert_eq!(r.worst_path_overpasses, 1);
        unsafe { sas_drawing_free(bt) };
    }

    #[test]
    fn documents_round_trip_byte_for_byte() {
        let handle = build(SasCoupling::Facet, SasStyle::LumpedElement, SasVariant::Interleaved, 3, 3);
        let mut json = ptr::null_mut();
        assert_eq!(unsafe { sas_drawing_export_json(handle, &mut json) }, SasStatus::Ok);
        let first = take_string(json);
        unsafe { sas_drawing_free(handle) };

        let text = CString::new(first.clone()).expect("no interior NUL");
        let mut reparsed = ptr::null_mut();
        assert_eq!(
            unsafe { sas_drawing_parse_json(text.as_ptr(), &mut reparsed) },
            SasStatus::Ok
        );
        let mut json = ptr::null_mut();
        assert_eq!(unsafe { sas_drawing_export_json(reparsed, &mut json) }, SasStatus::Ok);
        assert_eq!(take_string(json), first);
        unsafe { sas_drawing_free(reparsed) };
    }

    #[test]
    fn svg_rendering_respects_the_width_floor() {
        let handle = build(SasCoupling::Surface, SasStyle::LumpedElement, SasVariant::Zarankiewicz, 3, 3);
        let mut svg = ptr::null_mut();
        assert_eq!(unsafe { sas_drawing_render_svg(handle, 320, &mut svg) }, SasStatus::Ok);
        assert!(take_string(svg).starts_with("<svg"));

        let mut svg = ptr::null_mut();
        assert_eq!(
            unsafe { sas_drawing_render_svg(handle, 10, &mut svg) },
            SasStatus::InvalidArgument
        );
        assert!(last_error().contains("64"));
        unsafe { sas_drawing_free(handle) };
    }

    #[test]
    fn every_failure_leaves_a_status_and_message() {
        let mut handle = ptr::null_mut();

        let status = unsafe {
            sas_drawing_build(
                SasCoupling::Facet,
                SasStyle::LumpedElement,
                SasVariant::ReroutedClustered,
                3,
                4,
                &mut handle,
            )
        };
        assert_eq!(status, SasStatus::Unsupported);
        assert!(last_error().contains("4 x 4"));

        let status = unsafe {
            sas_drawing_build(
                SasCoupling::Surface,
                SasStyle::LumpedElement,
                SasVariant::Axes,
                3,
                3,
                &mut handle,
            )
        };
        assert_eq!(status, SasStatus::Unsupported);
        assert!(last_error().contains("not defined"));

        let status = unsafe {
            sas_drawing_build(
                SasCoupling::Surface,
                SasStyle::BinaryTree,
                SasVariant::ChordStubWop,
                4,
                4,
                &mut handle,
            )
        };
        assert_eq!(status, SasStatus::Unsupported);
        assert!(last_error().contains("lumped-element"));

        let status = unsafe {
            sas_drawing_build(
                SasCoupling::Surface,
                SasStyle::LumpedElement,
                SasVariant::Basic,
                0,
                4,
                &mut handle,
            )
        };
        assert_eq!(status, SasStatus::InvalidArgument);

        let bad = CString::new("{\"not\": \"a drawing\"}").expect("no interior NUL");
        assert_eq!(
            unsafe { sas_drawing_parse_json(bad.as_ptr(), &mut handle) },
            SasStatus::BadDocument
        );

        let not_utf8 = [0xff_u8, 0xfe, 0x00];
        assert_eq!(
            unsafe { sas_drawing_parse_json(not_utf8.as_ptr().cast(), &mut handle) },
            SasStatus::Utf8
        );

        assert_eq!(
            unsafe { sas_drawing_parse_json(ptr::null(), &mut handle) },
            SasStatus::NullPointer
        );
        assert_eq!(
            unsafe {
                sas_drawing_build(
                    SasCoupling::Surface,
                    SasStyle::LumpedElement,
                    SasVariant::Basic,
                    4,
                    4,
                    ptr::null_mut(),
                )
            },
            SasStatus::NullPointer
        );

        unsafe { sas_drawing_free(ptr::null_mut()) };
        unsafe { sas_string_free(ptr::null_mut()) };
    }

    #[test]
    fn component_stats_and_penalties_match_the_library() {
        let mut s = MaybeUninit::uninit();
        assert_eq!(unsafe { sas_device_stats(4, s.as_mut_ptr()) }, SasStatus::Ok);
        let s = unsafe { s.assume_init() };
        assert_eq!(
            (s.mzi_count, s.phase_shifter_count, s.active_shifters_per_state, s.switch_state_count),
            (24, 48, 16, 24)
        );
        assert!(!s.switch_state_overflowed);

        let mut s = MaybeUninit::uninit();
        assert_eq!(unsafe { sas_device_stats(1, s.as_mut_ptr()) }, SasStatus::InvalidArgument);

        let mut p = MaybeUninit::uninit();
        assert_eq!(
            unsafe { sas_path_penalty(100, 0.04, -40.0, false, p.as_mut_ptr()) },
            SasStatus::Ok
        );
        let p = unsafe { p.assume_init() };
        assert!((p.total_il_db - 4.0).abs() < 1e-9);
        assert!(p.worst_case_xt_db.abs() < 1e-9);

        let mut p = MaybeUninit::uninit();
        assert_eq!(
            unsafe { sas_path_penalty(0, 0.04, -40.0, false, p.as_mut_ptr()) },
            SasStatus::Ok
        );
        assert_eq!(unsafe { p.assume_init() }.worst_case_xt_db, f64::NEG_INFINITY);

        let mut p = MaybeUninit::uninit();
        assert_eq!(
            unsafe { sas_path_penalty(100, 0.04, 1.0, false, p.as_mut_ptr()) },
            SasStatus::InvalidArgument
        );
        assert!(last_error().contains("nonpositive"));
    }

    #[test]
    fn verification_report_serializes_with_whitelist_applied() {
        let mut json = ptr::null_mut();
        let status = unsafe {
            sas_verify_instance_json(SasCoupling::Surface, SasStyle::LumpedElement, 5, 5, &mut json)
        };
        assert_eq!(status, SasStatus::Ok);
        let report: serde_json::Value =
            serde_json::from_str(&take_string(json)).expect("report json");
        assert_eq!(report["pass"], true);
        assert_eq!(report["discrepancies"].as_array().expect("array").len(), 1);
        assert_eq!(report["discrepancies"][0]["whitelisted"], true);
    }

    #[test]
    fn generated_header_declares_the_api() {
        let header = std::fs::read_to_string(
            std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/sas_layout.h"),
        )
        .expect("header generated at build time");
        for needle in [
            "SAS_STATUS_OK",
            "SAS_VARIANT_CHORD_STUB_WOP",
            "typedef struct SasDrawing SasDrawing;",
            "sas_drawing_build",
            "sas_drawing_report",
            "sas_last_error_message",
            "sas_string_free",
        ] {
            assert!(header.contains(needle), "header lacks {needle}");
        }
    }
}
