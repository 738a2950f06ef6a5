//! Independent brute-force verification.
//!
//! Every closed-form count in this crate is re-derived here from geometry
//! alone: drawings are rebuilt, recounted by the exact crossing oracle, and
//! compared against their formulas quantity by quantity. The module also
//! enumerates complete path censuses, exhaustively searches small
//! convex-position drawings for the true outerplanar minimum, and evaluates
//! the reference comparison tables. Verification never consults the formula
//! it is checking while measuring.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crossing;
use crate::facet::{self, FacetFormulaSet};
use crate::model::{
    make_spec, rat_int, CircuitSpec, Coupling, Drawing, EdgeKind, LayoutError, PathTrace, Style,
    VertexId,
};
use crate::planarity::is_planar_abstract;
use crate::surface::{self, SurfaceFormulaSet};

/// The closed forms under test, one set per coupling.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum FormulaValues {
    Surface(SurfaceFormulaSet),
    Facet(FacetFormulaSet),
}

/// Oracle measurements of one hybrid overpass placement.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WopMeasurement {
    /// Overpass edges placed.
    pub overpasses: u64,
    /// Waveguide crossings left in the plane; zero in a passing report.
    pub planar_crossings: u64,
    /// Crossings between overpass projections; zero in a passing report.
    pub projection_crossings: u64,
    /// Largest number of overpasses traversed by any one path.
    pub worst_path_overpasses: u32,
    /// Paths in the connection map; must cover all m * n pairs.
    pub connections: u64,
}

/// Everything the oracle measured for one instance. `None` marks a quantity
/// the instance cannot realize: binary-tree styles need two ports per side,
/// the interleaved drawing needs n divisible by m, and the fan scaffolds
/// need two ports per side.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MeasuredValues {
    /// Crossings of the baseline drawing: two-column for surface coupling,
    /// clustered port order for facet coupling.
    pub basic_crossings: u64,
    /// Facet only: crossings of the two-axis drawing inside a rectangle,
    /// which must agree with the clustered count.
    pub axes_crossings: Option<u64>,
    /// Crossings of the optimized drawing: two-axis for surface, balanced
    /// interleaved for facet.
    pub optimized_crossings: Option<u64>,
    /// Worst planar crossings along one path of the optimized drawing.
    pub optimized_worst_path: Option<u64>,
    /// Largest crossing load on a single edge of the optimized drawing.
    pub optimized_per_edge_max: Option<u64>,
    /// Edge count of the spanning planar subgraph.
    pub subgraph_edges: Option<u64>,
    /// Whether the subgraph is abstractly planar and drawn crossing-free.
    pub subgraph_is_planar: Option<bool>,
    /// Measurements of the hybrid placement for the requested switch style.
    pub hybrid: Option<WopMeasurement>,
}

/// One formula-versus-measurement mismatch.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Discrepancy {
    pub quantity: String,
    pub formula: u64,
    pub measured: u64,
    pub note: String,
    /// True only for the historic floor-form per-edge figure, which is known
    /// to undercount odd port splits and does not fail the report.
    pub whitelisted: bool,
}

/// Formulas, measurements, and their reconciliation for one instance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub spec: CircuitSpec,
    pub formula_values: FormulaValues,
    pub measured_values: MeasuredValues,
    pub discrepancies: Vec<Discrepancy>,
    /// True when every discrepancy (if any) is whitelisted.
    pub pass: bool,
    /// Square surface instances only: the optimized crossing count divided
    /// by n^4 / 16, as an exact fraction. Informational; never asserted.
    pub lower_bound_ratio: Option<String>,
}

/// Census of every input-to-output path of a drawing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathCensus {
    /// Connection pairs with their traces, in (input, output) order.
    pub paths: Vec<((u32, u32), PathTrace)>,
    /// Sum of planar crossings over all paths.
    pub planar_crossings_sum: u64,
    /// Worst planar crossings along a single path.
    pub planar_crossings_max: u64,
    /// Worst overpass count along a single path.
    pub overpass_max: u32,
    /// Paths that traverse at least one overpass.
    pub overpassing_paths: usize,
}

/// Lists every path of a drawing with aggregate crossing statistics.
/// Requires a total connection map.
pub fn enumerate_paths(drawing: &Drawing) -> Result<PathCensus, LayoutError> {
    let want = u64::from(drawing.spec.m) * u64::from(drawing.spec.n);
    let have = drawing.connection_map.len();
    if have as u64 != want {
        return Err(LayoutError::IncompleteConnectionMap { have, want });
    }
    let paths: Vec<_> = drawing
        .connection_map
        .iter()
        .map(|(&pair, trace)| (pair, trace.clone()))
        .collect();
    let planar_crossings_sum = paths.iter().map(|(_, t)| t.planar_crossings).sum();
    let planar_crossings_max = paths.iter().map(|(_, t)| t.planar_crossings).max().unwrap_or(0);
    let overpass_max = paths.iter().map(|(_, t)| t.overpass_count).max().unwrap_or(0);
    let overpassing_paths = paths.iter().filter(|(_, t)| t.overpass_count > 0).count();
    Ok(PathCensus {
        paths,
        planar_crossings_sum,
        planar_crossings_max,
        overpass_max,
        overpassing_paths,
    })
}

/// Maps structural-precondition failures to `None`; anything else is a
/// genuine construction failure and propagates.
fn applicable(build: Result<Drawing, LayoutError>) -> Result<Option<Drawing>, LayoutError> {
    match build {
        Ok(d) => Ok(Some(d)),
        Err(
            LayoutError::BinaryTreeArity { .. }
            | LayoutError::NotInterleavable { .. }
            | LayoutError::UnsupportedSize { .. },
        ) => Ok(None),
        Err(e) => Err(e),
    }
}

fn check(out: &mut Vec<Discrepancy>, quantity: &str, formula: u64, measured: u64) {
    if formula != measured {
        out.push(Discrepancy {
            quantity: quantity.to_owned(),
            formula,
            measured,
            note: "closed form and oracle measurement disagree".to_owned(),
            whitelisted: false,
        });
    }
}

fn measure_wop(drawing: &Drawing) -> Result<WopMeasurement, LayoutError> {
    let report = crossing::count_crossings(drawing)?;
    let census = enumerate_paths(drawing)?;
    let overpasses = drawing
        .edges
        .iter()
        .filter(|e| e.kind == EdgeKind::Overpass)
        .count() as u64;
    Ok(WopMeasurement {
        overpasses,
        planar_crossings: report.total_planar_crossings,
        projection_crossings: report.overpass_projection_crossings,
        worst_path_overpasses: census.overpass_max,
        connections: census.paths.len() as u64,
    })
}

fn subgraph_is_sound(drawing: &Drawing) -> Result<bool, LayoutError> {
    let ids: Vec<VertexId> = drawing.positions.keys().copied().collect();
    let index: BTreeMap<VertexId, usize> =
        ids.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let edges: Vec<(usize, usize)> = drawing
        .edges
        .iter()
        .map(|e| (index[&e.from], index[&e.to]))
        .collect();
    let crossing_free = crossing::count_crossings(drawing)?.total_planar_crossings == 0;
    Ok(crossing_free && is_planar_abstract(ids.len(), &edges))
}

fn check_hybrid(
    out: &mut Vec<Discrepancy>,
    spec: CircuitSpec,
    mu: Option<u64>,
    hybrid: &Option<WopMeasurement>,
) {
    if let (Some(mu), Some(w)) = (mu, hybrid) {
        check(out, "hybrid overpasses placed", mu, w.overpasses);
        check(out, "hybrid residual planar crossings", 0, w.planar_crossings);
        check(out, "hybrid residual projection crossings", 0, w.projection_crossings);
        check(
            out,
            "hybrid worst overpasses along one path",
            u64::from(mu > 0),
            u64::from(w.worst_path_overpasses),
        );
        check(
            out,
            "hybrid connections served",
            u64::from(spec.m) * u64::from(spec.n),
            w.connections,
        );
    }
}

fn styled_mu(style: Style, mu_le: u64, mu_bt: Option<u64>) -> Option<u64> {
    match style {
        Style::LumpedElement => Some(mu_le),
        Style::BinaryTree => mu_bt,
    }
}

fn verify_surface(spec: CircuitSpec) -> Result<VerificationReport, LayoutError> {
    let (m, n) = (spec.m, spec.n);
    let formulas = surface::surface_formulas(m, n);
    let mut discrepancies = Vec::new();

    let basic = surface::build_basic_surface_drawing(m, n)?;
    let basic_crossings = crossing::count_crossings(&basic)?.total_planar_crossings;
    check(&mut discrepancies, "two-column drawing crossings", formulas.eta_basic, basic_crossings);

    let two_axis = surface::build_zarankiewicz_drawing(m, n)?;
    let report = crossing::count_crossings(&two_axis)?;
    let census = enumerate_paths(&two_axis)?;
    check(
        &mut discrepancies,
        "two-axis drawing crossings",
        formulas.eta_conjectured,
        report.total_planar_crossings,
    );
    check(
        &mut discrepancies,
        "two-axis worst path crossings",
        formulas.xi,
        census.planar_crossings_max,
    );
    check(&mut discrepancies, "two-axis per-edge maximum", formulas.xi, report.per_edge_max);
    let floor_form =
        u64::from(m / 2).saturating_sub(1) * u64::from(n / 2).saturating_sub(1);
    if floor_form != report.per_edge_max {
        discrepancies.push(Discrepancy {
            quantity: "two-axis per-edge maximum, floor-form variant".to_owned(),
            formula: floor_form,
            measured: report.per_edge_max,
            note: "the floor form undercounts odd port splits; every generated drawing \
                   attains the ceiling form. Known inconsistency."
                .to_owned(),
            whitelisted: true,
        });
    }

    let subgraph = applicable(surface::build_spanning_max_planar_subgraph(m, n))?;
    let mut subgraph_edges = None;
    let mut subgraph_is_planar = None;
    if let Some(d) = &subgraph {
        let edges = d.edges.len() as u64;
        subgraph_edges = Some(edges);
        check(
            &mut discrepancies,
            "spanning subgraph edges",
            2 * u64::from(m) + 2 * u64::from(n) - 4,
            edges,
        );
        let sound = subgraph_is_sound(d)?;
        subgraph_is_planar = Some(sound);
        check(&mut discrepancies, "spanning subgraph planarity", 1, u64::from(sound));
    }

    let hybrid_drawing = match spec.style {
        Style::LumpedElement => applicable(surface::place_wop_le_surface(m, n))?,
        Style::BinaryTree => applicable(surface::place_wop_bt_surface(m, n))?,
    };
    let hybrid = hybrid_drawing.as_ref().map(measure_wop).transpose()?;
    check_hybrid(
        &mut discrepancies,
        spec,
        styled_mu(spec.style, formulas.mu_le, formulas.mu_bt),
        &hybrid,
    );

    let lower_bound_ratio = (m == n).then(|| {
        let side = rat_int(i64::from(n));
        let fourth = &side * &side * &side * &side;
        (rat_int(16) * rat_int(formulas.eta_conjectured as i64) / fourth).to_string()
    });

    let pass = discrepancies.iter().all(|d| d.whitelisted);
    Ok(VerificationReport {
        spec,
        formula_values: FormulaValues::Surface(formulas),
        measured_values: MeasuredValues {
            basic_crossings,
            axes_crossings: None,
            optimized_crossings: Some(report.total_planar_crossings),
            optimized_worst_path: Some(census.planar_crossings_max),
            optimized_per_edge_max: Some(report.per_edge_max),
            subgraph_edges,
            subgraph_is_planar,
            hybrid,
        },
        discrepancies,
        pass,
        lower_bound_ratio,
    })
}

fn verify_facet(spec: CircuitSpec) -> Result<VerificationReport, LayoutError> {
    let (m, n) = (spec.m, spec.n);
    let formulas = facet::facet_formulas(m, n);
    let mut discrepancies = Vec::new();

    let clustered = facet::build_clustered_facet_drawing(m, n)?;
    let basic_crossings = crossing::count_crossings(&clustered)?.total_planar_crossings;
    check(&mut discrepancies, "clustered drawing crossings", formulas.eta_basic, basic_crossings);

    let axes = facet::build_facet_axes_drawing(m, n)?;
    let axes_crossings = crossing::count_crossings(&axes)?.total_planar_crossings;
    check(&mut discrepancies, "two-axis facet drawing crossings", formulas.eta_basic, axes_crossings);

    let interleaved = applicable(facet::build_interleaved_facet_drawing_mn(m, n))?;
    let mut optimized_crossings = None;
    let mut optimized_worst_path = None;
    let mut optimized_per_edge_max = None;
    if let Some(d) = &interleaved {
        let report = crossing::count_crossings(d)?;
        let census = enumerate_paths(d)?;
        optimized_crossings = Some(report.total_planar_crossings);
        optimized_worst_path = Some(census.planar_crossings_max);
        optimized_per_edge_max = Some(report.per_edge_max);
        if let Some(eta) = formulas.eta_interleaved {
            check(&mut discrepancies, "interleaved drawing crossings", eta, report.total_planar_crossings);
        }
        if m == n {
            check(
                &mut discrepancies,
                "interleaved worst path crossings",
                formulas.xi,
                census.planar_crossings_max,
            );
        }
    }

    let subgraph = applicable(facet::build_facet_spanning_planar_subgraph(m, n))?;
    let mut subgraph_edges = None;
    let mut subgraph_is_planar = None;
    if let Some(d) = &subgraph {
        let edges = d.edges.len() as u64;
        subgraph_edges = Some(edges);
        check(
            &mut discrepancies,
            "spanning subgraph edges",
            u64::from(m) + u64::from(n) - 1,
            edges,
        );
        let sound = subgraph_is_sound(d)?;
        subgraph_is_planar = Some(sound);
        check(&mut discrepancies, "spanning subgraph planarity", 1, u64::from(sound));
    }

    let hybrid_drawing = match spec.style {
        Style::LumpedElement => applicable(facet::place_wop_le_facet(m, n))?,
        Style::BinaryTree => applicable(facet::place_wop_bt_facet(m, n))?,
    };
    let hybrid = hybrid_drawing.as_ref().map(measure_wop).transpose()?;
    check_hybrid(
        &mut discrepancies,
        spec,
        styled_mu(spec.style, formulas.mu_le, formulas.mu_bt),
        &hybrid,
    );

    let pass = discrepancies.iter().all(|d| d.whitelisted);
    Ok(VerificationReport {
        spec,
        formula_values: FormulaValues::Facet(formulas),
        measured_values: MeasuredValues {
            basic_crossings,
            axes_crossings: Some(axes_crossings),
            optimized_crossings,
            optimized_worst_path,
            optimized_per_edge_max,
            subgraph_edges,
            subgraph_is_planar,
            hybrid,
        },
        discrepancies,
        pass,
        lower_bound_ratio: None,
    })
}

/// Rebuilds every applicable drawing for the instance, recounts each with
/// the exact oracle, and reconciles measurements against the closed forms.
/// Construction failures surface verbatim.
pub fn verify_instance(spec: CircuitSpec) -> Result<VerificationReport, LayoutError> {
    match spec.coupling {
        Coupling::Surface => verify_surface(spec),
        Coupling::Facet => verify_facet(spec),
    }
}

/// Verifies every coupling and style over 2..=max_m by 2..=max_n in
/// parallel. Reports come back sorted by coupling, style, then size, so the
/// output is deterministic regardless of scheduling.
pub fn verify_sweep(max_m: u32, max_n: u32) -> Result<Vec<VerificationReport>, LayoutError> {
    let mut specs = Vec::new();
    for coupling in [Coupling::Surface, Coupling::Facet] {
        for style in [Style::LumpedElement, Style::BinaryTree] {
            for m in 2..=max_m {
                for n in 2..=max_n {
                    specs.push(make_spec(m, n, coupling, style)?);
                }
            }
        }
    }
    let mut reports = specs
        .into_par_iter()
        .map(verify_instance)
        .collect::<Result<Vec<_>, _>>()?;
    reports.sort_by_key(|r| (r.spec.coupling, r.spec.style, r.spec.m, r.spec.n));
    Ok(reports)
}

/// One row of a quantitative comparison table for an n x n instance.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub n: u32,
    /// Crossings of the optimized planar drawing.
    pub crossings: u64,
    /// Overpasses consumed by the lumped-element hybrid.
    pub overpasses_le: u64,
    /// Overpasses consumed by the binary-tree hybrid.
    pub overpasses_bt: u64,
    /// Worst crossings along one path of the optimized drawing.
    pub worst_path_crossings: u64,
    /// Worst overpasses along one path of either hybrid.
    pub worst_path_overpasses: u64,
}

/// The two reference tables side by side.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComparisonTables {
    pub surface: Vec<ComparisonRow>,
    pub facet: Vec<ComparisonRow>,
}

/// Evaluates the quantitative comparison for n in {4, 8, 16, 32, 64} from
/// the closed forms, for both couplings.
pub fn reproduce_tables() -> ComparisonTables {
    let sizes = [4u32, 8, 16, 32, 64];
    let surface = sizes
        .iter()
        .map(|&n| ComparisonRow {
            n,
            crossings: surface::eta_conjectured(n, n),
            overpasses_le: surface::mu_surface_le(n, n),
            overpasses_bt: surface::mu_surface_bt(n, n).expect("n >= 2"),
            worst_path_crossings: surface::xi_surface(n, n),
            worst_path_overpasses: 1,
        })
        .collect();
    let facet = sizes
        .iter()
        .map(|&n| ComparisonRow {
            n,
            crossings: facet::eta_facet_interleaved(n, n).expect("n divides n"),
            overpasses_le: facet::mu_facet_le(n, n),
            overpasses_bt: facet::mu_facet_bt(n, n).expect("n >= 2"),
            worst_path_crossings: facet::xi_facet(n),
            worst_path_overpasses: 1,
        })
        .collect();
    ComparisonTables { surface, facet }
}

/// The outcome of an exhaustive convex-position search.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConvexSearch {
    /// Minimum straight-chord crossings over all circular orders.
    pub min_crossings: u64,
    /// Every attaining order, canonicalized by lexicographically minimal
    /// rotation or reflection and deduplicated.
    pub optimal_orders: Vec<Vec<VertexId>>,
}

fn convex_labels(n: u32) -> Vec<VertexId> {
    (1..=n as i32)
        .map(VertexId::m)
        .chain((1..=n as i32).map(VertexId::n))
        .collect()
}

fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
        return false;
    }
    let (lo, hi) = (a.0.min(a.1), a.0.max(a.1));
    ((lo < b.0 && b.0 < hi) as u8 + (lo < b.1 && b.1 < hi) as u8) == 1
}

fn order_crossings(order: &[VertexId], n: u32) -> u64 {
    let pos: BTreeMap<VertexId, usize> =
        order.iter().enumerate().map(|(p, &v)| (v, p)).collect();
    let mut chords = Vec::with_capacity((n * n) as usize);
    for i in 1..=n as i32 {
        for j in 1..=n as i32 {
            chords.push((pos[&VertexId::m(i)], pos[&VertexId::n(j)]));
        }
    }
    let mut total = 0;
    for (k, &a) in chords.iter().enumerate() {
        for &b in &chords[k + 1..] {
            total += u64::from(chords_cross(a, b));
        }
    }
    total
}

/// Canonical representative of a circular order: the lexicographically
/// minimal sequence over all rotations and reflections.
pub fn canonical_order(order: &[VertexId]) -> Vec<VertexId> {
    let k = order.len();
    let reversed: Vec<VertexId> = order.iter().rev().copied().collect();
    let mut best: Option<Vec<VertexId>> = None;
    for seq in [order, reversed.as_slice()] {
        for start in 0..k {
            let candidate: Vec<VertexId> = (0..k).map(|t| seq[(start + t) % k]).collect();
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    best.expect("nonempty order")
}

fn permute(
    prefix: &mut Vec<VertexId>,
    pool: &mut Vec<VertexId>,
    visit: &mut impl FnMut(&[VertexId]),
) {
    if pool.is_empty() {
        visit(prefix);
        return;
    }
    for k in 0..pool.len() {
        let v = pool.remove(k);
        prefix.push(v);
        permute(prefix, pool, visit);
        prefix.pop();
        pool.insert(k, v);
    }
}

/// Tries every circular order of n switches and n selectors in convex
/// position with straight chords, up to rotation and reflection, and
/// returns the crossing minimum with all attaining orders. Rejects n > 4.
pub fn exhaustive_convex_search(n: u32) -> Result<ConvexSearch, LayoutError> {
    if n == 0 {
        return Err(LayoutError::ZeroPorts);
    }
    if n > 4 {
        return Err(LayoutError::SearchTooLarge { n, max: 4 });
    }
    let labels = convex_labels(n);
    let mut min_crossings = u64::MAX;
    let mut attaining = BTreeSet::new();
    let mut prefix = vec![labels[0]];
    let mut pool = labels[1..].to_vec();
    permute(&mut prefix, &mut pool, &mut |order| {
        let crossings = order_crossings(order, n);
        if crossings < min_crossings {
            min_crossings = crossings;
            attaining.clear();
        }
        if crossings == min_crossings {
            attaining.insert(canonical_order(order));
        }
    });
    Ok(ConvexSearch {
        min_crossings,
        optimal_orders: attaining.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    
    fn spec(m: u32, n: u32, coupling: Coupling, style: Style) -> CircuitSpec {
        make_spec(m, n, coupling, style).unwrap()
    }

    fn alternating(n: u32) -> Vec<VertexId> {
        (1..=n as i32)
            .flat_map(|i| [VertexId::m(i), VertexId::n(i)])
            .collect()
    }

    #[test]
    fn small_sweep_passes_everywhere() {
        let reports = verify_sweep(5, 5).unwrap();
        assert_eq!(reports.len(), 4 * 16);
        for r in &reports {
            assert!(r.pass, "{:?} failed: {:?}", r.spec, r.discrepancies);
            for d in &r.discrepancies {
                assert!(d.whitelisted);
            }
        }
    }

    #[test]
    fn worked_square_surface_report_measures_the_expected_values() {
        let r = verify_instance(spec(4, 4, Coupling::Surface, Style::LumpedElement)).unwrap();
        assert!(r.pass);
        assert!(r.discrepancies.is_empty());
        let m = &r.measured_values;
        assert_eq!(m.basic_crossings, 36);
        assert_eq!(m.optimized_crossings, Some(4));
        assert_eq!(m.optimized_worst_path, Some(1));
        assert_eq!(m.subgraph_edges, Some(12));
        assert_eq!(m.subgraph_is_planar, Some(true));
        let h = m.hybrid.unwrap();
        assert_eq!(h.overpasses, 4);
        assert_eq!(h.worst_path_overpasses, 1);
        assert_eq!(h.connections, 16);
        assert_eq!(r.lower_bound_ratio.as_deref(), Some("1/4"));
    }

    #[test]
    fn planar_instances_pass_with_zero_optimized_quantities() {
        let r = verify_instance(spec(2, 5, Coupling::Surface, Style::LumpedElement)).unwrap();
        assert!(r.pass);
        assert!(r.discrepancies.is_empty());
        assert_eq!(r.measured_values.basic_crossings, 10);
        assert_eq!(r.measured_values.optimized_crossings, Some(0));
        assert_eq!(r.measured_values.optimized_worst_path, Some(0));
        assert_eq!(r.measured_values.hybrid.unwrap().overpasses, 0);
        assert_eq!(r.lower_bound_ratio, None);
    }

    #[test]
    fn odd_squares_surface_the_whitelisted_floor_form_entry() {
        let r = verify_instance(spec(5, 5, Coupling::Surface, Style::LumpedElement)).unwrap();
        assert!(r.pass);
        assert_eq!(r.discrepancies.len(), 1);
        let d = &r.discrepancies[0];
        assert!(d.whitelisted);
        assert_eq!(d.formula, 1);
        assert_eq!(d.measured, 4);
        assert_eq!(r.measured_values.optimized_per_edge_max, Some(4));
        assert_eq!(r.lower_bound_ratio.as_deref(), Some("256/625"));
    }

    #[test]
    fn degenerate_sides_verify_with_absent_quantities() {
        let r = verify_instance(spec(1, 3, Coupling::Surface, Style::LumpedElement)).unwrap();
        assert!(r.pass, "{:?}", r.discrepancies);
        assert_eq!(r.measured_values.optimized_crossings, Some(0));
        assert_eq!(r.measured_values.subgraph_edges, None);
        assert_eq!(r.measured_values.hybrid, None);
    }

    #[test]
    fn square_facet_report_compares_interleaved_paths() {
        let r = verify_instance(spec(4, 4, Coupling::Facet, Style::LumpedElement)).unwrap();
        assert!(r.pass);
        assert!(r.discrepancies.is_empty());
        let m = &r.measured_values;
        assert_eq!(m.basic_crossings, 36);
        assert_eq!(m.axes_crossings, Some(36));
        assert_eq!(m.optimized_crossings, Some(16));
        assert_eq!(m.optimized_worst_path, Some(4));
        assert_eq!(m.subgraph_edges, Some(7));
        assert_eq!(m.hybrid.unwrap().overpasses, 9);
    }

    #[test]
    fn rectangular_facet_report_skips_the_square_only_comparisons() {
        let r = verify_instance(spec(2, 6, Coupling::Facet, Style::BinaryTree)).unwrap();
        assert!(r.pass, "{:?}", r.discrepancies);
        assert!(r.measured_values.optimized_crossings.is_some());
        let indivisible =
            verify_instance(spec(3, 4, Coupling::Facet, Style::LumpedElement)).unwrap();
        assert!(indivisible.pass);
        assert_eq!(indivisible.measured_values.optimized_crossings, None);
    }

    #[test]
    fn reports_serialize_deterministically() {
        let s = spec(5, 5, Coupling::Surface, Style::BinaryTree);
        let a = serde_json::to_string(&verify_instance(s).unwrap()).unwrap();
        let b = serde_json::to_string(&verify_instance(s).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("whitelisted"));
    }

    #[test]
    fn path_census_counts_overpassing_paths() {
        let bt = surface::place_wop_bt_surface(4, 4).unwrap();
        let census = enumerate_paths(&bt).unwrap();
        assert_eq!(census.paths.len(), 16);
        assert_eq!(census.overpassing_paths, 4);
        assert_eq!(census.overpass_max, 1);

        let le = facet::place_wop_le_facet(4, 4).unwrap();
        let census = enumerate_paths(&le).unwrap();
        assert_eq!(census.paths.len(), 16);
        assert_eq!(census.overpassing_paths, 9);

        let star = surface::build_basic_surface_drawing(1, 3).unwrap();
        let census = enumerate_paths(&star).unwrap();
        assert_eq!(census.paths.len(), 3);
        assert_eq!(census.planar_crossings_sum, 0);
        assert_eq!(census.overpass_max, 0);
    }

    #[test]
    fn path_census_requires_a_total_connection_map() {
        let mut d = surface::build_basic_surface_drawing(2, 2).unwrap();
        d.connection_map.remove(&(1, 1));
        assert_eq!(
            enumerate_paths(&d),
            Err(LayoutError::IncompleteConnectionMap { have: 3, want: 4 })
        );
    }

    #[test]
    fn convex_search_confirms_the_alternating_order() {
        for (n, want) in [(2u32, 0u64), (3, 3), (4, 16)] {
            let s = exhaustive_convex_search(n).unwrap();
            assert_eq!(s.min_crossings, want, "n = {n}");
            assert!(s.optimal_orders.contains(&canonical_order(&alternating(n))));
        }
        assert_eq!(
            exhaustive_convex_search(5),
            Err(LayoutError::SearchTooLarge { n: 5, max: 4 })
        );
        assert_eq!(exhaustive_convex_search(0), Err(LayoutError::ZeroPorts));
    }

    #[test]
    fn convex_minima_match_the_interleaved_closed_form() {
        for n in 2..=4 {
            let s = exhaustive_convex_search(n).unwrap();
            assert_eq!(s.min_crossings, facet::eta_facet_interleaved(n, n).unwrap());
        }
    }

    #[test]
    fn canonicalization_is_rotation_and_reflection_invariant() {
        let order = alternating(3);
        let canon = canonical_order(&order);
        for start in 0..order.len() {
            let rotated: Vec<VertexId> =
                (0..order.len()).map(|t| order[(start + t) % order.len()]).collect();
            assert_eq!(canonical_order(&rotated), canon);
            let reflected: Vec<VertexId> = rotated.iter().rev().copied().collect();
            assert_eq!(canonical_order(&reflected), canon);
        }
    }

    #[test]
    fn tables_match_the_frozen_rows() {
        let t = reproduce_tables();
        let surface: Vec<_> = t
            .surface
            .iter()
            .map(|r| (r.crossings, r.overpasses_le, r.overpasses_bt, r.worst_path_crossings, r.worst_path_overpasses))
            .collect();
        assert_eq!(
            surface,
            vec![
                (4, 4, 2, 1, 1),
                (144, 36, 18, 9, 1),
                (3136, 196, 98, 49, 1),
                (57600, 900, 450, 225, 1),
                (984064, 3844, 1922, 961, 1),
            ]
        );
        let facet: Vec<_> = t
            .facet
            .iter()
            .map(|r| (r.crossings, r.overpasses_le, r.overpasses_bt, r.worst_path_crossings, r.worst_path_overpasses))
            .collect();
        assert_eq!(
            facet,
            vec![
                (16, 9, 5, 4, 1),
                (448, 49, 25, 24, 1),
                (8960, 225, 113, 112, 1),
                (158720, 961, 481, 480, 1),
                (2666496, 3969, 1985, 1984, 1),
            ]
        );
    }

    #[test]
    fn hybrid_checks_demand_exact_overpass_budgets() {
        let mut out = Vec::new();
        let s = spec(4, 4, Coupling::Surface, Style::LumpedElement);
        let w = WopMeasurement {
            overpasses: 5,
            planar_crossings: 0,
            projection_crossings: 1,
            worst_path_overpasses: 1,
            connections: 16,
        };
        check_hybrid(&mut out, s, Some(4), &Some(w));
        let quantities: Vec<&str> = out.iter().map(|d| d.quantity.as_str()).collect();
        assert_eq!(
            quantities,
            ["hybrid overpasses placed", "hybrid residual projection crossings"]
        );
        assert!(out.iter().all(|d| !d.whitelisted));
    }
}
