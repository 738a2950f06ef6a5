//! Exact-geometry crossing oracle.
//!
//! Counts crossings among planar geometry (planar edge routes plus overpass
//! attachment stubs), tallies overpass projection crossings separately, and
//! repairs projection conflicts by lengthening attachment stubs. All decisions
//! use exact rational arithmetic; equal inputs always produce equal outputs.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::geom::{self, Containment, SegSeg};
use crate::model::{
    Drawing, DrawingBuilder, EdgeKind, LayoutError, Party, Point, Rat, VertexId,
};

/// Crossing totals for one drawing.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CrossingReport {
    /// Crossings among planar routes and overpass stubs, counted pairwise.
    pub total_planar_crossings: u64,
    /// Largest number of planar crossings carried by a single edge.
    pub per_edge_max: u64,
    /// Crossings among overpass projections only.
    pub overpass_projection_crossings: u64,
    /// One entry per planar crossing, naming the unordered edge pair.
    pub crossing_pairs: Vec<(usize, usize)>,
}

/// Which layer of geometry a crossing lives on.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CrossKind {
    Planar,
    Projection,
}

/// One located crossing between two edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossingEvent {
    pub edges: (usize, usize),
    pub at: Point,
    pub kind: CrossKind,
}

/// Validates a built drawing's geometry and fills in per-path crossing
/// tallies. Every constructor funnels through here, so a `Drawing` in hand
/// has already survived the full degeneracy screen.
pub fn finalize(builder: DrawingBuilder) -> Result<Drawing, LayoutError> {
    let mut drawing = builder.finish_structural()?;
    let analysis = analyze(&drawing)?;
    fill_tallies(&mut drawing, &analysis);
    Ok(drawing)
}

/// Measures one drawing: planar crossings, per-edge maximum, and projection
/// crossings.
pub fn count_crossings(drawing: &Drawing) -> Result<CrossingReport, LayoutError> {
    let analysis = analyze(drawing)?;
    Ok(analysis.report(drawing.edges.len()))
}

/// Largest number of planar crossings along any single edge's geometry.
pub fn local_crossing_of_drawing(drawing: &Drawing) -> Result<u64, LayoutError> {
    let analysis = analyze(drawing)?;
    Ok(analysis
        .per_edge_planar(drawing.edges.len())
        .into_iter()
        .max()
        .unwrap_or(0))
}

/// Largest planar crossing tally over all input-to-output paths.
pub fn max_crossings_along_path(drawing: &Drawing) -> u64 {
    drawing
        .connection_map
        .values()
        .map(|t| t.planar_crossings)
        .max()
        .unwrap_or(0)
}

/// Largest overpass count over all input-to-output paths.
pub fn max_overpasses_along_path(drawing: &Drawing) -> u32 {
    drawing
        .connection_map
        .values()
        .map(|t| t.overpass_count)
        .max()
        .unwrap_or(0)
}

/// All located crossings, planar and projection, in deterministic order.
pub fn crossing_events(drawing: &Drawing) -> Result<Vec<CrossingEvent>, LayoutError> {
    let analysis = analyze(drawing)?;
    Ok(analysis.events())
}

/// Rewrites a drawing until its overpass projections are mutually
/// crossing-free, by absorbing projection prefixes into attachment stubs so
/// the conflict point moves onto planar geometry that passes underneath.
/// Planar crossings and connectivity are preserved exactly; a drawing that is
/// already clean comes back unchanged.
pub fn resolve_projection_crossing(drawing: &Drawing) -> Result<Drawing, LayoutError> {
    let mut current = drawing.clone();
    let mut analysis = analyze(&current)?;
    let planar_total = analysis.total_planar();
    let mut remaining = analysis.total_projection();
    while remaining > 0 {
        let (&(e1, e2), points) = analysis
            .projection_pairs
            .iter()
            .find(|(_, pts)| !pts.is_empty())
            .expect("positive projection total implies a conflicting pair");
        let conflict = points.iter().next().expect("non-empty conflict set").clone();

        let mut accepted = None;
        for (edge, side) in [
            (e2, StubSide::N),
            (e1, StubSide::N),
            (e2, StubSide::M),
            (e1, StubSide::M),
        ] {
            let Some(candidate) = absorb_past_conflict(&current, edge, side, &conflict) else {
                continue;
            };
            let Ok(next) = analyze(&candidate) else {
                continue;
            };
            if next.total_planar() == planar_total && next.total_projection() < remaining {
                accepted = Some((candidate, next));
                break;
            }
        }
        match accepted {
            Some((candidate, next)) => {
                remaining = next.total_projection();
                current = candidate;
                analysis = next;
            }
            None => return Err(LayoutError::IrreducibleConflict(e1, e2)),
        }
    }
    fill_tallies(&mut current, &analysis);
    Ok(current)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum StubSide {
    M,
    N,
}

/// Lengthens the chosen stub of `edge` along its own projection route so the
/// absorbed piece strictly contains `conflict`. Returns None when the edge has
/// no projection through the conflict point or the geometry leaves no room.
fn absorb_past_conflict(
    drawing: &Drawing,
    edge: usize,
    side: StubSide,
    conflict: &Point,
) -> Option<Drawing> {
    let e = &drawing.edges[edge];
    if e.kind != EdgeKind::Overpass {
        return None;
    }
    let route = &e.route;
    let (stub_from, stub_to) = e.stubs.as_ref()?;
    // The route's head adjoins the from-stub and its tail the to-stub; map
    // the requested party side onto whichever end carries it.
    let n_side_is_to = match (e.from.party, e.to.party) {
        (_, Party::N) => true,
        (Party::N, _) => false,
        _ => true,
    };
    let absorb_tail = (side == StubSide::N) == n_side_is_to;

    // Locate the conflict on the route: segment index i with the point in
    // [route[i], route[i+1]).
    let mut locator = None;
    for i in 0..route.len() - 1 {
        if geom::on_segment(conflict, &route[i], &route[i + 1]) && *conflict != route[i + 1] {
            locator = Some(i);
            break;
        }
    }
    let i = locator?;

    // The carrier segment holds the stretch between the conflict and the split
    // point; walk towards the end being absorbed away from.
    let (carrier, toward) = if absorb_tail {
        if *conflict == route[i] {
            if i == 0 {
                return None;
            }
            ((i - 1, i), route[i - 1].clone())
        } else {
            ((i, i + 1), route[i].clone())
        }
    } else {
        ((i, i + 1), route[i + 1].clone())
    };
    let stop = nearest_obstruction(drawing, edge, route, carrier, conflict, &toward);
    let split = geom::midpoint(conflict, &stop);
    if split == *conflict {
        return None;
    }

    let mut out = drawing.clone();
    let new_edge = &mut out.edges[edge];
    let j = carrier.0;
    let (new_route, grown): (Vec<Point>, Vec<Point>) = if absorb_tail {
        // Keep route[0..=j], then the split point; the to-stub walks back
        // from the lift point through the dropped joints to the split point.
        let mut kept: Vec<Point> = route[..=j].to_vec();
        kept.push(split.clone());
        let mut extension: Vec<Point> = stub_to.clone();
        for p in route[j + 1..route.len() - 1].iter().rev() {
            extension.push(p.clone());
        }
        extension.push(split);
        (kept, extension)
    } else {
        let mut kept: Vec<Point> = vec![split.clone()];
        kept.extend_from_slice(&route[j + 1..]);
        let mut extension: Vec<Point> = stub_from.clone();
        extension.extend_from_slice(&route[1..=j]);
        extension.push(split);
        (kept, extension)
    };
    if new_route.len() < 2 {
        return None;
    }
    let stubs = new_edge.stubs.as_mut().expect("overpass keeps stubs");
    if absorb_tail {
        stubs.1 = grown;
    } else {
        stubs.0 = grown;
    }
    new_edge.route = new_route;
    Some(out)
}

/// Closest contact point to `conflict` on the carrier segment, strictly
/// between `conflict` and `toward`; falls back to the segment end itself.
fn nearest_obstruction(
    drawing: &Drawing,
    edge: usize,
    route: &[Point],
    carrier: (usize, usize),
    conflict: &Point,
    toward: &Point,
) -> Point {
    let a = &route[carrier.0];
    let b = &route[carrier.1];
    let mut events: Vec<Point> = Vec::new();
    for (other_idx, other) in drawing.edges.iter().enumerate() {
        let mut polys: Vec<&[Point]> = other.planar_polylines();
        if other.kind == EdgeKind::Overpass && other_idx != edge {
            polys.push(&other.route);
        }
        for poly in polys {
            for w in poly.windows(2) {
                match geom::seg_seg(a, b, &w[0], &w[1]) {
                    SegSeg::ProperCross(p) | SegSeg::Touch(p) => events.push(p),
                    SegSeg::CollinearOverlap => {
                        for p in [&w[0], &w[1]] {
                            if geom::on_segment(p, a, b) {
                                events.push(p.clone());
                            }
                        }
                    }
                    SegSeg::Disjoint => {}
                }
            }
        }
    }
    // Order along the carrier towards `toward` and take the nearest strict
    // obstruction past the conflict.
    let dx = &toward.x - &conflict.x;
    let dy = &toward.y - &conflict.y;
    let progress = |p: &Point| (&p.x - &conflict.x) * &dx + (&p.y - &conflict.y) * &dy;
    let target = progress(toward);
    events
        .into_iter()
        .filter(|p| {
            let t = progress(p);
            t > Rat::zero() && t < target
        })
        .min_by_key(|p| progress(p))
        .unwrap_or_else(|| toward.clone())
}

/// Full pairwise analysis of one drawing's geometry.
pub(crate) struct CrossingAnalysis {
    pub(crate) planar_pairs: BTreeMap<(usize, usize), BTreeSet<Point>>,
    pub(crate) projection_pairs: BTreeMap<(usize, usize), BTreeSet<Point>>,
}

impl CrossingAnalysis {
    pub(crate) fn total_planar(&self) -> u64 {
        self.planar_pairs.values().map(|s| s.len() as u64).sum()
    }

    pub(crate) fn total_projection(&self) -> u64 {
        self.projection_pairs.values().map(|s| s.len() as u64).sum()
    }

    pub(crate) fn per_edge_planar(&self, edge_count: usize) -> Vec<u64> {
        let mut per = vec![0u64; edge_count];
        for (&(e, f), pts) in &self.planar_pairs {
            per[e] += pts.len() as u64;
            per[f] += pts.len() as u64;
        }
        per
    }

    /// Planar crossings touching any edge of the given path; a crossing
    /// between two edges of the path itself counts once.
    pub(crate) fn planar_along(&self, path_edges: &[usize]) -> u64 {
        let on_path: BTreeSet<usize> = path_edges.iter().copied().collect();
        self.planar_pairs
            .iter()
            .filter(|((e, f), _)| on_path.contains(e) || on_path.contains(f))
            .map(|(_, pts)| pts.len() as u64)
            .sum()
    }

    fn report(&self, edge_count: usize) -> CrossingReport {
        let mut crossing_pairs = Vec::new();
        for (&pair, pts) in &self.planar_pairs {
            for _ in pts {
                crossing_pairs.push(pair);
            }
        }
        CrossingReport {
            total_planar_crossings: self.total_planar(),
            per_edge_max: self
                .per_edge_planar(edge_count)
                .into_iter()
                .max()
                .unwrap_or(0),
            overpass_projection_crossings: self.total_projection(),
            crossing_pairs,
        }
    }

    fn events(&self) -> Vec<CrossingEvent> {
        let mut out = Vec::new();
        for (&edges, pts) in &self.planar_pairs {
            for p in pts {
                out.push(CrossingEvent { edges, at: p.clone(), kind: CrossKind::Planar });
            }
        }
        for (&edges, pts) in &self.projection_pairs {
            for p in pts {
                out.push(CrossingEvent { edges, at: p.clone(), kind: CrossKind::Projection });
            }
        }
        out
    }
}

fn fill_tallies(drawing: &mut Drawing, analysis: &CrossingAnalysis) {
    let tallies: Vec<(u32, u32, u64)> = drawing
        .connection_map
        .iter()
        .map(|(&(i, j), trace)| (i, j, analysis.planar_along(&trace.edge_sequence)))
        .collect();
    for (i, j, planar) in tallies {
        drawing
            .connection_map
            .get_mut(&(i, j))
            .expect("tally key")
            .planar_crossings = planar;
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PolyKind {
    Planar,
    Projection,
}

struct PolyRef<'a> {
    edge: usize,
    kind: PolyKind,
    pts: &'a [Point],
    anchor_start: Option<VertexId>,
    anchor_end: Option<VertexId>,
}

fn collect_polylines(drawing: &Drawing) -> Vec<PolyRef<'_>> {
    let mut out = Vec::new();
    for (idx, e) in drawing.edges.iter().enumerate() {
        match e.kind {
            EdgeKind::Planar => out.push(PolyRef {
                edge: idx,
                kind: PolyKind::Planar,
                pts: &e.route,
                anchor_start: Some(e.from),
                anchor_end: Some(e.to),
            }),
            EdgeKind::Overpass => {
                let (sf, st) = e.stubs.as_ref().expect("overpass stubs");
                out.push(PolyRef {
                    edge: idx,
                    kind: PolyKind::Planar,
                    pts: sf,
                    anchor_start: Some(e.from),
                    anchor_end: None,
                });
                out.push(PolyRef {
                    edge: idx,
                    kind: PolyKind::Planar,
                    pts: st,
                    anchor_start: Some(e.to),
                    anchor_end: None,
                });
                out.push(PolyRef {
                    edge: idx,
                    kind: PolyKind::Projection,
                    pts: &e.route,
                    anchor_start: None,
                    anchor_end: None,
                });
            }
        }
    }
    out
}

/// Integer screens for every polyline's segments, or None when a coordinate
/// is too large to scale safely; screening is then skipped entirely.
fn build_screens(polys: &[PolyRef<'_>]) -> Option<Vec<Vec<geom::ScreenSeg>>> {
    let (sx, sy) = geom::common_denominators(polys.iter().flat_map(|p| p.pts.iter()));
    polys
        .iter()
        .map(|p| {
            p.pts
                .windows(2)
                .map(|w| geom::ScreenSeg::build(&w[0], &w[1], &sx, &sy))
                .collect()
        })
        .collect()
}

pub(crate) fn analyze(drawing: &Drawing) -> Result<CrossingAnalysis, LayoutError> {
    validate_boundary(drawing)?;
    let polys = collect_polylines(drawing);
    let screens = build_screens(&polys);
    let screen_of = |i: usize| screens.as_ref().map(|s| s[i].as_slice());
    for (i, poly) in polys.iter().enumerate() {
        check_polyline_simple(poly, screen_of(i))?;
    }
    check_overpass_assemblies(drawing)?;

    let vertex_at: BTreeMap<&Point, VertexId> =
        drawing.positions.iter().map(|(id, p)| (p, *id)).collect();

    let mut planar_pairs: BTreeMap<(usize, usize), BTreeSet<Point>> = BTreeMap::new();
    let mut projection_pairs: BTreeMap<(usize, usize), BTreeSet<Point>> = BTreeMap::new();

    for (ai, a) in polys.iter().enumerate() {
        for (bi, b) in polys.iter().enumerate().skip(ai + 1) {
            if a.edge == b.edge || a.kind != b.kind {
                continue;
            }
            let pair = ordered(a.edge, b.edge);
            let sink = match a.kind {
                PolyKind::Planar => planar_pairs.entry(pair).or_default(),
                PolyKind::Projection => projection_pairs.entry(pair).or_default(),
            };
            let pair_screens = screens.as_ref().map(|s| (s[ai].as_slice(), s[bi].as_slice()));
            cross_pair(a, b, pair_screens, &vertex_at, sink)?;
        }
    }
    planar_pairs.retain(|_, pts| !pts.is_empty());
    projection_pairs.retain(|_, pts| !pts.is_empty());
    Ok(CrossingAnalysis { planar_pairs, projection_pairs })
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Screens every segment pair of two polylines from different edges,
/// recording genuine transversal crossing points into `sink`.
fn cross_pair(
    a: &PolyRef<'_>,
    b: &PolyRef<'_>,
    screens: Option<(&[geom::ScreenSeg], &[geom::ScreenSeg])>,
    vertex_at: &BTreeMap<&Point, VertexId>,
    sink: &mut BTreeSet<Point>,
) -> Result<(), LayoutError> {
    for i in 0..a.pts.len() - 1 {
        for j in 0..b.pts.len() - 1 {
            if let Some((sa, sb)) = screens {
                if geom::screen_disjoint(&sa[i], &sb[j]) {
                    continue;
                }
            }
            match geom::seg_seg(&a.pts[i], &a.pts[i + 1], &b.pts[j], &b.pts[j + 1]) {
                SegSeg::Disjoint => {}
                SegSeg::CollinearOverlap => {
                    return Err(LayoutError::SegmentOverlap(a.edge, b.edge));
                }
                SegSeg::ProperCross(p) => {
                    if let Some(v) = vertex_at.get(&p) {
                        return Err(LayoutError::RouteThroughVertex { edge: a.edge, vertex: *v });
                    }
                    sink.insert(p);
                }
                SegSeg::Touch(p) => {
                    classify_touch(a, i, b, j, p, vertex_at, sink)?;
                }
            }
        }
    }
    Ok(())
}

enum ContactStatus {
    AnchorTerminal(VertexId),
    FreeTerminal,
    Joint(usize),
    Interior,
}

fn contact_status(poly: &PolyRef<'_>, seg: usize, p: &Point) -> ContactStatus {
    let idx = if *p == poly.pts[seg] {
        Some(seg)
    } else if *p == poly.pts[seg + 1] {
        Some(seg + 1)
    } else {
        None
    };
    match idx {
        None => ContactStatus::Interior,
        Some(0) => match poly.anchor_start {
            Some(v) => ContactStatus::AnchorTerminal(v),
            None => ContactStatus::FreeTerminal,
        },
        Some(k) if k == poly.pts.len() - 1 => match poly.anchor_end {
            Some(v) => ContactStatus::AnchorTerminal(v),
            None => ContactStatus::FreeTerminal,
        },
        Some(k) => ContactStatus::Joint(k),
    }
}

fn classify_touch(
    a: &PolyRef<'_>,
    i: usize,
    b: &PolyRef<'_>,
    j: usize,
    p: Point,
    vertex_at: &BTreeMap<&Point, VertexId>,
    sink: &mut BTreeSet<Point>,
) -> Result<(), LayoutError> {
    let sa = contact_status(a, i, &p);
    let sb = contact_status(b, j, &p);

    if let Some(&v) = vertex_at.get(&p) {
        let a_anchored = matches!(sa, ContactStatus::AnchorTerminal(va) if va == v);
        let b_anchored = matches!(sb, ContactStatus::AnchorTerminal(vb) if vb == v);
        return if a_anchored && b_anchored {
            Ok(())
        } else {
            let offender = if a_anchored { b.edge } else { a.edge };
            Err(LayoutError::RouteThroughVertex { edge: offender, vertex: v })
        };
    }

    match (sa, sb) {
        (ContactStatus::AnchorTerminal(_) | ContactStatus::FreeTerminal, _)
        | (_, ContactStatus::AnchorTerminal(_) | ContactStatus::FreeTerminal) => {
            Err(LayoutError::DegenerateContact(a.edge, b.edge, Box::new(p)))
        }
        (ContactStatus::Joint(_), ContactStatus::Joint(_)) => {
            Err(LayoutError::DegenerateContact(a.edge, b.edge, Box::new(p)))
        }
        (ContactStatus::Joint(k), ContactStatus::Interior) => {
            transversal_at_joint(a, k, &b.pts[j], &b.pts[j + 1], b, p, sink)
        }
        (ContactStatus::Interior, ContactStatus::Joint(k)) => {
            transversal_at_joint(b, k, &a.pts[i], &a.pts[i + 1], a, p, sink)
        }
        (ContactStatus::Interior, ContactStatus::Interior) => {
            Err(LayoutError::DegenerateContact(a.edge, b.edge, Box::new(p)))
        }
    }
}

/// A polyline joint resting on another segment's interior crosses it exactly
/// when the joint's neighbours sit strictly on opposite sides.
fn transversal_at_joint(
    bent: &PolyRef<'_>,
    joint: usize,
    s1: &Point,
    s2: &Point,
    straight: &PolyRef<'_>,
    p: Point,
    sink: &mut BTreeSet<Point>,
) -> Result<(), LayoutError> {
    let before = geom::orient(s1, s2, &bent.pts[joint - 1]);
    let after = geom::orient(s1, s2, &bent.pts[joint + 1]);
    if before == 0 || after == 0 {
        return Err(LayoutError::DegenerateContact(bent.edge, straight.edge, Box::new(p)));
    }
    if before != after {
        sink.insert(p);
    }
    Ok(())
}

fn check_polyline_simple(
    poly: &PolyRef<'_>,
    screen: Option<&[geom::ScreenSeg]>,
) -> Result<(), LayoutError> {
    let pts = poly.pts;
    let e = poly.edge;
    if pts.len() < 2 {
        return Err(LayoutError::ShortPolyline(e));
    }
    for w in pts.windows(2) {
        if w[0] == w[1] {
            return Err(LayoutError::ZeroLengthSegment(e));
        }
    }
    let segs = pts.len() - 1;
    for i in 0..segs {
        for j in i + 1..segs {
            if j > i + 1 {
                if let Some(s) = screen {
                    if geom::screen_disjoint(&s[i], &s[j]) {
                        continue;
                    }
                }
            }
            let rel = geom::seg_seg(&pts[i], &pts[i + 1], &pts[j], &pts[j + 1]);
            let ok = if j == i + 1 {
                rel == SegSeg::Touch(pts[j].clone())
            } else {
                rel == SegSeg::Disjoint
            };
            if !ok {
                return Err(LayoutError::SelfCrossingEdge(e));
            }
        }
    }
    Ok(())
}

/// The two stubs of an overpass must avoid each other entirely, and each stub
/// may meet its own projection only at the shared lift point.
fn check_overpass_assemblies(drawing: &Drawing) -> Result<(), LayoutError> {
    for (idx, e) in drawing.edges.iter().enumerate() {
        if e.kind != EdgeKind::Overpass {
            continue;
        }
        let (sf, st) = e.stubs.as_ref().expect("overpass stubs");
        for w1 in sf.windows(2) {
            for w2 in st.windows(2) {
                if geom::seg_seg(&w1[0], &w1[1], &w2[0], &w2[1]) != SegSeg::Disjoint {
                    return Err(LayoutError::SelfCrossingEdge(idx));
                }
            }
        }
        for (stub, lift) in [(sf, &e.route[0]), (st, e.route.last().expect("route tail"))] {
            if stub.last() != Some(lift) {
                return Err(LayoutError::RouteEndpointMismatch(idx));
            }
            for w1 in stub.windows(2) {
                for w2 in e.route.windows(2) {
                    match geom::seg_seg(&w1[0], &w1[1], &w2[0], &w2[1]) {
                        SegSeg::Disjoint => {}
                        SegSeg::Touch(p) if p == *lift => {}
                        _ => return Err(LayoutError::SelfCrossingEdge(idx)),
                    }
                }
            }
        }
    }
    Ok(())
}

/// For drawings framed by an outline polygon: the outline must be convex
/// (collinear subdivision allowed), port vertices must sit on it, and all
/// geometry must stay inside the closed region.
fn validate_boundary(drawing: &Drawing) -> Result<(), LayoutError> {
    let Some(boundary) = &drawing.boundary else {
        return Ok(());
    };
    let k = boundary.len();
    for i in 0..k {
        if boundary[i] == boundary[(i + 1) % k] {
            return Err(LayoutError::DegenerateBoundary);
        }
    }
    let mut winding = 0i8;
    for i in 0..k {
        let o = geom::orient(&boundary[i], &boundary[(i + 1) % k], &boundary[(i + 2) % k]);
        if o == 0 {
            continue;
        }
        if winding == 0 {
            winding = o;
        } else if o != winding {
            return Err(LayoutError::NonConvexBoundary);
        }
    }
    if winding == 0 {
        return Err(LayoutError::DegenerateBoundary);
    }
    for (id, pos) in &drawing.positions {
        if id.party == Party::Port
            && geom::convex_containment(boundary, pos) != Containment::OnBoundary
        {
            return Err(LayoutError::PortOffBoundary(*id));
        }
    }
    for (idx, e) in drawing.edges.iter().enumerate() {
        let mut polys = e.planar_polylines();
        if e.kind == EdgeKind::Overpass {
            polys.push(&e.route);
        }
        for poly in polys {
            for p in poly {
                if geom::convex_containment(boundary, p) == Containment::Outside {
                    return Err(LayoutError::RouteOutsideBoundary { edge: idx, at: Box::new(p.clone()) });
                }
            }
        }
    }
    Ok(())
}
