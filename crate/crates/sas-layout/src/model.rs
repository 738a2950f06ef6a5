//! Circuit specifications, exact-coordinate drawings, and their invariants.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational scalar used for every geometric coordinate.
pub type Rat = BigRational;

/// Largest accepted port count per side; keeps every closed form within u64.
pub const MAX_PORTS: u32 = 65_535;

/// Builds the rational `num / den`.
///
/// # Panics
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "rational with zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer rational `v / 1`.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Canonical `"num/den"` rendering: reduced, denominator always present and positive.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` (or a bare integer) into a rational.
pub fn rat_from_str(s: &str) -> Result<Rat, LayoutError> {
    let bad = || LayoutError::BadRational(s.to_owned());
    let mut parts = s.splitn(2, '/');
    let numer = parts.next().ok_or_else(bad)?.trim();
    let numer = BigInt::from_str(numer).map_err(|_| bad())?;
    let denom = match parts.next() {
        Some(d) => BigInt::from_str(d.trim()).map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(numer, denom))
}

/// A point in the plane with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Point::new(rat_int(x), rat_int(y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Which side of the bipartition a vertex belongs to.
#[derive(
    Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize,
)]
pub enum Party {
    /// 1 x n switch side (inputs).
    M,
    /// n x 1 selector side (outputs).
    N,
    /// Optical I/O terminal on the boundary of a facet drawing.
    Port,
    /// Reserved for free-standing helper vertices.
    Aux,
}

impl Party {
    fn letter(self) -> char {
        match self {
            Party::M => 'M',
            Party::N => 'N',
            Party::Port => 'P',
            Party::Aux => 'A',
        }
    }
}

/// Identifies a drawing vertex: party, signed index, and split ordinal.
///
/// `split_ordinal == 0` names the primary vertex; `k >= 1` names the k-th
/// auxiliary copy introduced by an overpass-sharing construction. `index` is
/// never zero; `Port` uses `+i` for input i and `-j` for output j.
#[derive(
    Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize,
)]
pub struct VertexId {
    pub party: Party,
    pub index: i32,
    pub split_ordinal: u32,
}

impl VertexId {
    pub fn m(index: i32) -> Self {
        VertexId { party: Party::M, index, split_ordinal: 0 }
    }

    pub fn n(index: i32) -> Self {
        VertexId { party: Party::N, index, split_ordinal: 0 }
    }

    pub fn port_in(i: u32) -> Self {
        VertexId { party: Party::Port, index: i as i32, split_ordinal: 0 }
    }

    pub fn port_out(j: u32) -> Self {
        VertexId { party: Party::Port, index: -(j as i32), split_ordinal: 0 }
    }

    pub fn split(party: Party, index: i32, ordinal: u32) -> Self {
        VertexId { party, index, split_ordinal: ordinal }
    }

    /// Human-readable label: `M2`, `N-3`, `P1`, `N2'` (primes mark copies).
    pub fn label(&self) -> String {
        let mut s = format!("{}{}", self.party.letter(), self.index);
        for _ in 0..self.split_ordinal {
            s.push('\'');
        }
        s
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Where the circuit couples light between switch stages.
#[derive(
    Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize,
)]
pub enum Coupling {
    /// Out-of-plane coupling anywhere on the chip surface.
    Surface,
    /// Edge coupling; all I/O confined to the chip boundary.
    Facet,
}

/// Switch implementation style.
#[derive(
    Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize,
)]
pub enum Style {
    /// Single-stage 1 x n switches: one waveguide per (input, output) pair.
    LumpedElement,
    /// Cascaded 1 x 2 stages: switch fan-outs may share waveguides.
    BinaryTree,
}

/// An m x n switch-and-select circuit instance.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CircuitSpec {
    pub m: u32,
    pub n: u32,
    pub coupling: Coupling,
    pub style: Style,
}

/// Validates and constructs a circuit spec.
pub fn make_spec(
    m: u32,
    n: u32,
    coupling: Coupling,
    style: Style,
) -> Result<CircuitSpec, LayoutError> {
    if m == 0 || n == 0 {
        return Err(LayoutError::ZeroPorts);
    }
    if m > MAX_PORTS || n > MAX_PORTS {
        return Err(LayoutError::TooManyPorts { m, n, max: MAX_PORTS });
    }
    if style == Style::BinaryTree && (m < 2 || n < 2) {
        return Err(LayoutError::BinaryTreeArity { m, n });
    }
    Ok(CircuitSpec { m, n, coupling, style })
}

/// Whether K_{m,n} is planar (no K_{3,3} subdivision): min(m, n) <= 2.
pub fn is_planar_by_kuratowski(spec: &CircuitSpec) -> bool {
    spec.m.min(spec.n) <= 2
}

/// Whether an edge is an ordinary waveguide or an elevated overpass.
#[derive(
    Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize,
)]
pub enum EdgeKind {
    Planar,
    Overpass,
}

/// A drawn edge: a polyline route, plus approach stubs when elevated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    pub from: VertexId,
    pub to: VertexId,
    pub kind: EdgeKind,
    /// Planar edge: the waveguide from `from` to `to`.
    /// Overpass: the plane projection of the elevated span, running between
    /// the far ends of the two stubs.
    pub route: Vec<Point>,
    /// Overpass approach waveguides: `.0` starts at `from`, `.1` at `to`.
    pub stubs: Option<(Vec<Point>, Vec<Point>)>,
}

impl Edge {
    pub fn planar(from: VertexId, to: VertexId, route: Vec<Point>) -> Self {
        Edge { from, to, kind: EdgeKind::Planar, route, stubs: None }
    }

    pub fn overpass(
        from: VertexId,
        to: VertexId,
        stub_from: Vec<Point>,
        route: Vec<Point>,
        stub_to: Vec<Point>,
    ) -> Self {
        Edge { from, to, kind: EdgeKind::Overpass, route, stubs: Some((stub_from, stub_to)) }
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.from, self.to)
    }

    /// All planar polylines of this edge (route for planar edges, stubs for overpasses).
    pub fn planar_polylines(&self) -> Vec<&[Point]> {
        match (&self.kind, &self.stubs) {
            (EdgeKind::Planar, _) => vec![&self.route],
            (EdgeKind::Overpass, Some((a, b))) => vec![a, b],
            (EdgeKind::Overpass, None) => vec![],
        }
    }
}

/// One input-to-output light path through a drawing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathTrace {
    /// Indices into `Drawing::edges`, ordered from input to output.
    pub edge_sequence: Vec<usize>,
    /// Waveguide crossings encountered along the path.
    pub planar_crossings: u64,
    /// Overpass edges along the path.
    pub overpass_count: u32,
}

/// A complete layout of a circuit: vertex placement, edge routes, boundary,
/// and the realized connection paths. Treat as immutable once built.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Drawing {
    pub spec: CircuitSpec,
    pub positions: BTreeMap<VertexId, Point>,
    pub edges: Vec<Edge>,
    /// Present exactly for facet drawings: the enclosing chip outline (convex,
    /// listed once without a closing repeat).
    pub boundary: Option<Vec<Point>>,
    /// Total map: one path per (input, output) pair, 1-based.
    pub connection_map: BTreeMap<(u32, u32), PathTrace>,
}

impl Drawing {
    pub fn position(&self, v: VertexId) -> Option<&Point> {
        self.positions.get(&v)
    }

    fn primary_sorted(&self, party: Party) -> Vec<VertexId> {
        self.positions
            .keys()
            .filter(|v| v.party == party && v.split_ordinal == 0)
            .copied()
            .collect()
    }

    /// The vertex where input `i` (1-based) enters: its Port if drawn,
    /// otherwise the i-th switch vertex in index order.
    pub fn input_vertex(&self, i: u32) -> Option<VertexId> {
        let port = VertexId::port_in(i);
        if self.positions.contains_key(&port) {
            return Some(port);
        }
        self.primary_sorted(Party::M).get(i as usize - 1).copied()
    }

    /// The vertex where output `j` (1-based) exits: its Port if drawn,
    /// otherwise the j-th selector vertex in index order.
    pub fn output_vertex(&self, j: u32) -> Option<VertexId> {
        let port = VertexId::port_out(j);
        if self.positions.contains_key(&port) {
            return Some(port);
        }
        self.primary_sorted(Party::N).get(j as usize - 1).copied()
    }

    /// Mirror of the drawing across the line y = x, with the two parties
    /// swapped: M(i) <-> N(i), Port +i <-> Port -i, connection (i, j) -> (j, i).
    /// Preserves every drawing invariant and all crossing tallies.
    pub fn transposed(&self) -> Drawing {
        let swap_id = |v: VertexId| -> VertexId {
            let party = match v.party {
                Party::M => Party::N,
                Party::N => Party::M,
                Party::Port => Party::Port,
                Party::Aux => Party::Aux,
            };
            let index = if v.party == Party::Port { -v.index } else { v.index };
            VertexId { party, index, split_ordinal: v.split_ordinal }
        };
        let swap_pt = |p: &Point| Point::new(p.y.clone(), p.x.clone());
        let swap_poly = |poly: &[Point]| poly.iter().map(swap_pt).collect::<Vec<_>>();
        Drawing {
            spec: CircuitSpec {
                m: self.spec.n,
                n: self.spec.m,
                coupling: self.spec.coupling,
                style: self.spec.style,
            },
            positions: self
                .positions
                .iter()
                .map(|(v, p)| (swap_id(*v), swap_pt(p)))
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    from: swap_id(e.from),
                    to: swap_id(e.to),
                    kind: e.kind,
                    route: swap_poly(&e.route),
                    stubs: e
                        .stubs
                        .as_ref()
                        .map(|(a, b)| (swap_poly(a), swap_poly(b))),
                })
                .collect(),
            boundary: self.boundary.as_ref().map(|b| swap_poly(b)),
            connection_map: self
                .connection_map
                .iter()
                .map(|(&(i, j), t)| ((j, i), t.clone()))
                .collect(),
        }
    }

    /// Uniformly scales all coordinates by `k > 0`. Crossing tallies are
    /// unchanged: similarity transforms preserve every incidence.
    pub fn scaled(&self, k: &Rat) -> Result<Drawing, LayoutError> {
        if !k.is_positive() {
            return Err(LayoutError::NonPositiveScale);
        }
        let sp = |p: &Point| Point::new(&p.x * k, &p.y * k);
        let spoly = |poly: &[Point]| poly.iter().map(sp).collect::<Vec<_>>();
        Ok(Drawing {
            spec: self.spec,
            positions: self.positions.iter().map(|(v, p)| (*v, sp(p))).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    from: e.from,
                    to: e.to,
                    kind: e.kind,
                    route: spoly(&e.route),
                    stubs: e.stubs.as_ref().map(|(a, b)| (spoly(a), spoly(b))),
                })
                .collect(),
            boundary: self.boundary.as_ref().map(|b| spoly(b)),
            connection_map: self.connection_map.clone(),
        })
    }
}

/// Accumulates the parts of a drawing; validation happens on finish.
#[derive(Clone, Debug)]
pub struct DrawingBuilder {
    pub spec: CircuitSpec,
    vertices: Vec<(VertexId, Point)>,
    edges: Vec<Edge>,
    boundary: Option<Vec<Point>>,
    connections: Vec<((u32, u32), Vec<usize>)>,
}

impl DrawingBuilder {
    pub fn new(spec: CircuitSpec) -> Self {
        DrawingBuilder { spec, vertices: Vec::new(), edges: Vec::new(), boundary: None, connections: Vec::new() }
    }

    pub fn vertex(&mut self, id: VertexId, at: Point) -> VertexId {
        self.vertices.push((id, at));
        id
    }

    pub fn position_of(&self, id: VertexId) -> Option<&Point> {
        self.vertices.iter().find(|(v, _)| *v == id).map(|(_, p)| p)
    }

    pub fn planar_edge(&mut self, from: VertexId, to: VertexId, route: Vec<Point>) -> usize {
        self.edges.push(Edge::planar(from, to, route));
        self.edges.len() - 1
    }

    /// Planar edge drawn as the straight segment between two placed vertices.
    pub fn straight_edge(&mut self, from: VertexId, to: VertexId) -> usize {
        let a = self.position_of(from).expect("straight_edge: from not placed").clone();
        let b = self.position_of(to).expect("straight_edge: to not placed").clone();
        self.planar_edge(from, to, vec![a, b])
    }

    pub fn overpass_edge(
        &mut self,
        from: VertexId,
        to: VertexId,
        stub_from: Vec<Point>,
        route: Vec<Point>,
        stub_to: Vec<Point>,
    ) -> usize {
        self.edges.push(Edge::overpass(from, to, stub_from, route, stub_to));
        self.edges.len() - 1
    }

    pub fn boundary(&mut self, polygon: Vec<Point>) {
        self.boundary = Some(polygon);
    }

    pub fn connect(&mut self, input: u32, output: u32, edges: Vec<usize>) {
        self.connections.push(((input, output), edges));
    }

    /// Structural validation: vertex uniqueness and placement, route/stub
    /// endpoint coincidence, polyline sanity, boundary presence, connection
    /// totality and continuity. Geometric validation and crossing tallies are
    /// layered on by `crossing::finalize`, the public construction path.
    pub(crate) fn finish_structural(self) -> Result<Drawing, LayoutError> {
        let DrawingBuilder { spec, vertices, edges, boundary, connections } = self;

        let mut positions: BTreeMap<VertexId, Point> = BTreeMap::new();
        let mut occupied: BTreeMap<Point, VertexId> = BTreeMap::new();
        for (id, at) in vertices {
            if id.index == 0 {
                return Err(LayoutError::ZeroVertexIndex(id));
            }
            if positions.insert(id, at.clone()).is_some() {
                return Err(LayoutError::DuplicateVertex(id));
            }
            if let Some(other) = occupied.insert(at, id) {
                return Err(LayoutError::CoincidentVertices(other, id));
            }
        }

        for (idx, edge) in edges.iter().enumerate() {
            let from_at = positions
                .get(&edge.from)
                .ok_or(LayoutError::UnknownEndpoint { edge: idx, vertex: edge.from })?;
            let to_at = positions
                .get(&edge.to)
                .ok_or(LayoutError::UnknownEndpoint { edge: idx, vertex: edge.to })?;
            let polylines: Vec<&[Point]> = match (&edge.kind, &edge.stubs) {
                (EdgeKind::Planar, None) => vec![&edge.route],
                (EdgeKind::Planar, Some(_)) => {
                    return Err(LayoutError::UnexpectedStubs(idx));
                }
                (EdgeKind::Overpass, Some((a, b))) => vec![&edge.route, a, b],
                (EdgeKind::Overpass, None) => {
                    return Err(LayoutError::MissingStubs(idx));
                }
            };
            for poly in &polylines {
                validate_polyline(idx, poly)?;
            }
            match (&edge.kind, &edge.stubs) {
                (EdgeKind::Planar, _) => {
                    if edge.route.first() != Some(from_at) || edge.route.last() != Some(to_at) {
                        return Err(LayoutError::RouteEndpointMismatch(idx));
                    }
                }
                (EdgeKind::Overpass, Some((stub_from, stub_to))) => {
                    if stub_from.first() != Some(from_at) || stub_to.first() != Some(to_at) {
                        return Err(LayoutError::RouteEndpointMismatch(idx));
                    }
                    if edge.route.first() != stub_from.last()
                        || edge.route.last() != stub_to.last()
                    {
                        return Err(LayoutError::RouteEndpointMismatch(idx));
                    }
                }
                (EdgeKind::Overpass, None) => unreachable!(),
            }
        }

        match (spec.coupling, &boundary) {
            (Coupling::Facet, None) => return Err(LayoutError::BoundaryMissing),
            (Coupling::Surface, Some(_)) => return Err(LayoutError::BoundaryUnexpected),
            _ => {}
        }
        if let Some(poly) = &boundary {
            if poly.len() < 3 {
                return Err(LayoutError::DegenerateBoundary);
            }
            let distinct: BTreeSet<&Point> = poly.iter().collect();
            if distinct.len() != poly.len() {
                return Err(LayoutError::DegenerateBoundary);
            }
        }

        let mut connection_map: BTreeMap<(u32, u32), PathTrace> = BTreeMap::new();
        let stub_drawing = Drawing {
            spec,
            positions: positions.clone(),
            edges: edges.clone(),
            boundary: boundary.clone(),
            connection_map: BTreeMap::new(),
        };
        for ((i, j), seq) in connections {
            if i == 0 || i > spec.m || j == 0 || j > spec.n {
                return Err(LayoutError::ConnectionOutOfRange { input: i, output: j });
            }
            if seq.is_empty() {
                return Err(LayoutError::EmptyConnection { input: i, output: j });
            }
            let start = stub_drawing
                .input_vertex(i)
                .ok_or(LayoutError::MissingTerminal { input: i, output: j })?;
            let goal = stub_drawing
                .output_vertex(j)
                .ok_or(LayoutError::MissingTerminal { input: i, output: j })?;
            let mut at = start;
            let mut overpasses = 0u32;
            for &e in &seq {
                let edge = edges
                    .get(e)
                    .ok_or(LayoutError::BadEdgeIndex { input: i, output: j, edge: e })?;
                at = if edge.from == at {
                    edge.to
                } else if edge.to == at {
                    edge.from
                } else {
                    return Err(LayoutError::DisconnectedPath { input: i, output: j });
                };
                if edge.kind == EdgeKind::Overpass {
                    overpasses += 1;
                }
            }
            if at != goal {
                return Err(LayoutError::DisconnectedPath { input: i, output: j });
            }
            let trace =
                PathTrace { edge_sequence: seq, planar_crossings: 0, overpass_count: overpasses };
            if connection_map.insert((i, j), trace).is_some() {
                return Err(LayoutError::DuplicateConnection { input: i, output: j });
            }
        }
        if connection_map.len() as u64 != u64::from(spec.m) * u64::from(spec.n) {
            return Err(LayoutError::IncompleteConnectionMap {
                have: connection_map.len(),
                want: u64::from(spec.m) * u64::from(spec.n),
            });
        }

        Ok(Drawing { spec, positions, edges, boundary, connection_map })
    }
}

fn validate_polyline(edge: usize, poly: &[Point]) -> Result<(), LayoutError> {
    if poly.len() < 2 {
        return Err(LayoutError::ShortPolyline(edge));
    }
    for pair in poly.windows(2) {
        if pair[0] == pair[1] {
            return Err(LayoutError::ZeroLengthSegment(edge));
        }
    }
    let distinct: BTreeSet<&Point> = poly.iter().collect();
    if distinct.len() != poly.len() {
        return Err(LayoutError::SelfIntersectingPolyline(edge));
    }
    Ok(())
}

/// Everything that can go wrong while specifying, building, measuring, or
/// serializing a layout.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum LayoutError {
    #[error("port counts must be positive")]
    ZeroPorts,
    #[error("port counts {m} x {n} exceed the supported maximum {max}")]
    TooManyPorts { m: u32, n: u32, max: u32 },
    #[error("binary-tree switches need at least 2 ports per side, got {m} x {n}")]
    BinaryTreeArity { m: u32, n: u32 },
    #[error("malformed rational literal `{0}`")]
    BadRational(String),
    #[error("vertex index must be nonzero: {0:?}")]
    ZeroVertexIndex(VertexId),
    #[error("vertex {0:?} placed twice")]
    DuplicateVertex(VertexId),
    #[error("vertices {0:?} and {1:?} share a position")]
    CoincidentVertices(VertexId, VertexId),
    #[error("edge {edge} references unplaced vertex {vertex:?}")]
    UnknownEndpoint { edge: usize, vertex: VertexId },
    #[error("edge {0} has a polyline with fewer than two points")]
    ShortPolyline(usize),
    #[error("edge {0} contains a zero-length segment")]
    ZeroLengthSegment(usize),
    #[error("edge {0} has a polyline that revisits a point")]
    SelfIntersectingPolyline(usize),
    #[error("edge {0} route/stub endpoints do not meet their vertices")]
    RouteEndpointMismatch(usize),
    #[error("planar edge {0} carries stubs")]
    UnexpectedStubs(usize),
    #[error("overpass edge {0} lacks stubs")]
    MissingStubs(usize),
    #[error("facet drawing lacks a boundary")]
    BoundaryMissing,
    #[error("surface drawing carries a boundary")]
    BoundaryUnexpected,
    #[error("boundary polygon is degenerate")]
    DegenerateBoundary,
    #[error("boundary polygon is not convex")]
    NonConvexBoundary,
    #[error("port vertex {0:?} is not on the boundary")]
    PortOffBoundary(VertexId),
    #[error("edge {edge} leaves the boundary near {at}")]
    RouteOutsideBoundary { edge: usize, at: Box<Point> },
    #[error("connection ({input}, {output}) outside the 1..=m x 1..=n grid")]
    ConnectionOutOfRange { input: u32, output: u32 },
    #[error("connection ({input}, {output}) has an empty edge sequence")]
    EmptyConnection { input: u32, output: u32 },
    #[error("connection ({input}, {output}) listed twice")]
    DuplicateConnection { input: u32, output: u32 },
    #[error("connection ({input}, {output}) references edge {edge} which does not exist")]
    BadEdgeIndex { input: u32, output: u32, edge: usize },
    #[error("connection ({input}, {output}) is not a connected input-to-output path")]
    DisconnectedPath { input: u32, output: u32 },
    #[error("connection ({input}, {output}) has no terminal vertex to anchor to")]
    MissingTerminal { input: u32, output: u32 },
    #[error("connection map has {have} paths, expected {want}")]
    IncompleteConnectionMap { have: usize, want: u64 },
    #[error("edges {0} and {1} overlap along a segment of positive length")]
    SegmentOverlap(usize, usize),
    #[error("edge {0} crosses itself")]
    SelfCrossingEdge(usize),
    #[error("edge {edge} passes through vertex {vertex:?}")]
    RouteThroughVertex { edge: usize, vertex: VertexId },
    #[error("edges {0} and {1} meet degenerately at {2}")]
    DegenerateContact(usize, usize, Box<Point>),
    #[error("projection conflict between edges {0} and {1} cannot be absorbed by any stub")]
    IrreducibleConflict(usize, usize),
    #[error("scale factor must be positive")]
    NonPositiveScale,
    #[error("exhaustive search supports at most {max} ports per side, got {n}")]
    SearchTooLarge { n: u32, max: u32 },
    #[error("statistics need at least {min} ports per side, got {n}")]
    StatsTooSmall { n: u32, min: u32 },
    #[error("crosstalk per crossing must be nonpositive dB, got {0}")]
    PositiveCrosstalk(f64),
    #[error("insertion loss per crossing must be nonnegative dB, got {0}")]
    NegativeInsertionLoss(f64),
    #[error("interleaved layout needs n to be a positive multiple of m, got {m} x {n}")]
    NotInterleavable { m: u32, n: u32 },
    #[error("operation needs {what}, got {m} x {n}")]
    UnsupportedSize { what: &'static str, m: u32, n: u32 },
    #[error("malformed drawing document: {0}")]
    BadDocument(String),
    #[error("render width {0} px is below the 64 px minimum")]
    RenderTooNarrow(u32),
}
