//! Facet-coupled layouts for an m x n switch-and-select fabric.
//!
//! With edge couplers every optical port must reach the chip outline, so all
//! drawings in this module carry a convex boundary and keep their geometry
//! inside it. The module builds the clustered and interleaved port drawings
//! on a circle, the two-axis corner drawing on a rectangle, the spanning
//! planar double fan, crossing-free hybrid drawings with waveguide overpasses
//! in both switch styles, and two worked rerouted variants of the 4 x 4
//! circle drawings.

use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::crossing;
use crate::model::{
    make_spec, rat, rat_int, Coupling, Drawing, DrawingBuilder, LayoutError, Party, Point, Rat,
    Style, VertexId,
};
use crate::surface;

/// Closed-form crossing and overpass counts for one m x n facet instance.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FacetFormulaSet {
    /// Crossings of the clustered-port drawing.
    pub eta_basic: u64,
    /// Crossings of the interleaved-port drawing; `None` unless the selector
    /// count is a multiple of the switch count.
    pub eta_interleaved: Option<u64>,
    /// Worst crossings along a single path of the interleaved drawing.
    pub xi: u64,
    /// Overpasses consumed by the lumped-element hybrid placement.
    pub mu_le: u64,
    /// Overpasses consumed by the binary-tree hybrid placement; `None` when
    /// that style needs more ports than the instance has.
    pub mu_bt: Option<u64>,
}

/// Crossings of the clustered-port drawing: C(m,2) * C(n,2), the same bill
/// the surface two-column drawing pays.
pub fn eta_facet_basic(m: u32, n: u32) -> u64 {
    surface::eta_basic(m, n)
}

/// Crossings of the interleaved-port drawing, n(m-1)(2mn - 3m - n) / 12,
/// defined when the n selectors divide evenly among the m switches.
pub fn eta_facet_interleaved(m: u32, n: u32) -> Result<u64, LayoutError> {
    if m == 0 || n == 0 || !n.is_multiple_of(m) {
        return Err(LayoutError::UnsupportedSize {
            what: "selector count divisible by switch count",
            m,
            n,
        });
    }
    if m == 1 {
        return Ok(0);
    }
    let (m, n) = (u128::from(m), u128::from(n));
    let p = n * (m - 1) * (2 * m * n - 3 * m - n);
    debug_assert_eq!(p % 12, 0);
    Ok(u64::try_from(p / 12).expect("crossing count exceeds u64"))
}

/// Worst-case crossings along one path of the interleaved n x n drawing:
/// 2 floor((n-1)/2) ceil((n-1)/2).
pub fn xi_facet(n: u32) -> u64 {
    let lo = u64::from(n.saturating_sub(1)) / 2;
    let hi = u64::from(n) / 2;
    2 * lo * hi
}

/// Overpasses needed by the lumped-element placement: (m-1)(n-1).
pub fn mu_facet_le(m: u32, n: u32) -> u64 {
    u64::from(m.saturating_sub(1)) * u64::from(n.saturating_sub(1))
}

/// Overpasses needed by the binary-tree placement: ceil((m-1)(n-1) / 2).
/// Binary-tree switches need at least two ports on each side.
pub fn mu_facet_bt(m: u32, n: u32) -> Result<u64, LayoutError> {
    if m < 2 || n < 2 {
        return Err(LayoutError::BinaryTreeArity { m, n });
    }
    Ok(mu_facet_le(m, n).div_ceil(2))
}

/// All five closed forms for one instance.
pub fn facet_formulas(m: u32, n: u32) -> FacetFormulaSet {
    FacetFormulaSet {
        eta_basic: eta_facet_basic(m, n),
        eta_interleaved: eta_facet_interleaved(m, n).ok(),
        xi: xi_facet(n),
        mu_le: mu_facet_le(m, n),
        mu_bt: mu_facet_bt(m, n).ok(),
    }
}

/// Rectangle enclosing the corner drawings: switch ports on its bottom side,
/// selector ports on its left side.
fn rect_boundary(m: u32, n: u32) -> Vec<Point> {
    let w = i64::from(m) + 1;
    let h = i64::from(n) + 1;
    vec![Point::ints(0, 0), Point::ints(w, 0), Point::ints(w, h), Point::ints(0, h)]
}

/// The corner drawing: switches along the bottom boundary edge, selectors
/// along the left boundary edge, all m*n connections straight. Chords (i, j)
/// and (i', j') cross exactly when i < i' and j > j', so the crossing count
/// equals [`eta_facet_basic`].
pub fn build_facet_axes_drawing(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    let spec = make_spec(m, n, Coupling::Facet, Style::LumpedElement)?;
    let mut b = DrawingBuilder::new(spec);
    b.boundary(rect_boundary(m, n));
    for i in 1..=m as i32 {
        b.vertex(VertexId::m(i), Point::ints(i.into(), 0));
    }
    for j in 1..=n as i32 {
        b.vertex(VertexId::n(j), Point::ints(0, j.into()));
    }
    for i in 1..=m {
        for j in 1..=n {
            let e = b.straight_edge(VertexId::m(i as i32), VertexId::n(j as i32));
            b.connect(i, j, vec![e]);
        }
    }
    crossing::finalize(b)
}

/// The corner scaffold shared by the planar subgraph and both hybrid
/// placements: axis vertices plus the two boundary fans, with the fan edge
/// they share drawn once.
struct CornerScaffold {
    b: DrawingBuilder,
    /// Fan edge from the first switch to selector j, at `m1[j - 1]`.
    m1: Vec<usize>,
    /// Fan edge from the last selector to switch i, at `nn[i - 1]`.
    nn: Vec<usize>,
}

fn corner_scaffold(m: u32, n: u32, style: Style) -> Result<CornerScaffold, LayoutError> {
    let spec = make_spec(m, n, Coupling::Facet, style)?;
    let mut b = DrawingBuilder::new(spec);
    b.boundary(rect_boundary(m, n));
    for i in 1..=m as i32 {
        b.vertex(VertexId::m(i), Point::ints(i.into(), 0));
    }
    for j in 1..=n as i32 {
        b.vertex(VertexId::n(j), Point::ints(0, j.into()));
    }
    let last = n as i32;
    let shared = b.straight_edge(VertexId::m(1), VertexId::n(last));
    let m1 = (1..=last)
        .map(|j| if j == last { shared } else { b.straight_edge(VertexId::m(1), VertexId::n(j)) })
        .collect();
    let nn = (1..=m as i32)
        .map(|i| if i == 1 { shared } else { b.straight_edge(VertexId::n(last), VertexId::m(i)) })
        .collect();
    Ok(CornerScaffold { b, m1, nn })
}

/// Detour for a pair without a direct fan edge: out to the last selector,
/// across the shared edge, and down the first switch's fan.
fn fan_sequence(i: u32, j: u32, n: u32, m1: &[usize], nn: &[usize]) -> Vec<usize> {
    if i == 1 {
        vec![m1[j as usize - 1]]
    } else if j == n {
        vec![nn[i as usize - 1]]
    } else {
        vec![nn[i as usize - 1], m1[n as usize - 1], m1[j as usize - 1]]
    }
}

/// The spanning maximum planar subgraph of K_{m,n} under facet coupling:
/// m + n - 1 edges forming two boundary fans, no crossings. Pairs without a
/// direct edge are routed as three-edge detours over the fans, so the
/// connection map stays total.
pub fn build_facet_spanning_planar_subgraph(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    let CornerScaffold { mut b, m1, nn } = corner_scaffold(m, n, Style::LumpedElement)?;
    for i in 1..=m {
        for j in 1..=n {
            let seq = fan_sequence(i, j, n, &m1, &nn);
            b.connect(i, j, seq);
        }
    }
    crossing::finalize(b)
}

/// Lumped-element hybrid drawing: the double fan plus one overpass per
/// missing connection, (m-1)(n-1) in all. Every overpass runs along its own
/// corridor heights c and t, both graded in a single global order, so the
/// drawing is born with zero waveguide and zero projection crossings.
pub fn place_wop_le_facet(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    let CornerScaffold { mut b, m1, nn } = corner_scaffold(m, n, Style::LumpedElement)?;
    let k = i64::from(m.saturating_sub(1)) * i64::from(n.saturating_sub(1));
    let eps_c = rat(1, 2 * i64::from(n) * (k + 2));
    let eps_t = rat(1, 4 * i64::from(m) * (k + 2));
    let mut ops: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    let mut p = 0i64;
    for i in 2..=m as i32 {
        for j in 1..n as i32 {
            p += 1;
            let c = &eps_c * rat_int(p);
            let t = &eps_t * rat_int(p);
            let iota = &t * (Rat::one() + &c);
            let lift_m = Point::new(rat_int(i.into()) + iota, t.clone());
            let knee = Point::new(c.clone(), t);
            let lift_n = Point::new(c.clone(), rat_int(j.into()) + &c * &c);
            let e = b.overpass_edge(
                VertexId::m(i),
                VertexId::n(j),
                vec![Point::ints(i.into(), 0), lift_m.clone()],
                vec![lift_m, knee, lift_n.clone()],
                vec![Point::ints(0, j.into()), lift_n],
            );
            ops.insert((i as u32, j as u32), e);
        }
    }
    for i in 1..=m {
        for j in 1..=n {
            let seq = match ops.get(&(i, j)) {
                Some(&e) => vec![e],
                None => fan_sequence(i, j, n, &m1, &nn),
            };
            b.connect(i, j, seq);
        }
    }
    crossing::finalize(b)
}

/// Binary-tree hybrid drawing under facet coupling: adjacent switch pairs
/// share split selector vertices inside their boundary triangles, so most
/// overpasses serve two connections and only ceil((m-1)(n-1) / 2) are
/// needed. With both sides even the last switch is served through split
/// switch vertices in the thin triangles along the left boundary, plus one
/// leftover overpass. The drawing is born with zero waveguide and zero
/// projection crossings. Needs at least two ports per side.
pub fn place_wop_bt_facet(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    make_spec(m, n, Coupling::Facet, Style::BinaryTree)?;
    if m.is_multiple_of(2) && !n.is_multiple_of(2) {
        return Ok(place_wop_bt_facet(n, m)?.transposed());
    }
    build_bt_facet(m, n)
}

/// One pair-triangle overpass awaiting its global riser assignment.
struct PendingRiser {
    aux: VertexId,
    apex: Point,
    n_idx: i32,
    g: Rat,
    tip: Point,
    tent_l: usize,
    tent_r: usize,
    xl: i32,
    xr: i32,
}

fn build_bt_facet(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    let CornerScaffold { mut b, m1, nn } = corner_scaffold(m, n, Style::BinaryTree)?;
    let (mi, ni) = (i64::from(m), i64::from(n));
    let mut extra: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();

    // Adjacent switch pairs {M(a), M(a+1)}; with m even the last switch is
    // left out and served through the thin triangles instead.
    let top_a = if m % 2 == 1 { mi - 1 } else { mi - 2 };
    let lo_h = rat(ni, 4 * mi);
    let mut pend: Vec<PendingRiser> = Vec::new();
    for a in (2..=top_a).step_by(2) {
        // The pair triangle {(0, n), (a, 0), (a + 1, 0)} pinches as y grows;
        // its midline stays interior below n / (2(a + 1)).
        let hi_a = rat(ni, 2 * (a + 1));
        let step = (&hi_a - &lo_h) / rat_int(ni + 1);
        let tau = &step / rat_int(8);
        let reach = &step * rat(a + 1, 2 * ni);
        let mid = rat(2 * a + 1, 2);
        for k in 1..n as i32 {
            let h = &lo_h + &step * rat_int(k.into());
            let apex = Point::new(mid.clone(), h.clone());
            let id = VertexId::split(Party::N, k, (a / 2) as u32);
            b.vertex(id, apex.clone());
            let tent_l =
                b.planar_edge(id, VertexId::m(a as i32), vec![apex.clone(), Point::ints(a, 0)]);
            let tent_r = b.planar_edge(
                id,
                VertexId::m(a as i32 + 1),
                vec![apex.clone(), Point::ints(a + 1, 0)],
            );
            let delta = &reach * rat(i64::from(k) + 1, ni + 1);
            let g = &mid + &delta;
            let tip = Point::new(g.clone(), &h + &tau);
            pend.push(PendingRiser {
                aux: id,
                apex,
                n_idx: k,
                g,
                tip,
                tent_l,
                tent_r,
                xl: a as i32,
                xr: a as i32 + 1,
            });
        }
    }
    pend.sort_by(|p, q| p.g.cmp(&q.g));
    let cnt2 = pend.len() as i64;
    let eps_c = rat(1, 4 * ni * (cnt2 + 2));
    for (r, p) in pend.iter().enumerate() {
        let ceiling = rat_int(ni) + rat(1, 2) + rat(r as i64 + 1, 2 * (cnt2 + 1));
        let c = rat_int(cnt2 - r as i64) * &eps_c;
        let drop = Point::new(c.clone(), rat_int(p.n_idx.into()) + &c * &c);
        let e = b.overpass_edge(
            p.aux,
            VertexId::n(p.n_idx),
            vec![p.apex.clone(), p.tip.clone()],
            vec![
                p.tip.clone(),
                Point::new(p.g.clone(), ceiling.clone()),
                Point::new(c, ceiling),
                drop.clone(),
            ],
            vec![Point::ints(0, p.n_idx.into()), drop],
        );
        extra.insert((p.xl as u32, p.n_idx as u32), vec![p.tent_l, e]);
        extra.insert((p.xr as u32, p.n_idx as u32), vec![p.tent_r, e]);
    }

    if m.is_multiple_of(2) {
        // The held-out last switch reaches selectors through split switch
        // vertices in the thin triangles {(0, 2k-1), (0, 2k), (1, 0)}, over
        // projections routed below every pair-triangle riser.
        let cnt3 = (ni - 2) / 2;
        let t_cap = lo_h.min(rat(1, 2));
        let eps_t = &t_cap / rat_int(2 * (cnt3 + 2));
        let c_last = rat_int(cnt2 + 1) * &eps_c;
        let mut low = 0i64;
        let mut low_t = || {
            low += 1;
            &eps_t * rat_int(low)
        };
        let t_l = low_t();
        let iota_l = &t_l * (Rat::one() + &c_last);
        let knee_l = Point::new(rat_int(mi) - iota_l, t_l.clone());
        let turn_l = Point::new(c_last.clone(), t_l);
        let drop_l = Point::new(c_last.clone(), rat_int(ni - 1) + &c_last * &c_last);
        let e_last = b.overpass_edge(
            VertexId::m(m as i32),
            VertexId::n(n as i32 - 1),
            vec![Point::ints(mi, 0), knee_l.clone()],
            vec![knee_l, turn_l, drop_l.clone()],
            vec![Point::ints(0, ni - 1), drop_l],
        );
        extra.insert((m, n - 1), vec![e_last]);
        if cnt3 > 0 {
            let eps_g = (rat(1, 2 * (ni - 2)) - rat(1, 4 * ni)) / rat_int(cnt3 + 2);
            for q in 0..cnt3 {
                let k3 = q + 1;
                let apex = Point::new(rat(1, 8 * ni), rat(4 * k3 - 1, 2));
                let id = VertexId::split(Party::M, m as i32, k3 as u32);
                b.vertex(id, apex.clone());
                let tent_lo = b.planar_edge(
                    id,
                    VertexId::n(2 * k3 as i32 - 1),
                    vec![apex.clone(), Point::ints(0, 2 * k3 - 1)],
                );
                let tent_hi = b.planar_edge(
                    id,
                    VertexId::n(2 * k3 as i32),
                    vec![apex.clone(), Point::ints(0, 2 * k3)],
                );
                let gl = rat(1, 4 * ni) + rat_int(q + 1) * &eps_g;
                let tip = Point::new(gl.clone(), rat(4 * k3 - 1, 2) - rat(1, 4));
                let t = low_t();
                let iota = &t * (Rat::one() + &gl);
                let knee = Point::new(rat_int(mi) - iota, t.clone());
                let e = b.overpass_edge(
                    id,
                    VertexId::m(m as i32),
                    vec![apex, tip.clone()],
                    vec![tip, Point::new(gl, t.clone()), knee.clone()],
                    vec![Point::ints(mi, 0), knee],
                );
                extra.insert((m, 2 * k3 as u32 - 1), vec![e, tent_lo]);
                extra.insert((m, 2 * k3 as u32), vec![e, tent_hi]);
            }
        }
    }

    for i in 1..=m {
        for j in 1..=n {
            let seq = match extra.get(&(i, j)) {
                Some(seq) => seq.clone(),
                None => fan_sequence(i, j, n, &m1, &nn),
            };
            b.connect(i, j, seq);
        }
    }
    crossing::finalize(b)
}

/// A rational point of the unit circle: the tangent-half-angle image of u,
/// ((1 - u^2) / (1 + u^2), 2u / (1 + u^2)). Ascending u is ascending angle.
fn circle_point(u: &Rat) -> Point {
    let u2 = u * u;
    let den = Rat::one() + &u2;
    Point::new((Rat::one() - &u2) / &den, (u + u) / &den)
}

/// The same point pushed out to radius `r`.
fn ring_point(u: i64, r: &Rat) -> Point {
    let p = circle_point(&rat_int(u));
    Point::new(&p.x * r, &p.y * r)
}

fn abs(v: &Rat) -> Rat {
    if v < &rat_int(0) {
        -v.clone()
    } else {
        v.clone()
    }
}

/// Radial projection of a circle point onto the square boundary of side 8.
fn square_port(p: &Point) -> Point {
    let len = abs(&p.x).max(abs(&p.y));
    let scale = rat_int(4) / len;
    Point::new(&p.x * &scale, &p.y * &scale)
}

/// Circle drawing over a given circular slot order: switches and selectors
/// on rational points of the unit circle, ports pushed radially onto the
/// square boundary, and every connection a straight chord between its two
/// slots. `detours` replaces chosen chords with explicit routes.
fn circle_drawing(
    m: u32,
    n: u32,
    slots: &[(Party, i32)],
    detours: &BTreeMap<(u32, u32), Vec<Point>>,
) -> Result<Drawing, LayoutError> {
    let spec = make_spec(m, n, Coupling::Facet, Style::LumpedElement)?;
    let mut b = DrawingBuilder::new(spec);
    b.boundary(vec![
        Point::ints(-4, -4),
        Point::ints(4, -4),
        Point::ints(4, 4),
        Point::ints(-4, 4),
    ]);
    let count = slots.len() as i64;
    let mut access: BTreeMap<(Party, i32), usize> = BTreeMap::new();
    for (s, &(party, idx)) in slots.iter().enumerate() {
        let u = rat(2 * s as i64 - count + 1, 2);
        let at = circle_point(&u);
        let port = square_port(&at);
        let id = match party {
            Party::M => VertexId::m(idx),
            _ => VertexId::n(idx),
        };
        let pid = match party {
            Party::M => VertexId::port_in(idx as u32),
            _ => VertexId::port_out(idx as u32),
        };
        b.vertex(id, at);
        b.vertex(pid, port);
        access.insert((party, idx), b.straight_edge(pid, id));
    }
    for i in 1..=m {
        for j in 1..=n {
            let chord = match detours.get(&(i, j)) {
                Some(route) => b.planar_edge(VertexId::m(i as i32), VertexId::n(j as i32), route.clone()),
                None => b.straight_edge(VertexId::m(i as i32), VertexId::n(j as i32)),
            };
            b.connect(
                i,
                j,
                vec![access[&(Party::M, i as i32)], chord, access[&(Party::N, j as i32)]],
            );
        }
    }
    crossing::finalize(b)
}

fn clustered_slots(m: u32, n: u32) -> Vec<(Party, i32)> {
    (1..=m as i32)
        .map(|i| (Party::M, i))
        .chain((1..=n as i32).map(|j| (Party::N, j)))
        .collect()
}

fn interleaved_slots(m: u32, n: u32) -> Vec<(Party, i32)> {
    let q = (n / m) as i32;
    let mut slots = Vec::new();
    for i in 1..=m as i32 {
        slots.push((Party::M, i));
        for r in 1..=q {
            slots.push((Party::N, (i - 1) * q + r));
        }
    }
    slots
}

/// The clustered-port drawing: all switches on one arc of the circle, all
/// selectors on the complementary arc, connections as straight chords.
/// Crossing count equals [`eta_facet_basic`].
pub fn build_clustered_facet_drawing(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    circle_drawing(m, n, &clustered_slots(m, n), &BTreeMap::new())
}

/// The interleaved-port drawing for m switches and n = qm selectors: the
/// port pattern M, N^q repeated around the circle, connections as straight
/// chords. Crossing count equals [`eta_facet_interleaved`], with at most
/// [`xi_facet`] crossings on any one path when m = n.
pub fn build_interleaved_facet_drawing_mn(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    eta_facet_interleaved(m, n)?;
    circle_drawing(m, n, &interleaved_slots(m, n), &BTreeMap::new())
}

/// The alternating special case of [`build_interleaved_facet_drawing_mn`]:
/// n switches and n selectors interleaved one by one.
pub fn build_interleaved_facet_drawing(n: u32) -> Result<Drawing, LayoutError> {
    build_interleaved_facet_drawing_mn(n, n)
}

/// The worked rerouted 4 x 4 clustered drawing: five chords leave the disk
/// and travel the outer annulus instead, trading nine surviving chord
/// crossings plus eleven access crossings for the clustered drawing's
/// thirty-six.
pub fn clustered_rerouted_4x4() -> Result<Drawing, LayoutError> {
    let hop = |edge: &mut Vec<Point>, r: &Rat, us: &[i64]| {
        for &u in us {
            edge.push(ring_point(u, r));
        }
    };
    let gap = |r: &Rat| Point::new(-r.clone(), rat_int(0));
    let v = |u_num: i64| circle_point(&rat(u_num, 2));
    let mut detours = BTreeMap::new();
    // Counter-clockwise around the back, outermost first: M2-N1 passes M1,
    // N4, N3, N2; then M1-N1, M1-N2, M1-N3 nest inside it; M3-N1 takes the
    // short way past M4.
    let r = rat(33, 20);
    let mut route = vec![v(-5)];
    hop(&mut route, &r, &[-3, -4]);
    route.push(gap(&r));
    hop(&mut route, &r, &[4, 3, 2, 1]);
    route.push(v(1));
    detours.insert((2, 1), route);
    let r = rat(3, 2);
    let mut route = vec![v(-7)];
    hop(&mut route, &r, &[-4]);
    route.push(gap(&r));
    hop(&mut route, &r, &[4, 3, 2, 1]);
    route.push(v(1));
    detours.insert((1, 1), route);
    let r = rat(7, 5);
    let mut route = vec![v(-7)];
    hop(&mut route, &r, &[-4]);
    route.push(gap(&r));
    hop(&mut route, &r, &[4, 3, 2]);
    route.push(v(3));
    detours.insert((1, 2), route);
    let r = rat(13, 10);
    let mut route = vec![v(-7)];
    hop(&mut route, &r, &[-4]);
    route.push(gap(&r));
    hop(&mut route, &r, &[4, 3]);
    route.push(v(5));
    detours.insert((1, 3), route);
    // The short way needs quarter-step waypoints: integer tangent steps
    // near the circle's rightmost point subtend too much arc and would dip
    // into the disk.
    let r = rat(6, 5);
    let mut route = vec![v(-3), ring_point(-1, &r)];
    for q in [-3i64, -1, 1] {
        let p = circle_point(&rat(q, 4));
        route.push(Point::new(&p.x * &r, &p.y * &r));
    }
    route.push(v(1));
    detours.insert((3, 1), route);
    circle_drawing(4, 4, &clustered_slots(4, 4), &detours)
}

/// The worked rerouted 4 x 4 interleaved drawing: the two most expensive
/// chords travel the annulus past two ports each, leaving eight chord
/// crossings plus four access crossings.
pub fn interleaved_rerouted_4x4() -> Result<Drawing, LayoutError> {
    let v = |u_num: i64| circle_point(&rat(u_num, 2));
    let mut detours = BTreeMap::new();
    let r = rat(5, 4);
    let mut route = vec![v(-7)];
    for u in [-3i64, -2, -1] {
        route.push(ring_point(u, &r));
    }
    route.push(v(-1));
    detours.insert((1, 2), route);
    let r = rat(6, 5);
    let mut route = vec![v(1)];
    for u in [1i64, 2, 3] {
        route.push(ring_point(u, &r));
    }
    route.push(v(7));
    detours.insert((3, 4), route);
    circle_drawing(4, 4, &interleaved_slots(4, 4), &detours)
}
