//! Surface-coupled layouts for an m x n switch-and-select fabric.
//!
//! With vertical grating couplers the chip edge imposes no port ordering, so
//! switches and selectors may sit anywhere in the plane. This module builds
//! the standard drawings of the K_{m,n} interconnect: the naive two-column
//! drawing, the crossing-minimal two-axis drawing, the spanning maximum
//! planar subgraph carried by four hub fans, and crossing-free hybrid
//! drawings that restore the missing connections with waveguide overpasses
//! in either switch style.

use std::collections::BTreeMap;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::crossing;
use crate::geom::{midpoint, spread_up};
use crate::model::{
    make_spec, rat, rat_int, Coupling, Drawing, DrawingBuilder, LayoutError, Party, Point, Rat,
    Style, VertexId,
};

/// Closed-form crossing and overpass counts for one m x n surface instance.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SurfaceFormulaSet {
    /// Crossings of the naive two-column drawing.
    pub eta_basic: u64,
    /// Crossings of the two-axis drawing (the Zarankiewicz number).
    pub eta_conjectured: u64,
    /// Worst crossings along a single path of the two-axis drawing.
    pub xi: u64,
    /// Overpasses consumed by the lumped-element hybrid placement.
    pub mu_le: u64,
    /// Overpasses consumed by the binary-tree hybrid placement; `None` when
    /// that style needs more ports than the instance has.
    pub mu_bt: Option<u64>,
}

fn choose2(k: u128) -> u128 {
    k * k.saturating_sub(1) / 2
}

fn count_u64(v: u128) -> u64 {
    u64::try_from(v).expect("crossing count exceeds u64")
}

/// Crossings of the two-column drawing: C(m,2) * C(n,2).
pub fn eta_basic(m: u32, n: u32) -> u64 {
    count_u64(choose2(u128::from(m)) * choose2(u128::from(n)))
}

/// The Zarankiewicz number floor(m/2)floor((m-1)/2)floor(n/2)floor((n-1)/2),
/// attained by [`build_zarankiewicz_drawing`].
pub fn eta_conjectured(m: u32, n: u32) -> u64 {
    let (m, n) = (u128::from(m), u128::from(n));
    count_u64((m / 2) * (m.saturating_sub(1) / 2) * (n / 2) * (n.saturating_sub(1) / 2))
}

/// Worst-case crossings along one path of the two-axis drawing:
/// (ceil(m/2) - 1)(ceil(n/2) - 1).
pub fn xi_surface(m: u32, n: u32) -> u64 {
    let a = u64::from(m).div_ceil(2);
    let b = u64::from(n).div_ceil(2);
    a.saturating_sub(1) * b.saturating_sub(1)
}

/// Overpasses needed by the lumped-element placement: (m-2)(n-2), clamped
/// at zero for narrow instances.
pub fn mu_surface_le(m: u32, n: u32) -> u64 {
    u64::from(m).saturating_sub(2) * u64::from(n).saturating_sub(2)
}

/// Overpasses needed by the binary-tree placement: ceil((m-2)(n-2) / 2).
/// Binary-tree switches need at least two ports on each side.
pub fn mu_surface_bt(m: u32, n: u32) -> Result<u64, LayoutError> {
    if m < 2 || n < 2 {
        return Err(LayoutError::BinaryTreeArity { m, n });
    }
    Ok(mu_surface_le(m, n).div_ceil(2))
}

/// All five closed forms for one instance.
pub fn surface_formulas(m: u32, n: u32) -> SurfaceFormulaSet {
    SurfaceFormulaSet {
        eta_basic: eta_basic(m, n),
        eta_conjectured: eta_conjectured(m, n),
        xi: xi_surface(m, n),
        mu_le: mu_surface_le(m, n),
        mu_bt: mu_surface_bt(m, n).ok(),
    }
}

/// Axis stations for k vertices: -floor(k/2)..-1 then 1..ceil(k/2), skipping
/// zero, with the odd surplus on the positive side.
fn axis_indices(k: u32) -> Vec<i32> {
    let neg = (k / 2) as i32;
    let pos = k.div_ceil(2) as i32;
    (-neg..0).chain(1..=pos).collect()
}

fn unit_fraction(factors: &[i64]) -> Rat {
    factors.iter().fold(Rat::one(), |acc, &f| acc / rat_int(f))
}

/// A straight chord drawn as two collinear segments joined at its midpoint.
fn two_piece(a: &Point, z: &Point) -> Vec<Point> {
    vec![a.clone(), midpoint(a, z), z.clone()]
}

/// The planar subgraph common to every hybrid drawing, before connections
/// are chosen: switches on the x-axis, selectors on the y-axis, full fans
/// from the two outermost switches, and edges from every interior switch to
/// the two innermost selectors.
struct Scaffold {
    b: DrawingBuilder,
    /// Switch x-stations in index order; input i uses `ms[i - 1]`.
    ms: Vec<i32>,
    /// Selector y-stations in index order.
    ns: Vec<i32>,
    /// Planar edge drawn for each directly connected (x, y) station pair.
    edge_of: BTreeMap<(i32, i32), usize>,
}

fn subgraph_scaffold(m: u32, n: u32, style: Style) -> Result<Scaffold, LayoutError> {
    let spec = make_spec(m, n, Coupling::Surface, style)?;
    if m < 2 || n < 2 {
        return Err(LayoutError::UnsupportedSize { what: "at least 2 ports per side", m, n });
    }
    let ms = axis_indices(m);
    let ns = axis_indices(n);
    let mut b = DrawingBuilder::new(spec);
    for &x in &ms {
        b.vertex(VertexId::m(x), Point::ints(x.into(), 0));
    }
    for &y in &ns {
        b.vertex(VertexId::n(y), Point::ints(0, y.into()));
    }
    let hub_l = ms[0];
    let hub_r = *ms.last().expect("at least two switches");
    let mut edge_of = BTreeMap::new();
    for &y in &ns {
        edge_of.insert((hub_l, y), b.straight_edge(VertexId::m(hub_l), VertexId::n(y)));
        edge_of.insert((hub_r, y), b.straight_edge(VertexId::m(hub_r), VertexId::n(y)));
    }
    for &x in &ms[1..ms.len() - 1] {
        edge_of.insert((x, 1), b.straight_edge(VertexId::m(x), VertexId::n(1)));
        edge_of.insert((x, -1), b.straight_edge(VertexId::m(x), VertexId::n(-1)));
    }
    Ok(Scaffold { b, ms, ns, edge_of })
}

/// The naive drawing: switches in one column, selectors in a parallel
/// column, all m*n connections as straight segments. Crossing count
/// equals [`eta_basic`].
pub fn build_basic_surface_drawing(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    let spec = make_spec(m, n, Coupling::Surface, Style::LumpedElement)?;
    let mut b = DrawingBuilder::new(spec);
    for i in 1..=m as i32 {
        b.vertex(VertexId::m(i), Point::ints(0, i.into()));
    }
    for j in 1..=n as i32 {
        b.vertex(VertexId::n(j), Point::ints(1, j.into()));
    }
    for i in 1..=m {
        for j in 1..=n {
            let e = b.straight_edge(VertexId::m(i as i32), VertexId::n(j as i32));
            b.connect(i, j, vec![e]);
        }
    }
    crossing::finalize(b)
}

/// The two-axis drawing: switches spread along the x-axis, selectors along
/// the y-axis, both split as evenly as possible around the origin, all
/// connections straight. Attains [`eta_conjectured`] crossings, with at most
/// [`xi_surface`] of them on any one path.
pub fn build_zarankiewicz_drawing(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    let spec = make_spec(m, n, Coupling::Surface, Style::LumpedElement)?;
    let ms = axis_indices(m);
    let ns = axis_indices(n);
    let mut b = DrawingBuilder::new(spec);
    for &x in &ms {
        b.vertex(VertexId::m(x), Point::ints(x.into(), 0));
    }
    for &y in &ns {
        b.vertex(VertexId::n(y), Point::ints(0, y.into()));
    }
    for (i, &x) in ms.iter().enumerate() {
        for (j, &y) in ns.iter().enumerate() {
            let e = b.straight_edge(VertexId::m(x), VertexId::n(y));
            b.connect(i as u32 + 1, j as u32 + 1, vec![e]);
        }
    }
    crossing::finalize(b)
}

/// The spanning maximum planar subgraph of K_{m,n}: 2m + 2n - 4 edges, no
/// crossings, every inner face a quadrilateral. Pairs without a direct edge
/// are routed as three-edge detours over the hub fans, so the connection
/// map stays total. Needs at least two ports per side.
pub fn build_spanning_max_planar_subgraph(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    let Scaffold { mut b, ms, ns, edge_of } = subgraph_scaffold(m, n, Style::LumpedElement)?;
    let hub_l = ms[0];
    for (i, &x) in ms.iter().enumerate() {
        for (j, &y) in ns.iter().enumerate() {
            let seq = match edge_of.get(&(x, y)) {
                Some(&e) => vec![e],
                None => vec![edge_of[&(x, 1)], edge_of[&(hub_l, 1)], edge_of[&(hub_l, y)]],
            };
            b.connect(i as u32 + 1, j as u32 + 1, seq);
        }
    }
    crossing::finalize(b)
}

/// Lumped-element hybrid drawing: the spanning planar subgraph plus one
/// overpass per missing connection, (m-2)(n-2) in all. Overpass projections
/// run through corridors graded so that the drawing is born conflict-free:
/// zero waveguide crossings and zero projection crossings. Needs at least
/// two ports per side.
pub fn place_wop_le_surface(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    let Scaffold { mut b, ms, ns, mut edge_of } = subgraph_scaffold(m, n, Style::LumpedElement)?;
    let half_m = i64::from(m / 2);
    let half_n = i64::from(n.div_ceil(2));
    let inner: Vec<i32> = ms[1..ms.len() - 1].to_vec();
    let served: Vec<i32> = ns.iter().copied().filter(|y| y.abs() != 1).collect();
    for sx in [1i64, -1] {
        let qa: Vec<i32> = inner.iter().copied().filter(|&x| i64::from(x) * sx > 0).collect();
        for sy in [1i64, -1] {
            let qb: Vec<i32> =
                served.iter().copied().filter(|&y| i64::from(y) * sy > 0).collect();
            let kq = (qa.len() * qb.len()) as i64;
            if kq == 0 {
                continue;
            }
            let eps_c = unit_fraction(&[8, kq + 1, half_n + 1]);
            let eps_t = unit_fraction(&[8, kq + 1, half_m + 1, half_n + 1]);
            let rsx = rat_int(sx);
            let rsy = rat_int(sy);
            for (ai, &a) in qa.iter().enumerate() {
                for (bi, &y) in qb.iter().enumerate() {
                    let i = (ai * qb.len() + bi) as i64;
                    let c = &eps_c * rat_int(i + 1);
                    let t = &eps_t * rat_int(i + 1);
                    let iota = &t * (Rat::one() + &c);
                    let lift_m =
                        Point::new(rat_int(a.into()) + &rsx * iota, &rsy * t.clone());
                    let knee = Point::new(&rsx * c.clone(), &rsy * t);
                    let lift_n = Point::new(
                        &rsx * c.clone(),
                        rat_int(y.into()) + &rsy * &c * &c,
                    );
                    let e = b.overpass_edge(
                        VertexId::m(a),
                        VertexId::n(y),
                        vec![Point::ints(a.into(), 0), lift_m.clone()],
                        vec![lift_m, knee, lift_n.clone()],
                        vec![Point::ints(0, y.into()), lift_n],
                    );
                    edge_of.insert((a, y), e);
                }
            }
        }
    }
    for (i, &x) in ms.iter().enumerate() {
        for (j, &y) in ns.iter().enumerate() {
            b.connect(i as u32 + 1, j as u32 + 1, vec![edge_of[&(x, y)]]);
        }
    }
    crossing::finalize(b)
}

/// Variant of [`place_wop_le_surface`] whose overpass projections follow the
/// straight chord of the missing connection. Chords of one quadrant may
/// cross each other, so the result generally needs
/// [`crossing::resolve_projection_crossing`]; it is the natural exercise
/// input for that pass. Waveguide crossings are still zero.
pub fn place_wop_le_surface_chord_stubs(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    let Scaffold { mut b, ms, ns, mut edge_of } = subgraph_scaffold(m, n, Style::LumpedElement)?;
    let half_m = i64::from(m / 2);
    let half_n = i64::from(n.div_ceil(2));
    let s = rat(1, 8 * (half_m + 1) * (half_n + 1));
    for &a in &ms[1..ms.len() - 1] {
        for y in ns.iter().copied().filter(|y| y.abs() != 1) {
            let ra = rat_int(a.into());
            let ry = rat_int(y.into());
            let near_m = Point::new(&ra * (Rat::one() - &s), &ry * &s);
            let near_n = Point::new(&ra * &s, &ry * (Rat::one() - &s));
            let e = b.overpass_edge(
                VertexId::m(a),
                VertexId::n(y),
                vec![Point::ints(a.into(), 0), near_m.clone()],
                vec![near_m, near_n.clone()],
                vec![Point::ints(0, y.into()), near_n],
            );
            edge_of.insert((a, y), e);
        }
    }
    for (i, &x) in ms.iter().enumerate() {
        for (j, &y) in ns.iter().enumerate() {
            b.connect(i as u32 + 1, j as u32 + 1, vec![edge_of[&(x, y)]]);
        }
    }
    crossing::finalize(b)
}

/// Binary-tree hybrid drawing: interior switches are joined in adjacent
/// pairs by split selector vertices, so most overpasses serve two
/// connections and only ceil((m-2)(n-2) / 2) are needed. With two odd sides
/// one switch is held back from pairing and served through split switch
/// vertices instead; a final leftover connection gets an overpass of its
/// own. The drawing is born with zero waveguide and zero projection
/// crossings. Needs at least two ports per side.
pub fn place_wop_bt_surface(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    make_spec(m, n, Coupling::Surface, Style::BinaryTree)?;
    if m == 2 || n == 2 {
        let Scaffold { mut b, ms, ns, edge_of } = subgraph_scaffold(m, n, Style::BinaryTree)?;
        for (i, &x) in ms.iter().enumerate() {
            for (j, &y) in ns.iter().enumerate() {
                b.connect(i as u32 + 1, j as u32 + 1, vec![edge_of[&(x, y)]]);
            }
        }
        return crossing::finalize(b);
    }
    if !m.is_multiple_of(2) && n.is_multiple_of(2) {
        return Ok(place_wop_bt_surface(n, m)?.transposed());
    }
    build_bt_surface(m, n)
}

/// One split selector awaiting its overpass: tent edges are already drawn,
/// the riser station may still be nudged for distinctness.
struct SplitSelector {
    id: VertexId,
    b_idx: i32,
    side: i64,
    /// Stub prefix: the apex, plus a short climb along the pair midline for
    /// off-axis pairs.
    stub_head: Vec<Point>,
    /// Signed x-station of the riser; final for centered pairs.
    g: Rat,
    fixed: bool,
    tip_y: Rat,
    tent_l: usize,
    tent_r: usize,
    xl: i32,
    xr: i32,
}

fn build_bt_surface(m: u32, n: u32) -> Result<Drawing, LayoutError> {
    let Scaffold { mut b, ms, ns, edge_of } = subgraph_scaffold(m, n, Style::BinaryTree)?;
    let both_odd = m % 2 == 1 && n % 2 == 1;
    let top_m = *ms.last().expect("at least two switches");
    let reserve = top_m - 1;
    let top_n = i64::from(*ns.last().expect("at least two selectors"));
    let bot_n = i64::from(n / 2);

    let w = i64::from(n) - 2;
    let tau = rat(1, 8 * (w + 1));
    let gamma = unit_fraction(&[256, w + 1, top_n + 1]);

    // Step A: adjacent interior switches in consecutive pairs; with two odd
    // sides the switch just left of the outermost one is held back.
    let interior: Vec<i32> = ms[1..ms.len() - 1]
        .iter()
        .copied()
        .filter(|&x| !(both_odd && x == reserve))
        .collect();
    let pairs: Vec<(i32, i32)> = interior.chunks(2).map(|c| (c[0], c[1])).collect();
    let serve: Vec<i32> = ((2..=top_n as i32).rev())
        .chain((-(bot_n as i32)..=-2).rev())
        .collect();

    let mut splits: Vec<SplitSelector> = Vec::new();
    for (k, &(xl, xr)) in pairs.iter().enumerate() {
        let two_mu = i64::from(xl) + i64::from(xr);
        let mu = rat(two_mu, 2);
        let side: i64 = if two_mu >= 0 { 1 } else { -1 };
        for (r, &b_idx) in serve.iter().enumerate() {
            let h = rat(w - r as i64, w + 1);
            let apex = Point::new(&mu * (Rat::one() - &h), h.clone());
            let id = VertexId::split(Party::N, b_idx, k as u32 + 1);
            b.vertex(id, apex.clone());
            let tent_l =
                b.planar_edge(id, VertexId::m(xl), two_piece(&apex, &Point::ints(xl.into(), 0)));
            let tent_r =
                b.planar_edge(id, VertexId::m(xr), two_piece(&apex, &Point::ints(xr.into(), 0)));
            let tip_y = &h + &tau;
            let (stub_head, g, fixed) = if two_mu == 0 {
                // Centered pair: slant straight to a station beside the axis.
                let station = &gamma * rat_int(2) + &gamma * rat(r as i64 + 1, w + 1);
                (vec![apex], station, true)
            } else {
                let rise = Point::new(&mu * (Rat::one() - &tip_y), tip_y.clone());
                let station = rise.x.clone();
                (vec![apex, rise], station, false)
            };
            splits.push(SplitSelector {
                id,
                b_idx,
                side,
                stub_head,
                g,
                fixed,
                tip_y,
                tent_l,
                tent_r,
                xl,
                xr,
            });
        }
    }

    // Nudge off-midline riser stations apart, strictly outward so they stay
    // clear of the enclosing tent.
    let cap = rat(7, 32 * (w + 1));
    for side in [1i64, -1] {
        let idxs: Vec<usize> =
            (0..splits.len()).filter(|&i| splits[i].side == side && !splits[i].fixed).collect();
        let mags: Vec<Rat> = idxs.iter().map(|&i| splits[i].g.abs()).collect();
        let spread = spread_up(&mags, &cap);
        for (pos, &i) in idxs.iter().enumerate() {
            let out = spread[pos].clone();
            splits[i].g = if side > 0 { out } else { -out };
        }
    }

    // Step B: route one overpass per split selector. Per side, ceilings and
    // drop columns are ranked so that no two projections meet. Centered
    // pairs need care because their stubs start on the selector axis: a drop
    // descending below the axis would cut its own stub, so those drops move
    // to a band beyond the riser, while drops climbing to a positive
    // selector keep a near column short of the riser (their reach stub must
    // not span the riser station either). Centered ceilings run lowest, and
    // positive-serving centered risers sit left of negative-serving ones by
    // construction, which keeps the two centered lattices x-disjoint.
    let mut extra: BTreeMap<(i32, i32), Vec<usize>> = BTreeMap::new();
    for side in [1i64, -1] {
        let mut centered_neg: Vec<usize> = (0..splits.len())
            .filter(|&i| splits[i].side == side && splits[i].fixed && splits[i].b_idx < 0)
            .collect();
        centered_neg.sort_by(|&i, &j| splits[j].g.cmp(&splits[i].g).then(i.cmp(&j)));
        let mut centered_pos: Vec<usize> = (0..splits.len())
            .filter(|&i| splits[i].side == side && splits[i].fixed && splits[i].b_idx > 0)
            .collect();
        centered_pos.sort_by(|&i, &j| splits[i].g.cmp(&splits[j].g).then(i.cmp(&j)));
        let mut slabs: Vec<usize> = (0..splits.len())
            .filter(|&i| splits[i].side == side && !splits[i].fixed)
            .collect();
        slabs.sort_by(|&i, &j| splits[i].g.cmp(&splits[j].g).then(i.cmp(&j)));
        debug_assert!(side > 0 || (centered_neg.is_empty() && centered_pos.is_empty()));

        let ncnt = centered_neg.len() as i64;
        let pcnt = centered_pos.len() as i64;
        let scnt = slabs.len() as i64;
        let cnt = ncnt + pcnt + scnt;
        let half_gamma = &gamma / rat_int(2);
        let mut plan: Vec<(usize, Rat, Rat)> = Vec::new();
        if side > 0 {
            for (q, &i) in centered_neg.iter().enumerate() {
                let q = q as i64;
                let delta = rat(q + 1, cnt + 1);
                let c_mag = &gamma * rat_int(4) + &gamma * rat(q + 1, ncnt + 1);
                plan.push((i, delta, c_mag));
            }
            for (q, &i) in centered_pos.iter().enumerate() {
                let q = q as i64;
                let delta = rat(ncnt + q + 1, cnt + 1);
                let c_mag = &half_gamma + &half_gamma * rat(pcnt - q, pcnt + 1);
                plan.push((i, delta, c_mag));
            }
            for (q, &i) in slabs.iter().enumerate() {
                let q = q as i64;
                let delta = rat(ncnt + pcnt + q + 1, cnt + 1);
                let c_mag = &half_gamma * rat(scnt - q, scnt + 1);
                plan.push((i, delta, c_mag));
            }
        } else {
            for (q, &i) in slabs.iter().enumerate() {
                let q = q as i64;
                let delta = rat(cnt - q, cnt + 1);
                let c_mag = &half_gamma * rat(q + 1, cnt + 1);
                plan.push((i, delta, c_mag));
            }
        }
        for (i, delta, c_mag) in plan {
            let sp = &splits[i];
            let (id, b_idx, xl, xr, tent_l, tent_r) =
                (sp.id, sp.b_idx, sp.xl, sp.xr, sp.tent_l, sp.tent_r);
            let tip = Point::new(sp.g.clone(), sp.tip_y.clone());
            let mut stub = sp.stub_head.clone();
            stub.push(tip.clone());
            let ceiling = rat_int(top_n + 1) + delta;
            let cx = rat_int(side) * c_mag;
            let b_sign = rat_int(if b_idx > 0 { 1 } else { -1 });
            let drop = Point::new(cx.clone(), rat_int(b_idx.into()) + b_sign * &cx * &cx);
            let route = vec![
                tip,
                Point::new(sp.g.clone(), ceiling.clone()),
                Point::new(cx, ceiling),
                drop.clone(),
            ];
            let op = b.overpass_edge(
                id,
                VertexId::n(b_idx),
                stub,
                route,
                vec![Point::ints(0, b_idx.into()), drop],
            );
            extra.insert((xl, b_idx), vec![tent_l, op]);
            extra.insert((xr, b_idx), vec![tent_r, op]);
        }
    }

    // Step C (two odd sides): serve the held-back switch through split
    // switch vertices, pairing selectors around it; one selector is always
    // left over and gets a direct overpass.
    if both_odd {
        let mut pairs3: Vec<(i32, i32)> = Vec::new();
        let leftover: i32 = if (top_n - 1) % 2 == 0 {
            let mut v = top_n as i32;
            while v >= 3 {
                pairs3.push((v, v - 1));
                v -= 2;
            }
            let mut u = -2i32;
            while i64::from(u) > -bot_n {
                pairs3.push((u, u - 1));
                u -= 2;
            }
            -(bot_n as i32)
        } else {
            let mut v = top_n as i32 - 1;
            while v >= 3 {
                pairs3.push((v, v - 1));
                v -= 2;
            }
            let mut u = -2i32;
            while i64::from(u) > -bot_n {
                pairs3.push((u, u - 1));
                u -= 2;
            }
            top_n as i32
        };
        let p3 = pairs3.len() as i64;
        let aux_station = |k: i64| &gamma * rat_int(8) + &gamma * rat(4 * (k + 1), p3 + 1);
        let riser_station = |k: i64| &gamma * rat_int(12) + &gamma * rat(4 * (k + 1), p3 + 2);
        let sign_of = |v: i32| if v > 0 { 1i64 } else { -1 };

        let mut family_size: BTreeMap<i64, i64> = BTreeMap::new();
        for &(first, _) in &pairs3 {
            *family_size.entry(sign_of(first)).or_insert(0) += 1;
        }
        *family_size.entry(sign_of(leftover)).or_insert(0) += 1;
        let mut family_rank: BTreeMap<i64, i64> = BTreeMap::new();
        let mut low_pass = |sgn: i64| -> Rat {
            let rank = family_rank.entry(sgn).or_insert(0);
            let t3 = rat(*rank + 1, 8 * (w + 1) * (family_size[&sgn] + 1));
            *rank += 1;
            t3
        };

        for (k, &(first, second)) in pairs3.iter().enumerate() {
            let sgn = sign_of(first);
            let lo = first.min(second);
            let y_aux = rat(2 * i64::from(lo) + 1, 2);
            let apos = Point::new(aux_station(k as i64), y_aux.clone());
            let id = VertexId::split(Party::M, reserve, k as u32 + 1);
            b.vertex(id, apos.clone());
            let pl_first =
                b.planar_edge(id, VertexId::n(first), two_piece(&apos, &Point::ints(0, first.into())));
            let pl_second = b.planar_edge(
                id,
                VertexId::n(second),
                two_piece(&apos, &Point::ints(0, second.into())),
            );
            let xs = riser_station(k as i64);
            let t3 = low_pass(sgn);
            let low_y = rat_int(sgn) * &t3;
            let iota = &t3 * (Rat::one() + &xs);
            let mtip = Point::new(rat_int(reserve.into()) + iota, low_y.clone());
            let route = vec![
                Point::new(xs.clone(), y_aux.clone()),
                Point::new(xs.clone(), low_y),
                mtip.clone(),
            ];
            let op = b.overpass_edge(
                id,
                VertexId::m(reserve),
                vec![apos, Point::new(xs, y_aux)],
                route,
                vec![Point::ints(reserve.into(), 0), mtip],
            );
            extra.insert((reserve, first), vec![op, pl_first]);
            extra.insert((reserve, second), vec![op, pl_second]);
        }

        let sgn = sign_of(leftover);
        let t3 = low_pass(sgn);
        let xs = riser_station(p3);
        let low_y = rat_int(sgn) * &t3;
        let iota = &t3 * (Rat::one() + &xs);
        let mtip = Point::new(rat_int(reserve.into()) + iota, low_y.clone());
        let ntip =
            Point::new(xs.clone(), rat_int(leftover.into()) + rat_int(sgn) * &xs * &xs);
        let route = vec![mtip.clone(), Point::new(xs, low_y), ntip.clone()];
        let op = b.overpass_edge(
            VertexId::m(reserve),
            VertexId::n(leftover),
            vec![Point::ints(reserve.into(), 0), mtip],
            route,
            vec![Point::ints(0, leftover.into()), ntip],
        );
        extra.insert((reserve, leftover), vec![op]);
    }

    for (i, &x) in ms.iter().enumerate() {
        for (j, &y) in ns.iter().enumerate() {
            let seq = edge_of
                .get(&(x, y))
                .map(|&e| vec![e])
                .or_else(|| extra.get(&(x, y)).cloned())
                .expect("every pair is drawn directly or through an overpass");
            b.connect(i as u32 + 1, j as u32 + 1, seq);
        }
    }
    crossing::finalize(b)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::crossing::{
        count_crossings, crossing_events, local_crossing_of_drawing, max_crossings_along_path,
        max_overpasses_along_path, resolve_projection_crossing, CrossKind,
    };
    use crate::model::EdgeKind;
    use crate::planarity::is_planar_abstract;

    fn overpass_count(d: &Drawing) -> usize {
        d.edges.iter().filter(|e| e.kind == EdgeKind::Overpass).count()
    }

    fn paths_using_overpasses(d: &Drawing) -> BTreeSet<(u32, u32)> {
        d.connection_map
            .iter()
            .filter(|(_, t)| t.overpass_count > 0)
            .map(|(&k, _)| k)
            .collect()
    }

    fn overpass_service_counts(d: &Drawing) -> Vec<u32> {
        let mut used: BTreeMap<usize, u32> = BTreeMap::new();
        for trace in d.connection_map.values() {
            for &e in &trace.edge_sequence {
                if d.edges[e].kind == EdgeKind::Overpass {
                    *used.entry(e).or_default() += 1;
                }
            }
        }
        let mut counts: Vec<u32> = used.into_values().collect();
        counts.sort_unstable();
        counts
    }

    fn abstract_graph(d: &Drawing) -> (usize, Vec<(usize, usize)>) {
        let ids: Vec<VertexId> = d.positions.keys().copied().collect();
        let at = |v: VertexId| ids.iter().position(|&u| u == v).expect("endpoint placed");
        let edges = d.edges.iter().map(|e| (at(e.from), at(e.to))).collect();
        (ids.len(), edges)
    }

    #[test]
    fn formulas_match_their_closed_forms() {
        assert_eq!(eta_basic(4, 4), 36);
        assert_eq!(eta_basic(3, 5), 30);
        assert_eq!(eta_basic(1, 7), 0);
        assert_eq!(eta_conjectured(16, 16), 3136);
        assert_eq!(eta_conjectured(5, 5), 16);
        assert_eq!(eta_conjectured(2, 9), 0);
        assert_eq!(xi_surface(32, 32), 225);
        assert_eq!(xi_surface(2, 2), 0);
        assert_eq!(xi_surface(5, 5), 4);
        assert_eq!(mu_surface_le(16, 16), 196);
        assert_eq!(mu_surface_le(2, 9), 0);
        assert_eq!(mu_surface_le(3, 4), 2);
        assert_eq!(mu_surface_bt(64, 64), Ok(1922));
        assert_eq!(mu_surface_bt(5, 5), Ok(5));
        assert_eq!(mu_surface_bt(4, 4), Ok(2));
        assert_eq!(mu_surface_bt(1, 5), Err(LayoutError::BinaryTreeArity { m: 1, n: 5 }));
    }

    #[test]
    fn formula_set_is_internally_consistent() {
        for m in 1..=9 {
            for n in 1..=9 {
                let f = surface_formulas(m, n);
                assert!(f.eta_conjectured <= f.eta_basic, "({m},{n})");
                if let Some(bt) = f.mu_bt {
                    assert_eq!(bt, f.mu_le.div_ceil(2), "({m},{n})");
                }
                assert_eq!(f.mu_bt.is_none(), m < 2 || n < 2);
            }
        }
    }

    #[test]
    fn two_column_drawing_pays_the_full_crossing_bill() {
        for (m, n) in [(4, 4), (1, 3), (3, 3)] {
            let d = build_basic_surface_drawing(m, n).unwrap();
            let report = count_crossings(&d).unwrap();
            assert_eq!(report.total_planar_crossings, eta_basic(m, n), "({m},{n})");
            assert_eq!(d.connection_map.len() as u64, u64::from(m) * u64::from(n));
        }
    }

    #[test]
    fn two_axis_drawing_attains_the_zarankiewicz_count() {
        for (m, n) in [(5, 5), (7, 6), (2, 2), (4, 4)] {
            let d = build_zarankiewicz_drawing(m, n).unwrap();
            let report = count_crossings(&d).unwrap();
            assert_eq!(report.total_planar_crossings, eta_conjectured(m, n), "({m},{n})");
        }
    }

    #[test]
    fn two_axis_stations_straddle_the_origin() {
        let d = build_zarankiewicz_drawing(5, 5).unwrap();
        let xs: Vec<i32> = (-2..=3).filter(|&x| x != 0).collect();
        for x in xs {
            let p = d.position(VertexId::m(x)).expect("station placed");
            assert_eq!((p.x.clone(), p.y.clone()), (rat_int(x.into()), rat_int(0)));
        }
        assert_eq!(d.input_vertex(1), Some(VertexId::m(-2)));
        assert_eq!(d.output_vertex(5), Some(VertexId::n(3)));
    }

    #[test]
    fn two_axis_local_crossing_matches_the_per_path_ceiling() {
        let d = build_zarankiewicz_drawing(5, 5).unwrap();
        assert_eq!(local_crossing_of_drawing(&d).unwrap(), 4);
        assert_eq!(max_crossings_along_path(&d), 4);
    }

    #[test]
    fn spanning_subgraph_is_planar_with_the_extremal_edge_count() {
        for (m, n, want) in [(5, 5, 16), (2, 2, 4), (6, 4, 16)] {
            let d = build_spanning_max_planar_subgraph(m, n).unwrap();
            assert_eq!(d.edges.len(), want, "({m},{n})");
            assert_eq!(count_crossings(&d).unwrap().total_planar_crossings, 0);
            let (v, edges) = abstract_graph(&d);
            assert!(is_planar_abstract(v, &edges));
            assert_eq!(d.connection_map.len() as u64, u64::from(m) * u64::from(n));
        }
    }

    #[test]
    fn spanning_subgraph_rejects_single_port_sides() {
        assert_eq!(
            build_spanning_max_planar_subgraph(1, 6),
            Err(LayoutError::UnsupportedSize { what: "at least 2 ports per side", m: 1, n: 6 })
        );
    }

    #[test]
    fn spanning_subgraph_detours_reach_every_pair_without_crossings() {
        let d = build_spanning_max_planar_subgraph(5, 5).unwrap();
        // M(1) is input 3; N(2) is output 4; no direct edge exists.
        let trace = &d.connection_map[&(3, 4)];
        assert_eq!(trace.edge_sequence.len(), 3);
        assert_eq!(trace.planar_crossings, 0);
        assert_eq!(trace.overpass_count, 0);
    }

    #[test]
    fn adding_any_chord_to_the_spanning_subgraph_breaks_planarity() {
        let d = build_spanning_max_planar_subgraph(4, 4).unwrap();
        let (v, mut edges) = abstract_graph(&d);
        let ids: Vec<VertexId> = d.positions.keys().copied().collect();
        let at = |v: VertexId| ids.iter().position(|&u| u == v).unwrap();
        edges.push((at(VertexId::m(-1)), at(VertexId::n(2))));
        assert!(!is_planar_abstract(v, &edges));
    }

    #[test]
    fn corridor_placement_is_born_conflict_free() {
        for (m, n) in [(5, 5), (4, 4), (6, 7), (2, 7)] {
            let d = place_wop_le_surface(m, n).unwrap();
            let report = count_crossings(&d).unwrap();
            assert_eq!(report.total_planar_crossings, 0, "({m},{n})");
            assert_eq!(report.overpass_projection_crossings, 0, "({m},{n})");
            assert_eq!(overpass_count(&d) as u64, mu_surface_le(m, n), "({m},{n})");
            assert_eq!(d.connection_map.len() as u64, u64::from(m) * u64::from(n));
            assert!(max_overpasses_along_path(&d) <= 1);
        }
    }

    #[test]
    fn corridor_placement_spends_overpasses_exactly_on_missing_chords() {
        let d = place_wop_le_surface(4, 4).unwrap();
        assert_eq!(overpass_count(&d), 4);
        assert_eq!(
            paths_using_overpasses(&d),
            BTreeSet::from([(2, 1), (2, 4), (3, 1), (3, 4)])
        );
    }

    #[test]
    fn chord_stub_variant_needs_one_resolution_for_five_by_five() {
        let d = place_wop_le_surface_chord_stubs(5, 5).unwrap();
        let report = count_crossings(&d).unwrap();
        assert_eq!(report.total_planar_crossings, 0);
        assert_eq!(report.overpass_projection_crossings, 1);
        let conflicts: Vec<_> = crossing_events(&d)
            .unwrap()
            .into_iter()
            .filter(|ev| ev.kind == CrossKind::Projection)
            .collect();
        assert_eq!(conflicts.len(), 1);
        let (a, b) = conflicts[0].edges;
        let ends = |e: usize| (d.edges[e].from, d.edges[e].to);
        let got = BTreeSet::from([ends(a), ends(b)]);
        let want = BTreeSet::from([
            (VertexId::m(1), VertexId::n(3)),
            (VertexId::m(2), VertexId::n(2)),
        ]);
        assert_eq!(got, want);

        let fixed = resolve_projection_crossing(&d).unwrap();
        let after = count_crossings(&fixed).unwrap();
        assert_eq!(after.total_planar_crossings, 0);
        assert_eq!(after.overpass_projection_crossings, 0);
    }

    #[test]
    fn chord_stub_variant_resolves_one_conflict_per_quadrant() {
        let d = place_wop_le_surface_chord_stubs(6, 6).unwrap();
        assert_eq!(count_crossings(&d).unwrap().overpass_projection_crossings, 4);
        let fixed = resolve_projection_crossing(&d).unwrap();
        let after = count_crossings(&fixed).unwrap();
        assert_eq!(after.total_planar_crossings, 0);
        assert_eq!(after.overpass_projection_crossings, 0);
    }

    #[test]
    fn paired_placement_matches_the_worked_five_by_five() {
        let d = place_wop_bt_surface(5, 5).unwrap();
        let report = count_crossings(&d).unwrap();
        assert_eq!(report.total_planar_crossings, 0);
        assert_eq!(report.overpass_projection_crossings, 0);
        assert_eq!(overpass_count(&d), 5);

        let split_ids: BTreeSet<VertexId> =
            d.positions.keys().copied().filter(|v| v.split_ordinal > 0).collect();
        assert_eq!(
            split_ids,
            BTreeSet::from([
                VertexId::split(Party::M, 2, 1),
                VertexId::split(Party::N, -2, 1),
                VertexId::split(Party::N, 2, 1),
                VertexId::split(Party::N, 3, 1),
            ])
        );
        // The split selectors sit inside the central diamond face.
        for b_idx in [3, 2, -2] {
            let p = d.position(VertexId::split(Party::N, b_idx, 1)).unwrap();
            assert!(p.x.abs() + p.y.abs() < rat_int(1), "split selector for N({b_idx})");
        }
    }

    #[test]
    fn paired_placement_shares_overpasses_two_to_one() {
        let d = place_wop_bt_surface(5, 5).unwrap();
        assert_eq!(overpass_service_counts(&d), vec![1, 2, 2, 2, 2]);
        let even = place_wop_bt_surface(4, 4).unwrap();
        assert_eq!(overpass_service_counts(&even), vec![2, 2]);
    }

    #[test]
    fn paired_placement_matches_the_worked_four_by_four() {
        let d = place_wop_bt_surface(4, 4).unwrap();
        let report = count_crossings(&d).unwrap();
        assert_eq!(report.total_planar_crossings, 0);
        assert_eq!(report.overpass_projection_crossings, 0);
        assert_eq!(overpass_count(&d), 2);
        assert_eq!(
            paths_using_overpasses(&d),
            BTreeSet::from([(2, 1), (2, 4), (3, 1), (3, 4)])
        );
    }

    #[test]
    fn paired_placement_skips_pairing_for_three_switches() {
        let d = place_wop_bt_surface(3, 3).unwrap();
        let report = count_crossings(&d).unwrap();
        assert_eq!(report.total_planar_crossings, 0);
        assert_eq!(report.overpass_projection_crossings, 0);
        assert_eq!(overpass_count(&d), 1);
        // No split vertices at all: the leftover overpass runs vertex to vertex.
        assert_eq!(d.positions.len(), 6);
    }

    #[test]
    fn paired_placement_transposes_odd_by_even_instances() {
        let d = place_wop_bt_surface(3, 4).unwrap();
        assert_eq!(d.spec.m, 3);
        assert_eq!(d.spec.n, 4);
        let report = count_crossings(&d).unwrap();
        assert_eq!(report.total_planar_crossings, 0);
        assert_eq!(report.overpass_projection_crossings, 0);
        assert_eq!(overpass_count(&d) as u64, mu_surface_bt(3, 4).unwrap());
        assert_eq!(d.connection_map.len(), 12);
    }

    #[test]
    fn paired_placement_needs_no_overpasses_for_two_port_sides() {
        let d = place_wop_bt_surface(2, 9).unwrap();
        assert_eq!(overpass_count(&d), 0);
        assert_eq!(count_crossings(&d).unwrap().total_planar_crossings, 0);
        assert_eq!(d.connection_map.len(), 18);
    }

    #[test]
    fn paired_placement_rejects_single_port_sides() {
        assert_eq!(
            place_wop_bt_surface(5, 1),
            Err(LayoutError::BinaryTreeArity { m: 5, n: 1 })
        );
    }

    #[test]
    fn hybrid_drawings_cover_the_mid_sweep_sizes() {
        for (m, n) in [(6, 5), (7, 7), (8, 6), (9, 5), (5, 8)] {
            let le = place_wop_le_surface(m, n).unwrap();
            let le_report = count_crossings(&le).unwrap();
            assert_eq!(le_report.total_planar_crossings, 0, "le ({m},{n})");
            assert_eq!(le_report.overpass_projection_crossings, 0, "le ({m},{n})");
            assert_eq!(overpass_count(&le) as u64, mu_surface_le(m, n), "le ({m},{n})");

            let bt = place_wop_bt_surface(m, n).unwrap();
            let bt_report = count_crossings(&bt).unwrap();
            assert_eq!(bt_report.total_planar_crossings, 0, "bt ({m},{n})");
            assert_eq!(bt_report.overpass_projection_crossings, 0, "bt ({m},{n})");
            assert_eq!(
                overpass_count(&bt) as u64,
                mu_surface_bt(m, n).unwrap(),
                "bt ({m},{n})"
            );
            assert!(max_overpasses_along_path(&bt) <= 1);
        }
    }
}
