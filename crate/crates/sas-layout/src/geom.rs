//! Exact planar geometry: orientation predicates, segment intersection, and
//! convex containment. Every decision is made on rationals; no floats.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::model::{Point, Rat};

/// Sign of the z-component of (b - a) x (c - a): +1 counter-clockwise,
/// -1 clockwise, 0 collinear.
pub fn orient(a: &Point, b: &Point, c: &Point) -> i8 {
    let det = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    rat_sign(&det)
}

fn rat_sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn cross(ax: &Rat, ay: &Rat, bx: &Rat, by: &Rat) -> Rat {
    ax * by - ay * bx
}

/// Exact midpoint of two points.
pub fn midpoint(a: &Point, b: &Point) -> Point {
    let half = Rat::new(1.into(), 2.into());
    Point::new((&a.x + &b.x) * &half, (&a.y + &b.y) * &half)
}

/// Whether `p` lies on the closed segment [a, b].
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if orient(a, b, p) != 0 {
        return false;
    }
    within_closed(&p.x, &a.x, &b.x) && within_closed(&p.y, &a.y, &b.y)
}

fn within_closed(v: &Rat, lo: &Rat, hi: &Rat) -> bool {
    if lo <= hi {
        lo <= v && v <= hi
    } else {
        hi <= v && v <= lo
    }
}

/// How two closed segments meet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SegSeg {
    Disjoint,
    /// Exactly one common point, interior to both segments.
    ProperCross(Point),
    /// Exactly one common point, an endpoint of at least one segment.
    Touch(Point),
    /// A common sub-segment of positive length.
    CollinearOverlap,
}

/// Classifies the intersection of segments [a1, a2] and [b1, b2].
pub fn seg_seg(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> SegSeg {
    let d1x = &a2.x - &a1.x;
    let d1y = &a2.y - &a1.y;
    let d2x = &b2.x - &b1.x;
    let d2y = &b2.y - &b1.y;
    let denom = cross(&d1x, &d1y, &d2x, &d2y);

    if denom.is_zero() {
        if orient(a1, a2, b1) != 0 {
            return SegSeg::Disjoint;
        }
        return collinear_relation(a1, a2, b1, b2);
    }

    let wx = &b1.x - &a1.x;
    let wy = &b1.y - &a1.y;
    let t = cross(&wx, &wy, &d2x, &d2y) / &denom;
    let u = cross(&wx, &wy, &d1x, &d1y) / &denom;
    let zero = Rat::zero();
    let one = Rat::one();
    if t < zero || t > one || u < zero || u > one {
        return SegSeg::Disjoint;
    }
    let p = Point::new(&a1.x + &d1x * &t, &a1.y + &d1y * &t);
    if t > zero && t < one && u > zero && u < one {
        SegSeg::ProperCross(p)
    } else {
        SegSeg::Touch(p)
    }
}

fn collinear_relation(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> SegSeg {
    // Project on the axis along which the shared line actually extends.
    let use_x = a1.x != a2.x;
    let key = |p: &Point| if use_x { p.x.clone() } else { p.y.clone() };
    let (mut alo, mut ahi) = (key(a1), key(a2));
    if alo > ahi {
        std::mem::swap(&mut alo, &mut ahi);
    }
    let (mut blo, mut bhi) = (key(b1), key(b2));
    if blo > bhi {
        std::mem::swap(&mut blo, &mut bhi);
    }
    let lo = alo.max(blo);
    let hi = ahi.min(bhi);
    if lo > hi {
        SegSeg::Disjoint
    } else if lo == hi {
        let at = [a1, a2, b1, b2]
            .into_iter()
            .find(|p| key(p) == lo)
            .expect("collinear touch endpoint");
        SegSeg::Touch(at.clone())
    } else {
        SegSeg::CollinearOverlap
    }
}

/// Strict convexity check: every consecutive vertex triple turns the same
/// nonzero way.
pub fn is_strictly_convex(polygon: &[Point]) -> bool {
    let k = polygon.len();
    if k < 3 {
        return false;
    }
    let mut sign = 0i8;
    for i in 0..k {
        let o = orient(&polygon[i], &polygon[(i + 1) % k], &polygon[(i + 2) % k]);
        if o == 0 {
            return false;
        }
        if sign == 0 {
            sign = o;
        } else if o != sign {
            return false;
        }
    }
    true
}

/// Position of a point relative to a convex polygon.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Containment {
    Inside,
    OnBoundary,
    Outside,
}

/// Locates `p` relative to a convex polygon given in either winding order.
/// Collinear runs on the outline are tolerated (the outline may subdivide its
/// sides with extra vertices), so convexity here means "non-reflex".
pub fn convex_containment(polygon: &[Point], p: &Point) -> Containment {
    let k = polygon.len();
    debug_assert!(k >= 3);
    let winding = polygon_winding(polygon);
    let mut on_edge = false;
    for i in 0..k {
        let a = &polygon[i];
        let b = &polygon[(i + 1) % k];
        let o = orient(a, b, p);
        if o == 0 {
            if on_segment(p, a, b) {
                on_edge = true;
            }
            continue;
        }
        if o != winding {
            return Containment::Outside;
        }
    }
    if on_edge {
        Containment::OnBoundary
    } else {
        Containment::Inside
    }
}

/// Largest scaled coordinate magnitude the screen accepts. Cross products of
/// differences stay below 2^123, far inside i128.
const SCREEN_LIMIT: i128 = 1 << 60;

/// A segment's endpoints scaled to integers by per-axis common denominators,
/// with its bounding box. Because the scale factors are positive, every sign
/// computed on these integers equals the sign of the corresponding exact
/// rational expression.
#[derive(Clone, Copy)]
pub(crate) struct ScreenSeg {
    x1: i128,
    y1: i128,
    x2: i128,
    y2: i128,
    min_x: i128,
    max_x: i128,
    min_y: i128,
    max_y: i128,
}

impl ScreenSeg {
    /// Scales [a, b] by the given axis denominators. None when a scaled
    /// coordinate falls outside the overflow-safe range.
    pub(crate) fn build(a: &Point, b: &Point, sx: &BigInt, sy: &BigInt) -> Option<ScreenSeg> {
        let x1 = scaled(&a.x, sx)?;
        let y1 = scaled(&a.y, sy)?;
        let x2 = scaled(&b.x, sx)?;
        let y2 = scaled(&b.y, sy)?;
        Some(ScreenSeg {
            x1,
            y1,
            x2,
            y2,
            min_x: x1.min(x2),
            max_x: x1.max(x2),
            min_y: y1.min(y2),
            max_y: y1.max(y2),
        })
    }
}

fn scaled(r: &Rat, scale: &BigInt) -> Option<i128> {
    let v = ((scale / r.denom()) * r.numer()).to_i128()?;
    (v.abs() <= SCREEN_LIMIT).then_some(v)
}

/// Least common multiple of the x and y coordinate denominators over a point
/// set: the per-axis scale factors that make every coordinate integral.
pub(crate) fn common_denominators<'a>(
    points: impl Iterator<Item = &'a Point>,
) -> (BigInt, BigInt) {
    let mut sx = BigInt::one();
    let mut sy = BigInt::one();
    for p in points {
        sx = sx.lcm(p.x.denom());
        sy = sy.lcm(p.y.denom());
    }
    (sx, sy)
}

/// Conservative disjointness screen: true guarantees the exact classification
/// of the two closed segments is [`SegSeg::Disjoint`]. False decides nothing.
pub(crate) fn screen_disjoint(a: &ScreenSeg, b: &ScreenSeg) -> bool {
    if a.min_x > b.max_x || b.min_x > a.max_x || a.min_y > b.max_y || b.min_y > a.max_y {
        return true;
    }
    let d1 = iorient(a, b.x1, b.y1);
    let d2 = iorient(a, b.x2, b.y2);
    if (d1 > 0 && d2 > 0) || (d1 < 0 && d2 < 0) {
        return true;
    }
    let d3 = iorient(b, a.x1, a.y1);
    let d4 = iorient(b, a.x2, a.y2);
    (d3 > 0 && d4 > 0) || (d3 < 0 && d4 < 0)
}

fn iorient(s: &ScreenSeg, px: i128, py: i128) -> i128 {
    (s.x2 - s.x1) * (py - s.y1) - (s.y2 - s.y1) * (px - s.x1)
}

/// Nudges each value upward by a rank-dependent amount below `cap`, keeping
/// input order in the result. Outputs are pairwise distinct and each stays
/// within `(value, value + cap)`; ties in the input break by position.
pub(crate) fn spread_up(values: &[Rat], cap: &Rat) -> Vec<Rat> {
    let step = cap / crate::model::rat_int(values.len() as i64 + 1);
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].cmp(&values[j]).then(i.cmp(&j)));
    let mut out = vec![Rat::zero(); values.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = &values[i] + &step * crate::model::rat_int(rank as i64 + 1);
    }
    out
}

/// Dominant turn direction of a simple polygon: +1 counter-clockwise, -1 clockwise.
fn polygon_winding(polygon: &[Point]) -> i8 {
    let mut twice_area = Rat::zero();
    let k = polygon.len();
    for i in 0..k {
        let a = &polygon[i];
        let b = &polygon[(i + 1) % k];
        twice_area += cross(&a.x, &a.y, &b.x, &b.y);
    }
    if rat_sign(&twice_area) >= 0 {
        1
    } else {
        -1
    }
}
