//! Exact rational plane geometry: orientation, proper crossings, general
//! position, convex hulls and crossing sets of drawings.
//!
//! Every predicate is exact. Drawings whose coordinates scale to moderate
//! integers are evaluated on the integer kernel; everything else goes through
//! `BigRational` arithmetic directly.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::{CrossingPair, CrossingSet, EdgeId, GraphFamily};
use crate::kernel::{self, IntPoint, LatticeViolation};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("drawing is not in general position: {0:?}")]
    InvalidDrawing(Violation),
    #[error("input points contain a collinear triple {0:?}")]
    CollinearInput((usize, usize, usize)),
    #[error("drawing has {got} positions, family needs {expected}")]
    WrongVertexCount { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2 { x: Rational::from_integer(x.into()), y: Rational::from_integer(y.into()) }
    }

    /// `(xn / xd, yn / yd)`; panics on a zero denominator.
    pub fn from_ratios(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point2 {
            x: Rational::new(xn.into(), xd.into()),
            y: Rational::new(yn.into(), yd.into()),
        }
    }

    pub fn from_lattice(p: IntPoint) -> Self {
        Self::from_ints(p.x, p.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    fn from_sign(s: Ordering) -> Self {
        match s {
            Ordering::Greater => Orientation::CounterClockwise,
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
        }
    }

    fn sign(self) -> i8 {
        match self {
            Orientation::CounterClockwise => 1,
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
        }
    }
}

fn cross(p: &Point2, q: &Point2, r: &Point2) -> Rational {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

pub fn orientation(p: &Point2, q: &Point2, r: &Point2) -> Orientation {
    Orientation::from_sign(cross(p, q, r).cmp(&Rational::zero()))
}

/// True iff the open segments `ab` and `cd` share exactly one interior point.
/// Touching at an endpoint and collinear overlap both count as no crossing.
pub fn proper_cross(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    let o1 = orientation(a, b, c).sign();
    let o2 = orientation(a, b, d).sign();
    let o3 = orientation(c, d, a).sign();
    let o4 = orientation(c, d, b).sign();
    o1 * o2 < 0 && o3 * o4 < 0
}

/// Intersection of the lines through `ab` and `cd`, or `None` when parallel.
pub fn line_intersection(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> Option<Point2> {
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    let sx = &d.x - &c.x;
    let sy = &d.y - &c.y;
    let den = &dx * &sy - &dy * &sx;
    if den.is_zero() {
        return None;
    }
    let num = (&c.x - &a.x) * &sy - (&c.y - &a.y) * &sx;
    let t = num / den;
    Some(Point2 { x: &a.x + &t * dx, y: &a.y + t * dy })
}

/// Straight-line drawing of a family: `positions[v - 1]` is vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    family: GraphFamily,
    positions: Vec<Point2>,
}

impl Drawing {
    pub fn new(family: GraphFamily, positions: Vec<Point2>) -> Result<Self, GeometryError> {
        if positions.len() != family.n() {
            return Err(GeometryError::WrongVertexCount { expected: family.n(), got: positions.len() });
        }
        Ok(Drawing { family, positions })
    }

    pub fn from_lattice(family: GraphFamily, points: &[IntPoint]) -> Result<Self, GeometryError> {
        Self::new(family, points.iter().map(|&p| Point2::from_lattice(p)).collect())
    }

    pub fn family(&self) -> GraphFamily {
        self.family
    }

    pub fn positions(&self) -> &[Point2] {
        &self.positions
    }

    /// Position of the 1-based vertex `v`.
    pub fn position(&self, v: usize) -> &Point2 {
        &self.positions[v - 1]
    }

    pub fn segment(&self, e: EdgeId) -> (&Point2, &Point2) {
        let (a, b) = self.family.endpoints(e);
        (self.position(a), self.position(b))
    }

    /// The drawing scaled to integer coordinates, when they fit the kernel.
    /// Scaling by a positive factor preserves every orientation.
    pub fn to_lattice(&self) -> Option<Vec<IntPoint>> {
        to_lattice(&self.positions)
    }
}

pub(crate) fn to_lattice(points: &[Point2]) -> Option<Vec<IntPoint>> {
    let mut l = BigInt::one();
    for p in points {
        l = l.lcm(p.x.denom());
        l = l.lcm(p.y.denom());
    }
    let mut out = Vec::with_capacity(points.len());
    for p in points {
        let x = p.x.numer() * (&l / p.x.denom());
        let y = p.y.numer() * (&l / p.y.denom());
        if !kernel::within_limit(&x, &y) {
            return None;
        }
        out.push(IntPoint::new(x.to_i64()?, y.to_i64()?));
    }
    Some(out)
}

/// The reason a drawing is not in general position. Vertex ids are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    DuplicatePosition(usize, usize),
    CollinearVertices(usize, usize, usize),
    ConcurrentEdges(EdgeId, EdgeId, EdgeId),
}

impl From<LatticeViolation> for Violation {
    fn from(v: LatticeViolation) -> Self {
        match v {
            LatticeViolation::Duplicate(a, b) => Violation::DuplicatePosition(a, b),
            LatticeViolation::Collinear(a, b, c) => Violation::CollinearVertices(a, b, c),
            LatticeViolation::Concurrent(e, f, g) => Violation::ConcurrentEdges(e, f, g),
        }
    }
}

/// `Ok` iff positions are distinct, no three are collinear and no three edges
/// pass through a common crossing point.
pub fn validate_drawing(d: &Drawing) -> Result<(), Violation> {
    checked_crossings(d).map(|_| ())
}

/// Crossing set of a drawing, in canonical order.
pub fn crossing_set(d: &Drawing) -> Result<CrossingSet, GeometryError> {
    checked_crossings(d).map_err(GeometryError::InvalidDrawing)
}

fn checked_crossings(d: &Drawing) -> Result<CrossingSet, Violation> {
    match d.to_lattice() {
        Some(points) => kernel::crossing_set(&d.family, &points).map_err(Violation::from),
        None => rational_crossings(d),
    }
}

/// The same computation as the lattice path, carried out in `BigRational`.
pub fn rational_crossings(d: &Drawing) -> Result<CrossingSet, Violation> {
    let pts = &d.positions;
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            if pts[i] == pts[j] {
                return Err(Violation::DuplicatePosition(i + 1, j + 1));
            }
        }
    }
    if let Some((i, j, k)) = find_collinear(pts) {
        return Err(Violation::CollinearVertices(i, j, k));
    }
    let family = d.family;
    let mut pairs = Vec::new();
    for p in family.candidate_crossing_pairs() {
        let (a, b) = d.segment(p.0);
        let (c, e) = d.segment(p.1);
        if proper_cross(a, b, c, e) {
            pairs.push(p);
        }
    }
    let x = CrossingSet::from_sorted_pairs(pairs);
    let m = x.matrix(&family);
    for p in x.iter() {
        let CrossingPair(e, f) = *p;
        let (a, b) = d.segment(e);
        let (c, dd) = d.segment(f);
        let Some(point) = line_intersection(a, b, c, dd) else { continue };
        for g in family.edges() {
            if g <= f || !m.get(e.index(), g.index()) || !m.get(f.index(), g.index()) {
                continue;
            }
            let (u, v) = d.segment(g);
            if orientation(u, v, &point) == Orientation::Collinear {
                return Err(Violation::ConcurrentEdges(e, f, g));
            }
        }
    }
    Ok(x)
}

fn find_collinear(pts: &[Point2]) -> Option<(usize, usize, usize)> {
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orientation(&pts[i], &pts[j], &pts[k]) == Orientation::Collinear {
                    return Some((i + 1, j + 1, k + 1));
                }
            }
        }
    }
    None
}

/// Number of points on the convex hull boundary. Requires general position.
pub fn convex_hull_vertex_count(points: &[Point2]) -> Result<usize, GeometryError> {
    if let Some(t) = find_collinear(points) {
        return Err(GeometryError::CollinearInput(t));
    }
    if points.len() < 3 {
        return Ok(points.len());
    }
    let pts: Vec<&Point2> = points.iter().collect();
    Ok(kernel::monotone_chain_len(pts, |a, b, c| {
        orientation(a, b, c) == Orientation::CounterClockwise
    }))
}

pub fn convex_position(points: &[Point2]) -> Result<bool, GeometryError> {
    Ok(convex_hull_vertex_count(points)? == points.len())
}

/// Hull size of a drawing's vertex set.
pub fn drawing_hull_size(d: &Drawing) -> Result<usize, GeometryError> {
    match d.to_lattice() {
        Some(pts) => {
            kernel::check_vertices(&pts)
                .map_err(|v| GeometryError::InvalidDrawing(Violation::from(v)))?;
            Ok(kernel::hull_size(&pts))
        }
        None => convex_hull_vertex_count(d.positions()),
    }
}

/// Largest vertex subset in convex position, measured on the drawing.
pub fn max_convex_subset(d: &Drawing) -> Result<usize, GeometryError> {
    let n = d.positions().len();
    let mut best = n.min(3);
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let pts: Vec<Point2> =
            (0..n).filter(|i| mask >> i & 1 == 1).map(|i| d.positions()[i].clone()).collect();
        if convex_position(&pts)? {
            best = k;
        }
    }
    Ok(best)
}

/// Abs of a rational, used by callers building perturbations.
pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::CounterClockwise);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), Orientation::Clockwise);
    }

    #[test]
    fn proper_cross_examples() {
        assert!(proper_cross(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)));
        assert!(!proper_cross(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)));
        assert!(!proper_cross(&p(0, 0), &p(4, 4), &p(2, 1), &p(5, 0)));
        // touching at an endpoint is not a crossing
        assert!(!proper_cross(&p(0, 0), &p(4, 4), &p(2, 2), &p(5, 0)));
    }

    #[test]
    fn validate_examples() {
        let p3 = GraphFamily::path(3);
        let d = Drawing::new(p3, vec![p(0, 0), p(1, 0), p(2, 0)]).unwrap();
        assert_eq!(validate_drawing(&d), Err(Violation::CollinearVertices(1, 2, 3)));

        let p4 = GraphFamily::path(4);
        let d = Drawing::new(p4, vec![p(0, 0), p(3, 1), p(1, -1), p(2, 2)]).unwrap();
        assert_eq!(validate_drawing(&d), Ok(()));
        // the triple-by-triple oracle agrees
        let pts = d.positions();
        for i in 0..4 {
            for j in i + 1..4 {
                for k in j + 1..4 {
                    assert_ne!(orientation(&pts[i], &pts[j], &pts[k]), Orientation::Collinear);
                }
            }
        }
    }

    #[test]
    fn concurrent_hexagon_diagonals() {
        // regular-hexagon-like K6 on the lattice: the three long diagonals meet at the origin
        let k6 = GraphFamily::clique(6);
        let pts = vec![p(2, 0), p(1, 2), p(-1, 2), p(-2, 0), p(-1, -2), p(1, -2)];
        let d = Drawing::new(k6, pts.clone()).unwrap();
        assert!(matches!(validate_drawing(&d), Err(Violation::ConcurrentEdges(..))));
        assert!(matches!(rational_crossings(&d), Err(Violation::ConcurrentEdges(..))));
        let mut moved = pts;
        moved[0] = Point2::from_ratios(21, 10, 1, 10);
        let d = Drawing::new(k6, moved).unwrap();
        assert_eq!(validate_drawing(&d), Ok(()));
        assert_eq!(crossing_set(&d).unwrap().len(), 15);
    }

    #[test]
    fn crossing_set_examples() {
        let p4 = GraphFamily::path(4);
        let zigzag = Drawing::new(p4, vec![p(0, 0), p(1, 1), p(2, 0), p(3, 1)]).unwrap();
        assert!(crossing_set(&zigzag).unwrap().is_empty());
        let x = Drawing::new(p4, vec![p(0, 0), p(2, 2), p(0, 2), p(2, 0)]).unwrap();
        assert_eq!(crossing_set(&x).unwrap(), CrossingSet::from_indexed(&p4, &[(1, 3)]).unwrap());

        let k4 = GraphFamily::clique(4);
        let sq = Drawing::new(k4, vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap();
        let want = CrossingSet::from_vertex_pairs(&k4, &[((1, 3), (2, 4))]).unwrap();
        assert_eq!(crossing_set(&sq).unwrap(), want);
    }

    #[test]
    fn hulls() {
        let sq = [p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        assert_eq!(convex_hull_vertex_count(&sq), Ok(4));
        assert_eq!(convex_position(&sq), Ok(true));
        let tri = [p(0, 0), p(6, 0), p(0, 6), p(1, 2)];
        assert_eq!(convex_hull_vertex_count(&tri), Ok(3));
        assert_eq!(convex_position(&tri), Ok(false));
        assert!(convex_hull_vertex_count(&[p(0, 0), p(1, 1), p(2, 2)]).is_err());
    }

    #[test]
    fn large_coordinates_take_the_rational_path() {
        let p4 = GraphFamily::path(4);
        let big = Rational::new(BigInt::from(1u64 << 62) * 4, BigInt::from(3));
        let d = Drawing::new(
            p4,
            vec![
                Point2::new(Rational::zero(), Rational::zero()),
                Point2::new(big.clone(), big.clone()),
                Point2::new(Rational::zero(), big.clone()),
                Point2::new(big, Rational::zero()),
            ],
        )
        .unwrap();
        assert!(d.to_lattice().is_none());
        assert_eq!(crossing_set(&d).unwrap().len(), 1);
    }
}
