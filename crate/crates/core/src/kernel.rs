//! Exact predicates on integer lattice points.
//!
//! Coordinates are bounded by [`COORD_LIMIT`] so that orientation tests fit
//! in `i128`. The concurrency test can exceed `i128` for large coordinates;
//! it uses checked arithmetic and falls back to `BigInt`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::graph::{CrossingPair, CrossingSet, EdgeId, GraphFamily};

/// Absolute bound on lattice coordinates accepted by this kernel.
pub const COORD_LIMIT: i64 = 1 << 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntPoint {
    pub x: i64,
    pub y: i64,
}

impl IntPoint {
    pub const fn new(x: i64, y: i64) -> Self {
        IntPoint { x, y }
    }
}

/// Sign of the cross product `(q - p) × (r - p)`.
#[inline]
pub fn orient(p: IntPoint, q: IntPoint, r: IntPoint) -> i8 {
    let ax = q.x as i128 - p.x as i128;
    let ay = q.y as i128 - p.y as i128;
    let bx = r.x as i128 - p.x as i128;
    let by = r.y as i128 - p.y as i128;
    let d = ax * by - ay * bx;
    d.signum() as i8
}

/// Open segments `ab` and `cd` meet in a single interior point.
#[inline]
pub fn proper_cross(a: IntPoint, b: IntPoint, c: IntPoint, d: IntPoint) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o1 * o2 < 0 && o3 * o4 < 0
}

/// Whether the line through `e` passes through the intersection point of the
/// lines through `a` and `b` (assumed non-parallel).
pub fn lines_concurrent(a: (IntPoint, IntPoint), b: (IntPoint, IntPoint), e: (IntPoint, IntPoint)) -> bool {
    match concurrent_i128(a, b, e) {
        Some(v) => v,
        None => concurrent_big(a, b, e),
    }
}

fn concurrent_i128(a: (IntPoint, IntPoint), b: (IntPoint, IntPoint), e: (IntPoint, IntPoint)) -> Option<bool> {
    let (p, q) = a;
    let (r, s) = b;
    let (u, v) = e;
    let c = |x: i64| x as i128;
    // P = p + t (q - p), t = num / den
    let dx = c(q.x) - c(p.x);
    let dy = c(q.y) - c(p.y);
    let sx = c(s.x) - c(r.x);
    let sy = c(s.y) - c(r.y);
    let rpx = c(r.x) - c(p.x);
    let rpy = c(r.y) - c(p.y);
    let den = dx.checked_mul(sy)?.checked_sub(dy.checked_mul(sx)?)?;
    let num = rpx.checked_mul(sy)?.checked_sub(rpy.checked_mul(sx)?)?;
    // den * (P - u) = den * (p - u) + num * (q - p)
    let wx = (c(p.x) - c(u.x)).checked_mul(den)?.checked_add(num.checked_mul(dx)?)?;
    let wy = (c(p.y) - c(u.y)).checked_mul(den)?.checked_add(num.checked_mul(dy)?)?;
    let ex = c(v.x) - c(u.x);
    let ey = c(v.y) - c(u.y);
    let cr = ex.checked_mul(wy)?.checked_sub(ey.checked_mul(wx)?)?;
    Some(cr == 0)
}

fn concurrent_big(a: (IntPoint, IntPoint), b: (IntPoint, IntPoint), e: (IntPoint, IntPoint)) -> bool {
    let (p, q) = a;
    let (r, s) = b;
    let (u, v) = e;
    let c = |x: i64| BigInt::from(x);
    let dx = c(q.x) - c(p.x);
    let dy = c(q.y) - c(p.y);
    let sx = c(s.x) - c(r.x);
    let sy = c(s.y) - c(r.y);
    let rpx = c(r.x) - c(p.x);
    let rpy = c(r.y) - c(p.y);
    let den = &dx * &sy - &dy * &sx;
    let num = &rpx * &sy - &rpy * &sx;
    let wx = (c(p.x) - c(u.x)) * &den + &num * &dx;
    let wy = (c(p.y) - c(u.y)) * &den + &num * &dy;
    let ex = c(v.x) - c(u.x);
    let ey = c(v.y) - c(u.y);
    (ex * wy - ey * wx).is_zero()
}

/// A general-position failure found by [`crossing_set`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeViolation {
    /// Two vertices share a position (1-based ids).
    Duplicate(usize, usize),
    /// Three vertices on a line (1-based ids).
    Collinear(usize, usize, usize),
    /// Three edges through one crossing point.
    Concurrent(EdgeId, EdgeId, EdgeId),
}

/// Checks distinctness and the no-three-collinear condition.
pub fn check_vertices(points: &[IntPoint]) -> Result<(), LatticeViolation> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Err(LatticeViolation::Duplicate(i + 1, j + 1));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient(points[i], points[j], points[k]) == 0 {
                    return Err(LatticeViolation::Collinear(i + 1, j + 1, k + 1));
                }
            }
        }
    }
    Ok(())
}

/// Crossing set of a lattice drawing of `family`, with full general-position
/// validation.
pub fn crossing_set(family: &GraphFamily, points: &[IntPoint]) -> Result<CrossingSet, LatticeViolation> {
    debug_assert_eq!(points.len(), family.n());
    check_vertices(points)?;
    let seg = |e: EdgeId| {
        let (a, b) = family.endpoints(e);
        (points[a - 1], points[b - 1])
    };
    let mut pairs = Vec::new();
    for p in family.candidate_crossing_pairs() {
        let (a, b) = seg(p.0);
        let (c, d) = seg(p.1);
        if proper_cross(a, b, c, d) {
            pairs.push(p);
        }
    }
    let x = CrossingSet::from_sorted_pairs(pairs);
    check_concurrency(family, &x, &seg)?;
    Ok(x)
}

/// Every triangle in the crossing graph must have non-concurrent lines.
pub(crate) fn check_concurrency<F>(family: &GraphFamily, x: &CrossingSet, seg: &F) -> Result<(), LatticeViolation>
where
    F: Fn(EdgeId) -> (IntPoint, IntPoint),
{
    let m = x.matrix(family);
    for p in x.iter() {
        let CrossingPair(e, f) = *p;
        for g in family.edges() {
            if g <= f || !m.get(e.index(), g.index()) || !m.get(f.index(), g.index()) {
                continue;
            }
            if lines_concurrent(seg(e), seg(f), seg(g)) {
                return Err(LatticeViolation::Concurrent(e, f, g));
            }
        }
    }
    Ok(())
}

/// Number of hull vertices of points in general position (monotone chain).
pub fn hull_size(points: &[IntPoint]) -> usize {
    if points.len() < 3 {
        return points.len();
    }
    monotone_chain_len(points.to_vec(), |a, b, c| orient(*a, *b, *c) > 0)
}

/// Hull vertex count by Andrew's monotone chain; `ccw` is the strict
/// left-turn predicate.
pub(crate) fn monotone_chain_len<P, F>(mut pts: Vec<P>, ccw: F) -> usize
where
    P: Ord + Clone,
    F: Fn(&P, &P, &P) -> bool,
{
    if pts.len() < 3 {
        return pts.len();
    }
    pts.sort();
    let mut total = 0;
    for pass in 0..2 {
        if pass == 1 {
            pts.reverse();
        }
        let mut chain: Vec<&P> = Vec::with_capacity(pts.len());
        for p in &pts {
            while chain.len() >= 2 && !ccw(chain[chain.len() - 2], chain[chain.len() - 1], p) {
                chain.pop();
            }
            chain.push(p);
        }
        total += chain.len() - 1;
    }
    total
}

/// `|x| <= COORD_LIMIT` for both coordinates.
pub fn within_limit(x: &BigInt, y: &BigInt) -> bool {
    let lim = BigInt::from(COORD_LIMIT);
    x.abs() <= lim && y.abs() <= lim
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_basics() {
        let o = IntPoint::new(0, 0);
        assert_eq!(orient(o, IntPoint::new(1, 0), IntPoint::new(0, 1)), 1);
        assert_eq!(orient(o, IntPoint::new(0, 1), IntPoint::new(1, 0)), -1);
        assert_eq!(orient(o, IntPoint::new(1, 1), IntPoint::new(2, 2)), 0);
    }

    #[test]
    fn concurrency_fast_and_slow_agree() {
        // three diagonals of a hexagon through the origin
        let l1 = (IntPoint::new(-2, 0), IntPoint::new(2, 0));
        let l2 = (IntPoint::new(-1, -2), IntPoint::new(1, 2));
        let l3 = (IntPoint::new(1, -2), IntPoint::new(-1, 2));
        assert!(lines_concurrent(l1, l2, l3));
        assert!(concurrent_big(l1, l2, l3));
        let l4 = (IntPoint::new(1, -2), IntPoint::new(-1, 3));
        assert!(!lines_concurrent(l1, l2, l4));
        let big = 1i64 << 40;
        let m1 = (IntPoint::new(-big, 0), IntPoint::new(big, 0));
        let m2 = (IntPoint::new(-big, -big), IntPoint::new(big, big));
        let m3 = (IntPoint::new(big, -big), IntPoint::new(-big, big));
        assert!(lines_concurrent(m1, m2, m3));
        assert_eq!(concurrent_i128(m1, m2, m3), None);
    }

    #[test]
    fn hull_sizes() {
        let sq = [IntPoint::new(0, 0), IntPoint::new(4, 0), IntPoint::new(4, 4), IntPoint::new(0, 4)];
        assert_eq!(hull_size(&sq), 4);
        let tri = [IntPoint::new(0, 0), IntPoint::new(6, 0), IntPoint::new(0, 6), IntPoint::new(1, 2)];
        assert_eq!(hull_size(&tri), 3);
    }
}
