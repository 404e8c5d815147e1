//! Explicit drawings: a path with every non-adjacent edge pair crossing,
//! single-crossing removal along a path, and the circle template giving a
//! chain of complete-graph drawings with growing convex hulls.

use alloc::vec::Vec;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::geometry::{self, line_intersection, Drawing, Point2, Rational};
use crate::graph::{CrossingPair, CrossingSet, EdgeId, FamilyKind, GraphFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("the drawing has no crossings")]
    NoCrossings,
    #[error("expected a drawing of a path, got {0}")]
    NotAPath(GraphFamily),
    #[error("n = {0} is below the construction's minimum of {1}")]
    TooSmall(usize, usize),
    #[error("drawing is not in general position")]
    InvalidDrawing,
    #[error("no valid perturbation found")]
    NoValidPerturbation,
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Perturbation offsets in `(-1/2, 1/2)`, deterministic in `(i, attempt)`.
fn wobble(i: usize, attempt: usize) -> Rational {
    let v = ((i * 7919 + attempt * 104_729 + 17) * (i + 3)) % 997;
    rat(v as i64 - 498, 1000)
}

/// A drawing of the path on `n` vertices in which every pair of non-adjacent
/// edges crosses: consecutive vertices of a star polygon on an odd number of
/// points on a parabola.
pub fn max_crossing_path(n: usize) -> Result<Drawing, ConstructError> {
    if n < 4 {
        return Err(ConstructError::TooSmall(n, 4));
    }
    let family = GraphFamily::path(n);
    let m = if n % 2 == 1 { n } else { n + 1 };
    let step = (m - 1) / 2;
    let target = family.candidate_crossing_pairs().len();
    for attempt in 0..64 {
        let slot = |s: usize| {
            let x = Rational::from_integer((s as i64 * 8).into()) + wobble(s, attempt);
            let y = &x * &x;
            Point2::new(x, y)
        };
        let positions: Vec<Point2> = (0..n).map(|t| slot((t * step) % m)).collect();
        let d = Drawing::new(family, positions).map_err(|_| ConstructError::InvalidDrawing)?;
        if matches!(geometry::crossing_set(&d), Ok(x) if x.len() == target) {
            return Ok(d);
        }
    }
    Err(ConstructError::NoValidPerturbation)
}

/// Removes exactly one crossing from a path drawing.
///
/// Let `e_j` be the last crossed edge. Its endpoint `j + 1` moves along `e_j`
/// past the crossing nearest to it, to the midpoint between that crossing and
/// the next crossing (or vertex `j`). The uncrossed tail `j + 2, ..., n` is
/// redrawn on a small convex arc beside the moved vertex. The result's
/// crossing set is the input's minus one pair.
pub fn uncross_step(d: &Drawing) -> Result<Drawing, ConstructError> {
    let family = d.family();
    if family.kind() != FamilyKind::Path {
        return Err(ConstructError::NotAPath(family));
    }
    let x = geometry::crossing_set(d).map_err(|_| ConstructError::InvalidDrawing)?;
    let per_edge = x.crossings_per_edge(&family);
    let Some(j) = (0..family.edge_count()).rev().find(|&e| per_edge[e] > 0) else {
        return Err(ConstructError::NoCrossings);
    };
    let ej = EdgeId::from_index(j);
    // e_j joins vertices j+1 and j+2 (1-based); walk from the latter
    let head = d.position(j + 2).clone();
    let tail = d.position(j + 1).clone();
    let dir = Point2::new(&tail.x - &head.x, &tail.y - &head.y);
    let param = |p: &Point2| {
        if !dir.x.is_zero() {
            (&p.x - &head.x) / &dir.x
        } else {
            (&p.y - &head.y) / &dir.y
        }
    };
    let mut events: Vec<(Rational, EdgeId)> = x
        .iter()
        .filter(|p| p.involves(ej))
        .map(|p| {
            let f = if p.0 == ej { p.1 } else { p.0 };
            let (a, b) = d.segment(f);
            let c = line_intersection(&head, &tail, a, b).expect("crossing edges meet");
            (param(&c), f)
        })
        .collect();
    events.sort();
    let (s0, f) = events[0].clone();
    let s1 = events.get(1).map(|e| e.0.clone()).unwrap_or_else(Rational::one);
    let s = (s0 + s1) / Rational::from_integer(2.into());
    let moved = Point2::new(&head.x + &s * &dir.x, &head.y + &s * &dir.y);
    let expected = x.without(CrossingPair::new(ej, f));

    // unit-free frame at the moved vertex: along e_j away from vertex j+1, and a normal
    let away = Point2::new(-dir.x.clone(), -dir.y.clone());
    let normal = Point2::new(-away.y.clone(), away.x.clone());
    let tail_len = family.n() - (j + 2);
    let mut delta = rat(1, 8);
    for _ in 0..200 {
        let mut positions: Vec<Point2> = d.positions().to_vec();
        positions[j + 1] = moved.clone();
        for t in 1..=tail_len {
            let a = &delta * Rational::from_integer((t as i64).into());
            let b = &delta * Rational::from_integer(((t * t) as i64).into());
            positions[j + 1 + t] = Point2::new(
                &moved.x + &a * &away.x + &b * &normal.x,
                &moved.y + &a * &away.y + &b * &normal.y,
            );
        }
        let candidate = Drawing::new(family, positions).map_err(|_| ConstructError::InvalidDrawing)?;
        if matches!(geometry::crossing_set(&candidate), Ok(y) if y == expected) {
            return Ok(candidate);
        }
        delta /= Rational::from_integer(3.into());
    }
    Err(ConstructError::NoValidPerturbation)
}

/// Rational point on the circle `x² + (y + 1)² = 4` with parameter `u`;
/// `u` in `[-1/2, 1/2]` sweeps the upper arc visible from `(0, 3)`, right to left.
fn circle_point(u: &Rational) -> Point2 {
    let one = Rational::one();
    let two = Rational::from_integer(2.into());
    let t = (&one + u) / (&one - u);
    let t2 = &t * &t;
    let den = &one + &t2;
    let x = &two * (&one - &t2) / &den;
    let y = -&one + Rational::from_integer(4.into()) * &t / &den;
    Point2::new(x, y)
}

/// Second intersection with the circle of the ray from `apex` through `p`.
fn far_intersection(apex: &Point2, p: &Point2) -> Point2 {
    let dx = &p.x - &apex.x;
    let dy = &p.y - &apex.y;
    // |apex - centre|^2 - r^2 = 16 - 4
    let s = Rational::from_integer(12.into()) / (&dx * &dx + &dy * &dy);
    Point2::new(&apex.x + &s * dx, &apex.y + &s * dy)
}

/// Drawings `H_3, ..., H_n` of `K_n` where `H_k` has `k` hull vertices and
/// the crossing sets grow along the chain under the identity map.
pub fn clique_chain_template(n: usize) -> Result<Vec<Drawing>, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooSmall(n, 3));
    }
    let family = GraphFamily::clique(n);
    for attempt in 0..64 {
        if let Some(chain) = template_attempt(n, family, attempt) {
            return Ok(chain);
        }
    }
    Err(ConstructError::NoValidPerturbation)
}

fn template_attempt(n: usize, family: GraphFamily, attempt: usize) -> Option<Vec<Drawing>> {
    let apex = Point2::from_ints(0, 3);
    let spots = n - 1;
    // spot 0 is leftmost
    let spot: Vec<Point2> = (0..spots)
        .map(|i| {
            let even = if spots == 1 {
                Rational::zero()
            } else {
                rat(1, 2) - rat(i as i64, (spots - 1) as i64)
            };
            let jitter = wobble(i, attempt) / Rational::from_integer((20 * spots as i64).into());
            let u = if i == 0 || i + 1 == spots { even * rat(19, 20) } else { even + jitter };
            circle_point(&u)
        })
        .collect();
    // vertex v (1-based) sits at spot[where[v]]; vertex n leftmost, then 2..n-1
    let mut pos: Vec<Point2> = Vec::with_capacity(n);
    pos.push(apex.clone());
    for v in 2..n {
        pos.push(spot[v - 1].clone());
    }
    pos.push(spot[0].clone());
    let mut chain = Vec::with_capacity(n - 2);
    chain.push(Drawing::new(family, pos.clone()).ok()?);
    for step in 1..=n.saturating_sub(3) {
        let v = n - step;
        // (v)* lies on the ray through the original spot of vertex n - v + 1
        pos[v - 1] = far_intersection(&apex, &spot[n - v]);
        for w in 2..v {
            pos[w - 1] = spot[w - 1 + step].clone();
        }
        chain.push(Drawing::new(family, pos.clone()).ok()?);
    }
    let mut prev: Option<CrossingSet> = None;
    for (k, d) in chain.iter().enumerate() {
        let x = geometry::crossing_set(d).ok()?;
        if geometry::drawing_hull_size(d).ok()? != k + 3 {
            return None;
        }
        if let Some(p) = &prev {
            if !p.is_subset(&x) || p == &x {
                return None;
            }
        }
        prev = Some(x);
    }
    Some(chain)
}
