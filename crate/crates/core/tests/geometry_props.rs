use geoposet_core::geometry::{self, orientation, proper_cross, Drawing, Orientation, Point2, Rational};
use geoposet_core::graph::GraphFamily;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn point() -> impl Strategy<Value = Point2> {
    (rat(), rat()).prop_map(|(x, y)| Point2::new(x, y))
}

/// Solves `a + t (b - a) = c + s (d - c)` by Cramer's rule and asks for a
/// unique solution with both parameters strictly inside `(0, 1)`.
fn parametric_cross(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    let (ux, uy) = (&b.x - &a.x, &b.y - &a.y);
    let (vx, vy) = (&d.x - &c.x, &d.y - &c.y);
    let (wx, wy) = (&c.x - &a.x, &c.y - &a.y);
    // t ux - s vx = wx, t uy - s vy = wy
    let det = &ux * (-&vy) - (-&vx) * &uy;
    if det.is_zero() {
        return false;
    }
    let t = (&wx * (-&vy) - (-&vx) * &wy) / &det;
    let s = (&ux * &wy - &uy * &wx) / &det;
    let zero = Rational::zero();
    let one = Rational::one();
    t > zero && t < one && s > zero && s < one
}

fn lattice_points(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-1_000_000i64..1_000_000, -1_000_000i64..1_000_000), n)
}

fn drawing_of(family: GraphFamily, pts: &[(i64, i64)]) -> Option<Drawing> {
    let d = Drawing::new(family, pts.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect()).ok()?;
    geometry::validate_drawing(&d).ok()?;
    Some(d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn proper_cross_matches_parametric_oracle(a in point(), b in point(), c in point(), d in point()) {
        prop_assert_eq!(proper_cross(&a, &b, &c, &d), parametric_cross(&a, &b, &c, &d));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn orientation_is_antisymmetric(p in point(), q in point(), r in point()) {
        let o = orientation(&p, &q, &r);
        let s = orientation(&p, &r, &q);
        prop_assert_eq!(o == Orientation::CounterClockwise, s == Orientation::Clockwise);
        prop_assert_eq!(o == Orientation::Collinear, s == Orientation::Collinear);
        prop_assert_eq!(o, orientation(&q, &r, &p));
    }

    #[test]
    fn proper_cross_symmetries(a in point(), b in point(), c in point(), d in point()) {
        let v = proper_cross(&a, &b, &c, &d);
        prop_assert_eq!(v, proper_cross(&c, &d, &a, &b));
        prop_assert_eq!(v, proper_cross(&b, &a, &c, &d));
        prop_assert_eq!(v, proper_cross(&a, &b, &d, &c));
    }

    #[test]
    fn crossing_set_is_affine_invariant(
        kind in 0usize..3,
        n in 4usize..=7,
        pts in lattice_points(7),
        m in (1i64..=9, -9i64..=9, -9i64..=9, 1i64..=9, 1i64..=7),
        shift in (-50i64..50, -50i64..50),
    ) {
        let family = match kind {
            0 => GraphFamily::path(n),
            1 => GraphFamily::cycle(n),
            _ => GraphFamily::clique(n),
        };
        let (a, b, c, dd, den) = m;
        prop_assume!(a * dd - b * c > 0);
        let Some(d) = drawing_of(family, &pts[..n]) else { return Ok(()) };
        let r = |v: i64| Rational::new(v.into(), den.into());
        let moved: Vec<Point2> = d
            .positions()
            .iter()
            .map(|p| {
                Point2::new(
                    r(a) * &p.x + r(b) * &p.y + Rational::from_integer(shift.0.into()),
                    r(c) * &p.x + r(dd) * &p.y + Rational::from_integer(shift.1.into()),
                )
            })
            .collect();
        let e = Drawing::new(family, moved).unwrap();
        prop_assert_eq!(geometry::crossing_set(&d).unwrap(), geometry::crossing_set(&e).unwrap());
    }

    #[test]
    fn convex_position_iff_all_quadruples_convex(k in 4usize..=7, pts in lattice_points(7)) {
        let pts: Vec<Point2> = pts[..k].iter().map(|&(x, y)| Point2::from_ints(x, y)).collect();
        prop_assume!(Drawing::new(GraphFamily::clique(k), pts.clone()).is_ok_and(|d| geometry::validate_drawing(&d).is_ok()));
        let mut all = true;
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    for d in c + 1..k {
                        let q = [pts[a].clone(), pts[b].clone(), pts[c].clone(), pts[d].clone()];
                        all &= geometry::convex_position(&q).unwrap();
                    }
                }
            }
        }
        prop_assert_eq!(geometry::convex_position(&pts).unwrap(), all);
    }
}
