//! Planar incidences: ordinary lines, and ordinary circles through the
//! stereographic lift.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::counting::histogram::plane_histogram;
use crate::error::{Error, Result};
use crate::geom::{north_pole, orientation, stereo_lift, Point2};
use crate::rational::Rational;

fn check_distinct(points: &[Point2]) -> Result<()> {
    let mut seen: HashMap<(&Rational, &Rational), usize> = HashMap::new();
    for (i, p) in points.iter().enumerate() {
        if let Some(&j) = seen.get(&(&p.x, &p.y)) {
            return Err(Error::DuplicatePoint(j, i));
        }
        seen.insert((&p.x, &p.y), i);
    }
    Ok(())
}

/// Line ax + by + c = 0 through two points, scaled so the first nonzero of
/// (a, b) is 1.
fn line_key(p: &Point2, q: &Point2) -> [Rational; 3] {
    let a = &q.y - &p.y;
    let b = &p.x - &q.x;
    let c = -(&a * &p.x + &b * &p.y);
    let lead = if a.is_zero() { b.clone() } else { a.clone() };
    [a / &lead, b / &lead, c / lead]
}

pub fn ordinary_lines_2d(points: &[Point2]) -> Result<u64> {
    check_distinct(points)?;
    let mut pairs: HashMap<[Rational; 3], u64> = HashMap::new();
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            *pairs.entry(line_key(&points[i], &points[j])).or_insert(0) += 1;
        }
    }
    Ok(pairs.values().filter(|&&c| c == 1).count() as u64)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CircleCounts {
    /// Circles through exactly three points.
    pub circles3: u64,
    /// Lines through exactly three points.
    pub lines3: u64,
}

/// Counts on the sphere: a lifted plane through the north pole is a line of
/// the original plane, any other plane a circle.
pub fn ordinary_circles(points: &[Point2]) -> Result<CircleCounts> {
    check_distinct(points)?;
    let lifted: Vec<_> = points.iter().map(stereo_lift).collect();
    let hist = plane_histogram(&lifted)?;
    let pole = north_pole();
    let mut out = CircleCounts::default();
    for e in hist.planes().iter().filter(|e| e.count == 3) {
        if hist.plane_key(&lifted, e)?.contains(&pole) {
            out.lines3 += 1;
        } else {
            out.circles3 += 1;
        }
    }
    Ok(out)
}

/// x² + y² + Dx + Ey + F = 0 through three non-collinear points.
fn circle_through(a: &Point2, b: &Point2, c: &Point2) -> [Rational; 3] {
    // Subtracting the equation at `a` from those at `b` and `c` leaves a
    // 2x2 linear system in D and E.
    let sq = |p: &Point2| &p.x * &p.x + &p.y * &p.y;
    let (r1, r2) = (sq(a) - sq(b), sq(a) - sq(c));
    let (m11, m12) = (&b.x - &a.x, &b.y - &a.y);
    let (m21, m22) = (&c.x - &a.x, &c.y - &a.y);
    let det = &m11 * &m22 - &m12 * &m21;
    let d = (&r1 * &m22 - &m12 * &r2) / &det;
    let e = (&m11 * &r2 - &r1 * &m21) / &det;
    let f = -(sq(a) + &d * &a.x + &e * &a.y);
    [d, e, f]
}

/// Planar O(n⁴) count of circles and lines through exactly three points.
pub fn ordinary_circles_planar(points: &[Point2]) -> Result<CircleCounts> {
    check_distinct(points)?;
    let n = points.len();
    let mut out = CircleCounts::default();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let (a, b, c) = (&points[i], &points[j], &points[k]);
                let is_line = orientation(a, b, c).is_zero();
                let on: Box<dyn Fn(&Point2) -> bool> = if is_line {
                    Box::new(|p| orientation(a, b, p).is_zero())
                } else {
                    let [d, e, f] = circle_through(a, b, c);
                    Box::new(move |p| (&p.x * &p.x + &p.y * &p.y + &d * &p.x + &e * &p.y + &f).is_zero())
                };
                let extra = (0..n).filter(|&l| l != i && l != j && l != k && on(&points[l])).count();
                if extra == 0 {
                    if is_line {
                        out.lines3 += 1;
                    } else {
                        out.circles3 += 1;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Concyclic-or-collinear test via the 4x4 determinant with rows
/// (x² + y², x, y, 1).
pub fn concyclic(points: [&Point2; 4]) -> bool {
    let rows: Vec<Vec<Rational>> =
        points.iter().map(|p| vec![&p.x * &p.x + &p.y * &p.y, p.x.clone(), p.y.clone(), Rational::one()]).collect();
    crate::linalg::determinant(&rows).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::random_planar_config;

    fn pts(v: &[(i64, i64)]) -> Vec<Point2> {
        v.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect()
    }

    #[test]
    fn small_line_counts() {
        assert_eq!(ordinary_lines_2d(&pts(&[(0, 0), (1, 0), (0, 1)])).unwrap(), 3);
        assert_eq!(ordinary_lines_2d(&pts(&[(0, 0), (1, 0), (0, 1), (1, 1)])).unwrap(), 6);
        assert_eq!(ordinary_lines_2d(&pts(&[(0, 0), (1, 0), (2, 0), (0, 1)])).unwrap(), 3);
        assert!(ordinary_lines_2d(&pts(&[(0, 0), (0, 0)])).is_err());
    }

    #[test]
    fn three_points_give_one_circle_or_line() {
        assert_eq!(ordinary_circles(&pts(&[(0, 0), (1, 0), (0, 1)])).unwrap(), CircleCounts { circles3: 1, lines3: 0 });
        assert_eq!(ordinary_circles(&pts(&[(0, 0), (1, 0), (2, 0)])).unwrap(), CircleCounts { circles3: 0, lines3: 1 });
    }

    #[test]
    fn concyclic_four_plus_one() {
        let p = pts(&[(1, 0), (0, 1), (-1, 0), (0, -1), (3, 5)]);
        assert!(concyclic([&p[0], &p[1], &p[2], &p[3]]));
        assert_eq!(ordinary_circles(&p).unwrap(), ordinary_circles_planar(&p).unwrap());
    }

    #[test]
    fn lift_matches_planar_count() {
        for seed in 0..4 {
            let p = random_planar_config(14, seed, 3).unwrap();
            assert_eq!(ordinary_circles(&p).unwrap(), ordinary_circles_planar(&p).unwrap());
        }
    }
}
