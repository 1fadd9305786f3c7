//! Exact projective primitives over the rationals: points and planes of
//! projective 3-space, incidence predicates, central projection, the
//! stereographic lift and the cone-vertex test.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::rational::{format_rational, int, primitive_integers, Rational};

/// Scales so the first nonzero entry is 1. `None` for the zero vector.
fn scale_first_nonzero(mut v: [Rational; 4]) -> Option<[Rational; 4]> {
    let lead = v.iter().find(|x| !x.is_zero())?.clone();
    if !lead.is_one() {
        for x in v.iter_mut() {
            *x /= &lead;
        }
    }
    Some(v)
}

/// A point of projective 3-space, stored with its first nonzero coordinate
/// equal to 1 so that structural equality is projective equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HPoint {
    coords: [Rational; 4],
}

impl HPoint {
    pub fn new(coords: [Rational; 4]) -> Result<Self> {
        scale_first_nonzero(coords).map(|coords| HPoint { coords }).ok_or(Error::ZeroPoint)
    }

    pub fn from_ints(coords: [i64; 4]) -> Result<Self> {
        Self::new(coords.map(int))
    }

    /// Standard basis point e_{i+1}.
    pub fn basis(i: usize) -> Self {
        let mut coords = [0i64; 4];
        coords[i] = 1;
        Self::from_ints(coords).expect("basis vector is nonzero")
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.coords
    }

    /// Coprime integer representative with the same sign pattern.
    pub fn primitive(&self) -> [BigInt; 4] {
        let v = primitive_integers(&self.coords);
        [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]
    }
}

impl fmt::Display for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coords;
        write!(f, "{} {} {} {}", format_rational(a), format_rational(b), format_rational(c), format_rational(d))
    }
}

/// Canonical identifier of the plane a·x = 0: first nonzero entry 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneKey {
    covector: [Rational; 4],
}

impl PlaneKey {
    pub fn covector(&self) -> &[Rational; 4] {
        &self.covector
    }

    pub fn eval(&self, p: &HPoint) -> Rational {
        dot(&self.covector, p.coords())
    }

    pub fn contains(&self, p: &HPoint) -> bool {
        self.eval(p).is_zero()
    }
}

impl fmt::Display for PlaneKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.covector.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub fn dot(a: &[Rational; 4], b: &[Rational; 4]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn canonical_plane(raw: [Rational; 4]) -> Result<PlaneKey> {
    scale_first_nonzero(raw).map(|covector| PlaneKey { covector }).ok_or(Error::DegeneratePlane)
}

fn det3(rows: [[&Rational; 3]; 3]) -> Rational {
    rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
}

/// Cofactor covector of three points; zero iff they are collinear or coincide.
fn cofactor_covector(p1: &HPoint, p2: &HPoint, p3: &HPoint) -> [Rational; 4] {
    let (a, b, c) = (p1.coords(), p2.coords(), p3.coords());
    let minor = |skip: usize| {
        let cols: Vec<usize> = (0..4).filter(|&j| j != skip).collect();
        det3([
            [&a[cols[0]], &a[cols[1]], &a[cols[2]]],
            [&b[cols[0]], &b[cols[1]], &b[cols[2]]],
            [&c[cols[0]], &c[cols[1]], &c[cols[2]]],
        ])
    };
    [minor(0), -minor(1), minor(2), -minor(3)]
}

pub fn plane_through(p1: &HPoint, p2: &HPoint, p3: &HPoint) -> Result<PlaneKey> {
    canonical_plane(cofactor_covector(p1, p2, p3)).map_err(|_| Error::DegenerateTriple)
}

/// Rank of the 3x4 coordinate matrix is at most 2.
pub fn are_collinear(p1: &HPoint, p2: &HPoint, p3: &HPoint) -> bool {
    cofactor_covector(p1, p2, p3).iter().all(Zero::is_zero)
}

pub fn are_coplanar(p1: &HPoint, p2: &HPoint, p3: &HPoint, p4: &HPoint) -> bool {
    let rows: Vec<Vec<Rational>> = [p1, p2, p3, p4].iter().map(|p| p.coords().to_vec()).collect();
    determinant(&rows).is_zero()
}

/// An affine point of the plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(int(x), int(y))
    }
}

/// Twice the signed area of the triangle; zero iff collinear.
pub fn orientation(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Records how a central projection was realised: the image plane is
/// `x[target_axis] = 0`, and the affine chart divides the remaining three
/// coordinates `y` by `weights · y`, reading off `y[u_axis]` and `y[v_axis]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionChart {
    pub target_axis: usize,
    pub weights: [i64; 3],
    pub u_axis: usize,
    pub v_axis: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projected {
    pub point: Point2,
    pub chart: ProjectionChart,
}

fn target_axis(center: &HPoint) -> usize {
    center.coords().iter().position(|x| !x.is_zero()).expect("canonical points are nonzero")
}

/// Image of `q` in the plane `x[axis] = 0`, as homogeneous coordinates of
/// that plane (the remaining three coordinates in order).
fn image_in_plane(center: &HPoint, q: &HPoint, axis: usize) -> Result<[Rational; 3]> {
    if center == q {
        return Err(Error::ProjectionCenter);
    }
    let c = center.coords();
    let t = &q.coords()[axis] / &c[axis];
    let full: Vec<Rational> = (0..4).map(|i| &q.coords()[i] - &t * &c[i]).collect();
    let rest: Vec<Rational> = (0..4).filter(|&i| i != axis).map(|i| full[i].clone()).collect();
    Ok([rest[0].clone(), rest[1].clone(), rest[2].clone()])
}

fn apply_chart(y: &[Rational; 3], chart: &ProjectionChart) -> Result<Point2> {
    let w: Rational = y.iter().zip(chart.weights).map(|(a, k)| a * int(k)).sum();
    if w.is_zero() {
        return Err(Error::AtInfinity);
    }
    Ok(Point2::new(&y[chart.u_axis] / &w, &y[chart.v_axis] / &w))
}

fn chart_for(weights: [i64; 3]) -> ProjectionChart {
    let last = (0..3).rev().find(|&i| weights[i] != 0).expect("nonzero weights");
    let others: Vec<usize> = (0..3).filter(|&i| i != last).collect();
    ProjectionChart { target_axis: 0, weights, u_axis: others[0], v_axis: others[1] }
}

/// Central projection from `center` onto the first coordinate plane not
/// through it, read in the chart that divides by the last remaining
/// coordinate.
pub fn project_from(center: &HPoint, q: &HPoint) -> Result<Projected> {
    let axis = target_axis(center);
    let y = image_in_plane(center, q, axis)?;
    let chart = ProjectionChart { target_axis: axis, ..chart_for([0, 0, 1]) };
    let point = apply_chart(&y, &chart)?;
    Ok(Projected { point, chart })
}

/// Projects a whole set, choosing the first chart in a fixed sequence that
/// keeps every image affine. Collinearity is chart independent.
pub fn project_all(center: &HPoint, qs: &[HPoint]) -> Result<(Vec<Point2>, ProjectionChart)> {
    let axis = target_axis(center);
    let images = qs.iter().map(|q| image_in_plane(center, q, axis)).collect::<Result<Vec<_>>>()?;
    let fixed = [[0, 0, 1], [0, 1, 0], [1, 0, 0]];
    let candidates = fixed.into_iter().chain((1..).map(|k: i64| [k * k, k, 1]));
    for weights in candidates.take(images.len() * 2 + 8) {
        let chart = ProjectionChart { target_axis: axis, ..chart_for(weights) };
        if let Ok(points) = images.iter().map(|y| apply_chart(y, &chart)).collect() {
            return Ok((points, chart));
        }
    }
    Err(Error::AtInfinity)
}

/// Inverse stereographic projection onto x0²+x1²+x2² = x3², from the north
/// pole [0,0,1,1].
pub fn stereo_lift(pt: &Point2) -> HPoint {
    let norm = &pt.x * &pt.x + &pt.y * &pt.y;
    HPoint::new([int(2) * &pt.x, int(2) * &pt.y, &norm - int(1), norm + int(1)]).expect("last coordinate is at least 1")
}

pub fn north_pole() -> HPoint {
    HPoint::from_ints([0, 0, 1, 1]).expect("nonzero")
}

/// Homogeneous polynomial in x0..x3, as a map from exponent tuples to
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousSurface {
    degree: u32,
    coefficients: BTreeMap<[u32; 4], Rational>,
}

impl HomogeneousSurface {
    pub fn new(degree: u32, terms: impl IntoIterator<Item = ([u32; 4], Rational)>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::invalid("surface degree must be positive"));
        }
        let mut coefficients: BTreeMap<[u32; 4], Rational> = BTreeMap::new();
        for (exp, c) in terms {
            if exp.iter().sum::<u32>() != degree {
                return Err(Error::invalid(format!("monomial {exp:?} has the wrong degree")));
            }
            *coefficients.entry(exp).or_insert_with(Rational::zero) += c;
        }
        coefficients.retain(|_, c| !c.is_zero());
        if coefficients.is_empty() {
            return Err(Error::invalid("surface polynomial is identically zero"));
        }
        Ok(HomogeneousSurface { degree, coefficients })
    }

    /// x^T A x for a symmetric 4x4 matrix.
    pub fn quadric(a: &[[Rational; 4]; 4]) -> Result<Self> {
        let mut terms = Vec::new();
        for i in 0..4 {
            for j in i..4 {
                let mut exp = [0u32; 4];
                exp[i] += 1;
                exp[j] += 1;
                let c = if i == j { a[i][j].clone() } else { &a[i][j] + &a[j][i] };
                terms.push((exp, c));
            }
        }
        Self::new(2, terms)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficients(&self) -> &BTreeMap<[u32; 4], Rational> {
        &self.coefficients
    }

    pub fn eval(&self, z: &HPoint) -> Rational {
        self.coefficients.iter().map(|(exp, c)| c * monomial(exp, z.coords())).sum()
    }

    /// D_order f evaluated at z.
    pub fn derivative_at(&self, order: &[u32; 4], z: &HPoint) -> Rational {
        let mut total = Rational::zero();
        for (exp, c) in &self.coefficients {
            if (0..4).any(|k| exp[k] < order[k]) {
                continue;
            }
            let mut factor = BigInt::one();
            let mut rest = [0u32; 4];
            for k in 0..4 {
                for m in 0..order[k] {
                    factor *= exp[k] - m;
                }
                rest[k] = exp[k] - order[k];
            }
            total += c * Rational::from_integer(factor) * monomial(&rest, z.coords());
        }
        total
    }
}

fn monomial(exp: &[u32; 4], x: &[Rational; 4]) -> Rational {
    let mut acc = Rational::one();
    for (e, v) in exp.iter().zip(x) {
        for _ in 0..*e {
            acc *= v;
        }
    }
    acc
}

/// All exponent 4-tuples of total degree `d`.
pub fn multi_indices(d: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                out.push([a, b, c, d - a - b - c]);
            }
        }
    }
    out
}

/// z is a vertex of Z(f) iff every derivative D_i f with |i| = deg f − 1
/// vanishes at z. For quadrics this is the vanishing of the gradient.
pub fn is_cone_vertex(surface: &HomogeneousSurface, z: &HPoint) -> bool {
    multi_indices(surface.degree() - 1).iter().all(|order| surface.derivative_at(order, z).is_zero())
}
