//! First/second species via the quadrics containing the curve.
//!
//! A quadric x^T A x contains the curve iff the degree-8 polynomial obtained
//! by substituting the parametrisation vanishes. The coefficients of t⁸..t⁵
//! force a11 = a12 = 0, a22 = −2a13 and a23 = −a14, leaving a 5x6 system in
//! (a13, a14, a24, a33, a34, a44).

use num_traits::Zero;
use serde::Serialize;

use crate::linalg::{determinant, drop_column, nullspace, Matrix};
use crate::quartic::curve::QuarticCurve;
use crate::rational::{int, Rational};

pub type SymMatrix4 = [[Rational; 4]; 4];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Species {
    First,
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpeciesReport {
    pub species: Species,
    pub catalecticant: Rational,
    pub pencil_basis: Vec<SymMatrix4>,
    pub nullity: usize,
}

impl SpeciesReport {
    /// First ⇔ nullity ≥ 2 ⇔ catalecticant = 0.
    pub fn consistent(&self) -> bool {
        let by_nullity = self.nullity >= 2;
        let by_cat = self.catalecticant.is_zero();
        by_nullity == by_cat && (self.species == Species::First) == by_nullity
    }
}

/// Rows are the coefficients of t⁴, t³, t², t¹, t⁰.
pub fn species_system(curve: &QuarticCurve) -> Matrix {
    let (p, q, r, s) = (curve.p(), curve.q(), curve.r(), curve.s());
    let z = || Rational::zero();
    let two = int(2);
    vec![
        vec![-&two * r, &two * s, two.clone(), int(1), z(), z()],
        vec![-&two * q, r.clone(), s.clone(), z(), int(1), z()],
        vec![-&two * p, -&two * q, z(), -&two * r, &two * s, int(1)],
        vec![z(), -p.clone(), q.clone(), z(), -r.clone(), s.clone()],
        vec![&two * (p * r - q * q), -&two * (p * s - q * r), &two * q * s, r * r, -&two * r * s, s * s],
    ]
}

/// Symmetric matrix from a nullvector (a13, a14, a24, a33, a34, a44).
pub fn quadric_from_nullvector(v: &[Rational]) -> SymMatrix4 {
    let [a13, a14, a24, a33, a34, a44] = [0, 1, 2, 3, 4, 5].map(|i| v[i].clone());
    let z = Rational::zero();
    [
        [z.clone(), z.clone(), a13.clone(), a14.clone()],
        [z.clone(), -int(2) * &a13, -a14.clone(), a24.clone()],
        [a13, -a14.clone(), a33, a34.clone()],
        [a14, a24, a34, a44],
    ]
}

/// x^T A x at the curve point with parameter t.
pub fn quadric_at(a: &SymMatrix4, curve: &QuarticCurve, t: &Rational) -> Rational {
    let x = curve.raw_point(t);
    let mut total = Rational::zero();
    for i in 0..4 {
        for j in 0..4 {
            total += &x[i] * &a[i][j] * &x[j];
        }
    }
    total
}

/// The quadric vanishes at nine distinct parameters, hence on the whole
/// curve (the restriction has degree at most 8).
pub fn contains_curve(a: &SymMatrix4, curve: &QuarticCurve) -> bool {
    (-4..=4).all(|t| quadric_at(a, curve, &int(t)).is_zero())
}

pub fn classify_species(curve: &QuarticCurve) -> SpeciesReport {
    let system = species_system(curve);
    let basis = nullspace(&system, 6);
    let nullity = basis.len();
    let pencil_basis = basis.iter().map(|v| quadric_from_nullvector(v)).collect();
    SpeciesReport {
        species: if nullity >= 2 { Species::First } else { Species::Second },
        catalecticant: curve.catalecticant(),
        pencil_basis,
        nullity,
    }
}

/// The six 5x5 minors, in the order where minor k (1-based) drops column
/// 7 − k of the system.
pub fn six_minors(curve: &QuarticCurve) -> [Rational; 6] {
    let system = species_system(curve);
    std::array::from_fn(|k| determinant(&drop_column(&system, 5 - k)))
}

/// Closed forms of the six minors: cat·(q² − pr)·(−4), cat·(qr − ps)·2,
/// cat·(qs − p)·(−4), cat·(r² − 2qs + p)·2, cat·(rs − q)·2, cat·(s² − r)·(−2).
pub fn factored_minors(curve: &QuarticCurve) -> [Rational; 6] {
    let (p, q, r, s) = (curve.p(), curve.q(), curve.r(), curve.s());
    let cat = curve.catalecticant();
    let factors = [q * q - p * r, q * r - p * s, q * s - p, r * r - int(2) * q * s + p, r * s - q, s * s - r];
    let constants = [-4, 2, -4, 2, 2, -2];
    std::array::from_fn(|k| int(constants[k]) * &cat * &factors[k])
}
