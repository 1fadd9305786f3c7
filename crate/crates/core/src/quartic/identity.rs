//! Exact checks of the partial-derivative identity for the fourth
//! intersection t4(t1, t2, t3).
//!
//! Writing F = t4·A(t1,t2,t3) + B(t1,t2,t3), we have t4 = −B/A and
//! ∂t4/∂ti = −(B_i·A − B·A_i)/A², so the quotient of the two partials is
//! (B_2·A − B·A_2) / (B_3·A − B·A_3).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quartic::curve::QuarticCurve;
use crate::rational::{int, Rational};

/// A, B and their partials in t2 and t3 at one point.
struct Split {
    a: Rational,
    b: Rational,
    a2: Rational,
    b2: Rational,
    a3: Rational,
    b3: Rational,
}

fn split(curve: &QuarticCurve, t1: &Rational, t2: &Rational, t3: &Rational) -> Split {
    let (s, r, q, p) = (curve.s(), curve.r(), curve.q(), curve.p());
    let e1 = t1 + t2 + t3;
    let e2 = t1 * t2 + t1 * t3 + t2 * t3;
    let e3 = t1 * t2 * t3;
    let a = &e3 + s * &e2 + r * &e1 + q;
    let b = s * &e3 + r * &e2 + q * &e1 + p;
    // ∂e1 = 1, ∂e2 = sum of the other two, ∂e3 = product of the other two.
    let partial = |x: &Rational, y: &Rational| {
        let d2 = x + y;
        let d3 = x * y;
        (&d3 + s * &d2 + r, s * &d3 + r * &d2 + q)
    };
    let (a2, b2) = partial(t1, t3);
    let (a3, b3) = partial(t1, t2);
    Split { a, b, a2, b2, a3, b3 }
}

fn quotient_parts(curve: &QuarticCurve, t1: &Rational, t2: &Rational, t3: &Rational) -> (Rational, Rational, Rational) {
    let x = split(curve, t1, t2, t3);
    let num = &x.b2 * &x.a - &x.b * &x.a2;
    let den = &x.b3 * &x.a - &x.b * &x.a3;
    (num, den, x.a)
}

/// The polynomial h(t1, t2) in the denominator of the identity.
pub fn h_poly(curve: &QuarticCurve, t1: &Rational, t2: &Rational) -> Rational {
    let (p, q, r, s) = (curve.p(), curve.q(), curve.r(), curve.s());
    let prod = t1 * t2;
    let sum = t1 + t2;
    (s * s - r) * &prod * &prod
        + (r * s - q) * &prod * &sum
        + (r * r - q * s) * (t1 * t1 + t2 * t2)
        + (r * r - p) * &prod
        + (q * r - p * s) * &sum
        + q * q
        - p * r
}

fn guarded(curve: &QuarticCurve, t1: &Rational, t2: &Rational, t3: &Rational) -> Result<Rational> {
    if h_poly(curve, t1, t2).is_zero() {
        return Err(Error::Guard("h(t1, t2) = 0"));
    }
    let (num, den, a) = quotient_parts(curve, t1, t2, t3);
    if a.is_zero() {
        return Err(Error::Guard("t4 is at infinity (A = 0)"));
    }
    if den.is_zero() {
        return Err(Error::Guard("∂t4/∂t3 = 0"));
    }
    Ok(num / den)
}

/// The quotient (∂t4/∂t2)/(∂t4/∂t3) at one point.
pub fn partial_quotient(curve: &QuarticCurve, t1: &Rational, t2: &Rational, t3: &Rational) -> Result<Rational> {
    guarded(curve, t1, t2, t3)
}

/// True iff the quotient of partials takes one value over all samples of t1.
pub fn quotient_independence_check(
    curve: &QuarticCurve,
    t1_samples: &[Rational],
    t2: &Rational,
    t3: &Rational,
) -> Result<bool> {
    let values = t1_samples.iter().map(|t1| guarded(curve, t1, t2, t3)).collect::<Result<Vec<_>>>()?;
    Ok(values.windows(2).all(|w| w[0] == w[1]))
}

/// Lagrange interpolation; coefficients in increasing degree.
pub fn interpolate(nodes: &[Rational], values: &[Rational]) -> Vec<Rational> {
    let n = nodes.len();
    let mut coeffs = vec![Rational::zero(); n];
    for i in 0..n {
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for j in (0..n).filter(|&j| j != i) {
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &nodes[j];
            }
            basis = next;
            denom *= &nodes[i] - &nodes[j];
        }
        let scale = &values[i] / denom;
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &scale;
        }
    }
    coeffs
}

pub fn poly_eval(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

pub fn poly_derivative(coeffs: &[Rational]) -> Vec<Rational> {
    coeffs.iter().enumerate().skip(1).map(|(k, c)| c * int(k as i64)).collect()
}

/// Left side: ∂/∂t1 of the quotient of partials, from the numerator and
/// denominator polynomials in t1 recovered at five nodes.
pub fn identity_lhs(curve: &QuarticCurve, t1: &Rational, t2: &Rational, t3: &Rational) -> Result<Rational> {
    guarded(curve, t1, t2, t3)?;
    let nodes: Vec<Rational> = (0..5).map(int).collect();
    let (nums, dens): (Vec<_>, Vec<_>) = nodes
        .iter()
        .map(|x| {
            let (n, d, _) = quotient_parts(curve, x, t2, t3);
            (n, d)
        })
        .unzip();
    let num = interpolate(&nodes, &nums);
    let den = interpolate(&nodes, &dens);
    let (n0, d0) = (poly_eval(&num, t1), poly_eval(&den, t1));
    let (n1, d1) = (poly_eval(&poly_derivative(&num), t1), poly_eval(&poly_derivative(&den), t1));
    Ok((n1 * &d0 - n0 * &d1) / (&d0 * &d0))
}

/// Right side: cat · F(t1, t1, t2, t3) · (t3 − t2) / h(t1, t2)².
pub fn identity_rhs(curve: &QuarticCurve, t1: &Rational, t2: &Rational, t3: &Rational) -> Result<Rational> {
    let h = h_poly(curve, t1, t2);
    if h.is_zero() {
        return Err(Error::Guard("h(t1, t2) = 0"));
    }
    let f = curve.coplanarity_form([t1, t1, t2, t3]);
    Ok(curve.catalecticant() * f * (t3 - t2) / (&h * &h))
}

pub fn rsz_identity_check(curve: &QuarticCurve, t1: &Rational, t2: &Rational, t3: &Rational) -> Result<bool> {
    Ok(identity_lhs(curve, t1, t2, t3)? == identity_rhs(curve, t1, t2, t3)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn independence_on_minus_one_curve() {
        let curve = QuarticCurve::from_ints(-1, 0, 0, 0).unwrap();
        assert!(quotient_independence_check(&curve, &ints(&[1, 2, 3, 5]), &int(7), &int(11)).unwrap());
    }

    #[test]
    fn dependence_on_second_species_curve() {
        let curve = QuarticCurve::from_ints(2, 3, 5, 7).unwrap();
        assert!(!quotient_independence_check(&curve, &ints(&[1, 2, 3, 5]), &int(7), &int(11)).unwrap());
    }

    #[test]
    fn single_sample_is_vacuous() {
        let curve = QuarticCurve::from_ints(2, 3, 5, 7).unwrap();
        assert!(quotient_independence_check(&curve, &ints(&[4]), &int(7), &int(11)).unwrap());
    }

    #[test]
    fn identity_at_small_integers() {
        let curve = QuarticCurve::from_ints(2, 3, 5, 7).unwrap();
        assert!(rsz_identity_check(&curve, &int(1), &int(2), &int(3)).unwrap());
        assert!(rsz_identity_check(&curve, &frac(-3, 2), &frac(5, 7), &int(9)).unwrap());
    }

    #[test]
    fn equal_t2_t3_gives_zero_on_both_sides() {
        let curve = QuarticCurve::from_ints(2, 3, 5, 7).unwrap();
        assert!(identity_rhs(&curve, &int(1), &int(4), &int(4)).unwrap().is_zero());
        assert!(rsz_identity_check(&curve, &int(1), &int(4), &int(4)).unwrap());
    }

    #[test]
    fn first_species_both_sides_vanish() {
        let curve = QuarticCurve::from_ints(0, 1, 1, 1).unwrap();
        assert!(identity_lhs(&curve, &int(2), &int(3), &int(5)).unwrap().is_zero());
        assert!(rsz_identity_check(&curve, &int(2), &int(3), &int(5)).unwrap());
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let nodes = ints(&[0, 1, 2, 3, 4]);
        let values: Vec<Rational> = nodes.iter().map(|x| x * x * x - int(2) * x + int(1)).collect();
        assert_eq!(interpolate(&nodes, &values), ints(&[1, -2, 0, 1, 0]));
    }
}
