use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::quartic::curve::QuarticCurve;
use crate::rational::{int, Rational};

const BINOM4: [i64; 5] = [1, 4, 6, 4, 1];

/// c0·λ⁴ + 4c1·λ³μ + 6c2·λ²μ² + 4c3·λμ³ + c4·μ⁴.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryQuartic {
    c: [Rational; 5],
}

impl BinaryQuartic {
    pub fn new(c: [Rational; 5]) -> Result<Self> {
        if c.iter().all(Zero::is_zero) {
            return Err(Error::invalid("binary quartic is identically zero"));
        }
        Ok(BinaryQuartic { c })
    }

    pub fn from_ints(c: [i64; 5]) -> Result<Self> {
        Self::new(c.map(int))
    }

    /// Builds the form from plain monomial coefficients of λ⁴, λ³μ, …, μ⁴.
    pub fn from_monomials(m: [Rational; 5]) -> Result<Self> {
        let mut c = m;
        for (k, x) in c.iter_mut().enumerate() {
            *x /= int(BINOM4[k]);
        }
        Self::new(c)
    }

    pub fn coefficients(&self) -> &[Rational; 5] {
        &self.c
    }

    /// Plain monomial coefficients of λ⁴, λ³μ, …, μ⁴.
    pub fn monomials(&self) -> [Rational; 5] {
        let mut m = self.c.clone();
        for (k, x) in m.iter_mut().enumerate() {
            *x *= int(BINOM4[k]);
        }
        m
    }

    pub fn catalecticant_matrix(&self) -> [[Rational; 3]; 3] {
        let c = &self.c;
        [
            [c[0].clone(), c[1].clone(), c[2].clone()],
            [c[1].clone(), c[2].clone(), c[3].clone()],
            [c[2].clone(), c[3].clone(), c[4].clone()],
        ]
    }

    /// The form g(aλ + bμ, cλ + dμ).
    pub fn substitute(&self, a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Self {
        let g = self.monomials();
        let mut out: [Rational; 5] = std::array::from_fn(|_| Rational::zero());
        for (k, gk) in g.iter().enumerate() {
            if gk.is_zero() {
                continue;
            }
            // (aλ + bμ)^(4−k) (cλ + dμ)^k as coefficients of λ^(4−j) μ^j.
            let mut poly = vec![gk.clone()];
            for _ in 0..4 - k {
                poly = mul_linear(&poly, a, b);
            }
            for _ in 0..k {
                poly = mul_linear(&poly, c, d);
            }
            for (j, x) in poly.into_iter().enumerate() {
                out[j] += x;
            }
        }
        BinaryQuartic::from_monomials(out).unwrap_or_else(|_| self.clone())
    }
}

fn mul_linear(poly: &[Rational], a: &Rational, b: &Rational) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); poly.len() + 1];
    for (j, x) in poly.iter().enumerate() {
        out[j] += x * a;
        out[j + 1] += x * b;
    }
    out
}

/// g(λ, μ) = λ⁴ + 4sλ³μ + 6rλ²μ² + 4qλμ³ + pμ⁴.
pub fn fundamental_quartic(curve: &QuarticCurve) -> BinaryQuartic {
    BinaryQuartic { c: [int(1), curve.s().clone(), curve.r().clone(), curve.q().clone(), curve.p().clone()] }
}

/// Determinant of the 3x3 Hankel matrix [[c0,c1,c2],[c1,c2,c3],[c2,c3,c4]].
pub fn catalecticant(bq: &BinaryQuartic) -> Rational {
    let m = bq.catalecticant_matrix();
    let rows: Vec<Vec<Rational>> = m.iter().map(|r| r.to_vec()).collect();
    determinant(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_quartic_reads_off_coefficients() {
        let g = fundamental_quartic(&QuarticCurve::from_ints(1, 0, 0, 0).unwrap());
        assert_eq!(g, BinaryQuartic::from_ints([1, 0, 0, 0, 1]).unwrap());
        let g = fundamental_quartic(&QuarticCurve::from_ints(-1, 0, 0, 0).unwrap());
        assert_eq!(g, BinaryQuartic::from_ints([1, 0, 0, 0, -1]).unwrap());
        let g = fundamental_quartic(&QuarticCurve::from_ints(2, 3, 5, 7).unwrap());
        assert_eq!(g, BinaryQuartic::from_ints([1, 7, 5, 3, 2]).unwrap());
    }

    #[test]
    fn catalecticant_examples() {
        assert_eq!(catalecticant(&BinaryQuartic::from_ints([1, 0, 0, 0, 0]).unwrap()), int(0));
        assert_eq!(catalecticant(&BinaryQuartic::from_ints([1, 0, 1, 0, 0]).unwrap()), int(-1));
        assert_eq!(catalecticant(&BinaryQuartic::from_ints([1, 0, 0, 0, 1]).unwrap()), int(0));
    }

    #[test]
    fn catalecticant_matches_curve_formula() {
        for (p, q, r, s) in [(2, 3, 5, 7), (-1, 4, 0, 2), (9, -2, 3, -5)] {
            let c = QuarticCurve::from_ints(p, q, r, s).unwrap();
            assert_eq!(catalecticant(&fundamental_quartic(&c)), c.catalecticant());
        }
    }

    #[test]
    fn substitution_identity_and_swap() {
        let g = BinaryQuartic::from_ints([1, 7, 5, 3, 2]).unwrap();
        let (one, zero) = (int(1), int(0));
        assert_eq!(g.substitute(&one, &zero, &zero, &one), g);
        let swapped = g.substitute(&zero, &one, &one, &zero);
        assert_eq!(swapped, BinaryQuartic::from_ints([2, 3, 5, 7, 1]).unwrap());
    }

    #[test]
    fn zero_form_rejected() {
        assert!(BinaryQuartic::from_ints([0; 5]).is_err());
    }
}
