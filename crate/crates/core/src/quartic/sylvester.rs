//! Canonical forms of binary quartics with vanishing catalecticant.
//!
//! A kernel vector (k0, k1, k2) of the catalecticant matrix is an apolar
//! quadratic k0·a² + k1·ab + k2·b²; its roots (a : b) are the linear forms
//! aλ + bμ of the decomposition. Distinct roots give a sum of two fourth
//! powers, a double root gives L1·L2³, and a rank-one matrix a single fourth
//! power.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{nullspace, rank};
use crate::quartic::forms::{catalecticant, BinaryQuartic};
use crate::rational::{to_f64, Rational};

const BINOM4: [f64; 5] = [1.0, 4.0, 6.0, 4.0, 1.0];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Maximum normalised coefficient error of a reconstruction.
    pub residual: f64,
    /// Relative pivot size below which a float matrix entry counts as zero.
    pub rank: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { residual: 1e-9, rank: 1e-12 }
    }
}

/// The linear form aλ + bμ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearForm {
    pub a: Complex64,
    pub b: Complex64,
}

impl LinearForm {
    pub fn new(a: Complex64, b: Complex64) -> Self {
        LinearForm { a, b }
    }

    pub fn real(a: f64, b: f64) -> Self {
        LinearForm::new(Complex64::new(a, 0.0), Complex64::new(b, 0.0))
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.a * t + self.b
    }

    fn scaled(&self, k: Complex64) -> Self {
        LinearForm::new(self.a * k, self.b * k)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CanonicalForm {
    /// (aλ + bμ)⁴
    FourthPower(LinearForm),
    /// (a1λ + b1μ)⁴ + (a2λ + b2μ)⁴ with a1b2 ≠ b1a2
    PowerSum(LinearForm, LinearForm),
    /// (a1λ + b1μ)(a2λ + b2μ)³
    LinearTimesCube { linear: LinearForm, cubed: LinearForm },
}

impl CanonicalForm {
    pub fn name(&self) -> &'static str {
        match self {
            CanonicalForm::FourthPower(_) => "fourth_power",
            CanonicalForm::PowerSum(..) => "power_sum",
            CanonicalForm::LinearTimesCube { .. } => "linear_times_cube",
        }
    }

    /// Coefficients c0..c4 in the 1, 4, 6, 4, 1 basis.
    pub fn coefficients(&self) -> [Complex64; 5] {
        let m = match self {
            CanonicalForm::FourthPower(l) => product_monomials(&[*l; 4]),
            CanonicalForm::PowerSum(l1, l2) => {
                let (x, y) = (product_monomials(&[*l1; 4]), product_monomials(&[*l2; 4]));
                std::array::from_fn(|k| x[k] + y[k])
            }
            CanonicalForm::LinearTimesCube { linear, cubed } => product_monomials(&[*linear, *cubed, *cubed, *cubed]),
        };
        std::array::from_fn(|k| m[k] / BINOM4[k])
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub form: CanonicalForm,
    pub residual: f64,
}

/// Weighted structure before fourth roots of the weights are absorbed.
#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Apolar {
    Single { form: LinearForm, weight: Complex64 },
    Pair { forms: [LinearForm; 2], weights: [Complex64; 2] },
    Cusp { linear: LinearForm, cubed: LinearForm },
}

/// Monomial coefficients (λ⁴, λ³μ, …, μ⁴) of a product of four linear forms.
fn product_monomials(forms: &[LinearForm; 4]) -> [Complex64; 5] {
    let mut poly = vec![Complex64::one()];
    for l in forms {
        let mut next = vec![Complex64::zero(); poly.len() + 1];
        for (j, x) in poly.iter().enumerate() {
            next[j] += x * l.a;
            next[j + 1] += x * l.b;
        }
        poly = next;
    }
    std::array::from_fn(|k| poly[k])
}

fn to_complex(bq: &BinaryQuartic) -> [Complex64; 5] {
    bq.coefficients().clone().map(|x| Complex64::new(to_f64(&x), 0.0))
}

/// Solves min ‖x·u + y·v − c‖ over complex x, y via the normal equations.
fn least_squares2(u: &[Complex64; 5], v: &[Complex64; 5], c: &[Complex64; 5]) -> Option<[Complex64; 2]> {
    let ip = |x: &[Complex64; 5], y: &[Complex64; 5]| -> Complex64 { x.iter().zip(y).map(|(a, b)| a.conj() * b).sum() };
    let (uu, uv, vu, vv) = (ip(u, u), ip(u, v), ip(v, u), ip(v, v));
    let (uc, vc) = (ip(u, c), ip(v, c));
    let det = uu * vv - uv * vu;
    if det.norm() <= f64::EPSILON * (uu.norm() * vv.norm()) {
        return None;
    }
    Some([(uc * vv - uv * vc) / det, (uu * vc - vu * uc) / det])
}

/// c-basis vector of the fourth power of a linear form.
fn power_vector(l: &LinearForm) -> [Complex64; 5] {
    std::array::from_fn(|m| l.a.powi(4 - m as i32) * l.b.powi(m as i32))
}

fn unit(l: LinearForm) -> LinearForm {
    let n = (l.a.norm_sqr() + l.b.norm_sqr()).sqrt();
    l.scaled(Complex64::new(1.0 / n, 0.0))
}

/// Roots (a : b) of k0·a² + k1·ab + k2·b², assumed distinct.
fn distinct_roots(k: [Complex64; 3]) -> [LinearForm; 2] {
    let disc = (k[1] * k[1] - 4.0 * k[0] * k[2]).sqrt();
    let plus = k[1] + disc;
    let minus = k[1] - disc;
    let big = if plus.norm() >= minus.norm() { plus } else { minus };
    let q = -big / 2.0;
    // Roots a/b = q/k0 and k2/q, written homogeneously.
    [oriented(LinearForm::new(q, k[0])), oriented(LinearForm::new(k[2], q))]
}

/// Unit norm with the leading nonzero coefficient real and positive.
fn oriented(l: LinearForm) -> LinearForm {
    let l = unit(l);
    let lead = if l.a.norm() > 1e-12 { l.a } else { l.b };
    l.scaled(lead.conj() / lead.norm())
}

fn double_root(k: [Complex64; 3]) -> LinearForm {
    if k[0].norm() >= k[2].norm() {
        unit(LinearForm::new(-k[1] / (2.0 * k[0]), Complex64::one()))
    } else {
        unit(LinearForm::new(Complex64::one(), -k[1] / (2.0 * k[2])))
    }
}

fn single_from_coefficients(c: &[Complex64; 5]) -> (LinearForm, Complex64) {
    if c[0].norm() >= c[4].norm() {
        (LinearForm::new(Complex64::one(), c[1] / c[0]), c[0])
    } else {
        (LinearForm::new(c[3] / c[4], Complex64::one()), c[4])
    }
}

fn pair_from_roots(roots: [LinearForm; 2], c: &[Complex64; 5]) -> Result<Apolar> {
    let weights = least_squares2(&power_vector(&roots[0]), &power_vector(&roots[1]), c)
        .ok_or(Error::RankAmbiguous { ratio: 0.0, tolerance: 0.0 })?;
    Ok(Apolar::Pair { forms: roots, weights })
}

/// Finds M with L³·M equal to the form, by least squares on the monomials.
fn cusp_from_root(cubed: LinearForm, c: &[Complex64; 5]) -> Result<Apolar> {
    let target: [Complex64; 5] = std::array::from_fn(|k| c[k] * BINOM4[k]);
    let cube = product_monomials(&[cubed, cubed, cubed, LinearForm::real(1.0, 0.0)]);
    // λ·L³ has monomials cube[0..4] shifted as (λ⁴..λμ³); μ·L³ shifts by one.
    let with_lambda: [Complex64; 5] = std::array::from_fn(|k| if k < 4 { cube[k] } else { Complex64::zero() });
    let with_mu: [Complex64; 5] = std::array::from_fn(|k| if k >= 1 { cube[k - 1] } else { Complex64::zero() });
    let [alpha, beta] =
        least_squares2(&with_lambda, &with_mu, &target).ok_or(Error::RankAmbiguous { ratio: 0.0, tolerance: 0.0 })?;
    Ok(Apolar::Cusp { linear: LinearForm::new(alpha, beta), cubed })
}

/// Exact route for rational forms: rank and root multiplicity are decided
/// exactly, only the roots themselves are floating point.
pub(crate) fn apolar_exact(bq: &BinaryQuartic) -> Result<Apolar> {
    let h = bq.catalecticant_matrix();
    let rows: Vec<Vec<Rational>> = h.iter().map(|r| r.to_vec()).collect();
    let c = to_complex(bq);
    match rank(&rows) {
        3 => Err(Error::SecondSpecies),
        1 => {
            let (form, weight) = single_from_coefficients(&c);
            Ok(Apolar::Single { form, weight })
        }
        _ => {
            let k = nullspace(&rows, 3).remove(0);
            let disc = &k[1] * &k[1] - Rational::from_integer(4.into()) * &k[0] * &k[2];
            let kc = [0, 1, 2].map(|i| Complex64::new(to_f64(&k[i]), 0.0));
            if disc.is_zero() {
                let (linear, cubed) = exact_cusp_factors(bq).ok_or(Error::DegenerateQuartic)?;
                let f = |v: &[Rational; 2]| {
                    LinearForm::new(Complex64::new(to_f64(&v[0]), 0.0), Complex64::new(to_f64(&v[1]), 0.0))
                };
                let _ = kc;
                Ok(Apolar::Cusp { linear: f(&linear), cubed: f(&cubed) })
            } else {
                pair_from_roots(distinct_roots(kc), &c)
            }
        }
    }
}

/// Exact factors (linear, cubed) with form = linear · cubed³, when the
/// catalecticant kernel gives a rational double root.
pub fn exact_cusp_factors(bq: &BinaryQuartic) -> Option<([Rational; 2], [Rational; 2])> {
    let h = bq.catalecticant_matrix();
    let rows: Vec<Vec<Rational>> = h.iter().map(|r| r.to_vec()).collect();
    if rank(&rows) != 2 {
        return None;
    }
    let k = nullspace(&rows, 3).remove(0);
    let four = Rational::from_integer(4.into());
    if !(&k[1] * &k[1] - &four * &k[0] * &k[2]).is_zero() {
        return None;
    }
    let two = Rational::from_integer(2.into());
    let (a, b) = if !k[0].is_zero() {
        (-&k[1] / (&two * &k[0]), Rational::one())
    } else {
        (Rational::one(), -&k[1] / (&two * &k[2]))
    };
    let g = bq.monomials();
    let three = Rational::from_integer(3.into());
    let cube = [&a * &a * &a, &three * &a * &a * &b, &three * &a * &b * &b, &b * &b * &b];
    // g_k = α·cube_k + β·cube_{k−1}
    let (alpha, beta) = if !cube[0].is_zero() {
        let alpha = &g[0] / &cube[0];
        let beta = (&g[1] - &alpha * &cube[1]) / &cube[0];
        (alpha, beta)
    } else {
        // a = 0, so L = b·μ and only the last two monomials survive.
        (&g[3] / &cube[3], &g[4] / &cube[3])
    };
    let ok = (0..5).all(|k| {
        let mut v = Rational::zero();
        if k < 4 {
            v += &alpha * &cube[k];
        }
        if k >= 1 {
            v += &beta * &cube[k - 1];
        }
        v == g[k]
    });
    ok.then_some(([alpha, beta], [a, b]))
}

/// Full-pivot elimination on a complex 3x3 matrix; pivot magnitudes in
/// elimination order.
fn pivot_magnitudes(mut m: [[Complex64; 3]; 3]) -> Vec<f64> {
    let mut out = Vec::new();
    let mut rows: Vec<usize> = vec![0, 1, 2];
    let mut cols: Vec<usize> = vec![0, 1, 2];
    while !rows.is_empty() {
        let mut best = (0, 0, -1.0);
        for (ri, &r) in rows.iter().enumerate() {
            for (ci, &c) in cols.iter().enumerate() {
                let v = m[r][c].norm();
                if v > best.2 {
                    best = (ri, ci, v);
                }
            }
        }
        let (ri, ci, v) = best;
        out.push(v);
        if v == 0.0 {
            break;
        }
        let (pr, pc) = (rows.remove(ri), cols.remove(ci));
        for &r in &rows {
            let f = m[r][pc] / m[pr][pc];
            for &c in &cols {
                let sub = f * m[pr][c];
                m[r][c] -= sub;
            }
            m[r][pc] = Complex64::zero();
        }
    }
    out
}

fn cross(u: &[Complex64; 3], v: &[Complex64; 3]) -> [Complex64; 3] {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

/// Floating-point route for complex coefficients.
pub(crate) fn apolar_complex(c: &[Complex64; 5], tol: &Tolerances) -> Result<Apolar> {
    let h = [[c[0], c[1], c[2]], [c[1], c[2], c[3]], [c[2], c[3], c[4]]];
    let pivots = pivot_magnitudes(h);
    let lead = pivots[0];
    if lead == 0.0 {
        return Err(Error::invalid("binary quartic is identically zero"));
    }
    let ambiguous_above = tol.rank.sqrt();
    let mut numeric_rank = 1;
    for &p in &pivots[1..] {
        let ratio = p / lead;
        if ratio <= tol.rank {
            break;
        }
        if ratio < ambiguous_above {
            return Err(Error::RankAmbiguous { ratio, tolerance: tol.rank });
        }
        numeric_rank += 1;
    }
    match numeric_rank {
        3 => Err(Error::SecondSpecies),
        1 => {
            let (form, weight) = single_from_coefficients(c);
            Ok(Apolar::Single { form, weight })
        }
        _ => {
            let candidates = [cross(&h[0], &h[1]), cross(&h[0], &h[2]), cross(&h[1], &h[2])];
            let norm = |v: &[Complex64; 3]| v.iter().map(|x| x.norm_sqr()).sum::<f64>();
            let k = candidates.into_iter().max_by(|x, y| norm(x).total_cmp(&norm(y))).expect("three candidates");
            let disc = k[1] * k[1] - 4.0 * k[0] * k[2];
            let scale = k[1].norm_sqr() + 4.0 * (k[0] * k[2]).norm();
            if disc.norm() <= ambiguous_above * scale {
                cusp_from_root(double_root(k), c)
            } else {
                pair_from_roots(distinct_roots(k), c)
            }
        }
    }
}

fn fourth_root(w: Complex64) -> Complex64 {
    w.powf(0.25)
}

fn into_form(apolar: Apolar) -> CanonicalForm {
    match apolar {
        Apolar::Single { form, weight } => CanonicalForm::FourthPower(form.scaled(fourth_root(weight))),
        Apolar::Pair { forms, weights } => {
            CanonicalForm::PowerSum(forms[0].scaled(fourth_root(weights[0])), forms[1].scaled(fourth_root(weights[1])))
        }
        Apolar::Cusp { linear, cubed } => CanonicalForm::LinearTimesCube { linear, cubed },
    }
}

/// Max coefficient error, normalised by |c0| (or the largest coefficient
/// when c0 vanishes).
pub fn reconstruction_residual(form: &CanonicalForm, c: &[Complex64; 5]) -> f64 {
    let scale = if c[0].norm() > 0.0 { c[0].norm() } else { c.iter().map(|x| x.norm()).fold(0.0, f64::max) };
    let rec = form.coefficients();
    rec.iter().zip(c).map(|(x, y)| (x - y).norm() / scale).fold(0.0, f64::max)
}

fn finish(apolar: Apolar, c: &[Complex64; 5], tol: &Tolerances) -> Result<Decomposition> {
    let form = into_form(apolar);
    let residual = reconstruction_residual(&form, c);
    if residual.is_nan() || residual >= tol.residual {
        return Err(Error::Residual { residual, tolerance: tol.residual });
    }
    Ok(Decomposition { form, residual })
}

pub fn sylvester_decompose(bq: &BinaryQuartic) -> Result<Decomposition> {
    sylvester_decompose_with(bq, &Tolerances::default())
}

pub fn sylvester_decompose_with(bq: &BinaryQuartic, tol: &Tolerances) -> Result<Decomposition> {
    if !catalecticant(bq).is_zero() {
        return Err(Error::SecondSpecies);
    }
    finish(apolar_exact(bq)?, &to_complex(bq), tol)
}

/// Decomposition of a form given by floating-point coefficients c0..c4.
pub fn sylvester_decompose_complex(c: [Complex64; 5], tol: &Tolerances) -> Result<Decomposition> {
    finish(apolar_complex(&c, tol)?, &c, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quartic::curve::QuarticCurve;
    use crate::quartic::forms::fundamental_quartic;
    use crate::rational::frac;

    fn close(x: Complex64, y: Complex64) -> bool {
        (x - y).norm() < 1e-12
    }

    #[test]
    fn sum_of_fourth_powers_of_coordinates() {
        let bq = BinaryQuartic::from_ints([1, 0, 0, 0, 1]).unwrap();
        let d = sylvester_decompose(&bq).unwrap();
        let CanonicalForm::PowerSum(l1, l2) = d.form else { panic!("expected power sum, got {:?}", d.form) };
        // Up to fourth roots of unity, the forms are λ and μ in some order.
        let mut forms = [l1, l2];
        forms.sort_by(|x, y| y.a.norm().total_cmp(&x.a.norm()));
        assert!((forms[0].a.norm() - 1.0).abs() < 1e-12 && forms[0].b.norm() < 1e-12);
        assert!((forms[1].b.norm() - 1.0).abs() < 1e-12 && forms[1].a.norm() < 1e-12);
        assert!(d.residual < 1e-12);
    }

    #[test]
    fn lambda_cubed_mu() {
        let bq = BinaryQuartic::new([0, 1, 0, 0, 0].map(|_| Rational::zero())).err();
        assert!(bq.is_some());
        let mut c: [Rational; 5] = std::array::from_fn(|_| Rational::zero());
        c[1] = frac(1, 4);
        let bq = BinaryQuartic::new(c).unwrap();
        let d = sylvester_decompose(&bq).unwrap();
        let CanonicalForm::LinearTimesCube { linear, cubed } = d.form else { panic!("{:?}", d.form) };
        // l1 = μ, l2 = λ up to scaling with product one.
        assert!(linear.a.norm() < 1e-12 && cubed.b.norm() < 1e-12);
        assert!(close(linear.b * cubed.a.powi(3), Complex64::one()));
    }

    #[test]
    fn cat_zero_fundamental_quartic() {
        let bq = fundamental_quartic(&QuarticCurve::from_ints(0, 1, 1, 1).unwrap());
        let d = sylvester_decompose(&bq).unwrap();
        assert!(d.residual < 1e-9);
    }

    #[test]
    fn second_species_rejected() {
        let bq = fundamental_quartic(&QuarticCurve::from_ints(2, 3, 5, 7).unwrap());
        assert_eq!(sylvester_decompose(&bq), Err(Error::SecondSpecies));
    }

    #[test]
    fn single_fourth_power() {
        // (λ + 2μ)⁴ has c = (1, 2, 4, 8, 16).
        let bq = BinaryQuartic::from_ints([1, 2, 4, 8, 16]).unwrap();
        let d = sylvester_decompose(&bq).unwrap();
        assert!(matches!(d.form, CanonicalForm::FourthPower(_)));
        assert!(d.residual < 1e-12);
    }

    #[test]
    fn exact_cusp_factors_of_t_cubed_times_shift() {
        // t³(t + 4) = λ⁴ + 4λ³μ, i.e. c = (1, 1, 0, 0, 0).
        let bq = BinaryQuartic::from_ints([1, 1, 0, 0, 0]).unwrap();
        let (linear, cubed) = exact_cusp_factors(&bq).unwrap();
        assert_eq!(cubed, [Rational::one(), Rational::zero()]);
        assert_eq!(linear, [Rational::one(), Rational::from_integer(4.into())]);
    }

    #[test]
    fn complex_route_matches_exact_route() {
        let bq = BinaryQuartic::from_ints([1, 0, 0, 0, -1]).unwrap();
        let c = to_complex(&bq);
        let d = sylvester_decompose_complex(c, &Tolerances::default()).unwrap();
        assert!(matches!(d.form, CanonicalForm::PowerSum(..)));
        let near_cat_nonzero = [1.0, 0.0, 1e-3, 0.0, 1.0].map(|x| Complex64::new(x, 0.0));
        assert_eq!(sylvester_decompose_complex(near_cat_nonzero, &Tolerances::default()), Err(Error::SecondSpecies));
    }

    #[test]
    fn ambiguous_rank_reported() {
        let c = [1.0, 0.0, 1e-9, 0.0, 1.0].map(|x| Complex64::new(x, 0.0));
        assert!(matches!(sylvester_decompose_complex(c, &Tolerances::default()), Err(Error::RankAmbiguous { .. })));
    }
}
