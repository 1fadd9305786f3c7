//! Group-law coordinates on first-species quartics.

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::quartic::curve::{Param, QuarticCurve};
use crate::quartic::forms::fundamental_quartic;
use crate::quartic::species::{classify_species, Species};
use crate::quartic::sylvester::{apolar_exact, exact_cusp_factors, Apolar, LinearForm};
use crate::rational::{to_f64, Rational};

pub const RULE_TOLERANCE: f64 = 1e-8;
const VERIFY_SAMPLES: usize = 100;
const VERIFY_SEED: u64 = 0x5eed_0fc0_91a7;

/// Coordinates in which coplanarity becomes the group law: four parameters
/// are coplanar iff their images multiply to 1 (nodal) or sum to 0
/// (cuspidal).
#[derive(Clone, Debug, PartialEq)]
pub enum GroupModelQuartic {
    /// φ(t) = (a1·t + b1) / (a2·t + b2), with κ the fourth root absorbed into
    /// (a2, b2).
    NodalProduct { moebius: [Complex64; 4], kappa: Complex64 },
    /// ψ(t) = c/4 − d/(t + shift).
    CuspidalSum { c: Complex64, d: Complex64, shift: Complex64 },
}

impl GroupModelQuartic {
    pub fn kind(&self) -> &'static str {
        match self {
            GroupModelQuartic::NodalProduct { .. } => "nodal_product",
            GroupModelQuartic::CuspidalSum { .. } => "cuspidal_sum",
        }
    }

    pub fn coordinate(&self, t: Complex64) -> Complex64 {
        match self {
            GroupModelQuartic::NodalProduct { moebius: [a1, b1, a2, b2], .. } => (a1 * t + b1) / (a2 * t + b2),
            GroupModelQuartic::CuspidalSum { c, d, shift } => c / 4.0 - d / (t + shift),
        }
    }

    /// Parameter whose coordinate is `z`.
    pub fn pull_back(&self, z: Complex64) -> Complex64 {
        match self {
            GroupModelQuartic::NodalProduct { moebius: [a1, b1, a2, b2], .. } => (z * b2 - b1) / (a1 - z * a2),
            GroupModelQuartic::CuspidalSum { c, d, shift } => d / (c / 4.0 - z) - shift,
        }
    }

    /// Relative deviation of four parameters from the group rule.
    pub fn rule_residual(&self, ts: [Complex64; 4]) -> f64 {
        let zs = ts.map(|t| self.coordinate(t));
        match self {
            GroupModelQuartic::NodalProduct { .. } => (zs.iter().product::<Complex64>() - Complex64::one()).norm(),
            GroupModelQuartic::CuspidalSum { .. } => {
                let scale: f64 = zs.iter().map(|z| z.norm()).sum();
                zs.iter().sum::<Complex64>().norm() / scale.max(1.0)
            }
        }
    }

    /// Linear form in the denominator; its zero is excluded from samples.
    fn pole(&self, t: Complex64) -> Complex64 {
        match self {
            GroupModelQuartic::NodalProduct { moebius, .. } => moebius[2] * t + moebius[3],
            GroupModelQuartic::CuspidalSum { shift, .. } => t + shift,
        }
    }
}

fn from_apolar(apolar: Apolar) -> Result<GroupModelQuartic> {
    match apolar {
        Apolar::Single { .. } => Err(Error::DegenerateQuartic),
        Apolar::Pair { forms: [l1, l2], weights: [w1, w2] } => {
            let kappa = (-w2 / w1).powf(0.25);
            Ok(GroupModelQuartic::NodalProduct { moebius: [l1.a, l1.b, kappa * l2.a, kappa * l2.b], kappa })
        }
        Apolar::Cusp { linear, cubed } => Ok(cusp_model(linear, cubed)),
    }
}

fn cusp_model(linear: LinearForm, cubed: LinearForm) -> GroupModelQuartic {
    let a2 = cubed.a;
    let b2 = cubed.b / a2;
    let a1 = linear.a * a2.powi(3);
    let b1 = linear.b * a2.powi(3);
    GroupModelQuartic::CuspidalSum { c: a1, d: (a1 * b2 - b1) / 4.0, shift: b2 }
}

fn random_param(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-30i64..=30).into(), rng.gen_range(1i64..=12).into())
}

fn verify(curve: &QuarticCurve, model: &GroupModelQuartic) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < VERIFY_SAMPLES {
        attempts += 1;
        if attempts > 100 * VERIFY_SAMPLES {
            return Err(Error::Guard("too few admissible verification samples"));
        }
        let t: [Rational; 3] = std::array::from_fn(|_| random_param(&mut rng));
        let Ok(Param::Finite(t4)) = curve.solve_t4(&t[0], &t[1], &t[2]) else { continue };
        let ts = [&t[0], &t[1], &t[2], &t4].map(|x| Complex64::new(to_f64(x), 0.0));
        if ts.iter().any(|&x| model.pole(x).norm() < 1e-6 || x.norm() > 1e6) {
            continue;
        }
        let residual = model.rule_residual(ts);
        if residual.is_nan() || residual >= RULE_TOLERANCE {
            return Err(Error::Residual { residual, tolerance: RULE_TOLERANCE });
        }
        checked += 1;
    }
    Ok(())
}

pub fn group_parametrization(curve: &QuarticCurve) -> Result<GroupModelQuartic> {
    if classify_species(curve).species == Species::Second {
        return Err(Error::SecondSpecies);
    }
    let model = from_apolar(apolar_exact(&fundamental_quartic(curve))?)?;
    verify(curve, &model)?;
    Ok(model)
}

/// Exact cuspidal coordinate ψ(t) = c/4 − d/(t + shift) for curves whose
/// fundamental quartic is a rational L1·L2³.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspidalChart {
    pub c: Rational,
    pub d: Rational,
    pub shift: Rational,
}

impl CuspidalChart {
    pub fn new(curve: &QuarticCurve) -> Result<Self> {
        let (linear, cubed) = exact_cusp_factors(&fundamental_quartic(curve)).ok_or(Error::SecondSpecies)?;
        // The fundamental quartic is monic in λ, so the cubed form has a2 ≠ 0.
        let a2 = &cubed[0];
        let shift = &cubed[1] / a2;
        let a2_cubed = a2 * a2 * a2;
        let a1 = &linear[0] * &a2_cubed;
        let b1 = &linear[1] * &a2_cubed;
        let d = (&a1 * &shift - b1) / Rational::from_integer(4.into());
        if d.is_zero() {
            return Err(Error::DegenerateQuartic);
        }
        Ok(CuspidalChart { c: a1, d, shift })
    }

    /// None at the cusp parameter t = −shift.
    pub fn value(&self, t: &Param) -> Option<Rational> {
        let quarter = &self.c / Rational::from_integer(4.into());
        match t {
            Param::Infinity => Some(quarter),
            Param::Finite(t) => {
                let s = t + &self.shift;
                (!s.is_zero()).then(|| quarter - &self.d / s)
            }
        }
    }

    pub fn preimage(&self, k: &Rational) -> Param {
        let gap = &self.c / Rational::from_integer(4.into()) - k;
        if gap.is_zero() {
            Param::Infinity
        } else {
            Param::Finite(&self.d / gap - &self.shift)
        }
    }
}
