use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geom::HPoint;
use crate::rational::{format_rational, int, Rational};

/// Curve parameter on the projective line: a finite value or the point at
/// infinity, which maps to [1, 0, 0, 0].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    Finite(Rational),
    Infinity,
}

impl Param {
    pub fn int(n: i64) -> Self {
        Param::Finite(int(n))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Param::Finite(t) => Some(t),
            Param::Infinity => None,
        }
    }

    /// Homogeneous pair (u, w) with t = u / w.
    fn homogeneous(&self) -> (Rational, Rational) {
        match self {
            Param::Finite(t) => (t.clone(), Rational::one()),
            Param::Infinity => (Rational::one(), Rational::zero()),
        }
    }
}

impl From<Rational> for Param {
    fn from(t: Rational) -> Self {
        Param::Finite(t)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Finite(t) => write!(f, "{}", format_rational(t)),
            Param::Infinity => write!(f, "inf"),
        }
    }
}

/// Rational space quartic [t⁴ − p, t³ + q, t² − r, t + s].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuarticCurve {
    p: Rational,
    q: Rational,
    r: Rational,
    s: Rational,
}

impl QuarticCurve {
    /// Rejects the degenerate case r = s², q = s³, p = s⁴, where the
    /// parametrisation collapses onto a twisted cubic.
    pub fn new(p: Rational, q: Rational, r: Rational, s: Rational) -> Result<Self> {
        let s2 = &s * &s;
        let s3 = &s2 * &s;
        let s4 = &s3 * &s;
        if r == s2 && q == s3 && p == s4 {
            return Err(Error::DegenerateCurve);
        }
        Ok(QuarticCurve { p, q, r, s })
    }

    pub fn from_ints(p: i64, q: i64, r: i64, s: i64) -> Result<Self> {
        Self::new(int(p), int(q), int(r), int(s))
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }
    pub fn q(&self) -> &Rational {
        &self.q
    }
    pub fn r(&self) -> &Rational {
        &self.r
    }
    pub fn s(&self) -> &Rational {
        &self.s
    }

    /// Affine coordinate vector at a finite parameter, before canonical scaling.
    pub fn raw_point(&self, t: &Rational) -> [Rational; 4] {
        let t2 = t * t;
        let t3 = &t2 * t;
        let t4 = &t3 * t;
        [t4 - &self.p, t3 + &self.q, t2 - &self.r, t + &self.s]
    }

    pub fn point_at(&self, t: &Param) -> HPoint {
        match t {
            Param::Finite(t) => {
                HPoint::new(self.raw_point(t)).expect("last two coordinates cannot vanish together with the first two")
            }
            Param::Infinity => HPoint::basis(0),
        }
    }

    /// Derivative of the parametrisation, (4t³, 3t², 2t, 1).
    pub fn tangent(&self, t: &Rational) -> [Rational; 4] {
        let t2 = t * t;
        [int(4) * &t2 * t, int(3) * t2, int(2) * t, Rational::one()]
    }

    fn weight(&self, k: usize) -> Rational {
        match k {
            4 => Rational::one(),
            3 => self.s.clone(),
            2 => self.r.clone(),
            1 => self.q.clone(),
            _ => self.p.clone(),
        }
    }

    /// F(t1,t2,t3,t4) = t1t2t3t4 + s·e3 + r·e2 + q·e1 + p.
    pub fn coplanarity_form(&self, t: [&Rational; 4]) -> Rational {
        let e = elementary(&t.map(Clone::clone));
        &e[4] + &self.s * &e[3] + &self.r * &e[2] + &self.q * &e[1] + &self.p
    }

    /// Homogenised F on the projective line; an infinite parameter picks out
    /// the coefficient of its variable.
    pub fn coplanarity_form_projective(&self, t: [&Param; 4]) -> Rational {
        let hs: Vec<(Rational, Rational)> = t.iter().map(|x| x.homogeneous()).collect();
        let mut total = Rational::zero();
        for mask in 0u32..16 {
            let mut term = self.weight(mask.count_ones() as usize);
            if term.is_zero() {
                continue;
            }
            for (i, (u, w)) in hs.iter().enumerate() {
                term *= if mask & (1 << i) != 0 { u } else { w };
            }
            total += term;
        }
        total
    }

    /// Fourth intersection of the plane through three curve points.
    /// Errors when the plane is not determined (every parameter solves F).
    pub fn solve_fourth(&self, t: [&Param; 3]) -> Result<Param> {
        // F is linear in (u4, w4): F = u4·A + w4·B.
        let a = self.coplanarity_form_projective([t[0], t[1], t[2], &Param::Infinity]);
        let b = self.coplanarity_form_projective([t[0], t[1], t[2], &Param::Finite(Rational::zero())]);
        match (a.is_zero(), b.is_zero()) {
            (true, true) => Err(Error::IndeterminateFourth),
            (true, false) => Ok(Param::Infinity),
            _ => Ok(Param::Finite(-b / a)),
        }
    }

    /// t4 = −(s·e3 + r·e2 + q·e1 + p) / (e3 + s·e2 + r·e1 + q) over (t1, t2, t3).
    pub fn solve_t4(&self, t1: &Rational, t2: &Rational, t3: &Rational) -> Result<Param> {
        let e = elementary(&[t1.clone(), t2.clone(), t3.clone()]);
        let num = &self.s * &e[3] + &self.r * &e[2] + &self.q * &e[1] + &self.p;
        let den = &e[3] + &self.s * &e[2] + &self.r * &e[1] + &self.q;
        match (den.is_zero(), num.is_zero()) {
            (true, true) => Err(Error::IndeterminateFourth),
            (true, false) => Ok(Param::Infinity),
            _ => Ok(Param::Finite(-num / den)),
        }
    }

    /// p r − q² − p s² + 2 q r s − r³.
    pub fn catalecticant(&self) -> Rational {
        let (p, q, r, s) = (&self.p, &self.q, &self.r, &self.s);
        p * r - q * q - p * s * s + int(2) * q * r * s - r * r * r
    }
}

impl fmt::Display for QuarticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {}",
            format_rational(&self.p),
            format_rational(&self.q),
            format_rational(&self.r),
            format_rational(&self.s)
        )
    }
}

/// Elementary symmetric polynomials e0..en of the given values.
pub fn elementary(values: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); values.len() + 1];
    e[0] = Rational::one();
    for (k, v) in values.iter().enumerate() {
        for j in (1..=k + 1).rev() {
            let add = &e[j - 1] * v;
            e[j] += add;
        }
    }
    e
}
