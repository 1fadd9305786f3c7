//! Generators for the extremal families: prisms, antiprisms, coset models
//! and the parameter sets on first-species quartics.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::configs::group::{GroupConfig, Placement};
use crate::configs::{GeomConfig, Geometry};
use crate::error::{Error, Result};
use crate::quartic::{group_parametrization, CuspidalChart, GroupModelQuartic, Param, QuarticCurve};
use crate::rational::{int, Rational};

pub const DEFAULT_EPSILON: f64 = 1e-9;

fn polygon_pair(m: usize, placement: Placement, family: &str) -> Result<(GeomConfig, GroupConfig)> {
    let model = GroupConfig::circle_pair(m, placement)?;
    let half = match placement {
        Placement::Aligned => 0.0,
        Placement::Offset => 1.0,
    };
    let mut points = Vec::with_capacity(2 * m);
    for k in 0..m {
        let theta = 2.0 * k as f64 * PI / m as f64;
        points.push([theta.cos(), theta.sin(), 1.0]);
    }
    for k in 0..m {
        let theta = (2.0 * k as f64 + half) * PI / m as f64;
        points.push([theta.cos(), theta.sin(), -1.0]);
    }
    let geometry = Geometry::Float { points, epsilon: DEFAULT_EPSILON };
    Ok((GeomConfig::new(geometry, format!("{family}:{m}"), None), model))
}

/// Vertices (cos 2kπ/m, sin 2kπ/m, ±1); indices below m are the top circle.
pub fn prism(m: usize) -> Result<(GeomConfig, GroupConfig)> {
    polygon_pair(m, Placement::Aligned, "prism")
}

/// Top polygon as for the prism, bottom vertex k at angle (2k+1)π/m.
pub fn antiprism(m: usize) -> Result<(GeomConfig, GroupConfig)> {
    polygon_pair(m, Placement::Offset, "antiprism")
}

pub fn coset_cyclic(n: usize, c0: usize) -> Result<GroupConfig> {
    GroupConfig::cyclic(n, c0)
}

pub fn coset_two_component(n: usize, c0: usize, parity: usize) -> Result<GroupConfig> {
    GroupConfig::two_component(n, c0, parity)
}

/// n-th roots of unity in the multiplicative coordinate of a nodal curve,
/// with their parameters pulled back through the Möbius map.
#[derive(Clone, Debug, PartialEq)]
pub struct NodalRoots {
    pub model: GroupConfig,
    pub params: Vec<Complex64>,
}

pub fn nodal_roots_config(curve: &QuarticCurve, n: usize) -> Result<NodalRoots> {
    let group = group_parametrization(curve)?;
    if !matches!(group, GroupModelQuartic::NodalProduct { .. }) {
        return Err(Error::invalid("curve is cuspidal; use the integer parameter set"));
    }
    let model = GroupConfig::cyclic(n, 0)?;
    let params = (0..n).map(|k| group.pull_back(Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64))).collect();
    Ok(NodalRoots { model, params })
}

/// The n integers closest to zero, -⌊n/2⌋ ..= ⌈n/2⌉ - 1.
pub fn centered_integers(n: usize) -> Vec<i64> {
    let lo = -((n / 2) as i64);
    (lo..lo + n as i64).collect()
}

/// Parameters whose additive coordinates are the n integers closest to zero.
#[derive(Clone, Debug, PartialEq)]
pub struct CuspIntegers {
    pub chart: CuspidalChart,
    pub values: Vec<i64>,
    pub params: Vec<Param>,
}

/// The cuspidal curve (p, q, r, s) = (0, 0, 0, 1), with ψ(t) = 1/4 + 1/t.
pub fn canonical_cusp_curve() -> QuarticCurve {
    QuarticCurve::from_ints(0, 0, 0, 1).expect("non-degenerate")
}

pub fn cuspidal_integers_config(n: usize) -> Result<CuspIntegers> {
    cuspidal_integers_on(&canonical_cusp_curve(), n)
}

pub fn cuspidal_integers_on(curve: &QuarticCurve, n: usize) -> Result<CuspIntegers> {
    if n < 4 {
        return Err(Error::invalid(format!("need n >= 4, got {n}")));
    }
    let chart = CuspidalChart::new(curve)?;
    let values = centered_integers(n);
    let params = values.iter().map(|&k| chart.preimage(&int(k))).collect();
    Ok(CuspIntegers { chart, values, params })
}

/// Exact curve points at the given parameters.
pub fn curve_points(curve: &QuarticCurve, params: &[Param]) -> GeomConfig {
    let points = params.iter().map(|t| curve.point_at(t)).collect();
    GeomConfig::new(Geometry::Exact(points), format!("curve:{curve}"), None)
}

/// Rational parameters as finite values; errors on the point at infinity.
pub fn finite_params(params: &[Param]) -> Result<Vec<Rational>> {
    params.iter().map(|p| p.finite().cloned().ok_or(Error::invalid("parameter at infinity"))).collect()
}
