//! Flat JSON summary of a count.

use serde::Serialize;

use crate::counting::histogram::PlaneHistogram;
use crate::format::format_float;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Backend {
    ExactGeometric,
    GroupModel,
    FloatGeometric(f64),
}

impl Backend {
    pub fn name(&self) -> &'static str {
        match self {
            Backend::ExactGeometric => "exact_geometric",
            Backend::GroupModel => "group_model",
            Backend::FloatGeometric(_) => "float_geometric",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub ordinary_planes: u64,
    pub four_point_planes: u64,
    pub coplanar_quadruples: u64,
    pub max_plane_size: u64,
    pub histogram_digest: String,
    /// Wall-clock time; `None` when timing is disabled for reproducible output.
    pub runtime_ms: Option<u64>,
    pub backend: &'static str,
    /// Coplanarity tolerance of the float backend, 12 significant digits.
    pub epsilon: Option<String>,
}

impl CountReport {
    pub fn new(hist: &PlaneHistogram, backend: Backend, runtime_ms: Option<u64>) -> Self {
        CountReport {
            n: hist.source_size(),
            ordinary_planes: hist.ordinary_planes(),
            four_point_planes: hist.four_point_planes(),
            coplanar_quadruples: hist.coplanar_quadruples(),
            max_plane_size: hist.max_plane_size(),
            histogram_digest: hist.digest(),
            runtime_ms,
            backend: backend.name(),
            epsilon: match backend {
                Backend::FloatGeometric(eps) => Some(format_float(eps)),
                _ => None,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain struct serializes") + "\n"
    }
}
