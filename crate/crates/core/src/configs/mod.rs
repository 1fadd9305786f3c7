//! Configuration generators.

pub mod descriptor;
pub mod families;
pub mod group;
pub mod random;

pub use descriptor::Family;
pub use families::{
    antiprism, canonical_cusp_curve, centered_integers, coset_cyclic, coset_two_component, cuspidal_integers_config,
    cuspidal_integers_on, nodal_roots_config, prism, CuspIntegers, NodalRoots,
};
pub use group::{Element, GroupConfig, Placement};
pub use random::{inject_outliers, inject_outliers_group, random_planar_config, random_rational_config, OutlierMode};

use crate::geom::HPoint;

#[derive(Clone, Debug, PartialEq)]
pub enum Geometry {
    Exact(Vec<HPoint>),
    /// Affine points; `epsilon` is the coplanarity tolerance used downstream.
    Float {
        points: Vec<[f64; 3]>,
        epsilon: f64,
    },
}

/// One logged change made by outlier injection.
#[derive(Clone, Debug, PartialEq)]
pub enum Edit {
    Removed { index: usize, point: HPoint },
    Appended { index: usize, point: HPoint },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Provenance {
    pub family: String,
    pub seed: Option<u64>,
    pub edits: Vec<Edit>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeomConfig {
    pub geometry: Geometry,
    pub provenance: Provenance,
}

impl GeomConfig {
    pub fn new(geometry: Geometry, family: String, seed: Option<u64>) -> Self {
        GeomConfig { geometry, provenance: Provenance { family, seed, edits: Vec::new() } }
    }

    pub fn len(&self) -> usize {
        match &self.geometry {
            Geometry::Exact(p) => p.len(),
            Geometry::Float { points, .. } => points.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn exact_points(&self) -> Option<&[HPoint]> {
        match &self.geometry {
            Geometry::Exact(p) => Some(p),
            Geometry::Float { .. } => None,
        }
    }
}
