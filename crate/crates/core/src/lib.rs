//! Exact algebra and counting for ordinary planes of finite point sets in
//! projective three-space.

pub mod configs;
pub mod counting;
pub mod error;
pub mod format;
pub mod geom;
pub mod intgeom;
pub mod linalg;
pub mod quartic;
pub mod rational;

pub use error::{Error, Result};
pub use geom::{HPoint, PlaneKey};
pub use rational::Rational;
