//! Rational space quartics in normal form.

pub mod curve;
pub mod forms;
pub mod group;
pub mod identity;
pub mod species;
pub mod sylvester;

pub use curve::{elementary, Param, QuarticCurve};
pub use forms::{catalecticant, fundamental_quartic, BinaryQuartic};
pub use group::{group_parametrization, CuspidalChart, GroupModelQuartic};
pub use identity::{h_poly, quotient_independence_check, rsz_identity_check};
pub use species::{classify_species, factored_minors, six_minors, Species, SpeciesReport};
pub use sylvester::{
    sylvester_decompose, sylvester_decompose_complex, CanonicalForm, Decomposition, LinearForm, Tolerances,
};
