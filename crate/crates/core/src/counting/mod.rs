//! Exact incidence counting.

pub mod float;
pub mod group;
pub mod histogram;
pub mod planar;
pub mod reference;
pub mod report;

pub use float::plane_histogram_float;
pub use group::{
    complex_coplanar_quadruples, curve_coplanar_quadruples, formula_max_4pt, group_four_sum_count,
    group_four_sum_count_bruteforce, group_histogram, group_ordinary_count, integer_four_sum_count, max_4pt_search,
};
pub use histogram::{
    coplanar_quadruples, four_point_planes, no_three_collinear, ordinary_planes, plane_histogram, plane_histogram_with,
    PlaneEntry, PlaneHistogram,
};
pub use planar::{ordinary_circles, ordinary_circles_planar, ordinary_lines_2d, CircleCounts};
pub use reference::{plane_histogram_by_triples, plane_histogram_naive};
pub use report::{Backend, CountReport};
