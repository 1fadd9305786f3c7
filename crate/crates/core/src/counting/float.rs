//! Floating-point plane histogram for families with irrational coordinates.

use crate::counting::histogram::{PlaneEntry, PlaneHistogram};
use crate::error::{Error, Result};

fn unit(v: [f64; 4]) -> [f64; 4] {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.map(|x| x / n)
}

fn covector(a: &[f64; 4], b: &[f64; 4], c: &[f64; 4]) -> [f64; 4] {
    let minor = |skip: usize| {
        let cols: Vec<usize> = (0..4).filter(|&j| j != skip).collect();
        let m = |r: &[f64; 4], k: usize| r[cols[k]];
        m(a, 0) * (m(b, 1) * m(c, 2) - m(b, 2) * m(c, 1)) - m(a, 1) * (m(b, 0) * m(c, 2) - m(b, 2) * m(c, 0))
            + m(a, 2) * (m(b, 0) * m(c, 1) - m(b, 1) * m(c, 0))
    };
    [minor(0), -minor(1), minor(2), -minor(3)]
}

/// A point lies on a plane when |n·x| < epsilon for the unit covector n and
/// the unit homogeneous vector x.
pub fn plane_histogram_float(points: &[[f64; 3]], epsilon: f64) -> Result<PlaneHistogram> {
    let hom: Vec<[f64; 4]> = points.iter().map(|&[x, y, z]| unit([x, y, z, 1.0])).collect();
    let n = hom.len();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let cov = covector(&hom[i], &hom[j], &hom[k]);
                let norm = cov.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm < epsilon {
                    return Err(Error::Collinear(i, j, k));
                }
                let cov = cov.map(|x| x / norm);
                let on = |l: usize| cov.iter().zip(&hom[l]).map(|(a, b)| a * b).sum::<f64>().abs() < epsilon;
                if (0..k).any(|l| l != i && l != j && on(l)) {
                    continue;
                }
                let count = 3 + ((k + 1)..n).filter(|&l| on(l)).count();
                entries.push(PlaneEntry { witness: [i as u32, j as u32, k as u32], count: count as u32 });
            }
        }
    }
    Ok(PlaneHistogram::merge(n, [entries]))
}
