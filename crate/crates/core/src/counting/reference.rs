//! Slow reference engines on canonical rational plane keys.

use std::collections::HashMap;

use crate::counting::histogram::{check_distinct, PlaneEntry, PlaneHistogram};
use crate::error::{Error, Result};
use crate::geom::{plane_through, HPoint, PlaneKey};
use crate::rational::binomial;

fn key(points: &[HPoint], i: usize, j: usize, k: usize) -> Result<PlaneKey> {
    plane_through(&points[i], &points[j], &points[k]).map_err(|_| Error::Collinear(i, j, k))
}

/// Triple enumeration keyed by canonical rational planes, followed by a
/// membership pass. The triple multiplicity of each plane must equal C(k, 3)
/// for its recounted size k.
pub fn plane_histogram_by_triples(points: &[HPoint]) -> Result<PlaneHistogram> {
    check_distinct(points)?;
    let n = points.len();
    let mut triples: HashMap<PlaneKey, u64> = HashMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                *triples.entry(key(points, i, j, k)?).or_insert(0) += 1;
            }
        }
    }
    let mut entries = Vec::with_capacity(triples.len());
    for (plane, multiplicity) in triples {
        let members: Vec<u32> = (0..n as u32).filter(|&l| plane.contains(&points[l as usize])).collect();
        if binomial(members.len() as u64, 3) != multiplicity {
            return Err(Error::Guard("triple multiplicity disagrees with plane membership"));
        }
        entries.push(PlaneEntry { witness: [members[0], members[1], members[2]], count: members.len() as u32 });
    }
    Ok(PlaneHistogram::merge(n, [entries]))
}

/// O(n⁴) counter: a triple is a witness when no smaller point lies on its
/// plane, and its count is the number of points on that plane.
pub fn plane_histogram_naive(points: &[HPoint]) -> Result<PlaneHistogram> {
    check_distinct(points)?;
    let n = points.len();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let plane = key(points, i, j, k)?;
                let on: Vec<usize> = (0..n).filter(|&l| plane.contains(&points[l])).collect();
                if on[..3] == [i, j, k] {
                    entries.push(PlaneEntry { witness: [i as u32, j as u32, k as u32], count: on.len() as u32 });
                }
            }
        }
    }
    Ok(PlaneHistogram::merge(n, [entries]))
}
