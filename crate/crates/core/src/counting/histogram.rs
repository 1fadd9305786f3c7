//! Exact plane histogram by pair grouping.
//!
//! For every pair i < j the planes through the pair are found by grouping the
//! normalised integer covectors of (i, j, k) over all other k. A plane is
//! emitted by the pair of its two smallest members, so each plane appears
//! exactly once, keyed by the triple of its three smallest members.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::geom::{plane_through, HPoint, PlaneKey};
use crate::intgeom::{convert, is_zero, normalize, plane_covector, proportional, IVec, Int, Width};
use crate::rational::binomial;

/// Sorted point indices.
pub type Triple = (usize, usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneEntry {
    /// The three smallest member indices, increasing.
    pub witness: [u32; 3],
    /// Number of points on the plane.
    pub count: u32,
}

/// Planes spanned by a point set with their point counts, sorted by witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneHistogram {
    n: usize,
    planes: Vec<PlaneEntry>,
}

impl PlaneHistogram {
    /// Merges partial tables; a witness listed more than once keeps its
    /// largest count.
    pub fn merge(n: usize, parts: impl IntoIterator<Item = Vec<PlaneEntry>>) -> Self {
        let mut table: BTreeMap<[u32; 3], u32> = BTreeMap::new();
        for entry in parts.into_iter().flatten() {
            let slot = table.entry(entry.witness).or_insert(entry.count);
            *slot = (*slot).max(entry.count);
        }
        let planes = table.into_iter().map(|(witness, count)| PlaneEntry { witness, count }).collect();
        PlaneHistogram { n, planes }
    }

    pub fn source_size(&self) -> usize {
        self.n
    }

    pub fn planes(&self) -> &[PlaneEntry] {
        &self.planes
    }

    pub fn len(&self) -> usize {
        self.planes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.planes.is_empty()
    }

    /// Number of planes holding exactly k points, for every k that occurs.
    pub fn size_distribution(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for e in &self.planes {
            *out.entry(e.count).or_insert(0) += 1;
        }
        out
    }

    fn with_count(&self, k: u32) -> u64 {
        self.planes.iter().filter(|e| e.count == k).count() as u64
    }

    pub fn ordinary_planes(&self) -> u64 {
        self.with_count(3)
    }

    pub fn four_point_planes(&self) -> u64 {
        self.with_count(4)
    }

    pub fn coplanar_quadruples(&self) -> u64 {
        self.planes.iter().map(|e| binomial(e.count as u64, 4)).sum()
    }

    pub fn max_plane_size(&self) -> u64 {
        self.planes.iter().map(|e| e.count as u64).max().unwrap_or(0)
    }

    /// Σ C(k, 3) over planes; equals C(n, 3) when no three points are collinear.
    pub fn triple_total(&self) -> u64 {
        self.planes.iter().map(|e| binomial(e.count as u64, 3)).sum()
    }

    pub fn is_conserved(&self) -> bool {
        self.triple_total() == binomial(self.n as u64, 3)
    }

    /// Ordinary planes containing point `p`; the members of an ordinary
    /// plane are exactly its witness.
    pub fn ordinary_planes_through(&self, p: usize) -> u64 {
        self.planes.iter().filter(|e| e.count == 3 && e.witness.contains(&(p as u32))).count() as u64
    }

    /// SHA-256 over the lines "w0 w1 w2 count".
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        for e in &self.planes {
            let [a, b, c] = e.witness;
            hasher.update(format!("{a} {b} {c} {}\n", e.count));
        }
        hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn plane_key(&self, points: &[HPoint], entry: &PlaneEntry) -> Result<PlaneKey> {
        let [a, b, c] = entry.witness.map(|i| &points[i as usize]);
        plane_through(a, b, c)
    }

    /// CSV "plane_key,count" with the canonical covector as the key.
    pub fn to_csv(&self, points: &[HPoint]) -> Result<String> {
        let mut out = String::from("plane_key,count\n");
        for e in &self.planes {
            writeln!(out, "{},{}", self.plane_key(points, e)?, e.count).expect("writing to a String");
        }
        Ok(out)
    }
}

pub fn check_distinct(points: &[HPoint]) -> Result<()> {
    let mut sorted: Vec<(&HPoint, usize)> = points.iter().zip(0..).collect();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0].0 == w[1].0 {
            let (a, b) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
            return Err(Error::DuplicatePoint(a, b));
        }
    }
    Ok(())
}

fn sorted_triple(a: usize, b: usize, c: usize) -> Triple {
    let mut t = [a, b, c];
    t.sort_unstable();
    (t[0], t[1], t[2])
}

/// Planes whose two smallest members are i and some j > i.
fn planes_from<T: Int>(pts: &[IVec<T>], i: usize) -> std::result::Result<Vec<PlaneEntry>, Triple> {
    let n = pts.len();
    let mut out = Vec::new();
    let mut keys: Vec<(IVec<T>, u32)> = Vec::with_capacity(n);
    for j in (i + 1)..n {
        keys.clear();
        for k in (0..n).filter(|&k| k != i && k != j) {
            let cov = plane_covector(&pts[i], &pts[j], &pts[k]);
            if is_zero(&cov) {
                return Err(sorted_triple(i, j, k));
            }
            keys.push((normalize(cov), k as u32));
        }
        keys.sort_unstable();
        let mut start = 0;
        while start < keys.len() {
            let mut end = start + 1;
            while end < keys.len() && keys[end].0 == keys[start].0 {
                end += 1;
            }
            let first = keys[start].1;
            if first as usize > j {
                out.push(PlaneEntry { witness: [i as u32, j as u32, first], count: (end - start + 2) as u32 });
            }
            start = end;
        }
    }
    Ok(out)
}

fn run<T: Int + TryFrom<BigInt>>(prims: &[[BigInt; 4]], jobs: usize) -> Result<PlaneHistogram>
where
    <T as TryFrom<BigInt>>::Error: std::fmt::Debug,
{
    let pts: Vec<IVec<T>> = prims.iter().map(convert::<T>).collect();
    let n = pts.len();
    let results: Vec<_> = if jobs <= 1 {
        (0..n).map(|i| planes_from(&pts, i)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::invalid(format!("cannot start {jobs} workers: {e}")))?;
        pool.install(|| (0..n).into_par_iter().map(|i| planes_from(&pts, i)).collect())
    };
    let mut parts = Vec::with_capacity(n);
    let mut violation: Option<Triple> = None;
    for r in results {
        match r {
            Ok(v) => parts.push(v),
            Err(t) => violation = Some(violation.map_or(t, |v| v.min(t))),
        }
    }
    if let Some((a, b, c)) = violation {
        return Err(Error::Collinear(a, b, c));
    }
    Ok(PlaneHistogram::merge(n, parts))
}

/// Plane histogram on one worker.
pub fn plane_histogram(points: &[HPoint]) -> Result<PlaneHistogram> {
    plane_histogram_with(points, 1)
}

/// Plane histogram on `jobs` workers; the output does not depend on `jobs`.
pub fn plane_histogram_with(points: &[HPoint], jobs: usize) -> Result<PlaneHistogram> {
    check_distinct(points)?;
    let prims: Vec<[BigInt; 4]> = points.iter().map(HPoint::primitive).collect();
    let max_abs = prims.iter().flatten().map(|x| BigInt::from(x.magnitude().clone())).max().unwrap_or_default();
    match Width::for_bound(&max_abs) {
        Width::I64 => run::<i64>(&prims, jobs),
        Width::I128 => run::<i128>(&prims, jobs),
        Width::Big => run::<BigInt>(&prims, jobs),
    }
}

/// Exhaustive triple check; returns every collinear triple.
pub fn no_three_collinear(points: &[HPoint]) -> Result<(bool, Vec<Triple>)> {
    check_distinct(points)?;
    let prims: Vec<[BigInt; 4]> = points.iter().map(HPoint::primitive).collect();
    let n = prims.len();
    let mut bad = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            debug_assert!(!proportional(&prims[i], &prims[j]));
            for k in (j + 1)..n {
                if is_zero(&plane_covector(&prims[i], &prims[j], &prims[k])) {
                    bad.push((i, j, k));
                }
            }
        }
    }
    Ok((bad.is_empty(), bad))
}

pub fn ordinary_planes(points: &[HPoint]) -> Result<u64> {
    Ok(plane_histogram(points)?.ordinary_planes())
}

pub fn four_point_planes(points: &[HPoint]) -> Result<u64> {
    Ok(plane_histogram(points)?.four_point_planes())
}

pub fn coplanar_quadruples(points: &[HPoint]) -> Result<u64> {
    Ok(plane_histogram(points)?.coplanar_quadruples())
}
