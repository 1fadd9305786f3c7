//! Seeded random point sets and outlier injection.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::configs::group::GroupConfig;
use crate::configs::{Edit, GeomConfig, Geometry};
use crate::error::{Error, Result};
use crate::geom::{HPoint, Point2};
use crate::intgeom::{collinear, convert, proportional, IVec, Int, Width};
use crate::rational::int;

/// Candidate draws allowed per requested point before giving up.
const REDRAW_FACTOR: usize = 200;

fn draw(rng: &mut ChaCha8Rng, bound: i64) -> [i64; 4] {
    std::array::from_fn(|_| rng.gen_range(-bound..=bound))
}

/// Whether `cand` is a new point off every line through two of `placed`.
fn admissible<T: Int>(placed: &[IVec<T>], cand: &IVec<T>) -> bool {
    if cand.iter().all(Zero::is_zero) || placed.iter().any(|p| proportional(p, cand)) {
        return false;
    }
    placed.iter().enumerate().all(|(i, a)| placed[i + 1..].iter().all(|b| !collinear(a, b, cand)))
}

fn extend<T: Int + TryFrom<BigInt> + From<i64>>(
    start: &[[BigInt; 4]],
    want: usize,
    rng: &mut ChaCha8Rng,
    bound: i64,
) -> Result<Vec<[i64; 4]>>
where
    <T as TryFrom<BigInt>>::Error: std::fmt::Debug,
{
    let mut placed: Vec<IVec<T>> = start.iter().map(convert::<T>).collect();
    let mut added = Vec::with_capacity(want);
    let mut budget = REDRAW_FACTOR * (want + 1);
    while added.len() < want {
        if budget == 0 {
            return Err(Error::RedrawBudget { placed: added.len(), wanted: want });
        }
        budget -= 1;
        let raw = draw(rng, bound);
        let cand: IVec<T> = raw.map(T::from);
        if admissible(&placed, &cand) {
            placed.push(cand);
            added.push(raw);
        }
    }
    Ok(added)
}

/// Draws `want` integer points with coordinates in [-bound, bound] that keep
/// `start` ∪ new points free of repeated points and collinear triples.
fn general_position(start: &[HPoint], want: usize, rng: &mut ChaCha8Rng, bound: i64) -> Result<Vec<HPoint>> {
    if bound < 1 {
        return Err(Error::invalid("coordinate bound must be positive"));
    }
    let start: Vec<[BigInt; 4]> = start.iter().map(HPoint::primitive).collect();
    let max_abs = start
        .iter()
        .flatten()
        .map(|x| x.magnitude().clone().into())
        .chain(std::iter::once(BigInt::from(bound)))
        .max()
        .expect("bound is present");
    let raw = match Width::for_bound(&max_abs) {
        Width::I64 => extend::<i64>(&start, want, rng, bound)?,
        Width::I128 => extend::<i128>(&start, want, rng, bound)?,
        Width::Big => extend::<BigInt>(&start, want, rng, bound)?,
    };
    Ok(raw.into_iter().map(|v| HPoint::from_ints(v).expect("nonzero by admissibility")).collect())
}

/// n points with integer homogeneous coordinates in [-bound, bound], no
/// two equal and no three collinear; a pure function of (n, seed, bound).
pub fn random_rational_config(n: usize, seed: u64, bound: i64) -> Result<GeomConfig> {
    if n < 1 {
        return Err(Error::invalid("need at least one point"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = general_position(&[], n, &mut rng, bound)?;
    Ok(GeomConfig::new(Geometry::Exact(points), format!("random:{n}:{seed}:{bound}"), Some(seed)))
}

/// n distinct integer points of the plane with coordinates in [-bound, bound].
pub fn random_planar_config(n: usize, seed: u64, bound: i64) -> Result<Vec<Point2>> {
    let side = 2 * bound as u128 + 1;
    if bound < 0 || side * side < n as u128 {
        return Err(Error::invalid(format!("cannot place {n} distinct points with bound {bound}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::BTreeSet::new();
    while seen.len() < n {
        seen.insert((rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound)));
    }
    // Shuffle out of sorted order so the set does not depend on BTreeSet layout.
    let mut pts: Vec<(i64, i64)> = seen.into_iter().collect();
    for i in (1..pts.len()).rev() {
        pts.swap(i, rng.gen_range(0..=i));
    }
    Ok(pts.into_iter().map(|(x, y)| Point2::new(int(x), int(y))).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutlierMode {
    /// Delete k random members.
    Remove,
    /// Add k random points keeping the set free of collinear triples.
    Append { bound: i64 },
}

pub fn inject_outliers(base: &GeomConfig, k: usize, seed: u64, mode: OutlierMode) -> Result<GeomConfig> {
    let Geometry::Exact(points) = &base.geometry else {
        return Err(Error::invalid("outlier injection needs exact points"));
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = base.clone();
    match mode {
        OutlierMode::Remove => {
            if k > points.len() {
                return Err(Error::invalid(format!("cannot remove {k} of {} points", points.len())));
            }
            let mut gone: Vec<usize> = sample(&mut rng, points.len(), k).into_vec();
            gone.sort_unstable();
            out.geometry = Geometry::Exact(
                points
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| gone.binary_search(i).is_err())
                    .map(|(_, p)| p.clone())
                    .collect(),
            );
            out.provenance
                .edits
                .extend(gone.into_iter().map(|index| Edit::Removed { index, point: points[index].clone() }));
        }
        OutlierMode::Append { bound } => {
            let added = general_position(points, k, &mut rng, bound)?;
            let mut all = points.clone();
            for p in added {
                out.provenance.edits.push(Edit::Appended { index: all.len(), point: p.clone() });
                all.push(p);
            }
            out.geometry = Geometry::Exact(all);
        }
    }
    Ok(out)
}

/// Removes k random elements of a group model; returns the surviving
/// indices and the removed ones, both sorted.
pub fn inject_outliers_group(cfg: &GroupConfig, k: usize, seed: u64) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = cfg.len();
    if k > n {
        return Err(Error::invalid(format!("cannot remove {k} of {n} elements")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gone = sample(&mut rng, n, k).into_vec();
    gone.sort_unstable();
    let kept = (0..n).filter(|i| gone.binary_search(i).is_err()).collect();
    Ok((kept, gone))
}
