//! Counting on combinatorial group models and on parameter sets of curves,
//! plus the 4-point-plane formula and its maximiser.

use std::collections::HashMap;

use num_complex::Complex64;
use num_traits::Zero;

use crate::configs::group::{GroupConfig, Placement};
use crate::counting::histogram::{PlaneEntry, PlaneHistogram};
use crate::error::{Error, Result};
use crate::quartic::{Param, QuarticCurve};
use crate::rational::{binomial, frac, int, Rational};

/// #4-subsets of `items` whose residues sum to `target` (mod `modulus`).
fn four_subsets_with_sum(residues: impl IntoIterator<Item = usize>, modulus: usize, target: usize) -> u64 {
    // ways[size][r]: subsets of the items seen so far with that size and sum.
    let mut ways = vec![vec![0u64; modulus]; 5];
    ways[0][0] = 1;
    for x in residues {
        for size in (1..=4).rev() {
            let (lower, upper) = ways.split_at_mut(size);
            for r in 0..modulus {
                upper[0][(r + x) % modulus] += lower[size - 1][r];
            }
        }
    }
    ways[4][target % modulus]
}

/// #{unordered pairs within 0..m with a + b ≡ s}, indexed by s.
fn pair_sums(m: usize) -> Vec<u64> {
    let mut out = vec![0u64; m];
    for a in 0..m {
        for b in (a + 1)..m {
            out[(a + b) % m] += 1;
        }
    }
    out
}

/// Number of coplanar 4-subsets of the model.
pub fn group_four_sum_count(cfg: &GroupConfig) -> u64 {
    match *cfg {
        GroupConfig::Cyclic { n, c0 } => four_subsets_with_sum(0..n, n, c0),
        GroupConfig::TwoComponent { n, c0, parity } => {
            // Index i encodes (i mod h, i div h), so residues live in Z_h × Z_2.
            let h = n / 2;
            let add = |r: usize, x: usize| (r / h + x / h) % 2 * h + (r % h + x % h) % h;
            let mut ways = vec![vec![0u64; n]; 5];
            ways[0][0] = 1;
            for x in 0..n {
                for size in (1..=4).rev() {
                    let (lower, upper) = ways.split_at_mut(size);
                    for r in 0..n {
                        upper[0][add(r, x)] += lower[size - 1][r];
                    }
                }
            }
            ways[4][parity * h + c0]
        }
        GroupConfig::CirclePair { m, placement } => {
            let shift = match placement {
                Placement::Aligned => 0,
                Placement::Offset => 1,
            };
            let sums = pair_sums(m);
            // top pair sum s matches bottom pair sum s − shift
            let cross: u64 = (0..m).map(|s| sums[s] * sums[(s + m - shift) % m]).sum();
            2 * binomial(m as u64, 4) + cross
        }
    }
}

/// Direct enumeration of all 4-subsets against the predicate.
pub fn group_four_sum_count_bruteforce(cfg: &GroupConfig) -> u64 {
    let n = cfg.len();
    let mut count = 0;
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    if cfg.is_coplanar([a, b, c, d]).expect("distinct indices") {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Histogram of the model restricted to `members` (all elements if `None`).
pub fn group_histogram(cfg: &GroupConfig, members: Option<&[usize]>) -> PlaneHistogram {
    let all: Vec<usize> = (0..cfg.len()).collect();
    let set = members.unwrap_or(&all);
    let mut inside = vec![false; cfg.len()];
    for &i in set {
        inside[i] = true;
    }
    let mut entries = Vec::new();
    for (x, &a) in set.iter().enumerate() {
        for (y, &b) in set.iter().enumerate().skip(x + 1) {
            for &c in &set[y + 1..] {
                let on: Vec<usize> =
                    cfg.plane_members(a, b, c).expect("distinct indices").into_iter().filter(|&i| inside[i]).collect();
                let mut triple = [a, b, c];
                triple.sort_unstable();
                if on[..3] == triple {
                    let witness = triple.map(|i| i as u32);
                    entries.push(PlaneEntry { witness, count: on.len() as u32 });
                }
            }
        }
    }
    // Witnesses index the full model; conservation refers to the subset.
    PlaneHistogram::merge(set.len(), [entries])
}

/// Ordinary planes of the model: 3-subsets whose plane holds no other element.
pub fn group_ordinary_count(cfg: &GroupConfig) -> u64 {
    let n = cfg.len();
    let mut count = 0;
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                if cfg.plane_members(a, b, c).expect("distinct indices").len() == 3 {
                    count += 1;
                }
            }
        }
    }
    count
}

/// The 4-point-plane maximum as a piecewise cubic in n mod 8.
pub fn formula_max_4pt(n: u64) -> Result<u64> {
    if n < 8 {
        return Err(Error::invalid(format!("formula applies for n >= 8, got {n}")));
    }
    let x = int(n as i64);
    let base = &x * &x * &x / int(24) - &x * &x / int(4);
    let tail = match n % 8 {
        0 => frac(5, 6) * &x,
        1 | 3 | 5 | 7 => frac(11, 24) * &x - frac(1, 4),
        2 | 6 => frac(7, 12) * &x - frac(1, 2),
        _ => frac(5, 6) * &x - int(1),
    };
    let value: Rational = base + tail;
    if !value.is_integer() {
        return Err(Error::NonIntegral(value.to_string()));
    }
    value.to_integer().try_into().map_err(|_| Error::NonIntegral(value.to_string()))
}

/// Best 4-subset count over cyclic models with every offset and, for even
/// n, two-component models with every (offset, parity). Ties keep the first
/// model in that order.
pub fn max_4pt_search(n: usize) -> Result<(u64, GroupConfig)> {
    let mut candidates: Vec<GroupConfig> = (0..n).map(|c0| GroupConfig::cyclic(n, c0)).collect::<Result<_>>()?;
    if n.is_multiple_of(2) && n >= 8 {
        for c0 in 0..n / 2 {
            for parity in 0..2 {
                candidates.push(GroupConfig::two_component(n, c0, parity)?);
            }
        }
    }
    let mut best: Option<(u64, GroupConfig)> = None;
    for cfg in candidates {
        let count = group_four_sum_count(&cfg);
        if best.as_ref().is_none_or(|(b, _)| count > *b) {
            best = Some((count, cfg));
        }
    }
    best.ok_or_else(|| Error::invalid("no candidate models"))
}

/// #4-subsets of distinct integers summing to `target`.
pub fn integer_four_sum_count(values: &[i64], target: i64) -> u64 {
    let lo = values.iter().copied().min().unwrap_or(0).min(0);
    let hi = values.iter().copied().max().unwrap_or(0).max(0);
    // Shift every value by -lo so partial sums are non-negative.
    let span = 4 * (hi - lo) as usize + 1;
    let mut ways = vec![vec![0u64; span]; 5];
    ways[0][0] = 1;
    for &v in values {
        let x = (v - lo) as usize;
        for size in (1..=4).rev() {
            let (lower, upper) = ways.split_at_mut(size);
            for s in (0..span - x).rev() {
                upper[0][s + x] += lower[size - 1][s];
            }
        }
    }
    let shifted = target - 4 * lo;
    if shifted < 0 || shifted as usize >= span {
        return 0;
    }
    ways[4][shifted as usize]
}

/// Exact coplanar quadruples among curve points at distinct parameters.
pub fn curve_coplanar_quadruples(curve: &QuarticCurve, params: &[Param]) -> Result<u64> {
    let index: HashMap<&Param, usize> = params.iter().enumerate().map(|(i, p)| (p, i)).collect();
    if index.len() != params.len() {
        return Err(Error::invalid("repeated parameter"));
    }
    let n = params.len();
    let mut count = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let t4 = curve.solve_fourth([&params[i], &params[j], &params[k]])?;
                if index.get(&t4).is_some_and(|&l| l > k) {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// F at complex parameters, and the sum of the moduli of its terms.
pub fn complex_coplanarity_form(curve: &QuarticCurve, t: [Complex64; 4]) -> (Complex64, f64) {
    let w = [curve.p(), curve.q(), curve.r(), curve.s()].map(crate::rational::to_f64);
    let mut total = Complex64::zero();
    let mut scale = 0.0;
    for mask in 0u32..16 {
        let weight = match mask.count_ones() {
            0 => w[0],
            1 => w[1],
            2 => w[2],
            3 => w[3],
            _ => 1.0,
        };
        let term: Complex64 = (0..4).filter(|i| mask & (1 << i) != 0).map(|i| t[i]).product::<Complex64>() * weight;
        total += term;
        scale += term.norm();
    }
    (total, scale)
}

/// Coplanar quadruples among complex parameters, matching solved fourth
/// parameters within a relative tolerance.
pub fn complex_coplanar_quadruples(curve: &QuarticCurve, params: &[Complex64], tol: f64) -> u64 {
    let w = [curve.p(), curve.q(), curve.r(), curve.s()].map(crate::rational::to_f64);
    let (p, q, r, s) = (w[0], w[1], w[2], w[3]);
    let n = params.len();
    let mut count = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let (a, b, c) = (params[i], params[j], params[k]);
                let e1 = a + b + c;
                let e2 = a * b + a * c + b * c;
                let e3 = a * b * c;
                let lead = e3 + s * e2 + r * e1 + q;
                let rest = s * e3 + r * e2 + q * e1 + p;
                if lead.norm() <= tol * rest.norm() {
                    continue;
                }
                let t4 = -rest / lead;
                count += params[k + 1..].iter().filter(|&&x| (x - t4).norm() <= tol * (1.0 + t4.norm())).count() as u64;
            }
        }
    }
    count
}
