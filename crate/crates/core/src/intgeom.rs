//! Integer-coordinate kernels for the hot loops of incidence counting.
//!
//! Points enter as primitive integer vectors. The counting engine picks the
//! narrowest machine type whose range provably holds every 3x3 minor and
//! falls back to `BigInt` otherwise.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub trait Int: Clone + Ord + Hash + Integer + Signed + Send + Sync + Debug {}

impl<T: Clone + Ord + Hash + Integer + Signed + Send + Sync + Debug> Int for T {}

pub type IVec<T> = [T; 4];

fn det3<T: Int>(m: [[&T; 3]; 3]) -> T {
    let a = m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone();
    let b = m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone();
    let c = m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone();
    m[0][0].clone() * a - m[0][1].clone() * b + m[0][2].clone() * c
}

/// Covector annihilating `a`, `b` and `c`: entry k is (-1)^k times the minor
/// with column k removed. Zero iff the three points are collinear.
pub fn plane_covector<T: Int>(a: &IVec<T>, b: &IVec<T>, c: &IVec<T>) -> IVec<T> {
    let minor = |skip: usize| {
        let cols: Vec<usize> = (0..4).filter(|&j| j != skip).collect();
        det3([
            [&a[cols[0]], &a[cols[1]], &a[cols[2]]],
            [&b[cols[0]], &b[cols[1]], &b[cols[2]]],
            [&c[cols[0]], &c[cols[1]], &c[cols[2]]],
        ])
    };
    [minor(0), -minor(1), minor(2), -minor(3)]
}

pub fn is_zero<T: Int>(v: &IVec<T>) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot<T: Int>(u: &IVec<T>, v: &IVec<T>) -> T {
    u[0].clone() * v[0].clone()
        + u[1].clone() * v[1].clone()
        + u[2].clone() * v[2].clone()
        + u[3].clone() * v[3].clone()
}

/// Divides out the content and makes the first nonzero entry positive.
pub fn normalize<T: Int>(mut v: IVec<T>) -> IVec<T> {
    let g = v.iter().fold(T::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let negate = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = x.clone() / g.clone();
        if negate {
            *x = -x.clone();
        }
    }
    v
}

pub fn collinear<T: Int>(a: &IVec<T>, b: &IVec<T>, c: &IVec<T>) -> bool {
    is_zero(&plane_covector(a, b, c))
}

/// Same projective point.
pub fn proportional<T: Int>(a: &IVec<T>, b: &IVec<T>) -> bool {
    (0..4).all(|i| (i + 1..4).all(|j| a[i].clone() * b[j].clone() == a[j].clone() * b[i].clone()))
}

/// Machine representation able to hold every 3x3 minor of vectors with
/// entries bounded by `max_abs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Width {
    I64,
    I128,
    Big,
}

impl Width {
    /// A 3x3 minor is bounded by 6·M³; a dot product of a covector with a
    /// point adds another factor 4·M.
    pub fn for_bound(max_abs: &BigInt) -> Width {
        match max_abs.to_u128() {
            Some(m) if m < (1 << 14) => Width::I64,
            Some(m) if m < (1 << 29) => Width::I128,
            _ => Width::Big,
        }
    }
}

pub fn convert<T: Int + TryFrom<BigInt>>(v: &[BigInt; 4]) -> IVec<T>
where
    <T as TryFrom<BigInt>>::Error: Debug,
{
    v.clone().map(|x| T::try_from(x).expect("coordinate exceeds chosen width"))
}
