//! Helpers around the arbitrary-precision rational scalar.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as Rational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses an integer or an `a/b` fraction. The fraction must be in lowest
/// terms with a positive denominator.
pub fn parse_rational(field: &str) -> Option<Rational> {
    let (num, den) = match field.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (field, None),
    };
    let num: BigInt = parse_int(num)?;
    match den {
        None => Some(Rational::from_integer(num)),
        Some(d) => {
            let den: BigInt = parse_int(d)?;
            if !den.is_positive() || !num.gcd(&den).is_one() {
                return None;
            }
            Some(Rational::new_raw(num, den))
        }
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// `a` or `a/b`, the same text `parse_rational` accepts.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Scales a rational vector to a primitive integer vector (coprime entries),
/// preserving signs.
pub fn primitive_integers(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
