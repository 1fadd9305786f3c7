//! Family descriptor strings such as "prism:6" or "random:30:7:1000".

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Prism { m: usize },
    Antiprism { m: usize },
    Coset { n: usize, c0: usize },
    Coset2 { n: usize, c0: usize, parity: usize },
    NodalRoots { n: usize },
    CuspInts { n: usize },
    Random { n: usize, seed: u64, bound: i64 },
}

impl Family {
    /// Replaces a `*` size field with `n`, as in "coset:*:0".
    pub fn parse_with_size(text: &str, n: usize) -> Result<Family> {
        let filled: Vec<String> =
            text.split(':').map(|f| if f == "*" { n.to_string() } else { f.to_string() }).collect();
        filled.join(":").parse()
    }

    pub fn size(&self) -> usize {
        match *self {
            Family::Prism { m } | Family::Antiprism { m } => 2 * m,
            Family::Coset { n, .. }
            | Family::Coset2 { n, .. }
            | Family::NodalRoots { n }
            | Family::CuspInts { n }
            | Family::Random { n, .. } => n,
        }
    }
}

fn number<T: FromStr>(field: &str, name: &str, text: &str) -> Result<T> {
    field.parse().map_err(|_| Error::invalid(format!("bad {name} `{field}` in family `{text}`")))
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(text: &str) -> Result<Family> {
        let f: Vec<&str> = text.split(':').collect();
        let arity = |k: usize| {
            if f.len() == k {
                Ok(())
            } else {
                Err(Error::invalid(format!("family `{text}` expects {} parameters", k - 1)))
            }
        };
        match f[0] {
            "prism" => arity(2).and_then(|_| Ok(Family::Prism { m: number(f[1], "m", text)? })),
            "antiprism" => arity(2).and_then(|_| Ok(Family::Antiprism { m: number(f[1], "m", text)? })),
            "coset" => {
                arity(3).and_then(|_| Ok(Family::Coset { n: number(f[1], "n", text)?, c0: number(f[2], "c0", text)? }))
            }
            "coset2" => arity(4).and_then(|_| {
                Ok(Family::Coset2 {
                    n: number(f[1], "n", text)?,
                    c0: number(f[2], "c0", text)?,
                    parity: number(f[3], "parity", text)?,
                })
            }),
            "nodal-roots" => arity(2).and_then(|_| Ok(Family::NodalRoots { n: number(f[1], "n", text)? })),
            "cusp-ints" => arity(2).and_then(|_| Ok(Family::CuspInts { n: number(f[1], "n", text)? })),
            "random" => arity(4).and_then(|_| {
                Ok(Family::Random {
                    n: number(f[1], "n", text)?,
                    seed: number(f[2], "seed", text)?,
                    bound: number(f[3], "bound", text)?,
                })
            }),
            other => Err(Error::invalid(format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Prism { m } => write!(f, "prism:{m}"),
            Family::Antiprism { m } => write!(f, "antiprism:{m}"),
            Family::Coset { n, c0 } => write!(f, "coset:{n}:{c0}"),
            Family::Coset2 { n, c0, parity } => write!(f, "coset2:{n}:{c0}:{parity}"),
            Family::NodalRoots { n } => write!(f, "nodal-roots:{n}"),
            Family::CuspInts { n } => write!(f, "cusp-ints:{n}"),
            Family::Random { n, seed, bound } => write!(f, "random:{n}:{seed}:{bound}"),
        }
    }
}
