//! Combinatorial models of coset configurations: four elements are coplanar
//! iff they sum to a fixed offset in the group.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative position of the two circles of a prism-like configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Placement {
    /// Prism: both polygons at angles 2kπ/m.
    Aligned,
    /// Antiprism: the second polygon rotated by half a step.
    Offset,
}

/// Element of a group model after decoding its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    /// Residue on the circle part.
    pub part: usize,
    /// Component or circle: 0 or 1; always 0 for cyclic models.
    pub component: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupConfig {
    /// Z_n with coplanarity a+b+c+d ≡ c0 (mod n).
    Cyclic { n: usize, c0: usize },
    /// Z_{n/2} × Z_2; indices below n/2 lie on component 0.
    TwoComponent { n: usize, c0: usize, parity: usize },
    /// Two regular m-gons; indices below m lie on the first circle.
    CirclePair { m: usize, placement: Placement },
}

impl GroupConfig {
    pub fn cyclic(n: usize, c0: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::invalid(format!("cyclic model needs n >= 4, got {n}")));
        }
        Ok(GroupConfig::Cyclic { n, c0: c0 % n })
    }

    pub fn two_component(n: usize, c0: usize, parity: usize) -> Result<Self> {
        if !n.is_multiple_of(2) || n < 8 {
            return Err(Error::invalid(format!("two-component model needs even n >= 8, got {n}")));
        }
        if parity > 1 {
            return Err(Error::invalid(format!("parity target must be 0 or 1, got {parity}")));
        }
        Ok(GroupConfig::TwoComponent { n, c0: c0 % (n / 2), parity })
    }

    pub fn circle_pair(m: usize, placement: Placement) -> Result<Self> {
        if m < 3 {
            return Err(Error::invalid(format!("polygon needs m >= 3, got {m}")));
        }
        Ok(GroupConfig::CirclePair { m, placement })
    }

    pub fn len(&self) -> usize {
        match *self {
            GroupConfig::Cyclic { n, .. } | GroupConfig::TwoComponent { n, .. } => n,
            GroupConfig::CirclePair { m, .. } => 2 * m,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Modulus of the circle part.
    fn modulus(&self) -> usize {
        match *self {
            GroupConfig::Cyclic { n, .. } => n,
            GroupConfig::TwoComponent { n, .. } => n / 2,
            GroupConfig::CirclePair { m, .. } => m,
        }
    }

    pub fn decode(&self, i: usize) -> Element {
        let k = self.modulus();
        match self {
            GroupConfig::Cyclic { .. } => Element { part: i, component: 0 },
            _ => Element { part: i % k, component: i / k },
        }
    }

    pub fn encode(&self, e: Element) -> usize {
        e.component * self.modulus() + e.part
    }

    fn check(&self, idx: &[usize]) -> Result<()> {
        for (a, &x) in idx.iter().enumerate() {
            if x >= self.len() {
                return Err(Error::invalid(format!("index {x} out of range for a model of size {}", self.len())));
            }
            if idx[..a].contains(&x) {
                return Err(Error::invalid(format!("repeated index {x}")));
            }
        }
        Ok(())
    }

    /// Fourth intersection of the plane through three distinct elements; it
    /// may coincide with one of them (tangent plane). `None` when the three
    /// lie on one circle of a circle pair, whose plane holds the whole circle.
    pub fn solve_fourth(&self, a: usize, b: usize, c: usize) -> Result<Option<usize>> {
        self.check(&[a, b, c])?;
        let k = self.modulus();
        let e = [a, b, c].map(|i| self.decode(i));
        let part_sum: usize = e.iter().map(|x| x.part).sum();
        Ok(match *self {
            GroupConfig::Cyclic { c0, .. } => Some((c0 + 3 * k - part_sum % k) % k),
            GroupConfig::TwoComponent { c0, parity, .. } => {
                let comp: usize = e.iter().map(|x| x.component).sum();
                let part = (c0 + 3 * k - part_sum % k) % k;
                Some(self.encode(Element { part, component: (parity + comp) % 2 }))
            }
            GroupConfig::CirclePair { placement, .. } => {
                let top = e.iter().filter(|x| x.component == 0).count();
                if top == 0 || top == 3 {
                    return Ok(None);
                }
                // The plane meets the circle holding two of the points in a
                // chord parallel to the chord on the other circle.
                let (pair, single): (Vec<&Element>, Vec<&Element>) = if top == 2 {
                    e.iter().partition(|x| x.component == 0)
                } else {
                    e.iter().partition(|x| x.component == 1)
                };
                let shift = match placement {
                    Placement::Aligned => 0,
                    Placement::Offset => 1,
                };
                let pair_sum = pair[0].part + pair[1].part;
                let s = single[0];
                // top pair (a,b), bottom (c,d): a+b ≡ c+d+shift
                let part = if s.component == 1 {
                    (pair_sum + 2 * k - shift - s.part) % k
                } else {
                    (pair_sum + shift + k - s.part) % k
                };
                Some(self.encode(Element { part, component: s.component }))
            }
        })
    }

    /// Sorted indices on the plane through three distinct elements.
    pub fn plane_members(&self, a: usize, b: usize, c: usize) -> Result<Vec<usize>> {
        let mut members = match self.solve_fourth(a, b, c)? {
            Some(d) if d != a && d != b && d != c => vec![a, b, c, d],
            Some(_) => vec![a, b, c],
            None => {
                let comp = self.decode(a).component;
                (0..self.modulus()).map(|part| self.encode(Element { part, component: comp })).collect()
            }
        };
        members.sort_unstable();
        Ok(members)
    }

    pub fn is_coplanar(&self, q: [usize; 4]) -> Result<bool> {
        self.check(&q)?;
        Ok(self.plane_members(q[0], q[1], q[2])?.contains(&q[3]))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GroupConfig::Cyclic { .. } => "cyclic",
            GroupConfig::TwoComponent { .. } => "two_component",
            GroupConfig::CirclePair { .. } => "circle_pair",
        }
    }
}

/// JSON form {kind, n, offset, parity}.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupModelFile {
    pub kind: String,
    pub n: usize,
    pub offset: Offset,
    pub parity: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Offset {
    Residue(usize),
    Placement(Placement),
}

impl From<&GroupConfig> for GroupModelFile {
    fn from(cfg: &GroupConfig) -> Self {
        let (offset, parity) = match *cfg {
            GroupConfig::Cyclic { c0, .. } => (Offset::Residue(c0), None),
            GroupConfig::TwoComponent { c0, parity, .. } => (Offset::Residue(c0), Some(parity)),
            GroupConfig::CirclePair { placement, .. } => (Offset::Placement(placement), None),
        };
        GroupModelFile { kind: cfg.kind().to_string(), n: cfg.len(), offset, parity }
    }
}

impl TryFrom<&GroupModelFile> for GroupConfig {
    type Error = Error;

    fn try_from(f: &GroupModelFile) -> Result<Self> {
        match (f.kind.as_str(), &f.offset, f.parity) {
            ("cyclic", Offset::Residue(c0), None) => GroupConfig::cyclic(f.n, *c0),
            ("two_component", Offset::Residue(c0), Some(p)) => GroupConfig::two_component(f.n, *c0, p),
            ("circle_pair", Offset::Placement(pl), None) if f.n.is_multiple_of(2) => {
                GroupConfig::circle_pair(f.n / 2, *pl)
            }
            _ => Err(Error::invalid(format!("inconsistent group model {f:?}"))),
        }
    }
}

pub fn to_json(cfg: &GroupConfig) -> String {
    serde_json::to_string(&GroupModelFile::from(cfg)).expect("plain struct serializes") + "\n"
}

pub fn from_json(text: &str) -> Result<GroupConfig> {
    let f: GroupModelFile =
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
    GroupConfig::try_from(&f)
}
