//! The properties `G(g)`, `H(l)` and `D(k)`, cutting-semigroup tests and
//! skilled primitives.
//!
//! A semigroup is *cutting* for a property when it and all its descendants
//! satisfy it. Every test here goes through the semigroup generated by the
//! left elements, so deciding whether a node is cutting never requires
//! walking its subtree.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::closure::{bounded_conductor_leq, bounded_genus_leq};
use crate::{Error, Result, Semigroup};

/// A positive rational `num / den`. Comparisons are done by cross
/// multiplication, never in floating point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::InvalidParameter(format!("{num}/{den} is not a positive rational")));
        }
        let d = num.gcd(&den);
        Ok(Ratio { num: num / d, den: den / d })
    }

    pub fn integer(n: u64) -> Self {
        Ratio::new(n, 1).expect("positive integer")
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// `floor(self * n)`.
    pub fn floor_mul(&self, n: u64) -> u64 {
        ((self.num as u128 * n as u128) / self.den as u128) as u64
    }

    /// `ceil(self * n)`.
    pub fn ceil_mul(&self, n: u64) -> u64 {
        (self.num as u128 * n as u128).div_ceil(self.den as u128) as u64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse rational {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => Ratio::new(n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?),
            None => Ratio::new(s.trim().parse().map_err(|_| bad())?, 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PropertySpec {
    /// `G(g)`: genus at most `g`.
    GenusBound(u32),
    /// `H(l)`: `c <= l * m`. `H(3)` is genericity.
    SmallDepth(Ratio),
    /// `D(k)`: `e >= m / k`, with `k > 1`.
    LargeDensity(Ratio),
}

impl PropertySpec {
    pub fn genus_bound(g: u32) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidParameter("G needs g >= 1".into()));
        }
        Ok(PropertySpec::GenusBound(g))
    }

    pub fn small_depth(l: Ratio) -> Self {
        PropertySpec::SmallDepth(l)
    }

    pub fn large_density(k: Ratio) -> Result<Self> {
        if k.num <= k.den {
            return Err(Error::InvalidParameter(format!("D needs k > 1, got {k}")));
        }
        Ok(PropertySpec::LargeDensity(k))
    }

    pub fn generic() -> Self {
        PropertySpec::SmallDepth(Ratio::integer(3))
    }

    /// Whether `s` satisfies the property.
    pub fn satisfies(&self, s: &Semigroup) -> bool {
        match *self {
            PropertySpec::GenusBound(g) => s.genus() <= g,
            PropertySpec::SmallDepth(l) => depth_ok(l, s.multiplicity(), s.conductor()),
            PropertySpec::LargeDensity(k) => density_ok(k, s.multiplicity(), s.edim()),
        }
    }
}

impl fmt::Display for PropertySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertySpec::GenusBound(g) => write!(f, "G_{g}"),
            PropertySpec::SmallDepth(l) => write!(f, "H_{l}"),
            PropertySpec::LargeDensity(k) => write!(f, "D_{k}"),
        }
    }
}

impl FromStr for PropertySpec {
    type Err = Error;

    /// `G_10`, `H_3`, `D_5/2` (the underscore is optional).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = chars.next().map(|c| c.to_ascii_uppercase());
        let param = chars.as_str().trim_start_matches('_');
        match kind {
            Some('G') => PropertySpec::genus_bound(
                param.parse().map_err(|_| Error::InvalidParameter(format!("bad genus bound in {s:?}")))?,
            ),
            Some('H') => Ok(PropertySpec::small_depth(param.parse()?)),
            Some('D') => PropertySpec::large_density(param.parse()?),
            _ => Err(Error::InvalidParameter(format!("unknown property {s:?}"))),
        }
    }
}

/// `c <= l * m`.
pub(crate) fn depth_ok(l: Ratio, m: u32, c: u32) -> bool {
    c as u128 * l.den as u128 <= l.num as u128 * m as u128
}

/// `e >= m / k`.
pub(crate) fn density_ok(k: Ratio, m: u32, e: u32) -> bool {
    e as u128 * k.num as u128 >= m as u128 * k.den as u128
}

/// gcd of the positive left elements; 0 when there are none.
pub fn gcd_lefts(s: &Semigroup) -> u32 {
    s.left_primitives().iter().fold(0, |acc, &p| acc.gcd(&p))
}

/// Cutting test for a non-superficial semigroup of multiplicity `m`, given
/// only its left primitives and their gcd.
pub(crate) fn cutting_from_lefts(p: &PropertySpec, m: u32, left_prims: &[u32], gcd: u32) -> bool {
    match *p {
        PropertySpec::GenusBound(g) => gcd == 1 && bounded_genus_leq(left_prims, g),
        PropertySpec::SmallDepth(l) => {
            gcd == 1 && bounded_conductor_leq(left_prims, l.floor_mul(m as u64) as u32)
        }
        PropertySpec::LargeDensity(k) => {
            let le = left_prims.len() as u32;
            if gcd == 1 {
                density_ok(k, m, le)
            } else {
                density_ok(k, m, le + 1)
            }
        }
    }
}

/// Whether `s` and all of its descendants satisfy `p`.
///
/// `N` and the superficial semigroups are never cutting: their descendants
/// include every semigroup of larger multiplicity, so neither genus nor depth
/// stays bounded, and `<m, m+1>` sits below `O_m` with small density.
pub fn is_cutting(s: &Semigroup, p: &PropertySpec) -> bool {
    if s.is_superficial() {
        return false;
    }
    cutting_from_lefts(p, s.multiplicity(), s.left_primitives(), gcd_lefts(s))
}

/// Sound (not complete) test that every descendant of `s` of genus at most
/// `gamma` satisfies `p`. Requires `genus(s) <= gamma`.
pub fn truncated_cut_sufficient(s: &Semigroup, p: &PropertySpec, gamma: u32) -> bool {
    if is_cutting(s, p) {
        return true;
    }
    !s.is_naturals() && truncated_rule(p, s.multiplicity(), s.is_superficial(), s.chain_index(), gamma)
}

/// The genus-bounded cuts that do not follow from cutting: `O_m` and the
/// chain semigroups `S_{m,i}` for `D(k)`, and large multiplicity for `H(l)`.
pub(crate) fn truncated_rule(p: &PropertySpec, m: u32, superficial: bool, chain: Option<u32>, gamma: u32) -> bool {
    let m = m as i128;
    let gamma = gamma as i128;
    match *p {
        PropertySpec::LargeDensity(k) => {
            let (a, b) = (k.num as i128, k.den as i128);
            // O_m: (2k - 1) m >= k (gamma + 1).
            if superficial && (2 * a - b) * m >= a * (gamma + 1) {
                return true;
            }
            // S_{m,i} has m primitives and genus m - 1 + i; each step down
            // loses at most one primitive.
            match chain {
                Some(i) => a * (2 * m - gamma - 1 + i as i128) >= b * m,
                None => false,
            }
        }
        // Genus <= gamma forces c <= 2 gamma <= l m.
        PropertySpec::SmallDepth(l) => l.num as i128 * m >= 2 * gamma * l.den as i128,
        PropertySpec::GenusBound(_) => false,
    }
}

/// Big primitives whose removal yields a child that is not cutting for `p`,
/// in increasing order.
///
/// The child `S \ {b}` has as left primitives exactly the primitives of `S`
/// below `b`, so its cutting status is read off a prefix of the primitive
/// list. For `D(k)` this is the index rule: the `j`-th primitive (1-based)
/// leaves `j - 1` left primitives behind.
pub fn skilled_primitives(s: &Semigroup, p: &PropertySpec) -> Vec<u32> {
    let m = s.multiplicity();
    let prims = s.primitives();
    if let PropertySpec::SmallDepth(l) = *p {
        // A primitive beyond (l + 1) m survives in, or forces past l m the
        // conductor of, every descendant: nothing below is cutting.
        let max = *prims.last().expect("primitives");
        if !s.is_superficial() && max as u128 * l.den as u128 > (l.num + l.den) as u128 * m as u128 {
            return s.big_primitives().to_vec();
        }
    }
    let mut out = Vec::new();
    let mut gcd = 0u32;
    for (idx, &b) in prims.iter().enumerate() {
        // Removing m itself gives the superficial O_{m+1}.
        if b >= s.conductor() && (b == m || !child_cutting(p, s, &prims[..idx], gcd, b)) {
            out.push(b);
        }
        gcd = gcd.gcd(&b);
    }
    out
}

fn child_cutting(p: &PropertySpec, s: &Semigroup, left_prims: &[u32], gcd: u32, removed: u32) -> bool {
    match *p {
        PropertySpec::GenusBound(g) if s.genus() + 1 > g => false,
        PropertySpec::SmallDepth(l) if !depth_ok(l, s.multiplicity(), removed + 1) => false,
        _ => cutting_from_lefts(p, s.multiplicity(), left_prims, gcd),
    }
}
