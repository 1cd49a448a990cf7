//! Polar degree of a projective hypersurface with isolated singularities.
//!
//! For `V ⊂ P^n` of degree `d`, `pol(V) = (d-1)^n - Σ_p μ(V, p)`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::catalog::{GermClass, GermKind};
use crate::error::{Error, Result};

/// Degree, dimension and singular locus of a candidate hypersurface in `P^n`.
///
/// Germs are kept as a multiset in canonical (non-increasing) order, each in
/// `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Configuration {
    n: u32,
    d: u32,
    germs: Vec<GermClass>,
}

impl Configuration {
    pub fn new<I: IntoIterator<Item = GermKind>>(n: u32, d: u32, kinds: I) -> Result<Self> {
        if n < 2 || d < 2 {
            return Err(Error::InvalidArgument(format!("configuration needs n ≥ 2 and d ≥ 2, got n={n}, d={d}")));
        }
        let mut germs = Vec::new();
        for kind in kinds {
            kind.validate()?;
            germs.push(GermClass::new(kind, n));
        }
        germs.sort_by(|a, b| b.cmp(a));
        Ok(Configuration { n, d, germs })
    }

    /// Parses germ names such as `["A2", "A5"]`.
    pub fn parse(n: u32, d: u32, names: &[&str]) -> Result<Self> {
        let kinds = names.iter().map(|s| s.parse()).collect::<Result<Vec<GermKind>>>()?;
        Self::new(n, d, kinds)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn germs(&self) -> &[GermClass] {
        &self.germs
    }

    pub fn kinds(&self) -> impl Iterator<Item = GermKind> + '_ {
        self.germs.iter().map(|g| g.kind)
    }

    pub fn total_milnor(&self) -> u64 {
        self.germs.iter().map(|g| g.milnor().expect("validated on construction")).sum()
    }

    /// `(d-1)^n - Σ μ`. Errors when the singularities cannot fit on any such hypersurface.
    pub fn polar_degree(&self) -> Result<u64> {
        let bound = fermat_milnor(self.n, self.d)?;
        let total = self.total_milnor();
        bound.checked_sub(total).ok_or(Error::InfeasibleConfiguration { total, bound })
    }
}

/// `(d-1)^n`, the Milnor number of the Fermat germ of degree `d` in `n` variables.
pub fn fermat_milnor(n: u32, d: u32) -> Result<u64> {
    u64::from(d.saturating_sub(1)).checked_pow(n).ok_or_else(|| Error::Overflow(format!("({d}-1)^{n}")))
}

/// Milnor number of a generic line section of a plane-curve germ: its multiplicity minus one.
pub fn sectional_milnor_plane(g: &GermClass) -> Result<u32> {
    if g.ambient_vars != 2 {
        return Err(Error::UnsupportedDimension(format!(
            "sectional Milnor number is only available for plane curves, {} has {} variables",
            g.kind, g.ambient_vars
        )));
    }
    g.kind.validate()?;
    Ok(g.kind.multiplicity_curve() - 1)
}

/// Huh's bound `pol(V) ≥ μ^{<n-2>}(V, p)` at every singular point, assuming `pol(V) = k`.
///
/// Plane curves are checked exactly. In higher dimension only the consequence
/// for `k ≤ 2` is available: every singular point is of type A, D, E or J, which
/// holds for any configuration built from this catalog. For `k ≥ 3` there is no
/// constraint.
pub fn huh_inequality_holds(c: &Configuration, k: u64) -> bool {
    if c.n == 2 {
        c.germs.iter().all(|g| sectional_milnor_plane(g).map(|m| u64::from(m) <= k).unwrap_or(false))
    } else {
        true
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, d={}: ", self.n, self.d)?;
        if self.germs.is_empty() {
            f.write_str("smooth")?;
        }
        for (i, g) in self.germs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

#[derive(Serialize, Deserialize)]
struct ConfigJson {
    n: u32,
    d: u32,
    germs: Vec<GermKind>,
}

impl Serialize for Configuration {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ConfigJson { n: self.n, d: self.d, germs: self.kinds().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Configuration {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ConfigJson::deserialize(d)?;
        Configuration::new(raw.n, raw.d, raw.germs).map_err(serde::de::Error::custom)
    }
}
