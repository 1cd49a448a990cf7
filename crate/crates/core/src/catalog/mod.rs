//! Catalog of the simple-elliptic-free singularity classes A, D, E and J.
//!
//! Normal forms (curve case, `q` a sum of squares in the remaining variables):
//!
//! | class        | equation                          | μ        |
//! |--------------|-----------------------------------|----------|
//! | `A_k`        | `x^{k+1} + y^2`                   | `k`      |
//! | `D_k`        | `x^2 y + y^{k-1}`                 | `k`      |
//! | `E_{6r}`     | `x^3 + y^{3r+1}`                  | `6r`     |
//! | `E_{6r+1}`   | `x^3 + x y^{2r+1}`                | `6r+1`   |
//! | `E_{6r+2}`   | `x^3 + y^{3r+2}`                  | `6r+2`   |
//! | `J_{k,i}`    | `x^3 + x^2 y^k + y^{3k+i}`        | `6k-2+i` |

mod fermat;
mod spectra;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{frac, SpectralInt};
use crate::spectrum::Spectrum;

pub use fermat::fermat_spectrum;
pub use spectra::{j_negative_groups, spectrum_from_weights, TableRow, E6R1_ROW_NOTE};

/// Family letter of a catalog class, used for search whitelists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
    J,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::D, Family::E, Family::J];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
            Family::J => "J",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "J" | "j" => Ok(Family::J),
            other => Err(Error::Parse(format!("unknown family `{other}` (expected A, D, E or J)"))),
        }
    }
}

/// A catalog class, independent of the number of variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GermKind {
    A(u32),
    D(u32),
    /// `E_{6r}`
    E6r(u32),
    /// `E_{6r+1}`
    E6r1(u32),
    /// `E_{6r+2}`
    E6r2(u32),
    /// `J_{k,i}`
    J(u32, u32),
}

impl GermKind {
    pub fn family(&self) -> Family {
        match self {
            GermKind::A(_) => Family::A,
            GermKind::D(_) => Family::D,
            GermKind::E6r(_) | GermKind::E6r1(_) | GermKind::E6r2(_) => Family::E,
            GermKind::J(..) => Family::J,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            GermKind::A(k) => k >= 1,
            GermKind::D(k) => k >= 4,
            GermKind::E6r(r) | GermKind::E6r1(r) | GermKind::E6r2(r) => r >= 1,
            GermKind::J(k, _) => k >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidClass(format!("{self:?} has parameters out of range")))
        }
    }

    pub fn milnor(&self) -> Result<u64> {
        self.validate()?;
        Ok(self.milnor_unchecked())
    }

    fn milnor_unchecked(&self) -> u64 {
        match *self {
            GermKind::A(k) | GermKind::D(k) => u64::from(k),
            GermKind::E6r(r) => 6 * u64::from(r),
            GermKind::E6r1(r) => 6 * u64::from(r) + 1,
            GermKind::E6r2(r) => 6 * u64::from(r) + 2,
            GermKind::J(k, i) => 6 * u64::from(k) - 2 + u64::from(i),
        }
    }

    /// Corank of the curve normal form.
    pub fn corank_curve(&self) -> u32 {
        match *self {
            GermKind::A(1) => 0,
            GermKind::A(_) => 1,
            _ => 2,
        }
    }

    /// Order of the curve normal form at the origin.
    pub fn multiplicity_curve(&self) -> u32 {
        match self {
            GermKind::A(_) => 2,
            _ => 3,
        }
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        !matches!(self, GermKind::J(_, i) if *i > 0)
    }

    /// Weights `(w1, w2)` of a weighted-homogeneous normal form.
    pub fn weights<T: SpectralInt>(&self) -> Result<(Ratio<T>, Ratio<T>)> {
        self.validate()?;
        let (k, third) = (|v: u32| i64::from(v), frac::<T>(1, 3));
        Ok(match *self {
            GermKind::A(n) => (frac(1, k(n) + 1), frac(1, 2)),
            GermKind::D(n) => (frac(k(n) - 2, 2 * k(n) - 2), frac(1, k(n) - 1)),
            GermKind::E6r(r) => (third, frac(1, 3 * k(r) + 1)),
            GermKind::E6r1(r) => (third, frac(2, 6 * k(r) + 3)),
            GermKind::E6r2(r) => (third, frac(1, 3 * k(r) + 2)),
            GermKind::J(n, 0) => (third, frac(1, 3 * k(n))),
            GermKind::J(..) => return Err(Error::NotWeightedHomogeneous(self.to_string())),
        })
    }

    /// Spectrum of the two-variable germ.
    pub fn curve_spectrum<T: SpectralInt>(&self) -> Result<Spectrum<T>> {
        self.validate()?;
        match *self {
            GermKind::J(k, i) if i > 0 => spectra::j_family_spectrum(k, i),
            _ => {
                let (w1, w2) = self.weights()?;
                spectrum_from_weights(&w1, &w2)
            }
        }
    }

    /// Spectrum written out from the closed-form row of each weighted-homogeneous
    /// class. `E_{6r+1}` comes back as the generating-function expansion with
    /// [`E6R1_ROW_NOTE`] attached.
    pub fn table_spectrum<T: SpectralInt>(&self) -> Result<TableRow<T>> {
        self.validate()?;
        spectra::table_row(self)
    }

    /// Every catalog class from `families` whose Milnor number is exactly `mu`.
    pub fn with_milnor(mu: u64, families: &[Family]) -> Vec<GermKind> {
        let mut out = Vec::new();
        let Ok(m) = u32::try_from(mu) else { return out };
        for fam in families {
            match fam {
                Family::A if m >= 1 => out.push(GermKind::A(m)),
                Family::D if m >= 4 => out.push(GermKind::D(m)),
                Family::E if m >= 6 => match m % 6 {
                    0 => out.push(GermKind::E6r(m / 6)),
                    1 => out.push(GermKind::E6r1(m / 6)),
                    2 => out.push(GermKind::E6r2(m / 6)),
                    _ => {}
                },
                Family::J => {
                    let mut k = 2;
                    while 6 * k - 2 <= m {
                        out.push(GermKind::J(k, m + 2 - 6 * k));
                        k += 1;
                    }
                }
                _ => {}
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Every catalog class from `families` with `μ ≤ max_mu`, in increasing order.
    pub fn up_to_milnor(max_mu: u64, families: &[Family]) -> Vec<GermKind> {
        (1..=max_mu).flat_map(|mu| GermKind::with_milnor(mu, families)).collect()
    }

    fn order_key(&self) -> (u64, u8, u32, u32) {
        let (rank, p, q) = match *self {
            GermKind::A(k) => (0, k, 0),
            GermKind::D(k) => (1, k, 0),
            GermKind::E6r(r) => (2, r, 0),
            GermKind::E6r1(r) => (3, r, 0),
            GermKind::E6r2(r) => (4, r, 0),
            GermKind::J(k, i) => (5, k, i),
        };
        (self.milnor_unchecked(), rank, p, q)
    }
}

/// Canonical order: by Milnor number, then family, then parameters.
impl Ord for GermKind {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for GermKind {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compact names `A7`, `D5`, `E6`, `E7`, `E12`, `J2_0`, `J2_4`.
impl fmt::Display for GermKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GermKind::A(k) => write!(f, "A{k}"),
            GermKind::D(k) => write!(f, "D{k}"),
            GermKind::E6r(r) => write!(f, "E{}", 6 * r),
            GermKind::E6r1(r) => write!(f, "E{}", 6 * r + 1),
            GermKind::E6r2(r) => write!(f, "E{}", 6 * r + 2),
            GermKind::J(k, i) => write!(f, "J{k}_{i}"),
        }
    }
}

impl FromStr for GermKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidClass(format!("`{s}` (expected A<k>, D<k>, E<m> or J<k>_<i>)"));
        let number = |t: &str| -> Result<u32> {
            if t.is_empty() || !t.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let kind = match letter {
            'A' => GermKind::A(number(rest)?),
            'D' => GermKind::D(number(rest)?),
            'E' => {
                let m = number(rest)?;
                match (m / 6, m % 6) {
                    (r, 0) => GermKind::E6r(r),
                    (r, 1) => GermKind::E6r1(r),
                    (r, 2) => GermKind::E6r2(r),
                    _ => return Err(Error::InvalidClass(format!("`{s}`: E<m> needs m ≡ 0, 1, 2 mod 6"))),
                }
            }
            'J' => {
                let (k, i) = rest.split_once('_').ok_or_else(bad)?;
                GermKind::J(number(k)?, number(i)?)
            }
            _ => return Err(bad()),
        };
        kind.validate().map_err(|_| Error::InvalidClass(format!("`{s}` has parameters out of range")))?;
        Ok(kind)
    }
}

impl Serialize for GermKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GermKind {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A catalog class placed in `ambient_vars` variables (normal form plus squares).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GermClass {
    pub kind: GermKind,
    pub ambient_vars: u32,
}

impl GermClass {
    pub fn new(kind: GermKind, ambient_vars: u32) -> Self {
        GermClass { kind, ambient_vars }
    }

    pub fn curve(kind: GermKind) -> Self {
        GermClass { kind, ambient_vars: 2 }
    }

    pub fn milnor(&self) -> Result<u64> {
        self.kind.milnor()
    }

    /// Corank of the germ itself; squares do not add to it.
    pub fn corank(&self) -> u32 {
        self.kind.corank_curve()
    }

    /// Spectrum of the normal form in `ambient_vars` variables: the curve
    /// spectrum suspended by `ambient_vars - 2` squares.
    pub fn germ_spectrum<T: SpectralInt>(&self) -> Result<Spectrum<T>> {
        if self.ambient_vars < 2 {
            return Err(Error::InvalidArgument(format!(
                "{} needs at least 2 variables, got {}",
                self.kind, self.ambient_vars
            )));
        }
        Ok(self.kind.curve_spectrum()?.suspend(self.ambient_vars - 2))
    }
}

impl fmt::Display for GermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}
