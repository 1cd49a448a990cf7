//! Spectra as elements of the group ring `Z[Q]`.
//!
//! A [`Spectrum`] is a finite multiplicity function on the rationals. All
//! spectral numbers use one convention: the spectrum of a germ in `n`
//! variables lies in `]-1, n-1[` and is symmetric about `(n-2)/2`. Nothing in
//! this module depends on that convention; it is plain arithmetic.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::iter::Sum;
use std::ops::Bound as RangeBound;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{deserialize_int, fmt_rational, frac, serialize_int, SpectralInt};

/// End point of a window. Rays use the infinite variants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Bound<T: SpectralInt> {
    NegInf,
    Finite(Ratio<T>),
    PosInf,
}

impl<T: SpectralInt> Bound<T> {
    pub fn finite(q: Ratio<T>) -> Self {
        Bound::Finite(q)
    }
}

impl<T: SpectralInt> fmt::Display for Bound<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::PosInf => f.write_str("+inf"),
            Bound::Finite(q) => f.write_str(&fmt_rational(q)),
        }
    }
}

/// The two unit windows used by the semicontinuity inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum WindowKind {
    /// `]a, a+1[`
    #[serde(rename = "open")]
    OpenOpen,
    /// `]a, a+1]`
    #[serde(rename = "half")]
    OpenClosed,
}

impl WindowKind {
    pub fn right_open(self) -> bool {
        matches!(self, WindowKind::OpenOpen)
    }

    pub fn label(self) -> &'static str {
        match self {
            WindowKind::OpenOpen => "open",
            WindowKind::OpenClosed => "half",
        }
    }
}

impl fmt::Display for WindowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Finite sum `Σ n_α (α)` with every `n_α ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Spectrum<T: SpectralInt> {
    entries: BTreeMap<Ratio<T>, u64>,
}

impl<T: SpectralInt> Default for Spectrum<T> {
    fn default() -> Self {
        Spectrum { entries: BTreeMap::new() }
    }
}

impl<T: SpectralInt> Spectrum<T> {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a spectrum from `(α, multiplicity)` pairs, merging repeated
    /// spectral numbers. Zero multiplicities are rejected.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Ratio<T>, u64)>,
    {
        let mut s = Self::empty();
        for (alpha, mult) in pairs {
            if mult == 0 {
                return Err(Error::InvalidArgument(format!(
                    "multiplicity of {} must be positive",
                    fmt_rational(&alpha)
                )));
            }
            s.add(alpha, mult);
        }
        Ok(s)
    }

    /// Shorthand for literal spectra: `(num, den, mult)` triples.
    pub fn from_fractions(triples: &[(i64, i64, u64)]) -> Result<Self> {
        if triples.iter().any(|&(_, d, _)| d == 0) {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Self::from_pairs(triples.iter().map(|&(p, q, m)| (frac(p, q), m)))
    }

    /// Every spectral number with multiplicity one.
    pub fn from_values<I: IntoIterator<Item = Ratio<T>>>(values: I) -> Self {
        let mut s = Self::empty();
        for v in values {
            s.add(v, 1);
        }
        s
    }

    pub fn singleton(alpha: Ratio<T>, mult: u64) -> Self {
        let mut s = Self::empty();
        if mult > 0 {
            s.entries.insert(alpha, mult);
        }
        s
    }

    pub(crate) fn add(&mut self, alpha: Ratio<T>, mult: u64) {
        if mult > 0 {
            *self.entries.entry(alpha).or_insert(0) += mult;
        }
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Ratio<T>, u64> {
        self.entries.iter()
    }

    pub fn multiplicity(&self, alpha: &Ratio<T>) -> u64 {
        self.entries.get(alpha).copied().unwrap_or(0)
    }

    /// Number of distinct spectral numbers.
    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all multiplicities; the Milnor number for the spectrum of a germ.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (alpha, &m) in &other.entries {
            self.add(alpha.clone(), m);
        }
    }

    pub fn shift(&self, q: &Ratio<T>) -> Self {
        Spectrum { entries: self.entries.iter().map(|(a, &m)| (a + q, m)).collect() }
    }

    /// Adds `m` squares of new variables: shift by `m/2`.
    pub fn suspend(&self, m: u32) -> Self {
        if m == 0 {
            return self.clone();
        }
        self.shift(&frac(i64::from(m), 2))
    }

    /// Join of two spectra: the product of the generating sums `Σ n_α t^{α+1}`,
    /// so each pair contributes the spectral number `α + β + 1`.
    pub fn join(&self, other: &Self) -> Self {
        let one = Ratio::<T>::one();
        let mut out = Self::empty();
        for (a, &m) in &self.entries {
            for (b, &k) in &other.entries {
                out.add(a + b + &one, m * k);
            }
        }
        out
    }

    /// Total multiplicity inside the interval between `lower` and `upper`.
    /// The flags say whether each finite end is excluded.
    pub fn deg_window(&self, lower: &Bound<T>, upper: &Bound<T>, left_open: bool, right_open: bool) -> Result<u64> {
        use RangeBound::{Excluded, Included, Unbounded};
        let lo = match lower {
            Bound::NegInf => Unbounded,
            Bound::Finite(a) if left_open => Excluded(a),
            Bound::Finite(a) => Included(a),
            Bound::PosInf => return Err(Error::InvalidArgument("lower end of a window cannot be +inf".into())),
        };
        let hi = match upper {
            Bound::PosInf => Unbounded,
            Bound::Finite(b) if right_open => Excluded(b),
            Bound::Finite(b) => Included(b),
            Bound::NegInf => return Err(Error::InvalidArgument("upper end of a window cannot be -inf".into())),
        };
        if let (Bound::Finite(a), Bound::Finite(b)) = (lower, upper) {
            if a > b {
                return Err(Error::InvalidArgument(format!(
                    "window end points out of order: {} > {}",
                    fmt_rational(a),
                    fmt_rational(b)
                )));
            }
            if a == b {
                return Ok(if left_open || right_open { 0 } else { self.multiplicity(a) });
            }
        }
        Ok(self.entries.range::<Ratio<T>, _>((lo, hi)).map(|(_, &m)| m).sum())
    }

    /// Degree over the unit window starting at `a`.
    pub fn unit_window(&self, a: &Ratio<T>, kind: WindowKind) -> u64 {
        let b = a + Ratio::<T>::one();
        self.deg_window(&Bound::Finite(a.clone()), &Bound::Finite(b), true, kind.right_open())
            .expect("unit window is well formed")
    }

    /// Smallest spectral number.
    pub fn min_spectral(&self) -> Result<&Ratio<T>> {
        self.entries.keys().next().ok_or(Error::EmptySpectrum)
    }

    pub fn max_spectral(&self) -> Result<&Ratio<T>> {
        self.entries.keys().next_back().ok_or(Error::EmptySpectrum)
    }

    /// True iff `n_α = n_{2c-α}` for every `α`.
    pub fn is_symmetric(&self, center: &Ratio<T>) -> bool {
        let two_c = center + center;
        self.entries.iter().all(|(a, &m)| self.multiplicity(&(&two_c - a)) == m)
    }

    /// Spectral numbers strictly below zero, with multiplicities.
    pub fn negative_part(&self) -> Self {
        let zero = Ratio::<T>::zero();
        Spectrum { entries: self.entries.range(..zero).map(|(a, &m)| (a.clone(), m)).collect() }
    }

    /// Re-expresses the spectrum over another integer type.
    pub fn convert<U: SpectralInt>(&self) -> Option<Spectrum<U>> {
        let mut out = Spectrum::<U>::empty();
        for (a, &m) in &self.entries {
            let num = U::from_i128(a.numer().to_i128()?)?;
            let den = U::from_i128(a.denom().to_i128()?)?;
            out.add(Ratio::new(num, den), m);
        }
        Some(out)
    }
}

impl<'a, T: SpectralInt> IntoIterator for &'a Spectrum<T> {
    type Item = (&'a Ratio<T>, &'a u64);
    type IntoIter = btree_map::Iter<'a, Ratio<T>, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

impl<T: SpectralInt> Sum for Spectrum<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut out = Self::empty();
        for s in iter {
            out.add_assign(&s);
        }
        out
    }
}

impl<'a, T: SpectralInt> Sum<&'a Spectrum<T>> for Spectrum<T> {
    fn sum<I: Iterator<Item = &'a Spectrum<T>>>(iter: I) -> Self {
        let mut out = Self::empty();
        for s in iter {
            out.add_assign(s);
        }
        out
    }
}

impl<T: SpectralInt> fmt::Debug for Spectrum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(a, m)| (fmt_rational(a), m))).finish()
    }
}

/// Writes the spectrum as `(2/3) + 5(1) + 10(4/3)`.
impl<T: SpectralInt> fmt::Display for Spectrum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, &m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m == 1 {
                write!(f, "({})", fmt_rational(a))?;
            } else {
                write!(f, "{m}({})", fmt_rational(a))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "")]
struct EntryJson<T: SpectralInt> {
    #[serde(serialize_with = "serialize_int", deserialize_with = "deserialize_int")]
    num: T,
    #[serde(serialize_with = "serialize_int", deserialize_with = "deserialize_int")]
    den: T,
    mult: u64,
}

impl<T: SpectralInt> Serialize for Spectrum<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (a, &m) in &self.entries {
            seq.serialize_element(&EntryJson { num: a.numer().clone(), den: a.denom().clone(), mult: m })?;
        }
        seq.end()
    }
}

impl<'de, T: SpectralInt> Deserialize<'de> for Spectrum<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<EntryJson<T>>::deserialize(d)?;
        if raw.iter().any(|e| e.den.is_zero()) {
            return Err(de::Error::custom("zero denominator"));
        }
        Spectrum::from_pairs(raw.into_iter().map(|e| (Ratio::new(e.num, e.den), e.mult))).map_err(de::Error::custom)
    }
}
