//! Finiteness bounds: which `(n, d)` can carry a hypersurface with isolated
//! singularities and polar degree `k`.
//!
//! All logarithmic conditions are evaluated as exact integer power
//! comparisons.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::ToPrimitive;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::frac;
use crate::Rational;

/// `ℓ_{n,k}`: the least `ℓ ≥ 0` with `C(n+ℓ, n) > k`.
pub fn ell(n: u32, k: u64) -> u32 {
    let k = BigUint::from(k);
    let n_big = BigUint::from(n);
    (0u32..)
        .find(|&l| binomial(&n_big + BigUint::from(l), n_big.clone()) > k)
        .expect("binomial coefficients are unbounded in ℓ")
}

/// Every hypersurface in `P^n` with isolated singularities and polar degree `k`
/// has degree strictly below `max(2 + ℓ, (n + ℓ)(k + 2)/(n - 1))`, `ℓ = ℓ_{n,k}`.
pub fn degree_bound(n: u32, k: u64) -> Result<Rational> {
    if n < 2 || k < 2 {
        return Err(Error::InvalidArgument(format!("degree bound needs n ≥ 2 and k ≥ 2, got n={n}, k={k}")));
    }
    let l = i64::from(ell(n, k));
    let n = i64::from(n);
    let k = i64::try_from(k).map_err(|_| Error::Overflow(format!("k = {k}")))?;
    let first = Rational::from_integer(BigInt::from(2 + l));
    let second: Rational = frac::<BigInt>(n + l, 1) * frac::<BigInt>(k + 2, n - 1);
    Ok(first.max(second))
}

/// True when polar degree `k ≥ 3` is impossible in `P^n` for all `d ≥ 3`:
/// `n ≥ k` and `n ≥ 5 + 3 log2 k`, the latter checked as `2^{n-5} ≥ k^3`.
pub fn dimension_excluded(n: u32, k: u64) -> Result<bool> {
    if k < 3 {
        return Err(Error::Unsupported(format!(
            "the dimension bound needs k ≥ 3 (got k={k}); use the refined region for k = 2"
        )));
    }
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    if u64::from(n) < k || n < 5 {
        return Ok(false);
    }
    let lhs = BigUint::from(1u8) << (n - 5);
    Ok(lhs >= BigUint::from(k).pow(3))
}

/// `(n, d)` with `n, d ≥ 3` allowed for polar degree 2 by the spectral argument:
/// the second Fermat spectral number `(n+1)/d - 1` must exceed `(n-1)/2 - 7/6`,
/// i.e. `(3(n-1) - 1)(d - 2) < 14`.
pub fn lemma1_region_k2() -> BTreeSet<(u32, u32)> {
    let admissible = |n: u32, d: u32| (3 * (n - 1) - 1) * (d - 2) < 14;
    let mut out = BTreeSet::new();
    // the factor 3(n-1)-1 grows with n and d-2 ≥ 1, so both scans stop
    let mut n = 3;
    while admissible(n, 3) {
        let mut d = 3;
        while admissible(n, d) {
            out.insert((n, d));
            d += 1;
        }
        n += 1;
    }
    out
}

/// `γ_{n,k} = -1 + (n-1)/(k+2)`: a lower bound for the first spectral number
/// at every singular point when `pol = k`.
pub fn alpha1_threshold(n: u32, k: u64) -> Result<Rational> {
    if n < 2 || k < 2 {
        return Err(Error::InvalidArgument(format!("threshold needs n ≥ 2 and k ≥ 2, got n={n}, k={k}")));
    }
    let k = i64::try_from(k).map_err(|_| Error::Overflow(format!("k = {k}")))?;
    Ok(frac::<BigInt>(i64::from(n) - 1, k + 2) - frac::<BigInt>(1, 1))
}

/// Which bound removed a pair from the candidate region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exclusion {
    /// `n ≥ max(k, 5 + 3 log2 k)`.
    Dimension,
    /// `d ≥ degree_bound(n, k)`.
    Degree,
    /// Outside the refined `k = 2` region.
    RefinedK2,
    /// Quadrics have polar degree at most 1.
    Quadric,
}

impl Exclusion {
    pub fn tag(self) -> &'static str {
        match self {
            Exclusion::Dimension => "t:h0",
            Exclusion::Degree => "t:Huh2",
            Exclusion::RefinedK2 => "l:1",
            Exclusion::Quadric => "d=2",
        }
    }
}

pub const DIMENSION_BOUND_NOTE: &str =
    "dimension exclusion uses n >= max(k, 5 + 3*log2(k)); the sharper form 5 + log2(k) is not applied";

/// Finite superset of the `(n, d)` pairs admitting polar degree `k`, with the
/// reason each scanned pair was dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub k: u64,
    pub pairs: BTreeSet<(u32, u32)>,
    pub exclusion_log: BTreeMap<(u32, u32), Exclusion>,
    /// Scanned rectangle `[2, n_max] × [2, d_max]`.
    pub n_max: u32,
    pub d_max: u32,
    pub notes: Vec<&'static str>,
}

impl Region {
    pub fn contains(&self, n: u32, d: u32) -> bool {
        self.pairs.contains(&(n, d))
    }
}

impl Serialize for Region {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Excluded {
            n: u32,
            d: u32,
            by: &'static str,
        }
        let pairs: Vec<[u32; 2]> = self.pairs.iter().map(|&(n, d)| [n, d]).collect();
        let excluded: Vec<Excluded> =
            self.exclusion_log.iter().map(|(&(n, d), e)| Excluded { n, d, by: e.tag() }).collect();
        let mut st = s.serialize_struct("Region", 6)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("pairs", &pairs)?;
        st.serialize_field("excluded", &excluded)?;
        st.serialize_field("n_max", &self.n_max)?;
        st.serialize_field("d_max", &self.d_max)?;
        st.serialize_field("notes", &self.notes)?;
        st.end()
    }
}

/// Candidate region for polar degree `k ≥ 2`.
///
/// For `k ≥ 3` the scanned dimensions run up to the least excluded one (the
/// exclusion is monotone in `n`). For `k = 2` the refined region replaces the
/// dimension bound for `n ≥ 3`, and plane curves keep the degree bound.
pub fn candidate_region(k: u64) -> Result<Region> {
    if k < 2 {
        return Err(Error::Unsupported(format!("candidate regions need k ≥ 2, got {k}")));
    }
    let refined = (k == 2).then(lemma1_region_k2);
    let n_max = match &refined {
        Some(r) => r.iter().map(|&(n, _)| n).max().unwrap_or(2) + 1,
        None => {
            let mut n = 2;
            while !dimension_excluded(n, k)? {
                n += 1;
            }
            n
        }
    };
    let mut d_max = 3u32;
    for n in 2..=n_max {
        let ceil = degree_bound(n, k)?.ceil().to_integer();
        let ceil = ceil.to_u32().ok_or_else(|| Error::Overflow(format!("degree bound {ceil}")))?;
        d_max = d_max.max(ceil);
    }

    let mut pairs = BTreeSet::new();
    let mut log = BTreeMap::new();
    for n in 2..=n_max {
        let bound = degree_bound(n, k)?;
        for d in 2..=d_max {
            let excluded_by = if d == 2 {
                Some(Exclusion::Quadric)
            } else if let (Some(r), true) = (&refined, n >= 3) {
                (!r.contains(&(n, d))).then_some(Exclusion::RefinedK2)
            } else if refined.is_none() && dimension_excluded(n, k)? {
                Some(Exclusion::Dimension)
            } else if Rational::from_integer(BigInt::from(d)) >= bound {
                Some(Exclusion::Degree)
            } else {
                None
            };
            match excluded_by {
                Some(e) => {
                    log.insert((n, d), e);
                }
                None => {
                    pairs.insert((n, d));
                }
            }
        }
    }
    let notes = if refined.is_none() { vec![DIMENSION_BOUND_NOTE] } else { Vec::new() };
    Ok(Region { k, pairs, exclusion_log: log, n_max, d_max, notes })
}
