//! Exhaustive search for singularity configurations of prescribed polar degree.
//!
//! A hypersurface `V ⊂ P^n` of degree `d` with `pol(V) = k` has singular points
//! whose Milnor numbers add up to `(d-1)^n - k`. The search enumerates every
//! multiset of catalog classes with that total and keeps those passing the
//! necessary conditions:
//!
//! 1. `alpha1`: each germ's smallest spectral number exceeds `-1 + (n-1)/(k+2)`;
//! 2. `corank`: for `n ≥ 3`, a generic hyperplane section has corank at least
//!    `corank - 1` and Milnor number at least `2^{corank of section}`, which
//!    must not exceed `k`, so `2^{corank - 1} ≤ k`;
//! 3. `huh`: the sectional Milnor number bound (see [`huh_inequality_holds`]);
//! 4. `semicontinuity`: the summed spectrum against the Fermat germ.
//!
//! Survivors are candidates only: the filters are necessary conditions.
//!
//! Filters 1-3 act on single germs and shrink the pool of classes before the
//! enumeration starts. Window degrees only grow as germs are added, so a
//! partial multiset that already violates semicontinuity is cut together with
//! all of its completions.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::alpha1_threshold;
use crate::catalog::{fermat_spectrum, Family, GermKind};
use crate::error::{Error, Result};
use crate::polar::{fermat_milnor, huh_inequality_holds, Configuration};
use crate::scalar::{frac, int};
use crate::semicontinuity::check;
use crate::spectrum::WindowKind;
use crate::{Bound, SmallSpectrum, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Filter {
    Alpha1,
    Corank,
    Huh,
    Semicontinuity,
}

impl Filter {
    pub const ALL: [Filter; 4] = [Filter::Alpha1, Filter::Corank, Filter::Huh, Filter::Semicontinuity];

    pub fn name(self) -> &'static str {
        match self {
            Filter::Alpha1 => "alpha1",
            Filter::Corank => "corank",
            Filter::Huh => "huh",
            Filter::Semicontinuity => "semicontinuity",
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Filter::ALL.into_iter().find(|f| f.name() == s.trim()).ok_or_else(|| {
            Error::Parse(format!("unknown filter `{s}` (expected alpha1, corank, huh or semicontinuity)"))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub whitelist: BTreeSet<Family>,
    pub disabled: BTreeSet<Filter>,
    /// Also require the open-window inequalities.
    pub open_variant: bool,
    /// Fan the top-level branches out over the rayon pool.
    pub parallel: bool,
}

impl SearchOptions {
    /// Default options for polar degree `k`: the full A/D/E/J catalog, every
    /// filter, both window kinds. Only `k ≤ 2` has a known list of admissible
    /// singularity types; larger `k` needs [`SearchOptions::with_whitelist`].
    pub fn for_polar_degree(k: u64) -> Result<Self> {
        if k > 2 {
            return Err(Error::Unsupported(format!(
                "no admissible singularity types are known for polar degree {k}; pass a whitelist"
            )));
        }
        Ok(Self::with_whitelist(Family::ALL))
    }

    pub fn with_whitelist<I: IntoIterator<Item = Family>>(families: I) -> Self {
        SearchOptions {
            whitelist: families.into_iter().collect(),
            disabled: BTreeSet::new(),
            open_variant: true,
            parallel: true,
        }
    }

    pub fn without(mut self, filter: Filter) -> Self {
        self.disabled.insert(filter);
        self
    }

    pub fn serial(mut self) -> Self {
        self.parallel = false;
        self
    }

    fn enabled(&self, f: Filter) -> bool {
        !self.disabled.contains(&f)
    }
}

/// Degree of the Fermat spectrum over a named window, for reading alongside
/// the hand computations for cubic threefolds and fourfolds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowDiagnostic {
    pub window: String,
    pub target_degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub n: u32,
    pub d: u32,
    pub k: u64,
    pub target_mu: u64,
    pub whitelist: Vec<Family>,
    pub filters_applied: Vec<Filter>,
    pub open_variant: bool,
    /// Survivors are necessary-condition candidates, never claimed realizable.
    pub status: &'static str,
    pub survivors: Vec<Configuration>,
    /// Multisets (partial or complete) whose spectrum was evaluated.
    pub examined: u64,
    /// Classes removed from the pool by the per-germ filters, and search nodes
    /// cut by semicontinuity.
    pub pruned_by: BTreeMap<String, u64>,
    pub diagnostics: Vec<WindowDiagnostic>,
}

#[derive(Default)]
struct Tally {
    survivors: Vec<Vec<usize>>,
    examined: u64,
    cut: u64,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.survivors.extend(other.survivors);
        self.examined += other.examined;
        self.cut += other.cut;
    }
}

struct Searcher<'a> {
    pool: Vec<(GermKind, u64, SmallSpectrum)>,
    target: SmallSpectrum,
    kinds: Vec<WindowKind>,
    opts: &'a SearchOptions,
}

impl Searcher<'_> {
    /// First pool index at or after `from` whose Milnor number fits in `budget`.
    fn first_fitting(&self, from: usize, budget: u64) -> usize {
        from + self.pool[from..].partition_point(|(_, mu, _)| *mu > budget)
    }

    fn passes(&self, s: &SmallSpectrum) -> bool {
        self.kinds.iter().all(|&kind| check(s, &self.target, kind).holds)
    }

    fn branch(&self, index: usize, budget: u64, partial: &SmallSpectrum, chosen: &mut Vec<usize>, tally: &mut Tally) {
        let (_, mu, spec) = &self.pool[index];
        let spectrum = partial.sum(spec);
        tally.examined += 1;
        if self.opts.enabled(Filter::Semicontinuity) && !self.passes(&spectrum) {
            tally.cut += 1;
            return;
        }
        chosen.push(index);
        let rest = budget - mu;
        if rest == 0 {
            tally.survivors.push(chosen.clone());
        } else {
            let mut next = self.first_fitting(index, rest);
            while next < self.pool.len() {
                self.branch(next, rest, &spectrum, chosen, tally);
                next += 1;
            }
        }
        chosen.pop();
    }

    fn root(&self, index: usize, budget: u64) -> Tally {
        let mut tally = Tally::default();
        self.branch(index, budget, &SmallSpectrum::empty(), &mut Vec::new(), &mut tally);
        tally
    }
}

/// Enumerates every multiset of whitelisted classes in `n` variables with
/// `Σ μ = (d-1)^n - k` and applies the filters in `opts`.
pub fn enumerate_configurations(n: u32, d: u32, k: u64, opts: &SearchOptions) -> Result<SearchReport> {
    if n < 2 || d < 2 {
        return Err(Error::InvalidArgument(format!("search needs n ≥ 2 and d ≥ 2, got n={n}, d={d}")));
    }
    let total = fermat_milnor(n, d)?;
    let target_mu = total.checked_sub(k).ok_or_else(|| {
        Error::InfeasibleParameters(format!("polar degree {k} exceeds (d-1)^n = {total} for n={n}, d={d}"))
    })?;
    let families: Vec<Family> = opts.whitelist.iter().copied().collect();

    let mut filters_applied = Vec::new();
    let alpha_floor = if k >= 2 && opts.enabled(Filter::Alpha1) {
        filters_applied.push(Filter::Alpha1);
        Some(alpha1_threshold(n, k)?)
    } else {
        None
    };
    let corank_active = k >= 2 && n >= 3 && opts.enabled(Filter::Corank);
    if corank_active {
        filters_applied.push(Filter::Corank);
    }
    let huh_active = opts.enabled(Filter::Huh);
    if huh_active {
        filters_applied.push(Filter::Huh);
    }
    if opts.enabled(Filter::Semicontinuity) {
        filters_applied.push(Filter::Semicontinuity);
    }

    let mut pruned_by: BTreeMap<String, u64> = filters_applied.iter().map(|f| (f.name().to_string(), 0)).collect();
    let mut pool = Vec::new();
    for kind in GermKind::up_to_milnor(target_mu, &families).into_iter().rev() {
        let germ = crate::GermClass::new(kind, n);
        let spectrum: Spectrum = germ.germ_spectrum()?;
        let rejected = if alpha_floor.as_ref().is_some_and(|floor| spectrum.min_spectral().is_ok_and(|m| m <= floor)) {
            Some(Filter::Alpha1)
        } else if corank_active && (1u64 << kind.corank_curve().saturating_sub(1)) > k {
            Some(Filter::Corank)
        } else if huh_active && !huh_inequality_holds(&Configuration::new(n, d, [kind])?, k) {
            Some(Filter::Huh)
        } else {
            None
        };
        match rejected {
            Some(f) => *pruned_by.get_mut(f.name()).expect("filter registered") += 1,
            None => pool.push((kind, kind.milnor()?, small(&spectrum)?)),
        }
    }

    let target: Spectrum = fermat_spectrum(n, d)?;
    let diagnostics = diagnostics(n, d, &target);
    let target = small(&target)?;
    let mut kinds = vec![WindowKind::OpenClosed];
    if opts.open_variant {
        kinds.push(WindowKind::OpenOpen);
    }
    let searcher = Searcher { pool, target, kinds, opts };

    let mut tally = Tally::default();
    if target_mu == 0 {
        tally.survivors.push(Vec::new());
    } else {
        let start = searcher.first_fitting(0, target_mu);
        let roots = start..searcher.pool.len();
        let parts: Vec<Tally> = if opts.parallel {
            roots.into_par_iter().map(|i| searcher.root(i, target_mu)).collect()
        } else {
            roots.map(|i| searcher.root(i, target_mu)).collect()
        };
        for part in parts {
            tally.absorb(part);
        }
    }
    if let Some(count) = pruned_by.get_mut(Filter::Semicontinuity.name()) {
        *count = tally.cut;
    }

    let mut survivors = tally
        .survivors
        .iter()
        .map(|idx| Configuration::new(n, d, idx.iter().map(|&i| searcher.pool[i].0)))
        .collect::<Result<Vec<_>>>()?;
    survivors.sort();
    for c in &survivors {
        assert_eq!(c.total_milnor(), target_mu, "survivor {c} has the wrong total Milnor number");
        assert_eq!(c.polar_degree()?, k);
    }

    Ok(SearchReport {
        n,
        d,
        k,
        target_mu,
        whitelist: families,
        filters_applied,
        open_variant: opts.open_variant,
        status: "candidate",
        survivors,
        examined: tally.examined,
        pruned_by,
        diagnostics,
    })
}

fn small(s: &Spectrum) -> Result<SmallSpectrum> {
    s.convert().ok_or_else(|| Error::Overflow(format!("spectrum {s} does not fit in 64-bit rationals")))
}

/// Named window degrees of the target for the cubic threefold and fourfold.
pub fn diagnostics(n: u32, d: u32, target: &Spectrum) -> Vec<WindowDiagnostic> {
    if !matches!((n, d), (5, 3) | (4, 3)) {
        return Vec::new();
    }
    let fin = |p: i64, q: i64| Bound::Finite(frac(p, q));
    let windows: [(&str, Bound, Bound, bool, bool); 4] = [
        ("]1,2[", Bound::Finite(int(1)), Bound::Finite(int(2)), true, true),
        ("]-inf,1[", Bound::NegInf, Bound::Finite(int(1)), true, true),
        ("]-inf,-1/3]", Bound::NegInf, fin(-1, 3), true, false),
        ("]2/3,5/3[", fin(2, 3), fin(5, 3), true, true),
    ];
    windows
        .into_iter()
        .map(|(name, lo, hi, lo_open, hi_open)| WindowDiagnostic {
            window: name.to_string(),
            target_degree: target.deg_window(&lo, &hi, lo_open, hi_open).expect("ordered window"),
        })
        .collect()
}

/// Memoizes searches by `(n, d, k)` with the default options.
#[derive(Default)]
pub struct SearchCache {
    reports: HashMap<(u32, u32, u64), SearchReport>,
}

impl SearchCache {
    pub fn get(&mut self, n: u32, d: u32, k: u64) -> Result<&SearchReport> {
        match self.reports.entry((n, d, k)) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(e) => Ok(e.insert(enumerate_configurations(n, d, k, &SearchOptions::for_polar_degree(k)?)?)),
        }
    }
}
