//! Semicontinuity of the spectrum against the Fermat germ.
//!
//! A hypersurface `V ⊂ P^n` of degree `d` deforms (away from a generic
//! hyperplane) to the cone over a generic degree-`d` form, which has the
//! spectrum of `x_1^d + … + x_n^d`. For every real `a` the summed spectrum of
//! the singular points of `V` can then have at most as many spectral numbers in
//! `]a, a+1]` as the Fermat germ, and the same holds for `]a, a+1[` because the
//! deformation has lower weight.

use num_rational::Ratio;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::catalog::fermat_spectrum;
use crate::error::Result;
use crate::polar::Configuration;
use crate::scalar::{frac, SpectralInt};
use crate::spectrum::{Spectrum, WindowKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct Violation<T: SpectralInt> {
    /// Left end of the violated window.
    #[serde(with = "crate::scalar::rational_serde")]
    pub a: Ratio<T>,
    /// Candidate degree over the window.
    pub lhs: u64,
    /// Target degree over the window.
    pub rhs: u64,
    pub kind: WindowKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SemicontinuityReport<T: SpectralInt> {
    pub holds: bool,
    pub violations: Vec<Violation<T>>,
    /// Number of window positions evaluated, over all kinds.
    pub breakpoints_checked: usize,
    pub kinds: Vec<WindowKind>,
}

impl<T: SpectralInt> SemicontinuityReport<T> {
    pub fn merge(mut self, other: Self) -> Self {
        self.violations.extend(other.violations);
        self.breakpoints_checked += other.breakpoints_checked;
        self.kinds.extend(other.kinds);
        self.holds = self.violations.is_empty();
        self
    }

    pub fn failed_kinds(&self) -> Vec<WindowKind> {
        let mut kinds: Vec<_> = self.violations.iter().map(|v| v.kind).collect();
        kinds.sort();
        kinds.dedup();
        kinds
    }
}

/// Positions `a` at which `a ↦ deg_{]a,a+1]}` (or the open variant) takes every
/// value it can take.
///
/// The window count only changes when `a` or `a + 1` crosses a spectral number,
/// so it is constant between consecutive elements of
/// `B = {α, α - 1 : α in either support}`. The returned points are `B` itself,
/// one midpoint in every gap of `B`, and one point beyond each end.
pub fn test_points<T: SpectralInt>(candidate: &Spectrum<T>, target: &Spectrum<T>) -> Vec<Ratio<T>> {
    let one = Ratio::<T>::one();
    let mut breaks: Vec<Ratio<T>> =
        candidate.iter().chain(target.iter()).flat_map(|(alpha, _)| [alpha.clone(), alpha - &one]).collect();
    breaks.sort();
    breaks.dedup();
    let (Some(first), Some(last)) = (breaks.first(), breaks.last()) else {
        return Vec::new();
    };
    let half = frac::<T>(1, 2);
    let mut points = Vec::with_capacity(2 * breaks.len() + 1);
    points.push(first - &one);
    for pair in breaks.windows(2) {
        points.push(pair[0].clone());
        points.push((&pair[0] + &pair[1]) * &half);
    }
    points.push(last.clone());
    points.push(last + &one);
    points
}

/// Checks `deg_W(candidate) ≤ deg_W(target)` for every unit window `W` of the given kind.
pub fn check<T: SpectralInt>(
    candidate: &Spectrum<T>,
    target: &Spectrum<T>,
    kind: WindowKind,
) -> SemicontinuityReport<T> {
    let points = test_points(candidate, target);
    let violations: Vec<Violation<T>> = points
        .iter()
        .filter_map(|a| {
            let lhs = candidate.unit_window(a, kind);
            let rhs = target.unit_window(a, kind);
            (lhs > rhs).then(|| Violation { a: a.clone(), lhs, rhs, kind })
        })
        .collect();
    SemicontinuityReport {
        holds: violations.is_empty(),
        violations,
        breakpoints_checked: points.len(),
        kinds: vec![kind],
    }
}

/// Summed spectrum of the singular points of a configuration.
pub fn candidate_spectrum<T: SpectralInt>(c: &Configuration) -> Result<Spectrum<T>> {
    c.germs().iter().map(|g| g.germ_spectrum::<T>()).sum()
}

/// Runs [`check`] against the Fermat spectrum `(n, d)` with half-open windows,
/// and with open windows as well when `apply_open_variant` is set.
pub fn check_configuration<T: SpectralInt>(
    c: &Configuration,
    apply_open_variant: bool,
) -> Result<SemicontinuityReport<T>> {
    let candidate = candidate_spectrum::<T>(c)?;
    let target = fermat_spectrum::<T>(c.n(), c.d())?;
    let mut report = check(&candidate, &target, WindowKind::OpenClosed);
    if apply_open_variant {
        report = report.merge(check(&candidate, &target, WindowKind::OpenOpen));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{Family, GermKind};
    use crate::scalar::int;
    use crate::spectrum::Bound;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type S = Spectrum<BigInt>;

    fn cfg(n: u32, d: u32, germs: &[&str]) -> Configuration {
        Configuration::parse(n, d, germs).unwrap()
    }

    #[test]
    fn candidate_spectrum_examples() {
        let s: S = candidate_spectrum(&cfg(2, 3, &["A2"])).unwrap();
        assert_eq!(s, S::from_fractions(&[(-1, 6, 1), (1, 6, 1)]).unwrap());
        let s: S = candidate_spectrum(&cfg(2, 4, &["A1", "A3", "A3"])).unwrap();
        let a3: S = "A3".parse::<GermKind>().unwrap().curve_spectrum().unwrap();
        assert_eq!(s, S::from_fractions(&[(0, 1, 1)]).unwrap().sum(&a3).sum(&a3));
        assert_eq!(s.total(), 7);
        assert!(candidate_spectrum::<BigInt>(&cfg(3, 3, &[])).unwrap().is_empty());
    }

    #[test]
    fn check_examples() {
        let target: S = fermat_spectrum(2, 3).unwrap();
        let a2: S = "A2".parse::<GermKind>().unwrap().curve_spectrum().unwrap();
        assert!(check(&a2, &target, WindowKind::OpenClosed).holds);
        let same = check(&target, &target, WindowKind::OpenOpen);
        assert!(same.holds);
        assert!(same.breakpoints_checked > 0);
    }

    #[test]
    fn violations_carry_both_sides() {
        // A_3 + A_1 on a plane cubic: total 4 = (d-1)^2, pol 0
        let r = check_configuration::<BigInt>(&cfg(2, 3, &["A3", "A1"]), true).unwrap();
        assert!(!r.holds);
        for v in &r.violations {
            assert!(v.lhs > v.rhs);
        }
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["holds"], false);
        let kind = json["violations"][0]["kind"].as_str().unwrap();
        assert!(kind == "open" || kind == "half");
        assert!(json["violations"][0]["a"]["den"].is_number());
    }

    #[test]
    fn check_configuration_examples() {
        assert!(check_configuration::<BigInt>(&cfg(2, 3, &["A1", "A1"]), true).unwrap().holds);
        assert!(check_configuration::<BigInt>(&cfg(2, 3, &["A3"]), true).unwrap().holds);
        let r = check_configuration::<BigInt>(&cfg(5, 3, &["J2_0", "J2_0", "J2_0"]), true).unwrap();
        assert!(!r.holds);
        assert!(!r.failed_kinds().is_empty());
        // without the open variant only half-open windows are reported
        let r = check_configuration::<BigInt>(&cfg(5, 3, &["J2_0", "J2_0", "J2_0"]), false).unwrap();
        assert_eq!(r.kinds, vec![WindowKind::OpenClosed]);
        assert!(r.violations.iter().all(|v| v.kind == WindowKind::OpenClosed));
    }

    /// The report names the kind that failed. Open windows can fail while
    /// half-open ones hold; the converse cannot happen (see the property below).
    #[test]
    fn failing_kind_is_recorded() {
        let target = S::from_fractions(&[(0, 1, 1), (1, 1, 1)]).unwrap();
        let cand = S::from_fractions(&[(1, 2, 1)]).unwrap();
        let open = check(&cand, &target, WindowKind::OpenOpen);
        assert!(!open.holds);
        assert_eq!(open.failed_kinds(), vec![WindowKind::OpenOpen]);
        assert_eq!(open.violations[0].a, int(0));
        assert!(check(&cand, &target, WindowKind::OpenClosed).holds);
    }

    fn tiny_spectrum() -> impl Strategy<Value = Spectrum<i64>> {
        prop::collection::vec((-8i64..8, 1i64..5, 1u64..3), 0..5).prop_map(|v| Spectrum::from_fractions(&v).unwrap())
    }

    proptest! {
        /// Dense sampling over a fine grid never finds a violation the finite
        /// test-point scan missed.
        #[test]
        fn scan_agrees_with_dense_sampling(cand in tiny_spectrum(), target in tiny_spectrum()) {
            for kind in [WindowKind::OpenClosed, WindowKind::OpenOpen] {
                let scan = check(&cand, &target, kind).holds;
                // denominators 1..5 have lcm 60; step 1/240 hits every breakpoint and gap
                let dense = (-10 * 240..10 * 240).all(|i| {
                    let a = frac::<i64>(i, 240);
                    cand.unit_window(&a, kind) <= target.unit_window(&a, kind)
                });
                prop_assert_eq!(scan, dense);
            }
        }

        /// A violated half-open window `]a, a+1]` is also violated by `]a+ε, a+1+ε[`.
        #[test]
        fn half_open_failure_implies_open_failure(cand in tiny_spectrum(), target in tiny_spectrum()) {
            if !check(&cand, &target, WindowKind::OpenClosed).holds {
                prop_assert!(!check(&cand, &target, WindowKind::OpenOpen).holds);
            }
        }
    }

    #[test]
    fn unit_windows_imply_rays_on_catalog_configurations() {
        let pool = GermKind::up_to_milnor(12, &Family::ALL);
        let mut seed = 0x2545_f491_4f6c_dd1du64;
        let mut next = |m: usize| {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % m as u64) as usize
        };
        let mut tested = 0;
        while tested < 100 {
            let (n, d) = (2 + next(3) as u32, 3 + next(3) as u32);
            let count = 1 + next(3);
            let c = Configuration::new(n, d, (0..count).map(|_| pool[next(pool.len())])).unwrap();
            if c.polar_degree().is_err() {
                continue;
            }
            tested += 1;
            let r = check_configuration::<BigInt>(&c, false).unwrap();
            if !r.holds {
                continue;
            }
            let cand: S = candidate_spectrum(&c).unwrap();
            let target: S = fermat_spectrum(n, d).unwrap();
            for a in test_points(&cand, &target) {
                let lo = Bound::Finite(a);
                let l = cand.deg_window(&lo, &Bound::PosInf, true, true).unwrap();
                let r = target.deg_window(&lo, &Bound::PosInf, true, true).unwrap();
                assert!(l <= r, "{c}");
            }
        }
    }

    #[test]
    fn empty_inputs_have_no_test_points() {
        assert!(test_points::<BigInt>(&S::empty(), &S::empty()).is_empty());
        let one = S::from_fractions(&[(0, 1, 1)]).unwrap();
        let pts = test_points(&one, &S::empty());
        assert_eq!(pts, vec![int(-2), int(-1), frac(-1, 2), int(0), int(1)]);
    }
}
